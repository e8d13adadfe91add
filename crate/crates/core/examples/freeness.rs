//! Freeness of invariant rings over symmetric polynomials.
use pgroupoid::fixtures::format_matrix;
use pgroupoid::module::{chain_generators, incidence_matrix_freeness, search_free_family, truncated_freeness, FamilySearch};
use pgroupoid::{fixtures, PermutationGroupoid, Result};

fn main() -> Result<()> {
    let g = fixtures::groupoid("example.nonCM.groupoid")?;
    let report = truncated_freeness(&g, 6);
    println!("non-CM: generators {:?} in degrees {:?}", report.generators, report.generator_degrees);
    println!("        first syzygy in degree {:?}", report.first_syzygy_degree);

    let qsym = PermutationGroupoid::increasing(2)?;
    println!("QSym_2 has {} chain generators", chain_generators(&qsym).len());
    if let FamilySearch::Found(family) = search_free_family(&qsym) {
        let incidence = incidence_matrix_freeness(&qsym, &family)?;
        println!("QSym_2 incidence matrix:\n{}", format_matrix(&incidence.matrix));
        println!("determinant {}", incidence.determinant);
    }

    match search_free_family(&PermutationGroupoid::increasing(3)?) {
        FamilySearch::Found(f) => println!("QSym_3 basis degrees {:?}", f.iter().map(|c| c.degree()).collect::<Vec<_>>()),
        other => println!("QSym_3: {other:?}"),
    }
    Ok(())
}
