//! Initial monomials of invariant rings and stability under operators.
use pgroupoid::module::{derivation_stable, initial_monoid_explorer, sagbi_finite, steenrod_stable};
use pgroupoid::{PermutationGroupoid, Result, TermOrder};

fn main() -> Result<()> {
    for (name, g) in [("S2", PermutationGroupoid::symmetric(2)?), ("QSym_2", PermutationGroupoid::increasing(2)?)] {
        let report = initial_monoid_explorer(&g, &TermOrder::lex(), 5);
        let gens: Vec<String> = report.generators.iter().map(|m| m.to_string()).collect();
        println!("{name}: finite SAGBI basis {}, indecomposable up to degree 5: {}", sagbi_finite(&g), gens.join(", "));
    }
    let g = PermutationGroupoid::increasing(3)?;
    println!("QSym_3 stable under the derivation: {}", derivation_stable(&g, 4).holds);
    println!("QSym_3 stable under Steenrod square 1: {}", steenrod_stable(&g, 1, 4).holds);
    Ok(())
}
