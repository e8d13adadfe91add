//! Hilbert series of invariant rings as exact rational fractions.
use pgroupoid::series::{hilbert_series, nonnegativity_search, quasi_polynomial, NonnegativityOutcome, DEFAULT_MARGIN};
use pgroupoid::{fixtures, PermutationGroupoid, Result};

fn main() -> Result<()> {
    let sym3 = PermutationGroupoid::symmetric(3)?;
    println!("S3:      {}", hilbert_series(&sym3, &[1, 2, 3], DEFAULT_MARGIN)?);

    let g = fixtures::groupoid("example.nonCM.groupoid")?;
    let s = hilbert_series(&g, &[1, 2, 3], DEFAULT_MARGIN)?;
    println!("non-CM:  {s}");
    println!("         {}", quasi_polynomial(&s)?);
    match nonnegativity_search(&s, 3, 8) {
        NonnegativityOutcome::Found(t) => println!("nonnegative form: {t}"),
        NonnegativityOutcome::Exhausted { tried, exact } => {
            println!("no nonnegative numerator among {tried} denominators ({exact} exact)")
        }
    }

    let qsym = PermutationGroupoid::increasing(3)?;
    println!("QSym_3:  {}", hilbert_series(&qsym, &[1, 2, 3], DEFAULT_MARGIN)?);
    Ok(())
}
