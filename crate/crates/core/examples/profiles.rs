//! Profiles of relational structures built from monomorphic components.
use pgroupoid::relational::layered::profile_values;
use pgroupoid::relational::{profile, profile_series, trace_classes};
use pgroupoid::{fixtures, Result};

fn main() -> Result<()> {
    for (name, l) in fixtures::all_layered() {
        println!("{name}: {:?}", profile_values(&l, 8));
        println!("    {}", profile_series(&l, 10)?);
    }
    let cliques = fixtures::layered("two_cliques")?;
    for c in trace_classes(&cliques, 3) {
        println!("size 3 class {} with {} traces", c.leading, c.members.len());
    }
    let r = fixtures::finite("two_cliques_k5")?;
    let values: Vec<usize> = (0..=r.size()).map(|n| profile(&r, n)).collect::<Result<_>>()?;
    println!("finite two cliques: {values:?}");
    Ok(())
}
