//! Canonical monomorphic decomposition and the groupoid of local isomorphisms.
use pgroupoid::relational::{canonical_decomposition, local_isomorphisms, to_relational_structure};
use pgroupoid::{fixtures, subset, PermutationGroupoid, Result};

fn main() -> Result<()> {
    for (name, r) in fixtures::all_finite() {
        let d = canonical_decomposition(&r)?;
        let blocks: Vec<Vec<&str>> =
            d.blocks().iter().map(|&b| subset::points(b).map(|p| r.labels()[p].as_str()).collect()).collect();
        println!("{name}: {blocks:?}");
    }
    let g = PermutationGroupoid::increasing(3)?;
    let r = to_relational_structure(&g)?;
    println!("increasing groupoid as {} relations; round trip exact: {}", r.relations().len(), local_isomorphisms(&r)? == g);
    Ok(())
}
