//! Generate a permutation groupoid from local bijections and inspect it.
use pgroupoid::{subset, LocalBijection, PermutationGroupoid, Result};

fn main() -> Result<()> {
    // the single partial map 1 -> 2 on three points
    let g = PermutationGroupoid::close(3, &[LocalBijection::new([(0, 1)])?])?;
    println!("{} elements:", g.len());
    for f in g.elements() {
        println!("  {}", f.display(g.labels()));
    }
    println!("comes from a group: {}", g.comes_from_group());
    println!("transitive components: {:?}", g.transitive_components().iter().map(|&c| subset::points(c).collect::<Vec<_>>()).collect::<Vec<_>>());

    let qsym = PermutationGroupoid::increasing(3)?;
    println!("increasing maps on 3 points: {} elements", qsym.len());
    let restricted = qsym.restrict(subset::from_points([0, 2]));
    println!("restricted to {{1,3}}: {} elements", restricted.len());
    Ok(())
}
