//! Orbits of monomials under a groupoid and products in the orbit basis.
use pgroupoid::orbits::{count_orbits, product_in_orbit_basis, orbit, orbits_of_degree_with_order};
use pgroupoid::{fixtures, Monomial, Result, TermOrder};

fn main() -> Result<()> {
    let g = fixtures::groupoid("example.nonCM.groupoid")?;
    for n in 0..=4 {
        println!("degree {n}: {} orbits", count_orbits(&g, n));
    }
    for o in orbits_of_degree_with_order(&g, 2, &TermOrder::shape()) {
        println!("  leading {} with {} members", o.leading(), o.len());
    }
    let a = orbit(&g, &Monomial::var(0)).orbit_sum();
    let b = orbit(&g, &Monomial::var(2)).orbit_sum();
    println!("o(x1) * o(x3) = {}", &a * &b);
    for (o, c) in product_in_orbit_basis(&g, &a, &b)? {
        println!("  {c} * o({})", o.leading());
    }
    Ok(())
}
