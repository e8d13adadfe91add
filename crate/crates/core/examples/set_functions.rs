//! Set functions, the Cameron product and the embedding of invariants.
use pgroupoid::polynomial::ratio;
use pgroupoid::relational::setfun::phi_morphism_violation;
use pgroupoid::relational::{cameron_product, chi, is_hereditary, phi_embedding, Equivalence, SetFunction};
use pgroupoid::{fixtures, subset, Monomial, PermutationGroupoid, Result};

fn main() -> Result<()> {
    let ground = subset::full(4);
    let singletons = SetFunction::indicator(ground, |a| subset::size(a) == 1);
    let pairs = cameron_product(&singletons, &singletons);
    println!("singletons * singletons = {pairs}");
    println!("scaled: {}", pairs.scale(&ratio(1, 2)));

    let r = fixtures::finite("chain5")?;
    let iso = Equivalence::isomorphism(&r);
    println!("isomorphism of induced chains is hereditary: {}", is_hereditary(&iso, r.ground(), 3));
    println!("ordered splittings of a pair into two points, inside 4 points: {}", chi(&Equivalence::cardinality(), 0b0001, 0b0010, 0b0011, ground));

    let g = PermutationGroupoid::increasing(2)?;
    println!("phi(x1 x2^2) = {}", phi_embedding(&g, &Monomial::new(vec![1, 2]), 3)?);
    println!("phi is multiplicative: {}", phi_morphism_violation(&g, 3)?.is_none());
    Ok(())
}
