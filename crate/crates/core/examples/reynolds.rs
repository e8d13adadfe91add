//! The Reynolds operator of a groupoid and its failure to be Sym-linear.
use pgroupoid::reynolds::{reynolds, reynolds_is_sym_morphism};
use pgroupoid::{fixtures, Polynomial, Result};

fn main() -> Result<()> {
    let g = fixtures::groupoid("example.nonCM.groupoid")?;
    let r = reynolds(&g);
    for (f, c) in r.element().terms() {
        println!("{c} gr({})", f.display(g.labels()));
    }
    let p = Polynomial::parse("x1^2*x3")?;
    println!("R({p}) = {}", r.apply(&p));
    let check = reynolds_is_sym_morphism(&g, 3);
    println!("Sym-module morphism: {} {:?}", check.holds, check.witness);
    Ok(())
}
