pub mod error;
pub mod groupoid;
pub mod subset;

pub use error::{Error, Result};
pub use groupoid::{LocalBijection, PermutationGroupoid};
pub mod polynomial;

pub use polynomial::{Monomial, Polynomial, Rational, TermOrder};
pub mod algebra;
pub mod linalg;
pub mod orbits;
pub mod reynolds;
pub mod series;
pub mod module;
pub mod relational;
pub mod io;
pub mod fixtures;
pub mod cli;
