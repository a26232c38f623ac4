//! Exact computer algebra for linear projections of projective varieties:
//! Gröbner bases, Hilbert data, graded Betti tables, secant loci and secant
//! stratifications over `QQ` and prime fields.

pub mod betti;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod polyring;
pub mod projsec;
pub mod stratify;
pub mod varieties;

pub use betti::{graded_betti, BettiTable};
pub use error::{Error, Result};
pub use groebner::Ideal;
pub use hilbert::HilbertData;
pub use polyring::{Field, Polynomial, PolynomialRing, Scalar};
pub use varieties::Variety;
