//! Exact scalars, monomials, monomial orders and sparse polynomials.

mod file;
mod monomial;
mod parse;
mod poly;
mod scalar;

use std::sync::Arc;

pub use file::IdealFile;
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_poly;
pub use poly::{Polynomial, PolynomialRing, RingExt, Term};
pub use scalar::{Field, Fp, Scalar, DEFAULT_PRIME};


use crate::error::{Error, Result};

/// A square matrix of scalars, row major.
pub type Matrix = Vec<Vec<Scalar>>;

/// The linear forms `sum_j m[i][j] * x_j` for each row `i`.
pub fn linear_forms(ring: &Arc<PolynomialRing>, m: &Matrix) -> Result<Vec<Polynomial>> {
    let n = ring.nvars();
    if m.len() != n || m.iter().any(|row| row.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: m.len(),
        });
    }
    Ok(m
        .iter()
        .map(|row| {
            let terms = row
                .iter()
                .enumerate()
                .map(|(j, c)| Term {
                    mono: Monomial::var(n, j),
                    coeff: c.clone(),
                })
                .collect();
            Polynomial::from_terms(ring.clone(), MonomialOrder::Grevlex, terms)
        })
        .collect())
}

/// `f(M x)`: substitutes `x_i -> sum_j M[i][j] x_j`.
pub fn substitute_linear(f: &Polynomial, m: &Matrix) -> Result<Polynomial> {
    let forms = linear_forms(f.ring(), m)?;
    Ok(f.compose(&forms).reorder(f.order()))
}
