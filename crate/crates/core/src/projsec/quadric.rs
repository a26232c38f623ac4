//! Classification of a scheme as a quadric in its linear span.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{linear_coefficients, Ideal};
use crate::linalg;
use crate::polyring::{MonomialOrder, Polynomial, PolynomialRing, RingExt, Scalar};

/// A quadric hypersurface `Q ⊂ P^m` up to linear change of coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadricClass {
    /// Dimension of the linear span.
    pub span_dim: i64,
    /// Rank of the quadratic form after diagonalization.
    pub rank: usize,
    pub smooth: bool,
    pub kind: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum QuadricVerdict {
    Quadric(QuadricClass),
    NotAQuadric { span_dim: i64, reason: String },
}

impl QuadricVerdict {
    pub fn quadric(&self) -> Option<&QuadricClass> {
        match self {
            QuadricVerdict::Quadric(c) => Some(c),
            QuadricVerdict::NotAQuadric { .. } => None,
        }
    }
}

fn kind_name(m: i64, rank: usize) -> String {
    let smooth = rank as i64 == m + 1;
    match (m, rank) {
        (1, 2) => "pair of points".into(),
        (1, 1) => "double point".into(),
        (2, 3) => "smooth conic".into(),
        (2, 2) => "pair of lines".into(),
        (2, 1) => "double line".into(),
        (3, 4) => "smooth quadric surface".into(),
        (3, 3) => "quadric cone".into(),
        (3, 2) => "pair of planes".into(),
        (_, 1) => "double hyperplane".into(),
        _ if smooth => format!("smooth quadric in P^{m}"),
        _ => format!("quadric cone of rank {rank} in P^{m}"),
    }
}

/// Symmetric matrix of a quadratic form (characteristic other than 2).
pub fn gram_matrix(q: &Polynomial) -> Result<Vec<Vec<Scalar>>> {
    let field = q.field();
    if field.characteristic() == 2 {
        return Err(Error::InvalidField("characteristic 2 is not supported".into()));
    }
    let n = q.ring().nvars();
    let half = field.one().div(&field.from_i64(2)).unwrap();
    let mut a = vec![vec![field.zero(); n]; n];
    for t in q.terms() {
        let idx: Vec<usize> = (0..n).flat_map(|k| std::iter::repeat_n(k, t.mono.exp(k) as usize)).collect();
        match idx[..] {
            [i, j] if i == j => a[i][i] = t.coeff.clone(),
            [i, j] => {
                let h = &t.coeff * &half;
                a[i][j] = h.clone();
                a[j][i] = h;
            }
            _ => return Err(Error::invalid("not a quadratic form")),
        }
    }
    Ok(a)
}

/// Restricts a saturated ideal to its linear span and, when the residual
/// ideal is generated by one quadric, diagonalizes it.
pub fn classify_quadric(sigma: &Ideal) -> Result<QuadricVerdict> {
    if sigma.is_unit()? {
        return Err(Error::invalid("the scheme is empty"));
    }
    let ring = sigma.ring();
    let field = ring.field();
    let n = ring.nvars();
    let linear = sigma.linear_part()?;
    let m = (n - linear.len()) as i64 - 1;
    if m < 1 {
        return Ok(QuadricVerdict::NotAQuadric {
            span_dim: m,
            reason: "the span is a point".into(),
        });
    }
    let rows: Vec<Vec<Scalar>> = linear.iter().map(|f| linear_coefficients(f).unwrap()).collect();
    let kernel = linalg::nullspace(&rows, n, field);
    let span = PolynomialRing::with_prefix("u", kernel.len(), field);
    let images: Vec<Polynomial> = (0..n)
        .map(|i| {
            kernel
                .iter()
                .enumerate()
                .fold(span.zero(), |acc, (j, v)| acc.add(&span.var(j).scale(&v[i])))
        })
        .collect();
    let restricted = sigma.substitute(&images)?.saturate_irrelevant()?;
    let basis = restricted.groebner_basis(MonomialOrder::Grevlex)?;
    match &basis[..] {
        [q] if q.degree() == Some(2) => {
            let rank = linalg::rank(&gram_matrix(q)?);
            Ok(QuadricVerdict::Quadric(QuadricClass {
                span_dim: m,
                rank,
                smooth: rank as i64 == m + 1,
                kind: kind_name(m, rank),
            }))
        }
        _ => Ok(QuadricVerdict::NotAQuadric {
            span_dim: m,
            reason: format!("the ideal in the span has {} basis elements", basis.len()),
        }),
    }
}
