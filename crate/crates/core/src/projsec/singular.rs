//! Jacobian criteria.

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::linalg;
use crate::polyring::{Polynomial, RingExt, Scalar};

fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    match m.len() {
        1 => m[0][0].clone(),
        2 => m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0])),
        k => {
            let mut acc = m[0][0].ring().zero();
            for c in 0..k {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = m[0][c].mul(&determinant(&minor));
                acc = if c % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `I + (c × c minors of the Jacobian)`, saturated, `c` the codimension of `V(I)`.
pub fn singular_locus(ideal: &Ideal) -> Result<Ideal> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let data = ideal.hilbert()?;
    let c = n - data.krull_dim;
    if c == 0 {
        return Ok(Ideal::unit(ring));
    }
    let gens = ideal.minimalized()?.gens().to_vec();
    if gens.len() < c {
        return Err(Error::Inconsistent("fewer generators than the codimension".into()));
    }
    let jac: Vec<Vec<Polynomial>> = gens.iter().map(|g| (0..n).map(|k| g.derivative(k)).collect()).collect();
    let mut minors = Vec::new();
    for rows in subsets(gens.len(), c) {
        for cols in subsets(n, c) {
            let m: Vec<Vec<Polynomial>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| jac[i][j].clone()).collect())
                .collect();
            let d = determinant(&m);
            if !d.is_zero() {
                minors.push(d);
            }
        }
    }
    ideal.with_generators(&minors)?.saturate_irrelevant()
}

/// Rank of the Jacobian matrix of the generators at a point.
pub fn jacobian_rank_at(ideal: &Ideal, point: &[Scalar]) -> Result<usize> {
    let n = ideal.ring().nvars();
    let rows = ideal
        .gens()
        .iter()
        .map(|g| (0..n).map(|k| g.derivative(k).evaluate(point)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(linalg::rank(&rows))
}

/// Whether `V(I)` is singular at a point lying on it: the Jacobian rank is
/// below the codimension.
pub fn is_singular_point(ideal: &Ideal, point: &[Scalar]) -> Result<bool> {
    let data = ideal.hilbert()?;
    let c = ideal.ring().nvars() - data.krull_dim;
    Ok(jacobian_rank_at(ideal, point)? < c)
}
