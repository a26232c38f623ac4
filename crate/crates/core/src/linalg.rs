//! Exact linear algebra over [`Field`]: dense echelon forms for small systems and
//! sparse rank computation for Koszul differentials.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::polyring::{Field, Matrix, Scalar};

/// Reduced row echelon form in place; returns pivot columns.
pub fn row_reduce(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let t = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    row_reduce(&mut a).len()
}

/// Basis of `{v : m v = 0}`.
pub fn nullspace(m: &Matrix, cols: usize, field: Field) -> Vec<Vec<Scalar>> {
    let mut a = m.clone();
    let pivots = row_reduce(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); cols];
            v[f] = field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&a[r][f];
            }
            v
        })
        .collect()
}

pub fn inverse(m: &Matrix, field: Field) -> Result<Matrix> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: m.iter().map(|r| r.len()).find(|&l| l != n).unwrap_or(n),
        });
    }
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::SingularMatrix);
    }
    Ok(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn identity(n: usize, field: Field) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect())
        .collect()
}

/// Sparse matrix stored by rows: each row maps column -> nonzero entry.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub rows: Vec<BTreeMap<usize, Scalar>>,
    pub ncols: usize,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> SparseMatrix {
        SparseMatrix {
            rows: Vec::new(),
            ncols,
        }
    }

    pub fn push_row(&mut self, row: BTreeMap<usize, Scalar>) {
        debug_assert!(row.keys().all(|&c| c < self.ncols));
        self.rows.push(row);
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Rank mod `p` when every entry is `p`-integral.
    pub(crate) fn rank_mod(&self, p: u32) -> Option<usize> {
        let mut reduced = SparseMatrix::new(self.ncols);
        for row in &self.rows {
            let mut r = BTreeMap::new();
            for (&c, v) in row {
                let x = v.reduce_mod(p)?;
                if !x.is_zero() {
                    r.insert(c, x);
                }
            }
            reduced.push_row(r);
        }
        Some(reduced.rank_exact())
    }

    /// Exact rank. Over the rationals a rank mod a large prime that is already
    /// maximal certifies the answer (reduction can only lose rank); otherwise
    /// the elimination runs over the rationals.
    pub fn rank(&self) -> usize {
        let bound = self.nrows().min(self.ncols);
        if bound == 0 {
            return 0;
        }
        let is_rational = self
            .rows
            .iter()
            .flat_map(|r| r.values())
            .next()
            .is_some_and(|v| matches!(v, Scalar::Rational(_)));
        if is_rational {
            if let Some(r) = self.rank_mod(crate::betti::SCREEN_PRIME) {
                if r == bound {
                    return r;
                }
            }
        }
        self.rank_exact()
    }

    /// Gaussian elimination with a Markowitz-style pivot choice
    /// (shortest row, then shortest column among its entries).
    pub fn rank_exact(&self) -> usize {
        let mut rows: Vec<BTreeMap<usize, Scalar>> =
            self.rows.iter().filter(|r| !r.is_empty()).cloned().collect();
        let mut rank = 0;
        while !rows.is_empty() {
            let mut col_count: HashMap<usize, usize> = HashMap::new();
            for r in &rows {
                for &c in r.keys() {
                    *col_count.entry(c).or_default() += 1;
                }
            }
            let (pi, _) = rows
                .iter()
                .enumerate()
                .min_by_key(|(i, r)| (r.len(), *i))
                .unwrap();
            let prow = rows.swap_remove(pi);
            let (&pc, _) = prow
                .iter()
                .min_by_key(|(c, _)| (col_count[c], **c))
                .unwrap();
            let pinv = prow[&pc].inv().unwrap();
            rank += 1;
            for r in rows.iter_mut() {
                let Some(f) = r.get(&pc).cloned() else {
                    continue;
                };
                let factor = &f * &pinv;
                for (c, v) in &prow {
                    let t = v * &factor;
                    let nv = match r.get(c) {
                        Some(old) => old - &t,
                        None => -t,
                    };
                    if nv.is_zero() {
                        r.remove(c);
                    } else {
                        r.insert(*c, nv);
                    }
                }
            }
            rows.retain(|r| !r.is_empty());
        }
        rank
    }
}
