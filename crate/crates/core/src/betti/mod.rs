//! Graded Betti numbers of `R/I` as dimensions of Koszul homology, and the
//! regularity, depth and `N_p` predicates read off a Betti table.

mod koszul;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{sub_ring, Ideal};
use crate::hilbert::HilbertData;
use crate::linalg::SparseMatrix;
use crate::polyring::{Field, Monomial, MonomialOrder, Polynomial, PolynomialRing, RingExt, Term};

use koszul::Quotient;

/// Large prime used for rank screening over the rationals.
pub const SCREEN_PRIME: u32 = 2_147_483_647;

/// Largest Koszul chain space built before giving up.
pub const MAX_CHAIN_DIM: usize = 400_000;

/// `β_{i,j}`: `F_i = ⊕ R(-i-j)^{β_{i,j}}` in a minimal free resolution of `R/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    /// Number of variables of the ambient ring (`r + 1`).
    pub nvars: usize,
    entries: BTreeMap<(usize, usize), u64>,
    /// Rows `0..=j_max` have been computed.
    pub j_max: usize,
    /// No nonzero entry lies outside the computed window.
    pub complete: bool,
    /// Number of linear nonzero-divisors factored out before the Koszul computation.
    pub reductions: usize,
}

impl BettiTable {
    pub fn from_entries(nvars: usize, entries: impl IntoIterator<Item = ((usize, usize), u64)>) -> BettiTable {
        let entries: BTreeMap<_, _> = entries.into_iter().filter(|(_, v)| *v != 0).collect();
        let j_max = entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
        BettiTable {
            nvars,
            entries,
            j_max,
            complete: true,
            reductions: 0,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((i, j), β_{i,j})`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Nonzero entries with `i >= 1`, i.e. those of the ideal.
    pub fn ideal_entries(&self) -> BTreeMap<(usize, usize), u64> {
        self.entries
            .iter()
            .filter(|((i, _), _)| *i >= 1)
            .map(|(&k, &v)| (k, v))
            .collect()
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Least `m` with `β_{i,j} = 0` for all `i >= 1`, `j >= m`.
    pub fn regularity(&self) -> usize {
        self.entries
            .keys()
            .filter(|&&(i, _)| i >= 1)
            .map(|&(_, j)| j + 1)
            .max()
            .unwrap_or(1)
    }

    /// `Σ_i (-1)^i β_{i, d-i}`: coefficient of `t^d` in the K-polynomial.
    pub fn alternating_sum(&self, d: usize) -> i64 {
        self.entries
            .iter()
            .filter(|((i, j), _)| i + j == d)
            .map(|(&(i, _), &v)| if i % 2 == 0 { v as i64 } else { -(v as i64) })
            .sum()
    }

    /// The Euler identity against a Hilbert numerator, over the computed window.
    pub fn euler_identity_holds(&self, numerator: &[i64]) -> bool {
        let top = (self.j_max + self.nvars).max(numerator.len());
        (0..=top).all(|d| self.alternating_sum(d) == numerator.get(d).copied().unwrap_or(0))
    }

    /// Macaulay-style grid: columns are `i`, rows are `j`.
    pub fn to_grid(&self) -> String {
        let pd = self.projective_dimension();
        let rows = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let width = self
            .entries
            .values()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(pd.to_string().len())
            + 1;
        let mut out = String::new();
        out.push_str(&format!("{:>7}", ""));
        for i in 0..=pd {
            out.push_str(&format!("{:>width$}", i));
        }
        out.push('\n');
        out.push_str("total:");
        out.push(' ');
        for i in 0..=pd {
            let t: u64 = self.entries.iter().filter(|((a, _), _)| *a == i).map(|(_, v)| v).sum();
            out.push_str(&format!("{:>width$}", t));
        }
        out.push('\n');
        for j in 0..=rows {
            out.push_str(&format!("{:>5}: ", j));
            for i in 0..=pd {
                let v = self.get(i, j);
                let cell = if v == 0 { ".".to_string() } else { v.to_string() };
                out.push_str(&format!("{:>width$}", cell));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "nvars": self.nvars,
            "entries": self.entries.iter().map(|(&(i, j), &v)| [i as u64, j as u64, v]).collect::<Vec<_>>(),
            "j_max": self.j_max,
            "complete": self.complete,
        })
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_grid())
    }
}

/// Largest `p` with property `N_{d,p}`; `None` when it holds for every `p`.
pub fn max_ndp(table: &BettiTable, d: usize) -> Option<usize> {
    let first_bad = table
        .entries
        .keys()
        .filter(|&&(i, j)| i >= 1 && j >= d)
        .map(|&(i, _)| i)
        .min();
    first_bad.map(|i| i - 1)
}

/// Invariants read off a complete Betti table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionPredicates {
    pub regularity: usize,
    pub projective_dimension: usize,
    pub depth: usize,
    /// Largest `p` with `β_{i,j} = 0` for `1 <= i <= p`, `j >= 2`; `None` for all `p`.
    pub max_np: Option<usize>,
    /// `d -> largest p with N_{d,p}` for `d = 2..=regularity`.
    pub max_ndp: BTreeMap<usize, Option<usize>>,
    pub acm: bool,
}

impl ResolutionPredicates {
    pub fn satisfies_np(&self, p: usize) -> bool {
        self.max_np.is_none_or(|m| p <= m)
    }

    pub fn satisfies_ndp(&self, d: usize, p: usize) -> bool {
        match self.max_ndp.get(&d) {
            Some(m) => m.is_none_or(|m| p <= m),
            None => true,
        }
    }
}

/// Regularity, depth, `N_p` and `N_{d,p}` of `X ⊂ P^r` of dimension `n`.
pub fn table_predicates(table: &BettiTable, r: usize, n: usize) -> Result<ResolutionPredicates> {
    if !table.complete {
        return Err(Error::IncompleteTable);
    }
    let pd = table.projective_dimension();
    let reg = table.regularity();
    let depth = r + 1 - pd.min(r + 1);
    let ndp = (2..=reg.max(2)).map(|d| (d, max_ndp(table, d))).collect();
    Ok(ResolutionPredicates {
        regularity: reg,
        projective_dimension: pd,
        depth,
        max_np: max_ndp(table, 2),
        max_ndp: ndp,
        acm: pd == r - n,
    })
}

fn drop_last_variable(g: &Polynomial, target: &Arc<PolynomialRing>) -> Polynomial {
    let n = g.ring().nvars();
    let terms = g
        .terms()
        .iter()
        .filter(|t| t.mono.exp(n - 1) == 0)
        .map(|t| Term {
            mono: Monomial::new(&t.mono.exps()[..n - 1]),
            coeff: t.coeff.clone(),
        })
        .collect();
    Polynomial::from_terms(target.clone(), MonomialOrder::Grevlex, terms)
}

fn last_is_nonzerodivisor(basis: &[Polynomial]) -> bool {
    basis.iter().all(|g| {
        let lm = g.leading_monomial().unwrap();
        lm.exp(lm.nvars() - 1) == 0
    })
}

const NZD_SEED: u64 = 0xb3771;

/// Quotients out linear nonzero-divisors while the last variable of a grevlex
/// basis certifies one (no leading monomial involves it); the Betti numbers of
/// `R/I` equal those of the reduction.
fn reduce_by_nonzerodivisors(ideal: &Ideal, krull_dim: usize) -> Result<(Vec<Polynomial>, usize, usize)> {
    let mut cur = ideal.clone();
    let mut basis: Vec<Polynomial> = cur.groebner_basis(MonomialOrder::Grevlex)?.to_vec();
    let mut dim = krull_dim;
    let mut reductions = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(NZD_SEED);
    while dim > 0 && cur.ring().nvars() > 2 {
        let n = cur.ring().nvars();
        if !last_is_nonzerodivisor(&basis) {
            let mut found = None;
            for _ in 0..2 {
                let coeffs: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
                if coeffs[n - 1] == 0 {
                    continue;
                }
                let field = cur.field();
                let h = (0..n).fold(cur.ring().zero(), |acc, k| {
                    acc.add(&cur.ring().var(k).scale(&field.from_i64(coeffs[k])))
                });
                let moved = cur.move_to_last(&h)?;
                let b = moved.groebner_basis(MonomialOrder::Grevlex)?.to_vec();
                if last_is_nonzerodivisor(&b) {
                    found = Some((moved, b));
                    break;
                }
            }
            match found {
                Some((m, b)) => {
                    cur = m;
                    basis = b;
                }
                None => break,
            }
        }
        let target = sub_ring(cur.ring(), n - 1)?;
        let restricted: Vec<Polynomial> = basis
            .iter()
            .map(|g| drop_last_variable(g, &target))
            .filter(|g| !g.is_zero())
            .collect();
        cur = Ideal::new(&target, restricted)?;
        basis = cur.groebner_basis(MonomialOrder::Grevlex)?.to_vec();
        dim -= 1;
        reductions += 1;
    }
    Ok((basis, cur.ring().nvars(), reductions))
}

/// Ranks of the Koszul differentials `∂_i : C_i -> C_{i-1}` in internal
/// degree `d`, for `i = 1..=nvars`. Over the rationals, ranks mod a large
/// prime are accepted when they are provably exact (full rank, or exactness
/// mod p at an adjacent spot, since reduction can only lower ranks while
/// `rank ∂_i + rank ∂_{i+1} <= dim C_i`); the rest are recomputed exactly.
fn degree_ranks(q: &mut Quotient, d: usize, field: Field) -> Result<Vec<usize>> {
    let n = q.nvars();
    let top = n.min(d);
    let dims: Vec<usize> = (0..=n + 1).map(|i| q.chain_dim(i, d)).collect();
    if dims.iter().any(|&c| c > MAX_CHAIN_DIM) {
        return Err(Error::SizeCap(format!("Koszul chain space in degree {d} is too large")));
    }
    let mut mats: Vec<Option<SparseMatrix>> = vec![None; n + 2];
    for i in 1..=top {
        if dims[i] > 0 && dims[i - 1] > 0 {
            mats[i] = Some(q.differential(i, d));
        }
    }
    let rank_of = |m: &Option<SparseMatrix>, exact: bool| -> usize {
        match m {
            None => 0,
            Some(m) if exact => m.rank_exact(),
            Some(m) => m.rank_mod(SCREEN_PRIME).unwrap_or_else(|| m.rank_exact()),
        }
    };
    let rational = field == Field::Rational;
    let screened: Vec<usize> = par_map(&mats, |m| rank_of(m, !rational));
    if !rational {
        return Ok(screened);
    }
    let mut certified = vec![false; n + 2];
    for i in 0..n + 2 {
        let full = mats[i]
            .as_ref()
            .is_none_or(|m| screened[i] == m.nrows().min(m.ncols));
        if full {
            certified[i] = true;
        }
    }
    for i in 0..=n {
        let next = if i + 1 < n + 2 { screened[i + 1] } else { 0 };
        if screened[i] + next == dims[i] {
            certified[i] = true;
            if i + 1 < n + 2 {
                certified[i + 1] = true;
            }
        }
    }
    let todo: Vec<(usize, &Option<SparseMatrix>)> = mats
        .iter()
        .enumerate()
        .filter(|(i, _)| !certified[*i])
        .collect();
    let exact: Vec<usize> = par_map(&todo, |(_, m)| rank_of(m, true));
    let mut ranks = screened;
    for ((i, _), r) in todo.iter().zip(exact) {
        ranks[*i] = r;
    }
    Ok(ranks)
}

#[cfg(feature = "parallel")]
pub(crate) fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn par_map<T, U>(items: &[T], f: impl Fn(&T) -> U) -> Vec<U> {
    items.iter().map(f).collect()
}

/// Graded Betti table of `R/I`, computed through row `j_max`, or with the
/// automatic stopping rule when `j_max` is `None`.
///
/// Rows are computed until one past the larger of the Hilbert numerator's
/// degree and the last nonzero row; when the reduced quotient is Artinian
/// the window reaches its top degree, which bounds every row exactly.
pub fn graded_betti(ideal: &Ideal, j_max: Option<usize>) -> Result<BettiTable> {
    if j_max == Some(0) {
        return Err(Error::invalid("j_max must be at least 1"));
    }
    let nvars = ideal.ring().nvars();
    let data: HilbertData = ideal.hilbert()?;
    if ideal.is_unit()? {
        return Ok(BettiTable {
            nvars,
            entries: BTreeMap::new(),
            j_max: 0,
            complete: true,
            reductions: 0,
        });
    }
    let (basis, n, reductions) = reduce_by_nonzerodivisors(ideal, data.krull_dim)?;
    let reduced_dim = data.krull_dim - reductions;
    let mut q = Quotient::new(&basis, n, ideal.field());

    let artinian_top = if reduced_dim == 0 {
        let mut t = 0;
        while !q.standard_is_empty_from(t + 1) {
            t += 1;
        }
        Some(t)
    } else {
        None
    };
    let num_deg = data.numerator.len().saturating_sub(1);

    let mut entries: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    let mut ranks: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut j = 0usize;
    let complete;
    loop {
        // row j needs degrees j ..= j + n
        for d in j..=j + n {
            if !ranks.contains_key(&d) {
                ranks.insert(d, degree_ranks(&mut q, d, ideal.field())?);
            }
        }
        for i in 0..=n {
            let d = i + j;
            let c = q.chain_dim(i, d);
            let r_out = if i >= 1 { ranks[&d][i] } else { 0 };
            let r_in = if i < n { ranks[&d][i + 1] } else { 0 };
            let b = c - r_out - r_in;
            if b > 0 {
                entries.insert((i, j), b as u64);
            }
        }
        let last_row = entries.keys().map(|&(_, jj)| jj).max().unwrap_or(0);
        let auto_done = match artinian_top {
            Some(t) => j >= t,
            None => j > num_deg.max(last_row),
        };
        if auto_done {
            complete = true;
            break;
        }
        if let Some(m) = j_max {
            if j >= m {
                complete = false;
                break;
            }
        }
        j += 1;
    }
    Ok(BettiTable {
        nvars,
        entries,
        j_max: j,
        complete,
        reductions,
    })
}
