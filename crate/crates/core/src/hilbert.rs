//! Hilbert series, functions and polynomials of homogeneous ideals, computed
//! from leading-term ideals, and the numerical invariants built on them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polyring::Monomial;
use crate::varieties::Variety;

/// `C(x, m)` for any integer `x` and `m >= 0`.
pub fn binomial(x: i64, m: i64) -> i64 {
    if m < 0 {
        return 0;
    }
    let mut c: i128 = 1;
    for i in 0..m as i128 {
        c = c * (x as i128 - i) / (i + 1);
    }
    c as i64
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn poly_add(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (k, &v) in b.iter().enumerate() {
        a[k + shift] += v;
    }
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

/// K-polynomial of `R/M`: numerator of the Hilbert series over `(1-t)^n`,
/// by the pivot recursion `N(M) = N(M + p) + t^deg(p) N(M : p)`.
pub fn monomial_numerator(gens: &[Monomial]) -> Vec<i64> {
    let gens = minimalize(gens.to_vec());
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![0];
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let mut acc = vec![1i64];
        for g in &gens {
            let d = g.degree() as usize;
            let mut next = acc.clone();
            next.resize(acc.len() + d, 0);
            for (k, &v) in acc.iter().enumerate() {
                next[k + d] -= v;
            }
            acc = next;
        }
        return trim(acc);
    }
    // Pivot on the variable occurring in the most generators.
    let n = gens[0].nvars();
    let var = (0..n)
        .max_by_key(|&k| (gens.iter().filter(|g| g.exp(k) > 0).count(), std::cmp::Reverse(k)))
        .unwrap();
    let mut exps: Vec<u16> = gens.iter().map(|g| g.exp(var)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2];
    let mut pe = vec![0u16; n];
    pe[var] = e;
    let pivot = Monomial::new(&pe);

    let mut with_pivot = gens.clone();
    with_pivot.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| g.div(&g.gcd(&pivot)).unwrap())
        .collect();
    let mut acc = monomial_numerator(&with_pivot);
    poly_add(&mut acc, &monomial_numerator(&colon), e as usize);
    trim(acc)
}

/// Hilbert series data of `R/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    /// Series is `numerator(t) / (1-t)^nvars`.
    pub numerator: Vec<i64>,
    pub nvars: usize,
    /// Numerator after cancelling every `(1-t)` factor: series = `h(t)/(1-t)^krull_dim`.
    pub h_numerator: Vec<i64>,
    pub krull_dim: usize,
    pub degree: i64,
    /// Hilbert polynomial in the basis `C(k+i-1, i)`, `i = 0..=dim`.
    /// The top coefficient is the degree; empty for the empty scheme.
    pub chi: Vec<i64>,
}

impl HilbertData {
    pub fn from_numerator(numerator: Vec<i64>, nvars: usize) -> HilbertData {
        let numerator = trim(numerator);
        let mut h = numerator.clone();
        let mut d = nvars;
        // Divide by (1-t) while h(1) = 0.
        while d > 0 && h.iter().sum::<i64>() == 0 && h.iter().any(|&c| c != 0) {
            let mut q = vec![0i64; h.len() - 1];
            let mut acc = 0i64;
            for k in 0..h.len() - 1 {
                acc += h[k];
                q[k] = acc;
            }
            h = trim(q);
            d -= 1;
        }
        if h.iter().all(|&c| c == 0) {
            d = 0;
        }
        let degree = h.iter().sum();
        let mut data = HilbertData {
            numerator,
            nvars,
            h_numerator: h,
            krull_dim: d,
            degree,
            chi: Vec::new(),
        };
        if d > 0 {
            let n = d as i64 - 1;
            data.chi = (0..=n)
                .map(|i| {
                    (0..=i)
                        .map(|l| {
                            let sign = if l % 2 == 0 { 1 } else { -1 };
                            sign * binomial(i, l) * data.hilbert_polynomial(-l)
                        })
                        .sum()
                })
                .collect();
        }
        data
    }

    /// Dimension of the projective scheme; -1 when empty.
    pub fn projective_dim(&self) -> i64 {
        self.krull_dim as i64 - 1
    }

    pub fn hilbert_polynomial(&self, k: i64) -> i64 {
        let d = self.krull_dim as i64;
        if d == 0 {
            return 0;
        }
        self.h_numerator
            .iter()
            .enumerate()
            .map(|(i, &c)| c * binomial(k - i as i64 + d - 1, d - 1))
            .sum()
    }

    /// Coefficient of `t^j` in the series expansion.
    pub fn series_coeff(&self, j: i64) -> i64 {
        let n = self.nvars as i64;
        self.numerator
            .iter()
            .enumerate()
            .filter(|(k, _)| (*k as i64) <= j)
            .map(|(k, &c)| c * binomial(j - k as i64 + n - 1, n - 1))
            .sum()
    }

    /// Degree from which the Hilbert function agrees with the polynomial.
    pub fn regularity_index(&self) -> i64 {
        self.h_numerator.len() as i64 - self.krull_dim as i64
    }

    /// `1 - chi_{n-1}`: arithmetic genus of a generic curve section.
    pub fn sectional_genus(&self) -> Option<i64> {
        let n = self.chi.len();
        (n >= 2).then(|| 1 - self.chi[n - 2])
    }
}

pub fn hilbert_series(ideal: &Ideal) -> Result<HilbertData> {
    let lts = ideal.leading_monomials()?;
    Ok(HilbertData::from_numerator(
        monomial_numerator(&lts),
        ideal.ring().nvars(),
    ))
}

/// Number of monomials of degree `d` in `nvars` variables outside the monomial ideal.
pub fn count_standard_monomials(lts: &[Monomial], nvars: usize, d: u32) -> u64 {
    fn rec(prefix: &mut Vec<u16>, left: u32, nvars: usize, lts: &[Monomial], count: &mut u64) {
        if prefix.len() == nvars - 1 {
            prefix.push(left as u16);
            let m = Monomial::new(prefix);
            if !lts.iter().any(|g| g.divides(&m)) {
                *count += 1;
            }
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e as u16);
            // prune: the partial monomial already lies in the ideal
            let mut probe = prefix.clone();
            probe.resize(nvars, 0);
            let pm = Monomial::new(&probe);
            if !lts.iter().any(|g| g.divides(&pm)) {
                rec(prefix, left - e, nvars, lts, count);
            }
            prefix.pop();
        }
    }
    let mut count = 0;
    rec(&mut Vec::with_capacity(nvars), d, nvars, lts, &mut count);
    count
}

/// `dim_K (R/I)_j` by counting standard monomials.
pub fn hilbert_function(ideal: &Ideal, j: u32) -> Result<u64> {
    let lts = ideal.leading_monomials()?;
    Ok(count_standard_monomials(&lts, ideal.ring().nvars(), j))
}

/// Dimension, degree and genera of a variety.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumericalInvariants {
    pub dim: i64,
    pub degree: i64,
    pub codim: i64,
    pub h0_1: u64,
    pub delta_genus: i64,
    pub sectional_genus: i64,
    /// Sectional genus recomputed from an explicit generic curve section.
    pub sliced_genus: Option<i64>,
}

pub const SLICE_RETRIES: usize = 5;

/// Arithmetic genus of a generic linear curve section, by slicing with random
/// hyperplanes `x_last = sum c_k x_k` (`c_k` in `[-20, 20]`), saturating and
/// reading off `1 - P_C(0)`.
pub fn sectional_genus_by_slicing(ideal: &Ideal, seed: u64) -> Result<i64> {
    let data = hilbert_series(ideal)?;
    let n = data.projective_dim();
    if n < 1 {
        return Err(Error::invalid("sectional genus needs a positive dimensional scheme"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SLICE_RETRIES {
        let mut cur = ideal.clone();
        let mut ok = true;
        for _ in 0..(n - 1) {
            let nv = cur.ring().nvars();
            if nv <= 2 {
                ok = false;
                break;
            }
            let coeffs: Vec<i64> = (0..nv - 1).map(|_| rng.gen_range(-20..=20)).collect();
            cur = cur.hyperplane_section(&coeffs)?.saturate_irrelevant()?;
        }
        if !ok {
            break;
        }
        let curve = hilbert_series(&cur)?;
        if curve.projective_dim() == 1 && curve.degree == data.degree {
            return Ok(1 - curve.hilbert_polynomial(0));
        }
    }
    Err(Error::Degenerate {
        what: "curve section".into(),
        retries: SLICE_RETRIES,
    })
}

/// `n`, `deg`, `Delta = n + deg - h0(O(1))` and the sectional genus, both from
/// the Hilbert polynomial and from an explicit curve section.
pub fn numerical_invariants(x: &Variety) -> Result<NumericalInvariants> {
    let profile = x.profile().ok_or(Error::MissingProfile)?;
    let data = hilbert_series(x.ideal())?;
    let dim = data.projective_dim();
    let r = x.ring().nvars() as i64 - 1;
    let h0_1 = profile.h0(1);
    let sectional_genus = match data.sectional_genus() {
        Some(g) => g,
        None => return Err(Error::invalid("sectional genus needs a positive dimensional variety")),
    };
    let sliced_genus = if dim >= 1 {
        Some(sectional_genus_by_slicing(x.ideal(), 0x5eed)?)
    } else {
        None
    };
    Ok(NumericalInvariants {
        dim,
        degree: data.degree,
        codim: r - dim,
        h0_1,
        delta_genus: dim + data.degree - h0_1 as i64,
        sectional_genus,
        sliced_genus,
    })
}
