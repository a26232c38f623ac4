//! Koszul complex of the variables tensored with `R/I`, over standard monomials.

use std::collections::{BTreeMap, HashMap};

use crate::linalg::SparseMatrix;
use crate::polyring::{Field, Monomial, Polynomial, Scalar};

type Vector = BTreeMap<usize, Scalar>;

/// Multiplication tables of `R/I` in the standard-monomial basis of a
/// grevlex Gröbner basis.
pub(crate) struct Quotient {
    nvars: usize,
    field: Field,
    basis: Vec<Polynomial>,
    lms: Vec<Monomial>,
    standard: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
    nf_memo: HashMap<Monomial, Vector>,
}

impl Quotient {
    pub(crate) fn new(basis: &[Polynomial], nvars: usize, field: Field) -> Quotient {
        let basis: Vec<Polynomial> = basis.iter().map(|g| g.monic()).collect();
        let lms = basis.iter().map(|g| g.leading_monomial().unwrap().clone()).collect();
        Quotient {
            nvars,
            field,
            basis,
            lms,
            standard: Vec::new(),
            index: Vec::new(),
            nf_memo: HashMap::new(),
        }
    }

    fn is_standard(&self, m: &Monomial) -> bool {
        !self.lms.iter().any(|l| l.divides(m))
    }

    fn ensure_degree(&mut self, d: usize) {
        while self.standard.len() <= d {
            let e = self.standard.len();
            let mut mons = Vec::new();
            let mut exps = vec![0u16; self.nvars];
            enumerate(&mut exps, 0, e as u16, &mut |ex| {
                let m = Monomial::new(ex);
                if !self.lms.iter().any(|l| l.divides(&m)) {
                    mons.push(m);
                }
            });
            let index = mons.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
            self.standard.push(mons);
            self.index.push(index);
        }
    }

    pub(crate) fn dim(&mut self, d: usize) -> usize {
        self.ensure_degree(d);
        self.standard[d].len()
    }

    /// Normal form of a monomial as a vector over the standard monomials of its degree.
    fn normal_form(&mut self, m: &Monomial) -> Vector {
        let d = m.degree() as usize;
        self.ensure_degree(d);
        if let Some(&k) = self.index[d].get(m) {
            return [(k, self.field.one())].into_iter().collect();
        }
        if let Some(v) = self.nf_memo.get(m) {
            return v.clone();
        }
        let gi = self.lms.iter().position(|l| l.divides(m)).unwrap();
        let w = m.div(&self.lms[gi]).unwrap();
        let tail: Vec<(Monomial, Scalar)> = self.basis[gi].terms()[1..]
            .iter()
            .map(|t| (t.mono.mul(&w), t.coeff.clone()))
            .collect();
        let mut acc = Vector::new();
        for (u, c) in tail {
            for (k, v) in self.normal_form(&u) {
                let add = -(&v * &c);
                let entry = acc.entry(k).or_insert_with(|| self.field.zero());
                *entry = &*entry + &add;
                if entry.is_zero() {
                    acc.remove(&k);
                }
            }
        }
        self.nf_memo.insert(m.clone(), acc.clone());
        acc
    }

    /// Matrix of the Koszul differential `C_i -> C_{i-1}` in internal degree `d`,
    /// one row per basis element of the source.
    pub(crate) fn differential(&mut self, i: usize, d: usize) -> SparseMatrix {
        let n = self.nvars;
        let src = subsets(n, i);
        let tgt = subsets(n, i - 1);
        let tgt_index: HashMap<u32, usize> = tgt.iter().enumerate().map(|(k, &s)| (s, k)).collect();
        let e = d - i;
        self.ensure_degree(e + 1);
        let src_mons = self.standard[e].clone();
        let tgt_dim = self.standard[e + 1].len();
        let mut m = SparseMatrix::new(tgt.len() * tgt_dim);
        for &s in &src {
            for b in &src_mons {
                let mut row = Vector::new();
                let mut pos = 0;
                for k in 0..n {
                    if s & (1 << k) == 0 {
                        continue;
                    }
                    let sign_neg = pos % 2 == 1;
                    pos += 1;
                    let t = tgt_index[&(s & !(1 << k))];
                    let xb = b.mul(&Monomial::var(n, k));
                    for (c, v) in self.normal_form(&xb) {
                        let col = t * tgt_dim + c;
                        let v = if sign_neg { -v } else { v };
                        let entry = row.entry(col).or_insert_with(|| self.field.zero());
                        *entry = &*entry + &v;
                        if entry.is_zero() {
                            row.remove(&col);
                        }
                    }
                }
                m.push_row(row);
            }
        }
        m
    }

    pub(crate) fn chain_dim(&mut self, i: usize, d: usize) -> usize {
        if i > self.nvars || i > d {
            return 0;
        }
        binomial(self.nvars, i) * self.dim(d - i)
    }

    pub(crate) fn nvars(&self) -> usize {
        self.nvars
    }

    pub(crate) fn standard_is_empty_from(&mut self, d: usize) -> bool {
        self.dim(d) == 0
    }

    #[allow(dead_code)]
    pub(crate) fn contains_standard(&self, m: &Monomial) -> bool {
        self.is_standard(m)
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Bitmasks of the `i`-element subsets of `{0..n}`, increasing.
fn subsets(n: usize, i: usize) -> Vec<u32> {
    (0u32..(1 << n)).filter(|s| s.count_ones() as usize == i).collect()
}

fn enumerate(exps: &mut Vec<u16>, k: usize, left: u16, f: &mut dyn FnMut(&[u16])) {
    let n = exps.len();
    if k == n - 1 {
        exps[k] = left;
        f(exps);
        exps[k] = 0;
        return;
    }
    for e in (0..=left).rev() {
        exps[k] = e;
        enumerate(exps, k + 1, left - e, f);
    }
    exps[k] = 0;
}
