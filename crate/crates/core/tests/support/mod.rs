//! Test oracles that share no code with the library's algorithms.

#![allow(dead_code)]

use std::collections::BTreeMap;

use secantlab::polyring::{parse_poly, Field, PolynomialRing};
use secantlab::projsec::CenterSpec;
use secantlab::varieties::{
    grassmann_g14_section, quadric_hypersurface, scroll, segre, veronese, Variety,
};
use secantlab::{Ideal, Polynomial};

pub const P: u64 = 32003;

fn inv(a: u64) -> u64 {
    let (mut r, mut base, mut e) = (1u64, a % P, P - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % P;
        }
        base = base * base % P;
        e >>= 1;
    }
    r
}

fn modp(text: &str) -> u64 {
    let (num, den) = text.split_once('/').unwrap_or((text, "1"));
    let n: i128 = num.trim().parse().expect("integer");
    let d: i128 = den.trim().parse().expect("integer");
    let n = n.rem_euclid(P as i128) as u64;
    let d = d.rem_euclid(P as i128) as u64;
    n * inv(d) % P
}

type Mono = Vec<u16>;
/// Sparse vector of a free module: `(basis index, monomial) -> coefficient`.
type Vector = BTreeMap<(usize, Mono), u64>;

pub fn monomials(n: usize, d: usize) -> Vec<Mono> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for mut rest in monomials(n - 1, d - a) {
            rest.insert(0, a as u16);
            out.push(rest);
        }
    }
    out
}

fn shift(v: &Vector, m: &Mono) -> Vector {
    v.iter()
        .map(|((k, e), c)| ((*k, e.iter().zip(m).map(|(a, b)| a + b).collect()), *c))
        .collect()
}

fn axpy(v: &mut Vector, c: u64, w: &Vector) {
    for (key, x) in w {
        let entry = v.entry(key.clone()).or_insert(0);
        *entry = (*entry + c * x) % P;
        if *entry == 0 {
            v.remove(key);
        }
    }
}

/// Incremental row echelon form that records, for each row, the combination
/// of inputs it came from.
struct Echelon {
    rows: BTreeMap<(usize, Mono), (Vector, Vector)>,
}

impl Echelon {
    fn new() -> Echelon {
        Echelon { rows: BTreeMap::new() }
    }

    /// Reduces `(v, tag)`; inserts it when independent and returns the
    /// reduced tag when `v` reduces to zero.
    fn insert(&mut self, mut v: Vector, mut tag: Vector) -> Option<Vector> {
        loop {
            let hit = v.keys().find(|k| self.rows.contains_key(*k)).cloned();
            let Some(key) = hit else { break };
            let c = P - v[&key];
            let (row, row_tag) = &self.rows[&key];
            axpy(&mut v, c, row);
            axpy(&mut tag, c, row_tag);
        }
        let Some((key, lead)) = v.iter().next().map(|(k, c)| (k.clone(), *c)) else {
            return Some(tag);
        };
        let s = inv(lead);
        for x in v.values_mut() {
            *x = *x * s % P;
        }
        for x in tag.values_mut() {
            *x = *x * s % P;
        }
        self.rows.insert(key, (v, tag));
        None
    }
}

/// A homogeneous element of a free module together with its degree.
#[derive(Clone)]
struct Element {
    degree: usize,
    vector: Vector,
}

/// Minimal generators of the submodule spanned by `gens`, degree by degree
/// up to `top`: a generator of degree `d` is kept when it is independent of
/// `R_1` times everything of lower degree.
fn minimalize(gens: &[Element], nvars: usize, top: usize) -> Vec<Element> {
    let mut kept = Vec::new();
    for d in 0..=top {
        let mut echelon = Echelon::new();
        for g in gens.iter().filter(|g| g.degree < d) {
            for m in monomials(nvars, d - g.degree) {
                echelon.insert(shift(&g.vector, &m), Vector::new());
            }
        }
        for g in gens.iter().filter(|g| g.degree == d) {
            if echelon.insert(g.vector.clone(), Vector::new()).is_none() {
                kept.push(g.clone());
            }
        }
    }
    kept
}

/// Spanning sets of the kernel of `e_k -> basis[k]`, degree by degree.
fn syzygies(basis: &[Element], nvars: usize, top: usize) -> Vec<Element> {
    let mut out = Vec::new();
    for d in 0..=top {
        let mut echelon = Echelon::new();
        for (k, b) in basis.iter().enumerate().filter(|(_, b)| b.degree <= d) {
            for m in monomials(nvars, d - b.degree) {
                let tag: Vector = [((k, m.clone()), 1)].into_iter().collect();
                if let Some(kernel) = echelon.insert(shift(&b.vector, &m), tag) {
                    out.push(Element { degree: d, vector: kernel });
                }
            }
        }
    }
    out
}

fn to_vector(f: &Polynomial) -> Vector {
    f.terms()
        .iter()
        .map(|t| ((0, t.mono.exps().to_vec()), modp(&t.coeff.to_string())))
        .filter(|(_, c)| *c != 0)
        .collect()
}

/// `β_{i,j}` of `R/I` for `i + j <= top`, by resolving with explicit linear
/// algebra over `GF(32003)`.
pub fn brute_force_betti(ideal: &Ideal, top: usize) -> BTreeMap<(usize, usize), u64> {
    let nvars = ideal.ring().nvars();
    let mut table = BTreeMap::new();
    table.insert((0, 0), 1);
    let mut gens: Vec<Element> = ideal
        .gens()
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Element {
            degree: g.degree().unwrap() as usize,
            vector: to_vector(g),
        })
        .collect();
    for i in 1..=nvars + 1 {
        let minimal = minimalize(&gens, nvars, top);
        if minimal.is_empty() {
            break;
        }
        for g in &minimal {
            *table.entry((i, g.degree - i)).or_insert(0) += 1;
        }
        gens = syzygies(&minimal, nvars, top);
    }
    table
}

pub fn ideal_of(n: usize, gens: &[&str]) -> Ideal {
    let ring = PolynomialRing::standard(n, Field::Rational);
    Ideal::new(&ring, gens.iter().map(|g| parse_poly(g, &ring).unwrap()).collect()).unwrap()
}

/// `C(n, k)` by the multiplicative formula.
pub fn choose(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of monomials of degree `d` in `n` variables outside the monomial
/// ideal generated by `lead`.
pub fn standard_monomial_count(lead: &[Vec<u16>], n: usize, d: usize) -> usize {
    monomials(n, d)
        .into_iter()
        .filter(|m| !lead.iter().any(|l| l.iter().zip(m).all(|(a, b)| a <= b)))
        .count()
}

/// Prints one acceptance line and returns whether it passed.
pub fn report(label: &str, pass: bool, detail: &str) -> bool {
    println!("[{}] {label}: {detail}", if pass { "PASS" } else { "FAIL" });
    pass
}

/// Remainder of `f` under naive multivariate division by `basis`, in the
/// order the polynomials are stored in.
pub fn remainder(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let mut p = f.clone();
    let mut r = Polynomial::from_terms(ring.clone(), f.order(), vec![]);
    while let Some(lt) = p.leading_term().cloned() {
        let divisor = basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|m| m.divides(&lt.mono)));
        match divisor {
            Some(g) => {
                let m = lt.mono.div(g.leading_monomial().unwrap()).unwrap();
                let c = lt.coeff.div(g.leading_coeff().unwrap()).unwrap();
                p = p.sub(&g.mul_monomial(&m).scale(&c));
            }
            None => {
                let t = Polynomial::from_terms(ring.clone(), f.order(), vec![lt]);
                p = p.sub(&t);
                r = r.add(&t);
            }
        }
    }
    r
}

/// `S(f, g) = (L / lt f) f - (L / lt g) g` with `L` the lcm of the leading monomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (mf, mg) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let l = mf.lcm(mg);
    let a = f.mul_monomial(&l.div(mf).unwrap()).scale(&f.leading_coeff().unwrap().inv().unwrap());
    let b = g.mul_monomial(&l.div(mg).unwrap()).scale(&g.leading_coeff().unwrap().inv().unwrap());
    a.sub(&b)
}

/// Every S-pair of `basis` reduces to zero and every generator lies in it.
pub fn groebner_postconditions(gens: &[Polynomial], basis: &[Polynomial]) -> Result<(), String> {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let r = remainder(&s_polynomial(&basis[i], &basis[j]), basis);
            if !r.is_zero() {
                return Err(format!("S({i}, {j}) leaves {r}"));
            }
        }
    }
    for g in gens {
        let r = remainder(&g.reorder(basis[0].order()), basis);
        if !r.is_zero() {
            return Err(format!("generator {g} leaves {r}"));
        }
    }
    Ok(())
}

/// Every constructible corpus member with the projections used by the
/// minimal degree suite.
pub fn corpus() -> Vec<secantlab::Variety> {
    use secantlab::varieties::*;
    let mut out = vec![
        veronese(1, 2).unwrap(),
        veronese(1, 3).unwrap(),
        veronese(1, 4).unwrap(),
        veronese(2, 2).unwrap(),
        veronese(2, 3).unwrap(),
        segre(1, 1).unwrap(),
        segre(1, 2).unwrap(),
        segre(2, 2).unwrap(),
        scroll(&[1, 2]).unwrap(),
        scroll(&[2, 2]).unwrap(),
        scroll(&[1, 1, 1]).unwrap(),
        quadric_hypersurface(3).unwrap(),
        quadric_hypersurface(4).unwrap(),
        elliptic_quartic().unwrap(),
        random_complete_intersection(4, &[2, 2], 1).unwrap(),
    ];
    for cut in 0..=3 {
        out.push(grassmann_g14_section(cut, 1).unwrap());
    }
    let (minimal, other) = secantlab::projsec::suites::thm51_corpus(1).unwrap();
    out.extend(minimal);
    out.extend(other);
    out
}

/// Small ideals with a total degree bound past their last syzygy.
pub fn oracle_cases() -> Vec<(&'static str, Ideal, usize)> {
    vec![
        (
            "twisted cubic",
            ideal_of(4, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]),
            4,
        ),
        ("veronese surface", veronese(2, 2).unwrap().ideal().clone(), 5),
        ("segre(1,2)", segre(1, 2).unwrap().ideal().clone(), 4),
        (
            "two quadrics",
            ideal_of(4, &["x0*x1 - x2*x3", "x0^2 + x1^2 - x2^2 - 3*x3^2"]),
            5,
        ),
        ("two skew lines", ideal_of(4, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"]), 5),
        ("monomial", ideal_of(3, &["x0^2", "x0*x1", "x1^3"]), 6),
        ("three squares", ideal_of(3, &["x0^2", "x1^2", "x2^2"]), 7),
        ("three points", ideal_of(3, &["x0*x1", "x0*x2", "x1*x2"]), 4),
    ]
}

/// Corpus members with centers of each kind.
pub fn corpus_centers() -> Vec<(Variety, CenterSpec, u64)> {
    vec![
        (veronese(2, 2).unwrap(), CenterSpec::OnSecant, 1),
        (veronese(2, 2).unwrap(), CenterSpec::GeneralOffSecant, 2),
        (veronese(1, 4).unwrap(), CenterSpec::OnSecant, 3),
        (veronese(1, 4).unwrap(), CenterSpec::General, 4),
        (veronese(2, 3).unwrap(), CenterSpec::OnSecant, 5),
        (scroll(&[3]).unwrap(), CenterSpec::General, 6),
        (segre(1, 2).unwrap(), CenterSpec::General, 7),
        (scroll(&[1, 2]).unwrap(), CenterSpec::General, 8),
        (scroll(&[2, 2]).unwrap(), CenterSpec::OnSecant, 9),
        (quadric_hypersurface(3).unwrap(), CenterSpec::General, 10),
        (grassmann_g14_section(3, 1).unwrap(), CenterSpec::General, 11),
    ]
}
