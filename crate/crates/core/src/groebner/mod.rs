//! Gröbner bases and the ideal operations built on them: normal forms,
//! elimination, quotients, saturation and intersection.

mod buchberger;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use buchberger::{
    default_budget, divide_exact, groebner_basis, groebner_basis_with_budget, is_groebner_basis,
    set_default_budget, Budget,
};
pub(crate) use buchberger::reduce;

use crate::error::{Error, Result};
use crate::hilbert::{hilbert_series, HilbertData};
use crate::linalg;
use crate::polyring::{
    Field, Matrix, Monomial, MonomialOrder, Polynomial, PolynomialRing, RingExt, Scalar, Term,
};

type BasisCache = Arc<Mutex<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>>;

/// An ideal of a polynomial ring, with reduced Gröbner bases cached per order.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<PolynomialRing>,
    gens: Vec<Polynomial>,
    homogeneous: bool,
    saturated: bool,
    cache: BasisCache,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?}", self.gens.iter().map(|g| g.to_string()).collect::<Vec<_>>())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// `ring` extended by `extra` fresh variables appended at the end.
pub(crate) fn extend_ring(ring: &Arc<PolynomialRing>, extra: usize, stem: &str) -> Arc<PolynomialRing> {
    let mut names = ring.names().to_vec();
    let mut k = 0;
    while names.len() < ring.nvars() + extra {
        let cand = format!("{stem}{k}");
        if !names.contains(&cand) {
            names.push(cand);
        }
        k += 1;
    }
    PolynomialRing::new(names, ring.field()).expect("fresh names")
}

/// The ring on the first `m` variables of `ring`.
pub(crate) fn sub_ring(ring: &Arc<PolynomialRing>, m: usize) -> Result<Arc<PolynomialRing>> {
    PolynomialRing::new(ring.names()[..m].to_vec(), ring.field())
}

fn embed(f: &Polynomial, target: &Arc<PolynomialRing>) -> Polynomial {
    let map: Vec<usize> = (0..f.ring().nvars()).collect();
    f.remap(target, &map)
}

/// Restricts a polynomial that does not involve the trailing variables.
fn restrict(f: &Polynomial, target: &Arc<PolynomialRing>) -> Polynomial {
    let m = target.nvars();
    debug_assert!((m..f.ring().nvars()).all(|k| !f.involves(k)));
    let terms = f
        .terms()
        .iter()
        .map(|t| Term {
            mono: Monomial::new(&t.mono.exps()[..m]),
            coeff: t.coeff.clone(),
        })
        .collect();
    Polynomial::from_terms(target.clone(), f.order(), terms)
}

/// Coefficient vector of a linear form, `None` if `f` is not linear homogeneous.
pub fn linear_coefficients(f: &Polynomial) -> Option<Vec<Scalar>> {
    let n = f.ring().nvars();
    let mut v = vec![f.field().zero(); n];
    for t in f.terms() {
        if t.mono.degree() != 1 {
            return None;
        }
        let k = (0..n).find(|&k| t.mono.exp(k) == 1).unwrap();
        v[k] = t.coeff.clone();
    }
    Some(v)
}

/// Linear forms mapping each variable to its image under a change of
/// coordinates that turns the linear form `h` into the last variable,
/// together with the inverse images.
fn straighten(h: &[Scalar], ring: &Arc<PolynomialRing>) -> (Vec<Polynomial>, Vec<Polynomial>) {
    let n = ring.nvars();
    let last = n - 1;
    let q = (0..n).rev().find(|&k| !h[k].is_zero()).expect("nonzero form");
    let tau = |i: usize| {
        if i == q {
            last
        } else if i == last {
            q
        } else {
            i
        }
    };
    let hq_inv = h[q].inv().unwrap();
    let forward: Vec<Polynomial> = (0..n)
        .map(|i| {
            if i == q {
                let mut f = ring.var(last);
                for (k, c) in h.iter().enumerate() {
                    if k != q && !c.is_zero() {
                        f = f.sub(&ring.var(tau(k)).scale(c));
                    }
                }
                f.scale(&hq_inv)
            } else {
                ring.var(tau(i))
            }
        })
        .collect();
    let h_poly = (0..n).fold(ring.zero(), |acc, k| acc.add(&ring.var(k).scale(&h[k])));
    let backward: Vec<Polynomial> = (0..n)
        .map(|j| if j == last { h_poly.clone() } else { ring.var(tau(j)) })
        .collect();
    (forward, backward)
}

const SATURATION_SEED: u64 = 0x5a7_0001;

impl Ideal {
    /// The ideal generated by `gens` (zero generators dropped).
    pub fn new(ring: &Arc<PolynomialRing>, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            if **g.ring() != **ring {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() {
                out.push(g.reorder(MonomialOrder::Grevlex));
            }
        }
        let homogeneous = out.iter().all(|g| g.is_homogeneous());
        Ok(Ideal {
            ring: ring.clone(),
            gens: out,
            homogeneous,
            saturated: false,
            cache: Default::default(),
        })
    }

    pub fn zero(ring: &Arc<PolynomialRing>) -> Ideal {
        let mut i = Ideal::new(ring, Vec::new()).unwrap();
        i.saturated = true;
        i
    }

    pub fn unit(ring: &Arc<PolynomialRing>) -> Ideal {
        let mut i = Ideal::new(ring, vec![ring.one()]).unwrap();
        i.saturated = true;
        i
    }

    /// The irrelevant ideal `(x0, ..., xr)`.
    pub fn irrelevant(ring: &Arc<PolynomialRing>) -> Ideal {
        Ideal::new(ring, (0..ring.nvars()).map(|k| ring.var(k)).collect()).unwrap()
    }

    fn with_basis(ring: &Arc<PolynomialRing>, basis: Vec<Polynomial>, order: MonomialOrder) -> Ideal {
        let ideal = Ideal::new(ring, basis.clone()).unwrap();
        ideal
            .cache
            .lock()
            .expect("cache lock")
            .insert(order, Arc::new(basis));
        ideal
    }

    pub fn ring(&self) -> &Arc<PolynomialRing> {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_saturated(&self) -> bool {
        self.saturated
    }

    /// Records that the ideal is known to be saturated.
    pub fn mark_saturated(mut self) -> Ideal {
        self.saturated = true;
        self
    }

    fn require_homogeneous(&self) -> Result<()> {
        if self.homogeneous {
            Ok(())
        } else {
            Err(Error::invalid("operation requires a homogeneous ideal"))
        }
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if *self.ring == *other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn groebner_basis(&self, order: MonomialOrder) -> Result<Arc<Vec<Polynomial>>> {
        if let Some(b) = self.cache.lock().expect("cache lock").get(&order) {
            return Ok(b.clone());
        }
        let basis = Arc::new(groebner_basis(&self.gens, order)?);
        self.cache
            .lock()
            .expect("cache lock")
            .entry(order)
            .or_insert_with(|| basis.clone());
        Ok(basis)
    }

    /// Leading monomials of the grevlex basis.
    pub fn leading_monomials(&self) -> Result<Vec<Monomial>> {
        Ok(self
            .groebner_basis(MonomialOrder::Grevlex)?
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect())
    }

    pub fn hilbert(&self) -> Result<HilbertData> {
        self.require_homogeneous()?;
        hilbert_series(self)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self
            .groebner_basis(MonomialOrder::Grevlex)?
            .first()
            .is_some_and(|g| g.is_constant()))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn normal_form(&self, f: &Polynomial, order: MonomialOrder) -> Result<Polynomial> {
        if **f.ring() != *self.ring {
            return Err(Error::RingMismatch);
        }
        let basis = self.groebner_basis(order)?;
        let refs: Vec<&Polynomial> = basis.iter().collect();
        Ok(reduce(&f.reorder(order), &refs))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f, MonomialOrder::Grevlex)?.is_zero())
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality by mutual membership of generators.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn with_generators(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Degree `d` elements of a reduced basis.
    pub fn basis_of_degree(&self, order: MonomialOrder, d: u32) -> Result<Vec<Polynomial>> {
        Ok(self
            .groebner_basis(order)?
            .iter()
            .filter(|g| g.degree() == Some(d))
            .cloned()
            .collect())
    }

    /// `I ∩ K[x0, ..., x(n-k-1)]`, living in the smaller ring.
    pub fn eliminate(&self, k: usize) -> Result<Ideal> {
        let n = self.ring.nvars();
        if k >= n {
            return Err(Error::invalid(format!("cannot eliminate {k} of {n} variables")));
        }
        if k == 0 {
            return Ok(self.clone());
        }
        let target = sub_ring(&self.ring, n - k)?;
        let basis = self.groebner_basis(MonomialOrder::Elim(k))?;
        let kept: Vec<Polynomial> = basis
            .iter()
            .filter(|g| (n - k..n).all(|v| !g.involves(v)))
            .map(|g| restrict(g, &target).reorder(MonomialOrder::Grevlex))
            .collect();
        let mut out = Ideal::with_basis(&target, kept, MonomialOrder::Grevlex);
        out.homogeneous = out.gens.iter().all(|g| g.is_homogeneous());
        Ok(out)
    }

    /// Substitutes `x_i -> images[i]`, landing in the ring of the images.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Ideal> {
        if images.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.nvars(),
                found: images.len(),
            });
        }
        let target = images
            .first()
            .map(|p| p.ring().clone())
            .unwrap_or_else(|| self.ring.clone());
        let gens = self.gens.iter().map(|g| g.compose(images)).collect();
        Ideal::new(&target, gens)
    }

    /// Generators `g(M x)`: the ideal of the image under the inverse change of coordinates.
    pub fn apply_linear_change(&self, m: &Matrix) -> Result<Ideal> {
        let n = self.ring.nvars();
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: m.len(),
            });
        }
        linalg::inverse(m, self.field())?;
        let forms = crate::polyring::linear_forms(&self.ring, m)?;
        let mut out = self.substitute(&forms)?;
        out.saturated = self.saturated;
        Ok(out)
    }

    pub fn change_field(&self, field: Field) -> Result<Ideal> {
        let ring = self.ring.with_field(field);
        let gens = self
            .gens
            .iter()
            .map(|g| g.change_field(&ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&ring, gens)
    }

    /// Section by `x_last = sum_k c_k x_k`, as an ideal on the first `n-1` variables.
    pub fn hyperplane_section(&self, coeffs: &[i64]) -> Result<Ideal> {
        let n = self.ring.nvars();
        if coeffs.len() != n - 1 {
            return Err(Error::DimensionMismatch {
                expected: n - 1,
                found: coeffs.len(),
            });
        }
        let target = sub_ring(&self.ring, n - 1)?;
        let field = self.field();
        let mut images: Vec<Polynomial> = (0..n - 1).map(|k| target.var(k)).collect();
        let last = coeffs
            .iter()
            .enumerate()
            .fold(target.zero(), |acc, (k, &c)| acc.add(&target.var(k).scale(&field.from_i64(c))));
        images.push(last);
        self.substitute(&images)
    }

    /// Quotient (with `infinite`, saturation) by the last variable, read off a
    /// grevlex basis: for homogeneous ideals the basis elements divided by the
    /// largest power (or first power) of the last variable generate the result.
    fn colon_last_variable(&self, infinite: bool) -> Result<Ideal> {
        self.require_homogeneous()?;
        let n = self.ring.nvars();
        let basis = self.groebner_basis(MonomialOrder::Grevlex)?;
        let gens: Vec<Polynomial> = basis
            .iter()
            .map(|g| {
                let e = g.terms().iter().map(|t| t.mono.exp(n - 1)).min().unwrap_or(0);
                let e = if infinite { e } else { e.min(1) };
                if e == 0 {
                    return g.clone();
                }
                let mut ex = vec![0u16; n];
                ex[n - 1] = e;
                let m = Monomial::new(&ex);
                let terms = g
                    .terms()
                    .iter()
                    .map(|t| Term {
                        mono: t.mono.div(&m).unwrap(),
                        coeff: t.coeff.clone(),
                    })
                    .collect();
                Polynomial::from_terms(self.ring.clone(), MonomialOrder::Grevlex, terms)
            })
            .collect();
        Ideal::new(&self.ring, gens)
    }

    /// `I : h` or `I : h^∞` for a linear form `h`.
    pub fn colon_linear_form(&self, h: &Polynomial, infinite: bool) -> Result<Ideal> {
        let coeffs = linear_coefficients(h)
            .filter(|c| c.iter().any(|x| !x.is_zero()))
            .ok_or_else(|| Error::invalid("expected a nonzero linear form"))?;
        let n = self.ring.nvars();
        let is_last = coeffs[..n - 1].iter().all(|c| c.is_zero());
        if is_last {
            return self.colon_last_variable(infinite);
        }
        let (forward, backward) = straighten(&coeffs, &self.ring);
        let moved = self.substitute(&forward)?;
        let q = moved.colon_last_variable(infinite)?;
        q.substitute(&backward)
    }

    /// Coordinates in which the linear form `h` is the last variable.
    pub(crate) fn move_to_last(&self, h: &Polynomial) -> Result<Ideal> {
        let coeffs = linear_coefficients(h)
            .filter(|c| c.iter().any(|x| !x.is_zero()))
            .ok_or_else(|| Error::invalid("expected a nonzero linear form"))?;
        let (forward, _) = straighten(&coeffs, &self.ring);
        self.substitute(&forward)
    }

    pub fn saturate_by_variable(&self, k: usize) -> Result<Ideal> {
        self.colon_linear_form(&self.ring.var(k), true)
    }

    /// `I : J` as the intersection of the quotients by the generators of `J`.
    pub fn ideal_quotient(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let q = self.quotient_by_element(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// `I : (g) = (I ∩ (g)) / g`.
    fn quotient_by_element(&self, g: &Polynomial) -> Result<Ideal> {
        if g.is_constant() {
            return Ok(self.clone());
        }
        if self.homogeneous && linear_coefficients(g).is_some() {
            return self.colon_linear_form(g, false);
        }
        let principal = Ideal::new(&self.ring, vec![g.clone()])?;
        let meet = self.intersect(&principal)?;
        let gens = meet
            .gens
            .iter()
            .map(|f| divide_exact(f, g).ok_or_else(|| Error::Inconsistent("quotient division".into())))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// `I : J^∞`, iterating quotients until the chain stabilizes.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        if let Some(h) = (other.gens.len() == 1).then(|| &other.gens[0]) {
            if self.homogeneous && linear_coefficients(h).is_some() {
                return self.colon_linear_form(h, true);
            }
        }
        let mut cur = self.clone();
        loop {
            let next = cur.ideal_quotient(other)?;
            if next.is_subset_of(&cur)? {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Saturation by the irrelevant ideal. Tries `I : h^∞` for variables and
    /// then small random linear forms `h`; the candidate is accepted when its
    /// Hilbert polynomial equals that of `I` (then the two saturated ideals
    /// differ by a finite length module, hence agree). Falls back to iterated
    /// quotients.
    pub fn saturate_irrelevant(&self) -> Result<Ideal> {
        self.require_homogeneous()?;
        if self.saturated {
            return Ok(self.clone());
        }
        let n = self.ring.nvars();
        let target = self.hilbert()?;
        if target.krull_dim == 0 {
            return Ok(Ideal::unit(&self.ring));
        }
        let accept = |cand: Ideal| -> Result<Option<Ideal>> {
            let data = cand.hilbert()?;
            let same = data.krull_dim == target.krull_dim
                && (0..=target.krull_dim as i64 + 1)
                    .all(|k| data.hilbert_polynomial(k) == target.hilbert_polynomial(k));
            Ok(same.then(|| cand.mark_saturated()))
        };
        for k in (0..n).rev() {
            if let Some(j) = accept(self.saturate_by_variable(k)?)? {
                return Ok(j.minimalized()?);
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(SATURATION_SEED);
        for _ in 0..3 {
            let h = (0..n).fold(self.ring.zero(), |acc, k| {
                acc.add(&self.ring.var(k).scale(&self.field().from_i64(rng.gen_range(-3..=3))))
            });
            if h.is_zero() {
                continue;
            }
            if let Some(j) = accept(self.colon_linear_form(&h, true)?)? {
                return Ok(j.minimalized()?);
            }
        }
        Ok(self.saturate(&Ideal::irrelevant(&self.ring))?.mark_saturated())
    }

    /// Same ideal, generated by its reduced grevlex basis.
    pub fn minimalized(&self) -> Result<Ideal> {
        let basis = self.groebner_basis(MonomialOrder::Grevlex)?;
        let mut out = Ideal::with_basis(&self.ring, basis.to_vec(), MonomialOrder::Grevlex);
        out.saturated = self.saturated;
        out.homogeneous = self.homogeneous;
        Ok(out)
    }

    /// `I ∩ J` as `(t I + (1 - t) J) ∩ R`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let big = extend_ring(&self.ring, 1, "t");
        let n = self.ring.nvars();
        let t = big.var(n);
        let one_minus_t = big.one().sub(&t);
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| embed(g, &big).mul(&t)).collect();
        gens.extend(other.gens.iter().map(|g| embed(g, &big).mul(&one_minus_t)));
        let mut out = Ideal::new(&big, gens)?.eliminate(1)?;
        out.ring = self.ring.clone();
        out.gens = out.gens.iter().map(|g| restrict(g, &self.ring)).collect();
        let basis = out.gens.clone();
        let mut out = Ideal::with_basis(&self.ring, basis, MonomialOrder::Grevlex);
        out.homogeneous = self.homogeneous && other.homogeneous;
        Ok(out)
    }

    /// Homogeneous generators of degree `d`.
    pub fn generators_of_degree(&self, d: u32) -> Vec<Polynomial> {
        self.gens
            .iter()
            .filter(|g| g.degree() == Some(d))
            .cloned()
            .collect()
    }

    /// Linear forms spanning the degree-one part of the ideal.
    pub fn linear_part(&self) -> Result<Vec<Polynomial>> {
        self.basis_of_degree(MonomialOrder::Grevlex, 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    fn ring(n: usize) -> Arc<PolynomialRing> {
        PolynomialRing::standard(n, Field::Rational)
    }

    fn ideal(r: &Arc<PolynomialRing>, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse_poly(g, r).unwrap()).collect()).unwrap()
    }

    fn strs(b: &[Polynomial]) -> Vec<String> {
        b.iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = ring(3);
        let i = ideal(&r, &["x0^2", "x0*x1"]);
        let b = i.groebner_basis(MonomialOrder::Grevlex).unwrap();
        assert_eq!(strs(&b), vec!["x0*x1", "x0^2"]);
    }

    #[test]
    fn twisted_cubic_basis() {
        let r = ring(4);
        let i = ideal(&r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]);
        let b = i.groebner_basis(MonomialOrder::Grevlex).unwrap();
        assert_eq!(b.len(), 3);
        assert!(is_groebner_basis(&b));
        for g in i.gens() {
            assert!(i.contains(g).unwrap());
        }
    }

    #[test]
    fn normal_forms() {
        let r = ring(3);
        let i = ideal(&r, &["x0*x2 - x1^2"]);
        let f = parse_poly("x0*x2", &r).unwrap();
        assert_eq!(i.normal_form(&f, MonomialOrder::Lex).unwrap().to_string(), "x1^2");
        assert_eq!(i.normal_form(&r.one(), MonomialOrder::Grevlex).unwrap(), r.one());
        assert!(i.contains(&i.gens()[0]).unwrap());
    }

    #[test]
    fn elimination() {
        let r = ring(3);
        let i = ideal(&r, &["x2 - x0", "x1"]);
        let e = i.eliminate(1).unwrap();
        assert_eq!(e.ring().nvars(), 2);
        assert_eq!(strs(e.gens()), vec!["x1"]);
        assert!(i.eliminate(0).unwrap().same_ideal(&i).unwrap());
        assert!(i.eliminate(3).is_err());

        let names = ["y0", "y1", "y2", "s", "t"].map(String::from).to_vec();
        let g = PolynomialRing::new(names, Field::Rational).unwrap();
        let graph = ideal(&g, &["y0 - s^2", "y1 - s*t", "y2 - t^2"]);
        let e = graph.eliminate(2).unwrap();
        assert_eq!(strs(e.gens()), vec!["y1^2 - y0*y2"]);
    }

    #[test]
    fn quotients() {
        let r = ring(3);
        let q = ideal(&r, &["x0*x1"]).ideal_quotient(&ideal(&r, &["x0"])).unwrap();
        assert!(q.same_ideal(&ideal(&r, &["x1"])).unwrap());
        let i = ideal(&r, &["x0^2", "x0*x1"]);
        let q = i.ideal_quotient(&ideal(&r, &["x0"])).unwrap();
        assert!(q.same_ideal(&ideal(&r, &["x0", "x1"])).unwrap());
        assert!(i.ideal_quotient(&Ideal::unit(&r)).unwrap().same_ideal(&i).unwrap());
        // a quotient by a non-linear element goes through intersection
        let q = ideal(&r, &["x0^2*x1", "x2^3"]).ideal_quotient(&ideal(&r, &["x0*x1"])).unwrap();
        assert!(q.same_ideal(&ideal(&r, &["x0", "x2^3"])).unwrap());
    }

    #[test]
    fn saturations() {
        let r = ring(3);
        let s = ideal(&r, &["x0*x1", "x0*x2"]).saturate(&ideal(&r, &["x0"])).unwrap();
        assert!(s.same_ideal(&ideal(&r, &["x1", "x2"])).unwrap());
        let s = ideal(&r, &["x0^2*x1"]).saturate(&ideal(&r, &["x0"])).unwrap();
        assert!(s.same_ideal(&ideal(&r, &["x1"])).unwrap());
        let prime = ideal(&r, &["x0*x2 - x1^2"]);
        assert!(prime.saturate_irrelevant().unwrap().same_ideal(&prime).unwrap());
        // a conic with an embedded component at the irrelevant ideal
        let dirty = prime.intersect(&ideal(&r, &["x0^3", "x1^3", "x2^3"])).unwrap();
        assert!(!dirty.same_ideal(&prime).unwrap());
        assert!(dirty.saturate_irrelevant().unwrap().same_ideal(&prime).unwrap());
        let generic = dirty.saturate(&Ideal::irrelevant(&r)).unwrap();
        assert!(generic.same_ideal(&prime).unwrap());
    }

    #[test]
    fn saturation_needs_a_generic_divisor() {
        // every variable vanishes on some component of two points
        let r = ring(3);
        let pts = ideal(&r, &["x1", "x2"]).intersect(&ideal(&r, &["x0", "x2"])).unwrap();
        let pts = pts.intersect(&ideal(&r, &["x0", "x1"])).unwrap();
        let dirty = pts.sum(&ideal(&r, &["x0^4", "x1^4", "x2^4"])).unwrap();
        let pts_dirty = pts.intersect(&dirty).unwrap();
        let sat = pts_dirty.saturate_irrelevant().unwrap();
        assert!(sat.same_ideal(&pts).unwrap());
    }

    #[test]
    fn intersections() {
        let r = ring(3);
        let i = ideal(&r, &["x0"]).intersect(&ideal(&r, &["x1"])).unwrap();
        assert!(i.same_ideal(&ideal(&r, &["x0*x1"])).unwrap());
        let a = ideal(&r, &["x0", "x1"]);
        assert!(a.intersect(&a).unwrap().same_ideal(&a).unwrap());
        let i = a.intersect(&ideal(&r, &["x0", "x2"])).unwrap();
        assert!(i.same_ideal(&ideal(&r, &["x0", "x1*x2"])).unwrap());
    }

    #[test]
    fn linear_changes() {
        let r = ring(3);
        let q = Field::Rational;
        let i = ideal(&r, &["x0*x2 - x1^2"]);
        let id = linalg::identity(3, q);
        assert_eq!(i.apply_linear_change(&id).unwrap().gens(), i.gens());
        let swap: Matrix = vec![
            vec![q.zero(), q.one(), q.zero()],
            vec![q.one(), q.zero(), q.zero()],
            vec![q.zero(), q.zero(), q.one()],
        ];
        let twice = i.apply_linear_change(&swap).unwrap().apply_linear_change(&swap).unwrap();
        assert_eq!(twice.gens(), i.gens());
        let sing: Matrix = vec![vec![q.one(); 3]; 3];
        assert!(matches!(i.apply_linear_change(&sing), Err(Error::SingularMatrix)));
        assert!(matches!(
            i.apply_linear_change(&linalg::identity(2, q)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn colon_by_linear_form_matches_general_quotient() {
        let r = ring(3);
        let i = ideal(&r, &["x0^2 - x1^2", "x0*x1*x2"]);
        let h = parse_poly("x0 + 2*x1 - x2", &r).unwrap();
        let fast = i.colon_linear_form(&h, false).unwrap();
        let principal = Ideal::new(&r, vec![h.clone()]).unwrap();
        let meet = i.intersect(&principal).unwrap();
        let slow = Ideal::new(
            &r,
            meet.gens().iter().map(|f| divide_exact(f, &h).unwrap()).collect(),
        )
        .unwrap();
        assert!(fast.same_ideal(&slow).unwrap());
    }

    #[test]
    fn hyperplane_section_of_twisted_cubic() {
        let r = ring(4);
        let i = ideal(&r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]);
        let pts = i.hyperplane_section(&[1, -2, 3]).unwrap().saturate_irrelevant().unwrap();
        let data = pts.hilbert().unwrap();
        assert_eq!((data.projective_dim(), data.degree), (0, 3));
    }
}
