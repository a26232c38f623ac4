use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::monomial::{Monomial, MonomialOrder};
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// `K[x0, ..., xr]` with named variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolynomialRing {
    names: Vec<String>,
    field: Field,
}

impl PolynomialRing {
    /// A ring with the given variable names; at least two variables (so `r >= 1`).
    pub fn new(names: Vec<String>, field: Field) -> Result<Arc<PolynomialRing>> {
        if names.len() < 2 {
            return Err(Error::invalid("a polynomial ring needs at least two variables"));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !n.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(Error::invalid(format!("bad variable name `{n}`")));
            }
            if !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::invalid(format!("bad variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::invalid(format!("duplicate variable `{n}`")));
            }
        }
        Ok(Arc::new(PolynomialRing { names, field }))
    }

    /// `K[x0, ..., x{n-1}]`.
    pub fn standard(nvars: usize, field: Field) -> Arc<PolynomialRing> {
        Self::with_prefix("x", nvars, field)
    }

    pub fn with_prefix(prefix: &str, nvars: usize, field: Field) -> Arc<PolynomialRing> {
        let names = (0..nvars).map(|k| format!("{prefix}{k}")).collect();
        Self::new(names, field).expect("generated names are valid")
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn with_field(&self, field: Field) -> Arc<PolynomialRing> {
        Arc::new(PolynomialRing {
            names: self.names.clone(),
            field,
        })
    }

    /// `x0..xr` when the names follow that pattern, else the comma separated list.
    pub fn header(&self) -> String {
        let standard = self
            .names
            .iter()
            .enumerate()
            .all(|(k, n)| *n == format!("x{k}"));
        if standard {
            format!("x0..x{}", self.nvars() - 1)
        } else {
            self.names.join(",")
        }
    }
}

/// Convenience constructors that need the shared ring handle.
pub trait RingExt {
    fn var(&self, k: usize) -> Polynomial;
    fn zero(&self) -> Polynomial;
    fn one(&self) -> Polynomial;
    fn constant(&self, c: Scalar) -> Polynomial;
    fn monomial(&self, c: Scalar, m: Monomial) -> Polynomial;
}

impl RingExt for Arc<PolynomialRing> {
    fn var(&self, k: usize) -> Polynomial {
        let one = self.field.one();
        self.monomial(one, Monomial::var(self.nvars(), k))
    }

    fn zero(&self) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            order: MonomialOrder::Grevlex,
            terms: Vec::new(),
        }
    }

    fn one(&self) -> Polynomial {
        self.constant(self.field.one())
    }

    fn constant(&self, c: Scalar) -> Polynomial {
        self.monomial(c, Monomial::one(self.nvars()))
    }

    fn monomial(&self, c: Scalar, m: Monomial) -> Polynomial {
        Polynomial::from_terms(self.clone(), MonomialOrder::Grevlex, vec![Term { mono: m, coeff: c }])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: Scalar,
}

/// Sparse polynomial; terms sorted descending under `order`, no zero coefficients,
/// no repeated monomials.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolynomialRing>,
    order: MonomialOrder,
    terms: Vec<Term>,
}

impl Polynomial {
    /// Normalizes an arbitrary term list.
    pub fn from_terms(ring: Arc<PolynomialRing>, order: MonomialOrder, terms: Vec<Term>) -> Polynomial {
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(terms.len());
        for t in terms {
            debug_assert_eq!(t.mono.nvars(), ring.nvars());
            match acc.get_mut(&t.mono) {
                Some(c) => *c = &*c + &t.coeff,
                None => {
                    acc.insert(t.mono, t.coeff);
                }
            }
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mono, coeff)| Term { mono, coeff })
            .collect();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial { ring, order, terms }
    }

    /// Trusts that `terms` is already normalized under `order`.
    pub(crate) fn from_sorted(ring: Arc<PolynomialRing>, order: MonomialOrder, terms: Vec<Term>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial { ring, order, terms }
    }

    pub fn ring(&self) -> &Arc<PolynomialRing> {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Maximal total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.mono.degree();
                self.terms.iter().all(|s| s.mono.degree() == d)
            }
        }
    }

    /// Highest power of `x_var` occurring.
    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|t| t.mono.exp(var)).max().unwrap_or(0)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.mono.exp(var) > 0)
    }

    pub fn reorder(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial {
            ring: self.ring.clone(),
            order,
            terms,
        }
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "polynomials from different rings"
        );
    }

    fn aligned<'a>(&self, other: &'a Polynomial) -> std::borrow::Cow<'a, Polynomial> {
        self.check_ring(other);
        if other.order == self.order {
            std::borrow::Cow::Borrowed(other)
        } else {
            std::borrow::Cow::Owned(other.reorder(self.order))
        }
    }

    /// `self + scale * mono * other`, merging sorted term lists.
    pub(crate) fn add_scaled(&self, scale: &Scalar, mono: &Monomial, other: &Polynomial) -> Polynomial {
        let other = self.aligned(other);
        let order = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|t| Term {
            mono: t.mono.mul(mono),
            coeff: &t.coeff * scale,
        });
        let mut next_b = b.next();
        loop {
            match (a.peek(), next_b.take()) {
                (None, None) => break,
                (Some(_), None) => {
                    out.push(a.next().unwrap().clone());
                }
                (None, Some(tb)) => {
                    out.push(tb);
                    next_b = b.next();
                }
                (Some(ta), Some(tb)) => match order.cmp(&ta.mono, &tb.mono) {
                    Ordering::Greater => {
                        out.push(a.next().unwrap().clone());
                        next_b = Some(tb);
                    }
                    Ordering::Less => {
                        out.push(tb);
                        next_b = b.next();
                    }
                    Ordering::Equal => {
                        let c = &ta.coeff + &tb.coeff;
                        if !c.is_zero() {
                            out.push(Term { mono: tb.mono, coeff: c });
                        }
                        a.next();
                        next_b = b.next();
                    }
                },
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            order,
            terms: out,
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let one = self.field().one();
        self.add_scaled(&one, &Monomial::one(self.ring.nvars()), other)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let m1 = -self.field().one();
        self.add_scaled(&m1, &Monomial::one(self.ring.nvars()), other)
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-self.field().one())
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial {
                ring: self.ring.clone(),
                order: self.order,
                terms: Vec::new(),
            };
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                mono: t.mono.clone(),
                coeff: &t.coeff * c,
            })
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            order: self.order,
            terms,
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                mono: t.mono.mul(m),
                coeff: t.coeff.clone(),
            })
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            order: self.order,
            terms,
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for a in &self.terms {
            for b in &other.terms {
                let m = a.mono.mul(&b.mono);
                let c = &a.coeff * &b.coeff;
                match acc.get_mut(&m) {
                    Some(x) => *x = &*x + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mono, coeff)| Term { mono, coeff })
            .collect::<Vec<_>>();
        let mut p = Polynomial {
            ring: self.ring.clone(),
            order: self.order,
            terms,
        };
        let order = self.order;
        p.terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        p
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.one().reorder(self.order);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero")),
        }
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.nvars(),
                found: point.len(),
            });
        }
        let field = self.field();
        let mut total = field.zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (k, &e) in t.mono.exps().iter().enumerate() {
                for _ in 0..e {
                    v = &v * &point[k];
                }
            }
            total = &total + &v;
        }
        Ok(total)
    }

    /// Substitutes `images[k]` for `x_k`; the result lives in the ring of the images.
    pub fn compose(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars());
        let target = images[0].ring().clone();
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![target.one().reorder(p.order()), p.clone()])
            .collect();
        let mut acc = target.zero();
        for t in &self.terms {
            let mut prod = target.constant(t.coeff.clone());
            for (k, &e) in t.mono.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[k].len() <= e as usize {
                    let next = powers[k].last().unwrap().mul(&images[k]);
                    powers[k].push(next);
                }
                prod = prod.mul(&powers[k][e as usize]);
            }
            acc = acc.add(&prod);
        }
        acc
    }

    /// Moves to `target` sending variable `k` to `map[k]`.
    pub fn remap(&self, target: &Arc<PolynomialRing>, map: &[usize]) -> Polynomial {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                mono: t.mono.remap(map, n),
                coeff: t.coeff.clone(),
            })
            .collect();
        Polynomial::from_terms(target.clone(), self.order, terms)
    }

    /// Same polynomial over another field (reduction mod p of rational coefficients).
    pub fn change_field(&self, ring: &Arc<PolynomialRing>) -> Result<Polynomial> {
        let field = ring.field();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Ok(Term {
                    mono: t.mono.clone(),
                    coeff: field.convert(&t.coeff)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_terms(ring.clone(), self.order, terms))
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let field = self.field();
        let terms = self
            .terms
            .iter()
            .filter(|t| t.mono.exp(var) > 0)
            .map(|t| {
                let e = t.mono.exp(var);
                let mut exps = t.mono.exps().to_vec();
                exps[var] -= 1;
                Term {
                    mono: Monomial::new(&exps),
                    coeff: &t.coeff * &field.from_i64(e as i64),
                }
            })
            .collect();
        Polynomial::from_terms(self.ring.clone(), self.order, terms)
    }

    /// Part of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.mono.degree() == d)
            .cloned()
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            order: self.order,
            terms,
        }
    }

    /// Coefficient of the monomial, zero when absent.
    pub fn coeff_of(&self, m: &Monomial) -> Scalar {
        self.terms
            .iter()
            .find(|t| &t.mono == m)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(|| self.field().zero())
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Polynomial) -> bool {
        if self.ring != other.ring {
            return false;
        }
        if self.order == other.order {
            self.terms == other.terms
        } else {
            self.terms == other.reorder(self.order).terms
        }
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

pub(crate) fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (k, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[k].clone()),
            _ => parts.push(format!("{}^{}", names[k], e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ring.names();
        for (i, t) in self.terms.iter().enumerate() {
            let (neg, mag) = t.coeff.sign_split();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = format_monomial(&t.mono, names);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}
