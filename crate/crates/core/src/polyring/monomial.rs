use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

type Exps = SmallVec<[u16; 20]>;

/// A power product `x0^e0 * ... * xr^er` with cached total degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
    deg: u32,
    // bit (k mod 32) set when variable k occurs; a necessary condition for divisibility
    mask: u32,
}

impl Monomial {
    pub fn new(exps: &[u16]) -> Monomial {
        let exps: Exps = exps.iter().copied().collect();
        Self::from_exps(exps)
    }

    fn from_exps(exps: Exps) -> Monomial {
        let mut deg = 0u32;
        let mut mask = 0u32;
        for (k, &e) in exps.iter().enumerate() {
            deg += e as u32;
            if e > 0 {
                mask |= 1 << (k % 32);
            }
        }
        Monomial { exps, deg, mask }
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            deg: 0,
            mask: 0,
        }
    }

    pub fn var(nvars: usize, k: usize) -> Monomial {
        let mut exps: Exps = SmallVec::from_elem(0, nvars);
        exps[k] = 1;
        Self::from_exps(exps)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, k: usize) -> u16 {
        self.exps[k]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps: Exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            deg: self.deg + other.deg,
            mask: self.mask | other.mask,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.mask & !other.mask == 0
            && self.deg <= other.deg
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps: Exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a - b)
            .collect();
        Some(Self::from_exps(exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Self::from_exps(exps)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.min(b))
            .collect();
        Self::from_exps(exps)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.mask & other.mask == 0
            || self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Reorders or embeds variables: variable `k` of `self` becomes variable `map[k]`.
    pub fn remap(&self, map: &[usize], nvars: usize) -> Monomial {
        let mut exps: Exps = SmallVec::from_elem(0, nvars);
        for (k, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                exps[map[k]] += e;
            }
        }
        Self::from_exps(exps)
    }

    /// Total degree in the variables `range`.
    pub fn partial_degree(&self, range: std::ops::Range<usize>) -> u32 {
        self.exps[range].iter().map(|&e| e as u32).sum()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// Monomial orders with `x0 > x1 > ... > xr`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Block order eliminating the last `k` variables: grevlex on that block
    /// decides first, grevlex on the remaining variables breaks ties.
    Elim(usize),
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().rev().zip(b.iter().rev()) {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => a.deg.cmp(&b.deg).then_with(|| {
                for (x, y) in a.exps.iter().rev().zip(b.exps.iter().rev()) {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Elim(k) => {
                let n = a.nvars();
                let split = n - k.min(n);
                grevlex(&a.exps[split..], &b.exps[split..])
                    .then_with(|| grevlex(&a.exps[..split], &b.exps[..split]))
            }
        }
    }

    /// Whether a comparison first looks at total degree.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Elim(k) => write!(f, "elim({k})"),
        }
    }
}
