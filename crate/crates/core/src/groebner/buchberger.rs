//! Buchberger's algorithm with the Gebauer–Möller installation of the
//! coprime and chain criteria, normal selection strategy and sugar degrees.

use std::cmp::Ordering;
use std::sync::RwLock;
#[cfg(not(target_arch = "wasm32"))]
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, Polynomial, Scalar, Term};

/// Hard caps for a single basis computation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of S-pairs reduced.
    pub max_pairs: Option<usize>,
    /// Wall-clock limit in seconds, measured per basis computation.
    pub time_limit_secs: Option<u64>,
}

static DEFAULT_BUDGET: RwLock<Budget> = RwLock::new(Budget {
    max_pairs: None,
    time_limit_secs: None,
});

/// Installs the process-wide budget applied to every basis computation.
pub fn set_default_budget(budget: Budget) {
    *DEFAULT_BUDGET.write().expect("budget lock") = budget;
}

pub fn default_budget() -> Budget {
    *DEFAULT_BUDGET.read().expect("budget lock")
}

struct Clock {
    #[cfg(not(target_arch = "wasm32"))]
    deadline: Option<Instant>,
}

impl Clock {
    fn start(budget: &Budget) -> Clock {
        #[cfg(not(target_arch = "wasm32"))]
        {
            Clock {
                deadline: budget
                    .time_limit_secs
                    .map(|s| Instant::now() + Duration::from_secs(s)),
            }
        }
        #[cfg(target_arch = "wasm32")]
        {
            let _ = budget;
            Clock {}
        }
    }

    fn expired(&self) -> bool {
        #[cfg(not(target_arch = "wasm32"))]
        {
            self.deadline.is_some_and(|d| Instant::now() > d)
        }
        #[cfg(target_arch = "wasm32")]
        {
            false
        }
    }
}

struct Entry {
    poly: Polynomial,
    lm: Monomial,
    sugar: u32,
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Full reduction of `f` modulo `reducers` (all with the same order as `f`).
pub(crate) fn reduce(f: &Polynomial, reducers: &[&Polynomial]) -> Polynomial {
    let order = f.order();
    let ring = f.ring().clone();
    let mut rem: Vec<Term> = Vec::new();
    let mut p = f.clone();
    while let Some(lt) = p.leading_term().cloned() {
        let reducer = reducers
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|m| m.divides(&lt.mono)));
        match reducer {
            Some(g) => {
                let glt = g.leading_term().unwrap();
                let m = lt.mono.div(&glt.mono).unwrap();
                let c = lt.coeff.div(&glt.coeff).unwrap();
                p = p.add_scaled(&-c, &m, g);
            }
            None => {
                let mut terms = p.into_terms();
                let head = terms.remove(0);
                rem.push(head);
                p = Polynomial::from_sorted(ring.clone(), order, terms);
            }
        }
    }
    Polynomial::from_sorted(ring, order, rem)
}

fn spoly(a: &Entry, b: &Entry, lcm: &Monomial) -> Polynomial {
    let ma = lcm.div(&a.lm).unwrap();
    let mb = lcm.div(&b.lm).unwrap();
    let one = a.poly.field().one();
    a.poly.mul_monomial(&ma).add_scaled(&-one, &mb, &b.poly)
}

fn pair_sugar(a: &Entry, b: &Entry, lcm: &Monomial) -> u32 {
    let da = a.sugar + lcm.degree() - a.lm.degree();
    let db = b.sugar + lcm.degree() - b.lm.degree();
    da.max(db)
}

struct Engine {
    order: MonomialOrder,
    entries: Vec<Entry>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl Engine {
    fn insert(&mut self, poly: Polynomial, sugar: u32) {
        let lm = poly.leading_monomial().unwrap().clone();
        let h = self.entries.len();
        self.entries.push(Entry { poly, lm, sugar });
        let hlm = self.entries[h].lm.clone();

        // Candidate pairs (h, g) for active g.
        let cands: Vec<(usize, Monomial)> = self
            .active
            .iter()
            .map(|&g| (g, hlm.lcm(&self.entries[g].lm)))
            .collect();
        let mut keep: Vec<(usize, Monomial)> = Vec::new();
        for (idx, (g, lcm)) in cands.iter().enumerate() {
            let coprime = hlm.is_coprime(&self.entries[*g].lm);
            let dominated = cands[idx + 1..].iter().any(|(_, l2)| l2.divides(lcm))
                || keep.iter().any(|(_, l2)| l2.divides(lcm));
            if coprime || !dominated {
                keep.push((*g, lcm.clone()));
            }
        }
        let new_pairs: Vec<Pair> = keep
            .into_iter()
            .filter(|(g, _)| !hlm.is_coprime(&self.entries[*g].lm))
            .map(|(g, lcm)| {
                let sugar = pair_sugar(&self.entries[h], &self.entries[g], &lcm);
                Pair { i: g, j: h, lcm, sugar }
            })
            .collect();

        let entries = &self.entries;
        self.pairs.retain(|p| {
            if !hlm.divides(&p.lcm) {
                return true;
            }
            let l1 = entries[p.i].lm.lcm(&hlm);
            let l2 = entries[p.j].lm.lcm(&hlm);
            l1 == p.lcm || l2 == p.lcm
        });
        self.pairs.extend(new_pairs);
        self.active.retain(|&g| !hlm.divides(&entries[g].lm));
        self.active.push(h);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn reducers(&self) -> Vec<&Polynomial> {
        self.active.iter().map(|&g| &self.entries[g].poly).collect()
    }
}

fn unit_basis(like: &Polynomial, order: MonomialOrder) -> Vec<Polynomial> {
    let ring = like.ring();
    let one = Polynomial::from_sorted(
        ring.clone(),
        order,
        vec![Term {
            mono: Monomial::one(ring.nvars()),
            coeff: ring.field().one(),
        }],
    );
    vec![one]
}

/// Canonical processing order of the input: degree, then leading term, then tails.
fn canonical_cmp(order: MonomialOrder, a: &Polynomial, b: &Polynomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for (ta, tb) in a.terms().iter().zip(b.terms()) {
            let c = order.cmp(&ta.mono, &tb.mono);
            if c != Ordering::Equal {
                return c;
            }
        }
        a.len().cmp(&b.len())
    })
}

/// Reduced Groebner basis of the ideal generated by `gens` under `order`,
/// sorted by increasing leading monomial, every element monic.
pub fn groebner_basis(gens: &[Polynomial], order: MonomialOrder) -> Result<Vec<Polynomial>> {
    groebner_basis_with_budget(gens, order, &default_budget())
}

pub fn groebner_basis_with_budget(
    gens: &[Polynomial],
    order: MonomialOrder,
    budget: &Budget,
) -> Result<Vec<Polynomial>> {
    let mut input: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.reorder(order).monic())
        .collect();
    if input.is_empty() {
        return Ok(Vec::new());
    }
    if input.iter().any(|g| g.is_constant()) {
        return Ok(unit_basis(&input[0], order));
    }
    input.sort_by(|a, b| canonical_cmp(order, a, b));
    input.dedup();

    let clock = Clock::start(budget);
    let mut eng = Engine {
        order,
        entries: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for g in input {
        let sugar = g.degree().unwrap();
        let r = reduce(&g, &eng.reducers());
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(unit_basis(&r, order));
        }
        eng.insert(r.monic(), sugar);
    }

    let mut processed = 0usize;
    while let Some(pair) = eng.next_pair() {
        processed += 1;
        if budget.max_pairs.is_some_and(|m| processed > m) || (processed % 16 == 0 && clock.expired()) {
            return Err(Error::BudgetExceeded {
                degree: pair.sugar,
                pairs: processed,
            });
        }
        let s = spoly(&eng.entries[pair.i], &eng.entries[pair.j], &pair.lcm);
        let r = reduce(&s, &eng.reducers());
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(unit_basis(&r, order));
        }
        eng.insert(r.monic(), pair.sugar);
    }

    // Interreduce the minimal basis.
    let minimal: Vec<Polynomial> = eng
        .active
        .iter()
        .map(|&g| eng.entries[g].poly.clone())
        .collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for (k, g) in minimal.iter().enumerate() {
        let others: Vec<&Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != k)
            .map(|(_, p)| p)
            .collect();
        let lt = g.leading_term().unwrap().clone();
        let tail = Polynomial::from_sorted(g.ring().clone(), order, g.terms()[1..].to_vec());
        let tail = reduce(&tail, &others);
        let mut terms = vec![lt];
        terms.extend(tail.into_terms());
        reduced.push(Polynomial::from_sorted(g.ring().clone(), order, terms).monic());
    }
    reduced.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    Ok(reduced)
}

/// Whether `basis` satisfies Buchberger's criterion (all S-pairs reduce to zero).
pub fn is_groebner_basis(basis: &[Polynomial]) -> bool {
    let refs: Vec<&Polynomial> = basis.iter().collect();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let a = &basis[i];
            let b = &basis[j];
            let (la, lb) = (a.leading_term().unwrap(), b.leading_term().unwrap());
            let lcm = la.mono.lcm(&lb.mono);
            let sa = a.mul_monomial(&lcm.div(&la.mono).unwrap()).scale(&la.coeff.inv().unwrap());
            let sb = b.mul_monomial(&lcm.div(&lb.mono).unwrap()).scale(&lb.coeff.inv().unwrap());
            if !reduce(&sa.sub(&sb), &refs).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Exact quotient `f / g`; `None` when `g` does not divide `f`.
pub fn divide_exact(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    let order = f.order();
    let g = g.reorder(order);
    let glt = g.leading_term()?.clone();
    let mut p = f.clone();
    let mut quot: Vec<Term> = Vec::new();
    while let Some(lt) = p.leading_term().cloned() {
        let m = lt.mono.div(&glt.mono)?;
        let c: Scalar = lt.coeff.div(&glt.coeff).unwrap();
        p = p.add_scaled(&-c.clone(), &m, &g);
        quot.push(Term { mono: m, coeff: c });
    }
    Some(Polynomial::from_terms(f.ring().clone(), order, quot))
}
