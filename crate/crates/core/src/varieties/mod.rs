//! Corpus varieties: Veronese and Segre embeddings, rational normal scrolls,
//! linear sections of `G(1,4)` and complete intersections, with their
//! parametrizations and section ring profiles.

mod corpus;
mod profile;

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use corpus::{parse_variety_spec, quadric_hypersurface};
pub use profile::SectionRingProfile;

use crate::error::{Error, Result};
use crate::groebner::{extend_ring, Ideal};
use crate::linalg;
use crate::polyring::{Field, Monomial, MonomialOrder, Polynomial, PolynomialRing, RingExt, Scalar, Term};

/// Default caps keeping constructions at desk scale.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeCaps {
    pub max_ambient_dim: usize,
    pub max_generator_degree: u32,
}

impl Default for SizeCaps {
    fn default() -> SizeCaps {
        SizeCaps {
            max_ambient_dim: 12,
            max_generator_degree: 4,
        }
    }
}

/// A polynomial map from a source space, one form per target coordinate.
/// Forms are homogeneous of a common degree for the source `weights`.
#[derive(Clone, Debug)]
pub struct Parametrization {
    pub source: String,
    pub source_ring: Arc<PolynomialRing>,
    pub weights: Vec<u32>,
    pub forms: Vec<Polynomial>,
}

impl Parametrization {
    fn new(source: &str, source_ring: Arc<PolynomialRing>, weights: Vec<u32>, forms: Vec<Polynomial>) -> Parametrization {
        debug_assert_eq!(weights.len(), source_ring.nvars());
        let p = Parametrization {
            source: source.to_string(),
            source_ring,
            weights,
            forms,
        };
        debug_assert!(p.weighted_degree().is_some());
        p
    }

    /// Common weighted degree of the forms.
    pub fn weighted_degree(&self) -> Option<u32> {
        let deg = |m: &Monomial| -> u32 {
            m.exps().iter().zip(&self.weights).map(|(&e, &w)| e as u32 * w).sum()
        };
        let mut out = None;
        for f in &self.forms {
            for t in f.terms() {
                let d = deg(&t.mono);
                match out {
                    None => out = Some(d),
                    Some(o) if o != d => return None,
                    _ => {}
                }
            }
        }
        out
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Vec<Scalar>> {
        self.forms.iter().map(|f| f.evaluate(point)).collect()
    }

    pub fn change_field(&self, field: Field) -> Result<Parametrization> {
        let ring = self.source_ring.with_field(field);
        Ok(Parametrization {
            source: self.source.clone(),
            source_ring: ring.clone(),
            weights: self.weights.clone(),
            forms: self
                .forms
                .iter()
                .map(|f| f.change_field(&ring))
                .collect::<Result<_>>()?,
        })
    }
}

/// A property asserted for a family, kept as metadata only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub property: String,
    pub holds: bool,
    pub statement: String,
}

/// Secant strata expected for a family, and those that targeted sampling must reach.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectedStrata {
    pub strata: Vec<i64>,
    pub witnesses: Vec<i64>,
}

/// A projective variety `X ⊂ P^r` with a saturated ideal.
#[derive(Clone, Debug)]
pub struct Variety {
    name: String,
    ideal: Ideal,
    parametrization: Option<Parametrization>,
    profile: Option<SectionRingProfile>,
    claims: Vec<Claim>,
    expected_strata: Option<ExpectedStrata>,
}

impl Variety {
    /// A variety from an arbitrary homogeneous ideal; the ideal is saturated here.
    pub fn from_ideal(name: &str, ideal: Ideal) -> Result<Variety> {
        let ideal = ideal.saturate_irrelevant()?;
        Ok(Variety {
            name: name.to_string(),
            ideal,
            parametrization: None,
            profile: None,
            claims: Vec::new(),
            expected_strata: None,
        })
    }

    /// A variety from an ideal already known to be saturated.
    pub fn from_saturated(name: &str, ideal: Ideal) -> Variety {
        Variety {
            name: name.to_string(),
            ideal: ideal.mark_saturated(),
            parametrization: None,
            profile: None,
            claims: Vec::new(),
            expected_strata: None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &Arc<PolynomialRing> {
        self.ideal.ring()
    }

    pub fn field(&self) -> Field {
        self.ideal.field()
    }

    /// `r` for `X ⊂ P^r`.
    pub fn ambient_dim(&self) -> usize {
        self.ring().nvars() - 1
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn parametrization(&self) -> Option<&Parametrization> {
        self.parametrization.as_ref()
    }

    pub fn profile(&self) -> Option<&SectionRingProfile> {
        self.profile.as_ref()
    }

    pub fn claims(&self) -> &[Claim] {
        &self.claims
    }

    pub fn expected_strata(&self) -> Option<&ExpectedStrata> {
        self.expected_strata.as_ref()
    }

    /// The recorded `N_2` claim, if any.
    pub fn claims_n2(&self) -> Option<bool> {
        self.claims.iter().find(|c| c.property == "N2").map(|c| c.holds)
    }

    pub fn with_name(mut self, name: &str) -> Variety {
        self.name = name.to_string();
        self
    }

    pub fn with_profile(mut self, profile: SectionRingProfile) -> Variety {
        self.profile = Some(profile);
        self
    }

    pub fn with_claim(mut self, property: &str, holds: bool, statement: &str) -> Variety {
        self.claims.push(Claim {
            property: property.to_string(),
            holds,
            statement: statement.to_string(),
        });
        self
    }

    pub fn with_expected_strata(mut self, strata: Vec<i64>, witnesses: Vec<i64>) -> Variety {
        self.expected_strata = Some(ExpectedStrata { strata, witnesses });
        self
    }

    pub fn dim(&self) -> Result<i64> {
        Ok(self.ideal.hilbert()?.projective_dim())
    }

    pub fn degree(&self) -> Result<i64> {
        Ok(self.ideal.hilbert()?.degree)
    }

    pub fn codim(&self) -> Result<i64> {
        Ok(self.ambient_dim() as i64 - self.dim()?)
    }

    /// Whether the point lies on `X` (every generator vanishes).
    pub fn contains_point(&self, point: &[Scalar]) -> Result<bool> {
        for g in self.ideal.gens() {
            if !g.evaluate(point)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Same variety over another field.
    pub fn change_field(&self, field: Field) -> Result<Variety> {
        let mut out = self.clone();
        out.ideal = self.ideal.change_field(field)?.mark_saturated();
        out.parametrization = match &self.parametrization {
            Some(p) => Some(p.change_field(field)?),
            None => None,
        };
        Ok(out)
    }
}

fn check_caps(ambient: usize, caps: &SizeCaps) -> Result<()> {
    if ambient > caps.max_ambient_dim {
        return Err(Error::SizeCap(format!(
            "ambient dimension {ambient} exceeds the cap {}",
            caps.max_ambient_dim
        )));
    }
    Ok(())
}

/// Monomials of degree `d` in `n` variables, `x0^d` first (lex descending).
pub fn monomials_of_degree(n: usize, d: u16) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u16>, n: usize, left: u16, out: &mut Vec<Monomial>) {
        if prefix.len() == n - 1 {
            prefix.push(left);
            out.push(Monomial::new(prefix));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(prefix, n, left - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, d, &mut out);
    out
}

/// A linearly independent subset of `polys`, keeping earlier ones first.
pub fn independent_subset(polys: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut support: Vec<Monomial> = Vec::new();
    for p in &polys {
        for t in p.terms() {
            if !support.contains(&t.mono) {
                support.push(t.mono.clone());
            }
        }
    }
    let Some(field) = polys.first().map(|p| p.field()) else {
        return polys;
    };
    let mut kept = Vec::new();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for p in polys {
        let row: Vec<Scalar> = support.iter().map(|m| p.coeff_of(m)).collect();
        rows.push(row);
        if linalg::rank(&rows) == rows.len() {
            kept.push(p);
        } else {
            rows.pop();
        }
    }
    let _ = field;
    kept
}

/// `2 × 2` minors of a matrix of linear forms given by variable indices.
fn minors(ring: &Arc<PolynomialRing>, matrix: &[Vec<usize>]) -> Vec<Polynomial> {
    let rows = matrix.len();
    let cols = matrix[0].len();
    let mut out = Vec::new();
    for r1 in 0..rows {
        for r2 in r1 + 1..rows {
            for c1 in 0..cols {
                for c2 in c1 + 1..cols {
                    let a = ring.var(matrix[r1][c1]).mul(&ring.var(matrix[r2][c2]));
                    let b = ring.var(matrix[r1][c2]).mul(&ring.var(matrix[r2][c1]));
                    let m = a.sub(&b);
                    if !m.is_zero() {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// Kernel of the ring map `x_k -> forms[k]`, by eliminating the source
/// variables from the graph ideal.
pub fn implicitize(p: &Parametrization, target: &Arc<PolynomialRing>) -> Result<Ideal> {
    if p.forms.len() != target.nvars() {
        return Err(Error::DimensionMismatch {
            expected: target.nvars(),
            found: p.forms.len(),
        });
    }
    if p.weighted_degree().is_none() {
        return Err(Error::invalid("parametrization forms are not of equal degree"));
    }
    // a monomial factor common to every form
    let common = p
        .forms
        .iter()
        .flat_map(|f| f.terms().iter().map(|t| t.mono.clone()))
        .reduce(|a, b| a.gcd(&b));
    if common.is_some_and(|c| !c.is_one()) {
        return Err(Error::invalid("parametrization forms share a common factor"));
    }
    let n = target.nvars();
    let m = p.source_ring.nvars();
    let big = extend_ring(target, m, "u");
    let src_map: Vec<usize> = (n..n + m).collect();
    let gens: Vec<Polynomial> = p
        .forms
        .iter()
        .enumerate()
        .map(|(k, f)| big.var(k).sub(&f.remap(&big, &src_map)))
        .collect();
    let graph = Ideal::new(&big, gens)?;
    let kernel = graph.eliminate(m)?;
    let gens = kernel.gens().iter().map(|g| g.remap(target, &(0..n).collect::<Vec<_>>())).collect();
    let ideal = Ideal::new(target, gens)?;
    if !ideal.generators_of_degree(1).is_empty() {
        return Err(Error::invalid("implicitized variety is degenerate"));
    }
    Ok(ideal.mark_saturated())
}

/// A random point of the image: the parametrization at a uniformly random
/// source point (entries in `[0, p)` over `GF(p)`, in `[-9, 9]` over `QQ`).
pub fn random_point(x: &Variety, field: Field, seed: u64) -> Result<Vec<Scalar>> {
    let p = x.parametrization().ok_or(Error::NoParametrization)?;
    let p = if p.source_ring.field() == field {
        p.clone()
    } else {
        p.change_field(field)?
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100 {
        let src: Vec<Scalar> = (0..p.source_ring.nvars())
            .map(|_| match field {
                Field::Prime(q) => field.from_i64(rng.gen_range(0..q as i64)),
                Field::Rational => field.from_i64(rng.gen_range(-9..=9)),
            })
            .collect();
        let img = p.evaluate(&src)?;
        if img.iter().any(|c| !c.is_zero()) {
            return Ok(img);
        }
    }
    Err(Error::Degenerate {
        what: "sampled point maps to zero".into(),
        retries: 100,
    })
}

fn field_ring(prefix: &str, n: usize, field: Field) -> Arc<PolynomialRing> {
    PolynomialRing::with_prefix(prefix, n, field)
}

fn product_ring(blocks: &[(&str, usize)], field: Field) -> Arc<PolynomialRing> {
    let names = blocks
        .iter()
        .flat_map(|(p, n)| (0..*n).map(move |k| format!("{p}{k}")))
        .collect();
    PolynomialRing::new(names, field).expect("valid names")
}

/// `ν_d(P^n) ⊂ P^N`, `N = C(n+d, n) - 1`, cut out by its quadric binomials.
pub fn veronese(n: usize, d: usize) -> Result<Variety> {
    veronese_with_caps(n, d, &SizeCaps::default())
}

pub fn veronese_with_caps(n: usize, d: usize, caps: &SizeCaps) -> Result<Variety> {
    if n < 1 || d < 2 {
        return Err(Error::invalid("veronese needs n >= 1 and d >= 2"));
    }
    let mons = monomials_of_degree(n + 1, d as u16);
    check_caps(mons.len() - 1, caps)?;
    let field = Field::Rational;
    let ring = PolynomialRing::standard(mons.len(), field);
    let src = field_ring("s", n + 1, field);
    // x_a x_b - x_c x_e whenever the source monomials multiply alike
    let mut groups: Vec<(Monomial, Vec<(usize, usize)>)> = Vec::new();
    for a in 0..mons.len() {
        for b in a..mons.len() {
            let prod = mons[a].mul(&mons[b]);
            match groups.iter_mut().find(|(m, _)| *m == prod) {
                Some((_, v)) => v.push((a, b)),
                None => groups.push((prod, vec![(a, b)])),
            }
        }
    }
    let mut gens = Vec::new();
    for (_, pairs) in &groups {
        let (a, b) = pairs[0];
        let head = ring.var(a).mul(&ring.var(b));
        for &(c, e) in &pairs[1..] {
            gens.push(head.sub(&ring.var(c).mul(&ring.var(e))));
        }
    }
    let forms = mons
        .iter()
        .map(|m| src.monomial(field.one(), m.clone()))
        .collect();
    let param = Parametrization::new(&format!("P^{n}"), src, vec![1; n + 1], forms);
    let strata = match (n, d) {
        (1, 2) => (vec![1], vec![1]),
        (_, 2) => (vec![-1, 1], vec![1]),
        (1, 3) => (vec![0], vec![0]),
        _ => (vec![-1, 0], vec![0]),
    };
    Ok(Variety {
        name: format!("veronese({n},{d})"),
        ideal: Ideal::new(&ring, independent_subset(gens))?.mark_saturated(),
        parametrization: Some(param),
        profile: Some(SectionRingProfile::Veronese {
            n: n as u32,
            d: d as u32,
        }),
        claims: vec![],
        expected_strata: Some(ExpectedStrata {
            strata: strata.0,
            witnesses: strata.1,
        }),
    }
    .with_claim("N2", true, &format!("the degree {d} Veronese embedding satisfies N_{d}")))
}

/// `σ(P^a × P^b) ⊂ P^{ab+a+b}`, the 2 × 2 minors of the generic `(a+1) × (b+1)` matrix.
pub fn segre(a: usize, b: usize) -> Result<Variety> {
    segre_with_caps(a, b, &SizeCaps::default())
}

pub fn segre_with_caps(a: usize, b: usize, caps: &SizeCaps) -> Result<Variety> {
    if a < 1 || b < 1 {
        return Err(Error::invalid("segre needs a, b >= 1"));
    }
    let n = (a + 1) * (b + 1);
    check_caps(n - 1, caps)?;
    let field = Field::Rational;
    let ring = PolynomialRing::standard(n, field);
    let matrix: Vec<Vec<usize>> = (0..=a).map(|i| (0..=b).map(|j| i * (b + 1) + j).collect()).collect();
    let src = product_ring(&[("s", a + 1), ("t", b + 1)], field);
    let forms = (0..=a)
        .flat_map(|i| (0..=b).map(move |j| (i, j)))
        .map(|(i, j)| src.var(i).mul(&src.var(a + 1 + j)))
        .collect();
    let param = Parametrization::new(&format!("P^{a} x P^{b}"), src, vec![1; a + b + 2], forms);
    let np = if a == 1 || b == 1 {
        "a Segre variety with a one-dimensional factor is a scroll and satisfies N_p for all p".to_string()
    } else {
        "a Segre variety with both factors of dimension at least two satisfies N_p exactly for p <= 3".to_string()
    };
    Ok(Variety {
        name: format!("segre({a},{b})"),
        ideal: Ideal::new(&ring, minors(&ring, &matrix))?.mark_saturated(),
        parametrization: Some(param),
        profile: Some(SectionRingProfile::Segre {
            a: a as u32,
            b: b as u32,
        }),
        claims: vec![],
        expected_strata: Some(ExpectedStrata {
            strata: if a == 1 || b == 1 { vec![2] } else { vec![-1, 2] },
            witnesses: vec![2],
        }),
    }
    .with_claim("N2", true, &np))
}

/// The rational normal scroll `S(a_1, ..., a_k)`, the 2 × 2 minors of its
/// concatenated Hankel blocks.
pub fn scroll(degrees: &[usize]) -> Result<Variety> {
    scroll_with_caps(degrees, &SizeCaps::default())
}

pub fn scroll_with_caps(degrees: &[usize], caps: &SizeCaps) -> Result<Variety> {
    if degrees.is_empty() || degrees.iter().any(|&a| a < 1) || degrees.iter().sum::<usize>() < 2 {
        return Err(Error::invalid("scroll needs degrees a_i >= 1 with sum >= 2"));
    }
    let n: usize = degrees.iter().map(|a| a + 1).sum();
    check_caps(n - 1, caps)?;
    let field = Field::Rational;
    let ring = PolynomialRing::standard(n, field);
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    let mut offset = 0;
    for &a in degrees {
        for j in 0..a {
            top.push(offset + j);
            bottom.push(offset + j + 1);
        }
        offset += a + 1;
    }
    let k = degrees.len();
    let big_a = *degrees.iter().max().unwrap();
    let src = product_ring(&[("s", 2), ("u", k)], field);
    let mut weights = vec![1, 1];
    weights.extend(degrees.iter().map(|&a| (big_a - a + 1) as u32));
    let mut forms = Vec::new();
    for (i, &a) in degrees.iter().enumerate() {
        for j in 0..=a {
            let mut e = vec![0u16; 2 + k];
            e[0] = (a - j) as u16;
            e[1] = j as u16;
            e[2 + i] = 1;
            forms.push(src.monomial(field.one(), Monomial::new(&e)));
        }
    }
    let label = degrees.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",");
    let param = Parametrization::new(&format!("scroll over P^1 with {k} directrices"), src, weights, forms);
    let gens = independent_subset(minors(&ring, &[top, bottom]));
    Ok(Variety {
        name: format!("scroll({label})"),
        ideal: Ideal::new(&ring, gens)?.mark_saturated(),
        parametrization: Some(param),
        profile: Some(SectionRingProfile::Scroll(degrees.iter().map(|&a| a as u32).collect())),
        claims: vec![],
        expected_strata: None,
    }
    .with_claim("N2", true, "varieties of minimal degree satisfy N_p for all p"))
}

/// The five Plücker quadrics of `G(1,4) ⊂ P^9` in the coordinates
/// `p01, p02, p03, p04, p12, p13, p14, p23, p24, p34`.
pub fn plucker_quadrics(ring: &Arc<PolynomialRing>) -> Vec<Polynomial> {
    let idx = |i: usize, j: usize| -> usize {
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        pairs.iter().position(|&p| p == (i, j)).unwrap()
    };
    let p = |i: usize, j: usize| ring.var(idx(i, j));
    let mut out = Vec::new();
    for omit in (0..5).rev() {
        let q: Vec<usize> = (0..5).filter(|&k| k != omit).collect();
        let (i, j, k, l) = (q[0], q[1], q[2], q[3]);
        let f = p(i, j).mul(&p(k, l)).sub(&p(i, k).mul(&p(j, l))).add(&p(i, l).mul(&p(j, k)));
        out.push(f);
    }
    out
}

pub const SECTION_RETRIES: usize = 5;

/// `G(1,4) ⊂ P^9` cut by `cut` hyperplanes `p_target = Σ c_l p_l` with
/// seeded integer coefficients in `[-5, 5]`, written in the coordinates of
/// `P^{9-cut}`. The section is accepted when it has dimension `6 - cut` and degree 5.
pub fn grassmann_g14_section(cut: usize, seed: u64) -> Result<Variety> {
    if cut > 3 {
        return Err(Error::invalid("g14 sections need 0 <= cut <= 3"));
    }
    let field = Field::Rational;
    let full = PolynomialRing::standard(10, field);
    let quadrics = plucker_quadrics(&full);
    let m = 10 - cut;
    let ring = PolynomialRing::standard(m, field);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SECTION_RETRIES {
        let mut images: Vec<Polynomial> = (0..m).map(|k| ring.var(k)).collect();
        for _ in 0..cut {
            let form = (0..m).fold(ring.zero(), |acc, k| {
                acc.add(&ring.var(k).scale(&field.from_i64(rng.gen_range(-5..=5))))
            });
            images.push(form);
        }
        let gens: Vec<Polynomial> = quadrics.iter().map(|q| q.compose(&images)).collect();
        let ideal = Ideal::new(&ring, gens)?;
        let data = ideal.hilbert()?;
        if data.projective_dim() == 6 - cut as i64 && data.degree == 5 {
            let param = (cut == 0).then(|| {
                let src = product_ring(&[("a", 5), ("b", 5)], field);
                let forms = (0..5)
                    .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
                    .map(|(i, j)| {
                        src.var(i).mul(&src.var(5 + j)).sub(&src.var(j).mul(&src.var(5 + i)))
                    })
                    .collect();
                Parametrization::new("pairs of vectors in K^5", src, vec![1; 10], forms)
            });
            let k = 6 - cut as i64;
            let name = if cut == 0 { "G(1,4)".to_string() } else { format!("g14({cut})") };
            return Ok(Variety {
                name,
                ideal: ideal.mark_saturated(),
                parametrization: param,
                profile: Some(SectionRingProfile::GrassmannSection { cut: cut as u32 }),
                claims: vec![],
                expected_strata: Some(ExpectedStrata {
                    strata: vec![k - 2],
                    witnesses: vec![k - 2],
                }),
            }
            .with_claim("N2", true, "Del Pezzo varieties of degree at least 5 satisfy N_2"));
        }
    }
    Err(Error::Degenerate {
        what: "linear section of G(1,4)".into(),
        retries: SECTION_RETRIES,
    })
}

/// The variety cut out by `forms`, required to have codimension equal to their number.
pub fn complete_intersection(forms: Vec<Polynomial>) -> Result<Variety> {
    let ring = forms
        .first()
        .map(|f| f.ring().clone())
        .ok_or_else(|| Error::invalid("no forms given"))?;
    if forms.iter().any(|f| f.is_zero() || !f.is_homogeneous()) {
        return Err(Error::invalid("complete intersection forms must be nonzero and homogeneous"));
    }
    let c = forms.len();
    let ideal = Ideal::new(&ring, forms)?;
    let data = ideal.hilbert()?;
    let codim = ring.nvars() - data.krull_dim;
    if codim != c {
        return Err(Error::NotCompleteIntersection(format!(
            "{c} forms cut out codimension {codim}"
        )));
    }
    let ideal = if data.krull_dim >= 2 { ideal.mark_saturated() } else { ideal.saturate_irrelevant()? };
    Ok(Variety {
        name: "ci".to_string(),
        ideal,
        parametrization: None,
        profile: None,
        claims: vec![],
        expected_strata: None,
    })
}

/// `V(x0^2 + x1^2 + x2^2 + x3^2, x0^2 + 2 x1^2 + 3 x2^2 + 4 x3^2)`: a smooth elliptic quartic.
pub fn elliptic_quartic() -> Result<Variety> {
    let ring = PolynomialRing::standard(4, Field::Rational);
    let q1 = (0..4).fold(ring.zero(), |acc, k| acc.add(&ring.var(k).pow(2)));
    let q2 = (0..4).fold(ring.zero(), |acc, k| {
        acc.add(&ring.var(k).pow(2).scale(&Field::Rational.from_i64(k as i64 + 1)))
    });
    Ok(complete_intersection(vec![q1, q2])?
        .with_name("elliptic-quartic")
        .with_claim("N2", false, "two quadrics have a Koszul syzygy of degree four"))
}

/// A complete intersection of forms of the given degrees with seeded
/// integer coefficients in `[-5, 5]`.
pub fn random_complete_intersection(nvars: usize, degrees: &[u16], seed: u64) -> Result<Variety> {
    let field = Field::Rational;
    let ring = PolynomialRing::standard(nvars, field);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SECTION_RETRIES {
        let forms: Vec<Polynomial> = degrees
            .iter()
            .map(|&d| {
                let terms = monomials_of_degree(nvars, d)
                    .into_iter()
                    .map(|m| Term {
                        mono: m,
                        coeff: field.from_i64(rng.gen_range(-5..=5)),
                    })
                    .collect();
                Polynomial::from_terms(ring.clone(), MonomialOrder::Grevlex, terms)
            })
            .collect();
        match complete_intersection(forms) {
            Ok(v) => return Ok(v),
            Err(Error::NotCompleteIntersection(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Degenerate {
        what: "random complete intersection".into(),
        retries: SECTION_RETRIES,
    })
}
