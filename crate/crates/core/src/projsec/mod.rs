//! Linear projection from a point, secant loci, quadric classification,
//! singular loci, secant and tangent varieties, and the verification engine
//! for projections of varieties satisfying `N_2`.

mod center;
mod join;
mod quadric;
mod singular;
pub mod suites;
mod verify;

use std::sync::Arc;

use serde::Serialize;

pub use center::{choose_center, CenterSpec};
pub use join::{ruled_join_variety, JoinKind};
pub use quadric::{classify_quadric, QuadricClass, QuadricVerdict};
pub use singular::{is_singular_point, jacobian_rank_at, singular_locus};
pub use verify::{verify_projection_theorem, Check, Verdict, VerificationReport};

use crate::error::{Error, Result};
use crate::groebner::{extend_ring, sub_ring, Ideal};
use crate::polyring::{Field, MonomialOrder, Polynomial, PolynomialRing, RingExt, Scalar, Term};
use crate::varieties::{SectionRingProfile, Variety};

/// Coordinates `y` with `q = [0 : ... : 0 : 1]`: `y_r = x_p / q_p` and
/// `y_j = x_{o_j} - (q_{o_j} / q_p) x_p`, where `p` is the last index with
/// `q_p != 0` and `o_0 < o_1 < ...` are the remaining indices.
#[derive(Clone, Debug)]
pub struct Frame {
    pub center: Vec<Scalar>,
    pub pivot: usize,
    /// `x_i` written in the `y` coordinates.
    pub to_frame: Vec<Polynomial>,
    /// `y_j` written in the `x` coordinates.
    pub from_frame: Vec<Polynomial>,
}

impl Frame {
    pub fn new(ring: &Arc<PolynomialRing>, q: &[Scalar]) -> Result<Frame> {
        let n = ring.nvars();
        if q.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: q.len(),
            });
        }
        let field = ring.field();
        let q: Vec<Scalar> = q.iter().map(|c| field.convert(c)).collect::<Result<_>>()?;
        let p = (0..n)
            .rev()
            .find(|&k| !q[k].is_zero())
            .ok_or_else(|| Error::invalid("the zero vector is not a projective point"))?;
        let others: Vec<usize> = (0..n).filter(|&k| k != p).collect();
        let qp_inv = q[p].inv().unwrap();
        let last = n - 1;
        let to_frame = (0..n)
            .map(|i| {
                let mut f = ring.var(last).scale(&q[i]);
                if i != p {
                    let j = others.iter().position(|&o| o == i).unwrap();
                    f = f.add(&ring.var(j));
                }
                f
            })
            .collect();
        let mut from_frame: Vec<Polynomial> = others
            .iter()
            .map(|&o| ring.var(o).sub(&ring.var(p).scale(&(&q[o] * &qp_inv))))
            .collect();
        from_frame.push(ring.var(p).scale(&qp_inv));
        Ok(Frame {
            center: q,
            pivot: p,
            to_frame,
            from_frame,
        })
    }

    /// `π_q(x)` in the coordinates `y_0, ..., y_{r-1}`.
    pub fn project_point(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        let mut y = self
            .from_frame
            .iter()
            .map(|f| f.evaluate(x))
            .collect::<Result<Vec<_>>>()?;
        y.pop();
        Ok(y)
    }

    /// A point of `P^{r-1}` lifted to `P^r` (the `y_r = 0` representative).
    pub fn lift_point(&self, y: &[Scalar]) -> Result<Vec<Scalar>> {
        let mut full = y.to_vec();
        full.push(self.center[0].field().zero());
        self.to_frame.iter().map(|f| f.evaluate(&full)).collect()
    }

    pub fn ideal_to_frame(&self, ideal: &Ideal) -> Result<Ideal> {
        ideal.substitute(&self.to_frame)
    }

    pub fn ideal_from_frame(&self, ideal: &Ideal) -> Result<Ideal> {
        let out = ideal.substitute(&self.from_frame)?;
        Ok(if ideal.is_saturated() { out.mark_saturated() } else { out })
    }
}

fn check_center(x: &Variety, q: &[Scalar]) -> Result<Vec<Scalar>> {
    let field = x.field();
    if field.characteristic() == 2 {
        return Err(Error::InvalidField("characteristic 2 is not supported".into()));
    }
    if q.len() != x.ring().nvars() {
        return Err(Error::DimensionMismatch {
            expected: x.ring().nvars(),
            found: q.len(),
        });
    }
    let q: Vec<Scalar> = q.iter().map(|c| field.convert(c)).collect::<Result<_>>()?;
    if q.iter().all(|c| c.is_zero()) {
        return Err(Error::invalid("the zero vector is not a projective point"));
    }
    if x.contains_point(&q)? {
        return Err(Error::CenterOnVariety);
    }
    Ok(q)
}

/// Outcome of projecting `X ⊂ P^r` from a point off `X`.
#[derive(Clone, Debug)]
pub struct ProjectionResult {
    pub frame: Frame,
    /// `X_q ⊂ P^{r-1}` in the coordinates `y_0, ..., y_{r-1}` of the frame.
    pub image: Variety,
    /// `deg X / deg X_q`, the degree of `π_q` onto its image.
    pub map_degree: Option<i64>,
    pub birational: bool,
}

impl ProjectionResult {
    /// The profile of `X_q` once `s = dim Σ_q(X)` is known.
    pub fn derived_profile(&self, base: &SectionRingProfile, s: i64) -> SectionRingProfile {
        base.projected(s)
    }
}

/// `X_q = π_q(X) ⊂ P^{r-1}`, with `q` moved to the last coordinate point and
/// the last variable eliminated.
pub fn project(x: &Variety, q: &[Scalar]) -> Result<ProjectionResult> {
    let q = check_center(x, q)?;
    let frame = Frame::new(x.ring(), &q)?;
    let moved = frame.ideal_to_frame(x.ideal())?;
    // no associated prime of I_X contains (y_0, ..., y_{r-1}) because q is off X,
    // so the elimination ideal is already saturated
    let image = moved.eliminate(1)?.minimalized()?.mark_saturated();
    if !image.linear_part()?.is_empty() {
        return Err(Error::Inconsistent("projected variety is degenerate".into()));
    }
    let deg_x = x.degree()?;
    let deg_q = image.hilbert()?.degree;
    let map_degree = (deg_q > 0 && deg_x % deg_q == 0).then(|| deg_x / deg_q);
    let image = Variety::from_saturated(&format!("{}_q", x.name()), image);
    Ok(ProjectionResult {
        frame,
        image,
        map_degree,
        birational: map_degree == Some(1),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SecantMethod {
    Incidence,
    Conductor,
}

/// The secant locus `Σ_q(X)` with derived data.
#[derive(Clone, Debug)]
pub struct SecantReport {
    /// Saturated ideal of `Σ_q(X)` in the original coordinates of `P^r`.
    pub ideal: Ideal,
    /// `dim Σ_q(X)`, `-1` when empty.
    pub s: i64,
    /// Dimension of the linear span of `Σ_q(X)`.
    pub span_dim: Option<i64>,
    /// `Λ = Sing(π_q) ⊂ P^{r-1}` in frame coordinates (conductor method only).
    pub lambda: Option<Ideal>,
    pub method: SecantMethod,
}

impl SecantReport {
    fn new(ideal: Ideal, lambda: Option<Ideal>, method: SecantMethod) -> Result<SecantReport> {
        let s = scheme_dim(&ideal)?;
        let span_dim = if s < 0 {
            None
        } else {
            Some(ideal.ring().nvars() as i64 - 1 - ideal.linear_part()?.len() as i64)
        };
        Ok(SecantReport {
            ideal,
            s,
            span_dim,
            lambda,
            method,
        })
    }

    /// Length of a zero-dimensional locus.
    pub fn length(&self) -> Result<Option<i64>> {
        Ok((self.s == 0).then_some(self.ideal.hilbert()?.degree))
    }
}

/// Projective dimension of `V(I)`, `-1` when empty.
pub fn scheme_dim(ideal: &Ideal) -> Result<i64> {
    if ideal.is_unit()? {
        return Ok(-1);
    }
    Ok(ideal.hilbert()?.projective_dim())
}

/// `f / t` for a polynomial divisible by the last variable `t`.
fn divide_by_last(f: &Polynomial) -> Polynomial {
    let n = f.ring().nvars();
    let terms = f
        .terms()
        .iter()
        .map(|t| {
            let mut e = t.mono.exps().to_vec();
            debug_assert!(e[n - 1] > 0);
            e[n - 1] -= 1;
            Term {
                mono: crate::polyring::Monomial::new(&e),
                coeff: t.coeff.clone(),
            }
        })
        .collect();
    Polynomial::from_terms(f.ring().clone(), f.order(), terms)
}

/// The secant locus from the incidence of pairs `x, x + λ q` on `X`: the
/// ideal `I_X(x) + ((f(x + λ q) - f(x)) / λ)` in `K[x, λ]`, saturated by
/// `λ` (keeping tangential limits), with `λ` eliminated and the result saturated.
pub fn secant_locus_incidence(x: &Variety, q: &[Scalar]) -> Result<SecantReport> {
    let q = check_center(x, q)?;
    let ring = x.ring();
    let n = ring.nvars();
    let big = extend_ring(ring, 1, "l");
    let lam = big.var(n);
    let shifted: Vec<Polynomial> = (0..n).map(|k| big.var(k).add(&lam.scale(&q[k]))).collect();
    let map: Vec<usize> = (0..n).collect();
    let mut gens = Vec::new();
    for f in x.ideal().gens() {
        let fx = f.remap(&big, &map);
        let diff = f.compose(&shifted).sub(&fx);
        gens.push(fx);
        if !diff.is_zero() {
            gens.push(divide_by_last(&diff));
        }
    }
    let incidence = Ideal::new(&big, gens)?.saturate_by_variable(n)?;
    let image = incidence.eliminate(1)?;
    let back: Vec<Polynomial> = image.gens().iter().map(|g| g.remap(ring, &map)).collect();
    let sigma = Ideal::new(ring, back)?.saturate_irrelevant()?.minimalized()?;
    SecantReport::new(sigma, None, SecantMethod::Incidence)
}

/// `Λ ⊂ P^{r-1}` from the conductor `I_Λ = {f ∈ S : f y_r ∈ I_X + S}`, read off
/// an elimination basis, and `Σ_q(X)` as the scheme `⟨q, Λ⟩ ∩ X`.
/// Requires the registry to record `N_2` for `X`.
pub fn secant_locus_conductor(x: &Variety, q: &[Scalar]) -> Result<SecantReport> {
    if x.claims_n2() != Some(true) {
        return Err(Error::HypothesisUnmet(format!(
            "{} is not recorded as satisfying N_2",
            x.name()
        )));
    }
    let q = check_center(x, q)?;
    let ring = x.ring();
    let n = ring.nvars();
    let frame = Frame::new(ring, &q)?;
    let moved = frame.ideal_to_frame(x.ideal())?;
    let basis = moved.groebner_basis(MonomialOrder::Elim(1))?;
    let s_ring = sub_ring(ring, n - 1)?;
    let keep: Vec<usize> = (0..n - 1).collect();
    let mut conductor = Vec::new();
    for g in basis.iter() {
        match g.degree_in(n - 1) {
            0 => conductor.push(g.remap(&s_ring, &keep)),
            1 => {
                let a: Vec<Term> = g
                    .terms()
                    .iter()
                    .filter(|t| t.mono.exp(n - 1) == 1)
                    .map(|t| Term {
                        mono: crate::polyring::Monomial::new(&t.mono.exps()[..n - 1]),
                        coeff: t.coeff.clone(),
                    })
                    .collect();
                conductor.push(Polynomial::from_terms(s_ring.clone(), MonomialOrder::Grevlex, a));
            }
            _ => {}
        }
    }
    let lambda = Ideal::new(&s_ring, conductor)?.saturate_irrelevant()?.minimalized()?;
    if lambda.is_unit()? {
        let sigma = Ideal::unit(ring);
        return SecantReport::new(sigma, Some(lambda), SecantMethod::Conductor);
    }
    let basis = lambda.groebner_basis(MonomialOrder::Grevlex)?;
    if basis.iter().any(|g| g.degree() != Some(1)) {
        return Err(Error::Inconsistent("the conductor does not cut out a linear space".into()));
    }
    let lifted: Vec<Polynomial> = basis
        .iter()
        .map(|g| g.remap(ring, &keep))
        .collect();
    let sigma_frame = moved.with_generators(&lifted)?.saturate_irrelevant()?;
    let sigma = frame.ideal_from_frame(&sigma_frame)?.minimalized()?.mark_saturated();
    SecantReport::new(sigma, Some(lambda), SecantMethod::Conductor)
}

/// Outcome of comparing two secant loci.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Agreement {
    Equal,
    /// Same Hilbert polynomial but different saturated ideals.
    SchemeStructureMismatch,
    Different,
}

pub fn compare_loci(a: &Ideal, b: &Ideal) -> Result<Agreement> {
    if a.same_ideal(b)? {
        return Ok(Agreement::Equal);
    }
    let (da, db) = (scheme_dim(a)?, scheme_dim(b)?);
    if da == db && da >= 0 {
        let (ha, hb) = (a.hilbert()?, b.hilbert()?);
        if (0..=da + 1).all(|k| ha.hilbert_polynomial(k) == hb.hilbert_polynomial(k)) {
            return Ok(Agreement::SchemeStructureMismatch);
        }
    }
    Ok(Agreement::Different)
}

/// Random points of a linear space given by linear forms, with entries of the
/// free coordinates in `[-9, 9]` (or uniform over a prime field).
pub(crate) fn random_points_of_linear_space(
    linear: &[Polynomial],
    ring: &Arc<PolynomialRing>,
    count: usize,
    seed: u64,
) -> Result<Vec<Vec<Scalar>>> {
    use rand::{Rng, SeedableRng};
    let field = ring.field();
    let n = ring.nvars();
    let rows: Vec<Vec<Scalar>> = linear
        .iter()
        .map(|f| crate::groebner::linear_coefficients(f).ok_or_else(|| Error::invalid("expected linear forms")))
        .collect::<Result<_>>()?;
    let kernel = crate::linalg::nullspace(&rows, n, field);
    if kernel.is_empty() {
        return Ok(Vec::new());
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let coeffs: Vec<Scalar> = kernel
            .iter()
            .map(|_| match field {
                Field::Prime(p) => field.from_i64(rng.gen_range(0..p as i64)),
                Field::Rational => field.from_i64(rng.gen_range(-9..=9)),
            })
            .collect();
        let pt: Vec<Scalar> = (0..n)
            .map(|i| {
                kernel
                    .iter()
                    .zip(&coeffs)
                    .fold(field.zero(), |acc, (v, c)| &acc + &(&v[i] * c))
            })
            .collect();
        if pt.iter().any(|c| !c.is_zero()) {
            out.push(pt);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::varieties::{elliptic_quartic, segre, veronese};

    fn ints(field: Field, v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&c| field.from_i64(c)).collect()
    }

    #[test]
    fn frame_moves_center_to_last_point() {
        let ring = PolynomialRing::standard(4, Field::Rational);
        let q = ints(Field::Rational, &[1, 2, 3, 0]);
        let f = Frame::new(&ring, &q).unwrap();
        assert_eq!(f.pivot, 2);
        let y: Vec<Scalar> = f.from_frame.iter().map(|g| g.evaluate(&q).unwrap()).collect();
        assert_eq!(y, ints(Field::Rational, &[0, 0, 0, 1]));
        let x = ints(Field::Rational, &[5, -1, 4, 7]);
        let y: Vec<Scalar> = f.from_frame.iter().map(|g| g.evaluate(&x).unwrap()).collect();
        let back: Vec<Scalar> = f.to_frame.iter().map(|g| g.evaluate(&y).unwrap()).collect();
        assert_eq!(back, x);
    }

    #[test]
    fn projecting_the_rational_normal_quartic() {
        let x = veronese(1, 4).unwrap();
        // midpoint of the secant through ν(1:0) = e0 and ν(0:1) = e4
        let q = ints(Field::Rational, &[1, 0, 0, 0, 1]);
        let p = project(&x, &q).unwrap();
        let data = p.image.ideal().hilbert().unwrap();
        assert_eq!((data.projective_dim(), data.degree), (1, 4));
        assert_eq!(data.sectional_genus(), Some(1));
        assert!(p.birational);
        for report in [secant_locus_incidence(&x, &q).unwrap(), secant_locus_conductor(&x, &q).unwrap()] {
            assert_eq!(report.s, 0);
            assert_eq!(report.length().unwrap(), Some(2));
            let ring = x.ring();
            let e0 = ints(Field::Rational, &[1, 0, 0, 0, 0]);
            let e4 = ints(Field::Rational, &[0, 0, 0, 0, 1]);
            for g in report.ideal.gens() {
                assert!(g.evaluate(&e0).unwrap().is_zero() && g.evaluate(&e4).unwrap().is_zero());
            }
            assert_eq!(report.ideal.ring().as_ref(), ring.as_ref());
        }
    }

    #[test]
    fn center_on_variety_is_rejected() {
        let x = veronese(1, 2).unwrap();
        let q = ints(Field::Rational, &[1, 0, 0]);
        assert!(matches!(project(&x, &q), Err(Error::CenterOnVariety)));
        assert!(matches!(secant_locus_incidence(&x, &q), Err(Error::CenterOnVariety)));
        assert!(project(&x, &ints(Field::Rational, &[0, 0, 0])).is_err());
    }

    #[test]
    fn conductor_needs_the_n2_record() {
        let e = elliptic_quartic().unwrap();
        let q = ints(Field::Rational, &[1, 2, 3, 5]);
        assert!(matches!(secant_locus_conductor(&e, &q), Err(Error::HypothesisUnmet(_))));
    }

    #[test]
    fn segre_secant_locus_is_a_quadric_surface() {
        let x = segre(1, 2).unwrap();
        let q = ints(Field::Rational, &[1, 0, 2, 0, 1, 3]);
        let a = secant_locus_incidence(&x, &q).unwrap();
        let b = secant_locus_conductor(&x, &q).unwrap();
        assert_eq!((a.s, b.s), (2, 2));
        assert_eq!(compare_loci(&a.ideal, &b.ideal).unwrap(), Agreement::Equal);
        assert_eq!(b.span_dim, Some(3));
    }
}
