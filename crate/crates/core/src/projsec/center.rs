//! Projection centers: explicit points, points on secant or tangent lines and general points.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::join::{ruled_join_variety, JoinKind};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polyring::{Field, Scalar};
use crate::varieties::{random_point, Variety};

const CENTER_RETRIES: usize = 50;

#[derive(Clone, Debug, PartialEq)]
pub enum CenterSpec {
    Explicit(Vec<Scalar>),
    /// `λ P_1 + μ P_2` for sampled points `P_i` of `X` and small integers `λ, μ`.
    OnSecant,
    /// A point `dφ_s(v)` of an embedded tangent space.
    OnTangent,
    General,
    /// A general point off the secant variety.
    GeneralOffSecant,
}

impl FromStr for CenterSpec {
    type Err = Error;

    /// `on-secant`, `on-tangent`, `general`, `general-off-secant` or comma
    /// separated rational coordinates.
    fn from_str(s: &str) -> Result<CenterSpec> {
        Ok(match s.trim() {
            "on-secant" => CenterSpec::OnSecant,
            "on-tangent" => CenterSpec::OnTangent,
            "general" => CenterSpec::General,
            "general-off-secant" => CenterSpec::GeneralOffSecant,
            coords => {
                let ring = crate::polyring::PolynomialRing::standard(2, Field::Rational);
                let parsed = coords
                    .split(',')
                    .map(|c| {
                        let p = crate::polyring::parse_poly(c.trim(), &ring)?;
                        if !p.is_constant() {
                            return Err(Error::invalid(format!("`{c}` is not a number")));
                        }
                        Ok(p.terms().first().map(|t| t.coeff.clone()).unwrap_or_else(|| Field::Rational.zero()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                CenterSpec::Explicit(parsed)
            }
        })
    }
}

fn random_scalar(rng: &mut ChaCha8Rng, field: Field, bound: i64) -> Scalar {
    match field {
        Field::Prime(p) => field.from_i64(rng.gen_range(0..p as i64)),
        Field::Rational => field.from_i64(rng.gen_range(-bound..=bound)),
    }
}

fn off(x: &Variety, q: &[Scalar]) -> Result<bool> {
    Ok(q.iter().any(|c| !c.is_zero()) && !x.contains_point(q)?)
}

fn vanishes_on(ideal: &Ideal, q: &[Scalar]) -> Result<bool> {
    for g in ideal.gens() {
        if !g.evaluate(q)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A center in the field of `X`, reproducible from `seed`.
pub fn choose_center(x: &Variety, spec: &CenterSpec, seed: u64) -> Result<Vec<Scalar>> {
    let field = x.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = x.ring().nvars();
    match spec {
        CenterSpec::Explicit(q) => {
            if q.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: q.len(),
                });
            }
            let q: Vec<Scalar> = q.iter().map(|c| field.convert(c)).collect::<Result<_>>()?;
            if !off(x, &q)? {
                return Err(Error::CenterOnVariety);
            }
            Ok(q)
        }
        CenterSpec::OnSecant => {
            for _ in 0..CENTER_RETRIES {
                let p1 = random_point(x, field, rng.gen())?;
                let p2 = random_point(x, field, rng.gen())?;
                let (l, m) = (field.from_i64(rng.gen_range(1..=3)), field.from_i64(rng.gen_range(1..=3)));
                let q: Vec<Scalar> = p1.iter().zip(&p2).map(|(a, b)| &(&l * a) + &(&m * b)).collect();
                if off(x, &q)? {
                    return Ok(q);
                }
            }
            Err(Error::Degenerate {
                what: "center on a secant line".into(),
                retries: CENTER_RETRIES,
            })
        }
        CenterSpec::OnTangent => {
            let p = x.parametrization().ok_or(Error::NoParametrization)?;
            let p = if p.source_ring.field() == field { p.clone() } else { p.change_field(field)? };
            let m = p.source_ring.nvars();
            for _ in 0..CENTER_RETRIES {
                let s: Vec<Scalar> = (0..m).map(|_| random_scalar(&mut rng, field, 9)).collect();
                let v: Vec<Scalar> = (0..m).map(|_| random_scalar(&mut rng, field, 3)).collect();
                let q = p
                    .forms
                    .iter()
                    .map(|f| {
                        (0..m).try_fold(field.zero(), |acc, k| {
                            Ok::<_, Error>(&acc + &(&f.derivative(k).evaluate(&s)? * &v[k]))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                if off(x, &q)? {
                    return Ok(q);
                }
            }
            Err(Error::Degenerate {
                what: "center on a tangent line".into(),
                retries: CENTER_RETRIES,
            })
        }
        CenterSpec::General | CenterSpec::GeneralOffSecant => {
            let sec = match spec {
                CenterSpec::GeneralOffSecant => {
                    let sec = ruled_join_variety(x, JoinKind::Secant)?;
                    if sec.is_zero() {
                        return Err(Error::HypothesisUnmet(format!(
                            "the secant variety of {} fills the ambient space",
                            x.name()
                        )));
                    }
                    Some(sec)
                }
                _ => None,
            };
            for _ in 0..CENTER_RETRIES {
                let q: Vec<Scalar> = (0..n).map(|_| random_scalar(&mut rng, field, 9)).collect();
                if !off(x, &q)? {
                    continue;
                }
                if let Some(sec) = &sec {
                    if vanishes_on(sec, &q)? {
                        continue;
                    }
                }
                return Ok(q);
            }
            Err(Error::Degenerate {
                what: "general center".into(),
                retries: CENTER_RETRIES,
            })
        }
    }
}
