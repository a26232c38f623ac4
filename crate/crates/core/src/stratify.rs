//! Empirical secant stratifications: the stratum `SL_s` of sampled centers.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::betti::par_map;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polyring::{Field, Scalar};
use crate::projsec::{
    choose_center, compare_loci, ruled_join_variety, secant_locus_conductor, secant_locus_incidence, Agreement,
    CenterSpec, JoinKind, SecantMethod,
};
use crate::varieties::Variety;

/// `s` for one center together with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumOutcome {
    pub s: i64,
    pub method: SecantMethod,
    /// Set when the other method was run as well.
    pub agreement: Option<Agreement>,
    /// Length of `Σ_q(X)` when it is finite and nonempty.
    pub length: Option<i64>,
}

/// `dim Σ_q(X)` for `q ∉ X`: the conductor method when `X` is recorded as
/// satisfying `N_2`, the incidence method otherwise, with the other one as
/// cross-check on request.
pub fn stratum_of(x: &Variety, q: &[Scalar], cross_check: bool) -> Result<StratumOutcome> {
    let fast = x.claims_n2() == Some(true);
    let primary = if fast {
        secant_locus_conductor(x, q)?
    } else {
        secant_locus_incidence(x, q)?
    };
    let agreement = if cross_check && fast {
        let other = secant_locus_incidence(x, q)?;
        Some(compare_loci(&primary.ideal, &other.ideal)?)
    } else {
        None
    };
    Ok(StratumOutcome {
        s: primary.s,
        method: primary.method,
        agreement,
        length: if primary.s == 0 { primary.length()? } else { None },
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SurveyConfig {
    /// General centers.
    pub trials: usize,
    pub field: Field,
    pub seed: u64,
    /// Extra centers on secant lines.
    pub on_secant: usize,
    /// Extra centers on tangent lines.
    pub on_tangent: usize,
    /// Fraction of trials whose secant locus is recomputed by the other method.
    pub cross_check: f64,
    /// Whether to compute `Tan(X)` and test `q ∈ Tan(X)` whenever `s > 0`.
    pub tangent_check: bool,
}

impl Default for SurveyConfig {
    fn default() -> SurveyConfig {
        SurveyConfig {
            trials: 50,
            field: Field::Prime(32003),
            seed: 0,
            on_secant: 10,
            on_tangent: 0,
            cross_check: 0.2,
            tangent_check: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sampler {
    General,
    OnSecant,
    OnTangent,
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialRecord {
    pub index: usize,
    pub sampler: Sampler,
    pub center: Vec<String>,
    /// `None` when the center fell on `X`.
    pub s: Option<i64>,
    pub method: Option<SecantMethod>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<Agreement>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub on_tangent_variety: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl TrialRecord {
    fn is_inconsistent(&self) -> bool {
        self.error.is_some() || self.agreement.is_some_and(|a| a != Agreement::Equal)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SurveyVerdict {
    Consistent,
    Inconsistent,
    /// No expected strata are registered for the variety.
    Unregistered,
}

#[derive(Clone, Debug, Serialize)]
pub struct StratificationReport {
    pub variety: String,
    pub field: String,
    pub trials: usize,
    pub seed: u64,
    /// `s ↦ count` over trials whose center is off `X`.
    pub histogram: BTreeMap<i64, usize>,
    /// Trials whose center fell on `X`, reported under `SL_n(X) = X`.
    pub on_variety: usize,
    pub inconsistent: Vec<usize>,
    pub expected: Option<Vec<i64>>,
    pub witnesses: Option<Vec<i64>>,
    /// Trials with `s > 0` whose center is off the tangent variety.
    pub tangent_failures: Vec<usize>,
    /// Finite nonempty loci whose length is not 2, where length 2 is claimed.
    pub length_failures: Vec<usize>,
    pub verdict: SurveyVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub caveat: Option<String>,
    pub records: Vec<TrialRecord>,
}

impl StratificationReport {
    pub fn support(&self) -> Vec<i64> {
        self.histogram.keys().copied().collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

#[cfg(not(target_arch = "wasm32"))]
struct Stopwatch(std::time::Instant);

#[cfg(not(target_arch = "wasm32"))]
impl Stopwatch {
    fn start() -> Stopwatch {
        Stopwatch(std::time::Instant::now())
    }

    fn millis(&self) -> u128 {
        self.0.elapsed().as_millis()
    }
}

#[cfg(target_arch = "wasm32")]
struct Stopwatch;

#[cfg(target_arch = "wasm32")]
impl Stopwatch {
    fn start() -> Stopwatch {
        Stopwatch
    }

    fn millis(&self) -> u128 {
        0
    }
}

/// Per-trial seed, independent of scheduling.
fn trial_seed(seed: u64, index: usize) -> u64 {
    let mut z = seed ^ (index as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn cross_checked(index: usize, fraction: f64) -> bool {
    let f = fraction.clamp(0.0, 1.0);
    ((index + 1) as f64 * f).floor() > (index as f64 * f).floor()
}

fn general_point(n: usize, field: Field, seed: u64) -> Vec<Scalar> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let q: Vec<Scalar> = (0..n)
            .map(|_| match field {
                Field::Prime(p) => field.from_i64(rng.gen_range(0..p as i64)),
                Field::Rational => field.from_i64(rng.gen_range(-9..=9)),
            })
            .collect();
        if q.iter().any(|c| !c.is_zero()) {
            return q;
        }
    }
}

/// Varieties for which nonempty finite secant loci are claimed to have length 2.
fn claims_length_two(x: &Variety) -> bool {
    matches!(
        x.profile(),
        Some(crate::varieties::SectionRingProfile::Veronese { d, .. }) if *d >= 3
    )
}

fn run_trial(
    x: &Variety,
    config: &SurveyConfig,
    tangent: Option<&Ideal>,
    index: usize,
    sampler: Sampler,
) -> Result<TrialRecord> {
    let start = Stopwatch::start();
    let seed = trial_seed(config.seed, index);
    let q = match sampler {
        Sampler::General => general_point(x.ring().nvars(), config.field, seed),
        Sampler::OnSecant => choose_center(x, &CenterSpec::OnSecant, seed)?,
        Sampler::OnTangent => choose_center(x, &CenterSpec::OnTangent, seed)?,
    };
    let mut record = TrialRecord {
        index,
        sampler,
        center: q.iter().map(|c| c.to_string()).collect(),
        s: None,
        method: None,
        agreement: None,
        length: None,
        on_tangent_variety: None,
        error: None,
        elapsed_ms: 0,
    };
    if x.contains_point(&q)? {
        record.elapsed_ms = start.millis();
        return Ok(record);
    }
    match stratum_of(x, &q, cross_checked(index, config.cross_check)) {
        Ok(out) => {
            record.s = Some(out.s);
            record.method = Some(out.method);
            record.agreement = out.agreement;
            record.length = out.length;
            if out.s > 0 {
                if let Some(tan) = tangent {
                    let mut member = true;
                    for g in tan.gens() {
                        member &= g.evaluate(&q)?.is_zero();
                    }
                    record.on_tangent_variety = Some(member);
                }
            }
        }
        Err(e @ Error::BudgetExceeded { .. }) => return Err(e),
        Err(e) => record.error = Some(e.to_string()),
    }
    record.elapsed_ms = start.millis();
    Ok(record)
}

/// Samples `trials` general centers and the requested targeted centers and
/// tallies their strata. The verdict is `consistent` when every observed `s`
/// is expected, every witness stratum is observed, no trial is inconsistent
/// and the tangent and length assertions hold.
pub fn stratification_survey(x: &Variety, config: &SurveyConfig) -> Result<StratificationReport> {
    if config.trials + config.on_secant + config.on_tangent == 0 {
        return Err(Error::invalid("a survey needs at least one trial"));
    }
    if config.field.characteristic() == 2 {
        return Err(Error::InvalidField("characteristic 2 is not supported".into()));
    }
    let x = if x.field() == config.field {
        x.clone()
    } else {
        x.change_field(config.field)?
    };
    let tangent = if config.tangent_check {
        match ruled_join_variety(&x, JoinKind::Tangent) {
            Ok(t) => Some(t),
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let mut plan = Vec::new();
    plan.extend(std::iter::repeat_n(Sampler::General, config.trials));
    plan.extend(std::iter::repeat_n(Sampler::OnSecant, config.on_secant));
    plan.extend(std::iter::repeat_n(Sampler::OnTangent, config.on_tangent));
    let indexed: Vec<(usize, Sampler)> = plan.into_iter().enumerate().collect();
    let records = par_map(&indexed, |&(i, sampler)| run_trial(&x, config, tangent.as_ref(), i, sampler))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;

    let mut histogram = BTreeMap::new();
    let mut on_variety = 0;
    let mut inconsistent = Vec::new();
    let mut tangent_failures = Vec::new();
    let mut length_failures = Vec::new();
    let length_two = claims_length_two(&x);
    for r in &records {
        match r.s {
            Some(s) if r.error.is_none() => *histogram.entry(s).or_insert(0) += 1,
            Some(_) => {}
            None if r.error.is_none() => on_variety += 1,
            None => {}
        }
        if r.is_inconsistent() {
            inconsistent.push(r.index);
        }
        if r.on_tangent_variety == Some(false) {
            tangent_failures.push(r.index);
        }
        if length_two && r.length.is_some_and(|l| l != 2) {
            length_failures.push(r.index);
        }
    }
    let expected = x.expected_strata().cloned();
    let verdict = match &expected {
        None => SurveyVerdict::Unregistered,
        Some(e) => {
            let members = histogram.keys().all(|s| e.strata.contains(s));
            let witnessed = e.witnesses.iter().all(|w| histogram.contains_key(w));
            if members && witnessed && inconsistent.is_empty() && tangent_failures.is_empty() && length_failures.is_empty()
            {
                SurveyVerdict::Consistent
            } else {
                SurveyVerdict::Inconsistent
            }
        }
    };
    let caveat = matches!(config.field, Field::Prime(_)).then(|| {
        format!(
            "computed over {}; the stratification statements are proved in characteristic zero",
            config.field
        )
    });
    Ok(StratificationReport {
        variety: x.name().to_string(),
        field: config.field.to_string(),
        trials: records.len(),
        seed: config.seed,
        histogram,
        on_variety,
        inconsistent,
        expected: expected.as_ref().map(|e| e.strata.clone()),
        witnesses: expected.map(|e| e.witnesses),
        tangent_failures,
        length_failures,
        verdict,
        caveat,
        records,
    })
}
