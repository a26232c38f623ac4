//! Checks of the invariants of `X_q` predicted from those of `X` and `s`.

use serde::Serialize;
use serde_json::{json, Value};

use super::{
    classify_quadric, compare_loci, is_singular_point, project, random_points_of_linear_space,
    secant_locus_conductor, secant_locus_incidence, Agreement, ProjectionResult, QuadricVerdict, SecantReport,
};
use crate::betti::{graded_betti, table_predicates, BettiTable, ResolutionPredicates};
use crate::error::{Error, Result};
use crate::hilbert::{binomial, hilbert_function};
use crate::polyring::{IdealFile, Scalar};
use crate::varieties::Variety;

/// One predicted-versus-computed comparison.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub predicted: Value,
    pub computed: Value,
    pub pass: bool,
}

impl Check {
    pub fn new(name: &str, predicted: impl Serialize, computed: impl Serialize) -> Check {
        let predicted = serde_json::to_value(predicted).expect("serializable");
        let computed = serde_json::to_value(computed).expect("serializable");
        Check {
            name: name.to_string(),
            pass: predicted == computed,
            predicted,
            computed,
        }
    }

    pub fn with_pass(name: &str, predicted: impl Serialize, computed: impl Serialize, pass: bool) -> Check {
        Check {
            name: name.to_string(),
            predicted: serde_json::to_value(predicted).expect("serializable"),
            computed: serde_json::to_value(computed).expect("serializable"),
            pass,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Mismatch,
    HypothesisUnmet,
    Inconsistent,
}

impl Verdict {
    pub fn from_checks(checks: &[Check]) -> Verdict {
        if checks.iter().all(|c| c.pass) {
            Verdict::Pass
        } else {
            Verdict::Mismatch
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub variety: String,
    pub field: String,
    pub center: Vec<String>,
    pub s: i64,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
    pub betti_x: Value,
    pub betti_q: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideals: Option<Value>,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Everything computed for one projection.
#[derive(Clone, Debug)]
pub struct ProjectionData {
    pub projection: ProjectionResult,
    pub incidence: SecantReport,
    pub conductor: Option<SecantReport>,
    pub agreement: Agreement,
    pub table_x: BettiTable,
    pub pred_x: ResolutionPredicates,
    pub table_q: BettiTable,
    pub pred_q: ResolutionPredicates,
}

impl ProjectionData {
    pub fn compute(x: &Variety, q: &[Scalar]) -> Result<ProjectionData> {
        let projection = project(x, q)?;
        let incidence = secant_locus_incidence(x, q)?;
        let conductor = match secant_locus_conductor(x, q) {
            Ok(c) => Some(c),
            Err(Error::HypothesisUnmet(_)) => None,
            Err(e) => return Err(e),
        };
        let agreement = match &conductor {
            Some(c) => compare_loci(&incidence.ideal, &c.ideal)?,
            None => Agreement::Equal,
        };
        let r = x.ambient_dim();
        let n = x.dim()? as usize;
        let table_x = graded_betti(x.ideal(), None)?;
        let pred_x = table_predicates(&table_x, r, n)?;
        let table_q = graded_betti(projection.image.ideal(), None)?;
        let pred_q = table_predicates(&table_q, r - 1, n)?;
        Ok(ProjectionData {
            projection,
            incidence,
            conductor,
            agreement,
            table_x,
            pred_x,
            table_q,
            pred_q,
        })
    }

    pub fn secant(&self) -> &SecantReport {
        self.conductor.as_ref().unwrap_or(&self.incidence)
    }
}

/// `h0(O_X(j))`: from the profile when registered, else the Hilbert function
/// (exact for projectively normal `X`).
fn h0_x(x: &Variety, j: u32) -> Result<i64> {
    Ok(match x.profile() {
        Some(p) => p.h0(j) as i64,
        None => hilbert_function(x.ideal(), j)? as i64,
    })
}

fn h0_q(x: &Variety, s: i64, j: u32) -> Result<i64> {
    let h = h0_x(x, j)?;
    Ok(if j == 0 { h } else { h - binomial(s + j as i64 - 1, s) })
}

const LAMBDA_SAMPLES: usize = 3;

/// Runs every check on `(X, q)`. The verdict is `hypothesis-unmet` when the
/// Betti table of `X` shows `N_2` fails, `inconsistent` when the two secant
/// methods disagree, and otherwise `pass` or `mismatch`.
pub fn verify_projection_theorem(x: &Variety, q: &[Scalar], emit_ideals: bool) -> Result<VerificationReport> {
    let data = ProjectionData::compute(x, q)?;
    let r = x.ambient_dim() as i64;
    let n = x.dim()?;
    let sec = data.secant();
    let s = sec.s;
    let xq = &data.projection.image;
    let hx = x.ideal().hilbert()?;
    let hq = xq.ideal().hilbert()?;
    let mut checks = Vec::new();

    checks.push(Check::new("secant methods agree", Agreement::Equal, data.agreement));
    checks.push(Check::new("birational", hx.degree, hq.degree));

    let hf_q1 = hilbert_function(xq.ideal(), 1)? as i64;
    checks.push(Check::new("(1) linearly normal", s >= 0, hf_q1 == h0_q(x, s, 1)?));
    let delta_x = n + hx.degree - h0_x(x, 1)?;
    let delta_q = n + hq.degree - h0_q(x, s, 1)?;
    checks.push(Check::new("(1) delta genus", delta_x + i64::from(s >= 0), delta_q));

    if n >= 1 {
        let g_x = hx.sectional_genus().unwrap_or(0);
        let g_q = hq.sectional_genus().unwrap_or(0);
        checks.push(Check::new("(2) sectional genus", g_x + i64::from(s == n - 1), g_q));
    }

    let mut normal = Vec::new();
    for j in 2..=5u32 {
        let hf = hilbert_function(xq.ideal(), j)? as i64;
        normal.push((j, hf, h0_q(x, s, j)?));
    }
    checks.push(Check::new(
        "(3) j-normal for j = 2..5",
        true,
        normal.iter().all(|&(_, a, b)| a == b),
    ));
    let quad_x = binomial(r + 2, 2) - hilbert_function(x.ideal(), 2)? as i64;
    let quad_q = binomial(r + 1, 2) - hilbert_function(xq.ideal(), 2)? as i64;
    checks.push(Check::new("(3) quadrics in the ideal of X_q", quad_x + s - r, quad_q));

    let p = data.pred_x.max_np.unwrap_or(r as usize).max(1);
    checks.push(Check::new(
        &format!("(4) N_{{3,{}}}", p - 1),
        true,
        data.pred_q.satisfies_ndp(3, p - 1),
    ));
    let high_gens = data.table_q.entries().any(|((i, j), b)| i == 1 && j >= 3 && b > 0);
    checks.push(Check::new("(4) generated by quadrics and cubics", true, !high_gens));
    checks.push(Check::new(
        "(5) regularity",
        data.pred_x.regularity.max(3),
        data.pred_q.regularity,
    ));
    checks.push(Check::new(
        "(6) depth",
        (data.pred_x.depth as i64).min(s + 2),
        data.pred_q.depth as i64,
    ));

    if s >= 0 {
        let verdict = classify_quadric(&sec.ideal)?;
        let ok = match &verdict {
            QuadricVerdict::Quadric(c) => s == c.span_dim - 1 || s == c.span_dim,
            QuadricVerdict::NotAQuadric { .. } => false,
        };
        checks.push(Check::with_pass("secant locus is a quadric in its span", "quadric", &verdict, ok));
    }
    if let Some(lambda) = data.conductor.as_ref().and_then(|c| c.lambda.as_ref()) {
        let linear = lambda.linear_part()?;
        let points = if lambda.is_unit()? {
            Vec::new()
        } else {
            random_points_of_linear_space(&linear, lambda.ring(), LAMBDA_SAMPLES, 0x1a4b)?
        };
        let mut all = true;
        for pt in &points {
            let on = xq.contains_point(pt)?;
            all &= on && is_singular_point(xq.ideal(), pt)?;
        }
        checks.push(Check::new("Lambda inside Sing(X_q)", true, all));
    }

    let verdict = if data.pred_x.max_np.is_some_and(|m| m < 2) {
        Verdict::HypothesisUnmet
    } else if data.agreement != Agreement::Equal {
        Verdict::Inconsistent
    } else {
        Verdict::from_checks(&checks)
    };
    let ideals = emit_ideals.then(|| {
        let fmt = |i: &crate::groebner::Ideal| IdealFile::format(i.ring(), i.gens(), None);
        let mut v = json!({
            "x": fmt(x.ideal()),
            "x_q": fmt(xq.ideal()),
            "sigma": fmt(&sec.ideal),
        });
        if let Some(l) = &sec.lambda {
            v["lambda"] = json!(fmt(l));
        }
        v
    });
    Ok(VerificationReport {
        variety: x.name().to_string(),
        field: x.field().to_string(),
        center: q.iter().map(|c| c.to_string()).collect(),
        s,
        checks,
        verdict,
        betti_x: data.table_x.to_json(),
        betti_q: data.table_q.to_json(),
        ideals,
    })
}
