//! Named verification suites shared by the command line and the acceptance tests.

use serde::Serialize;
use serde_json::{json, Value};

use super::verify::ProjectionData;
use super::{
    choose_center, classify_quadric, compare_loci, project, secant_locus_conductor, secant_locus_incidence,
    verify_projection_theorem, Agreement, CenterSpec, Check, QuadricVerdict, Verdict,
};
use crate::betti::{graded_betti, table_predicates};
use crate::error::Result;
use crate::polyring::Scalar;
use crate::varieties::{
    grassmann_g14_section, quadric_hypersurface, random_complete_intersection, scroll, segre, veronese,
    Variety,
};

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
    pub details: Value,
}

impl SuiteReport {
    fn new(suite: &str, checks: Vec<Check>, details: Value) -> SuiteReport {
        SuiteReport {
            suite: suite.to_string(),
            verdict: Verdict::from_checks(&checks),
            checks,
            details,
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn coords(q: &[Scalar]) -> Vec<String> {
    q.iter().map(|c| c.to_string()).collect()
}

/// The projection checks on one `(X, q)`.
pub fn thm33(x: &Variety, spec: &CenterSpec, seed: u64, emit_ideals: bool) -> Result<SuiteReport> {
    let q = choose_center(x, spec, seed)?;
    let report = verify_projection_theorem(x, &q, emit_ideals)?;
    let verdict = report.verdict;
    let mut out = SuiteReport::new("thm3.3", report.checks.clone(), serde_json::to_value(&report).unwrap());
    out.verdict = verdict;
    Ok(out)
}

/// Both secant methods on `trials` centers: equal loci, each a quadric in its span.
pub fn cor32(x: &Variety, spec: &CenterSpec, trials: usize, seed: u64) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    let mut cases = Vec::new();
    for t in 0..trials {
        let q = choose_center(x, spec, seed.wrapping_add(t as u64))?;
        let a = secant_locus_incidence(x, &q)?;
        let b = secant_locus_conductor(x, &q)?;
        let agreement = compare_loci(&a.ideal, &b.ideal)?;
        checks.push(Check::new(&format!("trial {t}: secant methods agree"), Agreement::Equal, agreement));
        let quadric = if b.s >= 0 { Some(classify_quadric(&b.ideal)?) } else { None };
        let ok = match &quadric {
            Some(QuadricVerdict::Quadric(c)) => b.s == c.span_dim - 1 || b.s == c.span_dim,
            Some(QuadricVerdict::NotAQuadric { .. }) => false,
            None => true,
        };
        checks.push(Check::with_pass(
            &format!("trial {t}: quadric in its span"),
            "quadric or empty",
            &quadric,
            ok,
        ));
        cases.push(json!({
            "center": coords(&q),
            "s": b.s,
            "s_incidence": a.s,
            "quadric": quadric,
        }));
    }
    Ok(SuiteReport::new("cor3.2", checks, json!({ "variety": x.name(), "cases": cases })))
}

/// `(deg = codim + 1, Reg = 2, N_{2,codim})` for one variety.
pub fn minimal_degree_conditions(x: &Variety) -> Result<[bool; 3]> {
    let r = x.ambient_dim();
    let n = x.dim()? as usize;
    let e = r - n;
    let table = graded_betti(x.ideal(), None)?;
    let pred = table_predicates(&table, r, n)?;
    Ok([
        x.degree()? == e as i64 + 1,
        pred.regularity == 2,
        pred.satisfies_ndp(2, e),
    ])
}

/// Corpus for the minimal degree equivalence: members expected to satisfy
/// all three conditions, then members expected to fail all three.
pub fn thm51_corpus(seed: u64) -> Result<(Vec<Variety>, Vec<Variety>)> {
    let minimal = vec![
        scroll(&[1, 2])?,
        scroll(&[2, 2])?,
        scroll(&[3])?.with_name("twisted-cubic"),
        segre(1, 2)?,
        quadric_hypersurface(3)?,
        veronese(2, 2)?,
    ];
    let mut other = vec![crate::varieties::elliptic_quartic()?];
    for cut in 0..=3 {
        other.push(grassmann_g14_section(cut, seed)?);
    }
    let projections: Vec<(Variety, CenterSpec)> = vec![
        (veronese(2, 2)?, CenterSpec::OnSecant),
        (veronese(2, 2)?, CenterSpec::GeneralOffSecant),
        (segre(1, 2)?, CenterSpec::General),
        (scroll(&[3])?, CenterSpec::General),
        (grassmann_g14_section(3, seed)?, CenterSpec::General),
    ];
    for (x, spec) in projections {
        let q = choose_center(&x, &spec, seed)?;
        let p = project(&x, &q)?;
        other.push(p.image.with_name(&format!("{} from a {} center", x.name(), spec_name(&spec))));
    }
    Ok((minimal, other))
}

fn spec_name(spec: &CenterSpec) -> &'static str {
    match spec {
        CenterSpec::Explicit(_) => "given",
        CenterSpec::OnSecant => "secant",
        CenterSpec::OnTangent => "tangent",
        CenterSpec::General => "general",
        CenterSpec::GeneralOffSecant => "general off-secant",
    }
}

pub fn thm51(seed: u64) -> Result<SuiteReport> {
    let (minimal, other) = thm51_corpus(seed)?;
    let mut checks = Vec::new();
    for (list, expected) in [(&minimal, true), (&other, false)] {
        for x in list {
            let got = minimal_degree_conditions(x)?;
            checks.push(Check::new(x.name(), [expected; 3], got));
        }
    }
    Ok(SuiteReport::new(
        "thm5.1",
        checks,
        json!({ "conditions": ["deg = codim + 1", "Reg = 2", "N_{2,codim}"] }),
    ))
}

/// The Del Pezzo threefold `X_3 ⊂ P^6` projected from a general point.
pub fn ex54(seed: u64) -> Result<SuiteReport> {
    let x = grassmann_g14_section(3, seed)?;
    let q = choose_center(&x, &CenterSpec::General, seed)?;
    let report = verify_projection_theorem(&x, &q, false)?;
    let data = ProjectionData::compute(&x, &q)?;
    let mut checks = report.checks.clone();
    checks.push(Check::new("s = k - 2", 1, report.s));
    let expected: Vec<((usize, usize), u64)> = vec![((0, 0), 1), ((1, 2), 5), ((2, 2), 5), ((3, 2), 1)];
    let got: Vec<((usize, usize), u64)> = data.table_q.entries().collect();
    checks.push(Check::new("Betti table of X_q", &expected, &got));
    checks.push(Check::new("depth of X_q", 3, data.pred_q.depth));
    checks.push(Check::new("regularity of X_q", 3, data.pred_q.regularity));
    let x_table: Vec<((usize, usize), u64)> = data.table_x.entries().collect();
    checks.push(Check::new(
        "Betti table of X_3",
        vec![((0, 0), 1), ((1, 1), 5), ((2, 1), 5), ((3, 2), 1)],
        &x_table,
    ));
    checks.push(Check::new("X_3 satisfies N_2 but not N_3", (true, false), (
        data.pred_x.satisfies_np(2),
        data.pred_x.satisfies_np(3),
    )));
    let mut out = SuiteReport::new(
        "ex5.4",
        checks,
        json!({
            "center": coords(&q),
            "betti_x": data.table_x.to_grid(),
            "betti_q": data.table_q.to_grid(),
        }),
    );
    if report.verdict != Verdict::Pass && out.verdict == Verdict::Pass {
        out.verdict = report.verdict;
    }
    Ok(out)
}

/// Two general quadrics in `P^3`: `N_1` without `N_2`, a plane quartic as
/// projection and a secant locus that is no quadric in its span.
pub fn ex37(seed: u64) -> Result<SuiteReport> {
    let x = random_complete_intersection(4, &[2, 2], seed)?.with_name("ci(2,2)");
    let table = graded_betti(x.ideal(), None)?;
    let pred = table_predicates(&table, 3, 1)?;
    let q = choose_center(&x, &CenterSpec::General, seed)?;
    let p = project(&x, &q)?;
    let image_table = graded_betti(p.image.ideal(), None)?;
    let image_pred = table_predicates(&image_table, 2, 1)?;
    let sigma = secant_locus_incidence(&x, &q)?;
    let verdict = classify_quadric(&sigma.ideal)?;
    let checks = vec![
        Check::new("N_1 holds", true, pred.satisfies_np(1)),
        Check::new("N_2 fails", false, pred.satisfies_np(2)),
        Check::new("beta_{2,2}", 1, table.get(2, 2)),
        Check::new(
            "projection is a plane quartic",
            (1, 4),
            (p.image.ideal().gens().len(), p.image.degree()?),
        ),
        Check::new("regularity of X_q", 4, image_pred.regularity),
        Check::with_pass(
            "secant locus is not a quadric",
            "not-a-quadric",
            &verdict,
            matches!(verdict, QuadricVerdict::NotAQuadric { .. }),
        ),
    ];
    Ok(SuiteReport::new(
        "ex3.7",
        checks,
        json!({
            "center": coords(&q),
            "secant_locus_dim": sigma.s,
            "secant_locus_length": sigma.length()?,
            "betti_x": table.to_grid(),
        }),
    ))
}
