//! Acceptance gate: one line per criterion, nonzero exit on any failure.

mod support;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use secantlab::betti::{graded_betti, table_predicates};
use secantlab::hilbert::{binomial, hilbert_function};
use secantlab::polyring::{Field, MonomialOrder, Scalar};
use secantlab::projsec::suites::{ex37, ex54, minimal_degree_conditions, thm51_corpus};
use secantlab::projsec::{
    choose_center, classify_quadric, compare_loci, project, secant_locus_conductor, secant_locus_incidence,
    verify_projection_theorem, Agreement, CenterSpec, QuadricVerdict, Verdict,
};
use secantlab::stratify::{stratification_survey, SurveyConfig, SurveyVerdict};
use secantlab::varieties::{implicitize, scroll, segre, veronese, Variety};
use secantlab::{Error, Result};
use support::*;

type Outcome = Result<(bool, String)>;

fn quadric_is(v: &QuadricVerdict, span: i64, rank: usize) -> bool {
    v.quadric().is_some_and(|c| c.span_dim == span && c.rank == rank && c.smooth)
}

fn quadrics_in(x: &Variety) -> Result<i64> {
    let r = x.ambient_dim() as i64;
    Ok(binomial(r + 2, 2) - hilbert_function(x.ideal(), 2)? as i64)
}

fn conics_on_the_veronese_surface() -> Outcome {
    let x = veronese(2, 2)?;
    let mut ok = true;
    for seed in 0..10 {
        let q = choose_center(&x, &CenterSpec::OnSecant, seed)?;
        let a = secant_locus_incidence(&x, &q)?;
        let b = secant_locus_conductor(&x, &q)?;
        ok &= a.s == 1 && b.s == 1;
        ok &= quadric_is(&classify_quadric(&a.ideal)?, 2, 3) && quadric_is(&classify_quadric(&b.ideal)?, 2, 3);
    }
    Ok((ok, "10 centers on secant lines: s = 1, smooth plane conic by both methods".into()))
}

fn veronese_surface_from_a_secant_point() -> Outcome {
    let x = veronese(2, 2)?;
    let q = choose_center(&x, &CenterSpec::OnSecant, 1)?;
    let report = verify_projection_theorem(&x, &q, false)?;
    let xq = project(&x, &q)?.image;
    let table = graded_betti(xq.ideal(), None)?;
    let pred = table_predicates(&table, 4, 2)?;
    let hx = x.ideal().hilbert()?;
    let hq = xq.ideal().hilbert()?;
    let delta = |n: i64, d: i64, h1: i64| n + d - h1;
    let got = (
        quadrics_in(&xq)?,
        pred.regularity,
        pred.depth,
        hq.degree,
        delta(2, hx.degree, 6),
        delta(2, hq.degree, 5),
        hx.sectional_genus(),
        hq.sectional_genus(),
    );
    let want = (2, 3, 3, 4, 0, 1, Some(0), Some(1));
    let ok = got == want && report.verdict == Verdict::Pass;
    Ok((ok, format!("(quadrics, Reg, depth, deg, delta, delta_q, g, g_q) = {got:?}")))
}

fn segre_threefold_from_general_points() -> Outcome {
    let x = segre(1, 2)?;
    let mut ok = true;
    for seed in 0..10 {
        let q = choose_center(&x, &CenterSpec::General, seed)?;
        let a = secant_locus_incidence(&x, &q)?;
        let b = secant_locus_conductor(&x, &q)?;
        ok &= a.s == 2 && b.s == 2 && quadric_is(&classify_quadric(&b.ideal)?, 3, 4);
        ok &= compare_loci(&a.ideal, &b.ideal)? == Agreement::Equal;
        let xq = project(&x, &q)?.image;
        let pred = table_predicates(&graded_betti(xq.ideal(), None)?, 4, 3)?;
        ok &= quadrics_in(&xq)? == 0 && pred.depth == 4 && pred.regularity == 3;
    }
    Ok((ok, "10 general centers: s = 2, smooth quadric surface, 0 quadrics, depth 4, Reg 3".into()))
}

fn del_pezzo_threefold_projection() -> Outcome {
    let report = ex54(1)?;
    let x = secantlab::varieties::grassmann_g14_section(3, 1)?;
    let q = choose_center(&x, &CenterSpec::General, 1)?;
    let s = secant_locus_conductor(&x, &q)?.s;
    let xq = project(&x, &q)?.image;
    let table = graded_betti(xq.ideal(), None)?;
    let pred = table_predicates(&table, 5, 3)?;
    let entries: BTreeMap<_, _> = table.entries().collect();
    let want: BTreeMap<_, _> = [((0, 0), 1), ((1, 2), 5), ((2, 2), 5), ((3, 2), 1)].into_iter().collect();
    let ok = s == 1
        && quadrics_in(&xq)? == 0
        && entries == want
        && pred.depth == 3
        && pred.regularity == 3
        && report.verdict == Verdict::Pass;
    Ok((ok, format!("s = {s}, Betti {entries:?}, depth {}, Reg {}", pred.depth, pred.regularity)))
}

fn two_quadrics_are_sharp() -> Outcome {
    let report = ex37(1)?;
    Ok((
        report.verdict == Verdict::Pass,
        report
            .checks
            .iter()
            .map(|c| format!("{} {}", c.name, if c.pass { "ok" } else { "failed" }))
            .collect::<Vec<_>>()
            .join(", "),
    ))
}

fn minimal_degree_equivalence() -> Outcome {
    let (minimal, other) = thm51_corpus(1)?;
    let mut bad = Vec::new();
    for x in &minimal {
        if minimal_degree_conditions(x)? != [true; 3] {
            bad.push(x.name().to_string());
        }
    }
    for x in &other {
        if minimal_degree_conditions(x)? != [false; 3] {
            bad.push(x.name().to_string());
        }
    }
    Ok((
        bad.is_empty(),
        format!("{} minimal, {} others, disagreeing: {bad:?}", minimal.len(), other.len()),
    ))
}

fn oracle_equivalence() -> Outcome {
    let mut agree = 0;
    for (x, spec, seed) in corpus_centers() {
        let q = choose_center(&x, &spec, seed)?;
        let a = secant_locus_incidence(&x, &q)?;
        let b = secant_locus_conductor(&x, &q)?;
        agree += usize::from(compare_loci(&a.ideal, &b.ideal)? == Agreement::Equal);
    }
    let cases = oracle_cases();
    let mut matched = 0;
    for (_, ideal, top) in &cases {
        let table = graded_betti(ideal, None)?;
        let ours: BTreeMap<_, _> = table.entries().collect();
        matched += usize::from(ours == brute_force_betti(ideal, *top));
    }
    let total = corpus_centers().len();
    Ok((
        agree == total && agree >= 8 && matched == cases.len() && matched >= 5,
        format!("secant methods equal on {agree}/{total}, Betti tables equal on {matched}/{}", cases.len()),
    ))
}

fn property_suites() -> Outcome {
    let corpus = corpus();
    let mut gb = 0;
    let mut euler = 0;
    for x in &corpus {
        let basis = x.ideal().groebner_basis(MonomialOrder::Grevlex)?;
        gb += usize::from(groebner_postconditions(x.ideal().gens(), &basis).is_ok());
        let table = graded_betti(x.ideal(), None)?;
        euler += usize::from(table.euler_identity_holds(&x.ideal().hilbert()?.numerator));
    }
    let field = Field::Prime(32003);
    let mut evaluated = 0;
    let mut eval_ok = true;
    let parametrized = [
        veronese(1, 3)?,
        veronese(1, 4)?,
        veronese(2, 2)?,
        segre(1, 2)?,
        scroll(&[1, 2])?,
        scroll(&[2, 2])?,
    ];
    for x in &parametrized {
        let x = x.change_field(field)?;
        let p = x.parametrization().ok_or(Error::NoParametrization)?;
        let ideal = implicitize(p, x.ring())?;
        eval_ok &= ideal.same_ideal(x.ideal())?;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let src: Vec<Scalar> = (0..p.source_ring.nvars()).map(|_| field.from_i64(rng.gen_range(0..32003))).collect();
            let pt = p.evaluate(&src)?;
            for g in ideal.gens() {
                eval_ok &= g.evaluate(&pt)?.is_zero();
            }
            evaluated += 1;
        }
    }
    let config = SurveyConfig {
        trials: 20,
        on_secant: 5,
        seed: 13,
        ..SurveyConfig::default()
    };
    let x = veronese(2, 2)?;
    let same = stratification_survey(&x, &config)?.to_json() == stratification_survey(&x, &config)?.to_json();
    let n = corpus.len();
    Ok((
        gb == n && euler == n && eval_ok && same,
        format!(
            "GB postconditions {gb}/{n}, Euler identity {euler}/{n}, {evaluated} parametrized points, survey determinism {same}"
        ),
    ))
}

fn stratification_surveys() -> Outcome {
    let run = |x: Variety, on_secant: usize, tangent_check: bool| {
        let config = SurveyConfig {
            trials: 50,
            on_secant,
            seed: 1,
            tangent_check,
            ..SurveyConfig::default()
        };
        stratification_survey(&x, &config)
    };
    let v22 = run(veronese(2, 2)?, 10, true)?;
    let v23 = run(veronese(2, 3)?, 10, false)?;
    let s12 = run(segre(1, 2)?, 0, false)?;
    let tangent_checked = v22.records.iter().filter(|r| r.on_tangent_variety.is_some()).count();
    let positive = v22.records.iter().filter(|r| r.s.is_some_and(|s| s > 0)).count();
    let ok = v22.support() == vec![-1, 1]
        && v23.support() == vec![-1, 0]
        && s12.support() == vec![2]
        && v22.tangent_failures.is_empty()
        && tangent_checked == positive
        && [&v22, &v23, &s12].iter().all(|r| r.verdict == SurveyVerdict::Consistent);
    Ok((
        ok,
        format!(
            "supports {:?} {:?} {:?}, tangent membership {}/{}",
            v22.support(),
            v23.support(),
            s12.support(),
            positive - v22.tangent_failures.len(),
            positive
        ),
    ))
}

fn main() {
    let criteria: Vec<(&str, Duration, fn() -> Outcome)> = vec![
        ("secant loci of the Veronese surface are smooth conics", Duration::from_secs(120), conics_on_the_veronese_surface),
        ("Veronese surface projected from a secant point", Duration::from_secs(180), veronese_surface_from_a_secant_point),
        ("Segre threefold projected from general points", Duration::from_secs(300), segre_threefold_from_general_points),
        ("Del Pezzo threefold projected from a general point", Duration::from_secs(600), del_pezzo_threefold_projection),
        ("two quadrics in P^3 show sharpness", Duration::from_secs(120), two_quadrics_are_sharp),
        ("minimal degree conditions agree", Duration::from_secs(600), minimal_degree_equivalence),
        ("independent oracles agree", Duration::from_secs(600), oracle_equivalence),
        ("property suites", Duration::from_secs(600), property_suites),
        ("stratification surveys", Duration::from_secs(900), stratification_surveys),
    ];
    let mut failed = 0;
    for (label, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (pass, detail) = match outcome {
            Ok((pass, detail)) => (pass && elapsed < limit, detail),
            Err(e) => (false, format!("error: {e}")),
        };
        let detail = format!("{detail} [{:.2}s of {}s]", elapsed.as_secs_f64(), limit.as_secs());
        if !report(label, pass, &detail) {
            failed += 1;
        }
    }
    println!("acceptance: {} of 9 passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
