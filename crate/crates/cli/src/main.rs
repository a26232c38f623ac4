use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use secantlab::betti::{graded_betti, table_predicates};
use secantlab::groebner::{set_default_budget, Budget, Ideal};
use secantlab::hilbert::numerical_invariants;
use secantlab::polyring::{Field, IdealFile};
use secantlab::projsec::suites::{self, SuiteReport};
use secantlab::projsec::{
    choose_center, classify_quadric, compare_loci, project, secant_locus_conductor, secant_locus_incidence,
    CenterSpec, SecantReport, Verdict,
};
use secantlab::stratify::{stratification_survey, SurveyConfig, SurveyVerdict};
use secantlab::varieties::{parse_variety_spec, Variety};
use secantlab::Error;

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "secantlab", version, about = "Projections, secant loci and Betti tables of projective varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Coefficient field: QQ or GF(p) for an odd prime p.
    #[arg(long, global = true)]
    field: Option<String>,

    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Write the JSON report to this path (`-` for standard output).
    #[arg(long, global = true)]
    json: Option<PathBuf>,

    /// Cap on S-pairs reduced per Groebner basis.
    #[arg(long, global = true, env = "SECANTLAB_MAX_PAIRS")]
    max_pairs: Option<usize>,

    /// Wall-clock cap in seconds per Groebner basis.
    #[arg(long, global = true, env = "SECANTLAB_TIME_LIMIT")]
    time_limit: Option<u64>,
}

#[derive(Args)]
struct VarietyArg {
    /// veronese:n,d | segre:a,b | scroll:a1+a2+.. | twisted-cubic | g14:cut |
    /// quadric:r | elliptic-quartic | ci:PATH | file:PATH
    #[arg(long, short)]
    variety: String,
}

#[derive(Args)]
struct CenterArg {
    /// Comma separated coordinates, on-secant, on-tangent, general or general-off-secant.
    #[arg(long, short, default_value = "general", allow_hyphen_values = true)]
    center: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Incidence,
    Conductor,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    #[value(name = "thm3.3")]
    Thm33,
    #[value(name = "cor3.2")]
    Cor32,
    #[value(name = "thm5.1")]
    Thm51,
    #[value(name = "ex5.4")]
    Ex54,
    #[value(name = "ex3.7")]
    Ex37,
}

#[derive(Subcommand)]
enum Command {
    /// Write the ideal of a corpus variety.
    Construct {
        #[command(flatten)]
        variety: VarietyArg,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Project from a center and report the image.
    Project {
        #[command(flatten)]
        variety: VarietyArg,
        #[command(flatten)]
        center: CenterArg,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Secant locus of a center.
    Secant {
        #[command(flatten)]
        variety: VarietyArg,
        #[command(flatten)]
        center: CenterArg,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Graded Betti table and the properties read off it.
    Betti {
        #[arg(long, short, conflicts_with = "ideal", required_unless_present = "ideal")]
        variety: Option<String>,
        /// Ideal file.
        #[arg(long)]
        ideal: Option<PathBuf>,
    },
    /// Dimension, degree, delta genus and sectional genus.
    Invariants {
        #[command(flatten)]
        variety: VarietyArg,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, short)]
        variety: Option<String>,
        #[arg(long, short, allow_hyphen_values = true)]
        center: Option<String>,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        /// Include the ideals of X, X_q and the secant locus in the report.
        #[arg(long)]
        emit_ideals: bool,
    },
    /// Tally the secant strata of sampled centers.
    Stratify {
        #[command(flatten)]
        variety: VarietyArg,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 10)]
        on_secant: usize,
        #[arg(long, default_value_t = 0)]
        on_tangent: usize,
        /// Fraction of trials cross-checked by the incidence method.
        #[arg(long, default_value_t = 0.2)]
        cross_check: f64,
        /// Check that centers with s > 0 lie on the tangent variety.
        #[arg(long)]
        tangent_check: bool,
        /// Run over QQ instead of GF(32003).
        #[arg(long)]
        rational: bool,
    },
}

struct Outcome {
    summary: String,
    report: Value,
    code: u8,
}

impl Outcome {
    fn ok(summary: String, report: Value) -> Outcome {
        Outcome { summary, report, code: 0 }
    }
}

fn field_of(cli: &Cli) -> anyhow::Result<Option<Field>> {
    cli.field.as_deref().map(|f| f.parse::<Field>().map_err(Into::into)).transpose()
}

fn load(spec: &str, cli: &Cli) -> anyhow::Result<Variety> {
    let x = parse_variety_spec(spec, cli.seed)?;
    Ok(match field_of(cli)? {
        Some(f) if f != x.field() => x.change_field(f)?,
        _ => x,
    })
}

fn center(x: &Variety, spec: &str, seed: u64) -> anyhow::Result<Vec<secantlab::Scalar>> {
    let spec: CenterSpec = spec.parse()?;
    Ok(choose_center(x, &spec, seed)?)
}

fn write_file(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn coords(q: &[secantlab::Scalar]) -> Vec<String> {
    q.iter().map(|c| c.to_string()).collect()
}

fn secant_json(r: &SecantReport) -> anyhow::Result<Value> {
    let quadric = if r.s >= 0 { Some(classify_quadric(&r.ideal)?) } else { None };
    Ok(json!({
        "method": r.method,
        "s": r.s,
        "span_dim": r.span_dim,
        "length": r.length()?,
        "ideal": IdealFile::format(r.ideal.ring(), r.ideal.gens(), None),
        "quadric": quadric,
    }))
}

fn suite_outcome(report: SuiteReport) -> Outcome {
    let mut summary = format!("{}: {}\n", report.suite, verdict_name(report.verdict));
    for c in &report.checks {
        summary.push_str(&format!(
            "  [{}] {}: predicted {}, computed {}\n",
            if c.pass { "pass" } else { "FAIL" },
            c.name,
            c.predicted,
            c.computed
        ));
    }
    let code = match report.verdict {
        Verdict::Pass => 0,
        Verdict::Mismatch | Verdict::Inconsistent => EXIT_MISMATCH,
        Verdict::HypothesisUnmet => EXIT_INPUT,
    };
    Outcome {
        summary,
        report: serde_json::to_value(&report).expect("serializable"),
        code,
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Mismatch => "mismatch",
        Verdict::HypothesisUnmet => "hypothesis unmet",
        Verdict::Inconsistent => "inconsistent",
    }
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Construct { variety, out } => {
            let x = load(&variety.variety, cli)?;
            let text = IdealFile::format(x.ring(), x.ideal().gens(), Some(x.name()));
            if let Some(path) = out {
                write_file(path, &text)?;
            }
            let summary = match out {
                Some(p) => format!("{}: {} generators written to {}", x.name(), x.ideal().gens().len(), p.display()),
                None => text.clone(),
            };
            Ok(Outcome::ok(
                summary,
                json!({
                    "variety": x.name(),
                    "field": x.field().to_string(),
                    "ambient_dim": x.ambient_dim(),
                    "generators": x.ideal().gens().len(),
                    "ideal": text,
                }),
            ))
        }
        Command::Project { variety, center: c, out } => {
            let x = load(&variety.variety, cli)?;
            let q = center(&x, &c.center, cli.seed)?;
            let p = project(&x, &q)?;
            let text = IdealFile::format(p.image.ring(), p.image.ideal().gens(), Some(p.image.name()));
            if let Some(path) = out {
                write_file(path, &text)?;
            }
            let summary = format!(
                "{} from [{}]: degree {} -> {}, birational {}\n{}",
                x.name(),
                coords(&q).join(", "),
                x.degree()?,
                p.image.degree()?,
                p.birational,
                text
            );
            Ok(Outcome::ok(
                summary,
                json!({
                    "variety": x.name(),
                    "center": coords(&q),
                    "degree": p.image.degree()?,
                    "map_degree": p.map_degree,
                    "birational": p.birational,
                    "image": text,
                }),
            ))
        }
        Command::Secant {
            variety,
            center: c,
            method,
            out,
        } => {
            let x = load(&variety.variety, cli)?;
            let q = center(&x, &c.center, cli.seed)?;
            let (inc, con) = match method {
                Method::Incidence => (Some(secant_locus_incidence(&x, &q)?), None),
                Method::Conductor => (None, Some(secant_locus_conductor(&x, &q)?)),
                Method::Both => (Some(secant_locus_incidence(&x, &q)?), Some(secant_locus_conductor(&x, &q)?)),
            };
            let agreement = match (&inc, &con) {
                (Some(a), Some(b)) => Some(compare_loci(&a.ideal, &b.ideal)?),
                _ => None,
            };
            let main = con.as_ref().or(inc.as_ref()).expect("one method ran");
            if let Some(path) = out {
                write_file(path, &IdealFile::format(main.ideal.ring(), main.ideal.gens(), None))?;
            }
            let mut report = json!({
                "variety": x.name(),
                "center": coords(&q),
                "s": main.s,
                "agreement": agreement,
            });
            if let Some(a) = &inc {
                report["incidence"] = secant_json(a)?;
            }
            if let Some(b) = &con {
                report["conductor"] = secant_json(b)?;
            }
            let quadric = &report[if con.is_some() { "conductor" } else { "incidence" }]["quadric"];
            let mut summary = format!(
                "{} from [{}]: s = {}\n  quadric: {}\n",
                x.name(),
                coords(&q).join(", "),
                main.s,
                quadric
            );
            if let Some(a) = agreement {
                summary.push_str(&format!("  methods: {}\n", serde_json::to_value(a)?));
            }
            let code = match agreement {
                Some(a) if a != secantlab::projsec::Agreement::Equal => EXIT_MISMATCH,
                _ => 0,
            };
            Ok(Outcome { summary, report, code })
        }
        Command::Betti { variety, ideal } => {
            let (name, ideal) = match (variety, ideal) {
                (Some(spec), _) => {
                    let x = load(spec, cli)?;
                    (x.name().to_string(), x.ideal().clone())
                }
                (None, Some(path)) => {
                    let f = IdealFile::read(path)?;
                    let mut ideal = Ideal::new(&f.ring, f.polys)?;
                    if let Some(field) = field_of(cli)? {
                        if field != ideal.field() {
                            ideal = ideal.change_field(field)?;
                        }
                    }
                    (path.display().to_string(), ideal)
                }
                (None, None) => anyhow::bail!("give --variety or --ideal"),
            };
            betti_outcome(&name, &ideal)
        }
        Command::Invariants { variety } => {
            let x = load(&variety.variety, cli)?;
            let inv = numerical_invariants(&x)?;
            let summary = format!(
                "{}: dim {}, degree {}, codim {}, h0(O(1)) {}, delta {}, sectional genus {}",
                x.name(),
                inv.dim,
                inv.degree,
                inv.codim,
                inv.h0_1,
                inv.delta_genus,
                inv.sectional_genus
            );
            let mut report = serde_json::to_value(&inv)?;
            report["variety"] = json!(x.name());
            Ok(Outcome::ok(summary, report))
        }
        Command::Verify {
            suite,
            variety,
            center: c,
            trials,
            emit_ideals,
        } => {
            let need = |default: &str| -> anyhow::Result<Variety> { load(variety.as_deref().unwrap_or(default), cli) };
            let spec: CenterSpec = c.as_deref().unwrap_or("general").parse()?;
            let report = match suite {
                Suite::Thm33 => suites::thm33(&need("veronese:2,2")?, &spec, cli.seed, *emit_ideals)?,
                Suite::Cor32 => {
                    let spec: CenterSpec = c.as_deref().unwrap_or("on-secant").parse()?;
                    suites::cor32(&need("veronese:2,2")?, &spec, *trials, cli.seed)?
                }
                Suite::Thm51 => suites::thm51(cli.seed)?,
                Suite::Ex54 => suites::ex54(cli.seed)?,
                Suite::Ex37 => suites::ex37(cli.seed)?,
            };
            Ok(suite_outcome(report))
        }
        Command::Stratify {
            variety,
            trials,
            on_secant,
            on_tangent,
            cross_check,
            tangent_check,
            rational,
        } => {
            let x = parse_variety_spec(&variety.variety, cli.seed)?;
            let field = match (rational, field_of(cli)?) {
                (true, _) => Field::Rational,
                (false, Some(f)) => f,
                (false, None) => Field::Prime(32003),
            };
            let config = SurveyConfig {
                trials: *trials,
                field,
                seed: cli.seed,
                on_secant: *on_secant,
                on_tangent: *on_tangent,
                cross_check: *cross_check,
                tangent_check: *tangent_check,
            };
            let report = stratification_survey(&x, &config)?;
            let hist: Vec<String> = report.histogram.iter().map(|(s, n)| format!("s = {s}: {n}")).collect();
            let mut summary = format!(
                "{} over {}, {} trials: {}\n  on X: {}, inconsistent: {:?}\n  expected {:?}, verdict {}\n",
                report.variety,
                report.field,
                report.trials,
                hist.join(", "),
                report.on_variety,
                report.inconsistent,
                report.expected,
                serde_json::to_value(report.verdict)?
            );
            if let Some(c) = &report.caveat {
                summary.push_str(&format!("  note: {c}\n"));
            }
            let code = match report.verdict {
                SurveyVerdict::Inconsistent => EXIT_MISMATCH,
                _ => 0,
            };
            Ok(Outcome {
                summary,
                report: serde_json::to_value(&report)?,
                code,
            })
        }
    }
}

fn betti_outcome(name: &str, ideal: &Ideal) -> anyhow::Result<Outcome> {
    let table = graded_betti(ideal, None)?;
    let data = ideal.hilbert()?;
    let r = ideal.ring().nvars() - 1;
    let n = data.projective_dim().max(0) as usize;
    let pred = table_predicates(&table, r, n)?;
    let summary = format!(
        "{name}\n{}regularity {}, depth {}, N_p up to {}",
        table.to_grid(),
        pred.regularity,
        pred.depth,
        pred.max_np.map_or("every p".to_string(), |p| p.to_string())
    );
    Ok(Outcome::ok(
        summary,
        json!({
            "name": name,
            "table": table.to_json(),
            "euler_identity": table.euler_identity_holds(&data.numerator),
            "predicates": pred,
        }),
    ))
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::BudgetExceeded { .. }) => EXIT_BUDGET,
        Some(Error::Inconsistent(_)) => EXIT_MISMATCH,
        _ => EXIT_INPUT,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    set_default_budget(Budget {
        max_pairs: cli.max_pairs,
        time_limit_secs: cli.time_limit,
    });
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let text = serde_json::to_string_pretty(&outcome.report).expect("serializable");
    match &cli.json {
        Some(path) if path == Path::new("-") => println!("{text}"),
        Some(path) => {
            println!("{}", outcome.summary.trim_end());
            if let Err(e) = write_file(path, &text) {
                eprintln!("error: {e:#}");
                return ExitCode::from(EXIT_INPUT);
            }
        }
        None => println!("{}", outcome.summary.trim_end()),
    }
    ExitCode::from(outcome.code)
}
