//! Argument parsing and command dispatch for the `gq` binary.
//!
//! Every command renders a text report and a JSON report from the same
//! values, so the two always agree. Exit codes: 0 success, 1 usage or parse
//! error, 2 domain error (including IO failures and failing check suites).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gq_core::green::{self, GreenRelation, PlaneVerdict};
use gq_core::number::{parse_rational, rational_to_f64};
use gq_core::sections::{self, BellPoint, Hyperplane};
use gq_core::sets::{self, Family, LineMeet};
use gq_core::{Mat2, Mat2Ext, QuadExt, Rational};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::export;
use crate::sample::{self, KindName, SampleError, SampleOptions, SurfaceKind};
use crate::suites;

#[derive(Debug, Clone, PartialEq, Parser)]
#[command(
    name = "gq",
    version,
    about = "Exact geometry of 2x2 matrix semigroups"
)]
pub struct Cli {
    /// Render exact values as decimals.
    #[arg(long, global = true)]
    pub float: bool,
    #[command(subcommand)]
    pub command: Command,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s.trim()).map_err(|e| e.to_string())
}

fn bell_arg(s: &str) -> Result<[QuadExt; 3], String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [x, y, z] = parts.as_slice() else {
        return Err("expected X,Y,Z".into());
    };
    let p = |t: &str| t.parse::<QuadExt>().map_err(|e| e.to_string());
    Ok([p(x)?, p(y)?, p(z)?])
}

fn range_arg(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s.split_once(',').ok_or("expected LO,HI")?;
    let p = |t: &str| t.trim().parse::<f64>().map_err(|e| e.to_string());
    let (lo, hi) = (p(lo)?, p(hi)?);
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err("expected finite LO <= HI".into());
    }
    Ok((lo, hi))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Obj,
}

#[derive(Debug, Clone, PartialEq, Subcommand)]
pub enum Command {
    /// Classify the section SP(a;λ) of the determinant variety.
    Classify {
        #[arg(long)]
        a: Mat2,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        lambda: Rational,
        #[arg(long)]
        json: bool,
    },
    /// Test a Green relation between two matrices.
    Green {
        #[arg(long)]
        rel: GreenRelation,
        m: Mat2,
        n: Mat2,
        #[arg(long)]
        json: bool,
    },
    /// Chart and a grid of the inverses of a rank-one matrix.
    Inverses {
        #[arg(long)]
        a: Mat2,
        #[arg(long, default_value_t = 3)]
        grid: usize,
        #[arg(long)]
        json: bool,
    },
    /// Natural and minus order between two matrices, or a section report.
    Order(OrderArgs),
    /// The two generator lines through a rank-one idempotent.
    Lines {
        #[arg(long)]
        e: Mat2,
        #[arg(long)]
        json: bool,
    },
    /// Whether span{M, N} lies in the determinant variety.
    Plane {
        m: Mat2,
        n: Mat2,
        #[arg(long)]
        json: bool,
    },
    /// Convert between ambient and Bell coordinates on P(I;λ).
    Bell(BellArgs),
    /// Centre, axis and principal radius of SP(I;λ).
    Metrics {
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        lambda: Rational,
        #[arg(long)]
        json: bool,
    },
    /// Sample a surface and write CSV or OBJ.
    Export(ExportArgs),
    /// Run the seeded property suites.
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Trials per invariant; defaults to GQ_DEFAULT_TRIALS or 200.
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(suites::SUITE_NAMES))]
        suite: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct OrderArgs {
    #[arg(num_args = 0..=2)]
    pub pair: Vec<Mat2>,
    #[arg(long, value_name = "A", conflicts_with = "pair")]
    pub section_report: Option<Mat2>,
    /// Trials for the section report (default 200).
    #[arg(long)]
    pub trials: Option<usize>,
    /// Seed for the section report (default 0).
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct BellArgs {
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub lambda: Rational,
    #[arg(long, required_unless_present = "from", conflicts_with = "from")]
    pub point: Option<Mat2>,
    #[arg(long, value_parser = bell_arg, allow_hyphen_values = true, value_name = "X,Y,Z")]
    pub from: Option<[QuadExt; 3]>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct ExportArgs {
    #[arg(long)]
    pub kind: KindName,
    #[arg(long, default_value_t = sample::DEFAULT_SAMPLES)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum)]
    pub format: Format,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub a: Option<Mat2>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub lambda: Option<Rational>,
    #[arg(long)]
    pub e: Option<Mat2>,
    #[arg(long, value_parser = range_arg, allow_hyphen_values = true, value_name = "LO,HI")]
    pub z_range: Option<(f64, f64)>,
}

fn flag(args: &mut Vec<String>, name: &str, on: bool) {
    if on {
        args.push(format!("--{name}"));
    }
}

fn opt(args: &mut Vec<String>, name: &str, value: Option<String>) {
    if let Some(v) = value {
        args.push(format!("--{name}"));
        args.push(v);
    }
}

impl Cli {
    /// Canonical argument vector (without the program name) that parses back
    /// to `self`.
    pub fn to_args(&self) -> Vec<String> {
        let mut v = Vec::new();
        flag(&mut v, "float", self.float);
        v.extend(self.command.to_args());
        v
    }
}

impl Command {
    pub fn to_args(&self) -> Vec<String> {
        let mut v: Vec<String> = Vec::new();
        match self {
            Command::Classify { a, lambda, json } => {
                v.push("classify".into());
                opt(&mut v, "a", Some(a.to_string()));
                opt(&mut v, "lambda", Some(lambda.to_string()));
                flag(&mut v, "json", *json);
            }
            Command::Green { rel, m, n, json } => {
                v.push("green".into());
                opt(&mut v, "rel", Some(rel.to_string()));
                v.push(m.to_string());
                v.push(n.to_string());
                flag(&mut v, "json", *json);
            }
            Command::Inverses { a, grid, json } => {
                v.push("inverses".into());
                opt(&mut v, "a", Some(a.to_string()));
                opt(&mut v, "grid", Some(grid.to_string()));
                flag(&mut v, "json", *json);
            }
            Command::Order(o) => {
                v.push("order".into());
                v.extend(o.pair.iter().map(Mat2::to_string));
                opt(
                    &mut v,
                    "section-report",
                    o.section_report.as_ref().map(Mat2::to_string),
                );
                opt(&mut v, "trials", o.trials.map(|t| t.to_string()));
                opt(&mut v, "seed", o.seed.map(|s| s.to_string()));
                flag(&mut v, "json", o.json);
            }
            Command::Lines { e, json } => {
                v.push("lines".into());
                opt(&mut v, "e", Some(e.to_string()));
                flag(&mut v, "json", *json);
            }
            Command::Plane { m, n, json } => {
                v.push("plane".into());
                v.push(m.to_string());
                v.push(n.to_string());
                flag(&mut v, "json", *json);
            }
            Command::Bell(b) => {
                v.push("bell".into());
                opt(&mut v, "lambda", Some(b.lambda.to_string()));
                opt(&mut v, "point", b.point.as_ref().map(Mat2::to_string));
                opt(
                    &mut v,
                    "from",
                    b.from.as_ref().map(|p| {
                        p.iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    }),
                );
                flag(&mut v, "json", b.json);
            }
            Command::Metrics { lambda, json } => {
                v.push("metrics".into());
                opt(&mut v, "lambda", Some(lambda.to_string()));
                flag(&mut v, "json", *json);
            }
            Command::Export(x) => {
                v.push("export".into());
                opt(&mut v, "kind", Some(x.kind.to_string()));
                opt(&mut v, "samples", Some(x.samples.to_string()));
                opt(&mut v, "seed", Some(x.seed.to_string()));
                let format = match x.format {
                    Format::Csv => "csv",
                    Format::Obj => "obj",
                };
                opt(&mut v, "format", Some(format.into()));
                opt(&mut v, "out", Some(x.out.display().to_string()));
                opt(&mut v, "a", x.a.as_ref().map(Mat2::to_string));
                opt(&mut v, "lambda", x.lambda.as_ref().map(Rational::to_string));
                opt(&mut v, "e", x.e.as_ref().map(Mat2::to_string));
                opt(
                    &mut v,
                    "z-range",
                    x.z_range.map(|(lo, hi)| format!("{lo:?},{hi:?}")),
                );
            }
            Command::Check {
                seed,
                trials,
                suite,
                json,
            } => {
                v.push("check".into());
                opt(&mut v, "seed", Some(seed.to_string()));
                opt(&mut v, "trials", trials.map(|t| t.to_string()));
                opt(&mut v, "suite", suite.clone());
                flag(&mut v, "json", *json);
            }
        }
        v
    }
}

/// Failure of a command, mapped to an exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<gq_core::Error> for Failure {
    fn from(e: gq_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<SampleError> for Failure {
    fn from(e: SampleError) -> Self {
        match e {
            SampleError::Domain(d) => Failure::Domain(d.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// Text and JSON renderings of one result.
struct Report {
    text: String,
    json: Value,
}

/// Renders exact values, or decimals under `--float`.
#[derive(Clone, Copy)]
struct Render {
    float: bool,
}

impl Render {
    fn q(&self, q: &Rational) -> String {
        if self.float {
            rational_to_f64(q).to_string()
        } else {
            q.to_string()
        }
    }

    fn x(&self, x: &QuadExt) -> String {
        if self.float {
            x.to_f64().to_string()
        } else {
            x.to_string()
        }
    }

    fn m(&self, m: &Mat2) -> String {
        if self.float {
            let [a, b, c, d] = m.to_f64();
            format!("[{a},{b};{c},{d}]")
        } else {
            m.to_string()
        }
    }

    fn mx(&self, m: &Mat2Ext) -> String {
        match m.to_rational() {
            Some(r) => self.m(&r),
            None if self.float => {
                let [a, b, c, d] = m.to_f64();
                format!("[{a},{b};{c},{d}]")
            }
            None => m.to_string(),
        }
    }

    fn v(&self, v: &[Rational; 2]) -> String {
        format!("({},{})", self.q(&v[0]), self.q(&v[1]))
    }
}

/// Parses `argv` (including the program name), runs the command and writes
/// its output. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational =
                matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let rendered = e.render().to_string();
            return if informational {
                let _ = out.write_all(rendered.as_bytes());
                0
            } else {
                let _ = err.write_all(rendered.as_bytes());
                1
            };
        }
    };
    execute(&cli, out, err)
}

/// Runs an already parsed command.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let r = Render { float: cli.float };
    let (report, json, code) = match dispatch(&cli.command, r) {
        Ok((report, code)) => (report, wants_json(&cli.command), code),
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 1;
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    let written = if json {
        serde_json::to_string_pretty(&report.json)
            .map_err(std::io::Error::other)
            .and_then(|s| writeln!(out, "{s}"))
    } else {
        out.write_all(report.text.as_bytes())
    };
    match written {
        Ok(()) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn wants_json(c: &Command) -> bool {
    match c {
        Command::Classify { json, .. }
        | Command::Green { json, .. }
        | Command::Inverses { json, .. }
        | Command::Lines { json, .. }
        | Command::Plane { json, .. }
        | Command::Metrics { json, .. }
        | Command::Check { json, .. } => *json,
        Command::Order(o) => o.json,
        Command::Bell(b) => b.json,
        Command::Export(_) => false,
    }
}

fn dispatch(c: &Command, r: Render) -> Result<(Report, i32), Failure> {
    let report = match c {
        Command::Classify { a, lambda, .. } => classify(a, lambda, r),
        Command::Green { rel, m, n, .. } => {
            let related = green::green_eq(*rel, m, n);
            Report {
                text: format!("{related}\n"),
                json: json!({"command": "green", "rel": rel.to_string(), "m": r.m(m), "n": r.m(n), "related": related}),
            }
        }
        Command::Inverses { a, grid, .. } => inverses(a, *grid, r)?,
        Command::Order(o) => order(o, r)?,
        Command::Lines { e, .. } => lines(e, r)?,
        Command::Plane { m, n, .. } => plane(m, n, r)?,
        Command::Bell(b) => bell(b, r)?,
        Command::Metrics { lambda, .. } => metrics(lambda, r),
        Command::Export(x) => export_cmd(x)?,
        Command::Check {
            seed,
            trials,
            suite,
            ..
        } => {
            let trials = trials.unwrap_or_else(suites::default_trials);
            return Ok(check(*seed, trials, suite.as_deref()));
        }
    };
    Ok((report, 0))
}

fn classify(a: &Mat2, lambda: &Rational, r: Render) -> Report {
    let class = sections::classify_section(a, lambda);
    let affine = if a.is_zero() {
        None
    } else {
        let quad = sections::restrict_quadric(&Hyperplane::new(a.clone(), lambda.clone()))
            .expect("nonzero functional");
        Some(sections::classify_affine_quadric(&quad))
    };
    let (l_rep, r_rep) = match &class {
        sections::SectionClass::TwoPuncturedPlanesPlusOrigin { l_rep, r_rep } => {
            (Some(r.m(l_rep)), Some(r.m(r_rep)))
        }
        _ => (None, None),
    };
    let mut text = class.name().to_string();
    if let (Some(l), Some(rr)) = (&l_rep, &r_rep) {
        text.push_str(&format!(" l_rep={l} r_rep={rr}"));
    }
    text.push('\n');
    let affine_name = affine.map(|q| q.to_string());
    text.push_str(&format!(
        "affine_class: {}\n",
        affine_name.as_deref().unwrap_or("none")
    ));
    Report {
        text,
        json: json!({
            "command": "classify",
            "a": r.m(a),
            "lambda": r.q(lambda),
            "class": class.name(),
            "l_rep": l_rep,
            "r_rep": r_rep,
            "affine_class": affine_name,
        }),
    }
}

/// `k` evenly spaced integer parameters centred on zero.
fn grid_params(k: usize) -> Vec<Rational> {
    let lo = (k as i64 - 1) / 2;
    (0..k as i64)
        .map(|i| Rational::from_integer((i - lo).into()))
        .collect()
}

fn inverses(a: &Mat2, k: usize, r: Render) -> Result<Report, Failure> {
    let chart = sets::inverse_chart(a)?;
    let mut text = format!(
        "chart: (d0 + s*d1)(q0 + t*q1)^T\nd0={} d1={} q0={} q1={}\n",
        r.v(&chart.d0),
        r.v(&chart.d1),
        r.v(&chart.q0),
        r.v(&chart.q1)
    );
    let mut points = Vec::new();
    for s in grid_params(k) {
        for t in grid_params(k) {
            let x = chart.eval(&s, &t);
            debug_assert!(sets::is_inverse_pair(a, &x));
            text.push_str(&format!("s={} t={} x={}\n", r.q(&s), r.q(&t), r.m(&x)));
            points.push(json!({"s": r.q(&s), "t": r.q(&t), "x": r.m(&x)}));
        }
    }
    Ok(Report {
        text,
        json: json!({
            "command": "inverses",
            "a": r.m(a),
            "chart": {"d0": r.v(&chart.d0), "d1": r.v(&chart.d1), "q0": r.v(&chart.q0), "q1": r.v(&chart.q1)},
            "grid": points,
        }),
    })
}

fn order(o: &OrderArgs, r: Render) -> Result<Report, Failure> {
    if let Some(a) = &o.section_report {
        let rep = sets::order_section_report(a, o.trials.unwrap_or(200), o.seed.unwrap_or(0))?;
        let sp_a_agrees = rep.section_mismatches.is_empty();
        let cex: Vec<String> = rep.counterexamples.iter().map(|m| r.m(m)).collect();
        let mism: Vec<String> = rep.section_mismatches.iter().map(|m| r.m(m)).collect();
        let text = format!(
            "a: {}\nseed: {}\ntrials: {}\nle_count: {}\nsection_count: {}\ninv_section_count: {}\n\
             agree_le_vs_inv_section: {}\nagree_le_vs_section: {}\ncounterexamples: {}\n\
             section_mismatches: {}\nsp_a_agrees: {sp_a_agrees}\n",
            r.m(a),
            rep.seed,
            rep.trials,
            rep.le_count,
            rep.section_count,
            rep.inv_section_count,
            rep.agree_le_vs_inv_section,
            rep.agree_le_vs_section,
            cex.join(" "),
            mism.join(" "),
        );
        return Ok(Report {
            text,
            json: json!({
                "command": "order-section-report",
                "a": r.m(a),
                "seed": rep.seed,
                "trials": rep.trials,
                "le_count": rep.le_count,
                "section_count": rep.section_count,
                "inv_section_count": rep.inv_section_count,
                "agree_le_vs_inv_section": rep.agree_le_vs_inv_section,
                "agree_le_vs_section": rep.agree_le_vs_section,
                "counterexamples": cex,
                "section_mismatches": mism,
                "sp_a_agrees": sp_a_agrees,
            }),
        });
    }
    if o.trials.is_some() || o.seed.is_some() {
        return Err(Failure::Usage(
            "--trials and --seed apply only to --section-report".into(),
        ));
    }
    let [x, y] = o.pair.as_slice() else {
        return Err(Failure::Usage(
            "order needs two matrices or --section-report A".into(),
        ));
    };
    let natural = sets::natural_le(x, y);
    let minus = sets::minus_le(x, y);
    Ok(Report {
        text: format!("natural_le: {natural}\nminus_le: {minus}\n"),
        json: json!({"command": "order", "x": r.m(x), "y": r.m(y), "natural_le": natural, "minus_le": minus}),
    })
}

fn lines(e: &Mat2, r: Render) -> Result<Report, Failure> {
    let l1 = sets::generator_line(Family::L1, e)?;
    let l2 = sets::generator_line(Family::L2, e)?;
    let meet = match sets::line_meet(&l1, &l2) {
        LineMeet::Point(p) => r.m(&p),
        LineMeet::Disjoint => "disjoint".into(),
        LineMeet::Same => "same".into(),
    };
    let line_json = |l: &sets::GeneratorLine| json!({"base": r.m(&l.base), "dir": r.m(&l.dir)});
    Ok(Report {
        text: format!(
            "L1: {} + t*{}\nL2: {} + t*{}\nmeet: {meet}\n",
            r.m(&l1.base),
            r.m(&l1.dir),
            r.m(&l2.base),
            r.m(&l2.dir)
        ),
        json: json!({"command": "lines", "e": r.m(e), "L1": line_json(&l1), "L2": line_json(&l2), "meet": meet}),
    })
}

fn plane(m: &Mat2, n: &Mat2, r: Render) -> Result<Report, Failure> {
    let p = green::classify_plane(m, n)?;
    let (verdict, rep) = match &p.verdict {
        PlaneVerdict::LClass { rep } => ("LClass", Some(r.m(rep))),
        PlaneVerdict::RClass { rep } => ("RClass", Some(r.m(rep))),
        PlaneVerdict::NotContained => ("NotContained", None),
    };
    let text = match &rep {
        Some(x) => format!("{verdict} rep={x}\n"),
        None => format!("{verdict}\n"),
    };
    Ok(Report {
        text,
        json: json!({"command": "plane", "m": r.m(m), "n": r.m(n), "verdict": verdict, "rep": rep}),
    })
}

fn bell(b: &BellArgs, r: Render) -> Result<Report, Failure> {
    let (point, ambient) = match (&b.point, &b.from) {
        (Some(m), _) => {
            let p = sections::to_bell(m, &b.lambda)?;
            (p, Mat2Ext::from(m))
        }
        (None, Some([x, y, z])) => {
            let p = BellPoint {
                x: x.clone(),
                y: y.clone(),
                z: z.clone(),
                lambda: b.lambda.clone(),
            };
            let m = sections::from_bell(&p);
            (p, m)
        }
        (None, None) => return Err(Failure::Usage("bell needs --point or --from".into())),
    };
    let lhs = &(&(&point.x * &point.x) + &(&point.y * &point.y)) - &(&point.z * &point.z);
    let on_section =
        lhs == QuadExt::from_rational(&b.lambda * &b.lambda / Rational::from_integer(2.into()));
    let x = r.mx(&ambient);
    Ok(Report {
        text: format!(
            "X = {}\nY = {}\nZ = {}\nx = {x}\non_section: {on_section}\n",
            r.x(&point.x),
            r.x(&point.y),
            r.x(&point.z)
        ),
        json: json!({
            "command": "bell",
            "lambda": r.q(&b.lambda),
            "X": r.x(&point.x),
            "Y": r.x(&point.y),
            "Z": r.x(&point.z),
            "x": x,
            "on_section": on_section,
        }),
    })
}

fn metrics(lambda: &Rational, r: Render) -> Report {
    let m = sections::hyperboloid_metrics(lambda);
    let kind = if lambda.is_zero() {
        "Cone"
    } else {
        "HyperboloidOneSheet"
    };
    Report {
        text: format!(
            "surface: {kind}\ncenter: {}\naxis: {}\nradius_sq: {}\nasymptotic_cone: X^2 + Y^2 - Z^2 = 0\n",
            r.m(&m.center),
            r.m(&m.axis_dir),
            r.q(&m.radius_sq)
        ),
        json: json!({
            "command": "metrics",
            "lambda": r.q(lambda),
            "surface": kind,
            "center": r.m(&m.center),
            "axis": r.m(&m.axis_dir),
            "radius_sq": r.q(&m.radius_sq),
            "asymptotic_cone": "X^2 + Y^2 - Z^2 = 0",
        }),
    }
}

fn export_cmd(x: &ExportArgs) -> Result<Report, Failure> {
    let kind = SurfaceKind::from_parts(x.kind, x.a.clone(), x.lambda.clone(), x.e.clone())?;
    let opts = SampleOptions {
        z_range: x.z_range,
        ..SampleOptions::default()
    };
    let s = sample::sample_surface(&kind, x.samples, x.seed, &opts)?;
    let mut bytes = Vec::new();
    let written = match x.format {
        Format::Csv => export::write_csv(&s, &mut bytes),
        Format::Obj => export::write_obj(&s, &mut bytes),
    };
    written.map_err(|e| Failure::Domain(e.to_string()))?;
    export::write_atomic(&x.out, &bytes)
        .map_err(|e| Failure::Domain(format!("{}: {e}", x.out.display())))?;
    Ok(Report {
        text: format!("wrote {} points to {}\n", s.points.len(), x.out.display()),
        json: Value::Null,
    })
}

fn check(seed: u64, trials: usize, suite: Option<&str>) -> (Report, i32) {
    let outcomes = suites::run(seed, trials, suite);
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    let mut text = format!("seed={seed} trials={trials}\n");
    for o in &outcomes {
        text.push_str(&format!("{o}\n"));
    }
    text.push_str(&format!(
        "summary: {passed}/{} invariants passed\n",
        outcomes.len()
    ));
    let results: Vec<Value> = outcomes
        .iter()
        .map(|o| {
            json!({
                "suite": o.suite,
                "invariant": o.invariant,
                "trials": o.trials,
                "failures": o.failures,
                "passed": o.passed(),
            })
        })
        .collect();
    let code = if passed == outcomes.len() { 0 } else { 2 };
    let json = json!({
        "command": "check",
        "seed": seed,
        "trials": trials,
        "results": results,
        "passed": passed,
        "total": outcomes.len(),
    });
    (Report { text, json }, code)
}
