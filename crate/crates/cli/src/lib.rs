//! The `cylinder` command: evaluation, zeros, interlacing and Wronskian
//! reports, verification suites and breakdown atlases.
//!
//! Exit status: 0 success, 1 usage error, 2 computation error, 3 a `verify`
//! suite failed (its report, counterexample included, is still written).

mod angle;
mod output;

use std::io::Write;
use std::path::PathBuf;

use clap::builder::TypedValueParser;
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use cylinder_core::interlace::Side;
use cylinder_core::special_fn::cylinder_values;
use cylinder_core::theorems::{
    breakdown_scan, lemma5_report, verify_all, verify_recurrences, verify_theorem1,
    verify_theorem3, verify_transitivity, DEFAULT_ZEROS, GRID_GAPS, GRID_ORDERS, JVSY_GAPS,
    JVSY_ORDERS,
};
use cylinder_core::wronskian::wronskian_profile_of;
use cylinder_core::zeros::max_zero_count;
use cylinder_core::{
    check_interlaced, detect_shifted, find_zeros, BreakdownMap, CylinderSpec, EvalKind, Family,
    InterlaceReport, MixingAngle, Order, ShiftReport, VerificationReport, WronskianProfile,
};

pub use angle::parse_angle;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

const MAX_ORDER: f64 = 30.0;

#[derive(Parser, Debug)]
#[command(
    name = "cylinder",
    version,
    about = "Cylinder functions, their zeros and interlacing"
)]
struct Cli {
    /// Worker threads for parallel cells (default: available parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    /// Write the artifact here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum Format {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum Kind {
    Function,
    Derivative,
}

impl From<Kind> for EvalKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Function => EvalKind::Function,
            Kind::Derivative => EvalKind::Derivative,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum FamilyName {
    Cylinder,
    Jprime,
    Yprime,
    Jvsy,
}

fn order(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("not a number: {s:?}"))?;
    Order::new(v).map(Order::value).map_err(|e| e.to_string())
}

fn angle(s: &str) -> Result<f64, String> {
    parse_angle(s)
}

fn point(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("not a number: {s:?}"))?;
    if v.is_finite() && v > 0.0 && v <= 400.0 {
        Ok(v)
    } else {
        Err(format!("x = {v} is outside 0 < x <= 400"))
    }
}

fn gap(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("not a number: {s:?}"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(format!("gap = {v} must be positive"))
    }
}

fn unit(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("not a number: {s:?}"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(format!("{v} must be positive"))
    }
}

#[derive(Args, Debug)]
struct One {
    #[arg(long, allow_hyphen_values = true, value_parser = order)]
    nu: f64,
    /// Mixing angle δ in radians or as a fraction like pi/4.
    #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = angle)]
    delta: f64,
}

#[derive(Args, Debug)]
struct Pair {
    #[arg(long, allow_hyphen_values = true, value_parser = order)]
    nu: f64,
    #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = angle)]
    delta: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = order)]
    mu: f64,
    /// Angle of the second function (default: same as --delta).
    #[arg(long, allow_hyphen_values = true, value_parser = angle)]
    delta_bar: Option<f64>,
    #[arg(long, value_enum, default_value_t = Kind::Function)]
    kind: Kind,
    #[arg(long, default_value_t = DEFAULT_ZEROS, value_parser = clap::value_parser!(u16).range(1..).map(usize::from))]
    n: usize,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long, value_enum, default_value_t = FamilyName::Cylinder)]
    family: FamilyName,
    /// δ for the cylinder family; ignored by the others.
    #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = angle)]
    delta: f64,
}

#[derive(Args, Debug)]
struct Grid {
    #[command(flatten)]
    family: FamilyArgs,
    /// Lower orders ν.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = order, default_values_t = GRID_ORDERS)]
    nu: Vec<f64>,
    /// Order gaps Δ = μ − ν.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = gap, default_values_t = GRID_GAPS)]
    gaps: Vec<f64>,
    #[arg(long, default_value_t = DEFAULT_ZEROS, value_parser = clap::value_parser!(u16).range(1..).map(usize::from))]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// C_ν(x; δ) and C′_ν(x; δ) at one or more points.
    Eval {
        #[command(flatten)]
        one: One,
        #[arg(long, required = true, value_delimiter = ',', allow_hyphen_values = true, value_parser = point)]
        x: Vec<f64>,
    },
    /// First n positive zeros.
    Zeros {
        #[command(flatten)]
        one: One,
        #[arg(long, value_enum, default_value_t = Kind::Function)]
        kind: Kind,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u16).range(1..).map(usize::from))]
        n: usize,
    },
    /// Interlacing verdict and shifted-interlacing search for two functions.
    Interlace(Pair),
    /// Wronskian extremum profile for two functions.
    Wronskian(Pair),
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Breakdown atlas over orders × gaps.
    Sweep(Grid),
}

#[derive(Subcommand, Debug)]
enum Suite {
    /// Zero chains and first-order interlacing at one order.
    Theorem1 {
        #[arg(long, allow_hyphen_values = true, value_parser = order)]
        nu: f64,
        #[arg(long, default_value_t = 1.0, value_parser = unit)]
        a: f64,
        #[arg(long, default_value_t = 1.0, value_parser = unit)]
        b: f64,
        #[arg(long, default_value_t = 1.0, value_parser = unit)]
        c: f64,
        #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u16).range(1..).map(usize::from))]
        n: usize,
    },
    /// Interlacing verdict against |ν − μ| ≤ 2 for one cell.
    Theorem3 {
        #[arg(long, allow_hyphen_values = true, value_parser = order)]
        nu: f64,
        #[arg(long, allow_hyphen_values = true, value_parser = order)]
        mu: f64,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = DEFAULT_ZEROS, value_parser = clap::value_parser!(u16).range(1..).map(usize::from))]
        n: usize,
    },
    /// The six recurrence and differential identities on a grid of x.
    Recurrences {
        #[command(flatten)]
        one: One,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = point,
              default_values_t = [0.5, 1.0, 5.0, 20.0, 100.0])]
        x: Vec<f64>,
    },
    /// f–g and g–h interlacing imply f–h for orders ν, ν+step, ν+2·step.
    Transitivity {
        #[command(flatten)]
        one: One,
        #[arg(long, default_value_t = 1.0, value_parser = unit)]
        step: f64,
        #[arg(long, value_enum, default_value_t = Kind::Function)]
        kind: Kind,
        #[arg(long, default_value_t = 0.1, value_parser = point)]
        lo: f64,
        #[arg(long, default_value_t = 60.0, value_parser = point)]
        hi: f64,
    },
    /// Root-free Wronskian ⇔ interlacing over a breakdown grid.
    Lemma5(Grid),
    /// Every suite in a fixed order.
    All {
        #[arg(long, default_value_t = DEFAULT_ZEROS, value_parser = clap::value_parser!(u16).range(1..).map(usize::from))]
        n: usize,
    },
}

/// `eval` output row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalPoint {
    pub x: f64,
    pub value: f64,
    pub derivative: f64,
}

/// `interlace` output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InterlaceArtifact {
    pub a: CylinderSpec,
    pub b: CylinderSpec,
    pub kind: EvalKind,
    pub n: usize,
    pub report: InterlaceReport,
    pub shift: ShiftReport,
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<cylinder_core::Error> for Failure {
    fn from(e: cylinder_core::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn spec(nu: f64, delta: f64) -> Result<CylinderSpec, Failure> {
    CylinderSpec::new(nu, delta).map_err(|e| usage(e.to_string()))
}

fn family(f: &FamilyArgs) -> Result<Family, Failure> {
    Ok(match f.family {
        FamilyName::Cylinder => {
            Family::Cylinder(MixingAngle::new(f.delta).map_err(|e| usage(e.to_string()))?)
        }
        FamilyName::Jprime => Family::Jprime,
        FamilyName::Yprime => Family::Yprime,
        FamilyName::Jvsy => Family::JvsY,
    })
}

fn check_n(nu: f64, n: usize) -> Result<(), Failure> {
    let max = max_zero_count(nu);
    if n > max {
        return Err(usage(format!(
            "--n {n} exceeds {max}, the most zeros below x = 400 at order {nu}"
        )));
    }
    Ok(())
}

fn check_grid(g: &Grid) -> Result<Family, Failure> {
    let fam = family(&g.family)?;
    for &nu in &g.nu {
        for &d in &g.gaps {
            let mu = nu + d;
            if mu > MAX_ORDER {
                return Err(usage(format!(
                    "nu + gap = {mu} exceeds the largest order 30"
                )));
            }
            check_n(mu, g.n)?;
        }
    }
    Ok(fam)
}

fn scan(fam: Family, g: &Grid) -> Result<Vec<BreakdownMap>, Failure> {
    g.nu.iter()
        .map(|&nu| Ok(breakdown_scan(fam, Order::new(nu)?, &g.gaps, g.n)?))
        .collect()
}

fn pair_specs(p: &Pair) -> Result<(CylinderSpec, CylinderSpec), Failure> {
    let a = spec(p.nu, p.delta)?;
    let b = spec(p.mu, p.delta_bar.unwrap_or(p.delta))?;
    if a.same_function(&b) {
        return Err(usage("both functions are the same; nothing to compare"));
    }
    check_n(p.nu.max(p.mu), p.n)?;
    Ok((a, b))
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::A => "a",
        Side::B => "b",
    }
}

fn report_rows(reports: &[VerificationReport]) -> Vec<Vec<String>> {
    reports
        .iter()
        .map(|r| {
            vec![
                r.name.clone(),
                r.passed.to_string(),
                r.checks.to_string(),
                output::num(r.worst_residual),
                r.counterexample
                    .as_ref()
                    .map(|c| serde_json::to_string(c).expect("json value"))
                    .unwrap_or_default(),
            ]
        })
        .collect()
}

const REPORT_HEADER: [&str; 5] = [
    "name",
    "passed",
    "checks",
    "worst_residual",
    "counterexample",
];

const ATLAS_HEADER: [&str; 10] = [
    "family",
    "nu",
    "mu",
    "delta",
    "delta_bar",
    "n",
    "interlaced",
    "first_violation",
    "sign_changes",
    "proviso",
];

fn atlas_rows(maps: &[BreakdownMap]) -> Vec<Vec<String>> {
    let mut rows = Vec::new();
    for m in maps {
        let (d, db) = m.family.angles();
        for c in &m.cells {
            rows.push(vec![
                m.family.name().to_string(),
                output::num(c.nu),
                output::num(c.mu),
                output::num(d.radians()),
                output::num(db.radians()),
                m.n.to_string(),
                c.interlaced.to_string(),
                output::opt(c.first_violation.map(|v| v.index)),
                c.sign_changes.to_string(),
                output::opt(c.proviso),
            ]);
        }
    }
    rows
}

/// What a command produced, and whether a verification failed.
struct Artifact {
    bytes: Vec<u8>,
    failed: bool,
}

fn ok(bytes: Vec<u8>) -> Artifact {
    Artifact {
        bytes,
        failed: false,
    }
}

fn reports(r: &[VerificationReport], single: bool, fmt: Format) -> Artifact {
    let bytes = match fmt {
        Format::Json if single => output::json(&r[0]),
        Format::Json => output::json(r),
        Format::Csv => output::csv(&REPORT_HEADER, &report_rows(r)),
    };
    Artifact {
        bytes,
        failed: r.iter().any(|r| !r.passed),
    }
}

/// Checks everything that can be checked without computing, then computes.
fn execute(cmd: &Command, fmt: Format) -> Result<Artifact, Failure> {
    match cmd {
        Command::Eval { one, x } => {
            let s = spec(one.nu, one.delta)?;
            let pts = x
                .iter()
                .map(|&x| {
                    let v = cylinder_values(s, x)?;
                    Ok(EvalPoint {
                        x,
                        value: v.value,
                        derivative: v.derivative,
                    })
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            Ok(ok(match fmt {
                Format::Json => output::json(&pts),
                Format::Csv => {
                    let rows: Vec<_> = pts
                        .iter()
                        .map(|p| {
                            vec![
                                output::num(p.x),
                                output::num(p.value),
                                output::num(p.derivative),
                            ]
                        })
                        .collect();
                    output::csv(&["x", "value", "derivative"], &rows)
                }
            }))
        }
        Command::Zeros { one, kind, n } => {
            let s = spec(one.nu, one.delta)?;
            check_n(one.nu, *n)?;
            let z = find_zeros(s, (*kind).into(), *n)?;
            Ok(ok(match fmt {
                Format::Json => output::json(&z.zeros),
                Format::Csv => {
                    let rows: Vec<_> = z
                        .zeros
                        .iter()
                        .enumerate()
                        .map(|(i, &x)| vec![(i + 1).to_string(), output::num(x)])
                        .collect();
                    output::csv(&["s", "zero"], &rows)
                }
            }))
        }
        Command::Interlace(p) => {
            let (a, b) = pair_specs(p)?;
            let kind = p.kind.into();
            let za = find_zeros(a, kind, p.n)?;
            let zb = find_zeros(b, kind, p.n)?;
            let art = InterlaceArtifact {
                a,
                b,
                kind,
                n: p.n,
                report: check_interlaced(&za, &zb)?,
                shift: detect_shifted(&za, &zb)?,
            };
            Ok(ok(match fmt {
                Format::Json => output::json(&art),
                Format::Csv => {
                    let v = art.report.first_violation;
                    let w = art.shift.window;
                    let row = vec![
                        art.report.interlaced.to_string(),
                        output::opt(v.map(|v| side_name(v.side))),
                        output::opt(v.map(|v| v.index)),
                        output::opt(v.map(|v| v.count)),
                        output::opt(v.map(|v| v.coincident)),
                        art.report.pairs_checked.to_string(),
                        output::opt(art.shift.shift_d),
                        output::opt(w.map(|w| w.0)),
                        output::opt(w.map(|w| w.1)),
                    ];
                    let header = [
                        "interlaced",
                        "violation_side",
                        "violation_index",
                        "violation_count",
                        "violation_coincident",
                        "pairs_checked",
                        "shift_d",
                        "shift_first",
                        "shift_last",
                    ];
                    output::csv(&header, &[row])
                }
            }))
        }
        Command::Wronskian(p) => {
            let (a, b) = pair_specs(p)?;
            let prof: WronskianProfile = wronskian_profile_of(a, b, p.kind.into(), p.n)?;
            Ok(ok(match fmt {
                Format::Json => output::json(&prof),
                Format::Csv => {
                    let rows: Vec<_> = prof
                        .extrema
                        .iter()
                        .map(|e| {
                            vec![
                                output::num(e.position),
                                output::num(e.value),
                                side_name(e.source).to_string(),
                                e.degenerate.to_string(),
                            ]
                        })
                        .collect();
                    output::csv(&["position", "value", "source", "degenerate"], &rows)
                }
            }))
        }
        Command::Sweep(g) => {
            let fam = check_grid(g)?;
            let maps = scan(fam, g)?;
            Ok(ok(match fmt {
                Format::Json => output::json(&maps),
                Format::Csv => output::csv(&ATLAS_HEADER, &atlas_rows(&maps)),
            }))
        }
        Command::Verify { suite } => verify(suite, fmt),
    }
}

fn verify(suite: &Suite, fmt: Format) -> Result<Artifact, Failure> {
    let single = |r: VerificationReport| Ok(reports(&[r], true, fmt));
    match suite {
        Suite::Theorem1 { nu, a, b, c, n } => {
            if *a > 2.0 || *b > 1.0 || *c > 1.0 {
                return Err(usage("need 0 < a <= 2, 0 < b <= 1, 0 < c <= 1"));
            }
            check_n(nu + a.max(*b).max(*c), *n)?;
            single(verify_theorem1(Order::new(*nu)?, *a, *b, *c, *n)?)
        }
        Suite::Theorem3 {
            nu,
            mu,
            family: f,
            n,
        } => {
            let fam = family(f)?;
            if fam == Family::JvsY {
                return Err(usage(
                    "theorem3 compares one family at two orders; jvsy is not one",
                ));
            }
            if *nu <= 0.0 || *mu <= 0.0 {
                return Err(usage("theorem3 needs nu > 0 and mu > 0"));
            }
            check_n(nu.max(*mu), *n)?;
            single(verify_theorem3(
                Order::new(*nu)?,
                Order::new(*mu)?,
                fam,
                *n,
            )?)
        }
        Suite::Recurrences { one, x } => {
            let d = MixingAngle::new(one.delta).map_err(|e| usage(e.to_string()))?;
            single(verify_recurrences(Order::new(one.nu)?, d, x)?)
        }
        Suite::Transitivity {
            one,
            step,
            kind,
            lo,
            hi,
        } => {
            if lo >= hi {
                return Err(usage("need --lo < --hi"));
            }
            let top = one.nu + 2.0 * step;
            if top > MAX_ORDER {
                return Err(usage(format!(
                    "nu + 2 step = {top} exceeds the largest order 30"
                )));
            }
            let f = spec(one.nu, one.delta)?;
            let triple = [f, f.with_order(one.nu + step)?, f.with_order(top)?];
            single(verify_transitivity(triple, (*kind).into(), (*lo, *hi))?)
        }
        Suite::Lemma5(g) => {
            let fam = check_grid(g)?;
            let maps = scan(fam, g)?;
            single(lemma5_report("lemma5", &maps))
        }
        Suite::All { n } => {
            let top = |o: &[f64], g: &[f64]| {
                o.iter().fold(0.0f64, |m, &v| m.max(v)) + g.iter().fold(0.0f64, |m, &v| m.max(v))
            };
            check_n(
                top(&GRID_ORDERS, &GRID_GAPS).max(top(&JVSY_ORDERS, &JVSY_GAPS)),
                *n,
            )?;
            Ok(reports(&verify_all(*n)?, false, fmt))
        }
    }
}

/// Runs the command line `argv` (program name first) and returns the exit
/// status. The artifact goes to `stdout` unless `--out` names a file;
/// diagnostics go to `stderr`.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        pool = pool.num_threads(t.into());
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: cannot start worker threads: {e}");
            return EXIT_COMPUTE;
        }
    };

    let art = match pool.install(|| execute(&cli.command, cli.format)) {
        Ok(a) => a,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            return EXIT_USAGE;
        }
        Err(Failure::Compute(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            return EXIT_COMPUTE;
        }
    };

    let written = match &cli.out {
        Some(path) => std::fs::write(path, &art.bytes),
        None => stdout.write_all(&art.bytes).and_then(|_| stdout.flush()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write artifact: {e}");
        return EXIT_COMPUTE;
    }
    if art.failed {
        let _ = writeln!(stderr, "verification failed");
        return EXIT_VERIFY;
    }
    EXIT_OK
}
