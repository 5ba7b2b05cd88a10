//! `chisini-lab`: classification, verification and certificates for generic
//! covers of the plane.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 usage or I/O error,
//! 3 numeric non-convergence.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use chisini_core::covers::{counterexample_pair, explicit_equation, recheck_certificate, unique_sum_product_pair};
use chisini_core::graphs::{build_polygon, enumerate_generic_covers, PolygonSpec};
use chisini_core::invariants::{bmy_report, invariant_report, BranchCurveData};
use chisini_core::monodromy::{AssignmentCertificate, MonodromyAssignment, PresentationSpec};
use chisini_core::numeric::{numeric_vs_polygon, NumericConfig};
use chisini_core::Error;
use clap::{Parser, Subcommand};
use serde_json::Value;

const THREADS_VAR: &str = "CHISINI_LAB_THREADS";

#[derive(Parser, Debug)]
#[command(name = "chisini-lab", version, about = "Generic covers of the plane branched over x^n = y^m")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// All generic covers of degree >= 3 branched over x^n = y^m.
    Classify {
        n: usize,
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The polygon with d vertices, valence a and increment j.
    Polygon {
        d: usize,
        a: usize,
        j: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check an assignment {"d","taus"} against G_{m,n}.
    Verify {
        file: PathBuf,
        /// Number of generators; defaults to the number of taus.
        #[arg(long)]
        m: Option<usize>,
        /// Relation stride; required unless the file has a presentation.
        #[arg(long)]
        n: Option<usize>,
        /// Exponent e with (τ_1⋯τ_m)^e = 1.
        #[arg(long)]
        projective: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Track the fiber of F_{h,k,a,b} around each branch point.
    NumericMonodromy {
        h: usize,
        k: usize,
        #[arg(long, default_value_t = 1)]
        a: usize,
        #[arg(long, default_value_t = 1)]
        b: usize,
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Curve and surface invariants of a branch curve.
    Invariants {
        curve: PathBuf,
        /// Cover degrees to report surface invariants for.
        #[arg(long = "N", value_delimiter = ',')]
        degrees: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Uniqueness thresholds of a branch curve.
    Bound {
        curve: PathBuf,
        /// Cover degree the verdicts refer to.
        #[arg(long = "N")]
        degree: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The two covers of degrees 4t+2 and 4t+1 over one curve.
    Counterexample {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute a certificate and compare it to the stored one.
    Certify { file: PathBuf },
    /// Pairs whose sum and product are swapped by another coprime pair.
    UniquePair {
        #[arg(long, default_value_t = 100)]
        bound: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The surface z^{k+1} - (k+1) z f_k(x) + k g_{k+1}(y) = 0 and a numeric spot check.
    ExplicitEquation {
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Check(String),
    Numeric(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Numeric(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Check(m) | Failure::Numeric(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Numeric(_) => Failure::Numeric(e.to_string()),
            Error::Inconsistent(_) | Error::Splitting { .. } | Error::CheckFailed(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(f) = configure_threads() {
        eprintln!("error: {}", f.message());
        return ExitCode::from(f.code());
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn configure_threads() -> Outcome {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Usage(format!("{THREADS_VAR}={raw:?} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_json<T: serde::Serialize>(out: Option<&Path>, value: &T) -> Outcome {
    let Some(path) = out else { return Ok(()) };
    let mut text = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    text.push('\n');
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    println!("wrote {}", path.display());
    Ok(())
}

fn verdict(checks: &std::collections::BTreeMap<String, bool>) -> Outcome {
    let failed: Vec<&str> = checks.iter().filter(|(_, &ok)| !ok).map(|(k, _)| k.as_str()).collect();
    for (name, ok) in checks {
        println!("  {:<40} {}", name, if *ok { "pass" } else { "FAIL" });
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("failed checks: {}", failed.join(", "))))
    }
}

fn read_curve(path: &Path) -> Result<BranchCurveData, Failure> {
    let v = read_json(path)?;
    let curve: BranchCurveData =
        serde_json::from_value(v).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    curve.validate()?;
    Ok(curve)
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Classify { n, m, out } => {
            let c = enumerate_generic_covers(n, m)?;
            println!("generic covers of degree >= 3 branched over x^{n} = y^{m}");
            println!("{:>4}  {:<11} {:>7} {:>9} {:>10}", "d", "orientation", "valence", "increment", "compatible");
            for class in &c.classes {
                println!(
                    "{:>4}  {:<11} {:>7} {:>9} {:>10}",
                    class.polygon.d,
                    class.orientation.to_string(),
                    class.polygon.valence,
                    class.polygon.increment,
                    class.compatible_exponent
                );
            }
            println!("{} classes; the double cover always exists", c.classes.len());
            write_json(out.as_deref(), &c)
        }
        Command::Polygon { d, a, j, out } => {
            let g = build_polygon(PolygonSpec::new(d, a, j)?)?;
            println!("polygon d={d} valence={a} increment={j}");
            for (label, (u, v)) in g.edges().iter().enumerate() {
                println!("  edge {:>3}: {u} - {v}", label + 1);
            }
            write_json(out.as_deref(), &g)
        }
        Command::Verify { file, m, n, projective, out } => {
            let v = read_json(&file)?;
            let stored = v.get("presentation").cloned();
            let assignment: MonodromyAssignment =
                serde_json::from_value(v).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
            let mut presentation = match (stored, n) {
                (_, Some(n)) => PresentationSpec::new(m.unwrap_or(assignment.generator_count()), n)?,
                (Some(p), None) => serde_json::from_value(p).map_err(|e| Failure::Usage(e.to_string()))?,
                (None, None) => return Err(Failure::Usage("no presentation: pass --n".into())),
            };
            if let Some(e) = projective {
                presentation = presentation.with_projective_exponent(e);
            }
            let cert = AssignmentCertificate::build(&assignment, &presentation);
            println!(
                "assignment of degree {} against G_{{{},{}}}",
                cert.d, presentation.m, presentation.n
            );
            write_json(out.as_deref(), &cert)?;
            verdict(&cert.checks)
        }
        Command::NumericMonodromy { h, k, a, b, eps, tol, out } => {
            let cfg = NumericConfig { eps, tol, ..NumericConfig::default() };
            cfg.validate()?;
            let cert = numeric_vs_polygon(h, k, a, b, &cfg)?;
            println!("F_{{{h},{k},{a},{b}}}: {} loops tracked in {} steps", cert.transpositions.len(), cert.steps);
            for (i, t) in cert.transpositions.iter().enumerate() {
                println!("  loop {:>3}: {}", i + 1, t);
            }
            match cert.polygon.j {
                Some(j) => println!("polygon d={} valence={} increment={j}", cert.polygon.d, cert.polygon.valence),
                None => println!("not a polygon with increment ±{h}"),
            }
            println!("max residual {:.3e}", cert.max_residual);
            write_json(out.as_deref(), &cert)?;
            verdict(&cert.checks)
        }
        Command::Invariants { curve, degrees, out } => {
            let c = read_curve(&curve)?;
            let r = invariant_report(&c, &degrees)?;
            if let Some(w) = &r.genus_warning {
                eprintln!("warning: {w}");
            }
            println!("degree {}  d = {}  g = {}  Σ = {}", r.degree, r.d, r.genus, r.sigma);
            println!("dual degree {} (class formula {})", r.dual_degree, r.dual_degree_class_formula);
            println!("R² = {}", r.r_squared);
            println!("hodge bound {}", chisini_core::invariants::rational_string(&r.hodge_bound));
            println!("chisini bound {}", chisini_core::invariants::rational_string(&r.chisini_bound));
            for s in &r.surfaces {
                println!("N = {:>3}: K² = {}  e = {}  χ = {}", s.n, s.k2, s.e, s.chi);
            }
            write_json(out.as_deref(), &r)?;
            let mut checks = std::collections::BTreeMap::new();
            checks.insert("dual_degree_class_formula".to_string(), r.dual_degree == r.dual_degree_class_formula || r.genus_warning.is_some());
            checks.insert("sigma_divisible_by_3".to_string(), r.sigma_divisible_by_3);
            for s in &r.surfaces {
                checks.insert(format!("noether_N{}", s.n), s.noether);
            }
            verdict(&checks)
        }
        Command::Bound { curve, degree, out } => {
            let c = read_curve(&curve)?;
            let n = degree.unwrap_or(c.min_cover_degree().max(2));
            let r = bmy_report(&c, n)?;
            let show = chisini_core::invariants::rational_string;
            println!("chisini bound {}", show(&r.chisini_bound));
            println!("N = {n}: unique (N > bound): {}", r.unique_by_threshold);
            println!(
                "N = {n}: unique (N >= 12): {}{}",
                r.unique_by_degree_12,
                if r.degree_12_strictness_ambiguous { "  [>= versus > is ambiguous at 12]" } else { "" }
            );
            println!("K² <= 3e: {}   uniform estimate {} < 12: {}", r.k2_le_3e, show(&r.uniform_bound), r.uniform_below_12);
            println!("K² <= 2e: {}   threshold < 8: {}", r.k2_le_2e, r.threshold_below_8);
            write_json(out.as_deref(), &r)
        }
        Command::Counterexample { t, out } => {
            let pair = counterexample_pair(t)?;
            println!("curve {} of degree {}", pair.equation, pair.curve.degree);
            for s in &pair.curve.singularities {
                println!("  {} singular points of type x^{} = y^{}", s.count, s.m, s.n);
            }
            for c in &pair.covers {
                let d = &c.descriptor;
                let ram = if c.smoothness.ramification_smooth {
                    "smooth ramification".to_string()
                } else if c.cusps > 0 {
                    format!("{} ordinary cusps on the ramification curve", c.cusps)
                } else {
                    match c.smoothness.ramification_singularity {
                        Some((p, q)) => format!("ramification singular, locally u^{p} = v^{q}"),
                        None => "ramification singular".to_string(),
                    }
                };
                println!("{}: degree {}, {}, {}", d.name, d.degree, d.class, ram);
            }
            write_json(out.as_deref(), &pair)?;
            let mut checks = pair.checks.clone();
            for c in &pair.covers {
                for (k, v) in &c.checks {
                    checks.insert(format!("{}.{k}", c.descriptor.name), *v);
                }
            }
            verdict(&checks)
        }
        Command::Certify { file } => {
            let v = read_json(&file)?;
            let r = recheck_certificate(&v)?;
            println!("{}: passed {}  matches stored {}", r.kind, r.passed, r.matches_stored);
            if r.passed && r.matches_stored {
                Ok(())
            } else {
                Err(Failure::Check(format!("{} does not re-verify", file.display())))
            }
        }
        Command::UniquePair { bound, out } => {
            let c = unique_sum_product_pair(bound)?;
            println!("{} candidates up to {bound}", c.candidates_checked);
            for [(h, k), (h2, k2)] in &c.solutions {
                println!("  ({h},{k}) <-> ({h2},{k2}): {h}+{k} = {h2}*{k2}, {h}*{k} = {h2}+{k2}");
            }
            write_json(out.as_deref(), &c)?;
            verdict(&c.checks)
        }
        Command::ExplicitEquation { k, seed, out } => {
            let e = explicit_equation(k, seed)?;
            println!("{}", e.equation);
            println!("branch curve {}", e.branch_curve);
            write_json(out.as_deref(), &e)?;
            verdict(&e.checks)
        }
    }
}
