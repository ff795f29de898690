//! Command-line front end: argument parsing and the subcommand handlers.
//! Each handler returns a [`ReportEnvelope`] (or plain text for the
//! triangle) and [`run`] maps outcomes to exit codes.

pub mod envelope;
pub mod polyfile;
pub mod verify;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use narayana_css::asymptotics::{
    density_samples, empirical_cdf, ks_against_kappa, poincare_ratio, LimitVerdict, RecurrenceSpec,
};
use narayana_css::css::{build_phi, compose};
use narayana_css::exactpoly::{int, Rational, RationalPoly, Sign};
use narayana_css::narayana::{
    catalan, dyck_peak_distribution, narayana_poly_direct, narayana_polys_recurrence, triangle_matrix,
    DYCK_ORACLE_LIMIT,
};
use narayana_css::roots::{interlace_check, isolate_roots, poly_gcd, InterlaceVerdict};
use narayana_css::spectra::{extract_q, spectrum_report, verify_mjnj};
use narayana_css::Error;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

pub use envelope::{Failure, ReportEnvelope, Status};

#[derive(Debug, Parser)]
#[command(name = "narayana-css", version, about = "Narayana polynomials and Schur-Szego composition")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print rows of the Narayana triangle.
    Triangle(TriangleArgs),
    /// Inspect N_n and optionally cross-check it.
    Narayana(NarayanaArgs),
    /// Compose two polynomials, or print the matrix of Phi_n.
    Css(CssArgs),
    /// Spectrum and eigenpolynomials of Phi_n.
    Eigen(EigenArgs),
    /// Extrapolate Q_{j-1,n} as n grows and compare with N_j.
    Limits(LimitsArgs),
    /// Isolate the roots of N_n or check interlacing with N_{n-1}.
    Roots(RootsArgs),
    /// Empirical root distribution of N_n against the limit measure.
    Measure(MeasureArgs),
    /// Ratio f(t+1)/f(t) of a preset recurrence.
    Poincare(PoincareArgs),
    /// Run the whole acceptance suite.
    VerifyAll(VerifyAllArgs),
}

#[derive(Debug, Args)]
pub struct TriangleArgs {
    #[arg(long)]
    pub rows: usize,
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    #[arg(long)]
    pub csv: bool,
}

#[derive(Debug, Args)]
pub struct NarayanaArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub check_recurrence: bool,
    #[arg(long)]
    pub check_catalan: bool,
    #[arg(long)]
    pub check_dyck: bool,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("mode").required(true).args(["compose", "phi"])))]
pub struct CssArgs {
    #[arg(long, num_args = 2, value_names = ["FILE_P", "FILE_Q"], requires = "m")]
    pub compose: Option<Vec<PathBuf>>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub phi: Option<usize>,
}

#[derive(Debug, Args)]
pub struct EigenArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub j: Option<usize>,
}

#[derive(Debug, Args)]
pub struct LimitsArgs {
    #[arg(long)]
    pub j: usize,
    #[arg(long, value_delimiter = ',', default_value = "20,40,80")]
    pub ns: Vec<usize>,
    #[arg(long, default_value_t = 1e-2)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct RootsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, conflicts_with = "interlace")]
    pub isolate: bool,
    #[arg(long)]
    pub interlace: bool,
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub grid: usize,
    #[arg(long)]
    pub out: PathBuf,
    /// Turn the report into a pass/fail check of the KS distance.
    #[arg(long)]
    pub max_ks: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    Fibonacci,
    Narayana,
}

#[derive(Debug, Args)]
pub struct PoincareArgs {
    #[arg(long, value_enum)]
    pub preset: Preset,
    #[arg(long, allow_negative_numbers = true)]
    pub x: Option<f64>,
    #[arg(long)]
    pub tmax: usize,
}

#[derive(Debug, Args)]
pub struct VerifyAllArgs {
    #[arg(long, default_value_t = 100)]
    pub max_n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// What a subcommand produced.
#[derive(Debug)]
pub enum Output {
    Text(String),
    Report(ReportEnvelope),
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code: 0 on success, 1 when a check fails, 2 on bad
/// usage or input.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    let name = command_name(&cli.command);
    match execute(&cli.command) {
        Ok(Output::Text(t)) => {
            let _ = write!(out, "{t}");
            0
        }
        Ok(Output::Report(r)) => {
            let _ = writeln!(out, "{}", r.to_json());
            r.exit_code()
        }
        Err(e) if is_check_failure(&e) => {
            let r = ReportEnvelope::new(name, Value::Null).fail("library", json!({ "error": e.to_string() }));
            let _ = writeln!(out, "{}", r.to_json());
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Errors that report a falsified claim rather than bad input.
fn is_check_failure(e: &Error) -> bool {
    matches!(
        e,
        Error::ConstructionBug(_)
            | Error::RecurrenceViolation(_)
            | Error::SpectrumViolation(_)
            | Error::StructureViolation(_)
            | Error::SigmaInconsistency(_)
            | Error::TheoremCheckFailed(_)
    )
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Triangle(_) => "triangle",
        Command::Narayana(_) => "narayana",
        Command::Css(_) => "css",
        Command::Eigen(_) => "eigen",
        Command::Limits(_) => "limits",
        Command::Roots(_) => "roots",
        Command::Measure(_) => "measure",
        Command::Poincare(_) => "poincare",
        Command::VerifyAll(_) => "verify-all",
    }
}

pub fn execute(c: &Command) -> narayana_css::Result<Output> {
    match c {
        Command::Triangle(a) => triangle(a),
        Command::Narayana(a) => narayana(a).map(Output::Report),
        Command::Css(a) => css(a).map(Output::Report),
        Command::Eigen(a) => eigen(a).map(Output::Report),
        Command::Limits(a) => limits(a).map(Output::Report),
        Command::Roots(a) => roots(a).map(Output::Report),
        Command::Measure(a) => measure(a).map(Output::Report),
        Command::Poincare(a) => poincare(a).map(Output::Report),
        Command::VerifyAll(a) => Ok(Output::Report(verify_all(a))),
    }
}

fn rational_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn poly_json(p: &RationalPoly) -> Value {
    json!({
        "coefficients": p.coeffs().iter().map(rational_json).collect::<Vec<_>>(),
        "display": p.to_string(),
    })
}

fn float_json(v: f64) -> Value {
    serde_json::Number::from_f64(v).map(Value::Number).unwrap_or(Value::Null)
}

fn complex_json(z: Complex64) -> Value {
    json!({ "re": float_json(z.re), "im": float_json(z.im) })
}

fn triangle(a: &TriangleArgs) -> narayana_css::Result<Output> {
    if a.csv {
        return verify::triangle_csv(a.rows).map(Output::Text);
    }
    let t = triangle_matrix(a.rows)?;
    if a.json {
        let rows: Vec<Vec<String>> = t.rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
        let env = ReportEnvelope::new("triangle", json!({ "rows": a.rows })).with_payload(json!({ "rows": rows }));
        return Ok(Output::Report(env));
    }
    let width = t.rows.last().and_then(|r| r.iter().map(|v| v.to_string().len()).max()).unwrap_or(1);
    let mut s = String::new();
    for row in &t.rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        s.push_str(cells.join(" ").trim_end());
        s.push('\n');
    }
    Ok(Output::Text(s))
}

fn narayana(a: &NarayanaArgs) -> narayana_css::Result<ReportEnvelope> {
    let p = narayana_poly_direct(a.n)?;
    let params = json!({
        "n": a.n,
        "check_recurrence": a.check_recurrence,
        "check_catalan": a.check_catalan,
        "check_dyck": a.check_dyck,
    });
    let mut env = ReportEnvelope::new("narayana", params).with_payload(json!({ "polynomial": poly_json(&p) }));
    if a.check_recurrence {
        let rec = narayana_polys_recurrence(a.n)?.pop().expect("n >= 1");
        env.check("recurrence", rec == p, || json!({ "recurrence": poly_json(&rec) }));
    }
    if a.check_catalan {
        let at_one = p.eval(&Rational::one());
        let cat = Rational::from_integer(catalan(a.n));
        env.insert("catalan", rational_json(&cat));
        env.check("catalan", at_one == cat, || json!({ "value_at_1": rational_json(&at_one) }));
    }
    if a.check_dyck {
        if a.n > DYCK_ORACLE_LIMIT {
            return Err(Error::OracleTooLarge { n: a.n, limit: DYCK_ORACLE_LIMIT });
        }
        let dist = dyck_peak_distribution(a.n)?;
        let mismatch = (1..=a.n).find(|&k| Rational::from_integer(dist[k].into()) != p.coeff(k));
        env.insert("dyck_counts", json!(dist[1..].to_vec()));
        env.check("dyck", mismatch.is_none(), || json!({ "k": mismatch }));
    }
    Ok(env)
}

fn read_poly(path: &PathBuf) -> narayana_css::Result<RationalPoly> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    polyfile::parse(&text)
}

fn css(a: &CssArgs) -> narayana_css::Result<ReportEnvelope> {
    if let Some(n) = a.phi {
        let phi = build_phi(n)?;
        let matrix: Vec<Vec<Value>> = (0..phi.dim())
            .map(|r| phi.linear.row(r).iter().map(rational_json).collect())
            .collect();
        let params = json!({ "phi": n });
        return Ok(ReportEnvelope::new("css", params).with_payload(json!({
            "matrix": matrix,
            "offset": phi.offset.iter().map(rational_json).collect::<Vec<_>>(),
        })));
    }
    let files = a.compose.as_ref().expect("clap enforces the group");
    let m = a.m.expect("clap enforces --m");
    let (p, q) = (read_poly(&files[0])?, read_poly(&files[1])?);
    let r = compose(&p, &q, m)?;
    let params = json!({
        "compose": files.iter().map(|f| f.display().to_string()).collect::<Vec<_>>(),
        "m": m,
    });
    Ok(ReportEnvelope::new("css", params).with_payload(json!({ "result": poly_json(&r) })))
}

/// Runs every structural check on `Q_{j,n}` and records the first failure.
fn q_checks(env: &mut ReportEnvelope, n: usize, j: usize) {
    let outcome = verify::q_structure_checks(n, j);
    env.check(&format!("q_structure_{j}"), outcome.is_ok(), || {
        json!({ "n": n, "j": j, "reason": outcome.clone().err() })
    });
}

fn eigen(a: &EigenArgs) -> narayana_css::Result<ReportEnvelope> {
    let n = a.n;
    if let Some(j) = a.j {
        if j < 1 || n < 4 || j > n - 3 {
            return Err(Error::InvalidIndex(format!("j = {j} needs 1 <= j <= n-3 with n = {n}")));
        }
    }
    let report = spectrum_report(n)?;
    let mut env = ReportEnvelope::new("eigen", json!({ "n": n, "j": a.j }));
    env.insert("eigenvalues", Value::Array(report.eigenvalues.iter().map(rational_json).collect()));
    env.insert("eigenpolynomials", Value::Array(report.eigenpolys.iter().map(poly_json).collect()));
    env.check("eigenvalues_increasing", report.eigenvalues.windows(2).all(|w| w[0] < w[1]), || {
        json!({ "eigenvalues": report.eigenvalues.iter().map(rational_json).collect::<Vec<_>>() })
    });
    let x1 = RationalPoly::linear(Rational::one());
    let first_ok = report.eigenpolys[0] == x1.pow(n - 1);
    env.check("eigenpolynomial_1", first_ok, || poly_json(&report.eigenpolys[0]));
    let second_ok = report.eigenpolys[1] == &RationalPoly::x() * &x1.pow(n - 2);
    env.check("eigenpolynomial_2", second_ok, || poly_json(&report.eigenpolys[1]));
    let js: Vec<usize> = match a.j {
        Some(j) => vec![j],
        None => (1..n.saturating_sub(2)).collect(),
    };
    let mut qs = Vec::new();
    for &j in &js {
        let q = extract_q(n, j)?;
        let sign = q.self_reciprocal_sign()?;
        qs.push(json!({
            "j": j,
            "q": poly_json(&q),
            "reciprocal_sign": match sign { Some(Sign::Plus) => json!(1), Some(Sign::Minus) => json!(-1), None => Value::Null },
        }));
        q_checks(&mut env, n, j);
    }
    env.insert("q_polynomials", Value::Array(qs));
    Ok(env)
}

fn limits(a: &LimitsArgs) -> narayana_css::Result<ReportEnvelope> {
    let params = json!({ "j": a.j, "ns": a.ns, "tol": a.tol });
    let report = verify_mjnj(a.j, &a.ns, f64::INFINITY)?;
    let coeffs: Vec<Value> = report
        .coefficients
        .iter()
        .map(|c| {
            json!({
                "k": c.k,
                "estimate": float_json(c.estimate),
                "narayana": c.narayana,
                "error_bound": float_json(c.error_bound),
            })
        })
        .collect();
    let mut env = ReportEnvelope::new("limits", params);
    env.insert("coefficients", Value::Array(coeffs));
    env.insert("max_deviation", float_json(report.max_deviation));
    env.check("limit_matches_narayana", report.max_deviation <= a.tol, || {
        json!({ "max_deviation": float_json(report.max_deviation), "tol": a.tol })
    });
    Ok(env)
}

fn roots(a: &RootsArgs) -> narayana_css::Result<ReportEnvelope> {
    let n = a.n;
    let p = narayana_poly_direct(n)?;
    let params = json!({ "n": n, "isolate": a.isolate, "interlace": a.interlace });
    let mut env = ReportEnvelope::new("roots", params);
    if a.interlace {
        if n < 3 {
            return Err(Error::InvalidInput(format!("interlacing needs n >= 3, got {n}")));
        }
        let prev = narayana_poly_direct(n - 1)?;
        let g = poly_gcd(&prev, &p);
        env.check("gcd_is_x", g == RationalPoly::x(), || poly_json(&g));
        let x = RationalPoly::x();
        let verdict = interlace_check(&prev.exact_divide(&x)?, &p.exact_divide(&x)?)?;
        env.insert("verdict", json!(format!("{verdict:?}")));
        env.check("strict_interlace", verdict == InterlaceVerdict::StrictInterlace, || {
            json!({ "verdict": format!("{verdict:?}") })
        });
        return Ok(env);
    }
    let iso = isolate_roots(&p)?;
    let intervals: Vec<Value> = iso
        .intervals
        .iter()
        .map(|i| {
            json!({
                "lo": rational_json(&i.lo),
                "hi": rational_json(&i.hi),
                "multiplicity": i.multiplicity,
                "approx": float_json(i.midpoint().to_f64().unwrap_or(f64::NAN)),
            })
        })
        .collect();
    env.insert("intervals", Value::Array(intervals));
    env.check("all_real", iso.real_root_count() == n, || json!({ "real_roots": iso.real_root_count() }));
    env.check("simple", iso.intervals.iter().all(|i| i.multiplicity == 1), || json!({}));
    let reduced = p.exact_divide(&RationalPoly::x())?;
    let negative = verify::negative_root_count(&reduced)?;
    env.check("nonpositive", negative == n - 1, || json!({ "negative_roots": negative }));
    let minus_one = p.eval(&int(-1)).is_zero();
    env.check("minus_one_iff_even", minus_one == (n % 2 == 0), || json!({ "root_at_minus_one": minus_one }));
    Ok(env)
}

/// Grid `x_i = -tan^2(pi (1 - u_i) / 2)`, `u_i = (i + 1/2) / G`: uniform in
/// the limit CDF's natural variable.
pub fn measure_grid(g: usize) -> Vec<f64> {
    (0..g)
        .map(|i| {
            let u = (i as f64 + 0.5) / g as f64;
            -(std::f64::consts::FRAC_PI_2 * (1.0 - u)).tan().powi(2)
        })
        .collect()
}

fn measure(a: &MeasureArgs) -> narayana_css::Result<ReportEnvelope> {
    if a.grid == 0 {
        return Err(Error::InvalidInput("grid must be positive".into()));
    }
    let roots = verify::narayana_roots(a.n)?;
    let cdf = empirical_cdf(&roots)?;
    let ks = ks_against_kappa(&cdf)?;
    let samples = density_samples(&cdf, &measure_grid(a.grid))?;
    let io = |e: std::io::Error| Error::InvalidInput(format!("cannot write {}: {e}", a.out.display()));
    let mut w = csv::Writer::from_path(&a.out).map_err(|e| Error::InvalidInput(e.to_string()))?;
    w.write_record(["x", "empirical", "theoretical"]).map_err(|e| Error::InvalidInput(e.to_string()))?;
    for s in &samples {
        w.write_record([format!("{:.16e}", s.x), format!("{:.16e}", s.empirical), format!("{:.16e}", s.theoretical)])
            .map_err(|e| Error::InvalidInput(e.to_string()))?;
    }
    w.flush().map_err(io)?;
    let params = json!({ "n": a.n, "grid": a.grid, "out": a.out.display().to_string(), "max_ks": a.max_ks });
    let mut env = ReportEnvelope::new("measure", params);
    env.insert("ks", float_json(ks));
    env.insert("roots", json!(roots.len()));
    if let Some(max) = a.max_ks {
        env.check("ks_below_threshold", ks <= max, || json!({ "ks": float_json(ks), "max_ks": max }));
    }
    Ok(env)
}

fn poincare(a: &PoincareArgs) -> narayana_css::Result<ReportEnvelope> {
    let spec = match a.preset {
        Preset::Fibonacci => RecurrenceSpec::fibonacci(),
        Preset::Narayana => {
            let x = a.x.ok_or_else(|| Error::InvalidInput("the narayana preset needs --x".into()))?;
            RecurrenceSpec::narayana(x)?
        }
    };
    let r = poincare_ratio(&spec, a.tmax)?;
    let params = json!({
        "preset": format!("{:?}", a.preset).to_lowercase(),
        "x": a.x,
        "tmax": a.tmax,
    });
    let mut env = ReportEnvelope::new("poincare", params);
    env.insert("ratios", Value::Array(r.ratios.iter().map(|&v| float_json(v)).collect()));
    env.insert("last_ratio", float_json(r.last_ratio));
    env.insert("extrapolated", json!(r.extrapolated));
    env.insert(
        "characteristic_roots",
        Value::Array(r.characteristic_roots.iter().map(|&z| complex_json(z)).collect()),
    );
    let verdict = match r.verdict {
        LimitVerdict::LimitClaim { estimate, root_index, root, distance } => json!({
            "kind": "limit",
            "estimate": float_json(estimate),
            "root_index": root_index,
            "root": complex_json(root),
            "distance": float_json(distance),
        }),
        LimitVerdict::NoLimitClaim { moduli } => json!({
            "kind": "no_limit",
            "moduli": [float_json(moduli.0), float_json(moduli.1)],
        }),
    };
    env.insert("verdict", verdict);
    Ok(env)
}

fn verify_all(a: &VerifyAllArgs) -> ReportEnvelope {
    let cfg = verify::VerifyConfig { max_n: a.max_n, seed: a.seed };
    let outcomes = verify::run_all(&cfg);
    let mut env = ReportEnvelope::new("verify-all", json!({ "max_n": a.max_n, "seed": a.seed }));
    env.insert(
        "criteria",
        Value::Array(
            outcomes
                .iter()
                .map(|o| {
                    json!({
                        "id": o.id,
                        "title": o.title,
                        "passed": o.passed,
                        "detail": o.detail,
                        "seconds": float_json(o.seconds),
                    })
                })
                .collect(),
        ),
    );
    for o in &outcomes {
        env.check(&format!("criterion_{}", o.id), o.passed, || json!({ "detail": o.detail }));
    }
    env
}
