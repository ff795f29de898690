//! The acceptance suite: ten criteria, each a pass/fail verdict with a
//! short detail line. `verify-all` and the acceptance test target both run
//! these.

use std::f64::consts::PI;
use std::time::Instant;

use narayana_css::asymptotics::{
    cdf_kappa, density_rho, empirical_cdf, ks_against_kappa, plemelj_density, poincare_ratio,
    poincare_ratio_exact, psi_n, psi_n_exact, theta_n, LimitVerdict, RecurrenceSpec,
};
use narayana_css::css::build_phi;
use narayana_css::exactpoly::{int, rat, Rational, RationalPoly, Sign};
use narayana_css::narayana::{
    catalan, dyck_peak_distribution, narayana_number, narayana_poly_direct, narayana_polys_recurrence,
    triangle_matrix,
};
use narayana_css::roots::{cauchy_bound, default_tolerance, sturm_count, interlace_check_isolated, isolate_roots, poly_gcd, roots_float, InterlaceVerdict};
use narayana_css::spectra::{
    eigenpolynomial, eigenvalues_closed_form, extract_q, sigma_system_solve, verify_mjnj,
};
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Pinned tolerances and sizes of the acceptance suite.
pub mod limits {
    pub const TRIANGLE_ROWS: usize = 5;
    pub const RECURRENCE_MAX_N: usize = 60;
    pub const CATALAN_MAX_N: usize = 30;
    pub const DYCK_MAX_N: usize = 12;
    pub const SPECTRUM_N: (usize, usize) = (3, 12);
    pub const Q_STRUCTURE_N: (usize, usize) = (4, 10);
    pub const MJNJ_J: (usize, usize) = (2, 6);
    pub const MJNJ_NS: [usize; 3] = [20, 40, 80];
    pub const MJNJ_TOL: f64 = 1e-2;
    pub const Q1_RATE_J: (usize, usize) = (3, 6);
    pub const HYPERBOLIC_MAX_N: usize = 100;
    pub const KS_N: usize = 100;
    pub const KS_N_LARGE: usize = 200;
    pub const KS_MAX: f64 = 0.05;
    pub const FUNCTIONAL_EQ_RTOL: f64 = 1e-12;
    pub const GRID_POINTS: usize = 100;
    pub const KAPPA_DERIVATIVE_RTOL: f64 = 1e-6;
    pub const PLEMELJ_EPS: f64 = 1e-6;
    pub const PLEMELJ_TOL: f64 = 1e-4;
    pub const PSI_EXACT_MAX_N: usize = 60;
    pub const THETA_TOL: f64 = 1e-2;
    pub const FIBONACCI_T: usize = 50;
    pub const FIBONACCI_TOL: f64 = 1e-10;
    pub const NARAYANA_T: usize = 60;
    pub const NARAYANA_RATIO_TOL: f64 = 1e-3;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Upper end for the criteria that sweep over `n` (2, 3, 4 and 6).
    pub max_n: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_n: limits::HYPERBOLIC_MAX_N, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CriterionOutcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        format!(
            "[{}] criterion {:>2} {} ({:.2}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.seconds,
            self.detail
        )
    }
}

type Check = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn lib<T>(r: narayana_css::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub const TITLES: [&str; 10] = [
    "triangle exactness",
    "recurrence consistency",
    "spectrum",
    "Q-structure",
    "limit polynomials",
    "hyperbolicity and interlacing",
    "root distribution",
    "analytic identities",
    "quotient limits",
    "ratio engine",
];

pub fn run_criterion(id: usize, cfg: &VerifyConfig) -> CriterionOutcome {
    let start = Instant::now();
    let result = match id {
        1 => criterion_triangle(),
        2 => criterion_recurrence(cfg),
        3 => criterion_spectrum(cfg),
        4 => criterion_q_structure(cfg),
        5 => criterion_limits(),
        6 => criterion_hyperbolic(cfg),
        7 => criterion_distribution(),
        8 => criterion_identities(cfg),
        9 => criterion_quotients(),
        10 => criterion_ratios(cfg),
        _ => Err(format!("no criterion {id}")),
    };
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionOutcome {
        id,
        title: TITLES.get(id.wrapping_sub(1)).copied().unwrap_or("unknown"),
        passed,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    }
}

/// Runs all ten criteria on worker threads; the result is ordered by id.
pub fn run_all(cfg: &VerifyConfig) -> Vec<CriterionOutcome> {
    let mut out: Vec<CriterionOutcome> = std::thread::scope(|s| {
        let handles: Vec<_> = (1..=10).map(|id| s.spawn(move || run_criterion(id, cfg))).collect();
        handles.into_iter().map(|h| h.join().expect("criterion thread")).collect()
    });
    out.sort_by_key(|o| o.id);
    out
}

/// CSV rendering of the first rows of the triangle.
pub fn triangle_csv(rows: usize) -> narayana_css::Result<String> {
    let t = triangle_matrix(rows)?;
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    for row in &t.rows {
        w.write_record(row.iter().map(|v| v.to_string())).expect("in-memory write");
    }
    Ok(String::from_utf8(w.into_inner().expect("flush")).expect("utf8"))
}

fn criterion_triangle() -> Check {
    let got = lib(triangle_csv(limits::TRIANGLE_ROWS))?;
    let expected = "1\n1,1\n1,3,1\n1,6,6,1\n1,10,20,10,1\n";
    ensure!(got == expected, "rows differ: {got:?}");
    Ok("rows 1-5 verbatim".into())
}

fn criterion_recurrence(cfg: &VerifyConfig) -> Check {
    let max = limits::RECURRENCE_MAX_N.min(cfg.max_n).max(1);
    let rec = lib(narayana_polys_recurrence(max))?;
    for (i, r) in rec.iter().enumerate() {
        let n = i + 1;
        ensure!(*r == lib(narayana_poly_direct(n))?, "N_{n}: recurrence and closed form differ");
    }
    let cmax = limits::CATALAN_MAX_N.min(cfg.max_n).max(1);
    for n in 1..=cmax {
        let at_one = lib(narayana_poly_direct(n))?.eval(&Rational::one());
        ensure!(at_one == Rational::from_integer(catalan(n)), "N_{n}(1) != Cat_{n}");
    }
    let dmax = limits::DYCK_MAX_N.min(cfg.max_n).max(1);
    for n in 1..=dmax {
        let dist = lib(dyck_peak_distribution(n))?;
        for (k, &count) in dist.iter().enumerate().skip(1) {
            ensure!(
                num_bigint::BigInt::from(count) == lib(narayana_number(n, k))?,
                "Dyck count differs at n={n}, k={k}"
            );
        }
    }
    Ok(format!("recurrence n<={max}, Catalan n<={cmax}, Dyck n<={dmax}"))
}

fn criterion_spectrum(cfg: &VerifyConfig) -> Check {
    let (lo, hi) = limits::SPECTRUM_N;
    let hi = hi.min(cfg.max_n.max(lo));
    for n in lo..=hi {
        let a = lib(build_phi(n))?.linear;
        let eig = lib(eigenvalues_closed_form(n))?;
        ensure!(eig.windows(2).all(|w| w[0] < w[1]), "n={n}: eigenvalues not increasing");
        for (j, lambda) in eig.iter().enumerate() {
            let shifted = a.shift_diagonal(lambda);
            ensure!(lib(shifted.determinant())?.is_zero(), "n={n}: det(A - lambda_{}) != 0", j + 1);
            ensure!(shifted.kernel().len() == 1, "n={n}: kernel for lambda_{} not 1-dimensional", j + 1);
        }
        let x1 = RationalPoly::linear(Rational::one());
        ensure!(lib(eigenpolynomial(n, 1))? == x1.pow(n - 1), "n={n}: eigenpolynomial 1");
        ensure!(
            lib(eigenpolynomial(n, 2))? == &RationalPoly::x() * &x1.pow(n - 2),
            "n={n}: eigenpolynomial 2"
        );
    }
    Ok(format!("n={lo}..{hi}: n-1 simple eigenvalues each, eigenpolynomials 1 and 2 exact"))
}

/// Structural checks on `Q_{j,n}`; `Err` names the first one that fails.
pub fn q_structure_checks(n: usize, j: usize) -> Check {
    let q = lib(extract_q(n, j))?;
    ensure!(q == lib(sigma_system_solve(n, j))?, "n={n} j={j}: kernel and linear-system routes differ");
    ensure!(
        lib(q.self_reciprocal_sign())? == Some(Sign::parity(j)),
        "n={n} j={j}: reciprocal sign is not (-1)^j"
    );
    ensure!(q.eval(&Rational::one()).is_zero() == (j % 2 == 1), "n={n} j={j}: Q(1) parity");
    if n % 2 == 0 && j % 2 == 1 {
        let full = &RationalPoly::linear_power(Rational::one(), n - j - 2) * &q;
        ensure!(full.coeff((n - 2) / 2).is_zero(), "n={n} j={j}: middle coefficient is nonzero");
    }
    let iso = lib(isolate_roots(&q))?;
    ensure!(
        iso.distinct_count() == j && iso.intervals.iter().all(|i| i.multiplicity == 1),
        "n={n} j={j}: roots are not {j} distinct real"
    );
    ensure!(!q.eval(&Rational::zero()).is_zero(), "n={n} j={j}: Q(0) = 0");
    ensure!(lib(positive_root_count(&q))? == j, "n={n} j={j}: a root is not positive");
    Ok(String::new())
}

/// Distinct roots in `(0, inf)` by a Sturm count; `p(0)` must be nonzero.
pub fn positive_root_count(p: &RationalPoly) -> narayana_css::Result<usize> {
    sturm_count(p, &Rational::zero(), &cauchy_bound(p))
}

/// Distinct roots in `(-inf, 0)` by a Sturm count; `p(0)` must be nonzero.
pub fn negative_root_count(p: &RationalPoly) -> narayana_css::Result<usize> {
    sturm_count(p, &-cauchy_bound(p), &Rational::zero())
}

fn criterion_q_structure(cfg: &VerifyConfig) -> Check {
    let (lo, hi) = limits::Q_STRUCTURE_N;
    let hi = hi.min(cfg.max_n.max(lo));
    let mut cells = 0;
    for n in lo..=hi {
        for j in 1..=n - 3 {
            q_structure_checks(n, j)?;
            cells += 1;
        }
    }
    Ok(format!("{cells} cells n={lo}..{hi}: both routes agree, symmetry, parity, positive simple roots"))
}

fn criterion_limits() -> Check {
    let (jlo, jhi) = limits::MJNJ_J;
    let mut worst: f64 = 0.0;
    let mut bounds = Vec::new();
    for j in jlo..=jhi {
        let report = lib(verify_mjnj(j, &limits::MJNJ_NS, limits::MJNJ_TOL))?;
        worst = worst.max(report.max_deviation);
        let b = report.coefficients.iter().map(|c| c.error_bound).fold(0.0, f64::max);
        bounds.push(format!("j={j}:{b:.1e}"));
    }
    let (qlo, qhi) = limits::Q1_RATE_J;
    for j in qlo..=qhi {
        let target = -((j * (j + 1) / 2) as f64);
        let gaps: Vec<f64> = limits::MJNJ_NS
            .iter()
            .map(|&n| {
                lib(sigma_system_solve(n, j)).map(|q| (q.coeff(j - 1).to_f64().unwrap_or(f64::NAN) - target).abs())
            })
            .collect::<std::result::Result<_, _>>()?;
        ensure!(gaps.windows(2).all(|w| w[1] < w[0]), "j={j}: |q_1 + j(j+1)/2| not decreasing: {gaps:?}");
    }
    Ok(format!("max deviation {worst:.2e} <= {:.0e}; error bounds {}", limits::MJNJ_TOL, bounds.join(" ")))
}

fn divide_by_x(p: &RationalPoly) -> std::result::Result<RationalPoly, String> {
    lib(p.exact_divide(&RationalPoly::x()))
}

fn criterion_hyperbolic(cfg: &VerifyConfig) -> Check {
    let max = limits::HYPERBOLIC_MAX_N.min(cfg.max_n).max(2);
    let mut previous: Option<(RationalPoly, narayana_css::roots::RootIsolation)> = None;
    for n in 2..=max {
        let full = lib(narayana_poly_direct(n))?;
        let reduced = divide_by_x(&full)?;
        let iso = lib(isolate_roots(&reduced))?;
        ensure!(
            iso.distinct_count() == n - 1 && iso.intervals.iter().all(|i| i.multiplicity == 1),
            "N_{n}/x does not have {} distinct real roots",
            n - 1
        );
        ensure!(!reduced.eval(&Rational::zero()).is_zero(), "0 is a multiple root of N_{n}");
        ensure!(lib(negative_root_count(&reduced))? == n - 1, "N_{n} has a positive root");
        let minus_one = int(-1);
        ensure!(full.eval(&minus_one).is_zero() == (n % 2 == 0), "N_{n}(-1) parity");
        if n >= 3 {
            let (prev_full, prev_iso) = previous.take().expect("set at n-1");
            ensure!(poly_gcd(&prev_full, &full) == RationalPoly::x(), "gcd(N_{}, N_{n}) != x", n - 1);
            let verdict = lib(interlace_check_isolated(prev_iso, iso.clone()))?;
            ensure!(verdict == InterlaceVerdict::StrictInterlace, "N_{}/x, N_{n}/x: {verdict:?}", n - 1);
        }
        previous = Some((full, iso));
    }
    Ok(format!("n=2..{max}: real, simple, nonpositive, strict interlacing, gcd x"))
}

/// Roots of `N_n` as floats (refined to `2^-40`), for the distribution test.
pub fn narayana_roots(n: usize) -> narayana_css::Result<Vec<f64>> {
    roots_float(&narayana_poly_direct(n)?, &default_tolerance())
}

fn criterion_distribution() -> Check {
    let ks = |n: usize| -> std::result::Result<f64, String> {
        let r = lib(narayana_roots(n))?;
        ensure!(r.len() == n, "N_{n}: expected {n} real roots, got {}", r.len());
        lib(ks_against_kappa(&lib(empirical_cdf(&r))?))
    };
    let small = ks(limits::KS_N)?;
    let large = ks(limits::KS_N_LARGE)?;
    ensure!(small <= limits::KS_MAX, "KS(N_{}) = {small:.5} > {}", limits::KS_N, limits::KS_MAX);
    ensure!(large < small, "KS(N_{}) = {large:.5} not below KS(N_{}) = {small:.5}", limits::KS_N_LARGE, limits::KS_N);
    Ok(format!("KS(N_{}) = {small:.5}, KS(N_{}) = {large:.5}", limits::KS_N, limits::KS_N_LARGE))
}

/// Log-spaced points in `[-10^3, -10^-3]`.
pub fn log_grid(count: usize) -> Vec<f64> {
    (0..count)
        .map(|i| -(10f64).powf(-3.0 + 6.0 * i as f64 / (count - 1) as f64))
        .collect()
}

fn criterion_identities(cfg: &VerifyConfig) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut points = log_grid(limits::GRID_POINTS);
    points.extend((0..limits::GRID_POINTS).map(|_| -(10f64).powf(rng.gen_range(-3.0..3.0))));
    let mut worst_fe: f64 = 0.0;
    let mut worst_d: f64 = 0.0;
    for &x in &points {
        let lhs = x * x * lib(density_rho(x))?;
        let rhs = lib(density_rho(1.0 / x))?;
        worst_fe = worst_fe.max((lhs - rhs).abs() / rhs.abs());
        let h = 1e-5 * x.abs();
        let d = (lib(cdf_kappa(x + h))? - lib(cdf_kappa(x - h))?) / (2.0 * h);
        let rho = lib(density_rho(x))?;
        worst_d = worst_d.max((d - rho).abs() / rho);
    }
    ensure!(worst_fe <= limits::FUNCTIONAL_EQ_RTOL, "x^2 rho(x) vs rho(1/x): {worst_fe:e}");
    ensure!(worst_d <= limits::KAPPA_DERIVATIVE_RTOL, "kappa' vs rho: {worst_d:e}");
    let p = lib(plemelj_density(-1.0, limits::PLEMELJ_EPS))?;
    let gap = (p - 1.0 / (2.0 * PI)).abs();
    ensure!(gap <= limits::PLEMELJ_TOL, "boundary density at -1 off by {gap:e}");
    Ok(format!("functional eq {worst_fe:.1e}, kappa' {worst_d:.1e}, boundary density {gap:.1e}"))
}

fn criterion_quotients() -> Check {
    for n in 1..=limits::PSI_EXACT_MAX_N {
        let expected = rat(2 * (2 * n as i64 + 1), n as i64 + 2);
        ensure!(lib(psi_n_exact(n, &int(1)))? == expected, "Psi_{n}(1) != 2(2n+1)/(n+2)");
    }
    let target = (2f64.sqrt() + 1.0).powi(2);
    let two = Complex64::new(2.0, 0.0);
    let e20 = (lib(psi_n(20, two))? - target).norm();
    let e60 = (lib(psi_n(60, two))? - target).norm();
    ensure!(e60 < e20, "|Psi_60(2) - Psi(2)| = {e60:e} not below {e20:e}");
    let t60 = (lib(theta_n(60, Complex64::new(1.0, 0.0)))? - 0.5).norm();
    ensure!(t60 < limits::THETA_TOL, "|Theta_60(1) - 1/2| = {t60:e}");
    Ok(format!("Psi_n(1) exact n<={}, Psi errors {e20:.1e} -> {e60:.1e}, Theta_60 gap {t60:.1e}", limits::PSI_EXACT_MAX_N))
}

/// Constant-coefficient exact check: with roots `l1`, `l2` and
/// `f(t) = c1 l1^t + c2 l2^t`, the ratio is exactly `l2` when `c1 = 0`.
pub fn exact_selection_check(l1: &Rational, l2: &Rational, c2: &Rational, t_max: usize) -> narayana_css::Result<bool> {
    let a = [l1 * l2, -(l1 + l2)];
    let r = poincare_ratio_exact(&a, &[c2.clone(), c2 * l2], t_max)?;
    Ok(r.iter().all(|v| v == l2))
}

fn criterion_ratios(cfg: &VerifyConfig) -> Check {
    let golden = (1.0 + 5f64.sqrt()) / 2.0;
    let fib = lib(poincare_ratio(&RecurrenceSpec::fibonacci(), limits::FIBONACCI_T))?;
    match fib.verdict {
        LimitVerdict::LimitClaim { estimate, root, .. } => {
            ensure!((estimate - golden).abs() < limits::FIBONACCI_TOL, "Fibonacci estimate {estimate}");
            ensure!((root.re - golden).abs() < 1e-12, "Fibonacci classified as {root}");
        }
        other => return Err(format!("Fibonacci: {other:?}")),
    }
    let target = (2f64.sqrt() + 1.0).powi(2);
    let nar = lib(poincare_ratio(&lib(RecurrenceSpec::narayana(2.0))?, limits::NARAYANA_T))?;
    let nar_err = match nar.verdict {
        LimitVerdict::LimitClaim { estimate, root, .. } => {
            ensure!((root.re - target).abs() < 1e-12, "Narayana at 2 classified as {root}");
            (estimate - target).abs()
        }
        other => return Err(format!("Narayana at 2: {other:?}")),
    };
    ensure!(nar_err < limits::NARAYANA_RATIO_TOL, "Narayana at 2 off by {nar_err:e}");
    let at_minus_one = lib(poincare_ratio(&lib(RecurrenceSpec::narayana(-1.0))?, limits::NARAYANA_T))?;
    ensure!(
        matches!(at_minus_one.verdict, LimitVerdict::NoLimitClaim { .. }),
        "Narayana at -1 claimed a limit"
    );
    ensure!(lib(exact_selection_check(&int(3), &rat(1, 2), &int(1), 40))?, "C_1 = 0 selection with roots 3, 1/2");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..20 {
        let l2 = rat(rng.gen_range(-9..=9), rng.gen_range(1..=9));
        let mut l1 = rat(rng.gen_range(-40..=40), rng.gen_range(1..=4));
        if l1.abs() <= l2.abs() {
            l1 = l2.abs() + int(1);
        }
        if l2.is_zero() {
            continue;
        }
        ensure!(lib(exact_selection_check(&l1, &l2, &int(rng.gen_range(1..=5)), 30))?, "selection with roots {l1}, {l2}");
    }
    Ok(format!("Fibonacci ok, Narayana(2) off by {nar_err:.1e}, no claim at -1, exact selection ok"))
}
