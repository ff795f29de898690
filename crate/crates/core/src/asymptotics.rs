//! Root-counting measure of the Narayana polynomials: the limiting density
//! and distribution, empirical CDFs and the KS distance, quotient and
//! logarithmic-derivative limits, Cauchy transforms, boundary-value density
//! recovery, and a ratio engine for linear difference equations.

use std::f64::consts::PI;
use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{RationalPoly, Rational};
use crate::narayana::narayana_poly_direct;

pub type ComplexValue = Complex64;

/// `rho(x) = 1 / (pi (1 - x) sqrt(-x))` for `x < 0`.
pub fn density_rho(x: f64) -> Result<f64> {
    if x.is_nan() || x >= 0.0 {
        return Err(Error::DomainError(format!("density needs x < 0, got {x}")));
    }
    Ok(1.0 / (PI * (1.0 - x) * (-x).sqrt()))
}

/// `kappa(x) = 1 - (2/pi) arctan sqrt(-x)` for `x <= 0`.
pub fn cdf_kappa(x: f64) -> Result<f64> {
    if x.is_nan() || x > 0.0 {
        return Err(Error::DomainError(format!("distribution needs x <= 0, got {x}")));
    }
    Ok(1.0 - 2.0 / PI * (-x).sqrt().atan())
}

/// Empirical distribution of a finite sample.
#[derive(Debug, Clone, PartialEq)]
pub struct StepCDF {
    pub points: Vec<f64>,
    pub n: usize,
}

impl StepCDF {
    /// `#{p <= x} / n`.
    pub fn eval(&self, x: f64) -> f64 {
        self.points.partition_point(|&p| p <= x) as f64 / self.n as f64
    }

    /// `#{p < x} / n`.
    pub fn eval_below(&self, x: f64) -> f64 {
        self.points.partition_point(|&p| p < x) as f64 / self.n as f64
    }
}

pub fn empirical_cdf(roots: &[f64]) -> Result<StepCDF> {
    if roots.is_empty() {
        return Err(Error::InvalidInput("empirical CDF of an empty sample".into()));
    }
    if roots.iter().any(|r| !r.is_finite()) {
        return Err(Error::InvalidInput("sample contains a non-finite value".into()));
    }
    let mut points = roots.to_vec();
    points.sort_by(f64::total_cmp);
    Ok(StepCDF { n: points.len(), points })
}

/// `sup_x |F(x) - G(x)|` for a continuous nondecreasing `G`, attained at a
/// jump of `F`: checked at every jump and just below it.
pub fn ks_distance(f: &StepCDF, g: impl Fn(f64) -> f64) -> f64 {
    let mut sup: f64 = 0.0;
    let mut i = 0;
    while i < f.points.len() {
        let p = f.points[i];
        let below = i as f64 / f.n as f64;
        let mut j = i;
        while j < f.points.len() && f.points[j] == p {
            j += 1;
        }
        let at = j as f64 / f.n as f64;
        let gp = g(p);
        sup = sup.max((below - gp).abs()).max((at - gp).abs());
        i = j;
    }
    sup
}

/// KS distance between a sample on `(-inf, 0]` and `kappa`.
pub fn ks_against_kappa(f: &StepCDF) -> Result<f64> {
    if let Some(&p) = f.points.iter().find(|&&p| p > 0.0) {
        return Err(Error::DomainError(format!("sample point {p} is positive")));
    }
    Ok(ks_distance(f, |x| cdf_kappa(x).expect("x <= 0")))
}

/// One grid point comparing an empirical CDF with `kappa`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensitySample {
    pub x: f64,
    pub empirical: f64,
    pub theoretical: f64,
}

pub fn density_samples(f: &StepCDF, grid: &[f64]) -> Result<Vec<DensitySample>> {
    grid.iter()
        .map(|&x| Ok(DensitySample { x, empirical: f.eval(x), theoretical: cdf_kappa(x)? }))
        .collect()
}

fn on_cut(x: ComplexValue) -> bool {
    x.im == 0.0 && x.re <= 0.0
}

/// Principal square root, argument in `(-pi/2, pi/2]`.
fn principal_sqrt(x: ComplexValue) -> ComplexValue {
    x.sqrt()
}

/// `Psi(x) = (sqrt(x) + 1)^2` off the cut `(-inf, 0]`.
pub fn psi_limit(x: ComplexValue) -> Result<ComplexValue> {
    if on_cut(x) {
        return Err(Error::BranchError(format!("{x} lies on the cut (-inf, 0]")));
    }
    let s = principal_sqrt(x) + 1.0;
    Ok(s * s)
}

/// `Theta(x) = 1 / (x + sqrt(x))` off the cut.
pub fn theta_limit(x: ComplexValue) -> Result<ComplexValue> {
    if on_cut(x) {
        return Err(Error::BranchError(format!("{x} lies on the cut (-inf, 0]")));
    }
    Ok(theta_unchecked(x))
}

fn theta_unchecked(x: ComplexValue) -> ComplexValue {
    (x + principal_sqrt(x)).inv()
}

fn checked_quotient(num: ComplexValue, den: ComplexValue, what: &str) -> Result<ComplexValue> {
    if den.is_zero() {
        return Err(Error::PoleError(format!("{what}: denominator vanishes")));
    }
    let q = num / den;
    if !q.re.is_finite() || !q.im.is_finite() {
        return Err(Error::PoleError(format!("{what}: quotient is not finite")));
    }
    Ok(q)
}

/// `(N_n(x), N_n'(x), N_{n+1}(x))` up to a common positive scale, from
/// `N_{m+2} = (2m+3)/(m+3) (x+1) N_{m+1} - m/(m+3) (x-1)^2 N_m`. Off the cut
/// `N_m` is the dominant solution, so the forward iteration is stable where
/// expanding the coefficients is not.
fn narayana_values(n: usize, x: ComplexValue) -> Result<[ComplexValue; 3]> {
    if n == 0 {
        return Err(Error::InvalidIndex("Narayana polynomials start at n = 1".into()));
    }
    let one = Complex64::new(1.0, 0.0);
    // (N_m, N_m', N_{m+1}, N_{m+1}') starting at m = 1
    let mut v = [x, one, x * x + x, 2.0 * x + 1.0];
    let (xp, xm) = (x + 1.0, x - 1.0);
    for m in 1..n {
        let a = (2 * m + 3) as f64 / (m + 3) as f64;
        let b = m as f64 / (m + 3) as f64;
        let next = a * xp * v[2] - b * xm * xm * v[0];
        let next_d = a * (xp * v[3] + v[2]) - b * (xm * xm * v[1] + 2.0 * xm * v[0]);
        v = [v[2], v[3], next, next_d];
        let scale = v.iter().fold(0.0f64, |acc, z| acc.max(z.norm()));
        if scale > 1e150 || (scale < 1e-150 && scale > 0.0) {
            v.iter_mut().for_each(|z| *z /= scale);
        }
    }
    Ok([v[0], v[1], v[2]])
}

/// `Psi_n(x) = N_{n+1}(x) / N_n(x)`.
pub fn psi_n(n: usize, x: ComplexValue) -> Result<ComplexValue> {
    let [value, _, next] = narayana_values(n, x)?;
    checked_quotient(next, value, &format!("Psi_{n}({x})"))
}

/// `Psi_n(x)` in exact arithmetic.
pub fn psi_n_exact(n: usize, x: &Rational) -> Result<Rational> {
    let den = narayana_poly_direct(n)?.eval(x);
    if den.is_zero() {
        return Err(Error::PoleError(format!("N_{n} vanishes at {x}")));
    }
    Ok(narayana_poly_direct(n + 1)?.eval(x) / den)
}

/// `Theta_n(x) = N_n'(x) / (n N_n(x))`.
pub fn theta_n(n: usize, x: ComplexValue) -> Result<ComplexValue> {
    let [value, derivative, _] = narayana_values(n, x)?;
    checked_quotient(derivative, value * n as f64, &format!("Theta_{n}({x})"))
}

/// `P'(x) / (deg P * P(x))`: the Cauchy transform of the uniform measure on
/// the roots of `P`.
pub fn cauchy_transform(p: &RationalPoly, x: ComplexValue) -> Result<ComplexValue> {
    let d = match p.degree() {
        Some(d) if d > 0 => d,
        _ => return Err(Error::InvalidInput("Cauchy transform needs a nonconstant polynomial".into())),
    };
    let num = p.derivative().eval_complex(x);
    let den = p.eval_complex(x) * d as f64;
    checked_quotient(num, den, "Cauchy transform")
}

/// Density recovered from the jump of `Theta` across the cut:
/// `Re[(i / 2 pi) (Theta(x + i eps) - Theta(x - i eps))]`.
pub fn plemelj_density(x: f64, eps: f64) -> Result<f64> {
    if x.is_nan() || x >= 0.0 {
        return Err(Error::DomainError(format!("boundary density needs x < 0, got {x}")));
    }
    if eps.is_nan() || eps <= 0.0 {
        return Err(Error::InvalidInput(format!("eps must be positive, got {eps}")));
    }
    let upper = theta_unchecked(Complex64::new(x, eps));
    let lower = theta_unchecked(Complex64::new(x, -eps));
    Ok((Complex64::i() / (2.0 * PI) * (upper - lower)).re)
}

/// Roots of `lambda^k + a_{k-1} lambda^{k-1} + ... + a_0`, given
/// `a = [a_0, ..., a_{k-1}]`.
pub fn characteristic_roots(a: &[f64]) -> Vec<ComplexValue> {
    match a.len() {
        0 => Vec::new(),
        1 => vec![Complex64::new(-a[0], 0.0)],
        2 => {
            let (b, c) = (a[1], a[0]);
            let disc = Complex64::new(b * b - 4.0 * c, 0.0).sqrt();
            // larger-modulus root first, the other by Vieta
            let sign = if b >= 0.0 { -1.0 } else { 1.0 };
            let r1 = (Complex64::new(-b, 0.0) + disc * sign) / 2.0;
            let r2 = if r1.is_zero() { (Complex64::new(-b, 0.0) - disc * sign) / 2.0 } else { Complex64::new(c, 0.0) / r1 };
            vec![r1, r2]
        }
        k => {
            let companion = DMatrix::from_fn(k, k, |r, c| {
                if r + 1 == c {
                    1.0
                } else if r == k - 1 {
                    -a[c]
                } else {
                    0.0
                }
            });
            companion.complex_eigenvalues().iter().cloned().collect()
        }
    }
}

/// Relative tolerance for deciding that two moduli coincide.
pub const EQUIMODULAR_RTOL: f64 = 1e-12;

fn equimodular_pair(roots: &[ComplexValue]) -> Option<(usize, usize)> {
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let (a, b) = (roots[i].norm(), roots[j].norm());
            if (a - b).abs() <= EQUIMODULAR_RTOL * a.max(b) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Coefficients `[a_0, a_1]` of `Psi^2 - 2(x+1) Psi + (x-1)^2`.
pub fn limit_characteristic(x: f64) -> [f64; 2] {
    [(x - 1.0) * (x - 1.0), -2.0 * (x + 1.0)]
}

/// Whether the two roots of `Psi^2 - 2(x+1) Psi + (x-1)^2` share a modulus.
pub fn equimodular_check(x: f64) -> bool {
    equimodular_pair(&characteristic_roots(&limit_characteristic(x))).is_some()
}

type CoefficientFn = Box<dyn Fn(usize) -> f64 + Send + Sync>;

/// `f(t+k) + P_{k-1}(t) f(t+k-1) + ... + P_0(t) f(t) = 0` with
/// `P_i(t) -> a_i`.
pub struct RecurrenceSpec {
    pub name: String,
    coefficients: Vec<CoefficientFn>,
    pub limits: Vec<f64>,
    pub initial: Vec<f64>,
}

impl fmt::Debug for RecurrenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RecurrenceSpec")
            .field("name", &self.name)
            .field("order", &self.order())
            .field("limits", &self.limits)
            .field("initial", &self.initial)
            .finish()
    }
}

impl RecurrenceSpec {
    pub fn new(
        name: impl Into<String>,
        coefficients: Vec<CoefficientFn>,
        limits: Vec<f64>,
        initial: Vec<f64>,
    ) -> Result<Self> {
        let k = coefficients.len();
        if k == 0 {
            return Err(Error::InvalidInput("recurrence order must be at least 1".into()));
        }
        if limits.len() != k || initial.len() != k {
            return Err(Error::InvalidInput(format!(
                "order {k} needs {k} limits and {k} initial values"
            )));
        }
        if limits.iter().any(|a| !a.is_finite()) {
            return Err(Error::InvalidInput("coefficient limits must be finite".into()));
        }
        if initial.iter().all(|v| *v == 0.0) {
            return Err(Error::InvalidInput("initial values are all zero".into()));
        }
        Ok(RecurrenceSpec { name: name.into(), coefficients, limits, initial })
    }

    /// Constant coefficients `P_i(t) = a_i`.
    pub fn constant(name: impl Into<String>, a: Vec<f64>, initial: Vec<f64>) -> Result<Self> {
        let coefficients = a.iter().map(|&v| Box::new(move |_| v) as CoefficientFn).collect();
        Self::new(name, coefficients, a, initial)
    }

    /// `f(t+2) = f(t+1) + f(t)`, `f(0) = f(1) = 1`.
    pub fn fibonacci() -> Self {
        Self::constant("fibonacci", vec![-1.0, -1.0], vec![1.0, 1.0]).expect("valid preset")
    }

    /// The Narayana three-term recurrence at a fixed `x`, with
    /// `f(t) = N_{t+1}(x)`.
    pub fn narayana(x: f64) -> Result<Self> {
        let sq = (x - 1.0) * (x - 1.0);
        let p0: CoefficientFn = Box::new(move |t| (t as f64 + 1.0) / (t as f64 + 4.0) * sq);
        let p1: CoefficientFn = Box::new(move |t| -(2.0 * t as f64 + 5.0) / (t as f64 + 4.0) * (x + 1.0));
        let limits = limit_characteristic(x).to_vec();
        Self::new(format!("narayana(x={x})"), vec![p0, p1], limits, vec![x, x * x + x])
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficient(&self, i: usize, t: usize) -> f64 {
        (self.coefficients[i])(t)
    }
}

/// Limit verdict of the ratio engine.
#[derive(Debug, Clone, PartialEq)]
pub enum LimitVerdict {
    /// `estimate` is closest to characteristic root `root_index`.
    LimitClaim { estimate: f64, root_index: usize, root: ComplexValue, distance: f64 },
    /// Two characteristic roots share a modulus, so no limit is claimed.
    NoLimitClaim { moduli: (f64, f64) },
}

#[derive(Debug, Clone, PartialEq)]
pub struct PoincareResult {
    /// `f(t+1) / f(t)` for `t = 0..t_max`; `NaN` where `f(t) = 0` (only
    /// possible without a limit claim).
    pub ratios: Vec<f64>,
    pub last_ratio: f64,
    pub extrapolated: bool,
    pub characteristic_roots: Vec<ComplexValue>,
    pub verdict: LimitVerdict,
}

/// Ratios whose last step is below this relative size are taken as
/// converged.
const CONVERGED_RTOL: f64 = 4.0 * f64::EPSILON;
/// Successive differences shrinking by at least this factor count as
/// geometric convergence.
const GEOMETRIC_RATE: f64 = 0.9;
/// Number of trailing ratios used for extrapolation in `1/t`.
const EXTRAPOLATION_POINTS: usize = 5;

fn neville_at_zero_f64(h: &[f64], y: &[f64]) -> f64 {
    let mut level = y.to_vec();
    for k in 1..h.len() {
        level = (0..h.len() - k)
            .map(|i| (h[i] * level[i + 1] - h[i + k] * level[i]) / (h[i] - h[i + k]))
            .collect();
    }
    level[0]
}

/// Limit estimate from a ratio sequence: the last value once it has
/// settled, Aitken's delta-squared under geometric convergence, otherwise
/// polynomial extrapolation in `1/t`.
fn limit_estimate(ratios: &[f64]) -> (f64, bool) {
    let n = ratios.len();
    let last = ratios[n - 1];
    if n < 3 || (ratios[n - 1] - ratios[n - 2]).abs() <= CONVERGED_RTOL * last.abs() {
        return (last, false);
    }
    let d1 = ratios[n - 1] - ratios[n - 2];
    let d0 = ratios[n - 2] - ratios[n - 3];
    if d0 != 0.0 && (d1 / d0).abs() <= GEOMETRIC_RATE {
        return (last - d1 * d1 / (d1 - d0), true);
    }
    if n < EXTRAPOLATION_POINTS {
        return (last, false);
    }
    let idx: Vec<usize> = (n - EXTRAPOLATION_POINTS..n).collect();
    let h: Vec<f64> = idx.iter().map(|&i| 1.0 / (i as f64 + 1.0)).collect();
    let y: Vec<f64> = idx.iter().map(|&i| ratios[i]).collect();
    (neville_at_zero_f64(&h, &y), true)
}

/// Iterates the recurrence and tracks `f(t+1)/f(t)` for `t < t_max`.
pub fn poincare_ratio(spec: &RecurrenceSpec, t_max: usize) -> Result<PoincareResult> {
    let k = spec.order();
    if t_max < k {
        return Err(Error::InvalidInput(format!("t_max must be at least the order {k}")));
    }
    let roots = characteristic_roots(&spec.limits);
    let equimodular = equimodular_pair(&roots);
    // a vanishing f(t) is an error only when a limit could be claimed
    let ratio = |num: f64, den: f64, t: usize| -> Result<f64> {
        match (den == 0.0, equimodular.is_some()) {
            (false, _) => Ok(num / den),
            (true, true) => Ok(f64::NAN),
            (true, false) => Err(Error::RatioPole(t)),
        }
    };
    let mut window = spec.initial.clone();
    let mut ratios = Vec::with_capacity(t_max);
    for t in 0..k.min(t_max).saturating_sub(1) {
        ratios.push(ratio(window[t + 1], window[t], t)?);
    }
    // window holds f(t), ..., f(t+k-1) up to a common positive scale
    let mut t = 0;
    while ratios.len() < t_max {
        let next = -(0..k).map(|i| spec.coefficient(i, t) * window[i]).sum::<f64>();
        ratios.push(ratio(next, window[k - 1], t + k - 1)?);
        window.remove(0);
        window.push(next);
        let scale = window.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if scale > 1e100 || (scale < 1e-100 && scale > 0.0) {
            window.iter_mut().for_each(|v| *v /= scale);
        }
        t += 1;
    }
    let last_ratio = *ratios.last().expect("t_max >= 1");
    let (estimate, extrapolated) = limit_estimate(&ratios);
    let verdict = match equimodular {
        Some((i, j)) => LimitVerdict::NoLimitClaim { moduli: (roots[i].norm(), roots[j].norm()) },
        None => {
            let (root_index, root) = roots
                .iter()
                .enumerate()
                .min_by(|a, b| {
                    (a.1 - estimate).norm().total_cmp(&(b.1 - estimate).norm())
                })
                .map(|(i, r)| (i, *r))
                .ok_or_else(|| Error::InvalidInput("no characteristic roots".into()))?;
            LimitVerdict::LimitClaim { estimate, root_index, root, distance: (root - estimate).norm() }
        }
    };
    Ok(PoincareResult { ratios, last_ratio, extrapolated, characteristic_roots: roots, verdict })
}

/// Constant-coefficient recurrence in exact arithmetic:
/// `f(t+k) + a_{k-1} f(t+k-1) + ... + a_0 f(t) = 0`. Returns
/// `f(t+1)/f(t)` for `t < t_max`.
pub fn poincare_ratio_exact(a: &[Rational], initial: &[Rational], t_max: usize) -> Result<Vec<Rational>> {
    let k = a.len();
    if k == 0 || initial.len() != k {
        return Err(Error::InvalidInput("order and initial values must match and be positive".into()));
    }
    if initial.iter().all(Zero::is_zero) {
        return Err(Error::InvalidInput("initial values are all zero".into()));
    }
    let mut f = initial.to_vec();
    while f.len() < t_max + 1 {
        let t = f.len() - k;
        let next = -(0..k).fold(Rational::zero(), |acc, i| acc + &a[i] * &f[t + i]);
        f.push(next);
    }
    (0..t_max)
        .map(|t| {
            if f[t].is_zero() {
                Err(Error::RatioPole(t))
            } else {
                Ok(&f[t + 1] / &f[t])
            }
        })
        .collect()
}

/// `f64` view of an exact ratio sequence.
pub fn ratios_to_f64(r: &[Rational]) -> Vec<f64> {
    r.iter().map(|v| v.to_f64().unwrap_or(f64::NAN)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{int, rat};

    #[test]
    fn closed_forms() {
        assert!((density_rho(-1.0).unwrap() - 1.0 / (2.0 * PI)).abs() < 1e-15);
        assert!((cdf_kappa(-1.0).unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(cdf_kappa(0.0).unwrap(), 1.0);
        assert!(cdf_kappa(-1e30).unwrap() < 1e-14);
        assert!(density_rho(0.0).is_err());
        assert!(cdf_kappa(0.5).is_err());
    }

    #[test]
    fn ks_on_small_samples() {
        let f = empirical_cdf(&[-1.0]).unwrap();
        assert!((ks_distance(&f, |x| cdf_kappa(x).unwrap()) - 0.5).abs() < 1e-15);
        let f = empirical_cdf(&[0.0, -2.0, -2.0]).unwrap();
        assert_eq!(f.eval(-2.0), 2.0 / 3.0);
        assert_eq!(f.eval_below(-2.0), 0.0);
        assert!(empirical_cdf(&[]).is_err());
    }

    #[test]
    fn limits_and_branch() {
        let one = Complex64::new(1.0, 0.0);
        assert!((psi_limit(one).unwrap() - 4.0).norm() < 1e-15);
        assert!((theta_limit(one).unwrap() - 0.5).norm() < 1e-15);
        assert!(psi_limit(Complex64::new(-1.0, 0.0)).is_err());
        assert!(theta_limit(Complex64::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn exact_quotient_at_one() {
        for n in 1..=20usize {
            let expected = rat(2 * (2 * n as i64 + 1), n as i64 + 2);
            assert_eq!(psi_n_exact(n, &int(1)).unwrap(), expected);
        }
        assert!(matches!(psi_n_exact(3, &int(0)), Err(Error::PoleError(_))));
    }

    #[test]
    fn cauchy_examples() {
        let two = Complex64::new(2.0, 0.0);
        let p = RationalPoly::from_i64s(&[-1, 0, 1]);
        assert!((cauchy_transform(&p, two).unwrap() - 2.0 / 3.0).norm() < 1e-15);
        let x = RationalPoly::x();
        assert!((cauchy_transform(&x, Complex64::new(5.0, 0.0)).unwrap() - 0.2).norm() < 1e-15);
        assert!(matches!(cauchy_transform(&p, Complex64::new(1.0, 0.0)), Err(Error::PoleError(_))));
    }

    #[test]
    fn boundary_density() {
        let r = plemelj_density(-1.0, 1e-6).unwrap();
        assert!((r - 1.0 / (2.0 * PI)).abs() < 1e-4);
        let r = plemelj_density(-4.0, 1e-6).unwrap();
        assert!((r - 1.0 / (10.0 * PI)).abs() < 1e-4);
    }

    #[test]
    fn characteristic_examples() {
        let mut r = characteristic_roots(&limit_characteristic(1.0));
        r.sort_by(|a, b| a.re.total_cmp(&b.re));
        assert!(r[0].norm() < 1e-15 && (r[1] - 4.0).norm() < 1e-15);
        assert!(equimodular_check(-1.0));
        assert!(!equimodular_check(1.0));
        let cubic = characteristic_roots(&[-6.0, 11.0, -6.0]);
        let mut re: Vec<f64> = cubic.iter().map(|z| z.re).collect();
        re.sort_by(f64::total_cmp);
        for (a, b) in re.iter().zip([1.0, 2.0, 3.0]) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn fibonacci_ratio() {
        let res = poincare_ratio(&RecurrenceSpec::fibonacci(), 50).unwrap();
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        match res.verdict {
            LimitVerdict::LimitClaim { estimate, root, .. } => {
                assert!((estimate - golden).abs() < 1e-10);
                assert!((root.re - golden).abs() < 1e-12);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(!res.extrapolated);
    }

    #[test]
    fn narayana_ratio() {
        let res = poincare_ratio(&RecurrenceSpec::narayana(2.0).unwrap(), 60).unwrap();
        let target = (2f64.sqrt() + 1.0).powi(2);
        match res.verdict {
            LimitVerdict::LimitClaim { estimate, root, .. } => {
                assert!((estimate - target).abs() < 1e-3);
                assert!((root.re - target).abs() < 1e-12);
            }
            other => panic!("unexpected {other:?}"),
        }
        let res = poincare_ratio(&RecurrenceSpec::narayana(-1.0).unwrap(), 60).unwrap();
        assert!(matches!(res.verdict, LimitVerdict::NoLimitClaim { .. }));
        assert_eq!(res.ratios.len(), 60);
    }

    #[test]
    fn exact_mode_selects_the_first_nonvanishing_term() {
        // roots 3 and 1/2, f(t) = (1/2)^t
        let a = [rat(3, 2), rat(-7, 2)];
        let r = poincare_ratio_exact(&a, &[int(1), rat(1, 2)], 40).unwrap();
        assert!(r.iter().all(|v| *v == rat(1, 2)));
        let r = poincare_ratio_exact(&a, &[int(1), int(1)], 40).unwrap();
        assert!((r.last().unwrap().to_f64().unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn ratio_pole() {
        let spec = RecurrenceSpec::constant("zero-start", vec![2.0, -3.0], vec![0.0, 1.0]).unwrap();
        assert_eq!(poincare_ratio(&spec, 5), Err(Error::RatioPole(0)));
    }
}
