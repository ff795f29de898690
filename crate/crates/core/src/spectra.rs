//! Eigenvalues and eigenpolynomials of `Phi_n`, the polynomials `Q_{j,n}`,
//! an independent linear-system route to `Q_{j,n}`, and the `n -> infinity`
//! limit compared against the Narayana polynomials.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::css::build_phi;
use crate::error::{Error, Result};
use crate::exactpoly::{big, binomial, int, RationalMatrix, RationalPoly, Rational, Sign};
use crate::narayana::narayana_number;

/// `lambda_{j,n} = n^{j-1} / ((n-1)(n-2)...(n-j+1))` for `j = 1..n-1`.
pub fn eigenvalues_closed_form(n: usize) -> Result<Vec<Rational>> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("eigenvalues need n >= 3, got {n}")));
    }
    let mut out = Vec::with_capacity(n - 1);
    let mut lambda = Rational::one();
    out.push(lambda.clone());
    for j in 2..n {
        lambda *= Rational::new(BigInt::from(n), BigInt::from(n - j + 1));
        out.push(lambda.clone());
    }
    Ok(out)
}

/// The eigenpolynomial of `Phi_n` for `lambda_{j,n}`.
///
/// A vector `v` in `ker(A - lambda I)` is read as `V(x) = v_1 x^{n-2} + ... +
/// v_{n-1}`; the eigenpolynomial is `(x+1) V(x)` made monic. For `j = 1` the
/// result is `(x+1)^{n-1}`, checked to be a fixed point of `Phi_n`.
pub fn eigenpolynomial(n: usize, j: usize) -> Result<RationalPoly> {
    let phi = build_phi(n)?;
    eigenpolynomial_with(&phi, n, j)
}

fn eigenpolynomial_with(phi: &crate::css::AffineMapQ, n: usize, j: usize) -> Result<RationalPoly> {
    if j == 0 || j >= n {
        return Err(Error::InvalidIndex(format!("eigenpolynomial index {j} outside 1..{n}")));
    }
    let one_plus_x = RationalPoly::linear(Rational::one());
    if j == 1 {
        let fixed = one_plus_x.pow(n - 1);
        let c: Vec<Rational> = fixed.coeffs().iter().rev().skip(1).cloned().collect();
        if phi.apply(&c)? != c {
            return Err(Error::SpectrumViolation(format!("(x+1)^{} is not fixed by Phi_{n}", n - 1)));
        }
        return Ok(fixed);
    }
    let lambda = &eigenvalues_closed_form(n)?[j - 1];
    let kernel = phi.linear.shift_diagonal(lambda).kernel();
    if kernel.len() != 1 {
        return Err(Error::SpectrumViolation(format!(
            "kernel of A - lambda_{{{j},{n}}} I has dimension {}",
            kernel.len()
        )));
    }
    let v = &kernel[0];
    let direction = RationalPoly::new(v.iter().rev().cloned().collect());
    if direction.degree() != Some(n - 2) {
        return Err(Error::SpectrumViolation(format!(
            "eigenvector for lambda_{{{j},{n}}} has vanishing leading entry"
        )));
    }
    let poly = (&one_plus_x * &direction).monic();
    if !poly.eval(&int(-1)).is_zero() || !poly.eval(&Rational::zero()).is_zero() {
        return Err(Error::SpectrumViolation(format!(
            "eigenpolynomial for lambda_{{{j},{n}}} must vanish at -1 and 0"
        )));
    }
    Ok(poly)
}

fn q_from_eigenpolynomial(eig: &RationalPoly, n: usize, j: usize) -> Result<RationalPoly> {
    let divisor = &RationalPoly::x() * &RationalPoly::linear_power(Rational::one(), n - j - 2);
    let q = eig.exact_divide(&divisor).map_err(|_| {
        Error::StructureViolation(format!("x(x+1)^{} does not divide the eigenpolynomial", n - j - 2))
    })?;
    let constant = int(if j % 2 == 0 { 1 } else { -1 });
    if q.degree() != Some(j) || !q.is_monic() || q.coeff(0) != constant || q.eval(&int(-1)).is_zero() {
        return Err(Error::StructureViolation(format!("Q_{{{j},{n}}} = {q} has the wrong shape")));
    }
    Ok(q)
}

/// `Q_{j,n}`: the eigenpolynomial for `lambda_{j+2,n}` divided by
/// `x(x+1)^{n-j-2}`. Monic of degree `j` with constant term `(-1)^j`.
pub fn extract_q(n: usize, j: usize) -> Result<RationalPoly> {
    check_q_range(n, j)?;
    q_from_eigenpolynomial(&eigenpolynomial(n, j + 2)?, n, j)
}

fn check_q_range(n: usize, j: usize) -> Result<()> {
    if n < 4 || j == 0 || j + 3 > n {
        return Err(Error::InvalidIndex(format!("Q_{{{j},{n}}} needs n >= 4 and 1 <= j <= n-3")));
    }
    Ok(())
}

/// One equation `L_k = R_k` of the linear system for the coefficients of
/// `Q_{j,n} = x^j + q_1 x^{j-1} + ... + q_j`. Both sides are linear forms in
/// `q_0, ..., q_j`; `left[nu]` and `right[nu]` are the weights of `q_nu`.
#[derive(Debug, Clone, PartialEq)]
pub struct SigmaEquation {
    pub k: usize,
    pub left: Vec<Rational>,
    pub right: Vec<Rational>,
}

impl SigmaEquation {
    pub fn left_value(&self, q: &[Rational]) -> Rational {
        dot(&self.left, q)
    }

    pub fn right_value(&self, q: &[Rational]) -> Rational {
        dot(&self.right, q)
    }
}

fn dot(w: &[Rational], q: &[Rational]) -> Rational {
    w.iter().zip(q).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
}

/// `(n-1)(n-2)...(n-j)`, with `l_0 = 1`.
pub fn l_normalizer(n: usize, j: usize) -> BigInt {
    (1..=j).fold(BigInt::one(), |acc, i| acc * (n as i64 - i as i64))
}

/// Equation `k` (`1 <= k <= n-1`) of the system for `Q_{j,n}`.
pub fn sigma_equation(n: usize, j: usize, k: usize) -> Result<SigmaEquation> {
    check_q_range(n, j)?;
    if k == 0 || k >= n {
        return Err(Error::InvalidIndex(format!("equation index {k} outside 1..{n}")));
    }
    let (ni, ji, ki) = (n as i64, j as i64, k as i64);
    let l = big(l_normalizer(n, j + 1));
    let mut left = vec![Rational::zero(); j + 1];
    for i in 0..=ji {
        left[(ji - i) as usize] += &l * big(binomial(ni - ji - 2, ki - 1 - i));
    }
    let u = binomial(ni - 1, ki - 1);
    let v = binomial(ni - 1, ki);
    let denom = num_traits::pow(binomial(ni, ki), j + 1);
    let front = num_traits::pow(BigInt::from(n), j + 1) * &u * &v;
    let right = (0..=j)
        .map(|nu| {
            let num = &front * num_traits::pow(u.clone(), j - nu) * num_traits::pow(v.clone(), nu);
            Rational::new(num, denom.clone())
        })
        .collect();
    Ok(SigmaEquation { k, left, right })
}

/// `Q_{j,n}` from the linear system alone, without building `Phi_n`.
///
/// The unknowns `q_1..q_{j-1}` are solved from equations `k = 1..j-1`
/// (greedy row selection over all `k` if that block is singular), and every
/// equation `k = 1..n-1` is then checked exactly.
pub fn sigma_system_solve(n: usize, j: usize) -> Result<RationalPoly> {
    check_q_range(n, j)?;
    let eqs = (1..n).map(|k| sigma_equation(n, j, k)).collect::<Result<Vec<_>>>()?;
    let sign = int(if j % 2 == 0 { 1 } else { -1 });
    // row: coefficients on q_1..q_{j-1}, rhs
    let rows: Vec<(Vec<Rational>, Rational)> = eqs
        .iter()
        .map(|e| {
            let d: Vec<Rational> = e.left.iter().zip(&e.right).map(|(a, b)| a - b).collect();
            let constant = &d[0] + &d[j] * &sign;
            (d[1..j].to_vec(), -constant)
        })
        .collect();
    let m = j - 1;
    let unknowns = if m == 0 {
        Vec::new()
    } else {
        let first: Vec<usize> = (0..m).collect();
        match solve_rows(&rows, &first) {
            Ok(sol) => sol,
            Err(Error::SingularSystem) => solve_rows(&rows, &greedy_rows(&rows, m)?)?,
            Err(e) => return Err(e),
        }
    };
    let mut q = vec![Rational::one()];
    q.extend(unknowns);
    q.push(sign);
    for e in &eqs {
        if e.left_value(&q) != e.right_value(&q) {
            return Err(Error::SigmaInconsistency(format!("equation k = {} fails for n = {n}, j = {j}", e.k)));
        }
    }
    Ok(RationalPoly::new(q.into_iter().rev().collect()))
}

fn solve_rows(rows: &[(Vec<Rational>, Rational)], pick: &[usize]) -> Result<Vec<Rational>> {
    let m = pick.len();
    let a = RationalMatrix::from_fn(m, m, |r, c| rows[pick[r]].0[c].clone());
    let rhs: Vec<Rational> = pick.iter().map(|&r| rows[r].1.clone()).collect();
    a.solve(&rhs)
}

fn greedy_rows(rows: &[(Vec<Rational>, Rational)], m: usize) -> Result<Vec<usize>> {
    let mut chosen: Vec<usize> = Vec::new();
    for r in 0..rows.len() {
        let mut trial = chosen.clone();
        trial.push(r);
        let mat = RationalMatrix::from_fn(trial.len(), m, |i, c| rows[trial[i]].0[c].clone());
        if mat.rank() == trial.len() {
            chosen = trial;
            if chosen.len() == m {
                return Ok(chosen);
            }
        }
    }
    Err(Error::SingularSystem)
}

/// All spectral data of `Phi_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub n: usize,
    pub eigenvalues: Vec<Rational>,
    pub eigenpolys: Vec<RationalPoly>,
    /// `Q_{1,n}, ..., Q_{n-3,n}`.
    pub q_polys: Vec<RationalPoly>,
}

pub fn spectrum_report(n: usize) -> Result<SpectrumReport> {
    let eigenvalues = eigenvalues_closed_form(n)?;
    let phi = build_phi(n)?;
    let eigenpolys = (1..n).map(|j| eigenpolynomial_with(&phi, n, j)).collect::<Result<Vec<_>>>()?;
    let q_polys = (1..=n.saturating_sub(3))
        .map(|j| q_from_eigenpolynomial(&eigenpolys[j + 1], n, j))
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectrumReport { n, eigenvalues, eigenpolys, q_polys })
}

/// Memoized [`SpectrumReport`]s keyed by `n`.
#[derive(Debug, Default)]
pub struct SpectrumCache {
    reports: RwLock<HashMap<usize, Arc<SpectrumReport>>>,
}

impl SpectrumCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, n: usize) -> Result<Arc<SpectrumReport>> {
        if let Some(r) = self.reports.read().expect("cache lock").get(&n) {
            return Ok(Arc::clone(r));
        }
        let report = Arc::new(spectrum_report(n)?);
        let mut map = self.reports.write().expect("cache lock");
        Ok(Arc::clone(map.entry(n).or_insert(report)))
    }
}

/// Extrapolated `n -> infinity` limit of one coefficient `q_nu(n)` of
/// `Q_{j,n}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionEstimate {
    pub j: usize,
    pub nu: usize,
    pub samples: Vec<(usize, Rational)>,
    pub extrapolated_q0: f64,
    pub error_bound: f64,
}

fn check_samples(j: usize, ns: &[usize]) -> Result<()> {
    if ns.len() < 3 {
        return Err(Error::InvalidInput("extrapolation needs at least 3 values of n".into()));
    }
    if ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidInput("values of n must be strictly increasing".into()));
    }
    if ns[0] < j + 3 {
        return Err(Error::InvalidInput(format!("every n must be at least {}", j + 3)));
    }
    Ok(())
}

/// Neville's scheme at `h = 0` for samples `(h_i, y_i)`. Returns the final
/// value and the change from the best value one level below.
fn neville_at_zero(h: &[Rational], y: &[Rational]) -> (Rational, Rational) {
    let mut level: Vec<Rational> = y.to_vec();
    let mut previous = level.last().cloned().unwrap_or_else(Rational::zero);
    for k in 1..h.len() {
        previous = level.last().cloned().expect("non-empty");
        level = (0..h.len() - k)
            .map(|i| {
                let (h0, hk) = (&h[i], &h[i + k]);
                (h0 * &level[i + 1] - hk * &level[i]) / (h0 - hk)
            })
            .collect();
    }
    let value = level[0].clone();
    let delta = (&value - &previous).abs();
    (value, delta)
}

fn sample_qs(j: usize, ns: &[usize]) -> Result<Vec<RationalPoly>> {
    ns.iter().map(|&n| sigma_system_solve(n, j)).collect()
}

fn h_of(n: usize) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(n - 1))
}

/// Richardson extrapolation in `h = 1/(n-1)` of every coefficient of
/// `Q_{j,n}`. Entry `nu` estimates the coefficient of `x^{j-nu}` of the
/// limit polynomial.
pub fn richardson_limit(j: usize, ns: &[usize]) -> Result<Vec<ExpansionEstimate>> {
    check_samples(j, ns)?;
    let qs = sample_qs(j, ns)?;
    let h: Vec<Rational> = ns.iter().map(|&n| h_of(n)).collect();
    Ok((0..=j)
        .map(|nu| {
            let y: Vec<Rational> = qs.iter().map(|q| q.coeff(j - nu)).collect();
            let (value, delta) = neville_at_zero(&h, &y);
            ExpansionEstimate {
                j,
                nu,
                samples: ns.iter().cloned().zip(y).collect(),
                extrapolated_q0: value.to_f64().unwrap_or(f64::NAN),
                error_bound: delta.to_f64().unwrap_or(f64::INFINITY),
            }
        })
        .collect())
}

/// Leading terms `q_nu^{(0)}, q_nu^{(1)}, ...` of the expansion of `q_nu(n)`
/// in powers of `1/(n-1)`, estimated by the exact polynomial through the
/// samples. One term per sample.
pub fn expansion_terms(j: usize, nu: usize, ns: &[usize]) -> Result<Vec<f64>> {
    check_samples(j, ns)?;
    if nu > j {
        return Err(Error::InvalidIndex(format!("coefficient {nu} of a degree-{j} polynomial")));
    }
    let qs = sample_qs(j, ns)?;
    let points: Vec<(Rational, Rational)> =
        ns.iter().zip(&qs).map(|(&n, q)| (h_of(n), q.coeff(j - nu))).collect();
    let fit = RationalPoly::interpolate(&points)?;
    Ok((0..ns.len()).map(|i| fit.coeff(i).to_f64().unwrap_or(f64::NAN)).collect())
}

/// `(-1)^{j-1} x Q(-x)`, exactly.
pub fn m_transform(q: &RationalPoly, j: usize) -> Result<RationalPoly> {
    if q.degree() != Some(j.saturating_sub(1)) || j == 0 {
        return Err(Error::InvalidInput(format!("m_transform expects degree {} for j = {j}", j.saturating_sub(1))));
    }
    let mut coeffs = vec![Rational::zero()];
    for (k, c) in q.coeffs().iter().enumerate() {
        let flip = (k + j - 1) % 2 == 1;
        coeffs.push(if flip { -c.clone() } else { c.clone() });
    }
    Ok(RationalPoly::new(coeffs))
}

/// `(-1)^{j-1} x Q(-x)` for floating coefficients, constant term first.
pub fn m_transform_f64(q: &[f64], j: usize) -> Vec<f64> {
    let mut out = vec![0.0];
    out.extend(q.iter().enumerate().map(|(k, &c)| if (k + j - 1) % 2 == 1 { -c } else { c }));
    out
}

/// One coefficient of the `M_j` versus `N_j` comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientCheck {
    /// Power of `x`.
    pub k: usize,
    pub estimate: f64,
    pub narayana: u64,
    pub error_bound: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MjNjReport {
    pub j: usize,
    pub ns: Vec<usize>,
    pub coefficients: Vec<CoefficientCheck>,
    pub max_deviation: f64,
    pub tol: f64,
}

/// Extrapolates `Q_{j-1,n}`, applies [`m_transform`] and compares with the
/// coefficients of `N_j`. `j = 2` is exact since `Q_{1,n} = x - 1`.
pub fn verify_mjnj(j: usize, ns: &[usize], tol: f64) -> Result<MjNjReport> {
    if j < 2 {
        return Err(Error::InvalidInput(format!("M_j is defined for j >= 2, got {j}")));
    }
    let narayana = |k: usize| -> Result<u64> {
        narayana_number(j, k)?
            .to_u64()
            .ok_or_else(|| Error::InvalidInput(format!("N({j},{k}) exceeds u64")))
    };
    let (limit, bounds): (Vec<f64>, Vec<f64>) = if j == 2 {
        check_samples(1, ns)?;
        (vec![-1.0, 1.0], vec![0.0, 0.0])
    } else {
        let est = richardson_limit(j - 1, ns)?;
        // est[nu] is the coefficient of x^{j-1-nu}; reorder to constant-first
        est.iter().rev().map(|e| (e.extrapolated_q0, e.error_bound)).unzip()
    };
    let m = m_transform_f64(&limit, j);
    let mut coefficients = Vec::with_capacity(j);
    let mut max_deviation: f64 = 0.0;
    for k in 1..=j {
        let n_k = narayana(k)?;
        let dev = (m[k] - n_k as f64).abs();
        max_deviation = max_deviation.max(dev);
        coefficients.push(CoefficientCheck { k, estimate: m[k], narayana: n_k, error_bound: bounds[k - 1] });
    }
    if max_deviation.is_nan() || max_deviation > tol {
        return Err(Error::TheoremCheckFailed(format!(
            "M_{j} deviates from N_{j} by {max_deviation:e} > {tol:e}"
        )));
    }
    Ok(MjNjReport { j, ns: ns.to_vec(), coefficients, max_deviation, tol })
}

/// Sign `(-1)^j` expected of the reciprocal of `Q_{j,n}`.
pub fn expected_reciprocal_sign(j: usize) -> Sign {
    Sign::parity(j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    #[test]
    fn closed_form_eigenvalues() {
        assert_eq!(eigenvalues_closed_form(3).unwrap(), vec![int(1), rat(3, 2)]);
        assert_eq!(eigenvalues_closed_form(4).unwrap(), vec![int(1), rat(4, 3), rat(8, 3)]);
        assert_eq!(
            eigenvalues_closed_form(5).unwrap(),
            vec![int(1), rat(5, 4), rat(25, 12), rat(125, 24)]
        );
        assert!(eigenvalues_closed_form(2).is_err());
    }

    #[test]
    fn small_eigenpolynomials() {
        assert_eq!(eigenpolynomial(3, 1).unwrap(), RationalPoly::from_i64s(&[1, 2, 1]));
        assert_eq!(eigenpolynomial(3, 2).unwrap(), RationalPoly::from_i64s(&[0, 1, 1]));
        for n in 3..=8 {
            let expected = &RationalPoly::x() * &RationalPoly::linear_power(int(1), n - 2);
            assert_eq!(eigenpolynomial(n, 2).unwrap(), expected);
        }
    }

    #[test]
    fn known_q_polynomials() {
        for n in 4..=9 {
            assert_eq!(extract_q(n, 1).unwrap(), RationalPoly::from_i64s(&[-1, 1]));
        }
        let q25 = RationalPoly::new(vec![int(1), rat(-11, 4), int(1)]);
        assert_eq!(extract_q(5, 2).unwrap(), q25);
        assert_eq!(extract_q(6, 3).unwrap(), RationalPoly::from_i64s(&[-1, 5, -5, 1]));
        assert!(extract_q(5, 3).is_err());
    }

    #[test]
    fn sigma_matches_kernel_route() {
        for n in 4..=8 {
            for j in 1..=n - 3 {
                assert_eq!(sigma_system_solve(n, j).unwrap(), extract_q(n, j).unwrap(), "n={n} j={j}");
            }
        }
    }

    #[test]
    fn first_equation_is_the_leading_balance() {
        for (n, j) in [(7, 2), (9, 4), (12, 5)] {
            let eq = sigma_equation(n, j, 1).unwrap();
            let q = sigma_system_solve(n, j).unwrap();
            let qv: Vec<Rational> = q.coeffs().iter().rev().cloned().collect();
            let expected = big(l_normalizer(n, j + 1)) * int(if j % 2 == 0 { 1 } else { -1 });
            assert_eq!(eq.left_value(&qv), expected);
            assert_eq!(eq.right_value(&qv), expected);
        }
    }

    #[test]
    fn m_transform_examples() {
        let n2 = m_transform(&RationalPoly::from_i64s(&[-1, 1]), 2).unwrap();
        assert_eq!(n2, RationalPoly::from_i64s(&[0, 1, 1]));
        let n3 = m_transform(&RationalPoly::from_i64s(&[1, -3, 1]), 3).unwrap();
        assert_eq!(n3, RationalPoly::from_i64s(&[0, 1, 3, 1]));
        let n4 = m_transform(&RationalPoly::from_i64s(&[-1, 6, -6, 1]), 4).unwrap();
        assert_eq!(n4, RationalPoly::from_i64s(&[0, 1, 6, 6, 1]));
        assert_eq!(m_transform_f64(&[-1.0, 1.0], 2), vec![0.0, 1.0, 1.0]);
    }

    #[test]
    fn neville_is_exact_on_polynomials() {
        let h: Vec<Rational> = [1, 2, 3].iter().map(|&v| int(v)).collect();
        let y: Vec<Rational> = h.iter().map(|t| int(5) - int(2) * t + t * t).collect();
        assert_eq!(neville_at_zero(&h, &y).0, int(5));
    }

    #[test]
    fn cache_returns_same_report() {
        let cache = SpectrumCache::new();
        let a = cache.get(5).unwrap();
        let b = cache.get(5).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(a.q_polys.len(), 2);
    }
}
