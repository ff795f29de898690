//! Schur-Szego composition, composition factors `K_a`, and the affine map
//! `Phi_n` that sends a monic polynomial vanishing at `-1` to the elementary
//! symmetric functions of its factor parameters.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{big, binomial, RationalMatrix, RationalPoly, Rational};

fn check_fits(p: &RationalPoly, m: usize) -> Result<()> {
    match p.degree() {
        Some(d) if d > m => Err(Error::DegreeOverflow { degree: d, m }),
        _ => Ok(()),
    }
}

/// `P *_m Q`: coefficient `j` of the result is `p_j q_j / C(m, j)`.
///
/// Polynomials of degree below `m` are padded with zero leading
/// coefficients.
pub fn compose(p: &RationalPoly, q: &RationalPoly, m: usize) -> Result<RationalPoly> {
    compose_many(&[p.clone(), q.clone()], m)
}

/// Composition of `s >= 1` polynomials at degree `m`:
/// coefficient `j` is `p_{1,j} ... p_{s,j} / C(m, j)^(s-1)`.
pub fn compose_many(ps: &[RationalPoly], m: usize) -> Result<RationalPoly> {
    let (first, rest) = ps
        .split_first()
        .ok_or_else(|| Error::InvalidInput("composition of an empty list".into()))?;
    for p in ps {
        check_fits(p, m)?;
    }
    let coeffs = (0..=m)
        .map(|j| {
            let c = big(binomial(m as i64, j as i64));
            rest.iter()
                .fold(first.coeff(j), |acc, p| acc * p.coeff(j) / &c)
        })
        .collect();
    Ok(RationalPoly::new(coeffs))
}

/// Parameter of a composition factor: a rational `a`, or infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorParam {
    Finite(Rational),
    Infinity,
}

/// The composition factor `K_a = (x+1)^(n-1) (x+a)`, with
/// `K_inf = (x+1)^(n-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionFactor {
    pub a: FactorParam,
    pub n: usize,
}

impl CompositionFactor {
    pub fn new(a: FactorParam, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInput(format!("composition factor needs n >= 2, got {n}")));
        }
        Ok(CompositionFactor { a, n })
    }

    pub fn poly(&self) -> RationalPoly {
        let base = RationalPoly::linear_power(Rational::one(), self.n - 1);
        match &self.a {
            FactorParam::Finite(a) => &base * &RationalPoly::linear(a.clone()),
            FactorParam::Infinity => base,
        }
    }
}

/// Expanded `K_a` for degree parameter `n >= 2`.
pub fn composition_factor(a: FactorParam, n: usize) -> Result<RationalPoly> {
    Ok(CompositionFactor::new(a, n)?.poly())
}

/// `Phi_n` as an explicit affine map `c -> A c + b` on the non-leading
/// coefficients `(c_1, ..., c_{n-1})` of `P / (x+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMapQ {
    pub n: usize,
    pub linear: RationalMatrix,
    pub offset: Vec<Rational>,
}

impl AffineMapQ {
    pub fn dim(&self) -> usize {
        self.n - 1
    }

    pub fn apply(&self, c: &[Rational]) -> Result<Vec<Rational>> {
        let lin = self.linear.mul_vec(c)?;
        Ok(lin.into_iter().zip(&self.offset).map(|(a, b)| a + b).collect())
    }
}

/// Coefficients `p_0..p_n` of `(x+1)(x^(n-1) + c_1 x^(n-2) + ... + c_{n-1})`.
fn p_coefficients(c: &[Rational], n: usize) -> Vec<Rational> {
    // cofactor coefficient of x^i is c_{n-1-i}, c_0 = 1
    let cof = |i: isize| -> Rational {
        if i < 0 || i > (n - 1) as isize {
            return Rational::zero();
        }
        let idx = n - 1 - i as usize;
        if idx == 0 {
            Rational::one()
        } else {
            c[idx - 1].clone()
        }
    };
    (0..=n as isize).map(|j| cof(j) + cof(j - 1)).collect()
}

/// Precomputed binomial data for the coefficient identities
/// `p_j C(n,j)^(n-2) = sum_v C(n-1,j-1)^(n-1-v) C(n-1,j)^v sigma_v`.
struct SigmaIdentities {
    n: usize,
    // weights[j][v] = C(n-1,j-1)^(n-1-v) C(n-1,j)^v
    weights: Vec<Vec<Rational>>,
    // scale[j] = C(n,j)^(n-2)
    scale: Vec<Rational>,
    // rows j = 1..n-2, unknowns sigma_1..sigma_{n-2}
    system: Option<RationalMatrix>,
}

impl SigmaIdentities {
    fn new(n: usize) -> Self {
        let ni = n as i64;
        let weights: Vec<Vec<Rational>> = (0..=ni)
            .map(|j| {
                let u = binomial(ni - 1, j - 1);
                let v = binomial(ni - 1, j);
                (0..n as u32)
                    .map(|nu| big(num_traits::pow(u.clone(), n - 1 - nu as usize) * v.pow(nu)))
                    .collect()
            })
            .collect();
        let scale = (0..=ni)
            .map(|j| big(num_traits::pow(binomial(ni, j), n - 2)))
            .collect();
        let system = (n >= 3).then(|| {
            RationalMatrix::from_fn(n - 2, n - 2, |r, col| weights[r + 1][col + 1].clone())
        });
        SigmaIdentities { n, weights, scale, system }
    }

    /// Solves the identities for `j = 0..n-2` and then checks all `j = 0..n`.
    fn sigma(&self, p: &[Rational]) -> Result<Vec<Rational>> {
        let n = self.n;
        let top = p[0].clone(); // j = 0 isolates sigma_{n-1}
        let mut sigma = if let Some(sys) = &self.system {
            let rhs: Vec<Rational> = (1..=n - 2)
                .map(|j| {
                    &p[j] * &self.scale[j] - &self.weights[j][0] - &self.weights[j][n - 1] * &top
                })
                .collect();
            sys.solve(&rhs).map_err(|e| match e {
                Error::SingularSystem => Error::ConstructionBug(format!(
                    "coefficient system for n = {n} is singular"
                )),
                other => other,
            })?
        } else {
            Vec::new()
        };
        sigma.push(top);
        self.check(p, &sigma)?;
        Ok(sigma)
    }

    fn check(&self, p: &[Rational], sigma: &[Rational]) -> Result<()> {
        for (j, w) in self.weights.iter().enumerate().take(self.n + 1) {
            let rhs = sigma
                .iter()
                .enumerate()
                .fold(w[0].clone(), |acc, (i, s)| acc + &w[i + 1] * s);
            if &p[j] * &self.scale[j] != rhs {
                return Err(Error::ConstructionBug(format!(
                    "coefficient identity j = {j} fails for n = {}",
                    self.n
                )));
            }
        }
        Ok(())
    }
}

/// Builds `Phi_n` by solving the coefficient identities at the origin and at
/// each coordinate basis vector of c-space.
pub fn build_phi(n: usize) -> Result<AffineMapQ> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("Phi_n needs n >= 3, got {n}")));
    }
    let ids = SigmaIdentities::new(n);
    let dim = n - 1;
    let origin = vec![Rational::zero(); dim];
    let offset = ids.sigma(&p_coefficients(&origin, n))?;
    let mut linear = RationalMatrix::zeros(dim, dim);
    for col in 0..dim {
        let mut e = origin.clone();
        e[col] = Rational::one();
        let image = ids.sigma(&p_coefficients(&e, n))?;
        for (row, v) in image.into_iter().enumerate() {
            linear.set(row, col, v - &offset[row]);
        }
    }
    Ok(AffineMapQ { n, linear, offset })
}

/// `(sigma_1, ..., sigma_{n-1})` for a monic degree-`n` polynomial with
/// `P(-1) = 0`, i.e. the elementary symmetric functions of the parameters
/// `a_i` in `P = K_{a_1} *_n ... *_n K_{a_{n-1}}`.
pub fn factor_symmetric_functions(p: &RationalPoly, n: usize) -> Result<Vec<Rational>> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("factorization needs n >= 3, got {n}")));
    }
    if p.degree() != Some(n) {
        return Err(Error::InvalidInput(format!("expected degree {n}, got {:?}", p.degree())));
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    if !p.eval(&-Rational::one()).is_zero() {
        return Err(Error::NotInDomain("P(-1) != 0".into()));
    }
    let cof = p.exact_divide(&RationalPoly::linear(Rational::one()))?;
    let c: Vec<Rational> = (1..n).map(|i| cof.coeff(n - 1 - i)).collect();
    let sigma = build_phi(n)?.apply(&c)?;
    let mut full = p.coeffs().to_vec();
    full.resize(n + 1, Rational::zero());
    SigmaIdentities::new(n).check(&full, &sigma)?;
    Ok(sigma)
}

/// The monic polynomial `prod (x + a_i)` whose non-leading coefficients are
/// the given elementary symmetric functions.
pub fn parameter_polynomial(sigma: &[Rational]) -> RationalPoly {
    let d = sigma.len();
    let mut coeffs = vec![Rational::zero(); d + 1];
    coeffs[d] = Rational::one();
    for (i, s) in sigma.iter().enumerate() {
        coeffs[d - 1 - i] = s.clone();
    }
    RationalPoly::new(coeffs)
}

/// Elementary symmetric functions `e_1..e_k` of the given values.
pub fn elementary_symmetric(values: &[Rational]) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); values.len() + 1];
    e[0] = Rational::one();
    for (m, a) in values.iter().enumerate() {
        for i in (1..=m + 1).rev() {
            let prev = e[i - 1].clone();
            e[i] += prev * a;
        }
    }
    e.remove(0);
    e
}
