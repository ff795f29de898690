//! Certified real roots: Sturm chains over the integers, isolation by
//! bisection, refinement, hyperbolicity and interlacing verdicts.

use num_bigint::{BigInt, Sign as BigSign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{big, RationalPoly, Rational};

/// Integer polynomial, constant term first, no trailing zeros.
type IntPoly = Vec<BigInt>;

fn trim(mut p: IntPoly) -> IntPoly {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.is_empty() {
        p.push(BigInt::zero());
    }
    p
}

fn is_zero_poly(p: &[BigInt]) -> bool {
    p.iter().all(Zero::is_zero)
}

fn deg(p: &[BigInt]) -> usize {
    p.len() - 1
}

/// Positive multiple of `p` with coprime integer coefficients.
fn primitive_integer(p: &RationalPoly) -> IntPoly {
    let lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: IntPoly = p.coeffs().iter().map(|c| (c * big(lcm.clone())).to_integer()).collect();
    primitive_part(ints)
}

fn primitive_part(p: IntPoly) -> IntPoly {
    let content = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() || content.is_one() {
        return trim(p);
    }
    trim(p.into_iter().map(|c| c / &content).collect())
}

fn int_to_rational_poly(p: &[BigInt]) -> RationalPoly {
    RationalPoly::from_bigints(p.iter().cloned())
}

fn int_derivative(p: &[BigInt]) -> IntPoly {
    if p.len() == 1 {
        return vec![BigInt::zero()];
    }
    trim(p.iter().enumerate().skip(1).map(|(i, c)| c * i).collect())
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) a mod b`.
fn prem(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let db = deg(b);
    let lb = &b[db];
    let mut r: IntPoly = a.to_vec();
    let mut e = deg(a) as i64 - db as i64 + 1;
    while !is_zero_poly(&r) && deg(&r) >= db {
        let dr = deg(&r);
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &lr * bc;
        }
        r = trim(r);
        e -= 1;
    }
    if e > 0 {
        let f = num_traits::pow(lb.clone(), e as usize);
        for c in r.iter_mut() {
            *c *= &f;
        }
    }
    r
}

/// Remainder sequence of `a`, `b` (`deg a >= deg b`) with every element
/// signed so that it is a positive multiple of minus the remainder of its
/// two predecessors. Each pseudo-remainder is reduced to its primitive part.
fn signed_primitive_prs(a: IntPoly, b: IntPoly) -> Vec<IntPoly> {
    let mut out = vec![a.clone()];
    if is_zero_poly(&b) {
        return out;
    }
    out.push(b.clone());
    // chain elements are eps * (unsigned primitive remainder)
    let (mut prev, mut cur) = (a, b);
    let mut eps_prev = 1i8;
    let mut eps_cur = 1i8;
    while deg(&cur) > 0 {
        let delta = deg(&prev) - deg(&cur);
        let r = prem(&prev, &cur);
        if is_zero_poly(&r) {
            break;
        }
        let next = primitive_part(r);
        // prem = lc^(delta+1) * rem
        let mut eps_next = -eps_prev;
        if cur[deg(&cur)].is_negative() && delta % 2 == 0 {
            eps_next = -eps_next;
        }
        out.push(if eps_next < 0 { next.iter().map(|c| -c).collect() } else { next.clone() });
        prev = cur;
        cur = next;
        eps_prev = eps_cur;
        eps_cur = eps_next;
    }
    out
}

/// Sign of `p(num/den)` for `den > 0`, by homogeneous Horner in integers.
fn sign_at(p: &[BigInt], num: &BigInt, den_pows: &[BigInt]) -> BigSign {
    let d = deg(p);
    let mut acc = p[d].clone();
    for i in (0..d).rev() {
        acc = acc * num + &p[i] * &den_pows[d - i];
    }
    acc.sign()
}

fn den_powers(den: &BigInt, max: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(BigInt::one());
    for i in 0..max {
        let next = &out[i] * den;
        out.push(next);
    }
    out
}

/// Sturm chain `P, P', -rem, ...` kept as integer polynomials.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &RationalPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::InvalidInput("Sturm chain of the zero polynomial".into()));
        }
        let a = primitive_integer(p);
        let b = int_derivative(&a);
        let chain = signed_primitive_prs(a, b);
        Ok(SturmChain { chain })
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Last element: a scalar multiple of `gcd(P, P')`.
    fn tail(&self) -> &[BigInt] {
        self.chain.last().expect("chain is never empty")
    }

    fn base(&self) -> &[BigInt] {
        &self.chain[0]
    }

    /// Number of sign changes along the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &Rational) -> usize {
        let max_deg = deg(self.base());
        let pows = den_powers(x.denom(), max_deg);
        let mut count = 0;
        let mut last = BigSign::NoSign;
        for p in &self.chain {
            let s = sign_at(p, x.numer(), &pows);
            if s == BigSign::NoSign {
                continue;
            }
            if last != BigSign::NoSign && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn sign_of_base(&self, x: &Rational) -> BigSign {
        sign_of(self.base(), x)
    }
}

fn sign_of(p: &[BigInt], x: &Rational) -> BigSign {
    sign_at(p, x.numer(), &den_powers(x.denom(), deg(p)))
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &RationalPoly, lo: &Rational, hi: &Rational) -> Result<usize> {
    if lo >= hi {
        return Err(Error::InvalidInput(format!("empty interval ({lo}, {hi}]")));
    }
    if p.eval(lo).is_zero() || p.eval(hi).is_zero() {
        return Err(Error::EndpointRoot(format!("{p} vanishes at an endpoint of ({lo}, {hi}]")));
    }
    let chain = SturmChain::new(p)?;
    Ok(chain.variations(lo) - chain.variations(hi))
}

/// Power of two strictly above every root modulus: Cauchy's bound
/// `1 + max |c_i / c_d|`, rounded up.
pub fn cauchy_bound(p: &RationalPoly) -> Rational {
    let lead = p.leading().abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    let bound = Rational::one() + max;
    let mut b = Rational::one();
    while b <= bound {
        b *= big(BigInt::from(2));
    }
    b
}

/// Gcd of two polynomials, monic (`1` when coprime, `0` for two zeros).
pub fn poly_gcd(p: &RationalPoly, q: &RationalPoly) -> RationalPoly {
    if p.is_zero() {
        return q.monic_or_zero();
    }
    if q.is_zero() {
        return p.monic_or_zero();
    }
    let (a, b) = if p.degree() >= q.degree() { (p, q) } else { (q, p) };
    let chain = signed_primitive_prs(primitive_integer(a), primitive_integer(b));
    int_to_rational_poly(&primitive_part(chain.last().cloned().expect("non-empty"))).monic()
}

trait MonicOrZero {
    fn monic_or_zero(&self) -> RationalPoly;
}

impl MonicOrZero for RationalPoly {
    fn monic_or_zero(&self) -> RationalPoly {
        if self.is_zero() {
            RationalPoly::zero()
        } else {
            self.monic()
        }
    }
}

/// `P / gcd(P, P')`, monic.
pub fn squarefree_part(p: &RationalPoly) -> Result<RationalPoly> {
    if p.is_zero() {
        return Err(Error::InvalidInput("squarefree part of zero".into()));
    }
    let g = poly_gcd(p, &p.derivative());
    Ok(p.exact_divide(&g)?.monic())
}

/// Yun's decomposition `P = c * f_1 f_2^2 f_3^3 ...`; entry `i` is
/// `f_{i+1}`, monic and squarefree (possibly `1`).
pub fn squarefree_decomposition(p: &RationalPoly) -> Result<Vec<RationalPoly>> {
    if p.is_zero() {
        return Err(Error::InvalidInput("squarefree decomposition of zero".into()));
    }
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let dp = p.derivative();
    let a0 = poly_gcd(p, &dp);
    let mut b = p.exact_divide(&a0)?;
    let mut c = dp.exact_divide(&a0)?;
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    while b.degree() != Some(0) {
        let a = poly_gcd(&b, &d);
        b = b.exact_divide(&a)?;
        c = d.exact_divide(&a)?;
        d = &c - &b.derivative();
        out.push(a);
    }
    Ok(out)
}

/// How an isolating interval was certified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Sign variations of the Sturm chain at `lo` and `hi` differ by one.
    Sturm { lo_variations: usize, hi_variations: usize },
    /// The squarefree part changes sign between `lo` and `hi`, and the
    /// interval lies inside a Sturm-certified one.
    SignChange,
    /// The root is the rational `lo = hi` itself.
    Exact,
}

/// One real root of multiplicity `multiplicity` in `(lo, hi]`, or exactly at
/// `lo` when `lo == hi`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub multiplicity: usize,
    pub certificate: Certificate,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / big(BigInt::from(2))
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// True when the closed hulls do not meet.
    pub fn disjoint_from(&self, other: &RootInterval) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }
}

/// Sorted disjoint isolating intervals for all real roots of a polynomial.
#[derive(Debug, Clone)]
pub struct RootIsolation {
    pub poly: RationalPoly,
    pub intervals: Vec<RootInterval>,
    squarefree: IntPoly,
}

impl RootIsolation {
    /// Number of real roots counted with multiplicity.
    pub fn real_root_count(&self) -> usize {
        self.intervals.iter().map(|i| i.multiplicity).sum()
    }

    pub fn distinct_count(&self) -> usize {
        self.intervals.len()
    }

    /// Halves interval `index` once, keeping the half that holds the root.
    pub fn bisect(&mut self, index: usize) {
        let iv = &mut self.intervals[index];
        if iv.is_exact() {
            return;
        }
        let mid = iv.midpoint();
        let s_mid = sign_of(&self.squarefree, &mid);
        if s_mid == BigSign::NoSign {
            iv.lo = mid.clone();
            iv.hi = mid;
            iv.certificate = Certificate::Exact;
            return;
        }
        let s_hi = sign_of(&self.squarefree, &iv.hi);
        if s_hi == BigSign::NoSign {
            iv.lo = iv.hi.clone();
            iv.certificate = Certificate::Exact;
            return;
        }
        if s_mid == s_hi {
            iv.hi = mid;
        } else {
            iv.lo = mid;
        }
        if !matches!(iv.certificate, Certificate::Exact) {
            iv.certificate = Certificate::SignChange;
        }
    }

    /// Narrows interval `index` below width `tol` and returns it.
    pub fn refine(&mut self, index: usize, tol: &Rational) -> Result<&RootInterval> {
        if !tol.is_positive() {
            return Err(Error::InvalidInput("refinement tolerance must be positive".into()));
        }
        if index >= self.intervals.len() {
            return Err(Error::InvalidIndex(format!("root {index} of {}", self.intervals.len())));
        }
        while self.intervals[index].width() >= *tol && !self.intervals[index].is_exact() {
            self.bisect(index);
        }
        Ok(&self.intervals[index])
    }
}

fn two() -> Rational {
    big(BigInt::from(2))
}

/// Exponent `e` with `2^e <= |x| < 2^(e+1)`, for `x != 0`.
fn log2_floor(x: &Rational) -> i64 {
    let x = x.abs();
    let bits = x.numer().bits() as i64 - x.denom().bits() as i64;
    let mut e = bits;
    let pow = |e: i64| -> Rational {
        if e >= 0 {
            big(BigInt::one() << e as usize)
        } else {
            Rational::new(BigInt::one(), BigInt::one() << (-e) as usize)
        }
    };
    while pow(e) > x {
        e -= 1;
    }
    while pow(e + 1) <= x {
        e += 1;
    }
    e
}

fn pow2(e: i64) -> Rational {
    if e >= 0 {
        big(BigInt::one() << e as usize)
    } else {
        Rational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

/// Split point for `(lo, hi]`: zero when it is inside, a power of two
/// between the endpoints when they differ by a large ratio, otherwise the
/// midpoint.
fn split_point(lo: &Rational, hi: &Rational) -> Rational {
    if lo.is_negative() && hi.is_positive() {
        return Rational::zero();
    }
    let negative = !hi.is_positive();
    let (near, far) = if negative { (hi.abs(), lo.abs()) } else { (lo.clone(), hi.clone()) };
    let signed = |v: Rational| if negative { -v } else { v };
    if near.is_zero() {
        return signed(far / big(BigInt::from(4)));
    }
    let (a, b) = (log2_floor(&near), log2_floor(&far));
    if b - a >= 3 {
        return signed(pow2((a + b) / 2));
    }
    (lo + hi) / two()
}

/// Half-width `s` of a neighbourhood `(m - s, m + s]` of the root `m` that
/// holds no other root, with both ends inside `(lo, hi)`.
fn exclusion_radius(chain: &SturmChain, lo: &Rational, hi: &Rational, m: &Rational) -> (Rational, usize, usize) {
    let room = (m - lo).min(hi - m);
    let mut k = 1usize;
    loop {
        let s = &room / big(BigInt::one() << k);
        let (a, b) = (m - &s, m + &s);
        if chain.sign_of_base(&a) != BigSign::NoSign && chain.sign_of_base(&b) != BigSign::NoSign {
            let (va, vb) = (chain.variations(&a), chain.variations(&b));
            if va - vb == 1 {
                return (s, va, vb);
            }
        }
        k += 1;
    }
}

/// Isolates every real root of `p`.
pub fn isolate_roots(p: &RationalPoly) -> Result<RootIsolation> {
    if p.is_zero() {
        return Err(Error::InvalidInput("cannot isolate the roots of zero".into()));
    }
    let chain = SturmChain::new(p)?;
    let gcd = primitive_part(chain.tail().to_vec());
    let base = chain.base().to_vec();
    let squarefree = if deg(&gcd) == 0 {
        base.clone()
    } else {
        primitive_integer(&int_to_rational_poly(&base).exact_divide(&int_to_rational_poly(&gcd))?)
    };
    let factors = if deg(&gcd) == 0 { Vec::new() } else { squarefree_decomposition(p)? };
    let multiplicity_at = |lo: &Rational, hi: &Rational| -> usize {
        if factors.is_empty() {
            return 1;
        }
        for (i, f) in factors.iter().enumerate() {
            if f.degree() == Some(0) {
                continue;
            }
            let (a, b) = (f.eval(lo), f.eval(hi));
            let hit = if lo == hi { a.is_zero() } else { b.is_zero() || a.is_positive() != b.is_positive() };
            if hit {
                return i + 1;
            }
        }
        1
    };

    let mut intervals = Vec::new();
    if p.degree() == Some(0) {
        return Ok(RootIsolation { poly: p.clone(), intervals, squarefree });
    }
    let bound = cauchy_bound(p);
    let lo0 = -bound.clone();
    let (v_lo, v_hi) = (chain.variations(&lo0), chain.variations(&bound));
    let mut stack = vec![(lo0, bound, v_lo, v_hi)];
    while let Some((lo, hi, vl, vh)) = stack.pop() {
        let count = vl - vh;
        if count == 0 {
            continue;
        }
        if count == 1 {
            let multiplicity = multiplicity_at(&lo, &hi);
            intervals.push(RootInterval {
                lo,
                hi,
                multiplicity,
                certificate: Certificate::Sturm { lo_variations: vl, hi_variations: vh },
            });
            continue;
        }
        let m = split_point(&lo, &hi);
        if chain.sign_of_base(&m) == BigSign::NoSign {
            let (s, va, vb) = exclusion_radius(&chain, &lo, &hi, &m);
            intervals.push(RootInterval {
                lo: m.clone(),
                hi: m.clone(),
                multiplicity: multiplicity_at(&m, &m),
                certificate: Certificate::Exact,
            });
            stack.push((&m + &s, hi, vb, vh));
            stack.push((lo, &m - &s, vl, va));
            continue;
        }
        let vm = chain.variations(&m);
        stack.push((m.clone(), hi, vm, vh));
        stack.push((lo, m, vl, vm));
    }
    intervals.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(RootIsolation { poly: p.clone(), intervals, squarefree })
}

/// Real roots as floats, each repeated by multiplicity, after refining
/// every interval below `tol`.
pub fn roots_float(p: &RationalPoly, tol: &Rational) -> Result<Vec<f64>> {
    let mut iso = isolate_roots(p)?;
    let mut out = Vec::with_capacity(iso.real_root_count());
    for i in 0..iso.intervals.len() {
        let iv = iso.refine(i, tol)?;
        let x = iv.midpoint().to_f64().unwrap_or(f64::NAN);
        out.extend(std::iter::repeat(x).take(iv.multiplicity));
    }
    Ok(out)
}

/// Default refinement tolerance `2^-40`.
pub fn default_tolerance() -> Rational {
    pow2(-40)
}

/// True when every root of `p` is real.
pub fn is_hyperbolic(p: &RationalPoly) -> Result<bool> {
    let d = p.degree().ok_or_else(|| Error::InvalidInput("zero polynomial".into()))?;
    Ok(isolate_roots(p)?.real_root_count() == d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InterlaceVerdict {
    StrictInterlace,
    Fail,
    CommonRoot,
}

/// Whether the roots of `p` strictly interlace those of `q`, where
/// `deg q = deg p + 1`: `q`'s roots and `p`'s roots alternate, starting and
/// ending with a root of `q`, with no coincidences.
pub fn interlace_check(p: &RationalPoly, q: &RationalPoly) -> Result<InterlaceVerdict> {
    let (dp, dq) = match (p.degree(), q.degree()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::InvalidInput("interlacing of the zero polynomial".into())),
    };
    if dq != dp + 1 {
        return Err(Error::InvalidInput(format!("need deg Q = deg P + 1, got {dq} and {dp}")));
    }
    if poly_gcd(p, q).degree() != Some(0) {
        return Ok(InterlaceVerdict::CommonRoot);
    }
    interlace_check_isolated(isolate_roots(p)?, isolate_roots(q)?)
}

/// [`interlace_check`] on isolations that are already computed, so one
/// isolation can serve two neighbouring checks in a sequence.
pub fn interlace_check_isolated(mut ip: RootIsolation, mut iq: RootIsolation) -> Result<InterlaceVerdict> {
    let (dp, dq) = match (ip.poly.degree(), iq.poly.degree()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::InvalidInput("interlacing of the zero polynomial".into())),
    };
    if dq != dp + 1 {
        return Err(Error::InvalidInput(format!("need deg Q = deg P + 1, got {dq} and {dp}")));
    }
    let simple = |iso: &RootIsolation, d: usize| {
        iso.distinct_count() == d && iso.intervals.iter().all(|i| i.multiplicity == 1)
    };
    if !simple(&ip, dp) || !simple(&iq, dq) {
        return Ok(InterlaceVerdict::Fail);
    }
    let mut rounds = 0usize;
    // refine until no interval of p meets an interval of q
    loop {
        let mut clash = None;
        'outer: for (a, x) in ip.intervals.iter().enumerate() {
            for (b, y) in iq.intervals.iter().enumerate() {
                if !x.disjoint_from(y) {
                    clash = Some((a, b));
                    break 'outer;
                }
            }
        }
        match clash {
            None => break,
            Some((a, b)) => {
                let (x, y) = (&ip.intervals[a], &iq.intervals[b]);
                if x.is_exact() && y.is_exact() {
                    return Ok(InterlaceVerdict::CommonRoot);
                }
                rounds += 1;
                if rounds % 256 == 0 && poly_gcd(&ip.poly, &iq.poly).degree() != Some(0) {
                    return Ok(InterlaceVerdict::CommonRoot);
                }
                ip.bisect(a);
                iq.bisect(b);
            }
        }
    }
    let mut tagged: Vec<(&Rational, bool)> = ip
        .intervals
        .iter()
        .map(|i| (&i.lo, true))
        .chain(iq.intervals.iter().map(|i| (&i.lo, false)))
        .collect();
    tagged.sort_by(|a, b| a.0.cmp(b.0));
    let alternating = tagged.iter().enumerate().all(|(i, &(_, from_p))| from_p == (i % 2 == 1));
    Ok(if alternating { InterlaceVerdict::StrictInterlace } else { InterlaceVerdict::Fail })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{int, rat};

    fn poly(c: &[i64]) -> RationalPoly {
        RationalPoly::from_i64s(c)
    }

    #[test]
    fn sturm_count_examples() {
        assert_eq!(sturm_count(&poly(&[1, 5, 1]), &int(-5), &int(0)).unwrap(), 2);
        assert_eq!(sturm_count(&poly(&[1, 0, 1]), &int(-10), &int(10)).unwrap(), 0);
        assert_eq!(sturm_count(&poly(&[1, -3, 1]), &int(0), &int(3)).unwrap(), 2);
        assert!(matches!(
            sturm_count(&poly(&[-1, 1]), &int(1), &int(2)),
            Err(Error::EndpointRoot(_))
        ));
    }

    #[test]
    fn chain_signs_match_rational_euclid() {
        // P = x^3 + 6x^2 + 6x + 1; compare variations against a chain built
        // by rational Euclid at several points
        let p = poly(&[1, 6, 6, 1]);
        let chain = SturmChain::new(&p).unwrap();
        let mut euclid = vec![p.clone(), p.derivative()];
        loop {
            let (_, r) = euclid[euclid.len() - 2].div_rem(&euclid[euclid.len() - 1]).unwrap();
            if r.is_zero() {
                break;
            }
            euclid.push(-r);
        }
        for x in [rat(-9, 2), rat(-1, 3), int(0), rat(7, 5), int(-2)] {
            let signs: Vec<i32> = euclid
                .iter()
                .map(|q| {
                    let v = q.eval(&x);
                    if v.is_zero() { 0 } else if v.is_positive() { 1 } else { -1 }
                })
                .filter(|&s| s != 0)
                .collect();
            let v = signs.windows(2).filter(|w| w[0] != w[1]).count();
            assert_eq!(chain.variations(&x), v, "x = {x}");
        }
    }

    #[test]
    fn isolate_cubic() {
        let iso = isolate_roots(&poly(&[1, 6, 6, 1])).unwrap();
        assert_eq!(iso.distinct_count(), 3);
        let r = roots_float(&poly(&[1, 6, 6, 1]), &default_tolerance()).unwrap();
        let expected = [-(5.0 + 21f64.sqrt()) / 2.0, -1.0, (21f64.sqrt() - 5.0) / 2.0];
        for (a, b) in r.iter().zip(expected) {
            assert!((a - b).abs() < 1e-10, "{a} vs {b}");
        }
    }

    #[test]
    fn multiplicities() {
        let p = RationalPoly::linear_power(int(1), 5);
        let iso = isolate_roots(&p).unwrap();
        assert_eq!(iso.intervals.len(), 1);
        assert_eq!(iso.intervals[0].multiplicity, 5);
        let mixed = &(&poly(&[-2, 1]) * &poly(&[1, 1]).pow(2)) * &poly(&[1, 0, 1]);
        let iso = isolate_roots(&mixed).unwrap();
        let mults: Vec<usize> = iso.intervals.iter().map(|i| i.multiplicity).collect();
        assert_eq!(mults, vec![2, 1]);
        assert_eq!(roots_float(&mixed, &default_tolerance()).unwrap().len(), 3);
    }

    #[test]
    fn quadratic_reciprocal_pair() {
        let r = roots_float(&poly(&[1, 3, 1]), &default_tolerance()).unwrap();
        assert!((r[0] * r[1] - 1.0).abs() < 1e-10);
        assert!((r[0] + 2.618033988749895).abs() < 1e-10);
    }

    #[test]
    fn exact_rational_roots() {
        // roots 0, 1/3, -7/2 and a split point landing on 0
        let p = &(&poly(&[0, 1]) * &poly(&[-1, 3])) * &poly(&[7, 2]);
        let mut iso = isolate_roots(&p).unwrap();
        assert_eq!(iso.distinct_count(), 3);
        for i in 0..3 {
            iso.refine(i, &pow2(-30)).unwrap();
        }
        let tol = pow2(-30);
        for (iv, root) in iso.intervals.iter().zip([rat(-7, 2), int(0), rat(1, 3)]) {
            assert!(iv.lo <= root && root <= iv.hi && iv.width() < tol);
        }
    }

    #[test]
    fn hyperbolicity() {
        assert!(is_hyperbolic(&poly(&[0, 1, 10, 20, 10, 1])).unwrap());
        assert!(!is_hyperbolic(&poly(&[1, 0, 1])).unwrap());
        assert!(is_hyperbolic(&RationalPoly::linear_power(int(1), 3)).unwrap());
    }

    #[test]
    fn interlacing_examples() {
        let n3 = poly(&[1, 3, 1]);
        let n4 = poly(&[1, 6, 6, 1]);
        let n5 = poly(&[1, 10, 20, 10, 1]);
        assert_eq!(interlace_check(&n3, &n4).unwrap(), InterlaceVerdict::StrictInterlace);
        assert_eq!(interlace_check(&n4, &n5).unwrap(), InterlaceVerdict::StrictInterlace);
        let q = &poly(&[-1, 1]) * &poly(&[-2, 1]);
        assert_eq!(interlace_check(&poly(&[-1, 1]), &q).unwrap(), InterlaceVerdict::CommonRoot);
        // both roots of p on the same side of q's roots
        let p = poly(&[-10, 1]);
        let q = &poly(&[-1, 1]) * &poly(&[-2, 1]);
        assert_eq!(interlace_check(&p, &q).unwrap(), InterlaceVerdict::Fail);
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = &poly(&[1, 1]).pow(2) * &poly(&[-3, 1]);
        let b = &poly(&[1, 1]) * &poly(&[5, 1]);
        assert_eq!(poly_gcd(&a, &b), poly(&[1, 1]));
        assert_eq!(squarefree_part(&a).unwrap(), &poly(&[1, 1]) * &poly(&[-3, 1]));
        let dec = squarefree_decomposition(&a).unwrap();
        assert_eq!(dec, vec![poly(&[-3, 1]), poly(&[1, 1])]);
    }
}
