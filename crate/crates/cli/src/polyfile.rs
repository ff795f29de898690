//! Polynomial files: a `degree` line, then `degree + 1` lines
//! `numerator/denominator` (or a bare integer) from the constant term up.

use std::str::FromStr;

use narayana_css::{Error, Rational, RationalPoly, Result};
use num_bigint::BigInt;
use num_traits::Zero;

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidInput(format!("cannot parse coefficient {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

pub fn parse(text: &str) -> Result<RationalPoly> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::InvalidInput("empty polynomial file".into()))?;
    let degree: usize = header
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad degree line {header:?}")))?;
    let coeffs = lines.map(parse_rational).collect::<Result<Vec<_>>>()?;
    if coeffs.len() != degree + 1 {
        return Err(Error::InvalidInput(format!(
            "degree {degree} needs {} coefficients, found {}",
            degree + 1,
            coeffs.len()
        )));
    }
    let p = RationalPoly::new(coeffs);
    match p.degree() {
        Some(d) if d == degree => Ok(p),
        _ if degree == 0 && p.is_zero() => Ok(p),
        actual => Err(Error::InvalidDeclaredDegree { declared: degree, actual: actual.unwrap_or(0) }),
    }
}

pub fn render(p: &RationalPoly) -> String {
    let mut out = format!("{}\n", p.degree().unwrap_or(0));
    for c in p.coeffs() {
        out.push_str(&format!("{}/{}\n", c.numer(), c.denom()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use narayana_css::exactpoly::{int, rat};

    #[test]
    fn round_trip() {
        let p = RationalPoly::new(vec![rat(1, 2), int(0), int(-3)]);
        assert_eq!(parse(&render(&p)).unwrap(), p);
        assert_eq!(parse("1\n1\n1\n").unwrap(), RationalPoly::from_i64s(&[1, 1]));
    }

    #[test]
    fn rejects_bad_files() {
        assert!(parse("").is_err());
        assert!(parse("2\n1/1\n1/1\n").is_err());
        assert!(parse("1\n1/0\n1\n").is_err());
        assert!(matches!(parse("2\n1\n1\n0\n"), Err(Error::InvalidDeclaredDegree { .. })));
    }
}
