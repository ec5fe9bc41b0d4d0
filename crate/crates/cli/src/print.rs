//! Compact text forms that the parser reads back.
//!
//! Skew polynomials print by decreasing degree, e.g. `g*X+4` or
//! `(1+4*g)*X^2+X`. Coefficients with several power-basis terms are
//! parenthesized whenever the polynomial has more than one term.

use skewres_core::fractions::SkewFrac;
use skewres_core::poly::Poly;
use skewres_core::skew_ring::SkewPoly;
use skewres_core::taylor::{QElem, TaylorSeries};
use skewres_core::{Fe, Tower};

fn power(var: &str, e: i64) -> String {
    match e {
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

/// `c·var^e` for a list of `(e, c)` pairs, highest exponent first.
fn monomials(terms: &[(i64, Fe)], var: &str, k: &Tower) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let wrap = terms.len() > 1;
    let parts: Vec<String> = terms
        .iter()
        .map(|&(e, c)| {
            let coeff = k.format(c);
            let multi = coeff.contains('+');
            if e == 0 {
                return if wrap && multi { format!("({coeff})") } else { coeff };
            }
            let v = power(var, e);
            if c == Fe::ONE {
                v
            } else if multi {
                format!("({coeff})*{v}")
            } else {
                format!("{coeff}*{v}")
            }
        })
        .collect();
    parts.join("+")
}

/// A skew polynomial with nonnegative exponents.
pub fn skew_poly(f: &SkewPoly, k: &Tower) -> String {
    let mut terms: Vec<(i64, Fe)> = f.terms().filter(|(_, c)| !c.is_zero()).collect();
    terms.reverse();
    monomials(&terms, "X", k)
}

/// A polynomial in `Y`.
pub fn y_poly(p: &Poly, k: &Tower) -> String {
    let terms: Vec<(i64, Fe)> =
        p.coeffs().iter().enumerate().rev().filter(|(_, c)| !c.is_zero()).map(|(e, &c)| (e as i64, c)).collect();
    monomials(&terms, "Y", k)
}

fn term_count(s: &str) -> usize {
    let mut depth = 0;
    let mut count = 1;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 => count += 1,
            _ => {}
        }
    }
    count
}

fn group(s: String) -> String {
    if term_count(&s) > 1 {
        format!("({s})")
    } else {
        s
    }
}

/// A fraction `num/den`; negative powers of `X` are cleared by multiplying
/// numerator and denominator by a power of `Y`.
pub fn frac(f: &SkewFrac, k: &Tower) -> String {
    let r = k.r() as i64;
    let (mut num, mut den) = (f.num().clone(), f.den().clone());
    if let Some(v) = num.valuation().filter(|&v| v < 0) {
        let s = (-v + r - 1) / r;
        num = num.shift(s * r);
        den = den.mul(&Poly::monomial(Fe::ONE, s as usize), k);
    }
    if den.is_one() {
        return skew_poly(&num, k);
    }
    format!("{}/{}", group(skew_poly(&num, k)), group(y_poly(&den, k)))
}

/// The class `Σ_j a_j X^j` of an element of `A/NA`, read from its
/// constant-term coordinates.
pub fn class(q: &QElem, k: &Tower) -> String {
    let f = SkewPoly::from_coeffs(q.components());
    skew_poly(&f, k)
}

/// A truncated series `c_v T^v + ...`; precision is reported separately.
pub fn series(s: &TaylorSeries, k: &Tower) -> String {
    let parts: Vec<String> = s
        .terms()
        .map(|(n, c)| {
            let coeff = class(c, k);
            if n == 0 {
                coeff
            } else if coeff == "1" {
                power("T", n)
            } else {
                format!("{}*{}", group(coeff), power("T", n))
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}
