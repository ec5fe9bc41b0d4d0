//! Commutative univariate polynomials, Laurent polynomials and rational
//! functions over `K`, plus truncated power series helpers.
//!
//! These carry the commutative side of the theory: `C = K[Y^{±1}]`, its
//! fraction field, the centre `F[Y^{±1}]` (coefficients in `F`), and the
//! local coordinate `t = Y − z` used by the Taylor machinery.

use crate::error::{Error, Result};
use crate::field_tower::{Fe, Tower};

/// Dense polynomial over `K`, constant coefficient first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Fe>,
}

fn trim(v: &mut Vec<Fe>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly { coeffs: vec![Fe::ONE] }
    }

    pub fn constant(c: Fe) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: Fe, d: usize) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Fe::ZERO; d + 1];
        coeffs[d] = c;
        Poly { coeffs }
    }

    /// The monic linear polynomial `Y − z`.
    pub fn linear(z: Fe, k: &Tower) -> Poly {
        Poly::from_coeffs(vec![k.neg(z), Fe::ONE])
    }

    pub fn from_coeffs(mut coeffs: Vec<Fe>) -> Poly {
        trim(&mut coeffs);
        Poly { coeffs }
    }

    /// From integers in the prime field, constant first.
    pub fn from_ints(ints: &[i64], k: &Tower) -> Poly {
        Poly::from_coeffs(ints.iter().map(|&c| k.from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Fe> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [Fe::ONE]
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn lead(&self) -> Fe {
        self.coeffs.last().copied().unwrap_or(Fe::ZERO)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_in_base(&self, k: &Tower) -> bool {
        self.coeffs.iter().all(|&c| k.is_in_base(c))
    }

    pub fn add(&self, o: &Poly, k: &Tower) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| k.add(self.coeff(i), o.coeff(i))).collect())
    }

    pub fn sub(&self, o: &Poly, k: &Tower) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| k.sub(self.coeff(i), o.coeff(i))).collect())
    }

    pub fn neg(&self, k: &Tower) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|&c| k.neg(c)).collect() }
    }

    pub fn scale(&self, c: Fe, k: &Tower) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&a| k.mul(a, c)).collect())
    }

    pub fn mul(&self, o: &Poly, k: &Tower) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Fe::ZERO; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = k.add(out[i + j], k.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn pow(&self, n: u32, k: &Tower) -> Poly {
        (0..n).fold(Poly::one(), |acc, _| acc.mul(self, k))
    }

    /// Multiplication by `Y^s`.
    pub fn shift(&self, s: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Fe::ZERO; s];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    /// Euclidean division; `None` when dividing by zero.
    pub fn divrem(&self, d: &Poly, k: &Tower) -> Option<(Poly, Poly)> {
        let dd = d.degree()?;
        let lead_inv = k.inv(d.lead());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Poly::zero(), self.clone()));
        }
        let mut quo = vec![Fe::ZERO; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = k.mul(rem[i], lead_inv);
            if c.is_zero() {
                continue;
            }
            quo[i - dd] = c;
            for (j, &b) in d.coeffs.iter().enumerate() {
                rem[i - dd + j] = k.sub(rem[i - dd + j], k.mul(c, b));
            }
        }
        Some((Poly::from_coeffs(quo), Poly::from_coeffs(rem)))
    }

    pub fn rem(&self, d: &Poly, k: &Tower) -> Poly {
        self.divrem(d, k).expect("remainder by zero polynomial").1
    }

    /// Exact quotient; panics if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly, k: &Tower) -> Poly {
        let (q, r) = self.divrem(d, k).expect("division by zero polynomial");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn eval(&self, z: Fe, k: &Tower) -> Fe {
        self.coeffs.iter().rev().fold(Fe::ZERO, |acc, &c| k.add(k.mul(acc, z), c))
    }

    pub fn deriv(&self, k: &Tower) -> Poly {
        Poly::from_coeffs(
            self.coeffs.iter().enumerate().skip(1).map(|(i, &c)| k.mul(k.from_int(i as i64), c)).collect(),
        )
    }

    /// Applies `θ^i` to every coefficient.
    pub fn frob(&self, i: i64, k: &Tower) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|&c| k.frob(c, i)).collect() }
    }

    pub fn monic(&self, k: &Tower) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(k.inv(self.lead()), k)
    }

    /// Monic gcd (zero when both inputs vanish).
    pub fn gcd(a: &Poly, b: &Poly, k: &Tower) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b, k);
            a = b;
            b = r;
        }
        a.monic(k)
    }

    /// `P(z + t)` as a polynomial in `t`.
    pub fn taylor_shift(&self, z: Fe, k: &Tower) -> Poly {
        let lin = Poly::from_coeffs(vec![z, Fe::ONE]);
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, &c| acc.mul(&lin, k).add(&Poly::constant(c), k))
    }

    /// `P(y^e)`.
    pub fn substitute_power(&self, e: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Fe::ZERO; (self.coeffs.len() - 1) * e + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * e] = c;
        }
        Poly::from_coeffs(coeffs)
    }

    /// Reversed coefficients: `Y^{deg} P(1/Y)`.
    pub fn reversed(&self) -> Poly {
        let mut c = self.coeffs.clone();
        c.reverse();
        Poly::from_coeffs(c)
    }

    /// Multiplicity of `z` as a root.
    pub fn root_multiplicity(&self, z: Fe, k: &Tower) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = Poly::linear(z, k);
        let mut p = self.clone();
        let mut e = 0;
        loop {
            let (q, r) = p.divrem(&lin, k).expect("nonzero divisor");
            if !r.is_zero() {
                return e;
            }
            p = q;
            e += 1;
        }
    }
}

/// Laurent polynomial over `K`: `Σ coeffs[i] Y^{val+i}`, with first and last
/// coefficients nonzero unless the value is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LPoly {
    val: i64,
    coeffs: Vec<Fe>,
}

impl LPoly {
    pub fn zero() -> LPoly {
        LPoly { val: 0, coeffs: Vec::new() }
    }

    pub fn one() -> LPoly {
        LPoly { val: 0, coeffs: vec![Fe::ONE] }
    }

    pub fn constant(c: Fe) -> LPoly {
        LPoly::new(0, vec![c])
    }

    pub fn monomial(c: Fe, e: i64) -> LPoly {
        LPoly::new(e, vec![c])
    }

    pub fn new(val: i64, mut coeffs: Vec<Fe>) -> LPoly {
        trim(&mut coeffs);
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return LPoly::zero();
        }
        coeffs.drain(..lead_zeros);
        LPoly { val: val + lead_zeros as i64, coeffs }
    }

    pub fn from_poly(p: &Poly) -> LPoly {
        LPoly::new(0, p.coeffs().to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent, `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.val)
    }

    /// Highest exponent, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.val + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> Fe {
        let i = e - self.val;
        if i < 0 {
            return Fe::ZERO;
        }
        self.coeffs.get(i as usize).copied().unwrap_or(Fe::ZERO)
    }

    /// `(exponent, coefficient)` pairs over the stored range, zeros included.
    pub fn terms(&self) -> impl Iterator<Item = (i64, Fe)> + '_ {
        self.coeffs.iter().enumerate().map(move |(i, &c)| (self.val + i as i64, c))
    }

    pub fn is_in_base(&self, k: &Tower) -> bool {
        self.coeffs.iter().all(|&c| k.is_in_base(c))
    }

    fn span(&self, o: &LPoly) -> (i64, i64) {
        match (self.valuation(), o.valuation()) {
            (None, None) => (0, -1),
            (Some(_), None) => (self.val, self.degree().unwrap()),
            (None, Some(_)) => (o.val, o.degree().unwrap()),
            (Some(a), Some(b)) => (a.min(b), self.degree().unwrap().max(o.degree().unwrap())),
        }
    }

    pub fn add(&self, o: &LPoly, k: &Tower) -> LPoly {
        let (lo, hi) = self.span(o);
        LPoly::new(lo, (lo..=hi).map(|e| k.add(self.coeff(e), o.coeff(e))).collect())
    }

    pub fn sub(&self, o: &LPoly, k: &Tower) -> LPoly {
        let (lo, hi) = self.span(o);
        LPoly::new(lo, (lo..=hi).map(|e| k.sub(self.coeff(e), o.coeff(e))).collect())
    }

    pub fn neg(&self, k: &Tower) -> LPoly {
        LPoly { val: self.val, coeffs: self.coeffs.iter().map(|&c| k.neg(c)).collect() }
    }

    pub fn scale(&self, c: Fe, k: &Tower) -> LPoly {
        LPoly::new(self.val, self.coeffs.iter().map(|&a| k.mul(a, c)).collect())
    }

    pub fn mul(&self, o: &LPoly, k: &Tower) -> LPoly {
        if self.is_zero() || o.is_zero() {
            return LPoly::zero();
        }
        let prod = Poly::from_coeffs(self.coeffs.clone()).mul(&Poly::from_coeffs(o.coeffs.clone()), k);
        LPoly::new(self.val + o.val, prod.into_coeffs())
    }

    /// Multiplication by `Y^s`.
    pub fn shift(&self, s: i64) -> LPoly {
        if self.is_zero() {
            return LPoly::zero();
        }
        LPoly { val: self.val + s, coeffs: self.coeffs.clone() }
    }

    pub fn frob(&self, i: i64, k: &Tower) -> LPoly {
        LPoly { val: self.val, coeffs: self.coeffs.iter().map(|&c| k.frob(c, i)).collect() }
    }

    /// Value at `z`; `z` must be nonzero when negative exponents occur.
    pub fn eval(&self, z: Fe, k: &Tower) -> Fe {
        self.terms().fold(Fe::ZERO, |acc, (e, c)| k.add(acc, k.mul(c, k.pow(z, e))))
    }

    /// Splits as `Y^v · P(Y)` with `P` a polynomial.
    pub fn to_shifted_poly(&self) -> (i64, Poly) {
        (self.val, Poly::from_coeffs(self.coeffs.clone()))
    }

    /// `None` when a negative exponent is present.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        (self.val >= 0).then(|| Poly::from_coeffs(self.coeffs.clone()).shift(self.val as usize))
    }

    pub fn to_ratfn(&self, k: &Tower) -> RatFn {
        let (v, p) = self.to_shifted_poly();
        if v >= 0 {
            RatFn::from_poly(p.shift(v as usize))
        } else {
            RatFn::new(p, Poly::monomial(Fe::ONE, (-v) as usize), k).expect("nonzero denominator")
        }
    }
}

/// Rational function over `K`: `num / den` with `den` monic and coprime to `num`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    pub fn new(num: Poly, den: Poly, k: &Tower) -> Result<RatFn> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFn::zero());
        }
        let g = Poly::gcd(&num, &den, k);
        let num = num.exact_div(&g, k);
        let den = den.exact_div(&g, k);
        let c = k.inv(den.lead());
        Ok(RatFn { num: num.scale(c, k), den: den.scale(c, k) })
    }

    pub fn zero() -> RatFn {
        RatFn { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> RatFn {
        RatFn { num: Poly::one(), den: Poly::one() }
    }

    pub fn constant(c: Fe) -> RatFn {
        RatFn::from_poly(Poly::constant(c))
    }

    pub fn from_poly(p: Poly) -> RatFn {
        RatFn { num: p, den: Poly::one() }
    }

    /// `Y` itself.
    pub fn variable() -> RatFn {
        RatFn::from_poly(Poly::monomial(Fe::ONE, 1))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_in_base(&self, k: &Tower) -> bool {
        self.num.is_in_base(k) && self.den.is_in_base(k)
    }

    pub fn add(&self, o: &RatFn, k: &Tower) -> RatFn {
        let num = self.num.mul(&o.den, k).add(&o.num.mul(&self.den, k), k);
        RatFn::new(num, self.den.mul(&o.den, k), k).expect("nonzero denominator")
    }

    pub fn sub(&self, o: &RatFn, k: &Tower) -> RatFn {
        self.add(&o.neg(k), k)
    }

    pub fn neg(&self, k: &Tower) -> RatFn {
        RatFn { num: self.num.neg(k), den: self.den.clone() }
    }

    pub fn mul(&self, o: &RatFn, k: &Tower) -> RatFn {
        RatFn::new(self.num.mul(&o.num, k), self.den.mul(&o.den, k), k).expect("nonzero denominator")
    }

    pub fn scale(&self, c: Fe, k: &Tower) -> RatFn {
        RatFn::new(self.num.scale(c, k), self.den.clone(), k).expect("nonzero denominator")
    }

    pub fn inv(&self, k: &Tower) -> Result<RatFn> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        RatFn::new(self.den.clone(), self.num.clone(), k)
    }

    pub fn div(&self, o: &RatFn, k: &Tower) -> Result<RatFn> {
        Ok(self.mul(&o.inv(k)?, k))
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, e: i64, k: &Tower) -> Result<RatFn> {
        let base = if e < 0 {
            if self.is_zero() {
                return Err(Error::ZeroToNegativePower);
            }
            self.inv(k)?
        } else {
            self.clone()
        };
        Ok((0..e.unsigned_abs()).fold(RatFn::one(), |acc, _| acc.mul(&base, k)))
    }

    pub fn frob(&self, i: i64, k: &Tower) -> RatFn {
        RatFn { num: self.num.frob(i, k), den: self.den.frob(i, k) }
    }

    /// Value at `z`, `None` at a pole.
    pub fn eval(&self, z: Fe, k: &Tower) -> Option<Fe> {
        let d = self.den.eval(z, k);
        (!d.is_zero()).then(|| k.div(self.num.eval(z, k), d))
    }

    /// Classical derivative `d/dY`.
    pub fn deriv(&self, k: &Tower) -> RatFn {
        let num = self.num.deriv(k).mul(&self.den, k).sub(&self.num.mul(&self.den.deriv(k), k), k);
        RatFn::new(num, self.den.mul(&self.den, k), k).expect("nonzero denominator")
    }

    /// `C(y^e)`.
    pub fn substitute_power(&self, e: usize, k: &Tower) -> RatFn {
        RatFn::new(self.num.substitute_power(e), self.den.substitute_power(e), k).expect("nonzero denominator")
    }
}

/// Product of two truncated series, keeping `m` terms.
pub fn trunc_mul(a: &[Fe], b: &[Fe], m: usize, k: &Tower) -> Vec<Fe> {
    let mut out = vec![Fe::ZERO; m];
    for (i, &x) in a.iter().enumerate().take(m) {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(m - i) {
            out[i + j] = k.add(out[i + j], k.mul(x, y));
        }
    }
    out
}

/// Inverse of a truncated series with invertible constant term, `m` terms.
pub fn trunc_inv(a: &[Fe], m: usize, k: &Tower) -> Vec<Fe> {
    if m == 0 {
        return Vec::new();
    }
    let a0 = a.first().copied().unwrap_or(Fe::ZERO);
    assert!(!a0.is_zero(), "series with zero constant term is not invertible");
    let a0_inv = k.inv(a0);
    let mut out = vec![Fe::ZERO; m];
    for n in 0..m {
        let mut s = if n == 0 { Fe::ONE } else { Fe::ZERO };
        for i in 1..=n.min(a.len().saturating_sub(1)) {
            s = k.sub(s, k.mul(a[i], out[n - i]));
        }
        out[n] = k.mul(s, a0_inv);
    }
    out
}

/// Pads or truncates a coefficient vector to exactly `m` entries.
pub fn truncate(mut v: Vec<Fe>, m: usize) -> Vec<Fe> {
    v.resize(m, Fe::ZERO);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_tower::FieldConfig;

    fn k25() -> Tower {
        Tower::new(FieldConfig::gf25()).unwrap()
    }

    #[test]
    fn division_multiplies_back() {
        let k = k25();
        let g = k.gen();
        let a = Poly::from_coeffs(vec![Fe::ONE, g, k.from_int(3), g, Fe::ONE]);
        let b = Poly::from_coeffs(vec![g, Fe::ZERO, k.from_int(2)]);
        let (q, r) = a.divrem(&b, &k).unwrap();
        assert_eq!(q.mul(&b, &k).add(&r, &k), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn ratfn_normalizes() {
        let k = k25();
        let y1 = Poly::linear(Fe::ONE, &k);
        let y2 = Poly::linear(k.from_int(2), &k);
        let f = RatFn::new(y1.mul(&y2, &k), y1.mul(&y1, &k), &k).unwrap();
        assert_eq!(f.num(), &y2);
        assert_eq!(f.den(), &y1);
        // 1/(Y−1) + 1/(Y−2) = (2Y−3)/((Y−1)(Y−2))
        let a = RatFn::new(Poly::one(), y1.clone(), &k).unwrap();
        let b = RatFn::new(Poly::one(), y2.clone(), &k).unwrap();
        let s = a.add(&b, &k);
        assert_eq!(s.num(), &Poly::from_ints(&[-3, 2], &k));
        assert_eq!(s.den(), &y1.mul(&y2, &k));
    }

    #[test]
    fn taylor_shift_and_eval() {
        let k = k25();
        let p = Poly::from_ints(&[1, 2, 3], &k);
        let z = k.from_int(4);
        let s = p.taylor_shift(z, &k);
        assert_eq!(s.coeff(0), p.eval(z, &k));
        assert_eq!(s.coeff(1), p.deriv(&k).eval(z, &k));
    }

    #[test]
    fn series_inverse() {
        let k = k25();
        let a = vec![k.from_int(2), k.gen(), Fe::ONE];
        let inv = trunc_inv(&a, 6, &k);
        let prod = trunc_mul(&a, &inv, 6, &k);
        assert_eq!(prod[0], Fe::ONE);
        assert!(prod[1..].iter().all(|c| c.is_zero()));
    }

    #[test]
    fn laurent_arithmetic() {
        let k = k25();
        let a = LPoly::new(-2, vec![Fe::ONE, Fe::ZERO, k.gen()]);
        let b = LPoly::monomial(k.from_int(3), 1);
        let ab = a.mul(&b, &k);
        assert_eq!(ab.valuation(), Some(-1));
        assert_eq!(ab.coeff(1), k.mul(k.gen(), k.from_int(3)));
        assert_eq!(a.sub(&a, &k), LPoly::zero());
        let z = k.from_int(2);
        assert_eq!(a.to_ratfn(&k).eval(z, &k), Some(a.eval(z, &k)));
    }
}
