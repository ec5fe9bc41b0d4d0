//! Classical residues of rational functions `C(Y)·dY` over `K`.
//!
//! Everything here is plain commutative algebra and is kept independent of
//! the skew machinery, so the skew residue code can be checked against it.

use std::fmt;

use crate::error::{Error, Result};
use crate::field_tower::{Fe, Tower};
use crate::poly::{trunc_inv, trunc_mul, truncate, Poly, RatFn};

/// A rational point of the `Y`-line: an element of `F` or `∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Zero,
    Finite(Fe),
    Infinity,
}

impl Point {
    /// The coordinate of a finite point (`Zero` gives `0`).
    pub fn coordinate(self) -> Option<Fe> {
        match self {
            Point::Zero => Some(Fe::ZERO),
            Point::Finite(z) => Some(z),
            Point::Infinity => None,
        }
    }

    /// `Finite(0)` is folded into `Zero`.
    pub fn finite(z: Fe) -> Point {
        if z.is_zero() {
            Point::Zero
        } else {
            Point::Finite(z)
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Zero => write!(f, "0"),
            Point::Finite(z) => write!(f, "{}", z.0),
            Point::Infinity => write!(f, "inf"),
        }
    }
}

/// The first `m` Taylor coefficients of `num/den` at `Y = z`; `den(z) ≠ 0`.
pub fn taylor_coefficients(num: &Poly, den: &Poly, z: Fe, m: usize, k: &Tower) -> Vec<Fe> {
    let n = truncate(num.taylor_shift(z, k).into_coeffs(), m);
    let d = den.taylor_shift(z, k).into_coeffs();
    trunc_mul(&n, &trunc_inv(&d, m, k), m, k)
}

/// `res_z(C·dY)` at a point of `K` or at `∞`.
///
/// At a finite point the pole factor `(Y−z)^e` is split off the
/// denominator and the coefficient of `(Y−z)^{e−1}` in the Taylor series of
/// the rest is returned. At `∞` the substitution `Y = 1/W` turns the form
/// into `−C(1/W)/W²·dW`.
pub fn residue_at(c: &RatFn, z: Point, k: &Tower) -> Fe {
    if c.is_zero() {
        return Fe::ZERO;
    }
    match z.coordinate() {
        Some(z) => {
            let e = c.den().root_multiplicity(z, k);
            if e == 0 {
                return Fe::ZERO;
            }
            let rest = c.den().exact_div(&Poly::linear(z, k).pow(e as u32, k), k);
            taylor_coefficients(c.num(), &rest, z, e, k)[e - 1]
        }
        None => {
            let a = c.num().degree().unwrap() as i64;
            let b = c.den().degree().unwrap() as i64;
            // C(1/W)/W² = W^{b−a−2}·n̂(W)/d̂(W)
            let idx = a - b + 1;
            if idx < 0 {
                return Fe::ZERO;
            }
            let m = idx as usize + 1;
            let series = trunc_mul(
                &truncate(c.num().reversed().into_coeffs(), m),
                &trunc_inv(c.den().reversed().coeffs(), m, k),
                m,
                k,
            );
            k.neg(series[idx as usize])
        }
    }
}

/// `ρ_z(C·dY)` in coordinates: entry `i` is `res_z(θ^i(C)·dY)`.
pub fn rho(c: &RatFn, z: Point, k: &Tower) -> Vec<Fe> {
    (0..k.r() as i64).map(|i| residue_at(&c.frob(i, k), z, k)).collect()
}

/// `C(y^r)`, the pull-back along `Y = y^r`.
pub fn substitute_root(c: &RatFn, k: &Tower) -> RatFn {
    c.substitute_power(k.r(), k)
}

/// `res_ζ(C(y^r)·dy)` in the `y`-variable.
pub fn residue_at_zeta(c: &RatFn, zeta: Fe, k: &Tower) -> Fe {
    residue_at(&substitute_root(c, k), Point::finite(zeta), k)
}

/// The roots of `den` in `F` with multiplicities, ascending; fails unless
/// `den` is a product of linear factors over `F`.
pub fn split_roots(den: &Poly, k: &Tower) -> Result<Vec<(Fe, usize)>> {
    let mut rest = den.clone();
    let mut roots = Vec::new();
    for z in k.base_elements() {
        let e = rest.root_multiplicity(z, k);
        if e > 0 {
            roots.push((z, e));
            rest = rest.exact_div(&Poly::linear(z, k).pow(e as u32, k), k);
        }
    }
    if rest.degree() != Some(0) {
        return Err(Error::UnsplitDenominator);
    }
    Ok(roots)
}

/// Sum of `res_z(C·dY)` over `F ∪ {∞}`, defined when the denominator splits.
pub fn residue_sum(c: &RatFn, k: &Tower) -> Result<Fe> {
    let roots = split_roots(c.den(), k)?;
    let finite = roots.iter().fold(Fe::ZERO, |acc, &(z, _)| k.add(acc, residue_at(c, Point::finite(z), k)));
    Ok(k.add(finite, residue_at(c, Point::Infinity, k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_tower::FieldConfig;

    fn k25() -> Tower {
        Tower::new(FieldConfig::gf25()).unwrap()
    }

    fn rat(n: &[i64], d: &[i64], k: &Tower) -> RatFn {
        RatFn::new(Poly::from_ints(n, k), Poly::from_ints(d, k), k).unwrap()
    }

    #[test]
    fn residue_examples() {
        let k = k25();
        let one = Point::Finite(Fe::ONE);
        let c = rat(&[1], &[2, -3, 1], &k);
        assert_eq!(residue_at(&c, one, &k), k.from_int(-1));
        let z = k.from_int(3);
        let s = RatFn::new(Poly::one(), Poly::linear(z, &k), &k).unwrap();
        assert_eq!(residue_at(&s, Point::Finite(z), &k), Fe::ONE);
        assert_eq!(residue_at(&s, Point::Infinity, &k), k.from_int(-1));
        assert_eq!(residue_at(&rat(&[1, 2, 3], &[1], &k), one, &k), Fe::ZERO);
        assert_eq!(residue_sum(&c, &k), Ok(Fe::ZERO));
    }

    #[test]
    fn higher_order_pole() {
        let k = k25();
        // Y²/(Y−1)³ = (1 + 2t + t²)/t³ with t = Y − 1, residue 1
        let c = rat(&[0, 0, 1], &[-1, 3, -3, 1], &k);
        assert_eq!(residue_at(&c, Point::Finite(Fe::ONE), &k), Fe::ONE);
        assert_eq!(residue_at(&c, Point::Infinity, &k), k.from_int(-1));
        // 1/Y² at 0 and ∞
        let c = rat(&[1], &[0, 0, 1], &k);
        assert_eq!(residue_at(&c, Point::Zero, &k), Fe::ZERO);
        assert_eq!(residue_at(&c, Point::Infinity, &k), Fe::ZERO);
    }

    #[test]
    fn rho_examples() {
        let k = k25();
        let g = k.gen();
        let z = k.from_int(2);
        let c = RatFn::new(Poly::constant(g), Poly::linear(z, &k), &k).unwrap();
        assert_eq!(rho(&c, Point::Finite(z), &k), vec![g, k.frob(g, 1)]);
        let central = rat(&[3], &[-2, 1], &k);
        let coords = rho(&central, Point::Finite(z), &k);
        assert!(coords.iter().all(|&c| c == coords[0]));
        assert_eq!(rho(&c, Point::Finite(Fe::ONE), &k), vec![Fe::ZERO; 2]);
    }

    #[test]
    fn root_substitution() {
        let k = k25();
        let zeta = k.from_int(3);
        let zr = k.pow(zeta, 2);
        let c = RatFn::new(Poly::one(), Poly::linear(zr, &k), &k).unwrap();
        let y_r1 = RatFn::from_poly(Poly::monomial(Fe::ONE, 1));
        let pulled = substitute_root(&c, &k).mul(&y_r1, &k);
        let res = residue_at(&pulled, Point::Finite(zeta), &k);
        assert_eq!(res, k.inv(k.from_int(2)));
        assert_eq!(k.mul(k.from_int(2), res), residue_at(&c, Point::Finite(zr), &k));
        assert_eq!(residue_at_zeta(&rat(&[1, 1], &[1], &k), zeta, &k), Fe::ZERO);
    }

    #[test]
    fn unsplit_denominator_is_reported() {
        let k = k25();
        // Y² − 2 is irreducible over GF(5)
        let c = rat(&[1], &[-2, 0, 1], &k);
        assert_eq!(residue_sum(&c, &k), Err(Error::UnsplitDenominator));
    }
}
