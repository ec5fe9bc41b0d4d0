//! Seeded random generators for the property suites.

use rand::Rng;

use crate::field_tower::{Fe, Tower};
use crate::fractions::SkewFrac;
use crate::poly::{LPoly, Poly, RatFn};
use crate::skew_ring::SkewPoly;

pub fn fe<R: Rng>(rng: &mut R, k: &Tower) -> Fe {
    Fe(rng.gen_range(0..k.size()))
}

pub fn nonzero_fe<R: Rng>(rng: &mut R, k: &Tower) -> Fe {
    Fe(rng.gen_range(1..k.size()))
}

pub fn base_fe<R: Rng>(rng: &mut R, k: &Tower) -> Fe {
    Fe(rng.gen_range(0..k.p()))
}

pub fn nonzero_base_fe<R: Rng>(rng: &mut R, k: &Tower) -> Fe {
    Fe(rng.gen_range(1..k.p()))
}

/// A skew polynomial of degree exactly `deg` (nonzero leading coefficient).
pub fn skew_poly_of_degree<R: Rng>(rng: &mut R, k: &Tower, deg: usize) -> SkewPoly {
    let mut c: Vec<Fe> = (0..deg).map(|_| fe(rng, k)).collect();
    c.push(nonzero_fe(rng, k));
    SkewPoly::from_coeffs(c)
}

/// A skew polynomial of degree at most `max_deg`, possibly zero.
pub fn skew_poly<R: Rng>(rng: &mut R, k: &Tower, max_deg: usize) -> SkewPoly {
    SkewPoly::from_coeffs((0..=max_deg).map(|_| fe(rng, k)).collect())
}

/// A nonzero skew polynomial of degree at most `max_deg`.
pub fn nonzero_skew_poly<R: Rng>(rng: &mut R, k: &Tower, max_deg: usize) -> SkewPoly {
    let d = rng.gen_range(0..=max_deg);
    skew_poly_of_degree(rng, k, d)
}

/// A nonzero Laurent skew polynomial with exponents in `lo..=hi`.
pub fn laurent<R: Rng>(rng: &mut R, k: &Tower, lo: i64, hi: i64) -> SkewPoly {
    loop {
        let f = SkewPoly::new(lo, (lo..=hi).map(|_| fe(rng, k)).collect());
        if !f.is_zero() {
            return f;
        }
    }
}

/// A nonzero polynomial in `Y` over `K` of degree at most `max_deg`.
pub fn coef_poly<R: Rng>(rng: &mut R, k: &Tower, max_deg: usize) -> LPoly {
    loop {
        let c = LPoly::new(0, (0..=max_deg).map(|_| fe(rng, k)).collect());
        if !c.is_zero() {
            return c;
        }
    }
}

/// A nonzero element of `K(Y)` with small numerator and denominator.
pub fn coef_ratfn<R: Rng>(rng: &mut R, k: &Tower, max_deg: usize) -> RatFn {
    let num = coef_poly(rng, k, max_deg);
    let den = coef_poly(rng, k, max_deg);
    RatFn::new(num.to_poly().unwrap(), den.to_poly().unwrap(), k).expect("nonzero denominator")
}

/// A monic product `Π (Y − z_i)^{e_i}` over distinct `z_i ∈ F \ {0}`, with
/// up to `max_poles` factors of multiplicity at most `max_order`.
pub fn split_den<R: Rng>(rng: &mut R, k: &Tower, max_poles: usize, max_order: usize) -> Poly {
    let mut roots: Vec<Fe> = Vec::new();
    let count = rng.gen_range(0..=max_poles.min(k.p() as usize - 1));
    while roots.len() < count {
        let z = nonzero_base_fe(rng, k);
        if !roots.contains(&z) {
            roots.push(z);
        }
    }
    roots.iter().fold(Poly::one(), |acc, &z| {
        let e = rng.gen_range(1..=max_order);
        acc.mul(&Poly::linear(z, k).pow(e as u32, k), k)
    })
}

/// A nonzero fraction with a split denominator.
pub fn split_frac<R: Rng>(rng: &mut R, k: &Tower, max_deg: usize, max_poles: usize, max_order: usize) -> SkewFrac {
    let den = split_den(rng, k, max_poles, max_order);
    let lo = -(rng.gen_range(0..=k.r() as i64));
    let num = laurent(rng, k, lo, max_deg as i64);
    SkewFrac::new(num, den, k).expect("central denominator")
}

/// A nonzero fraction whose denominator contains `(Y − z)^e`.
pub fn frac_with_pole<R: Rng>(rng: &mut R, k: &Tower, z: Fe, e: usize, max_deg: usize) -> SkewFrac {
    loop {
        let other = split_den(rng, k, 2, 2);
        let den = other.mul(&Poly::linear(z, k).pow(e as u32, k), k);
        let num = laurent(rng, k, 0, max_deg as i64);
        let f = SkewFrac::new(num, den, k).expect("central denominator");
        if f.pole_multiplicity(z, k) == e {
            return f;
        }
    }
}

/// A nonzero polynomial in `Y` over `F` of degree at most `max_deg`.
pub fn central_poly<R: Rng>(rng: &mut R, k: &Tower, max_deg: usize) -> Poly {
    loop {
        let c = Poly::from_coeffs((0..=max_deg).map(|_| base_fe(rng, k)).collect());
        if !c.is_zero() {
            return c;
        }
    }
}
