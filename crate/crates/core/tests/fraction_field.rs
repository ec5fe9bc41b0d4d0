mod common;

use common::rng;
use proptest::prelude::*;
use skewres_core::fractions::SkewFrac;
use skewres_core::poly::{Poly, RatFn};
use skewres_core::random;
use skewres_core::skew_ring::SkewPoly;
use skewres_core::{Error, Fe, FieldConfig, Tower};

fn k25() -> Tower {
    Tower::new(FieldConfig::gf25()).unwrap()
}

#[test]
fn y_over_y_is_one() {
    let k = k25();
    let y = SkewPoly::from_y_poly(&Poly::monomial(Fe::ONE, 1), &k);
    let f = SkewFrac::new(y, Poly::monomial(Fe::ONE, 1), &k).unwrap();
    assert_eq!(f, SkewFrac::one());
}

#[test]
fn inverse_of_x_is_x_to_minus_one() {
    let k = k25();
    let inv = SkewFrac::from_skew(SkewPoly::x()).inverse(&k).unwrap();
    assert!(inv.cross_eq(&SkewFrac::from_skew(SkewPoly::monomial(Fe::ONE, -1)), &k));
    assert_eq!(inv.degree(&k), Some(-1));
}

#[test]
fn zero_denominator_and_zero_inverse_are_errors() {
    let k = k25();
    assert_eq!(SkewFrac::new(SkewPoly::one(), Poly::zero(), &k), Err(Error::DivisionByZero));
    assert!(SkewFrac::zero().inverse(&k).is_err());
}

#[test]
fn coefficient_fractions_commute_past_x_by_frobenius() {
    let k = k25();
    let g = k.gen();
    let c = RatFn::new(Poly::constant(g), Poly::linear(k.from_int(2), &k), &k).unwrap();
    let left = SkewFrac::from_skew(SkewPoly::x()).mul(&SkewFrac::from_coef(&c, &k), &k);
    let right = SkewFrac::from_coef(&c.frob(1, &k), &k).mul(&SkewFrac::from_skew(SkewPoly::x()), &k);
    assert_eq!(left, right);
}

fn frac(seed: u64, k: &Tower) -> (SkewFrac, SkewFrac, SkewFrac) {
    let mut g = rng(seed);
    (
        random::split_frac(&mut g, k, 3, 2, 2),
        random::split_frac(&mut g, k, 3, 2, 2),
        random::split_frac(&mut g, k, 3, 2, 2),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn division_ring_axioms(seed in any::<u64>(), big in any::<bool>()) {
        let k = if big { Tower::new(FieldConfig::gf343()).unwrap() } else { k25() };
        let (a, b, c) = frac(seed, &k);
        prop_assert_eq!(a.mul(&b, &k).mul(&c, &k), a.mul(&b.mul(&c, &k), &k));
        prop_assert_eq!(a.mul(&b.add(&c, &k), &k), a.mul(&b, &k).add(&a.mul(&c, &k), &k));
        prop_assert_eq!(b.add(&c, &k).mul(&a, &k), b.mul(&a, &k).add(&c.mul(&a, &k), &k));
        prop_assert_eq!(a.add(&b, &k), b.add(&a, &k));
        prop_assert!(a.sub(&a, &k).is_zero());
        let inv = a.inverse(&k).unwrap();
        prop_assert_eq!(a.mul(&inv, &k), SkewFrac::one());
        prop_assert_eq!(inv.mul(&a, &k), SkewFrac::one());
        prop_assert_eq!(a.div(&b, &k).unwrap().mul(&b, &k), a.clone());
    }

    #[test]
    fn normal_form_is_unique(seed in any::<u64>()) {
        let k = k25();
        let mut g = rng(seed);
        let f = random::split_frac(&mut g, &k, 3, 2, 2);
        let extra = random::central_poly(&mut g, &k, 2);
        let scaled = SkewFrac::new(
            f.num().mul(&SkewPoly::from_y_poly(&extra, &k), &k),
            f.den().mul(&extra, &k),
            &k,
        ).unwrap();
        prop_assert_eq!(&scaled, &f);
        prop_assert!(scaled.cross_eq(&f, &k));
    }

    #[test]
    fn degree_is_additive(seed in any::<u64>()) {
        let k = k25();
        let (a, b, _) = frac(seed, &k);
        prop_assert_eq!(a.mul(&b, &k).degree(&k), Some(a.degree(&k).unwrap() + b.degree(&k).unwrap()));
    }
}
