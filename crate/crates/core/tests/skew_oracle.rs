mod common;

use common::{configs, naive_skew_mul, rng, terms_of, NaiveField, Terms};
use proptest::prelude::*;
use rand::Rng;
use skewres_core::poly::{LPoly, Poly};
use skewres_core::random;
use skewres_core::skew_ring::{
    apply_derivation, apply_morphism, canonical_derivation, central_right_multiple, euclid, left_divide, right_divide,
    section, EuclidKind, SkewPoly,
};
use skewres_core::{Fe, FieldConfig, Tower};

fn k25() -> Tower {
    Tower::new(FieldConfig::gf25()).unwrap()
}

fn naive(a: &SkewPoly, b: &SkewPoly, nf: &NaiveField) -> Terms {
    naive_skew_mul(&terms_of(a), &terms_of(b), nf)
}

#[test]
fn x_times_scalar_is_frobenius_of_scalar() {
    for k in configs() {
        let nf = NaiveField::of(&k);
        for a in k.elements() {
            let lhs = SkewPoly::x().mul(&SkewPoly::constant(a), &k);
            assert_eq!(terms_of(&lhs), naive(&SkewPoly::x(), &SkewPoly::constant(a), &nf));
            let back = SkewPoly::monomial(Fe::ONE, -1).mul(&SkewPoly::constant(a), &k);
            assert_eq!(back.coeff(-1), nf.frob(a, -1));
        }
    }
}

#[test]
fn worked_division_example() {
    let k = k25();
    let g = k.gen();
    let a = SkewPoly::from_coeffs(vec![Fe::ONE, Fe::ONE, g]);
    let b = SkewPoly::from_coeffs(vec![k.neg(g), Fe::ONE]);
    let (q, r) = right_divide(&a, &b, &k).unwrap();
    assert_eq!(q, SkewPoly::from_coeffs(vec![k.from_int(4), g]));
    assert_eq!(r, SkewPoly::constant(k.from_coeffs(&[1, 4])));
}

#[test]
fn gcd_of_coprime_linear_factors_is_one() {
    let k = k25();
    let f = SkewPoly::from_coeffs(vec![k.from_int(-1), Fe::ONE]);
    let g = SkewPoly::from_coeffs(vec![k.from_int(-2), Fe::ONE]);
    for kind in [EuclidKind::Rgcd, EuclidKind::Lgcd] {
        assert!(euclid(kind, &f, &g, &k).unwrap().value.is_one());
    }
    assert!(euclid(EuclidKind::Rgcd, &SkewPoly::zero(), &SkewPoly::zero(), &k).is_err());
}

#[test]
fn central_multiple_of_x() {
    let k = k25();
    let (g, n) = central_right_multiple(&SkewPoly::x(), &k).unwrap();
    assert_eq!(g, SkewPoly::monomial(Fe::ONE, 1));
    assert_eq!(n, Poly::monomial(Fe::ONE, 1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_matches_term_by_term_twist(seed in any::<u64>(), cfg in 0usize..3) {
        let k = configs().swap_remove(cfg);
        let nf = NaiveField::of(&k);
        let mut g = rng(seed);
        let a = random::laurent(&mut g, &k, -4, 5);
        let b = random::laurent(&mut g, &k, -3, 4);
        prop_assert_eq!(terms_of(&a.mul(&b, &k)), naive(&a, &b, &nf));
    }

    #[test]
    fn divisions_reassemble_under_naive_product(seed in any::<u64>(), cfg in 0usize..3) {
        let k = configs().swap_remove(cfg);
        let nf = NaiveField::of(&k);
        let mut g = rng(seed);
        let a = random::skew_poly(&mut g, &k, 7);
        let b = random::nonzero_skew_poly(&mut g, &k, 4);
        let (q, r) = right_divide(&a, &b, &k).unwrap();
        let mut whole = naive(&q, &b, &nf);
        for (e, c) in terms_of(&r) {
            let slot = whole.entry(e).or_insert(Fe::ZERO);
            *slot = nf.add(*slot, c);
        }
        whole.retain(|_, c| !c.is_zero());
        prop_assert_eq!(whole, terms_of(&a));
        prop_assert!(r.is_zero() || r.degree() < b.degree());
        let (q, r) = left_divide(&a, &b, &k).unwrap();
        prop_assert_eq!(b.mul(&q, &k).add(&r, &k), a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn morphism_by_scalar_scales_by_twisted_norms(seed in any::<u64>()) {
        let k = k25();
        let nf = NaiveField::of(&k);
        let mut g = rng(seed);
        let c = random::nonzero_fe(&mut g, &k);
        let f = random::skew_poly(&mut g, &k, 6);
        let image = apply_morphism(&LPoly::constant(c), &f, &k).unwrap();
        for (i, a) in terms_of(&f) {
            let norm = (0..i).fold(Fe::ONE, |acc, l| nf.mul(acc, nf.frob(c, l)));
            prop_assert_eq!(image.coeff(i), nf.mul(a, norm));
        }
        let trace_image = apply_derivation(&LPoly::constant(c), &f, &k);
        for (i, a) in terms_of(&f) {
            let trace = (0..i).fold(Fe::ZERO, |acc, l| nf.add(acc, nf.frob(c, l)));
            prop_assert_eq!(trace_image.coeff(i), nf.mul(a, trace));
        }
    }

    #[test]
    fn sections_collect_residue_classes_of_exponents(seed in any::<u64>(), j in -4i64..5) {
        let k = Tower::new(FieldConfig::gf343()).unwrap();
        let mut g = rng(seed);
        let f = random::laurent(&mut g, &k, -6, 9);
        let s = section(&f, j, &k);
        for i in -4..5i64 {
            prop_assert_eq!(s.coeff(i), f.coeff(j + 3 * i));
        }
    }

    #[test]
    fn canonical_derivation_is_scaled_exponent_shift(seed in any::<u64>()) {
        let k = k25();
        let mut g = rng(seed);
        let f = random::laurent(&mut g, &k, -5, 6);
        let d = canonical_derivation(&f, &k).unwrap();
        let half = k.inv(k.from_int(2));
        for e in -8..8i64 {
            let expected = k.mul(half, k.mul(k.from_int(e + 2), f.coeff(e + 2)));
            prop_assert_eq!(d.coeff(e), expected);
        }
    }

    #[test]
    fn right_gcd_generates_both_inputs(seed in any::<u64>()) {
        let k = k25();
        let mut g = rng(seed);
        let h = random::nonzero_skew_poly(&mut g, &k, 2);
        let f = random::nonzero_skew_poly(&mut g, &k, 3).mul(&h, &k);
        let gg = random::nonzero_skew_poly(&mut g, &k, 3).mul(&h, &k);
        let d = euclid(EuclidKind::Rgcd, &f, &gg, &k).unwrap();
        prop_assert_eq!(d.u.mul(&f, &k).add(&d.v.mul(&gg, &k), &k), d.value.clone());
        prop_assert!(right_divide(&f, &d.value, &k).unwrap().1.is_zero());
        prop_assert!(right_divide(&gg, &d.value, &k).unwrap().1.is_zero());
        prop_assert!(right_divide(&d.value, &h, &k).unwrap().1.is_zero());
    }

    #[test]
    fn central_multiple_annihilates_commutator(seed in any::<u64>()) {
        let k = Tower::new(FieldConfig::gf343()).unwrap();
        let mut g = rng(seed);
        let f = random::nonzero_skew_poly(&mut g, &k, 4);
        let (cof, n) = central_right_multiple(&f, &k).unwrap();
        let ns = SkewPoly::from_y_poly(&n, &k);
        prop_assert_eq!(f.mul(&cof, &k), ns.clone());
        let a = SkewPoly::constant(Fe(g.gen_range(0..k.size())));
        prop_assert_eq!(a.mul(&ns, &k), ns.mul(&a, &k));
        prop_assert!(n.is_in_base(&k));
    }
}
