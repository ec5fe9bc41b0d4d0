mod common;

use common::{naive_skew_mul, rng, root_series_power, terms_of, NaiveField, Terms};
use proptest::prelude::*;
use skewres_core::fractions::SkewFrac;
use skewres_core::poly::Poly;
use skewres_core::random;
use skewres_core::residues::{residue_sum, sres, sres_infinity, sres_zero, Point};
use skewres_core::skew_ring::SkewPoly;
use skewres_core::taylor::{expand, hensel_lift, Method};
use skewres_core::{Fe, FieldConfig, Tower};

fn towers() -> Vec<Tower> {
    vec![Tower::new(FieldConfig::gf25()).unwrap(), Tower::new(FieldConfig::gf343()).unwrap()]
}

fn binom(n: u64, i: u64, p: u64) -> u64 {
    (0..i).fold(1u128, |acc, l| acc * (n - l) as u128 / (l + 1) as u128) as u64 % p
}

#[test]
fn powers_of_y_expand_binomially() {
    for k in towers() {
        let p = k.p() as u64;
        for z in k.base_elements().skip(1) {
            for n in 0..6u64 {
                let f = SkewFrac::from_skew(SkewPoly::monomial(Fe::ONE, (n as usize * k.r()) as i64));
                for method in [Method::Canonical, Method::Hensel] {
                    let s = expand(&f, z, method, 8, &k).unwrap();
                    for i in 0..8u64 {
                        let c = s.coeff(i as i64);
                        let expected = if i <= n {
                            k.mul(k.from_int(binom(n, i, p) as i64), k.pow(z, (n - i) as i64))
                        } else {
                            Fe::ZERO
                        };
                        assert_eq!(c.component(0), expected, "z = {z:?}, n = {n}, i = {i}");
                        assert!((1..k.r()).all(|j| c.component(j).is_zero()));
                    }
                }
            }
        }
    }
}

#[test]
fn canonical_image_of_x_is_root_series() {
    for k in towers() {
        let p = k.p() as u64;
        let c = root_series_power(p, k.r(), 1, 7);
        for z in k.base_elements().skip(1) {
            let s = expand(&SkewFrac::from_skew(SkewPoly::x()), z, Method::Canonical, 8, &k).unwrap();
            for (n, &cn) in c.iter().enumerate() {
                let expected = k.mul(k.from_int(cn as i64), k.pow(k.inv(z), n as i64));
                let coeff = s.coeff(n as i64);
                assert_eq!(coeff.component(1), expected);
                assert!((0..k.r()).filter(|&j| j != 1).all(|j| coeff.component(j).is_zero()));
            }
        }
    }
}

#[test]
fn hensel_lift_makes_cx_an_rth_root_of_z() {
    for k in towers() {
        let nf = NaiveField::of(&k);
        for z in k.base_elements().skip(1) {
            let m = 7;
            let lift = hensel_lift(z, m, &k).unwrap();
            // N(C) as a series, using Frobenius by repeated powering
            let mut norm = vec![Fe::ZERO; m];
            norm[0] = Fe::ONE;
            for i in 0..k.r() as i64 {
                let conj: Vec<Fe> = lift.c.iter().map(|&a| nf.frob(a, i)).collect();
                let mut next = vec![Fe::ZERO; m];
                for (a, x) in norm.iter().enumerate() {
                    for (b, y) in conj.iter().enumerate().take(m - a) {
                        next[a + b] = nf.add(next[a + b], nf.mul(*x, *y));
                    }
                }
                norm = next;
            }
            // (C·X)^r = N(C)·Y must equal z, so N(C) = z/(z+t) = Σ (−t/z)^n
            let expected: Vec<Fe> = (0..m as i64).map(|n| k.pow(k.neg(nf.inv(z)), n)).collect();
            assert_eq!(norm, expected);
        }
    }
}

#[test]
fn worked_breakdown() {
    let k = Tower::new(FieldConfig::gf25()).unwrap();
    let den = Poly::from_ints(&[2, -3, 1], &k);
    let f = SkewFrac::new(SkewPoly::x(), den, &k).unwrap();
    let s = residue_sum(&f, 1, &k).unwrap();
    assert_eq!(s.sum, Fe::ZERO);
    let expected = vec![
        (Point::Finite(Fe::ONE), k.from_int(4)),
        (Point::Finite(k.from_int(2)), Fe::ONE),
        (Point::Zero, Fe::ZERO),
        (Point::Infinity, Fe::ZERO),
    ];
    assert_eq!(s.breakdown, expected);
}

fn add_terms(a: &mut Terms, b: &Terms, nf: &NaiveField) {
    for (&e, &c) in b {
        let slot = a.entry(e).or_insert(Fe::ZERO);
        *slot = nf.add(*slot, c);
    }
    a.retain(|_, c| !c.is_zero());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// At a simple pole `f = g/((Y−z)h)` the residue is the class of `g/h(z)`,
    /// whose `j`-th coordinate is `Σ_i g_{j+ir} z^i / h(z)`.
    #[test]
    fn simple_pole_residue_is_class_of_numerator(seed in any::<u64>(), cfg in 0usize..2) {
        let k = towers().swap_remove(cfg);
        let mut g = rng(seed);
        let z = random::nonzero_base_fe(&mut g, &k);
        let num = random::skew_poly(&mut g, &k, 7);
        let h = loop {
            let h = random::central_poly(&mut g, &k, 2);
            if !h.eval(z, &k).is_zero() && !h.eval(Fe::ZERO, &k).is_zero() { break h; }
        };
        let f = SkewFrac::new(num.clone(), Poly::linear(z, &k).mul(&h, &k), &k).unwrap();
        let hz = k.inv(h.eval(z, &k));
        let r = k.r() as i64;
        let expected: Vec<Fe> = (0..r).map(|j| {
            let s = (0..8i64).fold(Fe::ZERO, |acc, i| k.add(acc, k.mul(num.coeff(j + i * r), k.pow(z, i))));
            k.mul(s, hz)
        }).collect();
        for method in [Method::Canonical, Method::Hensel] {
            prop_assert_eq!(&sres(&f, z, method, &k).unwrap().partial, &expected);
        }
    }

    /// For central `f = n/d` with simple poles, `res = n(z)/d'(z)` and at
    /// infinity `−` the coefficient of `1/Y` in the Laurent expansion.
    #[test]
    fn central_residues_follow_classical_formulas(seed in any::<u64>()) {
        let k = Tower::new(FieldConfig::gf343()).unwrap();
        let mut g = rng(seed);
        let d = random::split_den(&mut g, &k, 3, 1);
        let n = random::central_poly(&mut g, &k, 4);
        let f = SkewFrac::new(SkewPoly::from_y_poly(&n, &k), d.clone(), &k).unwrap();
        for z in k.base_elements().skip(1) {
            let rec = sres(&f, z, Method::Canonical, &k).unwrap();
            let expected = if d.eval(z, &k).is_zero() { k.div(n.eval(z, &k), d.deriv(&k).eval(z, &k)) } else { Fe::ZERO };
            prop_assert_eq!(rec.partial[0], expected);
            prop_assert!(rec.partial[1..].iter().all(|c| c.is_zero()));
        }
        // at infinity: n/d = Σ c_i Y^i + c_{−1}/Y + ...; long division gives c_{−1}
        let dn = d.degree().unwrap() as i64;
        let nn = n.degree().unwrap() as i64;
        let c_minus_one = if nn - dn == -1 { k.div(n.lead(), d.lead()) } else if nn < dn { Fe::ZERO } else {
            let (_, rem) = n.divrem(&d, &k).unwrap();
            if rem.degree().map(|e| e as i64) == Some(dn - 1) { k.div(rem.lead(), d.lead()) } else { Fe::ZERO }
        };
        prop_assert_eq!(sres_infinity(&f, 0, &k).unwrap(), k.neg(c_minus_one));
    }

    /// At `0` the residue reads off the coefficient of `X^{j−r}`, checked on
    /// `g·X^{−2r}` through the naive product.
    #[test]
    fn residue_at_zero_reads_shifted_coefficient(seed in any::<u64>(), j in 0i64..2) {
        let k = Tower::new(FieldConfig::gf25()).unwrap();
        let nf = NaiveField::of(&k);
        let mut g = rng(seed);
        let num = random::skew_poly(&mut g, &k, 6);
        let f = SkewFrac::new(num.clone(), Poly::monomial(Fe::ONE, 2), &k).unwrap();
        let mut prod = Terms::new();
        add_terms(&mut prod, &naive_skew_mul(&terms_of(&num), &terms_of(&SkewPoly::monomial(Fe::ONE, -4)), &nf), &nf);
        let expected = prod.get(&(j - 2)).copied().unwrap_or(Fe::ZERO);
        prop_assert_eq!(sres_zero(&f, j, &k).unwrap(), expected);
    }
}
