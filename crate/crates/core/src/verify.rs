//! Randomized property suites over a configured tower.
//!
//! Each check draws its instances from a ChaCha stream seeded by the caller's
//! seed mixed with the check name, so a check's instances do not depend on
//! which other checks run.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::commutative_oracle::Point;
use crate::error::{Error, Result};
use crate::field_tower::{Fe, Tower};
use crate::fractions::{apply_morphism_frac, SkewFrac};
use crate::poly::{LPoly, Poly, RatFn};
use crate::random;
use crate::residues::{bridge_check, chvar_check, gamma_star, residue_sum, zeta_root_check};
use crate::skew_ring::{
    apply_derivation, apply_morphism, canonical_derivation, canonical_divided_power, central_right_multiple, euclid,
    from_sections, left_divide, right_divide, section, twisted_norm, EuclidKind, SkewPoly,
};
use crate::taylor::{
    canonical_lift, evaluate_series, expand, expand_admissible, expand_canonical, hensel_lift, Method, QElem,
    TaylorSeries,
};

/// The tally of one property check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub trials: usize,
    pub failures: usize,
    pub skipped: usize,
    pub first_failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.trials > 0
    }
}

/// The verdict on a single random instance.
pub enum Trial {
    Pass,
    Fail(String),
    Skip,
}

fn verdict(ok: bool, what: impl FnOnce() -> String) -> Trial {
    if ok {
        Trial::Pass
    } else {
        Trial::Fail(what())
    }
}

fn rng_for(name: &str, seed: u64) -> ChaCha8Rng {
    let mix = name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3));
    ChaCha8Rng::seed_from_u64(seed ^ mix)
}

/// Runs `body` until `trials` instances were applicable (skips are retried
/// up to a bounded number of times).
pub fn run_check(
    name: &str,
    seed: u64,
    trials: usize,
    mut body: impl FnMut(&mut ChaCha8Rng) -> Result<Trial>,
) -> CheckOutcome {
    let mut rng = rng_for(name, seed);
    let mut out = CheckOutcome { name: name.to_string(), trials: 0, failures: 0, skipped: 0, first_failure: None };
    let max_attempts = trials * 20 + 100;
    let mut attempts = 0;
    while out.trials < trials && attempts < max_attempts {
        attempts += 1;
        match body(&mut rng) {
            Ok(Trial::Pass) => out.trials += 1,
            Ok(Trial::Skip) => out.skipped += 1,
            Ok(Trial::Fail(msg)) => {
                out.trials += 1;
                out.failures += 1;
                out.first_failure.get_or_insert(msg);
            }
            Err(e) => {
                out.trials += 1;
                out.failures += 1;
                out.first_failure.get_or_insert(format!("unexpected error: {e}"));
            }
        }
    }
    out
}

fn deg_lt(r: &SkewPoly, b: &SkewPoly) -> bool {
    r.is_zero() || r.degree() < b.degree()
}

/// Both divisions multiply back, remainders are small, and perturbing the
/// quotient never yields another valid remainder.
pub fn euclidean_division(k: &Tower, seed: u64, trials: usize) -> CheckOutcome {
    run_check("euclidean division", seed, trials, |rng| {
        let a = random::skew_poly(rng, k, 8);
        let b = random::nonzero_skew_poly(rng, k, 5);
        let delta = random::nonzero_skew_poly(rng, k, 2);
        let (q, r) = right_divide(&a, &b, k)?;
        if q.mul(&b, k).add(&r, k) != a || !deg_lt(&r, &b) {
            return Ok(Trial::Fail(format!("right division of {a:?} by {b:?}")));
        }
        if deg_lt(&a.sub(&q.add(&delta, k).mul(&b, k), k), &b) {
            return Ok(Trial::Fail("right quotient not unique".into()));
        }
        let (q, r) = left_divide(&a, &b, k)?;
        if b.mul(&q, k).add(&r, k) != a || !deg_lt(&r, &b) {
            return Ok(Trial::Fail(format!("left division of {a:?} by {b:?}")));
        }
        Ok(verdict(!deg_lt(&a.sub(&b.mul(&q.add(&delta, k), k), k), &b), || "left quotient not unique".into()))
    })
}

fn divides_right(d: &SkewPoly, f: &SkewPoly, k: &Tower) -> Result<bool> {
    Ok(right_divide(f, d, k)?.1.is_zero())
}

fn divides_left(d: &SkewPoly, f: &SkewPoly, k: &Tower) -> Result<bool> {
    Ok(left_divide(f, d, k)?.1.is_zero())
}

/// Bézout identities and lcm properties for all four kinds.
pub fn ideals(k: &Tower, seed: u64, trials: usize) -> CheckOutcome {
    run_check("ideals", seed, trials, |rng| {
        let h = random::nonzero_skew_poly(rng, k, 2);
        let (a, b) = (random::nonzero_skew_poly(rng, k, 3), random::nonzero_skew_poly(rng, k, 3));
        let monic = |p: &SkewPoly| p.lead() == Fe::ONE;
        // common right factor
        let (f, g) = (a.mul(&h, k), b.mul(&h, k));
        let d = euclid(EuclidKind::Rgcd, &f, &g, k)?;
        let ok = d.u.mul(&f, k).add(&d.v.mul(&g, k), k) == d.value
            && monic(&d.value)
            && divides_right(&d.value, &f, k)?
            && divides_right(&d.value, &g, k)?
            && divides_right(&h, &d.value, k)?;
        if !ok {
            return Ok(Trial::Fail(format!("rgcd of {f:?}, {g:?}")));
        }
        let m = euclid(EuclidKind::Llcm, &f, &g, k)?;
        let ok = m.u.mul(&f, k) == m.value
            && m.v.mul(&g, k) == m.value
            && monic(&m.value)
            && divides_right(&f, &m.value, k)?
            && divides_right(&g, &m.value, k)?
            && m.value.degree().unwrap() == f.degree().unwrap() + g.degree().unwrap() - d.value.degree().unwrap();
        if !ok {
            return Ok(Trial::Fail(format!("llcm of {f:?}, {g:?}")));
        }
        // common left factor
        let (f, g) = (h.mul(&a, k), h.mul(&b, k));
        let d = euclid(EuclidKind::Lgcd, &f, &g, k)?;
        let ok = f.mul(&d.u, k).add(&g.mul(&d.v, k), k) == d.value
            && monic(&d.value)
            && divides_left(&d.value, &f, k)?
            && divides_left(&d.value, &g, k)?
            && divides_left(&h, &d.value, k)?;
        if !ok {
            return Ok(Trial::Fail(format!("lgcd of {f:?}, {g:?}")));
        }
        let m = euclid(EuclidKind::Rlcm, &f, &g, k)?;
        let ok = f.mul(&m.u, k) == m.value
            && g.mul(&m.v, k) == m.value
            && monic(&m.value)
            && divides_left(&f, &m.value, k)?
            && divides_left(&g, &m.value, k)?
            && m.value.degree().unwrap() == f.degree().unwrap() + g.degree().unwrap() - d.value.degree().unwrap();
        Ok(verdict(ok, || format!("rlcm of {f:?}, {g:?}")))
    })
}

/// `f·g = N = g·f` with `N ∈ F[Y]` monic, central, of degree at most `deg f`.
pub fn central_bound(k: &Tower, seed: u64, trials: usize) -> CheckOutcome {
    run_check("central bound", seed, trials, |rng| {
        let f = random::nonzero_skew_poly(rng, k, 5);
        let (g, n) = central_right_multiple(&f, k)?;
        let ns = SkewPoly::from_y_poly(&n, k);
        let a = SkewPoly::constant(random::fe(rng, k));
        let ok = f.mul(&g, k) == ns
            && g.mul(&f, k) == ns
            && n.is_in_base(k)
            && n.lead() == Fe::ONE
            && n.degree().unwrap() as i64 <= f.degree().unwrap()
            && SkewPoly::x().mul(&ns, k) == ns.mul(&SkewPoly::x(), k)
            && a.mul(&ns, k) == ns.mul(&a, k);
        Ok(verdict(ok, || format!("central multiple of {f:?}")))
    })
}

/// The section lemma: reconstruction, right and left multiplication rules,
/// and the shift by `r`.
pub fn sections(k: &Tower, seed: u64, trials: usize) -> CheckOutcome {
    run_check("sections", seed, trials, |rng| {
        let f = random::laurent(rng, k, -4, 6);
        let c = random::coef_poly(rng, k, 2).shift(rng.gen_range(-1..=1));
        let j = rng.gen_range(-3..=3i64);
        let r = k.r() as i64;
        let x = SkewPoly::x();
        let secs: Vec<LPoly> = (0..r).map(|i| section(&f, i, k)).collect();
        let cs = SkewPoly::from_coef(&c, k);
        let checks = [
            from_sections(&secs, k) == f,
            section(&f.mul(&cs, k), j, k) == section(&f, j, k).mul(&c.frob(j, k), k),
            section(&f.mul(&x, k), j, k) == section(&f, j - 1, k),
            section(&cs.mul(&f, k), j, k) == c.mul(&section(&f, j, k), k),
            section(&x.mul(&f, k), j, k) == section(&f, j - 1, k).frob(1, k),
            section(&f, j - r, k) == section(&f, j, k).shift(1),
        ];
        Ok(verdict(checks.iter().all(|&b| b), || format!("section identities {checks:?} for {f:?}, j = {j}")))
    })
}

/// `γ_C` is multiplicative on polynomials and on fractions.
pub fn morphism_law(k: &Tower, seed: u64, trials: usize) -> CheckOutcome {
    run_check("morphism law", seed, trials, |rng| {
        let c = random::coef_poly(rng, k, 2);
        let (f, g) = (random::skew_poly(rng, k, 4), random::skew_poly(rng, k, 4));
        let lhs = apply_morphism(&c, &f.mul(&g, k), k)?;
        let rhs = apply_morphism(&c, &f, k)?.mul(&apply_morphism(&c, &g, k)?, k);
        if lhs != rhs {
            return Ok(Trial::Fail(format!("polynomial morphism with C = {c:?}")));
        }
        let cr = random::coef_ratfn(rng, k, 1);
        let (f, g) = (random::split_frac(rng, k, 3, 2, 2), random::split_frac(rng, k, 3, 2, 2));
        let lhs = apply_morphism_frac(&cr, &f.mul(&g, k), k)?;
        let rhs = apply_morphism_frac(&cr, &f, k)?.mul(&apply_morphism_frac(&cr, &g, k)?, k);
        Ok(verdict(lhs == rhs, || format!("fraction morphism with C = {cr:?}")))
    })
}

/// `∂_C(fg) = ∂_C(f)·g + f·∂_C(g)`.
pub fn derivation_law(k: &Tower, seed: u64, trials: usize) -> CheckOutcome {
    run_check("derivation law", seed, trials, |rng| {
        let c = random::coef_poly(rng, k, 2).shift(rng.gen_range(-1..=1));
        let (f, g) = (random::laurent(rng, k, -3, 4), random::laurent(rng, k, -3, 4));
        let lhs = apply_derivation(&c, &f.mul(&g, k), k);
        let rhs = apply_derivation(&c, &f, k).mul(&g, k).add(&f.mul(&apply_derivation(&c, &g, k), k), k);
        Ok(verdict(lhs == rhs, || format!("Leibniz rule for C = {c:?}")))
    })
}

/// `N_{j+j'}(C) = N_j(C)·θ^j(N_{j'}(C))`.
pub fn norm_cocycle(k: &Tower, seed: u64, trials: usize) -> CheckOutcome {
    run_check("norm cocycle", seed, trials, |rng| {
        let c = random::coef_ratfn(rng, k, 2);
        let (j, jj) = (rng.gen_range(-3..=3i64), rng.gen_range(-3..=3i64));
        let lhs = twisted_norm(&c, j + jj, k)?;
        let rhs = twisted_norm(&c, j, k)?.mul(&twisted_norm(&c, jj, k)?.frob(j, k), k);
        Ok(verdict(lhs == rhs, || format!("cocycle for j = {j}, j' = {jj}")))
    })
}

/// `sec_j ∘ γ_C = N_j(C)·(γ_C ∘ sec_j)` where `γ_C` acts on `K(Y)` by `Y ↦ N_r(C)·Y`.
pub fn section_commutation(k: &Tower, seed: u64, trials: usize) -> CheckOutcome {
    run_check("section commutation", seed, trials, |rng| {
        let c = random::coef_ratfn(rng, k, 1);
        let f = random::laurent(rng, k, -3, 5);
        let j = rng.gen_range(-3..=3i64);
        let lhs = apply_morphism_frac(&c, &SkewFrac::from_skew(f.clone()), k)?.section(j, k);
        let zc = twisted_norm(&c, k.r() as i64, k)?.mul(&RatFn::variable(), k);
        let mut image = RatFn::zero();
        for (e, a) in section(&f, j, k).terms() {
            if !a.is_zero() {
                image = image.add(&zc.pow(e, k)?.scale(a, k), k);
            }
        }
        let rhs = twisted_norm(&c, j, k)?.mul(&image, k);
        Ok(verdict(lhs == rhs, || format!("commutation for j = {j}")))
    })
}

/// `∂_can` applied `p` times vanishes.
pub fn canonical_nilpotent(k: &Tower, seed: u64, trials: usize) -> CheckOutcome {
    run_check("canonical derivation nilpotent", seed, trials, |rng| {
        let r = k.r() as i64;
        let f = random::laurent(rng, k, -2 * r, 3 * r);
        let mut d = f.clone();
        for _ in 0..k.p() {
            d = canonical_derivation(&d, k)?;
        }
        Ok(verdict(d.is_zero(), || format!("∂^p of {f:?} is {d:?}")))
    })
}

fn binomial_mod(n: u64, m: u64, k: &Tower) -> Fe {
    let mut acc = 1u128;
    for i in 0..m {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    k.from_int((acc % k.p() as u128) as i64)
}

/// `∂^{[m]} ∘ ∂^{[n]} = binom(m+n, n)·∂^{[m+n]}` on monomials, `m + n ≤ 2p`.
pub fn divided_power_composition(k: &Tower) -> CheckOutcome {
    let p = k.p() as u64;
    let r = k.r() as i64;
    let cases: Vec<(u64, u64, i64)> =
        (0..=2 * p).flat_map(|m| (0..=2 * p - m).flat_map(move |n| (-2 * r..=3 * r).map(move |i| (m, n, i)))).collect();
    let total = cases.len();
    let mut iter = cases.into_iter();
    run_check("divided power composition", 0, total, |_| {
        let Some((m, n, i)) = iter.next() else { return Ok(Trial::Skip) };
        let x = SkewPoly::monomial(Fe::ONE, i);
        let lhs = canonical_divided_power(&canonical_divided_power(&x, n, k)?, m, k)?;
        let rhs = canonical_divided_power(&x, m + n, k)?.scale_left(binomial_mod(m + n, n, k), k);
        Ok(verdict(lhs == rhs, || format!("composition m = {m}, n = {n} on X^{i}")))
    })
}

/// When `p | r` every canonical construction refuses with `CharacteristicDividesR`.
pub fn characteristic_restriction(k: &Tower) -> CheckOutcome {
    let mut done = false;
    run_check("characteristic restriction", 0, 1, |_| {
        if done {
            return Ok(Trial::Skip);
        }
        done = true;
        let expected = Error::CharacteristicDividesR { p: k.p(), r: k.r() };
        let z = Fe::ONE;
        let f = SkewFrac::from_skew(SkewPoly::x());
        let refusals = [
            canonical_derivation(&SkewPoly::x(), k).err(),
            k.binomial_fraction_coeffs(1, 3).err(),
            expand_canonical(&f, z, 2, k).err(),
            canonical_lift(z, 2, k).err(),
            zeta_root_check(&f, 0, z, k).err(),
        ];
        Ok(verdict(refusals.iter().all(|e| e.as_ref() == Some(&expected)), || format!("{refusals:?}")))
    })
}

fn methods(k: &Tower) -> Vec<Method> {
    if k.inv_r().is_ok() {
        vec![Method::Canonical, Method::Hensel]
    } else {
        vec![Method::Hensel]
    }
}

fn agree_to_common_precision(a: &TaylorSeries, b: &TaylorSeries) -> bool {
    let prec = a.prec().min(b.prec());
    a.truncate(prec) == b.truncate(prec)
}

fn random_point<R: Rng>(rng: &mut R, k: &Tower) -> Fe {
    random::nonzero_base_fe(rng, k)
}

/// Expansions are multiplicative to precision 6 for every available method.
pub fn taylor_multiplicative(k: &Tower, seed: u64, trials: usize) -> CheckOutcome {
    run_check("taylor multiplicative", seed, trials, |rng| {
        let z = random_point(rng, k);
        let f = if rng.gen_bool(0.5) {
            {
                let e = rng.gen_range(1..=2);
                random::frac_with_pole(rng, k, z, e, 4)
            }
        } else {
            random::split_frac(rng, k, 4, 2, 2)
        };
        let g = random::split_frac(rng, k, 4, 2, 2);
        for method in methods(k) {
            let prod = expand(&f, z, method, 6, k)?.mul(&expand(&g, z, method, 6, k)?, k)?;
            let direct = expand(&f.mul(&g, k), z, method, 6, k)?;
            if !agree_to_common_precision(&prod, &direct) {
                return Ok(Trial::Fail(format!("{method:?} expansion not multiplicative at z = {}", z.0)));
            }
        }
        Ok(Trial::Pass)
    })
}

fn class(components: Vec<Fe>, z: Fe) -> QElem {
    QElem::class(components, z)
}

/// `Y ↦ z + T` and `N ↦ T` for every method.
pub fn taylor_generators(k: &Tower, seed: u64, trials: usize) -> CheckOutcome {
    run_check("taylor generators", seed, trials, |rng| {
        let z = random_point(rng, k);
        let r = k.r();
        let mut unit = vec![Fe::ZERO; r];
        unit[0] = Fe::ONE;
        let mut zc = vec![Fe::ZERO; r];
        zc[0] = z;
        let y = SkewFrac::from_skew(SkewPoly::monomial(Fe::ONE, r as i64));
        let n = SkewFrac::from_skew(SkewPoly::from_y_poly(&Poly::linear(z, k), k));
        for method in methods(k) {
            let sy = expand(&y, z, method, 6, k)?;
            let sn = expand(&n, z, method, 6, k)?;
            let ty: Vec<(i64, QElem)> = sy.terms().map(|(e, c)| (e, c.clone())).collect();
            let tn: Vec<(i64, QElem)> = sn.terms().map(|(e, c)| (e, c.clone())).collect();
            if ty != vec![(0, class(zc.clone(), z)), (1, class(unit.clone(), z))]
                || tn != vec![(1, class(unit.clone(), z))]
            {
                return Ok(Trial::Fail(format!("{method:?} images of Y and N at z = {}", z.0)));
            }
        }
        Ok(Trial::Pass)
    })
}

/// Hensel lifts make `C·X` a root of `N` modulo `N^m`, `m ≤ 6`, with
/// `C ≡ 1` and `C − 1 ∈ a·F[[t]]`.
pub fn hensel_roots(k: &Tower, seed: u64, trials: usize) -> CheckOutcome {
    run_check("hensel lift", seed, trials, |rng| {
        let z = random_point(rng, k);
        let m = rng.gen_range(1..=6);
        let lift = hensel_lift(z, m, k)?;
        let a = lift.trace_one.expect("hensel lifts record a");
        let root = lift.root(k).pow(k.r() as u32, k)?;
        let ok = root == QElem::constant(z, z, m, k)
            && lift.c[0] == Fe::ONE
            && lift.c[1..].iter().all(|&c| k.is_in_base(k.div(c, a)));
        Ok(verdict(ok, || format!("hensel lift at z = {}, m = {m}", z.0)))
    })
}

/// Evaluating the expansion at `T = N`, `X ↦ C·X` recovers `f mod N^m`.
pub fn taylor_round_trip(k: &Tower, seed: u64, trials: usize) -> CheckOutcome {
    run_check("taylor round trip", seed, trials, |rng| {
        let z = random_point(rng, k);
        let m = rng.gen_range(1..=6);
        let f = random::laurent(rng, k, -2, 7);
        let mut lifts = vec![hensel_lift(z, m, k)?];
        if k.inv_r().is_ok() {
            lifts.push(canonical_lift(z, m, k)?);
        }
        for lift in lifts {
            let series = expand_admissible(&SkewFrac::from_skew(f.clone()), &lift, m as i64, k)?;
            if evaluate_series(&series, &lift, k)? != QElem::from_skew(&f, z, m, k) {
                return Ok(Trial::Fail(format!("round trip at z = {}, m = {m}", z.0)));
            }
        }
        Ok(Trial::Pass)
    })
}

/// The canonical expansion equals the admissible expansion through the
/// canonical lift, and `τ_can(X)` is a central series times `X` whose
/// `r`-th power is `z + T`.
pub fn canonical_consistency(k: &Tower, seed: u64, trials: usize) -> CheckOutcome {
    run_check("canonical consistency", seed, trials, |rng| {
        let z = random_point(rng, k);
        let f = random::split_frac(rng, k, 4, 2, 2);
        let kk = f.pole_multiplicity(z, k) as i64;
        let lift = canonical_lift(z, (6 + kk) as usize, k)?;
        if expand_admissible(&f, &lift, 6, k)? != expand_canonical(&f, z, 6, k)? {
            return Ok(Trial::Fail(format!("two canonical routes differ at z = {}", z.0)));
        }
        let sx = expand_canonical(&SkewFrac::from_skew(SkewPoly::x()), z, 6, k)?;
        let central_times_x = sx.terms().all(|(_, c)| {
            let comps = c.components();
            comps.iter().enumerate().all(|(j, &v)| if j == 1 % k.r() { k.is_in_base(v) } else { v.is_zero() })
        });
        let mut power = sx.clone();
        for _ in 1..k.r() {
            power = power.mul(&sx, k)?;
        }
        let expected =
            expand(&SkewFrac::from_skew(SkewPoly::monomial(Fe::ONE, k.r() as i64)), z, Method::Canonical, 6, k)?;
        Ok(verdict(central_times_x && power == expected, || format!("canonical image of X at z = {}", z.0)))
    })
}

/// `ord(fg) ≥ ord f + ord g`, with equality when the principal parts do not
/// multiply to zero.
pub fn order_additivity(k: &Tower, seed: u64, trials: usize) -> CheckOutcome {
    run_check("order additivity", seed, trials, |rng| {
        let z = random_point(rng, k);
        let f = {
            let e = rng.gen_range(1..=2);
            random::frac_with_pole(rng, k, z, e, 4)
        };
        let g = random::split_frac(rng, k, 4, 2, 2);
        let method = methods(k)[0];
        let sf = expand(&f, z, method, 4, k)?;
        let sg = expand(&g, z, method, 4, k)?;
        let sfg = expand(&f.mul(&g, k), z, method, 4, k)?;
        let (Ok(of), Ok(og)) = (sf.order_and_principal(), sg.order_and_principal()) else { return Ok(Trial::Skip) };
        let lead = class(of.principal.clone(), z).mul(&class(og.principal.clone(), z), k)?;
        let ofg = sfg.order_and_principal().map(|o| o.ord).unwrap_or(sfg.prec());
        let ok = ofg >= of.ord + og.ord && (lead.is_zero() || ofg == of.ord + og.ord);
        Ok(verdict(ok, || format!("orders {} + {} vs {ofg}", of.ord, og.ord)))
    })
}

/// Orders, principal parts and the `0`-th section of the expansion do not
/// depend on the choice between canonical and Hensel expansions.
pub fn choice_invariance(k: &Tower, seed: u64, trials: usize) -> CheckOutcome {
    run_check("choice invariance", seed, trials, |rng| {
        let z = random_point(rng, k);
        let f = if rng.gen_bool(0.8) {
            {
                let e = rng.gen_range(1..=3);
                random::frac_with_pole(rng, k, z, e, 5)
            }
        } else {
            random::split_frac(rng, k, 5, 2, 2)
        };
        let prec = crate::taylor::default_precision(&f, z, k) + 2;
        let a = expand(&f, z, Method::Canonical, prec, k)?;
        let b = expand(&f, z, Method::Hensel, prec, k)?;
        let sec0 = |s: &TaylorSeries| -> Vec<(i64, Fe)> {
            s.terms().map(|(n, c)| (n, c.component(0))).filter(|(_, c)| !c.is_zero()).collect()
        };
        let ok = a.order_and_principal() == b.order_and_principal() && sec0(&a) == sec0(&b);
        Ok(verdict(ok, || format!("choice dependence for f = {f:?} at z = {}", z.0)))
    })
}

/// Partial skew residues against classical residues of sections.
pub fn bridge(k: &Tower, seed: u64, trials: usize) -> CheckOutcome {
    run_check("bridge", seed, trials, |rng| {
        let f = random::split_frac(rng, k, 5, 3, 2);
        let roots = crate::commutative_oracle::split_roots(f.den(), k)?;
        let point = match rng.gen_range(0..4) {
            0 => Point::Zero,
            1 => Point::Infinity,
            2 if !roots.is_empty() => Point::Finite(roots[rng.gen_range(0..roots.len())].0),
            _ => Point::Finite(random_point(rng, k)),
        };
        let j = rng.gen_range(0..k.r() as i64);
        match bridge_check(&f, point, j, k) {
            Err(Error::SimplePoleRequired { .. }) => Ok(Trial::Skip),
            Err(e) => Err(e),
            Ok(rep) => Ok(verdict(rep.equal, || format!("bridge at {point}, j = {j}: {rep:?}"))),
        }
    })
}

/// `Σ_z sres_{z,0}(f) = 0` with poles of order up to 3.
pub fn residue_theorem_zero(k: &Tower, seed: u64, trials: usize) -> CheckOutcome {
    run_check("residue theorem j = 0", seed, trials, |rng| {
        let f = random::split_frac(rng, k, 6, 3, 3);
        let s = residue_sum(&f, 0, k)?;
        Ok(verdict(s.sum.is_zero(), || format!("sum {:?} for {f:?}", s.breakdown)))
    })
}

/// `Σ_z sres_{z,j}(f) = 0` for every `j` when the finite poles are simple.
pub fn residue_theorem_all(k: &Tower, seed: u64, trials: usize) -> CheckOutcome {
    run_check("residue theorem all j", seed, trials, |rng| {
        let f = random::split_frac(rng, k, 6, 3, 1);
        for j in 0..k.r() as i64 {
            let s = residue_sum(&f, j, k)?;
            if !s.sum.is_zero() {
                return Ok(Trial::Fail(format!("j = {j}: {:?} for {f:?}", s.breakdown)));
            }
        }
        Ok(Trial::Pass)
    })
}

/// The `ζ`-root formula for canonical partial residues.
pub fn zeta_root(k: &Tower, seed: u64, trials: usize) -> CheckOutcome {
    run_check("zeta root identity", seed, trials, |rng| {
        let zeta = random_point(rng, k);
        let z = k.pow(zeta, k.r() as i64);
        let f = if rng.gen_bool(0.7) {
            {
                let e = rng.gen_range(1..=3);
                random::frac_with_pole(rng, k, z, e, 5)
            }
        } else {
            random::split_frac(rng, k, 5, 3, 2)
        };
        let j = rng.gen_range(0..k.r() as i64);
        let rep = zeta_root_check(&f, j, zeta, k)?;
        Ok(verdict(rep.equal, || format!("ζ = {}, j = {j}: {rep:?}", zeta.0)))
    })
}

fn random_central_c<R: Rng>(rng: &mut R, k: &Tower, z: Fe) -> RatFn {
    loop {
        let c = if rng.gen_bool(0.4) {
            RatFn::constant(random::nonzero_base_fe(rng, k))
        } else {
            RatFn::from_poly(random::central_poly(rng, k, 2))
        };
        let unramified = crate::residues::gamma_coordinate(&c, k)
            .ok()
            .and_then(|zz| zz.deriv(k).eval(z, k))
            .is_some_and(|v| !v.is_zero());
        if gamma_star(&c, z, k).is_ok() && unramified {
            return c;
        }
    }
}

/// Change of variables for central `C`, in the canonical regime (any pole
/// order, `p ∤ r`) and in the simple-pole regime (Hensel expansions).
pub fn change_of_variables(k: &Tower, seed: u64, trials: usize) -> CheckOutcome {
    let can = k.inv_r().is_ok();
    run_check("change of variables", seed, trials, |rng| {
        let z = random_point(rng, k);
        let c = random_central_c(rng, k, z);
        let w = gamma_star(&c, z, k)?;
        if can {
            let f = if rng.gen_bool(0.7) {
                {
                    let e = rng.gen_range(1..=3);
                    random::frac_with_pole(rng, k, w, e, 4)
                }
            } else {
                random::split_frac(rng, k, 4, 2, 2)
            };
            let rep = chvar_check(&c, z, &f, Method::Canonical, k)?;
            if !rep.equal {
                return Ok(Trial::Fail(format!("canonical regime C = {c:?}, z = {}: {rep:?}", z.0)));
            }
        }
        let f = random::frac_with_pole(rng, k, w, 1, 4);
        let rep = chvar_check(&c, z, &f, Method::Hensel, k)?;
        Ok(verdict(rep.equal, || format!("simple-pole regime C = {c:?}, z = {}: {rep:?}", z.0)))
    })
}

/// Everything applicable to the configured tower, with the default sizes.
pub fn full_suite(k: &Tower, seed: u64) -> Vec<CheckOutcome> {
    let mut out = vec![
        euclidean_division(k, seed, 500),
        ideals(k, seed, 200),
        central_bound(k, seed, 200),
        sections(k, seed, 200),
        morphism_law(k, seed, 200),
        derivation_law(k, seed, 200),
        norm_cocycle(k, seed, 200),
        section_commutation(k, seed, 200),
        taylor_multiplicative(k, seed, 100),
        taylor_generators(k, seed, 20),
        hensel_roots(k, seed, 60),
        taylor_round_trip(k, seed, 100),
        order_additivity(k, seed, 100),
        bridge(k, seed, 200),
        residue_theorem_zero(k, seed, 200),
        residue_theorem_all(k, seed, 200),
        change_of_variables(k, seed, 100),
    ];
    if k.inv_r().is_ok() {
        out.push(canonical_nilpotent(k, seed, 100));
        out.push(divided_power_composition(k));
        out.push(canonical_consistency(k, seed, 100));
        out.push(choice_invariance(k, seed, 200));
        out.push(zeta_root(k, seed, 100));
    } else {
        out.push(characteristic_restriction(k));
    }
    out
}
