//! Taylor expansions of skew rational functions at rational points.
//!
//! Fix `z ∈ F \ {0}` and `N = Y − z`. Elements of `A/N^mA` are stored in
//! local coordinates: `Σ_{j<r} S_j(t)·X^j` with `t = Y − z` and each `S_j`
//! truncated mod `t^m`. Because `z ∈ F`, `θ` acts on `S_j` coefficientwise
//! in `t`, and `X^r = Y = z + t`.
//!
//! A Taylor map sends `X ↦ C·X` and `T ↦ N` for a lift `C ≡ 1 (mod N)`
//! making `C·X` a root of `N`. Two lifts are provided: the Hensel lift,
//! built one power of `N` at a time from a trace-one element, and the
//! canonical lift `C = (Y/z)^{−1/r}` which exists when `p ∤ r`. The
//! canonical expansion is also available directly through divided powers
//! of the canonical derivation.

use crate::commutative_oracle::taylor_coefficients;
use crate::error::{Error, Result};
use crate::field_tower::{Fe, Tower};
use crate::fractions::SkewFrac;
use crate::poly::{trunc_inv, trunc_mul, truncate, Poly};
use crate::skew_ring::{canonical_divided_power, SkewPoly};

fn series_frob(s: &[Fe], i: i64, k: &Tower) -> Vec<Fe> {
    s.iter().map(|&c| k.frob(c, i)).collect()
}

fn series_add(a: &[Fe], b: &[Fe], k: &Tower) -> Vec<Fe> {
    a.iter().zip(b).map(|(&x, &y)| k.add(x, y)).collect()
}

/// `(z + t)^q mod t^m` for any integer `q`.
fn shifted_power(z: Fe, q: i64, m: usize, k: &Tower) -> Vec<Fe> {
    let base = truncate(vec![z, Fe::ONE], m);
    let base = if q < 0 { trunc_inv(&base, m, k) } else { base };
    let mut e = q.unsigned_abs();
    let mut acc = truncate(vec![Fe::ONE], m);
    let mut sq = base;
    while e > 0 {
        if e & 1 == 1 {
            acc = trunc_mul(&acc, &sq, m, k);
        }
        sq = trunc_mul(&sq, &sq, m, k);
        e >>= 1;
    }
    acc
}

fn check_point(z: Fe, k: &Tower) -> Result<()> {
    if z.is_zero() {
        return Err(Error::ZeroPoint);
    }
    if !k.is_in_base(z) {
        return Err(Error::PointNotInBase(z.0));
    }
    Ok(())
}

/// An element of `A/N^mA`, `N = Y − z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QElem {
    z: Fe,
    m: usize,
    /// `secs[j][i]` is the coefficient of `t^i·X^j`.
    secs: Vec<Vec<Fe>>,
}

impl QElem {
    pub fn zero(z: Fe, m: usize, k: &Tower) -> QElem {
        QElem { z, m, secs: vec![vec![Fe::ZERO; m]; k.r()] }
    }

    pub fn one(z: Fe, m: usize, k: &Tower) -> QElem {
        QElem::constant(Fe::ONE, z, m, k)
    }

    pub fn constant(c: Fe, z: Fe, m: usize, k: &Tower) -> QElem {
        let mut q = QElem::zero(z, m, k);
        if m > 0 {
            q.secs[0][0] = c;
        }
        q
    }

    /// A class mod `N` from its components `c_j` (coefficients of `X^j`).
    pub fn class(components: Vec<Fe>, z: Fe) -> QElem {
        QElem { z, m: 1, secs: components.into_iter().map(|c| vec![c]).collect() }
    }

    /// Reduction of a Laurent skew polynomial mod `N^m`.
    pub fn from_skew(f: &SkewPoly, z: Fe, m: usize, k: &Tower) -> QElem {
        let r = k.r() as i64;
        let mut q = QElem::zero(z, m, k);
        let mut powers: std::collections::HashMap<i64, Vec<Fe>> = std::collections::HashMap::new();
        for (e, a) in f.terms() {
            if a.is_zero() {
                continue;
            }
            let (j, p) = (e.rem_euclid(r) as usize, e.div_euclid(r));
            let pw = powers.entry(p).or_insert_with(|| shifted_power(z, p, m, k));
            for (s, &c) in q.secs[j].iter_mut().zip(pw.iter()) {
                *s = k.add(*s, k.mul(a, c));
            }
        }
        q
    }

    /// The canonical representative: a skew polynomial of degree `< r·m`.
    pub fn to_skew(&self, k: &Tower) -> SkewPoly {
        let lin = Poly::linear(self.z, k);
        let mut out = SkewPoly::zero();
        for (j, s) in self.secs.iter().enumerate() {
            let y_poly =
                s.iter().enumerate().fold(Poly::zero(), |acc, (i, &c)| acc.add(&lin.pow(i as u32, k).scale(c, k), k));
            out = out.add(&SkewPoly::from_y_poly(&y_poly, k).shift(j as i64), k);
        }
        out
    }

    pub fn z(&self) -> Fe {
        self.z
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// The `j`-th section as `t`-coefficients.
    pub fn section(&self, j: usize) -> &[Fe] {
        &self.secs[j]
    }

    /// Component `c_j` of a class (the constant `t`-coefficient of section `j`).
    pub fn component(&self, j: usize) -> Fe {
        self.secs[j].first().copied().unwrap_or(Fe::ZERO)
    }

    pub fn components(&self) -> Vec<Fe> {
        (0..self.secs.len()).map(|j| self.component(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.secs.iter().all(|s| s.iter().all(|c| c.is_zero()))
    }

    fn check(&self, o: &QElem) -> Result<()> {
        if self.z != o.z || self.m != o.m {
            return Err(Error::MixedModuli);
        }
        Ok(())
    }

    pub fn add(&self, o: &QElem, k: &Tower) -> Result<QElem> {
        self.check(o)?;
        let secs = self.secs.iter().zip(&o.secs).map(|(a, b)| series_add(a, b, k)).collect();
        Ok(QElem { z: self.z, m: self.m, secs })
    }

    pub fn neg(&self, k: &Tower) -> QElem {
        let secs = self.secs.iter().map(|s| s.iter().map(|&c| k.neg(c)).collect()).collect();
        QElem { z: self.z, m: self.m, secs }
    }

    pub fn sub(&self, o: &QElem, k: &Tower) -> Result<QElem> {
        self.add(&o.neg(k), k)
    }

    /// `c·u` for `c ∈ K`.
    pub fn scale_left(&self, c: Fe, k: &Tower) -> QElem {
        let secs = self.secs.iter().map(|s| s.iter().map(|&a| k.mul(c, a)).collect()).collect();
        QElem { z: self.z, m: self.m, secs }
    }

    /// The skew product, using `X·a = θ(a)·X` and `X^r = z + t`.
    pub fn mul(&self, o: &QElem, k: &Tower) -> Result<QElem> {
        self.check(o)?;
        let r = k.r();
        let m = self.m;
        let mut out = QElem::zero(self.z, m, k);
        let wrap = truncate(vec![self.z, Fe::ONE], m);
        for (i, a) in self.secs.iter().enumerate() {
            if a.iter().all(|c| c.is_zero()) {
                continue;
            }
            for (j, b) in o.secs.iter().enumerate() {
                let mut prod = trunc_mul(a, &series_frob(b, i as i64, k), m, k);
                if i + j >= r {
                    prod = trunc_mul(&prod, &wrap, m, k);
                }
                let idx = (i + j) % r;
                out.secs[idx] = series_add(&out.secs[idx], &prod, k);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32, k: &Tower) -> Result<QElem> {
        (0..n).try_fold(QElem::one(self.z, self.m, k), |acc, _| acc.mul(self, k))
    }
}

/// A lift `C ∈ K[[t]]` with `C ≡ 1 (mod t)` and `N_r(C)·Y ≡ z (mod t^m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleLift {
    pub z: Fe,
    pub m: usize,
    /// `t`-coefficients of `C`, length `m`.
    pub c: Vec<Fe>,
    /// The trace-one element for Hensel lifts; `None` for the canonical lift.
    pub trace_one: Option<Fe>,
}

impl AdmissibleLift {
    /// `C` as a polynomial in `Y` of degree `< m`.
    pub fn c_in_y(&self, k: &Tower) -> Poly {
        let lin = Poly::linear(self.z, k);
        self.c.iter().enumerate().fold(Poly::zero(), |acc, (i, &c)| acc.add(&lin.pow(i as u32, k).scale(c, k), k))
    }

    /// `N_j(C) = C·θ(C)⋯θ^{j−1}(C)` as a `t`-series of length `m`.
    fn twisted_norms(&self, k: &Tower) -> Vec<Vec<Fe>> {
        let mut out = vec![truncate(vec![Fe::ONE], self.m)];
        for j in 1..k.r() {
            let next = trunc_mul(&out[j - 1], &series_frob(&self.c, (j - 1) as i64, k), self.m, k);
            out.push(next);
        }
        out
    }

    /// `C·X` as an element of `A/N^mA`.
    pub fn root(&self, k: &Tower) -> QElem {
        let mut q = QElem::zero(self.z, self.m, k);
        q.secs[1 % k.r()] = self.c.clone();
        if k.r() == 1 {
            q.secs[0] = trunc_mul(&self.c, &truncate(vec![self.z, Fe::ONE], self.m), self.m, k);
        }
        q
    }
}

/// Hensel lift: `C_1 = 1`, and `C_{m+1} = C_m + a·Z·t^m` where `a` has trace
/// one and `Z = −S/z` with `S` the `t^m`-coefficient of `N_r(C_m)·Y − z`.
pub fn hensel_lift(z: Fe, m: usize, k: &Tower) -> Result<AdmissibleLift> {
    check_point(z, k)?;
    let m = m.max(1);
    let a = k.trace_one_element();
    let mut c = vec![Fe::ZERO; m];
    c[0] = Fe::ONE;
    let y = truncate(vec![z, Fe::ONE], m);
    for step in 1..m {
        let norm =
            (0..k.r() as i64).fold(truncate(vec![Fe::ONE], m), |acc, i| trunc_mul(&acc, &series_frob(&c, i, k), m, k));
        let s = trunc_mul(&norm, &y, m, k)[step];
        let zz = k.neg(k.div(s, z));
        c[step] = k.mul(a, zz);
    }
    Ok(AdmissibleLift { z, m, c, trace_one: Some(a) })
}

/// The canonical lift `C = (1 + t/z)^{−1/r}`, central in `F[[t]]`.
pub fn canonical_lift(z: Fe, m: usize, k: &Tower) -> Result<AdmissibleLift> {
    check_point(z, k)?;
    let m = m.max(1);
    let zi = k.inv(z);
    let c =
        (0..m).map(|n| Ok(k.mul(k.binom_fraction(-1, n as u64)?, k.pow(zi, n as i64)))).collect::<Result<Vec<_>>>()?;
    Ok(AdmissibleLift { z, m, c, trace_one: None })
}

/// A truncated Laurent series in `T` over `A/NA`, known modulo `T^prec`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaylorSeries {
    z: Fe,
    r: usize,
    val: i64,
    coeffs: Vec<QElem>,
    prec: i64,
}

impl TaylorSeries {
    /// Normalizes so that the first stored coefficient is nonzero.
    pub fn new(z: Fe, r: usize, val: i64, coeffs: Vec<QElem>, prec: i64) -> TaylorSeries {
        let skip = coeffs.iter().take_while(|c| c.is_zero()).count();
        if skip == coeffs.len() {
            return TaylorSeries { z, r, val: prec, coeffs: Vec::new(), prec };
        }
        TaylorSeries { z, r, val: val + skip as i64, coeffs: coeffs[skip..].to_vec(), prec }
    }

    pub fn z(&self) -> Fe {
        self.z
    }

    pub fn prec(&self) -> i64 {
        self.prec
    }

    /// `None` when the series vanishes to its precision.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.val)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The class at `T^n` (zero outside the stored range below `prec`).
    pub fn coeff(&self, n: i64) -> QElem {
        let i = n - self.val;
        if i < 0 || i as usize >= self.coeffs.len() {
            return QElem { z: self.z, m: 1, secs: vec![vec![Fe::ZERO]; self.r] };
        }
        self.coeffs[i as usize].clone()
    }

    /// `(exponent, class)` for the nonzero coefficients, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &QElem)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.val + i as i64, c))
    }

    /// Restricts to a lower precision.
    pub fn truncate(&self, prec: i64) -> TaylorSeries {
        let prec = prec.min(self.prec);
        let coeffs = self.terms().filter(|(n, _)| *n < prec).map(|(_, c)| c.clone()).collect();
        TaylorSeries::new(self.z, self.r, self.val, coeffs, prec)
    }

    pub fn add(&self, o: &TaylorSeries, k: &Tower) -> Result<TaylorSeries> {
        if self.z != o.z {
            return Err(Error::MixedModuli);
        }
        let prec = self.prec.min(o.prec);
        let lo = self.val.min(o.val).min(prec);
        let coeffs = (lo..prec).map(|n| self.coeff(n).add(&o.coeff(n), k)).collect::<Result<Vec<_>>>()?;
        Ok(TaylorSeries::new(self.z, self.r, lo, coeffs, prec))
    }

    pub fn mul(&self, o: &TaylorSeries, k: &Tower) -> Result<TaylorSeries> {
        if self.z != o.z {
            return Err(Error::MixedModuli);
        }
        let prec = (self.prec + o.val).min(o.prec + self.val);
        let lo = self.val + o.val;
        let mut coeffs = Vec::new();
        for n in lo..prec {
            let mut acc = QElem::class(vec![Fe::ZERO; self.r], self.z);
            for (a, ca) in self.terms() {
                let b = n - a;
                if b < o.val {
                    break;
                }
                let cb = o.coeff(b);
                if !cb.is_zero() {
                    acc = acc.add(&ca.mul(&cb, k)?, k)?;
                }
            }
            coeffs.push(acc);
        }
        Ok(TaylorSeries::new(self.z, self.r, lo, coeffs, prec))
    }

    /// Ord, partial orders and principal parts.
    pub fn order_and_principal(&self) -> Result<OrderRecord> {
        let ord = self.valuation().ok_or(Error::ZeroToPrecision)?;
        let principal = self.coeffs[0].components();
        let mut ord_j = Vec::with_capacity(self.r);
        let mut principal_j = Vec::with_capacity(self.r);
        for j in 0..self.r {
            match self.terms().find(|(_, c)| !c.component(j).is_zero()) {
                Some((n, c)) => {
                    ord_j.push(Order::Exact(n));
                    principal_j.push(Some(c.component(j)));
                }
                None => {
                    ord_j.push(Order::AtLeast(self.prec));
                    principal_j.push(None);
                }
            }
        }
        Ok(OrderRecord { ord, ord_j, principal, principal_j })
    }
}

/// A partial order: exact, or only bounded below by the precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Exact(i64),
    AtLeast(i64),
}

impl Order {
    /// True if the order is known to be at least `n`.
    pub fn at_least(self, n: i64) -> bool {
        match self {
            Order::Exact(o) | Order::AtLeast(o) => o >= n,
        }
    }
}

/// `ord`, `ord_j`, the principal part (as class components) and the
/// partial principal parts (`None` where the partial order is not exact).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderRecord {
    pub ord: i64,
    pub ord_j: Vec<Order>,
    pub principal: Vec<Fe>,
    pub principal_j: Vec<Option<Fe>>,
}

/// How the Taylor map is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Canonical,
    Hensel,
}

/// Splits `den = (Y − z)^k·d'` and returns `k` with the Taylor
/// coefficients of `1/d'(z + T)`, `n` terms.
fn denominator_series(f: &SkewFrac, z: Fe, n: usize, k: &Tower) -> (i64, Vec<Fe>) {
    let e = f.pole_multiplicity(z, k);
    let rest = f.den().exact_div(&Poly::linear(z, k).pow(e as u32, k), k);
    (e as i64, taylor_coefficients(&Poly::one(), &rest, z, n, k))
}

fn combine(
    f: &SkewFrac,
    z: Fe,
    prec: i64,
    numer: impl FnOnce(usize) -> Result<Vec<QElem>>,
    k: &Tower,
) -> Result<TaylorSeries> {
    let kk = f.pole_multiplicity(z, k) as i64;
    let n = (prec + kk).max(0) as usize;
    let (kk, inv) = denominator_series(f, z, n, k);
    let num = numer(n)?;
    let zero = QElem::class(vec![Fe::ZERO; k.r()], z);
    let coeffs = (0..n)
        .map(|i| {
            (0..=i).try_fold(zero.clone(), |acc, a| {
                let e = inv[i - a];
                if e.is_zero() {
                    Ok(acc)
                } else {
                    acc.add(&num[a].scale_left(e, k), k)
                }
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TaylorSeries::new(z, k.r(), -kk, coeffs, prec))
}

/// `τ(f)` modulo `T^prec` for the Taylor map determined by `lift`.
pub fn expand_admissible(f: &SkewFrac, lift: &AdmissibleLift, prec: i64, k: &Tower) -> Result<TaylorSeries> {
    let z = lift.z;
    check_point(z, k)?;
    let kk = f.pole_multiplicity(z, k) as i64;
    let needed = prec + kk;
    if (lift.m as i64) < needed {
        return Err(Error::InsufficientPrecision { needed, have: lift.m as i64 });
    }
    combine(f, z, prec, |n| Ok(admissible_numerator(f.num(), lift, n, k)), k)
}

/// The classes `g_0, …, g_{n−1}` with `num ≡ Σ γ_C(g_i)·N^i (mod N^n)`.
fn admissible_numerator(num: &SkewPoly, lift: &AdmissibleLift, n: usize, k: &Tower) -> Vec<QElem> {
    let z = lift.z;
    let trimmed = AdmissibleLift { c: truncate(lift.c.clone(), n), m: n, ..lift.clone() };
    let norms = trimmed.twisted_norms(k);
    let mut residual = QElem::from_skew(num, z, n, k).secs;
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let g: Vec<Fe> = residual.iter().map(|s| s[0]).collect();
        for (j, s) in residual.iter_mut().enumerate() {
            let sub: Vec<Fe> = s.iter().zip(&norms[j]).map(|(&a, &b)| k.sub(a, k.mul(g[j], b))).collect();
            let mut shifted = sub[1..].to_vec();
            shifted.push(Fe::ZERO);
            *s = shifted;
        }
        out.push(QElem::class(g, z));
    }
    out
}

/// The canonical expansion `Σ ∂^{[n]}(f)·T^n` modulo `T^prec`.
pub fn expand_canonical(f: &SkewFrac, z: Fe, prec: i64, k: &Tower) -> Result<TaylorSeries> {
    k.inv_r()?;
    check_point(z, k)?;
    combine(
        f,
        z,
        prec,
        |n| {
            (0..n)
                .map(|i| {
                    let d = canonical_divided_power(f.num(), i as u64, k)?;
                    Ok(QElem::from_skew(&d, z, 1, k))
                })
                .collect()
        },
        k,
    )
}

/// The default precision: the pole order at `z` plus two.
pub fn default_precision(f: &SkewFrac, z: Fe, k: &Tower) -> i64 {
    if z.is_zero() {
        return 2;
    }
    f.pole_multiplicity(z, k) as i64 + 2
}

/// Expansion with either method; the Hensel lift is built to the needed precision.
pub fn expand(f: &SkewFrac, z: Fe, method: Method, prec: i64, k: &Tower) -> Result<TaylorSeries> {
    match method {
        Method::Canonical => expand_canonical(f, z, prec, k),
        Method::Hensel => {
            check_point(z, k)?;
            let m = (prec + f.pole_multiplicity(z, k) as i64).max(1) as usize;
            expand_admissible(f, &hensel_lift(z, m, k)?, prec, k)
        }
    }
}

/// Evaluates `Σ g_n T^n` at `T = N`, `X ↦ C·X`, in `A/N^mA` (needs `val ≥ 0`).
pub fn evaluate_series(series: &TaylorSeries, lift: &AdmissibleLift, k: &Tower) -> Result<QElem> {
    let m = lift.m;
    let z = lift.z;
    if series.valuation().is_some_and(|v| v < 0) {
        return Err(Error::NotPolynomial);
    }
    let root = lift.root(k);
    let powers: Vec<QElem> = (0..k.r())
        .scan(QElem::one(z, m, k), |acc, _| {
            let cur = acc.clone();
            *acc = acc.mul(&root, k).expect("same modulus");
            Some(cur)
        })
        .collect();
    let mut n_pow = QElem::zero(z, m, k);
    n_pow.secs[0] = truncate(vec![Fe::ZERO, Fe::ONE], m);
    let mut out = QElem::zero(z, m, k);
    let mut tn = QElem::one(z, m, k);
    for n in 0..m as i64 {
        let class = series.coeff(n);
        let mut term = QElem::zero(z, m, k);
        for (j, p) in powers.iter().enumerate() {
            term = term.add(&p.scale_left(class.component(j), k), k)?;
        }
        out = out.add(&term.mul(&tn, k)?, k)?;
        tn = tn.mul(&n_pow, k)?;
    }
    Ok(out)
}

/// Which chart an [`XSeries`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chart {
    /// Powers of `X`.
    Zero,
    /// Powers of `X̃ = X^{−1}`, twisted by `θ^{−1}`.
    Infinity,
}

/// A truncated Laurent series over `K` in `X` (or `X̃`), known below `prec`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XSeries {
    pub chart: Chart,
    val: i64,
    coeffs: Vec<Fe>,
    prec: i64,
}

impl XSeries {
    fn new(chart: Chart, val: i64, coeffs: Vec<Fe>, prec: i64) -> XSeries {
        let skip = coeffs.iter().take_while(|c| c.is_zero()).count();
        if skip == coeffs.len() {
            return XSeries { chart, val: prec, coeffs: Vec::new(), prec };
        }
        XSeries { chart, val: val + skip as i64, coeffs: coeffs[skip..].to_vec(), prec }
    }

    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.val)
    }

    pub fn prec(&self) -> i64 {
        self.prec
    }

    pub fn coeff(&self, e: i64) -> Fe {
        let i = e - self.val;
        if i < 0 {
            return Fe::ZERO;
        }
        self.coeffs.get(i as usize).copied().unwrap_or(Fe::ZERO)
    }

    /// `(exponent, coefficient)` for the nonzero coefficients, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, Fe)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, &c)| (self.val + i as i64, c))
    }

    /// Order, partial orders by residue class of the exponent mod `r`, and
    /// the corresponding leading coefficients.
    pub fn order_and_principal(&self, r: usize) -> Result<XOrderRecord> {
        let ord = self.valuation().ok_or(Error::ZeroToPrecision)?;
        let mut ord_j = Vec::with_capacity(r);
        let mut principal_j = Vec::with_capacity(r);
        for j in 0..r as i64 {
            match self.terms().find(|&(e, c)| !c.is_zero() && e.rem_euclid(r as i64) == j) {
                Some((e, c)) => {
                    ord_j.push(Order::Exact(e));
                    principal_j.push(Some(c));
                }
                None => {
                    ord_j.push(Order::AtLeast(self.prec));
                    principal_j.push(None);
                }
            }
        }
        Ok(XOrderRecord { ord, ord_j, principal: self.coeffs[0], principal_j })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XOrderRecord {
    pub ord: i64,
    pub ord_j: Vec<Order>,
    pub principal: Fe,
    pub principal_j: Vec<Option<Fe>>,
}

/// The expansion of `f` in `K((X; θ))`, exponents below `prec`.
pub fn expand_at_zero(f: &SkewFrac, prec: i64, k: &Tower) -> XSeries {
    let r = k.r() as i64;
    let Some(lo) = f.num().valuation() else { return XSeries::new(Chart::Zero, prec, Vec::new(), prec) };
    let n_terms = if prec > lo { ((prec - lo + r - 1) / r) as usize } else { 0 };
    let inv = trunc_inv(f.den().coeffs(), n_terms, k);
    let coeffs = (lo..prec.max(lo))
        .map(|e| {
            (0..n_terms).fold(Fe::ZERO, |acc, kk| {
                let a = f.num().coeff(e - r * kk as i64);
                k.add(acc, k.mul(inv[kk], a))
            })
        })
        .collect();
    XSeries::new(Chart::Zero, lo, coeffs, prec)
}

/// The expansion of `f` in `K((X̃; θ^{−1}))`, `X̃ = X^{−1}`, exponents below `prec`.
pub fn expand_at_infinity(f: &SkewFrac, prec: i64, k: &Tower) -> XSeries {
    let r = k.r() as i64;
    let Some(deg) = f.num().degree() else { return XSeries::new(Chart::Infinity, prec, Vec::new(), prec) };
    let b = f.den().degree().unwrap() as i64;
    let lo = -deg + r * b;
    let n_terms = if prec > lo { ((prec - lo + r - 1) / r) as usize } else { 0 };
    let inv = trunc_inv(f.den().reversed().coeffs(), n_terms, k);
    let coeffs = (lo..prec.max(lo))
        .map(|e| {
            (0..n_terms).fold(Fe::ZERO, |acc, kk| {
                let a = f.num().coeff(-(e - r * (b + kk as i64)));
                k.add(acc, k.mul(inv[kk], a))
            })
        })
        .collect();
    XSeries::new(Chart::Infinity, lo, coeffs, prec)
}
