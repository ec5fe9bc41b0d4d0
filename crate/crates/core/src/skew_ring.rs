//! The skew Laurent polynomial ring `A = K[X^{±1}; θ]` with `X·a = θ(a)·X`.
//!
//! Elements of the centre `F[Y^{±1}]` and of `C = K[Y^{±1}]` are represented
//! by [`LPoly`] in the variable `Y = X^r`; they embed into `A` through
//! [`SkewPoly::from_coef`].

use crate::error::{Error, Result};
use crate::field_tower::{Fe, Tower};
use crate::poly::{LPoly, Poly, RatFn};

/// `Σ coeffs[i]·X^{val+i}`, coefficients on the left of the powers of `X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SkewPoly {
    val: i64,
    coeffs: Vec<Fe>,
}

impl SkewPoly {
    pub fn zero() -> SkewPoly {
        SkewPoly { val: 0, coeffs: Vec::new() }
    }

    pub fn one() -> SkewPoly {
        SkewPoly::constant(Fe::ONE)
    }

    pub fn constant(c: Fe) -> SkewPoly {
        SkewPoly::new(0, vec![c])
    }

    /// The variable `X`.
    pub fn x() -> SkewPoly {
        SkewPoly::monomial(Fe::ONE, 1)
    }

    pub fn monomial(c: Fe, e: i64) -> SkewPoly {
        SkewPoly::new(e, vec![c])
    }

    /// Normalizes away leading and trailing zero coefficients.
    pub fn new(val: i64, mut coeffs: Vec<Fe>) -> SkewPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let skip = coeffs.iter().take_while(|c| c.is_zero()).count();
        if skip == coeffs.len() {
            return SkewPoly::zero();
        }
        coeffs.drain(..skip);
        SkewPoly { val: val + skip as i64, coeffs }
    }

    /// A polynomial from its coefficients, constant first.
    pub fn from_coeffs(coeffs: Vec<Fe>) -> SkewPoly {
        SkewPoly::new(0, coeffs)
    }

    /// The image of `C ∈ K[Y^{±1}]` under `Y ↦ X^r`.
    pub fn from_coef(c: &LPoly, k: &Tower) -> SkewPoly {
        let r = k.r() as i64;
        let Some(lo) = c.valuation() else { return SkewPoly::zero() };
        let hi = c.degree().unwrap();
        let mut coeffs = vec![Fe::ZERO; ((hi - lo) * r + 1) as usize];
        for (e, a) in c.terms() {
            coeffs[((e - lo) * r) as usize] = a;
        }
        SkewPoly::new(lo * r, coeffs)
    }

    /// The image of a polynomial in `Y`.
    pub fn from_y_poly(c: &Poly, k: &Tower) -> SkewPoly {
        SkewPoly::from_coef(&LPoly::from_poly(c), k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.val == 0 && self.coeffs == [Fe::ONE]
    }

    /// Lowest exponent of `X`, `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.val)
    }

    /// Highest exponent of `X`, `None` for zero.
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

    pub fn lead(&self) -> Fe {
        self.coeffs.last().copied().unwrap_or(Fe::ZERO)
    }

    /// `(exponent, coefficient)` over the stored range, zeros included.
    pub fn terms(&self) -> impl Iterator<Item = (i64, Fe)> + '_ {
        self.coeffs.iter().enumerate().map(move |(i, &c)| (self.val + i as i64, c))
    }

    /// True for `0` and for elements without negative powers of `X`.
    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.val >= 0
    }

    /// Coefficients of `X^0..=X^deg` for a polynomial.
    pub fn poly_coeffs(&self) -> Result<Vec<Fe>> {
        if !self.is_polynomial() {
            return Err(Error::NotPolynomial);
        }
        let Some(d) = self.degree() else { return Ok(Vec::new()) };
        Ok((0..=d).map(|e| self.coeff(e)).collect())
    }

    /// The element as a member of `F[Y^{±1}]`, when it is central.
    pub fn to_central(&self, k: &Tower) -> Option<LPoly> {
        let c = self.to_coef(k)?;
        c.is_in_base(k).then_some(c)
    }

    /// The element as a member of `K[Y^{±1}]`, when only powers of `X^r` occur.
    pub fn to_coef(&self, k: &Tower) -> Option<LPoly> {
        let r = k.r() as i64;
        if self.is_zero() {
            return Some(LPoly::zero());
        }
        if self.terms().any(|(e, c)| !c.is_zero() && e.rem_euclid(r) != 0) {
            return None;
        }
        let lo = self.val.div_euclid(r);
        let hi = self.degree().unwrap().div_euclid(r);
        Some(LPoly::new(lo, (lo..=hi).map(|i| self.coeff(i * r)).collect()))
    }

    pub fn is_central(&self, k: &Tower) -> bool {
        self.to_central(k).is_some()
    }

    fn span(&self, o: &SkewPoly) -> (i64, i64) {
        match (self.degree(), o.degree()) {
            (None, None) => (0, -1),
            (Some(d), None) => (self.val, d),
            (None, Some(d)) => (o.val, d),
            (Some(a), Some(b)) => (self.val.min(o.val), a.max(b)),
        }
    }

    pub fn add(&self, o: &SkewPoly, k: &Tower) -> SkewPoly {
        let (lo, hi) = self.span(o);
        SkewPoly::new(lo, (lo..=hi).map(|e| k.add(self.coeff(e), o.coeff(e))).collect())
    }

    pub fn sub(&self, o: &SkewPoly, k: &Tower) -> SkewPoly {
        let (lo, hi) = self.span(o);
        SkewPoly::new(lo, (lo..=hi).map(|e| k.sub(self.coeff(e), o.coeff(e))).collect())
    }

    pub fn neg(&self, k: &Tower) -> SkewPoly {
        SkewPoly { val: self.val, coeffs: self.coeffs.iter().map(|&c| k.neg(c)).collect() }
    }

    /// `c·f`.
    pub fn scale_left(&self, c: Fe, k: &Tower) -> SkewPoly {
        SkewPoly::new(self.val, self.coeffs.iter().map(|&a| k.mul(c, a)).collect())
    }

    /// `f·c`, which twists `c` past each power of `X`.
    pub fn scale_right(&self, c: Fe, k: &Tower) -> SkewPoly {
        SkewPoly::new(self.val, self.terms().map(|(e, a)| k.mul(a, k.frob(c, e))).collect())
    }

    /// `f·X^s`.
    pub fn shift(&self, s: i64) -> SkewPoly {
        if self.is_zero() {
            return SkewPoly::zero();
        }
        SkewPoly { val: self.val + s, coeffs: self.coeffs.clone() }
    }

    /// `X^s·f`.
    pub fn shift_left(&self, s: i64, k: &Tower) -> SkewPoly {
        if self.is_zero() {
            return SkewPoly::zero();
        }
        SkewPoly { val: self.val + s, coeffs: self.coeffs.iter().map(|&c| k.frob(c, s)).collect() }
    }

    /// `θ^i` applied to every coefficient, i.e. conjugation `X^i·f·X^{−i}`.
    pub fn frob(&self, i: i64, k: &Tower) -> SkewPoly {
        SkewPoly { val: self.val, coeffs: self.coeffs.iter().map(|&c| k.frob(c, i)).collect() }
    }

    /// The twisted product: `(a X^i)(b X^j) = a θ^i(b) X^{i+j}`.
    pub fn mul(&self, o: &SkewPoly, k: &Tower) -> SkewPoly {
        if self.is_zero() || o.is_zero() {
            return SkewPoly::zero();
        }
        let mut out = vec![Fe::ZERO; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, (e, a)) in self.terms().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = k.add(out[i + j], k.mul(a, k.frob(b, e)));
            }
        }
        SkewPoly::new(self.val + o.val, out)
    }

    pub fn pow(&self, n: u32, k: &Tower) -> SkewPoly {
        (0..n).fold(SkewPoly::one(), |acc, _| acc.mul(self, k))
    }

    /// Left-multiplies by the inverse of the leading coefficient.
    pub fn monic_left(&self, k: &Tower) -> SkewPoly {
        if self.is_zero() {
            return SkewPoly::zero();
        }
        self.scale_left(k.inv(self.lead()), k)
    }

    /// The constant `c` such that `f·c` is monic.
    pub fn right_normalizer(&self, k: &Tower) -> Fe {
        k.frob(k.inv(self.lead()), -self.degree().unwrap_or(0))
    }

    /// Text form with increasing `X`-degree, e.g. `(2+4*g)*X^0 + (1)*X^1`.
    pub fn to_canonical_text(&self, k: &Tower) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| format!("({})*X^{e}", k.format(c)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn require_polynomial(f: &SkewPoly) -> Result<()> {
    if f.is_polynomial() {
        Ok(())
    } else {
        Err(Error::NotPolynomial)
    }
}

/// `A = Q·B + R` with `deg R < deg B`.
pub fn right_divide(a: &SkewPoly, b: &SkewPoly, k: &Tower) -> Result<(SkewPoly, SkewPoly)> {
    divide(a, b, k, true)
}

/// `A = B·Q + R` with `deg R < deg B`.
pub fn left_divide(a: &SkewPoly, b: &SkewPoly, k: &Tower) -> Result<(SkewPoly, SkewPoly)> {
    divide(a, b, k, false)
}

fn divide(a: &SkewPoly, b: &SkewPoly, k: &Tower, right: bool) -> Result<(SkewPoly, SkewPoly)> {
    require_polynomial(a)?;
    require_polynomial(b)?;
    let m = b.degree().ok_or(Error::DivisionByZero)?;
    let bm = b.lead();
    let b_coeffs = b.poly_coeffs()?;
    let mut rem = a.poly_coeffs()?;
    let n = rem.len() as i64 - 1;
    if n < m {
        return Ok((SkewPoly::zero(), a.clone()));
    }
    let mut quo = vec![Fe::ZERO; (n - m + 1) as usize];
    for d in (m..=n).rev() {
        let an = rem[d as usize];
        if an.is_zero() {
            continue;
        }
        let s = d - m;
        if right {
            // c X^s · b_j X^j = c θ^s(b_j) X^{s+j}
            let c = k.div(an, k.frob(bm, s));
            quo[s as usize] = c;
            for (j, &bj) in b_coeffs.iter().enumerate() {
                let idx = s as usize + j;
                rem[idx] = k.sub(rem[idx], k.mul(c, k.frob(bj, s)));
            }
        } else {
            // b_j X^j · c X^s = b_j θ^j(c) X^{j+s}
            let c = k.frob(k.div(an, bm), -m);
            quo[s as usize] = c;
            for (j, &bj) in b_coeffs.iter().enumerate() {
                let idx = s as usize + j;
                rem[idx] = k.sub(rem[idx], k.mul(bj, k.frob(c, j as i64)));
            }
        }
    }
    Ok((SkewPoly::from_coeffs(quo), SkewPoly::from_coeffs(rem)))
}

/// Which gcd or lcm [`euclid`] computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EuclidKind {
    /// Generator of the left ideal `A f + A g`.
    Rgcd,
    /// Generator of the right ideal `f A + g A`.
    Lgcd,
    /// Generator of `A f ∩ A g`.
    Llcm,
    /// Generator of `f A ∩ g A`.
    Rlcm,
}

/// A monic gcd or lcm with cofactors.
///
/// * `Rgcd`: `u·f + v·g = value`
/// * `Lgcd`: `f·u + g·v = value`
/// * `Llcm`: `value = u·f = v·g`
/// * `Rlcm`: `value = f·u = g·v`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EuclidResult {
    pub value: SkewPoly,
    pub u: SkewPoly,
    pub v: SkewPoly,
}

pub fn euclid(kind: EuclidKind, f: &SkewPoly, g: &SkewPoly, k: &Tower) -> Result<EuclidResult> {
    require_polynomial(f)?;
    require_polynomial(g)?;
    let lcm = matches!(kind, EuclidKind::Llcm | EuclidKind::Rlcm);
    if lcm && (f.is_zero() || g.is_zero()) {
        return Err(Error::ZeroInput);
    }
    if f.is_zero() && g.is_zero() {
        return Err(Error::BothZero);
    }
    let right = matches!(kind, EuclidKind::Rgcd | EuclidKind::Llcm);
    // r_i = s_i f + t_i g (right) or f s_i + g t_i (left)
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut s0, mut s1) = (SkewPoly::one(), SkewPoly::zero());
    let (mut t0, mut t1) = (SkewPoly::zero(), SkewPoly::one());
    while !r1.is_zero() {
        let (q, rem) = if right { right_divide(&r0, &r1, k)? } else { left_divide(&r0, &r1, k)? };
        let step = |a: &SkewPoly, b: &SkewPoly| if right { a.sub(&q.mul(b, k), k) } else { a.sub(&b.mul(&q, k), k) };
        let s2 = step(&s0, &s1);
        let t2 = step(&t0, &t1);
        (r0, r1) = (r1, rem);
        (s0, s1) = (s1, s2);
        (t0, t1) = (t1, t2);
    }
    let (value, u, v) = if lcm {
        if right {
            (s1.mul(f, k), s1, t1.neg(k))
        } else {
            (f.mul(&s1, k), s1, t1.neg(k))
        }
    } else {
        (r0, s0, t0)
    };
    Ok(if right {
        let c = k.inv(value.lead());
        EuclidResult { value: value.scale_left(c, k), u: u.scale_left(c, k), v: v.scale_left(c, k) }
    } else {
        let c = value.right_normalizer(k);
        EuclidResult { value: value.scale_right(c, k), u: u.scale_right(c, k), v: v.scale_right(c, k) }
    })
}

/// Solves `Σ a_i v_i = 0` over `F = GF(p)` for the first dependent prefix of
/// the vectors; returns the monic relation `a_0..=a_n` (with `a_n = 1`).
struct DependencyFinder {
    p: u64,
    /// Reduced rows: (pivot column, row, combination of inputs producing it).
    rows: Vec<(usize, Vec<u64>, Vec<u64>)>,
    count: usize,
}

impl DependencyFinder {
    fn new(p: u32) -> Self {
        DependencyFinder { p: p as u64, rows: Vec::new(), count: 0 }
    }

    fn inv(&self, a: u64) -> u64 {
        let (mut res, mut base, mut e) = (1u64, a % self.p, self.p - 2);
        while e > 0 {
            if e & 1 == 1 {
                res = res * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        res
    }

    fn push(&mut self, v: Vec<u64>) -> Option<Vec<u64>> {
        let p = self.p;
        let idx = self.count;
        self.count += 1;
        let mut row = v;
        let mut comb = vec![0u64; idx + 1];
        comb[idx] = 1;
        for (pivot, prow, pcomb) in &self.rows {
            let c = row[*pivot];
            if c == 0 {
                continue;
            }
            for (x, y) in row.iter_mut().zip(prow) {
                *x = (*x + p - c * y % p) % p;
            }
            for (x, y) in comb.iter_mut().zip(pcomb) {
                *x = (*x + p - c * y % p) % p;
            }
        }
        match row.iter().position(|&x| x != 0) {
            None => Some(comb),
            Some(pivot) => {
                let c = self.inv(row[pivot]);
                row.iter_mut().for_each(|x| *x = *x * c % p);
                comb.iter_mut().for_each(|x| *x = *x * c % p);
                for (_, other, ocomb) in self.rows.iter_mut() {
                    let d = other[pivot];
                    if d == 0 {
                        continue;
                    }
                    for (x, y) in other.iter_mut().zip(&row) {
                        *x = (*x + p - d * y % p) % p;
                    }
                    ocomb.resize(idx + 1, 0);
                    for (x, y) in ocomb.iter_mut().zip(&comb) {
                        *x = (*x + p - d * y % p) % p;
                    }
                }
                self.rows.push((pivot, row, comb));
                None
            }
        }
    }
}

/// The minimal-degree central `N ∈ F[Y]` (monic) with `f·g = g·f = N`.
///
/// For Laurent `f = h·X^v` with `v < 0` the search runs on `h`. The left-division
/// remainders of `1, Y, Y², …` by `h` are `F`-vectors of length `r·deg h`, and the first linear relation `Σ a_i R_i = 0` gives
/// `N = Σ a_i Y^i = h·Σ a_i q_i`.
pub fn central_right_multiple(f: &SkewPoly, k: &Tower) -> Result<(SkewPoly, Poly)> {
    let v = f.valuation().ok_or(Error::ZeroInput)?.min(0);
    let h = f.shift(-v);
    let d = h.degree().unwrap() as usize;
    let r = k.r();
    let mut finder = DependencyFinder::new(k.p());
    let mut quotients = Vec::new();
    let relation = (0..)
        .find_map(|i: usize| {
            let yi = SkewPoly::monomial(Fe::ONE, (i * r) as i64);
            let (q, rem) = left_divide(&yi, &h, k).expect("nonzero divisor");
            quotients.push(q);
            let mut vec = Vec::with_capacity(r * d);
            for e in 0..d as i64 {
                vec.extend(k.coeffs(rem.coeff(e)).into_iter().map(u64::from));
            }
            finder.push(vec)
        })
        .expect("a dependency exists within deg h + 1 steps");
    let mut g = SkewPoly::zero();
    for (a, q) in relation.iter().zip(&quotients) {
        g = g.add(&q.scale_left(Fe(*a as u32), k), k);
    }
    let n = Poly::from_coeffs(relation.iter().map(|&a| Fe(a as u32)).collect());
    Ok((g.shift_left(-v, k), n))
}

/// `sec_j(f) = Σ_i a_{j+ir} Y^i`; any integer `j`.
pub fn section(f: &SkewPoly, j: i64, k: &Tower) -> LPoly {
    let r = k.r() as i64;
    let Some(hi) = f.degree() else { return LPoly::zero() };
    let lo_i = (f.val - j).div_euclid(r) - 1;
    let hi_i = (hi - j).div_euclid(r) + 1;
    LPoly::new(lo_i, (lo_i..=hi_i).map(|i| f.coeff(j + i * r)).collect())
}

/// `Σ_j sec_j·X^j`.
pub fn from_sections(secs: &[LPoly], k: &Tower) -> SkewPoly {
    secs.iter().enumerate().fold(SkewPoly::zero(), |acc, (j, s)| acc.add(&SkewPoly::from_coef(s, k).shift(j as i64), k))
}

/// `C·f` for `C ∈ K[Y^{±1}]`.
pub fn coef_mul(c: &LPoly, f: &SkewPoly, k: &Tower) -> SkewPoly {
    SkewPoly::from_coef(c, k).mul(f, k)
}

/// The twisted norm `N_n(C)`: `C·θ(C)⋯θ^{n−1}(C)` for `n ≥ 0`, and
/// `θ^{−1}(C^{−1})⋯θ^{n}(C^{−1})` for `n < 0`.
pub fn twisted_norm(c: &RatFn, n: i64, k: &Tower) -> Result<RatFn> {
    if n >= 0 {
        return Ok((0..n).fold(RatFn::one(), |acc, i| acc.mul(&c.frob(i, k), k)));
    }
    let ci = c.inv(k).map_err(|_| Error::ZeroToNegativePower)?;
    Ok((n..0).fold(RatFn::one(), |acc, i| acc.mul(&ci.frob(i, k), k)))
}

/// The twisted trace `Tr_n(C)`: `C + θ(C) + ⋯ + θ^{n−1}(C)` for `n ≥ 0`, and
/// `−θ^{−1}(C) − ⋯ − θ^{n}(C)` for `n < 0`.
pub fn twisted_trace(c: &RatFn, n: i64, k: &Tower) -> RatFn {
    if n >= 0 {
        (0..n).fold(RatFn::zero(), |acc, i| acc.add(&c.frob(i, k), k))
    } else {
        (n..0).fold(RatFn::zero(), |acc, i| acc.sub(&c.frob(i, k), k))
    }
}

/// `N_n(C)` for a Laurent polynomial `C` and `n ≥ 0`.
pub fn twisted_norm_poly(c: &LPoly, n: u32, k: &Tower) -> LPoly {
    (0..n as i64).fold(LPoly::one(), |acc, i| acc.mul(&c.frob(i, k), k))
}

/// `Tr_n(C)` for a Laurent polynomial `C`, any `n`.
pub fn twisted_trace_poly(c: &LPoly, n: i64, k: &Tower) -> LPoly {
    if n >= 0 {
        (0..n).fold(LPoly::zero(), |acc, i| acc.add(&c.frob(i, k), k))
    } else {
        (n..0).fold(LPoly::zero(), |acc, i| acc.sub(&c.frob(i, k), k))
    }
}

/// `γ_C(f) = Σ a_i N_i(C) X^i` for a polynomial `f` and `C ∈ K[Y^{±1}]`.
///
/// Negative powers of `X` need `C^{−1}`; use the fraction version for those.
pub fn apply_morphism(c: &LPoly, f: &SkewPoly, k: &Tower) -> Result<SkewPoly> {
    if c.is_zero() {
        return Err(Error::ZeroC);
    }
    require_polynomial(f)?;
    let mut out = SkewPoly::zero();
    let mut norm = LPoly::one();
    let mut next = 0i64;
    for (e, a) in f.terms() {
        while next < e {
            norm = norm.mul(&c.frob(next, k), k);
            next += 1;
        }
        if !a.is_zero() {
            out = out.add(&coef_mul(&norm, &SkewPoly::monomial(Fe::ONE, e), k).scale_left(a, k), k);
        }
    }
    Ok(out)
}

/// `∂_C(f) = Σ a_i Tr_i(C) X^i` for `C ∈ K[Y^{±1}]` and any Laurent `f`.
pub fn apply_derivation(c: &LPoly, f: &SkewPoly, k: &Tower) -> SkewPoly {
    f.terms().filter(|(_, a)| !a.is_zero()).fold(SkewPoly::zero(), |acc, (e, a)| {
        let tr = twisted_trace_poly(c, e, k);
        acc.add(&coef_mul(&tr, &SkewPoly::monomial(Fe::ONE, e), k).scale_left(a, k), k)
    })
}

/// The canonical divided power `∂^{[n]}(f) = Σ binom(i/r, n) a_i X^{i − rn}`.
pub fn canonical_divided_power(f: &SkewPoly, n: u64, k: &Tower) -> Result<SkewPoly> {
    k.inv_r()?;
    let Some(lo) = f.valuation() else { return Ok(SkewPoly::zero()) };
    let coeffs = f
        .terms()
        .map(|(e, a)| if a.is_zero() { Ok(Fe::ZERO) } else { Ok(k.mul(k.binom_fraction(e, n)?, a)) })
        .collect::<Result<Vec<_>>>()?;
    Ok(SkewPoly::new(lo - (k.r() as i64) * n as i64, coeffs))
}

/// The canonical derivation `∂_{Y,can} = r^{−1}·Σ i a_i X^{i−r}`.
pub fn canonical_derivation(f: &SkewPoly, k: &Tower) -> Result<SkewPoly> {
    canonical_divided_power(f, 1, k)
}
