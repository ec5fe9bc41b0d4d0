//! The finite-field tower `F = GF(p) ⊂ K = GF(p^r)` with its Frobenius
//! automorphism `θ : x ↦ x^p`.
//!
//! Elements of `K` are stored as [`Fe`], a packed integer whose base-`p`
//! digits are the coordinates in the power basis `1, g, …, g^{r-1}` of
//! `K = F[g]/(modulus)`, constant digit least significant. The prime field
//! is exactly the set of encodings `< p`. Multiplication goes through
//! discrete log tables built once when the tower is configured.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported `|K|`; the log/exp and Frobenius tables are dense.
pub const MAX_FIELD_SIZE: u64 = 1 << 22;

/// Field configuration as read from JSON, e.g.
/// `{"p":5,"s":1,"r":2,"modulus":[3,0,1]}` (constant coefficient first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldConfig {
    pub p: u32,
    #[serde(default = "default_s")]
    pub s: u32,
    pub r: usize,
    pub modulus: Vec<u32>,
}

fn default_s() -> u32 {
    1
}

impl FieldConfig {
    /// GF(25) = GF(5)[g]/(g² − 2).
    pub fn gf25() -> Self {
        FieldConfig { p: 5, s: 1, r: 2, modulus: vec![3, 0, 1] }
    }

    /// GF(343) = GF(7)[g]/(g³ − 3).
    pub fn gf343() -> Self {
        FieldConfig { p: 7, s: 1, r: 3, modulus: vec![4, 0, 0, 1] }
    }

    /// GF(4) = GF(2)[g]/(g² + g + 1); here `p | r`.
    pub fn gf4() -> Self {
        FieldConfig { p: 2, s: 1, r: 2, modulus: vec![1, 1, 1] }
    }
}

/// An element of `K`, packed as base-`p` digits of its power-basis coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// The configured tower together with its arithmetic tables.
#[derive(Clone, Debug)]
pub struct Tower {
    config: FieldConfig,
    p: u32,
    r: usize,
    size: u32,
    modulus: Vec<u32>,
    pow_p: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    /// `frob[i][x] = θ^i(x)` for `0 ≤ i < r`.
    frob: Vec<Vec<u32>>,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn inv_mod_prime(a: u32, p: u32) -> u32 {
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

impl Tower {
    /// Validates the configuration and builds the arithmetic tables.
    pub fn new(config: FieldConfig) -> Result<Tower> {
        let p = config.p;
        if !is_prime(p) {
            return Err(Error::InvalidConfig(format!("p = {p} is not prime")));
        }
        if config.s != 1 {
            return Err(Error::InvalidConfig(format!("only s = 1 (F = GF(p)) is supported, got s = {}", config.s)));
        }
        let r = config.r;
        if r == 0 {
            return Err(Error::InvalidConfig("r must be at least 1".into()));
        }
        if config.modulus.len() != r + 1 {
            return Err(Error::InvalidConfig(format!(
                "modulus must have {} coefficients (degree exactly r = {r}), got {}",
                r + 1,
                config.modulus.len()
            )));
        }
        if config.modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidConfig("modulus coefficients must lie in 0..p".into()));
        }
        let lead = config.modulus[r];
        if lead == 0 {
            return Err(Error::InvalidConfig("modulus has degree below r".into()));
        }
        let size = (p as u64)
            .checked_pow(r as u32)
            .filter(|&s| s <= MAX_FIELD_SIZE)
            .ok_or_else(|| Error::InvalidConfig(format!("field of size {p}^{r} exceeds {MAX_FIELD_SIZE}")))?
            as u32;
        let lead_inv = inv_mod_prime(lead, p);
        let modulus: Vec<u32> =
            config.modulus.iter().map(|&c| (c as u64 * lead_inv as u64 % p as u64) as u32).collect();
        let pow_p: Vec<u32> = (0..=r).map(|i| p.pow(i as u32)).collect();

        let mut tower =
            Tower { config, p, r, size, modulus, pow_p, exp: Vec::new(), log: Vec::new(), frob: Vec::new() };
        tower.build_tables()?;
        Ok(tower)
    }

    fn digits(&self, a: u32) -> Vec<u32> {
        let mut out = vec![0; self.r];
        let mut x = a;
        for d in out.iter_mut() {
            *d = x % self.p;
            x /= self.p;
        }
        out
    }

    fn pack(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0u32, |acc, &d| acc * self.p + d)
    }

    /// Schoolbook product modulo the (monic) modulus; used only to build tables.
    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let (p, r) = (self.p as u64, self.r);
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * r];
        for i in 0..r {
            for j in 0..r {
                prod[i + j] = (prod[i + j] + da[i] as u64 * db[j] as u64) % p;
            }
        }
        for k in (r..2 * r).rev() {
            let c = prod[k];
            if c != 0 {
                for i in 0..r {
                    let sub = c * self.modulus[i] as u64 % p;
                    prod[k - r + i] = (prod[k - r + i] + p - sub) % p;
                }
                prod[k] = 0;
            }
        }
        let out: Vec<u32> = prod[..r].iter().map(|&c| c as u32).collect();
        self.pack(&out)
    }

    fn pow_slow(&self, a: u32, mut e: u64) -> u32 {
        let mut result = 1u32;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul_slow(result, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        result
    }

    fn build_tables(&mut self) -> Result<()> {
        let order = self.size as u64 - 1;
        let factors = prime_factors(order);
        // A primitive element exists iff the modulus is irreducible: otherwise
        // the unit group of F[g]/(modulus) is strictly smaller than size − 1.
        let primitive = (1..self.size)
            .find(|&x| self.pow_slow(x, order) == 1 && factors.iter().all(|&l| self.pow_slow(x, order / l) != 1))
            .ok_or_else(|| Error::InvalidConfig("modulus is not irreducible over F".into()))?;

        let n = order as usize;
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![0u32; self.size as usize];
        let mut x = 1u32;
        for (i, slot) in exp.iter_mut().take(n).enumerate() {
            *slot = x;
            log[x as usize] = i as u32;
            x = self.mul_slow(x, primitive);
        }
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }
        if n == 0 {
            exp[0] = 1;
        }
        self.exp = exp;
        self.log = log;

        let mut frob = Vec::with_capacity(self.r);
        frob.push((0..self.size).collect::<Vec<u32>>());
        for i in 1..self.r {
            let prev: &Vec<u32> = &frob[i - 1];
            let next: Vec<u32> = prev.iter().map(|&y| self.pow(Fe(y), self.p as i64).0).collect();
            frob.push(next);
        }
        self.frob = frob;

        // θ has order exactly r: checked on the generator g.
        let g = self.gen();
        for i in 1..self.r {
            if self.frob(g, i as i64) == g {
                return Err(Error::InvalidConfig(format!("Frobenius has order {i} < r on K")));
            }
        }
        if self.r > 1 && self.pow(self.frob(g, self.r as i64 - 1), self.p as i64) != g {
            return Err(Error::InvalidConfig("Frobenius does not have order r".into()));
        }
        Ok(())
    }

    pub fn config(&self) -> &FieldConfig {
        &self.config
    }

    /// Characteristic `p`.
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Size `q` of the base field `F` (equal to `p` since `s = 1`).
    pub fn q(&self) -> u32 {
        self.p
    }

    /// Tower degree `r = [K:F]`, also the order of `θ`.
    pub fn r(&self) -> usize {
        self.r
    }

    /// `|K| = q^r`.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// The monic defining polynomial of `g`, constant coefficient first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    pub fn one(&self) -> Fe {
        Fe::ONE
    }

    /// The power-basis generator `g` (for `r = 1` this is the root of the modulus in `F`).
    pub fn gen(&self) -> Fe {
        if self.r == 1 {
            Fe((self.p - self.modulus[0]) % self.p)
        } else {
            Fe(self.p)
        }
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> Fe {
        Fe(n.rem_euclid(self.p as i64) as u32)
    }

    /// The integer in `0..p` representing an element of `F`, if `a ∈ F`.
    pub fn to_int(&self, a: Fe) -> Option<u32> {
        (a.0 < self.p).then_some(a.0)
    }

    pub fn is_in_base(&self, a: Fe) -> bool {
        a.0 < self.p
    }

    /// Power-basis coordinates over `F`, length `r`.
    pub fn coeffs(&self, a: Fe) -> Vec<u32> {
        self.digits(a.0)
    }

    /// Builds an element from power-basis coordinates (reduced mod `p`,
    /// extra coordinates beyond `r` are reduced through the modulus).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Fe {
        let mut acc = Fe::ZERO;
        let mut gp = Fe::ONE;
        let g = self.gen();
        for &c in coeffs {
            acc = self.add(acc, self.mul(self.from_int(c as i64), gp));
            gp = self.mul(gp, g);
        }
        acc
    }

    /// All elements of `K`, in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.size).map(Fe)
    }

    /// All elements of `F`, in increasing order.
    pub fn base_elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.p).map(Fe)
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.r == 1 {
            return Fe((a.0 + b.0) % self.p);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        for i in 0..self.r {
            let d = (x % self.p + y % self.p) % self.p;
            out += d * self.pow_p[i];
            x /= self.p;
            y /= self.p;
        }
        Fe(out)
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        let mut x = a.0;
        let mut out = 0u32;
        for i in 0..self.r {
            let d = (self.p - x % self.p) % self.p;
            out += d * self.pow_p[i];
            x /= self.p;
        }
        Fe(out)
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        Fe(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    /// Multiplicative inverse.
    ///
    /// Panics on zero; callers that can see a zero check first and report a
    /// typed error.
    #[inline]
    pub fn inv(&self, a: Fe) -> Fe {
        assert!(!a.is_zero(), "inverse of zero in K");
        let n = self.size - 1;
        Fe(self.exp[((n - self.log[a.0 as usize]) % n.max(1)) as usize])
    }

    pub fn div(&self, a: Fe, b: Fe) -> Fe {
        self.mul(a, self.inv(b))
    }

    /// `a^e` for any integer `e` (negative exponents need `a ≠ 0`).
    pub fn pow(&self, a: Fe, e: i64) -> Fe {
        if e == 0 {
            return Fe::ONE;
        }
        if a.is_zero() {
            assert!(e > 0, "zero to a negative power");
            return Fe::ZERO;
        }
        let n = (self.size - 1) as i64;
        let l = (self.log[a.0 as usize] as i64 * e.rem_euclid(n)).rem_euclid(n);
        Fe(self.exp[l as usize])
    }

    /// `θ^i(a) = a^(q^(i mod r))`; `i` may be negative.
    #[inline]
    pub fn frob(&self, a: Fe, i: i64) -> Fe {
        Fe(self.frob[i.rem_euclid(self.r as i64) as usize][a.0 as usize])
    }

    /// `Tr_{K/F}(a) = Σ_{i<r} θ^i(a)`.
    pub fn trace(&self, a: Fe) -> Fe {
        (0..self.r as i64).fold(Fe::ZERO, |acc, i| self.add(acc, self.frob(a, i)))
    }

    /// `N_{K/F}(a) = Π_{i<r} θ^i(a)`.
    pub fn norm(&self, a: Fe) -> Fe {
        (0..self.r as i64).fold(Fe::ONE, |acc, i| self.mul(acc, self.frob(a, i)))
    }

    /// A deterministic element of trace one: the first power-basis vector
    /// `g^k` with nonzero trace, divided by that trace.
    pub fn trace_one_element(&self) -> Fe {
        let g = self.gen();
        let mut basis = Fe::ONE;
        for _ in 0..self.r {
            let t = self.trace(basis);
            if !t.is_zero() {
                return self.div(basis, t);
            }
            basis = self.mul(basis, g);
        }
        unreachable!("the trace K → F is surjective")
    }

    /// Text form as a polynomial in `g` with increasing powers, e.g. `1+4*g`.
    pub fn format(&self, a: Fe) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        if self.r == 1 {
            return a.0.to_string();
        }
        let mut parts = Vec::new();
        for (i, d) in self.coeffs(a).into_iter().enumerate() {
            if d == 0 {
                continue;
            }
            let power = match i {
                0 => String::new(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            };
            parts.push(match (i, d) {
                (0, _) => d.to_string(),
                (_, 1) => power,
                _ => format!("{d}*{power}"),
            });
        }
        parts.join("+")
    }

    /// `r^{-1}` in `F`, or `CharacteristicDividesR`.
    pub fn inv_r(&self) -> Result<Fe> {
        if (self.r as u64).is_multiple_of(self.p as u64) {
            return Err(Error::CharacteristicDividesR { p: self.p, r: self.r });
        }
        Ok(self.inv(self.from_int(self.r as i64)))
    }

    /// The binomial coefficient `binom(j/r, n)` reduced mod `p`.
    ///
    /// `j/r` is a `p`-adic integer when `p ∤ r`; the reduction uses Lucas'
    /// theorem on its base-`p` digits, which stays valid past `n = p − 1`
    /// where the naive recurrence would divide by `p`.
    pub fn binom_fraction(&self, j: i64, n: u64) -> Result<Fe> {
        self.inv_r()?;
        let p = self.p as u64;
        let mut digits_needed = 1u32;
        let mut bound = p;
        while bound <= n {
            bound = bound.saturating_mul(p);
            digits_needed += 1;
        }
        let modulus = p.checked_pow(digits_needed).expect("binomial index too large") as i128;
        let r_inv = mod_inverse(self.r as i128, modulus);
        let mut alpha = ((j as i128).rem_euclid(modulus) * r_inv).rem_euclid(modulus) as u64;
        let mut nn = n;
        let mut acc = 1u64;
        while nn > 0 || alpha > 0 {
            let (a_k, n_k) = (alpha % p, nn % p);
            if n_k > a_k {
                return Ok(Fe::ZERO);
            }
            acc = acc * small_binom_mod(a_k, n_k, p) % p;
            alpha /= p;
            nn /= p;
        }
        Ok(Fe(acc as u32))
    }

    /// Coefficients `c_0..=c_{n_max}` of `(1+u)^{j/r}` reduced mod `p`.
    pub fn binomial_fraction_coeffs(&self, j: i64, n_max: usize) -> Result<Vec<Fe>> {
        (0..=n_max as u64).map(|n| self.binom_fraction(j, n)).collect()
    }
}

fn mod_inverse(a: i128, m: i128) -> i128 {
    let (mut old_r, mut r) = (a.rem_euclid(m), m);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(m)
}

fn small_binom_mod(a: u64, b: u64, p: u64) -> u64 {
    // a, b < p, so every factor below is invertible mod p
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..b {
        num = num * ((a - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    num * inv_mod_prime(den as u32, p as u32) as u64 % p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf25() -> Tower {
        Tower::new(FieldConfig::gf25()).unwrap()
    }

    #[test]
    fn frobenius_on_generator() {
        let k = gf25();
        let g = k.gen();
        // g^5 = g·(g²)² = 4g
        assert_eq!(k.frob(g, 1), k.mul(k.from_int(4), g));
        assert_eq!(k.frob(g, 1), k.pow(g, 5));
        assert_eq!(k.frob(g, 0), g);
        assert_eq!(k.frob(g, 2), g);
        assert_eq!(k.frob(g, -1), k.frob(g, 1));
    }

    #[test]
    fn trace_and_norm_of_generator() {
        let k = gf25();
        let g = k.gen();
        assert_eq!(k.trace(g), Fe::ZERO);
        assert_eq!(k.norm(g), k.from_int(3));
        assert_eq!(k.trace(Fe::ONE), k.from_int(2));
        assert_eq!(k.norm(Fe::ONE), Fe::ONE);
        assert_eq!(k.trace(Fe::ZERO), Fe::ZERO);
        assert_eq!(k.norm(Fe::ZERO), Fe::ZERO);
    }

    #[test]
    fn trace_one_elements() {
        let k = gf25();
        assert_eq!(k.trace_one_element(), k.from_int(3));
        let k4 = Tower::new(FieldConfig::gf4()).unwrap();
        assert_eq!(k4.trace_one_element(), k4.gen());
        assert_eq!(k4.trace(k4.gen()), Fe::ONE);
        let k1 = Tower::new(FieldConfig { p: 7, s: 1, r: 1, modulus: vec![0, 1] }).unwrap();
        assert_eq!(k1.trace_one_element(), Fe::ONE);
    }

    #[test]
    fn rejects_bad_configs() {
        let reducible = FieldConfig { p: 5, s: 1, r: 2, modulus: vec![1, 0, 1] }; // g² + 1 = (g−2)(g+2)
        assert!(matches!(Tower::new(reducible), Err(Error::InvalidConfig(_))));
        let not_prime = FieldConfig { p: 6, s: 1, r: 2, modulus: vec![1, 0, 1] };
        assert!(Tower::new(not_prime).is_err());
        let wrong_len = FieldConfig { p: 5, s: 1, r: 3, modulus: vec![3, 0, 1] };
        assert!(Tower::new(wrong_len).is_err());
        let s2 = FieldConfig { p: 5, s: 2, r: 2, modulus: vec![3, 0, 1] };
        assert!(Tower::new(s2).is_err());
    }

    #[test]
    fn binomial_coefficients_small() {
        let k = gf25();
        // (1+u)^{1/2}: c_1 = 1/2 = 3 in GF(5)
        let c = k.binomial_fraction_coeffs(1, 4).unwrap();
        assert_eq!(c[0], Fe::ONE);
        assert_eq!(c[1], k.from_int(3));
        let whole = k.binomial_fraction_coeffs(2, 5).unwrap();
        assert_eq!(whole, vec![Fe::ONE, Fe::ONE, Fe::ZERO, Fe::ZERO, Fe::ZERO, Fe::ZERO]);
        let zero = k.binomial_fraction_coeffs(0, 3).unwrap();
        assert_eq!(zero, vec![Fe::ONE, Fe::ZERO, Fe::ZERO, Fe::ZERO]);
        let k4 = Tower::new(FieldConfig::gf4()).unwrap();
        assert!(matches!(k4.binomial_fraction_coeffs(1, 3), Err(Error::CharacteristicDividesR { .. })));
    }

    /// Truncated product of two power series over GF(p).
    fn series_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len();
        let mut out = vec![0u64; n];
        for i in 0..n {
            for j in 0..n - i {
                out[i + j] = (out[i + j] + a[i] * b[j]) % p;
            }
        }
        out
    }

    #[test]
    fn binomial_series_raised_to_r() {
        // (Σ c_n u^n)^r = (1+u)^j to order 3p, crossing the n = p boundary
        for cfg in [FieldConfig::gf25(), FieldConfig::gf343()] {
            let k = Tower::new(cfg).unwrap();
            let p = k.p() as u64;
            let len = 3 * p as usize;
            for j in -4i64..=7 {
                let c: Vec<u64> = k.binomial_fraction_coeffs(j, len - 1).unwrap().iter().map(|x| x.0 as u64).collect();
                let mut acc = vec![0u64; len];
                acc[0] = 1;
                for _ in 0..k.r() {
                    acc = series_mul(&acc, &c, p);
                }
                // (1+u)^j by repeated multiplication (or inversion for j < 0)
                let one_plus_u: Vec<u64> = (0..len).map(|i| if i < 2 { 1 } else { 0 }).collect();
                let inv_one_plus_u: Vec<u64> = (0..len).map(|i| if i % 2 == 0 { 1 } else { p - 1 }).collect();
                let base = if j >= 0 { &one_plus_u } else { &inv_one_plus_u };
                let mut expect = vec![0u64; len];
                expect[0] = 1;
                for _ in 0..j.unsigned_abs() {
                    expect = series_mul(&expect, base, p);
                }
                assert_eq!(acc, expect, "j = {j}, r = {}", k.r());
            }
        }
    }

    #[test]
    fn frobenius_has_order_r() {
        for cfg in [FieldConfig::gf25(), FieldConfig::gf343(), FieldConfig::gf4()] {
            let k = Tower::new(cfg).unwrap();
            let g = k.gen();
            assert_eq!(k.frob(g, k.r() as i64), g);
            for i in 1..k.r() as i64 {
                assert_ne!(k.frob(g, i), g);
            }
        }
    }

    #[test]
    fn trace_norm_land_in_base_and_are_homomorphic() {
        let k = Tower::new(FieldConfig::gf343()).unwrap();
        for a in k.elements().step_by(7) {
            assert!(k.is_in_base(k.trace(a)));
            assert!(k.is_in_base(k.norm(a)));
            assert_eq!(k.frob(k.norm(a), 1), k.norm(a));
            for b in k.elements().step_by(31) {
                assert_eq!(k.norm(k.mul(a, b)), k.mul(k.norm(a), k.norm(b)));
                assert_eq!(k.trace(k.add(a, b)), k.add(k.trace(a), k.trace(b)));
            }
        }
    }

    #[test]
    fn coefficient_round_trip() {
        let k = Tower::new(FieldConfig::gf343()).unwrap();
        for a in k.elements() {
            assert_eq!(k.from_coeffs(&k.coeffs(a)), a);
        }
    }
}
