#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use skewres_core::skew_ring::SkewPoly;
use skewres_core::{Fe, FieldConfig, Tower};

pub fn tower(cfg: FieldConfig) -> Tower {
    Tower::new(cfg).unwrap()
}

pub fn configs() -> Vec<Tower> {
    vec![tower(FieldConfig::gf25()), tower(FieldConfig::gf343()), tower(FieldConfig::gf4())]
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Schoolbook arithmetic in `GF(p)[g]/(modulus)` on coordinate vectors.
pub struct NaiveField {
    pub p: u64,
    pub r: usize,
    pub modulus: Vec<u64>,
}

impl NaiveField {
    pub fn of(k: &Tower) -> NaiveField {
        NaiveField { p: k.p() as u64, r: k.r(), modulus: k.modulus().iter().map(|&c| c as u64).collect() }
    }

    pub fn decode(&self, a: Fe) -> Vec<u64> {
        let mut v = a.0 as u64;
        (0..self.r)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    pub fn encode(&self, c: &[u64]) -> Fe {
        Fe(c.iter().rev().fold(0u64, |acc, &d| acc * self.p + d % self.p) as u32)
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let (x, y) = (self.decode(a), self.decode(b));
        self.encode(&x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect::<Vec<_>>())
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        let (x, y) = (self.decode(a), self.decode(b));
        let mut prod = vec![0u64; 2 * self.r];
        for (i, u) in x.iter().enumerate() {
            for (j, v) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * v) % self.p;
            }
        }
        // reduce with the monic modulus, highest degree first
        for d in (self.r..2 * self.r).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            for (i, m) in self.modulus.iter().enumerate().take(self.r) {
                let idx = d - self.r + i;
                prod[idx] = (prod[idx] + (self.p - c) * m) % self.p;
            }
            prod[d] = 0;
        }
        self.encode(&prod[..self.r])
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut acc = Fe::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `θ^i(a) = a^{p^i}`, with `i` reduced mod `r`.
    pub fn frob(&self, a: Fe, i: i64) -> Fe {
        let i = i.rem_euclid(self.r as i64) as u32;
        self.pow(a, self.p.pow(i))
    }

    pub fn inv(&self, a: Fe) -> Fe {
        let size = self.p.pow(self.r as u32);
        self.pow(a, size - 2)
    }
}

/// A skew Laurent polynomial as an exponent map, multiplied by the
/// commutation rule `X^i·b = θ^i(b)·X^i` term by term.
pub type Terms = BTreeMap<i64, Fe>;

pub fn terms_of(f: &SkewPoly) -> Terms {
    f.terms().filter(|(_, c)| !c.is_zero()).collect()
}

pub fn naive_skew_mul(a: &Terms, b: &Terms, nf: &NaiveField) -> Terms {
    let mut out = Terms::new();
    for (&i, &x) in a {
        for (&j, &y) in b {
            let t = nf.mul(x, nf.frob(y, i));
            let e = out.entry(i + j).or_insert(Fe::ZERO);
            *e = nf.add(*e, t);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `(1 + T)^{j/r}` as the `j`-th power of the unique series `c` with
/// `c(0) = 1` and `c^r = 1 + T`, solved coefficient by coefficient over
/// `Z/p` by trying every digit.
pub fn root_series_power(p: u64, r: usize, j: i64, n_max: usize) -> Vec<u64> {
    let mul = |a: &[u64], b: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; n_max + 1];
        for (i, x) in a.iter().enumerate() {
            for (l, y) in b.iter().enumerate() {
                if i + l <= n_max {
                    out[i + l] = (out[i + l] + x * y) % p;
                }
            }
        }
        out
    };
    let power = |a: &[u64], e: usize| {
        (0..e).fold(
            {
                let mut one = vec![0; n_max + 1];
                one[0] = 1;
                one
            },
            |acc, _| mul(&acc, a),
        )
    };
    let mut c = vec![0u64; n_max + 1];
    c[0] = 1;
    for n in 1..=n_max {
        let target = if n == 1 { 1 } else { 0 };
        c[n] = (0..p)
            .find(|&d| {
                let mut t = c.clone();
                t[n] = d;
                power(&t, r)[n] == target
            })
            .unwrap();
    }
    let inv = {
        // inverse series of c
        let mut out = vec![0u64; n_max + 1];
        out[0] = 1;
        for n in 1..=n_max {
            let s: u64 = (1..=n).map(|i| c[i] * out[n - i] % p).sum::<u64>() % p;
            out[n] = (p - s) % p;
        }
        out
    };
    power(if j >= 0 { &c } else { &inv }, j.unsigned_abs() as usize)
}
