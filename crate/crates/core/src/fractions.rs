//! Skew rational functions `num / den` with a central denominator.
//!
//! Every element of `Frac(A)` has the form `D^{−1}·f` with `D ∈ F[Y]` and
//! `f ∈ A`. The stored form is normalized: `den` is monic with nonzero
//! constant term (powers of `Y` are absorbed into the `X`-valuation of
//! `num`), and no nonconstant central factor of `den` divides `num`. That
//! normal form is unique, so structural equality is equality in `Frac(A)`.

use crate::error::{Error, Result};
use crate::field_tower::{Fe, Tower};
use crate::poly::{LPoly, Poly, RatFn};
use crate::skew_ring::{central_right_multiple, section, twisted_norm, SkewPoly};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewFrac {
    num: SkewPoly,
    den: Poly,
}

impl SkewFrac {
    /// Builds and normalizes `num / den`; `den` must be a nonzero element of `F[Y]`.
    pub fn new(num: SkewPoly, den: Poly, k: &Tower) -> Result<SkewFrac> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !den.is_in_base(k) {
            return Err(Error::NotCentral);
        }
        if num.is_zero() {
            return Ok(SkewFrac::zero());
        }
        let c = k.inv(den.lead());
        let mut num = num.scale_left(c, k);
        let mut den = den.scale(c, k);
        let v = den.low_degree().unwrap();
        if v > 0 {
            den = Poly::from_coeffs(den.coeffs()[v..].to_vec());
            num = num.shift(-((v * k.r()) as i64));
        }
        if den.degree() == Some(0) {
            return Ok(SkewFrac { num, den });
        }
        let secs: Vec<LPoly> = (0..k.r() as i64).map(|j| section(&num, j, k)).collect();
        let mut g = den.clone();
        for s in &secs {
            let (_, p) = s.to_shifted_poly();
            for i in 0..k.r() as i64 {
                g = Poly::gcd(&g, &p.frob(i, k), k);
            }
        }
        if g.degree() == Some(0) {
            return Ok(SkewFrac { num, den });
        }
        let reduced: Vec<LPoly> = secs
            .iter()
            .map(|s| {
                let (val, p) = s.to_shifted_poly();
                LPoly::from_poly(&p.exact_div(&g, k)).shift(val)
            })
            .collect();
        num = crate::skew_ring::from_sections(&reduced, k);
        den = den.exact_div(&g, k);
        Ok(SkewFrac { num, den })
    }

    pub fn zero() -> SkewFrac {
        SkewFrac { num: SkewPoly::zero(), den: Poly::one() }
    }

    pub fn one() -> SkewFrac {
        SkewFrac::from_skew(SkewPoly::one())
    }

    pub fn from_skew(num: SkewPoly) -> SkewFrac {
        SkewFrac { num, den: Poly::one() }
    }

    /// A central rational function `P(Y)/Q(Y)` with `P, Q ∈ F[Y]`.
    pub fn from_central(c: &RatFn, k: &Tower) -> Result<SkewFrac> {
        if !c.is_in_base(k) {
            return Err(Error::NotCentral);
        }
        SkewFrac::new(SkewPoly::from_y_poly(c.num(), k), c.den().clone(), k)
    }

    /// An element `u/v` of `Frac(C) = K(Y)`, made central-denominator by
    /// multiplying through with the conjugates `θ(v)⋯θ^{r−1}(v)`.
    pub fn from_coef(c: &RatFn, k: &Tower) -> SkewFrac {
        let conj = (1..k.r() as i64).fold(Poly::one(), |acc, i| acc.mul(&c.den().frob(i, k), k));
        let num = c.num().mul(&conj, k);
        let den = c.den().mul(&conj, k);
        SkewFrac::new(SkewPoly::from_y_poly(&num, k), den, k).expect("norm of a denominator is central")
    }

    /// `Σ_j R_j·X^j` for `R_j ∈ K(Y)`.
    pub fn from_sections(secs: &[RatFn], k: &Tower) -> SkewFrac {
        secs.iter().enumerate().fold(SkewFrac::zero(), |acc, (j, s)| {
            acc.add(&SkewFrac::from_coef(s, k).mul(&SkewFrac::from_skew(SkewPoly::monomial(Fe::ONE, j as i64)), k), k)
        })
    }

    pub fn num(&self) -> &SkewPoly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is trivial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, o: &SkewFrac, k: &Tower) -> SkewFrac {
        let d1 = SkewPoly::from_y_poly(&self.den, k);
        let d2 = SkewPoly::from_y_poly(&o.den, k);
        let num = self.num.mul(&d2, k).add(&o.num.mul(&d1, k), k);
        SkewFrac::new(num, self.den.mul(&o.den, k), k).expect("central denominators")
    }

    pub fn neg(&self, k: &Tower) -> SkewFrac {
        SkewFrac { num: self.num.neg(k), den: self.den.clone() }
    }

    pub fn sub(&self, o: &SkewFrac, k: &Tower) -> SkewFrac {
        self.add(&o.neg(k), k)
    }

    pub fn mul(&self, o: &SkewFrac, k: &Tower) -> SkewFrac {
        SkewFrac::new(self.num.mul(&o.num, k), self.den.mul(&o.den, k), k).expect("central denominators")
    }

    /// Uses a central multiple `num·g = N`: the inverse is `(g·den)/N`.
    pub fn inverse(&self, k: &Tower) -> Result<SkewFrac> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let (g, n) = central_right_multiple(&self.num, k)?;
        SkewFrac::new(g.mul(&SkewPoly::from_y_poly(&self.den, k), k), n, k)
    }

    pub fn div(&self, o: &SkewFrac, k: &Tower) -> Result<SkewFrac> {
        Ok(self.mul(&o.inverse(k)?, k))
    }

    pub fn pow(&self, e: i64, k: &Tower) -> Result<SkewFrac> {
        let base = if e < 0 {
            if self.is_zero() {
                return Err(Error::ZeroToNegativePower);
            }
            self.inverse(k)?
        } else {
            self.clone()
        };
        Ok((0..e.unsigned_abs()).fold(SkewFrac::one(), |acc, _| acc.mul(&base, k)))
    }

    /// Equality by cross-multiplication `num1·den2 = num2·den1`.
    pub fn cross_eq(&self, o: &SkewFrac, k: &Tower) -> bool {
        let l = self.num.mul(&SkewPoly::from_y_poly(&o.den, k), k);
        let r = o.num.mul(&SkewPoly::from_y_poly(&self.den, k), k);
        l == r
    }

    /// `deg num − r·deg den`; `None` stands for `−∞`.
    pub fn degree(&self, k: &Tower) -> Option<i64> {
        Some(self.num.degree()? - (k.r() * self.den.degree().unwrap()) as i64)
    }

    /// `sec_j(num)/den` as an element of `K(Y)`.
    pub fn section(&self, j: i64, k: &Tower) -> RatFn {
        let s = section(&self.num, j, k).to_ratfn(k);
        s.div(&RatFn::from_poly(self.den.clone()), k).expect("nonzero denominator")
    }

    /// The central element, when the fraction lies in `F(Y)`.
    pub fn to_central(&self, k: &Tower) -> Option<RatFn> {
        let c = self.num.to_central(k)?;
        Some(c.to_ratfn(k).div(&RatFn::from_poly(self.den.clone()), k).expect("nonzero denominator"))
    }

    /// The multiplicity of `Y − z` in the denominator.
    pub fn pole_multiplicity(&self, z: Fe, k: &Tower) -> usize {
        self.den.root_multiplicity(z, k)
    }
}

/// `γ_C(f)` for `C ∈ K(Y)` nonzero: `X ↦ C·X`, hence `Y ↦ N_r(C)·Y`.
pub fn apply_morphism_frac(c: &RatFn, f: &SkewFrac, k: &Tower) -> Result<SkewFrac> {
    if c.is_zero() {
        return Err(Error::ZeroC);
    }
    let mut num = SkewFrac::zero();
    for (e, a) in f.num().terms() {
        if a.is_zero() {
            continue;
        }
        let n = twisted_norm(c, e, k)?.scale(a, k);
        num = num.add(&SkewFrac::from_coef(&n, k).mul(&SkewFrac::from_skew(SkewPoly::monomial(Fe::ONE, e)), k), k);
    }
    let z = twisted_norm(c, k.r() as i64, k)?.mul(&RatFn::variable(), k);
    let den = f.den().coeffs().iter().rev().fold(RatFn::zero(), |acc, &d| acc.mul(&z, k).add(&RatFn::constant(d), k));
    Ok(num.mul(&SkewFrac::from_coef(&den.inv(k)?, k), k))
}
