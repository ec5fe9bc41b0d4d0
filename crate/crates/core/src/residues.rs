//! Skew residues at rational points, at `0` and at `∞`, the residue
//! theorems as checkable sums, and the change of variables for central `C`.

pub use crate::commutative_oracle::Point;
use crate::commutative_oracle::{residue_at, split_roots, substitute_root};
use crate::error::{Error, Result};
use crate::field_tower::{Fe, Tower};
use crate::fractions::{apply_morphism_frac, SkewFrac};
use crate::poly::{Poly, RatFn};
use crate::taylor::{expand, expand_at_infinity, expand_at_zero, Method, Order, QElem};

/// The residue of `f` at one point.
///
/// `full` is the class of the `T^{−1}` coefficient in `A/NA` (absent at
/// `0` and `∞`); `partial[j]` is the `j`-th partial residue in `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueRecord {
    pub point: Point,
    pub full: Option<QElem>,
    pub partial: Vec<Fe>,
}

impl ResidueRecord {
    /// `Σ_j partial_j·X^j` as a class mod `Y − z`.
    pub fn rebuild_full(&self) -> Option<QElem> {
        let z = match self.point {
            Point::Finite(z) => z,
            _ => return None,
        };
        Some(QElem::class(self.partial.clone(), z))
    }
}

fn check_index(j: i64, k: &Tower) -> Result<usize> {
    if j < 0 || j >= k.r() as i64 {
        return Err(Error::IndexOutOfRange { j, r: k.r() });
    }
    Ok(j as usize)
}

fn check_nonzero_base(z: Fe, k: &Tower) -> Result<()> {
    if z.is_zero() {
        return Err(Error::ZeroPoint);
    }
    if !k.is_in_base(z) {
        return Err(Error::PointNotInBase(z.0));
    }
    Ok(())
}

/// The expansion method used when none is requested: canonical if `p ∤ r`.
pub fn preferred_method(k: &Tower) -> Method {
    if k.inv_r().is_ok() {
        Method::Canonical
    } else {
        Method::Hensel
    }
}

/// `sres_z(f)` at `z ∈ F \ {0}`: the `T^{−1}` coefficient of the expansion.
pub fn sres(f: &SkewFrac, z: Fe, method: Method, k: &Tower) -> Result<ResidueRecord> {
    check_nonzero_base(z, k)?;
    let full = expand(f, z, method, 0, k)?.coeff(-1);
    Ok(ResidueRecord { point: Point::Finite(z), partial: full.components(), full: Some(full) })
}

/// `sres_{0,j}(f)`: the coefficient of `X^{j−r}` in `K((X; θ))`.
pub fn sres_zero(f: &SkewFrac, j: i64, k: &Tower) -> Result<Fe> {
    check_index(j, k)?;
    let e = j - k.r() as i64;
    Ok(expand_at_zero(f, e + 1, k).coeff(e))
}

/// `sres_{∞,j}(f)`: the opposite of the coefficient of `X̃^{r−j}`.
pub fn sres_infinity(f: &SkewFrac, j: i64, k: &Tower) -> Result<Fe> {
    check_index(j, k)?;
    let e = k.r() as i64 - j;
    Ok(k.neg(expand_at_infinity(f, e + 1, k).coeff(e)))
}

/// The residue record at any rational point.
pub fn sres_at(f: &SkewFrac, point: Point, method: Method, k: &Tower) -> Result<ResidueRecord> {
    let r = k.r() as i64;
    match point {
        Point::Finite(z) if !z.is_zero() => sres(f, z, method, k),
        Point::Finite(_) | Point::Zero => Ok(ResidueRecord {
            point: Point::Zero,
            full: None,
            partial: (0..r).map(|j| sres_zero(f, j, k)).collect::<Result<_>>()?,
        }),
        Point::Infinity => Ok(ResidueRecord {
            point: Point::Infinity,
            full: None,
            partial: (0..r).map(|j| sres_infinity(f, j, k)).collect::<Result<_>>()?,
        }),
    }
}

/// The partial order `ord_{z,j}(f)` read from the expansion with `method`.
pub fn partial_order(f: &SkewFrac, z: Fe, j: usize, method: Method, k: &Tower) -> Result<Order> {
    check_nonzero_base(z, k)?;
    let series = expand(f, z, method, 0, k)?;
    let found = series.terms().find(|(_, c)| !c.component(j).is_zero()).map(|(n, _)| n);
    Ok(found.map_or(Order::AtLeast(0), Order::Exact))
}

/// A two-route comparison of one value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeReport {
    pub skew: Fe,
    pub commutative: Fe,
    pub equal: bool,
}

/// Compares `sres_{z,j}(f)` with the classical residue `res_z(sec_j(f)·dY)`.
///
/// At `z ∈ F \ {0}` and `j ≠ 0` this needs `ord_{z,j}(f) ≥ −1`.
pub fn bridge_check(f: &SkewFrac, point: Point, j: i64, k: &Tower) -> Result<BridgeReport> {
    let ju = check_index(j, k)?;
    let skew = match point {
        Point::Finite(z) if !z.is_zero() => {
            let method = preferred_method(k);
            if ju != 0 {
                if let Order::Exact(o) = partial_order(f, z, ju, method, k)? {
                    if o < -1 {
                        return Err(Error::SimplePoleRequired { point: point.to_string(), order: o });
                    }
                }
            }
            sres(f, z, method, k)?.partial[ju]
        }
        Point::Finite(_) | Point::Zero => sres_zero(f, j, k)?,
        Point::Infinity => sres_infinity(f, j, k)?,
    };
    let commutative = residue_at(&f.section(j, k), point, k);
    Ok(BridgeReport { skew, commutative, equal: skew == commutative })
}

/// The residue sum with its per-point breakdown (finite poles ascending,
/// then `0`, then `∞`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueSum {
    pub sum: Fe,
    pub breakdown: Vec<(Point, Fe)>,
}

/// `Σ_z sres_{z,j}(f)` over `(F \ {0}) ∪ {0, ∞}`.
pub fn residue_sum(f: &SkewFrac, j: i64, k: &Tower) -> Result<ResidueSum> {
    let ju = check_index(j, k)?;
    if f.is_zero() {
        return Ok(ResidueSum { sum: Fe::ZERO, breakdown: Vec::new() });
    }
    let roots = split_roots(f.den(), k)?;
    if ju != 0 {
        if let Some(&(z, e)) = roots.iter().find(|&&(_, e)| e > 1) {
            return Err(Error::SimplePoleRequired { point: Point::finite(z).to_string(), order: -(e as i64) });
        }
    }
    let method = preferred_method(k);
    let mut breakdown = Vec::with_capacity(roots.len() + 2);
    for &(z, _) in &roots {
        breakdown.push((Point::Finite(z), sres(f, z, method, k)?.partial[ju]));
    }
    breakdown.push((Point::Zero, sres_zero(f, j, k)?));
    breakdown.push((Point::Infinity, sres_infinity(f, j, k)?));
    let sum = breakdown.iter().fold(Fe::ZERO, |acc, &(_, v)| k.add(acc, v));
    Ok(ResidueSum { sum, breakdown })
}

/// A left/right comparison of a theorem instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub lhs: Fe,
    pub rhs: Fe,
    pub equal: bool,
}

/// Compares `sres_{ζ^r, j}(f)` (canonical) with
/// `r·ζ^{−j}·res_ζ(y^{j+r−1}·sec_j(f)(y^r)·dy)`.
pub fn zeta_root_check(f: &SkewFrac, j: i64, zeta: Fe, k: &Tower) -> Result<CheckReport> {
    let ju = check_index(j, k)?;
    let r_inv = k.inv_r()?;
    check_nonzero_base(zeta, k)?;
    split_roots(f.den(), k)?;
    let r = k.r() as i64;
    let z = k.pow(zeta, r);
    let lhs = sres(f, z, Method::Canonical, k)?.partial[ju];
    let weight = RatFn::from_poly(Poly::monomial(Fe::ONE, (j + r - 1) as usize));
    let pulled = substitute_root(&f.section(j, k), k).mul(&weight, k);
    let res = residue_at(&pulled, Point::finite(zeta), k);
    let rhs = k.mul(k.div(k.pow(zeta, -j), r_inv), res);
    Ok(CheckReport { lhs, rhs, equal: lhs == rhs })
}

fn central_nonzero(c: &RatFn, k: &Tower) -> Result<()> {
    if c.is_zero() {
        return Err(Error::ZeroC);
    }
    if !c.is_in_base(k) {
        return Err(Error::NotCentral);
    }
    Ok(())
}

/// `Z = C^r·Y`, the image of `Y` under `γ_C` for central `C`.
pub fn gamma_coordinate(c: &RatFn, k: &Tower) -> Result<RatFn> {
    central_nonzero(c, k)?;
    Ok(c.pow(k.r() as i64, k)?.mul(&RatFn::variable(), k))
}

/// True when `Z` has neither a zero nor a pole at `z`.
pub fn is_gamma_regular(c: &RatFn, z: Fe, k: &Tower) -> Result<bool> {
    let zz = gamma_coordinate(c, k)?;
    Ok(zz.eval(z, k).is_some_and(|v| !v.is_zero()))
}

/// `γ⋆z = Z(z)`.
pub fn gamma_star(c: &RatFn, z: Fe, k: &Tower) -> Result<Fe> {
    let zz = gamma_coordinate(c, k)?;
    match zz.eval(z, k) {
        Some(v) if !v.is_zero() => Ok(v),
        _ => Err(Error::NotRegular),
    }
}

/// Both sides of the change of variables at `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChvarReport {
    pub lhs: ResidueRecord,
    pub rhs: ResidueRecord,
    pub equal: bool,
}

/// Compares `γ(sres_{γ⋆z}(f))` with `sres_z(γ(f)·dZ/dY)` for central `C`.
///
/// `γ` induces `A/(Y−γ⋆z) → A/(Y−z)`, `X ↦ C(z)·X`. With
/// `Method::Hensel` the pole of `f` at `γ⋆z` must be simple.
///
/// Besides `γ`-regularity, `dZ/dY` must not vanish at `z`: when it does, `Z`
/// is ramified over `γ⋆z` and the two sides differ by the ramification
/// index. Such points are rejected with `NotRegular`.
pub fn chvar_check(c: &RatFn, z: Fe, f: &SkewFrac, method: Method, k: &Tower) -> Result<ChvarReport> {
    check_nonzero_base(z, k)?;
    if method == Method::Canonical {
        k.inv_r()?;
    }
    let w = gamma_star(c, z, k)?;
    let dz = gamma_coordinate(c, k)?.deriv(k);
    if dz.eval(z, k).is_none_or(|v| v.is_zero()) {
        return Err(Error::NotRegular);
    }
    if method == Method::Hensel {
        let e = f.pole_multiplicity(w, k) as i64;
        if e != 1 {
            return Err(Error::SimplePoleRequired { point: Point::Finite(w).to_string(), order: -e });
        }
    }
    let cz = c.eval(z, k).ok_or(Error::NotRegular)?;
    let at_w = sres(f, w, method, k)?;
    let partial: Vec<Fe> = at_w.partial.iter().enumerate().map(|(j, &p)| k.mul(p, k.pow(cz, j as i64))).collect();
    let lhs = ResidueRecord { point: Point::Finite(z), full: Some(QElem::class(partial.clone(), z)), partial };
    let dz = SkewFrac::from_central(&dz, k)?;
    let transformed = apply_morphism_frac(c, f, k)?.mul(&dz, k);
    let rhs = sres(&transformed, z, method, k)?;
    Ok(ChvarReport { equal: lhs == rhs, lhs, rhs })
}

/// A degree-one morphism `A/(Y−z1) → A/(Y−z2)` exists iff `z1/z2` is a
/// norm from `K`; returns the first `c` in encoding order with `N(c) = z1/z2`.
pub fn quotient_morphism_exists(z1: Fe, z2: Fe, k: &Tower) -> Result<(bool, Option<Fe>)> {
    check_nonzero_base(z1, k)?;
    check_nonzero_base(z2, k)?;
    let target = k.div(z1, z2);
    let witness = k.elements().find(|&c| k.norm(c) == target);
    Ok((witness.is_some(), witness))
}
