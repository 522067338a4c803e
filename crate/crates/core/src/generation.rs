//! Conjugate-power forms of pairs `(u, v)` with `u` in `A \ H`, `v` in
//! `B \ H`, and the criterion deciding when `x^-1 a^k x`, `y^-1 b^l y`
//! generate the whole group.

use thiserror::Error;

use crate::amalgam::{FactorElem, GElem, Side, Syllable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerationError {
    #[error("exponents r and s must be nonzero")]
    ZeroExponent,
    #[error("first element must lie in A but not in H")]
    FirstNotInAMinusH,
    #[error("second element must lie in B but not in H")]
    SecondNotInBMinusH,
    #[error("u^r and v^s do not commute")]
    PowersDoNotCommute,
    #[error("u^r or v^s lies outside H; no conjugate-power form exists")]
    NotSatisfiable,
    #[error("element is not in vertex group {0}")]
    NotInFactor(Side),
}

/// `u = x^-1 a^k x` and `v = y^-1 b^l y` with `x` in `A`, `y` in `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugatePowerForm {
    pub x: GElem,
    pub k: i64,
    pub y: GElem,
    pub l: i64,
}

impl ConjugatePowerForm {
    /// `x^-1 a^k x`.
    pub fn u(&self) -> GElem {
        GElem::a(self.x.params(), self.k).conjugate_by(&self.x)
    }

    /// `y^-1 b^l y`.
    pub fn v(&self) -> GElem {
        GElem::b(self.y.params(), self.l).conjugate_by(&self.y)
    }

    /// Determinant of the exponent-sum matrix of `(u, v)`; here always `k * l`.
    pub fn abelianization_det(&self) -> i64 {
        let (ua, ub) = self.u().exponent_sums();
        let (va, vb) = self.v().exponent_sums();
        ua * vb - ub * va
    }
}

/// Extracts the conjugate-power form of `(u, v)` given `[u^r, v^s] = 1`.
///
/// Cyclic reduction happens inside `A = <a> *_{<c>} H` (resp. `B`), not in
/// `G`. The core is either a power of `a` or an element of `H`; in the second
/// case it must be a power of `c = a^m`.
pub fn conjugate_power_forms(
    u: &GElem,
    v: &GElem,
    r: i64,
    s: i64,
) -> Result<ConjugatePowerForm, GenerationError> {
    if r == 0 || s == 0 {
        return Err(GenerationError::ZeroExponent);
    }
    if !u.in_factor(Side::A) || u.in_h() {
        return Err(GenerationError::FirstNotInAMinusH);
    }
    if !v.in_factor(Side::B) || v.in_h() {
        return Err(GenerationError::SecondNotInBMinusH);
    }
    let (ur, vs) = (u.pow(r), v.pow(s));
    if !ur.commutes_with(&vs) {
        return Err(GenerationError::PowersDoNotCommute);
    }
    if !ur.in_h() || !vs.in_h() {
        return Err(GenerationError::NotSatisfiable);
    }
    let params = u.params();
    let (x, k) = root_power_conjugate(&u.as_factor(Side::A).expect("u in A"))?;
    let (y, l) = root_power_conjugate(&v.as_factor(Side::B).expect("v in B"))?;
    let form = ConjugatePowerForm {
        x: GElem::from_factor(&x, params),
        k,
        y: GElem::from_factor(&y, params),
        l,
    };
    debug_assert_eq!((k * r) % params.m(), 0);
    debug_assert_eq!((l * s) % params.n(), 0);
    debug_assert_eq!(form.u(), *u);
    debug_assert_eq!(form.v(), *v);
    Ok(form)
}

/// Writes a vertex-group element as `x^-1 root^k x`.
fn root_power_conjugate(g: &FactorElem) -> Result<(FactorElem, i64), GenerationError> {
    let (conj, core) = g.cyclic_core();
    match core.as_root_power() {
        Some(k) if k != 0 => Ok((conj.inverse(), k)),
        _ => Err(GenerationError::NotSatisfiable),
    }
}

/// `x = a^p d^q` read off from the normal form of `x` in `A`.
pub fn a_d_exponents(x: &GElem) -> Result<Option<(i64, i64)>, GenerationError> {
    let fx = x
        .as_factor(Side::A)
        .ok_or(GenerationError::NotInFactor(Side::A))?;
    Ok(root_free_exponents(&fx, x.params().m()))
}

/// `y = b^r c^s` read off from the normal form of `y` in `B`.
pub fn b_c_exponents(y: &GElem) -> Result<Option<(i64, i64)>, GenerationError> {
    let fy = y
        .as_factor(Side::B)
        .ok_or(GenerationError::NotInFactor(Side::B))?;
    Ok(root_free_exponents(&fy, y.params().n()))
}

fn root_free_exponents(x: &FactorElem, order: i64) -> Option<(i64, i64)> {
    let base = x.head() * order;
    match *x.syllables() {
        [] => Some((base, 0)),
        [Syllable::Root(r)] => Some((base + r, 0)),
        [Syllable::Free(f)] => Some((base, f)),
        [Syllable::Root(r), Syllable::Free(f)] => Some((base + r, f)),
        _ => None,
    }
}

/// Whether `x` lies in the product set `<a><d>`.
pub fn in_a_d(x: &GElem) -> Result<bool, GenerationError> {
    Ok(a_d_exponents(x)?.is_some())
}

/// Whether `y` lies in the product set `<b><c>`.
pub fn in_b_c(y: &GElem) -> Result<bool, GenerationError> {
    Ok(b_c_exponents(y)?.is_some())
}

/// `x^-1 a^k x` and `y^-1 b^l y` generate `G` iff `|k| = |l| = 1`,
/// `x` is in `<a><d>` and `y` is in `<b><c>`.
pub fn is_generating_pair_from_forms(f: &ConjugatePowerForm) -> bool {
    f.k.abs() == 1
        && f.l.abs() == 1
        && in_a_d(&f.x).unwrap_or(false)
        && in_b_c(&f.y).unwrap_or(false)
}
