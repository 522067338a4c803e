use std::fmt;

use thiserror::Error;

use super::factor::Side;
use super::gelem::GElem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AmalgamError {
    #[error("exponent must be nonzero")]
    ZeroExponent,
    #[error("element already lies in {0}")]
    AlreadyInFactor(Side),
    #[error("the given power does not lie in {0}")]
    PowerNotInFactor(Side),
    #[error("cyclic core has length greater than 1, so no power lands in a vertex group")]
    CoreTooLong,
    #[error("core y does not satisfy y^k in H")]
    CorePowerNotInH,
    #[error("expected a cyclically reduced element of length greater than 1")]
    NotCyclicallyReducedLong,
    #[error("elements do not commute")]
    DoNotCommute,
    #[error("length did not strictly decrease while dividing by the generator")]
    LengthDidNotDecrease,
}

/// `g = u v u^-1` with `v` cyclically reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicDecomposition {
    pub u: GElem,
    pub v: GElem,
}

impl CyclicDecomposition {
    pub fn recompose(&self) -> GElem {
        self.u.mul(&self.v).mul(&self.u.inverse())
    }

    /// For a nontrivial decomposition (`l(u) >= 1`, `l(g) > 1`): the last
    /// factor of `u` and the first factor of `v` lie in different vertex
    /// groups, and when `l(v) > 1` the product of the last factor of `v` with
    /// the inverse of the last factor of `u` is outside `H`.
    pub fn satisfies_side_conditions(&self) -> bool {
        if self.u.is_identity() {
            return true;
        }
        let Some(u_last) = self.u.reps().last() else {
            return false;
        };
        let v_first = match self.v.reps().first() {
            Some(r) => r.side(),
            None => return false,
        };
        if u_last.side() == v_first {
            return false;
        }
        if self.v.reps().len() > 1 {
            let params = self.u.params();
            let x_r = if self.u.reps().len() == 1 {
                self.u.clone()
            } else {
                GElem::from_factor(u_last, params)
            };
            let y_s = GElem::from_factor(self.v.reps().last().expect("nonempty"), params);
            return !y_s.mul(&x_r.inverse()).in_h();
        }
        true
    }
}

/// Conjugates `g` to a cyclically reduced element, stripping the leading
/// factor `h r_1` at every step.
pub fn cyclic_decompose(g: &GElem) -> CyclicDecomposition {
    let params = g.params();
    let mut u = GElem::identity(params);
    let mut v = g.clone();
    while !v.is_cyclically_reduced() {
        let x = GElem::from_factor(&v.first_factor(), params);
        v = v.conjugate_by(&x);
        u = u.mul(&x);
    }
    CyclicDecomposition { u, v }
}

/// `g^-1 H g ∩ H` as a subgroup of `H = <c, d>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HIntersection {
    AllOfH,
    CyclicC,
    CyclicD,
    Trivial,
}

impl HIntersection {
    /// Whether `c^p d^q` belongs to the subgroup.
    pub fn contains(self, p: i64, q: i64) -> bool {
        match self {
            HIntersection::AllOfH => true,
            HIntersection::CyclicC => q == 0,
            HIntersection::CyclicD => p == 0,
            HIntersection::Trivial => p == 0 && q == 0,
        }
    }
}

impl fmt::Display for HIntersection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HIntersection::AllOfH => "H",
            HIntersection::CyclicC => "<c>",
            HIntersection::CyclicD => "<d>",
            HIntersection::Trivial => "1",
        })
    }
}

pub fn h_intersection(g: &GElem) -> HIntersection {
    match g.reps() {
        [] => HIntersection::AllOfH,
        [r] if r.side() == Side::A => HIntersection::CyclicC,
        [_] => HIntersection::CyclicD,
        _ => HIntersection::Trivial,
    }
}

/// `g = x^-1 y x` with `y` in a vertex group and `y^k` in `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDecomposition {
    pub x: GElem,
    pub y: GElem,
}

/// For `g` outside the vertex group `factor` with `g^k` inside it, finds a
/// conjugate of `g` lying in `A` or `B` whose `k`-th power is in `H`.
pub fn root_in_factor(g: &GElem, k: i64, factor: Side) -> Result<RootDecomposition, AmalgamError> {
    if k == 0 {
        return Err(AmalgamError::ZeroExponent);
    }
    if g.in_factor(factor) {
        return Err(AmalgamError::AlreadyInFactor(factor));
    }
    if !g.pow(k).in_factor(factor) {
        return Err(AmalgamError::PowerNotInFactor(factor));
    }
    let CyclicDecomposition { u, v } = cyclic_decompose(g);
    if v.length() > 1 {
        return Err(AmalgamError::CoreTooLong);
    }
    if !v.pow(k).in_h() {
        return Err(AmalgamError::CorePowerNotInH);
    }
    Ok(RootDecomposition {
        x: u.inverse(),
        y: v,
    })
}

/// `generator^exponent = v`, where `generator` generates the cyclic group `<u, v>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerExpression {
    pub generator: GElem,
    pub exponent: i64,
}

/// Writes `v` as a power of a generator of the abelian subgroup `<u, v>`.
///
/// `u` must be cyclically reduced of length greater than 1; such a subgroup
/// is then cyclic. The generator is found by a Euclidean descent on length:
/// orient the longer element so its first factor shares a vertex group with
/// the shorter one, divide, and repeat. When `u` itself generates, the
/// returned generator is `u`.
pub fn express_as_power(u: &GElem, v: &GElem) -> Result<PowerExpression, AmalgamError> {
    if u.length() < 2 || !u.is_cyclically_reduced() {
        return Err(AmalgamError::NotCyclicallyReducedLong);
    }
    if !u.commutes_with(v) {
        return Err(AmalgamError::DoNotCommute);
    }
    // rows: exponents of (u, v) expressing x and y
    let mut x = u.clone();
    let mut y = v.clone();
    let mut mx = [1i64, 0];
    let mut my = [0i64, 1];
    while !y.is_identity() {
        if y.length() < 2 || !y.is_cyclically_reduced() {
            return Err(AmalgamError::NotCyclicallyReducedLong);
        }
        if y.length() < x.length() {
            std::mem::swap(&mut x, &mut y);
            std::mem::swap(&mut mx, &mut my);
        }
        let same_start = x.reps()[0].side() == y.reps()[0].side();
        let next = if same_start {
            my = [my[0] - mx[0], my[1] - mx[1]];
            x.inverse().mul(&y)
        } else {
            my = [-my[0] - mx[0], -my[1] - mx[1]];
            x.inverse().mul(&y.inverse())
        };
        if !next.is_identity() && next.length() >= y.length() {
            return Err(AmalgamError::LengthDidNotDecrease);
        }
        y = next;
    }
    // (log x, 0) = M (log u, log v); solve for log v in units of log x.
    let det = mx[0] * my[1] - mx[1] * my[0];
    let exponent = -my[0] * det;
    if x.pow(exponent) != *v {
        return Err(AmalgamError::LengthDidNotDecrease);
    }
    Ok(PowerExpression {
        generator: x,
        exponent,
    })
}
