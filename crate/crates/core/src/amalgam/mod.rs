//! The group `G_mn` as the amalgamated product `A *_H B`.
//!
//! `H = <c, d>` is free abelian of rank two, `A = <a> *_{a^m = c} H` and
//! `B = H *_{d = b^n} <b>`. Every element of `G` has a unique normal form
//! `h r_1 ... r_k` with `h` in `H` and the `r_i` alternating right coset
//! representatives of `H` in `A` and in `B`; see [`GElem`].

mod analysis;
mod factor;
mod gelem;

use std::fmt;
use std::ops::{Add, Neg};

use crate::word::write_syllable;

pub use analysis::{
    cyclic_decompose, express_as_power, h_intersection, root_in_factor, AmalgamError,
    CyclicDecomposition, HIntersection, PowerExpression, RootDecomposition,
};
pub use factor::{AElem, BElem, FactorElem, Side, Syllable};
pub use gelem::{embed, GElem};

/// `c^p d^q` in the free abelian group `H`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct HElem {
    pub p: i64,
    pub q: i64,
}

impl HElem {
    pub const IDENTITY: HElem = HElem { p: 0, q: 0 };

    pub fn new(p: i64, q: i64) -> Self {
        HElem { p, q }
    }

    pub fn is_identity(&self) -> bool {
        self.p == 0 && self.q == 0
    }
}

impl Add for HElem {
    type Output = HElem;

    fn add(self, rhs: HElem) -> HElem {
        HElem::new(self.p + rhs.p, self.q + rhs.q)
    }
}

impl Neg for HElem {
    type Output = HElem;

    fn neg(self) -> HElem {
        HElem::new(-self.p, -self.q)
    }
}

impl fmt::Display for HElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p, self.q) {
            (0, 0) => f.write_str("1"),
            (p, 0) => write_syllable(f, 'c', p),
            (0, q) => write_syllable(f, 'd', q),
            (p, q) => {
                write_syllable(f, 'c', p)?;
                f.write_str(" ")?;
                write_syllable(f, 'd', q)
            }
        }
    }
}
