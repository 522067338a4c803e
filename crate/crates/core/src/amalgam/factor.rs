//! Arithmetic inside the two vertex groups
//!
//! ```text
//! A = <a> *_{a^m = c} H      B = H *_{d = b^n} <b>      H = <c, d | [c, d]>
//! ```
//!
//! Both have the same shape: an infinite cyclic "root" group glued to `H`
//! along a subgroup that is central in both pieces. For `A` the root letter
//! is `a`, the central letter `c` and the free `H`-letter `d`; for `B` they
//! are `b`, `d` and `c`. An element is stored as `central^head` followed by
//! an alternating string of root syllables `root^r` (`0 < r < order`) and
//! free syllables `free^s` (`s != 0`). This is the amalgam normal form with
//! transversals `{root^r}` and `{free^s}`; because the amalgamated subgroup
//! is central all heads collect on the left.

use std::fmt;

use crate::word::{write_syllable, GroupParams, Letter};

use super::HElem;

/// One of the two vertex groups of the splitting `G = A *_H B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }

    pub fn root_letter(self) -> Letter {
        match self {
            Side::A => Letter::A,
            Side::B => Letter::B,
        }
    }

    pub fn central_letter(self) -> Letter {
        match self {
            Side::A => Letter::C,
            Side::B => Letter::D,
        }
    }

    pub fn free_letter(self) -> Letter {
        match self {
            Side::A => Letter::D,
            Side::B => Letter::C,
        }
    }

    /// Exponent `m` (for `A`) or `n` (for `B`) tying the root to the centre.
    pub fn order(self, params: GroupParams) -> i64 {
        match self {
            Side::A => params.m(),
            Side::B => params.n(),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Syllable {
    /// `root^r` with `0 < r < order`.
    Root(i64),
    /// `free^s` with `s != 0`.
    Free(i64),
}

impl Syllable {
    pub fn exponent(self) -> i64 {
        match self {
            Syllable::Root(e) | Syllable::Free(e) => e,
        }
    }

    pub fn is_root(self) -> bool {
        matches!(self, Syllable::Root(_))
    }
}

/// Normal form of an element of `A` or `B`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactorElem {
    side: Side,
    order: i64,
    head: i64,
    syllables: Vec<Syllable>,
}

/// Elements of `A = <a> *_{<c>} H`.
pub type AElem = FactorElem;
/// Elements of `B = H *_{<d>} <b>`.
pub type BElem = FactorElem;

impl FactorElem {
    pub fn identity(side: Side, params: GroupParams) -> Self {
        FactorElem {
            side,
            order: side.order(params),
            head: 0,
            syllables: Vec::new(),
        }
    }

    /// `root^e` for any integer `e`.
    pub fn root_power(side: Side, params: GroupParams, e: i64) -> Self {
        let mut x = FactorElem::identity(side, params);
        x.push_root(e);
        x
    }

    /// `free^e`.
    pub fn free_power(side: Side, params: GroupParams, e: i64) -> Self {
        let mut x = FactorElem::identity(side, params);
        x.push_free(e);
        x
    }

    /// The `H`-element `c^p d^q` viewed inside this vertex group.
    pub fn from_h(side: Side, params: GroupParams, h: HElem) -> Self {
        let (central, free) = match side {
            Side::A => (h.p, h.q),
            Side::B => (h.q, h.p),
        };
        let mut x = FactorElem::identity(side, params);
        x.head = central;
        x.push_free(free);
        x
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Exponent of the central letter (`c` in `A`, `d` in `B`).
    pub fn head(&self) -> i64 {
        self.head
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.head == 0 && self.syllables.is_empty()
    }

    /// Membership in the amalgamated subgroup `H`.
    pub fn in_h(&self) -> bool {
        matches!(self.syllables.as_slice(), [] | [Syllable::Free(_)])
    }

    /// If the element lies in the root cyclic group, its exponent there.
    pub fn as_root_power(&self) -> Option<i64> {
        match self.syllables.as_slice() {
            [] => Some(self.head * self.order),
            [Syllable::Root(r)] => Some(self.head * self.order + r),
            _ => None,
        }
    }

    pub(crate) fn push_root(&mut self, e: i64) {
        let mut e = e;
        if let Some(Syllable::Root(r)) = self.syllables.last() {
            e += r;
            self.syllables.pop();
        }
        self.head += e.div_euclid(self.order);
        let r = e.rem_euclid(self.order);
        if r != 0 {
            self.syllables.push(Syllable::Root(r));
        }
    }

    pub(crate) fn push_free(&mut self, e: i64) {
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some(Syllable::Free(s)) => {
                *s += e;
                if *s == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push(Syllable::Free(e)),
        }
    }

    fn push(&mut self, syl: Syllable) {
        match syl {
            Syllable::Root(e) => self.push_root(e),
            Syllable::Free(e) => self.push_free(e),
        }
    }

    pub fn mul(&self, other: &FactorElem) -> FactorElem {
        debug_assert_eq!(self.side, other.side);
        let mut out = self.clone();
        out.head += other.head;
        for &s in &other.syllables {
            out.push(s);
        }
        out
    }

    pub fn inverse(&self) -> FactorElem {
        let mut out = FactorElem {
            side: self.side,
            order: self.order,
            head: -self.head,
            syllables: Vec::with_capacity(self.syllables.len()),
        };
        for &s in self.syllables.iter().rev() {
            out.push(match s {
                Syllable::Root(e) => Syllable::Root(-e),
                Syllable::Free(e) => Syllable::Free(-e),
            });
        }
        out
    }

    pub fn pow(&self, k: i64) -> FactorElem {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = FactorElem {
            side: self.side,
            order: self.order,
            head: 0,
            syllables: Vec::new(),
        };
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Splits `x = h * r` with `h` in `H` and `r` a right coset
    /// representative of `H` in this vertex group: zero head, and either
    /// empty or starting with a root syllable.
    pub fn split_h(&self) -> (HElem, FactorElem) {
        let (free, rest) = match self.syllables.first() {
            Some(Syllable::Free(s)) => (*s, &self.syllables[1..]),
            _ => (0, &self.syllables[..]),
        };
        let h = match self.side {
            Side::A => HElem::new(self.head, free),
            Side::B => HElem::new(free, self.head),
        };
        let rep = FactorElem {
            side: self.side,
            order: self.order,
            head: 0,
            syllables: rest.to_vec(),
        };
        (h, rep)
    }

    /// Syllables of the element as letters of the ambient alphabet.
    pub fn letters(&self) -> Vec<(Letter, i64)> {
        let mut out = Vec::with_capacity(self.syllables.len() + 1);
        if self.head != 0 {
            out.push((self.side.central_letter(), self.head));
        }
        for &s in &self.syllables {
            out.push(match s {
                Syllable::Root(e) => (self.side.root_letter(), e),
                Syllable::Free(e) => (self.side.free_letter(), e),
            });
        }
        out
    }

    /// Cyclic reduction inside the vertex group: returns `(u, z)` with
    /// `self = u z u^-1` and `z` either a single syllable times the centre
    /// or of even syllable length. Always strips from the left.
    pub fn cyclic_core(&self) -> (FactorElem, FactorElem) {
        let mut u = FactorElem {
            side: self.side,
            order: self.order,
            head: 0,
            syllables: Vec::new(),
        };
        let mut z = self.clone();
        while z.syllables.len() >= 3 && z.syllables.len() % 2 == 1 {
            let first = FactorElem {
                side: z.side,
                order: z.order,
                head: 0,
                syllables: vec![z.syllables[0]],
            };
            z = first.inverse().mul(&z).mul(&first);
            u = u.mul(&first);
        }
        (u, z)
    }
}

impl fmt::Display for FactorElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.letters();
        if letters.is_empty() {
            return f.write_str("1");
        }
        for (i, (l, e)) in letters.into_iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write_syllable(f, l.as_char(), e)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p23() -> GroupParams {
        GroupParams::new(2, 3).unwrap()
    }

    #[test]
    fn root_powers_reduce_into_head() {
        let x = FactorElem::root_power(Side::A, p23(), 5);
        assert_eq!(x.head(), 2);
        assert_eq!(x.syllables(), &[Syllable::Root(1)]);
        let y = FactorElem::root_power(Side::A, p23(), -1);
        assert_eq!(y.head(), -1);
        assert_eq!(y.syllables(), &[Syllable::Root(1)]);
        assert_eq!(x.as_root_power(), Some(5));
    }

    #[test]
    fn cancellation_cascades() {
        let p = p23();
        // (a d a) * (a^-1 d^-1 a^-1) = 1
        let x = FactorElem::root_power(Side::A, p, 1)
            .mul(&FactorElem::free_power(Side::A, p, 1))
            .mul(&FactorElem::root_power(Side::A, p, 1));
        assert!(x.mul(&x.inverse()).is_identity());
        assert!(x.inverse().mul(&x).is_identity());
    }

    #[test]
    fn centre_commutes() {
        let p = p23();
        let c = FactorElem::root_power(Side::A, p, 2);
        let d = FactorElem::free_power(Side::A, p, 1);
        let a = FactorElem::root_power(Side::A, p, 1);
        assert_eq!(c.mul(&d), d.mul(&c));
        assert_eq!(c.mul(&a), a.mul(&c));
        assert_ne!(a.mul(&d), d.mul(&a));
    }

    #[test]
    fn split_h_extracts_leading_h_part() {
        let p = p23();
        let x = FactorElem::from_h(Side::B, p, HElem::new(2, -1)).mul(&FactorElem::root_power(
            Side::B,
            p,
            1,
        ));
        let (h, rep) = x.split_h();
        assert_eq!(h, HElem::new(2, -1));
        assert_eq!(rep.syllables(), &[Syllable::Root(1)]);
        assert_eq!(rep.head(), 0);
    }

    #[test]
    fn cyclic_core_conjugates_back() {
        let p = p23();
        let d = FactorElem::free_power(Side::A, p, 1);
        let a = FactorElem::root_power(Side::A, p, 1);
        let g = d.mul(&a).mul(&d.inverse());
        let (u, z) = g.cyclic_core();
        assert_eq!(u, d);
        assert_eq!(z, a);
        assert_eq!(u.mul(&z).mul(&u.inverse()), g);
    }
}
