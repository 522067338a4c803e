use std::fmt;

use crate::word::{GroupParams, Letter, Word};

use super::factor::{FactorElem, Side};
use super::HElem;

/// Normal form `h r_1 ... r_k` of an element of `G = A *_H B`.
///
/// `h` is in `H`; each `r_i` is a nontrivial coset representative (zero
/// central head, first syllable a root syllable) and consecutive
/// representatives lie in different vertex groups. Two elements are equal
/// iff their normal forms are field-identical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GElem {
    params: GroupParams,
    head: HElem,
    reps: Vec<FactorElem>,
}

/// The image of a free word in `G`; the word problem is `embed(w).is_identity()`.
pub fn embed(word: &Word, params: GroupParams) -> GElem {
    let mut g = GElem::identity(params);
    for &(letter, e) in word.syllables() {
        g.mul_letter(letter, e);
    }
    g
}

impl GElem {
    pub fn identity(params: GroupParams) -> Self {
        GElem {
            params,
            head: HElem::IDENTITY,
            reps: Vec::new(),
        }
    }

    pub fn from_h(params: GroupParams, h: HElem) -> Self {
        GElem {
            params,
            head: h,
            reps: Vec::new(),
        }
    }

    pub fn from_factor(x: &FactorElem, params: GroupParams) -> Self {
        let mut g = GElem::identity(params);
        g.mul_factor(x);
        g
    }

    /// `a^e`.
    pub fn a(params: GroupParams, e: i64) -> Self {
        GElem::from_factor(&FactorElem::root_power(Side::A, params, e), params)
    }

    /// `b^e`.
    pub fn b(params: GroupParams, e: i64) -> Self {
        GElem::from_factor(&FactorElem::root_power(Side::B, params, e), params)
    }

    pub fn params(&self) -> GroupParams {
        self.params
    }

    pub fn head(&self) -> HElem {
        self.head
    }

    pub fn reps(&self) -> &[FactorElem] {
        &self.reps
    }

    pub fn is_identity(&self) -> bool {
        self.head.is_identity() && self.reps.is_empty()
    }

    pub fn in_h(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn as_h(&self) -> Option<HElem> {
        self.reps.is_empty().then_some(self.head)
    }

    /// Length of the reduced form. Elements of `A` or `B`, including those of
    /// `H` and the identity, have length 1.
    pub fn length(&self) -> usize {
        self.reps.len().max(1)
    }

    pub fn in_factor(&self, side: Side) -> bool {
        match self.reps.as_slice() {
            [] => true,
            [r] => r.side() == side,
            _ => false,
        }
    }

    /// The element as a normal form of the vertex group `side`, if it lies there.
    pub fn as_factor(&self, side: Side) -> Option<FactorElem> {
        if !self.in_factor(side) {
            return None;
        }
        let h = FactorElem::from_h(side, self.params, self.head);
        Some(match self.reps.first() {
            Some(r) => h.mul(r),
            None => h,
        })
    }

    /// The vertex group holding the element when its length is 1 and it is not in `H`.
    pub fn factor_side(&self) -> Option<Side> {
        match self.reps.as_slice() {
            [r] => Some(r.side()),
            _ => None,
        }
    }

    /// The first factor `h r_1` of the reduced form, or `h` itself for elements of `H`.
    pub fn first_factor(&self) -> FactorElem {
        match self.reps.first() {
            Some(r) => FactorElem::from_h(r.side(), self.params, self.head).mul(r),
            None => FactorElem::from_h(Side::A, self.params, self.head),
        }
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match self.reps.as_slice() {
            [] | [_] => true,
            [first, .., last] => first.side() != last.side(),
        }
    }

    /// Right multiplication by an element of a vertex group, in place.
    pub fn mul_factor(&mut self, x: &FactorElem) {
        let side = x.side();
        let y = match self.reps.last() {
            Some(r) if r.side() == side => {
                let r = self.reps.pop().expect("last rep exists");
                r.mul(x)
            }
            Some(_) => x.clone(),
            None => {
                let h = std::mem::take(&mut self.head);
                FactorElem::from_h(side, self.params, h).mul(x)
            }
        };
        let (h, rep) = y.split_h();
        self.push_h_left(h);
        if !rep.is_identity() {
            self.reps.push(rep);
        }
    }

    /// Right multiplication by `h` in `H`.
    pub fn mul_h(&mut self, h: HElem) {
        if h.is_identity() {
            return;
        }
        let side = self.reps.last().map_or(Side::A, FactorElem::side);
        self.mul_factor(&FactorElem::from_h(side, self.params, h));
    }

    fn mul_letter(&mut self, letter: Letter, e: i64) {
        match letter {
            Letter::A => self.mul_factor(&FactorElem::root_power(Side::A, self.params, e)),
            Letter::B => self.mul_factor(&FactorElem::root_power(Side::B, self.params, e)),
            Letter::C => self.mul_h(HElem::new(e, 0)),
            Letter::D => self.mul_h(HElem::new(0, e)),
        }
    }

    /// Moves an `H`-element standing to the right of all representatives into the head.
    fn push_h_left(&mut self, mut h: HElem) {
        for rep in self.reps.iter_mut().rev() {
            if h.is_identity() {
                return;
            }
            let prod = rep.mul(&FactorElem::from_h(rep.side(), self.params, h));
            let (h2, r2) = prod.split_h();
            *rep = r2;
            h = h2;
        }
        self.head = self.head + h;
    }

    pub fn mul(&self, other: &GElem) -> GElem {
        debug_assert_eq!(self.params, other.params);
        let mut out = self.clone();
        out.mul_h(other.head);
        for r in &other.reps {
            out.mul_factor(r);
        }
        out
    }

    pub fn inverse(&self) -> GElem {
        let mut out = GElem::identity(self.params);
        for r in self.reps.iter().rev() {
            out.mul_factor(&r.inverse());
        }
        out.mul_h(-self.head);
        out
    }

    pub fn pow(&self, k: i64) -> GElem {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = GElem::identity(self.params);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `w^-1 self w`.
    pub fn conjugate_by(&self, w: &GElem) -> GElem {
        w.inverse().mul(self).mul(w)
    }

    /// `[self, other] = self other self^-1 other^-1`.
    pub fn commutator(&self, other: &GElem) -> GElem {
        self.mul(other).mul(&self.inverse()).mul(&other.inverse())
    }

    pub fn commutes_with(&self, other: &GElem) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// Spells the normal form as a word over `{a, b, c, d}`.
    pub fn to_word(&self) -> Word {
        let mut syllables = Vec::new();
        if self.head.p != 0 {
            syllables.push((Letter::C, self.head.p));
        }
        if self.head.q != 0 {
            syllables.push((Letter::D, self.head.q));
        }
        for r in &self.reps {
            syllables.extend(r.letters());
        }
        Word::from_syllables(&syllables)
    }

    /// Exponent sums of `a` and `b` (counting `c` as `a^m` and `d` as `b^n`),
    /// i.e. the image in the abelianization `Z^2`.
    pub fn exponent_sums(&self) -> (i64, i64) {
        let (m, n) = (self.params.m(), self.params.n());
        self.to_word()
            .syllables()
            .iter()
            .fold((0, 0), |(x, y), &(l, e)| match l {
                Letter::A => (x + e, y),
                Letter::B => (x, y + e),
                Letter::C => (x + m * e, y),
                Letter::D => (x, y + n * e),
            })
    }
}

impl fmt::Display for GElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        let mut first = true;
        if !self.head.is_identity() {
            write!(f, "{}", self.head)?;
            first = false;
        }
        for r in &self.reps {
            if !first {
                f.write_str(" | ")?;
            }
            write!(f, "{r}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn p23() -> GroupParams {
        GroupParams::new(2, 3).unwrap()
    }

    fn e(s: &str) -> GElem {
        embed(&parse_word(s).unwrap(), p23())
    }

    #[test]
    fn relator_is_trivial() {
        assert!(e("[a^2, b^3]").is_identity());
        assert!(e("c d c^-1 d^-1").is_identity());
        assert!(!e("[a, b^3]").is_identity());
    }

    #[test]
    fn commutator_has_four_reps() {
        let g = e("a b a^-1 b^-1");
        assert_eq!(g.reps().len(), 4);
        let sides: Vec<_> = g.reps().iter().map(FactorElem::side).collect();
        assert_eq!(sides, [Side::A, Side::B, Side::A, Side::B]);
        assert_eq!(g.length(), 4);
        assert_eq!(g.to_string(), "a | b c^-1 | a d^-1 | b^2");
    }

    #[test]
    fn multiply_examples() {
        let p = p23();
        let g = e("a b^-2 d");
        assert_eq!(g.mul(&GElem::identity(p)), g);
        assert!(e("a").mul(&e("a^-1")).is_identity());
        assert_eq!(e("b^3").mul(&e("a^2")), e("a^2 b^3"));
    }

    #[test]
    fn invert_examples() {
        assert!(GElem::identity(p23()).inverse().is_identity());
        assert_eq!(e("a b").inverse(), e("b^-1 a^-1"));
    }

    #[test]
    fn lengths() {
        assert_eq!(GElem::identity(p23()).length(), 1);
        assert_eq!(e("a b").length(), 2);
        assert_eq!(e("c^5 d").length(), 1);
    }

    #[test]
    fn cyclic_reduction_predicate() {
        assert!(e("a b").is_cyclically_reduced());
        assert!(!e("a b a^-1").is_cyclically_reduced());
        assert!(e("c^5").is_cyclically_reduced());
    }

    #[test]
    fn serialization_reparses() {
        for s in ["a b a^-1 b^-1", "c^3 d^-1 a d b", "b^-5 c a^3", "1"] {
            let g = e(s);
            assert_eq!(e(&g.to_string()), g);
        }
    }

    #[test]
    fn pow_matches_repeated_product() {
        let g = e("a b^-1 c");
        let mut acc = GElem::identity(p23());
        for _ in 0..5 {
            acc = acc.mul(&g);
        }
        assert_eq!(g.pow(5), acc);
        assert_eq!(g.pow(-5), acc.inverse());
    }
}
