//! `Aut G_mn` as a finitely presented group.
//!
//! Generators are `L` (lambda), `M` (mu), `E` (eta, only when `m = n`), and
//! the inner automorphisms `A` (alpha, conjugation by `a`) and `B` (beta,
//! conjugation by `b`). Defining relations:
//!
//! ```text
//!  1. L^2 = M^2 = 1          6. M^-1 B M = B^-1
//!  2. L M = M L              7. A^m B^n = B^n A^m
//!  3. L^-1 A L = A^-1        8. E^2 = 1
//!  4. L^-1 B L = B           9. E^-1 L E = M
//!  5. M^-1 A M = A          10. E^-1 A E = B
//! ```
//!
//! A word is brought to the form `kappa * w(A, B)` by moving the finite
//! generators to the left with relations 3-6, 9, 10 and their consequences;
//! the `A, B` part is then an element of `Inn G = G` and is normalized by the
//! group's own normal form, which absorbs relation 7.

use std::fmt;

use thiserror::Error;

use crate::amalgam::{embed, GElem};
use crate::automorphism::{AutMap, KappaGen, KappaPart};
use crate::word::{GroupParams, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AutLetter {
    Lambda,
    Mu,
    Eta,
    Alpha,
    Beta,
}

impl AutLetter {
    fn symbol(self) -> char {
        match self {
            AutLetter::Lambda => 'L',
            AutLetter::Mu => 'M',
            AutLetter::Eta => 'E',
            AutLetter::Alpha => 'A',
            AutLetter::Beta => 'B',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("unknown generator '{0}' (expected L, M, E, A or B)")]
    UnknownGenerator(String),
    #[error("exponent of '{0}' must be 1 or -1")]
    BadExponent(String),
    #[error("generator E (the swap a <-> b) requires m = n")]
    EtaRequiresEqualExponents,
}

/// A freely reduced word in the generators, each letter with exponent `+-1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct AutWord {
    letters: Vec<(AutLetter, i8)>,
}

impl AutWord {
    pub fn new(letters: &[(AutLetter, i8)]) -> Self {
        let mut out = AutWord::default();
        for &(l, e) in letters {
            out.push(l, e);
        }
        out
    }

    pub fn letters(&self) -> &[(AutLetter, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn push(&mut self, letter: AutLetter, exp: i8) {
        debug_assert!(exp == 1 || exp == -1);
        if self.letters.last() == Some(&(letter, -exp)) {
            self.letters.pop();
        } else {
            self.letters.push((letter, exp));
        }
    }

    pub fn concat(&self, other: &AutWord) -> AutWord {
        let mut out = self.clone();
        for &(l, e) in &other.letters {
            out.push(l, e);
        }
        out
    }

    pub fn inverse(&self) -> AutWord {
        AutWord {
            letters: self.letters.iter().rev().map(|&(l, e)| (l, -e)).collect(),
        }
    }

    pub fn uses_eta(&self) -> bool {
        self.letters.iter().any(|&(l, _)| l == AutLetter::Eta)
    }
}

impl fmt::Display for AutWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, &(l, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l.symbol())?;
            if e == -1 {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// Parses whitespace-separated generators such as `"A L B^-1 E"`.
pub fn parse_aut_word(text: &str) -> Result<AutWord, PresentationError> {
    let mut out = AutWord::default();
    for token in text.split_whitespace() {
        if token == "1" {
            continue;
        }
        let (name, exp) = match token.split_once('^') {
            Some((name, exp)) => (name, exp),
            None => (token, "1"),
        };
        let letter = match name {
            "L" => AutLetter::Lambda,
            "M" => AutLetter::Mu,
            "E" => AutLetter::Eta,
            "A" => AutLetter::Alpha,
            "B" => AutLetter::Beta,
            _ => return Err(PresentationError::UnknownGenerator(name.to_string())),
        };
        let exp = match exp {
            "1" => 1,
            "-1" => -1,
            _ => return Err(PresentationError::BadExponent(token.to_string())),
        };
        out.push(letter, exp);
    }
    Ok(out)
}

/// `kappa * inn(g)`: the canonical form of an element of `Aut G`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AutCanonical {
    pub kappa: KappaPart,
    pub g: GElem,
}

impl AutCanonical {
    pub fn to_map(&self) -> AutMap {
        self.kappa
            .to_map(self.g.params())
            .expect("canonical forms only carry eta when m = n")
            .compose(&AutMap::inner(&self.g))
    }
}

impl fmt::Display for AutCanonical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "kappa={}; inner={}", self.kappa, self.g)
    }
}

fn check_eta(w: &AutWord, params: GroupParams) -> Result<(), PresentationError> {
    if w.uses_eta() && !params.is_symmetric() {
        return Err(PresentationError::EtaRequiresEqualExponents);
    }
    Ok(())
}

/// `gen^-1 X gen` for `X` in `{A, B}`, as a letter of `{a, b}` with a sign.
fn conjugation_action(gen: KappaGen, letter: Letter) -> (Letter, i64) {
    match (gen, letter) {
        (KappaGen::Lambda, Letter::A) => (Letter::A, -1),
        (KappaGen::Mu, Letter::B) => (Letter::B, -1),
        (KappaGen::Eta, Letter::A) => (Letter::B, 1),
        (KappaGen::Eta, Letter::B) => (Letter::A, 1),
        (_, l) => (l, 1),
    }
}

pub fn canonicalize(w: &AutWord, params: GroupParams) -> Result<AutCanonical, PresentationError> {
    check_eta(w, params)?;
    let mut kappa = KappaPart::IDENTITY;
    // the inner part as a free word in a (for A) and b (for B)
    let mut inner: Vec<(Letter, i64)> = Vec::new();
    for &(letter, e) in w.letters() {
        let gen = match letter {
            AutLetter::Alpha => {
                inner.push((Letter::A, i64::from(e)));
                continue;
            }
            AutLetter::Beta => {
                inner.push((Letter::B, i64::from(e)));
                continue;
            }
            AutLetter::Lambda => KappaGen::Lambda,
            AutLetter::Mu => KappaGen::Mu,
            AutLetter::Eta => KappaGen::Eta,
        };
        // W gen = gen (gen^-1 W gen); every finite generator is an involution
        for syl in inner.iter_mut() {
            let (l, sign) = conjugation_action(gen, syl.0);
            *syl = (l, sign * syl.1);
        }
        kappa = kappa.times_gen(gen);
    }
    Ok(AutCanonical {
        kappa,
        g: embed(&Word::from_syllables(&inner), params),
    })
}

pub fn aut_words_equal(
    w1: &AutWord,
    w2: &AutWord,
    params: GroupParams,
) -> Result<bool, PresentationError> {
    Ok(canonicalize(w1, params)? == canonicalize(w2, params)?)
}

/// The automorphism a word denotes, composed generator by generator.
pub fn evaluate(w: &AutWord, params: GroupParams) -> Result<AutMap, PresentationError> {
    check_eta(w, params)?;
    let mut out = AutMap::identity(params);
    for &(letter, e) in w.letters() {
        let gen = match letter {
            AutLetter::Lambda => AutMap::lambda(params),
            AutLetter::Mu => AutMap::mu(params),
            AutLetter::Eta => {
                AutMap::eta(params).ok_or(PresentationError::EtaRequiresEqualExponents)?
            }
            AutLetter::Alpha => AutMap::inner(&GElem::a(params, i64::from(e))),
            AutLetter::Beta => AutMap::inner(&GElem::b(params, i64::from(e))),
        };
        out = out.compose(&gen);
    }
    Ok(out)
}
