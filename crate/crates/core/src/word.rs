//! Free words over the alphabet `{a, b, c, d}` and the text grammar that
//! produces them.
//!
//! `c` and `d` are kept as symbols here; they stand for `a^m` and `b^n` and
//! are only expanded when a word is embedded into the group.
//!
//! Grammar accepted by [`parse`]:
//!
//! ```text
//! word   := term { ("*" | "|" | WS) term } ;
//! term   := atom [ "^" int ] ;
//! atom   := "a" | "b" | "c" | "d" | "1" | "(" word ")" | "[" word "," word "]" ;
//! int    := ["-"] digit+ ;
//! ```
//!
//! `[u, v]` is the commutator `u v u^-1 v^-1`. The `|` separator is accepted
//! so that printed normal forms can be fed back in.

use std::fmt;

use thiserror::Error;

/// Upper bound on the number of syllables a parsed word may expand to.
const MAX_SYLLABLES: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("exponents must satisfy m >= 2 and n >= 2 (got m = {m}, n = {n})")]
    OutOfRange { m: i64, n: i64 },
}

/// The exponents `m`, `n` of the relator `[a^m, b^n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupParams {
    m: i64,
    n: i64,
}

impl GroupParams {
    pub fn new(m: i64, n: i64) -> Result<Self, ParamError> {
        if m < 2 || n < 2 {
            return Err(ParamError::OutOfRange { m, n });
        }
        Ok(GroupParams { m, n })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// Whether the swap automorphism `a <-> b` exists.
    pub fn is_symmetric(&self) -> bool {
        self.m == self.n
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m = {}, n = {}", self.m, self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
    C,
    D,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
            Letter::D => 'd',
        }
    }

    fn from_char(ch: char) -> Option<Letter> {
        match ch {
            'a' => Some(Letter::A),
            'b' => Some(Letter::B),
            'c' => Some(Letter::C),
            'd' => Some(Letter::D),
            _ => None,
        }
    }
}

/// A freely reduced word: no zero exponents and no two adjacent syllables on
/// the same letter.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    syllables: Vec<(Letter, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn letter(letter: Letter, exp: i64) -> Self {
        free_reduce(&[(letter, exp)])
    }

    /// Builds a word from arbitrary syllables, freely reducing them.
    pub fn from_syllables(syllables: &[(Letter, i64)]) -> Self {
        free_reduce(syllables)
    }

    pub fn syllables(&self) -> &[(Letter, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Total letter count, i.e. the sum of absolute exponents.
    pub fn letter_count(&self) -> u64 {
        self.syllables.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        for &(l, e) in &other.syllables {
            push_syllable(&mut out.syllables, l, e);
        }
        out
    }

    pub fn inverse(&self) -> Word {
        invert_word(self)
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// `u v u^-1 v^-1`.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.concat(v).concat(&u.inverse()).concat(&v.inverse())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (i, &(l, e)) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write_syllable(f, l.as_char(), e)?;
        }
        Ok(())
    }
}

pub(crate) fn write_syllable(f: &mut impl fmt::Write, ch: char, exp: i64) -> fmt::Result {
    if exp == 1 {
        write!(f, "{ch}")
    } else {
        write!(f, "{ch}^{exp}")
    }
}

fn push_syllable(out: &mut Vec<(Letter, i64)>, letter: Letter, exp: i64) {
    if exp == 0 {
        return;
    }
    match out.last_mut() {
        Some((l, e)) if *l == letter => {
            *e += exp;
            if *e == 0 {
                out.pop();
            }
        }
        _ => out.push((letter, exp)),
    }
}

fn try_push_syllable(out: &mut Vec<(Letter, i64)>, letter: Letter, exp: i64) -> Option<()> {
    if exp == 0 {
        return Some(());
    }
    match out.last_mut() {
        Some((l, e)) if *l == letter => {
            *e = e.checked_add(exp)?;
            if *e == 0 {
                out.pop();
            }
        }
        _ => out.push((letter, exp)),
    }
    Some(())
}

/// Merges adjacent equal-letter syllables and drops zero exponents.
pub fn free_reduce(syllables: &[(Letter, i64)]) -> Word {
    let mut out = Vec::with_capacity(syllables.len());
    for &(l, e) in syllables {
        push_syllable(&mut out, l, e);
    }
    Word { syllables: out }
}

pub fn invert_word(w: &Word) -> Word {
    Word {
        syllables: w.syllables.iter().rev().map(|&(l, e)| (l, -e)).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("exponent overflow at position {position}")]
    Overflow { position: usize },
    #[error("expression expands to more than {MAX_SYLLABLES} syllables")]
    TooLong,
}

/// Parses a group-word expression into a freely reduced [`Word`].
///
/// The parameters are not needed to build the free word; they are accepted
/// so callers always parse against a concrete group.
pub fn parse(text: &str, _params: GroupParams) -> Result<Word, ParseError> {
    parse_word(text)
}

/// Parses without reference to a group.
pub fn parse_word(text: &str) -> Result<Word, ParseError> {
    let mut p = Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        len: text.len(),
    };
    let w = p.word()?;
    p.skip_ws();
    if let Some(&(at, ch)) = p.chars.get(p.pos) {
        return Err(ParseError::Syntax {
            position: at,
            message: format!("unexpected '{ch}'"),
        });
    }
    Ok(w)
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(i, _)| i)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn expect(&mut self, ch: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(ch) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(format!("expected '{ch}'"))
        }
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        let mut syllables = self.term()?.syllables;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') | Some('|') => {
                    self.pos += 1;
                }
                Some(ch) if starts_atom(ch) => {}
                _ => break,
            }
            let t = self.term()?;
            for (l, e) in t.syllables {
                try_push_syllable(&mut syllables, l, e).ok_or(ParseError::Overflow {
                    position: self.offset(),
                })?;
            }
            if syllables.len() > MAX_SYLLABLES {
                return Err(ParseError::TooLong);
            }
        }
        Ok(Word { syllables })
    }

    fn term(&mut self) -> Result<Word, ParseError> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let exp_at = self.offset();
        let k = self.int()?;
        if let [(l, e)] = base.syllables.as_slice() {
            let e = e
                .checked_mul(k)
                .ok_or(ParseError::Overflow { position: exp_at })?;
            return Ok(Word::letter(*l, e));
        }
        let total = (base.syllables.len() as u128) * u128::from(k.unsigned_abs());
        if total > MAX_SYLLABLES as u128 {
            return Err(ParseError::TooLong);
        }
        let unit = if k < 0 { base.inverse() } else { base };
        let mut syllables = Vec::new();
        for _ in 0..k.unsigned_abs() {
            for &(l, e) in &unit.syllables {
                try_push_syllable(&mut syllables, l, e)
                    .ok_or(ParseError::Overflow { position: exp_at })?;
            }
        }
        Ok(Word { syllables })
    }

    fn atom(&mut self) -> Result<Word, ParseError> {
        self.skip_ws();
        let Some(ch) = self.peek() else {
            return self.error("unexpected end of input");
        };
        if let Some(l) = Letter::from_char(ch) {
            self.pos += 1;
            return Ok(Word::letter(l, 1));
        }
        match ch {
            '1' => {
                self.pos += 1;
                Ok(Word::identity())
            }
            '(' => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(')')?;
                Ok(w)
            }
            '[' => {
                self.pos += 1;
                let u = self.word()?;
                self.expect(',')?;
                let v = self.word()?;
                self.expect(']')?;
                Ok(Word::commutator(&u, &v))
            }
            _ => self.error(format!("unexpected '{ch}'")),
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.offset();
        let negative = self.peek() == Some('-');
        if negative {
            self.pos += 1;
        }
        let mut digits = String::new();
        while let Some(d) = self.peek().filter(char::is_ascii_digit) {
            digits.push(d);
            self.pos += 1;
        }
        if digits.is_empty() {
            return self.error("expected an integer exponent");
        }
        if negative {
            digits.insert(0, '-');
        }
        digits
            .parse::<i64>()
            .map_err(|_| ParseError::Overflow { position: start })
    }
}

fn starts_atom(ch: char) -> bool {
    matches!(ch, 'a' | 'b' | 'c' | 'd' | '1' | '(' | '[')
}
