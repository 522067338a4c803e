//! Exact computation in the one-relator groups
//!
//! ```text
//! G_mn = < a, b | [a^m, b^n] = 1 >      (m, n >= 2)
//! ```
//!
//! Elements are kept in the unique normal form coming from the splitting of
//! `G_mn` as an amalgamated product over a free abelian group of rank two.
//! On top of that the crate decides whether a pair of words defines an
//! automorphism, factors every automorphism as a sign/swap automorphism
//! followed by an inner one, computes in the finitely presented group
//! `Aut G_mn`, and certifies that outer automorphisms are not normal using
//! free-product quotients.

pub mod amalgam;
pub mod automorphism;
pub mod cli;
pub mod generation;
pub mod presentation;
pub mod quotient;
pub mod word;

pub use amalgam::{embed, FactorElem, GElem, HElem, HIntersection, Side};
pub use word::{parse, parse_word, GroupParams, Letter, ParseError, Word};
