#![allow(dead_code)]

use std::collections::HashSet;

use gmn::amalgam::{h_intersection, FactorElem, Side};
use gmn::presentation::{parse_aut_word, AutLetter, AutWord};
use gmn::quotient::{FpElem, FpFactor, FpSpec};
use gmn::{embed, GElem, GroupParams, HElem, Letter, Word};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const PARAM_SETS: [(i64, i64); 4] = [(2, 3), (2, 2), (3, 3), (2, 5)];

pub fn params(m: i64, n: i64) -> GroupParams {
    GroupParams::new(m, n).unwrap()
}

pub fn all_params() -> impl Iterator<Item = GroupParams> {
    PARAM_SETS.iter().map(|&(m, n)| params(m, n))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random word over `a, b, c, d` with total letter count at most `max_letters`.
pub fn random_word(rng: &mut impl Rng, max_letters: u64) -> Word {
    let budget = rng.gen_range(0..=max_letters);
    let mut used = 0;
    let mut syl = Vec::new();
    while used < budget {
        let letter = *[
            Letter::A,
            Letter::A,
            Letter::B,
            Letter::B,
            Letter::C,
            Letter::D,
        ]
        .choose(rng)
        .unwrap();
        let mag = rng.gen_range(1..=3.min(budget - used)) as i64;
        let e = if rng.gen_bool(0.5) { mag } else { -mag };
        syl.push((letter, e));
        used += mag as u64;
    }
    Word::from_syllables(&syl)
}

pub fn random_elem(rng: &mut impl Rng, p: GroupParams, max_letters: u64) -> GElem {
    embed(&random_word(rng, max_letters), p)
}

/// The relator `[a^m, b^n]` as a word.
pub fn relator(p: GroupParams) -> Word {
    Word::commutator(
        &Word::letter(Letter::A, p.m()),
        &Word::letter(Letter::B, p.n()),
    )
}

/// Inserts `g R^(+-1) g^-1` at a random syllable boundary.
pub fn insert_relator(rng: &mut impl Rng, w: &Word, p: GroupParams) -> Word {
    let g = random_word(rng, 4);
    let r = if rng.gen_bool(0.5) {
        relator(p)
    } else {
        relator(p).inverse()
    };
    let piece = g.concat(&r).concat(&g.inverse());
    let syl = w.syllables();
    let at = rng.gen_range(0..=syl.len());
    Word::from_syllables(&syl[..at])
        .concat(&piece)
        .concat(&Word::from_syllables(&syl[at..]))
}

pub type Perm = Vec<u8>;

pub fn perm_identity(degree: usize) -> Perm {
    (0..degree as u8).collect()
}

/// `p` then `q`.
pub fn perm_mul(p: &Perm, q: &Perm) -> Perm {
    p.iter().map(|&i| q[i as usize]).collect()
}

pub fn perm_inv(p: &Perm) -> Perm {
    let mut out = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        out[j as usize] = i as u8;
    }
    out
}

pub fn perm_pow(p: &Perm, k: i64) -> Perm {
    let base = if k < 0 { perm_inv(p) } else { p.clone() };
    let mut out = perm_identity(p.len());
    for _ in 0..k.unsigned_abs() {
        out = perm_mul(&out, &base);
    }
    out
}

pub fn random_perm(rng: &mut impl Rng, degree: usize) -> Perm {
    let mut p = perm_identity(degree);
    p.shuffle(rng);
    p
}

/// A random permutation whose cycle lengths all divide `k`.
pub fn random_perm_dividing(rng: &mut impl Rng, degree: usize, k: i64) -> Perm {
    let divisors: Vec<usize> = (1..=k as usize).filter(|&d| (k as usize).is_multiple_of(d)).collect();
    let mut points = perm_identity(degree);
    points.shuffle(rng);
    let mut out = perm_identity(degree);
    let mut rest = &points[..];
    while !rest.is_empty() {
        let fits: Vec<usize> = divisors
            .iter()
            .copied()
            .filter(|&d| d <= rest.len())
            .collect();
        let len = *fits.choose(rng).unwrap();
        let (cycle, tail) = rest.split_at(len);
        for i in 0..len {
            out[cycle[i] as usize] = cycle[(i + 1) % len];
        }
        rest = tail;
    }
    out
}

/// The closure of `gens` under multiplication.
pub fn generated(gens: &[Perm]) -> HashSet<Perm> {
    let degree = gens[0].len();
    let mut seen: HashSet<Perm> = HashSet::from([perm_identity(degree)]);
    let mut frontier = vec![perm_identity(degree)];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = perm_mul(&x, g);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

/// A homomorphism from `G` to a symmetric group.
#[derive(Debug, Clone)]
pub struct PermQuotient {
    pub a: Perm,
    pub b: Perm,
    m: i64,
    n: i64,
}

impl PermQuotient {
    pub fn new(p: GroupParams, a: Perm, b: Perm) -> Option<Self> {
        let am = perm_pow(&a, p.m());
        let bn = perm_pow(&b, p.n());
        (perm_mul(&am, &bn) == perm_mul(&bn, &am)).then_some(PermQuotient {
            a,
            b,
            m: p.m(),
            n: p.n(),
        })
    }

    /// Tries unconstrained pairs first, then falls back to `a^m = 1` or
    /// `b^n = 1`.
    pub fn random(rng: &mut impl Rng, p: GroupParams, degree: usize) -> Self {
        for _ in 0..200 {
            let a = random_perm(rng, degree);
            let b = random_perm(rng, degree);
            if let Some(q) = PermQuotient::new(p, a, b) {
                return q;
            }
        }
        if rng.gen_bool(0.5) {
            let a = random_perm_dividing(rng, degree, p.m());
            PermQuotient::new(p, a, random_perm(rng, degree)).unwrap()
        } else {
            let b = random_perm_dividing(rng, degree, p.n());
            PermQuotient::new(p, random_perm(rng, degree), b).unwrap()
        }
    }

    pub fn image_word(&self, w: &Word) -> Perm {
        let mut out = perm_identity(self.a.len());
        for &(l, e) in w.syllables() {
            let (base, k) = match l {
                Letter::A => (&self.a, e),
                Letter::B => (&self.b, e),
                Letter::C => (&self.a, e * self.m),
                Letter::D => (&self.b, e * self.n),
            };
            out = perm_mul(&out, &perm_pow(base, k));
        }
        out
    }

    pub fn image(&self, g: &GElem) -> Perm {
        self.image_word(&g.to_word())
    }

    /// Whether the images of `u` and `v` generate the image of `G`.
    pub fn images_generate(&self, u: &GElem, v: &GElem) -> bool {
        let sub = generated(&[self.image(u), self.image(v)]);
        sub.contains(&self.a) && sub.contains(&self.b)
    }
}

pub fn random_aut_word(rng: &mut impl Rng, p: GroupParams, max_len: usize) -> AutWord {
    let mut letters = vec![
        AutLetter::Lambda,
        AutLetter::Mu,
        AutLetter::Alpha,
        AutLetter::Beta,
    ];
    if p.is_symmetric() {
        letters.push(AutLetter::Eta);
    }
    let len = rng.gen_range(0..=max_len);
    let word: Vec<_> = (0..len)
        .map(|_| {
            let l = *letters.choose(rng).unwrap();
            (l, if rng.gen_bool(0.5) { 1 } else { -1 })
        })
        .collect();
    AutWord::new(&word)
}

/// A random element of the vertex group on `side` with `syllables`
/// alternating free and root syllables, starting with a free one.
pub fn random_in_factor(rng: &mut impl Rng, side: Side, p: GroupParams, syllables: usize) -> GElem {
    let mut x = FactorElem::from_h(side, p, random_h(rng, 2));
    for i in 0..syllables {
        let e = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let f = if i % 2 == 0 {
            FactorElem::free_power(side, p, e)
        } else {
            FactorElem::root_power(side, p, e)
        };
        x = x.mul(&f);
    }
    GElem::from_factor(&x, p)
}

pub fn random_h(rng: &mut impl Rng, bound: i64) -> HElem {
    HElem::new(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

/// A nonzero exponent in `[-bound, bound]` that is not a multiple of `modulus`.
pub fn exponent_off(rng: &mut impl Rng, bound: i64, modulus: i64) -> i64 {
    loop {
        let e = rng.gen_range(-bound..=bound);
        if e % modulus != 0 {
            return e;
        }
    }
}

/// A random element of the free product `spec` with at most `max_syllables`
/// syllables; infinite-factor exponents lie in `[-bound, bound]`.
pub fn random_fp(rng: &mut impl Rng, spec: FpSpec, max_syllables: usize, bound: i64) -> FpElem {
    let len = rng.gen_range(0..=max_syllables);
    let mut f = if rng.gen_bool(0.5) {
        FpFactor::X
    } else {
        FpFactor::Y
    };
    let mut syl = Vec::new();
    for _ in 0..len {
        let e = match spec.order(f) {
            0 => rng.gen_range(1..=bound) * if rng.gen_bool(0.5) { 1 } else { -1 },
            k => rng.gen_range(1..k),
        };
        syl.push((f, e));
        f = if f == FpFactor::X {
            FpFactor::Y
        } else {
            FpFactor::X
        };
    }
    FpElem::from_syllables(spec, &syl)
}

/// Every normal form with at most `max_syllables` syllables, infinite-factor
/// exponents in `[-bound, bound]`.
pub fn all_fp(spec: FpSpec, max_syllables: usize, bound: i64) -> Vec<FpElem> {
    let choices = |f: FpFactor| -> Vec<i64> {
        match spec.order(f) {
            0 => (-bound..=bound).filter(|&e| e != 0).collect(),
            k => (1..k).collect(),
        }
    };
    let mut out = vec![FpElem::identity(spec)];
    let mut layer: Vec<Vec<(FpFactor, i64)>> = vec![Vec::new()];
    for _ in 0..max_syllables {
        let mut next = Vec::new();
        for w in &layer {
            for f in [FpFactor::X, FpFactor::Y] {
                if w.last().map(|s| s.0) == Some(f) {
                    continue;
                }
                for e in choices(f) {
                    let mut v = w.clone();
                    v.push((f, e));
                    out.push(FpElem::from_syllables(spec, &v));
                    next.push(v);
                }
            }
        }
        layer = next;
    }
    out
}

/// Searches `conjugators` for `g` with `g^-1 e1 g = e2`.
pub fn brute_conjugate(e1: &FpElem, e2: &FpElem, conjugators: &[FpElem]) -> bool {
    conjugators.iter().any(|g| e1.conjugate_by(g) == *e2)
}

/// `g^-1 h g` lies in `H` for `h = c^p d^q`, checked over `|p|, |q| <= 3`
/// against the classification.
pub fn h_intersection_agrees(g: &GElem) -> bool {
    let class = h_intersection(g);
    let params = g.params();
    (-3..=3).all(|p| {
        (-3..=3).all(|q| {
            let h = GElem::from_h(params, HElem::new(p, q));
            h.conjugate_by(g).in_h() == class.contains(p, q)
        })
    })
}

/// The defining relations of `Aut G` as pairs of words in `L, M, E, A, B`.
pub fn aut_relations(p: GroupParams) -> Vec<(String, String)> {
    let am = vec!["A"; p.m() as usize].join(" ");
    let bn = vec!["B"; p.n() as usize].join(" ");
    let mut rels: Vec<(String, String)> = [
        ("L L", "1"),
        ("M M", "1"),
        ("L M", "M L"),
        ("L^-1 A L", "A^-1"),
        ("L^-1 B L", "B"),
        ("M^-1 A M", "A"),
        ("M^-1 B M", "B^-1"),
    ]
    .iter()
    .map(|&(l, r)| (l.to_string(), r.to_string()))
    .collect();
    rels.push((format!("{am} {bn}"), format!("{bn} {am}")));
    if p.is_symmetric() {
        for (l, r) in [("E E", "1"), ("E^-1 L E", "M"), ("E^-1 A E", "B")] {
            rels.push((l.to_string(), r.to_string()));
        }
    }
    rels
}

/// Relators `lhs rhs^-1` of `Aut G`.
pub fn aut_relators(p: GroupParams) -> Vec<AutWord> {
    aut_relations(p)
        .iter()
        .map(|(l, r)| {
            let l = parse_aut_word(l).unwrap();
            let r = parse_aut_word(r).unwrap();
            l.concat(&r.inverse())
        })
        .collect()
}

/// `w` with `count` conjugated relators inserted at random positions; it
/// denotes the same automorphism.
pub fn disguise(rng: &mut impl Rng, w: &AutWord, p: GroupParams, count: usize) -> AutWord {
    let relators = aut_relators(p);
    let mut out = w.clone();
    for _ in 0..count {
        let g = random_aut_word(rng, p, 3);
        let mut r = relators.choose(rng).unwrap().clone();
        if rng.gen_bool(0.5) {
            r = r.inverse();
        }
        let piece = g.concat(&r).concat(&g.inverse());
        let at = rng.gen_range(0..=out.len());
        out = AutWord::new(&out.letters()[..at])
            .concat(&piece)
            .concat(&AutWord::new(&out.letters()[at..]));
    }
    out
}
