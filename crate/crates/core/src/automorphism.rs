//! Endomorphisms given by generator images, the automorphism decision
//! procedure, and the factorization of every automorphism as `kappa` followed
//! by an inner automorphism.
//!
//! Maps act on the right: `compose(phi, psi)` is "first `phi`, then `psi`",
//! and `inner(w)` is `g -> w^-1 g w`, so `inner(w)` then `inner(v)` equals
//! `inner(w v)`.
//!
//! Every automorphism is `kappa * inn(w)` with `kappa` one of the sign
//! changes `{1, lambda, mu, lambda mu}` (together with the swap `eta` when
//! `m = n`). Both factors are unique because `kappa` is detected on the
//! abelianization while inner maps act trivially there, and the centre of
//! `G` is trivial.

use std::fmt;

use thiserror::Error;

use crate::amalgam::{cyclic_decompose, GElem, HElem, Side};
use crate::generation::{
    a_d_exponents, b_c_exponents, conjugate_power_forms, is_generating_pair_from_forms,
    GenerationError,
};
use crate::word::{GroupParams, Letter, Word};

/// An endomorphism of `G`, stored as the images of `a` and `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AutMap {
    image_a: GElem,
    image_b: GElem,
}

impl AutMap {
    /// Checks that `[u^m, v^n] = 1` so that the assignment extends to `G`.
    pub fn new(image_a: GElem, image_b: GElem) -> Result<Self, Rejection> {
        let params = image_a.params();
        let ok = image_a
            .pow(params.m())
            .commutes_with(&image_b.pow(params.n()));
        if !ok {
            return Err(Rejection::NotEndomorphism);
        }
        Ok(AutMap { image_a, image_b })
    }

    #[cfg(test)]
    pub(crate) fn unchecked(image_a: GElem, image_b: GElem) -> Self {
        AutMap { image_a, image_b }
    }

    pub fn identity(params: GroupParams) -> Self {
        AutMap {
            image_a: GElem::a(params, 1),
            image_b: GElem::b(params, 1),
        }
    }

    /// `a -> a^-1, b -> b`.
    pub fn lambda(params: GroupParams) -> Self {
        AutMap {
            image_a: GElem::a(params, -1),
            image_b: GElem::b(params, 1),
        }
    }

    /// `a -> a, b -> b^-1`.
    pub fn mu(params: GroupParams) -> Self {
        AutMap {
            image_a: GElem::a(params, 1),
            image_b: GElem::b(params, -1),
        }
    }

    /// `a -> a^-1, b -> b^-1`.
    pub fn nu(params: GroupParams) -> Self {
        AutMap {
            image_a: GElem::a(params, -1),
            image_b: GElem::b(params, -1),
        }
    }

    /// `a <-> b`; only an automorphism when `m = n`.
    pub fn eta(params: GroupParams) -> Option<Self> {
        params.is_symmetric().then(|| AutMap {
            image_a: GElem::b(params, 1),
            image_b: GElem::a(params, 1),
        })
    }

    /// `g -> w^-1 g w`.
    pub fn inner(w: &GElem) -> Self {
        let params = w.params();
        AutMap {
            image_a: GElem::a(params, 1).conjugate_by(w),
            image_b: GElem::b(params, 1).conjugate_by(w),
        }
    }

    pub fn params(&self) -> GroupParams {
        self.image_a.params()
    }

    pub fn image_a(&self) -> &GElem {
        &self.image_a
    }

    pub fn image_b(&self) -> &GElem {
        &self.image_b
    }

    pub fn apply(&self, g: &GElem) -> GElem {
        let params = self.params();
        let image_c = self.image_a.pow(params.m());
        let image_d = self.image_b.pow(params.n());
        let mut out = GElem::identity(params);
        for &(letter, e) in g.to_word().syllables() {
            let base = match letter {
                Letter::A => &self.image_a,
                Letter::B => &self.image_b,
                Letter::C => &image_c,
                Letter::D => &image_d,
            };
            out = out.mul(&base.pow(e));
        }
        out
    }

    /// First `self`, then `then`.
    pub fn compose(&self, then: &AutMap) -> AutMap {
        AutMap {
            image_a: then.apply(&self.image_a),
            image_b: then.apply(&self.image_b),
        }
    }

    /// Rows are the exponent sums of the images of `a` and `b`.
    pub fn abelianization_matrix(&self) -> [[i64; 2]; 2] {
        let (aa, ab) = self.image_a.exponent_sums();
        let (ba, bb) = self.image_b.exponent_sums();
        [[aa, ab], [ba, bb]]
    }

    pub fn is_identity(&self) -> bool {
        *self == AutMap::identity(self.params())
    }
}

impl fmt::Display for AutMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a -> {}; b -> {}", self.image_a, self.image_b)
    }
}

pub fn apply(phi: &AutMap, g: &GElem) -> GElem {
    phi.apply(g)
}

pub fn compose(phi: &AutMap, psi: &AutMap) -> AutMap {
    phi.compose(psi)
}

pub fn inner(w: &GElem) -> AutMap {
    AutMap::inner(w)
}

pub fn abelianization_matrix(phi: &AutMap) -> [[i64; 2]; 2] {
    phi.abelianization_matrix()
}

/// An element `lambda^e1 mu^e2 eta^e3` of the finite group `K` (or `L` when
/// `m = n`).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KappaPart {
    pub lambda: bool,
    pub mu: bool,
    pub eta: bool,
}

/// One of the three involutions generating `L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KappaGen {
    Lambda,
    Mu,
    Eta,
}

impl KappaPart {
    pub const IDENTITY: KappaPart = KappaPart {
        lambda: false,
        mu: false,
        eta: false,
    };

    pub fn is_identity(&self) -> bool {
        *self == KappaPart::IDENTITY
    }

    /// All elements of `K`, or of `L` when `m = n`.
    pub fn all(params: GroupParams) -> Vec<KappaPart> {
        let etas: &[bool] = if params.is_symmetric() {
            &[false, true]
        } else {
            &[false]
        };
        let mut out = Vec::new();
        for &eta in etas {
            for lambda in [false, true] {
                for mu in [false, true] {
                    out.push(KappaPart { lambda, mu, eta });
                }
            }
        }
        out
    }

    /// `self * gen`, normalized with `eta^-1 lambda eta = mu` and its consequences.
    pub fn times_gen(self, gen: KappaGen) -> KappaPart {
        let mut out = self;
        match (gen, self.eta) {
            (KappaGen::Lambda, false) | (KappaGen::Mu, true) => out.lambda ^= true,
            (KappaGen::Mu, false) | (KappaGen::Lambda, true) => out.mu ^= true,
            (KappaGen::Eta, _) => out.eta ^= true,
        }
        out
    }

    pub fn times(self, other: KappaPart) -> KappaPart {
        let mut out = self;
        for g in other.gens() {
            out = out.times_gen(g);
        }
        out
    }

    /// The generators in canonical order `lambda, mu, eta`.
    pub fn gens(self) -> Vec<KappaGen> {
        let mut out = Vec::with_capacity(3);
        if self.lambda {
            out.push(KappaGen::Lambda);
        }
        if self.mu {
            out.push(KappaGen::Mu);
        }
        if self.eta {
            out.push(KappaGen::Eta);
        }
        out
    }

    pub fn to_map(self, params: GroupParams) -> Result<AutMap, Rejection> {
        let mut out = AutMap::identity(params);
        for g in self.gens() {
            out = out.compose(&gen_map(g, params)?);
        }
        Ok(out)
    }
}

fn gen_map(g: KappaGen, params: GroupParams) -> Result<AutMap, Rejection> {
    Ok(match g {
        KappaGen::Lambda => AutMap::lambda(params),
        KappaGen::Mu => AutMap::mu(params),
        KappaGen::Eta => AutMap::eta(params).ok_or(Rejection::SwapRequiresEqualExponents)?,
    })
}

impl fmt::Display for KappaPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        for g in self.gens() {
            f.write_str(match g {
                KappaGen::Lambda => "L",
                KappaGen::Mu => "M",
                KappaGen::Eta => "E",
            })?;
        }
        Ok(())
    }
}

/// `kappa` followed by `inner(w)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AutDecomposition {
    pub kappa: KappaPart,
    pub w: GElem,
}

impl AutDecomposition {
    pub fn recompose(&self) -> Result<AutMap, Rejection> {
        Ok(self
            .kappa
            .to_map(self.w.params())?
            .compose(&AutMap::inner(&self.w)))
    }
}

impl fmt::Display for AutDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "kappa={}; inner={}", self.kappa, self.w)
    }
}

pub fn recompose(d: &AutDecomposition) -> Result<AutMap, Rejection> {
    d.recompose()
}

/// Why a pair of images does not define an automorphism. Each variant names
/// the step of the decision procedure that excludes it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Rejection {
    #[error("not an endomorphism: [u^m, v^n] != 1")]
    NotEndomorphism,
    #[error("abelianization matrix has determinant {det}, not +-1")]
    AbelianizationNotInvertible { det: i64 },
    #[error("image of a is not conjugate into a vertex group (its cyclic core has length > 1)")]
    ImageOfANotConjugableIntoFactor,
    #[error("an image is conjugate into the amalgamated subgroup H")]
    ImageInAmalgamatedSubgroup,
    #[error("both images are conjugate into the same vertex group")]
    ImagesInSameFactor,
    #[error("image of b is cyclically reduced of length > 1")]
    ImageOfBNotConjugableIntoFactor,
    #[error("image of b starts in the vertex group not containing the image of a")]
    ConjugatorInWrongFactor,
    #[error("images land in swapped vertex groups, which requires m = n")]
    SwapRequiresEqualExponents,
    #[error("no conjugate-power form: {0}")]
    NoConjugatePowerForm(GenerationError),
    #[error("images do not generate the group")]
    ImagesDoNotGenerate,
    #[error("internal inconsistency: decomposition does not recompose to the input")]
    Internal,
}

/// Decides whether `a -> u, b -> v` defines an automorphism of `G`.
pub fn is_automorphism(
    u: &Word,
    v: &Word,
    params: GroupParams,
) -> Result<AutDecomposition, Rejection> {
    let phi = AutMap::new(
        crate::amalgam::embed(u, params),
        crate::amalgam::embed(v, params),
    )?;
    decompose(&phi)
}

/// The decision pipeline on an endomorphism given by normal forms.
///
/// The images are conjugated until the image of `a` sits in one vertex group
/// and the image of `b` in the other; then both are written as conjugates of
/// powers of `a` and `b`, and the generation criterion decides. A generating
/// pair gives a surjective endomorphism, hence an automorphism since `G` is
/// Hopfian.
pub fn decompose(phi: &AutMap) -> Result<AutDecomposition, Rejection> {
    let params = phi.params();
    let det = {
        let [[p, q], [r, s]] = phi.abelianization_matrix();
        p * s - q * r
    };
    if det.abs() != 1 {
        return Err(Rejection::AbelianizationNotInvertible { det });
    }

    // phi followed by inner(w) sends a -> u, b -> v.
    let split = cyclic_decompose(phi.image_a());
    if split.v.length() > 1 {
        return Err(Rejection::ImageOfANotConjugableIntoFactor);
    }
    let mut w = split.u;
    let mut u = split.v;
    let mut v = phi.image_b().conjugate_by(&w);
    let Some(side) = u.factor_side() else {
        return Err(Rejection::ImageInAmalgamatedSubgroup);
    };
    loop {
        if v.in_factor(side) {
            return Err(Rejection::ImagesInSameFactor);
        }
        if v.in_factor(side.other()) {
            break;
        }
        if v.is_cyclically_reduced() {
            return Err(Rejection::ImageOfBNotConjugableIntoFactor);
        }
        let x1 = v.first_factor();
        if x1.side() != side {
            return Err(Rejection::ConjugatorInWrongFactor);
        }
        let x = GElem::from_factor(&x1, params);
        u = u.conjugate_by(&x);
        v = v.conjugate_by(&x);
        w = w.mul(&x);
    }
    if u.in_h() || v.in_h() {
        return Err(Rejection::ImageInAmalgamatedSubgroup);
    }

    let swap = if side == Side::B {
        let eta = AutMap::eta(params).ok_or(Rejection::SwapRequiresEqualExponents)?;
        u = eta.apply(&u);
        v = eta.apply(&v);
        Some(eta)
    } else {
        None
    };

    let forms = conjugate_power_forms(&u, &v, params.m(), params.n())
        .map_err(Rejection::NoConjugatePowerForm)?;
    if !is_generating_pair_from_forms(&forms) {
        return Err(Rejection::ImagesDoNotGenerate);
    }
    let (_, d_exp) = a_d_exponents(&forms.x)
        .ok()
        .flatten()
        .ok_or(Rejection::Internal)?;
    let (_, c_exp) = b_c_exponents(&forms.y)
        .ok()
        .flatten()
        .ok_or(Rejection::Internal)?;
    // d^-q a^e d^q and c^-s b^f c^s are both conjugates by c^s d^q, since c
    // commutes with a and d commutes with b.
    let z = GElem::from_h(params, HElem::new(c_exp, d_exp));
    let mut kappa = KappaPart {
        lambda: forms.k == -1,
        mu: forms.l == -1,
        eta: false,
    };
    let z = match swap {
        // chi eta = kappa' inn(z)  =>  chi = kappa' eta inn(eta(z))
        Some(eta) => {
            kappa.eta = true;
            eta.apply(&z)
        }
        None => z,
    };
    let decomposition = AutDecomposition {
        kappa,
        w: z.mul(&w.inverse()),
    };
    if decomposition.recompose()? != *phi {
        return Err(Rejection::Internal);
    }
    Ok(decomposition)
}
