//! The quotients `G/M = C_m * Z` and `G/N = Z * C_n`, where `M` and `N` are
//! the normal closures of `a^m` and `b^n`, and the certificates showing that
//! automorphisms outside `Inn G` are not normal.
//!
//! A normal automorphism preserves every normal subgroup, so it induces an
//! automorphism of each quotient, and the induced map is normal again. An
//! automorphism of a nontrivial free product that is normal must be inner,
//! so exhibiting a generator whose image is not conjugate to it in a
//! quotient shows the original map is not normal. That fact about free
//! products is taken as known; certificates only carry (and re-check) the
//! conjugacy and order facts.

use std::fmt;

use thiserror::Error;

use crate::amalgam::GElem;
use crate::automorphism::{decompose, AutMap, Rejection};
use crate::word::{write_syllable, GroupParams, Letter};

/// The two free factors `<x>` and `<y>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FpFactor {
    X,
    Y,
}

impl fmt::Display for FpFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FpFactor::X => "x",
            FpFactor::Y => "y",
        })
    }
}

/// Orders of the two cyclic factors; 0 means infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpSpec {
    pub order_x: i64,
    pub order_y: i64,
}

impl FpSpec {
    pub fn order(&self, f: FpFactor) -> i64 {
        match f {
            FpFactor::X => self.order_x,
            FpFactor::Y => self.order_y,
        }
    }
}

/// Which normal subgroup to factor out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quotient {
    /// Normal closure of `a^m`: `G/M = C_m * Z`.
    M,
    /// Normal closure of `b^n`: `G/N = Z * C_n`.
    N,
}

impl Quotient {
    pub fn spec(self, params: GroupParams) -> FpSpec {
        match self {
            Quotient::M => FpSpec {
                order_x: params.m(),
                order_y: 0,
            },
            Quotient::N => FpSpec {
                order_x: 0,
                order_y: params.n(),
            },
        }
    }

    /// The generator of the normal subgroup: `a^m` or `b^n`.
    pub fn relator(self, params: GroupParams) -> GElem {
        match self {
            Quotient::M => GElem::a(params, params.m()),
            Quotient::N => GElem::b(params, params.n()),
        }
    }
}

impl fmt::Display for Quotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quotient::M => "M",
            Quotient::N => "N",
        })
    }
}

/// Normal form in a free product of two cyclic groups: alternating
/// syllables, finite-factor exponents in `[1, order - 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpElem {
    spec: FpSpec,
    syllables: Vec<(FpFactor, i64)>,
}

impl FpElem {
    pub fn identity(spec: FpSpec) -> Self {
        FpElem {
            spec,
            syllables: Vec::new(),
        }
    }

    pub fn generator(spec: FpSpec, f: FpFactor) -> Self {
        FpElem::from_syllables(spec, &[(f, 1)])
    }

    pub fn from_syllables(spec: FpSpec, syllables: &[(FpFactor, i64)]) -> Self {
        let mut out = FpElem::identity(spec);
        for &(f, e) in syllables {
            out.push(f, e);
        }
        out
    }

    pub fn spec(&self) -> FpSpec {
        self.spec
    }

    pub fn syllables(&self) -> &[(FpFactor, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    fn reduce(&self, f: FpFactor, e: i64) -> i64 {
        match self.spec.order(f) {
            0 => e,
            k => e.rem_euclid(k),
        }
    }

    fn push(&mut self, f: FpFactor, e: i64) {
        let mut e = self.reduce(f, e);
        if let Some(&(last, le)) = self.syllables.last() {
            if last == f {
                self.syllables.pop();
                e = self.reduce(f, e + le);
            }
        }
        if e != 0 {
            self.syllables.push((f, e));
        }
    }

    pub fn mul(&self, other: &FpElem) -> FpElem {
        let mut out = self.clone();
        for &(f, e) in &other.syllables {
            out.push(f, e);
        }
        out
    }

    pub fn inverse(&self) -> FpElem {
        let syl: Vec<_> = self.syllables.iter().rev().map(|&(f, e)| (f, -e)).collect();
        FpElem::from_syllables(self.spec, &syl)
    }

    pub fn pow(&self, k: i64) -> FpElem {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = FpElem::identity(self.spec);
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    pub fn conjugate_by(&self, w: &FpElem) -> FpElem {
        w.inverse().mul(self).mul(w)
    }

    /// `(u, core)` with `self = u core u^-1` and `core` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (FpElem, FpElem) {
        let mut u = FpElem::identity(self.spec);
        let mut core = self.clone();
        while core.syllables.len() >= 2
            && core.syllables[0].0 == core.syllables[core.syllables.len() - 1].0
        {
            let first = FpElem::from_syllables(self.spec, &core.syllables[..1]);
            core = core.conjugate_by(&first);
            u = u.mul(&first);
        }
        (u, core)
    }
}

impl fmt::Display for FpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (i, &(fac, e)) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let ch = match fac {
                FpFactor::X => 'x',
                FpFactor::Y => 'y',
            };
            write_syllable(f, ch, e)?;
        }
        Ok(())
    }
}

/// Image of `g` in `G/M` or `G/N` under `a -> x`, `b -> y`.
pub fn project(g: &GElem, which: Quotient) -> FpElem {
    let params = g.params();
    let spec = which.spec(params);
    let syllables: Vec<_> = g
        .to_word()
        .syllables()
        .iter()
        .map(|&(l, e)| match l {
            Letter::A => (FpFactor::X, e),
            Letter::B => (FpFactor::Y, e),
            Letter::C => (FpFactor::X, params.m() * e),
            Letter::D => (FpFactor::Y, params.n() * e),
        })
        .collect();
    FpElem::from_syllables(spec, &syllables)
}

/// Conjugacy in a free product of cyclic groups: cyclically reduce both
/// sides; cores of length at most 1 are conjugate iff equal (the factors are
/// abelian), longer cores iff they agree up to cyclic rotation.
pub fn fp_conjugate(e1: &FpElem, e2: &FpElem) -> bool {
    let (_, c1) = e1.cyclic_reduce();
    let (_, c2) = e2.cyclic_reduce();
    let (s1, s2) = (c1.syllables(), c2.syllables());
    if s1.len() != s2.len() {
        return false;
    }
    if s1.len() <= 1 {
        return s1 == s2;
    }
    (0..s1.len()).any(|k| s1[k..].iter().chain(&s1[..k]).eq(s2.iter()))
}

/// Generator images of the map induced on `G/M` or `G/N`, or `None` when the
/// automorphism does not map the normal subgroup into itself.
pub fn induced_map(phi: &AutMap, which: Quotient) -> Option<(FpElem, FpElem)> {
    let params = phi.params();
    let image = phi.apply(&which.relator(params));
    if !project(&image, which).is_identity() {
        return None;
    }
    Some((project(phi.image_a(), which), project(phi.image_b(), which)))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("image of {generator} has order not dividing {order}")]
    IllDefined { generator: FpFactor, order: i64 },
}

/// A generator whose image is not conjugate to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub generator: FpFactor,
    pub image: FpElem,
}

/// Looks for a generator not conjugate to its image. Finding one shows the
/// map is not inner; finding none proves nothing.
pub fn non_inner_witness(
    images: &(FpElem, FpElem),
    spec: FpSpec,
) -> Result<Option<Witness>, QuotientError> {
    let pairs = [(FpFactor::X, &images.0), (FpFactor::Y, &images.1)];
    for (generator, image) in pairs {
        let order = spec.order(generator);
        if order != 0 && !image.pow(order).is_identity() {
            return Err(QuotientError::IllDefined { generator, order });
        }
    }
    Ok(pairs.into_iter().find_map(|(generator, image)| {
        (!fp_conjugate(image, &FpElem::generator(spec, generator))).then(|| Witness {
            generator,
            image: image.clone(),
        })
    }))
}

/// Why an automorphism outside `Inn G` is not normal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// The image of the relator `a^m` (or `b^n`) is nontrivial in the
    /// quotient, so the normal subgroup is not preserved.
    OrderObstruction { quotient: Quotient, image: FpElem },
    /// The induced map on the quotient sends a generator to a non-conjugate
    /// element, so it is not inner, hence not normal in the free product.
    NonInnerInQuotient {
        quotient: Quotient,
        generator: FpFactor,
        image: FpElem,
    },
}

impl Certificate {
    pub fn quotient(&self) -> Quotient {
        match self {
            Certificate::OrderObstruction { quotient, .. }
            | Certificate::NonInnerInQuotient { quotient, .. } => *quotient,
        }
    }

    /// Re-derives the certificate's facts from `phi`.
    pub fn verify(&self, phi: &AutMap) -> bool {
        let params = phi.params();
        match self {
            Certificate::OrderObstruction { quotient, image } => {
                let actual = project(&phi.apply(&quotient.relator(params)), *quotient);
                !actual.is_identity() && actual == *image
            }
            Certificate::NonInnerInQuotient {
                quotient,
                generator,
                image,
            } => {
                let Some(images) = induced_map(phi, *quotient) else {
                    return false;
                };
                let actual = match generator {
                    FpFactor::X => &images.0,
                    FpFactor::Y => &images.1,
                };
                let spec = quotient.spec(params);
                actual == image
                    && non_inner_witness(&images, spec).is_ok()
                    && !fp_conjugate(actual, &FpElem::generator(spec, *generator))
            }
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::OrderObstruction { quotient, image } => {
                let rel = match quotient {
                    Quotient::M => "a^m",
                    Quotient::N => "b^n",
                };
                write!(
                    f,
                    "quotient G/{quotient}: image of {rel} is {image}, not 1, so {quotient} is not preserved"
                )
            }
            Certificate::NonInnerInQuotient {
                quotient,
                generator,
                image,
            } => write!(
                f,
                "quotient G/{quotient}: induced map sends {generator} to {image}, which is not conjugate to {generator}; \
                 the induced automorphism of the free product is not inner, hence not normal"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalityVerdict {
    /// Inner, hence normal: `g -> w^-1 g w`.
    Normal {
        w: GElem,
    },
    NotNormal(Certificate),
}

impl NormalityVerdict {
    pub fn is_normal(&self) -> bool {
        matches!(self, NormalityVerdict::Normal { .. })
    }
}

/// Decides normality of an automorphism: it is normal exactly when it is inner.
pub fn is_normal_automorphism(phi: &AutMap) -> Result<NormalityVerdict, Rejection> {
    let d = decompose(phi)?;
    if d.kappa.is_identity() {
        return Ok(NormalityVerdict::Normal { w: d.w });
    }
    let params = phi.params();
    let certificate = if d.kappa.eta {
        let quotient = Quotient::M;
        let image = project(&phi.apply(&quotient.relator(params)), quotient);
        Certificate::OrderObstruction { quotient, image }
    } else {
        // mu inverts b, which is visible in G/M; lambda alone inverts a,
        // visible in G/N. The witness is the first generator that works, so
        // lambda mu may be caught on x when m > 2.
        let quotient = if d.kappa.mu { Quotient::M } else { Quotient::N };
        let images = induced_map(phi, quotient).ok_or(Rejection::Internal)?;
        let witness = non_inner_witness(&images, quotient.spec(params))
            .map_err(|_| Rejection::Internal)?
            .ok_or(Rejection::Internal)?;
        Certificate::NonInnerInQuotient {
            quotient,
            generator: witness.generator,
            image: witness.image,
        }
    };
    if !certificate.verify(phi) {
        return Err(Rejection::Internal);
    }
    Ok(NormalityVerdict::NotNormal(certificate))
}
