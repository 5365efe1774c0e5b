//! Intersection pairings with the immersed discs and spheres of the
//! complement.
//!
//! A disc `D` meeting the sphere transversely determines a pairing value
//! `lambda(F, D)` in `Z[t, t^-1]`; the sphere class `A` obtained by tubing
//! `D` has pairing `lambda(F, A) = (1 - t^eps) * lambda(F, D)`.  Reducing by
//! [`phi_laurent`] gives `lambda~`, which always lands in the ideal
//! generated by `1 + t` and vanishes for the bundled dataset.
//!
//! Sphere pairings also feed the quotient: each sphere class contributes the
//! relator family `s^k lambda(F, A) - w2(A) s^k` (`R4`).

use crate::error::Error;
use crate::group_ring::{BiLaurent, C2Algebra, Laurent};
use crate::invariants::{phi_laurent, Sign};
use crate::quotient::{QuotientContext, Relator};

// ---- Data types ----

/// One transverse intersection of the sphere with a disc, carrying the
/// group element exponent of its double-point loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WallIntersection {
    pub sign: Sign,
    pub exp: i64,
}

/// Intersection data of the sphere with one immersed disc.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairingData {
    /// Label of the disc, used in reports; parsed documents reuse the id of
    /// the sphere built from the disc.
    pub disc_id: String,
    /// Transverse intersection points with the disc interior.
    pub points: Vec<WallIntersection>,
    /// Exponent shift of the tube: the sphere pairing gains `(1 - t^eps)`.
    pub eps: Sign,
}

/// A sphere class in the complement, obtained by tubing a disc.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SphereClass {
    pub id: String,
    pub pairing: PairingData,
    /// Second Stiefel-Whitney bit of the class.
    pub w2: bool,
}

// ---- Pairings ----

/// The disc-level pairing: the signed sum of `t^exp` over the intersection
/// points.
pub fn lambda_disc(pairing: &PairingData) -> Laurent {
    let mut out = Laurent::zero();
    for point in &pairing.points {
        out = out + Laurent::monomial(point.sign.value(), point.exp);
    }
    out
}

/// The sphere-level pairing `(1 - t^eps) * lambda_disc`.
pub fn lambda_sphere(sphere: &SphereClass) -> Laurent {
    let tube = Laurent::one() - Laurent::monomial(1, sphere.pairing.eps.value());
    tube * lambda_disc(&sphere.pairing)
}

/// The reduced pairing `phi_laurent(lambda_sphere)`.
///
/// Since `phi_laurent` is a ring map and sends the tube factor to `1 + t`,
/// this always equals `(1 + t) * phi_laurent(lambda_disc)`.
pub fn lambda_tilde(sphere: &SphereClass) -> C2Algebra {
    phi_laurent(&lambda_sphere(sphere))
}

/// Expands the `R4` relators `s^k lambda(F, A) - w2(A) s^k` for every
/// sphere and every `|k| <= window`, dropping zero expansions.
pub fn relation4_instances(spheres: &[SphereClass], window: i64) -> Vec<BiLaurent> {
    assert!(window >= 0, "window must be nonnegative");
    let mut out = Vec::new();
    for sphere in spheres {
        let g = lambda_sphere(sphere);
        for k in -window..=window {
            let expansion = Relator::R4 {
                g: g.clone(),
                w2: sphere.w2,
                k,
            }
            .expand();
            if !expansion.is_zero() {
                out.push(expansion);
            }
        }
    }
    out
}

/// A quotient context whose `R4` data comes from the given spheres.
pub fn quotient_context(spheres: &[SphereClass], window: i64) -> QuotientContext {
    let r4_data = spheres
        .iter()
        .map(|sphere| (lambda_sphere(sphere), sphere.w2))
        .collect();
    QuotientContext::with_r4_data(window, r4_data)
}

/// The pairing of a `Z[t, t^-1]`-linear combination of sphere classes:
/// `lambda(F, sum g_i A_i) = sum g_i lambda(F, A_i)`.
pub fn lambda_linear_combination(
    coefficients: &[Laurent],
    spheres: &[SphereClass],
) -> Result<Laurent, Error> {
    if coefficients.len() != spheres.len() {
        return Err(Error::LengthMismatch {
            coefficients: coefficients.len(),
            spheres: spheres.len(),
        });
    }
    let mut out = Laurent::zero();
    for (coeff, sphere) in coefficients.iter().zip(spheres) {
        out = out + coeff * &lambda_sphere(sphere);
    }
    Ok(out)
}
