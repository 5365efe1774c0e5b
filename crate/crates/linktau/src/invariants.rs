//! Link-homotopy invariants of an immersed sphere pair.
//!
//! The data here describes one component of a link map: its transverse
//! double points, and the Whitney disks pairing the double points of the
//! other component together with their interior intersections.  From that
//! the module computes
//!
//! * [`sigma`] - the self-intersection invariant in `Z[t, t^-1]`,
//! * [`intersection_sum`] and [`tau`] - representatives in
//!   `Z[s^-1, s, t^-1, t]` of the Whitney-disk obstruction,
//! * [`phi`] / [`phi_laurent`] - the additive reduction onto `Z_2[Z_2]`,
//! * [`varphi`] and [`omega_plus`] - the final `Z_2` reduction.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::group_ring::{BiLaurent, C2Algebra, Laurent};

// ---- Data types ----

/// The sign of a transverse intersection point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    /// Intersection number `+1`.
    Pos,
    /// Intersection number `-1`.
    Neg,
}

impl Sign {
    /// The sign as an integer, `+1` or `-1`.
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Pos => "+1",
            Sign::Neg => "-1",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        match text {
            "+1" => Ok(Sign::Pos),
            "-1" => Ok(Sign::Neg),
            other => Err(Error::InvalidPolynomial(format!(
                "sign must be +1 or -1, got `{other}`"
            ))),
        }
    }
}

/// A double point of one component, with the group element exponent `n`
/// of the loop through it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DoublePoint {
    pub sign: Sign,
    /// Signed exponent; [`sigma`] uses its absolute value.
    pub n: i64,
}

/// One transverse intersection of the sphere with the interior of a
/// Whitney disk, carrying the secondary exponent `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DiskIntersection {
    pub sign: Sign,
    pub m: i64,
}

/// A Whitney disk together with its interior intersection data.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WhitneyDiskData {
    /// Label, used in reports and error messages.
    pub id: String,
    /// Primary exponent `n` attached to the disk; every interior
    /// intersection contributes with `s^n`.
    pub primary: i64,
    /// Interior intersections of the sphere with the disk.
    pub intersections: Vec<DiskIntersection>,
}

/// The pair `(sigma_plus, sigma_minus)` of self-intersection invariants of
/// the two components.
///
/// Each entry evaluates to zero at `t = 1`, since every monomial enters as
/// `t^|n| - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaPair {
    pub sigma_plus: Laurent,
    pub sigma_minus: Laurent,
}

impl fmt::Display for SigmaPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.sigma_plus, self.sigma_minus)
    }
}

// ---- Invariants ----

/// The self-intersection invariant: the signed sum of `t^|n| - 1` over the
/// double points.  Points with `n = 0` contribute nothing, and oppositely
/// signed points with equal `|n|` cancel.
pub fn sigma(points: &[DoublePoint]) -> Laurent {
    let mut out = Laurent::zero();
    for p in points {
        let sign = p.sign.value();
        out = out + Laurent::monomial(sign, p.n.abs()) - Laurent::monomial(sign, 0);
    }
    out
}

/// The signed double-variable sum `I(W)` over the interior intersections of
/// one Whitney disk: each intersection `x` contributes
/// `sign(x) * s^primary * t^m`.
pub fn intersection_sum(disk: &WhitneyDiskData) -> BiLaurent {
    let mut out = BiLaurent::zero();
    for x in &disk.intersections {
        out = out + BiLaurent::monomial(x.sign.value(), disk.primary, x.m);
    }
    out
}

/// The obstruction representative: the sum of [`intersection_sum`] over all
/// Whitney disks.  The value is a representative in the full group ring;
/// equality in the quotient is decided by the `quotient` module.
pub fn tau(disks: &[WhitneyDiskData]) -> BiLaurent {
    let mut out = BiLaurent::zero();
    for disk in disks {
        out = out + intersection_sum(disk);
    }
    out
}

/// The additive reduction `Z[s^-1, s, t^-1, t] -> Z_2[Z_2]`.
///
/// A monomial `a s^k t^l` maps to `a mod 2` when both exponents are even
/// and to `(a mod 2) t` otherwise; the map extends additively.  It is not
/// multiplicative, but it kills every relator of the quotient, which makes
/// it a separating homomorphism for equality testing.
pub fn phi(x: &BiLaurent) -> C2Algebra {
    let mut out = C2Algebra::ZERO;
    for ((k, l), coeff) in x.terms() {
        let bit = coeff.bit(0);
        let both_even = k.rem_euclid(2) == 0 && l.rem_euclid(2) == 0;
        out = out
            + if both_even {
                C2Algebra::new(bit, false)
            } else {
                C2Algebra::new(false, bit)
            };
    }
    out
}

/// The one-variable analogue of [`phi`]: `a t^k` maps to
/// `(a mod 2) t^(k mod 2)`.  On `Z[t, t^-1]` this one is a ring map.
pub fn phi_laurent(x: &Laurent) -> C2Algebra {
    let mut out = C2Algebra::ZERO;
    for (exp, coeff) in x.terms() {
        out = out + C2Algebra::from_integer_monomial(coeff, exp);
    }
    out
}

/// Projects `a + b*t` onto the coefficient `b` of `t`.
pub fn varphi(x: C2Algebra) -> bool {
    x.t
}

/// The composite `Z_2` invariant of a framed disk collection:
/// `varphi(phi(tau(disks)))`.
pub fn omega_plus(disks: &[WhitneyDiskData]) -> bool {
    varphi(phi(&tau(disks)))
}
