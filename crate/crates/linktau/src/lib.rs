//! Exact link-homotopy invariants for immersed spheres in 4-manifolds.
//!
//! The crate computes, over exact integer arithmetic throughout:
//!
//! * the self-intersection pair `sigma = (sigma_+, sigma_-)` of a link
//!   map, valued in integer Laurent polynomials ([`sigma`], [`SigmaPair`]);
//! * the Whitney disk obstruction `tau` in `Z[s,1/s,t,1/t]` together with
//!   its reduction `Phi` to the group algebra `Z_2[Z_2]` and the final
//!   `Z_2` invariant `omega_+` ([`tau`], [`phi`], [`omega_plus`]);
//! * a certified semidecision procedure for equality in the quotient of
//!   `Z[s,1/s,t,1/t]` by the relator families the obstruction lives in
//!   ([`QuotientContext`], [`EqualityCertificate`]);
//! * Wall self-intersection pairings of tubed sphere classes and their
//!   mod-2 reductions ([`wall`]);
//! * homology ranks of the handle chain complex of a sphere complement
//!   over `Z[t,1/t]` ([`homology`]);
//! * the `.lmap` text format bundling all input data, with a canonical
//!   serializer and a bundled example dataset ([`lmap`]).
//!
//! The quotient procedure is one-sided: `Equal` and `Distinct` answers
//! come with replayable certificates, while `Unknown` only reports the
//! search window that was exhausted.

pub mod error;
pub mod group_ring;
pub mod homology;
pub mod invariants;
pub mod lmap;
pub mod quotient;
pub mod wall;

pub use error::Error;
pub use group_ring::{BiLaurent, C2Algebra, Laurent};
pub use homology::HandleComplex;
pub use invariants::{
    intersection_sum, omega_plus, phi, phi_laurent, sigma, tau, varphi, DiskIntersection,
    DoublePoint, SigmaPair, Sign, WhitneyDiskData,
};
pub use lmap::{
    kirk_example, serialize, DiskRecord, DoublePointRecord, LinkMapDocument, LinkedPair,
};
pub use quotient::{EqualityCertificate, QuotientContext, Relator};
pub use wall::{PairingData, SphereClass, WallIntersection};
