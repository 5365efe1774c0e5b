//! The `.lmap` document format: a small line-oriented description of a
//! link map, rich enough to drive every invariant in this crate.
//!
//! ```text
//! linkmap <string>
//! dp+ <id> sign=<+1|-1> n=<int>
//! dp- <id> sign=<+1|-1> n=<int>
//! pair <id> = <dp-id> <dp-id>
//! disk <id> pair=<pair-id> primary=<int> framed=<0|1>
//!   x sign=<+1|-1> m=<int>
//! end
//! sphere <id> eps=<+1|-1> w2=<0|1>
//!   d sign=<+1|-1> exp=<int>
//! end
//! handles <int>
//! ```
//!
//! `dp+`/`dp-` lines list the double points of the two components, `pair`
//! lines pair up double points carrying a Whitney disk, `disk` blocks hold
//! the interior intersections of each disk, `sphere` blocks hold the
//! intersections with each tubed disc, and `handles` counts the 2-handles
//! of the complement.  Lines may carry `#` comments; blank lines are
//! ignored.
//!
//! [`parse`] accepts the statements in any order and validates references
//! and id uniqueness with line/column positions on failure.  [`serialize`]
//! emits the canonical form: sections in the order shown above, entries in
//! declaration order, no comments, trailing newline, and the `handles`
//! line omitted when the count is zero.  `parse(serialize(doc)) == doc`
//! for every document, and `serialize(parse(text)) == text` for canonical
//! text.

mod parse;

pub use parse::parse;

use crate::error::Error;
use crate::group_ring::{BiLaurent, C2Algebra};
use crate::invariants::{
    intersection_sum, omega_plus, phi, sigma, DiskIntersection, DoublePoint, SigmaPair, Sign,
    WhitneyDiskData,
};
use crate::quotient::QuotientContext;
use crate::wall::{self, PairingData, SphereClass, WallIntersection};

// ---- Document model ----

/// A labelled double point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoublePointRecord {
    pub id: String,
    pub point: DoublePoint,
}

/// A pair of double points joined by a Whitney disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkedPair {
    pub id: String,
    pub first: String,
    pub second: String,
}

/// A Whitney disk entry: the pair it belongs to, its framing status and
/// its intersection data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskRecord {
    pub pair: String,
    pub framed: bool,
    pub data: WhitneyDiskData,
}

/// A parsed `.lmap` document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkMapDocument {
    pub name: String,
    pub dp_plus: Vec<DoublePointRecord>,
    pub dp_minus: Vec<DoublePointRecord>,
    pub pairs: Vec<LinkedPair>,
    pub disks: Vec<DiskRecord>,
    pub spheres: Vec<SphereClass>,
    pub handles: usize,
}

impl LinkMapDocument {
    /// The double points of the positive component.
    pub fn double_points_plus(&self) -> Vec<DoublePoint> {
        self.dp_plus.iter().map(|r| r.point).collect()
    }

    /// The double points of the negative component.
    pub fn double_points_minus(&self) -> Vec<DoublePoint> {
        self.dp_minus.iter().map(|r| r.point).collect()
    }

    /// Both self-intersection invariants.
    pub fn sigma_pair(&self) -> SigmaPair {
        SigmaPair {
            sigma_plus: sigma(&self.double_points_plus()),
            sigma_minus: sigma(&self.double_points_minus()),
        }
    }

    /// The Whitney disk data, in declaration order.
    pub fn whitney_disks(&self) -> impl Iterator<Item = &WhitneyDiskData> {
        self.disks.iter().map(|record| &record.data)
    }

    /// Whether every disk is framed; the obstruction sum needs this.
    pub fn all_framed(&self) -> bool {
        self.disks.iter().all(|record| record.framed)
    }

    /// The obstruction representative, or an error naming the first
    /// unframed disk.
    pub fn tau_representative(&self) -> Result<BiLaurent, Error> {
        if let Some(record) = self.disks.iter().find(|record| !record.framed) {
            return Err(Error::UnframedDisk(record.data.id.clone()));
        }
        let mut out = BiLaurent::zero();
        for record in &self.disks {
            out = out + intersection_sum(&record.data);
        }
        Ok(out)
    }

    /// The reduction of the obstruction representative.
    pub fn phi_tau(&self) -> Result<C2Algebra, Error> {
        Ok(phi(&self.tau_representative()?))
    }

    /// The final `Z_2` invariant of the disk collection.
    pub fn omega_plus(&self) -> Result<bool, Error> {
        self.tau_representative()?;
        let disks: Vec<WhitneyDiskData> = self.whitney_disks().cloned().collect();
        Ok(omega_plus(&disks))
    }

    /// A quotient context whose `R4` data comes from this document's
    /// spheres.
    pub fn quotient_context(&self, window: i64) -> QuotientContext {
        wall::quotient_context(&self.spheres, window)
    }
}

// ---- Canonical serialization ----

/// Writes the canonical text form of a document.
pub fn serialize(doc: &LinkMapDocument) -> String {
    use std::fmt::Write;

    let mut out = String::new();
    writeln!(out, "linkmap {}", doc.name).unwrap();
    for record in &doc.dp_plus {
        writeln!(
            out,
            "dp+ {} sign={} n={}",
            record.id, record.point.sign, record.point.n
        )
        .unwrap();
    }
    for record in &doc.dp_minus {
        writeln!(
            out,
            "dp- {} sign={} n={}",
            record.id, record.point.sign, record.point.n
        )
        .unwrap();
    }
    for pair in &doc.pairs {
        writeln!(out, "pair {} = {} {}", pair.id, pair.first, pair.second).unwrap();
    }
    for disk in &doc.disks {
        writeln!(
            out,
            "disk {} pair={} primary={} framed={}",
            disk.data.id,
            disk.pair,
            disk.data.primary,
            u8::from(disk.framed)
        )
        .unwrap();
        for x in &disk.data.intersections {
            writeln!(out, "  x sign={} m={}", x.sign, x.m).unwrap();
        }
        writeln!(out, "end").unwrap();
    }
    for sphere in &doc.spheres {
        writeln!(
            out,
            "sphere {} eps={} w2={}",
            sphere.id,
            sphere.pairing.eps,
            u8::from(sphere.w2)
        )
        .unwrap();
        for d in &sphere.pairing.points {
            writeln!(out, "  d sign={} exp={}", d.sign, d.exp).unwrap();
        }
        writeln!(out, "end").unwrap();
    }
    if doc.handles != 0 {
        writeln!(out, "handles {}", doc.handles).unwrap();
    }
    out
}

// ---- Bundled dataset ----

/// The bundled example dataset: a link map whose components have
/// self-intersection invariants `0` and `t^2 - 4t + 3`, five framed
/// Whitney disks with reductions `1, t, 0, t, t`, five sphere classes with
/// vanishing reduced pairing, and five 2-handles.
///
/// Conventions recorded here, where the source pictures leave freedom:
///
/// * the minus component carries one positive double point with `n = 2`
///   and four negative ones with `n = 1`, making its invariant exactly
///   `t^2 - 4*t + 3`;
/// * the plus component's ten double points come in five cancelling pairs
///   with `n = 0, 1, 1, 1, 1`, so its invariant is `0`;
/// * each disk stores the minimal intersection list realizing its recorded
///   reduction: one positive point for `W1`, `W4`, `W5`, a cancelling pair
///   for `W3`, and two cancelling pairs plus one survivor for `W2`;
/// * every sphere has `eps = +1` and `w2 = 0`, with disc-level pairing
///   `1 + t` (`A1`..`A4`) and `2 + 2t` (`A5`).
pub fn kirk_example() -> LinkMapDocument {
    let dp = |id: &str, sign, n| DoublePointRecord {
        id: id.to_string(),
        point: DoublePoint { sign, n },
    };
    let pair = |id: &str, first: &str, second: &str| LinkedPair {
        id: id.to_string(),
        first: first.to_string(),
        second: second.to_string(),
    };
    let disk = |id: &str, pair: &str, primary, points: &[(Sign, i64)]| DiskRecord {
        pair: pair.to_string(),
        framed: true,
        data: WhitneyDiskData {
            id: id.to_string(),
            primary,
            intersections: points
                .iter()
                .map(|(sign, m)| DiskIntersection { sign: *sign, m: *m })
                .collect(),
        },
    };
    let sphere = |id: &str, points: &[(Sign, i64)]| SphereClass {
        id: id.to_string(),
        pairing: PairingData {
            disc_id: id.to_string(),
            points: points
                .iter()
                .map(|(sign, exp)| WallIntersection {
                    sign: *sign,
                    exp: *exp,
                })
                .collect(),
            eps: Sign::Pos,
        },
        w2: false,
    };

    let pair_exponents = [0, 1, 1, 1, 1];
    let dp_plus = pair_exponents
        .iter()
        .enumerate()
        .flat_map(|(i, n)| {
            let index = i + 1;
            [
                dp(&format!("p{index}a"), Sign::Pos, *n),
                dp(&format!("p{index}b"), Sign::Neg, *n),
            ]
        })
        .collect();
    let dp_minus = vec![
        dp("q1", Sign::Pos, 2),
        dp("q2", Sign::Neg, 1),
        dp("q3", Sign::Neg, 1),
        dp("q4", Sign::Neg, 1),
        dp("q5", Sign::Neg, 1),
    ];
    let pairs = (1..=5)
        .map(|i| pair(&format!("P{i}"), &format!("p{i}a"), &format!("p{i}b")))
        .collect();
    let disks = vec![
        disk("W1", "P1", 0, &[(Sign::Pos, 0)]),
        disk(
            "W2",
            "P2",
            1,
            &[
                (Sign::Pos, 0),
                (Sign::Neg, 0),
                (Sign::Pos, 1),
                (Sign::Neg, 1),
                (Sign::Pos, 2),
            ],
        ),
        disk("W3", "P3", 1, &[(Sign::Pos, 0), (Sign::Neg, 0)]),
        disk("W4", "P4", 1, &[(Sign::Pos, 0)]),
        disk("W5", "P5", 1, &[(Sign::Pos, 1)]),
    ];
    let single = [(Sign::Pos, 0), (Sign::Pos, 1)];
    let double = [
        (Sign::Pos, 0),
        (Sign::Pos, 1),
        (Sign::Pos, 0),
        (Sign::Pos, 1),
    ];
    let spheres = vec![
        sphere("A1", &single),
        sphere("A2", &single),
        sphere("A3", &single),
        sphere("A4", &single),
        sphere("A5", &double),
    ];

    LinkMapDocument {
        name: "kirk".to_string(),
        dp_plus,
        dp_minus,
        pairs,
        disks,
        spheres,
        handles: 5,
    }
}

// ---- Random documents ----

fn random_sign(rng: &mut impl rand::Rng) -> Sign {
    if rng.random_bool(0.5) {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

/// Draws a structurally valid random document: every pair references
/// declared double points, every disk references a declared pair, and no
/// id is reused.  Intended for round-trip checks of the format.
pub fn random_document(rng: &mut impl rand::Rng, name: &str) -> LinkMapDocument {
    let mut dp_plus = Vec::new();
    for i in 0..rng.random_range(0..5) {
        dp_plus.push(DoublePointRecord {
            id: format!("a{i}"),
            point: DoublePoint {
                sign: random_sign(rng),
                n: rng.random_range(-6..=6),
            },
        });
    }
    let mut dp_minus = Vec::new();
    for i in 0..rng.random_range(0..5) {
        dp_minus.push(DoublePointRecord {
            id: format!("b{i}"),
            point: DoublePoint {
                sign: random_sign(rng),
                n: rng.random_range(-6..=6),
            },
        });
    }

    // Pairs draw distinct declared double points, each used at most once.
    let mut available: Vec<String> = dp_plus
        .iter()
        .chain(&dp_minus)
        .map(|r| r.id.clone())
        .collect();
    let mut pairs = Vec::new();
    while available.len() >= 2 && rng.random_bool(0.7) {
        let first = available.remove(rng.random_range(0..available.len()));
        let second = available.remove(rng.random_range(0..available.len()));
        pairs.push(LinkedPair {
            id: format!("P{}", pairs.len()),
            first,
            second,
        });
    }

    let mut disks = Vec::new();
    for (i, pair) in pairs.iter().enumerate() {
        if !rng.random_bool(0.8) {
            continue;
        }
        let mut intersections = Vec::new();
        for _ in 0..rng.random_range(0..4) {
            intersections.push(DiskIntersection {
                sign: random_sign(rng),
                m: rng.random_range(-5..=5),
            });
        }
        disks.push(DiskRecord {
            pair: pair.id.clone(),
            framed: rng.random_bool(0.8),
            data: WhitneyDiskData {
                id: format!("W{i}"),
                primary: rng.random_range(-4..=4),
                intersections,
            },
        });
    }

    let mut spheres = Vec::new();
    for i in 0..rng.random_range(0..4) {
        let id = format!("S{i}");
        let mut points = Vec::new();
        for _ in 0..rng.random_range(0..4) {
            points.push(WallIntersection {
                sign: random_sign(rng),
                exp: rng.random_range(-5..=5),
            });
        }
        spheres.push(SphereClass {
            id: id.clone(),
            pairing: PairingData {
                disc_id: id,
                points,
                eps: random_sign(rng),
            },
            w2: rng.random_bool(0.3),
        });
    }

    LinkMapDocument {
        name: name.to_string(),
        dp_plus,
        dp_minus,
        pairs,
        disks,
        spheres,
        handles: rng.random_range(0..7),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_dataset_invariants() {
        let doc = kirk_example();
        assert_eq!(doc.sigma_pair().to_string(), "(0, t^2 + -4*t + 3)");
        assert_eq!(
            doc.tau_representative().unwrap().to_string(),
            "s*t^2 + s*t + s + 1"
        );
        assert_eq!(doc.phi_tau().unwrap(), C2Algebra::ONE_PLUS_T);
        assert!(doc.omega_plus().unwrap());
        assert_eq!(doc.handles, 5);
        assert!(doc.all_framed());
    }

    #[test]
    fn bundled_dataset_per_disk_reductions() {
        let doc = kirk_example();
        let reductions: Vec<C2Algebra> = doc
            .whitney_disks()
            .map(|disk| phi(&intersection_sum(disk)))
            .collect();
        assert_eq!(
            reductions,
            vec![
                C2Algebra::ONE,
                C2Algebra::T,
                C2Algebra::ZERO,
                C2Algebra::T,
                C2Algebra::T,
            ]
        );
    }

    #[test]
    fn bundled_dataset_sphere_pairings() {
        let doc = kirk_example();
        for sphere in &doc.spheres {
            assert!(wall::lambda_tilde(sphere).is_zero());
        }
        let disc_values: Vec<String> = doc
            .spheres
            .iter()
            .map(|s| wall::lambda_disc(&s.pairing).to_string())
            .collect();
        assert_eq!(
            disc_values,
            vec!["t + 1", "t + 1", "t + 1", "t + 1", "2*t + 2"]
        );
    }

    #[test]
    fn unframed_disk_blocks_tau() {
        let mut doc = kirk_example();
        doc.disks[2].framed = false;
        assert_eq!(
            doc.tau_representative().unwrap_err(),
            Error::UnframedDisk("W3".to_string())
        );
        assert!(!doc.all_framed());
        assert!(doc.omega_plus().is_err());
    }

    #[test]
    fn serialize_emits_canonical_sections() {
        let doc = kirk_example();
        let text = serialize(&doc);
        assert!(text.starts_with("linkmap kirk\ndp+ p1a sign=+1 n=0\n"));
        assert!(text.ends_with("handles 5\n"));
        assert!(text.contains("pair P1 = p1a p1b\n"));
        assert!(text.contains("disk W2 pair=P2 primary=1 framed=1\n  x sign=+1 m=0\n"));
        assert!(text.contains("sphere A5 eps=+1 w2=0\n  d sign=+1 exp=0\n"));
    }

    #[test]
    fn empty_document_serializes_to_header_only() {
        let doc = LinkMapDocument {
            name: "empty".to_string(),
            dp_plus: Vec::new(),
            dp_minus: Vec::new(),
            pairs: Vec::new(),
            disks: Vec::new(),
            spheres: Vec::new(),
            handles: 0,
        };
        assert_eq!(serialize(&doc), "linkmap empty\n");
    }
}
