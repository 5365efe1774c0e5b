//! Input builders shared by the benches.
//!
//! The bundled example document is small; the builder here scales the
//! same shape up so parser and serializer throughput is measured on a
//! document with hundreds of statements.

use linktau::wall::PairingData;
use linktau::{
    DiskIntersection, DiskRecord, DoublePoint, DoublePointRecord, LinkMapDocument, LinkedPair,
    Sign, SphereClass, WallIntersection, WhitneyDiskData,
};

fn sign_for(index: usize) -> Sign {
    if index.is_multiple_of(2) {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

/// A well-formed document with `pairs` linked pairs, one framed disk per
/// pair and a sphere for every other pair.  Exponents cycle through small
/// values so the derived invariants stay cheap to evaluate exactly.
pub fn scaled_document(pairs: usize) -> LinkMapDocument {
    let mut doc = LinkMapDocument {
        name: format!("scaled{pairs}"),
        dp_plus: Vec::new(),
        dp_minus: Vec::new(),
        pairs: Vec::new(),
        disks: Vec::new(),
        spheres: Vec::new(),
        handles: pairs,
    };
    for i in 0..pairs {
        let n = (i % 4) as i64;
        doc.dp_plus.push(DoublePointRecord {
            id: format!("a{i}"),
            point: DoublePoint { sign: Sign::Pos, n },
        });
        doc.dp_plus.push(DoublePointRecord {
            id: format!("b{i}"),
            point: DoublePoint { sign: Sign::Neg, n },
        });
        doc.dp_minus.push(DoublePointRecord {
            id: format!("c{i}"),
            point: DoublePoint {
                sign: sign_for(i),
                n: (i % 3) as i64 + 1,
            },
        });
        doc.pairs.push(LinkedPair {
            id: format!("P{i}"),
            first: format!("a{i}"),
            second: format!("b{i}"),
        });
        doc.disks.push(DiskRecord {
            pair: format!("P{i}"),
            framed: true,
            data: WhitneyDiskData {
                id: format!("W{i}"),
                primary: (i % 5) as i64 - 2,
                intersections: (0..4)
                    .map(|j| DiskIntersection {
                        sign: sign_for(i + j),
                        m: (j % 3) as i64 - 1,
                    })
                    .collect(),
            },
        });
        if i.is_multiple_of(2) {
            doc.spheres.push(SphereClass {
                id: format!("S{i}"),
                pairing: PairingData {
                    disc_id: format!("S{i}"),
                    points: (0..3)
                        .map(|j| WallIntersection {
                            sign: sign_for(j),
                            exp: (j % 2) as i64,
                        })
                        .collect(),
                    eps: sign_for(i / 2),
                },
                w2: i.is_multiple_of(4),
            });
        }
    }
    doc
}
