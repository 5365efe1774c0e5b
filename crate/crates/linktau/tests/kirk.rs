//! End-to-end checks of the bundled example dataset: the golden file is
//! byte-identical to the canonical serialization, and every published
//! value of the example comes out of the document pipeline.

use linktau::homology::{build_universal_cover_complex, h2_rank, integral_h2_rank};
use linktau::lmap::parse;
use linktau::wall::{lambda_disc, lambda_sphere, lambda_tilde};
use linktau::{kirk_example, phi, serialize, varphi, BiLaurent, C2Algebra};

const GOLDEN: &str = include_str!("../../../data/kirk.lmap");

#[test]
fn golden_file_is_byte_exact() {
    assert_eq!(serialize(&kirk_example()), GOLDEN);
}

#[test]
fn golden_file_parses_back_to_the_example() {
    let doc = parse(GOLDEN).unwrap();
    assert_eq!(doc, kirk_example());
}

#[test]
fn sigma_of_the_example() {
    let doc = kirk_example();
    let pair = doc.sigma_pair();
    assert!(pair.sigma_plus.is_zero());
    assert_eq!(pair.sigma_minus.to_string(), "t^2 + -4*t + 3");
    assert_eq!(pair.to_string(), "(0, t^2 + -4*t + 3)");
}

#[test]
fn tau_of_the_example() {
    let doc = kirk_example();
    let tau = doc.tau_representative().unwrap();
    assert_eq!(tau.to_string(), "s*t^2 + s*t + s + 1");
    assert_eq!(
        tau,
        BiLaurent::one()
            + BiLaurent::s()
            + &BiLaurent::s() * &BiLaurent::t()
            + &BiLaurent::s() * &(&BiLaurent::t() * &BiLaurent::t())
    );
}

#[test]
fn reductions_of_the_example() {
    let doc = kirk_example();
    let per_disk: Vec<C2Algebra> = doc
        .whitney_disks()
        .map(|disk| phi(&linktau::intersection_sum(disk)))
        .collect();
    assert_eq!(
        per_disk,
        vec![
            C2Algebra::ONE,
            C2Algebra::T,
            C2Algebra::ZERO,
            C2Algebra::T,
            C2Algebra::T,
        ]
    );
    assert_eq!(doc.phi_tau().unwrap(), C2Algebra::ONE_PLUS_T);
    assert!(varphi(doc.phi_tau().unwrap()));
    assert!(doc.omega_plus().unwrap());
}

#[test]
fn tau_is_not_zero_in_the_quotient() {
    let doc = kirk_example();
    let tau = doc.tau_representative().unwrap();
    let context = doc.quotient_context(10);
    let certificate = context.is_zero(&tau).unwrap();
    assert!(certificate.is_distinct(), "got {certificate}");
    assert!(certificate.verify(&tau, &BiLaurent::zero()));
    assert_eq!(certificate.to_string(), "DISTINCT via=phi lhs=1 + t rhs=0");
}

#[test]
fn wall_pairings_of_the_example() {
    let doc = kirk_example();
    let discs: Vec<String> = doc
        .spheres
        .iter()
        .map(|s| lambda_disc(&s.pairing).to_string())
        .collect();
    assert_eq!(discs, vec!["t + 1", "t + 1", "t + 1", "t + 1", "2*t + 2"]);
    for sphere in &doc.spheres {
        assert_eq!(
            lambda_sphere(sphere).to_string(),
            match sphere.id.as_str() {
                "A5" => "-2*t^2 + 2",
                _ => "-t^2 + 1",
            }
        );
        assert!(lambda_tilde(sphere).is_zero(), "{}", sphere.id);
        assert!(!sphere.w2);
    }
}

#[test]
fn homology_of_the_example_complement() {
    let doc = kirk_example();
    let complex = build_universal_cover_complex(doc.handles);
    assert_eq!(complex.n(), 5);
    assert_eq!(h2_rank(&complex).unwrap(), 5);
    assert_eq!(integral_h2_rank(doc.handles), 5);
    assert_eq!(complex.d1().to_string(), "t + -1");
    assert!(complex.d2().iter().all(|column| column.is_zero()));
}
