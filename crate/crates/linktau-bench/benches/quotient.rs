use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use linktau::{kirk_example, BiLaurent, QuotientContext};

/// A nonzero combination of relator instances, so the zero test has to
/// find a genuine lattice membership rather than hit a fast path.
fn relator_combination() -> BiLaurent {
    let relators = QuotientContext::new(2).enumerate_relators();
    let pick = |index: usize, mult: i64| &relators[index] * &BiLaurent::monomial(mult, 0, 0);
    let member = &(&pick(0, 1) + &pick(relators.len() / 3, 2)) + &pick(2 * relators.len() / 3, -3);
    assert!(!member.is_zero());
    member
}

fn bench_quotient(c: &mut Criterion) {
    let tau = kirk_example().tau_representative().unwrap();
    let mut group = c.benchmark_group("is-zero-tau");
    for window in [4i64, 6, 8, 10] {
        let context = QuotientContext::new(window);
        assert!(!context.is_zero(&tau).unwrap().is_equal());
        group.bench_with_input(
            BenchmarkId::from_parameter(window),
            &context,
            |b, context| b.iter(|| context.is_zero(black_box(&tau)).unwrap()),
        );
    }
    group.finish();

    let member = relator_combination();
    let mut group = c.benchmark_group("lattice-membership");
    for window in [4i64, 6, 8] {
        let context = QuotientContext::new(window);
        assert!(context.is_zero(&member).unwrap().is_equal());
        group.bench_with_input(
            BenchmarkId::from_parameter(window),
            &context,
            |b, context| b.iter(|| context.is_zero(black_box(&member)).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, bench_quotient);
criterion_main!(benches);
