use criterion::{black_box, criterion_group, criterion_main, Criterion};
use zdg_core::constructions;
use zdg_core::enumerate::{enumerate_semirings, EnumFilter};
use zdg_core::harness::{self, TheoremId};
use zdg_core::shapes::classify;
use zdg_core::{direct_product, find_isomorphism, galois_field, modular_ring, t2, validate};

fn bench_validate(c: &mut Criterion) {
    let z60 = modular_ring(60);
    let tables = z60.tables();
    c.bench_function("validate_z60", |b| {
        b.iter(|| validate(black_box(&tables)).unwrap().passed)
    });
}

fn bench_closure(c: &mut Criterion) {
    c.bench_function("closure_ex34_n5", |b| {
        b.iter(|| {
            constructions::ex34_complete(black_box(5))
                .unwrap()
                .algebra
                .order()
        })
    });
    c.bench_function("closure_ex36_n3_m3", |b| {
        b.iter(|| {
            constructions::ex36_two_star(black_box(3), black_box(3))
                .unwrap()
                .algebra
                .order()
        })
    });
}

fn bench_census(c: &mut Criterion) {
    c.bench_function("census_order_4", |b| {
        b.iter(|| {
            enumerate_semirings(&EnumFilter {
                max_order: 4,
                ..EnumFilter::default()
            })
            .count()
        })
    });
}

fn bench_classify(c: &mut Criterion) {
    let p = direct_product(&modular_ring(4), &modular_ring(4));
    let g = zdg_core::graph(&p);
    c.bench_function("classify_k33_delta", |b| {
        b.iter(|| classify(black_box(&g)).unwrap().tag)
    });
}

fn bench_iso(c: &mut Criterion) {
    let a = t2(&galois_field(4));
    let z16 = modular_ring(16);
    c.bench_function("iso_t2gf4_vs_z16", |b| {
        b.iter(|| {
            find_isomorphism(black_box(&a), black_box(&z16))
                .unwrap()
                .is_none()
        })
    });
    let p = direct_product(&modular_ring(4), &t2(&modular_ring(2)));
    let q = direct_product(&t2(&modular_ring(2)), &modular_ring(4));
    c.bench_function("iso_product_commute", |b| {
        b.iter(|| {
            find_isomorphism(black_box(&p), black_box(&q))
                .unwrap()
                .is_some()
        })
    });
}

fn bench_suite(c: &mut Criterion) {
    c.bench_function("harness_rings", |b| {
        b.iter(|| {
            harness::run_suite(harness::rings_corpus(), &TheoremId::ALL)
                .summary
                .pass
        })
    });
}

criterion_group!(
    benches,
    bench_validate,
    bench_closure,
    bench_census,
    bench_classify,
    bench_iso,
    bench_suite
);
criterion_main!(benches);
