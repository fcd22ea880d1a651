use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use eqposet_bench::weak_chain;
use eqposet_core::correspond::pair_components;
use eqposet_core::{build_model, knit_component, Flavor};

fn knit(c: &mut Criterion) {
    let mut group = c.benchmark_group("knit");
    for k in 1..=3 {
        let poset = weak_chain(3, k);
        for flavor in [Flavor::R, Flavor::C] {
            let model = build_model(&poset, flavor).unwrap();
            group.bench_with_input(
                BenchmarkId::new(format!("weak_chain_p3_{flavor}"), k),
                &model,
                |b, m| b.iter(|| knit_component(black_box(m), 12).unwrap()),
            );
        }
    }
    group.finish();
}

fn compare(c: &mut Criterion) {
    let poset = weak_chain(3, 3);
    let mr = build_model(&poset, Flavor::R).unwrap();
    let mc = build_model(&poset, Flavor::C).unwrap();
    let gr = knit_component(&mr, 12).unwrap();
    let gc = knit_component(&mc, 12).unwrap();
    c.bench_function("pair_weak_chain_p3_3", |b| {
        b.iter(|| pair_components(black_box(&gr), black_box(&gc), &mr, &mc))
    });
}

criterion_group!(benches, knit, compare);
criterion_main!(benches);
