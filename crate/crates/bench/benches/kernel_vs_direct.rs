//! Preprocessing payoff: direct solving versus kernelize-then-solve on
//! twin-heavy and twin-free instances.

use copwin_bench::{twin_free, twin_heavy};
use copwin_core::game::{solve, VariantSpec};
use copwin_core::kernel::kernelize_vcn;
use copwin_core::params::{vertex_cover, VcMode};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn bench_twin_heavy(c: &mut Criterion) {
    let g = twin_heavy(5, 18, 7);
    let spec = VariantSpec::classic(2);
    let cover = vertex_cover(&g, VcMode::Exact).unwrap();
    let mut group = c.benchmark_group("twin_heavy_c5_plus_18");
    group.sample_size(20);
    group.bench_function("direct", |b| {
        b.iter(|| black_box(solve(&g, &spec).unwrap().verdict))
    });
    group.bench_function("kernel_then_solve", |b| {
        b.iter(|| {
            let kr = kernelize_vcn(&g, 2, &cover).unwrap();
            match kr.verdict {
                Some(v) => black_box(v),
                None => black_box(solve(&kr.reduced, &spec).unwrap().verdict),
            }
        })
    });
    group.finish();
}

fn bench_twin_free(c: &mut Criterion) {
    let g = twin_free(16);
    let spec = VariantSpec::classic(2);
    let cover = vertex_cover(&g, VcMode::Exact).unwrap();
    let mut group = c.benchmark_group("twin_free_c16");
    group.sample_size(20);
    group.bench_function("direct", |b| {
        b.iter(|| black_box(solve(&g, &spec).unwrap().verdict))
    });
    group.bench_function("kernel_then_solve", |b| {
        b.iter(|| {
            let kr = kernelize_vcn(&g, 2, &cover).unwrap();
            match kr.verdict {
                Some(v) => black_box(v),
                None => black_box(solve(&kr.reduced, &spec).unwrap().verdict),
            }
        })
    });
    group.finish();
}

criterion_group!(benches, bench_twin_heavy, bench_twin_free);
criterion_main!(benches);
