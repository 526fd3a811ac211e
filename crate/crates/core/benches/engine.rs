use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qgrass_core::coeffs::QConv;
use qgrass_core::completion::verify_main_theorem;
use qgrass_core::exec::with_threads;
use qgrass_core::minors::Grassmannian;

// threads = 1 is the sequential baseline, 0 the default pool
const POOLS: [(&str, usize); 2] = [("sequential", 1), ("parallel", 0)];

fn plucker_slice(c: &mut Criterion) {
    let mut g = c.benchmark_group("plucker_slice_5_2_deg2");
    g.sample_size(10);
    for (name, threads) in POOLS {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                with_threads(threads, || {
                    let gr = Grassmannian::new(5, 2, QConv::Standard).unwrap();
                    gr.plucker_kernel_dimension(2)
                })
            })
        });
    }
    g.finish();
}

fn main_theorem(c: &mut Criterion) {
    let mut g = c.benchmark_group("main_theorem_4_2_2_2");
    g.sample_size(10);
    for (name, threads) in POOLS {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                with_threads(threads, || {
                    verify_main_theorem(4, 2, 2, 2, QConv::Standard)
                        .unwrap()
                        .passed()
                })
            })
        });
    }
    g.finish();
}

criterion_group!(benches, plucker_slice, main_theorem);
criterion_main!(benches);
