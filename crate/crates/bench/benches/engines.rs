use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use matchspectrum::matching::count_with;
use matchspectrum::{CountMethod, CountOptions, Engine};
use matchspectrum_bench::{sparse, SIZES};

fn engines(c: &mut Criterion) {
    let mut group = c.benchmark_group("count");
    group.sample_size(10);
    let opts = CountOptions::default();
    for &n in SIZES {
        let g = sparse(n, 3.0, 1);
        for method in [
            CountMethod::Pipeline(Engine::HalfEnum),
            CountMethod::Pipeline(Engine::Split),
            CountMethod::Ryser,
        ] {
            group.bench_with_input(BenchmarkId::new(method.to_string(), n), &g, |b, g| {
                b.iter(|| count_with(g, method, &opts).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, engines);
criterion_main!(benches);
