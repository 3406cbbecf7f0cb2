use criterion::{criterion_group, criterion_main, Criterion};
use jordan_limits::chains::run_suite;
use jordan_limits::roots::TypeTag;

const CONFIGS: [(TypeTag, usize); 6] =
    [(TypeTag::A, 6), (TypeTag::B, 5), (TypeTag::C, 5), (TypeTag::D, 6), (TypeTag::F4, 4), (TypeTag::E6, 6)];

fn suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    group.bench_function("sequential", |b| b.iter(|| run_suite(&CONFIGS, false, false).unwrap()));
    group.bench_function("parallel", |b| b.iter(|| run_suite(&CONFIGS, true, false).unwrap()));
    group.finish();
}

criterion_group!(benches, suite);
criterion_main!(benches);
