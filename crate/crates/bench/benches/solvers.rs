use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use qposet_bench::uniform_instances;
use qposet_core::solver::{solve_brute, solve_dp, solve_pruned, solve_q_enum};
use qposet_core::{solve, Algorithm};

fn exact_solvers(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve");
    group.sample_size(10);
    for n in [12usize, 16, 18] {
        let instances = uniform_instances(n, 1000, 8, 7);
        group.bench_with_input(BenchmarkId::new("brute", n), &instances, |b, insts| {
            b.iter(|| insts.iter().map(|i| solve_brute(black_box(i)).unwrap().abs_delta).sum::<u64>())
        });
        group.bench_with_input(BenchmarkId::new("dp", n), &instances, |b, insts| {
            b.iter(|| insts.iter().map(|i| solve_dp(black_box(i)).unwrap().abs_delta).sum::<u64>())
        });
        group.bench_with_input(BenchmarkId::new("qenum", n), &instances, |b, insts| {
            b.iter(|| insts.iter().map(|i| solve_q_enum(black_box(i)).unwrap().abs_delta).sum::<u64>())
        });
        group.bench_with_input(BenchmarkId::new("pruned", n), &instances, |b, insts| {
            b.iter(|| insts.iter().map(|i| solve_pruned(black_box(i)).unwrap().abs_delta).sum::<u64>())
        });
        group.bench_with_input(BenchmarkId::new("auto", n), &instances, |b, insts| {
            b.iter(|| {
                insts
                    .iter()
                    .map(|i| solve(black_box(i), Algorithm::Auto).unwrap().abs_delta)
                    .sum::<u64>()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, exact_solvers);
criterion_main!(benches);
