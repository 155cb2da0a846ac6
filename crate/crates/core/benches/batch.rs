use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use skeinlab::composite::z_reform;
use skeinlab::parallel::Execution;
use skeinlab::partitions::{enumerate_upto, pairs_upto, Partition, PartitionPair};
use skeinlab::skein::{framed_bracket, LinkSpec};

fn z_jobs() -> Vec<(LinkSpec, Vec<Partition>)> {
    let spec = LinkSpec::standard_torus(2, 4).unwrap();
    let labels = enumerate_upto(3);
    let mut jobs = Vec::new();
    for a in &labels {
        for b in &labels {
            jobs.push((spec.clone(), vec![a.clone(), b.clone()]));
        }
    }
    jobs
}

fn bracket_jobs() -> Vec<(LinkSpec, Vec<PartitionPair>)> {
    let spec = LinkSpec::standard_torus(2, 7).unwrap();
    pairs_upto(4).into_iter().map(|p| (spec.clone(), vec![p])).collect()
}

fn batch(c: &mut Criterion) {
    let mut group = c.benchmark_group("reformulated_batch");
    group.sample_size(10);
    let jobs = z_jobs();
    for exec in [Execution::Sequential, Execution::Parallel] {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &jobs, |b, jobs| {
            b.iter(|| exec.map(jobs, |(s, mu)| black_box(z_reform(s, mu).unwrap())))
        });
    }
    group.finish();

    let mut group = c.benchmark_group("bracket_batch");
    group.sample_size(10);
    let jobs = bracket_jobs();
    for exec in [Execution::Sequential, Execution::Parallel] {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &jobs, |b, jobs| {
            b.iter(|| exec.map(jobs, |(s, p)| black_box(framed_bracket(s, p).unwrap())))
        });
    }
    group.finish();
}

criterion_group!(benches, batch);
criterion_main!(benches);
