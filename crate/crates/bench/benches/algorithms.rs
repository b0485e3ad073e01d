use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kgraph_bench::{edge_paths, interleaved_word, loops, omega_square};
use kgraph_core::{boundary_representation, check_ck_family, CheckOptions, Degree};
use std::hint::black_box;

fn normal_form(c: &mut Criterion) {
    let g = loops(2, 1);
    let mut group = c.benchmark_group("normal_form");
    for n in [4, 16, 64] {
        let word = interleaved_word(&g, n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &word, |b, w| {
            b.iter(|| g.normal_form(black_box(w)).unwrap())
        });
    }
    group.finish();
}

fn lambda_min(c: &mut Criterion) {
    let g = loops(3, 2);
    let v = g.vertices().next().unwrap();
    let long = g.paths_with_range(v, &Degree::from_vec(vec![3, 0]));
    let other = g.paths_with_range(v, &Degree::from_vec(vec![0, 3]));
    c.bench_function("lambda_min (3,0) vs (0,3)", |b| {
        b.iter(|| {
            long.iter()
                .take(4)
                .zip(other.iter().take(4))
                .map(|(l, m)| g.lambda_min(l, m).len())
                .sum::<usize>()
        })
    });
}

fn is_exhaustive(c: &mut Criterion) {
    let mut group = c.benchmark_group("is_exhaustive");
    for m in [2, 3] {
        let g = loops(m, 3);
        let v = g.vertices().next().unwrap();
        let edges = edge_paths(&g);
        let set: Vec<_> = edges.iter().take(m).cloned().collect();
        group.bench_with_input(BenchmarkId::new("loops", m), &set, |b, s| {
            b.iter(|| g.is_exhaustive(v, black_box(s)).unwrap().verdict)
        });
    }
    group.finish();
}

fn pi_closure(c: &mut Criterion) {
    let g = omega_square(3);
    let v = g.vertex("0_0").unwrap();
    let set = g.paths_with_range_upto(v, &Degree::from_vec(vec![2, 2]));
    let set: Vec<_> = set.into_iter().filter(|p| p.len() == 2).collect();
    c.bench_function("pi_closure Ω(3,3)", |b| {
        b.iter(|| g.pi_closure(black_box(&set)).unwrap().closed.len())
    });
}

fn boundary_check(c: &mut Criterion) {
    let mut group = c.benchmark_group("boundary_rep_and_check");
    group.sample_size(10);
    for n in [1, 2] {
        let g = omega_square(n);
        let opts = CheckOptions::for_graph(&g).unwrap();
        group.bench_function(BenchmarkId::from_parameter(n), |b| {
            b.iter(|| {
                let fam = boundary_representation(&g).unwrap();
                check_ck_family(&g, &fam, &opts).unwrap().passed
            })
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    normal_form,
    lambda_min,
    is_exhaustive,
    pi_closure,
    boundary_check
);
criterion_main!(benches);
