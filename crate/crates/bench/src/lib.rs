//! Workloads shared by the benchmarks.

use kgraph_core::random::{self, random_single_vertex};
use kgraph_core::{omega, Degree, KGraph, Path};

/// `Ω_{2,(n,n)}`: acyclic, with `(n+1)^2` vertices.
pub fn omega_square(n: u32) -> KGraph {
    KGraph::new(omega(&Degree::from_vec(vec![n, n]))).expect("Ω is a valid 2-graph")
}

/// A single-vertex 2-graph with `m` loops of each color and seeded squares.
pub fn loops(m: usize, seed: u64) -> KGraph {
    let mut r = random::rng(seed);
    KGraph::new(random_single_vertex(&mut r, m, m)).expect("generated skeletons are valid")
}

/// A raw edge sequence of degree `(n, n)` at the single vertex of `g`,
/// with the colors interleaved so that normalising it needs many swaps.
pub fn interleaved_word(g: &KGraph, n: usize) -> Vec<kgraph_core::EdgeId> {
    let v = g.vertices().next().expect("nonempty graph");
    let e = g.edges_with_range(v, 1)[0];
    let f = g.edges_with_range(v, 2)[0];
    (0..n).flat_map(|_| [f, e]).collect()
}

/// All edges at the single vertex of `g`, as paths.
pub fn edge_paths(g: &KGraph) -> Vec<Path> {
    g.edges().map(|e| g.edge_path(e)).collect()
}
