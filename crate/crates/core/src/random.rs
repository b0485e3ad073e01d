//! Seeded generators of small valid skeletons.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fixtures::product_skeleton;
use crate::skeleton::{Skeleton, SquareRecord};

type EdgePair = [String; 2];

pub const DEFAULT_SEED: u64 = 0x6b67_7261_7068;

/// The seed in `KGRAPH_SEED`, or [`DEFAULT_SEED`].
pub fn seed_from_env() -> u64 {
    std::env::var("KGRAPH_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A 1-graph on `1..=max_vertices` vertices `v0, v1, …` with up to
/// `max_edges` edges `x0, x1, …`. When `acyclic`, every edge points from a
/// higher to a lower vertex index.
pub fn random_one_graph(
    rng: &mut impl Rng,
    max_vertices: usize,
    max_edges: usize,
    acyclic: bool,
) -> Skeleton {
    let n = rng.random_range(1..=max_vertices.max(1));
    let mut sk = Skeleton::new(1);
    for i in 0..n {
        sk = sk.vertex(format!("v{i}"));
    }
    if acyclic && n < 2 {
        return sk;
    }
    let m = rng.random_range(0..=max_edges);
    for j in 0..m {
        let (r, s) = if acyclic {
            let s = rng.random_range(1..n);
            (rng.random_range(0..s), s)
        } else {
            (rng.random_range(0..n), rng.random_range(0..n))
        };
        sk = sk.edge(format!("x{j}"), 1, format!("v{r}"), format!("v{s}"));
    }
    sk
}

/// Re-pairs the squares of a 2-graph by a random bijection within each
/// class of paths sharing range and source. Any such pairing is again a
/// 2-graph, since the associativity condition only involves three colors.
pub fn twist_squares(rng: &mut impl Rng, sk: &Skeleton) -> Skeleton {
    assert_eq!(sk.k, 2, "twisting needs a 2-graph");
    let ends: BTreeMap<&str, (&str, &str)> = sk
        .edges
        .iter()
        .map(|e| (e.id.as_str(), (e.range.as_str(), e.source.as_str())))
        .collect();
    let mut classes: BTreeMap<(String, String), (Vec<EdgePair>, Vec<EdgePair>)> = BTreeMap::new();
    for sq in &sk.squares {
        let key = (
            ends[sq.path_a[0].as_str()].0.to_string(),
            ends[sq.path_a[1].as_str()].1.to_string(),
        );
        let class = classes.entry(key).or_default();
        class.0.push(sq.path_a.clone());
        class.1.push(sq.path_b.clone());
    }
    let mut out = sk.clone();
    out.squares.clear();
    for (_, (lefts, mut rights)) in classes {
        rights.shuffle(rng);
        for (path_a, path_b) in lefts.into_iter().zip(rights) {
            out.squares.push(SquareRecord { path_a, path_b });
        }
    }
    out
}

/// The product of two random 1-graphs with its squares randomly re-paired.
pub fn random_twisted_product(
    rng: &mut impl Rng,
    max_vertices: usize,
    max_edges: usize,
    acyclic: bool,
) -> Skeleton {
    let a = random_one_graph(rng, max_vertices, max_edges, acyclic);
    let b = random_one_graph(rng, max_vertices, max_edges, acyclic);
    let prod = product_skeleton(&a, &b).expect("random 1-graphs are valid");
    twist_squares(rng, &prod)
}

/// A 2-graph with one vertex `v`, `m` loops `e0…` of color 1, `n` loops
/// `f0…` of color 2, and squares given by a random bijection
/// `[m] × [n] → [n] × [m]`.
pub fn random_single_vertex(rng: &mut impl Rng, m: usize, n: usize) -> Skeleton {
    let mut sk = Skeleton::new(2).vertex("v");
    for i in 0..m {
        sk = sk.edge(format!("e{i}"), 1, "v", "v");
    }
    for j in 0..n {
        sk = sk.edge(format!("f{j}"), 2, "v", "v");
    }
    let mut rights: Vec<(usize, usize)> =
        (0..n).flat_map(|j| (0..m).map(move |i| (j, i))).collect();
    rights.shuffle(rng);
    let lefts = (0..m).flat_map(|i| (0..n).map(move |j| (i, j)));
    for ((i, j), (jj, ii)) in lefts.zip(rights) {
        sk = sk.square(
            &format!("e{i}"),
            &format!("f{j}"),
            &format!("f{jj}"),
            &format!("e{ii}"),
        );
    }
    sk
}

/// A random 3-graph: a random 1-graph times a random twisted 2-graph.
pub fn random_three_graph(
    rng: &mut impl Rng,
    max_vertices: usize,
    max_edges: usize,
    acyclic: bool,
) -> Skeleton {
    let a = random_one_graph(rng, max_vertices, max_edges, acyclic);
    let b = random_twisted_product(rng, max_vertices, max_edges, acyclic);
    product_skeleton(&a, &b).expect("factors are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::KGraph;
    use crate::skeleton::validate_skeleton;

    #[test]
    fn generated_skeletons_validate() {
        let mut r = rng(7);
        for _ in 0..40 {
            for (sk, acyclic) in [
                (random_one_graph(&mut r, 5, 6, true), true),
                (random_one_graph(&mut r, 4, 6, false), false),
                (random_twisted_product(&mut r, 3, 4, true), true),
                (random_twisted_product(&mut r, 3, 3, false), false),
                (random_single_vertex(&mut r, 2, 3), false),
                (random_three_graph(&mut r, 2, 2, true), true),
            ] {
                let report = validate_skeleton(&sk);
                assert!(report.ok, "{report}");
                if acyclic {
                    assert!(KGraph::new(sk).unwrap().is_acyclic());
                }
            }
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        let a = random_twisted_product(&mut rng(3), 3, 4, true);
        let b = random_twisted_product(&mut rng(3), 3, 4, true);
        assert_eq!(a, b);
    }
}
