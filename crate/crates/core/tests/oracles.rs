//! Library results against the brute-force oracles on the named fixtures.

mod common;

use std::collections::BTreeSet;

use common::*;
use kgraph_core::{fixture_graph, Degree, KGraph, Path};

const ACYCLIC: [&str; 6] = [
    "G_LAMBDA1",
    "G_SQUARE",
    "G_NONORTH",
    "OMEGA(1,3)",
    "OMEGA(2,(1,1))",
    "OMEGA(3,(1,1,1))",
];

fn graphs() -> Vec<KGraph> {
    ACYCLIC
        .iter()
        .chain(["G_LOOP2"].iter())
        .map(|n| fixture_graph(n).unwrap())
        .collect()
}

fn pool(g: &KGraph, v: kgraph_core::VertexId) -> Vec<Path> {
    if g.is_acyclic() {
        g.all_paths_with_range(v).unwrap()
    } else {
        g.paths_with_range_upto(v, &Degree::from_vec(vec![1; g.rank()]))
    }
}

#[test]
fn path_enumeration_matches_raw_sequences() {
    for g in graphs() {
        let bound = Degree::from_vec(vec![2; g.rank()]);
        for v in g.vertices() {
            for n in bound.box_below() {
                let lib: BTreeSet<Path> = g.paths_with_range(v, &n).into_iter().collect();
                assert_eq!(lib, brute_paths(&g, v, &n), "{} at {}", n, g.vertex_name(v));
                // Unique factorisation: each color order is realised exactly once per path.
                for order in color_orders(&n) {
                    assert_eq!(raw_sequences(&g, v, &order).len(), lib.len());
                }
            }
        }
    }
}

#[test]
fn full_path_sets_match_on_acyclic_fixtures() {
    for name in ACYCLIC {
        let g = fixture_graph(name).unwrap();
        for v in g.vertices() {
            let lib: BTreeSet<Path> = g.all_paths_with_range(v).unwrap().into_iter().collect();
            assert_eq!(lib, brute_all_paths(&g, v), "{name}");
        }
    }
}

#[test]
fn lambda_min_matches_tail_scan() {
    for g in graphs() {
        for v in g.vertices() {
            let ps = pool(&g, v);
            for l in &ps {
                for m in &ps {
                    let lib: BTreeSet<(Path, Path)> = g
                        .lambda_min(l, m)
                        .into_iter()
                        .map(|p| (p.alpha, p.beta))
                        .collect();
                    assert_eq!(
                        lib,
                        brute_lambda_min(&g, l, m),
                        "{} {}",
                        g.show(l),
                        g.show(m)
                    );
                }
            }
        }
    }
}

#[test]
fn exhaustiveness_matches_full_quantification() {
    for name in ACYCLIC {
        let g = fixture_graph(name).unwrap();
        for v in g.vertices() {
            for set in small_subsets(&pool(&g, v), 2) {
                let lib = g.is_exhaustive(v, &set).unwrap().verdict;
                assert_eq!(
                    lib,
                    brute_exhaustive_acyclic(&g, v, &set),
                    "{name} {:?}",
                    g.show_set(&set)
                );
            }
        }
    }
}

#[test]
fn pi_closure_matches_tower() {
    for g in graphs() {
        for v in g.vertices() {
            for set in small_subsets(&pool(&g, v), 3) {
                let pc = g.pi_closure(&set).unwrap();
                let lib: BTreeSet<Path> = pc.closed.iter().cloned().collect();
                assert_eq!(lib, brute_pi(&g, &set), "{:?}", g.show_set(&set));
                for p in &pc.closed {
                    assert_eq!(g.t_set_of(&pc, p), brute_t_set(&g, &lib, p));
                    assert!(p.degree().le(&pc.degree_bound));
                }
            }
        }
    }
}

#[test]
fn documented_closures_and_t_sets() {
    let g = fixture_graph("G_SQUARE").unwrap();
    let pc = g.pi_closure(&g.parse_path_set("e,g").unwrap()).unwrap();
    assert_eq!(g.show_set(&pc.closed), ["e", "e.f", "g"]);
    let a = g.vertex("a").unwrap();
    let w = g.vertex("w").unwrap();
    let t = g
        .t_extension_set(&pc, &Degree::from_vec(vec![1, 0]), a)
        .unwrap();
    assert_eq!(g.show_set(&t), ["f"]);
    assert!(g
        .t_extension_set(&pc, &Degree::from_vec(vec![1, 1]), w)
        .unwrap()
        .is_empty());

    let g = fixture_graph("G_LAMBDA1").unwrap();
    let pc = g.pi_closure(&g.parse_path_set("λ1,µ1").unwrap()).unwrap();
    assert_eq!(pc.closed.len(), 2);
    let u = g.vertex("u").unwrap();
    assert!(g
        .t_extension_set(&pc, &Degree::from_vec(vec![1, 0]), u)
        .unwrap()
        .is_empty());
}

#[test]
fn boundary_paths_are_the_maximal_paths() {
    for name in ACYCLIC {
        let g = fixture_graph(name).unwrap();
        let lib: BTreeSet<Path> = g
            .boundary_paths()
            .unwrap()
            .into_iter()
            .map(|b| b.path)
            .collect();
        let brute: BTreeSet<Path> = g
            .vertices()
            .flat_map(|v| brute_all_paths(&g, v))
            .filter(|x| brute_is_maximal(&g, x))
            .collect();
        assert_eq!(lib, brute, "{name}");
    }
}
