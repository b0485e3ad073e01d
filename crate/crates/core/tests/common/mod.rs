//! Brute-force oracles shared by the integration tests.
//!
//! They deliberately avoid the library's fast paths: paths are enumerated
//! from raw edge sequences, common extensions are found by scanning pairs of
//! tails, and closures are computed as naive towers.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use kgraph_core::{Degree, EdgeId, KGraph, Path, VertexId};

/// Composable raw edge sequences with range `v` following `colors` (1-based).
pub fn raw_sequences(g: &KGraph, v: VertexId, colors: &[usize]) -> Vec<Vec<EdgeId>> {
    let mut out = Vec::new();
    let mut stack = vec![(v, Vec::new())];
    while let Some((at, seq)) = stack.pop() {
        if seq.len() == colors.len() {
            out.push(seq);
            continue;
        }
        let c = colors[seq.len()];
        for e in g.edges() {
            if g.range(e) == at && g.color(e) == c {
                let mut next = seq.clone();
                next.push(e);
                stack.push((g.source(e), next));
            }
        }
    }
    out
}

/// Every ordering of the color multiset of `n`.
pub fn color_orders(n: &Degree) -> Vec<Vec<usize>> {
    let mut counts: Vec<u32> = n.coords().to_vec();
    let total = n.total() as usize;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(total);
    fn rec(counts: &mut [u32], cur: &mut Vec<usize>, total: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == total {
            out.push(cur.clone());
            return;
        }
        for i in 0..counts.len() {
            if counts[i] > 0 {
                counts[i] -= 1;
                cur.push(i + 1);
                rec(counts, cur, total, out);
                cur.pop();
                counts[i] += 1;
            }
        }
    }
    rec(&mut counts, &mut cur, total, &mut out);
    out
}

/// `vΛ^n` obtained by normalising every raw sequence in every color order.
pub fn brute_paths(g: &KGraph, v: VertexId, n: &Degree) -> BTreeSet<Path> {
    if n.is_zero() {
        return BTreeSet::from([g.vertex_path(v)]);
    }
    let mut out = BTreeSet::new();
    for order in color_orders(n) {
        for seq in raw_sequences(g, v, &order) {
            out.insert(g.normal_form(&seq).expect("raw sequence is composable"));
        }
    }
    out
}

/// `vΛ^{≤bound}` (componentwise), by brute force.
pub fn brute_paths_upto(g: &KGraph, v: VertexId, bound: &Degree) -> BTreeSet<Path> {
    bound
        .box_below()
        .iter()
        .flat_map(|n| brute_paths(g, v, n))
        .collect()
}

/// `vΛ` of an acyclic graph: grow degrees until nothing new appears.
pub fn brute_all_paths(g: &KGraph, v: VertexId) -> BTreeSet<Path> {
    let mut out = BTreeSet::from([g.vertex_path(v)]);
    let mut frontier = vec![g.vertex_path(v)];
    while let Some(p) = frontier.pop() {
        for e in g.edges() {
            if g.range(e) == p.source() {
                let q = g.compose(&p, &g.edge_path(e)).expect("composable");
                if out.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
    }
    out
}

/// `Λ^min(λ, µ)` by scanning all pairs of tails of the right degrees.
pub fn brute_lambda_min(g: &KGraph, lambda: &Path, mu: &Path) -> BTreeSet<(Path, Path)> {
    let mut out = BTreeSet::new();
    if lambda.range() != mu.range() {
        return out;
    }
    let top = lambda.degree().join(mu.degree());
    let da = top.checked_sub(lambda.degree()).unwrap();
    let db = top.checked_sub(mu.degree()).unwrap();
    let alphas = brute_paths(g, lambda.source(), &da);
    let betas = brute_paths(g, mu.source(), &db);
    for a in &alphas {
        let la = g.compose(lambda, a).unwrap();
        for b in &betas {
            if la == g.compose(mu, b).unwrap() {
                out.insert((a.clone(), b.clone()));
            }
        }
    }
    out
}

/// `ν = λα` for some `α`.
pub fn brute_has_prefix(g: &KGraph, nu: &Path, lambda: &Path) -> Option<Path> {
    if nu.range() != lambda.range() {
        return None;
    }
    let rest = nu.degree().checked_sub(lambda.degree())?;
    brute_paths(g, lambda.source(), &rest)
        .into_iter()
        .find(|a| g.compose(lambda, a).unwrap() == *nu)
}

fn meets_some(g: &KGraph, set: &[Path], mu: &Path) -> bool {
    set.iter().any(|l| !brute_lambda_min(g, l, mu).is_empty())
}

/// Exhaustiveness of `set ⊆ vΛ` on an acyclic graph, by quantifying over
/// the whole of `vΛ`.
pub fn brute_exhaustive_acyclic(g: &KGraph, v: VertexId, set: &[Path]) -> bool {
    brute_all_paths(g, v)
        .iter()
        .all(|mu| meets_some(g, set, mu))
}

/// A `µ ∈ vΛ^{≤depth}` with no common extension with any member of `set`.
pub fn bounded_refutation(g: &KGraph, v: VertexId, set: &[Path], depth: &Degree) -> Option<Path> {
    brute_paths_upto(g, v, depth)
        .into_iter()
        .find(|mu| !meets_some(g, set, mu))
}

/// `ΠE` as the union of the tower `E_0 = E`, `E_{i+1} = E_i ∪ {λα, τβ}`
/// over `λ ~ µ`, `σ ~ τ` in `E_i` (same degree and source) and
/// `(α, β) ∈ Λ^min(µ, σ)`.
pub fn brute_pi(g: &KGraph, set: &[Path]) -> BTreeSet<Path> {
    let mut cur: BTreeSet<Path> = set.iter().cloned().collect();
    loop {
        let members: Vec<Path> = cur.iter().cloned().collect();
        let mut classes: BTreeMap<(Degree, VertexId), Vec<&Path>> = BTreeMap::new();
        for p in &members {
            classes
                .entry((p.degree().clone(), p.source()))
                .or_default()
                .push(p);
        }
        let mut next = cur.clone();
        for mu in &members {
            for sigma in &members {
                let pairs = brute_lambda_min(g, mu, sigma);
                if pairs.is_empty() {
                    continue;
                }
                let lams = &classes[&(mu.degree().clone(), mu.source())];
                let taus = &classes[&(sigma.degree().clone(), sigma.source())];
                for (a, b) in &pairs {
                    for l in lams {
                        next.insert(g.compose(l, a).unwrap());
                    }
                    for t in taus {
                        next.insert(g.compose(t, b).unwrap());
                    }
                }
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// `T(λ) = {ν : d(ν) > 0, λν ∈ closed}`.
pub fn brute_t_set(g: &KGraph, closed: &BTreeSet<Path>, lambda: &Path) -> Vec<Path> {
    closed
        .iter()
        .filter(|p| *p != lambda)
        .filter_map(|p| brute_has_prefix(g, p, lambda))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Sum of squared class sizes over the `(degree, source)` classes of
/// `closed` whose `T` set is not exhaustive (acyclic graphs).
pub fn brute_core_dimension(g: &KGraph, closed: &BTreeSet<Path>) -> usize {
    let mut classes: BTreeMap<(Degree, VertexId), Vec<&Path>> = BTreeMap::new();
    for p in closed {
        classes
            .entry((p.degree().clone(), p.source()))
            .or_default()
            .push(p);
    }
    classes
        .iter()
        .filter(|((_, s), members)| {
            !brute_exhaustive_acyclic(g, *s, &brute_t_set(g, closed, members[0]))
        })
        .map(|(_, members)| members.len() * members.len())
        .sum()
}

/// Nonempty subsets of `pool` with at most `max` elements.
pub fn small_subsets(pool: &[Path], max: usize) -> Vec<Vec<Path>> {
    let mut out = Vec::new();
    fn rec(pool: &[Path], start: usize, max: usize, cur: &mut Vec<Path>, out: &mut Vec<Vec<Path>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max {
            return;
        }
        for i in start..pool.len() {
            cur.push(pool[i].clone());
            rec(pool, i + 1, max, cur, out);
            cur.pop();
        }
    }
    rec(pool, 0, max, &mut Vec::new(), &mut out);
    out
}

/// A finite path is a boundary path of an acyclic graph iff every common
/// extension with it adds nothing on its side.
pub fn brute_is_maximal(g: &KGraph, x: &Path) -> bool {
    brute_all_paths(g, x.range()).iter().all(|mu| {
        brute_lambda_min(g, x, mu)
            .iter()
            .all(|(a, _)| a.is_vertex())
    })
}
