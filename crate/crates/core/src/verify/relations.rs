use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{
    check_bound, vertices_nonzero, CheckOptions, CheckReport, Ops, Tally, MAX_SUBSET_EDGES,
};
use crate::error::{Error, Result};
use crate::family::{GeneratorFamily, OperatorFamily};
use crate::graph::{KGraph, VertexId};
use crate::matrix::SparseMatrix;
use crate::path::Path;

/// Rejected alternatives to the exhaustive-set relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variant {
    /// `t_v = Σ_{λ∈vΛ^{≤n}} t_λ t*_λ` for every `n`.
    A1,
    /// `t_v = Σ_{λ∈E} t_λ t*_λ` for finite exhaustive `E ⊂ vΛ \ {v}`.
    A2,
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A1" => Ok(Variant::A1),
            "A2" => Ok(Variant::A2),
            other => Err(Error::Precondition(format!(
                "unknown variant {other}, expected A1 or A2"
            ))),
        }
    }
}

/// Every nonempty exhaustive set of edges with range `v`, in subset order.
pub fn exhaustive_edge_sets(g: &KGraph, v: VertexId) -> Result<Vec<Vec<Path>>> {
    let edges: Vec<Path> = g.all_edges_with_range(v).map(|e| g.edge_path(e)).collect();
    if edges.len() > MAX_SUBSET_EDGES {
        return Err(Error::TooManySubsets {
            vertex: g.vertex_name(v).to_string(),
            edges: edges.len(),
        });
    }
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << edges.len()) {
        let subset: Vec<Path> = edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, p)| p.clone())
            .collect();
        if g.is_exhaustive(v, &subset)?.verdict {
            out.push(subset);
        }
    }
    Ok(out)
}

/// Edge-level exhaustive sets plus the exhaustive user-supplied sets, per vertex.
fn tested_sets(g: &KGraph, opts: &CheckOptions) -> Result<Vec<(VertexId, Vec<Path>)>> {
    let mut out = Vec::new();
    for v in g.vertices() {
        for set in exhaustive_edge_sets(g, v)? {
            out.push((v, set));
        }
    }
    for (v, set) in &opts.extra_sets {
        if g.is_exhaustive(*v, set)?.verdict {
            out.push((*v, set.clone()));
        }
    }
    Ok(out)
}

fn relation_i(ops: &Ops, cap: usize) -> Result<super::RelationVerdict> {
    let g = ops.g;
    let mut tally = Tally::new("i", cap);
    let vs: Vec<VertexId> = g.vertices().collect();
    for &v in &vs {
        let tv = ops.tv(v)?;
        tally.equal(&tv.mul(tv), tv, || {
            vec![g.vertex_name(v).into(), "idempotent".into()]
        });
        tally.equal(&tv.transpose(), tv, || {
            vec![g.vertex_name(v).into(), "self-adjoint".into()]
        });
        for &w in &vs {
            if w != v {
                let prod = tv.mul(ops.tv(w)?);
                tally.equal(&prod, &ops.zero(), || {
                    vec![g.vertex_name(v).into(), g.vertex_name(w).into()]
                });
            }
        }
    }
    Ok(tally.finish())
}

fn relation_ii(
    ops: &Ops,
    paths: &[Path],
    bound: &crate::Degree,
    cap: usize,
) -> Result<super::RelationVerdict> {
    let g = ops.g;
    let mut by_range: BTreeMap<VertexId, Vec<&Path>> = BTreeMap::new();
    for p in paths {
        by_range.entry(p.range()).or_default().push(p);
    }
    let mut tally = Tally::new("ii", cap);
    for l in paths {
        for &m in by_range.get(&l.source()).map(Vec::as_slice).unwrap_or(&[]) {
            if !l.degree().add(m.degree()).le(bound) {
                continue;
            }
            let lm = g.compose(l, m)?;
            tally.equal(&ops.t(l)?.mul(ops.t(m)?), ops.t(&lm)?, || {
                vec![ops.show(l), ops.show(m)]
            });
        }
    }
    Ok(tally.finish())
}

/// `t*_λ t_µ = Σ_{(α,β)∈Λ^min(λ,µ)} t_α t*_β` over all pairs in `paths`.
fn relation_iii(ops: &Ops, paths: &[Path], cap: usize) -> Result<super::RelationVerdict> {
    let g = ops.g;
    let mut tally = Tally::new("iii", cap);
    for l in paths {
        let lt = ops.t(l)?.transpose();
        for m in paths {
            let lhs = lt.mul(ops.t(m)?);
            let mut rhs = ops.zero();
            if l.range() == m.range() {
                for pair in g.lambda_min(l, m) {
                    rhs = rhs.add(&ops.t(&pair.alpha)?.mul(&ops.t(&pair.beta)?.transpose()));
                }
            }
            tally.equal(&lhs, &rhs, || vec![ops.show(l), ops.show(m)]);
        }
    }
    Ok(tally.finish())
}

fn relation_iv(
    ops: &mut Ops,
    sets: &[(VertexId, Vec<Path>)],
    cap: usize,
) -> Result<super::RelationVerdict> {
    let mut tally = Tally::new("iv", cap);
    for (v, set) in sets {
        let prod = ops.gap_product(*v, set)?;
        let zero = ops.zero();
        tally.equal(&prod, &zero, || {
            vec![ops.g.vertex_name(*v).into(), ops.show_set(set)]
        });
    }
    Ok(tally.finish())
}

fn relation_a1(ops: &mut Ops, opts: &CheckOptions) -> Result<super::RelationVerdict> {
    let g = ops.g;
    let mut tally = Tally::new("A1", opts.max_counterexamples);
    for v in g.vertices() {
        let tv = ops.tv(v)?.clone();
        for n in opts.bound.box_below() {
            let mut sum = ops.zero();
            for l in g.paths_leq(v, &n) {
                sum = sum.add(&ops.p(&l)?);
            }
            tally.equal_ranked(&tv, &sum, || {
                vec![g.vertex_name(v).into(), format!("n={n}")]
            });
        }
    }
    Ok(tally.finish())
}

fn relation_a2(
    ops: &mut Ops,
    sets: &[(VertexId, Vec<Path>)],
    cap: usize,
) -> Result<super::RelationVerdict> {
    let mut tally = Tally::new("A2", cap);
    for (v, set) in sets {
        if set.iter().any(Path::is_vertex) {
            continue;
        }
        let tv = ops.tv(*v)?.clone();
        let mut sum = ops.zero();
        for l in set {
            sum = sum.add(&ops.p(l)?);
        }
        tally.equal_ranked(&tv, &sum, || {
            vec![ops.g.vertex_name(*v).into(), ops.show_set(set)]
        });
    }
    Ok(tally.finish())
}

/// Relations (i)–(iv) of a Cuntz-Krieger family, on all paths of degree
/// `<= opts.bound`; (iv) over every exhaustive set of edges at each vertex
/// and over `opts.extra_sets`.
pub fn check_ck_family(
    g: &KGraph,
    fam: &OperatorFamily,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    check_bound(g, opts)?;
    let paths = g.paths_upto(&opts.bound);
    let sets = tested_sets(g, opts)?;
    let cap = opts.max_counterexamples;
    let mut ops = Ops::new(g, fam);
    let relations = vec![
        relation_i(&ops, cap)?,
        relation_ii(&ops, &paths, &opts.bound, cap)?,
        relation_iii(&ops, &paths, cap)?,
        relation_iv(&mut ops, &sets, cap)?,
    ];
    Ok(CheckReport::new(relations, vertices_nonzero(g, fam)?))
}

/// (i)–(iii) together with [`Variant::A1`].
pub fn check_classical_relations(
    g: &KGraph,
    fam: &OperatorFamily,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    check_variant_relations(g, fam, Variant::A1, opts)
}

/// (i)–(iii) together with the chosen variant in place of (iv).
pub fn check_variant_relations(
    g: &KGraph,
    fam: &OperatorFamily,
    variant: Variant,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    check_bound(g, opts)?;
    let paths = g.paths_upto(&opts.bound);
    let cap = opts.max_counterexamples;
    let mut ops = Ops::new(g, fam);
    let mut relations = vec![
        relation_i(&ops, cap)?,
        relation_ii(&ops, &paths, &opts.bound, cap)?,
        relation_iii(&ops, &paths, cap)?,
    ];
    relations.push(match variant {
        Variant::A1 => relation_a1(&mut ops, opts)?,
        Variant::A2 => relation_a2(&mut ops, &tested_sets(g, opts)?, cap)?,
    });
    Ok(CheckReport::new(relations, vertices_nonzero(g, fam)?))
}

/// The generator form of the relations: (i) on vertices; (ii) every two
/// factorisations of a path of length at most 2 agree; (iii) for pairs of
/// edges; (iv) for exhaustive sets of edges.
pub fn check_generator_family(
    g: &KGraph,
    gen: &GeneratorFamily,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    gen.check_total(g)?;
    let fam = gen.as_family();
    let cap = opts.max_counterexamples;
    let mut ops = Ops::new(g, fam);

    let mut generators: Vec<Path> = g.vertices().map(|v| g.vertex_path(v)).collect();
    generators.extend(g.edges().map(|e| g.edge_path(e)));

    let mut ii = Tally::new("ii", cap);
    let mut groups: BTreeMap<Path, Vec<(Vec<String>, SparseMatrix)>> = BTreeMap::new();
    for x in &generators {
        groups
            .entry(x.clone())
            .or_default()
            .push((vec![ops.show(x)], ops.t(x)?.clone()));
    }
    for x in &generators {
        for y in generators.iter().filter(|y| y.range() == x.source()) {
            let xy = g.compose(x, y)?;
            groups
                .entry(xy)
                .or_default()
                .push((vec![ops.show(x), ops.show(y)], ops.t(x)?.mul(ops.t(y)?)));
        }
    }
    for members in groups.values() {
        let (first_names, first) = &members[0];
        for (names, m) in &members[1..] {
            ii.equal(first, m, || {
                first_names.iter().chain(names).cloned().collect()
            });
        }
    }

    let edges: Vec<Path> = g.edges().map(|e| g.edge_path(e)).collect();
    let iii = relation_iii(&ops, &edges, cap)?;
    let sets: Vec<(VertexId, Vec<Path>)> = tested_sets(g, opts)?
        .into_iter()
        .filter(|(_, s)| s.iter().all(|p| p.len() == 1))
        .collect();
    let relations = vec![
        relation_i(&ops, cap)?,
        ii.finish(),
        iii,
        relation_iv(&mut ops, &sets, cap)?,
    ];
    Ok(CheckReport::new(relations, vertices_nonzero(g, fam)?))
}
