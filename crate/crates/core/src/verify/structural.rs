//! Identities that every Cuntz-Krieger family satisfies, checked on a
//! concrete family, together with the matrix units `Θ(λ, µ)` of a `ΠE`.

use super::{check_bound, vertices_nonzero, CheckOptions, CheckReport, Ops, Tally};
use crate::core_approx::{CoreBlockReport, PiClosure};
use crate::error::Result;
use crate::family::OperatorFamily;
use crate::graph::KGraph;
use crate::matrix::SparseMatrix;
use crate::path::Path;
use crate::verify::exhaustive_edge_sets;

/// `Q_λ = t_λ t*_λ ∏_{ν∈T(λ)} (t_λ t*_λ − t_{λν} t*_{λν})`.
pub fn q_projection(
    g: &KGraph,
    fam: &OperatorFamily,
    pc: &PiClosure,
    lambda: &Path,
) -> Result<SparseMatrix> {
    let mut ops = Ops::new(g, fam);
    q_with(&mut ops, pc, lambda)
}

fn q_with(ops: &mut Ops, pc: &PiClosure, lambda: &Path) -> Result<SparseMatrix> {
    let pl = ops.p(lambda)?;
    let mut q = pl.clone();
    for nu in ops.g.t_set_of(pc, lambda) {
        let ln = ops.g.compose(lambda, &nu)?;
        q = q.mul(&pl.sub(&ops.p(&ln)?));
    }
    Ok(q)
}

/// `Θ(λ, µ) = Q_λ t_λ t*_µ`.
pub fn theta(
    g: &KGraph,
    fam: &OperatorFamily,
    pc: &PiClosure,
    lambda: &Path,
    mu: &Path,
) -> Result<SparseMatrix> {
    let mut ops = Ops::new(g, fam);
    theta_with(&mut ops, pc, lambda, mu)
}

fn theta_with(ops: &mut Ops, pc: &PiClosure, lambda: &Path, mu: &Path) -> Result<SparseMatrix> {
    let q = q_with(ops, pc, lambda)?;
    Ok(q.mul(ops.t(lambda)?).mul(&ops.t(mu)?.transpose()))
}

/// Checks, as exact matrix equations:
/// - `commuting-projections`: each `t_λ t*_λ` is a projection and any two commute;
/// - `same-degree`: `t*_λ t_µ = δ_{λ,µ} t_{s(λ)}` when `d(λ) = d(µ)`;
/// - `range-sum`: `Σ_{λ∈vΛ^n} t_λ t*_λ` is a projection below `t_v`;
/// - `partition`: `∏_{λ∈vΠE}(t_v − t_λ t*_λ) + Σ_{µ∈vΠE} Q_µ = t_v`;
/// - `range-resolution`: `t_µ t*_µ = Σ_{µν∈ΠE} Q_{µν}`;
/// - `matrix-units`: `Θ(λ,µ)Θ(σ,τ) = δ_{µ,σ} Θ(λ,τ)` and `Θ(λ,µ)* = Θ(µ,λ)`;
/// - `vanishing`: `Q_λ = 0` exactly for the vanishing members of `support`;
/// - `extendor`: `t_{λξ} t*_{λξ} ≤ Q_λ` and `t_{λξ} t*_{λξ} Θ(σ,τ) = δ_{λ,σ} t_{λξ} t*_{τξ}`;
/// - `gap-projection`: `∏_{ν∈E}(t_{s(λ)} − t_ν t*_ν) = 0` implies
///   `t_{r(λ)} − t_λ t*_λ = ∏_{ν∈E}(t_{r(λ)} − t_{λν} t*_{λν})`.
pub fn structural_suite(
    g: &KGraph,
    fam: &OperatorFamily,
    pc: &PiClosure,
    support: &CoreBlockReport,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    check_bound(g, opts)?;
    let cap = opts.max_counterexamples;
    let paths = g.paths_upto(&opts.bound);
    let mut ops = Ops::new(g, fam);
    let mut relations = Vec::new();

    let mut t = Tally::new("commuting-projections", cap);
    for l in &paths {
        let pl = ops.p(l)?;
        t.holds(pl.is_projection(), || vec![ops.show(l)]);
        for m in &paths {
            if m > l {
                let pm = ops.p(m)?;
                t.equal(&pl.mul(&pm), &pm.mul(&pl), || {
                    vec![ops.show(l), ops.show(m)]
                });
            }
        }
    }
    relations.push(t.finish());

    let mut t = Tally::new("same-degree", cap);
    for l in &paths {
        for m in paths.iter().filter(|m| m.degree() == l.degree()) {
            let lhs = ops.t(l)?.transpose().mul(ops.t(m)?);
            let rhs = if l == m {
                ops.tv(l.source())?.clone()
            } else {
                ops.zero()
            };
            t.equal(&lhs, &rhs, || vec![ops.show(l), ops.show(m)]);
        }
    }
    relations.push(t.finish());

    let mut t = Tally::new("range-sum", cap);
    for v in g.vertices() {
        let tv = ops.tv(v)?.clone();
        for n in opts.bound.box_below() {
            let mut sum = ops.zero();
            for l in g.paths_with_range(v, &n) {
                sum = sum.add(&ops.p(&l)?);
            }
            t.holds(sum.is_projection() && tv.mul(&sum) == sum, || {
                vec![g.vertex_name(v).into(), format!("n={n}")]
            });
        }
    }
    relations.push(t.finish());

    let mut t = Tally::new("partition", cap);
    for v in g.vertices() {
        let at_v = pc.at_range(v);
        if at_v.is_empty() {
            continue;
        }
        let mut lhs = ops.gap_product(v, &at_v)?;
        for mu in &at_v {
            lhs = lhs.add(&q_with(&mut ops, pc, mu)?);
        }
        let tv = ops.tv(v)?.clone();
        t.equal(&lhs, &tv, || vec![g.vertex_name(v).into()]);
    }
    relations.push(t.finish());

    let mut t = Tally::new("range-resolution", cap);
    for mu in &pc.closed {
        let mut sum = q_with(&mut ops, pc, mu)?;
        for nu in g.t_set_of(pc, mu) {
            sum = sum.add(&q_with(&mut ops, pc, &g.compose(mu, &nu)?)?);
        }
        let pm = ops.p(mu)?;
        t.equal(&pm, &sum, || vec![ops.show(mu)]);
    }
    relations.push(t.finish());

    let classes: Vec<Vec<Path>> = pc.classes().into_values().collect();
    let pairs: Vec<(&Path, &Path)> = classes
        .iter()
        .flat_map(|c| c.iter().flat_map(move |l| c.iter().map(move |m| (l, m))))
        .collect();
    let mut thetas = std::collections::HashMap::new();
    for &(l, m) in &pairs {
        thetas.insert((l.clone(), m.clone()), theta_with(&mut ops, pc, l, m)?);
    }
    let mut t = Tally::new("matrix-units", cap);
    for &(l, m) in &pairs {
        let a = &thetas[&(l.clone(), m.clone())];
        t.equal(&a.transpose(), &thetas[&(m.clone(), l.clone())], || {
            vec![ops.show(l), ops.show(m), "adjoint".into()]
        });
        for &(s, u) in &pairs {
            let prod = a.mul(&thetas[&(s.clone(), u.clone())]);
            let rhs = if m == s {
                thetas
                    .get(&(l.clone(), u.clone()))
                    .cloned()
                    .unwrap_or_else(|| ops.zero())
            } else {
                ops.zero()
            };
            t.equal(&prod, &rhs, || {
                vec![ops.show(l), ops.show(m), ops.show(s), ops.show(u)]
            });
        }
    }
    relations.push(t.finish());

    let mut t = Tally::new("vanishing", cap);
    for l in &pc.closed {
        let q = q_with(&mut ops, pc, l)?;
        t.holds(q.is_zero() == support.is_vanishing(l), || vec![ops.show(l)]);
    }
    relations.push(t.finish());

    let mut t = Tally::new("extendor", cap);
    for block in &support.blocks {
        let xi = &block.extendor;
        for l in &block.members {
            let lx = g.compose(l, xi)?;
            let x = ops.p(&lx)?;
            let q = q_with(&mut ops, pc, l)?;
            t.equal(&x.mul(&q), &x, || vec![ops.show(l), ops.show(xi)]);
            for &(s, u) in &pairs {
                let lhs = x.mul(&thetas[&(s.clone(), u.clone())]);
                let rhs = if s == l {
                    let ux = g.compose(u, xi)?;
                    ops.t(&lx)?.mul(&ops.t(&ux)?.transpose())
                } else {
                    ops.zero()
                };
                t.equal(&lhs, &rhs, || {
                    vec![ops.show(l), ops.show(xi), ops.show(s), ops.show(u)]
                });
            }
        }
    }
    relations.push(t.finish());

    let mut t = Tally::new("gap-projection", cap);
    for l in &paths {
        let v = l.range();
        for set in exhaustive_edge_sets(g, l.source())? {
            let extended: Vec<Path> = set.iter().map(|n| g.compose(l, n)).collect::<Result<_>>()?;
            if extended.iter().any(|p| fam.get(p).is_none()) {
                continue;
            }
            if !ops.gap_product(l.source(), &set)?.is_zero() {
                continue;
            }
            let lhs = ops.tv(v)?.sub(&ops.p(l)?);
            let rhs = ops.gap_product(v, &extended)?;
            t.equal(&lhs, &rhs, || vec![ops.show(l), ops.show_set(&set)]);
        }
    }
    relations.push(t.finish());

    Ok(CheckReport::new(relations, vertices_nonzero(g, fam)?))
}
