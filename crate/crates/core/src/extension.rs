//! Minimal common extensions, `Ext`, `I`, `L`, and local convexity.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::graph::{KGraph, VertexId};
use crate::path::{canonical, Path};

/// `(α, β)` with `λα = µβ` of degree `d(λ) ∨ d(µ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinimalPair {
    pub alpha: Path,
    pub beta: Path,
}

impl KGraph {
    /// `Λ^min(λ, µ)`, sorted by `α`. Empty when the ranges differ.
    pub fn lambda_min(&self, lambda: &Path, mu: &Path) -> Vec<MinimalPair> {
        if lambda.range() != mu.range() {
            return Vec::new();
        }
        let top = lambda.degree().join(mu.degree());
        let need = top.saturating_sub(lambda.degree());
        let zero = Degree::zero(self.rank());
        self.paths_with_range(lambda.source(), &need)
            .into_iter()
            .filter_map(|alpha| {
                let ext = self
                    .compose(lambda, &alpha)
                    .expect("alpha starts at s(lambda)");
                (self.segment_clamped(&ext, &zero, mu.degree()) == *mu).then(|| MinimalPair {
                    beta: self.segment_clamped(&ext, mu.degree(), &top),
                    alpha,
                })
            })
            .collect()
    }

    /// The common extensions `λα` from `Λ^min(λ, µ)`.
    pub fn common_extensions(&self, lambda: &Path, mu: &Path) -> Vec<Path> {
        self.lambda_min(lambda, mu)
            .into_iter()
            .map(|p| self.compose(lambda, &p.alpha).expect("composable"))
            .collect()
    }

    fn common_range(&self, paths: &[Path]) -> Result<Option<VertexId>> {
        let Some(first) = paths.first() else {
            return Ok(None);
        };
        if paths.iter().any(|p| p.range() != first.range()) {
            return Err(Error::MixedRanges(self.show_set(paths).join(",")));
        }
        Ok(Some(first.range()))
    }

    /// `MCE(F)`: common extensions of degree `⋁ d(α)` restricting to every
    /// `α ∈ F`. Empty for empty `F`.
    pub fn mce(&self, family: &[Path]) -> Result<Vec<Path>> {
        if self.common_range(family)?.is_none() {
            return Ok(Vec::new());
        }
        let mut current = vec![family[0].clone()];
        for alpha in &family[1..] {
            current = canonical(
                current
                    .iter()
                    .flat_map(|g| self.common_extensions(g, alpha)),
            );
            if current.is_empty() {
                break;
            }
        }
        Ok(current)
    }

    /// `∨F`: the union of `MCE(G)` over nonempty `G ⊆ F`.
    pub fn vee(&self, family: &[Path]) -> Result<Vec<Path>> {
        self.common_range(family)?;
        let family = canonical(family.iter().cloned());
        let mut out = BTreeSet::new();
        let mut seen = HashSet::new();
        for (i, p) in family.iter().enumerate() {
            self.vee_dfs(&family, i, vec![p.clone()], &mut seen, &mut out);
        }
        Ok(out.into_iter().collect())
    }

    // `current` is MCE of a subset whose largest index is `last`.
    fn vee_dfs(
        &self,
        family: &[Path],
        last: usize,
        current: Vec<Path>,
        seen: &mut HashSet<(usize, Vec<Path>)>,
        out: &mut BTreeSet<Path>,
    ) {
        if !seen.insert((last, current.clone())) {
            return;
        }
        out.extend(current.iter().cloned());
        for j in last + 1..family.len() {
            let next = canonical(
                current
                    .iter()
                    .flat_map(|g| self.common_extensions(g, &family[j])),
            );
            if !next.is_empty() {
                self.vee_dfs(family, j, next, seen, out);
            }
        }
    }

    /// `Ext(µ; E) = ⋃_{λ∈E} {α : (α, β) ∈ Λ^min(µ, λ)}`, sorted.
    pub fn ext_set(&self, mu: &Path, set: &[Path]) -> Vec<Path> {
        canonical(
            set.iter()
                .flat_map(|l| self.lambda_min(mu, l))
                .map(|p| p.alpha),
        )
    }

    /// `I(E)`: the initial edges `λ(0, e_i)` of members of `E`, sorted.
    pub fn i_set(&self, set: &[Path]) -> Vec<Path> {
        let zero = Degree::zero(self.rank());
        canonical(set.iter().flat_map(|l| {
            (1..=self.rank())
                .filter(|&i| l.degree().get(i) > 0)
                .map(|i| self.segment_clamped(l, &zero, &Degree::unit(self.rank(), i)))
                .collect::<Vec<_>>()
        }))
    }

    /// True iff whenever `λ ∈ vΛ^{e_i}` and `µ ∈ vΛ^{e_j}` with `i != j`,
    /// both `s(λ)Λ^{e_j}` and `s(µ)Λ^{e_i}` are nonempty.
    pub fn is_locally_convex(&self) -> bool {
        self.local_convexity_failure().is_none()
    }

    /// A pair of edges `(λ, µ)` at a common vertex witnessing failure of local convexity.
    pub fn local_convexity_failure(&self) -> Option<(Path, Path)> {
        for v in self.vertices() {
            for i in 0..self.rank() {
                for j in 0..self.rank() {
                    if i == j {
                        continue;
                    }
                    for &l in self.in0(v, i) {
                        for &m in self.in0(v, j) {
                            if self.in0(self.source(l), j).is_empty()
                                || self.in0(self.source(m), i).is_empty()
                            {
                                return Some((self.edge_path(l), self.edge_path(m)));
                            }
                        }
                    }
                }
            }
        }
        None
    }

    pub fn row_finiteness_report(&self) -> RowFinitenessReport {
        RowFinitenessReport {
            schema: ROW_FINITENESS_SCHEMA.to_string(),
            rows: self
                .vertices()
                .map(|v| VertexRow {
                    vertex: self.vertex_name(v).to_string(),
                    counts: (1..=self.rank())
                        .map(|c| self.edges_with_range(v, c).len())
                        .collect(),
                })
                .collect(),
        }
    }
}

/// `L(E) = Σ_i max_{λ∈E} d(λ)_i`; zero for the empty set.
pub fn l_weight(set: &[Path]) -> u32 {
    set.iter()
        .map(|p| p.degree().clone())
        .reduce(|a, b| a.join(&b))
        .map_or(0, |d| d.total())
}

pub const ROW_FINITENESS_SCHEMA: &str = "kgraph.row-finiteness.v1";

/// Per-vertex counts `|vΛ^{e_i}|`, one entry per color.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowFinitenessReport {
    pub schema: String,
    pub rows: Vec<VertexRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRow {
    pub vertex: String,
    pub counts: Vec<usize>,
}
