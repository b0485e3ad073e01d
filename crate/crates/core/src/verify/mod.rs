//! Checkers for Cuntz-Krieger relations on concrete operator families.
//!
//! Every check is an exact matrix equation. A failing instance is recorded
//! as a [`Counterexample`] naming the paths or sets involved and the first
//! matrix position where the two sides differ.

mod relations;
mod structural;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::family::{default_bound, OperatorFamily};
use crate::graph::{KGraph, VertexId};
use crate::matrix::SparseMatrix;
use crate::path::Path;

pub use relations::{
    check_ck_family, check_classical_relations, check_generator_family, check_variant_relations,
    exhaustive_edge_sets, Variant,
};
pub use structural::{q_projection, structural_suite, theta};

pub const CHECK_SCHEMA: &str = "kgraph.check.v1";

/// Largest edge count at one vertex for which every edge subset is tried.
pub const MAX_SUBSET_EDGES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub subjects: Vec<String>,
    /// First `(row, col)` where the two sides differ.
    pub position: Option<(usize, usize)>,
    /// `(rank of left side, rank of right side)`, where that is informative.
    pub ranks: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationVerdict {
    pub id: String,
    pub checked: usize,
    pub failures: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl RelationVerdict {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub schema: String,
    pub relations: Vec<RelationVerdict>,
    /// Every vertex projection is nonzero. Reported, not required for `passed`.
    pub vertices_nonzero: bool,
    pub passed: bool,
}

impl CheckReport {
    fn new(relations: Vec<RelationVerdict>, vertices_nonzero: bool) -> Self {
        let passed = relations.iter().all(RelationVerdict::passed);
        CheckReport {
            schema: CHECK_SCHEMA.to_string(),
            relations,
            vertices_nonzero,
            passed,
        }
    }

    pub fn relation(&self, id: &str) -> Option<&RelationVerdict> {
        self.relations.iter().find(|r| r.id == id)
    }

    /// True iff relation `id` was checked and had no failures.
    pub fn holds(&self, id: &str) -> bool {
        self.relation(id).is_some_and(RelationVerdict::passed)
    }
}

#[derive(Clone, Debug)]
pub struct CheckOptions {
    /// Paths of degree `<= bound` are the ones checked.
    pub bound: Degree,
    /// Additional `(v, E)` pairs for the exhaustive-set relations; each `E`
    /// is tested for exhaustiveness first and skipped if it is not.
    pub extra_sets: Vec<(VertexId, Vec<Path>)>,
    /// Counterexamples kept per relation; failures beyond this are only counted.
    pub max_counterexamples: usize,
}

impl CheckOptions {
    pub fn for_graph(g: &KGraph) -> Result<Self> {
        Ok(CheckOptions {
            bound: default_bound(g)?,
            extra_sets: Vec::new(),
            max_counterexamples: 8,
        })
    }
}

/// Accumulates one relation's verdict.
struct Tally {
    verdict: RelationVerdict,
    cap: usize,
}

impl Tally {
    fn new(id: &str, cap: usize) -> Self {
        Tally {
            verdict: RelationVerdict {
                id: id.to_string(),
                checked: 0,
                failures: 0,
                counterexamples: Vec::new(),
            },
            cap,
        }
    }

    /// Records `lhs = rhs`.
    fn equal(
        &mut self,
        lhs: &SparseMatrix,
        rhs: &SparseMatrix,
        subjects: impl FnOnce() -> Vec<String>,
    ) {
        self.verdict.checked += 1;
        if let Some(pos) = lhs.first_difference(rhs) {
            self.fail(subjects(), Some(pos), None);
        }
    }

    /// Records `lhs = rhs`, with ranks in the counterexample.
    fn equal_ranked(
        &mut self,
        lhs: &SparseMatrix,
        rhs: &SparseMatrix,
        subjects: impl FnOnce() -> Vec<String>,
    ) {
        self.verdict.checked += 1;
        if let Some(pos) = lhs.first_difference(rhs) {
            self.fail(subjects(), Some(pos), Some((lhs.rank(), rhs.rank())));
        }
    }

    fn holds(&mut self, ok: bool, subjects: impl FnOnce() -> Vec<String>) {
        self.verdict.checked += 1;
        if !ok {
            self.fail(subjects(), None, None);
        }
    }

    fn fail(
        &mut self,
        subjects: Vec<String>,
        position: Option<(usize, usize)>,
        ranks: Option<(usize, usize)>,
    ) {
        self.verdict.failures += 1;
        if self.verdict.counterexamples.len() < self.cap {
            self.verdict.counterexamples.push(Counterexample {
                subjects,
                position,
                ranks,
            });
        }
    }

    fn finish(self) -> RelationVerdict {
        self.verdict
    }
}

/// Read access to a family with cached range projections.
struct Ops<'a> {
    g: &'a KGraph,
    fam: &'a OperatorFamily,
    proj: HashMap<Path, SparseMatrix>,
}

impl<'a> Ops<'a> {
    fn new(g: &'a KGraph, fam: &'a OperatorFamily) -> Self {
        Ops {
            g,
            fam,
            proj: HashMap::new(),
        }
    }

    fn dim(&self) -> usize {
        self.fam.dim()
    }

    fn zero(&self) -> SparseMatrix {
        SparseMatrix::zeros(self.dim(), self.dim())
    }

    fn t(&self, p: &Path) -> Result<&'a SparseMatrix> {
        self.fam.op(self.g, p)
    }

    fn tv(&self, v: VertexId) -> Result<&'a SparseMatrix> {
        self.t(&self.g.vertex_path(v))
    }

    /// `t_λ t*_λ`.
    fn p(&mut self, lambda: &Path) -> Result<SparseMatrix> {
        if let Some(m) = self.proj.get(lambda) {
            return Ok(m.clone());
        }
        let t = self.t(lambda)?;
        let m = t.mul(&t.transpose());
        self.proj.insert(lambda.clone(), m.clone());
        Ok(m)
    }

    /// `∏_{λ∈E} (t_v − t_λ t*_λ)`.
    fn gap_product(&mut self, v: VertexId, set: &[Path]) -> Result<SparseMatrix> {
        let tv = self.tv(v)?.clone();
        let mut acc = tv.clone();
        for l in set {
            acc = acc.mul(&tv.sub(&self.p(l)?));
        }
        Ok(acc)
    }

    fn show(&self, p: &Path) -> String {
        self.g.show(p)
    }

    fn show_set(&self, set: &[Path]) -> String {
        format!("{{{}}}", self.g.show_set(set).join(","))
    }
}

fn vertices_nonzero(g: &KGraph, fam: &OperatorFamily) -> Result<bool> {
    for v in g.vertices() {
        if fam.op(g, &g.vertex_path(v))?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_bound(g: &KGraph, opts: &CheckOptions) -> Result<()> {
    if opts.bound.rank() != g.rank() {
        return Err(Error::RankMismatch {
            expected: g.rank(),
            found: opts.bound.rank(),
        });
    }
    Ok(())
}
