//! Deciding whether a finite set `E ⊂ vΛ` is exhaustive.
//!
//! A state is a pair `(v, E)`. It is refuted outright when `E` is empty,
//! accepted outright when `E` contains a vertex, and otherwise depends on
//! the states `(s(f), Ext(f; E))` for every edge `f` with range `v`. The
//! refuted states form the least fixpoint of "some successor is refuted",
//! found by a backward breadth-first sweep from the empty states. States on
//! cycles that never reach an empty state are accepted.
//!
//! Every set in a reachable state has degrees bounded by `⋁_{λ∈E} d(λ)`, so
//! the state space is finite even when the graph has cycles.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, KGraph, VertexId};
use crate::path::{canonical, Path};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Empty,
    HasVertex,
    Branch,
}

/// One memoised state of the decision procedure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateRecord {
    pub vertex: VertexId,
    pub set: Vec<Path>,
    pub verdict: bool,
    /// For a refuted branching state: the edge leading to a refuted successor
    /// one level closer to an empty state.
    pub failing_edge: Option<EdgeId>,
    /// Distance to an empty state, for refuted states.
    pub level: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExhaustivenessCertificate {
    pub vertex: VertexId,
    pub set: Vec<Path>,
    pub verdict: bool,
    /// On refutation, a path `µ ∈ vΛ` with `Λ^min(λ, µ) = ∅` for all `λ ∈ E`.
    pub witness: Option<Path>,
    /// Every visited state; the queried state is first.
    pub states: Vec<StateRecord>,
}

struct State {
    vertex: VertexId,
    set: Vec<Path>,
    kind: Kind,
    succ: Vec<(EdgeId, usize)>,
}

impl KGraph {
    pub fn is_exhaustive(&self, v: VertexId, set: &[Path]) -> Result<ExhaustivenessCertificate> {
        if let Some(bad) = set.iter().find(|p| p.range() != v) {
            return Err(Error::WrongRange {
                path: self.show(bad),
                vertex: self.vertex_name(v).to_string(),
            });
        }
        let root = canonical(set.iter().cloned());

        let mut states: Vec<State> = Vec::new();
        let mut index: HashMap<(VertexId, Vec<Path>), usize> = HashMap::new();
        let mut queue = VecDeque::new();
        let mut intern = |vertex: VertexId,
                          set: Vec<Path>,
                          states: &mut Vec<State>,
                          queue: &mut VecDeque<usize>| {
            *index.entry((vertex, set.clone())).or_insert_with(|| {
                let kind = if set.is_empty() {
                    Kind::Empty
                } else if set.iter().any(Path::is_vertex) {
                    Kind::HasVertex
                } else {
                    Kind::Branch
                };
                states.push(State {
                    vertex,
                    set,
                    kind,
                    succ: Vec::new(),
                });
                queue.push_back(states.len() - 1);
                states.len() - 1
            })
        };
        intern(v, root.clone(), &mut states, &mut queue);

        while let Some(i) = queue.pop_front() {
            if states[i].kind != Kind::Branch {
                continue;
            }
            let vertex = states[i].vertex;
            let set = states[i].set.clone();
            let mut succ = Vec::new();
            for f in self.all_edges_with_range(vertex).collect::<Vec<_>>() {
                let ext = self.ext_set(&self.edge_path(f), &set);
                let j = intern(self.source(f), ext, &mut states, &mut queue);
                succ.push((f, j));
            }
            states[i].succ = succ;
        }

        let n = states.len();
        let mut preds: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); n];
        for (i, s) in states.iter().enumerate() {
            for &(f, j) in &s.succ {
                preds[j].push((i, f));
            }
        }
        let mut level: Vec<Option<usize>> = vec![None; n];
        let mut failing: Vec<Option<EdgeId>> = vec![None; n];
        let mut sweep = VecDeque::new();
        for (i, s) in states.iter().enumerate() {
            if s.kind == Kind::Empty {
                level[i] = Some(0);
                sweep.push_back(i);
            }
        }
        while let Some(j) = sweep.pop_front() {
            let next = level[j].map(|l| l + 1);
            for &(i, f) in &preds[j] {
                if level[i].is_none() {
                    level[i] = next;
                    failing[i] = Some(f);
                    sweep.push_back(i);
                }
            }
        }

        let verdict = level[0].is_none();
        let witness = (!verdict).then(|| {
            let mut edges = Vec::new();
            let mut cur = 0;
            while let Some(f) = failing[cur] {
                edges.push(f);
                cur = states[cur]
                    .succ
                    .iter()
                    .find(|&&(g, j)| g == f && level[j] < level[cur])
                    .map(|&(_, j)| j)
                    .expect("failing edge leads to a refuted successor");
            }
            self.normal_form_at(v, &edges)
                .expect("failing edges form a composable chain")
        });

        let records = states
            .into_iter()
            .enumerate()
            .map(|(i, s)| StateRecord {
                vertex: s.vertex,
                set: s.set,
                verdict: level[i].is_none(),
                failing_edge: failing[i],
                level: level[i],
            })
            .collect();

        Ok(ExhaustivenessCertificate {
            vertex: v,
            set: root,
            verdict,
            witness,
            states: records,
        })
    }

    /// Checks a refutation witness directly: `Λ^min(λ, µ) = ∅` for all `λ ∈ E`.
    pub fn witness_blocks(&self, set: &[Path], witness: &Path) -> bool {
        set.iter().all(|l| self.lambda_min(l, witness).is_empty())
    }
}
