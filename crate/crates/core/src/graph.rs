//! The validated, indexed form of a [`Skeleton`].

use std::collections::HashMap;
use std::fmt;

use petgraph::algo::is_cyclic_directed;
use petgraph::graphmap::DiGraphMap;

use crate::error::{Error, Result};
use crate::skeleton::{validate_skeleton, Skeleton};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub(crate) u32);

/// Edge handle. Handles are assigned in lexicographic order of edge ids, so
/// comparing handles compares ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub(crate) u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug)]
struct EdgeData {
    id: String,
    color0: usize,
    range: VertexId,
    source: VertexId,
}

/// A finite k-graph presented by a skeleton that passed validation.
///
/// Immutable once built; all path operations borrow it.
#[derive(Clone, Debug)]
pub struct KGraph {
    skeleton: Skeleton,
    rank: usize,
    vertex_names: Vec<String>,
    vertex_index: HashMap<String, VertexId>,
    edges: Vec<EdgeData>,
    edge_index: HashMap<String, EdgeId>,
    by_range: Vec<Vec<Vec<EdgeId>>>,
    by_source: Vec<Vec<Vec<EdgeId>>>,
    swap: HashMap<(EdgeId, EdgeId), (EdgeId, EdgeId)>,
    acyclic: bool,
}

impl KGraph {
    pub fn new(skeleton: Skeleton) -> Result<Self> {
        let report = validate_skeleton(&skeleton);
        if !report.ok {
            return Err(Error::InvalidSkeleton(Box::new(report)));
        }
        let rank = skeleton.k;
        let vertex_names = skeleton.vertices.clone();
        let vertex_index: HashMap<String, VertexId> = vertex_names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), VertexId(i as u32)))
            .collect();

        let mut records: Vec<_> = skeleton.edges.iter().collect();
        records.sort_by(|a, b| a.id.cmp(&b.id));
        let edges: Vec<EdgeData> = records
            .iter()
            .map(|r| EdgeData {
                id: r.id.clone(),
                color0: r.color - 1,
                range: vertex_index[&r.range],
                source: vertex_index[&r.source],
            })
            .collect();
        let edge_index: HashMap<String, EdgeId> = edges
            .iter()
            .enumerate()
            .map(|(i, e)| (e.id.clone(), EdgeId(i as u32)))
            .collect();

        let n = vertex_names.len();
        let mut by_range = vec![vec![Vec::new(); rank]; n];
        let mut by_source = vec![vec![Vec::new(); rank]; n];
        for (i, e) in edges.iter().enumerate() {
            by_range[e.range.index()][e.color0].push(EdgeId(i as u32));
            by_source[e.source.index()][e.color0].push(EdgeId(i as u32));
        }

        let mut swap = HashMap::with_capacity(skeleton.squares.len() * 2);
        for sq in &skeleton.squares {
            let mut left = (edge_index[&sq.path_a[0]], edge_index[&sq.path_a[1]]);
            let mut right = (edge_index[&sq.path_b[0]], edge_index[&sq.path_b[1]]);
            if edges[left.0.index()].color0 > edges[left.1.index()].color0 {
                std::mem::swap(&mut left, &mut right);
            }
            swap.insert(left, right);
            swap.insert(right, left);
        }

        let mut digraph = DiGraphMap::<u32, ()>::new();
        for v in 0..n as u32 {
            digraph.add_node(v);
        }
        for e in &edges {
            digraph.add_edge(e.source.0, e.range.0, ());
        }
        let acyclic = !is_cyclic_directed(&digraph);

        Ok(KGraph {
            skeleton,
            rank,
            vertex_names,
            vertex_index,
            edges,
            edge_index,
            by_range,
            by_source,
            swap,
            acyclic,
        })
    }

    pub fn skeleton(&self) -> &Skeleton {
        &self.skeleton
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_names.len() as u32).map(VertexId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edge(&self, name: &str) -> Result<EdgeId> {
        self.edge_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownEdge(name.to_string()))
    }

    pub(crate) fn lookup_edge(&self, name: &str) -> Option<EdgeId> {
        self.edge_index.get(name).copied()
    }

    pub(crate) fn lookup_vertex(&self, name: &str) -> Option<VertexId> {
        self.vertex_index.get(name).copied()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v.index()]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e.index()].id
    }

    /// 1-based color of `e`.
    pub fn color(&self, e: EdgeId) -> usize {
        self.edges[e.index()].color0 + 1
    }

    pub(crate) fn color0(&self, e: EdgeId) -> usize {
        self.edges[e.index()].color0
    }

    pub fn range(&self, e: EdgeId) -> VertexId {
        self.edges[e.index()].range
    }

    pub fn source(&self, e: EdgeId) -> VertexId {
        self.edges[e.index()].source
    }

    /// `vΛ^{e_i}` for 1-based `color`: edges of that color with range `v`.
    pub fn edges_with_range(&self, v: VertexId, color: usize) -> &[EdgeId] {
        &self.by_range[v.index()][color - 1]
    }

    /// `Λ^{e_i}v`: edges of that color with source `v`.
    pub fn edges_with_source(&self, v: VertexId, color: usize) -> &[EdgeId] {
        &self.by_source[v.index()][color - 1]
    }

    pub(crate) fn in0(&self, v: VertexId, color0: usize) -> &[EdgeId] {
        &self.by_range[v.index()][color0]
    }

    pub(crate) fn out0(&self, v: VertexId, color0: usize) -> &[EdgeId] {
        &self.by_source[v.index()][color0]
    }

    /// All edges with range `v`, ordered by color then id.
    pub fn all_edges_with_range(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.by_range[v.index()].iter().flatten().copied()
    }

    /// True when no edge of any color has range `v`.
    pub fn is_sink(&self, v: VertexId) -> bool {
        self.by_range[v.index()].iter().all(Vec::is_empty)
    }

    /// The factorisation square through the composable pair `(a, b)` of
    /// distinct colors: returns `(c, d)` with `ab = cd` and the colors swapped.
    pub fn swap(&self, a: EdgeId, b: EdgeId) -> Option<(EdgeId, EdgeId)> {
        self.swap.get(&(a, b)).copied()
    }

    /// True iff the underlying directed graph has no directed cycle, that is,
    /// iff the path category is finite.
    pub fn is_acyclic(&self) -> bool {
        self.acyclic
    }
}

impl fmt::Display for KGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}-graph: {} vertices, {} edges, {} squares",
            self.rank,
            self.vertex_count(),
            self.edge_count(),
            self.skeleton.squares.len()
        )
    }
}
