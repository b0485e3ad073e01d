//! Morphisms of a k-graph in color-sorted normal form, and their calculus.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, KGraph, VertexId};

/// A morphism, stored as its color-sorted edge sequence.
///
/// Two `Path`s are equal iff they are the same morphism. Vertices are the
/// paths with no edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    range: VertexId,
    source: VertexId,
    degree: Degree,
    edges: Vec<EdgeId>,
}

impl Path {
    pub fn range(&self) -> VertexId {
        self.range
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn degree(&self) -> &Degree {
        &self.degree
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

// Lexicographic on edge ids; ties (equal edge lists, i.e. vertices) broken by vertex.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.edges
            .cmp(&other.edges)
            .then(self.range.cmp(&other.range))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Display adaptor: `e.f` for edges in normal-form order, the vertex id for vertices.
pub struct PathDisplay<'a> {
    graph: &'a KGraph,
    path: &'a Path,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_vertex() {
            return f.write_str(self.graph.vertex_name(self.path.range));
        }
        for (i, e) in self.path.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            f.write_str(self.graph.edge_name(*e))?;
        }
        Ok(())
    }
}

impl KGraph {
    pub fn vertex_path(&self, v: VertexId) -> Path {
        Path {
            range: v,
            source: v,
            degree: Degree::zero(self.rank()),
            edges: Vec::new(),
        }
    }

    pub fn edge_path(&self, e: EdgeId) -> Path {
        Path {
            range: self.range(e),
            source: self.source(e),
            degree: Degree::unit(self.rank(), self.color(e)),
            edges: vec![e],
        }
    }

    pub fn display<'a>(&'a self, path: &'a Path) -> PathDisplay<'a> {
        PathDisplay { graph: self, path }
    }

    pub fn show(&self, path: &Path) -> String {
        self.display(path).to_string()
    }

    pub fn show_set(&self, paths: &[Path]) -> Vec<String> {
        paths.iter().map(|p| self.show(p)).collect()
    }

    /// Normal form of a nonempty composable edge sequence.
    pub fn normal_form(&self, raw: &[EdgeId]) -> Result<Path> {
        let first = raw.first().ok_or(Error::EmptyPathLiteral)?;
        self.normal_form_at(self.range(*first), raw)
    }

    /// Normal form of a composable edge sequence anchored at `v`; the empty
    /// sequence gives the vertex `v`.
    pub fn normal_form_at(&self, v: VertexId, raw: &[EdgeId]) -> Result<Path> {
        let mut cur = v;
        for &e in raw {
            if self.range(e) != cur {
                return Err(Error::NotComposable(
                    self.vertex_name(cur).to_string(),
                    self.edge_name(e).to_string(),
                ));
            }
            cur = self.source(e);
        }
        let mut edges = raw.to_vec();
        self.sort_colors(&mut edges);
        Ok(self.assemble(v, edges))
    }

    fn assemble(&self, range: VertexId, edges: Vec<EdgeId>) -> Path {
        let mut degree = Degree::zero(self.rank());
        for &e in &edges {
            *degree.coord0_mut(self.color0(e)) += 1;
        }
        let source = edges.last().map_or(range, |&e| self.source(e));
        Path {
            range,
            source,
            degree,
            edges,
        }
    }

    /// Bubble sort by color, each swap going through a square.
    fn sort_colors(&self, edges: &mut [EdgeId]) {
        let n = edges.len();
        for pass in 0..n {
            let mut swapped = false;
            for i in 0..n.saturating_sub(1 + pass) {
                if self.color0(edges[i]) > self.color0(edges[i + 1]) {
                    let (a, b) = self
                        .swap(edges[i], edges[i + 1])
                        .expect("validated skeleton has every square");
                    edges[i] = a;
                    edges[i + 1] = b;
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
    }

    /// Rewrites the edges of `path` so that position `i` has color
    /// `pattern[i]` (0-based). `pattern` must be a rearrangement of the
    /// path's color multiset.
    pub(crate) fn refactor(&self, path: &Path, pattern: &[usize]) -> Vec<EdgeId> {
        debug_assert_eq!(pattern.len(), path.edges.len());
        let mut edges = path.edges.clone();
        for (i, &c) in pattern.iter().enumerate() {
            let j = (i..edges.len())
                .find(|&j| self.color0(edges[j]) == c)
                .expect("pattern matches the degree");
            for t in (i + 1..=j).rev() {
                let (a, b) = self
                    .swap(edges[t - 1], edges[t])
                    .expect("validated skeleton has every square");
                edges[t - 1] = a;
                edges[t] = b;
            }
        }
        edges
    }

    pub fn compose(&self, lambda: &Path, mu: &Path) -> Result<Path> {
        if lambda.source != mu.range {
            return Err(Error::SourceRangeMismatch(self.show(lambda), self.show(mu)));
        }
        let mut edges = Vec::with_capacity(lambda.len() + mu.len());
        edges.extend_from_slice(&lambda.edges);
        edges.extend_from_slice(&mu.edges);
        self.sort_colors(&mut edges);
        Ok(self.assemble(lambda.range, edges))
    }

    /// Composition of a sequence of paths, left to right.
    pub fn compose_all(&self, parts: &[&Path]) -> Result<Path> {
        let (first, rest) = parts.split_first().ok_or(Error::EmptyPathLiteral)?;
        let mut acc = (*first).clone();
        for p in rest {
            acc = self.compose(&acc, p)?;
        }
        Ok(acc)
    }

    pub(crate) fn check_rank(&self, n: &Degree) -> Result<()> {
        if n.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: n.rank(),
            });
        }
        Ok(())
    }

    /// `λ(m, n)` with the clamping convention `λ(m ∧ d(λ), n ∧ d(λ))`.
    pub fn segment(&self, path: &Path, m: &Degree, n: &Degree) -> Result<Path> {
        self.check_rank(m)?;
        self.check_rank(n)?;
        let m = m.meet(&path.degree);
        let n = n.meet(&path.degree);
        if !m.le(&n) {
            return Err(Error::DegreeOrder {
                lower: m.to_string(),
                upper: n.to_string(),
            });
        }
        Ok(self.segment_clamped(path, &m, &n))
    }

    /// `segment` for `m <= n <= d(path)`.
    pub(crate) fn segment_clamped(&self, path: &Path, m: &Degree, n: &Degree) -> Path {
        let mut pattern = m.sorted_colors();
        pattern.extend(n.saturating_sub(m).sorted_colors());
        pattern.extend(path.degree.saturating_sub(n).sorted_colors());
        let edges = self.refactor(path, &pattern);
        let lo = m.total() as usize;
        let hi = n.total() as usize;
        let start = if lo == 0 {
            path.range
        } else {
            self.source(edges[lo - 1])
        };
        self.assemble(start, edges[lo..hi].to_vec())
    }

    /// `(λ(0, m), λ(m, d(λ)))` for `m` clamped to `d(λ)`.
    pub fn factor_at(&self, path: &Path, m: &Degree) -> (Path, Path) {
        let m = m.meet(&path.degree);
        let head = self.segment_clamped(path, &Degree::zero(self.rank()), &m);
        let tail = self.segment_clamped(path, &m, &path.degree);
        (head, tail)
    }

    /// The vertex `λ(n)`, with `n` clamped to `d(λ)`.
    pub fn vertex_at(&self, path: &Path, n: &Degree) -> VertexId {
        self.factor_at(path, n).1.range
    }

    /// True iff `λ(0, d(prefix)) = prefix`.
    pub fn has_prefix(&self, path: &Path, prefix: &Path) -> bool {
        prefix.range == path.range
            && prefix.degree.le(&path.degree)
            && self.factor_at(path, &prefix.degree).0 == *prefix
    }

    /// `vΛ^n`, ordered lexicographically by edge ids.
    pub fn paths_with_range(&self, v: VertexId, n: &Degree) -> Vec<Path> {
        let pattern = n.sorted_colors();
        let mut out = Vec::new();
        let mut stack = Vec::with_capacity(pattern.len());
        self.extend_down(v, &pattern, &mut stack, &mut |edges| {
            out.push(self.assemble(v, edges.to_vec()))
        });
        out
    }

    fn extend_down(
        &self,
        cur: VertexId,
        pattern: &[usize],
        stack: &mut Vec<EdgeId>,
        emit: &mut dyn FnMut(&[EdgeId]),
    ) {
        let Some((&c, rest)) = pattern.split_first() else {
            emit(stack);
            return;
        };
        for &e in self.in0(cur, c) {
            stack.push(e);
            self.extend_down(self.source(e), rest, stack, emit);
            stack.pop();
        }
    }

    /// `Λ^n v`, ordered lexicographically by edge ids.
    pub fn paths_with_source(&self, v: VertexId, n: &Degree) -> Vec<Path> {
        let pattern = n.sorted_colors();
        let mut out = Vec::new();
        let mut stack = Vec::with_capacity(pattern.len());
        self.extend_up(v, &pattern, &mut stack, &mut out);
        out.sort();
        out
    }

    fn extend_up(
        &self,
        cur: VertexId,
        pattern: &[usize],
        stack: &mut Vec<EdgeId>,
        out: &mut Vec<Path>,
    ) {
        let Some((&c, rest)) = pattern.split_last() else {
            let edges: Vec<EdgeId> = stack.iter().rev().copied().collect();
            out.push(self.assemble(cur, edges));
            return;
        };
        for &e in self.out0(cur, c) {
            stack.push(e);
            self.extend_up(self.range(e), rest, stack, out);
            stack.pop();
        }
    }

    /// `Λ^n`: every path of degree `n`, sorted.
    pub fn paths_of_degree(&self, n: &Degree) -> Vec<Path> {
        let mut out: Vec<Path> = self
            .vertices()
            .flat_map(|v| self.paths_with_range(v, n))
            .collect();
        out.sort();
        out
    }

    /// Every path with range `v` and degree `<= bound`, sorted.
    pub fn paths_with_range_upto(&self, v: VertexId, bound: &Degree) -> Vec<Path> {
        let mut out: Vec<Path> = bound
            .box_below()
            .iter()
            .flat_map(|n| self.paths_with_range(v, n))
            .collect();
        out.sort();
        out
    }

    /// Every path with degree `<= bound`, sorted.
    pub fn paths_upto(&self, bound: &Degree) -> Vec<Path> {
        let mut out: Vec<Path> = self
            .vertices()
            .flat_map(|v| self.paths_with_range_upto(v, bound))
            .collect();
        out.sort();
        out
    }

    /// Every path with range `v`; finite only on acyclic graphs.
    pub fn all_paths_with_range(&self, v: VertexId) -> Result<Vec<Path>> {
        if !self.is_acyclic() {
            return Err(Error::UnsupportedCyclic);
        }
        let mut out = Vec::new();
        let mut stack = Vec::new();
        self.extend_sorted(v, 0, &mut stack, v, &mut out);
        out.sort();
        Ok(out)
    }

    fn extend_sorted(
        &self,
        cur: VertexId,
        min_color: usize,
        stack: &mut Vec<EdgeId>,
        anchor: VertexId,
        out: &mut Vec<Path>,
    ) {
        out.push(self.assemble(anchor, stack.clone()));
        for c in min_color..self.rank() {
            for &e in self.in0(cur, c) {
                stack.push(e);
                self.extend_sorted(self.source(e), c, stack, anchor, out);
                stack.pop();
            }
        }
    }

    /// The whole path category of an acyclic graph, sorted.
    pub fn all_paths(&self) -> Result<Vec<Path>> {
        let mut out = Vec::new();
        for v in self.vertices() {
            out.extend(self.all_paths_with_range(v)?);
        }
        out.sort();
        Ok(out)
    }

    /// Componentwise maximum degree of any path; acyclic graphs only.
    pub fn max_degree(&self) -> Result<Degree> {
        Ok(self
            .all_paths()?
            .iter()
            .fold(Degree::zero(self.rank()), |acc, p| acc.join(&p.degree)))
    }

    /// `vΛ^{≤n}`: paths of degree `<= n` that cannot be extended in any
    /// coordinate where they fall short of `n`.
    pub fn paths_leq(&self, v: VertexId, n: &Degree) -> Vec<Path> {
        self.paths_with_range_upto(v, n)
            .into_iter()
            .filter(|p| self.in_leq(p, n))
            .collect()
    }

    /// Membership in `Λ^{≤n}`.
    pub fn in_leq(&self, p: &Path, n: &Degree) -> bool {
        p.degree.le(n)
            && (0..self.rank())
                .all(|i| p.degree.coord0(i) >= n.coord0(i) || self.in0(p.source, i).is_empty())
    }

    /// Parses `e.f.g` (any factorisation) or a vertex id.
    pub fn parse_path(&self, text: &str) -> Result<Path> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::EmptyPathLiteral);
        }
        if !text.contains('.') {
            match (self.lookup_vertex(text), self.lookup_edge(text)) {
                (Some(_), Some(_)) => return Err(Error::AmbiguousName(text.to_string())),
                (Some(v), None) => return Ok(self.vertex_path(v)),
                _ => {}
            }
        }
        let edges = text
            .split('.')
            .map(|tok| self.edge(tok.trim()))
            .collect::<Result<Vec<_>>>()?;
        self.normal_form(&edges)
    }

    /// Parses a comma-separated list of path literals; the empty string is
    /// the empty set. The result is sorted and deduplicated.
    pub fn parse_path_set(&self, text: &str) -> Result<Vec<Path>> {
        let set: BTreeSet<Path> = text
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| self.parse_path(t))
            .collect::<Result<_>>()?;
        Ok(set.into_iter().collect())
    }

    pub fn parse_degree(&self, text: &str) -> Result<Degree> {
        let d: Degree = text.parse()?;
        self.check_rank(&d)?;
        Ok(d)
    }
}

/// Sorts and deduplicates a path list.
pub fn canonical(paths: impl IntoIterator<Item = Path>) -> Vec<Path> {
    let set: BTreeSet<Path> = paths.into_iter().collect();
    set.into_iter().collect()
}
