//! Boundary paths, the step-by-step prefix construction, and aperiodicity.
//!
//! On an acyclic graph every boundary path has finite degree, and it is a
//! boundary path exactly when its source receives no edges. Cyclic graphs
//! have infinite boundary paths, which are only sampled here.

use serde::{Deserialize, Serialize};

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, KGraph, VertexId};
use crate::path::{canonical, Path};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundaryPath {
    pub path: Path,
    /// The coordinatewise-greedy minimal `n_x`.
    pub n_x: Degree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixStep {
    /// 1-based step index.
    pub step: usize,
    /// 1-based color tried at this step.
    pub color: usize,
    pub edge: Option<EdgeId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixTrace {
    pub steps: Vec<PrefixStep>,
    pub current: Path,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum AperiodicityVerdict {
    ExactHolds,
    ExactFails,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexAperiodicity {
    pub vertex: VertexId,
    /// `Some` on acyclic graphs only.
    pub holds: Option<bool>,
    /// The boundary path (or, for cyclic graphs, the sampled prefix) that
    /// separates the most pairs.
    pub separator: Option<Path>,
    /// Pairs `λ != µ ∈ Λv` not separated by `separator`.
    pub undistinguished: Vec<(Path, Path)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperiodicityReport {
    pub verdict: AperiodicityVerdict,
    pub depth: Degree,
    pub vertices: Vec<VertexAperiodicity>,
}

impl KGraph {
    /// Whether `n_x` witnesses that the finite path `x` is a boundary path:
    /// `n_x <= n <= d(x)` and `n_i = d(x)_i` force `x(n)Λ^{e_i} = ∅`.
    pub fn is_boundary_witness(&self, x: &Path, n_x: &Degree) -> bool {
        let d = x.degree();
        n_x.le(d)
            && d.box_between(n_x).iter().all(|n| {
                let at = self.vertex_at(x, n);
                (0..self.rank()).all(|i| n.coord0(i) != d.coord0(i) || self.in0(at, i).is_empty())
            })
    }

    /// A minimal `n_x` for `x`, or `None` when `x` is not a boundary path.
    pub fn minimal_n_x(&self, x: &Path) -> Option<Degree> {
        let mut n = x.degree().clone();
        if !self.is_boundary_witness(x, &n) {
            return None;
        }
        for i in 0..self.rank() {
            while n.coord0(i) > 0 {
                *n.coord0_mut(i) -= 1;
                if !self.is_boundary_witness(x, &n) {
                    *n.coord0_mut(i) += 1;
                    break;
                }
            }
        }
        Some(n)
    }

    /// `Λ^{≤∞}` of an acyclic graph, grouped by range in vertex order.
    pub fn boundary_paths(&self) -> Result<Vec<BoundaryPath>> {
        let mut out = Vec::new();
        for v in self.vertices() {
            out.extend(self.boundary_paths_at(v)?);
        }
        Ok(out)
    }

    /// `vΛ^{≤∞}` of an acyclic graph.
    pub fn boundary_paths_at(&self, v: VertexId) -> Result<Vec<BoundaryPath>> {
        Ok(self
            .all_paths_with_range(v)?
            .into_iter()
            .filter(|p| self.is_sink(p.source()))
            .map(|path| {
                let n_x = self
                    .minimal_n_x(&path)
                    .expect("maximal paths are boundary paths");
                BoundaryPath { path, n_x }
            })
            .collect())
    }

    /// Runs `steps` rounds of the construction that, at step `i`, appends
    /// the first edge of color `((i - 1) mod k) + 1` with range equal to the
    /// current source, if there is one.
    pub fn boundary_prefix(&self, v: VertexId, steps: usize) -> PrefixTrace {
        let mut current = self.vertex_path(v);
        let mut trace = Vec::with_capacity(steps);
        for step in 1..=steps {
            let color0 = (step - 1) % self.rank();
            let edge = self.in0(current.source(), color0).first().copied();
            if let Some(e) = edge {
                current = self
                    .compose(&current, &self.edge_path(e))
                    .expect("edge chosen at the current source");
            }
            trace.push(PrefixStep {
                step,
                color: color0 + 1,
                edge,
            });
        }
        PrefixTrace {
            steps: trace,
            current,
        }
    }

    /// Condition (B): each `v` has a boundary path `x` with `λx != µx` for
    /// all distinct `λ, µ ∈ Λv`. Exact on acyclic graphs; on cyclic graphs
    /// the prefixes `vΛ^{≤depth}` are sampled and the verdict is inconclusive.
    pub fn aperiodicity_report(&self, depth: &Degree) -> Result<AperiodicityReport> {
        if depth.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: depth.rank(),
            });
        }
        let acyclic = self.is_acyclic();
        let mut vertices = Vec::new();
        for v in self.vertices() {
            let (sources, separators) = if acyclic {
                let all = self.all_paths()?;
                let into_v: Vec<Path> = all.into_iter().filter(|p| p.source() == v).collect();
                let xs = self
                    .boundary_paths_at(v)?
                    .into_iter()
                    .map(|b| b.path)
                    .collect();
                (into_v, xs)
            } else {
                let into_v = canonical(
                    depth
                        .box_below()
                        .iter()
                        .flat_map(|n| self.paths_with_source(v, n)),
                );
                (into_v, self.paths_leq(v, depth))
            };
            let mut best: Option<(Path, Vec<(Path, Path)>)> = None;
            for x in separators {
                let bad = self.undistinguished_pairs(&sources, &x, !acyclic);
                if best.as_ref().is_none_or(|(_, b)| bad.len() < b.len()) {
                    best = Some((x, bad));
                }
            }
            let (separator, undistinguished) = match best {
                Some((x, bad)) => (Some(x), bad),
                None => (None, Vec::new()),
            };
            vertices.push(VertexAperiodicity {
                vertex: v,
                holds: acyclic.then(|| separator.is_some() && undistinguished.is_empty()),
                separator,
                undistinguished,
            });
        }
        let verdict = if !acyclic {
            AperiodicityVerdict::Inconclusive
        } else if vertices.iter().all(|r| r.holds == Some(true)) {
            AperiodicityVerdict::ExactHolds
        } else {
            AperiodicityVerdict::ExactFails
        };
        Ok(AperiodicityReport {
            verdict,
            depth: depth.clone(),
            vertices,
        })
    }

    // With `truncated`, `λx` and `µx` count as equal when they agree up to
    // the smaller of their degrees; otherwise they must be equal paths.
    fn undistinguished_pairs(
        &self,
        sources: &[Path],
        x: &Path,
        truncated: bool,
    ) -> Vec<(Path, Path)> {
        let zero = Degree::zero(self.rank());
        let composed: Vec<Path> = sources
            .iter()
            .map(|l| self.compose(l, x).expect("sources end at r(x)"))
            .collect();
        let mut out = Vec::new();
        for i in 0..sources.len() {
            for j in i + 1..sources.len() {
                let (a, b) = (&composed[i], &composed[j]);
                let same = if truncated {
                    let w = a.degree().meet(b.degree());
                    a.range() == b.range()
                        && self.segment_clamped(a, &zero, &w) == self.segment_clamped(b, &zero, &w)
                } else {
                    a == b
                };
                if same {
                    out.push((sources[i].clone(), sources[j].clone()));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture_graph;

    fn shown(g: &KGraph, bs: &[BoundaryPath]) -> Vec<String> {
        bs.iter().map(|b| g.show(&b.path)).collect()
    }

    #[test]
    fn lambda1_boundary() {
        let g = fixture_graph("G_LAMBDA1").unwrap();
        let bs = g.boundary_paths().unwrap();
        assert_eq!(shown(&g, &bs), vec!["µ1", "λ1", "u", "w"]);
        for b in &bs {
            assert!(g.is_boundary_witness(&b.path, &b.n_x));
        }
        let lambda = &bs[1];
        assert_eq!(lambda.n_x, "(1,0)".parse().unwrap());
    }

    #[test]
    fn square_boundary() {
        let g = fixture_graph("G_SQUARE").unwrap();
        let bs = g.boundary_paths().unwrap();
        assert_eq!(shown(&g, &bs), vec!["e.f", "f", "h", "w"]);
    }

    #[test]
    fn line_boundary() {
        let g = fixture_graph("OMEGA(1,3)").unwrap();
        let at0 = g.boundary_paths_at(g.vertex("0").unwrap()).unwrap();
        assert_eq!(at0.len(), 1);
        assert_eq!(at0[0].path.degree(), &Degree::from_vec(vec![3]));
    }

    #[test]
    fn cyclic_rejected() {
        let g = fixture_graph("G_LOOP2").unwrap();
        assert!(matches!(g.boundary_paths(), Err(Error::UnsupportedCyclic)));
    }

    #[test]
    fn prefix_examples() {
        let g = fixture_graph("G_LOOP2").unwrap();
        let v = g.vertex("v").unwrap();
        assert_eq!(
            g.boundary_prefix(v, 4).current.degree(),
            &"(2,2)".parse().unwrap()
        );
        assert!(g.boundary_prefix(v, 0).current.is_vertex());

        let l = fixture_graph("G_LAMBDA1").unwrap();
        let v1 = l.vertex("v1").unwrap();
        let t = l.boundary_prefix(v1, 2);
        assert_eq!(l.show(&t.current), "λ1");
        assert!(t.steps[0].edge.is_some());
        assert!(t.steps[1].edge.is_none());
    }

    #[test]
    fn aperiodicity_examples() {
        for name in ["G_LAMBDA1", "G_SQUARE"] {
            let g = fixture_graph(name).unwrap();
            let r = g.aperiodicity_report(&"(2,2)".parse().unwrap()).unwrap();
            assert_eq!(r.verdict, AperiodicityVerdict::ExactHolds, "{name}");
        }
        let g = fixture_graph("G_LOOP2").unwrap();
        let r = g.aperiodicity_report(&"(3,3)".parse().unwrap()).unwrap();
        assert_eq!(r.verdict, AperiodicityVerdict::Inconclusive);
        let e = g.parse_path("e").unwrap();
        let f = g.parse_path("f").unwrap();
        assert!(r.vertices[0].undistinguished.contains(&(e, f)));
    }
}
