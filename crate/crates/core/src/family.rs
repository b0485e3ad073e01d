//! Operator families: exact 0/1 partial-permutation matrices assigned to paths.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, KGraph, VertexId};
use crate::matrix::SparseMatrix;
use crate::path::Path;

/// Label of the extra basis vector added by [`gap_mutant`].
pub const GAP_LABEL: &str = "⊥";

/// Square matrices over a labelled basis, one per assigned path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorFamily {
    basis: Vec<String>,
    ops: BTreeMap<Path, SparseMatrix>,
}

/// An [`OperatorFamily`] assigning only vertices and edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorFamily {
    family: OperatorFamily,
}

impl OperatorFamily {
    pub fn new(basis: Vec<String>) -> Self {
        OperatorFamily {
            basis,
            ops: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    /// Assigns `m` to `path`; `m` must be a square partial permutation of the basis size.
    pub fn insert(&mut self, g: &KGraph, path: Path, m: SparseMatrix) -> Result<()> {
        if m.rows() != self.dim() || m.cols() != self.dim() {
            return Err(Error::DimensionMismatch {
                path: g.show(&path),
                rows: m.rows(),
                cols: m.cols(),
                dim: self.dim(),
            });
        }
        if !m.is_partial_permutation() {
            return Err(Error::NotPartialPermutation {
                path: g.show(&path),
            });
        }
        self.ops.insert(path, m);
        Ok(())
    }

    pub fn get(&self, path: &Path) -> Option<&SparseMatrix> {
        self.ops.get(path)
    }

    /// Like [`get`](Self::get), with a missing assignment as an error.
    pub fn op(&self, g: &KGraph, path: &Path) -> Result<&SparseMatrix> {
        self.ops
            .get(path)
            .ok_or_else(|| Error::MissingAssignment(g.show(path)))
    }

    pub fn paths(&self) -> impl Iterator<Item = &Path> {
        self.ops.keys()
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// The family with every assigned matrix replaced by zero.
    pub fn zeroed(&self) -> Self {
        OperatorFamily {
            basis: self.basis.clone(),
            ops: self
                .ops
                .keys()
                .map(|p| (p.clone(), SparseMatrix::zeros(self.dim(), self.dim())))
                .collect(),
        }
    }

    pub fn to_document(&self, g: &KGraph) -> FamilyDocument {
        FamilyDocument {
            basis: self.basis.clone(),
            ops: self
                .ops
                .iter()
                .map(|(p, m)| (g.show(p), m.triplets()))
                .collect(),
        }
    }

    pub fn from_document(g: &KGraph, doc: &FamilyDocument) -> Result<Self> {
        let mut fam = OperatorFamily::new(doc.basis.clone());
        let n = fam.dim();
        for (lit, triplets) in &doc.ops {
            let path = g.parse_path(lit)?;
            if let Some(&(r, c, _)) = triplets.iter().find(|&&(r, c, _)| r >= n || c >= n) {
                return Err(Error::DimensionMismatch {
                    path: lit.clone(),
                    rows: r + 1,
                    cols: c + 1,
                    dim: n,
                });
            }
            fam.insert(g, path, SparseMatrix::from_triplets(n, n, triplets))?;
        }
        Ok(fam)
    }
}

impl GeneratorFamily {
    pub fn new(basis: Vec<String>) -> Self {
        GeneratorFamily {
            family: OperatorFamily::new(basis),
        }
    }

    pub fn insert(&mut self, g: &KGraph, path: Path, m: SparseMatrix) -> Result<()> {
        if path.len() > 1 {
            return Err(Error::Precondition(format!(
                "{} is neither a vertex nor an edge",
                g.show(&path)
            )));
        }
        self.family.insert(g, path, m)
    }

    pub fn set_vertex(&mut self, g: &KGraph, v: VertexId, m: SparseMatrix) -> Result<()> {
        self.insert(g, g.vertex_path(v), m)
    }

    pub fn set_edge(&mut self, g: &KGraph, e: EdgeId, m: SparseMatrix) -> Result<()> {
        self.insert(g, g.edge_path(e), m)
    }

    pub fn dim(&self) -> usize {
        self.family.dim()
    }

    pub fn basis(&self) -> &[String] {
        self.family.basis()
    }

    pub fn vertex(&self, g: &KGraph, v: VertexId) -> Result<&SparseMatrix> {
        self.family.op(g, &g.vertex_path(v))
    }

    pub fn edge(&self, g: &KGraph, e: EdgeId) -> Result<&SparseMatrix> {
        self.family.op(g, &g.edge_path(e))
    }

    pub fn as_family(&self) -> &OperatorFamily {
        &self.family
    }

    /// Checks that every vertex and edge is assigned.
    pub fn check_total(&self, g: &KGraph) -> Result<()> {
        for v in g.vertices() {
            self.vertex(g, v)?;
        }
        for e in g.edges() {
            self.edge(g, e)?;
        }
        Ok(())
    }

    pub fn from_document(g: &KGraph, doc: &FamilyDocument) -> Result<Self> {
        let fam = OperatorFamily::from_document(g, doc)?;
        let mut out = GeneratorFamily::new(fam.basis.clone());
        for (p, m) in fam.ops {
            out.insert(g, p, m)?;
        }
        Ok(out)
    }

    pub fn to_document(&self, g: &KGraph) -> FamilyDocument {
        self.family.to_document(g)
    }
}

/// On-disk family: `basis` labels and, per path literal, `[row, col, value]` triplets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDocument {
    pub basis: Vec<String>,
    pub ops: BTreeMap<String, Vec<(usize, usize, i64)>>,
}

/// Degree bound used when a family or check is not given one: the maximal
/// path degree on acyclic graphs, `(2, …, 2)` otherwise.
pub fn default_bound(g: &KGraph) -> Result<Degree> {
    if g.is_acyclic() {
        g.max_degree()
    } else {
        Ok(Degree::from_vec(vec![2; g.rank()]))
    }
}

/// `S_λ e_x = e_{λx}` on the span of the boundary paths of an acyclic graph.
pub fn boundary_representation(g: &KGraph) -> Result<OperatorFamily> {
    let bps = g.boundary_paths()?;
    let index: HashMap<&Path, usize> = bps.iter().enumerate().map(|(i, b)| (&b.path, i)).collect();
    let mut fam = OperatorFamily::new(bps.iter().map(|b| g.show(&b.path)).collect());
    let n = fam.dim();
    for lambda in g.all_paths()? {
        let triplets: Vec<(usize, usize, i64)> = bps
            .iter()
            .enumerate()
            .filter(|(_, x)| x.path.range() == lambda.source())
            .map(|(i, x)| {
                let lx = g.compose(&lambda, &x.path).expect("r(x) = s(λ)");
                (index[&lx], i, 1)
            })
            .collect();
        fam.insert(g, lambda, SparseMatrix::from_triplets(n, n, &triplets))?;
    }
    Ok(fam)
}

/// The vertex and edge part of a family.
pub fn restrict(g: &KGraph, fam: &OperatorFamily) -> Result<GeneratorFamily> {
    let mut out = GeneratorFamily::new(fam.basis.clone());
    for v in g.vertices() {
        let p = g.vertex_path(v);
        out.insert(g, p.clone(), fam.op(g, &p)?.clone())?;
    }
    for e in g.edges() {
        let p = g.edge_path(e);
        out.insert(g, p.clone(), fam.op(g, &p)?.clone())?;
    }
    Ok(out)
}

fn product_along(
    g: &KGraph,
    gen: &GeneratorFamily,
    range: VertexId,
    edges: &[EdgeId],
) -> Result<SparseMatrix> {
    let mut acc = gen.vertex(g, range)?.clone();
    for &e in edges {
        acc = acc.mul(gen.edge(g, e)?);
    }
    Ok(acc)
}

/// `t_λ = t_{λ_1} ⋯ t_{λ_n}` for every path of degree `<= bound`, computed
/// along the color-sorted factorisation and again along the reverse color
/// order; a disagreement is an error.
pub fn extend_generators(
    g: &KGraph,
    gen: &GeneratorFamily,
    bound: &Degree,
) -> Result<OperatorFamily> {
    extend_impl(g, gen, bound, true)
}

/// [`extend_generators`] along the color-sorted factorisation only.
pub fn extend_unchecked(
    g: &KGraph,
    gen: &GeneratorFamily,
    bound: &Degree,
) -> Result<OperatorFamily> {
    extend_impl(g, gen, bound, false)
}

fn extend_impl(
    g: &KGraph,
    gen: &GeneratorFamily,
    bound: &Degree,
    cross_check: bool,
) -> Result<OperatorFamily> {
    g.check_rank(bound)?;
    gen.check_total(g)?;
    let mut fam = OperatorFamily::new(gen.basis().to_vec());
    for lambda in g.paths_upto(bound) {
        let m = product_along(g, gen, lambda.range(), lambda.edges())?;
        if cross_check && lambda.len() > 1 {
            let pattern: Vec<usize> = (0..g.rank())
                .rev()
                .flat_map(|i| std::iter::repeat_n(i, lambda.degree().coord0(i) as usize))
                .collect();
            let other = g.refactor(&lambda, &pattern);
            if product_along(g, gen, lambda.range(), &other)? != m {
                return Err(Error::FactorisationDependent(g.show(&lambda)));
            }
        }
        fam.insert(g, lambda, m)?;
    }
    Ok(fam)
}

/// The generator family with `t_e` replaced by zero.
pub fn zero_edge(g: &KGraph, gen: &GeneratorFamily, e: EdgeId) -> Result<GeneratorFamily> {
    let mut out = gen.clone();
    out.set_edge(g, e, SparseMatrix::zeros(gen.dim(), gen.dim()))?;
    Ok(out)
}

/// Adds a basis vector `⊥` on which only `t_v` acts, as the identity.
///
/// `v` must receive at least one edge and be the source of none; then `⊥`
/// is a gap below every range projection at `v` and only the exhaustive-set
/// relations notice it.
pub fn gap_mutant(g: &KGraph, gen: &GeneratorFamily, v: VertexId) -> Result<GeneratorFamily> {
    if g.is_sink(v) || g.edges().any(|e| g.source(e) == v) {
        return Err(Error::Precondition(format!(
            "{} must receive edges and be the source of none",
            g.vertex_name(v)
        )));
    }
    let mut basis = gen.basis().to_vec();
    basis.push(GAP_LABEL.to_string());
    let one = SparseMatrix::identity(1);
    let zero = SparseMatrix::zeros(1, 1);
    let mut out = GeneratorFamily::new(basis);
    for p in gen.family.paths() {
        let m = gen.family.ops[p].clone();
        let extra = if p.is_vertex() && p.range() == v {
            &one
        } else {
            &zero
        };
        out.insert(g, p.clone(), m.direct_sum(extra))?;
    }
    Ok(out)
}

/// Two copies of the basis, with `t_e` crossing between them and every
/// other generator acting diagonally. Breaks every square through `e` whose
/// other side avoids `e`.
pub fn twist_edge(g: &KGraph, gen: &GeneratorFamily, e: EdgeId) -> Result<GeneratorFamily> {
    let n = gen.dim();
    let mut basis = gen.basis().to_vec();
    basis.extend(gen.basis().iter().map(|b| format!("{b}′")));
    let mut out = GeneratorFamily::new(basis);
    for p in gen.family.paths() {
        let m = &gen.family.ops[p];
        let doubled = if p.edges() == [e] {
            let mut t = Vec::new();
            for (r, c, v) in m.triplets() {
                t.push((r, c + n, v));
                t.push((r + n, c, v));
            }
            SparseMatrix::from_triplets(2 * n, 2 * n, &t)
        } else {
            m.direct_sum(m)
        };
        out.insert(g, p.clone(), doubled)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture_graph;

    #[test]
    fn square_boundary_rep() {
        let g = fixture_graph("G_SQUARE").unwrap();
        let fam = boundary_representation(&g).unwrap();
        assert_eq!(fam.basis(), &["e.f", "f", "h", "w"]);
        let sv = fam.op(&g, &g.parse_path("v").unwrap()).unwrap();
        assert_eq!(sv.rank(), 1);
        let se = fam.op(&g, &g.parse_path("e").unwrap()).unwrap();
        assert_eq!(se.triplets(), vec![(0, 1, 1)]);
    }

    #[test]
    fn lambda1_boundary_rep() {
        let g = fixture_graph("G_LAMBDA1").unwrap();
        let fam = boundary_representation(&g).unwrap();
        assert_eq!(fam.op(&g, &g.parse_path("v1").unwrap()).unwrap().rank(), 2);
        let s = fam.op(&g, &g.parse_path("λ1").unwrap()).unwrap();
        assert_eq!(s.mul(&s.transpose()).rank(), 1);
    }

    #[test]
    fn line_boundary_rep_is_shift() {
        let g = fixture_graph("OMEGA(1,1)").unwrap();
        let fam = boundary_representation(&g).unwrap();
        assert_eq!(fam.dim(), 2);
        let s = fam.op(&g, &g.parse_path("c1@0").unwrap()).unwrap();
        assert_eq!(s.triplets(), vec![(0, 1, 1)]);
    }

    #[test]
    fn cyclic_refused() {
        let g = fixture_graph("G_LOOP2").unwrap();
        assert!(matches!(
            boundary_representation(&g),
            Err(Error::UnsupportedCyclic)
        ));
    }

    #[test]
    fn restrict_extend_roundtrip() {
        for name in ["G_SQUARE", "G_NONORTH", "OMEGA(2,(1,2))"] {
            let g = fixture_graph(name).unwrap();
            let fam = boundary_representation(&g).unwrap();
            let gen = restrict(&g, &fam).unwrap();
            let back = extend_generators(&g, &gen, &g.max_degree().unwrap()).unwrap();
            assert_eq!(back, fam, "{name}");
        }
    }

    #[test]
    fn twisted_square_is_factorisation_dependent() {
        let g = fixture_graph("G_SQUARE").unwrap();
        let gen = restrict(&g, &boundary_representation(&g).unwrap()).unwrap();
        let bad = twist_edge(&g, &gen, g.edge("h").unwrap()).unwrap();
        assert!(matches!(
            extend_generators(&g, &bad, &"1,1".parse().unwrap()),
            Err(Error::FactorisationDependent(_))
        ));
        assert!(extend_unchecked(&g, &bad, &"1,1".parse().unwrap()).is_ok());
    }

    #[test]
    fn gap_mutant_needs_a_receiving_leaf() {
        let g = fixture_graph("G_LAMBDA1").unwrap();
        let gen = restrict(&g, &boundary_representation(&g).unwrap()).unwrap();
        let v1 = g.vertex("v1").unwrap();
        let m = gap_mutant(&g, &gen, v1).unwrap();
        assert_eq!(m.dim(), gen.dim() + 1);
        assert!(gap_mutant(&g, &gen, g.vertex("u").unwrap()).is_err());
    }

    #[test]
    fn document_roundtrip() {
        let g = fixture_graph("G_NONORTH").unwrap();
        let fam = boundary_representation(&g).unwrap();
        let doc = fam.to_document(&g);
        let text = serde_json::to_string(&doc).unwrap();
        let parsed: FamilyDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, doc);
        assert_eq!(OperatorFamily::from_document(&g, &parsed).unwrap(), fam);
        assert_eq!(serde_json::to_string(&parsed).unwrap(), text);
    }

    #[test]
    fn insert_validates() {
        let g = fixture_graph("G_SQUARE").unwrap();
        let mut fam = OperatorFamily::new(vec!["x".into()]);
        let v = g.parse_path("v").unwrap();
        assert!(fam
            .insert(&g, v.clone(), SparseMatrix::identity(2))
            .is_err());
        assert!(fam
            .insert(&g, v, SparseMatrix::from_triplets(1, 1, &[(0, 0, 2)]))
            .is_err());
        let mut gen = GeneratorFamily::new(vec!["x".into()]);
        assert!(gen
            .insert(&g, g.parse_path("e.f").unwrap(), SparseMatrix::identity(1))
            .is_err());
    }
}
