//! Finite presentations of k-graphs: a k-colored graph plus commuting squares.
//!
//! A [`Skeleton`] is the raw, serializable presentation and may be
//! inconsistent; [`validate_skeleton`] lists everything wrong with it. Only a
//! skeleton with an empty violation list can be turned into a
//! [`KGraph`](crate::graph::KGraph).

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

pub const VALIDATION_SCHEMA: &str = "kgraph.validation.v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub id: String,
    /// 1-based color.
    pub color: usize,
    pub range: String,
    pub source: String,
}

/// Asserts `path_a[0] path_a[1] = path_b[0] path_b[1]` as morphisms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SquareRecord {
    pub path_a: [String; 2],
    pub path_b: [String; 2],
}

/// The 1-skeleton of a k-graph together with its factorisation squares.
///
/// This is also the on-disk graph document: `k`, `vertices`, `edges`,
/// `squares`, with unknown keys rejected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Skeleton {
    pub k: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
    pub squares: Vec<SquareRecord>,
}

impl Skeleton {
    pub fn new(k: usize) -> Self {
        Skeleton {
            k,
            vertices: Vec::new(),
            edges: Vec::new(),
            squares: Vec::new(),
        }
    }

    pub fn vertex(mut self, id: impl Into<String>) -> Self {
        self.vertices.push(id.into());
        self
    }

    pub fn edge(
        mut self,
        id: impl Into<String>,
        color: usize,
        range: impl Into<String>,
        source: impl Into<String>,
    ) -> Self {
        self.edges.push(EdgeRecord {
            id: id.into(),
            color,
            range: range.into(),
            source: source.into(),
        });
        self
    }

    /// Adds the square `x y = u w`.
    pub fn square(mut self, x: &str, y: &str, u: &str, w: &str) -> Self {
        self.squares.push(SquareRecord {
            path_a: [x.to_string(), y.to_string()],
            path_b: [u.to_string(), w.to_string()],
        });
        self
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("skeleton serialization cannot fail")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    MissingSquare,
    DuplicateSquare,
    NonBijective,
    CubeFailure,
    DanglingEndpoint,
    DuplicateId,
    InvalidColor,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub ids: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub schema: String,
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        ValidationReport {
            schema: VALIDATION_SCHEMA.to_string(),
            ok: violations.is_empty(),
            violations,
        }
    }

    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.ok {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{:?} [{}]: {}", v.kind, v.ids.join(", "), v.detail)?;
        }
        Ok(())
    }
}

fn violation(kind: ViolationKind, ids: &[&str], detail: impl Into<String>) -> Violation {
    Violation {
        kind,
        ids: ids.iter().map(|s| s.to_string()).collect(),
        detail: detail.into(),
    }
}

/// A well-typed square with its left-hand side in increasing color order.
#[derive(Clone, Copy, Debug)]
struct TypedSquare {
    left: (usize, usize),
    right: (usize, usize),
}

/// Checks that `skeleton` presents a k-graph: every edge endpoint is declared,
/// every square is well typed, squares induce a bijection between composable
/// `(i, j)` and `(j, i)` edge pairs for each `i < j`, and the cube condition
/// holds on every composable triple of three distinct colors.
pub fn validate_skeleton(skeleton: &Skeleton) -> ValidationReport {
    let mut out = Vec::new();

    if skeleton.k == 0 {
        out.push(violation(
            ViolationKind::InvalidColor,
            &[],
            "rank must be positive",
        ));
    }

    let mut vertex_ids: HashSet<&str> = HashSet::new();
    for v in &skeleton.vertices {
        if !vertex_ids.insert(v.as_str()) {
            out.push(violation(
                ViolationKind::DuplicateId,
                &[v],
                "vertex declared twice",
            ));
        }
    }

    let mut edge_index: HashMap<&str, usize> = HashMap::new();
    let mut edge_ok = vec![true; skeleton.edges.len()];
    for (i, e) in skeleton.edges.iter().enumerate() {
        if edge_index.insert(e.id.as_str(), i).is_some() {
            out.push(violation(
                ViolationKind::DuplicateId,
                &[&e.id],
                "edge declared twice",
            ));
            edge_ok[i] = false;
        }
        if vertex_ids.contains(e.id.as_str()) {
            out.push(violation(
                ViolationKind::DuplicateId,
                &[&e.id],
                "edge id coincides with a vertex id",
            ));
        }
        if e.color == 0 || e.color > skeleton.k {
            out.push(violation(
                ViolationKind::InvalidColor,
                &[&e.id],
                format!("color {} outside 1..={}", e.color, skeleton.k),
            ));
            edge_ok[i] = false;
        }
        for (role, end) in [("range", &e.range), ("source", &e.source)] {
            if !vertex_ids.contains(end.as_str()) {
                out.push(violation(
                    ViolationKind::DanglingEndpoint,
                    &[&e.id, end],
                    format!("{role} is not a declared vertex"),
                ));
                edge_ok[i] = false;
            }
        }
    }

    let edges = &skeleton.edges;
    let color = |i: usize| edges[i].color;
    let composable = |a: usize, b: usize| edges[a].source == edges[b].range;

    let mut typed: Vec<TypedSquare> = Vec::new();
    for (si, sq) in skeleton.squares.iter().enumerate() {
        let ids: Vec<&str> = sq
            .path_a
            .iter()
            .chain(sq.path_b.iter())
            .map(String::as_str)
            .collect();
        let mut idx = Vec::with_capacity(4);
        let mut dangling = false;
        for id in &ids {
            match edge_index.get(id) {
                Some(&i) if edge_ok[i] => idx.push(i),
                Some(_) => dangling = true,
                None => {
                    out.push(violation(
                        ViolationKind::DanglingEndpoint,
                        &ids,
                        format!("square {si} names unknown edge `{id}`"),
                    ));
                    dangling = true;
                }
            }
        }
        if dangling {
            continue;
        }
        let (mut left, mut right) = ((idx[0], idx[1]), (idx[2], idx[3]));
        if color(left.0) > color(left.1) {
            std::mem::swap(&mut left, &mut right);
        }
        let (x, y) = left;
        let (u, w) = right;
        let well_typed = color(x) < color(y)
            && color(u) == color(y)
            && color(w) == color(x)
            && composable(x, y)
            && composable(u, w)
            && edges[x].range == edges[u].range
            && edges[y].source == edges[w].source;
        if well_typed {
            typed.push(TypedSquare { left, right });
        } else {
            out.push(violation(
                ViolationKind::NonBijective,
                &ids,
                format!("square {si} is ill-typed: the two sides must be composable, share endpoints and carry swapped colors"),
            ));
        }
    }

    // completeness and bijectivity per ordered color pair
    let mut forward: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut backward: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (ti, sq) in typed.iter().enumerate() {
        forward.entry(sq.left).or_default().push(ti);
        backward.entry(sq.right).or_default().push(ti);
    }
    let live: Vec<usize> = (0..edges.len()).filter(|&i| edge_ok[i]).collect();
    for &a in &live {
        for &b in &live {
            if color(a) == color(b) || !composable(a, b) {
                continue;
            }
            let ids = [edges[a].id.as_str(), edges[b].id.as_str()];
            if color(a) < color(b) {
                match forward.get(&(a, b)).map(Vec::len).unwrap_or(0) {
                    0 => out.push(violation(
                        ViolationKind::MissingSquare,
                        &ids,
                        "composable pair has no square",
                    )),
                    1 => {}
                    n => out.push(violation(
                        ViolationKind::DuplicateSquare,
                        &ids,
                        format!("pair is the left side of {n} squares"),
                    )),
                }
            } else {
                let hits = backward.get(&(a, b)).cloned().unwrap_or_default();
                let distinct: HashSet<(usize, usize)> =
                    hits.iter().map(|&t| typed[t].left).collect();
                if hits.is_empty() {
                    out.push(violation(
                        ViolationKind::MissingSquare,
                        &ids,
                        "composable pair is not the right side of any square",
                    ));
                } else if distinct.len() > 1 {
                    out.push(violation(
                        ViolationKind::NonBijective,
                        &ids,
                        format!("pair is the image of {} different pairs", distinct.len()),
                    ));
                }
            }
        }
    }

    if out.is_empty() {
        let swap = swap_table(&typed);
        check_cubes(skeleton, &live, &swap, &mut out);
    }

    ValidationReport::from_violations(out)
}

/// Bidirectional square map over edge indices.
fn swap_table(typed: &[TypedSquare]) -> HashMap<(usize, usize), (usize, usize)> {
    let mut swap = HashMap::with_capacity(typed.len() * 2);
    for sq in typed {
        swap.insert(sq.left, sq.right);
        swap.insert(sq.right, sq.left);
    }
    swap
}

fn check_cubes(
    skeleton: &Skeleton,
    live: &[usize],
    swap: &HashMap<(usize, usize), (usize, usize)>,
    out: &mut Vec<Violation>,
) {
    let edges = &skeleton.edges;
    let mut by_range: HashMap<&str, Vec<usize>> = HashMap::new();
    for &e in live {
        by_range.entry(edges[e].range.as_str()).or_default().push(e);
    }
    let apply = |t: [usize; 3], pos: usize| -> [usize; 3] {
        let mut t = t;
        let (a, b) = swap[&(t[pos], t[pos + 1])];
        t[pos] = a;
        t[pos + 1] = b;
        t
    };
    let empty = Vec::new();
    for &x in live {
        for &y in by_range.get(edges[x].source.as_str()).unwrap_or(&empty) {
            if edges[y].color == edges[x].color {
                continue;
            }
            for &z in by_range.get(edges[y].source.as_str()).unwrap_or(&empty) {
                let c = [edges[x].color, edges[y].color, edges[z].color];
                if c[2] == c[0] || c[2] == c[1] {
                    continue;
                }
                let t = [x, y, z];
                let one = apply(apply(apply(t, 0), 1), 0);
                let two = apply(apply(apply(t, 1), 0), 1);
                if one != two {
                    out.push(violation(
                        ViolationKind::CubeFailure,
                        &[&edges[x].id, &edges[y].id, &edges[z].id],
                        format!(
                            "rewriting orders disagree: {}.{}.{} vs {}.{}.{}",
                            edges[one[0]].id,
                            edges[one[1]].id,
                            edges[one[2]].id,
                            edges[two[0]].id,
                            edges[two[1]].id,
                            edges[two[2]].id
                        ),
                    ));
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square_edges() -> Skeleton {
        Skeleton::new(2)
            .vertex("v")
            .vertex("a")
            .vertex("b")
            .vertex("w")
            .edge("e", 1, "v", "a")
            .edge("f", 2, "a", "w")
            .edge("g", 2, "v", "b")
            .edge("h", 1, "b", "w")
    }

    // One vertex, three loops of color 1 permuted by the color-2 and color-3
    // loops through non-commuting transpositions.
    fn twisted_cube() -> Skeleton {
        let sigma = [1, 0, 2];
        let tau = [0, 2, 1];
        let mut sk = Skeleton::new(3)
            .vertex("v")
            .edge("b", 2, "v", "v")
            .edge("c", 3, "v", "v")
            .square("b", "c", "c", "b");
        for i in 0..3 {
            sk = sk.edge(format!("a{i}"), 1, "v", "v");
        }
        for i in 0..3 {
            let a = format!("a{i}");
            let s = format!("a{}", sigma[i]);
            let t = format!("a{}", tau[i]);
            sk = sk.square(&a, "b", "b", &s).square(&a, "c", "c", &t);
        }
        sk
    }

    #[test]
    fn square_is_valid() {
        let report = validate_skeleton(&square_edges().square("e", "f", "g", "h"));
        assert!(report.ok, "{report}");
        assert_eq!(report.to_string(), "ok");
    }

    #[test]
    fn missing_square_is_named() {
        let report = validate_skeleton(&square_edges());
        assert!(!report.ok);
        assert!(report.has(ViolationKind::MissingSquare));
        let ids: HashSet<&str> = report
            .violations
            .iter()
            .flat_map(|v| v.ids.iter().map(String::as_str))
            .collect();
        assert!(ids.contains("e") && ids.contains("f"));
    }

    #[test]
    fn same_color_order_on_both_sides_is_not_bijective() {
        let sk = Skeleton::new(2)
            .vertex("v")
            .edge("e", 1, "v", "v")
            .edge("f", 2, "v", "v")
            .square("e", "f", "e", "f");
        let report = validate_skeleton(&sk);
        assert!(report.has(ViolationKind::NonBijective), "{report}");
    }

    #[test]
    fn duplicate_square() {
        let sk = square_edges()
            .square("e", "f", "g", "h")
            .square("g", "h", "e", "f");
        assert!(validate_skeleton(&sk).has(ViolationKind::DuplicateSquare));
    }

    #[test]
    fn dangling_endpoint_and_duplicate_id() {
        let sk = Skeleton::new(1).vertex("v").edge("e", 1, "v", "z");
        assert!(validate_skeleton(&sk).has(ViolationKind::DanglingEndpoint));
        let sk = Skeleton::new(1)
            .vertex("v")
            .edge("e", 1, "v", "v")
            .edge("e", 1, "v", "v");
        assert!(validate_skeleton(&sk).has(ViolationKind::DuplicateId));
        let sk = Skeleton::new(1).vertex("v").edge("e", 2, "v", "v");
        assert!(validate_skeleton(&sk).has(ViolationKind::InvalidColor));
    }

    #[test]
    fn cube_failure_detected() {
        let report = validate_skeleton(&twisted_cube());
        assert!(report.has(ViolationKind::CubeFailure), "{report}");
        assert!(!report.has(ViolationKind::NonBijective), "{report}");
        assert!(!report.has(ViolationKind::MissingSquare), "{report}");
    }

    #[test]
    fn json_roundtrip_rejects_unknown_keys() {
        let sk = square_edges().square("e", "f", "g", "h");
        assert_eq!(Skeleton::from_json(&sk.to_json()).unwrap(), sk);
        let bad = r#"{"k":1,"vertices":[],"edges":[],"squares":[],"extra":1}"#;
        assert!(Skeleton::from_json(bad).is_err());
    }
}
