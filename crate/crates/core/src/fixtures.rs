//! Built-in example graphs, the model graphs `Ω_{k,m}`, and cartesian products.

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::graph::KGraph;
use crate::skeleton::{validate_skeleton, Skeleton};

pub const FIXTURE_NAMES: [&str; 4] = ["G_LAMBDA1", "G_SQUARE", "G_LOOP2", "G_NONORTH"];

/// Looks up a fixture by name. Besides [`FIXTURE_NAMES`], accepts
/// `OMEGA(k,m)` with `m` a single number or a parenthesised vector.
pub fn fixture(name: &str) -> Result<Skeleton> {
    let name = name.trim();
    match name {
        "G_LAMBDA1" => Ok(lambda1()),
        "G_SQUARE" => Ok(square()),
        "G_LOOP2" => Ok(loop2()),
        "G_NONORTH" => Ok(nonorth()),
        _ => parse_omega(name).ok_or_else(|| Error::UnknownFixture(name.to_string())),
    }
}

pub fn fixture_graph(name: &str) -> Result<KGraph> {
    KGraph::new(fixture(name)?)
}

fn parse_omega(name: &str) -> Option<Skeleton> {
    let inner = name.strip_prefix("OMEGA(")?.strip_suffix(')')?;
    let (k, m) = inner.split_once(',')?;
    let k: usize = k.trim().parse().ok()?;
    let m: Degree = m.parse().ok()?;
    (k >= 1 && m.rank() == k).then(|| omega(&m))
}

fn lambda1() -> Skeleton {
    Skeleton::new(2)
        .vertex("v1")
        .vertex("u")
        .vertex("w")
        .edge("λ1", 1, "v1", "u")
        .edge("µ1", 2, "v1", "w")
}

fn square() -> Skeleton {
    Skeleton::new(2)
        .vertex("v")
        .vertex("a")
        .vertex("b")
        .vertex("w")
        .edge("e", 1, "v", "a")
        .edge("f", 2, "a", "w")
        .edge("g", 2, "v", "b")
        .edge("h", 1, "b", "w")
        .square("e", "f", "g", "h")
}

fn loop2() -> Skeleton {
    Skeleton::new(2)
        .vertex("v")
        .edge("e", 1, "v", "v")
        .edge("f", 2, "v", "v")
        .square("e", "f", "f", "e")
}

// A second square at v sharing no edges with the first, so that e′ and g
// have no common extension while e and g do.
fn nonorth() -> Skeleton {
    square()
        .vertex("a′")
        .vertex("b′")
        .vertex("w′")
        .edge("e′", 1, "v", "a′")
        .edge("f′", 2, "a′", "w′")
        .edge("g′", 2, "v", "b′")
        .edge("h′", 1, "b′", "w′")
        .square("e′", "f′", "g′", "h′")
}

fn omega_vertex(p: &[u32]) -> String {
    p.iter().map(u32::to_string).collect::<Vec<_>>().join("_")
}

/// `Ω_{k,m}`: vertices `p <= m`, one color-`i` edge from `p + e_i` to `p`.
///
/// Vertex `p` is named by its coordinates joined with `_`; the color-`i`
/// edge with range `p` is `c{i}@{p}`.
pub fn omega(m: &Degree) -> Skeleton {
    let k = m.rank();
    let points = m.box_below();
    let mut sk = Skeleton::new(k);
    for p in &points {
        sk = sk.vertex(omega_vertex(p.coords()));
    }
    let edge_id = |p: &Degree, i: usize| format!("c{}@{}", i + 1, omega_vertex(p.coords()));
    let step = |p: &Degree, i: usize| p.add(&Degree::unit(k, i + 1));
    for p in &points {
        for i in 0..k {
            let q = step(p, i);
            if q.le(m) {
                sk = sk.edge(
                    edge_id(p, i),
                    i + 1,
                    omega_vertex(p.coords()),
                    omega_vertex(q.coords()),
                );
            }
        }
    }
    for p in &points {
        for i in 0..k {
            for j in i + 1..k {
                let (pi, pj) = (step(p, i), step(p, j));
                if step(&pi, j).le(m) {
                    sk = sk.square(
                        &edge_id(p, i),
                        &edge_id(&pi, j),
                        &edge_id(p, j),
                        &edge_id(&pj, i),
                    );
                }
            }
        }
    }
    sk
}

/// The cartesian product of two k-graphs, of rank `k_a + k_b`.
///
/// Vertex `(x, y)` is named `x*y`; an edge `e` of `a` at vertex `y` of `b`
/// is `e*y`, and a vertex `x` of `a` with an edge `f` of `b` is `x*f`, with
/// its color shifted by `k_a`.
pub fn product_skeleton(a: &Skeleton, b: &Skeleton) -> Result<Skeleton> {
    for s in [a, b] {
        let report = validate_skeleton(s);
        if !report.ok {
            return Err(Error::InvalidSkeleton(Box::new(report)));
        }
    }
    let pair = |x: &str, y: &str| format!("{x}*{y}");
    let mut out = Skeleton::new(a.k + b.k);
    for x in &a.vertices {
        for y in &b.vertices {
            out = out.vertex(pair(x, y));
        }
    }
    for e in &a.edges {
        for y in &b.vertices {
            out = out.edge(
                pair(&e.id, y),
                e.color,
                pair(&e.range, y),
                pair(&e.source, y),
            );
        }
    }
    for x in &a.vertices {
        for f in &b.edges {
            out = out.edge(
                pair(x, &f.id),
                f.color + a.k,
                pair(x, &f.range),
                pair(x, &f.source),
            );
        }
    }
    for sq in &a.squares {
        for y in &b.vertices {
            out = out.square(
                &pair(&sq.path_a[0], y),
                &pair(&sq.path_a[1], y),
                &pair(&sq.path_b[0], y),
                &pair(&sq.path_b[1], y),
            );
        }
    }
    for x in &a.vertices {
        for sq in &b.squares {
            out = out.square(
                &pair(x, &sq.path_a[0]),
                &pair(x, &sq.path_a[1]),
                &pair(x, &sq.path_b[0]),
                &pair(x, &sq.path_b[1]),
            );
        }
    }
    for e in &a.edges {
        for f in &b.edges {
            out = out.square(
                &pair(&e.id, &f.range),
                &pair(&e.source, &f.id),
                &pair(&e.range, &f.id),
                &pair(&e.id, &f.source),
            );
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(s: &Skeleton) -> (usize, usize, usize) {
        (s.vertices.len(), s.edges.len(), s.squares.len())
    }

    #[test]
    fn every_fixture_validates() {
        for name in FIXTURE_NAMES.iter().copied().chain([
            "OMEGA(1,3)",
            "OMEGA(2,(1,1))",
            "OMEGA(3,(1,1,1))",
            "OMEGA(1,0)",
        ]) {
            let report = validate_skeleton(&fixture(name).unwrap());
            assert!(report.ok, "{name}: {report}");
        }
    }

    #[test]
    fn fixture_sizes() {
        assert_eq!(counts(&fixture("OMEGA(1,3)").unwrap()), (4, 3, 0));
        assert_eq!(counts(&fixture("G_LAMBDA1").unwrap()), (3, 2, 0));
        assert_eq!(counts(&fixture("G_LOOP2").unwrap()), (1, 2, 1));
        assert_eq!(counts(&fixture("OMEGA(2,(1,1))").unwrap()), (4, 4, 1));
        assert_eq!(counts(&fixture("OMEGA(3,(1,1,1))").unwrap()), (8, 12, 6));
    }

    #[test]
    fn unknown_names() {
        for bad in ["G_NOPE", "OMEGA(2,3)", "OMEGA(x,1)", "OMEGA(1,3"] {
            assert!(
                matches!(fixture(bad), Err(Error::UnknownFixture(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn products() {
        let w = fixture("OMEGA(1,1)").unwrap();
        let p = product_skeleton(&w, &w).unwrap();
        assert_eq!(counts(&p), (4, 4, 1));
        assert!(validate_skeleton(&p).ok);

        let l = product_skeleton(
            &fixture("G_LAMBDA1").unwrap(),
            &fixture("OMEGA(1,0)").unwrap(),
        )
        .unwrap();
        assert_eq!(l.k, 3);
        assert_eq!(counts(&l), (3, 2, 0));
        assert!(l.edges.iter().all(|e| e.color < 3));

        let loops =
            product_skeleton(&fixture("G_LOOP2").unwrap(), &fixture("G_LOOP2").unwrap()).unwrap();
        assert_eq!(counts(&loops), (1, 4, 6));
        assert!(validate_skeleton(&loops).ok);
    }

    #[test]
    fn product_rejects_invalid_input() {
        let mut bad = fixture("G_SQUARE").unwrap();
        bad.squares.clear();
        assert!(matches!(
            product_skeleton(&bad, &fixture("G_LOOP2").unwrap()),
            Err(Error::InvalidSkeleton(_))
        ));
    }
}
