//! Human-readable renderings of the reports.

use std::fmt::Write;

use kgraph_core::report::{
    AperiodicityDto, BoundaryReport, CertificateReport, CoreReport, FnReportDto, LambdaMinReport,
    PrefixReport,
};
use kgraph_core::{CheckReport, ValidationReport};

fn braces(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

pub fn validation(r: &ValidationReport) -> String {
    if r.ok {
        return "valid".into();
    }
    let mut out = String::from("invalid");
    for v in &r.violations {
        let _ = write!(out, "\n  {:?} [{}]: {}", v.kind, v.ids.join(", "), v.detail);
    }
    out
}

pub fn lambda_min(r: &LambdaMinReport) -> String {
    if r.pairs.is_empty() {
        return format!("Λ^min({}, {}) = ∅", r.lambda, r.mu);
    }
    let pairs: Vec<String> = r
        .pairs
        .iter()
        .map(|p| format!("({}, {})", p.alpha, p.beta))
        .collect();
    format!("Λ^min({}, {}) = {}", r.lambda, r.mu, braces(&pairs))
}

pub fn certificate(r: &CertificateReport) -> String {
    let set = braces(&r.set);
    match &r.witness {
        None if r.verdict => format!(
            "{set} is exhaustive at {} ({} states)",
            r.vertex,
            r.states.len()
        ),
        None => format!("{set} is not exhaustive at {}", r.vertex),
        Some(w) => format!(
            "{set} is not exhaustive at {}\nwitness: {w} has no common extension with any member",
            r.vertex
        ),
    }
}

pub fn core(r: &CoreReport) -> String {
    let mut out = format!("ΠE = {}\n", braces(&r.closure));
    for b in &r.blocks {
        let _ = writeln!(
            out,
            "block d={:?} s={} size={}: {} (T = {}, extendor {})",
            b.degree.coords(),
            b.source,
            b.size,
            braces(&b.members),
            braces(&b.t_set),
            b.extendor
        );
    }
    let _ = write!(
        out,
        "vanishing: {}\ndimension: {}",
        braces(&r.vanishing),
        r.dimension
    );
    out
}

pub fn f_n(r: &FnReportDto) -> String {
    let mut out = String::new();
    for b in &r.blocks {
        let _ = writeln!(
            out,
            "s={} d={:?} size={}: {}",
            b.source,
            b.degree.coords(),
            b.size,
            braces(&b.members)
        );
    }
    let _ = write!(out, "dimension: {}", r.dimension);
    out
}

pub fn boundary(r: &BoundaryReport) -> String {
    r.paths
        .iter()
        .map(|p| {
            format!(
                "{}  d={:?} n_x={:?}",
                p.path,
                p.degree.coords(),
                p.n_x.coords()
            )
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn prefix(r: &PrefixReport) -> String {
    let mut out = String::new();
    for s in &r.steps {
        let _ = writeln!(
            out,
            "step {} color {}: {}",
            s.step,
            s.color,
            s.edge.as_deref().unwrap_or("none")
        );
    }
    let _ = write!(out, "prefix: {}", r.current);
    out
}

pub fn aperiodicity(r: &AperiodicityDto) -> String {
    let verdict = serde_json::to_value(r.verdict)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default();
    let mut out = verdict;
    for v in &r.vertices {
        let _ = write!(
            out,
            "\n  {}: separator {}, {} undistinguished pairs",
            v.vertex,
            v.separator.as_deref().unwrap_or("none"),
            v.undistinguished.len()
        );
    }
    out
}

pub fn check(r: &CheckReport) -> String {
    let mut out = String::new();
    for rel in &r.relations {
        let status = if rel.passed() { "ok" } else { "FAILED" };
        let _ = write!(
            out,
            "({}) {status}: {} checked, {} failed",
            rel.id, rel.checked, rel.failures
        );
        for c in &rel.counterexamples {
            let _ = write!(out, "\n    [{}]", c.subjects.join(", "));
            if let Some((row, col)) = c.position {
                let _ = write!(out, " differs at ({row},{col})");
            }
            if let Some((a, b)) = c.ranks {
                let _ = write!(out, " ranks {a} vs {b}");
            }
        }
        out.push('\n');
    }
    let _ = write!(
        out,
        "{}{}",
        if r.passed { "pass" } else { "fail" },
        if r.vertices_nonzero {
            ""
        } else {
            " (some vertex projection is zero)"
        }
    );
    out
}
