//! Serializable reports. Paths appear as display literals (`e.f`, or a
//! vertex id) and every report carries a versioned `schema` tag.

use serde::{Deserialize, Serialize};

use crate::boundary::{AperiodicityReport, AperiodicityVerdict, BoundaryPath, PrefixTrace};
use crate::core_approx::{CoreBlockReport, FnReport, PiClosure};
use crate::degree::Degree;
use crate::exhaustive::ExhaustivenessCertificate;
use crate::extension::MinimalPair;
use crate::graph::KGraph;
use crate::path::Path;

pub const PATHS_SCHEMA: &str = "kgraph.paths.v1";
pub const LAMBDA_MIN_SCHEMA: &str = "kgraph.lambda-min.v1";
pub const EXHAUSTIVE_SCHEMA: &str = "kgraph.exhaustive.v1";
pub const PI_SCHEMA: &str = "kgraph.pi-closure.v1";
pub const CORE_SCHEMA: &str = "kgraph.core.v1";
pub const FN_SCHEMA: &str = "kgraph.fn.v1";
pub const BOUNDARY_SCHEMA: &str = "kgraph.boundary.v1";
pub const PREFIX_SCHEMA: &str = "kgraph.boundary-prefix.v1";
pub const APERIODICITY_SCHEMA: &str = "kgraph.aperiodicity.v1";

fn shown(g: &KGraph, paths: &[Path]) -> Vec<String> {
    g.show_set(paths)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSetReport {
    pub schema: String,
    pub vertex: String,
    pub degree: Degree,
    /// `range`, `source` or `leq`.
    pub mode: String,
    pub paths: Vec<String>,
}

impl PathSetReport {
    pub fn new(g: &KGraph, vertex: &str, degree: &Degree, mode: &str, paths: &[Path]) -> Self {
        PathSetReport {
            schema: PATHS_SCHEMA.into(),
            vertex: vertex.into(),
            degree: degree.clone(),
            mode: mode.into(),
            paths: shown(g, paths),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDto {
    pub alpha: String,
    pub beta: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaMinReport {
    pub schema: String,
    pub lambda: String,
    pub mu: String,
    pub pairs: Vec<PairDto>,
}

impl LambdaMinReport {
    pub fn new(g: &KGraph, lambda: &Path, mu: &Path, pairs: &[MinimalPair]) -> Self {
        LambdaMinReport {
            schema: LAMBDA_MIN_SCHEMA.into(),
            lambda: g.show(lambda),
            mu: g.show(mu),
            pairs: pairs
                .iter()
                .map(|p| PairDto {
                    alpha: g.show(&p.alpha),
                    beta: g.show(&p.beta),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateDto {
    pub vertex: String,
    pub set: Vec<String>,
    pub verdict: bool,
    pub failing_edge: Option<String>,
    pub level: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub schema: String,
    pub vertex: String,
    pub set: Vec<String>,
    pub verdict: bool,
    pub witness: Option<String>,
    pub states: Vec<StateDto>,
}

impl CertificateReport {
    pub fn new(g: &KGraph, cert: &ExhaustivenessCertificate) -> Self {
        CertificateReport {
            schema: EXHAUSTIVE_SCHEMA.into(),
            vertex: g.vertex_name(cert.vertex).into(),
            set: shown(g, &cert.set),
            verdict: cert.verdict,
            witness: cert.witness.as_ref().map(|w| g.show(w)),
            states: cert
                .states
                .iter()
                .map(|s| StateDto {
                    vertex: g.vertex_name(s.vertex).into(),
                    set: shown(g, &s.set),
                    verdict: s.verdict,
                    failing_edge: s.failing_edge.map(|e| g.edge_name(e).to_string()),
                    level: s.level,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiClosureReport {
    pub schema: String,
    pub base: Vec<String>,
    pub closed: Vec<String>,
    pub degree_bound: Degree,
}

impl PiClosureReport {
    pub fn new(g: &KGraph, pc: &PiClosure) -> Self {
        PiClosureReport {
            schema: PI_SCHEMA.into(),
            base: shown(g, &pc.base),
            closed: shown(g, &pc.closed),
            degree_bound: pc.degree_bound.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreBlockDto {
    pub degree: Degree,
    pub source: String,
    pub size: usize,
    pub members: Vec<String>,
    pub t_set: Vec<String>,
    pub extendor: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreReport {
    pub schema: String,
    pub closure: Vec<String>,
    pub blocks: Vec<CoreBlockDto>,
    pub vanishing: Vec<String>,
    pub dimension: usize,
}

impl CoreReport {
    pub fn new(g: &KGraph, pc: &PiClosure, rep: &CoreBlockReport) -> Self {
        CoreReport {
            schema: CORE_SCHEMA.into(),
            closure: shown(g, &pc.closed),
            blocks: rep
                .blocks
                .iter()
                .map(|b| CoreBlockDto {
                    degree: b.degree.clone(),
                    source: g.vertex_name(b.source).into(),
                    size: b.size(),
                    members: shown(g, &b.members),
                    t_set: shown(g, &b.t_set),
                    extendor: g.show(&b.extendor),
                })
                .collect(),
            vanishing: shown(g, &rep.vanishing),
            dimension: rep.total_dimension,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FnBlockDto {
    pub source: String,
    pub degree: Degree,
    pub size: usize,
    pub members: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FnReportDto {
    pub schema: String,
    pub n: Degree,
    pub range: Option<String>,
    pub blocks: Vec<FnBlockDto>,
    pub dimension: usize,
}

impl FnReportDto {
    pub fn new(g: &KGraph, rep: &FnReport, range: Option<&str>) -> Self {
        FnReportDto {
            schema: FN_SCHEMA.into(),
            n: rep.n.clone(),
            range: range.map(str::to_string),
            blocks: rep
                .blocks
                .iter()
                .map(|b| FnBlockDto {
                    source: g.vertex_name(b.source).into(),
                    degree: b.degree.clone(),
                    size: b.members.len(),
                    members: shown(g, &b.members),
                })
                .collect(),
            dimension: rep.dimension,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryPathDto {
    pub range: String,
    pub path: String,
    pub degree: Degree,
    pub n_x: Degree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryReport {
    pub schema: String,
    pub paths: Vec<BoundaryPathDto>,
}

impl BoundaryReport {
    pub fn new(g: &KGraph, paths: &[BoundaryPath]) -> Self {
        BoundaryReport {
            schema: BOUNDARY_SCHEMA.into(),
            paths: paths
                .iter()
                .map(|b| BoundaryPathDto {
                    range: g.vertex_name(b.path.range()).into(),
                    path: g.show(&b.path),
                    degree: b.path.degree().clone(),
                    n_x: b.n_x.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrefixStepDto {
    pub step: usize,
    pub color: usize,
    pub edge: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrefixReport {
    pub schema: String,
    pub vertex: String,
    pub steps: Vec<PrefixStepDto>,
    pub current: String,
    pub degree: Degree,
}

impl PrefixReport {
    pub fn new(g: &KGraph, vertex: &str, trace: &PrefixTrace) -> Self {
        PrefixReport {
            schema: PREFIX_SCHEMA.into(),
            vertex: vertex.into(),
            steps: trace
                .steps
                .iter()
                .map(|s| PrefixStepDto {
                    step: s.step,
                    color: s.color,
                    edge: s.edge.map(|e| g.edge_name(e).to_string()),
                })
                .collect(),
            current: g.show(&trace.current),
            degree: trace.current.degree().clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexAperiodicityDto {
    pub vertex: String,
    pub holds: Option<bool>,
    pub separator: Option<String>,
    pub undistinguished: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AperiodicityDto {
    pub schema: String,
    pub verdict: AperiodicityVerdict,
    pub depth: Degree,
    pub vertices: Vec<VertexAperiodicityDto>,
}

impl AperiodicityDto {
    pub fn new(g: &KGraph, rep: &AperiodicityReport) -> Self {
        AperiodicityDto {
            schema: APERIODICITY_SCHEMA.into(),
            verdict: rep.verdict,
            depth: rep.depth.clone(),
            vertices: rep
                .vertices
                .iter()
                .map(|v| VertexAperiodicityDto {
                    vertex: g.vertex_name(v.vertex).into(),
                    holds: v.holds,
                    separator: v.separator.as_ref().map(|p| g.show(p)),
                    undistinguished: v
                        .undistinguished
                        .iter()
                        .map(|(a, b)| (g.show(a), g.show(b)))
                        .collect(),
                })
                .collect(),
        }
    }
}
