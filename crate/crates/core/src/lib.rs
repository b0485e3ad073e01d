//! Combinatorics of finite higher-rank graphs (k-graphs).
//!
//! A k-graph is entered as a [`Skeleton`]: a k-colored directed graph plus
//! commuting squares. Once validated it becomes a [`KGraph`], on which the
//! path calculus, minimal common extensions, exhaustive-set decisions,
//! finite-dimensional core approximations and Cuntz-Krieger relation
//! checkers operate.
//!
//! Conventions: an edge `e` goes from `source(e)` to `range(e)`, and a path
//! `e f` is composable when `source(e) = range(f)`. Colors are 1-based in the
//! public API.

pub mod boundary;
pub mod core_approx;
pub mod degree;
pub mod error;
pub mod exhaustive;
pub mod extension;
pub mod family;
pub mod fixtures;
pub mod graph;
pub mod matrix;
pub mod path;
pub mod random;
pub mod report;
pub mod skeleton;
pub mod verify;

pub use boundary::{AperiodicityReport, AperiodicityVerdict, BoundaryPath, PrefixTrace};
pub use core_approx::{
    CoreBlock, CoreBlockReport, FnBlock, FnReport, FormalCoreElement, PiClosure,
};
pub use degree::Degree;
pub use error::{Error, Result};
pub use exhaustive::{ExhaustivenessCertificate, StateRecord};
pub use extension::{l_weight, MinimalPair};
pub use family::{
    boundary_representation, extend_generators, restrict, FamilyDocument, GeneratorFamily,
    OperatorFamily,
};
pub use fixtures::{fixture, fixture_graph, omega, product_skeleton};
pub use graph::{EdgeId, KGraph, VertexId};
pub use matrix::SparseMatrix;
pub use path::Path;
pub use skeleton::{validate_skeleton, Skeleton, ValidationReport, Violation, ViolationKind};
pub use verify::{
    check_ck_family, check_classical_relations, check_generator_family, check_variant_relations,
    structural_suite, CheckOptions, CheckReport, Variant,
};
