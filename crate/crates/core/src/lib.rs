//! Good-neighbor fault tolerance of undirected graphs.
//!
//! This crate computes, for a connected graph `G` and a non-negative order
//! `g`:
//!
//! * the g-good-neighbor connectivity `kappa_g(G)` — the size of a smallest
//!   vertex cut whose removal leaves every surviving vertex with at least
//!   `g` surviving neighbors,
//! * the g-good-neighbor cut-component number `c_g(G)` — the cheapest way to
//!   buy an "unresolvable" region: a cut plus either a whole small component
//!   or one side of a balanced degree-feasible split of a component,
//! * the g-good-neighbor diagnosability `t_g(G)` under the PMC test model,
//!   via the `c_g(G) - 1` formula when it applies and via an exhaustive
//!   syndrome/pair oracle on small graphs,
//! * upper bounds for `t_g` of Cartesian products in terms of the factors.
//!
//! Every searched quantity comes with a machine-checkable certificate
//! (the cut, the component or partition realizing the value, or the
//! indistinguishable pair of fault sets), and every formula-driven path has
//! an independent brute-force counterpart used by the test suites.
//!
//! Graphs are immutable; removal is always expressed by masking with a
//! [`VertexSet`], never by rebuilding, because the search loops mask
//! millions of candidate cuts.

pub mod connectivity;
pub mod diag;
pub mod error;
pub mod family;
pub mod gc;
pub mod graph;
pub mod pmc;
mod scan;
pub mod set;

pub use connectivity::{is_gn_cut, is_gn_faulty_set, kappa, GnCutResult};
pub use diag::{
    product_bounds, t_g_exists, t_g_formula, t_g_oracle, CaseTag, DiagMethod,
    DiagnosabilityResult, ProductBoundReport, SplitBound, TgValue,
};
pub use error::Error;
pub use family::{cartesian_product, make_family, FamilySpec, DEFAULT_VERTEX_CAP};
pub use gc::{
    balanced_partition, best_certificate_for_cut, classify, gc_number, GcCertificate, GcKind,
    GcResult, GcValue, GraphClass,
};
pub use graph::Graph;
pub use pmc::{
    count_consistent, distinguishable_criterion, distinguishable_oracle, Syndrome, TestAssignment,
};
pub use set::VertexSet;

pub type Result<T> = std::result::Result<T, Error>;
