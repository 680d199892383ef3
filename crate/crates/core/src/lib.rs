//! Exact clique polynomials of small graphs.
//!
//! The crate computes clique polynomials, decides real-rootedness with
//! Sturm sequences over the integers, evaluates the sums-of-polynomials
//! root lemma on concrete families, checks the known clique-root results
//! graph by graph, and scans graph streams for counterexamples.

pub mod cliquepoly;
pub mod graph;
pub mod interlace;
pub mod poly;
pub mod scan;
pub mod theorems;

pub use cliquepoly::{
    check_identities, clique_counts, clique_polynomial, clique_root_report, naive_clique_counts,
    CliqueVector, IdentityReport,
};
pub use graph::{Graph, GraphError, VertexSet};
pub use interlace::{
    analyze_family, parse_family, random_family_stress, LemmaFamilyReport, StressSummary,
};
pub use poly::{
    compare_roots, isolate_real_roots, top_two_roots, AlgebraicRoot, ExtendedRoot, IntPolynomial,
    PolyError, RootReport,
};
pub use scan::{run_scan, Emit, ScanConfig, ScanError, ScanRecord, ScanSummary, Source, Target};
pub use theorems::{verify, ClaimId, PropositionResult};
