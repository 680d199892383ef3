//! Per-graph verifiers for the known clique-root results.
//!
//! Each verifier decides whether its hypothesis applies to the given graph
//! and, only if it does, whether the conclusion holds. Everything is exact.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cliquepoly::clique_counts;
use crate::graph::Graph;
use crate::poly::{compare_roots, isolate_real_roots, ExtendedRoot, IntPolynomial, RootReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ClaimId {
    Tree,
    Forest,
    TriangleFree,
    K4Chordal,
    K5Bichordal,
    ChordalMult,
}

impl ClaimId {
    pub const ALL: [ClaimId; 6] = [
        ClaimId::Tree,
        ClaimId::Forest,
        ClaimId::TriangleFree,
        ClaimId::K4Chordal,
        ClaimId::K5Bichordal,
        ClaimId::ChordalMult,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Tree => "TREE",
            ClaimId::Forest => "FOREST",
            ClaimId::TriangleFree => "TRIANGLE_FREE",
            ClaimId::K4Chordal => "K4_CHORDAL",
            ClaimId::K5Bichordal => "K5_BICHORDAL",
            ClaimId::ChordalMult => "CHORDAL_MULT",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown claim id {0:?} (expected one of TREE, FOREST, TRIANGLE_FREE, K4_CHORDAL, K5_BICHORDAL, CHORDAL_MULT)")]
pub struct UnknownClaim(pub String);

impl FromStr for ClaimId {
    type Err = UnknownClaim;

    /// Case-insensitive; `-` is accepted in place of `_`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str() == norm)
            .ok_or_else(|| UnknownClaim(s.to_string()))
    }
}

fn serialize_rational<S: Serializer>(v: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(q) => s.serialize_str(&q.to_string()),
        None => s.serialize_none(),
    }
}

/// Facts gathered while checking a claim. Fields a verifier does not need
/// stay `None` and are left out of the JSON.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimDetail {
    pub poly: IntPolynomial,
    pub n: usize,
    pub m: usize,
    pub omega: usize,
    pub connected: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chordal: Option<bool>,
    pub real_rooted: bool,
    pub minus_one_multiplicity: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub largest_root: Option<ExtendedRoot>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub second_root: Option<ExtendedRoot>,
    /// `n² - 4m`, the discriminant of `1 + nx + mx²`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discriminant: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub one_plus_x_divides: Option<bool>,
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "serialize_rational"
    )]
    pub bound: Option<BigRational>,
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "serialize_rational"
    )]
    pub tight_bound: Option<BigRational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PropositionResult {
    pub claim_id: ClaimId,
    pub hypothesis_met: bool,
    /// Present exactly when `hypothesis_met`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conclusion_holds: Option<bool>,
    pub detail: ClaimDetail,
}

struct Facts {
    report: RootReport,
    detail: ClaimDetail,
}

fn facts(g: &Graph) -> Facts {
    let counts = clique_counts(g);
    let poly = counts.to_polynomial();
    let report = isolate_real_roots(&poly).expect("clique polynomials are nonzero");
    let minus_one = BigRational::from_integer(BigInt::from(-1));
    let detail = ClaimDetail {
        n: g.n(),
        m: g.edge_count(),
        omega: counts.clique_number(),
        connected: g.is_connected(),
        kappa: None,
        chordal: None,
        real_rooted: report.is_real_rooted,
        minus_one_multiplicity: report.multiplicity_of(&minus_one),
        largest_root: None,
        second_root: None,
        discriminant: None,
        one_plus_x_divides: None,
        bound: None,
        tight_bound: None,
        note: None,
        poly,
    };
    Facts { report, detail }
}

fn result(
    claim_id: ClaimId,
    hypothesis_met: bool,
    holds: bool,
    detail: ClaimDetail,
) -> PropositionResult {
    PropositionResult {
        claim_id,
        hypothesis_met,
        conclusion_holds: hypothesis_met.then_some(holds),
        detail,
    }
}

fn neg_reciprocal(k: usize) -> BigRational {
    BigRational::new(BigInt::from(-1), BigInt::from(k))
}

/// Trees on `n ≥ 2` vertices: `C = (1+x)(1+(n-1)x)`, `R = -1/(n-1)`, `r = -1`.
pub fn verify_tree(g: &Graph) -> PropositionResult {
    let Facts { report, mut detail } = facts(g);
    let n = g.n();
    let hyp = n >= 2 && g.is_tree();
    let mut holds = false;
    if hyp {
        let expected = &IntPolynomial::linear(1, 1) * &IntPolynomial::linear(1, n as i64 - 1);
        let (big_r, r) = report
            .top_two()
            .expect("trees with an edge have real roots");
        holds = detail.poly == expected
            && big_r.equals_rational(&neg_reciprocal(n - 1))
            && r.equals_rational(&BigRational::from_integer(BigInt::from(-1)));
        detail.largest_root = Some(big_r);
        detail.second_root = Some(r);
    }
    result(ClaimId::Tree, hyp, holds, detail)
}

/// Forests whose components all have at least two vertices: the largest
/// clique root is at least `-1/(n_min - 1)`, `n_min` the smallest component
/// order. The bound from the largest component is reported as `tight_bound`.
pub fn verify_forest(g: &Graph) -> PropositionResult {
    let Facts { report, mut detail } = facts(g);
    let comps = g.components();
    let hyp = !comps.is_empty() && g.is_forest() && comps.iter().all(|c| c.len() >= 2);
    let mut holds = false;
    if hyp {
        let n_min = comps.iter().map(|c| c.len()).min().expect("nonempty");
        let n_max = comps.iter().map(|c| c.len()).max().expect("nonempty");
        let bound = neg_reciprocal(n_min - 1);
        let largest = ExtendedRoot::Finite(report.largest().expect("forest has an edge").clone());
        holds = compare_roots(&ExtendedRoot::rational(bound.clone()), &largest).is_le();
        detail.largest_root = Some(largest);
        detail.bound = Some(bound);
        detail.tight_bound = Some(neg_reciprocal(n_max - 1));
    }
    result(ClaimId::Forest, hyp, holds, detail)
}

/// Triangle-free graphs are real-rooted. The discriminant `n² - 4m` is
/// recorded as an independent check.
pub fn verify_triangle_free(g: &Graph) -> PropositionResult {
    let Facts { detail: mut d, .. } = facts(g);
    let hyp = g.is_triangle_free();
    if hyp {
        d.discriminant = Some((d.n * d.n) as i64 - 4 * d.m as i64);
        if !d.connected {
            d.note = Some("graph is disconnected; connectivity is not needed for this check");
        }
    }
    let holds = d.real_rooted;
    result(ClaimId::TriangleFree, hyp, holds, d)
}

/// Connected chordal `K4`-free graphs are real-rooted.
pub fn verify_k4_chordal(g: &Graph) -> PropositionResult {
    let Facts { detail: mut d, .. } = facts(g);
    let chordal = g.is_chordal();
    d.chordal = Some(chordal);
    let hyp = d.connected && chordal && d.omega <= 3;
    if hyp {
        d.one_plus_x_divides = Some(d.minus_one_multiplicity >= 1);
    }
    let holds = d.real_rooted;
    result(ClaimId::K4Chordal, hyp, holds, d)
}

/// 2-connected chordal `K5`-free graphs are real-rooted.
pub fn verify_k5_bichordal(g: &Graph) -> PropositionResult {
    let Facts { detail: mut d, .. } = facts(g);
    let chordal = g.is_chordal();
    d.chordal = Some(chordal);
    let hyp = chordal && d.omega <= 4 && {
        let k = g.vertex_connectivity();
        d.kappa = Some(k);
        k >= 2
    };
    let holds = d.real_rooted;
    result(ClaimId::K5Bichordal, hyp, holds, d)
}

/// Connected chordal graphs: `(1+x)^κ` divides `C(G)`. The exact
/// multiplicity of `-1` is reported separately (it may exceed κ, as in `K4`).
pub fn verify_chordal_multiplicity(g: &Graph) -> PropositionResult {
    let Facts { detail: mut d, .. } = facts(g);
    let chordal = g.is_chordal();
    d.chordal = Some(chordal);
    let hyp = chordal && d.connected;
    let mut holds = false;
    if hyp {
        let k = g.vertex_connectivity();
        d.kappa = Some(k);
        holds = d
            .poly
            .checked_div(&IntPolynomial::linear(1, 1).pow(k as u32))
            .is_some();
    }
    result(ClaimId::ChordalMult, hyp, holds, d)
}

pub fn verify(claim: ClaimId, g: &Graph) -> PropositionResult {
    match claim {
        ClaimId::Tree => verify_tree(g),
        ClaimId::Forest => verify_forest(g),
        ClaimId::TriangleFree => verify_triangle_free(g),
        ClaimId::K4Chordal => verify_k4_chordal(g),
        ClaimId::K5Bichordal => verify_k5_bichordal(g),
        ClaimId::ChordalMult => verify_chordal_multiplicity(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, edges).unwrap()
    }

    fn diamond() -> Graph {
        g(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    }

    #[test]
    fn claim_ids_parse_and_print() {
        for c in ClaimId::ALL {
            assert_eq!(c.as_str().parse::<ClaimId>().unwrap(), c);
            assert_eq!(serde_json::to_string(&c).unwrap(), format!("\"{c}\""));
        }
        assert_eq!(
            "k5-bichordal".parse::<ClaimId>().unwrap(),
            ClaimId::K5Bichordal
        );
        assert!("K6_CHORDAL".parse::<ClaimId>().is_err());
    }

    #[test]
    fn tree_examples() {
        let r = verify_tree(&Graph::path(4));
        assert_eq!(r.conclusion_holds, Some(true));
        assert_eq!(r.detail.poly, IntPolynomial::from_i64s(&[1, 4, 3]));
        assert!(r
            .detail
            .largest_root
            .as_ref()
            .unwrap()
            .equals_rational(&q(-1, 3)));
        assert!(r
            .detail
            .second_root
            .as_ref()
            .unwrap()
            .equals_rational(&q(-1, 1)));

        let r = verify_tree(&Graph::star(5));
        assert_eq!(r.conclusion_holds, Some(true));
        assert_eq!(r.detail.poly, IntPolynomial::from_i64s(&[1, 5, 4]));

        let r = verify_tree(&Graph::cycle(4));
        assert!(!r.hypothesis_met);
        assert_eq!(r.conclusion_holds, None);

        // K2: double root at -1
        assert_eq!(verify_tree(&Graph::path(2)).conclusion_holds, Some(true));
        assert!(!verify_tree(&Graph::path(1)).hypothesis_met);
    }

    #[test]
    fn forest_examples() {
        let two_edges = g(4, &[(0, 1), (2, 3)]);
        let r = verify_forest(&two_edges);
        // C = 1 + 4x + 2x², not the product of the component polynomials
        assert_eq!(r.detail.poly, IntPolynomial::from_i64s(&[1, 4, 2]));
        assert_eq!(r.conclusion_holds, Some(true));
        let big_r = r.detail.largest_root.as_ref().unwrap();
        assert!((big_r.as_finite().unwrap().approx() - (-1.0 + 2f64.sqrt() / 2.0)).abs() < 1e-9);

        let p3_p5 = Graph::path(3).disjoint_union(&Graph::path(5)).unwrap();
        let r = verify_forest(&p3_p5);
        assert_eq!(r.detail.poly, IntPolynomial::from_i64s(&[1, 8, 6]));
        assert_eq!(r.conclusion_holds, Some(true));
        let big_r = r.detail.largest_root.clone().unwrap();
        assert!(compare_roots(&ExtendedRoot::rational(q(-1, 4)), &big_r).is_lt());
        assert_eq!(r.detail.bound, Some(q(-1, 2)));
        assert_eq!(r.detail.tight_bound, Some(q(-1, 4)));

        let with_isolated = g(3, &[(0, 1)]);
        assert!(!verify_forest(&with_isolated).hypothesis_met);
        assert!(!verify_forest(&Graph::empty(0).unwrap()).hypothesis_met);
    }

    #[test]
    fn triangle_free_examples() {
        let r = verify_triangle_free(&Graph::cycle(5));
        assert_eq!(r.conclusion_holds, Some(true));
        assert_eq!(r.detail.discriminant, Some(5));

        let r = verify_triangle_free(&Graph::cycle(4));
        assert_eq!(r.conclusion_holds, Some(true));
        assert_eq!(r.detail.discriminant, Some(0));

        let r = verify_triangle_free(&Graph::complete(3));
        assert!(!r.hypothesis_met);
        assert_eq!(r.detail.discriminant, None);
    }

    #[test]
    fn k4_chordal_examples() {
        let r = verify_k4_chordal(&Graph::complete(3));
        assert_eq!(r.conclusion_holds, Some(true));
        assert_eq!(r.detail.minus_one_multiplicity, 3);

        let bowtie = g(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]);
        let r = verify_k4_chordal(&bowtie);
        assert_eq!(r.detail.poly, IntPolynomial::from_i64s(&[1, 5, 6, 2]));
        assert_eq!(r.conclusion_holds, Some(true));
        assert_eq!(r.detail.one_plus_x_divides, Some(true));

        assert!(!verify_k4_chordal(&Graph::cycle(4)).hypothesis_met);
    }

    #[test]
    fn k5_bichordal_examples() {
        let r = verify_k5_bichordal(&Graph::complete(4));
        assert_eq!(r.conclusion_holds, Some(true));
        assert_eq!(r.detail.minus_one_multiplicity, 4);

        let r = verify_k5_bichordal(&diamond());
        assert_eq!(r.detail.poly, IntPolynomial::from_i64s(&[1, 4, 5, 2]));
        assert_eq!(r.conclusion_holds, Some(true));
        assert_eq!(r.detail.minus_one_multiplicity, 2);

        assert!(!verify_k5_bichordal(&Graph::path(4)).hypothesis_met);
    }

    #[test]
    fn chordal_multiplicity_examples() {
        let r = verify_chordal_multiplicity(&Graph::complete(4));
        assert_eq!(r.conclusion_holds, Some(true));
        assert_eq!(r.detail.kappa, Some(3));
        assert_eq!(r.detail.minus_one_multiplicity, 4);

        let r = verify_chordal_multiplicity(&diamond());
        assert_eq!(r.conclusion_holds, Some(true));
        assert_eq!(r.detail.kappa, Some(2));
        assert_eq!(r.detail.minus_one_multiplicity, 2);

        let r = verify_chordal_multiplicity(&Graph::path(3));
        assert_eq!(r.conclusion_holds, Some(true));
        assert_eq!(r.detail.kappa, Some(1));

        assert!(!verify_chordal_multiplicity(&Graph::cycle(5)).hypothesis_met);
    }

    #[test]
    fn result_json_shape() {
        let v = serde_json::to_value(verify_tree(&Graph::cycle(4))).unwrap();
        assert_eq!(v["claim_id"], "TREE");
        assert_eq!(v["hypothesis_met"], false);
        assert!(v.get("conclusion_holds").is_none());
        assert_eq!(v["detail"]["poly"], serde_json::json!([1, 4, 4]));
    }
}
