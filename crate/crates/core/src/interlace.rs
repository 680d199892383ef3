//! Largest real root of a family's sum against the members' top two roots.
//!
//! For a family `f_1, ..., f_k` with positive leading coefficients and at
//! least one real root each, let `R_j` and `r_j` be the largest and second
//! largest real roots (with multiplicity, `r_j = -inf` if there is only one).
//! If `max r_j <= min R_j`, the sum `Σ f_j` is claimed to have a real root
//! `R >= min R_j`. [`analyze_family`] decides hypothesis and conclusion
//! separately for a concrete family and never assumes the implication.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::poly::{
    compare_roots, isolate_real_roots, ExtendedRoot, IntPolynomial, PolyError, RootReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("the family is empty")]
    Empty,
    #[error("member {0} is the zero polynomial")]
    ZeroMember(usize),
    #[error("member {0} has a negative leading coefficient")]
    NegativeLeading(usize),
    #[error("member {0} has no real root")]
    NoRealRoot(usize),
    #[error("line {line}: {source}")]
    Parse { line: usize, source: PolyError },
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyMember {
    pub poly: IntPolynomial,
    #[serde(rename = "R")]
    pub largest: ExtendedRoot,
    #[serde(rename = "r")]
    pub second: ExtendedRoot,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaFamilyReport {
    pub members: Vec<FamilyMember>,
    pub max_r: ExtendedRoot,
    #[serde(rename = "min_R")]
    pub min_big_r: ExtendedRoot,
    pub hypothesis_holds: bool,
    /// The hypothesis evaluated with `r_j` taken as the second largest
    /// *distinct* root instead. Recorded for comparison only.
    pub distinct_reading_hypothesis_holds: bool,
    pub sum: IntPolynomial,
    pub sum_largest_root: Option<ExtendedRoot>,
    /// Present only when the hypothesis holds.
    pub conclusion_holds: Option<bool>,
}

fn max_root(roots: impl Iterator<Item = ExtendedRoot>) -> ExtendedRoot {
    roots
        .reduce(|a, b| {
            if compare_roots(&a, &b) == Ordering::Less {
                b
            } else {
                a
            }
        })
        .expect("nonempty family")
}

fn min_root(roots: impl Iterator<Item = ExtendedRoot>) -> ExtendedRoot {
    roots
        .reduce(|a, b| {
            if compare_roots(&b, &a) == Ordering::Less {
                b
            } else {
                a
            }
        })
        .expect("nonempty family")
}

fn second_distinct(report: &RootReport) -> ExtendedRoot {
    report
        .roots
        .get(1)
        .cloned()
        .map_or(ExtendedRoot::NegativeInfinity, ExtendedRoot::Finite)
}

pub fn analyze_family(polys: &[IntPolynomial]) -> Result<LemmaFamilyReport, FamilyError> {
    if polys.is_empty() {
        return Err(FamilyError::Empty);
    }
    let mut members = Vec::with_capacity(polys.len());
    let mut distinct_seconds = Vec::with_capacity(polys.len());
    for (i, f) in polys.iter().enumerate() {
        match f.leading_sign() {
            0 => return Err(FamilyError::ZeroMember(i)),
            s if s < 0 => return Err(FamilyError::NegativeLeading(i)),
            _ => {}
        }
        let report = isolate_real_roots(f).map_err(|_| FamilyError::ZeroMember(i))?;
        let (largest, second) = report.top_two().map_err(|_| FamilyError::NoRealRoot(i))?;
        distinct_seconds.push(second_distinct(&report));
        members.push(FamilyMember {
            poly: f.clone(),
            largest,
            second,
        });
    }
    let max_r = max_root(members.iter().map(|m| m.second.clone()));
    let min_big_r = min_root(members.iter().map(|m| m.largest.clone()));
    let hypothesis_holds = compare_roots(&max_r, &min_big_r) != Ordering::Greater;
    let distinct_max_r = max_root(distinct_seconds.into_iter());
    let distinct_reading_hypothesis_holds =
        compare_roots(&distinct_max_r, &min_big_r) != Ordering::Greater;

    let sum = polys.iter().fold(IntPolynomial::zero(), |acc, f| &acc + f);
    let (sum_largest_root, conclusion_holds) = if hypothesis_holds {
        let largest = isolate_real_roots(&sum)
            .expect("sum of positive-leading polynomials is nonzero")
            .largest()
            .cloned()
            .map(ExtendedRoot::Finite);
        let holds = largest
            .as_ref()
            .is_some_and(|r| compare_roots(&min_big_r, r) != Ordering::Greater);
        (largest, Some(holds))
    } else {
        (None, None)
    };
    Ok(LemmaFamilyReport {
        members,
        max_r,
        min_big_r,
        hypothesis_holds,
        distinct_reading_hypothesis_holds,
        sum,
        sum_largest_root,
        conclusion_holds,
    })
}

/// Reads a family file: one coefficient list per line, e.g. `[1,1]`.
/// Blank lines and `#` comments are skipped.
pub fn parse_family(text: &str) -> Result<Vec<IntPolynomial>, FamilyError> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .map(|(line, l)| {
            l.parse::<IntPolynomial>()
                .map_err(|source| FamilyError::Parse { line, source })
        })
        .collect()
}

/// Tallies from [`random_family_stress`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StressSummary {
    pub trials: usize,
    pub hypothesis_and_conclusion: usize,
    pub hypothesis_without_conclusion: usize,
    pub hypothesis_fails: usize,
    /// Families where the hypothesis holds under the distinct-roots reading
    /// but not under the with-multiplicity one.
    pub distinct_reading_only: usize,
    /// Every family with hypothesis true and conclusion false, verbatim.
    pub violations: Vec<Vec<IntPolynomial>>,
}

/// Random member: a product of integer-rooted linear factors and quadratics
/// without real roots, times a small positive constant. At least one linear
/// factor is always present.
fn random_member(rng: &mut ChaCha8Rng) -> IntPolynomial {
    let linear = rng.random_range(1..=3);
    let quadratics = rng.random_range(0..=1);
    let mut f = IntPolynomial::constant(rng.random_range(1..=3).into());
    for _ in 0..linear {
        let root: i64 = rng.random_range(-4..=4);
        f = &f * &IntPolynomial::linear(-root, 1);
    }
    for _ in 0..quadratics {
        // (x - a)^2 + b with b >= 1
        let a: i64 = rng.random_range(-3..=3);
        let b: i64 = rng.random_range(1..=4);
        f = &f * &IntPolynomial::from_i64s(&[a * a + b, -2 * a, 1]);
    }
    f
}

pub fn random_family(rng: &mut ChaCha8Rng) -> Vec<IntPolynomial> {
    let size = rng.random_range(1..=4);
    (0..size).map(|_| random_member(rng)).collect()
}

/// Runs [`analyze_family`] on `trials` random families. Trial `i` draws from
/// its own generator seeded by `(seed, i)`, so the summary does not depend on
/// how trials are scheduled across threads.
pub fn random_family_stress(seed: u64, trials: usize) -> StressSummary {
    let outcomes: Vec<(Vec<IntPolynomial>, LemmaFamilyReport)> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let family = random_family(&mut rng);
            let report = analyze_family(&family).expect("generated families are valid");
            (family, report)
        })
        .collect();
    let mut summary = StressSummary {
        trials,
        ..StressSummary::default()
    };
    for (family, report) in outcomes {
        match report.conclusion_holds {
            Some(true) => summary.hypothesis_and_conclusion += 1,
            Some(false) => {
                summary.hypothesis_without_conclusion += 1;
                summary.violations.push(family);
            }
            None => summary.hypothesis_fails += 1,
        }
        if report.distinct_reading_hypothesis_holds && !report.hypothesis_holds {
            summary.distinct_reading_only += 1;
        }
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn two_linear_members() {
        let report = analyze_family(&[p(&[1, 1]), p(&[1, 2])]).unwrap();
        assert!(report.members[0].largest.equals_rational(&q(-1, 1)));
        assert!(report.members[1].largest.equals_rational(&q(-1, 2)));
        assert!(report.members.iter().all(|m| m.second.is_neg_infinity()));
        assert!(report.hypothesis_holds);
        assert_eq!(report.sum, p(&[2, 3]));
        assert!(report
            .sum_largest_root
            .as_ref()
            .unwrap()
            .equals_rational(&q(-2, 3)));
        assert_eq!(report.conclusion_holds, Some(true));
    }

    #[test]
    fn shifted_quadratics() {
        let report = analyze_family(&[p(&[-1, 0, 1]), p(&[-4, 0, 1])]).unwrap();
        assert!(report.max_r.equals_rational(&q(-1, 1)));
        assert!(report.min_big_r.equals_rational(&q(1, 1)));
        assert!(report.hypothesis_holds);
        assert_eq!(report.sum, p(&[-5, 0, 2]));
        let root = report
            .sum_largest_root
            .as_ref()
            .unwrap()
            .as_finite()
            .unwrap();
        assert!((root.approx() - (2.5f64).sqrt()).abs() < 1e-12);
        assert_eq!(report.conclusion_holds, Some(true));
    }

    #[test]
    fn double_root_blocks_the_hypothesis() {
        // (x-2)^2 and x^2 - 1
        let report = analyze_family(&[p(&[4, -4, 1]), p(&[-1, 0, 1])]).unwrap();
        assert!(report.members[0].largest.equals_rational(&q(2, 1)));
        assert!(report.members[0].second.equals_rational(&q(2, 1)));
        assert!(report.max_r.equals_rational(&q(2, 1)));
        assert!(report.min_big_r.equals_rational(&q(1, 1)));
        assert!(!report.hypothesis_holds);
        assert_eq!(report.conclusion_holds, None);
        assert!(report.sum_largest_root.is_none());
        // Under the distinct-roots reading the hypothesis would hold, yet the
        // sum 2x^2 - 4x + 3 has no real root.
        assert!(report.distinct_reading_hypothesis_holds);
        assert_eq!(report.sum, p(&[3, -4, 2]));
        assert_eq!(
            isolate_real_roots(&report.sum)
                .unwrap()
                .real_count_with_multiplicity,
            0
        );
    }

    #[test]
    fn invalid_families() {
        assert_eq!(analyze_family(&[]).unwrap_err(), FamilyError::Empty);
        assert_eq!(
            analyze_family(&[p(&[1, 1]), p(&[1, 0, 1])]).unwrap_err(),
            FamilyError::NoRealRoot(1)
        );
        assert_eq!(
            analyze_family(&[p(&[1, -1])]).unwrap_err(),
            FamilyError::NegativeLeading(0)
        );
        assert_eq!(
            analyze_family(&[p(&[])]).unwrap_err(),
            FamilyError::ZeroMember(0)
        );
    }

    #[test]
    fn singleton_family() {
        let report = analyze_family(&[p(&[6, -5, 1])]).unwrap();
        assert!(report.hypothesis_holds);
        assert_eq!(report.conclusion_holds, Some(true));
    }

    #[test]
    fn family_file() {
        let fam = parse_family("[1,1]\n\n# second\n[1,2]\n").unwrap();
        assert_eq!(fam, vec![p(&[1, 1]), p(&[1, 2])]);
        assert!(matches!(
            parse_family("[1,1]\n1,2\n"),
            Err(FamilyError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn stress_is_deterministic() {
        let one = random_family_stress(1, 1);
        assert_eq!(
            one.hypothesis_and_conclusion
                + one.hypothesis_without_conclusion
                + one.hypothesis_fails,
            1
        );
        let a = random_family_stress(7, 200);
        let b = random_family_stress(7, 200);
        assert_eq!(a, b);
        assert_eq!(a.hypothesis_without_conclusion, 0, "{:?}", a.violations);
    }

    #[test]
    fn random_members_have_real_roots() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let f = random_member(&mut rng);
            assert!(f.leading_sign() > 0);
            assert!(isolate_real_roots(&f).unwrap().real_count_with_multiplicity >= 1);
        }
    }
}
