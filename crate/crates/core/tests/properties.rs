use cliquelab::poly::count_real_roots;
use cliquelab::{
    analyze_family, clique_polynomial, compare_roots, isolate_real_roots, ExtendedRoot, Graph,
    IntPolynomial,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use std::cmp::Ordering;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
                let edges: Vec<_> = pairs
                    .zip(bits)
                    .filter(|(_, b)| *b)
                    .map(|(e, _)| e)
                    .collect();
                Graph::from_edge_list(n, &edges).unwrap()
            },
        )
    })
}

fn poly() -> impl Strategy<Value = IntPolynomial> {
    proptest::collection::vec(-12i64..=12, 1..7)
        .prop_map(|c| IntPolynomial::from_i64s(&c))
        .prop_filter("nonzero", |p| !p.is_zero())
}

/// Products of small linear and quadratic factors, so repeated roots show up often.
fn factored_poly() -> impl Strategy<Value = IntPolynomial> {
    let factor = prop_oneof![
        (-3i64..=3, 1i64..=3).prop_map(|(a, b)| IntPolynomial::from_i64s(&[a, b])),
        (-3i64..=3, -4i64..=4).prop_map(|(b, c)| IntPolynomial::from_i64s(&[c, b, 1])),
    ];
    (proptest::collection::vec(factor, 1..5), 1i64..=4).prop_map(|(fs, k)| {
        fs.iter()
            .fold(IntPolynomial::from_i64s(&[k]), |acc, f| &acc * f)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn disjoint_union_adds_clique_counts(g in graph(7), h in graph(7)) {
        // the empty clique is shared, every other clique lives in one side
        let union = g.disjoint_union(&h).unwrap();
        let expected = &(&clique_polynomial(&g) + &clique_polynomial(&h)) - &IntPolynomial::one();
        prop_assert_eq!(clique_polynomial(&union), expected);
    }

    #[test]
    fn derivative_is_linear(p in poly(), q in poly(), a in -5i64..=5, b in -5i64..=5) {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        let lhs = (&p.scale(&a) + &q.scale(&b)).derivative();
        let rhs = &p.derivative().scale(&a) + &q.derivative().scale(&b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn square_free_decomposition_reconstructs(p in factored_poly()) {
        let parts = p.square_free_decomposition().unwrap();
        let product = parts
            .iter()
            .fold(IntPolynomial::one(), |acc, (f, k)| &acc * &f.pow(*k as u32));
        let quotient = p.checked_div(&product).expect("product divides p");
        prop_assert!(quotient.is_constant());
        for (i, (f, _)) in parts.iter().enumerate() {
            prop_assert!(f.is_square_free());
            for (g, _) in &parts[i + 1..] {
                prop_assert!(f.gcd(g).is_constant());
            }
        }
    }

    #[test]
    fn real_rootedness_of_products(p in factored_poly(), q in factored_poly()) {
        let rr = |f: &IntPolynomial| isolate_real_roots(f).unwrap().is_real_rooted;
        prop_assert_eq!(rr(&(&p * &q)), rr(&p) && rr(&q));
    }

    #[test]
    fn isolating_intervals_hold_one_root(p in factored_poly()) {
        let report = isolate_real_roots(&p).unwrap();
        for r in &report.roots {
            let (lo, hi) = r.interval();
            prop_assert!(lo < hi);
            prop_assert_eq!(count_real_roots(r.defining(), Some(lo), Some(hi)).unwrap(), 1);
        }
        for w in report.roots.windows(2) {
            let (a, b) = (ExtendedRoot::Finite(w[0].clone()), ExtendedRoot::Finite(w[1].clone()));
            prop_assert_eq!(compare_roots(&a, &b), Ordering::Greater);
        }
    }

    #[test]
    fn root_count_matches_sturm_on_whole_line(p in poly()) {
        let report = isolate_real_roots(&p).unwrap();
        let distinct: usize = p
            .square_free_decomposition()
            .unwrap()
            .iter()
            .map(|(f, _)| count_real_roots(f, None, None).unwrap())
            .sum();
        prop_assert_eq!(report.roots.len(), distinct);
    }

    #[test]
    fn lemma_verdicts_ignore_order_and_common_scale(
        family in proptest::collection::vec(factored_poly(), 1..4),
        k in 1i64..=5,
    ) {
        let family: Vec<IntPolynomial> = family
            .into_iter()
            .filter(|f| !isolate_real_roots(f).unwrap().roots.is_empty())
            .map(|f| if f.leading_sign() < 0 { -&f } else { f })
            .collect();
        prop_assume!(!family.is_empty());
        let base = analyze_family(&family).unwrap();
        let mut reversed = family.clone();
        reversed.reverse();
        let rev = analyze_family(&reversed).unwrap();
        let scaled: Vec<_> = family.iter().map(|f| f.scale(&BigInt::from(k))).collect();
        let sc = analyze_family(&scaled).unwrap();
        for other in [&rev, &sc] {
            prop_assert_eq!(other.hypothesis_holds, base.hypothesis_holds);
            prop_assert_eq!(other.conclusion_holds, base.conclusion_holds);
        }
        if family.len() == 1 {
            prop_assert!(base.hypothesis_holds);
            prop_assert_eq!(base.conclusion_holds, Some(true));
        }
    }
}
