mod common;

use common::{all_pairs, arb_graph, ball_mask, naive_acyclic, naive_separates, naive_triangle_free};
use proptest::prelude::*;
use secluded_core::domset::DomInstance;
use secluded_core::ffvd::{FfvdInstance, ForbiddenFamily};
use secluded_core::fvs::FvsInstance;
use secluded_core::oracle::{
    decide, meets_budget, oracle, oracle_optimum, LsisInstance, Optimum, OracleConfig, ProblemInstance,
};
use secluded_core::separator::SeparatorInstance;
use secluded_core::Graph;

/// Minimum of `objective` over every subset passing `feasible`, by plain
/// bitmask enumeration.
fn naive_min(n: usize, feasible: impl Fn(u32) -> bool, objective: impl Fn(u32) -> usize) -> Option<usize> {
    (0u32..1 << n).filter(|&s| feasible(s)).map(objective).min()
}

fn optimum_value(o: Optimum) -> Option<usize> {
    match o {
        Optimum::Value(v) => Some(v),
        Optimum::Infeasible => None,
    }
}

fn opt(inst: &ProblemInstance) -> Optimum {
    oracle_optimum(inst, &OracleConfig::default()).unwrap()
}

fn tri(g: &Graph, k: usize, ell: Option<usize>) -> ProblemInstance {
    ProblemInstance::Ffvd(FfvdInstance { g: g.clone(), family: ForbiddenFamily::triangle(), k, ell })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sfvs_optimum_matches_brute_force(g in arb_graph(1, 8)) {
        let d = all_pairs(&g);
        let want = naive_min(g.n(), |s| naive_acyclic(&g, s), |s| ball_mask(&d, s, 1).count_ones() as usize);
        prop_assert_eq!(optimum_value(opt(&ProblemInstance::Fvs(FvsInstance::secluded(g, 0)))), want);
    }

    #[test]
    fn ssfvs_optimum_matches_brute_force(g in arb_graph(1, 8), k in 0usize..4) {
        let d = all_pairs(&g);
        let want = naive_min(
            g.n(),
            |s| s.count_ones() as usize <= k && naive_acyclic(&g, s),
            |s| (ball_mask(&d, s, 1) & !s).count_ones() as usize,
        );
        prop_assert_eq!(optimum_value(opt(&ProblemInstance::Fvs(FvsInstance::small(g, k, 0)))), want);
    }

    #[test]
    fn triangle_deletion_optima_match_brute_force(g in arb_graph(1, 8), k in 0usize..4) {
        let d = all_pairs(&g);
        let closed = naive_min(g.n(), |s| naive_triangle_free(&g, s), |s| ball_mask(&d, s, 1).count_ones() as usize);
        prop_assert_eq!(optimum_value(opt(&tri(&g, 0, None))), closed);
        let open = naive_min(
            g.n(),
            |s| s.count_ones() as usize <= k && naive_triangle_free(&g, s),
            |s| (ball_mask(&d, s, 1) & !s).count_ones() as usize,
        );
        prop_assert_eq!(optimum_value(opt(&tri(&g, k, Some(0)))), open);
    }

    #[test]
    fn separator_optimum_matches_brute_force(g in arb_graph(2, 8), s in 0usize..8, t in 0usize..8) {
        let n = g.n();
        let (s, t) = (s % n, t % n);
        prop_assume!(s != t);
        let d = all_pairs(&g);
        let terminals = 1u32 << s | 1 << t;
        let want = naive_min(
            n,
            |x| x & terminals == 0 && naive_separates(&g, x, s, t),
            |x| ball_mask(&d, x, 1).count_ones() as usize,
        );
        let inst = ProblemInstance::Separator(SeparatorInstance::secluded(g, s, t, 0));
        prop_assert_eq!(optimum_value(opt(&inst)), want);
    }

    #[test]
    fn dom_optimum_matches_brute_force(g in arb_graph(1, 8), pq in 0usize..3) {
        let (p, q) = [(1, 2), (2, 3), (1, 3)][pq];
        let d = all_pairs(&g);
        let full = (1u32 << g.n()) - 1;
        let want = naive_min(g.n(), |s| ball_mask(&d, s, q) == full, |s| ball_mask(&d, s, p).count_ones() as usize);
        let inst = ProblemInstance::Dom(DomInstance::secluded(g, p, q, 0));
        prop_assert_eq!(optimum_value(opt(&inst)), want);
    }

    #[test]
    fn lsis_optimum_matches_brute_force(g in arb_graph(1, 8), ell in 0usize..4) {
        let d = all_pairs(&g);
        let independent = |s: u32| g.edges().all(|(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0);
        let want = (0u32..1 << g.n())
            .filter(|&s| independent(s) && (ball_mask(&d, s, 1) & !s).count_ones() as usize <= ell)
            .map(|s| s.count_ones() as usize)
            .max();
        let inst = ProblemInstance::Lsis(LsisInstance { g, k: 0, ell });
        prop_assert_eq!(optimum_value(opt(&inst)), want);
    }

    #[test]
    fn verdict_agrees_with_optimum(g in arb_graph(1, 8), k in 0usize..6, ell in 0usize..4) {
        let insts = [
            ProblemInstance::Fvs(FvsInstance::secluded(g.clone(), k)),
            ProblemInstance::Fvs(FvsInstance::small(g.clone(), k, ell)),
            tri(&g, k, None),
            tri(&g, k, Some(ell)),
            ProblemInstance::Dom(DomInstance::secluded(g.clone(), 2, 3, k)),
            ProblemInstance::Dom(DomInstance::small(g.clone(), 2, 3, k, ell)),
            ProblemInstance::Lsis(LsisInstance { g: g.clone(), k, ell }),
        ];
        for inst in insts {
            let ans = oracle(&inst, &OracleConfig::default()).unwrap();
            prop_assert_eq!(ans.yes, meets_budget(&inst, opt(&inst)).unwrap(), "{:?}", inst);
            prop_assert_eq!(ans.yes, ans.witness.is_some());
        }
    }

    #[test]
    fn relaxing_budgets_never_flips_yes(g in arb_graph(1, 8), k in 0usize..5, ell in 0usize..4) {
        let fvs = |k, ell| decide(&ProblemInstance::Fvs(FvsInstance::small(g.clone(), k, ell))).unwrap();
        let dom = |k, ell| decide(&ProblemInstance::Dom(DomInstance::small(g.clone(), 1, 2, k, ell))).unwrap();
        let lsis = |k, ell| decide(&ProblemInstance::Lsis(LsisInstance { g: g.clone(), k, ell })).unwrap();
        if fvs(k, ell) {
            prop_assert!(fvs(k + 1, ell) && fvs(k, ell + 1));
        }
        if dom(k, ell) {
            prop_assert!(dom(k + 1, ell) && dom(k, ell + 1));
        }
        // for LSIS the size bound is a lower bound
        if lsis(k + 1, ell) {
            prop_assert!(lsis(k, ell) && lsis(k + 1, ell + 1));
        }
        let sec = |k| decide(&tri(&g, k, None)).unwrap();
        if sec(k) {
            prop_assert!(sec(k + 1));
        }
    }

    #[test]
    fn secluded_is_or_over_budget_splits(g in arb_graph(1, 8), k in 0usize..7) {
        let splits = |small: &dyn Fn(usize, usize) -> ProblemInstance| {
            (0..=k).any(|k1| decide(&small(k1, k - k1)).unwrap())
        };
        let fvs = decide(&ProblemInstance::Fvs(FvsInstance::secluded(g.clone(), k))).unwrap();
        prop_assert_eq!(fvs, splits(&|a, b| ProblemInstance::Fvs(FvsInstance::small(g.clone(), a, b))));
        let ffvd = decide(&tri(&g, k, None)).unwrap();
        prop_assert_eq!(ffvd, splits(&|a, b| tri(&g, a, Some(b))));
        let dom = decide(&ProblemInstance::Dom(DomInstance::secluded(g.clone(), 2, 3, k))).unwrap();
        prop_assert_eq!(dom, splits(&|a, b| ProblemInstance::Dom(DomInstance::small(g.clone(), 2, 3, a, b))));
    }
}

#[test]
fn documented_examples() {
    let path3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let sep = ProblemInstance::Separator(SeparatorInstance::secluded(path3.clone(), 0, 2, 3));
    assert!(decide(&sep).unwrap());
    assert_eq!(opt(&sep), Optimum::Value(3));
    let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    assert!(decide(&ProblemInstance::Lsis(LsisInstance { g: k3, k: 1, ell: 2 })).unwrap());
    let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
    let a = oracle(&ProblemInstance::Fvs(FvsInstance::small(c4.clone(), 1, 2)), &OracleConfig::default())
        .unwrap();
    assert_eq!(a.witness.unwrap().as_slice(), [0]);
    assert_eq!(opt(&ProblemInstance::Fvs(FvsInstance::secluded(c4, 0))), Optimum::Value(3));
    // N(S) = {} forces S to be a union of whole components; on P3 no
    // independent set qualifies except the empty one
    let lsis = ProblemInstance::Lsis(LsisInstance { g: path3, k: 1, ell: 0 });
    assert!(!decide(&lsis).unwrap());
}

#[test]
fn vertex_cover_with_isolated_vertices() {
    // every vertex cover satisfies N[S] = V only without isolated vertices;
    // in general the minimum is the number of non-isolated vertices
    let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
    let inst = ProblemInstance::Ffvd(FfvdInstance { g, family: ForbiddenFamily::edge(), k: 0, ell: None });
    assert_eq!(opt(&inst), Optimum::Value(2));
}
