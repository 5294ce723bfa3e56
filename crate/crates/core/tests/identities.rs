use scpp_core::verify::{
    lhs_schurid, rhs_schurid1, rhs_schurid2, verify_genenum, verify_minenum, verify_schurid,
    verify_specialization_bridge, verify_stanley, verify_weight_consistency,
};
use scpp_core::{Budget, Error, Method};

#[test]
fn expansion_and_sweep_agree() {
    let budget = Budget::default();
    for which in [1u8, 2] {
        for g1 in 0..=2 {
            for g2 in 0..=g1 {
                for alpha in 0..=2 {
                    for n in 0..=2 {
                        let full = verify_schurid(which, g1, g2, alpha, n, Method::FullExpansion, &budget);
                        let sweep =
                            verify_schurid(which, g1, g2, alpha, n, Method::EvaluationSweep, &Budget::default());
                        let sweep = match sweep {
                            Err(Error::BudgetExceeded { .. }) => continue,
                            other => other.unwrap(),
                        };
                        assert_eq!(full.unwrap().matches, sweep.matches);
                        assert!(sweep.matches, "{which} ({g1},{g2},{alpha},{n})");
                    }
                }
            }
        }
    }
}

#[test]
fn sweep_respects_the_budget() {
    let tiny = Budget::new(10);
    assert!(matches!(
        verify_schurid(1, 3, 3, 3, 4, Method::EvaluationSweep, &tiny),
        Err(Error::BudgetExceeded { .. })
    ));
}

#[test]
fn identities_hold_beyond_the_acceptance_grid() {
    for which in [1u8, 2] {
        for (g1, g2, alpha, n) in [(4, 2, 2, 3), (4, 4, 1, 4), (2, 1, 4, 4), (5, 1, 2, 2)] {
            let r = verify_schurid(which, g1, g2, alpha, n, Method::FullExpansion, &Budget::default()).unwrap();
            assert!(r.matches, "{which} ({g1},{g2},{alpha},{n})");
        }
    }
}

#[test]
fn digests_are_deterministic() {
    let a = verify_schurid(2, 2, 1, 1, 2, Method::FullExpansion, &Budget::default()).unwrap();
    let b = verify_schurid(2, 2, 1, 1, 2, Method::FullExpansion, &Budget::default()).unwrap();
    assert_eq!(a.lhs, b.lhs);
    assert_eq!(a.lhs, a.rhs);
    assert_eq!(a.lhs.len(), 64);
    assert_eq!(a.parameters["gamma1"], 2);
}

#[test]
fn a_perturbed_side_is_caught() {
    // swapping the identities' right-hand sides breaks both
    let lhs1 = lhs_schurid(1, 2, 1, 1, 2).unwrap();
    assert_ne!(lhs1, rhs_schurid2(2, 1, 1, 2).unwrap());
    assert_eq!(lhs1, rhs_schurid1(2, 1, 1, 2).unwrap());
}

#[test]
fn enumeration_reports() {
    let budget = Budget::default();
    let r = verify_stanley(4, 3, 3, &budget).unwrap();
    assert!(r.matches);
    assert_eq!(r.method, Method::Enumeration);
    assert!(verify_genenum(3, 3, 6, 2, &Budget::default()).unwrap().matches);
    assert!(verify_genenum(3, 2, 4, 2, &Budget::default()).unwrap().matches);
    assert!(matches!(
        verify_genenum(2, 1, 2, 2, &Budget::default()),
        Err(Error::Parity(_))
    ));
    assert!(verify_minenum(3, 4, 4, &Budget::default()).unwrap().matches);
    assert!(verify_weight_consistency(3, 2, 4, &Budget::default()).unwrap().matches);
    assert!(verify_specialization_bridge(3, 3, 7).unwrap().matches);
}

#[test]
fn enumeration_budget_errors_surface() {
    assert!(matches!(
        verify_stanley(6, 6, 6, &Budget::new(1000)),
        Err(Error::BudgetExceeded { limit: 1000 })
    ));
}
