use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use scpp_core::pfaffian::{bordered_matrix, pfaffian_check, BorderedCase};
use scpp_core::product::{genenum_product, sc_count};
use scpp_core::RationalSkewMatrix;

fn deterministic_runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

/// Skew-symmetric matrices of dimension `2 * half` with small rational
/// entries.
fn skew(half: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = RationalSkewMatrix> {
    half.prop_flat_map(|h| {
        let dim = 2 * h;
        prop::collection::vec(rational(), dim * dim.saturating_sub(1) / 2).prop_map(move |upper| {
            let mut it = upper.into_iter();
            RationalSkewMatrix::from_upper(dim, |_, _| it.next().unwrap()).unwrap()
        })
    })
}

#[test]
fn squared_pfaffian_is_determinant_up_to_dim_10() {
    deterministic_runner(40)
        .run(&skew(0..=5), |m| {
            let pf = m.pfaffian().unwrap();
            prop_assert_eq!(&pf * &pf, m.determinant());
            Ok(())
        })
        .unwrap();
}

#[test]
fn block_diagonal_pfaffian_factors() {
    deterministic_runner(50)
        .run(&(skew(0..=2), skew(0..=2)), |(x, y)| {
            let joined = x.direct_sum(&y);
            prop_assert_eq!(
                joined.pfaffian().unwrap(),
                x.pfaffian().unwrap() * y.pfaffian().unwrap()
            );
            Ok(())
        })
        .unwrap();
}

#[test]
fn scaling_an_index_scales_the_pfaffian() {
    let strategy = skew(1..=3).prop_flat_map(|m| {
        let dim = m.dim();
        (Just(m), 0..dim, rational())
    });
    deterministic_runner(50)
        .run(&strategy, |(m, i, s)| {
            let scaled = m.scale_index(i, &s);
            prop_assert_eq!(scaled.pfaffian().unwrap(), m.pfaffian().unwrap() * s);
            Ok(())
        })
        .unwrap();
}

#[test]
fn generated_matrices_satisfy_the_determinant_identity() {
    for case in BorderedCase::ALL {
        for a in 0..=6 {
            for b in 0..=6 {
                if !case.admits(a, b) {
                    continue;
                }
                for c1 in (0..=8).step_by(2) {
                    for c2 in (0..=c1).step_by(2) {
                        let cm = bordered_matrix(case, a, b, c1, c2).unwrap();
                        let pf = cm.matrix.pfaffian().unwrap();
                        assert_eq!(&pf * &pf, cm.matrix.determinant());
                    }
                }
            }
        }
    }
}

#[test]
fn equal_sides_give_the_self_complementary_count() {
    for a in (0..=6).step_by(2) {
        for b in (0..=6).step_by(2) {
            for c in (0..=8).step_by(2) {
                let r = pfaffian_check(BorderedCase::EvenEven, a, b, c, c).unwrap();
                assert_eq!(r.pfaffian, BigRational::from_integer(sc_count(a, b, c)));
            }
        }
    }
}

#[test]
fn sign_calibration_is_needed_only_in_the_odd_odd_case() {
    // without the extra sign the odd/odd Pfaffians come out negated
    let r = pfaffian_check(BorderedCase::AbOdd, 3, 3, 4, 2).unwrap();
    assert_eq!(r.calibration, -1);
    assert_eq!(
        &r.raw * BigRational::from_integer(BigInt::from(r.prefactor)),
        -BigRational::from_integer(genenum_product(3, 3, 4, 2).unwrap())
    );
    assert!(r.matches);
}

#[test]
fn a_odd_case_evaluates_to_the_exchanged_product() {
    let r = pfaffian_check(BorderedCase::AOdd, 3, 2, 4, 2).unwrap();
    assert_eq!(r.product, BigInt::from(12));
    assert!(r.matches);
    assert_ne!(genenum_product(3, 2, 4, 2).unwrap(), r.product);
}
