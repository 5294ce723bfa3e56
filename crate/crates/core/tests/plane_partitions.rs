use std::collections::HashSet;

use num_traits::Signed;
use scpp_core::partitions::Partition;
use scpp_core::plane_partition::half_full;
use scpp_core::product::{box_count, genenum_product, sc_count};
use scpp_core::scpp::{
    count_scpp, count_scpp_middle_line, count_scpp_signed, enumerate_pp, enumerate_scpp, move_graph,
};
use scpp_core::tableau::enumerate_ssyt;
use scpp_core::{Budget, PlanePartitionArray};

#[test]
fn enumeration_sizes_match_the_box_product() {
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=3 {
                let all = enumerate_pp(a, b, c, &Budget::default()).unwrap();
                assert_eq!(num_bigint::BigInt::from(all.len()), box_count(a, b, c));
                let distinct: HashSet<_> = all.iter().collect();
                assert_eq!(distinct.len(), all.len());
            }
        }
    }
}

#[test]
fn tableau_map_is_a_bijection_onto_bounded_rectangles() {
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=3 {
                let images: HashSet<_> = enumerate_pp(a, b, c, &Budget::default())
                    .unwrap()
                    .iter()
                    .map(|p| p.to_tableau().rows().to_vec())
                    .collect();
                let targets: HashSet<_> = enumerate_ssyt(
                    &Partition::rectangle(a, c),
                    &Partition::empty(),
                    (a + b) as u32,
                )
                .unwrap()
                .map(|t| t.rows().to_vec())
                .collect();
                assert_eq!(images, targets, "({a},{b},{c})");
            }
        }
    }
}

#[test]
fn tableau_round_trip() {
    for p in enumerate_pp(2, 2, 2, &Budget::default()).unwrap() {
        assert_eq!(PlanePartitionArray::from_tableau(&p.to_tableau()).unwrap(), p);
    }
}

#[test]
fn self_complementary_tableaux_have_rotation_sums() {
    for a in 0..=4 {
        for b in 0..=4 {
            for c in 0..=4 {
                for p in enumerate_scpp(a, b, c, &Budget::default()).unwrap() {
                    let t = p.to_tableau();
                    for i in 0..a {
                        for j in 0..c {
                            let v = t.get(i, j).unwrap() + t.get(a - 1 - i, c - 1 - j).unwrap();
                            assert_eq!(v as usize, a + b + 1);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn signed_count_is_permutation_invariant_up_to_sign() {
    for a in 0..=4 {
        for b in 0..=4 {
            for c in 0..=4 {
                let base = count_scpp_signed(a, b, c, &Budget::default()).unwrap().total().abs();
                for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                    let other = count_scpp_signed(x, y, z, &Budget::default()).unwrap();
                    assert_eq!(other.total().abs(), base, "({a},{b},{c}) vs ({x},{y},{z})");
                }
            }
        }
    }
}

#[test]
fn all_even_signed_count_is_the_half_box() {
    for (a, b, c) in [(2, 2, 2), (2, 4, 2), (4, 2, 4), (2, 2, 6), (4, 4, 4)] {
        let s = count_scpp_signed(a, b, c, &Budget::default()).unwrap();
        assert_eq!(s.total().abs(), box_count(a / 2, b / 2, c / 2), "({a},{b},{c})");
    }
}

#[test]
fn half_full_is_a_positive_vertex_of_a_connected_graph() {
    let g = move_graph(4, 4, 4, &Budget::default()).unwrap();
    assert_eq!(num_bigint::BigInt::from(g.vertices), sc_count(4, 4, 4));
    assert_eq!(g.components, 1);
    assert_eq!(g.inconsistent_edges, 0);
    assert!(g.edges > 0);
    assert_eq!(half_full(4, 4, 4).unwrap().weight().unwrap(), 1);
}

#[test]
fn zero_length_line_gives_all_self_complementary_arrays() {
    for a in 0..=4 {
        for b in 0..=4 {
            if a % 2 == 0 && b % 2 == 1 {
                continue;
            }
            for c in (0..=6).step_by(2) {
                let line = count_scpp_middle_line(a, b, c, c, &Budget::default()).unwrap();
                let all = count_scpp(a, b, c, &Budget::default()).unwrap();
                // a line of length 0 is automatically respected
                assert_eq!(line, all, "({a},{b},{c})");
                assert_eq!(line, genenum_product(a, b, c, c).unwrap());
            }
        }
    }
}

#[test]
fn all_odd_boxes_are_empty() {
    for a in [1, 3] {
        for b in [1, 3, 5] {
            for c in [1, 3] {
                assert_eq!(count_scpp(a, b, c, &Budget::default()).unwrap(), 0.into());
            }
        }
    }
}
