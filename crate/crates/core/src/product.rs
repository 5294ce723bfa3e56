//! Closed-form products: MacMahon's box formula and the self-complementary,
//! middle-line and signed counts built from it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Side lengths of a box; `a` rows, `c` columns and height `b` in the
/// array picture.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoxDims {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl BoxDims {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        BoxDims { a, b, c }
    }

    pub fn volume(&self) -> usize {
        self.a * self.b * self.c
    }

    /// Whether some self-complementary plane partition exists.
    pub fn admits_self_complementary(&self) -> bool {
        self.volume() % 2 == 0
    }

    /// All six orderings of the sides.
    pub fn permutations(&self) -> [BoxDims; 6] {
        let BoxDims { a, b, c } = *self;
        [
            BoxDims::new(a, b, c),
            BoxDims::new(a, c, b),
            BoxDims::new(b, a, c),
            BoxDims::new(b, c, a),
            BoxDims::new(c, a, b),
            BoxDims::new(c, b, a),
        ]
    }

    /// Relabels the sides into one of the two mixed-parity normal forms:
    /// `a` even with `b, c` odd, or `a` odd with `b, c` even. `None` when
    /// all sides share a parity.
    pub fn mixed_parity_normal_form(&self) -> Option<BoxDims> {
        let sides = [self.a, self.b, self.c];
        let odd: Vec<usize> = sides.iter().copied().filter(|s| s % 2 == 1).collect();
        let even: Vec<usize> = sides.iter().copied().filter(|s| s % 2 == 0).collect();
        match (odd.len(), even.len()) {
            (2, 1) => Some(BoxDims::new(even[0], odd[0], odd[1])),
            (1, 2) => Some(BoxDims::new(odd[0], even[0], even[1])),
            _ => None,
        }
    }
}

/// Rising factorial `(a)_n = a (a+1) … (a+n-1)`.
pub fn rising_factorial(a: i64, n: usize) -> BigInt {
    (0..n as i64).fold(BigInt::one(), |acc, k| acc * BigInt::from(a + k))
}

/// `B(a, b, c) = ∏_{i=1}^{a} (c+i)_b / (i)_b`, reduced exactly at each step.
pub fn box_count_exact(a: usize, b: usize, c: usize) -> Result<BigInt> {
    let mut acc = BigRational::one();
    for i in 1..=a {
        acc *= BigRational::new(
            rising_factorial((c + i) as i64, b),
            rising_factorial(i as i64, b),
        );
    }
    if !acc.denom().is_one() {
        return Err(Error::NonIntegral(format!("B({a},{b},{c}) = {acc}")));
    }
    Ok(acc.to_integer())
}

/// Number of plane partitions in an `a × b × c` box.
pub fn box_count(a: usize, b: usize, c: usize) -> BigInt {
    box_count_exact(a, b, c).expect("MacMahon's product is always an integer")
}

/// Number of self-complementary plane partitions in an `a × b × c` box.
///
/// The count is symmetric in the sides, so any mixed-parity triple is
/// relabeled into the `a` even / `a` odd normal forms. All-odd boxes have
/// odd volume and no self-complementary member.
pub fn sc_count(a: usize, b: usize, c: usize) -> BigInt {
    let dims = BoxDims::new(a, b, c);
    if a % 2 == 0 && b % 2 == 0 && c % 2 == 0 {
        let v = box_count(a / 2, b / 2, c / 2);
        return &v * &v;
    }
    match dims.mixed_parity_normal_form() {
        None => BigInt::zero(),
        Some(BoxDims { a, b, c }) if a % 2 == 0 => {
            box_count(a / 2, (b + 1) / 2, (c - 1) / 2) * box_count(a / 2, (b - 1) / 2, (c + 1) / 2)
        }
        Some(BoxDims { a, b, c }) => {
            box_count((a + 1) / 2, b / 2, c / 2) * box_count((a - 1) / 2, b / 2, c / 2)
        }
    }
}

fn check_middle_line_sides(c1: usize, c2: usize) -> Result<()> {
    if c1 % 2 == 1 || c2 % 2 == 1 {
        return Err(Error::Parity(format!("c1={c1} and c2={c2} must both be even")));
    }
    if c1 < c2 {
        return Err(Error::Precondition(format!("c1={c1} must be at least c2={c2}")));
    }
    Ok(())
}

/// Number of self-complementary plane partitions in an
/// `a × b × (c1+c2)/2` box with a fixed middle line of length `(c1-c2)/2`.
///
/// For `a` odd and `b` even this is `B((a-1)/2, b/2, c1/2) · B((a+1)/2, b/2, c2/2)`,
/// the value forced by the array model; see [`genenum_product_swapped`]
/// for the form with `c1` and `c2` exchanged.
pub fn genenum_product(a: usize, b: usize, c1: usize, c2: usize) -> Result<BigInt> {
    check_middle_line_sides(c1, c2)?;
    match (a % 2, b % 2) {
        (0, 0) => Ok(box_count(a / 2, b / 2, c1 / 2) * box_count(a / 2, b / 2, c2 / 2)),
        (1, 0) => Ok(box_count((a - 1) / 2, b / 2, c1 / 2) * box_count((a + 1) / 2, b / 2, c2 / 2)),
        (1, 1) => Ok(
            box_count((a - 1) / 2, (b + 1) / 2, c1 / 2) * box_count((a + 1) / 2, (b - 1) / 2, c2 / 2),
        ),
        _ => Err(Error::Parity(format!(
            "a={a} even with b={b} odd has no middle-line formula"
        ))),
    }
}

/// The middle-line products with the `a` odd, `b` even case written as
/// `B((a+1)/2, b/2, c1/2) · B((a-1)/2, b/2, c2/2)`.
///
/// This is the value the bordered Pfaffian of that case evaluates to. It
/// is not a count of constrained plane partitions when `c1 > c2`; e.g.
/// `(1, 2, 4, 0)` gives 3 while the `1 × 2 × 2` box holds only 2
/// self-complementary members.
pub fn genenum_product_swapped(a: usize, b: usize, c1: usize, c2: usize) -> Result<BigInt> {
    check_middle_line_sides(c1, c2)?;
    if a % 2 == 1 && b % 2 == 0 {
        return Ok(box_count((a + 1) / 2, b / 2, c1 / 2) * box_count((a - 1) / 2, b / 2, c2 / 2));
    }
    genenum_product(a, b, c1, c2)
}

/// Magnitude of the signed enumeration of self-complementary plane
/// partitions for boxes with mixed side parities:
///
/// * `a` even, `b, c` odd: `SC(a/2, (b+1)/2, (c-1)/2) · SC(a/2, (b-1)/2, (c+1)/2)`
/// * `a` odd, `b, c` even: `SC((a+1)/2, b/2, c/2) · SC((a-1)/2, b/2, c/2)`
///
/// Other mixed-parity triples are relabeled into these forms; the signed
/// count is symmetric in the sides up to sign.
pub fn minenum_product(a: usize, b: usize, c: usize) -> Result<BigInt> {
    let Some(n) = BoxDims::new(a, b, c).mixed_parity_normal_form() else {
        return Err(Error::Parity(format!(
            "({a},{b},{c}) has no mixed parity; all-even boxes use minenum_all_even"
        )));
    };
    let BoxDims { a, b, c } = n;
    if a % 2 == 0 {
        Ok(sc_count(a / 2, (b + 1) / 2, (c - 1) / 2) * sc_count(a / 2, (b - 1) / 2, (c + 1) / 2))
    } else {
        Ok(sc_count((a + 1) / 2, b / 2, c / 2) * sc_count((a - 1) / 2, b / 2, c / 2))
    }
}

/// Magnitude of the signed enumeration when all sides are even:
/// `B(a/2, b/2, c/2)`.
pub fn minenum_all_even(a: usize, b: usize, c: usize) -> Result<BigInt> {
    if a % 2 == 1 || b % 2 == 1 || c % 2 == 1 {
        return Err(Error::Parity(format!("({a},{b},{c}) is not all even")));
    }
    Ok(box_count(a / 2, b / 2, c / 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn rising_factorial_examples() {
        assert_eq!(rising_factorial(3, 2), big(12));
        assert_eq!(rising_factorial(7, 0), big(1));
        assert_eq!(rising_factorial(1, 4), big(24));
        assert_eq!(rising_factorial(-2, 3), big(0));
    }

    /// Triple product over unit cubes, kept independent of the
    /// rising-factorial route.
    fn box_triple_product(a: usize, b: usize, c: usize) -> BigRational {
        let mut acc = BigRational::one();
        for i in 1..=a {
            for j in 1..=b {
                for k in 1..=c {
                    acc *= BigRational::new(big((i + j + k - 1) as i64), big((i + j + k - 2) as i64));
                }
            }
        }
        acc
    }

    #[test]
    fn box_examples() {
        assert_eq!(box_count(1, 1, 1), big(2));
        assert_eq!(box_count(2, 2, 2), big(20));
        assert_eq!(box_count(3, 4, 0), big(1));
        assert_eq!(box_count(0, 0, 0), big(1));
        assert_eq!(box_count(3, 3, 3), big(980));
    }

    #[test]
    fn box_forms_agree_and_are_symmetric() {
        for a in 0..=8 {
            for b in 0..=8 {
                for c in 0..=8 {
                    let v = box_count(a, b, c);
                    if a + b + c <= 12 {
                        assert_eq!(BigRational::from_integer(v.clone()), box_triple_product(a, b, c));
                    }
                    for p in BoxDims::new(a, b, c).permutations() {
                        assert_eq!(box_count(p.a, p.b, p.c), v, "({a},{b},{c})");
                    }
                }
            }
        }
    }

    #[test]
    fn sc_examples() {
        assert_eq!(sc_count(2, 2, 2), big(4));
        assert_eq!(sc_count(2, 1, 1), big(1));
        assert_eq!(sc_count(1, 1, 1), big(0));
        assert_eq!(sc_count(3, 5, 7), big(0));
        // relabeled parities agree
        assert_eq!(sc_count(1, 2, 1), sc_count(2, 1, 1));
        assert_eq!(sc_count(2, 3, 4), sc_count(3, 2, 4));
    }

    #[test]
    fn genenum_examples() {
        assert_eq!(genenum_product(2, 2, 2, 2).unwrap(), big(4));
        assert_eq!(genenum_product(2, 2, 4, 0).unwrap(), big(3));
        assert_eq!(genenum_product(4, 2, 0, 0).unwrap(), big(1));
        assert_eq!(genenum_product(1, 2, 2, 2).unwrap(), big(2));
        assert!(matches!(genenum_product(2, 1, 2, 2), Err(Error::Parity(_))));
        assert!(matches!(genenum_product(2, 2, 3, 1), Err(Error::Parity(_))));
        assert!(matches!(genenum_product(2, 2, 2, 4), Err(Error::Precondition(_))));
    }

    #[test]
    fn swapped_form_differs_only_in_the_a_odd_b_even_case() {
        assert_eq!(genenum_product_swapped(1, 2, 4, 0).unwrap(), big(3));
        assert_eq!(genenum_product(1, 2, 4, 0).unwrap(), big(1));
        assert!(genenum_product_swapped(1, 2, 4, 0).unwrap() > sc_count(1, 2, 2));
        // the two forms coincide whenever c1 = c2 or the parity case differs
        assert_eq!(genenum_product_swapped(3, 2, 4, 4).unwrap(), genenum_product(3, 2, 4, 4).unwrap());
        assert_eq!(genenum_product_swapped(3, 3, 6, 2).unwrap(), genenum_product(3, 3, 6, 2).unwrap());
        assert_eq!(genenum_product_swapped(2, 4, 6, 2).unwrap(), genenum_product(2, 4, 6, 2).unwrap());
        // B(2,1,2)·B(1,1,1) = 6·2 against B(1,1,2)·B(2,1,1) = 3·3
        assert_eq!(genenum_product_swapped(3, 2, 4, 2).unwrap(), big(12));
        assert_eq!(genenum_product(3, 2, 4, 2).unwrap(), big(9));
    }

    #[test]
    fn genenum_at_equal_lengths_is_sc() {
        for a in 0..=6 {
            for b in 0..=6 {
                for c in (0..=6).step_by(2) {
                    if let Ok(g) = genenum_product(a, b, c, c) {
                        assert_eq!(g, sc_count(a, b, c), "({a},{b},{c})");
                    }
                }
            }
        }
    }

    #[test]
    fn minenum_examples() {
        assert_eq!(minenum_product(2, 1, 1).unwrap(), big(1));
        assert_eq!(minenum_product(1, 2, 2).unwrap(), big(0));
        assert_eq!(
            minenum_product(2, 3, 3).unwrap(),
            sc_count(1, 2, 1) * sc_count(1, 1, 2)
        );
        assert!(matches!(minenum_product(2, 2, 2), Err(Error::Parity(_))));
        assert!(matches!(minenum_product(1, 3, 5), Err(Error::Parity(_))));
        assert_eq!(minenum_all_even(2, 2, 2).unwrap(), big(2));
        assert!(minenum_all_even(2, 1, 2).is_err());
    }
}
