//! Skew-symmetric matrices, Pfaffians and the bordered binomial matrices
//! whose Pfaffians give the middle-line counts.
//!
//! Sign conventions were fixed numerically over `a, b ≤ 6`,
//! `c2 ≤ c1 ≤ 8`:
//!
//! * `a, b` even: `Pf = B(a/2, b/2, c1/2) · B(a/2, b/2, c2/2)`.
//! * `a` odd, `b` even: `(-1)^((a-1)/2) · Pf = B((a+1)/2, b/2, c1/2) · B((a-1)/2, b/2, c2/2)`,
//!   see [`crate::product::genenum_product_swapped`].
//! * `a, b` odd: `(-1)^((a-1)/2) · Pf` is the *negative* of the
//!   middle-line product, so [`pfaffian_check`] applies one more `-1`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::product::{genenum_product, genenum_product_swapped};
use crate::scalar::{Field, Ring};

/// Largest dimension accepted by [`SkewSymmetricMatrix::pfaffian`].
pub const MAX_PFAFFIAN_DIM: usize = 24;

#[derive(Debug, Clone, PartialEq)]
pub struct SkewSymmetricMatrix<T> {
    dim: usize,
    entries: Vec<T>,
}

impl<T: Ring> SkewSymmetricMatrix<T> {
    /// Validates an even-dimensional antisymmetric row-major matrix.
    pub fn new(dim: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::Dimension {
                expected: dim * dim,
                actual: entries.len(),
            });
        }
        if dim % 2 == 1 {
            return Err(Error::Parity(format!(
                "Pfaffian needs an even dimension, got {dim}"
            )));
        }
        for i in 0..dim {
            for j in i..dim {
                if entries[i * dim + j] != entries[j * dim + i].negated() {
                    return Err(Error::NotSkewSymmetric { row: i, col: j });
                }
            }
        }
        Ok(SkewSymmetricMatrix { dim, entries })
    }

    /// Builds the matrix from its strict upper triangle, `upper(i, j)` for
    /// `i < j` (0-based).
    pub fn from_upper(dim: usize, mut upper: impl FnMut(usize, usize) -> T) -> Result<Self> {
        if dim % 2 == 1 {
            return Err(Error::Parity(format!(
                "Pfaffian needs an even dimension, got {dim}"
            )));
        }
        let mut entries = vec![T::zero(); dim * dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let v = upper(i, j);
                entries[j * dim + i] = v.negated();
                entries[i * dim + j] = v;
            }
        }
        Ok(SkewSymmetricMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> SkewSymmetricMatrix<U> {
        SkewSymmetricMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// `S^T M S` for the diagonal `S = diag(1, .., s, .., 1)`, `s` at
    /// `index`.
    pub fn scale_index(&self, index: usize, s: &T) -> Self {
        let mut out = self.clone();
        for k in 0..self.dim {
            let row = index * self.dim + k;
            out.entries[row] = out.entries[row].clone() * s;
            let col = k * self.dim + index;
            out.entries[col] = out.entries[col].clone() * s;
        }
        out
    }

    /// Block-diagonal matrix with `self` first.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let dim = self.dim + other.dim;
        let mut entries = vec![T::zero(); dim * dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                entries[i * dim + j] = self.get(i, j).clone();
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                entries[(self.dim + i) * dim + self.dim + j] = other.get(i, j).clone();
            }
        }
        SkewSymmetricMatrix { dim, entries }
    }

    /// Expansion along the first remaining index, memoized over the
    /// subsets of indices still to be matched.
    pub fn pfaffian(&self) -> Result<T> {
        if self.dim > MAX_PFAFFIAN_DIM {
            return Err(Error::Precondition(format!(
                "dimension {} exceeds {MAX_PFAFFIAN_DIM}",
                self.dim
            )));
        }
        let full = (1u32 << self.dim) - 1;
        let mut memo = HashMap::new();
        Ok(self.pf_rec(full, &mut memo))
    }

    fn pf_rec(&self, set: u32, memo: &mut HashMap<u32, T>) -> T {
        if set == 0 {
            return T::one();
        }
        if let Some(v) = memo.get(&set) {
            return v.clone();
        }
        let i = set.trailing_zeros() as usize;
        let rest = set & !(1 << i);
        let mut acc = T::zero();
        let mut position = 0;
        let mut bits = rest;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let a = self.get(i, j);
            if !a.is_zero() {
                let term = self.pf_rec(rest & !(1 << j), memo) * a;
                acc = if position % 2 == 0 { acc + &term } else { acc - term };
            }
            position += 1;
        }
        memo.insert(set, acc.clone());
        acc
    }
}

impl<T: Field> SkewSymmetricMatrix<T> {
    pub fn determinant(&self) -> T {
        determinant(self.dim, &self.entries)
    }
}

impl<T: Ring + fmt::Display> fmt::Display for SkewSymmetricMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            if i > 0 {
                writeln!(f)?;
            }
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Determinant of a square row-major matrix by Gaussian elimination.
pub fn determinant<T: Field>(dim: usize, entries: &[T]) -> T {
    assert_eq!(entries.len(), dim * dim, "matrix must be square");
    let mut m = entries.to_vec();
    let mut det = T::one();
    for col in 0..dim {
        let Some(pivot) = (col..dim).find(|&r| !m[r * dim + col].is_zero()) else {
            return T::zero();
        };
        if pivot != col {
            for k in 0..dim {
                m.swap(pivot * dim + k, col * dim + k);
            }
            det = -det;
        }
        let p = m[col * dim + col].clone();
        det = det * &p;
        for r in col + 1..dim {
            let factor = m[r * dim + col].clone() / p.clone();
            if factor.is_zero() {
                continue;
            }
            for k in col..dim {
                let v = m[col * dim + k].clone() * &factor;
                m[r * dim + k] = m[r * dim + k].clone() - v;
            }
        }
    }
    det
}

/// `C(n, k)`, zero for `k` outside `[0, n]`. Negative `n` is rejected.
pub fn binomial_safe(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::Precondition(format!("binomial with negative top {n}")));
    }
    if k < 0 || k > n {
        return Ok(BigInt::zero());
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BorderedCase {
    /// `a, b, c1, c2` even.
    EvenEven,
    /// `a` odd, `b, c1, c2` even.
    AOdd,
    /// `a, b` odd, `c1, c2` even.
    AbOdd,
}

impl BorderedCase {
    pub const ALL: [BorderedCase; 3] = [Self::EvenEven, Self::AOdd, Self::AbOdd];

    pub fn name(&self) -> &'static str {
        match self {
            Self::EvenEven => "even-even",
            Self::AOdd => "a-odd",
            Self::AbOdd => "ab-odd",
        }
    }

    /// Whether `(a, b)` has the parities of this case.
    pub fn admits(&self, a: usize, b: usize) -> bool {
        match self {
            Self::EvenEven => a % 2 == 0 && b % 2 == 0,
            Self::AOdd => a % 2 == 1 && b % 2 == 0,
            Self::AbOdd => a % 2 == 1 && b % 2 == 1,
        }
    }
}

impl fmt::Display for BorderedCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BorderedCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown case {s:?}")))
    }
}

/// A bordered binomial matrix together with its sign prefactor.
#[derive(Debug, Clone, PartialEq)]
pub struct BorderedMatrix {
    pub case: BorderedCase,
    pub matrix: SkewSymmetricMatrix<BigRational>,
    /// `1` for the even case, `(-1)^((a-1)/2)` for the bordered cases.
    pub prefactor: i32,
}

pub fn bordered_matrix(case: BorderedCase, a: usize, b: usize, c1: usize, c2: usize) -> Result<BorderedMatrix> {
    if !case.admits(a, b) {
        return Err(Error::Parity(format!("(a,b)=({a},{b}) does not fit the {case} case")));
    }
    if c1 % 2 == 1 || c2 % 2 == 1 {
        return Err(Error::Parity(format!("c1={c1} and c2={c2} must both be even")));
    }
    if c1 < c2 {
        return Err(Error::Precondition(format!("c1={c1} must be at least c2={c2}")));
    }
    let (a, b, c1, c2) = (a as i64, b as i64, c1 as i64, c2 as i64);
    let (n1, n2, bound) = match case {
        BorderedCase::EvenEven => ((b + c1) / 2, (b + c2) / 2, (a + b) / 2),
        BorderedCase::AOdd => ((b + c1) / 2, (b + c2) / 2, (a + b - 1) / 2),
        BorderedCase::AbOdd => ((b + c2 - 1) / 2, (b + c1 + 1) / 2, (a + b) / 2),
    };
    let c = |n: i64, k: i64| binomial_safe(n, k);
    // 1-based i, j in 1..=a
    let inner = |i: i64, j: i64| -> Result<BigInt> {
        let mut s = BigInt::zero();
        for k in 1..=bound {
            s += c(n1, b + i - k)? * c(n2, j + k - a - 1)?;
            s -= c(n1, b + j - k)? * c(n2, i + k - a - 1)?;
        }
        Ok(s)
    };
    let border = |i: i64| -> Result<BigInt> {
        match case {
            BorderedCase::AOdd => c(n1, b + i - (a + b + 1) / 2),
            _ => Ok(-c(n1, b + i - (a + b) / 2 - 1)?),
        }
    };
    let dim = match case {
        BorderedCase::EvenEven => a as usize,
        _ => a as usize + 1,
    };
    let mut upper = vec![BigInt::zero(); dim * dim];
    for i in 0..dim {
        for j in i + 1..dim {
            upper[i * dim + j] = if j < a as usize {
                inner(i as i64 + 1, j as i64 + 1)?
            } else {
                border(i as i64 + 1)?
            };
        }
    }
    let matrix = SkewSymmetricMatrix::from_upper(dim, |i, j| {
        BigRational::from_integer(upper[i * dim + j].clone())
    })?;
    let prefactor = match case {
        BorderedCase::EvenEven => 1,
        _ if ((a - 1) / 2) % 2 == 0 => 1,
        _ => -1,
    };
    Ok(BorderedMatrix {
        case,
        matrix,
        prefactor,
    })
}

/// Outcome of comparing a bordered Pfaffian with its product formula.
#[derive(Debug, Clone, PartialEq)]
pub struct PfaffianCheck {
    pub case: BorderedCase,
    pub params: [usize; 4],
    /// Pfaffian of the matrix as built.
    pub raw: BigRational,
    pub prefactor: i32,
    /// Extra sign found necessary beyond the prefactor.
    pub calibration: i32,
    /// `raw · prefactor · calibration`.
    pub pfaffian: BigRational,
    pub product: BigInt,
    /// `Pf² = det`, checked with an independent elimination.
    pub squared_is_determinant: bool,
    pub matches: bool,
}

/// Builds the matrix for the case, evaluates its Pfaffian and compares the
/// sign-adjusted value with the product formula.
pub fn pfaffian_check(case: BorderedCase, a: usize, b: usize, c1: usize, c2: usize) -> Result<PfaffianCheck> {
    let cm = bordered_matrix(case, a, b, c1, c2)?;
    let raw = cm.matrix.pfaffian()?;
    let det = cm.matrix.determinant();
    let calibration = match case {
        BorderedCase::AbOdd => -1,
        _ => 1,
    };
    let product = match case {
        BorderedCase::AOdd => genenum_product_swapped(a, b, c1, c2)?,
        _ => genenum_product(a, b, c1, c2)?,
    };
    let pfaffian = &raw * BigRational::from_integer(BigInt::from(cm.prefactor * calibration));
    let matches = pfaffian == BigRational::from_integer(product.clone());
    Ok(PfaffianCheck {
        case,
        params: [a, b, c1, c2],
        squared_is_determinant: &raw * &raw == det,
        raw,
        prefactor: cm.prefactor,
        calibration,
        pfaffian,
        product,
        matches,
    })
}
