//! Plane partitions in the array picture: an `a × c` matrix with entries in
//! `[0, b]`, weakly decreasing along rows and columns. Entry `(i, j)` is the
//! height of the stack of cubes over that square.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::product::BoxDims;
use crate::tableau::SemistandardTableau;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PlanePartitionArray {
    rows: usize,
    cols: usize,
    height_bound: u32,
    entries: Vec<u32>,
}

impl PlanePartitionArray {
    /// Validates bounds and monotonicity. `entries` is row-major.
    pub fn new(rows: usize, cols: usize, height_bound: u32, entries: Vec<u32>) -> Result<Self> {
        let p = PlanePartitionArray {
            rows,
            cols,
            height_bound,
            entries,
        };
        p.check()?;
        Ok(p)
    }

    pub fn from_rows(height_bound: u32, rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidArray("ragged rows".into()));
        }
        Self::new(rows.len(), cols, height_bound, rows.concat())
    }

    pub(crate) fn from_raw(rows: usize, cols: usize, height_bound: u32, entries: Vec<u32>) -> Self {
        let p = PlanePartitionArray {
            rows,
            cols,
            height_bound,
            entries,
        };
        debug_assert!(p.check().is_ok());
        p
    }

    pub fn zeros(rows: usize, cols: usize, height_bound: u32) -> Self {
        Self::from_raw(rows, cols, height_bound, vec![0; rows * cols])
    }

    pub fn constant(rows: usize, cols: usize, height_bound: u32, value: u32) -> Result<Self> {
        Self::new(rows, cols, height_bound, vec![value; rows * cols])
    }

    fn check(&self) -> Result<()> {
        if self.entries.len() != self.rows * self.cols {
            return Err(Error::InvalidArray(format!(
                "{} entries for a {}x{} array",
                self.entries.len(),
                self.rows,
                self.cols
            )));
        }
        if !is_plane_partition(self.rows, self.cols, self.height_bound, &self.entries) {
            return Err(Error::InvalidArray(
                "entries must lie in [0, b] and weakly decrease along rows and columns".into(),
            ));
        }
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn height_bound(&self) -> u32 {
        self.height_bound
    }

    pub fn dims(&self) -> BoxDims {
        BoxDims::new(self.rows, self.height_bound as usize, self.cols)
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Entry at 0-based `(row, col)`.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.entries[row * self.cols + col]
    }

    /// Number of cubes.
    pub fn volume(&self) -> u64 {
        self.entries.iter().map(|&e| e as u64).sum()
    }

    /// Every entry and its partner under 180° rotation add up to `b`.
    pub fn is_self_complementary(&self) -> bool {
        is_self_complementary_slice(self.height_bound, &self.entries)
    }

    /// Number of complementary cube pairs whose member in the plane
    /// partition is the lexicographically larger one.
    ///
    /// Cube `(i, j, k)` is paired with `(a+1-i, c+1-j, b+1-k)`. For a
    /// self-complementary array exactly one member of each pair is present,
    /// and a single remove-and-add-opposite move changes this count by one.
    pub fn pair_orientation_count(&self) -> u64 {
        pair_orientation_count(self.rows, self.cols, self.height_bound, &self.entries)
    }

    /// The `±1` weight relative to the half-full reference array.
    pub fn weight(&self) -> Result<i8> {
        if !self.is_self_complementary() {
            return Err(Error::NotSelfComplementary);
        }
        let reference = half_full(self.rows, self.height_bound as usize, self.cols)?;
        let diff = self.pair_orientation_count() + reference.pair_orientation_count();
        Ok(if diff % 2 == 0 { 1 } else { -1 })
    }

    /// Rotates by 180° and adds the (1-based) row index to each row.
    ///
    /// The result is a semistandard tableau of the `a × c` rectangle with
    /// entries in `[1, a+b]`. Arrays without columns give the empty tableau,
    /// so [`Self::from_tableau`] recovers them only up to the row count.
    pub fn to_tableau(&self) -> SemistandardTableau {
        let shape = Partition::rectangle(self.rows, self.cols);
        // an a x 0 array has the empty shape, with no rows at all
        let rows = (0..shape.len())
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(self.rows - 1 - i, self.cols - 1 - j) + i as u32 + 1)
                    .collect()
            })
            .collect();
        SemistandardTableau::new(
            shape,
            Partition::empty(),
            self.rows as u32 + self.height_bound,
            rows,
        )
        .expect("rotation plus row shift of a plane partition is semistandard")
    }

    /// Inverse of [`Self::to_tableau`]; the height bound is
    /// `max_entry - rows`.
    pub fn from_tableau(t: &SemistandardTableau) -> Result<Self> {
        let rows = t.rows().len();
        let cols = t.outer().part(0);
        if !t.inner().is_empty() || *t.outer() != Partition::rectangle(rows, cols) {
            return Err(Error::Precondition("tableau must have rectangular shape".into()));
        }
        let max = t.max_entry() as usize;
        if max < rows {
            return Err(Error::Precondition(format!(
                "max entry {max} is smaller than the row count {rows}"
            )));
        }
        let height_bound = (max - rows) as u32;
        let mut entries = vec![0; rows * cols];
        for i in 0..rows {
            for j in 0..cols {
                let v = t.rows()[i][j];
                let shifted = v.checked_sub(i as u32 + 1).ok_or_else(|| {
                    Error::InvalidArray(format!("entry {v} in row {} is below the row index", i + 1))
                })?;
                entries[(rows - 1 - i) * cols + (cols - 1 - j)] = shifted;
            }
        }
        Self::new(rows, cols, height_bound, entries)
    }
}

impl fmt::Display for PlanePartitionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

pub(crate) fn is_plane_partition(rows: usize, cols: usize, height: u32, e: &[u32]) -> bool {
    for i in 0..rows {
        for j in 0..cols {
            let v = e[i * cols + j];
            if v > height {
                return false;
            }
            if j > 0 && e[i * cols + j - 1] < v {
                return false;
            }
            if i > 0 && e[(i - 1) * cols + j] < v {
                return false;
            }
        }
    }
    true
}

pub(crate) fn is_self_complementary_slice(height: u32, e: &[u32]) -> bool {
    let n = e.len();
    (0..n).all(|k| e[k] + e[n - 1 - k] == height)
}

pub(crate) fn pair_orientation_count(rows: usize, cols: usize, height: u32, e: &[u32]) -> u64 {
    let n = rows * cols;
    let mut f = 0u64;
    // cell k = i*cols + j has partner n-1-k; row-major order on cells is the
    // lexicographic order on (i, j)
    for (k, &h) in e.iter().enumerate() {
        let partner = n - 1 - k;
        if k > partner {
            f += h as u64;
        } else if k == partner {
            // centre stack: cube level l pairs with b+1-l
            f += (h as u64).saturating_sub((height as u64 + 1) / 2);
        }
    }
    f
}

/// The reference self-complementary array of weight `+1`.
///
/// Splits along `b` when `b` is even (constant `b/2`), otherwise along the
/// columns when `c` is even, otherwise along the rows.
pub fn half_full(a: usize, b: usize, c: usize) -> Result<PlanePartitionArray> {
    let hb = b as u32;
    if b % 2 == 0 {
        return PlanePartitionArray::constant(a, c, hb, hb / 2);
    }
    let (hi, lo) = (hb.div_ceil(2), hb / 2);
    let entries: Vec<u32> = if c % 2 == 0 {
        (0..a)
            .flat_map(|_| (0..c).map(move |j| if j < c / 2 { hi } else { lo }))
            .collect()
    } else if a % 2 == 0 {
        (0..a)
            .flat_map(|i| std::iter::repeat_n(if i < a / 2 { hi } else { lo }, c))
            .collect()
    } else {
        return Err(Error::Parity(format!(
            "box ({a},{b},{c}) has odd volume and no self-complementary plane partition"
        )));
    };
    PlanePartitionArray::new(a, c, hb, entries)
}

/// Signed tally of a `±1`-weighted enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SignedCount {
    pub positive: BigInt,
    pub negative: BigInt,
}

impl SignedCount {
    pub fn add(&mut self, weight: i8) {
        if weight > 0 {
            self.positive += 1u32;
        } else {
            self.negative += 1u32;
        }
    }

    pub fn total(&self) -> BigInt {
        &self.positive - &self.negative
    }

    pub fn unsigned(&self) -> BigInt {
        &self.positive + &self.negative
    }

    pub fn merge(&mut self, other: &SignedCount) {
        self.positive += &other.positive;
        self.negative += &other.negative;
    }

    pub fn is_empty(&self) -> bool {
        self.positive.is_zero() && self.negative.is_zero()
    }
}
