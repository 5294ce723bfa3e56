//! Self-complementary arrays with a fixed middle line.
//!
//! The box is `a × b × (c1+c2)/2`; the middle line has length
//! `(c1-c2)/2` and sits in the middle of the array. Three parity cases:
//!
//! * `a, b` even: the entry at (1-based) row `a/2`, column `c1/2` is at
//!   least `b/2`.
//! * `a` odd, `b` even: the middle row holds `b/2` in columns
//!   `c2/2+1 ..= c1/2`.
//! * `a, b` odd: those middle-row places are *gaps*. A gap stands for the
//!   half-integer `b/2` and is not a plane-partition cell. Other cells keep
//!   the usual rules, except that nothing is compared across a gap. In
//!   addition, the cell left of the gaps is at least `(b+1)/2`, cells above
//!   them are at least `(b-1)/2` and cells below them at most `(b+1)/2`.
//!   By complementarity the cell right of the gaps is at most `(b-1)/2`.
//!
//! The gap model in the last case is the one whose counts equal
//! `B((a-1)/2, (b+1)/2, c1/2) · B((a+1)/2, (b-1)/2, c2/2)`. Requiring
//! strict inequalities on a plain array with the middle row in place
//! does not reproduce that product.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plane_partition::PlanePartitionArray;
use crate::scpp::GridSearch;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MiddleLineCase {
    EvenEven,
    OddEven,
    OddOdd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MiddleLine {
    a: usize,
    b: usize,
    c1: usize,
    c2: usize,
}

impl MiddleLine {
    pub fn new(a: usize, b: usize, c1: usize, c2: usize) -> Result<Self> {
        if c1 % 2 == 1 || c2 % 2 == 1 {
            return Err(Error::Parity(format!("c1={c1} and c2={c2} must both be even")));
        }
        if c1 < c2 {
            return Err(Error::Precondition(format!("c1={c1} must be at least c2={c2}")));
        }
        if a % 2 == 0 && b % 2 == 1 {
            return Err(Error::Parity(format!(
                "a={a} even with b={b} odd has no middle line"
            )));
        }
        Ok(MiddleLine { a, b, c1, c2 })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn c1(&self) -> usize {
        self.c1
    }

    pub fn c2(&self) -> usize {
        self.c2
    }

    /// Number of array columns, `(c1+c2)/2`.
    pub fn cols(&self) -> usize {
        (self.c1 + self.c2) / 2
    }

    pub fn case(&self) -> MiddleLineCase {
        match (self.a % 2, self.b % 2) {
            (0, _) => MiddleLineCase::EvenEven,
            (_, 0) => MiddleLineCase::OddEven,
            _ => MiddleLineCase::OddOdd,
        }
    }

    /// 0-based columns `c2/2 .. c1/2` covered by the line in the middle row.
    pub fn line_columns(&self) -> std::ops::Range<usize> {
        self.c2 / 2..self.c1 / 2
    }

    fn middle_row(&self) -> usize {
        self.a / 2
    }

    /// Checks the line on a plain array. Only the first two cases are
    /// expressible this way; the odd/odd case needs a [`GappedArray`].
    pub fn admits(&self, p: &PlanePartitionArray) -> Result<bool> {
        if p.rows() != self.a || p.cols() != self.cols() || p.height_bound() as usize != self.b {
            return Err(Error::Precondition(format!(
                "expected a {}x{} array with b={}, got {}x{} with b={}",
                self.a,
                self.cols(),
                self.b,
                p.rows(),
                p.cols(),
                p.height_bound()
            )));
        }
        if !p.is_self_complementary() {
            return Err(Error::NotSelfComplementary);
        }
        let half = (self.b / 2) as u32;
        match self.case() {
            MiddleLineCase::EvenEven => {
                if self.a == 0 || self.c1 == 0 {
                    return Ok(true);
                }
                Ok(p.get(self.a / 2 - 1, self.c1 / 2 - 1) >= half)
            }
            MiddleLineCase::OddEven => {
                let r = self.middle_row();
                Ok(self.line_columns().all(|j| p.get(r, j) == half))
            }
            MiddleLineCase::OddOdd => Err(Error::Precondition(
                "a and b odd: the middle line leaves gaps, use a gapped array".into(),
            )),
        }
    }

    /// Checks the line on a gapped array. For the first two cases the
    /// array must have no gaps.
    pub fn admits_gapped(&self, g: &GappedArray) -> Result<bool> {
        if g.rows != self.a || g.cols != self.cols() || g.height_bound as usize != self.b {
            return Err(Error::Precondition(format!(
                "expected a {}x{} array with b={}, got {}x{} with b={}",
                self.a,
                self.cols(),
                self.b,
                g.rows,
                g.cols,
                g.height_bound
            )));
        }
        if self.case() != MiddleLineCase::OddOdd {
            let p = g.to_array().ok_or_else(|| {
                Error::InvalidArray("gaps only occur when a and b are odd".into())
            })?;
            return self.admits(&p);
        }
        Ok(self.gapped_predicate(g))
    }

    fn gapped_predicate(&self, g: &GappedArray) -> bool {
        let (rows, cols, b) = (g.rows, g.cols, g.height_bound);
        let r = self.middle_row();
        let line = self.line_columns();
        let is_gap = |i: usize, j: usize| i == r && line.contains(&j);
        let n = rows * cols;
        for i in 0..rows {
            for j in 0..cols {
                let k = i * cols + j;
                let cell = g.cells[k];
                if is_gap(i, j) {
                    if cell.is_some() {
                        return false;
                    }
                    continue;
                }
                let Some(v) = cell else { return false };
                if v > b {
                    return false;
                }
                match g.cells[n - 1 - k] {
                    Some(w) if v + w == b => {}
                    _ => return false,
                }
                if j > 0 && !is_gap(i, j - 1) && g.cells[k - 1] < Some(v) {
                    return false;
                }
                if i > 0 && !is_gap(i - 1, j) && g.cells[k - cols] < Some(v) {
                    return false;
                }
            }
        }
        if line.is_empty() {
            return true;
        }
        let get = |i: usize, j: usize| g.cells[i * cols + j].unwrap_or(0);
        let (lo_half, hi_half) = ((b - 1) / 2, b.div_ceil(2));
        if line.start > 0 && get(r, line.start - 1) < hi_half {
            return false;
        }
        if line.end < cols && get(r, line.end) > lo_half {
            return false;
        }
        for j in line.clone() {
            if r > 0 && get(r - 1, j) < lo_half {
                return false;
            }
            if r + 1 < rows && get(r + 1, j) > hi_half {
                return false;
            }
        }
        true
    }

    /// The constrained self-complementary search for this line.
    pub(crate) fn search(&self) -> GridSearch {
        let (a, cols, b) = (self.a, self.cols(), self.b as u32);
        let mut s = GridSearch::new(a, cols, b, true);
        let r = self.middle_row();
        match self.case() {
            MiddleLineCase::EvenEven => {
                if a > 0 && self.c1 > 0 {
                    s.raise_lower(a / 2 - 1, self.c1 / 2 - 1, b / 2);
                }
            }
            MiddleLineCase::OddEven => {
                for j in self.line_columns() {
                    s.raise_lower(r, j, b / 2);
                    s.lower_upper(r, j, b / 2);
                }
            }
            MiddleLineCase::OddOdd => {
                let line = self.line_columns();
                let (lo_half, hi_half) = ((b - 1) / 2, b.div_ceil(2));
                for j in line.clone() {
                    s.set_gap(r, j);
                    if r > 0 {
                        s.raise_lower(r - 1, j, lo_half);
                    }
                    if r + 1 < a {
                        s.lower_upper(r + 1, j, hi_half);
                    }
                }
                if !line.is_empty() {
                    if line.start > 0 {
                        s.raise_lower(r, line.start - 1, hi_half);
                    }
                    if line.end < cols {
                        s.lower_upper(r, line.end, lo_half);
                    }
                }
            }
        }
        s
    }
}

/// Checks the middle-line condition for `(a, b, c1, c2)` on a plain array.
pub fn middle_line_constraint(
    p: &PlanePartitionArray,
    a: usize,
    b: usize,
    c1: usize,
    c2: usize,
) -> Result<bool> {
    MiddleLine::new(a, b, c1, c2)?.admits(p)
}

/// An array in which some cells are gaps (`None`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GappedArray {
    rows: usize,
    cols: usize,
    height_bound: u32,
    cells: Vec<Option<u32>>,
}

impl GappedArray {
    pub fn new(rows: usize, cols: usize, height_bound: u32, cells: Vec<Option<u32>>) -> Result<Self> {
        if cells.len() != rows * cols {
            return Err(Error::InvalidArray(format!(
                "{} cells for a {rows}x{cols} array",
                cells.len()
            )));
        }
        if cells.iter().flatten().any(|&v| v > height_bound) {
            return Err(Error::InvalidArray(format!("entry above b={height_bound}")));
        }
        Ok(GappedArray {
            rows,
            cols,
            height_bound,
            cells,
        })
    }

    pub(crate) fn from_raw(rows: usize, cols: usize, height_bound: u32, cells: Vec<Option<u32>>) -> Self {
        GappedArray {
            rows,
            cols,
            height_bound,
            cells,
        }
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

    pub fn cells(&self) -> &[Option<u32>] {
        &self.cells
    }

    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        self.cells[row * self.cols + col]
    }

    pub fn gap_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_none()).count()
    }

    /// The plain array, if there are no gaps.
    pub fn to_array(&self) -> Option<PlanePartitionArray> {
        let entries: Option<Vec<u32>> = self.cells.iter().copied().collect();
        PlanePartitionArray::new(self.rows, self.cols, self.height_bound, entries?).ok()
    }
}

impl From<&PlanePartitionArray> for GappedArray {
    fn from(p: &PlanePartitionArray) -> Self {
        GappedArray::from_raw(
            p.rows(),
            p.cols(),
            p.height_bound(),
            p.entries().iter().map(|&v| Some(v)).collect(),
        )
    }
}

impl fmt::Display for GappedArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.get(i, j).map_or_else(|| ".".to_string(), |v| v.to_string()))
                .collect();
            write!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::product::genenum_product;
    use crate::scpp::{count_scpp_middle_line, for_each_middle_line};
    use num_bigint::BigInt;

    #[test]
    fn validation() {
        assert!(MiddleLine::new(2, 2, 4, 2).is_ok());
        assert!(matches!(MiddleLine::new(2, 2, 3, 1), Err(Error::Parity(_))));
        assert!(matches!(MiddleLine::new(2, 2, 2, 4), Err(Error::Precondition(_))));
        assert!(matches!(MiddleLine::new(2, 1, 2, 2), Err(Error::Parity(_))));
        assert_eq!(MiddleLine::new(3, 1, 2, 2).unwrap().case(), MiddleLineCase::OddOdd);
        assert_eq!(MiddleLine::new(3, 2, 2, 2).unwrap().case(), MiddleLineCase::OddEven);
    }

    #[test]
    fn even_even_instance() {
        // 2x8 array, b=4, c1=10, c2=6: entry (1,5) must be at least 2
        let ok = PlanePartitionArray::from_rows(
            4,
            &[vec![4, 3, 3, 3, 3, 3, 2, 1], vec![3, 2, 1, 1, 1, 1, 1, 0]],
        )
        .unwrap();
        assert_eq!(middle_line_constraint(&ok, 2, 4, 10, 6), Ok(true));
        let bad = PlanePartitionArray::from_rows(
            4,
            &[vec![4, 4, 3, 3, 1, 1, 1, 1], vec![3, 3, 3, 3, 1, 1, 0, 0]],
        )
        .unwrap();
        assert!(bad.is_self_complementary());
        assert_eq!(middle_line_constraint(&bad, 2, 4, 10, 6), Ok(false));
    }

    #[test]
    fn rejects_bad_input() {
        let zeros = PlanePartitionArray::zeros(2, 2, 2);
        assert_eq!(
            middle_line_constraint(&zeros, 2, 2, 2, 2),
            Err(Error::NotSelfComplementary)
        );
        let p = PlanePartitionArray::constant(2, 3, 2, 1).unwrap();
        assert!(matches!(
            middle_line_constraint(&p, 2, 2, 2, 2),
            Err(Error::Precondition(_))
        ));
    }

    /// Every assignment of values and gaps over a small grid.
    fn all_gapped(rows: usize, cols: usize, b: u32) -> Vec<GappedArray> {
        let n = rows * cols;
        let base = b as u64 + 2;
        (0..base.pow(n as u32))
            .map(|code| {
                let mut x = code;
                let cells = (0..n)
                    .map(|_| {
                        let d = (x % base) as u32;
                        x /= base;
                        if d == b + 1 {
                            None
                        } else {
                            Some(d)
                        }
                    })
                    .collect();
                GappedArray::from_raw(rows, cols, b, cells)
            })
            .collect()
    }

    #[test]
    fn search_matches_predicate_filter() {
        let budget = Budget::default();
        for (a, b, c1, c2) in [
            (1, 1, 2, 0),
            (1, 1, 4, 0),
            (1, 1, 2, 2),
            (3, 1, 2, 0),
            (3, 1, 4, 2),
            (1, 3, 4, 2),
            (1, 2, 4, 0),
            (3, 2, 2, 0),
            (2, 2, 4, 0),
            (2, 2, 4, 2),
            (2, 0, 2, 2),
        ] {
            let line = MiddleLine::new(a, b, c1, c2).unwrap();
            let mut found = Vec::new();
            for_each_middle_line(&line, &budget, |g| found.push(g.clone())).unwrap();
            for g in &found {
                assert_eq!(line.admits_gapped(g), Ok(true), "{g}");
            }
            let expected: Vec<GappedArray> = all_gapped(a, line.cols(), b as u32)
                .into_iter()
                .filter(|g| match line.case() {
                    MiddleLineCase::OddOdd => line.admits_gapped(g).unwrap(),
                    _ => g.to_array().is_some_and(|p| line.admits(&p) == Ok(true)),
                })
                .collect();
            found.sort();
            let mut expected = expected;
            expected.sort();
            assert_eq!(found, expected, "({a},{b},{c1},{c2})");
        }
    }

    #[test]
    fn counts_match_products_on_small_cases() {
        let budget = Budget::default();
        for (a, b, c1, c2) in [(2, 2, 4, 0), (2, 2, 4, 2), (3, 2, 4, 2), (3, 3, 4, 2), (1, 1, 6, 2)] {
            assert_eq!(
                count_scpp_middle_line(a, b, c1, c2, &budget).unwrap(),
                genenum_product(a, b, c1, c2).unwrap(),
                "({a},{b},{c1},{c2})"
            );
        }
        assert_eq!(
            count_scpp_middle_line(2, 2, 4, 0, &budget).unwrap(),
            BigInt::from(3)
        );
    }

    #[test]
    fn gapped_display() {
        let line = MiddleLine::new(1, 1, 4, 0).unwrap();
        let mut shown = Vec::new();
        for_each_middle_line(&line, &Budget::default(), |g| shown.push(g.to_string())).unwrap();
        assert_eq!(shown, vec![". ."]);
    }
}
