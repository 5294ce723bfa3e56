//! Semistandard tableaux of straight and skew shape.
//!
//! Tableaux are enumerated row by row: each row is a weakly increasing
//! sequence, every cell strictly above-bounded by the cell over it. The
//! enumerator walks the cells in reading order like an odometer, so each
//! tableau appears exactly once.

use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemistandardTableau {
    outer: Partition,
    inner: Partition,
    max_entry: u32,
    /// `rows[i]` holds the entries of row `i` for columns `inner_i..outer_i`.
    rows: Vec<Vec<u32>>,
}

impl SemistandardTableau {
    /// Validates and wraps a filling. `rows[i]` lists the entries of row
    /// `i` from column `inner_i` on.
    pub fn new(
        outer: Partition,
        inner: Partition,
        max_entry: u32,
        rows: Vec<Vec<u32>>,
    ) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                inner: inner.to_string(),
                outer: outer.to_string(),
            });
        }
        let t = SemistandardTableau {
            outer,
            inner,
            max_entry,
            rows,
        };
        t.check()?;
        Ok(t)
    }

    fn check(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArray(msg));
        if self.rows.len() != self.outer.len() {
            return bad(format!(
                "expected {} rows, got {}",
                self.outer.len(),
                self.rows.len()
            ));
        }
        for (i, row) in self.rows.iter().enumerate() {
            let width = self.outer.part(i) - self.inner.part(i);
            if row.len() != width {
                return bad(format!("row {i} has {} cells, expected {width}", row.len()));
            }
            if row.iter().any(|&e| e == 0 || e > self.max_entry) {
                return bad(format!("row {i} has an entry outside [1, {}]", self.max_entry));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return bad(format!("row {i} is not weakly increasing"));
            }
        }
        for i in 1..self.rows.len() {
            let start = self.inner.part(i).max(self.inner.part(i - 1));
            let end = self.outer.part(i);
            for col in start..end {
                if self.get(i - 1, col) >= self.get(i, col) {
                    return bad(format!("column {col} is not strictly increasing at row {i}"));
                }
            }
        }
        Ok(())
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn max_entry(&self) -> u32 {
        self.max_entry
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at `(row, col)` in absolute coordinates (0-based).
    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        let lo = self.inner.part(row);
        if col < lo {
            return None;
        }
        self.rows.get(row)?.get(col - lo).copied()
    }

    /// `content[k]` = number of entries `k + 1`.
    pub fn content(&self) -> Vec<usize> {
        let mut c = vec![0; self.max_entry as usize];
        for &e in self.rows.iter().flatten() {
            c[e as usize - 1] += 1;
        }
        c
    }

    /// Rows read right to left, top row first.
    pub fn reverse_reading_word(&self) -> Vec<u32> {
        self.rows
            .iter()
            .flat_map(|r| r.iter().rev().copied())
            .collect()
    }

    /// Every prefix of the reverse reading word has at least as many `k`
    /// as `k + 1`.
    pub fn is_lattice(&self) -> bool {
        let mut counts = vec![0usize; self.max_entry as usize + 1];
        for e in self.reverse_reading_word() {
            let e = e as usize;
            counts[e] += 1;
            if e > 1 && counts[e] > counts[e - 1] {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for _ in 0..self.inner.part(i) {
                write!(f, ". ")?;
            }
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Cell layout shared by the enumerator: reading-order cells with the
/// indices of their left and upper neighbours and a per-cell cap.
#[derive(Debug, Clone)]
struct Layout {
    cells: Vec<(usize, usize)>,
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    cap: Vec<u32>,
}

impl Layout {
    fn new(outer: &Partition, inner: &Partition, max_entry: u32) -> Self {
        let mut index = vec![Vec::new(); outer.len()];
        let mut cells = Vec::new();
        for (row, slots) in index.iter_mut().enumerate() {
            slots.resize(outer.part(row), None);
            for (col, slot) in slots.iter_mut().enumerate().skip(inner.part(row)) {
                *slot = Some(cells.len());
                cells.push((row, col));
            }
        }
        let mut left = Vec::with_capacity(cells.len());
        let mut above = Vec::with_capacity(cells.len());
        let mut cap = Vec::with_capacity(cells.len());
        for &(row, col) in &cells {
            left.push(if col > 0 { index[row][col - 1] } else { None });
            above.push(if row > 0 {
                index[row - 1].get(col).copied().flatten()
            } else {
                None
            });
            // room must remain for the strictly larger cells below
            let below = (row + 1..outer.len())
                .take_while(|&r| outer.part(r) > col)
                .count() as u32;
            cap.push(max_entry.saturating_sub(below));
        }
        Layout {
            cells,
            left,
            above,
            cap,
        }
    }

    #[inline]
    fn floor(&self, values: &[u32], k: usize) -> u32 {
        let mut lo = 1;
        if let Some(l) = self.left[k] {
            lo = lo.max(values[l]);
        }
        if let Some(a) = self.above[k] {
            lo = lo.max(values[a] + 1);
        }
        lo
    }

    /// Fills cells `from..` with their minimal values; false if some cell
    /// cannot be filled.
    fn fill_minimal(&self, values: &mut [u32], from: usize) -> bool {
        for k in from..self.cells.len() {
            let lo = self.floor(values, k);
            if lo > self.cap[k] {
                return false;
            }
            values[k] = lo;
        }
        true
    }
}

/// Iterator over all semistandard tableaux of a (skew) shape.
#[derive(Debug, Clone)]
pub struct SsytIter {
    outer: Partition,
    inner: Partition,
    max_entry: u32,
    layout: Layout,
    values: Vec<u32>,
    done: bool,
}

impl SsytIter {
    fn new(outer: Partition, inner: Partition, max_entry: u32) -> Self {
        let layout = Layout::new(&outer, &inner, max_entry);
        let mut values = vec![0; layout.cells.len()];
        let done = !layout.fill_minimal(&mut values, 0);
        SsytIter {
            outer,
            inner,
            max_entry,
            layout,
            values,
            done,
        }
    }

    fn advance(&mut self) {
        for k in (0..self.values.len()).rev() {
            if self.values[k] < self.layout.cap[k] {
                self.values[k] += 1;
                if self.layout.fill_minimal(&mut self.values, k + 1) {
                    return;
                }
            }
        }
        self.done = true;
    }

    fn current(&self) -> SemistandardTableau {
        let mut rows = vec![Vec::new(); self.outer.len()];
        for (k, &(row, _)) in self.layout.cells.iter().enumerate() {
            rows[row].push(self.values[k]);
        }
        SemistandardTableau {
            outer: self.outer.clone(),
            inner: self.inner.clone(),
            max_entry: self.max_entry,
            rows,
        }
    }

    /// Visits every filling as a slice of `(row, col, entry)`-ordered
    /// values without allocating a tableau per step. Consumes the iterator.
    pub fn for_each_filling(mut self, mut f: impl FnMut(&[(usize, usize)], &[u32])) {
        while !self.done {
            f(&self.layout.cells, &self.values);
            self.advance();
        }
    }
}

impl Iterator for SsytIter {
    type Item = SemistandardTableau;

    fn next(&mut self) -> Option<SemistandardTableau> {
        if self.done {
            return None;
        }
        let t = self.current();
        self.advance();
        Some(t)
    }
}

/// Every SSYT of shape `outer / inner` with entries in `[1, max_entry]`.
pub fn enumerate_ssyt(outer: &Partition, inner: &Partition, max_entry: u32) -> Result<SsytIter> {
    if !outer.contains(inner) {
        return Err(Error::NotContained {
            inner: inner.to_string(),
            outer: outer.to_string(),
        });
    }
    Ok(SsytIter::new(outer.clone(), inner.clone(), max_entry))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn count(outer: Partition, inner: Partition, m: u32) -> usize {
        enumerate_ssyt(&outer, &inner, m).unwrap().count()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(count(partition![1], partition![], 2), 2);
        let all: Vec<_> = enumerate_ssyt(&partition![2, 2], &partition![], 2)
            .unwrap()
            .collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].rows(), &[vec![1, 1], vec![2, 2]]);
        assert_eq!(count(partition![1, 1, 1], partition![], 2), 0);
    }

    #[test]
    fn empty_shape_yields_one_tableau() {
        assert_eq!(count(partition![], partition![], 3), 1);
        assert_eq!(count(partition![2, 1], partition![2, 1], 1), 1);
        assert_eq!(count(partition![], partition![], 0), 1);
    }

    #[test]
    fn rejects_non_contained_inner() {
        assert!(matches!(
            enumerate_ssyt(&partition![1], &partition![2], 3),
            Err(Error::NotContained { .. })
        ));
    }

    /// Fills every cell independently with 1..=m and keeps valid fillings.
    fn brute_force(outer: &Partition, inner: &Partition, m: u32) -> Vec<Vec<Vec<u32>>> {
        let widths: Vec<usize> = (0..outer.len())
            .map(|i| outer.part(i) - inner.part(i))
            .collect();
        let cells: usize = widths.iter().sum();
        let mut out = Vec::new();
        let total = (m as u64).pow(cells as u32);
        for code in 0..total {
            let mut c = code;
            let mut rows = Vec::new();
            for &w in &widths {
                let mut r = Vec::new();
                for _ in 0..w {
                    r.push((c % m as u64) as u32 + 1);
                    c /= m as u64;
                }
                rows.push(r);
            }
            if SemistandardTableau::new(outer.clone(), inner.clone(), m, rows.clone()).is_ok() {
                out.push(rows);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_brute_force_on_small_skew_shapes() {
        let shapes = [
            (partition![2, 1], partition![], 3),
            (partition![2, 2], partition![1], 3),
            (partition![3, 2, 1], partition![2, 1], 3),
            (partition![3, 3], partition![1], 2),
            (partition![2, 2, 2], partition![1, 1], 4),
            (partition![3, 1, 1], partition![1], 3),
        ];
        for (outer, inner, m) in shapes {
            let mut fast: Vec<_> = enumerate_ssyt(&outer, &inner, m)
                .unwrap()
                .map(|t| t.rows().to_vec())
                .collect();
            let len = fast.len();
            fast.sort();
            fast.dedup();
            assert_eq!(fast.len(), len, "duplicates for {outer}/{inner}");
            assert_eq!(fast, brute_force(&outer, &inner, m), "{outer}/{inner}, m={m}");
        }
    }

    #[test]
    fn validation_catches_bad_fillings() {
        let bad_col = SemistandardTableau::new(partition![1, 1], partition![], 3, vec![vec![2], vec![2]]);
        assert!(bad_col.is_err());
        let bad_row = SemistandardTableau::new(partition![2], partition![], 3, vec![vec![2, 1]]);
        assert!(bad_row.is_err());
        let too_big = SemistandardTableau::new(partition![1], partition![], 3, vec![vec![4]]);
        assert!(too_big.is_err());
    }

    #[test]
    fn lattice_word_check() {
        let t = SemistandardTableau::new(partition![2, 1], partition![], 2, vec![vec![1, 1], vec![2]])
            .unwrap();
        assert!(t.is_lattice());
        assert_eq!(t.content(), vec![2, 1]);
        let t = SemistandardTableau::new(partition![2], partition![1], 2, vec![vec![2]]).unwrap();
        assert!(!t.is_lattice());
    }
}
