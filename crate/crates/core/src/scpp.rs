//! Brute-force enumeration of plane partitions in a box, self-complementary
//! or not, with optional middle-line restrictions.
//!
//! Self-complementary arrays are searched over the cells that come before
//! their rotation partner in row-major order; every later cell is forced
//! to `b` minus its partner and only checked.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::middle_line::{GappedArray, MiddleLine};
use crate::plane_partition::{
    half_full, is_plane_partition, pair_orientation_count, PlanePartitionArray, SignedCount,
};

/// Backtracking search over an `rows × cols` grid.
///
/// Gap cells carry no value and impose no row or column comparison; the
/// per-cell `lo` / `hi` bounds carry whatever the gaps demand of their
/// neighbours.
#[derive(Debug, Clone)]
pub(crate) struct GridSearch {
    rows: usize,
    cols: usize,
    height: u32,
    complement: bool,
    gap: Vec<bool>,
    lo: Vec<u32>,
    hi: Vec<u32>,
}

impl GridSearch {
    pub(crate) fn new(rows: usize, cols: usize, height: u32, complement: bool) -> Self {
        let n = rows * cols;
        GridSearch {
            rows,
            cols,
            height,
            complement,
            gap: vec![false; n],
            lo: vec![0; n],
            hi: vec![height; n],
        }
    }

    pub(crate) fn set_gap(&mut self, row: usize, col: usize) {
        self.gap[row * self.cols + col] = true;
    }

    pub(crate) fn raise_lower(&mut self, row: usize, col: usize, v: u32) {
        let k = row * self.cols + col;
        self.lo[k] = self.lo[k].max(v);
    }

    pub(crate) fn lower_upper(&mut self, row: usize, col: usize, v: u32) {
        let k = row * self.cols + col;
        self.hi[k] = self.hi[k].min(v);
    }

    pub(crate) fn gaps(&self) -> &[bool] {
        &self.gap
    }

    /// Calls `visit` with the row-major entries of every solution; gap
    /// cells read as 0.
    pub(crate) fn run(&self, budget: &Budget, mut visit: impl FnMut(&[u32])) -> Result<()> {
        let n = self.rows * self.cols;
        if self.complement && (0..n).any(|k| self.gap[k] != self.gap[n - 1 - k]) {
            return Err(Error::Precondition("gap pattern is not rotation symmetric".into()));
        }
        let mut vals = vec![0u32; n];
        self.place(0, &mut vals, budget, &mut visit)
    }

    fn bounds(&self, k: usize, vals: &[u32]) -> (u32, u32) {
        let (i, j) = (k / self.cols, k % self.cols);
        let mut hi = self.hi[k];
        if j > 0 && !self.gap[k - 1] {
            hi = hi.min(vals[k - 1]);
        }
        if i > 0 && !self.gap[k - self.cols] {
            hi = hi.min(vals[k - self.cols]);
        }
        (self.lo[k], hi)
    }

    fn place(
        &self,
        k: usize,
        vals: &mut [u32],
        budget: &Budget,
        visit: &mut impl FnMut(&[u32]),
    ) -> Result<()> {
        let n = vals.len();
        if k == n {
            visit(vals);
            return Ok(());
        }
        budget.charge(1)?;
        if self.gap[k] {
            vals[k] = 0;
            return self.place(k + 1, vals, budget, visit);
        }
        let (lo, hi) = self.bounds(k, vals);
        let partner = n - 1 - k;
        if self.complement && partner <= k {
            let v = if partner == k {
                if self.height % 2 == 1 {
                    return Ok(());
                }
                self.height / 2
            } else {
                self.height - vals[partner]
            };
            if lo <= v && v <= hi {
                vals[k] = v;
                self.place(k + 1, vals, budget, visit)?;
            }
            return Ok(());
        }
        if lo > hi {
            return Ok(());
        }
        for v in lo..=hi {
            vals[k] = v;
            self.place(k + 1, vals, budget, visit)?;
        }
        Ok(())
    }
}

/// Visits every plane partition in the `a × b × c` box.
pub fn for_each_pp(
    a: usize,
    b: usize,
    c: usize,
    budget: &Budget,
    mut visit: impl FnMut(&PlanePartitionArray),
) -> Result<()> {
    GridSearch::new(a, c, b as u32, false).run(budget, |e| {
        visit(&PlanePartitionArray::from_raw(a, c, b as u32, e.to_vec()))
    })
}

/// All plane partitions in the `a × b × c` box, in lexicographic order of
/// their row-major entries.
pub fn enumerate_pp(a: usize, b: usize, c: usize, budget: &Budget) -> Result<Vec<PlanePartitionArray>> {
    let mut out = Vec::new();
    for_each_pp(a, b, c, budget, |p| out.push(p.clone()))?;
    Ok(out)
}

pub fn count_pp(a: usize, b: usize, c: usize, budget: &Budget) -> Result<BigInt> {
    let mut n = 0u64;
    GridSearch::new(a, c, b as u32, false).run(budget, |_| n += 1)?;
    Ok(BigInt::from(n))
}

/// Visits every self-complementary plane partition in the box.
pub fn for_each_scpp(
    a: usize,
    b: usize,
    c: usize,
    budget: &Budget,
    mut visit: impl FnMut(&PlanePartitionArray),
) -> Result<()> {
    GridSearch::new(a, c, b as u32, true).run(budget, |e| {
        visit(&PlanePartitionArray::from_raw(a, c, b as u32, e.to_vec()))
    })
}

pub fn enumerate_scpp(a: usize, b: usize, c: usize, budget: &Budget) -> Result<Vec<PlanePartitionArray>> {
    let mut out = Vec::new();
    for_each_scpp(a, b, c, budget, |p| out.push(p.clone()))?;
    Ok(out)
}

pub fn count_scpp(a: usize, b: usize, c: usize, budget: &Budget) -> Result<BigInt> {
    let mut n = 0u64;
    GridSearch::new(a, c, b as u32, true).run(budget, |_| n += 1)?;
    Ok(BigInt::from(n))
}

/// Weighted count of self-complementary plane partitions. All-odd boxes
/// yield an empty count.
pub fn count_scpp_signed(a: usize, b: usize, c: usize, budget: &Budget) -> Result<SignedCount> {
    let mut out = SignedCount::default();
    let Ok(reference) = half_full(a, b, c) else {
        return Ok(out);
    };
    let f0 = reference.pair_orientation_count();
    let (mut pos, mut neg) = (0u64, 0u64);
    GridSearch::new(a, c, b as u32, true).run(budget, |e| {
        if (pair_orientation_count(a, c, b as u32, e) + f0) % 2 == 0 {
            pos += 1;
        } else {
            neg += 1;
        }
    })?;
    out.positive = pos.into();
    out.negative = neg.into();
    Ok(out)
}

/// Visits every array admitted by the middle line, as a gapped array
/// (gaps only appear when `a` and `b` are both odd).
pub fn for_each_middle_line(
    line: &MiddleLine,
    budget: &Budget,
    mut visit: impl FnMut(&GappedArray),
) -> Result<()> {
    let search = line.search();
    let gaps = search.gaps().to_vec();
    let (rows, cols, b) = (line.a(), line.cols(), line.b() as u32);
    search.run(budget, |e| {
        let cells = e
            .iter()
            .zip(&gaps)
            .map(|(&v, &g)| if g { None } else { Some(v) })
            .collect();
        visit(&GappedArray::from_raw(rows, cols, b, cells))
    })
}

pub fn count_scpp_middle_line(a: usize, b: usize, c1: usize, c2: usize, budget: &Budget) -> Result<BigInt> {
    let line = MiddleLine::new(a, b, c1, c2)?;
    let mut n = 0u64;
    line.search().run(budget, |_| n += 1)?;
    Ok(BigInt::from(n))
}

/// Summary of the graph whose vertices are the self-complementary plane
/// partitions of a box and whose edges are single moves: remove the top
/// cube of a stack and add its opposite cube.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveGraph {
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    /// Edges along which the pair-orientation count does not change by
    /// exactly one.
    pub inconsistent_edges: usize,
}

impl MoveGraph {
    /// Connected (or empty) with every edge flipping the weight.
    pub fn is_consistent(&self) -> bool {
        self.components <= 1 && self.inconsistent_edges == 0
    }
}

pub fn move_graph(a: usize, b: usize, c: usize, budget: &Budget) -> Result<MoveGraph> {
    let hb = b as u32;
    let arrays: Vec<Vec<u32>> = enumerate_scpp(a, b, c, budget)?
        .into_iter()
        .map(|p| p.entries().to_vec())
        .collect();
    let index: HashMap<&[u32], usize> = arrays
        .iter()
        .enumerate()
        .map(|(i, e)| (e.as_slice(), i))
        .collect();
    let n = a * c;
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); arrays.len()];
    let mut edges = 0;
    let mut inconsistent = 0;
    for (u, e) in arrays.iter().enumerate() {
        budget.charge(n as u64)?;
        let fu = pair_orientation_count(a, c, hb, e);
        for k in 0..n {
            let partner = n - 1 - k;
            if partner == k || e[k] == 0 {
                continue;
            }
            let mut moved = e.clone();
            moved[k] -= 1;
            moved[partner] += 1;
            if !is_plane_partition(a, c, hb, &moved) {
                continue;
            }
            let v = *index
                .get(moved.as_slice())
                .expect("a move preserves self-complementarity");
            adjacency[u].push(v);
            if u < v {
                edges += 1;
                let fv = pair_orientation_count(a, c, hb, &moved);
                if fu.abs_diff(fv) != 1 {
                    inconsistent += 1;
                }
            }
        }
    }
    let mut seen = vec![false; arrays.len()];
    let mut components = 0;
    for start in 0..arrays.len() {
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    Ok(MoveGraph {
        vertices: arrays.len(),
        edges,
        components,
        inconsistent_edges: inconsistent,
    })
}
