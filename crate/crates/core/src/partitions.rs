//! Integer partitions and the shape operations used by the Schur identities.
//!
//! A part index past the last stored part reads as 0 everywhere, so
//! `(2,1)` and `(2,1,0,0)` are the same partition.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    ///
    /// Fails if the parts are not weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Self::from_sorted(parts))
    }

    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `rows` parts, each equal to `width`.
    pub fn rectangle(rows: usize, width: usize) -> Self {
        if width == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![width; rows],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the end.
    #[inline]
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `mu ⊆ self`, comparing part by part.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.parts.iter().zip(&self.parts).all(|(m, l)| m <= l)
    }

    pub fn fits_in_rectangle(&self, rows: usize, width: usize) -> bool {
        self.len() <= rows && self.part(0) <= width
    }

    /// True iff `self / pi` is a horizontal strip, i.e.
    /// `self_i >= pi_i >= self_{i+1}` for every row.
    pub fn is_horizontal_strip_over(&self, pi: &Partition) -> bool {
        if !self.contains(pi) {
            return false;
        }
        (0..self.len()).all(|i| pi.part(i) >= self.part(i + 1))
    }

    /// `|self / mu|`.
    pub fn skew_size(&self, mu: &Partition) -> Result<usize> {
        if !self.contains(mu) {
            return Err(Error::NotContained {
                inner: mu.to_string(),
                outer: self.to_string(),
            });
        }
        Ok(self.size() - mu.size())
    }

    /// Complement of `self` inside the `rows x width` rectangle, rotated by 180°.
    pub fn rotated_complement(&self, rows: usize, width: usize) -> Result<Partition> {
        if !self.fits_in_rectangle(rows, width) {
            return Err(Error::OutsideRectangle {
                partition: self.to_string(),
                rows,
                cols: width,
            });
        }
        let parts = (0..rows).map(|i| width - self.part(rows - 1 - i)).collect();
        Ok(Partition::from_sorted(parts))
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let parts = (0..self.part(0))
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition::from_sorted(parts)
    }

    /// All partitions fitting in the `rows x width` rectangle, in
    /// lexicographic order of their part vectors.
    pub fn all_in_rectangle(rows: usize, width: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(rows);
        fill_rectangle(rows, width, &mut current, &mut out);
        out
    }

    /// All partitions `pi ⊆ self` with `self / pi` a horizontal strip.
    pub fn horizontal_strip_bases(&self) -> Vec<Partition> {
        // pi_i ranges over [self_{i+1}, self_i] independently
        let mut out = vec![Vec::with_capacity(self.len())];
        for i in 0..self.len() {
            let lo = self.part(i + 1);
            let hi = self.part(i);
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<usize>| {
                    (lo..=hi).map(move |v| {
                        let mut p = prefix.clone();
                        p.push(v);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(Partition::from_sorted).collect()
    }
}

fn fill_rectangle(rows: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if current.len() == rows {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    for v in 0..=cap {
        current.push(v);
        fill_rectangle(rows, v, current, out);
        current.pop();
    }
}

/// Free-function form of [`Partition::rectangle`].
pub fn rectangle(rows: usize, width: usize) -> Partition {
    Partition::rectangle(rows, width)
}

/// `mu ⊆ lambda`.
pub fn contains(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu)
}

pub fn is_horizontal_strip(lambda: &Partition, pi: &Partition) -> bool {
    lambda.is_horizontal_strip_over(pi)
}

pub fn rotated_complement(lambda: &Partition, rows: usize, width: usize) -> Result<Partition> {
    lambda.rotated_complement(rows, width)
}

pub fn skew_size(lambda: &Partition, mu: &Partition) -> Result<usize> {
    lambda.skew_size(mu)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses `"3,2,1"`, `"(3,2,1)"` or the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Precondition(format!("bad partition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[macro_export]
macro_rules! partition {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::new(vec![$($p),+]).expect("partition literal must be weakly decreasing")
    };
}
