//! Schur polynomials: tableau sums, the Jacobi–Trudi oracle,
//! Littlewood–Richardson coefficients and the hook-content specialization
//! of rectangular shapes.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::polynomial::MultivariatePolynomial;
use crate::tableau::enumerate_ssyt;
use crate::{IntPoly, QPoly};

/// `s_{outer/inner}(x_1, …, x_n)` as the generating polynomial of SSYT.
pub fn skew_schur_tableau_sum(outer: &Partition, inner: &Partition, n: usize) -> Result<IntPoly> {
    let iter = enumerate_ssyt(outer, inner, n as u32)?;
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut exps = vec![0u32; n];
    iter.for_each_filling(|_, values| {
        exps.iter_mut().for_each(|e| *e = 0);
        for &v in values {
            exps[v as usize - 1] += 1;
        }
        *counts.entry(exps.clone()).or_insert(0) += 1;
    });
    let mut p = MultivariatePolynomial::zero(n);
    for (e, c) in counts {
        p.add_term(e, BigInt::from(c));
    }
    Ok(p)
}

/// `s_λ(x_1, …, x_n)`; zero when `λ` has more than `n` rows.
pub fn schur_tableau_sum(lambda: &Partition, n: usize) -> IntPoly {
    skew_schur_tableau_sum(lambda, &Partition::empty(), n)
        .expect("the empty partition is contained in every partition")
}

/// Complete homogeneous symmetric polynomial `h_k(x_1, …, x_n)`.
pub fn complete_homogeneous(k: i64, n: usize) -> IntPoly {
    let mut p = MultivariatePolynomial::zero(n);
    if k < 0 {
        return p;
    }
    let mut e = vec![0u32; n];
    push_compositions(k as u32, 0, &mut e, &mut p);
    p
}

fn push_compositions(remaining: u32, var: usize, e: &mut Vec<u32>, p: &mut IntPoly) {
    if var + 1 >= e.len() {
        if e.is_empty() {
            if remaining == 0 {
                p.add_term(Vec::new(), BigInt::one());
            }
            return;
        }
        e[var] = remaining;
        p.add_term(e.clone(), BigInt::one());
        e[var] = 0;
        return;
    }
    for v in 0..=remaining {
        e[var] = v;
        push_compositions(remaining - v, var + 1, e, p);
    }
    e[var] = 0;
}

/// Jacobi–Trudi determinant `det(h_{λ_i - i + j})`.
///
/// Independent of the tableau enumeration; only used to cross-check it.
pub fn schur_determinant_oracle(lambda: &Partition, n: usize) -> IntPoly {
    let l = lambda.len();
    let mut cache: HashMap<i64, IntPoly> = HashMap::new();
    let mut h = |k: i64| {
        cache
            .entry(k)
            .or_insert_with(|| complete_homogeneous(k, n))
            .clone()
    };
    let matrix: Vec<Vec<IntPoly>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| h(lambda.part(i) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    let cols: Vec<usize> = (0..l).collect();
    laplace_det(&matrix, 0, &cols, n)
}

fn laplace_det(m: &[Vec<IntPoly>], row: usize, cols: &[usize], n: usize) -> IntPoly {
    if cols.is_empty() {
        return MultivariatePolynomial::one(n);
    }
    let mut acc = MultivariatePolynomial::zero(n);
    for (pos, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = laplace_det(m, row + 1, &rest, n);
        let term = entry * &minor;
        let sign = if pos % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        acc.add_assign_scaled(&term, &sign);
    }
    acc
}

/// Littlewood–Richardson coefficient `c^ρ_{μν}` by counting lattice-word
/// fillings of `ρ/μ` with content `ν`.
pub fn lr_coefficient(mu: &Partition, nu: &Partition, rho: &Partition) -> u64 {
    if !rho.contains(mu) || rho.size() != mu.size() + nu.size() {
        return 0;
    }
    let target: Vec<usize> = nu.parts().to_vec();
    let mut count = 0;
    let iter = enumerate_ssyt(rho, mu, nu.len() as u32).expect("containment checked");
    for t in iter {
        if t.content() == target && t.is_lattice() {
            count += 1;
        }
    }
    count
}

/// `s_{γ^α}(q, q^2, …, q^n)` from the hook-content product
/// `q^{γα(α+1)/2} ∏_{i=1}^{α} ∏_{k=0}^{γ-1} (1 - q^{i+n-α+k}) / (1 - q^{i+k})`.
///
/// Each denominator factor is divided out exactly; `n < α` gives 0 unless
/// the rectangle is empty.
pub fn hook_content_rectangular(width: usize, rows: usize, n: usize) -> Result<QPoly> {
    if width == 0 || rows == 0 {
        return Ok(QPoly::one());
    }
    if n < rows {
        return Ok(QPoly::zero());
    }
    let shift = width * rows * (rows + 1) / 2;
    let mut p = QPoly::monomial(shift);
    for i in 1..=rows {
        for k in 0..width {
            p = &p * &QPoly::one_minus_power(i + n - rows + k);
        }
    }
    for i in 1..=rows {
        for k in 0..width {
            p = p.div_one_minus_power(i + k)?;
        }
    }
    Ok(p)
}

/// `s_{γ^α}(1, -1, 1, …, (-1)^{m-1})` by direct evaluation of the tableau sum.
pub fn specialize_alternating(width: usize, rows: usize, m: usize) -> BigInt {
    let lambda = Partition::rectangle(rows, width);
    let p = schur_tableau_sum(&lambda, m);
    let point: Vec<BigInt> = (0..m)
        .map(|i| if i % 2 == 0 { BigInt::one() } else { -BigInt::one() })
        .collect();
    p.evaluate(&point).expect("point has one slot per variable")
}

/// Sign relating the alternating specialization of `s_{γ^α}` to the
/// self-complementary count: `s_{γ^α}(1, -1, …) = (-1)^{γ·⌊α/2⌋} SC(α, m-α, γ)`.
///
/// For example `s_{(1,1)}(1, -1) = -1` while `SC(2, 0, 1) = 1`.
pub fn alternating_sign(width: usize, rows: usize) -> i32 {
    if (width * (rows / 2)) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The same value as [`specialize_alternating`], obtained as the `q → -1`
/// limit of the hook-content product.
///
/// A factor `1 - q^e` tends to 2 for odd `e` and vanishes to first order for
/// even `e`, where `(1 - q^e)/(1 + q) → e`. Equal numbers of vanishing
/// factors on both sides give the ratio of their exponents; an excess in the
/// numerator gives 0.
pub fn specialize_alternating_limit(width: usize, rows: usize, m: usize) -> Result<BigRational> {
    if width == 0 || rows == 0 {
        return Ok(BigRational::one());
    }
    if m < rows {
        return Ok(BigRational::zero());
    }
    let mut num_even = Vec::new();
    let mut den_even = Vec::new();
    for i in 1..=rows {
        for k in 0..width {
            let e_num = i + m - rows + k;
            let e_den = i + k;
            if e_num % 2 == 0 {
                num_even.push(e_num);
            }
            if e_den % 2 == 0 {
                den_even.push(e_den);
            }
        }
    }
    if num_even.len() > den_even.len() {
        return Ok(BigRational::zero());
    }
    if num_even.len() < den_even.len() {
        return Err(Error::NonIntegral(
            "hook-content product has a pole at q = -1".into(),
        ));
    }
    let mut value = BigRational::one();
    // both sides have γα factors, so the odd ones (each → 2) cancel too
    for e in num_even {
        value *= BigRational::from_integer(BigInt::from(e));
    }
    for e in den_even {
        value /= BigRational::from_integer(BigInt::from(e));
    }
    // x_i = q^i at q = -1 is the negated alternating point; s_λ is
    // homogeneous of degree γα, and the prefactor is q^{γα(α+1)/2}
    let flips = width * rows + width * rows * (rows + 1) / 2;
    if flips % 2 == 1 {
        value = -value;
    }
    Ok(value)
}

/// Memo of Schur polynomials keyed by shape and variable count.
#[derive(Debug, Default)]
pub struct SchurCache {
    table: HashMap<(Partition, usize), IntPoly>,
}

impl SchurCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, lambda: &Partition, n: usize) -> &IntPoly {
        self.table
            .entry((lambda.clone(), n))
            .or_insert_with(|| schur_tableau_sum(lambda, n))
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}
