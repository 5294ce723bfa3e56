//! Verifiers comparing every closed form with an independent computation.
//!
//! Each verifier returns a [`VerificationReport`]. Polynomial sides are
//! reported by digest, numbers in decimal.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::pfaffian::determinant;
use crate::product::{box_count, genenum_product, minenum_all_even, minenum_product, sc_count};
use crate::schur::{alternating_sign, schur_tableau_sum, specialize_alternating, SchurCache};
use crate::scpp::{count_pp, count_scpp, count_scpp_middle_line, count_scpp_signed, move_graph};
use crate::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    FullExpansion,
    Enumeration,
    EvaluationSweep,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::FullExpansion => "full-expansion",
            Method::Enumeration => "enumeration",
            Method::EvaluationSweep => "evaluation-sweep",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Method::FullExpansion, Method::Enumeration, Method::EvaluationSweep]
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown method {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub parameters: BTreeMap<String, i64>,
    pub lhs: String,
    pub rhs: String,
    #[serde(rename = "match")]
    pub matches: bool,
    /// Wall time; left out of serialized output so reports are
    /// reproducible byte for byte.
    #[serde(skip)]
    pub elapsed: Duration,
    pub method: Method,
}

impl VerificationReport {
    fn new(identity: &str, parameters: &[(&str, usize)], method: Method) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            parameters: parameters
                .iter()
                .map(|&(k, v)| (k.to_string(), v as i64))
                .collect(),
            lhs: String::new(),
            rhs: String::new(),
            matches: false,
            elapsed: Duration::ZERO,
            method,
        }
    }

    fn finish(mut self, lhs: String, rhs: String, matches: bool, start: Instant) -> Self {
        self.lhs = lhs;
        self.rhs = rhs;
        self.matches = matches;
        self.elapsed = start.elapsed();
        self
    }

    fn numbers(self, lhs: &BigInt, rhs: &BigInt, start: Instant) -> Self {
        let m = lhs == rhs;
        self.finish(lhs.to_string(), rhs.to_string(), m, start)
    }
}

fn check_gammas(gamma1: usize, gamma2: usize) -> Result<()> {
    if gamma1 < gamma2 {
        return Err(Error::Precondition(format!(
            "gamma1={gamma1} must be at least gamma2={gamma2}"
        )));
    }
    Ok(())
}

/// The shape `(g - λ_m, …, g - λ_1, π_1, …, π_len)` where `m` is the
/// number of complemented rows of `λ` taken from index `skip` on.
fn glued_shape(g: usize, lambda: &Partition, skip: usize, rows: usize, pi: &Partition, pi_len: usize) -> Partition {
    let mut parts: Vec<usize> = (skip..skip + rows).rev().map(|i| g - lambda.part(i)).collect();
    parts.extend((0..pi_len).map(|i| pi.part(i)));
    Partition::new(parts).expect("glued parts decrease since pi_1 <= gamma2 <= gamma1")
}

/// Enumerates the `(|λ/π|, glued shape)` pairs of one identity.
fn rhs_terms(which: u8, gamma1: usize, gamma2: usize, alpha: usize) -> Vec<(usize, Partition)> {
    let g = gamma1 + gamma2;
    let mut out = Vec::new();
    let (rows, skip) = if which == 1 { (alpha, 0) } else { (alpha + 1, 1) };
    for lambda in Partition::all_in_rectangle(rows, gamma2) {
        if which == 2 && lambda.part(0) != gamma2 {
            continue;
        }
        for pi in lambda.horizontal_strip_bases() {
            let shape = glued_shape(g, &lambda, skip, alpha, &pi, rows);
            out.push((lambda.size() - pi.size(), shape));
        }
    }
    out
}

fn rhs_polynomial(which: u8, gamma1: usize, gamma2: usize, alpha: usize, n: usize, cache: &mut SchurCache) -> IntPoly {
    let mut total = IntPoly::zero(n + 1);
    for (strip, shape) in rhs_terms(which, gamma1, gamma2, alpha) {
        let s = cache.get(&shape, n).with_nvars(n + 1);
        total = &total + &s.shifted(n, strip as u32);
    }
    total
}

/// Right-hand side of the first identity as a polynomial in
/// `x_1, …, x_{n+1}`.
pub fn rhs_schurid1(gamma1: usize, gamma2: usize, alpha: usize, n: usize) -> Result<IntPoly> {
    check_gammas(gamma1, gamma2)?;
    Ok(rhs_polynomial(1, gamma1, gamma2, alpha, n, &mut SchurCache::new()))
}

/// Right-hand side of the second identity, with `λ_1 = γ2` inside the
/// `(α+1) × γ2` rectangle.
pub fn rhs_schurid2(gamma1: usize, gamma2: usize, alpha: usize, n: usize) -> Result<IntPoly> {
    check_gammas(gamma1, gamma2)?;
    Ok(rhs_polynomial(2, gamma1, gamma2, alpha, n, &mut SchurCache::new()))
}

fn second_rows(which: u8, alpha: usize) -> usize {
    if which == 1 {
        alpha
    } else {
        alpha + 1
    }
}

/// `s_{γ1^α}(x_1..x_n) · s_{γ2^α}(x_1..x_{n+1})`, or `γ2^{α+1}` for the
/// second identity.
pub fn lhs_schurid(which: u8, gamma1: usize, gamma2: usize, alpha: usize, n: usize) -> Result<IntPoly> {
    check_which(which)?;
    check_gammas(gamma1, gamma2)?;
    let first = schur_tableau_sum(&Partition::rectangle(alpha, gamma1), n).with_nvars(n + 1);
    let second = schur_tableau_sum(&Partition::rectangle(second_rows(which, alpha), gamma2), n + 1);
    Ok(&first * &second)
}

fn check_which(which: u8) -> Result<()> {
    if which == 1 || which == 2 {
        Ok(())
    } else {
        Err(Error::Precondition(format!("identity must be 1 or 2, got {which}")))
    }
}

/// Verifies one of the two Schur identities.
///
/// `FullExpansion` compares exact term maps. `EvaluationSweep` compares
/// values on the grid `{0, …, D}^{n+1}` with `D = α·γ1 + (α+1)·γ2`, which
/// exceeds the degree of both sides in every variable; Schur values there
/// come from Jacobi–Trudi determinants, not from tableau sums.
pub fn verify_schurid(
    which: u8,
    gamma1: usize,
    gamma2: usize,
    alpha: usize,
    n: usize,
    method: Method,
    budget: &Budget,
) -> Result<VerificationReport> {
    check_which(which)?;
    check_gammas(gamma1, gamma2)?;
    let start = Instant::now();
    let name = if which == 1 { "schurid1" } else { "schurid2" };
    let report = VerificationReport::new(
        name,
        &[("gamma1", gamma1), ("gamma2", gamma2), ("alpha", alpha), ("n", n)],
        method,
    );
    match method {
        Method::FullExpansion => {
            let terms = rhs_terms(which, gamma1, gamma2, alpha);
            budget.charge(terms.len() as u64)?;
            let lhs = lhs_schurid(which, gamma1, gamma2, alpha, n)?;
            let rhs = rhs_polynomial(which, gamma1, gamma2, alpha, n, &mut SchurCache::new());
            let m = lhs == rhs;
            Ok(report.finish(lhs.digest(), rhs.digest(), m, start))
        }
        Method::EvaluationSweep => {
            let degree = alpha * gamma1 + (alpha + 1) * gamma2;
            let side = degree as u64 + 1;
            let terms = rhs_terms(which, gamma1, gamma2, alpha);
            let points = side
                .checked_pow(n as u32 + 1)
                .ok_or(Error::BudgetExceeded { limit: budget.limit() })?;
            budget.charge(points.saturating_mul(terms.len() as u64 + 2))?;
            let first = Partition::rectangle(alpha, gamma1);
            let second = Partition::rectangle(second_rows(which, alpha), gamma2);
            let mut point = vec![0i64; n + 1];
            let mut lhs_acc = Vec::with_capacity(points as usize);
            let mut rhs_acc = Vec::with_capacity(points as usize);
            loop {
                let xs: Vec<BigRational> = point.iter().map(|&v| rat(v)).collect();
                let lhs = schur_value(&first, &xs[..n]) * schur_value(&second, &xs);
                let mut rhs = BigRational::zero();
                for (strip, shape) in &terms {
                    rhs += schur_value(shape, &xs[..n]) * pow(&xs[n], *strip);
                }
                lhs_acc.push(lhs);
                rhs_acc.push(rhs);
                if !advance(&mut point, degree as i64) {
                    break;
                }
            }
            let m = lhs_acc == rhs_acc;
            Ok(report.finish(values_digest(&lhs_acc), values_digest(&rhs_acc), m, start))
        }
        Method::Enumeration => Err(Error::Precondition(
            "the Schur identities are checked by expansion or evaluation".into(),
        )),
    }
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn pow(x: &BigRational, k: usize) -> BigRational {
    (0..k).fold(BigRational::one(), |acc, _| acc * x)
}

/// Odometer over `{0..=max}^len`; false once it wraps around.
fn advance(point: &mut [i64], max: i64) -> bool {
    for v in point.iter_mut() {
        if *v < max {
            *v += 1;
            return true;
        }
        *v = 0;
    }
    false
}

fn values_digest(values: &[BigRational]) -> String {
    use sha2::{Digest, Sha256};
    let mut h = Sha256::new();
    for v in values {
        h.update(v.to_string().as_bytes());
        h.update(b";");
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// `s_λ(xs)` as `det(h_{λ_i - i + j})`, with the `h_k(xs)` computed by the
/// recurrence `h_k(x_1..x_m) = h_k(x_1..x_{m-1}) + x_m h_{k-1}(x_1..x_m)`.
pub fn schur_value(lambda: &Partition, xs: &[BigRational]) -> BigRational {
    let l = lambda.len();
    if l == 0 {
        return BigRational::one();
    }
    let top = lambda.part(0) + l;
    let mut h = vec![BigRational::zero(); top + 1];
    h[0] = BigRational::one();
    for x in xs {
        for k in 1..=top {
            let add = &h[k - 1] * x;
            h[k] += add;
        }
    }
    let entries: Vec<BigRational> = (0..l)
        .flat_map(|i| (0..l).map(move |j| (i, j)))
        .map(|(i, j)| {
            let k = lambda.part(i) as i64 - i as i64 + j as i64;
            if k < 0 {
                BigRational::zero()
            } else {
                h[k as usize].clone()
            }
        })
        .collect();
    determinant(l, &entries)
}

/// Setting `x_{n+1} = 0` and `γ1 = γ2 = γ` in the first identity leaves
/// `s_{γ^α}(x_1..x_n)^2`.
pub fn verify_stanley_reduction(gamma: usize, alpha: usize, n: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let report = VerificationReport::new(
        "stanley-reduction",
        &[("gamma", gamma), ("alpha", alpha), ("n", n)],
        Method::FullExpansion,
    );
    let rhs = rhs_schurid1(gamma, gamma, alpha, n)?.last_variable_to_zero();
    let s = schur_tableau_sum(&Partition::rectangle(alpha, gamma), n);
    let lhs = &s * &s;
    let m = lhs == rhs;
    Ok(report.finish(lhs.digest(), rhs.digest(), m, start))
}

pub fn verify_box(a: usize, b: usize, c: usize, budget: &Budget) -> Result<VerificationReport> {
    let start = Instant::now();
    let report = VerificationReport::new("box", &[("a", a), ("b", b), ("c", c)], Method::Enumeration);
    let brute = count_pp(a, b, c, budget)?;
    Ok(report.numbers(&brute, &box_count(a, b, c), start))
}

pub fn verify_stanley(a: usize, b: usize, c: usize, budget: &Budget) -> Result<VerificationReport> {
    let start = Instant::now();
    let report = VerificationReport::new("stanley", &[("a", a), ("b", b), ("c", c)], Method::Enumeration);
    let brute = count_scpp(a, b, c, budget)?;
    Ok(report.numbers(&brute, &sc_count(a, b, c), start))
}

pub fn verify_genenum(a: usize, b: usize, c1: usize, c2: usize, budget: &Budget) -> Result<VerificationReport> {
    let start = Instant::now();
    let report = VerificationReport::new(
        "genenum",
        &[("a", a), ("b", b), ("c1", c1), ("c2", c2)],
        Method::Enumeration,
    );
    let product = genenum_product(a, b, c1, c2)?;
    let brute = count_scpp_middle_line(a, b, c1, c2, budget)?;
    Ok(report.numbers(&brute, &product, start))
}

/// Compares `|signed total|` with the product; all-even boxes use
/// `B(a/2, b/2, c/2)`.
pub fn verify_minenum(a: usize, b: usize, c: usize, budget: &Budget) -> Result<VerificationReport> {
    let start = Instant::now();
    let report = VerificationReport::new("minenum", &[("a", a), ("b", b), ("c", c)], Method::Enumeration);
    let product = if a % 2 == 0 && b % 2 == 0 && c % 2 == 0 {
        minenum_all_even(a, b, c)?
    } else {
        minenum_product(a, b, c)?
    };
    let signed = count_scpp_signed(a, b, c, budget)?;
    Ok(report.numbers(&signed.total().abs(), &product, start))
}

/// Move-graph check: lhs is `connected=<bool>,inconsistent=<edges>`, rhs
/// the expected `connected=true,inconsistent=0`.
pub fn verify_weight_consistency(a: usize, b: usize, c: usize, budget: &Budget) -> Result<VerificationReport> {
    let start = Instant::now();
    let report = VerificationReport::new("weight", &[("a", a), ("b", b), ("c", c)], Method::Enumeration);
    let g = move_graph(a, b, c, budget)?;
    let lhs = format!(
        "vertices={},edges={},connected={},inconsistent={}",
        g.vertices,
        g.edges,
        g.components <= 1,
        g.inconsistent_edges
    );
    let rhs = format!(
        "vertices={},edges={},connected=true,inconsistent=0",
        g.vertices, g.edges
    );
    let m = g.is_consistent();
    Ok(report.finish(lhs, rhs, m, start))
}

/// `s_{γ^α}` at `m` ones against `B(α, m-α, γ)` and at the alternating
/// point against `SC(α, m-α, γ)`, the latter with the sign from
/// [`alternating_sign`].
pub fn verify_specialization_bridge(gamma: usize, alpha: usize, m: usize) -> Result<VerificationReport> {
    if m < alpha {
        return Err(Error::Precondition(format!("m={m} must be at least alpha={alpha}")));
    }
    let start = Instant::now();
    let report = VerificationReport::new(
        "specialization",
        &[("gamma", gamma), ("alpha", alpha), ("m", m)],
        Method::FullExpansion,
    );
    let s = schur_tableau_sum(&Partition::rectangle(alpha, gamma), m);
    let ones = s.evaluate(&vec![BigInt::one(); m])?;
    let alternating = specialize_alternating(gamma, alpha, m);
    let b = m - alpha;
    let bx = box_count(alpha, b, gamma);
    let sc = sc_count(alpha, b, gamma) * alternating_sign(gamma, alpha);
    let m_ok = ones == bx && alternating == sc;
    Ok(report.finish(format!("{ones},{alternating}"), format!("{bx},{sc}"), m_ok, start))
}
