//! Sparse multivariate and dense univariate polynomials over a [`Ring`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::scalar::Ring;

/// Exponent vector, one slot per variable `x_1 … x_m`.
pub type Exponents = Vec<u32>;

/// Sparse polynomial in a fixed number of variables.
///
/// Terms are kept in a `BTreeMap`, so iteration order (and therefore the
/// textual form and digest) is deterministic. Zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultivariatePolynomial<C> {
    nvars: usize,
    terms: BTreeMap<Exponents, C>,
}

impl<C: Ring> MultivariatePolynomial<C> {
    pub fn zero(nvars: usize) -> Self {
        MultivariatePolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable `x_{index+1}`.
    pub fn variable(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[index] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, C::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> C {
        self.terms.get(exponents).cloned().unwrap_or_else(C::zero)
    }

    /// Adds `c · x^e`, dropping the term if it cancels.
    pub fn add_term(&mut self, exponents: Exponents, c: C) {
        assert_eq!(exponents.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &Self, factor: &C) {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone() * factor);
        }
    }

    /// Multiplies by `x_{var+1}^power`.
    pub fn shifted(&self, var: usize, power: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e[var] += power;
                (e, c.clone())
            })
            .collect();
        MultivariatePolynomial {
            nvars: self.nvars,
            terms,
        }
    }

    /// Embeds into a ring with `nvars` variables (extra ones have exponent 0).
    pub fn with_nvars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars, "cannot drop variables");
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.resize(nvars, 0);
                (e, c.clone())
            })
            .collect();
        MultivariatePolynomial { nvars, terms }
    }

    /// Sets the last variable to 0 and removes it.
    pub fn last_variable_to_zero(&self) -> Self {
        assert!(self.nvars > 0, "no variable to eliminate");
        let nvars = self.nvars - 1;
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[nvars] == 0)
            .map(|(e, c)| (e[..nvars].to_vec(), c.clone()))
            .collect();
        MultivariatePolynomial { nvars, terms }
    }

    /// Maximum exponent of any single variable.
    pub fn max_degree_per_variable(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|e| e.iter().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Substitutes `x_i := point[i]` in the coefficient ring.
    pub fn evaluate(&self, point: &[C]) -> Result<C> {
        self.evaluate_with(point, C::clone)
    }

    /// Substitutes `x_i := point[i]` in a ring `T`, mapping each
    /// coefficient through `lift`.
    pub fn evaluate_with<T: Ring>(&self, point: &[T], lift: impl Fn(&C) -> T) -> Result<T> {
        if point.len() != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                actual: point.len(),
            });
        }
        let max_deg = self.max_degree_per_variable() as usize;
        let powers: Vec<Vec<T>> = point
            .iter()
            .map(|x| {
                let mut row = Vec::with_capacity(max_deg + 1);
                row.push(T::one());
                for k in 1..=max_deg {
                    let next = row[k - 1].clone() * x;
                    row.push(next);
                }
                row
            })
            .collect();
        let mut acc = T::zero();
        for (e, c) in &self.terms {
            let mut term = lift(c);
            for (var, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = term * &powers[var][k as usize];
                }
            }
            acc = acc + &term;
        }
        Ok(acc)
    }

    /// Principal specialization `x_i := q^i` (1-based `i`).
    pub fn principal_specialization(&self) -> UnivariatePolynomial<C> {
        let mut coeffs: Vec<C> = Vec::new();
        for (e, c) in &self.terms {
            let deg: usize = e
                .iter()
                .enumerate()
                .map(|(i, &k)| (i + 1) * k as usize)
                .sum();
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, C::zero());
            }
            coeffs[deg] = coeffs[deg].clone() + c;
        }
        UnivariatePolynomial::new(coeffs)
    }

    /// Deterministic textual form, terms in exponent order.
    pub fn canonical_string(&self) -> String
    where
        C: fmt::Display,
    {
        let mut s = format!("nvars={};", self.nvars);
        for (e, c) in &self.terms {
            s.push_str(&c.to_string());
            s.push('*');
            let exps: Vec<String> = e.iter().map(u32::to_string).collect();
            s.push_str(&exps.join(","));
            s.push(';');
        }
        s
    }

    /// SHA-256 of [`Self::canonical_string`], hex encoded.
    pub fn digest(&self) -> String
    where
        C: fmt::Display,
    {
        let hash = Sha256::digest(self.canonical_string().as_bytes());
        hash.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl<C: Ring> Add for &MultivariatePolynomial<C> {
    type Output = MultivariatePolynomial<C>;

    fn add(self, rhs: Self) -> MultivariatePolynomial<C> {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &C::one());
        out
    }
}

impl<C: Ring> Sub for &MultivariatePolynomial<C> {
    type Output = MultivariatePolynomial<C>;

    fn sub(self, rhs: Self) -> MultivariatePolynomial<C> {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &-C::one());
        out
    }
}

impl<C: Ring> Neg for &MultivariatePolynomial<C> {
    type Output = MultivariatePolynomial<C>;

    fn neg(self) -> MultivariatePolynomial<C> {
        MultivariatePolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.negated())).collect(),
        }
    }
}

impl<C: Ring> Mul for &MultivariatePolynomial<C> {
    type Output = MultivariatePolynomial<C>;

    fn mul(self, rhs: Self) -> MultivariatePolynomial<C> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = MultivariatePolynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2);
            }
        }
        out
    }
}

impl<C: Ring + fmt::Display> fmt::Display for MultivariatePolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest monomials first reads more naturally
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, k)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{c}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Dense polynomial in one formal variable `q`, coefficients low degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnivariatePolynomial<C> {
    coeffs: Vec<C>,
}

impl<C: Ring> UnivariatePolynomial<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UnivariatePolynomial { coeffs }
    }

    pub fn zero() -> Self {
        UnivariatePolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(vec![C::one()])
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = C::one();
        Self::new(coeffs)
    }

    /// `1 - q^m`.
    pub fn one_minus_power(m: usize) -> Self {
        let mut coeffs = vec![C::zero(); m + 1];
        coeffs[0] = C::one();
        coeffs[m] = coeffs[m].clone() - C::one();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficient(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn evaluate(&self, q: &C) -> C {
        // Horner
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * q + c)
    }

    /// Exact quotient by `1 - q^m`; fails if the division leaves a remainder.
    pub fn div_one_minus_power(&self, m: usize) -> Result<Self> {
        assert!(m > 0, "1 - q^0 is zero");
        // p = (1 - q^m) * s  <=>  s_k = p_k + s_{k-m}
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let deg = self.coeffs.len() - 1;
        if deg < m {
            return Err(Error::NonIntegral(format!(
                "degree {deg} polynomial is not divisible by 1 - q^{m}"
            )));
        }
        let qlen = deg - m + 1;
        let mut quotient: Vec<C> = Vec::with_capacity(qlen);
        for k in 0..qlen {
            let mut s = self.coeffs[k].clone();
            if k >= m {
                s = s + &quotient[k - m];
            }
            quotient.push(s);
        }
        // remainder check: the top m coefficients must be reproduced
        for k in qlen..=deg {
            let mut expected = C::zero();
            if k >= m && k - m < qlen {
                expected = expected - quotient[k - m].clone();
            }
            if k < qlen {
                expected = expected + &quotient[k];
            }
            if expected != self.coeffs[k] {
                return Err(Error::NonIntegral(format!(
                    "polynomial is not divisible by 1 - q^{m}"
                )));
            }
        }
        Ok(Self::new(quotient))
    }
}

impl<C: Ring> Mul for &UnivariatePolynomial<C> {
    type Output = UnivariatePolynomial<C>;

    fn mul(self, rhs: Self) -> UnivariatePolynomial<C> {
        if self.is_zero() || rhs.is_zero() {
            return UnivariatePolynomial::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        UnivariatePolynomial::new(out)
    }
}

impl<C: Ring + fmt::Display> fmt::Display for UnivariatePolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "q")?,
                1 => write!(f, "{c}*q")?,
                _ if c.is_one() => write!(f, "q^{k}")?,
                _ => write!(f, "{c}*q^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type P = MultivariatePolynomial<BigInt>;

    fn x(n: usize, i: usize) -> P {
        P::variable(n, i)
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let p = &x(2, 0) + &x(2, 1);
        let q = &x(2, 0) - &x(2, 1);
        let prod = &p * &q;
        // (x1 + x2)(x1 - x2) = x1^2 - x2^2
        assert_eq!(prod.num_terms(), 2);
        assert_eq!(prod.coefficient(&[2, 0]), BigInt::from(1));
        assert_eq!(prod.coefficient(&[0, 2]), BigInt::from(-1));
        assert_eq!(prod.coefficient(&[1, 1]), BigInt::from(0));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn evaluate_examples() {
        let p = &x(2, 0) + &x(2, 1);
        let one = BigInt::from(1);
        assert_eq!(p.evaluate(&[one.clone(), one.clone()]).unwrap(), BigInt::from(2));
        assert_eq!(p.evaluate(&[one.clone(), -one.clone()]).unwrap(), BigInt::from(0));
        assert!(matches!(
            p.evaluate(&[one]),
            Err(Error::Dimension { expected: 2, actual: 1 })
        ));
        let half = BigRational::new(1.into(), 2.into());
        let v = p
            .evaluate_with(&[half.clone(), half], |c| BigRational::from_integer(c.clone()))
            .unwrap();
        assert_eq!(v, BigRational::from_integer(1.into()));
    }

    #[test]
    fn last_variable_to_zero_drops_terms() {
        let p = &(&x(3, 0) * &x(3, 2)) + &x(3, 1);
        let r = p.last_variable_to_zero();
        assert_eq!(r.nvars(), 2);
        assert_eq!(r, x(2, 1));
    }

    #[test]
    fn principal_specialization_of_linear_form() {
        let p = &x(2, 0) + &x(2, 1);
        let u = p.principal_specialization();
        assert_eq!(u.coeffs(), &[BigInt::from(0), BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn digest_is_stable_and_discriminating() {
        let p = &x(2, 0) + &x(2, 1);
        let q = &x(2, 1) + &x(2, 0);
        assert_eq!(p.digest(), q.digest());
        assert_ne!(p.digest(), x(2, 0).digest());
        assert_eq!(p.digest().len(), 64);
    }

    #[test]
    fn exact_division_by_cyclotomic_style_factor() {
        type U = UnivariatePolynomial<BigInt>;
        let f = &U::one_minus_power(3) * &U::one_minus_power(2);
        assert_eq!(f.div_one_minus_power(3).unwrap(), U::one_minus_power(2));
        assert_eq!(f.div_one_minus_power(2).unwrap(), U::one_minus_power(3));
        // 1 - q^4 = (1 - q^2)(1 + q^2)
        let g = U::one_minus_power(4).div_one_minus_power(2).unwrap();
        assert_eq!(g.coeffs(), &[BigInt::from(1), BigInt::from(0), BigInt::from(1)]);
        assert!(U::one_minus_power(3).div_one_minus_power(2).is_err());
        assert!(U::monomial(1).div_one_minus_power(1).is_err());
    }

    #[test]
    fn display_forms() {
        let p = &x(2, 0).shifted(0, 1) + &x(2, 1);
        assert_eq!(p.to_string(), "x1^2 + x2");
        let u = UnivariatePolynomial::<BigInt>::new(vec![0.into(), 1.into(), 2.into()]);
        assert_eq!(u.to_string(), "2*q^2 + q");
    }
}
