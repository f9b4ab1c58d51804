use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Sparse polynomial in `n_vars` variables with exact integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymPolynomial {
    n_vars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SymPolynomial {
    pub fn zero(n_vars: usize) -> Self {
        SymPolynomial { n_vars, terms: BTreeMap::new() }
    }

    pub fn one(n_vars: usize) -> Self {
        Self::monomial(vec![0; n_vars], BigInt::one())
    }

    pub fn monomial(exponent: Vec<u32>, coeff: BigInt) -> Self {
        let mut p = Self::zero(exponent.len());
        p.add_term(exponent, coeff);
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponent: &[u32]) -> BigInt {
        self.terms.get(exponent).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exponent: Vec<u32>, coeff: BigInt) {
        assert_eq!(exponent.len(), self.n_vars, "exponent length");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Lexicographically greatest exponent with its coefficient.
    pub fn leading(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.n_vars);
        }
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        SymPolynomial { n_vars: self.n_vars, terms }
    }

    /// Unchanged by every transposition of adjacent variables.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, v)| {
            (0..self.n_vars.saturating_sub(1)).all(|i| {
                let mut f = e.clone();
                f.swap(i, i + 1);
                self.terms.get(&f) == Some(v)
            })
        })
    }
}

impl Add for &SymPolynomial {
    type Output = SymPolynomial;
    fn add(self, rhs: &SymPolynomial) -> SymPolynomial {
        assert_eq!(self.n_vars, rhs.n_vars);
        let mut out = self.clone();
        for (e, v) in &rhs.terms {
            out.add_term(e.clone(), v.clone());
        }
        out
    }
}

impl Sub for &SymPolynomial {
    type Output = SymPolynomial;
    fn sub(self, rhs: &SymPolynomial) -> SymPolynomial {
        assert_eq!(self.n_vars, rhs.n_vars);
        let mut out = self.clone();
        for (e, v) in &rhs.terms {
            out.add_term(e.clone(), -v);
        }
        out
    }
}

impl Mul for &SymPolynomial {
    type Output = SymPolynomial;
    fn mul(self, rhs: &SymPolynomial) -> SymPolynomial {
        assert_eq!(self.n_vars, rhs.n_vars);
        let mut acc: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (e1, v1) in &self.terms {
            for (e2, v2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_default() += v1 * v2;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        SymPolynomial { n_vars: self.n_vars, terms: acc }
    }
}

impl fmt::Display for SymPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{}", i + 1, k)?,
                }
            }
        }
        Ok(())
    }
}

/// A symmetric polynomial in `n_vars` variables, stored by the coefficient
/// of `x^α` for each partition `α` with at most `n_vars` parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialExpansion {
    n_vars: usize,
    coeffs: BTreeMap<Vec<usize>, BigInt>,
}

impl MonomialExpansion {
    pub fn zero(n_vars: usize) -> Self {
        MonomialExpansion { n_vars, coeffs: BTreeMap::new() }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn coeffs(&self) -> &BTreeMap<Vec<usize>, BigInt> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, alpha: &[usize]) -> BigInt {
        self.coeffs.get(alpha).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, alpha: Vec<usize>, c: BigInt) {
        debug_assert!(alpha.windows(2).all(|w| w[0] >= w[1]) && !alpha.contains(&0));
        if c.is_zero() || alpha.len() > self.n_vars {
            return;
        }
        let slot = self.coeffs.entry(alpha.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&alpha);
        }
    }

    /// Greatest partition in lexicographic order.
    pub fn leading(&self) -> Option<(&Vec<usize>, &BigInt)> {
        self.coeffs.iter().next_back()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.n_vars);
        for (a, v) in &self.coeffs {
            out.add_term(a.clone(), v * c);
        }
        out
    }

    pub fn sub(&self, rhs: &MonomialExpansion) -> Self {
        let mut out = self.clone();
        for (a, v) in &rhs.coeffs {
            out.add_term(a.clone(), -v);
        }
        out
    }

    pub fn add(&self, rhs: &MonomialExpansion) -> Self {
        let mut out = self.clone();
        for (a, v) in &rhs.coeffs {
            out.add_term(a.clone(), v.clone());
        }
        out
    }

    fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next().map(|a| a.iter().sum())
    }

    /// Product of homogeneous symmetric polynomials: the coefficient of `x^α`
    /// sums `f_β g_{α-β}` over all `β ≤ α`.
    pub fn mul(&self, rhs: &MonomialExpansion) -> Self {
        assert_eq!(self.n_vars, rhs.n_vars);
        let mut out = Self::zero(self.n_vars);
        let (Some(d1), Some(d2)) = (self.degree(), rhs.degree()) else {
            return out;
        };
        for alpha in partitions_with_max_len(d1 + d2, self.n_vars) {
            let mut total = BigInt::zero();
            let mut beta = vec![0usize; alpha.len()];
            split_sum(&alpha, 0, d1, &mut beta, &mut |beta| {
                let gamma: Vec<usize> = alpha.iter().zip(beta).map(|(a, b)| a - b).collect();
                let f = self.coeffs.get(&sorted_partition(beta));
                let g = rhs.coeffs.get(&sorted_partition(&gamma));
                if let (Some(f), Some(g)) = (f, g) {
                    total += f * g;
                }
            });
            out.add_term(alpha, total);
        }
        out
    }

    /// Restricts a symmetric polynomial; `None` if it is not symmetric.
    pub fn from_polynomial(p: &SymPolynomial) -> Option<Self> {
        if !p.is_symmetric() {
            return None;
        }
        let mut out = Self::zero(p.n_vars());
        for (e, v) in p.terms() {
            if e.windows(2).all(|w| w[0] >= w[1]) {
                let alpha: Vec<usize> = e.iter().filter(|&&k| k > 0).map(|&k| k as usize).collect();
                out.add_term(alpha, v.clone());
            }
        }
        Some(out)
    }

    /// The full polynomial: every rearrangement of each partition exponent.
    pub fn to_polynomial(&self) -> SymPolynomial {
        let mut p = SymPolynomial::zero(self.n_vars);
        for (alpha, v) in &self.coeffs {
            let mut e: Vec<u32> = alpha.iter().map(|&k| k as u32).collect();
            e.resize(self.n_vars, 0);
            e.sort_unstable();
            loop {
                p.add_term(e.clone(), v.clone());
                if !next_permutation(&mut e) {
                    break;
                }
            }
        }
        p
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn split_sum(alpha: &[usize], k: usize, rest: usize, beta: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if k == alpha.len() {
        if rest == 0 {
            visit(beta);
        }
        return;
    }
    let room: usize = alpha[k + 1..].iter().sum();
    let lo = rest.saturating_sub(room);
    for b in lo..=alpha[k].min(rest) {
        beta[k] = b;
        split_sum(alpha, k + 1, rest - b, beta, visit);
    }
    beta[k] = 0;
}

/// Nonzero entries sorted into decreasing order.
pub fn sorted_partition(v: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = v.iter().copied().filter(|&k| k > 0).collect();
    p.sort_unstable_by(|a, b| b.cmp(a));
    p
}

/// All partitions of `n` with at most `max_len` parts, decreasing lexicographically.
pub fn partitions_with_max_len(n: usize, max_len: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, len_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if len_left == 0 {
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, len_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, max_len, &mut Vec::new(), &mut out);
    out
}
