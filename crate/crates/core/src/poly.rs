//! Exact univariate and bivariate polynomials over the rationals, with just
//! enough arithmetic for the positivity certificates: evaluation, derivatives,
//! exact division by the variable, and integer bounds on root magnitudes.

use crate::error::{Error, Result};
use crate::rational::{fmt_q, qi, Q};
use num::bigint::BigInt;
use num::{One, Signed, Zero};

/// Dense polynomial, coefficients lowest degree first, trailing zeros stripped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Q>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    pub fn var() -> Self {
        UniPoly {
            coeffs: vec![Q::zero(), Q::one()],
        }
    }

    pub fn from_ints(lowest_first: &[i64]) -> Self {
        Self::new(lowest_first.iter().map(|&c| qi(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the zero polynomial is None.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Q> {
        self.coeffs.last()
    }

    pub fn eval(&self, at: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    pub fn eval_int(&self, at: i64) -> Q {
        self.eval(&qi(at))
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| qi(i as i64 + 1) * c)
                .collect(),
        )
    }

    pub fn add(&self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, by: &Q) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c * by).collect())
    }

    pub fn mul(&self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Exact division by the variable; fails unless the constant term is zero.
    pub fn div_var(&self) -> Result<UniPoly> {
        if self.is_zero() {
            return Ok(UniPoly::zero());
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::DivisionByZero("exact division by the variable"));
        }
        Ok(UniPoly::new(self.coeffs[1..].to_vec()))
    }

    /// Cauchy bound: every real root has magnitude at most 1 + max |a_i| / |a_lead|.
    pub fn cauchy_bound(&self) -> Option<Q> {
        let lead = self.leading()?.abs();
        let mut best = Q::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let r = c.abs() / &lead;
            if r > best {
                best = r;
            }
        }
        Some(best + Q::one())
    }

    /// Fujiwara-type bound: every root has magnitude at most
    /// 2 max_k (|a_{n-k}| / |a_n|)^{1/k}, rounded up to an integer per term.
    pub fn fujiwara_bound(&self) -> Option<Q> {
        let n = self.degree()?;
        let lead = self.leading()?.abs();
        if n == 0 {
            return Some(Q::zero());
        }
        let mut best = BigInt::zero();
        for k in 1..=n {
            let c = self.coeff(n - k).abs();
            if c.is_zero() {
                continue;
            }
            let ratio = c / &lead;
            let r = ceil_kth_root(ratio.numer(), ratio.denom(), k as u32);
            if r > best {
                best = r;
            }
        }
        Some(Q::from_integer(best * BigInt::from(2)))
    }

    /// The tightest available upper bound on root magnitudes.
    pub fn root_bound(&self) -> Option<Q> {
        match (self.cauchy_bound(), self.fujiwara_bound()) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    /// Conventional human-readable rendering, highest degree first.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let unit_mag = mag.is_one();
            if !unit_mag || i == 0 {
                out.push_str(&fmt_q(&mag));
            }
            match i {
                0 => {}
                1 => {
                    if !unit_mag {
                        out.push('*');
                    }
                    out.push_str(var);
                }
                _ => {
                    if !unit_mag {
                        out.push('*');
                    }
                    out.push_str(&format!("{var}^{i}"));
                }
            }
        }
        out
    }
}

/// Smallest nonnegative integer r with r^k >= num/den (num, den >= 0, den > 0).
fn ceil_kth_root(num: &BigInt, den: &BigInt, k: u32) -> BigInt {
    let one = BigInt::one();
    if num <= &BigInt::zero() {
        return BigInt::zero();
    }
    let ok = |r: &BigInt| r.pow(k) * den >= *num;
    // grow an upper bracket, then binary search
    let mut hi = one.clone();
    while !ok(&hi) {
        hi *= 2;
    }
    let mut lo = BigInt::zero();
    while &lo + &one < hi {
        let mid: BigInt = (&lo + &hi) / 2;
        if ok(&mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Dense bivariate polynomial: `cols[j]` is the coefficient of v2^j, itself a
/// polynomial in v1. Trailing zero columns stripped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    cols: Vec<UniPoly>,
}

impl BiPoly {
    pub fn new(mut cols: Vec<UniPoly>) -> Self {
        while cols.last().is_some_and(UniPoly::is_zero) {
            cols.pop();
        }
        BiPoly { cols }
    }

    pub fn zero() -> Self {
        BiPoly { cols: vec![] }
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![UniPoly::constant(c)])
    }

    pub fn v1() -> Self {
        Self::new(vec![UniPoly::var()])
    }

    pub fn v2() -> Self {
        Self::new(vec![UniPoly::zero(), UniPoly::constant(Q::one())])
    }

    /// Outer product p(v1) * q(v2).
    pub fn outer(p_v1: &UniPoly, q_v2: &UniPoly) -> Self {
        Self::new(q_v2.coeffs().iter().map(|c| p_v1.scale(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn cols(&self) -> &[UniPoly] {
        &self.cols
    }

    /// Coefficient of v2^j as a polynomial in v1.
    pub fn col(&self, j: usize) -> UniPoly {
        self.cols.get(j).cloned().unwrap_or_else(UniPoly::zero)
    }

    pub fn coeff(&self, i_v1: usize, j_v2: usize) -> Q {
        self.col(j_v2).coeff(i_v1)
    }

    pub fn v2_degree(&self) -> Option<usize> {
        self.cols.len().checked_sub(1)
    }

    pub fn add(&self, rhs: &BiPoly) -> BiPoly {
        let n = self.cols.len().max(rhs.cols.len());
        BiPoly::new((0..n).map(|j| self.col(j).add(&rhs.col(j))).collect())
    }

    pub fn sub(&self, rhs: &BiPoly) -> BiPoly {
        let n = self.cols.len().max(rhs.cols.len());
        BiPoly::new((0..n).map(|j| self.col(j).sub(&rhs.col(j))).collect())
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly::new(self.cols.iter().map(UniPoly::neg).collect())
    }

    pub fn scale(&self, by: &Q) -> BiPoly {
        BiPoly::new(self.cols.iter().map(|c| c.scale(by)).collect())
    }

    pub fn mul(&self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![UniPoly::zero(); self.cols.len() + rhs.cols.len() - 1];
        for (i, a) in self.cols.iter().enumerate() {
            for (j, b) in rhs.cols.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        BiPoly::new(out)
    }

    /// Substitute a rational for v1, leaving a polynomial in v2.
    pub fn eval_v1(&self, at: &Q) -> UniPoly {
        UniPoly::new(self.cols.iter().map(|c| c.eval(at)).collect())
    }

    /// Substitute v2 = 1: the column sum, a polynomial in v1.
    pub fn restrict_v2_one(&self) -> UniPoly {
        self.cols.iter().fold(UniPoly::zero(), |acc, c| acc.add(c))
    }

    /// Substitute v2 = v1 (the diagonal), a polynomial in v1.
    pub fn restrict_v2_diag(&self) -> UniPoly {
        let x = UniPoly::var();
        let mut acc = UniPoly::zero();
        let mut pow = UniPoly::constant(Q::one());
        for c in &self.cols {
            acc = acc.add(&c.mul(&pow));
            pow = pow.mul(&x);
        }
        acc
    }

    /// Exact division by v1 (every column must be divisible).
    pub fn div_v1(&self) -> Result<BiPoly> {
        let cols = self
            .cols
            .iter()
            .map(UniPoly::div_var)
            .collect::<Result<Vec<_>>>()?;
        Ok(BiPoly::new(cols))
    }

    /// Exact division by v2 (the constant column must vanish).
    pub fn div_v2(&self) -> Result<BiPoly> {
        if self.is_zero() {
            return Ok(BiPoly::zero());
        }
        if !self.cols[0].is_zero() {
            return Err(Error::DivisionByZero("exact division by the variable"));
        }
        Ok(BiPoly::new(self.cols[1..].to_vec()))
    }

    pub fn render(&self, v1: &str, v2: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (j, c) in self.cols.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let head = c.render(v1);
            match j {
                0 => parts.push(head),
                1 => parts.push(format!("({head})*{v2}")),
                _ => parts.push(format!("({head})*{v2}^{j}")),
            }
        }
        parts.join(" + ")
    }
}
