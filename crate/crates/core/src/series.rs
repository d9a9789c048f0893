//! Truncated power/Laurent series over exact rationals or complex floats.
//!
//! A series stores coefficients for exponents `lowest ..= order` and is
//! understood modulo t^{order+1}. Every operation propagates the truncation
//! order (result order = the smallest order any operand can certify), so a
//! downstream coefficient read past the certified order is an error rather
//! than a silent zero.

use crate::error::{Error, Result};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Div, Neg, Sub};

/// Exact scalar kind.
pub type Rat = BigRational;

/// Coefficient ring for series arithmetic: exact rationals or complex floats.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
    fn from_integer(n: i64) -> Self;

    /// exp of a constant term; `None` when not representable (exact kind, c ≠ 0).
    fn exp_const(&self) -> Option<Self>;

    /// log of a constant term; `None` when not representable (exact kind, c ≠ 1)
    /// or when c = 0.
    fn log_const(&self) -> Option<Self>;
}

impl Scalar for Rat {
    fn from_integer(n: i64) -> Self {
        Rat::from_integer(n.into())
    }

    fn exp_const(&self) -> Option<Self> {
        if self.is_zero() {
            Some(Rat::one())
        } else {
            None
        }
    }

    fn log_const(&self) -> Option<Self> {
        if self.is_one() {
            Some(Rat::zero())
        } else {
            None
        }
    }
}

impl Scalar for Complex64 {
    fn from_integer(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }

    fn exp_const(&self) -> Option<Self> {
        Some(self.exp())
    }

    fn log_const(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.ln())
        }
    }
}

/// Finite-order power/Laurent series.
#[derive(Clone, PartialEq)]
pub struct Series<K> {
    lowest: i64,
    /// coeffs[i] is the coefficient of t^(lowest + i); len = order - lowest + 1.
    coeffs: Vec<K>,
    order: i64,
}

impl<K: Scalar> Series<K> {
    /// Series with the given lowest exponent and dense coefficients; the last
    /// stored entry sits at the truncation order.
    pub fn new(lowest: i64, coeffs: Vec<K>) -> Self {
        let order = lowest + coeffs.len() as i64 - 1;
        Series {
            lowest,
            coeffs,
            order,
        }
    }

    /// All-zero series certified through t^order.
    pub fn zero_to_order(order: i64) -> Self {
        let lowest = order + 1;
        Series {
            lowest,
            coeffs: Vec::new(),
            order,
        }
    }

    /// Ordinary power series (lowest exponent 0).
    pub fn power_series(coeffs: Vec<K>) -> Self {
        Series::new(0, coeffs)
    }

    /// An exactly-known polynomial, certified through t^order: zero-padded
    /// upward, truncated downward (a polynomial is exact at every order).
    pub fn polynomial(lowest: i64, mut coeffs: Vec<K>, order: i64) -> Self {
        if order < lowest {
            return Series::zero_to_order(order);
        }
        coeffs.resize((order - lowest + 1) as usize, K::zero());
        Series::new(lowest, coeffs)
    }

    /// Constant c, certified through t^order.
    pub fn constant(c: K, order: i64) -> Self {
        let mut s = Series::zero_to_order(order);
        if order >= 0 {
            s.lowest = 0;
            s.coeffs = vec![K::zero(); (order + 1) as usize];
            s.coeffs[0] = c;
        }
        s
    }

    pub fn one(order: i64) -> Self {
        Series::constant(K::one(), order)
    }

    /// c · t^k, certified through t^order (requires order ≥ k).
    pub fn monomial(c: K, k: i64, order: i64) -> Self {
        assert!(order >= k, "monomial exponent beyond truncation order");
        let mut coeffs = vec![K::zero(); (order - k + 1) as usize];
        coeffs[0] = c;
        Series::new(k, coeffs)
    }

    /// Series of e^{c·t} through t^order: Σ c^k t^k / k!.
    pub fn exp_linear(c: K, order: i64) -> Self {
        let mut coeffs = Vec::with_capacity((order.max(-1) + 1) as usize);
        let mut term = K::one();
        for k in 0..=order.max(-1) {
            if k > 0 {
                term = term * c.clone() / K::from_integer(k);
            }
            coeffs.push(term.clone());
        }
        Series::power_series(coeffs)
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn lowest(&self) -> i64 {
        self.lowest
    }

    /// Coefficient at exponent k. Exponents below `lowest` are known zeros;
    /// exponents above `order` are unknown and reported as an error.
    pub fn coeff(&self, k: i64) -> Result<K> {
        if k > self.order {
            return Err(Error::UnderResolved {
                needed: k,
                order: self.order,
            });
        }
        if k < self.lowest {
            return Ok(K::zero());
        }
        Ok(self.coeffs[(k - self.lowest) as usize].clone())
    }

    /// First exponent with a nonzero stored coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| self.lowest + i as i64)
    }

    /// Drop stored coefficients beyond the given order.
    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        if order < self.lowest {
            return Series::zero_to_order(order);
        }
        let len = (order - self.lowest + 1) as usize;
        Series::new(self.lowest, self.coeffs[..len].to_vec())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let lowest = self.lowest.min(rhs.lowest).min(order + 1);
        let mut coeffs = vec![K::zero(); (order - lowest + 1).max(0) as usize];
        for (out, k) in coeffs.iter_mut().zip(lowest..=order) {
            let a = if k >= self.lowest && k <= self.order {
                self.coeffs[(k - self.lowest) as usize].clone()
            } else {
                K::zero()
            };
            let b = if k >= rhs.lowest && k <= rhs.order {
                rhs.coeffs[(k - rhs.lowest) as usize].clone()
            } else {
                K::zero()
            };
            *out = a + b;
        }
        Series {
            lowest,
            coeffs,
            order,
        }
    }

    pub fn neg(&self) -> Self {
        Series {
            lowest: self.lowest,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
            order: self.order,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &K) -> Self {
        Series {
            lowest: self.lowest,
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
            order: self.order,
        }
    }

    /// Multiply by t^n.
    pub fn shift(&self, n: i64) -> Self {
        Series {
            lowest: self.lowest + n,
            coeffs: self.coeffs.clone(),
            order: self.order + n,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        // An unknown coefficient of one factor at exponent o+1 multiplies the
        // other factor's lowest term, so the product is certified only through
        // min(o1 + l2, o2 + l1).
        let order = (self.order + rhs.lowest).min(rhs.order + self.lowest);
        let lowest = self.lowest + rhs.lowest;
        if order < lowest {
            return Series::zero_to_order(order);
        }
        let mut coeffs = vec![K::zero(); (order - lowest + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ka = self.lowest + i as i64;
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let k = ka + rhs.lowest + j as i64;
                if k > order {
                    break;
                }
                let idx = (k - lowest) as usize;
                coeffs[idx] = coeffs[idx].clone() + a.clone() * b.clone();
            }
        }
        Series {
            lowest,
            coeffs,
            order,
        }
    }

    /// Termwise derivative d/dt.
    pub fn derivative(&self) -> Self {
        let lowest = self.lowest - 1;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.clone() * K::from_integer(self.lowest + i as i64))
            .collect();
        Series {
            lowest,
            coeffs,
            order: self.order - 1,
        }
    }

    /// Multiplicative inverse. The leading stored coefficient at the valuation
    /// must be nonzero; a Laurent pole in the input becomes a zero of the
    /// inverse and vice versa.
    pub fn inverse(&self) -> Result<Self> {
        let v = self.valuation().ok_or(Error::NotInvertible)?;
        let unit: Vec<K> = self.coeffs[(v - self.lowest) as usize..].to_vec();
        let rel_order = (self.order - v) as usize;
        let lead = unit[0].clone();
        let mut inv = Vec::with_capacity(rel_order + 1);
        inv.push(K::one() / lead.clone());
        for n in 1..=rel_order {
            let mut acc = K::zero();
            for i in 1..=n.min(unit.len() - 1) {
                acc = acc + unit[i].clone() * inv[n - i].clone();
            }
            inv.push(-(acc / lead.clone()));
        }
        // 1/(t^v u) = t^{-v} u^{-1}; relative order is preserved.
        Ok(Series::new(-v, inv).truncate(self.order - 2 * v))
    }

    /// exp of a power series. In exact mode the constant term must vanish.
    pub fn exp(&self) -> Result<Self> {
        if self.valuation().is_some_and(|v| v < 0) {
            return Err(Error::InvalidInput("exp of a series with a pole".into()));
        }
        let order = self.order;
        if order < 0 {
            return Ok(Series::zero_to_order(order));
        }
        let c0 = self.coeff(0)?;
        let scale = c0.exp_const().ok_or_else(|| Error::NotRepresentable {
            op: "exp",
            detail: format!("{c0:?} is nonzero"),
        })?;
        // g = exp(f) solves g' = f' g: n g_n = Σ_{j=1..n} j f_j g_{n-j}.
        let n = order as usize;
        let mut f = vec![K::zero(); n + 1];
        for k in 0.max(self.lowest)..=order {
            f[k as usize] = self.coeff(k)?;
        }
        let mut g = vec![K::zero(); n + 1];
        g[0] = K::one();
        for m in 1..=n {
            let mut acc = K::zero();
            for j in 1..=m {
                if f[j].is_zero() {
                    continue;
                }
                acc = acc + K::from_integer(j as i64) * f[j].clone() * g[m - j].clone();
            }
            g[m] = acc / K::from_integer(m as i64);
        }
        Ok(Series::power_series(g).scale(&scale))
    }

    /// log of a power series with invertible constant term. In exact mode the
    /// constant term must be 1.
    pub fn log(&self) -> Result<Self> {
        let v = self
            .valuation()
            .ok_or_else(|| Error::InvalidInput("log of the zero series".into()))?;
        if v != 0 {
            return Err(Error::InvalidInput(
                "log requires a nonzero constant term".into(),
            ));
        }
        let c0 = self.coeff(0)?;
        let head = c0.log_const().ok_or_else(|| Error::NotRepresentable {
            op: "log",
            detail: format!("{c0:?} is not 1"),
        })?;
        // h = log f: h' = f'/f, integrated termwise.
        let u = self.derivative().mul(&self.inverse()?);
        let order = self.order;
        let mut h = vec![K::zero(); (order.max(0) + 1) as usize];
        h[0] = head;
        for k in 1..=order {
            h[k as usize] = u.coeff(k - 1)? / K::from_integer(k);
        }
        Ok(Series::power_series(h))
    }

    /// Substitute t → α·t^k (k ≥ 1).
    pub fn scale_substitute(&self, alpha: &K, k: u32) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        let k = k as i64;
        // exponent i maps to k·i with coefficient α^i; all exponents up to
        // k·(order+1)-1 are certified (non-multiples of k are zero).
        let order = k * (self.order + 1) - 1;
        let lowest = k * self.lowest;
        if order < lowest {
            return Series::zero_to_order(order);
        }
        let mut coeffs = vec![K::zero(); (order - lowest + 1) as usize];
        let mut pow = power_of(alpha, self.lowest);
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(k * (self.lowest + i as i64) - lowest) as usize] = c.clone() * pow.clone();
            pow = pow * alpha.clone();
        }
        Series {
            lowest,
            coeffs,
            order,
        }
    }

    /// Constant term and the residue of f(t)/t at t = 0 (both equal the
    /// coefficient at exponent 0). Errors when the certified range does not
    /// reach exponent 0.
    pub fn constant_and_residue(&self) -> Result<(K, K)> {
        let c = self.coeff(0)?;
        Ok((c.clone(), c))
    }
}

fn power_of<K: Scalar>(alpha: &K, n: i64) -> K {
    let mut acc = K::one();
    for _ in 0..n.abs() {
        acc = acc * alpha.clone();
    }
    if n < 0 {
        K::one() / acc
    } else {
        acc
    }
}

impl<K: Scalar> fmt::Debug for Series<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[t^{}..t^{}](", self.lowest, self.order)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}: {:?}", self.lowest + i as i64, c)?;
        }
        write!(f, ")")
    }
}

/// Convenience: exact rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num.into(), den.into())
}
