//! Hurwitz zeta via Euler–Maclaurin, log-Gamma, and Taylor data at s = 0.
//!
//! The continuation formula used is
//!
//!   ζ_H(s,x) = Σ_{k=0}^{N-1} (x+k)^{-s} + (x+N)^{1-s}/(s-1) + (x+N)^{-s}/2
//!            + Σ_{j=1}^{M/2} B_{2j}/(2j)! · (s)_{2j-1} · (x+N)^{-s-2j+1},
//!
//! exact up to the first omitted Bernoulli correction. For Re(s) < -1/2 the
//! cutoff N is shrunk to keep the alternating sum from cancelling away the
//! result (the corrections terminate exactly once 2j-1 exceeds a polynomial
//! degree, so a short sum loses nothing there).
//!
//! Taylor coefficients at s = 0 come from discrete Cauchy-circle integration.
//! Orders 5 and 6 are read off a second, wider circle: the k-th coefficient
//! amplifies evaluation noise by r^{-k}, and radius 1/4 leaves too little
//! headroom beyond order 4 in double precision.

use crate::error::{Error, Result};
use crate::special::{bernoulli_upto, scalar_from_rat};
use num_complex::Complex64;
use num_traits::{One, Zero};
use std::f64::consts::{PI, TAU};

/// Configuration for the Euler–Maclaurin continuation and the Cauchy-circle
/// derivative extraction.
#[derive(Debug, Clone)]
pub struct HurwitzEvaluator {
    /// mantissa bits of the arithmetic kernel (informational; the kernel is f64)
    pub precision_bits: u32,
    /// summed terms before the tail (N)
    pub cutoff: usize,
    /// Bernoulli tail order M (even; corrections B_2 .. B_M)
    pub tail_order: usize,
    /// Cauchy-circle radius for derivative extraction
    pub radius: f64,
    /// node count for the discrete circle integral
    pub nodes: usize,
}

impl Default for HurwitzEvaluator {
    fn default() -> Self {
        HurwitzEvaluator {
            precision_bits: 53,
            cutoff: 30,
            tail_order: 20,
            radius: 0.25,
            nodes: 64,
        }
    }
}

/// Taylor coefficients plus the node-doubling error estimate.
#[derive(Debug, Clone)]
pub struct TaylorAtZero {
    pub coefficients: Vec<Complex64>,
    /// max |c_k(n nodes) - c_k(2n nodes)| over the requested orders
    pub error_estimate: f64,
}

impl HurwitzEvaluator {
    pub fn new(cutoff: usize, tail_order: usize, radius: f64, nodes: usize) -> Result<Self> {
        if cutoff < 10 || tail_order < 2 || !tail_order.is_multiple_of(2) {
            return Err(Error::InvalidInput(
                "require cutoff >= 10 and even tail order >= 2".into(),
            ));
        }
        if !(radius > 0.0 && radius < 0.5) {
            return Err(Error::InvalidInput("require 0 < radius < 1/2".into()));
        }
        Ok(HurwitzEvaluator {
            precision_bits: 53,
            cutoff,
            tail_order,
            radius,
            nodes,
        })
    }

    /// ζ_H(s, x) for s ≠ 1, x > 0.
    pub fn hurwitz_zeta(&self, s: Complex64, x: f64) -> Result<Complex64> {
        if x <= 0.0 {
            return Err(Error::InvalidInput("hurwitz zeta requires x > 0".into()));
        }
        if (s - Complex64::one()).norm() < 1e-12 {
            return Err(Error::InvalidInput(
                "hurwitz zeta has a pole at s = 1".into(),
            ));
        }
        let (n, pairs) = if s.re >= -0.5 {
            (self.cutoff, self.tail_order / 2)
        } else {
            // short sum avoids cancellation; extend the tail past any
            // polynomial degree reachable from Re(s)
            (
                3,
                ((1.0 - s.re) / 2.0).ceil() as usize + self.tail_order / 2,
            )
        };
        let weights = bernoulli_weights();
        let pairs = pairs.min(weights.len());
        let mut terms: Vec<Complex64> = Vec::with_capacity(n + 2 + pairs);
        for k in 0..n {
            terms.push((-s * (x + k as f64).ln()).exp());
        }
        let xn = Complex64::new(x + n as f64, 0.0);
        let log_xn = xn.ln();
        terms.push(((Complex64::one() - s) * log_xn).exp() / (s - Complex64::one()));
        let xn_pow_ms = (-s * log_xn).exp();
        terms.push(0.5 * xn_pow_ms);
        // rising factorial (s)_{2j-1} advanced two factors per step
        let mut poch = s;
        let mut xpow = xn_pow_ms / xn;
        for j in 1..=pairs {
            let b = weights[j - 1];
            terms.push(Complex64::new(b, 0.0) * poch * xpow);
            poch *= (s + Complex64::new(2.0 * j as f64 - 1.0, 0.0))
                * (s + Complex64::new(2.0 * j as f64, 0.0));
            xpow /= xn * xn;
        }
        Ok(kahan_sum(&terms))
    }

    /// Taylor coefficients of s ↦ ζ_H(s, x) at s = 0 up to the given order
    /// (order ≤ 6), with a node-doubling error estimate.
    pub fn taylor_at_zero(&self, x: f64, order: usize) -> Result<TaylorAtZero> {
        if order > 6 {
            return Err(Error::InvalidInput(
                "taylor order at s=0 limited to K <= 6".into(),
            ));
        }
        let coarse = self.taylor_once(x, order, self.nodes)?;
        let fine = self.taylor_once(x, order, self.nodes * 2)?;
        let error_estimate = coarse
            .iter()
            .zip(&fine)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0f64, f64::max);
        Ok(TaylorAtZero {
            coefficients: fine,
            error_estimate,
        })
    }

    fn taylor_once(&self, x: f64, order: usize, nodes: usize) -> Result<Vec<Complex64>> {
        let mut coeffs = self.circle_coefficients(x, order.min(4), self.radius, nodes)?;
        if order >= 5 {
            let wide = self.circle_coefficients(x, order, 0.45, nodes)?;
            coeffs.extend_from_slice(&wide[5..=order]);
        }
        Ok(coeffs)
    }

    fn circle_coefficients(
        &self,
        x: f64,
        order: usize,
        radius: f64,
        nodes: usize,
    ) -> Result<Vec<Complex64>> {
        let vals: Vec<Complex64> = (0..nodes)
            .map(|j| {
                let theta = TAU * j as f64 / nodes as f64;
                self.hurwitz_zeta(Complex64::from_polar(radius, theta), x)
            })
            .collect::<Result<_>>()?;
        let mut out = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let terms: Vec<Complex64> = vals
                .iter()
                .enumerate()
                .map(|(j, v)| {
                    let theta = TAU * (j * k % nodes) as f64 / nodes as f64;
                    v * Complex64::from_polar(1.0, -theta)
                })
                .collect();
            out.push(kahan_sum(&terms) / (nodes as f64 * radius.powi(k as i32)));
        }
        Ok(out)
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// B_{2j}/(2j)! for j = 1..=24, computed exactly once.
fn bernoulli_weights() -> &'static [f64] {
    use std::sync::OnceLock;
    static WEIGHTS: OnceLock<Vec<f64>> = OnceLock::new();
    WEIGHTS.get_or_init(|| {
        let bern = bernoulli_upto(48);
        (1..=24)
            .map(|j| {
                let c: Complex64 = scalar_from_rat(&bern[2 * j]);
                c.re / factorial(2 * j)
            })
            .collect()
    })
}

fn kahan_sum(terms: &[Complex64]) -> Complex64 {
    let mut sum = Complex64::zero();
    let mut comp = Complex64::zero();
    for &t in terms {
        let y = t - comp;
        let next = sum + y;
        comp = (next - sum) - y;
        sum = next;
    }
    sum
}

/// log Γ(x) for real x > 0: Stirling with Bernoulli tail, with upward
/// recursion Γ(x+1) = x Γ(x) to push small arguments into the safe region.
pub fn log_gamma(x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::InvalidInput("log_gamma requires x > 0".into()));
    }
    const SHIFT_ABOVE: f64 = 12.0;
    let mut shift = 0.0f64;
    let mut y = x;
    while y < SHIFT_ABOVE {
        shift += y.ln();
        y += 1.0;
    }
    // log Γ(y) = (y - 1/2) log y - y + (1/2) log 2π + Σ B_{2j}/(2j(2j-1) y^{2j-1})
    let bern = bernoulli_upto(16);
    let mut tail = 0.0;
    let mut ypow = y;
    for j in 1..=8usize {
        use num_traits::ToPrimitive;
        let b = bern[2 * j].to_f64().unwrap();
        tail += b / ((2 * j * (2 * j - 1)) as f64 * ypow);
        ypow *= y * y;
    }
    Ok((y - 0.5) * y.ln() - y + 0.5 * (TAU).ln() + tail - shift)
}

/// Taylor coefficients of the Riemann zeta function at s = 0 (via ζ_H at x=1).
pub fn riemann_taylor_at_zero(eval: &HurwitzEvaluator, order: usize) -> Result<Vec<f64>> {
    let t = eval.taylor_at_zero(1.0, order)?;
    let max_imag = t
        .coefficients
        .iter()
        .map(|c| c.im.abs())
        .fold(0.0f64, f64::max);
    if max_imag > 1e-10 {
        return Err(Error::PrecisionFault(format!(
            "riemann taylor coefficients have imaginary residue {max_imag:.2e}"
        )));
    }
    Ok(t.coefficients.iter().map(|c| c.re).collect())
}

/// π as a Complex64 helper (used in tests and closed forms).
pub fn pi() -> f64 {
    PI
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;
    use crate::special::bernoulli_poly;

    fn default_eval() -> HurwitzEvaluator {
        HurwitzEvaluator::default()
    }

    #[test]
    fn log_gamma_spot_values() {
        assert!(log_gamma(1.0).unwrap().abs() < 1e-14);
        assert!((log_gamma(0.5).unwrap() - 0.5 * PI.ln()).abs() < 1e-14);
        assert!((log_gamma(5.0).unwrap() - 24.0f64.ln()).abs() < 1e-13);
        assert!(log_gamma(0.0).is_err());
    }

    #[test]
    fn log_gamma_duplication_formula() {
        // log Γ(2z) = log Γ(z) + log Γ(z+1/2) + (2z-1) log 2 - (1/2) log π
        for z in [0.25f64, 0.4, 0.75, 1.3, 2.7, 6.1] {
            let lhs = log_gamma(2.0 * z).unwrap();
            let rhs =
                log_gamma(z).unwrap() + log_gamma(z + 0.5).unwrap() + (2.0 * z - 1.0) * 2.0f64.ln()
                    - 0.5 * PI.ln();
            assert!((lhs - rhs).abs() < 1e-12, "z = {z}");
        }
    }

    #[test]
    fn hurwitz_zero_value_is_half_minus_x() {
        let ev = default_eval();
        for x in [0.25f64, 1.0 / 3.0, 0.5, 0.75, 1.0, 1.0 / 24.0] {
            let v = ev.hurwitz_zeta(Complex64::zero(), x).unwrap();
            assert!((v.re - (0.5 - x)).abs() < 1e-13, "x = {x}");
            assert!(v.im.abs() < 1e-14);
        }
    }

    #[test]
    fn hurwitz_negative_integers_match_bernoulli() {
        let ev = default_eval();
        for k in 1..=8u32 {
            for x in [rat(1, 4), rat(1, 3), rat(1, 2), rat(3, 4), rat(1, 1)] {
                use num_traits::ToPrimitive;
                let xf = x.to_f64().unwrap();
                let v = ev
                    .hurwitz_zeta(Complex64::new(1.0 - k as f64, 0.0), xf)
                    .unwrap();
                let expect = -bernoulli_poly::<crate::series::Rat>(k, &x)
                    .to_f64()
                    .unwrap()
                    / k as f64;
                assert!(
                    (v.re - expect).abs() <= 1e-10,
                    "k={k} x={xf}: {} vs {expect}",
                    v.re
                );
                assert!(v.im.abs() < 1e-12);
            }
        }
    }

    #[test]
    fn lerch_identity() {
        // ζ_H'(0, x) = log(Γ(x)/√(2π))
        let ev = default_eval();
        for i in 1..=16 {
            let x = i as f64 / 16.0;
            let t = ev.taylor_at_zero(x, 1).unwrap();
            let lhs = t.coefficients[1].re;
            let rhs = log_gamma(x).unwrap() - 0.5 * TAU.ln();
            assert!((lhs - rhs).abs() <= 1e-10, "x = {x}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn riemann_values_at_zero() {
        let ev = default_eval();
        let c = riemann_taylor_at_zero(&ev, 2).unwrap();
        assert!((c[0] + 0.5).abs() < 1e-13);
        assert!((c[1] + 0.5 * TAU.ln()).abs() < 1e-12);
        // zeta(-1) = -1/12 via the continuation directly
        let v = ev.hurwitz_zeta(Complex64::new(-1.0, 0.0), 1.0).unwrap();
        assert!((v.re + 1.0 / 12.0).abs() < 1e-13);
    }

    #[test]
    fn hurwitz_spot_value_quarter() {
        let ev = default_eval();
        let v = ev.hurwitz_zeta(Complex64::zero(), 0.25).unwrap();
        assert!((v.re - 0.25).abs() < 1e-13);
    }

    #[test]
    fn taylor_node_doubling_stability() {
        let ev = default_eval();
        for x in [0.25f64, 0.5, 1.0, 1.0 / 24.0] {
            let t = ev.taylor_at_zero(x, 6).unwrap();
            assert!(
                t.error_estimate <= 1e-12,
                "doubling estimate {:.2e} at x = {x}",
                t.error_estimate
            );
        }
    }

    #[test]
    fn pole_and_domain_errors() {
        let ev = default_eval();
        assert!(ev.hurwitz_zeta(Complex64::one(), 0.5).is_err());
        assert!(ev.hurwitz_zeta(Complex64::zero(), -1.0).is_err());
        assert!(ev.taylor_at_zero(0.5, 7).is_err());
        assert!(HurwitzEvaluator::new(5, 20, 0.25, 64).is_err());
        assert!(HurwitzEvaluator::new(30, 20, 0.6, 64).is_err());
    }

    #[test]
    fn anchor_against_dirichlet_series() {
        // at s = 2 the defining series converges; compare directly
        let ev = default_eval();
        for x in [0.25f64, 0.7, 1.0] {
            let direct: f64 =
                (0..200_000).map(|k| (x + k as f64).powi(-2)).sum::<f64>() + 1.0 / (x + 200_000.0); // integral tail
            let v = ev.hurwitz_zeta(Complex64::new(2.0, 0.0), x).unwrap();
            assert!((v.re - direct).abs() < 1e-8, "x = {x}");
        }
    }
}
