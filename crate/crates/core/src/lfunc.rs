//! Dirichlet L-functions at s = 0: values, Taylor data, order of vanishing,
//! reciprocal Laurent coefficients, and the principal-character residue.
//!
//! All L-functions here are taken at modulus level, i.e. L(s,χ) = Σ χ(n) n^{-s}
//! with the Euler factors at primes dividing the modulus removed. Taylor data
//! at s = 0 comes from one continuation kernel: for the primitive character
//! inducing χ, L(s,χ*) = f^{-s} Σ_a χ*(a) ζ_H(s, a/f), multiplied by the exact
//! series of the finite Euler-factor correction ∏_{p|m, p∤f}(1 − χ*(p) p^{-s}).

use crate::arith::Factorization;
use crate::dirichlet::{CharValue, DirichletCharacter};
use crate::error::{Error, Result};
use crate::hurwitz::HurwitzEvaluator;
use crate::series::{Rat, Series};
use crate::special::generalized_bernoulli_series;
use num_complex::Complex64;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::f64::consts::TAU;

/// Order of vanishing, Taylor coefficients of L at 0, and derived Laurent data
/// for one character.
#[derive(Debug, Clone)]
pub struct LSeriesExpansion {
    pub character: DirichletCharacter,
    pub order_of_vanishing: u32,
    /// Taylor coefficients c_0 .. c_K of L(s,χ) at s = 0.
    pub taylor: Vec<Complex64>,
    /// node-doubling error estimate accumulated from the ζ_H kernel
    pub kernel_error: f64,
}

impl LSeriesExpansion {
    /// Laurent coefficients 𝔩_j of 1/L(t,χ) for j = -𝔬 .. J, with the
    /// re-multiplication residual max_k |(L · 1/L)_k - δ_{k,0}|.
    pub fn inverse_laurent(&self, range_j: i64) -> Result<(Vec<Complex64>, f64)> {
        let o = self.order_of_vanishing as i64;
        let avail = self.taylor.len() as i64 - 1;
        // inverting t^o·(unit) costs 2o orders of certification
        if avail < 2 * o + range_j {
            return Err(Error::UnderResolved {
                needed: 2 * o + range_j,
                order: avail,
            });
        }
        let lead = self.taylor[o as usize].norm();
        if lead < 1e-12 {
            return Err(Error::PrecisionFault(format!(
                "leading Taylor coefficient at order {o} is {lead:.2e}"
            )));
        }
        // the first 𝔬 coefficients vanish analytically; build the unit part
        let unit: Vec<Complex64> = self.taylor[o as usize..].to_vec();
        let l_series = Series::new(o, unit);
        let inv = l_series.inverse()?;
        let mut coeffs = Vec::with_capacity((range_j + o + 1) as usize);
        for j in -o..=range_j {
            coeffs.push(inv.coeff(j)?);
        }
        // validation by re-multiplication against the full Taylor data
        let full = Series::new(0, self.taylor.clone());
        let prod = full.mul(&inv);
        let mut residual = 0.0f64;
        for k in prod.lowest()..=prod.order() {
            let expect = if k == 0 {
                Complex64::one()
            } else {
                Complex64::zero()
            };
            residual = residual.max((prod.coeff(k)? - expect).norm());
        }
        Ok((coeffs, residual))
    }
}

/// Both computation paths for b_{ω(m)} = Res(1/(s L(s,χ0)), s=0).
#[derive(Debug, Clone, Copy)]
pub struct PrincipalResidue {
    pub bell_path: f64,
    pub laurent_path: f64,
    pub difference: f64,
}

/// L-function evaluator with per-character memoized Taylor data.
///
/// Memoization is interior to one evaluator; share across threads by giving
/// each thread its own instance.
pub struct LFunctions {
    eval: HurwitzEvaluator,
    memo: BTreeMap<(u64, Vec<u64>, usize), LSeriesExpansion>,
}

impl LFunctions {
    pub fn new(eval: HurwitzEvaluator) -> Self {
        LFunctions {
            eval,
            memo: BTreeMap::new(),
        }
    }

    pub fn evaluator(&self) -> &HurwitzEvaluator {
        &self.eval
    }

    /// L(0, χ): 0 for principal, else the exact finite sum −(1/m) Σ_a χ(a) a.
    pub fn l_at_zero(&self, chi: &DirichletCharacter) -> Complex64 {
        if chi.is_principal() {
            return Complex64::zero();
        }
        let m = chi.modulus();
        let mut acc = Complex64::zero();
        for a in 1..=m {
            acc += chi.eval(a) * a as f64;
        }
        -acc / m as f64
    }

    /// Exact rational L(0, χ) for real-valued non-principal χ.
    pub fn l_at_zero_exact(&self, chi: &DirichletCharacter) -> Option<Rat> {
        if chi.is_principal() {
            return Some(Rat::zero());
        }
        let m = chi.modulus();
        let mut acc = Rat::zero();
        for a in 1..=m {
            let v = chi.eval_value(a).as_rational()?;
            acc += v * Rat::from_integer((a as i64).into());
        }
        Some(-acc / Rat::from_integer((m as i64).into()))
    }

    /// Order of vanishing of L(s,χ) at s = 0: ω(m) for the principal
    /// character; otherwise the parity contribution (1 for even χ) plus one
    /// for every Euler-factor correction (1 − χ*(p)) that vanishes.
    pub fn order_of_vanishing(&self, chi: &DirichletCharacter) -> u32 {
        let m = chi.modulus();
        let fac = Factorization::of(m.max(1)).unwrap();
        if chi.is_principal() {
            return fac.omega();
        }
        let (f, chi_star) = chi.conductor_and_primitive().unwrap();
        let base = if chi.parity() == 1 { 1 } else { 0 };
        let extra = fac
            .primes()
            .iter()
            .filter(|&&p| f % p != 0)
            .filter(
                |&&p| matches!(chi_star.eval_value(p % f.max(1)), CharValue::Root(r) if r.is_one()),
            )
            .count();
        base + extra as u32
    }

    /// Pointwise L(s, χ) for s away from 1, via the Hurwitz decomposition.
    pub fn l_value(&self, chi: &DirichletCharacter, s: Complex64) -> Result<Complex64> {
        let m = chi.modulus();
        if chi.is_principal() {
            let zeta = self.eval.hurwitz_zeta(s, 1.0)?;
            let mut acc = zeta;
            for p in Factorization::of(m.max(1))?.primes() {
                acc *= Complex64::one() - (-s * (p as f64).ln()).exp();
            }
            return Ok(acc);
        }
        let (f, chi_star) = chi.conductor_and_primitive()?;
        let mut acc = Complex64::zero();
        for a in 1..=f {
            let v = chi_star.eval(a);
            if v.is_zero() {
                continue;
            }
            acc += v * self.eval.hurwitz_zeta(s, a as f64 / f as f64)?;
        }
        acc *= (-s * (f as f64).ln()).exp();
        for p in Factorization::of(m)?.primes() {
            if f % p != 0 {
                acc *= Complex64::one() - chi_star.eval(p % f) * (-s * (p as f64).ln()).exp();
            }
        }
        Ok(acc)
    }

    /// Taylor expansion of L(s,χ) at s = 0 through order K (K ≤ 6).
    pub fn l_taylor_at_zero(
        &mut self,
        chi: &DirichletCharacter,
        order: usize,
    ) -> Result<LSeriesExpansion> {
        if order > 6 {
            return Err(Error::InvalidInput(
                "L-Taylor order limited to K <= 6".into(),
            ));
        }
        let key = {
            let (m, e) = chi.key();
            (m, e, order)
        };
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        let m = chi.modulus();
        let k = order as i64;
        let (series, kernel_error) = if chi.is_principal() {
            let z = self.eval.taylor_at_zero(1.0, order)?;
            let mut acc = Series::new(0, z.coefficients.clone());
            for p in Factorization::of(m.max(1))?.primes() {
                acc = acc.mul(&euler_factor_series(Complex64::one(), p, k));
            }
            (acc, z.error_estimate)
        } else {
            let (f, chi_star) = chi.conductor_and_primitive()?;
            let mut sum = Series::zero_to_order(k);
            let mut err = 0.0f64;
            for a in 1..=f {
                let v = chi_star.eval(a);
                if v.is_zero() {
                    continue;
                }
                let t = self.eval.taylor_at_zero(a as f64 / f as f64, order)?;
                err = err.max(t.error_estimate);
                sum = sum.add(&Series::new(0, t.coefficients).scale(&v));
            }
            let mut acc = sum.mul(&Series::exp_linear(
                Complex64::new(-(f as f64).ln(), 0.0),
                k,
            ));
            for p in Factorization::of(m)?.primes() {
                if f % p != 0 {
                    acc = acc.mul(&euler_factor_series(chi_star.eval(p % f), p, k));
                }
            }
            (acc, err)
        };
        let mut taylor = Vec::with_capacity(order + 1);
        for j in 0..=k {
            taylor.push(series.coeff(j)?);
        }
        let ord = self.order_of_vanishing(chi);
        let exp = LSeriesExpansion {
            character: chi.clone(),
            order_of_vanishing: ord,
            taylor,
            kernel_error,
        };
        self.validate_vanishing(&exp)?;
        self.memo.insert(key, exp.clone());
        Ok(exp)
    }

    fn validate_vanishing(&self, exp: &LSeriesExpansion) -> Result<()> {
        let o = exp.order_of_vanishing as usize;
        let scale = exp
            .taylor
            .iter()
            .map(|c| c.norm())
            .fold(0.0f64, f64::max)
            .max(1e-30);
        for (j, c) in exp.taylor.iter().enumerate().take(o.min(exp.taylor.len())) {
            if c.norm() > 1e-8 * scale.max(1.0) {
                return Err(Error::PrecisionFault(format!(
                    "Taylor coefficient {j} of a character with vanishing order {o} is {:.2e}",
                    c.norm()
                )));
            }
        }
        if o < exp.taylor.len() && exp.taylor[o].norm() < 1e-10 {
            return Err(Error::PrecisionFault(format!(
                "leading Taylor coefficient at order {o} is below tolerance"
            )));
        }
        Ok(())
    }

    /// Laurent coefficients 𝔩_j of 1/L(t,χ), j = −𝔬 .. J.
    pub fn inverse_l_laurent(
        &mut self,
        chi: &DirichletCharacter,
        range_j: i64,
    ) -> Result<(Vec<Complex64>, f64)> {
        let o = self.order_of_vanishing(chi) as i64;
        let order = (2 * o + range_j).max(o + 1) as usize;
        let exp = self.l_taylor_at_zero(chi, order)?;
        exp.inverse_laurent(range_j)
    }

    /// Res(L'(s,χ)/(s L(s,χ)), s=0) = L^{(r+1)}(0)/((r+1) L^{(r)}(0)) with r
    /// the order of vanishing; the principal case is the closed form
    /// log(2π / √(p_1 ⋯ p_ℓ)).
    pub fn logderiv_residue(&mut self, chi: &DirichletCharacter) -> Result<Complex64> {
        if chi.is_principal() {
            let mut half_log = 0.0;
            for p in Factorization::of(chi.modulus().max(1))?.primes() {
                half_log += 0.5 * (p as f64).ln();
            }
            return Ok(Complex64::new(TAU.ln() - half_log, 0.0));
        }
        let r = self.order_of_vanishing(chi) as usize;
        let exp = self.l_taylor_at_zero(chi, r + 1)?;
        let lead = exp.taylor[r];
        if lead.norm() < 1e-12 {
            return Err(Error::PrecisionFault(
                "vanishing denominator in log-derivative residue".into(),
            ));
        }
        // c_{r+1}/c_r equals L^{(r+1)}(0)/((r+1) L^{(r)}(0))
        Ok(exp.taylor[r + 1] / lead)
    }

    /// b_{ω(m)} = Res(1/(s L(s,χ0 mod m)), s=0), by two routes: the
    /// generalized-Bernoulli (complete Bell) formula against derivatives of
    /// 1/ζ, and the direct Laurent expansion of 1/L. The sign of the Bernoulli
    /// route carries the factor (−1)^{ω(m)} fixed by the direct expansion.
    pub fn principal_residue_b(&mut self, m: u64) -> Result<PrincipalResidue> {
        if m < 2 {
            return Err(Error::InvalidInput(
                "principal residue requires m >= 2".into(),
            ));
        }
        let primes = Factorization::of(m)?.primes();
        let ell = primes.len();
        // the Laurent route needs L-Taylor data through order 2ℓ
        if 2 * ell > 6 {
            return Err(Error::InvalidInput(
                "omega(m) too large for the K <= 6 Taylor window".into(),
            ));
        }
        let zeta = self.eval.taylor_at_zero(1.0, 2 * ell)?;
        let zeta_series = Series::new(0, zeta.coefficients.clone());
        let inv_zeta = zeta_series.inverse()?;

        // route (a): b_ℓ = (−1)^ℓ Σ_j (1/ζ)_j · GB_{ℓ−j}, where GB is the
        // expansion of s^ℓ / ∏ (e^{−s log p} − 1)·(−1)^ℓ ... realized through
        // the generalized Bernoulli generating function at α = 1, a = −log p.
        let alphas = vec![Complex64::one(); ell];
        let a_values: Vec<Complex64> = primes
            .iter()
            .map(|&p| Complex64::new(-(p as f64).ln(), 0.0))
            .collect();
        let gb = generalized_bernoulli_series(&Complex64::zero(), &alphas, &a_values, ell as i64)?;
        let mut bell_path = Complex64::zero();
        for j in 0..=ell {
            bell_path += inv_zeta.coeff(j as i64)? * gb.coeff((ell - j) as i64)?;
        }
        if ell % 2 == 1 {
            bell_path = -bell_path;
        }

        // route (b): constant term of 1/L(s, χ0)
        let mut l_series = zeta_series;
        for &p in &primes {
            l_series = l_series.mul(&euler_factor_series(Complex64::one(), p, 2 * ell as i64));
        }
        let stripped = Series::new(
            ell as i64,
            (ell..l_series.order() as usize + 1)
                .map(|j| l_series.coeff(j as i64))
                .collect::<Result<Vec<_>>>()?,
        );
        let laurent_path = stripped.inverse()?.coeff(0)?;

        let difference = (bell_path - laurent_path).norm();
        if difference > 1e-8 {
            return Err(Error::PrecisionFault(format!(
                "principal residue paths disagree by {difference:.2e} for m = {m}"
            )));
        }
        Ok(PrincipalResidue {
            bell_path: bell_path.re,
            laurent_path: laurent_path.re,
            difference,
        })
    }
}

/// Exact-series Euler factor 1 − v·p^{-s} = 1 − v·e^{−s log p} through s^order.
fn euler_factor_series(v: Complex64, p: u64, order: i64) -> Series<Complex64> {
    Series::one(order)
        .sub(&Series::exp_linear(Complex64::new(-(p as f64).ln(), 0.0), order).scale(&v))
}
