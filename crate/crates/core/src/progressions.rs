//! The super-regularized product over primes p ≡ a (mod m).
//!
//! The exponent assembled here is
//!
//!   −Σ_{r=1}^{φ(m)} (𝒬_r⁺ + 𝒬_r⁻ + 𝒬_r⁰)(m; a) · ℛ_{φ(m), r},
//!
//! where the 𝒬 terms collect residues of L'/(sL) over character powers and
//! ℛ_{N,r} is the regularized constant term of Σ_ℓ μ(Nℓ+r)(Nℓ+r)^{-t}.
//! Conjugate characters are paired before summation so every reported term is
//! real by construction; the leftover imaginary parts of individual residues
//! are tracked as diagnostics.

use crate::arith::{gcd, multiplicative_invariants, primes_up_to, Factorization};
use crate::dirichlet::{enumerate_characters, DirichletCharacter};
use crate::error::{Error, Result};
use crate::lfunc::LFunctions;
use crate::numberfield::{regprod_number_field, NumberFieldData};
use crate::series::Series;
use crate::special::generalized_bernoulli_series;
use num_complex::Complex64;
use num_traits::Zero;
use std::collections::BTreeSet;

/// A residue class a (mod m) with gcd(a, m) = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProgressionTarget {
    modulus: u64,
    residue: u64,
}

impl ProgressionTarget {
    pub fn new(m: u64, a: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput("modulus must be positive".into()));
        }
        let a = a % m.max(1);
        if gcd(a, m) != 1 {
            return Err(Error::InvalidInput(format!(
                "residue {a} is not coprime to the modulus {m}"
            )));
        }
        Ok(ProgressionTarget {
            modulus: m,
            residue: a,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }
}

/// The three residue buckets 𝒬_n^{+,−,0}(m; a).
#[derive(Debug, Clone, Copy, Default)]
pub struct QTerms {
    pub plus: f64,
    pub minus: f64,
    pub zero: f64,
    /// largest imaginary part seen in any single residue term
    pub imag_residue: f64,
}

impl QTerms {
    pub fn total(&self) -> f64 {
        self.plus + self.minus + self.zero
    }
}

/// 𝒬 terms for the power n: characters are split by the behaviour of χ^n
/// (principal / odd / even non-principal), each weighted by χ^{-1}(a).
pub fn q_terms(lfun: &mut LFunctions, n: u64, target: &ProgressionTarget) -> Result<QTerms> {
    if n == 0 {
        return Err(Error::InvalidInput("q_terms power must be >= 1".into()));
    }
    let m = target.modulus;
    let chars = enumerate_characters(m)?;
    let phi = chars.len() as f64;
    let mut out = QTerms::default();
    let mut seen: BTreeSet<(u64, Vec<u64>)> = BTreeSet::new();
    for chi in &chars {
        if seen.contains(&chi.key()) {
            continue;
        }
        let conj = chi.inverse();
        let paired = conj.key() != chi.key();
        seen.insert(chi.key());
        seen.insert(conj.key());
        let weight = if paired { 2.0 } else { 1.0 };

        let psi = chi.pow(n);
        let coeff = chi.eval_inv(target.residue);
        let residue = lfun.logderiv_residue(&psi)?;
        out.imag_residue = out.imag_residue.max(residue.im.abs());
        let term = weight * (coeff * residue).re / phi;
        if psi.is_principal() {
            out.zero += term;
        } else if psi.parity() == -1 {
            out.minus += term;
        } else {
            out.plus += term;
        }
    }
    Ok(out)
}

/// Laurent coefficients of F_η(t) = e^{−t log d} / ∏_{p|d} (1 − η(p) e^{−t log p}),
/// by direct truncated-series division. This is the authoritative expansion;
/// see [`f_eta_via_bernoulli`] for the generalized-Bernoulli cross-check.
fn f_eta_series(d: u64, eta: &DirichletCharacter, order: i64) -> Result<Series<Complex64>> {
    let primes = Factorization::of(d)?.primes();
    let work = order + primes.len() as i64 + 1;
    let mut acc = Series::exp_linear(Complex64::new(-(d as f64).ln(), 0.0), work);
    for p in primes {
        let factor = Series::one(work).sub(
            &Series::exp_linear(Complex64::new(-(p as f64).ln(), 0.0), work)
                .scale(&eta.eval(p % eta.modulus().max(1))),
        );
        acc = acc.mul(&factor.inverse()?);
    }
    Ok(acc)
}

/// The same coefficients through the generalized Bernoulli polynomial
/// generating function, with the sign (−1)^{ω(d)} fixed against the direct
/// expansion: 𝔟_k = (−1)^{ω(d)} B^{[ω(d)]}_{k+ω(d)}(−log d; η(p); −log p)/(k+ω(d))!.
pub fn f_eta_via_bernoulli(
    d: u64,
    eta: &DirichletCharacter,
    order: i64,
) -> Result<Series<Complex64>> {
    let primes = Factorization::of(d)?.primes();
    let ell = primes.len() as i64;
    let alphas: Vec<Complex64> = primes
        .iter()
        .map(|&p| eta.eval(p % eta.modulus().max(1)))
        .collect();
    let a_values: Vec<Complex64> = primes
        .iter()
        .map(|&p| Complex64::new(-(p as f64).ln(), 0.0))
        .collect();
    let gb = generalized_bernoulli_series(
        &Complex64::new(-(d as f64).ln(), 0.0),
        &alphas,
        &a_values,
        order + ell,
    )?;
    let sign = if ell % 2 == 1 { -1.0 } else { 1.0 };
    Ok(gb.shift(-ell).scale(&Complex64::new(sign, 0.0)))
}

/// ℛ_{N,r} = Res_{t=0} (1/t) Σ_{ℓ≥0} μ(Nℓ+r) (Nℓ+r)^{-t}: zero unless
/// gcd(N,r) is squarefree, otherwise the constant term of
/// (μ(d)/φ(N/d)) Σ_{η mod N/d} η̄(r/d) F_η(t)/L(t,η) with d = gcd(N,r).
pub fn r_coefficient(lfun: &mut LFunctions, n_modulus: u64, r: u64) -> Result<f64> {
    if r == 0 || r > n_modulus {
        return Err(Error::InvalidInput("require 1 <= r <= N".into()));
    }
    let d = gcd(n_modulus, r);
    let mu_d = multiplicative_invariants(d)?.mobius;
    if mu_d == 0 {
        return Ok(0.0);
    }
    let md = n_modulus / d;
    let omega_d = Factorization::of(d)?.omega() as i64;
    let chars = enumerate_characters(md)?;
    let phi_md = chars.len() as f64;
    let mut total = 0.0f64;
    let mut seen: BTreeSet<(u64, Vec<u64>)> = BTreeSet::new();
    for eta in &chars {
        if seen.contains(&eta.key()) {
            continue;
        }
        let conj = eta.inverse();
        let paired = conj.key() != eta.key();
        seen.insert(eta.key());
        seen.insert(conj.key());
        let weight = if paired { 2.0 } else { 1.0 };

        let o = lfun.order_of_vanishing(eta) as i64;
        let (linv, _residual) = lfun.inverse_l_laurent(eta, omega_d)?;
        let f_series = f_eta_series(d, eta, o + 1)?;
        // constant term of F_η · (1/L): Σ_j F_{-j} 𝔩_j over j = -o .. ω(d)
        let mut constant = Complex64::zero();
        for (idx, lj) in linv.iter().enumerate() {
            let j = idx as i64 - o;
            constant += f_series.coeff(-j)? * lj;
        }
        let term = eta.eval_inv(r / d) * constant;
        // conjugate pairs sum to 2 Re(term); a self-paired character must
        // already be real up to kernel noise
        if !paired && term.im.abs() > 1e-9 {
            return Err(Error::PrecisionFault(format!(
                "R_{{{n_modulus},{r}}}: real character produced imaginary residue {:.2e}",
                term.im.abs()
            )));
        }
        total += weight * term.re;
    }
    Ok(total * mu_d as f64 / phi_md)
}

/// The coprime closed form of ℛ_{N,r} (independently coded cross-check):
/// (1/φ(N)) [ Σ_{η odd} η̄(r)/L(0,η) − Σ_{η even ≠ η0} η̄(r) L''(0,η)/(2 L'(0,η)²)
///            + b_{ω(N)} ].
pub fn r_coefficient_coprime_form(lfun: &mut LFunctions, n_modulus: u64, r: u64) -> Result<f64> {
    if n_modulus < 2 {
        return Err(Error::InvalidInput(
            "closed form requires N >= 2 (b_{omega(N)} is defined from the prime support)".into(),
        ));
    }
    if gcd(n_modulus, r) != 1 {
        return Err(Error::InvalidInput(
            "closed form requires gcd(N, r) = 1".into(),
        ));
    }
    let chars = enumerate_characters(n_modulus)?;
    let phi = chars.len() as f64;
    let mut acc = Complex64::zero();
    for eta in &chars {
        if eta.is_principal() {
            acc += Complex64::new(lfun.principal_residue_b(n_modulus)?.laurent_path, 0.0);
            continue;
        }
        let coeff = eta.eval_inv(r);
        if eta.parity() == -1 {
            acc += coeff / lfun.l_at_zero(eta);
        } else {
            let exp = lfun.l_taylor_at_zero(eta, 2)?;
            let d1 = exp.taylor[1];
            let d2 = exp.taylor[2] * 2.0;
            acc -= coeff * d2 / (2.0 * d1 * d1);
        }
    }
    Ok(acc.re / phi)
}

/// One row of the regularized-product breakdown.
#[derive(Debug, Clone, Copy)]
pub struct TermBreakdown {
    pub r: u64,
    pub q_plus: f64,
    pub q_minus: f64,
    pub q_zero: f64,
    pub r_coefficient: f64,
    /// −(𝒬⁺+𝒬⁻+𝒬⁰)·ℛ, the row's share of the exponent
    pub contribution: f64,
}

/// Full report for one progression target.
#[derive(Debug, Clone)]
pub struct ProgressionProduct {
    pub target: ProgressionTarget,
    pub exponent: f64,
    pub value: f64,
    pub terms: Vec<TermBreakdown>,
    pub max_imag_residue: f64,
}

/// Regularized ∏ p over primes p ≡ a (mod m). Modulus 1 means all primes and
/// reduces to the number-field route with K = ℚ; every other modulus,
/// including m = 2 (the odd primes, value 2π²), runs the character pipeline.
pub fn regprod_progression(
    lfun: &mut LFunctions,
    target: &ProgressionTarget,
) -> Result<ProgressionProduct> {
    if target.modulus == 1 {
        let nf = regprod_all_primes(lfun)?;
        return Ok(ProgressionProduct {
            target: *target,
            exponent: nf.exponent,
            value: nf.value,
            terms: Vec::new(),
            max_imag_residue: 0.0,
        });
    }
    let phi = enumerate_characters(target.modulus)?.len() as u64;
    let mut terms = Vec::with_capacity(phi as usize);
    let mut exponent = 0.0f64;
    let mut max_imag = 0.0f64;
    for r in 1..=phi {
        let q = q_terms(lfun, r, target)?;
        let rc = r_coefficient(lfun, phi, r)?;
        let contribution = -q.total() * rc;
        exponent += contribution;
        max_imag = max_imag.max(q.imag_residue);
        terms.push(TermBreakdown {
            r,
            q_plus: q.plus,
            q_minus: q.minus,
            q_zero: q.zero,
            r_coefficient: rc,
            contribution,
        });
    }
    Ok(ProgressionProduct {
        target: *target,
        exponent,
        value: exponent.exp(),
        terms,
        max_imag_residue: max_imag,
    })
}

/// The all-primes product (4π²), computed through the number-field route
/// with K = ℚ.
pub fn regprod_all_primes(lfun: &mut LFunctions) -> Result<crate::numberfield::FieldProduct> {
    regprod_number_field(lfun, &NumberFieldData::rationals())
}

/// Truncated-series cross-check of 𝒫_{m,a}(s) = Σ_{p ≡ a (m)} p^{-s}:
/// a direct sieve sum against the Möbius/log-L identity.
#[derive(Debug, Clone, Copy)]
pub struct SeriesCheck {
    pub direct_sum: f64,
    pub moebius_log_sum: f64,
    pub difference: f64,
}

pub fn prime_series_check(
    lfun: &mut LFunctions,
    s: f64,
    target: &ProgressionTarget,
    prime_bound: u64,
) -> Result<SeriesCheck> {
    if s < 1.5 {
        return Err(Error::InvalidInput("series check requires s >= 1.5".into()));
    }
    if prime_bound > 10_000_000 {
        return Err(Error::BudgetExceeded(prime_bound as u128, 10_000_000));
    }
    let m = target.modulus;
    let direct_sum: f64 = primes_up_to(prime_bound)
        .into_iter()
        .filter(|&p| p % m.max(1) == target.residue % m.max(1))
        .map(|p| (p as f64).powf(-s))
        .sum();

    let chars = enumerate_characters(m)?;
    let phi = chars.len() as f64;
    let mut moebius_log_sum = 0.0f64;
    for n in 1..=25u64 {
        let mu = multiplicative_invariants(n)?.mobius;
        if mu == 0 {
            continue;
        }
        let mut inner = Complex64::zero();
        let mut seen: BTreeSet<(u64, Vec<u64>)> = BTreeSet::new();
        for chi in &chars {
            if seen.contains(&chi.key()) {
                continue;
            }
            let conj = chi.inverse();
            let paired = conj.key() != chi.key();
            seen.insert(chi.key());
            seen.insert(conj.key());
            let weight = if paired { 2.0 } else { 1.0 };
            let lv = lfun.l_value(&chi.pow(n), Complex64::new(n as f64 * s, 0.0))?;
            inner += weight * chi.eval_inv(target.residue) * lv.ln();
        }
        moebius_log_sum += mu as f64 / (n as f64 * phi) * inner.re;
    }
    Ok(SeriesCheck {
        direct_sum,
        moebius_log_sum,
        difference: direct_sum - moebius_log_sum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hurwitz::{log_gamma, HurwitzEvaluator};
    use std::f64::consts::{PI, TAU};

    fn lf() -> LFunctions {
        LFunctions::new(HurwitzEvaluator::default())
    }

    fn log_2pi() -> f64 {
        TAU.ln()
    }

    #[test]
    fn r_coefficients_match_paper_values() {
        let mut l = lf();
        // ℛ_{2,1} = −1 + 2 log(2π)/log 2, ℛ_{2,2} = −1 − 2 log(2π)/log 2
        let r21 = r_coefficient(&mut l, 2, 1).unwrap();
        let r22 = r_coefficient(&mut l, 2, 2).unwrap();
        let expect = 2.0 * log_2pi() / 2.0f64.ln();
        assert!((r21 - (expect - 1.0)).abs() < 1e-9, "{r21}");
        assert!((r22 - (-expect - 1.0)).abs() < 1e-9, "{r22}");
        // ℛ_{4,4} = 0: gcd = 4 is not squarefree
        assert_eq!(r_coefficient(&mut l, 4, 4).unwrap(), 0.0);
    }

    #[test]
    fn r_zero_whenever_gcd_not_squarefree() {
        let mut l = lf();
        for n in 1..=12u64 {
            for r in 1..=n {
                let d = gcd(n, r);
                if multiplicative_invariants(d).unwrap().mobius == 0 {
                    assert_eq!(r_coefficient(&mut l, n, r).unwrap(), 0.0, "N={n} r={r}");
                }
            }
        }
    }

    #[test]
    fn r_general_path_matches_coprime_closed_form() {
        let mut l = lf();
        for n in [2u64, 3, 4, 5, 6, 8, 10, 12] {
            for r in 1..=n {
                if gcd(n, r) != 1 {
                    continue;
                }
                let general = r_coefficient(&mut l, n, r).unwrap();
                let closed = r_coefficient_coprime_form(&mut l, n, r).unwrap();
                assert!(
                    (general - closed).abs() < 1e-9,
                    "N={n} r={r}: {general} vs {closed}"
                );
            }
        }
    }

    #[test]
    fn f_eta_division_matches_bernoulli_route() {
        let mut _l = lf();
        for (d, md) in [(2u64, 3u64), (2, 1), (6, 1), (3, 4), (6, 5)] {
            for eta in enumerate_characters(md).unwrap() {
                let direct = f_eta_series(d, &eta, 3).unwrap();
                let bern = f_eta_via_bernoulli(d, &eta, 3).unwrap();
                for k in direct.lowest().max(bern.lowest())..=3 {
                    let a = direct.coeff(k).unwrap();
                    let b = bern.coeff(k).unwrap();
                    assert!((a - b).norm() < 1e-10, "d={d} md={md} k={k}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn q_terms_mod4() {
        let mut l = lf();
        let t1 = ProgressionTarget::new(4, 1).unwrap();
        let t3 = ProgressionTarget::new(4, 3).unwrap();
        let y = (TAU / 2.0f64.sqrt()).ln();
        // n = 1: only χ0 has χ^1 = χ0
        let q = q_terms(&mut l, 1, &t1).unwrap();
        assert!((q.zero - 0.5 * y).abs() < 1e-12);
        // q_minus = (1/2)·χ2(a)·L'(0,χ2)/L(0,χ2) with the true derivative
        // L'(0,χ2) = log(√π·G) = −log 2 + log(Γ(1/4)/Γ(3/4))
        let x = -(2.0f64.ln()) + log_gamma(0.25).unwrap() - log_gamma(0.75).unwrap();
        assert!((q.minus - x).abs() < 1e-10, "{} vs {x}", q.minus);
        let q3 = q_terms(&mut l, 1, &t3).unwrap();
        assert!((q3.minus + x).abs() < 1e-10);
        assert!((q3.zero - 0.5 * y).abs() < 1e-12);
        // n = 2: both characters square to χ0, the minus set is empty
        let q = q_terms(&mut l, 2, &t1).unwrap();
        assert!((q.zero - y).abs() < 1e-12);
        assert_eq!(q.minus, 0.0);
        assert_eq!(q.plus, 0.0);
        let q = q_terms(&mut l, 2, &t3).unwrap();
        assert!(q.zero.abs() < 1e-12);
    }

    #[test]
    fn q_terms_periodic_in_n() {
        let mut l = lf();
        for m in [3u64, 4, 5] {
            let phi = enumerate_characters(m).unwrap().len() as u64;
            let target = ProgressionTarget::new(m, m - 1).unwrap();
            for n in 1..=phi {
                let a = q_terms(&mut l, n, &target).unwrap();
                let b = q_terms(&mut l, n + phi, &target).unwrap();
                assert!((a.total() - b.total()).abs() < 1e-13, "m={m} n={n}");
                assert!((a.plus - b.plus).abs() < 1e-13);
                assert!((a.minus - b.minus).abs() < 1e-13);
                assert!((a.zero - b.zero).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn mod4_matches_corrected_closed_forms() {
        // mod-4 closed forms with the sign of log(√π G) fixed by the true
        // value of L'(0, χ2)
        let mut l = lf();
        let lsg = 2.0 * log_gamma(0.25).unwrap() - PI.ln() - 1.5 * 2.0f64.ln();
        let y = (TAU / 2.0f64.sqrt()).ln();
        let rho = 2.0 * log_2pi() / 2.0f64.ln() - 1.0;
        let e1 = -lsg * rho + y * (1.5 + log_2pi() / 2.0f64.ln());
        let e3 = lsg * rho + y * (0.5 - log_2pi() / 2.0f64.ln());

        let p1 = regprod_progression(&mut l, &ProgressionTarget::new(4, 1).unwrap()).unwrap();
        let p3 = regprod_progression(&mut l, &ProgressionTarget::new(4, 3).unwrap()).unwrap();
        assert!((p1.exponent - e1).abs() < 1e-9, "{} vs {e1}", p1.exponent);
        assert!((p3.exponent - e3).abs() < 1e-9, "{} vs {e3}", p3.exponent);
        assert!(p1.max_imag_residue < 1e-10);
        // breakdown rows sum to the exponent
        let row_sum: f64 = p1.terms.iter().map(|t| t.contribution).sum();
        assert!((row_sum - p1.exponent).abs() < 1e-12);
    }

    #[test]
    fn mod4_product_is_two_pi_squared() {
        let mut l = lf();
        let p1 = regprod_progression(&mut l, &ProgressionTarget::new(4, 1).unwrap()).unwrap();
        let p3 = regprod_progression(&mut l, &ProgressionTarget::new(4, 3).unwrap()).unwrap();
        let prod = p1.value * p3.value;
        let expect = 2.0 * PI * PI;
        assert!((prod - expect).abs() / expect < 1e-8, "{prod} vs {expect}");
        // and equals half the all-primes product
        let all = regprod_all_primes(&mut l).unwrap();
        assert!((prod - all.value / 2.0).abs() / prod < 1e-8);
    }

    #[test]
    fn partition_identities() {
        // ∏_{a ∈ (Z/m)^×} regprod(m, a) = 4π² / ∏_{p | m} p; m = 7 drives the
        // deepest Taylor window (φ = 6, so R_{6,1} inverts at order 6)
        let mut l = lf();
        for m in [3u64, 5, 7, 8, 12] {
            let mut exponent = 0.0;
            for a in 1..m {
                if gcd(a, m) == 1 {
                    exponent += regprod_progression(&mut l, &ProgressionTarget::new(m, a).unwrap())
                        .unwrap()
                        .exponent;
                }
            }
            let prime_prod: f64 = Factorization::of(m)
                .unwrap()
                .primes()
                .iter()
                .map(|&p| p as f64)
                .product();
            let expect = 4.0 * PI * PI / prime_prod;
            assert!(
                (exponent.exp() - expect).abs() / expect < 1e-8,
                "m={m}: {} vs {expect}",
                exponent.exp()
            );
        }
    }

    #[test]
    fn modulus_one_is_all_primes() {
        let mut l = lf();
        let p = regprod_progression(&mut l, &ProgressionTarget::new(1, 0).unwrap()).unwrap();
        let expect = 4.0 * PI * PI;
        assert!((p.value - expect).abs() / expect < 1e-10);
    }

    #[test]
    fn modulus_two_is_the_odd_primes() {
        // p ≡ 1 (mod 2) excludes 2, so the product is 4π²/2 = 2π²; the
        // φ(2) = 1 pipeline needs no special casing (R_{1,1} = 1/ζ(0) = −2)
        let mut l = lf();
        assert!((r_coefficient(&mut l, 1, 1).unwrap() + 2.0).abs() < 1e-11);
        let p = regprod_progression(&mut l, &ProgressionTarget::new(2, 1).unwrap()).unwrap();
        let expect = 2.0 * PI * PI;
        assert!(
            (p.value - expect).abs() / expect < 1e-10,
            "{} vs {expect}",
            p.value
        );
    }

    #[test]
    fn phi2_pipeline_matches_closed_form_only_evaluation() {
        // for φ(m) = 2 the whole exponent can be assembled from the coprime
        // closed form and the classical ℛ_{2,2} value, with no series division
        let mut l = lf();
        let r21_closed = r_coefficient_coprime_form(&mut l, 2, 1).unwrap();
        let r22_closed = -1.0 - 2.0 * log_2pi() / 2.0f64.ln();
        for m in [3u64, 4, 6] {
            for a in 1..m {
                if gcd(a, m) != 1 {
                    continue;
                }
                let target = ProgressionTarget::new(m, a).unwrap();
                let q1 = q_terms(&mut l, 1, &target).unwrap();
                let q2 = q_terms(&mut l, 2, &target).unwrap();
                let closed = -(q1.total() * r21_closed + q2.total() * r22_closed);
                let pipeline = regprod_progression(&mut l, &target).unwrap().exponent;
                assert!(
                    (closed - pipeline).abs() < 1e-9,
                    "m={m} a={a}: {closed} vs {pipeline}"
                );
            }
        }
    }

    #[test]
    fn rejects_bad_targets() {
        assert!(ProgressionTarget::new(4, 2).is_err());
        assert!(ProgressionTarget::new(0, 1).is_err());
        assert!(ProgressionTarget::new(12, 9).is_err());
    }

    #[test]
    fn series_check_all_primes_s2() {
        let mut l = lf();
        let target = ProgressionTarget::new(1, 0).unwrap();
        let check = prime_series_check(&mut l, 2.0, &target, 1_000_000).unwrap();
        // prime zeta P(2) = 0.4522474200...
        assert!((check.direct_sum - 0.45224742).abs() < 1e-6);
        assert!(check.difference.abs() <= 1e-6, "{:.2e}", check.difference);
    }

    #[test]
    fn series_check_partitions_mod4() {
        let mut l = lf();
        let bound = 200_000;
        let all =
            prime_series_check(&mut l, 2.0, &ProgressionTarget::new(1, 0).unwrap(), bound).unwrap();
        let a1 =
            prime_series_check(&mut l, 2.0, &ProgressionTarget::new(4, 1).unwrap(), bound).unwrap();
        let a3 =
            prime_series_check(&mut l, 2.0, &ProgressionTarget::new(4, 3).unwrap(), bound).unwrap();
        let lhs = a1.direct_sum + a3.direct_sum + 0.25;
        assert!((lhs - all.direct_sum).abs() < 1e-12);
    }

    #[test]
    fn series_check_faster_decay_at_s3() {
        let mut l = lf();
        for target in [
            ProgressionTarget::new(1, 0).unwrap(),
            ProgressionTarget::new(4, 3).unwrap(),
        ] {
            let check = prime_series_check(&mut l, 3.0, &target, 1_000_000).unwrap();
            assert!(check.difference.abs() <= 1e-8, "{:.2e}", check.difference);
        }
    }
}
