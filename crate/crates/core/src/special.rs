//! Bernoulli numbers and polynomials, complete Bell polynomials, generalized
//! Bernoulli polynomials, and character Bernoulli numbers.

use crate::dirichlet::DirichletCharacter;
use crate::error::{Error, Result};
use crate::series::{rat, Rat, Scalar, Series};
use num_complex::Complex64;
use num_traits::{One, Zero};

/// Exact Bernoulli number B_k (B_1 = -1/2 convention), from the recurrence
/// Σ_{j=0}^{k} C(k+1, j) B_j = 0.
pub fn bernoulli(k: u32) -> Rat {
    bernoulli_upto(k).pop().unwrap()
}

/// B_0 .. B_k as exact rationals.
pub fn bernoulli_upto(k: u32) -> Vec<Rat> {
    let n = k as usize;
    let mut b: Vec<Rat> = Vec::with_capacity(n + 1);
    b.push(Rat::one());
    for m in 1..=n {
        // B_m = -1/(m+1) Σ_{j=0}^{m-1} C(m+1, j) B_j
        let mut acc = Rat::zero();
        let mut binom = Rat::one(); // C(m+1, 0)
        for (j, bj) in b.iter().enumerate() {
            acc += &binom * bj;
            binom *= rat(m as i64 + 1 - j as i64, j as i64 + 1);
        }
        b.push(-acc / rat(m as i64 + 1, 1));
    }
    b
}

/// Bernoulli polynomial B_k(x) = Σ_j C(k,j) B_j x^{k-j}, generic in the scalar.
pub fn bernoulli_poly<K: Scalar>(k: u32, x: &K) -> K {
    let mut acc = K::zero();
    let mut binom = Rat::one();
    for (j, bj) in bernoulli_upto(k).iter().enumerate() {
        let coeff = &binom * bj;
        // acc += coeff * x^{k-j}
        let mut term = scalar_from_rat::<K>(&coeff);
        for _ in 0..(k as usize - j) {
            term = term * x.clone();
        }
        acc = acc + term;
        binom *= rat(k as i64 - j as i64, j as i64 + 1);
    }
    acc
}

/// Embed an exact rational into any scalar kind, splitting into i64 limbs so
/// the embedding stays exact for the rational kind.
pub fn scalar_from_rat<K: Scalar>(r: &Rat) -> K {
    fn bigint_to_scalar<K: Scalar>(n: &num_bigint::BigInt) -> K {
        use num_traits::ToPrimitive;
        if let Some(v) = n.to_i64() {
            return K::from_integer(v);
        }
        let base = num_bigint::BigInt::from(1i64 << 62);
        let hi = bigint_to_scalar::<K>(&(n / &base));
        let lo = K::from_integer((n % &base).to_i64().unwrap());
        hi * K::from_integer(1i64 << 62) + lo
    }
    bigint_to_scalar::<K>(r.numer()) / bigint_to_scalar::<K>(r.denom())
}

/// Complete Bell polynomial B_r(x_1, …, x_r) via the recurrence
/// B_{n+1} = Σ_{i=0}^{n} C(n,i) B_{n-i} x_{i+1}, B_0 = 1.
pub fn complete_bell<K: Scalar>(args: &[K]) -> K {
    let r = args.len();
    let mut b: Vec<K> = Vec::with_capacity(r + 1);
    b.push(K::one());
    for n in 0..r {
        let mut acc = K::zero();
        let mut binom = Rat::one(); // C(n, i)
        for i in 0..=n {
            acc = acc + scalar_from_rat::<K>(&binom) * b[n - i].clone() * args[i].clone();
            binom *= rat(n as i64 - i as i64, i as i64 + 1);
        }
        b.push(acc);
    }
    b.pop().unwrap()
}

/// Truncated expansion of the generating function
/// s^ℓ e^{xs} / ∏_j (α_j e^{a_j s} − 1), through s^K.
///
/// When every α_j = 1 the result is a proper power series whose coefficient at
/// s^k times k! is the generalized Bernoulli polynomial B_k^{[ℓ]}(x; α; a).
pub fn generalized_bernoulli_series<K: Scalar>(
    x: &K,
    alphas: &[K],
    a_values: &[K],
    order: i64,
) -> Result<Series<K>> {
    assert_eq!(alphas.len(), a_values.len());
    let ell = alphas.len() as i64;
    // each factor has valuation <= 1, so carry ℓ guard orders through the division
    let work = order + ell;
    let mut numerator = Series::<K>::exp_linear(x.clone(), work).shift(ell);
    for (alpha, a) in alphas.iter().zip(a_values) {
        // α e^{a s} − 1
        let factor = Series::exp_linear(a.clone(), work)
            .scale(alpha)
            .sub(&Series::one(work));
        if factor.valuation().is_none() {
            return Err(Error::InvalidInput(
                "denominator factor α e^{a s} − 1 is identically zero".into(),
            ));
        }
        numerator = numerator.mul(&factor.inverse()?);
    }
    Ok(numerator.truncate(order))
}

/// Character Bernoulli number B_{n,χ} from Σ_a χ(a) t e^{at}/(e^{ft}−1) with f
/// the character's own modulus: B_{n,χ} = f^{n-1} Σ_{a=1}^{f} χ(a) B_n(a/f).
pub fn char_bernoulli(n: u32, chi: &DirichletCharacter) -> Complex64 {
    let f = chi.modulus();
    let mut acc = Complex64::zero();
    for a in 1..=f {
        let v = chi.eval(a);
        if v.is_zero() {
            continue;
        }
        let b = bernoulli_poly::<Rat>(n, &rat(a as i64, f as i64));
        acc += v * scalar_from_rat::<Complex64>(&b);
    }
    let scale = if n >= 1 {
        (f as f64).powi(n as i32 - 1)
    } else {
        1.0 / f as f64
    };
    acc * Complex64::new(scale, 0.0)
}

/// Exact variant of [`char_bernoulli`] for real-valued characters.
pub fn char_bernoulli_exact(n: u32, chi: &DirichletCharacter) -> Option<Rat> {
    let f = chi.modulus();
    let mut acc = Rat::zero();
    for a in 1..=f {
        let vr = chi.eval_value(a).as_rational()?; // None unless the value is 0 or ±1
        if vr.is_zero() {
            continue;
        }
        acc += vr * bernoulli_poly::<Rat>(n, &rat(a as i64, f as i64));
    }
    let f_rat = rat(f as i64, 1);
    let scale = if n >= 1 {
        let mut s = Rat::one();
        for _ in 0..(n - 1) {
            s *= &f_rat;
        }
        s
    } else {
        Rat::one() / f_rat
    };
    Some(acc * scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirichlet::enumerate_characters;

    #[test]
    fn bernoulli_numbers() {
        assert_eq!(bernoulli(0), Rat::one());
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), Rat::zero());
        assert_eq!(bernoulli(12), rat(-691, 2730));
        for k in (3..=19).step_by(2) {
            assert_eq!(bernoulli(k), Rat::zero(), "B_{k}");
        }
    }

    #[test]
    fn bernoulli_polynomials() {
        assert_eq!(bernoulli_poly::<Rat>(1, &Rat::zero()), rat(-1, 2));
        // B_2(x) = x^2 - x + 1/6
        for x in [rat(0, 1), rat(1, 2), rat(3, 4), rat(-2, 1)] {
            let expect = &x * &x - &x + rat(1, 6);
            assert_eq!(bernoulli_poly::<Rat>(2, &x), expect);
        }
    }

    #[test]
    fn bernoulli_from_generating_function_oracle() {
        // coefficients of s e^{sx}/(e^s - 1) at s^k are B_k(x)/k!
        let order = 12;
        let x = rat(1, 3);
        let series =
            generalized_bernoulli_series::<Rat>(&x, &[Rat::one()], &[Rat::one()], order).unwrap();
        let mut kfact = Rat::one();
        for k in 0..=order {
            if k > 0 {
                kfact *= rat(k, 1);
            }
            let coeff = series.coeff(k).unwrap();
            assert_eq!(coeff * &kfact, bernoulli_poly::<Rat>(k as u32, &x), "k={k}");
        }
    }

    #[test]
    fn complete_bell_small_cases() {
        assert_eq!(complete_bell::<Rat>(&[]), Rat::one());
        let x1 = rat(5, 1);
        assert_eq!(complete_bell(std::slice::from_ref(&x1)), x1);
        // B_2 = x1^2 + x2, B_3 = x1^3 + 3 x1 x2 + x3
        let (a, b, c) = (rat(2, 1), rat(3, 1), rat(7, 1));
        assert_eq!(complete_bell(&[a.clone(), b.clone()]), &a * &a + &b);
        assert_eq!(
            complete_bell(&[a.clone(), b.clone(), c.clone()]),
            &a * &a * &a + rat(3, 1) * &a * &b + &c
        );
    }

    #[test]
    fn complete_bell_matches_series_exp_oracle() {
        // exp(Σ x_j t^j / j!) = Σ B_k t^k / k!
        let cases: Vec<Vec<i64>> = vec![
            vec![1],
            vec![2, -1],
            vec![1, 2, 3],
            vec![-2, 0, 1, 4],
            vec![3, 1, -1, 2, -3],
            vec![1, 1, 1, 1, 1, 1],
            vec![-1, 2, -3, 4, -5, 6, -7],
            vec![2, 3, 5, 7, 11, 13, 17, 19],
        ];
        for xs in cases {
            let r = xs.len() as i64;
            let args: Vec<Rat> = xs.iter().map(|&v| rat(v, 1)).collect();
            let mut coeffs = vec![Rat::zero()];
            let mut jfact = Rat::one();
            for (j, x) in args.iter().enumerate() {
                jfact *= rat(j as i64 + 1, 1);
                coeffs.push(x / &jfact);
            }
            let e = Series::power_series(coeffs).exp().unwrap();
            let mut rfact = Rat::one();
            for k in 1..=r {
                rfact *= rat(k, 1);
            }
            let oracle = e.coeff(r).unwrap() * rfact;
            assert_eq!(complete_bell(&args), oracle, "args {xs:?}");
        }
    }

    #[test]
    fn generalized_bernoulli_empty_product_is_exponential() {
        let x = rat(2, 1);
        let s = generalized_bernoulli_series::<Rat>(&x, &[], &[], 6).unwrap();
        let mut kfact = Rat::one();
        for k in 0..=6i64 {
            if k > 0 {
                kfact *= rat(k, 1);
            }
            // coefficient k = x^k / k!
            let mut xk = Rat::one();
            for _ in 0..k {
                xk *= &x;
            }
            assert_eq!(s.coeff(k).unwrap(), xk / &kfact);
        }
    }

    #[test]
    fn generalized_bernoulli_alpha_minus_one() {
        // -s/(e^s + 1): first two coefficients 0 and -1/2
        let s = generalized_bernoulli_series::<Rat>(&Rat::zero(), &[rat(-1, 1)], &[Rat::one()], 4)
            .unwrap();
        assert_eq!(s.coeff(0).unwrap(), Rat::zero());
        assert_eq!(s.coeff(1).unwrap(), rat(-1, 2));
    }

    #[test]
    fn generalized_bernoulli_rejects_zero_factor() {
        let r = generalized_bernoulli_series::<Rat>(&Rat::zero(), &[Rat::one()], &[Rat::zero()], 4);
        assert!(r.is_err());
    }

    #[test]
    fn char_bernoulli_mod4() {
        let chars = enumerate_characters(4).unwrap();
        let chi2 = chars.iter().find(|c| !c.is_principal()).unwrap();
        let b1 = char_bernoulli(1, chi2);
        assert!((b1.re + 0.5).abs() < 1e-14 && b1.im.abs() < 1e-14);
        assert_eq!(char_bernoulli_exact(1, chi2), Some(rat(-1, 2)));
    }

    #[test]
    fn char_bernoulli_vanishing() {
        for m in 3..=12u64 {
            for chi in enumerate_characters(m).unwrap() {
                if chi.is_principal() {
                    continue;
                }
                let b0 = char_bernoulli(0, &chi);
                assert!(b0.norm() < 1e-12, "B_0 for chi mod {m}");
                let delta = if chi.parity() == 1 { 0 } else { 1 };
                for n in 1..=4u32 {
                    let b = char_bernoulli(n, &chi);
                    if n % 2 != delta % 2 {
                        assert!(b.norm() < 1e-10, "B_{n},chi mod {m} should vanish");
                    }
                }
            }
        }
    }
}
