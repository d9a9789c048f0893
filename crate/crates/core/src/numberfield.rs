//! Regularized product of prime-ideal norms from Dedekind-zeta Taylor data at
//! s = 0, for ℚ and quadratic fields via the factorization ζ_K = ζ · L(s, χ_D).

use crate::arith::Factorization;
use crate::dirichlet::{enumerate_characters, DirichletCharacter};
use crate::error::{Error, Result};
use crate::hurwitz::riemann_taylor_at_zero;
use crate::lfunc::LFunctions;
use crate::series::Series;
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    Rationals,
    /// Quadratic field of the given fundamental discriminant.
    Quadratic(i64),
}

/// Field invariants supplied as inputs and validated against the leading
/// Taylor coefficient before use.
#[derive(Debug, Clone)]
pub struct NumberFieldData {
    pub kind: FieldKind,
    pub real_places: u32,
    pub complex_places: u32,
    pub roots_of_unity: u32,
    pub class_number: u32,
    pub regulator: f64,
    pub discriminant: i64,
}

impl NumberFieldData {
    pub fn rationals() -> Self {
        NumberFieldData {
            kind: FieldKind::Rationals,
            real_places: 1,
            complex_places: 0,
            roots_of_unity: 2,
            class_number: 1,
            regulator: 1.0,
            discriminant: 1,
        }
    }

    pub fn quadratic(
        discriminant: i64,
        roots_of_unity: u32,
        class_number: u32,
        regulator: f64,
    ) -> Result<Self> {
        check_fundamental(discriminant)?;
        let (r1, r2) = if discriminant > 0 { (2, 0) } else { (0, 1) };
        Ok(NumberFieldData {
            kind: FieldKind::Quadratic(discriminant),
            real_places: r1,
            complex_places: r2,
            roots_of_unity,
            class_number,
            regulator,
            discriminant,
        })
    }

    /// Bundled presets keyed by descriptor string.
    pub fn preset(name: &str) -> Result<Self> {
        match name {
            "Q" => Ok(Self::rationals()),
            "Q(i)" => Self::quadratic(-4, 4, 1, 1.0),
            "Q(sqrt5)" => Self::quadratic(5, 2, 1, ((1.0 + 5.0f64.sqrt()) / 2.0).ln()),
            "Q(sqrt-3)" => Self::quadratic(-3, 6, 1, 1.0),
            other => Err(Error::InvalidInput(format!(
                "unknown field preset '{other}'"
            ))),
        }
    }

    pub fn preset_names() -> &'static [&'static str] {
        &["Q", "Q(i)", "Q(sqrt5)", "Q(sqrt-3)"]
    }

    /// r1 + r2, the vanishing order of ζ_K at 0 plus one.
    pub fn unit_rank_plus_one(&self) -> u32 {
        self.real_places + self.complex_places
    }
}

fn check_fundamental(d: i64) -> Result<()> {
    let squarefree =
        |n: i64| -> Result<bool> { Ok(Factorization::of(n.unsigned_abs())?.is_squarefree()) };
    let ok = if d == 0 || d == 1 {
        false
    } else if d.rem_euclid(4) == 1 {
        squarefree(d)?
    } else if d % 4 == 0 {
        let q = d / 4;
        squarefree(q)? && matches!(q.rem_euclid(4), 2 | 3)
    } else {
        false
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "{d} is not a fundamental discriminant"
        )))
    }
}

/// The Kronecker character χ_D mod |D| attached to a fundamental
/// discriminant: the unique real primitive character mod |D| with parity
/// χ_D(−1) = sign(D).
pub fn kronecker_character(d: i64) -> Result<DirichletCharacter> {
    check_fundamental(d)?;
    let m = d.unsigned_abs();
    let want_parity = if d > 0 { 1 } else { -1 };
    for chi in enumerate_characters(m)? {
        if chi.is_principal() {
            continue;
        }
        if !chi.mul(&chi)?.is_principal() || chi.parity() != want_parity {
            continue;
        }
        let (f, _) = chi.conductor_and_primitive()?;
        if f == m {
            return Ok(chi);
        }
    }
    Err(Error::InvalidInput(format!(
        "no primitive real character mod {m}; {d} is not fundamental"
    )))
}

/// Taylor coefficients of ζ_K(s) at s = 0 through the given order (≤ 4).
pub fn dedekind_zeta_taylor0(
    lfun: &mut LFunctions,
    field: &NumberFieldData,
    order: usize,
) -> Result<Vec<f64>> {
    if order > 4 {
        return Err(Error::InvalidInput(
            "Dedekind Taylor order limited to K <= 4".into(),
        ));
    }
    match field.kind {
        FieldKind::Rationals => riemann_taylor_at_zero(lfun.evaluator(), order),
        FieldKind::Quadratic(d) => {
            let chi = kronecker_character(d)?;
            let zeta = riemann_taylor_at_zero(lfun.evaluator(), order)?;
            let l = lfun.l_taylor_at_zero(&chi, order)?;
            let zs = Series::new(
                0,
                zeta.iter()
                    .map(|&c| Complex64::new(c, 0.0))
                    .collect::<Vec<_>>(),
            );
            let prod = zs.mul(&Series::new(0, l.taylor.clone()));
            let mut out = Vec::with_capacity(order + 1);
            for k in 0..=order as i64 {
                let c = prod.coeff(k)?;
                if c.im.abs() > 1e-10 {
                    return Err(Error::PrecisionFault(format!(
                        "Dedekind Taylor coefficient {k} has imaginary part {:.2e}",
                        c.im
                    )));
                }
                out.push(c.re);
            }
            Ok(out)
        }
    }
}

/// Comparison of the supplied invariants against the leading Taylor term
/// −h_K R_K / w_K.
#[derive(Debug, Clone, Copy)]
pub struct LeadingCheck {
    pub expected: f64,
    pub computed: f64,
    pub relative_error: f64,
}

pub fn leading_check(lfun: &mut LFunctions, field: &NumberFieldData) -> Result<LeadingCheck> {
    let n = field.unit_rank_plus_one() as usize;
    let taylor = dedekind_zeta_taylor0(lfun, field, n)?;
    let expected = -(field.class_number as f64) * field.regulator / field.roots_of_unity as f64;
    let computed = taylor[n - 1];
    let relative_error = (computed - expected).abs() / expected.abs();
    Ok(LeadingCheck {
        expected,
        computed,
        relative_error,
    })
}

/// Result of the prime-ideal-norm product evaluation.
#[derive(Debug, Clone)]
pub struct FieldProduct {
    pub exponent: f64,
    pub value: f64,
    pub leading: LeadingCheck,
    pub taylor: Vec<f64>,
}

/// Regularized product of prime-ideal norms:
/// exp(−2 w_K ζ_K^{(r1+r2)}(0) / ((r1+r2) h_K R_K)).
pub fn regprod_number_field(
    lfun: &mut LFunctions,
    field: &NumberFieldData,
) -> Result<FieldProduct> {
    let leading = leading_check(lfun, field)?;
    if leading.relative_error > 1e-8 {
        return Err(Error::ValidationFailed(format!(
            "leading Taylor coefficient {:.12e} does not match -hR/w = {:.12e} (rel {:.2e}); \
             check the supplied field invariants",
            leading.computed, leading.expected, leading.relative_error
        )));
    }
    let n = field.unit_rank_plus_one() as usize;
    let taylor = dedekind_zeta_taylor0(lfun, field, n)?;
    // ζ_K^{(n)}(0) = n! · c_n
    let mut deriv = taylor[n];
    for k in 1..=n {
        deriv *= k as f64;
    }
    let exponent = -2.0 * field.roots_of_unity as f64 * deriv
        / (n as f64 * field.class_number as f64 * field.regulator);
    Ok(FieldProduct {
        exponent,
        value: exponent.exp(),
        leading,
        taylor,
    })
}
