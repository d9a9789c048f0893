//! Curve specifications and exact point counting over 𝔽_{q^m}.

use super::field::{Elem, FiniteField};
use crate::error::{Error, Result};

const ENUMERATION_BUDGET: u128 = 1_000_000_000;

/// Points at infinity added per extension degree for an affine model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InfinityRule {
    /// the same count for every extension degree
    Constant(u64),
    /// counts indexed by extension degree m = 1, 2, …
    PerDegree(Vec<u64>),
}

impl InfinityRule {
    pub fn count(&self, m: u32) -> Result<u64> {
        match self {
            InfinityRule::Constant(c) => Ok(*c),
            InfinityRule::PerDegree(v) => v.get((m - 1) as usize).copied().ok_or_else(|| {
                Error::InvalidInput(format!(
                    "infinity rule lists {} degrees, degree {m} requested",
                    v.len()
                ))
            }),
        }
    }
}

/// A curve over 𝔽_q given either as a homogeneous plane projective polynomial
/// or as an Artin–Schreier style affine model y² + h(x) y = f(x) plus an
/// explicit points-at-infinity rule.
#[derive(Debug, Clone)]
pub enum CurveSpec {
    PlaneProjective {
        p: u64,
        base_degree: u32,
        /// monomials (coefficient, exponent of x, of y, of z), coefficient mod p
        monomials: Vec<(u64, u32, u32, u32)>,
    },
    ArtinSchreier {
        p: u64,
        base_degree: u32,
        /// h(x) coefficients, constant first
        h: Vec<u64>,
        /// f(x) coefficients, constant first
        f: Vec<u64>,
        infinity: InfinityRule,
    },
}

impl CurveSpec {
    pub fn plane(p: u64, monomials: Vec<(u64, u32, u32, u32)>) -> Result<Self> {
        if monomials.is_empty() {
            return Err(Error::InvalidInput("zero polynomial".into()));
        }
        let deg = monomials[0].1 + monomials[0].2 + monomials[0].3;
        if monomials.iter().any(|&(_, i, j, k)| i + j + k != deg) {
            return Err(Error::InvalidInput(
                "plane polynomial is not homogeneous".into(),
            ));
        }
        if deg == 0 || deg > 8 {
            return Err(Error::InvalidInput(format!(
                "plane degree {deg} out of the supported range 1..=8"
            )));
        }
        Ok(CurveSpec::PlaneProjective {
            p,
            base_degree: 1,
            monomials,
        })
    }

    pub fn artin_schreier(
        p: u64,
        h: Vec<u64>,
        f: Vec<u64>,
        infinity: InfinityRule,
    ) -> Result<Self> {
        let deg = f.len().max(h.len()).saturating_sub(1);
        if deg > 8 {
            return Err(Error::InvalidInput(format!(
                "affine degree {deg} out of the supported range 0..=8"
            )));
        }
        if h.iter().all(|&c| c % p == 0) && p == 2 {
            return Err(Error::InvalidInput(
                "h = 0 in characteristic 2 makes y^2 = f(x) inseparable".into(),
            ));
        }
        Ok(CurveSpec::ArtinSchreier {
            p,
            base_degree: 1,
            h,
            f,
            infinity,
        })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            CurveSpec::PlaneProjective { p, .. } | CurveSpec::ArtinSchreier { p, .. } => *p,
        }
    }

    pub fn base_degree(&self) -> u32 {
        match self {
            CurveSpec::PlaneProjective { base_degree, .. }
            | CurveSpec::ArtinSchreier { base_degree, .. } => *base_degree,
        }
    }
}

/// Exact number of 𝔽_{q^m}-rational points. Plane curves enumerate ℙ², the
/// affine model enumerates (x, y) pairs and adds the infinity rule, both in
/// fixed chunked order with a deterministic reduction.
pub fn count_points(curve: &CurveSpec, m: u32) -> Result<u64> {
    count_points_with_modulus(curve, m, 0)
}

/// Same count with an alternate irreducible modulus for 𝔽_{q^m}; the result
/// must not depend on the choice.
pub fn count_points_with_modulus(curve: &CurveSpec, m: u32, modulus_index: usize) -> Result<u64> {
    if m == 0 {
        return Err(Error::InvalidInput("extension degree must be >= 1".into()));
    }
    let p = curve.characteristic();
    let q = p.pow(curve.base_degree());
    let qm = (q as u128).pow(m);
    if qm * qm > ENUMERATION_BUDGET {
        return Err(Error::BudgetExceeded(qm * qm, ENUMERATION_BUDGET));
    }
    let field = FiniteField::with_modulus_index(p, curve.base_degree(), m, modulus_index)?;
    match curve {
        CurveSpec::PlaneProjective { monomials, .. } => Ok(count_plane(&field, monomials)),
        CurveSpec::ArtinSchreier { h, f, infinity, .. } => {
            Ok(count_artin_schreier(&field, h, f)? + infinity.count(m)?)
        }
    }
}

fn eval_monomials(
    field: &FiniteField,
    monomials: &[(u64, u32, u32, u32)],
    x: &Elem,
    y: &Elem,
    z: &Elem,
) -> bool {
    let mut acc = field.zero();
    for &(c, i, j, k) in monomials {
        let mut term = field.constant(c);
        term = field.mul(&term, &field.pow(x, i as u128));
        term = field.mul(&term, &field.pow(y, j as u128));
        term = field.mul(&term, &field.pow(z, k as u128));
        acc = field.add(&acc, &term);
    }
    field.is_zero(&acc)
}

fn count_plane(field: &FiniteField, monomials: &[(u64, u32, u32, u32)]) -> u64 {
    // projective representatives: (1, y, z), (0, 1, z), (0, 0, 1); the affine
    // chart is scanned in chunks with a plain additive reduction
    let one = field.one();
    let zero = field.zero();
    let mut total = 0u64;
    let elems: Vec<Elem> = field.elements().collect();
    const CHUNK: usize = 1024;
    for ys in elems.chunks(CHUNK) {
        let mut chunk_count = 0u64;
        for y in ys {
            for z in &elems {
                if eval_monomials(field, monomials, &one, y, z) {
                    chunk_count += 1;
                }
            }
        }
        total += chunk_count;
    }
    for z in &elems {
        if eval_monomials(field, monomials, &zero, &one, z) {
            total += 1;
        }
    }
    if eval_monomials(field, monomials, &zero, &zero, &one) {
        total += 1;
    }
    total
}

fn poly_eval(field: &FiniteField, coeffs: &[u64], x: &Elem) -> Elem {
    let mut acc = field.zero();
    for &c in coeffs.iter().rev() {
        acc = field.mul(&acc, x);
        acc = field.add(&acc, &field.constant(c));
    }
    acc
}

fn count_artin_schreier(field: &FiniteField, h: &[u64], f: &[u64]) -> Result<u64> {
    let elems: Vec<Elem> = field.elements().collect();
    let mut total = 0u64;
    for x in &elems {
        let hx = poly_eval(field, h, x);
        let fx = poly_eval(field, f, x);
        let mut solutions = 0u64;
        for y in &elems {
            // y^2 + h(x) y − f(x) = 0
            let lhs = field.add(&field.mul(y, y), &field.mul(&hx, y));
            if lhs == fx {
                solutions += 1;
            }
        }
        total += solutions;
    }
    Ok(total)
}
