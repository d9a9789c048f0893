//! Dirichlet characters modulo m with exact root-of-unity values.
//!
//! (ℤ/m)^× is decomposed by CRT into cyclic components with explicit
//! generators (2^k split as C2 × C_{2^{k-2}} for k ≥ 3). A character is an
//! exponent vector on those generators; values are stored as exact fractions
//! of a full turn, so group operations, parity, and orthogonality never touch
//! floating point.

use crate::arith::{gcd, Factorization};
use crate::error::{Error, Result};
use crate::series::Rat;
use num_complex::Complex64;
use num_traits::{One, Zero};
use std::f64::consts::TAU;
use std::sync::Arc;

/// e^{2πi·num/den} with 0 ≤ num < den, gcd(num, den) = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootOfUnity {
    num: u64,
    den: u64,
}

impl RootOfUnity {
    fn new(num: u64, den: u64) -> Self {
        let num = num % den;
        let g = gcd(num, den).max(1);
        RootOfUnity {
            num: num / g,
            den: den / g,
        }
    }

    pub fn one() -> Self {
        RootOfUnity { num: 0, den: 1 }
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let den = self.den / gcd(self.den, rhs.den) * rhs.den;
        RootOfUnity::new(self.num * (den / self.den) + rhs.num * (den / rhs.den), den)
    }

    pub fn conj(&self) -> Self {
        if self.num == 0 {
            *self
        } else {
            RootOfUnity {
                num: self.den - self.num,
                den: self.den,
            }
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        if self.den == 1 {
            return Complex64::one();
        }
        if 2 * self.num == self.den {
            return -Complex64::one();
        }
        if 4 * self.num == self.den {
            return Complex64::i();
        }
        if 4 * self.num == 3 * self.den {
            return -Complex64::i();
        }
        Complex64::from_polar(1.0, TAU * self.num as f64 / self.den as f64)
    }

    /// Some(±1) when the root is real.
    pub fn as_rational(&self) -> Option<Rat> {
        match (self.num, self.den) {
            (0, _) => Some(Rat::one()),
            (1, 2) => Some(-Rat::one()),
            _ => None,
        }
    }
}

/// A character value: 0 off the units, a root of unity on them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharValue {
    Zero,
    Root(RootOfUnity),
}

impl CharValue {
    pub fn to_complex(&self) -> Complex64 {
        match self {
            CharValue::Zero => Complex64::zero(),
            CharValue::Root(r) => r.to_complex(),
        }
    }

    /// Exact rational value when it is 0 or ±1.
    pub fn as_rational(&self) -> Option<Rat> {
        match self {
            CharValue::Zero => Some(Rat::zero()),
            CharValue::Root(r) => r.as_rational(),
        }
    }
}

/// Structure of (ℤ/m)^× as a product of cyclic groups.
#[derive(Debug)]
pub struct UnitGroup {
    modulus: u64,
    /// (generator mod m, order), one per cyclic component.
    components: Vec<(u64, u64)>,
    /// exponent vector per residue; None off the units.
    dlogs: Vec<Option<Vec<u64>>>,
    phi: u64,
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Smallest primitive root mod an odd prime p.
fn primitive_root(p: u64) -> u64 {
    let phi = p - 1;
    let qs = Factorization::of(phi).unwrap().primes();
    (2..p)
        .find(|&g| qs.iter().all(|&q| pow_mod(g, phi / q, p) != 1))
        .expect("odd prime has a primitive root")
}

/// Generator of (ℤ/p^k)^× for odd p.
fn primitive_root_prime_power(p: u64, k: u32) -> u64 {
    let g = primitive_root(p);
    if k == 1 {
        return g;
    }
    // g lifts iff g^{p-1} != 1 mod p^2; otherwise g + p does
    if pow_mod(g, p - 1, p * p) != 1 {
        g
    } else {
        g + p
    }
}

fn crt_lift(residue: u64, q: u64, m: u64) -> u64 {
    // x = residue (mod q), x = 1 (mod m/q)
    let other = m / q;
    if other == 1 {
        return residue % m;
    }
    let (_, inv, _) = ext_gcd(other as i128, q as i128);
    let t = ((residue as i128 - 1) % q as i128 * inv).rem_euclid(q as i128) as u64;
    (1 + other as u128 * t as u128) as u64 % m
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

impl UnitGroup {
    pub fn new(m: u64) -> Result<Arc<Self>> {
        if m == 0 {
            return Err(Error::InvalidInput("modulus must be positive".into()));
        }
        let mut components: Vec<(u64, u64)> = Vec::new();
        if m > 1 {
            for &(p, k) in Factorization::of(m)?.factors() {
                let q = p.pow(k);
                if p == 2 {
                    match k {
                        1 => {}
                        2 => components.push((crt_lift(3, 4, m), 2)),
                        _ => {
                            components.push((crt_lift(q - 1, q, m), 2));
                            components.push((crt_lift(5, q, m), q / 4));
                        }
                    }
                } else {
                    let g = primitive_root_prime_power(p, k);
                    components.push((crt_lift(g, q, m), q / p * (p - 1)));
                }
            }
        }
        // walk the full product of cyclic components to fill the dlog table
        let mut dlogs: Vec<Option<Vec<u64>>> = vec![None; m as usize];
        let t = components.len();
        let mut exps = vec![0u64; t];
        let mut residue = 1u64 % m;
        let mut phi = 0u64;
        loop {
            dlogs[residue as usize] = Some(exps.clone());
            phi += 1;
            // mixed-radix increment, updating the residue incrementally
            let mut i = 0;
            loop {
                if i == t {
                    // wrapped around completely
                    debug_assert_eq!(exps, vec![0u64; t]);
                    let group = UnitGroup {
                        modulus: m,
                        components,
                        dlogs,
                        phi,
                    };
                    debug_assert_eq!(group.phi, group.phi_check());
                    return Ok(Arc::new(group));
                }
                exps[i] += 1;
                residue = mul_mod(residue, components[i].0, m);
                if exps[i] < components[i].1 {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }

    fn phi_check(&self) -> u64 {
        self.components
            .iter()
            .map(|&(_, d)| d)
            .product::<u64>()
            .max(1)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn phi(&self) -> u64 {
        self.phi
    }

    pub fn units(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.modulus.max(1)).filter(|&a| self.dlogs[a as usize].is_some())
    }
}

/// A Dirichlet character mod m.
#[derive(Clone)]
pub struct DirichletCharacter {
    group: Arc<UnitGroup>,
    exponents: Vec<u64>,
    values: Vec<CharValue>,
}

impl PartialEq for DirichletCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.group.modulus == other.group.modulus && self.exponents == other.exponents
    }
}
impl Eq for DirichletCharacter {}

impl std::fmt::Debug for DirichletCharacter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "chi(mod {}; {:?})", self.group.modulus, self.exponents)
    }
}

impl DirichletCharacter {
    fn from_exponents(group: Arc<UnitGroup>, exponents: Vec<u64>) -> Self {
        let m = group.modulus;
        let lcm_den = group
            .components
            .iter()
            .fold(1u64, |l, &(_, d)| l / gcd(l, d) * d);
        let mut values = vec![CharValue::Zero; m.max(1) as usize];
        for a in 0..m.max(1) {
            if let Some(exps) = &group.dlogs[a as usize] {
                let mut num: u128 = 0;
                for (i, &(_, d)) in group.components.iter().enumerate() {
                    num += (exponents[i] as u128 * exps[i] as u128) % d as u128
                        * (lcm_den / d) as u128;
                }
                values[a as usize] =
                    CharValue::Root(RootOfUnity::new((num % lcm_den as u128) as u64, lcm_den));
            }
        }
        DirichletCharacter {
            group,
            exponents,
            values,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.group.modulus
    }

    pub fn group(&self) -> &Arc<UnitGroup> {
        &self.group
    }

    /// Stable identity for use as a map key.
    pub fn key(&self) -> (u64, Vec<u64>) {
        (self.group.modulus, self.exponents.clone())
    }

    pub fn is_principal(&self) -> bool {
        self.exponents.iter().all(|&c| c == 0)
    }

    pub fn eval_value(&self, n: u64) -> CharValue {
        let m = self.group.modulus.max(1);
        self.values[(n % m) as usize]
    }

    pub fn eval(&self, n: u64) -> Complex64 {
        self.eval_value(n).to_complex()
    }

    /// χ(n) with χ^{-1} = conj applied, i.e. χ^{-1}(n).
    pub fn eval_inv(&self, n: u64) -> Complex64 {
        match self.eval_value(n) {
            CharValue::Zero => Complex64::zero(),
            CharValue::Root(r) => r.conj().to_complex(),
        }
    }

    /// χ(−1) ∈ {+1, −1}.
    pub fn parity(&self) -> i32 {
        let m = self.group.modulus;
        if m <= 2 {
            return 1;
        }
        match self.eval_value(m - 1) {
            CharValue::Root(r) if r.is_one() => 1,
            CharValue::Root(_) => -1,
            CharValue::Zero => unreachable!("-1 is a unit"),
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == 1
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.group.modulus != rhs.group.modulus {
            return Err(Error::InvalidInput("modulus mismatch".into()));
        }
        let exps = self
            .exponents
            .iter()
            .zip(&rhs.exponents)
            .zip(&self.group.components)
            .map(|((a, b), &(_, d))| (a + b) % d)
            .collect();
        Ok(Self::from_exponents(self.group.clone(), exps))
    }

    pub fn inverse(&self) -> Self {
        let exps = self
            .exponents
            .iter()
            .zip(&self.group.components)
            .map(|(&c, &(_, d))| if c == 0 { 0 } else { d - c })
            .collect();
        Self::from_exponents(self.group.clone(), exps)
    }

    pub fn pow(&self, n: u64) -> Self {
        let exps = self
            .exponents
            .iter()
            .zip(&self.group.components)
            .map(|(&c, &(_, d))| ((c as u128 * n as u128) % d as u128) as u64)
            .collect();
        Self::from_exponents(self.group.clone(), exps)
    }

    /// Conductor f | m and the primitive character mod f inducing χ.
    pub fn conductor_and_primitive(&self) -> Result<(u64, DirichletCharacter)> {
        let m = self.group.modulus;
        let f = Factorization::of(m.max(1))?
            .divisors()
            .into_iter()
            .find(|&f| {
                self.group
                    .units()
                    .filter(|&a| a % f == 1 % f)
                    .all(|a| matches!(self.eval_value(a), CharValue::Root(r) if r.is_one()))
            })
            .expect("m itself always qualifies");
        // match the induced value table against the characters mod f
        let candidates = enumerate_characters(f)?;
        'cand: for cand in candidates {
            for b in cand.group.units() {
                // lift b to a residue coprime to m
                let mut lift = b;
                while gcd(lift, m) != 1 {
                    lift += f;
                }
                if cand.eval_value(b) != self.eval_value(lift % m) {
                    continue 'cand;
                }
            }
            return Ok((f, cand));
        }
        unreachable!("an inducing primitive character always exists")
    }
}

/// All φ(m) characters mod m, principal first, in a deterministic order.
pub fn enumerate_characters(m: u64) -> Result<Vec<DirichletCharacter>> {
    let group = UnitGroup::new(m)?;
    let t = group.components.len();
    let mut out = Vec::with_capacity(group.phi as usize);
    let mut exps = vec![0u64; t];
    loop {
        out.push(DirichletCharacter::from_exponents(
            group.clone(),
            exps.clone(),
        ));
        let mut i = 0;
        loop {
            if i == t {
                return Ok(out);
            }
            exps[i] += 1;
            if exps[i] < group.components[i].1 {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// The three character subsets attached to a power n:
/// plus = {χ: χ^n(−1) = 1}, minus = {χ: χ^n(−1) = −1}, zero = {χ: χ^n = χ0}.
#[derive(Debug)]
pub struct CharacterSubsets {
    pub plus: Vec<DirichletCharacter>,
    pub minus: Vec<DirichletCharacter>,
    pub zero: Vec<DirichletCharacter>,
}

pub fn character_subsets(m: u64, n: u64) -> Result<CharacterSubsets> {
    if n == 0 {
        return Err(Error::InvalidInput("subset power must be >= 1".into()));
    }
    let mut sets = CharacterSubsets {
        plus: Vec::new(),
        minus: Vec::new(),
        zero: Vec::new(),
    };
    for chi in enumerate_characters(m)? {
        let psi = chi.pow(n);
        if psi.is_principal() {
            sets.zero.push(chi.clone());
        }
        if psi.parity() == 1 {
            sets.plus.push(chi);
        } else {
            sets.minus.push(chi);
        }
    }
    Ok(sets)
}
