//! Elementary arithmetic functions: factorization, μ, φ, ω, sieves.

use crate::error::{Error, Result};
use std::fmt;

/// Prime factorization of a positive integer, primes in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Factor `n ≥ 1` by trial division.
    pub fn of(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("cannot factor 0".into()));
        }
        let mut factors = Vec::new();
        let mut m = n;
        let mut d = 2u64;
        while d * d <= m {
            if m.is_multiple_of(d) {
                let mut e = 0u32;
                while m.is_multiple_of(d) {
                    m /= d;
                    e += 1;
                }
                factors.push((d, e));
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if m > 1 {
            factors.push((m, 1));
        }
        Ok(Factorization { factors })
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Distinct prime divisors, increasing.
    pub fn primes(&self) -> Vec<u64> {
        self.factors.iter().map(|&(p, _)| p).collect()
    }

    pub fn omega(&self) -> u32 {
        self.factors.len() as u32
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Reconstruct n = ∏ p^e.
    pub fn value(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| p.pow(e))
            .product::<u64>()
            .max(1)
    }

    /// All divisors of n, increasing.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
            for &d in &divs {
                let mut pk = 1u64;
                for _ in 0..=e {
                    next.push(d * pk);
                    pk = pk.saturating_mul(p);
                }
            }
            divs = next;
        }
        divs.sort_unstable();
        divs
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(p, e)| {
                if e == 1 {
                    format!("{p}")
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

/// μ(n), φ(n), ω(n) and the factorization, in one pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicativeInvariants {
    pub mobius: i32,
    pub phi: u64,
    pub omega: u32,
    pub factorization: Factorization,
}

pub fn multiplicative_invariants(n: u64) -> Result<MultiplicativeInvariants> {
    let factorization = Factorization::of(n)?;
    let mobius = if factorization.is_squarefree() {
        if factorization.omega() % 2 == 0 {
            1
        } else {
            -1
        }
    } else {
        0
    };
    let mut phi = 1u64;
    for &(p, e) in factorization.factors() {
        phi *= p.pow(e - 1) * (p - 1);
    }
    Ok(MultiplicativeInvariants {
        mobius,
        phi,
        omega: factorization.omega(),
        factorization,
    })
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn mobius(n: u64) -> Result<i32> {
    Ok(multiplicative_invariants(n)?.mobius)
}

pub fn euler_phi(n: u64) -> Result<u64> {
    Ok(multiplicative_invariants(n)?.phi)
}

/// Primes up to `bound` (inclusive), by Eratosthenes.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut is_comp = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !is_comp[p] {
            primes.push(p as u64);
            let mut q = p * p;
            while q <= n {
                is_comp[q] = true;
                q += p;
            }
        }
    }
    primes
}

/// Möbius values μ(1..=bound) via a linear sieve; index 0 unused.
pub fn mobius_sieve(bound: usize) -> Vec<i8> {
    let mut mu = vec![0i8; bound + 1];
    if bound == 0 {
        return mu;
    }
    mu[1] = 1;
    let mut spf = vec![0u32; bound + 1];
    let mut primes: Vec<usize> = Vec::new();
    for i in 2..=bound {
        if spf[i] == 0 {
            spf[i] = i as u32;
            primes.push(i);
            mu[i] = -1;
        }
        for &p in &primes {
            if p > spf[i] as usize || i * p > bound {
                break;
            }
            spf[i * p] = p as u32;
            mu[i * p] = if i % p == 0 { 0 } else { -mu[i] };
        }
    }
    mu
}
