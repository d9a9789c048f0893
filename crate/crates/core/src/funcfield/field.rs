//! Arithmetic in 𝔽_{p^d} as polynomials over 𝔽_p modulo a monic irreducible.

use crate::error::{Error, Result};

/// 𝔽_{p^k} together with the tower degree m, so arithmetic runs in 𝔽_{p^{km}}.
#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u64,
    base_degree: u32,
    tower_degree: u32,
    /// monic modulus of degree base_degree·tower_degree; coefficients mod p,
    /// constant term first, leading 1 included
    modulus: Vec<u64>,
}

/// Field element: coefficient vector of length deg, constant term first.
pub type Elem = Vec<u64>;

impl FiniteField {
    /// 𝔽_{(p^k)^m} with the deterministic (lexicographically smallest)
    /// irreducible modulus of degree k·m.
    pub fn new(p: u64, base_degree: u32, tower_degree: u32) -> Result<Self> {
        Self::with_modulus_index(p, base_degree, tower_degree, 0)
    }

    /// Same field, with the (index+1)-th irreducible in lexicographic order;
    /// used to confirm that point counts do not depend on the representation.
    pub fn with_modulus_index(
        p: u64,
        base_degree: u32,
        tower_degree: u32,
        index: usize,
    ) -> Result<Self> {
        if p < 2 || (2..p).any(|q| p.is_multiple_of(q)) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        if base_degree == 0 || tower_degree == 0 {
            return Err(Error::InvalidInput("degrees must be positive".into()));
        }
        let deg = (base_degree * tower_degree) as usize;
        let modulus = find_irreducible(p, deg, index)?;
        Ok(FiniteField {
            p,
            base_degree,
            tower_degree,
            modulus,
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        (self.base_degree * self.tower_degree) as usize
    }

    /// q = p^k, the base field size.
    pub fn base_size(&self) -> u64 {
        self.p.pow(self.base_degree)
    }

    /// Number of elements p^{k·m}.
    pub fn size(&self) -> u64 {
        self.p.pow(self.base_degree * self.tower_degree)
    }

    pub fn zero(&self) -> Elem {
        vec![0; self.degree()]
    }

    pub fn one(&self) -> Elem {
        let mut e = self.zero();
        e[0] = 1;
        e
    }

    /// Embed an integer constant.
    pub fn constant(&self, c: u64) -> Elem {
        let mut e = self.zero();
        e[0] = c % self.p;
        e
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter().zip(b).map(|(&x, &y)| (x + y) % self.p).collect()
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| (x + self.p - y) % self.p)
            .collect()
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let d = self.degree();
        let mut prod = vec![0u64; 2 * d - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        self.reduce(prod)
    }

    fn reduce(&self, mut poly: Vec<u64>) -> Elem {
        let d = self.degree();
        for i in (d..poly.len()).rev() {
            let c = poly[i];
            if c == 0 {
                continue;
            }
            poly[i] = 0;
            // x^i = x^{i-d} · (x^d) = x^{i-d} · (-(lower part of modulus))
            for j in 0..d {
                let m = self.modulus[j];
                if m != 0 {
                    poly[i - d + j] = (poly[i - d + j] + c * (self.p - m)) % self.p;
                }
            }
        }
        poly.truncate(d);
        poly
    }

    pub fn pow(&self, a: &Elem, mut e: u128) -> Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &Elem) -> Result<Elem> {
        if self.is_zero(a) {
            return Err(Error::InvalidInput("inverse of zero".into()));
        }
        Ok(self.pow(a, self.size() as u128 - 2))
    }

    /// All field elements in a fixed lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        let d = self.degree();
        let total = self.size();
        (0..total).map(move |mut idx| {
            let mut e = vec![0u64; d];
            for c in e.iter_mut() {
                *c = idx % self.p;
                idx /= self.p;
            }
            e
        })
    }
}

/// Monic polynomial arithmetic mod p used only for the irreducibility search.
fn poly_mul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem(prod, modulus, p)
}

fn poly_trim(v: &mut Vec<u64>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
}

/// Remainder of a modulo a monic m of degree >= 1.
fn poly_rem(mut a: Vec<u64>, m: &[u64], p: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    poly_trim(&mut a);
    while a.len() > dm {
        let da = a.len() - 1;
        let c = a[da] % p;
        let k = da - dm;
        if c != 0 {
            for (j, &mj) in m.iter().enumerate() {
                a[k + j] = (a[k + j] + c * ((p - mj % p) % p)) % p;
            }
        }
        a.pop();
        poly_trim(&mut a);
    }
    a
}

fn poly_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !(b.len() == 1 && b[0] == 0) {
        if b.len() == 1 {
            return b; // nonzero constant
        }
        let lead = *b.last().unwrap();
        let inv = mod_inverse(lead, p);
        let monic: Vec<u64> = b.iter().map(|&c| c * inv % p).collect();
        let r = poly_rem(a, &monic, p);
        a = b;
        b = r;
    }
    a
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p prime
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// x^{p^e} mod f, by repeated Frobenius.
fn frobenius_power(modulus: &[u64], p: u64, e: u32) -> Vec<u64> {
    let mut x = vec![0u64, 1];
    for _ in 0..e {
        // raise to the p-th power
        let mut acc = vec![1u64];
        let mut base = x.clone();
        let mut k = p;
        while k > 0 {
            if k & 1 == 1 {
                acc = poly_mul_mod(&acc, &base, modulus, p);
            }
            base = poly_mul_mod(&base, &base, modulus, p);
            k >>= 1;
        }
        x = acc;
    }
    x
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let d = (f.len() - 1) as u32;
    // x^{p^d} = x mod f
    let xpd = frobenius_power(f, p, d);
    let mut x = vec![0u64, 1];
    x = poly_rem(x, f, p);
    let mut lhs = xpd.clone();
    while lhs.len() < x.len() {
        lhs.push(0);
    }
    let mut rhs = x.clone();
    while rhs.len() < lhs.len() {
        rhs.push(0);
    }
    if lhs != rhs {
        return false;
    }
    // gcd(x^{p^{d/r}} − x, f) = 1 for every prime r | d
    let mut rad = Vec::new();
    let mut dd = d;
    let mut q = 2;
    while q <= dd {
        if dd.is_multiple_of(q) {
            rad.push(q);
            while dd.is_multiple_of(q) {
                dd /= q;
            }
        }
        q += 1;
    }
    for r in rad {
        let xe = frobenius_power(f, p, d / r);
        // xe − x
        let mut diff = xe;
        while diff.len() < 2 {
            diff.push(0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        let g = poly_gcd(f.to_vec(), diff, p);
        if !(g.len() == 1 && g[0] != 0) {
            return false;
        }
    }
    true
}

fn find_irreducible(p: u64, deg: usize, index: usize) -> Result<Vec<u64>> {
    if deg == 1 {
        // x + c in lexicographic order
        if (index as u64) < p {
            return Ok(vec![index as u64, 1]);
        }
        return Err(Error::InvalidInput("modulus index out of range".into()));
    }
    let mut skipped = 0usize;
    let count = p.pow(deg as u32);
    for enc in 0..count {
        let mut f = Vec::with_capacity(deg + 1);
        let mut e = enc;
        for _ in 0..deg {
            f.push(e % p);
            e /= p;
        }
        f.push(1);
        if is_irreducible(&f, p) {
            if skipped == index {
                return Ok(f);
            }
            skipped += 1;
        }
    }
    Err(Error::InvalidInput(format!(
        "no irreducible of degree {deg} over F_{p} at index {index}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_on_samples() {
        for (p, k, m) in [(2u64, 1u32, 3u32), (3, 1, 2), (2, 2, 2), (5, 1, 2)] {
            let f = FiniteField::new(p, k, m).unwrap();
            let elems: Vec<Elem> = f.elements().collect();
            assert_eq!(elems.len() as u64, f.size());
            // sampled associativity/distributivity
            for a in elems.iter().step_by(3) {
                for b in elems.iter().step_by(5) {
                    for c in elems.iter().step_by(7) {
                        let lhs = f.mul(&f.add(a, b), c);
                        let rhs = f.add(&f.mul(a, c), &f.mul(b, c));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_fixes_everything() {
        let f = FiniteField::new(2, 1, 4).unwrap();
        for a in f.elements() {
            assert_eq!(f.pow(&a, f.size() as u128), a, "x^{{q^m}} = x");
        }
    }

    #[test]
    fn inverses() {
        let f = FiniteField::new(3, 1, 3).unwrap();
        for a in f.elements().skip(1) {
            let inv = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &inv), f.one());
        }
        assert!(f.inv(&f.zero()).is_err());
    }

    #[test]
    fn alternate_modulus_is_different() {
        let f0 = FiniteField::with_modulus_index(2, 1, 4, 0).unwrap();
        let f1 = FiniteField::with_modulus_index(2, 1, 4, 1).unwrap();
        assert_ne!(f0.modulus, f1.modulus);
        assert_eq!(f0.size(), f1.size());
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert!(FiniteField::new(4, 1, 1).is_err());
        assert!(FiniteField::new(1, 1, 1).is_err());
    }
}
