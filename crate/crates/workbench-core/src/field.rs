//! Prime fields `F_p` and extensions `F_{p^m}`.
//!
//! Extension fields are represented relative to a fixed irreducible modulus
//! polynomial that is stored explicitly, so every computation and report is
//! reproducible bit for bit. Field automorphisms are powers of Frobenius.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum FieldError {
    #[error("modulus of degree {0} is not irreducible over F_{1}: it has a root")]
    ReducibleModulus(usize, u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of the prime field `F_p`. The modulus travels with the value.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    pub p: u64,
    pub val: u64,
}

impl Fp {
    pub fn new(p: u64, val: i64) -> Self {
        let v = val.rem_euclid(p as i64) as u64;
        Fp { p, val: v }
    }

    pub fn zero(p: u64) -> Self {
        Fp { p, val: 0 }
    }

    pub fn one(p: u64) -> Self {
        Fp { p, val: 1 }
    }

    pub fn is_zero(&self) -> bool {
        self.val == 0
    }

    pub fn add(&self, rhs: &Fp) -> Fp {
        debug_assert_eq!(self.p, rhs.p);
        Fp { p: self.p, val: (self.val + rhs.val) % self.p }
    }

    pub fn sub(&self, rhs: &Fp) -> Fp {
        debug_assert_eq!(self.p, rhs.p);
        Fp { p: self.p, val: (self.p + self.val - rhs.val) % self.p }
    }

    pub fn mul(&self, rhs: &Fp) -> Fp {
        debug_assert_eq!(self.p, rhs.p);
        Fp { p: self.p, val: (self.val as u128 * rhs.val as u128 % self.p as u128) as u64 }
    }

    pub fn neg(&self) -> Fp {
        Fp { p: self.p, val: (self.p - self.val) % self.p }
    }

    pub fn inv(&self) -> Option<Fp> {
        if self.val == 0 {
            return None;
        }
        // Fermat: p is prime.
        Some(self.pow(self.p - 2))
    }

    pub fn pow(&self, mut e: u64) -> Fp {
        let mut base = *self;
        let mut acc = Fp::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.val)
    }
}

/// The field `F_{p^m}`, fixed by `p` and an irreducible monic modulus of
/// degree `m` with coefficients in `F_p` (listed from the constant term up).
#[derive(Debug, PartialEq, Eq)]
pub struct FqCtx {
    pub p: u64,
    pub m: usize,
    /// Monic modulus: `modulus[i]` is the coefficient of `t^i`; length `m+1`.
    pub modulus: Vec<u64>,
}

impl FqCtx {
    pub fn new(p: u64, modulus: Vec<u64>) -> Result<Arc<FqCtx>, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        assert!(modulus.len() >= 2, "modulus must have degree >= 1");
        assert_eq!(*modulus.last().unwrap() % p, 1, "modulus must be monic");
        let m = modulus.len() - 1;
        let ctx = FqCtx { p, m, modulus: modulus.iter().map(|c| c % p).collect() };
        // Degree <= 3 irreducibility is equivalent to having no root; higher
        // degrees additionally exclude quadratic factors by brute force.
        if ctx.m >= 2 {
            for a in 0..p {
                if ctx.eval_modulus(a) == 0 {
                    return Err(FieldError::ReducibleModulus(m, p));
                }
            }
        }
        if ctx.m >= 4 {
            if !ctx.irreducible_brute() {
                return Err(FieldError::ReducibleModulus(m, p));
            }
        }
        Ok(Arc::new(ctx))
    }

    /// The field F_4 = F_2[t]/(t^2 + t + 1), the default quadratic example.
    pub fn f4() -> Arc<FqCtx> {
        FqCtx::new(2, vec![1, 1, 1]).unwrap()
    }

    fn eval_modulus(&self, a: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.modulus.iter().rev() {
            acc = (acc * a + c) % self.p;
        }
        acc
    }

    fn irreducible_brute(&self) -> bool {
        // Trial division by all monic polynomials of degree 2..=m/2.
        let p = self.p;
        for deg in 2..=self.m / 2 {
            let count = p.pow(deg as u32);
            for idx in 0..count {
                let mut divisor = vec![0u64; deg + 1];
                let mut k = idx;
                for c in divisor.iter_mut().take(deg) {
                    *c = k % p;
                    k /= p;
                }
                divisor[deg] = 1;
                if self.poly_divides(&divisor) {
                    return false;
                }
            }
        }
        true
    }

    fn poly_divides(&self, divisor: &[u64]) -> bool {
        let p = self.p;
        let mut rem: Vec<u64> = self.modulus.clone();
        let dd = divisor.len() - 1;
        while rem.len() > dd && rem.iter().any(|&c| c != 0) {
            let lead = *rem.last().unwrap();
            if lead == 0 {
                rem.pop();
                continue;
            }
            let shift = rem.len() - 1 - dd;
            // divisor is monic, so the quotient coefficient is just `lead`.
            for i in 0..=dd {
                let idx = shift + i;
                rem[idx] = (rem[idx] + p * p - lead * divisor[i] % p) % p;
            }
            while rem.len() > 1 && *rem.last().unwrap() == 0 {
                rem.pop();
            }
        }
        rem.iter().all(|&c| c == 0)
    }
}

/// An element of `F_{p^m}`: a vector over `F_p` of length `m` in the power
/// basis of the modulus root.
#[derive(Clone)]
pub struct Fq {
    pub ctx: Arc<FqCtx>,
    pub coeffs: Vec<u64>,
}

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.coeffs == other.coeffs
    }
}
impl Eq for Fq {}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            match i {
                0 => parts.push(format!("{c}")),
                1 if c == 1 => parts.push("t".into()),
                1 => parts.push(format!("{c}t")),
                _ if c == 1 => parts.push(format!("t^{i}")),
                _ => parts.push(format!("{c}t^{i}")),
            }
        }
        write!(f, "{}", parts.join("+"))
    }
}

impl Fq {
    pub fn zero(ctx: &Arc<FqCtx>) -> Fq {
        Fq { ctx: ctx.clone(), coeffs: vec![0; ctx.m] }
    }

    pub fn one(ctx: &Arc<FqCtx>) -> Fq {
        let mut coeffs = vec![0; ctx.m];
        coeffs[0] = 1;
        Fq { ctx: ctx.clone(), coeffs }
    }

    /// The class of `t`, a generator of the extension when m >= 2.
    pub fn gen(ctx: &Arc<FqCtx>) -> Fq {
        let mut coeffs = vec![0; ctx.m];
        if ctx.m >= 2 {
            coeffs[1] = 1;
        } else {
            coeffs[0] = (ctx.p - ctx.modulus[0]) % ctx.p;
        }
        Fq { ctx: ctx.clone(), coeffs }
    }

    pub fn from_coeffs(ctx: &Arc<FqCtx>, coeffs: &[u64]) -> Fq {
        let mut full: Vec<u64> = coeffs.iter().map(|c| c % ctx.p).collect();
        while full.len() < ctx.m {
            full.push(0);
        }
        let mut el = Fq { ctx: ctx.clone(), coeffs: full };
        el.reduce();
        el
    }

    fn reduce(&mut self) {
        let p = self.ctx.p;
        let m = self.ctx.m;
        while self.coeffs.len() > m {
            let lead = self.coeffs.pop().unwrap() % p;
            if lead == 0 {
                continue;
            }
            let deg = self.coeffs.len();
            // t^deg = t^(deg-m) * (t^m), and t^m = -(lower modulus terms).
            for i in 0..m {
                let c = self.ctx.modulus[i];
                let idx = deg - m + i;
                let sub = lead * c % p;
                self.coeffs[idx] = (self.coeffs[idx] + p - sub) % p;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn add(&self, rhs: &Fq) -> Fq {
        let p = self.ctx.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| (a + b) % p)
            .collect();
        Fq { ctx: self.ctx.clone(), coeffs }
    }

    pub fn sub(&self, rhs: &Fq) -> Fq {
        let p = self.ctx.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| (a + p - b) % p)
            .collect();
        Fq { ctx: self.ctx.clone(), coeffs }
    }

    pub fn neg(&self) -> Fq {
        Fq::zero(&self.ctx).sub(self)
    }

    pub fn mul(&self, rhs: &Fq) -> Fq {
        let p = self.ctx.p;
        let mut raw = vec![0u64; self.coeffs.len() + rhs.coeffs.len()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                raw[i + j] = (raw[i + j] + a * b) % p;
            }
        }
        let mut el = Fq { ctx: self.ctx.clone(), coeffs: raw };
        el.reduce();
        while el.coeffs.len() > self.ctx.m {
            el.coeffs.pop();
        }
        while el.coeffs.len() < self.ctx.m {
            el.coeffs.push(0);
        }
        el
    }

    pub fn pow(&self, mut e: u64) -> Fq {
        let mut base = self.clone();
        let mut acc = Fq::one(&self.ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Option<Fq> {
        if self.is_zero() {
            return None;
        }
        // q - 2 = p^m - 2
        let q = self.ctx.p.pow(self.ctx.m as u32);
        Some(self.pow(q - 2))
    }

    /// Frobenius `c -> c^p` raised to the `k`-th power (k may be negative;
    /// Frobenius has order m on F_{p^m}).
    pub fn frobenius(&self, k: i64) -> Fq {
        let m = self.ctx.m as i64;
        let k = k.rem_euclid(m) as u32;
        if k == 0 {
            return self.clone();
        }
        let e = self.ctx.p.pow(k);
        self.pow(e)
    }

    /// Enumerate all q = p^m field elements, in lexicographic coefficient order.
    pub fn all(ctx: &Arc<FqCtx>) -> Vec<Fq> {
        let q = ctx.p.pow(ctx.m as u32);
        (0..q)
            .map(|idx| {
                let mut coeffs = vec![0u64; ctx.m];
                let mut k = idx;
                for c in coeffs.iter_mut() {
                    *c = k % ctx.p;
                    k /= ctx.p;
                }
                Fq { ctx: ctx.clone(), coeffs }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn f4_basic() {
        let ctx = FqCtx::f4();
        let a = Fq::gen(&ctx);
        // a^2 = a + 1, a^3 = 1
        let a2 = a.mul(&a);
        assert_eq!(a2, a.add(&Fq::one(&ctx)));
        assert!(a.pow(3).is_one());
        assert_eq!(a.inv().unwrap(), a2);
    }

    #[test]
    fn frobenius_order_two_on_f4() {
        let ctx = FqCtx::f4();
        for c in Fq::all(&ctx) {
            assert_eq!(c.frobenius(1).frobenius(1), c);
            assert_eq!(c.frobenius(-1), c.frobenius(1));
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        // t^2 - 1 = (t-1)(t+1) over F_3
        assert!(FqCtx::new(3, vec![2, 0, 1]).is_err());
        assert!(FqCtx::new(4, vec![1, 1, 1]).is_err());
    }

    #[test]
    fn f8_field_axioms_exhaustive() {
        // t^3 + t + 1 irreducible over F_2
        let ctx = FqCtx::new(2, vec![1, 1, 0, 1]).unwrap();
        let all = Fq::all(&ctx);
        assert_eq!(all.len(), 8);
        for a in &all {
            for b in &all {
                assert_eq!(a.mul(b), b.mul(a));
                for c in &all {
                    assert_eq!(a.mul(&b.mul(c)), a.mul(b).mul(c));
                    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
                }
            }
            if !a.is_zero() {
                assert!(a.mul(&a.inv().unwrap()).is_one());
            }
        }
    }

    proptest! {
        #[test]
        fn fp_field_axioms(a in 0i64..97, b in 0i64..97, c in 0i64..97) {
            let p = 97;
            let (a, b, c) = (Fp::new(p, a), Fp::new(p, b), Fp::new(p, c));
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.add(&a.neg()), Fp::zero(p));
            if !a.is_zero() {
                prop_assert_eq!(a.mul(&a.inv().unwrap()), Fp::one(p));
            }
        }
    }
}
