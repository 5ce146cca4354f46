//! Polynomials over a prime field and their complete factorization.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::integer::{factorize_u64, is_prime_u64};
use super::intpoly::IntPoly;
use super::text::{format_terms, parse_terms};
use super::AlgError;

/// Polynomial over `F_p`, ascending coefficients in `0..p`, no trailing
/// zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo the prime `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a % p, p - 2, p)
}

impl FpPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in &mut coeffs {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        FpPoly::new(p, vec![1])
    }

    /// The polynomial `t`.
    pub fn x(p: u64) -> Self {
        FpPoly::new(p, vec![0, 1])
    }

    /// Reduction of an integer polynomial modulo `p`.
    pub fn from_int_poly(f: &IntPoly, p: u64) -> Self {
        let pb = BigInt::from(p);
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| {
                let r = ((c % &pb) + &pb) % &pb;
                r.to_u64().expect("residue fits in u64")
            })
            .collect();
        FpPoly::new(p, coeffs)
    }

    /// Parses "t^2+2t+2"; coefficients are reduced modulo `p`, so negative
    /// input like "t-1" is accepted.
    pub fn parse(s: &str, p: u64) -> Result<Self, AlgError> {
        let mut coeffs: Vec<u64> = Vec::new();
        let pb = BigInt::from(p);
        for (exp, c) in parse_terms(s)? {
            let k = usize::try_from(exp).map_err(|_| AlgError::Parse(s.to_string()))?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, 0);
            }
            let r = ((c % &pb) + &pb) % &pb;
            coeffs[k] = (coeffs[k] + r.to_u64().expect("residue")) % p;
        }
        Ok(FpPoly::new(p, coeffs))
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.leading(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, c: u64) -> Self {
        FpPoly::new(
            self.p,
            self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect(),
        )
    }

    pub fn add(&self, other: &FpPoly) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        FpPoly::new(
            self.p,
            (0..n)
                .map(|k| (self.coeff(k) + other.coeff(k)) % self.p)
                .collect(),
        )
    }

    pub fn sub(&self, other: &FpPoly) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        FpPoly::new(
            self.p,
            (0..n)
                .map(|k| (self.coeff(k) + self.p - other.coeff(k)) % self.p)
                .collect(),
        )
    }

    pub fn mul(&self, other: &FpPoly) -> Self {
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero(self.p);
        }
        let p = self.p as u128;
        let mut acc = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u128 * b as u128) % p;
            }
        }
        FpPoly::new(self.p, acc.into_iter().map(|c| c as u64).collect())
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &FpPoly) -> (FpPoly, FpPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = inv_mod(d.leading(), self.p);
        let Some(nd) = self.degree() else {
            return (FpPoly::zero(self.p), FpPoly::zero(self.p));
        };
        if nd < dd {
            return (FpPoly::zero(self.p), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = mul_mod(rem[k + dd], inv, self.p);
            if c == 0 {
                continue;
            }
            quot[k] = c;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = (rem[k + j] + self.p - mul_mod(c, dc, self.p)) % self.p;
            }
        }
        (FpPoly::new(self.p, quot), FpPoly::new(self.p, rem))
    }

    pub fn rem(&self, d: &FpPoly) -> FpPoly {
        self.divrem(d).1
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> FpPoly {
        FpPoly::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| mul_mod(c, k as u64 % self.p, self.p))
                .collect(),
        )
    }

    pub fn mul_mod(&self, other: &FpPoly, m: &FpPoly) -> FpPoly {
        self.mul(other).rem(m)
    }

    /// `self^e mod m` for an exponent of arbitrary size.
    pub fn pow_mod_big(&self, e: &num_bigint::BigUint, m: &FpPoly) -> FpPoly {
        let mut acc = FpPoly::one(self.p).rem(m);
        let base = self.rem(m);
        for bit in (0..e.bits()).rev() {
            acc = acc.mul_mod(&acc, m);
            if e.bit(bit) {
                acc = acc.mul_mod(&base, m);
            }
        }
        acc
    }

    pub fn pow_mod(&self, e: u64, m: &FpPoly) -> FpPoly {
        self.pow_mod_big(&num_bigint::BigUint::from(e), m)
    }

    /// `t^(p^k) mod m` by repeated p-th powering.
    fn frobenius_power_of_x(&self, k: usize) -> FpPoly {
        let mut acc = FpPoly::x(self.p).rem(self);
        for _ in 0..k {
            acc = acc.pow_mod(self.p, self);
        }
        acc
    }

    /// Rabin's test: `t^(p^d) = t mod f` and `gcd(t^(p^(d/q)) - t, f) = 1`
    /// for every prime `q | d`.
    pub fn is_irreducible(&self) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if d == 0 {
            return false;
        }
        if d == 1 {
            return true;
        }
        let f = self.monic();
        let x = FpPoly::x(self.p);
        if f.frobenius_power_of_x(d).sub(&x).rem(&f).is_zero() {
            for (q, _) in factorize_u64(d as u64) {
                let h = f.frobenius_power_of_x(d / q as usize).sub(&x);
                if !h.gcd(&f).is_one() {
                    return false;
                }
            }
            true
        } else {
            false
        }
    }

    /// p-th root of a polynomial whose derivative vanishes.
    fn pth_root(&self) -> FpPoly {
        let p = self.p as usize;
        FpPoly::new(self.p, self.coeffs.iter().step_by(p).copied().collect())
    }

    /// Monic squarefree factors `(factor, multiplicity)` of a monic
    /// polynomial.
    fn squarefree_decomposition(&self) -> Vec<(FpPoly, u32)> {
        let mut out = Vec::new();
        let f = self.monic();
        if f.degree().unwrap_or(0) == 0 {
            return out;
        }
        let df = f.derivative();
        if df.is_zero() {
            for (g, m) in f.pth_root().squarefree_decomposition() {
                out.push((g, m * self.p as u32));
            }
            return out;
        }
        let mut c = f.gcd(&df);
        let mut w = f.divrem(&c).0;
        let mut i = 1u32;
        while !w.is_one() {
            let y = w.gcd(&c);
            let fac = w.divrem(&y).0;
            if fac.degree().unwrap_or(0) > 0 {
                out.push((fac, i));
            }
            w = y;
            c = c.divrem(&w).0;
            i += 1;
        }
        if c.degree().unwrap_or(0) > 0 {
            for (g, m) in c.pth_root().squarefree_decomposition() {
                out.push((g, m * self.p as u32));
            }
        }
        out
    }

    /// Distinct-degree split of a monic squarefree polynomial into
    /// `(degree, product of all irreducible factors of that degree)`.
    fn distinct_degree(&self) -> Vec<(usize, FpPoly)> {
        let mut out = Vec::new();
        let mut f = self.clone();
        let x = FpPoly::x(self.p);
        let mut h = x.rem(&f);
        let mut d = 0;
        while let Some(deg) = f.degree() {
            if deg < 2 * (d + 1) {
                break;
            }
            d += 1;
            h = h.pow_mod(self.p, &f);
            let g = h.sub(&x).gcd(&f);
            if !g.is_one() {
                out.push((d, g.clone()));
                f = f.divrem(&g).0;
                h = h.rem(&f);
            }
        }
        if let Some(deg) = f.degree() {
            if deg > 0 {
                out.push((deg, f));
            }
        }
        out
    }

    /// Cantor-Zassenhaus equal-degree split into irreducible factors of
    /// degree `d`.
    fn equal_degree(&self, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
        let n = self.degree().expect("nonzero");
        if n == d {
            return vec![self.clone()];
        }
        let p = self.p;
        let q_d = num_bigint::BigUint::from(p).pow(d as u32);
        loop {
            let a = FpPoly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            let g = a.gcd(self);
            let candidate = if !g.is_one() {
                g
            } else if p == 2 {
                // trace map a + a^2 + ... + a^(2^(d-1))
                let mut acc = a.rem(self);
                let mut term = acc.clone();
                for _ in 1..d {
                    term = term.mul_mod(&term, self);
                    acc = acc.add(&term);
                }
                acc.gcd(self)
            } else {
                let e = (q_d.clone() - 1u32) / 2u32;
                a.pow_mod_big(&e, self).sub(&FpPoly::one(p)).gcd(self)
            };
            let cd = candidate.degree().unwrap_or(0);
            if cd > 0 && cd < n {
                let other = self.divrem(&candidate).0;
                let mut out = candidate.equal_degree(d, rng);
                out.extend(other.equal_degree(d, rng));
                return out;
            }
        }
    }

    /// Complete factorization into monic irreducibles with multiplicity,
    /// sorted by (degree, coefficients).
    pub fn factor(&self) -> Result<Vec<(FpPoly, u32)>, AlgError> {
        if self.is_zero() {
            return Err(AlgError::VanishesModP(self.p));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_b3_u64 ^ self.p);
        let mut out = Vec::new();
        for (sqf, mult) in self.squarefree_decomposition() {
            for (d, block) in sqf.distinct_degree() {
                for fac in block.equal_degree(d, &mut rng) {
                    out.push((fac.monic(), mult));
                }
            }
        }
        out.sort_by(|a, b| a.0.cmp_canonical(&b.0));
        Ok(out)
    }

    /// Order by degree, then by coefficients from the top down.
    pub fn cmp_canonical(&self, other: &FpPoly) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }

    /// Value at `t = a`.
    pub fn eval(&self, a: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, a, self.p) + c) % self.p)
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .map(|(k, &c)| (k as i64, BigInt::from_biguint(Sign::Plus, c.into())));
        f.write_str(&format_terms(terms))
    }
}

/// Irreducible factorization of `f mod p` as a multiset of monic factors.
pub fn factor_over_prime(f: &IntPoly, p: u64) -> Result<Vec<(FpPoly, u32)>, AlgError> {
    if !is_prime_u64(p) {
        return Err(AlgError::NotPrime(p));
    }
    let reduced = FpPoly::from_int_poly(f, p);
    if reduced.is_zero() {
        return Err(AlgError::VanishesModP(p));
    }
    reduced.factor()
}

impl FpPoly {
    /// Product of the factor multiset times the given unit.
    pub fn product(p: u64, unit: u64, factors: &[(FpPoly, u32)]) -> FpPoly {
        factors
            .iter()
            .fold(FpPoly::new(p, vec![unit]), |acc, (g, m)| {
                (0..*m).fold(acc, |a, _| a.mul(g))
            })
    }
}
