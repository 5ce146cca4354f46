//! Finite fields `F_p[t]/m(t)` and a log-table representation for bulk work.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::fppoly::FpPoly;
use super::integer::{factorize, is_prime_u64};
use super::AlgError;

#[derive(Debug, PartialEq, Eq, Hash)]
struct SpecInner {
    p: u64,
    modulus: FpPoly,
    degree: usize,
}

/// The field `F_p[t]/(m)` for a monic irreducible `m != t`. Cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec(Arc<SpecInner>);

impl FieldSpec {
    pub fn new(p: u64, modulus: FpPoly) -> Result<Self, AlgError> {
        if !is_prime_u64(p) {
            return Err(AlgError::NotPrime(p));
        }
        if modulus.modulus() != p {
            return Err(AlgError::CharacteristicMismatch);
        }
        if !modulus.is_monic() {
            return Err(AlgError::NotMonic(modulus.to_string()));
        }
        if modulus == FpPoly::x(p) {
            return Err(AlgError::ModulusIsT);
        }
        if !modulus.is_irreducible() {
            return Err(AlgError::Reducible(modulus.to_string()));
        }
        let degree = modulus.degree().expect("irreducible is nonzero");
        Ok(FieldSpec(Arc::new(SpecInner { p, modulus, degree })))
    }

    /// Parses the modulus from text such as "t^3+t+1".
    pub fn parse(p: u64, modulus: &str) -> Result<Self, AlgError> {
        if !is_prime_u64(p) {
            return Err(AlgError::NotPrime(p));
        }
        FieldSpec::new(p, FpPoly::parse(modulus, p)?)
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn modulus(&self) -> &FpPoly {
        &self.0.modulus
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// Field size `p^degree` (None if it overflows `u64`).
    pub fn size(&self) -> Option<u64> {
        self.0.p.checked_pow(self.0.degree as u32)
    }

    pub fn size_big(&self) -> BigUint {
        BigUint::from(self.0.p).pow(self.0.degree as u32)
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem {
            spec: self.clone(),
            rep: FpPoly::zero(self.p()),
        }
    }

    pub fn one(&self) -> FieldElem {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> FieldElem {
        let p = self.p() as i64;
        self.elem(FpPoly::new(self.p(), vec![c.rem_euclid(p) as u64]))
    }

    /// The class `xi` of `t`.
    pub fn xi(&self) -> FieldElem {
        self.elem(FpPoly::x(self.p()))
    }

    pub fn elem(&self, rep: FpPoly) -> FieldElem {
        debug_assert_eq!(rep.modulus(), self.p());
        FieldElem {
            spec: self.clone(),
            rep: rep.rem(self.modulus()),
        }
    }

    /// Element with base-`p` digit code `c = sum c_k p^k`.
    pub fn from_code(&self, mut code: u64) -> FieldElem {
        let p = self.p();
        let mut coeffs = Vec::with_capacity(self.degree());
        for _ in 0..self.degree() {
            coeffs.push(code % p);
            code /= p;
        }
        self.elem(FpPoly::new(p, coeffs))
    }

    /// An element of multiplicative order `size - 1`.
    pub fn primitive_element(&self) -> FieldElem {
        let q = self.size_big();
        let n = &q - 1u32;
        let primes: Vec<BigUint> = factorize(&n).into_keys().collect();
        let mut code = 1u64;
        loop {
            code += 1;
            let g = self.from_code(code);
            if g.is_zero() {
                continue;
            }
            if primes.iter().all(|r| !g.pow_big(&(&n / r)).is_one()) {
                return g;
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[t]/({})", self.p(), self.modulus())
    }
}

/// An element of a [`FieldSpec`], stored as a reduced polynomial in `xi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElem {
    spec: FieldSpec,
    rep: FpPoly,
}

impl FieldElem {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn rep(&self) -> &FpPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rep.is_one()
    }

    /// Inverse of [`FieldSpec::from_code`].
    pub fn code(&self) -> u64 {
        let p = self.spec.p();
        self.rep
            .coeffs()
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * p + c)
    }

    pub fn add(&self, o: &FieldElem) -> FieldElem {
        self.spec.elem(self.rep.add(&o.rep))
    }

    pub fn sub(&self, o: &FieldElem) -> FieldElem {
        self.spec.elem(self.rep.sub(&o.rep))
    }

    pub fn neg(&self) -> FieldElem {
        self.spec.zero().sub(self)
    }

    pub fn mul(&self, o: &FieldElem) -> FieldElem {
        self.spec.elem(self.rep.mul(&o.rep))
    }

    pub fn inv(&self) -> Result<FieldElem, AlgError> {
        if self.is_zero() {
            return Err(AlgError::ZeroDivision);
        }
        // extended Euclid on (rep, modulus)
        let p = self.spec.p();
        let (mut r0, mut r1) = (self.spec.modulus().clone(), self.rep.clone());
        let (mut s0, mut s1) = (FpPoly::zero(p), FpPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        let c = super::fppoly::inv_mod(r0.leading(), p);
        Ok(self.spec.elem(s0.scale(c)))
    }

    pub fn div(&self, o: &FieldElem) -> Result<FieldElem, AlgError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow_big(&self, e: &BigUint) -> FieldElem {
        self.spec.elem(self.rep.pow_mod_big(e, self.spec.modulus()))
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, e: i64) -> Result<FieldElem, AlgError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(base.pow_big(&BigUint::from(e.unsigned_abs())))
    }

    /// Multiplicative order, found by stripping prime factors from the group
    /// order `p^d - 1`.
    pub fn element_order(&self) -> Result<u64, AlgError> {
        if self.is_zero() {
            return Err(AlgError::ZeroDivision);
        }
        let n = self.spec.size_big() - 1u32;
        let mut order = n.clone();
        for (r, _) in factorize(&n) {
            while (&order % &r) == BigUint::from(0u32) && self.pow_big(&(&order / &r)).is_one() {
                order /= &r;
            }
        }
        order.to_u64().ok_or(AlgError::Overflow)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rep.fmt(f)
    }
}

/// Sentinel log for zero in [`LogField`].
pub const LOG_ZERO: u32 = u32::MAX;

/// Largest field accepted by [`LogField`].
pub const LOG_FIELD_LIMIT: u64 = 1 << 22;

/// The same field with every nonzero element stored as its discrete log
/// base a primitive element `g`; sums go through the Zech table
/// `zech[n] = log(1 + g^n)`.
#[derive(Clone, Debug)]
pub struct LogField {
    spec: FieldSpec,
    order: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
}

impl LogField {
    pub fn new(spec: &FieldSpec) -> Result<Self, AlgError> {
        let q = spec
            .size()
            .filter(|&q| q <= LOG_FIELD_LIMIT)
            .ok_or(AlgError::FieldTooLarge)?;
        let n = (q - 1) as usize;
        let g = spec.primitive_element();
        let mut exp = vec![0u32; n];
        let mut log = vec![LOG_ZERO; q as usize];
        let mut x = spec.one();
        for (i, slot) in exp.iter_mut().enumerate() {
            let c = x.code() as u32;
            *slot = c;
            log[c as usize] = i as u32;
            x = x.mul(&g);
        }
        let p = spec.p() as u32;
        let zech = exp
            .iter()
            .map(|&c| {
                let plus_one = if c % p == p - 1 { c - (p - 1) } else { c + 1 };
                log[plus_one as usize]
            })
            .collect();
        Ok(LogField {
            spec: spec.clone(),
            order: n as u32,
            exp,
            log,
            zech,
        })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// Size of the multiplicative group.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn one(&self) -> u32 {
        0
    }

    /// Log of -1.
    pub fn minus_one(&self) -> u32 {
        if self.spec.p() == 2 {
            0
        } else {
            self.order / 2
        }
    }

    pub fn from_elem(&self, x: &FieldElem) -> u32 {
        self.log[x.code() as usize]
    }

    pub fn to_elem(&self, a: u32) -> FieldElem {
        if a == LOG_ZERO {
            self.spec.zero()
        } else {
            self.spec.from_code(self.exp[a as usize] as u64)
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == LOG_ZERO || b == LOG_ZERO {
            return LOG_ZERO;
        }
        let s = a as u64 + b as u64;
        (s % self.order as u64) as u32
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.mul(a, self.minus_one())
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if a == LOG_ZERO {
            return b;
        }
        if b == LOG_ZERO {
            return a;
        }
        let d = (b + self.order - a) % self.order;
        let z = self.zech[d as usize];
        if z == LOG_ZERO {
            LOG_ZERO
        } else {
            self.mul(a, z)
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// Inverse of a nonzero log.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        debug_assert_ne!(a, LOG_ZERO);
        (self.order - a) % self.order
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f8() -> FieldSpec {
        FieldSpec::parse(2, "t^3+t+1").unwrap()
    }

    #[test]
    fn construction_checks() {
        assert!(matches!(
            FieldSpec::parse(2, "t^2+1"),
            Err(AlgError::Reducible(_))
        ));
        assert!(matches!(
            FieldSpec::parse(4, "t+1"),
            Err(AlgError::NotPrime(4))
        ));
        assert!(matches!(
            FieldSpec::parse(5, "t"),
            Err(AlgError::ModulusIsT)
        ));
        assert!(matches!(
            FieldSpec::parse(5, "2t+1"),
            Err(AlgError::NotMonic(_))
        ));
        assert_eq!(FieldSpec::parse(5, "t^2+2").unwrap().size(), Some(25));
    }

    #[test]
    fn orders_by_repeated_multiplication() {
        let k = f8();
        assert_eq!(k.xi().element_order().unwrap(), 7);
        assert_eq!(k.one().element_order().unwrap(), 1);
        assert!(k.zero().element_order().is_err());
        let f11 = FieldSpec::parse(11, "t+2").unwrap();
        let minus_xi = f11.xi().neg();
        assert_eq!(minus_xi, f11.constant(2));
        // oracle: smallest n with 2^n = 1 mod 11 by iteration
        let mut n = 1;
        let mut x = 2u64;
        while x != 1 {
            x = x * 2 % 11;
            n += 1;
        }
        assert_eq!(minus_xi.element_order().unwrap(), n);
        assert_eq!(n, 10);
    }

    #[test]
    fn inverse_and_negative_powers() {
        let k = FieldSpec::parse(3, "t^2+2t+2").unwrap();
        for code in 1..9 {
            let x = k.from_code(code);
            assert!(x.mul(&x.inv().unwrap()).is_one());
            assert_eq!(x.pow(-3).unwrap().mul(&x.pow(3).unwrap()), k.one());
        }
        assert!(k.zero().inv().is_err());
    }

    #[test]
    fn log_field_agrees_with_polynomial_arithmetic() {
        for (p, m) in [
            (2, "t^3+t+1"),
            (3, "t^2+2t+2"),
            (5, "t^2+2"),
            (43, "t+4"),
            (2, "t^4+t+1"),
        ] {
            let k = FieldSpec::parse(p, m).unwrap();
            let lf = LogField::new(&k).unwrap();
            let q = k.size().unwrap();
            for a in 0..q {
                let x = k.from_code(a);
                let la = lf.from_elem(&x);
                assert_eq!(lf.to_elem(la), x);
                for b in (0..q).step_by(((q / 13) as usize).max(1)) {
                    let y = k.from_code(b);
                    let lb = lf.from_elem(&y);
                    assert_eq!(lf.to_elem(lf.add(la, lb)), x.add(&y));
                    assert_eq!(lf.to_elem(lf.sub(la, lb)), x.sub(&y));
                    assert_eq!(lf.to_elem(lf.mul(la, lb)), x.mul(&y));
                }
            }
            assert_eq!(lf.to_elem(lf.minus_one()), k.constant(-1));
        }
    }

    proptest! {
        #[test]
        fn field_axioms_in_f625(a in 0u64..625, b in 0u64..625, c in 0u64..625) {
            let k = FieldSpec::parse(5, "t^4+t^2+2t+2").unwrap();
            let (x, y, z) = (k.from_code(a), k.from_code(b), k.from_code(c));
            prop_assert_eq!(x.add(&y), y.add(&x));
            prop_assert_eq!(x.mul(&y), y.mul(&x));
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert!(x.add(&x.neg()).is_zero());
            if !x.is_zero() {
                prop_assert!(x.mul(&x.inv().unwrap()).is_one());
                let ord = x.element_order().unwrap();
                prop_assert_eq!(624 % ord, 0);
                prop_assert!(x.pow(ord as i64).unwrap().is_one());
            }
        }
    }
}
