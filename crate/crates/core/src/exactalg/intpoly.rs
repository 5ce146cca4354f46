//! Dense univariate polynomials over Z and Laurent polynomials over Z.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::text::{format_terms, parse_terms};
use super::AlgError;

/// Polynomial in `Z[t]`, coefficients in ascending degree.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        IntPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// gcd of the coefficients, non-negative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Exact division of every coefficient by `d`.
    fn div_scalar_exact(&self, d: &BigInt) -> Self {
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| {
                    debug_assert!((c % d).is_zero());
                    c / d
                })
                .collect(),
        )
    }

    /// `f(-t)`, multiplied by -1 if needed so the leading coefficient is
    /// positive.
    pub fn substitute_neg(&self) -> Self {
        let mut coeffs: Vec<BigInt> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        if coeffs.last().is_some_and(Signed::is_negative) {
            for c in &mut coeffs {
                *c = -&*c;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// `self / divisor` when `divisor` is monic and divides exactly.
    pub fn div_exact_monic(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.divrem_monic(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Quotient and remainder by a monic divisor; `None` if not monic.
    pub fn divrem_monic(&self, divisor: &IntPoly) -> Option<(IntPoly, IntPoly)> {
        let dd = divisor.degree()?;
        if !divisor.leading()?.is_one() {
            return None;
        }
        let Some(nd) = self.degree() else {
            return Some((IntPoly::zero(), IntPoly::zero()));
        };
        if nd < dd {
            return Some((IntPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = rem[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        Some((IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem)))
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("pseudo-remainder by zero");
        let lb = b.leading().expect("nonzero").clone();
        let mut r = self.clone();
        let Some(da) = r.degree() else {
            return r;
        };
        if da < db {
            return r;
        }
        let mut steps = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().expect("nonzero").clone();
            let shift = dr - db;
            let mut coeffs: Vec<BigInt> = r.coeffs.iter().map(|c| c * &lb).collect();
            for (j, bc) in b.coeffs.iter().enumerate() {
                coeffs[shift + j] -= &lr * bc;
            }
            r = IntPoly::from_coeffs(coeffs);
            steps -= 1;
        }
        if steps > 0 {
            r = r.scale(&lb.pow(steps as u32));
        }
        r
    }

    fn canonical_terms(&self) -> Vec<(i64, BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .map(|(k, c)| (k as i64, c.clone()))
            .collect()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.canonical_terms()))
    }
}

impl FromStr for IntPoly {
    type Err = AlgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let terms = parse_terms(s)?;
        let mut coeffs = Vec::new();
        for (exp, c) in terms {
            let k = usize::try_from(exp).map_err(|_| AlgError::Parse(s.to_string()))?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::zero());
            }
            coeffs[k] += c;
        }
        Ok(IntPoly::from_coeffs(coeffs))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident, $ty:ty) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add, IntPoly);
forward_owned!(Sub, sub, IntPoly);
forward_owned!(Mul, mul, IntPoly);

/// The `n`-th cyclotomic polynomial, by dividing `t^n - 1` by the cyclotomic
/// polynomials of the proper divisors of `n`.
pub fn cyclotomic(n: u64) -> Result<IntPoly, AlgError> {
    if n == 0 {
        return Err(AlgError::ZeroCyclotomicIndex);
    }
    let n_usize = usize::try_from(n).map_err(|_| AlgError::ZeroCyclotomicIndex)?;
    let mut poly = IntPoly::monomial(BigInt::one(), n_usize);
    poly.coeffs[0] = -BigInt::one();
    for d in super::integer::divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic(d)?;
        poly = poly
            .div_exact_monic(&phi_d)
            .expect("cyclotomic polynomials of divisors divide t^n - 1");
    }
    Ok(poly)
}

/// `phi_n(-t)`, the polynomial whose roots are the `xi` with `ord(-xi) = n`.
pub fn neg_cyclotomic(n: u64) -> Result<IntPoly, AlgError> {
    Ok(cyclotomic(n)?.substitute_neg())
}

/// Resultant over Z by the subresultant pseudo-remainder sequence.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt, AlgError> {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return Err(AlgError::ZeroPolynomial);
    };
    if df == 0 {
        return Ok(f.coeffs[0].pow(dg as u32));
    }
    if dg == 0 {
        return Ok(g.coeffs[0].pow(df as u32));
    }

    let ca = f.content();
    let cb = g.content();
    let mut a = f.div_scalar_exact(&ca);
    let mut b = g.div_scalar_exact(&cb);
    let scale = ca.pow(dg as u32) * cb.pow(df as u32);
    let mut sign = BigInt::one();
    if df < dg {
        std::mem::swap(&mut a, &mut b);
        if df % 2 == 1 && dg % 2 == 1 {
            sign = -sign;
        }
    }

    let mut g_acc = BigInt::one();
    let mut h_acc = BigInt::one();
    loop {
        let da = a.degree().expect("nonzero");
        let db = b.degree().expect("nonzero");
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        let divisor = &g_acc * h_acc.pow(delta as u32);
        b = r.div_scalar_exact(&divisor);
        g_acc = a.leading().expect("nonzero").clone();
        // h <- g^delta / h^(delta - 1), exact
        h_acc = if delta == 0 {
            h_acc
        } else {
            g_acc.pow(delta as u32) / h_acc.pow(delta as u32 - 1)
        };
        let db_new = b.degree().expect("nonzero");
        if db_new == 0 {
            let da_now = a.degree().expect("nonzero") as u32;
            let lb = b.leading().expect("nonzero");
            let h_final = if da_now == 0 {
                BigInt::one()
            } else {
                lb.pow(da_now) / h_acc.pow(da_now - 1)
            };
            return Ok(sign * scale * h_final);
        }
    }
}

/// Laurent polynomial `t^shift * body` in `Z[t, t^-1]`.
///
/// Normalized so that `body` has a nonzero constant term; zero is
/// `(0, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    shift: i64,
    body: IntPoly,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::from_poly(IntPoly::one())
    }

    pub fn constant(c: i64) -> Self {
        LaurentPoly::from_poly(IntPoly::constant(BigInt::from(c)))
    }

    /// `c * t^k` for any integer `k`.
    pub fn monomial(c: i64, k: i64) -> Self {
        LaurentPoly::new(k, IntPoly::constant(BigInt::from(c)))
    }

    pub fn from_poly(p: IntPoly) -> Self {
        LaurentPoly::new(0, p)
    }

    pub fn new(shift: i64, body: IntPoly) -> Self {
        if body.is_zero() {
            return LaurentPoly::zero();
        }
        let low = body.coeffs.iter().take_while(|c| c.is_zero()).count();
        let body = IntPoly::from_coeffs(body.coeffs[low..].to_vec());
        LaurentPoly {
            shift: shift + low as i64,
            body,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// Lowest exponent present.
    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// The polynomial left after clearing the power of `t`.
    pub fn body(&self) -> &IntPoly {
        &self.body
    }

    /// Drops the `t^shift` unit, leaving a polynomial with nonzero constant
    /// term.
    pub fn clear_shift(&self) -> IntPoly {
        self.body.clone()
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: i64) -> BigInt {
        if k < self.shift {
            return BigInt::zero();
        }
        self.body.coeff((k - self.shift) as usize)
    }

    /// Ascending `(exponent, coefficient)` pairs of the nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.body
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.shift + k as i64, c))
    }

    /// Evaluation at `t = x` for a nonzero integer `x` (exact only when the
    /// negative powers divide; used at `x = +-1`).
    pub fn eval_unit(&self, x: i64) -> BigInt {
        assert!(x == 1 || x == -1, "eval_unit needs a unit");
        let xb = BigInt::from(x);
        let v = self.body.eval(&xb);
        if x == -1 && self.shift.rem_euclid(2) == 1 {
            -v
        } else {
            v
        }
    }

    fn align(&self, other: &LaurentPoly) -> (i64, IntPoly, IntPoly) {
        if self.is_zero() {
            return (other.shift, IntPoly::zero(), other.body.clone());
        }
        if other.is_zero() {
            return (self.shift, self.body.clone(), IntPoly::zero());
        }
        let low = self.shift.min(other.shift);
        let lift = |p: &LaurentPoly| {
            let k = (p.shift - low) as usize;
            &p.body * &IntPoly::monomial(BigInt::one(), k)
        };
        (low, lift(self), lift(other))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i64, BigInt)> = self
            .terms()
            .map(|(k, c)| (k, c.clone()))
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .collect();
        f.write_str(&format_terms(terms))
    }
}

impl FromStr for LaurentPoly {
    type Err = AlgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_terms(s)?
            .into_iter()
            .try_fold(LaurentPoly::zero(), |acc, (k, c)| {
                Ok(&acc + &LaurentPoly::new(k, IntPoly::constant(c)))
            })
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (low, a, b) = self.align(rhs);
        LaurentPoly::new(low, &a + &b)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (low, a, b) = self.align(rhs);
        LaurentPoly::new(low, &a - &b)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::new(self.shift + rhs.shift, &self.body * &rhs.body)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            shift: self.shift,
            body: -&self.body,
        }
    }
}

forward_owned!(Add, add, LaurentPoly);
forward_owned!(Sub, sub, LaurentPoly);
forward_owned!(Mul, mul, LaurentPoly);

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    /// Sylvester matrix determinant by fraction-free Bareiss elimination.
    fn sylvester_resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
        let m = f.degree().unwrap();
        let n = g.degree().unwrap();
        let size = m + n;
        if size == 0 {
            return BigInt::one();
        }
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        for row in 0..n {
            for (k, c) in f.coeffs().iter().enumerate() {
                mat[row][row + m - k] = c.clone();
            }
        }
        for row in 0..m {
            for (k, c) in g.coeffs().iter().enumerate() {
                mat[n + row][row + n - k] = c.clone();
            }
        }
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..size {
            if mat[k][k].is_zero() {
                let Some(swap) = (k + 1..size).find(|&r| !mat[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                mat.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..size {
                for j in k + 1..size {
                    let v = &mat[i][j] * &mat[k][k] - &mat[i][k] * &mat[k][j];
                    mat[i][j] = v / &prev;
                }
            }
            prev = mat[k][k].clone();
        }
        sign * prev
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1).unwrap(), p("t-1"));
        assert_eq!(cyclotomic(7).unwrap(), p("t^6+t^5+t^4+t^3+t^2+t+1"));
        assert_eq!(cyclotomic(12).unwrap(), p("t^4-t^2+1"));
        assert!(matches!(cyclotomic(0), Err(AlgError::ZeroCyclotomicIndex)));
        for n in 1..=40u64 {
            assert_eq!(
                cyclotomic(n).unwrap().degree(),
                Some(super::super::integer::totient(n) as usize)
            );
        }
    }

    #[test]
    fn twelfth_cyclotomic_by_hand_division() {
        // t^12 - 1 = phi1 phi2 phi3 phi4 phi6 phi12
        let mut rest = p("t^12-1");
        for d in ["t-1", "t+1", "t^2+t+1", "t^2+1", "t^2-t+1"] {
            rest = rest.div_exact_monic(&p(d)).unwrap();
        }
        assert_eq!(rest, p("t^4-t^2+1"));
    }

    #[test]
    fn substitute_neg_examples() {
        assert_eq!(p("t+1").substitute_neg(), p("t-1"));
        assert_eq!(
            cyclotomic(7).unwrap().substitute_neg(),
            p("t^6-t^5+t^4-t^3+t^2-t+1")
        );
        assert_eq!(p("t^4-t^2+1").substitute_neg(), p("t^4-t^2+1"));
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&p("t-2"), &p("t^2+1")).unwrap(), BigInt::from(5));
        let f = p("t^3-2t+7");
        assert_eq!(resultant(&f, &f).unwrap(), BigInt::zero());
        let phi7 = neg_cyclotomic(7).unwrap();
        assert_eq!(resultant(&phi7, &p("t-1")).unwrap(), BigInt::one());
        assert!(matches!(
            resultant(&IntPoly::zero(), &f),
            Err(AlgError::ZeroPolynomial)
        ));
    }

    #[test]
    fn resultant_matches_sylvester_determinant() {
        let cases = [
            ("3t^4-t+2", "2t^3+5t^2-1"),
            ("t^5+t+1", "t^2-t+1"),
            ("6t^2+4t", "9t^3-3"),
            ("t^6-t^5+t^4-t^3+t^2-t+1", "t^4+3t^3-t+5"),
            ("2t+1", "7"),
            ("t^2-1", "t^3-t"),
        ];
        for (a, b) in cases {
            let (a, b) = (p(a), p(b));
            assert_eq!(
                resultant(&a, &b).unwrap(),
                sylvester_resultant(&a, &b),
                "{a} / {b}"
            );
        }
    }

    #[test]
    fn shift_clearing_preserves_resultant_up_to_sign() {
        let f = p("3t^3+t-4");
        for n in 2..=26u64 {
            let phi = neg_cyclotomic(n).unwrap();
            let shifted = &f * &p("t");
            let a = resultant(&f, &phi).unwrap();
            let b = resultant(&shifted, &phi).unwrap();
            assert_eq!(a.abs(), b.abs(), "n = {n}");
        }
    }

    #[test]
    fn laurent_arithmetic_and_clearing() {
        let a: LaurentPoly = "t^-1+1".parse().unwrap();
        let b: LaurentPoly = "t-1".parse().unwrap();
        let prod = &a * &b;
        assert_eq!(prod.to_string(), "t-t^-1");
        assert_eq!(prod.shift(), -1);
        assert_eq!(prod.clear_shift(), p("t^2-1"));
        assert!((&a - &a).is_zero());
        assert_eq!(LaurentPoly::monomial(-1, -3).eval_unit(-1), BigInt::from(1));
        assert_eq!(a.eval_unit(-1), BigInt::zero());
    }

    #[test]
    fn text_round_trip() {
        for s in ["t^3+t+1", "t^4-t^2+1", "-2t^5+t-7", "0", "t"] {
            assert_eq!(p(s).to_string(), s);
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = IntPoly> {
            proptest::collection::vec(-20i64..=20, 1..7).prop_filter_map("nonconstant", |c| {
                let poly = IntPoly::from_i64s(&c);
                (poly.degree().unwrap_or(0) >= 1).then_some(poly)
            })
        }

        proptest! {
            #[test]
            fn resultant_antisymmetry(f in arb_poly(), g in arb_poly()) {
                let sign = if f.degree().unwrap() * g.degree().unwrap() % 2 == 1 { -1 } else { 1 };
                prop_assert_eq!(
                    resultant(&f, &g).unwrap(),
                    BigInt::from(sign) * resultant(&g, &f).unwrap()
                );
            }

            #[test]
            fn resultant_agrees_with_sylvester(f in arb_poly(), g in arb_poly()) {
                prop_assert_eq!(resultant(&f, &g).unwrap(), sylvester_resultant(&f, &g));
            }

            #[test]
            fn text_parse_inverts_display(f in arb_poly()) {
                prop_assert_eq!(f.to_string().parse::<IntPoly>().unwrap(), f);
            }
        }
    }
}
