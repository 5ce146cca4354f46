//! Braid words in `B_3` extended by the scalar `t*id`, their reduced Burau
//! matrices over `Z[t, t^-1]`, and specializations at a field element.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exactalg::{AlgError, FieldElem, FieldSpec, FpPoly, LaurentPoly};

/// Which group a universal subgroup lives in: `Bu_3` (with the scalar
/// `t*id`) or the braid group `B_3` alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ambient {
    Bu3,
    B3,
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ambient::Bu3 => "bu3",
            Ambient::B3 => "b3",
        })
    }
}

impl FromStr for Ambient {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "bu3" => Ok(Ambient::Bu3),
            "b3" => Ok(Ambient::B3),
            _ => Err(WordParseError(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    S1,
    S1Inv,
    S2,
    S2Inv,
    /// The scalar `t*id`.
    T,
    TInv,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        match self {
            Letter::S1 => Letter::S1Inv,
            Letter::S1Inv => Letter::S1,
            Letter::S2 => Letter::S2Inv,
            Letter::S2Inv => Letter::S2,
            Letter::T => Letter::TInv,
            Letter::TInv => Letter::T,
        }
    }

    pub fn bdeg(self) -> i64 {
        match self {
            Letter::S1 | Letter::S2 => 1,
            Letter::S1Inv | Letter::S2Inv => -1,
            Letter::T => 2,
            Letter::TInv => -2,
        }
    }

    pub const ALL: [Letter; 6] = [
        Letter::S1,
        Letter::S1Inv,
        Letter::S2,
        Letter::S2Inv,
        Letter::T,
        Letter::TInv,
    ];

    fn name(self) -> &'static str {
        match self {
            Letter::S1 => "s1",
            Letter::S1Inv => "s1^-1",
            Letter::S2 => "s2",
            Letter::S2Inv => "s2^-1",
            Letter::T => "T",
            Letter::TInv => "T^-1",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse braid word {0:?}")]
pub struct WordParseError(pub String);

/// A word in `s1^{+-1}, s2^{+-1}, T^{+-1}`, read left to right as a matrix
/// product.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity() -> Self {
        BraidWord::default()
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        BraidWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { letters }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> BraidWord {
        BraidWord {
            letters: self.letters.repeat(n as usize),
        }
    }

    /// Degree homomorphism; `T` counts 2.
    pub fn bdeg(&self) -> i64 {
        self.letters.iter().map(|l| l.bdeg()).sum()
    }

    /// The Garside element `s1 s2 s1`.
    pub fn delta() -> BraidWord {
        BraidWord::new(vec![Letter::S1, Letter::S2, Letter::S1])
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("id");
        }
        let names: Vec<&str> = self.letters.iter().map(|l| l.name()).collect();
        f.write_str(&names.join(" "))
    }
}

impl FromStr for BraidWord {
    type Err = WordParseError;

    /// Whitespace-separated tokens `s1`, `s2`, `T` with optional integer
    /// exponent (`s1^-1`, `s2^3`); `id` is the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || WordParseError(s.to_string());
        let mut letters = Vec::new();
        for token in s.split_whitespace() {
            if token == "id" {
                continue;
            }
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b, e.parse::<i32>().map_err(|_| bad())?),
                None => (token, 1),
            };
            let letter = match base {
                "s1" => Letter::S1,
                "s2" => Letter::S2,
                "T" => Letter::T,
                _ => return Err(bad()),
            };
            let letter = if exp < 0 { letter.inverse() } else { letter };
            letters.extend(std::iter::repeat(letter).take(exp.unsigned_abs() as usize));
        }
        Ok(BraidWord { letters })
    }
}

impl serde::Serialize for BraidWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for BraidWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A 2x2 matrix over `Z[t, t^-1]`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BurauMatrix {
    e: [LaurentPoly; 4],
}

impl BurauMatrix {
    pub fn new(e: [LaurentPoly; 4]) -> Self {
        BurauMatrix { e }
    }

    pub fn identity() -> Self {
        Self::scalar(LaurentPoly::one())
    }

    pub fn scalar(c: LaurentPoly) -> Self {
        BurauMatrix::new([c.clone(), LaurentPoly::zero(), LaurentPoly::zero(), c])
    }

    pub fn entries(&self) -> &[LaurentPoly; 4] {
        &self.e
    }

    pub fn entry(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.e[2 * row + col]
    }

    pub fn mul(&self, o: &BurauMatrix) -> BurauMatrix {
        let [a, b, c, d] = &self.e;
        let [x, y, z, w] = &o.e;
        BurauMatrix::new([
            &(a * x) + &(b * z),
            &(a * y) + &(b * w),
            &(c * x) + &(d * z),
            &(c * y) + &(d * w),
        ])
    }

    pub fn det(&self) -> LaurentPoly {
        let [a, b, c, d] = &self.e;
        &(a * d) - &(b * c)
    }

    /// Matrix applied to a column vector.
    pub fn apply(&self, v: &[LaurentPoly; 2]) -> [LaurentPoly; 2] {
        let [a, b, c, d] = &self.e;
        [&(a * &v[0]) + &(b * &v[1]), &(c * &v[0]) + &(d * &v[1])]
    }

    /// Image in `PSL(2, Z)`: evaluate at `t = -1`, then fix the sign so the
    /// first nonzero entry is positive.
    pub fn modular_projection(&self) -> [BigInt; 4] {
        let mut m = self.e.clone().map(|x| x.eval_unit(-1));
        if m.iter()
            .find(|x| !x.is_zero())
            .is_some_and(|x| x.is_negative())
        {
            for x in &mut m {
                *x = -&*x;
            }
        }
        m
    }
}

fn letter_matrix(l: Letter) -> BurauMatrix {
    let z = LaurentPoly::zero;
    let one = LaurentPoly::one;
    let m = LaurentPoly::monomial;
    match l {
        Letter::S1 => BurauMatrix::new([m(-1, 1), one(), z(), one()]),
        Letter::S2 => BurauMatrix::new([one(), z(), m(1, 1), m(-1, 1)]),
        Letter::S1Inv => BurauMatrix::new([m(-1, -1), m(1, -1), z(), one()]),
        Letter::S2Inv => BurauMatrix::new([one(), z(), one(), m(-1, -1)]),
        Letter::T => BurauMatrix::scalar(m(1, 1)),
        Letter::TInv => BurauMatrix::scalar(m(1, -1)),
    }
}

pub fn to_burau(w: &BraidWord) -> BurauMatrix {
    w.letters.iter().fold(BurauMatrix::identity(), |acc, &l| {
        acc.mul(&letter_matrix(l))
    })
}

/// Evaluates a Laurent polynomial at `xi`.
pub fn specialize_poly(f: &LaurentPoly, spec: &FieldSpec) -> FieldElem {
    let body = spec.elem(FpPoly::from_int_poly(f.body(), spec.p()));
    let shift = spec.xi().pow(f.shift()).expect("xi is a unit");
    body.mul(&shift)
}

pub fn specialize(m: &BurauMatrix, spec: &FieldSpec) -> SpecMatrix {
    SpecMatrix::new(m.e.clone().map(|x| specialize_poly(&x, spec)))
}

/// A 2x2 matrix over a finite field, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpecMatrix {
    e: [FieldElem; 4],
}

impl SpecMatrix {
    pub fn new(e: [FieldElem; 4]) -> Self {
        SpecMatrix { e }
    }

    pub fn identity(spec: &FieldSpec) -> Self {
        SpecMatrix::new([spec.one(), spec.zero(), spec.zero(), spec.one()])
    }

    pub fn entries(&self) -> &[FieldElem; 4] {
        &self.e
    }

    pub fn entry(&self, row: usize, col: usize) -> &FieldElem {
        &self.e[2 * row + col]
    }

    pub fn spec(&self) -> &FieldSpec {
        self.e[0].spec()
    }

    pub fn mul(&self, o: &SpecMatrix) -> SpecMatrix {
        let [a, b, c, d] = &self.e;
        let [x, y, z, w] = &o.e;
        SpecMatrix::new([
            a.mul(x).add(&b.mul(z)),
            a.mul(y).add(&b.mul(w)),
            c.mul(x).add(&d.mul(z)),
            c.mul(y).add(&d.mul(w)),
        ])
    }

    pub fn det(&self) -> FieldElem {
        let [a, b, c, d] = &self.e;
        a.mul(d).sub(&b.mul(c))
    }

    pub fn inverse(&self) -> Result<SpecMatrix, AlgError> {
        let inv = self.det().inv()?;
        let [a, b, c, d] = &self.e;
        Ok(SpecMatrix::new([
            d.mul(&inv),
            b.neg().mul(&inv),
            c.neg().mul(&inv),
            a.mul(&inv),
        ]))
    }

    pub fn is_identity(&self) -> bool {
        *self == SpecMatrix::identity(self.spec())
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, w: &[FieldElem; 2]) -> [FieldElem; 2] {
        let [a, b, c, d] = &self.e;
        [w[0].mul(a).add(&w[1].mul(c)), w[0].mul(b).add(&w[1].mul(d))]
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[FieldElem; 2]) -> [FieldElem; 2] {
        let [a, b, c, d] = &self.e;
        [
            a.mul(&v[0]).add(&b.mul(&v[1])),
            c.mul(&v[0]).add(&d.mul(&v[1])),
        ]
    }

    /// `self^n` by repeated squaring; negative `n` needs an invertible matrix.
    pub fn power(&self, n: i64) -> Result<SpecMatrix, AlgError> {
        let mut base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = SpecMatrix::identity(self.spec());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Least `n >= 1` with `self^n = id`, searched up to `limit`.
    pub fn order(&self, limit: u64) -> Option<u64> {
        let id = SpecMatrix::identity(self.spec());
        let mut x = self.clone();
        for n in 1..=limit {
            if x == id {
                return Some(n);
            }
            x = x.mul(self);
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn generator_images() {
        let s1 = to_burau(&w("s1"));
        assert_eq!(s1, BurauMatrix::new([lp("-t"), lp("1"), lp("0"), lp("1")]));
        assert_eq!(to_burau(&w("s1 s1^-1")), BurauMatrix::identity());
        assert_eq!(to_burau(&w("s2^-1 s2")), BurauMatrix::identity());
        assert_eq!(to_burau(&w("T")), BurauMatrix::scalar(lp("t")));
    }

    #[test]
    fn braid_and_central_relations() {
        assert_eq!(to_burau(&w("s1 s2 s1")), to_burau(&w("s2 s1 s2")));
        let delta = BraidWord::delta();
        assert_eq!(to_burau(&delta.pow(2)), BurauMatrix::scalar(lp("t^3")));
        assert_eq!(to_burau(&delta.pow(2)), to_burau(&w("T T T")));
    }

    #[test]
    fn degrees() {
        assert_eq!(w("s1 s2").bdeg(), 2);
        assert_eq!(w("T").bdeg(), 2);
        assert_eq!(w("s1^-1").bdeg(), -1);
        assert_eq!(BraidWord::delta().pow(2).bdeg(), 6);
    }

    #[test]
    fn text_round_trip() {
        for s in ["id", "s1 s2^-1 T", "T^-1 s2 s2 s1^-1"] {
            assert_eq!(w(s).to_string(), s);
        }
        assert_eq!(w("s1^3 T^-2"), w("s1 s1 s1 T^-1 T^-1"));
        assert!("s3".parse::<BraidWord>().is_err());
        assert!("s1^x".parse::<BraidWord>().is_err());
    }

    #[test]
    fn sigma1_specialized_order() {
        let k = FieldSpec::parse(2, "t^3+t+1").unwrap();
        let s1 = specialize(&to_burau(&w("s1")), &k);
        assert!(s1.power(7).unwrap().is_identity());
        assert!(!s1.power(3).unwrap().is_identity());
        assert!(s1.power(0).unwrap().is_identity());
        assert_eq!(s1.order(100), Some(7));
        assert_eq!(s1.power(-1).unwrap().mul(&s1), SpecMatrix::identity(&k));
    }

    #[test]
    fn specialized_determinant_is_power_of_xi() {
        let k = FieldSpec::parse(5, "t^2+2").unwrap();
        let m = specialize(&to_burau(&w("s2 s1^-1")), &k);
        assert!(m.det().is_one());
        let t = specialize(&to_burau(&w("T")), &k);
        assert_eq!(t, SpecMatrix::new([k.xi(), k.zero(), k.zero(), k.xi()]));
    }

    #[test]
    fn modular_projection_of_generators() {
        let m = to_burau(&w("s1")).modular_projection();
        assert_eq!(m, [1, 1, 0, 1].map(BigInt::from));
        let i = to_burau(&w("T")).modular_projection();
        assert_eq!(i, [1, 0, 0, 1].map(BigInt::from));
        // Delta^2 = t^3 id lands on -id, which is trivial in PSL(2, Z)
        assert_eq!(to_burau(&BraidWord::delta().pow(2)).modular_projection(), i);
    }

    fn arb_word(max: usize) -> impl Strategy<Value = BraidWord> {
        proptest::collection::vec(proptest::sample::select(Letter::ALL.to_vec()), 0..=max)
            .prop_map(BraidWord::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn determinant_is_signed_power_of_t(word in arb_word(20)) {
            // det s1 = det s2 = -t, so det = (-t)^bdeg; T contributes t^2
            let k = word.bdeg();
            let expected = LaurentPoly::monomial(if k % 2 == 0 { 1 } else { -1 }, k);
            prop_assert_eq!(to_burau(&word).det(), expected);
        }
    }

    proptest! {
        #[test]
        fn specialization_is_multiplicative(a in arb_word(12), b in arb_word(12)) {
            for (p, m) in [(2u64, "t^3+t+1"), (5, "t^2+2"), (19, "t+4")] {
                let k = FieldSpec::parse(p, m).unwrap();
                let lhs = specialize(&to_burau(&a.concat(&b)), &k);
                let rhs = specialize(&to_burau(&a), &k).mul(&specialize(&to_burau(&b), &k));
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
