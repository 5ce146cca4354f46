//! Root bookkeeping `(p, m, N, M)`, the special types I-IV with their
//! vectors `v_T = a_T(xi) e1 + e2`, and type specifications of skeletons.

use std::fmt;
use std::str::FromStr;

use crate::burau::{specialize_poly, Ambient};
use crate::exactalg::{AlgError, FieldElem, FieldSpec, LaurentPoly};
use crate::skeleton::Skeleton;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TypeError {
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error("threshold k_N needs N >= 7, got {0}")]
    SmallN(u64),
    #[error("type {tag} is not admissible for p = {p}, M = {m}")]
    Inadmissible { tag: TypeTag, p: u64, m: u64 },
    #[error("unknown type tag {0:?}")]
    UnknownTag(String),
    #[error("depth {0} is odd")]
    OddDepth(u64),
    #[error("type assignment does not match the skeleton ({0})")]
    ShapeMismatch(&'static str),
}

/// `eps_p(N)`: the order of `xi` given the order `N` of `-xi`.
pub fn epsilon_p(n: u64, p: u64) -> u64 {
    if p == 2 {
        n
    } else if n % 2 == 1 {
        2 * n
    } else if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

/// `k_N = ceil(5 / (N - 6))`.
pub fn k_threshold(n: u64) -> Result<u64, TypeError> {
    if n < 7 {
        return Err(TypeError::SmallN(n));
    }
    Ok(5u64.div_ceil(n - 6))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeTag {
    I,
    II,
    IIIPlus,
    IIIMinus,
    /// The `p = 3` variant of type III.
    III3,
    IV,
}

impl TypeTag {
    pub const ALL: [TypeTag; 6] = [
        TypeTag::I,
        TypeTag::II,
        TypeTag::IIIPlus,
        TypeTag::IIIMinus,
        TypeTag::III3,
        TypeTag::IV,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TypeTag::I => "I",
            TypeTag::II => "II",
            TypeTag::IIIPlus => "III+",
            TypeTag::IIIMinus => "III-",
            TypeTag::III3 => "III3",
            TypeTag::IV => "IV",
        }
    }

    /// Exponent `s` in `a_III = -t^s`.
    pub fn s(self, m: u64) -> Option<i64> {
        let third = m as i64 / 3;
        match self {
            TypeTag::IIIPlus => Some(third - 1),
            TypeTag::IIIMinus => Some(-third - 1),
            TypeTag::III3 => Some(-1),
            _ => None,
        }
    }

    /// The Laurent polynomial `a_T(t)` for `M = ord xi`.
    pub fn a_poly(self, m: u64) -> LaurentPoly {
        match self {
            TypeTag::I => LaurentPoly::zero(),
            TypeTag::II => "1+t^-1".parse().expect("literal"),
            TypeTag::IIIPlus | TypeTag::IIIMinus | TypeTag::III3 => {
                LaurentPoly::monomial(-1, self.s(m).expect("type III"))
            }
            TypeTag::IV => LaurentPoly::monomial(1, (m as i64 - 1) / 2),
        }
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TypeTag {
    type Err = TypeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TypeTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| TypeError::UnknownTag(s.to_string()))
    }
}

/// Types that can occur for `ord xi = m`, depending only on whether the
/// characteristic is 3.
pub fn admissible_tags(p_is_three: bool, m: u64) -> Vec<TypeTag> {
    let mut out = vec![TypeTag::I, TypeTag::II];
    if p_is_three {
        if m % 3 != 0 {
            out.push(TypeTag::III3);
        }
    } else if m % 3 == 0 {
        out.push(TypeTag::IIIPlus);
        out.push(TypeTag::IIIMinus);
    }
    if m % 2 == 1 {
        out.push(TypeTag::IV);
    }
    out
}

/// A root `xi` of an irreducible `m_xi` over `F_p`, with `N = ord(-xi)` and
/// `M = ord(xi)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootSpec {
    field: FieldSpec,
    n: u64,
    m: u64,
}

impl RootSpec {
    pub fn new(field: FieldSpec) -> Result<Self, TypeError> {
        let xi = field.xi();
        let m = xi.element_order()?;
        let n = xi.neg().element_order()?;
        debug_assert_eq!(m, epsilon_p(n, field.p()));
        Ok(RootSpec { field, n, m })
    }

    pub fn parse(p: u64, min_poly: &str) -> Result<Self, TypeError> {
        RootSpec::new(FieldSpec::parse(p, min_poly)?)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn min_poly(&self) -> String {
        self.field.modulus().to_string()
    }

    /// `ord(-xi)`.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `ord(xi)`.
    pub fn m(&self) -> u64 {
        self.m
    }
}

/// Admissible types for a root. Type II on a region of odd width needs
/// `p = 2` or `M` even; that restriction is reported, not applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Admissible {
    pub tags: Vec<TypeTag>,
    pub ii_on_odd_width: bool,
}

pub fn admissible_types(root: &RootSpec) -> Admissible {
    Admissible {
        tags: admissible_tags(root.p() == 3, root.m()),
        ii_on_odd_width: root.p() == 2 || root.m() % 2 == 0,
    }
}

/// `v_T = (a, 1)` and its annihilator `v_T^perp = [-1, a]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeVector {
    pub tag: TypeTag,
    pub a: FieldElem,
    pub v: [FieldElem; 2],
    pub v_perp: [FieldElem; 2],
}

pub fn type_vector(tag: TypeTag, root: &RootSpec) -> Result<TypeVector, TypeError> {
    if !admissible_types(root).tags.contains(&tag) {
        return Err(TypeError::Inadmissible {
            tag,
            p: root.p(),
            m: root.m(),
        });
    }
    let k = root.field();
    let a = specialize_poly(&tag.a_poly(root.m()), k);
    Ok(TypeVector {
        tag,
        v: [a.clone(), k.one()],
        v_perp: [k.constant(-1), a.clone()],
        a,
    })
}

/// Values of a type specification, listed in the order of
/// [`Skeleton::region_cycles`], [`Skeleton::monovalent_black`] and
/// [`Skeleton::monovalent_white`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeAssignment {
    pub regions: Vec<i64>,
    pub black: Vec<i64>,
    pub white: Vec<i64>,
}

/// Checks the five conditions on `(depth, type)` with values in `Z/depth`
/// (`Z` when the depth is 0) and `d = 6` for `B_3`, `d = 2` for `Bu_3`.
pub fn check_type_specification(
    sk: &Skeleton,
    depth: u64,
    ty: &TypeAssignment,
    ambient: Ambient,
) -> Result<bool, TypeError> {
    if depth % 2 == 1 {
        return Err(TypeError::OddDepth(depth));
    }
    let regions = sk.region_cycles();
    if regions.len() != ty.regions.len() {
        return Err(TypeError::ShapeMismatch("regions"));
    }
    if sk.monovalent_black().len() != ty.black.len() {
        return Err(TypeError::ShapeMismatch("black vertices"));
    }
    if sk.monovalent_white().len() != ty.white.len() {
        return Err(TypeError::ShapeMismatch("white vertices"));
    }
    let d: i64 = match ambient {
        Ambient::B3 => 6,
        Ambient::Bu3 => 2,
    };
    let depth = depth as i64;
    let vanishes = |x: i64| {
        if depth == 0 {
            x == 0
        } else {
            x.rem_euclid(depth) == 0
        }
    };
    let congruent = |x: i64, y: i64| (x - y).rem_euclid(d) == 0;

    let ok = depth % d == 0
        && regions
            .iter()
            .zip(&ty.regions)
            .all(|(cycle, &t)| congruent(t, cycle.len() as i64))
        && ty.black.iter().all(|&t| congruent(t, 2) && vanishes(3 * t))
        && ty.white.iter().all(|&t| congruent(t, 3) && vanishes(2 * t))
        && vanishes(ty.regions.iter().chain(&ty.black).chain(&ty.white).sum());
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epsilon_cases() {
        assert_eq!(epsilon_p(7, 2), 7);
        assert_eq!(epsilon_p(7, 5), 14);
        assert_eq!(epsilon_p(10, 11), 5);
        assert_eq!(epsilon_p(8, 3), 8);
        for n in 1..=100 {
            assert_eq!(epsilon_p(epsilon_p(n, 2), 2), n);
            assert_eq!(epsilon_p(epsilon_p(n, 7), 7), n);
        }
    }

    #[test]
    fn thresholds() {
        assert_eq!(k_threshold(7).unwrap(), 5);
        assert_eq!(k_threshold(8).unwrap(), 3);
        assert_eq!(k_threshold(9).unwrap(), 2);
        assert_eq!(k_threshold(10).unwrap(), 2);
        assert!((11..=26).all(|n| k_threshold(n).unwrap() == 1));
        assert!(k_threshold(6).is_err());
    }

    #[test]
    fn admissible_examples() {
        let r = RootSpec::parse(2, "t^3+t+1").unwrap();
        assert_eq!((r.n(), r.m()), (7, 7));
        assert_eq!(
            admissible_types(&r).tags,
            vec![TypeTag::I, TypeTag::II, TypeTag::IV]
        );
        let r = RootSpec::parse(19, "t+4").unwrap();
        assert_eq!((r.n(), r.m()), (9, 18));
        assert_eq!(
            admissible_types(&r).tags,
            vec![TypeTag::I, TypeTag::II, TypeTag::IIIPlus, TypeTag::IIIMinus]
        );
        let r = RootSpec::parse(3, "t^2+2t+2").unwrap();
        assert_eq!((r.n(), r.m()), (8, 8));
        assert_eq!(
            admissible_types(&r).tags,
            vec![TypeTag::I, TypeTag::II, TypeTag::III3]
        );
    }

    #[test]
    fn type_vectors_in_f8() {
        let r = RootSpec::parse(2, "t^3+t+1").unwrap();
        let k = r.field();
        let xi = k.xi();
        let v1 = type_vector(TypeTag::I, &r).unwrap();
        assert!(v1.a.is_zero());
        let v2 = type_vector(TypeTag::II, &r).unwrap();
        assert_eq!(v2.a, xi.add(&k.one()).div(&xi).unwrap());
        let v4 = type_vector(TypeTag::IV, &r).unwrap();
        assert_eq!(v4.a, xi.pow(3).unwrap());
        assert!(type_vector(TypeTag::IIIPlus, &r).is_err());
    }

    #[test]
    fn annihilator_kills_vector() {
        for (p, m) in [
            (2, "t^3+t+1"),
            (19, "t+4"),
            (3, "t^2+2t+2"),
            (11, "t+2"),
            (43, "t+4"),
        ] {
            let r = RootSpec::parse(p, m).unwrap();
            for tag in admissible_types(&r).tags {
                let tv = type_vector(tag, &r).unwrap();
                let dot = tv.v_perp[0].mul(&tv.v[0]).add(&tv.v_perp[1].mul(&tv.v[1]));
                assert!(dot.is_zero());
                if let Some(s) = tag.s(r.m()) {
                    if tag != TypeTag::III3 {
                        assert!(r.field().xi().pow(3 * (s + 1)).unwrap().is_one());
                    }
                }
            }
        }
    }

    #[test]
    fn tag_names_round_trip() {
        for t in TypeTag::ALL {
            assert_eq!(t.name().parse::<TypeTag>().unwrap(), t);
        }
        assert!("V".parse::<TypeTag>().is_err());
    }

    #[test]
    fn type_specification_of_single_edge() {
        let sk = Skeleton::gamma();
        let ty = |r| TypeAssignment {
            regions: vec![r],
            black: vec![2],
            white: vec![3],
        };
        // over Z the black value must satisfy 3 * 2 = 0, which fails
        assert!(!check_type_specification(&sk, 0, &ty(-5), Ambient::Bu3).unwrap());
        assert!(check_type_specification(&sk, 6, &ty(-5), Ambient::Bu3).unwrap());
        assert!(check_type_specification(&sk, 2, &ty(-5), Ambient::Bu3).unwrap());
        // width congruence holds but the sum is 2 in Z/6
        assert!(!check_type_specification(&sk, 6, &ty(-3), Ambient::Bu3).unwrap());
        assert!(check_type_specification(&sk, 6, &ty(1), Ambient::B3).unwrap());
        assert!(!check_type_specification(&sk, 6, &ty(3), Ambient::B3).unwrap());
        assert!(check_type_specification(&sk, 3, &ty(-5), Ambient::Bu3).is_err());
        let short = TypeAssignment {
            regions: vec![],
            black: vec![2],
            white: vec![3],
        };
        assert!(check_type_specification(&sk, 6, &short, Ambient::Bu3).is_err());
    }
}
