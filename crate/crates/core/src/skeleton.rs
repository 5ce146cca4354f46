//! Skeletons of subgroups of the modular group as pairs of permutations on
//! edges, and coset enumeration of universal subgroups over a finite field.
//!
//! Edges carry three right actions: black `X = s2 s1`, white `Y = s2 s1^2`
//! and region `R = s1`. Since `s1 = (s2 s1)^-1 (s2 s1^2)`, the region
//! permutation is `white . black^-1` (black inverse applied first).

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::burau::{specialize, to_burau, Ambient, BraidWord};
use crate::exactalg::{AlgError, FieldElem, LogField, LOG_ZERO};
use crate::typesys::{type_vector, RootSpec, TypeError, TypeTag};

pub const DEFAULT_STATE_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SkeletonError {
    #[error("not a permutation")]
    NotAPermutation,
    #[error("permutations act on different edge sets")]
    SizeMismatch,
    #[error("black permutation is not of order dividing 3")]
    BlackOrder,
    #[error("white permutation is not of order dividing 2")]
    WhiteOrder,
    #[error("region permutation differs from white . black^-1")]
    Composition,
    #[error("black and white permutations do not act transitively")]
    Disconnected,
    #[error("empty edge set")]
    Empty,
    #[error("coset enumeration passed the cap of {0} edges")]
    CapExceeded(usize),
    #[error("cannot parse signature {0:?}")]
    SignatureParse(String),
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error(transparent)]
    Alg(#[from] AlgError),
}

/// A permutation of `0..n`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Perm(Vec<u32>);

impl TryFrom<Vec<u32>> for Perm {
    type Error = SkeletonError;

    fn try_from(images: Vec<u32>) -> Result<Self, Self::Error> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen
                .get_mut(i as usize)
                .ok_or(SkeletonError::NotAPermutation)?;
            if std::mem::replace(slot, true) {
                return Err(SkeletonError::NotAPermutation);
            }
        }
        Ok(Perm(images))
    }
}

impl From<Perm> for Vec<u32> {
    fn from(p: Perm) -> Vec<u32> {
        p.0
    }
}

impl Perm {
    pub fn new(images: Vec<u32>) -> Result<Self, SkeletonError> {
        Perm::try_from(images)
    }

    /// Builds from cycles on `0..n`; unlisted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, SkeletonError> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        for c in cycles {
            for (k, &i) in c.iter().enumerate() {
                let j = c[(k + 1) % c.len()];
                if i >= n || j >= n {
                    return Err(SkeletonError::NotAPermutation);
                }
                images[i] = j as u32;
            }
        }
        Perm::new(images)
    }

    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm(inv)
    }

    /// `i -> self(other(i))`.
    pub fn after(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&j| self.0[j as usize]).collect())
    }

    pub fn pow(&self, k: u32) -> Perm {
        (0..k).fold(Perm::identity(self.len()), |acc, _| self.after(&acc))
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// Cycles ordered by their smallest point, each starting there.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.apply(start);
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.apply(i);
            }
            out.push(cycle);
        }
        out
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.apply(i) == i).collect()
    }

    /// Orbit label of every point.
    pub fn orbit_labels(&self) -> Vec<usize> {
        let mut label = vec![0; self.len()];
        for (k, c) in self.cycles().iter().enumerate() {
            for &i in c {
                label[i] = k;
            }
        }
        label
    }
}

/// Edge set with black (order 3), white (order 2) and region permutations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skeleton {
    black: Perm,
    white: Perm,
    region: Perm,
    distinguished: usize,
}

impl Skeleton {
    pub fn new(black: Perm, white: Perm) -> Result<Self, SkeletonError> {
        let region = white.after(&black.inverse());
        Skeleton::with_regions(black, white, region)
    }

    /// Accepts an explicit region permutation and checks it against the
    /// composition convention.
    pub fn with_regions(black: Perm, white: Perm, region: Perm) -> Result<Self, SkeletonError> {
        let n = black.len();
        if n == 0 {
            return Err(SkeletonError::Empty);
        }
        if white.len() != n || region.len() != n {
            return Err(SkeletonError::SizeMismatch);
        }
        if !black.pow(3).is_identity() {
            return Err(SkeletonError::BlackOrder);
        }
        if !white.pow(2).is_identity() {
            return Err(SkeletonError::WhiteOrder);
        }
        if region != white.after(&black.inverse()) {
            return Err(SkeletonError::Composition);
        }
        let sk = Skeleton {
            black,
            white,
            region,
            distinguished: 0,
        };
        if !sk.is_connected() {
            return Err(SkeletonError::Disconnected);
        }
        Ok(sk)
    }

    /// The one-edge skeleton of the modular group itself.
    pub fn gamma() -> Self {
        Skeleton::new(Perm::identity(1), Perm::identity(1)).expect("trivial skeleton")
    }

    pub fn edge_count(&self) -> usize {
        self.black.len()
    }

    pub fn black(&self) -> &Perm {
        &self.black
    }

    pub fn white(&self) -> &Perm {
        &self.white
    }

    pub fn region(&self) -> &Perm {
        &self.region
    }

    pub fn distinguished(&self) -> usize {
        self.distinguished
    }

    pub fn region_cycles(&self) -> Vec<Vec<usize>> {
        self.region.cycles()
    }

    pub fn black_cycles(&self) -> Vec<Vec<usize>> {
        self.black.cycles()
    }

    pub fn white_cycles(&self) -> Vec<Vec<usize>> {
        self.white.cycles()
    }

    /// Edges at monovalent black vertices.
    pub fn monovalent_black(&self) -> Vec<usize> {
        self.black.fixed_points()
    }

    /// Edges at monovalent white vertices.
    pub fn monovalent_white(&self) -> Vec<usize> {
        self.white.fixed_points()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.edge_count();
        let mut seen = vec![false; n];
        let mut stack = vec![self.distinguished];
        seen[self.distinguished] = true;
        let mut count = 1;
        while let Some(i) = stack.pop() {
            for j in [self.black.apply(i), self.white.apply(i)] {
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        count == n
    }

    pub fn signature(&self) -> Signature {
        let mut widths = BTreeMap::new();
        for c in self.region_cycles() {
            *widths.entry(c.len() as u64).or_insert(0) += 1;
        }
        Signature {
            edges: self.edge_count() as u64,
            white_mono: self.monovalent_white().len() as u64,
            black_mono: self.monovalent_black().len() as u64,
            widths,
        }
    }

    /// Genus of the closed surface obtained by patching every region with a
    /// disk. Panics if Euler's formula gives an odd or negative value,
    /// which would mean the permutations are inconsistent.
    pub fn genus(&self) -> u64 {
        let v = (self.black_cycles().len() + self.white_cycles().len()) as i64;
        let e = self.edge_count() as i64;
        let f = self.region_cycles().len() as i64;
        let twice = 2 - v + e - f;
        assert!(
            twice >= 0 && twice % 2 == 0,
            "inconsistent skeleton: V = {v}, E = {e}, F = {f}"
        );
        (twice / 2) as u64
    }

    /// Isomorphism of skeletons as sets with two permutations (ignoring the
    /// distinguished edge).
    pub fn is_isomorphic(&self, other: &Skeleton) -> bool {
        if self.signature() != other.signature() {
            return false;
        }
        let n = self.edge_count();
        (0..n).any(|target| self.matches_from(other, target))
    }

    fn matches_from(&self, other: &Skeleton, target: usize) -> bool {
        let n = self.edge_count();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[self.distinguished] = target;
        used[target] = true;
        let mut queue = VecDeque::from([self.distinguished]);
        while let Some(i) = queue.pop_front() {
            let j = map[i];
            for (a, b) in [(&self.black, &other.black), (&self.white, &other.white)] {
                let (ni, nj) = (a.apply(i), b.apply(j));
                if map[ni] == usize::MAX {
                    if used[nj] {
                        return false;
                    }
                    map[ni] = nj;
                    used[nj] = true;
                    queue.push_back(ni);
                } else if map[ni] != nj {
                    return false;
                }
            }
        }
        true
    }

    /// JSON view with cycle lists, signature and genus.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "edges": self.edge_count(),
            "black": self.black_cycles(),
            "white": self.white_cycles(),
            "regions": self.region_cycles(),
            "signature": self.signature().to_string(),
            "genus": self.genus(),
        })
    }
}

/// `(e; v_white, v_black; widths)` with widths as a multiset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub edges: u64,
    pub white_mono: u64,
    pub black_mono: u64,
    /// width -> number of regions of that width
    pub widths: BTreeMap<u64, u64>,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .widths
            .iter()
            .map(|(w, n)| format!("{w}^{n}"))
            .collect();
        write!(
            f,
            "({};{},{};{})",
            self.edges,
            self.white_mono,
            self.black_mono,
            parts.join(" ")
        )
    }
}

impl FromStr for Signature {
    type Err = SkeletonError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SkeletonError::SignatureParse(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(bad)?;
        let fields: Vec<&str> = inner.split(';').collect();
        let [e, mono, parts] = fields[..] else {
            return Err(bad());
        };
        let (w, b) = mono.split_once(',').ok_or_else(bad)?;
        let num = |x: &str| x.trim().parse::<u64>().map_err(|_| bad());
        let mut widths = BTreeMap::new();
        for part in parts.split_whitespace() {
            let (width, count) = part.split_once('^').ok_or_else(bad)?;
            *widths.entry(num(width)?).or_insert(0) += num(count)?;
        }
        Ok(Signature {
            edges: num(e)?,
            white_mono: num(w)?,
            black_mono: num(b)?,
            widths,
        })
    }
}

impl Signature {
    pub fn width_sum(&self) -> u64 {
        self.widths.iter().map(|(w, n)| w * n).sum()
    }
}

/// `3 n_white + 4 n_black + sum (6 - i) n_i`; equals 12 exactly for genus
/// zero.
pub fn euler_lhs(sig: &Signature) -> i64 {
    3 * sig.white_mono as i64
        + 4 * sig.black_mono as i64
        + sig
            .widths
            .iter()
            .map(|(&w, &n)| (6 - w as i64) * n as i64)
            .sum::<i64>()
}

/// Every region width divides `n`.
pub fn verify_region_widths(sk: &Skeleton, n: u64) -> bool {
    sk.region_cycles().iter().all(|c| n % c.len() as u64 == 0)
}

/// Combinatorial restrictions on a skeleton whose module does not vanish,
/// where a region is essential when `n` does not divide its width:
/// at most one essential corner at each trivalent black vertex, trivial
/// regions around monovalent vertices, and no edge joining two monovalent
/// vertices.
pub fn verify_special_fragments(sk: &Skeleton, n: u64) -> bool {
    let label = sk.region.orbit_labels();
    let cycles = sk.region_cycles();
    let essential = |e: usize| cycles[label[e]].len() as u64 % n != 0;
    let corners_ok = sk
        .black_cycles()
        .iter()
        .filter(|c| c.len() == 3)
        .all(|c| c.iter().filter(|&&e| essential(e)).count() <= 1);
    let black = sk.monovalent_black();
    let white = sk.monovalent_white();
    let mono_ok = black.iter().chain(&white).all(|&e| !essential(e));
    let apart = black.iter().all(|e| !white.contains(e));
    corners_ok && mono_ok && apart
}

/// The universal subgroup of `Bu_3` or `B_3` cut out by `v_T^perp m = v_T^perp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniversalGroupSpec {
    pub root: RootSpec,
    pub tag: TypeTag,
    pub ambient: Ambient,
}

fn word(s: &str) -> BraidWord {
    s.parse().expect("literal braid word")
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::Integer::gcd(&a, &b)
}

/// Covector times matrix over a [`LogField`], everything in logs.
struct LogMatrix([u32; 4]);

impl LogMatrix {
    fn new(lf: &LogField, root: &RootSpec, w: &str) -> Self {
        let m = specialize(&to_burau(&word(w)), root.field());
        LogMatrix(m.entries().clone().map(|x| lf.from_elem(&x)))
    }

    #[inline]
    fn left_apply(&self, lf: &LogField, w: (u32, u32)) -> (u32, u32) {
        let [a, b, c, d] = self.0;
        (
            lf.add(lf.mul(w.0, a), lf.mul(w.1, c)),
            lf.add(lf.mul(w.0, b), lf.mul(w.1, d)),
        )
    }
}

/// Size of the projective orbit of `[v_T^perp]` under the braid group,
/// or `None` once it exceeds `limit`.
pub fn projective_orbit_size(
    root: &RootSpec,
    tag: TypeTag,
    limit: usize,
) -> Result<Option<usize>, SkeletonError> {
    let tv = type_vector(tag, root)?;
    let gens = ["s1", "s2"].map(|w| specialize(&to_burau(&word(w)), root.field()));
    let normalize = |w: [FieldElem; 2]| -> [FieldElem; 2] {
        let lead = if w[0].is_zero() { &w[1] } else { &w[0] };
        let inv = lead.inv().expect("covectors are nonzero");
        [w[0].mul(&inv), w[1].mul(&inv)]
    };
    let seed = normalize(tv.v_perp);
    let mut seen = std::collections::HashSet::from([seed.clone()]);
    let mut queue = VecDeque::from([seed]);
    while let Some(w) = queue.pop_front() {
        for g in &gens {
            let next = normalize(g.left_apply(&w));
            if seen.insert(next.clone()) {
                if seen.len() > limit {
                    return Ok(None);
                }
                queue.push_back(next);
            }
        }
    }
    Ok(Some(seen.len()))
}

/// Largest projective orbit compatible with a genus-zero skeleton when
/// `ord(-xi) = n >= 7`: genus zero forces `|orbit| (n - 6) < 26 n`.
pub fn genus_zero_orbit_bound(n: u64) -> usize {
    assert!(n >= 7, "bound needs n >= 7");
    ((26 * n - 1) / (n - 6)) as usize
}

/// Cheap necessary condition for a genus-zero universal skeleton (either
/// ambient), from the projective orbit size alone.
pub fn may_have_genus_zero(root: &RootSpec, tag: TypeTag) -> Result<bool, SkeletonError> {
    Ok(projective_orbit_size(root, tag, genus_zero_orbit_bound(root.n()))?.is_some())
}

/// Breadth-first coset enumeration of the universal subgroup. Cosets are
/// covectors `v_T^perp m` modulo the scalars `xi^s` (all `s` for `Bu_3`,
/// `s = 0 mod 3` for `B_3`), seeded at `v_T^perp`.
pub fn enumerate_universal(
    spec: &UniversalGroupSpec,
    cap: usize,
) -> Result<Skeleton, SkeletonError> {
    let root = &spec.root;
    let tv = type_vector(spec.tag, root)?;
    let lf = LogField::new(root.field())?;
    let x = LogMatrix::new(&lf, root, "s2 s1");
    let y = LogMatrix::new(&lf, root, "s2 s1 s1");
    let r = LogMatrix::new(&lf, root, "s1");

    let m = root.m();
    let scalars = match spec.ambient {
        Ambient::Bu3 => m,
        Ambient::B3 => m / gcd(3, m),
    };
    // the scalar subgroup is the set of multiples of `step` in log form
    let order = lf.order();
    let step = order / scalars as u32;
    let canonical = |w: (u32, u32)| -> (u32, u32) {
        let lead = if w.0 != LOG_ZERO { w.0 } else { w.1 };
        let shift = lead - lead % step;
        let down = |a: u32| {
            if a == LOG_ZERO {
                a
            } else {
                (a + order - shift) % order
            }
        };
        (down(w.0), down(w.1))
    };

    let seed = canonical((lf.from_elem(&tv.v_perp[0]), lf.from_elem(&tv.v_perp[1])));
    let mut states = vec![seed];
    let mut index: HashMap<(u32, u32), u32> = HashMap::from([(seed, 0)]);
    let mut black = Vec::new();
    let mut white = Vec::new();
    let mut i = 0;
    while i < states.len() {
        let w = states[i];
        for (mat, out) in [(&x, &mut black), (&y, &mut white)] {
            let next = canonical(mat.left_apply(&lf, w));
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    if states.len() >= cap {
                        return Err(SkeletonError::CapExceeded(cap));
                    }
                    let id = states.len() as u32;
                    states.push(next);
                    index.insert(next, id);
                    id
                }
            };
            out.push(id);
        }
        i += 1;
    }
    let region = states
        .iter()
        .map(|&w| index[&canonical(r.left_apply(&lf, w))])
        .collect();
    Skeleton::with_regions(Perm::new(black)?, Perm::new(white)?, Perm::new(region)?)
}
