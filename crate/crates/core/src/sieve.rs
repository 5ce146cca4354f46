//! The resultant sieve: determinants `D = det[s1^l b_i v_T' | b_j v_T'']`
//! over `Z[t, t^-1]`, their resultants with `phi_N(-t)`, informative sets of
//! braids, and the exceptional triples `(p, m_xi, T)` they leave behind.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::burau::Ambient;
use crate::burau::{to_burau, BraidWord, BurauMatrix, Letter};
use crate::exactalg::{
    integer::factorize, neg_cyclotomic, resultant, AlgError, FieldSpec, FpPoly, IntPoly,
    LaurentPoly,
};
use crate::skeleton::{
    enumerate_universal, may_have_genus_zero, SkeletonError, UniversalGroupSpec, DEFAULT_STATE_CAP,
};
use crate::typesys::{admissible_tags, epsilon_p, k_threshold, RootSpec, TypeError, TypeTag};

pub const SWEEP_MIN: u64 = 7;
pub const SWEEP_MAX: u64 = 26;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SieveError {
    #[error("index sequence ({0}) has an identically zero determinant")]
    Excluded(IndexSeq),
    #[error("degenerate determinant for ({0})")]
    ZeroDeterminant(IndexSeq),
    #[error("braids {0} and {1} have the same modular projection")]
    SameProjection(BraidWord, BraidWord),
    #[error("set {set} is not informative for N = {n}")]
    NotInformative { n: u64, set: String },
    #[error("no informative set found for N = {0}")]
    NoInformativeSet(u64),
    #[error("N = {0} outside the sweep range 7..=26")]
    OutOfRange(u64),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error(transparent)]
    Skeleton(#[from] SkeletonError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CharClass {
    #[serde(rename = "p=2")]
    Two,
    #[serde(rename = "p odd, p!=3")]
    Odd,
    #[serde(rename = "p=3")]
    Three,
}

impl CharClass {
    pub fn contains(self, p: u64) -> bool {
        match self {
            CharClass::Two => p == 2,
            CharClass::Three => p == 3,
            CharClass::Odd => p % 2 == 1 && p != 3,
        }
    }

    /// A representative prime, used only to evaluate `eps_p`.
    fn sample_prime(self) -> u64 {
        match self {
            CharClass::Two => 2,
            CharClass::Three => 3,
            CharClass::Odd => 5,
        }
    }
}

impl fmt::Display for CharClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CharClass::Two => "p=2",
            CharClass::Odd => "p odd, p!=3",
            CharClass::Three => "p=3",
        })
    }
}

/// `(N, characteristic class)` with `M = eps_p(N)` and the types that can
/// occur there.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SieveBranch {
    pub n: u64,
    pub class: CharClass,
    pub m: u64,
    pub tags: Vec<TypeTag>,
}

impl SieveBranch {
    pub fn new(n: u64, class: CharClass) -> Self {
        let m = epsilon_p(n, class.sample_prime());
        SieveBranch {
            n,
            class,
            m,
            tags: admissible_tags(class == CharClass::Three, m),
        }
    }

    /// Branches that can hold a root with `ord(-xi) = n`. In characteristic
    /// `p` the multiplicative group has order prime to `p`, so `p = 2`
    /// needs `n` odd and `p = 3` needs `3` not dividing `n`.
    pub fn all_for(n: u64) -> Vec<SieveBranch> {
        let mut out = Vec::new();
        if n % 2 == 1 {
            out.push(SieveBranch::new(n, CharClass::Two));
        }
        out.push(SieveBranch::new(n, CharClass::Odd));
        if n % 3 != 0 {
            out.push(SieveBranch::new(n, CharClass::Three));
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSeq {
    pub t1: TypeTag,
    pub t2: TypeTag,
    pub i: usize,
    pub j: usize,
    pub l: u64,
}

impl IndexSeq {
    pub fn is_excluded(&self) -> bool {
        self.t1 == self.t2 && self.i == self.j && self.l == 0
    }
}

impl fmt::Display for IndexSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{}",
            self.t1, self.t2, self.i, self.j, self.l
        )
    }
}

/// All non-excluded sequences for a set of `k` braids on a branch.
pub fn index_sequences(k: usize, branch: &SieveBranch) -> Vec<IndexSeq> {
    let mut out = Vec::new();
    for &t1 in &branch.tags {
        for &t2 in &branch.tags {
            for i in 0..k {
                for j in 0..k {
                    for l in 0..branch.n {
                        let seq = IndexSeq { t1, t2, i, j, l };
                        if !seq.is_excluded() {
                            out.push(seq);
                        }
                    }
                }
            }
        }
    }
    out
}

fn type_column(tag: TypeTag, m: u64) -> [LaurentPoly; 2] {
    [tag.a_poly(m), LaurentPoly::one()]
}

/// Precomputed matrices for evaluating determinants over one set of braids.
struct DetContext {
    braids: Vec<BurauMatrix>,
    s1_powers: Vec<BurauMatrix>,
    m: u64,
}

impl DetContext {
    fn new(set: &[BraidWord], branch: &SieveBranch) -> Self {
        let s1 = to_burau(&BraidWord::new(vec![Letter::S1]));
        let mut s1_powers = vec![BurauMatrix::identity()];
        for _ in 1..branch.n {
            let next = s1_powers.last().expect("nonempty").mul(&s1);
            s1_powers.push(next);
        }
        DetContext {
            braids: set.iter().map(to_burau).collect(),
            s1_powers,
            m: branch.m,
        }
    }

    fn det(&self, seq: &IndexSeq) -> LaurentPoly {
        let u = self.s1_powers[seq.l as usize]
            .mul(&self.braids[seq.i])
            .apply(&type_column(seq.t1, self.m));
        let w = self.braids[seq.j].apply(&type_column(seq.t2, self.m));
        &(&u[0] * &w[1]) - &(&u[1] * &w[0])
    }
}

/// The determinant with its Laurent shift cleared.
pub fn determinant_d(
    seq: &IndexSeq,
    set: &[BraidWord],
    branch: &SieveBranch,
) -> Result<IntPoly, SieveError> {
    if seq.is_excluded() {
        return Err(SieveError::Excluded(*seq));
    }
    Ok(DetContext::new(set, branch).det(seq).clear_shift())
}

/// `Res(D, phi_N(-t))`. Zero `D` is reported as degenerate.
pub fn resultant_with_cyclotomic(d: &IntPoly, n: u64) -> Result<BigInt, SieveError> {
    Ok(resultant(d, &neg_cyclotomic(n)?)?)
}

/// Distinct modular projections, as required of every candidate set.
pub fn check_projections(set: &[BraidWord]) -> Result<(), SieveError> {
    let proj: Vec<_> = set
        .iter()
        .map(|w| to_burau(w).modular_projection())
        .collect();
    for a in 0..set.len() {
        for b in a + 1..set.len() {
            if proj[a] == proj[b] {
                return Err(SieveError::SameProjection(set[a].clone(), set[b].clone()));
            }
        }
    }
    Ok(())
}

/// One determinant and its resultant.
#[derive(Clone, Debug)]
pub struct SieveRecord {
    pub seq: IndexSeq,
    pub det: IntPoly,
    pub res: BigInt,
}

/// Determinants and resultants of every index sequence, or the first
/// sequence whose determinant vanishes identically.
pub fn sieve_records(
    set: &[BraidWord],
    branch: &SieveBranch,
) -> Result<Vec<SieveRecord>, SieveError> {
    let ctx = DetContext::new(set, branch);
    let phi = neg_cyclotomic(branch.n)?;
    index_sequences(set.len(), branch)
        .into_par_iter()
        .map(|seq| {
            let det = ctx.det(&seq).clear_shift();
            if det.is_zero() {
                return Err(SieveError::ZeroDeterminant(seq));
            }
            let res = resultant(&det, &phi)?;
            Ok(SieveRecord { seq, det, res })
        })
        .collect()
}

/// `|B| >= k_N` and every resultant nonzero.
pub fn is_informative(set: &[BraidWord], n: u64, branch: &SieveBranch) -> Result<bool, SieveError> {
    check_projections(set)?;
    if (set.len() as u64) < k_threshold(n)? {
        return Ok(false);
    }
    Ok(match sieve_records(set, branch) {
        Ok(records) => records.iter().all(|r| !r.res.is_zero()),
        Err(SieveError::ZeroDeterminant(_)) => false,
        Err(e) => return Err(e),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ExceptionalTriple {
    pub p: u64,
    #[serde(rename = "minPoly", serialize_with = "display_poly")]
    pub min_poly: FpPoly,
    #[serde(rename = "type", serialize_with = "display_tag")]
    pub tag: TypeTag,
}

fn display_poly<S: serde::Serializer>(f: &FpPoly, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(f)
}

fn display_tag<S: serde::Serializer>(t: &TypeTag, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(t)
}

/// Candidate roots `(p, m_xi)` with the types that flagged them, in
/// canonical order.
pub type CandidateSet = BTreeMap<(u64, PolyKey), BTreeSet<TypeTag>>;

/// [`FpPoly`] ordered by degree, then coefficients from the top.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyKey(pub FpPoly);

impl Ord for PolyKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.cmp_canonical(&other.0)
    }
}

impl PartialOrd for PolyKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

pub fn triples_of(set: &CandidateSet) -> Vec<ExceptionalTriple> {
    set.iter()
        .flat_map(|((p, m), tags)| {
            tags.iter().map(|&tag| ExceptionalTriple {
                p: *p,
                min_poly: m.0.clone(),
                tag,
            })
        })
        .collect()
}

/// `ord(-xi)` for `xi` a root of `m` over `F_p`.
fn neg_root_order(p: u64, m: &FpPoly) -> Result<u64, SieveError> {
    let k = FieldSpec::new(p, m.clone())?;
    Ok(k.xi().neg().element_order()?)
}

/// Exceptional triples of one set on one branch: for each resultant other
/// than `+-1`, every prime divisor in the branch's characteristic class and
/// every common irreducible factor of `D` and `phi_N(-t)` modulo it. Roots
/// with `ord(-xi) != N` (possible when `p | N`) are dropped.
pub fn branch_triples(set: &[BraidWord], branch: &SieveBranch) -> Result<CandidateSet, SieveError> {
    let records = sieve_records(set, branch)?;
    if let Some(r) = records.iter().find(|r| r.res.is_zero()) {
        return Err(SieveError::NotInformative {
            n: branch.n,
            set: format!("{} (zero resultant at {})", format_set(set), r.seq),
        });
    }
    let phi = neg_cyclotomic(branch.n)?;
    let mut out = CandidateSet::new();
    let mut order_cache: BTreeMap<(u64, PolyKey), bool> = BTreeMap::new();
    for r in &records {
        if r.res.abs().is_one() {
            continue;
        }
        let primes = factorize(&r.res.abs().to_biguint().expect("absolute value"));
        for p in primes.keys().filter_map(BigUint::to_u64) {
            if !branch.class.contains(p) {
                continue;
            }
            let d = FpPoly::from_int_poly(&r.det, p);
            let g = d.gcd(&FpPoly::from_int_poly(&phi, p));
            if g.degree().unwrap_or(0) == 0 {
                continue;
            }
            for (f, _) in g.factor()? {
                let key = (p, PolyKey(f));
                let keep = match order_cache.get(&key) {
                    Some(&k) => k,
                    None => {
                        let k = neg_root_order(p, &key.1 .0)? == branch.n;
                        order_cache.insert(key.clone(), k);
                        k
                    }
                };
                if keep {
                    out.entry(key).or_default().insert(r.seq.t1);
                }
            }
        }
    }
    Ok(out)
}

/// Union over all branches of [`branch_triples`].
pub fn set_triples(set: &[BraidWord], n: u64) -> Result<CandidateSet, SieveError> {
    check_projections(set)?;
    if (set.len() as u64) < k_threshold(n)? {
        return Err(SieveError::NotInformative {
            n,
            set: format_set(set),
        });
    }
    let mut out = CandidateSet::new();
    for branch in SieveBranch::all_for(n) {
        for (key, tags) in branch_triples(set, &branch)? {
            out.entry(key).or_default().extend(tags);
        }
    }
    Ok(out)
}

/// Intersection of the candidate lists of several informative sets. Roots
/// are matched on `(p, m_xi)`; the surviving root keeps every type that
/// flagged it in any set.
pub fn exceptional_triples(n: u64, sets: &[Vec<BraidWord>]) -> Result<CandidateSet, SieveError> {
    let per_set: Vec<CandidateSet> = sets
        .par_iter()
        .map(|set| set_triples(set, n))
        .collect::<Result<_, _>>()?;
    let Some((first, rest)) = per_set.split_first() else {
        return Err(SieveError::NoInformativeSet(n));
    };
    let mut out = first.clone();
    out.retain(|key, _| rest.iter().all(|other| other.contains_key(key)));
    for (key, tags) in out.iter_mut() {
        for other in rest {
            tags.extend(&other[key]);
        }
    }
    Ok(out)
}

pub fn format_set(set: &[BraidWord]) -> String {
    let parts: Vec<String> = set.iter().map(|w| w.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn words(list: &[&str]) -> Vec<BraidWord> {
    list.iter()
        .map(|s| s.parse().expect("literal braid word"))
        .collect()
}

/// Candidate informative sets per `N`, as braid words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SieveConfig {
    pub sets: BTreeMap<u64, Vec<Vec<BraidWord>>>,
    /// Longest word tried by the fallback search.
    #[serde(default = "default_search_len")]
    pub search_max_len: usize,
}

fn default_search_len() -> usize {
    4
}

impl Default for SieveConfig {
    /// With `b1 = T s2 s1^-1` and `b2 = T s2^-1 s1`: five-element sets for
    /// `N = 7`, three-element sets for `N = 8`, pairs for `N = 9, 10`, and
    /// `{id}` from 11 on.
    fn default() -> Self {
        let b1 = "T s2 s1^-1";
        let b2 = "T s2^-1 s1";
        let cat = |parts: &[&str]| parts.join(" ");
        let b1b2 = cat(&[b1, b2]);
        let b2b1 = cat(&[b2, b1]);
        let b1_2 = cat(&[b1, b1]);
        let b1_3 = cat(&[b1, b1, b1]);
        let b1b2_2 = cat(&[b1, b2, b1, b2]);
        let b1b2b1 = cat(&[b1, b2, b1]);
        let mut sets = BTreeMap::new();
        sets.insert(
            7,
            vec![
                words(&["id", &b1_2, &b1_3, &b1b2, &b2b1]),
                words(&["id", &b1_2, &b1b2, &b1b2_2, &b2b1]),
            ],
        );
        sets.insert(
            8,
            vec![words(&["id", &b1_2, &b1b2]), words(&["id", &b1_2, &b1b2b1])],
        );
        for n in [9, 10] {
            sets.insert(
                n,
                vec![
                    words(&["id", b2]),
                    words(&["id", &b1b2]),
                    words(&["id", &b2b1]),
                ],
            );
        }
        for n in 11..=SWEEP_MAX {
            sets.insert(n, vec![words(&["id"])]);
        }
        SieveConfig {
            sets,
            search_max_len: default_search_len(),
        }
    }
}

fn informative_everywhere(set: &[BraidWord], n: u64) -> Result<bool, SieveError> {
    if check_projections(set).is_err() {
        return Ok(false);
    }
    for branch in SieveBranch::all_for(n) {
        if !is_informative(set, n, &branch)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Greedy search: extend `{id}` by words in `s1^{+-1}, s2^{+-1}, T^{+-1}` of
/// increasing length, keeping a word when the enlarged set still has
/// distinct projections and no vanishing resultant, until `k_N` braids.
pub fn search_informative_set(
    n: u64,
    max_len: usize,
) -> Result<Option<Vec<BraidWord>>, SieveError> {
    let k = k_threshold(n)? as usize;
    let letters = [
        Letter::S1,
        Letter::S1Inv,
        Letter::S2,
        Letter::S2Inv,
        Letter::T,
        Letter::TInv,
    ];
    let mut set = vec![BraidWord::identity()];
    let mut layer = vec![BraidWord::identity()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                if w.letters().last() == Some(&l.inverse()) {
                    continue;
                }
                next.push(w.concat(&BraidWord::new(vec![l])));
            }
        }
        for w in &next {
            if set.len() >= k {
                break;
            }
            let mut trial = set.clone();
            trial.push(w.clone());
            if check_projections(&trial).is_err() {
                continue;
            }
            let all_nonzero = SieveBranch::all_for(n).iter().all(|b| {
                matches!(sieve_records(&trial, b), Ok(rs) if rs.iter().all(|r| !r.res.is_zero()))
            });
            if all_nonzero {
                set = trial;
            }
        }
        if set.len() >= k {
            break;
        }
        layer = next;
    }
    if set.len() >= k && informative_everywhere(&set, n)? {
        Ok(Some(set))
    } else {
        Ok(None)
    }
}

/// Outcome of the sieve for one `N`.
#[derive(Clone, Debug)]
pub struct SweepEntry {
    pub n: u64,
    pub sets: Vec<Vec<BraidWord>>,
    pub rejected: Vec<Vec<BraidWord>>,
    pub searched: bool,
    pub candidates: CandidateSet,
}

/// Runs the sieve for one `N` with the configured sets, discarding sets
/// that fail to be informative and searching for one if none remain.
pub fn sweep_one(n: u64, config: &SieveConfig) -> Result<SweepEntry, SieveError> {
    if !(SWEEP_MIN..=SWEEP_MAX).contains(&n) {
        return Err(SieveError::OutOfRange(n));
    }
    let configured = config.sets.get(&n).cloned().unwrap_or_default();
    let mut sets = Vec::new();
    let mut rejected = Vec::new();
    for set in configured {
        if informative_everywhere(&set, n)? {
            sets.push(set);
        } else {
            rejected.push(set);
        }
    }
    let mut searched = false;
    if sets.is_empty() {
        searched = true;
        match search_informative_set(n, config.search_max_len)? {
            Some(set) => sets.push(set),
            None => return Err(SieveError::NoInformativeSet(n)),
        }
    }
    let candidates = exceptional_triples(n, &sets)?;
    Ok(SweepEntry {
        n,
        sets,
        rejected,
        searched,
        candidates,
    })
}

pub fn full_sweep(
    range: std::ops::RangeInclusive<u64>,
    config: &SieveConfig,
) -> Result<Vec<SweepEntry>, SieveError> {
    range
        .into_par_iter()
        .map(|n| sweep_one(n, config))
        .collect()
}

/// Candidate roots whose universal `Bu_3` skeleton has genus zero for at
/// least one of their types, with those types.
pub fn genus_zero_survivors(
    candidates: &CandidateSet,
    cap: usize,
) -> Result<CandidateSet, SieveError> {
    let checked: Vec<_> = candidates
        .par_iter()
        .map(|((p, m), tags)| -> Result<_, SieveError> {
            let root = RootSpec::new(FieldSpec::new(*p, m.0.clone())?)?;
            let mut good = BTreeSet::new();
            for &tag in tags {
                if !may_have_genus_zero(&root, tag)? {
                    continue;
                }
                let spec = UniversalGroupSpec {
                    root: root.clone(),
                    tag,
                    ambient: Ambient::Bu3,
                };
                if enumerate_universal(&spec, cap)?.genus() == 0 {
                    good.insert(tag);
                }
            }
            Ok(((*p, m.clone()), good))
        })
        .collect::<Result<_, _>>()?;
    Ok(checked
        .into_iter()
        .filter(|(_, tags)| !tags.is_empty())
        .collect())
}

/// Convenience wrapper with the default state cap.
pub fn genus_zero_filter(candidates: &CandidateSet) -> Result<CandidateSet, SieveError> {
    genus_zero_survivors(candidates, DEFAULT_STATE_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id() -> Vec<BraidWord> {
        vec![BraidWord::identity()]
    }

    /// `(t^l - 1)/(t - 1)` evaluated at `-t`, built term by term.
    fn phi_tilde_neg(l: u64) -> IntPoly {
        let coeffs: Vec<i64> = (0..l).map(|k| if k % 2 == 0 { 1 } else { -1 }).collect();
        IntPoly::from_i64s(&coeffs)
    }

    fn up_to_sign(a: &IntPoly, b: &IntPoly) -> bool {
        a == b || *a == -b
    }

    #[test]
    fn diagonal_family_is_phi_tilde() {
        let branch = SieveBranch::new(11, CharClass::Odd);
        for l in 1..11 {
            let seq = IndexSeq {
                t1: TypeTag::I,
                t2: TypeTag::I,
                i: 0,
                j: 0,
                l,
            };
            let d = determinant_d(&seq, &id(), &branch).unwrap();
            assert!(up_to_sign(&d, &phi_tilde_neg(l)), "l = {l}: {d}");
        }
    }

    #[test]
    fn excluded_sequence_rejected() {
        let branch = SieveBranch::new(11, CharClass::Odd);
        let seq = IndexSeq {
            t1: TypeTag::I,
            t2: TypeTag::I,
            i: 0,
            j: 0,
            l: 0,
        };
        assert!(matches!(
            determinant_d(&seq, &id(), &branch),
            Err(SieveError::Excluded(_))
        ));
    }

    #[test]
    fn type_one_against_type_two() {
        // det[(0, 1) | (t^-1 (t + 1), 1)] = -t^-1 (t + 1)
        let branch = SieveBranch::new(11, CharClass::Odd);
        let seq = IndexSeq {
            t1: TypeTag::I,
            t2: TypeTag::II,
            i: 0,
            j: 0,
            l: 0,
        };
        let d = determinant_d(&seq, &id(), &branch).unwrap();
        assert!(up_to_sign(&d, &IntPoly::from_i64s(&[1, 1])));
    }

    #[test]
    fn resultant_controls() {
        for n in 8..=26 {
            let phi = neg_cyclotomic(n).unwrap();
            assert!(resultant_with_cyclotomic(&phi, n).unwrap().is_zero());
            assert!(resultant_with_cyclotomic(&IntPoly::one(), n)
                .unwrap()
                .is_one());
        }
    }

    #[test]
    fn excluded_sequences_vanish_identically() {
        let set = words(&["id", "T s2^-1 s1"]);
        for branch in SieveBranch::all_for(9) {
            let ctx = DetContext::new(&set, &branch);
            for &t in &branch.tags {
                for i in 0..set.len() {
                    let seq = IndexSeq {
                        t1: t,
                        t2: t,
                        i,
                        j: i,
                        l: 0,
                    };
                    assert!(ctx.det(&seq).is_zero());
                }
            }
            for seq in index_sequences(set.len(), &branch) {
                assert!(!ctx.det(&seq).is_zero(), "{seq}");
            }
        }
    }

    #[test]
    fn branches_skip_impossible_characteristics() {
        let classes = |n| {
            SieveBranch::all_for(n)
                .iter()
                .map(|b| b.class)
                .collect::<Vec<_>>()
        };
        assert_eq!(
            classes(7),
            vec![CharClass::Two, CharClass::Odd, CharClass::Three]
        );
        assert_eq!(classes(12), vec![CharClass::Odd]);
        assert_eq!(classes(8), vec![CharClass::Odd, CharClass::Three]);
        assert_eq!(SieveBranch::new(9, CharClass::Odd).m, 18);
    }

    #[test]
    fn informativeness_examples() {
        let b = SieveBranch::new(7, CharClass::Two);
        assert!(!is_informative(&id(), 7, &b).unwrap());
        for branch in SieveBranch::all_for(13) {
            assert!(is_informative(&id(), 13, &branch).unwrap());
        }
        let printed = words(&["id", "T s1 s1^-1"]);
        assert!(matches!(
            check_projections(&printed),
            Err(SieveError::SameProjection(..))
        ));
    }

    #[test]
    fn nine_contains_table_primes() {
        let sets = SieveConfig::default().sets[&9].clone();
        let c = exceptional_triples(9, &sets).unwrap();
        let primes: BTreeSet<u64> = c.keys().map(|(p, _)| *p).collect();
        assert!(primes.contains(&19) && primes.contains(&37), "{primes:?}");
        for f in ["t+4", "t+5", "t+6", "t+9", "t+16", "t+17"] {
            let key = (19, PolyKey(FpPoly::parse(f, 19).unwrap()));
            assert!(c.contains_key(&key), "{f}");
        }
    }

    #[test]
    fn search_finds_a_set() {
        let set = search_informative_set(13, 2).unwrap().unwrap();
        assert_eq!(set, id());
        let set = search_informative_set(9, 3).unwrap().unwrap();
        assert_eq!(set.len(), 2);
    }
}
