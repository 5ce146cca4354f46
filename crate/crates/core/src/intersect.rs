//! Fibered products of skeletons over the one-edge skeleton of the modular
//! group, and conjugacy of the line `k v_T` to `k e2`.

use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::burau::{specialize, to_burau, BraidWord};
use crate::exactalg::FieldElem;
use crate::skeleton::{Perm, Skeleton, UniversalGroupSpec};
use crate::typesys::{type_vector, TypeError};

/// Connected components of the diagonal action on pairs of edges.
#[derive(Clone, Debug)]
pub struct FiberedProduct {
    pub components: Vec<Skeleton>,
}

impl FiberedProduct {
    pub fn edge_count(&self) -> usize {
        self.components.iter().map(Skeleton::edge_count).sum()
    }

    pub fn min_genus(&self) -> u64 {
        self.components
            .iter()
            .map(Skeleton::genus)
            .min()
            .unwrap_or(0)
    }
}

pub fn fibered_product(s1: &Skeleton, s2: &Skeleton) -> FiberedProduct {
    let n2 = s2.edge_count();
    let total = s1.edge_count() * n2;
    let pair = |i: usize| (i / n2, i % n2);
    let black = |i: usize| {
        let (a, b) = pair(i);
        s1.black().apply(a) * n2 + s2.black().apply(b)
    };
    let white = |i: usize| {
        let (a, b) = pair(i);
        s1.white().apply(a) * n2 + s2.white().apply(b)
    };
    let mut local = vec![u32::MAX; total];
    let mut components = Vec::new();
    for start in 0..total {
        if local[start] != u32::MAX {
            continue;
        }
        let mut members = vec![start];
        local[start] = 0;
        let mut k = 0;
        while k < members.len() {
            let i = members[k];
            for j in [black(i), white(i)] {
                if local[j] == u32::MAX {
                    local[j] = members.len() as u32;
                    members.push(j);
                }
            }
            k += 1;
        }
        let relabel = |f: &dyn Fn(usize) -> usize| {
            Perm::new(members.iter().map(|&i| local[f(i)]).collect()).expect("orbit is closed")
        };
        let sk = Skeleton::new(relabel(&black), relabel(&white))
            .expect("diagonal action preserves the skeleton axioms");
        components.push(sk);
    }
    FiberedProduct { components }
}

#[derive(Clone, Debug, Serialize)]
pub struct PairReport {
    #[serde(rename = "rowA")]
    pub row_a: String,
    #[serde(rename = "rowB")]
    pub row_b: String,
    pub components: usize,
    #[serde(rename = "minGenus")]
    pub min_genus: u64,
}

/// Fibered products of every unordered pair of distinct entries.
pub fn verify_addendum_pairwise(skeletons: &[(String, Skeleton)]) -> Vec<PairReport> {
    let pairs: Vec<(usize, usize)> = (0..skeletons.len())
        .flat_map(|a| (a + 1..skeletons.len()).map(move |b| (a, b)))
        .collect();
    pairs
        .par_iter()
        .map(|&(a, b)| {
            let product = fibered_product(&skeletons[a].1, &skeletons[b].1);
            PairReport {
                row_a: skeletons[a].0.clone(),
                row_b: skeletons[b].0.clone(),
                components: product.components.len(),
                min_genus: product.min_genus(),
            }
        })
        .collect()
}

fn projective(v: [FieldElem; 2]) -> [FieldElem; 2] {
    let lead = if v[0].is_zero() { &v[1] } else { &v[0] };
    let inv = lead.inv().expect("nonzero vector");
    [v[0].mul(&inv), v[1].mul(&inv)]
}

/// Orbit of the projective point `[0:1]` under `s1, s2` acting on columns.
pub fn e2_orbit(spec: &UniversalGroupSpec) -> HashSet<[FieldElem; 2]> {
    let k = spec.root.field();
    let gens = ["s1", "s2"].map(|w| {
        let word: BraidWord = w.parse().expect("literal braid word");
        specialize(&to_burau(&word), k)
    });
    let seed = [k.zero(), k.one()];
    let mut seen = HashSet::from([seed.clone()]);
    let mut queue = VecDeque::from([seed]);
    while let Some(v) = queue.pop_front() {
        for g in &gens {
            let next = projective(g.apply(&v));
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Whether `[v_T] = [a_T(xi) : 1]` lies in the braid orbit of `[0:1]`.
pub fn conjugate_to_e2(spec: &UniversalGroupSpec) -> Result<bool, TypeError> {
    let tv = type_vector(spec.tag, &spec.root)?;
    Ok(e2_orbit(spec).contains(&projective(tv.v)))
}
