use burau_sieve::burau::{specialize, specialize_poly, to_burau, Ambient, BraidWord, Letter};
use burau_sieve::exactalg::{FieldSpec, FpPoly, LaurentPoly};
use burau_sieve::intersect::fibered_product;
use burau_sieve::skeleton::{
    enumerate_universal, euler_lhs, verify_region_widths, UniversalGroupSpec,
};
use burau_sieve::typesys::{admissible_types, RootSpec, TypeTag};
use proptest::prelude::*;

const PRIMES: [u64; 8] = [5, 7, 11, 13, 17, 19, 23, 29];

/// A root `xi = -c` in `F_p` with `ord(-xi) >= 7`, if `c` gives one.
fn linear_root(p: u64, c: u64) -> Option<RootSpec> {
    let field = FieldSpec::new(p, FpPoly::new(p, vec![c % p, 1])).ok()?;
    let root = RootSpec::new(field).ok()?;
    (root.n() >= 7).then_some(root)
}

fn letter() -> impl Strategy<Value = Letter> {
    proptest::sample::select(Letter::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn skeleton_invariants(pi in 0..PRIMES.len(), c in 1u64..29, b3 in any::<bool>(), k in 0usize..6) {
        let p = PRIMES[pi];
        let Some(root) = linear_root(p, c) else { return Ok(()) };
        let tags = admissible_types(&root).tags;
        let tag = tags[k % tags.len()];
        let ambient = if b3 { Ambient::B3 } else { Ambient::Bu3 };
        let sk = enumerate_universal(&UniversalGroupSpec { root: root.clone(), tag, ambient }, 100_000)
            .unwrap();
        let sig = sk.signature();
        prop_assert_eq!(sig.width_sum(), sk.edge_count() as u64);
        prop_assert!(verify_region_widths(&sk, root.n()));
        prop_assert_eq!(euler_lhs(&sig) == 12, sk.genus() == 0);
        prop_assert_eq!(sk.region().clone(), sk.white().after(&sk.black().inverse()));
    }

    #[test]
    fn fibered_products_count_pairs(c1 in 1u64..13, c2 in 1u64..13) {
        let (Some(r1), Some(r2)) = (linear_root(13, c1), linear_root(11, c2)) else { return Ok(()) };
        let s = |r: RootSpec| {
            enumerate_universal(&UniversalGroupSpec { root: r, tag: TypeTag::I, ambient: Ambient::Bu3 }, 100_000)
                .unwrap()
        };
        let (a, b) = (s(r1), s(r2));
        let ab = fibered_product(&a, &b);
        let ba = fibered_product(&b, &a);
        prop_assert_eq!(ab.edge_count(), a.edge_count() * b.edge_count());
        prop_assert_eq!(ab.components.len(), ba.components.len());
        let floor = a.genus().max(b.genus());
        prop_assert!(ab.components.iter().all(|c| c.genus() >= floor));
        let mut ga: Vec<u64> = ab.components.iter().map(|c| c.genus()).collect();
        let mut gb: Vec<u64> = ba.components.iter().map(|c| c.genus()).collect();
        ga.sort_unstable();
        gb.sort_unstable();
        prop_assert_eq!(ga, gb);
    }

    #[test]
    fn specialization_is_a_homomorphism(
        u in proptest::collection::vec(letter(), 0..12),
        v in proptest::collection::vec(letter(), 0..12),
        pi in 0..PRIMES.len(),
        c in 2u64..29,
    ) {
        let p = PRIMES[pi];
        if c % p == 0 {
            return Ok(());
        }
        let field = FieldSpec::new(p, FpPoly::new(p, vec![c % p, 1])).unwrap();
        let (u, v) = (BraidWord::new(u), BraidWord::new(v));
        let lhs = specialize(&to_burau(&u.concat(&v)), &field);
        let rhs = specialize(&to_burau(&u), &field).mul(&specialize(&to_burau(&v), &field));
        prop_assert_eq!(lhs.entries(), rhs.entries());
        let k = u.bdeg();
        let det = specialize_poly(&LaurentPoly::monomial(if k % 2 == 0 { 1 } else { -1 }, k), &field);
        prop_assert_eq!(specialize(&to_burau(&u), &field).det(), det);
    }
}
