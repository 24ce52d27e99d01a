use cyclic_bounds::{
    bch_bound, cyclotomic_coset, ht_bound, ht_bound_normalized, min_distance, nzl_search,
    CyclicCode, DefiningSet, Error, Field, Locator, Poly, SearchConfig, DEFAULT_ENUM_CAP,
    DEFAULT_FIELD_CAP,
};
use proptest::prelude::*;

fn field_axioms(field: &Field) -> impl Strategy<Value = (u64, u64, u64)> {
    let size = field.size();
    (0..size, 0..size, 0..size)
}

proptest! {
    #[test]
    fn gf16_ring_axioms((a, b, c) in field_axioms(&Field::new(2, 4).unwrap())) {
        let field = Field::new(2, 4).unwrap();
        let (a, b, c) = (field.element(a).unwrap(), field.element(b).unwrap(), field.element(c).unwrap());
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), field.one());
        }
    }

    #[test]
    fn gf27_ring_axioms((a, b, c) in field_axioms(&Field::new(3, 3).unwrap())) {
        let field = Field::new(3, 3).unwrap();
        let (a, b, c) = (field.element(a).unwrap(), field.element(b).unwrap(), field.element(c).unwrap());
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert_eq!(&b.div(&a).unwrap() * &a, b);
        }
    }

    #[test]
    fn embeddings_are_ring_homomorphisms(a in 0u64..16, b in 0u64..16) {
        let small = Field::new(2, 4).unwrap();
        let big = Field::new(2, 12).unwrap();
        let emb = small.embedding_into(&big).unwrap();
        let (a, b) = (small.element(a).unwrap(), small.element(b).unwrap());
        prop_assert_eq!(emb.apply(&(&a + &b)), &emb.apply(&a) + &emb.apply(&b));
        prop_assert_eq!(emb.apply(&(&a * &b)), &emb.apply(&a) * &emb.apply(&b));
    }

    #[test]
    fn divmod_reconstructs_the_dividend(
        a in prop::collection::vec(0u64..7, 0..12),
        b in prop::collection::vec(0u64..7, 1..6),
    ) {
        let field = Field::new(7, 1).unwrap();
        let a = Poly::from_values(&field, &a).unwrap();
        let b = Poly::from_values(&field, &b).unwrap();
        prop_assume!(b.degree().is_some());
        let (q, r) = a.divmod(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree().map_or(true, |dr| dr < b.degree().unwrap()));
    }

    #[test]
    fn bound_witnesses_revalidate_on_random_sets(
        n in 4u64..=30,
        seed in prop::collection::vec(0i64..30, 1..8),
    ) {
        let set = DefiningSet::new(n, 2, &seed).unwrap();
        prop_assume!(!set.is_full());
        let (bch, bch_witness) = bch_bound(&set).unwrap();
        prop_assert!(bch_witness.validate(&set).is_ok());
        prop_assert_eq!(bch_witness.bound(), bch);
        let (ht, ht_witness) = ht_bound(&set).unwrap();
        prop_assert!(ht_witness.validate(&set).is_ok());
        prop_assert_eq!(ht_witness.bound(), ht);
        prop_assert!(ht >= bch);
        let (normalized, normalized_witness) = ht_bound_normalized(&set).unwrap();
        prop_assert_eq!(normalized, ht);
        prop_assert!(normalized_witness.validate(&set).is_ok());
    }

    #[test]
    fn nzl_search_winners_revalidate(
        n in 4u64..=30,
        seed in prop::collection::vec(0i64..30, 1..8),
    ) {
        let set = DefiningSet::new(n, 2, &seed).unwrap();
        prop_assume!(!set.is_full());
        match nzl_search(&set, &SearchConfig::default()) {
            Ok((value, witness)) => {
                prop_assert!(witness.validate(&set).is_ok());
                prop_assert_eq!(witness.bound(), value);
            }
            Err(Error::EmptySearchConfig) => {}
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn bounds_are_monotone_in_the_set(
        n in 5u64..=25,
        seed in prop::collection::vec(0i64..25, 1..6),
        extra in 0i64..25,
    ) {
        let small = DefiningSet::new(n, 2, &seed).unwrap();
        let mut grown = seed.clone();
        grown.push(extra);
        let large = DefiningSet::new(n, 2, &grown).unwrap();
        prop_assume!(!large.is_full());
        prop_assert!(bch_bound(&small).unwrap().0 <= bch_bound(&large).unwrap().0);
        prop_assert!(ht_bound(&small).unwrap().0 <= ht_bound(&large).unwrap().0);
    }
}

#[test]
fn cyclotomic_cosets_partition_the_residues() {
    for n in 3u64..=40 {
        for q in [2u64, 3, 5, 7] {
            if n % q == 0 {
                continue;
            }
            let mut seen = vec![0u32; n as usize];
            for r in 0..n {
                for x in cyclotomic_coset(n, q, r as i64).unwrap() {
                    seen[x as usize] += 1;
                }
            }
            // every residue appears once per member of its own coset
            for r in 0..n {
                let coset = cyclotomic_coset(n, q, r as i64).unwrap();
                assert_eq!(seen[r as usize] as usize, coset.len());
            }
        }
    }
}

#[test]
fn closures_are_stable_supersets() {
    let set = DefiningSet::new(21, 2, &[1, 5]).unwrap();
    let closed = set.closure();
    assert!(closed.is_closed());
    for m in set.members() {
        assert!(closed.contains(m as i64));
    }
    assert_eq!(closed.closure().members(), closed.members());
}

#[test]
fn reed_solomon_locators_are_mds() {
    for q_l in [3u64, 4, 5, 7, 8, 9, 11, 13, 16] {
        for n_l in 2u64..=8 {
            if (q_l - 1) % n_l != 0 {
                continue;
            }
            for k_l in 1..n_l {
                let locator = Locator::reed_solomon(q_l, n_l, k_l, 0).unwrap();
                assert_eq!(locator.d_l(), n_l - k_l + 1);
                let code = locator.realize(DEFAULT_FIELD_CAP).unwrap();
                let result = min_distance(&code, DEFAULT_ENUM_CAP).unwrap();
                assert_eq!(
                    result.distance,
                    n_l - k_l + 1,
                    "RS({q_l}, {n_l}, {k_l}) is not MDS"
                );
            }
        }
    }
}

#[test]
fn fast_path_matches_direct_enumeration() {
    for (n, reps) in [(7u64, vec![1i64]), (9, vec![1]), (15, vec![1, 3])] {
        let code = CyclicCode::build(2, n, &reps).unwrap();
        let k = code.k();
        let mut best = u64::MAX;
        let mut best_msg = Vec::new();
        for rank in 1u64..1 << k {
            // m_0 is the most significant digit, matching the oracle's order
            let msg: Vec<u64> = (0..k).rev().map(|i| (rank >> i) & 1).collect();
            let weight = code.encode_values(&msg).unwrap().weight();
            if weight < best {
                best = weight;
                best_msg = msg;
            }
        }
        let result = min_distance(&code, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(result.distance, best);
        assert_eq!(result.witness, code.encode_values(&best_msg).unwrap());
        assert_eq!(result.enumerated, (1 << k) - 1);
    }
}
