use proptest::prelude::*;

use qrlab::combinatorics::{binomial, subsets};
use qrlab::designs::{incidence_profile, verify_design};
use qrlab::groups::{design_automorphism_group, orbits_on_subsets, preserves_design};
use qrlab::{Design, Permutation, PermutationGroup};

fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut a: Vec<usize> = (0..n).collect();
    fn rec(a: &mut Vec<usize>, i: usize, out: &mut Vec<Permutation>) {
        if i == a.len() {
            out.push(Permutation::new(a.clone()).unwrap());
            return;
        }
        for j in i..a.len() {
            a.swap(i, j);
            rec(a, i + 1, out);
            a.swap(i, j);
        }
    }
    rec(&mut a, 0, &mut out);
    out
}

/// Random design on `v <= 7` points: a random selection of `k`-subsets.
fn arb_design() -> impl Strategy<Value = Design> {
    (2usize..=7)
        .prop_flat_map(|v| (Just(v), 1..v))
        .prop_flat_map(|(v, k)| {
            let all: Vec<Vec<usize>> = subsets(v, k).collect();
            let len = all.len();
            (
                Just(v),
                Just(k),
                proptest::sample::subsequence(all, 0..=len),
            )
        })
        .prop_map(|(v, k, blocks)| Design::from_point_lists(v, k, &blocks).unwrap())
}

fn arb_group() -> impl Strategy<Value = PermutationGroup> {
    (2usize..=8).prop_flat_map(|n| {
        let perm = Just((0..n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap());
        proptest::collection::vec(perm, 0..=3)
            .prop_map(move |gens| PermutationGroup::new(n, gens).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn automorphism_search_matches_brute_force(d in arb_design()) {
        let group = design_automorphism_group(&d);
        let preserving: Vec<Permutation> = all_permutations(d.points())
            .into_iter()
            .filter(|p| preserves_design(p, &d).unwrap())
            .collect();
        prop_assert_eq!(group.order_u128(), Some(preserving.len() as u128));
        for p in &preserving {
            prop_assert!(group.contains(p).unwrap());
        }
    }

    #[test]
    fn incidence_double_count(d in arb_design(), t in 1usize..=3) {
        prop_assume!(t <= d.block_size());
        let profile = incidence_profile(&d, t).unwrap();
        let expected = d.num_blocks() as u128 * binomial(d.block_size() as u64, t as u64).unwrap();
        prop_assert_eq!(profile.incidences(), expected);
        prop_assert_eq!(profile.total_subsets(), binomial(d.points() as u64, t as u64).unwrap());
        prop_assert_eq!(verify_design(&d, t).unwrap().is_design(), profile.is_constant() && {
            let r = d.replication();
            r.windows(2).all(|w| w[0] == w[1])
        });
    }

    #[test]
    fn subset_orbits_partition_and_divide(g in arb_group(), s in 0usize..=4) {
        prop_assume!(s <= g.degree());
        let part = orbits_on_subsets(&g, s).unwrap();
        prop_assert_eq!(part.total(), binomial(g.degree() as u64, s as u64).unwrap());
        let order = g.order_u128().unwrap();
        for o in &part.orbits {
            prop_assert_eq!(order % o.size as u128, 0);
        }
    }
}
