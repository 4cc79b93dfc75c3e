//! The four generators printed for Aut(D), in their own 1-based labelling.

use std::collections::HashSet;

use qrlab::groups::{is_s_homogeneous, orbits_on_subsets};
use qrlab::{Permutation, PermutationGroup};

const PRINTED: [&[&[usize]]; 4] = [
    &[
        &[3, 30, 29, 31],
        &[4, 9, 18, 7],
        &[5, 24, 25, 17],
        &[6, 22, 38, 42],
        &[8, 34, 11, 28],
        &[10, 36, 16, 33],
        &[12, 32, 23, 21],
        &[13, 15, 14, 41],
        &[19, 20, 39, 27],
        &[26, 35, 40, 37],
    ],
    &[
        &[3, 8, 6, 33, 15, 29, 11, 38, 36, 41],
        &[4, 35, 27, 21, 5, 18, 37, 20, 32, 25],
        &[7, 26, 39, 23, 17, 9, 40, 19, 12, 24],
        &[10, 14, 31, 28, 42, 16, 13, 30, 34, 22],
    ],
    &[
        &[1, 32],
        &[2, 21],
        &[3, 36],
        &[5, 10],
        &[6, 26],
        &[7, 38],
        &[8, 20],
        &[9, 22],
        &[11, 25],
        &[12, 23],
        &[13, 33],
        &[14, 28],
        &[15, 39],
        &[16, 27],
        &[17, 30],
        &[18, 37],
        &[19, 31],
        &[24, 41],
        &[29, 34],
        &[40, 42],
    ],
    &[
        &[
            2, 32, 23, 12, 36, 29, 37, 14, 24, 10, 8, 15, 40, 6, 4, 31, 41, 18, 26, 19,
        ],
        &[
            3, 42, 11, 34, 9, 28, 20, 17, 30, 33, 39, 7, 16, 22, 25, 38, 35, 27, 5, 21,
        ],
    ],
];

fn printed_group() -> PermutationGroup {
    let gens = PRINTED
        .iter()
        .map(|cycles| {
            let zero_based: Vec<Vec<usize>> = cycles
                .iter()
                .map(|c| c.iter().map(|&x| x - 1).collect())
                .collect();
            Permutation::from_cycles(42, &zero_based).unwrap()
        })
        .collect();
    PermutationGroup::new(42, gens).unwrap()
}

fn subset_orbit(g: &PermutationGroup, start: Vec<usize>) -> HashSet<Vec<usize>> {
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = vec![start];
    while let Some(s) = queue.pop() {
        for p in g.generators() {
            let image = p.apply_to_points(&s);
            if seen.insert(image.clone()) {
                queue.push(image);
            }
        }
    }
    seen
}

#[test]
fn printed_generators_have_order_34440() {
    assert_eq!(printed_group().order_u128(), Some(34440));
}

#[test]
fn printed_triples_lie_in_distinct_orbits() {
    let g = printed_group();
    let part = orbits_on_subsets(&g, 3).unwrap();
    assert_eq!(part.sizes(), vec![5740, 5740]);
    // {1,2,3} and {1,3,8} in the printed labelling
    let a = subset_orbit(&g, vec![0, 1, 2]);
    let b = subset_orbit(&g, vec![0, 2, 7]);
    assert_eq!((a.len(), b.len()), (5740, 5740));
    assert!(a.is_disjoint(&b));
    assert!(!is_s_homogeneous(&g, 3).unwrap());
    assert!(is_s_homogeneous(&g, 2).unwrap());
}
