use std::collections::HashSet;

use qrlab::codes::{
    codewords_of_weight, dual, extend, extended_qr_code, low_weight_codewords, minimum_distance,
    puncture, qr_code, weight_distribution, Cache,
};
use qrlab::combinatorics::binomial;
use qrlab::designs::{
    derived_design, design_from_codewords, design_from_str, design_to_string, linear_span,
    params_consistency, residual_at_point, verify_design, Verification,
};
use qrlab::groups::{
    design_automorphism_group, moebius_to_permutation, orbits_on_subsets, permutations_from_str,
    permutations_to_string, preserves_design, psl2, MoebiusMap,
};
use qrlab::{CodewordSet, Design, LinearCode, Permutation, PermutationGroup};

fn c42() -> LinearCode {
    extended_qr_code(41).unwrap().1
}

fn design_d() -> Design {
    let c = c42();
    design_from_codewords(&codewords_of_weight(&c, 10).unwrap(), 42).unwrap()
}

#[test]
fn qr41_has_minimum_weight_9_and_extends_to_c() {
    let (spec, q) = qr_code(41).unwrap();
    assert_eq!(spec.m, 20);
    assert_eq!(spec.generator_poly.degree(), Some(20));
    assert_eq!((q.len(), q.dimension()), (41, 21));
    assert_eq!(weight_distribution(&q).unwrap().minimum_distance(), Some(9));
    let c = extend(&q);
    assert!(c.same_code(&c42()));
    assert!(puncture(&c, 41).unwrap().same_code(&q));
    let wd = weight_distribution(&c).unwrap();
    assert_eq!(wd.minimum_distance(), Some(10));
    assert!(wd.nonzero().all(|(w, _)| w % 2 == 0));
    assert_eq!(wd.total(), 1 << 21);
}

#[test]
fn weight_42_is_the_all_ones_word() {
    let c = c42();
    let words = codewords_of_weight(&c, 42).unwrap();
    assert_eq!(words.len(), 1);
    assert_eq!(words.words[0].weight(), 42);
    let d = design_from_codewords(&words, 42).unwrap();
    assert_eq!(d.num_blocks(), 1);
    assert_eq!(codewords_of_weight(&c, 0).unwrap().len(), 1);
}

#[test]
fn low_weight_search_matches_full_enumeration_on_c() {
    let c = c42();
    let fast = low_weight_codewords(&c, 10).unwrap();
    assert_eq!(fast[10].words, codewords_of_weight(&c, 10).unwrap().words);
    assert!(fast[1..10].iter().all(CodewordSet::is_empty));
    assert_eq!(minimum_distance(&c).unwrap().unwrap().distance, 10);
}

#[test]
fn cyclic_shifts_preserve_qr41() {
    let (_, q) = qr_code(41).unwrap();
    for row in q.generator().rows() {
        assert!(q.contains(&row.rotated(1)));
    }
}

#[test]
fn lower_strength_parameters_of_d() {
    let d = design_d();
    let Verification::Design(p3) = verify_design(&d, 3).unwrap() else {
        panic!("not a design")
    };
    assert!(params_consistency(&p3));
    for t in [2, 1] {
        let p = *verify_design(&d, t).unwrap().params().unwrap();
        assert_eq!(p.lambda as u128, p3.lambda_s(t).unwrap());
    }
    assert_eq!(p3.lambda_s(2), Some(90));
    assert_eq!(p3.lambda_s(1), Some(410));
    assert_eq!(p3.lambda_s(0), Some(1722));
}

#[test]
fn derived_and_residual_partition_the_blocks() {
    let d = design_d();
    for x in [0, 17, 41] {
        let der = derived_design(&d, x).unwrap();
        let res = residual_at_point(&d, x).unwrap();
        assert_eq!(der.num_blocks() + res.num_blocks(), d.num_blocks());
    }
    assert!(derived_design(&d, 42).is_err());
}

#[test]
fn span_lies_in_source_code() {
    let c = c42();
    let d = design_d();
    let span = linear_span(&d);
    assert!(span.generator().rows().iter().all(|r| c.contains(r)));
    let empty = Design::new(5, 2, Vec::new()).unwrap();
    assert_eq!(linear_span(&empty).dimension(), 0);
    let single = Design::from_point_lists(5, 2, &[vec![1, 3]]).unwrap();
    assert_eq!(linear_span(&single).dimension(), 1);
}

#[test]
fn design_file_roundtrip_of_d() {
    let d = design_d();
    let text = design_to_string(&d);
    assert_eq!(text.lines().count(), 1723);
    assert!(text.starts_with("42 10 1722\n"));
    assert_eq!(design_from_str(&text).unwrap(), d);
}

#[test]
fn no_transposition_preserves_d() {
    let d = design_d();
    let mut preserving = 0;
    for a in 0..42 {
        for b in a + 1..42 {
            if preserves_design(&Permutation::transposition(42, a, b), &d).unwrap() {
                preserving += 1;
            }
        }
    }
    assert_eq!(preserving, 0);
    let g = psl2(41).unwrap();
    assert!(!g.contains(&Permutation::transposition(42, 0, 1)).unwrap());
}

#[test]
fn psl2_5_matches_closure() {
    let g = psl2(5).unwrap();
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = vec![Permutation::identity(6)];
    seen.insert(queue[0].clone());
    while let Some(x) = queue.pop() {
        for s in g.generators() {
            let y = x.then(s);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    assert_eq!(seen.len(), 60);
    assert_eq!(g.order_u128(), Some(60));
    assert_eq!(psl2(3).unwrap().order_u128(), Some(12));
}

#[test]
fn moebius_map_with_infinite_image() {
    // y -> 1 / (1 - y) has b c - a d = 0 - 1 * (-1) = 1
    let m = MoebiusMap::new(41, 1, 0, 1, -1).unwrap();
    let p = moebius_to_permutation(&m);
    assert_eq!(p.apply(1), 41);
    assert_eq!(p.apply(41), 0);
    assert_eq!(p.pow(3), Permutation::identity(42));
}

#[test]
fn automorphism_generators_roundtrip_through_text() {
    let d = design_d();
    let aut = design_automorphism_group(&d);
    let text = permutations_to_string(aut.generators());
    let back = permutations_from_str(&text).unwrap();
    let g = PermutationGroup::new(42, back).unwrap();
    assert_eq!(g.order_u128(), Some(34440));
    let pairs = orbits_on_subsets(&g, 2).unwrap();
    assert_eq!(pairs.sizes(), vec![861]);
    assert_eq!(pairs.total(), binomial(42, 2).unwrap());
}

#[test]
fn cached_distribution_matches_and_detects_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(dir.path());
    let c = c42();
    let first = cache.weight_distribution(&c).unwrap();
    let second = cache.weight_distribution(&c).unwrap();
    assert_eq!(first, second);
    assert_eq!(first, weight_distribution(&c).unwrap());
    let dual_first = cache.weight_distribution(&dual(&c)).unwrap();
    assert_eq!(dual_first, first);
    let words = cache.codewords_of_weight(&c, 10).unwrap();
    assert_eq!(words.len(), 1722);

    let path = cache.entry_path(&Cache::matrix_hash(c.generator()), "weights");
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, text.replacen("\"version\":1", "\"version\":99", 1)).unwrap();
    assert!(cache.weight_distribution(&c).is_err());
}
