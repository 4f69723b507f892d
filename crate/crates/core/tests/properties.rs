use bcrystal::alphabet::Parity;
use bcrystal::characters::super_schur;
use bcrystal::lr::{enumerate_lr, is_lr, lr_coefficient, sharp, sharp_inverse};
use bcrystal::oracle::{bracket_rewrite, delta_scaled_brute, insertion_is_valid, lr_coefficient_brute};
use bcrystal::rsk::{dual_by_replay, gl_op, rsk, rsk_inverse, FoldedMatrix, SupportMatrix};
use bcrystal::signature::bracket;
use bcrystal::stats::delta_scaled;
use bcrystal::tableau::{enumerate_sst_upto, insert};
use bcrystal::{generate_crystal, CrystalGraph, Dir, Eps, GradedAlphabet, Ordinary, Partition, ReadMode, Sign, SkewShape, Tableau};
use proptest::prelude::*;

fn small_partitions(max: usize) -> Vec<Partition> {
    (0..=max).flat_map(Partition::all_of_size).collect()
}

proptest! {
    #[test]
    fn insertion_keeps_semistandard(w in prop::collection::vec(1u32..6, 0..14)) {
        prop_assert!(insertion_is_valid(&Tableau::empty(), &w));
        let mut t = Tableau::empty();
        t.insert_word(&w, &Ordinary);
        prop_assert_eq!(t.num_cells(), w.len());
        for a in 1..6 {
            prop_assert_eq!(t.count(a), w.iter().filter(|&&x| x == a).count());
        }
    }

    #[test]
    fn column_word_reinserts_to_itself(w in prop::collection::vec(1u32..5, 0..12)) {
        let mut t = Tableau::empty();
        t.insert_word(&w, &Ordinary);
        let mut u = Tableau::empty();
        u.insert_word(&t.col_word(), &Ordinary);
        prop_assert_eq!(u, t);
    }

    #[test]
    fn stack_bracket_equals_rewriting(s in prop::collection::vec(0u8..3, 0..20), minus_first in any::<bool>()) {
        let signs: Vec<Sign> = s.iter().map(|&x| [Sign::Plus, Sign::Minus, Sign::Dot][x as usize]).collect();
        let opener = if minus_first { Sign::Minus } else { Sign::Plus };
        prop_assert_eq!(bracket(&signs, opener), bracket_rewrite(&signs, opener));
    }

    #[test]
    fn rsk_round_trip(t in prop::collection::vec((1u32..6, 1u32..6, 1u32..4), 0..8)) {
        let a = SupportMatrix::from_triples(&t).unwrap();
        let (p, q) = rsk(&a);
        prop_assert_eq!(p.outer(), q.outer());
        prop_assert_eq!(rsk_inverse(&p, &q).unwrap(), a);
    }

    #[test]
    fn symmetric_matrices_give_equal_tableaux(t in prop::collection::vec((1u32..5, 1u32..5, 1u32..3), 0..6)) {
        let mut a = SupportMatrix::zero();
        for (i, j, c) in t {
            a.add(i, j, c);
            if i != j {
                a.add(j, i, c);
            }
        }
        let (p, q) = rsk(&a);
        prop_assert_eq!(p, q);
    }

    #[test]
    fn gl_raise_inverts_lower(t in prop::collection::vec((1u32..5, 1u32..5, 1u32..3), 0..6), i in -3i32..4) {
        let a = SupportMatrix::from_triples(&t).unwrap();
        if let Some(b) = gl_op(&a, i, Dir::Lower) {
            prop_assert_eq!(gl_op(&b, i, Dir::Raise), Some(a));
        }
    }
}

#[test]
fn delta_agrees_with_both_reading_words() {
    for lambda in small_partitions(6) {
        for mu in small_partitions(lambda.size()).into_iter().filter(|m| lambda.contains(m) && m.is_in_px(Eps::B)) {
            for nu in Partition::all_of_size(lambda.size() - mu.size()) {
                for u in enumerate_lr(&lambda, &mu, &nu) {
                    let d = delta_scaled(&u.base);
                    assert_eq!(d, delta_scaled_brute(&u.base, ReadMode::Col), "{}", u.base);
                    assert_eq!(d, delta_scaled_brute(&u.base, ReadMode::Row), "{}", u.base);
                }
            }
        }
    }
}

#[test]
fn lr_coefficients_match_insertion_count_and_are_symmetric() {
    let parts = small_partitions(6);
    for lambda in &parts {
        for mu in parts.iter().filter(|m| lambda.contains(m)) {
            for nu in Partition::all_of_size(lambda.size() - mu.size()) {
                let c = lr_coefficient(lambda, mu, &nu);
                assert_eq!(c, lr_coefficient_brute(lambda, mu, &nu), "λ={lambda} μ={mu} ν={nu}");
                assert_eq!(c, lr_coefficient(lambda, &nu, mu), "λ={lambda} μ={mu} ν={nu}");
            }
        }
    }
}

#[test]
fn sharp_round_trips_up_to_eight_cells() {
    let mut seen = 0;
    for lambda in small_partitions(8) {
        for mu in small_partitions(lambda.size()).into_iter().filter(|m| lambda.contains(m)) {
            for nu in Partition::all_of_size(lambda.size() - mu.size()) {
                for u in enumerate_lr(&lambda, &mu, &nu) {
                    let v = sharp(&u);
                    assert_eq!(v.outer(), &nu);
                    assert!(v.is_semistandard(&Ordinary));
                    let (p, _) = insert(&Tableau::highest(&mu), &v);
                    assert_eq!(p, Tableau::highest(&lambda));
                    assert_eq!(sharp_inverse(&v, &mu).unwrap(), u);
                    seen += 1;
                }
            }
        }
    }
    assert!(seen > 1000);
}

#[test]
fn lr_enumeration_only_yields_lr_tableaux() {
    let all = enumerate_lr(&Partition::from([4, 3, 2]), &Partition::from([2, 1]), &Partition::from([3, 2, 1]));
    assert!(!all.is_empty());
    assert!(all.iter().all(|u| is_lr(&u.base) && u.base.is_semistandard(&Ordinary)));
}

#[test]
fn super_schur_is_symmetric_within_parities() {
    let a = GradedAlphabet::from_parities(&[Parity::Even, Parity::Odd, Parity::Even, Parity::Odd]);
    for shape in small_partitions(4) {
        let s = super_schur(&SkewShape::straight(shape.clone()), &a, 6);
        for ((q, e), c) in s.terms() {
            let swapped_even = vec![e[2], e[1], e[0], e[3]];
            let swapped_odd = vec![e[0], e[3], e[2], e[1]];
            assert_eq!(&s.coeff(*q, &swapped_even), c, "shape {shape}");
            assert_eq!(&s.coeff(*q, &swapped_odd), c, "shape {shape}");
        }
    }
}

#[test]
fn super_schur_depends_only_on_parity_counts() {
    let mixed = GradedAlphabet::mixed(2, 2);
    let shuffled = GradedAlphabet::from_parities(&[Parity::Odd, Parity::Even, Parity::Odd, Parity::Even]);
    for shape in small_partitions(4) {
        let s1 = super_schur(&SkewShape::straight(shape.clone()), &mixed, 6);
        let s2 = super_schur(&SkewShape::straight(shape.clone()), &shuffled, 6);
        // odd letters 3,4 of the first alphabet are letters 1,3 of the second
        for ((q, e), c) in s1.terms() {
            let renamed = vec![e[2], e[0], e[3], e[1]];
            assert_eq!(&s2.coeff(*q, &renamed), c, "shape {shape}");
        }
        assert_eq!(s1.terms().len(), s2.terms().len());
    }
}

#[test]
fn replayed_duals_are_entrywise() {
    for shape in small_partitions(5) {
        for t in enumerate_sst_upto(&SkewShape::straight(shape), 4) {
            assert_eq!(dual_by_replay(&t), t);
        }
    }
}

#[test]
fn folded_matrix_rejects_bad_input() {
    let a = SupportMatrix::from_triples(&[(1, 2, 1)]).unwrap();
    assert!(FoldedMatrix::new(a, Eps::B).is_err());
    let d = SupportMatrix::from_triples(&[(2, 2, 1)]).unwrap();
    assert!(FoldedMatrix::new(d.clone(), Eps::C).is_err());
    assert!(FoldedMatrix::new(d, Eps::B).is_ok());
}

#[test]
fn text_formats_round_trip() {
    let t: Tableau = "1,4,.,.,.\n2,3,.,.\n1,2\n1\n".parse().unwrap();
    assert_eq!(t.to_string().parse::<Tableau>().unwrap(), t);
    let a = SupportMatrix::from_triples(&[(2, 1, 3), (1, 3, 1)]).unwrap();
    assert_eq!(a.to_string(), "1 3 1\n2 1 3\n");
    assert_eq!(a.to_string().parse::<SupportMatrix>().unwrap(), a);
    assert!("1 2".parse::<SupportMatrix>().is_err());
    assert!("0 1 1".parse::<SupportMatrix>().is_err());
}

#[test]
fn graph_exports_round_trip() {
    for (lambda, n, eps, k) in [(Partition::empty(), 1, Eps::B, 2), (Partition::from([1]), 2, Eps::C, 3)] {
        let g = generate_crystal(&lambda, n, eps, k).unwrap();
        let from_json = CrystalGraph::from_json(&g.to_json()).unwrap();
        assert_eq!(from_json.vertices, g.vertices);
        assert_eq!(from_json.edges, g.edges);
        let from_dot = CrystalGraph::from_dot(&g.to_dot()).unwrap();
        assert_eq!(from_dot.vertices, g.vertices);
        assert_eq!(from_dot.edges, g.edges);
        assert_eq!(from_dot.highest, g.highest);
    }
}

#[test]
fn generation_is_deterministic() {
    let a = generate_crystal(&Partition::from([1]), 3, Eps::B, 3).unwrap();
    let b = generate_crystal(&Partition::from([1]), 3, Eps::B, 3).unwrap();
    assert_eq!(a.to_dot(), b.to_dot());
}

#[test]
fn invalid_parameters_name_the_constraint() {
    let e = generate_crystal(&Partition::from([2]), 1, Eps::B, 2).unwrap_err();
    assert!(e.to_string().contains("2λ₁ ≤ εn"), "{e}");
    assert!(generate_crystal(&Partition::from([1, 1]), 2, Eps::B, 2).is_err());
}
