use jonesvol_core::braid::{parse_braid, BraidWord, Sign};
use jonesvol_core::invariants::colored_jones;
use jonesvol_core::tensorq::{ColorDim, QExponent};
use num_complex::Complex64;
use proptest::prelude::*;

fn braid_strategy(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        let letter = (1..n as i64, any::<bool>()).prop_map(|(i, pos)| if pos { i } else { -i });
        prop::collection::vec(letter, 0..=max_len)
            .prop_map(move |w| BraidWord::from_signed(&w, Some(n)).unwrap())
    })
}

proptest! {
    #[test]
    fn print_parse_round_trip(b in braid_strategy(6, 12)) {
        let text = b.to_string();
        prop_assert_eq!(parse_braid(&text, Some(b.strands())).unwrap(), b);
    }

    #[test]
    fn stabilization_shifts_writhe(b in braid_strategy(5, 10), pos in any::<bool>()) {
        let sign = if pos { Sign::Pos } else { Sign::Neg };
        let s = b.stabilize(sign);
        prop_assert_eq!(s.writhe(), b.writhe() + sign.as_i32() as i64);
        prop_assert_eq!(s.components(), b.components());
        prop_assert_eq!(s.destabilize().unwrap(), b);
    }

    #[test]
    fn conjugation_preserves_writhe_and_components(
        (b, a) in (2usize..=5).prop_flat_map(|n| (braid_strategy(n, 8).prop_filter("n", move |b| b.strands() == n), braid_strategy(n, 6).prop_filter("n", move |b| b.strands() == n)))
    ) {
        let c = b.conjugate(&a).unwrap();
        prop_assert_eq!(c.writhe(), b.writhe());
        prop_assert_eq!(c.components(), b.components());
    }

    #[test]
    fn walk_preserves_components(b in braid_strategy(4, 8), seed in any::<u64>()) {
        let w = b.random_markov_walk(10, seed);
        prop_assert_eq!(w.components(), b.components());
        prop_assert_eq!(&w, &b.random_markov_walk(10, seed));
        prop_assert!(w.strands() <= 6);
    }

    #[test]
    fn permutation_is_bijective(b in braid_strategy(6, 15)) {
        let p = b.closure_permutation();
        let mut seen = vec![false; b.strands()];
        for &x in p.images() {
            prop_assert!(!seen[x - 1]);
            seen[x - 1] = true;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn colored_jones_is_a_markov_invariant(b in braid_strategy(3, 6), seed in any::<u64>(), re in -0.3f64..0.3, im in 0.2f64..1.2) {
        let q = QExponent::new(Complex64::new(re, im)).unwrap();
        let n = ColorDim::new(2).unwrap();
        let w = b.random_markov_walk_capped(6, seed, 4);
        let j0 = colored_jones(&b, n, q).unwrap().value;
        let j1 = colored_jones(&w, n, q).unwrap().value;
        prop_assert!((j0 - j1).norm() <= 1e-8 * j0.norm().max(1e-300), "{} -> {}: {} vs {}", b, w, j0, j1);
    }

    #[test]
    fn color_one_is_always_one(b in braid_strategy(5, 10)) {
        let q = QExponent::new(Complex64::new(0.2, 0.7)).unwrap();
        let j = colored_jones(&b, ColorDim::new(1).unwrap(), q).unwrap().value;
        prop_assert!((j - 1.0).norm() < 1e-13);
    }
}
