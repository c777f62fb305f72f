use koszul::complex::SimplicialComplex;
use koszul::koszul::{build_W, hilbert_series_combinatorial, top_module_is_kernel};
use koszul::verify::{corpus, random_skeleton_complete, skeleton_corpus};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn top_module_has_no_incoming_boundaries() {
    for c in skeleton_corpus(11, 40, 6) {
        assert!(top_module_is_kernel(&c).unwrap(), "{c}");
    }
    assert!(top_module_is_kernel(&SimplicialComplex::cycle(5).unwrap()).unwrap());
}

#[test]
fn text_and_json_formats_round_trip() {
    for c in corpus(5, 50, 7) {
        assert_eq!(SimplicialComplex::parse(&c.to_text()).unwrap(), c);
        let json = serde_json::to_string(&c.to_json_value()).unwrap();
        assert_eq!(SimplicialComplex::parse(&json).unwrap(), c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn skeleton_complete_vanishing(seed in any::<u64>(), n in 3usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = (seed as usize % (n - 1)) + 1;
        let c = random_skeleton_complete(&mut rng, n, d);
        prop_assert_eq!(c.skeleton_complete_degree().unwrap(), Some(d));
        for i in 1..=n {
            let zero = hilbert_series_combinatorial(&c, i).unwrap().is_zero();
            prop_assert_eq!(zero, build_W(&c, i).unwrap().is_zero());
            if i != d && i != d + 1 {
                prop_assert!(zero);
            }
        }
    }
}
