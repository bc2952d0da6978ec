use proptest::prelude::*;

use stopred::codebook::{code_by_name, fixture, Code};
use stopred::combin::{colex_rank, colex_unrank, mask_indices, par_count_subsets, rank_ranges, Subsets};
use stopred::decoder::{peel_residual, Decoder, MlDecoder, Perm, Strategy as Agd};
use stopred::gf2::{macwilliams, weight_enumerator, BitMatrix};
use stopred::harness::{cmd_enumerate, DecoderKind, DecoderSpec};
use stopred::stopping::MaskMatrix;

fn random_matrix(rows: usize, n: usize, seeds: &[u128]) -> BitMatrix {
    let full = (1u128 << n) - 1;
    let masks: Vec<u128> = seeds.iter().take(rows).map(|s| s & full).collect();
    BitMatrix::from_masks(n, &masks)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn residual_is_a_stopping_set_inside_the_pattern(seeds in prop::collection::vec(any::<u128>(), 8), e in any::<u16>()) {
        let h = random_matrix(8, 16, &seeds);
        let mm = MaskMatrix::new(&h).unwrap();
        let e = e as u128;
        let r = peel_residual(&mm.rows, e);
        prop_assert_eq!(r & !e, 0);
        prop_assert!(r == 0 || mm.is_stopping(r));
        // any stopping set inside e survives peeling
        for s in [r, e] {
            if s != 0 && mm.is_stopping(s) {
                prop_assert_eq!(peel_residual(&mm.rows, e) & s, s);
            }
        }
    }

    #[test]
    fn macwilliams_round_trip(seeds in prop::collection::vec(any::<u128>(), 6)) {
        let g = random_matrix(6, 14, &seeds);
        let code = Code::from_generator("random", &g);
        let k = g.rank();
        let a = weight_enumerator(&code.generator).unwrap();
        let b = weight_enumerator(&code.parity).unwrap();
        prop_assert_eq!(macwilliams(&b, 14, k).unwrap(), a.clone());
        prop_assert_eq!(macwilliams(&a, 14, 14 - k).unwrap(), b);
    }

    #[test]
    fn colex_round_trip(n in 1usize..60, k in 0usize..8, r in any::<u64>()) {
        let k = k.min(n);
        let total = stopred::combin::binomial(n, k);
        let rank = r as u128 % total;
        let m = colex_unrank(rank, k);
        prop_assert_eq!(m.count_ones() as usize, k);
        prop_assert!(m >> n == 0);
        prop_assert_eq!(colex_rank(m), rank);
    }

    #[test]
    fn perm_inverse_and_mask_action(images in Just((0..20).collect::<Vec<usize>>()).prop_shuffle(), m in any::<u32>()) {
        let p = Perm::from_images(images).unwrap();
        let m = (m & 0xFFFFF) as u128;
        prop_assert!(p.compose(&p.inverse()).is_identity());
        prop_assert_eq!(p.inverse().apply_mask(p.apply_mask(m)), m);
        let expected = mask_indices(m).into_iter().fold(0u128, |a, i| a | 1u128 << p.apply(i));
        prop_assert_eq!(p.apply_mask(m), expected);
    }

    #[test]
    fn decoders_never_output_wrong_bits(e in any::<u32>(), msg in any::<u16>()) {
        let code = code_by_name("golay24").unwrap();
        let h = fixture("h24_star").unwrap();
        let gen = code.generator.to_masks().unwrap();
        let word = gen.iter().enumerate().filter(|(i, _)| msg >> i & 1 == 1).fold(0u128, |a, (_, &g)| a ^ g);
        let e = (e & 0xFF_FFFF) as u128;
        let bp = Decoder::bp(&h).unwrap();
        let agd = Decoder::agd_cyclic(&h, &code, Agd::A).unwrap().with_guessing(2);
        let ml = MlDecoder::new(&code).unwrap();
        for out in [bp.decode(e, word), agd.decode(e, word), ml.decode(e, word)] {
            let est = out.estimate.to_mask().unwrap();
            let resolved = e & !stopred::combin::indices_mask(&out.residual);
            prop_assert_eq!((est ^ word) & resolved, 0);
            prop_assert_eq!((est ^ word) & !e, 0);
        }
        prop_assert_eq!(ml.correctable(e), ml.decode(e, word).residual.is_empty());
        prop_assert!(ml.decode(e, word).residual.len() <= agd.decode(e, word).residual.len());
    }
}

#[test]
fn partitioned_counts_sum_to_the_serial_count() {
    let h = fixture("h24_star").unwrap();
    let mm = MaskMatrix::new(&h).unwrap();
    let fails = |e: u128| peel_residual(&mm.rows, e) != 0;
    let total = stopred::combin::binomial(24, 6);
    let serial = Subsets::all(24, 6).unwrap().filter(|&e| fails(e)).count() as u128;
    for parts in [1, 5, 64] {
        let split: u128 = rank_ranges(total, parts)
            .into_iter()
            .map(|(s, l)| Subsets::range(24, 6, s, l).unwrap().filter(|&e| fails(e)).count() as u128)
            .sum();
        assert_eq!(split, serial);
    }
    assert_eq!(par_count_subsets(24, 6, fails).unwrap(), serial);
}

#[test]
fn uncorrectable_fraction_is_monotone() {
    let code = code_by_name("golay24").unwrap();
    let h = fixture("h24_star").unwrap();
    for kind in [DecoderKind::Bp, DecoderKind::AgdA, DecoderKind::Ml] {
        let mut r = cmd_enumerate(&code, &h, DecoderSpec::new(kind), 0..=9).unwrap();
        r.close_beyond(12);
        let fractions: Vec<f64> = r.rows.iter().filter(|row| row.sigma <= 9).map(|row| row.uncorrectable as f64 / row.total as f64).collect();
        assert!(fractions.windows(2).all(|w| w[0] <= w[1]), "{kind:?}: {fractions:?}");
    }
}
