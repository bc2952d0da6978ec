use stopred::codebook::{code_by_name, named_cog};
use stopred::construct::{cyclic_pcm, extend_with_parity, search_min_rows};
use stopred::decoder::{verify_pd, wolfmann_perms};
use stopred::stopping::{stopping_distance, StoppingDistance};

#[test]
fn named_cog_row_counts() {
    let golay = code_by_name("golay23").unwrap();
    let bch31 = code_by_name("bch31").unwrap();
    let cases: [(&stopred::codebook::Code, &str, [Option<usize>; 4]); 7] = [
        (&golay, "golay23-A", [Some(11), Some(16), Some(18), Some(23)]),
        (&golay, "golay23-B", [Some(13), Some(15), Some(19), Some(23)]),
        (&golay, "golay23-D", [Some(11), Some(16), Some(21), None]),
        (&bch31, "bch31-A", [Some(15), Some(18), Some(19), Some(21)]),
        (&bch31, "bch31-B", [Some(15), Some(16), Some(20), Some(22)]),
        (&bch31, "bch31-C", [Some(15), Some(15), Some(20), Some(28)]),
        (&bch31, "bch31-D", [Some(15), Some(16), Some(21), Some(26)]),
    ];
    for (code, name, want) in cases {
        let r = search_min_rows(code, &[named_cog(name).unwrap()], &[4, 5, 6, 7], code.n).unwrap();
        assert_eq!(r.minimum, want.to_vec(), "{name}");
    }
}

#[test]
fn cyclic_rows_match_exhaustive_distance() {
    let golay = code_by_name("golay23").unwrap();
    let cog = named_cog("golay23-A").unwrap();
    let at15 = cyclic_pcm(&golay, &cog, 15).unwrap();
    assert_eq!(stopping_distance(&at15.matrix, 5).unwrap(), StoppingDistance::Exact(4));
    let at16 = cyclic_pcm(&golay, &cog, 16).unwrap();
    assert!(stopping_distance(&at16.matrix, 4).unwrap().at_least(5));
}

#[test]
fn parity_extension_stays_in_the_dual() {
    let golay = code_by_name("golay23").unwrap();
    let ext = code_by_name("golay24").unwrap();
    let h = cyclic_pcm(&golay, &named_cog("golay23-A").unwrap(), 23).unwrap().matrix;
    let h24 = extend_with_parity(&h, &ext).unwrap();
    assert_eq!(h24.ncols(), 24);
    assert_eq!(h24.rank(), 12 - 1);
}

#[test]
fn wolfmann_perms_cover_small_sets_into_the_last_half() {
    let last: Vec<usize> = (12..24).collect();
    let r = verify_pd(24, &last, &wolfmann_perms(), 1).unwrap();
    assert!(r.holds);
}
