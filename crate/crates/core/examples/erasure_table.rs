//! Uncorrectable erasure-pattern counts of the extended Golay code under
//! several decoders, for erasure weights 3 through 12.
//!
//! Usage: `cargo run --release --example erasure_table [sigma_max]`

use stopred::codebook::{code_by_name, fixture};
use stopred::decoder::wolfmann_stack;
use stopred::harness::{cmd_enumerate, DecoderKind, DecoderSpec, ErasureReport};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sigma_max: usize = std::env::args().nth(1).map_or(Ok(12), |s| s.parse())?;
    let golay = code_by_name("golay24")?;
    let wolfmann = code_by_name("wolfmann24")?;
    let h_star = fixture("h24_star")?;
    let h_w = wolfmann_stack()?;

    let columns: Vec<(&str, ErasureReport)> = vec![
        ("bp h24*", cmd_enumerate(&golay, &h_star, DecoderSpec::new(DecoderKind::Bp), 3..=sigma_max)?),
        ("agd-a h24*", cmd_enumerate(&golay, &h_star, DecoderSpec::new(DecoderKind::AgdA), 3..=sigma_max)?),
        ("bp H_W", cmd_enumerate(&wolfmann, &h_w, DecoderSpec::new(DecoderKind::Bp), 3..=sigma_max)?),
        ("ml", cmd_enumerate(&golay, &h_star, DecoderSpec::new(DecoderKind::Ml), 3..=sigma_max)?),
    ];

    print!("{:>5}", "sigma");
    for (name, _) in &columns {
        print!("{name:>12}");
    }
    println!();
    for sigma in 3..=sigma_max {
        print!("{sigma:>5}");
        for (_, r) in &columns {
            print!("{:>12}", r.count(sigma).unwrap_or(0));
        }
        println!();
    }
    Ok(())
}
