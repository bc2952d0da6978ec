//! Stopping-set avoiding automorphism sets for the extended Golay code.
//!
//! Usage: `cargo run --release --example sad_sets`

use stopred::bounds::rho_from_sad;
use stopred::codebook::{code_by_name, fixture};
use stopred::decoder::{tau_perms, verify_pd, verify_sad, wolfmann_perms};
use stopred::stopping::smallest_stopping_set_within;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let wolfmann = fixture("wolfmann")?;
    let h_star = fixture("h24_star")?;
    let code = code_by_name("wolfmann24")?;
    let perms = wolfmann_perms();
    for p in &perms {
        p.check_automorphism(&code)?;
    }

    for s in [7, 8] {
        println!("wolfmann, 14 automorphisms, s = {s}: {:?}", verify_sad(&wolfmann, &perms, s)?);
        println!("h24_star, 23 shifts, s = {s}: {:?}", verify_sad(&h_star, &tau_perms(), s)?);
    }
    println!("implied bound: {}", rho_from_sad(24, 12, 7, perms.len())?.value_string());

    let first: Vec<usize> = (0..15).collect();
    println!("stopping set within columns 0..14: {:?}", smallest_stopping_set_within(&wolfmann, &first, 7)?);
    for extra in 15..24 {
        let mut dom = first.clone();
        dom.push(extra);
        println!("  with column {extra}: {:?}", smallest_stopping_set_within(&wolfmann, &dom, 7)?);
    }

    let checks: Vec<usize> = (12..24).collect();
    for s in 1..=4 {
        println!("PD onto positions 12..23, s = {s}: {:?}", verify_pd(24, &checks, &perms, s)?);
    }
    Ok(())
}
