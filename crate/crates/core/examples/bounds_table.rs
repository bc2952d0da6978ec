//! Stopping redundancy bounds for a few catalog codes.
//!
//! Usage: `cargo run --release --example bounds_table [code ...]`

use stopred::bounds::{schoenheim, ub_sum_rows};
use stopred::codebook::code_by_name;
use stopred::harness::cmd_bounds;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = ["golay23", "bch31", "qr47"].map(String::from).to_vec();
    }
    for name in &names {
        let mut code = code_by_name(name)?;
        let d = code.compute_min_distance()?;
        println!("{name} [{}, {}, {d}]", code.n, code.k);
        for row in cmd_bounds(&mut code, 2..=d)? {
            println!("  ell {:>2}  {:<10} {:<5} {:>8}  {}", row.ell, row.bound.name, row.bound.kind, row.bound.value_string(), row.bound.target);
        }
    }

    // subcode versions: sums of basis rows of a smaller dual
    println!("sum-rows over a 10-dimensional dual subcode, ell 6: {}", ub_sum_rows(10, 6)?.value_string());
    println!("sum-rows over a 10-dimensional dual subcode, ell 5: {}", ub_sum_rows(10, 5)?.value_string());
    println!("schoenheim(24, 12, 8): {}", schoenheim(24, 12, 8)?.value_string());
    Ok(())
}
