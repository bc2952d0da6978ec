//! Size-3 stopping sets of Hamming parity-check matrices: standard, generic
//! erasure-set rows and cyclic rows, side by side.
//!
//! Usage: `cargo run --release --example hamming_stopping_sets`

use stopred::codebook::{hamming_standard_pcm, named_cog};
use stopred::construct::{apply_generic_set, cyclic_matrix, generic_erasure_set};
use stopred::stopping::count_unresolved;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (m, name, extra) in [(6u32, "hamming63", vec![16, 17, 18]), (7, "hamming127", vec![22, 26])] {
        let std = hamming_standard_pcm(m)?;
        let generic = apply_generic_set(&generic_erasure_set(m as usize, 3)?, &std)?;
        let cog = named_cog(name)?;
        println!("{name}");
        println!("  standard {:>3} rows: {}", std.nrows(), count_unresolved(&std, 3)?);
        println!("  generic  {:>3} rows: {}", generic.nrows(), count_unresolved(&generic, 3)?);
        for rows in std::iter::once(m as usize).chain(extra) {
            println!("  cyclic   {rows:>3} rows: {}", count_unresolved(&cyclic_matrix(&cog, rows), 3)?);
        }
    }
    Ok(())
}
