//! Generalized Hollmann–Tolhuizen matrices for the [127,113,5] BCH code,
//! compared with cyclic matrices built from the printed cogs.

use std::time::Instant;

use stopred::codebook::{code_by_name, named_cog};
use stopred::construct::{generalized_ht_bch, search_min_rows, GhtPool};

fn main() -> stopred::error::Result<()> {
    let pool = match std::env::args().nth(1).as_deref() {
        Some("full") => GhtPool::FullDual,
        Some("blocks") => GhtPool::BlockSums,
        Some("pairs") => GhtPool::RowPairs,
        Some(s) => GhtPool::MinWeightPlus(s.parse().unwrap_or(0)),
        None => GhtPool::MinWeightPlus(0),
    };
    let t = Instant::now();
    let ght = generalized_ht_bch(7, pool)?;
    println!(
        "generalized HT ({pool:?}): steps {:?}, distance 4 at {} rows, distance 5 at {} rows ({:.1?})",
        ght.step_rows,
        ght.rows_distance4,
        ght.rows_distance5,
        t.elapsed()
    );
    if std::env::args().any(|a| a == "--cogs") {
        let code = code_by_name("bch127")?;
        for name in ["bch127-A", "bch127-B", "bch127-C", "bch127-D"] {
            let cog = named_cog(name)?;
            let t = Instant::now();
            let r = search_min_rows(&code, &[cog], &[4, 5], 127)?;
            println!("{name}: {:?} ({:.1?})", r.per_cog[0].min_rows, t.elapsed());
        }
    }
    Ok(())
}
