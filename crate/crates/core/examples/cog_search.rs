//! Minimal cyclic-matrix row counts for every minimum-weight cog of the
//! Golay and [31,16,7] BCH codes.

use stopred::codebook::{code_by_name, cog_families, cog_orbits, named_cog};
use stopred::construct::search_min_rows;

fn main() -> stopred::error::Result<()> {
    for (name, w, ells) in [("golay23", 8, vec![4, 5, 6, 7]), ("bch31", 8, vec![4, 5, 6, 7])] {
        let code = code_by_name(name)?;
        let mut cogs = cog_orbits(&code.parity, w)?;
        let families = cog_families(&mut cogs);
        let words: Vec<_> = cogs.iter().map(|c| c.word.clone()).collect();
        let report = search_min_rows(&code, &words, &ells, code.n)?;
        println!("{name}: {} cogs of weight {w}, {} families", cogs.len(), families.len());
        for (cog, row) in cogs.iter().zip(&report.per_cog) {
            println!("  family {:?}  [{}]  {:?}", cog.family.unwrap_or(0), row.cog, row.min_rows);
        }
        println!("  minimum {:?}", report.minimum);
    }
    let code = code_by_name("golay23")?;
    let a = named_cog("golay23-A")?;
    let report = search_min_rows(&code, &[a], &[4, 5, 6, 7], 23)?;
    println!("golay23 cog A: {:?}", report.per_cog[0].min_rows);
    Ok(())
}
