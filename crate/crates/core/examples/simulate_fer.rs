//! Monte Carlo frame error rate of automorphism group decoding on the extended
//! Golay code, next to the exact value from exhaustive enumeration.
//!
//! Usage: `cargo run --release --example simulate_fer [trials] [seed]`

use stopred::codebook::{code_by_name, fixture};
use stopred::harness::{analytic_fer, cmd_enumerate, cmd_simulate, Compiled, DecoderKind, DecoderSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let trials: u64 = args.next().map_or(Ok(200_000), |s| s.parse())?;
    let seed: u64 = args.next().map_or(Ok(1), |s| s.parse())?;

    let code = code_by_name("golay24")?;
    let h = fixture("h24_star")?;
    let eps = [0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4];
    println!("{:>6} {:>8} {:>12} {:>12} {:>12} {:>10}", "ep", "decoder", "FER sim", "FER exact", "BER sim", "avg iter");
    for kind in [DecoderKind::Bp, DecoderKind::AgdA, DecoderKind::Ml] {
        let spec = DecoderSpec::new(kind);
        let mut report = cmd_enumerate(&code, &h, spec, 0..=12)?;
        report.close_beyond(code.redundancy());
        let dec = Compiled::new(&code, &h, spec)?;
        for r in cmd_simulate(&code, &dec, &eps, trials, seed)? {
            println!(
                "{:>6} {:>8} {:>12.4e} {:>12.4e} {:>12.4e} {:>10.3}",
                r.ep,
                spec.id(),
                r.fer(),
                analytic_fer(&report, r.ep)?,
                r.ber(code.n),
                r.avg_iterations
            );
        }
    }
    Ok(())
}
