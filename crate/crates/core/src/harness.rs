//! Experiment drivers behind the command-line tool: exhaustive enumeration of
//! uncorrectable erasure patterns, seeded Monte Carlo simulation, analytic
//! frame error rates, bound tables and cog searches, with CSV/JSON output.

use std::fmt::Write as _;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{lb_mu_cds, lb_mu_qr, lb_schwartz_vardy, ub_lll, ub_lll_hp, ub_sum_rows, BoundResult};
use crate::codebook::{cog_families, cog_orbits, singer_difference_set, Code};
use crate::combin::{self, binomial, check_guard, par_count_subsets};
use crate::construct::{search_min_rows, SearchReport};
use crate::decoder::{Decoder, MlDecoder, Strategy, DEFAULT_GUESS_DEPTH};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::stopping::ENUM_GUARD;

/// Output encodings of the tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::UnknownName(s.into())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecoderKind {
    Bp,
    AgdA,
    AgdB,
    Ml,
}

impl FromStr for DecoderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bp" => Ok(DecoderKind::Bp),
            "agd-a" => Ok(DecoderKind::AgdA),
            "agd-b" => Ok(DecoderKind::AgdB),
            "ml" => Ok(DecoderKind::Ml),
            _ => Err(Error::UnknownName(s.into())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DecoderSpec {
    pub kind: DecoderKind,
    pub guess: bool,
}

impl DecoderSpec {
    pub fn new(kind: DecoderKind) -> Self {
        DecoderSpec { kind, guess: false }
    }

    pub fn id(&self) -> String {
        let base = match self.kind {
            DecoderKind::Bp => "bp",
            DecoderKind::AgdA => "agd-a",
            DecoderKind::AgdB => "agd-b",
            DecoderKind::Ml => "ml",
        };
        if self.guess {
            format!("{base}+guess")
        } else {
            base.to_string()
        }
    }
}

/// A decoder ready to run on erasure masks.
#[derive(Clone, Debug)]
pub enum Compiled {
    Iterative(Decoder),
    Ml(MlDecoder),
}

impl Compiled {
    pub fn new(code: &Code, h: &BitMatrix, spec: DecoderSpec) -> Result<Self> {
        if h.ncols() != code.n {
            return Err(Error::LengthMismatch { expected: code.n, got: h.ncols() });
        }
        let d = match spec.kind {
            DecoderKind::Ml => return Ok(Compiled::Ml(MlDecoder::new(code)?)),
            DecoderKind::Bp => Decoder::bp(h)?,
            DecoderKind::AgdA => Decoder::agd_cyclic(h, code, Strategy::A)?,
            DecoderKind::AgdB => Decoder::agd_cyclic(h, code, Strategy::B)?,
        };
        Ok(Compiled::Iterative(if spec.guess { d.with_guessing(DEFAULT_GUESS_DEPTH) } else { d }))
    }

    pub fn fails(&self, erased: u128) -> bool {
        match self {
            Compiled::Iterative(d) => d.fails(erased),
            Compiled::Ml(m) => !m.correctable(erased),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErasureRow {
    pub sigma: usize,
    pub total: u128,
    pub uncorrectable: u128,
}

/// Uncorrectable-pattern counts per erasure weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErasureReport {
    pub code: String,
    pub decoder: String,
    pub n: usize,
    pub rows: Vec<ErasureRow>,
}

impl ErasureReport {
    pub fn count(&self, sigma: usize) -> Option<u128> {
        self.rows.iter().find(|r| r.sigma == sigma).map(|r| r.uncorrectable)
    }

    /// Adds `C(n,σ)` for every missing σ above `redundancy`; such patterns
    /// always contain a codeword support, so no decoder corrects them.
    pub fn close_beyond(&mut self, redundancy: usize) {
        for sigma in redundancy + 1..=self.n {
            if self.count(sigma).is_none() {
                let t = binomial(self.n, sigma);
                self.rows.push(ErasureRow { sigma, total: t, uncorrectable: t });
            }
        }
        self.rows.sort_by_key(|r| r.sigma);
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("sigma,total,uncorrectable\n");
        for r in &self.rows {
            let _ = writeln!(s, "{},{},{}", r.sigma, r.total, r.uncorrectable);
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render(&self, f: Format) -> String {
        match f {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

/// Exact counts of σ-subsets the decoder leaves with a nonempty residual.
pub fn cmd_enumerate(
    code: &Code,
    h: &BitMatrix,
    spec: DecoderSpec,
    sigmas: std::ops::RangeInclusive<usize>,
) -> Result<ErasureReport> {
    let n = code.n;
    if n > 128 {
        return Err(Error::LengthTooLarge(n));
    }
    let total: u128 = sigmas.clone().map(|s| binomial(n, s)).sum();
    check_guard("erasure enumeration", total, ENUM_GUARD)?;
    let dec = Compiled::new(code, h, spec)?;
    let rows = sigmas
        .map(|sigma| {
            Ok(ErasureRow {
                sigma,
                total: binomial(n, sigma),
                uncorrectable: par_count_subsets(n, sigma, |m| dec.fails(m))?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ErasureReport { code: code.name.clone(), decoder: spec.id(), n, rows })
}

/// `Σ_σ count(σ) ep^σ (1-ep)^{n-σ}`; every σ in `0..=n` must be present.
pub fn analytic_fer(report: &ErasureReport, ep: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&ep) {
        return Err(Error::invalid(format!("erasure probability {ep} outside [0, 1]")));
    }
    let n = report.n;
    let mut fer = 0.0;
    for sigma in 0..=n {
        let c = match report.count(sigma) {
            Some(c) => c,
            None if sigma == 0 => 0,
            None => return Err(Error::invalid(format!("report has no count for σ = {sigma}"))),
        };
        fer += c as f64 * ep.powi(sigma as i32) * (1.0 - ep).powi((n - sigma) as i32);
    }
    Ok(fer)
}

/// Monte Carlo result at one erasure probability.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimRecord {
    pub ep: f64,
    pub trials: u64,
    /// Residual erasures counted as half an error each.
    pub bit_errors: f64,
    pub frame_errors: u64,
    pub avg_iterations: f64,
    pub seed: u64,
    /// Recovered bits that disagree with the transmitted word.
    pub wrong_bits: u64,
}

impl SimRecord {
    pub fn ber(&self, n: usize) -> f64 {
        self.bit_errors / (n as f64 * self.trials as f64)
    }

    pub fn fer(&self) -> f64 {
        self.frame_errors as f64 / self.trials as f64
    }
}

pub fn sim_csv(records: &[SimRecord]) -> String {
    let mut s = String::from("ep,trials,bit_errors,frame_errors,avg_iterations,seed\n");
    for r in records {
        let _ = writeln!(s, "{},{},{},{},{},{}", r.ep, r.trials, r.bit_errors, r.frame_errors, r.avg_iterations, r.seed);
    }
    s
}

pub fn render_sim(records: &[SimRecord], f: Format) -> String {
    match f {
        Format::Csv => sim_csv(records),
        Format::Json => serde_json::to_string_pretty(records).expect("records serialize"),
    }
}

/// Trials per independently seeded batch.
pub const SIM_BATCH: u64 = 4096;

#[derive(Clone, Copy, Default)]
struct Tally {
    residual: u64,
    frames: u64,
    iterations: u64,
    wrong: u64,
}

fn batch_rng(seed: u64, ep_index: usize, batch: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&(ep_index as u64).to_le_bytes());
    key[16..24].copy_from_slice(&batch.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

fn run_batch(code_rows: &[u128], n: usize, dec: &Compiled, ep: f64, trials: u64, rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    for _ in 0..trials {
        let mut word = 0u128;
        for &g in code_rows {
            if rng.gen::<bool>() {
                word ^= g;
            }
        }
        let mut erased = 0u128;
        for i in 0..n {
            if rng.gen::<f64>() < ep {
                erased |= 1u128 << i;
            }
        }
        let out = match dec {
            Compiled::Iterative(d) => {
                let order = d.random_order(rng);
                d.decode_with_order(erased, word, &order)
            }
            Compiled::Ml(m) => m.decode(erased, word),
        };
        let est = out.estimate.to_mask().expect("n <= 128");
        let recovered = erased & !combin::indices_mask(&out.residual);
        t.wrong += ((est ^ word) & recovered).count_ones() as u64;
        t.residual += out.residual.len() as u64;
        t.frames += u64::from(!out.success);
        t.iterations += out.iterations as u64;
    }
    t
}

/// Independent BEC trials at each erasure probability; deterministic for a
/// given seed regardless of the worker count.
pub fn cmd_simulate(code: &Code, dec: &Compiled, eps: &[f64], trials: u64, seed: u64) -> Result<Vec<SimRecord>> {
    if trials == 0 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    if code.n > 128 {
        return Err(Error::LengthTooLarge(code.n));
    }
    let rows = code.generator.to_masks()?;
    let batches = trials.div_ceil(SIM_BATCH);
    eps.iter()
        .enumerate()
        .map(|(ei, &ep)| {
            if !(0.0..=1.0).contains(&ep) {
                return Err(Error::invalid(format!("erasure probability {ep} outside [0, 1]")));
            }
            let tallies: Vec<Tally> = combin::pool().install(|| {
                (0..batches)
                    .into_par_iter()
                    .map(|b| {
                        let len = SIM_BATCH.min(trials - b * SIM_BATCH);
                        run_batch(&rows, code.n, dec, ep, len, &mut batch_rng(seed, ei, b))
                    })
                    .collect()
            });
            let sum = tallies.iter().fold(Tally::default(), |a, b| Tally {
                residual: a.residual + b.residual,
                frames: a.frames + b.frames,
                iterations: a.iterations + b.iterations,
                wrong: a.wrong + b.wrong,
            });
            Ok(SimRecord {
                ep,
                trials,
                bit_errors: sum.residual as f64 / 2.0,
                frame_errors: sum.frames,
                avg_iterations: sum.iterations as f64 / trials as f64,
                seed,
                wrong_bits: sum.wrong,
            })
        })
        .collect()
}

/// One line of a bound table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub ell: usize,
    pub bound: BoundResult,
}

/// Every applicable closed-form bound for `ℓ` in `ells`. Bounds needing `d` or
/// `d⊥` are skipped when neither side of the code is small enough to enumerate.
pub fn cmd_bounds(code: &mut Code, ells: std::ops::RangeInclusive<usize>) -> Result<Vec<BoundRow>> {
    let (n, k) = (code.n, code.generator.nrows());
    let too_large = |e: &Error| matches!(e, Error::DimensionTooLarge { .. } | Error::GuardExceeded { .. });
    let d = match code.compute_min_distance() {
        Ok(d) => Some(d),
        Err(e) if too_large(&e) => None,
        Err(e) => return Err(e),
    };
    let d_dual = match code.dual_weight_enumerator() {
        Ok(we) => Some(we.min_distance().ok_or_else(|| Error::invalid("dual code is trivial"))?),
        Err(e) if too_large(&e) => None,
        Err(e) => return Err(e),
    };
    let mut out = Vec::new();
    for ell in ells {
        let mut push = |b: Result<BoundResult>| {
            if let Ok(bound) = b {
                out.push(BoundRow { ell, bound });
            }
        };
        if let Some(dd) = d_dual {
            push(lb_schwartz_vardy(n, k, dd, ell));
        }
        if let Some(d) = d {
            push(ub_lll(n, k, d, ell));
            push(ub_lll_hp(n, k, d, ell, 1e-3));
        }
        push(ub_sum_rows(n - k, ell));
        if code.name.starts_with("qr") || code.name == "golay23" {
            push(lb_mu_qr(n, ell));
        }
        if code.name.starts_with("cds") {
            let s = (1..8).find(|&s| (1usize << (2 * s)) + (1 << s) + 1 == n);
            if let Some(ds) = s.and_then(|s| singer_difference_set(s).ok()) {
                push(lb_mu_cds(n, ds.elements.len(), ds.lambda, ell));
            }
        }
    }
    Ok(out)
}

pub fn bounds_csv(rows: &[BoundRow]) -> String {
    let mut s = String::from("ell,bound,kind,target,value\n");
    for r in rows {
        let _ = writeln!(s, "{},{},{},{},{}", r.ell, r.bound.name, r.bound.kind, r.bound.target, r.bound.value_string());
    }
    s
}

pub fn render_bounds(rows: &[BoundRow], f: Format) -> String {
    match f {
        Format::Csv => bounds_csv(rows),
        Format::Json => serde_json::to_string_pretty(rows).expect("rows serialize"),
    }
}

/// Cog search with family ids.
#[derive(Clone, Debug, Serialize)]
pub struct CogTable {
    pub families: Vec<usize>,
    pub search: SearchReport,
}

/// Minimal cyclic row counts for every minimum-weight cog of a cyclic code.
pub fn cmd_search(code: &Code, ells: &[usize], m_max: usize) -> Result<CogTable> {
    if !code.cyclic {
        return Err(Error::invalid(format!("{} is not cyclic", code.name)));
    }
    let d_dual = code
        .dual_weight_enumerator()?
        .min_distance()
        .ok_or_else(|| Error::invalid("dual code is trivial"))?;
    let mut cogs = cog_orbits(&code.parity.row_basis(), d_dual)?;
    cog_families(&mut cogs);
    let words: Vec<_> = cogs.iter().map(|c| c.word.clone()).collect();
    Ok(CogTable {
        families: cogs.iter().map(|c| c.family.unwrap_or(0)).collect(),
        search: search_min_rows(code, &words, ells, m_max)?,
    })
}

pub fn search_csv(t: &CogTable) -> String {
    let mut s = String::from("cog,weight,family");
    for ell in &t.search.ells {
        let _ = write!(s, ",m_{ell}");
    }
    s.push('\n');
    let cell = |v: &Option<usize>| v.map_or_else(|| "none".to_string(), |m| m.to_string());
    for (c, fam) in t.search.per_cog.iter().zip(&t.families) {
        let _ = write!(s, "{},{},{}", c.cog, c.weight, fam);
        for v in &c.min_rows {
            let _ = write!(s, ",{}", cell(v));
        }
        s.push('\n');
    }
    s.push_str("minimum,,");
    for v in &t.search.minimum {
        let _ = write!(s, ",{}", cell(v));
    }
    s.push('\n');
    s
}

pub fn render_search(t: &CogTable, f: Format) -> String {
    match f {
        Format::Csv => search_csv(t),
        Format::Json => serde_json::to_string_pretty(t).expect("table serializes"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codebook::hamming;

    #[test]
    fn analytic_fer_zero_counts() {
        let mut r = ErasureReport { code: "x".into(), decoder: "bp".into(), n: 4, rows: Vec::new() };
        for sigma in 0..=4 {
            r.rows.push(ErasureRow { sigma, total: binomial(4, sigma), uncorrectable: 0 });
        }
        assert_eq!(analytic_fer(&r, 0.3).unwrap(), 0.0);
        r.rows.pop();
        assert!(analytic_fer(&r, 0.3).is_err());
    }

    #[test]
    fn simulation_at_zero_erasure() {
        let code = hamming(3).unwrap();
        let dec = Compiled::new(&code, &code.parity, DecoderSpec::new(DecoderKind::Bp)).unwrap();
        let rec = cmd_simulate(&code, &dec, &[0.0], 1000, 7).unwrap();
        assert_eq!(rec[0].frame_errors, 0);
        assert_eq!(rec[0].bit_errors, 0.0);
    }

    #[test]
    fn simulation_is_deterministic() {
        let code = hamming(4).unwrap();
        let dec = Compiled::new(&code, &code.parity, DecoderSpec::new(DecoderKind::Bp)).unwrap();
        let a = cmd_simulate(&code, &dec, &[0.2], 10_000, 3).unwrap();
        let b = cmd_simulate(&code, &dec, &[0.2], 10_000, 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a[0].wrong_bits, 0);
    }

    #[test]
    fn enumerate_closes_beyond_redundancy() {
        let code = hamming(3).unwrap();
        let mut r = cmd_enumerate(&code, &code.parity, DecoderSpec::new(DecoderKind::Ml), 0..=3).unwrap();
        r.close_beyond(3);
        assert_eq!(r.count(3), Some(7));
        assert_eq!(r.count(4), Some(35));
        assert!(r.to_csv().starts_with("sigma,total,uncorrectable\n0,1,0\n"));
    }
}
