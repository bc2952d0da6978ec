use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use stopred::codebook::{code_by_name, fixture, named_cog, parse_octal_cog, Code, FIXTURE_NAMES};
use stopred::construct::{
    apply_generic_set, closure_sums, cyclic_pcm, generalized_ht_bch, generic_erasure_set, ConstructionReport, GhtPool,
};
use stopred::decoder::{verify_pd, verify_sad, wolfmann_perms, wolfmann_stack, Perm, tau_perms};
use stopred::error::{Error, Result};
use stopred::gf2::{BitMatrix, BitWord};
use stopred::harness::{
    cmd_bounds, cmd_enumerate, cmd_search, cmd_simulate, render_bounds, render_search, render_sim, Compiled,
    DecoderKind, DecoderSpec, Format,
};

#[derive(Parser)]
#[command(name = "stopred", version, about = "Stopping redundancy and permutation decoding experiments")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact uncorrectable erasure-pattern counts per weight.
    Enumerate(EnumerateArgs),
    /// Monte Carlo BER/FER on the erasure channel.
    Simulate(SimulateArgs),
    /// Closed-form stopping redundancy bounds.
    Bounds(BoundsArgs),
    /// Minimal cyclic row counts for every cog orbit.
    Search(SearchArgs),
    /// Build a redundant parity-check matrix.
    Construct(ConstructArgs),
    /// Check that permutations of a matrix form an s-SAD set.
    VerifySad(VerifySadArgs),
    /// Check that permutations form an s-PD set for given check positions.
    VerifyPd(VerifyPdArgs),
}

#[derive(Args)]
struct Common {
    /// Catalog code name, e.g. golay24, bch31, hamming63.
    #[arg(long)]
    code: String,
    /// Parity-check matrix: a text file, a fixture name or `wolfmann-stack`.
    #[arg(long)]
    matrix: Option<String>,
    #[arg(long, value_enum, default_value_t = Fmt::Csv)]
    format: Fmt,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fmt {
    Csv,
    Json,
}

impl From<Fmt> for Format {
    fn from(f: Fmt) -> Self {
        match f {
            Fmt::Csv => Format::Csv,
            Fmt::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Dec {
    Bp,
    AgdA,
    AgdB,
    Ml,
}

impl From<Dec> for DecoderKind {
    fn from(d: Dec) -> Self {
        match d {
            Dec::Bp => DecoderKind::Bp,
            Dec::AgdA => DecoderKind::AgdA,
            Dec::AgdB => DecoderKind::AgdB,
            Dec::Ml => DecoderKind::Ml,
        }
    }
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value_t = Dec::Bp)]
    decoder: Dec,
    /// Add guessing of unresolved bits.
    #[arg(long)]
    guess: bool,
    /// Largest erasure weight; beyond n-k every pattern is counted as uncorrectable.
    #[arg(long)]
    sigma_max: Option<usize>,
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value_t = Dec::Bp)]
    decoder: Dec,
    #[arg(long)]
    guess: bool,
    /// Comma-separated erasure probabilities.
    #[arg(long, value_delimiter = ',', default_value = "0.1,0.2,0.3")]
    ep: Vec<f64>,
    #[arg(long, default_value_t = 100_000)]
    trials: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value_t = 2)]
    ell_min: usize,
    /// Defaults to the minimum distance.
    #[arg(long)]
    ell_max: Option<usize>,
}

#[derive(Args)]
struct SearchArgs {
    #[command(flatten)]
    common: Common,
    /// Comma-separated target stopping distances; defaults to 4..=d.
    #[arg(long, value_delimiter = ',')]
    ell: Vec<usize>,
    /// Largest row count tried; defaults to n.
    #[arg(long)]
    m_max: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Cyclic,
    Generic,
    Ght,
    Closure,
}

#[derive(Clone, Copy, ValueEnum)]
enum Pool {
    Min,
    Full,
    Blocks,
    Pairs,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum)]
    method: Method,
    /// Cog in octal digits, or a named cog such as golay23-A.
    #[arg(long)]
    cog: Option<String>,
    /// Row count for `cyclic`, field degree for `ght`.
    #[arg(long)]
    m: Option<usize>,
    /// Target stopping distance; the result is checked up to it.
    #[arg(long, default_value_t = 4)]
    ell: usize,
    /// Largest weight of a generic combination; defaults to ell - 1.
    #[arg(long)]
    s_bar: Option<usize>,
    #[arg(long, value_enum, default_value_t = Pool::Min)]
    pool: Pool,
    /// Where to write the matrix; the JSON report goes to stdout.
    #[arg(long)]
    matrix_out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifySadArgs {
    /// Parity-check matrix: a text file or a fixture name.
    #[arg(long)]
    matrix: String,
    /// `wolfmann`, `tau` or a file with one permutation per line in cycle notation.
    #[arg(long)]
    perms: String,
    #[arg(long, default_value_t = 7)]
    sigma_max: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyPdArgs {
    #[arg(long)]
    n: usize,
    /// Comma-separated check positions.
    #[arg(long, value_delimiter = ',', required = true)]
    positions: Vec<usize>,
    #[arg(long)]
    perms: String,
    #[arg(long, default_value_t = 3)]
    sigma_max: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn load_matrix(spec: &str) -> Result<BitMatrix> {
    if spec == "wolfmann-stack" {
        return wolfmann_stack();
    }
    if FIXTURE_NAMES.contains(&spec) {
        return fixture(spec);
    }
    let text = fs::read_to_string(spec).map_err(|e| Error::invalid(format!("{spec}: {e}")))?;
    BitMatrix::parse_text(&text)
}

fn code_and_matrix(c: &Common) -> Result<(Code, BitMatrix)> {
    let code = code_by_name(&c.code)?;
    let h = match &c.matrix {
        Some(m) => load_matrix(m)?,
        None => code.parity.clone(),
    };
    Ok((code, h))
}

fn load_perms(spec: &str, n: usize) -> Result<Vec<Perm>> {
    match spec {
        "wolfmann" => Ok(wolfmann_perms()),
        "tau" => Ok(tau_perms()),
        path => {
            let text = fs::read_to_string(path).map_err(|e| Error::invalid(format!("{path}: {e}")))?;
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(|l| Perm::parse_cycles(n, l))
                .collect()
        }
    }
}

fn parse_cog(text: &str, n: usize) -> Result<BitWord> {
    named_cog(text).or_else(|_| parse_octal_cog(text, n))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Error::invalid(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn spec(decoder: Dec, guess: bool) -> DecoderSpec {
    DecoderSpec { kind: decoder.into(), guess }
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::Enumerate(a) => {
            let (code, h) = code_and_matrix(&a.common)?;
            let r = code.redundancy();
            let top = a.sigma_max.unwrap_or(r).min(code.n);
            let mut report = cmd_enumerate(&code, &h, spec(a.decoder, a.guess), 0..=top.min(r))?;
            report.close_beyond(r);
            report.rows.retain(|row| row.sigma <= top);
            emit(a.common.out.as_deref(), &report.render(a.common.format.into()))
        }
        Cmd::Simulate(a) => {
            let (code, h) = code_and_matrix(&a.common)?;
            let dec = Compiled::new(&code, &h, spec(a.decoder, a.guess))?;
            let recs = cmd_simulate(&code, &dec, &a.ep, a.trials, a.seed)?;
            emit(a.common.out.as_deref(), &render_sim(&recs, a.common.format.into()))
        }
        Cmd::Bounds(a) => {
            let mut code = code_by_name(&a.common.code)?;
            let top = match a.ell_max {
                Some(t) => t,
                None => match code.d {
                    Some(d) => d,
                    None => code
                        .compute_min_distance()
                        .map_err(|e| Error::invalid(format!("{e}; pass --ell-max")))?,
                },
            };
            let rows = cmd_bounds(&mut code, a.ell_min..=top)?;
            emit(a.common.out.as_deref(), &render_bounds(&rows, a.common.format.into()))
        }
        Cmd::Search(a) => {
            let mut code = code_by_name(&a.common.code)?;
            let ells = if a.ell.is_empty() { (4..=code.compute_min_distance()?).collect() } else { a.ell };
            let table = cmd_search(&code, &ells, a.m_max.unwrap_or(code.n))?;
            emit(a.common.out.as_deref(), &render_search(&table, a.common.format.into()))
        }
        Cmd::Construct(a) => construct(a),
        Cmd::VerifySad(a) => {
            let h = load_matrix(&a.matrix)?;
            let perms = load_perms(&a.perms, h.ncols())?;
            let check = verify_sad(&h, &perms, a.sigma_max)?;
            emit(a.out.as_deref(), &(serde_json::to_string_pretty(&check).expect("serializes") + "\n"))
        }
        Cmd::VerifyPd(a) => {
            let perms = load_perms(&a.perms, a.n)?;
            let check = verify_pd(a.n, &a.positions, &perms, a.sigma_max)?;
            emit(a.out.as_deref(), &(serde_json::to_string_pretty(&check).expect("serializes") + "\n"))
        }
    }
}

fn construct(a: ConstructArgs) -> Result<()> {
    let (code, h) = code_and_matrix(&a.common)?;
    let need = |v: Option<usize>, what: &str| v.ok_or_else(|| Error::invalid(format!("--{what} is required")));
    let mut report = match a.method {
        Method::Cyclic => {
            let cog = a.cog.as_deref().ok_or_else(|| Error::invalid("--cog is required"))?;
            cyclic_pcm(&code, &parse_cog(cog, code.n)?, need(a.m, "m")?)?
        }
        Method::Generic => {
            let s_bar = a.s_bar.unwrap_or(a.ell.saturating_sub(1));
            let set = generic_erasure_set(h.nrows(), s_bar)?;
            ConstructionReport::new(&code, apply_generic_set(&set, &h)?, format!("generic s_bar={s_bar}"))?
        }
        Method::Closure => {
            let sums = closure_sums(&h, a.ell)?;
            ConstructionReport::new(&code, h.stack(&sums)?, format!("closure ell={}", a.ell))?
        }
        Method::Ght => {
            let pool = match a.pool {
                Pool::Min => GhtPool::MinWeightPlus(0),
                Pool::Full => GhtPool::FullDual,
                Pool::Blocks => GhtPool::BlockSums,
                Pool::Pairs => GhtPool::RowPairs,
            };
            let m = u32::try_from(a.m.unwrap_or(7)).map_err(|_| Error::invalid("--m too large"))?;
            generalized_ht_bch(m, pool)?.report
        }
    };
    if report.stopping_distance.is_none() {
        report.check_distance(a.ell)?;
    }
    if let Some(p) = &a.matrix_out {
        fs::write(p, report.matrix.to_text()).map_err(|e| Error::invalid(format!("{}: {e}", p.display())))?;
    }
    emit(a.common.out.as_deref(), &(report.to_json() + "\n"))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
