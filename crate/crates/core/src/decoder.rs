//! Erasure decoding: peeling, ML, automorphism group decoders with optional
//! guessing, and PD/SAD permutation-set verification.
//!
//! All decoders work on `u128` masks. A permutation `π` is applied to the
//! labeling: peeling "under π" uses the rows `π⁻¹(r)`, which is the same as
//! permuting the received word by `π`, peeling with `H` and mapping the
//! recovered positions back through `π⁻¹`.

use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::codebook::Code;
use crate::combin::{self, binomial_sum, check_guard, mask_indices, par_find_subset};
use crate::error::{Error, Result};
use crate::field::order_of_two;
use crate::gf2::{BitMatrix, BitWord};
use crate::stopping::{MaskMatrix, ENUM_GUARD};

pub use crate::bounds::rho_from_sad;

#[inline]
fn weight_one(x: u128) -> bool {
    x != 0 && x & (x - 1) == 0
}

#[inline]
fn parity(x: u128) -> bool {
    x.count_ones() & 1 == 1
}

/// A permutation of `{0..n-1}`; `image[i] = π(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    image: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { image: (0..n).collect() }
    }

    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &j in &image {
            if j >= n || std::mem::replace(&mut seen[j], true) {
                return Err(Error::invalid(format!("{image:?} is not a bijection")));
            }
        }
        Ok(Perm { image })
    }

    /// Builds a permutation of `{0..n-1}` from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut image: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                if a >= n || std::mem::replace(&mut used[a], true) {
                    return Err(Error::invalid(format!("cycle {cyc:?} repeats or exceeds {n}")));
                }
                image[a] = cyc[(k + 1) % cyc.len()];
            }
        }
        Ok(Perm { image })
    }

    /// Parses cycle notation such as `(0 1 2)(3,4)`.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::invalid(format!("malformed cycle notation: {text}")))?;
            let cyc = body
                .0
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|e| Error::invalid(format!("{t}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cyc);
            rest = body.1.trim_start();
        }
        Perm::from_cycles(n, &cycles)
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n(), "composing permutations of different degree");
        Perm { image: other.image.iter().map(|&j| self.image[j]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.n()];
        for (i, &j) in self.image.iter().enumerate() {
            inv[j] = i;
        }
        Perm { image: inv }
    }

    pub fn pow(&self, k: usize) -> Perm {
        (0..k).fold(Perm::identity(self.n()), |acc, _| self.compose(&acc))
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `π(S)` for a position mask.
    pub fn apply_mask(&self, m: u128) -> u128 {
        mask_indices(m).into_iter().fold(0, |acc, i| acc | 1u128 << self.image[i])
    }

    /// The word with `w_i` moved to position `π(i)`.
    pub fn apply_word(&self, w: &BitWord) -> BitWord {
        let mut out = BitWord::zeros(w.len());
        for i in w.support() {
            out.set(self.image[i], true);
        }
        out
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i);
                i = self.image[i];
            }
            out.push(cyc);
        }
        out
    }

    /// Whether `π` maps every generator row of `code` into the code.
    pub fn is_automorphism(&self, code: &Code) -> bool {
        self.n() == code.n && code.generator.rows().iter().all(|g| code.contains(&self.apply_word(g)))
    }

    pub fn check_automorphism(&self, code: &Code) -> Result<()> {
        if self.is_automorphism(code) {
            Ok(())
        } else {
            Err(Error::NotAutomorphism(self.to_string()))
        }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cyc in self.cycles() {
            let items: Vec<String> = cyc.iter().map(|i| i.to_string()).collect();
            write!(f, "({})", items.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

/// Cyclic shifts `C1` and doubling maps `C2` of a cyclic code of length `n`,
/// or of its extension when `extended` (position `n-1` fixed).
pub fn c1_c2_perms(n: usize, extended: bool) -> Result<(Vec<Perm>, Vec<Perm>)> {
    let base = if extended { n.checked_sub(1).ok_or_else(|| Error::invalid("n = 0"))? } else { n };
    if base < 3 || base % 2 == 0 {
        return Err(Error::invalid(format!("cyclic length must be odd and at least 3, got {base}")));
    }
    let c = order_of_two(base)?;
    let make = |f: &dyn Fn(usize) -> usize| {
        let mut image: Vec<usize> = (0..base).map(f).collect();
        if extended {
            image.push(base);
        }
        Perm { image }
    };
    let c1 = (0..base).map(|s| make(&|i| (i + s) % base)).collect();
    let mut mult = 1;
    let mut c2 = Vec::with_capacity(c);
    for _ in 0..c {
        c2.push(make(&|i| i * mult % base));
        mult = mult * 2 % base;
    }
    Ok((c1, c2))
}

/// `θ = (0,12)(1,13)…(11,23)`.
pub fn wolfmann_theta() -> Perm {
    Perm { image: (0..24).map(|i| (i + 12) % 24).collect() }
}

/// `ψ = (3,6,15,9,21,18,12)(4,7,16,10,22,19,13)(5,8,17,11,23,20,14)`.
pub fn wolfmann_psi() -> Perm {
    Perm::parse_cycles(24, "(3,6,15,9,21,18,12)(4,7,16,10,22,19,13)(5,8,17,11,23,20,14)")
        .expect("fixed cycle notation")
}

/// The 14 permutations `θ^i ψ^j`, `i = 0,1`, `j = 0..6`, identity first.
pub fn wolfmann_perms() -> Vec<Perm> {
    let (theta, psi) = (wolfmann_theta(), wolfmann_psi());
    let mut out = Vec::with_capacity(14);
    for i in 0..2 {
        for j in 0..7 {
            out.push(theta.pow(i).compose(&psi.pow(j)));
        }
    }
    out
}

/// `τ^s` for `s = 0..22`, `τ = (0 1 … 22)(23)`.
pub fn tau_perms() -> Vec<Perm> {
    c1_c2_perms(24, true).expect("24 is a valid extended length").0
}

/// Rows of `h` seen under `π`: `π⁻¹(r)` for each row `r`.
pub fn permuted_rows(h: &MaskMatrix, pi: &Perm) -> Vec<u128> {
    let inv = pi.inverse();
    h.rows.iter().map(|&r| inv.apply_mask(r)).collect()
}

/// Stack of `H` seen under every permutation in `perms`; peeling on it fails
/// exactly where the automorphism group decoder with `perms` fails.
pub fn stacked_matrix(h: &BitMatrix, perms: &[Perm]) -> Result<BitMatrix> {
    let mm = MaskMatrix::new(h)?;
    let rows: Vec<u128> = perms.iter().flat_map(|p| permuted_rows(&mm, p)).collect();
    Ok(BitMatrix::from_masks(h.ncols(), &rows))
}

/// Stack of the images `π(r)` of every row under every permutation, duplicates kept.
pub fn image_matrix(h: &BitMatrix, perms: &[Perm]) -> Result<BitMatrix> {
    let mm = MaskMatrix::new(h)?;
    let rows: Vec<u128> = perms.iter().flat_map(|p| mm.rows.iter().map(move |&r| p.apply_mask(r))).collect();
    Ok(BitMatrix::from_masks(h.ncols(), &rows))
}

/// The 168-row stack of Wolfmann-matrix images under the 14 permutations `θ^i ψ^j`.
pub fn wolfmann_stack() -> Result<BitMatrix> {
    image_matrix(&crate::codebook::fixture("wolfmann")?, &wolfmann_perms())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErasurePattern {
    pub n: usize,
    pub erased: Vec<usize>,
}

impl ErasurePattern {
    pub fn new(n: usize, erased: &[usize]) -> Result<Self> {
        if n > 128 {
            return Err(Error::LengthTooLarge(n));
        }
        let mut e = erased.to_vec();
        e.sort_unstable();
        e.dedup();
        if let Some(&i) = e.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: i, len: n });
        }
        Ok(ErasurePattern { n, erased: e })
    }

    pub fn from_mask(n: usize, m: u128) -> Self {
        ErasurePattern { n, erased: mask_indices(m) }
    }

    pub fn mask(&self) -> u128 {
        combin::indices_mask(&self.erased)
    }
}

/// Result of one decoding attempt. `estimate` holds the known and recovered
/// values; residual positions read as 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeOutcome {
    pub recovered: Vec<usize>,
    pub residual: Vec<usize>,
    pub iterations: usize,
    pub perms_tried: usize,
    pub success: bool,
    pub estimate: BitWord,
    /// Set when guessing stopped at its depth limit.
    pub depth_limited: bool,
}

/// Peeling state: erased positions still unknown and the current values.
#[derive(Clone, Copy, Debug)]
struct State {
    residual: u128,
    values: u128,
}

/// Flooding peel with `rows` until the residual is empty or a stopping set.
/// Returns the number of rounds that made progress.
fn peel_rows(rows: &[u128], st: &mut State) -> usize {
    let mut rounds = 0;
    while st.residual != 0 {
        let mut solved = 0u128;
        let mut vals = 0u128;
        for &r in rows {
            let x = r & st.residual;
            if weight_one(x) && solved & x == 0 {
                solved |= x;
                if parity(r & !st.residual & st.values) {
                    vals |= x;
                }
            }
        }
        if solved == 0 {
            break;
        }
        st.residual &= !solved;
        st.values |= vals;
        rounds += 1;
    }
    rounds
}

fn outcome(n: usize, erased: u128, st: State, iterations: usize, perms_tried: usize, depth_limited: bool) -> DecodeOutcome {
    DecodeOutcome {
        recovered: mask_indices(erased & !st.residual),
        residual: mask_indices(st.residual),
        iterations,
        perms_tried,
        success: st.residual == 0,
        estimate: BitWord::from_mask(n, st.values & !st.residual),
        depth_limited,
    }
}

/// Peeling decoder on `h`.
pub fn peel(h: &BitMatrix, e: &ErasurePattern) -> Result<DecodeOutcome> {
    let mm = MaskMatrix::new(h)?;
    if e.n != mm.n {
        return Err(Error::LengthMismatch { expected: mm.n, got: e.n });
    }
    let erased = e.mask();
    let mut st = State { residual: erased, values: 0 };
    let it = peel_rows(&mm.rows, &mut st);
    Ok(outcome(mm.n, erased, st, it, 1, false))
}

/// Peeling on `rows` from a fixed erasure mask; returns the residual.
pub fn peel_residual(rows: &[u128], erased: u128) -> u128 {
    let mut st = State { residual: erased, values: 0 };
    peel_rows(rows, &mut st);
    st.residual
}

/// Which permutation set an automorphism group decoder cycles through.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Strategy {
    /// Cyclic shifts only.
    A,
    /// Cyclic shifts, then doubling maps.
    B,
}

/// Order in which stalls consume permutations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermOrder {
    Exhaustive,
    Random(u64),
}

/// Default branching depth for guessing.
pub const DEFAULT_GUESS_DEPTH: usize = 2;

/// A compiled iterative decoder: plain peeling when there is one layer,
/// an automorphism group decoder otherwise, optionally with guessing.
#[derive(Clone, Debug)]
pub struct Decoder {
    n: usize,
    base: Vec<u128>,
    /// `layers[p]` = rows of `H` under `perms[p]`; layer 0 is the identity.
    layers: Vec<Vec<u128>>,
    /// Size of the leading block that random order shuffles as a unit (C1 for AGD_B).
    block: usize,
    guess_depth: Option<usize>,
}

impl Decoder {
    pub fn bp(h: &BitMatrix) -> Result<Self> {
        let mm = MaskMatrix::new(h)?;
        Ok(Decoder { n: mm.n, base: mm.rows.clone(), layers: vec![mm.rows], block: 1, guess_depth: None })
    }

    /// Decoder using `perms` on stalls; each permutation must be an automorphism
    /// of `code`, whose dual must contain every row of `h`.
    pub fn agd(h: &BitMatrix, code: &Code, perms: &[Perm]) -> Result<Self> {
        code.check_dual_rows(h)?;
        let mm = MaskMatrix::new(h)?;
        let mut layers = vec![mm.rows.clone()];
        for p in perms {
            if p.n() != mm.n {
                return Err(Error::LengthMismatch { expected: mm.n, got: p.n() });
            }
            p.check_automorphism(code)?;
            if !p.is_identity() {
                layers.push(permuted_rows(&mm, p));
            }
        }
        Ok(Decoder { n: mm.n, base: mm.rows, layers, block: perms.len().max(1), guess_depth: None })
    }

    /// AGD_A (`C1`) or AGD_B (`C1` within each `C2` power) for a cyclic or extended cyclic code.
    pub fn agd_cyclic(h: &BitMatrix, code: &Code, strategy: Strategy) -> Result<Self> {
        let (c1, c2) = c1_c2_perms(code.n, code.extended)?;
        let perms: Vec<Perm> = match strategy {
            Strategy::A => c1,
            Strategy::B => c2.iter().flat_map(|z| c1.iter().map(move |g| g.compose(z))).collect(),
        };
        let mut d = Decoder::agd(h, code, &perms)?;
        d.block = c1_len(code);
        Ok(d)
    }

    pub fn with_guessing(mut self, depth: usize) -> Self {
        self.guess_depth = Some(depth);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    fn exhaustive_order(&self) -> Vec<usize> {
        (0..self.layers.len()).collect()
    }

    /// Identity first, then the remaining layers of the first block shuffled,
    /// then the other blocks in random order, each shuffled.
    pub fn random_order<R: Rng>(&self, rng: &mut R) -> Vec<usize> {
        let total = self.layers.len();
        let block = self.block.min(total).max(1);
        let mut first: Vec<usize> = (1..block).collect();
        first.shuffle(rng);
        let mut blocks: Vec<Vec<usize>> =
            (block..total).step_by(block).map(|s| (s..(s + block).min(total)).collect()).collect();
        blocks.shuffle(rng);
        let mut order = vec![0];
        order.extend(first);
        for mut b in blocks {
            b.shuffle(rng);
            order.extend(b);
        }
        order
    }

    /// Peels with the layers of `order` cyclically until the residual is empty
    /// or every layer has stalled on the current residual.
    fn run(&self, st: &mut State, order: &[usize]) -> (usize, usize) {
        let mut iterations = 0;
        let mut tried = 0;
        let mut idle = 0;
        let mut k = 0;
        while st.residual != 0 && idle < order.len() {
            let rounds = peel_rows(&self.layers[order[k]], st);
            tried += 1;
            iterations += rounds;
            idle = if rounds > 0 { 1 } else { idle + 1 };
            k = (k + 1) % order.len();
        }
        (iterations, tried)
    }

    /// Full decode of a received word: `erased` positions unknown, `known` holds
    /// the values elsewhere.
    pub fn decode_with_order(&self, erased: u128, known: u128, order: &[usize]) -> DecodeOutcome {
        let mut st = State { residual: erased, values: known & !erased };
        let (iterations, tried) = self.run(&mut st, order);
        if st.residual == 0 || self.guess_depth.is_none() {
            return outcome(self.n, erased, st, iterations, tried, false);
        }
        let depth = self.guess_depth.unwrap_or(0);
        let mut stats = (iterations, tried, false);
        match self.solve(st, depth, order, &mut stats) {
            Branch::Complete(values) => {
                let done = State { residual: 0, values };
                outcome(self.n, erased, done, stats.0, stats.1, stats.2)
            }
            _ => outcome(self.n, erased, st, stats.0, stats.1, stats.2),
        }
    }

    pub fn decode(&self, erased: u128, known: u128) -> DecodeOutcome {
        self.decode_with_order(erased, known, &self.exhaustive_order())
    }

    /// Whether decoding the all-zero word with erasures `erased` leaves a residual.
    pub fn fails(&self, erased: u128) -> bool {
        let mut st = State { residual: erased, values: 0 };
        let order = self.exhaustive_order();
        self.run(&mut st, &order);
        if st.residual == 0 {
            return false;
        }
        match self.guess_depth {
            None => true,
            Some(depth) => {
                let mut stats = (0, 0, false);
                !matches!(self.solve(st, depth, &order, &mut stats), Branch::Complete(_))
            }
        }
    }

    fn consistent(&self, st: &State) -> bool {
        self.base.iter().all(|&r| r & st.residual != 0 || !parity(r & st.values))
    }

    /// Residual position met by the most residual-weight-2 rows, lowest index on ties.
    fn pick(&self, residual: u128) -> usize {
        let mut score = [0u32; 128];
        for &r in &self.base {
            let x = r & residual;
            if x.count_ones() == 2 {
                for i in mask_indices(x) {
                    score[i] += 1;
                }
            }
        }
        mask_indices(residual).into_iter().max_by_key(|&i| (score[i], Reverse(i))).expect("nonempty residual")
    }

    fn solve(&self, st: State, depth: usize, order: &[usize], stats: &mut (usize, usize, bool)) -> Branch {
        if depth == 0 {
            stats.2 = true;
            return Branch::Undetermined;
        }
        let p = self.pick(st.residual);
        let mut results = [Branch::Inconsistent, Branch::Inconsistent];
        for (v, slot) in results.iter_mut().enumerate() {
            let mut b = State { residual: st.residual & !(1u128 << p), values: st.values | (v as u128) << p };
            let (it, tried) = self.run(&mut b, order);
            stats.0 += it;
            stats.1 += tried;
            *slot = if !self.consistent(&b) {
                Branch::Inconsistent
            } else if b.residual == 0 {
                Branch::Complete(b.values)
            } else {
                self.solve(b, depth - 1, order, stats)
            };
        }
        match results {
            [Branch::Complete(v), Branch::Inconsistent] | [Branch::Inconsistent, Branch::Complete(v)] => {
                Branch::Complete(v)
            }
            [Branch::Inconsistent, Branch::Inconsistent] => Branch::Inconsistent,
            _ => Branch::Undetermined,
        }
    }
}

fn c1_len(code: &Code) -> usize {
    if code.extended {
        code.n - 1
    } else {
        code.n
    }
}

#[derive(Clone, Copy, Debug)]
enum Branch {
    Complete(u128),
    Inconsistent,
    Undetermined,
}

/// Automorphism group decoding of one erasure pattern (all-zero word).
pub fn agd_decode(
    h: &BitMatrix,
    code: &Code,
    e: &ErasurePattern,
    perms: &[Perm],
    guessing: bool,
    order: PermOrder,
) -> Result<DecodeOutcome> {
    let mut d = Decoder::agd(h, code, perms)?;
    if guessing {
        d = d.with_guessing(DEFAULT_GUESS_DEPTH);
    }
    let ord = match order {
        PermOrder::Exhaustive => d.exhaustive_order(),
        PermOrder::Random(seed) => d.random_order(&mut ChaCha8Rng::seed_from_u64(seed)),
    };
    Ok(d.decode_with_order(e.mask(), 0, &ord))
}

/// Continues a stalled peel on `h` by guessing, with the default depth.
pub fn guess_extend(h: &BitMatrix, e: &ErasurePattern) -> Result<DecodeOutcome> {
    let d = Decoder::bp(h)?.with_guessing(DEFAULT_GUESS_DEPTH);
    Ok(d.decode(e.mask(), 0))
}

/// ML erasure decoding through the columns of a parity-check matrix.
#[derive(Clone, Debug)]
pub struct MlDecoder {
    n: usize,
    rank: usize,
    /// `cols[j]` = column `j` of a row basis of `H`, as a mask over its rows.
    cols: Vec<u128>,
}

impl MlDecoder {
    pub fn new(code: &Code) -> Result<Self> {
        MlDecoder::from_parity(&code.parity)
    }

    pub fn from_parity(h: &BitMatrix) -> Result<Self> {
        let basis = h.row_basis();
        if basis.nrows() > 128 {
            return Err(Error::LengthTooLarge(basis.nrows()));
        }
        let n = h.ncols();
        let cols = (0..n)
            .map(|j| (0..basis.nrows()).fold(0u128, |acc, i| acc | u128::from(basis.row(i).get(j)) << i))
            .collect();
        Ok(MlDecoder { n, rank: basis.nrows(), cols })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// True iff `erased` contains no nonzero codeword support.
    pub fn correctable(&self, erased: u128) -> bool {
        if erased.count_ones() as usize > self.rank {
            return false;
        }
        let mut basis: Vec<u128> = Vec::with_capacity(erased.count_ones() as usize);
        let mut m = erased;
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            m &= m - 1;
            let mut v = self.cols[j];
            for &b in &basis {
                v = v.min(v ^ b);
            }
            if v == 0 {
                return false;
            }
            let pos = basis.partition_point(|&b| b > v);
            basis.insert(pos, v);
        }
        true
    }

    /// Solves for every erased position that is uniquely determined.
    pub fn decode(&self, erased: u128, known: u128) -> DecodeOutcome {
        let idx = mask_indices(erased);
        let syndrome = mask_indices(known & !erased).into_iter().fold(0u128, |acc, j| acc ^ self.cols[j]);
        // rows of the augmented system [H_E | s], one per parity row
        let width = idx.len() + 1;
        let rows: Vec<BitWord> = (0..self.rank)
            .map(|i| {
                let mut w = BitWord::zeros(width);
                for (c, &j) in idx.iter().enumerate() {
                    w.set(c, self.cols[j] >> i & 1 == 1);
                }
                w.set(idx.len(), syndrome >> i & 1 == 1);
                w
            })
            .collect();
        let (rref, pivots) = BitMatrix::new(width, rows).expect("uniform width").rref();
        let pivot_set: Vec<bool> = (0..width).map(|c| pivots.contains(&c)).collect();
        let mut values = known & !erased;
        let mut residual = erased;
        for (r, &c) in pivots.iter().enumerate() {
            if c == idx.len() {
                continue;
            }
            let row = rref.row(r);
            let free = (0..idx.len()).any(|f| !pivot_set[f] && row.get(f));
            if !free {
                residual &= !(1u128 << idx[c]);
                if row.get(idx.len()) {
                    values |= 1u128 << idx[c];
                }
            }
        }
        outcome(self.n, erased, State { residual, values }, 0, 0, false)
    }
}

/// Per-position ML recoverability of an erasure pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MlOutcome {
    pub recoverable: Vec<usize>,
    pub unrecoverable: Vec<usize>,
    pub correctable: bool,
}

pub fn ml_recoverable(code: &Code, e: &ErasurePattern) -> Result<MlOutcome> {
    if e.n != code.n {
        return Err(Error::LengthMismatch { expected: code.n, got: e.n });
    }
    let out = MlDecoder::new(code)?.decode(e.mask(), 0);
    Ok(MlOutcome {
        correctable: out.success,
        recoverable: out.recovered,
        unrecoverable: out.residual,
    })
}

/// Outcome of a PD or SAD verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermSetCheck {
    pub holds: bool,
    pub counterexample: Option<Vec<usize>>,
}

fn check_all_subsets(n: usize, s: usize, bad: impl Fn(u128) -> bool + Sync) -> Result<PermSetCheck> {
    if n > 128 {
        return Err(Error::LengthTooLarge(n));
    }
    check_guard("permutation-set check", binomial_sum(n, 1, s.min(n)), ENUM_GUARD)?;
    for b in 1..=s.min(n) {
        if let Some(m) = par_find_subset(n, b, &bad)? {
            return Ok(PermSetCheck { holds: false, counterexample: Some(mask_indices(m)) });
        }
    }
    Ok(PermSetCheck { holds: true, counterexample: None })
}

/// True iff every set of at most `s` positions is moved by some permutation
/// onto a set that is not a stopping set of `h`.
pub fn verify_sad(h: &BitMatrix, perms: &[Perm], s: usize) -> Result<PermSetCheck> {
    let mm = MaskMatrix::new(h)?;
    let layers: Vec<Vec<u128>> = perms.iter().map(|p| permuted_rows(&mm, p)).collect();
    check_all_subsets(mm.n, s, |e| layers.iter().all(|rows| rows.iter().all(|&r| !weight_one(r & e))))
}

/// True iff every set of at most `s` positions is moved by some permutation into `check_positions`.
pub fn verify_pd(n: usize, check_positions: &[usize], perms: &[Perm], s: usize) -> Result<PermSetCheck> {
    let p = combin::indices_mask(check_positions);
    let masks: Vec<Vec<u128>> = perms.iter().map(|pi| (0..n).map(|i| 1u128 << pi.apply(i)).collect()).collect();
    check_all_subsets(n, s, |e| {
        masks.iter().all(|img| {
            let moved = mask_indices(e).into_iter().fold(0u128, |acc, i| acc | img[i]);
            moved & !p != 0
        })
    })
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "A" => Ok(Strategy::A),
            "b" | "B" => Ok(Strategy::B),
            _ => Err(Error::UnknownName(s.into())),
        }
    }
}
