//! Redundant parity-check matrix constructions: cyclic matrices from cogs,
//! minimal-row searches over cogs, generic erasure-correcting sets, the
//! generalized Hollmann–Tolhuizen construction for double-error-correcting
//! BCH codes and sum-closure matrices.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rayon::prelude::*;
use serde::Serialize;

use crate::codebook::{bch_pcm, format_octal_cog, Code};
use crate::combin::{self, binomial, binomial_sum, check_guard, mask_indices, par_fold_subsets, rotate_mask, Subsets};
use crate::error::{Error, Result};
use crate::field::Field2m;
use crate::gf2::{visit_span, BitMatrix, BitWord};
use crate::stopping::{stopping_distance_masks, MaskMatrix, StoppingDistance, ENUM_GUARD};

#[inline]
fn weight_one(x: u128) -> bool {
    x != 0 && x & (x - 1) == 0
}

/// A constructed parity-check matrix with its verified parameters.
#[derive(Clone, Debug)]
pub struct ConstructionReport {
    pub matrix: BitMatrix,
    pub rank: usize,
    pub stopping_distance: Option<StoppingDistance>,
    pub method: String,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    method: &'a str,
    rows: usize,
    rank: usize,
    stopping_distance: Option<String>,
    stopping_distance_checked_to: Option<usize>,
}

impl ConstructionReport {
    /// Checks every row against the dual of `code` and the rank against `n - k`.
    pub fn new(code: &Code, matrix: BitMatrix, method: impl Into<String>) -> Result<Self> {
        code.check_dual_rows(&matrix)?;
        let rank = matrix.rank();
        if rank != code.redundancy() {
            return Err(Error::RankDeficient { expected: code.redundancy(), got: rank });
        }
        Ok(ConstructionReport { matrix, rank, stopping_distance: None, method: method.into() })
    }

    pub fn rows(&self) -> usize {
        self.matrix.nrows()
    }

    /// Computes the stopping distance up to `cap` and stores it.
    pub fn check_distance(&mut self, cap: usize) -> Result<StoppingDistance> {
        let d = stopping_distance_masks(&MaskMatrix::new(&self.matrix)?, cap)?;
        self.stopping_distance = Some(d);
        Ok(d)
    }

    pub fn to_json(&self) -> String {
        let checked = self.stopping_distance.map(|d| match d {
            StoppingDistance::Exact(x) => x,
            StoppingDistance::AtLeast(x) => x - 1,
        });
        serde_json::to_string_pretty(&ReportJson {
            method: &self.method,
            rows: self.rows(),
            rank: self.rank,
            stopping_distance: self.stopping_distance.map(|d| d.to_string()),
            stopping_distance_checked_to: checked,
        })
        .expect("plain struct serializes")
    }
}

/// The first `m` cyclic shifts of `cog`, shift `i` in row `i`.
pub fn cyclic_matrix(cog: &BitWord, m: usize) -> BitMatrix {
    let rows = (0..m).map(|s| cog.cyclic_shift(s)).collect();
    BitMatrix::new(cog.len(), rows).expect("shifts share the cog length")
}

/// Cyclic-form parity-check matrix of `code` from `m` consecutive shifts of `cog`.
pub fn cyclic_pcm(code: &Code, cog: &BitWord, m: usize) -> Result<ConstructionReport> {
    let (n, r) = (code.n, code.redundancy());
    if cog.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: cog.len() });
    }
    if m < r || m > n {
        return Err(Error::invalid(format!("row count {m} outside [{r}, {n}]")));
    }
    ConstructionReport::new(code, cyclic_matrix(cog, m), format!("cyclic cog {} m={m}", format_octal_cog(cog)))
}

/// Appends an overall parity bit to every row and checks the rows against `extended`.
pub fn extend_with_parity(h: &BitMatrix, extended: &Code) -> Result<BitMatrix> {
    if h.ncols() + 1 != extended.n {
        return Err(Error::LengthMismatch { expected: extended.n - 1, got: h.ncols() });
    }
    let rows = h.rows().iter().map(BitWord::extend_parity).collect();
    let out = BitMatrix::new(extended.n, rows)?;
    extended.check_dual_rows(&out)?;
    Ok(out)
}

/// Number of leading shifts of `cog` needed to reach rank `target`, if ever.
pub fn rank_prefix(cog: &BitWord, target: usize) -> Result<Option<usize>> {
    let n = cog.len();
    let c = cog.to_mask()?;
    let mut basis: Vec<u128> = Vec::new();
    if target == 0 {
        return Ok(Some(0));
    }
    for s in 0..n {
        let mut v = rotate_mask(c, s, n);
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
            if basis.len() == target {
                return Ok(Some(s + 1));
            }
        }
    }
    Ok(None)
}

/// For σ = 1..=sigma_max, the largest over σ-subsets of the index of the first
/// shift of `cog` resolving the subset; `n` marks a subset no shift resolves.
pub fn first_shift_profile(cog: &BitWord, sigma_max: usize) -> Result<Vec<usize>> {
    let n = cog.len();
    let c = cog.to_mask()?;
    check_guard("cog search", binomial_sum(n, 1, sigma_max), ENUM_GUARD)?;
    let rots: Vec<u128> = (0..n).map(|s| rotate_mask(c, s, n)).collect();
    (1..=sigma_max)
        .map(|sigma| {
            par_fold_subsets(
                n,
                sigma,
                0usize,
                |acc, set| {
                    let first = rots.iter().position(|&r| weight_one(r & set)).unwrap_or(n);
                    acc.max(first)
                },
                usize::max,
            )
        })
        .collect()
}

/// Per-cog outcome of [`search_min_rows`]; `min_rows[i]` belongs to `ells[i]`.
#[derive(Clone, Debug, Serialize)]
pub struct CogSearch {
    pub cog: String,
    pub weight: usize,
    pub min_rows: Vec<Option<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub ells: Vec<usize>,
    pub per_cog: Vec<CogSearch>,
    pub minimum: Vec<Option<usize>>,
}

/// Least `m ∈ [n-k, m_max]` for which the first `m` shifts of each cog have
/// full rank and stopping distance at least ℓ, for each ℓ in `ells`.
pub fn search_min_rows(code: &Code, cogs: &[BitWord], ells: &[usize], m_max: usize) -> Result<SearchReport> {
    let r = code.redundancy();
    let sigma_max = ells.iter().copied().max().unwrap_or(1).saturating_sub(1);
    let mut per_cog = Vec::with_capacity(cogs.len());
    for cog in cogs {
        if !code.dual_contains(cog) {
            return Err(Error::NotInDual { row: per_cog.len() });
        }
        let rank_rows = rank_prefix(cog, r)?;
        let profile = first_shift_profile(cog, sigma_max)?;
        let min_rows = ells
            .iter()
            .map(|&ell| {
                let need = profile[..ell.saturating_sub(1)].iter().map(|&f| f + 1).max().unwrap_or(0);
                let m = rank_rows?.max(need).max(r);
                (need <= code.n && m <= m_max).then_some(m)
            })
            .collect();
        per_cog.push(CogSearch { cog: format_octal_cog(cog), weight: cog.weight(), min_rows });
    }
    let minimum = (0..ells.len())
        .map(|i| per_cog.iter().filter_map(|c| c.min_rows[i]).min())
        .collect();
    Ok(SearchReport { ells: ells.to_vec(), per_cog, minimum })
}

/// All length-`m_bar` vectors with first coordinate 1 and weight at most `s_bar`,
/// ordered by weight and then colex on the remaining coordinates.
pub fn generic_erasure_set(m_bar: usize, s_bar: usize) -> Result<BitMatrix> {
    if s_bar == 0 || s_bar > m_bar || m_bar > 128 {
        return Err(Error::invalid(format!("need 1 <= sigma <= m <= 128, got ({m_bar}, {s_bar})")));
    }
    let mut rows = Vec::new();
    for extra in 0..s_bar {
        for tail in Subsets::all(m_bar - 1, extra)? {
            rows.push(BitWord::from_mask(m_bar, 1 | tail << 1));
        }
    }
    BitMatrix::new(m_bar, rows)
}

/// Rows `a·H` for every row `a` of `a_set`.
pub fn apply_generic_set(a_set: &BitMatrix, h: &BitMatrix) -> Result<BitMatrix> {
    a_set.mul(h)
}

/// Largest number of rows [`closure_sums`] will emit.
pub const CLOSURE_GUARD: u128 = 1_000_000;

/// All nonzero sums of at most `ell - 2` distinct rows of `h`, by subset size then colex.
pub fn closure_sums(h: &BitMatrix, ell: usize) -> Result<BitMatrix> {
    if ell < 3 {
        return Err(Error::invalid(format!("closure needs ell >= 3, got {ell}")));
    }
    let m = h.nrows();
    let top = (ell - 2).min(m);
    check_guard("closure sums", binomial_sum(m, 1, top), CLOSURE_GUARD)?;
    let mut rows = Vec::new();
    for size in 1..=top {
        for subset in Subsets::all(m, size)? {
            let mut acc = BitWord::zeros(h.ncols());
            for i in mask_indices(subset) {
                acc.xor_assign(h.row(i));
            }
            if !acc.is_zero() {
                rows.push(acc);
            }
        }
    }
    BitMatrix::new(h.ncols(), rows)
}

/// `Σ_{i=1}^{u-1} α^{i n / u} == 1` in `field`, for `u` dividing `n = 2^m - 1`.
pub fn root_sum_is_one(field: &Field2m, u: usize) -> Result<bool> {
    let n = field.order();
    if u < 2 || !n.is_multiple_of(u) {
        return Err(Error::invalid(format!("{u} does not divide {n}")));
    }
    let s = (1..u).fold(0, |acc, i| acc ^ field.alpha_pow((i * n / u) as i64));
    Ok(s == 1)
}

/// Weight-3 Hamming codewords `{a, b, c}` (`α^a + α^b + α^c = 0`) whose cubes coincide.
pub fn cube_collision_triples(field: &Field2m) -> Vec<[usize; 3]> {
    let n = field.order();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let Some(c) = field.log(field.alpha_pow(a as i64) ^ field.alpha_pow(b as i64)) else {
                continue;
            };
            if c <= b {
                continue;
            }
            let cube = |x: usize| field.alpha_pow(3 * x as i64);
            if cube(a) == cube(b) && cube(b) == cube(c) {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Orders masks by the lexicographic order of their sorted supports.
fn support_lex_order(pool: &mut [u128]) {
    pool.sort_by_cached_key(|&m| mask_indices(m));
}

fn coverage(targets: &[u128], c: u128) -> usize {
    targets.iter().filter(|&&t| weight_one(t & c)).count()
}

/// Greedy set cover: repeatedly adds the pool row resolving the most remaining
/// targets, smallest support first on ties. Returns the rows added.
fn greedy_resolve(rows: &mut Vec<u128>, targets: &mut Vec<u128>, pool: &[u128], size: usize) -> Result<usize> {
    let initial: Vec<usize> = combin::pool().install(|| pool.par_iter().map(|&c| coverage(targets, c)).collect());
    let mut heap: BinaryHeap<(usize, Reverse<usize>)> =
        initial.into_iter().enumerate().map(|(i, c)| (c, Reverse(i))).collect();
    let mut added = 0;
    while !targets.is_empty() {
        let Some((bound, Reverse(i))) = heap.pop() else {
            return Err(Error::GreedyStall { size, residual: targets.len() });
        };
        if bound == 0 {
            return Err(Error::GreedyStall { size, residual: targets.len() });
        }
        let fresh = coverage(targets, pool[i]);
        if fresh < bound {
            heap.push((fresh, Reverse(i)));
            continue;
        }
        rows.push(pool[i]);
        targets.retain(|&t| !weight_one(t & pool[i]));
        added += 1;
    }
    Ok(added)
}

fn collect_stopping(mm: &MaskMatrix, sigma: usize) -> Result<Vec<u128>> {
    check_guard("stopping-set collection", binomial(mm.n, sigma), ENUM_GUARD)?;
    let mut sets = par_fold_subsets(
        mm.n,
        sigma,
        Vec::new(),
        |mut acc, s| {
            if mm.is_stopping(s) {
                acc.push(s);
            }
            acc
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    sets.sort_unstable();
    Ok(sets)
}

/// Candidate rows for the last greedy step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GhtPool {
    /// Dual codewords of weight at most `d⊥ + slack`.
    MinWeightPlus(usize),
    /// Every nonzero dual codeword.
    FullDual,
    /// Sums of one step-1 row and one nonzero combination of the `α^{3j}` rows.
    BlockSums,
    /// Sums of one step-1 row and one `α^{3j}` row.
    RowPairs,
}

/// Outcome of [`generalized_ht_bch`].
#[derive(Clone, Debug)]
pub struct GhtReport {
    pub report: ConstructionReport,
    /// Rows contributed by steps 1–4 (step 4 split into its size-3 and size-4 phases).
    pub step_rows: [usize; 5],
    /// Rows when no stopping set of size at most 3 remains.
    pub rows_distance4: usize,
    /// Rows when no stopping set of size at most 4 remains.
    pub rows_distance5: usize,
    pub cube_triples: usize,
}

/// Generalized Hollmann–Tolhuizen construction for the double-error-correcting
/// narrow-sense BCH code of length `2^m - 1`.
///
/// 1. generic `(m, 4)` set applied to the Hamming rows `α^j`;
/// 2. the rows `α^{3j}`;
/// 3. sums of one Hamming row and one `α^{3j}` row, greedily, for the `n/3`
///    cube-collision triples (only when `3 | n`);
/// 4. greedy dual codewords from `pool`, first for the remaining stopping sets of
///    size 3 and then for those of size 4.
pub fn generalized_ht_bch(m: u32, pool: GhtPool) -> Result<GhtReport> {
    let field = Field2m::new(m)?;
    let n = field.order();
    if n > 128 {
        return Err(Error::LengthTooLarge(n));
    }
    let hamming = bch_pcm(&field, &[1])?;
    let cubes = bch_pcm(&field, &[3])?;
    let code = Code::from_parity(format!("bch{n}"), &hamming.stack(&cubes)?);

    let step1 = apply_generic_set(&generic_erasure_set(m as usize, 4)?, &hamming)?;
    let mut rows = step1.to_masks()?;
    let mut steps = [rows.len(), 0, 0, 0, 0];
    rows.extend(cubes.to_masks()?);
    steps[1] = cubes.nrows();

    let triples = if n % 3 == 0 { cube_collision_triples(&field) } else { Vec::new() };
    if !triples.is_empty() {
        let mut targets: Vec<u128> = triples.iter().map(|t| combin::indices_mask(t)).collect();
        let hm = hamming.to_masks()?;
        let cm = cubes.to_masks()?;
        let mut pair_pool: Vec<u128> = hm.iter().flat_map(|&h| cm.iter().map(move |&c| h ^ c)).collect();
        support_lex_order(&mut pair_pool);
        pair_pool.dedup();
        steps[2] = greedy_resolve(&mut rows, &mut targets, &pair_pool, 3)?;
    }

    let mut dual_pool: Vec<u128> = Vec::new();
    let basis = hamming.stack(&cubes)?.row_basis();
    let mut min_weight = usize::MAX;
    visit_span(&basis, |limbs| {
        let w = limbs[0] as u128 | (limbs.get(1).copied().unwrap_or(0) as u128) << 64;
        if w != 0 {
            min_weight = min_weight.min(w.count_ones() as usize);
            dual_pool.push(w);
        }
    })?;
    let s1 = step1.to_masks()?;
    let cm = cubes.to_masks()?;
    match pool {
        GhtPool::MinWeightPlus(slack) => dual_pool.retain(|w| (w.count_ones() as usize) <= min_weight + slack),
        GhtPool::FullDual => {}
        GhtPool::BlockSums => {
            let span: Vec<u128> = (1u32..1 << cm.len())
                .map(|c| mask_indices(c as u128).iter().fold(0, |acc, &i| acc ^ cm[i]))
                .collect();
            dual_pool = s1.iter().flat_map(|&h| span.iter().map(move |&b| h ^ b)).collect();
        }
        GhtPool::RowPairs => dual_pool = s1.iter().flat_map(|&h| cm.iter().map(move |&b| h ^ b)).collect(),
    }
    dual_pool.sort_unstable();
    dual_pool.dedup();
    support_lex_order(&mut dual_pool);

    let mm = MaskMatrix { n, rows: rows.clone() };
    let mut small: Vec<u128> = Vec::new();
    for sigma in 1..=3 {
        small.extend(collect_stopping(&mm, sigma)?);
    }
    steps[3] = greedy_resolve(&mut rows, &mut small, &dual_pool, 3)?;
    let rows_distance4 = rows.len();

    let mm = MaskMatrix { n, rows: rows.clone() };
    let mut fours = collect_stopping(&mm, 4)?;
    steps[4] = greedy_resolve(&mut rows, &mut fours, &dual_pool, 4)?;
    let rows_distance5 = rows.len();

    let mut report = ConstructionReport::new(&code, BitMatrix::from_masks(n, &rows), format!("generalized HT, n={n}"))?;
    report.stopping_distance = Some(StoppingDistance::AtLeast(5));
    Ok(GhtReport { report, step_rows: steps, rows_distance4, rows_distance5, cube_triples: triples.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codebook::{hamming, hamming_standard_pcm};
    use crate::stopping::count_unresolved;

    #[test]
    fn generic_set_sizes() {
        assert_eq!(generic_erasure_set(6, 3).unwrap().nrows(), 16);
        assert_eq!(generic_erasure_set(7, 3).unwrap().nrows(), 22);
        assert_eq!(generic_erasure_set(7, 4).unwrap().nrows(), 42);
        let one = generic_erasure_set(5, 1).unwrap();
        assert_eq!(one.nrows(), 1);
        assert_eq!(one.row(0).support(), vec![0]);
        assert!(generic_erasure_set(3, 4).is_err());
    }

    #[test]
    fn identity_generic_set_is_noop() {
        let h = hamming_standard_pcm(4).unwrap();
        assert_eq!(apply_generic_set(&BitMatrix::identity(4), &h).unwrap(), h);
    }

    #[test]
    fn closure_small_cases() {
        let h = hamming_standard_pcm(3).unwrap();
        assert_eq!(closure_sums(&h, 3).unwrap(), h);
        assert_eq!(closure_sums(&h, 4).unwrap().nrows(), 6);
        assert!(closure_sums(&h, 2).is_err());
    }

    #[test]
    fn hamming15_generic_leaves_only_codewords() {
        let h = hamming_standard_pcm(4).unwrap();
        let g = apply_generic_set(&generic_erasure_set(4, 3).unwrap(), &h).unwrap();
        // weight-3 codewords of the [15,11] Hamming code: 15*14/6
        assert_eq!(count_unresolved(&g, 3).unwrap(), 35);
        assert_eq!(count_unresolved(&g, 2).unwrap(), 0);
    }

    #[test]
    fn rank_prefix_on_hamming_cog() {
        let code = hamming(3).unwrap();
        let cog = hamming_standard_pcm(3).unwrap().row(0).clone();
        assert!(code.dual_contains(&cog));
        assert_eq!(rank_prefix(&cog, 3).unwrap(), Some(3));
        let rep = cyclic_pcm(&code, &cog, 7).unwrap();
        assert_eq!(rep.rank, 3);
        assert!(cyclic_pcm(&code, &cog, 2).is_err());
    }

    #[test]
    fn root_sum_identity() {
        let f = Field2m::new(6).unwrap();
        assert!(root_sum_is_one(&f, 3).unwrap());
        assert!(root_sum_is_one(&Field2m::new(4).unwrap(), 3).unwrap());
        assert!(root_sum_is_one(&Field2m::new(7).unwrap(), 3).is_err());
        assert_eq!(cube_collision_triples(&f).len(), 21);
    }
}
