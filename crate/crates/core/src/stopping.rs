//! Stopping sets, stopping distance, resolution counts and intersection numbers.
//!
//! A column set `I` is a stopping set of `H` when no row of `H` restricted to
//! `I` has weight exactly one. A row *resolves* `I` when its restriction does.

use std::fmt;

use serde::Serialize;

use crate::combin::{self, binomial, check_guard, mask_indices, par_count_subsets, par_find_subset, Subsets};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitWord};

/// Largest number of subsets any single counting sweep will visit.
pub const ENUM_GUARD: u128 = 100_000_000;

/// Largest number of row subsets visited by [`pie_union_exact`].
pub const PIE_GUARD: u128 = 10_000_000;

/// A parity-check matrix packed into `u128` row masks (bit `i` = column `i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaskMatrix {
    pub n: usize,
    pub rows: Vec<u128>,
}

#[inline]
fn weight_one(x: u128) -> bool {
    x != 0 && x & (x - 1) == 0
}

impl MaskMatrix {
    pub fn new(h: &BitMatrix) -> Result<Self> {
        if h.ncols() > 128 {
            return Err(Error::LengthTooLarge(h.ncols()));
        }
        Ok(MaskMatrix { n: h.ncols(), rows: h.to_masks()? })
    }

    /// True iff no row meets `set` in exactly one position.
    #[inline]
    pub fn is_stopping(&self, set: u128) -> bool {
        self.rows.iter().all(|&r| !weight_one(r & set))
    }

    /// Number of rows resolving `set`.
    #[inline]
    pub fn resolver_count(&self, set: u128) -> usize {
        self.rows.iter().filter(|&&r| weight_one(r & set)).count()
    }

    pub fn to_bit_matrix(&self) -> BitMatrix {
        BitMatrix::from_masks(self.n, &self.rows)
    }
}

/// Whether the columns `set` form a stopping set of `h`.
pub fn is_stopping_set(h: &BitMatrix, set: &[usize]) -> Result<bool> {
    if set.is_empty() {
        return Err(Error::invalid("stopping-set test needs a nonempty column set"));
    }
    for &i in set {
        if i >= h.ncols() {
            return Err(Error::IndexOutOfRange { index: i, len: h.ncols() });
        }
    }
    Ok(h.rows().iter().all(|r| set.iter().filter(|&&i| r.get(i)).count() != 1))
}

/// Outcome of a bounded stopping-distance search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StoppingDistance {
    /// Smallest stopping set has exactly this size.
    Exact(usize),
    /// No stopping set up to `cap`; the distance is at least `cap + 1`.
    AtLeast(usize),
}

impl StoppingDistance {
    /// Lower bound implied by the result.
    pub fn lower_bound(&self) -> usize {
        match *self {
            StoppingDistance::Exact(d) | StoppingDistance::AtLeast(d) => d,
        }
    }

    pub fn at_least(&self, ell: usize) -> bool {
        self.lower_bound() >= ell
    }
}

impl fmt::Display for StoppingDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StoppingDistance::Exact(d) => write!(f, "{d}"),
            StoppingDistance::AtLeast(d) => write!(f, ">={d}"),
        }
    }
}

/// Smallest stopping set size, searching sizes `1..=cap` exhaustively.
pub fn stopping_distance(h: &BitMatrix, cap: usize) -> Result<StoppingDistance> {
    let mm = MaskMatrix::new(h)?;
    stopping_distance_masks(&mm, cap)
}

pub fn stopping_distance_masks(mm: &MaskMatrix, cap: usize) -> Result<StoppingDistance> {
    if cap > mm.n {
        return Err(Error::invalid(format!("cap {cap} exceeds n = {}", mm.n)));
    }
    check_guard("stopping distance", combin::binomial_sum(mm.n, 1, cap), ENUM_GUARD)?;
    for sigma in 1..=cap {
        if par_find_subset(mm.n, sigma, |s| mm.is_stopping(s))?.is_some() {
            return Ok(StoppingDistance::Exact(sigma));
        }
    }
    Ok(StoppingDistance::AtLeast(cap + 1))
}

/// First stopping set (in colex order) of the smallest size up to `cap`.
pub fn smallest_stopping_set(h: &BitMatrix, cap: usize) -> Result<Option<Vec<usize>>> {
    let mm = MaskMatrix::new(h)?;
    check_guard("stopping set search", combin::binomial_sum(mm.n, 1, cap.min(mm.n)), ENUM_GUARD)?;
    for sigma in 1..=cap.min(mm.n) {
        if let Some(s) = par_find_subset(mm.n, sigma, |s| mm.is_stopping(s))? {
            return Ok(Some(mask_indices(s)));
        }
    }
    Ok(None)
}

/// Smallest stopping set of `h` (up to `cap`) using only columns in `domain`.
pub fn smallest_stopping_set_within(h: &BitMatrix, domain: &[usize], cap: usize) -> Result<Option<Vec<usize>>> {
    let mm = MaskMatrix::new(h)?;
    if let Some(&bad) = domain.iter().find(|&&c| c >= mm.n) {
        return Err(Error::IndexOutOfRange { index: bad, len: mm.n });
    }
    let d = domain.len();
    let cap = cap.min(d);
    check_guard("stopping set search", combin::binomial_sum(d, 1, cap), ENUM_GUARD)?;
    let scatter = |s: u128| mask_indices(s).into_iter().fold(0u128, |m, i| m | (1u128 << domain[i]));
    for sigma in 1..=cap {
        if let Some(s) = par_find_subset(d, sigma, |s| mm.is_stopping(scatter(s)))? {
            let mut set = mask_indices(scatter(s));
            set.sort_unstable();
            return Ok(Some(set));
        }
    }
    Ok(None)
}

/// Number of σ-subsets of columns that are stopping sets of `h`.
pub fn count_unresolved(h: &BitMatrix, sigma: usize) -> Result<u128> {
    count_unresolved_masks(&MaskMatrix::new(h)?, sigma)
}

pub fn count_unresolved_masks(mm: &MaskMatrix, sigma: usize) -> Result<u128> {
    check_guard("stopping-set count", binomial(mm.n, sigma), ENUM_GUARD)?;
    par_count_subsets(mm.n, sigma, |s| mm.is_stopping(s))
}

/// `(σ, count)` rows for σ = 1..=sigma_max.
pub fn stopping_set_counts(h: &BitMatrix, sigma_max: usize) -> Result<Vec<(usize, u128)>> {
    let mm = MaskMatrix::new(h)?;
    (1..=sigma_max).map(|s| Ok((s, count_unresolved_masks(&mm, s)?))).collect()
}

/// CSV with header `sigma,count`.
pub fn counts_csv(rows: &[(usize, u128)]) -> String {
    let mut s = String::from("sigma,count\n");
    for (sigma, c) in rows {
        s.push_str(&format!("{sigma},{c}\n"));
    }
    s
}

/// σ-sets resolved by one row of weight `w`: `w·C(n-w, σ-1)`.
pub fn resolved_by_row(n: usize, w: usize, sigma: usize) -> u128 {
    if sigma == 0 || w > n {
        return 0;
    }
    w as u128 * binomial(n - w, sigma - 1)
}

/// Intersection numbers between two rows (or a row and its κ-shift).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IntersectionProfile {
    /// Shift distance; 0 when the profile is between two arbitrary rows.
    pub kappa: usize,
    pub oo: usize,
    pub oz: usize,
    pub zo: usize,
    pub zz: usize,
}

impl IntersectionProfile {
    pub fn n(&self) -> usize {
        self.oo + self.oz + self.zo + self.zz
    }
}

/// Profile of rows `a` and `b`: `oz` counts positions with a one in `a` and a zero in `b`.
pub fn pair_profile(a: &BitWord, b: &BitWord) -> IntersectionProfile {
    let n = a.len();
    let oo = a.and(b).weight();
    let wa = a.weight();
    let wb = b.weight();
    IntersectionProfile {
        kappa: 0,
        oo,
        oz: wa - oo,
        zo: wb - oo,
        zz: n - wa - wb + oo,
    }
}

/// Counts of position pairs `(a, a+κ mod n)` of `h` by symbol pattern.
pub fn xy_kappa(h: &BitWord, kappa: usize) -> IntersectionProfile {
    let n = h.len();
    let shifted = h.cyclic_shift(n - kappa % n);
    // shifted[a] = h[a + κ]
    let mut p = pair_profile(h, &shifted);
    p.kappa = kappa;
    p
}

/// σ-sets resolved jointly by two rows with the given intersection numbers.
pub fn resolved_by_pair(p: &IntersectionProfile, sigma: usize) -> u128 {
    if sigma == 0 {
        return 0;
    }
    let first = p.oo as u128 * binomial(p.zz, sigma - 1);
    let second = if sigma >= 2 {
        p.oz as u128 * p.zo as u128 * binomial(p.zz, sigma - 2)
    } else {
        0
    };
    first + second
}

/// Partial sums `S_{σ,j}`, j = 1..=j_max: for each j-set `T` of rows, the number
/// of σ-sets resolved by every row of `T`, summed over `T`.
pub fn pie_union_exact(h: &BitMatrix, sigma: usize, j_max: usize) -> Result<Vec<u128>> {
    let mm = MaskMatrix::new(h)?;
    let m = mm.rows.len();
    if m > 128 {
        return Err(Error::invalid("inclusion-exclusion over more than 128 rows"));
    }
    let j_max = j_max.min(m);
    let row_subsets = combin::binomial_sum(m, 1, j_max);
    check_guard("inclusion-exclusion row subsets", row_subsets, PIE_GUARD)?;
    check_guard(
        "inclusion-exclusion evaluations",
        row_subsets.saturating_mul(binomial(mm.n, sigma)),
        ENUM_GUARD * 10,
    )?;
    let sets: Vec<u128> = Subsets::all(mm.n, sigma)?.collect();
    let mut out = Vec::with_capacity(j_max);
    for j in 1..=j_max {
        let mut total = 0u128;
        for t in Subsets::all(m, j)? {
            let rows: Vec<u128> = mask_indices(t).into_iter().map(|i| mm.rows[i]).collect();
            total += sets
                .iter()
                .filter(|&&s| rows.iter().all(|&r| weight_one(r & s)))
                .count() as u128;
        }
        out.push(total);
    }
    Ok(out)
}

/// `Σ_j (-1)^{j-1} S_j`.
pub fn pie_alternating_sum(partial: &[u128]) -> i128 {
    partial
        .iter()
        .enumerate()
        .map(|(i, &s)| if i % 2 == 0 { s as i128 } else { -(s as i128) })
        .sum()
}

/// Upper bound on the σ-sets resolved by `m` consecutive shifts of `h`:
/// `m|Σ_1| - (2/m) Σ_{κ=1}^{m-1} (m-κ)|Σ_1 ∩ Σ_{1+κ}|`, rounded down.
pub fn bonferroni_upper_cyclic(h: &BitWord, m: usize, sigma: usize) -> Result<i128> {
    let n = h.len();
    if m == 0 || m > n {
        return Err(Error::invalid(format!("m = {m} outside [1, {n}]")));
    }
    let single = resolved_by_row(n, h.weight(), sigma) as i128;
    let pairs: i128 = (1..m)
        .map(|k| (m - k) as i128 * resolved_by_pair(&xy_kappa(h, k), sigma) as i128)
        .sum();
    let num = m as i128 * single * m as i128 - 2 * pairs;
    Ok(num.div_euclid(m as i128))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example1() -> BitMatrix {
        BitMatrix::parse_text("10001\n10010\n").unwrap()
    }

    #[test]
    fn example1_restrictions() {
        let h = example1();
        assert!(!is_stopping_set(&h, &[0, 1, 2]).unwrap());
        assert!(is_stopping_set(&h, &[1, 2]).unwrap());
        assert!(is_stopping_set(&h, &[9]).is_err());
        assert!(is_stopping_set(&h, &[]).is_err());
    }

    #[test]
    fn lemma_examples() {
        assert_eq!(resolved_by_row(5, 2, 3), 6);
        assert_eq!(resolved_by_row(9, 4, 1), 4);
        assert_eq!(resolved_by_row(6, 6, 2), 0);
        let p = IntersectionProfile { kappa: 0, oo: 0, oz: 8, zo: 8, zz: 7 };
        assert_eq!(resolved_by_pair(&p, 3), 448);
        let q = IntersectionProfile { kappa: 0, oo: 3, oz: 1, zo: 2, zz: 4 };
        assert_eq!(resolved_by_pair(&q, 1), 3);
    }

    #[test]
    fn bonferroni_single_row_is_exact() {
        let h: BitWord = "1101000".parse().unwrap();
        for sigma in 1..5 {
            assert_eq!(bonferroni_upper_cyclic(&h, 1, sigma).unwrap(), resolved_by_row(7, 3, sigma) as i128);
        }
    }

    #[test]
    fn distance_display() {
        assert_eq!(StoppingDistance::AtLeast(5).to_string(), ">=5");
        assert!(StoppingDistance::Exact(7).at_least(7));
    }
}
