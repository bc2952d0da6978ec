//! Closed-form lower and upper bounds on stopping redundancy and on the row
//! counts of cyclic matrices.
//!
//! Counting bounds are exact integer arithmetic. The two local-lemma bounds go
//! through `f64` logarithms; their final ceiling is refused when the real value
//! lies within [`CEIL_GUARD`] of an integer.

use std::fmt;

use serde::Serialize;

use crate::combin::binomial;
use crate::error::{Error, Result};
use crate::gf2::WeightEnumerator;
use crate::stopping::{resolved_by_pair, resolved_by_row, IntersectionProfile};

/// Minimum distance from an integer that a real value must keep before it is rounded up.
pub const CEIL_GUARD: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Upper,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Lower => "lower",
            BoundKind::Upper => "upper",
        })
    }
}

/// A bound value; `value == None` means the bound carries no information.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundResult {
    pub value: Option<u128>,
    pub kind: BoundKind,
    /// What is bounded, e.g. `rho_5` or `mu_7`.
    pub target: String,
    /// Short name of the bound.
    pub name: &'static str,
}

impl BoundResult {
    fn new(value: Option<u128>, kind: BoundKind, target: String, name: &'static str) -> Self {
        BoundResult { value, kind, target, name }
    }

    pub fn is_vacuous(&self) -> bool {
        self.value.is_none()
    }

    /// The value, or an error for a vacuous bound.
    pub fn expect_value(&self) -> Result<u128> {
        self.value
            .ok_or_else(|| Error::invalid(format!("{} bound on {} is vacuous", self.name, self.target)))
    }

    pub fn value_string(&self) -> String {
        self.value.map_or_else(|| "n/a".to_string(), |v| v.to_string())
    }
}

impl fmt::Display for BoundResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} = {}", self.name, self.kind, self.target, self.value_string())
    }
}

fn ceil_div(a: u128, b: u128) -> u128 {
    a.div_ceil(b)
}

/// `⌈(a - p) / (b - p)⌉` for one σ, or `None` when `b <= p`.
fn ratio_term(total: u128, single: u128, pair: u128) -> Option<u128> {
    if single <= pair {
        return None;
    }
    Some(ceil_div(total.saturating_sub(pair), single - pair))
}

fn rho(ell: usize) -> String {
    format!("rho_{ell}")
}

fn mu(ell: usize) -> String {
    format!("mu_{ell}")
}

/// `ω_σ = max(⌈(n+1)/σ⌉ - 1, d⊥)`, the row weight resolving the most σ-sets.
pub fn omega_sigma(n: usize, sigma: usize, d_dual: usize) -> usize {
    ((n + 1).div_ceil(sigma) - 1).max(d_dual)
}

/// Counting lower bound on `ρ_ℓ`: `max_{σ<ℓ} max(n-k, ⌈C(n,σ) / (ω_σ C(n-ω_σ, σ-1))⌉)`.
pub fn lb_schwartz_vardy(n: usize, k: usize, d_dual: usize, ell: usize) -> Result<BoundResult> {
    if ell < 2 || k > n {
        return Err(Error::invalid(format!("need ℓ >= 2 and k <= n, got ℓ = {ell}, k = {k}")));
    }
    let mut best = (n - k) as u128;
    for sigma in 1..ell {
        let w = omega_sigma(n, sigma, d_dual).min(n);
        let per_row = resolved_by_row(n, w, sigma);
        if per_row == 0 {
            continue;
        }
        best = best.max(ceil_div(binomial(n, sigma), per_row));
    }
    Ok(BoundResult::new(Some(best), BoundKind::Lower, rho(ell), "counting"))
}

/// Pairwise Bonferroni lower bound for constant row weight `ω`:
/// `max_{σ<ℓ} ⌈(C(n,σ) - |Σ_P|) / (ω C(n-ω,σ-1) - |Σ_P|)⌉`, with `|Σ_P|` the largest
/// pairwise resolved count over `profiles`. Sizes σ with a non-positive denominator
/// contribute nothing; if none contributes the result is vacuous.
pub fn lb_bonferroni_constweight(
    n: usize,
    omega: usize,
    profiles: &[IntersectionProfile],
    ell: usize,
) -> Result<BoundResult> {
    if omega > n || ell < 2 {
        return Err(Error::invalid(format!("need ω <= n and ℓ >= 2, got ω = {omega}, ℓ = {ell}")));
    }
    let mut best: Option<u128> = None;
    for sigma in 1..ell {
        let pair = profiles.iter().map(|p| resolved_by_pair(p, sigma)).max().unwrap_or(0);
        if let Some(v) = ratio_term(binomial(n, sigma), resolved_by_row(n, omega, sigma), pair) {
            best = Some(best.map_or(v, |b| b.max(v)));
        }
    }
    Ok(BoundResult::new(best, BoundKind::Lower, rho(ell), "bonferroni"))
}

fn check_lll_range(ell: usize, d: usize) -> Result<()> {
    if ell < 2 || ell > d.div_ceil(2) {
        return Err(Error::invalid(format!("ℓ = {ell} outside [2, ⌊(d+1)/2⌋] for d = {d}")));
    }
    Ok(())
}

fn guarded_ceil(x: f64) -> Result<u128> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::invalid(format!("bound evaluates to {x}")));
    }
    if (x - x.round()).abs() < CEIL_GUARD {
        return Err(Error::invalid(format!("bound value {x} too close to an integer to round up reliably")));
    }
    Ok(x.ceil() as u128)
}

/// `ln(1 - (ℓ-1)/2^{ℓ-1})`.
fn ln_miss(ell: usize) -> f64 {
    let p = (ell - 1) as f64 / 2f64.powi(ell as i32 - 1);
    (-p).ln_1p()
}

/// Local-lemma existence bound on `ρ_ℓ`, including the `n-k-ℓ+1` rank-completion rows.
pub fn ub_lll(n: usize, k: usize, d: usize, ell: usize) -> Result<BoundResult> {
    check_lll_range(ell, d)?;
    let dep: u128 = (1..ell).map(|j| binomial(n, j) - binomial(n - j, j)).sum();
    let m = (1.0 + (dep as f64).ln()) / -ln_miss(ell);
    let value = guarded_ceil(m)? + (n - k - ell + 1) as u128;
    Ok(BoundResult::new(Some(value), BoundKind::Upper, rho(ell), "lll"))
}

/// Row count before rank completion for [`ub_lll_hp`].
pub fn lll_hp_rows(n: usize, ell: usize, eps: f64) -> Result<f64> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::invalid(format!("ε = {eps} outside (0, 1)")));
    }
    let big_n: u128 = (1..ell).map(|j| binomial(n, j)).sum();
    let q = eps / big_n as f64;
    let dep: u128 = (1..ell).map(|j| binomial(n, j) - binomial(n - j, j) - 1).sum();
    Ok((q.ln() + dep as f64 * (-q).ln_1p()) / ln_miss(ell))
}

/// Bound on `ρ_ℓ` holding for a random choice of dual codewords with probability `≥ 1-ε`.
pub fn ub_lll_hp(n: usize, k: usize, d: usize, ell: usize, eps: f64) -> Result<BoundResult> {
    check_lll_range(ell, d)?;
    let m = lll_hp_rows(n, ell, eps)?;
    let value = guarded_ceil(m)? + (n - k - ell + 1) as u128;
    Ok(BoundResult::new(Some(value), BoundKind::Upper, rho(ell), "lll-hp"))
}

/// All sums of at most `ℓ-2` of `r` basis rows: `Σ_{i=1}^{ℓ-2} C(r, i)`.
pub fn ub_sum_rows(r: usize, ell: usize) -> Result<BoundResult> {
    if r == 0 || ell < 3 {
        return Err(Error::invalid(format!("need r >= 1 and ℓ >= 3, got r = {r}, ℓ = {ell}")));
    }
    let value = (1..=ell - 2).map(|i| binomial(r, i)).sum();
    Ok(BoundResult::new(Some(value), BoundKind::Upper, rho(ell), "sum-rows"))
}

/// Cyclic difference-set row-count bound:
/// `max_{σ<ℓ} ⌈(C(n,σ) - M)/(k C(n-k,σ-1) - M)⌉`,
/// `M = λ C(n-2k+λ, σ-1) + (k-λ)^2 C(n-2k+λ, σ-2)`.
pub fn lb_mu_cds(n: usize, k: usize, lambda: usize, ell: usize) -> Result<BoundResult> {
    if k > n || lambda > k || n + lambda < 2 * k || ell < 2 {
        return Err(Error::invalid(format!("invalid difference-set parameters ({n}, {k}, {lambda})")));
    }
    let zz = n + lambda - 2 * k;
    let profile = IntersectionProfile { kappa: 0, oo: lambda, oz: k - lambda, zo: k - lambda, zz };
    let mut best: Option<u128> = None;
    for sigma in 1..ell {
        let pair = resolved_by_pair(&profile, sigma);
        if let Some(v) = ratio_term(binomial(n, sigma), resolved_by_row(n, k, sigma), pair) {
            best = Some(best.map_or(v, |b| b.max(v)));
        }
    }
    Ok(BoundResult::new(best, BoundKind::Lower, mu(ell), "cds-cyclic"))
}

/// QR idempotent row-count bound; the idempotent's support forms a
/// `(n, (n+1)/2, (n+1)/4)` difference set.
pub fn lb_mu_qr(n: usize, ell: usize) -> Result<BoundResult> {
    let prime = n >= 3 && (2..).take_while(|i| i * i <= n).all(|i| !n.is_multiple_of(i));
    if !prime || n % 4 != 3 {
        return Err(Error::invalid(format!("QR length must be a prime ≡ 3 mod 4, got {n}")));
    }
    let t = (n + 1) / 4;
    let mut best: Option<u128> = None;
    for sigma in 1..ell {
        let single = resolved_by_row(n, n.div_ceil(2), sigma);
        let c1 = binomial((n - 3) / 4, sigma - 1);
        let c2 = if sigma >= 2 { binomial((n - 3) / 4, sigma - 2) } else { 0 };
        let pair = t as u128 * (c1 + t as u128 * c2);
        if let Some(v) = ratio_term(binomial(n, sigma), single, pair) {
            best = Some(best.map_or(v, |b| b.max(v)));
        }
    }
    Ok(BoundResult::new(best, BoundKind::Lower, mu(ell), "qr-cyclic"))
}

/// Covering lower bound `⌈n/k ⌈(n-1)/(k-1) ⌈ … ⌈(n-d+2)/(k-d+2)⌉ … ⌉⌉⌉`.
pub fn schoenheim(n: usize, k: usize, d: usize) -> Result<BoundResult> {
    if d < 2 || k + 1 < d || k > n {
        return Err(Error::invalid(format!("need 2 <= d <= k+1 and k <= n, got ({n}, {k}, {d})")));
    }
    let mut acc: u128 = 1;
    for i in (0..=d - 2).rev() {
        acc = ceil_div((n - i) as u128 * acc, (k - i) as u128);
    }
    Ok(BoundResult::new(Some(acc), BoundKind::Lower, "covering".into(), "schoenheim"))
}

/// `ρ_{s+1} <= (n-k)·S` for an s-SAD set of size `S`.
pub fn rho_from_sad(n: usize, k: usize, s: usize, sad_size: usize) -> Result<BoundResult> {
    if k > n || sad_size == 0 {
        return Err(Error::invalid("need k <= n and a nonempty SAD set"));
    }
    Ok(BoundResult::new(
        Some(((n - k) * sad_size) as u128),
        BoundKind::Upper,
        rho(s + 1),
        "sad",
    ))
}

/// `Σ_{w>=1} A_w ep^w`.
pub fn ml_union_bound_fer(e: &WeightEnumerator, ep: f64) -> Result<f64> {
    if !(ep > 0.0 && ep < 1.0) {
        return Err(Error::invalid(format!("erasure probability {ep} outside (0, 1)")));
    }
    Ok(e.counts
        .iter()
        .enumerate()
        .skip(1)
        .map(|(w, &a)| a as f64 * ep.powi(w as i32))
        .sum())
}
