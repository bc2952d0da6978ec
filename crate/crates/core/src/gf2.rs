//! Packed binary vectors and matrices over GF(2).
//!
//! Bit index 0 is the leftmost printed symbol, so a row printed as `1000011…`
//! has a one in column 0. Most of the combinatorial machinery in this crate
//! works on `u128` masks (bit `i` = column `i`) and therefore requires
//! `n <= 128`; [`BitWord::to_mask`] performs that conversion.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::combin::binomial_big;
use crate::error::{Error, Result};

/// Largest span dimension any exhaustive routine will enumerate.
pub const SPAN_DIM_LIMIT: usize = 24;

const WORD_BITS: usize = 64;

fn word_count(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A binary word of fixed length, packed 64 bits per limb.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitWord {
    len: usize,
    words: Vec<u64>,
}

impl BitWord {
    pub fn zeros(len: usize) -> Self {
        assert!(len >= 1, "a word needs at least one position");
        BitWord {
            len,
            words: vec![0; word_count(len)],
        }
    }

    pub fn from_support(len: usize, support: &[usize]) -> Result<Self> {
        let mut w = BitWord::zeros(len);
        for &i in support {
            if i >= len {
                return Err(Error::IndexOutOfRange { index: i, len });
            }
            w.set(i, true);
        }
        Ok(w)
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut w = BitWord::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                w.set(i, true);
            }
        }
        w
    }

    pub fn from_mask(len: usize, mask: u128) -> Self {
        let mut w = BitWord::zeros(len);
        let mask = if len >= 128 { mask } else { mask & ((1u128 << len) - 1) };
        w.words[0] = mask as u64;
        if w.words.len() > 1 {
            w.words[1] = (mask >> 64) as u64;
        }
        w
    }

    /// Packs the word into a `u128`, bit `i` holding position `i`.
    pub fn to_mask(&self) -> Result<u128> {
        if self.len > 128 {
            return Err(Error::LengthTooLarge(self.len));
        }
        let lo = self.words[0] as u128;
        let hi = self.words.get(1).copied().unwrap_or(0) as u128;
        Ok(lo | (hi << 64))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn limbs(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let bit = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= bit;
        } else {
            self.words[i / WORD_BITS] &= !bit;
        }
    }

    pub fn flip(&mut self, i: usize) {
        let v = self.get(i);
        self.set(i, !v);
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    pub fn xor_assign(&mut self, other: &BitWord) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitWord) -> BitWord {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn and(&self, other: &BitWord) -> BitWord {
        assert_eq!(self.len, other.len, "length mismatch in and");
        BitWord {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitWord) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    /// Right cyclic shift: position `i` of the result holds position
    /// `(i - s) mod n` of `self`.
    pub fn cyclic_shift(&self, s: usize) -> BitWord {
        let n = self.len;
        let s = s % n;
        if s == 0 {
            return self.clone();
        }
        let mut out = BitWord::zeros(n);
        for i in self.support() {
            out.set((i + s) % n, true);
        }
        out
    }

    /// Appends one position holding the overall parity (even-weight extension).
    pub fn extend_parity(&self) -> BitWord {
        let mut out = BitWord::zeros(self.len + 1);
        for i in self.support() {
            out.set(i, true);
        }
        out.set(self.len, self.weight() % 2 == 1);
        out
    }

    /// Drops the last position.
    pub fn puncture_last(&self) -> BitWord {
        BitWord::from_bits((0..self.len - 1).map(|i| self.get(i)))
    }

    /// Lexicographic order on the printed string (`'0' < '1'`, index 0 first).
    pub fn lex_cmp(&self, other: &BitWord) -> Ordering {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let p = diff.trailing_zeros();
                return if (a >> p) & 1 == 0 { Ordering::Less } else { Ordering::Greater };
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({self})")
    }
}

impl FromStr for BitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse { line: 1, msg: "empty word".into() });
        }
        let mut bits = Vec::with_capacity(s.len());
        for (col, ch) in s.chars().enumerate() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => {
                    return Err(Error::Parse {
                        line: 1,
                        msg: format!("unexpected character {ch:?} at column {col}"),
                    })
                }
            }
        }
        Ok(BitWord::from_bits(bits))
    }
}

/// A dense binary matrix; every row has the same length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    ncols: usize,
    rows: Vec<BitWord>,
}

impl BitMatrix {
    pub fn new(ncols: usize, rows: Vec<BitWord>) -> Result<Self> {
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::LengthMismatch { expected: ncols, got: r.len() });
            }
        }
        Ok(BitMatrix { ncols, rows })
    }

    /// Builds a matrix from a nonempty list of rows of equal length.
    pub fn from_rows(rows: Vec<BitWord>) -> Result<Self> {
        let ncols = rows
            .first()
            .map(|r| r.len())
            .ok_or_else(|| Error::invalid("matrix needs at least one row"))?;
        BitMatrix::new(ncols, rows)
    }

    pub fn empty(ncols: usize) -> Self {
        BitMatrix { ncols, rows: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| BitWord::from_support(n, &[i]).expect("in range"))
            .collect();
        BitMatrix { ncols: n, rows }
    }

    pub fn from_masks(ncols: usize, masks: &[u128]) -> Self {
        BitMatrix {
            ncols,
            rows: masks.iter().map(|&m| BitWord::from_mask(ncols, m)).collect(),
        }
    }

    pub fn to_masks(&self) -> Result<Vec<u128>> {
        self.rows.iter().map(BitWord::to_mask).collect()
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &BitWord {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitWord] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<BitWord> {
        self.rows
    }

    pub fn push_row(&mut self, row: BitWord) -> Result<()> {
        if row.len() != self.ncols {
            return Err(Error::LengthMismatch { expected: self.ncols, got: row.len() });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn stack(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if other.ncols != self.ncols {
            return Err(Error::LengthMismatch { expected: self.ncols, got: other.ncols });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(BitMatrix { ncols: self.ncols, rows })
    }

    pub fn select_rows(&self, idx: impl IntoIterator<Item = usize>) -> BitMatrix {
        BitMatrix {
            ncols: self.ncols,
            rows: idx.into_iter().map(|i| self.rows[i].clone()).collect(),
        }
    }

    pub fn truncate_rows(&self, m: usize) -> BitMatrix {
        self.select_rows(0..m.min(self.nrows()))
    }

    pub fn column(&self, j: usize) -> BitWord {
        BitWord::from_bits(self.rows.iter().map(|r| r.get(j)))
    }

    pub fn transpose(&self) -> BitMatrix {
        let rows = (0..self.ncols).map(|j| self.column(j)).collect();
        BitMatrix { ncols: self.nrows(), rows }
    }

    /// `H · wᵀ` as a word of length `nrows`.
    pub fn syndrome(&self, w: &BitWord) -> BitWord {
        BitWord::from_bits(self.rows.iter().map(|r| r.dot(w)))
    }

    pub fn annihilates(&self, w: &BitWord) -> bool {
        self.rows.iter().all(|r| !r.dot(w))
    }

    /// `self · rhs` where `self` is `a × b` and `rhs` is `b × n`.
    pub fn mul(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.ncols != rhs.nrows() {
            return Err(Error::LengthMismatch { expected: rhs.nrows(), got: self.ncols });
        }
        let rows = self
            .rows
            .iter()
            .map(|a| {
                let mut acc = BitWord::zeros(rhs.ncols);
                for i in a.support() {
                    acc.xor_assign(&rhs.rows[i]);
                }
                acc
            })
            .collect();
        Ok(BitMatrix { ncols: rhs.ncols, rows })
    }

    /// Reduced row-echelon form and its pivot columns. Zero rows are kept at the bottom.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.ncols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
                continue;
            };
            rows.swap(r, p);
            let pivot = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    row.xor_assign(&pivot);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (BitMatrix { ncols: self.ncols, rows }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Independent rows spanning the same space (nonzero rows of the RREF).
    pub fn row_basis(&self) -> BitMatrix {
        let (r, pivots) = self.rref();
        r.truncate_rows(pivots.len())
    }

    /// Basis of `{x : M·xᵀ = 0}`; it has `n - rank` rows.
    pub fn nullspace_basis(&self) -> BitMatrix {
        let (r, pivots) = self.rref();
        let n = self.ncols;
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = BitMatrix::empty(n);
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = BitWord::zeros(n);
            v.set(free, true);
            for (i, &p) in pivots.iter().enumerate() {
                if r.rows[i].get(free) {
                    v.set(p, true);
                }
            }
            basis.rows.push(v);
        }
        basis
    }

    pub fn row_space_contains(&self, w: &BitWord) -> bool {
        let (r, pivots) = self.rref();
        let mut v = w.clone();
        for (i, &p) in pivots.iter().enumerate() {
            if v.get(p) {
                v.xor_assign(&r.rows[i]);
            }
        }
        v.is_zero()
    }

    /// Parses the text format: one row of `0`/`1` per line, `#` comments, blank lines ignored.
    pub fn parse_text(text: &str) -> Result<BitMatrix> {
        let mut rows = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let w: BitWord = t.parse().map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse { line: ln + 1, msg },
                other => other,
            })?;
            if let Some(first) = rows.first().map(|r: &BitWord| r.len()) {
                if w.len() != first {
                    return Err(Error::Parse {
                        line: ln + 1,
                        msg: format!("row has {} columns, expected {first}", w.len()),
                    });
                }
            }
            rows.push(w);
        }
        BitMatrix::from_rows(rows)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.nrows() * (self.ncols + 1));
        for r in &self.rows {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.nrows(), self.ncols)?;
        f.write_str(&self.to_text())
    }
}

pub fn rank(m: &BitMatrix) -> usize {
    m.rank()
}

pub fn rref(m: &BitMatrix) -> (BitMatrix, Vec<usize>) {
    m.rref()
}

pub fn nullspace_basis(m: &BitMatrix) -> BitMatrix {
    m.nullspace_basis()
}

pub fn cyclic_shift(v: &BitWord, s: usize) -> BitWord {
    v.cyclic_shift(s)
}

fn check_span_dim(dim: usize) -> Result<()> {
    if dim > SPAN_DIM_LIMIT {
        Err(Error::DimensionTooLarge { dim, max: SPAN_DIM_LIMIT })
    } else {
        Ok(())
    }
}

/// Calls `f` with the limbs of every word in the span of `basis`, in Gray-code order.
pub fn visit_span(basis: &BitMatrix, mut f: impl FnMut(&[u64])) -> Result<()> {
    let basis = basis.row_basis();
    let dim = basis.nrows();
    check_span_dim(dim)?;
    let mut cur = vec![0u64; word_count(basis.ncols().max(1))];
    f(&cur);
    for i in 1u64..(1u64 << dim) {
        let g = i.trailing_zeros() as usize;
        for (a, b) in cur.iter_mut().zip(basis.row(g).limbs()) {
            *a ^= b;
        }
        f(&cur);
    }
    Ok(())
}

/// Iterator over every codeword of a span, each exactly once (Gray-code order).
pub struct SpanIter {
    basis: BitMatrix,
    cur: BitWord,
    next: u64,
    end: u64,
}

impl Iterator for SpanIter {
    type Item = BitWord;

    fn next(&mut self) -> Option<BitWord> {
        if self.next >= self.end {
            return None;
        }
        if self.next > 0 {
            let g = self.next.trailing_zeros() as usize;
            self.cur.xor_assign(self.basis.row(g));
        }
        self.next += 1;
        Some(self.cur.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for SpanIter {}

pub fn enumerate_span(basis: &BitMatrix) -> Result<SpanIter> {
    let b = basis.row_basis();
    check_span_dim(b.nrows())?;
    let end = 1u64 << b.nrows();
    Ok(SpanIter {
        cur: BitWord::zeros(basis.ncols().max(1)),
        basis: b,
        next: 0,
        end,
    })
}

/// Hamming-weight distribution `A_0..A_n` of a linear code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    pub n: usize,
    pub counts: Vec<u128>,
}

impl WeightEnumerator {
    pub fn from_counts(n: usize, counts: Vec<u128>) -> Result<Self> {
        if counts.len() != n + 1 {
            return Err(Error::LengthMismatch { expected: n + 1, got: counts.len() });
        }
        Ok(WeightEnumerator { n, counts })
    }

    pub fn count(&self, w: usize) -> u128 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().sum()
    }

    /// `log2` of the code size, if the total is a power of two.
    pub fn dimension(&self) -> Option<usize> {
        let t = self.total();
        t.is_power_of_two().then(|| t.trailing_zeros() as usize)
    }

    /// Smallest nonzero weight present, if any.
    pub fn min_distance(&self) -> Option<usize> {
        (1..=self.n).find(|&w| self.counts[w] > 0)
    }
}

pub fn weight_enumerator(basis: &BitMatrix) -> Result<WeightEnumerator> {
    let n = basis.ncols();
    let mut counts = vec![0u128; n + 1];
    visit_span(basis, |w| {
        let wt: u32 = w.iter().map(|x| x.count_ones()).sum();
        counts[wt as usize] += 1;
    })?;
    WeightEnumerator::from_counts(n, counts)
}

/// MacWilliams transform: `dual` is the enumerator of an `(n, n-k)` code; the
/// result is the enumerator of its `k`-dimensional dual.
pub fn macwilliams(dual: &WeightEnumerator, n: usize, k: usize) -> Result<WeightEnumerator> {
    if dual.n != n {
        return Err(Error::InconsistentEnumerator(format!(
            "enumerator length {} does not match n = {n}",
            dual.n
        )));
    }
    if k > n {
        return Err(Error::invalid(format!("k = {k} exceeds n = {n}")));
    }
    let size = BigInt::from(1u8) << (n - k);
    let total: BigInt = dual.counts.iter().map(|&c| BigInt::from(c)).sum();
    if total != size {
        return Err(Error::InconsistentEnumerator(format!(
            "counts sum to {total}, expected 2^{}",
            n - k
        )));
    }
    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut acc = BigInt::zero();
        for (w, &a) in dual.counts.iter().enumerate() {
            if a == 0 {
                continue;
            }
            acc += BigInt::from(a) * krawtchouk(n, j, w);
        }
        let (q, r) = (&acc / &size, &acc % &size);
        if !r.is_zero() || q.is_negative() {
            return Err(Error::InconsistentEnumerator(format!(
                "non-integral coefficient at weight {j}"
            )));
        }
        out.push(q.to_u128().ok_or_else(|| {
            Error::InconsistentEnumerator(format!("coefficient at weight {j} overflows"))
        })?);
    }
    WeightEnumerator::from_counts(n, out)
}

/// `K_j(w) = Σ_i (-1)^i C(w,i) C(n-w, j-i)`.
fn krawtchouk(n: usize, j: usize, w: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 0..=j.min(w) {
        if j - i > n - w {
            continue;
        }
        let term = BigInt::from(binomial_big(w, i)) * BigInt::from(binomial_big(n - w, j - i));
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hamming7() -> BitMatrix {
        BitMatrix::parse_text("1001011\n0101110\n0010111\n").unwrap()
    }

    #[test]
    fn identity_rank_and_rref() {
        let id = BitMatrix::identity(3);
        assert_eq!(id.rank(), 3);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1, 2]);
    }

    #[test]
    fn zero_matrix_rref() {
        let z = BitMatrix::new(4, vec![BitWord::zeros(4), BitWord::zeros(4)]).unwrap();
        let (r, p) = z.rref();
        assert_eq!(r, z);
        assert!(p.is_empty());
        assert_eq!(z.rank(), 0);
    }

    #[test]
    fn nullspace_of_identity_is_empty() {
        assert_eq!(BitMatrix::identity(5).nullspace_basis().nrows(), 0);
    }

    #[test]
    fn hamming_nullspace_is_orthogonal() {
        let h = hamming7();
        let ns = h.nullspace_basis();
        assert_eq!(ns.nrows(), 4);
        for x in ns.rows() {
            assert!(h.annihilates(x));
        }
        // every vector in F_2^7 orthogonal to H lies in the span of the basis
        let mut orth = 0;
        for m in 0u128..128 {
            let x = BitWord::from_mask(7, m);
            if h.annihilates(&x) {
                orth += 1;
                assert!(ns.row_space_contains(&x));
            }
        }
        assert_eq!(orth, 16);
    }

    #[test]
    fn empty_basis_spans_zero_word() {
        let words: Vec<_> = enumerate_span(&BitMatrix::empty(5)).unwrap().collect();
        assert_eq!(words, vec![BitWord::zeros(5)]);
    }

    #[test]
    fn span_guard() {
        let big = BitMatrix::identity(25);
        assert!(matches!(enumerate_span(&big), Err(Error::DimensionTooLarge { dim: 25, .. })));
    }

    #[test]
    fn macwilliams_simplex_to_hamming() {
        let simplex = WeightEnumerator::from_counts(7, vec![1, 0, 0, 0, 7, 0, 0, 0]).unwrap();
        let ham = macwilliams(&simplex, 7, 4).unwrap();
        assert_eq!(ham.counts, vec![1, 0, 0, 7, 7, 0, 0, 1]);
        // and the direct enumeration agrees
        assert_eq!(weight_enumerator(&hamming7().nullspace_basis()).unwrap(), ham);
    }

    #[test]
    fn macwilliams_whole_space_gives_zero_code() {
        let n = 6;
        let counts = (0..=n).map(|w| crate::combin::binomial(n, w)).collect();
        let whole = WeightEnumerator::from_counts(n, counts).unwrap();
        let zero = macwilliams(&whole, n, 0).unwrap();
        assert_eq!(zero.counts, vec![1, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn macwilliams_rejects_bad_total() {
        let bad = WeightEnumerator::from_counts(3, vec![1, 1, 1, 0]).unwrap();
        assert!(macwilliams(&bad, 3, 2).is_err());
    }

    #[test]
    fn shift_examples() {
        let v: BitWord = "10000".parse().unwrap();
        assert_eq!(v.cyclic_shift(1).to_string(), "01000");
        assert_eq!(v.cyclic_shift(5), v);
    }

    #[test]
    fn text_format_round_trip() {
        let text = "# a comment\n101\n\n011\n";
        let m = BitMatrix::parse_text(text).unwrap();
        assert_eq!(m.nrows(), 2);
        assert_eq!(m.to_text(), "101\n011\n");
        assert!(BitMatrix::parse_text("101\n01\n").is_err());
        assert!(BitMatrix::parse_text("1x1\n").is_err());
    }

    #[test]
    fn lex_order_is_string_order() {
        let a: BitWord = "0011".parse().unwrap();
        let b: BitWord = "0100".parse().unwrap();
        assert_eq!(a.lex_cmp(&b), Ordering::Less);
        assert_eq!(a.to_string().cmp(&b.to_string()), Ordering::Less);
    }
}
