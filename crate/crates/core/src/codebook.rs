//! Code families, cogs and their cyclic orbits, and fixture matrices.
//!
//! Representation choices:
//! - GF(2^m) uses the primitive polynomials of [`crate::field::default_primitive_poly`]
//!   (x^3+x+1, x^5+x^2+1, x^6+x+1, x^7+x^3+1, ...), with row `b` of an
//!   expanded power row holding the coefficient of `α^b`.
//! - The [23,12,7] Golay code is generated by `g(x) = 1+x^2+x^4+x^5+x^6+x^10+x^11`.
//! - Extension appends an overall parity bit at the last position.
//!
//! With these choices every printed cog used in this crate lies in the dual of
//! the code it belongs to; [`named_cog`] checks that on load.

use std::collections::BTreeMap;

use crate::combin::rotate_mask;
use crate::error::{Error, Result};
use crate::field::{Field2m, Poly2};
use crate::gf2::{macwilliams, weight_enumerator, BitMatrix, BitWord, WeightEnumerator, SPAN_DIM_LIMIT};
use crate::stopping::xy_kappa;

/// A binary linear `[n, k, d]` code with both bases.
#[derive(Clone, Debug)]
pub struct Code {
    pub name: String,
    pub n: usize,
    pub k: usize,
    /// Minimum distance when known.
    pub d: Option<usize>,
    pub generator: BitMatrix,
    pub parity: BitMatrix,
    pub cyclic: bool,
    pub extended: bool,
}

impl Code {
    /// Builds the code `{x : H xᵀ = 0}`. `H` may be redundant.
    pub fn from_parity(name: impl Into<String>, h: &BitMatrix) -> Code {
        let parity = h.row_basis();
        let generator = h.nullspace_basis();
        Code {
            name: name.into(),
            n: h.ncols(),
            k: generator.nrows(),
            d: None,
            generator,
            parity,
            cyclic: false,
            extended: false,
        }
    }

    /// Builds the row space of `G`.
    pub fn from_generator(name: impl Into<String>, g: &BitMatrix) -> Code {
        let generator = g.row_basis();
        let parity = g.nullspace_basis();
        Code {
            name: name.into(),
            n: g.ncols(),
            k: generator.nrows(),
            d: None,
            generator,
            parity,
            cyclic: false,
            extended: false,
        }
    }

    /// Cyclic code generated by `g(x)`, which must divide `x^n + 1`.
    pub fn cyclic_from_generator_poly(name: impl Into<String>, n: usize, g: &Poly2) -> Result<Code> {
        let (_, r) = Poly2::xn_plus_one(n).div_rem(g);
        if !r.is_zero() {
            return Err(Error::Construction(format!("generator polynomial does not divide x^{n}+1")));
        }
        let base = BitWord::from_support(n, &g.exponents())?;
        let deg = g.degree().unwrap_or(0);
        let rows = (0..n - deg).map(|s| base.cyclic_shift(s)).collect();
        let mut code = Code::from_generator(name, &BitMatrix::new(n, rows)?);
        code.cyclic = true;
        Ok(code)
    }

    /// Cyclic code whose dual is spanned by the cyclic shifts of `h`.
    pub fn cyclic_from_dual_word(name: impl Into<String>, h: &BitWord) -> Result<Code> {
        let rows = (0..h.len()).map(|s| h.cyclic_shift(s)).collect();
        let mut code = Code::from_parity(name, &BitMatrix::new(h.len(), rows)?);
        code.cyclic = true;
        Ok(code)
    }

    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    pub fn contains(&self, w: &BitWord) -> bool {
        w.len() == self.n && self.parity.annihilates(w)
    }

    pub fn dual_contains(&self, w: &BitWord) -> bool {
        w.len() == self.n && self.generator.annihilates(w)
    }

    /// First row of `h` that is not a dual codeword.
    pub fn check_dual_rows(&self, h: &BitMatrix) -> Result<()> {
        if h.ncols() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: h.ncols() });
        }
        match h.rows().iter().position(|r| !self.dual_contains(r)) {
            Some(row) => Err(Error::NotInDual { row }),
            None => Ok(()),
        }
    }

    pub fn dual(&self) -> Code {
        Code {
            name: format!("{}-dual", self.name),
            n: self.n,
            k: self.n - self.k,
            d: None,
            generator: self.parity.clone(),
            parity: self.generator.clone(),
            cyclic: self.cyclic,
            extended: false,
        }
    }

    /// Even-weight extension with the overall parity bit at index `n`.
    pub fn extend(&self) -> Result<Code> {
        let n = self.n + 1;
        let gen = BitMatrix::new(n, self.generator.rows().iter().map(BitWord::extend_parity).collect())?;
        let mut code = Code::from_generator(format!("{}-ext", self.name), &gen);
        code.extended = true;
        code.d = self.d.map(|d| d + d % 2);
        Ok(code)
    }

    /// Checks `G Hᵀ = 0`, both ranks and, for cyclic codes, shift closure.
    pub fn verify(&self) -> Result<()> {
        if self.generator.rank() != self.k {
            return Err(Error::RankDeficient { expected: self.k, got: self.generator.rank() });
        }
        if self.parity.rank() != self.n - self.k {
            return Err(Error::RankDeficient { expected: self.n - self.k, got: self.parity.rank() });
        }
        for g in self.generator.rows() {
            if !self.parity.annihilates(g) {
                return Err(Error::Construction(format!("{}: generator row outside the code", self.name)));
            }
            if self.cyclic && !self.parity.annihilates(&g.cyclic_shift(1)) {
                return Err(Error::Construction(format!("{}: not closed under cyclic shift", self.name)));
            }
        }
        Ok(())
    }

    /// Weight enumerator, by direct enumeration of whichever side is small enough.
    pub fn weight_enumerator(&self) -> Result<WeightEnumerator> {
        if self.k <= SPAN_DIM_LIMIT {
            weight_enumerator(&self.generator)
        } else if self.n - self.k <= SPAN_DIM_LIMIT {
            macwilliams(&weight_enumerator(&self.parity)?, self.n, self.k)
        } else {
            Err(Error::DimensionTooLarge { dim: self.k.min(self.n - self.k), max: SPAN_DIM_LIMIT })
        }
    }

    pub fn dual_weight_enumerator(&self) -> Result<WeightEnumerator> {
        self.dual().weight_enumerator()
    }

    /// Computes, stores and returns the minimum distance.
    pub fn compute_min_distance(&mut self) -> Result<usize> {
        let d = self
            .weight_enumerator()?
            .min_distance()
            .ok_or_else(|| Error::invalid("zero code has no minimum distance"))?;
        self.d = Some(d);
        Ok(d)
    }
}

/// Binary expansion of the power rows `α^{e j}`, `j = 0..2^m-2`, one block of `m` rows per exponent.
pub fn bch_pcm(field: &Field2m, exponents: &[usize]) -> Result<BitMatrix> {
    let n = field.order();
    if exponents.is_empty() {
        return Err(Error::invalid("exponent list is empty"));
    }
    let mut rows = Vec::with_capacity(exponents.len() * field.m() as usize);
    for &e in exponents {
        if e == 0 || e >= n {
            return Err(Error::invalid(format!("exponent {e} outside [1, {}]", n - 1)));
        }
        for b in 0..field.m() {
            let mut row = BitWord::zeros(n);
            for j in 0..n {
                if field.alpha_pow((e * j) as i64) >> b & 1 == 1 {
                    row.set(j, true);
                }
            }
            rows.push(row);
        }
    }
    BitMatrix::new(n, rows)
}

/// `m × (2^m-1)` matrix whose column `j` is `α^j`.
pub fn hamming_standard_pcm(m: u32) -> Result<BitMatrix> {
    bch_pcm(&Field2m::new(m)?, &[1])
}

pub fn hamming(m: u32) -> Result<Code> {
    let mut c = Code::from_parity(format!("hamming{}", (1usize << m) - 1), &hamming_standard_pcm(m)?);
    c.cyclic = true;
    c.d = Some(3);
    Ok(c)
}

/// Narrow-sense BCH code with zeros at the conjugates of `α^e`, `e ∈ exponents`.
pub fn bch_code(m: u32, exponents: &[usize]) -> Result<Code> {
    let f = Field2m::new(m)?;
    let mut c = Code::from_parity(format!("bch{}", f.order()), &bch_pcm(&f, exponents)?);
    c.cyclic = true;
    Ok(c)
}

pub const GOLAY_GENERATOR: [usize; 7] = [0, 2, 4, 5, 6, 10, 11];

pub fn golay(extended: bool) -> Result<Code> {
    let mut c = Code::cyclic_from_generator_poly("golay23", 23, &Poly2::from_exponents(&GOLAY_GENERATOR))?;
    c.d = Some(7);
    if extended {
        let mut e = c.extend()?;
        e.name = "golay24".into();
        return Ok(e);
    }
    Ok(c)
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|i| i * i <= n).all(|i| !n.is_multiple_of(i))
}

/// Quadratic residues modulo prime `n`.
pub fn quadratic_residues(n: usize) -> Vec<usize> {
    let mut r: Vec<usize> = (1..n).map(|x| x * x % n).collect();
    r.sort_unstable();
    r.dedup();
    r
}

/// The binary QR code of prime length `n` and the idempotent `1 + Σ_{ν ∈ N} x^ν`
/// of its dual (nonresidues `N`), whose cyclic shifts span the dual.
pub fn qr_code(n: usize) -> Result<(Code, BitWord)> {
    if !is_prime(n) || n % 4 != 3 {
        return Err(Error::invalid(format!("QR length must be a prime ≡ 3 mod 4, got {n}")));
    }
    let res = quadratic_residues(n);
    if res.binary_search(&2).is_err() {
        return Err(Error::invalid(format!("2 is not a residue mod {n}; no binary QR code")));
    }
    let mut support = vec![0];
    support.extend((1..n).filter(|x| res.binary_search(x).is_err()));
    let idem = BitWord::from_support(n, &support)?;
    let mut code = Code::cyclic_from_dual_word(format!("qr{n}"), &idem)?;
    if code.k != n.div_ceil(2) {
        return Err(Error::Construction(format!("QR code of length {n} has dimension {}", code.k)));
    }
    if code.k <= 16 {
        code.compute_min_distance()?;
    }
    Ok((code, idem))
}

/// A Singer difference set with its parameters.
#[derive(Clone, Debug)]
pub struct DifferenceSet {
    pub n: usize,
    pub elements: Vec<usize>,
    pub lambda: usize,
}

/// Singer set `{i ∈ [0,n) : Tr(α^i) = 0}` with `q = 2^s`, `n = q^2+q+1`,
/// `α` primitive in GF(q^3) and `Tr` the trace to GF(q).
pub fn singer_difference_set(s: u32) -> Result<DifferenceSet> {
    if s == 0 {
        return Err(Error::invalid("s must be at least 1"));
    }
    let q = 1usize << s;
    let n = q * q + q + 1;
    let f = Field2m::new(3 * s)?;
    let mut elements = Vec::new();
    for i in 0..n {
        if f.trace_to(f.alpha_pow(i as i64), s)? == 0 {
            elements.push(i);
        }
    }
    if elements.len() != q + 1 {
        return Err(Error::Construction(format!(
            "Singer set has {} elements, expected {}",
            elements.len(),
            q + 1
        )));
    }
    let ds = DifferenceSet { n, elements, lambda: 1 };
    let reps = difference_counts(&ds.elements, n);
    if reps[1..].iter().any(|&c| c != ds.lambda) {
        return Err(Error::Construction("Singer set fails the λ = 1 property".into()));
    }
    Ok(ds)
}

/// `counts[i]` = number of ordered pairs `(a, b)` in `set` with `a - b ≡ i (mod n)`.
pub fn difference_counts(set: &[usize], n: usize) -> Vec<usize> {
    let mut counts = vec![0; n];
    for &a in set {
        for &b in set {
            if a != b {
                counts[(a + n - b) % n] += 1;
            }
        }
    }
    counts
}

/// Cyclic difference-set code: its dual is spanned by the shifts of `z(x) = Σ x^{d_i}`.
/// Returns the code and `z`; `k` and `d` are computed, not assumed.
pub fn cds_code(s: u32) -> Result<(Code, BitWord)> {
    let ds = singer_difference_set(s)?;
    let z = BitWord::from_support(ds.n, &ds.elements)?;
    let mut code = Code::cyclic_from_dual_word(format!("cds{}", ds.n), &z)?;
    let h = Poly2::from_exponents(&ds.elements).gcd(&Poly2::xn_plus_one(ds.n));
    debug_assert_eq!(code.k, h.degree().unwrap_or(0));
    if code.k <= 16 {
        code.compute_min_distance()?;
    }
    Ok((code, z))
}

/// The `[2^s-1, s, 2^{s-1}]` simplex code.
pub fn simplex(s: u32) -> Result<Code> {
    let mut c = Code::from_generator(format!("simplex{}", (1usize << s) - 1), &hamming_standard_pcm(s)?);
    c.cyclic = true;
    c.d = Some(1 << (s - 1));
    Ok(c)
}

/// Parses an octal cog (most significant bit first) into a length-`n` word.
/// Accepts digits separated by spaces or commas, optionally in brackets.
pub fn parse_octal_cog(digits: &str, n: usize) -> Result<BitWord> {
    let mut bits = Vec::new();
    for ch in digits.chars() {
        match ch {
            '0'..='7' => {
                let v = ch as u8 - b'0';
                bits.extend([v >> 2 & 1 == 1, v >> 1 & 1 == 1, v & 1 == 1]);
            }
            ' ' | ',' | '[' | ']' | '\t' => {}
            _ => return Err(Error::Parse { line: 1, msg: format!("bad octal digit {ch:?}") }),
        }
    }
    if bits.len() < n || bits.len() - n >= 3 {
        return Err(Error::Parse {
            line: 1,
            msg: format!("{} octal digits cannot encode {n} bits", bits.len() / 3),
        });
    }
    let pad = bits.len() - n;
    if bits[..pad].iter().any(|&b| b) {
        return Err(Error::Parse { line: 1, msg: "nonzero pad bits".into() });
    }
    let w = BitWord::from_bits(bits[pad..].iter().copied());
    if w.is_zero() {
        return Err(Error::invalid("a cog must be nonzero"));
    }
    Ok(w)
}

/// Inverse of [`parse_octal_cog`]; digits separated by single spaces.
pub fn format_octal_cog(w: &BitWord) -> String {
    let pad = (3 - w.len() % 3) % 3;
    let bits: Vec<bool> = std::iter::repeat_n(false, pad).chain((0..w.len()).map(|i| w.get(i))).collect();
    bits.chunks(3)
        .map(|c| char::from(b'0' + (u8::from(c[0]) << 2 | u8::from(c[1]) << 1 | u8::from(c[2]))))
        .map(String::from)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses a cog given either in octal or as a `0`/`1` string of length `n`.
pub fn parse_cog(text: &str, n: usize) -> Result<BitWord> {
    let t = text.trim();
    if t.len() == n && t.chars().all(|c| c == '0' || c == '1') {
        let w: BitWord = t.parse()?;
        if w.is_zero() {
            return Err(Error::invalid("a cog must be nonzero"));
        }
        return Ok(w);
    }
    parse_octal_cog(t, n)
}

/// A cyclic orbit generator together with its orbit metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cog {
    pub word: BitWord,
    pub orbit: usize,
    pub family: Option<usize>,
    pub weight: usize,
    /// Number of distinct cyclic shifts.
    pub orbit_size: usize,
}

/// Numeric key whose order equals lexicographic order of the printed word.
fn lex_key(m: u128, n: usize) -> u128 {
    m.reverse_bits() >> (128 - n)
}

/// Lexicographically smallest rotation and the orbit size.
pub fn canonical_rotation(w: &BitWord) -> Result<(BitWord, usize)> {
    let n = w.len();
    let m = w.to_mask()?;
    let mut best = m;
    let mut size = n;
    for s in 1..n {
        let r = rotate_mask(m, s, n);
        if r == m {
            size = s;
            break;
        }
        if lex_key(r, n) < lex_key(best, n) {
            best = r;
        }
    }
    // later rotations repeat the first `size`
    for s in 1..size {
        let r = rotate_mask(m, s, n);
        if lex_key(r, n) < lex_key(best, n) {
            best = r;
        }
    }
    Ok((BitWord::from_mask(n, best), size))
}

/// Partitions the weight-`w` words of the span of `dual_basis` into cyclic orbits.
/// Orbits are numbered in lexicographic order of their canonical cogs.
pub fn cog_orbits(dual_basis: &BitMatrix, w: usize) -> Result<Vec<Cog>> {
    let n = dual_basis.ncols();
    if n > 128 {
        return Err(Error::LengthTooLarge(n));
    }
    let mut words = Vec::new();
    crate::gf2::visit_span(dual_basis, |limbs| {
        let wt: u32 = limbs.iter().map(|x| x.count_ones()).sum();
        if wt as usize == w && w > 0 {
            let lo = limbs[0] as u128;
            let hi = limbs.get(1).copied().unwrap_or(0) as u128;
            words.push(lo | hi << 64);
        }
    })?;
    words.sort_unstable();
    let mut seen = vec![false; words.len()];
    let mut reps: Vec<(u128, usize)> = Vec::new();
    for i in 0..words.len() {
        if seen[i] {
            continue;
        }
        let m = words[i];
        let mut best = m;
        let mut size = 0;
        for s in 0..n {
            let r = rotate_mask(m, s, n);
            if s > 0 && r == m {
                break;
            }
            size += 1;
            if lex_key(r, n) < lex_key(best, n) {
                best = r;
            }
            if let Ok(j) = words.binary_search(&r) {
                seen[j] = true;
            } else {
                return Err(Error::Construction("span is not closed under cyclic shift".into()));
            }
        }
        reps.push((best, size));
    }
    reps.sort_by_key(|&(m, _)| lex_key(m, n));
    Ok(reps
        .into_iter()
        .enumerate()
        .map(|(orbit, (m, orbit_size))| Cog {
            word: BitWord::from_mask(n, m),
            orbit,
            family: None,
            weight: w,
            orbit_size,
        })
        .collect())
}

/// Sorted multiset of intersection profiles of a word against its shifts κ = 1..n-1.
pub fn profile_signature(w: &BitWord) -> Vec<(usize, usize, usize, usize)> {
    let mut sig: Vec<_> = (1..w.len())
        .map(|k| {
            let p = xy_kappa(w, k);
            (p.oo, p.oz, p.zo, p.zz)
        })
        .collect();
    sig.sort_unstable();
    sig
}

/// Groups cogs with identical profile signatures; sets each cog's `family` and
/// returns the member indices of each family, ordered by first appearance.
pub fn cog_families(cogs: &mut [Cog]) -> Vec<Vec<usize>> {
    let mut by_sig: BTreeMap<Vec<(usize, usize, usize, usize)>, usize> = BTreeMap::new();
    let mut families: Vec<Vec<usize>> = Vec::new();
    for (i, cog) in cogs.iter_mut().enumerate() {
        let sig = profile_signature(&cog.word);
        let next = families.len();
        let f = *by_sig.entry(sig).or_insert(next);
        if f == families.len() {
            families.push(Vec::new());
        }
        families[f].push(i);
        cog.family = Some(f);
    }
    families
}

/// Image of `w` under the doubling map `i ↦ 2^j i mod n`.
pub fn doubling_image(w: &BitWord, j: usize) -> BitWord {
    let n = w.len();
    let mut mult = 1usize;
    for _ in 0..j {
        mult = mult * 2 % n;
    }
    let mut out = BitWord::zeros(n);
    for i in w.support() {
        out.set(i * mult % n, true);
    }
    out
}

/// Printed cogs, as `(name, length, octal digits)`. `golay23-B` is the canonical
/// representative of the only orbit with minimal rows (13, 15, 19, 23).
pub const NAMED_COGS: &[(&str, usize, &str)] = &[
    ("golay23-A", 23, "2 1 2 1 3 5 0 0"),
    ("golay23-B", 23, "0 1 1 0 4 4 6 3"),
    ("golay23-D", 23, "3 4 6 0 3 2 0 0"),
    ("bch31-A", 31, "1 4 1 4 0 5 0 0 0 2 2"),
    ("bch31-B", 31, "1 4 0 6 1 0 4 1 0 2 0"),
    ("bch31-C", 31, "1 5 0 0 0 5 0 0 4 1 4"),
    ("bch31-D", 31, "1 5 0 4 0 2 0 0 1 3 0"),
    (
        "bch127-A",
        127,
        "1 7 6 4 0 3 0 6 5 4 4 5 4 0 7 5 0 4 5 4 7 6 5 1 6 1 6 0 2 0 4 2 6 5 2 4 2 4 4 0 0 5 6",
    ),
    (
        "bch127-B",
        127,
        "1 7 2 4 2 5 0 2 6 1 2 1 5 4 1 1 1 1 5 2 6 1 0 7 2 1 2 5 5 1 6 1 4 0 4 6 5 4 1 4 2 7 4",
    ),
    (
        "bch127-C",
        127,
        "1 7 5 2 6 5 5 3 3 6 4 6 1 3 1 2 6 4 2 1 0 7 1 1 7 0 4 0 2 4 0 2 5 4 0 3 0 4 5 2 2 4 2",
    ),
    (
        "bch127-D",
        127,
        "1 7 5 1 7 0 3 1 2 5 2 6 7 3 4 6 5 0 2 1 0 2 0 7 0 3 6 5 4 0 6 1 2 2 1 0 1 4 3 0 6 4 4",
    ),
    ("hamming63", 63, "4 1 4 2 4 7 5 0 7 1 1 3 3 5 4 6 5 3 7 4 0"),
    (
        "hamming127",
        127,
        "1 0 4 6 1 3 5 3 3 0 1 4 6 5 1 6 3 6 6 4 1 2 5 7 5 1 2 1 5 6 1 7 7 0 3 5 7 1 3 1 1 0 0",
    ),
];

/// Code a named cog belongs to, by name prefix.
fn cog_code_name(cog: &str) -> &str {
    cog.split('-').next().unwrap_or(cog)
}

/// Looks up a printed cog and checks it is a dual codeword of its code.
pub fn named_cog(name: &str) -> Result<BitWord> {
    let &(_, n, digits) = NAMED_COGS
        .iter()
        .find(|(k, _, _)| *k == name)
        .ok_or_else(|| Error::UnknownName(name.into()))?;
    let w = parse_octal_cog(digits, n)?;
    let code = code_by_name(cog_code_name(name))?;
    if !code.dual_contains(&w) {
        return Err(Error::NotInDual { row: 0 });
    }
    Ok(w)
}

/// Catalog lookup: `hamming{7,15,31,63,127}`, `golay23`, `golay24`, `bch31` ([31,16,7]),
/// `bch127` ([127,113,5]), `qr{p}`, `cds{n}`, `simplex{n}`, `wolfmann24`.
pub fn code_by_name(name: &str) -> Result<Code> {
    let unknown = || Error::UnknownName(name.to_string());
    let num = |prefix: &str| -> Option<usize> { name.strip_prefix(prefix)?.parse().ok() };
    let log2p1 = |n: usize| -> Option<u32> { (n + 1).is_power_of_two().then(|| (n + 1).trailing_zeros()) };
    match name {
        "golay23" => return golay(false),
        "golay24" => return golay(true),
        "bch31" => {
            let mut c = bch_code(5, &[1, 3, 5])?;
            c.d = Some(7);
            return Ok(c);
        }
        "bch127" => {
            let mut c = bch_code(7, &[1, 3])?;
            c.d = Some(5);
            return Ok(c);
        }
        "wolfmann24" => {
            let mut c = Code::from_parity("wolfmann24", &fixture("wolfmann")?);
            c.d = Some(8);
            return Ok(c);
        }
        _ => {}
    }
    if let Some(n) = num("hamming") {
        return hamming(log2p1(n).filter(|&m| m >= 2).ok_or_else(unknown)?);
    }
    if let Some(n) = num("simplex") {
        return simplex(log2p1(n).filter(|&m| m >= 2).ok_or_else(unknown)?);
    }
    if let Some(n) = num("qr") {
        return Ok(qr_code(n)?.0);
    }
    if let Some(n) = num("cds") {
        let s = (1..8).find(|&s| (1usize << (2 * s)) + (1 << s) + 1 == n).ok_or_else(unknown)?;
        return Ok(cds_code(s)?.0);
    }
    Err(unknown())
}

const H24_21ROW: &str = "\
100001100101100010100000
010000110010110001010000
001000011001011000101000
000100001100101100010100
000010000110010110001010
100001000011001011000100
010000100001100101100010
101000010000110010110000
010100001000011001011000
001010000100001100101100
000101000010000110010110
100010100001000011001010
110001010000100001100100
011000101000010000110010
101100010100001000011000
010110001010000100001100
001011000101000010000110
100101100010100001000010
110010110001010000100000
011001011000101000010000
101011100011000000000001
";

const H24_STAR: &str = "\
111000001001100000100001
110000100001001110000001
110100101010010000000001
111000110000000000010101
110001000101010000000101
110100010100000010100001
011000100001010001001001
110110000001000000011001
111101000000001001000001
110010000010001000100101
001100101001001000010001
001101010011001000000010
";

type Block = [[u8; 3]; 3];

fn block_mul(a: &Block, b: &Block) -> Block {
    let mut c = [[0u8; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            c[i][j] = (0..3).fold(0, |acc, t| acc ^ (a[i][t] & b[t][j]));
        }
    }
    c
}

/// `[I_12 | M]` with `M` assembled from `I_3`, `A`, `A^2`, `A^4`.
fn wolfmann_matrix() -> BitMatrix {
    let i3: Block = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    let a: Block = [[1, 1, 1], [1, 0, 0], [1, 0, 1]];
    let a2 = block_mul(&a, &a);
    let a4 = block_mul(&a2, &a2);
    let layout = [[&i3, &a, &a2, &a4], [&a, &i3, &a4, &a2], [&a2, &a4, &i3, &a], [&a4, &a2, &a, &i3]];
    let mut rows = Vec::with_capacity(12);
    for (bi, brow) in layout.iter().enumerate() {
        for r in 0..3 {
            let mut w = BitWord::zeros(24);
            w.set(bi * 3 + r, true);
            for (bj, blk) in brow.iter().enumerate() {
                for c in 0..3 {
                    if blk[r][c] == 1 {
                        w.set(12 + bj * 3 + c, true);
                    }
                }
            }
            rows.push(w);
        }
    }
    BitMatrix::new(24, rows).expect("consistent widths")
}

pub const FIXTURE_NAMES: [&str; 3] = ["wolfmann", "h24_21row", "h24_star"];

/// Transcribed matrices: `wolfmann`, `h24_21row`, `h24_star`.
pub fn fixture(name: &str) -> Result<BitMatrix> {
    match name {
        "wolfmann" => Ok(wolfmann_matrix()),
        "h24_21row" => BitMatrix::parse_text(H24_21ROW),
        "h24_star" => BitMatrix::parse_text(H24_STAR),
        _ => Err(Error::UnknownName(name.into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octal_round_trip_and_errors() {
        let w = parse_octal_cog("[2 1 2 1 3 5 0 0]", 23).unwrap();
        assert_eq!(w.support(), vec![0, 4, 6, 10, 12, 13, 14, 16]);
        assert_eq!(format_octal_cog(&w), "2 1 2 1 3 5 0 0");
        assert!(parse_octal_cog("0 0", 6).is_err());
        assert!(parse_octal_cog("4 0 0 0 0 0 0 0", 23).is_err());
        assert!(parse_octal_cog("2 1 2", 23).is_err());
        for &(_, n, digits) in NAMED_COGS {
            let w = parse_octal_cog(digits, n).unwrap();
            assert_eq!(parse_octal_cog(&format_octal_cog(&w), n).unwrap(), w);
        }
    }

    #[test]
    fn canonical_rotation_is_minimal() {
        let w: BitWord = "0110100".parse().unwrap();
        let (c, size) = canonical_rotation(&w).unwrap();
        assert_eq!(size, 7);
        let min = (0..7).map(|s| w.cyclic_shift(s).to_string()).min().unwrap();
        assert_eq!(c.to_string(), min);
        let periodic: BitWord = "101101".parse().unwrap();
        assert_eq!(canonical_rotation(&periodic).unwrap().1, 3);
    }

    #[test]
    fn wolfmann_has_identity_block() {
        let h = fixture("wolfmann").unwrap();
        assert_eq!(h.rank(), 12);
        for i in 0..12 {
            for j in 0..12 {
                assert_eq!(h.row(i).get(j), i == j);
            }
        }
    }

    #[test]
    fn unknown_names() {
        assert!(matches!(fixture("nope"), Err(Error::UnknownName(_))));
        assert!(matches!(code_by_name("hamming8"), Err(Error::UnknownName(_))));
    }
}
