//! GF(2^m) arithmetic with log/antilog tables and small GF(2)[x] polynomials.

use std::fmt;

use crate::error::{Error, Result};

/// Conventional primitive polynomials, bit `i` = coefficient of `x^i`.
pub fn default_primitive_poly(m: u32) -> Option<u32> {
    Some(match m {
        2 => 0b111,
        3 => 0b1011,
        4 => 0b1_0011,
        5 => 0b10_0101,
        6 => 0b100_0011,
        7 => 0b1000_1001,
        8 => 0x11d,
        9 => 0x211,
        10 => 0x409,
        11 => 0x805,
        12 => 0x1053,
        _ => return None,
    })
}

/// The field GF(2^m) with a fixed primitive element `α` (the class of `x`).
#[derive(Clone)]
pub struct Field2m {
    m: u32,
    poly: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for Field2m {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field2m(m={}, poly={:#x})", self.m, self.poly)
    }
}

impl Field2m {
    pub fn new(m: u32) -> Result<Self> {
        let poly = default_primitive_poly(m)
            .ok_or_else(|| Error::invalid(format!("no default primitive polynomial for m = {m}")))?;
        Field2m::with_poly(m, poly)
    }

    pub fn with_poly(m: u32, poly: u32) -> Result<Self> {
        if !(2..=16).contains(&m) || poly >> m != 1 {
            return Err(Error::invalid(format!("polynomial {poly:#x} is not of degree {m}")));
        }
        let order = (1usize << m) - 1;
        let mut exp = vec![0u32; 2 * order];
        let mut log = vec![u32::MAX; order + 1];
        let mut x = 1u32;
        for i in 0..order {
            if log[x as usize] != u32::MAX {
                return Err(Error::invalid(format!("polynomial {poly:#x} is not primitive")));
            }
            exp[i] = x;
            log[x as usize] = i as u32;
            x <<= 1;
            if x >> m & 1 == 1 {
                x ^= poly;
            }
        }
        if x != 1 {
            return Err(Error::invalid(format!("polynomial {poly:#x} is not primitive")));
        }
        for i in order..2 * order {
            exp[i] = exp[i - order];
        }
        Ok(Field2m { m, poly, exp, log })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn poly(&self) -> u32 {
        self.poly
    }

    /// Multiplicative order `2^m - 1`.
    pub fn order(&self) -> usize {
        (1usize << self.m) - 1
    }

    /// `α^i` for any integer exponent.
    pub fn alpha_pow(&self, i: i64) -> u32 {
        let q = self.order() as i64;
        self.exp[i.rem_euclid(q) as usize]
    }

    /// Discrete log base `α`; `None` for zero.
    pub fn log(&self, x: u32) -> Option<usize> {
        if x == 0 {
            None
        } else {
            Some(self.log[x as usize] as usize)
        }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return u32::from(e == 0);
        }
        let q = self.order() as u64;
        self.exp[((self.log[a as usize] as u64 * (e % q)) % q) as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        self.log(a).map(|l| self.alpha_pow(-(l as i64)))
    }

    /// Relative trace to the subfield GF(2^d): `Σ_{i<m/d} a^{2^{d i}}`.
    pub fn trace_to(&self, a: u32, d: u32) -> Result<u32> {
        if d == 0 || !self.m.is_multiple_of(d) {
            return Err(Error::invalid(format!("GF(2^{d}) is not a subfield of GF(2^{})", self.m)));
        }
        let mut acc = 0;
        let mut x = a;
        for _ in 0..self.m / d {
            acc ^= x;
            for _ in 0..d {
                x = self.mul(x, x);
            }
        }
        Ok(acc)
    }
}

/// Multiplicative order of 2 modulo odd `n`.
pub fn order_of_two(n: usize) -> Result<usize> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::invalid(format!("order of 2 needs odd n >= 3, got {n}")));
    }
    let mut x = 2 % n;
    let mut c = 1;
    while x != 1 {
        x = x * 2 % n;
        c += 1;
    }
    Ok(c)
}

/// Polynomial over GF(2); `coeffs[i]` is the coefficient of `x^i`, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly2 {
    coeffs: Vec<bool>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<bool>) -> Self {
        while coeffs.last() == Some(&false) {
            coeffs.pop();
        }
        Poly2 { coeffs }
    }

    pub fn from_exponents(exps: &[usize]) -> Self {
        let len = exps.iter().max().map_or(0, |&e| e + 1);
        let mut c = vec![false; len];
        for &e in exps {
            c[e] ^= true;
        }
        Poly2::from_coeffs(c)
    }

    /// `x^n + 1`.
    pub fn xn_plus_one(n: usize) -> Self {
        Poly2::from_exponents(&[0, n])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.coeffs.get(i).copied().unwrap_or(false)
    }

    pub fn exponents(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| self.coeffs[i]).collect()
    }

    pub fn add(&self, other: &Poly2) -> Poly2 {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly2::from_coeffs((0..len).map(|i| self.coeff(i) ^ other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Poly2) -> Poly2 {
        if self.is_zero() || other.is_zero() {
            return Poly2::zero();
        }
        let mut c = vec![false; self.coeffs.len() + other.coeffs.len() - 1];
        for i in self.exponents() {
            for j in other.exponents() {
                c[i + j] ^= true;
            }
        }
        Poly2::from_coeffs(c)
    }

    pub fn div_rem(&self, divisor: &Poly2) -> (Poly2, Poly2) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut r = self.coeffs.clone();
        let mut q = vec![false; self.coeffs.len().saturating_sub(dd).max(1)];
        while let Some(rd) = r.iter().rposition(|&b| b) {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            q[shift] = true;
            for e in divisor.exponents() {
                r[e + shift] ^= true;
            }
        }
        (Poly2::from_coeffs(q), Poly2::from_coeffs(r))
    }

    pub fn gcd(&self, other: &Poly2) -> Poly2 {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a
    }

    /// Evaluates at a field element.
    pub fn eval(&self, f: &Field2m, x: u32) -> u32 {
        let mut acc = 0;
        for i in (0..self.coeffs.len()).rev() {
            acc = f.mul(acc, x);
            if self.coeffs[i] {
                acc ^= 1;
            }
        }
        acc
    }
}
