//! Bit-packed polynomials over GF(2).
//!
//! Bit `i` of the packed representation is the coefficient of `x^i`. The
//! word vector never carries trailing zero words, so the zero polynomial is
//! the empty vector and equality is structural.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul};

use crate::coeff_set::CoeffSet;
use crate::error::{Error, Result};

/// Default cap on polynomial degree for the checked entry points.
pub const DEFAULT_MAX_DEGREE: usize = 1 << 16;

const WORD_BITS: usize = 64;

/// Degree of a polynomial; the zero polynomial has degree `NegInfinity`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Degree::NegInfinity, Degree::NegInfinity) => Ordering::Equal,
            (Degree::NegInfinity, Degree::Finite(_)) => Ordering::Less,
            (Degree::Finite(_), Degree::NegInfinity) => Ordering::Greater,
            (Degree::Finite(a), Degree::Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BitPoly {
    words: Vec<u64>,
}

impl BitPoly {
    pub fn zero() -> Self {
        Self { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self { words: vec![1] }
    }

    /// `x^i`.
    pub fn monomial(i: usize) -> Self {
        let mut p = Self::zero();
        p.flip(i);
        p
    }

    /// Polynomial whose low 64 coefficients are the bits of `bits`.
    pub fn from_bits(bits: u64) -> Self {
        let mut p = Self { words: vec![bits] };
        p.normalize();
        p
    }

    /// Sum of `x^e` over the given exponents; repeated exponents cancel.
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut p = Self::zero();
        for e in exps {
            p.flip(e);
        }
        p
    }

    /// The low 64 coefficients packed into a word.
    pub fn low_bits(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    pub fn degree(&self) -> Degree {
        match self.words.last() {
            None => Degree::NegInfinity,
            Some(&top) => Degree::Finite(
                (self.words.len() - 1) * WORD_BITS + (WORD_BITS - 1 - top.leading_zeros() as usize),
            ),
        }
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / WORD_BITS)
            .is_some_and(|w| w >> (i % WORD_BITS) & 1 == 1)
    }

    /// Toggles the coefficient of `x^i`.
    pub fn flip(&mut self, i: usize) {
        let w = i / WORD_BITS;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] ^= 1 << (i % WORD_BITS);
        self.normalize();
    }

    /// Exponents with coefficient one, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            core::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD_BITS + b)
            })
        })
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    /// `self ^= other · x^shift`.
    fn xor_shifted(&mut self, other: &BitPoly, shift: usize) {
        if other.is_zero() {
            return;
        }
        let word_shift = shift / WORD_BITS;
        let bit_shift = shift % WORD_BITS;
        let needed = other.words.len() + word_shift + 1;
        if self.words.len() < needed {
            self.words.resize(needed, 0);
        }
        if bit_shift == 0 {
            for (i, &w) in other.words.iter().enumerate() {
                self.words[i + word_shift] ^= w;
            }
        } else {
            for (i, &w) in other.words.iter().enumerate() {
                self.words[i + word_shift] ^= w << bit_shift;
                self.words[i + word_shift + 1] ^= w >> (WORD_BITS - bit_shift);
            }
        }
        self.normalize();
    }

    pub fn add(&self, other: &BitPoly) -> BitPoly {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.clone();
        for (w, &s) in out.words.iter_mut().zip(&short.words) {
            *w ^= s;
        }
        out.normalize();
        out
    }

    /// Carryless product.
    pub fn mul(&self, other: &BitPoly) -> BitPoly {
        let (dense, sparse) = if self.weight() >= other.weight() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = BitPoly::zero();
        for e in sparse.exponents() {
            out.xor_shifted(dense, e);
        }
        out
    }

    pub fn square(&self) -> BitPoly {
        BitPoly::from_exponents(self.exponents().map(|e| 2 * e))
    }

    pub fn pow(&self, mut e: u32) -> BitPoly {
        let mut base = self.clone();
        let mut acc = BitPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    /// Quotient and remainder, with `deg(rem) < deg(divisor)`.
    pub fn div_rem(&self, divisor: &BitPoly) -> Result<(BitPoly, BitPoly)> {
        let dq = divisor.degree().finite().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = BitPoly::zero();
        while let Degree::Finite(dr) = rem.degree() {
            if dr < dq {
                break;
            }
            quot.flip(dr - dq);
            rem.xor_shifted(divisor, dr - dq);
        }
        Ok((quot, rem))
    }

    pub fn rem(&self, divisor: &BitPoly) -> Result<BitPoly> {
        let dq = divisor.degree().finite().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        while let Degree::Finite(dr) = rem.degree() {
            if dr < dq {
                break;
            }
            rem.xor_shifted(divisor, dr - dq);
        }
        Ok(rem)
    }

    /// Monic gcd by Euclid. A nonzero constant argument yields `1`.
    pub fn gcd(&self, other: &BitPoly) -> Result<BitPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// `p(x^s)`: coefficient `i` moves to `i·s`.
    ///
    /// # Panics
    ///
    /// If `s == 0`.
    pub fn compose_xk(&self, s: usize) -> BitPoly {
        assert!(s >= 1, "compose_xk requires s >= 1");
        if s == 1 {
            return self.clone();
        }
        BitPoly::from_exponents(self.exponents().map(|e| e * s))
    }

    /// Like [`compose_xk`](Self::compose_xk) but refuses results above `cap`.
    pub fn checked_compose_xk(&self, s: usize, cap: usize) -> Result<BitPoly> {
        if let Degree::Finite(d) = self.degree() {
            let degree = d.saturating_mul(s);
            if degree > cap {
                return Err(Error::DegreeCapExceeded { degree, cap });
            }
        }
        Ok(self.compose_xk(s))
    }

    /// `x^m - 1`, which over GF(2) is `x^m + 1`.
    pub fn x_m_minus_1(m: usize) -> BitPoly {
        assert!(m >= 1, "x^m - 1 requires m >= 1");
        BitPoly::from_exponents([0, m])
    }

    /// Little-endian byte packing rendered as lowercase hex; bit 0 of the
    /// first byte is the constant term. Zero renders as `"00"`.
    pub fn to_hex(&self) -> String {
        const DIGITS: &[u8; 16] = b"0123456789abcdef";
        let nbytes = match self.degree() {
            Degree::NegInfinity => 1,
            Degree::Finite(d) => d / 8 + 1,
        };
        let mut s = String::with_capacity(2 * nbytes);
        for b in 0..nbytes {
            let byte = (self.words.get(b / 8).copied().unwrap_or(0) >> (8 * (b % 8))) as u8;
            s.push(DIGITS[(byte >> 4) as usize] as char);
            s.push(DIGITS[(byte & 15) as usize] as char);
        }
        s
    }

    /// Inverse of [`to_hex`](Self::to_hex); accepts upper or lower case.
    pub fn from_hex(hex: &str) -> Option<BitPoly> {
        let bytes = hex.as_bytes();
        if !bytes.len().is_multiple_of(2) {
            return None;
        }
        let nibble = |c: u8| (c as char).to_digit(16).map(|d| d as u64);
        let mut words = vec![0u64; bytes.len().div_ceil(16)];
        for (b, pair) in bytes.chunks(2).enumerate() {
            let byte = nibble(pair[0])? << 4 | nibble(pair[1])?;
            words[b / 8] |= byte << (8 * (b % 8));
        }
        let mut p = BitPoly { words };
        p.normalize();
        Some(p)
    }
}

/// `c(x) = 1 + Σ_{i∈C} (x^i + x^{m-i})`.
pub fn c_from_set(coeffs: &CoeffSet, m: u32) -> Result<BitPoly> {
    coeffs.validate(m)?;
    let m = m as usize;
    let mut c = BitPoly::one();
    for i in coeffs.iter() {
        let i = i as usize;
        c.flip(i);
        c.flip(m - i);
    }
    Ok(c)
}

impl Add for &BitPoly {
    type Output = BitPoly;
    fn add(self, rhs: &BitPoly) -> BitPoly {
        BitPoly::add(self, rhs)
    }
}

impl Mul for &BitPoly {
    type Output = BitPoly;
    fn mul(self, rhs: &BitPoly) -> BitPoly {
        BitPoly::mul(self, rhs)
    }
}

/// Ascending powers, e.g. `1 + x^2 + x^3`.
impl fmt::Display for BitPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (pos, e) in self.exponents().enumerate() {
            if pos > 0 {
                f.write_str(" + ")?;
            }
            match e {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BitPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitPoly({self})")
    }
}
