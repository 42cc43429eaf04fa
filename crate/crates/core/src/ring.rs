//! The Galois ring GR(4,n) = Z_4[ξ] and its Teichmueller set.
//!
//! Ring elements are bit-sliced: coefficient `j` of `z` in the basis
//! `{1, ξ, …, ξ^{n-1}}` is `lo_j + 2·hi_j`. Addition is then a handful of
//! word operations, and the reduction `μ` is just the `lo` word read as a
//! field element.
//!
//! Teichmueller elements are stored by exponent (`ξ^i`). The inverse map
//! from `μ`-images back to exponents is the field's log table, since
//! `μ(ξ^i) = g^i`.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::poly::{BitPoly, Degree};

/// Polynomial over Z_4 with ascending coefficients in `{0, 1, 2, 3}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Z4Poly(Vec<u8>);

impl Z4Poly {
    pub fn coeffs(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.iter().rposition(|&c| c != 0)
    }

    pub fn is_monic(&self) -> bool {
        self.degree().is_some_and(|d| self.0[d] == 1)
    }

    pub fn reduce_mod2(&self) -> BitPoly {
        BitPoly::from_exponents(
            self.0.iter().enumerate().filter(|(_, &c)| c & 1 == 1).map(|(i, _)| i),
        )
    }
}

/// Hensel lift of a primitive polynomial to a monic basic irreducible
/// polynomial over Z_4 whose roots are Teichmueller elements, via the
/// Graeffe relation `f*(x²) = ±(e(x)² − o(x)²)` where `f = e + o` is the
/// split into even and odd parts.
pub fn lift_basic_irreducible(prim_poly: &BitPoly) -> Z4Poly {
    let n = match prim_poly.degree() {
        Degree::Finite(d) => d,
        Degree::NegInfinity => return Z4Poly(Vec::new()),
    };
    let coeff = |i: usize| prim_poly.coeff(i) as i64;
    let mut square = vec![0i64; 2 * n + 1];
    for i in 0..=n {
        for j in 0..=n {
            if (i + j) % 2 != 0 {
                continue;
            }
            // e·e terms come with +, o·o terms with −.
            let sign = if i % 2 == 0 { 1 } else { -1 };
            square[i + j] += sign * coeff(i) * coeff(j);
        }
    }
    let sign = if n % 2 == 0 { 1 } else { -1 };
    Z4Poly(
        (0..=n)
            .map(|j| (sign * square[2 * j]).rem_euclid(4) as u8)
            .collect(),
    )
}

/// Element of GR(4,n), bit-sliced as `lo + 2·hi` coefficientwise.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RingElem {
    lo: u32,
    hi: u32,
}

impl RingElem {
    pub const ZERO: RingElem = RingElem { lo: 0, hi: 0 };
    pub const ONE: RingElem = RingElem { lo: 1, hi: 0 };

    /// The scalar `c mod 4` embedded as a constant.
    pub const fn scalar(c: u8) -> RingElem {
        RingElem { lo: (c & 1) as u32, hi: ((c >> 1) & 1) as u32 }
    }

    /// From coefficients in the basis `{1, ξ, …}`, each taken mod 4.
    pub fn from_coeffs(coeffs: &[u8]) -> RingElem {
        let mut z = RingElem::ZERO;
        for (j, &c) in coeffs.iter().enumerate().take(32) {
            z.lo |= ((c & 1) as u32) << j;
            z.hi |= (((c >> 1) & 1) as u32) << j;
        }
        z
    }

    pub const fn from_parts(lo: u32, hi: u32) -> RingElem {
        RingElem { lo, hi }
    }

    pub const fn lo(self) -> u32 {
        self.lo
    }

    pub const fn hi(self) -> u32 {
        self.hi
    }

    pub fn coeff(self, j: u32) -> u8 {
        ((self.lo >> j & 1) | (self.hi >> j & 1) << 1) as u8
    }

    pub fn coeffs(self, n: u32) -> Vec<u8> {
        (0..n).map(|j| self.coeff(j)).collect()
    }

    pub const fn is_zero(self) -> bool {
        self.lo == 0 && self.hi == 0
    }

    /// `2·z`.
    pub const fn double(self) -> RingElem {
        RingElem { lo: 0, hi: self.lo }
    }

    /// `c·z` for a scalar `c ∈ Z_4`.
    pub fn scale(self, c: u8) -> RingElem {
        let mut out = RingElem::ZERO;
        if c & 1 == 1 {
            out = out + self;
        }
        if c & 2 == 2 {
            out = out + self.double();
        }
        out
    }
}

impl Add for RingElem {
    type Output = RingElem;
    fn add(self, rhs: RingElem) -> RingElem {
        RingElem {
            lo: self.lo ^ rhs.lo,
            hi: self.hi ^ rhs.hi ^ (self.lo & rhs.lo),
        }
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem { lo: self.lo, hi: self.hi ^ self.lo }
    }
}

impl Sub for RingElem {
    type Output = RingElem;
    fn sub(self, rhs: RingElem) -> RingElem {
        self + (-rhs)
    }
}

/// Element of the Teichmueller set `T = {0} ∪ {ξ^i}`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TeichElem {
    Zero,
    /// `ξ^i` with `0 ≤ i < 2^n − 1`.
    Pow(u32),
}

impl TeichElem {
    pub const ONE: TeichElem = TeichElem::Pow(0);

    pub fn exponent(self) -> Option<u32> {
        match self {
            TeichElem::Zero => None,
            TeichElem::Pow(i) => Some(i),
        }
    }

    pub fn is_zero(self) -> bool {
        self == TeichElem::Zero
    }
}

#[derive(Clone, Debug)]
pub struct RingCtx {
    field: FieldCtx,
    basic_irr: Z4Poly,
    /// `ξ^n` expressed in the basis, i.e. minus the low part of `basic_irr`.
    xi_n: RingElem,
    mask: u32,
    /// `hi` word of `ξ^i`; the `lo` word is the field antilog `g^i`.
    teich_hi: Vec<u32>,
    trace_lo: u32,
    trace_hi: u32,
}

impl RingCtx {
    pub fn new(n: u32) -> Result<Self> {
        Self::from_field(FieldCtx::new(n)?)
    }

    /// Builds GR(4,n) over the given residue field, lifting its primitive
    /// polynomial and tabulating the powers of `ξ`. Fails if `ξ` does not
    /// have order exactly `2^n − 1`.
    pub fn from_field(field: FieldCtx) -> Result<Self> {
        let n = field.n();
        let basic_irr = lift_basic_irreducible(field.prim_poly());
        if !basic_irr.is_monic() || basic_irr.reduce_mod2() != *field.prim_poly() {
            return Err(Error::NotPrimitive);
        }
        let mask = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let tail: Vec<u8> = basic_irr.coeffs()[..n as usize].to_vec();
        let xi_n = -RingElem::from_coeffs(&tail);

        let mut ctx = RingCtx {
            field,
            basic_irr,
            xi_n,
            mask,
            teich_hi: Vec::new(),
            trace_lo: 0,
            trace_hi: 0,
        };

        let order = ctx.field.order() as usize;
        let mut teich_hi = Vec::with_capacity(order);
        let mut cur = RingElem::ONE;
        for i in 0..order {
            // The lift must reduce to the field's powers of g.
            if cur.lo != ctx.field.antilog_table()[i] {
                return Err(Error::NotPrimitive);
            }
            teich_hi.push(cur.hi);
            cur = ctx.mul_xi(cur);
        }
        if cur != RingElem::ONE {
            return Err(Error::NotPrimitive);
        }
        ctx.teich_hi = teich_hi;

        for j in 0..n {
            let t = ctx.ring_trace_conjugates(ctx.teich(TeichElem::Pow(j)));
            let t = t.ok_or(Error::NotTeichmuller)?;
            ctx.trace_lo |= ((t & 1) as u32) << j;
            ctx.trace_hi |= ((t >> 1) as u32) << j;
        }
        Ok(ctx)
    }

    pub fn n(&self) -> u32 {
        self.field.n()
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn basic_irr(&self) -> &Z4Poly {
        &self.basic_irr
    }

    /// Order of `ξ`, `2^n − 1`.
    pub fn order(&self) -> u32 {
        self.field.order()
    }

    /// `ξ` as a ring element.
    pub fn xi(&self) -> RingElem {
        self.teich(TeichElem::Pow(1 % self.order()))
    }

    /// Rejects elements with coefficients beyond degree `n − 1`.
    pub fn check(&self, z: RingElem) -> Result<RingElem> {
        if (z.lo | z.hi) & !self.mask != 0 {
            Err(Error::ContextMismatch)
        } else {
            Ok(z)
        }
    }

    pub fn r_add(&self, a: RingElem, b: RingElem) -> Result<RingElem> {
        Ok(self.check(a)? + self.check(b)?)
    }

    pub fn r_neg(&self, a: RingElem) -> Result<RingElem> {
        Ok(-self.check(a)?)
    }

    pub fn r_mul(&self, a: RingElem, b: RingElem) -> Result<RingElem> {
        Ok(self.mul(self.check(a)?, self.check(b)?))
    }

    fn mul_xi(&self, a: RingElem) -> RingElem {
        let top = self.n() - 1;
        let mut out = RingElem { lo: (a.lo << 1) & self.mask, hi: (a.hi << 1) & self.mask };
        if a.lo >> top & 1 == 1 {
            out = out + self.xi_n;
        }
        if a.hi >> top & 1 == 1 {
            out = out + self.xi_n.double();
        }
        out
    }

    pub(crate) fn mul(&self, a: RingElem, b: RingElem) -> RingElem {
        let mut acc = RingElem::ZERO;
        let mut cur = a;
        for j in 0..self.n() {
            acc = acc + cur.scale(b.coeff(j));
            cur = self.mul_xi(cur);
        }
        acc
    }

    /// The Teichmueller element as a ring element.
    pub fn teich(&self, t: TeichElem) -> RingElem {
        match t {
            TeichElem::Zero => RingElem::ZERO,
            TeichElem::Pow(i) => RingElem {
                lo: self.field.antilog_table()[i as usize],
                hi: self.teich_hi[i as usize],
            },
        }
    }

    /// The unique Teichmueller element with the given `μ`-image.
    pub fn teich_from_field(&self, a: FieldElem) -> TeichElem {
        match self.field.log(a) {
            None => TeichElem::Zero,
            Some(i) => TeichElem::Pow(i),
        }
    }

    pub fn teich_elements(&self) -> impl Iterator<Item = TeichElem> {
        core::iter::once(TeichElem::Zero).chain((0..self.order()).map(TeichElem::Pow))
    }

    pub fn teich_mul(&self, a: TeichElem, b: TeichElem) -> TeichElem {
        match (a, b) {
            (TeichElem::Pow(i), TeichElem::Pow(j)) => {
                TeichElem::Pow(((i as u64 + j as u64) % self.order() as u64) as u32)
            }
            _ => TeichElem::Zero,
        }
    }

    pub fn teich_pow(&self, t: TeichElem, e: u64) -> TeichElem {
        match t {
            _ if e == 0 => TeichElem::ONE,
            TeichElem::Zero => TeichElem::Zero,
            TeichElem::Pow(i) => {
                let ord = self.order() as u64;
                TeichElem::Pow((i as u64 * (e % ord) % ord) as u32)
            }
        }
    }

    /// `t^{2^s}`.
    pub fn teich_frobenius(&self, t: TeichElem, s: u32) -> TeichElem {
        match t {
            TeichElem::Zero => TeichElem::Zero,
            TeichElem::Pow(i) => {
                let ord = self.order() as u64;
                TeichElem::Pow((i as u64 * self.field.pow2_mod_order(s) % ord) as u32)
            }
        }
    }

    /// `√t = t^{2^{n-1}}`.
    pub fn teich_sqrt(&self, t: TeichElem) -> TeichElem {
        self.teich_frobenius(t, self.n() - 1)
    }

    /// `a ⊕ b = a + b + 2√(ab)`, evaluated in the ring and mapped back to `T`.
    pub fn teich_oplus(&self, a: TeichElem, b: TeichElem) -> Result<TeichElem> {
        let root = self.teich_sqrt(self.teich_mul(a, b));
        let v = self.teich(a) + self.teich(b) + self.teich(root).double();
        let t = self.teich_from_field(self.mu(v));
        if self.teich(t) == v {
            Ok(t)
        } else {
            Err(Error::NotTeichmuller)
        }
    }

    /// The unique `(x, y) ∈ T×T` with `z = x + 2y`.
    pub fn two_adic(&self, z: RingElem) -> (TeichElem, TeichElem) {
        let x = self.teich_from_field(self.mu(z));
        let rest = z - self.teich(x);
        debug_assert_eq!(rest.lo, 0);
        (x, self.teich_from_field(FieldElem::from_index(rest.hi)))
    }

    pub fn recompose(&self, x: TeichElem, y: TeichElem) -> RingElem {
        self.teich(x) + self.teich(y).double()
    }

    /// Frobenius `x + 2y ↦ x² + 2y²`.
    pub fn frobenius(&self, z: RingElem) -> RingElem {
        let (x, y) = self.two_adic(z);
        self.recompose(self.teich_frobenius(x, 1), self.teich_frobenius(y, 1))
    }

    /// Trace to Z_4, as the Z_4-linear form whose values on the basis
    /// `ξ^j` were tabulated from conjugate sums at construction.
    pub fn ring_trace(&self, z: RingElem) -> u8 {
        let low = (z.lo & self.trace_lo).count_ones();
        let twos = (z.lo & self.trace_hi).count_ones() + (z.hi & self.trace_lo).count_ones();
        ((low + 2 * twos) & 3) as u8
    }

    /// Trace as `Σ_{i<n} (x^{2^i} + 2y^{2^i})` for `z = x + 2y`. Returns
    /// `None` if the conjugate sum is not a scalar, which only happens for
    /// a corrupted context.
    pub fn ring_trace_conjugates(&self, z: RingElem) -> Option<u8> {
        let (x, y) = self.two_adic(z);
        let mut sum = RingElem::ZERO;
        for i in 0..self.n() {
            sum = sum + self.recompose(self.teich_frobenius(x, i), self.teich_frobenius(y, i));
        }
        if (sum.lo | sum.hi) & !1 != 0 {
            return None;
        }
        Some(sum.coeff(0))
    }

    /// Coefficientwise reduction mod 2.
    pub fn mu(&self, z: RingElem) -> FieldElem {
        FieldElem::from_index(z.lo)
    }

    /// Whether `t` is a nonzero element with `t^{2^e} = t`.
    pub fn in_te_star(&self, t: TeichElem, e: u32) -> Result<bool> {
        let n = self.n();
        if e == 0 || !n.is_multiple_of(e) {
            return Err(Error::NotADivisor { d: e, n });
        }
        Ok(match t {
            TeichElem::Zero => false,
            TeichElem::Pow(i) => (i as u64 * ((1u64 << e) - 1)).is_multiple_of(self.order() as u64),
        })
    }
}
