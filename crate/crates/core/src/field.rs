//! The finite field F_{2^n}.
//!
//! Elements are encoded by their coefficient vector over the polynomial
//! basis `{1, g, …, g^{n-1}}` of a primitive root `g`: bit `j` of the index
//! is the coefficient of `g^j`. Log/antilog tables accelerate products.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::{BitPoly, Degree};

/// Largest `n` covered by the embedded primitive-polynomial table.
pub const MAX_TABLE_DEGREE: u32 = 24;

/// Largest `n` accepted by [`FieldCtx::with_primitive`].
pub const MAX_DEGREE: u32 = 30;

// Bit i = coefficient of x^i, including the leading term.
const PRIMITIVE_POLYS: [u32; 25] = [
    0, 0x3, 0x7, 0xB, 0x13, 0x25, 0x43, 0x83, 0x11D, 0x211, 0x409, 0x805, 0x1053, 0x201B, 0x4443,
    0x8003, 0x1100B, 0x20009, 0x40081, 0x80027, 0x100009, 0x200005, 0x400003, 0x800021, 0x1000087,
];

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    /// Wraps a raw index. Use [`FieldCtx::elem`] for a range-checked version.
    pub const fn from_index(index: u32) -> Self {
        FieldElem(index)
    }

    pub const fn index(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone, Debug)]
pub struct FieldCtx {
    n: u32,
    prim_poly: BitPoly,
    modulus: u64,
    order: u32,
    log: Vec<u32>,
    antilog: Vec<u32>,
    trace_mask: u32,
    dual: Vec<FieldElem>,
}

impl FieldCtx {
    /// Context for F_{2^n} using the embedded primitive polynomial.
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 || n > MAX_TABLE_DEGREE {
            return Err(Error::UnsupportedDegree { n, max: MAX_TABLE_DEGREE });
        }
        Self::with_primitive(&BitPoly::from_bits(PRIMITIVE_POLYS[n as usize] as u64))
    }

    /// Context for a caller-supplied polynomial, which must be primitive.
    pub fn with_primitive(prim_poly: &BitPoly) -> Result<Self> {
        let n = match prim_poly.degree() {
            Degree::Finite(d) if d >= 1 => d as u32,
            _ => return Err(Error::NotPrimitive),
        };
        if n > MAX_DEGREE {
            return Err(Error::UnsupportedDegree { n, max: MAX_DEGREE });
        }
        let modulus = prim_poly.low_bits();
        let size = 1usize << n;
        let order = (size - 1) as u32;

        // Order check: the powers of x must visit every nonzero residue once.
        let mut log = vec![u32::MAX; size];
        let mut antilog = Vec::with_capacity(order as usize);
        let mut a: u64 = 1;
        for i in 0..order {
            if log[a as usize] != u32::MAX {
                return Err(Error::NotPrimitive);
            }
            log[a as usize] = i;
            antilog.push(a as u32);
            a <<= 1;
            if a >> n & 1 == 1 {
                a ^= modulus;
            }
        }
        if a != 1 {
            return Err(Error::NotPrimitive);
        }

        let mut ctx = FieldCtx {
            n,
            prim_poly: prim_poly.clone(),
            modulus,
            order,
            log,
            antilog,
            trace_mask: 0,
            dual: Vec::new(),
        };
        ctx.trace_mask = (0..n)
            .filter(|&j| ctx.trace_by_conjugates(FieldElem(1 << j)) == 1)
            .fold(0, |m, j| m | 1 << j);
        let basis: Vec<FieldElem> = (0..n).map(|j| ctx.basis(j)).collect();
        ctx.dual = ctx.dual_of(&basis)?;
        Ok(ctx)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn size(&self) -> usize {
        1 << self.n
    }

    /// Multiplicative group order `2^n - 1`.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn prim_poly(&self) -> &BitPoly {
        &self.prim_poly
    }

    pub fn elem(&self, index: u32) -> Result<FieldElem> {
        if (index as usize) < self.size() {
            Ok(FieldElem(index))
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..1u32 << self.n).map(FieldElem)
    }

    /// `g^j` for `j < n`.
    pub fn basis(&self, j: u32) -> FieldElem {
        FieldElem(1 << j)
    }

    /// `g^i` for any exponent.
    pub fn exp(&self, i: u64) -> FieldElem {
        FieldElem(self.antilog[(i % self.order as u64) as usize])
    }

    /// Discrete log base `g`; `None` for zero.
    pub fn log(&self, a: FieldElem) -> Option<u32> {
        match self.log[a.0 as usize] {
            u32::MAX => None,
            l => Some(l),
        }
    }

    pub fn log_table(&self) -> &[u32] {
        &self.log
    }

    pub fn antilog_table(&self) -> &[u32] {
        &self.antilog
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(a.0 ^ b.0)
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        let mut e = self.log[a.0 as usize] + self.log[b.0 as usize];
        if e >= self.order {
            e -= self.order;
        }
        FieldElem(self.antilog[e as usize])
    }

    /// Product by carryless multiplication and reduction modulo the
    /// primitive polynomial, without the tables.
    pub fn mul_clmul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let (a, mut b) = (a.0 as u64, b.0 as u64);
        let mut prod = 0u64;
        let mut shifted = a;
        while b != 0 {
            if b & 1 == 1 {
                prod ^= shifted;
            }
            shifted <<= 1;
            b >>= 1;
        }
        for bit in (self.n as u64..2 * self.n as u64).rev() {
            if prod >> bit & 1 == 1 {
                prod ^= self.modulus << (bit - self.n as u64);
            }
        }
        FieldElem(prod as u32)
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        if e == 0 {
            return FieldElem::ONE;
        }
        match self.log(a) {
            None => FieldElem::ZERO,
            Some(l) => self.exp(l as u64 * (e % self.order as u64)),
        }
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        let l = self.log(a).ok_or(Error::InverseOfZero)?;
        Ok(self.exp((self.order - l) as u64))
    }

    /// `a^{2^s}`.
    pub fn frobenius(&self, a: FieldElem, s: u32) -> FieldElem {
        match self.log(a) {
            None => FieldElem::ZERO,
            Some(l) => self.exp(l as u64 * self.pow2_mod_order(s)),
        }
    }

    /// `2^s mod (2^n - 1)`, i.e. `2^{s mod n}`.
    pub fn pow2_mod_order(&self, s: u32) -> u64 {
        (1u64 << (s % self.n)) % self.order as u64
    }

    /// Absolute trace to F_2.
    pub fn trace(&self, a: FieldElem) -> u8 {
        ((a.0 & self.trace_mask).count_ones() & 1) as u8
    }

    /// Absolute trace as the sum of the `n` conjugates `a^{2^i}`.
    pub fn trace_by_conjugates(&self, a: FieldElem) -> u8 {
        let t = (0..self.n).fold(0, |acc, i| acc ^ self.frobenius(a, i).0);
        debug_assert!(t <= 1, "trace must land in F_2");
        t as u8
    }

    fn check_divisor(&self, d: u32) -> Result<()> {
        if d == 0 || !self.n.is_multiple_of(d) {
            Err(Error::NotADivisor { d, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Relative trace to the subfield F_{2^d}: `Σ_{j<n/d} a^{2^{dj}}`.
    pub fn rel_trace(&self, a: FieldElem, d: u32) -> Result<FieldElem> {
        self.check_divisor(d)?;
        let t = (0..self.n / d).fold(0, |acc, j| acc ^ self.frobenius(a, d * j).0);
        let t = FieldElem(t);
        debug_assert!(self.frobenius(t, d) == t);
        Ok(t)
    }

    /// Absolute trace of an element of the subfield F_{2^d}:
    /// `Σ_{j<d} a^{2^j}`.
    pub fn subfield_trace(&self, a: FieldElem, d: u32) -> Result<u8> {
        if !self.in_subfield(a, d)? {
            return Err(Error::NotInSubfield { e: d });
        }
        let t = (0..d).fold(0, |acc, j| acc ^ self.frobenius(a, j).0);
        debug_assert!(t <= 1);
        Ok(t as u8)
    }

    /// Whether `a^{2^e} = a`.
    pub fn in_subfield(&self, a: FieldElem, e: u32) -> Result<bool> {
        self.check_divisor(e)?;
        Ok(self.frobenius(a, e) == a)
    }

    /// The basis `{δ_i}` with `tr(δ_i · g^j) = [i = j]`.
    pub fn dual_basis(&self) -> &[FieldElem] {
        &self.dual
    }

    /// Trace-dual of an arbitrary basis, by inverting the Gram matrix
    /// `tr(b_i b_j)` over F_2.
    pub fn dual_of(&self, basis: &[FieldElem]) -> Result<Vec<FieldElem>> {
        if basis.len() != self.n as usize {
            return Err(Error::InvalidParams("basis must have n elements"));
        }
        let gram: Vec<u32> = basis
            .iter()
            .map(|&bi| {
                basis
                    .iter()
                    .enumerate()
                    .filter(|&(_, &bj)| self.trace(self.mul(bi, bj)) == 1)
                    .fold(0, |row, (j, _)| row | 1 << j)
            })
            .collect();
        let inv = invert_gf2(&gram).ok_or(Error::InvalidParams("basis is linearly dependent"))?;
        Ok(inv
            .iter()
            .map(|&row| {
                FieldElem(
                    basis
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| row >> k & 1 == 1)
                        .fold(0, |acc, (_, b)| acc ^ b.0),
                )
            })
            .collect())
    }

    /// Evaluates `L(x) = Σ_{s∈taps} x^{2^s}`; repeated taps cancel.
    pub fn linearized_eval(&self, taps: &[u32], x: FieldElem) -> FieldElem {
        FieldElem(taps.iter().fold(0, |acc, &s| acc ^ self.frobenius(x, s).0))
    }

    /// Dimension over F_2 of the kernel of `L(x) = Σ_{s∈taps} x^{2^s}`,
    /// from the rank of its matrix in the polynomial basis. Repeated taps
    /// cancel; an empty tap list is the zero map with kernel dimension `n`.
    pub fn linearized_kernel_dim(&self, taps: &[u32]) -> Result<u32> {
        if let Some(&tap) = taps.iter().find(|&&s| s >= self.n) {
            return Err(Error::TapOutOfRange { tap, n: self.n });
        }
        let columns: Vec<u32> = (0..self.n)
            .map(|j| self.linearized_eval(taps, self.basis(j)).0)
            .collect();
        Ok(self.n - rank_gf2(columns))
    }
}

/// Rank over F_2 of a list of bit-vectors.
pub(crate) fn rank_gf2(mut rows: Vec<u32>) -> u32 {
    let mut rank = 0;
    for bit in 0..32 {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && *row >> bit & 1 == 1 {
                *row ^= p;
            }
        }
        rank += 1;
    }
    rank as u32
}

/// Inverse of a square F_2 matrix given as row bitmasks.
fn invert_gf2(rows: &[u32]) -> Option<Vec<u32>> {
    let n = rows.len();
    let mut a = rows.to_vec();
    let mut inv: Vec<u32> = (0..n).map(|i| 1 << i).collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r] >> col & 1 == 1)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        for r in 0..n {
            if r != col && a[r] >> col & 1 == 1 {
                a[r] ^= a[col];
                inv[r] ^= inv[col];
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_kernel_size(ctx: &FieldCtx, taps: &[u32]) -> usize {
        ctx.elements().filter(|&x| ctx.linearized_eval(taps, x).is_zero()).count()
    }

    #[test]
    fn small_fields() {
        let f1 = FieldCtx::new(1).unwrap();
        assert_eq!(f1.prim_poly(), &BitPoly::from_bits(0b11));
        assert_eq!(f1.size(), 2);
        let f2 = FieldCtx::new(2).unwrap();
        assert_eq!(f2.prim_poly(), &BitPoly::from_bits(0b111));
        let f4 = FieldCtx::new(4).unwrap();
        assert_eq!(f4.prim_poly().degree(), Degree::Finite(4));
        // g has order exactly 15.
        let g = f4.basis(1);
        let order = (1..=15).find(|&e| f4.pow(g, e) == FieldElem::ONE).unwrap();
        assert_eq!(order, 15);
    }

    #[test]
    fn whole_table_is_primitive() {
        for n in 1..=MAX_TABLE_DEGREE {
            let ctx = FieldCtx::new(n).unwrap();
            assert_eq!(ctx.log(FieldElem::ONE), Some(0));
            assert_eq!(ctx.antilog_table().len() as u32, ctx.order());
        }
        assert!(FieldCtx::new(0).is_err());
        assert!(FieldCtx::new(25).is_err());
    }

    #[test]
    fn rejects_non_primitive() {
        // x^4 + x^3 + x^2 + x + 1 is irreducible but its root has order 5.
        assert_eq!(FieldCtx::with_primitive(&BitPoly::from_bits(0b11111)).unwrap_err(), Error::NotPrimitive);
        // x^2 + 1 is reducible.
        assert!(FieldCtx::with_primitive(&BitPoly::from_bits(0b101)).is_err());
        // x^5 + x^3 + 1 is primitive and not the table entry.
        assert_eq!(FieldCtx::with_primitive(&BitPoly::from_bits(0b101001)).unwrap().n(), 5);
    }

    #[test]
    fn arithmetic_examples() {
        let ctx = FieldCtx::new(6).unwrap();
        for a in ctx.elements() {
            assert!(ctx.add(a, a).is_zero());
            assert_eq!(ctx.mul(a, FieldElem::ONE), a);
            if !a.is_zero() {
                assert_eq!(ctx.pow(a, 63), FieldElem::ONE);
                assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), FieldElem::ONE);
            }
        }
        assert_eq!(ctx.inv(FieldElem::ZERO), Err(Error::InverseOfZero));
        assert!(ctx.elem(64).is_err());
    }

    #[test]
    fn mul_routes_agree_exhaustively() {
        for n in 1..=10 {
            let ctx = FieldCtx::new(n).unwrap();
            for a in ctx.elements() {
                for b in ctx.elements() {
                    assert_eq!(ctx.mul(a, b), ctx.mul_clmul(a, b), "n={n} a={a:?} b={b:?}");
                }
            }
        }
    }

    #[test]
    fn trace_examples() {
        for n in 1..=12 {
            let ctx = FieldCtx::new(n).unwrap();
            assert_eq!(ctx.trace(FieldElem::ONE), (n % 2) as u8);
            let zeros = ctx.elements().filter(|&a| ctx.trace(a) == 0).count();
            assert_eq!(zeros, ctx.size() / 2);
            for a in ctx.elements() {
                assert_eq!(ctx.trace(a), ctx.trace_by_conjugates(a));
                assert_eq!(ctx.trace(ctx.mul(a, a)), ctx.trace(a));
            }
        }
        let f4 = FieldCtx::new(2).unwrap();
        let omega = f4.basis(1);
        assert_eq!(f4.add(f4.mul(omega, omega), f4.add(omega, FieldElem::ONE)), FieldElem::ZERO);
        assert_eq!(f4.trace(omega), 1);
        let f8 = FieldCtx::new(3).unwrap();
        assert_eq!(f8.elements().filter(|&a| f8.trace(a) == 0).count(), 4);
    }

    #[test]
    fn trace_is_additive() {
        for n in 1..=8 {
            let ctx = FieldCtx::new(n).unwrap();
            for a in ctx.elements() {
                for b in ctx.elements() {
                    assert_eq!(ctx.trace(ctx.add(a, b)), ctx.trace(a) ^ ctx.trace(b));
                }
            }
        }
    }

    #[test]
    fn relative_trace() {
        let ctx = FieldCtx::new(4).unwrap();
        for a in ctx.elements() {
            assert_eq!(ctx.rel_trace(a, 4).unwrap(), a);
            assert_eq!(ctx.rel_trace(a, 1).unwrap().index(), ctx.trace(a) as u32);
            if ctx.in_subfield(a, 2).unwrap() {
                assert!(ctx.rel_trace(a, 2).unwrap().is_zero());
            }
        }
        assert_eq!(ctx.rel_trace(FieldElem::ONE, 3), Err(Error::NotADivisor { d: 3, n: 4 }));
        assert!(ctx.rel_trace(FieldElem::ONE, 0).is_err());
    }

    #[test]
    fn trace_towers_compose() {
        for n in 1..=12 {
            let ctx = FieldCtx::new(n).unwrap();
            for d in (1..=n).filter(|d| n % d == 0) {
                for a in ctx.elements() {
                    let inner = ctx.rel_trace(a, d).unwrap();
                    assert_eq!(ctx.subfield_trace(inner, d).unwrap(), ctx.trace(a));
                }
            }
        }
    }

    #[test]
    fn subfield_membership() {
        let ctx = FieldCtx::new(4).unwrap();
        for e in [1, 2, 4] {
            assert!(ctx.in_subfield(FieldElem::ZERO, e).unwrap());
            assert!(ctx.in_subfield(FieldElem::ONE, e).unwrap());
        }
        assert_eq!(ctx.elements().filter(|&a| ctx.in_subfield(a, 2).unwrap()).count(), 4);
        assert!(!ctx.in_subfield(ctx.basis(1), 2).unwrap());
        assert!(ctx.in_subfield(FieldElem::ONE, 3).is_err());
        assert!(ctx.subfield_trace(ctx.basis(1), 2).is_err());
    }

    #[test]
    fn dual_basis_pairs_to_identity() {
        assert_eq!(FieldCtx::new(1).unwrap().dual_basis(), &[FieldElem::ONE]);
        for n in 1..=16 {
            let ctx = FieldCtx::new(n).unwrap();
            for (i, &d) in ctx.dual_basis().iter().enumerate() {
                for j in 0..n {
                    let pairing = ctx.trace(ctx.mul(d, ctx.basis(j)));
                    assert_eq!(pairing, (i as u32 == j) as u8, "n={n}");
                }
            }
        }
    }

    #[test]
    fn dual_of_dual_is_original() {
        let ctx = FieldCtx::new(3).unwrap();
        let basis: Vec<FieldElem> = (0..3).map(|j| ctx.basis(j)).collect();
        let dual = ctx.dual_basis().to_vec();
        assert_eq!(ctx.dual_of(&dual).unwrap(), basis);
        let dependent = [FieldElem::ONE, FieldElem::ONE, ctx.basis(2)];
        assert!(ctx.dual_of(&dependent).is_err());
    }

    #[test]
    fn kernel_examples() {
        let f8 = FieldCtx::new(3).unwrap();
        assert_eq!(f8.linearized_kernel_dim(&[0]).unwrap(), 0);
        assert_eq!(brute_kernel_size(&f8, &[0, 1, 2]), 4);
        assert_eq!(f8.linearized_kernel_dim(&[0, 1, 2]).unwrap(), 2);
        assert_eq!(f8.linearized_kernel_dim(&[]).unwrap(), 3);
        assert_eq!(f8.linearized_kernel_dim(&[1, 1]).unwrap(), 3);
        assert_eq!(f8.linearized_kernel_dim(&[3]), Err(Error::TapOutOfRange { tap: 3, n: 3 }));
        let f32 = FieldCtx::new(5).unwrap();
        assert_eq!(brute_kernel_size(&f32, &[0, 1, 4]), 1);
        assert_eq!(f32.linearized_kernel_dim(&[0, 1, 4]).unwrap(), 0);
    }

    #[test]
    fn kernel_dim_matches_brute_force() {
        for n in 1..=8 {
            let ctx = FieldCtx::new(n).unwrap();
            for mask in 0u32..(1 << n) {
                let taps: Vec<u32> = (0..n).filter(|s| mask >> s & 1 == 1).collect();
                let dim = ctx.linearized_kernel_dim(&taps).unwrap();
                assert_eq!(1usize << dim, brute_kernel_size(&ctx, &taps), "n={n} taps={taps:?}");
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]

        #[test]
        fn kernel_trivial_iff_coprime(n in 1u32..=16, mask in any::<u32>()) {
            let ctx = FieldCtx::new(n).unwrap();
            let taps: Vec<u32> = (0..n).filter(|s| mask >> s & 1 == 1).collect();
            let l = BitPoly::from_exponents(taps.iter().map(|&s| s as usize));
            let coprime = !l.is_zero() && l.gcd(&BitPoly::x_m_minus_1(n as usize)).unwrap().is_one();
            prop_assert_eq!(ctx.linearized_kernel_dim(&taps).unwrap() == 0, coprime);
        }

        #[test]
        fn trace_additive_large(n in 9u32..=16, a in any::<u32>(), b in any::<u32>()) {
            let ctx = FieldCtx::new(n).unwrap();
            let (a, b) = (FieldElem(a & ctx.order()), FieldElem(b & ctx.order()));
            prop_assert_eq!(ctx.trace(ctx.add(a, b)), ctx.trace(a) ^ ctx.trace(b));
        }
    }
}
