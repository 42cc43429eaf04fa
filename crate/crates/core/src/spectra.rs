//! Exact Fourier and Walsh spectra, bent and semi-bent tests, and the
//! bilinear-form rank of the construction.
//!
//! The quaternary transform is `f̂(a) = Σ_x i^{f(x)} (−1)^{tr(ax)}` with
//! `i = (0, 1)`. Magnitudes are compared squared, so no square roots are
//! ever taken.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::functions::{split_2adic, BinaryFn, Params, QuaternaryFn};

/// Gaussian integer `re + i·im`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: i64,
    pub im: i64,
}

impl GaussInt {
    pub const ZERO: GaussInt = GaussInt { re: 0, im: 0 };
    pub const ONE: GaussInt = GaussInt { re: 1, im: 0 };
    pub const I: GaussInt = GaussInt { re: 0, im: 1 };

    pub const fn new(re: i64, im: i64) -> Self {
        GaussInt { re, im }
    }

    /// `i^v` for `v` taken mod 4.
    pub const fn i_pow(v: u8) -> Self {
        match v & 3 {
            0 => GaussInt::new(1, 0),
            1 => GaussInt::new(0, 1),
            2 => GaussInt::new(-1, 0),
            _ => GaussInt::new(0, -1),
        }
    }

    /// Squared magnitude `re² + im²`.
    pub fn norm(self) -> u64 {
        (self.re as i128 * self.re as i128 + self.im as i128 * self.im as i128) as u64
    }

    pub fn conj(self) -> Self {
        GaussInt::new(self.re, -self.im)
    }
}

impl Add for GaussInt {
    type Output = GaussInt;
    fn add(self, o: GaussInt) -> GaussInt {
        GaussInt::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GaussInt {
    type Output = GaussInt;
    fn sub(self, o: GaussInt) -> GaussInt {
        GaussInt::new(self.re - o.re, self.im - o.im)
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt::new(-self.re, -self.im)
    }
}

impl Mul for GaussInt {
    type Output = GaussInt;
    fn mul(self, o: GaussInt) -> GaussInt {
        GaussInt::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im < 0 {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

/// Quaternary spectrum, indexed by field element `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    n: u32,
    entries: Vec<GaussInt>,
}

impl Spectrum {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn entries(&self) -> &[GaussInt] {
        &self.entries
    }

    pub fn at(&self, a: FieldElem) -> GaussInt {
        self.entries[a.index() as usize]
    }

    /// `Σ_a |f̂(a)|² = 4^n`.
    pub fn parseval_holds(&self) -> bool {
        let total: u128 = self.entries.iter().map(|z| z.norm() as u128).sum();
        total == 1u128 << (2 * self.n)
    }

    /// Count of each squared magnitude.
    pub fn histogram(&self) -> BTreeMap<u64, u64> {
        norm_histogram(self.entries.iter().map(|z| z.norm()))
    }

    /// Every squared magnitude equals `2^n`.
    pub fn is_bent(&self) -> bool {
        let target = 1u64 << self.n;
        self.entries.iter().all(|z| z.norm() == target)
    }
}

/// Count of each value in a stream of squared magnitudes.
pub fn norm_histogram(norms: impl IntoIterator<Item = u64>) -> BTreeMap<u64, u64> {
    let mut hist = BTreeMap::new();
    for v in norms {
        *hist.entry(v).or_insert(0) += 1;
    }
    hist
}

/// In-place Walsh-Hadamard butterfly: `w[u] ← Σ_x w[x] (−1)^{⟨u,x⟩}`.
pub fn fwht_in_place(w: &mut [i64]) {
    let len = w.len();
    assert!(len.is_power_of_two(), "transform length must be a power of two");
    let mut h = 1;
    while h < len {
        for block in w.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
}

/// `a(u) = Σ u_j δ_j` for every coordinate vector `u`, so that
/// `tr(a(u)·x) = ⟨u, x⟩` with `x` in polynomial-basis coordinates.
fn dual_positions(field: &FieldCtx) -> Vec<u32> {
    let dual = field.dual_basis();
    let mut pos = vec![0u32; field.size()];
    for u in 1..pos.len() {
        let low = u.trailing_zeros() as usize;
        pos[u] = pos[u & (u - 1)] ^ dual[low].index();
    }
    pos
}

fn check_field(field: &FieldCtx, n: u32) -> Result<()> {
    if field.n() == n {
        Ok(())
    } else {
        Err(Error::ContextMismatch)
    }
}

/// Direct `O(4^n)` evaluation of `f̂(a)` for every `a`.
pub fn fourier_naive(field: &FieldCtx, f: &QuaternaryFn) -> Result<Spectrum> {
    check_field(field, f.n())?;
    let entries = field
        .elements()
        .map(|a| {
            field.elements().fold(GaussInt::ZERO, |acc, x| {
                let z = GaussInt::i_pow(f.at(x));
                if field.trace(field.mul(a, x)) == 0 {
                    acc + z
                } else {
                    acc - z
                }
            })
        })
        .collect();
    Ok(Spectrum { n: f.n(), entries })
}

/// Butterfly transform of `i^{f(x)}` over coordinate vectors, with the
/// result indexed by coordinate vector `u` rather than field element.
pub fn fourier_coordinates(f: &QuaternaryFn) -> Vec<GaussInt> {
    let (mut re, mut im): (Vec<i64>, Vec<i64>) = f
        .values()
        .iter()
        .map(|&v| {
            let z = GaussInt::i_pow(v);
            (z.re, z.im)
        })
        .unzip();
    fwht_in_place(&mut re);
    fwht_in_place(&mut im);
    re.into_iter().zip(im).map(|(re, im)| GaussInt { re, im }).collect()
}

/// Fast transform: butterfly on coordinates, then each `u` is moved to the
/// field element `Σ u_j δ_j` of the dual basis.
pub fn fourier_fwht(field: &FieldCtx, f: &QuaternaryFn) -> Result<Spectrum> {
    check_field(field, f.n())?;
    let coords = fourier_coordinates(f);
    let mut entries = vec![GaussInt::ZERO; coords.len()];
    for (w, &a) in coords.into_iter().zip(&dual_positions(field)) {
        entries[a as usize] = w;
    }
    Ok(Spectrum { n: f.n(), entries })
}

/// `Σ_x (−1)^{g(x) + ⟨u,x⟩}` for every coordinate vector `u`. Suitable for
/// any Boolean function, including Gray images on `n + 1` variables.
pub fn walsh_coordinates(g: &BinaryFn) -> Vec<i64> {
    let mut w: Vec<i64> = g.values().iter().map(|&v| 1 - 2 * v as i64).collect();
    fwht_in_place(&mut w);
    w
}

/// `ĝ(a) = Σ_x (−1)^{g(x) + tr(ax)}`, indexed by field element `a`.
pub fn walsh_binary(field: &FieldCtx, g: &BinaryFn) -> Result<Vec<i64>> {
    check_field(field, g.vars())?;
    let coords = walsh_coordinates(g);
    let mut out = vec![0i64; coords.len()];
    for (w, &a) in coords.into_iter().zip(&dual_positions(field)) {
        out[a as usize] = w;
    }
    Ok(out)
}

/// Bent/semi-bent status of a Boolean function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryClass {
    Bent,
    SemiBent,
    Neither,
}

impl BinaryClass {
    pub fn as_str(self) -> &'static str {
        match self {
            BinaryClass::Bent => "BENT",
            BinaryClass::SemiBent => "SEMIBENT",
            BinaryClass::Neither => "NEITHER",
        }
    }
}

impl fmt::Display for BinaryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Squared Walsh value of a semi-bent function on `vars` variables,
/// `2^{2⌊(vars+2)/2⌋}`.
pub fn semibent_square(vars: u32) -> u64 {
    1u64 << (2 * ((vars + 2) / 2))
}

/// Classifies a Walsh spectrum on `vars` variables. Bent takes precedence;
/// the two classes are disjoint anyway since their squares differ.
pub fn classify_walsh(vars: u32, walsh: &[i64]) -> BinaryClass {
    let squares = || walsh.iter().map(|&w| (w as i128 * w as i128) as u64);
    let bent = 1u64 << vars;
    let semi = semibent_square(vars);
    if squares().all(|s| s == bent) {
        BinaryClass::Bent
    } else if squares().all(|s| s == 0 || s == semi) {
        BinaryClass::SemiBent
    } else {
        BinaryClass::Neither
    }
}

pub fn classify(g: &BinaryFn) -> BinaryClass {
    classify_walsh(g.vars(), &walsh_coordinates(g))
}

/// Reindexing by the dual basis only permutes entries, so coordinate-indexed
/// spectra decide bentness.
pub fn is_binary_bent(g: &BinaryFn) -> bool {
    classify(g) == BinaryClass::Bent
}

pub fn is_semibent(g: &BinaryFn) -> bool {
    classify(g) == BinaryClass::SemiBent
}

pub fn is_quaternary_bent(f: &QuaternaryFn) -> bool {
    let target = 1u64 << f.n();
    fourier_coordinates(f).iter().all(|z| z.norm() == target)
}

/// The binary components `f1` and `f0 + f1` of `f = f0 + 2 f1`.
pub fn split_components(f: &QuaternaryFn) -> (BinaryFn, BinaryFn) {
    let (f0, f1) = split_2adic(f);
    let sum = f0.xor(&f1);
    (f1, sum)
}

/// Checks `2|f̂(a)|² = ĝ(a)² + ĥ(a)²` at every `a` with `g = f1` and
/// `h = f0 + f1`. It follows from
/// `i^f = ((1+i)/2)(−1)^{f1} + ((1−i)/2)(−1)^{f0+f1}`.
pub fn check_split_identity(f: &QuaternaryFn) -> bool {
    let (g, h) = split_components(f);
    let spec = fourier_coordinates(f);
    let wg = walsh_coordinates(&g);
    let wh = walsh_coordinates(&h);
    spec.iter()
        .zip(wg.iter().zip(&wh))
        .all(|(z, (&a, &b))| 2 * z.norm() as i128 == a as i128 * a as i128 + b as i128 * b as i128)
}

/// Joint class of `(f1, f0 + f1)`: the class shared by both components, or
/// `Neither` when they differ.
pub fn split_components_class(f: &QuaternaryFn) -> BinaryClass {
    let (g, h) = split_components(f);
    match (classify(&g), classify(&h)) {
        (a, b) if a == b => a,
        _ => BinaryClass::Neither,
    }
}

/// Whether the Walsh spectra of `f1` and `f0 + f1` force `f` to be bent:
/// both bent for even `n`; for odd `n` both semi-bent with complementary
/// supports, since `2^{n+1}` is a sum of two even squares only as
/// `2^{n+1} + 0`. Joint semi-bentness alone does not suffice for odd `n`
/// (`f = 2·tr(x³)` on F_8 is a counterexample).
pub fn components_certify_bent(f: &QuaternaryFn) -> bool {
    let n = f.n();
    let (g, h) = split_components(f);
    let (wg, wh) = (walsh_coordinates(&g), walsh_coordinates(&h));
    if n.is_multiple_of(2) {
        classify_walsh(n, &wg) == BinaryClass::Bent && classify_walsh(n, &wh) == BinaryClass::Bent
    } else {
        let semi = semibent_square(n) as i128;
        wg.iter().zip(&wh).all(|(&a, &b)| {
            let (a, b) = (a as i128 * a as i128, b as i128 * b as i128);
            (a == semi && b == 0) || (a == 0 && b == semi)
        })
    }
}

/// Tap list of `L(x) = x + Σ_{i∈C} (x^{2^{eki}} + x^{2^{ek(m−i)}})`, exponents
/// reduced mod `n`. Coinciding taps are kept; they cancel in evaluation.
pub fn bilinear_taps(params: &Params) -> Vec<u32> {
    let n = params.n() as u64;
    let ek = params.e() as u64 * params.k() as u64;
    let mut taps = vec![0u32];
    for i in params.coeffs().iter() {
        taps.push((ek * i as u64 % n) as u32);
        taps.push((ek * (params.m() - i) as u64 % n) as u32);
    }
    taps
}

/// Rank `n − dim ker L` of the bilinear form of `Q`.
pub fn bilinear_rank(field: &FieldCtx, params: &Params) -> Result<u32> {
    check_field(field, params.n())?;
    Ok(params.n() - field.linearized_kernel_dim(&bilinear_taps(params))?)
}
