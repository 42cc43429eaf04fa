//! Quaternary and binary functions on F_{2^n}: the construction
//! `Q(x) = Tr(αx + 2 Σ_{i∈C} β x^{1+2^{eki}})` on the Teichmueller set, its
//! 2-adic split `Q = f0 + 2 f1`, the binary function `f_Q`, the quadratic
//! `p(x)` and the Gray map.
//!
//! Tables are indexed by field-element index. A function on `T` is stored
//! at the index of `μ(t)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::coeff_set::CoeffSet;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem, MAX_TABLE_DEGREE};
use crate::ring::{RingCtx, RingElem, TeichElem};

/// Parameters of the construction. `β = α²` is always derived.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    n: u32,
    e: u32,
    m: u32,
    k: u32,
    coeffs: CoeffSet,
    alpha_exp: u32,
}

impl Params {
    /// Validates `n = e·m`, `k ≥ 1`, the coefficient range for `m` and
    /// `α = ξ^{alpha_exp} ∈ T_e^*`.
    pub fn new(n: u32, e: u32, k: u32, coeffs: CoeffSet, alpha_exp: u32) -> Result<Self> {
        if n == 0 || n > MAX_TABLE_DEGREE {
            return Err(Error::UnsupportedDegree { n, max: MAX_TABLE_DEGREE });
        }
        if e == 0 || !n.is_multiple_of(e) {
            return Err(Error::NotADivisor { d: e, n });
        }
        if k == 0 || k > 1 << 31 {
            return Err(Error::InvalidParams("k must be in 1..=2^31"));
        }
        let m = n / e;
        coeffs.validate(m)?;
        let order = (1u64 << n) - 1;
        let in_subgroup = (alpha_exp as u64) < order.max(1)
            && (alpha_exp as u64 * ((1u64 << e) - 1)).is_multiple_of(order);
        if !in_subgroup {
            return Err(Error::AlphaNotInSubgroup { alpha_exp, e });
        }
        Ok(Params { n, e, m, k, coeffs, alpha_exp })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn coeffs(&self) -> &CoeffSet {
        &self.coeffs
    }

    pub fn alpha_exp(&self) -> u32 {
        self.alpha_exp
    }

    /// Exponent of `β = α²`.
    pub fn beta_exp(&self) -> u32 {
        let order = (1u64 << self.n) - 1;
        (2 * self.alpha_exp as u64 % order) as u32
    }

    pub fn alpha(&self) -> TeichElem {
        TeichElem::Pow(self.alpha_exp)
    }

    pub fn beta(&self) -> TeichElem {
        TeichElem::Pow(self.beta_exp())
    }

    /// `e·k·i mod n` for each active index `i`.
    pub(crate) fn shifts(&self) -> impl Iterator<Item = u32> + '_ {
        let ek = self.e as u64 * self.k as u64;
        self.coeffs.iter().map(move |i| (ek * i as u64 % self.n as u64) as u32)
    }
}

/// Map `F_{2^n} → Z_4` as a value table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuaternaryFn {
    n: u32,
    values: Vec<u8>,
}

impl QuaternaryFn {
    pub fn new(n: u32, values: Vec<u8>) -> Result<Self> {
        if values.len() != 1usize << n {
            return Err(Error::MalformedTable("length must be 2^n"));
        }
        if values.iter().any(|&v| v > 3) {
            return Err(Error::MalformedTable("quaternary values must be in 0..=3"));
        }
        Ok(Self { n, values })
    }

    pub fn constant(n: u32, c: u8) -> Self {
        Self { n, values: vec![c & 3; 1 << n] }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn at(&self, x: FieldElem) -> u8 {
        self.values[x.index() as usize]
    }

    /// `−f`, whose spectrum is the complex conjugate of that of `f`.
    pub fn negated(&self) -> Self {
        Self { n: self.n, values: self.values.iter().map(|&v| (4 - v) & 3).collect() }
    }
}

/// Map `F_2^vars → F_2` as a value table of zeros and ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryFn {
    vars: u32,
    values: Vec<u8>,
}

impl BinaryFn {
    pub fn new(vars: u32, values: Vec<u8>) -> Result<Self> {
        if values.len() != 1usize << vars {
            return Err(Error::MalformedTable("length must be 2^vars"));
        }
        if values.iter().any(|&v| v > 1) {
            return Err(Error::MalformedTable("binary values must be 0 or 1"));
        }
        Ok(Self { vars, values })
    }

    pub fn constant(vars: u32, c: u8) -> Self {
        Self { vars, values: vec![c & 1; 1 << vars] }
    }

    pub fn vars(&self) -> u32 {
        self.vars
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn at(&self, x: FieldElem) -> u8 {
        self.values[x.index() as usize]
    }

    /// Pointwise sum mod 2.
    pub fn xor(&self, other: &BinaryFn) -> BinaryFn {
        assert_eq!(self.vars, other.vars, "functions on different domains");
        BinaryFn {
            vars: self.vars,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a ^ b).collect(),
        }
    }
}

fn check_ring(ring: &RingCtx, n: u32) -> Result<()> {
    if ring.n() == n {
        Ok(())
    } else {
        Err(Error::ContextMismatch)
    }
}

fn trace_form(
    ring: &RingCtx,
    shifts: &[u32],
    alpha: TeichElem,
    beta: TeichElem,
) -> QuaternaryFn {
    let field = ring.field();
    let exps: Vec<u64> = shifts.iter().map(|&s| 1 + field.pow2_mod_order(s)).collect();
    let mut values = vec![0u8; field.size()];
    for t in ring.teich_elements() {
        let linear = ring.teich(ring.teich_mul(alpha, t));
        let quadratic = exps.iter().fold(RingElem::ZERO, |acc, &ex| {
            acc + ring.teich(ring.teich_mul(beta, ring.teich_pow(t, ex)))
        });
        let z = linear + quadratic.double();
        values[ring.mu(ring.teich(t)).index() as usize] = ring.ring_trace(z);
    }
    QuaternaryFn { n: ring.n(), values }
}

/// `Q(t) = Tr(α t + 2 Σ_{i∈C} β t^{1+2^{eki}})` for every `t ∈ T`, evaluated
/// in GR(4,n).
pub fn build_q(ring: &RingCtx, params: &Params) -> Result<QuaternaryFn> {
    check_ring(ring, params.n)?;
    let shifts: Vec<u32> = params.shifts().collect();
    Ok(trace_form(ring, &shifts, params.alpha(), params.beta()))
}

/// Same form with an independent `β = ξ^{beta_exp}` (or `β = 0` when
/// `None`). Nothing is claimed about bentness when `β ≠ α²`.
pub fn build_q_with_beta(
    ring: &RingCtx,
    params: &Params,
    beta_exp: Option<u32>,
) -> Result<QuaternaryFn> {
    check_ring(ring, params.n)?;
    let beta = match beta_exp {
        None => TeichElem::Zero,
        Some(b) if b < ring.order() => TeichElem::Pow(b),
        Some(_) => return Err(Error::InvalidParams("beta exponent must be below 2^n - 1")),
    };
    let shifts: Vec<u32> = params.shifts().collect();
    Ok(trace_form(ring, &shifts, params.alpha(), beta))
}

/// 2-adic split `f = f0 + 2 f1`.
pub fn split_2adic(f: &QuaternaryFn) -> (BinaryFn, BinaryFn) {
    let f0 = f.values.iter().map(|&v| v & 1).collect();
    let f1 = f.values.iter().map(|&v| v >> 1).collect();
    (BinaryFn { vars: f.n, values: f0 }, BinaryFn { vars: f.n, values: f1 })
}

pub fn recombine(f0: &BinaryFn, f1: &BinaryFn) -> Result<QuaternaryFn> {
    if f0.vars != f1.vars {
        return Err(Error::MalformedTable("components have different lengths"));
    }
    Ok(QuaternaryFn {
        n: f0.vars,
        values: f0.values.iter().zip(&f1.values).map(|(a, b)| a + 2 * b).collect(),
    })
}

/// The quadratic `p(x)` with `Tr(t) = tr(μ(t)) + 2 p(μ(t))`:
/// `Σ_{i=1}^{n/2-1} tr(x^{1+2^i}) + tr_1^{n/2}(x^{1+2^{n/2}})` for even `n`,
/// `Σ_{i=1}^{(n-1)/2} tr(x^{1+2^i})` for odd `n`.
pub fn p_func(field: &FieldCtx) -> BinaryFn {
    let n = field.n();
    let full_terms = if n.is_multiple_of(2) { n / 2 - 1 } else { (n - 1) / 2 };
    let values = field
        .elements()
        .map(|x| {
            let mut v = 0;
            for i in 1..=full_terms {
                v ^= field.trace(field.pow(x, 1 + field.pow2_mod_order(i)));
            }
            if n.is_multiple_of(2) {
                let h = n / 2;
                let y = field.pow(x, 1 + field.pow2_mod_order(h));
                v ^= field.subfield_trace(y, h).expect("x^{1+2^{n/2}} lies in the half field");
            }
            v
        })
        .collect();
    BinaryFn { vars: n, values }
}

/// `f_Q(x) = p(ᾱx) + Σ_{i∈C} tr(β̄ x^{1+2^{eki}})` with `ᾱ = μ(α)`, `β̄ = ᾱ²`.
pub fn build_fq(field: &FieldCtx, params: &Params) -> Result<BinaryFn> {
    if field.n() != params.n {
        return Err(Error::ContextMismatch);
    }
    let alpha = field.exp(params.alpha_exp as u64);
    let beta = field.mul(alpha, alpha);
    let exps: Vec<u64> = params.shifts().map(|s| 1 + field.pow2_mod_order(s)).collect();
    let p = p_func(field);
    let values = field
        .elements()
        .map(|x| {
            exps.iter().fold(p.at(field.mul(alpha, x)), |acc, &ex| {
                acc ^ field.trace(field.mul(beta, field.pow(x, ex)))
            })
        })
        .collect();
    Ok(BinaryFn { vars: params.n, values })
}

/// Gray image `φ(f)(y, z) = f0(y)·z + f1(y)` on `n + 1` variables, stored at
/// index `2·y + z`.
pub fn gray_map(f: &QuaternaryFn) -> BinaryFn {
    let mut values = Vec::with_capacity(2 * f.values.len());
    for &v in &f.values {
        let (f0, f1) = (v & 1, v >> 1);
        values.push(f1);
        values.push(f0 ^ f1);
    }
    BinaryFn { vars: f.n + 1, values }
}
