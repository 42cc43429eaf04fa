//! Verdicts combining the gcd criterion, the bilinear rank and exhaustive
//! spectra, plus the trace-decomposition check `Tr(t) = tr(μt) + 2p(μt)`.

use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::functions::{build_fq, build_q, gray_map, p_func, Params};
use crate::qbf::is_qbf_set;
use crate::ring::RingCtx;
use crate::spectra::{bilinear_rank, classify, is_quaternary_bent, BinaryClass};

/// Default cap on `n` for exhaustive spectra.
pub const DEFAULT_MAX_SPECTRAL_N: u32 = 14;

/// Largest `n` accepted by [`trace_decomposition_suite`].
pub const MAX_DECOMPOSITION_N: u32 = 16;

/// Which criteria to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Checks {
    pub gcd: bool,
    pub rank: bool,
    pub spectrum: bool,
}

impl Checks {
    pub const ALL: Checks = Checks { gcd: true, rank: true, spectrum: true };
    pub const GCD: Checks = Checks { gcd: true, rank: false, spectrum: false };
    pub const RANK: Checks = Checks { gcd: false, rank: true, spectrum: false };
    pub const SPECTRUM: Checks = Checks { gcd: false, rank: false, spectrum: true };
}

impl Default for Checks {
    fn default() -> Self {
        Checks::ALL
    }
}

/// Outcome of the checks on one parameter set. Absent fields were not
/// requested or were skipped by the spectral cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub params: Params,
    pub gcd_ok: Option<bool>,
    pub rank_full: Option<bool>,
    pub spectrum_bent: Option<bool>,
    pub fq_class: Option<BinaryClass>,
    pub gray_class: Option<BinaryClass>,
    pub consistent: bool,
}

/// Class of `f_Q` when the gcd criterion holds.
pub fn predicted_fq_class(n: u32) -> BinaryClass {
    if n.is_multiple_of(2) {
        BinaryClass::Bent
    } else {
        BinaryClass::SemiBent
    }
}

/// Class of the Gray image of a quaternary bent function.
pub fn predicted_gray_class(n: u32) -> BinaryClass {
    if n.is_multiple_of(2) {
        BinaryClass::SemiBent
    } else {
        BinaryClass::Bent
    }
}

impl Verdict {
    /// All present bentness booleans agree; `f_Q` has the predicted class
    /// exactly when they are true; a bent `Q` has a Gray image of the
    /// predicted class.
    fn is_consistent(&self) -> bool {
        let n = self.params.n();
        let flags = [self.gcd_ok, self.rank_full, self.spectrum_bent];
        let mut present = flags.iter().flatten();
        let agree = match present.next() {
            Some(&first) => present.all(|&b| b == first),
            None => true,
        };
        let bent = flags.iter().flatten().next().copied();
        let fq_ok = match (self.fq_class, bent) {
            (Some(class), Some(b)) => (class == predicted_fq_class(n)) == b,
            _ => true,
        };
        let gray_ok = match (self.gray_class, self.spectrum_bent) {
            (Some(class), Some(true)) => class == predicted_gray_class(n),
            _ => true,
        };
        agree && fq_ok && gray_ok
    }

    /// Whether every requested spectral field was computed.
    pub fn spectral_complete(&self) -> bool {
        self.spectrum_bent.is_some()
    }
}

/// Runs the requested checks. Spectral checks are skipped when
/// `n > max_spectral_n`.
pub fn verify_with(ring: &RingCtx, params: &Params, checks: Checks, max_spectral_n: u32) -> Result<Verdict> {
    let n = params.n();
    if ring.n() != n {
        return Err(Error::ContextMismatch);
    }
    let gcd_ok = if checks.gcd { Some(is_qbf_set(params.coeffs(), params.m(), params.k())?) } else { None };
    let rank_full = if checks.rank { Some(bilinear_rank(ring.field(), params)? == n) } else { None };
    let (mut spectrum_bent, mut fq_class, mut gray_class) = (None, None, None);
    if checks.spectrum && n <= max_spectral_n {
        let q = build_q(ring, params)?;
        spectrum_bent = Some(is_quaternary_bent(&q));
        fq_class = Some(classify(&build_fq(ring.field(), params)?));
        gray_class = Some(classify(&gray_map(&q)));
    }
    let mut v = Verdict { params: params.clone(), gcd_ok, rank_full, spectrum_bent, fq_class, gray_class, consistent: false };
    v.consistent = v.is_consistent();
    Ok(v)
}

/// All checks on a fresh ring context.
pub fn full_verify(params: &Params, max_spectral_n: u32) -> Result<Verdict> {
    let ring = RingCtx::new(params.n())?;
    verify_with(&ring, params, Checks::ALL, max_spectral_n)
}

/// `Tr(t) = tr(μ(t)) + 2p(μ(t))` at every `t ∈ T`.
pub fn trace_decomposition_holds(ring: &RingCtx) -> bool {
    let field: &FieldCtx = ring.field();
    let p = p_func(field);
    ring.teich_elements().all(|t| {
        let z = ring.teich(t);
        let x = ring.mu(z);
        ring.ring_trace(z) == field.trace(x) + 2 * p.at(x)
    })
}

/// [`trace_decomposition_holds`] for every `n ≤ n_max`.
pub fn trace_decomposition_suite(n_max: u32) -> Result<bool> {
    if n_max > MAX_DECOMPOSITION_N {
        return Err(Error::UnsupportedDegree { n: n_max, max: MAX_DECOMPOSITION_N });
    }
    for n in 1..=n_max {
        if !trace_decomposition_holds(&RingCtx::new(n)?) {
            return Ok(false);
        }
    }
    Ok(true)
}
