//! Randomized and exhaustive self-checks run by `bentforge selftest`.

use bentforge_core::field::FieldCtx;
use bentforge_core::qbf::is_qbf_set;
use bentforge_core::spectra::fourier_fwht;
use bentforge_core::verify::{trace_decomposition_holds, verify_with, Checks};
use bentforge_core::{BitPoly, CoeffSet, Params, Result, RingCtx};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Largest `--max-n` accepted.
pub const MAX_SELFTEST_N: u32 = 14;

/// Outcome of one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: u64,
    pub failures: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// A linearized polynomial has trivial kernel iff its conventional
/// associate is coprime to `x^n − 1`.
pub fn linearized_suite(rng: &mut StdRng, cases: u64) -> Result<SuiteReport> {
    let fields: Vec<FieldCtx> = (1..=16).map(FieldCtx::new).collect::<Result<_>>()?;
    let mut failures = 0;
    for _ in 0..cases {
        let field = &fields[rng.random_range(0..fields.len())];
        let n = field.n();
        let mask: u32 = rng.random::<u32>() & ((1u64 << n) - 1) as u32;
        let taps: Vec<u32> = (0..n).filter(|s| mask >> s & 1 == 1).collect();
        let assoc = BitPoly::from_exponents(taps.iter().map(|&s| s as usize));
        let coprime = !assoc.is_zero() && assoc.gcd(&BitPoly::x_m_minus_1(n as usize))?.is_one();
        if (field.linearized_kernel_dim(&taps)? == 0) != coprime {
            failures += 1;
        }
    }
    Ok(SuiteReport { name: "linearized kernel vs associate gcd", cases, failures })
}

fn random_poly(rng: &mut StdRng, max_degree: u32) -> BitPoly {
    let d = rng.random_range(0..=max_degree);
    BitPoly::from_exponents((0..=d as usize).filter(|_| rng.random::<bool>()))
}

/// `gcd(a, b) = 1` iff `gcd(a(x^s), b(x^s)) = 1`.
pub fn composition_suite(rng: &mut StdRng, cases: u64) -> Result<SuiteReport> {
    let mut failures = 0;
    let mut done = 0;
    while done < cases {
        let (a, b) = (random_poly(rng, 64), random_poly(rng, 64));
        if a.is_zero() && b.is_zero() {
            continue;
        }
        let s = rng.random_range(1..=8usize);
        let before = a.gcd(&b)?.is_one();
        let after = a.compose_xk(s).gcd(&b.compose_xk(s))?.is_one();
        if before != after {
            failures += 1;
        }
        done += 1;
    }
    Ok(SuiteReport { name: "coprimality under x -> x^s", cases, failures })
}

/// `Tr(t) = tr(μt) + 2p(μt)` for every `n ≤ max_n`.
pub fn trace_suite(max_n: u32) -> Result<SuiteReport> {
    let mut failures = 0;
    for n in 1..=max_n {
        if !trace_decomposition_holds(&RingCtx::new(n)?) {
            failures += 1;
        }
    }
    Ok(SuiteReport { name: "ring trace decomposition", cases: max_n as u64, failures })
}

/// Verdict consistency for every `(e, m)` with `e·m ≤ max_n`, every
/// `k ≤ m`, every `C` and `α = 1`, with Parseval on each spectrum.
pub fn grid_suite(max_n: u32) -> Result<SuiteReport> {
    let (mut cases, mut failures) = (0, 0);
    for n in 2..=max_n {
        let ring = RingCtx::new(n)?;
        for e in (1..=n).filter(|e| n % e == 0) {
            let m = n / e;
            for k in 1..=m {
                for mask in 0..1u32 << CoeffSet::max_index(m) {
                    let p = Params::new(n, e, k, CoeffSet::from_mask(mask), 0)?;
                    let v = verify_with(&ring, &p, Checks::ALL, max_n)?;
                    let q = bentforge_core::functions::build_q(&ring, &p)?;
                    let parseval = fourier_fwht(ring.field(), &q)?.parseval_holds();
                    let gcd = is_qbf_set(p.coeffs(), m, k)?;
                    if !v.consistent || !parseval || v.spectrum_bent != Some(gcd) {
                        failures += 1;
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(SuiteReport { name: "gcd = rank = spectrum grid", cases, failures })
}

/// All suites in order.
pub fn run_all(max_n: u32, seed: u64, cases: u64) -> Result<Vec<SuiteReport>> {
    let mut rng = StdRng::seed_from_u64(seed);
    Ok(vec![
        trace_suite(max_n)?,
        linearized_suite(&mut rng, cases)?,
        composition_suite(&mut rng, cases)?,
        grid_suite(max_n)?,
    ])
}
