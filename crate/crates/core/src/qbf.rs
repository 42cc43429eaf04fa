//! The gcd criterion `gcd(c(x^k), x^m − 1) = 1`, the closed-form
//! coefficient-set families with their integer predicates and factorization
//! identities, and exhaustive enumeration of QBF-sets.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::coeff_set::CoeffSet;
use crate::error::{Error, Result};
use crate::gcd_u64;
use crate::poly::{c_from_set, BitPoly, DEFAULT_MAX_DEGREE};

/// Largest `m` or `k` accepted by the integer predicates.
pub const MAX_MK: u32 = 1 << 31;

/// Largest `⌊(m−1)/2⌋` accepted by [`enumerate_all`].
pub const MAX_SEARCH_BITS: u32 = 24;

/// Reduces `p(x^k)` modulo `x^m − 1` by folding exponents, so `k` may be
/// arbitrarily large.
fn compose_mod(p: &BitPoly, k: u64, m: u64) -> BitPoly {
    BitPoly::from_exponents(p.exponents().map(|e| (e as u64 * (k % m) % m) as usize))
}

fn check_m(m: u32) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidParams("m must be positive"));
    }
    if m as usize > DEFAULT_MAX_DEGREE {
        return Err(Error::DegreeCapExceeded { degree: m as usize, cap: DEFAULT_MAX_DEGREE });
    }
    Ok(())
}

/// `gcd(c(x^k), x^m − 1) = 1`. The composition is folded modulo `x^m − 1`
/// first, which leaves the gcd unchanged.
pub fn is_qbf_set(coeffs: &CoeffSet, m: u32, k: u32) -> Result<bool> {
    check_m(m)?;
    if k == 0 {
        return Err(Error::InvalidParams("k must be positive"));
    }
    let c = c_from_set(coeffs, m)?;
    let folded = compose_mod(&c, k as u64, m as u64);
    Ok(folded.gcd(&BitPoly::x_m_minus_1(m as usize))?.is_one())
}

/// Closed-form coefficient-set families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// `{2,3}`, `m ≥ 7`.
    Prop1_1,
    /// `{2i+1 | 0≤i≤t}`, `t < (m+1)/4`.
    Prop1_2,
    /// `{1} ∪ {2i | 1≤i≤t}`, `t < (m+3)/4`.
    Prop1_3,
    /// `{i | 1≤i≤t}`, `t < m/2`.
    Prop1_4,
    /// `{2,5,6}`, `m ≥ 13`.
    Prop1_5,
    /// `{1,4,5}`, `m ≥ 11`.
    Prop1_6,
    /// `{3,5,6}`, `m ≥ 13`.
    Prop1_7,
    /// `{t−s, s, t, t+s}`, `s < t < ⌊(m−1)/2⌋`.
    Prop2,
    /// `{1,3,4,5}`, `m ≥ 11`.
    Prop3,
    /// `{1,2,5,6}`, `m ≥ 13`.
    Prop4,
    /// `{2,3,6}`, `m ≥ 13`.
    Prop5,
    /// `{2,3,4,7}`, `m ≥ 15`.
    Prop6,
    /// `{1,2,3,7}`, `m ≥ 15`.
    Prop7,
    /// `{1,3,5,6,8}`, `m ≥ 17`.
    Prop8,
    /// `{2i+1 | 1≤i≤t} ∪ {2t+2}`, `t < (m−3)/4`.
    Prop9,
    /// `{1, 2t+1} ∪ {2i | 2≤i≤t}`, `t < (m−1)/4`.
    Prop10,
}

impl FamilyId {
    pub const ALL: [FamilyId; 16] = [
        FamilyId::Prop1_1,
        FamilyId::Prop1_2,
        FamilyId::Prop1_3,
        FamilyId::Prop1_4,
        FamilyId::Prop1_5,
        FamilyId::Prop1_6,
        FamilyId::Prop1_7,
        FamilyId::Prop2,
        FamilyId::Prop3,
        FamilyId::Prop4,
        FamilyId::Prop5,
        FamilyId::Prop6,
        FamilyId::Prop7,
        FamilyId::Prop8,
        FamilyId::Prop9,
        FamilyId::Prop10,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Prop1_1 => "PROP1_1",
            FamilyId::Prop1_2 => "PROP1_2",
            FamilyId::Prop1_3 => "PROP1_3",
            FamilyId::Prop1_4 => "PROP1_4",
            FamilyId::Prop1_5 => "PROP1_5",
            FamilyId::Prop1_6 => "PROP1_6",
            FamilyId::Prop1_7 => "PROP1_7",
            FamilyId::Prop2 => "PROP2",
            FamilyId::Prop3 => "PROP3",
            FamilyId::Prop4 => "PROP4",
            FamilyId::Prop5 => "PROP5",
            FamilyId::Prop6 => "PROP6",
            FamilyId::Prop7 => "PROP7",
            FamilyId::Prop8 => "PROP8",
            FamilyId::Prop9 => "PROP9",
            FamilyId::Prop10 => "PROP10",
        }
    }

    pub fn uses_t(self) -> bool {
        matches!(
            self,
            FamilyId::Prop1_2
                | FamilyId::Prop1_3
                | FamilyId::Prop1_4
                | FamilyId::Prop2
                | FamilyId::Prop9
                | FamilyId::Prop10
        )
    }

    pub fn uses_s(self) -> bool {
        self == FamilyId::Prop2
    }

    /// Lower bound on `m` for the fixed-set families.
    fn min_m(self) -> u32 {
        match self {
            FamilyId::Prop1_1 => 7,
            FamilyId::Prop1_6 | FamilyId::Prop3 => 11,
            FamilyId::Prop1_5 | FamilyId::Prop1_7 | FamilyId::Prop4 | FamilyId::Prop5 => 13,
            FamilyId::Prop6 | FamilyId::Prop7 => 15,
            FamilyId::Prop8 => 17,
            _ => 1,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or(Error::InvalidParams("unknown family"))
    }
}

/// A family together with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    pub family: FamilyId,
    pub m: u32,
    pub k: u32,
    pub t: Option<u32>,
    pub s: Option<u32>,
}

/// `(d, stride)` stands for `gcd(m, d·stride) = gcd(m, stride)` as a
/// condition and for `Σ_{j<d} x^{j·stride}` as a factor.
type Term = (u64, u64);

impl FamilySpec {
    pub fn new(family: FamilyId, m: u32, k: u32, t: Option<u32>, s: Option<u32>) -> Self {
        FamilySpec { family, m, k, t, s }
    }

    fn t(&self) -> Result<u32> {
        match self.t {
            Some(t) if t >= 1 => Ok(t),
            Some(_) => Err(Error::ParameterOutOfRange("t must be positive")),
            None => Err(Error::InvalidParams("family requires t")),
        }
    }

    fn s(&self) -> Result<u32> {
        match self.s {
            Some(s) if s >= 1 => Ok(s),
            Some(_) => Err(Error::ParameterOutOfRange("s must be positive")),
            None => Err(Error::InvalidParams("family requires s")),
        }
    }

    /// Checks the stated parameter ranges and the index range of the set;
    /// returns the raw index list, possibly with repeats.
    fn raw_indices(&self) -> Result<Vec<u32>> {
        use FamilyId::*;
        let (m, f) = (self.m, self.family);
        if m == 0 || m > MAX_MK || self.k == 0 || self.k > MAX_MK {
            return Err(Error::ParameterOutOfRange("m and k must be in 1..=2^31"));
        }
        if !f.uses_t() && self.t.is_some() || !f.uses_s() && self.s.is_some() {
            return Err(Error::InvalidParams("parameter not used by this family"));
        }
        if m < f.min_m() {
            return Err(Error::ParameterOutOfRange("m below the family's lower bound"));
        }
        let m64 = m as u64;
        let raw: Vec<u32> = match f {
            Prop1_1 => [2, 3].into(),
            Prop1_5 => [2, 5, 6].into(),
            Prop1_6 => [1, 4, 5].into(),
            Prop1_7 => [3, 5, 6].into(),
            Prop3 => [1, 3, 4, 5].into(),
            Prop4 => [1, 2, 5, 6].into(),
            Prop5 => [2, 3, 6].into(),
            Prop6 => [2, 3, 4, 7].into(),
            Prop7 => [1, 2, 3, 7].into(),
            Prop8 => [1, 3, 5, 6, 8].into(),
            Prop1_2 => {
                let t = self.t()?;
                if 4 * t as u64 > m64 {
                    return Err(Error::ParameterOutOfRange("t < (m+1)/4 required"));
                }
                (0..=t).map(|i| 2 * i + 1).collect()
            }
            Prop1_3 => {
                let t = self.t()?;
                if 4 * t as u64 >= m64 + 3 {
                    return Err(Error::ParameterOutOfRange("t < (m+3)/4 required"));
                }
                core::iter::once(1).chain((1..=t).map(|i| 2 * i)).collect()
            }
            Prop1_4 => {
                let t = self.t()?;
                if 2 * t as u64 >= m64 {
                    return Err(Error::ParameterOutOfRange("t < m/2 required"));
                }
                (1..=t).collect()
            }
            Prop2 => {
                let (t, s) = (self.t()?, self.s()?);
                if !(s < t && t < (m - 1) / 2) {
                    return Err(Error::ParameterOutOfRange("s < t < floor((m-1)/2) required"));
                }
                [t - s, s, t, t + s].into()
            }
            Prop9 => {
                let t = self.t()?;
                if 4 * t as u64 + 3 >= m64 {
                    return Err(Error::ParameterOutOfRange("t < (m-3)/4 required"));
                }
                (1..=t).map(|i| 2 * i + 1).chain([2 * t + 2]).collect()
            }
            Prop10 => {
                let t = self.t()?;
                if 4 * t as u64 + 1 >= m64 {
                    return Err(Error::ParameterOutOfRange("t < (m-1)/4 required"));
                }
                [1, 2 * t + 1].into_iter().chain((2..=t).map(|i| 2 * i)).collect()
            }
        };
        let max = CoeffSet::max_index(m);
        if let Some(&index) = raw.iter().find(|&&i| i == 0 || i > max) {
            return Err(Error::IndexOutOfRange { index, max });
        }
        Ok(raw)
    }

    /// Conditions and factors of the family, with strides already scaled by
    /// `k`. The factor product equals `x^{k·max(C)}·c(x^k)` mod `x^m − 1`.
    fn terms(&self) -> Result<(Vec<Term>, Vec<Term>)> {
        use FamilyId::*;
        self.coeff_set()?;
        let k = self.k as u64;
        let t = self.t.unwrap_or(0) as u64;
        let g = |d: u64| (d, k);
        Ok(match self.family {
            Prop1_1 => ([g(3)].into(), [g(3), g(3), g(3)].into()),
            Prop1_2 => ([g(2 * t + 3), g(2 * t + 1)].into(), [g(2 * t + 1), g(2 * t + 3)].into()),
            Prop1_3 => ([g(2 * t + 3), g(2 * t - 1)].into(), [g(2 * t - 1), g(2 * t + 3)].into()),
            Prop1_4 => ([g(2 * t + 1)].into(), [g(2 * t + 1)].into()),
            Prop1_5 => ([g(5)].into(), [g(5), g(5), g(5)].into()),
            Prop1_6 => ([g(3), g(7)].into(), [g(3), g(3), g(7)].into()),
            Prop1_7 => ([g(3), g(5), g(7)].into(), [g(3), g(5), g(7)].into()),
            Prop2 => {
                let s = self.s.unwrap_or(0) as u64;
                ([(3, t * k), (3, s * k)].into(), [(3, t * k), (3, s * k)].into())
            }
            Prop3 => ([g(3)].into(), [g(3); 5].into()),
            Prop4 => ([g(3)].into(), [(3, 3 * k), g(3), g(3), g(3)].into()),
            Prop5 => ([g(3), g(7)].into(), [g(3), g(3), g(3), g(7)].into()),
            Prop6 => ([g(3), g(5)].into(), [g(3), g(5), g(5), g(5)].into()),
            Prop7 => ([g(3), g(5), g(7)].into(), [g(3), g(3), g(5), g(7)].into()),
            Prop8 => ([g(3), g(7)].into(), [g(3), g(3), g(3), g(3), g(3), g(7)].into()),
            Prop9 => (
                [g(2 * t + 3), g(2 * t + 1), g(3)].into(),
                [g(3), g(2 * t + 1), g(2 * t + 3)].into(),
            ),
            Prop10 => (
                [g(2 * t + 3), g(2 * t - 1), g(3)].into(),
                [g(3), g(2 * t - 1), g(2 * t + 3)].into(),
            ),
        })
    }

    /// The family's coefficient set. Parameters outside the stated ranges,
    /// indices outside `[1, ⌊(m−1)/2⌋]` and coinciding indices are errors.
    pub fn coeff_set(&self) -> Result<CoeffSet> {
        let raw = self.raw_indices()?;
        let set = CoeffSet::new(raw.iter().copied());
        if set.len() != raw.len() {
            let mut sorted = raw;
            sorted.sort_unstable();
            let index = sorted.windows(2).find(|w| w[0] == w[1]).map_or(0, |w| w[0]);
            return Err(Error::IndexCollision { index });
        }
        Ok(set)
    }

    /// The family's integer-gcd condition.
    pub fn predicate(&self) -> Result<bool> {
        let m = self.m as u64;
        let (conds, _) = self.terms()?;
        Ok(conds.iter().all(|&(d, stride)| gcd_u64(m, d * stride) == gcd_u64(m, stride)))
    }

    /// Checks `x^{k·max(C)}·c(x^k) ≡ Π factors (mod x^m − 1)`.
    pub fn verify_factorization(&self) -> Result<bool> {
        check_m(self.m)?;
        let (_, factors) = self.terms()?;
        let set = self.coeff_set()?;
        let m = self.m as u64;
        let modulus = BitPoly::x_m_minus_1(self.m as usize);
        let c = compose_mod(&c_from_set(&set, self.m)?, self.k as u64, m);
        let shift = self.k as u64 % m * CoeffSet::max(&set).unwrap_or(0) as u64 % m;
        let lhs = compose_mod(&c.mul(&BitPoly::monomial(shift as usize)), 1, m);
        let mut rhs = BitPoly::one();
        for &(d, stride) in &factors {
            let geo = BitPoly::from_exponents((0..d).map(|j| (j * (stride % m) % m) as usize));
            rhs = compose_mod(&rhs.mul(&geo), 1, m);
        }
        Ok(lhs == rhs.rem(&modulus)?)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        if let Some(t) = self.t {
            write!(f, "(t={t}")?;
            if let Some(s) = self.s {
                write!(f, ",s={s}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

pub fn family_coeff_set(spec: &FamilySpec) -> Result<CoeffSet> {
    spec.coeff_set()
}

pub fn family_predicate(spec: &FamilySpec) -> Result<bool> {
    spec.predicate()
}

pub fn verify_factorization(spec: &FamilySpec) -> Result<bool> {
    spec.verify_factorization()
}

/// Every admissible spec for `(m, k)`, in family order then by `t`, `s`.
pub fn admissible_specs(m: u32, k: u32) -> Vec<FamilySpec> {
    let h = CoeffSet::max_index(m);
    let mut out = Vec::new();
    for family in FamilyId::ALL {
        let candidates: Vec<FamilySpec> = if family.uses_s() {
            (2..=h)
                .flat_map(|t| (1..t).map(move |s| (t, s)))
                .map(|(t, s)| FamilySpec::new(family, m, k, Some(t), Some(s)))
                .collect()
        } else if family.uses_t() {
            (1..=h.max(1)).map(|t| FamilySpec::new(family, m, k, Some(t), None)).collect()
        } else {
            [FamilySpec::new(family, m, k, None, None)].into()
        };
        out.extend(candidates.into_iter().filter(|s| s.coeff_set().is_ok()));
    }
    out
}

/// Admissible specs for `(m, k)` whose coefficient set is exactly `coeffs`.
pub fn matched_families(coeffs: &CoeffSet, m: u32, k: u32) -> Vec<FamilySpec> {
    admissible_specs(m, k)
        .into_iter()
        .filter(|s| s.coeff_set().as_ref() == Ok(coeffs))
        .collect()
}

/// All `2^{⌊(m−1)/2⌋}` candidate sets, ordered by cardinality then
/// lexicographically.
pub fn candidate_sets(m: u32) -> Result<Vec<CoeffSet>> {
    let bits = CoeffSet::max_index(m);
    if bits > MAX_SEARCH_BITS {
        return Err(Error::SearchCapExceeded { bits, cap: MAX_SEARCH_BITS });
    }
    let mut sets: Vec<CoeffSet> = (0..1u32 << bits).map(CoeffSet::from_mask).collect();
    sets.sort();
    Ok(sets)
}

/// Every QBF-set with respect to `(m, k)`, ordered as in [`candidate_sets`].
pub fn enumerate_all(m: u32, k: u32) -> Result<Vec<CoeffSet>> {
    let mut out = Vec::new();
    for c in candidate_sets(m)? {
        if is_qbf_set(&c, m, k)? {
            out.push(c);
        }
    }
    Ok(out)
}
