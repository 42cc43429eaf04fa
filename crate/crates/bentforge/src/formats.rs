//! Serialized forms: function tables, spectrum dumps, histograms, verdicts
//! and enumeration rows.

use std::collections::BTreeMap;

use bentforge_core::qbf::FamilySpec;
use bentforge_core::{BinaryFn, BitPoly, CoeffSet, Params, QuaternaryFn, Spectrum, Verdict};
use serde::{Deserialize, Serialize};

/// `{n, values}` with one entry per field element (or per input vector for
/// Gray images, where `n` counts variables).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionTable {
    pub n: u32,
    pub values: Vec<u8>,
}

impl From<&QuaternaryFn> for FunctionTable {
    fn from(f: &QuaternaryFn) -> Self {
        FunctionTable { n: f.n(), values: f.values().to_vec() }
    }
}

impl From<&BinaryFn> for FunctionTable {
    fn from(g: &BinaryFn) -> Self {
        FunctionTable { n: g.vars(), values: g.values().to_vec() }
    }
}

impl FunctionTable {
    pub fn to_quaternary(&self) -> bentforge_core::Result<QuaternaryFn> {
        QuaternaryFn::new(self.n, self.values.clone())
    }

    pub fn to_binary(&self) -> bentforge_core::Result<BinaryFn> {
        BinaryFn::new(self.n, self.values.clone())
    }
}

/// `[[re, im], ...]` in field-element order.
pub fn spectrum_pairs(s: &Spectrum) -> Vec<[i64; 2]> {
    s.entries().iter().map(|z| [z.re, z.im]).collect()
}

/// Squared-magnitude histogram as `{value: count}`.
pub fn histogram_map(hist: &BTreeMap<u64, u64>) -> BTreeMap<String, u64> {
    hist.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsJson {
    pub n: u32,
    pub e: u32,
    pub m: u32,
    pub k: u32,
    pub coeffs: Vec<u32>,
    pub alpha_exp: u32,
}

impl From<&Params> for ParamsJson {
    fn from(p: &Params) -> Self {
        ParamsJson {
            n: p.n(),
            e: p.e(),
            m: p.m(),
            k: p.k(),
            coeffs: p.coeffs().indices().to_vec(),
            alpha_exp: p.alpha_exp(),
        }
    }
}

impl ParamsJson {
    pub fn to_params(&self) -> bentforge_core::Result<Params> {
        let p = Params::new(self.n, self.e, self.k, CoeffSet::new(self.coeffs.iter().copied()), self.alpha_exp)?;
        if p.m() != self.m {
            return Err(bentforge_core::Error::InvalidParams("m must equal n / e"));
        }
        Ok(p)
    }
}

/// Verdict schema. Fields that were not computed serialize as `null`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub params: ParamsJson,
    pub gcd_ok: Option<bool>,
    pub rank_full: Option<bool>,
    pub spectrum_bent: Option<bool>,
    pub fq_class: Option<String>,
    pub gray_class: Option<String>,
    pub consistent: bool,
}

impl From<&Verdict> for VerdictJson {
    fn from(v: &Verdict) -> Self {
        VerdictJson {
            params: ParamsJson::from(&v.params),
            gcd_ok: v.gcd_ok,
            rank_full: v.rank_full,
            spectrum_bent: v.spectrum_bent,
            fq_class: v.fq_class.map(|c| c.as_str().to_owned()),
            gray_class: v.gray_class.map(|c| c.as_str().to_owned()),
            consistent: v.consistent,
        }
    }
}

/// Spectral report for `β ≠ α²`, kept apart from verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentalJson {
    pub experimental: bool,
    pub params: ParamsJson,
    pub beta_exp: u32,
    pub spectrum_bent: bool,
    pub histogram: BTreeMap<String, u64>,
}

/// One enumeration row. Column order is fixed by field order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumRow {
    pub m: u32,
    pub k: u32,
    pub set: String,
    pub c_poly_hex: String,
    pub is_qbf: u8,
    pub matched_families: String,
}

/// Row emitted with `--family`: the family's predicate next to the gcd
/// verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub m: u32,
    pub k: u32,
    pub set: String,
    pub c_poly_hex: String,
    pub is_qbf: u8,
    pub matched_families: String,
    pub family: String,
    pub predicted: u8,
    pub agreement: u8,
}

pub fn family_list(specs: &[FamilySpec]) -> String {
    specs.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(";")
}

pub fn enum_row(set: &CoeffSet, m: u32, k: u32, c: &BitPoly, is_qbf: bool, matched: &[FamilySpec]) -> EnumRow {
    EnumRow {
        m,
        k,
        set: set.to_string(),
        c_poly_hex: c.to_hex(),
        is_qbf: is_qbf as u8,
        matched_families: family_list(matched),
    }
}

/// Writes rows as CSV with a header line.
pub fn write_csv<T: Serialize>(out: impl std::io::Write, rows: &[T]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}
