//! The Standard construction `X → S × C₀` and its Variant over a curve of
//! genus ν, together with the genus-2 pencil checks on the input surface.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("H has genus {0}, expected 2")]
    NotGenusTwoFiber(i64),
    #[error("h0(K_S + H) evaluates to {0}, expected 2")]
    PencilDimensionMismatch(i64),
    #[error("pencil data (g(C^), d) missing")]
    MissingPencil,
    #[error("the variant needs nu >= 3, got {0}")]
    NuTooSmall(u64),
    #[error("the construction needs p_g(S) = 0, got {0}")]
    NonzeroGeometricGenus(u64),
    #[error("report lacks {0}")]
    IncompleteReport(String),
}

/// A surface `S` with a genus-2 fibre class `H` and the pencil `|Ĉ|` of
/// `|K_S + H|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfacePair {
    #[serde(rename = "K2_S")]
    pub k2_s: i64,
    #[serde(rename = "chi_S")]
    pub chi_s: i64,
    #[serde(rename = "pg_S")]
    pub pg_s: u64,
    #[serde(rename = "q_S")]
    pub q_s: u64,
    #[serde(rename = "H2")]
    pub h2: i64,
    #[serde(rename = "KH")]
    pub kh: i64,
    #[serde(rename = "g_H")]
    pub g_h: i64,
    #[serde(rename = "g_C_hat")]
    pub g_c_hat: Option<u64>,
    pub d: Option<u64>,
    pub provenance: String,
}

impl SurfacePair {
    /// `(K_S + H)²`
    pub fn k_plus_h_sq(&self) -> i64 {
        self.k2_s + 2 * self.kh + self.h2
    }

    fn pencil(&self) -> Result<(u64, u64), ConstructionError> {
        match (self.g_c_hat, self.d) {
            (Some(g), Some(d)) => Ok((g, d)),
            _ => Err(ConstructionError::MissingPencil),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaRecord {
    pub g_h: i64,
    pub h0_k_plus_h: i64,
    /// `Ĉ·H = 2`, the conclusion of the lemma.
    pub d_expected: u64,
    pub d_matches: Option<bool>,
    /// `K_S² ≥ 2` forces `g(Ĉ) ≥ 3`.
    pub requires_g_c_hat_ge_3: bool,
    pub g_c_hat_ok: Option<bool>,
}

/// `h⁰(K_S+H) = ½(K_S+H)·H + χ(O_S)` must equal `g(H) = 2`.
pub fn check_lemma_5_3(pair: &SurfacePair) -> Result<LemmaRecord, ConstructionError> {
    let g_h = (pair.h2 + pair.kh) / 2 + 1;
    if g_h != 2 || pair.g_h != 2 {
        return Err(ConstructionError::NotGenusTwoFiber(if g_h != 2 { g_h } else { pair.g_h }));
    }
    let h0 = (pair.kh + pair.h2) / 2 + pair.chi_s;
    if h0 != 2 {
        return Err(ConstructionError::PencilDimensionMismatch(h0));
    }
    let requires = pair.k2_s >= 2;
    Ok(LemmaRecord {
        g_h,
        h0_k_plus_h: h0,
        d_expected: 2,
        d_matches: pair.d.map(|d| d == 2),
        requires_g_c_hat_ge_3: requires,
        g_c_hat_ok: pair.g_c_hat.map(|g| !requires || g >= 3),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum ThreefoldKind {
    Standard,
    Variant { nu: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreefoldReport {
    pub kind: ThreefoldKind,
    pub pg_f: Option<u64>,
    pub g_f: Option<u64>,
    pub pg_x: u64,
    #[serde(rename = "K3_X")]
    pub k3_x: Option<i64>,
    /// Künneth cross-check, not part of the original construction.
    pub chi_omega_x: Option<i64>,
}

/// `χ(O_S(−H)) = χ(O_S) + ½(H² + K·H)`.
fn chi_minus_h(pair: &SurfacePair) -> i64 {
    pair.chi_s + (pair.h2 + pair.kh) / 2
}

/// `X` is the double cover of `S × C₀` (`g(C₀) = 2`) with
/// `δ = p₁*H + p₂*θ`, `θ` a nonzero 2-torsion class.
pub fn standard_construction(pair: &SurfacePair) -> Result<ThreefoldReport, ConstructionError> {
    if pair.pg_s != 0 {
        return Err(ConstructionError::NonzeroGeometricGenus(pair.pg_s));
    }
    let (g, d) = pair.pencil()?;
    let pg_f = if d == 0 { 3 * g } else { 3 * g + d - 1 };
    let h0_k_plus_h = (pair.kh + pair.h2) / 2 + pair.chi_s;
    let pg_x = h0_k_plus_h.max(0) as u64 * h0_canonical_twist(2);
    // 2·3·(K_S+H)²·deg(K_C0+θ)
    let k3 = 2 * 3 * pair.k_plus_h_sq() * 2;
    // χ(O_X) = χ(O_S)χ(O_C0) + χ(O_S(−H))χ(O_C0(−θ)), both curve terms 1 − g(C₀) = −1
    let chi_o = -pair.chi_s - chi_minus_h(pair);
    Ok(ThreefoldReport { kind: ThreefoldKind::Standard, pg_f: Some(pg_f), g_f: None, pg_x, k3_x: Some(k3), chi_omega_x: Some(-chi_o) })
}

/// `h⁰(K_C + θ)` on a curve of genus `g` with `θ` a nonzero 2-torsion
/// class: Riemann–Roch with `h¹ = h⁰(−θ) = 0`.
pub fn h0_canonical_twist(g: u64) -> u64 {
    g.saturating_sub(1)
}

/// The same cover with `C₀` replaced by a curve `C_ν` of genus `ν ≥ 3`.
pub fn variant_construction(pair: &SurfacePair, nu: u64) -> Result<ThreefoldReport, ConstructionError> {
    if nu < 3 {
        return Err(ConstructionError::NuTooSmall(nu));
    }
    let (g, d) = pair.pencil()?;
    let h0_k_plus_h = ((pair.kh + pair.h2) / 2 + pair.chi_s).max(0) as u64;
    Ok(ThreefoldReport {
        kind: ThreefoldKind::Variant { nu },
        pg_f: None,
        g_f: Some(2 * g + d - 1),
        pg_x: h0_k_plus_h * h0_canonical_twist(nu),
        k3_x: None,
        chi_omega_x: None,
    })
}

/// Builds a pair from the computed values of a verification report.
pub fn assemble_surface_pair(computed: &BTreeMap<String, serde_json::Value>, provenance: &str) -> Result<SurfacePair, ConstructionError> {
    let int = |k: &str| computed.get(k).and_then(|v| v.as_i64()).ok_or_else(|| ConstructionError::IncompleteReport(k.to_string()));
    let nat = |k: &str| computed.get(k).and_then(|v| v.as_u64()).ok_or_else(|| ConstructionError::IncompleteReport(k.to_string()));
    Ok(SurfacePair {
        k2_s: int("K2_S")?,
        chi_s: int("chi_S")?,
        pg_s: nat("pg_S")?,
        q_s: nat("q_S")?,
        h2: int("H2")?,
        kh: int("KH")?,
        g_h: int("g_H")?,
        g_c_hat: Some(nat("g_C_hat")?),
        d: Some(nat("d")?),
        provenance: provenance.to_string(),
    })
}
