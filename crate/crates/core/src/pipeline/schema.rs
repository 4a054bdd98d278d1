use super::PipelineError;
use crate::constructions::SurfacePair;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::BTreeMap;
use std::path::Path;

/// Version string every construction file must carry.
pub const FILE_SCHEMA: &str = "fibra-construction/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FileKind {
    /// Full pipeline on a double-cover surface, then the Standard 3-fold.
    Standard,
    /// The Variant 3-fold over the pair verified by a sibling file.
    Variant,
    /// The Standard 3-fold over a pair quoted from the literature.
    Literature,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstructionFile {
    pub schema: String,
    pub id: String,
    pub example: String,
    pub kind: FileKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub surface: Option<SurfaceSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sibling: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<SurfacePair>,
    /// Expected values keyed by report key.
    pub expected: BTreeMap<String, Value>,
    /// Claims echoed into the report without verification.
    #[serde(default)]
    pub assertions: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BaseName {
    P2,
    P1xP1,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceSpec {
    /// Minimal polynomial of `t`, constant term first; `[0, 1]` is ℚ.
    #[serde(default = "rational_field")]
    pub field: Vec<i64>,
    pub base: BaseName,
    /// Single-letter parameters, each a constant expression.
    #[serde(default)]
    pub params: BTreeMap<String, String>,
    pub curves: Vec<CurveSpec>,
    /// Names of the reduced branch components.
    pub branch: Vec<String>,
    pub delta: String,
    pub points: Vec<PointSpec>,
    /// `L` with `σ*H = θ*L`.
    pub fibration: String,
    /// The moving class `M` with `θ*M` the moving part of `|σ*(K_S+H)|`.
    pub moving: String,
    #[serde(default)]
    pub identities: Vec<IdentitySpec>,
}

fn rational_field() -> Vec<i64> {
    vec![0, 1]
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Degree {
    Plane(u32),
    Bi([u32; 2]),
}

impl Degree {
    pub fn pair(&self) -> (u32, u32) {
        match *self {
            Degree::Plane(d) => (d, 0),
            Degree::Bi([a, b]) => (a, b),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub coeff: String,
    pub curve: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CurveBody {
    Equation {
        expr: String,
        degree: Degree,
    },
    /// Product of earlier curves; names may repeat.
    Product {
        product: Vec<String>,
    },
    /// Linear combination of earlier curves of equal degree.
    Combination {
        combination: Vec<Term>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveSpec {
    pub name: String,
    #[serde(flatten)]
    pub body: CurveBody,
}

/// One coordinate: an affine value (`"inf"` allowed on ℙ¹×ℙ¹) or a
/// homogeneous pair `[u₀, u₁]` with `x = u₁/u₀`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coord {
    Affine(String),
    Homogeneous([String; 2]),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointSpec {
    pub label: String,
    /// Two coordinates, or three homogeneous ones on ℙ².
    pub coords: Vec<Coord>,
    /// Representative of its full Galois orbit over ℚ.
    #[serde(default)]
    pub galois: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<PointExpect>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointExpect {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<u32>,
    #[serde(default, rename = "type", skip_serializing_if = "Option::is_none")]
    pub sing_type: Option<String>,
    /// Multiplicity of each component through the point.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<BTreeMap<String, u32>>,
    /// `⌊m/2⌋` of each resolution step at the point, in log order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub resolution: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdentitySpec {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
}

impl ConstructionFile {
    pub fn from_json(text: &str) -> Result<ConstructionFile, PipelineError> {
        let file: ConstructionFile = serde_json::from_str(text).map_err(|e| PipelineError::Json(e.to_string()))?;
        file.validate()?;
        Ok(file)
    }

    pub fn load(path: &Path) -> Result<ConstructionFile, PipelineError> {
        let text = std::fs::read_to_string(path).map_err(|e| PipelineError::Io { path: path.display().to_string(), msg: e.to_string() })?;
        ConstructionFile::from_json(&text)
    }

    fn validate(&self) -> Result<(), PipelineError> {
        if self.schema != FILE_SCHEMA {
            return Err(PipelineError::SchemaVersion(self.schema.clone()));
        }
        let need = |ok: bool, what: &str| if ok { Ok(()) } else { Err(PipelineError::Invalid(format!("{}: {what}", self.id))) };
        match self.kind {
            FileKind::Standard => need(self.surface.is_some(), "a standard file needs `surface`"),
            FileKind::Variant => need(self.sibling.is_some() && self.nu.is_some(), "a variant file needs `sibling` and `nu`"),
            FileKind::Literature => need(self.pair.is_some(), "a literature file needs `pair`"),
        }
    }
}
