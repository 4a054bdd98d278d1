use super::local::{blow_up, local_germ, product, Cone};
use super::{Arrangement, ArrangementError, SurfPoint};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SingType {
    Smooth,
    OrdinaryDouble,
    OrdinaryTriple,
    ThreeToThree,
    OrdinaryQuadruple,
    Other(String),
}

impl fmt::Display for SingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingType::Smooth => write!(f, "smooth"),
            SingType::OrdinaryDouble => write!(f, "ordinary double"),
            SingType::OrdinaryTriple => write!(f, "ordinary triple"),
            SingType::ThreeToThree => write!(f, "(3->3)"),
            SingType::OrdinaryQuadruple => write!(f, "ordinary quadruple"),
            SingType::Other(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPointRecord {
    pub point: SurfPoint,
    pub total_mult: u32,
    pub component_mults: BTreeMap<String, u32>,
    pub sing_type: SingType,
    pub tangent_directions: u32,
}

/// Multiplicity, tangent directions and type of the arrangement at a point.
pub fn classify_singularity(arr: &Arrangement, p: &SurfPoint) -> Result<SingularPointRecord, ArrangementError> {
    let field = arr.field();
    let mut germs = Vec::new();
    let mut component_mults = BTreeMap::new();
    let mut total = 0;
    for c in arr.components() {
        let g = local_germ(&c.form, field, p)?;
        let m = g.order().unwrap_or(0);
        if m > 0 {
            component_mults.insert(c.name.clone(), m);
            total += m * c.coeff;
        }
        germs.push((g, c.coeff));
    }
    let germ = product(field, &germs);
    let cone = Cone::of(&germ);
    debug_assert_eq!(cone.mult, total);
    let dirs = cone.distinct_directions();
    let sing_type = match (total, dirs) {
        (0 | 1, _) => SingType::Smooth,
        (2, 2) => SingType::OrdinaryDouble,
        (3, 3) => SingType::OrdinaryTriple,
        (4, 4) => SingType::OrdinaryQuadruple,
        (3, _) => {
            let rep = cone.repeated_directions()?;
            let mut infinitely_near_ordinary_triple = false;
            if rep.len() == 1 {
                let strict = Cone::of(&blow_up(&germ, &rep[0]).0);
                infinitely_near_ordinary_triple = strict.mult == 3 && strict.is_ordinary();
            }
            if infinitely_near_ordinary_triple {
                SingType::ThreeToThree
            } else {
                SingType::Other(format!("triple point with {dirs} tangent directions"))
            }
        }
        (m, d) => SingType::Other(format!("point of multiplicity {m} with {d} tangent directions")),
    };
    Ok(SingularPointRecord { point: p.clone(), total_mult: total, component_mults, sing_type, tangent_directions: dirs })
}

/// True iff after one blow-up at each point the strict transform of the
/// reduced arrangement is smooth along the exceptional line and meets it
/// transversally, i.e. every point is an ordinary singularity.
pub fn strict_transform_smooth_after_blowup(arr: &Arrangement, points: &[SurfPoint]) -> Result<bool, ArrangementError> {
    let field = arr.field();
    for p in points {
        let germs: Vec<_> = arr.components().iter().map(|c| local_germ(&c.form, field, p).map(|g| (g, 1))).collect::<Result<_, _>>()?;
        let cone = Cone::of(&product(field, &germs));
        if cone.mult >= 2 && !cone.is_ordinary() {
            return Ok(false);
        }
    }
    Ok(true)
}
