use super::ArrangementError;
use crate::algebra::{Base, Fe, Field};
use std::fmt;

/// A tangent direction at a point, in the local affine coordinates of the
/// point's canonical chart: `Slope(λ)` is the line `y = λx`, `Vertical` is
/// `x = 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dir {
    Slope(Fe),
    Vertical,
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dir::Slope(l) => write!(f, "(1:{l})"),
            Dir::Vertical => write!(f, "(0:1)"),
        }
    }
}

/// A point of ℙ² or ℙ¹×ℙ¹, possibly infinitely near.
///
/// Coordinates are `[X, Y, Z]` or `[u₀, u₁, v₀, v₁]`, scaled so the first
/// nonzero entry (per factor) is 1. `path` lists the tangent directions
/// followed from the root; its length is the level. A `galois` point stands
/// for all of its conjugates over ℚ.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SurfPoint {
    base: Base,
    coords: Vec<Fe>,
    path: Vec<Dir>,
    galois: bool,
}

fn normalize(v: &[Fe]) -> Option<Vec<Fe>> {
    let lead = v.iter().find(|c| !c.is_zero())?;
    let inv = lead.inv().ok()?;
    Some(v.iter().map(|c| c * &inv).collect())
}

impl SurfPoint {
    /// Projective point `(X:Y:Z)` of ℙ².
    pub fn p2(c: [Fe; 3]) -> Result<SurfPoint, ArrangementError> {
        let coords = normalize(&c).ok_or_else(|| ArrangementError::InvalidPoint("all coordinates zero".into()))?;
        Ok(SurfPoint { base: Base::P2, coords, path: Vec::new(), galois: false })
    }

    /// Affine point `(x, y)` of ℙ², i.e. `(x:y:1)`.
    pub fn p2_affine(x: Fe, y: Fe) -> SurfPoint {
        let one = Fe::one(x.field());
        SurfPoint::p2([x, y, one]).expect("Z = 1")
    }

    /// Point `((u₀:u₁), (v₀:v₁))` of ℙ¹×ℙ¹.
    pub fn p1p1(u: [Fe; 2], v: [Fe; 2]) -> Result<SurfPoint, ArrangementError> {
        let bad = || ArrangementError::InvalidPoint("a factor has both coordinates zero".into());
        let mut coords = normalize(&u).ok_or_else(bad)?;
        coords.extend(normalize(&v).ok_or_else(bad)?);
        Ok(SurfPoint { base: Base::P1xP1, coords, path: Vec::new(), galois: false })
    }

    /// Point of ℙ¹×ℙ¹ from affine values, `None` meaning ∞ (= (0:1)).
    pub fn p1p1_affine(field: &Field, x: Option<Fe>, y: Option<Fe>) -> SurfPoint {
        let pair = |a: Option<Fe>| match a {
            Some(a) => [Fe::one(field), a],
            None => [Fe::zero(field), Fe::one(field)],
        };
        SurfPoint::p1p1(pair(x), pair(y)).expect("normalised")
    }

    pub fn infinitely_near(&self, dir: Dir) -> SurfPoint {
        let mut p = self.clone();
        p.path.push(dir);
        p
    }

    /// Marks the point as the representative of its Galois orbit.
    pub fn with_galois(mut self, galois: bool) -> SurfPoint {
        self.galois = galois;
        self
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn coords(&self) -> &[Fe] {
        &self.coords
    }

    pub fn field(&self) -> &Field {
        self.coords[0].field()
    }

    pub fn path(&self) -> &[Dir] {
        &self.path
    }

    pub fn level(&self) -> usize {
        self.path.len()
    }

    pub fn is_galois(&self) -> bool {
        self.galois
    }

    pub fn parent(&self) -> Option<SurfPoint> {
        if self.path.is_empty() {
            return None;
        }
        let mut p = self.clone();
        p.path.pop();
        Some(p)
    }

    pub fn root(&self) -> SurfPoint {
        let mut p = self.clone();
        p.path.clear();
        p
    }

    /// Affine coordinates in chart `c` (see [`crate::algebra::Form::chart`]),
    /// or `None` if the point lies off that chart.
    pub fn affine_in_chart(&self, c: usize) -> Option<(Fe, Fe)> {
        let k = &self.coords;
        match self.base {
            Base::P2 => {
                let (num1, num2, den) = match c {
                    0 => (&k[0], &k[1], &k[2]),
                    1 => (&k[0], &k[2], &k[1]),
                    _ => (&k[1], &k[2], &k[0]),
                };
                let inv = den.inv().ok()?;
                Some((num1 * &inv, num2 * &inv))
            }
            Base::P1xP1 => {
                let ratio = |a: &Fe, b: &Fe| -> Option<Fe> { Some(b * &a.inv().ok()?) };
                let x = if c & 1 == 0 { ratio(&k[0], &k[1])? } else { ratio(&k[1], &k[0])? };
                let y = if c & 2 == 0 { ratio(&k[2], &k[3])? } else { ratio(&k[3], &k[2])? };
                Some((x, y))
            }
        }
    }

    /// First chart containing the root point.
    pub fn canonical_chart(&self) -> usize {
        (0..self.base.num_charts()).find(|&c| self.affine_in_chart(c).is_some()).expect("some chart contains the point")
    }

    pub fn local_coords(&self) -> (Fe, Fe) {
        self.affine_in_chart(self.canonical_chart()).expect("canonical chart")
    }

    /// Number of geometric points represented: 1, or the degree over ℚ of
    /// the field generated by the coordinates for a Galois representative.
    pub fn orbit_size(&self) -> usize {
        if !self.galois {
            return 1;
        }
        let (a, b) = self.local_coords();
        let mut gens = vec![a, b];
        for d in &self.path {
            if let Dir::Slope(l) = d {
                gens.push(l.clone());
            }
        }
        Fe::generated_degree(self.field(), &gens)
    }

    /// Whether `other` could be a ℚ-conjugate of `self` (or equal to it).
    /// A `false` answer is certain; it compares minimal polynomials of a few
    /// linear forms in the coordinates.
    pub fn may_be_conjugate(&self, other: &SurfPoint) -> bool {
        if self.base != other.base || self.path.len() != other.path.len() {
            return false;
        }
        if self == other {
            return true;
        }
        if !self.galois && !other.galois {
            return false;
        }
        let c = self.canonical_chart();
        let (Some((a1, b1)), Some((a2, b2))) = (self.affine_in_chart(c), other.affine_in_chart(c)) else {
            return false;
        };
        (0..4).all(|k| {
            let kf = Fe::from_int(self.field(), k);
            let l1 = &a1 + &(&kf * &b1);
            let l2 = &a2 + &(&kf * &b2);
            l2.eval_rational_poly(&l1.minpoly()).is_zero()
        })
    }
}

impl fmt::Display for SurfPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = &self.coords;
        match self.base {
            Base::P2 => {
                if let Some((x, y)) = self.affine_in_chart(0) {
                    write!(f, "({x}, {y})")?;
                } else {
                    write!(f, "({}:{}:{})", k[0], k[1], k[2])?;
                }
            }
            Base::P1xP1 => {
                let show = |a: &Fe, b: &Fe| if a.is_zero() { "∞".to_string() } else { format!("{}", b) };
                write!(f, "({}, {})", show(&k[0], &k[1]), show(&k[2], &k[3]))?;
            }
        }
        for d in &self.path {
            write!(f, " > {d}")?;
        }
        if self.galois {
            write!(f, " [orbit]")?;
        }
        Ok(())
    }
}
