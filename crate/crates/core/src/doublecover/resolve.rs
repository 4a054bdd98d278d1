use super::CoverError;
use crate::algebra::{Base, Poly2};
use crate::arrangement::local::{blow_up, exceptional_germ, product, root_germ, Cone};
use crate::arrangement::{Arrangement, SurfPoint};
use crate::piclattice::{DivClass, SurfaceLattice};
use serde::{Deserialize, Serialize};

/// Deepest infinitely near level a resolution step may be centred at.
pub const MAX_DEPTH: usize = 2;

/// A component of the (strict) branch divisor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchComponent {
    pub name: String,
    pub class: DivClass,
    /// Number of disjoint geometric pieces (fibres of a fibre union,
    /// conjugate exceptional curves of a Galois orbit).
    pub pieces: u32,
    pub exceptional: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionStep {
    pub label: String,
    pub point: String,
    pub level: usize,
    pub mult: u32,
    /// ⌊m/2⌋, subtracted from δ on each conjugate slot.
    pub k: u32,
    pub slots: usize,
}

/// Double-cover data `(δ, B)` on a blown-up base with `B ∼ 2δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverData {
    pub ambient: SurfaceLattice,
    pub delta: DivClass,
    pub branch_class: DivClass,
    pub components: Vec<BranchComponent>,
    pub log: Vec<ResolutionStep>,
    pub resolved: bool,
}

fn pieces_of(c: &crate::arrangement::Component, arr: &Arrangement) -> u32 {
    if arr.base() != Base::P1xP1 {
        return 1;
    }
    let g = c.form.chart(arr.field(), 0);
    match c.form.degree() {
        (n, 0) if n > 0 && g.deg_y() == Some(0) => n,
        (0, n) if n > 0 && g.deg_x() == Some(0) => n,
        _ => 1,
    }
}

impl CoverData {
    /// Cover data on the unblown base with branch divisor `arr`.
    pub fn new(arr: &Arrangement, delta: DivClass) -> Result<CoverData, CoverError> {
        let ambient = SurfaceLattice::new(arr.base());
        let mut components = Vec::new();
        for c in arr.components() {
            if c.coeff != 1 {
                return Err(CoverError::NotReduced(c.name.clone()));
            }
            components.push(BranchComponent {
                name: c.name.clone(),
                class: ambient.base_class((c.form.degree().0 as i64, c.form.degree().1 as i64)),
                pieces: pieces_of(c, arr),
                exceptional: false,
            });
        }
        let branch_class = components.iter().fold(ambient.zero(), |acc, c| acc.add(&c.class));
        let data = CoverData { ambient, delta, branch_class, components, log: Vec::new(), resolved: false };
        data.check("initial data")?;
        Ok(data)
    }

    fn check(&self, stage: &str) -> Result<(), CoverError> {
        let sum = self.components.iter().fold(self.ambient.zero(), |acc, c| acc.add(&c.class));
        if self.delta.scale(2) != self.branch_class || sum != self.branch_class {
            return Err(CoverError::OddBranchClass(format!(
                "{stage}: 2δ = {}, B = {}",
                self.ambient.display(&self.delta.scale(2)),
                self.ambient.display(&self.branch_class)
            )));
        }
        Ok(())
    }

    /// Canonical class of the current ambient surface.
    pub fn canonical(&self) -> DivClass {
        self.ambient.canonical()
    }

    /// Σ pieces over branch components that are disjoint unions of smooth
    /// rational curves of self-intersection −2 (their reduced preimages are
    /// (−1)-curves).
    pub fn minus_one_curves(&self) -> Result<u32, CoverError> {
        let mut n = 0;
        for c in &self.components {
            let r = c.pieces as i64;
            if self.ambient.self_intersection(&c.class)? == -2 * r && self.ambient.adjunction_genus(&c.class)? == 1 - r {
                n += c.pieces;
            }
        }
        Ok(n)
    }

    /// The component with the given name.
    pub fn component(&self, name: &str) -> Option<&BranchComponent> {
        self.components.iter().find(|c| c.name == name)
    }

    fn blow_up(&mut self, p: &SurfPoint, label: &str, germs: &[(usize, Poly2)], mult: u32) -> Result<Vec<usize>, CoverError> {
        self.ambient = self.ambient.blow_up(p, label)?;
        let lift = |d: &DivClass, lat: &SurfaceLattice| lat.lift(d);
        self.delta = lift(&self.delta, &self.ambient)?;
        self.branch_class = lift(&self.branch_class, &self.ambient)?;
        for c in &mut self.components {
            c.class = lift(&c.class, &self.ambient)?;
        }
        let slots = self.ambient.slot_of(p);
        let k = (mult / 2) as i64;
        for &s in &slots {
            self.delta.exc[s] -= k;
            self.branch_class.exc[s] -= 2 * k;
            for (i, g) in germs {
                self.components[*i].class.exc[s] -= g.order().unwrap_or(0) as i64;
            }
        }
        let mut added = Vec::new();
        if mult % 2 == 1 {
            let mut class = self.ambient.zero();
            for &s in &slots {
                class.exc[s] = 1;
            }
            added.push(self.components.len());
            self.components.push(BranchComponent {
                name: self.ambient.slots()[slots[0]].name().split('#').next().unwrap_or_default().to_string(),
                class,
                pieces: slots.len() as u32,
                exceptional: true,
            });
        }
        self.log.push(ResolutionStep {
            label: label.into(),
            point: p.to_string(),
            level: p.level(),
            mult,
            k: mult / 2,
            slots: slots.len(),
        });
        self.check(&format!("after blowing up {p}"))?;
        Ok(added)
    }

    fn resolve_at(&mut self, p: &SurfPoint, label: &str, germs: Vec<(usize, Poly2)>) -> Result<(), CoverError> {
        let field = p.field().clone();
        let mult: u32 = germs.iter().map(|(_, g)| g.order().unwrap_or(0)).sum();
        if mult <= 1 {
            return Ok(());
        }
        if p.level() > MAX_DEPTH {
            return Err(CoverError::UnresolvableAtDepth(p.to_string()));
        }
        let added = self.blow_up(p, label, &germs, mult)?;
        let cone = Cone::of(&product(&field, &germs.iter().map(|(_, g)| (g.clone(), 1)).collect::<Vec<_>>()));
        let dirs = if mult % 2 == 1 { cone.all_directions()? } else { cone.repeated_directions()? };
        for dir in dirs {
            let child = p.infinitely_near(dir.clone());
            let mut next: Vec<(usize, Poly2)> =
                germs.iter().map(|(i, g)| (*i, blow_up(g, &dir).0)).filter(|(_, g)| g.order().is_some_and(|m| m > 0)).collect();
            for &i in &added {
                next.push((i, exceptional_germ(&field, &dir)));
            }
            self.resolve_at(&child, label, next)?;
        }
        Ok(())
    }
}

/// Even resolution at the given level-0 points, visited in canonical point
/// order.
pub fn even_resolution(cover: CoverData, arr: &Arrangement, points: &[(String, SurfPoint)]) -> Result<CoverData, CoverError> {
    let mut sorted = points.to_vec();
    sorted.sort_by(|a, b| a.1.cmp(&b.1));
    even_resolution_in_order(cover, arr, &sorted)
}

/// Even resolution visiting the points in the order given.
///
/// At a point of multiplicity `m` the base is blown up, `δ ← τ*δ − ⌊m/2⌋e`
/// and `B ← τ*B − 2⌊m/2⌋e`; the exceptional curve joins the branch iff `m`
/// is odd. The step recurses into infinitely near points where the new
/// branch is still singular: every direction of the cone if `m` is odd,
/// the repeated ones otherwise.
pub fn even_resolution_in_order(mut cover: CoverData, arr: &Arrangement, points: &[(String, SurfPoint)]) -> Result<CoverData, CoverError> {
    for (label, p) in points {
        if p.level() != 0 {
            return Err(CoverError::Arrangement(crate::arrangement::ArrangementError::InvalidPoint(format!(
                "{p}: resolution starts at level-0 points"
            ))));
        }
        let germs: Vec<(usize, Poly2)> = arr
            .components()
            .iter()
            .enumerate()
            .map(|(i, c)| (i, root_germ(&c.form, arr.field(), p)))
            .filter(|(_, g)| g.order().is_some_and(|m| m > 0))
            .collect();
        cover.resolve_at(p, label, germs)?;
    }
    cover.resolved = true;
    Ok(cover)
}
