//! Picard lattices of ℙ², ℙ¹×ℙ¹ and their iterated blow-ups in the
//! orthogonal total-transform basis.

mod expr;
mod h0;

pub use expr::{eval_class_expr, verify_class_identity};
pub use h0::{h0_interpolation, H0Report};

use crate::algebra::{linalg, q, Base};
use crate::arrangement::{ArrangementError, SurfPoint};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("point {0} is already blown up")]
    DuplicatePoint(String),
    #[error("parent of {0} has not been blown up")]
    MissingParent(String),
    #[error("classes live in different lattices")]
    LatticeMismatch,
    #[error("infinitely near conditions deeper than level 1 are not supported ({0})")]
    UnsupportedDepth(String),
    #[error("unsupported condition: {0}")]
    UnsupportedCondition(String),
    #[error("class expression error at offset {pos}: {msg}")]
    Expr { pos: usize, msg: String },
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
}

/// p_a = ½(D² + D·K) + 1 from the two intersection numbers.
pub fn arithmetic_genus(d2: i64, dk: i64) -> i64 {
    (d2 + dk) / 2 + 1
}

/// One exceptional slot. Galois-orbit points get one slot per conjugate,
/// all sharing the representative `point` and distinguished by `conj`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slot {
    pub label: String,
    pub point: SurfPoint,
    pub conj: usize,
}

impl Slot {
    pub fn level(&self) -> usize {
        self.point.level()
    }

    pub fn name(&self) -> String {
        let primes = "'".repeat(self.level());
        let suffix = if self.point.is_galois() { format!("#{}", self.conj + 1) } else { String::new() };
        format!("E{primes}[{}]{suffix}", self.label)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceLattice {
    base: Base,
    slots: Vec<Slot>,
}

/// Integer class: base coefficients (`[d]` on ℙ², `[a, b]` on ℙ¹×ℙ¹) and
/// one coefficient per exceptional slot.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DivClass {
    pub base: Vec<i64>,
    pub exc: Vec<i64>,
}

impl SurfaceLattice {
    pub fn new(base: Base) -> SurfaceLattice {
        SurfaceLattice { base, slots: Vec::new() }
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn rank(&self) -> usize {
        self.base_rank() + self.slots.len()
    }

    fn base_rank(&self) -> usize {
        match self.base {
            Base::P2 => 1,
            Base::P1xP1 => 2,
        }
    }

    /// Appends a (−1)-slot for `point` (one per conjugate for Galois
    /// points).
    pub fn blow_up(&self, point: &SurfPoint, label: &str) -> Result<SurfaceLattice, LatticeError> {
        if self.slots.iter().any(|s| s.point == *point) {
            return Err(LatticeError::DuplicatePoint(point.to_string()));
        }
        if let Some(parent) = point.parent() {
            if !self.slots.iter().any(|s| s.point == parent) {
                return Err(LatticeError::MissingParent(point.to_string()));
            }
        }
        let mut out = self.clone();
        for conj in 0..point.orbit_size() {
            out.slots.push(Slot { label: label.to_string(), point: point.clone(), conj });
        }
        Ok(out)
    }

    pub fn zero(&self) -> DivClass {
        DivClass { base: vec![0; self.base_rank()], exc: vec![0; self.slots.len()] }
    }

    /// Pull-back of a base class given by its degree (`(d, _)` on ℙ²).
    pub fn base_class(&self, deg: (i64, i64)) -> DivClass {
        let mut c = self.zero();
        match self.base {
            Base::P2 => c.base[0] = deg.0,
            Base::P1xP1 => c.base = vec![deg.0, deg.1],
        }
        c
    }

    pub fn e(&self, i: usize) -> DivClass {
        let mut c = self.zero();
        c.exc[i] = 1;
        c
    }

    /// K = base canonical class + Σ eᵢ.
    pub fn canonical(&self) -> DivClass {
        let mut k = match self.base {
            Base::P2 => self.base_class((-3, 0)),
            Base::P1xP1 => self.base_class((-2, -2)),
        };
        k.exc.iter_mut().for_each(|v| *v = 1);
        k
    }

    fn check(&self, d: &DivClass) -> Result<(), LatticeError> {
        if d.base.len() != self.base_rank() || d.exc.len() != self.slots.len() {
            return Err(LatticeError::LatticeMismatch);
        }
        Ok(())
    }

    /// Embeds a class from a lattice with fewer slots (total transform).
    pub fn lift(&self, d: &DivClass) -> Result<DivClass, LatticeError> {
        if d.base.len() != self.base_rank() || d.exc.len() > self.slots.len() {
            return Err(LatticeError::LatticeMismatch);
        }
        let mut out = d.clone();
        out.exc.resize(self.slots.len(), 0);
        Ok(out)
    }

    pub fn intersect(&self, a: &DivClass, b: &DivClass) -> Result<i64, LatticeError> {
        self.check(a)?;
        self.check(b)?;
        let base = match self.base {
            Base::P2 => a.base[0] * b.base[0],
            Base::P1xP1 => a.base[0] * b.base[1] + a.base[1] * b.base[0],
        };
        Ok(base - a.exc.iter().zip(&b.exc).map(|(x, y)| x * y).sum::<i64>())
    }

    pub fn self_intersection(&self, a: &DivClass) -> Result<i64, LatticeError> {
        self.intersect(a, a)
    }

    /// p_a = ½·D·(D+K) + 1
    pub fn adjunction_genus(&self, d: &DivClass) -> Result<i64, LatticeError> {
        Ok(arithmetic_genus(self.self_intersection(d)?, self.intersect(d, &self.canonical())?))
    }

    /// χ(O(D)) = χ(O) + ½·D·(D−K), with χ(O) = 1.
    pub fn riemann_roch_chi(&self, d: &DivClass) -> Result<i64, LatticeError> {
        let v = self.intersect(d, &d.sub(&self.canonical()))?;
        Ok(1 + v / 2)
    }

    pub fn gram(&self) -> Vec<Vec<i64>> {
        let basis: Vec<DivClass> = (0..self.base_rank())
            .map(|i| {
                let mut c = self.zero();
                c.base[i] = 1;
                c
            })
            .chain((0..self.slots.len()).map(|i| self.e(i)))
            .collect();
        basis.iter().map(|a| basis.iter().map(|b| self.intersect(a, b).expect("same lattice")).collect()).collect()
    }

    /// (positive, negative, zero) eigenvalue counts of the intersection form.
    pub fn signature(&self) -> (usize, usize, usize) {
        let g: Vec<Vec<_>> = self.gram().iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect();
        linalg::inertia(&g)
    }

    /// Slot indices grouped by label and level.
    pub fn slots_named(&self, label: &str, level: usize) -> Vec<usize> {
        self.slots.iter().enumerate().filter(|(_, s)| s.label == label && s.level() == level).map(|(i, _)| i).collect()
    }

    pub fn slot_of(&self, point: &SurfPoint) -> Vec<usize> {
        self.slots.iter().enumerate().filter(|(_, s)| s.point == *point).map(|(i, _)| i).collect()
    }

    /// Human-readable form such as `(5,1) - E[P1] - 2E[P2]`.
    pub fn display(&self, d: &DivClass) -> String {
        let mut s = match self.base {
            Base::P2 => format!("{}H", d.base[0]),
            Base::P1xP1 => format!("({},{})", d.base[0], d.base[1]),
        };
        // collapse conjugate slots carrying equal coefficients
        let mut grouped: BTreeMap<(usize, String), Vec<i64>> = BTreeMap::new();
        let mut order = Vec::new();
        for (i, slot) in self.slots.iter().enumerate() {
            let key = (slot.level(), slot.label.clone());
            let first = !grouped.contains_key(&key);
            grouped.entry(key.clone()).or_default().push(d.exc[i]);
            if first {
                order.push((key, i));
            }
        }
        for ((lvl, label), i) in order {
            let vals = &grouped[&(lvl, label.clone())];
            let uniform = vals.iter().all(|v| *v == vals[0]);
            let name = if uniform && vals.len() > 1 { format!("ΣE{}[{}]", "'".repeat(lvl), label) } else { self.slots[i].name() };
            let coeffs: Vec<i64> = if uniform { vec![vals[0]] } else { vals.clone() };
            for c in coeffs {
                if c == 0 {
                    continue;
                }
                let sign = if c < 0 { " - " } else { " + " };
                let mag = c.abs();
                if mag == 1 {
                    s.push_str(&format!("{sign}{name}"));
                } else {
                    s.push_str(&format!("{sign}{mag}{name}"));
                }
            }
        }
        s
    }
}

impl DivClass {
    pub fn add(&self, o: &DivClass) -> DivClass {
        DivClass { base: zip(&self.base, &o.base, |a, b| a + b), exc: zip(&self.exc, &o.exc, |a, b| a + b) }
    }

    pub fn sub(&self, o: &DivClass) -> DivClass {
        DivClass { base: zip(&self.base, &o.base, |a, b| a - b), exc: zip(&self.exc, &o.exc, |a, b| a - b) }
    }

    pub fn scale(&self, k: i64) -> DivClass {
        DivClass { base: self.base.iter().map(|v| v * k).collect(), exc: self.exc.iter().map(|v| v * k).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.base.iter().chain(&self.exc).all(|v| *v == 0)
    }
}

fn zip(a: &[i64], b: &[i64], f: impl Fn(i64, i64) -> i64) -> Vec<i64> {
    let n = a.len().max(b.len());
    (0..n).map(|i| f(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0))).collect()
}

impl fmt::Display for DivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}|{:?}", self.base, self.exc)
    }
}
