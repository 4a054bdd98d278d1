//! Turns a [`SurfaceSpec`] into exact objects.

use super::schema::{BaseName, Coord, CurveBody, SurfaceSpec};
use crate::algebra::{parse_and_homogenize, parse_expr, Base, Fe, Field, Form, NumberField, Poly2};
use crate::arrangement::{Arrangement, Component, SurfPoint};
use crate::piclattice::{eval_class_expr, DivClass, SurfaceLattice};
use std::collections::BTreeMap;

pub struct Built {
    pub field: Field,
    pub arrangement: Arrangement,
    pub points: Vec<(String, SurfPoint)>,
    pub delta: DivClass,
}

pub fn base_of(b: BaseName) -> Base {
    match b {
        BaseName::P2 => Base::P2,
        BaseName::P1xP1 => Base::P1xP1,
    }
}

fn constant(s: &str, field: &Field, params: &BTreeMap<char, Poly2>) -> Result<Fe, String> {
    let p = parse_expr(s, field, params).map_err(|e| format!("{s:?}: {e}"))?;
    if p.total_degree().unwrap_or(0) > 0 {
        return Err(format!("{s:?} is not a constant"));
    }
    Ok(p.coeff(0, 0))
}

fn homogeneous(c: &Coord, field: &Field, params: &BTreeMap<char, Poly2>) -> Result<[Fe; 2], String> {
    match c {
        Coord::Affine(s) if s.trim() == "inf" => Ok([Fe::zero(field), Fe::one(field)]),
        Coord::Affine(s) => Ok([Fe::one(field), constant(s, field, params)?]),
        Coord::Homogeneous([a, b]) => Ok([constant(a, field, params)?, constant(b, field, params)?]),
    }
}

fn point(base: Base, coords: &[Coord], galois: bool, field: &Field, params: &BTreeMap<char, Poly2>) -> Result<SurfPoint, String> {
    let affine = |c: &Coord| match c {
        Coord::Affine(s) if s.trim() != "inf" => constant(s, field, params),
        _ => Err("ℙ² coordinates must be plain values".to_string()),
    };
    let p = match (base, coords.len()) {
        (Base::P2, 2) => SurfPoint::p2_affine(affine(&coords[0])?, affine(&coords[1])?),
        (Base::P2, 3) => SurfPoint::p2([affine(&coords[0])?, affine(&coords[1])?, affine(&coords[2])?]).map_err(|e| e.to_string())?,
        (Base::P1xP1, 2) => {
            SurfPoint::p1p1(homogeneous(&coords[0], field, params)?, homogeneous(&coords[1], field, params)?).map_err(|e| e.to_string())?
        }
        (_, n) => return Err(format!("{n} coordinates on {base:?}")),
    };
    Ok(p.with_galois(galois))
}

/// Field, branch arrangement, claimed points and `δ` of a surface section.
pub fn build(spec: &SurfaceSpec) -> Result<Built, String> {
    let field = NumberField::from_ints(&spec.field).map_err(|e| format!("field: {e}"))?;
    let base = base_of(spec.base);
    let mut params = BTreeMap::new();
    for (name, value) in &spec.params {
        let mut cs = name.chars();
        let (Some(c), None) = (cs.next(), cs.next()) else { return Err(format!("parameter name {name:?} must be one letter")) };
        if matches!(c, 'x' | 'y' | 't') || !c.is_ascii_alphabetic() {
            return Err(format!("parameter name {name:?} is reserved"));
        }
        let v = constant(value, &field, &params)?;
        params.insert(c, Poly2::constant(v));
    }
    let mut curves: BTreeMap<String, Form> = BTreeMap::new();
    let get = |curves: &BTreeMap<String, Form>, n: &str| curves.get(n).cloned().ok_or_else(|| format!("unknown curve {n}"));
    for c in &spec.curves {
        if curves.contains_key(&c.name) {
            return Err(format!("curve {} defined twice", c.name));
        }
        let form = match &c.body {
            CurveBody::Equation { expr, degree } => {
                parse_and_homogenize(expr, base, degree.pair(), &field, &params).map_err(|e| format!("curve {}: {e}", c.name))?
            }
            CurveBody::Product { product } => {
                let Some((first, rest)) = product.split_first() else { return Err(format!("curve {}: empty product", c.name)) };
                rest.iter().try_fold(get(&curves, first)?, |acc, n| get(&curves, n).map(|g| acc.mul(&g, &field)))?
            }
            CurveBody::Combination { combination } => {
                let mut acc: Option<Form> = None;
                for t in combination {
                    let g = get(&curves, &t.curve)?.scale(&constant(&t.coeff, &field, &params)?, &field);
                    acc = Some(match acc {
                        None => g,
                        Some(a) if a.degree() == g.degree() => a.add(&g, &field),
                        Some(a) => return Err(format!("curve {}: degrees {:?} and {:?} differ", c.name, a.degree(), g.degree())),
                    });
                }
                acc.ok_or_else(|| format!("curve {}: empty combination", c.name))?
            }
        };
        if form.is_zero() {
            return Err(format!("curve {} is zero", c.name));
        }
        curves.insert(c.name.clone(), form);
    }
    let comps = spec
        .branch
        .iter()
        .map(|n| get(&curves, n).map(|form| Component { name: n.clone(), form, coeff: 1 }))
        .collect::<Result<Vec<_>, _>>()?;
    let arrangement = Arrangement::new(base, field.clone(), comps).map_err(|e| format!("branch: {e}"))?;
    let points = spec
        .points
        .iter()
        .map(|p| {
            point(base, &p.coords, p.galois, &field, &params).map(|q| (p.label.clone(), q)).map_err(|e| format!("point {}: {e}", p.label))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let delta = eval_class_expr(&spec.delta, &SurfaceLattice::new(base), &BTreeMap::new()).map_err(|e| format!("delta: {e}"))?;
    Ok(Built { field, arrangement, points, delta })
}
