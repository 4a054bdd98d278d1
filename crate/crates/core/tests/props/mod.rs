//! Property checks shared by the `properties` and `acceptance` targets.
#![allow(dead_code)]

use fibra::algebra::{q, Base, Fe, Field, Form, NumberField, Poly2};
use fibra::arrangement::{certify_complete, intersection_mult, Arrangement, Component, SurfPoint};
use fibra::bounds::{thm32_max_genus, thm42_max_k2, Irregularity};
use fibra::doublecover::{cover_chi_k2, even_resolution, even_resolution_in_order, CoverData};
use fibra::piclattice::{h0_interpolation, DivClass, SurfaceLattice};
use fibra::pipeline::build::{build, Built};
use fibra::pipeline::{corpus_dir, ConstructionFile};
use proptest::prelude::*;
use proptest::sample::SizeRange;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use std::collections::BTreeSet;

pub type Check = Result<(), TestCaseError>;

/// Runs `check` on `cases` deterministic draws from `strat`.
pub fn run<S: Strategy>(cases: u32, strat: S, check: impl Fn(S::Value) -> Check) -> Result<(), String> {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner.run(&strat, check).map_err(|e| e.to_string())
}

pub fn quartic() -> Field {
    NumberField::from_ints(&[3, 0, 3, 0, 1]).unwrap()
}

fn fe(k: &Field, c: &[i64]) -> Fe {
    let qs: Vec<_> = c.iter().map(|&x| q(x)).collect();
    Fe::from_poly(k, &qs)
}

fn elem() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-20i64..=20, 4)
}

pub fn field_input() -> impl Strategy<Value = (Vec<i64>, Vec<i64>, Vec<i64>)> {
    (elem(), elem(), elem())
}

/// Ring and field axioms in ℚ(t), t⁴ + 3t² + 3 = 0.
#[allow(clippy::eq_op)]
pub fn field_axioms((a, b, c): (Vec<i64>, Vec<i64>, Vec<i64>)) -> Check {
    let k = quartic();
    let (a, b, c) = (fe(&k, &a), fe(&k, &b), fe(&k, &c));
    prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    prop_assert_eq!(&a * &b, &b * &a);
    prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    prop_assert!((&a - &a).is_zero());
    prop_assert_eq!(&a * &Fe::one(&k), a.clone());
    let t = Fe::generator(&k);
    prop_assert!((&(&t.pow(4) + &t.pow(2).scale(&q(3))) + &Fe::from_int(&k, 3)).is_zero());
    prop_assert_eq!(a.pow(3), &(&a * &a) * &a);
    if a.is_zero() {
        prop_assert!(a.inv().is_err());
    } else {
        prop_assert!((&a * &a.inv().unwrap()).is_one());
        prop_assert_eq!(&b.div(&a).unwrap() * &a, b);
    }
    Ok(())
}

fn rational_points(base: Base, coords: &[(i64, i64)]) -> Vec<SurfPoint> {
    let k = NumberField::rationals();
    let f = |v: i64| Fe::from_int(&k, v);
    coords
        .iter()
        .map(|&(x, y)| match base {
            Base::P2 => SurfPoint::p2_affine(f(x), f(y)),
            Base::P1xP1 => SurfPoint::p1p1_affine(&k, Some(f(x)), Some(f(y))),
        })
        .collect()
}

fn distinct_coords(n: impl Into<SizeRange>) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::btree_set((-5i64..=5, -5i64..=5), n).prop_map(|s| s.into_iter().collect())
}

fn blown_up(base: Base, coords: &[(i64, i64)]) -> SurfaceLattice {
    rational_points(base, coords).iter().enumerate().fold(SurfaceLattice::new(base), |l, (i, p)| l.blow_up(p, &format!("P{i}")).unwrap())
}

fn class_on(lat: &SurfaceLattice, base: &[i64], exc: &[i64]) -> DivClass {
    let mut d = lat.zero();
    let n = d.base.len();
    d.base.copy_from_slice(&base[..n]);
    for (slot, v) in d.exc.iter_mut().zip(exc) {
        *slot = *v;
    }
    d
}

fn base_name() -> impl Strategy<Value = Base> {
    prop_oneof![Just(Base::P2), Just(Base::P1xP1)]
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, 10)
}

pub type FormInput = (Base, Vec<(i64, i64)>, Vec<i64>, Vec<i64>, Vec<i64>, i64);

pub fn form_input() -> impl Strategy<Value = FormInput> {
    (base_name(), distinct_coords(0..8), coeffs(), coeffs(), coeffs(), -4i64..=4)
}

/// Symmetry, bilinearity, `K² = 9 − n` or `8 − n`, the parity of
/// `D² + K·D`, and signature `(1, ρ − 1)` on a blown-up base.
pub fn intersection_form_axioms((base, pts, a, b, c, s): FormInput) -> Check {
    let lat = blown_up(base, &pts);
    let n = pts.len();
    let (x, y, z) = (class_on(&lat, &a[..2], &a[2..]), class_on(&lat, &b[..2], &b[2..]), class_on(&lat, &c[..2], &c[2..]));
    let dot = |u: &DivClass, v: &DivClass| lat.intersect(u, v).unwrap();
    prop_assert_eq!(dot(&x, &y), dot(&y, &x));
    prop_assert_eq!(dot(&x.add(&y.scale(s)), &z), dot(&x, &z) + s * dot(&y, &z));
    let k = lat.canonical();
    let top = if base == Base::P2 { 9 } else { 8 };
    prop_assert_eq!(dot(&k, &k), top - n as i64);
    prop_assert_eq!((dot(&x, &x) + dot(&k, &x)).rem_euclid(2), 0);
    prop_assert_eq!(lat.riemann_roch_chi(&k).unwrap(), 1);
    prop_assert_eq!(lat.signature(), (1, lat.rank() - 1, 0));
    for i in 0..n {
        prop_assert_eq!(dot(&lat.e(i), &lat.e(i)), -1);
        prop_assert_eq!(dot(&lat.e(i), &k), -1);
    }
    Ok(())
}

pub type H0Input = (Base, Vec<(i64, i64)>, (i64, i64), Vec<i64>, usize);

pub fn h0_input() -> impl Strategy<Value = H0Input> {
    (base_name(), distinct_coords(1..6), (0i64..=4, 0i64..=3), prop::collection::vec(0i64..=2, 6), 0usize..6)
}

/// Raising one point multiplicity from `m` to `m + 1` loses between 0 and
/// `m + 1` sections, and h⁰ never drops below the expected dimension.
pub fn h0_monotone((base, pts, deg, mults, j): H0Input) -> Check {
    let k = NumberField::rationals();
    let lat = blown_up(base, &pts);
    let j = j % pts.len();
    let ms = &mults[..pts.len()];
    let d = class_on(&lat, &[deg.0, deg.1], &ms.iter().map(|m| -m).collect::<Vec<_>>());
    let h = h0_interpolation(&lat, &d, &k).unwrap();
    let h2 = h0_interpolation(&lat, &d.sub(&lat.e(j)), &k).unwrap();
    prop_assert!(h2.h0 <= h.h0);
    prop_assert!(h.h0 - h2.h0 <= (ms[j] + 1) as usize);
    let conditions: usize = ms.iter().map(|&m| (m * (m + 1) / 2) as usize).sum();
    prop_assert!(h.h0 >= h.monomials.saturating_sub(conditions));
    prop_assert!(h.h0 <= h.monomials);
    Ok(())
}

/// Lines through `p` with the given slopes, plus one line missing `p` when
/// their number is odd.
fn pencil_of_lines(p: (i64, i64), slopes: &[i64]) -> Arrangement {
    let k = NumberField::rationals();
    let f = |v: i64| Fe::from_int(&k, v);
    let x = Poly2::x(&k).sub(&Poly2::constant(f(p.0)));
    let y = Poly2::y(&k).sub(&Poly2::constant(f(p.1)));
    let mut polys: Vec<Poly2> = slopes.iter().map(|&a| y.sub(&x.scale(&f(a)))).collect();
    if slopes.len() % 2 == 1 {
        polys.push(Poly2::x(&k).sub(&Poly2::constant(f(p.0 + 1))));
    }
    let comps = polys
        .iter()
        .enumerate()
        .map(|(i, g)| Component { name: format!("L{i}"), form: Form::from_affine(Base::P2, g, (1, 0)).unwrap(), coeff: 1 })
        .collect();
    Arrangement::new(Base::P2, k, comps).unwrap()
}

pub fn increments_input() -> impl Strategy<Value = ((i64, i64), Vec<i64>)> {
    ((-4i64..=4, -4i64..=4), prop::collection::btree_set(-6i64..=6, 2..=7).prop_map(|s| s.into_iter().collect()))
}

/// Each resolution step of weight `k` lowers `χ` by `k(k−1)/2` and `K²` by
/// `2(k−1)²`.
pub fn resolution_increments((p, slopes): ((i64, i64), Vec<i64>)) -> Check {
    let arr = pencil_of_lines(p, &slopes);
    let half = arr.class().0 as i64 / 2;
    let cover = CoverData::new(&arr, SurfaceLattice::new(Base::P2).base_class((half, 0))).unwrap();
    let (chi0, k20) = cover_chi_k2(&cover.ambient, 1, &cover.canonical(), &cover.delta).unwrap();
    let pt = rational_points(Base::P2, &[p]).remove(0);
    let res = even_resolution(cover, &arr, &[("P".into(), pt)]).unwrap();
    let (chi, k2) = cover_chi_k2(&res.ambient, 1, &res.canonical(), &res.delta).unwrap();
    let m = slopes.len() as i64;
    prop_assert_eq!(res.log[0].mult as i64, m);
    prop_assert_eq!(res.log[0].k as i64, m / 2);
    let dchi: i64 = res.log.iter().map(|s| s.slots as i64 * (s.k as i64 * (s.k as i64 - 1) / 2)).sum();
    let dk2: i64 = res.log.iter().map(|s| s.slots as i64 * 2 * (s.k as i64 - 1).pow(2)).sum();
    prop_assert_eq!(chi0 - chi, dchi);
    prop_assert_eq!(k20 - k2, dk2);
    // odd m: the exceptional curve joins the branch and meets it in m nodes
    let steps = if m % 2 == 1 { 1 + m as usize } else { 1 };
    prop_assert_eq!(res.log.len(), steps);
    Ok(())
}

pub fn corpus_surface(id: &str) -> Built {
    let f = ConstructionFile::load(&corpus_dir().join(format!("{id}.json"))).unwrap();
    build(f.surface.as_ref().unwrap()).unwrap()
}

type Log = BTreeSet<(String, usize, u32, u32, usize)>;

/// `(χ, K², p_g, q, contractions, K²_min, ρ)` and the step multiset.
pub fn invariants_in_order(b: &Built, order: &[usize]) -> (Vec<i64>, Log) {
    let pts: Vec<_> = order.iter().map(|&i| b.points[i].clone()).collect();
    let cover = CoverData::new(&b.arrangement, b.delta.clone()).unwrap();
    let res = even_resolution_in_order(cover, &b.arrangement, &pts).unwrap();
    let kd = res.canonical().add(&res.delta);
    let h0 = h0_interpolation(&res.ambient, &kd, &b.field).unwrap().h0;
    let inv = res.invariants(h0 as u64).unwrap();
    let log = res.log.iter().map(|s| (s.label.clone(), s.level, s.mult, s.k, s.slots)).collect();
    (vec![inv.chi, inv.k2, inv.pg as i64, inv.q as i64, inv.minus_one_contractions as i64, inv.k2_minimal, res.ambient.rank() as i64], log)
}

pub fn shuffled(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

pub fn order_invariant(b: &Built, order: Vec<usize>) -> Check {
    let id: Vec<usize> = (0..b.points.len()).collect();
    prop_assert_eq!(invariants_in_order(b, &order), invariants_in_order(b, &id));
    Ok(())
}

pub const COMPUTED: [&str; 4] = ["x_s_19", "y_s_19", "z_s_19", "x_s_16"];

/// Certifies every pair of branch components of every computed corpus
/// surface; returns the number of pairs.
pub fn bezout_complete_on_corpus() -> Result<usize, String> {
    let mut total = 0;
    for id in COMPUTED {
        let b = corpus_surface(id);
        let claimed: Vec<SurfPoint> = b.points.iter().map(|p| p.1.clone()).collect();
        let comps = b.arrangement.components();
        for (i, c1) in comps.iter().enumerate() {
            for c2 in &comps[i + 1..] {
                let cert = certify_complete((&c1.name, &c2.name), &c1.form, &c2.form, &b.field, &claimed)
                    .map_err(|e| format!("{id}: {} and {}: {e}", c1.name, c2.name))?;
                let sum: u64 = cert.points.iter().map(|(_, m, w)| *m as u64 * *w as u64).sum();
                if sum != cert.total {
                    return Err(format!("{id}: {} and {}: {sum} != {}", c1.name, c2.name, cert.total));
                }
                total += 1;
            }
        }
    }
    Ok(total)
}

/// Dropping claimed point `j` breaks exactly the pairs through it.
pub fn bezout_detects_drop(b: &Built, j: usize) -> Check {
    let mut claimed: Vec<SurfPoint> = b.points.iter().map(|p| p.1.clone()).collect();
    let dropped = claimed.remove(j % claimed.len());
    let comps = b.arrangement.components();
    let mut caught = false;
    for (i, c1) in comps.iter().enumerate() {
        for c2 in &comps[i + 1..] {
            let on_both = intersection_mult(&c1.form, &c2.form, &b.field, &dropped).unwrap() > 0;
            let ok = certify_complete((&c1.name, &c2.name), &c1.form, &c2.form, &b.field, &claimed).is_ok();
            prop_assert_eq!(ok, !on_both);
            caught |= on_both;
        }
    }
    prop_assert!(caught);
    Ok(())
}

pub fn thm32_monotone((a, step): (u64, u64)) -> Check {
    prop_assert!(thm32_max_genus(a + step).unwrap() <= thm32_max_genus(a).unwrap());
    Ok(())
}

pub fn thm42_monotone((a, step, b, positive): (u64, u64, u8, bool)) -> Check {
    let qf = if positive { Irregularity::Positive } else { Irregularity::Zero };
    let lo = thm42_max_k2(a, b, qf).unwrap();
    let hi = thm42_max_k2(a + step, b, qf).unwrap();
    prop_assert!(hi.max_k2 <= lo.max_k2);
    prop_assert!(hi.max_pg_f <= lo.max_pg_f);
    Ok(())
}
