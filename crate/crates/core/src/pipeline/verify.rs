use super::build::{build, Built};
use super::report::{Assertion, Comparison, ConstructionReport, PointRow, StageResult, Status, ASSERTED, REPORT_SCHEMA};
use super::schema::{ConstructionFile, FileKind, SurfaceSpec};
use crate::algebra::q;
use crate::arrangement::{classify_singularity, singular_locus_certify, strict_transform_smooth_after_blowup};
use crate::bounds::miyaoka_yau_check;
use crate::constructions::{
    assemble_surface_pair, check_lemma_5_3, standard_construction, variant_construction, SurfacePair, ThreefoldReport,
};
use crate::doublecover::{even_resolution, hurwitz_double_cover_genus, CoverData};
use crate::piclattice::{arithmetic_genus, eval_class_expr, h0_interpolation, DivClass};
use serde_json::{json, Value};
use std::collections::BTreeMap;

pub const STANDARD_STAGES: [&str; 10] = [
    "parse",
    "class_identity",
    "singular_locus",
    "resolution",
    "cover_invariants",
    "identities",
    "pencil",
    "threefold",
    "bounds",
    "comparison",
];

type Computed = BTreeMap<String, Value>;

#[derive(Default)]
struct Runner {
    stages: Vec<StageResult>,
    computed: Computed,
    blocked: bool,
}

impl Runner {
    /// Runs a stage unless an earlier blocking stage failed. A failing
    /// blocking stage skips everything after it except the comparison.
    fn stage<T>(&mut self, name: &str, blocking: bool, f: impl FnOnce(&mut Computed) -> Result<T, String>) -> Option<T> {
        if self.blocked {
            self.skip(name, "an earlier stage failed");
            return None;
        }
        match f(&mut self.computed) {
            Ok(v) => {
                self.stages.push(StageResult { stage: name.into(), status: Status::Pass, diagnostic: None });
                Some(v)
            }
            Err(d) => {
                self.stages.push(StageResult { stage: name.into(), status: Status::Fail, diagnostic: Some(d) });
                self.blocked |= blocking;
                None
            }
        }
    }

    fn skip(&mut self, name: &str, why: &str) {
        self.stages.push(StageResult { stage: name.into(), status: Status::Skipped, diagnostic: Some(why.into()) });
    }

    fn finish(mut self, file: &ConstructionFile, rows: Vec<PointRow>, log: Vec<crate::doublecover::ResolutionStep>) -> ConstructionReport {
        let comparisons = compare(file, &self.computed);
        let bad: Vec<&str> = comparisons.iter().filter(|c| !c.ok).map(|c| c.key.as_str()).collect();
        let diag = (!bad.is_empty()).then(|| format!("{} mismatch(es): {}", bad.len(), bad.join(", ")));
        self.stages.push(StageResult {
            stage: "comparison".into(),
            status: if bad.is_empty() { Status::Pass } else { Status::Fail },
            diagnostic: diag,
        });
        let first_failure = self.stages.iter().find(|s| s.status == Status::Fail).map(|s| s.stage.clone());
        let extensions = ["chi_omega_X"].iter().filter(|k| self.computed.contains_key(**k)).map(|k| k.to_string()).collect();
        ConstructionReport {
            schema: REPORT_SCHEMA.into(),
            id: file.id.clone(),
            example: file.example.clone(),
            kind: file.kind,
            passed: first_failure.is_none(),
            first_failure,
            stages: self.stages,
            singular_table: rows,
            resolution_log: log,
            computed: self.computed,
            comparisons,
            assertions: file.assertions.iter().map(|a| Assertion { claim: a.clone(), status: ASSERTED.into() }).collect(),
            extensions,
        }
    }
}

/// Expected values from the `expected` block and the per-point
/// expectations, each matched against the computed value of the same key.
fn compare(file: &ConstructionFile, computed: &Computed) -> Vec<Comparison> {
    let mut expected: Vec<(String, Value)> = file.expected.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
    if let Some(s) = &file.surface {
        for p in &s.points {
            let Some(e) = &p.expect else { continue };
            let key = |f: &str| format!("point.{}.{f}", p.label);
            if let Some(m) = e.mult {
                expected.push((key("mult"), json!(m)));
            }
            if let Some(t) = &e.sing_type {
                expected.push((key("type"), json!(t)));
            }
            if let Some(c) = &e.components {
                expected.push((key("components"), json!(c)));
            }
            if let Some(r) = &e.resolution {
                expected.push((key("resolution"), json!(r)));
            }
        }
    }
    expected
        .into_iter()
        .map(|(key, exp)| {
            let got = computed.get(&key).cloned();
            Comparison { ok: got.as_ref() == Some(&exp), key, expected: exp, computed: got }
        })
        .collect()
}

fn put(c: &mut Computed, k: &str, v: impl serde::Serialize) {
    c.insert(k.to_string(), serde_json::to_value(v).expect("serializable"));
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Verifies one file. Variant files need the report of their sibling.
pub fn verify(file: &ConstructionFile, sibling: Option<&ConstructionReport>) -> ConstructionReport {
    match file.kind {
        FileKind::Standard => verify_standard(file, file.surface.as_ref().expect("validated")),
        FileKind::Variant => verify_variant(file, sibling),
        FileKind::Literature => verify_literature(file, file.pair.as_ref().expect("validated")),
    }
}

fn subs(cover: &CoverData, extra: &[(&str, &DivClass)]) -> BTreeMap<String, DivClass> {
    let mut s = BTreeMap::new();
    for c in cover.components.iter().filter(|c| !c.exceptional) {
        s.insert(c.name.clone(), c.class.clone());
    }
    s.insert("K".into(), cover.canonical());
    s.insert("delta".into(), cover.delta.clone());
    s.insert("B".into(), cover.branch_class.clone());
    for (k, v) in extra {
        s.insert(k.to_string(), (*v).clone());
    }
    s
}

fn verify_standard(file: &ConstructionFile, spec: &SurfaceSpec) -> ConstructionReport {
    let mut run = Runner::default();
    let mut rows: Vec<PointRow> = Vec::new();

    let built = run.stage("parse", true, |c| {
        let b = build(spec)?;
        let (a, bb) = b.arrangement.class();
        put(c, "branch_degree", [a, bb]);
        put(c, "field_degree", b.field.degree());
        put(c, "claimed_points", b.points.len());
        Ok(b)
    });

    let cover = match &built {
        Some(b) => run.stage("class_identity", true, |c| {
            let cover = CoverData::new(&b.arrangement, b.delta.clone()).map_err(err)?;
            put(c, "class_identity", true);
            put(c, "delta", cover.ambient.display(&cover.delta));
            Ok(cover)
        }),
        None => {
            run.skip("class_identity", "an earlier stage failed");
            None
        }
    };
    let certified = match (&built, &cover) {
        (Some(b), Some(_)) => run.stage("singular_locus", true, |c| singular_stage(b, c, &mut rows)),
        _ => {
            run.skip("singular_locus", "an earlier stage failed");
            None
        }
    };

    let resolved = match (&built, cover, certified) {
        (Some(b), Some(cover), Some(())) => run.stage("resolution", true, |c| {
            let r = even_resolution(cover, &b.arrangement, &b.points).map_err(err)?;
            for row in rows.iter_mut() {
                row.resolution = r.log.iter().filter(|s| s.label == row.label).map(|s| s.k).collect();
                put(c, &format!("point.{}.resolution", row.label), &row.resolution);
            }
            put(c, "resolution_steps", r.log.len());
            put(c, "picard_rank", r.ambient.rank());
            put(c, "delta_tilde", r.ambient.display(&r.delta));
            Ok(r)
        }),
        _ => {
            run.skip("resolution", "an earlier stage failed");
            None
        }
    };

    let invariants = match (&built, &resolved) {
        (Some(b), Some(r)) => run.stage("cover_invariants", true, |c| {
            let kd = r.canonical().add(&r.delta);
            let h0 = h0_interpolation(&r.ambient, &kd, &b.field).map_err(err)?;
            let inv = r.invariants(h0.h0 as u64).map_err(err)?;
            put(c, "K_plus_delta", r.ambient.display(&kd));
            put(c, "K_plus_delta_monomials", h0.monomials);
            put(c, "K_plus_delta_rank", h0.rank);
            put(c, "h0_K_plus_delta", h0.h0);
            put(c, "K2_tilde", inv.k2);
            put(c, "minus_one_curves", inv.minus_one_contractions);
            put(c, "K2_S", inv.k2_minimal);
            put(c, "chi_S", inv.chi);
            put(c, "pg_S", inv.pg);
            put(c, "q_S", inv.q);
            Ok(inv)
        }),
        _ => {
            run.skip("cover_invariants", "an earlier stage failed");
            None
        }
    };

    match (&resolved, &invariants) {
        (Some(_), Some(_)) if spec.identities.is_empty() => run.skip("identities", "none listed"),
        (Some(r), Some(_)) => {
            run.stage("identities", false, |c| {
                let lat = &r.ambient;
                let base = subs(r, &[]);
                let l = eval_class_expr(&spec.fibration, lat, &base).map_err(|e| format!("fibration: {e}"))?;
                let m = eval_class_expr(&spec.moving, lat, &base).map_err(|e| format!("moving: {e}"))?;
                let s = subs(r, &[("L", &l), ("M", &m)]);
                let mut failed = Vec::new();
                for id in &spec.identities {
                    let lhs = eval_class_expr(&id.lhs, lat, &s).map_err(|e| format!("{}: {e}", id.label))?;
                    let rhs = eval_class_expr(&id.rhs, lat, &s).map_err(|e| format!("{}: {e}", id.label))?;
                    put(c, &format!("identity.{}", id.label), lhs == rhs);
                    if lhs != rhs {
                        failed.push(format!("{}: {} vs {}", id.label, lat.display(&lhs), lat.display(&rhs)));
                    }
                }
                if failed.is_empty() {
                    Ok(())
                } else {
                    Err(failed.join("; "))
                }
            });
        }
        _ => run.skip("identities", "an earlier stage failed"),
    }

    match (&built, &resolved, &invariants) {
        (Some(b), Some(r), Some(_)) => {
            run.stage("pencil", true, |c| pencil_stage(b, r, spec, c));
        }
        _ => run.skip("pencil", "an earlier stage failed"),
    }

    let threefold = run.stage("threefold", true, |c| {
        let pair = assemble_surface_pair(c, &file.id).map_err(err)?;
        threefold_standard(&pair, c)
    });
    match threefold {
        Some(t) => {
            run.stage("bounds", false, |c| bounds_stage(&t, c));
        }
        None => run.skip("bounds", "no 3-fold data"),
    }

    let log = resolved.map(|r| r.log).unwrap_or_default();
    run.finish(file, rows, log)
}

fn singular_stage(b: &Built, c: &mut Computed, rows: &mut Vec<PointRow>) -> Result<(), String> {
    let pts: Vec<_> = b.points.iter().map(|(_, p)| p.clone()).collect();
    let cert = singular_locus_certify(&b.arrangement, &pts).map_err(err)?;
    let mut total = 0;
    for (label, p) in &b.points {
        let rec = classify_singularity(&b.arrangement, p).map_err(err)?;
        total += p.orbit_size();
        let row = PointRow {
            label: label.clone(),
            point: p.to_string(),
            orbit_size: p.orbit_size(),
            mult: rec.total_mult,
            sing_type: rec.sing_type.to_string(),
            tangent_directions: rec.tangent_directions,
            components: rec.component_mults.into_iter().filter(|(_, m)| *m > 0).collect(),
            resolution: Vec::new(),
        };
        put(c, &format!("point.{label}.mult"), row.mult);
        put(c, &format!("point.{label}.type"), &row.sing_type);
        put(c, &format!("point.{label}.components"), &row.components);
        rows.push(row);
    }
    put(c, "singular_points", total);
    put(c, "bezout_pairs", cert.pairs.len());
    put(c, "strict_transform_smooth_after_one_blowup", strict_transform_smooth_after_blowup(&b.arrangement, &pts).map_err(err)?);
    Ok(())
}

/// Pencil data of `|K_S + H|` from the fibration class `L` and the moving
/// class `M` on the resolved base.
fn pencil_stage(b: &Built, r: &CoverData, spec: &SurfaceSpec, c: &mut Computed) -> Result<(), String> {
    let lat = &r.ambient;
    let s = subs(r, &[]);
    let l = eval_class_expr(&spec.fibration, lat, &s).map_err(|e| format!("fibration: {e}"))?;
    let m = eval_class_expr(&spec.moving, lat, &s).map_err(|e| format!("moving: {e}"))?;
    let dot = |a: &DivClass, b: &DivClass| lat.intersect(a, b).map_err(err);
    let kd = r.canonical().add(&r.delta);
    let z = kd.add(&l).sub(&m);

    let mut minus = Vec::new();
    for comp in &r.components {
        let rr = comp.pieces as i64;
        if dot(&comp.class, &comp.class)? == -2 * rr && lat.adjunction_genus(&comp.class).map_err(err)? == 1 - rr {
            minus.push((comp, rr));
        }
    }
    // K + δ̃ + L − M = Σ cᵢ C̃ᵢ over the disjoint (−2)-components
    let mut rebuilt = lat.zero();
    let mut fixed = Vec::new();
    for (comp, rr) in &minus {
        let zc = dot(&z, &comp.class)?;
        if zc % (2 * rr) != 0 {
            return Err(format!("(K+δ+L−M)·{} = {zc} is not divisible by {}", comp.name, 2 * rr));
        }
        let coef = -zc / (2 * rr);
        rebuilt = rebuilt.add(&comp.class.scale(coef));
        fixed.push((*comp, *rr, coef));
    }
    if rebuilt != z {
        return Err(format!("K+δ+L−M = {} is not supported on the (−1)-curve components", lat.display(&z)));
    }
    let mut base_points = 0;
    let mut d_corr = 0;
    let mut kh_corr = 0;
    for (comp, rr, coef) in &fixed {
        let mc = dot(&m, &comp.class)?;
        if mc != rr * (2 * coef - 1) {
            return Err(format!("M·{} = {mc}, expected {}", comp.name, rr * (2 * coef - 1)));
        }
        base_points += mc * mc / rr;
        let cl = dot(&comp.class, &l)?;
        if (mc * cl) % rr != 0 {
            return Err(format!("(M·{0})(L·{0}) not divisible by {rr}", comp.name));
        }
        d_corr += mc * cl / rr;
        kh_corr += cl;
    }
    let m2 = dot(&m, &m)?;
    let h0m = h0_interpolation(lat, &m, &b.field).map_err(err)?;
    let mb = dot(&m, &r.branch_class)?;
    let pa_m = lat.adjunction_genus(&m).map_err(err)?;
    put(c, "M", lat.display(&m));
    put(c, "L", lat.display(&l));
    put(c, "M2", m2);
    put(c, "h0_M", h0m.h0);
    put(c, "M_dot_B", mb);
    put(c, "p_a_M", pa_m);
    put(c, "base_points", base_points);
    if m2 != 0 {
        return Err(format!("M² = {m2}, a pencil without base points needs 0"));
    }
    if h0m.h0 != 2 {
        return Err(format!("h0(M) = {}, expected 2", h0m.h0));
    }
    if pa_m < 0 || mb < 0 {
        return Err(format!("p_a(M) = {pa_m}, M·B = {mb}"));
    }
    let g_c_hat = hurwitz_double_cover_genus(pa_m as u64, mb as u64).map_err(err)?;
    let d = 2 * dot(&m, &l)? + d_corr;
    let l2 = dot(&l, &l)?;
    let lb = dot(&l, &r.branch_class)?;
    let pa_l = arithmetic_genus(l2, dot(&l, &r.canonical())?);
    if pa_l < 0 || lb < 0 {
        return Err(format!("p_a(L) = {pa_l}, L·B = {lb}"));
    }
    let kh = 2 * dot(&kd, &l)? - kh_corr;
    put(c, "g_C_hat", g_c_hat);
    put(c, "d", d);
    put(c, "H2", 2 * l2);
    put(c, "KH", kh);
    put(c, "g_H", hurwitz_double_cover_genus(pa_l as u64, lb as u64).map_err(err)?);
    let k2 = c.get("K2_S").and_then(Value::as_i64).ok_or("K2_S missing")?;
    let check = k2 + 2 * kh + 2 * l2;
    put(c, "base_points_check", check);
    if check != base_points {
        return Err(format!("(K_S+H)² = {check} but the pencil has {base_points} base points"));
    }
    Ok(())
}

fn threefold_standard(pair: &SurfacePair, c: &mut Computed) -> Result<ThreefoldReport, String> {
    let lemma = check_lemma_5_3(pair).map_err(err)?;
    put(c, "lemma_h0_K_plus_H", lemma.h0_k_plus_h);
    if let Some(ok) = lemma.d_matches {
        put(c, "lemma_d_matches", ok);
    }
    if let Some(ok) = lemma.g_c_hat_ok {
        put(c, "lemma_g_C_hat_ok", ok);
    }
    let t = standard_construction(pair).map_err(err)?;
    put(c, "pg_F", t.pg_f);
    put(c, "pg_X", t.pg_x);
    put(c, "K3_X", t.k3_x);
    put(c, "chi_omega_X", t.chi_omega_x);
    Ok(t)
}

fn bounds_stage(t: &ThreefoldReport, c: &mut Computed) -> Result<(), String> {
    let (Some(k3), Some(chi)) = (t.k3_x, t.chi_omega_x) else { return Err("K³ or χ(ω) missing".into()) };
    let ok = miyaoka_yau_check(&q(k3), &q(chi));
    put(c, "miyaoka_yau", ok);
    put(c, "miyaoka_yau_rhs", 72 * chi);
    if ok {
        Ok(())
    } else {
        Err(format!("K³ = {k3} > 72·χ(ω) = {}", 72 * chi))
    }
}

const PAIR_KEYS: [&str; 9] = ["K2_S", "chi_S", "pg_S", "q_S", "H2", "KH", "g_H", "g_C_hat", "d"];

fn verify_variant(file: &ConstructionFile, sibling: Option<&ConstructionReport>) -> ConstructionReport {
    let mut run = Runner::default();
    let sib = file.sibling.clone().unwrap_or_default();
    let pair = run.stage("sibling", true, |c| {
        let rep = sibling.ok_or_else(|| format!("no report for sibling {sib}"))?;
        if rep.id != sib {
            return Err(format!("sibling report is for {}, expected {sib}", rep.id));
        }
        for k in PAIR_KEYS {
            if let Some(v) = rep.computed.get(k) {
                c.insert(k.to_string(), v.clone());
            }
        }
        put(c, "sibling_passed", rep.passed);
        assemble_surface_pair(&rep.computed, &sib).map_err(err)
    });
    let nu = file.nu.unwrap_or(0);
    match pair {
        Some(p) => {
            run.stage("threefold", true, |c| {
                let t = variant_construction(&p, nu).map_err(err)?;
                put(c, "nu", nu);
                put(c, "g_F", t.g_f);
                put(c, "pg_X", t.pg_x);
                Ok(())
            });
        }
        None => run.skip("threefold", "an earlier stage failed"),
    }
    run.skip("bounds", "no bound is stated for a single curve family member");
    run.finish(file, Vec::new(), Vec::new())
}

fn verify_literature(file: &ConstructionFile, pair: &SurfacePair) -> ConstructionReport {
    let mut run = Runner::default();
    run.stage("parse", true, |c| {
        put(c, "provenance", &pair.provenance);
        put(c, "K2_S", pair.k2_s);
        put(c, "chi_S", pair.chi_s);
        put(c, "pg_S", pair.pg_s);
        put(c, "q_S", pair.q_s);
        put(c, "H2", pair.h2);
        put(c, "KH", pair.kh);
        put(c, "g_H", pair.g_h);
        put(c, "g_C_hat", pair.g_c_hat);
        put(c, "d", pair.d);
        Ok(())
    });
    let t = run.stage("threefold", true, |c| threefold_standard(pair, c));
    match t {
        Some(t) => {
            run.stage("bounds", false, |c| bounds_stage(&t, c));
        }
        None => run.skip("bounds", "no 3-fold data"),
    }
    run.finish(file, Vec::new(), Vec::new())
}
