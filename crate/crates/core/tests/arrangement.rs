use fibra::algebra::{parse_and_homogenize, Base, Fe, Field, Form, NumberField};
use fibra::arrangement::*;

fn form(s: &str, deg: (u32, u32), k: &Field) -> Form {
    parse_and_homogenize(s, Base::P1xP1, deg, k, &Default::default()).unwrap()
}

/// The branch divisor R₁ on ℙ¹×ℙ¹ over ℚ(i) built from four (1,1)-curves,
/// six fibres and the pencil member D = D₁ + 2D₂ + 3D₃.
fn campedelli_branch() -> (Field, Arrangement, Vec<SurfPoint>) {
    let k = NumberField::from_ints(&[1, 0, 1]).unwrap();
    let c = [form("x-y", (1, 1), &k), form("x+y", (1, 1), &k), form("xy-1", (1, 1), &k), form("xy+1", (1, 1), &k)];
    let f = [
        form("x", (1, 0), &k),
        form("1", (1, 0), &k),
        form("x-1", (1, 0), &k),
        form("x+1", (1, 0), &k),
        form("x-t", (1, 0), &k),
        form("x+t", (1, 0), &k),
    ];
    let prod = |xs: &[&Form]| xs[1..].iter().fold(xs[0].clone(), |acc, g| acc.mul(g, &k));
    let d1 = prod(&[&c[0], &c[1], &f[0], &f[1]]);
    let d2 = prod(&[&c[0], &c[2], &f[2], &f[3]]);
    let d3 = prod(&[&c[1], &c[2], &f[4], &f[5]]);
    let d = d1.add(&d2.scale(&Fe::from_int(&k, 2), &k), &k).add(&d3.scale(&Fe::from_int(&k, 3), &k), &k);
    let mut comps = Vec::new();
    for (i, g) in c.iter().enumerate() {
        comps.push(Component { name: format!("C{}", i + 1), form: g.clone(), coeff: 1 });
    }
    for (i, g) in f.iter().enumerate() {
        comps.push(Component { name: format!("F{}", i + 1), form: g.clone(), coeff: 1 });
    }
    comps.push(Component { name: "D".into(), form: d, coeff: 1 });
    let arr = Arrangement::new(Base::P1xP1, k.clone(), comps).unwrap();
    let e = |v: i64| Some(Fe::from_int(&k, v));
    let i = Fe::generator(&k);
    let pts = vec![
        SurfPoint::p1p1_affine(&k, e(0), e(0)),
        SurfPoint::p1p1_affine(&k, None, None),
        SurfPoint::p1p1_affine(&k, e(0), None),
        SurfPoint::p1p1_affine(&k, None, e(0)),
        SurfPoint::p1p1_affine(&k, e(1), e(1)),
        SurfPoint::p1p1_affine(&k, e(-1), e(-1)),
        SurfPoint::p1p1_affine(&k, e(1), e(-1)),
        SurfPoint::p1p1_affine(&k, e(-1), e(1)),
        SurfPoint::p1p1_affine(&k, Some(i.clone()), Some(i.clone())),
        SurfPoint::p1p1_affine(&k, Some(-&i), Some(-&i)),
        SurfPoint::p1p1_affine(&k, Some(i.clone()), Some(-&i)),
        SurfPoint::p1p1_affine(&k, Some(-&i), Some(i.clone())),
    ];
    (k, arr, pts)
}

#[test]
fn twelve_quadruple_points() {
    let (_, arr, pts) = campedelli_branch();
    assert_eq!(arr.class(), (14, 6));
    for p in &pts {
        let rec = classify_singularity(&arr, p).unwrap();
        assert_eq!(rec.total_mult, 4, "{p}");
        assert_eq!(rec.sing_type, SingType::OrdinaryQuadruple, "{p}");
        assert_eq!(rec.component_mults.get("D"), Some(&1));
    }
    assert!(strict_transform_smooth_after_blowup(&arr, &pts).unwrap());
}

#[test]
fn singular_locus_is_certified() {
    let (_, arr, pts) = campedelli_branch();
    let cert = singular_locus_certify(&arr, &pts).unwrap();
    assert_eq!(cert.pairs.len(), 55);
    assert!(cert.component_singular.iter().all(|(_, v)| v.is_empty()));
}

#[test]
fn dropping_a_point_is_detected() {
    let (_, arr, mut pts) = campedelli_branch();
    pts.remove(1);
    let err = singular_locus_certify(&arr, &pts).unwrap_err();
    assert!(matches!(err, ArrangementError::IncompleteList { .. }), "{err}");
}

#[test]
fn generic_point_has_multiplicity_zero() {
    let (k, arr, _) = campedelli_branch();
    let p = SurfPoint::p1p1_affine(&k, Some(Fe::from_int(&k, 2)), Some(Fe::from_int(&k, 3)));
    assert_eq!(arr.mult_at(&p).unwrap(), 0);
}
