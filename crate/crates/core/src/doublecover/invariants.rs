use super::{CoverData, CoverError};
use crate::piclattice::{DivClass, SurfaceLattice};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverInvariants {
    pub chi: i64,
    #[serde(rename = "K2")]
    pub k2: i64,
    pub pg: u64,
    pub q: u64,
    pub minus_one_contractions: u64,
    #[serde(rename = "K2_minimal")]
    pub k2_minimal: i64,
}

/// Invariants of the smooth double cover `X → Y` given by `(δ, B ∼ 2δ)`:
/// `χ(O_X) = 2χ(O_Y) + ½δ(δ+K)`, `K_X² = 2(K+δ)²`, `p_g(X) = p_g(Y) + h⁰(K+δ)`.
pub fn smooth_cover_invariants(
    lat: &SurfaceLattice,
    chi_y: i64,
    k: &DivClass,
    delta: &DivClass,
    pg_y: u64,
    h0_k_plus_delta: u64,
) -> Result<CoverInvariants, CoverError> {
    let (chi, k2) = cover_chi_k2(lat, chi_y, k, delta)?;
    let pg = pg_y + h0_k_plus_delta;
    let q = 1 + pg as i64 - chi;
    if q < 0 {
        return Err(CoverError::NegativeIrregularity { chi, pg });
    }
    Ok(CoverInvariants { chi, k2, pg, q: q as u64, minus_one_contractions: 0, k2_minimal: k2 })
}

/// `(χ(O_X), K_X²)` alone; these also make sense for the split cover.
pub fn cover_chi_k2(lat: &SurfaceLattice, chi_y: i64, k: &DivClass, delta: &DivClass) -> Result<(i64, i64), CoverError> {
    let chi = 2 * chi_y + lat.intersect(delta, &delta.add(k))? / 2;
    Ok((chi, 2 * lat.self_intersection(&k.add(delta))?))
}

impl CoverData {
    /// [`smooth_cover_invariants`] for a resolved cover of a rational
    /// surface, with the (−1)-curves from the branch contracted.
    pub fn invariants(&self, h0_k_plus_delta: u64) -> Result<CoverInvariants, CoverError> {
        if !self.resolved {
            return Err(CoverError::BranchNotSmooth);
        }
        let inv = smooth_cover_invariants(&self.ambient, 1, &self.canonical(), &self.delta, 0, h0_k_plus_delta)?;
        Ok(contract_minus_one(inv, self.minus_one_curves()? as u64))
    }
}

/// Class data of the reduced preimage of a branch component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Halved {
    pub self_intersection: i64,
    pub genus: i64,
}

/// The reduced preimage `Ê` of a branch component `C̃` satisfies
/// `2Ê = π*C̃`, so `Ê² = ½C̃²`, and `Ê ≅ C̃`.
pub fn branch_component_halving(lat: &SurfaceLattice, c: &DivClass) -> Result<Halved, CoverError> {
    let c2 = lat.self_intersection(c)?;
    if c2 % 2 != 0 {
        return Err(CoverError::OddSelfIntersection(c2));
    }
    Ok(Halved { self_intersection: c2 / 2, genus: lat.adjunction_genus(c)? })
}

/// Contracts `n` disjoint (−1)-curves.
pub fn contract_minus_one(inv: CoverInvariants, n: u64) -> CoverInvariants {
    CoverInvariants { minus_one_contractions: inv.minus_one_contractions + n, k2_minimal: inv.k2_minimal + n as i64, ..inv }
}

/// Genus of a double cover of a curve of genus `g_base` branched at `r`
/// points: `2g − 2 = 2(2g_base − 2) + r`.
pub fn hurwitz_double_cover_genus(g_base: u64, branch_points: u64) -> Result<u64, CoverError> {
    if !branch_points.is_multiple_of(2) {
        return Err(CoverError::OddBranchCount(branch_points));
    }
    let g = 2 * g_base as i64 - 1 + branch_points as i64 / 2;
    Ok(g.max(0) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Base, Fe, NumberField};
    use crate::arrangement::SurfPoint;

    fn twelve() -> SurfaceLattice {
        let q = NumberField::rationals();
        (0..12).fold(SurfaceLattice::new(Base::P1xP1), |l, i| {
            let p = SurfPoint::p1p1_affine(&q, Some(Fe::from_int(&q, i)), Some(Fe::from_int(&q, 2 * i + 1)));
            l.blow_up(&p, &format!("P{i}")).unwrap()
        })
    }

    #[test]
    fn campedelli_numbers() {
        let l = twelve();
        let mut delta = l.base_class((7, 3));
        delta.exc = vec![-2; 12];
        let inv = smooth_cover_invariants(&l, 1, &l.canonical(), &delta, 0, 0).unwrap();
        assert_eq!((inv.chi, inv.k2, inv.pg, inv.q), (1, -4, 0, 0));
        let m = contract_minus_one(inv.clone(), 6);
        assert_eq!(m.k2_minimal, 2);
        assert_eq!(m.chi, inv.chi);
        assert_eq!(contract_minus_one(inv.clone(), 0), inv);
    }

    #[test]
    fn trivial_cover() {
        let l = twelve();
        let (chi, k2) = cover_chi_k2(&l, 1, &l.canonical(), &l.zero()).unwrap();
        assert_eq!(chi, 2);
        assert_eq!(k2, 2 * l.self_intersection(&l.canonical()).unwrap());
        // two disjoint copies: χ = 1 − q + p_g fails
        assert!(matches!(smooth_cover_invariants(&l, 1, &l.canonical(), &l.zero(), 0, 0), Err(CoverError::NegativeIrregularity { .. })));
    }

    #[test]
    fn halving() {
        let l = twelve();
        let mut f = l.base_class((1, 0));
        f.exc[0] = -1;
        f.exc[1] = -1;
        assert_eq!(branch_component_halving(&l, &f).unwrap(), Halved { self_intersection: -1, genus: 0 });
        assert_eq!(branch_component_halving(&l, &l.base_class((1, 0))).unwrap().self_intersection, 0);
        let mut odd = l.base_class((1, 0));
        odd.exc[0] = -1;
        odd.exc[1] = -1;
        odd.exc[2] = -1;
        assert_eq!(branch_component_halving(&l, &odd), Err(CoverError::OddSelfIntersection(-3)));
    }

    #[test]
    fn hurwitz() {
        assert_eq!(hurwitz_double_cover_genus(0, 14).unwrap(), 6);
        assert_eq!(hurwitz_double_cover_genus(0, 2).unwrap(), 0);
        assert_eq!(hurwitz_double_cover_genus(6, 4).unwrap(), 13);
        assert_eq!(hurwitz_double_cover_genus(0, 3), Err(CoverError::OddBranchCount(3)));
    }
}
