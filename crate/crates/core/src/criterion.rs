//! Center-fixing isomorphism tests for the two skew families, stated in
//! terms of index permutations and axis maps rather than a search over
//! points.

use crate::constructions::{map_axis, SkewPerspectiveSpec};
use crate::error::{Error, Result};
use crate::perm::{num_pairs, PairPermutation, PairTag, Permutation};
use crate::structure::{permutation_skew, perspective_centers};

fn axis_maps_onto(s1: &SkewPerspectiveSpec, s2: &SkewPerspectiveSpec, d: &PairPermutation) -> bool {
    map_axis(&s1.axis, d).map(|a| a.lines() == s2.axis.lines()).unwrap_or(false)
}

fn point_map(spec: &SkewPerspectiveSpec, phi: &Permutation, swap: bool, pairs: &PairPermutation) -> Vec<usize> {
    let ix = spec.index();
    let mut m = vec![0; ix.total()];
    for i in 0..spec.n {
        let j = phi.apply(i);
        if swap {
            m[ix.a(i)] = ix.b(j);
            m[ix.b(i)] = ix.a(j);
        } else {
            m[ix.a(i)] = ix.a(j);
            m[ix.b(i)] = ix.b(j);
        }
    }
    for u in 0..num_pairs(spec.n) {
        m[ix.c_index(u)] = ix.c_index(pairs.apply(u));
    }
    m
}

/// Permutation skews: either `φσ₁ = σ₂φ` with `φ̄` an axis isomorphism, or
/// the A/B exchange `φσ₁ = σ₂⁻¹φ` with `(σ₂⁻¹φ)‾` an axis isomorphism.
/// Returns the point map of `s1.build() → s2.build()`.
pub fn criterion_iso_perm(s1: &SkewPerspectiveSpec, s2: &SkewPerspectiveSpec) -> Result<Option<Vec<usize>>> {
    let sigma1 = permutation_skew(&s1.delta).ok_or(Error::NotPermutationSkew)?;
    let sigma2 = permutation_skew(&s2.delta).ok_or(Error::NotPermutationSkew)?;
    if s1.n != s2.n {
        return Ok(None);
    }
    let s2inv = sigma2.inverse();
    for phi in Permutation::all(s1.n) {
        let lhs = phi.compose(&sigma1);
        if lhs == sigma2.compose(&phi) {
            let bar = PairPermutation::induced(&phi);
            if axis_maps_onto(s1, s2, &bar) {
                return Ok(Some(point_map(s1, &phi, false, &bar)));
            }
        }
        if lhs == s2inv.compose(&phi) {
            let d = PairPermutation::induced(&s2inv.compose(&phi));
            if axis_maps_onto(s1, s2, &d) {
                return Ok(Some(point_map(s1, &phi, true, &d)));
            }
        }
    }
    Ok(None)
}

fn kappa_part(spec: &SkewPerspectiveSpec) -> Option<Permutation> {
    match spec.delta.tag() {
        PairTag::KappaComposed(p) => Some(p.clone()),
        _ => match crate::structure::classify_pair_skew(&spec.delta) {
            crate::structure::SkewClass::ComplementOf(p) => Some(p),
            _ => None,
        },
    }
}

/// Skews `φ̄κ` on `I₄`: either `φ₂ = αφ₁α⁻¹` with `ᾱ` an axis isomorphism, or
/// the A/B exchange `φ₂⁻¹ = αφ₁α⁻¹` with `κ(φ₂⁻¹α)‾` an axis isomorphism.
pub fn criterion_iso_kappa(s1: &SkewPerspectiveSpec, s2: &SkewPerspectiveSpec) -> Result<Option<Vec<usize>>> {
    let not_kappa = || Error::InvalidArgument("criterion requires κ-composed skews".into());
    let phi1 = kappa_part(s1).ok_or_else(not_kappa)?;
    let phi2 = kappa_part(s2).ok_or_else(not_kappa)?;
    let phi2inv = phi2.inverse();
    for alpha in Permutation::all(4) {
        let conj = phi1.conjugate_by(&alpha);
        if conj == phi2 {
            let bar = PairPermutation::induced(&alpha);
            if axis_maps_onto(s1, s2, &bar) {
                return Ok(Some(point_map(s1, &alpha, false, &bar)));
            }
        }
        if conj == phi2inv {
            let d = PairPermutation::kappa_composed(&phi2inv.compose(&alpha))?;
            if axis_maps_onto(s1, s2, &d) {
                return Ok(Some(point_map(s1, &alpha, true, &d)));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Permutation,
    Kappa,
    Other,
}

pub fn family_of(spec: &SkewPerspectiveSpec) -> Family {
    if permutation_skew(&spec.delta).is_some() {
        Family::Permutation
    } else if spec.n == 4 && kappa_part(spec).is_some() {
        Family::Kappa
    } else {
        Family::Other
    }
}

/// Dispatches on the family; specs from different families are never
/// isomorphic by this test.
pub fn criterion_iso(s1: &SkewPerspectiveSpec, s2: &SkewPerspectiveSpec) -> Result<Option<Vec<usize>>> {
    match (family_of(s1), family_of(s2)) {
        (Family::Permutation, Family::Permutation) => criterion_iso_perm(s1, s2),
        (Family::Kappa, Family::Kappa) => criterion_iso_kappa(s1, s2),
        (Family::Other, _) | (_, Family::Other) => Err(Error::InvalidArgument("skew outside both families".into())),
        _ => Ok(None),
    }
}

/// The criterion applied after moving the center of `s1` to every point
/// that carries a perspective presentation with an induced skew. This covers
/// isomorphisms that do not fix the center.
pub fn criterion_iso_any_center(s1: &SkewPerspectiveSpec, s2: &SkewPerspectiveSpec) -> Result<Option<Vec<usize>>> {
    if let Some(m) = criterion_iso(s1, s2)? {
        return Ok(Some(m));
    }
    if family_of(s1) != Family::Permutation || family_of(s2) != Family::Permutation {
        return Ok(None);
    }
    let c1 = s1.build();
    for pres in perspective_centers(&c1, s1.n) {
        let r = &pres.presentation;
        if family_of(&r.spec) != Family::Permutation {
            continue;
        }
        if let Some(m) = criterion_iso_perm(&r.spec, s2)? {
            let mut out = vec![0; m.len()];
            for (k, &old) in r.point_map.iter().enumerate() {
                out[old] = m[k];
            }
            return Ok(Some(out));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::grassmannian;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s, 4).unwrap()
    }

    fn perm_spec(s: &str) -> SkewPerspectiveSpec {
        SkewPerspectiveSpec::induced(&p(s), &grassmannian(4).unwrap()).unwrap()
    }

    fn kappa_spec(s: &str) -> SkewPerspectiveSpec {
        SkewPerspectiveSpec::kappa(&p(s), &grassmannian(4).unwrap()).unwrap()
    }

    fn check(s1: &SkewPerspectiveSpec, s2: &SkewPerspectiveSpec, m: Option<Vec<usize>>) -> bool {
        match m {
            Some(m) => {
                assert!(s1.build().is_isomorphism(&s2.build(), &m));
                true
            }
            None => false,
        }
    }

    #[test]
    fn rotated_cycles_are_isomorphic() {
        let (a, b) = (perm_spec("(1,2,3,4)"), perm_spec("(2,3,4,1)"));
        assert!(check(&a, &b, criterion_iso_perm(&a, &b).unwrap()));
        let (a, b) = (perm_spec("(1,2)(3,4)"), perm_spec("(1,2,3,4)"));
        assert!(!check(&a, &b, criterion_iso_perm(&a, &b).unwrap()));
    }

    #[test]
    fn inverse_skews_are_isomorphic() {
        for s in ["(1,2,3,4)", "(1)(2,3,4)", "(1,2)(3,4)"] {
            let a = perm_spec(s);
            let b = SkewPerspectiveSpec::induced(&p(s).inverse(), &grassmannian(4).unwrap()).unwrap();
            assert!(check(&a, &b, criterion_iso_perm(&a, &b).unwrap()));
        }
    }

    #[test]
    fn kappa_cases() {
        let (a, b) = (kappa_spec("(1)(2,3,4)"), kappa_spec("(2)(1,3,4)"));
        assert!(check(&a, &b, criterion_iso_kappa(&a, &b).unwrap()));
        let (a, b) = (kappa_spec("id"), kappa_spec("(1,2)(3,4)"));
        assert!(!check(&a, &b, criterion_iso_kappa(&a, &b).unwrap()));
        assert_eq!(criterion_iso(&kappa_spec("id"), &perm_spec("id")).unwrap(), None);
    }
}
