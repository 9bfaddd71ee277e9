//! Induced actions on invariant sets and actions on cosets.

use std::collections::HashMap;

use crate::caps::{self, Caps};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::hom::Homomorphism;
use crate::perm::{Permutation, Point};

/// The action of `source` on an invariant point set `domain`; point `i` of
/// the image is `domain[i]`.
#[derive(Debug)]
pub struct InducedAction {
    pub source: PermGroup,
    pub domain: Vec<Point>,
    pub image: PermGroup,
    pub kernel: PermGroup,
    hom: Homomorphism,
}

impl InducedAction {
    pub fn hom(&self) -> &Homomorphism {
        &self.hom
    }

    /// Position of a source point in the domain.
    pub fn local_point(&self, x: Point) -> Option<Point> {
        self.domain.iter().position(|&d| d == x).map(|i| i as Point)
    }
}

pub fn induced_action(group: &PermGroup, domain: &[Point]) -> Result<InducedAction> {
    let n = group.degree();
    let mut position = vec![None; n];
    for (i, &x) in domain.iter().enumerate() {
        if x as usize >= n {
            return Err(Error::PointOutOfRange { point: x, degree: n });
        }
        position[x as usize] = Some(i as u32);
    }
    let images = group
        .generators()
        .iter()
        .map(|g| g.restrict(domain, &position).ok_or(Error::NotInvariant))
        .collect::<Result<Vec<_>>>()?;
    let hom = Homomorphism::new(group, domain.len(), images)?;
    let kernel = hom.kernel();
    Ok(InducedAction {
        source: group.clone(),
        domain: domain.to_vec(),
        image: hom.image_group().clone(),
        kernel,
        hom,
    })
}

/// The action of `group` by right multiplication on the right cosets of
/// `subgroup`. Coset 0 is the subgroup itself.
#[derive(Debug)]
pub struct CosetAction {
    pub source: PermGroup,
    pub subgroup: PermGroup,
    /// Canonical representative of each coset.
    pub representatives: Vec<Permutation>,
    pub image: PermGroup,
    hom: Homomorphism,
}

impl CosetAction {
    pub fn hom(&self) -> &Homomorphism {
        &self.hom
    }

    pub fn degree(&self) -> usize {
        self.representatives.len()
    }

    /// The core of the subgroup, i.e. the kernel of the action.
    pub fn kernel(&self) -> PermGroup {
        self.hom.kernel()
    }
}

pub fn coset_action(group: &PermGroup, subgroup: &PermGroup) -> Result<CosetAction> {
    coset_action_capped(group, subgroup, caps::get().index)
}

pub fn coset_action_capped(group: &PermGroup, subgroup: &PermGroup, cap: u128) -> Result<CosetAction> {
    if !subgroup.is_subgroup_of(group) {
        return Err(Error::NotSubgroup("coset action needs a subgroup".into()));
    }
    let index = group.order() / subgroup.order();
    Caps::check("coset index", cap, index)?;
    let base = group.base();
    let sub = PermGroup::with_base_prefix(group.degree(), subgroup.generators().to_vec(), &base);
    let canon = |g: &Permutation| -> (Permutation, Vec<Point>) {
        let mut c = g.clone();
        for level in &sub.chain().levels {
            let best = (0..level.orbit.len())
                .min_by_key(|&i| c.apply(level.orbit[i]))
                .unwrap_or(0);
            if best != 0 {
                c = level.rep(best).mul_unchecked(&c);
            }
        }
        let key = base.iter().map(|&b| c.apply(b)).collect();
        (c, key)
    };
    let mut reps = Vec::new();
    let mut index_of: HashMap<Vec<Point>, u32> = HashMap::new();
    let (c0, k0) = canon(&group.identity());
    reps.push(c0);
    index_of.insert(k0, 0);
    let gens = group.generators();
    let mut images: Vec<Vec<Point>> = vec![Vec::with_capacity(index as usize); gens.len()];
    let mut i = 0;
    while i < reps.len() {
        for (s, img) in gens.iter().zip(images.iter_mut()) {
            let (c, key) = canon(&reps[i].mul_unchecked(s));
            let next = reps.len() as u32;
            let j = *index_of.entry(key).or_insert(next);
            if j == next {
                reps.push(c);
            }
            img.push(j);
        }
        i += 1;
    }
    debug_assert_eq!(reps.len() as u128, index);
    let images = images
        .into_iter()
        .map(Permutation::from_images)
        .collect::<Result<Vec<_>>>()?;
    let hom = Homomorphism::new(group, reps.len(), images)?;
    Ok(CosetAction {
        source: group.clone(),
        subgroup: subgroup.clone(),
        representatives: reps,
        image: hom.image_group().clone(),
        hom,
    })
}

/// The faithful quotient `group / normal` as the regular action on cosets of
/// `normal`, together with the projection.
pub fn quotient(group: &PermGroup, normal: &PermGroup) -> Result<CosetAction> {
    if !normal.is_normal_in(group) {
        return Err(Error::NotSubgroup("quotient by a non-normal subgroup".into()));
    }
    coset_action(group, normal)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, cycles: &[&[Point]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn s4() -> PermGroup {
        PermGroup::new(4, vec![p(4, &[&[0, 1]]), p(4, &[&[0, 1, 2, 3]])]).unwrap()
    }

    #[test]
    fn natural_and_sign_coset_actions() {
        let g = s4();
        let s3 = g.point_stabilizer(3).unwrap();
        let act = coset_action(&g, &s3).unwrap();
        assert_eq!(act.degree(), 4);
        assert!(act.kernel().is_trivial());
        let a4 = PermGroup::new(4, vec![p(4, &[&[0, 1, 2]]), p(4, &[&[1, 2, 3]])]).unwrap();
        let sign = coset_action(&g, &a4).unwrap();
        assert_eq!(sign.degree(), 2);
        assert!(sign.kernel().same_group(&a4));
    }

    #[test]
    fn regular_representation() {
        let g = s4();
        let reg = coset_action(&g, &PermGroup::trivial(4)).unwrap();
        assert_eq!(reg.degree(), 24);
        for x in 0..24 {
            assert!(reg.image.point_stabilizer(x).unwrap().is_trivial());
        }
    }

    #[test]
    fn induced_on_invariant_set() {
        let g = PermGroup::new(6, vec![p(6, &[&[0, 1], &[3, 4]]), p(6, &[&[0, 1, 2]])]).unwrap();
        let act = induced_action(&g, &[0, 1, 2]).unwrap();
        assert_eq!(act.image.order() * act.kernel.order(), g.order());
        assert!(induced_action(&g, &[0, 1]).is_err());
        let faithful = induced_action(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert!(faithful.kernel.is_trivial());
    }

    #[test]
    fn non_subgroup_rejected() {
        let g = PermGroup::new(4, vec![p(4, &[&[0, 1, 2, 3]])]).unwrap();
        let h = PermGroup::new(4, vec![p(4, &[&[0, 1]])]).unwrap();
        assert!(coset_action(&g, &h).is_err());
        assert!(matches!(
            coset_action_capped(&s4(), &PermGroup::trivial(4), 10),
            Err(Error::CapExceeded { .. })
        ));
    }
}
