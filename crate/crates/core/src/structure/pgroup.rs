use std::collections::HashSet;

use super::closure::{center, centralizer, normal_closure, normalizer};
use super::sylow::{core_p_prime, sylow};
use crate::arith::prime_power;
use crate::caps::{self, Caps};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// The prime `p` with `|P| = p^k`, or `None` for the trivial group.
pub fn p_group_prime(group: &PermGroup) -> Result<Option<u128>> {
    if group.is_trivial() {
        return Ok(None);
    }
    match prime_power(group.order()) {
        Some((p, _)) => Ok(Some(p)),
        None => Err(Error::NotPGroup(format!("order {}", group.order()))),
    }
}

pub fn is_elementary_abelian(group: &PermGroup) -> bool {
    match p_group_prime(group) {
        Ok(None) => true,
        Ok(Some(p)) => {
            group.is_abelian() && group.generators().iter().all(|g| g.pow(p as u64).is_identity())
        }
        Err(_) => false,
    }
}

/// `Φ(P) = P'⟨g^p⟩`, the normal closure of generator commutators and p-th
/// powers of generators.
pub fn frattini_p(group: &PermGroup) -> Result<PermGroup> {
    let Some(p) = p_group_prime(group)? else {
        return Ok(group.clone());
    };
    let gens = group.generators();
    let mut seeds = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        seeds.push(a.pow(p as u64));
        for b in &gens[i + 1..] {
            seeds.push(a.commutator(b));
        }
    }
    seeds.retain(|x| !x.is_identity());
    normal_closure(group, &seeds)
}

/// `ΩZ(P)`, generated by the central elements of order `p`.
pub fn omega_center(group: &PermGroup) -> Result<PermGroup> {
    let Some(p) = p_group_prime(group)? else {
        return Ok(group.clone());
    };
    let z = center(group)?;
    z.filter_subgroup(|g| g.pow(p as u64).is_identity())
}

/// All elementary abelian subgroups of maximal order. Each contains `ΩZ(P)`,
/// so the search grows subgroups from there by adjoining commuting elements
/// of order `p`, pruning branches that cannot reach the best order so far.
pub fn elementary_abelian_of_max_order(group: &PermGroup) -> Result<Vec<PermGroup>> {
    let Some(p) = p_group_prime(group)? else {
        return Ok(vec![group.clone()]);
    };
    Caps::check("thompson search", caps::get().thompson, group.order())?;
    let omega = omega_center(group)?;
    let order_p: Vec<Permutation> = group
        .elements_streamed_capped(u128::MAX)?
        .filter(|g| !g.is_identity() && g.pow(p as u64).is_identity() && !omega.contains(g))
        .collect();
    let commute = |a: &Permutation, b: &Permutation| a.mul_unchecked(b) == b.mul_unchecked(a);

    struct Search<'a> {
        group: &'a PermGroup,
        elems: &'a [Permutation],
        best: u128,
        found: Vec<PermGroup>,
        seen: HashSet<Vec<u128>>,
    }
    fn key(group: &PermGroup, a: &PermGroup) -> Vec<u128> {
        let mut k: Vec<u128> = a
            .elements_streamed_capped(u128::MAX)
            .expect("uncapped")
            .map(|g| group.rank(&g).expect("subgroup element"))
            .collect();
        k.sort_unstable();
        k
    }
    fn grow(s: &mut Search, a: PermGroup, cands: Vec<usize>, commute: &dyn Fn(&Permutation, &Permutation) -> bool) {
        if a.order() + (cands.len() as u128) < s.best {
            return;
        }
        if !s.seen.insert(key(s.group, &a)) {
            return;
        }
        if a.order() > s.best {
            s.best = a.order();
            s.found.clear();
        }
        if a.order() == s.best {
            s.found.push(a.clone());
        }
        for (i, &c) in cands.iter().enumerate() {
            let b = a.with_generator(&s.elems[c]);
            let next: Vec<usize> = cands[i + 1..]
                .iter()
                .chain(&cands[..i])
                .copied()
                .filter(|&d| !b.contains(&s.elems[d]) && commute(&s.elems[c], &s.elems[d]))
                .collect();
            grow(s, b, next, commute);
        }
    }

    let mut search = Search {
        group,
        elems: &order_p,
        best: 0,
        found: Vec::new(),
        seen: HashSet::new(),
    };
    grow(&mut search, omega, (0..order_p.len()).collect(), &commute);
    // The search also records non-maximal subgroups of the running best.
    let best = search.best;
    Ok(search.found.into_iter().filter(|a| a.order() == best).collect())
}

/// `J(P)`, the join of the elementary abelian subgroups of maximal order.
pub fn thompson(group: &PermGroup) -> Result<PermGroup> {
    let mut j = PermGroup::trivial(group.degree());
    for a in elementary_abelian_of_max_order(group)? {
        j = j.join(&a);
    }
    Ok(j)
}

/// `J(F)` for a prime `p`: the join of `J(S)` over Sylow p-subgroups `S`,
/// which is the normal closure of `J(S)` for one of them.
pub fn thompson_of_group(group: &PermGroup, p: u128) -> Result<PermGroup> {
    let s = sylow(group, p)?;
    let j = thompson(&s)?;
    normal_closure(group, j.generators())
}

/// Literal test of `F = O_{p'}(F) C_F(ΩZ(S)) N_F(J(S))` for one Sylow
/// p-subgroup `S`. `O_{p'}(F)` is normal, so the first two factors form a
/// subgroup and the size of the triple product is `|OC||N| / |OC ∩ N|`.
pub fn is_thompson_factorizable(group: &PermGroup, p: u128) -> Result<bool> {
    let s = sylow(group, p)?;
    let o = core_p_prime(group, p)?;
    let z = omega_center(&s)?;
    let c = centralizer(group, z.generators())?;
    let j = thompson(&s)?;
    let n = normalizer(group, &j)?;
    let oc = o.join(&c);
    let meet = oc.intersection(&n)?;
    Ok(oc.order() * n.order() / meet.order() == group.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Point;

    fn p(n: usize, cycles: &[&[Point]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn q8() -> PermGroup {
        let i = p(8, &[&[0, 2, 1, 3], &[4, 6, 5, 7]]);
        let j = p(8, &[&[0, 4, 1, 5], &[2, 7, 3, 6]]);
        PermGroup::new(8, vec![i, j]).unwrap()
    }

    fn d4() -> PermGroup {
        PermGroup::new(4, vec![p(4, &[&[0, 1, 2, 3]]), p(4, &[&[0, 2]])]).unwrap()
    }

    #[test]
    fn frattini_and_omega() {
        assert_eq!(frattini_p(&q8()).unwrap().order(), 2);
        let c9 = PermGroup::new(9, vec![p(9, &[&[0, 1, 2, 3, 4, 5, 6, 7, 8]])]).unwrap();
        assert_eq!(frattini_p(&c9).unwrap().order(), 3);
        assert_eq!(omega_center(&c9).unwrap().order(), 3);
        assert_eq!(omega_center(&q8()).unwrap().order(), 2);
        let v4 = PermGroup::new(4, vec![p(4, &[&[0, 1], &[2, 3]]), p(4, &[&[0, 2], &[1, 3]])]).unwrap();
        assert!(frattini_p(&v4).unwrap().is_trivial());
        assert!(omega_center(&v4).unwrap().same_group(&v4));
        assert!(is_elementary_abelian(&v4));
        assert!(!is_elementary_abelian(&c9));
        assert!(frattini_p(&PermGroup::new(6, vec![p(6, &[&[0, 1, 2, 3, 4, 5]])]).unwrap()).is_err());
    }

    #[test]
    fn thompson_subgroups() {
        let j = thompson(&q8()).unwrap();
        assert_eq!(j.order(), 2);
        let a = elementary_abelian_of_max_order(&d4()).unwrap();
        assert_eq!(a.len(), 2);
        assert!(thompson(&d4()).unwrap().same_group(&d4()));
        let v4 = PermGroup::new(4, vec![p(4, &[&[0, 1], &[2, 3]]), p(4, &[&[0, 2], &[1, 3]])]).unwrap();
        assert!(thompson(&v4).unwrap().same_group(&v4));
        let s4 = PermGroup::new(4, vec![p(4, &[&[0, 1]]), p(4, &[&[0, 1, 2, 3]])]).unwrap();
        assert_eq!(thompson_of_group(&s4, 2).unwrap().order(), 24);
        // S4 with p = 2: N(J(S)) is the Sylow itself, C(ΩZ(S)) too, O_2' = 1.
        assert!(!is_thompson_factorizable(&s4, 2).unwrap());
        assert!(is_thompson_factorizable(&d4(), 2).unwrap());
    }
}
