use crate::action::{coset_action, quotient};
use crate::arith::{is_power_of, is_prime, p_part, prime_factors};
use crate::caps::{self, Caps};
use crate::error::{Error, Result};
use crate::group::PermGroup;

use super::lattice::all_normal_subgroups;

fn check_prime(p: u128) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{p} is not prime")))
    }
}

/// A Sylow p-subgroup, grown from the trivial group by the first p-elements
/// in stream order that normalise the current p-subgroup.
pub fn sylow(group: &PermGroup, p: u128) -> Result<PermGroup> {
    check_prime(p)?;
    let target = p_part(group.order(), p);
    let mut s = PermGroup::trivial(group.degree());
    if target == 1 {
        return Ok(s);
    }
    Caps::check("sylow search", caps::get().stored, group.order())?;
    loop {
        for g in group.elements_streamed_capped(u128::MAX)? {
            if !is_power_of(g.order() as u128, p) || s.contains(&g) {
                continue;
            }
            if s.generators().iter().all(|x| s.contains(&x.conjugate_by(&g))) {
                s = s.with_generator(&g);
                if s.order() == target {
                    return Ok(s);
                }
            }
        }
    }
}

/// `O_p(G)`: the core of a Sylow p-subgroup.
pub fn core_p(group: &PermGroup, p: u128) -> Result<PermGroup> {
    let s = sylow(group, p)?;
    if s.is_trivial() {
        return Ok(s);
    }
    if s.order() == group.order() {
        return Ok(group.clone());
    }
    Ok(coset_action(group, &s)?.kernel())
}

/// `O_{p'}(G)`: the largest normal subgroup of order prime to `p`.
pub fn core_p_prime(group: &PermGroup, p: u128) -> Result<PermGroup> {
    check_prime(p)?;
    if p_part(group.order(), p) == 1 {
        return Ok(group.clone());
    }
    if is_power_of(group.order(), p) {
        return Ok(PermGroup::trivial(group.degree()));
    }
    let lattice = all_normal_subgroups(group)?;
    Ok(lattice
        .members
        .into_iter()
        .rev()
        .find(|m| m.order() % p != 0)
        .expect("the trivial group is a member"))
}

/// `F(G)`, the join of the `O_p(G)`.
pub fn fitting(group: &PermGroup) -> Result<PermGroup> {
    let mut f = PermGroup::trivial(group.degree());
    for p in prime_factors(group.order()) {
        f = f.join(&core_p(group, p)?);
    }
    Ok(f)
}

/// The alternating `O_p`/`O_{p'}` tower of a group.
#[derive(Debug, Clone)]
pub struct PSeries {
    pub separable: bool,
    /// Strictly increasing normal subgroups starting at the trivial group.
    pub series: Vec<PermGroup>,
}

/// Builds `1 ≤ O_p ≤ O_{pp'} ≤ ..`, each term the preimage of `O_p` or
/// `O_{p'}` of the quotient by the previous one. Separable iff it reaches G.
pub fn p_separability(group: &PermGroup, p: u128) -> Result<PSeries> {
    check_prime(p)?;
    let mut current = PermGroup::trivial(group.degree());
    let mut series = vec![current.clone()];
    let mut want_p = true;
    let mut stalled = 0;
    while current.order() < group.order() && stalled < 2 {
        let q = if current.is_trivial() {
            None
        } else {
            Some(quotient(group, &current)?)
        };
        let image = q.as_ref().map_or(group, |q| &q.image);
        let o = if want_p {
            core_p(image, p)?
        } else {
            core_p_prime(image, p)?
        };
        want_p = !want_p;
        if o.is_trivial() {
            stalled += 1;
            continue;
        }
        stalled = 0;
        current = match &q {
            Some(q) => q.hom().preimage(&o)?,
            None => o,
        };
        series.push(current.clone());
    }
    Ok(PSeries {
        separable: current.order() == group.order(),
        series,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{Permutation, Point};

    fn p(n: usize, cycles: &[&[Point]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn s4() -> PermGroup {
        PermGroup::new(4, vec![p(4, &[&[0, 1]]), p(4, &[&[0, 1, 2, 3]])]).unwrap()
    }

    #[test]
    fn sylow_subgroups_of_s4() {
        let g = s4();
        assert_eq!(sylow(&g, 2).unwrap().order(), 8);
        assert_eq!(sylow(&g, 3).unwrap().order(), 3);
        assert!(sylow(&g, 5).unwrap().is_trivial());
        assert!(sylow(&g, 4).is_err());
    }

    #[test]
    fn cores_and_fitting() {
        let g = s4();
        assert_eq!(core_p(&g, 2).unwrap().order(), 4);
        assert!(core_p(&g, 3).unwrap().is_trivial());
        assert!(core_p_prime(&g, 2).unwrap().is_trivial());
        assert_eq!(fitting(&g).unwrap().order(), 4);
        let d5 = PermGroup::new(5, vec![p(5, &[&[0, 1, 2, 3, 4]]), p(5, &[&[1, 4], &[2, 3]])]).unwrap();
        assert_eq!(fitting(&d5).unwrap().order(), 5);
        assert_eq!(core_p_prime(&d5, 2).unwrap().order(), 5);
    }

    #[test]
    fn separability() {
        let g = s4();
        let s = p_separability(&g, 2).unwrap();
        assert!(s.separable);
        let orders: Vec<u128> = s.series.iter().map(|m| m.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        let a5 = PermGroup::new(5, vec![p(5, &[&[0, 1, 2]]), p(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        let s = p_separability(&a5, 2).unwrap();
        assert!(!s.separable);
        assert_eq!(s.series.len(), 1);
    }
}
