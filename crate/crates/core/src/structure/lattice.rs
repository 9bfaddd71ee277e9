use serde_json::json;

use super::closure::normal_closure;
use crate::caps::{self, Caps};
use crate::error::Result;
use crate::group::PermGroup;
use crate::io::GroupFile;
use crate::perm::Permutation;

/// Every normal subgroup of a group, sorted by order (ties in discovery order).
#[derive(Debug, Clone)]
pub struct NormalLattice {
    pub parent: PermGroup,
    pub members: Vec<PermGroup>,
}

impl NormalLattice {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &PermGroup> {
        self.members.iter()
    }

    /// Index of the member equal to `sub`, if any.
    pub fn position(&self, sub: &PermGroup) -> Option<usize> {
        self.members.iter().position(|m| m.same_group(sub))
    }

    /// Minimal nontrivial members.
    pub fn minimal(&self) -> Vec<&PermGroup> {
        let nontrivial: Vec<&PermGroup> = self.members.iter().filter(|m| !m.is_trivial()).collect();
        nontrivial
            .iter()
            .filter(|m| {
                !nontrivial
                    .iter()
                    .any(|n| n.order() < m.order() && m.contains_group(n))
            })
            .copied()
            .collect()
    }

    /// True if some member meets `sub` trivially with `|sub||M| = |G|`.
    pub fn has_complement(&self, sub: &PermGroup) -> Result<bool> {
        for m in &self.members {
            if sub.order() * m.order() == self.parent.order() && sub.intersection(m)?.is_trivial() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// The minimal nontrivial members having a normal complement. For a
    /// group with a unique decomposition into indecomposable direct factors
    /// these are the factors.
    pub fn direct_factors(&self) -> Result<Vec<PermGroup>> {
        let mut factors: Vec<PermGroup> = Vec::new();
        for m in self.members.iter().filter(|m| !m.is_trivial()) {
            if factors.iter().any(|f| m.contains_group(f)) {
                continue;
            }
            if self.has_complement(m)? {
                factors.push(m.clone());
            }
        }
        Ok(factors)
    }

    /// `[{"order": .., "group": {...}}, ..]`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.members
                .iter()
                .map(|m| json!({"order": m.order().to_string(), "group": GroupFile::from_group(m)}))
                .collect(),
        )
    }
}

/// One element from each conjugacy class, the identity first, found by
/// streaming the group and sweeping each new class out of a rank bitmap.
pub fn conjugacy_class_reps(group: &PermGroup) -> Result<Vec<Permutation>> {
    let limits = caps::get();
    Caps::check("conjugacy classes", limits.stored, group.order())?;
    let n = group.order() as usize;
    let mut seen = vec![false; n];
    let mut reps = Vec::new();
    for (r, g) in group.elements_streamed_capped(u128::MAX)?.enumerate() {
        if seen[r] {
            continue;
        }
        Caps::check("conjugacy classes", limits.classes as u128, reps.len() as u128 + 1)?;
        seen[r] = true;
        let mut queue = vec![g.clone()];
        while let Some(x) = queue.pop() {
            for s in group.generators() {
                let y = x.conjugate_by(s);
                let ry = group.rank(&y).expect("conjugate stays in the group") as usize;
                if !seen[ry] {
                    seen[ry] = true;
                    queue.push(y);
                }
            }
        }
        reps.push(g);
    }
    Ok(reps)
}

pub fn all_normal_subgroups(group: &PermGroup) -> Result<NormalLattice> {
    all_normal_subgroups_capped(group, caps::get().lattice)
}

/// Normal closures of class representatives, closed under joins. Every
/// normal subgroup is the join of the closures of the classes it contains,
/// so joining members with closures until nothing new appears is complete.
pub fn all_normal_subgroups_capped(group: &PermGroup, cap: usize) -> Result<NormalLattice> {
    let reps = conjugacy_class_reps(group)?;
    let mut members: Vec<PermGroup> = vec![PermGroup::trivial(group.degree())];
    let mut atoms: Vec<PermGroup> = Vec::new();
    for r in reps.iter().skip(1) {
        let c = normal_closure(group, std::slice::from_ref(r))?;
        if !atoms.iter().any(|a| a.same_group(&c)) {
            atoms.push(c.clone());
        }
    }
    let insert = |members: &mut Vec<PermGroup>, g: PermGroup| -> Result<bool> {
        if members.iter().any(|m| m.same_group(&g)) {
            return Ok(false);
        }
        Caps::check("normal subgroups", cap as u128, members.len() as u128 + 1)?;
        members.push(g);
        Ok(true)
    };
    for a in &atoms {
        insert(&mut members, a.clone())?;
    }
    let mut i = 1;
    while i < members.len() {
        for a in &atoms {
            if members[i].contains_group(a) {
                continue;
            }
            let j = members[i].join(a);
            insert(&mut members, j)?;
        }
        i += 1;
    }
    members.sort_by_key(|m| m.order());
    Ok(NormalLattice {
        parent: group.clone(),
        members,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Point;

    #[test]
    fn direct_factors_of_products() {
        let s3 = |off: Point| -> Vec<Permutation> {
            vec![
                Permutation::from_cycles(6, &[&[off, off + 1]]).unwrap(),
                Permutation::from_cycles(6, &[&[off, off + 1, off + 2]]).unwrap(),
            ]
        };
        let mut gens = s3(0);
        gens.extend(s3(3));
        let g = PermGroup::new(6, gens).unwrap();
        let f = all_normal_subgroups(&g).unwrap().direct_factors().unwrap();
        assert_eq!(f.iter().map(PermGroup::order).collect::<Vec<_>>(), vec![6, 6]);
        let s4 = PermGroup::new(4, vec![
            Permutation::from_cycles(4, &[&[0, 1]]).unwrap(),
            Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
        ]).unwrap();
        let f = all_normal_subgroups(&s4).unwrap().direct_factors().unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].order(), 24);
    }

    fn p(n: usize, cycles: &[&[Point]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn small_lattices() {
        let s4 = PermGroup::new(4, vec![p(4, &[&[0, 1]]), p(4, &[&[0, 1, 2, 3]])]).unwrap();
        let l = all_normal_subgroups(&s4).unwrap();
        let orders: Vec<u128> = l.iter().map(|m| m.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        assert_eq!(conjugacy_class_reps(&s4).unwrap().len(), 5);
        assert_eq!(l.minimal().len(), 1);

        let s3 = PermGroup::new(3, vec![p(3, &[&[0, 1]]), p(3, &[&[0, 1, 2]])]).unwrap();
        let orders: Vec<u128> = all_normal_subgroups(&s3).unwrap().iter().map(|m| m.order()).collect();
        assert_eq!(orders, vec![1, 3, 6]);

        // Q8 in its regular representation.
        let i = p(8, &[&[0, 2, 1, 3], &[4, 6, 5, 7]]);
        let j = p(8, &[&[0, 4, 1, 5], &[2, 7, 3, 6]]);
        let q8 = PermGroup::new(8, vec![i, j]).unwrap();
        assert_eq!(q8.order(), 8);
        let orders: Vec<u128> = all_normal_subgroups(&q8).unwrap().iter().map(|m| m.order()).collect();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 8]);
    }

    #[test]
    fn lattice_cap_is_enforced() {
        let v4 = PermGroup::new(4, vec![p(4, &[&[0, 1], &[2, 3]]), p(4, &[&[0, 2], &[1, 3]])]).unwrap();
        assert_eq!(all_normal_subgroups(&v4).unwrap().len(), 5);
        assert!(all_normal_subgroups_capped(&v4, 3).is_err());
    }
}
