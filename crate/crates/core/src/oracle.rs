//! Naive reference implementations by explicit element enumeration. They
//! share nothing with the stabiliser chain and serve as cross-checks for it
//! and for the structure operators on small groups.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::arith::{p_part, prime_factors};
use crate::caps::Caps;
use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::{Permutation, Point};

/// All elements of `⟨gens⟩`, found by breadth-first closure.
#[derive(Debug, Clone)]
pub struct Enumerated {
    pub degree: usize,
    pub elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl Enumerated {
    pub fn closure(degree: usize, gens: &[Permutation], cap: u128) -> Result<Enumerated> {
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let h = elements[i].compose(g)?;
                if !index.contains_key(&h) {
                    Caps::check("naive closure", cap, elements.len() as u128 + 1)?;
                    index.insert(h.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(h);
                }
            }
        }
        Ok(Enumerated {
            degree,
            elements,
            index,
        })
    }

    pub fn of(group: &PermGroup, cap: u128) -> Result<Enumerated> {
        Enumerated::closure(group.degree(), group.generators(), cap)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.index.contains_key(g)
    }

    pub fn position(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Orbits as sorted point lists, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<Point>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree as Point {
            if seen[x as usize] {
                continue;
            }
            let mut orbit: Vec<Point> = self.elements.iter().map(|g| g.apply(x)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &y in &orbit {
                seen[y as usize] = true;
            }
            out.push(orbit);
        }
        out
    }
}

/// A subgroup as a set of element indices.
pub type Subset = Vec<bool>;

/// Every subgroup of a small group, by closing cyclic subgroups under joins.
#[derive(Debug, Clone)]
pub struct SubgroupOracle {
    pub group: Enumerated,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    pub subgroups: Vec<Subset>,
}

fn size(s: &Subset) -> usize {
    s.iter().filter(|&&b| b).count()
}

impl SubgroupOracle {
    pub fn new(group: &PermGroup, cap: usize) -> Result<SubgroupOracle> {
        let e = Enumerated::of(group, cap as u128)?;
        let n = e.order();
        let mul: Vec<Vec<usize>> = e
            .elements
            .iter()
            .map(|a| {
                e.elements
                    .iter()
                    .map(|b| e.position(&a.compose(b).expect("same degree")).expect("closed"))
                    .collect()
            })
            .collect();
        let inv = (0..n).map(|i| (0..n).find(|&j| mul[i][j] == 0).expect("inverse")).collect();
        let mut oracle = SubgroupOracle {
            group: e,
            mul,
            inv,
            subgroups: Vec::new(),
        };
        oracle.enumerate();
        Ok(oracle)
    }

    fn close(&self, gens: &[usize]) -> Subset {
        let n = self.mul.len();
        let mut s = vec![false; n];
        s[0] = true;
        let mut stack = vec![0];
        while let Some(a) = stack.pop() {
            for &g in gens {
                let b = self.mul[a][g];
                if !s[b] {
                    s[b] = true;
                    stack.push(b);
                }
            }
        }
        s
    }

    fn enumerate(&mut self) {
        let n = self.mul.len();
        let cyclic: Vec<(usize, Subset)> = (0..n).map(|i| (i, self.close(&[i]))).collect();
        let mut seen: HashSet<Subset> = HashSet::new();
        let mut list: Vec<(Vec<usize>, Subset)> = Vec::new();
        for (i, c) in &cyclic {
            if seen.insert(c.clone()) {
                list.push((vec![*i], c.clone()));
            }
        }
        let mut k = 0;
        while k < list.len() {
            for (i, _) in &cyclic {
                if list[k].1[*i] {
                    continue;
                }
                let mut gens = list[k].0.clone();
                gens.push(*i);
                let s = self.close(&gens);
                if seen.insert(s.clone()) {
                    list.push((gens, s));
                }
            }
            k += 1;
        }
        let mut subs: Vec<Subset> = list.into_iter().map(|(_, s)| s).collect();
        subs.sort_by_key(|s| (size(s), s.iter().map(|&b| !b).collect::<Vec<_>>()));
        self.subgroups = subs;
    }

    pub fn order(&self, s: &Subset) -> usize {
        size(s)
    }

    fn members(&self, s: &Subset) -> Vec<usize> {
        (0..s.len()).filter(|&i| s[i]).collect()
    }

    pub fn is_normal(&self, s: &Subset) -> bool {
        (0..s.len()).all(|g| {
            self.members(s)
                .into_iter()
                .all(|x| s[self.mul[self.mul[self.inv[g]][x]][g]])
        })
    }

    fn within<'a>(&'a self, s: &'a Subset) -> impl Iterator<Item = &'a Subset> {
        self.subgroups
            .iter()
            .filter(move |t| t.iter().zip(s.iter()).all(|(&a, &b)| !a || b))
    }

    pub fn normal_subgroups(&self) -> Vec<&Subset> {
        self.subgroups.iter().filter(|s| self.is_normal(s)).collect()
    }

    fn whole(&self) -> &Subset {
        self.subgroups.last().expect("the group itself")
    }

    /// The largest normal subgroup whose order satisfies `keep`.
    fn largest_normal(&self, keep: impl Fn(usize) -> bool) -> Subset {
        self.normal_subgroups()
            .into_iter()
            .filter(|s| keep(size(s)))
            .max_by_key(|s| size(s))
            .cloned()
            .expect("trivial subgroup qualifies")
    }

    pub fn o_p(&self, p: u128) -> Subset {
        self.largest_normal(|n| p_part(n as u128, p) == n as u128)
    }

    pub fn o_p_prime(&self, p: u128) -> Subset {
        self.largest_normal(|n| !(n as u128).is_multiple_of(p))
    }

    /// Nilpotent iff every Sylow subgroup is unique.
    pub fn is_nilpotent(&self, s: &Subset) -> bool {
        let n = size(s) as u128;
        prime_factors(n).into_iter().all(|p| {
            let pp = p_part(n, p) as usize;
            self.within(s).filter(|t| size(t) == pp).count() == 1
        })
    }

    pub fn fitting(&self) -> Subset {
        self.normal_subgroups()
            .into_iter()
            .filter(|s| self.is_nilpotent(s))
            .max_by_key(|s| size(s))
            .cloned()
            .expect("trivial subgroup is nilpotent")
    }

    /// The intersection of the maximal subgroups of `s`.
    pub fn frattini(&self, s: &Subset) -> Subset {
        let proper: Vec<&Subset> = self.within(s).filter(|t| size(t) < size(s)).collect();
        let maximal = proper.iter().filter(|t| {
            !proper
                .iter()
                .any(|u| size(u) > size(t) && t.iter().zip(u.iter()).all(|(&a, &b)| !a || b))
        });
        let mut out = s.clone();
        for m in maximal {
            for (o, &b) in out.iter_mut().zip(m.iter()) {
                *o &= b;
            }
        }
        out
    }

    fn element_order(&self, x: usize) -> usize {
        let (mut y, mut k) = (x, 1);
        while y != 0 {
            y = self.mul[y][x];
            k += 1;
        }
        k
    }

    fn commute(&self, a: usize, b: usize) -> bool {
        self.mul[a][b] == self.mul[b][a]
    }

    /// Generated by the central elements of order `p` of the p-group `s`.
    pub fn omega_center(&self, s: &Subset, p: u128) -> Subset {
        let m = self.members(s);
        let gens: Vec<usize> = m
            .iter()
            .copied()
            .filter(|&z| self.element_order(z) as u128 == p && m.iter().all(|&x| self.commute(x, z)))
            .collect();
        self.close(&gens)
    }

    fn is_elementary_abelian(&self, t: &Subset, p: u128) -> bool {
        let m = self.members(t);
        m.iter().all(|&a| a == 0 || self.element_order(a) as u128 == p)
            && m.iter().all(|&a| m.iter().all(|&b| self.commute(a, b)))
    }

    /// The join of the elementary abelian subgroups of maximal order in `s`.
    pub fn thompson(&self, s: &Subset, p: u128) -> Subset {
        let ea: Vec<&Subset> = self.within(s).filter(|t| self.is_elementary_abelian(t, p)).collect();
        let best = ea.iter().map(|t| size(t)).max().unwrap_or(1);
        let gens: Vec<usize> = ea
            .iter()
            .filter(|t| size(t) == best)
            .flat_map(|t| self.members(t))
            .collect();
        self.close(&gens)
    }

    /// True if the engine's subgroup has exactly these elements.
    pub fn matches(&self, s: &Subset, g: &PermGroup) -> bool {
        g.order() == size(s) as u128 && self.members(s).into_iter().all(|i| g.contains(&self.group.elements[i]))
    }

    /// Converts an oracle subgroup into an engine group.
    pub fn to_group(&self, s: &Subset) -> Result<PermGroup> {
        let gens = self.members(s).into_iter().map(|i| self.group.elements[i].clone()).collect();
        PermGroup::new(self.group.degree, gens)
    }

    /// The whole group as a subset.
    pub fn all(&self) -> Subset {
        self.whole().clone()
    }

    /// A Sylow p-subgroup: the first subgroup of full p-part order.
    pub fn sylow(&self, p: u128) -> Subset {
        let pp = p_part(self.group.order() as u128, p) as usize;
        self.subgroups
            .iter()
            .find(|s| size(s) == pp)
            .cloned()
            .expect("Sylow subgroups exist")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(n: usize, cycles: &[&[Point]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn naive_s4() {
        let s4 = PermGroup::new(4, vec![gen(4, &[&[0, 1]]), gen(4, &[&[0, 1, 2, 3]])]).unwrap();
        let e = Enumerated::of(&s4, 1000).unwrap();
        assert_eq!(e.order(), 24);
        assert_eq!(e.orbits(), vec![vec![0, 1, 2, 3]]);
        let o = SubgroupOracle::new(&s4, 1000).unwrap();
        assert_eq!(o.subgroups.len(), 30);
        assert_eq!(o.normal_subgroups().len(), 4);
        assert_eq!(o.order(&o.o_p(2)), 4);
        assert_eq!(o.order(&o.fitting()), 4);
        let s = o.sylow(2);
        assert_eq!(o.order(&o.thompson(&s, 2)), 8);
        assert_eq!(o.order(&o.frattini(&s)), 2);
        assert_eq!(o.order(&o.omega_center(&s, 2)), 2);
    }
}
