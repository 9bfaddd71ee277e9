//! Permutation groups with an eagerly built stabiliser chain.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use crate::caps::{self, Caps};
use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::perm::{Permutation, Point};

/// A permutation group given by generators. Immutable once built; cloning is
/// cheap because the chain is shared.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    chain: Arc<Chain>,
    name: Option<String>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("gens", &self.gens)
            .finish()
    }
}

impl PermGroup {
    /// Validates the generators and builds the chain.
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<PermGroup> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        Ok(PermGroup::from_gens_unchecked(degree, gens))
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::from_gens_unchecked(degree, Vec::new())
    }

    pub(crate) fn from_gens_unchecked(degree: usize, gens: Vec<Permutation>) -> PermGroup {
        PermGroup::with_base_prefix(degree, gens, &[])
    }

    /// Builds the chain with a prescribed initial segment of the base.
    pub(crate) fn with_base_prefix(
        degree: usize,
        gens: Vec<Permutation>,
        prefix: &[Point],
    ) -> PermGroup {
        let mut seen: Vec<Permutation> = Vec::new();
        for g in &gens {
            if !g.is_identity() && !seen.contains(g) {
                seen.push(g.clone());
            }
        }
        let chain = Chain::build(degree, &seen, prefix);
        PermGroup {
            degree,
            gens,
            chain: Arc::new(chain),
            name: None,
        }
    }

    pub(crate) fn from_chain(chain: Chain) -> PermGroup {
        let gens = chain.strong_generators();
        PermGroup {
            degree: chain.degree,
            gens,
            chain: Arc::new(chain),
            name: None,
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> PermGroup {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub(crate) fn chain(&self) -> &Chain {
        &self.chain
    }

    pub fn base(&self) -> Vec<Point> {
        self.chain.base()
    }

    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    /// Membership by sifting through the chain.
    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, _) = self.chain.sift(g, 0);
        residue.is_identity()
    }

    /// True if every generator of `other` lies in `self`.
    pub fn contains_group(&self, other: &PermGroup) -> bool {
        other.degree == self.degree && other.gens.iter().all(|g| self.contains(g))
    }

    /// Equality as subgroups of the symmetric group.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.contains_group(other)
    }

    /// `<self, g>`.
    pub fn with_generator(&self, g: &Permutation) -> PermGroup {
        if self.contains(g) {
            return self.clone();
        }
        let mut chain = (*self.chain).clone();
        chain.add_generator(g.clone());
        let mut gens = self.gens.clone();
        gens.push(g.clone());
        PermGroup {
            degree: self.degree,
            gens,
            chain: Arc::new(chain),
            name: None,
        }
    }

    /// `<self, others>`.
    pub fn join(&self, other: &PermGroup) -> PermGroup {
        let mut out = self.clone();
        for g in other.generators() {
            out = out.with_generator(g);
        }
        out.name = None;
        out
    }

    /// Index of the element in stream order (`0..order`), or `None` if absent.
    pub fn rank(&self, g: &Permutation) -> Option<u128> {
        if g.degree() != self.degree {
            return None;
        }
        let coords = self.chain.coordinates(g)?;
        let mut r: u128 = 0;
        for (level, c) in self.chain.levels.iter().zip(coords) {
            r = r * level.orbit.len() as u128 + c as u128;
        }
        Some(r)
    }

    /// Inverse of [`PermGroup::rank`].
    pub fn unrank(&self, mut r: u128) -> Option<Permutation> {
        if r >= self.order() {
            return None;
        }
        let mut coords = vec![0usize; self.chain.levels.len()];
        for (k, level) in self.chain.levels.iter().enumerate().rev() {
            let n = level.orbit.len() as u128;
            coords[k] = (r % n) as usize;
            r /= n;
        }
        Some(self.chain.element_at(&coords))
    }

    /// Every element exactly once, in rank order, computed on the fly.
    pub fn elements_streamed(&self) -> Result<ElementStream> {
        self.elements_streamed_capped(caps::get().stream)
    }

    pub fn elements_streamed_capped(&self, cap: u128) -> Result<ElementStream> {
        Caps::check("element stream", cap, self.order())?;
        Ok(ElementStream::new(self.chain.clone()))
    }

    /// Orbit of `x` in breadth-first order over the generators.
    pub fn orbit(&self, x: Point) -> Vec<Point> {
        orbit_under(&self.gens, self.degree, x)
    }

    pub fn orbits(&self) -> Vec<Vec<Point>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree as Point {
            if seen[x as usize] {
                continue;
            }
            let orb = self.orbit(x);
            for &y in &orb {
                seen[y as usize] = true;
            }
            out.push(orb);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    fn check_point(&self, x: Point) -> Result<()> {
        if (x as usize) < self.degree {
            Ok(())
        } else {
            Err(Error::PointOutOfRange {
                point: x,
                degree: self.degree,
            })
        }
    }

    pub fn point_stabilizer(&self, x: Point) -> Result<PermGroup> {
        self.pointwise_stabilizer(&[x])
    }

    /// Subgroup fixing every point of `points`.
    pub fn pointwise_stabilizer(&self, points: &[Point]) -> Result<PermGroup> {
        for &x in points {
            self.check_point(x)?;
        }
        let rebased = PermGroup::with_base_prefix(self.degree, self.gens.clone(), points);
        let k = rebased
            .chain
            .levels
            .iter()
            .take_while(|l| points.contains(&l.base))
            .count();
        Ok(PermGroup::from_chain(rebased.chain.tail(k)))
    }

    /// Subgroup preserving `set`. Sets of size at most two use the chain;
    /// larger sets fall back to a capped streamed filter.
    pub fn setwise_stabilizer(&self, set: &[Point]) -> Result<PermGroup> {
        for &x in set {
            self.check_point(x)?;
        }
        let mut set: Vec<Point> = set.to_vec();
        set.sort_unstable();
        set.dedup();
        match set.len() {
            0 => Ok(self.clone()),
            1 => self.point_stabilizer(set[0]),
            2 => {
                let (x, y) = (set[0], set[1]);
                let pointwise = self.pointwise_stabilizer(&[x, y])?;
                match self.swapping_element(x, y) {
                    Some(s) => Ok(pointwise.with_generator(&s)),
                    None => Ok(pointwise),
                }
            }
            _ => {
                let mut member = vec![false; self.degree];
                for &x in &set {
                    member[x as usize] = true;
                }
                let mut acc = PermGroup::trivial(self.degree);
                for g in self.elements_streamed_capped(caps::get().stored)? {
                    if set.iter().all(|&x| member[g.apply(x) as usize]) && !acc.contains(&g) {
                        acc = acc.with_generator(&g);
                    }
                }
                Ok(acc)
            }
        }
    }

    /// An element interchanging `x` and `y`, found by walking transversals of
    /// a chain with base `[x, y, ..]`.
    pub fn swapping_element(&self, x: Point, y: Point) -> Option<Permutation> {
        if x == y {
            return Some(self.identity());
        }
        let rebased = PermGroup::with_base_prefix(self.degree, self.gens.clone(), &[x, y]);
        let levels = &rebased.chain.levels;
        // u maps x to y; we need h in G_x with y^(h u) = x, i.e. y^h = x^(u⁻¹)
        let top = &levels[0];
        let u = top.rep(top.index_of(y)?);
        let target = u.inverse().apply(x);
        let second = &levels[1];
        debug_assert_eq!(second.base, y);
        let h = second.rep(second.index_of(target)?);
        let s = h.mul_unchecked(&u);
        debug_assert!(s.apply(x) == y && s.apply(y) == x);
        Some(s)
    }

    /// Elements as a vector, bounded by the stored-enumeration cap.
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        Caps::check("stored enumeration", caps::get().stored, self.order())?;
        Ok(self.elements_streamed_capped(u128::MAX)?.collect())
    }

    /// Subgroup generated by the elements satisfying `keep`, found by a
    /// capped stream over `self`.
    pub fn filter_subgroup(&self, mut keep: impl FnMut(&Permutation) -> bool) -> Result<PermGroup> {
        Caps::check("streamed filter", caps::get().stored, self.order())?;
        let mut acc = PermGroup::trivial(self.degree);
        for g in self.elements_streamed_capped(u128::MAX)? {
            if !acc.contains(&g) && keep(&g) {
                acc = acc.with_generator(&g);
            }
        }
        Ok(acc)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        other.contains_group(self)
    }

    /// True if every generator of `self` conjugated by every generator of
    /// `parent` stays in `self`.
    pub fn is_normal_in(&self, parent: &PermGroup) -> bool {
        self.is_subgroup_of(parent)
            && parent.gens.iter().all(|g| {
                self.gens
                    .iter()
                    .all(|n| self.contains(&n.conjugate_by(g)))
            })
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().enumerate().all(|(i, a)| {
            self.gens[i + 1..]
                .iter()
                .all(|b| a.mul_unchecked(b) == b.mul_unchecked(a))
        })
    }

    /// `g⁻¹ self g`.
    pub fn conjugate(&self, g: &Permutation) -> PermGroup {
        PermGroup::from_gens_unchecked(
            self.degree,
            self.gens.iter().map(|x| x.conjugate_by(g)).collect(),
        )
    }

    /// Intersection with `other`, streaming the smaller group.
    pub fn intersection(&self, other: &PermGroup) -> Result<PermGroup> {
        if self.contains_group(other) {
            return Ok(other.clone());
        }
        if other.contains_group(self) {
            return Ok(self.clone());
        }
        let (small, big) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        small.filter_subgroup(|g| big.contains(g))
    }
}

pub(crate) fn orbit_under(gens: &[Permutation], degree: usize, x: Point) -> Vec<Point> {
    let mut seen = vec![false; degree];
    let mut orbit = vec![x];
    seen[x as usize] = true;
    let mut queue = VecDeque::from([x]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g.apply(p);
            if !seen[q as usize] {
                seen[q as usize] = true;
                orbit.push(q);
                queue.push_back(q);
            }
        }
    }
    orbit
}

/// Convenience constructor used throughout tests and examples.
pub fn group_from_generators(degree: usize, gens: Vec<Permutation>) -> Result<PermGroup> {
    PermGroup::new(degree, gens)
}

/// Streams `u_k ⋯ u_1 u_0` over all transversal choices, the level-0 choice
/// varying slowest. Each element costs one product amortised.
pub struct ElementStream {
    chain: Arc<Chain>,
    digits: Vec<usize>,
    /// `suffix[l] = u_l ⋯ u_0` for the current digits.
    suffix: Vec<Permutation>,
    reps: Vec<Option<Vec<Permutation>>>,
    started: bool,
    done: bool,
}

impl ElementStream {
    fn new(chain: Arc<Chain>) -> ElementStream {
        let k = chain.levels.len();
        let id = Permutation::identity(chain.degree);
        // Cache all transversal elements except on the outermost level when it
        // is large; inner levels are revisited many times.
        let reps = chain
            .levels
            .iter()
            .enumerate()
            .map(|(i, l)| {
                let size = l.orbit.len() * chain.degree;
                (i > 0 || size <= 1 << 22).then(|| (0..l.orbit.len()).map(|j| l.rep(j)).collect())
            })
            .collect();
        ElementStream {
            digits: vec![0; k],
            suffix: vec![id; k],
            chain,
            reps,
            started: false,
            done: false,
        }
    }

    fn rep(&self, level: usize, j: usize) -> Permutation {
        match &self.reps[level] {
            Some(r) => r[j].clone(),
            None => self.chain.levels[level].rep(j),
        }
    }

    fn recompute_from(&mut self, from: usize) {
        for l in from..self.digits.len() {
            let u = self.rep(l, self.digits[l]);
            self.suffix[l] = if l == 0 {
                u
            } else {
                u.mul_unchecked(&self.suffix[l - 1])
            };
        }
    }

    fn current(&self) -> Permutation {
        self.suffix
            .last()
            .cloned()
            .unwrap_or_else(|| Permutation::identity(self.chain.degree))
    }
}

impl Iterator for ElementStream {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.digits.is_empty() {
                self.done = true;
            }
            return Some(self.current());
        }
        // advance the fastest (innermost) digit with carry
        let mut l = self.digits.len();
        loop {
            if l == 0 {
                self.done = true;
                return None;
            }
            l -= 1;
            self.digits[l] += 1;
            if self.digits[l] < self.chain.levels[l].orbit.len() {
                break;
            }
            self.digits[l] = 0;
        }
        self.recompute_from(l);
        Some(self.current())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(n: usize, cycles: &[&[Point]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn sym(n: usize) -> PermGroup {
        let cyc: Vec<Point> = (0..n as Point).collect();
        PermGroup::new(n, vec![p(n, &[&[0, 1]]), p(n, &[&cyc])]).unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(sym(3).order(), 6);
        let d4 = PermGroup::new(4, vec![p(4, &[&[0, 1, 2, 3]]), p(4, &[&[0, 2]])]).unwrap();
        assert_eq!(d4.order(), 8);
        assert_eq!(sym(4).order(), 24);
    }

    #[test]
    fn alternating_membership() {
        let a4 = PermGroup::new(4, vec![p(4, &[&[0, 1, 2]]), p(4, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(a4.order(), 12);
        assert!(!a4.contains(&p(4, &[&[0, 1]])));
        assert!(a4.contains(&p(4, &[&[0, 1], &[2, 3]])));
        assert!(a4.contains(&Permutation::identity(4)));
    }

    #[test]
    fn stream_yields_each_element_once_in_rank_order() {
        let g = sym(5);
        let all: Vec<Permutation> = g.elements_streamed().unwrap().collect();
        assert_eq!(all.len(), 120);
        let set: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), 120);
        for (i, x) in all.iter().enumerate() {
            assert_eq!(g.rank(x), Some(i as u128));
            assert_eq!(g.unrank(i as u128).as_ref(), Some(x));
        }
    }

    #[test]
    fn stream_cap_is_enforced() {
        assert!(matches!(
            sym(5).elements_streamed_capped(100),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn orbits_in_bfs_order() {
        assert_eq!(sym(3).orbit(0), vec![0, 1, 2]);
        let t = PermGroup::new(4, vec![p(4, &[&[0, 1]])]).unwrap();
        assert_eq!(t.orbit(2), vec![2]);
        let klein = PermGroup::new(4, vec![p(4, &[&[0, 2], &[1, 3]]), p(4, &[&[0, 1], &[2, 3]])])
            .unwrap();
        assert_eq!(klein.orbit(0).len(), 4);
        assert!(klein.is_transitive());
    }

    #[test]
    fn stabilisers() {
        assert_eq!(sym(4).point_stabilizer(0).unwrap().order(), 6);
        let klein = PermGroup::new(4, vec![p(4, &[&[0, 2], &[1, 3]]), p(4, &[&[0, 1], &[2, 3]])])
            .unwrap();
        assert!(klein.point_stabilizer(0).unwrap().is_trivial());
        let s = sym(3).setwise_stabilizer(&[0, 1]).unwrap();
        assert_eq!(s.order(), 2);
        assert!(s.contains(&p(3, &[&[0, 1]])));
        let c4 = PermGroup::new(4, vec![p(4, &[&[0, 1, 2, 3]])]).unwrap();
        assert_eq!(c4.setwise_stabilizer(&[0, 2]).unwrap().order(), 2);
        assert_eq!(sym(5).setwise_stabilizer(&[0, 1, 2]).unwrap().order(), 12);
        assert!(sym(3).point_stabilizer(3).is_err());
    }

    #[test]
    fn normality_and_intersection() {
        let s4 = sym(4);
        let klein = PermGroup::new(4, vec![p(4, &[&[0, 2], &[1, 3]]), p(4, &[&[0, 1], &[2, 3]])])
            .unwrap();
        assert!(klein.is_normal_in(&s4));
        let s3 = s4.point_stabilizer(3).unwrap();
        assert!(!s3.is_normal_in(&s4));
        assert!(s3.intersection(&klein).unwrap().is_trivial());
    }
}
