//! Stabiliser chains built by the deterministic Schreier–Sims algorithm.
//!
//! Base points are taken from an optional prefix first; every further base
//! point is the least point moved by the generator that forces a new level.
//! Orbits are explored breadth first with generators in insertion order, and
//! orbit trees are only ever extended, so a chain is a pure function of its
//! inputs.

use crate::perm::{Permutation, Point};

const NONE: u32 = u32::MAX;
/// Transversals are stored explicitly while their total size (in points) stays
/// below this; larger orbits are traced through the orbit tree on demand.
const EXPLICIT_LIMIT: usize = 1 << 23;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub(crate) base: Point,
    /// Strong generators fixing every earlier base point.
    pub(crate) gens: Vec<Permutation>,
    pub(crate) orbit: Vec<Point>,
    pos: Vec<u32>,
    /// `(generator, parent orbit index)` for each orbit point except the root.
    parent: Vec<(u32, u32)>,
    reps: Option<Vec<Permutation>>,
    inv_reps: Option<Vec<Permutation>>,
    /// Schreier–Sims cursor: generators already verified for each orbit point.
    checked: Vec<u32>,
}

impl Level {
    fn new(degree: usize, base: Point) -> Level {
        let mut pos = vec![NONE; degree];
        pos[base as usize] = 0;
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            pos,
            parent: vec![(NONE, NONE)],
            reps: Some(vec![Permutation::identity(degree)]),
            inv_reps: Some(vec![Permutation::identity(degree)]),
            checked: vec![0],
        }
    }

    #[inline]
    pub(crate) fn index_of(&self, p: Point) -> Option<usize> {
        let i = self.pos[p as usize];
        (i != NONE).then_some(i as usize)
    }

    /// Transversal element mapping the base point to `orbit[i]`.
    pub(crate) fn rep(&self, i: usize) -> Permutation {
        if let Some(reps) = &self.reps {
            return reps[i].clone();
        }
        let mut path = Vec::new();
        let mut j = i;
        while self.parent[j].0 != NONE {
            let (g, up) = self.parent[j];
            path.push(g);
            j = up as usize;
        }
        let mut u = Permutation::identity(self.pos.len());
        for &g in path.iter().rev() {
            u.mul_assign_right(&self.gens[g as usize]);
        }
        u
    }

    /// `h · rep(i)⁻¹`
    #[inline]
    fn strip_one(&self, h: &Permutation, i: usize) -> Permutation {
        match &self.inv_reps {
            Some(inv) => h.mul_unchecked(&inv[i]),
            None => h.mul_inverse_of(&self.rep(i)),
        }
    }

    /// Adds a generator and closes the orbit under all generators.
    fn add_generator(&mut self, g: Permutation, explicit_budget: &mut usize) {
        let degree = self.pos.len();
        self.gens.push(g);
        let new_gen = self.gens.len() - 1;
        // old points under the new generator
        let mut frontier_start = self.orbit.len();
        for j in 0..self.orbit.len() {
            let q = self.gens[new_gen].apply(self.orbit[j]);
            self.push_point(q, new_gen as u32, j as u32, degree, explicit_budget);
        }
        // new points under every generator
        while frontier_start < self.orbit.len() {
            let j = frontier_start;
            frontier_start += 1;
            for c in 0..self.gens.len() {
                let q = self.gens[c].apply(self.orbit[j]);
                self.push_point(q, c as u32, j as u32, degree, explicit_budget);
            }
        }
    }

    fn push_point(&mut self, q: Point, gen: u32, parent: u32, degree: usize, budget: &mut usize) {
        if self.pos[q as usize] != NONE {
            return;
        }
        let idx = self.orbit.len();
        self.pos[q as usize] = idx as u32;
        self.orbit.push(q);
        self.parent.push((gen, parent));
        self.checked.push(0);
        if self.reps.is_some() {
            if *budget >= 2 * degree {
                *budget -= 2 * degree;
                let reps = self.reps.as_mut().unwrap();
                let u = reps[parent as usize].mul_unchecked(&self.gens[gen as usize]);
                self.inv_reps.as_mut().unwrap().push(u.inverse());
                reps.push(u);
            } else {
                let freed = self.reps.as_ref().unwrap().len() * 2 * degree;
                *budget += freed;
                self.reps = None;
                self.inv_reps = None;
            }
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Chain {
    pub(crate) degree: usize,
    pub(crate) levels: Vec<Level>,
    budget: usize,
}

impl Chain {
    /// Builds a chain for `<gens>` whose base starts with `prefix`.
    pub(crate) fn build(degree: usize, gens: &[Permutation], prefix: &[Point]) -> Chain {
        let mut chain = Chain {
            degree,
            levels: Vec::new(),
            budget: EXPLICIT_LIMIT,
        };
        for &b in prefix {
            if !chain.levels.iter().any(|l| l.base == b) {
                chain.levels.push(Level::new(degree, b));
            }
        }
        for g in gens {
            chain.add_generator(g.clone());
        }
        chain
    }

    /// Extends the chain to the group generated by its current group and `g`.
    pub(crate) fn add_generator(&mut self, g: Permutation) {
        if g.is_identity() {
            return;
        }
        let (residue, _) = self.sift(&g, 0);
        if residue.is_identity() {
            return;
        }
        // g is a new generator at level 0 and at every level whose earlier
        // base points it fixes.
        let mut top = 0;
        loop {
            if top == self.levels.len() {
                let b = g.smallest_moved_point().expect("non-identity");
                self.levels.push(Level::new(self.degree, b));
            }
            let moves_base = g.apply(self.levels[top].base) != self.levels[top].base;
            self.levels[top].add_generator(g.clone(), &mut self.budget);
            if moves_base {
                break;
            }
            top += 1;
        }
        self.complete(top);
    }

    /// Schreier–Sims from level `start` upwards, assuming levels below it are
    /// complete.
    fn complete(&mut self, start: usize) {
        let mut i = start as isize;
        while i >= 0 {
            let lvl = i as usize;
            match self.find_failure(lvl) {
                None => i -= 1,
                Some((y, j)) => {
                    if j == self.levels.len() {
                        let b = y.smallest_moved_point().expect("non-identity residue");
                        self.levels.push(Level::new(self.degree, b));
                    }
                    for l in lvl + 1..=j {
                        self.levels[l].add_generator(y.clone(), &mut self.budget);
                    }
                    i = j as isize;
                }
            }
        }
    }

    /// First Schreier generator at `lvl` that does not sift through the levels
    /// below, together with its residue and the level where sifting stopped.
    fn find_failure(&mut self, lvl: usize) -> Option<(Permutation, usize)> {
        let mut a = 0;
        while a < self.levels[lvl].orbit.len() {
            let ngens = self.levels[lvl].gens.len() as u32;
            while self.levels[lvl].checked[a] < ngens {
                let c = self.levels[lvl].checked[a] as usize;
                let level = &self.levels[lvl];
                let ua = level.rep(a);
                let s = &level.gens[c];
                let image = s.apply(level.orbit[a]);
                let b = level.index_of(image).expect("orbit closed");
                let h = level.strip_one(&ua.mul_unchecked(s), b);
                if !h.is_identity() {
                    let (residue, j) = self.sift(&h, lvl + 1);
                    if !residue.is_identity() {
                        return Some((residue, j));
                    }
                }
                self.levels[lvl].checked[a] += 1;
            }
            a += 1;
        }
        None
    }

    /// Strips `g` through levels `from..`, returning the residue and the level
    /// at which stripping stopped (`levels.len()` when it went all the way).
    pub(crate) fn sift(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (k, level) in self.levels.iter().enumerate().skip(from) {
            let b = h.apply(level.base);
            match level.index_of(b) {
                None => return (h, k),
                Some(0) => {}
                Some(i) => h = level.strip_one(&h, i),
            }
        }
        (h, self.levels.len())
    }

    /// Orbit indices of `g` at each level, if `g` is in the group.
    pub(crate) fn coordinates(&self, g: &Permutation) -> Option<Vec<usize>> {
        let mut h = g.clone();
        let mut coords = Vec::with_capacity(self.levels.len());
        for level in &self.levels {
            let i = level.index_of(h.apply(level.base))?;
            if i != 0 {
                h = level.strip_one(&h, i);
            }
            coords.push(i);
        }
        h.is_identity().then_some(coords)
    }

    pub(crate) fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub(crate) fn base(&self) -> Vec<Point> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Chain of the pointwise stabiliser of the first `k` base points.
    pub(crate) fn tail(&self, k: usize) -> Chain {
        Chain {
            degree: self.degree,
            levels: self.levels[k.min(self.levels.len())..].to_vec(),
            budget: self.budget,
        }
    }

    /// Strong generators of the whole group (level 0 generators suffice).
    pub(crate) fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Element with the given orbit indices: `u_k ⋯ u_1 u_0`.
    pub(crate) fn element_at(&self, coords: &[usize]) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for (level, &c) in self.levels.iter().zip(coords).rev() {
            if c != 0 {
                g.mul_assign_right(&level.rep(c));
            }
        }
        g
    }
}
