//! Homomorphisms between permutation groups, defined by generator images.
//!
//! A homomorphism `φ: G → T` is realised through the "graph" group
//! `{(g, φ(g))}` acting on the disjoint union of both point sets. Its chain
//! with a base drawn from the source part lets us evaluate `φ`; a second
//! chain with a base drawn from the target part gives lifts and the kernel.

use std::sync::OnceLock;

use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::{Permutation, Point};

pub struct Homomorphism {
    source: PermGroup,
    image: PermGroup,
    gen_images: Vec<Permutation>,
    /// Points `0..n_src` carry the source, then the target.
    forward: Chain,
    /// Points `0..n_tgt` carry the target, then the source.
    backward: OnceLock<(Chain, usize)>,
}

impl std::fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Homomorphism")
            .field("source_order", &self.source.order())
            .field("image_order", &self.image.order())
            .finish()
    }
}

fn concat(first: &Permutation, second: &Permutation) -> Permutation {
    let off = first.degree() as Point;
    let mut images: Vec<Point> = first.images().to_vec();
    images.extend(second.images().iter().map(|&x| x + off));
    Permutation::from_images_unchecked(images)
}

fn part(p: &Permutation, start: usize, len: usize) -> Permutation {
    let off = start as Point;
    Permutation::from_images_unchecked(
        p.images()[start..start + len]
            .iter()
            .map(|&x| x - off)
            .collect(),
    )
}

impl Homomorphism {
    /// The homomorphism sending `source.generators()[i]` to `images[i]`.
    /// Fails if the assignment does not extend to a homomorphism.
    pub fn new(source: &PermGroup, target_degree: usize, images: Vec<Permutation>) -> Result<Self> {
        if images.len() != source.generators().len() {
            return Err(Error::NotHomomorphism(format!(
                "{} generators but {} images",
                source.generators().len(),
                images.len()
            )));
        }
        for t in &images {
            if t.degree() != target_degree {
                return Err(Error::DegreeMismatch {
                    left: target_degree,
                    right: t.degree(),
                });
            }
        }
        let n = source.degree();
        let graph_gens: Vec<Permutation> = source
            .generators()
            .iter()
            .zip(&images)
            .map(|(g, t)| concat(g, t))
            .collect();
        let forward = Chain::build(n + target_degree, &graph_gens, &source.base());
        if forward.order() != source.order() {
            return Err(Error::NotHomomorphism(format!(
                "generator images do not respect relations (graph order {} vs source order {})",
                forward.order(),
                source.order()
            )));
        }
        let image = PermGroup::new(target_degree, images.clone())?;
        Ok(Homomorphism {
            source: source.clone(),
            image,
            gen_images: images,
            forward,
            backward: OnceLock::new(),
        })
    }

    pub fn identity(group: &PermGroup) -> Homomorphism {
        Homomorphism::new(group, group.degree(), group.generators().to_vec())
            .expect("identity is a homomorphism")
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn image_group(&self) -> &PermGroup {
        &self.image
    }

    pub fn generator_images(&self) -> &[Permutation] {
        &self.gen_images
    }

    fn n_src(&self) -> usize {
        self.source.degree()
    }

    fn n_tgt(&self) -> usize {
        self.image.degree()
    }

    /// `φ(g)` for `g` in the source.
    pub fn image(&self, g: &Permutation) -> Result<Permutation> {
        if !self.source.contains(g) {
            return Err(Error::NotSubgroup("element outside the source group".into()));
        }
        let c = concat(g, &Permutation::identity(self.n_tgt()));
        let (residue, _) = self.forward.sift(&c, 0);
        // residue = (1, φ(g)⁻¹)
        Ok(part(&residue, self.n_src(), self.n_tgt()).inverse())
    }

    fn backward(&self) -> &(Chain, usize) {
        self.backward.get_or_init(|| {
            let graph_gens: Vec<Permutation> = self
                .source
                .generators()
                .iter()
                .zip(&self.gen_images)
                .map(|(g, t)| concat(t, g))
                .collect();
            let prefix = self.image.base();
            let chain = Chain::build(self.n_tgt() + self.n_src(), &graph_gens, &prefix);
            let k = chain
                .levels
                .iter()
                .take_while(|l| (l.base as usize) < self.n_tgt())
                .count();
            debug_assert!(chain.levels[k..]
                .iter()
                .all(|l| (l.base as usize) >= self.n_tgt()));
            (chain, k)
        })
    }

    /// Some preimage of `t`.
    pub fn lift(&self, t: &Permutation) -> Result<Permutation> {
        if !self.image.contains(t) {
            return Err(Error::NotInImage);
        }
        let (chain, k) = self.backward();
        let c = concat(t, &Permutation::identity(self.n_src()));
        let (residue, _) = chain.sift(&c, 0);
        let _ = k;
        debug_assert!(part(&residue, 0, self.n_tgt()).is_identity());
        Ok(part(&residue, self.n_tgt(), self.n_src()).inverse())
    }

    pub fn kernel(&self) -> PermGroup {
        let (chain, k) = self.backward();
        let tail = chain.tail(*k);
        let gens: Vec<Permutation> = tail
            .strong_generators()
            .iter()
            .map(|g| part(g, self.n_tgt(), self.n_src()))
            .collect();
        let kernel = PermGroup::from_gens_unchecked(self.n_src(), gens);
        debug_assert_eq!(kernel.order() * self.image.order(), self.source.order());
        kernel
    }

    pub fn is_injective(&self) -> bool {
        self.image.order() == self.source.order()
    }

    /// `φ(S)` for a subgroup `S` of the source.
    pub fn image_of(&self, sub: &PermGroup) -> Result<PermGroup> {
        let gens = sub
            .generators()
            .iter()
            .map(|g| self.image(g))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(self.n_tgt(), gens)
    }

    /// Full preimage of a subgroup of the image.
    pub fn preimage(&self, sub: &PermGroup) -> Result<PermGroup> {
        let mut out = self.kernel();
        for t in sub.generators() {
            out = out.with_generator(&self.lift(t)?);
        }
        Ok(out)
    }
}
