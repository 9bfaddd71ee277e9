use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::hom::Homomorphism;
use crate::perm::{Permutation, Point};

/// `G = K ⋊ H` acting on the elements of `K`: `K` by right multiplication,
/// `H` by automorphisms. Point `r` is the element of rank `r` in `k`; the
/// identity has rank 0, so `H` is the stabiliser of point 0.
#[derive(Debug, Clone)]
pub struct SemidirectSpec {
    /// `K` in any faithful representation.
    pub k: PermGroup,
    /// For each generator of `H`, the images of the generators of `k`.
    pub h_images: Vec<Vec<Permutation>>,
    /// The realisation on `|K|` points.
    pub group: PermGroup,
    /// `K` as the regular normal subgroup of `group`.
    pub regular: PermGroup,
    /// `H` as the stabiliser of point 0 in `group`.
    pub complement: PermGroup,
}

impl SemidirectSpec {
    /// Checks that each image list defines an automorphism of `k`.
    pub fn new(k: &PermGroup, h_images: Vec<Vec<Permutation>>) -> Result<SemidirectSpec> {
        let elements = k.elements()?;
        let n = elements.len();
        let rank = |g: &Permutation| k.rank(g).expect("element of K") as Point;
        let right = |m: &Permutation| -> Permutation {
            Permutation::from_images_unchecked(
                elements.iter().map(|x| rank(&x.mul_unchecked(m))).collect(),
            )
        };
        let regular_gens: Vec<Permutation> = k.generators().iter().map(right).collect();
        let mut h_gens = Vec::new();
        for images in &h_images {
            for im in images {
                if !k.contains(im) {
                    return Err(Error::NotHomomorphism("automorphism image outside K".into()));
                }
            }
            let phi = Homomorphism::new(k, k.degree(), images.clone())?;
            if !phi.is_injective() {
                return Err(Error::NotHomomorphism("map on K is not injective".into()));
            }
            let perm: Vec<Point> = elements
                .iter()
                .map(|x| Ok(rank(&phi.image(x)?)))
                .collect::<Result<_>>()?;
            h_gens.push(Permutation::from_images(perm)?);
        }
        let regular = PermGroup::new(n, regular_gens)?;
        let complement = PermGroup::new(n, h_gens)?;
        let group = regular.join(&complement);
        Ok(SemidirectSpec {
            k: k.clone(),
            h_images,
            group,
            regular,
            complement,
        })
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    /// The element of `K` sitting at a point.
    pub fn element_at(&self, point: Point) -> Permutation {
        self.k.unrank(point as u128).expect("point of the spec")
    }

    /// Right multiplication by an element of `K`, as a permutation of the points.
    pub fn right_mult(&self, m: &Permutation) -> Permutation {
        let n = self.degree();
        Permutation::from_images_unchecked(
            (0..n as Point)
                .map(|r| {
                    let x = self.element_at(r);
                    self.k.rank(&x.mul_unchecked(m)).expect("element of K") as Point
                })
                .collect(),
        )
    }

    /// `φ_h(x)` for `h` in the complement.
    pub fn act(&self, h: &Permutation, x: &Permutation) -> Permutation {
        let r = self.k.rank(x).expect("element of K") as Point;
        self.element_at(h.apply(r))
    }

    /// The subgroup of `K` (in the original representation) corresponding
    /// to a subgroup of the regular normal subgroup.
    pub fn to_k(&self, sub: &PermGroup) -> PermGroup {
        let gens = sub
            .generators()
            .iter()
            .map(|g| self.element_at(g.apply(0)))
            .collect();
        PermGroup::from_gens_unchecked(self.k.degree(), gens)
    }

    /// The subgroup of the realisation acting by right multiplication by `sub ≤ K`.
    pub fn from_k(&self, sub: &PermGroup) -> PermGroup {
        let gens = sub.generators().iter().map(|g| self.right_mult(g)).collect();
        PermGroup::from_gens_unchecked(self.degree(), gens)
    }
}
