//! Permutations of `{0, .., n-1}` stored as image arrays.
//!
//! Composition is left-to-right throughout the crate: `g.compose(&h)` (also
//! written `g * h`) first applies `g`, then `h`, so `(g * h)(x) = h(g(x))`.
//! Conjugation follows the same convention: `x.conjugate_by(&g) = g⁻¹ x g`.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Point type. Degrees never exceed `u32::MAX`.
pub type Point = u32;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point>", into = "Vec<Point>")]
pub struct Permutation {
    images: Vec<Point>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as Point).collect(),
        }
    }

    /// Validates that `images` is a bijection of `{0, .., len-1}`.
    pub fn from_images(images: Vec<Point>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &im) in images.iter().enumerate() {
            let im = im as usize;
            if im >= n {
                return Err(Error::MalformedPermutation(format!(
                    "image {im} of point {i} is outside 0..{n}"
                )));
            }
            if seen[im] {
                return Err(Error::MalformedPermutation(format!(
                    "point {im} is the image of two points"
                )));
            }
            seen[im] = true;
        }
        Ok(Permutation { images })
    }

    /// Caller guarantees bijectivity.
    pub(crate) fn from_images_unchecked(images: Vec<Point>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2], &[3, 4]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[Point]]) -> Result<Self> {
        let mut images: Vec<Point> = (0..degree as Point).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a as usize >= degree || b as usize >= degree {
                    return Err(Error::MalformedPermutation(format!(
                        "cycle point outside 0..{degree}"
                    )));
                }
                if touched[a as usize] {
                    return Err(Error::MalformedPermutation(format!(
                        "point {a} appears in two cycles"
                    )));
                }
                touched[a as usize] = true;
                images[a as usize] = b;
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Point] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: Point) -> Point {
        self.images[x as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &im)| i as Point == im)
    }

    /// Apply `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul_unchecked(other))
    }

    #[inline]
    pub(crate) fn mul_unchecked(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    /// In-place `self = self * other`.
    #[inline]
    pub(crate) fn mul_assign_right(&mut self, other: &Permutation) {
        for im in self.images.iter_mut() {
            *im = other.images[*im as usize];
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &im) in self.images.iter().enumerate() {
            inv[im as usize] = i as Point;
        }
        Permutation { images: inv }
    }

    /// `self * other⁻¹` without materialising the inverse.
    #[inline]
    pub(crate) fn mul_inverse_of(&self, other: &Permutation) -> Permutation {
        let mut inv = vec![0 as Point; other.degree()];
        for (i, &im) in other.images.iter().enumerate() {
            inv[im as usize] = i as Point;
        }
        Permutation {
            images: self.images.iter().map(|&i| inv[i as usize]).collect(),
        }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        // (g⁻¹ x g)(g(i)) = g(x(i))
        let mut out = vec![0; self.degree()];
        for i in 0..self.degree() {
            out[g.images[i] as usize] = g.images[self.images[i] as usize];
        }
        Permutation { images: out }
    }

    /// `self⁻¹ · other⁻¹ · self · other`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        let inv = self.inverse();
        inv.mul_unchecked(&self.conjugate_by(other))
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// Lengths of all cycles, fixed points included, in order of least point.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            lens.push(len);
        }
        lens
    }

    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .into_iter()
            .fold(1u64, |acc, l| lcm(acc, l as u64))
    }

    pub fn is_even(&self) -> bool {
        self.cycle_lengths().iter().map(|l| l - 1).sum::<usize>() % 2 == 0
    }

    pub fn smallest_moved_point(&self) -> Option<Point> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &im)| *i as Point != im)
            .map(|(i, _)| i as Point)
    }

    /// Cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<Point>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x as Point);
                x = self.images[x] as usize;
            }
            out.push(cyc);
        }
        out
    }

    /// Restriction to an invariant list of points, relabelled by position.
    pub(crate) fn restrict(&self, points: &[Point], position: &[Option<u32>]) -> Option<Permutation> {
        let mut images = Vec::with_capacity(points.len());
        for &p in points {
            images.push(position[self.apply(p) as usize]?);
        }
        Some(Permutation { images })
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl TryFrom<Vec<Point>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<Point>) -> Result<Self> {
        Permutation::from_images(v)
    }
}

impl From<Permutation> for Vec<Point> {
    fn from(p: Permutation) -> Vec<Point> {
        p.images
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    /// Panics on degree mismatch; use [`Permutation::compose`] for a checked product.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.mul_unchecked(rhs)
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, cycles: &[&[Point]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let g = p(3, &[&[0, 1, 2]]);
        assert_eq!(g.compose(&Permutation::identity(3)).unwrap(), g);
    }

    #[test]
    fn involution_squares_to_identity() {
        let t = p(3, &[&[0, 1]]);
        assert!(t.compose(&t).unwrap().is_identity());
    }

    /// All 36 products on three points, checked against the rule
    /// "apply the left factor first".
    #[test]
    fn three_point_multiplication_table() {
        let mut all = Vec::new();
        for a in 0..3u32 {
            for b in 0..3u32 {
                for c in 0..3u32 {
                    if a != b && b != c && a != c {
                        all.push(Permutation::from_images(vec![a, b, c]).unwrap());
                    }
                }
            }
        }
        assert_eq!(all.len(), 6);
        for g in &all {
            for h in &all {
                let gh = g.compose(h).unwrap();
                for x in 0..3 {
                    assert_eq!(gh.apply(x), h.apply(g.apply(x)));
                }
            }
        }
        // (0 1 2) then (0 1): 0->1->0, 1->2->2, 2->0->1, i.e. (1 2).
        let g = p(3, &[&[0, 1, 2]]);
        let h = p(3, &[&[0, 1]]);
        assert_eq!(g.compose(&h).unwrap(), p(3, &[&[1, 2]]));
        assert_eq!(h.compose(&g).unwrap(), p(3, &[&[0, 2]]));
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let g = Permutation::identity(3);
        let h = Permutation::identity(4);
        assert!(matches!(g.compose(&h), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn malformed_images_rejected() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_cycles(4, &[&[0, 1], &[1, 2]]).is_err());
    }

    #[test]
    fn conjugation_and_commutator() {
        let x = p(4, &[&[0, 1]]);
        let g = p(4, &[&[0, 2], &[1, 3]]);
        assert_eq!(x.conjugate_by(&g), p(4, &[&[2, 3]]));
        let explicit = &(&(&g.inverse() * &x) * &g) * &Permutation::identity(4);
        assert_eq!(explicit, x.conjugate_by(&g));
        let c = x.commutator(&g);
        assert_eq!(c, &(&(&x.inverse() * &g.inverse()) * &x) * &g);
    }

    #[test]
    fn order_and_parity() {
        let g = p(6, &[&[0, 1, 2], &[3, 4]]);
        assert_eq!(g.order(), 6);
        assert!(!g.is_even());
        assert!(g.pow(6).is_identity());
        assert_eq!(format!("{g}"), "(0 1 2)(3 4)");
    }

    #[test]
    fn json_form_is_the_image_array() {
        let g = p(4, &[&[0, 1, 2, 3]]);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, "[1,2,3,0]");
        let back: Permutation = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Permutation>("[1,1,0]").is_err());
    }
}
