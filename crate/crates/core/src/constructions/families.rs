use serde::{Deserialize, Serialize};

use super::field::Gf;
use crate::action::{coset_action, CosetAction};
use crate::arith::{is_power_of, is_prime};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::hom::Homomorphism;
use crate::perm::{Permutation, Point};
use crate::semiprim::SemidirectSpec;

/// Largest `|K|` any family builder will realise.
pub const MAX_REGULAR: u128 = 100_000;
/// Largest degree of the order-3 family.
pub const MAX_C3_DEGREE: u128 = 10_000;
/// Largest odd-order extraspecial group, `3^5`.
pub const MAX_EXTRASPECIAL: u128 = 243;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Inversion,
    Vector,
    Extraspecial,
    C3family,
    Diagonal,
    Custom,
}

/// A semidirect product `K ⋊ H` from one of the example families.
#[derive(Debug, Clone)]
pub struct GroupRecipe {
    pub family: Family,
    pub label: String,
    /// `|K| · |H|` from the closed form of the family.
    pub expected_order: u128,
    pub spec: SemidirectSpec,
}

impl GroupRecipe {
    fn new(family: Family, label: String, expected_order: u128, spec: SemidirectSpec) -> Result<GroupRecipe> {
        if spec.group.order() != expected_order {
            return Err(Error::InvalidParameter(format!(
                "{label}: realised order {} but expected {expected_order}",
                spec.group.order()
            )));
        }
        Ok(GroupRecipe {
            family,
            label,
            expected_order,
            spec,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.spec.group
    }
}

/// `K ⋊ H` with `H` given by the images of the generators of `K`.
pub fn semidirect(k: &PermGroup, h_images: Vec<Vec<Permutation>>) -> Result<SemidirectSpec> {
    SemidirectSpec::new(k, h_images)
}

/// A custom semidirect product, checked only for being well defined.
pub fn custom(label: &str, k: &PermGroup, h_images: Vec<Vec<Permutation>>) -> Result<GroupRecipe> {
    let spec = semidirect(k, h_images)?;
    let order = spec.regular.order() * spec.complement.order();
    GroupRecipe::new(Family::Custom, label.to_owned(), order, spec)
}

fn check_regular_size(size: u128) -> Result<()> {
    if size > MAX_REGULAR {
        Err(Error::CapExceeded {
            what: "family size",
            limit: MAX_REGULAR,
            actual: size,
        })
    } else {
        Ok(())
    }
}

/// Direct product of cyclic groups of the given orders, each rotating its
/// own block of points.
#[derive(Debug, Clone)]
pub struct AbelianBlocks {
    pub moduli: Vec<u32>,
    pub group: PermGroup,
}

impl AbelianBlocks {
    pub fn new(moduli: &[u32]) -> Result<AbelianBlocks> {
        let gens = (0..moduli.len())
            .map(|i| {
                let mut e = vec![0; moduli.len()];
                e[i] = 1;
                Self::element_of(moduli, &e)
            })
            .collect();
        let degree = moduli.iter().map(|&m| m as usize).sum();
        Ok(AbelianBlocks {
            moduli: moduli.to_vec(),
            group: PermGroup::new(degree, gens)?,
        })
    }

    fn element_of(moduli: &[u32], exps: &[u32]) -> Permutation {
        let mut images = Vec::new();
        let mut off = 0;
        for (&m, &e) in moduli.iter().zip(exps) {
            images.extend((0..m).map(|x| off + (x + e) % m));
            off += m;
        }
        Permutation::from_images_unchecked(images)
    }

    /// The element with the given exponent on each cyclic factor.
    pub fn element(&self, exps: &[u32]) -> Permutation {
        Self::element_of(&self.moduli, exps)
    }
}

/// Parses `c5`, `c9xc3`, .. into exponents of `q`.
pub fn abelian_shape(q: u32, text: &str) -> Result<Vec<u32>> {
    text.split(['x', '*'])
        .map(|part| {
            let n: u128 = part
                .trim()
                .trim_start_matches(['c', 'C'])
                .parse()
                .map_err(|_| Error::Parse(format!("bad cyclic factor {part:?}")))?;
            if n < q as u128 || !is_power_of(n, q as u128) {
                return Err(Error::InvalidParameter(format!("{n} is not a power of {q}")));
            }
            let mut k = 0;
            let mut m = n;
            while m > 1 {
                m /= q as u128;
                k += 1;
            }
            Ok(k)
        })
        .collect()
}

fn shape_label(q: u32, shape: &[u32]) -> String {
    shape
        .iter()
        .map(|&e| format!("C{}", q.pow(e)))
        .collect::<Vec<_>>()
        .join("x")
}

/// `P ⋊ C2` with `C2` inverting the abelian q-group `P = ∏ C_{q^e}`.
pub fn family_inversion(q: u32, shape: &[u32]) -> Result<GroupRecipe> {
    if q == 2 || !is_prime(q as u128) {
        return Err(Error::InvalidParameter(format!("q = {q} must be an odd prime")));
    }
    if shape.is_empty() || shape.contains(&0) {
        return Err(Error::InvalidParameter("P must be a nontrivial q-group".into()));
    }
    let moduli: Vec<u32> = shape.iter().map(|&e| q.pow(e)).collect();
    let size: u128 = moduli.iter().map(|&m| m as u128).product();
    check_regular_size(size)?;
    let p = AbelianBlocks::new(&moduli)?;
    let inv = p.group.generators().iter().map(Permutation::inverse).collect();
    let spec = semidirect(&p.group, vec![inv])?;
    let label = format!("inversion(q={q},P={})", shape_label(q, shape));
    GroupRecipe::new(Family::Inversion, label, size * 2, spec)
}

fn gl_order(n: u32, big_q: u128) -> u128 {
    let qn = big_q.pow(n);
    (0..n).map(|i| qn - big_q.pow(i)).product()
}

/// Generators of `GL(n, F)`: the elementary transvections and `diag(ω, 1, ..)`.
fn gl_generators(f: &Gf, n: usize) -> Vec<Vec<Vec<u32>>> {
    let identity = |n: usize| -> Vec<Vec<u32>> {
        (0..n)
            .map(|i| (0..n).map(|j| u32::from(i == j)).collect())
            .collect()
    };
    let mut gens = Vec::new();
    if f.order() > 2 {
        let mut d = identity(n);
        d[0][0] = f.primitive();
        gens.push(d);
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut t = identity(n);
                t[i][j] = 1;
                gens.push(t);
            }
        }
    }
    gens
}

/// `W ⋊ GL(V)` on `W = V^m`, `V = (F_{q^a})^n`, `GL(V)` acting on each copy.
pub fn family_vector(q: u32, a: u32, n: u32, m: u32) -> Result<GroupRecipe> {
    if !is_prime(q as u128) || a == 0 || n == 0 || m == 0 {
        return Err(Error::InvalidParameter(format!("bad vector parameters q={q} a={a} n={n} m={m}")));
    }
    let dim = a * n * m;
    let size = (q as u128).checked_pow(dim).unwrap_or(u128::MAX);
    check_regular_size(size)?;
    let f = Gf::new(q, a)?;
    let w = AbelianBlocks::new(&vec![q; dim as usize])?;
    let (n, a, m) = (n as usize, a as usize, m as usize);
    let coord = |c: usize, i: usize, k: usize| (c * n + i) * a + k;
    let basis = f.basis();
    let mut h_images = Vec::new();
    for mat in gl_generators(&f, n) {
        let mut images = Vec::new();
        for c in 0..m {
            for row in &mat {
                for &b in &basis {
                    let mut exps = vec![0; dim as usize];
                    for (j, &e) in row.iter().enumerate() {
                        for (k, d) in f.digits(f.mul(b, e)).into_iter().enumerate() {
                            exps[coord(c, j, k)] = d;
                        }
                    }
                    images.push(w.element(&exps));
                }
            }
        }
        h_images.push(images);
    }
    let spec = semidirect(&w.group, h_images)?;
    let big_q = (q as u128).pow(a as u32);
    let label = format!("vector(q={q},a={a},n={n},m={m})");
    GroupRecipe::new(Family::Vector, label, size * gl_order(n as u32, big_q), spec)
}

/// Right-regular permutation of a group on `0..n` given by its product.
fn right_regular(n: usize, mul: &impl Fn(usize, usize) -> usize, e: usize) -> Permutation {
    Permutation::from_images_unchecked((0..n).map(|x| mul(x, e) as Point).collect())
}

/// An extraspecial group of order `q^3` in its regular representation,
/// with a distinguished generating pair.
#[derive(Debug, Clone)]
pub struct Extraspecial {
    pub q: u32,
    pub group: PermGroup,
    /// Generators `x, y` with `[x, y]` generating the centre.
    pub x: Permutation,
    pub y: Permutation,
}

impl Extraspecial {
    /// The element `(v1, v2, 0)` of the symplectic model.
    fn vector(&self, v1: u32, v2: u32) -> Permutation {
        let q = self.q as usize;
        let mul = |a, b| symplectic_mul(q, a, b);
        right_regular(q * q * q, &mul, (v1 as usize % q * q + v2 as usize % q) * q)
    }

    /// The automorphism induced by `M ∈ SL2(q)`, as images of `x` and `y`.
    pub fn symplectic_images(&self, m: [[u32; 2]; 2]) -> Vec<Permutation> {
        vec![self.vector(m[0][0], m[0][1]), self.vector(m[1][0], m[1][1])]
    }
}

/// `q_+^{1+2m}` for odd `q` and `m = 1` (symplectic model), and for `q = 2`
/// the dihedral (plus type) or quaternion (minus type) group of order 8.
pub fn extraspecial_group(q: u32, plus_type: bool, m: u32) -> Result<Extraspecial> {
    if m != 1 {
        return Err(Error::InvalidParameter(format!(
            "extraspecial groups with m = {m} are beyond the supported range (m = 1)"
        )));
    }
    if q == 2 {
        // Elements s*4 + u with u in {1, i, j, k} for Q8, a + 4b = r^a s^b for D8.
        let mul = |x: usize, y: usize| -> usize {
            let (s, u) = (x / 4, x % 4);
            let (t, v) = (y / 4, y % 4);
            if plus_type {
                let a = if s == 0 { u + v } else { u + 4 - v };
                (a % 4) + 4 * ((t + s) % 2)
            } else {
                const UNIT: [[(usize, usize); 4]; 4] = [
                    [(0, 0), (0, 1), (0, 2), (0, 3)],
                    [(0, 1), (1, 0), (0, 3), (1, 2)],
                    [(0, 2), (1, 3), (1, 0), (0, 1)],
                    [(0, 3), (0, 2), (1, 1), (1, 0)],
                ];
                let (sign, w) = UNIT[u][v];
                ((s + t + sign) % 2) * 4 + w
            }
        };
        // D8: x = r, y = s, [r, s] = r² central.
        let (gx, gy) = if plus_type { (1, 4) } else { (1, 2) };
        let x = right_regular(8, &mul, gx);
        let y = right_regular(8, &mul, gy);
        let group = PermGroup::new(8, vec![x.clone(), y.clone()])?;
        return Ok(Extraspecial {
            q,
            group,
            x,
            y,
        });
    }
    if !is_prime(q as u128) || !plus_type {
        return Err(Error::InvalidParameter(format!(
            "only plus type extraspecial groups of odd prime q are supported, got q = {q}"
        )));
    }
    let n = (q as u128).pow(3);
    if n > MAX_EXTRASPECIAL {
        return Err(Error::CapExceeded {
            what: "extraspecial order",
            limit: MAX_EXTRASPECIAL,
            actual: n,
        });
    }
    let qq = q as usize;
    let mul = |a, b| symplectic_mul(qq, a, b);
    let x = right_regular(n as usize, &mul, qq * qq);
    let y = right_regular(n as usize, &mul, qq);
    let group = PermGroup::new(n as usize, vec![x.clone(), y.clone()])?;
    Ok(Extraspecial { q, group, x, y })
}

/// `(v, z)(w, z') = (v + w, z + z' + ω(v, w)/2)` with `ω(v, w) = v1 w2 - v2 w1`,
/// the element `(v1, v2, z)` being `(v1 q + v2) q + z`.
fn symplectic_mul(q: usize, x: usize, y: usize) -> usize {
    let half = q.div_ceil(2);
    let (v1, v2, z) = (x / (q * q), x / q % q, x % q);
    let (w1, w2, z2) = (y / (q * q), y / q % q, y % q);
    let omega = (v1 * w2 + q * q - v2 * w1 % (q * q)) % q;
    let zz = (z + z2 + half * omega) % q;
    ((v1 + w1) % q * q + (v2 + w2) % q) * q + zz
}

/// `E ⋊ SL2(q)` with `E = q_+^{1+2}` and `SL2(q)` acting symplectically.
pub fn family_extraspecial(q: u32, m: u32) -> Result<GroupRecipe> {
    if q == 2 {
        return Err(Error::InvalidParameter("q must be odd".into()));
    }
    let e = extraspecial_group(q, true, m)?;
    let h_images = vec![
        e.symplectic_images([[1, 1], [0, 1]]),
        e.symplectic_images([[1, 0], [1, 1]]),
    ];
    let spec = semidirect(&e.group, h_images)?;
    let q = q as u128;
    let label = format!("extraspecial(q={q},m={m})");
    GroupRecipe::new(Family::Extraspecial, label, q.pow(3) * q * (q * q - 1), spec)
}

/// `(V_1 × .. × V_r) ⋊ C3` for primes `p_i ≡ -1 (mod 3)`, `V_i = p_i^{1+2}`
/// or `Q8` for `p_i = 2`, with `C3` acting on each `V_i` by an automorphism
/// of order three.
pub fn family_c3(primes: &[u32]) -> Result<GroupRecipe> {
    let mut pi = primes.to_vec();
    pi.sort_unstable();
    pi.dedup();
    if pi.is_empty() {
        return Err(Error::InvalidParameter("empty set of primes".into()));
    }
    for &p in &pi {
        if !is_prime(p as u128) || p % 3 != 2 {
            return Err(Error::InvalidParameter(format!("{p} is not a prime congruent to -1 mod 3")));
        }
    }
    let degree: u128 = pi.iter().map(|&p| (p as u128).pow(3)).product();
    if degree > MAX_C3_DEGREE {
        return Err(Error::CapExceeded {
            what: "order-3 family degree",
            limit: MAX_C3_DEGREE,
            actual: degree,
        });
    }
    let mut factors = Vec::new();
    for &p in &pi {
        let v = if p == 2 {
            extraspecial_group(2, false, 1)?
        } else {
            extraspecial_group(p, true, 1)?
        };
        // i → j → k for Q8; the companion matrix of x² + x + 1 otherwise.
        let images = if p == 2 {
            vec![v.y.clone(), v.x.mul_unchecked(&v.y)]
        } else {
            v.symplectic_images([[0, 1], [p - 1, p - 1]])
        };
        factors.push((v, images));
    }
    let total: usize = factors.iter().map(|(v, _)| v.group.degree()).sum();
    let embed = |g: &Permutation, off: usize| -> Permutation {
        let mut images: Vec<Point> = (0..total as Point).collect();
        for (i, &x) in g.images().iter().enumerate() {
            images[off + i] = off as Point + x;
        }
        Permutation::from_images_unchecked(images)
    };
    let mut k_gens = Vec::new();
    let mut t_images = Vec::new();
    let mut off = 0;
    for (v, images) in &factors {
        k_gens.push(embed(&v.x, off));
        k_gens.push(embed(&v.y, off));
        t_images.extend(images.iter().map(|g| embed(g, off)));
        off += v.group.degree();
    }
    let k = PermGroup::new(total, k_gens)?;
    let spec = semidirect(&k, vec![t_images])?;
    let names: Vec<String> = pi.iter().map(u32::to_string).collect();
    let label = format!("c3family(pi={{{}}})", names.join(","));
    GroupRecipe::new(Family::C3family, label, degree * 3, spec)
}

/// `A5³:2` acting on the cosets of `⟨D, x⟩`, with `D` the full diagonal and
/// `x` an involution inducing an outer automorphism on each factor.
#[derive(Debug)]
pub struct DiagonalCounterexample {
    /// The group on 15 points, three blocks of five.
    pub model: PermGroup,
    /// `T_1, T_2, T_3` in the model.
    pub factors: [PermGroup; 3],
    /// `⟨D, x⟩` in the model.
    pub stabilizer: PermGroup,
    /// The action on the 3600 cosets of the stabiliser.
    pub action: CosetAction,
}

impl DiagonalCounterexample {
    pub fn group(&self) -> &PermGroup {
        &self.action.image
    }

    /// Model to action.
    pub fn hom(&self) -> &Homomorphism {
        self.action.hom()
    }

    /// `T_i T_j` in the action.
    pub fn product_of_factors(&self, i: usize, j: usize) -> Result<PermGroup> {
        self.hom().image_of(&self.factors[i].join(&self.factors[j]))
    }

    /// The same group as `T_1 T_2 ⋊ ⟨D, x⟩`, with `⟨D, x⟩` acting by
    /// conjugation.
    pub fn recipe(&self) -> Result<GroupRecipe> {
        let k = self.factors[0].join(&self.factors[1]);
        let h_images = self
            .stabilizer
            .generators()
            .iter()
            .map(|h| k.generators().iter().map(|g| g.conjugate_by(h)).collect())
            .collect();
        let spec = semidirect(&k, h_images)?;
        GroupRecipe::new(Family::Diagonal, "diagonal(A5^3:2)".into(), 3600 * 120, spec)
    }
}

pub fn diagonal_counterexample() -> Result<DiagonalCounterexample> {
    let block = |cycle: &[Point], off: Point| -> Vec<Point> { cycle.iter().map(|&x| x + off).collect() };
    let five: [Point; 5] = [0, 1, 2, 3, 4];
    let three: [Point; 3] = [0, 1, 2];
    let mut t = Vec::new();
    for i in 0..3 {
        let off = 5 * i as Point;
        t.push(PermGroup::new(
            15,
            vec![
                Permutation::from_cycles(15, &[&block(&five, off)])?,
                Permutation::from_cycles(15, &[&block(&three, off)])?,
            ],
        )?);
    }
    let diag = |c: &[Point]| -> Result<Permutation> {
        let cycles: Vec<Vec<Point>> = (0..3).map(|i| block(c, 5 * i)).collect();
        let refs: Vec<&[Point]> = cycles.iter().map(Vec::as_slice).collect();
        Permutation::from_cycles(15, &refs)
    };
    let x = diag(&[0, 1])?;
    let stabilizer = PermGroup::new(15, vec![diag(&five)?, diag(&three)?, x.clone()])?;
    let mut gens: Vec<Permutation> = t.iter().flat_map(|g| g.generators().to_vec()).collect();
    gens.push(x);
    let model = PermGroup::new(15, gens)?;
    let action = coset_action(&model, &stabilizer)?;
    let factors = [t[0].clone(), t[1].clone(), t[2].clone()];
    Ok(DiagonalCounterexample {
        model,
        factors,
        stabilizer,
        action,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{center, derived_subgroup};

    #[test]
    fn inversion_family_orders() {
        let d5 = family_inversion(5, &[1]).unwrap();
        assert_eq!(d5.group().degree(), 5);
        assert_eq!(d5.group().order(), 10);
        let r = family_inversion(3, &[2, 1]).unwrap();
        assert_eq!(r.group().order(), 54);
        assert!(family_inversion(2, &[1]).is_err());
        assert!(family_inversion(9, &[1]).is_err());
        assert_eq!(abelian_shape(5, "c25xc5").unwrap(), vec![2, 1]);
        assert!(abelian_shape(5, "c10").is_err());
    }

    #[test]
    fn vector_family_orders() {
        let s4 = family_vector(2, 1, 2, 1).unwrap();
        assert_eq!(s4.group().order(), 24);
        assert_eq!(s4.group().degree(), 4);
        assert_eq!(family_vector(2, 2, 1, 1).unwrap().group().order(), 12);
        assert_eq!(family_vector(3, 1, 2, 1).unwrap().group().order(), 9 * 48);
        assert_eq!(family_vector(2, 1, 2, 2).unwrap().group().order(), 16 * 6);
        assert!(family_vector(2, 1, 17, 1).is_err());
    }

    #[test]
    fn extraspecial_groups() {
        for q in [3, 5] {
            let e = extraspecial_group(q, true, 1).unwrap();
            let q = q as u128;
            assert_eq!(e.group.order(), q * q * q);
            let z = center(&e.group).unwrap();
            assert_eq!(z.order(), q);
            assert!(derived_subgroup(&e.group).same_group(&z));
            assert!(e.group.elements().unwrap().iter().all(|g| g.order() as u128 <= q));
        }
        let q8 = extraspecial_group(2, false, 1).unwrap();
        assert_eq!(q8.group.order(), 8);
        assert_eq!(center(&q8.group).unwrap().order(), 2);
        assert_eq!(derived_subgroup(&q8.group).order(), 2);
        let invols = q8.group.elements().unwrap().iter().filter(|g| g.order() == 2).count();
        assert_eq!(invols, 1);
        let d8 = extraspecial_group(2, true, 1).unwrap();
        assert_eq!(d8.group.order(), 8);
        assert!(!d8.group.is_abelian());
        assert!(extraspecial_group(3, true, 2).is_err());
    }

    #[test]
    fn extraspecial_family_order() {
        let r = family_extraspecial(3, 1).unwrap();
        assert_eq!(r.group().degree(), 27);
        assert_eq!(r.group().order(), 648);
    }

    #[test]
    fn c3_family_orders() {
        assert_eq!(family_c3(&[2]).unwrap().group().order(), 24);
        let r = family_c3(&[2, 5]).unwrap();
        assert_eq!(r.group().degree(), 1000);
        assert_eq!(r.group().order(), 3000);
        assert!(family_c3(&[7]).is_err());
        assert!(family_c3(&[2, 11]).is_err());
    }

    #[test]
    fn diagonal_example_degree_and_order() {
        let d = diagonal_counterexample().unwrap();
        assert_eq!(d.model.order(), 432_000);
        assert_eq!(d.stabilizer.order(), 120);
        assert_eq!(d.group().degree(), 3600);
        assert_eq!(d.group().order(), 432_000);
        assert!(d.hom().is_injective());
        let r = d.recipe().unwrap();
        assert_eq!(r.group().degree(), 3600);
        assert!(is_regular_on_3600(&d.product_of_factors(0, 1).unwrap()));
    }

    fn is_regular_on_3600(g: &PermGroup) -> bool {
        g.is_transitive() && g.order() == 3600
    }
}
