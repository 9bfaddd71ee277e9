use crate::arith::is_prime;
use crate::error::{Error, Result};

/// The field with `p^a` elements. Element `x` is the polynomial whose
/// coefficients are the base-`p` digits of `x`, least significant first.
#[derive(Debug, Clone)]
pub struct Gf {
    p: u32,
    a: u32,
    q: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl Gf {
    /// Uses the first monic polynomial of degree `a` (in base-`p` order of
    /// its lower coefficients) for which `x` has order `p^a - 1`.
    pub fn new(p: u32, a: u32) -> Result<Gf> {
        if !is_prime(p as u128) || a == 0 {
            return Err(Error::InvalidParameter(format!("no field of order {p}^{a}")));
        }
        let q = p
            .checked_pow(a)
            .filter(|&q| q <= 1 << 20)
            .ok_or_else(|| Error::InvalidParameter(format!("field {p}^{a} too large")))?;
        for low in 0..q {
            if let Some(exp) = powers_of_x(p, a, low) {
                let mut log = vec![0; q as usize];
                for (i, &e) in exp.iter().enumerate() {
                    log[e as usize] = i as u32;
                }
                return Ok(Gf { p, a, q, exp, log });
            }
        }
        unreachable!("primitive polynomials exist in every degree")
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.a
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// A generator of the multiplicative group.
    pub fn primitive(&self) -> u32 {
        self.exp[1 % self.exp.len()]
    }

    pub fn add(&self, x: u32, y: u32) -> u32 {
        self.zip_digits(x, y, |a, b| (a + b) % self.p)
    }

    pub fn neg(&self, x: u32) -> u32 {
        self.zip_digits(x, 0, |a, _| (self.p - a) % self.p)
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        if x == 0 || y == 0 {
            return 0;
        }
        let n = self.q - 1;
        self.exp[((self.log[x as usize] + self.log[y as usize]) % n) as usize]
    }

    /// Coordinates over the prime field.
    pub fn digits(&self, x: u32) -> Vec<u32> {
        let mut x = x;
        (0..self.a)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    /// The prime-field basis `1, x, x², ..`.
    pub fn basis(&self) -> Vec<u32> {
        (0..self.a).map(|k| self.p.pow(k)).collect()
    }

    fn zip_digits(&self, x: u32, y: u32, f: impl Fn(u32, u32) -> u32) -> u32 {
        let (mut x, mut y, mut out, mut place) = (x, y, 0, 1);
        for _ in 0..self.a {
            out += f(x % self.p, y % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        out
    }
}

/// Successive powers of `x` modulo `x^a + (lower)`, if `x` generates all
/// `p^a - 1` nonzero residues.
fn powers_of_x(p: u32, a: u32, low: u32) -> Option<Vec<u32>> {
    let q = p.pow(a);
    let poly: Vec<u32> = {
        let mut l = low;
        (0..a)
            .map(|_| {
                let d = l % p;
                l /= p;
                d
            })
            .collect()
    };
    // x · f for f given by digits: shift up, reduce the x^a term by -poly.
    let times_x = |f: &[u32]| -> Vec<u32> {
        let top = f[a as usize - 1];
        let mut g = vec![0; a as usize];
        for i in (1..a as usize).rev() {
            g[i] = f[i - 1];
        }
        for i in 0..a as usize {
            g[i] = (g[i] + (p - poly[i]) % p * top) % p;
        }
        g
    };
    let encode = |f: &[u32]| f.iter().rev().fold(0, |acc, &d| acc * p + d);
    let mut cur = vec![0; a as usize];
    cur[0] = 1;
    let mut exp = Vec::with_capacity(q as usize - 1);
    let mut seen = vec![false; q as usize];
    for _ in 0..q - 1 {
        let e = encode(&cur);
        if e == 0 || seen[e as usize] {
            return None;
        }
        seen[e as usize] = true;
        exp.push(e);
        cur = times_x(&cur);
    }
    (encode(&cur) == 1).then_some(exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small() {
        for (p, a) in [(2, 1), (2, 2), (2, 4), (3, 1), (3, 2), (5, 1), (7, 1)] {
            let f = Gf::new(p, a).unwrap();
            let q = f.order();
            for x in 0..q {
                assert_eq!(f.add(x, f.neg(x)), 0);
                for y in 0..q {
                    assert_eq!(f.mul(x, y), f.mul(y, x));
                    for z in 0..q {
                        assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                    }
                }
            }
            let w = f.primitive();
            let mut x = w;
            let mut k = 1;
            while x != 1 {
                x = f.mul(x, w);
                k += 1;
            }
            assert_eq!(k, q - 1);
        }
        assert!(Gf::new(4, 1).is_err());
    }
}
