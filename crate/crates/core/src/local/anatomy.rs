use serde_json::{json, Value};

use super::pair::{kernels, local_hypothesis_at, ArcPair, Kernels, LocalHypothesis};
use crate::action::{induced_action, quotient, CosetAction, InducedAction};
use crate::arith::{is_power_of, prime_factors};
use crate::error::Result;
use crate::group::PermGroup;
use crate::hom::Homomorphism;
use crate::perm::{Permutation, Point};
use crate::report::{group_json, Status, Verdict};
use crate::structure::{
    all_normal_subgroups, centralizer, commutator_subgroup, core_p, core_p_prime,
    elementary_abelian_of_max_order, normal_closure, omega_center, sylow,
};

/// `H = J_x / C_{L_x}(Z_x)` acting faithfully on `V = Z_x`, with its direct
/// factors `E_i` and the pieces `[V, E_i]` and `C_V(H)`.
#[derive(Debug)]
pub struct VSplit {
    /// `J_x` acting by conjugation on the elements of `V`, point `r` being
    /// the element of rank `r`.
    pub map: Homomorphism,
    pub factors: Vec<PermGroup>,
    /// Preimages of the factors in `J_x`.
    pub factor_lifts: Vec<PermGroup>,
    /// `[V, E_i]`.
    pub commutators: Vec<PermGroup>,
    /// `C_V(H)`.
    pub fixed: PermGroup,
}

impl VSplit {
    pub fn h(&self) -> &PermGroup {
        self.map.image_group()
    }

    pub fn r(&self) -> usize {
        self.factors.len()
    }
}

fn split_v(j_x: &PermGroup, z_x: &PermGroup) -> Result<VSplit> {
    let n = z_x.order() as usize;
    let images = j_x
        .generators()
        .iter()
        .map(|g| {
            let pts = (0..n as u128)
                .map(|r| {
                    let v = z_x.unrank(r).expect("rank below order");
                    z_x.rank(&v.conjugate_by(g)).expect("Z_x is normal") as Point
                })
                .collect();
            Permutation::from_images(pts)
        })
        .collect::<Result<Vec<_>>>()?;
    let map = Homomorphism::new(j_x, n, images)?;
    let factors = all_normal_subgroups(map.image_group())?.direct_factors()?;
    let factor_lifts = factors
        .iter()
        .map(|e| map.preimage(e))
        .collect::<Result<Vec<_>>>()?;
    let commutators = factor_lifts
        .iter()
        .map(|e| commutator_subgroup(z_x, e))
        .collect();
    let fixed = centralizer(z_x, j_x.generators())?;
    Ok(VSplit {
        map,
        factors,
        factor_lifts,
        commutators,
        fixed,
    })
}

/// `L_x / R_0` as a permutation group, with the map from `L_x`.
#[derive(Debug)]
pub struct Reduction {
    pub group: PermGroup,
    action: Option<CosetAction>,
}

impl Reduction {
    fn new(l_x: &PermGroup, r_0: &PermGroup) -> Result<Reduction> {
        if r_0.is_trivial() {
            return Ok(Reduction {
                group: l_x.clone(),
                action: None,
            });
        }
        let action = quotient(l_x, r_0)?;
        Ok(Reduction {
            group: action.image.clone(),
            action: Some(action),
        })
    }

    pub fn image_of(&self, sub: &PermGroup) -> Result<PermGroup> {
        match &self.action {
            None => Ok(sub.clone()),
            Some(a) => a.hom().image_of(sub),
        }
    }
}

/// The subgroups attached to the arc `(x, y)`.
#[derive(Debug)]
pub struct AnatomyReport {
    pub x: Point,
    pub y: Point,
    pub p: u128,
    /// `5 - p` for `p ∈ {2, 3}`.
    pub companion_prime: Option<u128>,
    pub kernels: Kernels,
    pub stabilizer_y: PermGroup,
    pub kernel_y: PermGroup,
    pub hypothesis: LocalHypothesis,
    /// `G_y` on `Γ(y)`.
    pub local_y: InducedAction,
    pub q_x: PermGroup,
    pub q_y: PermGroup,
    pub q_xq_y: PermGroup,
    pub l_x: PermGroup,
    pub r_0: PermGroup,
    pub r: PermGroup,
    /// The regular normal nilpotent subgroup of the local action.
    pub regular_local: PermGroup,
    pub z_xy: PermGroup,
    pub z_x: PermGroup,
    /// `C_{L_x}(Z_x)`.
    pub m_x: PermGroup,
    /// `J(L_x)`.
    pub j_l: PermGroup,
    pub j_x: PermGroup,
    /// A Sylow p-subgroup `S` of `L_x`, `𝒜(S)` and `J(S)`.
    pub sylow_l: PermGroup,
    pub max_elementary: Vec<PermGroup>,
    pub thompson_s: PermGroup,
    pub reduction: Reduction,
    pub split: VSplit,
}

/// Why an anatomy could not be built.
#[derive(Debug)]
pub enum AnatomyOutcome {
    Ready(Box<AnatomyReport>),
    /// The local hypothesis fails.
    Skip(String),
    /// `G_{xy}^{[1]} = 1`, so the statements have no content.
    Vacuous(String),
    /// A consequence of the hypothesis that is checked rather than assumed
    /// does not hold.
    Contradiction(String),
}

impl AnatomyOutcome {
    /// The verdict to report in place of `check` when no anatomy exists.
    pub fn blocked(&self, check: &str) -> Option<Verdict> {
        match self {
            AnatomyOutcome::Ready(_) => None,
            AnatomyOutcome::Skip(r) => Some(Verdict::skip(check, r.clone())),
            AnatomyOutcome::Vacuous(r) => Some(Verdict::vacuous(check, r.clone())),
            AnatomyOutcome::Contradiction(r) => Some(Verdict::new(check, Status::Fail).because(r.clone())),
        }
    }

    pub fn report(&self) -> Option<&AnatomyReport> {
        match self {
            AnatomyOutcome::Ready(a) => Some(a),
            _ => None,
        }
    }
}

pub fn anatomy(pair: &ArcPair, x: Point, y: Point) -> Result<AnatomyOutcome> {
    let k = kernels(pair, x, y)?;
    let hypothesis = local_hypothesis_at(pair, x)?;
    let Some(regular_local) = hypothesis.regular_nilpotent.clone().filter(|_| hypothesis.holds()) else {
        return Ok(AnatomyOutcome::Skip(
            "local action is not semiprimitive with a regular normal nilpotent subgroup".into(),
        ));
    };
    if k.kernel_xy.is_trivial() {
        return Ok(AnatomyOutcome::Vacuous("G_xy^[1] is trivial".into()));
    }
    let primes = prime_factors(k.kernel_xy.order());
    if primes.len() != 1 {
        return Ok(AnatomyOutcome::Contradiction(format!(
            "|G_xy^[1]| = {} is not a prime power",
            k.kernel_xy.order()
        )));
    }
    let p = primes[0];
    let stabilizer_y = pair.group.point_stabilizer(y)?;
    let local_y = induced_action(&stabilizer_y, pair.neighbourhood(y))?;
    let kernel_y = local_y.kernel.clone();
    let g_x = &k.stabilizer_x;
    let q_x = core_p(&k.kernel_x, p)?;
    let q_y = core_p(&kernel_y, p)?;
    let q_xq_y = q_x.join(&q_y);
    if !is_power_of(q_xq_y.order(), p) {
        return Ok(AnatomyOutcome::Contradiction(format!(
            "Q_xQ_y has order {}, not a power of {p}",
            q_xq_y.order()
        )));
    }
    let l_x = normal_closure(g_x, q_xq_y.generators())?;
    let r_0 = core_p_prime(&l_x, p)?;
    let z_xy = omega_center(&q_xq_y)?;
    let z_x = normal_closure(g_x, z_xy.generators())?;
    let m_x = centralizer(&l_x, z_x.generators())?;
    let r = hypothesis.local.hom().preimage(&regular_local)?.intersection(&l_x)?;
    let sylow_l = sylow(&l_x, p)?;
    let max_elementary = elementary_abelian_of_max_order(&sylow_l)?;
    let thompson_s = max_elementary
        .iter()
        .fold(PermGroup::trivial(l_x.degree()), |j, a| j.join(a));
    let j_l = normal_closure(&l_x, thompson_s.generators())?;
    let j_x = j_l.join(&m_x);
    let reduction = Reduction::new(&l_x, &r_0)?;
    let split = split_v(&j_x, &z_x)?;
    Ok(AnatomyOutcome::Ready(Box::new(AnatomyReport {
        x,
        y,
        p,
        companion_prime: (p == 2 || p == 3).then_some(5 - p),
        kernels: k,
        stabilizer_y,
        kernel_y,
        hypothesis,
        local_y,
        q_x,
        q_y,
        q_xq_y,
        l_x,
        r_0,
        r,
        regular_local,
        z_xy,
        z_x,
        m_x,
        j_l,
        j_x,
        sylow_l,
        max_elementary,
        thompson_s,
        reduction,
        split,
    })))
}

impl AnatomyReport {
    /// Orders that do not depend on which end of the edge is `x`.
    pub fn signature(&self) -> Vec<u128> {
        let mut s = vec![
            self.p,
            self.kernels.stabilizer_x.order(),
            self.kernels.kernel_x.order(),
            self.kernels.kernel_xy.order(),
            self.q_x.order(),
            self.q_xq_y.order(),
            self.l_x.order(),
            self.r_0.order(),
            self.r.order(),
            self.z_xy.order(),
            self.z_x.order(),
            self.m_x.order(),
            self.j_x.order(),
            self.split.h().order(),
            self.split.r() as u128,
            self.split.fixed.order(),
        ];
        s.extend(self.split.commutators.iter().map(PermGroup::order));
        s
    }

    /// Every subgroup with its generators and order.
    pub fn to_json(&self) -> Value {
        let named: Vec<(&str, &PermGroup)> = vec![
            ("G_x", &self.kernels.stabilizer_x),
            ("G_xy", &self.kernels.stabilizer_xy),
            ("G_x^[1]", &self.kernels.kernel_x),
            ("G_y^[1]", &self.kernel_y),
            ("G_xy^[1]", &self.kernels.kernel_xy),
            ("Q_x", &self.q_x),
            ("Q_y", &self.q_y),
            ("Q_xQ_y", &self.q_xq_y),
            ("L_x", &self.l_x),
            ("R_0", &self.r_0),
            ("R", &self.r),
            ("Z_xy", &self.z_xy),
            ("Z_x", &self.z_x),
            ("M_x", &self.m_x),
            ("J(L_x)", &self.j_l),
            ("J_x", &self.j_x),
            ("S", &self.sylow_l),
            ("J(S)", &self.thompson_s),
        ];
        let subgroups: serde_json::Map<String, Value> =
            named.into_iter().map(|(k, g)| (k.to_owned(), group_json(g))).collect();
        json!({
            "edge": [self.x, self.y],
            "p": self.p,
            "companion_prime": self.companion_prime,
            "subgroups": subgroups,
            "max_elementary": self.max_elementary.iter().map(group_json).collect::<Vec<_>>(),
            "h_order": self.split.h().order().to_string(),
            "r": self.split.r(),
            "factor_orders": self.split.factors.iter().map(|e| e.order().to_string()).collect::<Vec<_>>(),
            "v_order": self.z_x.order().to_string(),
            "fixed_order": self.split.fixed.order().to_string(),
            "commutator_orders": self.split.commutators.iter().map(|c| c.order().to_string()).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cayley_f16_quintic, heawood, tutte_coxeter};

    fn ready(pair: &ArcPair) -> Box<AnatomyReport> {
        let (x, y) = pair.default_edge();
        match anatomy(pair, x, y).unwrap() {
            AnatomyOutcome::Ready(a) => a,
            other => panic!("no anatomy: {other:?}"),
        }
    }

    #[test]
    fn heawood_anatomy() {
        let a = ready(&ArcPair::from_fixture(&heawood()).unwrap());
        assert_eq!(a.p, 2);
        assert_eq!(a.companion_prime, Some(3));
        assert_eq!(a.q_x.order(), 4);
        assert!(a.q_x.same_group(&a.kernels.kernel_x));
        assert_eq!(a.q_xq_y.order(), 8);
        assert_eq!(a.l_x.order(), 24);
        assert_eq!(a.r.order(), 12);
        assert!(a.r_0.is_trivial());
        assert_eq!(a.z_xy.order(), 2);
        assert_eq!(a.z_x.order(), 4);
        assert_eq!(a.split.h().order(), 6);
        assert_eq!(a.split.r(), 1);
        assert_eq!(a.split.commutators[0].order(), 4);
        assert!(a.split.fixed.is_trivial());
    }

    #[test]
    fn tutte_coxeter_anatomy() {
        let a = ready(&ArcPair::from_fixture(&tutte_coxeter()).unwrap());
        assert_eq!(a.p, 2);
        assert_eq!(a.kernels.kernel_xy.order(), 4);
        assert!(a.split.factors.iter().all(|e| e.order() == 6));
        assert!(a.split.commutators.iter().all(|c| c.order() == 4));
    }

    #[test]
    fn trivial_kernel_is_vacuous() {
        let pair = ArcPair::from_fixture(&cayley_f16_quintic()).unwrap();
        let (x, y) = pair.default_edge();
        assert!(matches!(anatomy(&pair, x, y).unwrap(), AnatomyOutcome::Vacuous(_)));
    }
}
