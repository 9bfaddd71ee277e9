//! Semiprimitivity: the definition, the semidirect-product criterion, and
//! checks of the structural facts about semiprimitive groups.

mod lemmas;
mod spec;

use serde::{Deserialize, Serialize};

pub use lemmas::{
    quotient_lemma_all, regular_normal_analysis, verify_coprime_lemma, verify_fitting_lemma,
    verify_quotient_lemma,
};
pub use spec::SemidirectSpec;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::hom::Homomorphism;
use crate::perm::Permutation;
use crate::structure::{all_normal_subgroups, conjugacy_class_reps, normal_closure};

/// True if every point stabiliser is trivial.
pub fn is_semiregular(group: &PermGroup) -> bool {
    let n = group.order();
    group.orbits().iter().all(|o| o.len() as u128 == n)
}

pub fn is_regular(group: &PermGroup) -> bool {
    group.is_transitive() && group.order() == group.degree() as u128
}

/// Every normal subgroup of a permutation group, given in the action.
#[derive(Debug, Clone)]
pub struct ActionLattice {
    pub group: PermGroup,
    pub members: Vec<PermGroup>,
}

impl ActionLattice {
    pub fn of(group: &PermGroup) -> Result<ActionLattice> {
        Ok(ActionLattice {
            group: group.clone(),
            members: all_normal_subgroups(group)?.members,
        })
    }

    /// The lattice computed in `hom.source()` and carried across an injective
    /// homomorphism onto the acting group.
    pub fn via(hom: &Homomorphism) -> Result<ActionLattice> {
        if !hom.is_injective() {
            return Err(Error::NotHomomorphism("model map is not injective".into()));
        }
        let members = all_normal_subgroups(hom.source())?
            .members
            .iter()
            .map(|m| hom.image_of(m))
            .collect::<Result<Vec<_>>>()?;
        Ok(ActionLattice {
            group: hom.image_group().clone(),
            members,
        })
    }

    pub fn regular(&self) -> impl Iterator<Item = &PermGroup> {
        self.members.iter().filter(|m| is_regular(m))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckedBy {
    Definition,
    Criterion,
    Both,
}

#[derive(Debug, Clone)]
pub struct SpVerdict {
    pub semiprimitive: bool,
    /// A normal subgroup that is neither transitive nor semiregular.
    pub witness: Option<PermGroup>,
    pub regular_normals: Vec<u128>,
    pub checked_by: CheckedBy,
}

/// Quantifies over all normal subgroups.
pub fn is_semiprimitive_definition(group: &PermGroup) -> Result<SpVerdict> {
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    Ok(classify(&ActionLattice::of(group)?))
}

/// As [`is_semiprimitive_definition`], with the lattice computed in a
/// smaller faithful model of the group.
pub fn is_semiprimitive_via(hom: &Homomorphism) -> Result<SpVerdict> {
    if !hom.image_group().is_transitive() {
        return Err(Error::NotTransitive);
    }
    Ok(classify(&ActionLattice::via(hom)?))
}

pub fn classify(lattice: &ActionLattice) -> SpVerdict {
    let witness = lattice
        .members
        .iter()
        .find(|m| !m.is_transitive() && !is_semiregular(m))
        .cloned();
    SpVerdict {
        semiprimitive: witness.is_none(),
        witness,
        regular_normals: lattice.regular().map(|m| m.order()).collect(),
        checked_by: CheckedBy::Definition,
    }
}

/// The criterion evaluated both ways on a semidirect product.
#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub verdict: SpVerdict,
    /// H is faithful on every proper H-invariant quotient of K.
    pub faithful_on_quotients: bool,
    /// `K = [K, N]` for every nontrivial normal subgroup `N` of `H`.
    pub commutator_form: bool,
    /// Number of proper H-invariant normal subgroups of K examined.
    pub invariant_subgroups: usize,
}

/// Semiprimitivity of `K ⋊ H` on `K` from the action of `H` on `K`.
pub fn is_semiprimitive_criterion(spec: &SemidirectSpec) -> Result<CriterionResult> {
    let h = &spec.complement;
    let k_lattice = all_normal_subgroups(&spec.k)?;
    let invariant: Vec<&PermGroup> = k_lattice
        .iter()
        .filter(|m| m.order() < spec.k.order())
        .filter(|m| {
            h.generators().iter().all(|t| {
                m.generators().iter().all(|x| m.contains(&spec.act(t, x)))
            })
        })
        .collect();

    // Kernel of H on K/M: elements h with x⁻¹ x^h in M for every generator x.
    let mut witness = None;
    let elements = h.elements()?;
    for m in &invariant {
        let kernel_elt = elements.iter().find(|t| {
            !t.is_identity()
                && spec
                    .k
                    .generators()
                    .iter()
                    .all(|x| m.contains(&x.inverse().mul_unchecked(&spec.act(t, x))))
        });
        if let Some(t) = kernel_elt {
            let b = normal_closure(h, std::slice::from_ref(t))?;
            witness = Some(spec.from_k(m).join(&b));
            break;
        }
    }
    let faithful_on_quotients = witness.is_none();

    let mut commutator_form = true;
    for rep in conjugacy_class_reps(h)?.iter().skip(1) {
        let n = normal_closure(h, std::slice::from_ref(rep))?;
        if commutator_with_complement(spec, &n).order() != spec.k.order() {
            commutator_form = false;
            break;
        }
    }

    let regular_normals = if faithful_on_quotients {
        vec![spec.regular.order()]
    } else {
        Vec::new()
    };
    Ok(CriterionResult {
        verdict: SpVerdict {
            semiprimitive: faithful_on_quotients,
            witness,
            regular_normals,
            checked_by: CheckedBy::Criterion,
        },
        faithful_on_quotients,
        commutator_form,
        invariant_subgroups: invariant.len(),
    })
}

/// `[K, N]` for `N ≤ H`, computed inside `K`: the closure of the generator
/// commutators `x⁻¹ x^n` under conjugation by `K` and the action of `N`.
fn commutator_with_complement(spec: &SemidirectSpec, n: &PermGroup) -> PermGroup {
    let k = &spec.k;
    let mut out = PermGroup::trivial(k.degree());
    let mut queue: Vec<Permutation> = Vec::new();
    for x in k.generators() {
        for t in n.generators() {
            let c = x.inverse().mul_unchecked(&spec.act(t, x));
            if !out.contains(&c) {
                out = out.with_generator(&c);
                queue.push(c);
            }
        }
    }
    let mut i = 0;
    while i < queue.len() {
        let e = queue[i].clone();
        let images = k
            .generators()
            .iter()
            .map(|g| e.conjugate_by(g))
            .chain(n.generators().iter().map(|t| spec.act(t, &e)))
            .collect::<Vec<_>>();
        for c in images {
            if !out.contains(&c) {
                out = out.with_generator(&c);
                queue.push(c);
            }
        }
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{Permutation, Point};

    fn p(n: usize, cycles: &[&[Point]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn semiregularity() {
        let v4 = PermGroup::new(4, vec![p(4, &[&[0, 1], &[2, 3]]), p(4, &[&[0, 2], &[1, 3]])]).unwrap();
        assert!(is_semiregular(&v4));
        assert!(!is_semiregular(&PermGroup::new(3, vec![p(3, &[&[0, 1]])]).unwrap()));
        let c5 = PermGroup::new(5, vec![p(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        assert!(is_semiregular(&c5));
    }

    #[test]
    fn definition_on_small_groups() {
        let s3 = PermGroup::new(3, vec![p(3, &[&[0, 1]]), p(3, &[&[0, 1, 2]])]).unwrap();
        let v = is_semiprimitive_definition(&s3).unwrap();
        assert!(v.semiprimitive);
        assert_eq!(v.regular_normals, vec![3]);
        let c4 = PermGroup::new(4, vec![p(4, &[&[0, 1, 2, 3]])]).unwrap();
        assert!(is_semiprimitive_definition(&c4).unwrap().semiprimitive);
        let d4 = PermGroup::new(4, vec![p(4, &[&[0, 1, 2, 3]]), p(4, &[&[0, 2]])]).unwrap();
        let v = is_semiprimitive_definition(&d4).unwrap();
        assert!(!v.semiprimitive);
        let w = v.witness.unwrap();
        let expected = PermGroup::new(4, vec![p(4, &[&[0, 2]]), p(4, &[&[1, 3]])]).unwrap();
        assert!(w.same_group(&expected));
        assert!(is_semiprimitive_definition(&PermGroup::new(3, vec![p(3, &[&[0, 1]])]).unwrap()).is_err());
    }

    #[test]
    fn criterion_matches_definition() {
        let c5 = PermGroup::new(5, vec![p(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        let spec = SemidirectSpec::new(&c5, vec![vec![c5.generators()[0].inverse()]]).unwrap();
        let c = is_semiprimitive_criterion(&spec).unwrap();
        assert!(c.faithful_on_quotients && c.commutator_form);
        assert!(is_semiprimitive_definition(&spec.group).unwrap().semiprimitive);

        let c4 = PermGroup::new(4, vec![p(4, &[&[0, 1, 2, 3]])]).unwrap();
        let spec = SemidirectSpec::new(&c4, vec![vec![c4.generators()[0].inverse()]]).unwrap();
        let c = is_semiprimitive_criterion(&spec).unwrap();
        assert!(!c.faithful_on_quotients && !c.commutator_form);
        let w = c.verdict.witness.unwrap();
        assert!(w.is_normal_in(&spec.group));
        assert!(!w.is_transitive() && !is_semiregular(&w));
        assert!(!is_semiprimitive_definition(&spec.group).unwrap().semiprimitive);
    }
}
