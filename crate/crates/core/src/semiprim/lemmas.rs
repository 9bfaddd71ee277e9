use super::{classify, is_semiprimitive_definition, is_semiregular, ActionLattice};
use crate::action::coset_action;
use crate::arith::prime_factors;
use crate::error::Result;
use crate::group::PermGroup;
use crate::report::{group_json, Status, Verdict};
use crate::structure::{core_p, fitting, is_nilpotent, is_soluble};

const QUOTIENT: &str = "quotient-action-faithful-semiprimitive";
const REGULAR: &str = "regular-normal-containments";
const FITTING: &str = "nilpotent-normals-inside-regular";
const COPRIME: &str = "stabiliser-core-coprime-to-regular";

/// The action of `G/N` on the cosets of `HN/N` is faithful and
/// semiprimitive, for `H = G_0` and `N` normal and intransitive.
pub fn verify_quotient_lemma(group: &PermGroup, n: &PermGroup) -> Result<Verdict> {
    if !n.is_normal_in(group) {
        return Ok(Verdict::skip(QUOTIENT, "N is not normal"));
    }
    if n.is_transitive() {
        return Ok(Verdict::skip(QUOTIENT, "N is transitive"));
    }
    if !is_semiprimitive_definition(group)?.semiprimitive {
        return Ok(Verdict::skip(QUOTIENT, "G is not semiprimitive"));
    }
    quotient_check(group, n)
}

fn quotient_check(group: &PermGroup, n: &PermGroup) -> Result<Verdict> {
    let h = group.point_stabilizer(0)?;
    let hn = h.join(n);
    let action = coset_action(group, &hn)?;
    let faithful = action.kernel().order() == n.order();
    let sp = is_semiprimitive_definition(&action.image)?;
    let ok = faithful && sp.semiprimitive;
    let mut v = Verdict::pass_if(QUOTIENT, ok)
        .with("n_order", n.order().to_string())
        .with("degree", action.degree())
        .with("faithful", faithful)
        .with("semiprimitive", sp.semiprimitive);
    if !ok {
        v = v.with_witness(group_json(n));
    }
    Ok(v)
}

/// The quotient check for every intransitive normal subgroup, as items.
pub fn quotient_lemma_all(lattice: &ActionLattice) -> Result<Verdict> {
    if !classify(lattice).semiprimitive {
        return Ok(Verdict::skip(QUOTIENT, "G is not semiprimitive"));
    }
    let mut items = Vec::new();
    for n in lattice.members.iter().filter(|m| !m.is_transitive()) {
        items.push(quotient_check(&lattice.group, n)?);
    }
    if items.is_empty() {
        return Ok(Verdict::vacuous(QUOTIENT, "no intransitive normal subgroup"));
    }
    let count = items.len();
    Ok(Verdict::new(QUOTIENT, Status::Pass)
        .with("checked", count)
        .with_items(items))
}

fn soluble_regular(lattice: &ActionLattice) -> Option<&PermGroup> {
    lattice.regular().find(|k| is_soluble(k))
}

/// With a soluble regular normal `K`: every transitive normal subgroup
/// contains `K`, every semiregular one lies in `K`, and `K` is the only
/// regular normal subgroup. Without one, only the regular normals are listed.
pub fn regular_normal_analysis(lattice: &ActionLattice) -> Result<Verdict> {
    let regular: Vec<&PermGroup> = lattice.regular().collect();
    let incomparable = regular.iter().enumerate().all(|(i, a)| {
        regular
            .iter()
            .enumerate()
            .all(|(j, b)| i == j || !a.contains_group(b))
    });
    let soluble: Vec<bool> = regular.iter().map(|k| is_soluble(k)).collect();
    let base = |v: Verdict| {
        v.with("regular_orders", regular.iter().map(|k| k.order().to_string()).collect::<Vec<_>>())
            .with("regular_soluble", soluble.clone())
            .with("regular_count", regular.len())
            .with("pairwise_incomparable", incomparable)
    };
    let sp = classify(lattice);
    if !sp.semiprimitive {
        return Ok(base(Verdict::skip(REGULAR, "G is not semiprimitive")));
    }
    let Some(k) = soluble_regular(lattice) else {
        return Ok(base(Verdict::skip(REGULAR, "no soluble regular normal subgroup")));
    };
    let mut items = Vec::new();
    let transitive_bad = lattice
        .members
        .iter()
        .find(|m| m.is_transitive() && !m.contains_group(k));
    let mut v = Verdict::pass_if("transitive-normals-contain-regular", transitive_bad.is_none());
    if let Some(w) = transitive_bad {
        v = v.with_witness(group_json(w));
    }
    items.push(v);
    let semiregular_bad = lattice
        .members
        .iter()
        .find(|m| is_semiregular(m) && !k.contains_group(m));
    let mut v = Verdict::pass_if("semiregular-normals-inside-regular", semiregular_bad.is_none());
    if let Some(w) = semiregular_bad {
        v = v.with_witness(group_json(w));
    }
    items.push(v);
    items.push(Verdict::pass_if("unique-regular-normal", regular.len() == 1));
    Ok(base(Verdict::new(REGULAR, Status::Pass)).with_items(items))
}

/// With a soluble regular normal `K`, every nilpotent normal subgroup lies
/// in `K` and `F(G) = F(K)`.
pub fn verify_fitting_lemma(lattice: &ActionLattice) -> Result<Verdict> {
    if !classify(lattice).semiprimitive {
        return Ok(Verdict::skip(FITTING, "G is not semiprimitive"));
    }
    let Some(k) = soluble_regular(lattice) else {
        return Ok(Verdict::skip(FITTING, "no soluble regular normal subgroup"));
    };
    let outside = lattice
        .members
        .iter()
        .find(|m| !k.contains_group(m) && is_nilpotent(m));
    let fg = fitting(&lattice.group)?;
    let fk = fitting(k)?;
    let same = fg.same_group(&fk);
    let mut v = Verdict::pass_if(FITTING, outside.is_none() && same)
        .with("fitting_g", fg.order().to_string())
        .with("fitting_k", fk.order().to_string())
        .with("k_order", k.order().to_string());
    if let Some(w) = outside {
        v = v.with_witness(group_json(w));
    }
    Ok(v)
}

/// With a regular normal nilpotent `K` and `H = G_0`: if `O_p(H) ≠ 1` then
/// `p` does not divide `|K|`. Vacuous when every `O_p(H)` is trivial.
pub fn verify_coprime_lemma(lattice: &ActionLattice) -> Result<Verdict> {
    if !classify(lattice).semiprimitive {
        return Ok(Verdict::skip(COPRIME, "G is not semiprimitive"));
    }
    let Some(k) = lattice.regular().find(|k| is_nilpotent(k)) else {
        return Ok(Verdict::skip(COPRIME, "no nilpotent regular normal subgroup"));
    };
    let h = lattice.group.point_stabilizer(0)?;
    let mut items = Vec::new();
    for p in prime_factors(h.order()) {
        let o = core_p(&h, p)?;
        if o.is_trivial() {
            continue;
        }
        items.push(
            Verdict::pass_if(format!("p={p}"), k.order() % p != 0)
                .with("o_p_order", o.order().to_string())
                .with("k_order", k.order().to_string()),
        );
    }
    if items.is_empty() {
        return Ok(Verdict::vacuous(COPRIME, "O_p(H) = 1 for every prime p"));
    }
    Ok(Verdict::new(COPRIME, Status::Pass).with_items(items))
}
