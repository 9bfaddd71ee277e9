use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Smallest normal subgroup of `group` containing `elements`.
pub fn normal_closure(group: &PermGroup, elements: &[Permutation]) -> Result<PermGroup> {
    for x in elements {
        if !group.contains(x) {
            return Err(Error::NotSubgroup(format!("{x} is not in the group")));
        }
    }
    Ok(closure_under(group.generators(), group.degree(), elements))
}

/// Closure of `<elements>` under conjugation by `conj`.
fn closure_under(conj: &[Permutation], degree: usize, elements: &[Permutation]) -> PermGroup {
    let mut n = PermGroup::trivial(degree);
    let mut queue: Vec<Permutation> = Vec::new();
    for x in elements {
        if !n.contains(x) {
            n = n.with_generator(x);
            queue.push(x.clone());
        }
    }
    let mut i = 0;
    while i < queue.len() {
        for g in conj {
            let c = queue[i].conjugate_by(g);
            if !n.contains(&c) {
                n = n.with_generator(&c);
                queue.push(c);
            }
        }
        i += 1;
    }
    n
}

/// `[A, B]`, the normal closure in `<A, B>` of the generator commutators.
pub fn commutator_subgroup(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let mut comms = Vec::new();
    for x in a.generators() {
        for y in b.generators() {
            let c = x.commutator(y);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    let mut conj: Vec<Permutation> = a.generators().to_vec();
    conj.extend(b.generators().iter().cloned());
    closure_under(&conj, a.degree(), &comms)
}

pub fn derived_subgroup(group: &PermGroup) -> PermGroup {
    commutator_subgroup(group, group)
}

/// `G, G', G'', ..` until it stabilises.
pub fn derived_series(group: &PermGroup) -> Vec<PermGroup> {
    let mut series = vec![group.clone()];
    loop {
        let last = series.last().unwrap();
        let next = derived_subgroup(last);
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_soluble(group: &PermGroup) -> bool {
    derived_series(group).last().unwrap().is_trivial()
}

/// `G = γ1 ≥ γ2 = [γ1, G] ≥ ..` until it stabilises.
pub fn lower_central_series(group: &PermGroup) -> Vec<PermGroup> {
    let mut series = vec![group.clone()];
    loop {
        let last = series.last().unwrap();
        let next = commutator_subgroup(last, group);
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_nilpotent(group: &PermGroup) -> bool {
    lower_central_series(group).last().unwrap().is_trivial()
}

/// Elements of `group` commuting with every element of `set`.
pub fn centralizer(group: &PermGroup, set: &[Permutation]) -> Result<PermGroup> {
    group.filter_subgroup(|g| set.iter().all(|s| g.mul_unchecked(s) == s.mul_unchecked(g)))
}

pub fn center(group: &PermGroup) -> Result<PermGroup> {
    centralizer(group, group.generators())
}

/// Elements of `group` normalising `sub`.
pub fn normalizer(group: &PermGroup, sub: &PermGroup) -> Result<PermGroup> {
    group.filter_subgroup(|g| sub.generators().iter().all(|x| sub.contains(&x.conjugate_by(g))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Point;

    fn p(n: usize, cycles: &[&[Point]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn sym(n: usize) -> PermGroup {
        let cyc: Vec<Point> = (0..n as Point).collect();
        PermGroup::new(n, vec![p(n, &[&[0, 1]]), p(n, &[&cyc])]).unwrap()
    }

    #[test]
    fn closures_in_s4() {
        let s4 = sym(4);
        assert_eq!(normal_closure(&s4, &[p(4, &[&[0, 1]])]).unwrap().order(), 24);
        assert_eq!(normal_closure(&s4, &[p(4, &[&[0, 1], &[2, 3]])]).unwrap().order(), 4);
        assert!(normal_closure(&s4, &[p(4, &[&[0, 1, 2, 3]]).pow(0)]).unwrap().is_trivial());
        let c4 = PermGroup::new(4, vec![p(4, &[&[0, 1, 2, 3]])]).unwrap();
        let sq = p(4, &[&[0, 2], &[1, 3]]);
        assert_eq!(normal_closure(&c4, &[sq]).unwrap().order(), 2);
    }

    #[test]
    fn derived_and_series() {
        let s3 = sym(3);
        assert_eq!(derived_subgroup(&s3).order(), 3);
        assert!(is_soluble(&s3));
        assert!(!is_nilpotent(&s3));
        let a5 = PermGroup::new(5, vec![p(5, &[&[0, 1, 2]]), p(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        assert_eq!(a5.order(), 60);
        assert!(!is_soluble(&a5));
        assert_eq!(derived_subgroup(&a5).order(), 60);
        assert!(is_soluble(&sym(4)));
    }

    #[test]
    fn centralisers() {
        let s4 = sym(4);
        let c = centralizer(&s4, &[p(4, &[&[0, 1], &[2, 3]])]).unwrap();
        assert_eq!(c.order(), 8);
        assert!(center(&s4).unwrap().is_trivial());
        let c4 = PermGroup::new(4, vec![p(4, &[&[0, 1, 2, 3]])]).unwrap();
        assert!(center(&c4).unwrap().same_group(&c4));
        let klein = normal_closure(&s4, &[p(4, &[&[0, 1], &[2, 3]])]).unwrap();
        assert_eq!(normalizer(&s4, &klein).unwrap().order(), 24);
    }
}
