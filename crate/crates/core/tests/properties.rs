use proptest::prelude::*;

use semiprim::group::PermGroup;
use semiprim::io::{read_group, write_group};
use semiprim::oracle::Enumerated;
use semiprim::perm::Permutation;
use semiprim::report::{Entry, Status, Verdict, VerdictReport};
use semiprim::structure::{all_normal_subgroups, center, core_p, derived_subgroup, sylow};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn group() -> impl Strategy<Value = PermGroup> {
    (2usize..=7).prop_flat_map(|n| {
        prop::collection::vec(perm(n), 1..=3).prop_map(move |gens| PermGroup::new(n, gens).unwrap())
    })
}

fn group_and_perm() -> impl Strategy<Value = (PermGroup, Permutation)> {
    group().prop_flat_map(|g| {
        let n = g.degree();
        (Just(g), perm(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(a in perm(6), b in perm(6), c in perm(6)) {
        let ab_c = a.compose(&b).unwrap().compose(&c).unwrap();
        let a_bc = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        prop_assert_eq!(a.compose(&b).unwrap().apply(0), b.apply(a.apply(0)));
    }

    #[test]
    fn chain_agrees_with_closure((g, x) in group_and_perm()) {
        let naive = Enumerated::of(&g, 10_000).unwrap();
        prop_assert_eq!(g.order(), naive.order() as u128);
        prop_assert_eq!(g.contains(&x), naive.contains(&x));
        let mut orbits = g.orbits();
        for o in &mut orbits {
            o.sort_unstable();
        }
        orbits.sort();
        prop_assert_eq!(orbits, naive.orbits());
    }

    #[test]
    fn rank_and_unrank_are_inverse(g in group()) {
        let n = g.order();
        for r in (0..n).step_by((n as usize / 50).max(1)) {
            let x = g.unrank(r).unwrap();
            prop_assert_eq!(g.rank(&x), Some(r));
        }
        prop_assert!(g.unrank(n).is_none());
    }

    #[test]
    fn orbit_stabiliser(g in group()) {
        let stab = g.point_stabilizer(0).unwrap();
        prop_assert_eq!(stab.order() * g.orbit(0).len() as u128, g.order());
        prop_assert!(stab.generators().iter().all(|s| s.apply(0) == 0));
    }

    #[test]
    fn normal_subgroups_are_normal(g in group()) {
        prop_assume!(g.order() <= 720);
        let lattice = all_normal_subgroups(&g).unwrap();
        prop_assert!(lattice.iter().all(|m| m.is_normal_in(&g)));
        prop_assert!(lattice.iter().all(|m| g.order() % m.order() == 0));
        prop_assert!(lattice.iter().any(|m| m.same_group(&derived_subgroup(&g))));
        prop_assert!(lattice.iter().any(|m| m.same_group(&center(&g).unwrap())));
    }

    #[test]
    fn sylow_and_core(g in group()) {
        prop_assume!(g.order() <= 720 && g.order() % 2 == 0);
        let s = sylow(&g, 2).unwrap();
        let mut part = g.order();
        while part % 2 == 0 {
            part /= 2;
        }
        prop_assert_eq!(s.order() * part, g.order());
        let o = core_p(&g, 2).unwrap();
        prop_assert!(o.is_normal_in(&g));
        prop_assert!(s.contains_group(&o));
    }

    #[test]
    fn group_files_round_trip(g in group()) {
        let back = read_group(&write_group(&g)).unwrap();
        prop_assert!(back.same_group(&g));
        prop_assert_eq!(back.degree(), g.degree());
    }

    #[test]
    fn report_tallies_and_round_trips(statuses in prop::collection::vec(0u8..4, 0..20)) {
        let entries: Vec<Entry> = statuses
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let status = [Status::Pass, Status::Fail, Status::Skip, Status::Vacuous][*s as usize];
                Entry { check_id: format!("c{i}"), target: "t".into(), verdict: Verdict::new(format!("c{i}"), status) }
            })
            .collect();
        let r = VerdictReport::new(entries);
        let s = &r.summary;
        prop_assert_eq!(s.pass + s.fail + s.skip + s.vacuous, statuses.len());
        prop_assert_eq!(r.has_failures(), statuses.contains(&1));
        let back: VerdictReport = serde_json::from_str(&r.to_json()).unwrap();
        prop_assert_eq!(back, r);
    }
}
