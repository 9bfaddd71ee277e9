//! Reference values computed by brute force over raw image vectors, without
//! the stabiliser chain, and compared with the engine.

use std::collections::{BTreeSet, HashSet};

use semiprim::constructions::{fixture_by_name, heawood, Fixture};
use semiprim::group::PermGroup;
use semiprim::local::{kernels, ArcPair};
use semiprim::perm::Permutation;
use semiprim::structure::all_normal_subgroups;
use semiprim::suite::named_group;

type Raw = Vec<u32>;

fn raw_closure(gens: &[Raw]) -> Vec<Raw> {
    let n = gens[0].len();
    let id: Raw = (0..n as u32).collect();
    let mut seen: HashSet<Raw> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let y: Raw = out[i].iter().map(|&p| g[p as usize]).collect();
            if seen.insert(y.clone()) {
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

fn raw_gens(g: &PermGroup) -> Vec<Raw> {
    g.generators().iter().map(|p| p.images().to_vec()).collect()
}

/// `(|G|, |G_x|, |G_x^[1]|, |G_xy|, |G_xy^[1]|, |G_{x,y}|)` for the edge `{0, 1}`.
fn brute_kernels(f: &Fixture) -> [usize; 6] {
    let all = raw_closure(&raw_gens(&f.group));
    let nx: Vec<u32> = f.graph.neighbours(0).to_vec();
    let ny: Vec<u32> = f.graph.neighbours(1).to_vec();
    let fixes = |h: &Raw, pts: &[u32]| pts.iter().all(|&p| h[p as usize] == p);
    let gx: Vec<&Raw> = all.iter().filter(|h| h[0] == 0).collect();
    let kx = gx.iter().filter(|h| fixes(h, &nx)).count();
    let gxy: Vec<&&Raw> = gx.iter().filter(|h| h[1] == 1).collect();
    let kxy = gxy.iter().filter(|h| fixes(h, &nx) && fixes(h, &ny)).count();
    let swap = all.iter().filter(|h| h[0] == 1 && h[1] == 0).count();
    [all.len(), gx.len(), kx, gxy.len(), kxy, gxy.len() + swap]
}

const KERNEL_COUNTS: [(&str, [usize; 6]); 4] = [
    ("heawood", [336, 24, 4, 8, 2, 16]),
    ("tutte_coxeter", [1440, 48, 8, 16, 4, 32]),
    ("petersen", [120, 12, 2, 4, 1, 8]),
    ("f16", [320, 20, 1, 4, 1, 8]),
];

#[test]
fn kernel_counts_match_brute_force() {
    for (name, expected) in KERNEL_COUNTS {
        let f = fixture_by_name(name).unwrap();
        assert_eq!(brute_kernels(&f), expected, "{name}");
        let pair = ArcPair::from_fixture(&f).unwrap();
        let k = kernels(&pair, 0, 1).unwrap();
        let engine = [
            f.group.order(),
            k.stabilizer_x.order(),
            k.kernel_x.order(),
            k.stabilizer_xy.order(),
            k.kernel_xy.order(),
            k.edge_stabilizer.order(),
        ];
        let expected: Vec<u128> = expected.iter().map(|&v| v as u128).collect();
        assert_eq!(engine.to_vec(), expected, "{name}");
    }
}

/// Normal subgroups as element sets: joins of normal closures of single
/// elements, closed under products until stable.
fn brute_normal_count(g: &PermGroup) -> usize {
    let all = raw_closure(&raw_gens(g));
    let index = |x: &Raw| all.iter().position(|y| y == x).unwrap();
    let n = all.len();
    let mul: Vec<Vec<usize>> = all
        .iter()
        .map(|a| all.iter().map(|b| index(&a.iter().map(|&p| b[p as usize]).collect())).collect())
        .collect();
    let inv: Vec<usize> = (0..n).map(|i| (0..n).find(|&j| mul[i][j] == 0).unwrap()).collect();
    let close = |seed: &BTreeSet<usize>| -> BTreeSet<usize> {
        let mut s = seed.clone();
        s.insert(0);
        loop {
            let mut next = s.clone();
            for &a in &s {
                for &b in &s {
                    next.insert(mul[a][b]);
                }
                for g in 0..n {
                    next.insert(mul[mul[inv[g]][a]][g]);
                }
            }
            if next == s {
                return s;
            }
            s = next;
        }
    };
    let atoms: Vec<BTreeSet<usize>> = (0..n).map(|i| close(&BTreeSet::from([i]))).collect();
    let mut found: HashSet<BTreeSet<usize>> = atoms.iter().cloned().collect();
    let mut frontier: Vec<BTreeSet<usize>> = found.iter().cloned().collect();
    while let Some(m) = frontier.pop() {
        for a in &atoms {
            let j = close(&m.union(a).copied().collect());
            if found.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    found.len()
}

const NORMAL_COUNTS: [(&str, usize); 11] = [
    ("S3", 3),
    ("S4", 4),
    ("A4", 3),
    ("D4", 6),
    ("D5", 3),
    ("Q8", 6),
    ("C9", 3),
    ("C4", 3),
    ("V4", 5),
    ("A5", 2),
    ("S5", 3),
];

#[test]
fn normal_subgroup_counts_match_brute_force() {
    for (name, count) in NORMAL_COUNTS {
        let g = named_group(name).unwrap();
        assert_eq!(brute_normal_count(&g), count, "{name}");
        assert_eq!(all_normal_subgroups(&g).unwrap().len(), count, "{name}");
    }
}

#[test]
fn heawood_orbit_and_membership() {
    let f = heawood();
    let all = raw_closure(&raw_gens(&f.group));
    let orbit: BTreeSet<u32> = all.iter().map(|h| h[0]).collect();
    assert_eq!(orbit.len(), 14);
    for h in all.iter().step_by(7) {
        assert!(f.group.contains(&Permutation::from_images(h.clone()).unwrap()));
    }
    // A transposition of two vertices is not an automorphism.
    let t = Permutation::from_cycles(14, &[&[0, 1]]).unwrap();
    assert!(!f.group.contains(&t));
    assert!(!all.contains(&t.images().to_vec()));
}
