//! The verification corpus and the checks run over it.
//!
//! Checks are listed in a fixed order and run on a thread pool; results are
//! collected in list order, so reports do not depend on the number of jobs.

use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::arith::prime_factors;
use crate::constructions::{
    diagonal_counterexample, extraspecial_group, family_c3, family_extraspecial, family_inversion,
    family_vector, fixtures, custom, AbelianBlocks, Fixture, GroupRecipe,
};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::local::{
    anatomy, kernels, local_hypothesis, verify_corollary, verify_section3, verify_theorem1,
    verify_theorem2, ArcPair,
};
use crate::oracle::{Enumerated, Subset, SubgroupOracle};
use crate::perm::{gcd, Permutation, Point};
use crate::report::{group_json, Entry, Status, Verdict, VerdictReport};
use crate::semiprim::{
    is_semiprimitive_criterion, is_semiprimitive_definition, quotient_lemma_all,
    regular_normal_analysis, verify_coprime_lemma, verify_fitting_lemma, ActionLattice,
};
use crate::structure::{
    all_normal_subgroups, center, core_p, core_p_prime, fitting, frattini_p, is_sl2, omega_center,
    sylow, thompson,
};

/// Largest group compared against the naive closure.
pub const ENGINE_ORACLE_ORDER: u128 = 100_000;
/// Largest group compared against full subgroup enumeration.
pub const STRUCTURE_ORACLE_ORDER: u128 = 200;
/// Largest group put through the quotient and containment checks.
pub const LEMMA_ORDER: u128 = 10_000;
/// Bound on `degree · order` for the naive closure, which stores every element.
const NAIVE_CELLS: u128 = 30_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    Engine,
    Structure,
    Semiprim,
    Local,
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::Engine => "engine",
            Category::Structure => "structure",
            Category::Semiprim => "semiprim",
            Category::Local => "local",
        })
    }
}

type Job = Arc<dyn Fn() -> Result<Verdict> + Send + Sync>;

/// One check on one target, not yet run.
#[derive(Clone)]
pub struct Check {
    pub id: String,
    pub target: String,
    pub category: Category,
    /// Order of the group the check works in.
    pub order: u128,
    run: Job,
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Check")
            .field("id", &self.id)
            .field("target", &self.target)
            .field("category", &self.category)
            .field("order", &self.order)
            .finish()
    }
}

impl Check {
    pub fn new(
        id: &str,
        target: &str,
        category: Category,
        order: u128,
        run: impl Fn() -> Result<Verdict> + Send + Sync + 'static,
    ) -> Check {
        Check {
            id: id.to_owned(),
            target: target.to_owned(),
            category,
            order,
            run: Arc::new(run),
        }
    }

    /// Runs the check; a cap overflow becomes a skip, any other error a fail.
    pub fn run(&self) -> Entry {
        let start = Instant::now();
        let mut verdict = match (self.run)() {
            Ok(v) => v,
            Err(e @ Error::CapExceeded { .. }) => Verdict::skip(self.id.clone(), e.to_string()),
            Err(e) => Verdict::new(self.id.clone(), Status::Fail).because(e.to_string()),
        };
        verdict.millis = Some(start.elapsed().as_millis() as u64);
        Entry {
            check_id: self.id.clone(),
            target: self.target.clone(),
            verdict,
        }
    }

    /// True if `term` is the category, the check id, the target, or
    /// `id:target`.
    pub fn matches(&self, term: &str) -> bool {
        let term = term.trim();
        term == self.category.to_string()
            || term == self.id
            || term == self.target
            || term.split_once(':').is_some_and(|(id, t)| id == self.id && t == self.target)
    }
}

/// Runs the checks on `jobs` threads, keeping list order.
pub fn run_checks(checks: &[Check], jobs: usize) -> Result<Vec<Entry>> {
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    Ok(pool.install(|| checks.par_iter().map(Check::run).collect()))
}

/// Selection of checks for a run.
#[derive(Debug, Clone, Default)]
pub struct Selection {
    /// Keep checks matching any term; all checks when empty.
    pub filter: Vec<String>,
    pub max_order: Option<u128>,
}

impl Selection {
    pub fn apply(&self, checks: Vec<Check>) -> Vec<Check> {
        checks
            .into_iter()
            .filter(|c| self.filter.is_empty() || self.filter.iter().any(|f| c.matches(f)))
            .filter(|c| self.max_order.is_none_or(|m| c.order <= m))
            .collect()
    }
}

/// The full suite as a report, timings removed so that output is stable.
pub fn verify_all(selection: &Selection, jobs: usize) -> Result<VerdictReport> {
    let checks = selection.apply(all_checks());
    let mut entries = run_checks(&checks, jobs)?;
    for e in &mut entries {
        strip_millis(&mut e.verdict);
    }
    Ok(VerdictReport::new(entries))
}

fn strip_millis(v: &mut Verdict) {
    v.millis = None;
    for i in &mut v.items {
        strip_millis(i);
    }
}

// ---------------------------------------------------------------------------
// Corpus

fn perm(n: usize, cycles: &[&[Point]]) -> Permutation {
    Permutation::from_cycles(n, cycles).expect("valid cycles")
}

fn named(name: &str, n: usize, gens: &[&[&[Point]]]) -> PermGroup {
    PermGroup::new(n, gens.iter().map(|c| perm(n, c)).collect())
        .expect("valid generators")
        .named(name)
}

/// Small groups by name, as used by the engine and structure oracles.
pub fn named_groups() -> Vec<PermGroup> {
    vec![
        named("S3", 3, &[&[&[0, 1]], &[&[0, 1, 2]]]),
        named("S4", 4, &[&[&[0, 1]], &[&[0, 1, 2, 3]]]),
        named("A4", 4, &[&[&[0, 1, 2]], &[&[1, 2, 3]]]),
        named("D4", 4, &[&[&[0, 1, 2, 3]], &[&[0, 2]]]),
        named("D5", 5, &[&[&[0, 1, 2, 3, 4]], &[&[1, 4], &[2, 3]]]),
        quaternion8(),
        named("C9", 9, &[&[&[0, 1, 2, 3, 4, 5, 6, 7, 8]]]),
        named("C4", 4, &[&[&[0, 1, 2, 3]]]),
        named("V4", 4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]),
        named("A5", 5, &[&[&[0, 1, 2, 3, 4]], &[&[0, 1, 2]]]),
        named("S5", 5, &[&[&[0, 1]], &[&[0, 1, 2, 3, 4]]]),
    ]
}

fn quaternion8() -> PermGroup {
    extraspecial_group(2, false, 1)
        .expect("Q8 is in range")
        .group
        .named("Q8")
}

pub fn named_group(name: &str) -> Option<PermGroup> {
    named_groups().into_iter().find(|g| g.name() == Some(name))
}

type Build = Arc<dyn Fn() -> Result<GroupRecipe> + Send + Sync>;

/// A semidirect-product fixture with its expected semiprimitivity.
#[derive(Clone)]
pub struct RecipeCase {
    pub label: String,
    pub order: u128,
    pub semiprimitive: bool,
    build: Build,
}

impl fmt::Debug for RecipeCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RecipeCase")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("semiprimitive", &self.semiprimitive)
            .finish()
    }
}

impl RecipeCase {
    fn new(
        label: String,
        order: u128,
        semiprimitive: bool,
        build: impl Fn() -> Result<GroupRecipe> + Send + Sync + 'static,
    ) -> RecipeCase {
        RecipeCase {
            label,
            order,
            semiprimitive,
            build: Arc::new(build),
        }
    }

    pub fn build(&self) -> Result<GroupRecipe> {
        (self.build)()
    }
}

fn cyclic_automorphism(label: &str, n: u32, k: u32) -> Result<GroupRecipe> {
    let c = AbelianBlocks::new(&[n])?;
    let image = c.element(&[k]);
    custom(label, &c.group, vec![vec![image]])
}

/// `C3 × C3` with `C2` acting as `diag(-1, 1)`.
fn partial_inversion() -> Result<GroupRecipe> {
    let c = AbelianBlocks::new(&[3, 3])?;
    let images = vec![c.element(&[2, 0]), c.element(&[0, 1])];
    custom("C3^2:C2 diag(-1,1)", &c.group, vec![images])
}

/// Every semidirect-product fixture: the four families within their caps,
/// the non-semiprimitive negatives and one positive custom product.
pub fn recipe_cases() -> Vec<RecipeCase> {
    let mut out = Vec::new();
    let inversion: [(u32, &[u32], &str); 12] = [
        (3, &[1], "c3"),
        (3, &[2], "c9"),
        (3, &[1, 1], "c3xc3"),
        (3, &[3], "c27"),
        (3, &[2, 1], "c9xc3"),
        (5, &[1], "c5"),
        (5, &[2], "c25"),
        (5, &[1, 1], "c5xc5"),
        (7, &[1], "c7"),
        (7, &[1, 1], "c7xc7"),
        (11, &[1], "c11"),
        (13, &[1], "c13"),
    ];
    for (q, shape, name) in inversion {
        let size: u128 = shape.iter().map(|&e| (q as u128).pow(e)).product();
        let shape = shape.to_vec();
        out.push(RecipeCase::new(
            format!("inversion(q={q},P={name})"),
            2 * size,
            true,
            move || family_inversion(q, &shape),
        ));
    }
    let vector: [(u32, u32, u32, u32, u128); 8] = [
        (2, 1, 2, 1, 24),
        (2, 2, 1, 1, 12),
        (3, 1, 2, 1, 432),
        (2, 1, 3, 1, 1344),
        (2, 2, 2, 1, 2880),
        (5, 1, 2, 1, 12000),
        (2, 1, 2, 2, 96),
        (3, 1, 1, 2, 18),
    ];
    for (q, a, n, m, order) in vector {
        out.push(RecipeCase::new(
            format!("vector(q={q},a={a},n={n},m={m})"),
            order,
            true,
            move || family_vector(q, a, n, m),
        ));
    }
    for (q, order) in [(3u32, 648u128), (5, 15000)] {
        out.push(RecipeCase::new(
            format!("extraspecial(q={q},m=1)"),
            order,
            true,
            move || family_extraspecial(q, 1),
        ));
    }
    let c3: [(&[u32], u128); 3] = [(&[2], 24), (&[5], 375), (&[2, 5], 3000)];
    for (primes, order) in c3 {
        let names: Vec<String> = primes.iter().map(u32::to_string).collect();
        let primes = primes.to_vec();
        out.push(RecipeCase::new(
            format!("c3family(pi={{{}}})", names.join(",")),
            order,
            true,
            move || family_c3(&primes),
        ));
    }
    out.push(RecipeCase::new("C7:C3".into(), 21, true, || cyclic_automorphism("C7:C3", 7, 2)));
    out.push(RecipeCase::new("C4:C2 inversion".into(), 8, false, || {
        cyclic_automorphism("C4:C2 inversion", 4, 3)
    }));
    out.push(RecipeCase::new("C9:C3 x->x^4".into(), 27, false, || {
        cyclic_automorphism("C9:C3 x->x^4", 9, 4)
    }));
    out.push(RecipeCase::new("C3^2:C2 diag(-1,1)".into(), 18, false, partial_inversion));
    out
}

// ---------------------------------------------------------------------------
// Engine checks

fn sorted_orbits(mut orbits: Vec<Vec<Point>>) -> Vec<Vec<Point>> {
    for o in &mut orbits {
        o.sort_unstable();
    }
    orbits.sort();
    orbits
}

/// Order, orbits and membership from the chain against the naive closure.
pub fn engine_matches_naive(group: &PermGroup) -> Result<Verdict> {
    const ID: &str = "engine-matches-naive-closure";
    let cells = group.order() * group.degree() as u128;
    if group.order() > ENGINE_ORACLE_ORDER || cells > NAIVE_CELLS {
        return Ok(Verdict::skip(ID, "group too large for the naive closure"));
    }
    let naive = Enumerated::of(group, ENGINE_ORACLE_ORDER)?;
    let order_ok = naive.order() as u128 == group.order();
    let orbits_ok = sorted_orbits(group.orbits()) == naive.orbits();
    let members_ok = naive.elements.iter().all(|g| group.contains(g));
    // Products with a transposition are members exactly when the closure says so.
    let mut probes = 0usize;
    let mut probes_ok = true;
    if group.degree() >= 2 {
        let t = perm(group.degree(), &[&[0, 1]]);
        let step = (naive.order() / 2000).max(1);
        for g in naive.elements.iter().step_by(step) {
            let h = g.compose(&t)?;
            probes_ok &= group.contains(&h) == naive.contains(&h);
            probes += 1;
        }
    }
    Ok(Verdict::pass_if(ID, order_ok && orbits_ok && members_ok && probes_ok)
        .with("order", group.order().to_string())
        .with("naive_order", naive.order().to_string())
        .with("orbits", naive.orbits().len())
        .with("probes", probes)
        .with_items(vec![
            Verdict::pass_if("order", order_ok),
            Verdict::pass_if("orbits", orbits_ok),
            Verdict::pass_if("members", members_ok),
            Verdict::pass_if("non-members", probes_ok),
        ]))
}

// ---------------------------------------------------------------------------
// Structure checks

fn subset_of(oracle: &SubgroupOracle, g: &PermGroup) -> Subset {
    oracle.group.elements.iter().map(|x| g.contains(x)).collect()
}

/// Normal subgroups, `O_p`, `O_p'`, Fitting, and on each Sylow subgroup the
/// Frattini, `ΩZ` and Thompson subgroups, against full subgroup enumeration.
pub fn structure_matches_enumeration(group: &PermGroup) -> Result<Verdict> {
    const ID: &str = "structure-matches-subgroup-enumeration";
    if group.order() > STRUCTURE_ORACLE_ORDER {
        return Ok(Verdict::skip(ID, "group too large for subgroup enumeration"));
    }
    let oracle = SubgroupOracle::new(group, STRUCTURE_ORACLE_ORDER as usize)?;
    let mut items = Vec::new();
    let lattice = all_normal_subgroups(group)?;
    let normals = oracle.normal_subgroups();
    let same_normals = normals.len() == lattice.len()
        && normals
            .iter()
            .all(|s| lattice.iter().any(|m| oracle.matches(s, m)));
    items.push(
        Verdict::pass_if("normal-subgroups", same_normals)
            .with("count", normals.len())
            .with("engine_count", lattice.len()),
    );
    let f = fitting(group)?;
    items.push(Verdict::pass_if("fitting", oracle.matches(&oracle.fitting(), &f)).with("order", f.order().to_string()));
    for p in prime_factors(group.order()) {
        let op = core_p(group, p)?;
        items.push(Verdict::pass_if(format!("o-p(p={p})"), oracle.matches(&oracle.o_p(p), &op)));
        let opp = core_p_prime(group, p)?;
        items.push(Verdict::pass_if(format!("o-p-prime(p={p})"), oracle.matches(&oracle.o_p_prime(p), &opp)));
        let s = sylow(group, p)?;
        let ss = subset_of(&oracle, &s);
        let sylow_ok = oracle.order(&ss) as u128 == s.order() && oracle.subgroups.contains(&ss);
        items.push(Verdict::pass_if(format!("sylow(p={p})"), sylow_ok));
        let phi = frattini_p(&s)?;
        items.push(Verdict::pass_if(format!("frattini(p={p})"), oracle.matches(&oracle.frattini(&ss), &phi)));
        let oz = omega_center(&s)?;
        items.push(Verdict::pass_if(format!("omega-center(p={p})"), oracle.matches(&oracle.omega_center(&ss, p), &oz)));
        let j = thompson(&s)?;
        items.push(Verdict::pass_if(format!("thompson(p={p})"), oracle.matches(&oracle.thompson(&ss, p), &j)));
    }
    Ok(Verdict::new(ID, Status::Pass)
        .with("order", group.order().to_string())
        .with("subgroups", oracle.subgroups.len())
        .with_items(items))
}

/// `O_2(S4) = V4`, `J(Q8) = Z(Q8)`, `J(D4) = D4`, `Φ(Q8) = Z(Q8)`.
pub fn structure_spot_values() -> Result<Verdict> {
    let get = |n: &str| named_group(n).expect("named group");
    let (s4, v4, q8, d4) = (get("S4"), get("V4"), get("Q8"), get("D4"));
    let zq8 = center(&q8)?;
    let items = vec![
        Verdict::pass_if("o2-s4-is-v4", core_p(&s4, 2)?.same_group(&v4)),
        Verdict::pass_if("thompson-q8-is-center", thompson(&q8)?.same_group(&zq8)),
        Verdict::pass_if("thompson-d4-is-d4", thompson(&d4)?.same_group(&d4)),
        Verdict::pass_if("frattini-q8-is-center", frattini_p(&q8)?.same_group(&zq8)),
    ];
    Ok(Verdict::new("structure-spot-values", Status::Pass).with_items(items))
}

// ---------------------------------------------------------------------------
// Semiprimitivity checks

/// Definition against both forms of the criterion, and against the expected
/// answer for the fixture.
pub fn criterion_matches_definition(case: &RecipeCase) -> Result<Verdict> {
    const ID: &str = "criterion-matches-definition";
    let recipe = case.build()?;
    let def = is_semiprimitive_definition(recipe.group())?;
    let crit = is_semiprimitive_criterion(&recipe.spec)?;
    let ok = def.semiprimitive == crit.verdict.semiprimitive
        && crit.faithful_on_quotients == crit.commutator_form
        && def.semiprimitive == case.semiprimitive
        && def.witness.is_some() != def.semiprimitive;
    let mut v = Verdict::pass_if(ID, ok)
        .with("order", recipe.group().order().to_string())
        .with("degree", recipe.group().degree())
        .with("definition", def.semiprimitive)
        .with("faithful_on_quotients", crit.faithful_on_quotients)
        .with("commutator_form", crit.commutator_form)
        .with("expected", case.semiprimitive)
        .with("invariant_subgroups", crit.invariant_subgroups);
    if let Some(w) = &def.witness {
        v = v.with("witness_order", w.order().to_string());
        if !ok {
            v = v.with_witness(group_json(w));
        }
    }
    Ok(v)
}

/// `D4` on four points is not semiprimitive, shown by an intransitive,
/// non-semiregular normal subgroup.
pub fn d4_definition_witness() -> Result<Verdict> {
    const ID: &str = "definition-witness";
    let d4 = named_group("D4").expect("named group");
    let def = is_semiprimitive_definition(&d4)?;
    let Some(w) = def.witness else {
        return Ok(Verdict::new(ID, Status::Fail).because("no witness for D4"));
    };
    let ok = !def.semiprimitive
        && w.is_normal_in(&d4)
        && !w.is_transitive()
        && !crate::semiprim::is_semiregular(&w);
    Ok(Verdict::pass_if(ID, ok)
        .with("semiprimitive", def.semiprimitive)
        .with_witness(group_json(&w)))
}

/// The diagonal group of degree 3600 is semiprimitive with exactly three
/// regular normal subgroups, the pairwise products of the simple factors,
/// none containing another.
pub fn diagonal_three_regular_normals() -> Result<Verdict> {
    const ID: &str = "diagonal-three-regular-normals";
    let d = diagonal_counterexample()?;
    let g = d.group();
    let lattice = ActionLattice::via(d.hom())?;
    let sp = crate::semiprim::classify(&lattice);
    let regular: Vec<&PermGroup> = lattice.regular().collect();
    let incomparable = regular.iter().enumerate().all(|(i, a)| {
        regular
            .iter()
            .enumerate()
            .all(|(j, b)| i == j || !a.contains_group(b))
    });
    let mut products = Vec::new();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        products.push(d.product_of_factors(i, j)?);
    }
    let named = products
        .iter()
        .all(|t| regular.iter().any(|r| r.same_group(t)));
    let ok = g.degree() == 3600
        && g.order() == 432_000
        && sp.semiprimitive
        && regular.len() == 3
        && incomparable
        && named;
    Ok(Verdict::pass_if(ID, ok)
        .with("degree", g.degree())
        .with("order", g.order().to_string())
        .with("semiprimitive", sp.semiprimitive)
        .with("normal_subgroups", lattice.members.len())
        .with("regular_orders", regular.iter().map(|r| r.order().to_string()).collect::<Vec<_>>())
        .with("pairwise_incomparable", incomparable)
        .with("products_of_factors", named))
}

/// Quotient, containment and Fitting checks on a semiprimitive fixture.
pub fn lemma_suite(case: &RecipeCase) -> Result<Verdict> {
    const ID: &str = "semiprimitive-lemmas";
    if case.order > LEMMA_ORDER {
        return Ok(Verdict::skip(ID, "group above the lemma order limit"));
    }
    let recipe = case.build()?;
    let lattice = ActionLattice::of(recipe.group())?;
    let items = vec![
        quotient_lemma_all(&lattice)?,
        regular_normal_analysis(&lattice)?,
        verify_fitting_lemma(&lattice)?,
    ];
    Ok(Verdict::new(ID, Status::Pass).with_items(items))
}

/// The coprimality check on the extraspecial fixture, where `O_2(H) = Q8`
/// and `|K| = 27`.
pub fn extraspecial_coprime() -> Result<Verdict> {
    const ID: &str = "extraspecial-coprime";
    let recipe = family_extraspecial(3, 1)?;
    let lattice = ActionLattice::of(recipe.group())?;
    let v = verify_coprime_lemma(&lattice)?;
    let h = recipe.group().point_stabilizer(0)?;
    let o2 = core_p(&h, 2)?;
    let q8 = crate::structure::is_quaternion8(&o2)?;
    let k = recipe.spec.regular.order();
    let ok = v.is_pass() && q8 && k == 27;
    Ok(Verdict::pass_if(ID, ok)
        .with("o2_is_q8", q8)
        .with("k_order", k.to_string())
        .with_items(vec![v]))
}

// ---------------------------------------------------------------------------
// Local checks

/// Reference values for the fixtures with a known anatomy.
#[derive(Debug, Clone, Copy)]
pub struct Reference {
    pub fixture: &'static str,
    pub stabilizer_x: u128,
    pub kernel_x: Option<u128>,
    pub kernel_xy: u128,
    pub p: Option<u128>,
    pub r: Option<usize>,
    /// `|[V, E_i]|` for every factor.
    pub commutator: Option<u128>,
    pub chain: Option<[u128; 3]>,
}

pub const REFERENCES: [Reference; 3] = [
    Reference {
        fixture: "heawood",
        stabilizer_x: 24,
        kernel_x: Some(4),
        kernel_xy: 2,
        p: Some(2),
        r: Some(1),
        commutator: Some(4),
        chain: Some([1, 3, 6]),
    },
    Reference {
        fixture: "tutte_coxeter",
        stabilizer_x: 48,
        kernel_x: None,
        kernel_xy: 4,
        p: Some(2),
        r: None,
        commutator: Some(4),
        chain: None,
    },
    Reference {
        fixture: "cayley_f16_quintic",
        stabilizer_x: 20,
        kernel_x: None,
        kernel_xy: 1,
        p: None,
        r: None,
        commutator: None,
        chain: None,
    },
];

/// Kernel orders and anatomy invariants against the reference table.
pub fn reference_values(pair: &ArcPair, reference: &Reference) -> Result<Verdict> {
    const ID: &str = "anatomy-reference-values";
    let (x, y) = pair.default_edge();
    let k = kernels(pair, x, y)?;
    let mut items = vec![
        Verdict::pass_if("stabilizer-x", k.stabilizer_x.order() == reference.stabilizer_x)
            .with("order", k.stabilizer_x.order().to_string()),
        Verdict::pass_if("kernel-xy", k.kernel_xy.order() == reference.kernel_xy)
            .with("order", k.kernel_xy.order().to_string()),
    ];
    if let Some(kx) = reference.kernel_x {
        items.push(Verdict::pass_if("kernel-x", k.kernel_x.order() == kx).with("order", k.kernel_x.order().to_string()));
    }
    if let Some(p) = reference.p {
        let out = anatomy(pair, x, y)?;
        let Some(a) = out.report() else {
            return Ok(out.blocked(ID).expect("not ready"));
        };
        items.push(Verdict::pass_if("p", a.p == p).with("p", a.p));
        if let Some(r) = reference.r {
            items.push(Verdict::pass_if("r", a.split.r() == r).with("r", a.split.r()));
        }
        let mut sl2 = true;
        for e in &a.split.factors {
            sl2 &= is_sl2(e, p)?;
        }
        items.push(Verdict::pass_if("factors-sl2", sl2 && !a.split.factors.is_empty()));
        if let Some(c) = reference.commutator {
            let orders: Vec<u128> = a.split.commutators.iter().map(PermGroup::order).collect();
            items.push(
                Verdict::pass_if("commutator-orders", orders.iter().all(|&o| o == c))
                    .with("orders", orders.iter().map(u128::to_string).collect::<Vec<_>>()),
            );
        }
        if let Some(chain) = reference.chain {
            let v = verify_corollary(pair, x, y)?;
            let want = json!(chain.iter().map(u128::to_string).collect::<Vec<_>>());
            items.push(Verdict::pass_if("chain-orders", v.get("chain_orders") == Some(&want)));
        }
    }
    Ok(Verdict::new(ID, Status::Pass).with_items(items))
}

/// The theorem verifiers never pass when their hypothesis has no content:
/// `G_{xy}^{[1]} = 1` for the edge statements, `gcd(d, 6) ≠ 1` for the bound.
pub fn vacuity_honesty(pair: &ArcPair) -> Result<Verdict> {
    const ID: &str = "vacuous-verdicts-not-passes";
    let (x, y) = pair.default_edge();
    let k = kernels(pair, x, y)?;
    let g = gcd(pair.valency as u64, 6);
    let hyp = local_hypothesis(pair)?.holds();
    let mut items = Vec::new();
    let honest = |v: &Verdict| v.status == Status::Skip || v.status == Status::Vacuous;
    if k.kernel_xy.is_trivial() || !hyp {
        for v in [
            verify_section3(pair, x, y)?,
            verify_theorem2(pair, x, y)?,
            verify_corollary(pair, x, y)?,
        ] {
            items.push(Verdict::pass_if(v.check.clone(), honest(&v)).with("status", v.status));
        }
    }
    if g != 1 || !hyp {
        let v = verify_theorem1(pair)?;
        items.push(Verdict::pass_if(v.check.clone(), honest(&v)).with("status", v.status));
    }
    if items.is_empty() {
        return Ok(Verdict::vacuous(ID, "every hypothesis holds"));
    }
    Ok(Verdict::new(ID, Status::Pass)
        .with("kernel_xy_order", k.kernel_xy.order().to_string())
        .with("gcd", g)
        .with_items(items))
}

fn local_checks(f: &Fixture) -> Vec<Check> {
    let order = f.group.order();
    let name = f.name.clone();
    let pair = Arc::new(ArcPair::from_fixture(f));
    let mut out = Vec::new();
    let mut add = |id: &str, run: fn(&ArcPair) -> Result<Verdict>| {
        let pair = Arc::clone(&pair);
        out.push(Check::new(id, &name, Category::Local, order, move || match pair.as_ref() {
            Ok(p) => run(p),
            Err(e) => Err(Error::NotArcTransitive(e.to_string())),
        }));
    };
    add("local-hypothesis", |p| Ok(local_hypothesis(p)?.verdict()));
    add(crate::local::THEOREM1, verify_theorem1);
    add(crate::local::SECTION3, |p| {
        let (x, y) = p.default_edge();
        verify_section3(p, x, y)
    });
    add(crate::local::THEOREM2, |p| {
        let (x, y) = p.default_edge();
        verify_theorem2(p, x, y)
    });
    add(crate::local::COROLLARY, |p| {
        let (x, y) = p.default_edge();
        verify_corollary(p, x, y)
    });
    add("vacuous-verdicts-not-passes", vacuity_honesty);
    if let Some(r) = REFERENCES.iter().find(|r| r.fixture == f.name) {
        let r = *r;
        let pair = Arc::clone(&pair);
        out.push(Check::new("anatomy-reference-values", &name, Category::Local, order, move || {
            match pair.as_ref() {
                Ok(p) => reference_values(p, &r),
                Err(e) => Err(Error::NotArcTransitive(e.to_string())),
            }
        }));
    }
    out
}

// ---------------------------------------------------------------------------
// The suite

/// Every check, in report order.
pub fn all_checks() -> Vec<Check> {
    let mut out = Vec::new();
    let recipes = recipe_cases();
    let fixture_list = fixtures();

    for g in named_groups() {
        let name = g.name().unwrap_or("group").to_owned();
        let order = g.order();
        let g2 = g.clone();
        out.push(Check::new("engine-matches-naive-closure", &name, Category::Engine, order, move || {
            engine_matches_naive(&g2)
        }));
    }
    for case in recipes.iter().filter(|c| c.order <= ENGINE_ORACLE_ORDER) {
        let c = case.clone();
        out.push(Check::new("engine-matches-naive-closure", &case.label, Category::Engine, case.order, move || {
            engine_matches_naive(c.build()?.group())
        }));
    }
    for f in &fixture_list {
        let g = f.group.clone();
        out.push(Check::new("engine-matches-naive-closure", &f.name, Category::Engine, g.order(), move || {
            engine_matches_naive(&g)
        }));
    }

    out.push(Check::new("structure-spot-values", "S4,Q8,D4", Category::Structure, 24, structure_spot_values));
    for g in named_groups().into_iter().filter(|g| g.order() <= STRUCTURE_ORACLE_ORDER) {
        let name = g.name().unwrap_or("group").to_owned();
        let order = g.order();
        out.push(Check::new("structure-matches-subgroup-enumeration", &name, Category::Structure, order, move || {
            structure_matches_enumeration(&g)
        }));
    }
    for case in recipes.iter().filter(|c| c.order <= STRUCTURE_ORACLE_ORDER) {
        let c = case.clone();
        out.push(Check::new(
            "structure-matches-subgroup-enumeration",
            &case.label,
            Category::Structure,
            case.order,
            move || structure_matches_enumeration(c.build()?.group()),
        ));
    }
    for f in fixture_list.iter().filter(|f| f.group.order() <= STRUCTURE_ORACLE_ORDER) {
        let g = f.group.clone();
        out.push(Check::new(
            "structure-matches-subgroup-enumeration",
            &f.name,
            Category::Structure,
            g.order(),
            move || structure_matches_enumeration(&g),
        ));
    }

    for case in &recipes {
        let c = case.clone();
        out.push(Check::new("criterion-matches-definition", &case.label, Category::Semiprim, case.order, move || {
            criterion_matches_definition(&c)
        }));
    }
    out.push(Check::new("definition-witness", "D4", Category::Semiprim, 8, d4_definition_witness));
    out.push(Check::new(
        "diagonal-three-regular-normals",
        "diagonal(A5^3:2)",
        Category::Semiprim,
        432_000,
        diagonal_three_regular_normals,
    ));
    for case in recipes.iter().filter(|c| c.semiprimitive && c.order <= LEMMA_ORDER) {
        let c = case.clone();
        out.push(Check::new("semiprimitive-lemmas", &case.label, Category::Semiprim, case.order, move || {
            lemma_suite(&c)
        }));
    }
    out.push(Check::new("extraspecial-coprime", "extraspecial(q=3,m=1)", Category::Semiprim, 648, extraspecial_coprime));

    for f in &fixture_list {
        out.extend(local_checks(f));
    }
    out
}
