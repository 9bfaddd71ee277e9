//! Acceptance checks, one line per criterion. Run with
//! `cargo test --release --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use serde_json::json;

use semiprim::constructions::{fixture_by_name, fixtures};
use semiprim::local::{
    anatomy, kernels, local_hypothesis, verify_corollary, verify_section3, verify_theorem1,
    verify_theorem2, ArcPair,
};
use semiprim::perm::gcd;
use semiprim::report::{Status, Verdict};
use semiprim::structure::is_sl2;
use semiprim::suite::{
    criterion_matches_definition, d4_definition_witness, diagonal_three_regular_normals,
    engine_matches_naive, extraspecial_coprime, lemma_suite, named_groups, recipe_cases,
    structure_matches_enumeration, structure_spot_values, verify_all, Selection,
    ENGINE_ORACLE_ORDER, LEMMA_ORDER, STRUCTURE_ORACLE_ORDER,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn passed(v: &Verdict, what: &str) -> Result<(), String> {
    ensure(v.status == Status::Pass, format!("{what}: {:?} {:?}", v.status, v.reason))
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn pair(name: &str) -> Result<ArcPair, String> {
    ArcPair::from_fixture(&fixture_by_name(name).ok_or("missing fixture")?).map_err(err)
}

fn engine_oracle() -> Outcome {
    let mut groups = named_groups();
    for case in recipe_cases().iter().filter(|c| c.order <= ENGINE_ORACLE_ORDER) {
        groups.push(case.build().map_err(err)?.group().clone());
    }
    groups.extend(fixtures().into_iter().map(|f| f.group));
    let mut checked = 0;
    for g in &groups {
        let v = engine_matches_naive(g).map_err(err)?;
        if v.status == Status::Skip {
            continue;
        }
        passed(&v, "engine against closure")?;
        checked += 1;
    }
    Ok(format!("{checked} groups"))
}

fn criterion_equivalence() -> Outcome {
    let cases = recipe_cases();
    ensure(cases.len() >= 20, "fewer than 20 fixtures")?;
    for case in &cases {
        passed(&criterion_matches_definition(case).map_err(err)?, &case.label)?;
    }
    let d4 = d4_definition_witness().map_err(err)?;
    passed(&d4, "D4 witness")?;
    ensure(d4.witness.is_some(), "D4 has no witness")?;
    let negatives = cases.iter().filter(|c| !c.semiprimitive).count();
    Ok(format!("{} fixtures, {negatives} negatives, D4 witness", cases.len()))
}

fn counterexample() -> Outcome {
    let v = diagonal_three_regular_normals().map_err(err)?;
    passed(&v, "diagonal group")?;
    ensure(v.get("regular_orders") == Some(&json!(["3600", "3600", "3600"])), "regular orders")?;
    Ok("degree 3600, order 432000, three regular normals".into())
}

fn lemmas() -> Outcome {
    let mut n = 0;
    for case in recipe_cases().iter().filter(|c| c.semiprimitive && c.order <= LEMMA_ORDER) {
        passed(&lemma_suite(case).map_err(err)?, &case.label)?;
        n += 1;
    }
    let c = extraspecial_coprime().map_err(err)?;
    passed(&c, "coprimality")?;
    ensure(c.get("o2_is_q8") == Some(&json!(true)) && c.get("k_order") == Some(&json!("27")), "O_2(H), |K|")?;
    Ok(format!("{n} fixtures, O_2(H) = Q8, |K| = 27"))
}

fn structure_oracle() -> Outcome {
    passed(&structure_spot_values().map_err(err)?, "spot values")?;
    let mut groups: Vec<_> = named_groups();
    for case in recipe_cases().iter().filter(|c| c.order <= STRUCTURE_ORACLE_ORDER) {
        groups.push(case.build().map_err(err)?.group().clone());
    }
    groups.extend(fixtures().into_iter().map(|f| f.group).filter(|g| g.order() <= STRUCTURE_ORACLE_ORDER));
    for g in &groups {
        passed(&structure_matches_enumeration(g).map_err(err)?, g.name().unwrap_or("group"))?;
    }
    Ok(format!("{} groups", groups.len()))
}

fn edge_suite(name: &str) -> Result<(Verdict, Verdict, Verdict), String> {
    let p = pair(name)?;
    let (x, y) = p.default_edge();
    let s3 = verify_section3(&p, x, y).map_err(err)?;
    passed(&s3, "local structure")?;
    ensure(s3.items.iter().all(|i| i.status == Status::Pass), "an item did not pass")?;
    let t2 = verify_theorem2(&p, x, y).map_err(err)?;
    passed(&t2, "module decomposition")?;
    let c = verify_corollary(&p, x, y).map_err(err)?;
    passed(&c, "sections")?;
    Ok((s3, t2, c))
}

fn orders(name: &str, stab: u128, kx: Option<u128>, kxy: u128) -> Result<(), String> {
    let p = pair(name)?;
    let k = kernels(&p, 0, 1).map_err(err)?;
    ensure(k.stabilizer_x.order() == stab, "|G_x|")?;
    ensure(kx.is_none_or(|v| k.kernel_x.order() == v), "|G_x^[1]|")?;
    ensure(k.kernel_xy.order() == kxy, "|G_xy^[1]|")
}

fn all_sl2(name: &str) -> Result<usize, String> {
    let p = pair(name)?;
    let out = anatomy(&p, 0, 1).map_err(err)?;
    let a = out.report().ok_or("no anatomy")?;
    ensure(a.p == 2, "p")?;
    for e in &a.split.factors {
        ensure(is_sl2(e, 2).map_err(err)?, "factor is not SL2(2)")?;
    }
    Ok(a.split.r())
}

fn heawood() -> Outcome {
    orders("heawood", 24, Some(4), 2)?;
    ensure(all_sl2("heawood")? == 1, "r")?;
    let (_, t2, c) = edge_suite("heawood")?;
    ensure(t2.get("r") == Some(&json!(1)), "r")?;
    ensure(t2.get("commutator_orders") == Some(&json!(["4"])), "|[V, E_1]|")?;
    ensure(c.get("chain_orders") == Some(&json!(["1", "3", "6"])), "chain")?;
    ensure(c.get("factor_shape") == Some(&json!("Sym(3)")) && c.get("quotient_order") == Some(&json!("6")), "J/F")?;
    Ok("p = 2, r = 1, E_1 = SL2(2), |[V,E_1]| = 4, chain 1 < 3 < 6".into())
}

fn tutte_coxeter() -> Outcome {
    orders("tutte_coxeter", 48, None, 4)?;
    let r = all_sl2("tutte_coxeter")?;
    edge_suite("tutte_coxeter")?;
    Ok(format!("p = 2, r = {r}, every E_i = SL2(2)"))
}

fn coprime_valency() -> Outcome {
    let p = pair("f16")?;
    ensure(p.valency == 5 && gcd(5, 6) == 1, "valency")?;
    let h = local_hypothesis(&p).map_err(err)?;
    ensure(h.holds() && h.regular_nilpotent.as_ref().map(|n| n.order()) == Some(5), "local hypothesis")?;
    orders("f16", 20, None, 1)?;
    let v = verify_theorem1(&p).map_err(err)?;
    passed(&v, "bound")?;
    ensure(v.get("bound") == Some(&json!("2880")) && v.get("stabiliser_order") == Some(&json!("20")), "bound data")?;
    Ok("|G_x| = 20 <= 2880".into())
}

fn vacuity() -> Outcome {
    let mut n = 0;
    for f in fixtures() {
        let p = ArcPair::from_fixture(&f).map_err(err)?;
        let (x, y) = p.default_edge();
        let k = kernels(&p, x, y).map_err(err)?;
        if k.kernel_xy.is_trivial() {
            for v in [
                verify_section3(&p, x, y).map_err(err)?,
                verify_theorem2(&p, x, y).map_err(err)?,
                verify_corollary(&p, x, y).map_err(err)?,
            ] {
                ensure(v.status != Status::Pass, format!("{} passed on {}", v.check, f.name))?;
                n += 1;
            }
        }
        if gcd(p.valency as u64, 6) != 1 {
            let v = verify_theorem1(&p).map_err(err)?;
            ensure(v.status != Status::Pass, format!("bound passed on {}", f.name))?;
            n += 1;
        }
    }
    Ok(format!("{n} verdicts without content, none pass"))
}

fn determinism() -> Outcome {
    let all = Selection::default();
    let a = verify_all(&all, 1).map_err(err)?.to_json();
    let b = verify_all(&all, 1).map_err(err)?.to_json();
    let c = verify_all(&all, 4).map_err(err)?.to_json();
    ensure(a == b, "two serial runs differ")?;
    ensure(a == c, "serial and parallel runs differ")?;
    let report: semiprim::report::VerdictReport = serde_json::from_str(&a).map_err(err)?;
    ensure(!report.has_failures(), "suite has failures")?;
    Ok(format!("{} entries, {} bytes", report.entries.len(), a.len()))
}

fn main() -> ExitCode {
    type Criterion = (u32, &'static str, fn() -> Outcome, Option<u64>);
    let criteria: [Criterion; 10] = [
        (1, "engine matches naive closure", engine_oracle, Some(60)),
        (2, "criterion matches definition", criterion_equivalence, None),
        (3, "diagonal group has three regular normals", counterexample, Some(120)),
        (4, "semiprimitive lemma checks", lemmas, None),
        (5, "structure operators match subgroup enumeration", structure_oracle, None),
        (6, "heawood anatomy", heawood, None),
        (7, "tutte-coxeter anatomy", tutte_coxeter, None),
        (8, "stabiliser bound on the quintic cayley graph", coprime_valency, None),
        (9, "verdicts without content never pass", vacuity, None),
        (10, "verify-all is deterministic", determinism, None),
    ];
    let start = Instant::now();
    let mut failures = 0;
    for (n, name, run, limit) in criteria {
        let t = Instant::now();
        let mut outcome = run();
        let took = t.elapsed();
        if let (Ok(_), Some(s)) = (&outcome, limit) {
            if took > Duration::from_secs(s) {
                outcome = Err(format!("took {took:.1?}, limit {s}s"));
            }
        }
        match outcome {
            Ok(detail) => println!("PASS criterion {n:>2} {name}: {detail} ({took:.1?})"),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {n:>2} {name}: {why} ({took:.1?})");
            }
        }
    }
    let total = start.elapsed();
    if total > Duration::from_secs(600) {
        failures += 1;
        println!("FAIL total time {total:.1?} over 600s");
    }
    println!("{} of 10 criteria pass ({total:.1?})", 10 - failures.min(10));
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
