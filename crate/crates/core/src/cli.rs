//! The `semiprim` command line.
//!
//! Exit codes: 0 when no check fails, 1 when any check fails, 2 on unreadable
//! or invalid input.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::caps::{self, Caps};
use crate::constructions::{
    abelian_shape, diagonal_counterexample, family_c3, family_extraspecial, family_inversion,
    family_vector, fixture_by_name, Graph, GroupRecipe,
};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::io::{read_group, write_group};
use crate::local::{
    check_arc_transitive, local_hypothesis_at, verify_corollary, verify_section3, verify_theorem1,
    verify_theorem2, ArcPair,
};
use crate::perm::Point;
use crate::report::{group_json, Entry, Status, Verdict, VerdictReport};
use crate::semiprim::{is_semiprimitive_criterion, is_semiprimitive_definition, is_semiprimitive_via, SpVerdict};
use crate::suite::{verify_all, Selection};

#[derive(Debug, Parser)]
#[command(name = "semiprim", version, about = "Semiprimitive groups and local actions of arc-transitive graphs")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test a group for semiprimitivity.
    CheckSp(CheckSpArgs),
    /// Print a constructed group as JSON.
    Construct(FamilyArgs),
    /// Run the local-action checks on an arc-transitive pair.
    Local(LocalArgs),
    /// Run the full verification suite.
    VerifyAll(VerifyAllArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Inversion,
    Vector,
    Extraspecial,
    C3,
    Diagonal,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// The family to build.
    #[arg(value_enum)]
    pub family: FamilyName,
    #[arg(long, default_value_t = 3)]
    pub q: u32,
    /// Abelian q-group for the inversion family, e.g. `c25xc5`.
    #[arg(long, default_value = "c3")]
    pub p_shape: String,
    #[arg(long, default_value_t = 1)]
    pub a: u32,
    #[arg(long, default_value_t = 2)]
    pub n: u32,
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    /// Primes for the order-3 family, e.g. `2,5`.
    #[arg(long, value_delimiter = ',', default_value = "2")]
    pub primes: Vec<u32>,
}

#[derive(Debug, Args)]
pub struct CheckSpArgs {
    /// Group file: `{"degree": n, "generators": [[images..], ..]}`.
    #[arg(long, conflicts_with = "construct")]
    pub group: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub construct: Option<FamilyName>,
    #[arg(long, default_value_t = 3)]
    pub q: u32,
    #[arg(long, default_value = "c3")]
    pub p_shape: String,
    #[arg(long, default_value_t = 1)]
    pub a: u32,
    #[arg(long, default_value_t = 2)]
    pub n: u32,
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    #[arg(long, value_delimiter = ',', default_value = "2")]
    pub primes: Vec<u32>,
}

#[derive(Debug, Args)]
pub struct LocalArgs {
    /// A shipped fixture: heawood, tutte_coxeter, petersen, f16, complete_4,
    /// complete_bipartite_3.
    #[arg(long, conflicts_with_all = ["graph", "group"])]
    pub fixture: Option<String>,
    /// Edge-list file: `n` on the first line, then one `u v` per line.
    #[arg(long, requires = "group")]
    pub graph: Option<PathBuf>,
    #[arg(long, requires = "graph")]
    pub group: Option<PathBuf>,
    /// The edge `x,y`; defaults to 0 and its smallest neighbour.
    #[arg(long, conflicts_with = "all_edges_orbit")]
    pub edge: Option<String>,
    /// Every edge through vertex 0.
    #[arg(long)]
    pub all_edges_orbit: bool,
    /// Only the stabiliser bound for valency coprime to 6.
    #[arg(long)]
    pub theorem1: bool,
}

#[derive(Debug, Args)]
pub struct VerifyAllArgs {
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Keep checks by category, check id, target or `id:target`; repeatable.
    #[arg(long)]
    pub filter: Vec<String>,
    /// Skip checks whose group order exceeds this.
    #[arg(long)]
    pub max_order: Option<u128>,
}

/// Parses the arguments, runs the command and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Ok(spec) = std::env::var("SEMIPRIM_CAPS") {
        match Caps::parse(&spec) {
            Ok(c) => {
                caps::install(c);
            }
            Err(e) => {
                eprintln!("error: SEMIPRIM_CAPS: {e}");
                return 2;
            }
        }
    }
    match run(&cli) {
        Ok(Output::Report(report)) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", render(&report));
            }
            i32::from(report.has_failures())
        }
        Ok(Output::Text(text)) => {
            println!("{text}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

pub enum Output {
    Report(VerdictReport),
    Text(String),
}

pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::CheckSp(a) => check_sp(a).map(Output::Report),
        Command::Construct(a) => construct(a).map(Output::Text),
        Command::Local(a) => local(a).map(Output::Report),
        Command::VerifyAll(a) => {
            let selection = Selection {
                filter: a.filter.clone(),
                max_order: a.max_order,
            };
            verify_all(&selection, a.jobs).map(Output::Report)
        }
    }
}

/// One line per check, then the tally.
pub fn render(report: &VerdictReport) -> String {
    let mut out = String::new();
    for e in &report.entries {
        let status = format!("{:?}", e.verdict.status).to_uppercase();
        out.push_str(&format!("{status:<8} {:<44} {}", e.check_id, e.target));
        if let Some(r) = &e.verdict.reason {
            out.push_str(&format!("  ({r})"));
        }
        out.push('\n');
        for i in e.verdict.items.iter().filter(|i| i.status == Status::Fail) {
            out.push_str(&format!("         - failed item {}\n", i.check));
        }
    }
    let s = &report.summary;
    out.push_str(&format!(
        "{} pass, {} fail, {} skip, {} vacuous\n",
        s.pass, s.fail, s.skip, s.vacuous
    ));
    out
}

fn build(family: FamilyName, q: u32, shape: &str, a: u32, n: u32, m: u32, primes: &[u32]) -> Result<GroupRecipe> {
    match family {
        FamilyName::Inversion => family_inversion(q, &abelian_shape(q, shape)?),
        FamilyName::Vector => family_vector(q, a, n, m),
        FamilyName::Extraspecial => family_extraspecial(q, m),
        FamilyName::C3 => family_c3(primes),
        FamilyName::Diagonal => diagonal_counterexample()?.recipe(),
    }
}

fn construct(a: &FamilyArgs) -> Result<String> {
    let g = if a.family == FamilyName::Diagonal {
        diagonal_counterexample()?.group().clone()
    } else {
        build(a.family, a.q, &a.p_shape, a.a, a.n, a.m, &a.primes)?.group().clone()
    };
    Ok(write_group(&g))
}

fn sp_verdict(check: &str, v: &SpVerdict) -> Verdict {
    let mut out = Verdict::pass_if(check, v.semiprimitive)
        .with("regular_normal_orders", v.regular_normals.iter().map(u128::to_string).collect::<Vec<_>>());
    if let Some(w) = &v.witness {
        out = out
            .because("a normal subgroup is neither transitive nor semiregular")
            .with_witness(group_json(w));
    }
    out
}

fn entry(check: &Verdict, target: &str) -> Entry {
    Entry {
        check_id: check.check.clone(),
        target: target.to_owned(),
        verdict: check.clone(),
    }
}

fn read_file(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn check_sp(a: &CheckSpArgs) -> Result<VerdictReport> {
    let mut entries = Vec::new();
    if let Some(path) = &a.group {
        let g = read_group(&read_file(path)?)?;
        let target = path.display().to_string();
        let v = match is_semiprimitive_definition(&g) {
            Ok(sp) => sp_verdict("semiprimitive-definition", &sp),
            Err(Error::NotTransitive) => {
                Verdict::new("semiprimitive-definition", Status::Fail).because("group is not transitive")
            }
            Err(e) => return Err(e),
        };
        entries.push(entry(&v.with("order", g.order().to_string()), &target));
        return Ok(VerdictReport::new(entries));
    }
    let Some(family) = a.construct else {
        return Err(Error::InvalidParameter("give --group FILE or --construct FAMILY".into()));
    };
    if family == FamilyName::Diagonal {
        let d = diagonal_counterexample()?;
        let sp = is_semiprimitive_via(d.hom())?;
        let v = sp_verdict("semiprimitive-definition", &sp).with("order", d.group().order().to_string());
        entries.push(entry(&v, "diagonal(A5^3:2)"));
        return Ok(VerdictReport::new(entries));
    }
    let recipe = build(family, a.q, &a.p_shape, a.a, a.n, a.m, &a.primes)?;
    let target = recipe.label.clone();
    let def = is_semiprimitive_definition(recipe.group())?;
    entries.push(entry(
        &sp_verdict("semiprimitive-definition", &def).with("order", recipe.group().order().to_string()),
        &target,
    ));
    let crit = is_semiprimitive_criterion(&recipe.spec)?;
    entries.push(entry(
        &sp_verdict("semiprimitive-criterion", &crit.verdict)
            .with("faithful_on_quotients", crit.faithful_on_quotients)
            .with("commutator_form", crit.commutator_form),
        &target,
    ));
    let agree = def.semiprimitive == crit.faithful_on_quotients && crit.faithful_on_quotients == crit.commutator_form;
    entries.push(entry(&Verdict::pass_if("definition-and-criterion-agree", agree), &target));
    Ok(VerdictReport::new(entries))
}

fn parse_edge(text: &str) -> Result<(Point, Point)> {
    let bad = || Error::Parse(format!("expected x,y, got {text:?}"));
    let (x, y) = text.split_once(',').ok_or_else(bad)?;
    Ok((x.trim().parse().map_err(|_| bad())?, y.trim().parse().map_err(|_| bad())?))
}

fn load_pair(a: &LocalArgs) -> Result<(String, ArcPair)> {
    if let Some(name) = &a.fixture {
        let f = fixture_by_name(name).ok_or_else(|| Error::InvalidParameter(format!("unknown fixture {name:?}")))?;
        return Ok((f.name.clone(), ArcPair::from_fixture(&f)?));
    }
    let (Some(graph), Some(group)) = (&a.graph, &a.group) else {
        return Err(Error::InvalidParameter("give --fixture NAME or --graph FILE --group FILE".into()));
    };
    let g = Graph::parse(&read_file(graph)?)?;
    let grp: PermGroup = read_group(&read_file(group)?)?;
    if grp.degree() != g.order() {
        return Err(Error::DegreeMismatch {
            left: g.order(),
            right: grp.degree(),
        });
    }
    Ok((graph.display().to_string(), check_arc_transitive(&g, &grp)?))
}

fn local(a: &LocalArgs) -> Result<VerdictReport> {
    let (name, pair) = load_pair(a)?;
    if a.theorem1 {
        let v = verify_theorem1(&pair)?;
        return Ok(VerdictReport::new(vec![entry(&v, &name)]));
    }
    let edges: Vec<(Point, Point)> = if a.all_edges_orbit {
        pair.neighbourhood(0).iter().map(|&y| (0, y)).collect()
    } else if let Some(e) = &a.edge {
        let e = parse_edge(e)?;
        pair.check_edge(e.0, e.1)?;
        vec![e]
    } else {
        vec![pair.default_edge()]
    };
    let mut entries = Vec::new();
    let mut vertices: Vec<Point> = edges.iter().map(|e| e.0).collect();
    vertices.dedup();
    for x in vertices {
        entries.push(entry(&local_hypothesis_at(&pair, x)?.verdict(), &format!("{name}:{x}")));
    }
    for (x, y) in edges {
        let target = format!("{name}:{x}-{y}");
        for v in [
            verify_section3(&pair, x, y)?,
            verify_theorem2(&pair, x, y)?,
            verify_corollary(&pair, x, y)?,
        ] {
            entries.push(entry(&v, &target));
        }
    }
    Ok(VerdictReport::new(entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(args: &[&str]) -> i32 {
        main_with_args(std::iter::once("semiprim").chain(args.iter().copied()))
    }

    #[test]
    fn exit_codes() {
        assert_eq!(code(&["check-sp", "--construct", "inversion", "--q", "5", "--p-shape", "c5"]), 0);
        let d4 = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/d4.json");
        assert_eq!(code(&["check-sp", "--group", d4]), 1);
        assert_eq!(code(&["check-sp", "--group", "/nonexistent/group.json"]), 2);
        assert_eq!(code(&["local", "--fixture", "heawood", "--edge", "0,2"]), 2);
        assert_eq!(code(&["local", "--fixture", "nowhere"]), 2);
        assert_eq!(code(&["no-such-command"]), 2);
    }

    #[test]
    fn local_reports() {
        let cli = Cli::try_parse_from(["semiprim", "local", "--fixture", "f16", "--theorem1"]).unwrap();
        let Output::Report(r) = run(&cli).unwrap() else {
            panic!("expected a report")
        };
        assert_eq!(r.entries[0].verdict.get("bound").unwrap(), "2880");
        let cli = Cli::try_parse_from(["semiprim", "local", "--fixture", "heawood", "--theorem1"]).unwrap();
        let Output::Report(r) = run(&cli).unwrap() else {
            panic!("expected a report")
        };
        assert_eq!(r.entries[0].verdict.status, Status::Skip);
    }

    #[test]
    fn edge_parsing() {
        assert_eq!(parse_edge("3, 7").unwrap(), (3, 7));
        assert!(parse_edge("3").is_err());
        assert!(parse_edge("a,b").is_err());
    }

    #[test]
    fn render_tallies() {
        let r = VerdictReport::new(vec![entry(&Verdict::pass_if("x", true), "t")]);
        assert!(render(&r).ends_with("1 pass, 0 fail, 0 skip, 0 vacuous\n"));
    }
}
