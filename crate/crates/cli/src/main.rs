//! munnlab: decide the representation type (finite, tame, or wild) of
//! finite dimensional Munn algebras over finite fields and of finite Rees
//! matrix semigroups, by two independent routes — a combinatorial case
//! analysis on invariant triples and a valued-graph quadratic-form
//! classification — with mandatory agreement checking.

mod problem;
mod report;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use munnlab_core::{
    classify_by_graph, classify_munn, classify_rees, classify_union, enumerate_indecomposables,
    smallest_semisimple_char, ComponentNumbers, EnumerationCaps, Error, FiniteField, RepType,
    RepTypeVerdict, ReesSemigroup, ReesUnion, Result, TripleSet, ValuedGraph, WedderburnData,
};

use problem::{load, resolve, Problem, ProblemKind};
use report::{
    graph_info, triples_as_rows, CapsInfo, CaseInfo, CensusInfo, ComponentInfo, FieldInfo,
    GroupInfo, PartInfo, Report, VerdictInfo,
};

#[derive(Parser)]
#[command(
    name = "munnlab",
    version,
    about = "Representation type of Munn algebras and Rees matrix semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose the group algebra into its simple components
    Decompose(RunArgs),
    /// Run the full pipeline and report both classification verdicts
    Classify(RunArgs),
    /// Build the valued graph; print a summary, a report, or DOT text
    Graph(GraphArgs),
    /// Enumerate indecomposable modules and compare with the root count
    Census(CensusArgs),
    /// Run the built-in sanity examples
    Selfcheck(SelfcheckArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Problem description (.toml, or .json for machine use)
    file: PathBuf,
    /// Seed for every randomized internal step
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Force this characteristic (overrides the file's field section)
    #[arg(long = "char")]
    characteristic: Option<u64>,
    /// Pick the smallest characteristic splitting every component
    #[arg(long)]
    split: bool,
    /// Emit the machine-readable report instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GraphArgs {
    #[command(flatten)]
    run: RunArgs,
    /// Print DOT text for rendering
    #[arg(long)]
    dot: bool,
}

#[derive(Args)]
struct CensusArgs {
    #[command(flatten)]
    run: RunArgs,
    /// Dimension caps as "V0,Vk"
    #[arg(long, default_value = "3,2")]
    caps: String,
    /// Total enumeration work budget
    #[arg(long, default_value_t = 10_000_000)]
    budget: u64,
    /// Enumerate even when the graph is not a union of Dynkin components
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct SelfcheckArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let outcome = match cli.command {
        Command::Decompose(args) => cmd_decompose(&args, &mut out),
        Command::Classify(args) => cmd_classify(&args, &mut out),
        Command::Graph(args) => cmd_graph(&args, &mut out),
        Command::Census(args) => cmd_census(&args, &mut out),
        Command::Selfcheck(args) => cmd_selfcheck(&args, &mut out),
    };
    let code = match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    };
    // Single write at the end; a pipe closed downstream (`munnlab … | head`)
    // must not turn a finished run into a panic.
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    code
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::ModularCase { .. } => 3,
        Error::BudgetExceeded(_) => 5,
        _ => 2,
    }
}

const DISAGREEMENT: u8 = 4;

/// Everything the pipeline derives from one problem file.
struct Pipeline {
    problem: Problem,
    characteristic: u64,
    field: FiniteField,
    group: Option<GroupInfo>,
    parts: Vec<PartInfo>,
    components: Option<Vec<ComponentNumbers>>,
    triples: TripleSet,
    case_verdict: RepTypeVerdict,
    graph_verdict: RepTypeVerdict,
    graph: ValuedGraph,
    agreement: bool,
}

fn run_pipeline(args: &RunArgs) -> Result<Pipeline> {
    let spec = load(&args.file)?;
    let problem = resolve(&spec, args.characteristic, args.split)?;
    let characteristic = problem.characteristic();
    let field = FiniteField::prime(characteristic)?;
    let mut group = None;
    let mut parts = Vec::new();
    let mut components = None;
    let (triples, case_verdict, cross_kinds): (TripleSet, RepTypeVerdict, Vec<RepType>) =
        match &problem.kind {
            ProblemKind::Single {
                group: g,
                sandwich: Some(grid),
            } => {
                let s = ReesSemigroup::new(g, grid)?;
                let data = WedderburnData::decompose(g, &field, args.seed)?;
                let numbers = s.component_numbers(&data)?;
                let t = s.triples_with(&data)?;
                group = Some(GroupInfo {
                    name: g.name().to_string(),
                    order: g.order(),
                });
                components = Some(numbers);
                let case = classify_rees(&t, g.order());
                // The product-algebra case analysis must concur.
                let cross = vec![classify_munn(&t).kind];
                (t, case, cross)
            }
            ProblemKind::Single { sandwich: None, .. } => {
                return Err(Error::InvalidInput(
                    "this command needs a sandwich grid or raw_triples".into(),
                ));
            }
            ProblemKind::Union { parts: raw_parts } => {
                let semigroups = raw_parts
                    .iter()
                    .map(|(g, grid)| ReesSemigroup::new(g, grid))
                    .collect::<Result<Vec<_>>>()?;
                let union = ReesUnion::new(semigroups)?;
                let data = union.union_data(&field, args.seed)?;
                for (part, (g, _)) in data.parts.iter().zip(raw_parts) {
                    parts.push(PartInfo {
                        group: GroupInfo {
                            name: g.name().to_string(),
                            order: g.order(),
                        },
                        sandwich_rows: part.sandwich_rows,
                        sandwich_cols: part.sandwich_cols,
                        triples: triples_as_rows(part.triples.iter().copied()),
                    });
                }
                let case = classify_union(&data);
                (data.all_triples(), case, Vec::new())
            }
            ProblemKind::Raw { triples } => {
                (triples.clone(), classify_munn(triples), Vec::new())
            }
        };
    let graph = ValuedGraph::from_triples(&triples)?;
    let graph_verdict = classify_by_graph(&triples)?;
    let agreement = case_verdict.kind == graph_verdict.kind
        && cross_kinds.iter().all(|&k| k == case_verdict.kind);
    Ok(Pipeline {
        problem,
        characteristic,
        field,
        group,
        parts,
        components,
        triples,
        case_verdict,
        graph_verdict,
        graph,
        agreement,
    })
}

impl Pipeline {
    fn field_info(&self) -> FieldInfo {
        FieldInfo {
            characteristic: self.characteristic,
            mode: self.problem.mode.label(),
        }
    }

    fn base_report(&self, command: &'static str, seed: u64) -> Result<Report> {
        let mut rep = Report::new(command, seed, self.field_info());
        rep.group = self.group.clone();
        rep.parts = self.parts.clone();
        rep.components = self
            .components
            .as_ref()
            .map(|ns| ns.iter().map(ComponentInfo::from_numbers).collect());
        rep.triples = Some(triples_as_rows(self.triples.iter().copied()));
        let classes = self.graph.classify_components()?;
        rep.graph = Some(graph_info(&self.graph, &classes.components));
        rep.verdicts = Some(VerdictInfo {
            case: CaseInfo::from_verdict(&self.case_verdict),
            graph: CaseInfo::from_verdict(&self.graph_verdict),
        });
        rep.agreement = Some(self.agreement);
        Ok(rep)
    }
}

fn cmd_classify(args: &RunArgs, out: &mut String) -> Result<ExitCode> {
    let pipe = run_pipeline(args)?;
    let rep = pipe.base_report("classify", args.seed)?;
    if args.json {
        out.push_str(&rep.to_json());
    } else {
        render_text_report(out, &rep);
    }
    if !pipe.agreement {
        eprintln!("error: the case analysis and the graph classifier disagree");
        return Ok(ExitCode::from(DISAGREEMENT));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_decompose(args: &RunArgs, out: &mut String) -> Result<ExitCode> {
    let spec = load(&args.file)?;
    let problem = resolve(&spec, args.characteristic, args.split)?;
    let ProblemKind::Single { group, sandwich } = &problem.kind else {
        return Err(Error::InvalidInput(
            "decompose expects a single-group problem".into(),
        ));
    };
    let characteristic = problem.characteristic();
    let field = FiniteField::prime(characteristic)?;
    let data = WedderburnData::decompose(group, &field, args.seed)?;
    let mut rep = Report::new(
        "decompose",
        args.seed,
        FieldInfo {
            characteristic,
            mode: problem.mode.label(),
        },
    );
    rep.group = Some(GroupInfo {
        name: group.name().to_string(),
        order: group.order(),
    });
    rep.components = Some(match sandwich {
        Some(grid) => {
            let s = ReesSemigroup::new(group, grid)?;
            s.component_numbers(&data)?
                .iter()
                .map(ComponentInfo::from_numbers)
                .collect()
        }
        None => data
            .components()
            .iter()
            .map(|c| ComponentInfo::bare(c.d, c.c, c.u))
            .collect(),
    });
    if args.json {
        out.push_str(&rep.to_json());
    } else {
        let _ = writeln!(
            out,
            "group {} of order {} over F_{}:",
            group.name(),
            group.order(),
            characteristic
        );
        for c in rep.components.as_deref().unwrap_or_default() {
            let mut line = format!("  component: d = {}, c = {}, u = {}", c.d, c.c, c.u);
            if let (Some(r), Some(m), Some(n)) = (c.r, c.m, c.n) {
                line.push_str(&format!(", r = {r}, m = {m}, n = {n}"));
            }
            let _ = writeln!(out, "{line}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_graph(args: &GraphArgs, out: &mut String) -> Result<ExitCode> {
    let pipe = run_pipeline(&args.run)?;
    if args.dot {
        out.push_str(&pipe.graph.to_dot());
        return Ok(ExitCode::SUCCESS);
    }
    let rep = pipe.base_report("graph", args.run.seed)?;
    if args.run.json {
        out.push_str(&rep.to_json());
    } else {
        render_text_report(out, &rep);
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_caps(text: &str, budget: u64) -> Result<EnumerationCaps> {
    let parts: Vec<&str> = text.split(',').collect();
    let parsed: Option<(usize, usize)> = match parts.as_slice() {
        [a, b] => a.trim().parse().ok().zip(b.trim().parse().ok()),
        _ => None,
    };
    let (v0_max, wk_max) = parsed.ok_or_else(|| {
        Error::InvalidInput(format!("bad --caps '{text}' (expected \"V0,Vk\")"))
    })?;
    Ok(EnumerationCaps {
        v0_max,
        wk_max,
        budget,
    })
}

fn cmd_census(args: &CensusArgs, out: &mut String) -> Result<ExitCode> {
    let caps = parse_caps(&args.caps, args.budget)?;
    let pipe = run_pipeline(&args.run)?;
    if pipe.characteristic > 3 {
        return Err(Error::InvalidInput(format!(
            "the census enumerates over F_2 or F_3; characteristic {} resolved (pass --char 2 or 3)",
            pipe.characteristic
        )));
    }
    let classes = pipe.graph.classify_components()?;
    if !classes.all_dynkin() && !args.force {
        return Err(Error::InvalidInput(
            "the graph has non-Dynkin components, so the census is infinite; pass --force to enumerate within the caps anyway".into(),
        ));
    }
    let census = enumerate_indecomposables(&pipe.field, &pipe.triples, &caps)?;
    let expected = if classes.all_dynkin() {
        let roots = pipe.graph.positive_real_roots(4096);
        // Two of the positive roots carry the trivial one-point reps; the
        // fully trivial module replaces them in the module count.
        (!roots.truncated).then(|| roots.roots.len() - 2 + 1)
    } else {
        None
    };
    let matches = expected.map(|e| e == census.count());
    let mut rep = pipe.base_report("census", args.run.seed)?;
    rep.census = Some(CensusInfo {
        caps: CapsInfo {
            v0_max: caps.v0_max,
            wk_max: caps.wk_max,
            budget: caps.budget,
        },
        count: census.count(),
        expected,
        matches,
    });
    if args.run.json {
        out.push_str(&rep.to_json());
    } else {
        render_text_report(out, &rep);
    }
    if matches == Some(false) {
        eprintln!("error: census count disagrees with the root-count expectation");
        return Ok(ExitCode::from(DISAGREEMENT));
    }
    Ok(ExitCode::SUCCESS)
}

fn render_text_report(out: &mut String, rep: &Report) {
    let _ = writeln!(
        out,
        "field: F_{} ({})",
        rep.field.characteristic, rep.field.mode
    );
    if let Some(g) = &rep.group {
        let _ = writeln!(out, "group: {} (order {})", g.name, g.order);
    }
    for p in &rep.parts {
        let _ = writeln!(
            out,
            "part: {} (order {}), sandwich {}x{}, triples {:?}",
            p.group.name, p.group.order, p.sandwich_rows, p.sandwich_cols, p.triples
        );
    }
    if let Some(cs) = &rep.components {
        for c in cs {
            let mut line = format!("component: d = {}, c = {}, u = {}", c.d, c.c, c.u);
            if let (Some(r), Some(m), Some(n)) = (c.r, c.m, c.n) {
                line.push_str(&format!(", r = {r}, m = {m}, n = {n}"));
            }
            let _ = writeln!(out, "{line}");
        }
    }
    if let Some(triples) = &rep.triples {
        let body: Vec<String> = triples
            .iter()
            .map(|t| format!("({},{},{})", t[0], t[1], t[2]))
            .collect();
        let _ = writeln!(out, "triples: {{{}}}", body.join(", "));
    }
    if let Some(g) = &rep.graph {
        for comp in &g.components {
            let root = comp
                .null_root
                .as_ref()
                .map(|r| format!(", null root {r:?}"))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "graph component [{}]: {} ({}{root})",
                comp.vertices.join(", "),
                comp.name,
                comp.class
            );
        }
    }
    if let Some(v) = &rep.verdicts {
        let _ = writeln!(
            out,
            "verdict: {} [case {}] / {} [graph]",
            v.case.kind, v.case.evidence, v.graph.kind
        );
    }
    if let Some(a) = rep.agreement {
        let _ = writeln!(out, "agreement: {}", if a { "yes" } else { "NO" });
    }
    if let Some(c) = &rep.census {
        let expected = c
            .expected
            .map(|e| e.to_string())
            .unwrap_or_else(|| "-".into());
        let _ = writeln!(
            out,
            "census: {} indecomposables within caps {}/{}, expected {}, match: {}",
            c.count,
            c.caps.v0_max,
            c.caps.wk_max,
            expected,
            c.matches.map(|m| m.to_string()).unwrap_or_else(|| "-".into())
        );
    }
}

/// Fixed sanity examples with known outcomes.
fn cmd_selfcheck(args: &SelfcheckArgs, out: &mut String) -> Result<ExitCode> {
    let mut failures = 0usize;
    let mut lines: Vec<String> = Vec::new();
    let mut check = |name: &str, ok: bool| {
        lines.push(format!("{} — {name}", if ok { "ok " } else { "FAIL" }));
        if !ok {
            failures += 1;
        }
    };

    let c3 = munnlab_core::FiniteGroup::builtin("cyclic(3)")?;
    let f5 = FiniteField::prime(5)?;
    let data = WedderburnData::decompose(&c3, &f5, args.seed)?;
    let dims: Vec<(usize, usize)> = data.components().iter().map(|c| (c.d, c.c)).collect();
    check("cyclic(3) over F_5 splits as F_5 x F_25", dims == [(1, 1), (2, 1)]);

    let c1 = munnlab_core::FiniteGroup::builtin("cyclic(1)")?;
    let p = smallest_semisimple_char(&c1);
    let s = ReesSemigroup::new(&c1, &[vec![Some(0), None], vec![None, None]])?;
    let t = s.triples(&FiniteField::prime(p)?, args.seed)?;
    let v = classify_rees(&t, 1);
    check(
        "trivial group, 2x2 rank-one sandwich is finite [3.3(1a)]",
        v.kind == RepType::Finite && v.evidence == "3.3(1a)",
    );
    check(
        "graph route agrees on the finite example",
        classify_by_graph(&t)?.kind == RepType::Finite,
    );

    let c2 = munnlab_core::FiniteGroup::builtin("cyclic(2)")?;
    let s2 = ReesSemigroup::new(
        &c2,
        &[vec![Some(0), Some(0)], vec![Some(0), Some(0)]],
    )?;
    let t2 = s2.triples(&f5, args.seed)?;
    let v2 = classify_rees(&t2, 2);
    check(
        "cyclic(2) over F_5, all-identity 2x2 sandwich is tame [3.3(2a)]",
        v2.kind == RepType::Tame && v2.evidence == "3.3(2a)",
    );
    check(
        "graph route agrees on the tame example",
        classify_by_graph(&t2)?.kind == RepType::Tame,
    );

    let wild = TripleSet::from_raw(&[(1, 2, 2)])?;
    check(
        "triple set {(1,2,2)} is wild by both routes",
        classify_munn(&wild).kind == RepType::Wild
            && classify_by_graph(&wild)?.kind == RepType::Wild,
    );

    let eu = TripleSet::from_raw(&[(2, 1, 1)])?;
    let classes = ValuedGraph::from_triples(&eu)?.classify_components()?;
    check(
        "triple set {(2,1,1)} has one Euclidean component with null root (1,1,1)",
        classes.components.len() == 1
            && classes.components[0].null_root.as_deref() == Some(&[1, 1, 1][..]),
    );

    let f2 = FiniteField::prime(2)?;
    let a3 = TripleSet::from_raw(&[(1, 1, 1)])?;
    let census = enumerate_indecomposables(
        &f2,
        &a3,
        &EnumerationCaps {
            v0_max: 3,
            wk_max: 2,
            budget: 10_000_000,
        },
    )?;
    let roots = ValuedGraph::from_triples(&a3)?.positive_real_roots(64);
    check(
        "census over F_2 for {(1,1,1)} finds 5 classes, matching the 6 roots",
        census.count() == 5 && roots.roots.len() == 6,
    );

    for line in &lines {
        let _ = writeln!(out, "{line}");
    }
    if failures > 0 {
        eprintln!("selfcheck: {failures} check(s) failed");
        return Ok(ExitCode::from(DISAGREEMENT));
    }
    let _ = writeln!(out, "selfcheck: all checks passed");
    Ok(ExitCode::SUCCESS)
}
