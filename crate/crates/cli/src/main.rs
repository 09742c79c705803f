use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use cdt_core::catalog::{cdt_parameters, CdtName};
use cdt_core::cycles::{enumerate_girth_cycles, fastening_profile};
use cdt_core::graph::{distances, girth, is_bipartite, is_hamiltonian, is_planar, Hamiltonicity};
use cdt_core::io::separator_dot;
use cdt_core::orient::{build_constraints, solve, Solution};
use cdt_core::perm::{arc_transitivity_with, automorphism_group, is_distance_transitive_with};
use cdt_core::report::{
    prepare, run_report, witness_lines, Prepared, ReportOptions, Status, Subject,
    VerificationReport,
};
use cdt_core::separator::{alternate_walks, build_separator, separator_summary, SeparatorDigraph};

/// Stdout writes that end quietly when the reader goes away.
macro_rules! out {
    () => {{ let _ = writeln!(std::io::stdout().lock()); }};
    ($($arg:tt)*) => {{ let _ = writeln!(std::io::stdout().lock(), $($arg)*); }};
}

macro_rules! out_inline {
    ($($arg:tt)*) => {{ let _ = write!(std::io::stdout().lock(), $($arg)*); }};
}

#[derive(Parser)]
#[command(
    name = "cdtsep",
    version,
    about = "Girth-cycle orientations and separator digraphs of cubic distance-transitive graphs"
)]
struct Cli {
    /// Time budget in seconds for Hamiltonicity and large group searches
    #[arg(long, global = true)]
    budget: Option<f64>,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArg {
    /// Catalog name (e.g. tutte, k33), graph6 text, or @FILE holding graph6
    graph: String,
}

#[derive(Subcommand)]
enum Command {
    /// List the twelve catalog graphs with their reference parameters
    Catalog,
    /// Recompute the graph invariants
    Analyze(GraphArg),
    /// Solve for an opposite orientation of the girth cycles
    Orient(GraphArg),
    /// Build the separator digraph and its alternate-cycle census
    Separator {
        #[command(flatten)]
        graph: GraphArg,
        /// Largest alternation level to census
        #[arg(long, default_value_t = 4)]
        r: usize,
    },
    /// Run the full verification report
    Verify {
        graph: Option<String>,
        /// Verify every catalog graph
        #[arg(long, conflicts_with = "graph")]
        all: bool,
    },
    /// Write the separator as DOT or the report as JSON
    Export {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(
            long,
            conflicts_with = "json_out",
            required_unless_present = "json_out"
        )]
        dot: Option<PathBuf>,
        #[arg(long = "json-out", value_name = "PATH")]
        json_out: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

fn subject(arg: &str) -> Result<Subject, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => {
            let text =
                fs::read_to_string(path).map_err(|e| Failure::input(format!("{path}: {e}")))?;
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| Failure::input(format!("{path}: no graph")))?;
            Ok(Subject::Graph6(line.to_owned()))
        }
        None => Ok(Subject::parse(arg)),
    }
}

fn load(arg: &str) -> Result<Prepared, Failure> {
    prepare(&subject(arg)?).map_err(|e| Failure::input(e.to_string()))
}

fn print_json(value: &impl serde::Serialize) {
    out!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn catalog(json: bool) {
    if json {
        let rows: Vec<_> = CdtName::ALL
            .iter()
            .map(|&n| serde_json::json!({"name": n.as_str(), "parameters": cdt_parameters(n)}))
            .collect();
        print_json(&rows);
        return;
    }
    out!(
        "{:<14} {:>4} {:>2} {:>3} {:>2} {:>4} {:>5} b h κ",
        "graph",
        "n",
        "d",
        "g",
        "k",
        "η",
        "a"
    );
    for name in CdtName::ALL {
        let p = cdt_parameters(name);
        out!(
            "{:<14} {:>4} {:>2} {:>3} {:>2} {:>4} {:>5} {} {} {}",
            name.as_str(),
            p.n,
            p.d,
            p.g,
            p.k,
            p.eta,
            p.a,
            u8::from(p.bipartite),
            u8::from(p.hamiltonian),
            p.kappa
        );
    }
}

fn cubic(p: &Prepared) -> Result<(), Failure> {
    let g = &p.graph;
    if g.order() == 0 || !g.is_regular(3) || !g.is_connected() {
        return Err(Failure::input("input is not a connected cubic graph"));
    }
    Ok(())
}

fn analyze(p: &Prepared, budget: Option<Duration>, json: bool) -> Result<(), Failure> {
    cubic(p)?;
    let g = &p.graph;
    let err = |e: cdt_core::Error| Failure::input(e.to_string());
    let dist = distances(g).map_err(err)?;
    let gi = girth(g).map_err(err)?;
    let group = automorphism_group(g);
    let k = arc_transitivity_with(g, &group);
    let cs = enumerate_girth_cycles(g).map_err(err)?;
    let profile = fastening_profile(g, &cs, k.max(1));
    let budget = budget.or((g.order() <= 30).then_some(Duration::from_secs(60)));
    let hamiltonian = budget.map(|b| is_hamiltonian(g, b));
    let value = serde_json::json!({
        "n": g.order(),
        "d": dist.diameter(),
        "g": gi,
        "k": k,
        "eta": cs.len(),
        "a": group.order() as u64,
        "bipartite": is_bipartite(g),
        "planar": is_planar(g),
        "hamiltonian": hamiltonian,
        "distance_transitive": is_distance_transitive_with(&group, &dist),
        "fastening": profile,
    });
    if json {
        print_json(&value);
        return Ok(());
    }
    for key in [
        "n",
        "d",
        "g",
        "k",
        "eta",
        "a",
        "bipartite",
        "planar",
        "distance_transitive",
    ] {
        out!("{key:<20} {}", value[key]);
    }
    let h = match hamiltonian {
        Some(Hamiltonicity::Hamiltonian) => "yes",
        Some(Hamiltonicity::NonHamiltonian) => "no",
        Some(Hamiltonicity::Timeout) => "timeout",
        None => "skipped (pass --budget)",
    };
    out!("{:<20} {h}", "hamiltonian");
    for level in &profile.levels {
        out!(
            "{:<20} {}-paths in {:?} girth cycles (expected {})",
            format!("fastening i={}", level.level),
            level.path_len,
            level.counts.keys().collect::<Vec<_>>(),
            level.expected
        );
    }
    Ok(())
}

fn separator_of(p: &Prepared) -> Result<Option<SeparatorDigraph>, Failure> {
    cubic(p)?;
    let g = &p.graph;
    let err = |e: cdt_core::Error| Failure::input(e.to_string());
    let k = arc_transitivity_with(g, &automorphism_group(g));
    let cs = enumerate_girth_cycles(g).map_err(err)?;
    let pcg = build_constraints(g, &cs, k).map_err(err)?;
    match solve(&pcg) {
        Solution::Assignment(a) => Ok(Some(build_separator(g, &cs, k, &a).map_err(err)?)),
        Solution::Witness(_) => Ok(None),
    }
}

fn orient(p: &Prepared, json: bool) -> Result<(), Failure> {
    cubic(p)?;
    let g = &p.graph;
    let err = |e: cdt_core::Error| Failure::input(e.to_string());
    let k = arc_transitivity_with(g, &automorphism_group(g));
    let cs = enumerate_girth_cycles(g).map_err(err)?;
    let pcg = build_constraints(g, &cs, k).map_err(err)?;
    let value = match solve(&pcg) {
        Solution::Assignment(a) => serde_json::json!({
            "exists": true,
            "components": pcg.component_count(),
            "digest": a.digest(),
            "cycles": a.oriented_cycles(&cs).iter().map(|c| p.labels.join(c)).collect::<Vec<_>>(),
        }),
        Solution::Witness(w) => serde_json::json!({
            "exists": false,
            "components": pcg.component_count(),
            "witness": witness_lines(&w, &cs, &p.labels),
        }),
    };
    if json {
        print_json(&value);
    } else if value["exists"] == true {
        out!(
            "orientation found; {} constraint components; digest {}",
            value["components"],
            value["digest"].as_str().unwrap_or_default()
        );
        for c in value["cycles"].as_array().into_iter().flatten() {
            out!("  ({})", c.as_str().unwrap_or_default());
        }
    } else {
        out!("no orientation; odd constraint cycle:");
        for line in value["witness"].as_array().into_iter().flatten() {
            out!("  {}", line.as_str().unwrap_or_default());
        }
    }
    Ok(())
}

fn separator(p: &Prepared, max_r: usize, json: bool) -> Result<(), Failure> {
    let Some(s) = separator_of(p)? else {
        return Err(Failure {
            code: 1,
            message: "the girth cycles admit no opposite orientation".into(),
        });
    };
    let summary = separator_summary(&s);
    let mut levels = Vec::new();
    for r in 1..=max_r {
        let walks = alternate_walks(&s, r);
        let mut hist = std::collections::BTreeMap::new();
        for w in &walks {
            *hist.entry((w.len(), w.simple)).or_insert(0usize) += 1;
        }
        levels.push((r, hist));
    }
    if json {
        let census: Vec<_> = levels
            .iter()
            .flat_map(|(r, h)| {
                h.iter().map(move |(&(length, simple), &count)| {
                    serde_json::json!({"r": r, "length": length, "simple": simple, "count": count})
                })
            })
            .collect();
        print_json(&serde_json::json!({"summary": summary, "census": census}));
        return Ok(());
    }
    out!("vertices             {}", summary.vertices);
    out!(
        "oriented cycles      {} of length {}",
        summary.oriented_cycles,
        summary.oriented_cycle_len
    );
    out!("transposition edges  {}", summary.transposition_edges);
    out!("underlying edges     {}", summary.underlying_edges);
    for (r, h) in levels {
        for ((len, simple), count) in h {
            let kind = if simple { "cycles" } else { "closed walks" };
            out!("r={r:<2} {count:>5} {kind} of length {len}");
        }
    }
    Ok(())
}

fn print_report(r: &VerificationReport) {
    let code = r.exit_code();
    out!(
        "{} {}",
        r.graph,
        match code {
            0 => "verified",
            1 => "MISMATCH",
            _ => "INPUT ERROR",
        }
    );
    if let Some(e) = &r.input_error {
        out!("  error: {e}");
    }
    for c in &r.checks {
        let tag = match c.status {
            Status::Match => "ok  ",
            Status::Mismatch => "FAIL",
            Status::Flagged => "flag",
            Status::Skipped => "skip",
        };
        out_inline!(
            "  {tag} {:<40} expected {} observed {}",
            c.id,
            c.expected,
            c.observed
        );
        match &c.note {
            Some(n) => out!("  ({n})"),
            None => out!(),
        }
    }
}

fn verify(
    graph: Option<String>,
    all: bool,
    opts: &ReportOptions,
    json: bool,
) -> Result<u8, Failure> {
    let subjects: Vec<Subject> = if all {
        CdtName::ALL.iter().map(|&n| Subject::Catalog(n)).collect()
    } else {
        let g = graph.ok_or_else(|| Failure::input("give a graph or --all"))?;
        vec![subject(&g)?]
    };
    let reports: Vec<VerificationReport> =
        subjects.par_iter().map(|s| run_report(s, opts)).collect();
    if json {
        if all {
            print_json(&reports);
        } else {
            out!("{}", reports[0].to_json());
        }
    } else {
        reports.iter().for_each(print_report);
    }
    Ok(reports
        .iter()
        .map(|r| r.exit_code() as u8)
        .max()
        .unwrap_or(0))
}

fn export(
    arg: &str,
    dot: Option<PathBuf>,
    json_out: Option<PathBuf>,
    opts: &ReportOptions,
) -> Result<u8, Failure> {
    let write = |path: &PathBuf, text: &str| {
        fs::write(path, text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
    };
    if let Some(path) = dot {
        let p = load(arg)?;
        let Some(s) = separator_of(&p)? else {
            return Err(Failure {
                code: 1,
                message: "the girth cycles admit no opposite orientation".into(),
            });
        };
        write(&path, &separator_dot(&s, &p.labels, &format!("S({arg})")))?;
        return Ok(0);
    }
    let path = json_out.expect("clap requires one output");
    let report = run_report(&subject(arg)?, opts);
    write(&path, &report.to_json())?;
    Ok(report.exit_code() as u8)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let budget = match cli.budget {
        Some(b) if !(b.is_finite() && b >= 0.0) => {
            return Err(Failure::input(
                "--budget must be a non-negative number of seconds",
            ))
        }
        b => b.map(Duration::from_secs_f64),
    };
    let opts = ReportOptions { budget };
    match cli.command {
        Command::Catalog => catalog(cli.json),
        Command::Analyze(g) => analyze(&load(&g.graph)?, budget, cli.json)?,
        Command::Orient(g) => orient(&load(&g.graph)?, cli.json)?,
        Command::Separator { graph, r } => separator(&load(&graph.graph)?, r.max(1), cli.json)?,
        Command::Verify { graph, all } => return verify(graph, all, &opts, cli.json),
        Command::Export {
            graph,
            dot,
            json_out,
        } => return export(&graph.graph, dot, json_out, &opts),
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("cdtsep: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
