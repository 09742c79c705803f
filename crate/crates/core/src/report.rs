//! The end-to-end verification report: every recomputed quantity next to the
//! published value it is meant to reproduce.

use std::time::Duration;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::catalog::{build_cdt, cdt_parameters, reference_ooc, CdtName, LabelTable};
use crate::cycles::{enumerate_girth_cycles, fastening_profile, CycleSet, FasteningProfile};
use crate::graph::{
    distances, girth, is_bipartite, is_hamiltonian, is_planar, Digraph, Graph, Hamiltonicity,
};
use crate::io::parse_graph6;
use crate::orient::{
    build_constraints, classify_kappa, resolve_fixture, solve, verify_ooa, verify_oriented_cycles,
    OddWitness, Reconstruction, Relation, Solution,
};
use crate::perm::{
    arc_transitivity_with, automorphism_group, cayley_digraph, digraph_isomorphic, gl32_elements,
    index_two_subgroups, is_distance_transitive_with, is_transitive, BinaryMatrix3, PermGroup,
    Permutation,
};
use crate::separator::{
    alternate_census, build_separator, summarize, SeparatorDigraph, SeparatorSummary,
};
use crate::surface::{euler, face_complex, truncate, EulerReport, Solid};

pub const SCHEMA_VERSION: u32 = 1;

/// Separators larger than this count as heavy for group searches.
const HEAVY_SEPARATOR: usize = 500;
/// A budget below this skips heavy group searches.
const HEAVY_GROUP_BUDGET: Duration = Duration::from_secs(30);
const DEFAULT_HAMILTON_BUDGET: Duration = Duration::from_secs(60);
const HAMILTON_DEFAULT_MAX_ORDER: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    /// A mismatch listed among the known printing errors.
    Flagged,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub expected: Value,
    pub observed: Value,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObservedParameters {
    pub n: usize,
    pub d: u32,
    pub g: usize,
    pub k: usize,
    pub eta: usize,
    pub a: u64,
    pub bipartite: bool,
    pub planar: bool,
    pub hamiltonian: Option<Hamiltonicity>,
    pub distance_transitive: bool,
    pub kappa: Option<u8>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrientationSection {
    pub exists: bool,
    pub constraint_components: usize,
    pub digest: Option<String>,
    /// Odd cycle of constraints, one line per step.
    pub witness: Option<Vec<String>>,
    pub reconstructions: Vec<Reconstruction>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub r: usize,
    pub length: usize,
    pub simple: bool,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeparatorSection {
    pub summary: SeparatorSummary,
    pub census: Vec<CensusRow>,
    pub euler: Option<EulerReport>,
    pub aut_underlying: Option<u64>,
    pub aut_digraph: Option<u64>,
    pub truncated_solid: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub graph: String,
    pub input_error: Option<String>,
    pub parameters: Option<ObservedParameters>,
    pub fastening: Option<FasteningProfile>,
    pub orientation: Option<OrientationSection>,
    pub separator: Option<SeparatorSection>,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    fn new(graph: String) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            graph,
            input_error: None,
            parameters: None,
            fastening: None,
            orientation: None,
            separator: None,
            checks: Vec::new(),
        }
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn with_status(&self, status: Status) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(move |c| c.status == status)
    }

    /// 2 on input errors, 1 on any unflagged mismatch, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.input_error.is_some() {
            2
        } else if self.with_status(Status::Mismatch).next().is_some() {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    fn push(&mut self, id: impl Into<String>, expected: Value, observed: Value) {
        let id = id.into();
        let mut status = if expected == observed {
            Status::Match
        } else {
            Status::Mismatch
        };
        let mut note = None;
        if status == Status::Mismatch {
            if let Some(&(_, _, text)) = KNOWN_MISPRINTS
                .iter()
                .find(|(g, c, _)| *g == self.graph && *c == id)
            {
                status = Status::Flagged;
                note = Some(text.to_owned());
            }
        }
        self.checks.push(Check {
            id,
            expected,
            observed,
            status,
            note,
        });
    }

    fn skip(&mut self, id: impl Into<String>, expected: Value, why: &str) {
        self.checks.push(Check {
            id: id.into(),
            expected,
            observed: Value::Null,
            status: Status::Skipped,
            note: Some(why.to_owned()),
        });
    }
}

/// `(graph, check, note)` for the published values known to be misprints.
pub const KNOWN_MISPRINTS: [(&str, &str, &str); 3] = [
    (
        "desargues",
        "separator.transposition_edges",
        "printed 120; 180 underlying edges = 120 cycle edges + 60 transposition edges",
    ),
    (
        "k4",
        "separator.truncated_solid",
        "printed as truncated octahedron; 12 vertices force the truncated tetrahedron",
    ),
    (
        "tutte",
        "separator.bi_alternate_length_rule",
        "the general rule prints 9-cycles; the Tutte listing itself has 12-cycles",
    ),
];

#[derive(Debug, Clone, Copy, Default)]
pub struct ReportOptions {
    /// Hamiltonicity time limit. Without one, only graphs up to 30
    /// vertices are searched, for 60 seconds each. A budget under 30
    /// seconds also skips group searches on separators over 500 vertices.
    pub budget: Option<Duration>,
}

impl ReportOptions {
    fn hamilton_budget(&self, n: usize) -> Option<Duration> {
        match self.budget {
            Some(b) => Some(b),
            None if n <= HAMILTON_DEFAULT_MAX_ORDER => Some(DEFAULT_HAMILTON_BUDGET),
            None => None,
        }
    }

    fn heavy_groups(&self, order: usize) -> bool {
        order <= HEAVY_SEPARATOR || self.budget.is_none_or(|b| b >= HEAVY_GROUP_BUDGET)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subject {
    Catalog(CdtName),
    Graph6(String),
}

impl Subject {
    /// A catalog name, or otherwise graph6 text.
    pub fn parse(text: &str) -> Self {
        match text.parse::<CdtName>() {
            Ok(name) => Subject::Catalog(name),
            Err(_) => Subject::Graph6(text.trim().to_owned()),
        }
    }

    pub fn title(&self) -> String {
        match self {
            Subject::Catalog(name) => name.as_str().to_owned(),
            Subject::Graph6(text) => format!("graph6:{text}"),
        }
    }
}

/// A graph ready for the pipeline, with whatever published data exists.
pub struct Prepared {
    pub graph: Graph,
    pub labels: LabelTable,
    pub name: Option<CdtName>,
}

pub fn prepare(subject: &Subject) -> crate::Result<Prepared> {
    match subject {
        Subject::Catalog(name) => {
            let (graph, labels) = build_cdt(*name);
            Ok(Prepared {
                graph,
                labels,
                name: Some(*name),
            })
        }
        Subject::Graph6(text) => {
            let graph = parse_graph6(text)?;
            let labels = LabelTable::numeric(graph.order());
            Ok(Prepared {
                graph,
                labels,
                name: None,
            })
        }
    }
}

pub fn run_report(subject: &Subject, opts: &ReportOptions) -> VerificationReport {
    let mut report = VerificationReport::new(subject.title());
    let prepared = match prepare(subject) {
        Ok(p) => p,
        Err(e) => {
            report.input_error = Some(e.to_string());
            return report;
        }
    };
    if let Err(e) = pipeline(&mut report, &prepared, opts) {
        report.input_error = Some(e);
    }
    report
}

fn labelled(labels: &LabelTable, ids: &[u32]) -> String {
    labels.join(ids)
}

pub fn witness_lines(w: &OddWitness, cs: &CycleSet, labels: &LabelTable) -> Vec<String> {
    w.steps
        .iter()
        .map(|s| {
            let rel = match s.relation {
                Relation::Equal => "equal",
                Relation::Unequal => "opposite",
            };
            format!(
                "({}) shares {} with the next cycle: {rel} signs",
                labelled(labels, cs.get(s.cycle).vertices()),
                labelled(labels, &s.path)
            )
        })
        .collect()
}

fn pipeline(
    report: &mut VerificationReport,
    p: &Prepared,
    opts: &ReportOptions,
) -> Result<(), String> {
    let g = &p.graph;
    if g.order() == 0 || !g.is_regular(3) {
        return Err("input is not a cubic graph".into());
    }
    if !g.is_connected() {
        return Err("input is disconnected".into());
    }
    let table = p.name.map(cdt_parameters);
    let dist = distances(g).map_err(|e| e.to_string())?;
    let gi = girth(g).map_err(|e| e.to_string())?;
    let group = automorphism_group(g);
    let k = arc_transitivity_with(g, &group);
    if k < 2 {
        return Err(format!(
            "arc-transitivity {k} is below 2; the pipeline needs k >= 2"
        ));
    }
    let cs = enumerate_girth_cycles(g).map_err(|e| e.to_string())?;
    let pcg = build_constraints(g, &cs, k)
        .map_err(|e| format!("path-coverage precondition failed: {e}"))?;
    let planar = is_planar(g);
    let dt = is_distance_transitive_with(&group, &dist);
    let hamiltonian = opts
        .hamilton_budget(g.order())
        .map(|b| is_hamiltonian(g, b));
    let solution = solve(&pcg);
    let solved = matches!(solution, Solution::Assignment(_));
    let kappa = classify_kappa(solved, planar, gi, k).ok();
    let a = group.order() as u64;
    let params = ObservedParameters {
        n: g.order(),
        d: dist.diameter(),
        g: gi,
        k,
        eta: cs.len(),
        a,
        bipartite: is_bipartite(g),
        planar,
        hamiltonian,
        distance_transitive: dt,
        kappa,
    };

    // column checks
    if let Some(t) = &table {
        report.push("table.n", json!(t.n), json!(params.n));
        report.push("table.d", json!(t.d), json!(params.d));
        report.push("table.g", json!(t.g), json!(params.g));
        report.push("table.b", json!(t.bipartite), json!(params.bipartite));
        report.push("table.k", json!(t.k), json!(params.k));
        report.push("table.eta", json!(t.eta), json!(params.eta));
        report.push("table.a", json!(t.a), json!(params.a));
        report.push("table.kappa", json!(t.kappa), json!(params.kappa));
        match hamiltonian {
            Some(Hamiltonicity::Timeout) => {
                report.skip("table.h", json!(t.hamiltonian), "time budget exhausted")
            }
            Some(h) => report.push(
                "table.h",
                json!(t.hamiltonian),
                json!(h == Hamiltonicity::Hamiltonian),
            ),
            None => report.skip(
                "table.h",
                json!(t.hamiltonian),
                "order above the default limit",
            ),
        }
    }
    report.push("distance_transitive", json!(true), json!(dt));
    let formula = (1usize << (k - 2)) * 3 * g.order() / gi;
    let exact = ((1usize << (k - 2)) * 3 * g.order()).is_multiple_of(gi);
    report.push(
        "girth_cycles.formula",
        json!(formula),
        json!(if exact { cs.len() } else { usize::MAX }),
    );
    let fastening = fastening_profile(g, &cs, k);
    report.push(
        "girth_cycles.fastening",
        json!(true),
        json!(fastening.is_uniform()),
    );
    report.parameters = Some(params);
    report.fastening = Some(fastening);

    // orientation
    let mut section = OrientationSection {
        exists: solved,
        constraint_components: pcg.component_count(),
        digest: None,
        witness: None,
        reconstructions: Vec::new(),
    };
    if let Some(t) = &table {
        report.push("orientation.exists", json!(t.kappa > 0), json!(solved));
    }
    let assignment = match solution {
        Solution::Assignment(asg) => {
            report.push(
                "orientation.checked",
                json!(true),
                json!(verify_ooa(g, &cs, k, &asg)),
            );
            section.digest = Some(asg.digest());
            Some(asg)
        }
        Solution::Witness(w) => {
            report.push(
                "orientation.witness_valid",
                json!(true),
                json!(w.validate(&cs)),
            );
            section.witness = Some(witness_lines(&w, &cs, &p.labels));
            None
        }
    };
    if let Some(fixture) = p.name.and_then(reference_ooc) {
        match resolve_fixture(&pcg, &cs, &p.labels, &fixture) {
            Ok(res) => {
                let ok = verify_ooa(g, &cs, k, &res.assignment)
                    && verify_oriented_cycles(g, k, &res.assignment.oriented_cycles(&cs));
                report.push("orientation.published_collection", json!(true), json!(ok));
                section.reconstructions = res.reconstructed;
            }
            Err(e) => report.push(
                "orientation.published_collection",
                json!(true),
                json!(e.to_string()),
            ),
        }
    }
    report.orientation = Some(section);

    let Some(assignment) = assignment else {
        return Ok(());
    };
    let s = build_separator(g, &cs, k, &assignment).map_err(|e| e.to_string())?;
    separator_section(report, p, &s, a, opts);
    Ok(())
}

/// Published separator values. `None` where nothing is printed.
struct SeparatorClaims {
    transposition_edges: usize,
    underlying_edges: usize,
    /// `(r, length, count)`
    alternate: &'static [(usize, usize, Option<usize>)],
    faces: Option<usize>,
    chi: i64,
    genus: i64,
    truncated: Option<&'static str>,
}

fn separator_claims(name: CdtName) -> Option<SeparatorClaims> {
    let c = |t, e, alternate, faces, chi, genus, truncated| SeparatorClaims {
        transposition_edges: t,
        underlying_edges: e,
        alternate,
        faces,
        chi,
        genus,
        truncated,
    };
    Some(match name {
        CdtName::K4 => c(
            6,
            18,
            &[(1, 6, Some(4))],
            Some(8),
            2,
            0,
            Some("truncated octahedron"),
        ),
        CdtName::K33 => c(
            18,
            54,
            &[(1, 8, Some(9)), (2, 9, Some(6))],
            Some(18),
            0,
            1,
            None,
        ),
        CdtName::Q3 => c(
            12,
            36,
            &[(1, 6, Some(8))],
            Some(14),
            2,
            0,
            Some("truncated octahedron"),
        ),
        CdtName::Dodecahedral => c(
            30,
            90,
            &[(1, 6, Some(20))],
            Some(32),
            2,
            0,
            Some("truncated icosahedron"),
        ),
        CdtName::Desargues => c(
            120,
            180,
            &[(1, 8, Some(30)), (2, 9, Some(20))],
            Some(50),
            -10,
            6,
            None,
        ),
        CdtName::Coxeter => c(
            84,
            252,
            &[(1, 8, Some(42)), (3, 28, Some(24))],
            Some(66),
            -18,
            10,
            None,
        ),
        CdtName::Tutte => c(
            360,
            1080,
            &[
                (1, 8, Some(180)),
                (2, 12, Some(180)),
                (3, 32, Some(90)),
                (4, 15, Some(240)),
            ],
            None,
            -120,
            61,
            None,
        ),
        _ => return None,
    })
}

/// Length of the bi-alternate cycles by the general rule: 9, except 12
/// for the cube and 15 for the dodecahedron.
fn bi_alternate_rule(name: CdtName) -> usize {
    match name {
        CdtName::Q3 => 12,
        CdtName::Dodecahedral => 15,
        _ => 9,
    }
}

fn arcs_preserved(d: &Digraph, perm: &Permutation) -> bool {
    d.arcs()
        .all(|(x, y)| d.has_arc(perm.apply(x), perm.apply(y)))
}

fn separator_section(
    report: &mut VerificationReport,
    p: &Prepared,
    s: &SeparatorDigraph,
    a: u64,
    opts: &ReportOptions,
) {
    let g = &p.graph;
    let census = alternate_census(s);
    let summary = summarize(s, &census);
    let d = s.digraph();
    let u = s.underlying();
    let claims = p.name.and_then(separator_claims);

    let degrees_ok = (0..s.order() as u32)
        .all(|v| d.out_neighbors(v).len() == 2 && d.in_neighbors(v).len() == 2);
    report.push("separator.in_out_degree_2", json!(true), json!(degrees_ok));
    report.push(
        "separator.underlying_cubic_connected",
        json!(true),
        json!(u.is_regular(3) && u.is_connected()),
    );
    let k = report.parameters.as_ref().map_or(2, |q| q.k);
    report.push(
        "separator.vertices",
        json!(3 * g.order() * (1 << (k - 2))),
        json!(summary.vertices),
    );
    let eta = report.parameters.as_ref().map_or(0, |q| q.eta);
    let gi = report.parameters.as_ref().map_or(0, |q| q.g);
    report.push(
        "separator.oriented_cycles",
        json!([eta, gi]),
        json!([summary.oriented_cycles, summary.oriented_cycle_len]),
    );
    if let Some(c) = &claims {
        report.push(
            "separator.transposition_edges",
            json!(c.transposition_edges),
            json!(summary.transposition_edges),
        );
        report.push(
            "separator.underlying_edges",
            json!(c.underlying_edges),
            json!(summary.underlying_edges),
        );
        for &(r, len, count) in c.alternate {
            let level = &summary.alternate[r - 1];
            report.push(
                format!("separator.alternate_r{r}.length"),
                json!([len]),
                json!(level.simple_lengths.keys().collect::<Vec<_>>()),
            );
            if let Some(count) = count {
                report.push(
                    format!("separator.alternate_r{r}.count"),
                    json!(count),
                    json!(level.simple_cycles),
                );
            }
        }
    }
    if let Some(name) = p.name {
        report.push(
            "separator.bi_alternate_length_rule",
            json!([bi_alternate_rule(name)]),
            json!(summary.alternate[1]
                .simple_lengths
                .keys()
                .collect::<Vec<_>>()),
        );
    }

    let mut section = SeparatorSection {
        census: census
            .levels
            .iter()
            .flat_map(|l| {
                l.histogram()
                    .into_iter()
                    .map(move |((length, simple), count)| CensusRow {
                        r: l.r,
                        length,
                        simple,
                        count,
                    })
            })
            .collect(),
        summary,
        euler: None,
        aut_underlying: None,
        aut_digraph: None,
        truncated_solid: None,
    };

    match face_complex(s, &census) {
        Ok(fc) => {
            let e = euler(&fc);
            report.push("surface.orientable", json!(true), json!(e.orientable));
            if let Some(c) = &claims {
                if let Some(faces) = c.faces {
                    report.push("surface.faces", json!(faces), json!(e.f));
                }
                report.push("surface.euler_characteristic", json!(c.chi), json!(e.chi));
                report.push("surface.genus", json!(c.genus), json!(e.genus));
            }
            section.euler = Some(e);
        }
        Err(err) => report.push("surface.face_coverage", json!(true), json!(err.to_string())),
    }

    if is_planar(&u) {
        let found = [Solid::Tetrahedron, Solid::Octahedron, Solid::Icosahedron]
            .into_iter()
            .find(|solid| digraph_isomorphic(&u, &truncate(&solid.graph())).is_some())
            .map(Solid::truncated_name);
        if let Some(expected) = claims.as_ref().and_then(|c| c.truncated) {
            report.push("separator.truncated_solid", json!(expected), json!(found));
        }
        section.truncated_solid = found.map(str::to_owned);
    }

    if !opts.heavy_groups(s.order()) {
        report.skip("separator.aut_underlying", json!(a), "time budget");
        report.separator = Some(section);
        return;
    }
    let full = automorphism_group(&u);
    let oriented = automorphism_group(&d);
    section.aut_underlying = Some(full.order() as u64);
    section.aut_digraph = Some(oriented.order() as u64);
    report.push(
        "separator.aut_underlying",
        json!(a),
        json!(full.order() as u64),
    );
    report.push(
        "separator.aut_digraph_regular",
        json!(s.order()),
        json!(if is_transitive(&oriented, s.order()) {
            oriented.order() as usize
        } else {
            0
        }),
    );
    if let Some(name) = p.name {
        cayley_checks(report, name, p, s, &d, &full);
    }
    report.separator = Some(section);
}

fn cyc(degree: usize, one_based: &[&[u32]]) -> Permutation {
    let shifted: Vec<Vec<u32>> = one_based
        .iter()
        .map(|c| c.iter().map(|x| x - 1).collect())
        .collect();
    let refs: Vec<&[u32]> = shifted.iter().map(Vec::as_slice).collect();
    Permutation::from_cycles(degree, &refs)
}

fn permutation_cayley(gens: Vec<Permutation>) -> Digraph {
    let degree = gens[0].degree();
    let elements = PermGroup::new(degree, gens.clone()).elements();
    cayley_digraph(&elements, |s, x| x.then(s), &gens).expect("generators lie in the group")
}

fn spectrum(group: &PermGroup) -> Vec<u64> {
    group.order_spectrum().into_iter().collect()
}

fn cayley_checks(
    report: &mut VerificationReport,
    name: CdtName,
    p: &Prepared,
    s: &SeparatorDigraph,
    d: &Digraph,
    full: &PermGroup,
) {
    let isomorphic = |other: &Digraph| json!(digraph_isomorphic(d, other).is_some());
    match name {
        CdtName::K4 => {
            let cay = permutation_cayley(vec![cyc(4, &[&[1, 2, 3]]), cyc(4, &[&[1, 2], &[3, 4]])]);
            report.push("cayley.alternating_4", json!(true), isomorphic(&cay));
        }
        CdtName::Q3 => {
            let cay = permutation_cayley(vec![cyc(4, &[&[1, 2, 3, 4]]), cyc(4, &[&[1, 2]])]);
            report.push("cayley.symmetric_4", json!(true), isomorphic(&cay));
        }
        CdtName::Dodecahedral => {
            let cay = permutation_cayley(vec![
                cyc(5, &[&[1, 2, 3, 4, 5]]),
                cyc(5, &[&[2, 3], &[4, 5]]),
            ]);
            report.push("cayley.alternating_5", json!(true), isomorphic(&cay));
        }
        CdtName::Coxeter => {
            let all = gl32_elements();
            let m1 = BinaryMatrix3::parse_rows(["100", "001", "010"]).expect("valid rows");
            let m2 = BinaryMatrix3::parse_rows(["001", "101", "010"])
                .expect("valid rows")
                .transpose();
            let cay =
                cayley_digraph(&all, |s, x| s.mul(x), &[m1, m2]).expect("invertible generators");
            report.push(
                "cayley.fano_printed_generators",
                json!(true),
                isomorphic(&cay),
            );
        }
        CdtName::K33 => {
            // label permutations induced on the 2-arcs
            let label_perm = |cycles: &[&[&str]]| {
                let ids: Vec<Vec<u32>> = cycles
                    .iter()
                    .map(|c| c.iter().map(|l| p.labels.id(l).expect("label")).collect())
                    .collect();
                let refs: Vec<&[u32]> = ids.iter().map(Vec::as_slice).collect();
                Permutation::from_cycles(6, &refs)
            };
            let gens = [
                label_perm(&[&["0", "5", "4", "1"], &["2", "3"]]),
                label_perm(&[&["0", "2"], &["1", "5"]]),
            ];
            let index = |seq: &[u32]| {
                s.vertices()
                    .iter()
                    .position(|a| a.vertices() == seq)
                    .map(|i| i as u32)
            };
            let induced: Option<Vec<Permutation>> = gens
                .iter()
                .map(|gen| {
                    let images: Option<Vec<u32>> = s
                        .vertices()
                        .iter()
                        .map(|a| {
                            let img: Vec<u32> =
                                a.vertices().iter().map(|&v| gen.apply(v)).collect();
                            index(&img)
                        })
                        .collect();
                    images.and_then(Permutation::from_images)
                })
                .collect();
            let observed = match induced {
                Some(perms) => {
                    let group = PermGroup::new(s.order(), perms.clone());
                    json!({
                        "order": group.order() as u64,
                        "regular": is_transitive(&group, s.order()) && group.order() == s.order() as u128,
                        "preserves_arcs": perms.iter().all(|q| arcs_preserved(d, q)),
                    })
                }
                None => Value::Null,
            };
            report.push(
                "cayley.printed_regular_group",
                json!({"order": 36, "regular": true, "preserves_arcs": true}),
                observed,
            );
        }
        CdtName::Desargues | CdtName::Tutte => {
            let expected: &[u64] = if name == CdtName::Desargues {
                &[1, 2, 3, 4, 5, 6]
            } else {
                &[1, 2, 3, 4, 5, 8]
            };
            let subs = index_two_subgroups(full);
            let regular = subs.iter().find(|h| {
                h.order() == s.order() as u128
                    && is_transitive(h, s.order())
                    && h.generators().iter().all(|q| arcs_preserved(d, q))
            });
            report.push(
                "cayley.regular_subgroup",
                json!({"order": s.order(), "spectrum": expected}),
                match regular {
                    Some(h) => json!({"order": h.order() as u64, "spectrum": spectrum(h)}),
                    None => Value::Null,
                },
            );
            report.push("groups.index_two_subgroups", json!(3), json!(subs.len()));
        }
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_report() {
        let r = run_report(&Subject::Catalog(CdtName::K4), &ReportOptions::default());
        assert_eq!(r.exit_code(), 0, "{}", r.to_json());
        let flag = r.check("separator.truncated_solid").unwrap();
        assert_eq!(flag.status, Status::Flagged);
        assert_eq!(r.with_status(Status::Flagged).count(), 1);
        assert_eq!(VerificationReport::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn petersen_has_witness_and_no_separator() {
        let r = run_report(
            &Subject::Catalog(CdtName::Petersen),
            &ReportOptions::default(),
        );
        assert_eq!(r.exit_code(), 0);
        let o = r.orientation.as_ref().unwrap();
        assert!(!o.exists && o.witness.is_some());
        assert!(r.separator.is_none());
        assert_eq!(r.parameters.as_ref().unwrap().kappa, Some(0));
    }

    #[test]
    fn degenerate_inputs() {
        // 4-cycle
        let r = run_report(&Subject::Graph6("Cr".into()), &ReportOptions::default());
        assert_eq!(r.exit_code(), 2);
        let r = run_report(&Subject::Graph6("C?".into()), &ReportOptions::default());
        assert_eq!(r.exit_code(), 2);
        let r = run_report(&Subject::Graph6("!!".into()), &ReportOptions::default());
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn graph6_k4_runs_without_table() {
        let r = run_report(&Subject::parse("C~"), &ReportOptions::default());
        assert_eq!(r.exit_code(), 0, "{}", r.to_json());
        assert!(r.check("table.n").is_none());
        assert_eq!(r.separator.as_ref().unwrap().summary.vertices, 12);
    }
}
