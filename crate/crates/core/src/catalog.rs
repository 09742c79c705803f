//! The twelve cubic distance-transitive graphs: constructions, reference
//! parameters and published opposite-orientation cycle collections.
//!
//! Every construction follows the edge rules of the source listing, and every
//! vertex carries its printed label (`u3`, `2_4`, `Ag`, ...) in a
//! [`LabelTable`]. Indexed families map `x_i` to `6x + i` (Tutte, Foster) or
//! `4x + i` (Desargues).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CdtName {
    K4,
    K33,
    Q3,
    Petersen,
    Heawood,
    Pappus,
    Dodecahedral,
    Desargues,
    Coxeter,
    Tutte,
    Foster,
    BiggsSmith,
}

impl CdtName {
    pub const ALL: [CdtName; 12] = [
        CdtName::K4,
        CdtName::K33,
        CdtName::Q3,
        CdtName::Petersen,
        CdtName::Heawood,
        CdtName::Pappus,
        CdtName::Dodecahedral,
        CdtName::Desargues,
        CdtName::Coxeter,
        CdtName::Tutte,
        CdtName::Foster,
        CdtName::BiggsSmith,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CdtName::K4 => "k4",
            CdtName::K33 => "k33",
            CdtName::Q3 => "q3",
            CdtName::Petersen => "petersen",
            CdtName::Heawood => "heawood",
            CdtName::Pappus => "pappus",
            CdtName::Dodecahedral => "dodecahedral",
            CdtName::Desargues => "desargues",
            CdtName::Coxeter => "coxeter",
            CdtName::Tutte => "tutte",
            CdtName::Foster => "foster",
            CdtName::BiggsSmith => "biggs-smith",
        }
    }

    pub fn display_name(self) -> &'static str {
        match self {
            CdtName::K4 => "Tetrahedral graph K4",
            CdtName::K33 => "Thomsen graph K3,3",
            CdtName::Q3 => "3-cube graph Q3",
            CdtName::Petersen => "Petersen graph",
            CdtName::Heawood => "Heawood graph",
            CdtName::Pappus => "Pappus graph",
            CdtName::Dodecahedral => "Dodecahedral graph",
            CdtName::Desargues => "Desargues graph",
            CdtName::Coxeter => "Coxeter graph",
            CdtName::Tutte => "Tutte 8-cage",
            CdtName::Foster => "Foster graph",
            CdtName::BiggsSmith => "Biggs-Smith graph",
        }
    }
}

impl fmt::Display for CdtName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CdtName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        let name = match key.as_str() {
            "k4" | "tetrahedral" | "tetrahedron" => CdtName::K4,
            "k33" | "thomsen" => CdtName::K33,
            "q3" | "cube" => CdtName::Q3,
            "petersen" | "pet" => CdtName::Petersen,
            "heawood" | "hea" => CdtName::Heawood,
            "pappus" | "pap" => CdtName::Pappus,
            "dodecahedral" | "dodecahedron" => CdtName::Dodecahedral,
            "desargues" | "des" => CdtName::Desargues,
            "coxeter" | "cox" => CdtName::Coxeter,
            "tutte" | "tutte8cage" | "tut" => CdtName::Tutte,
            "foster" | "fos" => CdtName::Foster,
            "biggssmith" | "bs" => CdtName::BiggsSmith,
            _ => return Err(Error::Unsupported(format!("unknown graph name {s:?}"))),
        };
        Ok(name)
    }
}

/// One row of the reference parameter table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CdtParameters {
    /// order
    pub n: usize,
    /// diameter
    pub d: u32,
    /// girth
    pub g: usize,
    /// arc-transitivity
    pub k: usize,
    /// number of girth cycles
    pub eta: usize,
    /// number of automorphisms
    pub a: u64,
    pub bipartite: bool,
    pub hamiltonian: bool,
    pub kappa: u8,
}

pub fn cdt_parameters(name: CdtName) -> CdtParameters {
    let row = |n, d, g, k, eta, a, b: u8, h: u8, kappa| CdtParameters {
        n,
        d,
        g,
        k,
        eta,
        a,
        bipartite: b == 1,
        hamiltonian: h == 1,
        kappa,
    };
    match name {
        CdtName::K4 => row(4, 1, 3, 2, 4, 24, 0, 1, 1),
        CdtName::K33 => row(6, 2, 4, 3, 9, 72, 1, 1, 2),
        CdtName::Q3 => row(8, 3, 4, 2, 6, 48, 1, 1, 1),
        CdtName::Petersen => row(10, 2, 5, 3, 12, 120, 0, 0, 0),
        CdtName::Heawood => row(14, 3, 6, 4, 28, 336, 1, 1, 0),
        CdtName::Pappus => row(18, 4, 6, 3, 18, 216, 1, 1, 0),
        CdtName::Dodecahedral => row(20, 5, 5, 2, 12, 120, 0, 1, 1),
        CdtName::Desargues => row(20, 5, 6, 3, 20, 240, 1, 1, 3),
        CdtName::Coxeter => row(28, 4, 7, 3, 24, 336, 0, 0, 3),
        CdtName::Tutte => row(30, 4, 8, 5, 90, 1440, 1, 1, 2),
        CdtName::Foster => row(90, 8, 10, 5, 216, 4320, 1, 1, 0),
        CdtName::BiggsSmith => row(102, 7, 9, 4, 136, 2448, 0, 1, 0),
    }
}

/// Bijection between printed vertex labels and dense ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelTable {
    labels: Vec<String>,
    index: HashMap<String, u32>,
}

impl LabelTable {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i as u32).is_some() {
                return Err(Error::Fixture(format!("label {l:?} used twice")));
            }
        }
        Ok(Self { labels, index })
    }

    /// Labels are the decimal ids themselves.
    pub fn numeric(order: usize) -> Self {
        Self::new((0..order).map(|i| i.to_string()).collect()).expect("distinct")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, id: u32) -> &str {
        &self.labels[id as usize]
    }

    pub fn id(&self, label: &str) -> Option<u32> {
        self.index.get(label).copied()
    }

    /// Concatenates labels when all are one character (`"123"`), otherwise
    /// joins them with commas.
    pub fn join(&self, ids: &[u32]) -> String {
        let parts: Vec<&str> = ids.iter().map(|&v| self.label(v)).collect();
        if parts.iter().all(|p| p.chars().count() == 1) {
            parts.concat()
        } else {
            parts.join(",")
        }
    }

    fn parse_cycle(&self, text: &str) -> Result<Vec<u32>> {
        let tokens: Vec<String> = if text.contains(' ') {
            text.split_whitespace().map(str::to_owned).collect()
        } else {
            text.chars().map(String::from).collect()
        };
        tokens
            .iter()
            .map(|t| {
                self.id(t)
                    .ok_or_else(|| Error::Fixture(format!("unknown label {t:?} in {text:?}")))
            })
            .collect()
    }
}

const DIGITS: &[u8] = b"0123456789abcdefghijklmnopqrstuvwxyz";

fn digit(i: usize) -> char {
    DIGITS[i] as char
}

pub fn build_cdt(name: CdtName) -> (Graph, LabelTable) {
    let (labels, edges) = match name {
        CdtName::K4 => {
            let edges = (0..4)
                .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
                .collect();
            (numeric_labels(4), edges)
        }
        // K6 minus the triangles (1,3,5) and (2,4,0)
        CdtName::K33 => {
            let edges = (0..6)
                .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
                .filter(|(u, v)| (u + v) % 2 == 1)
                .collect();
            (numeric_labels(6), edges)
        }
        CdtName::Q3 => {
            let edges = vec![
                (0, 1),
                (2, 3),
                (4, 5),
                (6, 7),
                (0, 2),
                (1, 3),
                (4, 6),
                (5, 7),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ];
            (numeric_labels(8), edges)
        }
        CdtName::Petersen => {
            let u = |x: u32| x % 5;
            let v = |x: u32| 5 + x % 5;
            let mut edges = Vec::new();
            for x in 0..5 {
                edges.push((u(x), u(x + 1)));
                edges.push((v(x), v(x + 2)));
                edges.push((u(x), v(x)));
            }
            (family_labels(&["u", "v"], 5, |i| i.to_string()), edges)
        }
        CdtName::Heawood => {
            let mut edges = ring(14);
            edges.extend((1..=7).map(|x| ((2 * x) % 14, (5 + 2 * x) % 14)));
            ((0..14).map(|i| digit(i).to_string()).collect(), edges)
        }
        CdtName::Pappus => {
            let mut edges = ring(18);
            for x in 0..3 {
                for (a, b) in [(1, 6), (2, 9), (4, 11)] {
                    edges.push(((a + 6 * x) % 18, (b + 6 * x) % 18));
                }
            }
            ((0..18).map(|i| digit(i).to_string()).collect(), edges)
        }
        // two-fold cover of the Petersen graph: a_x, c_x over u_x and b_x,
        // d_x over v_x
        CdtName::Dodecahedral => {
            let [a, b, c, d] = [0u32, 5, 10, 15].map(|base| move |x: u32| base + x % 5);
            let mut edges = Vec::new();
            for x in 0..5 {
                edges.push((a(x), a(x + 1)));
                edges.push((c(x), c(x + 1)));
                edges.push((a(x), d(x)));
                edges.push((d(x), b(x + 2)));
                edges.push((d(x), b(x + 3)));
                edges.push((b(x), c(x)));
            }
            (
                family_labels(&["a", "b", "c", "d"], 5, |i| i.to_string()),
                edges,
            )
        }
        CdtName::Desargues => {
            let v = |x: u32, i: u32| 4 * (x % 5) + i;
            let mut edges = ring(20);
            for x in 0..5 {
                edges.push((v(x, 3), v(x + 2, 0)));
                edges.push((v(x, 1), v(x + 2, 2)));
            }
            (indexed_labels(5, 4), edges)
        }
        CdtName::Coxeter => {
            let [u, v, t, z] = [0u32, 7, 14, 21].map(|base| move |x: u32| base + x % 7);
            let mut edges = Vec::new();
            for x in 0..7 {
                edges.push((u(x), u(x + 1)));
                edges.push((v(x), v(x + 2)));
                edges.push((t(x), t(x + 3)));
                edges.extend([(z(x), u(x)), (z(x), v(x)), (z(x), t(x))]);
            }
            (
                family_labels(&["u", "v", "t", "z"], 7, |i| i.to_string()),
                edges,
            )
        }
        CdtName::Tutte => {
            let v = |x: u32, i: u32| 6 * (x % 5) + i;
            let mut edges = ring(30);
            for x in 0..5 {
                edges.push((v(x, 5), v(x + 2, 0)));
                edges.push((v(x, 1), v(x + 1, 4)));
                edges.push((v(x, 2), v(x + 2, 3)));
            }
            (indexed_labels(5, 6), edges)
        }
        CdtName::Foster => {
            let v = |x: u32, i: u32| 6 * (x % 15) + i;
            let mut edges = ring(90);
            for x in 0..15 {
                edges.push((v(x, 4), v(x + 2, 1)));
                edges.push((v(x, 0), v(x + 2, 5)));
                edges.push((v(x, 2), v(x + 6, 3)));
            }
            (indexed_labels(15, 6), edges)
        }
        // four 17-cycles with steps 1, 2, 4, 8 joined by the trees
        // A_i B_i C_i, D_i E_i F_i, B_i E_i
        CdtName::BiggsSmith => {
            let [a, b, c, d, e, f] =
                [0u32, 17, 34, 51, 68, 85].map(|base| move |i: u32| base + i % 17);
            let mut edges = Vec::new();
            for i in 0..17 {
                edges.push((a(i), a(i + 1)));
                edges.push((d(i), d(i + 2)));
                edges.push((c(i), c(i + 4)));
                edges.push((f(i), f(i + 8)));
                edges.extend([
                    (a(i), b(i)),
                    (b(i), c(i)),
                    (d(i), e(i)),
                    (e(i), f(i)),
                    (b(i), e(i)),
                ]);
            }
            (
                family_labels(&["A", "B", "C", "D", "E", "F"], 17, digit_string),
                edges,
            )
        }
    };
    let order = labels.len();
    let graph = Graph::new(order, &edges).expect("catalog constructions are simple graphs");
    (
        graph,
        LabelTable::new(labels).expect("catalog labels are distinct"),
    )
}

fn digit_string(i: usize) -> String {
    digit(i).to_string()
}

fn ring(n: u32) -> Vec<(u32, u32)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

fn numeric_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn family_labels(prefixes: &[&str], size: usize, index: impl Fn(usize) -> String) -> Vec<String> {
    prefixes
        .iter()
        .flat_map(|p| {
            (0..size)
                .map(|i| format!("{p}{}", index(i)))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// `x_i` labels with `x` written in base 36 digits.
fn indexed_labels(blocks: usize, width: usize) -> Vec<String> {
    (0..blocks)
        .flat_map(|x| (0..width).map(move |i| format!("{}_{i}", digit(x))))
        .collect()
}

/// One entry of a published cycle collection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixtureEntry {
    /// Oriented cycle as printed.
    Cycle(Vec<u32>),
    /// A printed cycle that is not a cycle of the graph; it is left out and
    /// recovered from the orientation constraints.
    Misprint { name: String, printed: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OocFixture {
    pub entries: Vec<FixtureEntry>,
}

impl OocFixture {
    pub fn cycles(&self) -> impl Iterator<Item = &[u32]> {
        self.entries.iter().filter_map(|e| match e {
            FixtureEntry::Cycle(c) => Some(c.as_slice()),
            FixtureEntry::Misprint { .. } => None,
        })
    }

    pub fn misprints(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().filter_map(|e| match e {
            FixtureEntry::Misprint { name, printed } => Some((name.as_str(), printed.as_str())),
            FixtureEntry::Cycle(_) => None,
        })
    }
}

// Tutte 8-cage generator cycles A^0..R^0; the remaining 72 follow by adding
// y in Z5 to every block index.
const TUTTE_CYCLES: [&str; 18] = [
    "4_5 0_0 0_1 0_2 0_3 0_4 0_5 1_0",
    "4_2 4_3 4_4 4_5 1_0 1_1 1_2 1_3",
    "0_2 0_3 0_4 4_1 4_0 2_5 2_4 2_3",
    "3_3 3_2 3_1 4_4 4_3 4_2 1_3 1_2",
    "4_5 1_0 0_5 0_4 4_1 4_0 3_5 0_0",
    "4_5 0_0 3_5 4_0 2_5 2_4 1_1 1_0",
    "1_0 1_1 2_4 2_3 0_2 0_1 0_0 4_5",
    "2_3 2_4 1_1 1_0 0_5 0_4 0_3 0_2",
    "0_1 0_2 0_3 0_4 4_1 4_2 1_3 1_4",
    "1_0 0_5 0_4 0_3 3_2 3_1 4_4 4_5",
    "3_1 3_2 0_3 0_2 0_1 0_0 4_5 4_4",
    "2_3 2_4 2_5 3_0 3_1 3_2 0_3 0_2",
    "3_5 4_0 4_1 0_4 0_3 0_2 0_1 0_0",
    "0_0 0_1 1_4 1_5 2_0 2_1 3_4 3_5",
    "4_2 4_3 2_2 2_1 3_4 3_3 1_2 1_3",
    "4_5 4_4 4_3 4_2 4_1 0_4 0_5 1_0",
    "4_0 4_1 4_2 1_3 1_4 1_5 3_0 2_5",
    "0_1 0_2 0_3 3_2 3_1 3_0 1_5 1_4",
];

// Coxeter graph collection x^y, listed row by row (0^1, 0^2, 0^3, 1^1, ...).
// Entries 3^3 and 4^3 are misprinted in the source.
const COXETER_CYCLES: [(&str, &str); 24] = [
    ("0^1", "u1 u2 u3 u4 u5 u6 u0"),
    ("0^2", "v1 v3 v5 v0 v2 v4 v6"),
    ("0^3", "t1 t5 t2 t6 t3 t0 t4"),
    ("1^1", "u1 z1 v1 v3 z3 u3 u2"),
    ("1^2", "z4 v4 v2 v0 z0 t0 t4"),
    ("1^3", "t6 t2 t5 z5 u5 u6 z6"),
    ("2^1", "v5 z5 u5 u4 u3 z3 v3"),
    ("2^2", "t6 z6 v6 v4 v2 z2 t2"),
    ("2^3", "u1 z1 t1 t4 t0 z0 u0"),
    ("3^1", "v5 v0 z0 u0 u6 u5 z5"),
    ("3^2", "z4 t4 t1 z1 v1 v6 v4"),
    ("3^3", "t6 t2 z2 u2 v3 z3 t3"),
    ("4^1", "u1 u0 z0 v0 v2 z2 u2"),
    ("4^2", "t6 t3 z3 v3 v1 v6 z6"),
    ("4^3", "z4 u4 u5 z5 t5 t4"),
    ("5^1", "z4 u4 u3 u2 z2 v2 v4"),
    ("5^2", "v5 v3 v1 z1 t1 t5 z5"),
    ("5^3", "t6 z6 u6 u0 z0 t0 t3"),
    ("6^1", "z4 v4 v6 z6 u6 u5 u4"),
    ("6^2", "v5 v3 z3 t3 t0 z0 v0"),
    ("6^3", "u1 u2 z2 t2 t5 t1 z1"),
    ("7^1", "u1 u0 u6 z6 v6 v1 z1"),
    ("7^2", "v5 z5 t5 t2 z2 v2 v0"),
    ("7^3", "z4 t4 t0 t3 z3 u3 u4"),
];

/// The published orientation collection for the seven graphs that admit
/// one; `None` for the other five.
pub fn reference_ooc(name: CdtName) -> Option<OocFixture> {
    let (graph, labels) = build_cdt(name);
    let parse = |text: &str| labels.parse_cycle(text).expect("fixture labels are valid");
    let cycles: Vec<Vec<u32>> = match name {
        CdtName::K4 => ["123", "210", "301", "032"].map(parse).to_vec(),
        CdtName::K33 => [
            "1234", "3210", "4325", "1430", "2145", "0125", "5230", "0345", "5410",
        ]
        .map(parse)
        .to_vec(),
        CdtName::Q3 => ["0132", "1045", "3157", "2376", "0264", "4675"]
            .map(parse)
            .to_vec(),
        CdtName::Dodecahedral => {
            let [a, b, c, d] =
                [0u32, 5, 10, 15].map(|base| move |x: i32| base + x.rem_euclid(5) as u32);
            let mut out = vec![(0..5).map(a).collect(), (0..5).rev().map(c).collect()];
            for x in 0..5 {
                out.push(vec![a(x), d(x), b(x - 2), d(x + 1), a(x + 1)]);
                out.push(vec![d(x), b(x + 2), c(x + 2), c(x - 2), b(x - 2)]);
            }
            out
        }
        CdtName::Desargues => {
            let v = |x: u32, i: u32| 4 * (x % 5) + i;
            let mut out = Vec::new();
            for x in 0..5 {
                out.push(vec![
                    v(x, 0),
                    v(x, 1),
                    v(x, 2),
                    v(x, 3),
                    v(x + 1, 0),
                    v(x + 4, 3),
                ]);
                out.push(vec![
                    v(x, 1),
                    v(x, 0),
                    v(x + 4, 3),
                    v(x + 4, 2),
                    v(x + 2, 1),
                    v(x + 2, 2),
                ]);
                out.push(vec![
                    v(x, 2),
                    v(x, 1),
                    v(x, 0),
                    v(x + 3, 3),
                    v(x + 3, 2),
                    v(x + 3, 1),
                ]);
                out.push(vec![
                    v(x, 0),
                    v(x + 4, 3),
                    v(x + 1, 0),
                    v(x + 1, 1),
                    v(x + 3, 2),
                    v(x + 3, 3),
                ]);
            }
            out
        }
        CdtName::Tutte => {
            let base: Vec<Vec<u32>> = TUTTE_CYCLES.iter().map(|t| parse(t)).collect();
            (0..5)
                .flat_map(|y| {
                    base.iter()
                        .map(move |c| c.iter().map(|&v| (v + 6 * y) % 30).collect())
                        .collect::<Vec<_>>()
                })
                .collect()
        }
        CdtName::Coxeter => {
            let entries = COXETER_CYCLES
                .iter()
                .map(|&(name, text)| {
                    let cycle = parse(text);
                    if is_cycle_of(&graph, &cycle, 7) {
                        FixtureEntry::Cycle(cycle)
                    } else {
                        FixtureEntry::Misprint {
                            name: name.to_owned(),
                            printed: text.to_owned(),
                        }
                    }
                })
                .collect();
            return Some(OocFixture { entries });
        }
        _ => return None,
    };
    Some(OocFixture {
        entries: cycles.into_iter().map(FixtureEntry::Cycle).collect(),
    })
}

/// True when `seq` is a simple closed walk of the given length in `g`.
pub fn is_cycle_of(g: &Graph, seq: &[u32], len: usize) -> bool {
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    seq.len() == len
        && sorted.len() == len
        && (0..len).all(|i| g.has_edge(seq[i], seq[(i + 1) % len]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for name in CdtName::ALL {
            assert_eq!(name.as_str().parse::<CdtName>().unwrap(), name);
        }
        assert_eq!("K3,3".parse::<CdtName>().unwrap(), CdtName::K33);
        assert!("cube3".parse::<CdtName>().is_err());
    }

    #[test]
    fn parameter_rows() {
        let foster = cdt_parameters(CdtName::Foster);
        assert_eq!(
            (foster.n, foster.d, foster.g, foster.k, foster.eta, foster.a),
            (90, 8, 10, 5, 216, 4320)
        );
        assert!(foster.bipartite && foster.hamiltonian);
        assert_eq!(foster.kappa, 0);
        let k33 = cdt_parameters(CdtName::K33);
        assert_eq!(
            (k33.n, k33.d, k33.g, k33.k, k33.eta, k33.a, k33.kappa),
            (6, 2, 4, 3, 9, 72, 2)
        );
        let tutte = cdt_parameters(CdtName::Tutte);
        assert_eq!(
            (
                tutte.n,
                tutte.d,
                tutte.g,
                tutte.k,
                tutte.eta,
                tutte.a,
                tutte.kappa
            ),
            (30, 4, 8, 5, 90, 1440, 2)
        );
    }

    #[test]
    fn parameter_rows_are_internally_consistent() {
        for name in CdtName::ALL {
            let p = cdt_parameters(name);
            assert_eq!((1 << (p.k - 2)) * 3 * p.n, p.eta * p.g, "{name}");
            match p.kappa {
                2 => assert_eq!(p.g, 2 * (p.k - 1)),
                3 => assert!(p.g > 2 * (p.k - 1)),
                _ => {}
            }
        }
    }

    #[test]
    fn constructions_are_cubic_with_labels() {
        for name in CdtName::ALL {
            let (g, labels) = build_cdt(name);
            assert_eq!(g.order(), cdt_parameters(name).n, "{name}");
            assert!(g.is_regular(3), "{name}");
            assert!(g.is_connected(), "{name}");
            assert_eq!(labels.len(), g.order());
        }
        let (_, labels) = build_cdt(CdtName::BiggsSmith);
        assert_eq!(labels.id("Ag"), Some(16));
        assert_eq!(labels.id("E0"), Some(68));
        let (_, labels) = build_cdt(CdtName::Tutte);
        assert_eq!(labels.id("2_3"), Some(15));
    }

    #[test]
    fn fixtures_present_exactly_for_positive_graphs() {
        let positive = [
            CdtName::K4,
            CdtName::K33,
            CdtName::Q3,
            CdtName::Dodecahedral,
            CdtName::Desargues,
            CdtName::Coxeter,
            CdtName::Tutte,
        ];
        for name in CdtName::ALL {
            assert_eq!(
                reference_ooc(name).is_some(),
                positive.contains(&name),
                "{name}"
            );
        }
        let k4 = reference_ooc(CdtName::K4).unwrap();
        assert_eq!(k4.cycles().next().unwrap(), &[1, 2, 3]);
        let q3 = reference_ooc(CdtName::Q3).unwrap();
        assert_eq!(q3.entries.len(), 6);
        assert_eq!(q3.cycles().next().unwrap(), &[0, 1, 3, 2]);
    }

    #[test]
    fn coxeter_misprints_are_isolated() {
        let cox = reference_ooc(CdtName::Coxeter).unwrap();
        let names: Vec<&str> = cox.misprints().map(|(n, _)| n).collect();
        assert_eq!(names, ["3^3", "4^3"]);
        assert_eq!(cox.cycles().count(), 22);
    }
}
