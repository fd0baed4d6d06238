//! Line-oriented text formats, DOT emitters and JSON reports.
//!
//! Every text document starts with a header line naming its kind
//! (`lattice`, `complex` or `graph`), optionally followed by `format 1`.
//! The remaining lines are directives made of whitespace-separated tokens;
//! a token starting with `#` begins a comment that runs to the end of the
//! line.
//!
//! ```text
//! lattice                complex                graph
//! elements B a b T       vertices 1 2 3         vertices a b c
//! cover B a              facet 1 2              edge a b
//! cover a T              facet 3                edge b c
//! ```
//!
//! Lattices are given by their covering pairs and the order is the
//! transitive closure. An empty `facet` line denotes the empty face.
//! Labels are arbitrary tokens and indices follow file order.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::flats::{set_label, FlatFamily, TransversalWitness};
use crate::graph::SimpleGraph;
use crate::lattice::{FiniteLattice, Pentagon};
use crate::realize::{BooleanMatrix, Evidence, Method, RealizabilityReport};
use crate::set::{IndexSet, MAX_INDEX};

/// Current version of the text formats.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Lattice(FiniteLattice),
    Complex(SimplicialComplex),
    Graph(SimpleGraph),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Lattice(_) => "lattice",
            Document::Complex(_) => "complex",
            Document::Graph(_) => "graph",
        }
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

impl Line<'_> {
    fn error(&self, column: usize, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.number,
            column,
            message: message.into(),
        }
    }
}

fn tokenize(text: &str) -> Vec<Line<'_>> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let mut tokens = Vec::new();
        let mut start: Option<(usize, usize)> = None;
        let mut column = 0;
        let mut chars = raw.char_indices().peekable();
        while let Some((pos, ch)) = chars.next() {
            column += 1;
            if ch.is_whitespace() {
                if let Some((s, c)) = start.take() {
                    tokens.push(Token {
                        text: &raw[s..pos],
                        column: c,
                    });
                }
                continue;
            }
            if start.is_none() {
                if ch == '#' {
                    break;
                }
                start = Some((pos, column));
            }
            if chars.peek().is_none() {
                let (s, c) = start.take().expect("token in progress");
                tokens.push(Token {
                    text: &raw[s..],
                    column: c,
                });
            }
        }
        if !tokens.is_empty() {
            lines.push(Line { number: i + 1, tokens });
        }
    }
    lines
}

/// Resolves label tokens against a label table.
fn resolve(line: &Line<'_>, tokens: &[Token<'_>], index: &HashMap<&str, usize>, what: &str) -> Result<Vec<usize>> {
    tokens
        .iter()
        .map(|t| {
            index
                .get(t.text)
                .copied()
                .ok_or_else(|| line.error(t.column, format!("unknown {what} `{}`", t.text)))
        })
        .collect()
}

fn expect_arity(line: &Line<'_>, n: usize) -> Result<()> {
    let got = line.tokens.len() - 1;
    if got != n {
        let column = line.tokens.get(n + 1).map_or(line.tokens[0].column, |t| t.column);
        return Err(line.error(
            column,
            format!("`{}` takes {n} arguments, found {got}", line.tokens[0].text),
        ));
    }
    Ok(())
}

/// Parses any of the three formats.
pub fn parse(text: &str) -> Result<Document> {
    let lines = tokenize(text);
    let Some(header) = lines.first() else {
        return Err(Error::Syntax {
            line: 1,
            column: 1,
            message: "missing header (`lattice`, `complex` or `graph`)".into(),
        });
    };
    if header.tokens.len() != 1 {
        return Err(header.error(header.tokens[1].column, "unexpected token after header"));
    }
    let mut body = &lines[1..];
    if let Some(first) = body.first() {
        if first.tokens[0].text == "format" {
            expect_arity(first, 1)?;
            let v = &first.tokens[1];
            if v.text != FORMAT_VERSION.to_string() {
                return Err(first.error(v.column, format!("unsupported format version `{}`", v.text)));
            }
            body = &body[1..];
        }
    }
    match header.tokens[0].text {
        "lattice" => parse_lattice_body(body).map(Document::Lattice),
        "complex" => parse_complex_body(body).map(Document::Complex),
        "graph" => parse_graph_body(body).map(Document::Graph),
        other => Err(header.error(header.tokens[0].column, format!("unknown document kind `{other}`"))),
    }
}

/// Collects the labels declared on all `keyword` lines, in file order.
fn declared_labels<'a>(body: &'a [Line<'a>], keyword: &str) -> Result<(Vec<String>, HashMap<&'a str, usize>)> {
    let mut labels = Vec::new();
    let mut index = HashMap::new();
    for line in body.iter().filter(|l| l.tokens[0].text == keyword) {
        for t in &line.tokens[1..] {
            if index.insert(t.text, labels.len()).is_some() {
                return Err(Error::DuplicateLabel(t.text.to_string()));
            }
            labels.push(t.text.to_string());
        }
    }
    Ok((labels, index))
}

fn unknown_directive(line: &Line<'_>) -> Error {
    line.error(
        line.tokens[0].column,
        format!("unknown directive `{}`", line.tokens[0].text),
    )
}

fn parse_lattice_body(body: &[Line<'_>]) -> Result<FiniteLattice> {
    let (labels, index) = declared_labels(body, "elements")?;
    let mut covers = Vec::new();
    for line in body {
        match line.tokens[0].text {
            "elements" => {}
            "cover" => {
                expect_arity(line, 2)?;
                let ends = resolve(line, &line.tokens[1..], &index, "element")?;
                covers.push((ends[0], ends[1]));
            }
            _ => return Err(unknown_directive(line)),
        }
    }
    FiniteLattice::from_covers(labels, &covers)
}

fn parse_complex_body(body: &[Line<'_>]) -> Result<SimplicialComplex> {
    let (labels, index) = declared_labels(body, "vertices")?;
    if labels.len() > MAX_INDEX {
        return Err(Error::LimitExceeded {
            what: "complex vertices",
            size: labels.len(),
            limit: MAX_INDEX,
        });
    }
    let mut faces = Vec::new();
    for line in body {
        match line.tokens[0].text {
            "vertices" => {}
            "facet" => {
                let face: IndexSet = resolve(line, &line.tokens[1..], &index, "vertex")?
                    .into_iter()
                    .collect();
                faces.push(face);
            }
            _ => return Err(unknown_directive(line)),
        }
    }
    SimplicialComplex::from_index_faces(labels, faces)
}

fn parse_graph_body(body: &[Line<'_>]) -> Result<SimpleGraph> {
    let (labels, index) = declared_labels(body, "vertices")?;
    let mut edges = Vec::new();
    for line in body {
        match line.tokens[0].text {
            "vertices" => {}
            "edge" => {
                expect_arity(line, 2)?;
                let ends = resolve(line, &line.tokens[1..], &index, "vertex")?;
                edges.push((ends[0], ends[1]));
            }
            _ => return Err(unknown_directive(line)),
        }
    }
    SimpleGraph::new(labels, &edges)
}

fn wrong_kind(expected: &str, doc: &Document) -> Error {
    Error::Syntax {
        line: 1,
        column: 1,
        message: format!("expected a {expected}, found a {}", doc.kind()),
    }
}

pub fn parse_lattice(text: &str) -> Result<FiniteLattice> {
    match parse(text)? {
        Document::Lattice(l) => Ok(l),
        other => Err(wrong_kind("lattice", &other)),
    }
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    match parse(text)? {
        Document::Complex(c) => Ok(c),
        other => Err(wrong_kind("complex", &other)),
    }
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    match parse(text)? {
        Document::Graph(g) => Ok(g),
        other => Err(wrong_kind("graph", &other)),
    }
}

pub fn print(doc: &Document) -> String {
    match doc {
        Document::Lattice(l) => print_lattice(l),
        Document::Complex(c) => print_complex(c),
        Document::Graph(g) => print_graph(g),
    }
}

fn header(kind: &str, keyword: &str, labels: &[String]) -> String {
    let mut out = format!("{kind}\nformat {FORMAT_VERSION}\n{keyword}");
    for l in labels {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    out
}

pub fn print_lattice(l: &FiniteLattice) -> String {
    let mut out = header("lattice", "elements", l.labels());
    for (x, y) in l.cover_pairs() {
        writeln!(out, "cover {} {}", l.label(x), l.label(y)).unwrap();
    }
    out
}

pub fn print_complex(c: &SimplicialComplex) -> String {
    let mut out = header("complex", "vertices", c.labels());
    for &f in c.facets() {
        out.push_str("facet");
        for v in f {
            out.push(' ');
            out.push_str(c.label(v));
        }
        out.push('\n');
    }
    out
}

pub fn print_graph(g: &SimpleGraph) -> String {
    let mut out = header("graph", "vertices", g.labels());
    for (a, b) in g.edges() {
        writeln!(out, "edge {} {}", g.label(a), g.label(b)).unwrap();
    }
    out
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram in DOT, drawn bottom to top.
pub fn emit_dot_hasse(l: &FiniteLattice) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for x in 0..l.len() {
        writeln!(out, "  n{x} [label={}];", dot_quote(l.label(x))).unwrap();
    }
    writeln!(out, "  {{ rank=min; n{}; }}", l.bottom()).unwrap();
    for (x, y) in l.cover_pairs() {
        writeln!(out, "  n{x} -> n{y} [arrowhead=none];").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn emit_dot_graph(g: &SimpleGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        writeln!(out, "  n{v} [label={}];", dot_quote(g.label(v))).unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(out, "  n{a} -- n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Pretty-printed JSON with the field order of the report type.
pub fn emit_json<T: Serialize>(report: &T) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("reports serialize");
    out.push('\n');
    out
}

fn element_labels(l: &FiniteLattice, xs: impl IntoIterator<Item = usize>) -> Vec<String> {
    let mut xs: Vec<usize> = xs.into_iter().collect();
    xs.sort_unstable();
    xs.into_iter().map(|x| l.label(x).to_string()).collect()
}

fn vertex_labels(c: &SimplicialComplex, x: IndexSet) -> Vec<String> {
    c.set_labels(x).into_iter().map(String::from).collect()
}

/// Invariants reported by `classify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub elements: usize,
    pub atoms: Vec<String>,
    pub height: usize,
    pub atomistic: bool,
    pub semimodular: bool,
    pub geometric: bool,
    pub boolean: bool,
    /// An element that is not a join of atoms.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub non_atomistic_element: Option<String>,
    /// `[a, b, c, d, e]` of a pentagon witnessing non-semimodularity.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pentagon: Option<Vec<String>>,
}

impl ClassifyReport {
    pub fn new(l: &FiniteLattice) -> Self {
        let pentagon: Option<Pentagon> = l.semimodular_violation();
        ClassifyReport {
            elements: l.len(),
            atoms: element_labels(l, l.atoms()),
            height: l.height(),
            atomistic: l.is_atomistic(),
            semimodular: pentagon.is_none(),
            geometric: l.is_geometric(),
            boolean: l.is_boolean(),
            non_atomistic_element: l.non_atomistic_element().map(|x| l.label(x).to_string()),
            pentagon: pentagon.map(|p| p.elements().iter().map(|&x| l.label(x).to_string()).collect()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatsReport {
    pub count: usize,
    pub flats: Vec<Vec<String>>,
    /// Covering pairs of the lattice of flats, as flat labels.
    pub covers: Vec<[String; 2]>,
}

impl FlatsReport {
    pub fn new(family: &FlatFamily) -> Self {
        let c = family.complex();
        let l = family.lattice();
        FlatsReport {
            count: family.len(),
            flats: family.flats().iter().map(|&f| vertex_labels(c, f)).collect(),
            covers: l
                .cover_pairs()
                .into_iter()
                .map(|(x, y)| [l.label(x).to_string(), l.label(y).to_string()])
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub set: Vec<String>,
    pub closure: Vec<String>,
    pub flat: bool,
}

impl ClosureReport {
    pub fn new(family: &FlatFamily, x: IndexSet) -> Self {
        let c = family.complex();
        let cl = family.closure(x);
        ClosureReport {
            set: vertex_labels(c, x),
            closure: vertex_labels(c, cl),
            flat: cl == x,
        }
    }
}

/// A face with the ordering and chain of flats that exhibit it as a
/// transversal of successive differences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceWitness {
    pub face: Vec<String>,
    pub ordering: Vec<String>,
    pub chain: Vec<String>,
}

impl FaceWitness {
    pub fn new(c: &SimplicialComplex, face: IndexSet, w: &TransversalWitness) -> Self {
        FaceWitness {
            face: vertex_labels(c, face),
            ordering: w.ordering.iter().map(|&v| c.label(v).to_string()).collect(),
            chain: w.chain.iter().map(|&f| set_label(c, f)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrReport {
    pub boolean_representable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub non_representable_face: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<FaceWitness>>,
}

impl BrReport {
    /// With `verbose`, a witness for every facet of a boolean representable
    /// complex.
    pub fn new(family: &FlatFamily, verbose: bool) -> Self {
        let c = family.complex();
        let bad = family.non_representable_face();
        let witnesses = (verbose && bad.is_none()).then(|| {
            c.facets()
                .iter()
                .map(|&f| {
                    let w = family.transversal_witness(f).expect("facet of a representable complex");
                    FaceWitness::new(c, f, &w)
                })
                .collect()
        });
        BrReport {
            boolean_representable: bad.is_none(),
            non_representable_face: bad.map(|f| vertex_labels(c, f)),
            witnesses,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizabilityJson {
    pub atomistic: bool,
    pub realizable: bool,
    pub method: Method,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub requested: Option<Method>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub non_atomistic_element: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub height: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub atoms: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boolean: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub supercliques: Option<Vec<Vec<String>>>,
    /// Number of flats of `T_L`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flats: Option<usize>,
}

impl RealizabilityJson {
    pub fn new(l: &FiniteLattice, r: &RealizabilityReport) -> Self {
        let mut out = RealizabilityJson {
            atomistic: r.atomistic,
            realizable: r.realizable,
            method: r.method,
            requested: r.requested,
            non_atomistic_element: None,
            height: None,
            atoms: None,
            size: None,
            boolean: None,
            supercliques: None,
            flats: None,
        };
        match &r.evidence {
            Evidence::NonAtomistic { element } => out.non_atomistic_element = Some(l.label(*element).to_string()),
            Evidence::Height { height } => out.height = Some(*height),
            Evidence::BooleanCheck { atoms, size, boolean } => {
                out.atoms = Some(*atoms);
                out.size = Some(*size);
                out.boolean = Some(*boolean);
            }
            Evidence::Supercliques(s) => {
                out.supercliques = Some(s.iter().map(|w| element_labels(l, w.iter().copied())).collect())
            }
            Evidence::FlatCount { flats, size } => {
                out.flats = Some(*flats);
                out.size = Some(*size);
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupercliqueReport {
    pub supercliques: Vec<Vec<String>>,
}

impl SupercliqueReport {
    pub fn new(g: &SimpleGraph, sets: &[IndexSet]) -> Self {
        SupercliqueReport {
            supercliques: sets
                .iter()
                .map(|w| w.iter().map(|v| g.label(v).to_string()).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexReport {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
}

impl ComplexReport {
    pub fn new(c: &SimplicialComplex) -> Self {
        ComplexReport {
            vertices: c.labels().to_vec(),
            facets: c.facets().iter().map(|&f| vertex_labels(c, f)).collect(),
            verified: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixReport {
    pub rows: Vec<String>,
    pub columns: Vec<String>,
    pub entries: Vec<Vec<u8>>,
}

impl MatrixReport {
    pub fn new(m: &BooleanMatrix) -> Self {
        MatrixReport {
            rows: m.row_labels.clone(),
            columns: m.column_labels.clone(),
            entries: m.rows.clone(),
        }
    }
}
