#![allow(dead_code)]

use flatlat::{FiniteLattice, IndexSet, SimpleGraph, SimplicialComplex};
use rand::Rng;

pub fn labels(s: &str) -> Vec<String> {
    s.split_whitespace().map(String::from).collect()
}

/// Vertices and facets written as strings of one-character labels.
pub fn complex(vertices: &str, facets: &[&str]) -> SimplicialComplex {
    let labels: Vec<String> = vertices.chars().map(String::from).collect();
    let faces: Vec<Vec<String>> = facets.iter().map(|f| f.chars().map(String::from).collect()).collect();
    SimplicialComplex::from_faces(labels, &faces).unwrap()
}

pub fn set(c: &SimplicialComplex, s: &str) -> IndexSet {
    let chars: Vec<String> = s.chars().map(String::from).collect();
    c.set_of(&chars).unwrap()
}

/// `P≤2(1234) ∪ {123, 124}`.
pub fn four_vertex() -> SimplicialComplex {
    complex("1234", &["123", "124", "34"])
}

pub fn uniform(n: usize, k: usize) -> SimplicialComplex {
    let labels = (1..=n).map(|i| i.to_string()).collect();
    SimplicialComplex::uniform(labels, k).unwrap()
}

/// Independent sets of the cycle matroid of `K4`: edge triples that are
/// not triangles.
pub fn graphic_k4() -> SimplicialComplex {
    let edges = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
    let labels = edges.iter().map(|(a, b)| format!("{a}{b}")).collect();
    let faces = IndexSet::full(6).subsets().filter(|s| s.len() == 3).filter(|s| {
        let touched: IndexSet = s.iter().flat_map(|e| [edges[e].0, edges[e].1]).collect();
        touched.len() != 3
    });
    SimplicialComplex::from_index_faces(labels, faces).unwrap()
}

pub fn fixture_complexes() -> Vec<(&'static str, SimplicialComplex)> {
    vec![
        ("four-vertex", four_vertex()),
        ("path", complex("123", &["12", "3"])),
        ("trivial", complex("v", &[""])),
        ("all-loops", complex("abc", &[""])),
        ("points", complex("12345", &["1", "2", "3", "4", "5"])),
        ("simplex", complex("123", &["123"])),
        ("u24", uniform(4, 2)),
        ("u35", uniform(5, 3)),
        ("four-vertex+loop", complex("12345", &["123", "124", "34"])),
        ("path5", complex("12345", &["12", "23", "34", "45"])),
        ("two-triangles", complex("12345", &["123", "345"])),
        ("triangle+point", complex("1234", &["12", "13", "23", "4"])),
        ("parallel", complex("1234", &["13", "14", "23", "24"])),
        (
            "u25+123",
            complex("12345", &["123", "14", "15", "24", "25", "34", "35", "45"]),
        ),
        ("cone", complex("12345", &["125", "235", "345", "145"])),
        ("graphic-k4", graphic_k4()),
    ]
}

pub fn graph(vertices: &str, edges: &[&str]) -> SimpleGraph {
    let labels: Vec<String> = vertices.chars().map(String::from).collect();
    let idx = |ch: char| vertices.chars().position(|v| v == ch).unwrap();
    let pairs: Vec<(usize, usize)> = edges
        .iter()
        .map(|e| {
            let mut it = e.chars();
            (idx(it.next().unwrap()), idx(it.next().unwrap()))
        })
        .collect();
    SimpleGraph::new(labels, &pairs).unwrap()
}

pub fn fixture_graphs() -> Vec<(&'static str, SimpleGraph)> {
    vec![
        ("empty", graph("abc", &[])),
        ("edge", graph("ab", &["ab"])),
        ("path3", graph("abc", &["ab", "bc"])),
        ("k3", graph("abc", &["ab", "bc", "ac"])),
        ("k4", graph("abcd", &["ab", "ac", "ad", "bc", "bd", "cd"])),
        ("paw", graph("abcd", &["ab", "bc", "ac", "cd"])),
        ("diamond", graph("abcd", &["ab", "ac", "bc", "bd", "cd"])),
        ("c4", graph("abcd", &["ab", "bc", "cd", "da"])),
        ("c5", graph("abcde", &["ab", "bc", "cd", "de", "ea"])),
        ("star", graph("abcd", &["ab", "ac", "ad"])),
        ("bowtie", graph("abcde", &["ab", "bc", "ac", "cd", "de", "ce"])),
        (
            "k5-minus-edge",
            graph("abcde", &["ab", "ac", "ad", "ae", "bc", "bd", "be", "cd", "ce"]),
        ),
        ("two-triangles", graph("abcdef", &["ab", "bc", "ac", "de", "ef", "df"])),
    ]
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> SimpleGraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    SimpleGraph::new((0..n).map(|i| format!("v{i}")).collect(), &edges).unwrap()
}

pub fn random_complex(rng: &mut impl Rng, n: usize, facets: usize) -> SimplicialComplex {
    let faces: Vec<IndexSet> = (0..facets)
        .map(|_| IndexSet::from_bits(rng.gen_range(0..1u64 << n)))
        .collect();
    SimplicialComplex::from_index_faces((1..=n).map(|i| i.to_string()).collect(), faces).unwrap()
}

/// The six-element lattice with atoms 1, 2, 3, `m = 1 ∨ 2` and `T = m ∨ 3`.
pub fn six_element() -> FiniteLattice {
    FiniteLattice::from_covers(
        labels("B 1 2 3 m T"),
        &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (4, 5), (3, 5)],
    )
    .unwrap()
}
