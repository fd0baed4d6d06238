//! The atom graph `Γ_L` of a lattice, supercliques, and the height-3
//! realizability criterion.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Limits, Result};
use crate::lattice::FiniteLattice;
use crate::set::{IndexSet, MAX_INDEX};

/// Largest graph handed to [`SimpleGraph::naive_supercliques`].
pub const NAIVE_MAX_VERTICES: usize = 16;

/// A finite undirected graph without loops, on at most 64 vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<IndexSet>,
}

impl SimpleGraph {
    pub fn new(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        if n > MAX_INDEX {
            return Err(Error::LimitExceeded {
                what: "graph vertices",
                size: n,
                limit: MAX_INDEX,
            });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut adj = vec![IndexSet::EMPTY; n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Malformed(format!("edge ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::Malformed(format!("self-loop at `{}`", labels[a])));
            }
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Ok(SimpleGraph { labels, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> IndexSet {
        IndexSet::full(self.labels.len())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn neighbours(&self, v: usize) -> IndexSet {
        self.adj[v]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count())
            .flat_map(|a| self.adj[a].iter().filter(move |&b| b > a).map(move |b| (a, b)))
            .collect()
    }

    pub fn is_clique(&self, w: IndexSet) -> bool {
        w.iter().all(|a| w.without(a).is_subset(self.adj[a]))
    }

    /// A clique with at least two vertices such that no outside vertex is
    /// adjacent to both ends of an edge inside it.
    pub fn is_superclique(&self, w: IndexSet) -> bool {
        if w.len() < 2 || !w.is_subset(self.vertices()) || !self.is_clique(w) {
            return false;
        }
        self.vertices()
            .difference(w)
            .iter()
            .all(|c| self.adj[c].intersection(w).len() <= 1)
    }

    /// Vertices outside `w` adjacent to at least two members of `w`.
    fn growth_candidates(&self, w: IndexSet) -> IndexSet {
        self.vertices()
            .difference(w)
            .iter()
            .filter(|&v| self.adj[v].intersection(w).len() >= 2)
            .collect()
    }

    /// `C(ab)`: starting from `{a, b}`, repeatedly add a vertex adjacent to
    /// at least two current members. Picks the smallest eligible vertex.
    pub fn grow(&self, a: usize, b: usize) -> IndexSet {
        self.grow_with(a, b, |cands| cands.first().expect("non-empty candidates"))
    }

    /// [`Self::grow`] with a caller-chosen vertex at each step. The result
    /// does not depend on the choices.
    pub fn grow_with(&self, a: usize, b: usize, mut pick: impl FnMut(IndexSet) -> usize) -> IndexSet {
        let mut w = IndexSet::singleton(a).with(b);
        loop {
            let cands = self.growth_candidates(w);
            if cands.is_empty() {
                return w;
            }
            let v = pick(cands);
            assert!(cands.contains(v), "picked vertex is not eligible");
            w.insert(v);
        }
    }

    /// All supercliques, via growth from every edge: each superclique is
    /// `C(ab)` for any edge `ab` inside it, and `C(ab)` is a superclique
    /// exactly when it is a clique.
    pub fn find_supercliques(&self) -> Vec<IndexSet> {
        let mut memo: HashMap<(usize, usize), IndexSet> = HashMap::new();
        let mut found: Vec<IndexSet> = Vec::new();
        for (a, b) in self.edges() {
            if memo.contains_key(&(a, b)) {
                continue;
            }
            let c = self.grow(a, b);
            memo.insert((a, b), c);
            if self.is_clique(c) {
                // every edge of a superclique grows to the same set
                for x in c.iter() {
                    for y in c.iter().filter(|&y| y > x) {
                        memo.insert((x, y), c);
                    }
                }
                found.push(c);
            }
        }
        sort_sets(&mut found);
        found.dedup();
        found
    }

    /// Brute force over every vertex subset.
    pub fn naive_supercliques(&self) -> Result<Vec<IndexSet>> {
        Limits::check("naive superclique vertices", self.vertex_count(), NAIVE_MAX_VERTICES)?;
        let mut found: Vec<IndexSet> = self.vertices().subsets().filter(|&w| self.is_superclique(w)).collect();
        sort_sets(&mut found);
        Ok(found)
    }

    /// The graph on the atoms of `l` with an edge `ab` whenever `a ∨ b` is the
    /// top. Vertex `i` is the `i`-th atom of [`FiniteLattice::atoms`].
    pub fn gamma(l: &FiniteLattice) -> SimpleGraph {
        let atoms = l.atoms();
        let labels = atoms.iter().map(|&a| l.label(a).to_string()).collect();
        let mut edges = Vec::new();
        for (i, &a) in atoms.iter().enumerate() {
            for (j, &b) in atoms.iter().enumerate().skip(i + 1) {
                if l.join(a, b) == l.top() {
                    edges.push((i, j));
                }
            }
        }
        SimpleGraph::new(labels, &edges).expect("atom graph is well formed")
    }
}

/// Orders sets by their sorted member lists.
fn sort_sets(sets: &mut [IndexSet]) {
    sets.sort_by_key(|s| s.iter().collect::<Vec<_>>());
}

/// Outcome of the height-3 criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Height3Verdict {
    pub realizable: bool,
    pub atomistic: bool,
    /// All supercliques of `Γ_L`, as lattice element indices.
    pub supercliques: Vec<Vec<usize>>,
}

impl Height3Verdict {
    /// The first superclique, if the lattice failed because of one.
    pub fn witness(&self) -> Option<&[usize]> {
        self.supercliques.first().map(Vec::as_slice)
    }
}

/// A lattice of height 3 is the lattice of flats of a boolean representable
/// complex iff it is atomistic and `Γ_L` has no supercliques.
pub fn realizable_height3(l: &FiniteLattice) -> Result<Height3Verdict> {
    let h = l.height();
    if h != 3 {
        return Err(Error::WrongHeight(h));
    }
    if !l.is_atomistic() {
        return Ok(Height3Verdict {
            realizable: false,
            atomistic: false,
            supercliques: Vec::new(),
        });
    }
    let atoms = l.atoms();
    let supercliques: Vec<Vec<usize>> = SimpleGraph::gamma(l)
        .find_supercliques()
        .into_iter()
        .map(|w| w.iter().map(|i| atoms[i]).collect())
        .collect();
    Ok(Height3Verdict {
        realizable: supercliques.is_empty(),
        atomistic: true,
        supercliques,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    fn six_element() -> FiniteLattice {
        FiniteLattice::from_covers(
            labels("B 1 2 3 m T"),
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (4, 5), (3, 5)],
        )
        .unwrap()
    }

    /// Flats of `P≤2(1234) ∪ {123, 124}`: ∅, 1, 2, 3, 4, 12, V.
    fn example_flats() -> FiniteLattice {
        FiniteLattice::from_covers(
            labels("e 1 2 3 4 12 V"),
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 5), (5, 6), (3, 6), (4, 6)],
        )
        .unwrap()
    }

    fn set(v: &[usize]) -> IndexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn gamma_of_six_element_lattice_is_a_path() {
        let g = SimpleGraph::gamma(&six_element());
        assert_eq!(g.labels(), &labels("1 2 3"));
        assert_eq!(g.edges(), vec![(0, 2), (1, 2)]);
        assert!(g.is_superclique(set(&[0, 2])));
        assert_eq!(g.find_supercliques(), vec![set(&[0, 2]), set(&[1, 2])]);
        assert_eq!(g.naive_supercliques().unwrap(), g.find_supercliques());
    }

    #[test]
    fn gamma_of_example_flats() {
        let g = SimpleGraph::gamma(&example_flats());
        // K4 minus the edge 12
        assert_eq!(g.edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(!g.is_superclique(set(&[2, 3])));
        assert!(g.find_supercliques().is_empty());
        assert!(g.naive_supercliques().unwrap().is_empty());
    }

    #[test]
    fn trivial_cases() {
        let g = SimpleGraph::new(labels("a b c"), &[]).unwrap();
        assert!(g.find_supercliques().is_empty());
        assert!(!g.is_superclique(set(&[0])));
        assert!(!g.is_superclique(IndexSet::EMPTY));
        let k3 = SimpleGraph::new(labels("a b c"), &[(0, 1), (1, 2), (0, 2)]).unwrap();
        // the whole vertex set of a complete graph qualifies
        assert_eq!(k3.find_supercliques(), vec![k3.vertices()]);
        assert!(SimpleGraph::new(labels("a"), &[(0, 0)]).is_err());
    }

    #[test]
    fn height3_criterion() {
        let v = realizable_height3(&six_element()).unwrap();
        assert!(!v.realizable);
        assert_eq!(v.witness(), Some(&[1, 3][..]));
        let v = realizable_height3(&example_flats()).unwrap();
        assert!(v.realizable);
        assert_eq!(v.witness(), None);
        let cube = FiniteLattice::power_set(&["a", "b", "c"]).unwrap();
        assert!(SimpleGraph::gamma(&cube).edges().is_empty());
        assert!(realizable_height3(&cube).unwrap().realizable);
        let chain = FiniteLattice::chain(3).unwrap();
        assert_eq!(realizable_height3(&chain).unwrap_err(), Error::WrongHeight(2));
    }

    #[test]
    fn naive_limit() {
        let g = SimpleGraph::new((0..17).map(|i| i.to_string()).collect(), &[]).unwrap();
        assert!(matches!(
            g.naive_supercliques().unwrap_err(),
            Error::LimitExceeded { .. }
        ));
    }
}
