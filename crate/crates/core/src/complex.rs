//! Abstract simplicial complexes (hereditary collections), stored by facets.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::set::{IndexSet, MAX_INDEX};

/// A finite simplicial complex `(V, H)`.
///
/// `H` is represented by its facets (maximal faces), which form an antichain
/// sorted by bitmask. The empty set is always a face; a vertex need not be
/// (such vertices are loops).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    facets: Vec<IndexSet>,
}

/// A vertex bijection between two complexes mapping faces onto faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexIso {
    pub map: Vec<usize>,
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let facets: Vec<_> = self.facets.iter().map(|&x| self.set_labels(x).join("")).collect();
        f.debug_struct("SimplicialComplex")
            .field("vertices", &self.labels)
            .field("facets", &facets)
            .finish()
    }
}

/// Maximal elements of `sets` (plus the empty set), sorted by bitmask.
fn maximal(sets: impl IntoIterator<Item = IndexSet>) -> Vec<IndexSet> {
    let mut all: Vec<IndexSet> = sets.into_iter().collect::<HashSet<_>>().into_iter().collect();
    all.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut keep: Vec<IndexSet> = Vec::new();
    for s in all {
        if !keep.iter().any(|k| s.is_subset(*k)) {
            keep.push(s);
        }
    }
    if keep.is_empty() {
        keep.push(IndexSet::EMPTY);
    }
    keep.sort();
    keep
}

impl SimplicialComplex {
    /// Builds the complex generated by `faces` on the vertex set `labels`.
    /// Faces are given by vertex labels.
    pub fn from_faces<S: AsRef<str>>(labels: Vec<String>, faces: &[Vec<S>]) -> Result<Self> {
        let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mut sets = Vec::with_capacity(faces.len());
        for face in faces {
            let mut s = IndexSet::EMPTY;
            for v in face {
                let v = v.as_ref();
                s.insert(*index.get(v).ok_or_else(|| Error::UnknownVertex(v.to_string()))?);
            }
            sets.push(s);
        }
        Self::from_index_faces(labels, sets)
    }

    /// Same as [`Self::from_faces`], with faces given as index sets.
    pub fn from_index_faces(labels: Vec<String>, faces: impl IntoIterator<Item = IndexSet>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::Empty("complex needs at least one vertex"));
        }
        if labels.len() > MAX_INDEX {
            return Err(Error::LimitExceeded {
                what: "complex vertices",
                size: labels.len(),
                limit: MAX_INDEX,
            });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let ground = IndexSet::full(labels.len());
        let faces: Vec<IndexSet> = faces.into_iter().collect();
        if let Some(bad) = faces.iter().find(|f| !f.is_subset(ground)) {
            let v = bad.difference(ground).first().unwrap_or(0);
            return Err(Error::UnknownVertex(format!("#{v}")));
        }
        Ok(SimplicialComplex {
            labels,
            facets: maximal(faces),
        })
    }

    /// `(V, P≤k(V))`, all subsets with at most `k` elements.
    pub fn uniform(labels: Vec<String>, k: usize) -> Result<Self> {
        let n = labels.len();
        if n > 20 {
            return Err(Error::LimitExceeded {
                what: "uniform complex vertices",
                size: n,
                limit: 20,
            });
        }
        let faces = IndexSet::full(n).subsets().filter(|s| s.len() == k.min(n));
        Self::from_index_faces(labels, faces)
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

    pub fn facets(&self) -> &[IndexSet] {
        &self.facets
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Resolves vertex labels into an index set.
    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<IndexSet> {
        labels
            .iter()
            .map(|l| {
                self.index_of(l.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(l.as_ref().to_string()))
            })
            .collect()
    }

    /// Labels of the members of `x`, in vertex order.
    pub fn set_labels(&self, x: IndexSet) -> Vec<&str> {
        x.iter().map(|v| self.labels[v].as_str()).collect()
    }

    pub fn is_face(&self, x: IndexSet) -> bool {
        self.facets.iter().any(|f| x.is_subset(*f))
    }

    /// Every face, ordered by size and then by bitmask.
    pub fn faces(&self) -> Vec<IndexSet> {
        let mut all: HashSet<IndexSet> = HashSet::new();
        for f in &self.facets {
            all.extend(f.subsets());
        }
        let mut out: Vec<_> = all.into_iter().collect();
        out.sort_by_key(|s| (s.len(), s.bits()));
        out
    }

    /// Vertices `p` with `{p}` not a face.
    pub fn loops(&self) -> IndexSet {
        let covered = self.facets.iter().fold(IndexSet::EMPTY, |acc, f| acc.union(*f));
        self.vertices().difference(covered)
    }

    /// `H|_W = (W, H ∩ 2^W)`. Vertices of the result are renumbered in the
    /// order they have in `self`.
    pub fn restriction(&self, w: IndexSet) -> Result<SimplicialComplex> {
        let w = w.intersection(self.vertices());
        if w.is_empty() {
            return Err(Error::EmptyRestriction);
        }
        let labels = w.iter().map(|v| self.labels[v].clone()).collect();
        let faces = self.facets.iter().map(|f| f.intersection(w).compress(w));
        Self::from_index_faces(labels, faces)
    }

    /// Restriction to the non-loop vertices, together with the removed loops.
    pub fn proper_part(&self) -> Result<(SimplicialComplex, IndexSet)> {
        let loops = self.loops();
        let keep = self.vertices().difference(loops);
        if keep.is_empty() {
            return Err(Error::AllLoops);
        }
        Ok((self.restriction(keep)?, loops))
    }

    /// First pair `(I, J)` of faces with `|I| = |J| + 1` such that no
    /// `i ∈ I \ J` gives a face `J ∪ {i}`; `None` for a matroid. Pairs are
    /// scanned with `I` ordered by size then bitmask, and `J` likewise.
    pub fn matroid_violation(&self) -> Option<(IndexSet, IndexSet)> {
        let faces = self.faces();
        for &i in &faces {
            if i.is_empty() {
                continue;
            }
            for &j in faces.iter().filter(|j| j.len() + 1 == i.len()) {
                let augmentable = i.difference(j).iter().any(|x| self.is_face(j.with(x)));
                if !augmentable {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_matroid(&self) -> bool {
        self.matroid_violation().is_none()
    }

    /// Largest face size minus one; `-1` when the only face is `∅`.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    /// Whether all 2-subsets of vertices are faces.
    pub fn is_simple(&self) -> bool {
        let n = self.vertex_count();
        (0..n).all(|a| ((a + 1)..n).all(|b| self.is_face(IndexSet::singleton(a).with(b))))
    }

    /// Image of `x` under a vertex map.
    pub fn map_set(map: &[usize], x: IndexSet) -> IndexSet {
        x.iter().map(|v| map[v]).collect()
    }

    /// Finds a face-preserving vertex bijection onto `other`.
    pub fn isomorphism(&self, other: &SimplicialComplex) -> Option<ComplexIso> {
        let n = self.vertex_count();
        if n != other.vertex_count() || self.facets.len() != other.facets.len() {
            return None;
        }
        let mut sizes_a: Vec<usize> = self.facets.iter().map(|f| f.len()).collect();
        let mut sizes_b: Vec<usize> = other.facets.iter().map(|f| f.len()).collect();
        sizes_a.sort_unstable();
        sizes_b.sort_unstable();
        if sizes_a != sizes_b {
            return None;
        }
        let sig_a = self.vertex_signatures();
        let sig_b = other.vertex_signatures();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        let target: HashSet<IndexSet> = other.facets.iter().copied().collect();
        if self.extend_iso(other, &sig_a, &sig_b, &target, 0, &mut map, &mut used) {
            Some(ComplexIso { map })
        } else {
            None
        }
    }

    /// Sorted sizes of the facets through each vertex.
    fn vertex_signatures(&self) -> Vec<Vec<usize>> {
        (0..self.vertex_count())
            .map(|v| {
                let mut s: Vec<usize> = self.facets.iter().filter(|f| f.contains(v)).map(|f| f.len()).collect();
                s.sort_unstable();
                s
            })
            .collect()
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_iso(
        &self,
        other: &SimplicialComplex,
        sig_a: &[Vec<usize>],
        sig_b: &[Vec<usize>],
        target: &HashSet<IndexSet>,
        v: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if v == self.vertex_count() {
            return self.facets.iter().all(|f| target.contains(&Self::map_set(map, *f)));
        }
        for w in 0..other.vertex_count() {
            if used[w] || sig_a[v] != sig_b[w] {
                continue;
            }
            // every assigned pair must keep edge status
            let ok = (0..v).all(|u| {
                let e = IndexSet::singleton(u).with(v);
                let e2 = IndexSet::singleton(map[u]).with(w);
                self.is_face(e) == other.is_face(e2)
            });
            if !ok {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if self.extend_iso(other, sig_a, sig_b, target, v + 1, map, used) {
                return true;
            }
            used[w] = false;
        }
        map[v] = usize::MAX;
        false
    }
}

impl ComplexIso {
    /// Checks `X ∈ H ⇔ map(X) ∈ H'` for every `X ⊆ V` (exhaustive).
    pub fn is_valid(&self, from: &SimplicialComplex, to: &SimplicialComplex) -> bool {
        let n = from.vertex_count();
        if self.map.len() != n || to.vertex_count() != n {
            return false;
        }
        let image: HashSet<usize> = self.map.iter().copied().collect();
        if image.len() != n || image.iter().any(|&w| w >= n) {
            return false;
        }
        from.vertices()
            .subsets()
            .all(|x| from.is_face(x) == to.is_face(SimplicialComplex::map_set(&self.map, x)))
    }
}
