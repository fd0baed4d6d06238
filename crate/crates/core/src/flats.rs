//! Flats, closure, the lattice of flats, transversals of successive
//! differences and boolean representability.

use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use itertools::Itertools;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Limits, Result};
use crate::lattice::FiniteLattice;
use crate::set::IndexSet;

/// Largest set handed to the brute-force transversal oracle.
pub const ORACLE_MAX_SET: usize = 8;

/// Largest complex scanned by the brute-force oracles.
pub const ORACLE_MAX_VERTICES: usize = 16;

/// Literal flat predicate: every face `I ⊆ X` extends to a face `I ∪ {p}`
/// for every `p ∉ X`.
pub fn is_flat(c: &SimplicialComplex, x: IndexSet) -> bool {
    let outside = c.vertices().difference(x);
    x.subsets()
        .filter(|&i| c.is_face(i))
        .all(|i| outside.iter().all(|p| c.is_face(i.with(p))))
}

/// Formats a vertex set as `{a,b}`; `{}` for the empty set.
pub fn set_label(c: &SimplicialComplex, x: IndexSet) -> String {
    format!("{{{}}}", c.set_labels(x).join(","))
}

/// An enumeration `x_1, ..., x_k` of a set together with a chain of flats
/// `F_0 ⊂ F_1 ⊂ ... ⊂ F_k` such that `x_i ∈ F_i \ F_{i-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalWitness {
    pub ordering: Vec<usize>,
    pub chain: Vec<IndexSet>,
}

impl TransversalWitness {
    /// Checks the witness against an explicit list of flats.
    pub fn is_valid_for(&self, flats: &HashSet<IndexSet>) -> bool {
        self.chain.len() == self.ordering.len() + 1
            && self.chain.iter().all(|f| flats.contains(f))
            && self.chain.windows(2).all(|w| w[0].is_proper_subset(w[1]))
            && self
                .ordering
                .iter()
                .enumerate()
                .all(|(i, &x)| self.chain[i + 1].contains(x) && !self.chain[i].contains(x))
    }
}

/// The flats of a complex, with the tables needed for fast closure.
pub struct FlatFamily {
    complex: SimplicialComplex,
    flats: Vec<IndexSet>,
    // escape[X]: vertices p such that some face I ⊆ X has I ∪ {p} ∉ H
    escape: Vec<u32>,
    lattice: OnceLock<FiniteLattice>,
}

impl std::fmt::Debug for FlatFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FlatFamily")
            .field("complex", &self.complex)
            .field("flats", &self.flat_labels())
            .finish()
    }
}

impl FlatFamily {
    /// Scans all `2^|V|` subsets.
    ///
    /// Two subset-sum passes do the work: the first closes the facets
    /// downwards into a face table, the second pushes "this face does not
    /// extend by `p`" upwards to every superset. A set `X` is then a flat
    /// exactly when nothing outside `X` is flagged at `X`.
    pub fn compute(c: &SimplicialComplex, limits: &Limits) -> Result<Self> {
        let n = c.vertex_count();
        Limits::check("flat scan vertices", n, limits.flat_vertices.min(32))?;
        let size = 1usize << n;

        let mut face = vec![false; size];
        for f in c.facets() {
            face[f.bits() as usize] = true;
        }
        for b in 0..n {
            let bit = 1usize << b;
            for x in 0..size {
                if x & bit == 0 && face[x | bit] {
                    face[x] = true;
                }
            }
        }

        let mut escape = vec![0u32; size];
        for (x, slot) in escape.iter_mut().enumerate() {
            if face[x] {
                *slot = (0..n)
                    .filter(|&p| x >> p & 1 == 0 && !face[x | 1 << p])
                    .fold(0u32, |m, p| m | 1 << p);
            }
        }
        for b in 0..n {
            let bit = 1usize << b;
            for x in 0..size {
                if x & bit != 0 {
                    escape[x] |= escape[x ^ bit];
                }
            }
        }

        let mut flats: Vec<IndexSet> = (0..size)
            .filter(|&x| escape[x] as usize & !x == 0)
            .map(|x| IndexSet::from_bits(x as u64))
            .collect();
        flats.sort_by_key(|f| (f.len(), f.bits()));
        Ok(FlatFamily {
            complex: c.clone(),
            flats,
            escape,
            lattice: OnceLock::new(),
        })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// Flats ordered by size, then bitmask.
    pub fn flats(&self) -> &[IndexSet] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn contains(&self, x: IndexSet) -> bool {
        (x.bits() as usize) < self.escape.len() && self.escape[x.bits() as usize] as u64 & !x.bits() == 0
    }

    pub fn flat_labels(&self) -> Vec<String> {
        self.flats.iter().map(|&f| set_label(&self.complex, f)).collect()
    }

    /// Smallest flat containing `x`. Computed as a fixpoint: any flat
    /// containing `x` must also contain every vertex flagged at `x`.
    pub fn closure(&self, x: IndexSet) -> IndexSet {
        let mut x = x.intersection(self.complex.vertices()).bits() as usize;
        loop {
            let add = self.escape[x] as usize & !x;
            if add == 0 {
                return IndexSet::from_bits(x as u64);
            }
            x |= add;
        }
    }

    /// Intersection of all flats containing `x`, by definition.
    pub fn closure_by_intersection(&self, x: IndexSet) -> IndexSet {
        self.flats
            .iter()
            .filter(|f| x.is_subset(**f))
            .fold(self.complex.vertices(), |acc, f| acc.intersection(*f))
    }

    /// The flats ordered by inclusion, labelled by [`set_label`].
    pub fn lattice(&self) -> &FiniteLattice {
        self.lattice.get_or_init(|| {
            let flats = &self.flats;
            FiniteLattice::from_order_fn(self.flat_labels(), |i, j| flats[i].is_subset(flats[j]))
                .expect("flats of a complex form a lattice")
        })
    }

    /// Index of flat `f` in [`Self::flats`] (and in [`Self::lattice`]).
    pub fn position(&self, f: IndexSet) -> Option<usize> {
        self.flats
            .binary_search_by_key(&(f.len(), f.bits()), |g| (g.len(), g.bits()))
            .ok()
    }

    /// Searches for an enumeration with `x_i ∉ closure(x_1, ..., x_{i-1})`.
    ///
    /// Such an enumeration exists exactly when `x` is a transversal of the
    /// successive differences of some chain of flats: given a chain, the
    /// prefix `x_1..x_{i-1}` lies in `F_{i-1}`, so its closure does too and
    /// misses `x_i`; conversely `F_i = closure(x_1..x_i)` is a strictly
    /// increasing chain of flats with `x_i ∈ F_i \ F_{i-1}`.
    ///
    /// The depth-first search tries vertices in ascending order, so the
    /// witness is the lexicographically least valid enumeration.
    pub fn transversal_witness(&self, x: IndexSet) -> Option<TransversalWitness> {
        if !x.is_subset(self.complex.vertices()) || !self.complex.is_face(x) {
            return None;
        }
        let mut dead = HashSet::new();
        let mut ordering = Vec::with_capacity(x.len());
        if !self.extend_ordering(x, IndexSet::EMPTY, &mut ordering, &mut dead) {
            return None;
        }
        let mut chain = vec![self.closure(IndexSet::EMPTY)];
        let mut prefix = IndexSet::EMPTY;
        for &v in &ordering {
            prefix.insert(v);
            chain.push(self.closure(prefix));
        }
        Some(TransversalWitness { ordering, chain })
    }

    fn extend_ordering(
        &self,
        target: IndexSet,
        prefix: IndexSet,
        ordering: &mut Vec<usize>,
        dead: &mut HashSet<IndexSet>,
    ) -> bool {
        if prefix == target {
            return true;
        }
        if dead.contains(&prefix) {
            return false;
        }
        let cl = self.closure(prefix);
        for v in target.difference(prefix).iter() {
            if cl.contains(v) {
                continue;
            }
            ordering.push(v);
            if self.extend_ordering(target, prefix.with(v), ordering, dead) {
                return true;
            }
            ordering.pop();
        }
        dead.insert(prefix);
        false
    }

    /// A face that is not a transversal of the successive differences of
    /// any chain of flats, or `None` when the complex is boolean
    /// representable.
    ///
    /// Only facets are tested: dropping elements from a transversal and
    /// the matching steps from its chain leaves a transversal, so every
    /// face is one as soon as every facet is.
    pub fn non_representable_face(&self) -> Option<IndexSet> {
        self.complex
            .facets()
            .iter()
            .copied()
            .find(|&f| self.transversal_witness(f).is_none())
    }

    pub fn is_boolean_representable(&self) -> bool {
        self.non_representable_face().is_none()
    }

    /// Quotient by `p ~ q ⇔ closure{p} = closure{q}`, with the classes
    /// ordered by their least vertex. Requires every vertex to be a face.
    pub fn simplification(&self) -> Result<(SimplicialComplex, Vec<IndexSet>)> {
        let c = &self.complex;
        let loops = c.loops();
        if !loops.is_empty() {
            return Err(Error::LoopsPresent(
                c.set_labels(loops).into_iter().map(String::from).collect(),
            ));
        }
        let mut by_closure: BTreeMap<IndexSet, IndexSet> = BTreeMap::new();
        for v in c.vertices().iter() {
            by_closure
                .entry(self.closure(IndexSet::singleton(v)))
                .or_default()
                .insert(v);
        }
        let mut classes: Vec<IndexSet> = by_closure.into_values().collect();
        classes.sort_by_key(|k| k.first());
        let mut class_of = vec![0; c.vertex_count()];
        for (k, class) in classes.iter().enumerate() {
            for v in class.iter() {
                class_of[v] = k;
            }
        }
        let labels = classes.iter().map(|k| c.set_labels(*k).join("+")).collect();
        let faces = c.facets().iter().map(|f| SimplicialComplex::map_set(&class_of, *f));
        let quotient = SimplicialComplex::from_index_faces(labels, faces)?;
        Ok((quotient, classes))
    }
}

/// All flats of `c` under the default limits.
pub fn all_flats(c: &SimplicialComplex) -> Result<FlatFamily> {
    FlatFamily::compute(c, &Limits::default())
}

pub fn closure(c: &SimplicialComplex, x: IndexSet) -> Result<IndexSet> {
    Ok(all_flats(c)?.closure(x))
}

pub fn is_transversal(c: &SimplicialComplex, x: IndexSet) -> Result<Option<TransversalWitness>> {
    Ok(all_flats(c)?.transversal_witness(x))
}

pub fn is_boolean_representable(c: &SimplicialComplex) -> Result<Option<IndexSet>> {
    Ok(all_flats(c)?.non_representable_face())
}

pub fn simplification(c: &SimplicialComplex) -> Result<(SimplicialComplex, Vec<IndexSet>)> {
    all_flats(c)?.simplification()
}

pub fn flats_lattice(c: &SimplicialComplex) -> Result<FiniteLattice> {
    Ok(all_flats(c)?.lattice().clone())
}

/// Every vertex subset passing [`is_flat`], in bitmask order.
pub fn oracle_flats(c: &SimplicialComplex) -> Result<Vec<IndexSet>> {
    Limits::check("oracle flat scan vertices", c.vertex_count(), ORACLE_MAX_VERTICES)?;
    Ok(c.vertices().subsets().filter(|&s| is_flat(c, s)).collect())
}

/// Brute-force transversal test straight from the definition: flats come
/// from the literal predicate, and every enumeration of `x` is tried
/// against every chain of flats.
pub fn oracle_is_transversal(c: &SimplicialComplex, x: IndexSet) -> Result<bool> {
    Limits::check("oracle transversal set", x.len(), ORACLE_MAX_SET)?;
    let flats = oracle_flats(c)?;
    let members: Vec<usize> = x.iter().collect();
    let k = members.len();
    Ok(members.iter().copied().permutations(k).any(|order| {
        flats
            .iter()
            .any(|&f0| order.first().is_none_or(|&x1| !f0.contains(x1)) && chain_from(&flats, &order, 0, f0))
    }))
}

// f is F_i; pick F_{i+1} ⊋ F_i holding order[i] but not order[i+1]
fn chain_from(flats: &[IndexSet], order: &[usize], i: usize, f: IndexSet) -> bool {
    if i == order.len() {
        return true;
    }
    flats.iter().any(|&g| {
        f.is_proper_subset(g)
            && g.contains(order[i])
            && order.get(i + 1).is_none_or(|&next| !g.contains(next))
            && chain_from(flats, order, i + 1, g)
    })
}
