//! Realizing lattices as lattices of flats.
//!
//! For an atomistic lattice `L` the canonical complex `T_L` lives on the
//! atoms of `L`; its faces are the transversals of chains of `L`. `L` is the
//! lattice of flats of some boolean representable complex exactly when
//! `Fl T_L` has as many elements as `L`. Separately, [`lsc_construct`]
//! builds, for any finite lattice, a (not necessarily representable) complex
//! whose lattice of flats is isomorphic to it.

use std::collections::HashSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Limits, Result};
use crate::flats::FlatFamily;
use crate::graph::realizable_height3;
use crate::lattice::{isomorphism, FiniteLattice, LatticeIso};
use crate::set::IndexSet;

/// Largest atom set handed to [`oracle_transversal_chain`].
pub const ORACLE_MAX_ATOMS: usize = 8;

/// An enumeration `a_1..a_m` of atoms with a chain `x_0 < x_1 < ... < x_m`
/// of `L` such that `a_i ≤ x_i` and `a_i ≰ x_{i-1}`. All entries are element
/// indices of the lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainWitness {
    pub ordering: Vec<usize>,
    pub chain: Vec<usize>,
}

/// `T_L = (At(L), T_L)` together with its source lattice.
#[derive(Debug, Clone)]
pub struct CanonicalComplex {
    lattice: FiniteLattice,
    atoms: Vec<usize>,
    complex: SimplicialComplex,
    tags: Vec<ChainWitness>,
}

fn not_atomistic(l: &FiniteLattice) -> Result<()> {
    match l.non_atomistic_element() {
        Some(x) => Err(Error::NotAtomistic(l.label(x).to_string())),
        None => Ok(()),
    }
}

/// Builds `T_L`. A set of atoms is a face iff it admits an enumeration with
/// `a_i ≰ a_1 ∨ ... ∨ a_{i-1}`: taking `x_i` to be the join of the first `i`
/// atoms turns such an enumeration into a chain witness, and any chain
/// witness has `a_1 ∨ ... ∨ a_{i-1} ≤ x_{i-1}`, which `a_i` avoids.
pub fn transversal_complex(l: &FiniteLattice, limits: &Limits) -> Result<CanonicalComplex> {
    not_atomistic(l)?;
    let atoms = l.atoms();
    let k = atoms.len();
    Limits::check("atoms of the canonical complex", k, limits.flat_vertices)?;
    let size = 1usize << k;

    // join of each atom set, built from the set minus its lowest member
    let mut join = vec![l.bottom(); size];
    let mut good = vec![false; size];
    good[0] = true;
    for s in 1..size {
        let low = s.trailing_zeros() as usize;
        join[s] = l.join(join[s & (s - 1)], atoms[low]);
        good[s] = (0..k).any(|i| {
            let rest = s & !(1 << i);
            s >> i & 1 == 1 && good[rest] && !l.leq(atoms[i], join[rest])
        });
    }
    let facets: Vec<IndexSet> = (0..size)
        .filter(|&s| good[s] && (0..k).all(|i| s >> i & 1 == 1 || !good[s | 1 << i]))
        .map(|s| IndexSet::from_bits(s as u64))
        .collect();
    let labels = atoms.iter().map(|&a| l.label(a).to_string()).collect();
    let complex = SimplicialComplex::from_index_faces(labels, facets)?;
    let mut tl = CanonicalComplex {
        lattice: l.clone(),
        atoms,
        complex,
        tags: Vec::new(),
    };
    tl.tags = tl
        .complex
        .facets()
        .iter()
        .map(|&f| tl.chain_witness(f).expect("facet of T_L has a chain witness"))
        .collect();
    Ok(tl)
}

impl CanonicalComplex {
    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    /// Element indices of the atoms; vertex `i` of the complex is `atoms()[i]`.
    pub fn atoms(&self) -> &[usize] {
        &self.atoms
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// A chain witness for each facet, in facet order.
    pub fn facet_witnesses(&self) -> &[ChainWitness] {
        &self.tags
    }

    /// `xξ` as a vertex set of the complex.
    pub fn xi_set(&self, x: usize) -> IndexSet {
        (0..self.atoms.len())
            .filter(|&i| self.lattice.leq(self.atoms[i], x))
            .collect()
    }

    /// Join in `L` of a set of atoms given as complex vertices.
    pub fn join_of(&self, s: IndexSet) -> usize {
        self.lattice.join_all(s.iter().map(|i| self.atoms[i]))
    }

    /// Chain witness for a set of atoms (complex vertices), choosing the
    /// smallest eligible atom first.
    pub fn chain_witness(&self, a: IndexSet) -> Option<ChainWitness> {
        let mut dead = HashSet::new();
        let mut order = Vec::new();
        if !self.extend(a, IndexSet::EMPTY, &mut order, &mut dead) {
            return None;
        }
        let l = &self.lattice;
        let mut chain = vec![l.bottom()];
        let mut x = l.bottom();
        for &i in &order {
            x = l.join(x, self.atoms[i]);
            chain.push(x);
        }
        Some(ChainWitness {
            ordering: order.iter().map(|&i| self.atoms[i]).collect(),
            chain,
        })
    }

    fn extend(&self, target: IndexSet, prefix: IndexSet, order: &mut Vec<usize>, dead: &mut HashSet<IndexSet>) -> bool {
        if prefix == target {
            return true;
        }
        if dead.contains(&prefix) {
            return false;
        }
        let j = self.join_of(prefix);
        for i in target.difference(prefix).iter() {
            if self.lattice.leq(self.atoms[i], j) {
                continue;
            }
            order.push(i);
            if self.extend(target, prefix.with(i), order, dead) {
                return true;
            }
            order.pop();
        }
        dead.insert(prefix);
        false
    }

    /// A flat `F` of `T_L` with `(∨F)ξ ⊄ F`. `None` exactly when `L` is
    /// realizable.
    pub fn join_closure_violation(&self, flats: &FlatFamily) -> Option<IndexSet> {
        flats
            .flats()
            .iter()
            .copied()
            .find(|&f| !self.xi_set(self.join_of(f)).is_subset(f))
    }
}

/// Brute-force chain check straight from the definition: tries every
/// enumeration of `atoms` against every chain of `L`, comparing the sets
/// `xξ` directly.
pub fn oracle_transversal_chain(l: &FiniteLattice, atoms: &[usize]) -> Result<bool> {
    Limits::check("oracle atom set", atoms.len(), ORACLE_MAX_ATOMS)?;
    let xi: Vec<HashSet<usize>> = (0..l.len()).map(|x| l.xi(x).into_iter().collect()).collect();
    let m = atoms.len();
    Ok(atoms.iter().copied().permutations(m).any(|order| {
        (0..l.len()).any(|x0| order.first().is_none_or(|a| !xi[x0].contains(a)) && chain_from(l, &xi, &order, 0, x0))
    }))
}

fn chain_from(l: &FiniteLattice, xi: &[HashSet<usize>], order: &[usize], i: usize, x: usize) -> bool {
    if i == order.len() {
        return true;
    }
    (0..l.len()).any(|y| {
        l.lt(x, y)
            && xi[y].contains(&order[i])
            && order.get(i + 1).is_none_or(|next| !xi[y].contains(next))
            && chain_from(l, xi, order, i + 1, y)
    })
}

/// How a realizability decision was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// The lattice is not atomistic, which rules it out.
    Atomisticity,
    /// Atomistic lattices of height at most 2 are always realizable.
    Height2,
    /// Height equal to the number of atoms: realizable iff Boolean.
    Boolean,
    /// Height 3: realizable iff `Γ_L` has no supercliques.
    Height3,
    /// Compare `|Fl T_L|` with `|L|`.
    General,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Atomisticity => "atomisticity",
            Method::Height2 => "height2",
            Method::Boolean => "boolean",
            Method::Height3 => "height3",
            Method::General => "general",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    NonAtomistic { element: usize },
    Height { height: usize },
    BooleanCheck { atoms: usize, size: usize, boolean: bool },
    Supercliques(Vec<Vec<usize>>),
    FlatCount { flats: usize, size: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizabilityReport {
    pub atomistic: bool,
    pub method: Method,
    /// The method the caller asked for, when one was forced.
    pub requested: Option<Method>,
    pub realizable: bool,
    pub evidence: Evidence,
}

/// Decides realizability, taking the cheapest applicable shortcut.
pub fn is_realizable(l: &FiniteLattice, limits: &Limits) -> Result<RealizabilityReport> {
    decide(l, None, limits)
}

/// Decides realizability with a fixed method. Fails with
/// [`Error::MethodNotApplicable`] when the method's hypothesis on the
/// height does not hold.
pub fn is_realizable_by(l: &FiniteLattice, method: Method, limits: &Limits) -> Result<RealizabilityReport> {
    decide(l, Some(method), limits)
}

fn decide(l: &FiniteLattice, requested: Option<Method>, limits: &Limits) -> Result<RealizabilityReport> {
    let height = l.height();
    let n_atoms = l.atoms().len();
    let not_applicable = |m: Method, reason: String| Error::MethodNotApplicable {
        method: m.name(),
        reason,
    };
    match requested {
        Some(m @ Method::Height2) if height > 2 => return Err(not_applicable(m, format!("height is {height}"))),
        Some(m @ Method::Boolean) if height != n_atoms => {
            return Err(not_applicable(
                m,
                format!("height {height} differs from {n_atoms} atoms"),
            ))
        }
        Some(m @ Method::Height3) if height != 3 => return Err(not_applicable(m, format!("height is {height}"))),
        _ => {}
    }

    let report = |method, realizable, evidence| RealizabilityReport {
        atomistic: true,
        method,
        requested,
        realizable,
        evidence,
    };
    if let Some(x) = l.non_atomistic_element() {
        return Ok(RealizabilityReport {
            atomistic: false,
            method: Method::Atomisticity,
            requested,
            realizable: false,
            evidence: Evidence::NonAtomistic { element: x },
        });
    }

    let method = requested.unwrap_or(if height <= 2 {
        Method::Height2
    } else if height == n_atoms {
        Method::Boolean
    } else if height == 3 {
        Method::Height3
    } else {
        Method::General
    });

    Ok(match method {
        Method::Height2 => report(method, true, Evidence::Height { height }),
        Method::Boolean => {
            let boolean = l.is_boolean();
            report(
                method,
                boolean,
                Evidence::BooleanCheck {
                    atoms: n_atoms,
                    size: l.len(),
                    boolean,
                },
            )
        }
        Method::Height3 => {
            let v = realizable_height3(l)?;
            report(method, v.realizable, Evidence::Supercliques(v.supercliques))
        }
        Method::General | Method::Atomisticity if l.is_trivial() => {
            // Fl of (V, {∅}) is the one-element lattice
            report(Method::General, true, Evidence::FlatCount { flats: 1, size: 1 })
        }
        Method::General | Method::Atomisticity => {
            let tl = transversal_complex(l, limits)?;
            let flats = FlatFamily::compute(tl.complex(), limits)?.len();
            report(
                Method::General,
                flats == l.len(),
                Evidence::FlatCount { flats, size: l.len() },
            )
        }
    })
}

/// The `L × At(L)` matrix with entry 0 where the row element lies above the
/// column atom and 1 elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanMatrix {
    pub row_labels: Vec<String>,
    pub column_labels: Vec<String>,
    pub rows: Vec<Vec<u8>>,
}

impl BooleanMatrix {
    /// Rows as strings of `0`/`1`, one per line.
    pub fn to_text(&self) -> String {
        self.rows
            .iter()
            .map(|r| r.iter().map(|b| char::from(b'0' + b)).collect::<String>() + "\n")
            .collect()
    }
}

pub fn boolean_matrix(l: &FiniteLattice) -> Result<BooleanMatrix> {
    not_atomistic(l)?;
    let atoms = l.atoms();
    let rows: Vec<Vec<u8>> = (0..l.len())
        .map(|x| atoms.iter().map(|&a| u8::from(!l.leq(a, x))).collect())
        .collect();
    let distinct: HashSet<&Vec<u8>> = rows.iter().collect();
    assert_eq!(distinct.len(), rows.len(), "rows of an atomistic lattice are distinct");
    Ok(BooleanMatrix {
        row_labels: l.labels().to_vec(),
        column_labels: atoms.iter().map(|&a| l.label(a).to_string()).collect(),
        rows,
    })
}

/// A complex whose lattice of flats is predicted to be isomorphic to a
/// given lattice.
#[derive(Debug, Clone)]
pub struct LscConstruction {
    pub complex: SimplicialComplex,
    /// For each element `a` of the lattice, the flat it should map to:
    /// all copies of the non-bottom elements below `a`.
    pub predicted: Vec<IndexSet>,
}

/// Builds the three-copies complex for `l`.
///
/// Vertices are `a^1, a^2, a^3` for each non-bottom `a`. The faces are the
/// sets `X` containing at most one copy of each element, plus the sets
/// `X ∪ {a^1, a^2}` where `a` lies above no element `p` of `Xπ` and no join
/// `a ∨ p` equals another element `q` of `Xπ`.
pub fn lsc_construct(l: &FiniteLattice) -> Result<LscConstruction> {
    if l.is_trivial() {
        let complex = SimplicialComplex::from_index_faces(vec!["v".to_string()], [])?;
        return Ok(LscConstruction {
            complex,
            predicted: vec![IndexSet::singleton(0)],
        });
    }
    let b = l.bottom();
    let elems: Vec<usize> = (0..l.len()).filter(|&x| x != b).collect();
    let m = elems.len();
    if 3 * m > crate::set::MAX_INDEX {
        return Err(Error::LimitExceeded {
            what: "construction vertices",
            size: 3 * m,
            limit: crate::set::MAX_INDEX,
        });
    }
    let vertex = |pos: usize, copy: usize| 3 * pos + copy;
    let labels = elems
        .iter()
        .flat_map(|&x| (1..=3).map(move |i| format!("{}^{}", l.label(x), i)))
        .collect();
    let ground = IndexSet::full(3 * m);

    // alpha(P): elements a with p ≰ a and a ∨ p ≠ q for all p ≠ q in P
    let alpha = |p: &[usize]| -> Vec<usize> {
        (0..m)
            .filter(|&a| {
                p.iter().all(|&pi| !l.leq(elems[pi], elems[a]))
                    && p.iter()
                        .all(|&pi| p.iter().all(|&qi| pi == qi || l.join(elems[a], elems[pi]) != elems[qi]))
            })
            .collect()
    };

    let mut faces = Vec::new();
    // choice[pos] = 0 (absent) or copy 1..=3
    for code in 0..4usize.pow(m as u32) {
        let mut x = IndexSet::EMPTY;
        let mut image = Vec::new();
        let mut c = code;
        for pos in 0..m {
            let choice = c % 4;
            c /= 4;
            if choice > 0 {
                x.insert(vertex(pos, choice - 1));
                image.push(pos);
            }
        }
        if x == ground {
            continue;
        }
        faces.push(x);
        for a in alpha(&image) {
            faces.push(x.with(vertex(a, 0)).with(vertex(a, 1)));
        }
    }
    let complex = SimplicialComplex::from_index_faces(labels, faces)?;

    let predicted = (0..l.len())
        .map(|a| {
            (0..m)
                .filter(|&pos| l.leq(elems[pos], a))
                .flat_map(|pos| (0..3).map(move |i| vertex(pos, i)))
                .collect()
        })
        .collect();
    Ok(LscConstruction { complex, predicted })
}

/// Runs [`lsc_construct`], computes the flats of the result and checks that
/// the predicted map is a lattice isomorphism onto them.
pub fn verify_lsc(l: &FiniteLattice, limits: &Limits) -> Result<LatticeIso> {
    let built = lsc_construct(l)?;
    let fam = FlatFamily::compute(&built.complex, limits)?;
    let mismatch = |msg: String| Err(Error::ConstructionMismatch(msg));
    if fam.len() != l.len() {
        return mismatch(format!("{} flats for a lattice of {} elements", fam.len(), l.len()));
    }
    let mut map = Vec::with_capacity(l.len());
    for (a, &f) in built.predicted.iter().enumerate() {
        match fam.position(f) {
            Some(i) => map.push(i),
            None => return mismatch(format!("predicted image of `{}` is not a flat", l.label(a))),
        }
    }
    let iso = LatticeIso { map };
    if !iso.is_valid(l, fam.lattice()) {
        return mismatch("predicted map is not an order isomorphism".into());
    }
    if isomorphism(l, fam.lattice()).is_none() {
        return mismatch("isomorphism search disagrees with the predicted map".into());
    }
    Ok(iso)
}
