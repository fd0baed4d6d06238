//! Finite lattices given by their order relation.
//!
//! A [`FiniteLattice`] is always validated on construction: the relation is
//! checked to be a partial order and every pair of elements must have a
//! unique meet and join. Elements are addressed by index, with labels kept
//! alongside for I/O and reports.

mod enumerate;
mod iso;

pub use enumerate::enumerate_lattices;
pub use iso::{isomorphism, LatticeIso};

use std::collections::HashSet;

use crate::error::{Error, OrderAxiom, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    labels: Vec<String>,
    leq: Vec<bool>,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

/// A five-element sublattice `{a, b, c, d, e}` shaped like a pentagon, with
/// `e < c < b < a`, `e < d < a`, `d` covering `e`, `b ∧ d = c ∧ d = e` and
/// `b ∨ d = c ∨ d = a`. Its presence is what makes a lattice fail to be
/// semimodular.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pentagon {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub e: usize,
}

impl Pentagon {
    pub fn elements(&self) -> [usize; 5] {
        [self.a, self.b, self.c, self.d, self.e]
    }
}

impl std::fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let covers: Vec<_> = self
            .cover_pairs()
            .into_iter()
            .map(|(x, y)| format!("{}<{}", self.labels[x], self.labels[y]))
            .collect();
        f.debug_struct("FiniteLattice")
            .field("elements", &self.labels)
            .field("covers", &covers)
            .finish()
    }
}

impl FiniteLattice {
    /// Validates `order` (`order[i][j]` iff element `i ≤` element `j`) and
    /// fills in the meet and join tables. The input is never repaired.
    #[allow(clippy::needless_range_loop)]
    pub fn validate(order: &[Vec<bool>], labels: Vec<String>) -> Result<Self> {
        let n = order.len();
        if n == 0 {
            return Err(Error::Empty("lattice needs at least one element"));
        }
        if labels.len() != n {
            return Err(Error::Malformed(format!("{} labels for {} elements", labels.len(), n)));
        }
        if let Some(row) = order.iter().position(|r| r.len() != n) {
            return Err(Error::Malformed(format!("row {row} has wrong length")));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }

        let name = |ids: &[usize]| ids.iter().map(|&i| labels[i].clone()).collect::<Vec<_>>();
        for i in 0..n {
            if !order[i][i] {
                return Err(Error::NotAPartialOrder {
                    axiom: OrderAxiom::Reflexivity,
                    elements: name(&[i]),
                });
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if order[i][j] && order[j][i] {
                    return Err(Error::NotAPartialOrder {
                        axiom: OrderAxiom::Antisymmetry,
                        elements: name(&[i, j]),
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !order[i][j] {
                    continue;
                }
                for k in 0..n {
                    if order[j][k] && !order[i][k] {
                        return Err(Error::NotAPartialOrder {
                            axiom: OrderAxiom::Transitivity,
                            elements: name(&[i, j, k]),
                        });
                    }
                }
            }
        }

        let leq: Vec<bool> = order.iter().flatten().copied().collect();
        let le = |i: usize, j: usize| leq[i * n + j];

        // glb: a lower bound that lies above every other lower bound
        let bound = |x: usize, y: usize, lower: bool| -> Option<usize> {
            let is_bound = |z: usize| {
                if lower {
                    le(z, x) && le(z, y)
                } else {
                    le(x, z) && le(y, z)
                }
            };
            let bounds: Vec<usize> = (0..n).filter(|&z| is_bound(z)).collect();
            bounds
                .iter()
                .copied()
                .find(|&m| bounds.iter().all(|&z| if lower { le(z, m) } else { le(m, z) }))
        };

        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in x..n {
                let m = bound(x, y, true)
                    .ok_or_else(|| Error::NotALattice(labels[x].clone(), labels[y].clone(), "meet"))?;
                let j = bound(x, y, false)
                    .ok_or_else(|| Error::NotALattice(labels[x].clone(), labels[y].clone(), "join"))?;
                meet[x * n + y] = m;
                meet[y * n + x] = m;
                join[x * n + y] = j;
                join[y * n + x] = j;
            }
        }
        let bottom = (0..n).fold(0, |acc, x| meet[acc * n + x]);
        let top = (0..n).fold(0, |acc, x| join[acc * n + x]);
        Ok(FiniteLattice {
            labels,
            leq,
            meet,
            join,
            bottom,
            top,
        })
    }

    /// Builds the order as the reflexive-transitive closure of `covers`
    /// (pairs `(lower, upper)`) and validates it.
    #[allow(clippy::needless_range_loop)]
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut order = vec![vec![false; n]; n];
        for (i, row) in order.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(x, y) in covers {
            if x >= n || y >= n {
                return Err(Error::Malformed(format!("cover ({x}, {y}) out of range")));
            }
            order[x][y] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if order[i][k] {
                    for j in 0..n {
                        if order[k][j] {
                            order[i][j] = true;
                        }
                    }
                }
            }
        }
        Self::validate(&order, labels)
    }

    /// Builds a lattice from an order predicate on `0..labels.len()`.
    pub fn from_order_fn(labels: Vec<String>, le: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let order: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| le(i, j)).collect()).collect();
        Self::validate(&order, labels)
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Result<Self> {
        Self::from_order_fn((0..n).map(|i| i.to_string()).collect(), |i, j| i <= j)
    }

    /// The lattice of all subsets of `atoms` ordered by inclusion. Element
    /// `i` is the subset whose bitmask is `i`; labels list the members,
    /// with `{}` for the empty set.
    pub fn power_set(atoms: &[&str]) -> Result<Self> {
        let k = atoms.len();
        if k >= 20 {
            return Err(Error::LimitExceeded {
                what: "power set atoms",
                size: k,
                limit: 19,
            });
        }
        let labels = (0..1usize << k)
            .map(|m| {
                let parts: Vec<&str> = (0..k).filter(|b| m >> b & 1 == 1).map(|b| atoms[b]).collect();
                format!("{{{}}}", parts.join(","))
            })
            .collect();
        Self::from_order_fn(labels, |i, j| i & !j == 0)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_trivial(&self) -> bool {
        self.len() == 1
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.len() + y]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y]
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Join of a family; the empty join is the bottom.
    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of a family; the empty meet is the top.
    pub fn meet_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// `y` covers `x`: `x < y` with nothing strictly in between.
    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.lt(x, y) && !(0..self.len()).any(|z| self.lt(x, z) && self.lt(z, y))
    }

    /// All covering pairs `(lower, upper)`, in index order.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.covers(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Elements covering the bottom, in index order.
    pub fn atoms(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.covers(self.bottom, x)).collect()
    }

    pub fn is_atom(&self, x: usize) -> bool {
        self.covers(self.bottom, x)
    }

    /// Length of the longest chain from the bottom to each element.
    pub fn depths(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        // down-set size is strictly monotone along <, so this is a linear extension
        order.sort_by_key(|&x| (0..n).filter(|&y| self.leq(y, x)).count());
        let mut depth = vec![0; n];
        for (pos, &x) in order.iter().enumerate() {
            depth[x] = order[..pos]
                .iter()
                .filter(|&&y| self.lt(y, x))
                .map(|&y| depth[y] + 1)
                .max()
                .unwrap_or(0);
        }
        depth
    }

    /// Maximal length of a chain `x_0 < x_1 < ... < x_n`.
    pub fn height(&self) -> usize {
        self.depths()[self.top]
    }

    /// The atoms below `x`, in index order.
    pub fn xi(&self, x: usize) -> Vec<usize> {
        self.atoms().into_iter().filter(|&a| self.leq(a, x)).collect()
    }

    /// First element (by index) that is not the join of the atoms below it.
    pub fn non_atomistic_element(&self) -> Option<usize> {
        let atoms = self.atoms();
        (0..self.len()).find(|&x| {
            let below = atoms.iter().copied().filter(|&a| self.leq(a, x));
            self.join_all(below) != x
        })
    }

    pub fn is_atomistic(&self) -> bool {
        self.non_atomistic_element().is_none()
    }

    /// Looks for a forbidden pentagon. The search runs from the top of the
    /// lattice downwards (highest index first at every position), so the
    /// witness is deterministic for a given element order.
    pub fn semimodular_violation(&self) -> Option<Pentagon> {
        let n = self.len();
        for a in (0..n).rev() {
            for b in (0..n).rev().filter(|&b| self.lt(b, a)) {
                for c in (0..n).rev().filter(|&c| self.lt(c, b)) {
                    for d in (0..n).rev().filter(|&d| self.lt(d, a)) {
                        if d == b || d == c {
                            continue;
                        }
                        let e = self.meet(c, d);
                        if e == c || e == d || self.meet(b, d) != e {
                            continue;
                        }
                        if !self.covers(e, d) {
                            continue;
                        }
                        if self.join(b, d) == a && self.join(c, d) == a {
                            return Some(Pentagon { a, b, c, d, e });
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_semimodular(&self) -> bool {
        self.semimodular_violation().is_none()
    }

    /// The textbook cover condition: `x ∧ y ⋖ x` implies `y ⋖ x ∨ y`.
    /// Kept as a cross-check for [`Self::semimodular_violation`].
    pub fn satisfies_cover_semimodularity(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| (0..n).all(|y| !self.covers(self.meet(x, y), x) || self.covers(y, self.join(x, y))))
    }

    pub fn is_geometric(&self) -> bool {
        self.is_atomistic() && self.is_semimodular()
    }

    /// Whether the lattice is isomorphic to the power set of its atoms:
    /// atomistic, `2^|At|` elements and `xi` injective.
    pub fn is_boolean(&self) -> bool {
        let atoms = self.atoms();
        if atoms.len() >= usize::BITS as usize - 1 || self.len() != 1usize << atoms.len() {
            return false;
        }
        if !self.is_atomistic() {
            return false;
        }
        let mut images = HashSet::new();
        (0..self.len()).all(|x| images.insert(self.xi(x)))
    }
}
