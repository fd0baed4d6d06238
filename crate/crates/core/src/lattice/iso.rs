use super::FiniteLattice;

/// An order isomorphism between two lattices: `map[x]` is the image of
/// element `x` of the source lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeIso {
    pub map: Vec<usize>,
}

impl LatticeIso {
    pub fn identity(n: usize) -> Self {
        LatticeIso { map: (0..n).collect() }
    }

    /// Checks that `map` is a bijection with `x ≤ y ⇔ map(x) ≤ map(y)`.
    pub fn is_valid(&self, from: &FiniteLattice, to: &FiniteLattice) -> bool {
        let n = from.len();
        if self.map.len() != n || to.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &m in &self.map {
            if m >= n || std::mem::replace(&mut hit[m], true) {
                return false;
            }
        }
        (0..n).all(|x| (0..n).all(|y| from.leq(x, y) == to.leq(self.map[x], self.map[y])))
    }
}

/// Per-element invariant preserved by every isomorphism.
fn signatures(l: &FiniteLattice) -> Vec<(usize, usize, usize, bool)> {
    let n = l.len();
    let depth = l.depths();
    (0..n)
        .map(|x| {
            let down = (0..n).filter(|&y| l.leq(y, x)).count();
            let up = (0..n).filter(|&y| l.leq(x, y)).count();
            (down, up, depth[x], l.is_atom(x))
        })
        .collect()
}

/// Finds an order isomorphism from `a` to `b`, if one exists.
///
/// Elements are matched only against elements with the same down-set size,
/// up-set size, depth and atom status; the rest is backtracking.
pub fn isomorphism(a: &FiniteLattice, b: &FiniteLattice) -> Option<LatticeIso> {
    let n = a.len();
    if n != b.len() || a.atoms().len() != b.atoms().len() || a.height() != b.height() {
        return None;
    }
    let sa = signatures(a);
    let sb = signatures(b);
    let mut pa = sa.clone();
    let mut pb = sb.clone();
    pa.sort_unstable();
    pb.sort_unstable();
    if pa != pb {
        return None;
    }

    // place rare signatures first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (sa.iter().filter(|s| **s == sa[x]).count(), x));

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(a, b, &sa, &sb, &order, 0, &mut map, &mut used) {
        Some(LatticeIso { map })
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &FiniteLattice,
    b: &FiniteLattice,
    sa: &[(usize, usize, usize, bool)],
    sb: &[(usize, usize, usize, bool)],
    order: &[usize],
    pos: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&x) = order.get(pos) else {
        return true;
    };
    for y in 0..b.len() {
        if used[y] || sb[y] != sa[x] {
            continue;
        }
        let consistent = order[..pos].iter().all(|&u| {
            let v = map[u];
            a.leq(u, x) == b.leq(v, y) && a.leq(x, u) == b.leq(y, v)
        });
        if !consistent {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if extend(a, b, sa, sb, order, pos + 1, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}
