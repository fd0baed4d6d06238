use std::collections::BTreeMap;

use itertools::Itertools;

use super::FiniteLattice;
use crate::error::{Limits, Result};

/// Every lattice with at most `max_size` elements, one per isomorphism
/// class, ordered by size.
///
/// A lattice with `n ≥ 3` elements is a bounded extension of a poset on
/// `n - 2` elements. Those posets are generated with a natural labelling by
/// adding each new element on top of an order ideal of the previous ones;
/// the bounded extensions that are lattices are kept and deduplicated by a
/// canonical form (the minimal encoding over all relabellings).
///
/// Element `0` of each emitted lattice is its bottom and element `n - 1` its
/// top; labels are the decimal indices.
pub fn enumerate_lattices(max_size: usize, limits: &Limits) -> Result<Vec<FiniteLattice>> {
    Limits::check("lattice enumeration size", max_size, limits.enumeration_size)?;
    let mut out = Vec::new();
    for n in 1..=max_size {
        if n <= 2 {
            out.push(FiniteLattice::chain(n)?);
            continue;
        }
        let k = n - 2;
        let mut classes: BTreeMap<u64, FiniteLattice> = BTreeMap::new();
        for below in natural_posets(k) {
            if let Some(lattice) = bounded_extension(&below) {
                classes.entry(canonical_code(&below)).or_insert(lattice);
            }
        }
        out.extend(classes.into_values());
    }
    Ok(out)
}

/// Naturally labelled posets on `0..k`, as strict down-set masks.
fn natural_posets(k: usize) -> Vec<Vec<u64>> {
    let mut layer: Vec<Vec<u64>> = vec![Vec::new()];
    for j in 0..k {
        let mut next = Vec::new();
        for below in &layer {
            for ideal in 0u64..(1 << j) {
                let down_closed = (0..j).filter(|&i| ideal >> i & 1 == 1).all(|i| below[i] & !ideal == 0);
                if down_closed {
                    let mut b = below.clone();
                    b.push(ideal);
                    next.push(b);
                }
            }
        }
        layer = next;
    }
    layer
}

fn bounded_extension(below: &[u64]) -> Option<FiniteLattice> {
    let k = below.len();
    let n = k + 2;
    let labels = (0..n).map(|i| i.to_string()).collect();
    FiniteLattice::from_order_fn(labels, |x, y| {
        if x == y || x == 0 || y == n - 1 {
            true
        } else if y == 0 || x == n - 1 {
            false
        } else {
            below[y - 1] >> (x - 1) & 1 == 1
        }
    })
    .ok()
}

fn canonical_code(below: &[u64]) -> u64 {
    let k = below.len();
    (0..k)
        .permutations(k)
        .map(|perm| {
            // perm[i] is the new position of element i
            let mut code = 0u64;
            for (y, &mask) in below.iter().enumerate() {
                for x in 0..k {
                    if mask >> x & 1 == 1 {
                        code |= 1 << (perm[y] * k + perm[x]);
                    }
                }
            }
            code
        })
        .min()
        .unwrap_or(0)
}
