mod common;

use std::collections::HashSet;

use common::*;
use flatlat::flats::{is_flat, oracle_flats, oracle_is_transversal};
use flatlat::lattice::isomorphism;
use flatlat::realize::{is_realizable, transversal_complex};
use flatlat::{FlatFamily, IndexSet, Limits, SimplicialComplex};
use proptest::prelude::*;

fn from_masks(n: usize, masks: Vec<u64>) -> SimplicialComplex {
    let labels = (1..=n).map(|i| i.to_string()).collect();
    SimplicialComplex::from_index_faces(labels, masks.into_iter().map(IndexSet::from_bits)).unwrap()
}

fn arb_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n)
        .prop_flat_map(|n| prop::collection::vec(0..(1u64 << n), 0..6).prop_map(move |masks| from_masks(n, masks)))
}

/// Sets with an enumeration `x_1, ..., x_k` such that no `x_i` lies in the
/// closure of its predecessors, closure taken in the intersection-closed
/// family generated by `sets` and `V`. Such complexes are boolean
/// representable.
fn transversals_of(n: usize, sets: &[u64]) -> SimplicialComplex {
    let full = (1u64 << n) - 1;
    let mut family: Vec<u64> = vec![full];
    for &s in sets {
        let s = s & full;
        let new: Vec<u64> = family.iter().map(|&f| f & s).chain([s]).collect();
        family.extend(new);
        family.sort_unstable();
        family.dedup();
    }
    let close = |x: u64| family.iter().filter(|&&f| f & x == x).fold(full, |acc, &f| acc & f);
    let size = 1usize << n;
    let mut good = vec![false; size];
    good[0] = true;
    for s in 1..size {
        good[s] = (0..n).any(|i| s >> i & 1 == 1 && good[s ^ 1 << i] && close((s ^ 1 << i) as u64) >> i & 1 == 0);
    }
    from_masks(n, (0..size as u64).filter(|&s| good[s as usize]).collect())
}

fn arb_br_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n)
        .prop_flat_map(|n| prop::collection::vec(0..(1u64 << n), 0..6).prop_map(move |sets| transversals_of(n, &sets)))
}

fn flats(c: &SimplicialComplex) -> FlatFamily {
    FlatFamily::compute(c, &Limits::default()).unwrap()
}

fn with_loops(c: &SimplicialComplex, extra: usize) -> SimplicialComplex {
    let mut labels = c.labels().to_vec();
    labels.extend((0..extra).map(|i| format!("loop{i}")));
    SimplicialComplex::from_index_faces(labels, c.facets().iter().copied()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn closure_is_a_closure_operator(c in arb_complex(7), x in any::<u64>(), y in any::<u64>()) {
        let fam = flats(&c);
        let v = c.vertices();
        let x = IndexSet::from_bits(x).intersection(v);
        let y = IndexSet::from_bits(y).intersection(v).union(x);
        let cx = fam.closure(x);
        prop_assert!(x.is_subset(cx));
        prop_assert!(cx.is_subset(fam.closure(y)));
        prop_assert_eq!(fam.closure(cx), cx);
        prop_assert_eq!(fam.closure_by_intersection(x), cx);
        prop_assert!(is_flat(&c, cx));
    }

    #[test]
    fn flat_table_matches_literal_predicate(c in arb_complex(7)) {
        let fam = flats(&c);
        for x in c.vertices().subsets() {
            prop_assert_eq!(is_flat(&c, x), fam.contains(x));
        }
        let mut literal = oracle_flats(&c).unwrap();
        literal.sort_by_key(|f| (f.len(), f.bits()));
        prop_assert_eq!(literal.as_slice(), fam.flats());
        prop_assert!(fam.contains(c.vertices()));
    }

    #[test]
    fn transversals_are_faces_with_valid_witnesses(c in arb_complex(5)) {
        let fam = flats(&c);
        let flat_set: HashSet<IndexSet> = fam.flats().iter().copied().collect();
        for x in c.vertices().subsets() {
            let w = fam.transversal_witness(x);
            prop_assert_eq!(w.is_some(), oracle_is_transversal(&c, x).unwrap());
            if let Some(w) = w {
                prop_assert!(c.is_face(x));
                prop_assert!(w.is_valid_for(&flat_set));
                prop_assert_eq!(w.ordering.iter().copied().collect::<IndexSet>(), x);
                for k in 0..w.ordering.len() {
                    let prefix: IndexSet = w.ordering[..k].iter().copied().collect();
                    prop_assert!(fam.transversal_witness(prefix).is_some());
                }
            }
        }
    }

    #[test]
    fn facet_check_decides_representability(c in arb_complex(6)) {
        let fam = flats(&c);
        let every_face = c.faces().into_iter().all(|f| fam.transversal_witness(f).is_some());
        prop_assert_eq!(fam.is_boolean_representable(), every_face);
    }

    #[test]
    fn flats_restrict_to_flats(c in arb_complex(7), w in 1u64..128) {
        let w = IndexSet::from_bits(w).intersection(c.vertices());
        prop_assume!(!w.is_empty());
        let r = c.restriction(w).unwrap();
        for &f in flats(&c).flats() {
            prop_assert!(is_flat(&r, f.intersection(w).compress(w)));
        }
    }

    #[test]
    fn loops_do_not_change_the_lattice(c in arb_complex(6), extra in 1usize..3) {
        let looped = with_loops(&c, extra);
        let a = flats(&c);
        let b = flats(&looped);
        prop_assert_eq!(a.len(), b.len());
        prop_assert!(isomorphism(a.lattice(), b.lattice()).is_some());
        // F ↦ F ∩ V' is the bijection
        let non_loops = c.vertices().difference(looped.loops());
        let images: HashSet<IndexSet> = b.flats().iter().map(|f| f.intersection(non_loops)).collect();
        let expected: HashSet<IndexSet> = a.flats().iter().map(|f| f.intersection(non_loops)).collect();
        prop_assert_eq!(images, expected);
    }

    #[test]
    fn representable_complexes_have_atomistic_flats(c in arb_br_complex(6)) {
        let fam = flats(&c);
        prop_assert!(fam.is_boolean_representable());
        let l = fam.lattice();
        prop_assert!(l.is_atomistic());
        if c.loops().is_empty() {
            let union = l.atoms().into_iter().fold(IndexSet::EMPTY, |u, a| u.union(fam.flats()[a]));
            prop_assert_eq!(union, c.vertices());
        }
    }

    #[test]
    fn simplification_preserves_flats(c in arb_br_complex(6)) {
        let (proper, _) = match c.proper_part() {
            Ok(p) => p,
            Err(_) => return Ok(()),
        };
        let fam = flats(&proper);
        let (simple, classes) = fam.simplification().unwrap();
        prop_assert!(simple.is_simple());
        prop_assert_eq!(classes.iter().fold(IndexSet::EMPTY, |u, &k| u.union(k)), proper.vertices());
        prop_assert!(isomorphism(fam.lattice(), flats(&simple).lattice()).is_some());
    }

    #[test]
    fn matroids_have_geometric_flats(c in arb_complex(6)) {
        if c.is_matroid() {
            let fam = flats(&c);
            prop_assert!(fam.is_boolean_representable());
            prop_assert!(fam.lattice().is_semimodular());
            if c.loops().is_empty() {
                prop_assert!(fam.lattice().is_geometric());
            }
        }
    }

    #[test]
    fn flats_of_representable_complexes_are_realized_canonically(c in arb_br_complex(6)) {
        let fam = flats(&c);
        let l = fam.lattice();
        prop_assert!(is_realizable(l, &Limits::default()).unwrap().realizable);
        if l.is_trivial() {
            return Ok(());
        }
        let t = transversal_complex(l, &Limits::default()).unwrap();
        let t = t.complex();
        prop_assert!(isomorphism(l, flats(t).lattice()).is_some());
        let k = t.vertex_count();
        let restricted = c
            .vertices()
            .subsets()
            .filter(|w| w.len() == k)
            .any(|w| c.restriction(w).unwrap().isomorphism(t).is_some());
        prop_assert!(restricted);
        if c.is_simple() {
            prop_assert!(c.isomorphism(t).is_some());
        }
    }
}

#[test]
fn fixtures_cover_both_answers() {
    let verdicts: Vec<bool> = fixture_complexes()
        .iter()
        .map(|(_, c)| flats(c).is_boolean_representable())
        .collect();
    assert!(verdicts.contains(&true) && verdicts.contains(&false));
}

#[test]
fn example_hasse_diagram() {
    let fam = flats(&four_vertex());
    let l = fam.lattice();
    let covers: HashSet<(String, String)> = l
        .cover_pairs()
        .into_iter()
        .map(|(x, y)| (l.label(x).to_string(), l.label(y).to_string()))
        .collect();
    let expected: HashSet<(String, String)> = [
        ("{}", "{1}"),
        ("{}", "{2}"),
        ("{}", "{3}"),
        ("{}", "{4}"),
        ("{1}", "{1,2}"),
        ("{2}", "{1,2}"),
        ("{1,2}", "{1,2,3,4}"),
        ("{3}", "{1,2,3,4}"),
        ("{4}", "{1,2,3,4}"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    assert_eq!(covers, expected);
    let dot = flatlat::io::emit_dot_hasse(l);
    assert_eq!(dot.matches("[label=").count(), 7);
    assert_eq!(dot.matches(" -> ").count(), 9);
}

#[test]
fn uniform_matroid_is_geometric() {
    let u24 = uniform(4, 2);
    assert!(u24.is_matroid());
    let fam = flats(&u24);
    assert_eq!(fam.len(), 6);
    assert!(fam.lattice().is_geometric());
    let k4 = graphic_k4();
    assert!(k4.is_matroid());
    // flats of M(K4): ∅, 6 edges, 4 triangles, 3 matchings, E
    assert_eq!(flats(&k4).len(), 15);
    assert!(flats(&k4).lattice().is_geometric());
}

#[test]
fn text_round_trip_on_fixtures() {
    use flatlat::io::{parse, print, Document};
    for (name, c) in fixture_complexes() {
        let doc = Document::Complex(c);
        assert_eq!(parse(&print(&doc)).unwrap(), doc, "{name}");
    }
    for (name, g) in fixture_graphs() {
        let doc = Document::Graph(g);
        assert_eq!(parse(&print(&doc)).unwrap(), doc, "{name}");
    }
    for l in flatlat::lattice::enumerate_lattices(6, &Limits::default()).unwrap() {
        let doc = Document::Lattice(l);
        assert_eq!(parse(&print(&doc)).unwrap(), doc);
    }
}
