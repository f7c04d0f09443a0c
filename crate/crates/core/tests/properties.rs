use std::collections::BTreeSet;

use graphgroups::coding::CodingTable;
use graphgroups::graphrel::{automorphisms, graph_iso, induced_embeds, injections, is_rigid};
use graphgroups::randomgraph::{adjacent, embed_graph, extension_witness};
use graphgroups::williams::{aut_canonical_check, CanonicalAuto};
use graphgroups::{relators_from_graph, Graph, Letter, Order, RelatorSet, Word};
use proptest::prelude::*;

fn letters(n: u32, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((0..n, any::<bool>()), 0..=max_len).prop_map(|v| {
        v.into_iter()
            .map(|(i, inv)| Letter::new(i, if inv { -1 } else { 1 }))
            .collect()
    })
}

fn word(n: u32, max_len: usize) -> impl Strategy<Value = Word> {
    letters(n, max_len).prop_map(Word::reduce)
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u128>()).prop_map(|(n, mask)| Graph::from_edge_mask(n, mask))
}

fn with_edge(g: &Graph, i: usize, j: usize) -> Graph {
    let mut h = g.clone();
    h.add_edge(i, j).unwrap();
    h
}

fn without_edge(g: &Graph, i: usize, j: usize) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().into_iter().filter(|&e| e != (i, j)).collect();
    Graph::from_edges(g.n(), &edges).unwrap()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reduction_is_idempotent(raw in letters(3, 30)) {
        let w = Word::reduce(raw.clone());
        prop_assert_eq!(Word::reduce(w.letters().iter().copied()), w.clone());
        prop_assert!(w.len() <= raw.len() && (raw.len() - w.len()).is_multiple_of(2));
        prop_assert!(w.concat(&w.inverse()).is_identity());
    }

    #[test]
    fn cyclic_reduction_strips_pairs(w in word(3, 30)) {
        let (core, c) = w.cyclic_reduce();
        prop_assert!(core.len() <= w.len());
        prop_assert_eq!((w.len() - core.len()) % 2, 0);
        prop_assert!(core.is_cyclically_reduced());
        prop_assert_eq!(core.conjugate_by(&c), w);
    }

    #[test]
    fn text_round_trip(w in word(4, 20)) {
        let text = w.to_string();
        prop_assert_eq!(text.parse::<Word>().unwrap(), w);
        prop_assert_eq!(text.parse::<Word>().unwrap().to_string(), text);
    }

    #[test]
    fn symmetrization_is_a_fixed_point(seeds in prop::collection::vec(word(3, 8), 1..4)) {
        let r = RelatorSet::symmetrize(&seeds);
        prop_assert_eq!(RelatorSet::symmetrize(r.relators()), r);
    }

    #[test]
    fn conjugated_relators_are_trivial(t in graph(3), c in word(3, 3), pick in any::<prop::sample::Index>()) {
        let p = relators_from_graph(&t);
        let rels = p.relators().relators();
        let r = &rels[pick.index(rels.len())];
        prop_assert!(p.is_identity(&r.conjugate_by(&c)).unwrap());
    }

    #[test]
    fn equality_is_an_equivalence(t in graph(3), a in word(3, 6), b in word(3, 6), x in word(3, 4)) {
        let p = relators_from_graph(&t);
        let n = t.n() as u32;
        let keep = |w: &Word| Word::reduce(w.letters().iter().copied().filter(|l| l.index() < n));
        let (a, b, x) = (keep(&a), keep(&b), keep(&x));
        // b and a·x⁻¹·x are the same element; a·rel is equal to a
        let ax = a.concat(&x.inverse()).concat(&x);
        prop_assert!(p.equal(&a, &a).unwrap());
        prop_assert_eq!(p.equal(&a, &b).unwrap(), p.equal(&b, &a).unwrap());
        let rel = &p.relators().relators()[0];
        let arel = a.concat(rel);
        prop_assert!(p.equal(&a, &arel).unwrap());
        prop_assert!(p.equal(&arel, &ax).unwrap());
        prop_assert_eq!(p.equal(&b, &arel).unwrap(), p.equal(&b, &a).unwrap());
    }

    #[test]
    fn order_is_conjugation_invariant(t in graph(3), w in word(3, 6), u in word(3, 3)) {
        let p = relators_from_graph(&t);
        let n = t.n() as u32;
        let keep = |w: &Word| Word::reduce(w.letters().iter().copied().filter(|l| l.index() < n));
        let (w, u) = (keep(&w), keep(&u));
        prop_assert_eq!(p.order(&w.conjugate_by(&u)).unwrap(), p.order(&w).unwrap());
    }

    #[test]
    fn order_of_powers(t in graph(3), i in 0usize..3, j in 0usize..3, k in 1u64..14) {
        let p = relators_from_graph(&t);
        let (i, j) = (i % t.n(), j % t.n());
        let w = Word::generator(i as u32).concat(&Word::generator(j as u32));
        if let Order::Finite(m) = p.order(&w).unwrap() {
            let k = (k - 1) % m + 1;
            prop_assert_eq!(p.order(&w.pow(k as i64)).unwrap(), Order::Finite(m / gcd(k, m)));
        }
    }

    #[test]
    fn williams_presentations_are_sixth_groups(t in graph(6)) {
        prop_assert!(relators_from_graph(&t).relators().check_c16());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn code_ignores_dehn_reduction(t in graph(3), w in word(3, 10)) {
        let n = t.n() as u32;
        let w = Word::reduce(w.letters().iter().copied().filter(|l| l.index() < n));
        let mut table = CodingTable::new(&t);
        let p = table.presentation().clone();
        let d = p.dehn_reduce(&w).unwrap();
        prop_assume!(d.len() <= 4);
        prop_assert_eq!(table.code_of(&w).unwrap(), table.code_of(&d).unwrap());
    }

    #[test]
    fn star_is_the_group_operation(t in graph(3), a in 0u64..40, b in 0u64..40) {
        let mut table = CodingTable::new(&t);
        prop_assume!(table.is_admissible(a) && table.is_admissible(b));
        let (Ok(wa), Ok(wb)) = (table.word_of(a), table.word_of(b)) else {
            // only the finite single-vertex group runs out of codes
            prop_assert_eq!(t.n(), 1);
            return Ok(());
        };
        let ab = table.star(a, b).unwrap();
        let p = table.presentation().clone();
        prop_assert!(p.equal(&table.word_of(ab).unwrap(), &wa.concat(&wb)).unwrap());
        prop_assert_eq!(table.star(0, a).unwrap(), a);
        prop_assert_eq!(table.star(a, 0).unwrap(), a);
        let inv = table.inverse_code(a).unwrap();
        prop_assert_eq!(table.star(a, inv).unwrap(), 0);
    }

    #[test]
    fn canonical_automorphisms_are_recovered(t in graph(4), pick in any::<prop::sample::Index>(), neg in any::<bool>(), c in word(4, 2)) {
        let auts = automorphisms(&t);
        let rho = auts[pick.index(auts.len())].clone();
        let n = t.n() as u32;
        let c = Word::reduce(c.letters().iter().copied().filter(|l| l.index() < n));
        let given = CanonicalAuto { rho, epsilon: if neg { -1 } else { 1 }, t: c };
        let gm = given.generator_map();
        let found = aut_canonical_check(&t, &gm, 2).unwrap().expect("canonical automorphism");
        let p = relators_from_graph(&t);
        for (x, y) in found.generator_map().images.iter().zip(&gm.images) {
            prop_assert!(p.equal(x, y).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn embedding_is_a_quasi_order(a in graph(4), b in graph(4), c in graph(4)) {
        prop_assert!(induced_embeds(&a, &a).is_some());
        if let (Some(f), Some(g)) = (induced_embeds(&a, &b), induced_embeds(&b, &c)) {
            let composed: Vec<usize> = f.iter().map(|&x| g[x]).collect();
            prop_assert_eq!(c.pull_back(&composed), a.clone());
            prop_assert!(induced_embeds(&a, &c).is_some());
        }
    }

    #[test]
    fn isomorphism_is_mutual_embedding(a in graph(5), b in graph(5)) {
        let mutual = a.n() == b.n() && induced_embeds(&a, &b).is_some() && induced_embeds(&b, &a).is_some();
        prop_assert_eq!(graph_iso(&a, &b).is_some(), mutual);
    }

    #[test]
    fn rigidity_counts_permutations(t in graph(6)) {
        let fixed = injections(t.n(), t.n()).filter(|p| t.pull_back(p) == t).count();
        prop_assert_eq!(is_rigid(&t), fixed == 1);
    }

    #[test]
    fn extension_witnesses_are_valid(assign in prop::collection::vec(0u8..10, 30)) {
        let (mut a, mut b) = (BTreeSet::new(), BTreeSet::new());
        for (v, &k) in (2u64..).zip(&assign) {
            match k {
                1 => { a.insert(v); }
                2..=4 => { b.insert(v); }
                _ => {}
            }
        }
        let x = extension_witness(&a, &b).unwrap();
        prop_assert!(!a.contains(&x) && !b.contains(&x));
        for &y in &a {
            prop_assert!(adjacent(x, y).unwrap());
        }
        for &z in &b {
            prop_assert!(!adjacent(x, z).unwrap());
        }
    }

    #[test]
    fn embeddings_only_consult_earlier_vertices(t in graph(5), other in any::<u128>(), k in 0usize..5) {
        let k = k.min(t.n());
        // same graph on 0..k, arbitrary elsewhere
        let mut u = Graph::from_edge_mask(t.n(), other);
        for i in 0..k {
            for j in i + 1..k {
                if t.adjacent(i, j) != u.adjacent(i, j) {
                    u = if t.adjacent(i, j) { with_edge(&u, i, j) } else { without_edge(&u, i, j) };
                }
            }
        }
        prop_assert_eq!(t.prefix(k), u.prefix(k));
        let (x, y) = (embed_graph(&t).unwrap(), embed_graph(&u).unwrap());
        prop_assert_eq!(&x[..k], &y[..k]);
        for i in 0..t.n() {
            for j in i + 1..t.n() {
                prop_assert_eq!(adjacent(x[i], x[j]).unwrap(), t.adjacent(i, j));
            }
        }
    }
}
