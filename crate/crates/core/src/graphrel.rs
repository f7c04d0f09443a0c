//! Brute-force graph oracles: induced embeddability, isomorphism,
//! automorphisms, rigidity, and the tree test.
//!
//! Everything here enumerates maps exhaustively. Callers are expected to keep
//! graphs small (the CLI caps them at 8 vertices by default).

use std::collections::{BTreeMap, VecDeque};

use itertools::Itertools;

use crate::graph::Graph;

pub const DEFAULT_MAX_N: usize = 8;

/// Injections `0..k -> 0..m` as image vectors, in lexicographic order.
pub fn injections(k: usize, m: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..m).permutations(k)
}

fn is_induced_embedding(t: &Graph, s: &Graph, f: &[usize]) -> bool {
    (0..t.n()).all(|i| (i + 1..t.n()).all(|j| t.adjacent(i, j) == s.adjacent(f[i], f[j])))
}

/// Least injection `f` with `i ~ j` in `t` iff `f(i) ~ f(j)` in `s`.
pub fn induced_embeds(t: &Graph, s: &Graph) -> Option<Vec<usize>> {
    if t.n() > s.n() {
        return None;
    }
    injections(t.n(), s.n()).find(|f| is_induced_embedding(t, s, f))
}

pub fn graph_iso(t: &Graph, s: &Graph) -> Option<Vec<usize>> {
    if t.n() != s.n() || t.edge_count() != s.edge_count() {
        return None;
    }
    induced_embeds(t, s)
}

/// Aut(t) in lexicographic order; the identity comes first.
pub fn automorphisms(t: &Graph) -> Vec<Vec<usize>> {
    injections(t.n(), t.n())
        .filter(|p| is_induced_embedding(t, t, p))
        .collect()
}

pub fn is_rigid(t: &Graph) -> bool {
    injections(t.n(), t.n())
        .filter(|p| is_induced_embedding(t, t, p))
        .nth(1)
        .is_none()
}

pub fn is_connected(t: &Graph) -> bool {
    if t.n() == 0 {
        return false;
    }
    let mut seen = vec![false; t.n()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for (u, s) in seen.iter_mut().enumerate() {
            if !*s && t.adjacent(v, u) {
                *s = true;
                queue.push_back(u);
            }
        }
    }
    seen.into_iter().all(|b| b)
}

/// Connected and acyclic.
pub fn is_combinatorial_tree(t: &Graph) -> bool {
    is_connected(t) && t.edge_count() + 1 == t.n()
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices, each the labelling with the smallest edge mask.
pub fn iso_classes(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "class enumeration is exhaustive; keep n small");
    let pairs = n * n.saturating_sub(1) / 2;
    let perms: Vec<Vec<usize>> = injections(n, n).collect();
    let mut classes = BTreeMap::new();
    for mask in 0..(1u128 << pairs) {
        let g = Graph::from_edge_mask(n, mask);
        let canon = perms
            .iter()
            .map(|p| g.pull_back(p).edge_mask())
            .min()
            .unwrap_or(0);
        if canon == mask {
            classes.insert(canon, g);
        }
    }
    classes.into_values().collect()
}

/// Every labelled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..(1u128 << pairs)).map(move |mask| Graph::from_edge_mask(n, mask))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn asymmetric_tree() -> Graph {
        // star centre 0 with legs of lengths 1, 2, 3
        Graph::from_edges(7, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]).unwrap()
    }

    #[test]
    fn induced_embedding_examples() {
        let k2 = Graph::complete(2);
        let k3 = Graph::complete(3);
        let p3 = Graph::path(3);
        assert_eq!(induced_embeds(&k2, &k3), Some(vec![0, 1]));
        assert_eq!(induced_embeds(&p3, &k3), None);
        assert_eq!(induced_embeds(&p3, &p3), Some(vec![0, 1, 2]));
    }

    #[test]
    fn iso_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(graph_iso(&k2, &k2), Some(vec![0, 1]));
        assert_eq!(graph_iso(&Graph::path(3), &Graph::complete(3)), None);
        // path 0-1-2 relabelled by 0->0, 1->2, 2->1 is the path 0-2-1
        let relabelled = Graph::from_edges(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(graph_iso(&Graph::path(3), &relabelled), Some(vec![0, 2, 1]));
    }

    #[test]
    fn rigidity_examples() {
        assert!(is_rigid(&Graph::empty(1)));
        assert!(!is_rigid(&Graph::path(3)));
        assert!(is_rigid(&asymmetric_tree()));
        assert_eq!(
            automorphisms(&Graph::path(3)),
            vec![vec![0, 1, 2], vec![2, 1, 0]]
        );
    }

    #[test]
    fn tree_examples() {
        assert!(is_combinatorial_tree(&Graph::path(3)));
        assert!(!is_combinatorial_tree(&Graph::complete(3)));
        assert!(!is_combinatorial_tree(&Graph::empty(2)));
        assert!(is_combinatorial_tree(&asymmetric_tree()));
    }

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| iso_classes(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn rigidity_matches_automorphism_count() {
        for n in 1..=5 {
            for g in iso_classes(n) {
                let mut count = 0;
                for p in (0..n).permutations(n) {
                    if g.pull_back(&p) == g {
                        count += 1;
                    }
                }
                assert_eq!(is_rigid(&g), count == 1, "{g}");
                assert_eq!(automorphisms(&g).len(), count);
            }
        }
    }

    #[test]
    fn embeddability_is_a_quasi_order() {
        let graphs: Vec<Graph> = (1..=4).flat_map(iso_classes).collect();
        for a in &graphs {
            assert!(induced_embeds(a, a).is_some());
            for b in &graphs {
                let ab = induced_embeds(a, b);
                for c in &graphs {
                    if ab.is_some() && induced_embeds(b, c).is_some() {
                        assert!(induced_embeds(a, c).is_some());
                    }
                }
                let both = ab.is_some() && induced_embeds(b, a).is_some();
                assert_eq!(graph_iso(a, b).is_some(), both && a.n() == b.n());
            }
        }
    }
}
