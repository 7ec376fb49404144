//! Graph catalogues and fixtures for the suites.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rand::Rng;

use crate::graph::Graph;
use crate::io::to_graph6;
use crate::symmetry::{automorphism_group, canonical_form};

const MAX_CATALOG_ORDER: usize = 7;

/// One representative per isomorphism class of graphs on `n` vertices, in
/// canonical form, sorted by graph6 string. Supports `n <= 7`.
pub fn graphs_on(n: usize) -> &'static [Graph] {
    static CACHE: [OnceLock<Vec<Graph>>; MAX_CATALOG_ORDER + 1] = [const { OnceLock::new() }; MAX_CATALOG_ORDER + 1];
    assert!(n <= MAX_CATALOG_ORDER, "catalogue only goes up to {MAX_CATALOG_ORDER} vertices");
    CACHE[n].get_or_init(|| {
        if n == 0 {
            return vec![Graph::empty(0)];
        }
        // Deleting the last vertex of any graph on n vertices leaves a graph
        // isomorphic to one on n - 1, so extending every smaller class by one
        // vertex in all ways reaches every class.
        let mut classes = BTreeMap::new();
        for g in graphs_on(n - 1) {
            for mask in 0u32..1 << (n - 1) {
                let mut edges = g.edges();
                edges.extend((0..n - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, n - 1)));
                let c = canonical_form(&Graph::new(n, &edges).expect("simple graph"));
                classes.entry(name(&c)).or_insert(c);
            }
        }
        classes.into_values().collect()
    })
}

/// All classes on `lo..=hi` vertices, smallest order first.
pub fn graphs_between(lo: usize, hi: usize) -> impl Iterator<Item = &'static Graph> {
    (lo..=hi).flat_map(graphs_on)
}

/// graph6 string without the trailing newline.
pub fn name(g: &Graph) -> String {
    to_graph6(g).trim_end().to_string()
}

pub fn k4_minus_edge() -> Graph {
    Graph::new(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).expect("simple graph")
}

/// The first two (in catalogue order) connected, non-bipartite, R-thin graphs
/// on six vertices with trivial automorphism group.
pub fn rigid_fixtures() -> [Graph; 2] {
    let mut rigid = graphs_on(6).iter().filter(|g| {
        g.is_connected()
            && !g.is_bipartite()
            && g.is_r_thin()
            && automorphism_group(g).is_ok_and(|a| a.is_trivial())
    });
    let a = rigid.next().expect("rigid six-vertex graph").clone();
    let b = rigid.next().expect("second rigid six-vertex graph").clone();
    [a, b]
}

/// `G(n, p)` with a fixed edge probability.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge_unchecked(u, v);
            }
        }
    }
    g
}

/// Random tree on `2..=max_n` vertices plus random edges across its sides.
pub fn random_connected_bipartite(rng: &mut impl Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(2..=max_n);
    let mut g = Graph::empty(n);
    let mut side = vec![0usize; n];
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        side[v] = 1 - side[parent];
        g.add_edge_unchecked(parent, v);
    }
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && rng.gen_bool(0.3) {
                g.add_edge_unchecked(u, v);
            }
        }
    }
    g
}
