//! Brute-force reference implementations: every bijection, every labeling.
//! Deliberately naive; only meant for graphs with a handful of vertices.

use itertools::Itertools;

use crate::graph::Graph;

/// All automorphisms, found by testing each of the `n!` bijections.
pub fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let edges = g.edges();
    (0..n)
        .permutations(n)
        .filter(|p| edges.iter().all(|&(u, v)| g.has_edge(p[u], p[v])))
        .collect()
}

/// Calls `f` on every labeling of `points` points with labels `0..k` until it
/// returns true.
fn any_labeling(points: usize, k: u32, mut f: impl FnMut(&[u32]) -> bool) -> bool {
    let mut labels = vec![0u32; points];
    loop {
        if f(&labels) {
            return true;
        }
        let Some(i) = labels.iter().position(|&l| l + 1 < k) else {
            return false;
        };
        labels[i] += 1;
        labels[..i].fill(0);
    }
}

fn count_labelings(points: usize, k: u32, mut f: impl FnMut(&[u32]) -> bool) -> u64 {
    let mut count = 0;
    any_labeling(points, k, |l| {
        count += u64::from(f(l));
        false
    });
    count
}

fn vertex_moves(g: &Graph) -> Vec<Vec<usize>> {
    automorphisms(g)
        .into_iter()
        .filter(|p| p.iter().enumerate().any(|(i, &x)| i != x))
        .collect()
}

/// Distinct non-identity permutations of the edges (as indices into
/// `g.edges()`) induced by automorphisms.
fn edge_moves(g: &Graph) -> Vec<Vec<usize>> {
    let edges = g.edges();
    automorphisms(g)
        .into_iter()
        .map(|p| {
            edges
                .iter()
                .map(|&(u, v)| {
                    let e = (p[u].min(p[v]), p[u].max(p[v]));
                    edges.iter().position(|&f| f == e).expect("edge image")
                })
                .collect::<Vec<_>>()
        })
        .filter(|m| m.iter().enumerate().any(|(i, &x)| i != x))
        .unique()
        .collect()
}

fn breaks_all(moves: &[Vec<usize>], labels: &[u32]) -> bool {
    moves
        .iter()
        .all(|m| m.iter().enumerate().any(|(i, &x)| labels[i] != labels[x]))
}

fn least_k(points: usize, moves: &[Vec<usize>]) -> usize {
    (1..=points.max(1) as u32)
        .find(|&k| any_labeling(points, k, |l| breaks_all(moves, l)))
        .expect("distinct labels break every non-trivial permutation") as usize
}

pub fn distinguishing_number(g: &Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    least_k(g.order(), &vertex_moves(g))
}

/// `None` for graphs without edges.
pub fn distinguishing_index(g: &Graph) -> Option<usize> {
    (g.edge_count() > 0).then(|| least_k(g.edge_count(), &edge_moves(g)))
}

/// Number of distinguishing vertex labelings with labels `0..k`.
pub fn count_distinguishing_vertex(g: &Graph, k: u32) -> u64 {
    let moves = vertex_moves(g);
    count_labelings(g.order(), k, |l| breaks_all(&moves, l))
}

/// Number of distinguishing edge labelings with labels `0..k`.
pub fn count_distinguishing_edge(g: &Graph, k: u32) -> u64 {
    let moves = edge_moves(g);
    count_labelings(g.edge_count(), k, |l| breaks_all(&moves, l))
}

/// Order of the group induced on the edge set.
pub fn edge_group_order(g: &Graph) -> usize {
    edge_moves(g).len() + 1
}
