//! Simple undirected graphs on dense vertex indices `0..n`.

use std::collections::VecDeque;
use std::fmt;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::symmetry;

/// Default vertex cap for [`are_isomorphic`].
pub const DEFAULT_ISO_CAP: usize = 16;

/// A simple undirected graph. Rows are open neighbourhoods.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
    edge_count: usize,
}

/// Disjoint nonempty vertex classes covering every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    classes: Vec<Vec<usize>>,
}

impl Partition {
    /// Builds a partition, sorting each class and ordering classes by their
    /// minimum vertex. Panics if the classes overlap, are empty, or miss a
    /// vertex of `0..n`.
    pub fn new(n: usize, mut classes: Vec<Vec<usize>>) -> Self {
        let mut seen = vec![false; n];
        for class in &mut classes {
            assert!(!class.is_empty(), "empty partition class");
            class.sort_unstable();
            for &v in class.iter() {
                assert!(v < n && !seen[v], "partition classes overlap or are out of range");
                seen[v] = true;
            }
        }
        assert!(seen.iter().all(|&s| s), "partition does not cover all vertices");
        classes.sort_by_key(|c| c[0]);
        Partition { classes }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn is_discrete(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }
}

/// Result of 2-colouring a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    Bipartite { sides: [Vec<usize>; 2] },
    NonBipartite,
}

impl Bipartition {
    pub fn sides(&self) -> Option<&[Vec<usize>; 2]> {
        match self {
            Bipartition::Bipartite { sides } => Some(sides),
            Bipartition::NonBipartite => None,
        }
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Bipartite { .. })
    }
}

impl Graph {
    /// Graph on `n` vertices with the given edges. Duplicates collapse; loops
    /// and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::IndexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::IndexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::LoopRejected(u));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            rows: vec![VertexSet::new(n); n],
            edge_count: 0,
        }
    }

    /// Builds from neighbourhood rows. Rows must be symmetric and loop-free.
    pub(crate) fn from_rows(rows: Vec<VertexSet>) -> Self {
        let n = rows.len();
        let mut twice = 0;
        for (v, row) in rows.iter().enumerate() {
            debug_assert!(!row.contains(v), "loop at {v}");
            for u in row.iter() {
                debug_assert!(u < n && rows[u].contains(v), "asymmetric row {v}");
            }
            twice += row.len();
        }
        Graph {
            n,
            rows,
            edge_count: twice / 2,
        }
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if !self.rows[u].contains(v) {
            self.rows[u].insert(v);
            self.rows[v].insert(u);
            self.edge_count += 1;
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge_unchecked(v - 1, v);
        }
        g
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge_unchecked(n - 1, 0);
        g
    }

    /// Star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        Graph::complete_bipartite(1, leaves)
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::complete_multipartite(&[a, b])
    }

    /// Complete multipartite graph with consecutive parts of the given sizes.
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let n = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (i, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, size));
        }
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    g.add_edge_unchecked(u, v);
                }
            }
        }
        g
    }

    /// Triangle 0-1-2 with a pendant vertex 3 attached to 0.
    pub fn paw() -> Self {
        Graph::new(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).expect("static edges")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.rows
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            out.extend(self.rows[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut r = full.clone();
                r.remove(v);
                for u in row.iter() {
                    r.remove(u);
                }
                r
            })
            .collect();
        Graph::from_rows(rows)
    }

    /// `self` followed by `other`, whose vertices are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.add_edge_unchecked(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge_unchecked(u + self.n, v + self.n);
        }
        g
    }

    /// Subgraph induced on `vertices`, relabelled in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for u in self.rows[v].iter() {
                let j = index[u];
                if j != usize::MAX && j > i {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        g
    }

    /// Image of the graph under the vertex map `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge_unchecked(perm[u], perm[v]);
        }
        g
    }

    /// BFS 2-colouring. The lowest vertex of each component lands on side 0.
    pub fn bipartition(&self) -> Bipartition {
        let mut side = vec![u8::MAX; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for u in self.rows[v].iter() {
                    if side[u] == u8::MAX {
                        side[u] = 1 - side[v];
                        queue.push_back(u);
                    } else if side[u] == side[v] {
                        return Bipartition::NonBipartite;
                    }
                }
            }
        }
        let mut sides = [Vec::new(), Vec::new()];
        for (v, &s) in side.iter().enumerate() {
            sides[s as usize].push(v);
        }
        Bipartition::Bipartite { sides }
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_bipartite()
    }

    pub fn connected_components(&self) -> Partition {
        let mut comp = vec![usize::MAX; self.n];
        let mut classes = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = vec![start];
            comp[start] = id;
            let mut i = 0;
            while i < class.len() {
                let v = class[i];
                i += 1;
                for u in self.rows[v].iter() {
                    if comp[u] == usize::MAX {
                        comp[u] = id;
                        class.push(u);
                    }
                }
            }
            classes.push(class);
        }
        Partition::new(self.n, classes)
    }

    /// True for graphs with exactly one component. The null graph is not connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.connected_components().len() == 1
    }

    /// Vertices grouped by identical open neighbourhoods.
    pub fn r_equivalence_classes(&self) -> Partition {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.n {
            match classes
                .iter_mut()
                .find(|c| self.rows[c[0]] == self.rows[v])
            {
                Some(c) => c.push(v),
                None => classes.push(vec![v]),
            }
        }
        Partition::new(self.n, classes)
    }

    pub fn is_r_thin(&self) -> bool {
        self.r_equivalence_classes().is_discrete()
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.rows.iter().any(VertexSet::is_empty)
    }

    /// Sorted degree sequence, largest first.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Isomorphism test for graphs up to [`DEFAULT_ISO_CAP`] vertices.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    are_isomorphic_capped(g, h, DEFAULT_ISO_CAP)
}

pub fn are_isomorphic_capped(g: &Graph, h: &Graph, cap: usize) -> Result<bool> {
    for n in [g.order(), h.order()] {
        if n > cap {
            return Err(Error::SizeCapExceeded { n, cap });
        }
    }
    Ok(symmetry::find_isomorphism(g, h).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n);
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            g.add_edge_unchecked(u, v);
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    #[test]
    fn build_small_graphs() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(k2, Graph::complete(2));
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3, Graph::complete(3));
        let dup = Graph::new(4, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
        assert_eq!(dup.order(), 4);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(matches!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::IndexOutOfRange { vertex: 2, n: 2 })
        ));
        assert!(matches!(Graph::new(3, &[(1, 1)]), Err(Error::LoopRejected(1))));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
        // The complement of 0-1-2-3-4-0 links i and i+2.
        let c5 = Graph::cycle(5);
        let comp = c5.complement();
        for i in 0..5 {
            assert!(comp.has_edge(i, (i + 2) % 5));
            assert!(!comp.has_edge(i, (i + 1) % 5));
        }
        assert!(are_isomorphic(&c5, &comp).unwrap());
    }

    #[test]
    fn disjoint_union_examples() {
        let two_k2 = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert_eq!((two_k2.order(), two_k2.edge_count()), (4, 2));
        assert_eq!(two_k2.connected_components().len(), 2);

        let u = Graph::star(4).disjoint_union(&Graph::cycle(4));
        assert_eq!((u.order(), u.edge_count()), (9, 8));

        let g = Graph::paw();
        assert_eq!(g.disjoint_union(&Graph::empty(0)), g);
    }

    #[test]
    fn bipartition_examples() {
        assert_eq!(
            Graph::path(3).bipartition(),
            Bipartition::Bipartite {
                sides: [vec![0, 2], vec![1]]
            }
        );
        assert_eq!(Graph::complete(3).bipartition(), Bipartition::NonBipartite);
        let sides = Graph::cycle(6).bipartition();
        let s = sides.sides().unwrap();
        assert_eq!((s[0].len(), s[1].len()), (3, 3));
    }

    #[test]
    fn components_examples() {
        let two_k2 = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert_eq!(two_k2.connected_components().class_sizes(), vec![2, 2]);
        assert_eq!(Graph::path(5).connected_components().class_sizes(), vec![5]);
        assert!(!Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn r_classes_examples() {
        let k23 = Graph::complete_bipartite(2, 3);
        assert_eq!(
            k23.r_equivalence_classes().classes(),
            &[vec![0, 1], vec![2, 3, 4]]
        );
        assert!(Graph::cycle(5).is_r_thin());
        assert_eq!(Graph::cycle(5).r_equivalence_classes().len(), 5);
        assert!(Graph::complete(2).is_r_thin());
        assert!(!Graph::path(3).is_r_thin());
        assert!(!Graph::cycle(4).is_r_thin());
        assert!(Graph::paw().is_r_thin());
    }

    #[test]
    fn isomorphism_examples() {
        assert!(are_isomorphic(&Graph::cycle(4), &Graph::complete_bipartite(2, 2)).unwrap());
        assert!(!are_isomorphic(&Graph::path(4), &Graph::star(3)).unwrap());
        let big = Graph::empty(17);
        assert!(matches!(
            are_isomorphic(&big, &big),
            Err(Error::SizeCapExceeded { n: 17, cap: 16 })
        ));
    }

    proptest! {
        #[test]
        fn complement_is_involution(g in arb_graph(8)) {
            let c = g.complement();
            let n = g.order();
            prop_assert_eq!(g.edge_count() + c.edge_count(), n * (n - 1) / 2);
            prop_assert_eq!(c.complement(), g);
        }

        #[test]
        fn bipartition_is_proper(g in arb_graph(9)) {
            match g.bipartition() {
                Bipartition::Bipartite { sides } => {
                    for (u, v) in g.edges() {
                        prop_assert_ne!(sides[0].contains(&u), sides[0].contains(&v));
                    }
                }
                Bipartition::NonBipartite => prop_assert!(has_odd_closed_walk(&g)),
            }
        }

        #[test]
        fn r_thin_iff_rows_distinct(g in arb_graph(8)) {
            let rows = g.rows();
            let distinct = (0..rows.len()).all(|i| (i + 1..rows.len()).all(|j| rows[i] != rows[j]));
            prop_assert_eq!(g.is_r_thin(), distinct);
        }

        #[test]
        fn isomorphic_to_random_relabelling(g in arb_graph(8), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut perm: Vec<usize> = (0..g.order()).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let h = g.relabel(&perm);
            prop_assert!(are_isomorphic(&g, &h).unwrap());
            prop_assert!(are_isomorphic(&h, &g).unwrap());
        }
    }

    /// Odd closed walk exists iff some vertex reaches itself with odd parity.
    fn has_odd_closed_walk(g: &Graph) -> bool {
        let n = g.order();
        (0..n).any(|s| {
            // reach[v][p]: v reachable from s by a walk of parity p
            let mut reach = vec![[false; 2]; n];
            reach[s][0] = true;
            let mut stack = vec![(s, 0usize)];
            while let Some((v, p)) = stack.pop() {
                for u in g.neighbors(v).iter() {
                    if !reach[u][1 - p] {
                        reach[u][1 - p] = true;
                        stack.push((u, 1 - p));
                    }
                }
            }
            reach[s][1]
        })
    }
}
