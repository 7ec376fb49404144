//! Boolean squares and Cartesian skeletons.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `G^s`: `xy` is an edge iff `N(x) ∩ N(y) ≠ ∅`. Loops sit at every vertex
/// with a nonempty neighbourhood and are kept apart from the simple graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanSquare {
    pub base: Graph,
    pub loop_vertices: VertexSet,
}

pub fn boolean_square(g: &Graph) -> BooleanSquare {
    let n = g.order();
    let mut base = Graph::empty(n);
    let mut loop_vertices = VertexSet::new(n);
    for x in 0..n {
        if !g.neighbors(x).is_empty() {
            loop_vertices.insert(x);
        }
        for y in x + 1..n {
            if g.neighbors(x).intersects(g.neighbors(y)) {
                base.add_edge_unchecked(x, y);
            }
        }
    }
    BooleanSquare {
        base,
        loop_vertices,
    }
}

/// Whether the edge (or loop, when `x == y`) `xy` of `G^s` is dispensable:
/// a loop, or witnessed by some `z` satisfying both
///
/// 1. `N(x)∩N(y) ⊂ N(x)∩N(z)`, or `N(x) ⊂ N(z) ⊂ N(y)`;
/// 2. `N(y)∩N(x) ⊂ N(y)∩N(z)`, or `N(y) ⊂ N(z) ⊂ N(x)`;
///
/// with `⊂` proper inclusion and `z` ranging over all of `V(G)`.
pub fn is_dispensable(g: &Graph, x: usize, y: usize) -> Result<bool> {
    let n = g.order();
    for v in [x, y] {
        if v >= n {
            return Err(Error::IndexOutOfRange { vertex: v, n });
        }
    }
    let (nx, ny) = (g.neighbors(x), g.neighbors(y));
    if !nx.intersects(ny) {
        return Err(Error::NotBooleanSquareEdge { x, y });
    }
    if x == y {
        return Ok(true);
    }
    Ok(dispensable_pair(g, nx, ny))
}

fn dispensable_pair(g: &Graph, nx: &VertexSet, ny: &VertexSet) -> bool {
    let common = nx.intersection(ny);
    (0..g.order()).any(|z| {
        let nz = g.neighbors(z);
        let first = common.is_strict_subset(&nx.intersection(nz))
            || (nx.is_strict_subset(nz) && nz.is_strict_subset(ny));
        first
            && (common.is_strict_subset(&ny.intersection(nz))
                || (ny.is_strict_subset(nz) && nz.is_strict_subset(nx)))
    })
}

/// `S(G)`: the Boolean square without its dispensable edges and loops.
pub fn cartesian_skeleton(g: &Graph) -> Graph {
    let square = boolean_square(g);
    let mut out = Graph::empty(g.order());
    for (x, y) in square.base.edges() {
        if !dispensable_pair(g, g.neighbors(x), g.neighbors(y)) {
            out.add_edge_unchecked(x, y);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;
    use crate::products::{cartesian, kronecker};
    use crate::symmetry::{automorphism_group, find_isomorphism, is_automorphism};

    #[test]
    fn boolean_square_examples() {
        let k2 = boolean_square(&Graph::complete(2));
        assert_eq!(k2.base.edge_count(), 0);
        assert_eq!(k2.loop_vertices.iter().collect::<Vec<_>>(), vec![0, 1]);

        let p3 = boolean_square(&Graph::path(3));
        assert_eq!(p3.base.edges(), vec![(0, 2)]);
        assert_eq!(p3.loop_vertices.len(), 3);

        let c5 = boolean_square(&Graph::cycle(5));
        let expect: Vec<_> = (0..5).map(|i| ((i + 2) % 5, i)).map(|(a, b)| (a.min(b), a.max(b))).collect();
        let mut expect = expect;
        expect.sort();
        assert_eq!(c5.base.edges(), expect);
        assert_eq!(c5.loop_vertices.len(), 5);

        let iso = boolean_square(&Graph::new(3, &[(0, 1)]).unwrap());
        assert!(!iso.loop_vertices.contains(2));
    }

    #[test]
    fn dispensable_examples() {
        let c5 = Graph::cycle(5);
        assert!(is_dispensable(&c5, 3, 3).unwrap());
        assert!(!is_dispensable(&c5, 0, 2).unwrap());
        let p3 = Graph::path(3);
        assert!(!is_dispensable(&p3, 0, 2).unwrap());
        assert!(matches!(
            is_dispensable(&c5, 0, 1),
            Err(Error::NotBooleanSquareEdge { x: 0, y: 1 })
        ));
        let with_isolated = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(is_dispensable(&with_isolated, 2, 2).is_err());
    }

    #[test]
    fn skeleton_examples() {
        assert_eq!(cartesian_skeleton(&Graph::complete(2)), Graph::empty(2));
        let c5 = Graph::cycle(5);
        assert_eq!(cartesian_skeleton(&c5), boolean_square(&c5).base);
        assert!(are_isomorphic(&cartesian_skeleton(&c5), &c5).unwrap());
    }

    #[test]
    fn skeleton_of_paw_product_is_product_of_skeletons() {
        let paw = Graph::paw();
        let s = cartesian_skeleton(&paw);
        assert_eq!(
            cartesian_skeleton(&kronecker(&paw, &paw)),
            cartesian(&s, &s)
        );
    }

    #[test]
    fn automorphisms_preserve_the_skeleton() {
        for g in [Graph::paw(), Graph::cycle(7), Graph::complete(4), Graph::path(5)] {
            let s = cartesian_skeleton(&g);
            for p in automorphism_group(&g).unwrap().elements().unwrap() {
                assert!(is_automorphism(&s, p));
            }
        }
    }

    #[test]
    fn isomorphisms_transfer_to_skeletons() {
        let g = Graph::paw().disjoint_union(&Graph::cycle(5));
        let h = g.relabel(&[8, 0, 5, 3, 1, 7, 2, 6, 4]);
        let phi = find_isomorphism(&g, &h).unwrap();
        let (sg, sh) = (cartesian_skeleton(&g), cartesian_skeleton(&h));
        assert_eq!(sg.relabel(phi.images()), sh);
    }
}
