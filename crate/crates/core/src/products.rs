//! Kronecker and Cartesian products.
//!
//! Product vertices are flattened row-major: `(g, h) -> g * |V(H)| + h`.

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph, Partition};

/// Flat indexing of tuples `(x_1, ..., x_k)` with `x_i < dims[i]`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductVertexMap {
    dims: Vec<usize>,
}

impl ProductVertexMap {
    pub fn new(dims: Vec<usize>) -> Self {
        ProductVertexMap { dims }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn flatten(&self, coords: &[usize]) -> usize {
        assert_eq!(coords.len(), self.dims.len());
        coords.iter().zip(&self.dims).fold(0, |acc, (&x, &d)| {
            debug_assert!(x < d);
            acc * d + x
        })
    }

    pub fn unflatten(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.dims.len()];
        for (slot, &d) in out.iter_mut().zip(&self.dims).rev() {
            *slot = index % d;
            index /= d;
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductKind {
    Kronecker,
    Cartesian,
}

/// `(u,x) ~ (v,y)` iff `uv` in `E(G)` and `xy` in `E(H)`.
pub fn kronecker(g: &Graph, h: &Graph) -> Graph {
    let m = h.order();
    let mut out = Graph::empty(g.order() * m);
    for (u, v) in g.edges() {
        for (x, y) in h.edges() {
            out.add_edge_unchecked(u * m + x, v * m + y);
            out.add_edge_unchecked(u * m + y, v * m + x);
        }
    }
    out
}

/// `(g,h) ~ (g',h')` iff equal in one coordinate and adjacent in the other.
pub fn cartesian(g: &Graph, h: &Graph) -> Graph {
    let m = h.order();
    let mut out = Graph::empty(g.order() * m);
    for a in 0..g.order() {
        for (x, y) in h.edges() {
            out.add_edge_unchecked(a * m + x, a * m + y);
        }
    }
    for (u, v) in g.edges() {
        for b in 0..m {
            out.add_edge_unchecked(u * m + b, v * m + b);
        }
    }
    out
}

pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Graph {
    match kind {
        ProductKind::Kronecker => kronecker(g, h),
        ProductKind::Cartesian => cartesian(g, h),
    }
}

/// Left-associated `k`-fold product of `g` with itself.
pub fn product_power(kind: ProductKind, g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidPower);
    }
    let mut acc = g.clone();
    for _ in 1..k {
        acc = product(kind, &acc, g);
    }
    Ok(acc)
}

/// The two vertex sets `(V0×W0) ∪ (V1×W1)` and `(V0×W1) ∪ (V1×W0)` of `G×H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteSplit {
    pub classes: [Vec<usize>; 2],
    /// False when a factor is disconnected; the sets are still well defined
    /// but the product may have more than two components.
    pub factors_connected: bool,
}

impl BipartiteSplit {
    /// Nonempty classes as a partition of `V(G×H)`.
    pub fn to_partition(&self, n: usize) -> Partition {
        Partition::new(
            n,
            self.classes
                .iter()
                .filter(|c| !c.is_empty())
                .cloned()
                .collect(),
        )
    }
}

pub fn bipartite_split(g: &Graph, h: &Graph) -> Result<BipartiteSplit> {
    let (Bipartition::Bipartite { sides: gs }, Bipartition::Bipartite { sides: hs }) =
        (g.bipartition(), h.bipartition())
    else {
        return Err(Error::NotBipartite);
    };
    let m = h.order();
    let cross = |a: &[usize], b: &[usize]| -> Vec<usize> {
        a.iter()
            .flat_map(|&u| b.iter().map(move |&x| u * m + x))
            .collect()
    };
    let mut even = cross(&gs[0], &hs[0]);
    even.extend(cross(&gs[1], &hs[1]));
    even.sort_unstable();
    let mut odd = cross(&gs[0], &hs[1]);
    odd.extend(cross(&gs[1], &hs[0]));
    odd.sort_unstable();
    Ok(BipartiteSplit {
        classes: [even, odd],
        factors_connected: g.is_connected() && h.is_connected(),
    })
}

/// Connectivity of `G×H` for graphs with at least one edge each: both factors
/// connected and at least one of them containing an odd cycle.
pub fn kronecker_connected_predicted(g: &Graph, h: &Graph) -> bool {
    g.is_connected() && h.is_connected() && (!g.is_bipartite() || !h.is_bipartite())
}
