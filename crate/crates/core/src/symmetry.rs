//! Automorphism groups, isomorphisms and labeling-preservation checks.
//!
//! The search is individualisation-refinement: both sides of a candidate
//! mapping are refined to equitable ordered partitions by the same
//! deterministic procedure, so any isomorphism carries left cells onto the
//! right cells with the same index. Leaves are verified edge by edge, which
//! keeps the search exact regardless of how strong the refinement is.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex cap for automorphism computations.
pub const DEFAULT_MAX_VERTICES: usize = 64;
/// Default cap on explicitly enumerated group elements.
pub const DEFAULT_MAX_ELEMENTS: usize = 1_000_000;

/// A bijection on `0..n`; `image[v]` is where `v` goes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Panics if `image` is not a bijection on `0..image.len()`.
    pub fn from_images(image: Vec<usize>) -> Self {
        let mut seen = vec![false; image.len()];
        for &x in &image {
            assert!(x < image.len() && !seen[x], "not a permutation: {image:?}");
            seen[x] = true;
        }
        Permutation { image }
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `v -> self(other(v))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.image.len()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { image: inv }
    }
}

pub fn is_automorphism(g: &Graph, p: &Permutation) -> bool {
    p.len() == g.order() && is_isomorphism(g, g, p.images())
}

fn is_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    g.edge_count() == h.edge_count()
        && (0..g.order()).all(|u| g.neighbors(u).iter().all(|v| h.has_edge(map[u], map[v])))
}

#[derive(Clone, Copy, Debug)]
pub struct AutOptions {
    pub max_vertices: usize,
    pub max_elements: usize,
}

impl Default for AutOptions {
    fn default() -> Self {
        AutOptions {
            max_vertices: DEFAULT_MAX_VERTICES,
            max_elements: DEFAULT_MAX_ELEMENTS,
        }
    }
}

/// `Aut(G)`: exact order, a strong generating set, and the full element list
/// when the order is within the enumeration cap. `elements[0]` is the identity.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    degree: usize,
    order: u128,
    generators: Vec<Permutation>,
    elements: Option<Vec<Permutation>>,
    cap: usize,
}

impl AutomorphismGroup {
    pub fn order(&self) -> u128 {
        self.order
    }

    /// Number of points acted on.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_enumerated(&self) -> bool {
        self.elements.is_some()
    }

    pub fn elements(&self) -> Result<&[Permutation]> {
        self.elements.as_deref().ok_or(Error::GroupNotEnumerated {
            order: self.order,
            cap: self.cap,
        })
    }
}

type Cells = Vec<Vec<usize>>;

/// Refines `cells` to the coarsest equitable refinement reachable by
/// splitting on neighbour counts, appending an isomorphism-invariant trace.
fn refine(g: &Graph, cells: &mut Cells, trace: &mut Vec<u32>) {
    let n = g.order();
    let mut cell_of = vec![0usize; n];
    loop {
        let k = cells.len();
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = c;
            }
        }
        let mut counts = vec![0u32; n * k];
        for v in 0..n {
            for u in g.neighbors(v).iter() {
                counts[v * k + cell_of[u]] += 1;
            }
        }
        let row = |v: usize| &counts[v * k..(v + 1) * k];

        let mut next: Cells = Vec::with_capacity(n);
        let mut split = false;
        for cell in cells.iter() {
            let mut cell = cell.clone();
            if cell.len() > 1 {
                cell.sort_by(|&a, &b| row(a).cmp(row(b)).then(a.cmp(&b)));
            }
            let mut start = 0;
            while start < cell.len() {
                let mut end = start + 1;
                while end < cell.len() && row(cell[end]) == row(cell[start]) {
                    end += 1;
                }
                trace.push((end - start) as u32);
                trace.extend_from_slice(row(cell[start]));
                next.push(cell[start..end].to_vec());
                start = end;
            }
            if next.last().map(Vec::len) != Some(cell.len()) {
                split = true;
            }
        }
        trace.push(u32::MAX);
        *cells = next;
        if !split {
            return;
        }
    }
}

fn individualize(cells: &Cells, t: usize, v: usize) -> Cells {
    let mut out = Vec::with_capacity(cells.len() + 1);
    out.extend_from_slice(&cells[..t]);
    out.push(vec![v]);
    out.push(cells[t].iter().copied().filter(|&x| x != v).collect());
    out.extend_from_slice(&cells[t + 1..]);
    out
}

fn target_cell(cells: &Cells) -> Option<usize> {
    cells.iter().position(|c| c.len() > 1)
}

fn initial_cells(n: usize, colors: Option<&[u32]>) -> Cells {
    match colors {
        None if n == 0 => Vec::new(),
        None => vec![(0..n).collect()],
        Some(colors) => {
            let mut by_color: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
            for (v, &c) in colors.iter().enumerate() {
                by_color.entry(c).or_default().push(v);
            }
            by_color.into_values().collect()
        }
    }
}

/// Depth-first search for isomorphisms `left -> right` extending the current
/// pair of equitable partitions. `on_leaf` returns `true` to stop.
fn search_leaves(
    left_g: &Graph,
    right_g: &Graph,
    left: &Cells,
    right: &Cells,
    on_leaf: &mut dyn FnMut(Permutation) -> bool,
) -> bool {
    let Some(t) = target_cell(left) else {
        let mut map = vec![0; left_g.order()];
        for (l, r) in left.iter().zip(right) {
            map[l[0]] = r[0];
        }
        if is_isomorphism(left_g, right_g, &map) {
            return on_leaf(Permutation { image: map });
        }
        return false;
    };
    let v = left[t][0];
    let mut left_trace = Vec::new();
    let mut left_child = individualize(left, t, v);
    refine(left_g, &mut left_child, &mut left_trace);
    let mut right_trace = Vec::new();
    for &w in &right[t] {
        right_trace.clear();
        let mut right_child = individualize(right, t, w);
        refine(right_g, &mut right_child, &mut right_trace);
        if right_trace == left_trace
            && search_leaves(left_g, right_g, &left_child, &right_child, on_leaf)
        {
            return true;
        }
    }
    false
}

pub fn automorphism_group(g: &Graph) -> Result<AutomorphismGroup> {
    automorphism_group_with(g, None, &AutOptions::default())
}

/// Automorphisms that also preserve a vertex colouring.
pub fn automorphism_group_colored(g: &Graph, colors: &[u32]) -> Result<AutomorphismGroup> {
    assert_eq!(colors.len(), g.order(), "one colour per vertex");
    automorphism_group_with(g, Some(colors), &AutOptions::default())
}

pub fn automorphism_group_with(
    g: &Graph,
    colors: Option<&[u32]>,
    opts: &AutOptions,
) -> Result<AutomorphismGroup> {
    let n = g.order();
    if n > opts.max_vertices {
        return Err(Error::SizeCapExceeded {
            n,
            cap: opts.max_vertices,
        });
    }
    let mut root = initial_cells(n, colors);
    refine(g, &mut root, &mut Vec::new());

    // Leftmost path: partitions before each individualisation.
    let mut path: Vec<(Cells, usize)> = Vec::new();
    let mut cur = root.clone();
    while let Some(t) = target_cell(&cur) {
        let v = cur[t][0];
        let mut next = individualize(&cur, t, v);
        refine(g, &mut next, &mut Vec::new());
        path.push((cur, t));
        cur = next;
    }

    // Orbit of each base point under its pointwise stabiliser, deepest first.
    let mut generators: Vec<Permutation> = Vec::new();
    let mut order: u128 = 1;
    for level in (0..path.len()).rev() {
        let (cells, t) = &path[level];
        let base = cells[*t][0];
        let left_child = if level + 1 < path.len() {
            &path[level + 1].0
        } else {
            &cur
        };
        let mut left_trace = Vec::new();
        {
            let mut tmp = individualize(cells, *t, base);
            refine(g, &mut tmp, &mut left_trace);
        }
        let mut orbit = orbit_of(base, &generators, n);
        for &w in &cells[*t] {
            if orbit[w] {
                continue;
            }
            let mut right_trace = Vec::new();
            let mut right = individualize(cells, *t, w);
            refine(g, &mut right, &mut right_trace);
            if right_trace != left_trace {
                continue;
            }
            let mut found = None;
            search_leaves(g, g, left_child, &right, &mut |p| {
                found = Some(p);
                true
            });
            if let Some(p) = found {
                generators.push(p);
                orbit = orbit_of(base, &generators, n);
            }
        }
        let size = orbit.iter().filter(|&&b| b).count() as u128;
        order = order.checked_mul(size).ok_or(Error::OrderOverflow)?;
    }
    generators.reverse();

    let elements = if order <= opts.max_elements as u128 {
        let mut all = Vec::with_capacity(order as usize);
        search_leaves(g, g, &root, &root, &mut |p| {
            all.push(p);
            false
        });
        debug_assert_eq!(all.len() as u128, order);
        debug_assert!(all.first().is_none_or(Permutation::is_identity));
        Some(all)
    } else {
        None
    };
    let elements = if n == 0 {
        Some(vec![Permutation::identity(0)])
    } else {
        elements
    };

    Ok(AutomorphismGroup {
        degree: n,
        order,
        generators,
        elements,
        cap: opts.max_elements,
    })
}

fn orbit_of(point: usize, gens: &[Permutation], n: usize) -> Vec<bool> {
    let mut in_orbit = vec![false; n];
    in_orbit[point] = true;
    let mut stack = vec![point];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if !in_orbit[y] {
                in_orbit[y] = true;
                stack.push(y);
            }
        }
    }
    in_orbit
}

/// Some isomorphism `g -> h`, as a map on vertices of `g`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Permutation> {
    if g.order() != h.order()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return None;
    }
    let n = g.order();
    let mut left = initial_cells(n, None);
    let mut right = initial_cells(n, None);
    let (mut lt, mut rt) = (Vec::new(), Vec::new());
    refine(g, &mut left, &mut lt);
    refine(h, &mut right, &mut rt);
    if lt != rt {
        return None;
    }
    let mut found = None;
    search_leaves(g, h, &left, &right, &mut |p| {
        found = Some(p);
        true
    });
    found
}

/// Canonical representative of the isomorphism class of `g`: the
/// lexicographically least relabelling over all leaves of the search tree.
pub fn canonical_form(g: &Graph) -> Graph {
    fn walk(g: &Graph, cells: &Cells, best: &mut Option<Vec<(usize, usize)>>) {
        match target_cell(cells) {
            None => {
                let mut pos = vec![0; g.order()];
                for (i, c) in cells.iter().enumerate() {
                    pos[c[0]] = i;
                }
                let mut edges: Vec<(usize, usize)> = g
                    .edges()
                    .into_iter()
                    .map(|(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
                    .collect();
                edges.sort_unstable();
                if best.as_ref().is_none_or(|b| edges < *b) {
                    *best = Some(edges);
                }
            }
            Some(t) => {
                for &v in &cells[t] {
                    let mut child = individualize(cells, t, v);
                    refine(g, &mut child, &mut Vec::new());
                    walk(g, &child, best);
                }
            }
        }
    }
    let mut cells = initial_cells(g.order(), None);
    refine(g, &mut cells, &mut Vec::new());
    let mut best = None;
    walk(g, &cells, &mut best);
    Graph::new(g.order(), &best.unwrap_or_default()).expect("relabelled simple graph")
}

/// Vertex labeling with labels in `1..=r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexLabeling(pub Vec<u32>);

impl VertexLabeling {
    pub fn label_count(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

/// Edge labeling keyed by `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EdgeLabeling(pub BTreeMap<(usize, usize), u32>);

impl EdgeLabeling {
    /// Labels listed in the order of `g.edges()`.
    pub fn from_edge_order(g: &Graph, labels: &[u32]) -> Self {
        assert_eq!(labels.len(), g.edge_count());
        EdgeLabeling(g.edges().into_iter().zip(labels.iter().copied()).collect())
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.0.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn distinct_labels(&self) -> usize {
        let mut l: Vec<u32> = self.0.values().copied().collect();
        l.sort_unstable();
        l.dedup();
        l.len()
    }

    pub fn label_count(&self) -> u32 {
        self.0.values().copied().max().unwrap_or(0)
    }

    fn covers_exactly(&self, g: &Graph) -> bool {
        self.0.len() == g.edge_count() && self.0.keys().all(|&(u, v)| g.has_edge(u, v))
    }
}

pub fn is_distinguishing_vertex_labeling(
    g: &Graph,
    group: &AutomorphismGroup,
    labeling: &VertexLabeling,
) -> Result<bool> {
    if labeling.0.len() != g.order() {
        return Err(Error::LabelRangeMismatch(format!(
            "{} labels for {} vertices",
            labeling.0.len(),
            g.order()
        )));
    }
    let l = &labeling.0;
    Ok(group
        .elements()?
        .iter()
        .filter(|s| !s.is_identity())
        .all(|s| (0..g.order()).any(|x| l[x] != l[s.apply(x)])))
}

/// Automorphisms that fix every edge setwise (swaps inside `K_2` components,
/// permutations of isolated vertices) are invisible to edge labels and are
/// not counted as non-trivial here.
pub fn is_distinguishing_edge_labeling(
    g: &Graph,
    group: &AutomorphismGroup,
    labeling: &EdgeLabeling,
) -> Result<bool> {
    if !labeling.covers_exactly(g) {
        return Err(Error::LabelRangeMismatch(
            "edge labeling domain differs from the edge set".into(),
        ));
    }
    let edges = g.edges();
    for s in group.elements()? {
        let mut moves_edge = false;
        let mut preserved = true;
        for &(u, v) in &edges {
            let (a, b) = (s.apply(u), s.apply(v));
            let img = (a.min(b), a.max(b));
            if img != (u, v) {
                moves_edge = true;
            }
            if labeling.0[&img] != labeling.0[&(u, v)] {
                preserved = false;
                break;
            }
        }
        if moves_edge && preserved {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Permutation group induced by `Aut(G)` on the edge set, with edges indexed
/// in `g.edges()` order.
#[derive(Clone, Debug)]
pub struct EdgeActionGroup {
    pub edges: Vec<(usize, usize)>,
    pub order: u128,
    /// Distinct edge permutations, identity first; `None` above the cap.
    pub elements: Option<Vec<Permutation>>,
}

pub fn edge_action_group(g: &Graph) -> Result<EdgeActionGroup> {
    edge_action_group_with(g, &AutOptions::default())
}

/// The kernel of `Aut(G) -> Sym(E)` is generated by swaps inside `K_2`
/// components and permutations of isolated vertices. Dropping isolated
/// vertices and pinning the orientation of every `K_2` component by colour
/// leaves a group that acts faithfully on the edges and induces the same
/// edge permutations.
pub fn edge_action_group_with(g: &Graph, opts: &AutOptions) -> Result<EdgeActionGroup> {
    let keep: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) > 0).collect();
    let core = g.induced_subgraph(&keep);
    let mut colors = vec![0u32; core.order()];
    for class in core.connected_components().classes() {
        if class.len() == 2 {
            colors[class[0]] = 1;
            colors[class[1]] = 2;
        }
    }
    let group = automorphism_group_with(&core, Some(&colors), opts)?;
    let edges = g.edges();
    let core_edges = core.edges();
    let index: HashMap<(usize, usize), usize> = core_edges
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let elements = group.elements.as_ref().map(|els| {
        els.iter()
            .map(|s| {
                Permutation::from_images(
                    core_edges
                        .iter()
                        .map(|&(u, v)| {
                            let (a, b) = (s.apply(u), s.apply(v));
                            index[&(a.min(b), a.max(b))]
                        })
                        .collect(),
                )
            })
            .collect()
    });
    Ok(EdgeActionGroup {
        edges,
        order: group.order,
        elements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::products::kronecker;

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
            if prefix.len() == used.len() {
                out.push(prefix.clone());
                return;
            }
            for v in 0..used.len() {
                if !used[v] {
                    used[v] = true;
                    prefix.push(v);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    fn brute_force_aut(g: &Graph) -> Vec<Vec<usize>> {
        all_permutations(g.order())
            .into_iter()
            .filter(|p| is_isomorphism(g, g, p))
            .collect()
    }

    #[test]
    fn small_group_orders() {
        assert_eq!(automorphism_group(&Graph::path(3)).unwrap().order(), 2);
        assert_eq!(automorphism_group(&Graph::complete(4)).unwrap().order(), 24);
        let k33 = kronecker(&Graph::complete(3), &Graph::complete(3));
        let group = automorphism_group(&k33).unwrap();
        assert_eq!(group.order(), 72);
        assert_eq!(group.elements().unwrap().len(), 72);
    }

    #[test]
    fn identity_first_and_sound() {
        for g in [Graph::paw(), Graph::cycle(6), Graph::complete_bipartite(2, 3)] {
            let group = automorphism_group(&g).unwrap();
            let els = group.elements().unwrap();
            assert!(els[0].is_identity());
            assert!(els.iter().all(|p| is_automorphism(&g, p)));
        }
    }

    #[test]
    fn complete_against_brute_force_on_all_graphs_up_to_six() {
        for n in 1..=6usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            // every 7th labelled graph keeps this fast while hitting all shapes
            for mask in (0u32..1 << pairs.len()).step_by(7) {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::new(n, &edges).unwrap();
                let mut expect = brute_force_aut(&g);
                let group = automorphism_group(&g).unwrap();
                let mut got: Vec<Vec<usize>> = group
                    .elements()
                    .unwrap()
                    .iter()
                    .map(|p| p.images().to_vec())
                    .collect();
                expect.sort();
                got.sort();
                assert_eq!(got, expect, "{g:?}");
            }
        }
    }

    #[test]
    fn order_above_cap_keeps_generators() {
        let opts = AutOptions {
            max_vertices: 64,
            max_elements: 100,
        };
        let g = Graph::complete(7);
        let group = automorphism_group_with(&g, None, &opts).unwrap();
        assert_eq!(group.order(), 5040);
        assert!(matches!(
            group.elements(),
            Err(Error::GroupNotEnumerated { order: 5040, .. })
        ));
        assert!(group.generators().iter().all(|p| is_automorphism(&g, p)));
    }

    #[test]
    fn size_cap_is_enforced() {
        let opts = AutOptions {
            max_vertices: 4,
            max_elements: 10,
        };
        assert!(matches!(
            automorphism_group_with(&Graph::path(5), None, &opts),
            Err(Error::SizeCapExceeded { n: 5, cap: 4 })
        ));
    }

    #[test]
    fn colored_group() {
        let g = Graph::path(3);
        assert_eq!(automorphism_group_colored(&g, &[1, 2, 3]).unwrap().order(), 1);
        assert_eq!(automorphism_group_colored(&g, &[1, 2, 1]).unwrap().order(), 2);
    }

    #[test]
    fn vertex_labeling_checks() {
        let g = Graph::path(3);
        let a = automorphism_group(&g).unwrap();
        assert!(is_distinguishing_vertex_labeling(&g, &a, &VertexLabeling(vec![1, 1, 2])).unwrap());
        assert!(!is_distinguishing_vertex_labeling(&g, &a, &VertexLabeling(vec![1, 2, 1])).unwrap());

        let c4 = Graph::cycle(4);
        let a = automorphism_group(&c4).unwrap();
        for mask in 0..16u32 {
            let l = VertexLabeling((0..4).map(|i| 1 + (mask >> i & 1)).collect());
            assert!(!is_distinguishing_vertex_labeling(&c4, &a, &l).unwrap());
        }
    }

    #[test]
    fn edge_labeling_checks() {
        let p4 = Graph::path(4);
        let a = automorphism_group(&p4).unwrap();
        let lab = |l: &[u32]| EdgeLabeling::from_edge_order(&p4, l);
        assert!(!is_distinguishing_edge_labeling(&p4, &a, &lab(&[1, 2, 1])).unwrap());
        assert!(is_distinguishing_edge_labeling(&p4, &a, &lab(&[1, 1, 2])).unwrap());

        let star = Graph::star(3);
        let a = automorphism_group(&star).unwrap();
        for labels in [[1, 2, 3], [3, 1, 2]] {
            let l = EdgeLabeling::from_edge_order(&star, &labels);
            assert!(is_distinguishing_edge_labeling(&star, &a, &l).unwrap());
        }
        for labels in [[1, 1, 2], [1, 2, 1], [2, 1, 1], [1, 1, 1]] {
            let l = EdgeLabeling::from_edge_order(&star, &labels);
            assert!(!is_distinguishing_edge_labeling(&star, &a, &l).unwrap());
        }
    }

    #[test]
    fn edge_action_ignores_k2_swaps() {
        let two_k2 = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert_eq!(automorphism_group(&two_k2).unwrap().order(), 8);
        let ea = edge_action_group(&two_k2).unwrap();
        assert_eq!(ea.order, 2);
        assert_eq!(ea.elements.unwrap().len(), 2);

        let with_isolated = Graph::new(5, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(edge_action_group(&with_isolated).unwrap().order, 2);
        assert_eq!(edge_action_group(&Graph::complete(2)).unwrap().order, 1);
    }

    #[test]
    fn isomorphism_and_canonical_form() {
        let g = Graph::paw();
        let h = g.relabel(&[3, 1, 0, 2]);
        let phi = find_isomorphism(&g, &h).unwrap();
        assert!(is_isomorphism(&g, &h, phi.images()));
        assert_eq!(canonical_form(&g), canonical_form(&h));
        assert_ne!(canonical_form(&g), canonical_form(&Graph::star(3)));
        assert!(find_isomorphism(&Graph::path(4), &Graph::star(3)).is_none());
    }

    #[test]
    fn permutation_algebra() {
        let p = Permutation::from_images(vec![1, 2, 0]);
        let q = Permutation::from_images(vec![0, 2, 1]);
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(3));
        assert_eq!(p.compose(&q).images(), &[1, 0, 2]);
    }
}
