//! Distinguishing number `D(G)`, distinguishing index `D'(G)`, orbit counts
//! of distinguishing labelings, and the Kronecker edge-labeling lift.
//!
//! Both invariants are computed by one exact search over labelings of a set
//! of points (vertices, or edges under the induced edge action). Points are
//! labelled in index order. Each non-identity group element stays "alive"
//! while it maps every labelled pair onto equal labels; once an element is
//! killed it stays killed for all extensions. A partial labeling is
//! abandoned as soon as some alive element has had its whole support
//! labelled, since that element is then preserved by every completion.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::products::kronecker;
use crate::symmetry::{
    automorphism_group, edge_action_group, EdgeLabeling, Permutation, VertexLabeling,
};

/// Environment variable overriding [`SearchBudget::max_labelings`].
pub const BUDGET_ENV: &str = "KRONSYM_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Larger inputs skip the exact search and only get a certified upper bound.
    pub max_vertices: usize,
    /// Cap on search nodes, i.e. single-point label assignments.
    pub max_labelings: u64,
    pub time_cap: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_vertices: 64,
            max_labelings: 10_000_000,
            time_cap: None,
        }
    }
}

impl SearchBudget {
    /// Defaults, with `max_labelings` taken from `KRONSYM_BUDGET` when set.
    pub fn from_env() -> Self {
        let mut b = SearchBudget::default();
        if let Some(n) = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
        {
            b.max_labelings = n;
        }
        b
    }

    pub fn with_max_labelings(mut self, n: u64) -> Self {
        self.max_labelings = n;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelKind {
    Vertex,
    Edge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Labeling {
    Vertex(VertexLabeling),
    Edge(EdgeLabeling),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguishingResult {
    pub value: usize,
    /// Distinguishing labeling using at most `value` labels.
    pub certificate: Labeling,
    /// Every labeling with `value - 1` labels was refuted.
    pub exhaustive: bool,
}

impl DistinguishingResult {
    pub fn vertex_labels(&self) -> Option<&VertexLabeling> {
        match &self.certificate {
            Labeling::Vertex(l) => Some(l),
            Labeling::Edge(_) => None,
        }
    }

    pub fn edge_labels(&self) -> Option<&EdgeLabeling> {
        match &self.certificate {
            Labeling::Edge(l) => Some(l),
            Labeling::Vertex(_) => None,
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
enum Flow {
    Continue,
    Stop,
    OutOfBudget,
}

enum Outcome {
    Found(Vec<u32>),
    Refuted,
    OutOfBudget,
}

/// Exact labeling search over `points` under a group given by its
/// non-identity elements.
struct LabelSearch<'a> {
    perms: &'a [Permutation],
    inverses: Vec<Permutation>,
    /// Largest point moved by each element.
    last: Vec<usize>,
    labels: Vec<u32>,
    levels: Vec<Vec<u32>>,
    k: u32,
    /// Restrict to first-occurrence label order (labels are interchangeable).
    canonical_labels: bool,
    counting: bool,
    count: u64,
    found: Option<Vec<u32>>,
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
}

impl<'a> LabelSearch<'a> {
    fn new(points: usize, perms: &'a [Permutation], max_nodes: u64, deadline: Option<Instant>) -> Self {
        debug_assert!(perms.iter().all(|p| !p.is_identity()));
        let last = perms
            .iter()
            .map(|p| (0..points).rev().find(|&x| p.apply(x) != x).unwrap_or(0))
            .collect();
        let mut levels = vec![Vec::new(); points + 1];
        levels[0] = (0..perms.len() as u32).collect();
        LabelSearch {
            perms,
            inverses: perms.iter().map(Permutation::inverse).collect(),
            last,
            labels: vec![0; points],
            levels,
            k: 0,
            canonical_labels: true,
            counting: false,
            count: 0,
            found: None,
            nodes: 0,
            max_nodes,
            deadline,
        }
    }

    fn find(&mut self, k: u32) -> Outcome {
        self.k = k;
        self.canonical_labels = true;
        self.counting = false;
        self.found = None;
        match self.descend(0, 0) {
            Flow::Stop => Outcome::Found(self.found.take().expect("leaf recorded")),
            Flow::Continue => Outcome::Refuted,
            Flow::OutOfBudget => Outcome::OutOfBudget,
        }
    }

    fn count_all(&mut self, k: u32) -> Option<u64> {
        self.k = k;
        self.canonical_labels = false;
        self.counting = true;
        self.count = 0;
        match self.descend(0, 0) {
            Flow::OutOfBudget => None,
            _ => Some(self.count),
        }
    }

    fn descend(&mut self, x: usize, max_used: u32) -> Flow {
        if x == self.labels.len() {
            debug_assert!(self.levels[x].is_empty());
            if self.counting {
                self.count += 1;
                return Flow::Continue;
            }
            self.found = Some(self.labels.clone());
            return Flow::Stop;
        }
        let top = if self.canonical_labels {
            self.k.min(max_used + 1)
        } else {
            self.k
        };
        for lab in 1..=top {
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                return Flow::OutOfBudget;
            }
            if self.nodes.is_multiple_of(4096) && self.deadline.is_some_and(|d| Instant::now() > d) {
                return Flow::OutOfBudget;
            }
            self.labels[x] = lab;
            let (lo, hi) = self.levels.split_at_mut(x + 1);
            let (alive, next) = (&lo[x], &mut hi[0]);
            next.clear();
            let mut preserved = false;
            for &si in alive {
                let s = si as usize;
                let a = self.perms[s].apply(x);
                let b = self.inverses[s].apply(x);
                if (a < x && self.labels[a] != lab) || (b < x && self.labels[b] != lab) {
                    continue;
                }
                if self.last[s] == x {
                    preserved = true;
                    break;
                }
                next.push(si);
            }
            if preserved {
                continue;
            }
            match self.descend(x + 1, max_used.max(lab)) {
                Flow::Continue => {}
                other => return other,
            }
        }
        Flow::Continue
    }
}

/// Points, non-identity group elements on them, and the group order.
struct PointAction {
    points: usize,
    perms: Vec<Permutation>,
    order: u128,
}

fn vertex_action(g: &Graph) -> Result<PointAction> {
    let group = automorphism_group(g)?;
    let perms = group.elements()?.iter().filter(|p| !p.is_identity()).cloned().collect();
    Ok(PointAction {
        points: g.order(),
        perms,
        order: group.order(),
    })
}

fn edge_action(g: &Graph) -> Result<PointAction> {
    let group = edge_action_group(g)?;
    let Some(elements) = group.elements else {
        return Err(Error::GroupNotEnumerated {
            order: group.order,
            cap: crate::symmetry::DEFAULT_MAX_ELEMENTS,
        });
    };
    let perms = elements.into_iter().filter(|p| !p.is_identity()).collect();
    Ok(PointAction {
        points: group.edges.len(),
        perms,
        order: group.order,
    })
}

fn preserved_by_some(perms: &[Permutation], labels: &[u32]) -> bool {
    perms
        .iter()
        .any(|p| (0..labels.len()).all(|x| labels[x] == labels[p.apply(x)]))
}

fn to_certificate(g: &Graph, kind: LabelKind, labels: Vec<u32>) -> Labeling {
    match kind {
        LabelKind::Vertex => Labeling::Vertex(VertexLabeling(labels)),
        LabelKind::Edge => Labeling::Edge(EdgeLabeling::from_edge_order(g, &labels)),
    }
}

/// Seeded random labelings from `from` labels upward; all-distinct labels as
/// the last resort. Every returned labeling is checked against the group.
fn certified_upper_bound(g: &Graph, kind: LabelKind, action: &PointAction, from: usize) -> DistinguishingResult {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b72_6f6e);
    let n = action.points;
    for d in from.max(1)..n {
        for _ in 0..2000 {
            let labels: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=d as u32)).collect();
            if !preserved_by_some(&action.perms, &labels) {
                return DistinguishingResult {
                    value: d,
                    certificate: to_certificate(g, kind, labels),
                    exhaustive: false,
                };
            }
        }
    }
    DistinguishingResult {
        value: n,
        certificate: to_certificate(g, kind, (1..=n as u32).collect()),
        exhaustive: false,
    }
}

fn minimal_labels(g: &Graph, kind: LabelKind, action: PointAction, budget: &SearchBudget) -> Result<DistinguishingResult> {
    let n = action.points;
    if action.perms.is_empty() {
        return Ok(DistinguishingResult {
            value: usize::from(n > 0),
            certificate: to_certificate(g, kind, vec![1; n]),
            exhaustive: true,
        });
    }
    if g.order() > budget.max_vertices {
        return Err(Error::BudgetExceeded {
            best: Some(Box::new(certified_upper_bound(g, kind, &action, 2))),
        });
    }
    let deadline = budget.time_cap.map(|t| Instant::now() + t);
    let mut search = LabelSearch::new(n, &action.perms, budget.max_labelings, deadline);
    // One label never breaks a non-trivial group, so start at two.
    for d in 2..=n {
        match search.find(d as u32) {
            Outcome::Found(labels) => {
                return Ok(DistinguishingResult {
                    value: d,
                    certificate: to_certificate(g, kind, labels),
                    exhaustive: true,
                })
            }
            Outcome::Refuted => {}
            Outcome::OutOfBudget => {
                return Err(Error::BudgetExceeded {
                    best: Some(Box::new(certified_upper_bound(g, kind, &action, d))),
                })
            }
        }
    }
    unreachable!("all-distinct labels always distinguish a faithful action")
}

/// `D(G)`: least number of vertex labels preserved only by the identity.
/// The null graph needs zero labels.
pub fn distinguishing_number(g: &Graph, budget: &SearchBudget) -> Result<DistinguishingResult> {
    if g.order() == 0 {
        return Ok(DistinguishingResult {
            value: 0,
            certificate: Labeling::Vertex(VertexLabeling(Vec::new())),
            exhaustive: true,
        });
    }
    minimal_labels(g, LabelKind::Vertex, vertex_action(g)?, budget)
}

/// `D'(G)`: least number of edge labels preserved only by automorphisms that
/// fix every edge.
pub fn distinguishing_index(g: &Graph, budget: &SearchBudget) -> Result<DistinguishingResult> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    minimal_labels(g, LabelKind::Edge, edge_action(g)?, budget)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LabelingCount {
    /// Distinguishing labelings with labels in `1..=k`.
    pub distinguishing: u64,
    /// Order of the group acting on the labelled points.
    pub group_order: u128,
    /// Orbits of distinguishing labelings. Each orbit has exactly
    /// `group_order` members because the stabiliser is trivial.
    pub inequivalent: u128,
}

pub fn count_distinguishing(g: &Graph, k: u32, kind: LabelKind, budget: &SearchBudget) -> Result<LabelingCount> {
    let action = match kind {
        LabelKind::Vertex => vertex_action(g)?,
        LabelKind::Edge => edge_action(g)?,
    };
    let space = (k as u128).checked_pow(action.points as u32);
    if space.is_none_or(|s| s > budget.max_labelings as u128) {
        return Err(Error::BudgetExceeded { best: None });
    }
    let distinguishing = if k == 0 {
        u64::from(action.points == 0)
    } else {
        let deadline = budget.time_cap.map(|t| Instant::now() + t);
        let mut search = LabelSearch::new(action.points, &action.perms, u64::MAX, deadline);
        search
            .count_all(k)
            .ok_or(Error::BudgetExceeded { best: None })?
    };
    debug_assert_eq!(distinguishing as u128 % action.order, 0);
    Ok(LabelingCount {
        distinguishing,
        group_order: action.order,
        inequivalent: distinguishing as u128 / action.order,
    })
}

/// Number of inequivalent distinguishing `k`-labelings.
pub fn count_inequivalent_distinguishing(
    g: &Graph,
    k: u32,
    kind: LabelKind,
    budget: &SearchBudget,
) -> Result<u128> {
    Ok(count_distinguishing(g, k, kind, budget)?.inequivalent)
}

fn check_range(g: &Graph, l: &EdgeLabeling, max: usize, name: &str) -> Result<()> {
    if l.0.len() != g.edge_count() || l.0.keys().any(|&(u, v)| !g.has_edge(u, v)) {
        return Err(Error::LabelRangeMismatch(format!(
            "{name} does not label exactly the edges of its graph"
        )));
    }
    if let Some(&bad) = l.0.values().find(|&&x| x == 0 || x as usize > max) {
        return Err(Error::LabelRangeMismatch(format!(
            "{name} uses label {bad} outside 1..={max}"
        )));
    }
    Ok(())
}

/// Lifts edge labelings of `G` (labels `1..=a`) and `H` (labels `1..=b`) to
/// `G×H`. `parts_labeling` labels `K_{a,b}` with parts `0..a` and `a..a+b`;
/// the product edges arising from a `G`-edge labelled `i` and an `H`-edge
/// labelled `p` (both of them) receive the label of `z_i z'_p`.
pub fn lift_kronecker_edge_labeling(
    g: &Graph,
    g_labels: &EdgeLabeling,
    h: &Graph,
    h_labels: &EdgeLabeling,
    parts_labeling: &EdgeLabeling,
    parts: (usize, usize),
) -> Result<EdgeLabeling> {
    let (a, b) = parts;
    check_range(g, g_labels, a, "G labeling")?;
    check_range(h, h_labels, b, "H labeling")?;
    check_range(&Graph::complete_bipartite(a, b), parts_labeling, usize::MAX, "K_{a,b} labeling")?;
    let m = h.order();
    let mut out = EdgeLabeling::default();
    for (&(u, v), &i) in &g_labels.0 {
        for (&(x, y), &p) in &h_labels.0 {
            let lab = parts_labeling.0[&(i as usize - 1, a + p as usize - 1)];
            for (s, t) in [(u * m + x, v * m + y), (u * m + y, v * m + x)] {
                out.0.insert((s.min(t), s.max(t)), lab);
            }
        }
    }
    debug_assert_eq!(out.0.len(), kronecker(g, h).edge_count());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::{automorphism_group, is_distinguishing_edge_labeling, is_distinguishing_vertex_labeling};

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    fn d(g: &Graph) -> usize {
        distinguishing_number(g, &budget()).unwrap().value
    }

    fn dp(g: &Graph) -> usize {
        distinguishing_index(g, &budget()).unwrap().value
    }

    /// Naive oracle: all n^k labelings against every automorphism.
    fn naive_count(g: &Graph, k: u32) -> u64 {
        let group = automorphism_group(g).unwrap();
        let n = g.order();
        let total = (k as u64).pow(n as u32);
        (0..total)
            .filter(|&code| {
                let mut c = code;
                let l: Vec<u32> = (0..n)
                    .map(|_| {
                        let x = (c % k as u64) as u32 + 1;
                        c /= k as u64;
                        x
                    })
                    .collect();
                is_distinguishing_vertex_labeling(g, &group, &VertexLabeling(l)).unwrap()
            })
            .count() as u64
    }

    #[test]
    fn number_examples() {
        assert_eq!(d(&Graph::path(4)), 2);
        assert_eq!(d(&Graph::cycle(5)), 3);
        let k3 = Graph::complete(3);
        assert_eq!(d(&kronecker(&k3, &k3)), 3);
        assert_eq!(d(&Graph::empty(0)), 0);
        assert_eq!(d(&Graph::empty(1)), 1);
        assert_eq!(d(&Graph::paw()), 2);
    }

    #[test]
    fn index_examples() {
        let p3p2 = kronecker(&Graph::path(3), &Graph::path(2));
        assert_eq!(dp(&p3p2), 3);
        let p3p3 = kronecker(&Graph::path(3), &Graph::path(3));
        assert_eq!(dp(&p3p3), 4);
        assert_eq!(dp(&Graph::cycle(6)), 2);
        assert_eq!(dp(&Graph::complete(2)), 1);
        assert!(matches!(distinguishing_index(&Graph::empty(3), &budget()), Err(Error::NoEdges)));
    }

    #[test]
    fn extreme_values() {
        for n in 1..=6 {
            assert_eq!(d(&Graph::complete(n)), n);
        }
        for n in 2..=6 {
            assert_eq!(d(&Graph::star(n)), n);
        }
        assert_eq!(d(&Graph::path(5)), 2);
    }

    #[test]
    fn certificates_verify() {
        for g in [Graph::cycle(5), Graph::complete_bipartite(2, 3), Graph::paw(), Graph::path(6)] {
            let group = automorphism_group(&g).unwrap();
            let r = distinguishing_number(&g, &budget()).unwrap();
            assert!(r.exhaustive);
            let cert = r.vertex_labels().unwrap();
            assert!(cert.label_count() as usize <= r.value);
            assert!(is_distinguishing_vertex_labeling(&g, &group, cert).unwrap());
            let r = distinguishing_index(&g, &budget()).unwrap();
            assert!(is_distinguishing_edge_labeling(&g, &group, r.edge_labels().unwrap()).unwrap());
        }
    }

    #[test]
    fn certificate_is_lexicographically_least() {
        // P4 with two labels: 1,1,1,2 is the first labeling not fixed by reversal.
        let r = distinguishing_number(&Graph::path(4), &budget()).unwrap();
        assert_eq!(r.vertex_labels().unwrap().0, vec![1, 1, 1, 2]);
    }

    #[test]
    fn counting_examples() {
        let b = budget();
        assert_eq!(count_inequivalent_distinguishing(&Graph::path(4), 2, LabelKind::Vertex, &b).unwrap(), 6);
        assert_eq!(count_inequivalent_distinguishing(&Graph::complete(2), 2, LabelKind::Vertex, &b).unwrap(), 1);
        assert_eq!(count_inequivalent_distinguishing(&Graph::path(3), 1, LabelKind::Vertex, &b).unwrap(), 0);
        let c = count_distinguishing(&Graph::path(4), 2, LabelKind::Vertex, &b).unwrap();
        assert_eq!((c.distinguishing, c.group_order), (12, 2));
    }

    #[test]
    fn counting_matches_naive_enumeration() {
        for g in [Graph::cycle(5), Graph::paw(), Graph::star(3), Graph::complete_bipartite(2, 2)] {
            for k in 1..=3 {
                let c = count_distinguishing(&g, k, LabelKind::Vertex, &budget()).unwrap();
                assert_eq!(c.distinguishing, naive_count(&g, k), "{g:?} k={k}");
                assert_eq!(c.distinguishing as u128 % c.group_order, 0);
            }
        }
    }

    #[test]
    fn counting_respects_budget() {
        let tight = budget().with_max_labelings(100);
        assert!(matches!(
            count_distinguishing(&Graph::cycle(8), 2, LabelKind::Vertex, &tight),
            Err(Error::BudgetExceeded { best: None })
        ));
    }

    #[test]
    fn budget_exceeded_returns_certified_bound() {
        let tight = budget().with_max_labelings(3);
        let g = Graph::complete(5);
        match distinguishing_number(&g, &tight) {
            Err(Error::BudgetExceeded { best: Some(best) }) => {
                assert!(!best.exhaustive);
                let group = automorphism_group(&g).unwrap();
                assert!(is_distinguishing_vertex_labeling(&g, &group, best.vertex_labels().unwrap()).unwrap());
                assert_eq!(best.value, 5);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn lift_with_single_labels_is_constant() {
        let g = Graph::cycle(5);
        let h = Graph::complete(3);
        let lg = EdgeLabeling::from_edge_order(&g, &[1; 5]);
        let lh = EdgeLabeling::from_edge_order(&h, &[1; 3]);
        let k11 = Graph::complete_bipartite(1, 1);
        let lk = EdgeLabeling::from_edge_order(&k11, &[7]);
        let lifted = lift_kronecker_edge_labeling(&g, &lg, &h, &lh, &lk, (1, 1)).unwrap();
        assert_eq!(lifted.0.len(), 30);
        assert!(lifted.0.values().all(|&x| x == 7));
    }

    #[test]
    fn lift_on_paw_squared_is_distinguishing() {
        let paw = Graph::paw();
        let r = distinguishing_index(&paw, &budget()).unwrap();
        let a = r.value;
        let lp = r.edge_labels().unwrap().clone();
        let kab = Graph::complete_bipartite(a, a);
        let rk = distinguishing_index(&kab, &budget()).unwrap();
        let lifted = lift_kronecker_edge_labeling(&paw, &lp, &paw, &lp, rk.edge_labels().unwrap(), (a, a)).unwrap();
        let x = kronecker(&paw, &paw);
        let group = automorphism_group(&x).unwrap();
        assert!(is_distinguishing_edge_labeling(&x, &group, &lifted).unwrap());
        assert!(lifted.distinct_labels() <= rk.edge_labels().unwrap().distinct_labels());
    }

    #[test]
    fn lift_rejects_out_of_range_labels() {
        let g = Graph::path(3);
        let lg = EdgeLabeling::from_edge_order(&g, &[1, 3]);
        let lk = EdgeLabeling::from_edge_order(&Graph::complete_bipartite(2, 2), &[1, 2, 2, 1]);
        assert!(matches!(
            lift_kronecker_edge_labeling(&g, &lg, &g, &lg, &lk, (2, 2)),
            Err(Error::LabelRangeMismatch(_))
        ));
    }
}
