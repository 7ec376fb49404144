use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::catalog::{
    graphs_between, graphs_on, k4_minus_edge, name, random_connected_bipartite, random_graph,
    rigid_fixtures,
};
use super::{oracle, Check, Suite};
use crate::distinguishing::{
    count_distinguishing, count_inequivalent_distinguishing, distinguishing_index,
    distinguishing_number, lift_kronecker_edge_labeling, LabelKind, SearchBudget,
};
use crate::error::{Error, Result};
use crate::families::{
    binomial, d_complete_multipartite, d_kron_complete, d_kron_complete_bipartite, d_kron_stars,
    dprime_k2_power, dprime_kron_path_star, dprime_kron_paths, MultipartiteSpec,
};
use crate::graph::{are_isomorphic, Graph};
use crate::products::{
    bipartite_split, cartesian, kronecker, kronecker_connected_predicted, product_power,
    ProductKind,
};
use crate::skeleton::cartesian_skeleton;
use crate::symmetry::{
    automorphism_group, is_automorphism, is_distinguishing_edge_labeling, DEFAULT_MAX_ELEMENTS,
};

pub(super) fn run(s: &mut Suite) {
    match s.id() {
        "bipartite" => bipartite(s),
        "bounds" => bounds(s),
        "complete" => complete(s),
        "constants" => constants(s),
        "counting" => counting(s),
        "lift" => lift(s),
        "oracle" => oracle_suite(s),
        "paths" => paths(s),
        "pathstar" => pathstar(s),
        "skeleton" => skeleton(s),
        "split" => split(s),
        "structure" => structure(s),
        other => unreachable!("suite `{other}` is listed but not implemented"),
    }
}

/// Independent stream per suite so that suites do not shift each other's samples.
fn rng_for(s: &Suite) -> ChaCha8Rng {
    let salt = s.id().bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    });
    ChaCha8Rng::seed_from_u64(s.seed ^ salt)
}

fn dnum(g: &Graph, caps: &SearchBudget) -> Result<u64> {
    Ok(distinguishing_number(g, caps)?.value as u64)
}

fn dindex(g: &Graph, caps: &SearchBudget) -> Result<u64> {
    Ok(distinguishing_index(g, caps)?.value as u64)
}

fn aut_order(g: &Graph) -> Result<u128> {
    Ok(automorphism_group(g)?.order())
}

fn iso(g: &Graph, h: &Graph) -> Result<Check> {
    let same = are_isomorphic(g, h)?;
    Ok(Check::holds("isomorphic", if same { "isomorphic" } else { "not isomorphic" }, same))
}

fn k2_power(k: usize) -> Graph {
    product_power(ProductKind::Kronecker, &Graph::complete(2), k).expect("k >= 1")
}

fn disjoint_k2(copies: usize) -> Graph {
    (0..copies).fold(Graph::empty(0), |acc, _| acc.disjoint_union(&Graph::complete(2)))
}

/// Number of inequivalent distinguishing `p`-labelings of a complete
/// multipartite graph: the parts of one size must receive pairwise distinct
/// sets of distinct labels, so each size class contributes `C(C(p, a), j)`.
fn multipartite_optimal_labelings(spec: &MultipartiteSpec, p: u64) -> u128 {
    spec.parts()
        .iter()
        .map(|&(a, j)| binomial(u64::try_from(binomial(p, a)).unwrap_or(u64::MAX), j))
        .product()
}

/// `D(K_{m,n} × K_{p,q})` assembled from its components: split into the two
/// complete bipartite pieces, take the multipartite value of each, and when
/// the pieces are isomorphic add one exactly if a piece has a single
/// inequivalent optimal labeling (two copies need two inequivalent ones).
fn split_pipeline(m: usize, n: usize, p: usize, q: usize) -> Result<u64> {
    let (g, h) = (Graph::complete_bipartite(m, n), Graph::complete_bipartite(p, q));
    let product = kronecker(&g, &h);
    let split = bipartite_split(&g, &h)?;
    let mut specs = Vec::new();
    for class in &split.classes {
        let piece = product.induced_subgraph(class);
        let sides = piece.bipartition().sides().cloned().ok_or(Error::NotBipartite)?;
        let mut sizes = [sides[0].len(), sides[1].len()];
        sizes.sort_unstable();
        specs.push((sizes, MultipartiteSpec::from_part_sizes(&sizes)?));
    }
    let values: Vec<u64> = specs
        .iter()
        .map(|(_, spec)| d_complete_multipartite(spec).exact().expect("closed form is exact"))
        .collect();
    let best = *values.iter().max().expect("two pieces");
    let twins = specs[0].0 == specs[1].0;
    Ok(best + u64::from(twins && multipartite_optimal_labelings(&specs[0].1, best) == 1))
}

fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn bipartite(s: &mut Suite) {
    let caps = s.caps;
    for m in 1..=3 {
        for n in 1..=m {
            for p in 1..=3 {
                for q in p..=3 {
                    s.case(
                        format!("D(K_{{{m},{n}}} x K_{{{p},{q}}}) closed form = component-wise value"),
                        || {
                            let formula = d_kron_complete_bipartite(m as u64, n as u64, p as u64, q as u64)?;
                            Ok(Check::formula(formula, split_pipeline(m, n, p, q)?))
                        },
                    );
                }
            }
        }
    }
    for (n, m) in [(3, 3), (3, 4), (4, 3), (4, 4), (5, 3)] {
        s.case(format!("D(K_{{1,{n}}} x K_{{1,{m}}}) = {}", n * m), || {
            let formula = d_kron_stars(n as u64, m as u64)?;
            Ok(Check::formula(formula, split_pipeline(n.max(m), 1, 1, n.min(m))?))
        });
    }
    // The component-wise value against the solver where the group is small.
    for (m, n, p, q) in [(1, 1, 1, 1), (2, 1, 1, 1), (2, 1, 1, 2), (2, 2, 1, 1), (2, 1, 2, 1), (3, 1, 1, 2)] {
        s.case(format!("D(K_{{{m},{n}}} x K_{{{p},{q}}}) solver = component-wise value"), || {
            let g = kronecker(&Graph::complete_bipartite(m, n), &Graph::complete_bipartite(p, q));
            Ok(Check::eq(split_pipeline(m, n, p, q)?, dnum(&g, &caps)?))
        });
    }
    for order in 1..=7 {
        for sizes in integer_partitions(order) {
            s.case(format!("D(K_{sizes:?}) closed form = solver"), || {
                let spec = MultipartiteSpec::from_part_sizes(&sizes)?;
                Ok(Check::formula(d_complete_multipartite(&spec), dnum(&spec.graph(), &caps)?))
            });
        }
    }
    for order in 2..=5 {
        for sizes in integer_partitions(order) {
            s.case(format!("inequivalent optimal labelings of K_{sizes:?}: closed form = solver"), || {
                let spec = MultipartiteSpec::from_part_sizes(&sizes)?;
                let d = d_complete_multipartite(&spec).exact().expect("exact");
                let counted = count_inequivalent_distinguishing(&spec.graph(), d as u32, LabelKind::Vertex, &caps)?;
                Ok(Check::eq(multipartite_optimal_labelings(&spec, d), counted))
            });
        }
    }
    // Bipartite factors are bounded by the complete bipartite product with the
    // same side sizes.
    let mut rng = rng_for(s);
    let mut done = 0;
    while done < 8 {
        let g = random_connected_bipartite(&mut rng, 4);
        let h = random_connected_bipartite(&mut rng, 4);
        if !group_fits(&kronecker(&g, &h)) {
            continue;
        }
        done += 1;
        s.case(
            format!("D({} x {}) <= D(K_{{m,n}} x K_{{p,q}}) for its side sizes", name(&g), name(&h)),
            || {
                let sides = |x: &Graph| {
                    let sides = x.bipartition().sides().cloned().expect("bipartite");
                    (sides[0].len().max(sides[1].len()), sides[0].len().min(sides[1].len()))
                };
                let ((m, n), (q, p)) = (sides(&g), sides(&h));
                let bound = d_kron_complete_bipartite(m as u64, n as u64, p as u64, q as u64)?;
                let bound = bound.exact().expect("exact");
                let actual = dnum(&kronecker(&g, &h), &caps)?;
                Ok(Check::holds(format!("<={bound}"), actual.to_string(), actual <= bound))
            },
        );
    }
}

/// Connected, non-bipartite, R-thin graphs on a prime number of vertices.
fn prime_pool() -> Vec<&'static Graph> {
    graphs_on(3)
        .iter()
        .chain(graphs_on(5))
        .filter(|g| g.is_connected() && !g.is_bipartite() && g.is_r_thin())
        .collect()
}

fn group_fits(g: &Graph) -> bool {
    automorphism_group(g).is_ok_and(|a| a.order() <= DEFAULT_MAX_ELEMENTS as u128)
}

fn bounds(s: &mut Suite) {
    let caps = s.caps;
    let mut rng = rng_for(s);

    let pool = prime_pool();
    let mut pairs: Vec<(usize, usize)> = (0..pool.len())
        .flat_map(|i| (i + 1..pool.len()).map(move |j| (i, j)))
        .collect();
    pairs.shuffle(&mut rng);
    for &(i, j) in pairs.iter().take(15) {
        let (g, h) = (pool[i], pool[j]);
        let (gn, hn) = (name(g), name(h));
        let (cart, kron) = (cartesian(g, h), kronecker(g, h));
        s.case(format!("Aut({gn} [] {hn}) is contained in Aut({gn} x {hn})"), || {
            let group = automorphism_group(&cart)?;
            let outside = group.elements()?.iter().filter(|p| !is_automorphism(&kron, p)).count();
            Ok(Check::eq(0, outside))
        });
        s.case(format!("D({gn} [] {hn}) <= D({gn} x {hn}) <= multipartite bound on R-classes"), || {
            let lower = dnum(&cart, &caps)?;
            let mid = dnum(&kron, &caps)?;
            let spec = MultipartiteSpec::from_part_sizes(&kron.r_equivalence_classes().class_sizes())?;
            let upper = d_complete_multipartite(&spec).exact().expect("exact");
            Ok(Check::holds(
                format!("{lower} <= D <= {upper}"),
                mid.to_string(),
                lower <= mid && mid <= upper,
            ))
        });
        s.case(format!("D({gn} x {hn}) = D({gn} [] {hn})"), || {
            Ok(Check::eq(dnum(&cart, &caps)?, dnum(&kron, &caps)?))
        });
    }

    let thin: Vec<&Graph> = graphs_between(2, 5)
        .filter(|g| g.is_r_thin() && !g.has_isolated_vertices())
        .collect();
    let mut done = 0;
    let mut attempts = 0;
    while done < 10 && attempts < 1000 {
        attempts += 1;
        let (g, h) = (*thin.choose(&mut rng).unwrap(), *thin.choose(&mut rng).unwrap());
        let skel = cartesian(&cartesian_skeleton(g), &cartesian_skeleton(h));
        let kron = kronecker(g, h);
        if !group_fits(&skel) || !group_fits(&kron) {
            continue;
        }
        done += 1;
        s.case(format!("D({} x {}) <= D(S(G) [] S(H))", name(g), name(h)), || {
            let (actual, bound) = (dnum(&kron, &caps)?, dnum(&skel, &caps)?);
            Ok(Check::holds(format!("<={bound}"), actual.to_string(), actual <= bound))
        });
    }

    let k2 = Graph::complete(2);
    let bip: Vec<&Graph> = graphs_between(2, 6)
        .filter(|g| g.is_connected() && g.is_bipartite() && g.edge_count() > 0)
        .collect();
    for h in bip.choose_multiple(&mut rng, 10) {
        s.case(format!("d <= D'(K_2 x {}) <= d + 1 with d = D'(H)", name(h)), || {
            let d = dindex(h, &caps)?;
            let actual = dindex(&kronecker(&k2, h), &caps)?;
            Ok(Check::holds(format!("{{{d},{}}}", d + 1), actual.to_string(), d <= actual && actual <= d + 1))
        });
    }
    for (hn, h) in [("K_3", Graph::complete(3)), ("paw", Graph::paw()), ("C_5", Graph::cycle(5)), ("K_4", Graph::complete(4))] {
        s.case(format!("D'(K_2 x {hn}) <= D'({hn}) + 1"), || {
            let d = dindex(&h, &caps)?;
            let actual = dindex(&kronecker(&k2, &h), &caps)?;
            Ok(Check::holds(format!("<={}", d + 1), actual.to_string(), actual <= d + 1))
        });
    }

    // Kronecker powers of non-bipartite connected R-thin graphs.
    let [r1, r2] = rigid_fixtures();
    let powers = [
        ("paw", Graph::paw(), 2, 2),
        ("C_5", Graph::cycle(5), 2, 2),
        ("K_4", Graph::complete(4), 2, 2),
        ("K_5", Graph::complete(5), 2, 2),
        ("K_3", Graph::complete(3), 2, 3),
        ("K_3", Graph::complete(3), 3, 2),
        ("rigid fixture A", r1, 2, 2),
        ("rigid fixture B", r2, 2, 2),
    ];
    for (gn, g, k, expect) in powers {
        s.case(format!("D(x {gn}^{k}) = {expect}"), || {
            let p = product_power(ProductKind::Kronecker, &g, k)?;
            Ok(Check::eq(expect, dnum(&p, &caps)?))
        });
    }
}

fn complete(s: &mut Suite) {
    let caps = s.caps;
    for k in 2..=5 {
        for n in 2..=5 {
            s.case(format!("K_{k} x K_{n} is the complement of K_{k} [] K_{n}"), || {
                let (kk, kn) = (Graph::complete(k), Graph::complete(n));
                let same = kronecker(&kk, &kn) == cartesian(&kk, &kn).complement();
                Ok(Check::holds("equal", if same { "equal" } else { "different" }, same))
            });
        }
    }
    for k in 2..=5u64 {
        for n in 2..=5u64 {
            if k * n > 10 {
                continue;
            }
            s.case(format!("D(K_{k} x K_{n}) threshold formula = solver"), || {
                let formula = d_kron_complete(k, n)?;
                let g = kronecker(&Graph::complete(k as usize), &Graph::complete(n as usize));
                Ok(Check::formula(formula, dnum(&g, &caps)?))
            });
        }
    }
}

fn constants(s: &mut Suite) {
    let caps = s.caps;
    let both = |s: &mut Suite, gn: String, g: Graph, expect: u64| {
        let g2 = g.clone();
        s.case(format!("D({gn}) = {expect}"), move || Ok(Check::eq(expect, dnum(&g, &caps)?)));
        s.case(format!("D'({gn}) = {expect}"), move || Ok(Check::eq(expect, dindex(&g2, &caps)?)));
    };
    for n in 3..=6 {
        both(s, format!("P_{n}"), Graph::path(n), 2);
    }
    for n in 3..=7 {
        both(s, format!("C_{n}"), Graph::cycle(n), if n <= 5 { 3 } else { 2 });
    }
    for n in 1..=6 {
        s.case(format!("D(K_{n}) = {n}"), || Ok(Check::eq(n as u64, dnum(&Graph::complete(n), &caps)?)));
    }
    for p in 2..=3 {
        s.case(format!("D(K_{{{p},{p}}}) = {}", p + 1), || {
            Ok(Check::eq(p as u64 + 1, dnum(&Graph::complete_bipartite(p, p), &caps)?))
        });
    }
    s.case("D(K_3 x K_3) = 3", || {
        Ok(Check::eq(3, dnum(&kronecker(&Graph::complete(3), &Graph::complete(3)), &caps)?))
    });
}

fn counting(s: &mut Suite) {
    let caps = s.caps;
    s.case("inequivalent distinguishing 2-labelings of P_4 = 6", || {
        Ok(Check::eq(6, count_inequivalent_distinguishing(&Graph::path(4), 2, LabelKind::Vertex, &caps)?))
    });
    for g in graphs_between(1, 5) {
        for k in 2..=3u32 {
            s.case(format!("vertex {k}-labelings of {}: count = oracle, |Aut| divides it", name(g)), || {
                let c = count_distinguishing(g, k, LabelKind::Vertex, &caps)?;
                let naive = oracle::count_distinguishing_vertex(g, k);
                let ok = c.distinguishing == naive && u128::from(c.distinguishing) % c.group_order == 0;
                Ok(Check::holds(
                    format!("{naive} = 0 mod {}", c.group_order),
                    c.distinguishing.to_string(),
                    ok,
                ))
            });
            if g.edge_count() == 0 {
                continue;
            }
            s.case(format!("edge {k}-labelings of {}: count = oracle, |Aut_E| divides it", name(g)), || {
                let c = count_distinguishing(g, k, LabelKind::Edge, &caps)?;
                let naive = oracle::count_distinguishing_edge(g, k);
                let ok = c.distinguishing == naive
                    && c.group_order == oracle::edge_group_order(g) as u128
                    && u128::from(c.distinguishing) % c.group_order == 0;
                Ok(Check::holds(
                    format!("{naive} = 0 mod {}", c.group_order),
                    c.distinguishing.to_string(),
                    ok,
                ))
            });
        }
    }
    // With d = D'(H) for connected bipartite H, K_2 x H is two copies of H and
    // needs a new label exactly when H has a single inequivalent
    // distinguishing d-edge-labeling.
    let k2 = Graph::complete(2);
    for h in graphs_between(2, 5).filter(|g| g.is_connected() && g.is_bipartite()) {
        s.case(format!("D'(K_2 x {}) = d + [D'(H, d) = 1]", name(h)), || {
            let d = dindex(h, &caps)?;
            let classes = count_inequivalent_distinguishing(h, d as u32, LabelKind::Edge, &caps)?;
            let predicted = d + u64::from(classes == 1);
            Ok(Check::eq(predicted, dindex(&kronecker(&k2, h), &caps)?))
        });
    }
}

fn lift(s: &mut Suite) {
    let caps = s.caps;
    let [r1, r2] = rigid_fixtures();
    let curated = [
        ("K_3", Graph::complete(3), "paw", Graph::paw()),
        ("K_3", Graph::complete(3), "C_5", Graph::cycle(5)),
        ("K_3", Graph::complete(3), "K_4", Graph::complete(4)),
        ("paw", Graph::paw(), "paw", Graph::paw()),
        ("paw", Graph::paw(), "K_4", Graph::complete(4)),
        ("K_3", Graph::complete(3), "rigid fixture A", r1.clone()),
    ];
    for (gn, g, hn, h) in curated {
        s.case(format!("lifted edge labeling of {gn} x {hn} is distinguishing"), || {
            let lg = distinguishing_index(&g, &caps)?;
            let lh = distinguishing_index(&h, &caps)?;
            let (a, b) = (lg.value, lh.value);
            let kab = Graph::complete_bipartite(a, b);
            let lk = distinguishing_index(&kab, &caps)?;
            let lifted = lift_kronecker_edge_labeling(
                &g,
                lg.edge_labels().expect("edge labels"),
                &h,
                lh.edge_labels().expect("edge labels"),
                lk.edge_labels().expect("edge labels"),
                (a, b),
            )?;
            let x = kronecker(&g, &h);
            let ok = is_distinguishing_edge_labeling(&x, &automorphism_group(&x)?, &lifted)?;
            let used = lifted.label_count() as usize;
            Ok(Check::holds(
                format!("distinguishing, <= {} labels", lk.value),
                format!("{}, {used} labels", if ok { "distinguishing" } else { "not distinguishing" }),
                ok && used <= lk.value,
            ))
        });
    }
    s.case("D'(G x G) = 2 for rigid fixture A", || Ok(Check::eq(2, dindex(&kronecker(&r1, &r1), &caps)?)));
    s.case("D'(G x G) = 2 for rigid fixture B", || Ok(Check::eq(2, dindex(&kronecker(&r2, &r2), &caps)?)));
    s.case("D'(G x H) = 1 for rigid fixtures A, B", || Ok(Check::eq(1, dindex(&kronecker(&r1, &r2), &caps)?)));
    s.case("rigid fixtures are not isomorphic", || {
        let same = are_isomorphic(&r1, &r2)?;
        Ok(Check::holds("not isomorphic", if same { "isomorphic" } else { "not isomorphic" }, !same))
    });
    let squares = [
        ("C_5", Graph::cycle(5), 2),
        ("C_7", Graph::cycle(7), 2),
        ("K_3", Graph::complete(3), 2),
        ("K_4", Graph::complete(4), 2),
        ("K_3", Graph::complete(3), 3),
    ];
    for (gn, g, k) in squares {
        s.case(format!("D'(x {gn}^{k}) = 2"), || {
            let p = product_power(ProductKind::Kronecker, &g, k)?;
            Ok(Check::eq(2, dindex(&p, &caps)?))
        });
    }
}

fn oracle_suite(s: &mut Suite) {
    let caps = s.caps;
    let mut on_six = 0;
    for g in graphs_between(1, 6).filter(|g| g.is_connected()) {
        on_six += usize::from(g.order() == 6);
        let gn = name(g);
        s.case(format!("|Aut({gn})| = brute force"), || {
            Ok(Check::eq(oracle::automorphisms(g).len() as u128, aut_order(g)?))
        });
        s.case(format!("D({gn}) = brute force"), || {
            Ok(Check::eq(oracle::distinguishing_number(g) as u64, dnum(g, &caps)?))
        });
        if let Some(naive) = oracle::distinguishing_index(g) {
            s.case(format!("D'({gn}) = brute force"), || Ok(Check::eq(naive as u64, dindex(g, &caps)?)));
        }
    }
    s.case("connected graphs on 6 vertices = 112", || Ok(Check::eq(112, on_six)));
}

fn paths(s: &mut Suite) {
    let caps = s.caps;
    s.case("K_2 x K_2 = 2K_2", || iso(&k2_power(2), &disjoint_k2(2)));
    for k in 2..=4u32 {
        let copies = 1usize << (k - 1);
        s.case(format!("x K_2^{k} = {copies}K_2"), || iso(&k2_power(k as usize), &disjoint_k2(copies)));
        s.case(format!("D'(x K_2^{k}) = {copies}"), || {
            Ok(Check::formula(dprime_k2_power(k)?, dindex(&k2_power(k as usize), &caps)?))
        });
    }
    let p = |n| Graph::path(n);
    s.case("P_3 x P_2 = P_3 + P_3", || iso(&kronecker(&p(3), &p(2)), &p(3).disjoint_union(&p(3))));
    s.case("P_3 x P_3 = K_{1,4} + C_4", || {
        iso(&kronecker(&p(3), &p(3)), &Graph::star(4).disjoint_union(&Graph::cycle(4)))
    });
    for (m, n) in [(3, 2), (3, 3), (4, 3), (4, 4), (5, 4), (7, 5)] {
        s.case(format!("D'(P_{m} x P_{n}) = formula"), || {
            Ok(Check::formula(dprime_kron_paths(m as u64, n as u64)?, dindex(&kronecker(&p(m), &p(n)), &caps)?))
        });
    }
    for (m, n) in [(7, 5), (4, 3), (6, 6), (5, 2)] {
        s.case(format!("P_{m} x P_{n} components have ceil/floor of {m}*{n}/2 vertices"), || {
            let mut sizes = kronecker(&p(m), &p(n)).connected_components().class_sizes();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            let expect = vec![(m * n).div_ceil(2), m * n / 2];
            Ok(Check::holds(format!("{expect:?}"), format!("{sizes:?}"), sizes == expect))
        });
    }
}

fn pathstar(s: &mut Suite) {
    let caps = s.caps;
    for (m, n) in [(2, 2), (2, 3), (3, 2), (4, 2), (4, 3), (5, 2)] {
        s.case(format!("D'(P_{m} x K_{{1,{n}}}) = formula"), || {
            let g = kronecker(&Graph::path(m), &Graph::star(n));
            Ok(Check::formula(dprime_kron_path_star(m as u64, n as u64)?, dindex(&g, &caps)?))
        });
    }
}

fn skeleton(s: &mut Suite) {
    s.case("K_4 minus an edge is not R-thin", || {
        let thin = k4_minus_edge().is_r_thin();
        Ok(Check::holds("not R-thin", if thin { "R-thin" } else { "not R-thin" }, !thin))
    });
    let identity = |h: &Graph, k: &Graph| -> Result<Check> {
        let lhs = cartesian_skeleton(&kronecker(h, k));
        let rhs = cartesian(&cartesian_skeleton(h), &cartesian_skeleton(k));
        let same = lhs == rhs;
        Ok(Check::holds(
            format!("{} edges", rhs.edge_count()),
            format!("{} edges{}", lhs.edge_count(), if same { "" } else { ", different edge set" }),
            same,
        ))
    };
    let fixtures = [("paw", Graph::paw()), ("C_5", Graph::cycle(5)), ("C_7", Graph::cycle(7))];
    for (i, (hn, h)) in fixtures.iter().enumerate() {
        for (kn, k) in &fixtures[i..] {
            s.case(format!("S({hn} x {kn}) = S({hn}) [] S({kn})"), || identity(h, k));
        }
    }
    let pool: Vec<&Graph> = graphs_between(2, 6)
        .filter(|g| g.is_r_thin() && !g.has_isolated_vertices())
        .collect();
    let mut rng = rng_for(s);
    for _ in 0..24 {
        let (h, k) = (*pool.choose(&mut rng).unwrap(), *pool.choose(&mut rng).unwrap());
        s.case(format!("S({0} x {1}) = S({0}) [] S({1})", name(h), name(k)), || identity(h, k));
    }
}

fn split(s: &mut Suite) {
    let mut rng = rng_for(s);
    for _ in 0..30 {
        let g = random_connected_bipartite(&mut rng, 6);
        let h = random_connected_bipartite(&mut rng, 6);
        s.case(format!("split classes of {} x {} are its components", name(&g), name(&h)), || {
            let p = kronecker(&g, &h);
            let split = bipartite_split(&g, &h)?;
            let same = split.to_partition(p.order()) == p.connected_components();
            Ok(Check::holds("equal", if same { "equal" } else { "different" }, same))
        });
    }
    for m in 1..=3 {
        for n in 1..=3 {
            for p in 1..=3 {
                for q in 1..=3 {
                    s.case(format!("K_{{{m},{n}}} x K_{{{p},{q}}} splits into {} and {} vertices", m * p + n * q, m * q + n * p), || {
                        let (g, h) = (Graph::complete_bipartite(m, n), Graph::complete_bipartite(p, q));
                        let split = bipartite_split(&g, &h)?;
                        let mut expect = vec![m * p + n * q, m * q + n * p];
                        let mut sizes = kronecker(&g, &h).connected_components().class_sizes();
                        let mut classes: Vec<usize> = split.classes.iter().map(Vec::len).collect();
                        for v in [&mut expect, &mut sizes, &mut classes] {
                            v.sort_unstable();
                        }
                        Ok(Check::holds(
                            format!("{expect:?}"),
                            format!("classes {classes:?}, components {sizes:?}"),
                            classes == expect && sizes == expect,
                        ))
                    });
                }
            }
        }
    }
}

fn structure(s: &mut Suite) {
    let caps = s.caps;
    for g in graphs_between(1, 6) {
        let gn = name(g);
        let c = g.complement();
        s.case(format!("D({gn}) = D(complement)"), || Ok(Check::eq(dnum(g, &caps)?, dnum(&c, &caps)?)));
        s.case(format!("|Aut({gn})| = |Aut(complement)|"), || Ok(Check::eq(aut_order(g)?, aut_order(&c)?)));
    }
    let mut rng = rng_for(s);
    let nontrivial = |rng: &mut ChaCha8Rng| loop {
        let n = rng.gen_range(2..=6);
        let g = random_graph(rng, n, 0.5);
        if g.edge_count() > 0 {
            return g;
        }
    };
    for _ in 0..50 {
        let (g, h) = (nontrivial(&mut rng), nontrivial(&mut rng));
        s.case(format!("{} x {} connectivity follows the factor criterion", name(&g), name(&h)), || {
            let components = kronecker(&g, &h).connected_components().len();
            let predicted = kronecker_connected_predicted(&g, &h);
            let both_bipartite = g.is_connected() && h.is_connected() && g.is_bipartite() && h.is_bipartite();
            let expect = match (predicted, both_bipartite) {
                (true, _) => "1 component",
                (false, true) => "2 components",
                (false, false) => "disconnected",
            };
            let ok = match (predicted, both_bipartite) {
                (true, _) => components == 1,
                (false, true) => components == 2,
                (false, false) => components > 1,
            };
            Ok(Check::holds(expect, format!("{components} components"), ok))
        });
    }
}
