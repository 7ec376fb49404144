//! Closed-form values and bounds for distinguishing numbers and indices of
//! products of standard families. All arithmetic is exact integer arithmetic.

use std::fmt;

use crate::distinguishing::{distinguishing_index, SearchBudget};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormulaResult {
    Exact(u64),
    /// The value is `d` or `d + 1`.
    Interval(u64),
    UpperBound(u64),
}

impl FormulaResult {
    /// Whether an observed value is consistent with this result.
    pub fn admits(&self, actual: u64) -> bool {
        match *self {
            FormulaResult::Exact(v) => actual == v,
            FormulaResult::Interval(d) => actual == d || actual == d + 1,
            FormulaResult::UpperBound(v) => actual <= v,
        }
    }

    pub fn exact(&self) -> Option<u64> {
        match *self {
            FormulaResult::Exact(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for FormulaResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaResult::Exact(v) => write!(f, "{v}"),
            FormulaResult::Interval(d) => write!(f, "{{{d},{}}}", d + 1),
            FormulaResult::UpperBound(v) => write!(f, "<={v}"),
        }
    }
}

/// `j_i` parts of size `a_i`, sizes strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultipartiteSpec {
    parts: Vec<(u64, u64)>,
}

impl MultipartiteSpec {
    pub fn new(parts: Vec<(u64, u64)>) -> Result<Self> {
        if parts.iter().any(|&(a, j)| a == 0 || j == 0) {
            return Err(Error::DomainError("part sizes and multiplicities must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0].0 <= w[1].0) {
            return Err(Error::DomainError("part sizes must be strictly decreasing".into()));
        }
        Ok(MultipartiteSpec { parts })
    }

    /// Groups a list of part sizes, e.g. `[2, 1, 2]` becomes `[(2, 2), (1, 1)]`.
    pub fn from_part_sizes(sizes: &[usize]) -> Result<Self> {
        let mut sorted: Vec<u64> = sizes.iter().map(|&s| s as u64).collect();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts: Vec<(u64, u64)> = Vec::new();
        for a in sorted {
            match parts.last_mut() {
                Some((size, j)) if *size == a => *j += 1,
                _ => parts.push((a, 1)),
            }
        }
        MultipartiteSpec::new(parts)
    }

    pub fn parts(&self) -> &[(u64, u64)] {
        &self.parts
    }

    pub fn graph(&self) -> Graph {
        let sizes: Vec<usize> = self
            .parts
            .iter()
            .flat_map(|&(a, j)| std::iter::repeat_n(a as usize, j as usize))
            .collect();
        Graph::complete_multipartite(&sizes)
    }
}

/// Smallest `d >= 1` with `d^k >= n`.
pub fn int_root_ceil(n: u64, k: u32) -> u64 {
    assert!(k >= 1);
    let mut d = 1u64;
    while d.checked_pow(k).is_some_and(|p| p < n) {
        d += 1;
    }
    d
}

/// Smallest `e` with `base^e >= x`.
pub fn ceil_log(base: u64, x: u64) -> u32 {
    assert!(base >= 2);
    let mut e = 0;
    let mut p = 1u64;
    while p < x {
        p = p.saturating_mul(base);
        e += 1;
    }
    e
}

/// `C(p, a)`, saturating.
pub fn binomial(p: u64, a: u64) -> u128 {
    if a > p {
        return 0;
    }
    let a = a.min(p - a);
    let mut acc: u128 = 1;
    for i in 0..a as u128 {
        acc = acc.saturating_mul(p as u128 - i) / (i + 1);
    }
    acc
}

/// `D(K_k × K_n)`. The factors commute, so the smaller order plays the role
/// of `k` in the threshold `d^k - ⌈log_d k⌉`. Equal orders carry the extra
/// factor-swap symmetry: `K_2×K_2 = 2K_2` and `K_3×K_3` need 3 labels, larger
/// squares need 2.
// Thresholds kept in the `- 1` / `+ 1` form they are usually stated in.
#[allow(clippy::int_plus_one)]
pub fn d_kron_complete(k: u64, n: u64) -> Result<FormulaResult> {
    if k < 2 || n < 2 {
        return Err(Error::DomainError(format!("need k, n >= 2, got k={k}, n={n}")));
    }
    let (k, n) = (k.min(n), k.max(n));
    if k == n && k <= 3 {
        return Ok(FormulaResult::Exact(3));
    }
    let exp = u32::try_from(k).map_err(|_| Error::DomainError("k too large".into()))?;
    let d = int_root_ceil(n, exp);
    if d < 2 {
        return Err(Error::DomainError("forced d < 2".into()));
    }
    debug_assert!((d - 1).pow(exp) < n && n <= d.pow(exp));
    let top = d.pow(exp) as i128;
    let log = ceil_log(d, k) as i128;
    let n = n as i128;
    Ok(if n <= top - log - 1 {
        FormulaResult::Exact(d)
    } else if n >= top - log + 1 {
        FormulaResult::Exact(d + 1)
    } else {
        FormulaResult::Interval(d)
    })
}

/// Least `p` with `C(p, a_i) >= j_i` for every part class.
pub fn d_complete_multipartite(spec: &MultipartiteSpec) -> FormulaResult {
    let mut p = spec.parts.iter().map(|&(a, _)| a).max().unwrap_or(0);
    while !spec.parts.iter().all(|&(a, j)| binomial(p, a) >= j as u128) {
        p += 1;
    }
    FormulaResult::Exact(p)
}

/// `D(K_{m,n} × K_{p,q})` for `m >= n`, `q >= p`: `mq + 1` when `m = n` and
/// `p = q`, otherwise `mq`. The degenerate `K_{1,1} × K_{1,1} = 2K_2` needs 3.
pub fn d_kron_complete_bipartite(m: u64, n: u64, p: u64, q: u64) -> Result<FormulaResult> {
    if !(m >= n && n >= 1 && q >= p && p >= 1) {
        return Err(Error::PreconditionViolated(format!(
            "need m >= n >= 1 and q >= p >= 1, got ({m},{n},{p},{q})"
        )));
    }
    Ok(FormulaResult::Exact(match (m == n, p == q) {
        _ if (m, n, p, q) == (1, 1, 1, 1) => 3,
        (true, true) => m * q + 1,
        _ => m * q,
    }))
}

/// `D(K_{1,n} × K_{1,m}) = nm` for `n, m >= 3`.
pub fn d_kron_stars(n: u64, m: u64) -> Result<FormulaResult> {
    if n < 3 || m < 3 {
        return Err(Error::DomainError(
            "stars need at least 3 leaves; use d_kron_complete_bipartite".into(),
        ));
    }
    Ok(FormulaResult::Exact(n * m))
}

/// `D'` of the `k`-th Kronecker power of `K_2`, which is `2^(k-1)` copies of `K_2`.
pub fn dprime_k2_power(k: u32) -> Result<FormulaResult> {
    if !(2..=64).contains(&k) {
        return Err(Error::DomainError(format!("need 2 <= k <= 64, got {k}")));
    }
    Ok(FormulaResult::Exact(1u64 << (k - 1)))
}

/// `D'(P_m × P_n)`: 3 for `{3,2}`, 4 for `{3,3}`, otherwise 2.
pub fn dprime_kron_paths(m: u64, n: u64) -> Result<FormulaResult> {
    if m < 2 || n < 2 {
        return Err(Error::DomainError("paths need at least 2 vertices".into()));
    }
    Ok(FormulaResult::Exact(match (m.min(n), m.max(n)) {
        (2, 3) => 3,
        (3, 3) => 4,
        _ => 2,
    }))
}

/// `D'(P_m × K_{1,n})`: `n + 1` for `m = 2`, `2n` for `m = 3`, `n` for `m >= 4`.
pub fn dprime_kron_path_star(m: u64, n: u64) -> Result<FormulaResult> {
    if m < 2 || n < 2 {
        return Err(Error::DomainError("need m >= 2 and n >= 2".into()));
    }
    Ok(FormulaResult::Exact(match m {
        2 => n + 1,
        3 => 2 * n,
        _ => n,
    }))
}

/// `D'(K_{1,n} × K_{1,m}) = nm` for `n >= m >= 3`.
pub fn dprime_kron_stars(n: u64, m: u64) -> Result<FormulaResult> {
    if !(n >= m && m >= 3) {
        return Err(Error::PreconditionViolated(format!("need n >= m >= 3, got n={n}, m={m}")));
    }
    Ok(FormulaResult::Exact(n * m))
}

/// `D'(K_{n,m}) <= ⌈n^(1/m)⌉ + 1` for `n >= m >= 1`.
pub fn dprime_bipartite_upper(n: u64, m: u64) -> Result<FormulaResult> {
    if !(n >= m && m >= 1) {
        return Err(Error::PreconditionViolated(format!("need n >= m >= 1, got n={n}, m={m}")));
    }
    let exp = u32::try_from(m).map_err(|_| Error::DomainError("m too large".into()))?;
    Ok(FormulaResult::UpperBound(int_root_ceil(n, exp) + 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KronIndexBound {
    pub bound: FormulaResult,
    /// False when the solver ran out of budget and the closed-form bound on
    /// `D'(K_{a,b})` was used instead.
    pub from_solver: bool,
}

/// Upper bound `D'(G×H) <= D'(K_{a,b})` with `a = D'(G)`, `b = D'(H)`.
pub fn dprime_kron_upper(a: u64, b: u64, budget: &SearchBudget) -> Result<KronIndexBound> {
    if a < 1 || b < 1 || a.max(b) < 2 {
        return Err(Error::DomainError("need a, b >= 1 and max(a, b) >= 2".into()));
    }
    let kab = Graph::complete_bipartite(a as usize, b as usize);
    match distinguishing_index(&kab, budget) {
        Ok(r) => Ok(KronIndexBound {
            bound: FormulaResult::UpperBound(r.value as u64),
            from_solver: true,
        }),
        Err(Error::BudgetExceeded { .. }) => Ok(KronIndexBound {
            bound: dprime_bipartite_upper(a.max(b), a.min(b))?,
            from_solver: false,
        }),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distinguishing::distinguishing_number;
    use crate::products::{cartesian, kronecker};

    fn solver_d(g: &Graph) -> u64 {
        distinguishing_number(g, &SearchBudget::default()).unwrap().value as u64
    }

    #[test]
    fn integer_helpers() {
        assert_eq!(int_root_ceil(8, 3), 2);
        assert_eq!(int_root_ceil(9, 3), 3);
        assert_eq!(int_root_ceil(1, 5), 1);
        assert_eq!(ceil_log(2, 3), 2);
        assert_eq!(ceil_log(2, 4), 2);
        assert_eq!(ceil_log(3, 1), 0);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 3), 0);
    }

    #[test]
    fn kron_complete_examples() {
        assert_eq!(d_kron_complete(2, 4).unwrap(), FormulaResult::Exact(3));
        assert_eq!(d_kron_complete(2, 3).unwrap(), FormulaResult::Interval(2));
        assert_eq!(d_kron_complete(3, 8).unwrap(), FormulaResult::Exact(3));
        assert_eq!(d_kron_complete(4, 2).unwrap(), d_kron_complete(2, 4).unwrap());
        assert!(matches!(d_kron_complete(1, 5), Err(Error::DomainError(_))));

        // brute force on the complement of K2 □ K4
        let g = cartesian(&Graph::complete(2), &Graph::complete(4)).complement();
        assert_eq!(solver_d(&g), 3);
        // K2 × K3 is C6, resolving the interval to its lower end
        assert_eq!(solver_d(&kronecker(&Graph::complete(2), &Graph::complete(3))), 2);
    }

    #[test]
    fn multipartite_examples() {
        let kpp = MultipartiteSpec::new(vec![(3, 2)]).unwrap();
        assert_eq!(d_complete_multipartite(&kpp), FormulaResult::Exact(4));
        let octahedron = MultipartiteSpec::new(vec![(2, 3)]).unwrap();
        assert_eq!(d_complete_multipartite(&octahedron), FormulaResult::Exact(3));
        assert_eq!(solver_d(&octahedron.graph()), 3);
        let k5 = MultipartiteSpec::new(vec![(1, 5)]).unwrap();
        assert_eq!(d_complete_multipartite(&k5), FormulaResult::Exact(5));
        assert!(MultipartiteSpec::new(vec![(1, 2), (2, 1)]).is_err());
        assert_eq!(
            MultipartiteSpec::from_part_sizes(&[2, 1, 2]).unwrap().parts(),
            &[(2, 2), (1, 1)]
        );
    }

    #[test]
    fn complete_bipartite_examples() {
        assert_eq!(d_kron_complete_bipartite(2, 2, 3, 3).unwrap(), FormulaResult::Exact(7));
        assert_eq!(d_kron_complete_bipartite(3, 2, 2, 2).unwrap(), FormulaResult::Exact(6));
        let two_k2 = kronecker(&Graph::complete(2), &Graph::complete(2));
        assert_eq!(d_kron_complete_bipartite(1, 1, 1, 1).unwrap(), FormulaResult::Exact(solver_d(&two_k2)));
        assert!(matches!(
            d_kron_complete_bipartite(2, 3, 1, 1),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn star_examples() {
        assert_eq!(d_kron_stars(3, 3).unwrap(), FormulaResult::Exact(9));
        assert_eq!(d_kron_stars(3, 4).unwrap(), FormulaResult::Exact(12));
        assert_eq!(d_kron_stars(3, 4).unwrap(), d_kron_complete_bipartite(3, 1, 1, 4).unwrap());
        assert!(d_kron_stars(2, 4).is_err());
        assert_eq!(dprime_kron_stars(3, 3).unwrap(), FormulaResult::Exact(9));
        assert_eq!(dprime_kron_stars(4, 3).unwrap(), FormulaResult::Exact(12));
        assert_eq!(dprime_kron_stars(5, 5).unwrap(), FormulaResult::Exact(25));
        assert!(dprime_kron_stars(3, 4).is_err());
    }

    #[test]
    fn index_formulas() {
        assert_eq!(dprime_k2_power(2).unwrap(), FormulaResult::Exact(2));
        assert_eq!(dprime_k2_power(3).unwrap(), FormulaResult::Exact(4));
        assert_eq!(dprime_k2_power(4).unwrap(), FormulaResult::Exact(8));
        assert!(dprime_k2_power(1).is_err());

        assert_eq!(dprime_kron_paths(3, 2).unwrap(), FormulaResult::Exact(3));
        assert_eq!(dprime_kron_paths(2, 3).unwrap(), FormulaResult::Exact(3));
        assert_eq!(dprime_kron_paths(3, 3).unwrap(), FormulaResult::Exact(4));
        assert_eq!(dprime_kron_paths(5, 4).unwrap(), FormulaResult::Exact(2));
        assert_eq!(dprime_kron_paths(2, 2).unwrap(), FormulaResult::Exact(2));

        assert_eq!(dprime_kron_path_star(4, 2).unwrap(), FormulaResult::Exact(2));
        assert_eq!(dprime_kron_path_star(2, 3).unwrap(), FormulaResult::Exact(4));
        assert_eq!(dprime_kron_path_star(3, 2).unwrap(), FormulaResult::Exact(4));
    }

    #[test]
    fn bipartite_index_bounds() {
        assert_eq!(dprime_bipartite_upper(8, 3).unwrap(), FormulaResult::UpperBound(3));
        assert_eq!(dprime_bipartite_upper(2, 2).unwrap(), FormulaResult::UpperBound(3));
        assert_eq!(dprime_bipartite_upper(1, 1).unwrap(), FormulaResult::UpperBound(2));

        let b = SearchBudget::default();
        for (a, bb, expect) in [(2, 2, 3), (1, 2, 2), (3, 2, 2)] {
            let r = dprime_kron_upper(a, bb, &b).unwrap();
            assert!(r.from_solver);
            assert_eq!(r.bound, FormulaResult::UpperBound(expect));
        }
        assert!(dprime_kron_upper(1, 1, &b).is_err());
    }

    #[test]
    fn admits_semantics() {
        assert!(FormulaResult::Interval(2).admits(3));
        assert!(!FormulaResult::Interval(2).admits(4));
        assert!(FormulaResult::UpperBound(3).admits(1));
        assert_eq!(FormulaResult::Interval(2).to_string(), "{2,3}");
    }
}
