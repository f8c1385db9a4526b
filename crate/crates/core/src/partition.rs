//! Partition functions of the random cluster model: the exact edge-subset
//! sum, the exact Tutte polynomial as an independent second route, the
//! rank-1 and rank-2 approximants, and general spin-configuration sums.

use crate::bipoly::{rational_pow, BivariatePolyZZ};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::graphs::{Graph, UnionFind};
use crate::util::Kahan;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, ToPrimitive, Zero};
use std::collections::HashMap;

/// Cluster-model parameters. `w = e^beta - 1`, so `w >= -1`; the edge-subset
/// sum is defined for any such `w`, while the asymptotic machinery elsewhere
/// restricts to `w >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RcParams {
    pub q: f64,
    pub w: f64,
}

impl RcParams {
    pub fn new(q: f64, w: f64) -> Result<Self> {
        if !(q > 0.0) || !q.is_finite() {
            return Err(Error::Domain(format!("q must be positive, got {q}")));
        }
        if !(w >= -1.0) || !w.is_finite() {
            return Err(Error::Domain(format!("w must be at least -1, got {w}")));
        }
        Ok(RcParams { q, w })
    }
}

fn check_edge_cap(g: &Graph, caps: &Caps) -> Result<()> {
    if g.m() as u32 > caps.edge_subsets {
        return Err(Error::CapExceeded(format!(
            "{} edges exceeds the subset-enumeration cap of {}",
            g.m(),
            caps.edge_subsets
        )));
    }
    Ok(())
}

/// Exact `Z_G(q,w) = sum_A q^{k(A)} w^{|A|}` over all `2^m` edge subsets.
///
/// Subsets are visited in Gray-code order and accumulated with compensated
/// summation; components are recomputed per subset with a reused union-find.
pub fn z_rc(g: &Graph, p: RcParams, caps: &Caps) -> Result<f64> {
    check_edge_cap(g, caps)?;
    Ok(subset_sum(g, p.q, p.w))
}

/// The raw subset sum without the positivity checks of [`RcParams`]; the
/// recursion identity below needs it at shifted `q - 1`.
fn subset_sum(g: &Graph, q: f64, w: f64) -> f64 {
    let n = g.n();
    let m = g.m();
    let edges = g.edges();
    let q_pow: Vec<f64> = (0..=n).map(|k| q.powi(k as i32)).collect();
    let w_pow: Vec<f64> = (0..=m).map(|k| w.powi(k as i32)).collect();
    let mut uf = UnionFind::new(n);
    let mut acc = Kahan::new();
    for i in 0u64..1u64 << m {
        let subset = i ^ (i >> 1);
        uf.reset();
        let mut size = 0usize;
        let mut bits = subset;
        while bits != 0 {
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (u, v) = edges[e];
            uf.union(u, v);
            size += 1;
        }
        acc.add(q_pow[uf.components()] * w_pow[size]);
    }
    acc.value()
}

/// Rank-1 approximant `q^n (1 + w/q)^m` in closed form.
pub fn z1(g: &Graph, p: RcParams) -> f64 {
    p.q.powi(g.n() as i32) * (1.0 + p.w / p.q).powi(g.m() as i32)
}

/// Rank-2 approximant: exact sum over all vertex subsets `S` of
/// `(1+w)^{e(S)} (q-1)^{n-|S|} (1 + w/(q-1))^{e(G-S)}`. Needs `q > 1`.
pub fn z2(g: &Graph, p: RcParams, caps: &Caps) -> Result<f64> {
    if p.q <= 1.0 {
        return Err(Error::Domain(format!(
            "the rank-2 approximant needs q > 1, got q = {}",
            p.q
        )));
    }
    let n = g.n();
    if n as u32 > caps.vertex_subsets {
        return Err(Error::CapExceeded(format!(
            "{n} vertices exceeds the vertex-subset cap of {}",
            caps.vertex_subsets
        )));
    }
    let m = g.m();
    let adj = g.adjacency_masks()?;
    let a_pow: Vec<f64> = (0..=m).map(|k| (1.0 + p.w).powi(k as i32)).collect();
    let b_pow: Vec<f64> = (0..=n).map(|k| (p.q - 1.0).powi(k as i32)).collect();
    let c_pow: Vec<f64> = (0..=m)
        .map(|k| (1.0 + p.w / (p.q - 1.0)).powi(k as i32))
        .collect();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut acc = Kahan::new();
    for s in 0u64..1u64 << n {
        let co = full ^ s;
        let mut e_in = 0u32;
        let mut e_out = 0u32;
        for v in 0..n {
            if s >> v & 1 == 1 {
                e_in += (adj[v] & s).count_ones();
            } else {
                e_out += (adj[v] & co).count_ones();
            }
        }
        // each induced edge was counted from both endpoints
        let e_in = (e_in / 2) as usize;
        let e_out = (e_out / 2) as usize;
        let k = n - s.count_ones() as usize;
        acc.add(a_pow[e_in] * b_pow[k] * c_pow[e_out]);
    }
    Ok(acc.value())
}

/// Exact Tutte polynomial by deletion-contraction with loop and bridge
/// shortcuts, memoized on the canonical edge multiset of each minor.
pub fn tutte(g: &Graph, caps: &Caps) -> Result<BivariatePolyZZ> {
    if g.m() as u32 > caps.tutte_edges {
        return Err(Error::CapExceeded(format!(
            "{} edges exceeds the deletion-contraction cap of {}",
            g.m(),
            caps.tutte_edges
        )));
    }
    if g.n() > 255 {
        return Err(Error::CapExceeded("vertex labels must fit in u8".into()));
    }
    let edges: Vec<(u8, u8)> = g.edges().iter().map(|&(u, v)| (u as u8, v as u8)).collect();
    let mut memo: HashMap<Vec<(u8, u8)>, BivariatePolyZZ> = HashMap::new();
    Ok(tutte_rec(canonical(&edges), &mut memo))
}

/// Relabels vertices by first appearance in the sorted edge list and
/// re-sorts, so that minors reached along different recursion paths share a
/// memo entry whenever their labeled edge multisets coincide.
fn canonical(edges: &[(u8, u8)]) -> Vec<(u8, u8)> {
    let mut sorted = edges.to_vec();
    sorted.sort_unstable();
    let mut map = [u8::MAX; 256];
    let mut next = 0u8;
    for &(u, v) in &sorted {
        for x in [u, v] {
            if map[x as usize] == u8::MAX {
                map[x as usize] = next;
                next += 1;
            }
        }
    }
    let mut out: Vec<(u8, u8)> = sorted
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (map[u as usize], map[v as usize]);
            (a.min(b), a.max(b))
        })
        .collect();
    out.sort_unstable();
    out
}

fn tutte_rec(
    edges: Vec<(u8, u8)>,
    memo: &mut HashMap<Vec<(u8, u8)>, BivariatePolyZZ>,
) -> BivariatePolyZZ {
    if edges.is_empty() {
        return BivariatePolyZZ::one();
    }
    if let Some(hit) = memo.get(&edges) {
        return hit.clone();
    }
    let (u, v) = edges[0];
    let result = if u == v {
        // loop: factor y
        let rest = canonical(&edges[1..]);
        let mut p = tutte_rec(rest, memo);
        p.mul_y();
        p
    } else if is_bridge(&edges, 0) {
        // bridge: factor x, then contract
        let mut p = tutte_rec(contract(&edges, 0), memo);
        p.mul_x();
        p
    } else {
        let deleted = canonical(&edges[1..]);
        let mut p = tutte_rec(deleted, memo);
        p.add_assign(&tutte_rec(contract(&edges, 0), memo));
        p
    };
    memo.insert(edges, result.clone());
    result
}

fn is_bridge(edges: &[(u8, u8)], idx: usize) -> bool {
    let (u, v) = edges[idx];
    let mut uf = UnionFind::new(256);
    for (i, &(a, b)) in edges.iter().enumerate() {
        if i != idx {
            uf.union(a as u32, b as u32);
        }
    }
    uf.find(u as u32) != uf.find(v as u32)
}

fn contract(edges: &[(u8, u8)], idx: usize) -> Vec<(u8, u8)> {
    let (u, v) = edges[idx];
    let out: Vec<(u8, u8)> = edges
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != idx)
        .map(|(_, &(a, b))| {
            let a = if a == v { u } else { a };
            let b = if b == v { u } else { b };
            (a.min(b), a.max(b))
        })
        .collect();
    canonical(&out)
}

/// `Z_G(q,w)` recovered from the Tutte polynomial through
/// `x = 1 + q/w`, `y = 1 + w`; the change of variables needs `q, w != 0`.
/// Evaluation is exact over the rationals until the final rounding.
pub fn z_rc_via_tutte(g: &Graph, p: RcParams, caps: &Caps) -> Result<f64> {
    let q = BigRational::from_f64(p.q)
        .ok_or_else(|| Error::Domain("q is not finite".into()))?;
    let w = BigRational::from_f64(p.w)
        .ok_or_else(|| Error::Domain("w is not finite".into()))?;
    let z = z_rc_via_tutte_exact(g, &q, &w, caps)?;
    z.to_f64()
        .ok_or_else(|| Error::Domain("result does not fit in f64".into()))
}

/// Exact-rational variant of [`z_rc_via_tutte`] for fractional inputs.
pub fn z_rc_via_tutte_exact(
    g: &Graph,
    q: &BigRational,
    w: &BigRational,
    caps: &Caps,
) -> Result<BigRational> {
    if q.is_zero() || w.is_zero() {
        return Err(Error::Domain(
            "the Tutte change of variables is singular at q = 0 or w = 0".into(),
        ));
    }
    let t = tutte(g, caps)?;
    let xm1 = q / w; // x - 1
    let ym1 = w.clone(); // y - 1
    let x = &xm1 + BigRational::from_integer(BigInt::from(1));
    let y = &ym1 + BigRational::from_integer(BigInt::from(1));
    let value = t.eval_rational(&x, &y);
    let k_e = crate::graphs::components(g, crate::graphs::EdgeSubset::full(g.m()));
    Ok(value * rational_pow(&xm1, k_e as u32) * rational_pow(&ym1, g.n() as u32))
}

/// Symmetric `r x r` edge-weight matrix with vertex activities; the carrier
/// for direct spin-configuration sums.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinModel {
    r: usize,
    n: Vec<f64>, // row-major r*r
    mu: Vec<f64>,
}

impl SpinModel {
    pub fn new(n: Vec<Vec<f64>>, mu: Vec<f64>) -> Result<Self> {
        let r = mu.len();
        if r == 0 || n.len() != r || n.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidParameter(
                "matrix must be r x r with r = len(mu) >= 1".into(),
            ));
        }
        for i in 0..r {
            for j in 0..r {
                if (n[i][j] - n[j][i]).abs() > 0.0 {
                    return Err(Error::InvalidParameter(
                        "edge-weight matrix must be symmetric".into(),
                    ));
                }
            }
        }
        Ok(SpinModel {
            r,
            n: n.into_iter().flatten().collect(),
            mu,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    #[inline]
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.n[i * self.r + j]
    }

    pub fn activity(&self, i: usize) -> f64 {
        self.mu[i]
    }
}

/// Exact spin sum `sum_{sigma} prod_v mu_{sigma(v)} prod_{(u,v) in E}
/// N_{sigma(u),sigma(v)}` over all `r^n` configurations.
pub fn z_spin(g: &Graph, model: &SpinModel, caps: &Caps) -> Result<f64> {
    let n = g.n();
    let r = model.r();
    let configs = (r as u128).checked_pow(n as u32).ok_or_else(|| {
        Error::CapExceeded(format!("r^n overflows for r={r}, n={n}"))
    })?;
    if configs > caps.spin_configs {
        return Err(Error::CapExceeded(format!(
            "{configs} spin configurations exceed the cap of {}",
            caps.spin_configs
        )));
    }
    let edges = g.edges();
    let mut sigma = vec![0usize; n];
    let mut acc = Kahan::new();
    loop {
        let mut term = 1.0;
        for v in 0..n {
            term *= model.activity(sigma[v]);
        }
        for &(u, v) in edges {
            term *= model.weight(sigma[u as usize], sigma[v as usize]);
        }
        acc.add(term);
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(acc.value());
            }
            sigma[pos] += 1;
            if sigma[pos] < r {
                break;
            }
            sigma[pos] = 0;
            pos += 1;
        }
    }
}

/// Relative residual of the shift identity
/// `Z_G(q,w) = sum_{S subseteq V} (1+w)^{e(S)} Z_{G-S}(q-1,w)`,
/// with both sides enumerated exactly.
pub fn check_recursion(g: &Graph, p: RcParams, caps: &Caps) -> Result<f64> {
    check_edge_cap(g, caps)?;
    let n = g.n();
    if n as u32 > caps.vertex_subsets {
        return Err(Error::CapExceeded(format!(
            "{n} vertices exceeds the vertex-subset cap of {}",
            caps.vertex_subsets
        )));
    }
    let lhs = subset_sum(g, p.q, p.w);
    let adj = g.adjacency_masks()?;
    let mut rhs = Kahan::new();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for s in 0u64..1u64 << n {
        let mut e_in = 0u32;
        for v in 0..n {
            if s >> v & 1 == 1 {
                e_in += (adj[v] & s).count_ones();
            }
        }
        let weight = (1.0 + p.w).powi((e_in / 2) as i32);
        let inner = if s == full {
            1.0 // the empty graph: a single empty subset with k = 0
        } else {
            subset_sum(&g.without_vertices(s)?, p.q - 1.0, p.w)
        };
        rhs.add(weight * inner);
    }
    Ok((lhs - rhs.value()).abs() / lhs.abs().max(f64::MIN_POSITIVE))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::named_graph;

    fn caps() -> Caps {
        Caps::default()
    }

    /// Independent oracle: plain-order sum with components by DFS,
    /// sharing nothing with the Gray-code path.
    fn z_rc_naive(g: &Graph, q: f64, w: f64) -> f64 {
        let n = g.n();
        let m = g.m();
        let mut total = 0.0;
        for subset in 0u64..1u64 << m {
            let mut adj = vec![Vec::new(); n];
            let mut size = 0;
            for (i, &(u, v)) in g.edges().iter().enumerate() {
                if subset >> i & 1 == 1 {
                    adj[u as usize].push(v as usize);
                    adj[v as usize].push(u as usize);
                    size += 1;
                }
            }
            let mut seen = vec![false; n];
            let mut k = 0;
            for s in 0..n {
                if !seen[s] {
                    k += 1;
                    let mut stack = vec![s];
                    seen[s] = true;
                    while let Some(x) = stack.pop() {
                        for &y in &adj[x] {
                            if !seen[y] {
                                seen[y] = true;
                                stack.push(y);
                            }
                        }
                    }
                }
            }
            total += q.powi(k) * w.powi(size);
        }
        total
    }

    #[test]
    fn z_rc_golden() {
        let k2 = named_graph("complete:2").unwrap();
        assert_eq!(z_rc(&k2, RcParams::new(3.0, 2.0).unwrap(), &caps()).unwrap(), 15.0);

        let tri = named_graph("triangle").unwrap();
        let z = z_rc(&tri, RcParams::new(2.0, 1.0).unwrap(), &caps()).unwrap();
        assert_eq!(z, 28.0);
        assert_eq!(z, z_rc_naive(&tri, 2.0, 1.0));

        // w = 0 keeps only the empty subset
        let k5 = named_graph("k5").unwrap();
        let z = z_rc(&k5, RcParams::new(5.0, 0.0).unwrap(), &caps()).unwrap();
        assert_eq!(z, 3125.0);
    }

    #[test]
    fn z_rc_matches_naive_on_corpus() {
        for name in ["k4", "petersen", "cycle:6"] {
            let g = named_graph(name).unwrap();
            for (q, w) in [(2.5, 0.7), (1.2, 3.0), (5.0, 1.0)] {
                let a = z_rc(&g, RcParams::new(q, w).unwrap(), &caps()).unwrap();
                let b = z_rc_naive(&g, q, w);
                assert!(
                    crate::util::rel_err(a, b) < 1e-12,
                    "{name} ({q},{w}): {a} vs {b}"
                );
            }
        }
    }

    #[test]
    fn z1_golden() {
        let tri = named_graph("triangle").unwrap();
        assert!((z1(&tri, RcParams::new(2.0, 1.0).unwrap()) - 27.0).abs() < 1e-12);
        let k2 = named_graph("complete:2").unwrap();
        // a single edge: rank-1 is exact
        let z = z1(&k2, RcParams::new(3.0, 2.0).unwrap());
        assert!((z - 15.0).abs() < 1e-12);
        assert_eq!(z1(&tri, RcParams::new(7.0, 0.0).unwrap()), 343.0);
    }

    #[test]
    fn z2_golden() {
        let k2 = named_graph("complete:2").unwrap();
        let z = z2(&k2, RcParams::new(2.0, 1.0).unwrap(), &caps()).unwrap();
        assert!((z - 6.0).abs() < 1e-12); // equals Z at q = 2
        let tri = named_graph("triangle").unwrap();
        let z0 = z2(&tri, RcParams::new(3.0, 0.0).unwrap(), &caps()).unwrap();
        assert!((z0 - 27.0).abs() < 1e-12); // w = 0 collapses to q^n
        let zr = z_rc(&tri, RcParams::new(3.0, 1.0).unwrap(), &caps()).unwrap();
        let z2v = z2(&tri, RcParams::new(3.0, 1.0).unwrap(), &caps()).unwrap();
        assert!(z2v <= zr + 1e-12, "rank-2 must lower-bound Z for q >= 2");
        assert!(z2(&tri, RcParams::new(1.0, 1.0).unwrap(), &caps()).is_err());
    }

    #[test]
    fn tutte_golden() {
        let tri = named_graph("triangle").unwrap();
        let t = tutte(&tri, &caps()).unwrap();
        assert_eq!(t.to_string(), "x^2 + x + y");

        let k2 = named_graph("complete:2").unwrap();
        assert_eq!(tutte(&k2, &caps()).unwrap().to_string(), "x");

        // spanning trees of K4: Cayley's 4^2
        let k4 = named_graph("k4").unwrap();
        let t4 = tutte(&k4, &caps()).unwrap();
        assert!((t4.eval_f64(1.0, 1.0) - 16.0).abs() < 1e-9);
        // total subsets
        assert!((t4.eval_f64(2.0, 2.0) - 64.0).abs() < 1e-9);
        assert!(t4.all_coefficients_nonnegative());
    }

    #[test]
    fn tutte_handles_loops_and_parallels() {
        let loop_graph = Graph::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(tutte(&loop_graph, &caps()).unwrap().to_string(), "y");
        let doubled = Graph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(tutte(&doubled, &caps()).unwrap().to_string(), "x + y");
    }

    #[test]
    fn tutte_route_agrees_with_subset_route() {
        for (name, q, w) in [
            ("triangle", 2.0, 1.0),
            ("k4", 3.0, 2.0),
            ("cycle:4", 1.0, 1.0),
            ("petersen", 2.5, 0.7),
        ] {
            let g = named_graph(name).unwrap();
            let p = RcParams::new(q, w).unwrap();
            let a = z_rc(&g, p, &caps()).unwrap();
            let b = z_rc_via_tutte(&g, p, &caps()).unwrap();
            assert!(
                crate::util::rel_err(a, b) < 1e-10,
                "{name} ({q},{w}): {a} vs {b}"
            );
        }
        // the q = 1 point on a cycle collapses to 2^m along both routes
        let c4 = named_graph("cycle:4").unwrap();
        let p = RcParams::new(1.0, 1.0).unwrap();
        let z = z_rc_via_tutte(&c4, p, &caps()).unwrap();
        assert!((z - 16.0).abs() < 1e-9);
        assert!((z_rc(&c4, p, &caps()).unwrap() - 16.0).abs() < 1e-12);
    }

    #[test]
    fn spin_sum_golden() {
        let k2 = named_graph("complete:2").unwrap();
        let ising = SpinModel::new(vec![vec![2.0, 1.0], vec![1.0, 2.0]], vec![1.0, 1.0]).unwrap();
        let z = z_spin(&k2, &ising, &caps()).unwrap();
        assert!((z - 6.0).abs() < 1e-12);

        // all-ones coupling: every edge factor is 1
        let k4 = named_graph("k4").unwrap();
        let ones = SpinModel::new(vec![vec![1.0; 3]; 3], vec![1.0; 3]).unwrap();
        let z = z_spin(&k4, &ones, &caps()).unwrap();
        assert!((z - 81.0).abs() < 1e-9);
    }

    #[test]
    fn rank2_surrogate_equals_vertex_sum() {
        // the vertex-subset form and the direct 2-spin sum are the same
        // quantity for every q > 1
        for (name, q, w) in [("k5", 5.0, 3.0), ("k4", 2.5, 1.0), ("cycle:4", 1.5, 2.0)] {
            let g = named_graph(name).unwrap();
            let a = z2(&g, RcParams::new(q, w).unwrap(), &caps()).unwrap();
            let m = crate::rank2::SpinModel2::rc(q, w).unwrap();
            let b = z_spin(&g, &m.to_general(), &caps()).unwrap();
            assert!(crate::util::rel_err(a, b) < 1e-12, "{name}: {a} vs {b}");
        }
    }

    #[test]
    fn recursion_residuals() {
        for (name, q, w) in [("triangle", 3.0, 1.0), ("k4", 2.5, 0.7)] {
            let g = named_graph(name).unwrap();
            let r = check_recursion(&g, RcParams::new(q, w).unwrap(), &caps()).unwrap();
            assert!(r <= 1e-10, "{name}: residual {r}");
        }
        let k2 = named_graph("complete:2").unwrap();
        let r = check_recursion(&k2, RcParams::new(4.0, 0.0).unwrap(), &caps()).unwrap();
        assert_eq!(r, 0.0);
    }

    #[test]
    fn caps_refuse() {
        let big = crate::graphs::random_regular(22, 3, 1).unwrap(); // 33 edges
        assert!(matches!(
            z_rc(&big, RcParams::new(2.0, 1.0).unwrap(), &caps()),
            Err(Error::CapExceeded(_))
        ));
        let k5 = named_graph("k5").unwrap();
        let tight = Caps {
            tutte_edges: 5,
            ..Caps::default()
        };
        assert!(matches!(tutte(&k5, &tight), Err(Error::CapExceeded(_))));
    }
}
