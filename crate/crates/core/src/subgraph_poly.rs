//! The subgraph counting polynomial of a d-regular graph.
//!
//! For a weight vector `x = (x_0, ..., x_d)` the polynomial is
//! `F_G(x) = sum_{A subseteq E} prod_v x_{deg_A(v)}`, and its graded form
//! `F_G(x|z)` attaches `z^{2|A|}` to each subset, producing an even
//! polynomial in `z`. The key polynomial `K(x|z) = sum_k C(d,k) x_k z^k`
//! controls where the zeros of `F_G(x|z)` can lie, uniformly over all
//! d-regular graphs.

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::util::{binomial, Kahan};
use std::collections::BTreeMap;

/// Weight vector `(x_0, ..., x_d)` indexed by subset-degree.
#[derive(Debug, Clone, PartialEq)]
pub struct SubgraphVector {
    entries: Vec<f64>,
}

impl SubgraphVector {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::InvalidParameter(
                "weight vector needs at least two entries (d >= 1)".into(),
            ));
        }
        Ok(SubgraphVector { entries })
    }

    /// The degree `d` this vector is built for (`len - 1`).
    pub fn degree(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }
}

impl std::ops::Index<usize> for SubgraphVector {
    type Output = f64;
    fn index(&self, j: usize) -> &f64 {
        &self.entries[j]
    }
}

/// Polynomial in `z` with only even-degree terms, stored as the coefficients
/// of `z^0, z^2, ..., z^{2m}`.
#[derive(Debug, Clone, PartialEq)]
pub struct EvenPolyZ {
    even: Vec<f64>,
}

impl EvenPolyZ {
    /// Builds from the half coefficient list `c_{2k}` for `k = 0..=m`.
    pub fn from_even_coeffs(even: Vec<f64>) -> Self {
        EvenPolyZ { even }
    }

    /// Builds from a dense coefficient list, rejecting nonzero odd entries.
    pub fn from_dense(dense: &[f64]) -> Result<Self> {
        for (i, &c) in dense.iter().enumerate() {
            if i % 2 == 1 && c != 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "odd-degree coefficient at z^{i} is nonzero"
                )));
            }
        }
        Ok(EvenPolyZ {
            even: dense.iter().step_by(2).copied().collect(),
        })
    }

    /// Coefficients of `z^0, z^2, ..., z^{2m}`.
    pub fn even_coeffs(&self) -> &[f64] {
        &self.even
    }

    /// Coefficient of `z^k` (zero for odd `k`).
    pub fn coeff(&self, k: usize) -> f64 {
        if k % 2 == 1 {
            0.0
        } else {
            self.even.get(k / 2).copied().unwrap_or(0.0)
        }
    }

    /// Dense coefficient list `z^0 ..= z^{2m}` with zero odd entries.
    pub fn to_dense(&self) -> Vec<f64> {
        let mut dense = vec![0.0; 2 * self.even.len().saturating_sub(1) + 1];
        for (k, &c) in self.even.iter().enumerate() {
            dense[2 * k] = c;
        }
        dense
    }

    pub fn eval(&self, z: f64) -> f64 {
        let u = z * z;
        self.even.iter().rev().fold(0.0, |acc, &c| acc * u + c)
    }
}

fn check_regular(g: &Graph, d: usize) -> Result<()> {
    if !g.is_simple() {
        return Err(Error::NotSimple(
            "subgraph counting needs a simple graph".into(),
        ));
    }
    match g.regularity() {
        Some(r) if r as usize == d => Ok(()),
        Some(r) => Err(Error::NotRegular(format!(
            "graph is {r}-regular but the weight vector has degree {d}"
        ))),
        None => Err(Error::NotRegular("graph is not regular".into())),
    }
}

fn check_cap(g: &Graph, caps: &Caps) -> Result<()> {
    if g.m() as u32 > caps.edge_subsets {
        return Err(Error::CapExceeded(format!(
            "{} edges exceeds the subset-enumeration cap of {}",
            g.m(),
            caps.edge_subsets
        )));
    }
    Ok(())
}

/// Shared enumeration: walks subsets in Gray-code order, maintaining the
/// degree census incrementally, and hands each subset's vertex-weight
/// product together with `|A|` to the sink.
fn enumerate_products(
    g: &Graph,
    x: &SubgraphVector,
    mut sink: impl FnMut(usize, f64),
) {
    let n = g.n();
    let m = g.m();
    let edges = g.edges();
    let mut deg = vec![0usize; n];
    let mut subset: u64 = 0;
    // first subset: empty
    sink(0, x[0].powi(n as i32));
    for i in 1u64..1u64 << m {
        let gray = i ^ (i >> 1);
        let flipped = (gray ^ subset).trailing_zeros() as usize;
        let (u, v) = edges[flipped];
        if gray > subset {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        } else {
            deg[u as usize] -= 1;
            deg[v as usize] -= 1;
        }
        subset = gray;
        let mut prod = 1.0;
        for &dv in &deg {
            prod *= x[dv];
        }
        sink(subset.count_ones() as usize, prod);
    }
}

/// `F_G(x) = sum_A prod_v x_{deg_A(v)}` by exact enumeration.
pub fn f_eval(g: &Graph, x: &SubgraphVector, caps: &Caps) -> Result<f64> {
    check_regular(g, x.degree())?;
    check_cap(g, caps)?;
    let mut acc = Kahan::new();
    enumerate_products(g, x, |_, p| acc.add(p));
    Ok(acc.value())
}

/// Coefficients of `F_G(x|z)`: the `z^{2k}` coefficient accumulates the
/// products of all subsets of size `k`. Evaluating at `z = 1` reproduces
/// [`f_eval`].
pub fn f_z_coeffs(g: &Graph, x: &SubgraphVector, caps: &Caps) -> Result<EvenPolyZ> {
    check_regular(g, x.degree())?;
    check_cap(g, caps)?;
    let mut acc = vec![Kahan::new(); g.m() + 1];
    enumerate_products(g, x, |size, p| acc[size].add(p));
    Ok(EvenPolyZ::from_even_coeffs(
        acc.iter().map(Kahan::value).collect(),
    ))
}

/// Degree profile of a subset: entry `j` counts the vertices of
/// subset-degree `j`. Keys are canonical and hashable, so the monomial
/// census below is deterministic.
pub type DegreeProfile = Vec<u8>;

/// Monomial expansion of `F_G`: maps each degree profile to the number of
/// edge subsets inducing it. The counts sum to `2^m`.
pub fn f_monomials(g: &Graph, caps: &Caps) -> Result<BTreeMap<DegreeProfile, u64>> {
    if !g.is_simple() {
        return Err(Error::NotSimple(
            "subgraph counting needs a simple graph".into(),
        ));
    }
    let d = g
        .regularity()
        .ok_or_else(|| Error::NotRegular("graph is not regular".into()))? as usize;
    check_cap(g, caps)?;
    let n = g.n();
    let m = g.m();
    let edges = g.edges();
    let mut counts: BTreeMap<DegreeProfile, u64> = BTreeMap::new();
    let mut deg = vec![0usize; n];
    let mut profile = vec![0u8; d + 1];
    let mut subset: u64 = 0;
    profile[0] = n as u8;
    *counts.entry(profile.clone()).or_insert(0) += 1;
    for i in 1u64..1u64 << m {
        let gray = i ^ (i >> 1);
        let flipped = (gray ^ subset).trailing_zeros() as usize;
        let (u, v) = edges[flipped];
        for vertex in [u as usize, v as usize] {
            profile[deg[vertex]] -= 1;
            if gray > subset {
                deg[vertex] += 1;
            } else {
                deg[vertex] -= 1;
            }
            profile[deg[vertex]] += 1;
        }
        subset = gray;
        *counts.entry(profile.clone()).or_insert(0) += 1;
    }
    Ok(counts)
}

/// Key polynomial coefficients: `K(x|z) = sum_k C(d,k) x_k z^k`, returned
/// as the dense list `k = 0..=d`.
pub fn key_poly(x: &SubgraphVector) -> Vec<f64> {
    let d = x.degree() as u32;
    (0..=d)
        .map(|k| binomial(d, k) as f64 * x[k as usize])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::named_graph;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn f_eval_trivial_vectors() {
        let k5 = named_graph("k5").unwrap();
        let ones = SubgraphVector::new(vec![1.0; 5]).unwrap();
        assert_eq!(f_eval(&k5, &ones, &caps()).unwrap(), 1024.0);

        let only_empty = SubgraphVector::new(vec![1.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(f_eval(&k5, &only_empty, &caps()).unwrap(), 1.0);
    }

    #[test]
    fn f_eval_rejects_mismatched_degree() {
        let k5 = named_graph("k5").unwrap();
        let x = SubgraphVector::new(vec![1.0, 1.0, 1.0]).unwrap();
        assert!(matches!(
            f_eval(&k5, &x, &caps()),
            Err(Error::NotRegular(_))
        ));
        let path = crate::graphs::load_graph("3 2\n0 1\n1 2").unwrap();
        let x = SubgraphVector::new(vec![1.0, 1.0]).unwrap();
        assert!(f_eval(&path, &x, &caps()).is_err());
    }

    #[test]
    fn f_z_single_edge() {
        let k2 = named_graph("complete:2").unwrap();
        let x = SubgraphVector::new(vec![3.0, 5.0]).unwrap();
        let p = f_z_coeffs(&k2, &x, &caps()).unwrap();
        assert_eq!(p.even_coeffs(), &[9.0, 25.0]); // x0^2 + x1^2 z^2
        assert_eq!(p.coeff(1), 0.0);
        assert!((p.eval(1.0) - f_eval(&k2, &x, &caps()).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn f_z_at_one_equals_f_eval() {
        let g = named_graph("octahedron").unwrap();
        let x = SubgraphVector::new(vec![2.0, -0.5, 1.5, 0.25, -1.0]).unwrap();
        let p = f_z_coeffs(&g, &x, &caps()).unwrap();
        let direct = f_eval(&g, &x, &caps()).unwrap();
        assert!(crate::util::rel_err(p.eval(1.0), direct) < 1e-10);
    }

    #[test]
    fn balanced_vector_reproduces_rank2_value() {
        // F_G(v(t)) equals the rank-2 partition value at every rotation,
        // in particular at the balanced angle
        let k5 = named_graph("k5").unwrap();
        let (q, w, d) = (5.0, 3.0, 4u32);
        let f = crate::rank2::canonical_rc_frame(q, w).unwrap();
        let tol = crate::config::Tolerances::default();
        let t1 = crate::rank2::find_t1(&f, (1.0, q - 1.0), d, &tol).unwrap();
        let v = f.r_vector((1.0, q - 1.0), t1, d);
        let via_f = f_eval(&k5, &v, &caps()).unwrap();
        let via_z2 = crate::partition::z2(
            &k5,
            crate::partition::RcParams::new(q, w).unwrap(),
            &caps(),
        )
        .unwrap();
        assert!(
            crate::util::rel_err(via_f, via_z2) < 1e-10,
            "{via_f} vs {via_z2}"
        );
    }

    #[test]
    fn monomials_of_k5() {
        let k5 = named_graph("k5").unwrap();
        let counts = f_monomials(&k5, &caps()).unwrap();
        // profile key: entry j = number of vertices with subset-degree j
        assert_eq!(counts[&vec![3, 2, 0, 0, 0]], 10); // single edges
        assert_eq!(counts[&vec![1, 4, 0, 0, 0]], 15); // perfect 2-matchings
        assert_eq!(counts[&vec![0, 2, 3, 0, 0]], 70);
        assert_eq!(counts[&vec![0, 0, 5, 0, 0]], 12); // 5-cycles
        assert_eq!(counts[&vec![0, 0, 3, 2, 0]], 70);
        assert_eq!(counts[&vec![0, 0, 0, 0, 5]], 1); // the full graph
        assert_eq!(counts[&vec![5, 0, 0, 0, 0]], 1); // the empty subset
        let total: u64 = counts.values().sum();
        assert_eq!(total, 1024);
    }

    #[test]
    fn key_poly_shapes() {
        let x = SubgraphVector::new(vec![2.0, 3.0, 4.0]).unwrap();
        assert_eq!(key_poly(&x), vec![2.0, 6.0, 4.0]);
        let x = SubgraphVector::new(vec![1.0, 0.0, 0.0, 1.0]).unwrap();
        assert_eq!(key_poly(&x), vec![1.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn dense_round_trip() {
        let p = EvenPolyZ::from_dense(&[1.0, 0.0, -2.0, 0.0, 3.0]).unwrap();
        assert_eq!(p.even_coeffs(), &[1.0, -2.0, 3.0]);
        assert_eq!(p.to_dense(), vec![1.0, 0.0, -2.0, 0.0, 3.0]);
        assert!(EvenPolyZ::from_dense(&[1.0, 0.5]).is_err());
    }
}
