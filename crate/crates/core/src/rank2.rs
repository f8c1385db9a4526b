//! Rank-2 decompositions of positive definite 2x2 matrices and their
//! rotation frames.
//!
//! Writing `N = a a^T + b b^T` is possible in a one-parameter family: the
//! rotated pair `a(t), b(t)` reproduces `N` for every angle `t`, and each
//! rotation yields a weight vector `v(t)` with
//! `F_G(v(t)) = Z_G(N, mu)` for all d-regular `G`. Two rotations matter:
//!
//! * `t0` maximizes the leading entry `r_0(t)`; the maximum is the
//!   per-vertex growth rate and the rest of `v(t0)` has a sign structure
//!   that makes every term of `F_G` non-negative;
//! * `t1` balances the frame so that all zeros of `F_G(v(t1)|z)` land on a
//!   circle centered at the origin, of radius `R_c` determined by `N` and
//!   `mu` alone.

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::partition::SpinModel;
use crate::subgraph_poly::SubgraphVector;
use std::f64::consts::TAU;

/// Positive definite symmetric 2x2 edge matrix with positive entries,
/// plus positive vertex activities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinModel2 {
    pub n11: f64,
    pub n12: f64,
    pub n22: f64,
    pub mu1: f64,
    pub mu2: f64,
}

impl SpinModel2 {
    pub fn new(n11: f64, n12: f64, n22: f64, mu1: f64, mu2: f64) -> Result<Self> {
        for (name, v) in [("N11", n11), ("N12", n12), ("N22", n22)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        if n11 * n22 - n12 * n12 <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "matrix must be positive definite, det = {}",
                n11 * n22 - n12 * n12
            )));
        }
        for (name, v) in [("mu1", mu1), ("mu2", mu2)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        Ok(SpinModel2 {
            n11,
            n12,
            n22,
            mu1,
            mu2,
        })
    }

    /// The rank-2 surrogate of the cluster model: edge matrix
    /// `[[1+w, 1], [1, 1+w/(q-1)]]` with activities `(1, q-1)`.
    /// Positive definiteness forces `q > 1` and `w > 0`.
    pub fn rc(q: f64, w: f64) -> Result<Self> {
        if q <= 1.0 {
            return Err(Error::Domain(format!("need q > 1, got {q}")));
        }
        if w <= 0.0 {
            return Err(Error::Degenerate(format!(
                "the surrogate matrix is rank-1 at w = 0 (got w = {w})"
            )));
        }
        SpinModel2::new(1.0 + w, 1.0, 1.0 + w / (q - 1.0), 1.0, q - 1.0)
    }

    pub fn det(&self) -> f64 {
        self.n11 * self.n22 - self.n12 * self.n12
    }

    pub fn mu(&self) -> (f64, f64) {
        (self.mu1, self.mu2)
    }

    pub fn to_general(&self) -> SpinModel {
        SpinModel::new(
            vec![vec![self.n11, self.n12], vec![self.n12, self.n22]],
            vec![self.mu1, self.mu2],
        )
        .expect("a valid SpinModel2 is a valid SpinModel")
    }
}

/// One decomposition `N = a a^T + b b^T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rank2Frame {
    pub a1: f64,
    pub a2: f64,
    pub b1: f64,
    pub b2: f64,
}

impl Rank2Frame {
    /// The rotated frame `a(t) = a cos t + b sin t`,
    /// `b(t) = b cos t - a sin t`; reproduces the same matrix.
    pub fn rotate(&self, t: f64) -> Rank2Frame {
        let (s, c) = t.sin_cos();
        Rank2Frame {
            a1: self.a1 * c + self.b1 * s,
            a2: self.a2 * c + self.b2 * s,
            b1: self.b1 * c - self.a1 * s,
            b2: self.b2 * c - self.a2 * s,
        }
    }

    /// Entries of `a a^T + b b^T` as `(n11, n12, n22)`.
    pub fn gram(&self) -> (f64, f64, f64) {
        (
            self.a1 * self.a1 + self.b1 * self.b1,
            self.a1 * self.a2 + self.b1 * self.b2,
            self.a2 * self.a2 + self.b2 * self.b2,
        )
    }

    /// Worst entrywise deviation of the reconstruction from `m`.
    pub fn reconstruction_residual(&self, m: &SpinModel2) -> f64 {
        let (n11, n12, n22) = self.gram();
        (n11 - m.n11)
            .abs()
            .max((n12 - m.n12).abs())
            .max((n22 - m.n22).abs())
    }

    /// `r_j(t) = mu1 a1(t)^{d-j} b1(t)^j + mu2 a2(t)^{d-j} b2(t)^j` for
    /// `j = 0..=d`.
    pub fn r_vector(&self, mu: (f64, f64), t: f64, d: u32) -> SubgraphVector {
        let f = self.rotate(t);
        let entries = (0..=d)
            .map(|j| {
                mu.0 * f.a1.powi((d - j) as i32) * f.b1.powi(j as i32)
                    + mu.1 * f.a2.powi((d - j) as i32) * f.b2.powi(j as i32)
            })
            .collect();
        SubgraphVector::new(entries).expect("d >= 1 gives at least two entries")
    }

    /// Leading entry `r_0(t)`.
    pub fn r0(&self, mu: (f64, f64), t: f64, d: u32) -> f64 {
        let f = self.rotate(t);
        mu.0 * f.a1.powi(d as i32) + mu.1 * f.a2.powi(d as i32)
    }

    /// `r_1(t)`; its zeros are the stationary points of `r_0` since
    /// `d/dt r_0 = d * r_1`.
    pub fn r1(&self, mu: (f64, f64), t: f64, d: u32) -> f64 {
        let f = self.rotate(t);
        mu.0 * f.a1.powi((d - 1) as i32) * f.b1 + mu.1 * f.a2.powi((d - 1) as i32) * f.b2
    }

    fn has_signed_pattern(&self) -> bool {
        self.a1 > 0.0 && self.a2 > 0.0 && self.b1 > 0.0 && self.b2 < 0.0
    }
}

/// Eigen-decomposition frame: `a` along the positive principal eigenvector,
/// `b` along the second one oriented `b1 > 0 > b2`.
pub fn decompose_signed(m: &SpinModel2) -> Rank2Frame {
    let (p, r, s) = (m.n11, m.n12, m.n22);
    let half_trace = 0.5 * (p + s);
    let disc = (0.25 * (p - s) * (p - s) + r * r).sqrt();
    let l1 = half_trace + disc;
    let l2 = (half_trace - disc).max(0.0); // clamp roundoff on near-singular input
    // r > 0, so (l1 - s, r) is the positive principal eigenvector
    let (vx, vy) = (l1 - s, r);
    let norm = vx.hypot(vy);
    let (vx, vy) = (vx / norm, vy / norm);
    Rank2Frame {
        a1: l1.sqrt() * vx,
        a2: l1.sqrt() * vy,
        b1: l2.sqrt() * vy,
        b2: -l2.sqrt() * vx,
    }
}

/// All-positive frame, reached from the signed one by rotating with
/// `tan(alpha)` at the midpoint of the admissible interval
/// `(-a1/b1, b2/a2)`.
pub fn decompose_positive(m: &SpinModel2) -> Rank2Frame {
    let f = decompose_signed(m);
    let lo = (-f.a1 / f.b1).atan();
    let hi = (f.b2 / f.a2).atan();
    f.rotate(0.5 * (lo + hi))
}

/// The explicit frame of the cluster-model surrogate:
/// `a = (s, s)` with `s = sqrt(1 + w/q)` and
/// `b = (sqrt((q-1)w/q), -sqrt(w/(q(q-1))))`. At `w = 0` the second vector
/// degenerates to zero and the matrix drops to rank 1.
pub fn canonical_rc_frame(q: f64, w: f64) -> Result<Rank2Frame> {
    if q <= 1.0 {
        return Err(Error::Domain(format!("need q > 1, got {q}")));
    }
    if w < 0.0 {
        return Err(Error::Domain(format!("need w >= 0, got {w}")));
    }
    let a = (1.0 + w / q).sqrt();
    Ok(Rank2Frame {
        a1: a,
        a2: a,
        b1: ((q - 1.0) * w / q).sqrt(),
        b2: -(w / (q * (q - 1.0))).sqrt(),
    })
}

fn fold_angle(t: f64) -> f64 {
    let t = t.rem_euclid(TAU);
    if TAU - t < 1e-7 {
        0.0
    } else {
        t
    }
}

/// Stationary angles of `r_0` on `[lo, hi]`: sign changes of `r_1` on a
/// uniform grid, each polished by bisection. Interval endpoints are always
/// included as candidates.
pub(crate) fn critical_angles(
    f: &Rank2Frame,
    mu: (f64, f64),
    d: u32,
    lo: f64,
    hi: f64,
    wrap: bool,
    tol: &Tolerances,
) -> Vec<f64> {
    let points = tol.t_scan_points.max(16);
    let step = (hi - lo) / points as f64;
    let grid: Vec<f64> = (0..=points).map(|i| lo + i as f64 * step).collect();
    let vals: Vec<f64> = grid.iter().map(|&t| f.r1(mu, t, d)).collect();
    let mut cands: Vec<f64> = Vec::new();
    if wrap {
        // r_1 vanishes identically at 0 and pi for symmetric frames, where
        // roundoff can hide the sign change; both angles are harmless as
        // extra candidates otherwise
        cands.push(0.0);
        cands.push(std::f64::consts::PI);
    } else {
        cands.push(lo);
        cands.push(hi);
    }
    for i in 0..points {
        let (a, b) = (vals[i], vals[i + 1]);
        if a == 0.0 {
            cands.push(grid[i]);
            continue;
        }
        if a.signum() != b.signum() && b != 0.0 {
            let (mut t_lo, mut t_hi) = (grid[i], grid[i + 1]);
            let mut v_lo = a;
            while t_hi - t_lo > tol.t_bisect {
                let mid = 0.5 * (t_lo + t_hi);
                let v_mid = f.r1(mu, mid, d);
                if v_mid == 0.0 {
                    t_lo = mid;
                    t_hi = mid;
                    break;
                }
                if v_mid.signum() == v_lo.signum() {
                    t_lo = mid;
                    v_lo = v_mid;
                } else {
                    t_hi = mid;
                }
            }
            cands.push(0.5 * (t_lo + t_hi));
        }
    }
    let mut cands: Vec<f64> = cands
        .into_iter()
        .map(|t| if wrap { fold_angle(t) } else { t })
        .collect();
    cands.sort_by(|a, b| a.partial_cmp(b).unwrap());
    cands.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
    cands
}

fn argmax_r0(f: &Rank2Frame, mu: (f64, f64), d: u32, cands: &[f64], tol: &Tolerances) -> f64 {
    let best = cands
        .iter()
        .map(|&t| f.r0(mu, t, d))
        .fold(f64::NEG_INFINITY, f64::max);
    let band = tol.max_tie * best.abs().max(1.0);
    // ties resolve to the smallest angle
    *cands
        .iter()
        .find(|&&t| f.r0(mu, t, d) >= best - band)
        .expect("candidate list is never empty")
}

/// Global maximizer of `r_0(t)` on `[0, 2pi)`; among ties, the smallest
/// angle.
pub fn find_t0(f: &Rank2Frame, mu: (f64, f64), d: u32, tol: &Tolerances) -> f64 {
    let cands = critical_angles(f, mu, d, 0.0, TAU, true, tol);
    if cands.is_empty() {
        return 0.0;
    }
    argmax_r0(f, mu, d, &cands, tol)
}

/// Maximizer of `r_0(t)` restricted to `[lo, hi]` (boundary included).
pub fn find_t0_in(
    f: &Rank2Frame,
    mu: (f64, f64),
    d: u32,
    lo: f64,
    hi: f64,
    tol: &Tolerances,
) -> f64 {
    let cands = critical_angles(f, mu, d, lo, hi, false, tol);
    argmax_r0(f, mu, d, &cands, tol)
}

/// The unique angle in `(atan(b1/a1), atan(a2/(-b2)))` where
/// `a1(t) b1(t) / (a2(t) b2(t)) = (mu2/mu1)^{2/d}`. The ratio is strictly
/// increasing from 0 to infinity on that interval, so plain bisection
/// suffices. Requires the signed pattern `a1, a2, b1 > 0 > b2` and
/// `a1 a2 + b1 b2 > 0`.
pub fn find_t1(f: &Rank2Frame, mu: (f64, f64), d: u32, tol: &Tolerances) -> Result<f64> {
    if !f.has_signed_pattern() {
        return Err(Error::InvalidParameter(
            "frame must satisfy a1, a2, b1 > 0 > b2".into(),
        ));
    }
    if f.a1 * f.a2 + f.b1 * f.b2 <= 0.0 {
        return Err(Error::InvalidParameter(
            "frame must reconstruct a matrix with positive off-diagonal".into(),
        ));
    }
    if mu.0 <= 0.0 || mu.1 <= 0.0 {
        return Err(Error::InvalidParameter("activities must be positive".into()));
    }
    let target = (mu.1 / mu.0).powf(2.0 / d as f64);
    let mut lo = (f.b1 / f.a1).atan();
    let mut hi = (f.a2 / -f.b2).atan();
    let ratio = |t: f64| {
        let r = f.rotate(t);
        (r.a1 * r.b1) / (r.a2 * r.b2)
    };
    while hi - lo > tol.t_bisect {
        let mid = 0.5 * (lo + hi);
        if ratio(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Radius of the centered root circle plus diagnostics.
#[derive(Debug, Clone, Copy)]
pub struct CircleRadius {
    pub radius: f64,
    /// Relative residual of the degree-4 radius equation
    /// `det(N) R^4 + (2 N12^2 - N22^2 T - N11^2 / T) R^2 + det(N) = 0`
    /// with `T = (mu2/mu1)^{2/d}`.
    pub quartic_residual: f64,
    /// Set when the matrix is rank-1 (`b = 0`); the radius is reported as
    /// infinity because the key polynomial collapses to a single d-th power.
    pub degenerate: bool,
}

/// `R_c` from the balanced rotation `t1` of the signed eigen-frame.
pub fn circle_radius(m: &SpinModel2, d: u32, tol: &Tolerances) -> CircleRadius {
    let frame = decompose_signed(m);
    let t1 = find_t1(&frame, m.mu(), d, tol)
        .expect("the signed eigen-frame of a valid model satisfies the preconditions");
    let f = frame.rotate(t1);
    let radius = ((f.a1 * f.a2) / (f.b1 * f.b2)).abs().sqrt();
    CircleRadius {
        radius,
        quartic_residual: quartic_residual(m, d, radius),
        degenerate: false,
    }
}

/// Circle radius for the cluster-model surrogate; handles the rank-1
/// degeneration at `w = 0` with an infinite-radius sentinel.
pub fn rc_circle_radius(q: f64, w: f64, d: u32, tol: &Tolerances) -> Result<CircleRadius> {
    if q <= 1.0 {
        return Err(Error::Domain(format!("need q > 1, got {q}")));
    }
    if w < 0.0 {
        return Err(Error::Domain(format!("need w >= 0, got {w}")));
    }
    if w == 0.0 {
        return Ok(CircleRadius {
            radius: f64::INFINITY,
            quartic_residual: 0.0,
            degenerate: true,
        });
    }
    Ok(circle_radius(&SpinModel2::rc(q, w)?, d, tol))
}

fn quartic_residual(m: &SpinModel2, d: u32, radius: f64) -> f64 {
    let t = (m.mu2 / m.mu1).powf(2.0 / d as f64);
    let det = m.det();
    let mid = 2.0 * m.n12 * m.n12 - m.n22 * m.n22 * t - m.n11 * m.n11 / t;
    let r2 = radius * radius;
    let value = det * r2 * r2 + mid * r2 + det;
    let scale = det * r2 * r2 + mid.abs() * r2 + det;
    value.abs() / scale.max(f64::MIN_POSITIVE)
}

/// Value of the mixed-state form
/// `2 det(N) - (N22^2 T - 2 N12^2 + N11^2 / T)` with `T = (mu2/mu1)^{2/d}`;
/// zero exactly when the root circle passes through 1.
pub fn mixed_state_residual(m: &SpinModel2, d: u32) -> f64 {
    let t = (m.mu2 / m.mu1).powf(2.0 / d as f64);
    2.0 * m.det() - (m.n22 * m.n22 * t - 2.0 * m.n12 * m.n12 + m.n11 * m.n11 / t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn signed_decomposition_golden() {
        // [[2,1],[1,2]] has eigenpairs (3, (1,1)/sqrt2) and (1, (1,-1)/sqrt2)
        let m = SpinModel2::new(2.0, 1.0, 2.0, 1.0, 1.0).unwrap();
        let f = decompose_signed(&m);
        let s = (1.5f64).sqrt();
        let t = (0.5f64).sqrt();
        assert!((f.a1 - s).abs() < 1e-12 && (f.a2 - s).abs() < 1e-12);
        assert!((f.b1 - t).abs() < 1e-12 && (f.b2 + t).abs() < 1e-12);
        assert!(f.reconstruction_residual(&m) <= 1e-12);
    }

    #[test]
    fn model_invariants_enforced() {
        assert!(SpinModel2::new(1.0, 0.0, 1.0, 1.0, 1.0).is_err()); // needs positive entries
        assert!(SpinModel2::new(1.0, 2.0, 1.0, 1.0, 1.0).is_err()); // not positive definite
        assert!(SpinModel2::new(1.0, 0.5, 1.0, 0.0, 1.0).is_err()); // zero activity
    }

    #[test]
    fn positive_decomposition() {
        for m in [
            SpinModel2::rc(5.0, 1.0).unwrap(),
            SpinModel2::new(2.0, 1.0, 2.0, 1.0, 3.0).unwrap(),
        ] {
            let f = decompose_positive(&m);
            assert!(f.a1 > 0.0 && f.a2 > 0.0 && f.b1 > 0.0 && f.b2 > 0.0, "{f:?}");
            assert!(f.reconstruction_residual(&m) <= 1e-12);
        }
        // near-singular stress case
        let det_target = 1e-10;
        let n22 = (1.0 + det_target) / 2.0;
        let m = SpinModel2::new(2.0, 1.0, n22, 1.0, 1.0).unwrap();
        let f = decompose_positive(&m);
        assert!(f.a1 > 0.0 && f.a2 > 0.0 && f.b1 > 0.0 && f.b2 > 0.0);
        assert!(f.reconstruction_residual(&m) <= 1e-8);
    }

    #[test]
    fn canonical_frame_reconstructs_surrogate() {
        let f = canonical_rc_frame(5.0, 1.0).unwrap();
        let (n11, n12, n22) = f.gram();
        assert!((n11 - 2.0).abs() < 1e-12);
        assert!((n12 - 1.0).abs() < 1e-12);
        assert!((n22 - 1.25).abs() < 1e-12);

        let f = canonical_rc_frame(2.0, 2.0).unwrap();
        let (n11, n12, n22) = f.gram();
        assert!((n11 - 3.0).abs() < 1e-12);
        assert!((n12 - 1.0).abs() < 1e-12);
        assert!((n22 - 3.0).abs() < 1e-12);

        let f = canonical_rc_frame(5.0, 0.0).unwrap();
        assert_eq!((f.b1, f.b2), (0.0, -0.0));
    }

    #[test]
    fn rotation_basics() {
        let f = canonical_rc_frame(5.0, 3.0).unwrap();
        let id = f.rotate(0.0);
        assert_eq!(f, id);
        let quarter = f.rotate(FRAC_PI_2);
        assert!((quarter.a1 - f.b1).abs() < 1e-15);
        assert!((quarter.a2 - f.b2).abs() < 1e-15);
        assert!((quarter.b1 + f.a1).abs() < 1e-15);
        assert!((quarter.b2 + f.a2).abs() < 1e-15);
        // norm preservation
        for t in [0.3, 1.1, 2.9, 5.0] {
            let r = f.rotate(t);
            assert!((r.a1 * r.a1 + r.b1 * r.b1 - (f.a1 * f.a1 + f.b1 * f.b1)).abs() < 1e-14);
        }
    }

    #[test]
    fn r_vector_goldens() {
        // d=8, q=5, w=1 at t=0; printed values are truncated to 3 digits
        let f = canonical_rc_frame(5.0, 1.0).unwrap();
        let v = f.r_vector((1.0, 4.0), 0.0, 8);
        let expect = [10.368, 0.0, 1.728, 1.058, 0.936, 0.749, 0.615, 0.501, 0.409];
        for (j, &e) in expect.iter().enumerate() {
            assert!((v[j] - e).abs() < 1e-3, "entry {j}: {} vs {e}", v[j]);
        }

        // d=4, q=5, w=2 at t=0 is exact in closed form
        let f = canonical_rc_frame(5.0, 2.0).unwrap();
        let v = f.r_vector((1.0, 4.0), 0.0, 4);
        let expect = [9.8, 0.0, 2.8, 5.04f64.sqrt(), 2.6];
        for (j, &e) in expect.iter().enumerate() {
            assert!((v[j] - e).abs() < 1e-9, "entry {j}: {} vs {e}", v[j]);
        }

        // single activity: r_j = a1^{d-j} b1^j exactly
        let f = Rank2Frame {
            a1: 2.0,
            a2: 7.0,
            b1: 3.0,
            b2: -11.0,
        };
        let v = f.r_vector((1.0, 0.0), 0.0, 3);
        assert_eq!(v.entries(), &[8.0, 12.0, 18.0, 27.0]);
    }

    #[test]
    fn t0_goldens() {
        // reference angles pinned by 60-digit bisection of the stationarity
        // equation, cross-checked through the fixed-point route
        let f = canonical_rc_frame(5.0, 1.0).unwrap();
        let t0 = find_t0(&f, (1.0, 4.0), 8, &tol());
        assert!((t0 - 0.6619549509399267).abs() < 1e-11, "{t0}");
        assert!((f.r0((1.0, 4.0), t0, 8) - 16.277748757985495).abs() < 1e-9);

        let f = canonical_rc_frame(5.0, 3.0).unwrap();
        let t0 = find_t0(&f, (1.0, 4.0), 4, &tol());
        assert!((t0 - 0.8316331318252158).abs() < 1e-11, "{t0}");

        // w = 0: the maximum sits at t = 0
        let f = canonical_rc_frame(5.0, 0.0).unwrap();
        let t0 = find_t0(&f, (1.0, 4.0), 4, &tol());
        assert!(t0.abs() < 1e-9, "{t0}");

        // mixed state: two equal maxima; ties resolve to the smaller angle
        let f = canonical_rc_frame(5.0, 2.0).unwrap();
        let t0 = find_t0(&f, (1.0, 4.0), 4, &tol());
        assert!(t0.abs() < 1e-9, "{t0}");
    }

    #[test]
    fn t1_goldens() {
        let f = canonical_rc_frame(5.0, 3.0).unwrap();
        let t1 = find_t1(&f, (1.0, 4.0), 4, &tol()).unwrap();
        assert!((t1 - 1.06627054934707).abs() < 1e-9, "{t1}");

        let f = canonical_rc_frame(5.0, 2.0).unwrap();
        let t1 = find_t1(&f, (1.0, 4.0), 4, &tol()).unwrap();
        assert!((t1 - 1.06419757674722).abs() < 1e-9, "{t1}");

        // symmetric matrix with equal activities balances at ratio 1
        let w = 1.0;
        let m = SpinModel2::new(1.0 + w, 1.0, 1.0 + w, 1.0, 1.0).unwrap();
        let frame = decompose_signed(&m);
        let t1 = find_t1(&frame, (1.0, 1.0), 4, &tol()).unwrap();
        let r = frame.rotate(t1);
        let ratio = (r.a1 * r.b1) / (r.a2 * r.b2);
        assert!((ratio - 1.0).abs() <= 1e-12, "{ratio}");
    }

    #[test]
    fn v_t1_golden_453() {
        let f = canonical_rc_frame(5.0, 3.0).unwrap();
        let t1 = find_t1(&f, (1.0, 4.0), 4, &tol()).unwrap();
        let v = f.r_vector((1.0, 4.0), t1, 4);
        let expect = [15.010, -2.835, 0.994, -2.454, 11.249];
        for (j, &e) in expect.iter().enumerate() {
            assert!((v[j] - e).abs() < 1e-3, "entry {j}: {} vs {e}", v[j]);
        }
    }

    #[test]
    fn circle_radius_goldens() {
        let m = SpinModel2::rc(5.0, 3.0).unwrap();
        let c = circle_radius(&m, 4, &tol());
        assert!((c.radius - 1.0747696).abs() < 1e-5, "{}", c.radius);
        assert!(c.quartic_residual <= 1e-8);
        assert!(!c.degenerate);

        let c = rc_circle_radius(5.0, 2.0, 4, &tol()).unwrap();
        assert!((c.radius - 1.0).abs() < 1e-9, "{}", c.radius);

        let c = rc_circle_radius(5.0, 0.0, 4, &tol()).unwrap();
        assert!(c.degenerate && c.radius.is_infinite());
    }

    #[test]
    fn mixed_state_golden() {
        // q = 2: identically zero for every w and d
        for w in [0.5, 1.0, 3.0] {
            let m = SpinModel2::rc(2.0, w).unwrap();
            assert!(mixed_state_residual(&m, 4).abs() < 1e-12);
            assert!(mixed_state_residual(&m, 7).abs() < 1e-12);
        }
        // the critical point of (q=5, d=4) sits at w = 2
        let m = SpinModel2::rc(5.0, 2.0).unwrap();
        assert!(mixed_state_residual(&m, 4).abs() < 1e-9);
        // subcritical side: strictly negative
        let m = SpinModel2::rc(5.0, 1.0).unwrap();
        assert!(mixed_state_residual(&m, 4) < -1e-6);
    }

    #[test]
    fn maximizer_agrees_across_decompositions() {
        for m in [
            SpinModel2::rc(5.0, 3.0).unwrap(),
            SpinModel2::new(2.0, 1.0, 2.0, 0.7, 2.5).unwrap(),
        ] {
            let fs = decompose_signed(&m);
            let fp = decompose_positive(&m);
            let mu = m.mu();
            let best_s = fs.r0(mu, find_t0(&fs, mu, 5, &tol()), 5);
            let best_p = fp.r0(mu, find_t0(&fp, mu, 5, &tol()), 5);
            assert!(crate::util::rel_err(best_s, best_p) < 1e-10);
        }
    }
}
