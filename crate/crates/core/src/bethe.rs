//! The per-vertex growth rate `Phi_{d,q,w}` of the random cluster model on
//! large-girth d-regular graphs, via two independent routes.
//!
//! Route one maximizes the trigonometric polynomial
//! `Phi_{d,q,w}(t) = a1(t)^d + (q-1) a2(t)^d` built from the canonical
//! rank-2 frame. Route two solves the degree-(d-1) recursion
//! `R = (((1+w)R + q - 1) / (R + w + q - 1))^{d-1}` and evaluates the
//! associated functional at every non-negative fixed point; the two maxima
//! agree. The critical curve `w_c(d,q)` separates the regime where the
//! maximum sits at `t = 0` (value `q (1 + w/q)^{d/2}`) from the regime
//! where an interior maximizer takes over.

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::rank2::{canonical_rc_frame, decompose_positive, find_t0, find_t0_in, rc_circle_radius, SpinModel2};
use serde::Serialize;
use std::f64::consts::FRAC_PI_2;

/// `Phi_{d,q,w}(t)`: the leading entry `r_0(t)` of the canonical frame.
pub fn phi_t(q: f64, w: f64, d: u32, t: f64) -> Result<f64> {
    let frame = canonical_rc_frame(q, w)?;
    Ok(frame.r0((1.0, q - 1.0), t, d))
}

/// Global maximum of `Phi_{d,q,w}(t)` over the full circle.
pub fn phi(q: f64, w: f64, d: u32, tol: &Tolerances) -> Result<f64> {
    let frame = canonical_rc_frame(q, w)?;
    let mu = (1.0, q - 1.0);
    let t0 = find_t0(&frame, mu, d, tol);
    Ok(frame.r0(mu, t0, d))
}

/// Maximum of `Phi_{d,q,w}(t)` restricted to `[0, pi/2]`. Coincides with
/// [`phi`] for `q >= 2`; strictly smaller values can occur for `1 < q < 2`.
pub fn phi_star(q: f64, w: f64, d: u32, tol: &Tolerances) -> Result<f64> {
    let frame = canonical_rc_frame(q, w)?;
    let mu = (1.0, q - 1.0);
    let t0 = find_t0_in(&frame, mu, d, 0.0, FRAC_PI_2, tol);
    Ok(frame.r0(mu, t0, d))
}

/// Growth rate of a general positive definite 2-spin model: the maximum of
/// `mu1 a1(t)^d + mu2 a2(t)^d` over any decomposition (the value is
/// decomposition-independent).
pub fn phi_general(m: &SpinModel2, d: u32, tol: &Tolerances) -> f64 {
    let frame = decompose_positive(m);
    let t0 = find_t0(&frame, m.mu(), d, tol);
    frame.r0(m.mu(), t0, d)
}

/// Non-negative fixed points of
/// `R = ((p11 R + p12) / (p21 R + p22))^{d-1}` for a Moebius map with
/// positive entries and positive determinant. The right-hand side is
/// increasing and bounded, so every fixed point lies in
/// `[B(0), (p11/p21)^{d-1}]`; a log-spaced scan over that bracket followed
/// by bisection finds every sign change. At most three solutions exist.
fn moebius_power_fixed_points(
    p11: f64,
    p12: f64,
    p21: f64,
    p22: f64,
    d: u32,
    tol: &Tolerances,
) -> Vec<f64> {
    let k = (d - 1) as i32;
    let b = |r: f64| ((p11 * r + p12) / (p21 * r + p22)).powi(k);
    let defect = |r: f64| b(r) - r;
    let lo = b(0.0);
    let hi = (p11 / p21).powi(k);
    let mut roots: Vec<f64> = Vec::new();
    if hi <= lo * (1.0 + 1e-15) {
        // bracket collapsed: the map is constant, one pinched fixed point
        return vec![lo];
    }
    let points = tol.fp_scan_points.max(64);
    let log_lo = lo.ln();
    let log_step = (hi.ln() - log_lo) / points as f64;
    let mut prev_r = lo * (1.0 - 1e-12);
    let mut prev_v = defect(prev_r);
    for i in 0..=points {
        let r = (log_lo + i as f64 * log_step).exp();
        let v = defect(r);
        if prev_v == 0.0 {
            roots.push(prev_r);
        } else if prev_v.signum() != v.signum() && v != 0.0 {
            let (mut a, mut fa, mut c) = (prev_r, prev_v, r);
            while c - a > tol.fixed_point * a.max(1.0) {
                let mid = 0.5 * (a + c);
                let fm = defect(mid);
                if fm == 0.0 {
                    a = mid;
                    c = mid;
                    break;
                }
                if fm.signum() == fa.signum() {
                    a = mid;
                    fa = fm;
                } else {
                    c = mid;
                }
            }
            roots.push(0.5 * (a + c));
        }
        prev_r = r;
        prev_v = v;
    }
    if prev_v == 0.0 {
        roots.push(prev_r);
    }
    roots.dedup_by(|a, b| (*a - *b).abs() < 1e-9 * b.max(1.0));
    roots
}

/// Fixed points of the general 2-spin recursion, in the activity-weighted
/// ratio: `R = ((N11 mu1 R + N12 mu2) / (N12 mu1 R + N22 mu2))^{d-1}`.
/// For the cluster-model surrogate this reduces to the `(q,w)` form below,
/// which keeps `R = 1` a fixed point at every parameter choice.
pub fn bp_fixed_points(m: &SpinModel2, d: u32, tol: &Tolerances) -> Vec<f64> {
    assert!(d >= 3, "the recursion needs d >= 3");
    moebius_power_fixed_points(
        m.n11 * m.mu1,
        m.n12 * m.mu2,
        m.n12 * m.mu1,
        m.n22 * m.mu2,
        d,
        tol,
    )
}

/// Fixed points of `R = (((1+w)R + q - 1) / (R + w + q - 1))^{d-1}`.
pub fn rc_fixed_points(q: f64, w: f64, d: u32, tol: &Tolerances) -> Result<Vec<f64>> {
    if q <= 1.0 || w < 0.0 {
        return Err(Error::Domain(format!(
            "fixed points need q > 1 and w >= 0, got q = {q}, w = {w}"
        )));
    }
    if d < 3 {
        return Err(Error::Domain(format!("the recursion needs d >= 3, got {d}")));
    }
    Ok(moebius_power_fixed_points(
        1.0 + w,
        q - 1.0,
        1.0,
        q - 1.0 + w,
        d,
        tol,
    ))
}

/// The functional whose values at fixed points enumerate the candidate
/// growth rates, in the same activity-weighted ratio as
/// [`bp_fixed_points`]. As `R -> infinity` it tends to `mu1 N11^{d/2}`.
pub fn bethe_functional(r: f64, m: &SpinModel2, d: u32) -> f64 {
    let u = m.mu1 * r;
    let quad = m.n11 * u * u + 2.0 * m.n12 * u * m.mu2 + m.n22 * m.mu2 * m.mu2;
    let root = quad.sqrt();
    let num1 = m.n11 * u + m.n12 * m.mu2;
    let num2 = m.n12 * u + m.n22 * m.mu2;
    m.mu1 * (num1 / root).powi(d as i32) + m.mu2 * (num2 / root).powi(d as i32)
}

/// `(q,w)` specialization of [`bethe_functional`]; at `R = 1` it collapses
/// to `q (1 + w/q)^{d/2}`.
pub fn rc_bethe_functional(r: f64, q: f64, w: f64, d: u32) -> f64 {
    let denom =
        ((1.0 + w) * (r * r + q - 1.0) + 2.0 * r * (q - 1.0) + (q - 1.0) * (q - 2.0)).sqrt();
    let num1 = (1.0 + w) * r + q - 1.0;
    let num2 = r + q + w - 1.0;
    (num1 / denom).powi(d as i32) + (q - 1.0) * (num2 / denom).powi(d as i32)
}

/// Growth rate through the fixed-point route: the maximum of the functional
/// over all non-negative fixed points. Agrees with [`phi_general`].
pub fn phi_via_bp(m: &SpinModel2, d: u32, tol: &Tolerances) -> f64 {
    bp_fixed_points(m, d, tol)
        .into_iter()
        .map(|r| bethe_functional(r, m, d))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Critical edge weight `w_c(d,q) = (q-2) / ((q-1)^{1-2/d} - 1) - 1` for
/// `q > 2`, extended by its limit `2/(d-2)` at `q = 2`.
pub fn w_critical(q: f64, d: u32) -> Result<f64> {
    if q < 2.0 {
        return Err(Error::Domain(format!(
            "the critical curve is defined for q >= 2, got {q}"
        )));
    }
    if d < 3 {
        return Err(Error::Domain(format!("need d >= 3, got {d}")));
    }
    if q == 2.0 {
        return Ok(2.0 / (d as f64 - 2.0));
    }
    let base = q - 1.0;
    // d = 4 is a plain square root; sqrt is correctly rounded while powf
    // need not be, and the q = 5 value is exactly 2 along this path
    let powered = if d == 4 {
        base.sqrt()
    } else {
        base.powf(1.0 - 2.0 / d as f64)
    };
    Ok((q - 2.0) / (powered - 1.0) - 1.0)
}

/// Phase classification of a parameter point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Subcritical,
    Critical,
    Supercritical,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::Subcritical => "subcritical",
            Regime::Critical => "critical",
            Regime::Supercritical => "supercritical",
        }
    }
}

/// Everything the phase analysis produces for one `(q, w, d)` point.
#[derive(Debug, Clone, Serialize)]
pub struct PhaseReport {
    pub q: f64,
    pub w: f64,
    pub d: u32,
    /// Critical weight; absent for `1 < q < 2` where the curve is not
    /// defined.
    pub w_c: Option<f64>,
    pub phi: f64,
    /// Maximum restricted to `[0, pi/2]`.
    pub phi_star: f64,
    /// `q (1 + w/q)^{d/2}`, the value of the trigonometric polynomial at 0.
    pub phi_rank1: f64,
    /// Absent for `1 < q < 2`.
    pub regime: Option<Regime>,
    pub t0: f64,
    /// Balanced rotation; absent at `w = 0`.
    pub t1: Option<f64>,
    /// Root-circle radius; absent at `w = 0` (rank-1 degeneration).
    pub r_c: Option<f64>,
    /// Fixed points of the `(q,w)` recursion with their functional values.
    pub fixed_points: Vec<FixedPoint>,
    /// For `q >= 2` the reported `phi` is the established growth rate; for
    /// `1 < q < 2` both `phi` and `phi_star` are reported and neither is
    /// claimed as the growth rate of the cluster model itself.
    pub growth_rate_established: bool,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct FixedPoint {
    pub r: f64,
    pub value: f64,
}

/// Full phase report; requires `q >= 2`, `w >= 0`, `d >= 3`.
pub fn classify_phase(q: f64, w: f64, d: u32, tol: &Tolerances) -> Result<PhaseReport> {
    if q < 2.0 {
        return Err(Error::Domain(format!(
            "phase classification needs q >= 2, got {q}"
        )));
    }
    phase_report(q, w, d, tol)
}

/// Phase report for any `q > 1`; regime and `w_c` are filled only when the
/// critical curve is defined (`q >= 2`).
pub fn phase_report(q: f64, w: f64, d: u32, tol: &Tolerances) -> Result<PhaseReport> {
    if q <= 1.0 {
        return Err(Error::Domain(format!("need q > 1, got {q}")));
    }
    if w < 0.0 {
        return Err(Error::Domain(format!("need w >= 0, got {w}")));
    }
    if d < 3 {
        return Err(Error::Domain(format!("need d >= 3, got {d}")));
    }
    let frame = canonical_rc_frame(q, w)?;
    let mu = (1.0, q - 1.0);
    let t0 = find_t0(&frame, mu, d, tol);
    let phi = frame.r0(mu, t0, d);
    let phi_star = phi_star(q, w, d, tol)?;
    let phi_rank1 = q * (1.0 + w / q).powf(d as f64 / 2.0);
    if phi < phi_rank1 * (1.0 - 1e-10) {
        return Err(Error::Domain(format!(
            "inconsistent maximization: phi = {phi} below its value at t = 0 ({phi_rank1})"
        )));
    }
    let (w_c, regime) = if q >= 2.0 {
        let wc = w_critical(q, d)?;
        let regime = if (w - wc).abs() <= tol.critical_band {
            Regime::Critical
        } else if w < wc {
            Regime::Subcritical
        } else {
            Regime::Supercritical
        };
        // up to (and at) w_c the maximum stays pinned at t = 0
        if regime != Regime::Supercritical && crate::util::rel_err(phi, phi_rank1) > 1e-9 {
            return Err(Error::Domain(format!(
                "regime {regime:?} but phi = {phi} deviates from {phi_rank1}"
            )));
        }
        (Some(wc), Some(regime))
    } else {
        (None, None)
    };
    let (t1, r_c) = if w > 0.0 {
        let t1 = crate::rank2::find_t1(&frame, mu, d, tol)?;
        let circle = rc_circle_radius(q, w, d, tol)?;
        (Some(t1), Some(circle.radius))
    } else {
        (None, None)
    };
    let fixed_points = rc_fixed_points(q, w, d, tol)?
        .into_iter()
        .map(|r| FixedPoint {
            r,
            value: rc_bethe_functional(r, q, w, d),
        })
        .collect();
    Ok(PhaseReport {
        q,
        w,
        d,
        w_c,
        phi,
        phi_star,
        phi_rank1,
        regime,
        t0,
        t1,
        r_c,
        fixed_points,
        growth_rate_established: q >= 2.0,
    })
}

/// Whether a Tutte-plane point has a known limit, and its value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum TutteLimit {
    Covered { value: f64, region: TutteRegion },
    NotCovered,
}

/// The parameter regions with a known limit value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TutteRegion {
    /// `(x-1)(y-1) >= 2` and `y > 1`: the limit is `Phi_{d,q,w} / (y-1)`
    /// with `q = (x-1)(y-1)`, `w = y-1`.
    LargeQ,
    /// `x >= d-1`, `y > 1`, `q < 2`: the rank-1 value
    /// `x (1 + 1/(x-1))^{d/2-1}` extends across this band; flagged as its
    /// own region because it is cross-checked numerically rather than read
    /// off a closed formula for the region.
    LargeX,
    /// `x >= 1`, `0 <= y <= 1`: explicit piecewise value with a branch
    /// point at `x = d-1`.
    SmallY,
}

/// Limit of `T_G(x,y)^{1/v(G)}` over large-girth d-regular graphs, where
/// known. Requires `x, y >= 0`.
pub fn tutte_limit(x: f64, y: f64, d: u32, tol: &Tolerances) -> Result<TutteLimit> {
    if x < 0.0 || y < 0.0 {
        return Err(Error::Domain(format!(
            "the Tutte-plane analysis covers x, y >= 0, got ({x}, {y})"
        )));
    }
    if d < 3 {
        return Err(Error::Domain(format!("need d >= 3, got {d}")));
    }
    let dm1 = d as f64 - 1.0;
    let half_minus_one = d as f64 / 2.0 - 1.0;
    let q = (x - 1.0) * (y - 1.0);
    if y > 1.0 && q >= 2.0 {
        let value = phi(q, y - 1.0, d, tol)? / (y - 1.0);
        return Ok(TutteLimit::Covered {
            value,
            region: TutteRegion::LargeQ,
        });
    }
    if (0.0..=1.0).contains(&y) && x >= 1.0 {
        let value = if x <= dm1 {
            dm1 * (dm1 * dm1 / (dm1 * dm1 - x)).powf(half_minus_one)
        } else {
            x * (1.0 + 1.0 / (x - 1.0)).powf(half_minus_one)
        };
        return Ok(TutteLimit::Covered {
            value,
            region: TutteRegion::SmallY,
        });
    }
    if x >= dm1 && y > 1.0 {
        let value = x * (1.0 + 1.0 / (x - 1.0)).powf(half_minus_one);
        return Ok(TutteLimit::Covered {
            value,
            region: TutteRegion::LargeX,
        });
    }
    Ok(TutteLimit::NotCovered)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn phi_t_values() {
        // t = 0 collapses to q (1 + w/q)^{d/2}
        let v = phi_t(5.0, 1.0, 8, 0.0).unwrap();
        assert!((v - 10.368).abs() < 1e-12, "{v}");
        // w = 0: q cos^d t
        let v = phi_t(5.0, 0.0, 4, 0.5).unwrap();
        assert!((v - 5.0 * 0.5f64.cos().powi(4)).abs() < 1e-12);
        assert!(phi_t(1.0, 1.0, 4, 0.0).is_err());
        assert!(phi_t(5.0, -0.5, 4, 0.0).is_err());
    }

    #[test]
    fn phi_goldens() {
        let v = phi(5.0, 1.0, 8, &tol()).unwrap();
        assert!((v - 16.277748757985485).abs() < 1e-9, "{v}");
        let v = phi(5.0, 3.0, 4, &tol()).unwrap();
        assert!((v - 16.315621073058985).abs() < 1e-9, "{v}");
        // subcritical: the closed form
        let v = phi(5.0, 1.0, 4, &tol()).unwrap();
        assert!((v - 7.2).abs() < 1e-10, "{v}");
    }

    #[test]
    fn phi_star_agrees_for_q_at_least_two() {
        for (q, w, d) in [(5.0, 1.0, 8), (5.0, 3.0, 4), (2.0, 1.0, 4), (3.0, 0.5, 5)] {
            let a = phi(q, w, d, &tol()).unwrap();
            let b = phi_star(q, w, d, &tol()).unwrap();
            assert!(
                crate::util::rel_err(a, b) < 1e-10,
                "({q},{w},{d}): {a} vs {b}"
            );
        }
    }

    #[test]
    fn fixed_point_census() {
        // R = 1 solves the surrogate recursion at every parameter point
        for (q, w, d) in [(5.0, 1.0, 4), (5.0, 3.0, 4), (2.5, 0.7, 6)] {
            let fps = rc_fixed_points(q, w, d, &tol()).unwrap();
            assert!(
                fps.iter().any(|&r| (r - 1.0).abs() < 1e-9),
                "({q},{w},{d}): {fps:?}"
            );
            assert!(fps.len() <= 3);
        }
        // subcritical: unique
        let fps = rc_fixed_points(5.0, 1.0, 4, &tol()).unwrap();
        assert_eq!(fps.len(), 1);
        assert!((fps[0] - 1.0).abs() < 1e-9);
        // critical: exactly three, the largest solving (3R+4)^3 = R(R+6)^3
        let fps = rc_fixed_points(5.0, 2.0, 4, &tol()).unwrap();
        assert_eq!(fps.len(), 3, "{fps:?}");
        assert!((fps[2] - 8.0).abs() < 1e-8, "{fps:?}");
    }

    #[test]
    fn functional_values() {
        // R = 1 gives the rank-1 value
        for (q, w, d) in [(5.0, 1.0, 4), (5.0, 3.0, 8), (2.5, 2.0, 5)] {
            let v = rc_bethe_functional(1.0, q, w, d);
            let expect = q * (1.0 + w / q).powf(d as f64 / 2.0);
            assert!(crate::util::rel_err(v, expect) < 1e-12, "({q},{w},{d})");
        }
        // for the surrogate model the weighted ratio is the (q,w) ratio,
        // so the two functional forms agree pointwise
        let (q, w, d) = (5.0, 3.0, 4u32);
        let m = SpinModel2::rc(q, w).unwrap();
        for r in [0.3, 1.0, 2.0, 8.0] {
            let a = rc_bethe_functional(r, q, w, d);
            let b = bethe_functional(r, &m, d);
            assert!(crate::util::rel_err(a, b) < 1e-12, "{a} vs {b}");
        }
        // large-R limit: the first term tends to mu1 N11^{d/2} and
        // dominates, the second settles at mu2 (N12/sqrt(N11))^d
        let m = SpinModel2::new(3.0, 1.0, 2.0, 0.5, 4.0).unwrap();
        let v = bethe_functional(1e9, &m, 6);
        let limit = 0.5 * 3.0f64.powi(3) + 4.0 * (1.0 / 3.0f64.sqrt()).powi(6);
        assert!(crate::util::rel_err(v, limit) < 1e-6, "{v} vs {limit}");
        assert!(0.5 * 3.0f64.powi(3) / limit > 0.98); // dominant part
    }

    #[test]
    fn bp_route_matches_trig_route() {
        let cases = [
            SpinModel2::rc(5.0, 1.0).unwrap(),
            SpinModel2::rc(5.0, 3.0).unwrap(),
            SpinModel2::rc(2.0, 2.0).unwrap(),
            SpinModel2::new(2.0, 1.0, 2.0, 1.0, 1.0).unwrap(),
            SpinModel2::new(3.0, 0.4, 1.0, 2.0, 0.3).unwrap(),
        ];
        for m in cases {
            for d in [3u32, 4, 5, 8] {
                let a = phi_general(&m, d, &tol());
                let b = phi_via_bp(&m, d, &tol());
                assert!(
                    crate::util::rel_err(a, b) <= 1e-9,
                    "{m:?} d={d}: {a} vs {b}"
                );
            }
        }
    }

    #[test]
    fn phi_via_bp_goldens() {
        let m = SpinModel2::rc(5.0, 1.0).unwrap();
        let v = phi_via_bp(&m, 8, &tol());
        assert!((v - 16.277748757985485).abs() < 1e-8, "{v}");
        let v4 = phi_via_bp(&m, 4, &tol());
        assert!((v4 - 7.2).abs() < 1e-10, "{v4}");
    }

    #[test]
    fn critical_curve() {
        assert!((w_critical(5.0, 4).unwrap() - 2.0).abs() < 1e-12);
        assert!((w_critical(10.0, 4).unwrap() - 3.0).abs() < 1e-12);
        assert!((w_critical(2.0, 4).unwrap() - 1.0).abs() < 1e-15);
        assert!((w_critical(2.0, 6).unwrap() - 0.5).abs() < 1e-15);
        assert!(w_critical(1.5, 4).is_err());
    }

    #[test]
    fn phase_reports() {
        let r = classify_phase(5.0, 1.0, 4, &tol()).unwrap();
        assert_eq!(r.regime, Some(Regime::Subcritical));
        assert!((r.phi - 7.2).abs() < 1e-10);
        assert!(r.growth_rate_established);

        let r = classify_phase(5.0, 2.0, 4, &tol()).unwrap();
        assert_eq!(r.regime, Some(Regime::Critical));
        assert!((r.phi - 9.8).abs() < 1e-9);
        assert!((r.r_c.unwrap() - 1.0).abs() < 1e-9);
        assert_eq!(r.fixed_points.len(), 3);

        let r = classify_phase(5.0, 3.0, 4, &tol()).unwrap();
        assert_eq!(r.regime, Some(Regime::Supercritical));
        assert!((r.phi - 16.315621073058985).abs() < 1e-9);
        assert!(r.phi > r.phi_rank1);

        assert!(classify_phase(1.5, 1.0, 4, &tol()).is_err());
        // the open interval 1 < q < 2 still yields a report, unclassified
        let r = phase_report(1.5, 1.0, 4, &tol()).unwrap();
        assert_eq!(r.regime, None);
        assert!(!r.growth_rate_established);
        assert!(r.phi >= r.phi_star - 1e-12);
    }

    #[test]
    fn tutte_plane_values() {
        // the two piecewise branches meet at x = d-1
        let d = 6u32;
        let dm1 = 5.0;
        let left = match tutte_limit(dm1, 0.5, d, &tol()).unwrap() {
            TutteLimit::Covered { value, .. } => value,
            _ => panic!(),
        };
        let expect = dm1 * (dm1 / (dm1 - 1.0)).powf(2.0);
        assert!(crate::util::rel_err(left, expect) < 1e-12);
        let right = match tutte_limit(dm1 + 1e-12, 0.5, d, &tol()).unwrap() {
            TutteLimit::Covered { value, .. } => value,
            _ => panic!(),
        };
        assert!(crate::util::rel_err(left, right) < 1e-9);

        // the q = 5, w = 1, d = 8 point mapped to the Tutte plane
        match tutte_limit(6.0, 2.0, 8, &tol()).unwrap() {
            TutteLimit::Covered { value, region } => {
                assert_eq!(region, TutteRegion::LargeQ);
                assert!((value - 16.277748757985485).abs() < 1e-8);
            }
            _ => panic!("point should be covered"),
        }

        // y = 1 boundary belongs to the small-y strip
        match tutte_limit(3.0, 1.0, 4, &tol()).unwrap() {
            TutteLimit::Covered { region, .. } => assert_eq!(region, TutteRegion::SmallY),
            _ => panic!(),
        }

        // uncovered: small x, y above 1, q below 2
        assert_eq!(
            tutte_limit(1.5, 1.5, 4, &tol()).unwrap(),
            TutteLimit::NotCovered
        );
        assert!(tutte_limit(-1.0, 0.5, 4, &tol()).is_err());
    }

    #[test]
    fn large_x_band_cross_check() {
        // inside the band the rank-1 value and Phi/(y-1) agree when q > 1
        let d = 4u32;
        let (x, y) = (4.0, 1.4); // q = 1.2
        let q = (x - 1.0) * (y - 1.0);
        let via_phi = phi(q, y - 1.0, d, &tol()).unwrap() / (y - 1.0);
        match tutte_limit(x, y, d, &tol()).unwrap() {
            TutteLimit::Covered { value, region } => {
                assert_eq!(region, TutteRegion::LargeX);
                assert!(
                    crate::util::rel_err(value, via_phi) < 1e-9,
                    "{value} vs {via_phi}"
                );
            }
            _ => panic!("point should be covered"),
        }
    }
}
