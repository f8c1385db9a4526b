//! Built-in verification suites over a fixed corpus of small regular
//! graphs.
//!
//! Each check measures a residual or a slack, compares it against the
//! shared tolerances, and reports a one-line outcome. The CLI `verify`
//! command runs these; the acceptance tests reuse several of them.

use crate::bethe;
use crate::config::{Caps, Tolerances};
use crate::graphs::{self, Graph};
use crate::partition::{self, RcParams};
use crate::rank2::{self, SpinModel2};
use crate::roots;
use crate::subgraph_poly;
use crate::util::rel_err;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub tag: &'static str,
    pub passed: bool,
    /// Worst measured residual or violation (smaller is better; the
    /// threshold it was compared against appears in `detail`).
    pub worst: f64,
    pub detail: String,
}

/// A runnable check; `run` is a plain function so the list can be executed
/// in any order or in parallel.
#[derive(Clone, Copy)]
pub struct Check {
    pub name: &'static str,
    pub tag: &'static str,
    pub run: fn(&Caps, &Tolerances) -> (bool, f64, String),
}

/// The full catalogue of checks.
#[rustfmt::skip]
pub fn all_checks() -> Vec<Check> {
    vec![
        Check { name: "components-identities", tag: "graphs", run: check_components },
        Check { name: "regular-sampler", tag: "graphs", run: check_sampler },
        Check { name: "cycle-census", tag: "graphs", run: check_cycles },
        Check { name: "rank1-direction", tag: "inequalities", run: check_rank1_direction },
        Check { name: "rank2-direction", tag: "inequalities", run: check_rank2_direction },
        Check { name: "sandwich", tag: "sandwich", run: check_sandwich },
        Check { name: "shift-recursion", tag: "identities", run: check_recursion_identity },
        Check { name: "tutte-relation", tag: "identities", run: check_tutte_relation },
        Check { name: "rotation-identities", tag: "identities", run: check_rotation_identities },
        Check { name: "binomial-rotation", tag: "identities", run: check_binomial_rotation },
        Check { name: "canonical-frame-identities", tag: "identities", run: check_canonical_identities },
        Check { name: "maximizer-vector-signs", tag: "rank2", run: check_t0_signs },
        Check { name: "curvature-ratio-bound", tag: "rank2", run: check_curvature_bound },
        Check { name: "decomposition-independence", tag: "rank2", run: check_decomposition_independence },
        Check { name: "canonical-vector-at-zero", tag: "rank2", run: check_canonical_vector },
        Check { name: "trig-vs-fixed-point", tag: "bethe", run: check_bethe_equivalence },
        Check { name: "fixed-point-count", tag: "bethe", run: check_fixed_point_count },
        Check { name: "phase-curve-monotone", tag: "bethe", run: check_phase_curve },
        Check { name: "supercritical-strict", tag: "bethe", run: check_supercritical },
        Check { name: "scaled-ratio-monotone-in-w", tag: "bethe", run: check_h_monotone },
        Check { name: "stationary-sign-pattern", tag: "bethe", run: check_bethesigns },
        Check { name: "circle", tag: "circle", run: check_circles },
        Check { name: "key-polynomial-circle", tag: "circle", run: check_key_circle },
        Check { name: "rotation-invariance-of-f", tag: "circle", run: check_f_rotation_invariance },
        Check { name: "lower-bound", tag: "lowerbound", run: check_lower_bound },
        Check { name: "short-cycle-strictness", tag: "lowerbound", run: check_strict_lower_bound },
        Check { name: "mixed-state-symmetry", tag: "mixed", run: check_mixed_symmetry },
        Check { name: "always-mixed-at-q2", tag: "mixed", run: check_q2_mixed },
    ]
}

/// Runs every check whose tag or name contains `only` (all of them when
/// `only` is `None`), sequentially, in catalogue order.
pub fn run_filtered(only: Option<&str>, caps: &Caps, tol: &Tolerances) -> Vec<CheckResult> {
    all_checks()
        .into_iter()
        .filter(|c| match only {
            Some(f) => c.tag.contains(f) || c.name.contains(f),
            None => true,
        })
        .map(|c| run_check(&c, caps, tol))
        .collect()
}

pub fn run_check(check: &Check, caps: &Caps, tol: &Tolerances) -> CheckResult {
    let (passed, worst, detail) = (check.run)(caps, tol);
    CheckResult {
        name: check.name,
        tag: check.tag,
        passed,
        worst,
        detail,
    }
}

/// The verification corpus: named small regular graphs plus three seeded
/// cubic samples.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = ["k4", "k5", "petersen", "octahedron", "cycle:6"]
        .iter()
        .map(|name| (name.to_string(), graphs::named_graph(name).unwrap()))
        .collect();
    for seed in [1u64, 2, 3] {
        out.push((
            format!("random:10:3:{seed}"),
            graphs::random_regular(10, 3, seed).unwrap(),
        ));
    }
    out
}

const Q_GRID: [f64; 4] = [1.2, 2.0, 2.5, 5.0];
const W_GRID: [f64; 4] = [0.0, 0.5, 1.0, 3.0];

fn random_model(rng: &mut ChaCha8Rng) -> SpinModel2 {
    loop {
        let a1 = rng.gen_range(0.3..2.0);
        let a2 = rng.gen_range(0.3..2.0);
        let b1 = rng.gen_range(0.1..1.5);
        let b2 = -rng.gen_range(0.1..1.5);
        let n12 = a1 * a2 + b1 * b2;
        if n12 <= 0.05 {
            continue;
        }
        let m = SpinModel2::new(
            a1 * a1 + b1 * b1,
            n12,
            a2 * a2 + b2 * b2,
            rng.gen_range(0.2..4.0),
            rng.gen_range(0.2..4.0),
        );
        match m {
            Ok(m) if m.det() > 1e-3 => return m,
            _ => continue,
        }
    }
}

// ---------------------------------------------------------------- graphs

fn check_components(_caps: &Caps, _tol: &Tolerances) -> (bool, f64, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, g) in corpus() {
        if graphs::components(&g, graphs::EdgeSubset::EMPTY) != g.n() {
            return (false, 1.0, format!("{name}: empty subset must give n"));
        }
        if graphs::components(&g, graphs::EdgeSubset::full(g.m())) != 1 {
            return (false, 1.0, format!("{name}: corpus graphs are connected"));
        }
        for _ in 0..200 {
            let a = graphs::EdgeSubset(rng.gen::<u64>() & graphs::EdgeSubset::full(g.m()).0);
            let k = graphs::components(&g, a);
            let lower = g.n().saturating_sub(a.len() as usize);
            if k < lower || k > g.n() {
                return (false, 1.0, format!("{name}: component bound violated"));
            }
        }
    }
    (true, 0.0, "component identities and bounds".into())
}

fn check_sampler(_caps: &Caps, _tol: &Tolerances) -> (bool, f64, String) {
    for seed in 0..50u64 {
        let a = match graphs::random_regular(12, 3, seed) {
            Ok(g) => g,
            Err(e) => return (false, 1.0, format!("seed {seed}: {e}")),
        };
        let b = graphs::random_regular(12, 3, seed).unwrap();
        if a.edges() != b.edges() {
            return (false, 1.0, format!("seed {seed}: not deterministic"));
        }
        if !a.is_simple() || a.regularity() != Some(3) {
            return (false, 1.0, format!("seed {seed}: not simple 3-regular"));
        }
    }
    (true, 0.0, "50 seeds deterministic, simple, regular".into())
}

fn check_cycles(_caps: &Caps, _tol: &Tolerances) -> (bool, f64, String) {
    let p = graphs::named_graph("petersen").unwrap();
    let (girth, l) = graphs::girth_and_short_cycles(&p, 6).unwrap();
    if girth != Some(5) || l != 12 {
        return (false, 1.0, format!("petersen census: girth {girth:?}, L {l}"));
    }
    let k5 = graphs::named_graph("k5").unwrap();
    let (_, l) = graphs::girth_and_short_cycles(&k5, 5).unwrap();
    if l != 25 {
        return (false, 1.0, format!("k5 short cycles: {l}"));
    }
    (true, 0.0, "girth and short-cycle counts".into())
}

// ----------------------------------------------------------- inequalities

fn check_rank1_direction(caps: &Caps, _tol: &Tolerances) -> (bool, f64, String) {
    let mut worst: f64 = 0.0;
    for (name, g) in corpus() {
        for q in Q_GRID {
            for w in W_GRID {
                let p = RcParams::new(q, w).unwrap();
                let z = partition::z_rc(&g, p, caps).unwrap();
                let z1 = partition::z1(&g, p);
                // q >= 1 on the whole grid: Z dominates the rank-1 value
                let slack = (z - z1) / z.abs().max(1e-300);
                worst = worst.min(slack);
                if slack < -1e-9 {
                    return (false, -slack, format!("{name} q={q} w={w}: slack {slack:.3e}"));
                }
            }
        }
    }
    (true, (-worst).max(0.0), "Z >= Z1 on corpus x grid (slack >= -1e-9)".into())
}

fn check_rank2_direction(caps: &Caps, _tol: &Tolerances) -> (bool, f64, String) {
    let mut worst: f64 = 0.0;
    for (name, g) in corpus() {
        for q in Q_GRID {
            if q <= 1.0 {
                continue;
            }
            for w in W_GRID {
                let p = RcParams::new(q, w).unwrap();
                let z = partition::z_rc(&g, p, caps).unwrap();
                let z2 = partition::z2(&g, p, caps).unwrap();
                // direction flips across q = 2, equality exactly at 2
                let diff = if q >= 2.0 { z - z2 } else { z2 - z };
                let slack = diff / z.abs().max(1e-300);
                worst = worst.min(slack);
                if slack < -1e-9 {
                    return (false, -slack, format!("{name} q={q} w={w}: slack {slack:.3e}"));
                }
            }
        }
    }
    (true, (-worst).max(0.0), "rank-2 comparison directions on corpus x grid".into())
}

fn check_sandwich(caps: &Caps, _tol: &Tolerances) -> (bool, f64, String) {
    let mut worst: f64 = 0.0;
    for (name, g) in corpus() {
        for q in Q_GRID {
            if q < 2.0 {
                continue;
            }
            for w in W_GRID {
                let p = RcParams::new(q, w).unwrap();
                let z = partition::z_rc(&g, p, caps).unwrap();
                let z2 = partition::z2(&g, p, caps).unwrap();
                for gcap in [3usize, 4, 5] {
                    let (_, l) = graphs::girth_and_short_cycles(&g, gcap).unwrap();
                    let bound = q.powf(g.n() as f64 / gcap as f64 + l as f64) * z2;
                    let low = (z - z2) / z.abs().max(1e-300);
                    let high = (bound - z) / bound.abs().max(1e-300);
                    worst = worst.min(low).min(high);
                    if low < -1e-9 || high < -1e-9 {
                        return (
                            false,
                            low.min(high).abs(),
                            format!("{name} q={q} w={w} g={gcap}: {low:.3e}/{high:.3e}"),
                        );
                    }
                }
            }
        }
    }
    (true, (-worst).max(0.0), "Z2 <= Z <= q^(n/g+L) Z2 at g in {3,4,5}".into())
}

// ------------------------------------------------------------- identities

fn identity_points() -> [(f64, f64); 4] {
    [(3.0, 1.0), (2.5, 0.7), (5.0, 2.0), (2.0, 3.0)]
}

fn check_recursion_identity(caps: &Caps, _tol: &Tolerances) -> (bool, f64, String) {
    let mut worst: f64 = 0.0;
    for name in ["triangle", "k4", "cycle:4"] {
        let g = graphs::named_graph(name).unwrap();
        for (q, w) in identity_points() {
            let r = partition::check_recursion(&g, RcParams::new(q, w).unwrap(), caps).unwrap();
            worst = worst.max(r);
            if r > 1e-10 {
                return (false, r, format!("{name} q={q} w={w}: residual {r:.3e}"));
            }
        }
    }
    (true, worst, "vertex-shift recursion residual <= 1e-10".into())
}

fn check_tutte_relation(caps: &Caps, _tol: &Tolerances) -> (bool, f64, String) {
    let mut worst: f64 = 0.0;
    for name in ["triangle", "k4", "cycle:4"] {
        let g = graphs::named_graph(name).unwrap();
        for (q, w) in identity_points() {
            let p = RcParams::new(q, w).unwrap();
            let a = partition::z_rc(&g, p, caps).unwrap();
            let b = partition::z_rc_via_tutte(&g, p, caps).unwrap();
            let r = rel_err(a, b);
            worst = worst.max(r);
            if r > 1e-10 {
                return (false, r, format!("{name} q={q} w={w}: {a} vs {b}"));
            }
        }
    }
    (true, worst, "subset route vs Tutte route <= 1e-10".into())
}

fn check_rotation_identities(_caps: &Caps, tol: &Tolerances) -> (bool, f64, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut worst: f64 = 0.0;
    for _ in 0..8 {
        let m = random_model(&mut rng);
        let f = rank2::decompose_signed(&m);
        let (n11, n12, n22) = f.gram();
        for _ in 0..64 {
            let t = rng.gen_range(0.0..std::f64::consts::TAU);
            let r = f.rotate(t);
            let checks = [
                r.a1 * r.a1 + r.b1 * r.b1 - n11,
                r.a2 * r.a2 + r.b2 * r.b2 - n22,
                r.a1 * r.a2 + r.b1 * r.b2 - n12,
                (r.a2 * r.b1 - r.a1 * r.b2) - (f.a2 * f.b1 - f.a1 * f.b2),
            ];
            for c in checks {
                worst = worst.max(c.abs());
                if c.abs() > tol.identity {
                    return (false, c.abs(), format!("rotation identity broke at t={t}"));
                }
            }
        }
    }
    (true, worst, "norm and cross-term invariants at 64 random angles".into())
}

fn check_binomial_rotation(_caps: &Caps, _tol: &Tolerances) -> (bool, f64, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let mut worst: f64 = 0.0;
    for d in [3u32, 4, 8] {
        let m = random_model(&mut rng);
        let f = rank2::decompose_positive(&m);
        let v0 = f.r_vector(m.mu(), 0.0, d);
        for _ in 0..64 {
            let t = rng.gen_range(0.0..std::f64::consts::TAU);
            let direct = f.r0(m.mu(), t, d);
            let (s, c) = t.sin_cos();
            let expanded: f64 = (0..=d)
                .map(|j| {
                    crate::util::binomial(d, j) as f64
                        * v0[j as usize]
                        * c.powi((d - j) as i32)
                        * s.powi(j as i32)
                })
                .sum();
            let r = rel_err(direct, expanded);
            worst = worst.max(r);
            if r > 1e-10 {
                return (false, r, format!("binomial expansion failed at d={d}, t={t}"));
            }
        }
    }
    (true, worst, "r0(t) equals its binomial expansion in r_j(0)".into())
}

fn check_canonical_identities(_caps: &Caps, tol: &Tolerances) -> (bool, f64, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut worst: f64 = 0.0;
    for (q, w) in [(5.0, 1.0), (2.5, 2.0), (2.0, 0.5), (7.0, 3.0)] {
        let f = rank2::canonical_rc_frame(q, w).unwrap();
        for _ in 0..64 {
            let t = rng.gen_range(0.0..std::f64::consts::TAU);
            let r = f.rotate(t);
            let id1 = r.a1 * r.a2 + r.b1 * r.b2 - 1.0;
            let id2 = r.a1 * r.b1 + (q - 1.0) * r.a2 * r.b2 + q * t.cos() * t.sin();
            worst = worst.max(id1.abs()).max(id2.abs());
            if id1.abs() > tol.identity || id2.abs() > 10.0 * tol.identity {
                return (
                    false,
                    id1.abs().max(id2.abs()),
                    format!("canonical identity broke at q={q} w={w} t={t}"),
                );
            }
        }
    }
    (true, worst, "off-diagonal and weighted cross identities".into())
}

// ------------------------------------------------------------------ rank2

fn t0_sign_cases() -> Vec<(SpinModel2, u32)> {
    vec![
        (SpinModel2::rc(5.0, 1.0).unwrap(), 8),
        (SpinModel2::rc(5.0, 3.0).unwrap(), 4),
        (SpinModel2::rc(2.5, 0.5).unwrap(), 3),
        (SpinModel2::new(2.0, 1.0, 2.0, 1.0, 3.0).unwrap(), 5),
    ]
}

fn check_t0_signs(_caps: &Caps, tol: &Tolerances) -> (bool, f64, String) {
    let mut worst: f64 = 0.0;
    for (m, d) in t0_sign_cases() {
        let f = rank2::decompose_positive(&m);
        let t0 = rank2::find_t0(&f, m.mu(), d, tol);
        let v = f.r_vector(m.mu(), t0, d);
        let scale = v[0].abs();
        worst = worst.max(v[1].abs() / scale);
        if v[1].abs() > 1e-10 * scale {
            return (false, v[1].abs() / scale, format!("r1(t0) != 0 for {m:?} d={d}"));
        }
        for j in (0..=d as usize).step_by(2) {
            if v[j] < -1e-10 * scale {
                return (false, -v[j] / scale, format!("even entry {j} negative for {m:?}"));
            }
        }
        let odd: Vec<f64> = (3..=d as usize).step_by(2).map(|j| v[j]).collect();
        let pos = odd.iter().any(|&x| x > 1e-10 * scale);
        let neg = odd.iter().any(|&x| x < -1e-10 * scale);
        if pos && neg {
            return (false, 1.0, format!("odd entries mix signs for {m:?} d={d}: {odd:?}"));
        }
    }
    (true, worst, "r1(t0) = 0, even entries >= 0, odd entries one-signed".into())
}

fn check_curvature_bound(_caps: &Caps, tol: &Tolerances) -> (bool, f64, String) {
    let mut worst: f64 = f64::NEG_INFINITY;
    for (m, d) in t0_sign_cases() {
        let f = rank2::decompose_positive(&m);
        let t0 = rank2::find_t0(&f, m.mu(), d, tol);
        let v = f.r_vector(m.mu(), t0, d);
        let ratio = v[2] / v[0];
        let excess = ratio - 1.0 / (d as f64 - 1.0);
        worst = worst.max(excess);
        if excess > 1e-10 {
            return (false, excess, format!("curvature ratio {ratio} too large for {m:?}"));
        }
    }
    (true, worst.max(0.0), "r2(t0)/r0(t0) <= 1/(d-1)".into())
}

fn check_decomposition_independence(_caps: &Caps, tol: &Tolerances) -> (bool, f64, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let m = random_model(&mut rng);
        let d = rng.gen_range(3u32..9);
        let fs = rank2::decompose_signed(&m);
        let fp = rank2::decompose_positive(&m);
        let a = fs.r0(m.mu(), rank2::find_t0(&fs, m.mu(), d, tol), d);
        let b = fp.r0(m.mu(), rank2::find_t0(&fp, m.mu(), d, tol), d);
        let r = rel_err(a, b);
        worst = worst.max(r);
        if r > 1e-10 {
            return (false, r, format!("maxima differ across decompositions: {a} vs {b}"));
        }
    }
    (true, worst, "signed and positive frames give one maximum".into())
}

fn check_canonical_vector(_caps: &Caps, _tol: &Tolerances) -> (bool, f64, String) {
    let mut worst: f64 = 0.0;
    for (q, w, d) in [(2.0, 0.5, 4u32), (5.0, 1.0, 8), (3.0, 3.0, 5), (2.0, 0.0, 6)] {
        let f = rank2::canonical_rc_frame(q, w).unwrap();
        let v = f.r_vector((1.0, q - 1.0), 0.0, d);
        let scale = v[0].abs().max(1.0);
        worst = worst.max(v[1].abs() / scale);
        if v[1].abs() > 1e-12 * scale {
            return (false, v[1].abs(), format!("r1(0) != 0 at q={q} w={w}"));
        }
        for j in 0..=d as usize {
            if v[j] < -1e-12 * scale {
                return (false, -v[j], format!("negative entry {j} at q={q} w={w}"));
            }
        }
    }
    (true, worst, "canonical v(0) is entrywise non-negative with r1 = 0".into())
}

// ------------------------------------------------------------------ bethe

fn check_bethe_equivalence(_caps: &Caps, tol: &Tolerances) -> (bool, f64, String) {
    let mut worst: f64 = 0.0;
    let mut count = 0u32;
    for q in [2.0, 2.5, 5.0, 10.0] {
        for w in [0.5, 1.0, 2.0, 3.0] {
            for d in [3u32, 4, 8] {
                let m = SpinModel2::rc(q, w).unwrap();
                let a = bethe::phi_general(&m, d, tol);
                let b = bethe::phi_via_bp(&m, d, tol);
                let r = rel_err(a, b);
                worst = worst.max(r);
                count += 1;
                if r > 1e-9 {
                    return (false, r, format!("grid ({q},{w},{d}): {a} vs {b}"));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..200 {
        let m = random_model(&mut rng);
        let d = rng.gen_range(3u32..9);
        let a = bethe::phi_general(&m, d, tol);
        let b = bethe::phi_via_bp(&m, d, tol);
        let r = rel_err(a, b);
        worst = worst.max(r);
        count += 1;
        if r > 1e-9 {
            return (false, r, format!("random model {m:?} d={d}: {a} vs {b}"));
        }
    }
    (true, worst, format!("trig route == fixed-point route on {count} instances"))
}

fn check_fixed_point_count(_caps: &Caps, tol: &Tolerances) -> (bool, f64, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..200 {
        let m = random_model(&mut rng);
        let d = rng.gen_range(3u32..9);
        let fps = bethe::bp_fixed_points(&m, d, tol);
        if fps.len() > 3 {
            return (false, fps.len() as f64, format!("{} fixed points for {m:?}", fps.len()));
        }
    }
    let fps = bethe::rc_fixed_points(5.0, 2.0, 4, tol).unwrap();
    if fps.len() != 3 {
        return (false, fps.len() as f64, format!("critical point count {}", fps.len()));
    }
    (true, 0.0, "at most 3 fixed points; exactly 3 at the critical example".into())
}

fn check_phase_curve(_caps: &Caps, _tol: &Tolerances) -> (bool, f64, String) {
    for d in [3u32, 4, 6] {
        let mut prev: Option<(f64, f64)> = None;
        for i in 0..=60 {
            let q = 2.01 * (50.0f64 / 2.01).powf(i as f64 / 60.0);
            let wc = bethe::w_critical(q, d).unwrap();
            if wc > q / (d as f64 - 2.0) + 1e-12 {
                return (false, wc, format!("w_c({q},{d}) above q/(d-2)"));
            }
            let (x, y) = (1.0 + q / wc, 1.0 + wc);
            if let Some((px, py)) = prev {
                if x <= px || y <= py {
                    return (false, 0.0, format!("phase curve not increasing near q={q}, d={d}"));
                }
            }
            prev = Some((x, y));
        }
    }
    (true, 0.0, "critical curve is increasing in the (x,y) plane".into())
}

fn check_supercritical(_caps: &Caps, tol: &Tolerances) -> (bool, f64, String) {
    let mut min_gap = f64::INFINITY;
    for (q, d) in [(5.0, 4u32), (10.0, 4), (3.0, 6)] {
        let wc = bethe::w_critical(q, d).unwrap();
        for dw in [0.05, 0.2, 1.0] {
            let w = wc + dw;
            let phi = bethe::phi(q, w, d, tol).unwrap();
            let rank1 = q * (1.0 + w / q).powf(d as f64 / 2.0);
            let gap = (phi - rank1) / rank1;
            min_gap = min_gap.min(gap);
            if gap <= 0.0 {
                return (false, -gap, format!("phi not above the t=0 value at q={q} w={w}"));
            }
        }
        // first-derivative jump at w_c: right slope strictly above left
        let h = 1e-4;
        let at = |w: f64| bethe::phi(q, w, d, tol).unwrap();
        let left = (at(wc) - at(wc - h)) / h;
        let right = (at(wc + h) - at(wc)) / h;
        if right <= left {
            return (false, left - right, format!("no slope jump at w_c for q={q} d={d}"));
        }
    }
    (true, min_gap, "phi exceeds the t=0 value beyond w_c, with a slope jump".into())
}

fn check_h_monotone(_caps: &Caps, _tol: &Tolerances) -> (bool, f64, String) {
    for q in [2.0, 3.0, 5.0] {
        for d in [4u32, 6] {
            for i in 1..10 {
                let t = std::f64::consts::FRAC_PI_2 * i as f64 / 10.0;
                let mut prev = f64::NEG_INFINITY;
                for j in 0..=20 {
                    let w = 0.05 + j as f64 * 0.25;
                    let h = (1.0 + w / q).powf(-(d as f64) / 2.0)
                        * bethe::phi_t(q, w, d, t).unwrap();
                    if h <= prev {
                        return (false, prev - h, format!("h not increasing at q={q} d={d} t={t}"));
                    }
                    prev = h;
                }
            }
        }
    }
    (true, 0.0, "scaled profile strictly increasing in w at interior angles".into())
}

fn check_bethesigns(_caps: &Caps, tol: &Tolerances) -> (bool, f64, String) {
    for (q, w, d) in [(5.0, 1.0, 4u32), (5.0, 3.0, 4), (2.0, 2.0, 6), (10.0, 3.0, 4)] {
        let f = rank2::canonical_rc_frame(q, w).unwrap();
        let cands = rank2::critical_angles(
            &f,
            (1.0, q - 1.0),
            d,
            0.0,
            std::f64::consts::FRAC_PI_2,
            false,
            tol,
        );
        for t in cands {
            // keep interior stationary points only
            if t < 1e-9 || t > std::f64::consts::FRAC_PI_2 - 1e-9 {
                continue;
            }
            if f.r1((1.0, q - 1.0), t, d).abs() > 1e-8 {
                continue;
            }
            let r = f.rotate(t);
            if !(r.a1 > 0.0 && r.a2 > 0.0 && r.b1 > 0.0 && r.b2 < 0.0) {
                return (
                    false,
                    1.0,
                    format!("sign pattern broke at stationary t={t} for q={q} w={w} d={d}"),
                );
            }
        }
    }
    (true, 0.0, "stationary angles keep a1,a2,b1 > 0 > b2".into())
}

// ------------------------------------------------------------------ circle

/// Corpus entries paired with a surrogate model of matching degree.
fn circle_cases() -> Vec<(String, Graph, SpinModel2, u32)> {
    let mut out = Vec::new();
    for (name, g) in corpus() {
        let d = g.regularity().unwrap();
        let (q, w) = match d {
            2 => (2.5, 1.0),
            3 => (3.0, 1.0),
            4 => (5.0, 3.0),
            _ => (5.0, 1.0),
        };
        out.push((name, g, SpinModel2::rc(q, w).unwrap(), d));
    }
    out
}

fn check_circles(caps: &Caps, tol: &Tolerances) -> (bool, f64, String) {
    let mut worst: f64 = 0.0;
    for (name, g, m, d) in circle_cases() {
        let report = match roots::circle_check(&g, &m, d, caps, tol) {
            Ok(r) => r,
            Err(e) => return (false, 1.0, format!("{name}: {e}")),
        };
        worst = worst.max(report.max_radial_deviation);
        if report.max_radial_deviation > 1e-5 {
            return (
                false,
                report.max_radial_deviation,
                format!("{name}: radial deviation {:.3e}", report.max_radial_deviation),
            );
        }
        if report.residual_max > tol.root_residual {
            return (
                false,
                report.residual_max,
                format!("{name}: root residual {:.3e}", report.residual_max),
            );
        }
    }
    (true, worst, "all roots within 1e-5 of the predicted circle".into())
}

fn check_key_circle(_caps: &Caps, tol: &Tolerances) -> (bool, f64, String) {
    let mut worst: f64 = 0.0;
    for (q, w, d) in [(5.0, 3.0, 4u32), (5.0, 2.0, 4), (3.0, 1.0, 3), (2.5, 1.0, 6)] {
        let m = SpinModel2::rc(q, w).unwrap();
        let frame = rank2::decompose_signed(&m);
        let t1 = rank2::find_t1(&frame, m.mu(), d, tol).unwrap();
        let v = frame.r_vector(m.mu(), t1, d);
        let key = subgraph_poly::key_poly(&v);
        let key_roots = roots::poly_roots(&key).unwrap();
        let target = rank2::circle_radius(&m, d, tol).radius;
        for z in &key_roots {
            let dev = (z.norm() - target).abs();
            worst = worst.max(dev);
            if dev > 1e-8 {
                return (false, dev, format!("key root off circle at ({q},{w},{d}): {dev:.3e}"));
            }
        }
    }
    (true, worst, "key-polynomial roots sit on the predicted circle".into())
}

fn check_f_rotation_invariance(caps: &Caps, _tol: &Tolerances) -> (bool, f64, String) {
    // F_G(v(t)) must not depend on t
    let mut worst: f64 = 0.0;
    let g = graphs::named_graph("k5").unwrap();
    let m = SpinModel2::rc(5.0, 3.0).unwrap();
    let frame = rank2::decompose_signed(&m);
    let reference = subgraph_poly::f_eval(&g, &frame.r_vector(m.mu(), 0.0, 4), caps).unwrap();
    for i in 0..32 {
        let t = std::f64::consts::TAU * i as f64 / 32.0;
        let v = frame.r_vector(m.mu(), t, 4);
        let fx = subgraph_poly::f_eval(&g, &v, caps).unwrap();
        let r = rel_err(fx, reference);
        worst = worst.max(r);
        if r > 1e-8 {
            return (false, r, format!("F varies along the rotation family at t={t}"));
        }
    }
    (true, worst, "F_G(v(t)) constant over 32 rotation angles".into())
}

// -------------------------------------------------------------- lowerbound

fn check_lower_bound(caps: &Caps, tol: &Tolerances) -> (bool, f64, String) {
    let mut worst: f64 = f64::INFINITY;
    for (name, g, m, d) in circle_cases() {
        let z = partition::z_spin(&g, &m.to_general(), caps).unwrap();
        let phi = bethe::phi_general(&m, d, tol);
        let bound = phi.powi(g.n() as i32);
        let slack = z / bound - 1.0;
        worst = worst.min(slack);
        if z < bound * (1.0 - 1e-9) {
            return (false, -slack, format!("{name}: Z = {z} below phi^n = {bound}"));
        }
    }
    (true, worst.max(0.0), "Z >= phi^n across the corpus".into())
}

fn check_strict_lower_bound(caps: &Caps, tol: &Tolerances) -> (bool, f64, String) {
    // K4 carries short cycles, so the bound must be strictly beaten
    let g = graphs::named_graph("k4").unwrap();
    let m = SpinModel2::rc(3.0, 1.0).unwrap();
    let z = partition::z_spin(&g, &m.to_general(), caps).unwrap();
    let phi = bethe::phi_general(&m, 3, tol);
    let log_gap = z.ln() - (g.n() as f64) * phi.ln();
    if log_gap <= 0.0 {
        return (false, -log_gap, format!("no strict gap: {log_gap}"));
    }
    (true, log_gap, format!("log gap {log_gap:.6} > 0 on a short-cycle graph"))
}

// ------------------------------------------------------------------ mixed

fn check_mixed_symmetry(_caps: &Caps, tol: &Tolerances) -> (bool, f64, String) {
    let mut worst: f64 = 0.0;
    for (q, d) in [(5.0, 4u32), (10.0, 4), (3.0, 6)] {
        let wc = bethe::w_critical(q, d).unwrap();
        let f = rank2::canonical_rc_frame(q, wc).unwrap();
        let mu = (1.0, q - 1.0);
        let t1 = rank2::find_t1(&f, mu, d, tol).unwrap();
        let t2 = 2.0 * t1 - std::f64::consts::FRAC_PI_2;
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        for _ in 0..64 {
            let t = rng.gen_range(0.0..std::f64::consts::TAU);
            let a = f.r0(mu, t, d);
            let b = f.r0(mu, t2 - t, d);
            let r = (a - b).abs() / a.abs().max(b.abs()).max(1e-300);
            worst = worst.max(r);
            if r > 1e-9 {
                return (false, r, format!("symmetry broke at q={q} d={d} t={t}"));
            }
        }
    }
    (true, worst, "profile symmetric about t2/2 at the critical weight".into())
}

fn check_q2_mixed(_caps: &Caps, tol: &Tolerances) -> (bool, f64, String) {
    let mut worst: f64 = 0.0;
    for w in [0.3, 1.0, 2.0, 5.0] {
        let m = SpinModel2::rc(2.0, w).unwrap();
        for d in [3u32, 4, 6] {
            let resid = rank2::mixed_state_residual(&m, d).abs();
            let radius = rank2::circle_radius(&m, d, tol).radius;
            worst = worst.max(resid).max((radius - 1.0).abs());
            if resid > 1e-9 || (radius - 1.0).abs() > 1e-9 {
                return (false, worst, format!("q=2 not mixed at w={w}, d={d}"));
            }
        }
    }
    (true, worst, "q = 2 keeps the root circle at radius 1 for every w".into())
}
