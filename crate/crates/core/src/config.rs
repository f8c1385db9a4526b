//! Enumeration caps and numeric tolerances.
//!
//! Every exponential-cost routine checks a cap before running and refuses
//! with [`crate::Error::CapExceeded`] beyond it. All tolerances live in one
//! record so that the library, the verification suites, and the CLI agree on
//! the same numbers.

/// Hard size limits for exact enumeration.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    /// Maximum edge count for `2^e` edge-subset sums.
    pub edge_subsets: u32,
    /// Maximum edge count for memoized deletion-contraction.
    pub tutte_edges: u32,
    /// Maximum vertex count for `2^n` vertex-subset sums.
    pub vertex_subsets: u32,
    /// Maximum number of spin configurations `r^n` for direct spin sums.
    pub spin_configs: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            edge_subsets: 30,
            tutte_edges: 18,
            vertex_subsets: 24,
            spin_configs: 1 << 32,
        }
    }
}

/// Numeric tolerances and search-grid resolutions.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    /// Bisection width (radians) when polishing zeros of `r_1(t)`.
    pub t_bisect: f64,
    /// Residual allowed in algebraic identities (frame reconstruction,
    /// rotation invariants).
    pub identity: f64,
    /// Relative bisection width when polishing fixed points of the
    /// degree-(d-1) recursion.
    pub fixed_point: f64,
    /// Per-root residual contract: `|p(root)| <= root_residual * ||p||_1`.
    pub root_residual: f64,
    /// Half-width of the band around `w_c` classified as critical.
    pub critical_band: f64,
    /// Relative band within which two maximizer values count as tied
    /// (ties resolve to the smallest angle).
    pub max_tie: f64,
    /// Grid points scanned on `[0, 2pi)` for sign changes of `r_1(t)`.
    /// `r_1` is a trigonometric polynomial of degree `d`, so 4096 points
    /// cannot skip a sign change for any `d <= 64`.
    pub t_scan_points: usize,
    /// Grid points scanned for sign changes of the fixed-point defect.
    pub fp_scan_points: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            t_bisect: 1e-13,
            identity: 1e-12,
            fixed_point: 1e-13,
            root_residual: 1e-8,
            critical_band: 1e-9,
            max_tie: 1e-12,
            t_scan_points: 4096,
            fp_scan_points: 10_000,
        }
    }
}
