//! Adaptive Gauss-Kronrod quadrature.
//!
//! A 7-15 Gauss-Kronrod rule with greedy bisection of the
//! worst-error panel. The rule is open: panel endpoints are never
//! evaluated, so integrable endpoint singularities (inverse square
//! roots, logarithms) and semi-infinite transforms are safe as long
//! as singular points are supplied as breakpoints.

/// Positive Kronrod abscissae on [-1, 1] (descending), last entry 0.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];

/// Kronrod weights matching `XGK`.
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

/// 7-point Gauss weights for the embedded rule (odd-index abscissae).
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Tolerances and panel budget for one adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadOpts {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_panels: usize,
}

impl Default for QuadOpts {
    fn default() -> Self {
        Self {
            abs_tol: 1e-9,
            rel_tol: 1e-6,
            max_panels: 4000,
        }
    }
}

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadOutcome {
    pub value: f64,
    pub err: f64,
    pub panels: usize,
    pub converged: bool,
}

/// One 15-point Kronrod evaluation on [a, b].
///
/// Returns `(integral, error_estimate)` where the error estimate is the
/// usual QUADPACK rescaling of `|K15 - G7|`.
pub fn qk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut res_abs = kronrod.abs();

    let mut fv = [0.0f64; 15];
    fv[7] = fc;
    for (j, &x) in XGK.iter().enumerate().take(7) {
        let dx = half * x;
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv[j] = f1;
        fv[14 - j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }

    let mean = kronrod * 0.5;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for (j, &v) in fv.iter().enumerate().take(7) {
        res_asc += WGK[j] * ((v - mean).abs() + (fv[14 - j] - mean).abs());
    }

    let value = kronrod * half;
    res_abs *= half.abs();
    res_asc *= half.abs();

    let mut err = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * 1.0f64.min((200.0 * err / res_asc).powf(1.5));
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    (value, err)
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

/// Adaptively integrate `f` over `[a, b]`.
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, opts: &QuadOpts) -> QuadOutcome {
    integrate_segments(f, &[a, b], opts)
}

/// Adaptively integrate over consecutive segments given by ascending
/// `breaks` (at least two entries). Breakpoints should mark kernel
/// kinks or endpoint singularities; the open rule never samples them.
pub fn integrate_segments<F: Fn(f64) -> f64>(f: &F, breaks: &[f64], opts: &QuadOpts) -> QuadOutcome {
    assert!(breaks.len() >= 2, "need at least two breakpoints");
    let mut panels: Vec<Panel> = breaks
        .windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| {
            let (value, err) = qk15(f, w[0], w[1]);
            Panel { a: w[0], b: w[1], value, err }
        })
        .collect();

    loop {
        let value: f64 = panels.iter().map(|p| p.value).sum();
        let err: f64 = panels.iter().map(|p| p.err).sum();
        let target = opts.abs_tol.max(opts.rel_tol * value.abs());
        if err <= target {
            return QuadOutcome { value, err, panels: panels.len(), converged: true };
        }
        if panels.len() >= opts.max_panels {
            return QuadOutcome { value, err, panels: panels.len(), converged: false };
        }
        // split the worst panel
        let (idx, _) = panels
            .iter()
            .enumerate()
            .max_by(|(_, x), (_, y)| x.err.total_cmp(&y.err))
            .expect("nonempty panel list");
        let worst = panels.swap_remove(idx);
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval exhausted at machine precision; keep as-is
            panels.push(worst);
            let value: f64 = panels.iter().map(|p| p.value).sum();
            let err: f64 = panels.iter().map(|p| p.err).sum();
            return QuadOutcome { value, err, panels: panels.len(), converged: false };
        }
        for (lo, hi) in [(worst.a, mid), (mid, worst.b)] {
            let (value, err) = qk15(f, lo, hi);
            panels.push(Panel { a: lo, b: hi, value, err });
        }
    }
}

/// Integrate `f` over `[a, inf)` through the substitution
/// `x = a + t/(1-t)`, `t in [0, 1)`. The integrand must decay fast
/// enough that `f(x)/(1-t)^2` stays bounded; non-finite values deep in
/// the tail are treated as zero.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(f: &F, a: f64, opts: &QuadOpts) -> QuadOutcome {
    let g = |t: f64| {
        let om = 1.0 - t;
        let x = a + t / om;
        let v = f(x) / (om * om);
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };
    integrate_segments(&g, &[0.0, 0.5, 0.9, 1.0], opts)
}

/// A fixed composite Kronrod grid caching integrand values at every
/// node, so one expensive kernel tabulation can be reused against many
/// different weight functions.
pub struct WeightedGrid {
    panels: Vec<GridPanel>,
}

struct GridPanel {
    center: f64,
    half: f64,
    nodes: [f64; 15],
    fx: [f64; 15],
}

impl WeightedGrid {
    /// Tabulate `f` on panels of width at most `max_width` between
    /// consecutive `breaks`.
    pub fn build<F: Fn(f64) -> f64>(f: &F, breaks: &[f64], max_width: f64) -> Self {
        assert!(breaks.len() >= 2 && max_width > 0.0);
        let mut panels = Vec::new();
        for w in breaks.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            if hi <= lo {
                continue;
            }
            let n = ((hi - lo) / max_width).ceil().max(1.0) as usize;
            let step = (hi - lo) / n as f64;
            for i in 0..n {
                let a = lo + i as f64 * step;
                let b = a + step;
                let center = 0.5 * (a + b);
                let half = 0.5 * (b - a);
                let mut nodes = [0.0f64; 15];
                let mut fx = [0.0f64; 15];
                for (j, &x) in XGK.iter().enumerate().take(7) {
                    nodes[j] = center - half * x;
                    nodes[14 - j] = center + half * x;
                }
                nodes[7] = center;
                for (j, &x) in nodes.iter().enumerate() {
                    fx[j] = f(x);
                }
                panels.push(GridPanel { center, half, nodes, fx });
            }
        }
        Self { panels }
    }

    /// Number of cached integrand evaluations.
    pub fn node_count(&self) -> usize {
        self.panels.len() * 15
    }

    /// Integrate `f(x) * w(x)` reusing the cached `f` values.
    /// Returns `(value, error_estimate)` with the K15-G7 estimate
    /// computed on the weighted product.
    pub fn integrate_weighted(&self, w: impl Fn(f64) -> f64) -> (f64, f64) {
        let mut total = 0.0;
        let mut err = 0.0;
        for p in &self.panels {
            let mut kronrod = 0.0;
            let mut gauss = 0.0;
            for j in 0..15 {
                let v = p.fx[j] * w(p.nodes[j]);
                let jj = if j <= 7 { j } else { 14 - j };
                kronrod += WGK[jj] * v;
                if jj % 2 == 1 {
                    gauss += WG[jj / 2] * v;
                }
            }
            total += kronrod * p.half;
            err += ((kronrod - gauss) * p.half).abs();
        }
        (total, err)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn polynomial_is_exact() {
        // K15 integrates polynomials up to degree 22 exactly
        let f = |x: f64| 3.0 * x * x;
        let (v, e) = qk15(&f, 0.0, 2.0);
        assert!((v - 8.0).abs() < 1e-13, "v={v} e={e}");
    }

    #[test]
    fn adaptive_matches_known_integrals() {
        let opts = QuadOpts::default();
        let r = integrate(&|x: f64| x.sin(), 0.0, PI, &opts);
        assert!(r.converged);
        assert!((r.value - 2.0).abs() < 1e-10);

        // integrable inverse square-root endpoint singularity
        let r = integrate(&|x: f64| 1.0 / x.sqrt(), 0.0, 1.0, &opts);
        assert!((r.value - 2.0).abs() < 1e-7, "value {}", r.value);

        // log singularity
        let r = integrate(&|x: f64| x.ln(), 0.0, 1.0, &opts);
        assert!((r.value + 1.0).abs() < 1e-9, "value {}", r.value);
    }

    #[test]
    fn semi_infinite_gaussian() {
        let opts = QuadOpts::default();
        let r = integrate_semi_infinite(&|x: f64| (-x * x).exp(), 0.0, &opts);
        assert!((r.value - 0.5 * PI.sqrt()).abs() < 1e-9);
        // decaying 1/x^2 tail, exact value 1
        let r = integrate_semi_infinite(&|x: f64| 1.0 / (x * x), 1.0, &opts);
        assert!((r.value - 1.0).abs() < 1e-9);
    }

    #[test]
    fn weighted_grid_agrees_with_direct() {
        let kernel = |k: f64| (-k).exp();
        let grid = WeightedGrid::build(&kernel, &[0.0, 1.0, 8.0], 0.05);
        let w = |k: f64| (2.0 * PI * k).cos();
        let (v, e) = grid.integrate_weighted(w);
        let direct = integrate(&|k: f64| kernel(k) * w(k), 0.0, 8.0, &QuadOpts::default());
        assert!((v - direct.value).abs() < 1e-8, "grid {v} direct {} err {e}", direct.value);
    }

    #[test]
    fn breakpoints_keep_kinks_off_nodes() {
        // |x| kink at 0 resolved exactly when 0 is a breakpoint
        let r = integrate_segments(&|x: f64| x.abs(), &[-1.0, 0.0, 1.0], &QuadOpts::default());
        assert!((r.value - 1.0).abs() < 1e-14);
    }
}
