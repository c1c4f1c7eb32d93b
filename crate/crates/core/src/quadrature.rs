//! Panel Gauss–Legendre quadrature on `[a, b] ⊂ [0, ∞)`.
//!
//! Panel widths follow `min(0.25, 1/(2 log(2 + t)))`, the local oscillation
//! scale of ζ on the critical line. Each panel is integrated once whole and
//! once as two halves; the difference is the error estimate, and panels whose
//! estimate is too large are split again. Panels are independent, and partial
//! results are combined in ascending panel order, so serial and parallel runs
//! give identical bits.

use std::sync::OnceLock;

use thiserror::Error;

use crate::exec::Execution;
use crate::summation::NeumaierSum;

pub const DEFAULT_POINTS: usize = 16;
pub const MAX_PANEL_WIDTH: f64 = 0.25;

/// Relative accuracy assumed for a single integrand value; added to every
/// panel's error estimate.
pub const EVALUATION_FLOOR: f64 = 1e-13;
const ACCEPT_REL: f64 = 1e-10;
const STALL_REL: f64 = 1e-6;
const MAX_DEPTH: u32 = 10;
const PRIMITIVE_DEPTH: u32 = 4;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuadError<E> {
    #[error("refinement stalled on [{a}, {b}]")]
    Stalled { a: f64, b: f64 },
    #[error("invalid quadrature settings: {0}")]
    Settings(String),
    #[error(transparent)]
    Integrand(E),
}

/// Nodes and weights on `[-1, 1]`, nodes ascending.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_with_derivative(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, x);
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        GaussLegendre { nodes, weights }
    }

    pub fn standard() -> &'static GaussLegendre {
        static GL: OnceLock<GaussLegendre> = OnceLock::new();
        GL.get_or_init(|| GaussLegendre::new(DEFAULT_POINTS))
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// `(P_n(x), P_n'(x))`.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    (p1, n as f64 * (x * p1 - p0) / (x * x - 1.0))
}

/// `P_0(y) ..= P_{n}(y)`.
fn legendre_values(n: usize, y: f64, out: &mut Vec<f64>) {
    out.clear();
    out.push(1.0);
    if n >= 1 {
        out.push(y);
    }
    for k in 2..=n {
        let p = ((2 * k - 1) as f64 * y * out[k - 1] - (k - 1) as f64 * out[k - 2]) / k as f64;
        out.push(p);
    }
}

/// How an interval is cut into panels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PanelScheme {
    /// Multiplies the default width rule; `0.5` halves every panel.
    pub width_scale: f64,
    /// Gauss–Legendre points per panel.
    pub points: usize,
}

impl Default for PanelScheme {
    fn default() -> Self {
        PanelScheme {
            width_scale: 1.0,
            points: DEFAULT_POINTS,
        }
    }
}

impl PanelScheme {
    pub fn validate(&self) -> Result<(), String> {
        if !(self.width_scale > 0.0 && self.width_scale <= 16.0) {
            return Err(format!("width scale {} outside (0, 16]", self.width_scale));
        }
        if !(2..=64).contains(&self.points) {
            return Err(format!("points per panel {} outside 2..=64", self.points));
        }
        Ok(())
    }

    /// `scale · min(0.25, 1/(2 log(2 + |t|)))`.
    pub fn width_at(&self, t: f64) -> f64 {
        self.width_scale * MAX_PANEL_WIDTH.min(0.5 / (2.0 + t.abs()).ln())
    }

    /// Consecutive panels covering `[a, b]`, marching up from `a`. A sliver
    /// shorter than a quarter panel is merged into its neighbour.
    pub fn partition(&self, a: f64, b: f64) -> Vec<(f64, f64)> {
        let mut out = Vec::new();
        let mut x = a;
        while x < b {
            let w = self.width_at(x);
            let mut next = x + w;
            if next >= b - 0.25 * w {
                next = b;
            }
            out.push((x, next));
            x = next;
        }
        out
    }

    fn rule(&self) -> std::borrow::Cow<'static, GaussLegendre> {
        if self.points == DEFAULT_POINTS {
            std::borrow::Cow::Borrowed(GaussLegendre::standard())
        } else {
            std::borrow::Cow::Owned(GaussLegendre::new(self.points))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    /// Leaf panels after adaptive splitting.
    pub panels: usize,
}

impl QuadResult {
    pub fn zero() -> Self {
        QuadResult {
            value: 0.0,
            error_estimate: 0.0,
            panels: 0,
        }
    }
}

struct Piece {
    value: f64,
    abs: f64,
}

fn gl_piece<F, E>(f: &F, rule: &GaussLegendre, a: f64, b: f64) -> Result<Piece, E>
where
    F: Fn(f64) -> Result<f64, E>,
{
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut value = NeumaierSum::new();
    let mut abs = NeumaierSum::new();
    for (x, w) in rule.nodes.iter().zip(&rule.weights) {
        let fx = f(mid + half * x)?;
        value.add(w * fx);
        abs.add(w * fx.abs());
    }
    Ok(Piece {
        value: half * value.value(),
        abs: half * abs.value(),
    })
}

fn adaptive<F, E>(
    f: &F,
    rule: &GaussLegendre,
    a: f64,
    b: f64,
    coarse: Piece,
    depth: u32,
    density: f64,
) -> Result<QuadResult, QuadError<E>>
where
    F: Fn(f64) -> Result<f64, E>,
{
    // `density` is ∫|f| per unit length on the top-level panel; tolerances
    // scale with it so a kink in a nearly vanishing region is not over-refined.
    let m = 0.5 * (a + b);
    let left = gl_piece(f, rule, a, m).map_err(QuadError::Integrand)?;
    let right = gl_piece(f, rule, m, b).map_err(QuadError::Integrand)?;
    let fine = left.value + right.value;
    let abs = left.abs + right.abs;
    let diff = (fine - coarse.value).abs();
    let reference = abs.max(density * (b - a));
    if diff <= ACCEPT_REL * reference {
        return Ok(QuadResult {
            value: fine,
            error_estimate: diff + EVALUATION_FLOOR * abs,
            panels: 1,
        });
    }
    if depth >= MAX_DEPTH {
        if diff <= STALL_REL * density * (b - a) * (1u64 << depth) as f64 {
            return Ok(QuadResult {
                value: fine,
                error_estimate: diff + EVALUATION_FLOOR * abs,
                panels: 1,
            });
        }
        return Err(QuadError::Stalled { a, b });
    }
    let l = adaptive(f, rule, a, m, left, depth + 1, density)?;
    let r = adaptive(f, rule, m, b, right, depth + 1, density)?;
    Ok(QuadResult {
        value: l.value + r.value,
        error_estimate: l.error_estimate + r.error_estimate,
        panels: l.panels + r.panels,
    })
}

fn check_interval<E>(a: f64, b: f64, scheme: &PanelScheme) -> Result<(), QuadError<E>> {
    scheme.validate().map_err(QuadError::Settings)?;
    if !(a.is_finite() && b.is_finite() && a <= b) {
        return Err(QuadError::Settings(format!("invalid interval [{a}, {b}]")));
    }
    Ok(())
}

/// `∫_a^b f`, with the panel results combined in ascending order.
pub fn integrate<F, E>(
    f: F,
    a: f64,
    b: f64,
    scheme: &PanelScheme,
    exec: Execution,
) -> Result<QuadResult, QuadError<E>>
where
    F: Fn(f64) -> Result<f64, E> + Sync,
    E: Send,
{
    check_interval(a, b, scheme)?;
    let rule = scheme.rule();
    let panels = scheme.partition(a, b);
    let pieces = exec.map(&panels, |&(pa, pb)| {
        let coarse = gl_piece(&f, &rule, pa, pb).map_err(QuadError::Integrand)?;
        let density = coarse.abs / (pb - pa);
        adaptive(&f, &rule, pa, pb, coarse, 0, density)
    });
    let mut value = NeumaierSum::new();
    let mut error = NeumaierSum::new();
    let mut count = 0;
    for p in pieces {
        let p = p?;
        value.add(p.value);
        error.add(p.error_estimate);
        count += p.panels;
    }
    Ok(QuadResult {
        value: value.value(),
        error_estimate: error.value(),
        panels: count,
    })
}

/// `F(x) = ∫_a^x f` for any `x` in `[a, b]`.
///
/// Built from the same panels as [`integrate`]: each leaf keeps the Legendre
/// expansion of `f` through its nodes, which is integrated exactly up to `x`.
/// Leaves are split a few levels where `f` is not smooth (e.g. `|ζ|` at a
/// zero); the remaining discrepancy goes into the error estimate.
#[derive(Debug, Clone)]
pub struct Primitive {
    starts: Vec<f64>,
    ends: Vec<f64>,
    cumulative: Vec<f64>,
    coeffs: Vec<Vec<f64>>,
    error_estimate: f64,
}

impl Primitive {
    pub fn build<F, E>(
        f: F,
        a: f64,
        b: f64,
        scheme: &PanelScheme,
        exec: Execution,
    ) -> Result<Self, QuadError<E>>
    where
        F: Fn(f64) -> Result<f64, E> + Sync,
        E: Send,
    {
        check_interval(a, b, scheme)?;
        let rule = scheme.rule();
        let panels = scheme.partition(a, b);
        let built = exec.map(&panels, |&(pa, pb)| {
            let coarse = gl_piece(&f, &rule, pa, pb).map_err(QuadError::Integrand)?;
            let density = coarse.abs / (pb - pa);
            let mut leaves = Vec::new();
            let err = primitive_leaves(&f, &rule, pa, pb, coarse.value, 0, density, &mut leaves)
                .map_err(QuadError::Integrand)?;
            Ok::<_, QuadError<E>>((leaves, err))
        });
        let mut out = Primitive {
            starts: Vec::new(),
            ends: Vec::new(),
            cumulative: Vec::new(),
            coeffs: Vec::new(),
            error_estimate: 0.0,
        };
        let mut running = NeumaierSum::new();
        let mut error = NeumaierSum::new();
        for item in built {
            let (leaves, err) = item?;
            error.add(err);
            for leaf in leaves {
                let len = leaf.end - leaf.start;
                out.starts.push(leaf.start);
                out.ends.push(leaf.end);
                out.cumulative.push(running.value());
                running.add(len * leaf.coeffs[0]);
                out.coeffs.push(leaf.coeffs);
            }
        }
        out.starts.push(b);
        out.ends.push(b);
        out.cumulative.push(running.value());
        out.coeffs.push(vec![0.0]);
        out.error_estimate = error.value();
        Ok(out)
    }

    pub fn lower(&self) -> f64 {
        self.starts[0]
    }

    pub fn upper(&self) -> f64 {
        *self.ends.last().expect("non-empty")
    }

    /// Sum of panel error estimates for `F(b)`.
    pub fn error_estimate(&self) -> f64 {
        self.error_estimate
    }

    /// `F(x)`; `x` is clamped into `[a, b]`.
    pub fn eval(&self, x: f64) -> f64 {
        let x = x.clamp(self.lower(), self.upper());
        let idx = match self.starts.partition_point(|&s| s <= x) {
            0 => 0,
            i => i - 1,
        };
        let (s, e) = (self.starts[idx], self.ends[idx]);
        if e <= s {
            return self.cumulative[idx];
        }
        let y = (2.0 * x - s - e) / (e - s);
        let c = &self.coeffs[idx];
        let mut p = Vec::with_capacity(c.len() + 1);
        legendre_values(c.len(), y, &mut p);
        // ∫_{-1}^{y} P_0 = y + 1, ∫_{-1}^{y} P_k = (P_{k+1} - P_{k-1}) / (2k + 1)
        let mut acc = c[0] * (y + 1.0);
        for k in 1..c.len() {
            acc += c[k] * (p[k + 1] - p[k - 1]) / (2 * k + 1) as f64;
        }
        self.cumulative[idx] + 0.5 * (e - s) * acc
    }
}

struct Leaf {
    start: f64,
    end: f64,
    coeffs: Vec<f64>,
}

/// Splits `[a, b]` into Legendre leaves until halving agrees with the whole,
/// up to `PRIMITIVE_DEPTH` levels. Returns the summed error estimate.
#[allow(clippy::too_many_arguments)]
fn primitive_leaves<F, E>(
    f: &F,
    rule: &GaussLegendre,
    a: f64,
    b: f64,
    coarse: f64,
    depth: u32,
    density: f64,
    out: &mut Vec<Leaf>,
) -> Result<f64, E>
where
    F: Fn(f64) -> Result<f64, E>,
{
    let m = 0.5 * (a + b);
    let (lc, lv, la) = legendre_leaf(f, rule, a, m)?;
    let (rc, rv, ra) = legendre_leaf(f, rule, m, b)?;
    let diff = (lv + rv - coarse).abs();
    let abs = la + ra;
    if diff <= ACCEPT_REL * abs.max(density * (b - a)) || depth >= PRIMITIVE_DEPTH {
        out.push(Leaf {
            start: a,
            end: m,
            coeffs: lc,
        });
        out.push(Leaf {
            start: m,
            end: b,
            coeffs: rc,
        });
        return Ok(diff + EVALUATION_FLOOR * abs);
    }
    let e1 = primitive_leaves(f, rule, a, m, lv, depth + 1, density, out)?;
    let e2 = primitive_leaves(f, rule, m, b, rv, depth + 1, density, out)?;
    Ok(e1 + e2)
}

/// Legendre coefficients of the interpolant through the nodes (scaled so
/// that `coeffs[0]` is the mean value), the panel integral, and `∫|f|`.
fn legendre_leaf<F, E>(
    f: &F,
    rule: &GaussLegendre,
    a: f64,
    b: f64,
) -> Result<(Vec<f64>, f64, f64), E>
where
    F: Fn(f64) -> Result<f64, E>,
{
    let n = rule.len();
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut coeffs = vec![0.0; n];
    let mut abs = 0.0;
    let mut p = Vec::with_capacity(n);
    for (x, w) in rule.nodes.iter().zip(&rule.weights) {
        let fx = f(mid + half * x)?;
        abs += w * fx.abs();
        legendre_values(n - 1, *x, &mut p);
        for k in 0..n {
            coeffs[k] += w * fx * p[k];
        }
    }
    for (k, c) in coeffs.iter_mut().enumerate() {
        *c *= (2 * k + 1) as f64 / 2.0;
    }
    // mean value is c_0, so the integral is 2·half·c_0
    let value = 2.0 * half * coeffs[0];
    Ok((coeffs, value, half * abs))
}
