//! Numerical minimization of the perimeter of an inscribed triangle.
//!
//! An inscribed triangle is parameterized by one affine coordinate per side,
//! each in the open interval (0, 1). Two independent solvers are provided:
//! a coarse grid followed by Nelder–Mead refinement, and exact coordinate
//! descent where each step reflects a neighbour across the side line.

use crate::error::{Error, Result};
use crate::geometry::{orient2d, perimeter, project_onto_line, Point, Triangle, Vertex};

/// Parameters are confined to `[PARAM_MARGIN, 1 - PARAM_MARGIN]`.
pub const PARAM_MARGIN: f64 = 1e-9;

/// Triangles closer than this (radians) to right-angled get the `near_right` flag.
pub const NEAR_RIGHT_MARGIN: f64 = 1e-3;

pub const DEFAULT_GRID_N: usize = 16;
pub const DEFAULT_MAX_ITER: usize = 10_000;
pub const DEFAULT_SIMPLEX_TOL: f64 = 1e-10;
pub const DEFAULT_DESCENT_TOL: f64 = 1e-15;

/// Nelder–Mead restarts after the first run of the grid-simplex method.
pub const MAX_RESTARTS: usize = 50;

/// Largest parameter move in a sweep that still counts as stalled.
pub const DESCENT_STEP_TOL: f64 = 1e-12;

/// Relative perimeter rise in one sweep that is accepted and the descent continues.
pub const ROUNDING_SLACK: f64 = 1e-14;

/// Largest relative perimeter rise that stops the descent as converged; a
/// larger rise stops it without convergence.
pub const NOISE_FLOOR: f64 = 1e-12;

/// One point on each side: `side_start + t · (side_end − side_start)` for the
/// sides `b→c`, `c→a` and `a→b`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InscribedConfig {
    t_on_bc: f64,
    t_on_ca: f64,
    t_on_ab: f64,
}

impl InscribedConfig {
    pub fn new(t_on_bc: f64, t_on_ca: f64, t_on_ab: f64) -> Result<Self> {
        for (name, value) in [
            ("t_on_bc", t_on_bc),
            ("t_on_ca", t_on_ca),
            ("t_on_ab", t_on_ab),
        ] {
            if !(value > 0.0 && value < 1.0) {
                return Err(Error::ParameterOutOfRange { name, value });
            }
        }
        Ok(InscribedConfig {
            t_on_bc,
            t_on_ca,
            t_on_ab,
        })
    }

    fn from_array_unchecked(p: [f64; 3]) -> Self {
        InscribedConfig {
            t_on_bc: p[0],
            t_on_ca: p[1],
            t_on_ab: p[2],
        }
    }

    pub fn t_on_bc(&self) -> f64 {
        self.t_on_bc
    }

    pub fn t_on_ca(&self) -> f64 {
        self.t_on_ca
    }

    pub fn t_on_ab(&self) -> f64 {
        self.t_on_ab
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.t_on_bc, self.t_on_ca, self.t_on_ab]
    }

    /// The selected points, indexed like the altitude feet: the point on `bc`
    /// first (opposite `a`), then on `ca`, then on `ab`.
    pub fn points(&self, t: &Triangle) -> [Point; 3] {
        side_points(t, self.as_array())
    }

    /// Parameters of three points lying on the sides `bc`, `ca`, `ab`, found by
    /// projection onto each side.
    pub fn from_points(t: &Triangle, points: [Point; 3]) -> Result<Self> {
        let mut params = [0.0; 3];
        for (i, v) in Vertex::ALL.into_iter().enumerate() {
            let (start, end) = side(t, v);
            let dir = end - start;
            params[i] = (points[i] - start).dot(dir) / dir.dot(dir);
        }
        InscribedConfig::new(params[0], params[1], params[2])
    }

    /// Parameters of the three altitude feet.
    pub fn orthic(t: &Triangle) -> Result<Self> {
        let o = t.orthic()?;
        InscribedConfig::from_points(t, o.feet())
    }
}

/// Endpoints of the side opposite `v`, in the cyclic direction used by
/// [`InscribedConfig`].
fn side(t: &Triangle, v: Vertex) -> (Point, Point) {
    let (p, q) = v.others();
    (t.vertex(p), t.vertex(q))
}

fn side_points(t: &Triangle, params: [f64; 3]) -> [Point; 3] {
    let mut out = [Point::ORIGIN; 3];
    for (i, v) in Vertex::ALL.into_iter().enumerate() {
        let (start, end) = side(t, v);
        out[i] = start.lerp(end, params[i]);
    }
    out
}

fn eval(t: &Triangle, params: [f64; 3]) -> f64 {
    let [d, e, f] = side_points(t, params);
    perimeter(d, e, f)
}

/// Perimeter of the inscribed triangle selected by `c`.
pub fn objective(t: &Triangle, c: &InscribedConfig) -> Result<f64> {
    t.require_acute()?;
    Ok(eval(t, c.as_array()))
}

/// The minimal inscribed perimeter: the perimeter of the orthic triangle.
pub fn min_perimeter_closed_form(t: &Triangle) -> Result<f64> {
    Ok(t.orthic()?.perimeter)
}

#[derive(Clone, Debug, PartialEq)]
pub struct MinimizeResult {
    pub config: InscribedConfig,
    pub perimeter: f64,
    pub iterations: usize,
    pub converged: bool,
    pub history: Vec<(usize, f64)>,
    /// The parent is within [`NEAR_RIGHT_MARGIN`] of right-angled.
    pub near_right: bool,
    /// Number of coordinate steps that had to be clamped into the open side.
    pub clamped_steps: usize,
}

fn near_right(t: &Triangle) -> bool {
    t.classify().margin < NEAR_RIGHT_MARGIN
}

fn clamp_param(x: f64) -> f64 {
    x.clamp(PARAM_MARGIN, 1.0 - PARAM_MARGIN)
}

/// Coarse `grid_n³` grid over cell centres, then Nelder–Mead (with restarts)
/// from the best node.
///
/// `converged` means the simplex diameter dropped below `tol` within `max_iter`
/// iterations.
pub fn minimize_grid_then_simplex(
    t: &Triangle,
    grid_n: usize,
    max_iter: usize,
    tol: f64,
) -> Result<MinimizeResult> {
    t.require_acute()?;
    if grid_n < 4 {
        return Err(Error::InvalidArgument(format!(
            "grid_n must be at least 4, got {grid_n}"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tol must be positive, got {tol}"
        )));
    }

    let h = 1.0 / grid_n as f64;
    let mut best = ([0.5; 3], f64::INFINITY);
    for i in 0..grid_n {
        for j in 0..grid_n {
            for k in 0..grid_n {
                let p = [
                    (i as f64 + 0.5) * h,
                    (j as f64 + 0.5) * h,
                    (k as f64 + 0.5) * h,
                ];
                let value = eval(t, p);
                if value < best.1 {
                    best = (p, value);
                }
            }
        }
    }

    // Nelder–Mead runs in logit coordinates, where the open cube is all of
    // R³; restarts continue from the best point until one brings no gain.
    let objective = |u: [f64; 3]| eval(t, from_logit(u));
    let start = to_logit(best.0);
    let step = 4.0 * h;
    let mut nm = nelder_mead(objective, start, step, max_iter, tol);
    let mut iterations = nm.iterations;
    let mut history = std::mem::take(&mut nm.history);
    for _ in 0..MAX_RESTARTS {
        if !nm.converged || iterations >= max_iter {
            break;
        }
        let mut next = nelder_mead(objective, nm.x, step, max_iter - iterations, tol);
        if !(next.fx < nm.fx) {
            break;
        }
        history.extend(next.history.drain(1..).map(|(i, p)| (i + iterations, p)));
        iterations += next.iterations;
        nm = next;
    }
    Ok(MinimizeResult {
        config: InscribedConfig::from_array_unchecked(from_logit(nm.x)),
        perimeter: nm.fx,
        iterations,
        converged: nm.converged,
        history,
        near_right: near_right(t),
        clamped_steps: 0,
    })
}

struct NelderMeadOutcome {
    x: [f64; 3],
    fx: f64,
    iterations: usize,
    converged: bool,
    history: Vec<(usize, f64)>,
}

fn simplex_diameter(simplex: &[([f64; 3], f64); 4]) -> f64 {
    let mapped = simplex.map(|(u, _)| from_logit(u));
    let mut diam: f64 = 0.0;
    for i in 0..4 {
        for j in (i + 1)..4 {
            let d = (0..3)
                .map(|k| (mapped[i][k] - mapped[j][k]).powi(2))
                .sum::<f64>()
                .sqrt();
            diam = diam.max(d);
        }
    }
    diam
}

fn to_logit(p: [f64; 3]) -> [f64; 3] {
    p.map(|t| {
        let t = clamp_param(t);
        (t / (1.0 - t)).ln()
    })
}

fn from_logit(u: [f64; 3]) -> [f64; 3] {
    u.map(|x| clamp_param(1.0 / (1.0 + (-x).exp())))
}

/// Nelder–Mead in logit coordinates. Convergence is judged on the simplex
/// diameter after mapping back to side parameters.
fn nelder_mead<F>(f: F, x0: [f64; 3], step: f64, max_iter: usize, tol: f64) -> NelderMeadOutcome
where
    F: Fn([f64; 3]) -> f64,
{
    const REFLECT: f64 = 1.0;
    const EXPAND: f64 = 2.0;
    const CONTRACT: f64 = 0.5;
    const SHRINK: f64 = 0.5;

    let combine = |base: [f64; 3], toward: [f64; 3], coef: f64| {
        [0, 1, 2].map(|k| base[k] + coef * (toward[k] - base[k]))
    };

    let mut simplex = [(x0, f(x0)); 4];
    for k in 0..3 {
        let mut p = x0;
        // step towards the centre of the cube
        p[k] -= step.copysign(p[k]);
        simplex[k + 1] = (p, f(p));
    }

    let mut history = Vec::new();
    let mut iterations = 0;
    let mut converged = false;
    loop {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        history.push((iterations, simplex[0].1));
        if simplex_diameter(&simplex) < tol {
            converged = true;
            break;
        }
        if iterations >= max_iter {
            break;
        }
        iterations += 1;

        let mut centroid = [0.0; 3];
        for (p, _) in &simplex[..3] {
            for k in 0..3 {
                centroid[k] += p[k] / 3.0;
            }
        }
        let worst = simplex[3];

        let reflected = combine(centroid, worst.0, -REFLECT);
        let f_reflected = f(reflected);
        if f_reflected < simplex[0].1 {
            let expanded = combine(centroid, worst.0, -EXPAND);
            let f_expanded = f(expanded);
            simplex[3] = if f_expanded < f_reflected {
                (expanded, f_expanded)
            } else {
                (reflected, f_reflected)
            };
            continue;
        }
        if f_reflected < simplex[2].1 {
            simplex[3] = (reflected, f_reflected);
            continue;
        }
        let (contracted, f_contracted) = if f_reflected < worst.1 {
            let p = combine(centroid, reflected, CONTRACT);
            (p, f(p))
        } else {
            let p = combine(centroid, worst.0, CONTRACT);
            (p, f(p))
        };
        if f_contracted < worst.1.min(f_reflected) {
            simplex[3] = (contracted, f_contracted);
            continue;
        }
        let best = simplex[0].0;
        for vertex in simplex.iter_mut().skip(1) {
            let p = combine(best, vertex.0, SHRINK);
            *vertex = (p, f(p));
        }
    }

    NelderMeadOutcome {
        x: simplex[0].0,
        fx: simplex[0].1,
        iterations,
        converged,
        history,
    }
}

/// Optimal parameter on side `start→end` for the path `u → X → w`, X on the
/// side's line: reflect `w` across the line and cut the straight segment.
/// Returns the unclamped parameter.
fn reflection_step(start: Point, end: Point, u: Point, w: Point) -> f64 {
    let mirrored = project_onto_line(w, start, end) * 2.0 - w;
    let du = orient2d(start, end, u);
    let dw = orient2d(start, end, mirrored);
    let crossing = u + (mirrored - u) * (du / (du - dw));
    let dir = end - start;
    (crossing - start).dot(dir) / dir.dot(dir)
}

/// Exact coordinate descent: each step places one vertex optimally on its side
/// with the other two fixed. One iteration is a sweep over the three sides.
///
/// Stops once a sweep lowers the perimeter by less than `tol · perimeter` and
/// moves no parameter by more than [`DESCENT_STEP_TOL`]; that sweep is
/// discarded, so a start that is already optimal yields a single history entry.
/// Near the optimum the perimeter is flat to rounding while the steps are still
/// exact, so a sweep may raise the computed perimeter by up to
/// [`ROUNDING_SLACK`] relative and is kept; such sweeps are left out of
/// `history`, which therefore stays non-increasing. A larger rise, up to
/// [`NOISE_FLOOR`], means the noise floor is reached: the sweep is discarded
/// and the descent reports convergence.
pub fn minimize_reflection_descent(
    t: &Triangle,
    start: InscribedConfig,
    max_iter: usize,
    tol: f64,
) -> Result<MinimizeResult> {
    t.require_acute()?;
    if !(tol >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tol must be nonnegative, got {tol}"
        )));
    }

    let mut params = start.as_array();
    let mut current = eval(t, params);
    let mut history = vec![(0, current)];
    let mut clamped_steps = 0;
    let mut iterations = 0;
    let mut converged = false;

    while iterations < max_iter {
        iterations += 1;
        let mut trial = params;
        let mut clamped_this_sweep = false;
        for (i, v) in Vertex::ALL.into_iter().enumerate() {
            let (s, e) = side(t, v);
            let pts = side_points(t, trial);
            let (u, w) = (pts[(i + 1) % 3], pts[(i + 2) % 3]);
            let raw = reflection_step(s, e, u, w);
            if !raw.is_finite() {
                clamped_steps += 1;
                clamped_this_sweep = true;
                continue;
            }
            let clamped = clamp_param(raw);
            if clamped != raw {
                clamped_steps += 1;
                clamped_this_sweep = true;
            }
            trial[i] = clamped;
        }
        let next = eval(t, trial);
        let max_step = (0..3)
            .map(|k| (trial[k] - params[k]).abs())
            .fold(0.0, f64::max);
        if next > current * (1.0 + ROUNDING_SLACK) {
            // Exact steps never raise the perimeter: a tiny rise is the noise floor.
            converged = next <= current * (1.0 + NOISE_FLOOR) && !clamped_this_sweep;
            break;
        }
        if current - next < tol * next && max_step <= DESCENT_STEP_TOL {
            // A stall that still needs clamping is not an interior optimum.
            converged = !clamped_this_sweep;
            break;
        }
        params = trial;
        current = next;
        let last = history.last().map_or(f64::INFINITY, |&(_, p)| p);
        if current <= last {
            history.push((iterations, current));
        }
    }

    Ok(MinimizeResult {
        config: InscribedConfig::from_array_unchecked(params),
        perimeter: current,
        iterations,
        converged,
        history,
        near_right: near_right(t),
        clamped_steps,
    })
}
