//! Numerical verification of the right-orthic-triangle characterization.
//!
//! For an acute triangle the orthic angle at the foot of the altitude from `X`
//! is `π − 2·∠X`, so the orthic triangle is right-angled exactly when the parent
//! has one angle of π/4, and the right angle sits at the foot of the altitude
//! dropped from that vertex. [`verdict`] checks a single triangle,
//! [`scan_angle_space`] sweeps the shape space, and [`proof_steps`] measures
//! every angle identity of the classical synthetic argument.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{angle_at, AngleTriple, Triangle, Vertex};

pub const DEFAULT_TOL_ANGLE: f64 = 1e-9;
pub const DEFAULT_BOUNDARY_BAND: f64 = 1e-6;
pub const DEFAULT_GRID_RESOLUTION: usize = 200;
pub const MIN_GRID_RESOLUTION: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TheoremVerdict {
    pub orthic_is_right: bool,
    /// Parent vertex whose altitude foot carries the right orthic angle.
    pub right_vertex: Option<Vertex>,
    pub has_quarter_pi: bool,
    pub quarter_pi_vertex: Option<Vertex>,
    pub quarter_pi_unique: bool,
    /// Vacuously true unless both sides of the equivalence hold.
    pub pairing_holds: bool,
    pub biconditional_holds: bool,
}

/// Evaluates both directions of the characterization on `t`.
///
/// The orthic angles are compared with π/2 at `tol_angle`; the parent angles
/// with π/4 at `tol_angle / 2`, since the orthic angle moves twice as fast.
pub fn verdict(t: &Triangle, tol_angle: f64) -> Result<TheoremVerdict> {
    let orthic = t.orthic()?;
    Ok(verdict_from_angles(&t.angles(), &orthic.angles, tol_angle))
}

fn verdict_from_angles(
    parent: &AngleTriple,
    orthic: &AngleTriple,
    tol_angle: f64,
) -> TheoremVerdict {
    let right = orthic.near(FRAC_PI_2, tol_angle);
    let quarter = parent.near(FRAC_PI_4, tol_angle / 2.0);

    let orthic_is_right = !right.is_empty();
    let has_quarter_pi = !quarter.is_empty();
    let quarter_pi_unique = quarter.len() == 1;
    let right_vertex = right.first().copied();
    let quarter_pi_vertex = quarter.first().copied();

    let parent_side = has_quarter_pi && quarter_pi_unique;
    let pairing_holds = !(orthic_is_right && parent_side) || right == quarter;
    TheoremVerdict {
        orthic_is_right,
        right_vertex,
        has_quarter_pi,
        quarter_pi_vertex,
        quarter_pi_unique,
        pairing_holds,
        biconditional_holds: orthic_is_right == parent_side,
    }
}

/// Residuals of the angle identities in the synthetic argument, measured from
/// coordinates. Labels: `A, B, C` are the triangle's vertices `a, b, c`;
/// `D`, `E`, `F` are the feet of the altitudes from `A`, `B`, `C`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProofStepReport {
    /// `|∠D + ∠E + ∠F − π|` in the orthic triangle.
    pub angle_sum_residual: f64,
    /// `|∠DFC − ∠CFE|`, `|∠FDA − ∠ADE|`, `|∠FEB − ∠BED|`.
    pub bisection_residuals: [f64; 3],
    /// `|∠CFE + ∠ADE − π/4|`; only expected to vanish when `∠E = π/2`.
    pub quarter_relation_residual: f64,
    /// Whether `∠E` is within the tolerance of π/2.
    pub quarter_relation_active: bool,
    /// `|∠B + ∠E + ∠BFE + ∠BDE − 2π|` over quadrilateral `BDEF`.
    pub quad_sum_residual: f64,
    /// `|∠BFE − π/2 − ∠CFE|`, `|∠BDE − π/2 − ∠ADE|`.
    pub decomposition_residuals: [f64; 2],
}

impl ProofStepReport {
    /// Largest of the residuals that must vanish for every acute triangle.
    pub fn max_unconditional(&self) -> f64 {
        self.bisection_residuals
            .iter()
            .chain(self.decomposition_residuals.iter())
            .copied()
            .fold(
                self.angle_sum_residual.max(self.quad_sum_residual),
                f64::max,
            )
    }
}

pub fn proof_steps(t: &Triangle) -> Result<ProofStepReport> {
    proof_steps_with(t, DEFAULT_TOL_ANGLE)
}

/// As [`proof_steps`]; `tol_angle` decides whether the π/4 relation is active.
pub fn proof_steps_with(t: &Triangle, tol_angle: f64) -> Result<ProofStepReport> {
    let orthic = t.orthic()?;
    let (a, b, c) = (t.a(), t.b(), t.c());
    let (d, e, f) = (orthic.foot_from_a, orthic.foot_from_b, orthic.foot_from_c);

    let angle_d = angle_at(d, e, f);
    let angle_e = angle_at(e, f, d);
    let angle_f = angle_at(f, d, e);

    let dfc = angle_at(f, d, c);
    let cfe = angle_at(f, c, e);
    let fda = angle_at(d, f, a);
    let ade = angle_at(d, a, e);
    let feb = angle_at(e, f, b);
    let bed = angle_at(e, b, d);

    let angle_b = angle_at(b, c, a);
    let bfe = angle_at(f, b, e);
    let bde = angle_at(d, b, e);

    Ok(ProofStepReport {
        angle_sum_residual: (angle_d + angle_e + angle_f - PI).abs(),
        bisection_residuals: [(dfc - cfe).abs(), (fda - ade).abs(), (feb - bed).abs()],
        quarter_relation_residual: (cfe + ade - FRAC_PI_4).abs(),
        quarter_relation_active: (angle_e - FRAC_PI_2).abs() <= tol_angle,
        quad_sum_residual: (angle_b + angle_e + bfe + bde - 2.0 * PI).abs(),
        decomposition_residuals: [(bfe - FRAC_PI_2 - cfe).abs(), (bde - FRAC_PI_2 - ade).abs()],
    })
}

/// `|incenter(orthic) − orthocenter| / diameter`.
pub fn incenter_orthocenter_check(t: &Triangle) -> Result<f64> {
    let orthic = t.orthic()?.triangle()?;
    Ok(orthic.incenter().distance(t.orthocenter()) / t.diameter())
}

#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample {
    pub angles: AngleTriple,
    pub verdict: TheoremVerdict,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanReport {
    pub grid_resolution: usize,
    pub tol_angle: f64,
    pub boundary_band: f64,
    /// Grid nodes describing an acute triangle.
    pub admissible_nodes: usize,
    /// Admissible nodes skipped for lying inside the boundary band.
    pub samples_skipped: usize,
    pub samples_tested: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Grid nodes `(i, j)` with `α = iπ/n`, `β = jπ/n` and all three angles in
/// `(0, π/2)`. Integer conditions keep the count exact.
pub fn admissible_nodes(n: usize) -> Vec<(usize, usize)> {
    let mut nodes = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if 2 * i < n && 2 * j < n && 2 * (i + j) > n {
                nodes.push((i, j));
            }
        }
    }
    nodes
}

enum NodeOutcome {
    Skipped,
    Tested(Option<Counterexample>),
}

fn evaluate_node(n: usize, (i, j): (usize, usize), tol_angle: f64, band: f64) -> NodeOutcome {
    let step = PI / n as f64;
    let t = match Triangle::from_angles(i as f64 * step, j as f64 * step) {
        Ok(t) => t,
        Err(_) => return NodeOutcome::Skipped,
    };
    let orthic = match t.orthic() {
        Ok(o) => o,
        Err(_) => return NodeOutcome::Skipped,
    };
    let parent = t.angles();
    if !parent.near(FRAC_PI_4, band).is_empty() || !orthic.angles.near(FRAC_PI_2, band).is_empty() {
        return NodeOutcome::Skipped;
    }
    let v = verdict_from_angles(&parent, &orthic.angles, tol_angle);
    let bad = !v.biconditional_holds || !v.pairing_holds;
    NodeOutcome::Tested(bad.then_some(Counterexample {
        angles: parent,
        verdict: v,
    }))
}

fn validate_scan(grid_resolution: usize, tol_angle: f64, boundary_band: f64) -> Result<()> {
    if grid_resolution < MIN_GRID_RESOLUTION {
        return Err(Error::InvalidArgument(format!(
            "grid resolution must be at least {MIN_GRID_RESOLUTION}, got {grid_resolution}"
        )));
    }
    if !(tol_angle > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tol_angle must be positive, got {tol_angle}"
        )));
    }
    if !(boundary_band > tol_angle) {
        return Err(Error::InvalidArgument(format!(
            "boundary band {boundary_band} must exceed tol_angle {tol_angle}"
        )));
    }
    Ok(())
}

/// Sweeps the acute part of the angle simplex on the unit circumradius. Nodes
/// whose parent angles are within `boundary_band` of π/4, or whose orthic
/// angles are within `boundary_band` of π/2, are skipped. Runs in parallel;
/// the report is identical to [`scan_angle_space_serial`].
pub fn scan_angle_space(
    grid_resolution: usize,
    tol_angle: f64,
    boundary_band: f64,
) -> Result<ScanReport> {
    validate_scan(grid_resolution, tol_angle, boundary_band)?;
    let nodes = admissible_nodes(grid_resolution);
    let outcomes: Vec<NodeOutcome> = nodes
        .par_iter()
        .map(|&node| evaluate_node(grid_resolution, node, tol_angle, boundary_band))
        .collect();
    Ok(assemble(
        grid_resolution,
        tol_angle,
        boundary_band,
        outcomes,
    ))
}

pub fn scan_angle_space_serial(
    grid_resolution: usize,
    tol_angle: f64,
    boundary_band: f64,
) -> Result<ScanReport> {
    validate_scan(grid_resolution, tol_angle, boundary_band)?;
    let outcomes = admissible_nodes(grid_resolution)
        .into_iter()
        .map(|node| evaluate_node(grid_resolution, node, tol_angle, boundary_band))
        .collect();
    Ok(assemble(
        grid_resolution,
        tol_angle,
        boundary_band,
        outcomes,
    ))
}

fn assemble(
    grid_resolution: usize,
    tol_angle: f64,
    boundary_band: f64,
    outcomes: Vec<NodeOutcome>,
) -> ScanReport {
    let admissible_nodes = outcomes.len();
    let mut samples_skipped = 0;
    let mut counterexamples = Vec::new();
    for outcome in outcomes {
        match outcome {
            NodeOutcome::Skipped => samples_skipped += 1,
            NodeOutcome::Tested(Some(c)) => counterexamples.push(c),
            NodeOutcome::Tested(None) => {}
        }
    }
    ScanReport {
        grid_resolution,
        tol_angle,
        boundary_band,
        admissible_nodes,
        samples_skipped,
        samples_tested: admissible_nodes - samples_skipped,
        counterexamples,
    }
}

/// Result of evaluating triangles with `β = π/4` exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct LocusReport {
    pub samples_tested: usize,
    pub right_count: usize,
    pub counterexamples: Vec<Counterexample>,
}

/// Forward direction without an exclusion band: `β = π/4` at vertex `b` and
/// `α` on `samples` interior points of `(π/4, π/2)`, the range that keeps the
/// triangle acute.
pub fn scan_quarter_pi_locus(samples: usize, tol_angle: f64) -> Result<LocusReport> {
    let step = FRAC_PI_4 / (samples + 1) as f64;
    let mut right_count = 0;
    let mut counterexamples = Vec::new();
    for k in 1..=samples {
        let t = Triangle::from_angles(FRAC_PI_4 + k as f64 * step, FRAC_PI_4)?;
        let v = verdict(&t, tol_angle)?;
        if v.orthic_is_right {
            right_count += 1;
        }
        let paired = v.right_vertex == Some(Vertex::B) && v.quarter_pi_vertex == Some(Vertex::B);
        if !v.orthic_is_right || !v.biconditional_holds || !v.pairing_holds || !paired {
            counterexamples.push(Counterexample {
                angles: t.angles(),
                verdict: v,
            });
        }
    }
    Ok(LocusReport {
        samples_tested: samples,
        right_count,
        counterexamples,
    })
}
