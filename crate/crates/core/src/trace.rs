//! Drives the two-region loop over the first quadrant and expands the
//! result to the full ellipse by symmetry.

use crate::ellipse::{DecisionState, EllipseSpec, GridPoint, GridStep, Region};
use crate::kernel::{
    initial_p1, initial_p2, region_transition, step_r1, step_r2, transition_lhs, transition_rhs,
};
use crate::scalar::GridScalar;

/// How the region-2 seed point is chosen once region 1 has finished.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum R2SeedRule {
    /// Seed region 2 at the last point region 1 emitted.
    #[default]
    LastR1Point,
    /// Lower the handoff point by one extra grid step before seeding.
    ///
    /// An alternate convention found in hand-worked step tables at
    /// fractional grid widths; provided so such tables can be reproduced
    /// row for row. The extra point is still emitted so the staircase
    /// stays gap-free.
    DropOneStep,
}

/// Knobs for [`trace_quadrant_with`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TraceOptions {
    pub r2_seed: R2SeedRule,
}

/// One row of a step table: the state before the move, the state after,
/// and the two transition-test quantities at the new point.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceStep<S: GridScalar> {
    pub before: GridPoint<S>,
    pub region: Region,
    pub p_before: S,
    pub after: GridPoint<S>,
    pub p_after: S,
    /// `2b²x` at the after-point.
    pub lhs: S,
    /// `2a²y` at the after-point.
    pub rhs: S,
}

/// The full first-quadrant walk: every decision step plus the emitted
/// staircase of lattice points.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadrantTrace<S: GridScalar> {
    spec: EllipseSpec<S>,
    step: GridStep<S>,
    options: TraceOptions,
    steps: Vec<TraceStep<S>>,
    /// Index of the first step whose after-point passes the region
    /// transition test; `None` only when the walk had to stop early (see
    /// the guard in the region-1 loop).
    transition_index: Option<usize>,
    points: Vec<GridPoint<S>>,
    /// `j` index of the x-axis row, when `b` is a whole number of grid
    /// steps; lets axis handling work on indices instead of floats.
    axis_j: Option<u64>,
}

impl<S: GridScalar> QuadrantTrace<S> {
    pub fn spec(&self) -> &EllipseSpec<S> {
        &self.spec
    }

    pub fn step(&self) -> &GridStep<S> {
        &self.step
    }

    pub fn options(&self) -> TraceOptions {
        self.options
    }

    pub fn steps(&self) -> &[TraceStep<S>] {
        &self.steps
    }

    pub fn transition_index(&self) -> Option<usize> {
        self.transition_index
    }

    /// The emitted staircase: the start point `(0, b)` followed by every
    /// after-point (plus the lowered seed under
    /// [`R2SeedRule::DropOneStep`]).
    pub fn points(&self) -> &[GridPoint<S>] {
        &self.points
    }

    pub fn x_axis_j(&self) -> Option<u64> {
        self.axis_j
    }

    /// Step counts per region; the total is their sum.
    pub fn iteration_count(&self) -> (usize, usize) {
        let r1 = match self.transition_index {
            Some(t) => t + 1,
            None => self.steps.len(),
        };
        (r1, self.steps.len() - r1)
    }
}

/// Walks the first quadrant with default options.
pub fn trace_quadrant<S: GridScalar>(
    spec: &EllipseSpec<S>,
    step: &GridStep<S>,
) -> QuadrantTrace<S> {
    trace_quadrant_with(spec, step, TraceOptions::default())
}

/// Walks the first quadrant: region-1 steps until the transition test
/// passes at an emitted point, reseeds, then region-2 steps down to the
/// lowest non-negative grid row (`y = 0` when `b` is a whole number of
/// steps).
pub fn trace_quadrant_with<S: GridScalar>(
    spec: &EllipseSpec<S>,
    step: &GridStep<S>,
    options: TraceOptions,
) -> QuadrantTrace<S> {
    let axis_row = S::whole_steps(spec.b(), step.h());
    let fuse = ceil_steps(spec.a(), step.h()) + ceil_steps(spec.b(), step.h()) + 2;

    let mut steps: Vec<TraceStep<S>> = Vec::new();
    let mut points: Vec<GridPoint<S>> = Vec::new();

    let mut state = initial_p1(spec, step);
    points.push(state.point.clone());

    while !region_transition(spec, &state.point) {
        // Guard for extreme eccentricity (a/b far beyond the regime the
        // update rules are derived for): never descend below the x-axis.
        let descends = !state.p.is_negative_value();
        if descends && state.point.j() + 1 > axis_row {
            break;
        }
        let next = step_r1(spec, step, &state).expect("state is in region 1");
        steps.push(make_step(spec, &state, &next));
        points.push(next.point.clone());
        state = next;
        assert!(
            steps.len() as u64 <= fuse,
            "quadrant walk exceeded its termination bound"
        );
    }

    let transition_index = if region_transition(spec, &state.point) {
        debug_assert!(!steps.is_empty());
        Some(steps.len() - 1)
    } else {
        None
    };

    if transition_index.is_some() {
        let mut seed_point = state.point.clone();
        if options.r2_seed == R2SeedRule::DropOneStep && seed_point.j() < axis_row {
            seed_point = GridPoint::at(seed_point.i(), seed_point.j() + 1, spec, step);
            points.push(seed_point.clone());
        }
        let mut state = initial_p2(spec, step, seed_point);
        while state.point.j() < axis_row {
            let next = step_r2(spec, step, &state).expect("state is in region 2");
            steps.push(make_step(spec, &state, &next));
            points.push(next.point.clone());
            state = next;
            assert!(
                steps.len() as u64 <= fuse,
                "quadrant walk exceeded its termination bound"
            );
        }
    }

    let hits_axis = {
        let lowest = spec.b().clone() - S::from_u64(axis_row) * step.h().clone();
        lowest.grid_cmp(&S::zero()) == std::cmp::Ordering::Equal
    };

    QuadrantTrace {
        spec: spec.clone(),
        step: step.clone(),
        options,
        steps,
        transition_index,
        points,
        axis_j: hits_axis.then_some(axis_row),
    }
}

fn make_step<S: GridScalar>(
    spec: &EllipseSpec<S>,
    before: &DecisionState<S>,
    after: &DecisionState<S>,
) -> TraceStep<S> {
    TraceStep {
        before: before.point.clone(),
        region: before.region,
        p_before: before.p.clone(),
        after: after.point.clone(),
        p_after: after.p.clone(),
        lhs: transition_lhs(spec, &after.point),
        rhs: transition_rhs(spec, &after.point),
    }
}

fn ceil_steps<S: GridScalar>(len: &S, step: &S) -> u64 {
    let whole = S::whole_steps(len, step);
    let covered = S::from_u64(whole) * step.clone();
    if covered.grid_cmp(len) == std::cmp::Ordering::Equal {
        whole
    } else {
        whole + 1
    }
}

/// How reflected copies that land on an axis are treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DuplicatePolicy {
    /// Points on an axis appear exactly once in the output.
    AxisDedup,
    /// Emit all four images unconditionally.
    KeepAll,
}

/// All four quadrants' worth of points, produced by sign reflection of a
/// first-quadrant trace.
#[derive(Debug, Clone, PartialEq)]
pub struct EllipsePointSet<S: GridScalar> {
    points: Vec<(S, S)>,
    policy: DuplicatePolicy,
}

impl<S: GridScalar> EllipsePointSet<S> {
    /// Reflects first-quadrant lattice points into all four quadrants.
    /// Axis membership is decided on the integer indices (`i == 0` for the
    /// y-axis, `j == axis_j` for the x-axis), never on float equality.
    pub fn from_quadrant_points(
        points: &[GridPoint<S>],
        axis_j: Option<u64>,
        policy: DuplicatePolicy,
    ) -> Self {
        let mut out = Vec::new();
        for point in points {
            let on_y_axis = point.i() == 0;
            let on_x_axis = axis_j == Some(point.j());
            let keep_all = policy == DuplicatePolicy::KeepAll;
            let x = point.x().clone();
            let y = point.y().clone();
            out.push((x.clone(), y.clone()));
            if keep_all || !on_x_axis {
                out.push((x.clone(), -y.clone()));
            }
            if keep_all || (!on_x_axis && !on_y_axis) {
                out.push((-x.clone(), -y.clone()));
            }
            if keep_all || !on_y_axis {
                out.push((-x, y));
            }
        }
        Self {
            points: out,
            policy,
        }
    }

    pub fn points(&self) -> &[(S, S)] {
        &self.points
    }

    pub fn policy(&self) -> DuplicatePolicy {
        self.policy
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// True when every sign image of every member is also a member, which
    /// makes a second round of reflection the identity on the set.
    pub fn is_closed_under_reflection(&self) -> bool {
        self.points.iter().all(|(x, y)| {
            let images = [
                (x.clone(), -y.clone()),
                (-x.clone(), -y.clone()),
                (-x.clone(), y.clone()),
            ];
            images.iter().all(|img| self.points.contains(img))
        })
    }
}

/// Expands a first-quadrant trace to the full ellipse, with axis points
/// appearing exactly once each.
pub fn reflect_four_quadrants<S: GridScalar>(trace: &QuadrantTrace<S>) -> EllipsePointSet<S> {
    EllipsePointSet::from_quadrant_points(
        trace.points(),
        trace.x_axis_j(),
        DuplicatePolicy::AxisDedup,
    )
}
