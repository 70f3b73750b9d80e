//! The decision-parameter kernel.
//!
//! Scan conversion picks the next lattice point by evaluating the ellipse's
//! implicit function at the midpoint between the two candidate moves; the
//! sign decides without any square roots. The midpoint value itself is
//! carried forward incrementally, so each step costs a few multiplications.
//!
//! All functions here are pure; the loop that drives them lives in
//! [`crate::trace`].

use std::cmp::Ordering;

use crate::ellipse::{DecisionState, EllipseSpec, GeometryError, GridPoint, GridStep, Region};
use crate::scalar::GridScalar;

/// Evaluates `f(x, y) = b²x² + a²y² - a²b²`.
///
/// Negative strictly inside the ellipse, zero on it, positive strictly
/// outside. Total over finite inputs.
pub fn eval_implicit<S: GridScalar>(spec: &EllipseSpec<S>, x: &S, y: &S) -> S {
    let a2 = spec.a_squared();
    let b2 = spec.b_squared();
    b2.clone() * x.clone() * x.clone() + a2.clone() * y.clone() * y.clone() - a2 * b2
}

/// Seeds region 1 at the topmost point `(0, b)`.
///
/// The parameter is `(4b² + a²)h²/4 - a²bh`, the implicit value at the
/// first midpoint `(h, b - h/2)`.
pub fn initial_p1<S: GridScalar>(spec: &EllipseSpec<S>, step: &GridStep<S>) -> DecisionState<S> {
    let h = step.h();
    let a2 = spec.a_squared();
    let b2 = spec.b_squared();
    let four_b2_plus_a2 = S::from_u64(4) * b2 + a2.clone();
    let p =
        (four_b2_plus_a2 * h.clone() * h.clone()).half().half() - a2 * spec.b().clone() * h.clone();
    DecisionState {
        point: GridPoint::at(0, 0, spec, step),
        region: Region::R1,
        p,
    }
}

/// Advances one region-1 step: x always moves right by `h`; y drops by `h`
/// exactly when the parameter is non-negative.
pub fn step_r1<S: GridScalar>(
    spec: &EllipseSpec<S>,
    step: &GridStep<S>,
    state: &DecisionState<S>,
) -> Result<DecisionState<S>, GeometryError> {
    if state.region != Region::R1 {
        return Err(GeometryError::WrongRegion {
            expected: Region::R1,
            found: state.region,
        });
    }
    let h = step.h();
    let b2 = spec.b_squared();
    let descend = !state.p.is_negative_value();

    let next = if descend {
        GridPoint::at(state.point.i() + 1, state.point.j() + 1, spec, step)
    } else {
        GridPoint::at(state.point.i() + 1, state.point.j(), spec, step)
    };

    // p' = p + b²h² + 2b²h(x_k + h) [- 2a²h(y_k - h) when descending];
    // x_k + h and y_k - h are exactly the next point's coordinates.
    let mut p = state.p.clone()
        + b2.clone() * h.clone() * h.clone()
        + S::from_u64(2) * b2 * h.clone() * next.x().clone();
    if descend {
        p = p - S::from_u64(2) * spec.a_squared() * h.clone() * next.y().clone();
    }

    Ok(DecisionState {
        point: next,
        region: Region::R1,
        p,
    })
}

/// Seeds region 2 at the handoff point by evaluating the implicit function
/// at the first region-2 midpoint `(x + h/2, y - h)` directly.
pub fn initial_p2<S: GridScalar>(
    spec: &EllipseSpec<S>,
    step: &GridStep<S>,
    point: GridPoint<S>,
) -> DecisionState<S> {
    let x_mid = point.x().clone() + step.h().half();
    let y_mid = point.y().clone() - step.h().clone();
    let p = eval_implicit(spec, &x_mid, &y_mid);
    DecisionState {
        point,
        region: Region::R2,
        p,
    }
}

/// Advances one region-2 step: y always drops by `h`; x moves right by `h`
/// exactly when the parameter is negative.
pub fn step_r2<S: GridScalar>(
    spec: &EllipseSpec<S>,
    step: &GridStep<S>,
    state: &DecisionState<S>,
) -> Result<DecisionState<S>, GeometryError> {
    if state.region != Region::R2 {
        return Err(GeometryError::WrongRegion {
            expected: Region::R2,
            found: state.region,
        });
    }
    let h = step.h();
    let a2 = spec.a_squared();
    let advance = state.p.is_negative_value();

    let next = if advance {
        GridPoint::at(state.point.i() + 1, state.point.j() + 1, spec, step)
    } else {
        GridPoint::at(state.point.i(), state.point.j() + 1, spec, step)
    };

    // p' = p + a²h² - 2a²h(y_k - h) [+ b²h² + 2b²h(x_k + h/2) when advancing]
    let mut p = state.p.clone() + a2.clone() * h.clone() * h.clone()
        - S::from_u64(2) * a2 * h.clone() * next.y().clone();
    if advance {
        let b2 = spec.b_squared();
        let x_mid = state.point.x().clone() + h.half();
        p = p + b2.clone() * h.clone() * h.clone() + S::from_u64(2) * b2 * h.clone() * x_mid;
    }

    Ok(DecisionState {
        point: next,
        region: Region::R2,
        p,
    })
}

/// True once the curve's tangent slope magnitude has passed one at `point`,
/// i.e. when `2b²x > 2a²y` strictly. Equality keeps region 1 stepping.
///
/// Floats compare through the grid snap width so that an exact-arithmetic
/// tie cannot flip the branch on rounding noise.
pub fn region_transition<S: GridScalar>(spec: &EllipseSpec<S>, point: &GridPoint<S>) -> bool {
    let lhs = transition_lhs(spec, point);
    let rhs = transition_rhs(spec, point);
    lhs.grid_cmp(&rhs) == Ordering::Greater
}

/// `2b²x`, the left side of the transition comparison.
pub fn transition_lhs<S: GridScalar>(spec: &EllipseSpec<S>, point: &GridPoint<S>) -> S {
    S::from_u64(2) * spec.b_squared() * point.x().clone()
}

/// `2a²y`, the right side of the transition comparison.
pub fn transition_rhs<S: GridScalar>(spec: &EllipseSpec<S>, point: &GridPoint<S>) -> S {
    S::from_u64(2) * spec.a_squared() * point.y().clone()
}

/// The midpoint whose implicit value a state's parameter must equal:
/// `(x+h, y-h/2)` in region 1, `(x+h/2, y-h)` in region 2.
pub fn decision_midpoint<S: GridScalar>(step: &GridStep<S>, state: &DecisionState<S>) -> (S, S) {
    let h = step.h();
    match state.region {
        Region::R1 => (
            state.point.x().clone() + h.clone(),
            state.point.y().clone() - h.half(),
        ),
        Region::R2 => (
            state.point.x().clone() + h.half(),
            state.point.y().clone() - h.clone(),
        ),
    }
}
