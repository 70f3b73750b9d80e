//! Domain types: the ellipse, the grid, and the stepping state.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::scalar::GridScalar;

fn is_positive<S: GridScalar>(value: &S) -> bool {
    value.is_finite_value() && value.partial_cmp(&S::zero()) == Some(Ordering::Greater)
}

/// Rejected construction or misuse of a kernel state.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("semi-major axis a must be a positive finite number (got a={a})")]
    InvalidSemiMajor { a: String },
    #[error("semi-minor axis b must be a positive finite number (got b={b})")]
    InvalidSemiMinor { b: String },
    #[error(
        "the semi-major axis must exceed the semi-minor axis: a > b is required (got a={a}, b={b})"
    )]
    AxesOutOfOrder { a: String, b: String },
    #[error("grid step h must be a positive finite number (got h={h})")]
    InvalidStep { h: String },
    #[error("grid step h must not exceed the semi-minor axis b (got h={h}, b={b})")]
    StepExceedsMinorAxis { h: String, b: String },
    #[error("state is in region {found}, expected region {expected}")]
    WrongRegion { expected: Region, found: Region },
}

/// An origin-centered, axis-aligned ellipse `b²x² + a²y² = a²b²`.
///
/// The derivation of the stepping rules assumes `a > b`, so construction
/// rejects anything else rather than silently swapping axes.
#[derive(Debug, Clone, PartialEq)]
pub struct EllipseSpec<S: GridScalar> {
    a: S,
    b: S,
}

impl<S: GridScalar> EllipseSpec<S> {
    pub fn new(a: S, b: S) -> Result<Self, GeometryError> {
        if !is_positive(&a) {
            return Err(GeometryError::InvalidSemiMajor {
                a: a.to_decimal_string(),
            });
        }
        if !is_positive(&b) {
            return Err(GeometryError::InvalidSemiMinor {
                b: b.to_decimal_string(),
            });
        }
        if a.partial_cmp(&b) != Some(Ordering::Greater) {
            return Err(GeometryError::AxesOutOfOrder {
                a: a.to_decimal_string(),
                b: b.to_decimal_string(),
            });
        }
        Ok(Self { a, b })
    }

    /// Semi-major axis length.
    pub fn a(&self) -> &S {
        &self.a
    }

    /// Semi-minor axis length.
    pub fn b(&self) -> &S {
        &self.b
    }

    pub fn a_squared(&self) -> S {
        self.a.clone() * self.a.clone()
    }

    pub fn b_squared(&self) -> S {
        self.b.clone() * self.b.clone()
    }
}

/// Width of the sampling lattice. Must be positive and no wider than the
/// semi-minor axis, otherwise the very first midpoint would already sit
/// below the x-axis.
#[derive(Debug, Clone, PartialEq)]
pub struct GridStep<S: GridScalar> {
    h: S,
}

impl<S: GridScalar> GridStep<S> {
    pub fn new(h: S, spec: &EllipseSpec<S>) -> Result<Self, GeometryError> {
        if !is_positive(&h) {
            return Err(GeometryError::InvalidStep {
                h: h.to_decimal_string(),
            });
        }
        if h.partial_cmp(spec.b()) == Some(Ordering::Greater) {
            return Err(GeometryError::StepExceedsMinorAxis {
                h: h.to_decimal_string(),
                b: spec.b().to_decimal_string(),
            });
        }
        Ok(Self { h })
    }

    pub fn h(&self) -> &S {
        &self.h
    }
}

/// The two stepping regimes of the first quadrant, split where the tangent
/// slope magnitude passes one: region 1 advances x every step, region 2
/// descends y every step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    R1,
    R2,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::R1 => f.write_str("R1"),
            Region::R2 => f.write_str("R2"),
        }
    }
}

/// A lattice point of the first quadrant.
///
/// Coordinates are always derived from the integer indices by a single
/// multiplication — `x = i*h`, `y = b - j*h` — never by accumulating
/// increments, so they carry no stepping drift.
#[derive(Debug, Clone, PartialEq)]
pub struct GridPoint<S: GridScalar> {
    i: u64,
    j: u64,
    x: S,
    y: S,
}

impl<S: GridScalar> GridPoint<S> {
    pub fn at(i: u64, j: u64, spec: &EllipseSpec<S>, step: &GridStep<S>) -> Self {
        let x = S::from_u64(i) * step.h().clone();
        let y = spec.b().clone() - S::from_u64(j) * step.h().clone();
        Self { i, j, x, y }
    }

    /// x-index: `x = i*h`.
    pub fn i(&self) -> u64 {
        self.i
    }

    /// y-decrement index: `y = b - j*h`.
    pub fn j(&self) -> u64 {
        self.j
    }

    pub fn x(&self) -> &S {
        &self.x
    }

    pub fn y(&self) -> &S {
        &self.y
    }
}

/// One step of the decision recurrence: the current point together with the
/// parameter that decides the move away from it.
///
/// The parameter always equals the implicit function evaluated at the
/// region's candidate midpoint — `(x+h, y-h/2)` in region 1, `(x+h/2, y-h)`
/// in region 2 — up to the arithmetic mode's rounding.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionState<S: GridScalar> {
    pub point: GridPoint<S>,
    pub region: Region,
    pub p: S,
}
