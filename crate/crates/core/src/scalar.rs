//! Scalar abstractions.
//!
//! Two levels are used throughout the crate. [`Field`] is the ordered-field
//! interface shared by floating-point types and exact rationals; it is
//! enough for edge sums, path weights, perimeters and simplex pivoting.
//! [`Scalar`] is the floating-point scalar required by the geometric
//! solvers (`f32` or `f64`). Concrete `f64` aliases live at the crate root.

use num_traits::{Float, FromPrimitive, Num, Signed};
use std::fmt::{Debug, Display};

/// Ordered-field scalar. Implemented by `f32`, `f64` and
/// `num_rational::BigRational`.
pub trait Field: Num + Signed + PartialOrd + Clone + Debug {}

impl<T: Num + Signed + PartialOrd + Clone + Debug> Field for T {}

/// Floating-point scalar for the geometric solvers.
pub trait Scalar: Float + FromPrimitive + Field + Display + Default + 'static {
    /// Shorthand for lifting an `f64` constant into the scalar type.
    fn c(value: f64) -> Self {
        Self::from_f64(value).expect("constant not representable")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// The tolerance set threaded through solvers and reports.
///
/// `tie`, `grad` and `degenerate` are relative (to the value scale and to
/// the boundary diameter respectively); `angle`, `stability_margin` and
/// `semimetric_slack` are absolute.
#[derive(Clone, Copy, Debug)]
pub struct Tolerances<T> {
    /// relative band inside which functional values count as tied
    pub tie: T,
    /// angle tolerance in radians
    pub angle: T,
    /// gradient norm bound, scaled by the boundary diameter
    pub grad: T,
    /// edge degeneracy threshold, scaled by the boundary diameter
    pub degenerate: T,
    /// strictness margin for stability angles, radians
    pub stability_margin: T,
    /// absolute slack for semimetric validation
    pub semimetric_slack: T,
}

impl<T: Scalar> Default for Tolerances<T> {
    fn default() -> Self {
        Tolerances {
            tie: T::c(1e-9),
            angle: T::c(1e-6),
            grad: T::c(1e-10),
            degenerate: T::c(1e-9),
            stability_margin: T::c(1e-6),
            semimetric_slack: T::c(1e-12),
        }
    }
}
