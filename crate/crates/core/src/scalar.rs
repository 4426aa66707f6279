//! Floating-point scalar abstraction shared by the spectral code.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Real scalar type the spectral routines are generic over.
///
/// Implemented for `f32` and `f64`. Constants are written as `f64` literals and
/// narrowed with [`Scalar::lit`].
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Default + Sum + Send + Sync + 'static
{
    /// Narrows an `f64` constant into this type.
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("finite f64 constant representable")
    }

    fn from_usize_lossy(v: usize) -> Self {
        Self::from_usize(v).expect("usize representable")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// `max(requested, factor * epsilon)`: a tolerance that is meaningful for
    /// the precision of `Self`.
    fn tolerance(requested: f64, factor: f64) -> Self {
        let floor = Self::epsilon() * Self::lit(factor);
        let req = Self::lit(requested);
        if req > floor {
            req
        } else {
            floor
        }
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
