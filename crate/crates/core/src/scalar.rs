//! Scalar traits shared by the linear-algebra, series and polynomial code.
//!
//! Everything that only needs ring operations (series products, forward
//! substitution, Hessenberg determinants, chain sums) is written against
//! [`Scalar`]. Interpolation and Gaussian elimination additionally need exact
//! division and are written against [`Field`].

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// A commutative ring element with cheap cloning semantics for the purposes
/// of this crate.
pub trait Scalar: Num + Clone + Neg<Output = Self> + Debug + Display {}

impl<T> Scalar for T where T: Num + Clone + Neg<Output = T> + Debug + Display {}

/// A [`Scalar`] whose division is the field inverse.
///
/// Implemented for exact rationals and, for completeness, the IEEE floats.
/// Integer types are deliberately left out: their `Div` truncates.
pub trait Field: Scalar {}

impl<T> Field for Ratio<T> where T: Clone + Integer + Signed + Debug + Display {}
impl Field for f32 {}
impl Field for f64 {}
