//! Exact enumeration of Gessel walks: lattice walks in the quarter plane
//! with steps `E = (1,0)`, `W = (-1,0)`, `NE = (1,1)` and `SW = (-1,-1)`.
//!
//! `F(m; n1, n2)` is computed by several independent routes that can be
//! checked against one another:
//!
//! * [`walks`]: dynamic programming over the step recurrence (the oracle),
//!   plus the closed forms for shortest walks.
//! * [`arith`]: Pochhammer closed forms such as
//!   `F(2n; 0, 0) = 16^n (1/2)_n (5/6)_n / ((2)_n (5/3)_n)`.
//! * [`system`]: the unit lower-triangular system for the boundary values,
//!   solved by forward substitution, by Hessenberg determinants, and by
//!   explicit chain sums for the inverse.
//! * [`series`]: truncated power series checks of the kernel functional
//!   equation and of the identity obtained by substituting the kernel root.
//! * [`lab`]: exact interpolation of the polynomial families in the
//!   conjectured hypergeometric ansatzes.
//!
//! The linear algebra, series and polynomial types are generic over
//! [`Scalar`] / [`Field`]; the aliases below fix them to exact integers and
//! rationals.

pub mod arith;
pub mod error;
pub mod lab;
pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod series;
pub mod system;
pub mod walks;

pub use error::{Error, Result};
pub use scalar::{Field, Scalar};

/// Arbitrary-precision integer.
pub type ExactInt = num_bigint::BigInt;
/// Arbitrary-precision rational, always in lowest terms.
pub type ExactRat = num_rational::BigRational;

pub type Series = series::TruncSeries3<ExactInt>;
pub type Hessenberg = linalg::HessenbergMatrix<ExactInt>;
pub type RatPoly = poly::Poly<ExactRat>;

pub use arith::{binom_general, catalan, conjectured_value, gessel_closed_form, pochhammer, ClosedForm};
pub use lab::{fit_family, verify_family_claims, verify_gessel, verify_recurrence_g, Family, PolyFit};
pub use series::{build_g, build_h, verify_h_equation, verify_kernel_equation, verify_root_identity, x_of_yz};
pub use system::{
    coefficient_c, gessel_via_determinant, hessenberg_for, solve_forward, universal_sequence, SystemIndexer,
    TriSystem,
};
pub use walks::{build_f_matrix, count_walks, reachable, shortest_walk, FMatrix, WalkTable};
