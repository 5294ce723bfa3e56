//! Exact enumeration and identity checking for self-complementary plane
//! partitions.
//!
//! The crate covers three layers:
//!
//! * combinatorial objects: [`Partition`], [`SemistandardTableau`],
//!   [`PlanePartitionArray`] and the gapped arrays used for the
//!   middle-line enumerations;
//! * closed forms: MacMahon's box product, the self-complementary counts,
//!   the middle-line and signed enumerations, the hook-content
//!   specialization of rectangular Schur polynomials and the bordered
//!   binomial Pfaffians;
//! * verifiers that compare every closed form against a brute-force
//!   enumeration or an exact polynomial expansion and produce a
//!   [`VerificationReport`].
//!
//! Polynomials, matrices and Pfaffians are generic over the scalar type
//! (see [`scalar`]); the aliases below fix the exact instantiations used
//! throughout the verifiers.

pub mod budget;
pub mod error;
pub mod middle_line;
pub mod partitions;
pub mod pfaffian;
pub mod plane_partition;
pub mod polynomial;
pub mod product;
pub mod scalar;
pub mod schur;
pub mod scpp;
pub mod tableau;
pub mod verify;

pub use budget::Budget;
pub use error::{Error, Result};
pub use middle_line::{GappedArray, MiddleLine, MiddleLineCase};
pub use partitions::Partition;
pub use pfaffian::{BorderedCase, SkewSymmetricMatrix};
pub use plane_partition::{PlanePartitionArray, SignedCount};
pub use polynomial::{MultivariatePolynomial, UnivariatePolynomial};
pub use product::BoxDims;
pub use scalar::{Field, Ring};
pub use tableau::SemistandardTableau;
pub use verify::{Method, VerificationReport};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Exact rational scalar.
pub type Rational = BigRational;
/// Polynomial in several variables with big-integer coefficients.
pub type IntPoly = MultivariatePolynomial<BigInt>;
/// Polynomial in several variables with rational coefficients.
pub type RationalPoly = MultivariatePolynomial<BigRational>;
/// Polynomial in a single formal variable `q` with big-integer coefficients.
pub type QPoly = UnivariatePolynomial<BigInt>;
/// Skew-symmetric matrix over the rationals.
pub type RationalSkewMatrix = SkewSymmetricMatrix<BigRational>;
/// Skew-symmetric matrix in `f64`, for quick numerical experiments only.
pub type FloatSkewMatrix = SkewSymmetricMatrix<f64>;
