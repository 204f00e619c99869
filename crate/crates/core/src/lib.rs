//! Exact arithmetic for the MacWilliams identity on Krawtchouk association
//! schemes.
//!
//! The four schemes covered here (Hamming, bilinear/Gabidulin rank, skew rank
//! and Hermitian rank) share one description in terms of a base `b` and a
//! constant `c`. Everything that follows from that description is computed
//! over arbitrary-precision rationals:
//!
//! - [`combinatorics`]: `b`-nary Gaussian coefficients and the beta/gamma
//!   products built from them.
//! - [`krawtchouk`]: the `b`-Krawtchouk eigenvalues, Delsarte's form of the
//!   same polynomials, and the scheme eigenmatrix.
//! - [`homogeneous`]: the `b`-product algebra on homogeneous bivariate
//!   polynomials and its two derivatives.
//! - [`macwilliams`]: the dual weight distribution computed two ways, the
//!   moment identities and the weight distribution of maximal codes.
//! - [`scheme`]: the catalogue of concrete schemes.
//! - [`oracle`]: brute-force finite-field ground truth.
//! - [`verify`]: oracle-backed verification suites shared by the CLI.

pub mod combinatorics;
pub mod error;
pub mod homogeneous;
pub mod krawtchouk;
pub mod macwilliams;
pub mod oracle;
pub mod scalar;
pub mod scheme;
pub mod verify;

pub use combinatorics::{beta, gamma, gauss, sigma, Base};
pub use error::{Error, Result};
pub use homogeneous::{ConstPoly, HomPoly};
pub use krawtchouk::{c_poly, check_recurrence, delsarte_p, eigenmatrix, Eigenmatrix};
pub use macwilliams::{
    invert_triangular, maximal_distribution, moment_b, moment_binv, transform_eigen,
    transform_functional, MomentPair, TransformInput, WeightDistribution,
};
pub use scalar::ExactScalar;
pub use scheme::{
    hermitian_recurrence_equiv, make_scheme, omega_enumerator, xi, SchemeKind, SchemeParams,
    SchemeSpec,
};
