//! Exact and numeric engine for circulant triangle operators.
//!
//! A triangle is an ordered triple of complex vertices. The crate implements
//! the monoid of centroid-preserving circulant operators `S[eta, eta']` acting
//! on such triples, the 18 generalized median operators `M^{wx/yz}[eta, eta']`,
//! the finite Fourier transform of triples with the shape function on the
//! projective line, and periodic operator families that move the three
//! vertices along a single closed tracing orbit (Steiner ellipse, figure
//! eight).
//!
//! All core math is generic over a [`Scalar`] backend. Two backends ship:
//!
//! * [`Cyc12`] — exact arithmetic in the 12th cyclotomic field, the smallest
//!   field containing both `omega = e^{2 pi i/3}` and `i`;
//! * `Complex64` — double precision, used for sampling orbits and metric
//!   checks.

pub mod error;
pub mod median;
pub mod operator;
pub mod orbit;
pub mod parse;
pub mod report;
pub mod scalar;
pub mod shape;
pub mod triangle;

pub use error::Error;
pub use scalar::{Cyc12, Rational, Scalar};

pub type Complex64 = num::complex::Complex64;

/// Exact triangle triple over Q(zeta_12).
pub type ExactTriple = triangle::TriangleTriple<Cyc12>;
/// Double-precision triangle triple.
pub type ApproxTriple = triangle::TriangleTriple<Complex64>;
/// Exact circulant operator.
pub type ExactOp = operator::CircOp<Cyc12>;
/// Double-precision circulant operator.
pub type ApproxOp = operator::CircOp<Complex64>;

pub type Result<T> = std::result::Result<T, Error>;
