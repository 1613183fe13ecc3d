//! Scalar backends: exact Q(zeta_12) arithmetic and double-precision complex.

mod approx;
mod cyc12;

pub use cyc12::Cyc12;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::complex::Complex64;
use num::traits::{One, Zero};

use crate::error::Error;

/// Exact rational with arbitrary-precision integer parts.
pub type Rational = num::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Residue class mod 3, the index set of triangle vertices and median labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mod3(u8);

impl Mod3 {
    pub const ZERO: Mod3 = Mod3(0);
    pub const ONE: Mod3 = Mod3(1);
    pub const TWO: Mod3 = Mod3(2);

    pub fn new(k: i64) -> Self {
        Mod3(k.rem_euclid(3) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn all() -> [Mod3; 3] {
        [Mod3(0), Mod3(1), Mod3(2)]
    }
}

impl Add for Mod3 {
    type Output = Mod3;
    fn add(self, rhs: Mod3) -> Mod3 {
        Mod3((self.0 + rhs.0) % 3)
    }
}

impl Sub for Mod3 {
    type Output = Mod3;
    fn sub(self, rhs: Mod3) -> Mod3 {
        Mod3((3 + self.0 - rhs.0) % 3)
    }
}

impl Neg for Mod3 {
    type Output = Mod3;
    fn neg(self) -> Mod3 {
        Mod3((3 - self.0) % 3)
    }
}

impl fmt::Display for Mod3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Shared contract of the two scalar backends.
///
/// `conj` is an involutive ring automorphism with `conj(zeta) = zeta^-1`;
/// division is partial and signals [`Error::DivisionByZero`] instead of
/// producing a sentinel. [`Scalar::to_complex`] is a ring homomorphism into
/// `Complex64` up to 1e-12 relative error.
pub trait Scalar:
    Sized
    + Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    /// Primitive cube root of unity `e^{2 pi i/3}`.
    fn omega() -> Self;
    /// Primitive sixth root of unity `e^{2 pi i/6} = 1 + omega`.
    fn rho() -> Self;
    /// Imaginary unit.
    fn i() -> Self;

    fn from_rational(r: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&rat(n, 1))
    }

    /// `omega^k` for a residue class `k`.
    fn omega_pow(k: Mod3) -> Self {
        match k.value() {
            0 => Self::one(),
            1 => Self::omega(),
            _ => Self::omega() * Self::omega(),
        }
    }

    /// Complex conjugation, `zeta -> zeta^-1`.
    fn conj(&self) -> Self;

    fn try_inv(&self) -> Result<Self, Error>;

    fn try_div(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(self.clone() * rhs.try_inv()?)
    }

    /// Numeric image in double precision.
    fn to_complex(&self) -> Complex64;

    /// Backend equality: exact for the exact backend, within `tol` in the
    /// double-precision backend.
    fn eq_within(&self, other: &Self, tol: f64) -> bool;

    /// Sign of the imaginary part; exact in the exact backend.
    fn im_sign(&self) -> Ordering;

    /// Collinearity test for a cross-product value at the given vertex
    /// spread. The exact backend decides by the exact sign of the imaginary
    /// part; the double-precision backend uses tolerance `1e-9 * spread`.
    fn cross_is_real(&self, spread: f64) -> bool;
}

/// Exact sign of `a + b*sqrt(3)` for rational `a`, `b`.
pub(crate) fn sqrt3_sign(a: &Rational, b: &Rational) -> Ordering {
    let sa = a.cmp(&Rational::zero());
    let sb = b.cmp(&Rational::zero());
    match (sa, sb) {
        (Ordering::Equal, _) => sb,
        (_, Ordering::Equal) => sa,
        _ if sa == sb => sa,
        _ => {
            // Opposite signs: compare a^2 against 3 b^2. Equality would force
            // sqrt(3) rational, so it cannot occur for nonzero a, b.
            let three = rat(3, 1);
            if a * a > &three * b * b {
                sa
            } else {
                sb
            }
        }
    }
}
