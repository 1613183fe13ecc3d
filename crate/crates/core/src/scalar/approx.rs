use std::cmp::Ordering;

use num::complex::Complex64;
use num::traits::ToPrimitive;

use super::{Rational, Scalar};
use crate::error::Error;

/// Double-precision backend on `num::Complex64`. Division by zero and
/// non-finite results signal an error rather than propagating NaN/Inf.
impl Scalar for Complex64 {
    fn omega() -> Self {
        Complex64::new(-0.5, 3f64.sqrt() / 2.0)
    }

    fn rho() -> Self {
        Complex64::new(0.5, 3f64.sqrt() / 2.0)
    }

    fn i() -> Self {
        Complex64::new(0.0, 1.0)
    }

    fn from_rational(r: &Rational) -> Self {
        let v = r.to_f64().unwrap_or_else(|| {
            r.numer().to_f64().unwrap_or(f64::INFINITY) / r.denom().to_f64().unwrap_or(f64::INFINITY)
        });
        Complex64::new(v, 0.0)
    }

    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn try_inv(&self) -> Result<Self, Error> {
        if self.re == 0.0 && self.im == 0.0 {
            return Err(Error::DivisionByZero);
        }
        let inv = 1.0 / self;
        if !inv.re.is_finite() || !inv.im.is_finite() {
            return Err(Error::DivisionByZero);
        }
        Ok(inv)
    }

    fn to_complex(&self) -> Complex64 {
        *self
    }

    fn eq_within(&self, other: &Self, tol: f64) -> bool {
        (self - other).norm() <= tol
    }

    fn im_sign(&self) -> Ordering {
        self.im.partial_cmp(&0.0).unwrap_or(Ordering::Equal)
    }

    fn cross_is_real(&self, spread: f64) -> bool {
        self.im.abs() <= 1e-9 * spread
    }
}
