use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::complex::Complex64;
use num::traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use super::{rat, sqrt3_sign, Rational, Scalar};
use crate::error::Error;

/// Element of Q(zeta_12) on the power basis `{1, zeta, zeta^2, zeta^3}` with
/// `zeta = e^{2 pi i/12}`, reduced via the minimal polynomial
/// `zeta^4 = zeta^2 - 1`.
///
/// The basis carries all constants of interest: `i = zeta^3`,
/// `rho = zeta^2`, `omega = zeta^2 - 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct Cyc12 {
    c: [Rational; 4],
}

impl Cyc12 {
    pub fn new(c0: Rational, c1: Rational, c2: Rational, c3: Rational) -> Self {
        Cyc12 {
            c: [c0, c1, c2, c3],
        }
    }

    /// The basis element zeta itself.
    pub fn zeta() -> Self {
        Cyc12::new(
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
        )
    }

    pub fn from_int(n: i64) -> Self {
        Cyc12::from_rational(&rat(n, 1))
    }

    /// Gaussian-integer style constructor `re + im*i` from rationals.
    pub fn from_re_im(re: Rational, im: Rational) -> Self {
        Cyc12::new(re, Rational::zero(), Rational::zero(), im)
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.c[k]
    }

    pub fn is_rational(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.c[0])
        } else {
            None
        }
    }

    /// Real part as an exact element of the field.
    pub fn re(&self) -> Cyc12 {
        // (z + conj z) / 2
        let half = Cyc12::from_rational(&rat(1, 2));
        (self.clone() + Scalar::conj(self)) * half
    }

    /// Imaginary part as an exact (real) element of the field.
    pub fn im(&self) -> Cyc12 {
        // (z - conj z) / (2i) = (z - conj z) * (-i/2)
        let minus_half_i = Cyc12::new(
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            rat(-1, 2),
        );
        (self.clone() - Scalar::conj(self)) * minus_half_i
    }

    /// A real element equals `a + b*sqrt(3)`; returns `(a, b)`.
    /// `None` when the element is not real.
    pub fn as_real_sqrt3(&self) -> Option<(Rational, Rational)> {
        if !self.c[2].is_zero() || &self.c[1] + &self.c[3] + &self.c[3] != Rational::zero() {
            return None;
        }
        Some((self.c[0].clone(), &self.c[1] / rat(2, 1)))
    }

    /// Exact sign of a real element; `None` when not real.
    pub fn real_sign(&self) -> Option<Ordering> {
        self.as_real_sqrt3().map(|(a, b)| sqrt3_sign(&a, &b))
    }

    pub fn pow(&self, n: u32) -> Cyc12 {
        let mut acc = Cyc12::one();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }

    /// Random element with single-digit rational coordinates; used by the
    /// seeded verification suites.
    pub fn random_small<R: Rng>(rng: &mut R) -> Self {
        let coord = |rng: &mut R| rat(rng.gen_range(-9..=9), rng.gen_range(1..=9));
        Cyc12::new(coord(rng), coord(rng), coord(rng), coord(rng))
    }

    /// Random small rational embedded in the field.
    pub fn random_rational<R: Rng>(rng: &mut R) -> Self {
        Cyc12::from_rational(&rat(rng.gen_range(-9..=9), rng.gen_range(1..=9)))
    }
}

impl Add for Cyc12 {
    type Output = Cyc12;
    fn add(self, rhs: Cyc12) -> Cyc12 {
        let [a0, a1, a2, a3] = self.c;
        let [b0, b1, b2, b3] = rhs.c;
        Cyc12::new(a0 + b0, a1 + b1, a2 + b2, a3 + b3)
    }
}

impl Sub for Cyc12 {
    type Output = Cyc12;
    fn sub(self, rhs: Cyc12) -> Cyc12 {
        self + (-rhs)
    }
}

impl Neg for Cyc12 {
    type Output = Cyc12;
    fn neg(self) -> Cyc12 {
        let [a0, a1, a2, a3] = self.c;
        Cyc12::new(-a0, -a1, -a2, -a3)
    }
}

impl Mul for Cyc12 {
    type Output = Cyc12;
    fn mul(self, rhs: Cyc12) -> Cyc12 {
        // Convolve to degree 6, then fold down with zeta^4 = zeta^2 - 1,
        // zeta^5 = zeta^3 - zeta, zeta^6 = -1.
        let mut p: [Rational; 7] = Default::default();
        for (j, aj) in self.c.iter().enumerate() {
            if aj.is_zero() {
                continue;
            }
            for (k, bk) in rhs.c.iter().enumerate() {
                if bk.is_zero() {
                    continue;
                }
                p[j + k] += aj * bk;
            }
        }
        let [p0, p1, p2, p3, p4, p5, p6] = p;
        Cyc12::new(p0 - &p4 - p6, p1 - &p5, p2 + p4, p3 + p5)
    }
}

impl Zero for Cyc12 {
    fn zero() -> Self {
        Cyc12::new(
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        )
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
}

impl One for Cyc12 {
    fn one() -> Self {
        Cyc12::from_rational(&Rational::one())
    }
}

impl Scalar for Cyc12 {
    fn omega() -> Self {
        // omega = zeta^2 - 1
        Cyc12::new(
            -Rational::one(),
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
        )
    }

    fn rho() -> Self {
        // rho = zeta^2
        Cyc12::new(
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
        )
    }

    fn i() -> Self {
        // i = zeta^3
        Cyc12::new(
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
        )
    }

    fn from_rational(r: &Rational) -> Self {
        Cyc12::new(
            r.clone(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        )
    }

    fn conj(&self) -> Self {
        // zeta -> zeta^11 = zeta - zeta^3, zeta^2 -> 1 - zeta^2,
        // zeta^3 -> -zeta^3.
        let [c0, c1, c2, c3] = &self.c;
        Cyc12::new(c0 + c2, c1.clone(), -c2.clone(), -(c1 + c3))
    }

    fn try_inv(&self) -> Result<Cyc12, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Solve the 4x4 system of the multiplication-by-self map: columns are
        // self * zeta^j on the power basis, right-hand side is 1.
        let mut cols = Vec::with_capacity(4);
        let mut basis = Cyc12::one();
        for _ in 0..4 {
            cols.push(self.clone() * basis.clone());
            basis = basis * Cyc12::zeta();
        }
        let mut m = vec![vec![Rational::zero(); 5]; 4];
        for (j, col) in cols.iter().enumerate() {
            for r in 0..4 {
                m[r][j] = col.c[r].clone();
            }
        }
        m[0][4] = Rational::one();

        for col in 0..4 {
            let pivot = (col..4)
                .find(|&r| !m[r][col].is_zero())
                .expect("multiplication map of a nonzero field element is invertible");
            m.swap(col, pivot);
            let inv = m[col][col].recip();
            for k in col..5 {
                m[col][k] = &m[col][k] * &inv;
            }
            for r in 0..4 {
                if r != col && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for k in col..5 {
                        m[r][k] = &m[r][k] - &factor * &m[col][k];
                    }
                }
            }
        }
        Ok(Cyc12::new(
            m[0][4].clone(),
            m[1][4].clone(),
            m[2][4].clone(),
            m[3][4].clone(),
        ))
    }

    fn to_complex(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, ck) in self.c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            let angle = std::f64::consts::PI * k as f64 / 6.0;
            let root = Complex64::new(angle.cos(), angle.sin());
            acc += root * rational_to_f64(ck);
        }
        acc
    }

    fn eq_within(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }

    fn im_sign(&self) -> Ordering {
        // Im(z) = (c1 + 2 c3)/2 + (c2/2) sqrt(3), exactly.
        let a = (&self.c[1] + &self.c[3] + &self.c[3]) / rat(2, 1);
        let b = &self.c[2] / rat(2, 1);
        sqrt3_sign(&a, &b)
    }

    fn cross_is_real(&self, _spread: f64) -> bool {
        self.im_sign() == Ordering::Equal
    }
}

fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back through a reduced quotient for magnitudes that overflow
        // the direct conversion.
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

impl fmt::Display for Cyc12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, ck) in self.c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            let mag = ck.abs();
            if first {
                if ck.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if ck.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && k > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => Ok(()),
                1 => write!(f, "{}z", if unit_coeff { "" } else { "*" }),
                _ => write!(f, "{}z^{}", if unit_coeff { "" } else { "*" }, k),
            }?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyc12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc12({self})")
    }
}

impl FromStr for Cyc12 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        crate::parse::parse_exact(s)
    }
}
