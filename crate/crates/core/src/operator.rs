//! The monoid of centroid-preserving circulant operators
//! `alpha I + beta J + gamma J^2` with `alpha + beta + gamma = 1`, in its
//! three coordinate systems: `(alpha, beta, gamma)`, the Fourier multipliers
//! `(eta, eta')` and the cevian parameters `(p, q)`.
//!
//! The `(alpha, beta, gamma)` coefficients are the canonical internal form:
//! they are total (no singular locus) and composition is a cyclic
//! convolution. The other two systems are views.

use std::fmt;


use crate::error::Error;
use crate::scalar::{rat, Mod3, Scalar};
use crate::triangle::TriangleTriple;

/// Fourier multipliers of an operator: `eta` scales `psi_2`, `eta_prime`
/// scales `psi_1`. Composition is componentwise multiplication.
#[derive(Debug, Clone, PartialEq)]
pub struct EtaPair<S> {
    pub eta: S,
    pub eta_prime: S,
}

/// Cevian parameters with `p*q != 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PQPair<S> {
    p: S,
    q: S,
}

/// Circulant centroid-preserving operator.
#[derive(Debug, Clone, PartialEq)]
pub struct CircOp<S> {
    alpha: S,
    beta: S,
    gamma: S,
}

impl<S: Scalar> EtaPair<S> {
    pub fn new(eta: S, eta_prime: S) -> Self {
        EtaPair { eta, eta_prime }
    }

    /// Direct parameter change from `(p, q)`; agrees exactly with
    /// `CircOp::from_pq(..).to_eta()`.
    pub fn from_pq(pq: &PQPair<S>) -> Self {
        let one = S::one();
        let denom = (one.clone() - pq.p.clone() * pq.q.clone())
            .try_inv()
            .expect("p*q != 1 by construction");
        let lin = (pq.p.clone() - pq.q.clone()) * denom.clone();
        let rot = (pq.p.clone() - one.clone())
            * (pq.q.clone() + pq.q.clone() - one)
            * denom;
        EtaPair {
            eta: lin.clone() + rot.clone() * S::omega(),
            eta_prime: lin + rot * S::omega() * S::omega(),
        }
    }

    /// Inverse parameter change, partial. Raises [`Error::InvalidPQ`] when
    /// the image would land on `p*q = 1` (decided by cross-multiplication,
    /// so indeterminate `0/0` points of the birational map are reported as
    /// `InvalidPQ` rather than `SingularParameter`), and
    /// [`Error::SingularParameter`] when a denominator vanishes.
    pub fn to_pq(&self) -> Result<PQPair<S>, Error> {
        let one = S::one();
        let w = S::omega();
        let w2 = w.clone() * w.clone();
        let two = S::from_int(2);
        let p_num = one.clone() + self.eta.clone() + self.eta_prime.clone();
        let p_den = two.clone() - w.clone() * self.eta.clone() - w2.clone() * self.eta_prime.clone();
        let q_num = one + w * self.eta.clone() + w2 * self.eta_prime.clone();
        let q_den = two - self.eta.clone() - self.eta_prime.clone();
        // p*q = 1 in cross-multiplied form.
        if p_num.clone() * q_num.clone() == p_den.clone() * q_den.clone() {
            return Err(Error::InvalidPQ);
        }
        if p_den.is_zero() || q_den.is_zero() {
            return Err(Error::SingularParameter);
        }
        PQPair::new(
            p_num.try_div(&p_den).expect("nonzero denominator"),
            q_num.try_div(&q_den).expect("nonzero denominator"),
        )
    }
}

impl<S: Scalar> PQPair<S> {
    pub fn new(p: S, q: S) -> Result<Self, Error> {
        if p.clone() * q.clone() == S::one() {
            return Err(Error::InvalidPQ);
        }
        Ok(PQPair { p, q })
    }

    pub fn p(&self) -> &S {
        &self.p
    }

    pub fn q(&self) -> &S {
        &self.q
    }
}

impl<S: Scalar> CircOp<S> {
    /// Validated constructor: coefficients must sum to 1 (within 1e-12 in
    /// the double-precision backend).
    pub fn new(alpha: S, beta: S, gamma: S) -> Result<Self, Error> {
        let sum = alpha.clone() + beta.clone() + gamma.clone();
        if !sum.eq_within(&S::one(), 1e-12) {
            return Err(Error::CoefficientSum);
        }
        Ok(CircOp { alpha, beta, gamma })
    }

    pub(crate) fn raw(alpha: S, beta: S, gamma: S) -> Self {
        CircOp { alpha, beta, gamma }
    }

    pub fn identity() -> Self {
        CircOp::raw(S::one(), S::zero(), S::zero())
    }

    /// The cyclic shift `J^k`.
    pub fn j_power(k: Mod3) -> Self {
        match k.value() {
            0 => CircOp::identity(),
            1 => CircOp::raw(S::zero(), S::one(), S::zero()),
            _ => CircOp::raw(S::zero(), S::zero(), S::one()),
        }
    }

    pub fn coeffs(&self) -> (&S, &S, &S) {
        (&self.alpha, &self.beta, &self.gamma)
    }

    /// Coefficients from the cevian parameters:
    /// `(p(1-q), q(1-p), (1-p)(1-q)) / (1-pq)`.
    pub fn from_pq(pq: &PQPair<S>) -> Self {
        let one = S::one();
        let inv = (one.clone() - pq.p.clone() * pq.q.clone())
            .try_inv()
            .expect("p*q != 1 by construction");
        let cp = one.clone() - pq.p.clone();
        let cq = one - pq.q.clone();
        CircOp::raw(
            pq.p.clone() * cq.clone() * inv.clone(),
            pq.q.clone() * cp.clone() * inv.clone(),
            cp * cq * inv,
        )
    }

    /// Coefficients from the Fourier multipliers, total on all of C^2:
    /// `alpha = (1 + eta + eta')/3` and its two rotations.
    pub fn from_eta(e: &EtaPair<S>) -> Self {
        let third = S::from_rational(&rat(1, 3));
        let w = S::omega();
        let w2 = w.clone() * w.clone();
        let one = S::one();
        CircOp::raw(
            (one.clone() + e.eta.clone() + e.eta_prime.clone()) * third.clone(),
            (one.clone() + e.eta.clone() * w.clone() + e.eta_prime.clone() * w2.clone())
                * third.clone(),
            (one + e.eta.clone() * w2 + e.eta_prime.clone() * w) * third,
        )
    }

    /// Fourier multipliers `eta = alpha + beta w^2 + gamma w`,
    /// `eta' = alpha + beta w + gamma w^2`; exact inverse of `from_eta`.
    pub fn to_eta(&self) -> EtaPair<S> {
        let w = S::omega();
        let w2 = w.clone() * w.clone();
        EtaPair {
            eta: self.alpha.clone() + self.beta.clone() * w2.clone() + self.gamma.clone() * w.clone(),
            eta_prime: self.alpha.clone() + self.beta.clone() * w + self.gamma.clone() * w2,
        }
    }

    /// Cevian parameters of the operator, when they exist.
    pub fn to_pq(&self) -> Result<PQPair<S>, Error> {
        self.to_eta().to_pq()
    }

    /// Operator product `self * other` (apply `other` first). Equals the
    /// product of the circulant matrices; on Fourier multipliers it is
    /// componentwise multiplication.
    pub fn compose(&self, other: &Self) -> Self {
        let (a1, b1, g1) = (&self.alpha, &self.beta, &self.gamma);
        let (a2, b2, g2) = (&other.alpha, &other.beta, &other.gamma);
        CircOp::raw(
            a1.clone() * a2.clone() + b1.clone() * g2.clone() + g1.clone() * b2.clone(),
            a1.clone() * b2.clone() + b1.clone() * a2.clone() + g1.clone() * g2.clone(),
            a1.clone() * g2.clone() + b1.clone() * b2.clone() + g1.clone() * a2.clone(),
        )
    }

    /// Apply to a triple: `a'_k = alpha a_k + beta a_{k+1} + gamma a_{k+2}`.
    pub fn apply(&self, d: &TriangleTriple<S>) -> TriangleTriple<S> {
        let v = d.vertices();
        let at = |k: usize| -> S {
            self.alpha.clone() * v[k].clone()
                + self.beta.clone() * v[(k + 1) % 3].clone()
                + self.gamma.clone() * v[(k + 2) % 3].clone()
        };
        TriangleTriple::new(at(0), at(1), at(2))
    }

    /// Monoid inverse `S[1/eta, 1/eta']`;
    /// [`Error::NotInvertible`] when `eta * eta' = 0`.
    pub fn try_inverse(&self) -> Result<Self, Error> {
        let e = self.to_eta();
        if e.eta.is_zero() || e.eta_prime.is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(CircOp::from_eta(&EtaPair::new(
            e.eta.try_inv()?,
            e.eta_prime.try_inv()?,
        )))
    }

    /// `|eta| = |eta'| = 1`: exact backend checks `eta * conj(eta) = 1`
    /// exactly, the double-precision backend within 1e-12.
    pub fn is_area_preserving(&self) -> bool {
        let e = self.to_eta();
        let one = S::one();
        (e.eta.clone() * e.eta.conj()).eq_within(&one, 1e-12)
            && (e.eta_prime.clone() * e.eta_prime.conj()).eq_within(&one, 1e-12)
    }

    /// Whether the operator commutes with every real affine map of the
    /// plane: holds iff `conj(eta) = eta'`, equivalently iff the coefficient
    /// matrix is real.
    pub fn commutes_with_real_affine(&self) -> bool {
        let e = self.to_eta();
        e.eta.conj().eq_within(&e.eta_prime, 1e-12)
    }

    pub fn eq_within(&self, other: &Self, tol: f64) -> bool {
        self.alpha.eq_within(&other.alpha, tol)
            && self.beta.eq_within(&other.beta, tol)
            && self.gamma.eq_within(&other.gamma, tol)
    }
}

impl<S: Scalar> fmt::Display for CircOp<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[a={}, b={}, g={}]", self.alpha, self.beta, self.gamma)
    }
}

/// Signed area of the numeric image, by the shoelace formula
/// `Im(conj(a0) a1 + conj(a1) a2 + conj(a2) a0) / 2`.
pub fn signed_area<S: Scalar>(d: &TriangleTriple<S>) -> f64 {
    let v = d.to_approx();
    let z = v.vertices();
    0.5 * (z[0].conj() * z[1] + z[1].conj() * z[2] + z[2].conj() * z[0]).im
}
