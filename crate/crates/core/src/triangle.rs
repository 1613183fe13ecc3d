//! Triangle triples, the cyclic vertex shift, centroid, degeneracy
//! classification and metric helpers.

use std::cmp::Ordering;
use std::fmt;

use num::complex::Complex64;
use num::traits::Zero;

use crate::error::Error;
use crate::scalar::{rat, Mod3, Scalar};

/// Ordered triple of vertices; labels matter.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangleTriple<S> {
    verts: [S; 3],
}

/// Degeneracy classes of a triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degeneracy {
    /// All three vertices coincide.
    TripleCollision,
    /// Exactly two vertices coincide.
    DoubleCollision,
    /// Distinct but collinear vertices.
    DegenerateDistinct,
    NonDegenerate,
}

impl<S: Scalar> TriangleTriple<S> {
    pub fn new(a0: S, a1: S, a2: S) -> Self {
        TriangleTriple {
            verts: [a0, a1, a2],
        }
    }

    pub fn vertex(&self, k: usize) -> &S {
        &self.verts[k % 3]
    }

    pub fn vertices(&self) -> &[S; 3] {
        &self.verts
    }

    /// `J^k` applied to the triple; `k = 1` sends `(a0, a1, a2)` to
    /// `(a1, a2, a0)`.
    pub fn j_apply(&self, k: Mod3) -> Self {
        let s = k.value() as usize;
        TriangleTriple::new(
            self.verts[s % 3].clone(),
            self.verts[(s + 1) % 3].clone(),
            self.verts[(s + 2) % 3].clone(),
        )
    }

    pub fn centroid(&self) -> S {
        let sum = self.verts[0].clone() + self.verts[1].clone() + self.verts[2].clone();
        sum * S::from_rational(&rat(1, 3))
    }

    /// Transposition of the last two vertices: the basis of the binary Ceva
    /// operator. Exchanges the two nonzero Fourier components.
    pub fn swap_last(&self) -> Self {
        TriangleTriple::new(
            self.verts[0].clone(),
            self.verts[2].clone(),
            self.verts[1].clone(),
        )
    }

    /// Maximum pairwise vertex distance in the numeric image.
    pub fn spread(&self) -> f64 {
        let z: Vec<Complex64> = self.verts.iter().map(|v| v.to_complex()).collect();
        let mut m = 0.0f64;
        for i in 0..3 {
            for j in (i + 1)..3 {
                m = m.max((z[i] - z[j]).norm());
            }
        }
        m
    }

    pub fn classify(&self) -> Degeneracy {
        let [a0, a1, a2] = &self.verts;
        let e01 = a0 == a1;
        let e12 = a1 == a2;
        let e02 = a0 == a2;
        if e01 && e12 {
            return Degeneracy::TripleCollision;
        }
        if e01 || e12 || e02 {
            return Degeneracy::DoubleCollision;
        }
        let cross = (a1.clone() - a0.clone()) * (a2.clone() - a0.clone()).conj();
        if cross.cross_is_real(self.spread()) {
            Degeneracy::DegenerateDistinct
        } else {
            Degeneracy::NonDegenerate
        }
    }

    /// Whether the triple is positively oriented, i.e.
    /// `Im((a0 - a1)/(a2 - a1)) > 0`. The exact backend decides by the exact
    /// sign of `Im((a0 - a1) * conj(a2 - a1))`, which has the same sign.
    pub fn orientation_positive(&self) -> Result<bool, Error> {
        if self.classify() != Degeneracy::NonDegenerate {
            return Err(Error::DegenerateInput);
        }
        let [a0, a1, a2] = &self.verts;
        let cross = (a0.clone() - a1.clone()) * (a2.clone() - a1.clone()).conj();
        Ok(cross.im_sign() == Ordering::Greater)
    }

    /// `(|a1 - a2|, |a2 - a0|, |a0 - a1|)` in double precision. Square roots
    /// leave the exact field, so exact triples report the lengths of their
    /// numeric image; see [`TriangleTriple::side_lengths_squared`] for the
    /// exact quantities.
    pub fn side_lengths(&self) -> (f64, f64, f64) {
        let z: Vec<Complex64> = self.verts.iter().map(|v| v.to_complex()).collect();
        (
            (z[1] - z[2]).norm(),
            (z[2] - z[0]).norm(),
            (z[0] - z[1]).norm(),
        )
    }

    /// Exact squared side lengths `|a1 - a2|^2, |a2 - a0|^2, |a0 - a1|^2`
    /// computed as `d * conj(d)` in the scalar backend.
    pub fn side_lengths_squared(&self) -> (S, S, S) {
        let sq = |a: &S, b: &S| {
            let d = a.clone() - b.clone();
            d.clone() * d.conj()
        };
        let [a0, a1, a2] = &self.verts;
        (sq(a1, a2), sq(a2, a0), sq(a0, a1))
    }

    /// Vertex-wise map.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> TriangleTriple<T> {
        TriangleTriple::new(f(&self.verts[0]), f(&self.verts[1]), f(&self.verts[2]))
    }

    /// Numeric image of the triple.
    pub fn to_approx(&self) -> TriangleTriple<Complex64> {
        self.map(|v| v.to_complex())
    }
}

impl TriangleTriple<Complex64> {
    /// Place a triangle with the given side lengths `|a0 a1| = ab`,
    /// `|a1 a2| = bc`, `|a2 a0| = ca` as `(0, ab, x + y i)` with `y > 0`.
    pub fn from_sides(ab: f64, bc: f64, ca: f64) -> Result<Self, Error> {
        if ab <= 0.0 || bc <= 0.0 || ca <= 0.0 {
            return Err(Error::DegenerateInput);
        }
        let x = (ab * ab + ca * ca - bc * bc) / (2.0 * ab);
        let y2 = ca * ca - x * x;
        if y2 <= 0.0 {
            return Err(Error::DegenerateInput);
        }
        Ok(TriangleTriple::new(
            Complex64::zero(),
            Complex64::new(ab, 0.0),
            Complex64::new(x, y2.sqrt()),
        ))
    }

    /// Maximum vertex-wise distance to another triple.
    pub fn distance(&self, other: &Self) -> f64 {
        (0..3)
            .map(|k| (self.verts[k] - other.verts[k]).norm())
            .fold(0.0, f64::max)
    }
}

impl<S: Scalar> fmt::Display for TriangleTriple<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            self.verts[0], self.verts[1], self.verts[2]
        )
    }
}
