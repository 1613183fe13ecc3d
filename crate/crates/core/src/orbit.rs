//! Periodic operator families and tracing orbits: families
//! `S[eta(t), eta'(t)]` or `M^{wx/yz}[eta(t), eta'(t)]` driven by
//! trigonometric polynomials, residue-based tracing classification, orbit
//! sampling with numeric certification, the built-in Steiner and figure
//! eight orbits, and lifting of shape curves.
//!
//! Parameter curves are trigonometric polynomials `t -> sum c_k e^{2 pi i k t}`
//! with period 1. For these, the tracing functional equations reduce to
//! exact residue conditions on the supported frequencies: a cevian family
//! traces ascending iff every frequency of `eta` is 2 mod 3 and every
//! frequency of `eta'` is 1 mod 3, descending with the residues exchanged.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use num::complex::Complex64;
use num::integer::Integer;
use num::traits::{One, Zero};

use crate::error::Error;
use crate::median::{median_op, MedianLabel};
use crate::operator::{CircOp, EtaPair};
use crate::report::Report;
use crate::scalar::{Mod3, Scalar};
use crate::shape::{inverse_fourier, shape, FourierTriple, ShapePoint};
use crate::triangle::TriangleTriple;
use crate::ApproxTriple;

/// Finitely supported map `k -> c_k` representing
/// `t -> sum c_k e^{2 pi i k t}`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TrigPoly {
    coeffs: BTreeMap<i64, Complex64>,
}

impl TrigPoly {
    pub fn new() -> Self {
        TrigPoly::default()
    }

    pub fn constant(c: Complex64) -> Self {
        let mut p = TrigPoly::new();
        p.insert(0, c);
        p
    }

    /// `e^{2 pi i k t}`.
    pub fn single(k: i64) -> Self {
        let mut p = TrigPoly::new();
        p.insert(k, Complex64::one());
        p
    }

    pub fn from_pairs(pairs: &[(i64, Complex64)]) -> Self {
        let mut p = TrigPoly::new();
        for &(k, c) in pairs {
            p.insert(k, c);
        }
        p
    }

    /// Add `c` to the coefficient at frequency `k`, dropping the entry when
    /// it cancels.
    pub fn insert(&mut self, k: i64, c: Complex64) {
        let total = self.coeff(k) + c;
        if total.norm() <= 1e-15 {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, total);
        }
    }

    pub fn coeff(&self, k: i64) -> Complex64 {
        self.coeffs.get(&k).copied().unwrap_or_else(Complex64::zero)
    }

    pub fn frequencies(&self) -> impl Iterator<Item = i64> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, t: f64) -> Complex64 {
        let mut acc = Complex64::zero();
        for (&k, &c) in &self.coeffs {
            let angle = TAU * k as f64 * t;
            acc += c * Complex64::new(angle.cos(), angle.sin());
        }
        acc
    }

    /// The polynomial of `t -> self(t + 1/3)`: coefficientwise
    /// multiplication by `omega^{k mod 3}`.
    pub fn shift_third(&self) -> TrigPoly {
        let w = <Complex64 as Scalar>::omega();
        let mut out = TrigPoly::new();
        for (&k, &c) in &self.coeffs {
            out.insert(k, c * omega_pow_int(w, k));
        }
        out
    }

    pub fn scale(&self, factor: Complex64) -> TrigPoly {
        let mut out = TrigPoly::new();
        for (&k, &c) in &self.coeffs {
            out.insert(k, c * factor);
        }
        out
    }

    /// Frequency shift: multiply by `e^{2 pi i s t}`.
    pub fn freq_shift(&self, s: i64) -> TrigPoly {
        let mut out = TrigPoly::new();
        for (&k, &c) in &self.coeffs {
            out.insert(k + s, c);
        }
        out
    }

    pub fn mul(&self, other: &TrigPoly) -> TrigPoly {
        let mut out = TrigPoly::new();
        for (&j, &cj) in &self.coeffs {
            for (&k, &ck) in &other.coeffs {
                out.insert(j + k, cj * ck);
            }
        }
        out
    }

    /// Sum of all coefficients, i.e. the value at `t = 0`.
    pub fn at_zero(&self) -> Complex64 {
        self.coeffs.values().sum()
    }
}

fn omega_pow_int(w: Complex64, k: i64) -> Complex64 {
    match k.rem_euclid(3) {
        0 => Complex64::one(),
        1 => w,
        _ => w * w,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum FamilyKind {
    Cevian,
    Median(MedianLabel),
}

/// Periodic family `t -> op(eta(t), eta'(t))` applied to a base triple.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitFamily {
    pub kind: FamilyKind,
    pub eta: TrigPoly,
    pub eta_prime: TrigPoly,
    pub base: ApproxTriple,
}

impl OrbitFamily {
    pub fn cevian(eta: TrigPoly, eta_prime: TrigPoly, base: ApproxTriple) -> Self {
        OrbitFamily {
            kind: FamilyKind::Cevian,
            eta,
            eta_prime,
            base,
        }
    }

    pub fn median(
        label: MedianLabel,
        eta: TrigPoly,
        eta_prime: TrigPoly,
        base: ApproxTriple,
    ) -> Self {
        OrbitFamily {
            kind: FamilyKind::Median(label),
            eta,
            eta_prime,
            base,
        }
    }

    /// The operator at parameter time `t`.
    pub fn op_at(&self, t: f64) -> CircOp<Complex64> {
        let e = EtaPair::new(self.eta.eval(t), self.eta_prime.eval(t));
        match self.kind {
            FamilyKind::Cevian => CircOp::from_eta(&e),
            FamilyKind::Median(label) => median_op(label, &e),
        }
    }

    pub fn triple_at(&self, t: f64) -> ApproxTriple {
        self.op_at(t).apply(&self.base)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TracingClass {
    Ascending,
    Descending,
    NotTracing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Ascending,
    Descending,
}

/// Residue-based tracing classification. For median families the constant
/// parts `omega^{x-w}` and `omega^{w-x}` are first subtracted from `eta` and
/// `eta'` respectively.
pub fn tracing_class(family: &OrbitFamily) -> TracingClass {
    let (eta, eta_prime) = match &family.kind {
        FamilyKind::Cevian => (family.eta.clone(), family.eta_prime.clone()),
        FamilyKind::Median(label) => {
            let w = <Complex64 as Scalar>::omega();
            let mut eta = family.eta.clone();
            eta.insert(0, -omega_pow_int(w, (label.x() - label.w()).value() as i64));
            let mut eta_prime = family.eta_prime.clone();
            eta_prime.insert(0, -omega_pow_int(w, (label.w() - label.x()).value() as i64));
            (eta, eta_prime)
        }
    };
    let residues_are = |p: &TrigPoly, r: i64| p.frequencies().all(|k| k.rem_euclid(3) == r);
    if residues_are(&eta, 2) && residues_are(&eta_prime, 1) {
        TracingClass::Ascending
    } else if residues_are(&eta, 1) && residues_are(&eta_prime, 2) {
        TracingClass::Descending
    } else {
        TracingClass::NotTracing
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrbitSample {
    pub t: f64,
    pub triple: ApproxTriple,
}

/// Sample the family on the uniform grid `t = j/n`.
pub fn sample(family: &OrbitFamily, n: usize) -> Vec<OrbitSample> {
    assert!(n >= 3, "need at least 3 samples");
    (0..n)
        .map(|j| {
            let t = j as f64 / n as f64;
            OrbitSample {
                t,
                triple: family.triple_at(t),
            }
        })
        .collect()
}

/// Certify the tracing property on an aligned grid: the maximum vertex-wise
/// distance between `J d(t)` and `d(t + 1/3)` (ascending) or `d(t - 1/3)`
/// (descending). A certified orbit stays at or below 1e-10.
pub fn verify_tracing(samples: &[OrbitSample], direction: Direction) -> Result<f64, Error> {
    let n = samples.len();
    if n == 0 || n % 3 != 0 {
        return Err(Error::GridNotDivisibleBy3);
    }
    let shift = n / 3;
    let mut residual = 0.0f64;
    for j in 0..n {
        let target = match direction {
            Direction::Ascending => (j + shift) % n,
            Direction::Descending => (j + n - shift) % n,
        };
        let rotated = samples[j].triple.j_apply(Mod3::ONE);
        residual = residual.max(rotated.distance(&samples[target].triple));
    }
    Ok(residual)
}

/// Minimum pairwise vertex distance over all samples.
pub fn collision_report(samples: &[OrbitSample]) -> f64 {
    let mut min = f64::INFINITY;
    for s in samples {
        let v = s.triple.vertices();
        for i in 0..3 {
            for j in (i + 1)..3 {
                min = min.min((v[i] - v[j]).norm());
            }
        }
    }
    min
}

/// Steiner family `S[e^{-2 pi i t}, e^{2 pi i t}]` on the given base.
pub fn steiner_family(base: ApproxTriple) -> OrbitFamily {
    OrbitFamily::cevian(TrigPoly::single(-1), TrigPoly::single(1), base)
}

/// Maximum deviation of the sampled vertices from the circumscribed Steiner
/// ellipse of the base `(0, 1, u + v i)`:
/// `v^2 (X - (1+u)/3)^2 + (v - 2uv)(X - (1+u)/3)(Y - v/3)
///  + (1 - u + u^2)(Y - v/3)^2 = v^2/3`.
pub fn steiner_residual(u: f64, v: f64, samples: &[OrbitSample]) -> f64 {
    let cx = (1.0 + u) / 3.0;
    let cy = v / 3.0;
    let mut worst = 0.0f64;
    for s in samples {
        for vert in s.triple.vertices() {
            let x = vert.re - cx;
            let y = vert.im - cy;
            let lhs = v * v * x * x + (v - 2.0 * u * v) * x * y + (1.0 - u + u * u) * y * y;
            worst = worst.max((lhs - v * v / 3.0).abs());
        }
    }
    worst
}

/// The figure eight cevian family on the degenerate base `(0, i, -i)`:
/// `eta = -2 e^{2 pi i t} + e^{-4 pi i t}`,
/// `eta' = 2 e^{-2 pi i t} + e^{4 pi i t}`.
pub fn cevian_figure8_family() -> OrbitFamily {
    let base = TriangleTriple::new(
        Complex64::zero(),
        Complex64::new(0.0, 1.0),
        Complex64::new(0.0, -1.0),
    );
    OrbitFamily::cevian(
        TrigPoly::from_pairs(&[(1, Complex64::new(-2.0, 0.0)), (-2, Complex64::one())]),
        TrigPoly::from_pairs(&[(-1, Complex64::new(2.0, 0.0)), (2, Complex64::one())]),
        base,
    )
}

/// Residuals of the figure eight orbit: maximum deviation from the curve
/// `X^2 = (3/16) X^4 + Y^2` over all vertices, and maximum deviation of the
/// first vertex from its closed form
/// `(4 sqrt(3)/3) cos(2 pi t) + i (2 sqrt(3)/3) sin(4 pi t)`.
pub fn figure8_check(samples: &[OrbitSample]) -> (f64, f64) {
    let mut curve = 0.0f64;
    let mut vertex = 0.0f64;
    let root3 = 3f64.sqrt();
    for s in samples {
        for v in s.triple.vertices() {
            let (x, y) = (v.re, v.im);
            curve = curve.max((x * x - 3.0 / 16.0 * x.powi(4) - y * y).abs());
        }
        let expected = Complex64::new(
            4.0 * root3 / 3.0 * (TAU * s.t).cos(),
            2.0 * root3 / 3.0 * (2.0 * TAU * s.t).sin(),
        );
        vertex = vertex.max((s.triple.vertex(0) - expected).norm());
    }
    (curve, vertex)
}

/// The figure eight median family `M^{01/01}` on base `(0, 4, 3 + i)` with
/// `eta = -2 e^{2 pi i t} + e^{-4 pi i t} + omega`,
/// `eta' = 2 e^{-2 pi i t} + e^{4 pi i t} + omega^2`.
pub fn median_figure8_family() -> OrbitFamily {
    let w = <Complex64 as Scalar>::omega();
    let base = TriangleTriple::new(
        Complex64::zero(),
        Complex64::new(4.0, 0.0),
        Complex64::new(3.0, 1.0),
    );
    OrbitFamily::median(
        MedianLabel::from_digits(0, 1, 0, 1).unwrap(),
        TrigPoly::from_pairs(&[
            (1, Complex64::new(-2.0, 0.0)),
            (-2, Complex64::one()),
            (0, w),
        ]),
        TrigPoly::from_pairs(&[
            (-1, Complex64::new(2.0, 0.0)),
            (2, Complex64::one()),
            (0, w * w),
        ]),
        base,
    )
}

/// Median orbit family `M^{0x/01}[e^{2 pi i m t} + omega^x,
/// e^{2 pi i n t} + omega^{-x}]`; its orbit is independent of `x`.
pub fn median_orbit_family(x: Mod3, m: i64, n: i64, base: ApproxTriple) -> OrbitFamily {
    let w = <Complex64 as Scalar>::omega();
    let mut eta = TrigPoly::single(m);
    eta.insert(0, omega_pow_int(w, x.value() as i64));
    let mut eta_prime = TrigPoly::single(n);
    eta_prime.insert(0, omega_pow_int(w, (-x).value() as i64));
    OrbitFamily::median(
        MedianLabel::new(Mod3::ZERO, x, Mod3::ZERO, Mod3::ONE).unwrap(),
        eta,
        eta_prime,
        base,
    )
}

/// Lift a closed shape curve to a tracing orbit.
///
/// `gamma` must satisfy `gamma(t + 1/3) = omega^epsilon gamma(t)` (all
/// frequencies congruent to `epsilon` mod 3) with `gamma(0) != 0`. The lift
/// uses `eta_2(t) = e^{2 pi i epsilon t} gamma(t)/gamma(0)`,
/// `eta_1(t) = e^{2 pi i epsilon t}`, an optional gauge `mu` of period 1/3,
/// and base triple with Fourier components `(0, 1, gamma(0))`. The sampled
/// orbit satisfies `psi(d(t)) = gamma(t)`.
pub fn lift_shape_curve(
    gamma: &TrigPoly,
    epsilon: i8,
    mu: Option<TrigPoly>,
) -> Result<OrbitFamily, Error> {
    if epsilon != 1 && epsilon != -1 {
        return Err(Error::BadGamma("epsilon must be +1 or -1".into()));
    }
    if gamma.is_empty() {
        return Err(Error::BadGamma("gamma is identically zero".into()));
    }
    let eps = epsilon as i64;
    if let Some(k) = gamma
        .frequencies()
        .find(|k| k.rem_euclid(3) != eps.rem_euclid(3))
    {
        return Err(Error::BadGamma(format!(
            "frequency {k} breaks gamma(t + 1/3) = omega^{epsilon} gamma(t)"
        )));
    }
    let gamma0 = gamma.at_zero();
    if gamma0.norm() <= 1e-12 {
        return Err(Error::BadGamma("gamma(0) must be nonzero".into()));
    }
    let mu = mu.unwrap_or_else(|| TrigPoly::constant(Complex64::one()));
    if let Some(k) = mu.frequencies().find(|k| k.rem_euclid(3) != 0) {
        return Err(Error::BadGauge(format!(
            "frequency {k} breaks the period-1/3 requirement"
        )));
    }
    if mu.is_empty() {
        return Err(Error::BadGauge("mu is identically zero".into()));
    }

    // eta_2 = e^{2 pi i eps t} xi(t) with xi = gamma/gamma(0);
    // eta_1 = e^{2 pi i eps t}.
    let eta2 = gamma.scale(Complex64::one() / gamma0).freq_shift(eps);
    let eta1 = TrigPoly::single(eps);
    let base = inverse_fourier(&FourierTriple {
        psi0: Complex64::zero(),
        psi1: Complex64::one(),
        psi2: gamma0,
    });
    Ok(OrbitFamily::cevian(eta2.mul(&mu), eta1.mul(&mu), base))
}

/// Per-sample shape values `(t, psi, psi^3)`.
pub struct ShapeTracePoint {
    pub t: f64,
    pub shape: ShapePoint<Complex64>,
    pub cubed: ShapePoint<Complex64>,
}

pub fn shape_trace(samples: &[OrbitSample]) -> Result<Vec<ShapeTracePoint>, Error> {
    samples
        .iter()
        .map(|s| {
            let psi = shape(&s.triple)?;
            let cubed = psi.cubed();
            Ok(ShapeTracePoint {
                t: s.t,
                shape: psi,
                cubed,
            })
        })
        .collect()
}

/// Check the single-frequency tracing law over all coprime `(m, n)` with
/// `|m|, |n| <= max_abs` on the base `(0, 1, 0.7 + 0.5i)`: the classifier
/// must match the residue law (tracing iff `m + n = 0 mod 3`, ascending iff
/// `m = 2 mod 3`) and the numeric certification at `grid` points.
pub fn tracing_law_suite(max_abs: i64, grid: usize) -> Report {
    let mut report = Report::new("tracing", 0);
    let base = TriangleTriple::new(
        Complex64::zero(),
        Complex64::one(),
        Complex64::new(0.7, 0.5),
    );
    let mut law_failures = Vec::new();
    let mut numeric_failures = Vec::new();
    let mut pairs = 0usize;
    for m in -max_abs..=max_abs {
        for n in -max_abs..=max_abs {
            if m.abs().gcd(&n.abs()) != 1 {
                continue;
            }
            pairs += 1;
            let family =
                OrbitFamily::cevian(TrigPoly::single(m), TrigPoly::single(n), base.clone());
            let class = tracing_class(&family);
            let expected = if (m + n).rem_euclid(3) != 0 {
                TracingClass::NotTracing
            } else if m.rem_euclid(3) == 2 {
                TracingClass::Ascending
            } else {
                TracingClass::Descending
            };
            if class != expected {
                law_failures.push((m, n));
            }
            let samples = sample(&family, grid);
            let asc = verify_tracing(&samples, Direction::Ascending).unwrap();
            let desc = verify_tracing(&samples, Direction::Descending).unwrap();
            let numeric_ok = match class {
                TracingClass::Ascending => asc <= 1e-10,
                TracingClass::Descending => desc <= 1e-10,
                TracingClass::NotTracing => asc.min(desc) > 1e-6,
            };
            if !numeric_ok {
                numeric_failures.push((m, n));
            }
        }
    }
    report.record(
        "tracing-law",
        law_failures.is_empty(),
        format!("{pairs} coprime pairs, failures {law_failures:?}"),
    );
    report.record(
        "tracing-numeric",
        numeric_failures.is_empty(),
        format!("{grid}-point certification, failures {numeric_failures:?}"),
    );
    report
}
