//! The 18 generalized median operators `M^{wx/yz}[eta, eta']`, their
//! reduction identities, the published closed forms in cevian parameters and
//! the fixed-point classification.
//!
//! A median operator is determined by two conditions on the output triple:
//! it is concentroid with the input, and its sides realize the vectors from
//! the vertices of the input to the vertices of the cevian image under the
//! label rule `(w, x) -> (y, z)`. Every median operator reduces to a cevian
//! operator after the parameter change of [`median_eta`], which makes the
//! circulant monoid the universal carrier.

use std::fmt;

use num::traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::operator::{CircOp, EtaPair, PQPair};
use crate::report::Report;
use crate::scalar::{rat, Cyc12, Mod3, Rational, Scalar};
use crate::triangle::TriangleTriple;

/// Label `(w, x, y, z)` in (Z/3)^4 with `y != z`. The printed tables use
/// representatives with `w = 0`; simultaneous shifts of all four entries do
/// not change the operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MedianLabel {
    w: Mod3,
    x: Mod3,
    y: Mod3,
    z: Mod3,
}

impl MedianLabel {
    pub fn new(w: Mod3, x: Mod3, y: Mod3, z: Mod3) -> Result<Self, Error> {
        if y == z {
            return Err(Error::InvalidLabel(format!("{w}{x}/{y}{z}")));
        }
        Ok(MedianLabel { w, x, y, z })
    }

    pub fn from_digits(w: i64, x: i64, y: i64, z: i64) -> Result<Self, Error> {
        MedianLabel::new(Mod3::new(w), Mod3::new(x), Mod3::new(y), Mod3::new(z))
    }

    pub fn parse(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let bad = || Error::InvalidLabel(t.to_string());
        let (wx, yz) = t.split_once('/').ok_or_else(bad)?;
        let digits: Vec<i64> = wx
            .chars()
            .chain(yz.chars())
            .map(|c| c.to_digit(10).map(|d| d as i64).ok_or_else(bad))
            .collect::<Result<_, _>>()?;
        if digits.len() != 4 || digits.iter().any(|&d| d > 2) {
            return Err(bad());
        }
        MedianLabel::from_digits(digits[0], digits[1], digits[2], digits[3])
    }

    pub fn w(&self) -> Mod3 {
        self.w
    }
    pub fn x(&self) -> Mod3 {
        self.x
    }
    pub fn y(&self) -> Mod3 {
        self.y
    }
    pub fn z(&self) -> Mod3 {
        self.z
    }

    /// The 18 representatives with `w = 0`, in the order of the published
    /// fixed-point table.
    pub fn representatives() -> Vec<MedianLabel> {
        let mut out = Vec::with_capacity(18);
        for (y, z) in [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)] {
            for x in 0..3 {
                out.push(MedianLabel::from_digits(0, x, y, z).unwrap());
            }
        }
        out
    }

    /// All 54 labels.
    pub fn all() -> Vec<MedianLabel> {
        let mut out = Vec::with_capacity(54);
        for w in 0..3 {
            for x in 0..3 {
                for y in 0..3 {
                    for z in 0..3 {
                        if y != z {
                            out.push(MedianLabel::from_digits(w, x, y, z).unwrap());
                        }
                    }
                }
            }
        }
        out
    }

    fn shift(&self, dw: i64, dx: i64, dy: i64, dz: i64) -> MedianLabel {
        MedianLabel {
            w: self.w + Mod3::new(dw),
            x: self.x + Mod3::new(dx),
            y: self.y + Mod3::new(dy),
            z: self.z + Mod3::new(dz),
        }
    }

    fn swapped(&self) -> MedianLabel {
        MedianLabel {
            w: self.w,
            x: self.x,
            y: self.z,
            z: self.y,
        }
    }
}

impl fmt::Display for MedianLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}/{}{}", self.w, self.x, self.y, self.z)
    }
}

/// Parameter change that expresses `M^{wx/yz}[eta, eta']` as a cevian
/// operator:
/// `eta_0 = (eta w^-x - w^-w) / (w^-z - w^-y)`,
/// `eta_1 = (eta' w^x - w^w) / (w^z - w^y)`.
/// The denominators are differences of distinct cube roots, never zero.
pub fn median_eta<S: Scalar>(label: MedianLabel, e: &EtaPair<S>) -> EtaPair<S> {
    let num0 = e.eta.clone() * S::omega_pow(-label.x) - S::omega_pow(-label.w);
    let den0 = S::omega_pow(-label.z) - S::omega_pow(-label.y);
    let num1 = e.eta_prime.clone() * S::omega_pow(label.x) - S::omega_pow(label.w);
    let den1 = S::omega_pow(label.z) - S::omega_pow(label.y);
    EtaPair::new(
        num0.try_div(&den0).expect("distinct cube roots"),
        num1.try_div(&den1).expect("distinct cube roots"),
    )
}

/// The median operator as an element of the circulant monoid.
pub fn median_op<S: Scalar>(label: MedianLabel, e: &EtaPair<S>) -> CircOp<S> {
    CircOp::from_eta(&median_eta(label, e))
}

/// Apply the median operator to a triple.
pub fn median_apply<S: Scalar>(
    label: MedianLabel,
    e: &EtaPair<S>,
    d: &TriangleTriple<S>,
) -> TriangleTriple<S> {
    median_op(label, e).apply(d)
}

/// Independent construction of the median triangle directly from the two
/// defining conditions, given the cevian image `d_prime`: solves the linear
/// system `{sum a'' = sum a; a''_{z+k} - a''_{y+k} = a'_{x+k} - a_{w+k}}`.
/// Serves as the test oracle for [`median_apply`].
pub fn median_oracle<S: Scalar>(
    label: MedianLabel,
    d: &TriangleTriple<S>,
    d_prime: &TriangleTriple<S>,
) -> Result<TriangleTriple<S>, Error> {
    let side = |k: Mod3| -> S {
        d_prime.vertex((label.x + k).value() as usize).clone()
            - d.vertex((label.w + k).value() as usize).clone()
    };
    let v = [side(Mod3::ZERO), side(Mod3::ONE), side(Mod3::TWO)];
    let total = v[0].clone() + v[1].clone() + v[2].clone();
    let tol = 1e-9 * (1.0 + d.spread());
    if !total.eq_within(&S::zero(), tol) {
        return Err(Error::InconsistentSystem);
    }

    let g = d.centroid();
    let delta = label.z - label.y;
    // Walk the cycle y -> y + delta -> y + 2 delta and center it on the
    // common centroid: b_y = g - (2 v_0 + v_delta)/3.
    let third = S::from_rational(&rat(1, 3));
    let v0 = v[0].clone();
    let vd = v[delta.value() as usize].clone();
    let b_y = g - (v0.clone() + v0.clone() + vd.clone()) * third;
    let mut out = [S::zero(), S::zero(), S::zero()];
    out[label.y.value() as usize] = b_y.clone();
    out[(label.y + delta).value() as usize] = b_y.clone() + v0.clone();
    out[(label.y + delta + delta).value() as usize] = b_y + v0 + vd;
    let [o0, o1, o2] = out;
    Ok(TriangleTriple::new(o0, o1, o2))
}

/// Transform recorded by [`canonical_label`]: the original operator is
/// recovered from the canonical one as `M_canonical * J^{j_power}`, followed
/// by the point symmetry `X -> 2/3 (I + J + J^2) - X` when flagged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelTransform {
    pub j_power: Mod3,
    pub point_symmetric: bool,
}

/// Reduce a label to one of the three canonical forms `00/01`, `01/01`,
/// `02/01` using the shift identities and point symmetry, keeping the
/// parameters `(eta, eta')` fixed.
pub fn canonical_label(label: MedianLabel) -> (MedianLabel, LabelTransform) {
    // Simultaneous shift to w = 0.
    let d = label.x - label.w;
    let mut y = label.y - label.w;
    let mut z = label.z - label.w;
    let mut point_symmetric = false;
    if z - y == Mod3::TWO {
        std::mem::swap(&mut y, &mut z);
        point_symmetric = true;
    }
    // Now z - y = 1; slide (y, z) down to (0, 1), which multiplies by J^{2y}
    // on the right.
    let j_power = y + y;
    let canonical = MedianLabel::new(Mod3::ZERO, d, Mod3::ZERO, Mod3::ONE).unwrap();
    (
        canonical,
        LabelTransform {
            j_power,
            point_symmetric,
        },
    )
}

/// Rebuild the operator of `label` from its canonical reduction; equals
/// `median_op(label, e)` exactly.
pub fn from_canonical<S: Scalar>(
    canonical: MedianLabel,
    transform: LabelTransform,
    e: &EtaPair<S>,
) -> CircOp<S> {
    let mut op = median_op(canonical, e).compose(&CircOp::j_power(transform.j_power));
    if transform.point_symmetric {
        op = point_symmetry(&op);
    }
    op
}

/// `X -> 2N - X` with `N = (I + J + J^2)/3`: the two orderings of `(y, z)`
/// give triangles point-symmetric about the centroid.
fn point_symmetry<S: Scalar>(op: &CircOp<S>) -> CircOp<S> {
    let n = centroid_projector::<S>();
    let (na, nb, ng) = n.coeffs();
    let (a, b, g) = op.coeffs();
    let two = S::from_int(2);
    CircOp::new(
        two.clone() * na.clone() - a.clone(),
        two.clone() * nb.clone() - b.clone(),
        two * ng.clone() - g.clone(),
    )
    .expect("affine combination stays in the monoid")
}

/// `N = (I + J + J^2)/3`, the projector onto the centroid line.
pub fn centroid_projector<S: Scalar>() -> CircOp<S> {
    let third = S::from_rational(&rat(1, 3));
    CircOp::new(third.clone(), third.clone(), third).expect("coefficients sum to 1")
}

/// Composite closed form in cevian parameters:
/// `(p1, q1)` with `M^{wx/yz}_{p,q} = S_{p1,q1}`.
pub fn table1_pq<S: Scalar>(label: MedianLabel, pq: &PQPair<S>) -> Result<PQPair<S>, Error> {
    median_eta(label, &EtaPair::from_pq(pq)).to_pq()
}

/// The unique solution of `M^{wx/yz}[eta, eta'] = S[eta, eta']`, namely
/// `(J^x + J^y - J^z)^{-1} J^w`, computed through the Fourier multipliers.
pub fn fixed_point_op<S: Scalar>(label: MedianLabel) -> CircOp<S> {
    let mut coeff = [S::zero(), S::zero(), S::zero()];
    coeff[label.x.value() as usize] = coeff[label.x.value() as usize].clone() + S::one();
    coeff[label.y.value() as usize] = coeff[label.y.value() as usize].clone() + S::one();
    coeff[label.z.value() as usize] = coeff[label.z.value() as usize].clone() - S::one();
    let [c0, c1, c2] = coeff;
    let a = CircOp::new(c0, c1, c2).expect("coefficients sum to 1");
    let inv = a
        .try_inverse()
        .expect("sums of three distinct-power units never vanish");
    inv.compose(&CircOp::j_power(label.w))
}

/// All `(p, q)` with `p*q != 1` and `S_{p,q}` equal to the fixed-point
/// operator of the label, out of the candidate families the classification
/// enumerates: vertex permutations `(0,0), (1,0), (0,1)` (representatives of
/// one-parameter families), midpoint pairs `(0,1/2), (1/2,0)`, and the six
/// Routh pairs. Every returned pair is verified exactly. The empty vector
/// means no valid `(p, q)` exists (the `(I + J)/2` rows).
pub fn fixed_point_pq_solutions<S: Scalar>(label: MedianLabel) -> Vec<PQPair<S>> {
    let target = fixed_point_op::<S>(label);
    let mut out = Vec::new();
    for (pn, pd, qn, qd) in [
        // vertex permutations (family representatives)
        (1, 1, 0, 1),
        (0, 1, 1, 1),
        (0, 1, 0, 1),
        // midpoint cases
        (0, 1, 1, 2),
        (1, 2, 0, 1),
        // Routh pairs
        (4, 5, 2, 3),
        (1, 5, 1, 3),
        (2, 3, 1, 3),
        (1, 3, 2, 3),
        (1, 3, 1, 5),
        (2, 3, 4, 5),
    ] {
        let pq = PQPair::new(
            S::from_rational(&rat(pn, pd)),
            S::from_rational(&rat(qn, qd)),
        )
        .expect("candidate pairs satisfy p*q != 1");
        if CircOp::from_pq(&pq).eq_within(&target, 1e-12) {
            out.push(pq);
        }
    }
    out
}

/// Coefficient-wise linear combination; the callers keep the sums affine.
fn lin<S: Scalar>(terms: &[(Rational, CircOp<S>)]) -> CircOp<S> {
    let mut acc = (S::zero(), S::zero(), S::zero());
    for (weight, op) in terms {
        let w = S::from_rational(weight);
        let (a, b, g) = op.coeffs();
        acc.0 = acc.0 + w.clone() * a.clone();
        acc.1 = acc.1 + w.clone() * b.clone();
        acc.2 = acc.2 + w * g.clone();
    }
    CircOp::new(acc.0, acc.1, acc.2).expect("affine combination stays in the monoid")
}

/// Exact verification of the eight identity families relating cevian and
/// median operators, at `count` seeded random points of Q(zeta_12)^2 and all
/// label representatives.
pub fn identity_suite(seed: u64, count: usize) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new("identities", seed);
    let w = Cyc12::omega();
    let w2 = w.clone() * w.clone();
    let j = CircOp::<Cyc12>::j_power(Mod3::ONE);
    let j2 = CircOp::<Cyc12>::j_power(Mod3::TWO);
    let labels = MedianLabel::representatives();

    let mut fails = [0usize; 8];
    for _ in 0..count {
        let e = EtaPair::new(Cyc12::random_small(&mut rng), Cyc12::random_small(&mut rng));
        let rotated = EtaPair::new(
            e.eta.clone() * w.clone(),
            e.eta_prime.clone() * w2.clone(),
        );
        let rotated_back = EtaPair::new(
            e.eta.clone() * w2.clone(),
            e.eta_prime.clone() * w.clone(),
        );

        // (1) S[eta, eta'] = S[eta w, eta' w^-1] J = J S[eta w, eta' w^-1]
        let s = CircOp::from_eta(&e);
        let s_rot = CircOp::from_eta(&rotated);
        if s != s_rot.compose(&j) || s != j.compose(&s_rot) {
            fails[0] += 1;
        }

        for &label in &labels {
            let m = median_op(label, &e);
            // (2) simultaneous shift
            if m != median_op(label.shift(1, 1, 1, 1), &e) {
                fails[1] += 1;
            }
            // (3) M J = M^{w+1, x+1/yz}
            if m.compose(&j) != median_op(label.shift(1, 1, 0, 0), &e) {
                fails[2] += 1;
            }
            // (4) M J^2 = M^{wx/y+1, z+1}
            if m.compose(&j2) != median_op(label.shift(0, 0, 1, 1), &e) {
                fails[3] += 1;
            }
            // (5) parameter rotation against x-shift
            if m != median_op(label.shift(0, 1, 0, 0), &rotated)
                || m != median_op(label.shift(0, -1, 0, 0), &rotated_back)
            {
                fails[4] += 1;
            }
            // (7) point symmetry pair averages to the centroid projector
            let avg = lin(&[
                (rat(1, 2), m.clone()),
                (rat(1, 2), median_op(label.swapped(), &e)),
            ]);
            if avg != centroid_projector() {
                fails[6] += 1;
            }
            // (8) constant shift of the parameters against J^x
            let shifted = EtaPair::new(
                Cyc12::omega_pow(label.x - label.w) + e.eta.clone(),
                Cyc12::omega_pow(label.w - label.x) + e.eta_prime.clone(),
            );
            let base = MedianLabel::new(Mod3::ZERO, Mod3::ZERO, label.y, label.z).unwrap();
            let ones = EtaPair::new(
                Cyc12::one() + e.eta.clone(),
                Cyc12::one() + e.eta_prime.clone(),
            );
            let rhs = CircOp::j_power(label.x).compose(&median_op(base, &ones));
            if median_op(label, &shifted) != rhs {
                fails[7] += 1;
            }
        }

        // (6) sum over the middle label index
        for wlab in Mod3::all() {
            for y in Mod3::all() {
                for z in Mod3::all() {
                    if y == z {
                        continue;
                    }
                    let term = |x: Mod3| {
                        median_op(MedianLabel::new(wlab, x, y, z).unwrap(), &e)
                    };
                    let lhs = lin(&[
                        (rat(1, 3), term(Mod3::ZERO)),
                        (rat(1, 3), term(Mod3::ONE)),
                        (rat(1, 3), term(Mod3::TWO)),
                    ]);
                    let rhs = lin(&[
                        (rat(1, 3), CircOp::j_power(wlab + y + z)),
                        (rat(2, 3), CircOp::j_power(wlab - y)),
                    ]);
                    if lhs != rhs {
                        fails[5] += 1;
                    }
                }
            }
        }
    }

    for (idx, &failures) in fails.iter().enumerate() {
        report.record(
            format!("identity-{}", idx + 1),
            failures == 0,
            format!("{count} random points, {failures} failures"),
        );
    }
    report
}

/// The five published closed-form rows of the label-to-cevian translation,
/// checked symbolically against the composite route at `samples` random
/// rational points each (exact equality after clearing denominators).
pub fn table1_suite(seed: u64, samples: usize) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new("table1", seed);

    type Row = (
        &'static str,
        fn(&Rational, &Rational) -> (Rational, Rational, Rational, Rational),
    );
    // (p1_num, p1_den, q1_num, q1_den) as polynomials in (p, q).
    let rows: [Row; 5] = [
        ("00/01", |p, q| {
            let pq = p * q;
            (
                &pq * rat(2, 1) + p - q - rat(2, 1),
                &pq * rat(4, 1) - p - q * rat(2, 1) - rat(1, 1),
                -(p - rat(2, 1)),
                p + rat(1, 1),
            )
        }),
        ("01/01", |p, q| {
            let pq = p * q;
            (
                &pq * rat(4, 1) - p * rat(2, 1) - q - rat(1, 1),
                &pq * rat(2, 1) - p + q - rat(2, 1),
                -(q + rat(1, 1)),
                q - rat(2, 1),
            )
        }),
        ("02/01", |p, q| {
            let pq = p * q;
            (
                p + q * rat(2, 1) - rat(3, 1),
                p * rat(2, 1) + q - rat(3, 1),
                &pq * rat(3, 1) - p * rat(2, 1) - q,
                &pq * rat(3, 1) - p - q * rat(2, 1),
            )
        }),
        ("00/12", |p, q| {
            let pq = p * q;
            (
                -((p - rat(2, 1)) * (q - rat(1, 1))),
                &pq + p * rat(2, 1) + q - rat(4, 1),
                (p * rat(2, 1) - rat(1, 1)) * (q - rat(1, 1)),
                &pq * rat(4, 1) - p - q * rat(2, 1) - rat(1, 1),
            )
        }),
        ("00/20", |p, q| {
            let pq = p * q;
            (
                p * rat(2, 1) - rat(1, 1),
                p + rat(1, 1),
                &pq * rat(2, 1) + p - q - rat(2, 1),
                &pq + p * rat(2, 1) + q - rat(4, 1),
            )
        }),
    ];

    for (name, closed_form) in rows {
        let label = MedianLabel::parse(name).unwrap();
        let mut checked = 0usize;
        let mut failures = 0usize;
        let mut guard = 0usize;
        while checked < samples && guard < samples * 100 {
            guard += 1;
            let p = rat(
                rand::Rng::gen_range(&mut rng, -9..=9),
                rand::Rng::gen_range(&mut rng, 1..=9),
            );
            let q = rat(
                rand::Rng::gen_range(&mut rng, -9..=9),
                rand::Rng::gen_range(&mut rng, 1..=9),
            );
            let (p1n, p1d, q1n, q1d) = closed_form(&p, &q);
            if p1d.is_zero() || q1d.is_zero() {
                continue;
            }
            let Ok(pq) = PQPair::new(
                Cyc12::from_rational(&p),
                Cyc12::from_rational(&q),
            ) else {
                continue;
            };
            let Ok(composite) = table1_pq(label, &pq) else {
                continue;
            };
            checked += 1;
            // Cross-multiplied comparison against the printed rational
            // functions.
            let ok = composite.p().clone() * Cyc12::from_rational(&p1d)
                == Cyc12::from_rational(&p1n)
                && composite.q().clone() * Cyc12::from_rational(&q1d)
                    == Cyc12::from_rational(&q1n);
            if !ok {
                failures += 1;
            }
        }
        report.record(
            format!("table1-{name}"),
            failures == 0 && checked == samples,
            format!("{checked} samples, {failures} failures"),
        );
    }
    report
}

/// Published fixed-point table: 18 rows of `(alpha, beta, gamma)` and the
/// classification of the `(p, q)` solutions.
pub const FIXED_POINT_TABLE: [(&str, (i64, i64), (i64, i64), (i64, i64)); 18] = [
    ("00/01", (4, 7), (2, 7), (1, 7)),
    ("01/01", (1, 1), (0, 1), (0, 1)),
    ("02/01", (1, 2), (1, 2), (0, 1)),
    ("00/10", (0, 1), (0, 1), (1, 1)),
    ("01/10", (1, 7), (2, 7), (4, 7)),
    ("02/10", (0, 1), (1, 2), (1, 2)),
    ("00/02", (4, 7), (1, 7), (2, 7)),
    ("01/02", (1, 2), (0, 1), (1, 2)),
    ("02/02", (1, 1), (0, 1), (0, 1)),
    ("00/20", (0, 1), (1, 1), (0, 1)),
    ("01/20", (0, 1), (1, 2), (1, 2)),
    ("02/20", (1, 7), (4, 7), (2, 7)),
    ("00/12", (1, 2), (0, 1), (1, 2)),
    ("01/12", (2, 7), (1, 7), (4, 7)),
    ("02/12", (0, 1), (0, 1), (1, 1)),
    ("00/21", (1, 2), (1, 2), (0, 1)),
    ("01/21", (0, 1), (1, 1), (0, 1)),
    ("02/21", (2, 7), (4, 7), (1, 7)),
];

/// The six Routh rows and their unique `(p, q)` pairs.
pub const ROUTH_PAIRS: [(&str, (i64, i64), (i64, i64)); 6] = [
    ("00/01", (4, 5), (2, 3)),
    ("01/10", (1, 5), (1, 3)),
    ("00/02", (2, 3), (1, 3)),
    ("02/20", (1, 3), (2, 3)),
    ("01/12", (1, 3), (1, 5)),
    ("02/21", (2, 3), (4, 5)),
];

/// Verify the fixed-point table and the Routh solutions exactly.
pub fn fixed_point_suite() -> Report {
    let mut report = Report::new("fixedpoints", 0);
    for (name, a, b, g) in FIXED_POINT_TABLE {
        let label = MedianLabel::parse(name).unwrap();
        let expected = CircOp::new(
            Cyc12::from_rational(&rat(a.0, a.1)),
            Cyc12::from_rational(&rat(b.0, b.1)),
            Cyc12::from_rational(&rat(g.0, g.1)),
        )
        .unwrap();
        let got = fixed_point_op::<Cyc12>(label);
        report.record(
            format!("fixedpoint-{name}"),
            got == expected,
            format!("expected {expected}, got {got}"),
        );
    }
    for (name, p, q) in ROUTH_PAIRS {
        let label = MedianLabel::parse(name).unwrap();
        let pq = PQPair::new(
            Cyc12::from_rational(&rat(p.0, p.1)),
            Cyc12::from_rational(&rat(q.0, q.1)),
        )
        .unwrap();
        // M^{label}_{p,q} = S_{p,q} exactly.
        let median = median_op(label, &EtaPair::from_pq(&pq));
        let cevian = CircOp::from_pq(&pq);
        let solutions = fixed_point_pq_solutions::<Cyc12>(label);
        let unique = solutions.len() == 1 && solutions[0] == pq;
        report.record(
            format!("routh-{name}"),
            median == cevian && unique,
            format!("pair ({}, {})", pq.p(), pq.q()),
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse;
    use crate::ExactTriple;
    use num::complex::Complex64;
    use rand::Rng;

    fn label(s: &str) -> MedianLabel {
        MedianLabel::parse(s).unwrap()
    }

    fn random_triple(rng: &mut ChaCha8Rng) -> ExactTriple {
        TriangleTriple::new(
            Cyc12::random_small(rng),
            Cyc12::random_small(rng),
            Cyc12::random_small(rng),
        )
    }

    #[test]
    fn label_parsing() {
        assert_eq!(label("02/01").to_string(), "02/01");
        assert!(MedianLabel::parse("00/11").is_err());
        assert!(MedianLabel::parse("03/01").is_err());
        assert!(MedianLabel::parse("0001").is_err());
        assert_eq!(MedianLabel::representatives().len(), 18);
        assert_eq!(MedianLabel::all().len(), 54);
    }

    #[test]
    fn median_eta_recovers_hajja_operator() {
        // M^{00/12} at the eta-parameters of S_{0,1-s} is S[s+w, s+w^2].
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        for _ in 0..30 {
            let s = Cyc12::random_rational(&mut rng);
            let Ok(pq) = PQPair::new(Cyc12::zero(), Cyc12::one() - s.clone()) else {
                continue;
            };
            let e = median_eta(label("00/12"), &EtaPair::from_pq(&pq));
            assert_eq!(e.eta, s.clone() + Cyc12::omega());
            assert_eq!(e.eta_prime, s.clone() + Cyc12::omega().pow(2));
        }
    }

    #[test]
    fn median_eta_at_unit_parameters() {
        // Label 00/01 at (1, 1): both numerators vanish, so M = S[0, 0],
        // which is S_{1/2,1/2}, the centroid projector.
        let e = median_eta(label("00/01"), &EtaPair::new(Cyc12::one(), Cyc12::one()));
        assert_eq!(e, EtaPair::new(Cyc12::zero(), Cyc12::zero()));
        let half = Cyc12::from_rational(&rat(1, 2));
        let s_half = CircOp::from_pq(&PQPair::new(half.clone(), half).unwrap());
        assert_eq!(CircOp::from_eta(&e), s_half);
        assert_eq!(s_half, centroid_projector());
        // With x = w the side vectors of the pair (d, S[1,1] d) all vanish.
        // A label with x != w at (1, 1) instead reproduces the identity.
        let e = median_eta(label("01/01"), &EtaPair::new(Cyc12::one(), Cyc12::one()));
        assert_eq!(CircOp::from_eta(&e), CircOp::identity());
    }

    #[test]
    fn median_eta_generic_00_01() {
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        let e = EtaPair::new(Cyc12::random_small(&mut rng), Cyc12::random_small(&mut rng));
        let m = median_eta(label("00/01"), &e);
        let w = Cyc12::omega();
        let expected = EtaPair::new(
            (e.eta.clone() - Cyc12::one())
                .try_div(&(w.pow(2) - Cyc12::one()))
                .unwrap(),
            (e.eta_prime.clone() - Cyc12::one())
                .try_div(&(w - Cyc12::one()))
                .unwrap(),
        );
        assert_eq!(m, expected);
    }

    #[test]
    fn proposition_matrix_identity() {
        // (J^z - J^y) M = J^x S[eta, eta'] - J^w as raw circulants.
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        let sub = |a: &CircOp<Cyc12>, b: &CircOp<Cyc12>| {
            let (a0, a1, a2) = a.coeffs();
            let (b0, b1, b2) = b.coeffs();
            (
                a0.clone() - b0.clone(),
                a1.clone() - b1.clone(),
                a2.clone() - b2.clone(),
            )
        };
        for _ in 0..20 {
            let e = EtaPair::new(Cyc12::random_small(&mut rng), Cyc12::random_small(&mut rng));
            for lab in MedianLabel::all() {
                let m = median_op(lab, &e);
                let jz = CircOp::<Cyc12>::j_power(lab.z);
                let jy = CircOp::<Cyc12>::j_power(lab.y);
                let lhs = sub(&jz.compose(&m), &jy.compose(&m));
                let s = CircOp::from_eta(&e);
                let rhs = sub(
                    &CircOp::<Cyc12>::j_power(lab.x).compose(&s),
                    &CircOp::<Cyc12>::j_power(lab.w),
                );
                assert_eq!(lhs, rhs, "label {lab}");
            }
        }
    }

    #[test]
    fn oracle_agrees_with_operator_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(54);
        for _ in 0..100 {
            let e = EtaPair::new(Cyc12::random_small(&mut rng), Cyc12::random_small(&mut rng));
            let d = random_triple(&mut rng);
            let d_prime = CircOp::from_eta(&e).apply(&d);
            for lab in MedianLabel::representatives() {
                let via_oracle = median_oracle(lab, &d, &d_prime).unwrap();
                let via_operator = median_apply(lab, &e, &d);
                assert_eq!(via_oracle, via_operator, "label {lab}");
            }
        }
    }

    #[test]
    fn oracle_on_figure_one_data() {
        let d = parse::parse_exact_triple("(0, 1, (7+8i)/10)").unwrap();
        let pq = PQPair::new(
            Cyc12::from_rational(&rat(4, 5)),
            Cyc12::from_re_im(rat(2, 3), rat(4, 3)),
        )
        .unwrap();
        let e = EtaPair::from_pq(&pq);
        let d_prime = CircOp::from_pq(&pq).apply(&d);
        let oracle = median_oracle(label("00/01"), &d, &d_prime).unwrap();
        assert_eq!(oracle, median_apply(label("00/01"), &e, &d));
    }

    #[test]
    fn oracle_zero_vector_case_collapses_to_centroid() {
        // w = x and d' = d makes every side vector zero.
        let d = parse::parse_exact_triple("(0, 1, i)").unwrap();
        let out = median_oracle(label("00/01"), &d, &d).unwrap();
        let g = d.centroid();
        assert_eq!(out, TriangleTriple::new(g.clone(), g.clone(), g));
    }

    #[test]
    fn oracle_rejects_non_concentroid_input() {
        let d = parse::parse_exact_triple("(0, 1, i)").unwrap();
        let shifted = d.map(|v| v.clone() + Cyc12::one());
        assert_eq!(
            median_oracle(label("00/01"), &d, &shifted),
            Err(Error::InconsistentSystem)
        );
    }

    #[test]
    fn classical_median_triangle_of_euler_prototype() {
        // The 1/2-median of (0, 1, lambda) matches the classical median
        // construction: sides parallel to the medians, shared centroid.
        let d = parse::parse_exact_triple("(0, 1, 0.7+0.5i)").unwrap();
        let pq = PQPair::new(Cyc12::zero(), Cyc12::from_rational(&rat(1, 2))).unwrap();
        let mid = CircOp::from_pq(&pq).apply(&d);
        let m = median_apply(label("00/01"), &EtaPair::from_pq(&pq), &d);
        // Side a''_0 -> a''_1 equals the median vector a_0 -> a'_0.
        assert_eq!(
            m.vertex(1).clone() - m.vertex(0).clone(),
            mid.vertex(0).clone() - d.vertex(0).clone()
        );
        assert_eq!(m.centroid(), d.centroid());
    }

    #[test]
    fn hajja_s_median_matches_amid_construction() {
        // The s-median of (0, 1, lambda) at s = 1/2 equals the classical
        // median triangle up to labels (00/12 vs 00/01 relabeling).
        let d = parse::parse_exact_triple("(0, 1, 0.7+0.5i)").unwrap();
        let pq = PQPair::new(Cyc12::zero(), Cyc12::from_rational(&rat(1, 2))).unwrap();
        let e = EtaPair::from_pq(&pq);
        let h = median_apply(label("00/12"), &e, &d);
        let classic = median_apply(label("00/01"), &e, &d);
        // Same triangle, vertices shifted by one position.
        assert_eq!(h.j_apply(Mod3::ONE), classic);
    }

    #[test]
    fn canonical_label_examples() {
        let (canon, tr) = canonical_label(label("11/12"));
        assert_eq!(canon, label("00/01"));
        assert_eq!(tr.j_power, Mod3::ZERO);
        assert!(!tr.point_symmetric);

        let (canon, tr) = canonical_label(label("12/12"));
        assert_eq!(canon, label("01/01"));
        assert!(!tr.point_symmetric);

        let (canon, tr) = canonical_label(label("00/10"));
        assert_eq!(canon, label("00/01"));
        assert!(tr.point_symmetric);
    }

    #[test]
    fn canonical_label_reconstructs_all_operators() {
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        for _ in 0..20 {
            let e = EtaPair::new(Cyc12::random_small(&mut rng), Cyc12::random_small(&mut rng));
            for lab in MedianLabel::all() {
                let (canon, tr) = canonical_label(lab);
                assert!(matches!(
                    canon.to_string().as_str(),
                    "00/01" | "01/01" | "02/01"
                ));
                assert_eq!(
                    from_canonical(canon, tr, &e),
                    median_op(lab, &e),
                    "label {lab}"
                );
            }
        }
    }

    #[test]
    fn identity_suite_passes() {
        let report = identity_suite(1, 20);
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.checks.len(), 8);
    }

    #[test]
    fn identity_examples_at_fixed_points() {
        // (4.7) at label 00/01, (eta, eta') = (2, 3).
        let e = EtaPair::new(Cyc12::from_int(2), Cyc12::from_int(3));
        let avg = lin(&[
            (rat(1, 2), median_op(label("00/01"), &e)),
            (rat(1, 2), median_op(label("00/10"), &e)),
        ]);
        assert_eq!(avg, centroid_projector());

        // (4.6) at (5, 7), w = 1, y = 0, z = 2.
        let e = EtaPair::new(Cyc12::from_int(5), Cyc12::from_int(7));
        let lhs = lin(&[
            (rat(1, 3), median_op(label("10/02"), &e)),
            (rat(1, 3), median_op(label("11/02"), &e)),
            (rat(1, 3), median_op(label("12/02"), &e)),
        ]);
        let rhs = lin(&[
            (rat(1, 3), CircOp::j_power(Mod3::ZERO)),
            (rat(2, 3), CircOp::j_power(Mod3::ONE)),
        ]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn table1_suite_passes() {
        let report = table1_suite(7, 20);
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn table1_hajja_row() {
        // 00/12 at (p, q) = (0, 1-s): (2s/(s+3), s/(2s-3)).
        let mut rng = ChaCha8Rng::seed_from_u64(56);
        for _ in 0..20 {
            let s = rat(rng.gen_range(-9..=9), rng.gen_range(1..=9));
            // s = 3 lands on p1 q1 = 1; the other two are denominator poles.
            if s == rat(-3, 1) || s == rat(3, 2) || s == rat(3, 1) || s.is_zero() {
                continue;
            }
            let pq = PQPair::new(
                Cyc12::zero(),
                Cyc12::from_rational(&(Rational::one() - &s)),
            )
            .unwrap();
            let got = table1_pq(label("00/12"), &pq).unwrap();
            let p1 = &s * rat(2, 1) / (&s + rat(3, 1));
            let q1 = &s / (&s * rat(2, 1) - rat(3, 1));
            assert_eq!(got.p(), &Cyc12::from_rational(&p1));
            assert_eq!(got.q(), &Cyc12::from_rational(&q1));
        }
    }

    #[test]
    fn fixed_point_examples() {
        let op = fixed_point_op::<Cyc12>(label("00/01"));
        assert_eq!(
            op,
            CircOp::new(
                Cyc12::from_rational(&rat(4, 7)),
                Cyc12::from_rational(&rat(2, 7)),
                Cyc12::from_rational(&rat(1, 7)),
            )
            .unwrap()
        );
        assert_eq!(fixed_point_op::<Cyc12>(label("01/01")), CircOp::identity());
        assert_eq!(
            fixed_point_op::<Cyc12>(label("00/12")),
            CircOp::new(
                Cyc12::from_rational(&rat(1, 2)),
                Cyc12::zero(),
                Cyc12::from_rational(&rat(1, 2)),
            )
            .unwrap()
        );
    }

    #[test]
    fn fixed_point_suite_passes() {
        let report = fixed_point_suite();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.checks.len(), 24);
    }

    #[test]
    fn fixed_point_pq_solution_kinds() {
        // Routh row: unique nontrivial pair.
        let sols = fixed_point_pq_solutions::<Cyc12>(label("00/01"));
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].p(), &Cyc12::from_rational(&rat(4, 5)));
        assert_eq!(sols[0].q(), &Cyc12::from_rational(&rat(2, 3)));

        let sols = fixed_point_pq_solutions::<Cyc12>(label("01/12"));
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].p(), &Cyc12::from_rational(&rat(1, 3)));
        assert_eq!(sols[0].q(), &Cyc12::from_rational(&rat(1, 5)));

        // (I + J)/2 rows have no valid (p, q) among the candidates.
        assert!(fixed_point_pq_solutions::<Cyc12>(label("02/01")).is_empty());
        assert!(fixed_point_pq_solutions::<Cyc12>(label("00/21")).is_empty());

        // Midpoint rows.
        let sols = fixed_point_pq_solutions::<Cyc12>(label("02/10"));
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].p(), &Cyc12::zero());
        assert_eq!(sols[0].q(), &Cyc12::from_rational(&rat(1, 2)));
        let sols = fixed_point_pq_solutions::<Cyc12>(label("00/12"));
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].p(), &Cyc12::from_rational(&rat(1, 2)));
        assert_eq!(sols[0].q(), &Cyc12::zero());

        // Vertex permutation rows: the family representative.
        let sols = fixed_point_pq_solutions::<Cyc12>(label("01/01"));
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].p(), &Cyc12::one());
        let sols = fixed_point_pq_solutions::<Cyc12>(label("02/12"));
        assert_eq!(sols.len(), 1);
        assert_eq!(
            (sols[0].p(), sols[0].q()),
            (&Cyc12::zero(), &Cyc12::zero())
        );
    }

    #[test]
    fn hajja_alternative_median_forms() {
        // H_s as three different median operators away from the poles.
        let mut rng = ChaCha8Rng::seed_from_u64(57);
        for _ in 0..25 {
            let s = rat(rng.gen_range(-9..=9), rng.gen_range(1..=9));
            if s == rat(1, 1) || s == rat(2, 1) || s.is_zero() {
                continue;
            }
            let sc = Cyc12::from_rational(&s);
            let h = CircOp::from_eta(&EtaPair::new(
                sc.clone() + Cyc12::omega(),
                sc.clone() + Cyc12::omega().pow(2),
            ));
            let one = Rational::one();
            let forms = [
                ("00/01", (&s - rat(2, 1)) / (&s - &one), &s / (&s - &one)),
                ("01/01", &s / rat(2, 1), Rational::one() / (&s - &one)),
                (
                    "02/01",
                    Rational::one() / (&one - &s),
                    (rat(2, 1) - &s) / rat(2, 1),
                ),
            ];
            for (name, p, q) in forms {
                let Ok(pq) = PQPair::new(Cyc12::from_rational(&p), Cyc12::from_rational(&q))
                else {
                    continue;
                };
                assert_eq!(
                    median_op(label(name), &EtaPair::from_pq(&pq)),
                    h,
                    "form {name} at s = {s}"
                );
            }
        }
    }

    #[test]
    fn oracle_holds_in_double_precision() {
        let mut rng = ChaCha8Rng::seed_from_u64(58);
        for _ in 0..20 {
            let e = EtaPair::new(
                Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)),
                Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)),
            );
            let d = TriangleTriple::new(
                Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)),
                Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)),
                Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)),
            );
            let d_prime = CircOp::from_eta(&e).apply(&d);
            for lab in MedianLabel::representatives() {
                let via_oracle = median_oracle(lab, &d, &d_prime).unwrap();
                let via_operator = median_apply(lab, &e, &d);
                assert!(via_oracle.distance(&via_operator) < 1e-12);
            }
        }
    }
}
