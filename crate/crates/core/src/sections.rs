//! Hyperplane sections of the determinant variety.
//!
//! A hyperplane `P(a;λ) = {x : tr(a·x) = λ}` meets `S2 = {det x = 0}` in a
//! quadric surface `SP(a;λ)`. Sections of `P(I;λ)` carry an orthonormal frame
//! (the Bell frame) with centre `(λ/2)·I` in which the section reads
//! `X² + Y² − Z² = λ²/2`; general sections are handled in rational affine
//! charts and classified up to affine equivalence.

use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::green::{rank_factorization, ProjLine};
use crate::mat2::{Mat2, Mat2Ext};
use crate::number::{int, rat, QuadExt, Rational, Sign};
use crate::symmetric::{self, SymMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    pub a: Mat2,
    pub lambda: Rational,
}

impl Hyperplane {
    pub fn new(a: Mat2, lambda: Rational) -> Self {
        Hyperplane { a, lambda }
    }

    /// `tr(a·x) = λ`.
    pub fn contains(&self, x: &Mat2) -> bool {
        (&self.a * x).trace() == self.lambda
    }

    /// Membership in `SP(a;λ)`: on the hyperplane and singular.
    pub fn section_contains(&self, x: &Mat2) -> bool {
        self.contains(x) && x.det().is_zero()
    }

    /// The same hyperplane written as `P(a/λ; 1)`.
    pub fn normalize(&self) -> Result<Hyperplane> {
        if self.lambda.is_zero() {
            return Err(Error::ZeroLambda);
        }
        Ok(Hyperplane {
            a: self.a.scale(&(Rational::one() / &self.lambda)),
            lambda: Rational::one(),
        })
    }

    /// Coefficients `w` with `tr(a·x) = Σ wᵢ·xᵢ` in row-major coordinates.
    pub fn functional(&self) -> [Rational; 4] {
        self.a.transpose().into_entries()
    }
}

/// Coordinates in the Bell frame of `P(I;λ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BellPoint {
    pub x: QuadExt,
    pub y: QuadExt,
    pub z: QuadExt,
    pub lambda: Rational,
}

/// Bell coordinates of a rational point of `P(I;λ)`.
pub fn to_bell(m: &Mat2, lambda: &Rational) -> Result<BellPoint> {
    to_bell_ext(&Mat2Ext::from(m), lambda)
}

/// `X = (x1−x4)/√2`, `Y = (x2+x3)/√2`, `Z = (x3−x2)/√2`.
pub fn to_bell_ext(m: &Mat2Ext, lambda: &Rational) -> Result<BellPoint> {
    if m.trace() != QuadExt::from_rational(lambda.clone()) {
        return Err(Error::NotOnHyperplane);
    }
    let [x1, x2, x3, x4] = &m.0;
    let s = QuadExt::inv_sqrt2();
    Ok(BellPoint {
        x: &(x1 - x4) * &s,
        y: &(x2 + x3) * &s,
        z: &(x3 - x2) * &s,
        lambda: lambda.clone(),
    })
}

/// Inverse of [`to_bell`]:
/// `x1 = λ/2 + X/√2`, `x2 = (Y−Z)/√2`, `x3 = (Y+Z)/√2`, `x4 = λ/2 − X/√2`.
pub fn from_bell(p: &BellPoint) -> Mat2Ext {
    let s = QuadExt::inv_sqrt2();
    let half = QuadExt::from_rational(&p.lambda / int(2));
    let xs = &p.x * &s;
    Mat2Ext([
        &half + &xs,
        &(&p.y - &p.z) * &s,
        &(&p.y + &p.z) * &s,
        &half - &xs,
    ])
}

/// `X² + Y² − Z² − λ²/2` with `λ = tr x`; equals `−2·det x`.
pub fn bell_residual(m: &Mat2) -> Rational {
    let lambda = m.trace();
    let p = to_bell(m, &lambda).expect("trace matches by construction");
    let lhs = &(&(&p.x * &p.x) + &(&p.y * &p.y)) - &(&p.z * &p.z);
    let value = &lhs - &QuadExt::from_rational(&lambda * &lambda / int(2));
    value
        .as_rational()
        .cloned()
        .expect("squares of Bell coordinates are rational")
}

/// The Bell quadratic form `X² + Y² − Z²`.
pub fn bell_form() -> SymMatrix {
    SymMatrix::diag(&[int(1), int(1), int(-1)])
}

/// `det(p + Σ tᵢ·vᵢ) = tᵀ·Q·t + bᵀ·t + c` in a rational affine chart of a
/// hyperplane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineQuadric3 {
    pub q: SymMatrix,
    pub b: [Rational; 3],
    pub c: Rational,
    pub origin: Mat2,
    pub basis: [Mat2; 3],
}

impl AffineQuadric3 {
    /// Expands `det` in the chart `t ↦ origin + Σ tᵢ·basisᵢ`.
    ///
    /// With the polar form `B(x,y) = (det(x+y) − det x − det y)/2`:
    /// `Q_ij = B(vᵢ,vⱼ)`, `b_i = 2·B(p,vᵢ)`, `c = det p`.
    pub fn from_chart(origin: Mat2, basis: [Mat2; 3]) -> Self {
        let half = rat(1, 2);
        let mut q = SymMatrix::zeros(3);
        for i in 0..3 {
            for j in i..3 {
                q.set(i, j, basis[i].det_polar(&basis[j]) * &half);
            }
        }
        let b = [0, 1, 2].map(|i| origin.det_polar(&basis[i]));
        let c = origin.det();
        AffineQuadric3 {
            q,
            b,
            c,
            origin,
            basis,
        }
    }

    /// `tᵀQt + bᵀt + c`.
    pub fn eval(&self, t: &[Rational; 3]) -> Rational {
        let linear = self
            .b
            .iter()
            .zip(t)
            .fold(Rational::zero(), |acc, (bi, ti)| acc + bi * ti);
        self.q.quadratic_form(t) + linear + &self.c
    }

    /// The ambient point with chart coordinates `t`.
    pub fn point(&self, t: &[Rational; 3]) -> Mat2 {
        self.basis
            .iter()
            .zip(t)
            .fold(self.origin.clone(), |acc, (v, ti)| acc + v.scale(ti))
    }

    /// Chart coordinates of `x`, if `x` lies in the chart's affine span.
    pub fn coordinates(&self, x: &Mat2) -> Option<[Rational; 3]> {
        let rhs = (x - &self.origin).into_entries();
        let rows: alloc::vec::Vec<alloc::vec::Vec<Rational>> = (0..4)
            .map(|r| self.basis.iter().map(|v| v.entries()[r].clone()).collect())
            .collect();
        let t = symmetric::solve(&rows, &rhs)?;
        let t = [t[0].clone(), t[1].clone(), t[2].clone()];
        (self.point(&t) == *x).then_some(t)
    }
}

/// Index of the coordinate eliminated by the standard chart of `h`: the first
/// `k` with a nonzero coefficient in `tr(a·x) = Σ wᵢ·xᵢ`.
pub fn standard_chart_pivot(h: &Hyperplane) -> Result<usize> {
    h.functional()
        .iter()
        .position(|w| !w.is_zero())
        .ok_or(Error::ZeroCoefficientMatrix)
}

/// Restriction of `det` to `P(a;λ)` in the standard chart: origin
/// `(λ/w_k)·E_k` and basis `E_j − (w_j/w_k)·E_k` for `j ≠ k`, so the chart
/// coordinates of a point are its entries other than the `k`-th.
pub fn restrict_quadric(h: &Hyperplane) -> Result<AffineQuadric3> {
    let k = standard_chart_pivot(h)?;
    let w = h.functional();
    let origin = Mat2::unit(k).scale(&(&h.lambda / &w[k]));
    let mut basis = (0..4)
        .filter(|&j| j != k)
        .map(|j| Mat2::unit(j) - Mat2::unit(k).scale(&(&w[j] / &w[k])));
    let basis = [
        basis.next().expect("three directions"),
        basis.next().expect("three directions"),
        basis.next().expect("three directions"),
    ];
    Ok(AffineQuadric3::from_chart(origin, basis))
}

/// Affine type of a real quadric surface in 3-space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuadricClass {
    Ellipsoid,
    HyperboloidOneSheet,
    HyperboloidTwoSheets,
    Cone,
    EllipticParaboloid,
    HyperbolicParaboloid,
    EllipticCylinder,
    HyperbolicCylinder,
    ParabolicCylinder,
    IntersectingPlanes,
    ParallelPlanes,
    CoincidentPlanes,
    SinglePlane,
    Line,
    Point,
    Empty,
    /// The equation vanishes identically.
    Space,
}

impl fmt::Display for QuadricClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Affine classification of `tᵀQt + bᵀt + c = 0`.
///
/// If the centre equation `Q·t = −b/2` is solvable the quadric is central
/// (possibly with a line or plane of centres) and is classified by the inertia
/// of `Q` and the sign of the value `c' = c + bᵀt₀/2` at a centre. Otherwise
/// the linear part survives and the type is parabolic.
pub fn classify_affine_quadric(quad: &AffineQuadric3) -> QuadricClass {
    use QuadricClass as C;
    let inertia = quad.q.inertia();
    let (p, n) = (inertia.plus, inertia.minus);
    let rank = inertia.rank();
    let half = rat(1, 2);
    let rhs: alloc::vec::Vec<Rational> = quad.b.iter().map(|bi| -(bi * &half)).collect();

    let Some(center) = symmetric::solve(&quad.q.rows(), &rhs) else {
        return match rank {
            2 if p == 1 => C::HyperbolicParaboloid,
            2 => C::EllipticParaboloid,
            1 => C::ParabolicCylinder,
            _ => C::SinglePlane,
        };
    };
    let at_center = quad
        .b
        .iter()
        .zip(&center)
        .fold(quad.c.clone(), |acc, (bi, ti)| acc + bi * ti * &half);
    // Number of squares whose sign matches the right-hand side −c'.
    let agreeing = match Sign::of(&at_center) {
        Sign::Negative => p,
        Sign::Positive => n,
        Sign::Zero => {
            let indefinite = p > 0 && n > 0;
            return match rank {
                3 if indefinite => C::Cone,
                3 => C::Point,
                2 if indefinite => C::IntersectingPlanes,
                2 => C::Line,
                1 => C::CoincidentPlanes,
                _ => C::Space,
            };
        }
    };
    match (rank, agreeing) {
        (3, 3) => C::Ellipsoid,
        (3, 2) => C::HyperboloidOneSheet,
        (3, 1) => C::HyperboloidTwoSheets,
        (2, 2) => C::EllipticCylinder,
        (2, 1) => C::HyperbolicCylinder,
        (1, 1) => C::ParallelPlanes,
        _ => C::Empty,
    }
}

/// Type of `SP(a;λ)`, decided from the rank of `a` and whether `λ = 0`.
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SectionClass {
    Empty,
    FullVariety,
    HyperboloidOneSheet,
    Cone,
    HyperbolicParaboloid,
    /// `SP(a;0)` for rank-one `a`: the L-class of `l_rep` and the R-class of
    /// `r_rep` together with the origin.
    TwoPuncturedPlanesPlusOrigin {
        l_rep: Mat2,
        r_rep: Mat2,
    },
}

impl SectionClass {
    pub fn name(&self) -> &'static str {
        match self {
            SectionClass::Empty => "Empty",
            SectionClass::FullVariety => "FullVariety",
            SectionClass::HyperboloidOneSheet => "HyperboloidOneSheet",
            SectionClass::Cone => "Cone",
            SectionClass::HyperbolicParaboloid => "HyperbolicParaboloid",
            SectionClass::TwoPuncturedPlanesPlusOrigin { .. } => "TwoPuncturedPlanesPlusOrigin",
        }
    }

    /// The affine quadric type the generic classifier must report for this
    /// section, when `a ≠ 0`.
    pub fn expected_quadric(&self) -> Option<QuadricClass> {
        match self {
            SectionClass::Empty | SectionClass::FullVariety => None,
            SectionClass::HyperboloidOneSheet => Some(QuadricClass::HyperboloidOneSheet),
            SectionClass::Cone => Some(QuadricClass::Cone),
            SectionClass::HyperbolicParaboloid => Some(QuadricClass::HyperbolicParaboloid),
            SectionClass::TwoPuncturedPlanesPlusOrigin { .. } => {
                Some(QuadricClass::IntersectingPlanes)
            }
        }
    }
}

impl fmt::Display for SectionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SectionClass::TwoPuncturedPlanesPlusOrigin { l_rep, r_rep } => {
                write!(f, "{} l_rep={l_rep} r_rep={r_rep}", self.name())
            }
            _ => f.write_str(self.name()),
        }
    }
}

pub fn classify_section(a: &Mat2, lambda: &Rational) -> SectionClass {
    let flat = lambda.is_zero();
    match a.rank() {
        0 if flat => SectionClass::FullVariety,
        0 => SectionClass::Empty,
        2 if flat => SectionClass::Cone,
        2 => SectionClass::HyperboloidOneSheet,
        _ if !flat => SectionClass::HyperbolicParaboloid,
        _ => {
            // a = c·rᵀ: SP(a;0) = {x·c = 0} ∪ {rᵀ·x = 0} inside S2. Both
            // planes contain r⊥·(c⊥)ᵀ, which has row line c⊥ and column line r⊥.
            let (c, r) = rank_factorization(a).expect("rank one");
            let c_perp = ProjLine::spanned_by(&c).expect("nonzero").perp().to_vec();
            let r_perp = ProjLine::spanned_by(&r).expect("nonzero").perp().to_vec();
            let rep = Mat2::outer(&r_perp, &c_perp);
            SectionClass::TwoPuncturedPlanesPlusOrigin {
                l_rep: rep.clone(),
                r_rep: rep,
            }
        }
    }
}

/// Metric data of the hyperboloid `SP(I;λ)` in its Bell frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperboloidMetrics {
    pub lambda: Rational,
    pub center: Mat2,
    /// Direction of the rotation axis: parallel to the skew-symmetric line.
    pub axis_dir: Mat2,
    /// Squared radius of the principal circular section `Z = 0`.
    pub radius_sq: Rational,
    /// Quadratic form of the asymptotic cone in Bell coordinates.
    pub asymptotic_q: SymMatrix,
}

pub fn hyperboloid_metrics(lambda: &Rational) -> HyperboloidMetrics {
    let half = lambda / int(2);
    HyperboloidMetrics {
        lambda: lambda.clone(),
        center: Mat2::diag(half.clone(), half),
        axis_dir: Mat2::int(0, 1, -1, 0),
        radius_sq: lambda * lambda / int(2),
        asymptotic_q: bell_form(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::green::{self, GreenRelation};

    fn e() -> Mat2 {
        Mat2::int(1, 0, 0, 0)
    }

    fn h(a: Mat2, l: Rational) -> Hyperplane {
        Hyperplane::new(a, l)
    }

    #[test]
    fn memberships() {
        let half = rat(1, 2);
        let x = Mat2::new(half.clone(), half.clone(), half.clone(), half);
        assert!(h(Mat2::identity(), int(1)).section_contains(&x));
        assert!(!h(Mat2::identity(), int(1)).contains(&Mat2::identity()));
        assert!(h(e(), int(1)).section_contains(&Mat2::int(1, 2, 3, 6)));
        assert!(!h(e(), int(1)).section_contains(&Mat2::int(1, 2, 3, 7)));
    }

    #[test]
    fn normalization() {
        let n = h(Mat2::identity(), int(2)).normalize().unwrap();
        assert_eq!(n, h(Mat2::diag(rat(1, 2), rat(1, 2)), int(1)));
        assert_eq!(h(e(), int(-1)).normalize().unwrap(), h(-e(), int(1)));
        assert_eq!(h(e(), int(0)).normalize(), Err(Error::ZeroLambda));
    }

    #[test]
    fn bell_examples() {
        let lambda = rat(3, 2);
        let center = Mat2::diag(&lambda / int(2), &lambda / int(2));
        let p = to_bell(&center, &lambda).unwrap();
        assert!(p.x.is_zero() && p.y.is_zero() && p.z.is_zero());

        // A = (λ/2 + 1/√2, 0, 0, λ/2 − 1/√2)
        let half = QuadExt::from_rational(&lambda / int(2));
        let a_point = Mat2Ext([
            &half + &QuadExt::inv_sqrt2(),
            QuadExt::zero(),
            QuadExt::zero(),
            &half - &QuadExt::inv_sqrt2(),
        ]);
        let p = to_bell_ext(&a_point, &lambda).unwrap();
        assert_eq!(
            (p.x.clone(), p.y.clone(), p.z.clone()),
            (QuadExt::one(), QuadExt::zero(), QuadExt::zero())
        );
        assert_eq!(from_bell(&p), a_point);

        let p = to_bell(&e(), &int(1)).unwrap();
        assert_eq!(p.x, QuadExt::inv_sqrt2());
        assert!(p.y.is_zero() && p.z.is_zero());
        assert_eq!(from_bell(&p).to_rational(), Some(e()));
        assert_eq!(to_bell(&e(), &int(2)), Err(Error::NotOnHyperplane));
    }

    #[test]
    fn residuals() {
        assert_eq!(bell_residual(&e()), int(0));
        assert_eq!(bell_residual(&Mat2::identity()), int(-2));
        assert_eq!(bell_residual(&Mat2::int(0, 1, 0, 0)), int(0));
    }

    #[test]
    fn restriction_examples() {
        let q = restrict_quadric(&h(Mat2::identity(), int(3))).unwrap();
        let i = q.q.inertia();
        assert_eq!((i.plus, i.minus, i.zero), (1, 2, 0));
        assert_eq!(
            classify_affine_quadric(&q),
            QuadricClass::HyperboloidOneSheet
        );

        let q = restrict_quadric(&h(e(), int(1))).unwrap();
        // x = [1, t1; t2, t3]: det = t3 − t1·t2
        assert_eq!(q.b, [int(0), int(0), int(1)]);
        assert_eq!(q.c, int(0));
        assert_eq!(q.q.get(0, 1), &rat(-1, 2));
        assert_eq!(
            classify_affine_quadric(&q),
            QuadricClass::HyperbolicParaboloid
        );

        let q = restrict_quadric(&h(e(), int(0))).unwrap();
        assert_eq!(
            classify_affine_quadric(&q),
            QuadricClass::IntersectingPlanes
        );
        assert_eq!(
            restrict_quadric(&h(Mat2::zero(), int(1))),
            Err(Error::ZeroCoefficientMatrix)
        );
    }

    #[test]
    fn canonical_forms() {
        let chart = |q: SymMatrix, b: [Rational; 3], c: Rational| AffineQuadric3 {
            q,
            b,
            c,
            origin: Mat2::zero(),
            basis: [Mat2::unit(0), Mat2::unit(1), Mat2::unit(2)],
        };
        let zero3 = || [int(0), int(0), int(0)];
        use QuadricClass as C;
        assert_eq!(
            classify_affine_quadric(&chart(bell_form(), zero3(), rat(-1, 2))),
            C::HyperboloidOneSheet
        );
        assert_eq!(
            classify_affine_quadric(&chart(bell_form(), zero3(), int(0))),
            C::Cone
        );
        assert_eq!(
            classify_affine_quadric(&chart(bell_form(), zero3(), int(1))),
            C::HyperboloidTwoSheets
        );
        let mut xy = SymMatrix::zeros(3);
        xy.set(0, 1, rat(1, 2));
        assert_eq!(
            classify_affine_quadric(&chart(xy, [int(0), int(0), int(-1)], int(0))),
            C::HyperbolicParaboloid
        );
        let id = SymMatrix::diag(&[int(1), int(1), int(1)]);
        assert_eq!(
            classify_affine_quadric(&chart(id.clone(), zero3(), int(-1))),
            C::Ellipsoid
        );
        assert_eq!(
            classify_affine_quadric(&chart(id.clone(), zero3(), int(1))),
            C::Empty
        );
        assert_eq!(
            classify_affine_quadric(&chart(id, zero3(), int(0))),
            C::Point
        );
        let d = |a, b, c| SymMatrix::diag(&[int(a), int(b), int(c)]);
        assert_eq!(
            classify_affine_quadric(&chart(d(1, 1, 0), [int(0), int(0), int(1)], int(0))),
            C::EllipticParaboloid
        );
        assert_eq!(
            classify_affine_quadric(&chart(d(1, 1, 0), zero3(), int(-1))),
            C::EllipticCylinder
        );
        assert_eq!(
            classify_affine_quadric(&chart(d(1, -1, 0), zero3(), int(-1))),
            C::HyperbolicCylinder
        );
        assert_eq!(
            classify_affine_quadric(&chart(d(1, -1, 0), zero3(), int(0))),
            C::IntersectingPlanes
        );
        assert_eq!(
            classify_affine_quadric(&chart(d(1, 1, 0), zero3(), int(0))),
            C::Line
        );
        assert_eq!(
            classify_affine_quadric(&chart(d(1, 0, 0), [int(0), int(1), int(0)], int(0))),
            C::ParabolicCylinder
        );
        assert_eq!(
            classify_affine_quadric(&chart(d(1, 0, 0), zero3(), int(-1))),
            C::ParallelPlanes
        );
        assert_eq!(
            classify_affine_quadric(&chart(d(1, 0, 0), zero3(), int(0))),
            C::CoincidentPlanes
        );
        assert_eq!(
            classify_affine_quadric(&chart(d(0, 0, 0), [int(1), int(0), int(0)], int(0))),
            C::SinglePlane
        );
        assert_eq!(
            classify_affine_quadric(&chart(d(0, 0, 0), zero3(), int(0))),
            C::Space
        );
        assert_eq!(
            classify_affine_quadric(&chart(d(0, 0, 0), zero3(), int(2))),
            C::Empty
        );
    }

    #[test]
    fn section_table() {
        assert_eq!(
            classify_section(&Mat2::identity(), &int(1)),
            SectionClass::HyperboloidOneSheet
        );
        assert_eq!(
            classify_section(&Mat2::identity(), &int(0)),
            SectionClass::Cone
        );
        assert_eq!(
            classify_section(&e(), &int(1)),
            SectionClass::HyperbolicParaboloid
        );
        assert_eq!(
            classify_section(&Mat2::zero(), &int(0)),
            SectionClass::FullVariety
        );
        assert_eq!(
            classify_section(&Mat2::zero(), &int(4)),
            SectionClass::Empty
        );
        let SectionClass::TwoPuncturedPlanesPlusOrigin { l_rep, r_rep } =
            classify_section(&e(), &int(0))
        else {
            panic!("expected plane pair");
        };
        assert_eq!(green::rowspace(&l_rep), ProjLine::from_ints(0, 1));
        assert_eq!(green::colspace(&r_rep), ProjLine::from_ints(0, 1));
        assert!(green::green_eq(
            GreenRelation::H,
            &l_rep,
            &Mat2::int(0, 0, 0, 1)
        ));
    }

    #[test]
    fn metrics() {
        let m = hyperboloid_metrics(&int(1));
        assert_eq!(m.center, Mat2::diag(rat(1, 2), rat(1, 2)));
        assert_eq!(m.radius_sq, rat(1, 2));
        assert_eq!(hyperboloid_metrics(&int(0)).radius_sq, int(0));
        assert_eq!(
            hyperboloid_metrics(&int(3)).asymptotic_q,
            hyperboloid_metrics(&int(5)).asymptotic_q
        );
    }

    #[test]
    fn chart_coordinates_roundtrip() {
        let q = restrict_quadric(&h(Mat2::int(1, 2, -1, 3), int(2))).unwrap();
        let t = [rat(1, 3), int(-2), int(5)];
        let x = q.point(&t);
        assert!(h(Mat2::int(1, 2, -1, 3), int(2)).contains(&x));
        assert_eq!(q.coordinates(&x), Some(t.clone()));
        assert_eq!(q.eval(&t), x.det());
    }
}
