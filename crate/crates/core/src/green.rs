//! Green's relations on `M2` and the geometry of their classes.
//!
//! Products are ordinary matrix products, so `a L b` holds exactly when `a`
//! and `b` share a row space and `a R b` when they share a column space.
//! Nontrivial L- and R-classes are punctured planes inside the determinant
//! variety and nontrivial H-classes are punctured lines.

use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::mat2::{Mat2, Vec2};
use crate::number::Rational;

/// A line through the origin of the plane, stored as a primitive integer
/// direction whose first nonzero coordinate is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjLine {
    dir: [BigInt; 2],
}

impl ProjLine {
    /// The line spanned by `v`; `None` for the zero vector.
    pub fn spanned_by(v: &Vec2) -> Option<ProjLine> {
        if v[0].is_zero() && v[1].is_zero() {
            return None;
        }
        let l = v[0].denom().lcm(v[1].denom());
        let mut p = [
            v[0].numer() * (&l / v[0].denom()),
            v[1].numer() * (&l / v[1].denom()),
        ];
        let g = p[0].gcd(&p[1]);
        for c in &mut p {
            *c /= &g;
        }
        let lead_negative = if p[0].is_zero() {
            p[1].is_negative()
        } else {
            p[0].is_negative()
        };
        if lead_negative {
            for c in &mut p {
                *c = -&*c;
            }
        }
        Some(ProjLine { dir: p })
    }

    pub fn from_ints(a: i64, b: i64) -> Option<ProjLine> {
        ProjLine::spanned_by(&[
            Rational::from_integer(a.into()),
            Rational::from_integer(b.into()),
        ])
    }

    pub fn direction(&self) -> &[BigInt; 2] {
        &self.dir
    }

    pub fn to_vec(&self) -> Vec2 {
        [
            Rational::from_integer(self.dir[0].clone()),
            Rational::from_integer(self.dir[1].clone()),
        ]
    }

    /// The orthogonal line.
    pub fn perp(&self) -> ProjLine {
        let [a, b] = &self.dir;
        ProjLine::spanned_by(&[
            Rational::from_integer(-b.clone()),
            Rational::from_integer(a.clone()),
        ])
        .expect("nonzero direction")
    }

    /// Dot product of the primitive directions; zero exactly when the lines
    /// are orthogonal.
    pub fn pairing(&self, other: &ProjLine) -> BigInt {
        &self.dir[0] * &other.dir[0] + &self.dir[1] * &other.dir[1]
    }

    pub fn contains(&self, v: &Vec2) -> bool {
        let [a, b] = self.to_vec();
        (&v[0] * b - &v[1] * a).is_zero()
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.dir[0], self.dir[1])
    }
}

/// The D-class of an element, with row and column lines for rank one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GreenDescriptor {
    Zero,
    RankOne {
        rowspace: ProjLine,
        colspace: ProjLine,
    },
    Invertible,
}

pub fn descriptor(a: &Mat2) -> GreenDescriptor {
    match a.rank() {
        0 => GreenDescriptor::Zero,
        2 => GreenDescriptor::Invertible,
        _ => {
            let rowspace = ProjLine::spanned_by(&a.row(0))
                .or_else(|| ProjLine::spanned_by(&a.row(1)))
                .expect("rank one has a nonzero row");
            let colspace = ProjLine::spanned_by(&a.col(0))
                .or_else(|| ProjLine::spanned_by(&a.col(1)))
                .expect("rank one has a nonzero column");
            GreenDescriptor::RankOne { rowspace, colspace }
        }
    }
}

/// Row line of a rank-one matrix.
pub fn rowspace(a: &Mat2) -> Option<ProjLine> {
    match descriptor(a) {
        GreenDescriptor::RankOne { rowspace, .. } => Some(rowspace),
        _ => None,
    }
}

/// Column line of a rank-one matrix.
pub fn colspace(a: &Mat2) -> Option<ProjLine> {
    match descriptor(a) {
        GreenDescriptor::RankOne { colspace, .. } => Some(colspace),
        _ => None,
    }
}

/// Rank factorization `a = c·rᵀ` of a rank-one matrix, with `c` the first
/// nonzero column of `a`.
pub fn rank_factorization(a: &Mat2) -> Result<(Vec2, Vec2)> {
    if a.rank() != 1 {
        return Err(Error::NotRankOne);
    }
    let j = if a.col(0).iter().any(|x| !x.is_zero()) {
        0
    } else {
        1
    };
    let c = a.col(j);
    let i = if c[0].is_zero() { 1 } else { 0 };
    let row = a.row(i);
    let r = [&row[0] / &c[i], &row[1] / &c[i]];
    Ok((c, r))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GreenRelation {
    L,
    R,
    H,
    D,
    J,
}

impl FromStr for GreenRelation {
    type Err = &'static str;
    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        match s {
            "L" => Ok(GreenRelation::L),
            "R" => Ok(GreenRelation::R),
            "H" => Ok(GreenRelation::H),
            "D" => Ok(GreenRelation::D),
            "J" => Ok(GreenRelation::J),
            _ => Err("expected one of L, R, H, D, J"),
        }
    }
}

impl fmt::Display for GreenRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GreenRelation::L => "L",
            GreenRelation::R => "R",
            GreenRelation::H => "H",
            GreenRelation::D => "D",
            GreenRelation::J => "J",
        })
    }
}

pub fn green_eq(rel: GreenRelation, a: &Mat2, b: &Mat2) -> bool {
    use GreenDescriptor as G;
    let (da, db) = (descriptor(a), descriptor(b));
    let same_class = |by_row: bool| match (&da, &db) {
        (G::Zero, G::Zero) | (G::Invertible, G::Invertible) => true,
        (
            G::RankOne {
                rowspace: ra,
                colspace: ca,
            },
            G::RankOne {
                rowspace: rb,
                colspace: cb,
            },
        ) => {
            if by_row {
                ra == rb
            } else {
                ca == cb
            }
        }
        _ => false,
    };
    match rel {
        GreenRelation::L => same_class(true),
        GreenRelation::R => same_class(false),
        GreenRelation::H => same_class(true) && same_class(false),
        // D = J in M2: equal rank.
        GreenRelation::D | GreenRelation::J => a.rank() == b.rank(),
    }
}

/// Which one-sided class a plane realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKind {
    L,
    R,
}

/// Basis of the plane whose punctured form is the L- or R-class of `a`.
///
/// For the L-class (row line `r`) the basis is `{(1,0)ᵀ·rᵀ, (0,1)ᵀ·rᵀ}`; the
/// R-class (column line `c`) is the transposed construction.
pub fn class_plane(kind: ClassKind, a: &Mat2) -> Result<(Mat2, Mat2)> {
    let GreenDescriptor::RankOne { rowspace, colspace } = descriptor(a) else {
        return Err(Error::NotRankOne);
    };
    let e1 = [Rational::one(), Rational::zero()];
    let e2 = [Rational::zero(), Rational::one()];
    Ok(match kind {
        ClassKind::L => {
            let r = rowspace.to_vec();
            (Mat2::outer(&e1, &r), Mat2::outer(&e2, &r))
        }
        ClassKind::R => {
            let c = colspace.to_vec();
            (Mat2::outer(&c, &e1), Mat2::outer(&c, &e2))
        }
    })
}

/// The punctured line `{t·dir : t ≠ 0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuncturedLine {
    pub dir: Mat2,
}

impl PuncturedLine {
    pub fn point(&self, t: &Rational) -> Option<Mat2> {
        (!t.is_zero()).then(|| self.dir.scale(t))
    }

    pub fn contains(&self, x: &Mat2) -> bool {
        if x.is_zero() {
            return false;
        }
        // x ∥ dir: every 2×2 minor of the pair of 4-vectors vanishes.
        !independent(x, &self.dir)
    }
}

/// `H_a` as a punctured line through the origin.
pub fn h_class_line(a: &Mat2) -> Result<PuncturedLine> {
    if a.rank() != 1 {
        return Err(Error::NotRankOne);
    }
    Ok(PuncturedLine { dir: a.clone() })
}

/// Linear independence of two matrices viewed as 4-vectors.
pub fn independent(b1: &Mat2, b2: &Mat2) -> bool {
    let u = b1.entries();
    let v = b2.entries();
    (0..4).any(|i| (i + 1..4).any(|j| !(u[i] * v[j] - u[j] * v[i]).is_zero()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlaneVerdict {
    LClass { rep: Mat2 },
    RClass { rep: Mat2 },
    NotContained,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneInVariety {
    pub basis: (Mat2, Mat2),
    pub verdict: PlaneVerdict,
}

/// Decides whether `span{b1, b2}` lies in the determinant variety and, if so,
/// which Green class its punctured form is.
///
/// `det` is a quadratic form, so `det(s·b1 + t·b2) = s²det b1 + st·polar + t²det b2`;
/// three exact coefficient checks settle containment for every combination.
pub fn classify_plane(b1: &Mat2, b2: &Mat2) -> Result<PlaneInVariety> {
    if !independent(b1, b2) {
        return Err(Error::DependentBasis);
    }
    let contained = b1.det().is_zero() && b2.det().is_zero() && b1.det_polar(b2).is_zero();
    let verdict = if !contained {
        PlaneVerdict::NotContained
    } else if rowspace(b1) == rowspace(b2) {
        PlaneVerdict::LClass { rep: b1.clone() }
    } else if colspace(b1) == colspace(b2) {
        PlaneVerdict::RClass { rep: b1.clone() }
    } else {
        // Rank-one b1, b2 with distinct row and column lines sum to rank two,
        // contradicting a vanishing polarization.
        unreachable!("plane inside the variety with no common row or column line")
    };
    Ok(PlaneInVariety {
        basis: (b1.clone(), b2.clone()),
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::int;

    fn e() -> Mat2 {
        Mat2::int(1, 0, 0, 0)
    }

    #[test]
    fn projline_normalization() {
        let a =
            ProjLine::spanned_by(&[crate::number::rat(-2, 3), crate::number::rat(4, 5)]).unwrap();
        assert_eq!(a, ProjLine::from_ints(5, -6).unwrap());
        assert_eq!(a.direction(), &[BigInt::from(5), BigInt::from(-6)]);
        assert_eq!(
            ProjLine::from_ints(0, -3).unwrap(),
            ProjLine::from_ints(0, 1).unwrap()
        );
        assert!(ProjLine::from_ints(0, 0).is_none());
        assert_eq!(
            ProjLine::from_ints(1, 0).unwrap().perp(),
            ProjLine::from_ints(0, 1).unwrap()
        );
    }

    #[test]
    fn descriptors() {
        assert_eq!(
            descriptor(&e()),
            GreenDescriptor::RankOne {
                rowspace: ProjLine::from_ints(1, 0).unwrap(),
                colspace: ProjLine::from_ints(1, 0).unwrap(),
            }
        );
        assert_eq!(
            descriptor(&Mat2::int(2, 0, 3, 0)),
            GreenDescriptor::RankOne {
                rowspace: ProjLine::from_ints(1, 0).unwrap(),
                colspace: ProjLine::from_ints(2, 3).unwrap(),
            }
        );
        assert_eq!(descriptor(&Mat2::zero()), GreenDescriptor::Zero);
        assert_eq!(descriptor(&Mat2::identity()), GreenDescriptor::Invertible);
    }

    #[test]
    fn relations() {
        use GreenRelation::*;
        assert!(green_eq(L, &e(), &Mat2::int(2, 0, 3, 0)));
        assert!(green_eq(R, &e(), &Mat2::int(2, 3, 0, 0)));
        assert!(!green_eq(L, &e(), &Mat2::int(2, 3, 0, 0)));
        assert!(green_eq(H, &e(), &Mat2::int(-5, 0, 0, 0)));
        assert!(!green_eq(H, &e(), &Mat2::int(2, 0, 3, 0)));
        assert!(green_eq(D, &e(), &Mat2::int(0, 1, 0, 0)));
        assert!(green_eq(J, &Mat2::identity(), &Mat2::int(0, 1, 1, 0)));
        assert!(green_eq(L, &Mat2::identity(), &Mat2::int(0, 1, 1, 0)));
        assert!(!green_eq(L, &Mat2::zero(), &e()));
        assert!(green_eq(R, &Mat2::zero(), &Mat2::zero()));
    }

    #[test]
    fn class_planes() {
        assert_eq!(
            class_plane(ClassKind::L, &e()).unwrap(),
            (Mat2::int(1, 0, 0, 0), Mat2::int(0, 0, 1, 0))
        );
        assert_eq!(
            class_plane(ClassKind::R, &e()).unwrap(),
            (Mat2::int(1, 0, 0, 0), Mat2::int(0, 1, 0, 0))
        );
        assert_eq!(
            class_plane(ClassKind::L, &Mat2::int(0, 0, 0, 1)).unwrap(),
            (Mat2::int(0, 1, 0, 0), Mat2::int(0, 0, 0, 1))
        );
        assert_eq!(
            class_plane(ClassKind::L, &Mat2::identity()),
            Err(Error::NotRankOne)
        );
    }

    #[test]
    fn h_lines() {
        let line = h_class_line(&Mat2::int(2, 0, 3, 0)).unwrap();
        let p = line.point(&int(-3)).unwrap();
        assert!(green_eq(GreenRelation::H, &p, &Mat2::int(2, 0, 3, 0)));
        assert!(line.point(&int(0)).is_none());
        assert!(line.contains(&Mat2::int(4, 0, 6, 0)));
        assert!(!line.contains(&Mat2::zero()));
        assert_eq!(h_class_line(&e()).unwrap().dir, e());
        assert_eq!(h_class_line(&Mat2::zero()), Err(Error::NotRankOne));
    }

    #[test]
    fn plane_verdicts() {
        let v = classify_plane(&Mat2::int(0, 0, 1, 0), &Mat2::int(0, 0, 0, 1)).unwrap();
        assert_eq!(
            v.verdict,
            PlaneVerdict::RClass {
                rep: Mat2::int(0, 0, 1, 0)
            }
        );
        let v = classify_plane(&e(), &Mat2::int(0, 0, 1, 0)).unwrap();
        assert_eq!(v.verdict, PlaneVerdict::LClass { rep: e() });
        let v = classify_plane(&e(), &Mat2::int(0, 0, 0, 1)).unwrap();
        assert_eq!(v.verdict, PlaneVerdict::NotContained);
        assert_eq!(
            classify_plane(&e(), &Mat2::int(3, 0, 0, 0)),
            Err(Error::DependentBasis)
        );
        assert_eq!(
            classify_plane(&e(), &Mat2::zero()),
            Err(Error::DependentBasis)
        );
        // Both generators singular, their sum [0,1;1,0] is not.
        let v = classify_plane(&Mat2::int(0, 1, 0, 0), &Mat2::int(0, 0, 1, 0)).unwrap();
        assert_eq!(v.verdict, PlaneVerdict::NotContained);
    }

    #[test]
    fn factorization() {
        let (c, r) = rank_factorization(&Mat2::int(0, 2, 0, 3)).unwrap();
        assert_eq!(Mat2::outer(&c, &r), Mat2::int(0, 2, 0, 3));
        assert_eq!(c, [int(2), int(3)]);
        assert_eq!(
            rank_factorization(&Mat2::identity()),
            Err(Error::NotRankOne)
        );
    }
}
