//! The matrix algebra of `M2`.
//!
//! A [`Mat2`] `[[x1, x2], [x3, x4]]` is identified with the row-major
//! 4-vector `(x1, x2, x3, x4)`; under that identification the Euclidean inner
//! product is `tr(xᵀ·y)`.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::number::{int, parse_rational, ParseRationalError, QuadExt, Rational};

/// Column or row 2-vector.
pub type Vec2 = [Rational; 2];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub x1: Rational,
    pub x2: Rational,
    pub x3: Rational,
    pub x4: Rational,
}

/// Image of a [`Mat2`] in 4-space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vec4(pub [Rational; 4]);

impl Mat2 {
    pub fn new(x1: Rational, x2: Rational, x3: Rational, x4: Rational) -> Self {
        Mat2 { x1, x2, x3, x4 }
    }

    /// Integer-entry shorthand, row-major.
    pub fn int(x1: i64, x2: i64, x3: i64, x4: i64) -> Self {
        Mat2::new(int(x1), int(x2), int(x3), int(x4))
    }

    pub fn zero() -> Self {
        Mat2::int(0, 0, 0, 0)
    }

    pub fn identity() -> Self {
        Mat2::int(1, 0, 0, 1)
    }

    pub fn diag(a: Rational, d: Rational) -> Self {
        Mat2::new(a, Rational::zero(), Rational::zero(), d)
    }

    /// The `k`-th standard basis matrix in row-major order (`k < 4`).
    pub fn unit(k: usize) -> Self {
        let mut e = [0, 0, 0, 0];
        e[k] = 1;
        Mat2::int(e[0], e[1], e[2], e[3])
    }

    pub fn from_entries([x1, x2, x3, x4]: [Rational; 4]) -> Self {
        Mat2 { x1, x2, x3, x4 }
    }

    pub fn entries(&self) -> [&Rational; 4] {
        [&self.x1, &self.x2, &self.x3, &self.x4]
    }

    pub fn into_entries(self) -> [Rational; 4] {
        [self.x1, self.x2, self.x3, self.x4]
    }

    /// Outer product `u·vᵀ`.
    pub fn outer(u: &Vec2, v: &Vec2) -> Self {
        Mat2::new(&u[0] * &v[0], &u[0] * &v[1], &u[1] * &v[0], &u[1] * &v[1])
    }

    pub fn row(&self, i: usize) -> Vec2 {
        match i {
            0 => [self.x1.clone(), self.x2.clone()],
            _ => [self.x3.clone(), self.x4.clone()],
        }
    }

    pub fn col(&self, j: usize) -> Vec2 {
        match j {
            0 => [self.x1.clone(), self.x3.clone()],
            _ => [self.x2.clone(), self.x4.clone()],
        }
    }

    /// `self·v`.
    pub fn apply(&self, v: &Vec2) -> Vec2 {
        [
            &self.x1 * &v[0] + &self.x2 * &v[1],
            &self.x3 * &v[0] + &self.x4 * &v[1],
        ]
    }

    /// `vᵀ·self`, as a row.
    pub fn apply_left(&self, v: &Vec2) -> Vec2 {
        [
            &v[0] * &self.x1 + &v[1] * &self.x3,
            &v[0] * &self.x2 + &v[1] * &self.x4,
        ]
    }

    pub fn is_zero(&self) -> bool {
        self.entries().iter().all(|x| x.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.x2 == self.x3
    }

    pub fn trace(&self) -> Rational {
        &self.x1 + &self.x4
    }

    pub fn det(&self) -> Rational {
        &self.x1 * &self.x4 - &self.x2 * &self.x3
    }

    /// Polarization of the determinant form: `det(x+y) − det(x) − det(y)`.
    pub fn det_polar(&self, other: &Mat2) -> Rational {
        &self.x1 * &other.x4 + &self.x4 * &other.x1 - &self.x2 * &other.x3 - &self.x3 * &other.x2
    }

    pub fn rank(&self) -> u8 {
        if self.is_zero() {
            0
        } else if self.det().is_zero() {
            1
        } else {
            2
        }
    }

    /// `⟨self, self⟩`.
    pub fn norm_sq(&self) -> Rational {
        self.inner(self)
    }

    /// Coordinate inner product `x1y1 + x2y2 + x3y3 + x4y4`.
    pub fn inner(&self, other: &Mat2) -> Rational {
        self.entries()
            .iter()
            .zip(other.entries())
            .map(|(a, b)| *a * b)
            .fold(Rational::zero(), |acc, t| acc + t)
    }

    pub fn transpose(&self) -> Self {
        Mat2::new(
            self.x1.clone(),
            self.x3.clone(),
            self.x2.clone(),
            self.x4.clone(),
        )
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Mat2::new(&self.x1 * k, &self.x2 * k, &self.x3 * k, &self.x4 * k)
    }

    pub fn adjugate(&self) -> Self {
        Mat2::new(self.x4.clone(), -&self.x2, -&self.x3, self.x1.clone())
    }

    /// Group inverse via the adjugate; fails with [`Error::Singular`] when
    /// `det = 0`.
    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        if d.is_zero() {
            return Err(Error::Singular);
        }
        Ok(self.adjugate().scale(&(Rational::one() / d)))
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn to_vec4(&self) -> Vec4 {
        Vec4(self.clone().into_entries())
    }

    pub fn from_vec4(v: Vec4) -> Self {
        Mat2::from_entries(v.0)
    }

    /// Entrywise `f64` approximation, row-major.
    pub fn to_f64(&self) -> [f64; 4] {
        self.entries().map(crate::number::rational_to_f64)
    }
}

impl fmt::Display for Mat2 {
    /// Matrix literal `[a,b;c,d]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{};{},{}]", self.x1, self.x2, self.x3, self.x4)
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, b: &Mat2) -> Mat2 {
        let a = self;
        Mat2::new(
            &a.x1 * &b.x1 + &a.x2 * &b.x3,
            &a.x1 * &b.x2 + &a.x2 * &b.x4,
            &a.x3 * &b.x1 + &a.x4 * &b.x3,
            &a.x3 * &b.x2 + &a.x4 * &b.x4,
        )
    }
}

impl Add for &Mat2 {
    type Output = Mat2;
    fn add(self, b: &Mat2) -> Mat2 {
        Mat2::new(
            &self.x1 + &b.x1,
            &self.x2 + &b.x2,
            &self.x3 + &b.x3,
            &self.x4 + &b.x4,
        )
    }
}

impl Sub for &Mat2 {
    type Output = Mat2;
    fn sub(self, b: &Mat2) -> Mat2 {
        Mat2::new(
            &self.x1 - &b.x1,
            &self.x2 - &b.x2,
            &self.x3 - &b.x3,
            &self.x4 - &b.x4,
        )
    }
}

impl Neg for &Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        Mat2::new(-&self.x1, -&self.x2, -&self.x3, -&self.x4)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for Mat2 {
            type Output = Mat2;
            fn $f(self, rhs: Mat2) -> Mat2 {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Mat2> for Mat2 {
            type Output = Mat2;
            fn $f(self, rhs: &Mat2) -> Mat2 {
                (&self).$f(rhs)
            }
        }
        impl $tr<Mat2> for &Mat2 {
            type Output = Mat2;
            fn $f(self, rhs: Mat2) -> Mat2 {
                self.$f(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        -&self
    }
}

/// Error from reading a `[a,b;c,d]` literal; `pos` is a byte offset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseMatrixError {
    pub pos: usize,
    pub message: &'static str,
}

impl fmt::Display for ParseMatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at position {}", self.message, self.pos)
    }
}

impl core::error::Error for ParseMatrixError {}

impl From<ParseRationalError> for ParseMatrixError {
    fn from(e: ParseRationalError) -> Self {
        use crate::number::ParseRationalErrorKind as K;
        ParseMatrixError {
            pos: e.pos,
            message: match e.kind {
                K::Empty => "missing entry",
                K::InvalidCharacter => "invalid character in entry",
                K::ZeroDenominator => "zero denominator",
            },
        }
    }
}

impl FromStr for Mat2 {
    type Err = ParseMatrixError;

    /// Parses `[a,b;c,d]` with rational entries, tolerating whitespace.
    fn from_str(text: &str) -> core::result::Result<Self, Self::Err> {
        let err = |pos, message| ParseMatrixError { pos, message };
        let open = text
            .find(|c: char| !c.is_whitespace())
            .ok_or(err(text.len(), "empty matrix literal"))?;
        if !text[open..].starts_with('[') {
            return Err(err(open, "expected '['"));
        }
        let close = text
            .rfind(|c: char| !c.is_whitespace())
            .filter(|&i| text[i..].starts_with(']') && i > open)
            .ok_or(err(text.trim_end().len(), "expected ']'"))?;
        let inner_start = open + 1;
        let inner = &text[inner_start..close];

        let mut entries = alloc::vec::Vec::with_capacity(4);
        let mut row_start = 0;
        for (row_idx, row) in inner.split(';').enumerate() {
            if row_idx >= 2 {
                return Err(err(
                    inner_start + row_start - 1,
                    "expected exactly two rows",
                ));
            }
            let mut cell_start = row_start;
            for (col_idx, cell) in row.split(',').enumerate() {
                if col_idx >= 2 {
                    return Err(err(
                        inner_start + cell_start - 1,
                        "expected exactly two entries per row",
                    ));
                }
                let q = parse_rational(cell).map_err(|mut e| {
                    e.pos += inner_start + cell_start;
                    e
                })?;
                entries.push(q);
                cell_start += cell.len() + 1;
            }
            if entries.len() != 2 * (row_idx + 1) {
                return Err(err(
                    inner_start + row_start + row.len(),
                    "expected exactly two entries per row",
                ));
            }
            row_start += row.len() + 1;
        }
        if entries.len() != 4 {
            return Err(err(close, "expected exactly two rows"));
        }
        let mut it = entries.into_iter();
        let mut next = || it.next().expect("four entries");
        Ok(Mat2::new(next(), next(), next(), next()))
    }
}

/// A 2×2 matrix over `Q(√2)`; produced by the Bell-coordinate maps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2Ext(pub [QuadExt; 4]);

impl Mat2Ext {
    pub fn trace(&self) -> QuadExt {
        &self.0[0] + &self.0[3]
    }

    pub fn det(&self) -> QuadExt {
        &(&self.0[0] * &self.0[3]) - &(&self.0[1] * &self.0[2])
    }

    /// The rational matrix, if every `√2` part vanishes.
    pub fn to_rational(&self) -> Option<Mat2> {
        let [a, b, c, d] = &self.0;
        Some(Mat2::new(
            a.as_rational()?.clone(),
            b.as_rational()?.clone(),
            c.as_rational()?.clone(),
            d.as_rational()?.clone(),
        ))
    }

    pub fn to_f64(&self) -> [f64; 4] {
        [
            self.0[0].to_f64(),
            self.0[1].to_f64(),
            self.0[2].to_f64(),
            self.0[3].to_f64(),
        ]
    }
}

impl From<&Mat2> for Mat2Ext {
    fn from(m: &Mat2) -> Self {
        Mat2Ext(m.entries().map(|x| QuadExt::from_rational(x.clone())))
    }
}

impl fmt::Display for Mat2Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.0;
        write!(f, "[{a},{b};{c},{d}]")
    }
}
