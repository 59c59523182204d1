//! Exact scalars: arbitrary-precision rationals and the quadratic field `Q(√2)`.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Nearest double to `q` (saturates to ±infinity on overflow).
pub fn rational_to_f64(q: &Rational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    q.to_f64().unwrap_or(if q.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(q: &Rational) -> Sign {
        if q.is_zero() {
            Sign::Zero
        } else if q.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseRationalErrorKind {
    Empty,
    InvalidCharacter,
    ZeroDenominator,
}

/// Failure to read a rational literal; `pos` is a byte offset into the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseRationalError {
    pub pos: usize,
    pub kind: ParseRationalErrorKind,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ParseRationalErrorKind::Empty => "empty rational literal",
            ParseRationalErrorKind::InvalidCharacter => "invalid character in rational literal",
            ParseRationalErrorKind::ZeroDenominator => "zero denominator",
        };
        write!(f, "{what} at position {}", self.pos)
    }
}

impl core::error::Error for ParseRationalError {}

/// Parses `p/q` or `p`, with an optional leading `-` on `p`.
///
/// Leading and trailing whitespace is ignored. Positions in errors are byte
/// offsets into `text`.
pub fn parse_rational(text: &str) -> core::result::Result<Rational, ParseRationalError> {
    let start = text.len() - text.trim_start().len();
    let body = text.trim();
    let err = |pos, kind| ParseRationalError { pos, kind };
    if body.is_empty() {
        return Err(err(start, ParseRationalErrorKind::Empty));
    }
    let (num_text, den_text, den_start) = match body.find('/') {
        Some(slash) => (&body[..slash], Some(&body[slash + 1..]), start + slash + 1),
        None => (body, None, 0),
    };
    let numer = parse_integer(num_text, start, true)?;
    let denom = match den_text {
        Some(d) => {
            let d = parse_integer(d, den_start, false)?;
            if d.is_zero() {
                return Err(err(den_start, ParseRationalErrorKind::ZeroDenominator));
            }
            d
        }
        None => BigInt::one(),
    };
    Ok(Rational::new(numer, denom))
}

fn parse_integer(
    text: &str,
    offset: usize,
    allow_sign: bool,
) -> core::result::Result<BigInt, ParseRationalError> {
    let (negative, digits, digits_at) = match text.strip_prefix('-') {
        Some(rest) if allow_sign => (true, rest, offset + 1),
        _ => (false, text, offset),
    };
    if digits.is_empty() {
        return Err(ParseRationalError {
            pos: digits_at,
            kind: ParseRationalErrorKind::Empty,
        });
    }
    if let Some(bad) = digits.find(|c: char| !c.is_ascii_digit()) {
        return Err(ParseRationalError {
            pos: digits_at + bad,
            kind: ParseRationalErrorKind::InvalidCharacter,
        });
    }
    let magnitude = BigInt::parse_bytes(digits.as_bytes(), 10).ok_or(ParseRationalError {
        pos: digits_at,
        kind: ParseRationalErrorKind::InvalidCharacter,
    })?;
    Ok(if negative { -magnitude } else { magnitude })
}

/// An element `rat + root2·√2` of `Q(√2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QuadExt {
    pub rat: Rational,
    pub root2: Rational,
}

impl QuadExt {
    pub fn new(rat: Rational, root2: Rational) -> Self {
        QuadExt { rat, root2 }
    }

    pub fn from_rational(q: Rational) -> Self {
        QuadExt {
            rat: q,
            root2: Rational::zero(),
        }
    }

    pub fn sqrt2() -> Self {
        QuadExt {
            rat: Rational::zero(),
            root2: Rational::one(),
        }
    }

    /// `1/√2 = √2/2`.
    pub fn inv_sqrt2() -> Self {
        QuadExt {
            rat: Rational::zero(),
            root2: rat(1, 2),
        }
    }

    pub fn zero() -> Self {
        QuadExt::default()
    }

    pub fn one() -> Self {
        QuadExt::from_rational(Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.root2.is_zero()
    }

    /// The rational value, if the `√2` part vanishes.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.root2.is_zero().then_some(&self.rat)
    }

    /// `a − b√2`.
    pub fn conjugate(&self) -> Self {
        QuadExt {
            rat: self.rat.clone(),
            root2: -&self.root2,
        }
    }

    /// Field norm `a² − 2b²` (the product with the conjugate).
    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - int(2) * &self.root2 * &self.root2
    }

    pub fn scale(&self, k: &Rational) -> Self {
        QuadExt {
            rat: &self.rat * k,
            root2: &self.root2 * k,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            // Only zero has zero norm since √2 is irrational.
            return Err(Error::DivisionByZero);
        }
        let conj = self.conjugate();
        Ok(QuadExt {
            rat: conj.rat / &n,
            root2: conj.root2 / n,
        })
    }

    pub fn checked_div(&self, rhs: &QuadExt) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Exact sign, decided by comparing `a²` against `2b²`.
    pub fn sign(&self) -> Sign {
        let sa = Sign::of(&self.rat);
        let sb = Sign::of(&self.root2);
        match (sa, sb) {
            (Sign::Zero, s) | (s, Sign::Zero) => s,
            (a, b) if a == b => a,
            // Opposite signs: the larger magnitude wins.
            (a, _) => {
                let a2 = &self.rat * &self.rat;
                let b2 = int(2) * &self.root2 * &self.root2;
                if a2 > b2 {
                    a
                } else {
                    a.flip()
                }
            }
        }
    }

    /// Nearest-double approximation. When the two parts have opposite signs
    /// the value is evaluated as `(a² − 2b²)/(a − b√2)` to avoid cancellation.
    pub fn to_f64(&self) -> f64 {
        let a = rational_to_f64(&self.rat);
        let b = rational_to_f64(&self.root2);
        let opposite = Sign::of(&self.rat) != Sign::of(&self.root2)
            && !self.rat.is_zero()
            && !self.root2.is_zero();
        if opposite {
            rational_to_f64(&self.norm()) / (a - b * core::f64::consts::SQRT_2)
        } else {
            a + b * core::f64::consts::SQRT_2
        }
    }
}

impl core::str::FromStr for QuadExt {
    type Err = ParseRationalError;

    /// Accepts `p`, `q*sqrt2`, or `p + q*sqrt2` / `p - q*sqrt2` with rational
    /// `p`, `q`. Error positions refer to the input with whitespace removed.
    fn from_str(text: &str) -> core::result::Result<Self, Self::Err> {
        let compact: alloc::string::String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = compact.strip_suffix("*sqrt2") else {
            return Ok(QuadExt::from_rational(parse_rational(&compact)?));
        };
        let split = body
            .char_indices()
            .rev()
            .find(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i);
        let (rat_text, coef_text, coef_at) = match split {
            Some(i) => (&body[..i], &body[i..], i),
            None => ("0", body, 0),
        };
        let rat = parse_rational(rat_text)?;
        let coef = coef_text.strip_prefix('+').unwrap_or(coef_text);
        let offset = coef_at + (coef_text.len() - coef.len());
        let root2 = parse_rational(coef).map_err(|mut e| {
            e.pos += offset;
            e
        })?;
        Ok(QuadExt { rat, root2 })
    }
}

impl From<Rational> for QuadExt {
    fn from(q: Rational) -> Self {
        QuadExt::from_rational(q)
    }
}

impl fmt::Display for QuadExt {
    /// Renders as `p + q*sqrt2` (always both parts).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.root2.is_negative() {
            write!(f, "{} - {}*sqrt2", self.rat, -&self.root2)
        } else {
            write!(f, "{} + {}*sqrt2", self.rat, self.root2)
        }
    }
}

impl Add for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        QuadExt {
            rat: &self.rat + &rhs.rat,
            root2: &self.root2 + &rhs.root2,
        }
    }
}

impl Sub for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        QuadExt {
            rat: &self.rat - &rhs.rat,
            root2: &self.root2 - &rhs.root2,
        }
    }
}

impl Mul for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        QuadExt {
            rat: &self.rat * &rhs.rat + int(2) * &self.root2 * &rhs.root2,
            root2: &self.rat * &rhs.root2 + &self.root2 * &rhs.rat,
        }
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            rat: -&self.rat,
            root2: -&self.root2,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for QuadExt {
            type Output = QuadExt;
            fn $f(self, rhs: QuadExt) -> QuadExt {
                (&self).$f(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}
