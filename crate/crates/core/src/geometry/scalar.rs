//! Exact ordered fields used throughout the crate.
//!
//! Two fields are supported: the rationals (backed by [`BigRational`]) and the
//! real quadratic field `Q(sqrt 5)` ([`QSqrt5`]), which is needed for the
//! golden-ratio coordinates of the `H3`/`H4` root systems. Every decision the
//! library makes (signs, comparisons, pivots) is taken in one of these fields.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Exact sign of a field element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// Which field a scalar type lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldTag {
    Rational,
    QSqrt5,
}

impl FieldTag {
    /// Name used in arrangement documents.
    pub fn name(self) -> &'static str {
        match self {
            FieldTag::Rational => "Q",
            FieldTag::QSqrt5 => "Q(sqrt5)",
        }
    }
}

/// An exact ordered field.
///
/// Implemented for [`BigRational`] and [`QSqrt5`]. Floating point types are
/// deliberately not implementors: no decision path may depend on rounding.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + Eq
    + Ord
    + Hash
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    const FIELD: FieldTag;

    /// Embeds a rational number into the field.
    fn from_rational(r: BigRational) -> Self;

    /// Returns the value as a rational if it has no irrational part.
    fn to_rational(&self) -> Option<BigRational>;

    /// Exact sign.
    fn sign(&self) -> Sign;

    /// Lossy conversion, for diagnostics only.
    fn approx_f64(&self) -> f64;

    /// Parses the exact string encoding (`p/q`, and for `Q(sqrt5)` also
    /// `p/q+r/s*sqrt5`).
    fn parse_exact(s: &str) -> Result<Self, Error>;

    /// Canonical exact string encoding; `parse_exact` inverts it.
    fn to_exact_string(&self) -> String;

    /// A square root of 5, when the field has one.
    fn sqrt5() -> Option<Self> {
        None
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    fn from_frac(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn is_positive_exact(&self) -> bool {
        self.sign() == Sign::Positive
    }

    fn is_negative_exact(&self) -> bool {
        self.sign() == Sign::Negative
    }
}

/// Exact sign of a scalar.
pub fn scalar_sign<F: Scalar>(s: &F) -> Sign {
    s.sign()
}

fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    if s.is_empty() {
        return Err(bad());
    }
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

impl Scalar for BigRational {
    const FIELD: FieldTag = FieldTag::Rational;

    fn from_rational(r: BigRational) -> Self {
        r
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }

    fn sign(&self) -> Sign {
        if self.is_zero() {
            Sign::Zero
        } else if self.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    fn approx_f64(&self) -> f64 {
        rational_to_f64(self)
    }

    fn parse_exact(s: &str) -> Result<Self, Error> {
        if s.contains("sqrt5") {
            return Err(Error::MixedField(format!(
                "`{s}` has an irrational part but the field is Q"
            )));
        }
        parse_rational(s)
    }

    fn to_exact_string(&self) -> String {
        self.to_string()
    }
}

/// An element `a + b*sqrt(5)` of the real quadratic field `Q(sqrt 5)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSqrt5 {
    a: BigRational,
    b: BigRational,
}

impl QSqrt5 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QSqrt5 { a, b }
    }

    /// The golden ratio `(1 + sqrt 5) / 2`.
    pub fn golden_ratio() -> Self {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        QSqrt5::new(half.clone(), half)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn sqrt5_part(&self) -> &BigRational {
        &self.b
    }

    /// Galois conjugate `a - b*sqrt(5)`.
    pub fn conjugate(&self) -> Self {
        QSqrt5::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a^2 - 5 b^2`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(BigInt::from(5)) * &self.b * &self.b
    }
}

impl Zero for QSqrt5 {
    fn zero() -> Self {
        QSqrt5::new(BigRational::zero(), BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QSqrt5 {
    fn one() -> Self {
        QSqrt5::new(BigRational::one(), BigRational::zero())
    }
}

impl Add for QSqrt5 {
    type Output = QSqrt5;
    fn add(self, rhs: QSqrt5) -> QSqrt5 {
        QSqrt5::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for QSqrt5 {
    type Output = QSqrt5;
    fn sub(self, rhs: QSqrt5) -> QSqrt5 {
        QSqrt5::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Mul for QSqrt5 {
    type Output = QSqrt5;
    fn mul(self, rhs: QSqrt5) -> QSqrt5 {
        let five = BigRational::from_integer(BigInt::from(5));
        let a = &self.a * &rhs.a + five * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QSqrt5::new(a, b)
    }
}

impl Div for QSqrt5 {
    type Output = QSqrt5;
    fn div(self, rhs: QSqrt5) -> QSqrt5 {
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero in Q(sqrt5)");
        let num = self * rhs.conjugate();
        QSqrt5::new(num.a / &n, num.b / n)
    }
}

impl Neg for QSqrt5 {
    type Output = QSqrt5;
    fn neg(self) -> QSqrt5 {
        QSqrt5::new(-self.a, -self.b)
    }
}

impl Ord for QSqrt5 {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.clone() - other.clone()).sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

impl PartialOrd for QSqrt5 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QSqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_exact_string())
    }
}

impl Scalar for QSqrt5 {
    const FIELD: FieldTag = FieldTag::QSqrt5;

    fn sqrt5() -> Option<Self> {
        Some(QSqrt5::new(BigRational::zero(), BigRational::one()))
    }

    fn from_rational(r: BigRational) -> Self {
        QSqrt5::new(r, BigRational::zero())
    }

    fn to_rational(&self) -> Option<BigRational> {
        self.b.is_zero().then(|| self.a.clone())
    }

    fn sign(&self) -> Sign {
        let sa = self.a.sign();
        let sb = self.b.sign();
        match (sa, sb) {
            (_, Sign::Zero) => sa,
            (Sign::Zero, _) => sb,
            _ if sa == sb => sa,
            _ => {
                // opposite signs: the larger of a^2 and 5 b^2 wins
                let a2 = &self.a * &self.a;
                let b2 = BigRational::from_integer(BigInt::from(5)) * &self.b * &self.b;
                match a2.cmp(&b2) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    Ordering::Equal => unreachable!("sqrt 5 is irrational"),
                }
            }
        }
    }

    fn approx_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * 5f64.sqrt()
    }

    fn parse_exact(s: &str) -> Result<Self, Error> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(head) = t.strip_suffix("sqrt5") else {
            return Ok(QSqrt5::from_rational(parse_rational(&t)?));
        };
        let head = head.strip_suffix('*').unwrap_or(head);
        // split "a(+|-)coef" at the last sign that is not part of an exponent
        // of the coefficient itself
        let bytes = head.as_bytes();
        let mut split = None;
        for i in (1..bytes.len()).rev() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'+' | b'-' | b'/')
            {
                split = Some(i);
                break;
            }
        }
        let coef = |c: &str| -> Result<BigRational, Error> {
            match c {
                "" | "+" => Ok(BigRational::one()),
                "-" => Ok(-BigRational::one()),
                c => parse_rational(c.strip_prefix('+').unwrap_or(c)),
            }
        };
        let (a, b) = match split {
            Some(i) => (parse_rational(&head[..i])?, coef(&head[i..])?),
            None => (BigRational::zero(), coef(head)?),
        };
        Ok(QSqrt5::new(a, b))
    }

    fn to_exact_string(&self) -> String {
        if self.b.is_zero() {
            self.a.to_string()
        } else if self.b.is_negative() {
            format!("{}-{}*sqrt5", self.a, -self.b.clone())
        } else {
            format!("{}+{}*sqrt5", self.a, self.b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> QSqrt5 {
        QSqrt5::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
        )
    }

    #[test]
    fn sign_cases() {
        assert_eq!(q(0, 0).sign(), Sign::Zero);
        assert_eq!(q(-3, 1).sign(), Sign::Negative);
        assert_eq!(q(-2, 1).sign(), Sign::Positive);
        assert_eq!(q(3, -1).sign(), Sign::Positive);
        assert_eq!(q(2, -1).sign(), Sign::Negative);
        assert_eq!(q(0, -4).sign(), Sign::Negative);
    }

    #[test]
    fn golden_ratio_identity() {
        let phi = QSqrt5::golden_ratio();
        assert_eq!(phi.clone() * phi.clone(), phi.clone() + QSqrt5::one());
        let inv = QSqrt5::one() / phi.clone();
        assert_eq!(inv, phi - QSqrt5::one());
    }

    #[test]
    fn parse_and_print() {
        for s in [
            "1/2+1/2*sqrt5",
            "-1/2-1/2*sqrt5",
            "0+3*sqrt5",
            "7/3",
            "-2",
            "0-1*sqrt5",
        ] {
            let v = QSqrt5::parse_exact(s).unwrap();
            let back = v.to_exact_string();
            assert_eq!(QSqrt5::parse_exact(&back).unwrap(), v, "{s}");
        }
        assert_eq!(
            QSqrt5::parse_exact("1/2+-1/2*sqrt5").unwrap(),
            QSqrt5::parse_exact("1/2-1/2*sqrt5").unwrap()
        );
        assert_eq!(QSqrt5::parse_exact("sqrt5").unwrap(), q(0, 1));
        assert!(BigRational::parse_exact("1+sqrt5").is_err());
        assert!(BigRational::parse_exact("1/0").is_err());
        assert!(BigRational::parse_exact("abc").is_err());
    }

    #[test]
    fn ordering_is_total_and_exact() {
        let mut v = [q(1, 0), q(-3, 1), q(-2, 1), q(0, 0), QSqrt5::golden_ratio()];
        v.sort();
        let f: Vec<f64> = v.iter().map(|x| x.approx_f64()).collect();
        assert!(f.windows(2).all(|w| w[0] <= w[1]));
    }
}
