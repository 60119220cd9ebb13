//! Exact Gaussian-rational scalars.
//!
//! Every coefficient in the engine is an element of Q(i): a pair of
//! arbitrary-precision rationals kept in lowest terms. Equality is exact,
//! which is what makes all the span-membership verification decidable.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A Gaussian rational `re + im*i`, both parts exact rationals.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        Scalar {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    /// Exact rational `num/den`. Panics if `den == 0`.
    pub fn rational(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    /// `num/den * i`.
    pub fn rational_i(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar {
            re: BigRational::zero(),
            im: BigRational::new(BigInt::from(num), BigInt::from(den)),
        }
    }

    /// Gaussian rational from four integer parts: `a/b + (c/d)i`.
    pub fn gaussian(a: i64, b: i64, c: i64, d: i64) -> Self {
        Scalar {
            re: BigRational::new(BigInt::from(a), BigInt::from(b)),
            im: BigRational::new(BigInt::from(c), BigInt::from(d)),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True for elements of Q (no imaginary part) that are integers.
    pub fn is_integer(&self) -> bool {
        self.im.is_zero() && self.re.is_integer()
    }

    /// Integer value if this is a (small) rational integer.
    pub fn to_i64(&self) -> Option<i64> {
        if !self.is_integer() {
            return None;
        }
        self.re.to_integer().to_i64()
    }

    pub fn conj(&self) -> Self {
        Scalar {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Squared modulus `re^2 + im^2` (a rational).
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero scalar");
        let n = self.norm_sq();
        Scalar {
            re: &self.re / &n,
            im: -&self.im / &n,
        }
    }

    /// Integer power, negative exponents allowed for nonzero base.
    pub fn pow(&self, exp: i64) -> Self {
        if exp < 0 {
            return self.inv().pow(-exp);
        }
        let mut acc = Scalar::one();
        let mut base = self.clone();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Exact square root within Q(i), if one exists.
    ///
    /// For `w = u + vi` with `w^2 = self`: the norm of `self` must be a
    /// rational square `n^2`, and `(re + n)/2` must be a rational square `u^2`.
    pub fn sqrt(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.im.is_zero() {
            if self.re.is_positive() {
                return rational_sqrt(&self.re).map(|r| Scalar {
                    re: r,
                    im: BigRational::zero(),
                });
            }
            return rational_sqrt(&(-self.re.clone())).map(|r| Scalar {
                re: BigRational::zero(),
                im: r,
            });
        }
        let n = rational_sqrt(&self.norm_sq())?;
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let u_sq = (&self.re + &n) * &half;
        let u = rational_sqrt(&u_sq)?;
        if u.is_zero() {
            return None;
        }
        let v = &self.im / (&u * BigRational::from_integer(BigInt::from(2)));
        let cand = Scalar { re: u, im: v };
        if &(&cand * &cand) == self {
            Some(cand)
        } else {
            None
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer().magnitude().clone();
    let den = r.denom().magnitude().clone();
    let sn = uint_sqrt(&num)?;
    let sd = uint_sqrt(&den)?;
    Some(BigRational::new(BigInt::from(sn), BigInt::from(sd)))
}

fn uint_sqrt(n: &BigUint) -> Option<BigUint> {
    let s = n.sqrt();
    if &(&s * &s) == n {
        Some(s)
    } else {
        None
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar::$method(self, rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar::$method(&self, &rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar::$method(&self, rhs)
            }
        }
    };
}

impl Scalar {
    fn add(a: &Scalar, b: &Scalar) -> Scalar {
        Scalar {
            re: &a.re + &b.re,
            im: &a.im + &b.im,
        }
    }
    fn sub(a: &Scalar, b: &Scalar) -> Scalar {
        Scalar {
            re: &a.re - &b.re,
            im: &a.im - &b.im,
        }
    }
    fn mul(a: &Scalar, b: &Scalar) -> Scalar {
        Scalar {
            re: &a.re * &b.re - &a.im * &b.im,
            im: &a.re * &b.im + &a.im * &b.re,
        }
    }
    fn div(a: &Scalar, b: &Scalar) -> Scalar {
        Scalar::mul(a, &b.inv())
    }
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = Scalar::add(self, rhs);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = Scalar::sub(self, rhs);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = Scalar::mul(self, rhs);
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    /// Canonical exact rendering: `a/b`, `c/d*i`, or `a/b+c/d*i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        if !self.re.is_zero() {
            out.push_str(&fmt_rational(&self.re));
        }
        if !self.im.is_zero() {
            if !self.re.is_zero() && self.im.is_positive() {
                out.push('+');
            }
            if self.im.is_one() {
                out.push('i');
            } else if (-self.im.clone()).is_one() {
                out.push_str("-i");
            } else {
                out.push_str(&fmt_rational(&self.im));
                out.push_str("*i");
            }
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarParseError(pub String);

impl fmt::Display for ScalarParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid scalar: {}", self.0)
    }
}

impl std::error::Error for ScalarParseError {}

impl FromStr for Scalar {
    type Err = ScalarParseError;

    /// Parses `a`, `a/b`, `i`, `-i`, `c/d*i`, `a/b+c/d*i`, `a/b-c/d*i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ScalarParseError(s.to_string()));
        }
        // Split into at most two signed terms.
        let bytes = compact.as_bytes();
        let mut split = None;
        for (idx, &b) in bytes.iter().enumerate().skip(1) {
            if (b == b'+' || b == b'-') && bytes[idx - 1] != b'/' && bytes[idx - 1] != b'*' {
                split = Some(idx);
                break;
            }
        }
        let (first, second) = match split {
            Some(idx) => (&compact[..idx], Some(&compact[idx..])),
            None => (&compact[..], None),
        };
        let mut result = parse_term(first).ok_or_else(|| ScalarParseError(s.to_string()))?;
        if let Some(rest) = second {
            let t = parse_term(rest).ok_or_else(|| ScalarParseError(s.to_string()))?;
            if (result.im.is_zero()) == (t.im.is_zero()) {
                // two real or two imaginary terms is not canonical
                return Err(ScalarParseError(s.to_string()));
            }
            result = Scalar::add(&result, &t);
        }
        Ok(result)
    }
}

fn parse_term(term: &str) -> Option<Scalar> {
    let (neg, body) = match term.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, term.strip_prefix('+').unwrap_or(term)),
    };
    if body.is_empty() {
        return None;
    }
    let (is_imag, numeric) = if let Some(stripped) = body.strip_suffix('i') {
        let stripped = stripped.strip_suffix('*').unwrap_or(stripped);
        (true, stripped)
    } else {
        (false, body)
    };
    let mag = if numeric.is_empty() {
        if is_imag {
            BigRational::one()
        } else {
            return None;
        }
    } else {
        let (num, den) = match numeric.split_once('/') {
            Some((n, d)) => (n, d),
            None => (numeric, "1"),
        };
        let n: BigInt = num.parse().ok()?;
        let d: BigInt = den.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        BigRational::new(n, d)
    };
    let mag = if neg { -mag } else { mag };
    Some(if is_imag {
        Scalar {
            re: BigRational::zero(),
            im: mag,
        }
    } else {
        Scalar {
            re: mag,
            im: BigRational::zero(),
        }
    })
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exact() {
        let a = Scalar::rational(1, 3);
        let b = Scalar::rational(2, 3);
        assert_eq!(&a + &b, Scalar::one());
        assert!((&a - &a).is_zero());
        let i = Scalar::i();
        assert_eq!(&i * &i, Scalar::from_int(-1));
        let z = Scalar::gaussian(1, 2, -3, 4);
        assert_eq!(&z * &z.inv(), Scalar::one());
    }

    #[test]
    fn sqrt_exact_cases() {
        assert_eq!(Scalar::from_int(4).sqrt(), Some(Scalar::from_int(2)));
        assert_eq!(Scalar::from_int(-1).sqrt(), Some(Scalar::i()));
        assert_eq!(Scalar::rational(9, 4).sqrt(), Some(Scalar::rational(3, 2)));
        assert_eq!(Scalar::from_int(2).sqrt(), None);
        // (1+i)^2 = 2i
        let two_i = Scalar::rational_i(2, 1);
        let r = two_i.sqrt().unwrap();
        assert_eq!(&r * &r, two_i);
        // i itself has no square root in Q(i)
        assert_eq!(Scalar::i().sqrt(), None);
    }

    #[test]
    fn rendering_and_parsing_round_trip() {
        let cases = [
            Scalar::zero(),
            Scalar::from_int(3),
            Scalar::from_int(-2),
            Scalar::rational(3, 2),
            Scalar::rational(-1, 2),
            Scalar::i(),
            -Scalar::i(),
            Scalar::rational_i(3, 4),
            Scalar::gaussian(1, 2, -3, 4),
            Scalar::gaussian(-1, 1, 1, 1),
        ];
        for c in &cases {
            let s = c.to_string();
            let back: Scalar = s.parse().unwrap();
            assert_eq!(&back, c, "round trip failed for {s}");
        }
        assert_eq!(
            "1/2+1/2*i".parse::<Scalar>().unwrap(),
            Scalar::gaussian(1, 2, 1, 2)
        );
        assert_eq!("-i".parse::<Scalar>().unwrap(), -Scalar::i());
        assert!("1+2".parse::<Scalar>().is_err());
        assert!("".parse::<Scalar>().is_err());
    }

    #[test]
    fn display_format_examples() {
        assert_eq!(Scalar::rational(3, 2).to_string(), "3/2");
        assert_eq!(Scalar::gaussian(1, 2, 3, 4).to_string(), "1/2+3/4*i");
        assert_eq!(Scalar::gaussian(1, 2, -3, 4).to_string(), "1/2-3/4*i");
        assert_eq!(Scalar::rational_i(-1, 1).to_string(), "-i");
    }
}
