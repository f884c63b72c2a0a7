//! Exact integer and rational arithmetic.
//!
//! Everything here is integer-only. Side lengths are `u64`; any product of
//! two sides is formed in `u128`, and rationals carry `i128` numerators and
//! denominators. Operations that could exceed those widths use checked
//! arithmetic and report [`ExactError::Overflow`] instead of wrapping, so a
//! result is either exact or absent.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("value is not a perfect square")]
    NotASquare,
    #[error("arguments are not coprime (gcd = {0})")]
    NotCoprime(u64),
    #[error("product of the arguments is not a perfect square")]
    NotASquareProduct,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("malformed rational literal")]
    Parse,
}

/// Greatest common divisor of two positive integers.
pub fn gcd(x: u64, y: u64) -> u64 {
    debug_assert!(
        x >= 1 && y >= 1,
        "gcd is defined here for positive inputs only"
    );
    x.gcd(&y)
}

/// gcd of three positive integers.
pub fn gcd3(x: u64, y: u64, z: u64) -> u64 {
    gcd(gcd(x, y), z)
}

/// Floor of the square root.
pub fn isqrt(n: u128) -> u128 {
    n.isqrt()
}

/// Returns `s` with `s * s == n`, or [`ExactError::NotASquare`].
pub fn as_perfect_square(n: u128) -> Result<u128, ExactError> {
    let s = isqrt(n);
    if s * s == n {
        Ok(s)
    } else {
        Err(ExactError::NotASquare)
    }
}

/// Splits coprime `p`, `q` whose product is a square into `(p1, q1)` with
/// `p = p1²` and `q = q1²`.
pub fn coprime_square_split(p: u64, q: u64) -> Result<(u64, u64), ExactError> {
    let g = gcd(p, q);
    if g != 1 {
        return Err(ExactError::NotCoprime(g));
    }
    let product = u128::from(p) * u128::from(q);
    as_perfect_square(product).map_err(|_| ExactError::NotASquareProduct)?;
    // Coprime factors of a square are themselves squares.
    let p1 = as_perfect_square(u128::from(p)).map_err(|_| ExactError::NotASquareProduct)?;
    let q1 = as_perfect_square(u128::from(q)).map_err(|_| ExactError::NotASquareProduct)?;
    Ok((p1 as u64, q1 as u64))
}

/// An exact rational number kept in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: i128, den: i128) -> Result<Self, ExactError> {
        if den == 0 {
            return Err(ExactError::ZeroDenominator);
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = num.checked_neg().ok_or(ExactError::Overflow)?;
            den = den.checked_neg().ok_or(ExactError::Overflow)?;
        }
        Ok(Rational { num, den })
    }

    pub fn from_integer(n: i128) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// The value as an integer, if the denominator is one.
    pub fn to_integer(&self) -> Option<i128> {
        self.is_integer().then_some(self.num)
    }

    pub fn checked_add(&self, rhs: &Rational) -> Result<Rational, ExactError> {
        // a/b + c/d over the lcm of the denominators keeps intermediates small.
        let g = self.den.gcd(&rhs.den);
        let lhs_scale = rhs.den / g;
        let rhs_scale = self.den / g;
        let num = mul(self.num, lhs_scale)?
            .checked_add(mul(rhs.num, rhs_scale)?)
            .ok_or(ExactError::Overflow)?;
        let den = mul(self.den, lhs_scale)?;
        Rational::new(num, den)
    }

    pub fn checked_neg(&self) -> Result<Rational, ExactError> {
        Ok(Rational {
            num: self.num.checked_neg().ok_or(ExactError::Overflow)?,
            den: self.den,
        })
    }

    pub fn checked_sub(&self, rhs: &Rational) -> Result<Rational, ExactError> {
        self.checked_add(&rhs.checked_neg()?)
    }

    pub fn checked_mul(&self, rhs: &Rational) -> Result<Rational, ExactError> {
        // Cross-reduce first so the products stay in lowest terms.
        let g1 = self.num.gcd(&rhs.den).max(1);
        let g2 = rhs.num.gcd(&self.den).max(1);
        let num = mul(self.num / g1, rhs.num / g2)?;
        let den = mul(self.den / g2, rhs.den / g1)?;
        Rational::new(num, den)
    }

    pub fn checked_mul_int(&self, rhs: i128) -> Result<Rational, ExactError> {
        self.checked_mul(&Rational::from_integer(rhs))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, ExactError> {
        if rhs.num == 0 {
            return Err(ExactError::ZeroDenominator);
        }
        let recip = Rational::new(rhs.den, rhs.num)?;
        self.checked_mul(&recip)
    }

    /// Exact comparison; `None` only if the cross products overflow.
    pub fn checked_cmp(&self, rhs: &Rational) -> Option<Ordering> {
        let l = self.num.checked_mul(rhs.den)?;
        let r = rhs.num.checked_mul(self.den)?;
        Some(l.cmp(&r))
    }

    /// Floating-point approximation, for display only.
    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

fn mul(x: i128, y: i128) -> Result<i128, ExactError> {
    x.checked_mul(y).ok_or(ExactError::Overflow)
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(i128::from(n))
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational::from_integer(i128::from(n))
    }
}

/// Always written as `p/q`, including integers (`10/1`).
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Accepts `p/q` or a bare integer `p`.
impl FromStr for Rational {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n = n.trim().parse::<i128>().map_err(|_| ExactError::Parse)?;
                let d = d.trim().parse::<i128>().map_err(|_| ExactError::Parse)?;
                Rational::new(n, d)
            }
            None => s
                .parse::<i128>()
                .map(Rational::from_integer)
                .map_err(|_| ExactError::Parse),
        }
    }
}
