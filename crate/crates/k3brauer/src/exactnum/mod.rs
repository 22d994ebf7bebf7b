//! Exact arithmetic kernel: arbitrary-precision integers and rationals,
//! residues in ℚ/2ℤ, dense univariate polynomials, rational functions and
//! integer matrices with Smith/Hermite normal forms.
//!
//! Everything here is immutable after construction and every operation is a
//! pure function, so values can be shared freely between threads.

mod matrix;
mod poly;
mod ratfunc;

pub use matrix::{hnf_basis_columns, IntMatrix, SmithNormalForm};
pub use poly::{Poly, Ring};
pub use ratfunc::RatFunc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision integer used throughout the crate.
pub type Int = BigInt;
/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumError {
    #[error("cannot parse rational from {0:?}")]
    BadRational(String),
    #[error("cannot parse polynomial from {0:?}")]
    BadPoly(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),
}

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}

/// Parses "p/q" or "p". Whitespace around the tokens is accepted.
pub fn parse_rational(s: &str) -> Result<Rational, NumError> {
    let s = s.trim();
    let bad = || NumError::BadRational(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: Int = p.trim().parse().map_err(|_| bad())?;
            let q: Int = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(NumError::DivisionByZero);
            }
            Ok(Rational::new(p, q))
        }
        None => {
            let p: Int = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(p))
        }
    }
}

/// Canonical text form: "p/q" for non-integers, "p" otherwise.
pub fn rational_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Reduces a rational into the half-open interval `[0, m)`.
pub fn reduce_mod(r: &Rational, m: i64) -> Rational {
    let m = rat(m);
    let q = (r / &m).floor();
    r - q * m
}

/// A residue in ℚ/2ℤ, stored as the canonical representative in `[0, 2)`.
///
/// Two residues are equal exactly when their difference is an even integer,
/// which is the equality the discriminant form of an even lattice needs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QMod2Z {
    rep: Rational,
}

impl QMod2Z {
    pub fn new(r: Rational) -> Self {
        QMod2Z {
            rep: reduce_mod(&r, 2),
        }
    }

    pub fn zero() -> Self {
        QMod2Z::new(<Rational as Zero>::zero())
    }

    /// Canonical representative in `[0, 2)`.
    pub fn rep(&self) -> &Rational {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        Zero::is_zero(&self.rep)
    }

    pub fn add(&self, other: &Self) -> Self {
        QMod2Z::new(&self.rep + &other.rep)
    }

    pub fn neg(&self) -> Self {
        QMod2Z::new(-&self.rep)
    }

    /// Multiplication by an integer scalar. Well defined on ℚ/2ℤ because the
    /// scalar is integral.
    pub fn scale(&self, k: &Int) -> Self {
        QMod2Z::new(&self.rep * Rational::from_integer(k.clone()))
    }
}

impl std::fmt::Display for QMod2Z {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", rational_string(&self.rep))
    }
}

/// Division rounded to the nearest integer, ties toward zero.
/// Guarantees `|a - q b| <= |b| / 2`.
pub(crate) fn rounded_div(a: &Int, b: &Int) -> Int {
    use num_integer::Integer;
    let (mut q, r) = a.div_rem(b);
    let two_r_abs = r.abs() * 2;
    if two_r_abs > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        for s in ["3/4", "-7/2", "0", "12", "-5"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(rational_string(&r), s);
        }
        assert_eq!(rational_string(&parse_rational("6/4").unwrap()), "3/2");
        assert_eq!(rational_string(&parse_rational("3/-4").unwrap()), "-3/4");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn qmod2z_equality() {
        let a = QMod2Z::new(ratio(1, 2));
        let b = QMod2Z::new(ratio(5, 2));
        let c = QMod2Z::new(ratio(3, 2));
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(QMod2Z::new(rat(0)), QMod2Z::new(rat(2)));
        assert_eq!(QMod2Z::new(ratio(-1, 2)).rep(), &ratio(3, 2));
    }

    #[test]
    fn rounded_div_small_remainder() {
        for a in -20i64..=20 {
            for b in [-7i64, -3, 2, 5] {
                let q = rounded_div(&int(a), &int(b));
                let r = int(a) - &q * int(b);
                assert!(r.abs() * 2 <= int(b).abs(), "a={a} b={b} q={q} r={r}");
            }
        }
    }
}
