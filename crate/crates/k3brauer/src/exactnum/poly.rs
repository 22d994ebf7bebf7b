//! Dense univariate polynomials over an arbitrary commutative ring.
//!
//! The ring is abstract so that polynomials can be nested: `Poly<Rational>`
//! is ℚ[x], `Poly<Poly<Rational>>` is ℚ[s][x], and deeper towers give
//! polynomials in several indeterminates, one level per variable.

use super::{parse_rational, rational_string, NumError, Rational};
use num_traits::{One, Signed, Zero};

/// Minimal commutative-ring interface for polynomial coefficients.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// Image of a small integer under the unique map ℤ → R.
    fn from_i64(n: i64) -> Self {
        let negate = n < 0;
        let mut n = n.unsigned_abs();
        let mut acc = Self::zero();
        let mut base = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.add(&base);
            }
            base = base.add(&base);
            n >>= 1;
        }
        if negate {
            acc.neg()
        } else {
            acc
        }
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(n.into())
    }
}

/// A polynomial in canonical form: coefficients lowest degree first with no
/// trailing zero. The zero polynomial has an empty coefficient list and its
/// degree is the sentinel `None` ("-infinity"), never `-1`.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `c x^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    pub fn x() -> Self {
        Poly::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// Degree, with `None` as the sentinel for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).add(&rhs.coeff(k)));
        }
        Poly::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, at: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    /// Substitutes another polynomial for the variable (Horner over Poly<R>).
    pub fn compose(&self, arg: &Poly<R>) -> Poly<R> {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(arg).add(&Poly::constant(c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> Poly<R> {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.mul(&R::from_i64(k as i64)));
        }
        Poly::new(out)
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        Poly::add(self, rhs)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Poly::mul(self, rhs)
    }
}

impl<R: Ring> std::fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

// Field-specific operations for polynomials over ℚ.
impl Poly<Rational> {
    /// Parses the comma-separated coefficient format, lowest degree first,
    /// e.g. "0,-1,0,4" is 4x^3 - x. Rationals are written "p/q" or "p".
    pub fn parse(s: &str) -> Result<Self, NumError> {
        if s.trim().is_empty() {
            return Err(NumError::BadPoly(s.to_string()));
        }
        let coeffs = s
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| NumError::BadPoly(s.to_string()))?;
        Ok(Poly::new(coeffs))
    }

    /// Canonical comma-separated coefficient string; the zero polynomial is "0".
    pub fn coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(rational_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Human-readable form with the given variable name.
    pub fn pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if Zero::is_zero(c) {
                continue;
            }
            let mag = rational_string(&c.abs());
            let body = match k {
                0 => mag,
                _ => {
                    let xm = if k == 1 {
                        var.to_string()
                    } else {
                        format!("{var}^{k}")
                    };
                    if c.abs().is_one() {
                        xm
                    } else {
                        format!("{mag}*{xm}")
                    }
                }
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{body}")
                } else {
                    body
                });
            } else {
                parts.push(format!("{} {body}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        parts.join(" ")
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = <Rational as One>::one() / l;
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn div_rem(&self, div: &Self) -> Result<(Self, Self), NumError> {
        if div.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        let mut rem = self.clone();
        let mut quo = Poly::zero();
        let dlead = div.leading().unwrap().clone();
        let ddeg = div.degree().unwrap();
        while let Some(rdeg) = rem.degree() {
            if rdeg < ddeg {
                break;
            }
            let factor = rem.leading().unwrap() / &dlead;
            let term = Poly::monomial(factor, rdeg - ddeg);
            quo = quo.add(&term);
            rem = rem.sub(&term.mul(div));
        }
        Ok((quo, rem))
    }

    /// Monic greatest common divisor via the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The positive rational `c` such that `self / c` has coprime integer
    /// coefficients; content of the zero polynomial is zero.
    pub fn content(&self) -> Rational {
        use num_integer::Integer;
        if self.is_zero() {
            return <Rational as Zero>::zero();
        }
        let mut num = super::Int::from(0);
        let mut den = super::Int::from(1);
        for c in &self.coeffs {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        Rational::new(num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, ratio};
    use super::*;

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::new(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn canonical_form_and_degree() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert_eq!(p(&[]).degree(), None);
        assert_eq!(p(&[0]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
        assert_eq!(p(&[0, 0, 3]).degree(), Some(2));
    }

    #[test]
    fn product_of_conjugates() {
        // (x+1)(x-1) = x^2 - 1
        assert_eq!(p(&[1, 1]).mul(&p(&[-1, 1])), p(&[-1, 0, 1]));
    }

    #[test]
    fn eval_is_exact() {
        // 4x^3 - x at 1 is 3
        assert_eq!(p(&[0, -1, 0, 4]).eval(&rat(1)), rat(3));
        assert_eq!(p(&[0, -1, 0, 4]).eval(&ratio(1, 2)), rat(0));
    }

    #[test]
    fn parse_and_print() {
        let q = Poly::parse("0,-1,0,4").unwrap();
        assert_eq!(q, p(&[0, -1, 0, 4]));
        assert_eq!(q.coeff_string(), "0,-1,0,4");
        assert_eq!(q.pretty("x"), "4*x^3 - x");
        assert_eq!(Poly::parse("1/2,3").unwrap().coeff_string(), "1/2,3");
        assert!(Poly::<Rational>::parse("").is_err());
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]); // x^2 - 1
        let b = p(&[1, 1]); // x + 1
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&b), b.monic());
        assert_eq!(p(&[2, 4]).content(), rat(2));
        assert_eq!(p(&[0]).content(), rat(0));
        let c = Poly::new(vec![ratio(1, 2), ratio(3, 4)]);
        assert_eq!(c.content(), ratio(1, 4));
    }

    #[test]
    fn compose_shifts() {
        // f(x) = x^2, f(x+1) = x^2 + 2x + 1
        let f = p(&[0, 0, 1]);
        let shift = p(&[1, 1]);
        assert_eq!(f.compose(&shift), p(&[1, 2, 1]));
    }

    #[test]
    fn nested_polynomials_multiply() {
        // (s + x)^2 over Q[s][x]: x^2 + 2s x + s^2
        type P2 = Poly<Poly<Rational>>;
        let s = P2::constant(Poly::x());
        let x = P2::x();
        let sq = s.add(&x).pow(2);
        assert_eq!(sq.coeff(0), Poly::x().pow(2));
        assert_eq!(sq.coeff(1), Poly::x().scale(&rat(2)));
        assert_eq!(sq.coeff(2), Poly::one());
    }
}
