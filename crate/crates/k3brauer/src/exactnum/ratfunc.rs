//! Rational functions over ℚ: quotients of univariate polynomials kept in
//! lowest terms with a monic denominator.

use super::poly::{Poly, Ring};
use super::{NumError, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: Poly<Rational>,
    den: Poly<Rational>,
}

impl RatFunc {
    /// Builds `num/den` in canonical form: gcd(num, den) = 1, den monic.
    pub fn new(num: Poly<Rational>, den: Poly<Rational>) -> Result<Self, NumError> {
        if den.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g)?;
        let (den, _) = den.div_rem(&g)?;
        let lead = den.leading().expect("nonzero denominator").clone();
        let inv = Rational::one() / lead;
        Ok(RatFunc {
            num: num.scale(&inv),
            den: den.monic(),
        })
    }

    pub fn from_poly(p: Poly<Rational>) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn numerator(&self) -> &Poly<Rational> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<Rational> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den == Poly::one()
    }

    pub fn inv(&self) -> Result<Self, NumError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, NumError> {
        RatFunc::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }

    /// "num/den" with canonical coefficient strings; polynomials print bare.
    pub fn display(&self, var: &str) -> String {
        if self.is_polynomial() {
            self.num.pretty(var)
        } else {
            format!("({}) / ({})", self.num.pretty(var), self.den.pretty(var))
        }
    }

    /// Coefficient-list form "num | den" used in JSON output.
    pub fn coeff_strings(&self) -> (String, String) {
        (self.num.coeff_string(), self.den.coeff_string())
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }
    fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        RatFunc::new(num, den).expect("denominators nonzero")
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        RatFunc::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
            .expect("denominators nonzero")
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::new(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn reduction_to_lowest_terms() {
        // (x^2 - 1) / (2x + 2) = (x - 1) / 2
        let f = RatFunc::new(p(&[-1, 0, 1]), p(&[2, 2])).unwrap();
        assert_eq!(f.numerator(), &p(&[-1, 1]).scale(&super::super::ratio(1, 2)));
        assert_eq!(f.denominator(), &Poly::one());
    }

    #[test]
    fn monic_denominator() {
        let f = RatFunc::new(p(&[1]), p(&[0, 3])).unwrap();
        assert_eq!(f.denominator(), &p(&[0, 1]));
        assert_eq!(f.numerator(), &Poly::constant(super::super::ratio(1, 3)));
    }

    #[test]
    fn field_operations() {
        let x = RatFunc::from_poly(p(&[0, 1]));
        let inv_x = x.inv().unwrap();
        assert_eq!(x.mul(&inv_x), RatFunc::one());
        let sum = x.add(&inv_x); // (x^2 + 1)/x
        assert_eq!(sum.numerator(), &p(&[1, 0, 1]));
        assert_eq!(sum.denominator(), &p(&[0, 1]));
        assert!(RatFunc::new(p(&[1]), p(&[])).is_err());
    }
}
