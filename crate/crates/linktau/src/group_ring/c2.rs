//! The group algebra `Z_2[Z_2]` on the basis `{1, t}` with `t^2 = 1`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::Error;

/// An element `a + b*t` of `Z_2[Z_2]`, with `a` and `b` bits.
///
/// Multiplication follows `t^2 = 1`:
/// `(a + b t)(c + d t) = (ac + bd) + (ad + bc) t` over `Z_2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct C2Algebra {
    /// Coefficient of `1`.
    pub one: bool,
    /// Coefficient of `t`.
    pub t: bool,
}

impl C2Algebra {
    /// The zero element.
    pub const ZERO: Self = Self::new(false, false);
    /// The multiplicative identity `1`.
    pub const ONE: Self = Self::new(true, false);
    /// The generator `t`.
    pub const T: Self = Self::new(false, true);
    /// The element `1 + t`.
    pub const ONE_PLUS_T: Self = Self::new(true, true);

    /// Builds `one * 1 + t * t` from the two bits.
    pub const fn new(one: bool, t: bool) -> Self {
        Self { one, t }
    }

    /// Reduces an integer coefficient of `t^exp` into the algebra, using
    /// `t^exp = t^(exp mod 2)`.
    pub fn from_integer_monomial(coeff: &num_bigint::BigInt, exp: i64) -> Self {
        let bit = coeff.bit(0);
        if exp.rem_euclid(2) == 0 {
            Self::new(bit, false)
        } else {
            Self::new(false, bit)
        }
    }

    /// Whether this is the zero element.
    pub fn is_zero(&self) -> bool {
        !self.one && !self.t
    }
}

// ---- Ring operations ----

impl std::ops::Add<&C2Algebra> for &C2Algebra {
    type Output = C2Algebra;
    fn add(self, rhs: &C2Algebra) -> C2Algebra {
        C2Algebra::new(self.one ^ rhs.one, self.t ^ rhs.t)
    }
}

impl std::ops::Sub<&C2Algebra> for &C2Algebra {
    type Output = C2Algebra;
    // Characteristic two: subtraction and addition coincide.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: &C2Algebra) -> C2Algebra {
        self + rhs
    }
}

impl std::ops::Mul<&C2Algebra> for &C2Algebra {
    type Output = C2Algebra;
    fn mul(self, rhs: &C2Algebra) -> C2Algebra {
        C2Algebra::new(
            (self.one & rhs.one) ^ (self.t & rhs.t),
            (self.one & rhs.t) ^ (self.t & rhs.one),
        )
    }
}

impl std::ops::Neg for C2Algebra {
    type Output = C2Algebra;
    fn neg(self) -> C2Algebra {
        self
    }
}

super::forward_binop!(C2Algebra, Add, add);
super::forward_binop!(C2Algebra, Sub, sub);
super::forward_binop!(C2Algebra, Mul, mul);

impl Zero for C2Algebra {
    fn zero() -> Self {
        Self::ZERO
    }
    fn is_zero(&self) -> bool {
        C2Algebra::is_zero(self)
    }
}

impl One for C2Algebra {
    fn one() -> Self {
        Self::ONE
    }
}

// ---- Text form ----

impl fmt::Display for C2Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match (self.one, self.t) {
            (false, false) => "0",
            (true, false) => "1",
            (false, true) => "t",
            (true, true) => "1 + t",
        };
        f.write_str(text)
    }
}

impl FromStr for C2Algebra {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        let mut value = Self::ZERO;
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(Error::InvalidPolynomial("empty element".to_string()));
        }
        for term in trimmed.split(" + ") {
            match term.trim() {
                "0" => {}
                "1" => value = value + Self::ONE,
                "t" => value = value + Self::T,
                other => {
                    return Err(Error::InvalidPolynomial(format!(
                        "bad term `{other}` for Z2[Z2]"
                    )))
                }
            }
        }
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_squares_to_one() {
        assert_eq!(C2Algebra::T * C2Algebra::T, C2Algebra::ONE);
    }

    #[test]
    fn one_plus_t_squares_to_zero() {
        let x = C2Algebra::ONE_PLUS_T;
        assert!((x * x).is_zero());
    }

    #[test]
    fn one_is_identity() {
        for x in all() {
            assert_eq!(C2Algebra::ONE * x, x);
            assert_eq!(x * C2Algebra::ONE, x);
        }
    }

    #[test]
    fn addition_is_componentwise_xor() {
        assert_eq!(C2Algebra::ONE + C2Algebra::T, C2Algebra::ONE_PLUS_T);
        for x in all() {
            assert!((x + x).is_zero());
            assert_eq!(x - x, x + x);
        }
    }

    #[test]
    fn display_and_parse_round_trip() {
        for x in all() {
            let text = x.to_string();
            assert_eq!(text.parse::<C2Algebra>().unwrap(), x);
        }
        assert_eq!(C2Algebra::ONE_PLUS_T.to_string(), "1 + t");
        assert!("q".parse::<C2Algebra>().is_err());
    }

    #[test]
    fn integer_monomials_reduce_mod_two() {
        use num_bigint::BigInt;
        let three = BigInt::from(3);
        let minus_four = BigInt::from(-4);
        assert_eq!(C2Algebra::from_integer_monomial(&three, 2), C2Algebra::ONE);
        assert_eq!(C2Algebra::from_integer_monomial(&three, -3), C2Algebra::T);
        assert!(C2Algebra::from_integer_monomial(&minus_four, 1).is_zero());
    }

    fn all() -> [C2Algebra; 4] {
        [
            C2Algebra::ZERO,
            C2Algebra::ONE,
            C2Algebra::T,
            C2Algebra::ONE_PLUS_T,
        ]
    }
}
