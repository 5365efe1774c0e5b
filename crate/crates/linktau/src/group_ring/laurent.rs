//! Laurent polynomials over `Z` in the single variable `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;

use super::{accumulate, exp_add, factor_string, join_terms, monomial_string, parse_terms};

/// An element of `Z[t, t^-1]`, stored as exponent-to-coefficient terms.
///
/// Zero coefficients are never stored, so two values are equal exactly when
/// they are the same polynomial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Laurent {
    terms: BTreeMap<i64, BigInt>,
}

impl Laurent {
    // ---- Constructors ----

    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The generator `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// The monomial `coeff * t^exp`; yields zero when `coeff` is zero.
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, exp, coeff.into());
        Self { terms }
    }

    /// Sums an arbitrary collection of `(exponent, coefficient)` terms.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut out = BTreeMap::new();
        for (exp, coeff) in terms {
            accumulate(&mut out, exp, coeff);
        }
        Self { terms: out }
    }

    // ---- Inspection ----

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of `t^exp` (zero when the term is absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(exp, coeff)| (*exp, coeff))
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Largest absolute value among exponents, zero for the zero polynomial.
    pub fn max_abs_exponent(&self) -> i64 {
        self.terms.keys().map(|exp| exp.abs()).max().unwrap_or(0)
    }

    /// Evaluates at `t = 1`, i.e. sums all coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Multiplies by the monomial `coeff * t^exp`.
    pub fn mul_monomial(&self, coeff: &BigInt, exp: i64) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (exp_add(*e, exp), c * coeff))
            .collect();
        Self { terms }
    }
}

// ---- Ring operations ----

impl std::ops::Add<&Laurent> for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut terms = self.terms.clone();
        for (exp, coeff) in &rhs.terms {
            accumulate(&mut terms, *exp, coeff.clone());
        }
        Laurent { terms }
    }
}

impl std::ops::Sub<&Laurent> for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut terms = self.terms.clone();
        for (exp, coeff) in &rhs.terms {
            accumulate(&mut terms, *exp, -coeff);
        }
        Laurent { terms }
    }
}

impl std::ops::Mul<&Laurent> for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                accumulate(&mut terms, exp_add(*e1, *e2), c1 * c2);
            }
        }
        Laurent { terms }
    }
}

impl std::ops::Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        let terms = self.terms.iter().map(|(e, c)| (*e, -c)).collect();
        Laurent { terms }
    }
}

impl std::ops::Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        -&self
    }
}

super::forward_binop!(Laurent, Add, add);
super::forward_binop!(Laurent, Sub, sub);
super::forward_binop!(Laurent, Mul, mul);

impl Zero for Laurent {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn is_zero(&self) -> bool {
        Laurent::is_zero(self)
    }
}

impl One for Laurent {
    fn one() -> Self {
        Laurent::one()
    }
}

// ---- Text form ----

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = self
            .terms
            .iter()
            .rev()
            .map(|(exp, coeff)| {
                let factors = factor_string('t', *exp).unwrap_or_default();
                monomial_string(coeff, &factors)
            })
            .collect();
        f.write_str(&join_terms(rendered))
    }
}

impl FromStr for Laurent {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        let mut terms = BTreeMap::new();
        for term in parse_terms(text).map_err(Error::InvalidPolynomial)? {
            if term.s_exp != 0 {
                return Err(Error::InvalidPolynomial(format!(
                    "variable s is not allowed in `{text}`"
                )));
            }
            accumulate(&mut terms, term.t_exp, term.coeff);
        }
        Ok(Self { terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(text: &str) -> Laurent {
        text.parse().unwrap()
    }

    #[test]
    fn addition_merges_terms() {
        let step = lp("t + -1");
        assert_eq!(&step + &step, lp("2*t + -2"));
    }

    #[test]
    fn sigma_style_combination() {
        // (t^2 - 1) - 4 (t - 1) = t^2 - 4 t + 3.
        let combined = lp("t^2 + -1") - lp("t + -1").mul_monomial(&4.into(), 0);
        assert_eq!(combined, lp("t^2 + -4*t + 3"));
        assert_eq!(combined.to_string(), "t^2 + -4*t + 3");
    }

    #[test]
    fn product_expands() {
        let p = lp("1 + t");
        assert_eq!(&p * &p, lp("t^2 + 2*t + 1"));
    }

    #[test]
    fn cancellation_prunes_storage() {
        let p = lp("t^3 + 5");
        assert!((&p - &p).is_zero());
        assert_eq!((&p - &p).term_count(), 0);
    }

    #[test]
    fn monomial_with_zero_coefficient_is_zero() {
        assert!(Laurent::monomial(0, 7).is_zero());
    }

    #[test]
    fn display_orders_terms_descending() {
        let p = Laurent::from_terms([(0, 3.into()), (2, 1.into()), (1, (-4).into())]);
        assert_eq!(p.to_string(), "t^2 + -4*t + 3");
        assert_eq!(Laurent::zero().to_string(), "0");
        assert_eq!(Laurent::monomial(-1, -1).to_string(), "-t^-1");
        assert_eq!(Laurent::monomial(2, 1).to_string(), "2*t");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<Laurent>().is_err());
        assert!("t^".parse::<Laurent>().is_err());
        assert!("s + 1".parse::<Laurent>().is_err());
        assert!("1 + + t".parse::<Laurent>().is_err());
        assert!("x^2".parse::<Laurent>().is_err());
    }

    #[test]
    fn exponent_bounds() {
        let p = lp("t^-7 + 2*t^3");
        assert_eq!(p.min_exponent(), Some(-7));
        assert_eq!(p.max_exponent(), Some(3));
        assert_eq!(p.max_abs_exponent(), 7);
        assert_eq!(p.eval_one(), 3.into());
    }
}
