//! Laurent polynomials over `Z` in the two variables `s` and `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;

use super::{
    accumulate, exp_add, factor_string, join_terms, monomial_string, parse_terms, Laurent,
};

/// An element of `Z[s, s^-1, t, t^-1]`, keyed by the exponent pair `(k, l)`
/// of `s^k t^l` in lexicographic order.
///
/// Zero coefficients are never stored, so structural equality is semantic
/// equality and iteration order is canonical.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiLaurent {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BiLaurent {
    // ---- Constructors ----

    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// The generator `s`.
    pub fn s() -> Self {
        Self::monomial(1, 1, 0)
    }

    /// The generator `t`.
    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// The monomial `coeff * s^k * t^l`; yields zero when `coeff` is zero.
    pub fn monomial(coeff: impl Into<BigInt>, k: i64, l: i64) -> Self {
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, (k, l), coeff.into());
        Self { terms }
    }

    /// Sums an arbitrary collection of `((k, l), coefficient)` terms.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((i64, i64), BigInt)>,
    {
        let mut out = BTreeMap::new();
        for (key, coeff) in terms {
            accumulate(&mut out, key, coeff);
        }
        Self { terms: out }
    }

    /// Embeds a one-variable polynomial `g(t)` as `s^k * g(t)`, sending each
    /// term `a t^m` to `a s^k t^m`.
    pub fn from_laurent_shifted(g: &Laurent, k: i64) -> Self {
        let terms = g.terms().map(|(m, c)| ((k, m), c.clone())).collect();
        Self { terms }
    }

    // ---- Inspection ----

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of `s^k t^l` (zero when the term is absent).
    pub fn coeff(&self, k: i64, l: i64) -> BigInt {
        self.terms
            .get(&(k, l))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending lexicographic order of `(k, l)`.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.terms.iter().map(|(key, coeff)| (*key, coeff))
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Largest absolute value among all `s` and `t` exponents, zero for the
    /// zero polynomial.
    pub fn max_abs_exponent(&self) -> i64 {
        self.terms
            .keys()
            .map(|(k, l)| k.abs().max(l.abs()))
            .max()
            .unwrap_or(0)
    }

    /// Evaluates at `s = t = 1`, i.e. sums all coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }
}

// ---- Ring operations ----

impl std::ops::Add<&BiLaurent> for &BiLaurent {
    type Output = BiLaurent;
    fn add(self, rhs: &BiLaurent) -> BiLaurent {
        let mut terms = self.terms.clone();
        for (key, coeff) in &rhs.terms {
            accumulate(&mut terms, *key, coeff.clone());
        }
        BiLaurent { terms }
    }
}

impl std::ops::Sub<&BiLaurent> for &BiLaurent {
    type Output = BiLaurent;
    fn sub(self, rhs: &BiLaurent) -> BiLaurent {
        let mut terms = self.terms.clone();
        for (key, coeff) in &rhs.terms {
            accumulate(&mut terms, *key, -coeff);
        }
        BiLaurent { terms }
    }
}

impl std::ops::Mul<&BiLaurent> for &BiLaurent {
    type Output = BiLaurent;
    fn mul(self, rhs: &BiLaurent) -> BiLaurent {
        let mut terms = BTreeMap::new();
        for ((k1, l1), c1) in &self.terms {
            for ((k2, l2), c2) in &rhs.terms {
                accumulate(&mut terms, (exp_add(*k1, *k2), exp_add(*l1, *l2)), c1 * c2);
            }
        }
        BiLaurent { terms }
    }
}

impl std::ops::Neg for &BiLaurent {
    type Output = BiLaurent;
    fn neg(self) -> BiLaurent {
        let terms = self.terms.iter().map(|(key, c)| (*key, -c)).collect();
        BiLaurent { terms }
    }
}

impl std::ops::Neg for BiLaurent {
    type Output = BiLaurent;
    fn neg(self) -> BiLaurent {
        -&self
    }
}

super::forward_binop!(BiLaurent, Add, add);
super::forward_binop!(BiLaurent, Sub, sub);
super::forward_binop!(BiLaurent, Mul, mul);

impl Zero for BiLaurent {
    fn zero() -> Self {
        BiLaurent::zero()
    }
    fn is_zero(&self) -> bool {
        BiLaurent::is_zero(self)
    }
}

impl One for BiLaurent {
    fn one() -> Self {
        BiLaurent::one()
    }
}

// ---- Text form ----

impl fmt::Display for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = self
            .terms
            .iter()
            .rev()
            .map(|((k, l), coeff)| {
                let factors = [factor_string('s', *k), factor_string('t', *l)]
                    .into_iter()
                    .flatten()
                    .collect::<Vec<_>>()
                    .join("*");
                monomial_string(coeff, &factors)
            })
            .collect();
        f.write_str(&join_terms(rendered))
    }
}

impl FromStr for BiLaurent {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        let mut terms = BTreeMap::new();
        for term in parse_terms(text).map_err(Error::InvalidPolynomial)? {
            accumulate(&mut terms, (term.s_exp, term.t_exp), term.coeff);
        }
        Ok(Self { terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(text: &str) -> BiLaurent {
        text.parse().unwrap()
    }

    #[test]
    fn monomial_examples() {
        assert_eq!(BiLaurent::monomial(1, 1, 1).to_string(), "s*t");
        assert_eq!(BiLaurent::monomial(-1, -2, -3).to_string(), "-s^-2*t^-3");
        assert!(BiLaurent::monomial(0, 5, 7).is_zero());
    }

    #[test]
    fn display_orders_descending_lexicographically() {
        let tau = bp("1") + bp("s") + bp("s*t") + bp("s*t^2");
        assert_eq!(tau.to_string(), "s*t^2 + s*t + s + 1");
    }

    #[test]
    fn product_distributes_over_both_variables() {
        let p = bp("s + t");
        assert_eq!(&p * &p, bp("s^2 + 2*s*t + t^2"));
    }

    #[test]
    fn shifted_embedding_multiplies_by_s_power() {
        let g: Laurent = "1 + -1*t^2".parse().unwrap();
        assert_eq!(BiLaurent::from_laurent_shifted(&g, 1), bp("s + -s*t^2"));
        assert_eq!(BiLaurent::from_laurent_shifted(&g, 0), bp("1 + -1*t^2"));
    }

    #[test]
    fn exponent_bound_covers_both_variables() {
        assert_eq!(bp("s^-9*t^3 + s*t^4").max_abs_exponent(), 9);
        assert_eq!(BiLaurent::zero().max_abs_exponent(), 0);
    }

    #[test]
    fn parse_accepts_canonical_output() {
        let p = bp("2*s^3*t^-1 + -s + 7");
        let round: BiLaurent = p.to_string().parse().unwrap();
        assert_eq!(round, p);
    }
}
