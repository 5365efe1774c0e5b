//! Group rings used by the link-homotopy invariants.
//!
//! Three coefficient systems appear throughout the crate:
//!
//! * [`Laurent`] - the integral group ring `Z[Z]`, written as Laurent
//!   polynomials in `t`;
//! * [`BiLaurent`] - the group ring `Z[Z + Z]`, written as Laurent
//!   polynomials in `s` and `t`;
//! * [`C2Algebra`] - the group algebra `Z_2[Z_2]` on `{1, t}` with `t^2 = 1`.
//!
//! All arithmetic is exact: coefficients are arbitrary-precision integers
//! (bits for [`C2Algebra`]) and zero terms are never stored, so structural
//! equality is semantic equality.
//!
//! Every type has a canonical textual form, produced by `Display` and read
//! back by `FromStr`.  Monomials print as `a*s^k*t^l`: the coefficient is
//! dropped when it is `1` (a bare `-` is kept for `-1`), `^1` is dropped,
//! exponent-zero factors are dropped entirely, and terms are joined with
//! ` + ` in descending lexicographic order of (k, l).  The zero element
//! prints as `0`.

mod bilaurent;
mod c2;
mod laurent;

pub use bilaurent::BiLaurent;
pub use c2::C2Algebra;
pub use laurent::Laurent;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Forwards the owned/borrowed operator variants to the `&T op &T` impl.
macro_rules! forward_binop {
    ($t:ty, $trait:ident, $method:ident) => {
        impl std::ops::$trait<$t> for $t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                (&self).$method(&rhs)
            }
        }
        impl std::ops::$trait<&$t> for $t {
            type Output = $t;
            fn $method(self, rhs: &$t) -> $t {
                (&self).$method(rhs)
            }
        }
        impl std::ops::$trait<$t> for &$t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                self.$method(&rhs)
            }
        }
    };
}

pub(crate) use forward_binop;

// ---- Shared rendering helpers ----

/// Renders one monomial given its coefficient and pre-built factor part
/// (for example `s^2*t`, or the empty string for a constant term).
fn monomial_string(coeff: &BigInt, factors: &str) -> String {
    if factors.is_empty() {
        coeff.to_string()
    } else if coeff.is_one() {
        factors.to_string()
    } else if (-coeff).is_one() {
        format!("-{factors}")
    } else {
        format!("{coeff}*{factors}")
    }
}

/// Renders one variable factor, or `None` for exponent zero.
fn factor_string(var: char, exp: i64) -> Option<String> {
    match exp {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{exp}")),
    }
}

/// Joins rendered monomials with ` + `, or prints `0` for no terms.
fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

// ---- Shared parsing helpers ----

/// One parsed monomial: coefficient and the exponents of `s` and `t`.
struct ParsedTerm {
    coeff: BigInt,
    s_exp: i64,
    t_exp: i64,
}

/// Parses a single monomial in the canonical grammar, such as `-4*t`,
/// `t^2`, `3`, `s^-2*t^-3` or `-t`.  Repeated variable factors accumulate
/// their exponents.
fn parse_term(term: &str) -> Result<ParsedTerm, String> {
    let term = term.trim();
    if term.is_empty() {
        return Err("empty term".to_string());
    }
    let (negated, body) = match term.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, term),
    };
    if body.is_empty() {
        return Err("dangling sign".to_string());
    }

    let mut coeff: Option<BigInt> = None;
    let mut s_exp = 0i64;
    let mut t_exp = 0i64;
    for (i, piece) in body.split('*').enumerate() {
        let piece = piece.trim();
        if piece.is_empty() {
            return Err(format!("empty factor in term `{term}`"));
        }
        if piece.chars().next().is_some_and(|c| c.is_ascii_digit()) {
            if i != 0 || coeff.is_some() {
                return Err(format!("misplaced coefficient in term `{term}`"));
            }
            let value: BigInt = piece
                .parse()
                .map_err(|_| format!("bad coefficient `{piece}`"))?;
            coeff = Some(value);
            continue;
        }
        let (var, exp_part) = piece.split_at(1);
        let exp = if exp_part.is_empty() {
            1
        } else {
            let digits = exp_part
                .strip_prefix('^')
                .ok_or_else(|| format!("bad factor `{piece}`"))?;
            digits
                .parse::<i64>()
                .map_err(|_| format!("bad exponent in `{piece}`"))?
        };
        match var {
            "s" => s_exp += exp,
            "t" => t_exp += exp,
            _ => return Err(format!("unknown variable `{var}`")),
        }
    }

    let mut coeff = coeff.unwrap_or_else(BigInt::one);
    if negated {
        coeff = -coeff;
    }
    Ok(ParsedTerm {
        coeff,
        s_exp,
        t_exp,
    })
}

/// Splits a canonical polynomial string into monomials and parses each.
/// The zero polynomial is the single term `0`.
fn parse_terms(text: &str) -> Result<Vec<ParsedTerm>, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("empty polynomial".to_string());
    }
    if text == "0" {
        return Ok(Vec::new());
    }
    text.split(" + ").map(parse_term).collect()
}

/// Adds `delta` into the coefficient stored under `key`, removing the entry
/// when the sum vanishes.
fn accumulate<K: Ord>(terms: &mut std::collections::BTreeMap<K, BigInt>, key: K, delta: BigInt) {
    if delta.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(key) {
        Entry::Vacant(slot) => {
            slot.insert(delta);
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += delta;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

/// Adds two exponents, failing loudly instead of wrapping.
pub(crate) fn exp_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("exponent overflow")
}
