//! Equality in the quotient of `Z[s^-1, s, t^-1, t]` by the relation family
//! `R`.
//!
//! The quotient is presented by four relator families:
//!
//! * `R1`: `s^k t^k - s^k`,
//! * `R2`: `s^k t^l + s^-k t^(l-k)`,
//! * `R3`: `s^k t^l + s^l t^k`,
//! * `R4`: `s^k g(t) - w2 * s^k` for each recorded sphere pairing value
//!   `g(t)` with its `w2` bit.
//!
//! No normal form is known for this quotient, so equality is semidecided.
//! Within an exponent window `W` all relator instances with `|k|, |l| <= W`
//! are enumerated and membership of `x - y` in their integer span is decided
//! exactly by lattice reduction; a hit yields a replayable [`Equal`]
//! certificate.  On a miss the separating homomorphism `phi` is tried: when
//! `phi` vanishes on every enumerated relator (always true for `R1`..`R3`,
//! checked for `R4`), differing images prove the classes [`Distinct`].
//! Otherwise the answer is an honest [`Unknown`] recording the window.
//!
//! [`Equal`]: EqualityCertificate::Equal
//! [`Distinct`]: EqualityCertificate::Distinct
//! [`Unknown`]: EqualityCertificate::Unknown

mod lattice;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;
use crate::group_ring::{BiLaurent, C2Algebra, Laurent};
use crate::invariants::phi;

use lattice::LatticeBasis;

// ---- Relators ----

/// One concrete relator instance of the family `R`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Relator {
    /// `s^k t^k - s^k`
    R1 { k: i64 },
    /// `s^k t^l + s^-k t^(l-k)`
    R2 { k: i64, l: i64 },
    /// `s^k t^l + s^l t^k`
    R3 { k: i64, l: i64 },
    /// `s^k g(t) - w2 * s^k`
    R4 { g: Laurent, w2: bool, k: i64 },
}

impl Relator {
    /// Expands the relator to its polynomial representative.
    pub fn expand(&self) -> BiLaurent {
        match self {
            Relator::R1 { k } => BiLaurent::monomial(1, *k, *k) - BiLaurent::monomial(1, *k, 0),
            Relator::R2 { k, l } => {
                let shifted = l.checked_sub(*k).expect("exponent overflow");
                BiLaurent::monomial(1, *k, *l) + BiLaurent::monomial(1, -k, shifted)
            }
            Relator::R3 { k, l } => BiLaurent::monomial(1, *k, *l) + BiLaurent::monomial(1, *l, *k),
            Relator::R4 { g, w2, k } => {
                BiLaurent::from_laurent_shifted(g, *k) - BiLaurent::monomial(i64::from(*w2), *k, 0)
            }
        }
    }

    /// The one-variable polynomial an `R4` line carries: `g(t) - w2`, so the
    /// printed line determines the relator together with `k`.
    fn net_r4(g: &Laurent, w2: bool) -> Laurent {
        g - &Laurent::monomial(i64::from(w2), 0)
    }
}

impl fmt::Display for Relator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relator::R1 { k } => write!(f, "R1 k={k}"),
            Relator::R2 { k, l } => write!(f, "R2 k={k} l={l}"),
            Relator::R3 { k, l } => write!(f, "R3 k={k} l={l}"),
            Relator::R4 { g, w2, k } => {
                write!(f, "R4 k={k} g={}", Relator::net_r4(g, *w2))
            }
        }
    }
}

// ---- Context ----

/// Everything an equality query needs: the exponent window and the recorded
/// `R4` data, one `(g, w2)` pair per sphere.
///
/// Contexts are immutable; queries are pure functions of `(x, y, context)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientContext {
    window: i64,
    r4_data: Vec<(Laurent, bool)>,
}

impl QuotientContext {
    /// A context over `R1`-`R3` only.
    pub fn new(window: i64) -> Self {
        Self::with_r4_data(window, Vec::new())
    }

    /// A context carrying `R4` instances for the given `(g, w2)` pairs.
    pub fn with_r4_data(window: i64, r4_data: Vec<(Laurent, bool)>) -> Self {
        assert!(window >= 0, "window must be nonnegative");
        Self { window, r4_data }
    }

    /// The exponent window `W`.
    pub fn window(&self) -> i64 {
        self.window
    }

    /// The recorded `(g, w2)` pairs.
    pub fn r4_data(&self) -> &[(Laurent, bool)] {
        &self.r4_data
    }

    /// Default window for the given values: their largest exponent magnitude
    /// plus four.
    pub fn auto_window<'a>(values: impl IntoIterator<Item = &'a BiLaurent>) -> i64 {
        let max = values
            .into_iter()
            .map(BiLaurent::max_abs_exponent)
            .max()
            .unwrap_or(0);
        max + 4
    }

    /// All relator instances with `|k|, |l| <= W` whose expansion is nonzero,
    /// in a fixed deterministic order: `R1`, then `R2`, then `R3` (both in
    /// ascending `(k, l)`), then `R4` per recorded sphere.
    pub fn relator_instances(&self) -> Vec<Relator> {
        let w = self.window;
        let mut out = Vec::new();
        for k in -w..=w {
            out.push(Relator::R1 { k });
        }
        for k in -w..=w {
            for l in -w..=w {
                out.push(Relator::R2 { k, l });
            }
        }
        for k in -w..=w {
            for l in -w..=w {
                out.push(Relator::R3 { k, l });
            }
        }
        for (g, w2) in &self.r4_data {
            for k in -w..=w {
                out.push(Relator::R4 {
                    g: g.clone(),
                    w2: *w2,
                    k,
                });
            }
        }
        out.retain(|r| !r.expand().is_zero());
        out
    }

    /// The expansions of [`Self::relator_instances`], in the same order.
    pub fn enumerate_relators(&self) -> Vec<BiLaurent> {
        self.relator_instances()
            .iter()
            .map(Relator::expand)
            .collect()
    }

    /// Semidecides whether `x` and `y` represent the same class mod `R`.
    ///
    /// Errors when either input carries an exponent beyond the window, since
    /// the enumerated relators could then never reach all of its terms.
    pub fn are_equal(&self, x: &BiLaurent, y: &BiLaurent) -> Result<EqualityCertificate, Error> {
        let required = x.max_abs_exponent().max(y.max_abs_exponent());
        if required > self.window {
            return Err(Error::WindowTooSmall {
                window: self.window,
                required,
            });
        }

        let diff = x - y;
        if diff.is_zero() {
            return Ok(EqualityCertificate::Equal {
                combination: Vec::new(),
            });
        }

        let instances = self.relator_instances();
        let expansions: Vec<BiLaurent> = instances.iter().map(Relator::expand).collect();

        // Single-relator fast path, so the certificate names the one
        // defining relation when there is one.
        let negated = -&diff;
        for (relator, expansion) in instances.iter().zip(&expansions) {
            if *expansion == diff {
                return Ok(EqualityCertificate::Equal {
                    combination: vec![(relator.clone(), BigInt::one())],
                });
            }
            if *expansion == negated {
                return Ok(EqualityCertificate::Equal {
                    combination: vec![(relator.clone(), -BigInt::one())],
                });
            }
        }

        if let Some(combination) = span_combination(&instances, &expansions, &diff) {
            return Ok(EqualityCertificate::Equal { combination });
        }

        // phi separates classes only when it vanishes on every enumerated
        // relator.  That holds for `R1`..`R3` always and for `R4` data from
        // spheres with vanishing reduced pairing; arbitrary `R4` data can
        // break it, so it is checked rather than assumed.
        let phi_descends = expansions.iter().all(|e| phi(e).is_zero());
        if phi_descends {
            let lhs = phi(x);
            let rhs = phi(y);
            if lhs != rhs {
                return Ok(EqualityCertificate::Distinct {
                    witness: "phi",
                    lhs,
                    rhs,
                });
            }
        }

        Ok(EqualityCertificate::Unknown {
            window: self.window,
        })
    }

    /// Semidecides whether `x` is zero mod `R`.
    pub fn is_zero(&self, x: &BiLaurent) -> Result<EqualityCertificate, Error> {
        self.are_equal(x, &BiLaurent::zero())
    }
}

/// Solves `diff = sum of multiples of the expansions` over `Z` by lattice
/// reduction, returning the multipliers attached to their relators.
fn span_combination(
    instances: &[Relator],
    expansions: &[BiLaurent],
    diff: &BiLaurent,
) -> Option<Vec<(Relator, BigInt)>> {
    let mut support = std::collections::BTreeSet::new();
    for expansion in expansions {
        support.extend(expansion.terms().map(|(key, _)| key));
    }
    support.extend(diff.terms().map(|(key, _)| key));
    let columns: BTreeMap<(i64, i64), usize> = support
        .into_iter()
        .enumerate()
        .map(|(i, key)| (key, i))
        .collect();
    let dim = columns.len();

    let to_vector = |value: &BiLaurent| {
        let mut v = vec![BigInt::from(0); dim];
        for (key, coeff) in value.terms() {
            v[columns[&key]] = coeff.clone();
        }
        v
    };

    let mut basis = LatticeBasis::new(dim);
    for (index, expansion) in expansions.iter().enumerate() {
        basis.insert(index, to_vector(expansion));
    }
    let combination = basis.express(&to_vector(diff))?;
    Some(
        combination
            .into_iter()
            .map(|(index, mult)| (instances[index].clone(), mult))
            .collect(),
    )
}

// ---- Certificates ----

/// The replayable outcome of an equality query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EqualityCertificate {
    /// `x - y` is the recorded integer combination of relators.
    Equal { combination: Vec<(Relator, BigInt)> },
    /// A separating additive homomorphism maps the inputs differently.
    Distinct {
        witness: &'static str,
        lhs: C2Algebra,
        rhs: C2Algebra,
    },
    /// Neither certified equal within the window nor separated.
    Unknown { window: i64 },
}

impl EqualityCertificate {
    pub fn is_equal(&self) -> bool {
        matches!(self, EqualityCertificate::Equal { .. })
    }

    pub fn is_distinct(&self) -> bool {
        matches!(self, EqualityCertificate::Distinct { .. })
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, EqualityCertificate::Unknown { .. })
    }

    /// Replays the certificate against the inputs it was issued for.
    ///
    /// `Equal` recomputes the combination and compares it with `x - y`;
    /// `Distinct` recomputes both images under the named homomorphism and
    /// checks they differ; `Unknown` claims nothing and always replays.
    pub fn verify(&self, x: &BiLaurent, y: &BiLaurent) -> bool {
        match self {
            EqualityCertificate::Equal { combination } => {
                let mut sum = BiLaurent::zero();
                for (relator, mult) in combination {
                    sum = sum + relator.expand() * BiLaurent::monomial(mult.clone(), 0, 0);
                }
                sum == x - y
            }
            EqualityCertificate::Distinct { witness, lhs, rhs } => {
                *witness == "phi" && phi(x) == *lhs && phi(y) == *rhs && lhs != rhs
            }
            EqualityCertificate::Unknown { .. } => true,
        }
    }
}

impl fmt::Display for EqualityCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EqualityCertificate::Equal { combination } => {
                write!(f, "EQUAL")?;
                for (relator, mult) in combination {
                    write!(f, "\n{mult} {relator}")?;
                }
                Ok(())
            }
            EqualityCertificate::Distinct { witness, lhs, rhs } => {
                write!(f, "DISTINCT via={witness} lhs={lhs} rhs={rhs}")
            }
            EqualityCertificate::Unknown { window } => write!(f, "UNKNOWN window={window}"),
        }
    }
}
