//! Exact membership in an integer lattice, with combination recovery.
//!
//! Generators are inserted one at a time into a row-echelon basis kept over
//! `Z` (Euclidean column pivoting, all pivots positive).  Each basis row
//! remembers how it combines the original generators, so a successful
//! membership test yields explicit integer multipliers - exactly what an
//! equality certificate needs.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Sparse generator-index-to-multiplier combination.
pub(crate) type Combination = BTreeMap<usize, BigInt>;

struct Row {
    entries: Vec<BigInt>,
    combo: Combination,
}

impl Row {
    fn leading(&self) -> Option<usize> {
        self.entries.iter().position(|e| !e.is_zero())
    }

    fn negate(&mut self) {
        for e in &mut self.entries {
            *e = -std::mem::take(e);
        }
        for c in self.combo.values_mut() {
            *c = -std::mem::take(c);
        }
    }

    /// `self -= q * other`.
    fn sub_scaled(&mut self, q: &BigInt, other: &Row) {
        if q.is_zero() {
            return;
        }
        for (e, o) in self.entries.iter_mut().zip(&other.entries) {
            *e -= q * o;
        }
        for (idx, c) in &other.combo {
            let slot = self.combo.entry(*idx).or_insert_with(BigInt::zero);
            *slot -= q * c;
            if slot.is_zero() {
                self.combo.remove(idx);
            }
        }
    }
}

/// Row-echelon lattice basis over `Z` with per-row provenance.
pub(crate) struct LatticeBasis {
    dim: usize,
    pivots: BTreeMap<usize, Row>,
}

impl LatticeBasis {
    pub(crate) fn new(dim: usize) -> Self {
        Self {
            dim,
            pivots: BTreeMap::new(),
        }
    }

    /// Inserts one generator vector, tagged with its index in the original
    /// generator list.
    pub(crate) fn insert(&mut self, index: usize, entries: Vec<BigInt>) {
        assert_eq!(entries.len(), self.dim, "generator dimension mismatch");
        let mut combo = Combination::new();
        combo.insert(index, BigInt::from(1));
        self.reduce_into_basis(Row { entries, combo });
    }

    fn reduce_into_basis(&mut self, mut row: Row) {
        loop {
            let Some(lead) = row.leading() else {
                // The generator is dependent on rows already present.
                return;
            };
            if row.entries[lead].is_negative() {
                row.negate();
            }
            match self.pivots.get_mut(&lead) {
                None => {
                    self.pivots.insert(lead, row);
                    return;
                }
                Some(pivot) => {
                    let (q, r) = row.entries[lead].div_mod_floor(&pivot.entries[lead]);
                    row.sub_scaled(&q, pivot);
                    debug_assert_eq!(row.entries[lead], r);
                    if !r.is_zero() {
                        // Euclidean step: the smaller remainder becomes the
                        // pivot and the old pivot gets reduced next round.
                        std::mem::swap(pivot, &mut row);
                    }
                }
            }
        }
    }

    /// Expresses `target` as an integer combination of the inserted
    /// generators, or returns `None` when it is not in the lattice.
    pub(crate) fn express(&self, target: &[BigInt]) -> Option<Combination> {
        assert_eq!(target.len(), self.dim, "target dimension mismatch");
        let mut v = target.to_vec();
        let mut combo = Combination::new();
        for col in 0..self.dim {
            if v[col].is_zero() {
                continue;
            }
            let pivot = self.pivots.get(&col)?;
            let (q, r) = v[col].div_rem(&pivot.entries[col]);
            if !r.is_zero() {
                return None;
            }
            for (e, p) in v.iter_mut().zip(&pivot.entries) {
                *e -= &q * p;
            }
            for (idx, c) in &pivot.combo {
                let slot = combo.entry(*idx).or_insert_with(BigInt::zero);
                *slot += &q * c;
                if slot.is_zero() {
                    combo.remove(idx);
                }
            }
        }
        debug_assert!(v.iter().all(|e| e.is_zero()));
        Some(combo)
    }
}
