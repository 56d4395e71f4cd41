//! The lexicographically ordered group Z ⊗→ Z.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{self, Result};

/// An element `(m, r)` of the lexicographic product of Z by Z.
///
/// `m` is the "standard" coordinate and `r` the infinitesimal one. The
/// [`Ord`] impl is exactly [`lex_cmp`], so `min`/`max` on pairs are always
/// taken with respect to the lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LexPair {
    pub m: i64,
    pub r: i64,
}

/// Compares first by `m`, then by `r`.
pub fn lex_cmp(a: &LexPair, b: &LexPair) -> Ordering {
    match a.m.cmp(&b.m) {
        Ordering::Equal => a.r.cmp(&b.r),
        ord => ord,
    }
}

impl Ord for LexPair {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp(self, other)
    }
}

impl PartialOrd for LexPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl LexPair {
    pub const ZERO: LexPair = LexPair { m: 0, r: 0 };

    pub const fn new(m: i64, r: i64) -> Self {
        LexPair { m, r }
    }

    /// The standard element `(m, 0)`.
    pub const fn standard(m: i64) -> Self {
        LexPair { m, r: 0 }
    }

    pub fn checked_add(self, other: LexPair) -> Result<LexPair> {
        Ok(LexPair::new(error::add(self.m, other.m)?, error::add(self.r, other.r)?))
    }

    pub fn checked_sub(self, other: LexPair) -> Result<LexPair> {
        Ok(LexPair::new(error::sub(self.m, other.m)?, error::sub(self.r, other.r)?))
    }

    pub fn checked_neg(self) -> Result<LexPair> {
        Ok(LexPair::new(error::neg(self.m)?, error::neg(self.r)?))
    }
}

impl fmt::Display for LexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.r)
    }
}
