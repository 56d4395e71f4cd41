//! Elements of the universe `A(n,p)` and their literal syntax `((m,r),a)`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::chains::{FinElem, OmegaElem, Params};
use crate::error::{AlgebraError, Result};
use crate::lex::LexPair;

/// An element `⟨(m,r), α⟩` of the universe.
///
/// The only way to obtain one is [`ApElem::new`], which enforces the
/// universe constraint: on the endpoint levels `α ∈ {0, p}` the first
/// component ranges over all of `[(0,0),(n,0)]`, on the middle levels
/// `0 < α < p` it is restricted to `[(0,0),(n−1,0)]`.
///
/// Equality is structural. There is deliberately no [`Ord`] impl, since the
/// lattice order is partial; see [`ApElem::enum_key`] for the canonical
/// enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ApElem {
    first: OmegaElem,
    second: FinElem,
}

impl ApElem {
    pub fn new(first: LexPair, alpha: i64, params: Params) -> Result<Self> {
        let universe_err = |reason| AlgebraError::Universe { literal: format!("({first},{alpha})"), params, reason };
        let second = FinElem::new(alpha, params.p()).map_err(|_| universe_err("second component outside [0,p]"))?;
        let first_elem = OmegaElem::new(first, params.n()).map_err(|_| universe_err("first component outside [(0,0),(n,0)]"))?;
        if !second.is_endpoint() && first > LexPair::standard(params.n() - 1) {
            return Err(universe_err("middle levels require first component in [(0,0),(n-1,0)]"));
        }
        Ok(ApElem { first: first_elem, second })
    }

    pub fn first(&self) -> LexPair {
        self.first.value()
    }

    pub fn first_elem(&self) -> OmegaElem {
        self.first
    }

    pub fn second_elem(&self) -> FinElem {
        self.second
    }

    pub fn m(&self) -> i64 {
        self.first.value().m
    }

    pub fn r(&self) -> i64 {
        self.first.value().r
    }

    pub fn alpha(&self) -> i64 {
        self.second.value()
    }

    pub fn params(&self) -> Params {
        // Both components were validated against the same `Params`.
        Params::new(self.first.n(), self.second.p()).expect("validated parameters")
    }

    /// Sort key for the canonical enumeration order: `α`, then `m`, then `r`.
    pub fn enum_key(&self) -> (i64, i64, i64) {
        (self.alpha(), self.m(), self.r())
    }

    /// Parses `((m,r),a)`, `bot` or `top`. Whitespace is ignored.
    pub fn parse(input: &str, params: Params) -> Result<Self> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        match compact.as_str() {
            "bot" => return ApElem::new(LexPair::standard(params.n()), 0, params),
            "top" => return ApElem::new(LexPair::standard(params.n()), params.p(), params),
            _ => {}
        }
        let bad = |reason: &str| AlgebraError::Literal { input: input.to_string(), reason: reason.to_string() };
        let inner = compact.strip_prefix("((").and_then(|s| s.strip_suffix(')')).ok_or_else(|| bad("expected ((m,r),a)"))?;
        let (pair, alpha) = inner.split_once("),").ok_or_else(|| bad("expected ((m,r),a)"))?;
        let (m, r) = pair.split_once(',').ok_or_else(|| bad("expected a pair (m,r)"))?;
        let int = |s: &str| s.parse::<i64>().map_err(|e| bad(&format!("bad integer {s:?}: {e}")));
        ApElem::new(LexPair::new(int(m)?, int(r)?), int(alpha)?, params)
    }
}

impl fmt::Display for ApElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({},{}),{})", self.m(), self.r(), self.alpha())
    }
}

/// Serialised as its literal, e.g. `"((1,-2),3)"`.
impl Serialize for ApElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
