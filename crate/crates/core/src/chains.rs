//! The two building-block MV-chains: the infinite chain `[(0,0),(n,0)]`
//! cut out of Z ⊗→ Z, and the finite Łukasiewicz chain `{0,…,p}`.

use std::fmt;

use serde::Serialize;

use crate::error::{self, AlgebraError, Result};
use crate::lex::LexPair;

/// The pair of indices `(n, p)` selecting one algebra of the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Params {
    n: i64,
    p: i64,
}

impl Params {
    pub fn new(n: i64, p: i64) -> Result<Self> {
        if n < 1 || p < 1 {
            return Err(AlgebraError::InvalidParams { n, p });
        }
        Ok(Params { n, p })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    /// `max{n+1, p}`, the exponent threshold at which non-radical powers vanish.
    pub fn power_threshold(&self) -> i64 {
        (self.n + 1).max(self.p)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, p={})", self.n, self.p)
    }
}

/// An element of the MV-chain `[(0,0),(n,0)]` with strong unit `(n,0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OmegaElem {
    value: LexPair,
    n: i64,
}

impl OmegaElem {
    pub fn new(value: LexPair, n: i64) -> Result<Self> {
        if n < 1 {
            return Err(AlgebraError::InvalidParams { n, p: 1 });
        }
        if value < LexPair::ZERO || value > LexPair::standard(n) {
            return Err(AlgebraError::Universe {
                literal: value.to_string(),
                params: Params { n, p: 1 },
                reason: "first component outside [(0,0),(n,0)]",
            });
        }
        Ok(OmegaElem { value, n })
    }

    pub fn value(&self) -> LexPair {
        self.value
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn top(n: i64) -> Result<Self> {
        Self::new(LexPair::standard(n), n)
    }

    pub fn bot(n: i64) -> Result<Self> {
        Self::new(LexPair::ZERO, n)
    }

    fn same_n(&self, other: &OmegaElem) -> Result<()> {
        if self.n != other.n {
            return Err(AlgebraError::ParamMismatch { left: Params { n: self.n, p: 1 }, right: Params { n: other.n, p: 1 } });
        }
        Ok(())
    }

    /// Truncated addition: `max{(0,0), x + y − (n,0)}`.
    pub fn star(&self, other: &OmegaElem) -> Result<OmegaElem> {
        self.same_n(other)?;
        let sum = self.value.checked_add(other.value)?.checked_sub(LexPair::standard(self.n))?;
        OmegaElem::new(sum.max(LexPair::ZERO), self.n)
    }

    /// Truncated difference: `min{(n,0), (n,0) − x + y}`.
    pub fn arrow(&self, other: &OmegaElem) -> Result<OmegaElem> {
        self.same_n(other)?;
        let diff = LexPair::standard(self.n).checked_sub(self.value)?.checked_add(other.value)?;
        OmegaElem::new(diff.min(LexPair::standard(self.n)), self.n)
    }

    /// `(n − m, −r)`.
    pub fn neg(&self) -> Result<OmegaElem> {
        OmegaElem::new(LexPair::standard(self.n).checked_sub(self.value)?, self.n)
    }
}

impl fmt::Display for OmegaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

/// An element of the finite Łukasiewicz chain `{0,…,p}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FinElem {
    a: i64,
    p: i64,
}

impl FinElem {
    pub fn new(a: i64, p: i64) -> Result<Self> {
        if p < 1 {
            return Err(AlgebraError::InvalidParams { n: 1, p });
        }
        if !(0..=p).contains(&a) {
            return Err(AlgebraError::Universe {
                literal: a.to_string(),
                params: Params { n: 1, p },
                reason: "second component outside [0,p]",
            });
        }
        Ok(FinElem { a, p })
    }

    pub fn value(&self) -> i64 {
        self.a
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    /// True for the two endpoints `0` and `p`.
    pub fn is_endpoint(&self) -> bool {
        self.a == 0 || self.a == self.p
    }

    fn same_p(&self, other: &FinElem) -> Result<()> {
        if self.p != other.p {
            return Err(AlgebraError::ParamMismatch { left: Params { n: 1, p: self.p }, right: Params { n: 1, p: other.p } });
        }
        Ok(())
    }

    pub fn star(&self, other: &FinElem) -> Result<FinElem> {
        self.same_p(other)?;
        FinElem::new(error::sub(error::add(self.a, other.a)?, self.p)?.max(0), self.p)
    }

    pub fn arrow(&self, other: &FinElem) -> Result<FinElem> {
        self.same_p(other)?;
        FinElem::new(error::add(error::sub(self.p, self.a)?, other.a)?.min(self.p), self.p)
    }

    pub fn neg(&self) -> FinElem {
        FinElem { a: self.p - self.a, p: self.p }
    }
}

impl fmt::Display for FinElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.a.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn om(m: i64, r: i64, n: i64) -> OmegaElem {
        OmegaElem::new(LexPair::new(m, r), n).unwrap()
    }

    #[test]
    fn omega_star_examples() {
        assert_eq!(om(1, 3, 2).star(&om(2, -1, 2)).unwrap(), om(1, 2, 2));
        assert_eq!(om(2, 0, 2).star(&om(1, -4, 2)).unwrap(), om(1, -4, 2));
        assert_eq!(om(0, 5, 2).star(&om(0, 5, 2)).unwrap(), om(0, 0, 2));
    }

    #[test]
    fn omega_arrow_examples() {
        assert_eq!(om(2, 0, 2).arrow(&om(0, 7, 2)).unwrap(), om(0, 7, 2));
        assert_eq!(om(1, 0, 2).arrow(&om(1, 0, 2)).unwrap(), om(2, 0, 2));
        assert_eq!(om(1, 2, 2).arrow(&om(0, 0, 2)).unwrap(), om(1, -2, 2));
        assert_eq!(om(1, 2, 2).neg().unwrap(), om(1, -2, 2));
    }

    #[test]
    fn omega_neg_examples() {
        assert_eq!(om(2, 0, 2).neg().unwrap(), om(0, 0, 2));
        assert_eq!(om(1, 5, 2).neg().unwrap(), om(1, -5, 2));
        assert_eq!(om(0, 4, 3).neg().unwrap(), om(3, -4, 3));
    }

    #[test]
    fn omega_rejects_out_of_range_and_mismatch() {
        assert!(OmegaElem::new(LexPair::new(0, -1), 2).is_err());
        assert!(OmegaElem::new(LexPair::new(2, 1), 2).is_err());
        assert!(matches!(om(1, 0, 2).star(&om(1, 0, 3)), Err(AlgebraError::ParamMismatch { .. })));
    }

    #[test]
    fn fin_examples() {
        let f = |a| FinElem::new(a, 3).unwrap();
        assert_eq!(f(2).star(&f(2)).unwrap(), f(1));
        for a in 0..=3 {
            assert_eq!(f(3).arrow(&f(a)).unwrap(), f(a));
        }
        assert_eq!(f(1).neg(), f(2));
        assert!(FinElem::new(4, 3).is_err());
        assert!(f(1).star(&FinElem::new(1, 2).unwrap()).is_err());
    }

    fn omega(n: i64) -> impl Strategy<Value = OmegaElem> {
        (0..=n).prop_flat_map(move |m| {
            let lo: i64 = if m == 0 { 0 } else { -6 };
            let hi: i64 = if m == n { 0 } else { 6 };
            (lo..=hi).prop_map(move |r| OmegaElem::new(LexPair::new(m, r), n).unwrap())
        })
    }

    fn omega_triple() -> impl Strategy<Value = (OmegaElem, OmegaElem, OmegaElem)> {
        (1i64..4).prop_flat_map(|n| (omega(n), omega(n), omega(n)))
    }

    proptest! {
        #[test]
        fn omega_chain_is_residuated_and_involutive((a, b, c) in omega_triple()) {
            let lhs = a.star(&b).unwrap().value() <= c.value();
            let rhs = b.value() <= a.arrow(&c).unwrap().value();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(a.neg().unwrap().neg().unwrap(), a);
            prop_assert_eq!(a.arrow(&b).unwrap(), a.star(&b.neg().unwrap()).unwrap().neg().unwrap());
        }

        #[test]
        fn fin_chain_is_residuated(p in 1i64..6, a in 0i64..6, b in 0i64..6, c in 0i64..6) {
            prop_assume!(a <= p && b <= p && c <= p);
            let (a, b, c) = (FinElem::new(a, p).unwrap(), FinElem::new(b, p).unwrap(), FinElem::new(c, p).unwrap());
            prop_assert_eq!(
                a.star(&b).unwrap().value() <= c.value(),
                b.value() <= a.arrow(&c).unwrap().value()
            );
        }
    }
}
