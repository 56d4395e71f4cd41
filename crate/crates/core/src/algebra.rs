//! The operations of `A(n,p)`: lattice order, meet and join, the monoid
//! product `⊙`, the involution `∼`, the residual `÷` and the derived terms.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::chains::Params;
use crate::element::ApElem;
use crate::error::{self, AlgebraError, Result};
use crate::lex::LexPair;

/// Single-constant faults that can be injected into `⊙` or `∼`.
///
/// These exist so the verification suites can demonstrate that they are
/// not vacuous: every mutation must be caught by at least one suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Mutation {
    /// `2n − (m+k+1)` becomes `2n − (m+k)` in the product of two middle
    /// levels whose levels annihilate.
    MulAnnihilatingOffset,
    /// `m+k+1` becomes `m+k` in the product of two level-0 elements.
    MulBottomLevelOffset,
    /// The cap `(n,0)` becomes `(n−1,0)` in the annihilating-levels case.
    MulAnnihilatingCap,
    /// `n−1−m` becomes `n−m` in the involution of a middle level.
    InvMiddleOffset,
    /// `p − α` becomes `p − α − 1` in the involution of a middle level.
    InvMiddleLevel,
}

impl Mutation {
    pub const ALL: [Mutation; 5] = [
        Mutation::MulAnnihilatingOffset,
        Mutation::MulBottomLevelOffset,
        Mutation::MulAnnihilatingCap,
        Mutation::InvMiddleOffset,
        Mutation::InvMiddleLevel,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Mutation::MulAnnihilatingOffset => "mul-annihilating-offset",
            Mutation::MulBottomLevelOffset => "mul-bottom-level-offset",
            Mutation::MulAnnihilatingCap => "mul-annihilating-cap",
            Mutation::InvMiddleOffset => "inv-middle-offset",
            Mutation::InvMiddleLevel => "inv-middle-level",
        }
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mutation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Mutation::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| format!("unknown mutation {s:?}"))
    }
}

/// One algebra of the family, identified by its parameters.
///
/// All operations take validated elements and check that they were built
/// for the same `(n, p)`; results are rebuilt through [`ApElem::new`], so an
/// operation can never silently leave the universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Algebra {
    params: Params,
    mutation: Option<Mutation>,
}

impl Algebra {
    pub fn new(params: Params) -> Self {
        Algebra { params, mutation: None }
    }

    pub fn from_indices(n: i64, p: i64) -> Result<Self> {
        Ok(Algebra::new(Params::new(n, p)?))
    }

    /// A deliberately broken copy of the algebra; see [`Mutation`].
    pub fn with_mutation(params: Params, mutation: Mutation) -> Self {
        Algebra { params, mutation: Some(mutation) }
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn mutation(&self) -> Option<Mutation> {
        self.mutation
    }

    fn n(&self) -> i64 {
        self.params.n()
    }

    fn p(&self) -> i64 {
        self.params.p()
    }

    fn mutated(&self, m: Mutation) -> bool {
        self.mutation == Some(m)
    }

    pub fn element(&self, m: i64, r: i64, alpha: i64) -> Result<ApElem> {
        ApElem::new(LexPair::new(m, r), alpha, self.params)
    }

    fn build(&self, first: LexPair, alpha: i64) -> Result<ApElem> {
        ApElem::new(first, alpha, self.params)
    }

    pub fn parse_element(&self, literal: &str) -> Result<ApElem> {
        ApElem::parse(literal, self.params)
    }

    /// `⊤ = ⟨(n,0),p⟩`.
    pub fn top(&self) -> ApElem {
        self.build(LexPair::standard(self.n()), self.p()).expect("top is in the universe")
    }

    /// `⊥ = ⟨(n,0),0⟩`.
    pub fn bot(&self) -> ApElem {
        self.build(LexPair::standard(self.n()), 0).expect("bottom is in the universe")
    }

    /// `⟨(0,0),p⟩`, the generator of the radical.
    pub fn radical_generator(&self) -> ApElem {
        self.build(LexPair::ZERO, self.p()).expect("in the universe")
    }

    /// `⟨(n−1,0),p−1⟩`. For `p ≥ 2` or `n = 1` this is the largest element
    /// outside the radical; for `p = 1` that role falls to `⟨(0,0),0⟩`
    /// because level 0 is ordered backwards.
    pub fn coradical_max(&self) -> ApElem {
        self.build(LexPair::standard(self.n() - 1), self.p() - 1).expect("in the universe")
    }

    /// Fails with a parameter mismatch unless `a` belongs to this algebra.
    pub fn check_element(&self, a: &ApElem) -> Result<()> {
        if a.params() != self.params {
            return Err(AlgebraError::ParamMismatch { left: self.params, right: a.params() });
        }
        Ok(())
    }

    fn check2(&self, a: &ApElem, b: &ApElem) -> Result<()> {
        self.check_element(a)?;
        self.check_element(b)
    }

    /// `(n−1,0) − x`, the reflection used whenever level 0 meets another level.
    fn reflect(&self, x: LexPair) -> Result<LexPair> {
        LexPair::standard(self.n() - 1).checked_sub(x)
    }

    /// The lattice order.
    ///
    /// On nonzero levels the order is the product order; level 0 carries the
    /// reversed chain (its bottom is `⟨(n,0),0⟩`); a level-0 element lies
    /// below `⟨(k,s),β⟩` with `β ≠ 0` exactly when `(n−1,0) ≼ (m+k, r+s)`.
    pub fn leq(&self, a: &ApElem, b: &ApElem) -> Result<bool> {
        self.check2(a, b)?;
        let (x, alpha) = (a.first(), a.alpha());
        let (y, beta) = (b.first(), b.alpha());
        Ok(if alpha != 0 {
            alpha <= beta && x <= y
        } else if beta == 0 {
            y <= x
        } else {
            LexPair::standard(self.n() - 1) <= x.checked_add(y)?
        })
    }

    pub fn lt(&self, a: &ApElem, b: &ApElem) -> Result<bool> {
        Ok(a != b && self.leq(a, b)?)
    }

    pub fn join(&self, a: &ApElem, b: &ApElem) -> Result<ApElem> {
        self.check2(a, b)?;
        let (x, alpha) = (a.first(), a.alpha());
        let (y, beta) = (b.first(), b.alpha());
        match (alpha == 0, beta == 0) {
            (false, false) => self.build(x.max(y), alpha.max(beta)),
            (true, true) => self.build(x.min(y), 0),
            // When y ≽ (n−1,0) the reflection is ≼ (0,0) and the join is `a`.
            (false, true) => self.build(x.max(self.reflect(y)?), alpha),
            (true, false) => self.build(y.max(self.reflect(x)?), beta),
        }
    }

    pub fn meet(&self, a: &ApElem, b: &ApElem) -> Result<ApElem> {
        self.check2(a, b)?;
        let (x, alpha) = (a.first(), a.alpha());
        let (y, beta) = (b.first(), b.alpha());
        match (alpha == 0, beta == 0) {
            (false, false) => self.build(x.min(y), alpha.min(beta)),
            (true, true) => self.build(x.max(y), 0),
            (false, true) => self.build(y.max(self.reflect(x)?), 0),
            (true, false) => self.build(x.max(self.reflect(y)?), 0),
        }
    }

    /// The monoid product `⊙`.
    pub fn mul(&self, a: &ApElem, b: &ApElem) -> Result<ApElem> {
        self.check2(a, b)?;
        let n = self.n();
        let (x, alpha) = (a.first(), a.alpha());
        let (y, beta) = (b.first(), b.alpha());
        match (alpha == 0, beta == 0) {
            (false, false) => {
                let level = a.second_elem().star(&b.second_elem())?;
                if level.value() != 0 {
                    let first = a.first_elem().star(&b.first_elem())?;
                    return self.build(first.value(), level.value());
                }
                // 2n − (m+k+1), −(r+s)
                let offset = if self.mutated(Mutation::MulAnnihilatingOffset) { 0 } else { 1 };
                let m = error::sub(error::mul2(n)?, error::add(error::add(x.m, y.m)?, offset)?)?;
                let r = error::neg(error::add(x.r, y.r)?)?;
                let cap = if self.mutated(Mutation::MulAnnihilatingCap) { n - 1 } else { n };
                self.build(LexPair::standard(cap).min(LexPair::new(m, r)), 0)
            }
            (false, true) => self.build(a.first_elem().arrow(&b.first_elem())?.value(), 0),
            (true, false) => self.build(b.first_elem().arrow(&a.first_elem())?.value(), 0),
            (true, true) => {
                let offset = if self.mutated(Mutation::MulBottomLevelOffset) { 0 } else { 1 };
                let m = error::add(error::add(x.m, y.m)?, offset)?;
                let r = error::add(x.r, y.r)?;
                self.build(LexPair::standard(n).min(LexPair::new(m, r)), 0)
            }
        }
    }

    /// The involution `∼`.
    pub fn inv(&self, a: &ApElem) -> Result<ApElem> {
        self.check_element(a)?;
        let (x, alpha) = (a.first(), a.alpha());
        if a.second_elem().is_endpoint() {
            return self.build(x, self.p() - alpha);
        }
        let shift = if self.mutated(Mutation::InvMiddleOffset) { 0 } else { 1 };
        let level_shift = if self.mutated(Mutation::InvMiddleLevel) { 1 } else { 0 };
        let first = LexPair::standard(error::sub(self.n(), shift)?).checked_sub(x)?;
        self.build(first, self.p() - alpha - level_shift)
    }

    /// The residual `a ÷ b = ∼(a ⊙ ∼b)`.
    pub fn div(&self, a: &ApElem, b: &ApElem) -> Result<ApElem> {
        let nb = self.inv(b)?;
        self.inv(&self.mul(a, &nb)?)
    }

    /// `¬a = a ÷ ⊥`.
    pub fn neg(&self, a: &ApElem) -> Result<ApElem> {
        self.div(a, &self.bot())
    }

    /// `a ⊕ b = ∼(∼a ⊙ ∼b)`.
    pub fn oplus(&self, a: &ApElem, b: &ApElem) -> Result<ApElem> {
        let product = self.mul(&self.inv(a)?, &self.inv(b)?)?;
        self.inv(&product)
    }

    /// `a⁰ = ⊤`, `aᵏ⁺¹ = a ⊙ aᵏ`.
    pub fn pow(&self, a: &ApElem, k: u64) -> Result<ApElem> {
        self.check_element(a)?;
        let mut acc = self.top();
        for _ in 0..k {
            acc = self.mul(a, &acc)?;
        }
        Ok(acc)
    }

    /// `0.a = ⊥`, `(k+1).a = a ⊕ k.a`.
    pub fn mult(&self, k: u64, a: &ApElem) -> Result<ApElem> {
        self.check_element(a)?;
        let mut acc = self.bot();
        for _ in 0..k {
            acc = self.oplus(a, &acc)?;
        }
        Ok(acc)
    }

    /// `t(a) = (n+1).a^max{n+1,p}`, which takes only the values ⊥ and ⊤.
    pub fn boolean_term(&self, a: &ApElem) -> Result<ApElem> {
        let power = self.pow(a, self.params.power_threshold() as u64)?;
        self.mult(self.n() as u64 + 1, &power)
    }
}
