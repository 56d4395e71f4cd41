//! Terms over `⟨∗, →, ∧, ∨, ⊥, ⊤⟩` plus the derived operators, their
//! concrete syntax and their evaluation in an algebra.
//!
//! Concrete syntax, loosest to tightest binding:
//!
//! ```text
//! equation := term ("≈" | "=") term
//! term     := join ("->" term)?              right associative
//! join     := meet ("\/" meet)*
//! meet     := mul ("/\" mul)*
//! mul      := unary (("*" | "+") unary)*     "+" is ⊕
//! unary    := "~" unary | "!" unary | INT "." unary | postfix
//! postfix  := atom ("^" INT)*
//! atom     := "bot" | "top" | IDENT | "(" term ")"
//! ```
//!
//! `~` is the involution and `!x` is `x -> bot`; the two coincide on every
//! algebra of the family but are kept apart syntactically.

mod check;
mod parser;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::algebra::Algebra;
use crate::element::ApElem;
use crate::error::AlgebraError;

pub use check::{check_equation, check_equation_on, CheckError, Preset, UnknownPreset, Verdict, DEFAULT_MAX_VARS};
pub use parser::{parse_equation, parse_term, ParseError};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Bot,
    Top,
    Star(Box<Term>, Box<Term>),
    Arrow(Box<Term>, Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    /// `x → ⊥`
    Neg(Box<Term>),
    Oplus(Box<Term>, Box<Term>),
    /// The involution `∼`.
    Inv(Box<Term>),
    Pow(Box<Term>, u32),
    Mult(u32, Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn star(self, rhs: Term) -> Term {
        Term::Star(Box::new(self), Box::new(rhs))
    }

    pub fn arrow(self, rhs: Term) -> Term {
        Term::Arrow(Box::new(self), Box::new(rhs))
    }

    pub fn meet(self, rhs: Term) -> Term {
        Term::Meet(Box::new(self), Box::new(rhs))
    }

    pub fn join(self, rhs: Term) -> Term {
        Term::Join(Box::new(self), Box::new(rhs))
    }

    pub fn oplus(self, rhs: Term) -> Term {
        Term::Oplus(Box::new(self), Box::new(rhs))
    }

    // Named after `Algebra::neg`; this is `¬`, not arithmetic negation.
    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Term {
        Term::Neg(Box::new(self))
    }

    pub fn inv(self) -> Term {
        Term::Inv(Box::new(self))
    }

    pub fn pow(self, k: u32) -> Term {
        Term::Pow(Box::new(self), k)
    }

    pub fn mult(self, k: u32) -> Term {
        Term::Mult(k, Box::new(self))
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Bot | Term::Top => {}
            Term::Star(l, r) | Term::Arrow(l, r) | Term::Meet(l, r) | Term::Join(l, r) | Term::Oplus(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
            Term::Neg(t) | Term::Inv(t) | Term::Pow(t, _) | Term::Mult(_, t) => t.collect_vars(out),
        }
    }

    /// Binding strength used by the renderer; larger binds tighter.
    fn precedence(&self) -> u8 {
        match self {
            Term::Arrow(..) => 1,
            Term::Join(..) => 2,
            Term::Meet(..) => 3,
            Term::Star(..) | Term::Oplus(..) => 4,
            Term::Neg(_) | Term::Inv(_) | Term::Mult(..) => 5,
            Term::Pow(..) => 6,
            Term::Var(_) | Term::Bot | Term::Top => 7,
        }
    }
}

struct Prec<'a>(&'a Term, u8);

impl fmt::Display for Prec<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.precedence() < self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Bot => f.write_str("bot"),
            Term::Top => f.write_str("top"),
            Term::Arrow(l, r) => write!(f, "{} -> {}", Prec(l, 2), Prec(r, 1)),
            Term::Join(l, r) => write!(f, "{} \\/ {}", Prec(l, 2), Prec(r, 3)),
            Term::Meet(l, r) => write!(f, "{} /\\ {}", Prec(l, 3), Prec(r, 4)),
            Term::Star(l, r) => write!(f, "{} * {}", Prec(l, 4), Prec(r, 5)),
            Term::Oplus(l, r) => write!(f, "{} + {}", Prec(l, 4), Prec(r, 5)),
            Term::Neg(t) => write!(f, "!{}", Prec(t, 5)),
            Term::Inv(t) => write!(f, "~{}", Prec(t, 5)),
            Term::Mult(k, t) => write!(f, "{k}.{}", Prec(t, 5)),
            Term::Pow(t, k) => write!(f, "{}^{k}", Prec(t, 6)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Equation {
    pub lhs: Term,
    pub rhs: Term,
}

impl Equation {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        Equation { lhs, rhs }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut vars = self.lhs.free_vars();
        vars.extend(self.rhs.free_vars());
        vars
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

pub type Env = BTreeMap<String, ApElem>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unbound variable {0}")]
    Unbound(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub fn eval_term(term: &Term, env: &Env, alg: &Algebra) -> Result<ApElem, EvalError> {
    let ev = |t: &Term| eval_term(t, env, alg);
    Ok(match term {
        Term::Var(v) => {
            let a = env.get(v).ok_or_else(|| EvalError::Unbound(v.clone()))?;
            alg.check_element(a)?;
            *a
        }
        Term::Bot => alg.bot(),
        Term::Top => alg.top(),
        Term::Star(l, r) => alg.mul(&ev(l)?, &ev(r)?)?,
        Term::Arrow(l, r) => alg.div(&ev(l)?, &ev(r)?)?,
        Term::Meet(l, r) => alg.meet(&ev(l)?, &ev(r)?)?,
        Term::Join(l, r) => alg.join(&ev(l)?, &ev(r)?)?,
        Term::Oplus(l, r) => alg.oplus(&ev(l)?, &ev(r)?)?,
        Term::Neg(t) => alg.neg(&ev(t)?)?,
        Term::Inv(t) => alg.inv(&ev(t)?)?,
        Term::Pow(t, k) => alg.pow(&ev(t)?, u64::from(*k))?,
        Term::Mult(k, t) => alg.mult(u64::from(*k), &ev(t)?)?,
    })
}
