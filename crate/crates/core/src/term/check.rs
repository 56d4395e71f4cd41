use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{eval_term, parse_equation, Env, Equation, EvalError};
use crate::algebra::Algebra;
use crate::chains::Params;
use crate::element::ApElem;
use crate::structure::Window;

pub const DEFAULT_MAX_VARS: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Every assignment from the domain satisfied the equation.
    Holds { assignments: u64 },
    /// The first failing assignment in enumeration order.
    Counterexample { env: Env, lhs: ApElem, rhs: ApElem },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("equation has {found} variables, the limit is {max}")]
    TooManyVariables { found: usize, max: usize },
    #[error("window radius must be non-negative, got {0}")]
    NegativeRadius(i64),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// Checks `eq` on every assignment drawn from the window of the given radius.
pub fn check_equation(eq: &Equation, alg: &Algebra, radius: i64, max_vars: usize) -> Result<Verdict, CheckError> {
    let window = Window::new(alg.params(), radius).map_err(|e| CheckError::NegativeRadius(e.0))?;
    check_equation_on(eq, alg, &window.enumerate(), max_vars)
}

/// Checks `eq` on every assignment drawn from `domain`. Variables are
/// enumerated in name order with the last one varying fastest.
pub fn check_equation_on(eq: &Equation, alg: &Algebra, domain: &[ApElem], max_vars: usize) -> Result<Verdict, CheckError> {
    let vars: Vec<String> = eq.free_vars().into_iter().collect();
    if vars.len() > max_vars {
        return Err(CheckError::TooManyVariables { found: vars.len(), max: max_vars });
    }
    if domain.is_empty() && !vars.is_empty() {
        return Ok(Verdict::Holds { assignments: 0 });
    }
    let mut idx = vec![0usize; vars.len()];
    let mut assignments = 0u64;
    loop {
        let env: Env = vars.iter().cloned().zip(idx.iter().map(|&i| domain[i])).collect();
        let lhs = eval_term(&eq.lhs, &env, alg)?;
        let rhs = eval_term(&eq.rhs, &env, alg)?;
        assignments += 1;
        if lhs != rhs {
            return Ok(Verdict::Counterexample { env, lhs, rhs });
        }
        // odometer step
        let mut pos = idx.len();
        loop {
            if pos == 0 {
                return Ok(Verdict::Holds { assignments });
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < domain.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Named equations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preset {
    /// `x^(m+1) = x^m`
    E(u32),
    /// `x \/ !(x^m) = top`
    Em(u32),
    /// `m.x \/ m.!x = top`
    Wl(u32),
    /// `t \/ !t = top` with `t = (n+1).x^max(n+1,p)`
    Bterm,
    /// `Wl(n)`, the member of the family the algebra is expected to fail.
    WlWitness,
    /// `(n+1).(x \/ !(x^p))^k = top`
    Rad(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown preset {0:?} (expected E<m>, EM<m>, WL<m>, Rad<k>, Bterm or WLwitness, with m, k >= 1)")]
pub struct UnknownPreset(pub String);

impl Preset {
    pub fn equation(&self, params: Params) -> Equation {
        let (n, p) = (params.n(), params.p());
        let text = match *self {
            Preset::E(m) => format!("x^{} = x^{m}", m + 1),
            Preset::Em(m) => format!("x \\/ !(x^{m}) = top"),
            Preset::Wl(m) => format!("{m}.x \\/ {m}.!x = top"),
            Preset::WlWitness => format!("{n}.x \\/ {n}.!x = top"),
            Preset::Bterm => {
                let t = format!("({}.x^{})", n + 1, params.power_threshold());
                format!("{t} \\/ !{t} = top")
            }
            Preset::Rad(k) => format!("{}.(x \\/ !(x^{p}))^{k} = top", n + 1),
        };
        parse_equation(&text).expect("preset equations are well formed")
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Preset::E(m) => write!(f, "E{m}"),
            Preset::Em(m) => write!(f, "EM{m}"),
            Preset::Wl(m) => write!(f, "WL{m}"),
            Preset::Bterm => f.write_str("Bterm"),
            Preset::WlWitness => f.write_str("WLwitness"),
            Preset::Rad(k) => write!(f, "Rad{k}"),
        }
    }
}

impl FromStr for Preset {
    type Err = UnknownPreset;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || UnknownPreset(s.to_string());
        match s {
            "Bterm" => return Ok(Preset::Bterm),
            "WLwitness" => return Ok(Preset::WlWitness),
            _ => {}
        }
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(unknown)?;
        let (name, digits) = s.split_at(split);
        let m: u32 = digits.parse().map_err(|_| unknown())?;
        if m == 0 {
            return Err(unknown());
        }
        match name {
            "E" => Ok(Preset::E(m)),
            "EM" => Ok(Preset::Em(m)),
            "WL" => Ok(Preset::Wl(m)),
            "Rad" => Ok(Preset::Rad(m)),
            _ => Err(unknown()),
        }
    }
}
