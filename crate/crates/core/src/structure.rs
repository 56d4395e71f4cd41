//! Finite windows of the universe and the structural analysis carried out
//! on them: implicative filters, the congruences they induce, subalgebras
//! and generated subalgebras, complemented elements and power thresholds.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::Algebra;
use crate::chains::Params;
use crate::element::ApElem;
use crate::error::Result;
use crate::lex::LexPair;

/// The elements of the universe whose infinitesimal part satisfies `|r| ≤ radius`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Window {
    params: Params,
    radius: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("window radius must be non-negative, got {0}")]
pub struct NegativeRadius(pub i64);

impl Window {
    pub fn new(params: Params, radius: i64) -> std::result::Result<Self, NegativeRadius> {
        if radius < 0 {
            return Err(NegativeRadius(radius));
        }
        Ok(Window { params, radius })
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    pub fn contains(&self, a: &ApElem) -> bool {
        a.params() == self.params && a.r().abs() <= self.radius
    }

    /// All window elements ordered by `α`, then `m`, then `r`.
    pub fn enumerate(&self) -> Vec<ApElem> {
        let (n, p, radius) = (self.params.n(), self.params.p(), self.radius);
        let mut out = Vec::new();
        for alpha in 0..=p {
            let hi = if alpha == 0 || alpha == p { n } else { n - 1 };
            for m in 0..=hi {
                let r_lo = if m == 0 { 0 } else { -radius };
                let r_hi = if m == hi { 0 } else { radius };
                for r in r_lo..=r_hi {
                    let a = ApElem::new(LexPair::new(m, r), alpha, self.params)
                        .expect("window enumeration stays inside the universe");
                    out.push(a);
                }
            }
        }
        out
    }
}

/// The implicative filters of the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FilterId {
    /// `{⊤}`
    Top,
    /// `{⟨(n,r),p⟩ : r ≤ 0}`
    FOmega,
    /// `↑⟨(0,0),p⟩`, the unique maximal proper filter.
    Radical,
    /// The whole universe.
    Improper,
}

impl FilterId {
    pub const ALL: [FilterId; 4] = [FilterId::Top, FilterId::FOmega, FilterId::Radical, FilterId::Improper];
    pub const PROPER: [FilterId; 3] = [FilterId::Top, FilterId::FOmega, FilterId::Radical];

    pub fn name(&self) -> &'static str {
        match self {
            FilterId::Top => "top",
            FilterId::FOmega => "f_omega",
            FilterId::Radical => "radical",
            FilterId::Improper => "improper",
        }
    }
}

impl fmt::Display for FilterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn filter_member(alg: &Algebra, filter: FilterId, a: &ApElem) -> Result<bool> {
    let n = alg.params().n();
    let p = alg.params().p();
    Ok(match filter {
        FilterId::Top => *a == alg.top(),
        FilterId::FOmega => a.alpha() == p && a.m() == n && a.r() <= 0,
        FilterId::Radical => alg.leq(&alg.radical_generator(), a)?,
        FilterId::Improper => {
            alg.check_element(a)?;
            true
        }
    })
}

/// Radical membership decided through the Boolean term: `t(a) = ⊤`.
pub fn radical_member_via_term(alg: &Algebra, a: &ApElem) -> Result<bool> {
    Ok(alg.boolean_term(a)? == alg.top())
}

/// `(a ÷ b) ⊙ (b ÷ a) ∈ F`.
pub fn congruent(alg: &Algebra, a: &ApElem, b: &ApElem, filter: FilterId) -> Result<bool> {
    let both = alg.mul(&alg.div(a, b)?, &alg.div(b, a)?)?;
    filter_member(alg, filter, &both)
}

/// Partitions the window into classes of the congruence induced by `filter`.
///
/// Classes are listed in order of their canonical representative, which is
/// the first member in enumeration order.
pub fn quotient_classes(alg: &Algebra, window: &Window, filter: FilterId) -> Result<Vec<Vec<ApElem>>> {
    let mut classes: Vec<Vec<ApElem>> = Vec::new();
    'elems: for a in window.enumerate() {
        for class in classes.iter_mut() {
            if congruent(alg, &class[0], &a, filter)? {
                class.push(a);
                continue 'elems;
            }
        }
        classes.push(vec![a]);
    }
    Ok(classes)
}

/// Class count of the radical quotient next to the two candidate chain sizes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadicalQuotientReport {
    pub classes: usize,
    pub matches_p: bool,
    pub matches_p_plus_one: bool,
}

pub fn radical_quotient_report(alg: &Algebra, window: &Window) -> Result<RadicalQuotientReport> {
    let classes = quotient_classes(alg, window, FilterId::Radical)?.len();
    let p = alg.params().p() as usize;
    Ok(RadicalQuotientReport { classes, matches_p: classes == p, matches_p_plus_one: classes == p + 1 })
}

/// The listed subalgebras, each given by a membership predicate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SubalgebraId {
    /// `{⊥, ⊤}`
    L2,
    /// Infinitesimals `⟨(n,r),0⟩` and co-infinitesimals `⟨(n,r),p⟩`, `r ≤ 0`.
    ChangL2w,
    /// Elements with `r = 0`.
    HatLnp,
    /// Elements with `r = 0` on the endpoint levels.
    HatLn2,
    /// The endpoint levels `α ∈ {0, p}`.
    A2,
    /// Levels that are multiples of `p/q`.
    Aq(i64),
    /// Elements with `r = 0` on levels that are multiples of `p/q`.
    HatLq(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubalgebraError {
    #[error("{q} does not divide p={p}")]
    NotADivisor { q: i64, p: i64 },
    #[error("unknown subalgebra {0:?} (expected l2, chang, hatLnp, hatLn2, a2, aq:Q or hatLq:Q)")]
    Unknown(String),
}

impl SubalgebraId {
    /// Every listed subalgebra for the given `p`, one `Aq`/`HatLq` per divisor.
    pub fn all_for(p: i64) -> Vec<SubalgebraId> {
        let mut out =
            vec![SubalgebraId::L2, SubalgebraId::ChangL2w, SubalgebraId::HatLnp, SubalgebraId::HatLn2, SubalgebraId::A2];
        for q in (1..=p).filter(|q| p % q == 0) {
            out.push(SubalgebraId::Aq(q));
            out.push(SubalgebraId::HatLq(q));
        }
        out
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, SubalgebraId::L2 | SubalgebraId::HatLnp | SubalgebraId::HatLn2 | SubalgebraId::HatLq(_))
    }

    pub fn validate(&self, params: Params) -> std::result::Result<(), SubalgebraError> {
        match *self {
            SubalgebraId::Aq(q) | SubalgebraId::HatLq(q) if q < 1 || params.p() % q != 0 => {
                Err(SubalgebraError::NotADivisor { q, p: params.p() })
            }
            _ => Ok(()),
        }
    }

    pub fn contains(&self, alg: &Algebra, a: &ApElem) -> std::result::Result<bool, SubalgebraError> {
        let params = alg.params();
        self.validate(params)?;
        let (n, p) = (params.n(), params.p());
        let endpoint = a.alpha() == 0 || a.alpha() == p;
        let level_multiple = |q: i64| a.alpha() % (p / q) == 0;
        Ok(match *self {
            SubalgebraId::L2 => *a == alg.bot() || *a == alg.top(),
            SubalgebraId::ChangL2w => endpoint && a.m() == n && a.r() <= 0,
            SubalgebraId::HatLnp => a.r() == 0,
            SubalgebraId::HatLn2 => a.r() == 0 && endpoint,
            SubalgebraId::A2 => endpoint,
            SubalgebraId::Aq(q) => level_multiple(q),
            SubalgebraId::HatLq(q) => a.r() == 0 && level_multiple(q),
        })
    }

    /// Members inside `window`, in enumeration order.
    pub fn members_in(&self, alg: &Algebra, window: &Window) -> std::result::Result<Vec<ApElem>, SubalgebraError> {
        let mut out = Vec::new();
        for a in window.enumerate() {
            if self.contains(alg, &a)? {
                out.push(a);
            }
        }
        Ok(out)
    }

    /// All members of a finite subalgebra; `None` for the infinite ones.
    pub fn finite_members(&self, alg: &Algebra) -> std::result::Result<Option<Vec<ApElem>>, SubalgebraError> {
        if !self.is_finite() {
            self.validate(alg.params())?;
            return Ok(None);
        }
        let standard = Window::new(alg.params(), 0).expect("zero radius");
        self.members_in(alg, &standard).map(Some)
    }
}

impl fmt::Display for SubalgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubalgebraId::L2 => f.write_str("l2"),
            SubalgebraId::ChangL2w => f.write_str("chang"),
            SubalgebraId::HatLnp => f.write_str("hatLnp"),
            SubalgebraId::HatLn2 => f.write_str("hatLn2"),
            SubalgebraId::A2 => f.write_str("a2"),
            SubalgebraId::Aq(q) => write!(f, "aq:{q}"),
            SubalgebraId::HatLq(q) => write!(f, "hatLq:{q}"),
        }
    }
}

impl FromStr for SubalgebraId {
    type Err = SubalgebraError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let unknown = || SubalgebraError::Unknown(s.to_string());
        let divisor = |q: &str| q.parse::<i64>().map_err(|_| unknown());
        match s {
            "l2" => Ok(SubalgebraId::L2),
            "chang" => Ok(SubalgebraId::ChangL2w),
            "hatLnp" => Ok(SubalgebraId::HatLnp),
            "hatLn2" => Ok(SubalgebraId::HatLn2),
            "a2" => Ok(SubalgebraId::A2),
            _ => match s.split_once(':') {
                Some(("aq", q)) => Ok(SubalgebraId::Aq(divisor(q)?)),
                Some(("hatLq", q)) => Ok(SubalgebraId::HatLq(divisor(q)?)),
                _ => Err(unknown()),
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClosureStatus {
    Closed { iterations: usize },
    TruncatedBySize,
    TruncatedByIterations,
}

/// Result of a bounded subalgebra generation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    /// Elements found so far, in enumeration order.
    pub elements: Vec<ApElem>,
    pub status: ClosureStatus,
}

impl Closure {
    pub fn is_closed(&self) -> bool {
        matches!(self.status, ClosureStatus::Closed { .. })
    }
}

pub const DEFAULT_CLOSURE_MAX_SIZE: usize = 5000;
pub const DEFAULT_CLOSURE_MAX_ITERS: usize = 50;

/// Closes `generators ∪ {⊥, ⊤}` under `⊙`, `÷`, `∧` and `∨`.
///
/// Stops with a truncated status as soon as the set exceeds `max_size`
/// elements or `max_iters` rounds pass without reaching a fixpoint.
pub fn closure(alg: &Algebra, generators: &[ApElem], max_size: usize, max_iters: usize) -> Result<Closure> {
    let mut seen: HashSet<ApElem> = HashSet::new();
    let mut elems: Vec<ApElem> = Vec::new();
    for g in [alg.bot(), alg.top()].iter().chain(generators) {
        alg.check_element(g)?;
        if seen.insert(*g) {
            elems.push(*g);
        }
    }
    let finish = |mut elems: Vec<ApElem>, status| {
        elems.sort_by_key(ApElem::enum_key);
        Ok(Closure { elements: elems, status })
    };
    // Pairs (i, j) with both indices below `done` were already combined.
    let mut done = 0;
    for iteration in 1..=max_iters {
        let current = elems.len();
        let mut fresh = Vec::new();
        for i in 0..current {
            let start = if i < done { done } else { 0 };
            for j in start..current {
                let (a, b) = (elems[i], elems[j]);
                for c in [alg.mul(&a, &b)?, alg.div(&a, &b)?, alg.div(&b, &a)?, alg.meet(&a, &b)?, alg.join(&a, &b)?] {
                    if seen.insert(c) {
                        fresh.push(c);
                        if seen.len() > max_size {
                            elems.extend(fresh);
                            return finish(elems, ClosureStatus::TruncatedBySize);
                        }
                    }
                }
            }
        }
        done = current;
        if fresh.is_empty() {
            return finish(elems, ClosureStatus::Closed { iterations: iteration });
        }
        elems.extend(fresh);
    }
    finish(elems, ClosureStatus::TruncatedByIterations)
}

/// Window elements with a complement inside the window.
pub fn boolean_elements(alg: &Algebra, window: &Window) -> Result<Vec<ApElem>> {
    let elems = window.enumerate();
    let (bot, top) = (alg.bot(), alg.top());
    let mut out = Vec::new();
    for a in &elems {
        for b in &elems {
            if alg.meet(a, b)? == bot && alg.join(a, b)? == top {
                out.push(*a);
                break;
            }
        }
    }
    Ok(out)
}

/// Powers of `⟨(n−1,0),p−1⟩` and the vanishing-power characterisation of
/// the radical over a window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerReport {
    pub threshold: i64,
    /// `cᵏ` for `k = 1..=threshold`, as element literals.
    pub coradical_powers: Vec<String>,
    /// `cᵏ ≠ ⊥` for every `0 < k < threshold`.
    pub below_threshold_nonzero: bool,
    /// `c^threshold = ⊥`.
    pub vanishes_at_threshold: bool,
    /// `aᵏ = ⊥ ⇔ a ∉ Rad` for every window `a` and `k = threshold`.
    pub characterises_radical: bool,
    /// First window element violating the characterisation.
    pub counterexample: Option<ApElem>,
}

impl PowerReport {
    pub fn holds(&self) -> bool {
        self.below_threshold_nonzero && self.vanishes_at_threshold && self.characterises_radical
    }
}

pub fn power_threshold_check(alg: &Algebra, window: &Window) -> Result<PowerReport> {
    let threshold = alg.params().power_threshold();
    let c = alg.coradical_max();
    let bot = alg.bot();
    let mut powers = Vec::new();
    let mut acc = alg.top();
    for _ in 0..threshold {
        acc = alg.mul(&c, &acc)?;
        powers.push(acc);
    }
    let below_threshold_nonzero = powers[..powers.len() - 1].iter().all(|x| *x != bot);
    let vanishes_at_threshold = powers[powers.len() - 1] == bot;
    let mut counterexample = None;
    for a in window.enumerate() {
        let vanishes = alg.pow(&a, threshold as u64)? == bot;
        if vanishes == filter_member(alg, FilterId::Radical, &a)? {
            counterexample = Some(a);
            break;
        }
    }
    Ok(PowerReport {
        threshold,
        coradical_powers: powers.iter().map(ToString::to_string).collect(),
        below_threshold_nonzero,
        vanishes_at_threshold,
        characterises_radical: counterexample.is_none(),
        counterexample,
    })
}

/// The largest window element outside the radical, found by search.
pub fn largest_non_radical(alg: &Algebra, window: &Window) -> Result<Option<ApElem>> {
    let outside: Vec<ApElem> = window
        .enumerate()
        .into_iter()
        .filter(|a| filter_member(alg, FilterId::Radical, a).map(|r| !r).unwrap_or(false))
        .collect();
    for a in &outside {
        let mut top = true;
        for b in &outside {
            if !alg.leq(b, a)? {
                top = false;
                break;
            }
        }
        if top {
            return Ok(Some(*a));
        }
    }
    Ok(None)
}

/// Which of the four filters the filter generated by `a` matches inside the
/// window, if any.
///
/// The generated filter is `{x : x ≥ aᵏ for some k}`; powers are taken up to
/// `max{n+1,p} + radius + 1`, enough for them to stabilise or to leave
/// the window.
pub fn generated_filter(alg: &Algebra, window: &Window, a: &ApElem) -> Result<Option<FilterId>> {
    let k = alg.params().power_threshold() + window.radius() + 1;
    let floor = alg.pow(a, k as u64)?;
    let elems = window.enumerate();
    'candidates: for f in FilterId::ALL {
        for x in &elems {
            if alg.leq(&floor, x)? != filter_member(alg, f, x)? {
                continue 'candidates;
            }
        }
        return Ok(Some(f));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(n: i64, p: i64) -> Algebra {
        Algebra::from_indices(n, p).unwrap()
    }

    fn el(a: &Algebra, m: i64, r: i64, alpha: i64) -> ApElem {
        a.element(m, r, alpha).unwrap()
    }

    fn window(a: &Algebra, radius: i64) -> Window {
        Window::new(a.params(), radius).unwrap()
    }

    /// Independent count: each level contributes its two end columns with
    /// `radius+1` elements and every interior column with `2·radius+1`.
    fn expected_size(n: i64, p: i64, radius: i64) -> i64 {
        let level = |top: i64| {
            if top == 0 {
                1
            } else {
                2 * (radius + 1) + (top - 1) * (2 * radius + 1)
            }
        };
        2 * level(n) + (p - 1) * level(n - 1)
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(window(&alg(2, 3), 1).enumerate().len(), 22);
        let tiny = window(&alg(1, 1), 0).enumerate();
        let a = alg(1, 1);
        assert_eq!(tiny, vec![el(&a, 0, 0, 0), el(&a, 1, 0, 0), el(&a, 0, 0, 1), el(&a, 1, 0, 1)]);
        for n in 1..=4 {
            for p in 1..=4 {
                for radius in 0..=3 {
                    let a = alg(n, p);
                    let elems = window(&a, radius).enumerate();
                    assert_eq!(elems.len() as i64, expected_size(n, p, radius), "n={n} p={p} R={radius}");
                    let distinct: HashSet<_> = elems.iter().collect();
                    assert_eq!(distinct.len(), elems.len());
                    assert!(elems.windows(2).all(|w| w[0].enum_key() < w[1].enum_key()));
                    for must in [a.bot(), a.top(), a.radical_generator(), a.coradical_max()] {
                        assert!(elems.contains(&must));
                    }
                }
            }
        }
        assert!(Window::new(alg(2, 2).params(), -1).is_err());
    }

    #[test]
    fn filter_examples() {
        let a = alg(2, 3);
        assert!(filter_member(&a, FilterId::FOmega, &el(&a, 2, -3, 3)).unwrap());
        assert!(!filter_member(&a, FilterId::Radical, &el(&a, 1, 0, 2)).unwrap());
        for f in FilterId::ALL {
            assert!(filter_member(&a, f, &a.top()).unwrap());
        }
        assert!(!filter_member(&a, FilterId::Radical, &a.bot()).unwrap());
        assert!(filter_member(&a, FilterId::Improper, &a.bot()).unwrap());
    }

    #[test]
    fn radical_via_term_examples() {
        let a = alg(2, 3);
        assert!(!radical_member_via_term(&a, &el(&a, 1, 0, 2)).unwrap());
        assert!(radical_member_via_term(&a, &el(&a, 0, 5, 3)).unwrap());
        assert!(!radical_member_via_term(&a, &a.bot()).unwrap());
    }

    #[test]
    fn power_threshold_examples() {
        let a = alg(2, 3);
        let c = a.coradical_max();
        assert_eq!(a.pow(&c, 2).unwrap(), el(&a, 0, 0, 1));
        assert_eq!(a.pow(&c, 2).unwrap(), a.inv(&c).unwrap());
        let report = power_threshold_check(&a, &window(&a, 2)).unwrap();
        assert!(report.holds(), "{report:?}");
        assert_eq!(report.coradical_powers, ["((1,0),2)", "((0,0),1)", "((2,0),0)"]);

        let b = alg(3, 2);
        let c = b.coradical_max();
        assert_eq!(c, el(&b, 2, 0, 1));
        assert_eq!(b.pow(&c, 4).unwrap(), b.bot());
        assert_eq!(b.pow(&c, 3).unwrap(), el(&b, 2, 0, 0));
        assert!(power_threshold_check(&b, &window(&b, 2)).unwrap().holds());
    }

    #[test]
    fn congruence_examples() {
        let a = alg(2, 3);
        let x = el(&a, 1, -1, 2);
        assert!(congruent(&a, &x, &x, FilterId::Top).unwrap());
        assert!(congruent(&a, &el(&a, 0, 0, 1), &el(&a, 1, 0, 1), FilterId::Radical).unwrap());
        assert!(!congruent(&a, &el(&a, 0, 0, 0), &el(&a, 0, 0, 1), FilterId::Radical).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let a = alg(2, 3);
        for radius in 1..=2 {
            let w = window(&a, radius);
            assert_eq!(quotient_classes(&a, &w, FilterId::FOmega).unwrap().len(), 10);
        }
        let w = window(&a, 1);
        let top_classes = quotient_classes(&a, &w, FilterId::Top).unwrap();
        assert_eq!(top_classes.len(), w.enumerate().len());
        assert!(top_classes.iter().all(|c| c.len() == 1));
        assert_eq!(quotient_classes(&a, &w, FilterId::Improper).unwrap().len(), 1);
    }

    #[test]
    fn quotient_classes_form_a_partition_of_an_equivalence() {
        let a = alg(2, 2);
        let w = window(&a, 1);
        let elems = w.enumerate();
        for f in FilterId::ALL {
            let classes = quotient_classes(&a, &w, f).unwrap();
            assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), elems.len());
            let class_of = |x: &ApElem| classes.iter().position(|c| c.contains(x)).unwrap();
            for x in &elems {
                for y in &elems {
                    assert_eq!(congruent(&a, x, y, f).unwrap(), class_of(x) == class_of(y), "{f} {x} {y}");
                }
            }
        }
    }

    #[test]
    fn radical_quotient_reports_both_readings() {
        let a = alg(2, 3);
        let report = radical_quotient_report(&a, &window(&a, 1)).unwrap();
        assert_eq!(report.classes, 4);
        assert!(!report.matches_p);
        assert!(report.matches_p_plus_one);
    }

    #[test]
    fn subalgebra_membership() {
        let a = alg(2, 3);
        assert!(SubalgebraId::HatLnp.contains(&a, &el(&a, 1, 0, 2)).unwrap());
        assert!(!SubalgebraId::HatLnp.contains(&a, &el(&a, 1, 1, 3)).unwrap());
        assert!(SubalgebraId::ChangL2w.contains(&a, &el(&a, 2, -4, 0)).unwrap());
        assert!(!SubalgebraId::ChangL2w.contains(&a, &el(&a, 1, 4, 0)).unwrap());
        assert_eq!(SubalgebraId::Aq(2).contains(&a, &a.top()), Err(SubalgebraError::NotADivisor { q: 2, p: 3 }));
        let b = alg(2, 4);
        assert!(SubalgebraId::Aq(2).contains(&b, &el(&b, 0, 5, 2)).unwrap());
        assert!(!SubalgebraId::Aq(2).contains(&b, &el(&b, 0, 5, 1)).unwrap());
        assert!(SubalgebraId::HatLq(4).contains(&b, &el(&b, 1, 0, 1)).unwrap());
        assert_eq!(SubalgebraId::HatLnp.finite_members(&a).unwrap().unwrap().len(), 10);
        assert!(SubalgebraId::A2.finite_members(&a).unwrap().is_none());
    }

    #[test]
    fn subalgebra_names_round_trip() {
        for s in SubalgebraId::all_for(6) {
            assert_eq!(s.to_string().parse::<SubalgebraId>().unwrap(), s);
        }
        assert!("hatL".parse::<SubalgebraId>().is_err());
        assert!("aq:x".parse::<SubalgebraId>().is_err());
    }

    #[test]
    fn closure_examples() {
        let a = alg(2, 3);
        let trivial = closure(&a, &[a.bot(), a.top()], 100, 10).unwrap();
        assert!(trivial.is_closed());
        assert_eq!(trivial.elements, vec![a.bot(), a.top()]);

        let chang = closure(&a, &[el(&a, 2, -1, 3)], 200, 50).unwrap();
        assert_eq!(chang.status, ClosureStatus::TruncatedBySize);
        for x in &chang.elements {
            assert!(SubalgebraId::ChangL2w.contains(&a, x).unwrap(), "{x}");
        }

        let standard = closure(&a, &[el(&a, 1, 0, 1)], 1000, 50).unwrap();
        assert!(standard.is_closed());
        for x in &standard.elements {
            assert!(SubalgebraId::HatLnp.contains(&a, x).unwrap(), "{x}");
        }

        let capped = closure(&a, &[el(&a, 2, -1, 3)], 10_000, 2).unwrap();
        assert_eq!(capped.status, ClosureStatus::TruncatedByIterations);
    }

    #[test]
    fn only_bounds_are_complemented() {
        for n in 1..=3 {
            for p in 1..=3 {
                let a = alg(n, p);
                let found = boolean_elements(&a, &window(&a, 1)).unwrap();
                assert_eq!(found, vec![a.bot(), a.top()]);
            }
        }
    }

    #[test]
    fn generated_filters_are_the_four_candidates() {
        let a = alg(2, 3);
        let w = window(&a, 2);
        assert_eq!(generated_filter(&a, &w, &a.top()).unwrap(), Some(FilterId::Top));
        assert_eq!(generated_filter(&a, &w, &el(&a, 2, -1, 3)).unwrap(), Some(FilterId::FOmega));
        assert_eq!(generated_filter(&a, &w, &el(&a, 0, 1, 3)).unwrap(), Some(FilterId::Radical));
        assert_eq!(generated_filter(&a, &w, &el(&a, 1, 0, 2)).unwrap(), Some(FilterId::Improper));
    }

    #[test]
    fn largest_non_radical_by_search() {
        let cases = [((1, 1), (0, 0, 0)), ((2, 1), (0, 0, 0)), ((3, 1), (0, 0, 0)), ((2, 3), (1, 0, 2)), ((3, 2), (2, 0, 1))];
        for ((n, p), (m, r, alpha)) in cases {
            let a = alg(n, p);
            let found = largest_non_radical(&a, &window(&a, 2)).unwrap();
            assert_eq!(found, Some(el(&a, m, r, alpha)), "({n},{p})");
        }
        // the formula ⟨(n−1,0),p−1⟩ misses it only when p = 1 < n
        let a = alg(2, 1);
        assert_ne!(Some(a.coradical_max()), largest_non_radical(&a, &window(&a, 2)).unwrap());
    }
}
