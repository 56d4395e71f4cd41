//! Named property suites run exhaustively (or by seeded sampling) over
//! enumeration windows.
//!
//! Every suite reports how many individual checks it performed and, on
//! failure, the first failing tuple in enumeration order as element
//! literals. Algebra errors raised while checking (overflow, universe
//! violations) count as failures.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::algebra::{Algebra, Mutation};
use crate::chains::Params;
use crate::element::ApElem;
use crate::error::{AlgebraError, Result};
use crate::lex::LexPair;
use crate::structure::{
    boolean_elements, closure, filter_member, generated_filter, largest_non_radical, power_threshold_check, quotient_classes,
    radical_member_via_term, radical_quotient_report, FilterId, SubalgebraId, Window, DEFAULT_CLOSURE_MAX_ITERS,
    DEFAULT_CLOSURE_MAX_SIZE,
};
use crate::term::{check_equation, check_equation_on, Preset, Verdict};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// The default `(n, p)` grid `{1,2,3} × {1,2,3}`.
pub const DEFAULT_GRID: [(i64, i64); 9] = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuiteId {
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
    S7,
    S8,
    S9,
    S10,
    S11,
    S12,
    S13,
    S14,
    S15,
    S16,
}

impl SuiteId {
    pub const ALL: [SuiteId; 16] = [
        SuiteId::S1,
        SuiteId::S2,
        SuiteId::S3,
        SuiteId::S4,
        SuiteId::S5,
        SuiteId::S6,
        SuiteId::S7,
        SuiteId::S8,
        SuiteId::S9,
        SuiteId::S10,
        SuiteId::S11,
        SuiteId::S12,
        SuiteId::S13,
        SuiteId::S14,
        SuiteId::S15,
        SuiteId::S16,
    ];

    pub fn code(&self) -> &'static str {
        match self {
            SuiteId::S1 => "S1",
            SuiteId::S2 => "S2",
            SuiteId::S3 => "S3",
            SuiteId::S4 => "S4",
            SuiteId::S5 => "S5",
            SuiteId::S6 => "S6",
            SuiteId::S7 => "S7",
            SuiteId::S8 => "S8",
            SuiteId::S9 => "S9",
            SuiteId::S10 => "S10",
            SuiteId::S11 => "S11",
            SuiteId::S12 => "S12",
            SuiteId::S13 => "S13",
            SuiteId::S14 => "S14",
            SuiteId::S15 => "S15",
            SuiteId::S16 => "S16",
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SuiteId::S1 => "residuation",
            SuiteId::S2 => "associativity",
            SuiteId::S3 => "monotonicity",
            SuiteId::S4 => "involution",
            SuiteId::S5 => "annihilation",
            SuiteId::S6 => "unit-absorb",
            SuiteId::S7 => "lattice-glb-lub-distributivity",
            SuiteId::S8 => "ap-local",
            SuiteId::S9 => "power-thresholds",
            SuiteId::S10 => "boolean-term",
            SuiteId::S11 => "filters",
            SuiteId::S12 => "boolean-elements",
            SuiteId::S13 => "subalgebra-closure",
            SuiteId::S14 => "residual-closed-form",
            SuiteId::S15 => "generic-monid-invo",
            SuiteId::S16 => "wl-membership",
        }
    }

    /// The statement the suite checks.
    pub fn anchor(&self) -> &'static str {
        match self {
            SuiteId::S1 => "a⊙b ≤ c iff b ≤ a÷c: a bounded integral commutative residuated lattice",
            SuiteId::S2 => "(a⊙b)⊙c = a⊙(b⊙c)",
            SuiteId::S3 => "b ≤ c implies a⊙b ≤ a⊙c; a⊙b = b⊙a",
            SuiteId::S4 => "∼∼a = a, ∼ reverses the order and ∼a = a÷⊥",
            SuiteId::S5 => "a⊙b = ⊥ iff a ≤ ∼b",
            SuiteId::S6 => "a⊙⊥ = ⊥ and a⊙⊤ = a",
            SuiteId::S7 => "∧ and ∨ are glb and lub of a distributive lattice",
            SuiteId::S8 => "a ∨ ∼(aᵖ) is radical; outside the radical powers vanish at n+1 (p ≤ n) or p (n < p)",
            SuiteId::S9 => "aᵏ = ⊥ for k ≥ max{n+1,p} iff a is not radical",
            SuiteId::S10 => "t(x) = (n+1).x^max{n+1,p} is a Boolean and radical term",
            SuiteId::S11 => "{⊤}, f_ω and ↑⟨(0,0),p⟩ are the only proper implicative filters",
            SuiteId::S12 => "only ⊥ and ⊤ are complemented",
            SuiteId::S13 => "the listed subalgebras are closed under all operations",
            SuiteId::S14 => "closed form of ÷ by level cases",
            SuiteId::S15 => "in a commutative integral involutive pomonoid a⊙b ≤ c iff b ≤ ∼(a⊙∼c)",
            SuiteId::S16 => "the algebra satisfies WL_k for k ≥ max{n+1,p} but not WL_n",
        }
    }

    /// Keys of the registry claims this suite covers.
    pub fn claims(&self) -> &'static [&'static str] {
        match self {
            SuiteId::S1 => &["residuated-lattice"],
            SuiteId::S2 => &["associativity"],
            SuiteId::S3 => &["monotonicity", "commutativity"],
            SuiteId::S4 => &["involution", "residual-negation"],
            SuiteId::S5 => &["annihilation"],
            SuiteId::S6 => &["unit-absorb", "bounds"],
            SuiteId::S7 => &["distributive-lattice"],
            SuiteId::S8 => &["local", "cyclic-element"],
            SuiteId::S9 => &["power-threshold"],
            SuiteId::S10 => &["boolean-term", "radical-term"],
            SuiteId::S11 => &["implicative-filters", "radical-maximal", "quotients"],
            SuiteId::S12 => &["indecomposable"],
            SuiteId::S13 => &["subalgebras"],
            SuiteId::S14 => &["residual-closed-form"],
            SuiteId::S15 => &["monid-invo"],
            SuiteId::S16 => &["wl-membership"],
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl Serialize for SuiteId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.code())
    }
}

impl FromStr for SuiteId {
    type Err = HarnessError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.code() == s || id.name() == s)
            .ok_or_else(|| HarnessError::UnknownSuite(s.to_string()))
    }
}

/// A mathematical claim that some suite must exercise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Claim {
    pub key: &'static str,
    pub statement: &'static str,
}

pub const CLAIMS: &[Claim] = &[
    Claim { key: "residuated-lattice", statement: "the algebra is a bounded integral commutative residuated lattice" },
    Claim { key: "associativity", statement: "⊙ is associative" },
    Claim { key: "monotonicity", statement: "⊙ is monotone in each argument" },
    Claim { key: "commutativity", statement: "⊙ is commutative" },
    Claim { key: "involution", statement: "∼ is an order-reversing involution" },
    Claim { key: "residual-negation", statement: "∼a = a÷⊥" },
    Claim { key: "annihilation", statement: "x⊙y = ⊥ iff x ≤ ∼y" },
    Claim { key: "unit-absorb", statement: "⊥ absorbs and ⊤ is neutral for ⊙" },
    Claim { key: "bounds", statement: "⊥ and ⊤ bound the order" },
    Claim { key: "distributive-lattice", statement: "the lattice reduct is distributive" },
    Claim { key: "local", statement: "the algebra is local with radical ↑⟨(0,0),p⟩" },
    Claim { key: "cyclic-element", statement: "for n < p, ⟨(n−1,0),p−1⟩^(p−1) = ∼⟨(n−1,0),p−1⟩" },
    Claim { key: "power-threshold", statement: "aᵏ = ⊥ for k ≥ max{n+1,p} iff a is not radical" },
    Claim { key: "boolean-term", statement: "(n+1).x^max{n+1,p} only takes the values ⊥ and ⊤" },
    Claim { key: "radical-term", statement: "the Boolean term equals ⊤ exactly on the radical" },
    Claim { key: "implicative-filters", statement: "there are exactly three proper implicative filters" },
    Claim { key: "radical-maximal", statement: "⟨(n−1,0),p−1⟩ is the largest non-radical element" },
    Claim { key: "quotients", statement: "the congruences are the ones induced by the filters" },
    Claim { key: "indecomposable", statement: "only ⊥ and ⊤ are complemented" },
    Claim { key: "subalgebras", statement: "the listed subsets are subalgebras" },
    Claim { key: "residual-closed-form", statement: "÷ agrees with its closed form on each level case" },
    Claim { key: "monid-invo", statement: "residuation follows from the involutive pomonoid structure" },
    Claim { key: "wl-membership", statement: "the algebra lies in WL_k minus WL_n" },
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteId,
    pub name: &'static str,
    pub n: i64,
    pub p: i64,
    pub radius: i64,
    pub checks_run: u64,
    pub verdict: Outcome,
    pub first_counterexample: Option<Vec<String>>,
    pub notes: Vec<String>,
    pub elapsed_us: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.verdict == Outcome::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    /// A single line without timing, stable across runs.
    pub fn summary_line(&self) -> String {
        let mut line = format!(
            "{} {} n={} p={} R={} checks={} {}",
            self.suite, self.name, self.n, self.p, self.radius, self.checks_run, self.verdict
        );
        if let Some(cex) = &self.first_counterexample {
            line.push_str(&format!(" counterexample=[{}]", cex.join(", ")));
        }
        line
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    /// Pairs and triples are drawn uniformly with a seeded generator.
    Sampled {
        samples: u64,
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub budget: u64,
    pub force: bool,
    pub mode: Mode,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { budget: DEFAULT_BUDGET, force: false, mode: Mode::Exhaustive }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("{suite} needs about {estimate} checks, over the budget of {budget}; pass --force-budget to run anyway")]
    Budget { suite: SuiteId, estimate: u64, budget: u64 },
    #[error("window radius must be non-negative, got {0}")]
    NegativeRadius(i64),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Rough number of checks a suite performs on a window of `size` elements.
pub fn estimate_checks(suite: SuiteId, size: u64, mode: Mode) -> u64 {
    let tuples = |arity: u32| match mode {
        Mode::Exhaustive => size.saturating_pow(arity),
        Mode::Sampled { samples, .. } => samples.min(size.saturating_pow(arity)),
    };
    match suite {
        SuiteId::S1 | SuiteId::S2 | SuiteId::S3 => tuples(3).saturating_add(tuples(2)),
        SuiteId::S7 => tuples(3).saturating_mul(3).saturating_add(tuples(2)),
        SuiteId::S15 => tuples(3).saturating_add(tuples(2)),
        SuiteId::S4 | SuiteId::S5 | SuiteId::S14 => tuples(2),
        SuiteId::S11 | SuiteId::S12 | SuiteId::S13 => tuples(2).saturating_mul(4),
        SuiteId::S8 | SuiteId::S9 | SuiteId::S10 | SuiteId::S6 | SuiteId::S16 => size.saturating_mul(8),
    }
}

/// Accumulates checks and keeps the first failure.
struct Run<'a> {
    alg: &'a Algebra,
    elems: Vec<ApElem>,
    rng: Option<(u64, ChaCha8Rng)>,
    checks: u64,
    cex: Option<Vec<String>>,
    notes: Vec<String>,
}

impl<'a> Run<'a> {
    fn new(alg: &'a Algebra, elems: Vec<ApElem>, mode: Mode) -> Self {
        let rng = match mode {
            Mode::Exhaustive => None,
            Mode::Sampled { samples, seed } => Some((samples, ChaCha8Rng::seed_from_u64(seed))),
        };
        Run { alg, elems, rng, checks: 0, cex: None, notes: Vec::new() }
    }

    fn failed(&self) -> bool {
        self.cex.is_some()
    }

    fn record(&mut self, outcome: Result<bool>, witness: &[ApElem], what: &str) {
        self.checks += 1;
        let reason = match outcome {
            Ok(true) => return,
            Ok(false) => format!("violated: {what}"),
            Err(e) => format!("error during {what}: {e}"),
        };
        if self.cex.is_none() {
            self.cex = Some(witness.iter().map(ToString::to_string).collect());
            self.notes.push(reason);
        }
    }

    /// A check without element witnesses; failures record an empty tuple.
    fn fact(&mut self, outcome: Result<bool>, what: &str) {
        self.record(outcome, &[], what);
    }

    fn singles(&mut self, what: &str, mut f: impl FnMut(&Algebra, ApElem) -> Result<bool>) {
        for i in 0..self.elems.len() {
            if self.failed() {
                return;
            }
            let a = self.elems[i];
            let outcome = f(self.alg, a);
            self.record(outcome, &[a], what);
        }
    }

    fn tuples<const K: usize>(&mut self, what: &str, mut f: impl FnMut(&Algebra, [ApElem; K]) -> Result<bool>) {
        let len = self.elems.len();
        if len == 0 {
            return;
        }
        if let Some((samples, rng)) = self.rng.as_mut() {
            let draws: Vec<[usize; K]> = (0..*samples).map(|_| std::array::from_fn(|_| rng.gen_range(0..len))).collect();
            for idx in draws {
                if self.failed() {
                    return;
                }
                let t = idx.map(|i| self.elems[i]);
                let outcome = f(self.alg, t);
                self.record(outcome, &t, what);
            }
            return;
        }
        let mut idx = [0usize; K];
        loop {
            if self.failed() {
                return;
            }
            let t = idx.map(|i| self.elems[i]);
            let outcome = f(self.alg, t);
            self.record(outcome, &t, what);
            let mut pos = K;
            loop {
                if pos == 0 {
                    return;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < len {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    fn pairs(&mut self, what: &str, mut f: impl FnMut(&Algebra, ApElem, ApElem) -> Result<bool>) {
        self.tuples::<2>(what, |alg, [a, b]| f(alg, a, b));
    }

    fn triples(&mut self, what: &str, mut f: impl FnMut(&Algebra, ApElem, ApElem, ApElem) -> Result<bool>) {
        self.tuples::<3>(what, |alg, [a, b, c]| f(alg, a, b, c));
    }
}

/// Runs one suite on the window of the given radius.
pub fn run_suite(alg: &Algebra, suite: SuiteId, radius: i64, cfg: &RunConfig) -> std::result::Result<SuiteReport, HarnessError> {
    let window = Window::new(alg.params(), radius).map_err(|e| HarnessError::NegativeRadius(e.0))?;
    let elems = window.enumerate();
    let estimate = estimate_checks(suite, elems.len() as u64, cfg.mode);
    if estimate > cfg.budget && !cfg.force {
        return Err(HarnessError::Budget { suite, estimate, budget: cfg.budget });
    }
    let start = Instant::now();
    let mut run = Run::new(alg, elems, cfg.mode);
    match suite {
        SuiteId::S1 => residuation(&mut run),
        SuiteId::S2 => associativity(&mut run),
        SuiteId::S3 => monotonicity(&mut run),
        SuiteId::S4 => involution(&mut run),
        SuiteId::S5 => annihilation(&mut run),
        SuiteId::S6 => unit_absorb(&mut run),
        SuiteId::S7 => lattice(&mut run),
        SuiteId::S8 => ap_local(&mut run),
        SuiteId::S9 => power_thresholds(&mut run, &window),
        SuiteId::S10 => boolean_term(&mut run, radius),
        SuiteId::S11 => filters(&mut run, &window),
        SuiteId::S12 => complemented(&mut run, &window),
        SuiteId::S13 => subalgebras(&mut run, &window),
        SuiteId::S14 => residual_closed_form_suite(&mut run),
        SuiteId::S15 => monid_invo(&mut run),
        SuiteId::S16 => wl_membership(&mut run, &window),
    }
    if let Some(m) = alg.mutation() {
        run.notes.push(format!("mutation {m} active"));
    }
    Ok(SuiteReport {
        suite,
        name: suite.name(),
        n: alg.params().n(),
        p: alg.params().p(),
        radius,
        checks_run: run.checks,
        verdict: if run.cex.is_some() { Outcome::Fail } else { Outcome::Pass },
        first_counterexample: run.cex,
        notes: run.notes,
        elapsed_us: start.elapsed().as_micros() as u64,
    })
}

/// Runs every suite at every grid point, grid-major.
pub fn run_grid(
    suites: &[SuiteId],
    grid: &[(i64, i64)],
    radius: i64,
    cfg: &RunConfig,
    mutation: Option<Mutation>,
) -> std::result::Result<Vec<SuiteReport>, HarnessError> {
    let mut out = Vec::new();
    for &(n, p) in grid {
        let params = Params::new(n, p)?;
        let alg = match mutation {
            Some(m) => Algebra::with_mutation(params, m),
            None => Algebra::new(params),
        };
        for &suite in suites {
            out.push(run_suite(&alg, suite, radius, cfg)?);
        }
    }
    Ok(out)
}

/// The residuation law re-derived from the pomonoid structure alone:
/// `a⊙b ≤ c ⇔ b ≤ ∼(a⊙∼c)`, with the right side built from `⊙` and `∼`
/// rather than the residual.
pub fn check_monid_invo_generic(
    alg: &Algebra,
    window: &Window,
    cfg: &RunConfig,
) -> std::result::Result<SuiteReport, HarnessError> {
    run_suite(alg, SuiteId::S15, window.radius(), cfg)
}

/// Suites catching each mutation, at the given parameters and radius.
pub fn mutation_sensitivity(
    params: Params,
    radius: i64,
    cfg: &RunConfig,
) -> std::result::Result<Vec<(Mutation, Vec<SuiteId>)>, HarnessError> {
    let mut out = Vec::new();
    for m in Mutation::ALL {
        let alg = Algebra::with_mutation(params, m);
        let mut caught = Vec::new();
        for suite in SuiteId::ALL {
            if !run_suite(&alg, suite, radius, cfg)?.passed() {
                caught.push(suite);
            }
        }
        out.push((m, caught));
    }
    Ok(out)
}

fn residuation(run: &mut Run) {
    run.triples("a⊙b ≤ c ⇔ b ≤ a÷c", |alg, a, b, c| {
        Ok(alg.leq(&alg.mul(&a, &b)?, &c)? == alg.leq(&b, &alg.div(&a, &c)?)?)
    });
    run.pairs("a ≤ b ⇔ a÷b = ⊤", |alg, a, b| Ok(alg.leq(&a, &b)? == (alg.div(&a, &b)? == alg.top())));
}

fn associativity(run: &mut Run) {
    run.triples("(a⊙b)⊙c = a⊙(b⊙c)", |alg, a, b, c| {
        Ok(alg.mul(&alg.mul(&a, &b)?, &c)? == alg.mul(&a, &alg.mul(&b, &c)?)?)
    });
}

fn monotonicity(run: &mut Run) {
    run.triples("b ≤ c ⇒ a⊙b ≤ a⊙c", |alg, a, b, c| {
        Ok(!alg.leq(&b, &c)? || alg.leq(&alg.mul(&a, &b)?, &alg.mul(&a, &c)?)?)
    });
    run.pairs("a⊙b = b⊙a", |alg, a, b| Ok(alg.mul(&a, &b)? == alg.mul(&b, &a)?));
}

fn involution(run: &mut Run) {
    run.singles("∼∼a = a", |alg, a| Ok(alg.inv(&alg.inv(&a)?)? == a));
    run.singles("∼a = a÷⊥", |alg, a| Ok(alg.inv(&a)? == alg.div(&a, &alg.bot())?));
    run.pairs("a ≤ b ⇒ ∼b ≤ ∼a", |alg, a, b| Ok(!alg.leq(&a, &b)? || alg.leq(&alg.inv(&b)?, &alg.inv(&a)?)?));
}

fn annihilation(run: &mut Run) {
    run.pairs("a⊙b = ⊥ ⇔ a ≤ ∼b", |alg, a, b| Ok((alg.mul(&a, &b)? == alg.bot()) == alg.leq(&a, &alg.inv(&b)?)?));
}

fn unit_absorb(run: &mut Run) {
    run.singles("a⊙⊥ = ⊥", |alg, a| Ok(alg.mul(&a, &alg.bot())? == alg.bot()));
    run.singles("a⊙⊤ = a", |alg, a| Ok(alg.mul(&a, &alg.top())? == a));
    run.singles("⊥ ≤ a ≤ ⊤", |alg, a| Ok(alg.leq(&alg.bot(), &a)? && alg.leq(&a, &alg.top())?));
}

fn lattice(run: &mut Run) {
    run.pairs("≤ is antisymmetric; ∧, ∨ are commutative and agree with ≤", |alg, a, b| {
        let (ab, ba) = (alg.leq(&a, &b)?, alg.leq(&b, &a)?);
        let (meet, join) = (alg.meet(&a, &b)?, alg.join(&a, &b)?);
        Ok((!(ab && ba) || a == b)
            && meet == alg.meet(&b, &a)?
            && join == alg.join(&b, &a)?
            && alg.leq(&meet, &a)?
            && alg.leq(&meet, &b)?
            && alg.leq(&a, &join)?
            && alg.leq(&b, &join)?
            && ab == (meet == a)
            && ab == (join == b))
    });
    run.triples("≤ is transitive; ∧ is the glb and ∨ the lub", |alg, a, b, c| {
        let trans = !(alg.leq(&a, &b)? && alg.leq(&b, &c)?) || alg.leq(&a, &c)?;
        let glb = !(alg.leq(&c, &a)? && alg.leq(&c, &b)?) || alg.leq(&c, &alg.meet(&a, &b)?)?;
        let lub = !(alg.leq(&a, &c)? && alg.leq(&b, &c)?) || alg.leq(&alg.join(&a, &b)?, &c)?;
        Ok(trans && glb && lub)
    });
    run.triples("a∧(b∨c) = (a∧b)∨(a∧c)", |alg, a, b, c| {
        let lhs = alg.meet(&a, &alg.join(&b, &c)?)?;
        Ok(lhs == alg.join(&alg.meet(&a, &b)?, &alg.meet(&a, &c)?)?)
    });
}

fn radical(alg: &Algebra, a: &ApElem) -> Result<bool> {
    filter_member(alg, FilterId::Radical, a)
}

fn ap_local(run: &mut Run) {
    let params = run.alg.params();
    let (n, p) = (params.n(), params.p());
    run.singles("a ∨ ∼(aᵖ) is radical", |alg, a| {
        let x = alg.join(&a, &alg.inv(&alg.pow(&a, p as u64)?)?)?;
        radical(alg, &x)
    });
    let k = if p <= n { n + 1 } else { p };
    run.notes.push(if p <= n {
        format!("p ≤ n branch: non-radical iff a^{k} = ⊥")
    } else {
        format!("n < p branch: non-radical iff a^{k} = ⊥, with the cyclic element ⟨(n−1,0),p−1⟩")
    });
    run.singles("a not radical ⇔ aᵏ = ⊥", |alg, a| Ok(!radical(alg, &a)? == (alg.pow(&a, k as u64)? == alg.bot())));
    if n < p {
        let alg = run.alg;
        let c = alg.coradical_max();
        let outcome = (|| Ok(alg.pow(&c, (p - 1) as u64)? == alg.inv(&c)?))();
        run.record(outcome, &[c], "c^(p−1) = ∼c");
    }
}

fn power_thresholds(run: &mut Run, window: &Window) {
    let alg = run.alg;
    let threshold = alg.params().power_threshold();
    let c = alg.coradical_max();
    // The threshold law only needs the largest non-radical
    // element; record how it relates to ⟨(n−1,0),p−1⟩ before checking.
    if let Ok(Some(d)) = largest_non_radical(alg, window) {
        let powers: Result<Vec<ApElem>> = (1..=threshold).map(|k| alg.pow(&d, k as u64)).collect();
        if let Ok(powers) = powers {
            let first_bot = powers.iter().position(|x| *x == alg.bot()).map(|i| i + 1);
            run.notes.push(format!(
                "largest non-radical element {d}: first power equal to ⊥ is {}",
                first_bot.map_or("none".to_string(), |k| k.to_string())
            ));
        }
    }
    match power_threshold_check(alg, window) {
        Ok(report) => {
            run.notes.push(format!("powers of ⟨(n−1,0),p−1⟩: {}", report.coradical_powers.join(" ")));
            run.record(Ok(report.below_threshold_nonzero), &[c], "cᵏ ≠ ⊥ for 0 < k < max{n+1,p}");
            run.record(Ok(report.vanishes_at_threshold), &[c], "cᵏ = ⊥ at k = max{n+1,p}");
        }
        Err(e) => run.fact(Err(e), "power threshold report"),
    }
    let extra = window.radius() + 2;
    run.singles("aᵏ = ⊥ for every k ≥ max{n+1,p} iff a is not radical", |alg, a| {
        let rad = radical(alg, &a)?;
        for k in threshold..=threshold + extra {
            if (alg.pow(&a, k as u64)? == alg.bot()) == rad {
                return Ok(false);
            }
        }
        Ok(true)
    });
}

fn boolean_term(run: &mut Run, radius: i64) {
    let params = run.alg.params();
    let threshold = params.power_threshold();
    let n = params.n();
    run.singles("t(a) ∈ {⊥, ⊤}", |alg, a| {
        let t = alg.boolean_term(&a)?;
        Ok(t == alg.bot() || t == alg.top())
    });
    run.singles("t(a) = ⊤ ⇔ a ≥ ⟨(0,0),p⟩", |alg, a| Ok(radical_member_via_term(alg, &a)? == radical(alg, &a)?));
    run.singles("a radical ⇔ (n+1).aᵏ = ⊤ for all small k > 0", |alg, a| {
        let all_top = (1..=threshold + 2)
            .map(|k| Ok(alg.mult(n as u64 + 1, &alg.pow(&a, k as u64)?)? == alg.top()))
            .collect::<Result<Vec<bool>>>()?
            .into_iter()
            .all(|b| b);
        Ok(all_top == radical(alg, &a)?)
    });
    run.singles("k.x^k with k = max{n+1,p} is Boolean and radical", |alg, a| {
        let k = threshold as u64;
        let t = alg.mult(k, &alg.pow(&a, k)?)?;
        Ok((t == alg.top()) == radical(alg, &a)? && (t == alg.top() || t == alg.bot()))
    });
    for preset in [Preset::Bterm, Preset::Rad(1), Preset::Rad(2), Preset::Rad(3)] {
        equation_fact(run, preset, radius);
    }
}

fn equation_fact(run: &mut Run, preset: Preset, radius: i64) {
    let alg = run.alg;
    let eq = preset.equation(alg.params());
    match check_equation(&eq, alg, radius, 1) {
        Ok(Verdict::Holds { assignments }) => run.checks += assignments,
        Ok(Verdict::Counterexample { env, .. }) => {
            let witness: Vec<ApElem> = env.values().copied().collect();
            run.record(Ok(false), &witness, &format!("{eq}"));
        }
        Err(e) => run.fact(Err(AlgebraError::Literal { input: eq.to_string(), reason: e.to_string() }), "equation check"),
    }
}

fn filters(run: &mut Run, window: &Window) {
    for f in FilterId::PROPER {
        let name = f.name();
        run.fact(filter_member(run.alg, f, &run.alg.top()), &format!("⊤ ∈ {name}"));
        run.pairs(&format!("{name} is increasing and closed under ⊙"), |alg, a, b| {
            if !filter_member(alg, f, &a)? {
                return Ok(true);
            }
            let up = !alg.leq(&a, &b)? || filter_member(alg, f, &b)?;
            let closed = !filter_member(alg, f, &b)? || filter_member(alg, f, &alg.mul(&a, &b)?)?;
            Ok(up && closed)
        });
        run.pairs(&format!("{name} is closed under modus ponens"), |alg, a, b| {
            Ok(!(filter_member(alg, f, &a)? && filter_member(alg, f, &alg.div(&a, &b)?)?) || filter_member(alg, f, &b)?)
        });
    }
    run.singles("every principal filter is one of the four", |alg, a| Ok(generated_filter(alg, window, &a)?.is_some()));
    let alg = run.alg;
    match largest_non_radical(alg, window) {
        Ok(Some(d)) => {
            run.notes.push(format!("largest non-radical element: {d}"));
            run.singles("the universe is ↑⟨(0,0),p⟩ ⊔ ↓d", |alg, a| Ok(radical(alg, &a)? != alg.leq(&a, &d)?));
        }
        Ok(None) => run.fact(Ok(false), "the non-radical elements have a largest element"),
        Err(e) => run.fact(Err(e), "largest non-radical element"),
    }
    let (n, p) = (alg.params().n(), alg.params().p());
    let expected = (2 * (n + 1) + n * (p - 1)) as usize;
    match quotient_classes(alg, window, FilterId::FOmega) {
        Ok(classes) => {
            run.notes.push(format!("f_omega quotient: {} classes", classes.len()));
            run.record(Ok(classes.len() == expected), &[], &format!("f_omega quotient has {expected} classes"));
        }
        Err(e) => run.fact(Err(e), "f_omega quotient"),
    }
    match radical_quotient_report(alg, window) {
        Ok(r) => run.notes.push(format!(
            "radical quotient: {} classes (equals p: {}, equals p+1: {})",
            r.classes, r.matches_p, r.matches_p_plus_one
        )),
        Err(e) => run.fact(Err(e), "radical quotient"),
    }
}

fn complemented(run: &mut Run, window: &Window) {
    let alg = run.alg;
    match boolean_elements(alg, window) {
        Ok(found) => {
            let ok = found.len() == 2 && found.contains(&alg.bot()) && found.contains(&alg.top());
            let extra: Vec<ApElem> = found.into_iter().filter(|a| *a != alg.bot() && *a != alg.top()).collect();
            run.record(Ok(ok), &extra, "only ⊥ and ⊤ are complemented");
            run.checks += (window.enumerate().len() as u64).pow(2);
        }
        Err(e) => run.fact(Err(e), "complemented elements"),
    }
}

fn subalgebras(run: &mut Run, window: &Window) {
    let alg = run.alg;
    for sub in SubalgebraId::all_for(alg.params().p()) {
        let members = match sub.members_in(alg, window) {
            Ok(m) => m,
            Err(e) => {
                run.fact(Err(AlgebraError::Literal { input: sub.to_string(), reason: e.to_string() }), "subalgebra");
                continue;
            }
        };
        let inside = |alg: &Algebra, x: &ApElem| sub.contains(alg, x) == Ok(true);
        let saved = std::mem::replace(&mut run.elems, members.clone());
        run.fact(Ok(inside(alg, &alg.bot()) && inside(alg, &alg.top())), &format!("{sub} contains ⊥ and ⊤"));
        run.pairs(&format!("{sub} is closed under ⊙, ÷, ∧, ∨ and ∼"), |alg, a, b| {
            for c in [alg.mul(&a, &b)?, alg.div(&a, &b)?, alg.meet(&a, &b)?, alg.join(&a, &b)?, alg.inv(&a)?] {
                if !inside(alg, &c) {
                    return Ok(false);
                }
            }
            Ok(true)
        });
        run.elems = saved;
        if let Ok(Some(all)) = sub.finite_members(alg) {
            let generated = closure(alg, &all, DEFAULT_CLOSURE_MAX_SIZE, DEFAULT_CLOSURE_MAX_ITERS);
            let ok = generated.map(|c| c.is_closed() && c.elements == all);
            run.fact(ok, &format!("{sub} is its own generated subalgebra"));
        }
    }
    let c = alg.coradical_max();
    let generated = closure(alg, &[c], DEFAULT_CLOSURE_MAX_SIZE, DEFAULT_CLOSURE_MAX_ITERS);
    let ok = generated.map(|g| {
        run.notes.push(format!("subalgebra generated by ⟨(n−1,0),p−1⟩ has {} elements", g.elements.len()));
        g.is_closed() && g.elements.iter().all(|x| SubalgebraId::HatLnp.contains(alg, x) == Ok(true))
    });
    run.record(ok, &[c], "the subalgebra generated by ⟨(n−1,0),p−1⟩ lies in hatLnp");
}

fn omega_arrow(a: &ApElem, b: &ApElem) -> Result<LexPair> {
    Ok(a.first_elem().arrow(&b.first_elem())?.value())
}

/// `÷` by level cases. `None` for `α = 0 < β < p`, the one combination
/// without a closed form.
pub fn residual_closed_form(alg: &Algebra, a: &ApElem, b: &ApElem) -> Result<Option<ApElem>> {
    alg.check_element(a)?;
    alg.check_element(b)?;
    let params = alg.params();
    let (n, p) = (params.n(), params.p());
    let (x, alpha) = (a.first(), a.alpha());
    let (y, beta) = (b.first(), b.alpha());
    let cap = LexPair::standard(n - 1);
    let element = |first: LexPair, level: i64| ApElem::new(first, level, params).map(Some);
    if alpha == 0 {
        return match beta {
            0 => element(omega_arrow(b, a)?, p),
            b if b == p => {
                let sum = x.checked_add(y)?.checked_add(LexPair::standard(1))?;
                element(LexPair::standard(n).min(sum), p)
            }
            _ => Ok(None),
        };
    }
    if beta == 0 {
        if alpha == p {
            return element(a.first_elem().star(&b.first_elem())?.value(), 0);
        }
        let m = crate::error::sub(crate::error::sub(crate::error::mul2(n)?, 1)?, crate::error::add(x.m, y.m)?)?;
        let r = crate::error::neg(crate::error::add(x.r, y.r)?)?;
        return element(cap.min(LexPair::new(m, r)), p - alpha);
    }
    let arrow = omega_arrow(a, b)?;
    if alpha <= beta {
        element(arrow, p)
    } else {
        element(cap.min(arrow), a.second_elem().arrow(&b.second_elem())?.value())
    }
}

fn residual_closed_form_suite(run: &mut Run) {
    let mut skipped = 0u64;
    run.pairs("a÷b agrees with its closed form", |alg, a, b| match residual_closed_form(alg, &a, &b)? {
        Some(expected) => Ok(expected == alg.div(&a, &b)?),
        None => {
            skipped += 1;
            Ok(true)
        }
    });
    if skipped > 0 {
        run.notes.push(format!("{skipped} pairs with α = 0 < β < p have no closed form and were skipped"));
    }
}

fn monid_invo(run: &mut Run) {
    run.pairs("hypothesis: a⊙b = ⊥ ⇔ a ≤ ∼b", |alg, a, b| {
        Ok((alg.mul(&a, &b)? == alg.bot()) == alg.leq(&a, &alg.inv(&b)?)?)
    });
    run.pairs("∼(a⊙∼c) = a÷c", |alg, a, c| Ok(alg.inv(&alg.mul(&a, &alg.inv(&c)?)?)? == alg.div(&a, &c)?));
    run.triples("a⊙b ≤ c ⇔ b ≤ ∼(a⊙∼c)", |alg, a, b, c| {
        let rhs = alg.inv(&alg.mul(&a, &alg.inv(&c)?)?)?;
        Ok(alg.leq(&alg.mul(&a, &b)?, &c)? == alg.leq(&b, &rhs)?)
    });
}

fn wl_membership(run: &mut Run, window: &Window) {
    let alg = run.alg;
    let k = alg.params().power_threshold() as u32;
    equation_fact(run, Preset::Wl(k), window.radius());
    let members = match SubalgebraId::HatLn2.members_in(alg, window) {
        Ok(m) => m,
        Err(e) => unreachable!("hatLn2 needs no divisor: {e}"),
    };
    let eq = Preset::WlWitness.equation(alg.params());
    match check_equation_on(&eq, alg, &members, 1) {
        Ok(Verdict::Counterexample { env, lhs, .. }) => {
            run.checks += 1;
            let x = env.values().next().copied().expect("one variable");
            run.notes.push(format!("WL_{} fails in hatLn2 at x={x}: {lhs} ≠ top", alg.params().n()));
        }
        Ok(Verdict::Holds { assignments }) => {
            run.checks += assignments;
            run.record(Ok(false), &members, &format!("some x in hatLn2 violates {eq}"));
        }
        Err(e) => run.fact(Err(AlgebraError::Literal { input: eq.to_string(), reason: e.to_string() }), "WL_n search"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(n: i64, p: i64) -> Algebra {
        Algebra::from_indices(n, p).unwrap()
    }

    #[test]
    fn registry_covers_every_claim() {
        for claim in CLAIMS {
            assert!(SuiteId::ALL.iter().any(|s| s.claims().contains(&claim.key)), "claim {} is not covered", claim.key);
        }
        for suite in SuiteId::ALL {
            assert!(!suite.claims().is_empty());
            for key in suite.claims() {
                assert!(CLAIMS.iter().any(|c| c.key == *key), "{suite} cites unknown claim {key}");
            }
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in SuiteId::ALL {
            assert_eq!(s.code().parse::<SuiteId>().unwrap(), s);
            assert_eq!(s.name().parse::<SuiteId>().unwrap(), s);
        }
        assert!("S99".parse::<SuiteId>().is_err());
    }

    #[test]
    fn associativity_counts_triples() {
        let a = alg(2, 3);
        let size = Window::new(a.params(), 2).unwrap().enumerate().len() as u64;
        let report = run_suite(&a, SuiteId::S2, 2, &RunConfig::default()).unwrap();
        assert!(report.passed());
        assert_eq!(report.checks_run, size.pow(3));
    }

    #[test]
    fn verdict_matches_counterexample() {
        let a = Algebra::with_mutation(Params::new(2, 3).unwrap(), Mutation::MulAnnihilatingOffset);
        let report = run_suite(&a, SuiteId::S1, 2, &RunConfig::default()).unwrap();
        assert_eq!(report.verdict, Outcome::Fail);
        assert_eq!(report.first_counterexample.as_ref().map(Vec::len), Some(3));
        let ok = run_suite(&alg(2, 3), SuiteId::S1, 2, &RunConfig::default()).unwrap();
        assert!(ok.first_counterexample.is_none());
    }

    #[test]
    fn every_suite_passes_at_two_three() {
        let a = alg(2, 3);
        for s in SuiteId::ALL {
            let r = run_suite(&a, s, 2, &RunConfig::default()).unwrap();
            assert!(r.passed(), "{}", r.summary_line());
        }
    }

    #[test]
    fn budget_guard() {
        let cfg = RunConfig { budget: 10, ..RunConfig::default() };
        let err = run_suite(&alg(1, 1), SuiteId::S2, 2, &cfg).unwrap_err();
        assert!(matches!(err, HarnessError::Budget { suite: SuiteId::S2, .. }));
        let forced = RunConfig { force: true, ..cfg };
        assert!(run_suite(&alg(1, 1), SuiteId::S2, 2, &forced).unwrap().passed());
        assert_eq!(run_suite(&alg(1, 1), SuiteId::S2, -1, &forced), Err(HarnessError::NegativeRadius(-1)));
    }

    #[test]
    fn sampled_mode_is_seeded() {
        let cfg = RunConfig { mode: Mode::Sampled { samples: 500, seed: 7 }, ..RunConfig::default() };
        let a = alg(3, 3);
        let one = run_suite(&a, SuiteId::S2, 5, &cfg).unwrap();
        let two = run_suite(&a, SuiteId::S2, 5, &cfg).unwrap();
        assert_eq!(one.checks_run, 500);
        assert_eq!((one.verdict, one.notes), (two.verdict, two.notes));
    }

    #[test]
    fn grid_and_empty_grid() {
        assert!(run_grid(&[], &DEFAULT_GRID, 2, &RunConfig::default(), None).unwrap().is_empty());
        let reports = run_grid(&[SuiteId::S6], &[(1, 1), (3, 2)], 1, &RunConfig::default(), None).unwrap();
        assert_eq!(reports.iter().map(|r| (r.n, r.p)).collect::<Vec<_>>(), [(1, 1), (3, 2)]);
    }

    /// The two level cases where the naive closed form is wrong.
    #[test]
    fn uncapped_closed_forms_fail() {
        let a = alg(2, 3);
        let el = |m, r, alpha| a.element(m, r, alpha).unwrap();
        // α ≰ β, β ≠ 0: ⟨x→y, α→β⟩ leaves the universe
        let (x, y) = (el(1, 0, 2), el(1, 0, 1));
        assert_eq!(omega_arrow(&x, &y).unwrap(), LexPair::standard(2));
        assert!(ApElem::new(LexPair::standard(2), 2, a.params()).is_err());
        assert_eq!(a.div(&x, &y).unwrap(), el(1, 0, 2));
        assert_eq!(residual_closed_form(&a, &x, &y).unwrap(), Some(el(1, 0, 2)));
        // 0 < α < p against level 0: min{(n−1,0),(m+k+1,r+s)} gives ⟨(1,0),1⟩
        let naive = el(1, 0, 1);
        let actual = a.div(&x, &a.bot()).unwrap();
        assert_eq!(actual, el(0, 0, 1));
        assert_ne!(actual, naive);
        assert_eq!(residual_closed_form(&a, &x, &a.bot()).unwrap(), Some(actual));
    }

    #[test]
    fn monid_invo_entry_point() {
        let a = alg(2, 3);
        let w = Window::new(a.params(), 2).unwrap();
        assert!(check_monid_invo_generic(&a, &w, &RunConfig::default()).unwrap().passed());
    }
}
