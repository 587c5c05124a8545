//! Batch property harness. Every registered check binds one lemma or theorem
//! about degree sequences to an exhaustive or seeded-random sweep and collects
//! every counterexample it meets.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::elimination::{
    dominance_report, eliminate_with_order, erdos_gallai, hh_eliminate, is_graphic, kw_layoff,
    residue, EliminationEnumerator, EliminationError, EliminationSequence, ExplicitValues, Witness,
    DEFAULT_BUDGET,
};
use crate::realization::{
    degree_sequence, for_each_realization, hh_realize, independence_number, RealizationError,
    MAX_REALIZATION_LEN,
};
use crate::sequence::{
    compare_dominance, count, elementary_successors, reduce_top, CountMode, DegreeSequence,
    DominanceVerdict,
};

/// Longest length accepted by [`enumerate_graphic_sequences`].
pub const MAX_ENUMERATION_LEN: usize = 10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("{what} = {value} exceeds the limit of {limit}")]
    TooLarge { what: &'static str, value: usize, limit: usize },
    #[error("probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error(transparent)]
    Elimination(#[from] EliminationError),
    #[error(transparent)]
    Realization(#[from] RealizationError),
}

/// Static description of a registered check.
#[derive(Debug, Clone, Copy)]
pub struct CheckInfo {
    pub id: &'static str,
    pub claim: &'static str,
    pub default_len: usize,
    pub len_cap: usize,
    /// Zero for exhaustive checks.
    pub default_samples: usize,
}

/// The registry, in reporting order.
pub const CHECKS: &[CheckInfo] = &[
    CheckInfo {
        id: "paper-example",
        claim: "(4,3,3,3,2,1): E1=(4,1,1,1,1,0) and E2=(3,3,1,1,0,0) are incomparable, E=(4,2,1,1,0,0) dominates both",
        default_len: 6,
        len_cap: 6,
        default_samples: 0,
    },
    CheckInfo {
        id: "main-theorem",
        claim: "the Havel-Hakimi elimination sequence dominates every other elimination sequence",
        default_len: 7,
        len_cap: 9,
        default_samples: 200,
    },
    CheckInfo {
        id: "barrus-corollary",
        claim: "no elimination order leaves more zeros than the residue",
        default_len: 7,
        len_cap: 9,
        default_samples: 200,
    },
    CheckInfo {
        id: "kleitman-wang-termination",
        claim: "every lay-off order of a graphic sequence stays graphic and consumes sum/2 edges",
        default_len: 8,
        len_cap: 9,
        default_samples: 0,
    },
    CheckInfo {
        id: "alpha-ge-residue",
        claim: "alpha(G) >= R(G) for every labeled realization",
        default_len: 6,
        len_cap: MAX_REALIZATION_LEN,
        default_samples: 0,
    },
    CheckInfo {
        id: "residue-monotone",
        claim: "pi dominates sigma (equal length) implies R(pi) >= R(sigma)",
        default_len: 8,
        len_cap: 12,
        default_samples: 1000,
    },
    CheckInfo {
        id: "elimination-monotone",
        claim: "pi dominates sigma implies E(pi) dominates E(sigma)",
        default_len: 8,
        len_cap: 12,
        default_samples: 1000,
    },
    CheckInfo {
        id: "merge-dominance",
        claim: "pi dominates sigma implies (pi,x) dominates (sigma,x)",
        default_len: 8,
        len_cap: 12,
        default_samples: 1000,
    },
    CheckInfo {
        id: "additive-dominance",
        claim: "pi1 >= sigma1 and pi2 >= sigma2 implies (pi1,pi2) >= (sigma1,sigma2)",
        default_len: 8,
        len_cap: 12,
        default_samples: 1000,
    },
    CheckInfo {
        id: "reduce-adjacent-commute",
        claim: "pi^{p,p+1} = pi^{p+1,p} and pi^{p,(p+1)^x} = pi^{(p+1)^x,p}",
        default_len: 10,
        len_cap: 16,
        default_samples: 10_000,
    },
    CheckInfo {
        id: "reduce-commute",
        claim: "pi^{p,q} = pi^{q,p} whenever both stay non-negative",
        default_len: 10,
        len_cap: 16,
        default_samples: 10_000,
    },
    CheckInfo {
        id: "layoff-commute-a",
        claim: "d1 >= n_{>=di} - 1 and di >= n_{d1} imply pi_{1,i} = pi_{i,1}",
        default_len: 7,
        len_cap: MAX_ENUMERATION_LEN,
        default_samples: 0,
    },
    CheckInfo {
        id: "layoff-commute-b",
        claim: "d1 < n_{>=di} - 1 and di < n_{d1} imply pi_{1,i} = pi_{i,1}",
        default_len: 7,
        len_cap: MAX_ENUMERATION_LEN,
        default_samples: 0,
    },
    CheckInfo {
        id: "dominance-characterization",
        claim: "pi dominates sigma iff sigma is reachable from pi by elementary (i,j)-steps",
        default_len: 5,
        len_cap: 8,
        default_samples: 0,
    },
    CheckInfo {
        id: "graphic-oracle",
        claim: "Havel-Hakimi graphicality agrees with Erdos-Gallai",
        default_len: 8,
        len_cap: MAX_ENUMERATION_LEN,
        default_samples: 0,
    },
    CheckInfo {
        id: "realization-roundtrip",
        claim: "the Havel-Hakimi construction realizes every graphic sequence",
        default_len: 8,
        len_cap: MAX_ENUMERATION_LEN,
        default_samples: 0,
    },
];

pub fn check_ids() -> impl Iterator<Item = &'static str> {
    CHECKS.iter().map(|c| c.id)
}

pub fn check_info(id: &str) -> Option<&'static CheckInfo> {
    CHECKS.iter().find(|c| c.id == id)
}

/// Requested scope; `None` fields fall back to the check's defaults.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ScopeRequest {
    pub max_len: Option<usize>,
    pub samples: Option<usize>,
    pub seed: u64,
    pub budget: Option<usize>,
}

/// Scope after defaults are applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scope {
    pub max_len: usize,
    pub samples: usize,
    pub seed: u64,
    pub budget: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub pass: bool,
    pub scope: Scope,
    pub instances: usize,
    /// Instances generated but not meeting the hypothesis of the claim.
    pub skipped: usize,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckReport {
    /// Stable JSON document; field order is fixed and timing is left out.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Default)]
struct Tally {
    instances: usize,
    skipped: usize,
    failures: Vec<Failure>,
}

impl Tally {
    fn skip(&mut self) {
        self.skipped += 1;
    }

    fn record(&mut self, ok: bool, input: impl ToString, expected: impl ToString, actual: impl ToString) {
        self.instances += 1;
        if !ok {
            self.failures.push(Failure {
                input: input.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn absorb(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        self.skipped += other.skipped;
        self.failures.extend(other.failures);
        self
    }
}

fn collect_par<T, F>(items: Vec<T>, f: F) -> Result<Tally, VerifyError>
where
    T: Send,
    F: Fn(T) -> Result<Tally, VerifyError> + Sync + Send,
{
    let parts: Vec<Result<Tally, VerifyError>> = items.into_par_iter().map(f).collect();
    let mut total = Tally::default();
    for part in parts {
        total = total.absorb(part?);
    }
    Ok(total)
}

/// Non-increasing tuples of length `len` with entries at most `max`, ascending lexicographically.
pub fn nonincreasing_sequences(len: usize, max: u32) -> Vec<DegreeSequence> {
    fn rec(prefix: &mut Vec<u32>, len: usize, cap: u32, out: &mut Vec<DegreeSequence>) {
        if prefix.len() == len {
            out.push(DegreeSequence::from_degrees(prefix.clone()));
            return;
        }
        for d in 0..=cap {
            prefix.push(d);
            rec(prefix, len, d, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(len), len, max, &mut out);
    out
}

/// Every graphic sequence of length exactly `n`, ascending lexicographically.
pub fn enumerate_graphic_sequences(n: usize) -> Result<Vec<DegreeSequence>, VerifyError> {
    if n > MAX_ENUMERATION_LEN {
        return Err(VerifyError::TooLarge { what: "length", value: n, limit: MAX_ENUMERATION_LEN });
    }
    let top = n.saturating_sub(1) as u32;
    Ok(nonincreasing_sequences(n, top)
        .into_iter()
        .filter(|s| {
            let graphic = is_graphic(s);
            assert_eq!(graphic, erdos_gallai(s), "graphicality tests disagree on {s}");
            graphic
        })
        .collect())
}

/// Degree sequence of a seeded `G(n, p)` sample.
pub fn random_graphic_sequence(n: usize, p: f64, seed: u64) -> Result<DegreeSequence, VerifyError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(VerifyError::InvalidProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut deg = vec![0u32; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
    }
    Ok(DegreeSequence::from_degrees(deg))
}

fn random_sequence_from(rng: &mut ChaCha8Rng, max_len: usize) -> DegreeSequence {
    let n = rng.gen_range(1..=max_len.max(1));
    let p: f64 = rng.gen();
    random_graphic_sequence(n, p, rng.gen()).expect("p drawn from [0, 1)")
}

/// Walk `steps` random elementary steps down from `seq`.
fn random_descent(rng: &mut ChaCha8Rng, seq: &DegreeSequence, steps: usize) -> DegreeSequence {
    let mut cur = seq.clone();
    for _ in 0..steps {
        let next: Vec<DegreeSequence> = elementary_successors(&cur).into_iter().collect();
        if next.is_empty() {
            break;
        }
        cur = next[rng.gen_range(0..next.len())].clone();
    }
    cur
}

fn resolve(info: &CheckInfo, req: &ScopeRequest) -> Result<Scope, VerifyError> {
    let max_len = req.max_len.unwrap_or(info.default_len);
    if max_len > info.len_cap {
        return Err(VerifyError::TooLarge { what: "n", value: max_len, limit: info.len_cap });
    }
    Ok(Scope {
        max_len,
        samples: req.samples.unwrap_or(info.default_samples),
        seed: req.seed,
        budget: req.budget.unwrap_or(DEFAULT_BUDGET),
    })
}

/// Run one registered check.
pub fn run_check(id: &str, req: &ScopeRequest) -> Result<CheckReport, VerifyError> {
    let info = check_info(id).ok_or_else(|| VerifyError::UnknownCheck(id.to_string()))?;
    let scope = resolve(info, req)?;
    let started = Instant::now();
    let tally = match id {
        "paper-example" => worked_example(&scope)?,
        "main-theorem" => elimination_sweep(&scope, SweepTarget::Dominance)?,
        "barrus-corollary" => elimination_sweep(&scope, SweepTarget::Zeros)?,
        "kleitman-wang-termination" => kleitman_wang_termination(&scope)?,
        "alpha-ge-residue" => alpha_ge_residue(&scope)?,
        "residue-monotone" => monotone_pairs(&scope, false)?,
        "elimination-monotone" => monotone_pairs(&scope, true)?,
        "merge-dominance" => merge_dominance(&scope),
        "additive-dominance" => additive_dominance(&scope),
        "reduce-adjacent-commute" => reduce_adjacent_commute(&scope),
        "reduce-commute" => reduce_commute(&scope),
        "layoff-commute-a" => layoff_commute(&scope, LayoffCase::A)?,
        "layoff-commute-b" => layoff_commute(&scope, LayoffCase::B)?,
        "dominance-characterization" => dominance_characterization(&scope),
        "graphic-oracle" => graphic_oracle(&scope),
        "realization-roundtrip" => realization_roundtrip(&scope)?,
        _ => unreachable!("registry and dispatch out of sync: {id}"),
    };
    let mut failures = tally.failures;
    failures.sort();
    Ok(CheckReport {
        check_id: id.to_string(),
        pass: failures.is_empty(),
        scope,
        instances: tally.instances,
        skipped: tally.skipped,
        failures,
        elapsed: started.elapsed(),
    })
}

fn worked_example(scope: &Scope) -> Result<Tally, VerifyError> {
    let pi = DegreeSequence::from_degrees(vec![4, 3, 3, 3, 2, 1]);
    let e1_expected = EliminationSequence::from_values(vec![4, 1, 1, 1, 1, 0]);
    let e2_expected = EliminationSequence::from_values(vec![3, 3, 1, 1, 0, 0]);
    let hh_expected = EliminationSequence::from_values(vec![4, 2, 1, 1, 0, 0]);
    let mut t = Tally::default();

    let e1 = eliminate_with_order(&pi, &mut ExplicitValues::new(vec![4, 1, 1, 1, 1, 0]))?
        .elimination_sequence();
    t.record(e1 == e1_expected, "E1 via lay-offs 4,1,1,1,1,0", &e1_expected, &e1);
    let e2 = eliminate_with_order(&pi, &mut ExplicitValues::new(vec![3, 3, 1, 1, 0, 0]))?
        .elimination_sequence();
    t.record(e2 == e2_expected, "E2 via lay-offs 3,3,1,1,0,0", &e2_expected, &e2);
    let hh = hh_eliminate(&pi)?;
    t.record(hh.elim == hh_expected, "E(4,3,3,3,2,1)", &hh_expected, &hh.elim);

    let v = e1.compare(&e2);
    t.record(v == DominanceVerdict::Incomparable, "E1 vs E2", DominanceVerdict::Incomparable, v);
    for (name, other) in [("E vs E1", &e1), ("E vs E2", &e2)] {
        let v = hh.elim.compare(other);
        t.record(v == DominanceVerdict::Dominates, name, DominanceVerdict::Dominates, v);
    }

    let all = EliminationEnumerator::new(scope.budget).enumerate(&pi)?;
    for (name, e) in [("E1 enumerated", &e1_expected), ("E2 enumerated", &e2_expected)] {
        t.record(all.contains(e), name, "present", if all.contains(e) { "present" } else { "absent" });
    }
    Ok(t)
}

#[derive(Clone, Copy)]
enum SweepTarget {
    Dominance,
    Zeros,
}

/// Exhaustive over lengths `1..=max_len`, plus `samples` random sequences one longer.
fn sweep_inputs(scope: &Scope) -> Result<Vec<DegreeSequence>, VerifyError> {
    let mut inputs = Vec::new();
    for len in 1..=scope.max_len {
        inputs.extend(enumerate_graphic_sequences(len)?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(scope.seed);
    let longer = scope.max_len + 1;
    let mut seen = BTreeSet::new();
    for _ in 0..scope.samples {
        let p: f64 = rng.gen();
        let s = random_graphic_sequence(longer, p, rng.gen())?;
        if seen.insert(s.clone()) {
            inputs.push(s);
        }
    }
    Ok(inputs)
}

fn elimination_sweep(scope: &Scope, target: SweepTarget) -> Result<Tally, VerifyError> {
    let budget = scope.budget;
    collect_par(sweep_inputs(scope)?, move |pi| {
        let mut t = Tally::default();
        let hh = hh_eliminate(&pi)?;
        let all = EliminationEnumerator::new(budget).enumerate(&pi)?;
        let report = dominance_report(hh, &all);
        match target {
            SweepTarget::Dominance => {
                let bad: Vec<String> = report
                    .witnesses
                    .iter()
                    .filter_map(|w| match w {
                        Witness::NotDominated { sequence, verdict } => Some(format!("{sequence} ({verdict})")),
                        _ => None,
                    })
                    .collect();
                t.record(bad.is_empty(), &pi, format!("E = {} dominates all", report.hh), bad.join(" "));
            }
            SweepTarget::Zeros => {
                for e in &all {
                    t.record(
                        e.zeros() <= report.residue,
                        format!("{pi} via {e}"),
                        format!("at most {} zeros", report.residue),
                        format!("{} zeros", e.zeros()),
                    );
                }
            }
        }
        Ok(t)
    })
}

fn kleitman_wang_termination(scope: &Scope) -> Result<Tally, VerifyError> {
    let mut inputs = Vec::new();
    for len in 1..=scope.max_len {
        inputs.extend(enumerate_graphic_sequences(len)?);
    }
    let budget = scope.budget;
    collect_par(inputs, move |pi| {
        let mut t = Tally::default();
        match EliminationEnumerator::new(budget).enumerate(&pi) {
            Ok(all) => {
                let edges = pi.sum() / 2;
                for e in &all {
                    let ok = e.len() == pi.len() && e.as_sequence().sum() == edges;
                    t.record(ok, format!("{pi} via {e}"), format!("length {}, sum {edges}", pi.len()),
                        format!("length {}, sum {}", e.len(), e.as_sequence().sum()));
                }
            }
            Err(err @ EliminationError::NonGraphicWitness { .. }) => {
                t.record(false, &pi, "every order terminates", err);
            }
            Err(err) => return Err(err.into()),
        }
        Ok(t)
    })
}

fn alpha_ge_residue(scope: &Scope) -> Result<Tally, VerifyError> {
    let mut inputs = Vec::new();
    for len in 1..=scope.max_len {
        inputs.extend(enumerate_graphic_sequences(len)?);
    }
    collect_par(inputs, |pi| {
        let mut t = Tally::default();
        let r = residue(&pi)?;
        let mut err = None;
        for_each_realization(&pi, |g| match independence_number(g) {
            Ok(alpha) => t.record(alpha >= r, format!("{pi} realized by {:?}", g.edges().collect::<Vec<_>>()),
                format!("alpha >= {r}"), format!("alpha = {alpha}")),
            Err(e) => err = Some(e),
        })?;
        match err {
            Some(e) => Err(e.into()),
            None => Ok(t),
        }
    })
}

/// `(π', σ)` pairs: random graphic π padded with one zero, σ one elementary step below.
fn one_step_pairs(scope: &Scope) -> Vec<(DegreeSequence, DegreeSequence)> {
    let mut rng = ChaCha8Rng::seed_from_u64(scope.seed);
    let mut pairs = Vec::new();
    for _ in 0..scope.samples {
        let pi = random_sequence_from(&mut rng, scope.max_len);
        let pi = if pi.zero_count() == 0 { pi.padded(pi.len() + 1) } else { pi };
        for sigma in elementary_successors(&pi) {
            pairs.push((pi.clone(), sigma));
        }
    }
    pairs
}

fn monotone_pairs(scope: &Scope, whole_sequence: bool) -> Result<Tally, VerifyError> {
    collect_par(one_step_pairs(scope), move |(pi, sigma)| {
        let mut t = Tally::default();
        if !is_graphic(&sigma) {
            t.skip();
            return Ok(t);
        }
        let input = format!("{pi} -> {sigma}");
        let (a, b) = (hh_eliminate(&pi)?, hh_eliminate(&sigma)?);
        if whole_sequence {
            let v = a.elim.compare(&b.elim);
            t.record(v.is_at_least(), input, format!("{} dominates {}", a.elim, b.elim), v);
        } else {
            t.record(a.residue >= b.residue, input, format!("R >= {}", b.residue), format!("R = {}", a.residue));
        }
        Ok(t)
    })
}

/// `(π, σ)` with `π ⪰ σ` of equal length, σ reached by 1..=3 random elementary steps.
fn descent_pairs(rng: &mut ChaCha8Rng, max_len: usize) -> (DegreeSequence, DegreeSequence) {
    let steps = rng.gen_range(1..=3);
    let pi = random_sequence_from(rng, max_len);
    // enough zeros that the descent never grows the length
    let pi = pi.padded(pi.len() + steps);
    let sigma = random_descent(rng, &pi, steps);
    (pi, sigma)
}

fn merge_dominance(scope: &Scope) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(scope.seed);
    let mut t = Tally::default();
    for _ in 0..scope.samples {
        let (pi, sigma) = descent_pairs(&mut rng, scope.max_len);
        debug_assert!(compare_dominance(&pi, &sigma).is_at_least());
        for x in 0..=6 {
            let v = compare_dominance(&pi.with_entry(x), &sigma.with_entry(x));
            t.record(v.is_at_least(), format!("{pi} >= {sigma}, x = {x}"), "dominates or equal", v);
        }
    }
    t
}

fn additive_dominance(scope: &Scope) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(scope.seed);
    let mut t = Tally::default();
    let half = (scope.max_len / 2).max(1);
    for _ in 0..scope.samples {
        let (p1, s1) = descent_pairs(&mut rng, half);
        let (p2, s2) = descent_pairs(&mut rng, half);
        if ![&p1, &s1, &p2, &s2].iter().all(|s| is_graphic(s)) {
            t.skip();
            continue;
        }
        let input = format!("{p1} >= {s1}, {p2} >= {s2}");
        let direct = compare_dominance(&p1.merged(&p2), &s1.merged(&s2));

        // composed: (π1,π2) ⪰ (π1,σ2) ⪰ (σ1,σ2), one merged entry at a time
        let mut composed = true;
        let (mut hi, mut lo) = (p2.clone(), s2.clone());
        for &x in p1.as_slice() {
            hi = hi.with_entry(x);
            lo = lo.with_entry(x);
            composed &= compare_dominance(&hi, &lo).is_at_least();
        }
        let (mut hi, mut lo) = (p1.clone(), s1.clone());
        for &x in s2.as_slice() {
            hi = hi.with_entry(x);
            lo = lo.with_entry(x);
            composed &= compare_dominance(&hi, &lo).is_at_least();
        }
        let chain = compare_dominance(&p1.merged(&p2), &p1.merged(&s2)).is_at_least()
            && compare_dominance(&p1.merged(&s2), &s1.merged(&s2)).is_at_least();

        t.record(
            direct.is_at_least() && composed && chain,
            input,
            "direct and composed dominance",
            format!("direct {direct}, composed {composed}, chain {chain}"),
        );
    }
    t
}

fn random_plain_sequence(rng: &mut ChaCha8Rng, max_len: usize) -> DegreeSequence {
    let n = rng.gen_range(1..=max_len.max(1));
    DegreeSequence::from_degrees((0..n).map(|_| rng.gen_range(0..=10)).collect())
}

fn reduce_commute(scope: &Scope) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(scope.seed);
    let mut t = Tally::default();
    // draws until `samples` instances satisfy the hypothesis
    let max_draws = scope.samples.saturating_mul(20);
    let mut draws = 0;
    while t.instances < scope.samples && draws < max_draws {
        draws += 1;
        let pi = random_plain_sequence(&mut rng, scope.max_len);
        let p = rng.gen_range(0..=pi.len());
        let q = rng.gen_range(0..=pi.len());
        match (reduce_top(&pi, &[p, q]), reduce_top(&pi, &[q, p])) {
            (Ok(a), Ok(b)) => t.record(a == b, format!("{pi}, p = {p}, q = {q}"), &a, &b),
            _ => t.skip(),
        }
    }
    t
}

fn reduce_adjacent_commute(scope: &Scope) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(scope.seed);
    let mut t = Tally::default();
    let max_draws = scope.samples.saturating_mul(20);
    let mut draws = 0;
    while t.instances < scope.samples && draws < max_draws {
        draws += 1;
        let pi = random_plain_sequence(&mut rng, scope.max_len);
        let p = rng.gen_range(0..pi.len());
        let x = rng.gen_range(1..=3);
        let mut forward = vec![p];
        forward.extend(std::iter::repeat_n(p + 1, x));
        let mut backward: Vec<usize> = std::iter::repeat_n(p + 1, x).collect();
        backward.push(p);
        match (reduce_top(&pi, &forward), reduce_top(&pi, &backward)) {
            (Ok(a), Ok(b)) => t.record(a == b, format!("{pi}, p = {p}, x = {x}"), &a, &b),
            _ => t.skip(),
        }
    }
    t
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum LayoffCase {
    A,
    B,
}

fn layoff_commute(scope: &Scope, case: LayoffCase) -> Result<Tally, VerifyError> {
    let mut inputs = Vec::new();
    for len in 1..=scope.max_len {
        inputs.extend(enumerate_graphic_sequences(len)?);
    }
    collect_par(inputs, move |pi| {
        let mut t = Tally::default();
        let d = pi.as_slice();
        for i in 2..=d.len() {
            let (d1, di) = (d[0], d[i - 1]);
            let n_ge_di = count(&pi, di, CountMode::Ge);
            let n_d1 = count(&pi, d1, CountMode::Eq);
            let (holds, second_i, second_1) = match case {
                LayoffCase::A => (
                    d1 as usize + 1 >= n_ge_di && di as usize >= n_d1,
                    di.wrapping_sub(1),
                    d1.wrapping_sub(1),
                ),
                LayoffCase::B => (d1 as usize + 1 < n_ge_di && (di as usize) < n_d1, di, d1),
            };
            if !holds {
                t.skip();
                continue;
            }
            let one_then_i = kw_layoff(&pi, d1).and_then(|s| kw_layoff(&s, second_i));
            let i_then_one = kw_layoff(&pi, di).and_then(|s| kw_layoff(&s, second_1));
            let input = format!("{pi}, i = {i}");
            match (one_then_i, i_then_one) {
                (Ok(a), Ok(b)) => t.record(a == b, input, &a, &b),
                (a, b) => t.record(false, input, "both lay-offs defined", format!("{a:?} / {b:?}")),
            }
        }
        Ok(t)
    })
}

/// Partitions of `sum` into at most `parts` positive parts, largest first.
fn partitions(sum: u32, parts: usize) -> Vec<DegreeSequence> {
    fn rec(rest: u32, cap: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<DegreeSequence>) {
        if rest == 0 {
            out.push(DegreeSequence::from_degrees(prefix.clone()));
            return;
        }
        if parts == 0 {
            return;
        }
        for d in (1..=cap.min(rest)).rev() {
            prefix.push(d);
            rec(rest - d, d, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(sum, sum, parts, &mut Vec::new(), &mut out);
    out
}

fn reachable(from: &DegreeSequence) -> BTreeSet<DegreeSequence> {
    let mut seen = BTreeSet::from([from.clone()]);
    let mut queue = VecDeque::from([from.clone()]);
    while let Some(cur) = queue.pop_front() {
        for next in elementary_successors(&cur) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

fn dominance_characterization(scope: &Scope) -> Tally {
    let mut t = Tally::default();
    let len = scope.max_len;
    for sum in 1..=(2 * len) as u32 {
        let all = partitions(sum, len);
        let reach: HashMap<&DegreeSequence, BTreeSet<DegreeSequence>> =
            all.iter().map(|p| (p, reachable(p))).collect();
        for pi in &all {
            for sigma in &all {
                let v = compare_dominance(&pi.padded(len), &sigma.padded(len));
                let by_steps = reach[pi].contains(sigma);
                let consistent = v.is_at_least() == by_steps && (v == DominanceVerdict::Equal) == (pi == sigma);
                t.record(consistent, format!("{pi} vs {sigma}"), format!("reachable = {by_steps}"), v);
            }
        }
    }
    t
}

fn graphic_oracle(scope: &Scope) -> Tally {
    let mut t = Tally::default();
    for len in 0..=scope.max_len {
        for s in nonincreasing_sequences(len, 7) {
            let (hh, eg) = (is_graphic(&s), erdos_gallai(&s));
            t.record(hh == eg, &s, format!("erdos-gallai {eg}"), format!("havel-hakimi {hh}"));
        }
    }
    t
}

fn realization_roundtrip(scope: &Scope) -> Result<Tally, VerifyError> {
    let mut t = Tally::default();
    for len in 1..=scope.max_len {
        for pi in enumerate_graphic_sequences(len)? {
            let g = hh_realize(&pi)?;
            let back = degree_sequence(&g);
            let handshake = 2 * g.edge_count() as u64 == back.sum();
            t.record(back == pi && handshake, &pi, &pi, &back);
        }
    }
    Ok(t)
}
