//! Havel–Hakimi and Kleitman–Wang elimination: single reduction steps,
//! graphicality, residues, elimination traces under arbitrary orders and the
//! exhaustive enumeration of every reachable elimination sequence.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::sequence::{compare_dominance, DegreeSequence, DominanceVerdict};

/// Default cap on memoized states for [`enumerate_elimination_sequences`].
pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EliminationError {
    #[error("head {head} too large for a sequence of length {len}")]
    HeadTooLarge { head: u32, len: usize },
    #[error("laying off {value} from {sequence} drives an entry below zero")]
    NonGraphicWitness { sequence: DegreeSequence, value: u32 },
    #[error("value {value} does not occur in {sequence}")]
    ValueAbsent { sequence: DegreeSequence, value: u32 },
    #[error("{0} is not graphic")]
    NotGraphic(DegreeSequence),
    #[error("invalid choice at step {step}: {reason}")]
    ChooserInvalid { step: usize, reason: String },
    #[error("enumeration exceeded the budget of {budget} states")]
    BudgetExceeded { budget: usize },
}

/// One Havel–Hakimi reduction: delete `d_1`, decrement the next `d_1` entries, re-sort.
pub fn hh_step(seq: &DegreeSequence) -> Result<DegreeSequence, EliminationError> {
    let head = seq.largest();
    if seq.is_empty() || seq.len() < head as usize + 1 {
        return Err(EliminationError::HeadTooLarge { head, len: seq.len() });
    }
    lay_off_at(seq, 0)
}

/// Remove the entry at `pos` and decrement the `value` largest remaining entries.
fn lay_off_at(seq: &DegreeSequence, pos: usize) -> Result<DegreeSequence, EliminationError> {
    let value = seq.as_slice()[pos];
    let mut rest = seq.as_slice().to_vec();
    rest.remove(pos);
    let k = value as usize;
    if k > rest.len() || (k > 0 && rest[k - 1] == 0) {
        return Err(EliminationError::NonGraphicWitness { sequence: seq.clone(), value });
    }
    for d in &mut rest[..k] {
        *d -= 1;
    }
    Ok(DegreeSequence::from_degrees(rest))
}

/// Kleitman–Wang lay-off of one entry equal to `value`.
///
/// The resulting multiset does not depend on which copy of `value` is removed
/// or on how ties at the reduction boundary are broken.
pub fn kw_layoff(seq: &DegreeSequence, value: u32) -> Result<DegreeSequence, EliminationError> {
    // remove the last copy; any copy gives the same multiset
    let pos = seq.as_slice().partition_point(|&d| d >= value);
    if pos == 0 || seq.as_slice()[pos - 1] != value {
        return Err(EliminationError::ValueAbsent { sequence: seq.clone(), value });
    }
    lay_off_at(seq, pos - 1)
}

/// Havel–Hakimi graphicality test.
pub fn is_graphic(seq: &DegreeSequence) -> bool {
    let mut cur = seq.clone();
    while !cur.is_all_zero() {
        match hh_step(&cur) {
            Ok(next) => cur = next,
            Err(_) => return false,
        }
    }
    true
}

/// Erdős–Gallai graphicality test, kept independent of the Havel–Hakimi path.
pub fn erdos_gallai(seq: &DegreeSequence) -> bool {
    let d: Vec<u64> = seq.as_slice().iter().map(|&x| u64::from(x)).collect();
    if d.iter().sum::<u64>() % 2 != 0 {
        return false;
    }
    let n = d.len();
    let mut left = 0u64;
    for k in 1..=n {
        left += d[k - 1];
        let k64 = k as u64;
        let right: u64 = k64 * (k64 - 1) + d[k..].iter().map(|&x| x.min(k64)).sum::<u64>();
        if left > right {
            return false;
        }
    }
    true
}

/// Laid-off values of an elimination run, sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EliminationSequence(DegreeSequence);

impl EliminationSequence {
    pub fn from_values(values: Vec<u32>) -> Self {
        EliminationSequence(DegreeSequence::from_degrees(values))
    }

    pub fn as_sequence(&self) -> &DegreeSequence {
        &self.0
    }

    pub fn as_slice(&self) -> &[u32] {
        self.0.as_slice()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn zeros(&self) -> usize {
        self.0.zero_count()
    }

    pub fn compare(&self, other: &EliminationSequence) -> DominanceVerdict {
        compare_dominance(&self.0, &other.0)
    }
}

impl fmt::Display for EliminationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationResult {
    pub elim: EliminationSequence,
    pub depth: usize,
    pub residue: usize,
}

fn require_graphic(seq: &DegreeSequence) -> Result<(), EliminationError> {
    if is_graphic(seq) {
        Ok(())
    } else {
        Err(EliminationError::NotGraphic(seq.clone()))
    }
}

/// `E(π)` together with depth and residue.
pub fn hh_eliminate(seq: &DegreeSequence) -> Result<EliminationResult, EliminationError> {
    let mut values = Vec::with_capacity(seq.len());
    let mut cur = seq.clone();
    while !cur.is_all_zero() {
        values.push(cur.largest());
        cur = hh_step(&cur).map_err(|_| EliminationError::NotGraphic(seq.clone()))?;
    }
    let depth = values.len();
    values.resize(seq.len(), 0);
    Ok(EliminationResult {
        elim: EliminationSequence(DegreeSequence::from_degrees(values)),
        depth,
        residue: seq.len() - depth,
    })
}

pub fn residue(seq: &DegreeSequence) -> Result<usize, EliminationError> {
    hh_eliminate(seq).map(|r| r.residue)
}

/// Picks the value to lay off next.
pub trait Chooser {
    /// `None` means the chooser has nothing left to offer.
    fn choose(&mut self, current: &DegreeSequence) -> Option<u32>;

    /// Values the chooser still wanted to lay off once the run ended.
    fn leftover(&self) -> usize {
        0
    }
}

/// Always the current maximum, i.e. the Havel–Hakimi order.
#[derive(Debug, Clone, Copy, Default)]
pub struct MaxFirst;

impl Chooser for MaxFirst {
    fn choose(&mut self, current: &DegreeSequence) -> Option<u32> {
        (!current.is_empty()).then(|| current.largest())
    }
}

/// Smallest positive entry; zeros once nothing positive is left.
#[derive(Debug, Clone, Copy, Default)]
pub struct MinPositive;

impl Chooser for MinPositive {
    fn choose(&mut self, current: &DegreeSequence) -> Option<u32> {
        let s = current.as_slice();
        s.iter().rev().copied().find(|&d| d > 0).or_else(|| s.last().copied())
    }
}

/// A fixed list of values laid off in order.
#[derive(Debug, Clone)]
pub struct ExplicitValues {
    values: Vec<u32>,
    next: usize,
}

impl ExplicitValues {
    pub fn new(values: Vec<u32>) -> Self {
        ExplicitValues { values, next: 0 }
    }
}

impl Chooser for ExplicitValues {
    fn choose(&mut self, _current: &DegreeSequence) -> Option<u32> {
        let v = self.values.get(self.next).copied();
        self.next += 1;
        v
    }

    fn leftover(&self) -> usize {
        self.values.len().saturating_sub(self.next)
    }
}

impl<F: FnMut(&DegreeSequence) -> Option<u32>> Chooser for F {
    fn choose(&mut self, current: &DegreeSequence) -> Option<u32> {
        self(current)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub laid_off: u32,
    pub result: DegreeSequence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationTrace {
    pub start: DegreeSequence,
    pub steps: Vec<TraceStep>,
}

impl EliminationTrace {
    pub fn elimination_sequence(&self) -> EliminationSequence {
        EliminationSequence::from_values(self.steps.iter().map(|s| s.laid_off).collect())
    }

    /// Laid-off values in the order they were chosen.
    pub fn laid_off(&self) -> Vec<u32> {
        self.steps.iter().map(|s| s.laid_off).collect()
    }
}

/// Run a full elimination of a graphic sequence, asking `chooser` at each step.
pub fn eliminate_with_order<C: Chooser + ?Sized>(
    seq: &DegreeSequence,
    chooser: &mut C,
) -> Result<EliminationTrace, EliminationError> {
    require_graphic(seq)?;
    let mut steps = Vec::with_capacity(seq.len());
    let mut cur = seq.clone();
    while !cur.is_empty() {
        let step = steps.len() + 1;
        let value = chooser.choose(&cur).ok_or_else(|| EliminationError::ChooserInvalid {
            step,
            reason: format!("no value offered for {cur}"),
        })?;
        if !cur.contains(value) {
            return Err(EliminationError::ChooserInvalid {
                step,
                reason: format!("{value} does not occur in {cur}"),
            });
        }
        cur = kw_layoff(&cur, value)?;
        steps.push(TraceStep { laid_off: value, result: cur.clone() });
    }
    if chooser.leftover() > 0 {
        return Err(EliminationError::ChooserInvalid {
            step: steps.len() + 1,
            reason: format!("{} values left after the sequence was consumed", chooser.leftover()),
        });
    }
    Ok(EliminationTrace { start: seq.clone(), steps })
}

type Completions = Arc<BTreeSet<Vec<u32>>>;

/// Memoized DFS over lay-off choices.
///
/// States are positive parts of the current sequence; zero deletions are deferred
/// to the end since they never touch other entries. Each state maps to the set of
/// multisets of values laid off from it until exhaustion, sorted non-increasing.
#[derive(Debug)]
pub struct EliminationEnumerator {
    budget: usize,
    memo: HashMap<DegreeSequence, Completions>,
}

impl EliminationEnumerator {
    pub fn new(budget: usize) -> Self {
        EliminationEnumerator { budget, memo: HashMap::new() }
    }

    /// Distinct states memoized so far.
    pub fn states(&self) -> usize {
        self.memo.len()
    }

    pub fn enumerate(
        &mut self,
        seq: &DegreeSequence,
    ) -> Result<BTreeSet<EliminationSequence>, EliminationError> {
        require_graphic(seq)?;
        let zeros = seq.zero_count();
        let completions = self.completions(&seq.positive_part())?;
        Ok(completions
            .iter()
            .map(|c| {
                let mut values = c.clone();
                values.resize(values.len() + zeros, 0);
                EliminationSequence(DegreeSequence::from_degrees(values))
            })
            .collect())
    }

    fn completions(&mut self, state: &DegreeSequence) -> Result<Completions, EliminationError> {
        if let Some(hit) = self.memo.get(state) {
            return Ok(Arc::clone(hit));
        }
        let mut out = BTreeSet::new();
        if state.is_empty() {
            out.insert(Vec::new());
        } else {
            for value in state.distinct_values() {
                let next = kw_layoff(state, value)?;
                let zeros = next.zero_count();
                let sub = self.completions(&next.positive_part())?;
                for tail in sub.iter() {
                    let mut values = Vec::with_capacity(tail.len() + zeros + 1);
                    values.push(value);
                    values.extend_from_slice(tail);
                    values.resize(values.len() + zeros, 0);
                    values.sort_unstable_by(|a, b| b.cmp(a));
                    out.insert(values);
                }
            }
        }
        if self.memo.len() >= self.budget {
            return Err(EliminationError::BudgetExceeded { budget: self.budget });
        }
        let out = Arc::new(out);
        self.memo.insert(state.clone(), Arc::clone(&out));
        Ok(out)
    }
}

/// Every elimination sequence reachable by some lay-off order.
pub fn enumerate_elimination_sequences(
    seq: &DegreeSequence,
    budget: usize,
) -> Result<BTreeSet<EliminationSequence>, EliminationError> {
    EliminationEnumerator::new(budget).enumerate(seq)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// `E(π)` fails to dominate this sequence.
    NotDominated { sequence: EliminationSequence, verdict: DominanceVerdict },
    /// This sequence ends in more zeros than the residue.
    ExcessZeros { sequence: EliminationSequence, zeros: usize, residue: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominanceReport {
    pub ok: bool,
    pub hh: EliminationSequence,
    pub residue: usize,
    pub sequences: usize,
    pub witnesses: Vec<Witness>,
}

/// Check that `E(π)` dominates every enumerated elimination sequence and that no
/// sequence leaves more zeros than the residue.
pub fn verify_hh_dominates(
    seq: &DegreeSequence,
    budget: usize,
) -> Result<DominanceReport, EliminationError> {
    let hh = hh_eliminate(seq)?;
    let all = enumerate_elimination_sequences(seq, budget)?;
    Ok(dominance_report(hh, &all))
}

pub(crate) fn dominance_report(
    hh: EliminationResult,
    all: &BTreeSet<EliminationSequence>,
) -> DominanceReport {
    let mut witnesses = Vec::new();
    for other in all {
        let verdict = hh.elim.compare(other);
        if !verdict.is_at_least() {
            witnesses.push(Witness::NotDominated { sequence: other.clone(), verdict });
        }
        if other.zeros() > hh.residue {
            witnesses.push(Witness::ExcessZeros {
                sequence: other.clone(),
                zeros: other.zeros(),
                residue: hh.residue,
            });
        }
    }
    DominanceReport {
        ok: witnesses.is_empty(),
        hh: hh.elim,
        residue: hh.residue,
        sequences: all.len(),
        witnesses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[u32]) -> DegreeSequence {
        DegreeSequence::from_degrees(v.to_vec())
    }

    fn elim(v: &[u32]) -> EliminationSequence {
        EliminationSequence::from_values(v.to_vec())
    }

    const WORKED: [u32; 6] = [4, 3, 3, 3, 2, 1];

    #[test]
    fn hh_steps() {
        assert_eq!(hh_step(&seq(&WORKED)).unwrap(), seq(&[2, 2, 2, 1, 1]));
        assert_eq!(hh_step(&seq(&[0, 0, 0])).unwrap(), seq(&[0, 0]));
        assert_eq!(
            hh_step(&seq(&[3, 1, 1])),
            Err(EliminationError::HeadTooLarge { head: 3, len: 3 })
        );
        assert!(matches!(hh_step(&seq(&[2, 1, 0])), Err(EliminationError::NonGraphicWitness { .. })));
        assert!(hh_step(&DegreeSequence::empty()).is_err());
    }

    #[test]
    fn graphicality() {
        assert!(is_graphic(&seq(&WORKED)));
        assert!(!is_graphic(&seq(&[3, 1, 1])));
        assert!(!erdos_gallai(&seq(&[3, 1, 1])));
        assert!(is_graphic(&seq(&[0, 0, 0, 0])));
        assert!(is_graphic(&DegreeSequence::empty()));
        assert!(!is_graphic(&seq(&[1])));
        assert!(!is_graphic(&seq(&[2, 2, 0])));
        assert!(erdos_gallai(&seq(&WORKED)));
    }

    #[test]
    fn layoffs() {
        assert_eq!(kw_layoff(&seq(&WORKED), 3).unwrap(), seq(&[3, 2, 2, 2, 1]));
        assert_eq!(kw_layoff(&seq(&WORKED), 4).unwrap(), seq(&[2, 2, 2, 1, 1]));
        assert_eq!(kw_layoff(&seq(&[2, 2, 1, 1]), 1).unwrap(), seq(&[2, 1, 1]));
        assert_eq!(kw_layoff(&seq(&[1, 0]), 0).unwrap(), seq(&[1]));
        assert!(matches!(kw_layoff(&seq(&WORKED), 5), Err(EliminationError::ValueAbsent { .. })));
        assert!(matches!(
            kw_layoff(&seq(&[3, 1, 1]), 3),
            Err(EliminationError::NonGraphicWitness { .. })
        ));
        assert!(matches!(
            kw_layoff(&seq(&[2, 1, 0]), 2),
            Err(EliminationError::NonGraphicWitness { .. })
        ));
    }

    #[test]
    fn hh_elimination_results() {
        let r = hh_eliminate(&seq(&WORKED)).unwrap();
        assert_eq!(r.elim, elim(&[4, 2, 1, 1, 0, 0]));
        assert_eq!((r.depth, r.residue), (4, 2));
        assert_eq!(r.elim.as_sequence().sum(), 8);

        let r = hh_eliminate(&seq(&[0, 0, 0])).unwrap();
        assert_eq!((r.elim.clone(), r.depth, r.residue), (elim(&[0, 0, 0]), 0, 3));

        let r = hh_eliminate(&seq(&[2, 2, 2, 2, 2])).unwrap();
        assert_eq!((r.elim.clone(), r.depth, r.residue), (elim(&[2, 2, 1, 0, 0]), 3, 2));

        assert!(matches!(hh_eliminate(&seq(&[3, 1, 1])), Err(EliminationError::NotGraphic(_))));
    }

    #[test]
    fn residues() {
        assert_eq!(residue(&seq(&WORKED)), Ok(2));
        assert_eq!(residue(&seq(&[3, 1, 1, 1])), Ok(3));
        assert_eq!(residue(&seq(&[0, 0, 0, 0, 0])), Ok(5));
        // appending zeros adds to the residue
        assert_eq!(residue(&seq(&[4, 3, 3, 3, 2, 1, 0, 0])), Ok(4));
    }

    #[test]
    fn ordered_elimination() {
        let p = seq(&WORKED);
        let t = eliminate_with_order(&p, &mut ExplicitValues::new(vec![4, 1, 1, 1, 1, 0])).unwrap();
        assert_eq!(t.elimination_sequence(), elim(&[4, 1, 1, 1, 1, 0]));
        assert_eq!(t.steps.len(), 6);
        assert!(t.steps.last().unwrap().result.is_empty());

        let t = eliminate_with_order(&p, &mut ExplicitValues::new(vec![3, 3, 1, 1, 0, 0])).unwrap();
        assert_eq!(t.elimination_sequence(), elim(&[3, 3, 1, 1, 0, 0]));
        assert_eq!(t.steps[0].result, seq(&[3, 2, 2, 2, 1]));
        assert_eq!(t.steps[1].result, seq(&[1, 1, 1, 1]));

        let t = eliminate_with_order(&p, &mut MaxFirst).unwrap();
        assert_eq!(t.elimination_sequence(), hh_eliminate(&p).unwrap().elim);
        assert_eq!(t.laid_off(), vec![4, 2, 1, 1, 0, 0]);

        let t = eliminate_with_order(&p, &mut MinPositive).unwrap();
        assert_eq!(t.steps[0].laid_off, 1);
    }

    #[test]
    fn ordered_elimination_errors() {
        let p = seq(&WORKED);
        assert!(matches!(
            eliminate_with_order(&seq(&[3, 1, 1]), &mut MaxFirst),
            Err(EliminationError::NotGraphic(_))
        ));
        assert!(matches!(
            eliminate_with_order(&p, &mut ExplicitValues::new(vec![2, 4])),
            Err(EliminationError::ChooserInvalid { step: 2, .. })
        ));
        assert!(matches!(
            eliminate_with_order(&p, &mut ExplicitValues::new(vec![4, 2, 1, 1])),
            Err(EliminationError::ChooserInvalid { step: 5, .. })
        ));
        assert!(matches!(
            eliminate_with_order(&p, &mut ExplicitValues::new(vec![4, 2, 1, 1, 0, 0, 0])),
            Err(EliminationError::ChooserInvalid { .. })
        ));
        let mut closure = |s: &DegreeSequence| Some(s.largest());
        assert!(eliminate_with_order(&p, &mut closure).is_ok());
    }

    #[test]
    fn enumeration() {
        let set = enumerate_elimination_sequences(&seq(&[1, 1]), DEFAULT_BUDGET).unwrap();
        assert_eq!(set, BTreeSet::from([elim(&[1, 0])]));

        let set = enumerate_elimination_sequences(&seq(&[2, 2, 2, 2, 2]), DEFAULT_BUDGET).unwrap();
        assert_eq!(set, BTreeSet::from([elim(&[2, 2, 1, 0, 0]), elim(&[2, 1, 1, 1, 0])]));

        let set = enumerate_elimination_sequences(&seq(&WORKED), DEFAULT_BUDGET).unwrap();
        for e in [[4, 2, 1, 1, 0, 0], [4, 1, 1, 1, 1, 0], [3, 3, 1, 1, 0, 0]] {
            assert!(set.contains(&elim(&e)), "missing {e:?}");
        }
        assert!(set.iter().all(|e| e.len() == 6 && e.as_sequence().sum() == 8));

        assert_eq!(
            enumerate_elimination_sequences(&seq(&[0, 0]), DEFAULT_BUDGET).unwrap(),
            BTreeSet::from([elim(&[0, 0])])
        );
    }

    #[test]
    fn enumeration_errors() {
        assert!(matches!(
            enumerate_elimination_sequences(&seq(&[3, 1, 1]), DEFAULT_BUDGET),
            Err(EliminationError::NotGraphic(_))
        ));
        assert_eq!(
            enumerate_elimination_sequences(&seq(&WORKED), 3),
            Err(EliminationError::BudgetExceeded { budget: 3 })
        );
    }

    #[test]
    fn hh_dominance_reports() {
        for v in [&WORKED[..], &[0, 0], &[2, 2, 2, 2, 2]] {
            let report = verify_hh_dominates(&seq(v), DEFAULT_BUDGET).unwrap();
            assert!(report.ok, "{v:?}: {:?}", report.witnesses);
            assert!(report.witnesses.is_empty());
        }
    }

    #[test]
    fn report_flags_violations() {
        let hh = EliminationResult { elim: elim(&[3, 1, 0, 0]), depth: 2, residue: 2 };
        let all = BTreeSet::from([elim(&[2, 2, 0, 0]), elim(&[4, 0, 0, 0])]);
        let report = dominance_report(hh, &all);
        assert!(!report.ok);
        assert_eq!(report.witnesses.len(), 2);
        assert!(matches!(report.witnesses[0], Witness::NotDominated { .. }));
        assert!(matches!(report.witnesses[1], Witness::ExcessZeros { zeros: 3, .. }));
    }
}
