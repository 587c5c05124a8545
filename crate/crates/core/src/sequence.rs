//! Degree sequences as values: counting, conjugation, the dominance order,
//! `(i,j)`-steps and top-`p` reductions.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("negative entry {value} at position {position}")]
    NegativeEntry { position: usize, value: i64 },
    #[error("invalid step ({i},{j}): {reason}")]
    InvalidStep { i: usize, j: usize, reason: String },
    #[error("reducing the {p} largest entries of {sequence} drives an entry below zero")]
    NegativeResult { p: usize, sequence: DegreeSequence },
    #[error("cannot reduce {p} entries of a sequence of length {len}")]
    ReductionTooLong { p: usize, len: usize },
}

/// A non-increasing list of non-negative degrees.
///
/// The zero-length sequence is a valid value, as is any all-zero sequence.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", from = "Vec<u32>")]
pub struct DegreeSequence(Vec<u32>);

impl DegreeSequence {
    /// Sorts `values` into non-increasing order.
    pub fn from_degrees(mut values: Vec<u32>) -> Self {
        values.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(values)
    }

    pub fn empty() -> Self {
        DegreeSequence(Vec::new())
    }

    /// The all-zero sequence of length `n`.
    pub fn zeros(n: usize) -> Self {
        DegreeSequence(vec![0; n])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest entry, zero for the zero-length sequence.
    pub fn largest(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&d| u64::from(d)).sum()
    }

    /// `true` when every entry is zero (including the zero-length case).
    pub fn is_all_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    pub fn zero_count(&self) -> usize {
        self.0.iter().rev().take_while(|&&d| d == 0).count()
    }

    /// The sequence with every zero entry removed.
    pub fn positive_part(&self) -> DegreeSequence {
        DegreeSequence(self.0.iter().copied().filter(|&d| d > 0).collect())
    }

    pub fn contains(&self, value: u32) -> bool {
        self.0.binary_search_by(|probe| value.cmp(probe)).is_ok()
    }

    /// Distinct entries, largest first.
    pub fn distinct_values(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.0.clone();
        out.dedup();
        out
    }

    /// Merge with another sequence, re-sorting.
    pub fn merged(&self, other: &DegreeSequence) -> DegreeSequence {
        let mut values = self.0.clone();
        values.extend_from_slice(&other.0);
        DegreeSequence::from_degrees(values)
    }

    /// Zero-pad up to length `len`.
    pub fn padded(&self, len: usize) -> DegreeSequence {
        let mut values = self.0.clone();
        if values.len() < len {
            values.resize(len, 0);
        }
        DegreeSequence(values)
    }

    /// Insert one entry, keeping the order.
    pub fn with_entry(&self, value: u32) -> DegreeSequence {
        let mut values = self.0.clone();
        let at = values.partition_point(|&d| d >= value);
        values.insert(at, value);
        DegreeSequence(values)
    }
}

impl From<Vec<u32>> for DegreeSequence {
    fn from(values: Vec<u32>) -> Self {
        DegreeSequence::from_degrees(values)
    }
}

impl From<DegreeSequence> for Vec<u32> {
    fn from(seq: DegreeSequence) -> Self {
        seq.0
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, d) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Validate raw integers and sort them non-increasing.
pub fn normalize(raw: &[i64]) -> Result<DegreeSequence, SequenceError> {
    let mut values = Vec::with_capacity(raw.len());
    for (position, &value) in raw.iter().enumerate() {
        if value < 0 {
            return Err(SequenceError::NegativeEntry { position, value });
        }
        let value = u32::try_from(value).map_err(|_| SequenceError::NegativeEntry { position, value })?;
        values.push(value);
    }
    Ok(DegreeSequence::from_degrees(values))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMode {
    /// `n_k`
    Eq,
    /// `n_{>=k}`
    Ge,
    /// `n_{>k}`
    Gt,
}

pub fn count(seq: &DegreeSequence, k: u32, mode: CountMode) -> usize {
    let s = seq.as_slice();
    // entries are non-increasing, so each count is a prefix length
    let ge = s.partition_point(|&d| d >= k);
    let gt = s.partition_point(|&d| d > k);
    match mode {
        CountMode::Eq => ge - gt,
        CountMode::Ge => ge,
        CountMode::Gt => gt,
    }
}

/// Column counts of the Ferrers diagram. Has length `max(seq)`.
pub fn conjugate(seq: &DegreeSequence) -> DegreeSequence {
    let s = seq.as_slice();
    let mut out = Vec::with_capacity(seq.largest() as usize);
    let mut rows = s.len();
    for level in 1..=seq.largest() {
        while rows > 0 && s[rows - 1] < level {
            rows -= 1;
        }
        out.push(rows as u32);
    }
    DegreeSequence(out)
}

/// Outcome of comparing two sequences in the dominance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DominanceVerdict {
    Dominates,
    DominatedBy,
    Equal,
    Incomparable,
    SumMismatch,
}

impl DominanceVerdict {
    /// `true` for `Dominates` and `Equal`, i.e. the first argument `⪰` the second.
    pub fn is_at_least(self) -> bool {
        matches!(self, DominanceVerdict::Dominates | DominanceVerdict::Equal)
    }

    pub fn flipped(self) -> Self {
        match self {
            DominanceVerdict::Dominates => DominanceVerdict::DominatedBy,
            DominanceVerdict::DominatedBy => DominanceVerdict::Dominates,
            other => other,
        }
    }
}

impl fmt::Display for DominanceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DominanceVerdict::Dominates => "dominates",
            DominanceVerdict::DominatedBy => "dominated-by",
            DominanceVerdict::Equal => "equal",
            DominanceVerdict::Incomparable => "incomparable",
            DominanceVerdict::SumMismatch => "sum-mismatch",
        };
        f.write_str(s)
    }
}

/// Compare two sequences under dominance. The shorter one is zero-padded.
pub fn compare_dominance(a: &DegreeSequence, b: &DegreeSequence) -> DominanceVerdict {
    if a.sum() != b.sum() {
        return DominanceVerdict::SumMismatch;
    }
    let len = a.len().max(b.len());
    let at = |s: &[u32], k: usize| u64::from(s.get(k).copied().unwrap_or(0));
    let (mut pa, mut pb) = (0u64, 0u64);
    let (mut above, mut below) = (false, false);
    for k in 0..len {
        pa += at(a.as_slice(), k);
        pb += at(b.as_slice(), k);
        match pa.cmp(&pb) {
            Ordering::Greater => above = true,
            Ordering::Less => below = true,
            Ordering::Equal => {}
        }
    }
    match (above, below) {
        (false, false) => DominanceVerdict::Equal,
        (true, false) => DominanceVerdict::Dominates,
        (false, true) => DominanceVerdict::DominatedBy,
        (true, true) => DominanceVerdict::Incomparable,
    }
}

/// An `(i,j)`-step, 1-based. `j == n + 1` addresses the virtual trailing zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepSpec {
    pub i: usize,
    pub j: usize,
    pub elementary: bool,
    pub inverse: bool,
}

impl StepSpec {
    pub fn forward(i: usize, j: usize) -> Self {
        StepSpec { i, j, elementary: false, inverse: false }
    }

    pub fn elementary(i: usize, j: usize) -> Self {
        StepSpec { i, j, elementary: true, inverse: false }
    }

    pub fn inverse(i: usize, j: usize) -> Self {
        StepSpec { i, j, elementary: false, inverse: true }
    }
}

fn invalid(step: &StepSpec, reason: impl Into<String>) -> SequenceError {
    SequenceError::InvalidStep { i: step.i, j: step.j, reason: reason.into() }
}

/// Check the forward preconditions of `step` against `s`. The `inverse` flag is ignored.
fn check_forward(s: &[u32], step: &StepSpec) -> Result<(), SequenceError> {
    let n = s.len();
    let (i, j) = (step.i, step.j);
    if !(1 <= i && i < j && j <= n + 1) {
        return Err(invalid(step, format!("need 1 <= i < j <= {}", n + 1)));
    }
    let at = |p: usize| if p <= n { s[p - 1] } else { 0 };
    let (di, dj) = (at(i), at(j));
    if di < dj + 2 {
        return Err(invalid(step, format!("d_i = {di} < d_j + 2 = {}", dj + 2)));
    }
    if i < n && s[i] == di {
        return Err(invalid(step, "i is not the last position holding d_i"));
    }
    if j > 1 && at(j - 1) == dj {
        return Err(invalid(step, "j is not the first position holding d_j"));
    }
    if step.elementary {
        let first_low = (1..=n + 1).find(|&p| at(p) + 2 <= di).unwrap_or(n + 1);
        if first_low != j {
            return Err(invalid(step, format!("not elementary, expected j = {first_low}")));
        }
    }
    Ok(())
}

/// Apply an `(i,j)`-step (or its inverse).
///
/// Forward: decrease `d_i`, increase `d_j`; the result is dominated by the input.
/// Inverse: increase `d_i`, decrease `d_j`; the result dominates the input and the
/// corresponding forward step (with the same flags) maps it back.
pub fn apply_step(seq: &DegreeSequence, step: &StepSpec) -> Result<DegreeSequence, SequenceError> {
    let s = seq.as_slice();
    let n = s.len();
    if !step.inverse {
        check_forward(s, step)?;
        let mut values = s.to_vec();
        values[step.i - 1] -= 1;
        if step.j == n + 1 {
            values.push(1);
        } else {
            values[step.j - 1] += 1;
        }
        return Ok(DegreeSequence::from_degrees(values));
    }

    let (i, j) = (step.i, step.j);
    if !(1 <= i && i < j && j <= n) {
        return Err(invalid(step, format!("inverse needs 1 <= i < j <= {n}")));
    }
    if i > 1 && s[i - 2] == s[i - 1] {
        return Err(invalid(step, "i is not the first position holding d_i"));
    }
    if j < n && s[j] == s[j - 1] {
        return Err(invalid(step, "j is not the last position holding d_j"));
    }
    if s[j - 1] == 0 {
        return Err(invalid(step, "d_j is zero"));
    }
    let mut values = s.to_vec();
    values[i - 1] += 1;
    values[j - 1] -= 1;
    // both changes preserve order given the block-boundary checks
    check_forward(&values, &StepSpec { inverse: false, ..*step })?;
    Ok(DegreeSequence(values))
}

/// Every sequence reachable from `seq` by exactly one elementary step.
pub fn elementary_successors(seq: &DegreeSequence) -> BTreeSet<DegreeSequence> {
    let s = seq.as_slice();
    let n = s.len();
    let mut out = BTreeSet::new();
    let mut i = 0;
    while i < n {
        let value = s[i];
        let mut last = i;
        while last + 1 < n && s[last + 1] == value {
            last += 1;
        }
        if value >= 2 {
            let j = s.partition_point(|&d| d + 2 > value) + 1;
            let step = StepSpec::elementary(last + 1, j);
            if let Ok(next) = apply_step(seq, &step) {
                out.insert(next);
            }
        }
        i = last + 1;
    }
    out
}

/// `π^{p_1,...,p_l}`: for each `p` in order, reduce the `p` largest entries by one.
pub fn reduce_top(seq: &DegreeSequence, schedule: &[usize]) -> Result<DegreeSequence, SequenceError> {
    let mut values = seq.as_slice().to_vec();
    for &p in schedule {
        if p > values.len() {
            return Err(SequenceError::ReductionTooLong { p, len: values.len() });
        }
        if p > 0 && values[p - 1] == 0 {
            return Err(SequenceError::NegativeResult { p, sequence: DegreeSequence(values) });
        }
        for d in &mut values[..p] {
            *d -= 1;
        }
        values.sort_unstable_by(|a, b| b.cmp(a));
    }
    Ok(DegreeSequence(values))
}

/// Row `i` holds `d_i` dots; rows are newline-terminated.
pub fn ferrers_render(seq: &DegreeSequence) -> String {
    let mut out = String::new();
    for &d in seq.as_slice() {
        for _ in 0..d {
            out.push('●');
        }
        out.push('\n');
    }
    out
}
