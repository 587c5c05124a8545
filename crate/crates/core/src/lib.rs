//! Degree-sequence analysis: Havel–Hakimi and Kleitman–Wang elimination,
//! dominance of elimination sequences, residues and realizations, plus a
//! harness that checks the related lemmas exhaustively on small inputs.

pub mod cli;
pub mod elimination;
pub mod realization;
pub mod sequence;
pub mod verify;

pub use elimination::{
    enumerate_elimination_sequences, eliminate_with_order, erdos_gallai, hh_eliminate, hh_step,
    is_graphic, kw_layoff, residue, verify_hh_dominates, EliminationError, EliminationResult,
    EliminationSequence, EliminationTrace,
};
pub use realization::{
    degree_sequence, enumerate_realizations, hh_realize, independence_number, RealizationError,
    SimpleGraph,
};
pub use sequence::{
    apply_step, compare_dominance, conjugate, count, elementary_successors, ferrers_render,
    normalize, reduce_top, CountMode, DegreeSequence, DominanceVerdict, SequenceError, StepSpec,
};
