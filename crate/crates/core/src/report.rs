//! Validation verdicts with counterexample witnesses.

use crate::scalar::Scalar;

/// One counterexample: the identity that failed, the basis tuple where it
/// first failed, and the exact left-minus-right residual vector there.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness<S> {
    pub tag: String,
    pub index: Vec<usize>,
    pub residual: Vec<S>,
}

/// Outcome of checking a family of identities on all basis tuples. Each
/// identity tag contributes at most one witness (its lexicographically
/// first failing tuple); `failures` counts every failing tuple across all
/// tags, so `passed` holds exactly when `witnesses` is empty.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport<S> {
    pub passed: bool,
    pub witnesses: Vec<Witness<S>>,
    pub failures: usize,
}

impl<S: Scalar> ValidationReport<S> {
    /// A report with nothing to complain about.
    pub fn passing() -> Self {
        ValidationReport {
            passed: true,
            witnesses: Vec::new(),
            failures: 0,
        }
    }

    pub fn pass(&self) -> bool {
        self.passed
    }
}

/// Accumulates failures in enumeration order, keeping the first witness
/// seen for each tag.
#[derive(Debug)]
pub(crate) struct WitnessCollector<S> {
    witnesses: Vec<Witness<S>>,
    failures: usize,
}

impl<S: Scalar> WitnessCollector<S> {
    pub fn new() -> Self {
        WitnessCollector {
            witnesses: Vec::new(),
            failures: 0,
        }
    }

    /// Record a failing tuple; residuals must be nonzero by the caller's
    /// check, so every call counts toward `failures`.
    pub fn record(&mut self, tag: &str, index: Vec<usize>, residual: Vec<S>) {
        self.failures += 1;
        if !self.witnesses.iter().any(|w| w.tag == tag) {
            self.witnesses.push(Witness {
                tag: tag.to_string(),
                index,
                residual,
            });
        }
    }

    pub fn finish(self) -> ValidationReport<S> {
        ValidationReport {
            passed: self.witnesses.is_empty(),
            witnesses: self.witnesses,
            failures: self.failures,
        }
    }
}

/// Verdict of a morphism check: the identity report plus whether the map
/// is invertible (making it an isomorphism when the report passes).
#[derive(Debug, Clone, PartialEq)]
pub struct MorphismReport<S> {
    pub report: ValidationReport<S>,
    pub isomorphism: bool,
}
