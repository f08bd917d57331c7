//! Executable checks of the structural results at desk scale, collected
//! into serializable reports.

mod golden;
mod random;
mod rank_checks;
mod relations;

#[cfg(test)]
mod tests;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::foundations::FieldSpec;
use crate::repn::TensorMap;

pub use golden::{check_associativity, check_combinatorics, golden_examples, vanishing_combination};
pub use random::{random_jelly_diagram, random_jelly_morphism, DEFAULT_SEED};
pub use rank_checks::{check_faithfulness, check_fullness, check_phi_kernel, fullness_spanning_set};
pub use relations::{check_relations, mutated_relation, relation_check};

/// One named check and, on failure, a serialized counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub description: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(description: impl Into<String>) -> Self {
        Check {
            description: description.into(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(description: impl Into<String>, witness: impl Into<String>) -> Self {
        Check {
            description: description.into(),
            passed: false,
            witness: Some(witness.into()),
        }
    }

    /// Pass when `ok`, otherwise fail with the lazily built witness.
    pub fn expect(description: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Check::pass(description)
        } else {
            Check::fail(description, witness())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    pub field: FieldSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(suite: &str, n: Option<usize>, field: FieldSpec) -> Self {
        SuiteReport {
            suite: suite.into(),
            n,
            k: None,
            l: None,
            field,
            seed: None,
            checks: Vec::new(),
        }
    }

    pub fn with_type(mut self, k: usize, l: Option<usize>) -> Self {
        self.k = Some(k);
        self.l = l;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "suite {}", self.suite)?;
        if let Some(n) = self.n {
            write!(f, " n={n}")?;
        }
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        if let Some(l) = self.l {
            write!(f, " l={l}")?;
        }
        write!(f, " field={}", self.field)?;
        if let Some(s) = self.seed {
            write!(f, " seed={s}")?;
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        writeln!(f, ": {passed}/{} passed", self.checks.len())?;
        for c in &self.checks {
            writeln!(f, "  [{}] {}", if c.passed { "pass" } else { "FAIL" }, c.description)?;
            if let Some(w) = &c.witness {
                for line in w.lines() {
                    writeln!(f, "        {line}")?;
                }
            }
        }
        Ok(())
    }
}

/// First entry where two matrices differ, as witness text.
pub(crate) fn matrix_witness(left: &TensorMap, right: &TensorMap) -> String {
    if (left.rows(), left.cols()) != (right.rows(), right.cols()) {
        return format!(
            "shapes differ: {}x{} vs {}x{}",
            left.rows(),
            left.cols(),
            right.rows(),
            right.cols()
        );
    }
    match left.sub(right).map(|d| d.entries().into_iter().next()) {
        Ok(Some((r, c, _))) => format!("entry (row {r}, col {c}): {} vs {}", left.get(r, c), right.get(r, c)),
        Ok(None) => "matrices agree".into(),
        Err(e) => e.to_string(),
    }
}
