use serde::{Deserialize, Serialize};

/// One violated identity, with the basis data that witnesses it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub axiom: String,
    pub witness: String,
}

/// Outcome of an exhaustive axiom check.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub failures: Vec<Failure>,
}

impl ValidationReport {
    pub fn new() -> Self {
        ValidationReport {
            ok: true,
            failures: Vec::new(),
        }
    }

    pub fn fail(&mut self, axiom: impl Into<String>, witness: impl Into<String>) {
        self.ok = false;
        self.failures.push(Failure {
            axiom: axiom.into(),
            witness: witness.into(),
        });
    }

    /// Records a failure unless `holds`.
    pub fn require(&mut self, holds: bool, axiom: &str, witness: impl FnOnce() -> String) {
        if !holds {
            self.fail(axiom, witness());
        }
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.ok &= other.ok;
        self.failures.extend(other.failures);
    }

    pub fn has_failure(&self, axiom: &str) -> bool {
        self.failures.iter().any(|f| f.axiom == axiom)
    }
}
