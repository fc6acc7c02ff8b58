//! Check reports shared by the axiom checkers and the derived-layer checks.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    /// Name of the diagram or identity that failed.
    pub diagram: String,
    /// Where it failed: objects, degrees, indices.
    pub at: Vec<String>,
    pub residual: String,
}

/// Outcome of a check. Empty `failures` means the check passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub construct: String,
    pub notes: Vec<String>,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new(construct: impl Into<String>) -> Self {
        Report {
            construct: construct.into(),
            notes: Vec::new(),
            failures: Vec::new(),
        }
    }

    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn fail(
        &mut self,
        diagram: impl Into<String>,
        at: Vec<String>,
        residual: impl Into<String>,
    ) {
        self.failures.push(Failure {
            diagram: diagram.into(),
            at,
            residual: residual.into(),
        });
    }

    /// Appends the failures and notes of `other`.
    pub fn absorb(&mut self, other: Report) {
        self.notes.extend(other.notes);
        self.failures.extend(other.failures);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "check: {}", self.construct)?;
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        if self.failures.is_empty() {
            return writeln!(f, "result: pass");
        }
        writeln!(f, "result: fail ({} failures)", self.failures.len())?;
        for fl in &self.failures {
            writeln!(f, "failure: {} at ({})", fl.diagram, fl.at.join(", "))?;
            for line in fl.residual.lines() {
                writeln!(f, "  {line}")?;
            }
        }
        Ok(())
    }
}
