//! Structured invariant violations. Violations are data, not failures:
//! corrupted instances produce reports that name a witnessing tuple.

/// One violated invariant with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Which component the rule belongs to ("space", "group", "action", "groupoid").
    pub scope: &'static str,
    /// Stable rule identifier.
    pub rule: &'static str,
    /// Human-readable witnessing tuple.
    pub witness: String,
}

impl Violation {
    pub fn new(scope: &'static str, rule: &'static str, witness: impl Into<String>) -> Violation {
        Violation {
            scope,
            rule,
            witness: witness.into(),
        }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}] {}: {}", self.scope, self.rule, self.witness)
    }
}

/// Result of validating an instance; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.violations.is_empty() {
            write!(f, "valid")
        } else {
            for v in &self.violations {
                writeln!(f, "{v}")?;
            }
            Ok(())
        }
    }
}
