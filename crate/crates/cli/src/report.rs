use std::fmt::Write as _;
use std::process::ExitCode;

/// Deterministic command output: no timings, no paths beyond what the user passed.
#[derive(Debug, Default)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub outputs: Vec<(String, String)>,
    /// Which computations were cross-checked to produce the outputs.
    pub checks: Vec<String>,
    /// Printed verbatim instead of the key/value form, for machine-readable tables.
    pub body: Option<String>,
}

impl RunReport {
    pub fn set_command(&mut self, command: &str) -> &mut Self {
        self.command = command.to_string();
        self
    }

    pub fn input(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.inputs.push((key.to_string(), value.to_string()));
        self
    }

    pub fn output(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.outputs.push((key.to_string(), value.to_string()));
        self
    }

    pub fn check(&mut self, what: &str) -> &mut Self {
        self.checks.push(what.to_string());
        self
    }

    pub fn render(&self) -> String {
        if let Some(b) = &self.body {
            return b.clone();
        }
        let mut s = format!("command: {}\n", self.command);
        for (k, v) in &self.inputs {
            let _ = writeln!(s, "input {k}: {v}");
        }
        for (k, v) in &self.outputs {
            if v.contains('\n') {
                let _ = writeln!(s, "{k}:");
                for line in v.lines() {
                    let _ = writeln!(s, "  {line}");
                }
            } else {
                let _ = writeln!(s, "{k}: {v}");
            }
        }
        for c in &self.checks {
            let _ = writeln!(s, "checked: {c}");
        }
        s
    }
}

/// Exit status: 1 for a mathematical mismatch, 2 for bad input.
#[derive(Debug)]
pub enum Failure {
    Mismatch(String),
    Input(String),
}

impl Failure {
    pub fn code(&self) -> ExitCode {
        match self {
            Failure::Mismatch(_) => ExitCode::from(1),
            Failure::Input(_) => ExitCode::from(2),
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Mismatch(m) | Failure::Input(m) => m,
        }
    }
}

impl From<peskine_core::Error> for Failure {
    fn from(e: peskine_core::Error) -> Self {
        use peskine_core::Error as E;
        match e {
            E::OracleMismatch { .. }
            | E::FlagViolated
            | E::AllRestrictionsZero
            | E::NotACubic { .. }
            | E::NotDivisible { .. }
            | E::SelfCheck(_) => Failure::Mismatch(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}
