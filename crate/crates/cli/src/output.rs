use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    /// Bad command line.
    Usage,
    /// Unreadable or unsuitable input.
    Invalid,
    /// A checked law failed.
    Internal,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct CliError {
    pub severity: Severity,
    pub info: ErrorInfo,
    /// Whatever was computed before the failure.
    pub partial: Option<Value>,
}

impl CliError {
    fn new(severity: Severity, kind: &str, message: impl Into<String>) -> Self {
        CliError {
            severity,
            info: ErrorInfo { kind: kind.into(), message: message.into(), line: None, column: None },
            partial: None,
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Self::new(Severity::Usage, "usage", message)
    }

    pub fn invalid(kind: &str, message: impl Into<String>) -> Self {
        Self::new(Severity::Invalid, kind, message)
    }

    pub fn internal(kind: &str, message: impl Into<String>) -> Self {
        Self::new(Severity::Internal, kind, message)
    }

    pub fn with_partial(mut self, payload: Value) -> Self {
        self.partial = Some(payload);
        self
    }
}

impl From<gemkit::Error> for CliError {
    fn from(e: gemkit::Error) -> Self {
        use gemkit::Error as E;
        let kind = match &e {
            E::Graph(_) => "graph",
            E::Disconnected => "disconnected",
            E::WrongDimension { .. } | E::DimensionMismatch(..) => "dimension",
            E::NotInClassGs(_) => "not-in-class",
            E::ConditionStarFails | E::NoBound(_) => "no-bound",
            E::NotClosed(_) => "not-closed",
            E::NotCrystallization => "not-crystallization",
            E::InvalidPair(_) | E::NoRhoPair { .. } => "rho-pair",
            E::NoBipartitionPreservingVariant(_) => "no-preserving-variant",
            E::InvalidDipole(_) | E::ImproperDipole { .. } | E::WeldLoop(_) | E::BadAttachment(_) => "dipole",
            E::Replay { .. } => "replay",
            E::DeltaViolation { .. } => "assertion",
            _ => "invalid-input",
        };
        if matches!(e, E::DeltaViolation { .. }) {
            CliError::internal(kind, e.to_string())
        } else {
            CliError::invalid(kind, e.to_string())
        }
    }
}

impl From<gemkit::ParseError> for CliError {
    fn from(e: gemkit::ParseError) -> Self {
        let mut err = CliError::invalid("parse", e.kind.to_string());
        if e.line > 0 {
            err.info.line = Some(e.line);
            err.info.column = Some(e.column);
        }
        err
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Diagnostic {
    pub level: &'static str,
    pub message: String,
}

/// The envelope printed for every command.
#[derive(Debug, Clone, Serialize)]
pub struct CommandResult {
    pub command: &'static str,
    pub status: &'static str,
    pub payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    pub diagnostics: Vec<Diagnostic>,
    #[serde(skip)]
    severity: Option<Severity>,
}

/// A successful payload together with non-fatal messages.
pub struct Success {
    pub payload: Value,
    pub diagnostics: Vec<Diagnostic>,
}

impl Success {
    pub fn new(payload: impl Serialize) -> Self {
        Success { payload: serde_json::to_value(payload).expect("payload serializes"), diagnostics: Vec::new() }
    }

    pub fn note(mut self, level: &'static str, message: impl Into<String>) -> Self {
        self.diagnostics.push(Diagnostic { level, message: message.into() });
        self
    }
}

impl CommandResult {
    pub fn from_outcome(command: &'static str, outcome: Result<Success, CliError>) -> Self {
        match outcome {
            Ok(s) => CommandResult {
                command,
                status: "ok",
                payload: s.payload,
                error: None,
                diagnostics: s.diagnostics,
                severity: None,
            },
            Err(e) => CommandResult {
                command,
                status: "error",
                payload: e.partial.unwrap_or(Value::Null),
                diagnostics: vec![Diagnostic { level: "error", message: e.info.message.clone() }],
                error: Some(e.info),
                severity: Some(e.severity),
            },
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self.severity {
            None => 0,
            Some(Severity::Usage) => 1,
            Some(Severity::Invalid) => 2,
            Some(Severity::Internal) => 3,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
