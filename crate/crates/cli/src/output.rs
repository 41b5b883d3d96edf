use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "frobrig/1";

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Indeterminate,
    Error,
}

impl Status {
    fn name(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Indeterminate => "INDETERMINATE",
            Status::Error => "ERROR",
        }
    }
}

/// Anything that stops a command before it produces a result.
#[derive(Debug)]
pub enum Failure {
    Engine(frobrig::Error),
    Io(String),
    Usage(String),
}

impl From<frobrig::Error> for Failure {
    fn from(e: frobrig::Error) -> Self {
        Failure::Engine(e)
    }
}

pub fn reason_code(e: &frobrig::Error) -> &'static str {
    use frobrig::Error::*;
    match e {
        NotPrime(_) => "NOT_PRIME",
        NotPowerOfCharacteristic { .. } => "NOT_POWER_OF_CHARACTERISTIC",
        Parse { .. } => "PARSE_ERROR",
        Inhomogeneous(_) => "INHOMOGENEOUS",
        ZeroElement => "ZERO_ELEMENT",
        UnitIdeal => "UNIT_IDEAL",
        ZeroModule => "ZERO_MODULE",
        InfiniteLength => "INFINITE_LENGTH",
        Overflow(_) => "OVERFLOW",
        Budget(_) => "BUDGET_EXCEEDED",
        UnmetHypothesis(_) => "UNMET_HYPOTHESIS",
        UnknownScenario(_) => "UNKNOWN_SCENARIO",
        TooManyVariables { .. } => "TOO_MANY_VARIABLES",
        NotAComplex(..) => "NOT_A_COMPLEX",
        AmbientMismatch | LengthMismatch(..) | Invalid(_) => "INVALID_INPUT",
    }
}

/// The outcome of one command: a status, an optional reason code, the
/// machine-readable result and its text rendering.
pub struct Reply {
    pub command: &'static str,
    pub status: Status,
    pub reason: Option<String>,
    pub message: Option<String>,
    pub result: Value,
    pub text: Vec<String>,
}

impl Reply {
    pub fn ok(command: &'static str, result: Value, text: Vec<String>) -> Reply {
        Reply {
            command,
            status: Status::Pass,
            reason: None,
            message: None,
            result,
            text,
        }
    }

    pub fn with_status(mut self, status: Status, reason: Option<&str>) -> Reply {
        self.status = status;
        self.reason = reason.map(String::from);
        self
    }

    pub fn from_error(command: &'static str, f: Failure) -> Reply {
        let (status, reason, message, result) = match f {
            Failure::Engine(e) => {
                let status = if e.is_budget() { Status::Indeterminate } else { Status::Error };
                let result = match &e {
                    frobrig::Error::Parse { line, column, .. } => json!({"line": line, "column": column}),
                    _ => Value::Null,
                };
                (status, reason_code(&e).to_string(), e.to_string(), result)
            }
            Failure::Io(m) => (Status::Error, "IO_ERROR".to_string(), m, Value::Null),
            Failure::Usage(m) => (Status::Error, "INVALID_INPUT".to_string(), m, Value::Null),
        };
        Reply {
            command,
            status,
            reason: Some(reason),
            message: Some(message),
            result,
            text: Vec::new(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self.status {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Indeterminate => 2,
            Status::Error => 3,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut obj = Map::new();
                obj.insert("schema".into(), json!(SCHEMA));
                obj.insert("command".into(), json!(self.command));
                obj.insert("status".into(), json!(self.status.name()));
                if let Some(r) = &self.reason {
                    obj.insert("reason".into(), json!(r));
                }
                if let Some(m) = &self.message {
                    obj.insert("message".into(), json!(m));
                }
                if !self.result.is_null() {
                    obj.insert("result".into(), self.result.clone());
                }
                let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("serializable");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = format!("{} {}", self.command, self.status.name());
                if let Some(r) = &self.reason {
                    s.push_str(&format!(" ({r})"));
                }
                s.push('\n');
                if let Some(m) = &self.message {
                    s.push_str(&format!("{m}\n"));
                }
                for line in &self.text {
                    s.push_str(line);
                    s.push('\n');
                }
                s
            }
        }
    }
}
