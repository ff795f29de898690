use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

/// First falsified check of a failing report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Failure {
    pub check: String,
    pub witness: Value,
}

/// JSON document printed by every subcommand.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportEnvelope {
    pub command: String,
    pub parameters: Map<String, Value>,
    pub status: Status,
    pub payload: Map<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<Failure>,
}

impl ReportEnvelope {
    pub fn new(command: &str, parameters: Value) -> Self {
        ReportEnvelope {
            command: command.to_string(),
            parameters: into_map(parameters),
            status: Status::Info,
            payload: Map::new(),
            failure: None,
        }
    }

    pub fn with_payload(mut self, payload: Value) -> Self {
        self.payload = into_map(payload);
        self
    }

    pub fn insert(&mut self, key: &str, value: Value) {
        self.payload.insert(key.to_string(), value);
    }

    /// Records a check; the first failing one becomes the report's failure.
    pub fn check(&mut self, id: &str, passed: bool, witness: impl FnOnce() -> Value) {
        if passed {
            if self.status == Status::Info {
                self.status = Status::Pass;
            }
        } else {
            if self.failure.is_none() {
                self.failure = Some(Failure { check: id.to_string(), witness: witness() });
            }
            self.status = Status::Fail;
        }
    }

    pub fn fail(mut self, id: &str, witness: Value) -> Self {
        self.check(id, false, || witness);
        self
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Fail => 1,
            Status::Pass | Status::Info => 0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelope serializes")
    }
}

fn into_map(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        Value::Null => Map::new(),
        other => {
            let mut m = Map::new();
            m.insert("value".into(), other);
            m
        }
    }
}
