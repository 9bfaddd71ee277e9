//! Verdicts and verdict reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::group::PermGroup;
use crate::io::GroupFile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A hypothesis of the statement does not hold for this input.
    Skip,
    /// The statement holds for trivial reasons on this input.
    Vacuous,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// One check on one target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub check: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub data: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub items: Vec<Verdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

impl Verdict {
    pub fn new(check: impl Into<String>, status: Status) -> Verdict {
        Verdict {
            check: check.into(),
            status,
            reason: None,
            witness: None,
            data: BTreeMap::new(),
            items: Vec::new(),
            millis: None,
        }
    }

    pub fn pass_if(check: impl Into<String>, ok: bool) -> Verdict {
        Verdict::new(check, Status::from_bool(ok))
    }

    pub fn skip(check: impl Into<String>, reason: impl Into<String>) -> Verdict {
        Verdict::new(check, Status::Skip).because(reason)
    }

    pub fn vacuous(check: impl Into<String>, reason: impl Into<String>) -> Verdict {
        Verdict::new(check, Status::Vacuous).because(reason)
    }

    pub fn because(mut self, reason: impl Into<String>) -> Verdict {
        self.reason = Some(reason.into());
        self
    }

    pub fn with(mut self, key: &str, value: impl Serialize) -> Verdict {
        self.data
            .insert(key.to_owned(), serde_json::to_value(value).expect("serialisable"));
        self
    }

    pub fn with_witness(mut self, witness: Value) -> Verdict {
        self.witness = Some(witness);
        self
    }

    /// Adds sub-checks; the overall status becomes fail if any item fails.
    pub fn with_items(mut self, items: Vec<Verdict>) -> Verdict {
        if items.iter().any(|v| v.status == Status::Fail) {
            self.status = Status::Fail;
        }
        self.items.extend(items);
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.data.get(key)
    }

    pub fn item(&self, check: &str) -> Option<&Verdict> {
        self.items.iter().find(|v| v.check == check)
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }
}

/// A group as inline JSON with its order.
pub fn group_json(g: &PermGroup) -> Value {
    let mut v = serde_json::to_value(GroupFile::from_group(g)).expect("serialisable");
    v["order"] = Value::String(g.order().to_string());
    v
}

/// A verdict bound to the fixture it was computed on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub check_id: String,
    pub target: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub vacuous: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub version: String,
    pub entries: Vec<Entry>,
    pub summary: Summary,
}

impl VerdictReport {
    pub fn new(entries: Vec<Entry>) -> VerdictReport {
        let mut summary = Summary::default();
        for e in &entries {
            match e.verdict.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skip => summary.skip += 1,
                Status::Vacuous => summary.vacuous += 1,
            }
        }
        VerdictReport {
            version: env!("CARGO_PKG_VERSION").to_owned(),
            entries,
            summary,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialisable")
    }
}
