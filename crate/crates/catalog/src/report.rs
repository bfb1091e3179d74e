//! Check records shared by the verification reports.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    /// Report-only entry that never fails.
    Info,
}

/// One named check. Failures carry a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Check {
        Check { name: name.into(), status: Status::Pass, witness: None, note: None }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Check {
        Check { name: name.into(), status: Status::Fail, witness: Some(witness.into()), note: None }
    }

    pub fn skipped(name: impl Into<String>, note: impl Into<String>) -> Check {
        Check { name: name.into(), status: Status::Skipped, witness: None, note: Some(note.into()) }
    }

    /// Pass when `ok`, otherwise fail with the witness.
    pub fn from_result(name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Check {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, witness())
        }
    }

    pub fn info(name: impl Into<String>, note: impl Into<String>) -> Check {
        Check { name: name.into(), status: Status::Info, witness: None, note: Some(note.into()) }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Check {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
