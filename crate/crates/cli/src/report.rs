use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Unknown {
    Unknown,
}

/// `true`/`false` when exactness is known, the string `"unknown"` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Exactness {
    Known(bool),
    Unknown(Unknown),
}

/// One counting result, as emitted by `--json`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub method: String,
    pub interval: String,
    pub convention: String,
    pub result: u64,
    pub exact: Exactness,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        match self.exact {
            Exactness::Known(true) if self.is_bound() => {
                format!("bound {} (exact)", self.result)
            }
            Exactness::Known(_) => self.result.to_string(),
            Exactness::Unknown(_) => format!(
                "bound {} (true count is at most {} and has the same parity)",
                self.result, self.result
            ),
        }
    }

    fn is_bound(&self) -> bool {
        matches!(self.method.as_str(), "fourier" | "descartes")
    }
}
