use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{format_rational, parse_rational, Rational};
use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped(String),
}

impl CheckStatus {
    pub fn is_pass(&self) -> bool {
        matches!(self, CheckStatus::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, CheckStatus::Fail)
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "pass"),
            CheckStatus::Fail => write!(f, "fail"),
            CheckStatus::Skipped(reason) => write!(f, "skipped: {reason}"),
        }
    }
}

impl std::str::FromStr for CheckStatus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "pass" => Ok(CheckStatus::Pass),
            "fail" => Ok(CheckStatus::Fail),
            other => other
                .strip_prefix("skipped: ")
                .map(|r| CheckStatus::Skipped(r.to_string()))
                .ok_or_else(|| Error::InvalidParameter(format!("unknown status `{other}`"))),
        }
    }
}

/// One exact comparison. Serialized with rationals as `"num/den"` strings
/// and the status as `pass`, `fail` or `skipped: <reason>`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ReportJson", into = "ReportJson")]
pub struct CheckReport {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub status: CheckStatus,
    pub lhs: Option<Rational>,
    pub rhs: Option<Rational>,
    pub millis: u64,
}

impl CheckReport {
    pub fn new(id: &str, params: BTreeMap<String, String>) -> Self {
        CheckReport { id: id.to_string(), params, status: CheckStatus::Fail, lhs: None, rhs: None, millis: 0 }
    }

    /// Pass iff both values are present and equal.
    pub fn compare(mut self, lhs: Rational, rhs: Rational) -> Self {
        self.status = if lhs == rhs { CheckStatus::Pass } else { CheckStatus::Fail };
        self.lhs = Some(lhs);
        self.rhs = Some(rhs);
        self
    }

    pub fn skipped(mut self, reason: impl Into<String>) -> Self {
        self.status = CheckStatus::Skipped(reason.into());
        self
    }

    pub fn failed(mut self, error: &Error) -> Self {
        self.status = CheckStatus::Fail;
        self.params.insert("error".into(), error.to_string());
        self
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    /// One line for terminal output.
    pub fn summary(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut line = format!("{:<5} {} [{}]", self.status.to_string().to_uppercase(), self.id, params.join(" "));
        if let CheckStatus::Skipped(_) = self.status {
            line = format!("SKIP  {} [{}] {}", self.id, params.join(" "), self.status);
        }
        if let (Some(l), Some(r)) = (&self.lhs, &self.rhs) {
            if self.status.is_fail() {
                line.push_str(&format!(" lhs={l} rhs={r}"));
            } else {
                line.push_str(&format!(" value={l}"));
            }
        }
        line
    }
}

#[derive(Serialize, Deserialize)]
struct ReportJson {
    id: String,
    params: BTreeMap<String, String>,
    status: String,
    lhs: Option<String>,
    rhs: Option<String>,
    millis: u64,
}

impl From<CheckReport> for ReportJson {
    fn from(r: CheckReport) -> Self {
        ReportJson {
            id: r.id,
            params: r.params,
            status: r.status.to_string(),
            lhs: r.lhs.as_ref().map(format_rational),
            rhs: r.rhs.as_ref().map(format_rational),
            millis: r.millis,
        }
    }
}

impl TryFrom<ReportJson> for CheckReport {
    type Error = Error;

    fn try_from(j: ReportJson) -> Result<Self, Error> {
        Ok(CheckReport {
            id: j.id,
            params: j.params,
            status: j.status.parse()?,
            lhs: j.lhs.as_deref().map(parse_rational).transpose()?,
            rhs: j.rhs.as_deref().map(parse_rational).transpose()?,
            millis: j.millis,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    #[test]
    fn json_round_trip() {
        let reports = vec![
            CheckReport::new("a", BTreeMap::new()).param("n", 3).compare(ratio(1, 2), ratio(1, 2)),
            CheckReport::new("b", BTreeMap::new()).compare(rat(-4), rat(5)),
            CheckReport::new("c", BTreeMap::new()).skipped("needs r >= 1"),
        ];
        let text = serde_json::to_string_pretty(&reports).unwrap();
        assert!(text.contains("\"1/2\"") && text.contains("\"-4/1\"") && text.contains("skipped: needs r >= 1"));
        let back: Vec<CheckReport> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, reports);
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
    }

    #[test]
    fn status_follows_equality() {
        assert!(CheckReport::new("x", BTreeMap::new()).compare(rat(2), rat(2)).status.is_pass());
        assert!(CheckReport::new("x", BTreeMap::new()).compare(rat(2), ratio(4, 3)).status.is_fail());
    }
}
