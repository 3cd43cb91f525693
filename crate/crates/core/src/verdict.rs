//! Claim identifiers and per-graph verdict records.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

macro_rules! claims {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// A checkable statement about Steiner diameters.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum ClaimId {
            $($variant),*
        }

        impl ClaimId {
            pub const ALL: &'static [ClaimId] = &[$(ClaimId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(ClaimId::$variant => $name),*
                }
            }
        }

        impl FromStr for ClaimId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s.trim() {
                    $($name => Ok(ClaimId::$variant),)*
                    other => Err(Error::Config(format!("unknown claim id {other:?}"))),
                }
            }
        }
    };
}

claims! {
    Obs1 => "obs1",
    Obs2 => "obs2",
    Th1 => "th1",
    Th2 => "th2",
    Th3 => "th3",
    Th4 => "th4",
    Pro1 => "pro1",
    Pro2 => "pro2",
    Lem1 => "lem1",
    Lem2 => "lem2",
    LemF => "lemF",
    Pro6 => "pro6",
    Th5 => "th5",
    Obs3n => "obs3n",
    ProA => "proA",
    ProB => "proB",
    ProC => "proC",
    LemM => "lemM",
    Lem0 => "lem0",
    OracleDp => "oracle_dp",
    OracleMedian => "oracle_median",
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for ClaimId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Parses a comma separated list; `all` expands to every claim.
pub fn parse_claim_list(text: &str) -> Result<Vec<ClaimId>> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part == "all" {
            out.extend_from_slice(ClaimId::ALL);
        } else {
            out.push(part.parse()?);
        }
    }
    if out.is_empty() {
        return Err(Error::Config("empty claim list".into()));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Holds,
    Violated,
    /// The hypotheses do not apply (for example a disconnected side).
    Vacuous,
    /// The graph is below the order the claim is stated for; the conclusion
    /// was evaluated anyway.
    OutsideRange { conclusion_held: bool },
}

/// Result of checking one claim on one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub claim_id: ClaimId,
    /// graph6 text of the graph checked.
    pub graph: String,
    pub holds: bool,
    pub outcome: Outcome,
    /// Values, case label, or for violations the concrete witness.
    pub detail: String,
    /// Reading-dependent notes, such as `lambda-form-mismatch`.
    pub flags: Vec<String>,
}

impl TheoremVerdict {
    pub fn new(claim_id: ClaimId, graph: String, outcome: Outcome, detail: impl Into<String>) -> Self {
        TheoremVerdict {
            claim_id,
            graph,
            holds: outcome != Outcome::Violated,
            outcome,
            detail: detail.into(),
            flags: Vec::new(),
        }
    }

    pub fn with_flag(mut self, flag: &str) -> Self {
        self.flags.push(flag.to_string());
        self
    }
}
