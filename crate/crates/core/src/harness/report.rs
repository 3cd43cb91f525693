//! Per-claim aggregation and report files.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::verdict::{ClaimId, Outcome, TheoremVerdict};

/// Violations kept verbatim per claim. The count is always exact.
pub const MAX_LISTED_VIOLATIONS: usize = 100;
/// Example graphs kept per note flag.
pub const MAX_NOTE_EXAMPLES: usize = 5;
/// Flag attached when a claim is evaluated below its stated order and the
/// conclusion fails there.
pub const OUTSIDE_RANGE_FAILED: &str = "outside-range-conclusion-failed";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NoteSummary {
    pub flag: String,
    pub count: u64,
    /// Smallest graph6 strings carrying the flag.
    pub examples: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub claim_id: ClaimId,
    pub corpus: String,
    pub graphs_checked: u64,
    pub holds: u64,
    pub vacuous: u64,
    pub outside_range: u64,
    pub violation_count: u64,
    /// Up to `MAX_LISTED_VIOLATIONS`, ordered by graph6 then detail.
    pub violations: Vec<TheoremVerdict>,
    pub notes: Vec<NoteSummary>,
    pub wall_time_ms: u64,
}

impl RunReport {
    pub fn verified(&self) -> bool {
        self.violation_count == 0
    }
}

/// Running totals for one claim. Merging is commutative, so partial tallies
/// from parallel chunks can be combined in any order.
#[derive(Clone, Debug, Default)]
pub(crate) struct Tally {
    checked: u64,
    holds: u64,
    vacuous: u64,
    outside_range: u64,
    violation_count: u64,
    violations: BTreeMap<(String, String), TheoremVerdict>,
    notes: BTreeMap<String, (u64, BTreeSet<String>)>,
}

impl Tally {
    pub(crate) fn record(&mut self, v: TheoremVerdict) {
        self.count(v.outcome);
        let graph = &v.graph;
        for flag in &v.flags {
            self.note(flag, graph);
        }
        if matches!(v.outcome, Outcome::OutsideRange { conclusion_held: false }) {
            self.note(OUTSIDE_RANGE_FAILED, graph);
        }
        if v.outcome == Outcome::Violated {
            self.violations.insert((v.graph.clone(), v.detail.clone()), v);
            trim_map(&mut self.violations, MAX_LISTED_VIOLATIONS);
        }
    }

    /// Records a non-violating outcome known without re-evaluating the
    /// graph. `graph` is only called when a note needs an example.
    pub(crate) fn record_known(&mut self, outcome: Outcome, flags: &[String], graph: impl FnOnce() -> String) {
        debug_assert!(outcome != Outcome::Violated);
        self.count(outcome);
        let failed = matches!(outcome, Outcome::OutsideRange { conclusion_held: false });
        if flags.is_empty() && !failed {
            return;
        }
        let g = graph();
        for flag in flags {
            self.note(flag, &g);
        }
        if failed {
            self.note(OUTSIDE_RANGE_FAILED, &g);
        }
    }

    fn count(&mut self, outcome: Outcome) {
        self.checked += 1;
        match outcome {
            Outcome::Holds => self.holds += 1,
            Outcome::Violated => self.violation_count += 1,
            Outcome::Vacuous => self.vacuous += 1,
            Outcome::OutsideRange { .. } => self.outside_range += 1,
        }
    }

    fn note(&mut self, flag: &str, graph: &str) {
        let entry = self.notes.entry(flag.to_string()).or_default();
        entry.0 += 1;
        if entry.1.len() < MAX_NOTE_EXAMPLES || entry.1.last().is_some_and(|l| graph < l.as_str()) {
            entry.1.insert(graph.to_string());
            trim_set(&mut entry.1, MAX_NOTE_EXAMPLES);
        }
    }

    pub(crate) fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.holds += other.holds;
        self.vacuous += other.vacuous;
        self.outside_range += other.outside_range;
        self.violation_count += other.violation_count;
        self.violations.extend(other.violations);
        trim_map(&mut self.violations, MAX_LISTED_VIOLATIONS);
        for (flag, (count, examples)) in other.notes {
            let entry = self.notes.entry(flag).or_default();
            entry.0 += count;
            entry.1.extend(examples);
            trim_set(&mut entry.1, MAX_NOTE_EXAMPLES);
        }
    }

    pub(crate) fn into_report(self, claim_id: ClaimId, corpus: String, wall_time_ms: u64) -> RunReport {
        RunReport {
            claim_id,
            corpus,
            graphs_checked: self.checked,
            holds: self.holds,
            vacuous: self.vacuous,
            outside_range: self.outside_range,
            violation_count: self.violation_count,
            violations: self.violations.into_values().collect(),
            notes: self
                .notes
                .into_iter()
                .map(|(flag, (count, ex))| NoteSummary { flag, count, examples: ex.into_iter().collect() })
                .collect(),
            wall_time_ms,
        }
    }
}

fn trim_map<K: Ord, V>(m: &mut BTreeMap<K, V>, cap: usize) {
    while m.len() > cap {
        m.pop_last();
    }
}

fn trim_set<T: Ord>(s: &mut BTreeSet<T>, cap: usize) {
    while s.len() > cap {
        s.pop_last();
    }
}

#[derive(Serialize)]
struct SummaryRow<'a> {
    claim_id: &'a str,
    corpus: &'a str,
    checked: u64,
    violations: u64,
    vacuous: u64,
}

/// Writes `report.json` and `summary.csv` into `dir`, creating it if needed.
pub fn write_reports(reports: &[RunReport], dir: &Path) -> Result<(PathBuf, PathBuf)> {
    let io = |path: &Path| {
        let path = path.to_path_buf();
        move |source| Error::Io { path, source }
    };
    fs::create_dir_all(dir).map_err(io(dir))?;
    let json_path = dir.join("report.json");
    let mut json = serde_json::to_string_pretty(reports).expect("reports serialize");
    json.push('\n');
    fs::write(&json_path, json).map_err(io(&json_path))?;

    let csv_path = dir.join("summary.csv");
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in reports {
        w.serialize(SummaryRow {
            claim_id: r.claim_id.as_str(),
            corpus: &r.corpus,
            checked: r.graphs_checked,
            violations: r.violation_count,
            vacuous: r.vacuous,
        })
        .expect("in-memory csv");
    }
    let bytes = w.into_inner().expect("in-memory csv");
    fs::write(&csv_path, bytes).map_err(io(&csv_path))?;
    Ok((json_path, csv_path))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verdict(graph: &str, outcome: Outcome, flag: Option<&str>) -> TheoremVerdict {
        let v = TheoremVerdict::new(ClaimId::Th5, graph.into(), outcome, "d");
        match flag {
            Some(f) => v.with_flag(f),
            None => v,
        }
    }

    #[test]
    fn merge_is_order_independent() {
        let items: Vec<TheoremVerdict> = (0..300)
            .map(|i| {
                let g = format!("G{:04}", (i * 37) % 300);
                match i % 4 {
                    0 => verdict(&g, Outcome::Violated, None),
                    1 => verdict(&g, Outcome::Holds, Some("x")),
                    2 => verdict(&g, Outcome::Vacuous, None),
                    _ => verdict(&g, Outcome::OutsideRange { conclusion_held: false }, None),
                }
            })
            .collect();
        let build = |chunks: Vec<&[TheoremVerdict]>| {
            let mut total = Tally::default();
            for c in chunks {
                let mut t = Tally::default();
                c.iter().cloned().for_each(|v| t.record(v));
                total.merge(t);
            }
            total.into_report(ClaimId::Th5, "c".into(), 0)
        };
        let a = build(items.chunks(7).collect());
        let b = build(items.chunks(50).rev().collect());
        assert_eq!(a, b);
        assert_eq!(a.graphs_checked, 300);
        assert_eq!(a.holds + a.vacuous + a.outside_range + a.violation_count, a.graphs_checked);
        assert_eq!(a.violation_count, 75);
        assert_eq!(a.violations.len(), 75);
        assert_eq!(a.notes.len(), 2);
        assert_eq!(a.notes[0].examples.len(), MAX_NOTE_EXAMPLES);
        assert!(a.notes[0].examples.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn violation_list_is_capped_but_count_exact() {
        let mut t = Tally::default();
        for i in (0..250).rev() {
            t.record(verdict(&format!("G{i:03}"), Outcome::Violated, None));
        }
        let r = t.into_report(ClaimId::Th5, "c".into(), 0);
        assert_eq!(r.violation_count, 250);
        assert_eq!(r.violations.len(), MAX_LISTED_VIOLATIONS);
        assert_eq!(r.violations[0].graph, "G000");
        assert_eq!(r.violations[99].graph, "G099");
    }

    #[test]
    fn files_written() {
        let dir = tempfile::tempdir().unwrap();
        let r = Tally::default().into_report(ClaimId::Th2, "labeled:3".into(), 1);
        let (j, c) = write_reports(&[r], dir.path()).unwrap();
        let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(j).unwrap()).unwrap();
        assert_eq!(json[0]["claim_id"], "th2");
        let csv = fs::read_to_string(c).unwrap();
        assert_eq!(csv, "claim_id,corpus,checked,violations,vacuous\nth2,labeled:3,0,0,0\n");
    }
}
