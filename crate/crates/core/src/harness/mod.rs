//! Corpus sweeps: enumerate graphs, check claims, aggregate reports.

pub mod claims;
pub mod corpus;
pub mod report;
pub mod treecode;

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::key;
use crate::verdict::{ClaimId, Outcome};

pub use claims::GraphContext;
pub use corpus::{
    enumerate_labeled, enumerate_trees, ingest_graph6_file, named_families, sample_graphs, CorpusSource,
    CorpusSpec,
};
pub use report::{write_reports, NoteSummary, RunReport};
pub use treecode::tree_code;

use report::Tally;

/// Graphs pulled from the producer before a parallel pass.
const BATCH: usize = 1 << 16;
/// Graphs handled by one task inside a batch.
const CHUNK: usize = 1 << 12;

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Worker threads; `None` uses the available parallelism.
    pub threads: Option<usize>,
    /// Skip the per-isomorphism-class cache for trees.
    pub no_tree_memo: bool,
}

/// Label-free result of one claim on one tree shape.
#[derive(Clone)]
struct Cached {
    outcome: Outcome,
    flags: Vec<String>,
}

type Memo = HashMap<(ClaimId, u64), Cached>;

/// Checks every claim on every corpus graph, one report per claim in claim
/// id order. Reports do not depend on the thread count.
pub fn run_suite(claims: &[ClaimId], corpus: &CorpusSpec, opts: &SuiteOptions) -> Result<Vec<RunReport>> {
    let mut claims = claims.to_vec();
    claims.sort();
    claims.dedup();
    if claims.is_empty() {
        return Err(Error::Config("no claims requested".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads.unwrap_or(0))
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    let start = Instant::now();
    let mut totals = vec![Tally::default(); claims.len()];
    let mut memo = Memo::new();
    let mut source = corpus.graphs()?;
    let mut batch = Vec::with_capacity(BATCH);
    loop {
        batch.clear();
        for item in source.by_ref().take(BATCH) {
            batch.push(item?);
        }
        if batch.is_empty() {
            break;
        }
        let use_memo = !opts.no_tree_memo;
        let parts: Vec<Result<(Vec<Tally>, Memo)>> = pool.install(|| {
            batch
                .par_chunks(CHUNK)
                .map(|chunk| run_chunk(&claims, chunk, use_memo.then_some(&memo)))
                .collect()
        });
        for part in parts {
            let (tallies, fresh) = part?;
            for (t, p) in totals.iter_mut().zip(tallies) {
                t.merge(p);
            }
            memo.extend(fresh);
        }
    }
    let ms = start.elapsed().as_millis() as u64;
    let label = corpus.to_string();
    Ok(claims
        .iter()
        .zip(totals)
        .map(|(&c, t)| t.into_report(c, label.clone(), ms))
        .collect())
}

fn run_chunk(claims: &[ClaimId], chunk: &[Graph], memo: Option<&Memo>) -> Result<(Vec<Tally>, Memo)> {
    let mut tallies = vec![Tally::default(); claims.len()];
    let mut fresh = Memo::new();
    for g in chunk {
        let code = match memo {
            Some(_) if g.n() > 0 && g.edge_count() + 1 == g.n() => tree_code(g),
            _ => None,
        };
        let mut ctx: Option<GraphContext> = None;
        for (i, &claim) in claims.iter().enumerate() {
            if let Some(code) = code {
                let hit = memo.and_then(|m| m.get(&(claim, code))).or_else(|| fresh.get(&(claim, code)));
                if let Some(c) = hit.filter(|c| c.outcome != Outcome::Violated) {
                    tallies[i].record_known(c.outcome, &c.flags, || key(g));
                    continue;
                }
            }
            let v = ctx.get_or_insert_with(|| GraphContext::new(g)).evaluate(claim)?;
            if let Some(code) = code {
                fresh
                    .entry((claim, code))
                    .or_insert_with(|| Cached { outcome: v.outcome, flags: v.flags.clone() });
            }
            tallies[i].record(v);
        }
    }
    Ok((tallies, fresh))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verdict::parse_claim_list;

    fn labeled(n: usize, connected: bool) -> CorpusSpec {
        CorpusSpec::new(CorpusSource::LabeledAll { min_n: n, max_n: n, connected_only: connected }).unwrap()
    }

    #[test]
    fn th2_on_connected_order_5() {
        let r = run_suite(&[ClaimId::Th2], &labeled(5, true), &SuiteOptions::default()).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].graphs_checked, 728);
        assert!(r[0].verified());
    }

    #[test]
    fn pro2_on_trees_8() {
        let spec = CorpusSpec::new(CorpusSource::Trees { min_n: 8, max_n: 8 }).unwrap();
        let r = run_suite(&[ClaimId::Pro2], &spec, &SuiteOptions::default()).unwrap();
        assert_eq!(r[0].graphs_checked, 8u64.pow(6));
        assert_eq!(r[0].holds, r[0].graphs_checked);
    }

    #[test]
    fn memo_and_threads_do_not_change_reports() {
        let claims = parse_claim_list("all").unwrap();
        let spec = CorpusSpec::new(CorpusSource::Trees { min_n: 3, max_n: 6 }).unwrap();
        let strip = |mut rs: Vec<RunReport>| {
            rs.iter_mut().for_each(|r| r.wall_time_ms = 0);
            rs
        };
        let a = strip(run_suite(&claims, &spec, &SuiteOptions { threads: Some(1), no_tree_memo: false }).unwrap());
        let b = strip(run_suite(&claims, &spec, &SuiteOptions { threads: Some(2), no_tree_memo: true }).unwrap());
        assert_eq!(a, b);
        assert!(a.iter().all(|r| r.verified()), "{a:?}");
    }

    #[test]
    fn dedup_keeps_status() {
        let claims = [ClaimId::Th3, ClaimId::Th4];
        let mut spec = labeled(5, true);
        let full = run_suite(&claims, &spec, &SuiteOptions::default()).unwrap();
        spec.dedup = true;
        let small = run_suite(&claims, &spec, &SuiteOptions::default()).unwrap();
        for (f, s) in full.iter().zip(&small) {
            assert_eq!(f.verified(), s.verified());
            assert_eq!(s.graphs_checked, 21);
        }
    }

    #[test]
    fn strict_file_errors_abort() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.g6");
        std::fs::write(&path, "A_\n!!\n").unwrap();
        let spec = CorpusSpec::new(CorpusSource::File { path, lenient: false }).unwrap();
        let err = run_suite(&[ClaimId::Pro1], &spec, &SuiteOptions::default()).unwrap_err();
        assert!(matches!(err, Error::Line { line: 2, .. }), "{err:?}");
    }
}
