//! Graph sources for claim sweeps.

use std::collections::HashMap;
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::families::{generate, FamilySpec, H2Pattern};
use crate::graph::Graph;
use crate::graph6::from_graph6;
use crate::iso::is_isomorphic;
use crate::structure::is_connected;

pub const LABELED_MAX_ORDER: usize = 8;
pub const TREES_MAX_ORDER: usize = 12;
pub const DEDUP_MAX_ORDER: usize = 8;

/// Edge densities cycled through by the random source.
pub const SAMPLE_DENSITIES: [f64; 5] = [0.3, 0.4, 0.5, 0.6, 0.7];

#[derive(Clone, Debug, PartialEq)]
pub enum CorpusSource {
    /// Every labelled graph on `min_n..=max_n` vertices.
    LabeledAll { min_n: usize, max_n: usize, connected_only: bool },
    /// Every labelled tree, via Pruefer sequences.
    Trees { min_n: usize, max_n: usize },
    /// One graph6 string per line.
    File { path: PathBuf, lenient: bool },
    /// All named families up to an order.
    Families { max_n: usize },
    /// Fixed-seed Erdos-Renyi samples.
    Sampled { n: usize, count: usize, seed: u64, both_connected: bool },
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusSpec {
    pub source: CorpusSource,
    /// Drop graphs isomorphic to an earlier one (orders up to 8 only).
    pub dedup: bool,
}

fn parse_range(text: &str) -> Result<(usize, usize)> {
    let bad = || Error::Config(format!("bad order or range {text:?}"));
    match text.split_once('-') {
        Some((a, b)) => Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)),
        None => {
            let n = text.parse().map_err(|_| bad())?;
            Ok((n, n))
        }
    }
}

impl CorpusSpec {
    /// Parses `labeled:N[:connected]`, `trees:N`, `file:PATH`,
    /// `families:N` or `random:N:COUNT[:both]`. `N` may be a range `A-B`
    /// for the labelled and tree sources. `seed` only affects `random`.
    pub fn parse(text: &str, seed: u64, dedup: bool) -> Result<Self> {
        let (kind, rest) = text
            .split_once(':')
            .ok_or_else(|| Error::Config(format!("corpus {text:?} lacks a kind prefix")))?;
        let source = match kind {
            "labeled" => {
                let mut parts = rest.split(':');
                let (min_n, max_n) = parse_range(parts.next().unwrap_or(""))?;
                let connected_only = match parts.next() {
                    None => false,
                    Some("connected") => true,
                    Some(o) => return Err(Error::Config(format!("unknown labeled option {o:?}"))),
                };
                CorpusSource::LabeledAll { min_n, max_n, connected_only }
            }
            "trees" => {
                let (min_n, max_n) = parse_range(rest)?;
                CorpusSource::Trees { min_n, max_n }
            }
            "file" => CorpusSource::File {
                path: PathBuf::from(rest),
                lenient: false,
            },
            "families" => CorpusSource::Families {
                max_n: rest.parse().map_err(|_| Error::Config(format!("bad order {rest:?}")))?,
            },
            "random" => {
                let parts: Vec<&str> = rest.split(':').collect();
                let num = |s: &str| s.parse::<usize>().map_err(|_| Error::Config(format!("bad number {s:?}")));
                let (n, count, both_connected) = match parts.as_slice() {
                    [n, c] => (num(n)?, num(c)?, false),
                    [n, c, "both"] => (num(n)?, num(c)?, true),
                    _ => return Err(Error::Config(format!("bad random corpus {text:?}"))),
                };
                CorpusSource::Sampled { n, count, seed, both_connected }
            }
            other => return Err(Error::Config(format!("unknown corpus kind {other:?}"))),
        };
        let spec = CorpusSpec { source, dedup };
        spec.validate()?;
        Ok(spec)
    }

    pub fn new(source: CorpusSource) -> Result<Self> {
        let spec = CorpusSpec { source, dedup: false };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        match self.source {
            CorpusSource::LabeledAll { min_n, max_n, .. } => {
                if min_n == 0 || min_n > max_n {
                    return Err(Error::Config(format!("bad order range {min_n}-{max_n}")));
                }
                if max_n > LABELED_MAX_ORDER {
                    return Err(Error::capacity(format!(
                        "labelled enumeration supports n <= {LABELED_MAX_ORDER}"
                    )));
                }
            }
            CorpusSource::Trees { min_n, max_n } => {
                if min_n == 0 || min_n > max_n {
                    return Err(Error::Config(format!("bad order range {min_n}-{max_n}")));
                }
                if max_n > TREES_MAX_ORDER {
                    return Err(Error::capacity(format!("tree enumeration supports n <= {TREES_MAX_ORDER}")));
                }
            }
            CorpusSource::Sampled { n, .. } if n == 0 || n > 62 => {
                return Err(Error::Config(format!("random order {n} outside 1..=62")));
            }
            CorpusSource::Families { max_n } if max_n == 0 || max_n > 62 => {
                return Err(Error::Config(format!("family order {max_n} outside 1..=62")));
            }
            _ => {}
        }
        Ok(())
    }

    /// The graphs, in a fixed order. File sources yield line-tagged errors
    /// in strict mode and skip bad lines (with a warning) in lenient mode.
    pub fn graphs(&self) -> Result<Box<dyn Iterator<Item = Result<Graph>> + Send>> {
        let base: Box<dyn Iterator<Item = Result<Graph>> + Send> = match &self.source {
            CorpusSource::LabeledAll { min_n, max_n, connected_only } => {
                let c = *connected_only;
                Box::new((*min_n..=*max_n).flat_map(move |n| enumerate_labeled(n, c).expect("validated")).map(Ok))
            }
            CorpusSource::Trees { min_n, max_n } => {
                Box::new((*min_n..=*max_n).flat_map(|n| enumerate_trees(n).expect("validated")).map(Ok))
            }
            CorpusSource::File { path, lenient } => Box::new(ingest_graph6_file(path, *lenient)?),
            CorpusSource::Families { max_n } => Box::new(named_families(*max_n).into_iter().map(Ok)),
            CorpusSource::Sampled { n, count, seed, both_connected } => {
                Box::new(sample_graphs(*n, *count, *seed, *both_connected).map(Ok))
            }
        };
        if !self.dedup {
            return Ok(base);
        }
        let mut seen: HashMap<Vec<usize>, Vec<Graph>> = HashMap::new();
        Ok(Box::new(base.filter(move |item| {
            let Ok(g) = item else { return true };
            if g.n() > DEDUP_MAX_ORDER {
                return true;
            }
            let mut key = g.degrees();
            key.sort_unstable();
            key.push(g.n());
            let bucket = seen.entry(key).or_default();
            if bucket.iter().any(|h| is_isomorphic(g, h)) {
                return false;
            }
            bucket.push(g.clone());
            true
        })))
    }
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let range = |a: usize, b: usize| if a == b { a.to_string() } else { format!("{a}-{b}") };
        match &self.source {
            CorpusSource::LabeledAll { min_n, max_n, connected_only } => {
                write!(f, "labeled:{}", range(*min_n, *max_n))?;
                if *connected_only {
                    f.write_str(":connected")?;
                }
            }
            CorpusSource::Trees { min_n, max_n } => write!(f, "trees:{}", range(*min_n, *max_n))?,
            CorpusSource::File { path, .. } => write!(f, "file:{}", path.display())?,
            CorpusSource::Families { max_n } => write!(f, "families:{max_n}")?,
            CorpusSource::Sampled { n, count, seed, both_connected } => {
                write!(f, "random:{n}:{count}")?;
                if *both_connected {
                    f.write_str(":both")?;
                }
                write!(f, " (seed {seed})")?;
            }
        }
        if self.dedup {
            f.write_str(" dedup")?;
        }
        Ok(())
    }
}

/// Every labelled graph on `n` vertices, in order of the edge bitmask over
/// the graph6 pair order `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn enumerate_labeled(n: usize, connected_only: bool) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 {
        return Err(Error::param("order must be >= 1"));
    }
    if n > LABELED_MAX_ORDER {
        return Err(Error::capacity(format!("labelled enumeration supports n <= {LABELED_MAX_ORDER}")));
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let mut rows = vec![0u64; n];
        let mut bits = mask;
        while bits != 0 {
            let (i, j) = pairs[bits.trailing_zeros() as usize];
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
            bits &= bits - 1;
        }
        let g = Graph::from_rows(rows).expect("symmetric by construction");
        (!connected_only || is_connected(&g)).then_some(g)
    }))
}

/// Every labelled tree on `n` vertices (`n^(n-2)` of them), decoded from
/// Pruefer sequences in lexicographic order. `n = 1` yields the single
/// vertex.
pub fn enumerate_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 {
        return Err(Error::param("order must be >= 1"));
    }
    if n > TREES_MAX_ORDER {
        return Err(Error::capacity(format!("tree enumeration supports n <= {TREES_MAX_ORDER}")));
    }
    let len = n.saturating_sub(2);
    let mut seq = vec![0usize; len];
    let mut done = false;
    Ok(std::iter::from_fn(move || {
        if done {
            return None;
        }
        let g = if n == 1 {
            Graph::empty(1).expect("n = 1")
        } else {
            prufer_decode(n, &seq)
        };
        // odometer
        done = true;
        for d in seq.iter_mut().rev() {
            *d += 1;
            if *d < n {
                done = false;
                break;
            }
            *d = 0;
        }
        Some(g)
    }))
}

fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    let mut degree = [1u8; 64];
    for &s in seq {
        degree[s] += 1;
    }
    let mut rows = vec![0u64; n];
    let mut link = |a: usize, b: usize| {
        rows[a] |= 1 << b;
        rows[b] |= 1 << a;
    };
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &v in seq {
        link(leaf, v);
        degree[leaf] = 0;
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    link(leaf, n - 1);
    Graph::from_rows(rows).expect("symmetric by construction")
}

/// Streams the graphs of a graph6 file. Blank lines are skipped. Errors
/// carry the 1-based line number.
pub fn ingest_graph6_file(path: &Path, lenient: bool) -> Result<impl Iterator<Item = Result<Graph>> + Send> {
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut reader = BufReader::new(file);
    let path = path.to_path_buf();
    let mut line_no = 0;
    let mut failed = false;
    Ok(std::iter::from_fn(move || loop {
        if failed {
            return None;
        }
        let mut buf = Vec::new();
        line_no += 1;
        match reader.read_until(b'\n', &mut buf) {
            Ok(0) => return None,
            Ok(_) => {}
            Err(source) => {
                failed = true;
                return Some(Err(Error::Io {
                    path: path.clone(),
                    source,
                }));
            }
        }
        if buf.iter().all(|b| b.is_ascii_whitespace()) {
            continue;
        }
        match from_graph6(&buf) {
            Ok(g) => return Some(Ok(g)),
            Err(e) if lenient => {
                eprintln!("warning: {}: line {line_no}: {e}; skipped", path.display());
            }
            Err(e) => {
                failed = true;
                return Some(Err(Error::Line {
                    line: line_no,
                    source: Box::new(e),
                }));
            }
        }
    }))
}

/// Fixed-seed G(n, p) samples; `p` cycles through [`SAMPLE_DENSITIES`].
/// With `both_connected`, samples whose graph or complement is disconnected
/// are redrawn.
pub fn sample_graphs(n: usize, count: usize, seed: u64, both_connected: bool) -> impl Iterator<Item = Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64) << 32);
    (0..count).map(move |i| {
        let p = SAMPLE_DENSITIES[i % SAMPLE_DENSITIES.len()];
        loop {
            let mut rows = vec![0u64; n];
            for j in 1..n {
                for k in 0..j {
                    if rng.gen_bool(p) {
                        rows[j] |= 1 << k;
                        rows[k] |= 1 << j;
                    }
                }
            }
            let g = Graph::from_rows(rows).expect("symmetric by construction");
            if !both_connected || (is_connected(&g) && is_connected(&g.complement())) {
                return g;
            }
        }
    })
}

/// Named family members of order at most `max_n`, in a fixed order.
pub fn named_families(max_n: usize) -> Vec<Graph> {
    let mut specs = Vec::new();
    for n in 1..=max_n {
        specs.push(FamilySpec::Path(n));
        specs.push(FamilySpec::Complete(n));
        specs.push(FamilySpec::Cycle(n));
        specs.push(FamilySpec::StarPath(n));
        specs.push(FamilySpec::Star(n));
        for s in 1..=n / 2 {
            specs.push(FamilySpec::CompleteBipartite(s, n - s));
        }
        if n >= 2 {
            for s in 0..=(n - 2) / 2 {
                specs.push(FamilySpec::DoubleStar(s, n - 2 - s));
            }
        }
        for a in 0..n {
            for b in a.max(1)..n {
                if a + 2 * b < n {
                    specs.push(FamilySpec::Spider(a, b, n - 1 - a - b));
                }
            }
        }
        if n >= 3 {
            for p in 0..=n - 3 {
                for q in p..=n - 3 {
                    if p + 2 * q <= n - 3 {
                        specs.push(FamilySpec::TriangleSpider(p, q, n - 3 - p - q));
                        specs.push(FamilySpec::TripleStar(p, q, n - 3 - p - q));
                    }
                }
            }
            for pat in H2Pattern::ALL {
                specs.push(FamilySpec::H2(vec![pat; n - 3]));
            }
        }
        if n >= 5 {
            specs.push(FamilySpec::Example2(generate(&FamilySpec::Complete(n - 4)).expect("valid")));
            specs.push(FamilySpec::Example2(Graph::empty(n - 4).expect("valid")));
        }
    }
    // Invalid parameter combinations (for example Cycle(2)) are skipped.
    specs
        .iter()
        .filter(|s| s.order() <= max_n)
        .filter_map(|s| generate(s).ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_counts() {
        assert_eq!(enumerate_labeled(3, false).unwrap().count(), 8);
        assert_eq!(enumerate_labeled(3, true).unwrap().count(), 4);
        assert_eq!(enumerate_labeled(4, false).unwrap().count(), 64);
        assert_eq!(enumerate_labeled(4, true).unwrap().count(), 38);
        assert_eq!(enumerate_labeled(5, true).unwrap().count(), 728);
        assert!(enumerate_labeled(9, false).is_err());
    }

    #[test]
    fn tree_counts() {
        for n in 1..=7 {
            let trees: Vec<Graph> = enumerate_trees(n).unwrap().collect();
            assert_eq!(trees.len(), n.pow(n.saturating_sub(2) as u32), "n={n}");
            assert!(trees.iter().all(crate::structure::is_tree));
            let mut keys: Vec<String> = trees.iter().map(|g| crate::graph6::to_graph6(g).unwrap()).collect();
            keys.sort();
            keys.dedup();
            assert_eq!(keys.len(), trees.len(), "duplicates at n={n}");
        }
    }

    #[test]
    fn corpus_parsing() {
        let c = CorpusSpec::parse("labeled:6:connected", 0, false).unwrap();
        assert_eq!(
            c.source,
            CorpusSource::LabeledAll { min_n: 6, max_n: 6, connected_only: true }
        );
        assert_eq!(c.to_string(), "labeled:6:connected");
        let c = CorpusSpec::parse("trees:3-9", 0, false).unwrap();
        assert_eq!(c.source, CorpusSource::Trees { min_n: 3, max_n: 9 });
        assert!(CorpusSpec::parse("labeled:9", 0, false).is_err());
        assert!(CorpusSpec::parse("trees:13", 0, false).is_err());
        assert!(CorpusSpec::parse("bogus:3", 0, false).is_err());
        assert!(CorpusSpec::parse("random:10:5:both", 7, false).is_ok());
    }

    #[test]
    fn sampling_is_deterministic() {
        let a: Vec<Graph> = sample_graphs(10, 20, 42, true).collect();
        let b: Vec<Graph> = sample_graphs(10, 20, 42, true).collect();
        assert_eq!(a, b);
        assert!(a.iter().all(|g| is_connected(g) && is_connected(&g.complement())));
    }

    #[test]
    fn dedup_leaves_classes() {
        let c = CorpusSpec::parse("labeled:4:connected", 0, true).unwrap();
        assert_eq!(c.graphs().unwrap().count(), 6);
        let c = CorpusSpec::parse("labeled:5", 0, true).unwrap();
        assert_eq!(c.graphs().unwrap().count(), 34);
    }

    #[test]
    fn families_cover_orders() {
        let fams = named_families(8);
        assert!(fams.iter().all(|g| g.n() <= 8));
        assert!(fams.len() > 50);
    }
}
