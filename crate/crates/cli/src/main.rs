//! `sdiam`: Steiner diameters of small graphs from the command line.
//!
//! Exit codes: 0 ok, 1 violation or discrepancy, 2 parse error, 3 domain
//! error, 4 I/O error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::json;

use sdiam_core::harness::{run_suite, write_reports, CorpusSource, CorpusSpec, SuiteOptions};
use sdiam_core::recognizers::{recognize_sdiam3, Sdiam3Class};
use sdiam_core::steiner::{median_distance, steiner_distance, steiner_distance_oracle, steiner_report, Diameters};
use sdiam_core::structure::{is_connected, pairwise_distances};
use sdiam_core::verdict::parse_claim_list;
use sdiam_core::{from_graph6, generate, k_subsets, to_graph6, Error, FamilySpec, Graph, H2Pattern};

#[derive(Parser)]
#[command(name = "sdiam", version, about = "Steiner distances and Steiner diameters of small graphs")]
struct Cli {
    /// Print JSON on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Steiner k-diameter, k-radius and per-vertex k-eccentricities.
    Metrics {
        /// graph6 text, or @PATH to read the first line of a file.
        graph: String,
        k: usize,
        /// Include a Steiner tree realising the diameter.
        #[arg(long)]
        witness: bool,
    },
    /// Class of the Steiner 3-diameter, checked against direct computation.
    Classify { graph: String },
    /// Print the graph6 text of a named family member.
    Generate(FamilyArgs),
    /// Check claims over a corpus and write report.json and summary.csv.
    Verify {
        /// Comma separated claim ids, or `all`.
        #[arg(long)]
        claims: String,
        /// labeled:N[:connected], trees:N, file:PATH, families:N or
        /// random:N:COUNT[:both]. N may be a range A-B.
        #[arg(long)]
        corpus: String,
        /// Output directory.
        #[arg(long)]
        out: PathBuf,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        threads: Option<usize>,
        /// Seed for random corpora.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Drop isomorphic duplicates (orders up to 8).
        #[arg(long)]
        dedup: bool,
    },
    /// Compare the exact solver with the superset oracle (and the median
    /// formula for k = 3) on every k-set.
    OracleDiff { graph: String, k: usize },
}

#[derive(Args)]
#[command(group(ArgGroup::new("family").required(true).multiple(false)))]
struct FamilyArgs {
    #[arg(long, value_name = "N", group = "family")]
    path: Option<usize>,
    #[arg(long, value_name = "N", group = "family")]
    cycle: Option<usize>,
    #[arg(long, value_name = "N", group = "family")]
    complete: Option<usize>,
    #[arg(long, value_name = "S,T", value_delimiter = ',', group = "family")]
    complete_bipartite: Option<Vec<usize>>,
    /// Star with this many leaves.
    #[arg(long, value_name = "LEAVES", group = "family")]
    star: Option<usize>,
    #[arg(long, value_name = "S,T", value_delimiter = ',', group = "family")]
    double_star: Option<Vec<usize>>,
    #[arg(long, value_name = "A,B,C", value_delimiter = ',', group = "family")]
    spider: Option<Vec<usize>>,
    #[arg(long, value_name = "P,Q,R", value_delimiter = ',', group = "family")]
    triangle_spider: Option<Vec<usize>>,
    #[arg(long, value_name = "A,B,C", value_delimiter = ',', group = "family")]
    triple_star: Option<Vec<usize>>,
    /// Attachment patterns of the extra vertices: uvw, uv, vw, uw or v.
    #[arg(long, value_name = "PATTERNS", value_delimiter = ',', group = "family")]
    h2: Option<Vec<String>>,
    /// Star K_{1,n-3} with a pendant path of length 2 at the centre.
    #[arg(long, value_name = "N", group = "family")]
    star_path: Option<usize>,
    /// Four-vertex gadget around the complete graph K_N.
    #[arg(long, value_name = "N", group = "family")]
    example2_inner_complete: Option<usize>,
    /// Four-vertex gadget around an arbitrary graph.
    #[arg(long, value_name = "GRAPH", group = "family")]
    example2_inner: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e.root() {
        Error::Decode { .. } | Error::Parameter(_) | Error::Config(_) => 2,
        Error::Domain(_) | Error::Capacity(_) | Error::UnsupportedSize(_) => 3,
        Error::Io { .. } => 4,
        Error::Line { .. } => unreachable!("root strips line wrappers"),
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    match &cli.cmd {
        Command::Metrics { graph, k, witness } => metrics(cli.json, graph, *k, *witness),
        Command::Classify { graph } => classify(cli.json, graph),
        Command::Generate(f) => {
            let g = generate(&family(f)?)?;
            let text = to_graph6(&g)?;
            if cli.json {
                println!("{}", json!({ "graph6": text, "n": g.n(), "edges": g.edge_count() }));
            } else {
                println!("{text}");
            }
            Ok(0)
        }
        Command::Verify { claims, corpus, out, threads, seed, dedup } => {
            verify(cli.json, claims, corpus, out, *threads, *seed, *dedup)
        }
        Command::OracleDiff { graph, k } => oracle_diff(cli.json, graph, *k),
    }
}

fn read_graph(arg: &str) -> Result<Graph, Error> {
    match arg.strip_prefix('@') {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|source| Error::Io { path: PathBuf::from(path), source })?;
            let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
            from_graph6(line.as_bytes())
        }
        None => from_graph6(arg.trim().as_bytes()),
    }
}

fn metrics(as_json: bool, arg: &str, k: usize, witness: bool) -> Result<u8, Error> {
    let g = read_graph(arg)?;
    if k < 2 || k > g.n() {
        return Err(Error::Domain(format!("k = {k} outside 2..={}", g.n())));
    }
    let mut report = steiner_report(&g, k)?;
    if !witness {
        report.witness = None;
    }
    if as_json {
        println!("{}", serde_json::to_string(&report).expect("report serializes"));
        return Ok(0);
    }
    println!("n = {}, k = {k}", g.n());
    println!("sdiam_{k} = {}", report.sdiam);
    println!("srad_{k} = {}", report.srad);
    let ecc: Vec<String> = report.per_vertex_ecc.iter().map(|e| e.to_string()).collect();
    println!("e_{k} = [{}]", ecc.join(", "));
    if let Some(w) = &report.witness {
        println!("witness terminals = {:?}", w.terminals.to_vec());
        let edges: Vec<String> = w.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        println!("witness edges = [{}]", edges.join(", "));
    }
    Ok(0)
}

fn classify(as_json: bool, arg: &str) -> Result<u8, Error> {
    let g = read_graph(arg)?;
    if !is_connected(&g) {
        return Err(Error::Domain("classify needs a connected graph".into()));
    }
    let recognition = recognize_sdiam3(&g)?;
    let sdiam3 = Diameters::new(g.clone()).sdiam(3)?;
    let computed = Sdiam3Class::from_value(g.n(), sdiam3);
    let agree = match &recognition {
        Some(r) => r.class == computed,
        None => matches!(computed, Sdiam3Class::Other(_)),
    };
    if as_json {
        let out = json!({
            "class": computed,
            "sdiam3": sdiam3,
            "recognition": recognition,
            "agree": agree,
        });
        println!("{out}");
    } else {
        println!("class = {computed:?}");
        println!("sdiam_3 = {sdiam3}");
        match &recognition {
            Some(r) => {
                println!("recognizer = {}", r.recognizer);
                if let Some(s) = r.spider {
                    println!("spider = ({}, {}, {})", s.a, s.b, s.c);
                }
                if let Some(t) = r.triangle_spider {
                    println!("triangle spider = ({}, {}, {})", t.p, t.q, t.r);
                }
            }
            None => println!("recognizer = none (value outside 2, 3, n-1)"),
        }
    }
    if agree {
        Ok(0)
    } else {
        eprintln!("!!! DISCREPANCY: recognizer says {:?}, direct computation gives sdiam_3 = {sdiam3}",
            recognition.map(|r| r.class));
        Ok(1)
    }
}

fn triple(name: &str, v: &[usize]) -> Result<(usize, usize, usize), Error> {
    match *v {
        [a, b, c] => Ok((a, b, c)),
        _ => Err(Error::Parameter(format!("--{name} takes three values"))),
    }
}

fn pair(name: &str, v: &[usize]) -> Result<(usize, usize), Error> {
    match *v {
        [a, b] => Ok((a, b)),
        _ => Err(Error::Parameter(format!("--{name} takes two values"))),
    }
}

fn family(f: &FamilyArgs) -> Result<FamilySpec, Error> {
    Ok(if let Some(n) = f.path {
        FamilySpec::Path(n)
    } else if let Some(n) = f.cycle {
        FamilySpec::Cycle(n)
    } else if let Some(n) = f.complete {
        FamilySpec::Complete(n)
    } else if let Some(v) = &f.complete_bipartite {
        let (s, t) = pair("complete-bipartite", v)?;
        FamilySpec::CompleteBipartite(s, t)
    } else if let Some(l) = f.star {
        FamilySpec::Star(l)
    } else if let Some(v) = &f.double_star {
        let (s, t) = pair("double-star", v)?;
        FamilySpec::DoubleStar(s, t)
    } else if let Some(v) = &f.spider {
        let (a, b, c) = triple("spider", v)?;
        FamilySpec::Spider(a, b, c)
    } else if let Some(v) = &f.triangle_spider {
        let (p, q, r) = triple("triangle-spider", v)?;
        FamilySpec::TriangleSpider(p, q, r)
    } else if let Some(v) = &f.triple_star {
        let (a, b, c) = triple("triple-star", v)?;
        FamilySpec::TripleStar(a, b, c)
    } else if let Some(p) = &f.h2 {
        FamilySpec::H2(p.iter().map(|s| s.parse::<H2Pattern>()).collect::<Result<_, _>>()?)
    } else if let Some(n) = f.star_path {
        FamilySpec::StarPath(n)
    } else if let Some(m) = f.example2_inner_complete {
        FamilySpec::Example2(generate(&FamilySpec::Complete(m))?)
    } else if let Some(g) = &f.example2_inner {
        FamilySpec::Example2(read_graph(g)?)
    } else {
        unreachable!("clap requires one family")
    })
}

fn verify(
    as_json: bool,
    claims: &str,
    corpus: &str,
    out: &Path,
    threads: Option<usize>,
    seed: u64,
    dedup: bool,
) -> Result<u8, Error> {
    let claims = parse_claim_list(claims)?;
    let mut spec = CorpusSpec::parse(corpus, seed, dedup)?;
    if let CorpusSource::File { lenient, .. } = &mut spec.source {
        *lenient = std::env::var("GRAPH6_STRICT").is_ok_and(|v| v.trim() == "0");
    }
    if threads == Some(0) {
        return Err(Error::Config("--threads must be at least 1".into()));
    }
    let reports = run_suite(&claims, &spec, &SuiteOptions { threads, ..Default::default() })?;
    let (json_path, csv_path) = write_reports(&reports, out)?;
    let failed = reports.iter().any(|r| !r.verified());
    if as_json {
        println!("{}", serde_json::to_string(&reports).expect("reports serialize"));
    } else {
        println!("{:<14} {:>10} {:>10} {:>10} {:>10}", "claim", "checked", "violations", "vacuous", "outside");
        for r in &reports {
            println!(
                "{:<14} {:>10} {:>10} {:>10} {:>10}",
                r.claim_id.as_str(),
                r.graphs_checked,
                r.violation_count,
                r.vacuous,
                r.outside_range
            );
            for note in &r.notes {
                println!("  note {}: {} graphs, e.g. {}", note.flag, note.count, note.examples.join(" "));
            }
            for v in r.violations.iter().take(3) {
                println!("  VIOLATION {}: {}", v.graph, v.detail);
            }
        }
        println!("wrote {} and {}", json_path.display(), csv_path.display());
    }
    Ok(if failed { 1 } else { 0 })
}

fn oracle_diff(as_json: bool, arg: &str, k: usize) -> Result<u8, Error> {
    let g = read_graph(arg)?;
    let n = g.n();
    if n > 16 {
        return Err(Error::Capacity(format!("oracle-diff supports n <= 16, got {n}")));
    }
    if k == 0 || k > n {
        return Err(Error::Domain(format!("k = {k} outside 1..={n}")));
    }
    let dm = pairwise_distances(&g);
    let mut checked = 0u64;
    let mut diffs = Vec::new();
    for s in k_subsets(n, k) {
        checked += 1;
        let dp = steiner_distance(&g, s)?;
        let oracle = steiner_distance_oracle(&g, s)?;
        let median = (k == 3).then(|| {
            let t = s.to_vec();
            median_distance(&dm, t[0], t[1], t[2])
        });
        if dp != oracle || median.is_some_and(|m| m != oracle) {
            diffs.push(json!({ "terminals": s, "dp": dp, "oracle": oracle, "median": median }));
        }
    }
    if as_json {
        println!("{}", json!({ "k": k, "subsets": checked, "discrepancies": diffs }));
    } else {
        for d in &diffs {
            println!("{d}");
        }
        println!("{checked} subsets, {} discrepancies", diffs.len());
    }
    Ok(if diffs.is_empty() { 0 } else { 1 })
}
