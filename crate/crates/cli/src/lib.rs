//! Subcommands of `wlcp`. Each command writes its result to the given sink and
//! reports failures with the process exit code they map to.

use std::fmt;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use wheeler_lcp::oracle::oracle_lcp_full;
use wheeler_lcp::{
    compute_lcp, compute_lcp_semi_dfa, expand_lcp, gen_adversarial, gen_random_graph,
    gen_random_pseudoforest, gen_random_wheeler_semi_dfa, lcp_star, measure_adversarial,
    oracle_lcp_star, parse_graph_with_cap, semi_dfa_map, InfSupRanks, LabeledGraph, Side,
    SuccinctWheelerIndex, WheelerPseudoforest, CSV_HEADER, DEFAULT_SIGMA_CAP,
};

/// Exit status for semantic failures: the input is well-formed but invalid for
/// the requested operation.
pub const EXIT_SEMANTIC: u8 = 1;
/// Exit status for I/O, parse and usage failures.
pub const EXIT_IO: u8 = 2;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

impl Failure {
    pub fn semantic(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: EXIT_SEMANTIC,
            error: error.into(),
        }
    }

    pub fn io(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: EXIT_IO,
            error: error.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#}", self.error)
    }
}

type CmdResult = Result<(), Failure>;

trait IoContext<T> {
    fn io(self) -> Result<T, Failure>;
}

impl<T, E: Into<anyhow::Error>> IoContext<T> for Result<T, E> {
    fn io(self) -> Result<T, Failure> {
        self.map_err(Failure::io)
    }
}

#[derive(Debug, Parser)]
#[command(name = "wlcp", version, about = "LCP arrays of edge-labeled graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report determinism, pseudoforest shape and Wheeler axioms.
    Validate(ValidateArgs),
    /// LCP array of a general graph.
    Lcp(LcpArgs),
    /// Reduced LCP stream of a Wheeler pseudoforest.
    LcpStar(LcpStarArgs),
    /// Brute-force LCP array, or reduced LCP with --star.
    Oracle(OracleArgs),
    /// Expand a reduced LCP array through a map file.
    Expand(ExpandArgs),
    /// Build and serialize the index of a pseudoforest.
    Index(IndexArgs),
    /// Generate an instance.
    Gen(GenArgs),
    /// Baseline and traversal step counts on the adversarial family, as CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Graph file: header "n m sigma", then m lines "u v c".
    pub graph: PathBuf,
    /// Largest alphabet size accepted in the header.
    #[arg(long, default_value_t = DEFAULT_SIGMA_CAP)]
    pub cap: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    /// Any well-formed graph.
    Graph,
    /// A Wheeler pseudoforest in its node numbering.
    Pseudoforest,
    /// A Wheeler semi-DFA under the order given by --order.
    SemiDfa,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[command(flatten)]
    pub input: GraphInput,
    #[arg(long, value_enum, default_value_t = Mode::Pseudoforest)]
    pub mode: Mode,
    /// Node ids in Wheeler order, whitespace separated.
    #[arg(long, required_if_eq("mode", "semi-dfa"))]
    pub order: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LcpArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Treat the input as a Wheeler semi-DFA and rank strings from --order.
    #[arg(long, requires = "order")]
    pub semi_dfa: bool,
    #[arg(long, requires = "semi_dfa")]
    pub order: Option<PathBuf>,
    /// Also write the map from node copies to ranks.
    #[arg(long)]
    pub map: Option<PathBuf>,
    /// Also write the reduced pseudoforest.
    #[arg(long)]
    pub gis: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LcpStarArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Print in position order instead of emission order.
    #[arg(long)]
    pub by_position: bool,
    /// The input is a serialized index rather than a graph file.
    #[arg(long, conflicts_with = "emit_index")]
    pub from_index: bool,
    /// Write the serialized index here.
    #[arg(long)]
    pub emit_index: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Reduced LCP of a pseudoforest, by position.
    #[arg(long)]
    pub star: bool,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    /// The reduced pseudoforest.
    #[arg(long)]
    pub gis: PathBuf,
    /// Map file: lines "u<TAB>i|s<TAB>rank".
    #[arg(long)]
    pub map: PathBuf,
    /// Reduced LCP: lines "i<TAB>d" in any order.
    #[arg(long)]
    pub lcp_star: PathBuf,
}

#[derive(Debug, Args)]
pub struct IndexArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Write the serialized index here.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("family").required(true))]
pub struct GenArgs {
    /// The quadratic family with parameter k.
    #[arg(long, group = "family", value_name = "K")]
    pub adversarial: Option<usize>,
    /// Random Wheeler pseudoforest with this many nodes.
    #[arg(long, group = "family", value_name = "N")]
    pub pseudoforest: Option<usize>,
    /// Random general graph with this many nodes.
    #[arg(long, group = "family", value_name = "N", requires = "edges")]
    pub graph: Option<usize>,
    /// Random Wheeler semi-DFA with this many nodes.
    #[arg(long, group = "family", value_name = "N", requires = "order_out")]
    pub semi_dfa: Option<usize>,
    /// Edge count for --graph.
    #[arg(long)]
    pub edges: Option<usize>,
    /// User alphabet size for the random families.
    #[arg(long, default_value_t = 4)]
    pub sigma: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Where --semi-dfa writes its Wheeler order.
    #[arg(long)]
    pub order_out: Option<PathBuf>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Values of k, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "8,16,32,64")]
    pub ks: Vec<usize>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    let result = match &cli.command {
        Command::Validate(a) => cmd_validate(a, out),
        Command::Lcp(a) => cmd_lcp(a, out),
        Command::LcpStar(a) => cmd_lcp_star(a, out),
        Command::Oracle(a) => cmd_oracle(a, out),
        Command::Expand(a) => cmd_expand(a, out),
        Command::Index(a) => cmd_index(a, out),
        Command::Gen(a) => cmd_gen(a, out),
        Command::Bench(a) => cmd_bench(a, out),
    };
    result?;
    out.flush().io()
}

pub fn read_graph(path: &Path, cap: u32) -> Result<LabeledGraph, Failure> {
    let file = File::open(path)
        .with_context(|| format!("cannot open {}", path.display()))
        .io()?;
    parse_graph_with_cap(BufReader::new(file), cap)
        .with_context(|| format!("cannot parse {}", path.display()))
        .io()
}

fn read_text(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .io()
}

/// Whitespace-separated node ids; `%` starts a comment line.
pub fn parse_order(text: &str) -> anyhow::Result<Vec<usize>> {
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate() {
        if line.trim_start().starts_with('%') {
            continue;
        }
        for tok in line.split_whitespace() {
            out.push(
                tok.parse()
                    .with_context(|| format!("line {}: bad node id {tok:?}", k + 1))?,
            );
        }
    }
    Ok(out)
}

/// Lines `u<TAB>i|s<TAB>rank`, exactly one per node copy.
pub fn parse_map(text: &str) -> anyhow::Result<InfSupRanks> {
    let mut rows = Vec::new();
    for (k, line) in text.lines().enumerate() {
        if line.trim().is_empty() || line.starts_with('%') {
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        let [u, s, r] = f[..] else {
            bail!("line {}: expected three fields", k + 1)
        };
        let u: usize = u
            .parse()
            .with_context(|| format!("line {}: bad node", k + 1))?;
        let side =
            Side::from_code(s).ok_or_else(|| anyhow!("line {}: side must be i or s", k + 1))?;
        let r: usize = r
            .parse()
            .with_context(|| format!("line {}: bad rank", k + 1))?;
        rows.push((u, side, r));
    }
    if rows.len() % 2 != 0 {
        bail!("odd number of map lines");
    }
    let n = rows.len() / 2;
    let mut inf = vec![0; n];
    let mut sup = vec![0; n];
    for (u, side, r) in rows {
        if u == 0 || u > n {
            bail!("node {u} out of range 1..={n}");
        }
        let slot = match side {
            Side::Inf => &mut inf[u - 1],
            Side::Sup => &mut sup[u - 1],
        };
        if *slot != 0 {
            bail!("copy ({u}, {side}) listed twice");
        }
        *slot = r;
    }
    Ok(InfSupRanks::new(inf, sup))
}

/// Lines `i<TAB>d` in any order covering positions `2..=n`.
pub fn parse_lcp_star(text: &str) -> anyhow::Result<Vec<u64>> {
    let mut pairs = Vec::new();
    for (k, line) in text.lines().enumerate() {
        if line.trim().is_empty() || line.starts_with('%') {
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        let [i, d] = f[..] else {
            bail!("line {}: expected two fields", k + 1)
        };
        let i: usize = i
            .parse()
            .with_context(|| format!("line {}: bad position", k + 1))?;
        let d: u64 = d
            .parse()
            .with_context(|| format!("line {}: bad value", k + 1))?;
        pairs.push((i, d));
    }
    let mut out = vec![None; pairs.len()];
    for (i, d) in pairs {
        match out.get_mut(i.wrapping_sub(2)) {
            Some(slot @ None) => *slot = Some(d),
            Some(Some(_)) => bail!("position {i} listed twice"),
            None => bail!("position {i} out of range 2..={}", out.len() + 1),
        }
    }
    Ok(out.into_iter().map(Option::unwrap).collect())
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn cmd_validate(a: &ValidateArgs, out: &mut dyn Write) -> CmdResult {
    let g = read_graph(&a.input.graph, a.input.cap)?;
    writeln!(
        out,
        "nodes: {}\nedges: {}\nsigma: {}",
        g.n(),
        g.m(),
        g.sigma()
    )
    .io()?;
    writeln!(out, "deterministic: {}", yes(g.is_deterministic())).io()?;
    let forest = WheelerPseudoforest::from_graph(&g);
    writeln!(out, "pseudoforest: {}", yes(forest.is_ok())).io()?;
    let axioms = forest
        .as_ref()
        .map_err(|e| anyhow!("{e}"))
        .and_then(|p| p.check_wheeler_axioms().map_err(|v| anyhow!("{v}")));
    writeln!(out, "wheeler pseudoforest: {}", yes(axioms.is_ok())).io()?;
    match a.mode {
        Mode::Graph => Ok(()),
        Mode::Pseudoforest => axioms.map_err(Failure::semantic),
        Mode::SemiDfa => {
            let order =
                parse_order(&read_text(a.order.as_ref().expect("required by clap"))?).io()?;
            let r = semi_dfa_map(&g, &order);
            writeln!(out, "wheeler semi-dfa: {}", yes(r.is_ok())).io()?;
            r.map(drop).map_err(Failure::semantic)
        }
    }
}

fn write_lcp(out: &mut dyn Write, text: &str) -> CmdResult {
    out.write_all(text.as_bytes()).io()
}

fn write_file(path: &Path, bytes: impl AsRef<[u8]>) -> CmdResult {
    std::fs::write(path, bytes)
        .with_context(|| format!("cannot write {}", path.display()))
        .io()
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    File::create(path)
        .map(BufWriter::new)
        .with_context(|| format!("cannot create {}", path.display()))
        .io()
}

pub fn cmd_lcp(a: &LcpArgs, out: &mut dyn Write) -> CmdResult {
    let g = read_graph(&a.input.graph, a.input.cap)?;
    let result = match &a.order {
        Some(path) if a.semi_dfa => {
            let order = parse_order(&read_text(path)?).io()?;
            compute_lcp_semi_dfa(&g, &order)
        }
        _ => compute_lcp(&g),
    }
    .map_err(Failure::semantic)?;
    if let Some(path) = &a.map {
        write_file(path, result.gis.map.to_text().as_bytes())?;
    }
    if let Some(path) = &a.gis {
        write_file(path, result.gis.forest.to_graph().to_text().as_bytes())?;
    }
    write_lcp(out, &result.lcp.to_text())
}

fn load_index(a: &LcpStarArgs) -> Result<SuccinctWheelerIndex, Failure> {
    if a.from_index {
        let file = File::open(&a.input.graph)
            .with_context(|| format!("cannot open {}", a.input.graph.display()))
            .io()?;
        return SuccinctWheelerIndex::read_from(BufReader::new(file)).io();
    }
    let g = read_graph(&a.input.graph, a.input.cap)?;
    let p = WheelerPseudoforest::from_graph(&g).map_err(Failure::semantic)?;
    SuccinctWheelerIndex::build(&p).map_err(Failure::semantic)
}

pub fn cmd_lcp_star(a: &LcpStarArgs, out: &mut dyn Write) -> CmdResult {
    let idx = load_index(a)?;
    if let Some(path) = &a.emit_index {
        let mut w = create(path)?;
        idx.write_to(&mut w).io()?;
        w.flush().io()?;
    }
    let n = idx.n();
    let mut by_pos = vec![0u64; n.saturating_sub(1)];
    let mut werr = None;
    let report = lcp_star(&idx, |i, d| {
        if a.by_position {
            by_pos[i - 2] = d;
        } else if werr.is_none() {
            if let Err(e) = writeln!(out, "{i}\t{d}") {
                werr = Some(e);
            }
        }
    })
    .map_err(Failure::semantic)?;
    if let Some(e) = werr {
        return Err(Failure::io(e));
    }
    if a.by_position {
        for (k, d) in by_pos.iter().enumerate() {
            writeln!(out, "{}\t{d}", k + 2).io()?;
        }
    }
    eprintln!(
        "emitted {} pairs, {} forward steps, work {}",
        report.emitted, report.forward_steps, report.work
    );
    Ok(())
}

pub fn cmd_oracle(a: &OracleArgs, out: &mut dyn Write) -> CmdResult {
    let g = read_graph(&a.input.graph, a.input.cap)?;
    if a.star {
        let p = WheelerPseudoforest::from_graph(&g).map_err(Failure::semantic)?;
        let v = oracle_lcp_star(&p).map_err(Failure::semantic)?;
        for (k, d) in v.iter().enumerate() {
            writeln!(out, "{}\t{d}", k + 2).io()?;
        }
        return Ok(());
    }
    write_lcp(out, &oracle_lcp_full(&g).to_text())
}

pub fn cmd_expand(a: &ExpandArgs, out: &mut dyn Write) -> CmdResult {
    let g = read_graph(&a.gis, DEFAULT_SIGMA_CAP)?;
    let gis = WheelerPseudoforest::from_graph(&g).map_err(Failure::semantic)?;
    let map = parse_map(&read_text(&a.map)?).io()?;
    let star = parse_lcp_star(&read_text(&a.lcp_star)?).io()?;
    let lcp = expand_lcp(&star, &gis, &map).map_err(Failure::semantic)?;
    write_lcp(out, &lcp.to_text())
}

pub fn cmd_index(a: &IndexArgs, out: &mut dyn Write) -> CmdResult {
    let g = read_graph(&a.input.graph, a.input.cap)?;
    let p = WheelerPseudoforest::from_graph(&g).map_err(Failure::semantic)?;
    let idx = SuccinctWheelerIndex::build(&p).map_err(Failure::semantic)?;
    let s = idx.space();
    writeln!(
        out,
        "n: {}\nsigma: {}\ncode width: {}",
        s.n, s.sigma, s.code_width
    )
    .io()?;
    writeln!(
        out,
        "payload bits: {} (bound {})",
        s.payload_bits(),
        s.payload_bound()
    )
    .io()?;
    writeln!(
        out,
        "C bits: {}\noverhead bits: {}",
        s.c_bits, s.overhead_bits
    )
    .io()?;
    if let Some(path) = &a.output {
        let mut w = create(path)?;
        idx.write_to(&mut w).io()?;
        w.flush().io()?;
    }
    Ok(())
}

pub fn cmd_gen(a: &GenArgs, out: &mut dyn Write) -> CmdResult {
    let text = if let Some(k) = a.adversarial {
        if k == 0 {
            return Err(Failure::io(anyhow!("--adversarial needs k >= 1")));
        }
        gen_adversarial(k).to_graph().to_text()
    } else if let Some(n) = a.pseudoforest {
        gen_random_pseudoforest(n, a.sigma, a.seed)
            .map_err(Failure::semantic)?
            .to_graph()
            .to_text()
    } else if let Some(n) = a.graph {
        let m = a.edges.expect("required by clap");
        gen_random_graph(n, m, a.sigma, a.seed)
            .map_err(Failure::semantic)?
            .to_text()
    } else {
        let n = a.semi_dfa.expect("one family is required");
        let (g, order) =
            gen_random_wheeler_semi_dfa(n, a.sigma, a.seed).map_err(Failure::semantic)?;
        let line: Vec<String> = order.iter().map(usize::to_string).collect();
        let path = a.order_out.as_ref().expect("required by clap");
        write_file(path, format!("{}\n", line.join(" ")).as_bytes())?;
        g.to_text()
    };
    match &a.output {
        Some(path) => write_file(path, text.as_bytes()),
        None => out.write_all(text.as_bytes()).io(),
    }
}

pub fn cmd_bench(a: &BenchArgs, out: &mut dyn Write) -> CmdResult {
    if let Some(&0) = a.ks.iter().find(|&&k| k == 0) {
        return Err(Failure::io(anyhow!("every k must be at least 1")));
    }
    let mut csv = format!("{CSV_HEADER}\n");
    for &k in &a.ks {
        csv.push_str(&measure_adversarial(k).to_csv());
        csv.push('\n');
    }
    match &a.output {
        Some(path) => write_file(path, csv.as_bytes()),
        None => out.write_all(csv.as_bytes()).io(),
    }
}
