use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use optimal1p::{
    enumerate_graphs, make_xw, mutate_2switch, random_optimal, recognize_with, Algorithm,
    DynamicGraph, Error, Options, WorkOrder,
};
use optimal1p_io::formats::{dot, rotation, trace};
use optimal1p_io::manifest::{self, Entry};
use optimal1p_io::{bench, Format};

/// Recognize and generate optimal 1-planar graphs.
#[derive(Parser)]
#[command(name = "optimal1p", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test whether a graph is optimal 1-planar.
    Recognize(RecognizeArgs),
    /// Write extended wheels, random, enumerated or mutated graphs.
    Generate(GenerateArgs),
    /// Time both engines on random graphs and print CSV.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Linear,
    Quadratic,
    /// Only accept 5-connected optimal 1-planar graphs.
    SrOnly,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Stack,
    Queue,
    Random,
}

#[derive(Args)]
struct RecognizeArgs {
    /// Input file; `-` reads stdin.
    input: PathBuf,
    /// Input format; guessed from the extension when omitted.
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long, value_enum, default_value = "linear")]
    algorithm: AlgorithmArg,
    /// Order in which pending reductions are taken.
    #[arg(long, value_enum, default_value = "stack")]
    order: OrderArg,
    /// Seed for `--order random`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the embedding of an accepted graph as a rotation system.
    #[arg(long, value_name = "FILE")]
    emit_embedding: Option<PathBuf>,
    /// Write the embedding of an accepted graph as DOT.
    #[arg(long, value_name = "FILE")]
    dot: Option<PathBuf>,
    /// Write the applied reductions.
    #[arg(long, value_name = "FILE")]
    trace: Option<PathBuf>,
    /// Print run counters.
    #[arg(long)]
    stats: bool,
    /// Skip rebuilding and checking the embedding before accepting.
    #[arg(long)]
    no_certify: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Xw,
    Random,
    Enumerate,
    Mutate,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(value_enum)]
    kind: Kind,
    /// Number of vertices (random, enumerate).
    #[arg(long)]
    n: Option<usize>,
    /// Wheel parameter: `XW_2k` has `2k + 2` vertices.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of graphs (random, mutate), with consecutive seeds.
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Graph to mutate.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output directory; graphs go to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: Format,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated vertex counts.
    #[arg(long, value_delimiter = ',', default_value = "10000,100000")]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    repeats: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Leave out the quadratic engine.
    #[arg(long)]
    linear_only: bool,
    /// Write the CSV here as well as to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.command {
        Command::Recognize(a) => recognize(a),
        Command::Generate(a) => generate(a),
        Command::Bench(a) => run_bench(a),
    };
    match res {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_graph(path: &Path, format: Option<Format>) -> anyhow::Result<DynamicGraph> {
    let text = if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin()).context("reading stdin")?
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let format = format.unwrap_or_else(|| Format::from_path(path));
    format
        .parse(&text)
        .map_err(|e| anyhow::anyhow!("{}:{e}", path.display()))
}

fn recognize(a: RecognizeArgs) -> anyhow::Result<ExitCode> {
    let g = read_graph(&a.input, a.format)?;
    let wants_embedding = a.emit_embedding.is_some() || a.dot.is_some();
    let opts = Options {
        algorithm: match a.algorithm {
            AlgorithmArg::Linear => Algorithm::Linear,
            AlgorithmArg::Quadratic => Algorithm::Quadratic,
            AlgorithmArg::SrOnly => Algorithm::FiveConnected,
        },
        order: match a.order {
            OrderArg::Stack => WorkOrder::Stack,
            OrderArg::Queue => WorkOrder::Queue,
            OrderArg::Random => WorkOrder::Random(a.seed),
        },
        certify: !a.no_certify || wants_embedding,
        ..Options::default()
    };
    let r = recognize_with(&g, &opts);
    if let Some(path) = &a.trace {
        fs::write(path, trace::write(&r.trace)).with_context(|| format!("writing {}", path.display()))?;
    }
    if a.stats {
        let s = &r.stats;
        println!("n={} m={}", g.n(), g.m());
        println!("applied_sr={} applied_cr={}", s.applied_sr, s.applied_cr);
        println!("unsuccessful={} renames={}", s.unsuccessful, s.renames);
        println!("candidates_scanned={}", s.candidates_scanned);
    }
    if !r.accepted {
        let why = r.failure.map_or_else(|| "rejected".to_string(), |f| f.to_string());
        println!("not optimal-1-planar: {why}");
        return Ok(ExitCode::from(1));
    }
    if let Some(s) = &r.skeleton {
        let emb = s.to_embedded();
        if let Some(path) = &a.emit_embedding {
            fs::write(path, rotation::write(&emb)).with_context(|| format!("writing {}", path.display()))?;
        }
        if let Some(path) = &a.dot {
            let poles = r.final_xw.as_ref().map_or(&[][..], |x| &x.poles[..]);
            fs::write(path, dot::write(&g, Some(&emb), poles))
                .with_context(|| format!("writing {}", path.display()))?;
        }
    }
    println!("optimal-1-planar k={}", r.final_k().unwrap_or(0));
    Ok(ExitCode::SUCCESS)
}

struct Sink {
    out: Option<PathBuf>,
    format: Format,
    entries: Vec<Entry>,
}

impl Sink {
    fn emit(&mut self, g: &DynamicGraph, provenance: String) -> anyhow::Result<()> {
        let text = self.format.write(g);
        let Some(dir) = &self.out else {
            print!("{text}");
            return Ok(());
        };
        let file = format!("g{:05}.{}", self.entries.len(), self.format.extension());
        fs::write(dir.join(&file), text).with_context(|| format!("writing {file}"))?;
        self.entries.push(Entry {
            file,
            format: self.format.name().to_string(),
            n: g.n(),
            m: g.m(),
            provenance,
        });
        Ok(())
    }

    fn finish(self) -> anyhow::Result<()> {
        if let Some(dir) = &self.out {
            fs::write(dir.join("manifest.tsv"), manifest::write(&self.entries)).context("writing manifest")?;
        }
        Ok(())
    }
}

fn need(v: Option<usize>, flag: &str) -> anyhow::Result<usize> {
    v.with_context(|| format!("--{flag} is required"))
}

fn generate(a: GenerateArgs) -> anyhow::Result<ExitCode> {
    if let Some(dir) = &a.out {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    let mut sink = Sink {
        out: a.out.clone(),
        format: a.format,
        entries: Vec::new(),
    };
    match a.kind {
        Kind::Xw => {
            let k = need(a.k, "k")?;
            let (g, _) = make_xw(k)?;
            sink.emit(&g, format!("xw k={k}"))?;
        }
        Kind::Random => {
            let n = need(a.n, "n")?;
            for i in 0..a.count as u64 {
                let seed = a.seed.wrapping_add(i);
                let gen = random_optimal(n, seed)?;
                sink.emit(
                    &gen.graph,
                    format!("random n={n} seed={seed} start_k={} cubes={}", gen.start_k, gen.cube_count()),
                )?;
            }
        }
        Kind::Enumerate => {
            let n = need(a.n, "n")?;
            let graphs = match enumerate_graphs(n) {
                Ok(v) => v,
                Err(e @ Error::EnumerationRange { .. }) => bail!(e),
                Err(e) => return Err(e.into()),
            };
            if graphs.is_empty() {
                eprintln!("note: {}", Error::UnreachableSize(n));
            }
            if sink.out.is_some() {
                for (i, (g, _)) in graphs.iter().enumerate() {
                    sink.emit(g, format!("enumerate n={n} class={i}"))?;
                }
            }
            println!("{}", graphs.len());
        }
        Kind::Mutate => {
            let path = a.input.as_ref().context("--input is required")?;
            let g = read_graph(path, None)?;
            for i in 0..a.count as u64 {
                let seed = a.seed.wrapping_add(i);
                let h = mutate_2switch(&g, seed)?;
                sink.emit(&h, format!("mutate input={} seed={seed}", path.display()))?;
            }
        }
    }
    sink.finish()?;
    Ok(ExitCode::SUCCESS)
}

fn run_bench(a: BenchArgs) -> anyhow::Result<ExitCode> {
    let mut rows = Vec::new();
    for &n in &a.sizes {
        rows.push(bench::measure(n, Algorithm::Linear, a.repeats, a.seed)?);
        if !a.linear_only {
            rows.push(bench::measure(n, Algorithm::Quadratic, a.repeats, a.seed)?);
        }
    }
    let csv = bench::csv(&rows);
    print!("{csv}");
    if let Some(path) = &a.out {
        fs::write(path, &csv).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(ExitCode::SUCCESS)
}
