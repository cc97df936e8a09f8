mod output;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::*;
use turan_core::constructions;
use turan_core::error::Error;
use turan_core::format::{self, FormatError};
use turan_core::hypergraph::{Hypergraph, VertexSet};
use turan_core::invariants::{
    check_hereditary, clique_number, find_hole, has_property, independence_number,
    HereditaryOutcome, PropertyPair,
};
use turan_core::link::{
    build_link_multigraph, extract_r_copy, find_heavy_triple, heavy_triple_threshold,
};
use turan_core::removal::{run_hole_removal, RemovalOutcome, RemovalParams};
use turan_core::search::{
    density_sequence, max_edges_avoiding, min_edges_with_property, DensityKind, MonotoneDirection,
    SearchResult,
};

/// Exact Turán-type computations on r-uniform hypergraphs: independence and
/// clique numbers, covering properties, holes, extremal searches, and the
/// verified claim suite.
#[derive(Parser)]
#[command(name = "turan", version, max_term_width = 100)]
struct Cli {
    /// Emit JSON instead of human-readable text
    #[arg(long, global = true)]
    json: bool,

    /// Worker-thread cap for parallel subset scans
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Node budget for branch-and-bound searches
    #[arg(long, global = true, default_value_t = 250_000)]
    budget: u64,

    /// Seed for randomized checks; never affects extremal values
    #[arg(long, global = true, default_value_t = 20240811)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Independence number of a hypergraph file
    Alpha { file: PathBuf },
    /// Clique number of a hypergraph file
    Omega { file: PathBuf },
    /// Does every q-subset span a p-clique?
    CheckProperty {
        file: PathBuf,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        p: u32,
    },
    /// Search for a minimum-width hole (a w-set with clique number v, w > a*v)
    FindHole {
        file: PathBuf,
        #[arg(long)]
        a: u32,
        /// Maximum width to consider (default: all of n)
        #[arg(long)]
        max_w: Option<u32>,
    },
    /// Verify the hereditary edge-count bound for sizes up to a*ell
    CheckHereditary {
        file: PathBuf,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        ell: u32,
    },
    /// Emit a named hypergraph (R0, R1, R2, R, T, T_minus, K<t>, balanced,
    /// t-prime, h1, h2, crossing)
    Construct(ConstructArgs),
    /// Does the host contain a copy of the pattern?
    Contains { host: PathBuf, pattern: PathBuf },
    /// Minimum edges of an n-vertex r-uniform hypergraph where every
    /// q-subset spans a p-clique
    SearchMin { n: u32, r: u32, q: u32, p: u32 },
    /// Maximum edges of an n-vertex hypergraph avoiding all pattern files
    SearchMax {
        n: u32,
        #[arg(required = true)]
        patterns: Vec<PathBuf>,
    },
    /// Exact density sequence over a range of n, with a monotonicity verdict
    DensitySeq {
        #[command(subcommand)]
        kind: DensityCommand,
    },
    /// Run the iterative hole-removal procedure and print the trace
    HoleRemoval {
        file: PathBuf,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        ell: u32,
        /// Skip the (q,p)-property precondition check
        #[arg(long)]
        unchecked: bool,
    },
    /// Link-multigraph argument over a 4-clique: multiplicities, heavy
    /// triple, and an explicit R-copy
    LinkArg {
        file: PathBuf,
        /// The 4-clique, e.g. 1,2,3,4
        #[arg(long, value_delimiter = ',')]
        clique: Vec<u32>,
        #[arg(long, default_value_t = 11)]
        threshold: u32,
    },
    /// Run every checkable claim and report pass/fail/skipped
    VerifyPaper,
}

#[derive(Args)]
struct ConstructArgs {
    /// Catalog name or family (balanced, t-prime, h1, h2, crossing)
    name: String,
    /// Vertex count (balanced, crossing: half size is n/2)
    #[arg(long)]
    n: Option<u32>,
    /// Uniformity (balanced)
    #[arg(long)]
    r: Option<u32>,
    /// Part count (balanced)
    #[arg(long)]
    a: Option<u32>,
    /// Independence target (h1 odd, h2 even)
    #[arg(long)]
    p: Option<u32>,
}

#[derive(Subcommand)]
enum DensityCommand {
    /// Minimum-edges-with-property densities (nondecreasing)
    MinProperty {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
    },
    /// Maximum-edges-avoiding densities (nonincreasing)
    MaxAvoiding {
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        #[arg(required = true)]
        patterns: Vec<PathBuf>,
    },
}

// exit codes: 0 ok, 1 claim failure or broken invariant, 2 usage, 3 file format
enum CliError {
    Usage(String),
    File(String),
    Failure(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::File(_) => 3,
            CliError::Failure(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::File(m) | CliError::Failure(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvariantViolation(_)
            | Error::MonotonicityViolation { .. }
            | Error::InexactDensityPoint { .. } => CliError::Failure(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::File(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 1 {
        // only the exhaustive subset scans use the pool; searches stay
        // single-threaded by contract
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

fn load(path: &Path) -> Result<Hypergraph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::File(format!("{}: {e}", path.display())))?;
    Ok(format::parse_text(&text)?)
}

fn emit<T: serde::Serialize>(json: bool, value: &T, human: String) {
    if json {
        println!("{}", serde_json::to_string(value).expect("serializable"));
    } else {
        println!("{human}");
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    match &cli.command {
        Command::Alpha { file } => {
            let h = load(file)?;
            let (value, witness) = independence_number(&h);
            emit(
                cli.json,
                &ValueWitness {
                    value,
                    witness: witness.to_vec(),
                },
                format!("{value}\nwitness {witness}"),
            );
        }
        Command::Omega { file } => {
            let h = load(file)?;
            let (value, witness) = clique_number(&h);
            emit(
                cli.json,
                &ValueWitness {
                    value,
                    witness: witness.to_vec(),
                },
                format!("{value}\nwitness {witness}"),
            );
        }
        Command::CheckProperty { file, q, p } => {
            let h = load(file)?;
            let verdict = has_property(&h, PropertyPair::new(*q, *p)?)?;
            let counterexample = verdict.counterexample();
            emit(
                cli.json,
                &PropertyResponse {
                    holds: verdict.holds(),
                    counterexample: counterexample.map(|s| s.to_vec()),
                },
                match counterexample {
                    None => "true".to_string(),
                    Some(s) => format!("false\ncounterexample {s}"),
                },
            );
        }
        Command::FindHole { file, a, max_w } => {
            let h = load(file)?;
            let max_w = max_w.unwrap_or(h.vertex_count());
            let hole = find_hole(&h, *a, max_w)?;
            emit(
                cli.json,
                &HoleResponse {
                    found: hole.is_some(),
                    hole: hole.map(|d| HoleBody {
                        vertices: d.set.to_vec(),
                        width: d.width,
                        clique_number: d.clique,
                        divisor: d.divisor,
                    }),
                },
                match hole {
                    None => "none".to_string(),
                    Some(d) => format!(
                        "hole {} width {} clique number {}",
                        d.set, d.width, d.clique
                    ),
                },
            );
        }
        Command::CheckHereditary { file, a, ell } => {
            let h = load(file)?;
            match check_hereditary(&h, *a, *ell, cli.seed)? {
                HereditaryOutcome::HoleFound(d) => {
                    emit(
                        cli.json,
                        &HereditaryResponse {
                            hole: Some(HoleBody {
                                vertices: d.set.to_vec(),
                                width: d.width,
                                clique_number: d.clique,
                                divisor: d.divisor,
                            }),
                            rows: vec![],
                            min_slack: None,
                            fully_exhaustive: None,
                        },
                        format!(
                            "precondition failed: hole {} width {} clique number {}",
                            d.set, d.width, d.clique
                        ),
                    );
                    return Ok(ExitCode::from(1));
                }
                HereditaryOutcome::Report(rep) => {
                    let mut human = format!(
                        "size block short bound min slack mode\n{}",
                        rep.rows
                            .iter()
                            .map(|r| format!(
                                "{:>4} {:>5} {:>5} {:>5} {:>3} {:>5} {}",
                                r.subset_size,
                                r.block_size,
                                r.short_blocks,
                                r.bound,
                                r.min_edges,
                                r.slack,
                                if r.exhaustive {
                                    "exhaustive"
                                } else {
                                    "sampled"
                                }
                            ))
                            .collect::<Vec<_>>()
                            .join("\n")
                    );
                    human.push_str(&format!("\nmin slack {}", rep.min_slack));
                    emit(
                        cli.json,
                        &HereditaryResponse {
                            hole: None,
                            rows: rep
                                .rows
                                .iter()
                                .map(|r| HereditaryRowBody {
                                    subset_size: r.subset_size,
                                    block_size: r.block_size,
                                    short_blocks: r.short_blocks,
                                    bound: r.bound,
                                    min_edges: r.min_edges,
                                    slack: r.slack,
                                    witness: r.witness.to_vec(),
                                    exhaustive: r.exhaustive,
                                })
                                .collect(),
                            min_slack: Some(rep.min_slack),
                            fully_exhaustive: Some(rep.fully_exhaustive),
                        },
                        human,
                    );
                    if rep.min_slack < 0 {
                        return Ok(ExitCode::from(1));
                    }
                }
            }
        }
        Command::Construct(args) => {
            let h = construct(args)?;
            if cli.json {
                println!("{}", format::to_json(&h));
            } else {
                print!("{}", format::write_text(&h));
            }
        }
        Command::Contains { host, pattern } => {
            let h = load(host)?;
            let p = load(pattern)?;
            let embedding = h.find_copy_of(&p)?;
            emit(
                cli.json,
                &ContainsResponse {
                    contains: embedding.is_some(),
                    embedding: embedding.clone(),
                },
                match embedding {
                    None => "false".to_string(),
                    Some(map) => format!(
                        "true\nembedding {}",
                        map.iter()
                            .enumerate()
                            .map(|(i, v)| format!("{}->{v}", i + 1))
                            .collect::<Vec<_>>()
                            .join(" ")
                    ),
                },
            );
        }
        Command::SearchMin { n, r, q, p } => {
            let res = min_edges_with_property(*n, *r, *q, *p, cli.budget)?;
            print_search(cli.json, &res);
        }
        Command::SearchMax { n, patterns } => {
            let pats: Vec<Hypergraph> =
                patterns.iter().map(|p| load(p)).collect::<Result<_, _>>()?;
            let res = max_edges_avoiding(*n, &pats, cli.budget, None)?;
            print_search(cli.json, &res);
        }
        Command::DensitySeq { kind } => {
            let seq = match kind {
                DensityCommand::MinProperty { r, q, p, from, to } => density_sequence(
                    &DensityKind::MinProperty {
                        r: *r,
                        q: *q,
                        p: *p,
                    },
                    *from..=*to,
                    cli.budget,
                )?,
                DensityCommand::MaxAvoiding { from, to, patterns } => {
                    let pats: Vec<Hypergraph> =
                        patterns.iter().map(|p| load(p)).collect::<Result<_, _>>()?;
                    density_sequence(
                        &DensityKind::MaxAvoiding { patterns: &pats },
                        *from..=*to,
                        cli.budget,
                    )?
                }
            };
            let direction = match seq.direction {
                MonotoneDirection::Nondecreasing => "nondecreasing",
                MonotoneDirection::Nonincreasing => "nonincreasing",
            };
            let mut csv = String::from("n,value,density");
            for p in &seq.points {
                csv.push_str(&format!("\n{},{},{}", p.n, p.value, p.density));
            }
            csv.push_str(&format!("\nmonotone {direction}"));
            emit(
                cli.json,
                &DensityResponse {
                    points: seq.points.clone(),
                    direction,
                },
                csv,
            );
        }
        Command::HoleRemoval {
            file,
            a,
            q,
            p,
            ell,
            unchecked,
        } => {
            let h = load(file)?;
            let trace = run_hole_removal(
                &h,
                RemovalParams {
                    divisor: *a,
                    q: *q,
                    p: *p,
                    block: *ell,
                },
                !unchecked,
            )?;
            let outcome = match trace.outcome {
                RemovalOutcome::HoleFree => "hole-free",
                RemovalOutcome::ExcessExhausted => "excess-exhausted",
            };
            let mut human = String::from("step removed width clique q p excess");
            for (i, s) in trace.steps.iter().enumerate() {
                human.push_str(&format!(
                    "\n{:>4} {} {} {} {} {} {}",
                    i, s.hole.set, s.hole.width, s.hole.clique, s.q, s.p, s.excess
                ));
            }
            human.push_str(&format!(
                "\noutcome {outcome}: {} vertices remain, ({},{}) excess {}",
                trace.remaining.card(),
                trace.terminal_q,
                trace.terminal_p,
                trace.terminal_excess
            ));
            emit(
                cli.json,
                &RemovalResponse {
                    steps: trace
                        .steps
                        .iter()
                        .map(|s| RemovalStepBody {
                            removed: s.hole.set.to_vec(),
                            width: s.hole.width,
                            clique_number: s.hole.clique,
                            q: s.q,
                            p: s.p,
                            excess: s.excess,
                        })
                        .collect(),
                    outcome,
                    remaining: trace.remaining.to_vec(),
                    terminal_q: trace.terminal_q,
                    terminal_p: trace.terminal_p,
                    terminal_excess: trace.terminal_excess,
                    terminal_edges: trace.terminal.edge_count(),
                },
                human,
            );
        }
        Command::LinkArg {
            file,
            clique,
            threshold,
        } => {
            let h = load(file)?;
            let base = VertexSet::from_vertices(clique)?;
            let m = build_link_multigraph(&h, base)?;
            let total = m.total();
            let thr = heavy_triple_threshold(h.vertex_count()).ok();
            let heavy = find_heavy_triple(&m, *threshold);
            let embedding = match &heavy {
                Some(ht) => Some(extract_r_copy(&h, base, ht.set)?),
                None => None,
            };
            let mut human = format!("base {base}\ntotal multiplicity {total}");
            if let Some(t) = thr {
                human.push_str(&format!(
                    "\nthreshold {t} ({})",
                    if total > t {
                        "exceeded"
                    } else {
                        "not exceeded"
                    }
                ));
            }
            match &heavy {
                Some(ht) => {
                    human.push_str(&format!("\nheavy triple {} weight {}", ht.set, ht.weight));
                    if let Some(map) = &embedding {
                        human.push_str(&format!(
                            "\nR-copy {}",
                            map.iter()
                                .enumerate()
                                .map(|(i, v)| format!("{}->{v}", i + 1))
                                .collect::<Vec<_>>()
                                .join(" ")
                        ));
                    }
                }
                None => human.push_str(&format!("\nno triple of weight >= {threshold}")),
            }
            emit(
                cli.json,
                &LinkResponse {
                    base: base.to_vec(),
                    total_multiplicity: total,
                    threshold: thr,
                    exceeds_threshold: thr.map(|t| total > t),
                    heavy_triple: heavy.as_ref().map(|ht| ht.set.to_vec()),
                    triple_weight: heavy.as_ref().map(|ht| ht.weight),
                    embedding,
                },
                human,
            );
        }
        Command::VerifyPaper => {
            let claims = report::run_all(cli.budget, cli.seed);
            let failed = claims
                .iter()
                .filter(|c| c.status == report::Status::Fail)
                .count();
            let skipped = claims
                .iter()
                .filter(|c| c.status == report::Status::SkippedBudget)
                .count();
            let passed = claims.len() - failed - skipped;
            if cli.json {
                #[derive(serde::Serialize)]
                struct Out<'a> {
                    claims: &'a [report::ClaimReport],
                    passed: usize,
                    failed: usize,
                    skipped: usize,
                }
                println!(
                    "{}",
                    serde_json::to_string(&Out {
                        claims: &claims,
                        passed,
                        failed,
                        skipped
                    })
                    .expect("serializable")
                );
            } else {
                for c in &claims {
                    let tag = match c.status {
                        report::Status::Pass => "pass",
                        report::Status::Fail => "FAIL",
                        report::Status::SkippedBudget => "skip",
                    };
                    println!(
                        "[{tag}] {}: {} | expected {} | got {}",
                        c.id, c.subject, c.expected, c.computed
                    );
                }
                println!("{passed} passed, {failed} failed, {skipped} skipped-budget");
            }
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_search(json: bool, res: &SearchResult) {
    emit(
        json,
        &SearchResponse {
            value: res.value,
            witness: res.witness.clone(),
            proved_optimal: res.proved_optimal,
            nodes: res.nodes_explored,
        },
        format!(
            "{} ({} after {} nodes, {:?})\n{}",
            res.value,
            if res.proved_optimal {
                "proved optimal"
            } else {
                "incumbent only"
            },
            res.nodes_explored,
            res.elapsed,
            format::write_text(&res.witness).trim_end()
        ),
    );
}

fn construct(args: &ConstructArgs) -> Result<Hypergraph, CliError> {
    let need = |opt: Option<u32>, flag: &str| {
        opt.ok_or_else(|| CliError::Usage(format!("construct {} needs --{flag}", args.name)))
    };
    let key = args.name.to_ascii_lowercase();
    Ok(match key.as_str() {
        "balanced" => constructions::balanced_union(
            need(args.n, "n")?,
            need(args.r, "r")?,
            need(args.a, "a")?,
        )?,
        "t-prime" | "t_prime" | "tprime" => constructions::t_prime(),
        "h1" => constructions::h1(need(args.p, "p")?)?,
        "h2" => constructions::h2(need(args.p, "p")?)?,
        "crossing" => {
            let n = need(args.n, "n")?;
            if n % 2 != 0 {
                return Err(CliError::Usage(
                    "construct crossing needs an even --n (two equal halves)".into(),
                ));
            }
            constructions::crossing_construction(n / 2)?
        }
        _ => constructions::catalog(&args.name)?,
    })
}
