//! Command-line interface.
//!
//! Exit codes: 0 success / property true; 3 property false (e.g. a poset is
//! not NRP, or a verify suite fails); 2 usage or input format errors;
//! 1 internal invariant violations.

use std::io::Read;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use posetdyn::census::{promotion_census, rowmotion_census, CensusOptions};
use posetdyn::dynamics::{
    k_evacuation, k_promotion_power, promotion_orbit, rowmotion_orbit, weak_labeling_to_ideal,
    ideal_to_weak_labeling,
};
use posetdyn::error::Error;
use posetdyn::fixtures::parse_spec;
use posetdyn::io::{export_dot, parse_poset, parse_tableau, serialize_poset, serialize_tableau, DotOptions};
use posetdyn::nrp::{
    nrp_check, nrp_search, GradingConvention, NrpOptions, SearchOptions,
};
use posetdyn::poset::{OrderIdeal, Poset};
use posetdyn::verify::{format_suite, run_all, run_suite, suite_names};
use posetdyn::IncreasingTableau;

#[derive(Parser)]
#[command(name = "posetdyn", version, about = "Rowmotion and K-promotion dynamics on finite posets")]
struct Cli {
    /// Number of worker threads for censuses and searches (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Output format for reports.
    #[arg(long, global = true, default_value = "json")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Build a poset from a spec string and print its JSON.
    ///
    /// Specs: chain:N, antichain:N, rect:AxB, staircase:N, propeller:K,
    /// cayley-moufang, freudenthal, P:a,b, fixture names (bee-hummingbird, N,
    /// N-prime, W, cube), combined with `*` (product), `+` (ordinal sum),
    /// dual(...), J(...).
    Build {
        spec: String,
        /// Write to a file instead of standard output.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Summarize a poset: size, rank, gradedness, bounds, ideal count.
    Show { poset: String },
    /// Apply K-promotion to a tableau (JSON on file or stdin with `-`).
    Promote {
        tableau: String,
        /// Apply the operator this many times (may be negative for inverse).
        #[arg(long, default_value = "1", allow_negative_numbers = true)]
        steps: i64,
        /// Apply the inverse operator.
        #[arg(long)]
        inverse: bool,
    },
    /// Apply K-evacuation to a tableau.
    Evacuate { tableau: String },
    /// Apply rowmotion to an ideal of P x c, encoded as a weak labeling:
    /// {"poset": P, "q": c, "labels": [0..=c per element]}.
    Rowmotion {
        ideal: String,
        #[arg(long, default_value = "1", allow_negative_numbers = true)]
        steps: i64,
    },
    /// Orbit cardinality (and representative) of a tableau under promotion,
    /// or of a weak-labeled ideal under rowmotion with --rowmotion.
    Orbit {
        input: String,
        #[arg(long)]
        rowmotion: bool,
    },
    /// Orbit-size census of K-promotion at height q, or of rowmotion on
    /// J(P x c) with --c.
    Census {
        poset: String,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        c: Option<usize>,
        /// Restrict the promotion census to packed tableaux.
        #[arg(long)]
        packed: bool,
    },
    /// NRP verification and classification search.
    #[command(subcommand)]
    Nrp (NrpCommand),
    /// Export a poset in DOT format.
    #[command(subcommand)]
    Export(ExportCommand),
    /// Run a named property suite (or `all`).
    Verify { suite: String },
}

#[derive(Subcommand)]
enum NrpCommand {
    /// Decide NRP rowmotion via the packed-tableau criterion.
    /// Exit 0 when NRP, 3 when not (witness tableau on stdout).
    Check {
        poset: String,
        /// Stop at the first witness.
        #[arg(long)]
        early_exit: bool,
    },
    /// Classify all bounded graded posets with at most N elements.
    Search {
        #[arg(long)]
        max_n: usize,
        /// Resume from / checkpoint into this file.
        #[arg(long)]
        resume: Option<std::path::PathBuf>,
        /// Grading convention to report (the search space is identical for
        /// bounded posets under both).
        #[arg(long, default_value = "rank")]
        convention: Convention,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Convention {
    Rank,
    Chains,
}

#[derive(Subcommand)]
enum ExportCommand {
    /// DOT digraph of the cover relation, ranked by element rank.
    Dot {
        poset: String,
        /// Color nodes by doubletree membership (red/blue/purple/black).
        #[arg(long)]
        color: bool,
        /// Attach the labels of this tableau (JSON file).
        #[arg(long)]
        tableau: Option<std::path::PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::EvacuationInconsistent => 1,
        Error::CapExceeded { .. } | Error::OrbitCapExceeded(_) => 1,
        _ => 2,
    }
}

/// Load a poset from a spec string, a file path, or stdin (`-`).
fn load_poset(arg: &str) -> Result<Poset, Error> {
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        return parse_poset(&text);
    }
    if let Ok(p) = parse_spec(arg) {
        return Ok(p);
    }
    if std::path::Path::new(arg).exists() {
        return parse_poset(&std::fs::read_to_string(arg)?);
    }
    // maybe inline JSON
    if arg.trim_start().starts_with('{') {
        return parse_poset(arg);
    }
    Err(Error::UnknownSpec(arg.to_string()))
}

fn load_tableau(arg: &str) -> Result<IncreasingTableau, Error> {
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        return parse_tableau(&text);
    }
    if std::path::Path::new(arg).exists() {
        return parse_tableau(&std::fs::read_to_string(arg)?);
    }
    if arg.trim_start().starts_with('{') {
        return parse_tableau(arg);
    }
    Err(Error::Format(format!("cannot read tableau from '{arg}'")))
}

/// Weak-labeled ideal input: reuses the tableau JSON schema with `q = c` and
/// labels in 0..=c.
#[derive(serde::Serialize, serde::Deserialize)]
struct WeakIdealJson {
    poset: serde_json::Value,
    q: usize,
    labels: Vec<usize>,
}

fn load_weak_ideal(arg: &str) -> Result<(Arc<Poset>, usize, Vec<usize>), Error> {
    let text = if arg == "-" {
        let mut t = String::new();
        std::io::stdin().read_to_string(&mut t)?;
        t
    } else if std::path::Path::new(arg).exists() {
        std::fs::read_to_string(arg)?
    } else {
        arg.to_string()
    };
    let w: WeakIdealJson = serde_json::from_str(&text)?;
    let poset = match &w.poset {
        serde_json::Value::String(path) => parse_poset(&std::fs::read_to_string(path)?)?,
        other => parse_poset(&other.to_string())?,
    };
    Ok((Arc::new(poset), w.q, w.labels))
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Build { spec, out } => {
            let p = load_poset(&spec)?;
            let text = serialize_poset(&p);
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => println!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Show { poset } => {
            let p = load_poset(&poset)?;
            let rd = p.rank_data();
            let ideal_count = p.count_ideals_capped(10_000_000);
            if cli.format == Format::Json {
                let summary = serde_json::json!({
                    "n": p.n(),
                    "covers": p.covers(),
                    "name": p.name(),
                    "rank": rd.rank,
                    "is_graded": rd.is_graded,
                    "equal_maximal_chains": p.has_equal_maximal_chains(),
                    "bounded": p.is_bounded(),
                    "ideal_count": ideal_count,
                    "elem_rank": rd.elem_rank,
                });
                println!("{}", serde_json::to_string_pretty(&summary)?);
            } else {
                println!("elements:  {}", p.n());
                println!("covers:    {:?}", p.covers());
                println!("rank:      {}", rd.rank);
                println!("graded:    {}", rd.is_graded);
                println!("bounded:   {}", p.is_bounded());
                match ideal_count {
                    Some(c) => println!("ideals:    {c}"),
                    None => println!("ideals:    more than 10000000"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Promote { tableau, steps, inverse } => {
            let t = load_tableau(&tableau)?;
            let k = if inverse { -steps } else { steps };
            println!("{}", serialize_tableau(&k_promotion_power(&t, k)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Evacuate { tableau } => {
            let t = load_tableau(&tableau)?;
            println!("{}", serialize_tableau(&k_evacuation(&t)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Rowmotion { ideal, steps } => {
            let (poset, c, labels) = load_weak_ideal(&ideal)?;
            let mut members = weak_labeling_to_ideal(&poset, c, &labels)?;
            let product = Poset::product(&poset, &Poset::chain(c));
            if steps >= 0 {
                for _ in 0..steps {
                    members = posetdyn::dynamics::rowmotion_set(&product, &members);
                }
            } else {
                return Err(Error::Format("negative rowmotion steps unsupported".into()));
            }
            let w = ideal_to_weak_labeling(&poset, c, &members)?;
            let out = WeakIdealJson {
                poset: serde_json::from_str(&serialize_poset(&poset))?,
                q: c,
                labels: w,
            };
            println!("{}", serde_json::to_string(&out)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Orbit { input, rowmotion } => {
            if rowmotion {
                let (poset, c, labels) = load_weak_ideal(&input)?;
                let members = weak_labeling_to_ideal(&poset, c, &labels)?;
                let product = Arc::new(Poset::product(&poset, &Poset::chain(c)));
                let ideal = OrderIdeal::new(&product, members)?;
                let orbit = rowmotion_orbit(&ideal, posetdyn::dynamics::DEFAULT_ORBIT_CAP, false)?;
                println!(
                    "{}",
                    serde_json::json!({
                        "cardinality": orbit.cardinality,
                        "representative_weak_labeling":
                            ideal_to_weak_labeling(&poset, c, orbit.representative.members())?,
                    })
                );
            } else {
                let t = load_tableau(&input)?;
                let orbit = promotion_orbit(&t, posetdyn::dynamics::DEFAULT_ORBIT_CAP, false)?;
                println!(
                    "{}",
                    serde_json::json!({
                        "cardinality": orbit.cardinality,
                        "representative": serde_json::from_str::<serde_json::Value>(
                            &serialize_tableau(&orbit.representative))?,
                    })
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Census { poset, q, c, packed } => {
            let p = Arc::new(load_poset(&poset)?);
            let opts = CensusOptions::default();
            let census = match (q, c) {
                (Some(q), None) => promotion_census(&p, q, packed, &opts)?,
                (None, Some(c)) => rowmotion_census(&p, c, &opts)?,
                _ => {
                    return Err(Error::Format(
                        "census needs exactly one of --q (promotion) or --c (rowmotion)".into(),
                    ))
                }
            };
            if cli.format == Format::Json {
                let orbits: Vec<serde_json::Value> = census
                    .orbit_sizes
                    .iter()
                    .map(|(size, count)| serde_json::json!({"size": size, "count": count}))
                    .collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "poset": p.name(),
                        "n": p.n(),
                        "packed": census.packed_only,
                        "total_states": census.total,
                        "orbits": orbits,
                    })
                );
            } else {
                println!("total states: {}", census.total);
                for (size, count) in &census.orbit_sizes {
                    println!("  {count} orbit(s) of size {size}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Nrp(NrpCommand::Check { poset, early_exit }) => {
            let p = Arc::new(load_poset(&poset)?);
            let opts = NrpOptions {
                early_exit,
                census: CensusOptions::default(),
            };
            let verdict = nrp_check(&p, &opts).map_err(Error::from)?;
            let witnesses: Vec<serde_json::Value> = verdict
                .witnesses
                .iter()
                .map(|w| {
                    Ok(serde_json::json!({
                        "q": w.q,
                        "orbit_size": w.orbit_size,
                        "tableau": serde_json::from_str::<serde_json::Value>(
                            &serialize_tableau(&w.representative))?,
                    }))
                })
                .collect::<Result<_, Error>>()?;
            println!(
                "{}",
                serde_json::json!({
                    "poset": p.name(),
                    "is_nrp": verdict.is_nrp,
                    "q_range": [verdict.q_lo, verdict.q_hi],
                    "vacuous": verdict.vacuous,
                    "witnesses": witnesses,
                })
            );
            Ok(if verdict.is_nrp {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
        Command::Nrp(NrpCommand::Search { max_n, resume, convention }) => {
            let opts = SearchOptions {
                convention: match convention {
                    Convention::Rank => GradingConvention::RankFunction,
                    Convention::Chains => GradingConvention::EqualChains,
                },
                checkpoint: resume.or_else(default_checkpoint_path),
                ..SearchOptions::default()
            };
            let report = nrp_search(max_n, &opts)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Export(ExportCommand::Dot { poset, color, tableau }) => {
            let p = load_poset(&poset)?;
            let t = match &tableau {
                Some(path) => Some(parse_tableau(&std::fs::read_to_string(path)?)?),
                None => None,
            };
            let dot = export_dot(
                &p,
                &DotOptions {
                    color_doubletree: color,
                    tableau: t.as_ref(),
                },
            );
            print!("{dot}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite } => {
            let results = if suite == "all" {
                run_all()?
            } else {
                vec![run_suite(&suite)?]
            };
            let mut all_pass = true;
            for r in &results {
                print!("{}", format_suite(r));
                all_pass &= r.passed();
            }
            if !all_pass {
                eprintln!("available suites: {}", suite_names().join(", "));
            }
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
    }
}

fn default_checkpoint_path() -> Option<std::path::PathBuf> {
    std::env::var_os("POSETDYN_CACHE_DIR")
        .map(|dir| std::path::Path::new(&dir).join("nrp-search-checkpoint.json"))
}
