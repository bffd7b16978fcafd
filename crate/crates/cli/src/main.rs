//! Command-line surface over the affine cluster-algebra toolkit.
//!
//! Exit codes: 0 success, 1 verification mismatch or runtime failure,
//! 2 usage/input errors, 3 quiver not affine, 4 enumeration budget exceeded.

use affclust::denominator::Variant;
use affclust::oracle::{oracle_hom_h, OracleConfig, DEFAULT_ORACLE_PRIME};
use affclust::seed::{
    denominator_vector, distinct_variables, enumerate_seeds, ExchangeMatrix, Seed, DEFAULT_NODE_CAP,
};
use affclust::verify::{find_path_to_objects, track_mutations, verify_denominators, VerifyConfig};
use affclust::{ClusterCategory, Error, Quiver};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

/// Hard cap on enumeration depth.
const MAX_DEPTH: usize = 12;

#[derive(Parser)]
#[command(
    name = "affclust",
    about = "Exact cluster variables and denominator verification for affine quivers",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Structured,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    Literal,
    Carveout,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Literal => Variant::Literal,
            VariantArg::Carveout => Variant::CarveOut,
        }
    }
}

#[derive(Debug, Args)]
struct Common {
    /// Quiver file: `vertices:`/`arrow:` text or a JSON document.
    #[arg(long)]
    quiver: PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
    /// Worker threads (0 = library default); never affects output bytes.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print the affine type tag and the null root.
    Classify {
        #[command(flatten)]
        common: Common,
    },
    /// Print the exceptional tubes: rank and regular-simple dimension vectors.
    Tubes {
        #[command(flatten)]
        common: Common,
    },
    /// Apply a mutation path to the initial seed and print the seed dump.
    Mutate {
        #[command(flatten)]
        common: Common,
        /// Comma-separated 1-based positions, e.g. `1,3,2`.
        #[arg(long, default_value = "")]
        path: String,
    },
    /// Enumerate seeds to the given depth; print every variable with its
    /// denominator vector.
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        /// Node cap for the breadth-first closure.
        #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
        cap: usize,
    },
    /// Hom dimension between two objects, e.g.
    /// `hom trans:i=1:k=0 tube:0:socle=2:len=1` or by dimension vector `0,1,1,0`.
    Hom {
        #[command(flatten)]
        common: Common,
        a: String,
        b: String,
    },
    /// Hom dimension recomputed by the random-representation oracle.
    OracleHom {
        #[command(flatten)]
        common: Common,
        a: String,
        b: String,
        #[arg(long, default_value_t = DEFAULT_ORACLE_PRIME)]
        prime: u64,
        /// RNG seed; fixed seed gives bit-identical output.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Track a cluster along a mutation path, re-base there and verify all
    /// denominators to the given depth against the Hom predictions.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated 1-based positions defining the initial cluster.
        #[arg(long, default_value = "", conflicts_with = "target")]
        path: String,
        /// Semicolon-separated object coordinates to reach by path search,
        /// e.g. `0,0,0,1;1,1,1,2;1,0,0,1;1,1,0,1`.
        #[arg(long)]
        target: Option<String>,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        /// Prediction variant deciding the exit code; literal is the
        /// mutation-validated rule.
        #[arg(long, value_enum, default_value = "literal")]
        variant: VariantArg,
        #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
        cap: usize,
    },
    /// Run the built-in Ã_3 worked example and check its golden values.
    ExampleA3 {
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::NotAffine(_) => 3,
                Error::BudgetExceeded(_) => 4,
                Error::InvalidInput(_) | Error::Io(_) => 2,
                _ => 1,
            })
        }
    }
}

fn configure_jobs(jobs: usize) {
    if jobs > 0 {
        // Ignore failure: the global pool can only be set once per process.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
}

fn parse_path(s: &str, n: usize) -> Result<Vec<usize>, Error> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            let k: usize = p
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad path entry `{p}`")))?;
            if k == 0 || k > n {
                return Err(Error::InvalidInput(format!(
                    "path position {k} out of range 1..{n}"
                )));
            }
            Ok(k - 1)
        })
        .collect()
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Classify { common } => {
            configure_jobs(common.jobs);
            let quiver = Quiver::load(&common.quiver)?;
            let euler = affclust::classify_affine(&quiver)?;
            match common.format {
                Format::Tsv => {
                    println!("{}, δ={}", euler.type_tag(), euler.null_root());
                }
                Format::Structured => {
                    let doc = serde_json::json!({
                        "type": euler.type_tag().to_string(),
                        "delta": euler.null_root().0,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Tubes { common } => {
            configure_jobs(common.jobs);
            let quiver = Quiver::load(&common.quiver)?;
            let cat = ClusterCategory::from_quiver(&quiver)?;
            match common.format {
                Format::Tsv => {
                    for (t, tube) in cat.tubes().iter().enumerate() {
                        println!("tube {t}: rank {}", tube.rank);
                        for (a, s) in tube.simples.iter().enumerate() {
                            println!("  simple {a}: {s}");
                        }
                    }
                    if cat.tubes().is_empty() {
                        println!("no exceptional tubes");
                    }
                }
                Format::Structured => {
                    let tubes: Vec<serde_json::Value> = cat
                        .tubes()
                        .iter()
                        .map(|t| {
                            serde_json::json!({
                                "rank": t.rank,
                                "simples": t.simples.iter().map(|s| s.0.clone()).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&tubes).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Mutate { common, path } => {
            configure_jobs(common.jobs);
            let quiver = Quiver::load(&common.quiver)?;
            let seed = Seed::initial(ExchangeMatrix::from_quiver(&quiver));
            let path = parse_path(&path, quiver.num_vertices())?;
            let out = seed.mutate_along(&path)?;
            print!("{}", out.dump());
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { common, depth, cap } => {
            configure_jobs(common.jobs);
            if depth > MAX_DEPTH {
                return Err(Error::InvalidInput(format!(
                    "depth {depth} exceeds the hard cap {MAX_DEPTH}"
                )));
            }
            let quiver = Quiver::load(&common.quiver)?;
            let seed = Seed::initial(ExchangeMatrix::from_quiver(&quiver));
            let seeds = enumerate_seeds(&seed, depth, cap)?;
            let vars = distinct_variables(&seeds);
            match common.format {
                Format::Tsv => {
                    println!("variable\tdenominator");
                    for v in &vars {
                        println!("{v}\t{}", denominator_vector(v));
                    }
                    println!("# seeds={} variables={}", seeds.len(), vars.len());
                }
                Format::Structured => {
                    let rows: Vec<serde_json::Value> = vars
                        .iter()
                        .map(|v| {
                            serde_json::json!({
                                "variable": v.to_string(),
                                "denominator": denominator_vector(v).0,
                            })
                        })
                        .collect();
                    let doc = serde_json::json!({
                        "seeds": seeds.len(),
                        "variables": rows,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Hom { common, a, b } => {
            configure_jobs(common.jobs);
            let quiver = Quiver::load(&common.quiver)?;
            let cat = ClusterCategory::from_quiver(&quiver)?;
            let a = cat.parse_object(&a)?;
            let b = cat.parse_object(&b)?;
            println!("{}", cat.hom(a, b));
            Ok(ExitCode::SUCCESS)
        }
        Command::OracleHom {
            common,
            a,
            b,
            prime,
            seed,
        } => {
            configure_jobs(common.jobs);
            let quiver = Quiver::load(&common.quiver)?;
            let cat = ClusterCategory::from_quiver(&quiver)?;
            let a = cat.parse_object(&a)?;
            let b = cat.parse_object(&b)?;
            let cfg = OracleConfig {
                prime,
                rng_seed: seed,
                ..OracleConfig::default()
            };
            println!("{}", oracle_hom_h(&cat, a, b, cfg)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            common,
            path,
            target,
            depth,
            variant,
            cap,
        } => {
            configure_jobs(common.jobs);
            if depth > MAX_DEPTH {
                return Err(Error::InvalidInput(format!(
                    "depth {depth} exceeds the hard cap {MAX_DEPTH}"
                )));
            }
            let quiver = Quiver::load(&common.quiver)?;
            let cat = ClusterCategory::from_quiver(&quiver)?;
            let path = match target {
                Some(objects) => {
                    let objs: Result<Vec<_>, _> = objects
                        .split(';')
                        .map(|s| cat.parse_object(s.trim()))
                        .collect();
                    find_path_to_objects(&cat, &objs?, MAX_DEPTH, cap)?
                }
                None => parse_path(&path, quiver.num_vertices())?,
            };
            let tracked = track_mutations(&cat, &path)?;
            let report = verify_denominators(&cat, &tracked, VerifyConfig { depth, cap })?;
            match common.format {
                Format::Tsv => print!("{}", report.to_tsv()),
                Format::Structured => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&report.to_json()).unwrap()
                    )
                }
            }
            let selected: Variant = variant.into();
            if report.mismatches(selected) == 0 {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::ExampleA3 { format, jobs } => {
            configure_jobs(jobs);
            let outcome = affclust::worked_example::run()?;
            match format {
                Format::Tsv => print!("{}", outcome.render()),
                Format::Structured => {
                    let rows: Vec<serde_json::Value> = outcome
                        .rows
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "pos": r.pos,
                                "object": r.object.to_string(),
                                "dim": r.dim.0,
                                "hom_row": r.hom_row,
                                "predicted_literal": r.predicted_literal,
                                "predicted_carveout": r.predicted_carveout,
                                "observed": r.observed,
                                "variable": r.variable,
                                "status": r.status,
                            })
                        })
                        .collect();
                    let doc = serde_json::json!({
                        "path": outcome.path.iter().map(|k| k + 1).collect::<Vec<_>>(),
                        "rows": rows,
                        "pass": outcome.pass(),
                        "failures": outcome.failures,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
            Ok(if outcome.pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
