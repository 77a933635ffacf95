use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use exotic_core::charp::count_report;
use exotic_core::joseph::{d_poly, d_poly_intro, joseph_poly, macdonald_span, Ambient, SubvarietyPresentation};
use exotic_core::nilcone::{exotic_jordan, is_in_nilcone, k_invariant, orbit_dim, representative, ExoticVector};
use exotic_core::partitions::{
    enumerate_bipartitions, enumerate_marked_partitions, BiPartition, MarkedPartition, Partition,
};
use exotic_core::verify::{run_suites, Suite, VerifyOptions};
use exotic_core::weyl::{d_sequence, special_element, weight_set_v_lambda, Weight, WeightSet};

/// Exotic nilpotent cone of Sp(2n): orbits, Joseph polynomials, point counts.
#[derive(Parser)]
#[command(name = "exotic", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct MarkedArgs {
    /// Partition, e.g. `2,1`.
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Marks, e.g. `1,0`; defaults to all zero.
    #[arg(long, default_value = "")]
    a: String,
}

impl MarkedArgs {
    fn parse(&self) -> exotic_core::Result<MarkedPartition> {
        MarkedPartition::parse(&self.lambda, &self.a)
    }
}

#[derive(Args)]
struct BiArgs {
    #[arg(long, default_value = "")]
    mu: String,
    #[arg(long, default_value = "")]
    nu: String,
}

impl BiArgs {
    fn parse(&self) -> exotic_core::Result<BiPartition> {
        Ok(BiPartition::new(Partition::parse(&self.mu)?, Partition::parse(&self.nu)?))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Listing {
    Marked,
    Bipartitions,
}

#[derive(Subcommand)]
enum Command {
    /// List marked partitions of n with their bi-partitions.
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Listing::Marked)]
        what: Listing,
    },
    /// Convert a marked partition to a bi-partition, or back.
    Convert {
        #[arg(long, conflicts_with_all = ["mu", "nu"])]
        lambda: Option<String>,
        #[arg(long, default_value = "")]
        a: String,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        nu: Option<String>,
    },
    /// The polynomial D(mu, nu).
    Dpoly {
        #[command(flatten)]
        bp: BiArgs,
        /// Use the block formula on consecutive ranges of |mu| and |nu|.
        #[arg(long)]
        intro: bool,
        /// Also report the dimension of the spanned Weyl group module.
        #[arg(long)]
        span: bool,
    },
    /// Joseph polynomial of a coordinate subspace cut by equations.
    Joseph {
        /// `exotic`, `ordinary`, or a weight list such as `1,0;0,1`.
        #[arg(long, default_value = "exotic")]
        ambient: String,
        #[arg(long)]
        n: Option<usize>,
        /// Weights spanning the subspace, `;`-separated.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        span: String,
        /// Weights of the equations, `;`-separated.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        eqs: String,
    },
    /// Marked partition of the orbit through a vector given as JSON.
    Invariant {
        /// JSON `{"n":..,"x1":[..],"x2_upper":[[i,j,"c"],..]}`; read from stdin if absent.
        #[arg(long)]
        vector: Option<String>,
    },
    /// Orbit representative of a marked partition.
    Rep {
        #[command(flatten)]
        mp: MarkedArgs,
    },
    /// Orbit dimension of a marked partition.
    Dim {
        #[command(flatten)]
        mp: MarkedArgs,
    },
    /// The element w_lambda, the d-sequence and the weights of V^lambda.
    Special {
        #[command(flatten)]
        mp: MarkedArgs,
    },
    /// Point counts over F_2 and F_4.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
        /// Allow n = 2, q = 4.
        #[arg(long)]
        long: bool,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Include the n = 2, q = 4 point count.
        #[arg(long)]
        long: bool,
    },
}

struct Failure(String);

impl From<exotic_core::Error> for Failure {
    fn from(e: exotic_core::Error) -> Self {
        Failure(e.to_string())
    }
}

struct Output {
    text: String,
    json: Value,
    /// False when a verification suite failed.
    passed: bool,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output { text, json, passed: true }
    }
}

fn parse_weights(s: &str) -> exotic_core::Result<Vec<Weight>> {
    s.split(';').map(str::trim).filter(|w| !w.is_empty()).map(Weight::parse).collect()
}

fn marked_json(mp: &MarkedPartition) -> Value {
    json!({ "marked": mp, "bipartition": mp.to_bipartition() })
}

fn run(command: &Command) -> Result<Output, Failure> {
    Ok(match command {
        Command::Enumerate { n, what: Listing::Marked } => {
            let mps = enumerate_marked_partitions(*n);
            Output::new(
                mps.iter().map(|m| format!("{m} -> {}\n", m.to_bipartition())).collect(),
                Value::Array(mps.iter().map(marked_json).collect()),
            )
        }
        Command::Enumerate { n, what: Listing::Bipartitions } => {
            let bps = enumerate_bipartitions(*n);
            Output::new(
                bps.iter().map(|b| format!("{b}\n")).collect(),
                serde_json::to_value(&bps).expect("serializable"),
            )
        }
        Command::Convert { lambda: Some(lambda), a, .. } => {
            let mp = MarkedPartition::parse(lambda, a)?;
            Output::new(format!("{}\n", mp.to_bipartition()), marked_json(&mp))
        }
        Command::Convert { lambda: None, mu, nu, .. } => {
            let bp = BiPartition::new(
                Partition::parse(mu.as_deref().unwrap_or(""))?,
                Partition::parse(nu.as_deref().unwrap_or(""))?,
            );
            let mp = MarkedPartition::from_bipartition(&bp)?;
            Output::new(format!("{mp}\n"), marked_json(&mp))
        }
        Command::Dpoly { bp, intro, span } => {
            let bp = bp.parse()?;
            let f = if *intro { d_poly_intro(&bp.mu, &bp.nu) } else { d_poly(&bp)? };
            let mut json = json!({ "bipartition": bp, "poly": f, "text": f.to_string() });
            let mut text = format!("{f}\n");
            if *span {
                let (dim, _) = macdonald_span(&f, bp.weight() as usize)?;
                json["span_dim"] = json!(dim);
                text.push_str(&format!("span dimension {dim}\n"));
            }
            Output::new(text, json)
        }
        Command::Joseph { ambient, n, span, eqs } => {
            let span = parse_weights(span)?;
            let eqs = parse_weights(eqs)?;
            let rank = n.or_else(|| span.iter().chain(eqs.iter()).map(Weight::rank).next());
            let need_rank = || rank.ok_or_else(|| Failure("--n is needed for a named ambient".into()));
            let ambient = match ambient.as_str() {
                "exotic" => Ambient::Exotic(need_rank()?),
                "ordinary" => Ambient::Ordinary(need_rank()?),
                list => Ambient::Weights(parse_weights(list)?.into_iter().collect()),
            };
            let pres = SubvarietyPresentation::new(ambient, span.into_iter().collect::<WeightSet>(), eqs)?;
            let f = joseph_poly(&pres);
            Output::new(format!("{f}\n"), json!({ "presentation": pres, "poly": f, "text": f.to_string() }))
        }
        Command::Invariant { vector } => {
            let raw = match vector {
                Some(v) => v.clone(),
                None => {
                    let mut s = String::new();
                    std::io::stdin().read_to_string(&mut s).map_err(|e| Failure(e.to_string()))?;
                    s
                }
            };
            let v: ExoticVector = serde_json::from_str(&raw).map_err(|e| Failure(e.to_string()))?;
            if !is_in_nilcone(&v) {
                return Err(exotic_core::Error::NotInNilcone.into());
            }
            let jordan = exotic_jordan(&v)?;
            let mp = k_invariant(&v)?;
            Output::new(
                format!("{mp} -> {}\n", mp.to_bipartition()),
                json!({ "jordan": jordan, "marked": mp, "bipartition": mp.to_bipartition() }),
            )
        }
        Command::Rep { mp } => {
            let mp = mp.parse()?;
            let v = representative(&mp);
            Output::new(format!("{v}\n"), serde_json::to_value(&v).expect("serializable"))
        }
        Command::Dim { mp } => {
            let mp = mp.parse()?;
            let d = orbit_dim(&mp);
            Output::new(format!("{d}\n"), json!({ "marked": mp, "dim": d }))
        }
        Command::Special { mp } => {
            let mp = mp.parse()?;
            let w = special_element(&mp)?;
            let d = d_sequence(&mp);
            let v = weight_set_v_lambda(&mp)?;
            let d_text: Vec<String> = d.iter().map(u32::to_string).collect();
            Output::new(
                format!("w = {w}\nd = ({})\nV^lambda = {v}\n", d_text.join(", ")),
                json!({ "marked": mp, "w": w, "d": d, "v_lambda": v }),
            )
        }
        Command::Count { n, q, long } => {
            let r = count_report(*n, *q, *long)?;
            Output::new(
                format!(
                    "n = {}, q = {}: exotic {}, nilpotent {}, ml bijective {}\n",
                    r.n, r.q, r.exotic, r.nilpotent, r.ml_bijective
                ),
                serde_json::to_value(&r).expect("serializable"),
            )
        }
        Command::Verify { suite, long } => {
            let suites = Suite::parse_selection(suite)?;
            let progress = |m: &str| eprintln!("{m}");
            let reports = run_suites(&suites, VerifyOptions { long: *long }, &progress);
            Output {
                text: reports.iter().map(|r| r.to_string()).collect(),
                json: serde_json::to_value(&reports).expect("serializable"),
                passed: reports.iter().all(|r| r.passed),
            }
        }
    })
}

fn print_output(out: &Output, format: Format) {
    match format {
        Format::Text => print!("{}", out.text),
        Format::Json => println!("{}", serde_json::to_string(&out.json).expect("serializable")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(out) => {
            print_output(&out, cli.format);
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
