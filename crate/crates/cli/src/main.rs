use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use degcx::cohomology::{scan_cohomology, takayama_dim};
use degcx::degree::{
    fiber_power, formula_fiber_product, formula_intersection, formula_mixed_product, formula_power_of_sum,
    formula_product, formula_sum, formula_sum_blocks, formula_symbolic_sum, mixed_product, support_split,
    symbolic_power_of_sum,
};
use degcx::format::{complex_to_json, complex_to_m2, ideal_to_text, parse_degree, parse_ideals};
use degcx::primes::fiber_product_primes;
use degcx::verify::{self, Config};
use degcx::{minimal_primes, symbolic_power_ideal, Blocks, Error, ExponentVector, MonomialIdeal, PowerMode};

/// Degree complexes of monomial ideals and local cohomology of their quotients.
///
/// Ideal files hold one ideal per line, e.g. `n=4; x1*x2, x3^2*x4`.
#[derive(Parser)]
#[command(name = "degcx", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print Δ_γ of an ideal as facet JSON.
    DegreeComplex {
        #[command(flatten)]
        target: Target,
        /// Multidegree, e.g. `-1,0,2`.
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        /// Compute through a decomposition formula instead of the definition.
        #[arg(long, value_enum)]
        formula: Option<Formula>,
        /// Emit Macaulay2 `simplicialComplex` syntax.
        #[arg(long)]
        m2: bool,
    },
    /// Print dim H^p(S/I)_γ as a JSON table.
    Cohomology {
        #[command(flatten)]
        target: Target,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "scan", required_unless_present = "scan")]
        gamma: Option<String>,
        /// Scan the finite window of degrees that can carry cohomology.
        #[arg(long)]
        scan: bool,
        /// Restrict to one cohomological degree.
        #[arg(long)]
        p: Option<u32>,
    },
    /// Castelnuovo-Mumford regularity of S/I with a witnessing degree.
    Reg {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        value_only: bool,
    },
    /// Depth of S/I with a witnessing degree.
    Depth {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        value_only: bool,
    },
    /// Generators of the symbolic power of a squarefree ideal.
    SymbolicPower {
        file: PathBuf,
        #[arg(long)]
        s: u32,
    },
    /// Minimal primes of a squarefree ideal as vertex lists.
    MinimalPrimes {
        file: PathBuf,
        /// Read two ideals on split blocks and use the fiber product rule.
        #[arg(long)]
        fiber: bool,
        #[arg(long)]
        split: Option<usize>,
    },
    /// Check a theorem against the direct computation on random instances.
    Verify {
        /// Theorem id (`3.9`), name (`power-of-sum`) or `all`.
        theorem: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        instances: Option<usize>,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_s: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Build {
    Sum,
    Intersection,
    Product,
    PowerOfSum,
    SymbolicSum,
    Fiber,
    Mixed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Formula {
    Sum,
    SumJoin,
    Intersection,
    Product,
    SupportSplit,
    PowerOfSum,
    SymbolicSum,
    Fiber,
    Mixed,
}

/// Which ideal a command acts on.
#[derive(Args)]
struct Target {
    /// Ideal file, or `-` for standard input.
    file: PathBuf,
    /// Combine the ideals of the file: `I J` for most, `I1 I2 J1 J2` for mixed.
    #[arg(long, value_enum)]
    build: Option<Build>,
    /// Variables `1..=m` form the first block; defaults to the largest
    /// variable of the first ideal.
    #[arg(long)]
    split: Option<usize>,
    /// Power exponent `s`.
    #[arg(long, visible_alias = "s")]
    power: Option<u32>,
    /// Use symbolic instead of ordinary powers.
    #[arg(long)]
    symbolic: bool,
}

enum Failure {
    Verify,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn read_ideals(path: &PathBuf) -> Outcome<Vec<MonomialIdeal>> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| usage(format!("reading standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?
    };
    let ideals = parse_ideals(&text)?;
    if ideals.is_empty() {
        return Err(usage(format!("{}: no ideal found", path.display())));
    }
    Ok(ideals)
}

/// The loaded ideals together with the block split and power settings.
struct Loaded {
    ideals: Vec<MonomialIdeal>,
    blocks: Option<Blocks>,
    power: Option<u32>,
    mode: PowerMode,
}

impl Loaded {
    fn new(target: &Target) -> Outcome<Self> {
        let ideals = read_ideals(&target.file)?;
        let n = ideals[0].n();
        let m = match target.split {
            Some(m) => Some(m),
            None => ideals[0].support().iter().max().map(|v| v + 1).filter(|&m| m < n),
        };
        let blocks = m.map(|m| Blocks::new(n, m)).transpose()?;
        let mode = if target.symbolic { PowerMode::Symbolic } else { PowerMode::Ordinary };
        Ok(Loaded { ideals, blocks, power: target.power, mode })
    }

    fn take<const K: usize>(&self, what: &str) -> Outcome<[&MonomialIdeal; K]> {
        if self.ideals.len() < K {
            return Err(usage(format!("{what} needs {K} ideals in the file, found {}", self.ideals.len())));
        }
        Ok(std::array::from_fn(|i| &self.ideals[i]))
    }

    fn blocks(&self, what: &str) -> Outcome<Blocks> {
        self.blocks.ok_or_else(|| usage(format!("{what} needs a block split; pass --split")))
    }

    fn power(&self, what: &str) -> Outcome<u32> {
        self.power.ok_or_else(|| usage(format!("{what} needs --power")))
    }

    fn ideal(&self, build: Option<Build>) -> Outcome<MonomialIdeal> {
        let Some(build) = build else {
            let i = &self.ideals[0];
            return Ok(match self.power {
                Some(s) => self.mode.power(i, s)?,
                None => i.clone(),
            });
        };
        let ideal = match build {
            Build::Sum => {
                let [i, j] = self.take("sum")?;
                i.sum(j)?
            }
            Build::Intersection => {
                let [i, j] = self.take("intersection")?;
                i.intersection(j)?
            }
            Build::Product => {
                let [i, j] = self.take("product")?;
                i.product(j)?
            }
            Build::PowerOfSum => {
                let [i, j] = self.take("power-of-sum")?;
                i.sum(j)?.power_or_unit(self.power("power-of-sum")?)
            }
            Build::SymbolicSum => {
                let [i, j] = self.take("symbolic-sum")?;
                symbolic_power_of_sum(i, j, self.power("symbolic-sum")?)?
            }
            Build::Fiber => {
                let [i, j] = self.take("fiber")?;
                fiber_power(i, j, self.blocks("fiber")?, self.power.unwrap_or(1), self.mode)?
            }
            Build::Mixed => {
                let [i1, i2, j1, j2] = self.take("mixed")?;
                mixed_product(i1, i2, j1, j2)?
            }
        };
        Ok(ideal)
    }

    fn degree(&self, text: &str) -> Outcome<ExponentVector> {
        Ok(parse_degree(text, self.ideals[0].n())?)
    }
}

fn formula_complex(loaded: &Loaded, formula: Formula, gamma: &ExponentVector) -> Outcome<degcx::SimplicialComplex> {
    let c = match formula {
        Formula::Sum => {
            let [i, j] = loaded.take("sum")?;
            formula_sum(i, j, gamma)?
        }
        Formula::SumJoin => {
            let [i, j] = loaded.take("sum-join")?;
            formula_sum_blocks(i, j, loaded.blocks("sum-join")?, gamma)?
        }
        Formula::Intersection => {
            let [i, j] = loaded.take("intersection")?;
            formula_intersection(i, j, gamma)?
        }
        Formula::Product => {
            let [i, j] = loaded.take("product")?;
            formula_product(i, j, loaded.blocks("product")?, gamma)?
        }
        Formula::SupportSplit => {
            let [i] = loaded.take("support-split")?;
            let b = loaded.blocks("support-split")?;
            support_split(i, gamma, b.x())?
        }
        Formula::PowerOfSum => {
            let [i, j] = loaded.take("power-of-sum")?;
            formula_power_of_sum(i, j, loaded.blocks("power-of-sum")?, loaded.power("power-of-sum")?, gamma)?
        }
        Formula::SymbolicSum => {
            let [i, j] = loaded.take("symbolic-sum")?;
            formula_symbolic_sum(i, j, loaded.blocks("symbolic-sum")?, loaded.power("symbolic-sum")?, gamma)?
        }
        Formula::Fiber => {
            let [i, j] = loaded.take("fiber")?;
            let s = loaded.power.unwrap_or(1);
            formula_fiber_product(i, j, loaded.blocks("fiber")?, s, loaded.mode, gamma)?.to_complex()
        }
        Formula::Mixed => {
            let [i1, i2, j1, j2] = loaded.take("mixed")?;
            formula_mixed_product(i1, i2, j1, j2, loaded.blocks("mixed")?, gamma)?
        }
    };
    Ok(c)
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("values serialize"));
}

fn witness_json(w: Option<degcx::cohomology::Witness>, value_only: bool) {
    match (w, value_only) {
        (Some(w), true) => println!("{}", w.value),
        (None, true) => println!("null"),
        (Some(w), false) => print_json(&json!({ "gamma": w.gamma, "p": w.p, "value": w.value })),
        (None, false) => print_json(&json!({ "value": null })),
    }
}

fn execute(command: Command) -> Outcome<()> {
    match command {
        Command::DegreeComplex { target, gamma, formula, m2 } => {
            let loaded = Loaded::new(&target)?;
            let gamma = loaded.degree(&gamma)?;
            let complex = match formula {
                Some(f) => formula_complex(&loaded, f, &gamma)?,
                None => degcx::degree_complex(&loaded.ideal(target.build)?, &gamma)?,
            };
            if m2 {
                println!("{}", complex_to_m2(&complex));
            } else {
                println!("{}", complex_to_json(&complex));
            }
        }
        Command::Cohomology { target, gamma, scan, p } => {
            let loaded = Loaded::new(&target)?;
            let ideal = loaded.ideal(target.build)?;
            let rows: Vec<Value> = if scan {
                let table = scan_cohomology(&ideal)?;
                let Value::Array(rows) = table.to_json() else { unreachable!("tables are arrays") };
                rows.into_iter().filter(|r| p.is_none_or(|p| r["p"] == json!(p))).collect()
            } else {
                let gamma = loaded.degree(gamma.as_deref().expect("clap requires --gamma without --scan"))?;
                let ps: Vec<u32> = match p {
                    Some(p) => vec![p],
                    None => (0..=ideal.n() as u32).collect(),
                };
                let mut rows = Vec::new();
                for q in ps {
                    let dim = takayama_dim(&ideal, &gamma, q)?;
                    if dim > 0 || p.is_some() {
                        rows.push(json!({ "dim": dim, "gamma": gamma, "p": q }));
                    }
                }
                rows
            };
            print_json(&Value::Array(rows));
        }
        Command::Reg { target, value_only } => {
            let ideal = Loaded::new(&target)?.ideal(target.build)?;
            witness_json(scan_cohomology(&ideal)?.reg(), value_only);
        }
        Command::Depth { target, value_only } => {
            let ideal = Loaded::new(&target)?.ideal(target.build)?;
            witness_json(scan_cohomology(&ideal)?.depth(), value_only);
        }
        Command::SymbolicPower { file, s } => {
            let ideals = read_ideals(&file)?;
            println!("{}", ideal_to_text(&symbolic_power_ideal(&ideals[0], s)?));
        }
        Command::MinimalPrimes { file, fiber, split } => {
            let target = Target { file, build: None, split, power: None, symbolic: false };
            let loaded = Loaded::new(&target)?;
            let primes = if fiber {
                let [i, j] = loaded.take("fiber")?;
                fiber_product_primes(i, j, loaded.blocks("fiber")?)?
            } else {
                minimal_primes(&loaded.ideals[0])?
            };
            print_json(&json!(primes.labels()));
        }
        Command::Verify { theorem, seed, instances, max_n, max_s } => {
            let config = Config { seed, instances, max_n, max_s, ..Config::default() };
            let reports = verify::run(&theorem, &config)?;
            let passed = reports.iter().all(|r| r.passed());
            let value = if theorem == "all" {
                serde_json::to_value(&reports)
            } else {
                serde_json::to_value(&reports[0])
            };
            print_json(&value.expect("reports serialize"));
            if !passed {
                return Err(Failure::Verify);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("degcx: {msg}");
            ExitCode::from(2)
        }
    }
}
