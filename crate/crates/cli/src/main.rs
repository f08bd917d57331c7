//! `partcat`: command-line front end for the partition and jellyfish
//! partition categories.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use partcat_core::foundations::{bell, stirling2};
use partcat_core::jellycat::normal_basis;
use partcat_core::pcat::Basis;
use partcat_core::repn::{classify_orbits, hom_dim, psi_with};
use partcat_core::verify::{
    check_associativity, check_combinatorics, check_faithfulness, check_fullness, check_phi_kernel,
    check_relations, golden_examples, DEFAULT_SEED,
};
use partcat_core::{Error, Exec, FieldSpec, JellyMorphism, Morphism, SuiteReport};
use serde_json::json;

const EXIT_CODES: &str = "\
Exit codes:
  0  success
  1  a verification check failed
  2  usage error
  3  parse error (reported with line and column)
  4  type or parameter mismatch
  5  characteristic violation (field characteristic below n)
  6  I/O error
  7  size cap exceeded (n <= 5, k+l <= 8; see --unsafe-large)
  8  other error";

const MAX_N: usize = 5;
const MAX_LEGS: usize = 8;

#[derive(Parser)]
#[command(name = "partcat", version, about = "Partition and jellyfish partition categories: exact composition, normal forms and tensor-power matrices", after_help = EXIT_CODES)]
struct Cli {
    /// Parameter n; files may set it with an `n` header instead.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Coefficient field, Q or F<p> with p an odd prime.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<FieldSpec>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for data-parallel loops; 1 runs sequentially.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Lift the default size caps.
    #[arg(long, global = true)]
    unsafe_large: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compose two morphism files: UPPER ∘ LOWER.
    Compose { upper: String, lower: String },
    /// Tensor product of two morphism files.
    Tensor { left: String, right: String },
    /// Rewrite a morphism to normal form.
    Reduce { file: String },
    /// The matrix of a morphism under Ψ, as JSON.
    Psi { file: String },
    /// Convert between diagram and x-basis coordinates.
    Xbasis { file: String },
    /// A_n-orbits on basis tuples of V^⊗k.
    Orbits {
        #[arg(long)]
        k: usize,
    },
    /// Stirling and Bell numbers and hom dimensions for k+l <= MAX.
    Dims {
        #[arg(long, default_value_t = 4)]
        max: usize,
    },
    /// Run verification suites.
    Verify {
        #[arg(value_enum, default_values_t = [Suite::All])]
        suites: Vec<Suite>,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        l: usize,
        /// Random samples for randomized suites.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// The normal-form basis of Hom(k, 0).
    Bases {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Relations,
    Kernel,
    Fullness,
    Faithfulness,
    Golden,
    Associativity,
    Combinatorics,
    All,
}

enum Failure {
    Core(Error),
    Usage(String),
    Io(String),
    Cap(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Checks => 1,
            Failure::Usage(_) => 2,
            Failure::Core(e) => match e {
                Error::Parse { .. } | Error::InvalidField(_) => 3,
                Error::TypeMismatch(_)
                | Error::ParameterMismatch { .. }
                | Error::FieldMismatch { .. }
                | Error::GroundSizeMismatch { .. } => 4,
                Error::Characteristic(_) => 5,
                _ => 8,
            },
            Failure::Io(_) => 6,
            Failure::Cap(_) => 7,
        }
    }
}

type Outcome = Result<(), Failure>;

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

struct Context {
    n: Option<usize>,
    field: Option<FieldSpec>,
    json: bool,
    seed: u64,
    exec: Exec,
    unsafe_large: bool,
}

impl Context {
    fn n(&self) -> Result<usize, Failure> {
        let n = self.n.unwrap_or(2);
        if n < 2 {
            return Err(Failure::Usage("--n must be at least 2".into()));
        }
        self.cap_n(n)?;
        Ok(n)
    }

    fn field(&self) -> FieldSpec {
        self.field.unwrap_or(FieldSpec::RATIONALS)
    }

    fn cap_n(&self, n: usize) -> Outcome {
        if !self.unsafe_large && n > MAX_N {
            return Err(Failure::Cap(format!("n = {n} exceeds {MAX_N}")));
        }
        Ok(())
    }

    fn cap_legs(&self, legs: usize) -> Outcome {
        if !self.unsafe_large && legs > MAX_LEGS {
            return Err(Failure::Cap(format!("k+l = {legs} exceeds {MAX_LEGS}")));
        }
        Ok(())
    }

    fn read(&self, path: &str) -> Result<String, Failure> {
        let mut text = String::new();
        if path == "-" {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        } else {
            text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))?;
        }
        Ok(text)
    }

    fn morphism(&self, path: &str) -> Result<JellyMorphism, Failure> {
        let text = self.read(path)?;
        let m = JellyMorphism::parse(&text, Some(self.field()), self.n)?;
        self.cap_n(m.n())?;
        self.cap_legs(m.bottom() + m.top())?;
        Ok(m)
    }

    fn emit(&self, m: &JellyMorphism) {
        if self.json {
            let terms: Vec<_> = m
                .terms()
                .iter()
                .map(|(d, c)| {
                    let text = d.to_partition().map(|p| p.to_string()).unwrap_or_else(|| d.to_string());
                    json!([c.to_string(), text])
                })
                .collect();
            let out = json!({
                "field": m.field().to_string(),
                "n": m.n(),
                "type": [m.bottom(), m.top()],
                "terms": terms,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        } else {
            print!("{m}");
        }
    }
}

fn two_inputs(a: &str, b: &str) -> Outcome {
    if a == "-" && b == "-" {
        return Err(Failure::Usage("at most one input may be read from stdin".into()));
    }
    Ok(())
}

fn orbits(ctx: &Context, k: usize) -> Outcome {
    let n = ctx.n()?;
    ctx.cap_legs(k)?;
    let list = classify_orbits(n, k, ctx.exec)?;
    if ctx.json {
        println!("{}", serde_json::to_string_pretty(&list).unwrap());
        return Ok(());
    }
    println!("# A_{n}-orbits on V^{k}: {} orbits", list.len());
    for o in list {
        let sign = match o.sign {
            Some(1) => "^+",
            Some(_) => "^-",
            None => "",
        };
        let members: Vec<String> = o
            .members
            .iter()
            .map(|t| format!("({})", t.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        println!("O_{}{sign}\tsize {}\t{}", o.diagram, o.members.len(), members.join(" "));
    }
    Ok(())
}

fn dims(ctx: &Context, max: usize) -> Outcome {
    let n = ctx.n()?;
    ctx.cap_legs(max)?;
    let grid: Vec<Vec<String>> = (0..=max)
        .map(|k| (0..=max - k).map(|l| hom_dim(n, k, l).to_string()).collect())
        .collect();
    if ctx.json {
        let numbers: Vec<_> = (0..=max)
            .map(|m| {
                json!({
                    "m": m,
                    "bell": bell(m).to_string(),
                    "stirling2": (0..=m).map(|p| stirling2(m, p).to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        let out = json!({"n": n, "max": max, "numbers": numbers, "hom_dim": grid});
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
        return Ok(());
    }
    println!("# Bell numbers B(m) and Stirling numbers S(m,p), p = 0..m");
    for m in 0..=max {
        let row: Vec<String> = (0..=m).map(|p| stirling2(m, p).to_string()).collect();
        println!("m={m}\tB={}\tS: {}", bell(m), row.join(" "));
    }
    println!("# hom_dim(n={n}, k, l) for k+l <= {max}; rows k, columns l");
    println!("k\\l\t{}", (0..=max).map(|l| l.to_string()).collect::<Vec<_>>().join("\t"));
    for (k, row) in grid.iter().enumerate() {
        println!("{k}\t{}", row.join("\t"));
    }
    Ok(())
}

fn verify(ctx: &Context, suites: &[Suite], k: usize, l: usize, samples: usize) -> Outcome {
    let n = ctx.n()?;
    ctx.cap_legs(k + l)?;
    let field = ctx.field();
    let all = suites.contains(&Suite::All);
    let wants = |s: Suite| all || suites.contains(&s);
    let mut reports: Vec<SuiteReport> = Vec::new();
    if wants(Suite::Relations) {
        reports.push(check_relations(n, field, ctx.exec)?);
    }
    if wants(Suite::Kernel) {
        reports.push(check_phi_kernel(n, k, l, ctx.exec)?);
    }
    if wants(Suite::Fullness) {
        reports.push(check_fullness(n, k, l, ctx.exec)?);
    }
    if wants(Suite::Faithfulness) {
        reports.push(check_faithfulness(n, k, field, ctx.seed, samples, ctx.exec)?);
    }
    if wants(Suite::Golden) {
        reports.push(golden_examples(ctx.exec)?);
    }
    if wants(Suite::Associativity) {
        reports.push(check_associativity(n, k, ctx.seed, samples.min(50), ctx.exec)?);
    }
    if wants(Suite::Combinatorics) {
        reports.push(check_combinatorics(7));
    }
    if ctx.json {
        println!("{}", serde_json::to_string_pretty(&reports).unwrap());
    } else {
        for r in &reports {
            print!("{r}");
        }
    }
    if reports.iter().all(SuiteReport::passed) {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn run(cli: Cli) -> Outcome {
    let exec = match cli.threads {
        Some(0) => return Err(Failure::Usage("--threads must be positive".into())),
        Some(1) => Exec::Sequential,
        Some(t) => {
            #[cfg(feature = "parallel")]
            rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build_global()
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let _ = t;
            Exec::Parallel
        }
        None => Exec::default(),
    };
    let ctx = Context {
        n: cli.n,
        field: cli.field,
        json: cli.json,
        seed: cli.seed.unwrap_or(DEFAULT_SEED),
        exec,
        unsafe_large: cli.unsafe_large,
    };
    match cli.command {
        Command::Compose { upper, lower } => {
            two_inputs(&upper, &lower)?;
            let (a, b) = (ctx.morphism(&upper)?, ctx.morphism(&lower)?);
            ctx.emit(&a.compose_with(&b, ctx.exec)?);
        }
        Command::Tensor { left, right } => {
            two_inputs(&left, &right)?;
            let (a, b) = (ctx.morphism(&left)?, ctx.morphism(&right)?);
            let t = a.tensor(&b)?;
            ctx.cap_legs(t.bottom() + t.top())?;
            ctx.emit(&t);
        }
        Command::Reduce { file } => {
            let m = ctx.morphism(&file)?;
            ctx.emit(&m.reduce_with(&partcat_core::jellycat::first_two, ctx.exec)?);
        }
        Command::Psi { file } => {
            let m = ctx.morphism(&file)?;
            let t = psi_with(&m, ctx.exec)?;
            println!("{}", serde_json::to_string_pretty(&t.to_json()).unwrap());
        }
        Command::Xbasis { file } => {
            let text = ctx.read(&file)?;
            let (m, basis) = Morphism::parse_with_basis(&text, Some(ctx.field()), ctx.n)?;
            ctx.cap_n(m.n())?;
            ctx.cap_legs(m.bottom() + m.top())?;
            let out = match basis {
                Basis::Diagram => m.to_x_text(),
                Basis::X => m.to_string(),
            };
            if ctx.json {
                let target = if basis == Basis::Diagram { "x" } else { "diagram" };
                println!("{}", serde_json::to_string_pretty(&json!({"basis": target, "text": out})).unwrap());
            } else {
                print!("{out}");
            }
        }
        Command::Orbits { k } => orbits(&ctx, k)?,
        Command::Dims { max } => dims(&ctx, max)?,
        Command::Verify { suites, k, l, samples } => verify(&ctx, &suites, k, l, samples)?,
        Command::Bases { k } => {
            let n = ctx.n()?;
            ctx.cap_legs(k)?;
            let basis: Vec<String> = normal_basis(n, k)
                .iter()
                .map(|d| d.to_partition().map(|p| p.to_string()).unwrap_or_else(|| d.to_string()))
                .collect();
            if ctx.json {
                println!("{}", serde_json::to_string_pretty(&basis).unwrap());
            } else {
                println!("# basis of Hom({k}, 0) in JP({n}): {} elements", basis.len());
                for b in basis {
                    println!("{b}");
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Core(e) => eprintln!("error: {e}"),
                Failure::Usage(m) | Failure::Io(m) | Failure::Cap(m) => eprintln!("error: {m}"),
                Failure::Checks => eprintln!("verification failed"),
            }
            ExitCode::from(f.code())
        }
    }
}
