use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use agtrellis::bounds::{bound_report, ReportOptions};
use agtrellis::codefile::{read_code, write_code};
use agtrellis::hermitian::{ag_params_abstract, hermitian_code};
use agtrellis::rfunction::RTable;
use agtrellis::search::{absolute_complexity_search, SearchConfig, Strategy};
use agtrellis::verify::{run_suite, Status, Suite, VerifyConfig};
use agtrellis::{Execution, GonalitySequence, LinearCode, StateProfile};
use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

mod render;

use render::Format;

#[derive(Parser)]
#[command(
    name = "agtrellis",
    version,
    about = "Trellis state complexity of linear and AG codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Gonality sequence, R table, jumps and jump grid.
    Gonality(GonalityArgs),
    /// Build a one-point Hermitian code and report its bounds.
    Hermitian(HermitianArgs),
    /// Evaluate every bound for a parameter set or a code file.
    Bounds(BoundsArgs),
    /// State-complexity profile of a code file.
    Profile(ProfileArgs),
    /// Search coordinate permutations for low state complexity.
    Search(SearchArgs),
    /// Run property suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SequenceSource {
    /// Plane curve of degree r + 1.
    #[arg(long, value_name = "R")]
    plane_degree: Option<u32>,
    /// Hyperelliptic curve of genus g.
    #[arg(long, value_name = "G")]
    hyperelliptic_genus: Option<u32>,
    /// Gonality record file (text or JSON).
    #[arg(long, value_name = "FILE")]
    sequence: Option<PathBuf>,
}

impl SequenceSource {
    fn load(&self) -> Result<GonalitySequence> {
        let gs = match (self.plane_degree, self.hyperelliptic_genus, &self.sequence) {
            (Some(r), _, _) => GonalitySequence::plane(r)?,
            (_, Some(g), _) => GonalitySequence::hyperelliptic(g)?,
            (_, _, Some(path)) => {
                let text = read_file(path)?;
                GonalitySequence::parse(&text)
                    .with_context(|| format!("invalid sequence in {}", path.display()))?
            }
            _ => unreachable!("clap enforces one source"),
        };
        Ok(gs)
    }
}

#[derive(Args)]
struct GonalityArgs {
    #[command(flatten)]
    source: SequenceSource,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct HermitianArgs {
    #[arg(long)]
    q: u32,
    #[arg(long, allow_negative_numbers = true)]
    m: i64,
    /// Write the generator matrix as a code file.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Include the per-index state profile.
    #[arg(long)]
    profile: bool,
    /// Enumerate codewords for the exact minimum distance.
    #[arg(long)]
    exact_distance: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    source: SequenceSource,
    /// Code length.
    #[arg(long)]
    n: usize,
    /// Degree of G.
    #[arg(long, allow_negative_numbers = true)]
    m: i64,
    /// Dimension; required when m <= 2g - 2.
    #[arg(long)]
    k: Option<usize>,
    /// Concrete code matching the parameters.
    #[arg(long, value_name = "FILE")]
    code: Option<PathBuf>,
    /// Random-search budget for the searched value (0 disables).
    #[arg(long, default_value_t = 0)]
    search_budget: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ProfileArgs {
    #[arg(long, value_name = "FILE")]
    code: PathBuf,
    /// Comma-separated one-based image list: coordinate j of the result is
    /// coordinate P_j of the input.
    #[arg(long, value_name = "P1,...,Pn")]
    permutation: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Exhaustive,
    Random,
    Greedy,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Strategy {
        match s {
            StrategyArg::Exhaustive => Strategy::Exhaustive,
            StrategyArg::Random => Strategy::Random,
            StrategyArg::Greedy => Strategy::Greedy,
        }
    }
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, value_name = "FILE")]
    code: PathBuf,
    #[arg(long, value_enum, default_value_t = StrategyArg::Random)]
    strategy: StrategyArg,
    #[arg(long, default_value_t = 1000)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Worker threads; 0 uses every core. Results do not depend on it.
    #[arg(long, default_value_t = 1, env = "AGTRELLIS_WORKERS")]
    workers: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Field,
    Linalg,
    Duality,
    Gonality,
    ROracle,
    Jumps,
    Bounds,
    Fso,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        let one = match self {
            SuiteArg::All => return Suite::ALL.to_vec(),
            SuiteArg::Field => Suite::Field,
            SuiteArg::Linalg => Suite::Linalg,
            SuiteArg::Duality => Suite::Duality,
            SuiteArg::Gonality => Suite::Gonality,
            SuiteArg::ROracle => Suite::ROracle,
            SuiteArg::Jumps => Suite::Jumps,
            SuiteArg::Bounds => Suite::Bounds,
            SuiteArg::Fso => Suite::Fso,
        };
        vec![one]
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Worker threads; 0 uses every core. Results do not depend on it.
    #[arg(long, default_value_t = 1, env = "AGTRELLIS_WORKERS")]
    workers: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// Codeword enumeration cap, overridable through `AGTRELLIS_ENUM_CAP`.
fn enumeration_cap() -> Result<u128> {
    match std::env::var("AGTRELLIS_ENUM_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("AGTRELLIS_ENUM_CAP = '{v}' is not an integer")),
        Err(_) => Ok(agtrellis::code::DEFAULT_ENUMERATION_CAP),
    }
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_code(path: &Path) -> Result<LinearCode> {
    let text = read_file(path)?;
    read_code(&text).with_context(|| format!("in {}", path.display()))
}

fn parse_permutation(spec: &str, n: usize) -> Result<Vec<usize>> {
    let mut perm = Vec::new();
    for tok in spec.split(',') {
        let v: usize = tok
            .trim()
            .parse()
            .with_context(|| format!("bad permutation entry '{tok}'"))?;
        if v == 0 {
            bail!("permutation entries are one-based");
        }
        perm.push(v - 1);
    }
    agtrellis::code::check_permutation(&perm, n)?;
    Ok(perm)
}

/// Runs `f` with `workers` threads. One worker runs sequentially.
fn with_workers<T: Send>(workers: usize, f: impl FnOnce(Execution) -> T + Send) -> Result<T> {
    if workers == 1 || !Execution::parallel_available() {
        return Ok(f(Execution::Sequential));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()?;
    Ok(pool.install(|| f(Execution::Parallel)))
}

fn cmd_gonality(args: &GonalityArgs) -> Result<String> {
    let gs = args.source.load()?;
    let table = RTable::new(&gs)?;
    Ok(render::gonality(&gs, &table, args.format))
}

fn cmd_hermitian(args: &HermitianArgs) -> Result<String> {
    let hc = hermitian_code(args.q, args.m)?;
    let cap = enumeration_cap()?;
    if let Some(path) = &args.out {
        fs::write(path, write_code(&hc.code))
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    let opts = ReportOptions {
        exact_profile: true,
        search: None,
        distance_cap: if args.exact_distance { cap } else { 0 },
    };
    let report = bound_report(&hc.params, Some(&hc.code), &opts)?;
    let profile = args.profile.then(|| StateProfile::of(&hc.code));
    if args.exact_distance && report.min_distance.is_none() {
        bail!("minimum distance enumeration exceeds the cap {cap}; raise AGTRELLIS_ENUM_CAP");
    }
    Ok(render::hermitian(
        &hc.summary(),
        &report,
        profile.as_ref(),
        args.format,
    ))
}

fn cmd_bounds(args: &BoundsArgs) -> Result<String> {
    let gs = args.source.load()?;
    let params = ag_params_abstract(args.n, args.m, &gs, args.k)?;
    let code = args.code.as_deref().map(load_code).transpose()?;
    let opts = ReportOptions {
        exact_profile: true,
        search: (args.search_budget > 0)
            .then(|| SearchConfig::new(Strategy::Random, args.search_budget, args.seed)),
        distance_cap: enumeration_cap()?,
    };
    let report = bound_report(&params, code.as_ref(), &opts)?;
    Ok(render::bounds(&report, args.format))
}

fn cmd_profile(args: &ProfileArgs) -> Result<String> {
    let mut code = load_code(&args.code)?;
    if let Some(spec) = &args.permutation {
        let perm = parse_permutation(spec, code.length())?;
        code = code.permute(&perm)?;
    }
    Ok(render::profile(&StateProfile::of(&code), args.format))
}

fn cmd_search(args: &SearchArgs) -> Result<String> {
    let code = load_code(&args.code)?;
    let result = with_workers(args.workers, |exec| {
        let cfg =
            SearchConfig::new(args.strategy.into(), args.budget, args.seed).with_execution(exec);
        absolute_complexity_search(&code, &cfg)
    })??;
    Ok(render::search(&result, args.format))
}

fn cmd_verify(args: &VerifyArgs) -> Result<(String, bool)> {
    let outcomes = with_workers(args.workers, |exec| {
        let cfg = VerifyConfig {
            seed: args.seed,
            execution: exec,
            ..VerifyConfig::default()
        };
        args.suite
            .suites()
            .into_iter()
            .flat_map(|s| run_suite(s, &cfg))
            .collect::<Vec<_>>()
    })?;
    let ok = outcomes.iter().all(|o| o.status != Status::Fail);
    Ok((render::verify(&outcomes, args.format), ok))
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let (out, ok) = match &cli.command {
        Command::Gonality(a) => (cmd_gonality(a)?, true),
        Command::Hermitian(a) => (cmd_hermitian(a)?, true),
        Command::Bounds(a) => (cmd_bounds(a)?, true),
        Command::Profile(a) => (cmd_profile(a)?, true),
        Command::Search(a) => (cmd_search(a)?, true),
        Command::Verify(a) => cmd_verify(a)?,
    };
    print!("{out}");
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
