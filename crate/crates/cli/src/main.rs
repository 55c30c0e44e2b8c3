use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use runvec_core::lemmalab::{sweep_with, SweepConfig};
use runvec_core::search::{classify_odd_barker_with, enumerate_barker};
use runvec_core::{
    decode_rle, encode_rle, Analysis, BinarySequence, Limits, RunLengthEncoding, SearchMode,
    SearchSpec, Target,
};

mod render;

/// Run-vector analysis, verification sweeps and Barker search.
#[derive(Debug, Parser)]
#[command(name = "runvec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full report for a single sequence or RLE
    Analyze(AnalyzeArgs),
    /// Convert between sequences and run-length encodings
    #[command(subcommand)]
    Rle(RleCommand),
    /// Sweep identities and lemmas over exhaustive populations
    Verify(VerifyArgs),
    /// Enumerate Barker sequences
    Search(SearchArgs),
    /// Classify the RLEs of odd-length Barker sequences
    Classify(ClassifyArgs),
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    /// A '+'/'-' string, or a sign followed by comma-separated run lengths
    #[arg(allow_hyphen_values = true, required_unless_present = "rle")]
    input: Option<String>,
    /// Treat the input as an RLE such as "+,3,2,1,1"
    #[arg(long, allow_hyphen_values = true, conflicts_with = "input")]
    rle: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum RleCommand {
    /// Sequence to RLE
    Encode {
        #[arg(allow_hyphen_values = true)]
        sequence: String,
        #[arg(long)]
        json: bool,
    },
    /// RLE to sequence
    Decode {
        #[arg(allow_hyphen_values = true)]
        rle: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct LimitArgs {
    /// Largest n for full-mode search
    #[arg(long, default_value_t = Limits::default().full_max_n)]
    full_max_n: usize,
    /// Largest n for skew-restricted search and classification
    #[arg(long, default_value_t = Limits::default().skew_max_n)]
    skew_max_n: usize,
    /// Largest n for the theorem1 and appendix-a sweeps
    #[arg(long, default_value_t = Limits::default().sequence_sweep_max_n)]
    sequence_sweep_max_n: usize,
    /// Largest n for the prop-skew sweep
    #[arg(long, default_value_t = Limits::default().prop_skew_max_n)]
    prop_skew_max_n: usize,
    /// Largest n for lemma and barker-balanced sweeps
    #[arg(long, default_value_t = Limits::default().rle_sweep_max_n)]
    rle_sweep_max_n: usize,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        Limits {
            full_max_n: self.full_max_n,
            skew_max_n: self.skew_max_n,
            sequence_sweep_max_n: self.sequence_sweep_max_n,
            prop_skew_max_n: self.prop_skew_max_n,
            rle_sweep_max_n: self.rle_sweep_max_n,
        }
    }
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Comma-separated targets: theorem1, appendix-a, prop-skew, L1..L7, L7n,
    /// sj-mod-q, p-odd, all-barker, barker-balanced, "lemmas" or "all"
    #[arg(long, default_value = "all")]
    targets: String,
    #[arg(long)]
    max_n: usize,
    #[arg(long)]
    json: bool,
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    workers: Option<u16>,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 1)]
    min_n: usize,
    #[arg(long)]
    max_n: usize,
    /// full or skew
    #[arg(long, default_value = "full")]
    mode: SearchMode,
    /// One representative per negation/reversal orbit
    #[arg(long)]
    normalize: bool,
    /// JSON lines, one per sequence
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Per-length counts as CSV
    #[arg(long)]
    csv: bool,
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    workers: Option<u16>,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Debug, Args)]
struct ClassifyArgs {
    #[arg(long, default_value_t = 13)]
    max_n: usize,
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Per-length counts as CSV
    #[arg(long)]
    csv: bool,
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    workers: Option<u16>,
    #[command(flatten)]
    limits: LimitArgs,
}

/// Rendered stdout plus whether every check passed.
struct Report {
    text: String,
    ok: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, ok: true }
    }
}

type CmdResult = Result<Report, String>;

fn parse_input(input: &str) -> Result<BinarySequence, String> {
    let looks_like_rle = input.chars().any(|c| c.is_ascii_digit() || c == ',');
    if looks_like_rle {
        parse_rle(input).map(|rle| decode_rle(&rle))
    } else {
        input.parse().map_err(|e| format!("invalid sequence {input:?}: {e}"))
    }
}

fn parse_rle(input: &str) -> Result<RunLengthEncoding, String> {
    input.parse().map_err(|e| format!("invalid RLE {input:?}: {e}"))
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn analyze(args: AnalyzeArgs) -> CmdResult {
    let seq = match (&args.rle, &args.input) {
        (Some(rle), _) => decode_rle(&parse_rle(rle)?),
        (None, Some(input)) => parse_input(input)?,
        (None, None) => unreachable!("clap requires one input"),
    };
    let analysis = Analysis::of(&seq);
    Ok(Report::ok(if args.json {
        json(&analysis)
    } else {
        render::analysis(&analysis)
    }))
}

fn rle(cmd: RleCommand) -> CmdResult {
    let text = match cmd {
        RleCommand::Encode { sequence, json: as_json } => {
            let seq: BinarySequence = sequence
                .parse()
                .map_err(|e| format!("invalid sequence {sequence:?}: {e}"))?;
            let rle = encode_rle(&seq);
            if as_json {
                json(&rle)
            } else {
                format!("{rle}\n")
            }
        }
        RleCommand::Decode { rle, json: as_json } => {
            let seq = decode_rle(&parse_rle(&rle)?);
            if as_json {
                json(&seq)
            } else {
                format!("{seq}\n")
            }
        }
    };
    Ok(Report::ok(text))
}

fn verify(args: VerifyArgs) -> CmdResult {
    let limits = args.limits.limits();
    limits.validate().map_err(|e| e.to_string())?;
    let targets = Target::parse_list(&args.targets).map_err(|e| e.to_string())?;
    for &target in &targets {
        let limit = target.limit(&limits);
        if args.max_n > limit {
            return Err(format!(
                "target {target}: --max-n {} exceeds the configured limit {limit}",
                args.max_n
            ));
        }
    }
    let config = SweepConfig {
        limits,
        workers: args.workers.map(usize::from),
    };
    let report = sweep_with(args.max_n, &targets, &config).map_err(|e| e.to_string())?;
    let text = if args.json {
        json(&report)
    } else {
        render::sweep(&report)
    };
    Ok(Report {
        text,
        ok: report.is_success(),
    })
}

fn search(args: SearchArgs) -> CmdResult {
    let mut spec = SearchSpec::new(args.min_n, args.max_n, args.mode);
    spec.normalize = args.normalize;
    spec.workers = args.workers.map(usize::from);
    spec.limits = args.limits.limits();
    let found = enumerate_barker(&spec).map_err(|e| e.to_string())?;
    let text = if args.json {
        render::search_json_lines(&found)
    } else if args.csv {
        render::counts_csv(spec.lengths().into_iter().map(|n| {
            (n, found.iter().filter(|s| s.len() == n).count())
        }))
    } else {
        render::search(&spec, &found)
    };
    Ok(Report::ok(text))
}

fn classify(args: ClassifyArgs) -> CmdResult {
    let limits = args.limits.limits();
    let report = classify_odd_barker_with(args.max_n, &limits, args.workers.map(usize::from))
        .map_err(|e| e.to_string())?;
    let text = if args.json {
        json(&report)
    } else if args.csv {
        render::counts_csv(report.counts.iter().map(|c| (c.n, c.barker_count)))
    } else {
        render::classification(&report)
    };
    Ok(Report {
        text,
        ok: report.all_checks_pass(),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(args) => analyze(args),
        Command::Rle(cmd) => rle(cmd),
        Command::Verify(args) => verify(args),
        Command::Search(args) => search(args),
        Command::Classify(args) => classify(args),
    };
    match result {
        Ok(report) => {
            print!("{}", report.text);
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
