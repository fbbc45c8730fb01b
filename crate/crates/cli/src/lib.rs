//! `dimdraw` command-line front end.
//!
//! Exit status: 0 success, 1 usage or input error, 2 timeout or undecided
//! dimension, 3 internal contract violation.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use dimdraw::context::{parse_csv, parse_cxt, parse_poset_edges, poset_to_context, FormalContext};
use dimdraw::dimension::{
    brute_force_dimension, certificate_json, DimensionError, SearchLimits, DEFAULT_ORACLE_CAP,
};
use dimdraw::lattice::LatticeError;
use dimdraw::render::{to_json, to_svg, to_tikz, SvgOptions, TikzOptions};
use dimdraw::{DrawOptions, Error};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "dimdraw",
    version,
    about = "Draw concept lattices from their order dimension"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the number of concepts and list them
    Concepts(Args),
    /// Print the order dimension; -o writes the JSON certificate
    Dimension(Args),
    /// Print a minimal realizer; -o writes the JSON certificate
    Realizer(Args),
    /// Run the full pipeline and write a diagram
    Draw(Args),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Cxt,
    Csv,
    #[value(name = "poset-edges")]
    PosetEdges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Svg,
    Tikz,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Concepts,
    Dimension,
    Realizer,
    Draw,
}

#[derive(Debug, clap::Args)]
struct Args {
    /// Input file (.cxt, .csv, or a poset edge list)
    input: PathBuf,
    /// Input format; guessed from the file extension when omitted
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
    /// Diagram format for `draw`
    #[arg(long, value_enum, default_value_t = OutputFormat::Svg)]
    format: OutputFormat,
    /// Output file (stdout when omitted)
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Half-angle of the projection fan in degrees, in (0, 90)
    #[arg(long, default_value_t = 45.0)]
    spread: f64,
    /// Search budget per dimension candidate, in seconds
    #[arg(long, default_value_t = 60.0)]
    timeout: f64,
    /// Largest dimension to try
    #[arg(long, default_value_t = 8)]
    max_k: usize,
    /// Cross-check the dimension by brute force on small lattices
    #[arg(long)]
    check_oracle: bool,
}

/// Validated settings for one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub input: PathBuf,
    pub input_format: InputFormat,
    pub output_format: OutputFormat,
    pub output: Option<PathBuf>,
    pub spread: f64,
    pub timeout: Duration,
    pub max_k: usize,
    pub check_oracle: bool,
}

fn guess_format(path: &Path) -> InputFormat {
    match path
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase)
    {
        Some(e) if e == "cxt" => InputFormat::Cxt,
        Some(e) if e == "csv" => InputFormat::Csv,
        _ => InputFormat::PosetEdges,
    }
}

impl RunConfig {
    fn from_cli(cli: Cli) -> Result<Self, String> {
        let (command, args) = match cli.command {
            Command::Concepts(a) => (CommandKind::Concepts, a),
            Command::Dimension(a) => (CommandKind::Dimension, a),
            Command::Realizer(a) => (CommandKind::Realizer, a),
            Command::Draw(a) => (CommandKind::Draw, a),
        };
        if !(args.spread > 0.0 && args.spread < 90.0) {
            return Err(format!(
                "--spread must be strictly between 0 and 90 degrees, got {}",
                args.spread
            ));
        }
        if !(args.timeout.is_finite() && args.timeout > 0.0) {
            return Err(format!(
                "--timeout must be a positive number of seconds, got {}",
                args.timeout
            ));
        }
        if args.max_k == 0 {
            return Err("--max-k must be at least 1".into());
        }
        Ok(RunConfig {
            command,
            input_format: args
                .input_format
                .unwrap_or_else(|| guess_format(&args.input)),
            input: args.input,
            output_format: args.format,
            output: args.output,
            spread: args.spread,
            timeout: Duration::from_secs_f64(args.timeout),
            max_k: args.max_k,
            check_oracle: args.check_oracle,
        })
    }

    fn draw_options(&self) -> DrawOptions {
        DrawOptions {
            spread_deg: self.spread,
            limits: SearchLimits {
                timeout: Some(self.timeout),
                max_k: self.max_k,
            },
            ..DrawOptions::default()
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Lattice(LatticeError::TooManyConcepts { .. }) => EXIT_USAGE,
            Error::Dimension(DimensionError::Undecided { .. })
            | Error::Dimension(DimensionError::ExceedsMaxK { .. }) => EXIT_UNDECIDED,
            _ => EXIT_INTERNAL,
        };
        let message = match &e {
            Error::Dimension(DimensionError::Undecided { .. }) => {
                format!("{e}; raise --timeout to search longer")
            }
            _ => e.to_string(),
        };
        Failure { code, message }
    }
}

fn read_context(cfg: &RunConfig) -> Result<FormalContext, Failure> {
    let text = std::fs::read_to_string(&cfg.input)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", cfg.input.display())))?;
    let name = cfg.input.display();
    match cfg.input_format {
        InputFormat::Cxt => parse_cxt(&text).map_err(|e| Failure::usage(format!("{name}: {e}"))),
        InputFormat::Csv => parse_csv(&text).map_err(|e| Failure::usage(format!("{name}: {e}"))),
        InputFormat::PosetEdges => {
            let p = parse_poset_edges(&text).map_err(|e| Failure::usage(format!("{name}: {e}")))?;
            poset_to_context(&p).map_err(|e| Failure::usage(format!("{name}: {e}")))
        }
    }
}

fn names(set: &dimdraw::BitSet, pool: &[String]) -> String {
    let v: Vec<&str> = set.iter().map(|i| pool[i].as_str()).collect();
    format!("{{{}}}", v.join(", "))
}

fn emit(cfg: &RunConfig, content: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match &cfg.output {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(content.as_bytes())
            .map_err(|e| Failure::usage(format!("cannot write to stdout: {e}"))),
    }
}

fn execute(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<(), Failure> {
    let ctx = read_context(cfg)?;
    let opts = cfg.draw_options();
    let mut report = String::new();

    match cfg.command {
        CommandKind::Concepts => {
            let lattice = dimdraw::lattice::concepts_with_limit(&ctx, opts.concept_limit)
                .map_err(|e| Failure::from(Error::from(e)))?;
            let _ = writeln!(report, "concepts: {}", lattice.len());
            for (i, c) in lattice.concepts().iter().enumerate() {
                let _ = writeln!(
                    report,
                    "{i}\t{}\t{}",
                    names(&c.extent, ctx.objects()),
                    names(&c.intent, ctx.attributes())
                );
            }
        }
        CommandKind::Dimension | CommandKind::Realizer => {
            let (lattice, dim, realizer) = dimdraw::analyze(&ctx, &opts)?;
            let _ = writeln!(report, "dimension: {}", dim.d);
            if cfg.check_oracle {
                if lattice.len() <= DEFAULT_ORACLE_CAP {
                    let oracle = brute_force_dimension(&lattice).map_err(Error::from)?;
                    if oracle != dim.d {
                        return Err(Failure {
                            code: EXIT_INTERNAL,
                            message: format!(
                                "oracle disagrees: brute force gives {oracle}, search gave {}",
                                dim.d
                            ),
                        });
                    }
                    let _ = writeln!(report, "oracle: {oracle} (agrees)");
                } else {
                    let _ = writeln!(
                        report,
                        "oracle: skipped ({} concepts > cap {DEFAULT_ORACLE_CAP})",
                        lattice.len()
                    );
                }
            }
            if cfg.command == CommandKind::Realizer {
                for (i, ext) in realizer.extensions.iter().enumerate() {
                    let order: Vec<String> = ext.order().iter().map(|c| c.to_string()).collect();
                    let _ = writeln!(report, "L{}: {}", i + 1, order.join(" "));
                }
            }
            if let Some(path) = &cfg.output {
                let json = certificate_json(&ctx, &lattice, &dim.cover, &realizer);
                std::fs::write(path, json)
                    .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
                let _ = writeln!(report, "certificate: {}", path.display());
            }
        }
        CommandKind::Draw => {
            let drawing = dimdraw::draw(&ctx, &opts)?;
            let d = &drawing.diagram;
            let content = match cfg.output_format {
                OutputFormat::Svg => to_svg(d, &SvgOptions::default()),
                OutputFormat::Tikz => to_tikz(d, &TikzOptions::default()),
                OutputFormat::Json => to_json(d),
            };
            emit(cfg, &content, stdout)?;
            if let Some(path) = &cfg.output {
                let _ = writeln!(
                    report,
                    "wrote {}: {} concepts, {} edges, dimension {}, {} crossings",
                    path.display(),
                    drawing.lattice.len(),
                    d.layout.edges.len(),
                    drawing.dimension.d,
                    d.layout.crossings
                );
                if d.layout.fallback {
                    let _ = writeln!(
                        report,
                        "warning: too many axes for the assignment search, used identity"
                    );
                }
            }
        }
    }
    stdout
        .write_all(report.as_bytes())
        .map_err(|e| Failure::usage(format!("cannot write to stdout: {e}")))
}

/// Runs one invocation; returns the process exit status.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = target.write_all(rendered.as_bytes());
            return code;
        }
    };
    let cfg = match RunConfig::from_cli(cli) {
        Ok(cfg) => cfg,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    match execute(&cfg, stdout) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
