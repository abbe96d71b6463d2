//! `drg` — distance-regular graph toolkit: generation, spectra, clique
//! geometries, duals, motion, classification, and parameter-space scans.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use drg_cli::{
    cmd_analyze, cmd_classify, cmd_dual, cmd_generate, cmd_geometry, cmd_motion, cmd_scan,
    cmd_spectrum, cmd_verify_appendix, final_exit, resolve_max_group, CommandOutput, Format,
    SourceSpec, EXIT_USAGE,
};

/// Distance-regular graph toolkit.
///
/// Exit codes: 0 success; 1 input or usage error; 2 the analysis does not
/// apply to the input (a report is still emitted); 3 a verified conclusion
/// was contradicted by direct computation.
#[derive(Parser)]
#[command(name = "drg", version, about, long_about, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Input selection: exactly one of `--input`, `--family`, `--array`.
#[derive(Args, Debug, Default)]
struct SourceArgs {
    /// Graph file: optional `# label` lines, an `n m` header, then one
    /// `u v` edge per line with 0 <= u < v < n.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Family name: johnson, hamming, doob, shrikhande, cocktail-party,
    /// complete-bipartite-line, complete, or cycle.
    #[arg(long, value_name = "NAME")]
    family: Option<String>,

    /// Size parameter: the s of J(s,d) or H(d,s), the part count of a
    /// cocktail-party graph, the order of a complete graph or cycle.
    #[arg(long, value_name = "S")]
    s: Option<u64>,

    /// Dimension/diameter parameter: the d of J(s,d) or H(d,s), the second
    /// side of complete-bipartite-line.
    #[arg(long, value_name = "D")]
    d: Option<u64>,

    /// Hamming-factor exponent of a Doob graph (H(t,4) component).
    #[arg(long = "doob-t", value_name = "T")]
    doob_t: Option<u64>,

    /// Shrikhande-factor count of a Doob graph.
    #[arg(long = "doob-l", value_name = "L")]
    doob_l: Option<u64>,

    /// Intersection array as JSON: {"d": 2, "b": [4, 2], "c": [1, 2]}.
    #[arg(long, value_name = "JSON")]
    array: Option<String>,
}

impl SourceArgs {
    fn to_spec(&self) -> SourceSpec {
        SourceSpec {
            input: self.input.clone(),
            family: self.family.clone(),
            s: self.s,
            d: self.d,
            doob_t: self.doob_t,
            doob_l: self.doob_l,
            array: self.array.clone(),
        }
    }
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Output format (scan always writes NDJSON).
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the output to a file instead of stdout.
    #[arg(short = 'o', value_name = "FILE")]
    output: Option<PathBuf>,
}

/// Classifier constants shared by classify and scan.
#[derive(Args, Debug)]
struct ClassifierArgs {
    /// Spectral-gap relaxation parameter; defaults to the diameter-derived
    /// value (1/2)*min(1/(6*m_d^4*d), 0.01).
    #[arg(long, value_name = "EPS")]
    epsilon: Option<f64>,

    /// Companion constant eta(d) in (0, 1/2]; defaults to 0.01.
    #[arg(long, value_name = "ETA")]
    eta: Option<f64>,

    /// Smallest-eigenvalue cutoff m_d >= 2; defaults to 6.
    #[arg(long = "m-d", value_name = "M")]
    m_d: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family graph and write its edge list.
    Generate {
        #[command(flatten)]
        source: SourceArgs,
        /// Write the edge list to a file instead of stdout.
        #[arg(short = 'o', value_name = "FILE")]
        output: Option<PathBuf>,
    },

    /// Check distance-regularity and report the intersection array, layer
    /// sizes, and elementary parameter inequalities.
    Analyze {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        out: OutputArgs,
    },

    /// Eigenvalues, multiplicities, standard sequences, and realizability.
    Spectrum {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        out: OutputArgs,
    },

    /// Clique-geometry detection and the geometric parameter identities.
    Geometry {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        out: OutputArgs,
    },

    /// Build the clique-geometry dual graph and verify its spectrum. With
    /// -o, the dual's edge list goes to FILE and the report to
    /// FILE.cliques.json.
    Dual {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        out: OutputArgs,
    },

    /// Exact motion (minimum automorphism support) and its lower bounds.
    Motion {
        #[command(flatten)]
        source: SourceArgs,
        /// Abort group enumeration beyond this many elements; the
        /// DRG_MAX_GROUP environment variable overrides this flag.
        #[arg(long = "max-group", value_name = "N")]
        max_group: Option<u64>,
        #[command(flatten)]
        out: OutputArgs,
    },

    /// Run the case analysis and family-recognition pipelines on an array.
    Classify {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        constants: ClassifierArgs,
        #[command(flatten)]
        out: OutputArgs,
    },

    /// Enumerate feasible intersection arrays up to a degree bound and
    /// classify each one; deterministic NDJSON output.
    Scan {
        /// Diameter of the scanned arrays (>= 2).
        #[arg(long, value_name = "D")]
        d: usize,
        /// Largest degree b_0 to scan (<= 10000).
        #[arg(long = "k-max", value_name = "K")]
        k_max: u64,
        #[command(flatten)]
        constants: ClassifierArgs,
        /// Write the NDJSON to a file instead of stdout.
        #[arg(short = 'o', value_name = "FILE")]
        output: Option<PathBuf>,
    },

    /// Exhaustively verify the clique-intersection inequality in exact
    /// integer arithmetic.
    VerifyAppendix {
        /// Verify all clique counts m up to this bound (default 200).
        #[arg(long = "m-max", value_name = "M", default_value_t = 200)]
        m_max: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn main() -> ExitCode {
    // clap's conventional usage-error code is 2, which this tool reserves
    // for "analysis not applicable"; remap usage errors to 1.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let benign = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return ExitCode::from(if benign { 0 } else { EXIT_USAGE as u8 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let (output, result): (Option<PathBuf>, drg_core::error::Result<CommandOutput>) =
        match &cli.command {
            Command::Generate { source, output } => {
                (output.clone(), cmd_generate(&source.to_spec()))
            }
            Command::Analyze { source, out } => {
                (out.output.clone(), cmd_analyze(&source.to_spec(), out.format))
            }
            Command::Spectrum { source, out } => {
                (out.output.clone(), cmd_spectrum(&source.to_spec(), out.format))
            }
            Command::Geometry { source, out } => {
                (out.output.clone(), cmd_geometry(&source.to_spec(), out.format))
            }
            Command::Dual { source, out } => (
                out.output.clone(),
                cmd_dual(&source.to_spec(), out.format, out.output.is_some()),
            ),
            Command::Motion {
                source,
                max_group,
                out,
            } => {
                let cap = resolve_max_group(*max_group)?;
                (
                    out.output.clone(),
                    cmd_motion(&source.to_spec(), cap, out.format),
                )
            }
            Command::Classify {
                source,
                constants,
                out,
            } => (
                out.output.clone(),
                cmd_classify(
                    &source.to_spec(),
                    constants.epsilon,
                    constants.eta,
                    constants.m_d,
                    out.format,
                ),
            ),
            Command::Scan {
                d,
                k_max,
                constants,
                output,
            } => (
                output.clone(),
                cmd_scan(*d, *k_max, constants.epsilon, constants.eta, constants.m_d),
            ),
            Command::VerifyAppendix { m_max, out } => {
                (out.output.clone(), cmd_verify_appendix(*m_max, out.format))
            }
        };

    let out = result?;
    match &output {
        Some(path) => {
            std::fs::write(path, &out.body)?;
            if let Some((suffix, content)) = &out.sidecar {
                let mut sidecar_path = path.clone().into_os_string();
                sidecar_path.push(suffix);
                std::fs::write(PathBuf::from(sidecar_path), content)?;
            }
        }
        None => {
            std::io::stdout().write_all(out.body.as_bytes())?;
            if let Some((_, content)) = &out.sidecar {
                std::io::stdout().write_all(content.as_bytes())?;
            }
        }
    }
    Ok(final_exit(&out))
}
