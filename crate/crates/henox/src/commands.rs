//! Subcommand definitions, dispatch, and the exit-code contract.
//!
//! Exit codes: 0 success; 2 unusable input image (or malformed argument
//! value); 3 unusable key or cipher configuration; 4 unusable S-box
//! override; 1 anything else, chiefly output I/O.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use henox_core::chaos::{self, CipherKey, HenonParams, Modulus};
use henox_core::cipher::{self, CipherConfig};
use henox_core::permute::PermutationPlan;
use henox_core::sbox::SBoxSet;
use henox_core::{analysis, Error, GrayImage};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::keyfile::{self, KeyError};
use crate::pgm::{self, PgmError};
use crate::report;
use crate::sboxfile;

#[derive(Parser)]
#[command(name = "henox", version, about = "Chaotic grayscale-image cipher and analyzer")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a key file with randomly drawn orbit initial conditions
    Keygen {
        /// Where to write the key JSON
        #[arg(long)]
        out: PathBuf,
        /// RNG seed; a fixed seed reproduces the same key
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Encrypt a binary PGM image
    Encrypt(CryptArgs),
    /// Decrypt a binary PGM image
    Decrypt(CryptArgs),
    /// Write a statistical report for an image
    Analyze {
        /// Input PGM image
        #[arg(long = "in")]
        input: PathBuf,
        /// Where to write the report JSON
        #[arg(long)]
        report: PathBuf,
        /// Co-occurrence neighbor offset, written as dr,dc
        #[arg(long, default_value = "0,1", allow_hyphen_values = true)]
        offset: String,
    },
}

#[derive(Args)]
struct CryptArgs {
    /// Input PGM image
    #[arg(long = "in")]
    input: PathBuf,
    /// Key file from `henox keygen`
    #[arg(long)]
    key: PathBuf,
    /// Where to write the resulting PGM
    #[arg(long)]
    out: PathBuf,
    /// Permutation plan override: four shape codes from L, J, U, V, R
    #[arg(long)]
    plan: Option<String>,
    /// File holding a 256-entry replacement for S-box 1
    #[arg(long)]
    sbox2: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// The input image cannot be read or used.
    #[error("{0}")]
    Image(String),
    /// The key file or cipher configuration is unusable.
    #[error("{0}")]
    Key(String),
    /// The S-box override table is unusable.
    #[error("{0}")]
    SBox(String),
    /// A malformed command-line value.
    #[error("{0}")]
    Usage(String),
    /// Output or other uncategorized I/O failure.
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Image(_) | CliError::Usage(_) => 2,
            CliError::Key(_) => 3,
            CliError::SBox(_) => 4,
        }
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Keygen { out, seed } => cmd_keygen(out, *seed),
        Command::Encrypt(args) => cmd_crypt(args, Mode::Encrypt),
        Command::Decrypt(args) => cmd_crypt(args, Mode::Decrypt),
        Command::Analyze {
            input,
            report,
            offset,
        } => cmd_analyze(input, report, offset),
    }
}

fn cmd_keygen(out: &Path, seed: Option<u64>) -> Result<(), CliError> {
    let mut rng = match seed {
        Some(value) => ChaCha8Rng::seed_from_u64(value),
        None => ChaCha8Rng::from_os_rng(),
    };
    // Draw order is part of the format: seed x0, seed y0, select x0,
    // select y0, all uniform in [-0.1, 0.1], inside the basin of attraction.
    let mut draw = || rng.random_range(-0.1..=0.1);
    let key = CipherKey {
        seed_orbit: HenonParams::classic(draw(), draw()),
        select_orbit: HenonParams::classic(draw(), draw()),
        modulus: Modulus::M256,
    };

    // Prove the key drives a full-size generation before writing it out.
    chaos::gen_seed_matrix(&key, 256, 256).map_err(|e| CliError::Key(e.to_string()))?;
    chaos::gen_selection_sequence(&key, 256 * 256).map_err(|e| CliError::Key(e.to_string()))?;

    // A failed write is output I/O, not an unusable key.
    keyfile::save(out, &key, &PermutationPlan::default()).map_err(|e| match e {
        KeyError::Io(io) => CliError::Io(io),
        other => CliError::Key(other.to_string()),
    })
}

enum Mode {
    Encrypt,
    Decrypt,
}

fn cmd_crypt(args: &CryptArgs, mode: Mode) -> Result<(), CliError> {
    let img = pgm::load(&args.input).map_err(image_error)?;
    let key_config = keyfile::load(&args.key).map_err(key_error)?;

    let mut plan = key_config.plan;
    if let Some(codes) = &args.plan {
        // The override replaces the shapes; the flip stays as configured.
        let flip = plan.flip();
        plan = codes
            .parse::<PermutationPlan>()
            .map_err(|e| CliError::Key(e.to_string()))?
            .with_flip(flip);
    }

    let sbox_set = match &args.sbox2 {
        Some(path) => SBoxSet::with_sbox2(
            sboxfile::load(path).map_err(|e| CliError::SBox(e.to_string()))?,
        ),
        None => SBoxSet::standard(),
    };

    let config = CipherConfig {
        key: key_config.key,
        plan,
        sbox_set,
    };
    let result = match mode {
        Mode::Encrypt => cipher::encrypt(&img, &config),
        Mode::Decrypt => cipher::decrypt(&img, &config),
    }
    .map_err(|e| match e {
        Error::DivergentOrbit { .. } => CliError::Key(e.to_string()),
        other => CliError::Image(other.to_string()),
    })?;

    write_pgm(&args.out, &result)
}

fn cmd_analyze(input: &Path, report_path: &Path, offset: &str) -> Result<(), CliError> {
    let offset = parse_offset(offset)?;
    let img = pgm::load(input).map_err(image_error)?;
    let analysis = analysis::analyze(&img, offset).map_err(|e| CliError::Image(e.to_string()))?;
    fs::write(report_path, report::to_json(&analysis))?;

    let horizontal = analysis
        .adjacent_correlation
        .horizontal
        .map_or_else(|| "undefined".to_owned(), |r| format!("{r:.6}"));
    println!(
        "entropy={:.6} horizontal_correlation={} chi_square={:.4}",
        analysis.entropy, horizontal, analysis.chi_square
    );
    Ok(())
}

fn parse_offset(text: &str) -> Result<(isize, isize), CliError> {
    let bad = || CliError::Usage(format!("bad offset {text:?}: expected dr,dc"));
    let (dr, dc) = text.split_once(',').ok_or_else(bad)?;
    let dr = dr.trim().parse().map_err(|_| bad())?;
    let dc = dc.trim().parse().map_err(|_| bad())?;
    Ok((dr, dc))
}

/// Input-image failures, including unreadable files, map to exit 2.
fn image_error(err: PgmError) -> CliError {
    match err {
        PgmError::Io(io) => CliError::Image(format!("cannot read image: {io}")),
        other => CliError::Image(other.to_string()),
    }
}

/// Key-file failures, including unreadable files, map to exit 3.
fn key_error(err: KeyError) -> CliError {
    match err {
        KeyError::Io(io) => CliError::Key(format!("cannot access key file: {io}")),
        other => CliError::Key(other.to_string()),
    }
}

/// Output-image failures map to exit 1; nothing else can fail in encode.
fn write_pgm(path: &Path, img: &GrayImage) -> Result<(), CliError> {
    pgm::save(path, img).map_err(|e| match e {
        PgmError::Io(io) => CliError::Io(io),
        other => CliError::Image(other.to_string()),
    })
}
