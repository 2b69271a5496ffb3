//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mvf_rmf_core::{
    build_orbit_table, build_symmetric_table, classify, compact_spectrum, compress, expand,
    function_counts, parse_value_vector, rmf_transform, sum_and_classify, transform_matrix,
    CompactKind, CompactVector, OrbitTable, Radix, ValueVector, DEFAULT_MATRIX_CAP,
};
use serde::Serialize;

use crate::cache::BasisCache;
use crate::error::{CliError, Result};
use crate::formats::{
    BasisDoc, ClassDoc, CompactDoc, CountDoc, MatrixDoc, OrbitTableDoc, SumDoc, ValueVectorDoc,
};
use crate::render;

#[derive(Debug, Parser)]
#[command(
    name = "mvf-rmf",
    version,
    about = "Reed-Muller-Fourier spectra and rotation symmetry of p-valued functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct Shape {
    /// Number of logic values
    #[arg(long)]
    p: u32,
    /// Number of arguments
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct ValuesIn {
    /// Value vector, digits contiguous for p <= 10, otherwise comma separated
    #[arg(long, conflicts_with = "input")]
    values: Option<String>,
    /// Read the value vector (text or JSON) from a file, `-` for stdin
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CompactIn {
    /// Compact vector in rank order
    #[arg(long, conflicts_with = "input")]
    compact: Option<String>,
    /// Read the compact vector (text or JSON) from a file, `-` for stdin
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CacheOpt {
    /// Directory for cached bases (default: $MVF_RMF_CACHE_DIR, else memory only)
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the transform matrix R_n
    Matrix {
        #[command(flatten)]
        shape: Shape,
        /// Refuse matrices with more than this many rows
        #[arg(long, default_value_t = DEFAULT_MATRIX_CAP)]
        max_dim: usize,
    },
    /// List cyclic orbits: representative, rank, cycle
    Orbits {
        #[command(flatten)]
        shape: Shape,
    },
    /// Report symmetric, rotation-symmetric or none
    Classify {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        input: ValuesIn,
    },
    /// RMF spectrum of a value vector (the transform is its own inverse)
    Transform {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        input: ValuesIn,
        /// Print as a map, x1 down the side
        #[arg(long)]
        map: bool,
    },
    /// Compact vector of a rotation symmetric function
    Compact {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        input: ValuesIn,
        /// Compact over multiset classes instead of cyclic orbits
        #[arg(long)]
        symmetric: bool,
    },
    /// Full value vector from a compact vector
    Expand {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        input: CompactIn,
        /// Input is indexed by multiset classes
        #[arg(long)]
        symmetric: bool,
    },
    /// Compact spectra of the elementary rotation symmetric functions
    Basis {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        cache: CacheOpt,
    },
    /// Compact spectrum from a compact function, or back again
    #[command(visible_alias = "inverse")]
    Spectrum {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        input: CompactIn,
        #[command(flatten)]
        cache: CacheOpt,
    },
    /// Sum of two compact rotation symmetric functions mod p, classified
    Sum {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Orbit and function counts
    Count {
        #[command(flatten)]
        shape: Shape,
    },
}

/// Runs the CLI on `argv` (program name first) and returns the exit status.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("invalid arguments");
            let first = first.strip_prefix("error: ").unwrap_or(first);
            let _ = writeln!(stderr, "error:usage: {first}");
            return 1;
        }
    };
    match dispatch(cli.command) {
        Ok(text) => match stdout.write_all(text.as_bytes()) {
            Ok(()) => 0,
            Err(e) => report(stderr, &CliError::Io(e)),
        },
        Err(e) => report(stderr, &e),
    }
}

fn report(stderr: &mut dyn Write, e: &CliError) -> i32 {
    let _ = writeln!(stderr, "error:{}: {}", e.kind(), e);
    e.exit_code()
}

fn radix(shape: &Shape) -> Result<Radix> {
    Ok(Radix::new(shape.p)?)
}

fn json(doc: &impl Serialize) -> Result<String> {
    let mut s = serde_json::to_string_pretty(doc)?;
    s.push('\n');
    Ok(s)
}

fn read_source(inline: Option<&str>, path: Option<&PathBuf>, what: &str) -> Result<String> {
    match (inline, path) {
        (Some(text), _) => Ok(text.to_string()),
        (None, Some(path)) if path.as_os_str() == "-" => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
        (None, Some(path)) => Ok(std::fs::read_to_string(path)?),
        (None, None) => Err(CliError::Usage(format!("missing {what}: give --{what} or --input"))),
    }
}

fn mismatch(what: &str, p: u32, n: usize, shape: &Shape) -> CliError {
    CliError::Usage(format!(
        "{what} document has p = {p}, n = {n} but the command asked for p = {}, n = {}",
        shape.p, shape.n
    ))
}

fn load_values(shape: &Shape, input: &ValuesIn) -> Result<ValueVector> {
    let text = read_source(input.values.as_deref(), input.input.as_ref(), "values")?;
    let text = text.trim();
    if text.starts_with('{') {
        let doc: ValueVectorDoc = serde_json::from_str(text)?;
        if doc.p != shape.p || doc.n != shape.n {
            return Err(mismatch("value vector", doc.p, doc.n, shape));
        }
        return doc.into_value_vector();
    }
    Ok(parse_value_vector(text, radix(shape)?, shape.n)?)
}

fn load_compact(shape: &Shape, input: &CompactIn, kind: CompactKind) -> Result<CompactVector> {
    let text = read_source(input.compact.as_deref(), input.input.as_ref(), "compact")?;
    parse_compact(shape, text.trim(), kind)
}

fn parse_compact(shape: &Shape, text: &str, kind: CompactKind) -> Result<CompactVector> {
    if text.starts_with('{') {
        let doc: CompactDoc = serde_json::from_str(text)?;
        if doc.p != shape.p || doc.n != shape.n {
            return Err(mismatch("compact vector", doc.p, doc.n, shape));
        }
        let c = doc.into_compact()?;
        if c.kind() != kind {
            return Err(CliError::Usage(format!(
                "compact vector is of {} kind, expected {kind}",
                c.kind()
            )));
        }
        return Ok(c);
    }
    Ok(CompactVector::parse(text, radix(shape)?, shape.n, kind)?)
}

fn table_for(shape: &Shape, symmetric: bool) -> Result<OrbitTable> {
    let p = radix(shape)?;
    Ok(if symmetric {
        build_symmetric_table(p, shape.n)?
    } else {
        build_orbit_table(p, shape.n)?
    })
}

fn kind(symmetric: bool) -> CompactKind {
    if symmetric {
        CompactKind::Symmetric
    } else {
        CompactKind::Rotation
    }
}

fn values_out(f: &ValueVector, format: Format) -> Result<String> {
    match format {
        Format::Text => Ok(format!("{}\n", f.to_text())),
        Format::Json => json(&ValueVectorDoc::from(f)),
    }
}

fn compact_out(c: &CompactVector, t: &OrbitTable, format: Format) -> Result<String> {
    match format {
        Format::Text => Ok(render::compact(t, c)),
        Format::Json => json(&CompactDoc::new(c, t)),
    }
}

fn dispatch(command: Command) -> Result<String> {
    match command {
        Command::Matrix { shape, max_dim } => {
            let m = transform_matrix(radix(&shape)?, shape.n, max_dim)?;
            match shape.format {
                Format::Text => Ok(render::matrix(&m)),
                Format::Json => json(&MatrixDoc::from(&m)),
            }
        }
        Command::Orbits { shape } => {
            let t = build_orbit_table(radix(&shape)?, shape.n)?;
            match shape.format {
                Format::Text => Ok(render::orbits(&t)),
                Format::Json => json(&OrbitTableDoc::from(&t)),
            }
        }
        Command::Classify { shape, input } => {
            let f = load_values(&shape, &input)?;
            let class = classify(&f);
            match shape.format {
                Format::Text => Ok(format!("{class}\n")),
                Format::Json => json(&ClassDoc::new(f.p(), f.n(), class)),
            }
        }
        Command::Transform { shape, input, map } => {
            let s = rmf_transform(&load_values(&shape, &input)?);
            if map && shape.format == Format::Text {
                return Ok(render::value_map(&s));
            }
            values_out(&s, shape.format)
        }
        Command::Compact {
            shape,
            input,
            symmetric,
        } => {
            let f = load_values(&shape, &input)?;
            let t = table_for(&shape, symmetric)?;
            compact_out(&compress(&f, &t)?, &t, shape.format)
        }
        Command::Expand {
            shape,
            input,
            symmetric,
        } => {
            let c = load_compact(&shape, &input, kind(symmetric))?;
            let t = table_for(&shape, symmetric)?;
            values_out(&expand(&c, &t)?, shape.format)
        }
        Command::Basis { shape, cache } => {
            let b = BasisCache::from_env(cache.cache_dir).get(radix(&shape)?, shape.n)?;
            match shape.format {
                Format::Text => Ok(render::basis(&b)),
                Format::Json => json(&BasisDoc::from(&*b)),
            }
        }
        Command::Spectrum {
            shape,
            input,
            cache,
        } => {
            let c = load_compact(&shape, &input, CompactKind::Rotation)?;
            let b = BasisCache::from_env(cache.cache_dir).get(radix(&shape)?, shape.n)?;
            compact_out(&compact_spectrum(&c, &b)?, b.table(), shape.format)
        }
        Command::Sum { shape, a, b } => {
            let a = parse_compact(&shape, a.trim(), CompactKind::Rotation)?;
            let b = parse_compact(&shape, b.trim(), CompactKind::Rotation)?;
            let t = build_orbit_table(radix(&shape)?, shape.n)?;
            let (sum, class) = sum_and_classify(&a, &b, &t)?;
            let split = t.distinguishing_classes(&sum)?;
            match shape.format {
                Format::Text => Ok(format!(
                    "{}class: {class}\ndistinguishing classes: {split}\n",
                    render::compact_columns(&t, &["a", "b", "sum"], &[&a, &b, &sum])
                )),
                Format::Json => json(&SumDoc {
                    schema: crate::formats::SCHEMA.to_string(),
                    p: shape.p,
                    n: shape.n,
                    entries: sum.entries().to_vec(),
                    class: class.as_str().to_string(),
                    distinguishing_classes: split,
                }),
            }
        }
        Command::Count { shape } => {
            let p = radix(&shape)?;
            let c = function_counts(p, shape.n)?;
            match shape.format {
                Format::Text => Ok(format!(
                    "orbits: {}\nkappa: {}\nsymmetric functions: {}\n\
                     rotation-symmetric functions (incl. symmetric): {}\n\
                     strictly rotation-symmetric functions: {}\n",
                    c.orbits, c.kappa, c.symmetric, c.rotation_inclusive, c.rotation_strict
                )),
                Format::Json => json(&CountDoc::new(p, shape.n, &c)),
            }
        }
    }
}
