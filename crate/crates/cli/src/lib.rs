//! Command-line front end: `gen`, `gen-bisector`, `check`, `invert` and
//! `oracle`.
//!
//! Records go to stdout, diagnostics to stderr. Exit status is 0 for success
//! or a positive verdict, 1 for a negative verdict or an oracle discrepancy,
//! and 2 for usage errors.

pub mod record;

use std::io::Write;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};
use double_angle::bisector::{bisector_segments, family_bisector, sub_triangle};
use double_angle::family::{
    enumerate_bisector_family, enumerate_family, is_primitive, params_from_triangle,
};
use double_angle::oracle::{compare_with, SearchMode, Which};
use double_angle::triangle::{classify, cosines, satisfies_triangle_inequalities};
use double_angle::{CosineTriple, FamilyError, Rational, Triangle};

use record::{approx_degrees, write_records, Format, OutputRecord};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Largest bound accepted with `--naive`; the triple loop is cubic.
pub const NAIVE_MAX_BOUND: u64 = 300;

#[derive(Debug, Parser)]
#[command(
    name = "double-angle",
    version,
    about = "Integral triangles with angle B twice angle A"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every triangle with B = 2A up to a perimeter bound.
    Gen(GenArgs),
    /// List the members whose bisector of B has integral length.
    ///
    /// No such triangle is primitive (the side gcd is d*m with m >= 2), so
    /// --primitive always yields an empty list.
    GenBisector(GenArgs),
    /// Report membership, parameters, shape, cosines and bisector data.
    Check(CheckArgs),
    /// Print only the (l, k, m) parameters of a member.
    Invert(SidesArgs),
    /// Compare the parametric enumeration with an exhaustive search.
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max_perimeter: u64,
    /// Only triangles whose sides have gcd 1.
    #[arg(long)]
    primitive: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Add approximate angles in degrees (display only, not exact).
    #[arg(long)]
    approx: bool,
}

#[derive(Debug, Args)]
struct SidesArgs {
    #[arg(value_parser = clap::value_parser!(u64).range(1..))]
    a: u64,
    #[arg(value_parser = clap::value_parser!(u64).range(1..))]
    b: u64,
    #[arg(value_parser = clap::value_parser!(u64).range(1..))]
    c: u64,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[command(flatten)]
    sides: SidesArgs,
    /// Add approximate angles in degrees (display only, not exact).
    #[arg(long)]
    approx: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Result1,
    Result2,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
    max_perimeter: u64,
    #[arg(long, value_enum, default_value_t = FamilyArg::Result1)]
    family: FamilyArg,
    /// Use the plain triple loop instead of the quadratic scan.
    #[arg(long)]
    naive: bool,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_NEGATIVE
        }
    }
}

fn dispatch<W: Write, E: Write>(command: Command, out: &mut W, err: &mut E) -> Result<u8> {
    match command {
        Command::Gen(args) => {
            let members = enumerate_family(args.max_perimeter, args.primitive);
            let records = members
                .iter()
                .map(|m| OutputRecord::from_member(m, false, args.approx))
                .collect::<Result<Vec<_>>>()?;
            write_records(out, &records, args.format, args.approx)?;
            Ok(EXIT_OK)
        }
        Command::GenBisector(args) => {
            if args.primitive {
                writeln!(
                    err,
                    "note: the integral-bisector family has no primitive members; \
                     gcd(a, b, c) = d*m and m >= 2, while primitivity needs m = d = 1"
                )?;
            }
            let members = enumerate_bisector_family(args.max_perimeter, args.primitive);
            let records = members
                .iter()
                .map(|m| OutputRecord::from_member(m, true, args.approx))
                .collect::<Result<Vec<_>>>()?;
            write_records(out, &records, args.format, args.approx)?;
            Ok(EXIT_OK)
        }
        Command::Check(args) => check(&args.sides, args.approx, out),
        Command::Invert(sides) => invert(&sides, out, err),
        Command::Oracle(args) => oracle(&args, out, err),
    }
}

fn triangle_of(sides: &SidesArgs) -> Triangle {
    Triangle::new(sides.a, sides.b, sides.c).expect("clap rejects zero sides")
}

fn write_cosines<W: Write>(out: &mut W, cos: &CosineTriple, approx: bool) -> Result<()> {
    for (label, value) in [("A", cos.cos_a), ("B", cos.cos_b), ("C", cos.cos_c)] {
        if approx {
            writeln!(
                out,
                "cos {label}: {value}  (angle ~ {} deg, approx)",
                approx_degrees(&value)
            )?;
        } else {
            writeln!(out, "cos {label}: {value}")?;
        }
    }
    Ok(())
}

/// Lengths read better as `10` than `10/1`.
fn length(q: Rational) -> String {
    match q.to_integer() {
        Some(n) => n.to_string(),
        None => q.to_string(),
    }
}

fn check<W: Write>(sides: &SidesArgs, approx: bool, out: &mut W) -> Result<u8> {
    let t = triangle_of(sides);
    writeln!(out, "triangle: {t}")?;
    if !satisfies_triangle_inequalities(&t) {
        writeln!(out, "in family: no (sides violate the triangle inequality)")?;
        return Ok(EXIT_NEGATIVE);
    }
    let params = match params_from_triangle(&t) {
        Ok(p) => Some(p),
        Err(FamilyError::NotInFamily(_)) => None,
        Err(e) => return Err(e.into()),
    };
    match params {
        Some(p) => {
            writeln!(out, "in family: yes (angle B = 2 x angle A)")?;
            writeln!(out, "params: {p}")?;
            writeln!(out, "branch: {}", p.branch())?;
        }
        None => {
            writeln!(out, "in family: no (b^2 != a(a + c))")?;
        }
    }
    writeln!(
        out,
        "primitive: {}",
        if is_primitive(&t) { "yes" } else { "no" }
    )?;
    writeln!(out, "angle class: {}", classify(&t)?)?;
    match cosines(&t) {
        Ok(cos) => write_cosines(out, &cos, approx)?,
        Err(e) => writeln!(out, "cosines: unavailable ({e})")?,
    }

    let Some(p) = params else {
        match bisector_segments(&t) {
            Ok(data) => writeln!(
                out,
                "bisector of B: |AD| = {}, |DC| = {}",
                length(data.ad),
                length(data.dc)
            )?,
            Err(e) => writeln!(out, "bisector of B: unavailable ({e})")?,
        }
        return Ok(EXIT_NEGATIVE);
    };
    match family_bisector(&t) {
        Ok(data) => {
            let r = data.r.expect("family bisector sets r");
            writeln!(
                out,
                "bisector of B: |AD| = {}, |DC| = {}, r = |BD| = {}",
                length(data.ad),
                length(data.dc),
                length(r)
            )?;
            if let Some(n) = r.to_integer() {
                let bp = p
                    .bisector_params()
                    .expect("integral bisector implies m | l");
                writeln!(out, "integral bisector: yes, r = {n} ({bp})")?;
                writeln!(out, "sub-triangle BDC: {}", sub_triangle(&t)?)?;
            } else {
                writeln!(out, "integral bisector: no")?;
            }
        }
        Err(e) => writeln!(out, "bisector of B: unavailable ({e})")?,
    }
    Ok(EXIT_OK)
}

fn invert<W: Write, E: Write>(sides: &SidesArgs, out: &mut W, err: &mut E) -> Result<u8> {
    let t = triangle_of(sides);
    match params_from_triangle(&t) {
        Ok(p) => {
            writeln!(out, "{p}")?;
            Ok(EXIT_OK)
        }
        Err(FamilyError::NotInFamily(_)) => {
            writeln!(err, "{t} is not in the family")?;
            Ok(EXIT_NEGATIVE)
        }
        Err(e) => Err(e.into()),
    }
}

fn oracle<W: Write, E: Write>(args: &OracleArgs, out: &mut W, err: &mut E) -> Result<u8> {
    let mode = if args.naive {
        if args.max_perimeter > NAIVE_MAX_BOUND {
            writeln!(
                err,
                "error: --naive is limited to --max-perimeter <= {NAIVE_MAX_BOUND}"
            )?;
            return Ok(EXIT_USAGE);
        }
        SearchMode::Naive
    } else {
        SearchMode::Quadratic
    };
    let which = match args.family {
        FamilyArg::Result1 => Which::Result1,
        FamilyArg::Result2 => Which::Result2,
    };
    let report = compare_with(args.max_perimeter, which, mode);
    if report.verified() {
        writeln!(
            out,
            "verified, {} members (family {which}, max perimeter {})",
            report.found.len(),
            report.bound
        )?;
        return Ok(EXIT_OK);
    }
    writeln!(
        out,
        "discrepancy (family {which}, max perimeter {}): {} found by search, {} missing from parametric, {} extra in parametric",
        report.bound,
        report.found.len(),
        report.missing_from_parametric.len(),
        report.extra_in_parametric.len()
    )?;
    for t in &report.missing_from_parametric {
        writeln!(out, "missing {t}")?;
    }
    for t in &report.extra_in_parametric {
        writeln!(out, "extra {t}")?;
    }
    Ok(EXIT_NEGATIVE)
}
