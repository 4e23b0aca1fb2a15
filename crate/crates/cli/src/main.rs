//! Command-line front end for finite orthomodular posets and unsharp
//! residuated structures: validate inputs against the full law battery,
//! print implication tables, convert between the two structure kinds, run
//! round-trip comparisons, enumerate small structures up to isomorphism,
//! and export Hasse diagrams as DOT.
//!
//! Inputs are either paths to structure files (see [`format`]) or
//! `catalog:<name>` references with an optional trailing numeric
//! parameter. Exit codes: 0 when every requested check passes, 1 when law
//! violations are found (reported with witnesses), 2 for usage or file
//! parse errors. Validation-style commands end with a machine-readable
//! `RESULT pass|fail <n_violations>` line.

/// Writes a line to stdout, exiting quietly if the reader closed the pipe
/// (e.g. `unsharp imp-table ... | head`).
macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if writeln!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

/// [`outln!`] without the trailing newline, for pre-terminated text.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if write!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

mod dot;
mod format;

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use unsharp_core::functors::{roundtrip_omp, roundtrip_urp, to_omp, to_urp, RoundTripReport};
use unsharp_core::omp::{check_orthomodular, implication};
use unsharp_core::search::{enumerate, stress_theorems, StructureClass};
use unsharp_core::urp::validate_urp;
use unsharp_core::{catalog, Report, Structure};

#[derive(Parser)]
#[command(
    name = "unsharp",
    version,
    about = "Finite orthomodular posets and unsharp residuated structures: \
             validate, convert, search, export"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every law check on a structure and report violations
    Validate {
        /// Structure file path, or catalog:<name>
        input: String,
        /// Numeric parameter for catalog references
        param: Option<usize>,
    },
    /// Print the implication table, one `x -> y = {...}` line per pair
    ImpTable {
        /// Structure file path, or catalog:<name>
        input: String,
        /// Numeric parameter for catalog references
        param: Option<usize>,
    },
    /// Convert between the two structure kinds and print the result
    Convert {
        /// Build the residuated structure of an orthomodular poset
        #[arg(long, conflicts_with = "to_omp")]
        to_urp: bool,
        /// Recover the orthomodular poset of a residuated structure
        #[arg(long)]
        to_omp: bool,
        /// Structure file path, or catalog:<name>
        input: String,
        /// Numeric parameter for catalog references
        param: Option<usize>,
    },
    /// Convert there and back, then compare against the original
    Roundtrip {
        /// Structure file path, or catalog:<name>
        input: String,
        /// Numeric parameter for catalog references
        param: Option<usize>,
    },
    /// List built-in structures, or print one as a structure file
    Catalog {
        /// Entry name; omit to list all entries
        name: Option<String>,
        /// Numeric parameter for parametric entries
        param: Option<usize>,
    },
    /// Enumerate small structures of a given class up to isomorphism
    Search {
        /// Carrier size (1..=8)
        #[arg(long)]
        size: usize,
        /// Structure class to keep
        #[arg(long, value_enum, default_value = "orthomodular")]
        class: ClassArg,
        /// Also print one representative per isomorphism class
        #[arg(long)]
        canonical: bool,
        /// Run the full law battery and round trip on every orthomodular
        /// structure up to --size (implies the orthomodular class)
        #[arg(long)]
        stress: bool,
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Print the Hasse diagram as a DOT digraph
    ExportDot {
        /// Structure file path, or catalog:<name>
        input: String,
        /// Numeric parameter for catalog references
        param: Option<usize>,
        /// Overlay the involution as dashed undirected edges
        #[arg(long)]
        show_involution: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClassArg {
    /// Bounded posets with an antitone involution
    #[value(alias = "involutive-poset")]
    BoundedInvolutive,
    /// Orthomodular posets
    #[value(alias = "orthomodular-poset")]
    Orthomodular,
}

impl From<ClassArg> for StructureClass {
    fn from(c: ClassArg) -> StructureClass {
        match c {
            ClassArg::BoundedInvolutive => StructureClass::BoundedInvolutive,
            ClassArg::Orthomodular => StructureClass::Orthomodular,
        }
    }
}

/// A command failure: message for stderr plus the process exit code
/// (1 = law violations, 2 = usage or parse problems).
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn law(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Validate { input, param } => cmd_validate(&input, param),
        Command::ImpTable { input, param } => cmd_imp_table(&input, param),
        Command::Convert {
            to_urp,
            to_omp,
            input,
            param,
        } => cmd_convert(to_urp, to_omp, &input, param),
        Command::Roundtrip { input, param } => cmd_roundtrip(&input, param),
        Command::Catalog { name, param } => cmd_catalog(name.as_deref(), param),
        Command::Search {
            size,
            class,
            canonical,
            stress,
            jobs,
        } => cmd_search(size, class, canonical, stress, jobs),
        Command::ExportDot {
            input,
            param,
            show_involution,
        } => cmd_export_dot(&input, param, show_involution),
    }
}

/// Resolves an input reference: `catalog:<name>` (underscores tolerated)
/// with an optional parameter, or a structure file path.
fn load(input: &str, param: Option<usize>) -> Result<format::Assembly, Failure> {
    if let Some(rest) = input.strip_prefix("catalog:") {
        let name = rest.replace('_', "-");
        let structure = catalog::build(&name, param).map_err(|e| Failure::usage(e.to_string()))?;
        let display = match param {
            Some(p) => format!("{name}-{p}"),
            None => name,
        };
        return Ok(format::Assembly {
            name: display,
            poset_report: Report::new(),
            extras: Report::new(),
            structure: Some(structure),
        });
    }
    if param.is_some() {
        return Err(Failure::usage(
            "a numeric parameter is only valid with catalog:<name> inputs",
        ));
    }
    let text = fs::read_to_string(input)
        .map_err(|e| Failure::usage(format!("cannot read '{input}': {e}")))?;
    let parsed = format::parse(&text).map_err(|e| Failure::usage(format!("{input}: {e}")))?;
    Ok(parsed.assemble())
}

/// Unwraps the assembled structure, printing the failing report first when
/// there is none to unwrap.
fn require_structure(assembly: format::Assembly) -> Result<(String, Structure), Failure> {
    match assembly.structure {
        Some(s) => Ok((assembly.name, s)),
        None => {
            out!("{}", assembly.poset_report.render());
            out!("{}", assembly.extras.render());
            Err(Failure::law(
                "the input fails carrier or table checks; see the report above",
            ))
        }
    }
}

fn result_line(violations: usize) -> u8 {
    if violations == 0 {
        outln!("RESULT pass 0");
        0
    } else {
        outln!("RESULT fail {violations}");
        1
    }
}

fn cmd_validate(input: &str, param: Option<usize>) -> Result<u8, Failure> {
    let assembly = load(input, param)?;
    match assembly.structure {
        None => {
            out!("{}", assembly.poset_report.render());
            out!("{}", assembly.extras.render());
            Ok(result_line(
                assembly.poset_report.total_violations() + assembly.extras.total_violations(),
            ))
        }
        Some(Structure::Omp(p)) => {
            let mut report = p.check_order_laws();
            report.merge(check_orthomodular(&p).to_report());
            report.merge(assembly.extras);
            out!("{}", report.render());
            Ok(result_line(report.total_violations()))
        }
        Some(Structure::Urp(s)) => {
            let report = validate_urp(&s);
            out!("{}", report.render());
            out!("{}", assembly.extras.render());
            Ok(result_line(
                report.total_law_violations() + assembly.extras.total_violations(),
            ))
        }
    }
}

fn cmd_imp_table(input: &str, param: Option<usize>) -> Result<u8, Failure> {
    let (_, structure) = require_structure(load(input, param)?)?;
    let p = structure.poset();
    let mut underivable = 0usize;
    for x in p.elements() {
        for y in p.elements() {
            let entry = match &structure {
                Structure::Urp(s) => Ok(s.implication.get(x, y)),
                Structure::Omp(_) => implication(p, x, y),
            };
            match entry {
                Ok(s) => outln!("{} -> {} = {}", p.label(x), p.label(y), p.format_subset(s)),
                Err(_) => {
                    underivable += 1;
                    outln!(
                        "{} -> {} = (undefined: the join in the defining formula does not exist)",
                        p.label(x),
                        p.label(y)
                    );
                }
            }
        }
    }
    Ok(result_line(underivable))
}

fn cmd_convert(
    want_urp: bool,
    want_omp: bool,
    input: &str,
    param: Option<usize>,
) -> Result<u8, Failure> {
    if !want_urp && !want_omp {
        return Err(Failure::usage("pass exactly one of --to-urp or --to-omp"));
    }
    let (name, structure) = require_structure(load(input, param)?)?;
    let converted = match (structure, want_urp) {
        (Structure::Omp(p), true) => to_urp(&p)
            .map(Structure::Urp)
            .map_err(|e| Failure::law(format!("conversion refused: {e}")))?,
        (Structure::Urp(s), false) => to_omp(&s)
            .map(Structure::Omp)
            .map_err(|e| Failure::law(format!("conversion refused: {e}")))?,
        (Structure::Omp(_), false) => {
            return Err(Failure::usage("--to-omp expects a urp input"));
        }
        (Structure::Urp(_), true) => {
            return Err(Failure::usage("--to-urp expects an omp input"));
        }
    };
    out!("{}", format::serialize(&converted, &name));
    Ok(0)
}

fn print_roundtrip(headline: &str, r: &RoundTripReport) -> u8 {
    if r.equal {
        outln!("{headline}: equal");
    } else {
        outln!("{headline}: DIFFERS");
        if let Some(d) = &r.first_discrepancy {
            outln!("  first discrepancy: {d}");
        }
    }
    for i in &r.infos {
        outln!("info: {i}");
    }
    result_line(usize::from(!r.equal))
}

fn cmd_roundtrip(input: &str, param: Option<usize>) -> Result<u8, Failure> {
    let (_, structure) = require_structure(load(input, param)?)?;
    match structure {
        Structure::Omp(p) => {
            let r = roundtrip_omp(&p)
                .map_err(|e| Failure::law(format!("round trip impossible: {e}")))?;
            Ok(print_roundtrip("P(R(P)) = P", &r))
        }
        Structure::Urp(s) => {
            let r = roundtrip_urp(&s)
                .map_err(|e| Failure::law(format!("round trip impossible: {e}")))?;
            Ok(print_roundtrip("R(P(R)) = R", &r))
        }
    }
}

fn cmd_catalog(name: Option<&str>, param: Option<usize>) -> Result<u8, Failure> {
    let Some(name) = name else {
        if param.is_some() {
            return Err(Failure::usage("a parameter needs an entry name"));
        }
        for e in catalog::entries() {
            match e.parameter {
                Some(p) => outln!("{} <{}>: {}", e.name, p, e.summary),
                None => outln!("{}: {}", e.name, e.summary),
            }
        }
        return Ok(0);
    };
    let normalized = name.replace('_', "-");
    let structure =
        catalog::build(&normalized, param).map_err(|e| Failure::usage(e.to_string()))?;
    let display = match param {
        Some(p) => format!("{normalized}-{p}"),
        None => normalized,
    };
    out!("{}", format::serialize(&structure, &display));
    Ok(0)
}

fn cmd_search(
    size: usize,
    class: ClassArg,
    canonical: bool,
    stress: bool,
    jobs: usize,
) -> Result<u8, Failure> {
    if stress {
        let out = stress_theorems(size, jobs).map_err(|e| Failure::usage(e.to_string()))?;
        for (sz, classes) in &out.per_size {
            let plural = if *classes == 1 { "" } else { "es" };
            outln!("size {sz}: {classes} isomorphism class{plural}");
        }
        outln!("structures tested: {}", out.structures);
        for f in &out.failures {
            outln!("FAIL {f}");
        }
        return Ok(result_line(out.failures.len()));
    }
    let class = StructureClass::from(class);
    let out = enumerate(size, class, jobs).map_err(|e| Failure::usage(e.to_string()))?;
    let plural = if out.count() == 1 { "" } else { "es" };
    outln!(
        "size {} class {}: {} labeled candidates, {} isomorphism class{plural}",
        out.size,
        class.name(),
        out.labeled_candidates,
        out.count()
    );
    if canonical {
        for (i, rep) in out.representatives.iter().enumerate() {
            outln!();
            out!(
                "{}",
                format::serialize(
                    &Structure::Omp(rep.clone()),
                    &format!("{}-{}-{}", class.name(), size, i)
                )
            );
        }
    }
    Ok(0)
}

fn cmd_export_dot(input: &str, param: Option<usize>, show_involution: bool) -> Result<u8, Failure> {
    let (name, structure) = require_structure(load(input, param)?)?;
    out!(
        "{}",
        dot::export_dot(structure.poset(), &name, show_involution)
    );
    Ok(0)
}
