//! `pk`: coloring invariants of pseudoknots from extended Conway symbols.
//!
//! Symbols contain spaces, so pass each one as a single quoted argument,
//! or use `--stdin` to read one symbol per line.

mod commands;
mod ranges;

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pseudoknot::diagram::DEFAULT_MAX_PRECROSSINGS;
use pseudoknot::families::DEFAULT_GRID;
use pseudoknot::invariants::Settings;

use commands::{Failure, Render};

#[derive(Parser)]
#[command(name = "pk", version, about = "Coloring invariants of pseudoknots and pseudolinks")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest number of precrossings whose resolutions are enumerated.
    #[arg(long, default_value_t = DEFAULT_MAX_PRECROSSINGS, global = true)]
    max_precrossings: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Where the symbols come from.
#[derive(Args)]
struct Input {
    /// Conway symbol, quoted. May start with `-`.
    #[arg(required_unless_present = "stdin", conflicts_with = "stdin", allow_hyphen_values = true)]
    symbol: Option<String>,
    /// Read one symbol per line from standard input.
    #[arg(long)]
    stdin: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Expand shorthand and summarize the diagram.
    Parse {
        #[command(flatten)]
        input: Input,
        /// Include the diagram JSON.
        #[arg(long)]
        emit_diagram: bool,
    },
    /// Determinant of a classical diagram.
    Det {
        #[command(flatten)]
        input: Input,
    },
    /// Pseudodeterminant with the determinant of every resolution.
    Pseudodet {
        #[command(flatten)]
        input: Input,
    },
    /// Whether every resolution is colorable mod p.
    Colorable {
        #[command(flatten)]
        input: Input,
        #[arg(long = "mod", value_name = "P")]
        modulus: u64,
        /// Show one coloring per resolution.
        #[arg(long)]
        witness: bool,
    },
    /// Whether the diagram is strong colorable mod p.
    Strong {
        #[command(flatten)]
        input: Input,
        #[arg(long = "mod", value_name = "P")]
        modulus: u64,
        /// Show one strong coloring.
        #[arg(long)]
        witness: bool,
    },
    /// All nontrivial colorings mod p, per resolution.
    Colorings {
        #[command(flatten)]
        input: Input,
        #[arg(long = "mod", value_name = "P")]
        modulus: u64,
        /// Colorings of the strong system instead.
        #[arg(long)]
        strong: bool,
    },
    /// Kauffman-Harary property at the pseudodeterminant modulus.
    Kh {
        #[command(flatten)]
        input: Input,
        /// Print the witness colorings in text output.
        #[arg(long)]
        witness: bool,
    },
    /// All p up to the bound for which the diagram is colorable mod p.
    ColoringNumbers {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 100)]
        bound: u64,
    },
    /// Pseudodeterminants and coloring numbers for a file of symbols.
    Census {
        /// Newline-separated symbols; `#` starts a comment. `-` reads stdin.
        file: String,
        #[arg(long, default_value_t = 100)]
        bound: u64,
    },
    /// The table of parametric families.
    Families {
        #[command(subcommand)]
        command: FamiliesCommand,
    },
}

#[derive(Subcommand)]
enum FamiliesCommand {
    /// List every row.
    List,
    /// Template and formula of one row.
    Show { row: i64 },
    /// Compare computed pseudodeterminants with the formulas.
    Verify {
        /// Rows to check, e.g. `1,17-19`. Defaults to all rows.
        #[arg(long)]
        rows: Option<String>,
        /// Values taken by every parameter, e.g. `1-3`.
        #[arg(long)]
        grid: Option<String>,
    },
}

fn emit<T: Render>(out: &T, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(out).expect("output serializes")),
        Format::Text => print!("{}", out.text()),
    }
}

fn read_stdin() -> Result<String, Failure> {
    let mut buf = String::new();
    std::io::stdin().read_to_string(&mut buf).map_err(|e| Failure::Domain(format!("reading stdin: {e}")))?;
    Ok(buf)
}

/// Run `f` on the one symbol or on every stdin line. In stdin mode JSON
/// output is an array, errors go to stderr and the first one decides the
/// exit status after all lines are processed.
fn per_symbol<T, F>(input: &Input, format: Format, f: F) -> Result<(), Failure>
where
    T: Render,
    F: Fn(&str) -> Result<T, Failure>,
{
    if let Some(symbol) = &input.symbol {
        emit(&f(symbol)?, format);
        return Ok(());
    }
    let text = read_stdin()?;
    let mut done = Vec::new();
    let mut first_error = None;
    for (line, symbol) in commands::symbol_lines(&text) {
        match f(&symbol) {
            Ok(v) => done.push(v),
            Err(e) => {
                eprintln!("line {line}: {symbol}: {}", e.message());
                first_error.get_or_insert(e);
            }
        }
    }
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&done).expect("output serializes")),
        Format::Text => done.iter().for_each(|v| print!("{}", v.text())),
    }
    first_error.map_or(Ok(()), Err)
}

fn list_arg(spec: &str, flag: &str) -> Result<Vec<i64>, Failure> {
    ranges::parse_list(spec).map_err(|e| Failure::Usage(format!("--{flag}: {e}")))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let settings = Settings::default().with_max_precrossings(cli.max_precrossings);
    let s = &settings;
    let fmt = cli.format;
    match cli.command {
        Command::Parse { input, emit_diagram } => per_symbol(&input, fmt, |x| commands::parse(x, emit_diagram)),
        Command::Det { input } => per_symbol(&input, fmt, commands::det),
        Command::Pseudodet { input } => per_symbol(&input, fmt, |x| commands::pseudodet(x, s)),
        Command::Colorable { input, modulus, witness } => {
            per_symbol(&input, fmt, |x| commands::colorable(x, modulus, witness, s))
        }
        Command::Strong { input, modulus, witness } => {
            per_symbol(&input, fmt, |x| commands::strong(x, modulus, witness, s))
        }
        Command::Colorings { input, modulus, strong } => {
            per_symbol(&input, fmt, |x| commands::colorings(x, modulus, strong, s))
        }
        Command::Kh { input, witness } => per_symbol(&input, fmt, |x| commands::kh(x, witness, s)),
        Command::ColoringNumbers { input, bound } => {
            per_symbol(&input, fmt, |x| commands::coloring_numbers(x, bound, s))
        }
        Command::Census { file, bound } => {
            let text = if file == "-" {
                read_stdin()?
            } else {
                std::fs::read_to_string(&file).map_err(|e| Failure::Domain(format!("{file}: {e}")))?
            };
            let out = commands::census(&text, bound, s);
            emit(&out, fmt);
            if out.all_failed() {
                return Err(Failure::Domain("no symbol could be processed".into()));
            }
            Ok(())
        }
        Command::Families { command } => match command {
            FamiliesCommand::List => {
                emit(&commands::families_list(), fmt);
                Ok(())
            }
            FamiliesCommand::Show { row } => {
                emit(&commands::families_show(row)?, fmt);
                Ok(())
            }
            FamiliesCommand::Verify { rows, grid } => {
                let rows = rows.as_deref().map(|r| list_arg(r, "rows")).transpose()?;
                let grid = match grid.as_deref() {
                    Some(g) => list_arg(g, "grid")?,
                    None => DEFAULT_GRID.to_vec(),
                };
                let out = commands::families_verify(rows.as_deref(), &grid, s)?;
                emit(&out, fmt);
                if out.has_errors() {
                    return Err(Failure::Domain("some family points could not be computed".into()));
                }
                Ok(())
            }
        },
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors by itself.
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
