//! The `multcode` command-line tool.
//!
//! Exit codes: 0 on success, 2 for invalid code parameters (including
//! command-line usage errors), 3 for invalid input data.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};

use crate::error::Error;
use crate::field::Field;
use crate::mpoly::MVPoly;
use crate::multiplicity::MultCode;
use crate::textio;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID_PARAMETERS: u8 = 2;
pub const EXIT_INVALID_DATA: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "multcode",
    version,
    about = "Systematic encoding of multiplicity codes over GF(p^t)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Code parameters: the field GF(p^t), `m` variables, derivative order `s`, degree `d`.
#[derive(Args, Debug, Clone, Copy)]
pub struct CodeSpec {
    /// Field characteristic (prime)
    #[arg(long)]
    pub p: u64,
    /// Extension degree
    #[arg(long, default_value_t = 1)]
    pub t: u64,
    /// Number of variables
    #[arg(long)]
    pub m: usize,
    /// Multiplicity: derivatives of weight below s are sent
    #[arg(long)]
    pub s: u32,
    /// Degree bound, 0 <= d < s * p^t
    #[arg(long, allow_hyphen_values = true)]
    pub d: i64,
}

impl CodeSpec {
    pub fn build(&self) -> Result<MultCode, Error> {
        let field = Field::new(self.p, self.t)?;
        MultCode::new(&field, self.m, self.s, self.d)
    }
}

#[derive(Args, Debug)]
struct Io {
    /// Input file (stdin when omitted)
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print code parameters and the information-set layout
    Params {
        #[command(flatten)]
        spec: CodeSpec,
    },
    /// Encode a message file into a codeword file
    #[command(group(ArgGroup::new("mode").args(["systematic", "fast", "monomial"])))]
    Encode {
        #[command(flatten)]
        spec: CodeSpec,
        #[command(flatten)]
        io: Io,
        /// Systematic encoding through the recomposed polynomial (default)
        #[arg(long)]
        systematic: bool,
        /// Systematic encoding from the components alone
        #[arg(long)]
        fast: bool,
        /// Non-systematic: the message lists the coefficients of all
        /// monomials of degree <= d in graded-lex order
        #[arg(long)]
        monomial: bool,
    },
    /// Read the message back from the information set of a codeword
    Extract {
        #[command(flatten)]
        spec: CodeSpec,
        #[command(flatten)]
        io: Io,
    },
    /// Split a polynomial into its components F_j
    Decompose {
        #[command(flatten)]
        spec: CodeSpec,
        #[command(flatten)]
        io: Io,
    },
}

enum Failure {
    Parameters(String),
    Data(String),
}

impl Failure {
    fn data(e: impl std::fmt::Display) -> Self {
        Failure::Data(e.to_string())
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Failure::Data(format!("cannot read {}: {e}", path.display()))),
        None => std::io::read_to_string(std::io::stdin())
            .map_err(|e| Failure::Data(format!("cannot read stdin: {e}"))),
    }
}

fn write_output(path: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(path) => write_file(path, text),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Data(format!("cannot write output: {e}"))),
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Data(format!("cannot write {}: {e}", path.display())))
}

fn build(spec: &CodeSpec) -> Result<MultCode, Failure> {
    spec.build().map_err(|e| Failure::Parameters(e.to_string()))
}

/// The `params` report.
pub fn params_report(spec: &CodeSpec, code: &MultCode) -> String {
    let mut out = format!(
        "p={}\nt={}\nq={}\nm={}\ns={}\nd={}\nn={}\nsigma={}\nk={}\n",
        spec.p,
        spec.t,
        code.field().order(),
        code.num_vars(),
        code.multiplicity(),
        code.degree(),
        code.length(),
        code.sigma(),
        code.dimension()
    );
    for (slot, j) in code.slots().iter().enumerate() {
        let size = code.subcode(slot).map_or(0, |c| c.dimension());
        out.push_str(&format!(
            "component j={} d_j={} size={}\n",
            j,
            code.component_degrees()[slot],
            size
        ));
    }
    out.push_str(&format!("infoset_size={}\n", code.information_set().len()));
    out
}

/// The `decompose` listing; checks that the components recompose to `poly`.
pub fn decompose_report(code: &MultCode, poly: &MVPoly) -> Result<String, Error> {
    let decomposition = code.decompose(poly)?;
    if &code.recompose(&decomposition)? != poly {
        return Err(Error::InvalidParameter(
            "components do not recompose to the input".into(),
        ));
    }
    let mut out = String::new();
    for (j, component) in decomposition.iter() {
        out.push_str(&format!(
            "j={} deg={} poly={}\n",
            j,
            component.degree(),
            component.to_text()
        ));
    }
    Ok(out)
}

fn execute(command: Command, stdout: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Params { spec } => {
            let code = build(&spec)?;
            write_output(&None, &params_report(&spec, &code), stdout)
        }
        Command::Encode {
            spec,
            io,
            fast,
            monomial,
            ..
        } => {
            let code = build(&spec)?;
            let message = textio::read_message(code.field(), &read_input(&io.input)?)
                .map_err(Failure::data)?;
            let codeword = if monomial {
                code.monomial_encode(&message)
            } else if fast {
                code.systematic_encode_fast(&message)
            } else {
                code.systematic_encode(&message)
            }
            .map_err(Failure::data)?;
            write_output(&io.out, &textio::write_codeword(&codeword), stdout)
        }
        Command::Extract { spec, io } => {
            let code = build(&spec)?;
            let codeword = textio::read_codeword(
                code.field(),
                code.length(),
                code.sigma(),
                &read_input(&io.input)?,
            )
            .map_err(Failure::data)?;
            let message = code.extract_message(&codeword).map_err(Failure::data)?;
            write_output(&io.out, &textio::write_message(&message), stdout)
        }
        Command::Decompose { spec, io } => {
            let code = build(&spec)?;
            let poly = MVPoly::parse_text(code.field(), code.num_vars(), &read_input(&io.input)?)
                .map_err(Failure::data)?;
            let report = decompose_report(&code, &poly).map_err(Failure::data)?;
            write_output(&io.out, &report, stdout)
        }
    }
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                return EXIT_INVALID_PARAMETERS;
            }
            let _ = stdout.write_all(text.as_bytes());
            return EXIT_OK;
        }
    };
    match execute(cli.command, stdout) {
        Ok(()) => EXIT_OK,
        Err(Failure::Parameters(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INVALID_PARAMETERS
        }
        Err(Failure::Data(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INVALID_DATA
        }
    }
}
