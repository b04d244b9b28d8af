//! `dmz`: command-line front end for Demazure operators and the descent test.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use demazure::verify::{self, Status, VerifyOptions};
use demazure::weyl::{format_word, parse_word};
use demazure::{braid, descent, format, Character, Error, RootDatum, WeylGroup};

#[derive(Parser)]
#[command(name = "dmz", version, about = "Demazure operators, Bruhat order and descent for Weyl group characters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TypeArg {
    /// Root datum tag such as A2, B3 or G2.
    #[arg(long = "type", value_name = "T")]
    tag: String,
}

#[derive(Subcommand)]
enum Command {
    /// Rank, Cartan matrix, number of positive roots, |W| and the longest element.
    Info {
        #[command(flatten)]
        ty: TypeArg,
    },
    /// Prints whether v ≤ w in the Bruhat order.
    Bruhat {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, value_name = "WORD")]
        w: String,
        #[arg(long, value_name = "WORD")]
        v: String,
    },
    /// Demazure operators.
    Demazure {
        #[command(subcommand)]
        op: DemazureOp,
    },
    /// The descent test.
    Descent {
        #[command(subcommand)]
        op: DescentOp,
    },
    /// Writes a W-invariant character as a sum of irreducible characters.
    Decompose {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long = "in", value_name = "F.json")]
        input: PathBuf,
        /// Output file; stdout when omitted.
        #[arg(long, value_name = "D.json")]
        out: Option<PathBuf>,
    },
    /// Positive braid monoid.
    Braid {
        #[command(subcommand)]
        op: BraidOp,
    },
    /// Runs the relation suite on seeded random inputs.
    Verify {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

#[derive(Subcommand)]
enum DemazureOp {
    /// Applies D_{i1} D_{i2} ⋯ (rightmost first) to a character.
    Apply {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, value_name = "I1,I2,...", allow_hyphen_values = true)]
        word: String,
        #[arg(long = "in", value_name = "F.json")]
        input: PathBuf,
        /// Output file; stdout when omitted.
        #[arg(long, value_name = "G.json")]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum DescentOp {
    /// Prints the three equivalent conditions and the first nonzero defect.
    Check {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long = "in", value_name = "F.json")]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum BraidOp {
    /// Left-greedy normal form of the braid T_{i1} T_{i2} ⋯.
    Nf {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, value_name = "I1,I2,...")]
        word: String,
    },
}

/// A domain error as reported on stderr.
struct Failure {
    code: &'static str,
    detail: Value,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let detail = match &e {
            Error::NotInDescentCategory { index, defect } => {
                let terms: Vec<Value> =
                    defect.iter().map(|(w, c)| json!({"weight": w.coords(), "coeff": Value::Number(c.to_string().parse().expect("integer"))})).collect();
                json!({"message": e.to_string(), "index": index, "defect": terms})
            }
            _ => Value::String(e.to_string()),
        };
        Failure { code: e.code(), detail }
    }
}

type CliResult = std::result::Result<String, Failure>;

fn group_for(ty: &TypeArg) -> Result<WeylGroup, Failure> {
    let rd: RootDatum = ty.tag.parse()?;
    Ok(WeylGroup::new(Arc::new(rd)))
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure { code: "Io", detail: Value::String(format!("{}: {e}", path.display())) })?;
    Ok(format::parse_json(&text)?)
}

fn read_character(group: &WeylGroup, path: &Path) -> Result<Character, Failure> {
    let f: Character = format::character_from_json(&read_json(path)?)?;
    if f.root_datum().as_ref() != group.root_datum().as_ref() {
        return Err(Error::DatumMismatch { left: group.root_datum().tag(), right: f.root_datum().tag() }.into());
    }
    Ok(f)
}

/// Writes to `out` if given, otherwise returns the text for stdout.
fn emit(text: String, out: Option<&Path>) -> CliResult {
    match out {
        Some(path) => {
            fs::write(path, text)
                .map_err(|e| Failure { code: "Io", detail: Value::String(format!("{}: {e}", path.display())) })?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn info(ty: &TypeArg) -> CliResult {
    let group = group_for(ty)?;
    let rd = group.root_datum();
    let w0 = group.longest_element();
    let mut s = String::new();
    s.push_str(&format!("type: {}\n", rd.tag()));
    s.push_str(&format!("rank: {}\n", rd.rank()));
    s.push_str("cartan:\n");
    for row in rd.cartan() {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>2}")).collect();
        s.push_str(&format!("  [{}]\n", cells.join(", ")));
    }
    s.push_str(&format!("positive roots: {}\n", rd.positive_roots().len()));
    s.push_str(&format!("|W|: {}\n", rd.weyl_group_order()));
    s.push_str(&format!("l(w0): {}\n", w0.length()));
    s.push_str(&format!("w0: {} (length {})\n", format_word(&group.reduced_word(&w0)?), w0.length()));
    Ok(s)
}

fn bruhat(ty: &TypeArg, w: &str, v: &str) -> CliResult {
    let group = group_for(ty)?;
    let w = group.from_word(&parse_word(w)?)?;
    let v = group.from_word(&parse_word(v)?)?;
    Ok(format!("{}\n", group.bruhat_leq(&v, &w)?))
}

fn demazure_apply(ty: &TypeArg, word: &str, input: &Path, out: Option<&Path>) -> CliResult {
    let group = group_for(ty)?;
    let word = parse_word(word)?;
    let f = read_character(&group, input)?;
    let g = demazure::demazure::apply_word(&word, &f)?;
    emit(format::to_pretty(&format::character_to_json(&g)), out)
}

fn descent_check(ty: &TypeArg, input: &Path) -> CliResult {
    let group = group_for(ty)?;
    let f = read_character(&group, input)?;
    let r = descent::theorem_equivalences(&group, &f)?;
    let mut s = format!("descent: {}\nfull: {}\ninvariant: {}\n", r.descent, r.full, r.invariant);
    if let Some((i, defect)) = descent::first_defect(&f) {
        s.push_str(&format!("defect at node {i}:\n"));
        s.push_str(&format::to_pretty(&format::character_to_json(&defect)));
    }
    Ok(s)
}

fn decompose(ty: &TypeArg, input: &Path, out: Option<&Path>) -> CliResult {
    let group = group_for(ty)?;
    let f = read_character(&group, input)?;
    let d = descent::decompose(&group, &f)?;
    emit(format::to_pretty(&format::decomposition_to_json(&d)), out)
}

fn braid_nf(ty: &TypeArg, word: &str) -> CliResult {
    let group = group_for(ty)?;
    let b = braid::from_word(&group, &parse_word(word)?)?;
    Ok(format!("{}\n", braid::format_braid(&group, &b)?))
}

fn run_verify(ty: &TypeArg, seed: u64, samples: usize) -> CliResult {
    let group = group_for(ty)?;
    let reports = verify::run(&group, &VerifyOptions { seed, samples });
    let mut s = format!("verify {} seed={seed} samples={samples}\n", group.root_datum().tag());
    for r in &reports {
        s.push_str(&format!("{r}\n"));
    }
    let count = |pred: fn(&Status) -> bool| reports.iter().filter(|r| pred(&r.status)).count();
    let passed = count(|st| matches!(st, Status::Pass));
    let skipped = count(|st| matches!(st, Status::Skipped(_)));
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.name).collect();
    s.push_str(&format!("{} suites: {passed} passed, {skipped} skipped, {} failed\n", reports.len(), failed.len()));
    if failed.is_empty() {
        Ok(s)
    } else {
        print!("{s}");
        Err(Failure { code: "VerificationFailed", detail: json!(failed) })
    }
}

fn dispatch(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Info { ty } => info(ty),
        Command::Bruhat { ty, w, v } => bruhat(ty, w, v),
        Command::Demazure { op: DemazureOp::Apply { ty, word, input, out } } => {
            demazure_apply(ty, word, input, out.as_deref())
        }
        Command::Descent { op: DescentOp::Check { ty, input } } => descent_check(ty, input),
        Command::Decompose { ty, input, out } => decompose(ty, input, out.as_deref()),
        Command::Braid { op: BraidOp::Nf { ty, word } } => braid_nf(ty, word),
        Command::Verify { ty, seed, samples } => run_verify(ty, *seed, *samples),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match dispatch(&cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure { code, detail }) => {
            let obj = json!({"error": code, "detail": detail});
            eprintln!("{}", serde_json::to_string_pretty(&obj).expect("serializing a Value cannot fail"));
            ExitCode::from(1)
        }
    }
}
