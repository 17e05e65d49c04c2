//! Command-line front end for `mnbraid`.
//!
//! For `pk`, `mn`, `search` and `defect`, `--n` is the codomain dimension:
//! input words live on `n + 1` strands.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mnbraid::kernel::{search_alphabet, search_kernel, verify_theorem1, verify_theorem2};
use mnbraid::maps::{cancellation_defect, mn_map, pk_supports, project_pk, stabilize_fd};
use mnbraid::rep::{burau, rho_word};
use mnbraid::handle::handle_reduce;
use mnbraid::{handle, Error, Flavor, Letter, Matrix, Sign, Word};
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "mnbraid", version, about = "Exact braid representations and kernel witnesses")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FlavorArg {
    Classical,
    Cylindrical,
    Vcb,
}

#[derive(Debug, Args)]
struct FlavoredWord {
    /// Strand count of the word.
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "classical")]
    flavor: FlavorArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(allow_hyphen_values = true)]
    word: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Free reduction of a word.
    Reduce(FlavoredWord),
    /// Underlying strand permutation.
    Perm(FlavoredWord),
    /// Projection p_k of a pure word on n+1 strands.
    Pk {
        /// Codomain strand count; the word lives on n+1 strands.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Stabilization f_d of a cylindrical word.
    Fd {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Matrix image under rho.
    Rho {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "vcb")]
        flavor: FlavorArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Unreduced Burau matrix of a classical word.
    Burau {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// The composite rho ∘ f_d ∘ p_k of a pure word on n+1 strands.
    Mn {
        /// Codomain strand count; the word lives on n+1 strands.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Classical word problem by handle reduction (exit 1 if nontrivial).
    Trivial {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Lifted Burau kernel element through rho ∘ f_d ∘ p_6.
    VerifyThm1 {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// sigma_k^(-2m) through rho ∘ f_1 ∘ p_k.
    VerifyThm2 {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Exhaustive search for short kernel elements.
    Search {
        /// Codomain strand count; candidates live on n+1 strands.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long)]
        max_len: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Images of sigma_i sigma_i^-1 for every i with an image under p_k.
    Defect {
        /// Codomain strand count.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn flavor(arg: FlavorArg, n: usize) -> Flavor {
    match arg {
        FlavorArg::Classical => Flavor::Classical(n),
        FlavorArg::Cylindrical => Flavor::Cylindrical(n),
        FlavorArg::Vcb => Flavor::VirtualCylindrical(n),
    }
}

/// Command failure: exit code and one-line diagnostic.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidWitness(_) => EXIT_FAILED,
            _ => EXIT_USAGE,
        };
        Failure(code, e.to_string())
    }
}

struct Output {
    text: String,
    json: serde_json::Value,
    code: i32,
}

impl Output {
    fn ok(text: impl Into<String>, json: serde_json::Value) -> Self {
        Output { text: text.into(), json, code: EXIT_OK }
    }

    fn matrix(m: &Matrix) -> Self {
        Output::ok(m.to_string(), m.to_json())
    }
}

/// Runs one command line (including the program name) and returns the
/// exit code. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let first = rendered.lines().next().unwrap_or("usage error");
                let _ = writeln!(err, "{first}");
            }
            return code;
        }
    };
    let format = match &cli.command {
        Command::Reduce(a) | Command::Perm(a) => a.format,
        Command::Pk { format, .. }
        | Command::Fd { format, .. }
        | Command::Rho { format, .. }
        | Command::Burau { format, .. }
        | Command::Mn { format, .. }
        | Command::Trivial { format, .. }
        | Command::VerifyThm1 { format, .. }
        | Command::VerifyThm2 { format, .. }
        | Command::Search { format, .. }
        | Command::Defect { format, .. } => *format,
    };
    match execute(cli.command) {
        Ok(o) => {
            let body = match format {
                Format::Text => o.text,
                Format::Json => serde_json::to_string_pretty(&o.json).expect("json"),
            };
            let _ = writeln!(out, "{body}");
            o.code
        }
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn parse(word: &str, flavor: Flavor) -> Result<Word, Failure> {
    Ok(Word::parse(word, flavor)?)
}

fn execute(command: Command) -> Result<Output, Failure> {
    Ok(match command {
        Command::Reduce(a) => {
            let w = parse(&a.word, flavor(a.flavor, a.n))?.free_reduce();
            Output::ok(w.to_string(), json!({ "word": w.to_string(), "length": w.len() }))
        }
        Command::Perm(a) => {
            let p = parse(&a.word, flavor(a.flavor, a.n))?.underlying_permutation();
            let pure = p.is_identity();
            Output::ok(
                format!("{p}\n{}", if pure { "pure" } else { "not pure" }),
                json!({ "images": p.images(), "pure": pure }),
            )
        }
        Command::Pk { n, k, word, .. } => {
            let w = parse(&word, Flavor::Classical(n + 1))?;
            let p = project_pk(&w, k)?;
            Output::ok(p.to_string(), json!({ "word": p.to_string(), "n": n, "k": k }))
        }
        Command::Fd { n, d, word, .. } => {
            let w = parse(&word, Flavor::Cylindrical(n))?;
            let f = stabilize_fd(&w, d)?;
            Output::ok(f.to_string(), json!({ "word": f.to_string(), "n": n, "d": d }))
        }
        Command::Rho { n, flavor: f, word, .. } => {
            Output::matrix(&rho_word(&parse(&word, flavor(f, n))?))
        }
        Command::Burau { n, word, .. } => {
            Output::matrix(&burau(&parse(&word, Flavor::Classical(n))?)?)
        }
        Command::Mn { n, k, d, word, .. } => {
            Output::matrix(&mn_map(&parse(&word, Flavor::Classical(n + 1))?, k, d)?)
        }
        Command::Trivial { n, word, .. } => {
            let w = parse(&word, Flavor::Classical(n))?;
            let r = handle_reduce(&w, handle::DEFAULT_STEP_CAP)?;
            let trivial = r.word.is_empty();
            let mut o = Output::ok(
                if trivial { "trivial".to_string() } else { format!("nontrivial: {}", r.word) },
                json!({ "trivial": trivial, "reduced": r.word.to_string(), "steps": r.steps }),
            );
            if !trivial {
                o.code = EXIT_FAILED;
            }
            o
        }
        Command::VerifyThm1 { d, .. } => report(verify_theorem1(d)?),
        Command::VerifyThm2 { m, k, .. } => report(verify_theorem2(m, k)?),
        Command::Search { n, k, d, max_len, .. } => {
            let found = search_kernel(n, k, d, max_len)?;
            let alphabet: Vec<String> = search_alphabet(n, k).iter().map(Letter::to_string).collect();
            let words: Vec<String> = found.iter().map(|r| r.word.to_string()).collect();
            let mut text = format!("alphabet: {}\nfound: {}", alphabet.join(" "), found.len());
            for w in &words {
                text.push('\n');
                text.push_str(w);
            }
            let results: Vec<_> = found
                .iter()
                .map(|r| {
                    json!({
                        "word": r.word.to_string(),
                        "verified": r.verified,
                        "freely_trivial": r.freely_trivial,
                    })
                })
                .collect();
            Output::ok(
                text,
                json!({ "n": n, "k": k, "d": d, "max_len": max_len, "alphabet": alphabet, "results": results }),
            )
        }
        Command::Defect { n, k, d, .. } => {
            let mut text = Vec::new();
            let mut entries = Vec::new();
            for i in 1..=n {
                let supported = pk_supports(&Letter::sigma(i, Sign::Pos), k, n)
                    && pk_supports(&Letter::sigma(i, Sign::Neg), k, n);
                if !supported {
                    continue;
                }
                let m: Matrix = cancellation_defect(i, k, n, d)?;
                let identity = m.is_identity();
                text.push(format!("i={i}: {}", if identity { "identity" } else { "defect" }));
                if !identity {
                    text.push(m.to_string());
                }
                entries.push(json!({ "i": i, "identity": identity, "matrix": m.to_json() }));
            }
            Output::ok(text.join("\n"), json!({ "n": n, "k": k, "d": d, "defects": entries }))
        }
    })
}

fn report(r: mnbraid::kernel::VerificationReport) -> Output {
    let text = format!(
        "witness: {}\nwitness nontrivial: {}\nimage is identity: {}\n{}",
        r.witness,
        r.witness_nontrivial,
        r.image_is_identity,
        if r.passed { "PASSED" } else { "FAILED" }
    );
    Output { text, json: r.to_json(), code: if r.passed { EXIT_OK } else { EXIT_FAILED } }
}
