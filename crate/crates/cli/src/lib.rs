//! File formats, graph export, verification suites and the `tabcrystal`
//! command line for tableau models of crystal bases.

pub mod document;
pub mod dot;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use tabcrystal_core::binfty::{binfty_lower, binfty_raise, bfs_binfty};
use tabcrystal_core::cliff::{cliff_step, cliff_to_tableau, tableau_to_cliff};
use tabcrystal_core::tableau::{apply_plain, bfs_highest_weight};
use tabcrystal_core::{Direction, Family, TypeSpec, Weight};

pub use document::{Document, Element, Model};
pub use verify::{run_suite, Report, Suite};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] tabcrystal_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

/// Parses `f1,e2,…` into `(index, direction)` steps.
pub fn parse_word(word: &str) -> Result<Vec<(usize, Direction)>, CliError> {
    let word = word.trim();
    if word.is_empty() {
        return Ok(Vec::new());
    }
    word.split(',')
        .map(|token| {
            let token = token.trim();
            let dir = match token.chars().next() {
                Some('f') => Direction::Lower,
                Some('e') => Direction::Raise,
                _ => return Err(CliError::Input(format!("bad operator {token:?}; expected fN or eN"))),
            };
            let i = token[1..]
                .parse()
                .map_err(|_| CliError::Input(format!("bad operator index in {token:?}")))?;
            Ok((i, dir))
        })
        .collect()
}

/// Applies the steps left to right; `None` once any step gives zero.
pub fn apply_word(doc: &Document, steps: &[(usize, Direction)]) -> Result<Option<Document>, CliError> {
    let spec = &doc.spec;
    let mut element = doc.element.clone();
    for &(i, dir) in steps {
        spec.check_index(i)?;
        let next = match &element {
            Element::Hw { lambda, tableau } => {
                apply_plain(spec, i, tableau, dir)?.map(|t| Element::Hw { lambda: lambda.clone(), tableau: t })
            }
            Element::Binfty(t) => match dir {
                Direction::Lower => Some(Element::Binfty(binfty_lower(spec, i, t)?)),
                Direction::Raise => binfty_raise(spec, i, t)?.map(Element::Binfty),
            },
            Element::Cliff(c) => cliff_step(spec, i, c, dir)?.map(Element::Cliff),
        };
        match next {
            Some(e) => element = e,
            None => return Ok(None),
        }
    }
    Ok(Some(Document { spec: spec.clone(), element }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConvertDir {
    /// binfty document to cliff document
    To,
    /// cliff document to binfty document
    From,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    Hw,
    Binfty,
    Cliff,
}

#[derive(Debug, Parser)]
#[command(name = "tabcrystal", version, about = "Tableau crystals B(lambda) and B(infinity)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct TypeArgs {
    /// One of A, B, C, D, G
    #[arg(long)]
    family: String,
    /// Number of tableau rows n (D with n rows is D_{n+1})
    #[arg(long)]
    rank: usize,
}

impl TypeArgs {
    fn spec(&self) -> Result<TypeSpec, CliError> {
        let family = Family::from_tag(&self.family)
            .ok_or_else(|| CliError::Input(format!("unknown family {:?}", self.family)))?;
        Ok(TypeSpec::new(family, self.rank)?)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Highest weight crystal B(lambda)
    GenHw {
        #[command(flatten)]
        ty: TypeArgs,
        /// Comma separated coordinates
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<i64>,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Top part of B(infinity)
    GenBinfty {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        depth: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Apply an operator word such as f1,e2 to a document
    Act {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        word: String,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Convert between binfty and cliff documents
    Cliff {
        #[arg(long, value_enum)]
        dir: ConvertDir,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Run an invariant suite and print a JSON report
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        depth: usize,
    },
}

fn read_document(path: &PathBuf) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })?;
    Document::from_json(&text)
}

fn expect_model(doc: &Document, model: Model) -> Result<(), CliError> {
    if doc.model() == model {
        Ok(())
    } else {
        Err(CliError::Input(format!("expected a {model} document, found {}", doc.model())))
    }
}

fn render_graph<E: Ord>(
    spec: &TypeSpec,
    model: &str,
    graph: &tabcrystal_core::CrystalGraph<E>,
    format: Format,
    rows: impl Fn(&E) -> &tabcrystal_core::Tableau,
) -> String {
    match format {
        Format::Dot => dot::to_dot(graph, |e| rows(e).to_string()),
        Format::Json => {
            #[derive(serde::Serialize)]
            struct Rows {
                rows: Vec<Vec<String>>,
            }
            let doc = dot::to_graph_document(spec.family().tag().to_string(), spec.n(), model.to_string(), graph, |e| Rows {
                rows: document::rows_to_strings(rows(e)),
            });
            let mut text = serde_json::to_string(&doc).expect("graphs always serialize");
            text.push('\n');
            text
        }
    }
}

/// Exit status 0 on success, 1 on input or validation errors, 2 when a
/// verification suite fails.
fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut emit = |text: &str| {
        out.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source })
    };
    match command {
        Command::GenHw { ty, lambda, depth, format } => {
            let spec = ty.spec()?;
            let lambda = Weight::new(lambda);
            spec.check_weight(&lambda)?;
            let graph = bfs_highest_weight(&spec, &lambda, depth)?;
            emit(&render_graph(&spec, "hw", &graph, format, |t| t))?;
        }
        Command::GenBinfty { ty, depth, format } => {
            let spec = ty.spec()?;
            let graph = bfs_binfty(&spec, depth)?;
            emit(&render_graph(&spec, "binfty", &graph, format, |t| t.as_tableau()))?;
        }
        Command::Act { model, word, input } => {
            let doc = read_document(&input)?;
            let model = match model {
                ModelArg::Hw => Model::Hw,
                ModelArg::Binfty => Model::Binfty,
                ModelArg::Cliff => Model::Cliff,
            };
            expect_model(&doc, model)?;
            let steps = parse_word(&word)?;
            match apply_word(&doc, &steps)? {
                Some(result) => emit(&(result.to_json() + "\n"))?,
                None => emit("none\n")?,
            }
        }
        Command::Cliff { dir, input } => {
            let doc = read_document(&input)?;
            let spec = doc.spec.clone();
            let converted = match (dir, doc.element) {
                (ConvertDir::To, Element::Binfty(t)) => Document::cliff(&spec, tableau_to_cliff(&spec, &t)?),
                (ConvertDir::From, Element::Cliff(c)) => Document::binfty(&spec, cliff_to_tableau(&spec, &c)?),
                (ConvertDir::To, _) => return Err(CliError::Input(String::from("--dir to expects a binfty document"))),
                (ConvertDir::From, _) => return Err(CliError::Input(String::from("--dir from expects a cliff document"))),
            };
            emit(&(converted.to_json() + "\n"))?;
        }
        Command::Verify { suite, ty, depth } => {
            let spec = ty.spec()?;
            let report = run_suite(suite, &spec, depth)?;
            emit(&(report.to_json() + "\n"))?;
            if !report.passed {
                return Ok(2);
            }
        }
    }
    Ok(0)
}

/// Runs the command line with explicit output streams; returns the exit
/// status.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words() {
        assert_eq!(parse_word("f1, e2").unwrap(), [(1, Direction::Lower), (2, Direction::Raise)]);
        assert!(parse_word("").unwrap().is_empty());
        assert!(parse_word("g1").is_err());
        assert!(parse_word("f").is_err());
    }

    #[test]
    fn exit_codes() {
        let run = |args: &[&str]| {
            let (mut out, mut err) = (Vec::new(), Vec::new());
            let code = run_cli(std::iter::once("tabcrystal").chain(args.iter().copied()), &mut out, &mut err);
            (code, String::from_utf8(out).unwrap())
        };
        assert_eq!(run(&["gen-binfty", "--family", "B", "--rank", "3", "--depth", "1"]).0, 0);
        assert_eq!(run(&["gen-binfty", "--family", "Q", "--rank", "3", "--depth", "1"]).0, 1);
        assert_eq!(run(&["gen-hw", "--family", "B", "--rank", "2", "--lambda", "0,1"]).0, 1);
        let (code, text) = run(&["gen-hw", "--family", "G", "--rank", "2", "--lambda", "1,0", "--format", "json"]);
        assert_eq!(code, 0);
        assert_eq!(text.matches("\"id\"").count(), 7);
        assert_eq!(run(&["verify", "--suite", "counts", "--family", "G", "--rank", "2", "--depth", "4"]).0, 0);
        assert_eq!(run(&["verify", "--suite", "figures", "--family", "A", "--rank", "3", "--depth", "1"]).0, 1);
        assert_eq!(run(&["bogus"]).0, 1);
    }
}
