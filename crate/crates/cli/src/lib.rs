//! The `loopnr` command line.
//!
//! [`run`] parses arguments, executes one command and returns its exit code
//! with the complete output, so the binary writes everything at once and
//! tests can call commands in-process.
//!
//! Exit codes: 0 ok, 1 invalid structure or map, 2 parse error, 3 bound
//! exceeded, 4 hypothesis unmet.

use std::ffi::OsString;
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use loopnr::format::{canonical_json, parse_map, StructureFile};
use loopnr::generators::{catalog, resolve, CorpusSpec, Structure};
use loopnr::report::{self, AnalyzeOptions};
use loopnr::{homs, loops, Bounds, Error, ValidationError};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_BOUND: u8 = 3;
pub const EXIT_HYPOTHESIS: u8 = 4;

/// Exit code and complete output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: u8, stdout: String, message: impl std::fmt::Display) -> Outcome {
        Outcome { code, stdout, stderr: format!("error: {message}\n") }
    }

    fn from_error(e: &Error) -> Outcome {
        Outcome::fail(exit_code(e), String::new(), e)
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => EXIT_PARSE,
        Error::BoundExceeded { .. } | Error::LimitReached(_) => EXIT_BOUND,
        Error::HypothesisFailed { .. }
        | Error::PreconditionFailed(_)
        | Error::NotZeroSymmetric
        | Error::TargetNotARing => EXIT_HYPOTHESIS,
        _ => EXIT_INVALID,
    }
}

#[derive(Debug, Parser)]
#[command(name = "loopnr", version, about = "Finite loops, loop near-rings and finite rings")]
pub struct Cli {
    #[command(flatten)]
    pub limits: Limits,
    #[command(subcommand)]
    pub command: Command,
}

/// Flags take precedence over the environment.
#[derive(Debug, Args)]
pub struct Limits {
    /// Largest structure that may be loaded or generated.
    #[arg(long, global = true, env = "LOOPNR_MAX_N")]
    pub max_n: Option<usize>,
    /// Largest number of closed subsets (subloops, N-subloops, ideals) per enumeration.
    #[arg(long, global = true, env = "LOOPNR_MAX_SUBLOOPS")]
    pub max_subloops: Option<usize>,
    /// Largest number of idempotent families enumerated.
    #[arg(long, global = true, env = "LOOPNR_MAX_FAMILIES")]
    pub max_families: Option<usize>,
    /// Worker threads for internal parallelism (default: all cores).
    #[arg(long, global = true, env = "LOOPNR_THREADS")]
    pub threads: Option<usize>,
}

impl Limits {
    pub fn bounds(&self) -> Bounds {
        let mut b = Bounds::default();
        if let Some(n) = self.max_n {
            b.structure_order = n;
        }
        if let Some(s) = self.max_subloops {
            b.max_closed_sets = s;
        }
        if let Some(f) = self.max_families {
            b.max_families = f;
        }
        b
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a structure file and list every violated axiom.
    Check {
        input: String,
        #[arg(long)]
        text: bool,
    },
    /// Units, idempotents, subloops, locality and radical.
    Analyze {
        /// File path or structure spec such as `cyclic:6` or `m0:nonassoc5`.
        input: String,
        #[arg(long)]
        subloops: bool,
        #[arg(long)]
        local: bool,
        #[arg(long)]
        radical: bool,
        #[arg(long)]
        idempotents: bool,
        #[arg(long)]
        text: bool,
    },
    /// Canonical primitive idempotent family of a ring.
    Decompose {
        input: String,
        /// Enumerate every complete primitive family and match them.
        #[arg(long)]
        verify_uniqueness: bool,
        #[arg(long)]
        text: bool,
    },
    /// Validate a homomorphism given as an element map.
    Hom {
        src: String,
        dst: String,
        /// File holding the map, or the images inline as `0,1,0,1`.
        map: String,
        /// Check that locality transfers between source and image.
        #[arg(long)]
        transfer: bool,
        #[arg(long)]
        text: bool,
    },
    /// Print a structure file for a spec.
    Generate { spec: String },
    /// List the bundled named structures.
    Catalog {
        #[arg(long)]
        text: bool,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                Outcome { code: EXIT_PARSE, stdout: String::new(), stderr: rendered }
            } else {
                Outcome::ok(rendered)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let bounds = cli.limits.bounds();
    match cli.limits.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| dispatch(&cli.command, &bounds)),
            Err(e) => Outcome::fail(EXIT_PARSE, String::new(), e),
        },
        None => dispatch(&cli.command, &bounds),
    }
}

fn dispatch(cmd: &Command, bounds: &Bounds) -> Outcome {
    match cmd {
        Command::Check { input, text } => cmd_check(input, *text, bounds),
        Command::Analyze { input, subloops, local, radical, idempotents, text } => {
            let opts = AnalyzeOptions {
                subloops: *subloops,
                local: *local,
                radical: *radical,
                idempotents: *idempotents,
            };
            cmd_analyze(input, &opts, *text, bounds)
        }
        Command::Decompose { input, verify_uniqueness, text } => {
            cmd_decompose(input, *verify_uniqueness, *text, bounds)
        }
        Command::Hom { src, dst, map, transfer, text } => cmd_hom(src, dst, map, *transfer, *text, bounds),
        Command::Generate { spec } => cmd_generate(spec, bounds),
        Command::Catalog { text } => cmd_catalog(*text),
    }
}

fn render(v: &Value, text: bool) -> String {
    if text {
        report::to_text(v)
    } else {
        let mut s = canonical_json(v);
        s.push('\n');
        s
    }
}

/// Reads a structure file, or builds a spec when no such file exists.
fn load_file(input: &str, bounds: &Bounds) -> Result<StructureFile, Error> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{input}: {e}")))?;
        let file = StructureFile::parse(&text)?;
        if file.n > bounds.structure_order {
            return Err(Error::BoundExceeded {
                what: "structure order",
                limit: bounds.structure_order,
                actual: file.n,
            });
        }
        return Ok(file);
    }
    let spec = resolve(input)
        .map_err(|e| Error::Parse(format!("'{input}' is neither a file, a catalog name nor a structure spec ({e})")))?;
    let s = spec.build(bounds)?;
    Ok(StructureFile::from_structure(&s, generated_meta(&spec)))
}

fn load(input: &str, bounds: &Bounds) -> Result<Structure, Error> {
    Ok(load_file(input, bounds)?.to_structure()?)
}

fn generated_meta(spec: &CorpusSpec) -> std::collections::BTreeMap<String, String> {
    let canonical = spec.to_string();
    let name = catalog()
        .into_iter()
        .find(|e| e.spec == *spec)
        .map_or_else(|| canonical.clone(), |e| e.name);
    [("name".to_string(), name), ("provenance".to_string(), format!("generate {canonical}"))].into()
}

/// The variant name of a validation error.
fn axiom_name(e: &ValidationError) -> String {
    format!("{e:?}").chars().take_while(|c| c.is_alphanumeric()).collect()
}

fn violation(e: &ValidationError) -> Value {
    json!({ "axiom": axiom_name(e), "message": e.to_string() })
}

pub fn cmd_check(input: &str, text: bool, bounds: &Bounds) -> Outcome {
    let file = match load_file(input, bounds) {
        Ok(f) => f,
        Err(e) => return Outcome::from_error(&e),
    };
    let violations = file.audit();
    let mut m = Map::new();
    m.insert("kind".into(), json!(file.kind.as_str()));
    m.insert("n".into(), json!(file.n));
    m.insert("structure_hash".into(), json!(file.content_hash()));
    m.insert("valid".into(), json!(violations.is_empty()));
    m.insert("violations".into(), Value::Array(violations.iter().map(violation).collect()));
    let out = render(&report::seal(m), text);
    match violations.first() {
        None => Outcome::ok(out),
        Some(first) => Outcome::fail(EXIT_INVALID, out, first),
    }
}

pub fn cmd_analyze(input: &str, opts: &AnalyzeOptions, text: bool, bounds: &Bounds) -> Outcome {
    let result = load(input, bounds).and_then(|s| report::analyze(&s, opts, bounds));
    match result {
        Ok(v) => Outcome::ok(render(&v, text)),
        Err(e) => Outcome::from_error(&e),
    }
}

pub fn cmd_decompose(input: &str, verify_uniqueness: bool, text: bool, bounds: &Bounds) -> Outcome {
    let s = match load(input, bounds) {
        Ok(s) => s,
        Err(e) => return Outcome::from_error(&e),
    };
    let Some(ring) = s.as_ring() else {
        return Outcome::fail(EXIT_HYPOTHESIS, String::new(), format!("decompose needs a ring, got a {}", s.kind()));
    };
    match report::decompose(ring, verify_uniqueness, bounds) {
        Ok(v) => Outcome::ok(render(&v, text)),
        Err(e) => Outcome::from_error(&e),
    }
}

fn load_map(spec: &str) -> Result<Vec<usize>, Error> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
        parse_map(&text)
    } else {
        parse_map(spec)
    }
}

pub fn cmd_hom(src: &str, dst: &str, map: &str, transfer: bool, text: bool, bounds: &Bounds) -> Outcome {
    let loaded = load(src, bounds).and_then(|s| Ok((s, load(dst, bounds)?, load_map(map)?)));
    let (s, t, map) = match loaded {
        Ok(x) => x,
        Err(e) => return Outcome::from_error(&e),
    };
    let invalid = |e: ValidationError| {
        let v = report::seal(Map::from_iter([
            ("valid".to_string(), json!(false)),
            ("violation".to_string(), violation(&e)),
        ]));
        Outcome::fail(EXIT_INVALID, render(&v, text), e)
    };
    match (s.as_lnr(), t.as_lnr()) {
        (Some(a), Some(b)) => match homs::validate_lnr_hom(&map, a, b) {
            Ok(f) => match report::hom(&f, transfer, bounds) {
                Ok(v) => Outcome::ok(render(&v, text)),
                Err(e) => Outcome::from_error(&e),
            },
            Err(e) => invalid(e),
        },
        (None, None) => {
            if transfer {
                return Outcome::fail(EXIT_HYPOTHESIS, String::new(), "--transfer needs near-rings");
            }
            match loops::validate_loop_hom(&map, s.additive(), t.additive()) {
                Ok(f) => {
                    let kernel = f.kernel();
                    let normal = s.additive().is_normal_subloop(&kernel).expect("kernel is a subloop");
                    let v = report::seal(Map::from_iter([
                        ("valid".to_string(), json!(true)),
                        ("map".to_string(), json!(f.map())),
                        ("kernel".to_string(), json!(kernel.members())),
                        ("kernel_normal".to_string(), json!(normal)),
                        ("image".to_string(), json!(f.image().members())),
                    ]));
                    Outcome::ok(render(&v, text))
                }
                Err(e) => invalid(e),
            }
        }
        _ => Outcome::fail(
            EXIT_INVALID,
            String::new(),
            format!("cannot map a {} to a {}", s.kind(), t.kind()),
        ),
    }
}

pub fn cmd_generate(spec: &str, bounds: &Bounds) -> Outcome {
    let parsed = match resolve(spec) {
        Ok(p) => p,
        Err(e) => return Outcome::from_error(&e),
    };
    match parsed.build(bounds) {
        Ok(s) => {
            let mut out = StructureFile::from_structure(&s, generated_meta(&parsed)).to_canonical_json();
            out.push('\n');
            Outcome::ok(out)
        }
        Err(e) => Outcome::from_error(&e),
    }
}

pub fn cmd_catalog(text: bool) -> Outcome {
    let entries = catalog();
    if text {
        let width = entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
        return Outcome::ok(entries.iter().map(|e| format!("{:width$}  {}\n", e.name, e.spec)).collect());
    }
    let v = Value::Array(entries.iter().map(|e| json!({ "name": e.name, "spec": e.spec.to_string() })).collect());
    Outcome::ok(render(&v, false))
}
