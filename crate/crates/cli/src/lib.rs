//! Library side of the `monlct` command: argument definitions, input loading and the
//! subcommand implementations, kept out of `main` so they can be tested in-process.

pub mod ideal_file;
pub mod report;

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use monomial_lct::degeneration::{
    check_length_preservation, groebner_basis, initial_ideal, local_length, mu_upper_bound,
    random_poly_ideal, tangent_cone_initial, DEFAULT_MU_TRIALS,
};
use monomial_lct::polytope::build_polytope;
use monomial_lct::suite::{
    codim2_corpus, multiplicity, multiplicity_limit_estimate, verify_codim2_corpus,
    verify_zero_dim_corpus, zero_dim_corpus,
};
use monomial_lct::{Error, MonomialIdeal, MonomialOrder, RationalPolynomial};
use serde_json::{json, Value};
use thiserror::Error;

use ideal_file::{parse_documents, IdealFile, ParseError};
use report::{codim2_record, generators, rational, zero_dim_record, Record, Report};

#[derive(Parser, Debug)]
#[command(name = "monlct", version, about = "Exact invariants of monomial ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderChoice {
    Lex,
    Grevlex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CorpusKind {
    Monomial,
    Polynomial,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Ideal file (JSON); `-` reads standard input.
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Args, Debug)]
pub struct OrderArgs {
    /// Monomial order; variables are ranked x_n > ... > x_1.
    #[arg(long, value_enum, default_value_t = OrderChoice::Grevlex)]
    pub order: OrderChoice,
}

#[derive(Args, Debug)]
pub struct CorpusArgs {
    /// Ideal file or corpus; without it a random corpus is generated.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    /// Number of variables of generated ideals.
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long = "max-exp", default_value_t = 10)]
    pub max_exp: u32,
    #[arg(long = "max-gens", default_value_t = 8)]
    pub max_gens: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// mu and the log canonical threshold of a monomial ideal.
    Lct(InputArgs),
    /// Colength (monomial) or local length at the origin (polynomial).
    Length {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Samuel multiplicity, optionally with the estimates n! l(R/J^t) / t^n.
    Mult {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long = "t-max")]
        t_max: Option<u32>,
    },
    /// Facets, mu and covolume of the Newton polytope.
    Polytope(InputArgs),
    /// Integral closure.
    Closure(InputArgs),
    /// Length and multiplicity bounds for zero-dimensional ideals.
    Verify(CorpusArgs),
    /// Bounds for ideals x^b * a in two variables.
    Codim2(CorpusArgs),
    /// Gröbner basis, initial ideals and length preservation of a polynomial ideal.
    Degenerate {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Upper bound for mu from monomial degenerations.
    MuBound {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_MU_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Writes a seeded random corpus as a JSON array of ideal files.
    GenCorpus {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long = "max-exp", default_value_t = 10)]
        max_exp: u32,
        #[arg(long = "max-gens", default_value_t = 8)]
        max_gens: usize,
        #[arg(long, value_enum, default_value_t = CorpusKind::Monomial)]
        kind: CorpusKind,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error(transparent)]
    Compute(#[from] Error),
}

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const VIOLATION: u8 = 1;
    pub const USAGE: u8 = 2;
}

/// Text for standard output and the exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    if let Command::GenCorpus {
        seed,
        count,
        dim,
        max_exp,
        max_gens,
        kind,
    } = &cli.command
    {
        return gen_corpus(cli.format, *seed, *count, *dim, *max_exp, *max_gens, *kind);
    }
    let report = match &cli.command {
        Command::Lct(input) => lct(input)?,
        Command::Length { input, order } => length(input, order)?,
        Command::Mult { input, t_max } => mult(input, *t_max)?,
        Command::Polytope(input) => polytope(input)?,
        Command::Closure(input) => closure(input)?,
        Command::Verify(args) => verify(args)?,
        Command::Codim2(args) => codim2(args)?,
        Command::Degenerate { input, order } => degenerate(input, order)?,
        Command::MuBound {
            input,
            trials,
            seed,
        } => mu_bound(input, *trials, *seed)?,
        Command::GenCorpus { .. } => unreachable!("handled above"),
    };
    let stdout = match cli.format {
        Format::Json => report.render_json(),
        Format::Tsv => report.render_tsv(),
    };
    let code = if report.failures.is_empty() {
        exit::OK
    } else {
        exit::VIOLATION
    };
    Ok(Outcome { stdout, code })
}

fn read_input(path: &Path) -> Result<String, CliError> {
    let shown = path.display().to_string();
    let io = |e: std::io::Error| CliError::Io {
        path: shown.clone(),
        message: e.to_string(),
    };
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(io)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn load(path: &Path) -> Result<Vec<IdealFile>, CliError> {
    let text = read_input(path)?;
    parse_documents(&text).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn input_echo(path: &Path, ideals: &[IdealFile]) -> Value {
    json!({
        "path": path.display().to_string(),
        "ideals": ideals.iter().map(IdealFile::to_json).collect::<Vec<_>>(),
    })
}

fn require_monomial(file: &IdealFile, command: &str) -> Result<MonomialIdeal, CliError> {
    file.as_monomial().ok_or_else(|| {
        CliError::Usage(format!(
            "{command} needs a monomial ideal; use `degenerate` or `mu-bound` for polynomial input"
        ))
    })
}

fn order_for(choice: OrderChoice, n: usize) -> MonomialOrder {
    let priority = MonomialOrder::reversed_priority(n);
    match choice {
        OrderChoice::Lex => MonomialOrder::lex(priority),
        OrderChoice::Grevlex => MonomialOrder::grevlex(priority),
    }
    .expect("reversed priority is a permutation")
}

fn polynomial_value(p: &RationalPolynomial) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| json!({"coeff": rational(c), "exp": e.coords()}))
            .collect(),
    )
}

fn lct(args: &InputArgs) -> Result<Report, CliError> {
    let ideals = load(&args.input)?;
    let mut report = Report::new("lct", input_echo(&args.input, &ideals));
    for file in &ideals {
        let ideal = require_monomial(file, "lct")?;
        let value = build_polytope(&ideal).mu();
        let mut rec = Record::new();
        rec.insert("ideal".into(), generators(&ideal));
        rec.insert("mu".into(), rational(&value.mu));
        rec.insert("lct".into(), value.lct.as_ref().map_or(Value::Null, rational));
        rec.insert(
            "witness_facet".into(),
            value.witness_facet.as_ref().map_or(Value::Null, |f| {
                json!({
                    "coefficients": f.coefficients.iter().map(rational).collect::<Vec<_>>(),
                    "rhs": rational(&f.rhs),
                })
            }),
        );
        report.records.push(rec);
    }
    Ok(report)
}

fn length(args: &InputArgs, order: &OrderArgs) -> Result<Report, CliError> {
    let ideals = load(&args.input)?;
    let mut report = Report::new("length", input_echo(&args.input, &ideals));
    for file in &ideals {
        let mut rec = Record::new();
        match file.as_monomial() {
            Some(m) => {
                rec.insert("ideal".into(), generators(&m));
                rec.insert("length".into(), json!(m.colength()?));
                rec.insert("method".into(), json!("staircase"));
            }
            None => {
                let p = file.to_poly_ideal();
                let ord = order_for(order.order, p.n());
                rec.insert("length".into(), json!(local_length(&p, &ord)?));
                rec.insert("method".into(), json!("truncation"));
            }
        }
        report.records.push(rec);
    }
    Ok(report)
}

fn mult(args: &InputArgs, t_max: Option<u32>) -> Result<Report, CliError> {
    let ideals = load(&args.input)?;
    let mut report = Report::new("mult", input_echo(&args.input, &ideals));
    for file in &ideals {
        let ideal = require_monomial(file, "mult")?;
        let mut rec = Record::new();
        rec.insert("ideal".into(), generators(&ideal));
        rec.insert("multiplicity".into(), rational(&multiplicity(&ideal)?));
        if let Some(t) = t_max {
            let estimates = multiplicity_limit_estimate(&ideal, t)?;
            rec.insert(
                "estimates".into(),
                Value::Array(estimates.iter().map(rational).collect()),
            );
        }
        report.records.push(rec);
    }
    Ok(report)
}

fn polytope(args: &InputArgs) -> Result<Report, CliError> {
    let ideals = load(&args.input)?;
    let mut report = Report::new("polytope", input_echo(&args.input, &ideals));
    for file in &ideals {
        let ideal = require_monomial(file, "polytope")?;
        let p = build_polytope(&ideal);
        let facets: Vec<Value> = p
            .facets()
            .iter()
            .map(|f| {
                json!({
                    "coefficients": f.coefficients.iter().map(rational).collect::<Vec<_>>(),
                    "rhs": rational(&f.rhs),
                    "bounded": f.is_bounded(),
                })
            })
            .collect();
        let mut rec = Record::new();
        rec.insert("ideal".into(), generators(&ideal));
        rec.insert("facets".into(), Value::Array(facets));
        rec.insert("mu".into(), rational(&p.mu().mu));
        rec.insert(
            "covolume".into(),
            if ideal.is_zero_dimensional() {
                rational(&p.covolume())
            } else {
                Value::Null
            },
        );
        report.records.push(rec);
    }
    Ok(report)
}

fn closure(args: &InputArgs) -> Result<Report, CliError> {
    let ideals = load(&args.input)?;
    let mut report = Report::new("closure", input_echo(&args.input, &ideals));
    for file in &ideals {
        let ideal = require_monomial(file, "closure")?;
        let mut rec = Record::new();
        rec.insert("ideal".into(), generators(&ideal));
        rec.insert("closure".into(), generators(&ideal.integral_closure()));
        rec.insert("power_of_maximal".into(), json!(ideal.is_power_of_maximal()));
        report.records.push(rec);
    }
    Ok(report)
}

fn corpus_ideals(
    args: &CorpusArgs,
    generate: impl FnOnce(&CorpusArgs) -> Result<Vec<MonomialIdeal>, CliError>,
    command: &str,
) -> Result<(Vec<MonomialIdeal>, Value), CliError> {
    match &args.input {
        Some(path) => {
            let files = load(path)?;
            let ideals = files
                .iter()
                .map(|f| require_monomial(f, command))
                .collect::<Result<Vec<_>, _>>()?;
            Ok((ideals, input_echo(path, &files)))
        }
        None => {
            let ideals = generate(args)?;
            let echo = json!({
                "seed": args.seed,
                "count": args.count,
                "dim": args.dim,
                "max_exp": args.max_exp,
                "max_gens": args.max_gens,
            });
            Ok((ideals, echo))
        }
    }
}

fn check_corpus_bounds(args: &CorpusArgs) -> Result<(), CliError> {
    if args.max_exp == 0 || args.max_gens == 0 {
        return Err(CliError::Usage("--max-exp and --max-gens must be positive".into()));
    }
    Ok(())
}

fn verify(args: &CorpusArgs) -> Result<Report, CliError> {
    let (ideals, echo) = corpus_ideals(
        args,
        |a| {
            check_corpus_bounds(a)?;
            let dim = a.dim.unwrap_or(2);
            if dim == 0 {
                return Err(CliError::Usage("--dim must be positive".into()));
            }
            Ok(zero_dim_corpus(a.seed, a.count, &[dim], a.max_exp, a.max_gens))
        },
        "verify",
    )?;
    let mut report = Report::new("verify", echo);
    for r in verify_zero_dim_corpus(&ideals) {
        let r = r?;
        let violations = r.violations();
        if !violations.is_empty() {
            report
                .failures
                .push(json!({"ideal": generators(&r.ideal), "violations": violations}));
        }
        report.records.push(zero_dim_record(&r));
    }
    Ok(report)
}

fn codim2(args: &CorpusArgs) -> Result<Report, CliError> {
    let (ideals, echo) = corpus_ideals(
        args,
        |a| {
            check_corpus_bounds(a)?;
            if a.dim.is_some_and(|d| d != 2) {
                return Err(CliError::Usage("codim2 works in 2 variables".into()));
            }
            Ok(codim2_corpus(a.seed, a.count, a.max_exp, a.max_gens))
        },
        "codim2",
    )?;
    let mut report = Report::new("codim2", echo);
    for r in verify_codim2_corpus(&ideals) {
        let r = r?;
        let violations = r.violations();
        if !violations.is_empty() {
            report
                .failures
                .push(json!({"ideal": generators(&r.ideal), "violations": violations}));
        }
        report.records.push(codim2_record(&r));
    }
    Ok(report)
}

fn degenerate(args: &InputArgs, order: &OrderArgs) -> Result<Report, CliError> {
    let files = load(&args.input)?;
    let mut report = Report::new("degenerate", input_echo(&args.input, &files));
    for file in &files {
        let ideal = file.to_poly_ideal();
        let ord = order_for(order.order, ideal.n());
        let basis = groebner_basis(&ideal, &ord)?;
        let mut rec = Record::new();
        rec.insert("order".into(), json!(ord.describe()));
        rec.insert(
            "groebner_basis".into(),
            Value::Array(basis.iter().map(polynomial_value).collect()),
        );
        rec.insert("initial_ideal".into(), generators(&initial_ideal(&ideal, &ord)?));
        rec.insert(
            "tangent_cone_initial".into(),
            generators(&tangent_cone_initial(&ideal, &ord)?),
        );
        match check_length_preservation(&ideal, &ord) {
            Ok(check) => {
                if !check.equal {
                    report.failures.push(json!({
                        "ideal": file.to_json(),
                        "violations": [format!(
                            "local length {} differs from initial colength {}",
                            check.l_orig, check.l_initial
                        )],
                    }));
                }
                rec.insert("l_orig".into(), json!(check.l_orig));
                rec.insert("l_initial".into(), json!(check.l_initial));
                rec.insert("length_preserved".into(), json!(check.equal));
            }
            Err(Error::NotZeroDimensional(why)) => {
                rec.insert("l_orig".into(), Value::Null);
                rec.insert("l_initial".into(), Value::Null);
                rec.insert("length_preserved".into(), Value::Null);
                rec.insert("length_note".into(), json!(why));
            }
            Err(e) => return Err(e.into()),
        }
        report.records.push(rec);
    }
    Ok(report)
}

fn mu_bound(args: &InputArgs, trials: usize, seed: u64) -> Result<Report, CliError> {
    let files = load(&args.input)?;
    let mut report = Report::new("mu-bound", input_echo(&args.input, &files));
    for file in &files {
        let bound = mu_upper_bound(&file.to_poly_ideal(), trials, seed)?;
        let mut rec = Record::new();
        rec.insert("bound".into(), rational(&bound.bound));
        rec.insert(
            "lct_lower_bound".into(),
            if num_traits::Zero::is_zero(&bound.bound) {
                Value::Null
            } else {
                rational(&bound.bound.recip())
            },
        );
        rec.insert(
            "trials".into(),
            Value::Array(
                bound
                    .trials
                    .iter()
                    .map(|t| {
                        json!({
                            "description": t.description,
                            "initial": generators(&t.initial),
                            "mu": rational(&t.mu),
                        })
                    })
                    .collect(),
            ),
        );
        report.records.push(rec);
    }
    Ok(report)
}

fn gen_corpus(
    format: Format,
    seed: u64,
    count: usize,
    dim: usize,
    max_exp: u32,
    max_gens: usize,
    kind: CorpusKind,
) -> Result<Outcome, CliError> {
    if dim == 0 || max_exp == 0 || max_gens == 0 {
        return Err(CliError::Usage(
            "--dim, --max-exp and --max-gens must be positive".into(),
        ));
    }
    let files: Vec<IdealFile> = match kind {
        CorpusKind::Monomial => zero_dim_corpus(seed, count, &[dim], max_exp, max_gens)
            .into_iter()
            .map(IdealFile::Monomial)
            .collect(),
        CorpusKind::Polynomial => (0..count as u64)
            .map(|k| {
                IdealFile::Polynomial(random_poly_ideal(seed.wrapping_add(k), dim, max_exp, max_gens))
            })
            .collect(),
    };
    let stdout = match format {
        Format::Json => {
            let docs: Vec<String> = files.iter().map(IdealFile::serialize).collect();
            if docs.is_empty() {
                "[]\n".to_string()
            } else {
                format!("[\n{}\n]\n", docs.join(",\n"))
            }
        }
        Format::Tsv => files.iter().map(|f| f.serialize() + "\n").collect(),
    };
    Ok(Outcome {
        stdout,
        code: exit::OK,
    })
}
