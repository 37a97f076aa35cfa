//! The `decorel` command line.
//!
//! Exit codes: 0 success, 1 failed check or evaluation error, 2 parse error,
//! 3 type mismatch, 4 unknown name.

pub mod categories;
pub mod expr;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::Value;
use thiserror::Error;

use crate::circuits::CircuitContract;
use crate::decorate::blackbox;
use crate::finset::FactorisationSystem;
use crate::lawcheck::instances::{
    lincorel_instance, rig_corel_instance, rig_span_instance, CorelInstance,
    CorruptedCospanInstance, CospanInstance, DecoratedCorelInstance, DecoratedCospanInstance,
    RigMatInstance,
};
use crate::lawcheck::sample::{SampleDecoration, SampleRig};
use crate::lawcheck::{check_category_laws, check_frobenius, FunctorCheck, Report};
use crate::rational::Q;
use crate::rigmat::to_matrix;
use categories::{default_system, CliCategory, CATEGORY_NAMES};
use expr::{Expr, ExprFile};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("type mismatch: {0}")]
    Type(String),
    #[error("unknown name: {0}")]
    Unknown(String),
    #[error("{0}")]
    Eval(String),
    #[error("{0} check(s) did not pass")]
    CheckFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Parse(_) => 2,
            Self::Type(_) => 3,
            Self::Unknown(_) => 4,
            Self::Eval(_) | Self::CheckFailed(_) => 1,
        }
    }

    fn at(self, path: &str) -> Self {
        match self {
            Self::Parse(m) => Self::Parse(format!("{path}: {m}")),
            Self::Eval(m) => Self::Eval(format!("{path}: {m}")),
            other => other,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "decorel",
    version,
    about = "Evaluate and law-check cospan, corelation and decorated-corelation diagrams"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone, Default)]
pub struct Options {
    /// Category to work in (cospan, corel, epi-mono-corel, corrupted-cospan,
    /// circuit, circuit-corel, rigmat, rig-cospan, rig-corel, lincorel).
    #[arg(long)]
    pub category: Option<String>,
    /// Factorisation system: all-iso, epi-mono or iso-all.
    #[arg(long)]
    pub system: Option<String>,
    /// Rig for matrix categories: rational, nat or bool.
    #[arg(long, default_value = "rational")]
    pub rig: String,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub max_size: Option<usize>,
    /// Write the result here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a diagram expression and print its canonical form.
    Eval {
        file: PathBuf,
        #[command(flatten)]
        opts: Options,
    },
    /// Check the hypergraph axioms and category laws; exits 0 iff all pass.
    Check {
        #[arg(id = "CATEGORY", value_name = "CATEGORY")]
        category: Option<String>,
        #[arg(id = "MAX_SIZE", value_name = "MAX_SIZE")]
        max_size: Option<usize>,
        #[arg(id = "SEED", value_name = "SEED")]
        seed: Option<u64>,
        #[command(flatten)]
        opts: Options,
    },
    /// Evaluate a decorated cospan and print its decorated corelation.
    Blackbox {
        file: PathBuf,
        #[command(flatten)]
        opts: Options,
    },
    /// Evaluate a rig-decorated span and print its matrix.
    MatrixOf {
        file: PathBuf,
        #[command(flatten)]
        opts: Options,
    },
}

/// Something to do with a category, whatever its morphism type.
trait Action {
    type Out;
    fn run<C: CliCategory>(self, cat: &C) -> Result<Self::Out, CliError>;
}

fn parse_system(name: Option<&str>, category: &str) -> Result<FactorisationSystem, CliError> {
    match name {
        None => Ok(default_system(category)),
        Some(s) => {
            FactorisationSystem::parse(s).ok_or_else(|| CliError::Unknown(format!("system {s:?}")))
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum RigName {
    Rational,
    Nat,
    Bool,
}

fn parse_rig(name: &str) -> Result<RigName, CliError> {
    match name {
        "rational" | "q" => Ok(RigName::Rational),
        "nat" | "n" => Ok(RigName::Nat),
        "bool" | "boolean" => Ok(RigName::Bool),
        other => Err(CliError::Unknown(format!("rig {other:?}"))),
    }
}

fn dispatch<A: Action>(category: &str, opts: &Options, action: A) -> Result<A::Out, CliError> {
    let sys = parse_system(opts.system.as_deref(), category)?;
    let rig = parse_rig(&opts.rig)?;
    match category {
        "cospan" => action.run(&CospanInstance),
        "corrupted-cospan" => action.run(&CorruptedCospanInstance),
        "corel" => action.run(&CorelInstance(sys)),
        "epi-mono-corel" => action.run(&CorelInstance(FactorisationSystem::EpiMono)),
        "circuit" => action.run(&DecoratedCospanInstance(CircuitContract)),
        "circuit-corel" => action.run(&DecoratedCorelInstance {
            contract: CircuitContract,
            sys,
        }),
        "lincorel" => action.run(&lincorel_instance()),
        "rigmat" | "rig-cospan" | "rigspan" | "rig-corel" => match rig {
            RigName::Rational => dispatch_rig::<Q, A>(category, sys, action),
            RigName::Nat => dispatch_rig::<BigUint, A>(category, sys, action),
            RigName::Bool => dispatch_rig::<bool, A>(category, sys, action),
        },
        other => Err(CliError::Unknown(format!(
            "category {other:?} (known: {})",
            CATEGORY_NAMES.join(", ")
        ))),
    }
}

fn dispatch_rig<R: SampleRig, A: Action>(
    category: &str,
    sys: FactorisationSystem,
    action: A,
) -> Result<A::Out, CliError> {
    match category {
        "rigmat" => action.run(&RigMatInstance::<R>::new()),
        "rig-corel" => action.run(&rig_corel_instance::<R>(sys)),
        _ => action.run(&rig_span_instance::<R>()),
    }
}

/// Evaluates expressions in one category, resolving `gen` references
/// through the file's definitions.
pub struct Evaluator<'a, C: CliCategory> {
    cat: &'a C,
    file: &'a ExprFile,
}

impl<'a, C: CliCategory> Evaluator<'a, C> {
    pub fn new(cat: &'a C, file: &'a ExprFile) -> Self {
        Self { cat, file }
    }

    pub fn eval_main(&self) -> Result<C::Mor, CliError> {
        self.eval(&self.file.expr, "expr", &mut Vec::new())
    }

    fn eval(&self, e: &Expr, path: &str, active: &mut Vec<String>) -> Result<C::Mor, CliError> {
        let cat = self.cat;
        match e {
            Expr::Id(n) => Ok(cat.identity(*n)),
            Expr::Frobenius(k, n) => Ok(cat.generator(*n, *k)),
            Expr::Braid(x, y) => Ok(cat.braid(*x, *y)),
            Expr::Gen(name) => {
                let def = self.file.defs.get(name).ok_or_else(|| {
                    CliError::Unknown(format!("{path}: generator {name:?} is not defined"))
                })?;
                if active.contains(name) {
                    return Err(CliError::Parse(format!(
                        "{path}: definition {name:?} refers to itself"
                    )));
                }
                active.push(name.clone());
                let out = self.eval(def, &format!("defs.{name}"), active);
                active.pop();
                out
            }
            Expr::Literal(kind, body) => {
                if !cat.literal_kinds().contains(&kind.as_str()) {
                    return Err(CliError::Type(format!(
                        "{path}: {kind} literals are not morphisms of {} (expected one of {:?})",
                        cat.name(),
                        cat.literal_kinds()
                    )));
                }
                cat.literal(kind, body).map_err(|e| e.at(path))
            }
            Expr::Compose(parts) => {
                let mut acc = self.eval(&parts[0], &format!("{path}.compose[0]"), active)?;
                for (i, p) in parts.iter().enumerate().skip(1) {
                    let here = format!("{path}.compose[{i}]");
                    let next = self.eval(p, &here, active)?;
                    if cat.cod(&acc) != cat.dom(&next) {
                        return Err(CliError::Type(format!(
                            "{here}: domain {} does not match codomain {} of the preceding terms",
                            cat.dom(&next),
                            cat.cod(&acc)
                        )));
                    }
                    acc = cat
                        .compose(&acc, &next)
                        .map_err(|e| CliError::Eval(format!("{here}: {e}")))?;
                }
                Ok(acc)
            }
            Expr::Tensor(parts) => {
                let mut acc = self.eval(&parts[0], &format!("{path}.tensor[0]"), active)?;
                for (i, p) in parts.iter().enumerate().skip(1) {
                    let here = format!("{path}.tensor[{i}]");
                    let next = self.eval(p, &here, active)?;
                    acc = cat
                        .tensor(&acc, &next)
                        .map_err(|e| CliError::Eval(format!("{here}: {e}")))?;
                }
                Ok(acc)
            }
        }
    }
}

struct EvalAction<'a>(&'a ExprFile);

impl Action for EvalAction<'_> {
    type Out = Value;
    fn run<C: CliCategory>(self, cat: &C) -> Result<Value, CliError> {
        let f = Evaluator::new(cat, self.0).eval_main()?;
        Ok(cat.render(&f, &self.0.names))
    }
}

struct CheckAction(FunctorCheck);

impl Action for CheckAction {
    type Out = Report;
    fn run<C: CliCategory>(self, cat: &C) -> Result<Report, CliError> {
        let mut report = check_frobenius(cat, self.0.max_size);
        report
            .results
            .extend(check_category_laws(cat, self.0).results);
        Ok(report)
    }
}

pub fn read_expr_file(path: &Path) -> Result<ExprFile, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    expr::parse_file(&text)
}

fn blackbox_in<F>(contract: F, sys: FactorisationSystem, file: &ExprFile) -> Result<Value, CliError>
where
    F: SampleDecoration + Clone,
    F::Dec: std::fmt::Debug,
    DecoratedCospanInstance<F>:
        CliCategory<Mor = crate::decorate::DecoratedCospan<F::Base, F::Dec>>,
    DecoratedCorelInstance<F>:
        CliCategory<Mor = crate::decorate::DecoratedCorelation<F::Base, F::Dec>>,
{
    if !contract.supports(sys) {
        return Err(CliError::Eval(format!(
            "{} decorations do not support the {} system",
            contract.name(),
            sys.name()
        )));
    }
    let src = DecoratedCospanInstance(contract.clone());
    let f = Evaluator::new(&src, file).eval_main()?;
    let g = blackbox(&contract, sys, &f).map_err(|e| CliError::Eval(e.to_string()))?;
    let dst = DecoratedCorelInstance { contract, sys };
    Ok(dst.render(&g, &file.names))
}

fn run_blackbox(file: &ExprFile, opts: &Options) -> Result<Value, CliError> {
    let category = opts.category.as_deref().unwrap_or("rig-cospan");
    let sys = parse_system(opts.system.as_deref(), category)?;
    match category {
        "circuit" => blackbox_in(CircuitContract, sys, file),
        "rig-cospan" | "rigspan" => match parse_rig(&opts.rig)? {
            RigName::Rational => blackbox_in(crate::rigmat::RigContract::<Q>::new(), sys, file),
            RigName::Nat => blackbox_in(crate::rigmat::RigContract::<BigUint>::new(), sys, file),
            RigName::Bool => blackbox_in(crate::rigmat::RigContract::<bool>::new(), sys, file),
        },
        other if CATEGORY_NAMES.contains(&other) => Err(CliError::Type(format!(
            "blackbox needs a decorated cospan category (circuit or rig-cospan), not {other}"
        ))),
        other => Err(CliError::Unknown(format!("category {other:?}"))),
    }
}

fn matrix_of<R: SampleRig>(file: &ExprFile) -> Result<Value, CliError> {
    let f = Evaluator::new(&rig_span_instance::<R>(), file).eval_main()?;
    Ok(serde_json::to_value(to_matrix(&f).to_json()).expect("matrix serialises"))
}

fn run_matrix_of(file: &ExprFile, opts: &Options) -> Result<Value, CliError> {
    match opts.category.as_deref() {
        None | Some("rig-cospan") | Some("rigspan") => {}
        Some(other) if CATEGORY_NAMES.contains(&other) => {
            return Err(CliError::Type(format!(
                "matrix-of reads rig-decorated spans, not {other}"
            )))
        }
        Some(other) => return Err(CliError::Unknown(format!("category {other:?}"))),
    }
    match parse_rig(&opts.rig)? {
        RigName::Rational => matrix_of::<Q>(file),
        RigName::Nat => matrix_of::<BigUint>(file),
        RigName::Bool => matrix_of::<bool>(file),
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(p) => fs::write(p, text)
            .map_err(|e| CliError::Eval(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json serialises");
    s.push('\n');
    s
}

/// Runs a parsed command line.
pub fn execute(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Eval { file, opts } => {
            let f = read_expr_file(&file)?;
            let category = opts.category.clone().unwrap_or_else(|| "cospan".into());
            let v = dispatch(&category, &opts, EvalAction(&f))?;
            emit(&pretty(&v), opts.output.as_deref())
        }
        Command::Blackbox { file, opts } => {
            let f = read_expr_file(&file)?;
            emit(&pretty(&run_blackbox(&f, &opts)?), opts.output.as_deref())
        }
        Command::MatrixOf { file, opts } => {
            let f = read_expr_file(&file)?;
            emit(&pretty(&run_matrix_of(&f, &opts)?), opts.output.as_deref())
        }
        Command::Check {
            category,
            max_size,
            seed,
            opts,
        } => {
            let category = category
                .or_else(|| opts.category.clone())
                .ok_or_else(|| CliError::Parse("check needs a category".into()))?;
            let defaults = FunctorCheck::default();
            let params = FunctorCheck {
                max_size: max_size.or(opts.max_size).unwrap_or(defaults.max_size),
                seed: seed.or(opts.seed).unwrap_or(defaults.seed),
                cases: 100,
                ..defaults
            };
            let report = dispatch(&category, &opts, CheckAction(params))?;
            emit(&format!("{}\n", report.to_json()), opts.output.as_deref())?;
            let failed = report.failures().count();
            if failed > 0 {
                return Err(CliError::CheckFailed(failed));
            }
            Ok(())
        }
    }
}

/// Parses `args` and runs them, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("decorel: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn command_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn check_accepts_positionals_and_flags() {
        let cli = Cli::try_parse_from(["decorel", "check", "cospan", "3", "42"]).unwrap();
        let Command::Check {
            category,
            max_size,
            seed,
            ..
        } = cli.command
        else {
            panic!()
        };
        assert_eq!(
            (category.as_deref(), max_size, seed),
            (Some("cospan"), Some(3), Some(42))
        );
        let cli = Cli::try_parse_from(["decorel", "check", "--category", "corel", "--seed", "7"])
            .unwrap();
        let Command::Check { category, opts, .. } = cli.command else {
            panic!()
        };
        assert_eq!(
            (category, opts.category.as_deref(), opts.seed),
            (None, Some("corel"), Some(7))
        );
    }
}
