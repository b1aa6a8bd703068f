mod expr;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::builder::PossibleValuesParser;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use dgla_core::calculus::{bch, bernoulli, extend_differential};
use dgla_core::lie::serial::{context_from_specs, GeneratorSpec};
use dgla_core::lie::{encode, render_latex, render_text, AlgebraElement, DEFAULT_ORDER};
use dgla_core::models::{
    build_named, check_equivariance, compute_symmetric_data, disc_reflection, iota, sigma, verify_model,
    ModelEnvelope, BUILTIN_MODELS,
};
use dgla_core::scalar::to_canonical_string;

const ORDER_CAP: usize = 10;

#[derive(Parser)]
#[command(name = "dgla", version, about = "Exact computations in free differential graded Lie algebras")]
struct Cli {
    /// Write the result to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Bernoulli number B_n (with B_1 = -1/2) as p/q.
    Bernoulli { n: usize },
    /// Multi-argument BCH of the given degree 0 expressions.
    ///
    /// Expressions combine generators with rational multiples, negation,
    /// sums, parentheses and nested bch(...), e.g. `1/2 bch(e, f)`. Put
    /// expressions that start with `-` after `--`.
    Bch {
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        /// Generators as name:degree pairs, e.g. `e:0,f:0`.
        #[arg(long)]
        gens: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// Print a built-in model as a JSON envelope.
    Model {
        #[arg(value_parser = PossibleValuesParser::new(BUILTIN_MODELS))]
        name: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Print a series of the symmetric bigon model.
    ///
    /// `--weight k` keeps the words with k letters, i.e. the part with k-1
    /// brackets. `--brackets j` is the same as `--weight j+1`.
    Expand {
        #[arg(value_enum)]
        item: Item,
        #[arg(long, default_value = "bigon-sym", value_parser = PossibleValuesParser::new(["bigon-sym"]))]
        model: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long, conflicts_with = "brackets")]
        weight: Option<usize>,
        #[arg(long)]
        brackets: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check a built-in model; exits 1 if any check fails.
    Verify {
        #[arg(value_parser = PossibleValuesParser::new(BUILTIN_MODELS))]
        model: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        /// Also check equivariance under this symmetry.
        #[arg(long, value_enum)]
        morphism: Option<Symmetry>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Item {
    #[value(name = "v")]
    V,
    #[value(name = "x")]
    X,
    #[value(name = "q")]
    Q,
    #[value(name = "Dv")]
    Dv,
    #[value(name = "De")]
    De,
    #[value(name = "Df")]
    Df,
    #[value(name = "Dg")]
    Dg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Symmetry {
    Sigma,
    Iota,
    SigmaIota,
}

impl Symmetry {
    fn label(self) -> &'static str {
        match self {
            Symmetry::Sigma => "sigma",
            Symmetry::Iota => "iota",
            Symmetry::SigmaIota => "sigma-iota",
        }
    }
}

enum Failure {
    Usage(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Output {
    text: String,
    passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, passed: true }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            eprintln!("{}", rendered.lines().next().unwrap_or("error: invalid usage"));
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let out = dispatch(&cli.command)?;
    let mut text = out.text;
    text.push('\n');
    match &cli.output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))?
        }
        None => print!("{text}"),
    }
    if out.passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn order_cap() -> Result<usize, Failure> {
    match std::env::var("DGLA_MAX_ORDER") {
        Ok(v) => {
            v.trim().parse().map_err(|_| Failure::Usage(format!("DGLA_MAX_ORDER `{v}` is not a number")))
        }
        Err(_) => Ok(ORDER_CAP),
    }
}

fn check_order(order: usize) -> Result<usize, Failure> {
    let cap = order_cap()?;
    if order == 0 || order > cap {
        return Err(Failure::Usage(format!(
            "order {order} is outside 1..={cap} (DGLA_MAX_ORDER raises the cap; orders above {ORDER_CAP} are unsupported)"
        )));
    }
    Ok(order)
}

fn parse_gens(spec: &str) -> Result<Vec<GeneratorSpec>, Failure> {
    spec.split(',')
        .map(|item| {
            let (name, degree) = item
                .split_once(':')
                .ok_or_else(|| Failure::Usage(format!("generator `{item}` is not name:degree")))?;
            let degree =
                degree.trim().parse().map_err(|_| Failure::Usage(format!("bad degree in `{item}`")))?;
            Ok(GeneratorSpec { name: name.trim().to_owned(), degree })
        })
        .collect()
}

fn render(x: &AlgebraElement, label: &str, format: Format) -> String {
    match format {
        Format::Json => encode(x, label),
        Format::Text => render_text(x),
        Format::Latex => render_latex(x),
    }
}

fn dispatch(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Bernoulli { n } => Ok(Output::ok(to_canonical_string(&bernoulli(*n)))),
        Command::Bch { order, gens, format, exprs } => {
            let ctx = context_from_specs(&parse_gens(gens)?, check_order(*order)?)?;
            let args = exprs
                .iter()
                .map(|s| expr::parse(&ctx, s).map_err(|e| Failure::Usage(format!("in `{s}` {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Output::ok(render(&bch(&ctx, &args)?, "bch", *format)))
        }
        Command::Model { name, order } => {
            let m = build_named(name, check_order(*order)?)?;
            Ok(Output::ok(ModelEnvelope::from_model(&m).to_json_pretty()))
        }
        Command::Expand { item, model, order, weight, brackets, format } => {
            let m = build_named(model, check_order(*order)?)?;
            let ctx = m.context();
            let data = || compute_symmetric_data(m.order());
            let (label, x) = match item {
                Item::V => ("v", data()?.v.transport(ctx)?),
                Item::X => ("x", data()?.x.transport(ctx)?),
                Item::Q => ("q", data()?.q.transport(ctx)?),
                Item::Dv => ("Dv", extend_differential(&m, &data()?.v.transport(ctx)?)?),
                Item::De => ("De", m.differential_of("e")?.clone()),
                Item::Df => ("Df", m.differential_of("f")?.clone()),
                Item::Dg => ("Dg", m.differential_of("g")?.clone()),
            };
            let x = match (weight, brackets) {
                (Some(0), _) => return Err(Failure::Usage("--weight must be at least 1".into())),
                (Some(k), _) => x.weight_component(*k),
                (None, Some(j)) => x.weight_component(j + 1),
                (None, None) => x,
            };
            Ok(Output::ok(render(&x, label, *format)))
        }
        Command::Verify { model, order, morphism } => {
            let m = build_named(model, check_order(*order)?)?;
            let mut report = verify_model(&m)?;
            if let Some(sym) = morphism {
                let ctx = m.context();
                let mor = match (model.as_str(), sym) {
                    ("disc1", Symmetry::Iota) => disc_reflection(ctx),
                    ("disc1", _) => return Err(Failure::Usage("disc1 has no sigma symmetry".into())),
                    (_, Symmetry::Sigma) => sigma(ctx),
                    (_, Symmetry::Iota) => iota(ctx),
                    (_, Symmetry::SigmaIota) => sigma(ctx).and_then(|s| s.compose(&iota(ctx)?)),
                }
                .map_err(|e| Failure::Usage(format!("{} does not act on {model}: {e}", sym.label())))?;
                report.extend(check_equivariance(&m, &mor, sym.label())?);
            }
            let text = serde_json::to_string_pretty(&report.to_json()).expect("report serializes");
            Ok(Output { text, passed: report.passed() })
        }
    }
}
