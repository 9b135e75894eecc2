//! Command-line front end for branchkit.

use std::process::ExitCode;
use std::sync::Arc;

use branchkit::branching::{duality_setup, duflo_vargas_setup, BranchingResult, Setup};
use branchkit::catalog::{Catalog, PairData};
use branchkit::distribution::{heaviside, TruncationWindow};
use branchkit::partition::{acyclic_functional, kostant_partition_with, WeightMultiset};
use branchkit::report::{diff, Format, Report};
use branchkit::verify::{self, Example};
use branchkit::{Basis, Error, Rat, Weight};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "branchkit", version, about = "Branching of discrete series to symmetric subgroups")]
struct Cli {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Duality,
    DufloVargas,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Tsv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Table => Format::Table,
            FormatArg::Json => Format::Json,
            FormatArg::Tsv => Format::Tsv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum of a discrete series restricted to a symmetric subgroup.
    Compute {
        /// The pair as "g/h", e.g. "sp(1,3)/sp(1,1)+sp(2)".
        #[arg(long)]
        pair: String,
        /// Harish-Chandra parameter, e.g. "3,2,1|5".
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Window bound on <xi, mu - q(lambda)>.
        #[arg(long, default_value = "20")]
        window: String,
        #[arg(long, value_enum, default_value = "duality")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
    },
    /// List or inspect the catalog of pairs.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run a pinned example against its closed form.
    Verify {
        /// One of I, II, III, IV, sp1b_types.
        example: String,
    },
    /// Partition counts and Heaviside distributions.
    Partition {
        /// Generators separated by ';', e.g. "1,-1,0;0,1,-1".
        #[arg(long, allow_hyphen_values = true)]
        gens: String,
        /// Target weight for a partition count.
        #[arg(long, allow_hyphen_values = true)]
        target: Option<String>,
        /// Print the Heaviside distribution up to this height instead.
        #[arg(long)]
        heaviside: Option<String>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// One line per row; the filter matches a substring of g.
    List { filter: Option<String> },
    /// Details of an instantiated pair "g/h".
    Show { pair: String },
}

/// Failures mapped to exit codes.
enum Failure {
    Input(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        if e.is_consistency_failure() {
            Failure::Check(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        pool = pool.num_threads(n);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match pool.install(|| run(cli.command)) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Check(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::Compute {
            pair,
            lambda,
            window,
            method,
            format,
        } => compute(&pair, &lambda, &window, method, format.into()),
        Command::Catalog { action } => catalog(action),
        Command::Verify { example } => {
            let ex: Example = example.parse()?;
            let rep = verify::run(ex)?;
            if rep.passed() {
                Ok(rep.to_string())
            } else {
                print!("{rep}");
                Err(Failure::Check(rep.mismatch.unwrap_or_default()))
            }
        }
        Command::Partition { gens, target, heaviside } => partition(&gens, target.as_deref(), heaviside.as_deref()),
    }
}

fn pair_data(pair: &str) -> Result<Arc<PairData>, Failure> {
    let entry = Catalog::load()?.lookup_pair(pair)?;
    entry
        .data
        .ok_or_else(|| Failure::Input(format!("pair listed but unimplemented: {pair}")))
}

fn compute(pair: &str, lambda: &str, window: &str, method: MethodArg, format: Format) -> Result<String, Failure> {
    let bound: Rat = window
        .parse()
        .map_err(|_| Failure::Input(format!("window {window:?} is not a number")))?;
    if !bound.is_positive() {
        return Err(Failure::Input("window bound must be positive".into()));
    }
    let data = pair_data(pair)?;
    let lambda = Weight::parse(lambda, data.g.basis())?;
    let setup = Setup::new(&data, &lambda, &bound)?;
    let render = |r: &BranchingResult| Report::new(r).render(format);
    match method {
        MethodArg::Duality => Ok(render(&duality_setup(&setup)?)),
        MethodArg::DufloVargas => Ok(render(&duflo_vargas_setup(&setup)?)),
        MethodArg::Both => {
            let a = duality_setup(&setup)?;
            let b = duflo_vargas_setup(&setup)?;
            let d = diff(&Report::new(&a), &Report::new(&b));
            let mut out = render(&a);
            out.push_str(&render(&b));
            out.push_str("DIFF\n");
            for line in &d {
                out.push_str(line);
                out.push('\n');
            }
            if d.is_empty() {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Check(format!("methods disagree at {} weights", d.len())))
            }
        }
    }
}

fn catalog(action: CatalogAction) -> Result<String, Failure> {
    let cat = Catalog::load()?;
    let mut out = String::new();
    match action {
        CatalogAction::List { filter } => {
            for row in cat.list(filter.as_deref()) {
                out.push_str(&format!("{row}\n"));
            }
        }
        CatalogAction::Show { pair } => {
            let e = cat.lookup_pair(&pair)?;
            out.push_str(&format!("pair      {}\nh0        {}\nrow       {}\n", e.id(), e.h0, e.row.id()));
            out.push_str(&format!("params    {:?}\nswapped   {}\n", e.params, e.swapped));
            if let Some(d) = &e.data {
                out.push_str(&format!("k1        {:?}\nequal rank {}\n", d.k1, d.equal_rank));
                for m in &d.family {
                    out.push_str(&format!(
                        "member    {} rho = {} bds = {}\n",
                        m.name,
                        m.system.rho(),
                        m.bds
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// Basis inferred from the shape of a weight text: entries before and after
/// the `|` separator.
fn infer_basis(text: &str) -> Arc<Basis> {
    let count = |s: &str| s.split(',').filter(|x| !x.trim().is_empty()).count();
    match text.split_once('|') {
        Some((a, b)) => Basis::new(count(a), count(b), "free"),
        None => Basis::new(count(text), 0, "free"),
    }
}

fn partition(gens: &str, target: Option<&str>, window: Option<&str>) -> Result<String, Failure> {
    let texts: Vec<&str> = gens.split(';').map(str::trim).filter(|s| !s.is_empty()).collect();
    let first = texts.first().ok_or_else(|| Failure::Input("no generators".into()))?;
    let basis = infer_basis(first);
    let list: Vec<Weight> = texts
        .iter()
        .map(|t| Weight::parse(t, &basis))
        .collect::<Result<_, _>>()?;
    let xi = acyclic_functional(&basis, &list)?;
    let set = WeightMultiset::from_weights(list);
    match (target, window) {
        (Some(t), _) => {
            let t = Weight::parse(t, &basis)?;
            Ok(format!("{}\n", kostant_partition_with(&set, &t, &xi)?))
        }
        (None, Some(b)) => {
            let b: Rat = b
                .parse()
                .map_err(|_| Failure::Input(format!("bound {b:?} is not a number")))?;
            Ok(heaviside(&set, &TruncationWindow::new(xi, b))?.dump())
        }
        (None, None) => Err(Failure::Input("give --target or --heaviside".into())),
    }
}
