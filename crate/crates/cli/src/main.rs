//! Batch command-line front end: every computation and verification exposed
//! as a subcommand with machine-readable output.
//!
//! Exit codes: 0 when the computation or verification succeeds, 1 when a
//! verification fails (the witness is in the output), 2 for usage or budget
//! errors.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pbwfilt_core::classical::{
    analyze, cartan_component_check, ideal_generators, ModuleBudget,
};
use pbwfilt_core::hall::{HallBudget, HallContext, HallElement};
use pbwfilt_core::polytope::{lattice_points, minkowski_check, ExponentVector, Polytope};
use pbwfilt_core::quiver::{
    ar_cotranslate, ar_sequence, ar_translate, classify_weight_function, degeneration_leq,
    hom_dim, WeightFunction,
};
use pbwfilt_core::roots::{positive_roots, root_pairing, weyl_dim, PositiveRoot, Rank, Weight};
use pbwfilt_core::verify::{run_all, VerifyConfig};

#[derive(Parser)]
#[command(
    name = "pbwfilt",
    about = "Exact computations for PBW-type filtrations in type A",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the report to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Weight polytopes: inequalities, lattice points, Minkowski sums.
    Polytope {
        #[command(subcommand)]
        cmd: PolytopeCmd,
    },
    /// Root-system data: dimensions and the symmetrized pairing.
    Root {
        #[command(subcommand)]
        cmd: RootCmd,
    },
    /// Quiver representation theory: Hom tables, AR data, weight functions.
    Quiver {
        #[command(subcommand)]
        cmd: QuiverCmd,
    },
    /// Hall algebra computations and checks.
    Hall {
        #[command(subcommand)]
        cmd: HallCmd,
    },
    /// Module filtrations, monomial bases, and monomial ideals.
    Module {
        #[command(subcommand)]
        cmd: ModuleCmd,
    },
    /// Batch verification suites.
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum PolytopeCmd {
    /// Print the Dyck-path inequality description of P(lambda).
    Inequalities(WeightArgs),
    /// Enumerate the lattice points S(lambda).
    Points(WeightArgs),
    /// Check S(lambda) + S(mu) = S(lambda + mu).
    Minkowski(WeightPairArgs),
}

#[derive(Subcommand)]
enum RootCmd {
    /// Weyl dimension of V(lambda).
    Dim(WeightArgs),
    /// Symmetrized Cartan pairing of two positive roots.
    Pairing {
        #[arg(long)]
        n: usize,
        /// First root as "i,j".
        #[arg(long)]
        alpha: String,
        /// Second root as "i,j".
        #[arg(long)]
        beta: String,
    },
}

#[derive(Subcommand)]
enum QuiverCmd {
    /// The full Hom-dimension table of interval modules.
    HomTable {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// AR translate, cotranslate, and the almost-split sequence of a root.
    Ar {
        #[arg(long)]
        n: usize,
        /// Interval as "i,j".
        #[arg(long)]
        root: String,
    },
    /// Classify a weight function and print its Hom-decomposition.
    Classify {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        degree: DegreeArgs,
    },
    /// Compare two representation classes in the degeneration order.
    Degeneration {
        #[arg(long)]
        n: usize,
        /// Representation class as JSON, e.g. '{"1,2":1}'.
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
}

#[derive(Subcommand)]
enum HallCmd {
    /// Multiply two Hall-algebra elements given by representation classes.
    Mult {
        #[arg(long)]
        n: usize,
        /// Left factor class as JSON.
        #[arg(long)]
        left: String,
        /// Right factor class as JSON.
        #[arg(long)]
        right: String,
    },
    /// The Hall polynomial of a triple of classes, as a polynomial in u.
    Polynomial {
        #[arg(long)]
        n: usize,
        /// Quotient class as JSON.
        #[arg(long)]
        quotient: String,
        /// Submodule class as JSON.
        #[arg(long)]
        sub: String,
        /// Total class as JSON.
        #[arg(long)]
        extension: String,
    },
    /// Straightening relation of a pair of PBW root vectors.
    Straighten {
        #[arg(long)]
        n: usize,
        /// Pair of roots "i,j:k,l".
        #[arg(long, conflicts_with = "all")]
        pair: Option<String>,
        /// Report every pair.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Graded q-commutativity of the filtration defined by a degree function.
    GradedCheck {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        degree: DegreeArgs,
    },
    /// Scan short exact sequences for (strict) subadditivity of a degree.
    WeakScan {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_total_dim: u64,
        #[command(flatten)]
        degree: DegreeArgs,
    },
}

#[derive(Subcommand)]
enum ModuleCmd {
    /// Graded report: degree dimensions, basis and monomial-ideal checks.
    Report {
        #[command(flatten)]
        weight: WeightArgs,
        #[command(flatten)]
        degree: DegreeArgs,
    },
    /// The monomial basis (lattice points) with their degrees.
    Basis {
        #[command(flatten)]
        weight: WeightArgs,
        #[command(flatten)]
        degree: DegreeArgs,
    },
    /// Minimal monomial generators of the annihilating ideal.
    IdealGenerators(WeightArgs),
    /// Independence of the summed lattice points in the tensor product.
    CartanCheck(WeightPairArgs),
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Run the full desk-scale suite, one line per criterion.
    All {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_height: u64,
    },
}

#[derive(Args)]
struct WeightArgs {
    #[arg(long)]
    n: usize,
    /// Weight in fundamental coordinates, e.g. "0,1,0".
    #[arg(long)]
    lambda: String,
}

#[derive(Args)]
struct WeightPairArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    mu: String,
}

#[derive(Args)]
struct DegreeArgs {
    /// Degree function: the canonical quiver degree, the length degree, or a
    /// custom weight function.
    #[arg(long, value_enum, default_value_t = DegreeMode::Ff)]
    degree: DegreeMode,
    /// JSON file with {"i,j": value} entries, required for --degree custom.
    #[arg(long)]
    weights: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum DegreeMode {
    Ff,
    Length,
    Custom,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

/// Failures that map to exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl<E: std::error::Error> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// Output plus whether every verification in it held.
type CmdResult = Result<(String, bool), UsageError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = dispatch(&cli.command);
    match result {
        Ok((output, verified)) => {
            if let Some(path) = &cli.out {
                if let Err(e) = fs::write(path, &output) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{output}");
            }
            if verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: &Command) -> CmdResult {
    match command {
        Command::Polytope { cmd } => match cmd {
            PolytopeCmd::Inequalities(args) => polytope_inequalities(args),
            PolytopeCmd::Points(args) => polytope_points(args),
            PolytopeCmd::Minkowski(args) => polytope_minkowski(args),
        },
        Command::Root { cmd } => match cmd {
            RootCmd::Dim(args) => root_dim(args),
            RootCmd::Pairing { n, alpha, beta } => root_pairing_cmd(*n, alpha, beta),
        },
        Command::Quiver { cmd } => match cmd {
            QuiverCmd::HomTable { n, format } => quiver_hom_table(*n, *format),
            QuiverCmd::Ar { n, root } => quiver_ar(*n, root),
            QuiverCmd::Classify { n, degree } => quiver_classify(*n, degree),
            QuiverCmd::Degeneration { n, left, right } => quiver_degeneration(*n, left, right),
        },
        Command::Hall { cmd } => match cmd {
            HallCmd::Mult { n, left, right } => hall_mult(*n, left, right),
            HallCmd::Polynomial { n, quotient, sub, extension } => {
                hall_polynomial(*n, quotient, sub, extension)
            }
            HallCmd::Straighten { n, pair, all, format } => {
                hall_straighten(*n, pair.as_deref(), *all, *format)
            }
            HallCmd::GradedCheck { n, degree } => hall_graded_check(*n, degree),
            HallCmd::WeakScan { n, max_total_dim, degree } => {
                hall_weak_scan(*n, *max_total_dim, degree)
            }
        },
        Command::Module { cmd } => match cmd {
            ModuleCmd::Report { weight, degree } => module_report(weight, degree),
            ModuleCmd::Basis { weight, degree } => module_basis(weight, degree),
            ModuleCmd::IdealGenerators(args) => module_ideal_generators(args),
            ModuleCmd::CartanCheck(args) => module_cartan_check(args),
        },
        Command::Verify { cmd } => match cmd {
            VerifyCmd::All { n, max_height } => verify_all(*n, *max_height),
        },
    }
}

fn env_u64(name: &str) -> Option<u64> {
    std::env::var(name).ok().and_then(|v| v.parse().ok())
}

fn hall_budget() -> HallBudget {
    let mut budget = HallBudget::default();
    if let Some(v) = env_u64("PBWFILT_MAX_TOTAL_DIM") {
        budget.max_total_dim = v;
    }
    if let Some(v) = env_u64("PBWFILT_MAX_PRIME") {
        budget.max_prime = v;
    }
    budget
}

fn module_budget() -> ModuleBudget {
    let mut budget = ModuleBudget::default();
    if let Some(v) = env_u64("PBWFILT_MAX_MODULE_DIM") {
        budget.max_module_dim = v;
    }
    budget
}

fn parse_rank(n: usize) -> Result<Rank, UsageError> {
    Rank::new(n).map_err(UsageError::from)
}

fn parse_weight(n: usize, text: &str) -> Result<Weight, UsageError> {
    let weight = Weight::from_str(text)?;
    if weight.rank().get() != n {
        return Err(UsageError(format!(
            "--lambda/--mu has {} coordinates but --n is {n}",
            weight.rank().get()
        )));
    }
    parse_rank(n)?;
    Ok(weight)
}

fn warn_module_scale(n: usize, lambda: &Weight) {
    if n > 4 {
        eprintln!("warning: rank {n} exceeds the default module budget (4); expect long runtimes");
    }
    if lambda.height() > 3 {
        eprintln!(
            "warning: |lambda| = {} exceeds the default height budget (3); expect long runtimes",
            lambda.height()
        );
    }
}

fn parse_root(n: Rank, text: &str) -> Result<PositiveRoot, UsageError> {
    let root = PositiveRoot::parse_key(text)?;
    root.in_rank(n)?;
    Ok(root)
}

fn parse_class(n: Rank, text: &str) -> Result<ExponentVector, UsageError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let class = ExponentVector::from_json(&value)?;
    if class.max_vertex() > n.get() {
        return Err(UsageError(format!(
            "class {text} mentions vertex {} beyond rank {n}",
            class.max_vertex()
        )));
    }
    Ok(class)
}

fn resolve_degree(n: Rank, args: &DegreeArgs) -> Result<WeightFunction, UsageError> {
    match args.degree {
        DegreeMode::Ff => Ok(WeightFunction::mu0(n)),
        DegreeMode::Length => Ok(WeightFunction::length(n)),
        DegreeMode::Custom => {
            let path = args
                .weights
                .as_ref()
                .ok_or_else(|| UsageError("--degree custom requires --weights FILE".into()))?;
            let text = fs::read_to_string(path)?;
            let value: serde_json::Value = serde_json::from_str(&text)?;
            Ok(WeightFunction::from_json(n, &value)?)
        }
    }
}

fn to_json_pretty<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serializable report");
    out.push('\n');
    out
}

// ---- polytope ----

fn polytope_inequalities(args: &WeightArgs) -> CmdResult {
    let lambda = parse_weight(args.n, &args.lambda)?;
    #[derive(Serialize)]
    struct IneqOut {
        path: Vec<[usize; 2]>,
        bound: u64,
    }
    let polytope = Polytope::new(&lambda);
    let rows: Vec<IneqOut> = polytope
        .inequalities
        .iter()
        .map(|q| IneqOut {
            path: q.path.roots.iter().map(|r| [r.i, r.j]).collect(),
            bound: q.bound,
        })
        .collect();
    Ok((to_json_pretty(&rows), true))
}

fn polytope_points(args: &WeightArgs) -> CmdResult {
    let lambda = parse_weight(args.n, &args.lambda)?;
    let points = lattice_points(&lambda);
    #[derive(Serialize)]
    struct PointsOut {
        lambda: String,
        count: usize,
        points: Vec<ExponentVector>,
    }
    let out = PointsOut { lambda: lambda.to_string(), count: points.len(), points };
    Ok((to_json_pretty(&out), true))
}

fn polytope_minkowski(args: &WeightPairArgs) -> CmdResult {
    let lambda = parse_weight(args.n, &args.lambda)?;
    let mu = parse_weight(args.n, &args.mu)?;
    let equal = minkowski_check(&lambda, &mu);
    #[derive(Serialize)]
    struct MinkowskiOut {
        lambda: String,
        mu: String,
        equal: bool,
    }
    let out = MinkowskiOut { lambda: lambda.to_string(), mu: mu.to_string(), equal };
    Ok((to_json_pretty(&out), equal))
}

// ---- root ----

fn root_dim(args: &WeightArgs) -> CmdResult {
    let lambda = parse_weight(args.n, &args.lambda)?;
    #[derive(Serialize)]
    struct DimOut {
        lambda: String,
        dim: String,
    }
    let out = DimOut { lambda: lambda.to_string(), dim: weyl_dim(&lambda).to_string() };
    Ok((to_json_pretty(&out), true))
}

fn root_pairing_cmd(n: usize, alpha: &str, beta: &str) -> CmdResult {
    let rank = parse_rank(n)?;
    let a = parse_root(rank, alpha)?;
    let b = parse_root(rank, beta)?;
    let pairing = root_pairing(rank, a, b)?;
    #[derive(Serialize)]
    struct PairingOut {
        alpha: String,
        beta: String,
        pairing: i64,
    }
    Ok((to_json_pretty(&PairingOut { alpha: a.key(), beta: b.key(), pairing }), true))
}

// ---- quiver ----

fn quiver_hom_table(n: usize, format: Format) -> CmdResult {
    let rank = parse_rank(n)?;
    let roots = positive_roots(rank);
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct HomTableOut {
                n: usize,
                roots: Vec<String>,
                /// `table[source][target]`
                table: Vec<Vec<u64>>,
            }
            let table = roots
                .iter()
                .map(|&a| roots.iter().map(|&b| hom_dim(a, b)).collect())
                .collect();
            let out = HomTableOut {
                n,
                roots: roots.iter().map(|r| r.key()).collect(),
                table,
            };
            Ok((to_json_pretty(&out), true))
        }
        Format::Csv => {
            let mut out = String::from("source\\target");
            for r in &roots {
                out.push_str(&format!(",\"{}\"", r.key()));
            }
            out.push('\n');
            for a in &roots {
                out.push_str(&format!("\"{}\"", a.key()));
                for b in &roots {
                    out.push_str(&format!(",{}", hom_dim(*a, *b)));
                }
                out.push('\n');
            }
            Ok((out, true))
        }
    }
}

fn quiver_ar(n: usize, root: &str) -> CmdResult {
    let rank = parse_rank(n)?;
    let u = parse_root(rank, root)?;
    #[derive(Serialize)]
    struct ArOut {
        root: String,
        translate: Option<String>,
        cotranslate: Option<String>,
        sequence: Option<ArSeqOut>,
    }
    #[derive(Serialize)]
    struct ArSeqOut {
        start: String,
        middle: ExponentVector,
        end: String,
    }
    let sequence = ar_sequence(rank, u).ok().map(|seq| ArSeqOut {
        start: seq.start.key(),
        middle: seq.middle,
        end: seq.end.key(),
    });
    let out = ArOut {
        root: u.key(),
        translate: ar_translate(rank, u).map(|r| r.key()),
        cotranslate: ar_cotranslate(u).map(|r| r.key()),
        sequence,
    };
    Ok((to_json_pretty(&out), true))
}

fn quiver_classify(n: usize, degree: &DegreeArgs) -> CmdResult {
    let rank = parse_rank(n)?;
    let w = resolve_degree(rank, degree)?;
    let (class, coeffs) = classify_weight_function(&w);
    #[derive(Serialize)]
    struct ClassifyOut {
        class: pbwfilt_core::quiver::WeightClass,
        coefficients: BTreeMap<String, i64>,
    }
    let out = ClassifyOut {
        class,
        coefficients: coeffs.into_iter().map(|(r, a)| (r.key(), a)).collect(),
    };
    Ok((to_json_pretty(&out), true))
}

fn quiver_degeneration(n: usize, left: &str, right: &str) -> CmdResult {
    let rank = parse_rank(n)?;
    let m = parse_class(rank, left)?;
    let m2 = parse_class(rank, right)?;
    let leq = degeneration_leq(rank, &m, &m2)?;
    #[derive(Serialize)]
    struct DegenerationOut {
        left: ExponentVector,
        right: ExponentVector,
        leq: bool,
    }
    Ok((to_json_pretty(&DegenerationOut { left: m, right: m2, leq }), true))
}

// ---- hall ----

fn hall_mult(n: usize, left: &str, right: &str) -> CmdResult {
    let rank = parse_rank(n)?;
    let ctx = HallContext::with_budget(rank, hall_budget());
    let a = parse_class(rank, left)?;
    let b = parse_class(rank, right)?;
    let product = ctx
        .mult(&HallElement::from_class(a.clone()), &HallElement::from_class(b.clone()))
        .map_err(UsageError::from)?;
    #[derive(Serialize)]
    struct TermOut {
        class: ExponentVector,
        coeff: String,
    }
    #[derive(Serialize)]
    struct MultOut {
        left: ExponentVector,
        right: ExponentVector,
        product: String,
        terms: Vec<TermOut>,
    }
    let out = MultOut {
        left: a,
        right: b,
        product: product.render(),
        terms: product
            .iter()
            .map(|(class, coeff)| TermOut { class: class.clone(), coeff: coeff.to_string() })
            .collect(),
    };
    Ok((to_json_pretty(&out), true))
}

fn hall_polynomial(n: usize, quotient: &str, sub: &str, extension: &str) -> CmdResult {
    let rank = parse_rank(n)?;
    let ctx = HallContext::with_budget(rank, hall_budget());
    let m = parse_class(rank, quotient)?;
    let s = parse_class(rank, sub)?;
    let x = parse_class(rank, extension)?;
    let poly = ctx.hall_polynomial(&m, &s, &x).map_err(UsageError::from)?;
    #[derive(Serialize)]
    struct PolyOut {
        quotient: ExponentVector,
        sub: ExponentVector,
        extension: ExponentVector,
        polynomial: String,
    }
    let out = PolyOut {
        quotient: m,
        sub: s,
        extension: x,
        polynomial: poly.render_with_var("u"),
    };
    Ok((to_json_pretty(&out), true))
}

#[derive(Serialize)]
struct StraightenRow {
    beta_k: String,
    beta_l: String,
    identity: String,
    split_cancelled: bool,
    support_ok: bool,
    degree_drop_ok: bool,
    ok: bool,
}

fn straighten_row(report: &pbwfilt_core::hall::StraightenReport) -> StraightenRow {
    StraightenRow {
        beta_k: report.beta_k.key(),
        beta_l: report.beta_l.key(),
        identity: report.render_identity(),
        split_cancelled: report.split_cancelled,
        support_ok: report.support_ok,
        degree_drop_ok: report.degree_drop_ok,
        ok: report.all_ok(),
    }
}

fn hall_straighten(n: usize, pair: Option<&str>, all: bool, format: Format) -> CmdResult {
    let rank = parse_rank(n)?;
    let ctx = HallContext::with_budget(rank, hall_budget());
    let reports = if all {
        ctx.straighten_all().map_err(UsageError::from)?
    } else {
        let pair = pair.ok_or_else(|| UsageError("need --pair i,j:k,l or --all".into()))?;
        let (first, second) = pair
            .split_once(':')
            .ok_or_else(|| UsageError(format!("cannot parse pair {pair:?}")))?;
        let a = parse_root(rank, first)?;
        let b = parse_root(rank, second)?;
        if a == b {
            return Err(UsageError("the two roots must differ".into()));
        }
        let pa = ctx.order().position(a).expect("root in order");
        let pb = ctx.order().position(b).expect("root in order");
        vec![ctx.straighten_pair(pa.min(pb), pa.max(pb)).map_err(UsageError::from)?]
    };
    let ok = reports.iter().all(|r| r.all_ok());
    match format {
        Format::Json => {
            let rows: Vec<StraightenRow> = reports.iter().map(straighten_row).collect();
            Ok((to_json_pretty(&rows), ok))
        }
        Format::Csv => {
            let mut out =
                String::from("beta_k,beta_l,split_cancelled,support_ok,degree_drop_ok,ok\n");
            for r in reports.iter().map(straighten_row) {
                out.push_str(&format!(
                    "\"{}\",\"{}\",{},{},{},{}\n",
                    r.beta_k, r.beta_l, r.split_cancelled, r.support_ok, r.degree_drop_ok, r.ok
                ));
            }
            Ok((out, ok))
        }
    }
}

fn hall_graded_check(n: usize, degree: &DegreeArgs) -> CmdResult {
    let rank = parse_rank(n)?;
    let ctx = HallContext::with_budget(rank, hall_budget());
    let w = resolve_degree(rank, degree)?;
    let report = ctx.graded_relation_check(&w).map_err(UsageError::from)?;
    #[derive(Serialize)]
    struct GradedOut {
        ok: bool,
        failing_pairs: Vec<[String; 2]>,
    }
    let out = GradedOut {
        ok: report.ok,
        failing_pairs: report
            .failing_pairs
            .iter()
            .map(|(a, b)| [a.key(), b.key()])
            .collect(),
    };
    let ok = report.ok;
    Ok((to_json_pretty(&out), ok))
}

fn hall_weak_scan(n: usize, max_total_dim: u64, degree: &DegreeArgs) -> CmdResult {
    let rank = parse_rank(n)?;
    let ctx = HallContext::with_budget(rank, hall_budget());
    let w = resolve_degree(rank, degree)?;
    let report = ctx
        .weak_admissibility_scan(&w, max_total_dim)
        .map_err(UsageError::from)?;
    #[derive(Serialize)]
    struct WitnessOut {
        extension: ExponentVector,
        quotient: ExponentVector,
        sub: ExponentVector,
    }
    #[derive(Serialize)]
    struct ScanOut {
        weak_ok: bool,
        strict_ok: bool,
        normalized: bool,
        weak_witness: Option<WitnessOut>,
        strict_witness: Option<WitnessOut>,
    }
    let witness = |w: &Option<(ExponentVector, ExponentVector, ExponentVector)>| {
        w.as_ref().map(|(x, m, s)| WitnessOut {
            extension: x.clone(),
            quotient: m.clone(),
            sub: s.clone(),
        })
    };
    let out = ScanOut {
        weak_ok: report.weak_ok,
        strict_ok: report.strict_ok,
        normalized: report.normalized,
        weak_witness: witness(&report.weak_witness),
        strict_witness: witness(&report.strict_witness),
    };
    Ok((to_json_pretty(&out), report.weak_ok))
}

// ---- module ----

fn module_report(weight: &WeightArgs, degree: &DegreeArgs) -> CmdResult {
    let lambda = parse_weight(weight.n, &weight.lambda)?;
    warn_module_scale(weight.n, &lambda);
    let n = lambda.rank();
    let w = resolve_degree(n, degree)?;
    let report = analyze(&lambda, &w, &module_budget())?;
    let ok = report.basis_ok && report.monomial_ideal_ok;
    Ok((to_json_pretty(&report), ok))
}

fn module_basis(weight: &WeightArgs, degree: &DegreeArgs) -> CmdResult {
    let lambda = parse_weight(weight.n, &weight.lambda)?;
    warn_module_scale(weight.n, &lambda);
    let n = lambda.rank();
    let w = resolve_degree(n, degree)?;
    let report = analyze(&lambda, &w, &module_budget())?;
    let mut basis: Vec<(i64, ExponentVector)> = lattice_points(&lambda)
        .into_iter()
        .map(|s| (w.degree_of(&s), s))
        .collect();
    basis.sort();
    #[derive(Serialize)]
    struct BasisEntry {
        monomial: ExponentVector,
        degree: i64,
    }
    #[derive(Serialize)]
    struct BasisOut {
        lambda: String,
        count: usize,
        basis_ok: bool,
        basis: Vec<BasisEntry>,
    }
    let out = BasisOut {
        lambda: lambda.to_string(),
        count: basis.len(),
        basis_ok: report.basis_ok,
        basis: basis
            .into_iter()
            .map(|(degree, monomial)| BasisEntry { monomial, degree })
            .collect(),
    };
    let ok = report.basis_ok;
    Ok((to_json_pretty(&out), ok))
}

fn module_ideal_generators(args: &WeightArgs) -> CmdResult {
    let lambda = parse_weight(args.n, &args.lambda)?;
    let generators = ideal_generators(&lambda);
    #[derive(Serialize)]
    struct GensOut {
        lambda: String,
        count: usize,
        generators: Vec<ExponentVector>,
    }
    let out = GensOut {
        lambda: lambda.to_string(),
        count: generators.len(),
        generators,
    };
    Ok((to_json_pretty(&out), true))
}

fn module_cartan_check(args: &WeightPairArgs) -> CmdResult {
    let lambda = parse_weight(args.n, &args.lambda)?;
    let mu = parse_weight(args.n, &args.mu)?;
    warn_module_scale(args.n, &lambda.add(&mu));
    let ok = cartan_component_check(&lambda, &mu, &module_budget())?;
    #[derive(Serialize)]
    struct CartanOut {
        lambda: String,
        mu: String,
        ok: bool,
    }
    let out = CartanOut { lambda: lambda.to_string(), mu: mu.to_string(), ok };
    Ok((to_json_pretty(&out), ok))
}

// ---- verify ----

fn verify_all(n: usize, max_height: u64) -> CmdResult {
    let config = VerifyConfig { max_rank: n, max_height };
    let outcomes = run_all(&config);
    let mut out = String::new();
    for outcome in &outcomes {
        out.push_str(&outcome.line());
        out.push('\n');
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    out.push_str(&format!(
        "{} of {} criteria passed\n",
        outcomes.len() - failed,
        outcomes.len()
    ));
    Ok((out, failed == 0))
}
