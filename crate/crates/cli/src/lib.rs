//! Command-line front end for group-code analysis.
//!
//! Three subcommands: `analyze` builds the pair C = (1-e)KG, D = eKG from an
//! idempotent and reports the full complementary-pair analysis; `sweep`
//! enumerates every idempotent of KG and verifies the dual and equivalence
//! identities on each; `distance` computes the exact minimum distance of the
//! ideal generated by given elements. Output is deterministic byte for byte
//! for a fixed job, in either human text or structured JSON.

pub mod report;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use group_codes::lcp::{self, DualityMode};
use group_codes::{
    AlgebraElement, Field, Group, GroupCode, DEFAULT_CODEWORD_BUDGET, DEFAULT_SWEEP_BUDGET,
};

use report::{
    AnalyzeDoc, AnalyzeInput, DistanceDoc, DistanceInput, DistanceValue, SweepDoc, SweepInput,
    Timings,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] group_codes::Error),
    #[error("element is not idempotent: {0}")]
    NotIdempotent(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::NotIdempotent(_) => "E_NOT_IDEMPOTENT",
            CliError::Usage(_) => "E_USAGE",
        }
    }

    /// The message flattened to a single line for machine-parsable output.
    pub fn one_line(&self) -> String {
        self.to_string().replace('\n', "; ")
    }
}

#[derive(Parser)]
#[command(
    name = "group-codes",
    version,
    about = "Analyze codes that arise as ideals in a finite group algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build C = (1-e)KG and D = eKG from an idempotent e and report the
    /// complementary-pair analysis
    Analyze(AnalyzeArgs),
    /// Enumerate all idempotents of KG and check the dual/adjoint/hat
    /// identities on each
    Sweep(SweepArgs),
    /// Exact minimum distance of the ideal generated by the given elements
    Distance(DistanceArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Field order q = p^m (built-in moduli for 4, 8, 9)
    #[arg(long)]
    field: String,
    /// Group spec: cyclic:m, abelian:m1,m2,..., dihedral:m, or table:<path>
    #[arg(long)]
    group: String,
    /// Enumeration budget (default: 2^24 codewords, 2^20 sweep elements)
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for distance enumeration (results do not depend on it)
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// The idempotent e, e.g. "1+a+a^2+a^4+b+a^2*b+a^5*b+a^6*b"
    #[arg(long)]
    idempotent: String,
    #[arg(long, value_enum, default_value_t = Mode::Euclidean)]
    mode: Mode,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, value_enum, default_value_t = Mode::Euclidean)]
    mode: Mode,
}

#[derive(Args)]
struct DistanceArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Semicolon-separated generator expressions
    #[arg(long)]
    generators: String,
    #[arg(long, value_enum)]
    side: SideArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Euclidean,
    Hermitian,
}

impl From<Mode> for DualityMode {
    fn from(value: Mode) -> Self {
        match value {
            Mode::Euclidean => DualityMode::Euclidean,
            Mode::Hermitian => DualityMode::Hermitian,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Right,
    Left,
    TwoSided,
}

impl SideArg {
    fn as_str(&self) -> &'static str {
        match self {
            SideArg::Right => "right",
            SideArg::Left => "left",
            SideArg::TwoSided => "two-sided",
        }
    }
}

/// Runs a full CLI invocation (including argv[0]) and returns the stdout
/// document. Help and version requests return their text as a normal result.
pub fn run<I, S>(args: I) -> Result<String, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Ok(err.to_string()),
                _ => Err(CliError::Usage(
                    err.to_string().lines().next().unwrap_or("bad usage").to_string(),
                )),
            };
        }
    };
    match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Distance(args) => cmd_distance(args),
    }
}

fn parse_field(text: &str) -> Result<Field, CliError> {
    let q: u64 = text
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("--field expects an integer order, got '{text}'")))?;
    Ok(Field::of_order(q)?)
}

fn workers_or_default(args: &CommonArgs) -> usize {
    args.workers.map(|w| w as usize).unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    })
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<String, CliError> {
    let field = parse_field(&args.common.field)?;
    let group = Group::parse_spec(&args.common.group)?;
    let mode: DualityMode = args.mode.into();
    let budget = args.common.budget.unwrap_or(DEFAULT_CODEWORD_BUDGET);
    let workers = workers_or_default(&args.common);

    let e = AlgebraElement::parse(&field, &group, &args.idempotent)?;
    if !e.is_idempotent() {
        return Err(CliError::NotIdempotent(e.to_string()));
    }
    let one = AlgebraElement::one(&field, &group);
    let c = GroupCode::right_ideal(&[one.checked_sub(&e)?])?;
    let d = GroupCode::right_ideal(&[e])?;
    let report = lcp::analyze(&c, &d, mode, budget, workers)?;

    let input = AnalyzeInput {
        command: "analyze".to_string(),
        field: args.common.field.trim().to_string(),
        group: args.common.group.clone(),
        idempotent: args.idempotent.clone(),
        mode: mode.as_str().to_string(),
        budget,
    };
    let doc = AnalyzeDoc::from_report(input, &report);
    Ok(match args.common.format {
        Format::Structured => report::to_json(&doc),
        Format::Text => analyze_text(&doc, &field, &group),
    })
}

fn cmd_sweep(args: SweepArgs) -> Result<String, CliError> {
    let field = parse_field(&args.common.field)?;
    let group = Group::parse_spec(&args.common.group)?;
    let mode: DualityMode = args.mode.into();
    let sweep_budget = args.common.budget.unwrap_or(DEFAULT_SWEEP_BUDGET);
    let codeword_budget = args.common.budget.unwrap_or(DEFAULT_CODEWORD_BUDGET);
    let workers = workers_or_default(&args.common);

    let summary = lcp::sweep(&field, &group, mode, sweep_budget, codeword_budget, workers)?;
    let input = SweepInput {
        command: "sweep".to_string(),
        field: args.common.field.trim().to_string(),
        group: args.common.group.clone(),
        mode: mode.as_str().to_string(),
        budget: sweep_budget,
    };
    let doc = SweepDoc::from_summary(input, &summary);
    Ok(match args.common.format {
        Format::Structured => report::to_json(&doc),
        Format::Text => sweep_text(&doc, &field, &group),
    })
}

fn cmd_distance(args: DistanceArgs) -> Result<String, CliError> {
    let field = parse_field(&args.common.field)?;
    let group = Group::parse_spec(&args.common.group)?;
    let budget = args.common.budget.unwrap_or(DEFAULT_CODEWORD_BUDGET);
    let workers = workers_or_default(&args.common);

    let gens = args
        .generators
        .split(';')
        .map(|src| AlgebraElement::parse(&field, &group, src))
        .collect::<Result<Vec<_>, _>>()?;
    let code = match args.side {
        SideArg::Right => GroupCode::right_ideal(&gens)?,
        SideArg::Left => GroupCode::left_ideal(&gens)?,
        SideArg::TwoSided => GroupCode::two_sided_ideal(&gens)?,
    };
    let distance = code.min_distance(budget, workers)?;
    let words = (field.order() as u128).pow(code.dim() as u32) as u64;

    let input = DistanceInput {
        command: "distance".to_string(),
        field: args.common.field.trim().to_string(),
        group: args.common.group.clone(),
        generators: gens.iter().map(|g| g.to_string()).collect(),
        side: args.side.as_str().to_string(),
        budget,
    };
    let doc = DistanceDoc {
        input,
        dimension: code.dim(),
        distance: DistanceValue::Exact(distance),
        timings: Timings {
            codewords_enumerated: words,
        },
    };
    Ok(match args.common.format {
        Format::Structured => report::to_json(&doc),
        Format::Text => distance_text(&doc, &field, &group),
    })
}

fn header(out: &mut String, command: &str, field: &Field, group: &Group) {
    out.push_str(&format!("command: {command}\n"));
    out.push_str(&format!("field: GF({})\n", field.order()));
    out.push_str(&format!("group: order {}\n", group.order()));
}

fn opt_bool(v: Option<bool>) -> String {
    match v {
        Some(b) => b.to_string(),
        None => "n/a".to_string(),
    }
}

fn analyze_text(doc: &AnalyzeDoc, field: &Field, group: &Group) -> String {
    let mut out = String::new();
    header(&mut out, "analyze", field, group);
    out.push_str(&format!("mode: {}\n", doc.input.mode));
    out.push_str(&format!("budget: {}\n", doc.input.budget));
    out.push_str(&format!(
        "e: {}\n",
        doc.idempotent.e.as_deref().unwrap_or("n/a")
    ));
    out.push_str(&format!(
        "f: {}\n",
        doc.idempotent.f.as_deref().unwrap_or("n/a")
    ));
    out.push_str(&format!("is_lcp: {}\n", doc.verdicts.is_lcp));
    out.push_str(&format!(
        "e_idempotent: {}\n",
        opt_bool(doc.verdicts.e_idempotent)
    ));
    out.push_str(&format!("e_central: {}\n", opt_bool(doc.verdicts.e_central)));
    let c = &doc.verdicts.c_sidedness;
    out.push_str(&format!(
        "C sidedness: right={} left={} two_sided={}\n",
        c.right, c.left, c.two_sided
    ));
    let d = &doc.verdicts.d_sidedness;
    out.push_str(&format!(
        "D sidedness: right={} left={} two_sided={}\n",
        d.right, d.left, d.two_sided
    ));
    out.push_str(&format!(
        "dual_formula_holds: {}\n",
        opt_bool(doc.verdicts.dual_formula_holds)
    ));
    out.push_str(&format!("theorem_holds: {}\n", doc.verdicts.theorem_holds));
    out.push_str(&format!("dim(C): {}\n", doc.distances.dim_c));
    out.push_str(&format!("dist(C): {}\n", doc.distances.dist_c.render()));
    out.push_str(&format!("dim(D^perp): {}\n", doc.distances.dim_dperp));
    out.push_str(&format!(
        "dist(D^perp): {}\n",
        doc.distances.dist_dperp.render()
    ));
    out.push_str(&format!(
        "security_parameter: {}\n",
        doc.security_parameter.render()
    ));
    out.push_str(&format!(
        "codewords_enumerated: {}\n",
        doc.timings.codewords_enumerated
    ));
    out
}

fn sweep_text(doc: &SweepDoc, field: &Field, group: &Group) -> String {
    let mut out = String::new();
    header(&mut out, "sweep", field, group);
    out.push_str(&format!("mode: {}\n", doc.input.mode));
    out.push_str(&format!("budget: {}\n", doc.input.budget));
    out.push_str(&format!("elements: {}\n", doc.counts.elements));
    out.push_str(&format!("idempotents: {}\n", doc.counts.idempotents));
    out.push_str(&format!(
        "central_idempotents: {}\n",
        doc.counts.central_idempotents
    ));
    out.push_str(&format!(
        "adjoint_dim_passes: {}\n",
        doc.counts.adjoint_dim_passes
    ));
    out.push_str(&format!(
        "dual_formula_passes: {}\n",
        doc.counts.dual_formula_passes
    ));
    out.push_str(&format!(
        "hat_equivalence_passes: {}\n",
        doc.counts.hat_equivalence_passes
    ));
    let cex = &doc.counterexamples;
    if cex.adjoint_dim.is_empty() && cex.dual_formula.is_empty() && cex.hat_equivalence.is_empty()
    {
        out.push_str("counterexamples: none\n");
    } else {
        out.push_str("counterexamples:\n");
        for e in &cex.adjoint_dim {
            out.push_str(&format!("  adjoint_dim: e = {e}\n"));
        }
        for e in &cex.dual_formula {
            out.push_str(&format!("  dual_formula: e = {e}\n"));
        }
        for h in &cex.hat_equivalence {
            out.push_str(&format!(
                "  hat_equivalence: e = {} | central={} subspace_equal={} dist_c={} dist_dperp={}\n",
                h.e,
                h.central,
                h.subspace_equal,
                h.dist_c.render(),
                h.dist_dperp.render()
            ));
        }
    }
    out.push_str(&format!(
        "codewords_enumerated: {}\n",
        doc.timings.codewords_enumerated
    ));
    out
}

fn distance_text(doc: &DistanceDoc, field: &Field, group: &Group) -> String {
    let mut out = String::new();
    header(&mut out, "distance", field, group);
    out.push_str(&format!("side: {}\n", doc.input.side));
    out.push_str(&format!(
        "generators: {}\n",
        doc.input.generators.join("; ")
    ));
    out.push_str(&format!("budget: {}\n", doc.input.budget));
    out.push_str(&format!("dimension: {}\n", doc.dimension));
    out.push_str(&format!("distance: {}\n", doc.distance.render()));
    out.push_str(&format!(
        "codewords_enumerated: {}\n",
        doc.timings.codewords_enumerated
    ));
    out
}
