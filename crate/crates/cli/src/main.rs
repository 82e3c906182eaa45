use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use selfdual::classify::{
    assoc, contains_one_number, nonassoc_all, nonassoc_case, one_op::one_operation_classification, CaseReport,
    ClassificationSummary, ClassifyError, GbConfig, Pipeline,
};
use selfdual::groebner::{buchberger_staged, GroebnerReport, IdealFile};
use selfdual::linalg::{format_matrix_text, parse_matrix_json, MatrixFile, PolyMatrix};
use selfdual::operad::{
    basis_labels, catalog, catalog_names, check_dual_pair, coefficient_sum, loday_dual, loday_dual_raw, CatalogError,
    QuadraticSpace,
};
use selfdual::poly::{format_polynomial, OrderKind};
use selfdual::Rational;

#[derive(Parser)]
#[command(name = "selfdual", version, about = "Koszul duals and self-dual quadratic operads with two operations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Koszul dual of a relation matrix in row canonical form.
    Dual {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reduced Gröbner basis of an ideal file, with the stage trace.
    Groebner {
        #[arg(long)]
        ideal: PathBuf,
        /// Overrides the order in the file.
        #[arg(long)]
        order: Option<OrderKind>,
        /// Variables smallest first; overrides the ranking in the file.
        #[arg(long, value_delimiter = ',')]
        ranking: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Runs a classification pipeline.
    Classify {
        #[arg(value_enum)]
        mode: Mode,
        /// A single case in the pipeline's numbering.
        #[arg(long)]
        case: Option<usize>,
        /// Worker threads; defaults to all cores.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Named operads of the catalog.
    Catalog {
        #[arg(required_unless_present = "check_all_duals")]
        name: Option<String>,
        #[arg(long, conflicts_with = "name")]
        check_all_duals: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Nonassoc,
    Assoc,
    OneOp,
}

enum CliError {
    Usage(String),
    Input(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Input(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::UnknownCase(_) | ClassifyError::NotSelfDualCase(_) => CliError::Usage(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<CatalogError> for CliError {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Unknown(_) => CliError::Usage(format!("{e}; known names: {}", catalog_names().join(", "))),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Dual { matrix, format } => cmd_dual(&matrix, format),
        Command::Groebner {
            ideal,
            order,
            ranking,
            format,
        } => cmd_groebner(&ideal, order, ranking, format),
        Command::Classify {
            mode,
            case,
            jobs,
            format,
        } => cmd_classify(mode, case, jobs, format),
        Command::Catalog { name, check_all_duals } => cmd_catalog(name.as_deref(), check_all_duals),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn space_json(m: &PolyMatrix<Rational>) -> serde_json::Value {
    let mut v = serde_json::to_value(MatrixFile::from_matrix(m)).expect("matrix file serializes");
    v["basisLabels"] = json!(basis_labels());
    v
}

fn cmd_dual(path: &Path, format: Format) -> Result<String, CliError> {
    let r: PolyMatrix<Rational> = parse_matrix_json(&read(path)?).map_err(input)?;
    let dual = if r.is_constant() {
        let space = QuadraticSpace::canonical(r.clone()).map_err(input)?;
        loday_dual(&space).map_err(input)?.matrix().clone()
    } else {
        QuadraticSpace::new(r.clone()).map_err(input)?;
        loday_dual_raw(&r).map_err(input)?
    };
    let (rank, dual_rank) = (8 - dual.nrows(), dual.nrows());
    Ok(match format {
        Format::Json => {
            let v = json!({ "rank": rank, "dualRank": dual_rank, "dual": space_json(&dual) });
            serde_json::to_string_pretty(&v).expect("value serializes") + "\n"
        }
        Format::Text => {
            let mut s = format!("rank {rank}, dual rank {dual_rank}\ncolumns: {}\n", basis_labels().join(", "));
            s.push_str(&format_matrix_text(&dual));
            s
        }
    })
}

fn cmd_groebner(
    path: &Path,
    order: Option<OrderKind>,
    ranking: Option<Vec<String>>,
    format: Format,
) -> Result<String, CliError> {
    let mut file = IdealFile::parse(&read(path)?).map_err(input)?;
    if let Some(o) = order {
        file.order = o;
    }
    if ranking.is_some() {
        file.ranking = ranking;
    }
    let ord = file.order().map_err(input)?;
    let ideal = file.ideal::<Rational>().map_err(input)?;
    let gb = buchberger_staged(&ideal, &ord);
    let report = GroebnerReport::new(&gb);
    if format == Format::Json {
        return Ok(serde_json::to_string_pretty(&report).expect("report serializes") + "\n");
    }
    let fmt = |p: &selfdual::Poly| format_polynomial(p, &ord);
    let mut s = String::new();
    writeln!(s, "order: {} with {}", ord.kind(), ord.ranking_names(gb.vars()).join(" < ")).unwrap();
    writeln!(s, "size: {}", gb.len()).unwrap();
    for (k, p) in gb.basis().iter().enumerate() {
        writeln!(s, "  g{}: {}", k + 1, fmt(p)).unwrap();
    }
    if let Some(g) = gb.greatest() {
        writeln!(s, "greatest: {}", fmt(g)).unwrap();
    }
    if let Some(g) = gb.greatest_lex() {
        writeln!(s, "greatest (lex): {}", fmt(&g)).unwrap();
    }
    writeln!(s, "stage  before  eliminated  surviving  new").unwrap();
    for t in gb.trace() {
        writeln!(
            s,
            "{:>5}  {:>6}  {:>10}  {:>9}  {:>3}",
            t.stage, t.elements_before_self_reduce, t.eliminated_by_self_reduce, t.surviving_generators, t.nonzero_s_polynomials
        )
        .unwrap();
    }
    Ok(s)
}

fn run_classify(mode: Mode, case: Option<usize>, cfg: &GbConfig) -> Result<Vec<CaseReport>, ClassifyError> {
    match (mode, case) {
        (Mode::Nonassoc, Some(c)) => Ok(vec![nonassoc_case(c, cfg)?]),
        (Mode::Nonassoc, None) => nonassoc_all(cfg),
        (Mode::Assoc, Some(c)) => Ok(vec![assoc::assoc_case(c, cfg)?]),
        (Mode::Assoc, None) => assoc::assoc_all(cfg),
        (Mode::OneOp, _) => unreachable!("handled separately"),
    }
}

fn cmd_classify(mode: Mode, case: Option<usize>, jobs: Option<usize>, format: Format) -> Result<String, CliError> {
    if mode == Mode::OneOp {
        if case.is_some() {
            return Err(CliError::Usage("one-op has no case numbers".into()));
        }
        return one_op(format);
    }
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(k) = jobs {
        if k == 0 {
            return Err(CliError::Usage("--jobs must be positive".into()));
        }
        pool = pool.num_threads(k);
    }
    let pool = pool.build().map_err(|e| CliError::Internal(e.to_string()))?;
    let cfg = GbConfig::default();
    let reports = pool.install(|| run_classify(mode, case, &cfg))?;
    let pipeline = if mode == Mode::Assoc { Pipeline::Assoc } else { Pipeline::Nonassoc };
    let summary = ClassificationSummary::new(pipeline, &cfg, &reports);
    Ok(match format {
        Format::Json => summary.to_json() + "\n",
        Format::Text => classify_table(&summary),
    })
}

fn classify_table(summary: &ClassificationSummary) -> String {
    let mut s = String::new();
    writeln!(s, "configuration: {}", summary.configuration).unwrap();
    writeln!(
        s,
        "{:>4}  {:>3}  {:<7}  {:>6}  {:<21}  {:>4}  {:<9}  families",
        "case", "all", "pivots", "params", "verdict", "|GB|", "signature"
    )
    .unwrap();
    for c in &summary.cases {
        let number = match summary.pipeline {
            Pipeline::Nonassoc => contains_one_number(&c.pivots),
            Pipeline::Assoc => Some(c.case_id),
        };
        let pivots: Vec<String> = c.pivots.iter().map(usize::to_string).collect();
        let signature = match (c.signature_verified, c.signature_inferred) {
            (Some(true), false) => "verified",
            (Some(true), true) => "verified*",
            (Some(false), _) => "FAILED",
            (None, _) => "-",
        };
        let families: Vec<String> = c
            .families
            .iter()
            .map(|f| format!("{} {}", f.name, if f.verified && f.dual_fixed { "ok" } else { "FAILED" }))
            .collect();
        writeln!(
            s,
            "{:>4}  {:>3}  {:<7}  {:>6}  {:<21}  {:>4}  {:<9}  {}",
            number.map_or("-".to_string(), |n| n.to_string()),
            c.all_index,
            pivots.join(","),
            c.parameter_count,
            c.verdict.as_str(),
            c.gb_size.map_or("-".to_string(), |n| n.to_string()),
            signature,
            if families.is_empty() { "-".to_string() } else { families.join("; ") }
        )
        .unwrap();
    }
    let counts: Vec<String> = summary.counts.iter().map(|(v, n)| format!("{} {n}", v.as_str())).collect();
    writeln!(s, "totals: {}", counts.join(", ")).unwrap();
    if summary.cases.iter().any(|c| c.signature_inferred) {
        writeln!(s, "* signature inferred from the decomposition rule").unwrap();
    }
    s
}

fn one_op(format: Format) -> Result<String, CliError> {
    let sols = one_operation_classification()?;
    Ok(match format {
        Format::Json => {
            let v: Vec<serde_json::Value> = sols
                .iter()
                .map(|x| json!({ "a": x.a.to_string(), "b": x.b.to_string(), "unital": x.unital, "name": x.name }))
                .collect();
            serde_json::to_string_pretty(&v).expect("value serializes") + "\n"
        }
        Format::Text => {
            let mut s = String::from("relation (x1 x2) x3 + b x1 (x2 x3)\n");
            for x in &sols {
                let tag = if x.unital { "unital" } else { "not unital" };
                writeln!(s, "  a = {}, b = {:>2}: {} ({tag})", x.a, x.b, x.name).unwrap();
            }
            s
        }
    })
}

fn cmd_catalog(name: Option<&str>, check_all: bool) -> Result<String, CliError> {
    let mut s = String::new();
    if check_all {
        let mut failed = Vec::new();
        for &n in catalog_names() {
            let e = catalog::<Rational>(n)?;
            let dual = e.expected_dual.expect("catalog entries name their dual");
            let ok = check_dual_pair::<Rational>(n, dual)?;
            writeln!(s, "{n:<24} -> {dual:<24} {}", if ok { "ok" } else { "MISMATCH" }).unwrap();
            if !ok {
                failed.push(n);
            }
        }
        if !failed.is_empty() {
            return Err(CliError::Internal(format!("{s}dual mismatch for {}", failed.join(", "))));
        }
        return Ok(s);
    }
    let name = name.ok_or_else(|| CliError::Usage("a catalog name or --check-all-duals is required".into()))?;
    let e = catalog::<Rational>(name)?;
    let m = e.relations.matrix();
    writeln!(s, "{}: rank {}", e.name, e.relations.rank()).unwrap();
    writeln!(s, "columns: {}", basis_labels().join(", ")).unwrap();
    let ord = selfdual::poly::MonomialOrder::new(OrderKind::Grevlex, m.vars());
    for (i, line) in format_matrix_text(m).lines().enumerate() {
        let sum = coefficient_sum(m.row(i)).map_or("0".to_string(), |p| format_polynomial(&p, &ord));
        writeln!(s, "{line}    (row sum {sum})").unwrap();
    }
    if let Some(d) = e.expected_dual {
        let ok = check_dual_pair::<Rational>(e.name, d)?;
        let what = if d == e.name { "self-dual".to_string() } else { format!("dual = {d}") };
        writeln!(s, "{what} {}", if ok { "verified" } else { "NOT verified" }).unwrap();
    }
    Ok(s)
}
