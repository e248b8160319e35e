use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use magilab::analysis::{
    caterpillar_suite, closing_claims_suite, constant_form_check, double_star_suite, format_table, lobster_suite,
    TheoremReport,
};
use magilab::constructions::{
    caterpillar_beta_labeling, caterpillar_super_labeling, double_star_consecutive, dual, lambda_star, to_graceful,
    to_super_edge_magic, DoubleStarVariant,
};
use magilab::graph::{build_caterpillar, build_double_star, Family};
use magilab::io::{to_dot, vertex_labeling_to_dot, Bundle, GraphDocument, VertexBundle};
use magilab::labeling::classify;
use magilab::search::{feasible_b_set_with, find_edge_magic, SearchQuery};
use magilab::{CaterpillarSpec, Error, FamilyHandle, Label, TotalLabeling};

#[derive(Parser)]
#[command(version, about = "Edge-magic and b-edge consecutive labelings of small graphs")]
struct Cli {
    /// Output format; suites default to a table, everything else to JSON.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Build an explicit consecutive magic labeling.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Map a labeling bundle to another labeling.
    Transform {
        kind: TransformKind,
        /// Bundle file, or `-` for standard input.
        bundle: String,
    },
    /// Classify a labeling: a bundle, or a graph file plus a labeling file.
    Verify { input: String, labeling: Option<String> },
    /// Exhaustive search on a graph file.
    Search {
        #[arg(long)]
        graph: String,
        /// A consecutive index, or `all` for the feasible set. Omit to search
        /// every edge-magic labeling.
        #[arg(long)]
        b: Option<BChoice>,
        /// Only this magic constant.
        #[arg(long)]
        k: Option<Label>,
        #[arg(long)]
        limit: Option<usize>,
        /// Disable neighbor-block pruning.
        #[arg(long)]
        no_prune: bool,
    },
    /// Arithmetic checks on magic constants.
    Analyze {
        #[command(subcommand)]
        kind: AnalyzeKind,
    },
    /// Run a verification suite.
    Suite {
        kind: SuiteKind,
        /// Largest caterpillar for the caterpillar suite.
        #[arg(long, default_value_t = 7)]
        max_vertices: usize,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    Caterpillar {
        #[arg(long)]
        spine: CaterpillarSpec,
    },
    DoubleStar {
        m: usize,
        n: usize,
    },
    Lobster {
        #[arg(short)]
        p: usize,
    },
    Cycle {
        #[arg(short)]
        l: usize,
    },
    Kmn {
        m: usize,
        n: usize,
    },
    Path {
        #[arg(short)]
        n: usize,
    },
    Star {
        #[arg(short)]
        p: usize,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// The β-edge consecutive labeling of a caterpillar.
    CaterpillarBeta {
        #[arg(long)]
        spine: CaterpillarSpec,
    },
    /// An (m+1)-edge consecutive labeling of a double star.
    DoubleStar {
        m: usize,
        n: usize,
        #[arg(long, default_value_t = 1)]
        variant: u8,
    },
    /// The super edge-magic labeling of a caterpillar.
    CaterpillarSuper {
        #[arg(long)]
        spine: CaterpillarSpec,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformKind {
    Dual,
    LambdaStar,
    Graceful,
    Super,
}

#[derive(Subcommand)]
enum AnalyzeKind {
    /// Check k = gcd(m, n)·t + 6 for a nonnegative integer t.
    ConstantForm { m: u64, n: u64, k: u64 },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteKind {
    Closing,
    Caterpillar,
    Lobster,
    DoubleStar,
}

#[derive(Clone, Copy)]
enum BChoice {
    All,
    Index(Label),
}

impl std::str::FromStr for BChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            return Ok(BChoice::All);
        }
        s.parse()
            .map(BChoice::Index)
            .map_err(|_| format!("expected an integer or `all`, got {s:?}"))
    }
}

/// How a command ended.
enum Failure {
    /// Bad arguments or unreadable input.
    Usage(String),
    /// The search would exceed its budget.
    Refused(String),
    /// A labeling or claim did not verify.
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } | Error::TooLarge { .. } => Failure::Refused(e.to_string()),
            Error::NotMagic | Error::NotConsecutive | Error::InadmissibleIndex { .. } | Error::Precondition(_) => {
                Failure::Failed(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    let read = if path == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

fn parse<T: serde::de::DeserializeOwned>(path: &str) -> Result<T, Failure> {
    serde_json::from_str(&read_input(path)?).map_err(|e| Failure::Usage(format!("malformed {path}: {e}")))
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn unsupported(format: Format, what: &str) -> Failure {
    let name = match format {
        Format::Json => "json",
        Format::Dot => "dot",
        Format::Table => "table",
    };
    Failure::Usage(format!("--format {name} is not available for {what}"))
}

fn emit_graph(doc: &GraphDocument, format: Format) -> Outcome {
    match format {
        Format::Json => print_json(doc),
        Format::Dot => print!("{}", to_dot(&doc.graph, None, &doc.describe())),
        Format::Table => return Err(unsupported(format, "graphs")),
    }
    Ok(true)
}

fn emit_bundle(bundle: &Bundle, format: Format) -> Outcome {
    match format {
        Format::Json => print_json(bundle),
        Format::Dot => print!(
            "{}",
            to_dot(&bundle.graph.graph, Some(&bundle.labeling), &bundle.graph.describe())
        ),
        Format::Table => return Err(unsupported(format, "labelings")),
    }
    Ok(true)
}

fn generate(family: GenFamily) -> Result<FamilyHandle, Failure> {
    let family = match family {
        GenFamily::Caterpillar { spine } => Family::Caterpillar { spine },
        GenFamily::DoubleStar { m, n } => Family::DoubleStar { m, n },
        GenFamily::Lobster { p } => Family::Lobster { p },
        GenFamily::Cycle { l } => Family::Cycle { length: l },
        GenFamily::Kmn { m, n } => Family::CompleteBipartite { m, n },
        GenFamily::Path { n } => Family::Path { n },
        GenFamily::Star { p } => Family::Star { p },
    };
    Ok(family.build()?)
}

fn construct(kind: ConstructKind) -> Result<Bundle, Failure> {
    let (handle, labeling) = match kind {
        ConstructKind::CaterpillarBeta { spine } => (build_caterpillar(&spine), caterpillar_beta_labeling(&spine)),
        ConstructKind::CaterpillarSuper { spine } => (build_caterpillar(&spine), caterpillar_super_labeling(&spine)),
        ConstructKind::DoubleStar { m, n, variant } => {
            let variant = DoubleStarVariant::try_from(variant)?;
            (build_double_star(m, n)?, double_star_consecutive(m, n, variant)?)
        }
    };
    Ok(Bundle {
        graph: GraphDocument::from(&handle),
        labeling,
    })
}

fn transform(kind: TransformKind, path: &str, format: Format) -> Outcome {
    let bundle: Bundle = parse(path)?;
    let handle = bundle.graph.handle()?;
    let bipartition = handle.as_ref().and_then(|h| h.bipartition.as_ref());
    let g = &bundle.graph.graph;
    let labeling = match kind {
        TransformKind::Dual => dual(g, &bundle.labeling)?,
        TransformKind::LambdaStar => lambda_star(g, bipartition, &bundle.labeling)?,
        TransformKind::Super => to_super_edge_magic(g, bipartition, &bundle.labeling)?,
        TransformKind::Graceful => {
            let vertex_labeling = to_graceful(g, bipartition, &bundle.labeling)?;
            match format {
                Format::Json => print_json(&VertexBundle {
                    graph: bundle.graph.clone(),
                    vertex_labeling,
                }),
                Format::Dot => print!(
                    "{}",
                    vertex_labeling_to_dot(g, &vertex_labeling, &bundle.graph.describe())
                ),
                Format::Table => return Err(unsupported(format, "labelings")),
            }
            return Ok(true);
        }
    };
    emit_bundle(
        &Bundle {
            graph: bundle.graph,
            labeling,
        },
        format,
    )
}

fn verify(input: &str, labeling: Option<&str>, format: Format) -> Outcome {
    let bundle = match labeling {
        None => parse::<Bundle>(input)?,
        Some(path) => Bundle {
            graph: parse(input)?,
            labeling: parse::<TotalLabeling>(path)?,
        },
    };
    let classification = classify(&bundle.graph.graph, &bundle.labeling)?;
    match format {
        Format::Json => print_json(&classification),
        Format::Table => {
            let show = |v: Option<Label>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
            println!("k      {}", show(classification.magic_constant));
            println!("b      {}", show(classification.consecutive_index));
            println!("super  {}", classification.is_super);
            if let Some(side) = classification.small_side {
                println!("side   {side}");
            }
        }
        Format::Dot => return emit_bundle(&bundle, format),
    }
    Ok(classification.magic_constant.is_some())
}

#[derive(Serialize)]
struct FeasibleReport {
    graph: String,
    feasible_b: BTreeSet<Label>,
}

fn search(
    path: &str,
    b: Option<BChoice>,
    k: Option<Label>,
    limit: Option<usize>,
    no_prune: bool,
    format: Format,
) -> Outcome {
    let doc: GraphDocument = parse(path)?;
    let g = &doc.graph;
    let mut query = SearchQuery::new(g).pruning(!no_prune);
    query.magic_constant = k;
    query.limit = limit;
    match b {
        Some(BChoice::All) => {
            if k.is_some() || limit.is_some() {
                return Err(Failure::Usage("--b all takes neither --k nor --limit".into()));
            }
            let feasible_b = feasible_b_set_with(&query)?;
            match format {
                Format::Json => print_json(&FeasibleReport {
                    graph: doc.describe(),
                    feasible_b,
                }),
                Format::Table => {
                    let items: Vec<String> = feasible_b.iter().map(Label::to_string).collect();
                    println!("{}  {{{}}}", doc.describe(), items.join(", "));
                }
                Format::Dot => return Err(unsupported(format, "feasible sets")),
            }
            return Ok(true);
        }
        Some(BChoice::Index(b)) => query.b = Some(b),
        None => {}
    }
    let report = find_edge_magic(&query)?;
    match format {
        Format::Json => print_json(&report),
        Format::Dot => {
            for (i, l) in report.labelings.iter().enumerate() {
                print!("{}", to_dot(g, Some(l), &format!("{} #{}", doc.describe(), i + 1)));
            }
        }
        Format::Table => {
            let constants: Vec<String> = report.constants_found.iter().map(Label::to_string).collect();
            println!("labelings  {}", report.labelings.len());
            println!("constants  {{{}}}", constants.join(", "));
            println!("exhausted  {}", report.exhausted);
            for l in &report.labelings {
                println!("{:?} / {:?}", l.vertex_labels(), l.edge_labels());
            }
        }
    }
    Ok(true)
}

fn run_suite(kind: SuiteKind, max_vertices: usize, format: Format) -> Outcome {
    let reports: Vec<TheoremReport> = match kind {
        SuiteKind::Closing => closing_claims_suite()?,
        SuiteKind::Caterpillar => caterpillar_suite(max_vertices)?,
        SuiteKind::Lobster => lobster_suite()?,
        SuiteKind::DoubleStar => double_star_suite(&[(2, 2)])?,
    };
    match format {
        Format::Json => print_json(&reports),
        Format::Table => print!("{}", format_table(&reports)),
        Format::Dot => return Err(unsupported(format, "suites")),
    }
    Ok(reports.iter().all(TheoremReport::passed))
}

fn run(cli: Cli) -> Outcome {
    let json_default = cli.format.unwrap_or(Format::Json);
    match cli.command {
        Command::Gen { family } => emit_graph(&GraphDocument::from(&generate(family)?), json_default),
        Command::Construct { kind } => emit_bundle(&construct(kind)?, json_default),
        Command::Transform { kind, bundle } => transform(kind, &bundle, json_default),
        Command::Verify { input, labeling } => verify(&input, labeling.as_deref(), json_default),
        Command::Search {
            graph,
            b,
            k,
            limit,
            no_prune,
        } => search(&graph, b, k, limit, no_prune, json_default),
        Command::Analyze {
            kind: AnalyzeKind::ConstantForm { m, n, k },
        } => {
            let witness = constant_form_check(m, n, k);
            match json_default {
                Format::Json => print_json(&witness),
                Format::Table => match witness.t {
                    Some(t) => println!("{k} = {}·{t} + 6", witness.d),
                    None => println!("{k} is not of the form {}·t + 6", witness.d),
                },
                Format::Dot => return Err(unsupported(json_default, "analyze")),
            }
            Ok(witness.holds())
        }
        Command::Suite { kind, max_vertices } => run_suite(kind, max_vertices, cli.format.unwrap_or(Format::Table)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Refused(msg)) => {
            eprintln!("search refused: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
