//! `zdg`: build finite semirings, compute and classify their zero-divisor
//! graphs, enumerate small commutative semirings, and run the structural
//! check suite.
//!
//! Exit codes: 0 success, 1 check failure (a failed suite or a negative
//! `iso`), 2 usage or input error.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use zdg_core::constructions::{self, Construction};
use zdg_core::enumerate::{enumerate_semirings, EnumFilter};
use zdg_core::harness::{self, TheoremId, Verdict};
use zdg_core::shapes::classify;
use zdg_core::zdg::{self, to_dot};
use zdg_core::{FiniteSemiring, SemiringTables};

#[derive(Parser)]
#[command(
    name = "zdg",
    version,
    about = "Finite semirings as operation tables: zero-divisor graphs, family classification, census, and the structural check suite"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named construction or basic algebra; prints a summary and
    /// the classified vs expected shape
    Build(BuildArgs),
    /// Print the zero-divisor graph of an algebra file (metrics or DOT)
    Graph {
        /// Algebra JSON file
        file: PathBuf,
        /// Emit DOT text instead of metrics
        #[arg(long)]
        dot: bool,
        /// Emit the metric summary (default)
        #[arg(long)]
        metrics: bool,
    },
    /// Classify the zero-divisor graph of an algebra file
    Classify {
        /// Algebra JSON file
        file: PathBuf,
    },
    /// Enumerate small commutative semirings with identity, one JSON line
    /// per isomorphism class, followed by a summary line
    Census {
        /// Maximum order (hard limit 5)
        #[arg(long)]
        order: usize,
        /// Require commutative multiplication (pass false only for order <= 3)
        #[arg(long, default_value_t = true)]
        commutative: std::primitive::bool,
        /// Keep only additively cancellative algebras
        #[arg(long)]
        cancellative: bool,
        /// Keep only entire (zero-divisor-free) algebras
        #[arg(long)]
        entire: bool,
        /// Worker threads (default: available parallelism)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Run theorem checks over a corpus; nonzero exit iff any check fails
    Harness {
        /// Corpus: census, constructed, rings, or all
        #[arg(long, default_value = "all")]
        corpus: String,
        /// Restrict to specific theorem ids (repeatable); default all 23
        #[arg(long = "theorem")]
        theorems: Vec<String>,
        /// Emit the full JSON report
        #[arg(long)]
        json: bool,
        /// Emit a per-check table (default)
        #[arg(long)]
        table: bool,
        /// Census max order when the corpus includes the census
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        /// Worker threads (default: available parallelism)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Decide isomorphism of two algebra files; exit 1 when not isomorphic
    Iso { left: PathBuf, right: PathBuf },
}

#[derive(Args)]
struct BuildArgs {
    /// Construction id: ex33, ex34, ex35, ex36, thm42, ex62, ex63, ex73,
    /// ex78, ring-corpus, or a basic builder: zn, gf, chain, t2zn
    id: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    r1: Option<usize>,
    #[arg(long)]
    r2: Option<usize>,
    #[arg(long)]
    r3: Option<usize>,
    /// Write the algebra JSON here (a directory for ring-corpus)
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::Build(args) => build(args),
        Command::Graph { file, dot, metrics } => graph_cmd(&file, dot, metrics),
        Command::Classify { file } => classify_cmd(&file),
        Command::Census {
            order,
            commutative,
            cancellative,
            entire,
            jobs,
        } => with_pool(jobs, || {
            census_cmd(order, commutative, cancellative, entire)
        }),
        Command::Harness {
            corpus,
            theorems,
            json,
            table,
            max_order,
            jobs,
        } => with_pool(jobs, || {
            harness_cmd(&corpus, &theorems, json, table, max_order)
        }),
        Command::Iso { left, right } => iso_cmd(&left, &right),
    }
}

fn with_pool(jobs: Option<usize>, f: impl FnOnce() -> Result<ExitCode> + Send) -> Result<ExitCode> {
    match jobs {
        None => f(),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .context("building worker pool")?;
            pool.install(f)
        }
    }
}

fn load(path: &Path) -> Result<FiniteSemiring> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let tables =
        SemiringTables::from_json(&text).with_context(|| format!("parsing {}", path.display()))?;
    FiniteSemiring::new(tables).with_context(|| format!("validating {}", path.display()))
}

fn require(opt: Option<usize>, flag: &str, id: &str) -> Result<usize> {
    opt.ok_or_else(|| anyhow!("construction '{id}' requires --{flag} <N>"))
}

fn build(args: BuildArgs) -> Result<ExitCode> {
    let id = args.id.as_str();
    if id == "ring-corpus" {
        let dir = args
            .output
            .ok_or_else(|| anyhow!("ring-corpus requires -o <DIR>"))?;
        std::fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
        for c in constructions::ring_corpus() {
            let file = dir.join(format!("{}.json", sanitize(c.algebra.name())));
            std::fs::write(&file, c.algebra.tables().to_json())
                .with_context(|| format!("writing {}", file.display()))?;
            println!("{} -> {}", c.algebra.name(), file.display());
        }
        return Ok(ExitCode::SUCCESS);
    }

    let built: Built = match id {
        "ex33" => construction(constructions::ex33_bipartite(
            require(args.m, "m", id)?,
            require(args.n, "n", id)?,
        )),
        "ex34" => construction(constructions::ex34_complete(require(args.n, "n", id)?)?),
        "ex35" => construction(constructions::ex35_star(require(args.n, "n", id)?)?),
        "ex36" => construction(constructions::ex36_two_star(
            require(args.n, "n", id)?,
            require(args.m, "m", id)?,
        )?),
        "thm42" => construction(constructions::thm42_multipartite(
            require(args.n, "n", id)?,
            require(args.k, "k", id)?,
        )?),
        "ex62" => construction(constructions::ex62_bar_k(
            require(args.n, "n", id)?,
            require(args.m, "m", id)?,
        )?),
        "ex63" => construction(constructions::ex63_bar_k_n2(require(args.n, "n", id)?)?),
        "ex73" => construction(constructions::ex73_delta_k(
            require(args.r1, "r1", id)?,
            require(args.r2, "r2", id)?,
            require(args.r3, "r3", id)?,
        )?),
        "ex78" => construction(constructions::ex78_delta_k_22_210()?),
        "zn" => plain(zdg_core::modular_ring(require(args.n, "n", id)?)),
        "gf" => plain(zdg_core::galois_field(require(args.q, "q", id)?)),
        "chain" => plain(zdg_core::chain(require(args.k, "k", id)?)),
        "t2zn" => plain(zdg_core::t2(&zdg_core::modular_ring(require(
            args.n, "n", id,
        )?))),
        other => bail!("unknown construction id '{other}'"),
    };

    let s = &built.algebra;
    let g = zdg_core::graph(s);
    let shape = classify(&g).map(|sh| sh.tag.to_string());
    println!(
        "{}: order {}, {} zero-divisor vertices, {} edges",
        s.name(),
        s.order(),
        g.n(),
        g.edge_count()
    );
    match (&built.expected, shape) {
        (Some(exp), Ok(cls)) => println!("expected {} / classified {cls}", exp),
        (None, Ok(cls)) => println!("classified {cls}"),
        (_, Err(e)) => println!("classification failed: {e}"),
    }
    if let Some(path) = args.output {
        std::fs::write(&path, s.tables().to_json())
            .with_context(|| format!("writing {}", path.display()))?;
        println!("wrote {}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

struct Built {
    algebra: FiniteSemiring,
    expected: Option<String>,
}

fn construction(c: Construction) -> Built {
    Built {
        expected: Some(c.expected.canonical().to_string()),
        algebra: c.algebra,
    }
}

fn plain(algebra: FiniteSemiring) -> Built {
    Built {
        algebra,
        expected: None,
    }
}

fn sanitize(name: &str) -> String {
    name.chars()
        .map(|c| match c {
            '/' | '\\' | ' ' | '(' | ')' | '[' | ']' | ',' | '^' => '_',
            c => c,
        })
        .collect()
}

fn graph_cmd(file: &Path, dot: bool, metrics: bool) -> Result<ExitCode> {
    let s = load(file)?;
    let g = zdg_core::graph(&s);
    if dot && metrics {
        bail!("choose one of --dot or --metrics");
    }
    if dot {
        print!("{}", to_dot(&g));
        return Ok(ExitCode::SUCCESS);
    }
    println!("source: {}", g.source());
    println!("vertices: {}", g.n());
    println!("edges: {}", g.edge_count());
    println!("connected: {}", zdg::is_connected(&g));
    println!("diameter: {}", zdg::diameter(&g));
    println!("girth: {}", zdg::girth(&g));
    println!("triangles: {}", zdg::triangle_count(&g));
    match classify(&g) {
        Ok(shape) => println!("shape: {}", shape.tag),
        Err(e) => println!("shape: unclassifiable ({e})"),
    }
    Ok(ExitCode::SUCCESS)
}

fn classify_cmd(file: &Path) -> Result<ExitCode> {
    let s = load(file)?;
    let g = zdg_core::graph(&s);
    let shape = classify(&g).map_err(|e| anyhow!("{e}"))?;
    println!("{}", shape.tag);
    for (v, role) in &shape.roles {
        println!("  {} -> {role}", s.label(*v));
    }
    Ok(ExitCode::SUCCESS)
}

fn census_cmd(
    order: usize,
    commutative: bool,
    cancellative: bool,
    entire: bool,
) -> Result<ExitCode> {
    if order > zdg_core::enumerate::MAX_ENUM_ORDER {
        bail!(
            "census order {order} exceeds the hard limit {}",
            zdg_core::enumerate::MAX_ENUM_ORDER
        );
    }
    if !commutative && order > zdg_core::enumerate::MAX_NONCOMMUTATIVE_ORDER {
        bail!(
            "noncommutative census is limited to order {}",
            zdg_core::enumerate::MAX_NONCOMMUTATIVE_ORDER
        );
    }
    let filter = EnumFilter {
        commutative,
        require_cancellative: cancellative.then_some(true),
        require_entire: entire.then_some(true),
        max_order: order,
    };
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    let mut shapes: BTreeMap<String, usize> = BTreeMap::new();
    for s in enumerate_semirings(&filter) {
        *counts.entry(s.order()).or_insert(0) += 1;
        let g = zdg_core::graph(&s);
        let tag = classify(&g)
            .map(|sh| sh.tag.to_string())
            .unwrap_or_else(|e| format!("({e})"));
        *shapes.entry(tag).or_insert(0) += 1;
        println!("{}", s.tables().to_json());
    }
    let summary = serde_json::json!({
        "summary": { "count_per_order": counts, "shape_histogram": shapes }
    });
    println!("{summary}");
    Ok(ExitCode::SUCCESS)
}

fn harness_cmd(
    corpus: &str,
    theorems: &[String],
    json: bool,
    table: bool,
    max_order: usize,
) -> Result<ExitCode> {
    if json && table {
        bail!("choose one of --json or --table");
    }
    let corpus = match corpus {
        "census" => harness::census_corpus(max_order),
        "constructed" => harness::constructed_corpus(),
        "rings" => harness::rings_corpus(),
        "all" => {
            let mut c = harness::census_corpus(max_order);
            c.extend(harness::constructed_corpus());
            c.extend(harness::rings_corpus());
            c
        }
        other => bail!("unknown corpus '{other}' (census|constructed|rings|all)"),
    };
    let ids: Vec<TheoremId> = if theorems.is_empty() {
        TheoremId::ALL.to_vec()
    } else {
        theorems
            .iter()
            .map(|t| t.parse::<TheoremId>().map_err(|e| anyhow!(e)))
            .collect::<Result<_>>()?
    };
    let result = harness::run_suite(corpus, &ids);
    if json {
        println!("{}", serde_json::to_string_pretty(&result)?);
    } else {
        for r in &result.reports {
            match &r.verdict {
                Verdict::Pass => println!("pass  {:9} {}", r.theorem.to_string(), r.algebra),
                Verdict::Fail { witness } => {
                    println!("FAIL  {:9} {}: {witness}", r.theorem.to_string(), r.algebra)
                }
                Verdict::NotApplicable { .. } => {}
            }
        }
        let s = &result.summary;
        println!(
            "checked {} algebras: {} pass, {} fail, {} not applicable",
            s.algebras, s.pass, s.fail, s.not_applicable
        );
        for (id, count) in &s.applicable_per_theorem {
            println!("  {id}: {count} applicable");
        }
        if !s.vacuous_theorems.is_empty() {
            println!("vacuous (no applicable member): {:?}", s.vacuous_theorems);
        }
        println!(
            "C7_6 non-ring applicable members: {}",
            s.c7_6_non_ring_applicable
        );
    }
    Ok(if result.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn iso_cmd(left: &Path, right: &Path) -> Result<ExitCode> {
    let a = load(left)?;
    let b = load(right)?;
    match zdg_core::find_isomorphism(&a, &b) {
        Ok(Some(w)) => {
            println!("isomorphic");
            for (x, y) in w.mapping.iter().enumerate() {
                println!("  {} -> {}", a.label(zdg_core::ElementId(x)), b.label(*y));
            }
            Ok(ExitCode::SUCCESS)
        }
        Ok(None) => {
            println!("not isomorphic");
            Ok(ExitCode::from(1))
        }
        Err(e) => {
            println!("not isomorphic: {e}");
            Ok(ExitCode::from(1))
        }
    }
}
