use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use perspectra::canon::{are_isomorphic, canonical_search};
use perspectra::classification::{
    census_kappa_n4, census_perm_n4, full_census, identify, Census, CensusEntry, CENSUS_SCHEMA_VERSION,
};
use perspectra::constructions::{
    catalog_axis, grassmannian, multiveblen, quasi_grassmannian, veronesian, zeta, CatalogName, Graph,
    SkewPerspectiveSpec,
};
use perspectra::embed::{embed_search, EmbedOutcome};
use perspectra::incidence::Configuration;
use perspectra::perm::{num_pairs, Permutation};
use perspectra::realization::{
    parametric_realization, parse_params, realization_from_json, realization_to_json, verify_realization,
    ParametricCase,
};
use perspectra::structure::{classify_pair_skew, free_complete_subgraphs, perspective_centers};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

/// `println!` that stops quietly when the reader goes away.
macro_rules! out {
    ($($t:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "perspectra", about = "Skew perspective configurations: build, analyze, classify, realize")]
#[command(disable_version_flag = true)]
struct Cli {
    /// Print JSON instead of plain-text tables.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for randomized helpers (point shuffling); never affects census output.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print the version and census schema version.
    #[arg(long)]
    version: bool,
    #[command(subcommand)]
    cmd: Option<Cmd>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a configuration and write it as JSON.
    Construct(ConstructArgs),
    /// Check the partial Steiner triple system axioms, and optionally a realization.
    Verify {
        input: PathBuf,
        /// Coordinates as `{label: [x, y, z]}`.
        #[arg(long)]
        realization: Option<PathBuf>,
    },
    /// Free complete graphs, skew classes and perspective centers.
    Analyze {
        input: PathBuf,
        /// Size of the free complete graphs to list (default n + 1).
        #[arg(long = "free-k")]
        free_k: Option<usize>,
        /// Classify the skew of every presentation.
        #[arg(long = "skew-class")]
        skew_class: bool,
        /// List every center from which the configuration is a skew perspective.
        #[arg(long)]
        centers: bool,
    },
    /// Decide isomorphism of two configurations.
    Iso {
        a: PathBuf,
        b: PathBuf,
        /// Print the point bijection.
        #[arg(long)]
        witness: bool,
    },
    /// Count automorphisms.
    Aut { input: PathBuf },
    /// Isomorphism classes of the skew perspectives on four indices.
    Census {
        #[arg(long, value_enum, default_value_t = FamilyArg::All)]
        family: FamilyArg,
        /// Write the entry array here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Look a 15-point configuration up in the census.
    Identify { input: PathBuf },
    /// Exact rational coordinates from the parametric systems.
    Realize {
        /// Optional configuration to label the coordinates by; must be isomorphic to the case.
        input: Option<PathBuf>,
        #[arg(long)]
        case: String,
        /// Comma-separated `name=value`, values may be `p/q`.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive search for a faithful embedding in PG(2, q).
    SearchPg {
        input: PathBuf,
        #[arg(long)]
        q: usize,
        /// Node budget, e.g. `1e9`.
        #[arg(long, default_value = "1e9")]
        budget: String,
    },
    /// Write a configuration in another format.
    Export {
        input: PathBuf,
        #[arg(long, default_value = "dot")]
        format: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Perm,
    Kappa,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Gras,
    Skew,
    Mveb,
    Veronese,
    Quasigras,
    Zeta,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Construction,
    /// Index set size (degree for `veronese`).
    #[arg(long)]
    n: Option<usize>,
    /// Permutation in cycle notation, e.g. `(1,2)(3,4)`.
    #[arg(long, default_value = "id")]
    skew: String,
    /// Compose the skew with the complement map (n = 4 only).
    #[arg(long)]
    kappa: bool,
    /// G, G*, W2, V4, V5, V6 or a configuration JSON file.
    #[arg(long, default_value = "G")]
    axis: String,
    /// Edges of the multiveblen graph, e.g. `1-2,2-3,3-4`.
    #[arg(long, default_value = "")]
    graph: String,
    /// Shuffle the points with `--seed`.
    #[arg(long)]
    shuffle: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<perspectra::Error> for Failure {
    fn from(e: perspectra::Error) -> Failure {
        Failure::Domain(e.to_string())
    }
}

type Out = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn load(path: &PathBuf) -> Result<Configuration, Failure> {
    let c = Configuration::from_json(&read(path)?)?;
    c.verified()?;
    Ok(c)
}

fn emit(output: &Option<PathBuf>, text: &str) -> Out {
    match output {
        Some(p) => fs::write(p, format!("{text}\n")).map_err(|e| Failure::Domain(format!("{}: {e}", p.display()))),
        None => {
            out!("{text}");
            Ok(())
        }
    }
}

fn print_json(v: &Value) {
    out!("{}", serde_json::to_string_pretty(v).expect("json values serialize"));
}

/// Index count `n` of a skew perspective with this many points.
fn skew_n(points: usize) -> Option<usize> {
    (3..=12).find(|&n| 1 + 2 * n + num_pairs(n) == points)
}

fn axis_of(name: &str, n: usize) -> Result<Configuration, Failure> {
    if name == "G" {
        return Ok(grassmannian(n)?);
    }
    if let Ok(c) = name.parse::<CatalogName>() {
        if n != 4 {
            return Err(usage(format!("catalog axis {name} needs --n 4")));
        }
        return Ok(catalog_axis(c));
    }
    load(&PathBuf::from(name))
}

fn parse_graph(s: &str, n: usize) -> Result<Graph, Failure> {
    let mut edges = Vec::new();
    for e in s.split(',').map(str::trim).filter(|e| !e.is_empty()) {
        let (a, b) = e.split_once('-').ok_or_else(|| usage(format!("edge {e:?} is not i-j")))?;
        let p = |x: &str| x.trim().parse::<usize>().ok().filter(|&v| (1..=n).contains(&v)).map(|v| v - 1);
        match (p(a), p(b)) {
            (Some(i), Some(j)) if i != j => edges.push((i, j)),
            _ => return Err(usage(format!("edge {e:?} out of range 1..={n}"))),
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

fn construct(a: &ConstructArgs, seed: u64) -> Out {
    let need_n = || a.n.ok_or_else(|| usage("--n is required for this family"));
    let config = match a.family {
        Construction::Gras => grassmannian(need_n()?)?,
        Construction::Quasigras => quasi_grassmannian(need_n()?)?,
        Construction::Veronese => veronesian(need_n()?)?,
        Construction::Zeta => SkewPerspectiveSpec::new(4, zeta(), &grassmannian(4)?)?.build(),
        Construction::Mveb => {
            let n = need_n()?;
            multiveblen(&parse_graph(&a.graph, n)?, &axis_of(&a.axis, n)?)?
        }
        Construction::Skew => {
            let n = need_n()?;
            let sigma = Permutation::parse(&a.skew, n)?;
            let axis = axis_of(&a.axis, n)?;
            let spec = if a.kappa {
                SkewPerspectiveSpec::kappa(&sigma, &axis)?
            } else {
                SkewPerspectiveSpec::induced(&sigma, &axis)?
            };
            spec.build()
        }
    };
    let config = if a.shuffle {
        let mut perm: Vec<usize> = (0..config.num_points()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        config.relabel(&perm)?
    } else {
        config
    };
    emit(&a.output, &config.to_json_pretty())
}

fn verify(input: &PathBuf, realization: &Option<PathBuf>, as_json: bool) -> Out {
    let c = Configuration::from_json(&read(input)?)?;
    let sig = c.verified()?;
    let mut report = json!({ "signature": sig.to_string(), "points": c.num_points(), "lines": c.lines().len() });
    if let Some(r) = realization {
        let pts = realization_from_json(&c, &read(r)?)?;
        let rz = verify_realization(&c, &pts)?;
        report["lines_hold"] = json!(rz.lines_hold);
        report["faithful"] = json!(rz.faithful);
        report["failure"] = json!(rz.failure.map(|f| f.to_string()));
    }
    if as_json {
        print_json(&report);
    } else {
        out!("signature  {sig}");
        if let Some(f) = report.get("faithful") {
            out!("lines hold {}", report["lines_hold"]);
            out!("faithful   {f}");
            if let Some(why) = report["failure"].as_str() {
                out!("failure    {why}");
            }
        }
    }
    Ok(())
}

fn analyze(input: &PathBuf, free_k: Option<usize>, skew_class: bool, centers: bool, as_json: bool) -> Out {
    let c = load(input)?;
    let n = skew_n(c.num_points());
    let m = match (free_k, n) {
        (Some(m), _) => m,
        (None, Some(n)) => n + 1,
        (None, None) => return Err(usage("--free-k is required when the point count is not 1 + 2n + C(n,2)")),
    };
    let free = free_complete_subgraphs(&c, m);
    let label_set = |v: &[usize]| v.iter().map(|&x| c.label(x).to_string()).collect::<Vec<_>>();
    let graphs: Vec<Vec<String>> = free.graphs.iter().map(|g| label_set(&g.vertices)).collect();
    let mut presentations = Vec::new();
    if skew_class || centers {
        let n = n.ok_or_else(|| Failure::Domain("point count does not match a skew perspective".into()))?;
        for p in perspective_centers(&c, n) {
            let delta = &p.presentation.spec.delta;
            presentations.push(json!({
                "center": c.label(p.q).to_string(),
                "g1": label_set(&p.g1),
                "g2": label_set(&p.g2),
                "skew": delta.to_string(),
                "skew_class": skew_class.then(|| classify_pair_skew(delta).to_string()),
            }));
        }
    }
    if as_json {
        print_json(&json!({ "free_k": m, "free_graphs": graphs, "presentations": presentations }));
        return Ok(());
    }
    out!("free K{m}: {}", graphs.len());
    for g in &graphs {
        out!("  {{{}}}", g.join(", "));
    }
    if !presentations.is_empty() {
        out!("{:<10} {:<24} {}", "center", "skew", if skew_class { "class" } else { "" });
        for p in &presentations {
            out!(
                "{:<10} {:<24} {}",
                p["center"].as_str().unwrap_or(""),
                p["skew"].as_str().unwrap_or(""),
                p["skew_class"].as_str().unwrap_or("")
            );
        }
    }
    Ok(())
}

fn iso(a: &PathBuf, b: &PathBuf, witness: bool, as_json: bool) -> Out {
    let (ca, cb) = (load(a)?, load(b)?);
    let map = are_isomorphic(&ca, &cb)?;
    let pairs: Option<Vec<(String, String)>> = map
        .as_ref()
        .map(|m| m.iter().enumerate().map(|(x, &y)| (ca.label(x).to_string(), cb.label(y).to_string())).collect());
    if as_json {
        let w = if witness {
            pairs.map(|p| json!(p.into_iter().map(|(x, y)| (x, json!(y))).collect::<serde_json::Map<_, _>>()))
        } else {
            None
        };
        print_json(&json!({ "isomorphic": map.is_some(), "witness": w }));
    } else {
        out!("{}", if map.is_some() { "isomorphic" } else { "not isomorphic" });
        if let (true, Some(p)) = (witness, pairs) {
            for (x, y) in p {
                out!("  {x:<10} -> {y}");
            }
        }
    }
    Ok(())
}

fn aut(input: &PathBuf, as_json: bool) -> Out {
    let c = load(input)?;
    let r = canonical_search(&c)?;
    if as_json {
        print_json(&json!({ "automorphisms": r.automorphisms, "canonical_hash": r.form.hash }));
    } else {
        out!("automorphisms  {}", r.automorphisms);
        out!("canonical hash {}", r.form.hash);
    }
    Ok(())
}

fn entry_row(e: &CensusEntry) -> String {
    let r = &e.representative;
    format!(
        "{:<6} {:<14} {:<6} {:>3} {:>5} {:>4}  {:<40} {}",
        format!("{:?}", r.family).to_lowercase(),
        r.skew,
        r.axis_name.as_deref().unwrap_or("-"),
        e.invariants.free_k,
        e.invariants.automorphisms,
        e.class_size,
        e.paper_label.as_deref().unwrap_or("unlisted"),
        e.listed_as.join("; ")
    )
}

fn census_summary(c: &Census) -> Value {
    json!({
        "classes": c.class_count(),
        "listed": c.listed,
        "configurations": c.configurations,
        "internally_consistent": c.internally_consistent(),
    })
}

fn census(family: FamilyArg, output: &Option<PathBuf>, as_json: bool) -> Out {
    let (entries, summary, findings): (Vec<CensusEntry>, Value, Value) = match family {
        FamilyArg::All => {
            let f = full_census()?;
            let s = json!({
                "schema_version": CENSUS_SCHEMA_VERSION,
                "perm": census_summary(&f.perm),
                "kappa": census_summary(&f.kappa),
                "total": f.total,
                "listed_total": f.listed_total,
                "prior_labeled": f.prior_labeled,
                "disjoint": f.disjoint,
            });
            let mut all = f.perm.findings.clone();
            all.extend(f.kappa.findings.clone());
            all.extend(f.findings.clone());
            (f.entries().cloned().collect(), s, json!(all))
        }
        FamilyArg::Perm | FamilyArg::Kappa => {
            let c = if matches!(family, FamilyArg::Perm) { census_perm_n4()? } else { census_kappa_n4()? };
            let mut s = census_summary(&c);
            s["schema_version"] = json!(CENSUS_SCHEMA_VERSION);
            (c.entries.clone(), s, json!(c.findings))
        }
    };
    if let Some(p) = output {
        emit(&Some(p.clone()), &serde_json::to_string_pretty(&entries).expect("entries serialize"))?;
    }
    if as_json {
        let mut v = summary;
        v["findings"] = findings;
        v["entries"] = json!(entries);
        print_json(&v);
        return Ok(());
    }
    out!(
        "{:<6} {:<14} {:<6} {:>3} {:>5} {:>4}  {:<40} {}",
        "family",
        "skew",
        "axis",
        "K5",
        "|Aut|",
        "size",
        "label",
        "listed as"
    );
    for e in &entries {
        out!("{}", entry_row(e));
    }
    out!();
    out!("{}", serde_json::to_string(&summary).expect("summary serializes"));
    for f in findings.as_array().into_iter().flatten() {
        out!("finding: {f}");
    }
    Ok(())
}

fn identify_cmd(input: &PathBuf, as_json: bool) -> Out {
    let c = load(input)?;
    let e = identify(&c)?;
    if as_json {
        print_json(&json!(e));
    } else {
        match e {
            Some(e) => out!("{}", entry_row(&e)),
            None => out!("no census class"),
        }
    }
    Ok(())
}

fn realize(input: &Option<PathBuf>, case: &str, params: &str, output: &Option<PathBuf>, as_json: bool) -> Out {
    let case: ParametricCase = case.parse()?;
    let params = parse_params(params)?;
    let r = parametric_realization(case, &params)?;
    let (config, points) = match input {
        None => (r.config.clone(), r.realization.points.clone()),
        Some(path) => {
            let target = load(path)?;
            let map = are_isomorphic(&r.config, &target)?
                .ok_or_else(|| Failure::Domain(format!("input is not isomorphic to the {case:?} configuration")))?;
            let mut pts = r.realization.points.clone();
            for (x, &y) in map.iter().enumerate() {
                pts[y] = r.realization.points[x].clone();
            }
            (target, pts)
        }
    };
    let coords = realization_to_json(&config, &points);
    let failure = r.realization.failure.as_ref().map(|f| f.to_string());
    if as_json && output.is_none() {
        let v: Value = serde_json::from_str(&coords).expect("own output parses");
        print_json(&json!({
            "params": r.params.to_string(),
            "lines_hold": r.realization.lines_hold,
            "faithful": r.realization.faithful,
            "failure": failure,
            "points": v,
        }));
        return Ok(());
    }
    if output.is_some() {
        emit(output, &coords)?;
    } else {
        out!("{coords}");
    }
    eprintln!("params     {}", r.params);
    eprintln!("lines hold {}", r.realization.lines_hold);
    eprintln!("faithful   {}", r.realization.faithful);
    if let Some(f) = failure {
        eprintln!("failure    {f}");
    }
    Ok(())
}

fn parse_budget(s: &str) -> Result<u64, Failure> {
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v >= 1.0 && v <= u64::MAX as f64 => Ok(v as u64),
        _ => Err(usage(format!("bad budget {s:?}"))),
    }
}

fn search_pg(input: &PathBuf, q: usize, budget: &str, as_json: bool) -> Out {
    let budget = parse_budget(budget)?;
    let c = load(input)?;
    let r = embed_search(&c, q, budget)?;
    let points = match &r.outcome {
        EmbedOutcome::Found(p) => Some(
            p.iter().enumerate().map(|(x, v)| (c.label(x).to_string(), json!(v))).collect::<serde_json::Map<_, _>>(),
        ),
        _ => None,
    };
    let outcome = match r.outcome {
        EmbedOutcome::Found(_) => "found",
        EmbedOutcome::Exhausted => "exhausted",
        EmbedOutcome::Inconclusive => "inconclusive",
    };
    if as_json {
        print_json(&json!({ "q": q, "outcome": outcome, "nodes": r.nodes, "points": points }));
    } else {
        out!("q={q} {outcome} after {} nodes", r.nodes);
        for (k, v) in points.into_iter().flatten() {
            out!("  {k:<10} {v}");
        }
    }
    Ok(())
}

fn export(input: &PathBuf, format: &str, output: &Option<PathBuf>) -> Out {
    let c = load(input)?;
    let bytes = c.export(format)?;
    emit(output, String::from_utf8_lossy(&bytes).trim_end())
}

fn run(cli: Cli) -> Out {
    if cli.version {
        out!("perspectra {} (census schema {})", env!("CARGO_PKG_VERSION"), CENSUS_SCHEMA_VERSION);
        return Ok(());
    }
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(usage("--threads must be positive"));
        }
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global().map_err(|e| Failure::Domain(e.to_string()))?;
    }
    let j = cli.json;
    match cli.cmd.ok_or_else(|| usage("no subcommand given; see --help"))? {
        Cmd::Construct(a) => construct(&a, cli.seed),
        Cmd::Verify { input, realization } => verify(&input, &realization, j),
        Cmd::Analyze { input, free_k, skew_class, centers } => analyze(&input, free_k, skew_class, centers, j),
        Cmd::Iso { a, b, witness } => iso(&a, &b, witness, j),
        Cmd::Aut { input } => aut(&input, j),
        Cmd::Census { family, output } => census(family, &output, j),
        Cmd::Identify { input } => identify_cmd(&input, j),
        Cmd::Realize { input, case, params, output } => realize(&input, &case, &params, &output, j),
        Cmd::SearchPg { input, q, budget } => search_pg(&input, q, &budget, j),
        Cmd::Export { input, format, output } => export(&input, &format, &output),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
