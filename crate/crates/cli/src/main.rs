use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use multisum_core::io::{format_coloring, format_instance, parse_coloring, parse_instance, ColoringDocument};
use multisum_core::oracle::{enumerate_instances, random_bipartite, Family};
use multisum_core::strength::{edge_strength_multipath, strength_report_bipartite};
use multisum_core::{
    edge_strength_multicycle, ensure_proper, evaluate, even_multicycle_color, multicycle_color,
    multipath_color, oracle_min_cost, oracle_strength, reduce_bipartite, sweep_color,
    verify_robust, Cost, CostModel, EdgeColoring, Error, Instance, Multicycle,
    Multipath, OracleConfig, Topology,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "multisum", version, about = "Minimum sum edge coloring of multicycles, multipaths and bipartite multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print maximum degree, load bound, chromatic index and edge strength.
    Strength { instance: PathBuf },
    /// Compute a coloring and print it as a coloring document.
    Color {
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = Algorithm::Auto)]
        algorithm: Algorithm,
    },
    /// Check a coloring document against an instance.
    Verify {
        instance: PathBuf,
        /// Coloring document, `-` for stdin.
        coloring: PathBuf,
        #[arg(long, value_parser = parse_cost)]
        cost: Option<CostSpec>,
    },
    /// Exhaustive minimum-cost coloring of a small instance.
    Oracle {
        instance: PathBuf,
        #[arg(long, value_parser = parse_cost, default_value = "sum")]
        cost: CostSpec,
        #[arg(long)]
        max_colors: Option<usize>,
    },
    /// Bring a coloring of a bipartite instance down to Delta colors.
    Reduce {
        instance: PathBuf,
        /// Coloring document, `-` for stdin.
        coloring: PathBuf,
    },
    /// Print a random instance.
    Gen {
        #[arg(long = "type", value_enum)]
        kind: Kind,
        /// Vertices of a multicycle, bundles of a multipath, vertices of a
        /// bipartite multigraph.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_mult: usize,
        /// Edge count of a bipartite multigraph.
        #[arg(long, default_value_t = 12)]
        edges: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare the solvers with the oracle over a whole family.
    Check {
        #[arg(long, value_enum)]
        family: Kind,
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        mult_max: usize,
        #[arg(long, default_value_t = 12)]
        m_max: usize,
        /// Graphs drawn for the bipartite family.
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also check optimality of the solver output under this model.
        #[arg(long, value_parser = parse_cost)]
        cost: Option<CostSpec>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Auto,
    General,
    Even,
    Path,
    Sweep,
}

impl Algorithm {
    fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::General => "general",
            Algorithm::Even => "even",
            Algorithm::Path => "path",
            Algorithm::Sweep => "sweep",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Multicycle,
    Multipath,
    Bipartite,
}

#[derive(Clone, Debug, PartialEq)]
enum CostSpec {
    Sum,
    Entropy,
    Occp(Vec<i64>),
}

impl CostSpec {
    fn model(&self, edges: usize) -> Result<CostModel, Error> {
        match self {
            CostSpec::Sum => Ok(CostModel::Sum),
            CostSpec::Entropy => CostModel::entropy(edges),
            CostSpec::Occp(costs) => CostModel::color_costs(costs.clone()),
        }
    }
}

fn parse_cost(s: &str) -> Result<CostSpec, String> {
    match s {
        "sum" => Ok(CostSpec::Sum),
        "entropy" => Ok(CostSpec::Entropy),
        _ => {
            let list = s
                .strip_prefix("occp:")
                .ok_or_else(|| format!("unknown cost {s:?}, expected sum, entropy or occp:<c1,c2,...>"))?;
            list.split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| format!("bad color cost {x:?}")))
                .collect::<Result<Vec<_>, _>>()
                .map(CostSpec::Occp)
        }
    }
}

/// Failure classes and their exit codes.
enum Failure {
    /// The checked object is wrong: exit 1.
    Verify(String),
    /// The input could not be used: exit 2.
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotBipartite { witness } => Failure::Input(format!(
                "graph is not bipartite, odd closed walk through vertices {witness:?}"
            )),
            e => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn load_instance(path: &Path) -> Result<Instance, Failure> {
    parse_instance(&read_text(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_coloring(path: &Path) -> Result<ColoringDocument, Failure> {
    parse_coloring(&read_text(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn cost_text(c: Cost) -> String {
    c.to_string()
}

fn strength(path: &Path) -> Outcome {
    let report = match load_instance(path)? {
        Instance::Multicycle(g) => edge_strength_multicycle(&g),
        Instance::Multipath(h) => edge_strength_multipath(&h),
        Instance::Multigraph(g) => strength_report_bipartite(&g)?,
    };
    Ok(format!(
        "delta {}\nload_bound {}\nchromatic_index {}\nedge_strength {}\n",
        report.delta, report.load_bound, report.chromatic_index, report.edge_strength
    ))
}

fn solve(inst: &Instance, algorithm: Algorithm) -> Result<(EdgeColoring, &'static str), Failure> {
    let wrong = |what: &str| Failure::Input(format!("algorithm {} needs {what}, got a {}", algorithm.name(), inst.kind()));
    let chosen = match (algorithm, inst) {
        (Algorithm::Auto, Instance::Multicycle(g)) if g.is_even() => Algorithm::Even,
        (Algorithm::Auto, Instance::Multicycle(_)) => Algorithm::General,
        (Algorithm::Auto, Instance::Multipath(_)) => Algorithm::Path,
        (Algorithm::Auto, Instance::Multigraph(_)) => {
            return Err(Failure::Input(
                "no fast solver for general multigraphs; use `oracle` or `reduce`".into(),
            ))
        }
        (a, _) => a,
    };
    let f = match (chosen, inst) {
        (Algorithm::General, Instance::Multicycle(g)) => multicycle_color(g),
        (Algorithm::Even, Instance::Multicycle(g)) => even_multicycle_color(g)?,
        (Algorithm::Sweep, Instance::Multicycle(g)) => sweep_color(g, g.edge_count() / (g.n() / 2))?,
        (Algorithm::Path, Instance::Multipath(h)) => multipath_color(h, 1),
        (Algorithm::Path, _) => return Err(wrong("a multipath")),
        _ => return Err(wrong("a multicycle")),
    };
    Ok((f, chosen.name()))
}

fn color(path: &Path, algorithm: Algorithm) -> Outcome {
    let inst = load_instance(path)?;
    let (f, name) = solve(&inst, algorithm)?;
    let mut doc = ColoringDocument::new(inst, name, f);
    doc.cost = Some(("sum".into(), doc.sum.to_string()));
    Ok(format_coloring(&doc)?)
}

fn verify(inst_path: &Path, coloring_path: &Path, cost: Option<&CostSpec>) -> Outcome {
    let inst = load_instance(inst_path)?;
    let doc = load_coloring(coloring_path)?;
    if doc.instance != inst {
        return Err(Failure::Verify("coloring document is for a different instance".into()));
    }
    if let Err(e) = ensure_proper(&inst, &doc.coloring) {
        return Err(Failure::Verify(e.to_string()));
    }
    if let Some(why) = doc.summary_mismatch() {
        return Err(Failure::Verify(why));
    }
    let mut out = format!("proper yes\nsum {}\ncolors_used {}\n", doc.sum, doc.colors_used);
    if let Some(spec) = cost {
        let model = spec.model(inst.edge_count())?;
        let value = evaluate(&model, &doc.coloring)?;
        if let Some((name, claimed)) = &doc.cost {
            if *name == model.name() && *claimed != cost_text(value) {
                return Err(Failure::Verify(format!("cost {name} is {value} but the file claims {claimed}")));
            }
        }
        writeln!(out, "cost {} {value}", model.name()).unwrap();
    }
    out.push_str("verdict ok\n");
    Ok(out)
}

fn oracle(path: &Path, cost: &CostSpec, max_colors: Option<usize>) -> Outcome {
    let inst = load_instance(path)?;
    let model = cost.model(inst.edge_count())?;
    let res = oracle_min_cost(&inst.to_multigraph(), &model, max_colors, &OracleConfig::default())?;
    let mut doc = ColoringDocument::new(inst, "oracle", res.coloring);
    doc.cost = Some((model.name(), cost_text(res.cost)));
    doc.nodes = Some(res.nodes);
    Ok(format_coloring(&doc)?)
}

fn reduce(inst_path: &Path, coloring_path: &Path) -> Outcome {
    let inst = load_instance(inst_path)?;
    let doc = load_coloring(coloring_path)?;
    if doc.instance != inst {
        return Err(Failure::Input("coloring document is for a different instance".into()));
    }
    let red = reduce_bipartite(&inst.to_multigraph(), &doc.coloring)?;
    let mut out = ColoringDocument::new(inst, "reduce", red.coloring);
    out.cost = Some(("sum".into(), out.sum.to_string()));
    Ok(format_coloring(&out)?)
}

fn gen(kind: Kind, n: usize, max_mult: usize, edges: usize, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if max_mult == 0 {
        return Err(Failure::Input("--max-mult must be at least 1".into()));
    }
    let mut mult = |len: usize| -> Vec<usize> { (0..len).map(|_| rng.random_range(1..=max_mult)).collect() };
    let inst = match kind {
        Kind::Multicycle => Instance::Multicycle(Multicycle::new(n, mult(n))?),
        Kind::Multipath => Instance::Multipath(Multipath::new(mult(n))?),
        Kind::Bipartite => {
            if n < 2 {
                return Err(Failure::Input("a bipartite multigraph needs --n of at least 2".into()));
            }
            Instance::Multigraph(random_bipartite(&mut rng, n, edges)?)
        }
    };
    Ok(format_instance(&inst))
}

/// Outcome of one instance in a family sweep: `Err` holds the failure.
fn check_one(inst: &Instance, model: Option<&CostModel>) -> Result<(), String> {
    let cfg = OracleConfig::default();
    let mg = inst.to_multigraph();
    let err = |e: Error| e.to_string();
    let best = oracle_min_cost(&mg, &CostModel::Sum, None, &cfg).map_err(err)?;
    let oracle_sum = match best.cost {
        Cost::Exact(x) => x as u64,
        Cost::Real(_) => unreachable!(),
    };
    let strength = oracle_strength(&mg, &cfg).map_err(err)?;
    let solved = match inst {
        Instance::Multicycle(g) => {
            let s = edge_strength_multicycle(g).edge_strength;
            if s != strength {
                return Err(format!("strength formula {s}, oracle {strength}"));
            }
            let f = multicycle_color(g);
            if f.colors_used() != s {
                return Err(format!("general solver uses {} colors, strength {s}", f.colors_used()));
            }
            if g.is_even() {
                let h = even_multicycle_color(g).map_err(err)?;
                ensure_proper(g, &h).map_err(err)?;
                if h.sum() != oracle_sum {
                    return Err(format!("even solver sum {}, oracle {oracle_sum}", h.sum()));
                }
            }
            f
        }
        Instance::Multipath(h) => multipath_color(h, 1),
        Instance::Multigraph(g) => {
            let delta = g.max_degree();
            if strength != delta {
                return Err(format!("oracle strength {strength}, delta {delta}"));
            }
            let start = EdgeColoring::new((1..=g.edges().len() as u32).collect()).map_err(err)?;
            let red = reduce_bipartite(g, &start).map_err(err)?;
            if red.coloring.max_color() as usize > delta {
                return Err(format!("reduction left color {}", red.coloring.max_color()));
            }
            return Ok(());
        }
    };
    ensure_proper(inst, &solved).map_err(err)?;
    if solved.sum() != oracle_sum {
        return Err(format!("solver sum {}, oracle {oracle_sum}", solved.sum()));
    }
    if let Some(model) = model {
        let report = verify_robust(inst, &solved, std::slice::from_ref(model), &cfg).map_err(err)?;
        if let Some(v) = report.verdicts.iter().find(|v| !v.optimal) {
            return Err(format!("{} is {} but the optimum is {}", v.model, v.achieved, v.optimum));
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn check(
    kind: Kind,
    n_min: usize,
    n_max: usize,
    mult_max: usize,
    m_max: usize,
    count: usize,
    seed: u64,
    cost: Option<&CostSpec>,
) -> Outcome {
    let family = match kind {
        Kind::Multicycle => Family::Multicycles { n_min, n_max, max_mult: mult_max, max_edges: Some(m_max), dedup: false },
        Kind::Multipath => Family::Multipaths { len_min: n_min, len_max: n_max, max_mult: mult_max },
        Kind::Bipartite => Family::Bipartite { seed, count, max_vertices: n_max, max_edges: m_max },
    };
    let instances: Vec<Instance> = enumerate_instances(&family)?
        .into_iter()
        .filter(|i| i.edge_count() <= m_max)
        .collect();
    let models = instances
        .iter()
        .map(|i| cost.map(|c| c.model(i.edge_count())).transpose())
        .collect::<Result<Vec<_>, _>>()?;
    let results: Vec<Result<(), String>> = instances
        .par_iter()
        .zip(models.par_iter())
        .map(|(inst, model)| check_one(inst, model.as_ref()))
        .collect();

    let size = |i: &Instance| match i {
        Instance::Multicycle(g) => g.n(),
        Instance::Multipath(h) => h.len(),
        Instance::Multigraph(g) => g.nv(),
    };
    let mut out = format!("{:>4} {:>9} {:>6} {:>6}\n", "n", "instances", "pass", "fail");
    let mut rows: Vec<(usize, usize, usize)> = Vec::new();
    let mut failures = Vec::new();
    for (inst, res) in instances.iter().zip(&results) {
        let n = size(inst);
        let pos = match rows.iter().position(|r| r.0 == n) {
            Some(p) => p,
            None => {
                rows.push((n, 0, 0));
                rows.len() - 1
            }
        };
        match res {
            Ok(()) => rows[pos].1 += 1,
            Err(why) => {
                rows[pos].2 += 1;
                failures.push(format!("FAIL {}: {why}", format_instance(inst).trim_end().replace('\n', " | ")));
            }
        }
    }
    rows.sort_unstable();
    for (n, pass, fail) in rows {
        writeln!(out, "{n:>4} {:>9} {pass:>6} {fail:>6}", pass + fail).unwrap();
    }
    for f in &failures {
        writeln!(out, "{f}").unwrap();
    }
    if failures.is_empty() {
        writeln!(out, "PASS {} instances", instances.len()).unwrap();
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Verify(format!("{} of {} instances failed", failures.len(), instances.len())))
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Strength { instance } => strength(&instance),
        Command::Color { instance, algorithm } => color(&instance, algorithm),
        Command::Verify { instance, coloring, cost } => verify(&instance, &coloring, cost.as_ref()),
        Command::Oracle { instance, cost, max_colors } => oracle(&instance, &cost, max_colors),
        Command::Reduce { instance, coloring } => reduce(&instance, &coloring),
        Command::Gen { kind, n, max_mult, edges, seed } => gen(kind, n, max_mult, edges, seed),
        Command::Check { family, n_min, n_max, mult_max, m_max, count, seed, cost } => {
            check(family, n_min, n_max, mult_max, m_max, count, seed, cost.as_ref())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verify(why)) => {
            println!("verdict fail: {why}");
            ExitCode::from(1)
        }
        Err(Failure::Input(why)) => {
            eprintln!("error: {why}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use multisum_core::Multigraph;

    #[test]
    fn cost_flag() {
        assert_eq!(parse_cost("sum"), Ok(CostSpec::Sum));
        assert_eq!(parse_cost("occp:4, 1,2"), Ok(CostSpec::Occp(vec![4, 1, 2])));
        assert!(parse_cost("occp:1,x").is_err());
        assert!(parse_cost("median").is_err());
    }

    #[test]
    fn clap_definition() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn check_one_on_multigraph() {
        let g = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 1)]).unwrap();
        assert_eq!(check_one(&Instance::Multigraph(g), None), Ok(()));
    }
}
