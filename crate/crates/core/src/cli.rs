//! Command-line front end. `run` parses arguments, writes results to `out`
//! (or `--out`), diagnostics to `err`, and returns the exit status:
//! 0 on success, 1 when a check found violations, 2 on usage or input errors.

use std::fmt::Write as _;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::families::{verify_family_masks, FamilySpec};
use crate::formulas::{formula_adim, formula_queries, Family, FormulaQuery};
use crate::generators;
use crate::graph::{cone, disjoint_union, join, Graph};
use crate::graph6::{from_graph6, to_graph6};
use crate::metric::DistinguishTable;
use crate::solver::{
    adim, enumerate_table_bases, solve_adim, solve_dim_with, solve_table, SolveOptions, SolveResult,
};
use crate::verify::{
    check_cone_conjecture_with, sweep_theorem_with, Corpus, SweepOptions, Violation, THEOREMS,
};

const SPEC_HELP: &str = "\
GRAPH SPECS (--graph):
  path:n  cycle:n  complete:n  empty:n  star:n  fan:n  wheel:n
  kbip:r,s  hypercube:r  petersen  fig1:t  fig2  fig3  fig4  fig5
  g6:<graph6>          a graph6 literal
  complement:X         complement of X
  cone:X               K1 + X, apex at vertex 0
  join:X+Y             every vertex of X adjacent to every vertex of Y
  union:X+Y            disjoint union
  (X)                  grouping, e.g. join:(join:path:2+path:3)+cycle:5";

#[derive(Parser, Debug)]
#[command(name = "adimlab", version, about = "Exact k-adjacency dimension of graphs", after_help = SPEC_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// adim_k (or the t-truncated dimension) with a witness basis
    Compute {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long, default_value = "1", value_parser = parse_k_range)]
        k: KRange,
        /// Truncation level of the metric
        #[arg(long, default_value_t = 2)]
        t: u32,
        /// Also decide whether the basis is unique
        #[arg(long)]
        unique: bool,
        #[command(flatten)]
        common: Common,
    },
    /// k-metric dimension under the unbounded shortest-path metric
    Dim {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long, default_value = "1", value_parser = parse_k_range)]
        k: KRange,
        #[command(flatten)]
        common: Common,
    },
    /// Basic invariants, dimensionality and twin classes
    Info {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long, default_value_t = 2)]
        t: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Check closed formulas against the solver, or evaluate one
    Formulas {
        /// Largest order checked
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Evaluate a single family member instead (path, cycle, complete, empty, kbip, fan, wheel, petersen)
        #[arg(long)]
        family: Option<String>,
        /// Family parameters, comma separated
        #[arg(long, value_delimiter = ',')]
        params: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Every k-basis
    Bases {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, default_value_t = 2)]
        t: u32,
        /// Give up past this many bases
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Check every member of the family around the lexicographically first k-basis
    Family {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// First mask (inclusive)
        #[arg(long)]
        from_mask: Option<u64>,
        /// Last mask (exclusive)
        #[arg(long)]
        to_mask: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Check a statement on every graph of a corpus
    Sweep {
        /// Statement id; `--list` prints them
        #[arg(long, required_unless_present = "list")]
        theorem: Option<String>,
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        corpus: CorpusArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Check adim_k(K1 + H) <= adim_k(H) + k on a corpus
    Conjecture {
        #[arg(long, default_value = "1..4", value_parser = parse_k_range)]
        k: KRange,
        #[command(flatten)]
        corpus: CorpusArgs,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Generator spec, see below
    #[arg(long)]
    graph: Option<String>,
    /// graph6 literal
    #[arg(long)]
    g6: Option<String>,
    /// File holding a graph6 line or an edge list (`n` then `u v` lines)
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CorpusArgs {
    /// Largest order: 6 for labeled graphs, 9 for trees, unbounded for files
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long, default_value_t = 2)]
    min_n: usize,
    /// Read the corpus from a graph6 file instead
    #[arg(long, conflicts_with = "trees")]
    file: Option<PathBuf>,
    /// Use one tree per isomorphism class instead
    #[arg(long)]
    trees: bool,
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    min_degree: Option<usize>,
    /// Worker threads
    #[arg(long)]
    jobs: Option<usize>,
    /// Print each violation as a JSON line when found
    #[arg(long)]
    stream: bool,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Search-node budget per solve
    #[arg(long, env = "ADIMLAB_BUDGET")]
    budget: Option<u64>,
    /// Write output here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

type KRange = RangeInclusive<u32>;

/// `3`, `1..4` or `1..=4`; both range forms include the end.
fn parse_k_range(s: &str) -> std::result::Result<KRange, String> {
    let num = |x: &str| {
        x.trim()
            .parse::<u32>()
            .map_err(|_| format!("bad k {x:?}: expected a number or a range like 1..4"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if lo == 0 || lo > hi {
        return Err(format!("bad k range {s:?}: need 1 <= start <= end"));
    }
    Ok(lo..=hi)
}

struct SpecParser<'a> {
    src: &'a str,
    pos: usize,
}

impl SpecParser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn fail(&self, what: &str) -> Error {
        Error::Parse(format!(
            "graph spec {:?} at offset {}: {what}",
            self.src, self.pos
        ))
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn token(&mut self) -> &str {
        let start = self.pos;
        let len = self
            .rest()
            .find(['+', ')', '('])
            .unwrap_or(self.rest().len());
        self.pos += len;
        &self.src[start..start + len]
    }

    fn pair(&mut self) -> Result<(Graph, Graph)> {
        let a = self.spec()?;
        if !self.eat("+") {
            return Err(self.fail("expected '+'"));
        }
        Ok((a, self.spec()?))
    }

    fn spec(&mut self) -> Result<Graph> {
        if self.eat("(") {
            let g = self.spec()?;
            if !self.eat(")") {
                return Err(self.fail("expected ')'"));
            }
            return Ok(g);
        }
        if self.eat("join:") {
            let (a, b) = self.pair()?;
            return Ok(join(&a, &b));
        }
        if self.eat("union:") {
            let (a, b) = self.pair()?;
            return Ok(disjoint_union(&a, &b));
        }
        if self.eat("complement:") {
            return Ok(self.spec()?.complement());
        }
        if self.eat("cone:") {
            return Ok(cone(&self.spec()?));
        }
        if self.eat("g6:") {
            let lit = self.token().to_string();
            return Ok(from_graph6(&lit)?);
        }
        let tok = self.token().to_string();
        named_graph(&tok)
    }
}

fn named_graph(tok: &str) -> Result<Graph> {
    let (name, args) = tok.split_once(':').unwrap_or((tok, ""));
    let params: Vec<usize> = if args.is_empty() {
        Vec::new()
    } else {
        args.split(',')
            .map(|p| {
                p.trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad parameter {p:?} in {tok:?}")))
            })
            .collect::<Result<_>>()?
    };
    let want = |count: usize| -> Result<()> {
        if params.len() != count {
            return Err(Error::Parse(format!(
                "{name} takes {count} parameter(s), got {}",
                params.len()
            )));
        }
        Ok(())
    };
    let one = |f: fn(usize) -> Graph| -> Result<Graph> {
        want(1)?;
        Ok(f(params[0]))
    };
    match name {
        "path" => one(generators::path),
        "complete" => one(generators::complete),
        "empty" => one(generators::empty_graph),
        "star" => one(generators::star),
        "fan" => one(generators::fan),
        "cycle" => {
            want(1)?;
            generators::cycle(params[0])
        }
        "wheel" => {
            want(1)?;
            generators::wheel(params[0])
        }
        "hypercube" => {
            want(1)?;
            generators::hypercube(params[0])
        }
        "fig1" => {
            want(1)?;
            generators::fig1_graph(params[0])
        }
        "kbip" => {
            want(2)?;
            generators::complete_bipartite(params[0], params[1])
        }
        "petersen" | "fig2" | "fig3" | "fig4" | "fig5" => {
            want(0)?;
            Ok(match name {
                "petersen" => generators::petersen(),
                "fig2" => generators::fig2_graph(),
                "fig3" => generators::fig3_graph(),
                "fig4" => generators::fig4_graph(),
                _ => generators::fig5_graph(),
            })
        }
        _ => Err(Error::Parse(format!("unknown graph {name:?}; see --help"))),
    }
}

/// Parses a generator spec such as `join:path:3+cycle:5`.
pub fn parse_graph_spec(spec: &str) -> Result<Graph> {
    let mut p = SpecParser {
        src: spec.trim(),
        pos: 0,
    };
    let g = p.spec()?;
    if !p.rest().is_empty() {
        return Err(p.fail("trailing input"));
    }
    Ok(g)
}

impl GraphSource {
    fn load(&self) -> Result<(String, Graph)> {
        if let Some(s) = &self.graph {
            return Ok((s.clone(), parse_graph_spec(s)?));
        }
        if let Some(s) = &self.g6 {
            return Ok((s.clone(), from_graph6(s.trim())?));
        }
        let path = self.file.as_ref().expect("clap enforces one source");
        let text = std::fs::read_to_string(path)?;
        let trimmed = text.trim();
        let g = if !trimmed.contains(char::is_whitespace) {
            from_graph6(trimmed)?
        } else {
            Graph::from_edge_list_text(&text)?
        };
        Ok((path.display().to_string(), g))
    }
}

fn solve_options(budget: Option<u64>) -> SolveOptions {
    SolveOptions {
        budget,
        ..SolveOptions::default()
    }
}

fn basis_text(r: &SolveResult) -> String {
    r.witness
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Rows of cells, rendered as aligned columns or CSV.
fn render_rows(format: Format, header: &[&str], rows: &[Vec<String>]) -> String {
    let mut s = String::new();
    if format == Format::Csv {
        let _ = writeln!(s, "{}", header.join(","));
        for r in rows {
            let _ = writeln!(s, "{}", r.join(","));
        }
        return s;
    }
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let _ = writeln!(s, "{}", line(header.to_vec()));
    for r in rows {
        let _ = writeln!(s, "{}", line(r.iter().map(String::as_str).collect()));
    }
    s
}

fn json_text(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json serialises") + "\n"
}

struct Output {
    text: String,
    status: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, status: 0 }
    }
}

fn compute(
    label: &str,
    g: &Graph,
    ks: KRange,
    t: u32,
    unique: bool,
    metric: bool,
    common: &Common,
) -> Result<Output> {
    let table = if metric {
        DistinguishTable::build_full_metric(g)?
    } else {
        DistinguishTable::build(g, t)?
    };
    let c = table.dimensionality()?;
    let mut opts = solve_options(common.budget);
    opts.check_unique = unique;
    let results = ks
        .map(|k| {
            if metric {
                solve_dim_with(g, k, &opts)
            } else {
                solve_table(&table, k, &opts)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let text = match common.format {
        Format::Json => json_text(&json!({
            "graph": label,
            "graph6": to_graph6(g),
            "n": g.order(),
            "t": table.level(),
            "dimensionality": c,
            "results": results.iter().map(SolveResult::to_json).collect::<Vec<_>>(),
        })),
        f => {
            let rows: Vec<Vec<String>> = results
                .iter()
                .map(|r| {
                    vec![
                        r.k.to_string(),
                        r.dimension.to_string(),
                        basis_text(r),
                        r.unique.map_or("-".into(), |u| u.to_string()),
                        r.stats.nodes.to_string(),
                    ]
                })
                .collect();
            let mut s = String::new();
            if f == Format::Table {
                let _ = writeln!(s, "{label}: n={} t={} C={c}", g.order(), table.level());
            }
            s + &render_rows(f, &["k", "dimension", "basis", "unique", "nodes"], &rows)
        }
    };
    Ok(Output::ok(text))
}

fn info(label: &str, g: &Graph, t: u32, common: &Common) -> Result<Output> {
    let table = DistinguishTable::build(g, t)?;
    let c = table.dimensionality()?;
    let twins = g.twin_partition();
    let classes: Vec<Vec<usize>> = twins.classes.iter().map(|s| s.to_vec()).collect();
    let v = json!({
        "graph": label,
        "graph6": to_graph6(g),
        "n": g.order(),
        "m": g.size(),
        "connected": g.is_connected(),
        "tree": g.is_tree(),
        "diameter": g.diameter().finite(),
        "girth": g.girth(),
        "min_degree": g.min_degree(),
        "max_degree": g.max_degree(),
        "t": t,
        "dimensionality": c,
        "twin_classes": classes,
        "twin_free": twins.is_twins_free(),
    });
    let text = match common.format {
        Format::Json => json_text(&v),
        f => {
            let obj = v.as_object().expect("object");
            let rows: Vec<Vec<String>> = obj
                .iter()
                .map(|(k, v)| vec![k.clone(), v.to_string().trim_matches('"').to_string()])
                .collect();
            render_rows(f, &["field", "value"], &rows)
        }
    };
    Ok(Output::ok(text))
}

fn formulas(max_n: usize, common: &Common) -> Result<Output> {
    let opts = solve_options(common.budget);
    let mut rows = Vec::new();
    let mut records = Vec::new();
    let mut mismatches = 0;
    for q in formula_queries(max_n) {
        let expected = formula_adim(&q)?;
        let observed =
            solve_table(&DistinguishTable::build(&q.graph()?, 2)?, q.k, &opts)?.dimension;
        let ok = expected == observed;
        mismatches += !ok as usize;
        let params = q
            .params
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(";");
        rows.push(vec![
            q.family.name().to_string(),
            params.clone(),
            q.k.to_string(),
            expected.to_string(),
            observed.to_string(),
            if ok { "ok" } else { "MISMATCH" }.to_string(),
        ]);
        records.push(json!({
            "family": q.family.name(), "params": q.params, "k": q.k,
            "formula": expected, "solver": observed, "ok": ok,
        }));
    }
    let text = match common.format {
        Format::Json => json_text(
            &json!({ "checked": records.len(), "mismatches": mismatches, "rows": records }),
        ),
        f => {
            let mut s = render_rows(
                f,
                &["family", "params", "k", "formula", "solver", "status"],
                &rows,
            );
            if f == Format::Table {
                let _ = writeln!(s, "{} checked, {mismatches} mismatches", rows.len());
            }
            s
        }
    };
    Ok(Output {
        text,
        status: (mismatches > 0) as i32,
    })
}

fn formula_single(name: &str, params: &[usize], k: u32, common: &Common) -> Result<Output> {
    let family = Family::from_name(name).ok_or_else(|| {
        let known: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
        Error::Parse(format!(
            "--family: unknown family {name:?} (known: {})",
            known.join(", ")
        ))
    })?;
    let q = FormulaQuery::new(family, params, k);
    let value = formula_adim(&q)?;
    let solver = adim(&q.graph()?, k)?;
    let text = match common.format {
        Format::Json => json_text(&json!({
            "family": family.name(), "params": params, "k": k, "formula": value, "solver": solver,
        })),
        f => render_rows(
            f,
            &["family", "params", "k", "formula", "solver"],
            &[vec![
                family.name().into(),
                params
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(";"),
                k.to_string(),
                value.to_string(),
                solver.to_string(),
            ]],
        ),
    };
    Ok(Output {
        text,
        status: (value != solver) as i32,
    })
}

fn bases(g: &Graph, k: u32, t: u32, cap: usize, common: &Common) -> Result<Output> {
    let table = DistinguishTable::build(g, t)?;
    let mut opts = solve_options(common.budget);
    opts.basis_cap = cap;
    let all = enumerate_table_bases(&table, k, &opts)?;
    let text = match common.format {
        Format::Json => json_text(&json!({
            "k": k,
            "t": t,
            "dimension": all.first().map_or(0, |b| b.len()),
            "count": all.len(),
            "bases": all,
        })),
        f => {
            let rows: Vec<Vec<String>> = all
                .iter()
                .enumerate()
                .map(|(i, b)| {
                    vec![
                        i.to_string(),
                        b.iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(" "),
                    ]
                })
                .collect();
            render_rows(f, &["index", "basis"], &rows)
        }
    };
    Ok(Output::ok(text))
}

fn family(
    g: &Graph,
    k: u32,
    from: Option<u64>,
    to: Option<u64>,
    common: &Common,
) -> Result<Output> {
    let basis = solve_adim(g, k)?.witness;
    let spec = FamilySpec::new(g, &basis)?;
    let range = match (from, to) {
        (None, None) => spec.mask_range(None)?,
        (a, b) => {
            let full = spec.mask_range(None).ok();
            let end = b.or(full.map(|r| r.end)).ok_or(Error::LimitRequired {
                free_pairs: spec.free_pairs().len(),
            })?;
            a.unwrap_or(0)..end
        }
    };
    let report = verify_family_masks(&spec, k, range.clone())?;
    let status = (!report.passed()) as i32;
    let text = match common.format {
        Format::Json => {
            let mut v = serde_json::to_value(&report).expect("report serialises");
            v["from_mask"] = json!(range.start);
            v["to_mask"] = json!(range.end);
            json_text(&v)
        }
        f => {
            let rows: Vec<Vec<String>> = report
                .dimensions
                .iter()
                .map(|(d, c)| vec![d.to_string(), c.to_string()])
                .collect();
            let mut s = String::new();
            if f == Format::Table {
                let _ = writeln!(
                    s,
                    "basis {} (k={k}), masks {}..{}, {} checked, {} violations",
                    report.basis,
                    range.start,
                    range.end,
                    report.checked,
                    report.violations.len()
                );
            }
            s + &render_rows(f, &["dimension", "members"], &rows)
        }
    };
    Ok(Output { text, status })
}

impl CorpusArgs {
    fn corpus(&self, default_trees: bool) -> Result<Corpus> {
        let top = |default| self.min_n..=self.max_n.unwrap_or(default);
        let mut c = if let Some(path) = &self.file {
            Corpus::from_graph6_file(path)?.with_orders(top(usize::MAX))
        } else if self.trees || default_trees {
            Corpus::trees(top(9))
        } else {
            Corpus::labeled(top(6))?
        };
        if self.connected {
            c = c.connected();
        }
        if let Some(d) = self.min_degree {
            c = c.with_min_degree(d);
        }
        Ok(c)
    }

    fn options(&self, budget: Option<u64>) -> SweepOptions {
        SweepOptions {
            jobs: self.jobs,
            budget,
        }
    }
}

fn violation_rows(vs: &[Violation]) -> Vec<Vec<String>> {
    vs.iter()
        .map(|v| {
            vec![
                v.graph6.clone(),
                v.partner.clone().unwrap_or_default(),
                v.k.to_string(),
                v.observed.to_string(),
                v.relation.to_string(),
                v.expected.to_string(),
            ]
        })
        .collect()
}

const VIOLATION_HEADER: [&str; 6] = ["graph6", "partner", "k", "observed", "relation", "expected"];

fn write_out(common: &Common, out: &mut (dyn Write + Send), text: &str) -> Result<()> {
    match &common.out {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn dispatch(cli: Cli, out: &mut (dyn Write + Send)) -> Result<i32> {
    let (result, common) = match cli.command {
        Command::Compute {
            graph,
            k,
            t,
            unique,
            common,
        } => {
            let (label, g) = graph.load()?;
            (compute(&label, &g, k, t, unique, false, &common)?, common)
        }
        Command::Dim { graph, k, common } => {
            let (label, g) = graph.load()?;
            (compute(&label, &g, k, 2, false, true, &common)?, common)
        }
        Command::Info { graph, t, common } => {
            let (label, g) = graph.load()?;
            (info(&label, &g, t, &common)?, common)
        }
        Command::Formulas {
            max_n,
            family,
            params,
            k,
            common,
        } => match family {
            Some(name) => (formula_single(&name, &params, k, &common)?, common),
            None => (formulas(max_n, &common)?, common),
        },
        Command::Bases {
            graph,
            k,
            t,
            cap,
            common,
        } => {
            let (_, g) = graph.load()?;
            (bases(&g, k, t, cap, &common)?, common)
        }
        Command::Family {
            graph,
            k,
            from_mask,
            to_mask,
            common,
        } => {
            let (_, g) = graph.load()?;
            (family(&g, k, from_mask, to_mask, &common)?, common)
        }
        Command::Sweep {
            theorem,
            list,
            corpus,
            common,
        } => {
            if list {
                let text = THEOREMS.iter().map(|t| format!("{t}\n")).collect();
                (Output::ok(text), common)
            } else {
                let theorem = theorem.expect("clap requires --theorem");
                let c = corpus.corpus(theorem == "K1T-trees")?;
                let report = with_stream(out, corpus.stream, |sink| {
                    sweep_theorem_with(&c, &theorem, &corpus.options(common.budget), sink)
                })?;
                let text = match common.format {
                    Format::Json => json_text(&report.to_json()),
                    f => {
                        let mut s = String::new();
                        if f == Format::Table {
                            let _ = writeln!(
                                s,
                                "{}: {} graphs checked, {} matches, {} violations, {} ms",
                                report.theorem,
                                report.checked,
                                report.matches,
                                report.violations.len(),
                                report.elapsed.as_millis()
                            );
                        }
                        if f == Format::Csv || !report.violations.is_empty() {
                            s += &render_rows(
                                f,
                                &VIOLATION_HEADER,
                                &violation_rows(&report.violations),
                            );
                        }
                        s
                    }
                };
                let status = (!report.passed()) as i32;
                (Output { text, status }, common)
            }
        }
        Command::Conjecture { k, corpus, common } => {
            let c = corpus.corpus(false)?;
            let report = with_stream(out, corpus.stream, |sink| {
                check_cone_conjecture_with(&c, k.clone(), &corpus.options(common.budget), sink)
            })?;
            let text = match common.format {
                Format::Json => json_text(&report.to_json()),
                f => {
                    let rows: Vec<Vec<String>> = report
                        .slack
                        .iter()
                        .map(|(s, c)| vec![s.to_string(), c.to_string()])
                        .collect();
                    let mut s = String::new();
                    if f == Format::Table {
                        let _ = writeln!(
                            s,
                            "k={}..{}: {} graphs checked, {} tight, {} violations, {} ms",
                            k.start(),
                            k.end(),
                            report.sweep.checked,
                            report.sweep.matches,
                            report.sweep.violations.len(),
                            report.sweep.elapsed.as_millis()
                        );
                    }
                    s += &render_rows(f, &["slack", "instances"], &rows);
                    if !report.sweep.violations.is_empty() {
                        s += &render_rows(
                            f,
                            &VIOLATION_HEADER,
                            &violation_rows(&report.sweep.violations),
                        );
                    }
                    s
                }
            };
            let status = (!report.sweep.passed()) as i32;
            (Output { text, status }, common)
        }
    };
    write_out(&common, out, &result.text)?;
    Ok(result.status)
}

/// Runs `f` with a sink that prints violations as JSON lines to `out` when
/// `stream` is set, and ignores them otherwise.
fn with_stream<T>(
    out: &mut (dyn Write + Send),
    stream: bool,
    f: impl FnOnce(&(dyn Fn(&Violation) + Sync)) -> Result<T>,
) -> Result<T> {
    if !stream {
        return f(&|_| {});
    }
    let shared = Mutex::new(out);
    f(&|v| {
        let line = serde_json::to_string(v).expect("violation serialises");
        let mut w = shared.lock().expect("writer lock");
        let _ = writeln!(w, "{line}");
    })
}

/// Entry point shared by the binary and the tests. `args` includes the
/// program name.
pub fn run<I, S>(args: I, out: &mut (dyn Write + Send), err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match dispatch(cli, out) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let Error::OutOfProvenRange { range, .. } = &e {
                let _ = writeln!(err, "hint: values are known for {range}");
            }
            2
        }
    }
}
