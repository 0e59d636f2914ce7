//! `ferrers`: command-line front end for Ferrers-diagram presentation ideals.
//!
//! Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 verification or regression failure, 2 input or usage error,
//! 3 resource limit exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ferrers_core::diagram::DiagramCollection;
use ferrers_core::exchange::{check_strong_l_exchange, IdealCollection};
use ferrers_core::fixtures;
use ferrers_core::groebner::{initial_squarefree, inter_reduce, is_groebner, BinomialBasis, Budget};
use ferrers_core::oracle::{kernel_binomials, reduced_kernel_gb, verify_candidate, MapKind, OracleBudget, ToricInstance};
use ferrers_core::presentation::{fiber_candidate, rees_candidate};
use ferrers_core::{sigma_cmp, pt, Error, FerrersDiagram, MonomialOrder, Tableau, VerificationReport};

const SCHEMA: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "ferrers", version, about = "Gröbner bases of blowup algebras of Ferrers diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Monomial order. For Rees computations `sigma` means the product order (lex on x, then σ on T).
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Sigma)]
    order: OrderArg,
    /// Largest number of monomials the kernel oracle may enumerate.
    #[arg(long, global = true, default_value_t = OracleBudget::default().max_monomials)]
    max_monomials: usize,
    /// Largest Gröbner basis size during completion.
    #[arg(long, global = true, default_value_t = Budget::default().max_basis)]
    max_basis: usize,
    /// Largest degree of a new basis element during completion.
    #[arg(long, global = true, default_value_t = Budget::default().max_degree)]
    max_gb_degree: u32,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum OrderArg {
    Sigma,
    PlainLexT,
    Product,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum MapArg {
    Fiber,
    Rees,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the points and maximal points of a diagram.
    Closure { diagram: PathBuf },
    /// Report whether a diagram is rectangular and standardizable.
    Check { diagram: PathBuf },
    /// Standardize a semi-standard tableau (one row per line).
    Standardize { tableau: PathBuf },
    /// Interchange binomials of D × [r]; optionally reduce and verify them.
    FiberGb {
        diagram: PathBuf,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long)]
        reduce: bool,
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
    },
    /// Interchange binomials plus linear relations for the multi-Rees algebra.
    ReesGb {
        diagram: PathBuf,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
    },
    /// Brute-force kernel of the fiber or Rees map of r copies of a diagram.
    Oracle {
        diagram: PathBuf,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long, value_enum, default_value_t = MapArg::Fiber)]
        map: MapArg,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
        #[arg(long)]
        reduced_gb: bool,
    },
    /// Brute-force fiber kernel of a collection of (possibly different) diagrams.
    MultiOracle {
        #[arg(required = true)]
        diagrams: Vec<PathBuf>,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
        #[arg(long)]
        reduced_gb: bool,
    },
    /// Bounded check of the strong ℓ-exchange property for a collection of diagrams.
    Exchange {
        #[arg(required = true)]
        diagrams: Vec<PathBuf>,
        #[arg(long, default_value_t = 3)]
        weight_bound: u32,
    },
    /// Run the built-in regressions on the bundled fixtures.
    Regressions,
}

/// A command's result: structured payload plus text rendering and outcome.
struct Output {
    json: Value,
    text: String,
    ok: bool,
}

enum Failure {
    Input(String),
    Limit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Limit(_) => Failure::Limit(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type CmdResult = Result<Output, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_diagram(path: &Path) -> Result<FerrersDiagram, Failure> {
    FerrersDiagram::from_json(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_collection(paths: &[PathBuf]) -> Result<DiagramCollection, Failure> {
    let ds = paths.iter().map(|p| load_diagram(p)).collect::<Result<Vec<_>, _>>()?;
    Ok(DiagramCollection::new(ds)?)
}

impl Common {
    fn oracle_budget(&self) -> OracleBudget {
        OracleBudget { max_monomials: self.max_monomials, groebner: self.gb_budget() }
    }

    fn gb_budget(&self) -> Budget {
        Budget { max_degree: self.max_gb_degree, max_basis: self.max_basis, ..Budget::default() }
    }

    fn order_for(&self, kind: MapKind) -> MonomialOrder {
        match (self.order, kind) {
            (OrderArg::PlainLexT, _) => MonomialOrder::PlainLexT,
            (OrderArg::Product, _) | (OrderArg::Sigma, MapKind::Rees) => MonomialOrder::Product,
            (OrderArg::Sigma, MapKind::Fiber) => MonomialOrder::SigmaLex,
        }
    }
}

fn points_json(points: impl IntoIterator<Item = impl AsRef<[u32]>>) -> Value {
    Value::Array(points.into_iter().map(|p| json!(p.as_ref())).collect())
}

fn basis_output(inst: &ToricInstance, b: &BinomialBasis) -> (Value, String) {
    let u = inst.universe();
    let rendered: Vec<String> = b.elements().iter().map(|e| u.render_binomial(b.order(), e)).collect();
    let hist: Value = b.degree_histogram().iter().map(|(d, c)| (d.to_string(), json!(c))).collect::<serde_json::Map<_, _>>().into();
    let mut text = rendered.join("\n");
    if !text.is_empty() {
        text.push('\n');
    }
    let summary: Vec<String> = b.degree_histogram().iter().map(|(d, c)| format!("{c} of degree {d}")).collect();
    text.push_str(&format!("# {} binomials ({})\n", b.len(), summary.join(", ")));
    (
        json!({
            "order": b.order(),
            "size": b.len(),
            "degree_histogram": hist,
            "initial_squarefree": initial_squarefree(b),
            "binomials": rendered,
        }),
        text,
    )
}

fn report_text(rep: &VerificationReport) -> String {
    let mut s = format!(
        "sound: {}\ngb_closed: {}\ncomplete_at_degree_{}: {}\n",
        rep.sound, rep.gb_closed, rep.max_degree, rep.complete_at_degree
    );
    for w in &rep.failing_witnesses {
        s.push_str(&format!("  {w}\n"));
    }
    s.push_str(&format!("verified: {}\n", rep.passed()));
    s
}

fn closure(path: &Path) -> CmdResult {
    let d = load_diagram(path)?;
    let pts: Vec<Vec<u32>> = d.points().map(|p| p.coords().to_vec()).collect();
    let max: Vec<Vec<u32>> = d.maximal_points().iter().map(|p| p.coords().to_vec()).collect();
    let show = |v: &[Vec<u32>]| v.iter().map(|p| pt(p).to_string()).collect::<Vec<_>>().join(" ");
    Ok(Output {
        text: format!(
            "dimension: {}\npoints ({}): {}\nmaximal ({}): {}\n",
            d.dimension(),
            pts.len(),
            show(&pts),
            max.len(),
            show(&max)
        ),
        json: json!({"dimension": d.dimension(), "size": pts.len(), "points": points_json(&pts), "maximal_points": points_json(&max)}),
        ok: true,
    })
}

fn check(path: &Path) -> CmdResult {
    let d = load_diagram(path)?;
    let w = d.standardizability_witness();
    let mut text = format!("size: {}\nrectangular: {}\nstandardizable: {}\n", d.len(), d.is_rectangular(), w.is_none());
    if let Some(w) = &w {
        text.push_str(&format!("witness: a={} b={} k={} missing={}\n", w.a, w.b, w.k, w.missing));
    }
    Ok(Output {
        json: json!({"size": d.len(), "rectangular": d.is_rectangular(), "standardizable": w.is_none(), "witness": w}),
        text,
        ok: true,
    })
}

fn standardize(path: &Path) -> CmdResult {
    let t = Tableau::parse(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let sorted = t.sort_rows();
    let s = sorted.standardize()?;
    Ok(Output {
        text: s.to_string(),
        json: json!({"was_semi_standard": t.is_semi_standard(), "was_standard": sorted == s && t == sorted, "rows": s.rows()}),
        ok: true,
    })
}

fn fiber_gb(c: &Common, path: &Path, r: u32, reduce: bool, verify: bool, d: u32) -> CmdResult {
    let diagram = load_diagram(path)?;
    let inst = ToricInstance::fiber(&diagram, r)?;
    let order = c.order_for(MapKind::Fiber);
    let mut cand = BinomialBasis::new(order, fiber_candidate(&diagram, r)?.into_elements());
    if reduce {
        cand = inter_reduce(&cand);
    }
    let (mut j, mut text) = basis_output(&inst, &cand);
    let mut ok = true;
    if verify {
        let rep = verify_candidate(&cand, &inst, d, &c.oracle_budget())?;
        text.push_str(&report_text(&rep));
        ok = rep.passed();
        j["verification"] = serde_json::to_value(&rep).expect("serializable");
    }
    Ok(Output { json: j, text, ok })
}

fn rees_gb(c: &Common, path: &Path, r: u32, verify: bool, d: u32) -> CmdResult {
    let diagram = load_diagram(path)?;
    let pc = rees_candidate(&diagram, r)?;
    let order = c.order_for(MapKind::Rees);
    let cand = BinomialBasis::new(order, pc.rees_candidate.into_elements());
    let (mut j, mut text) = basis_output(&pc.instance, &cand);
    j["fiber_part"] = json!(pc.fiber_part.len());
    j["linear_part"] = json!(pc.linear_part.len());
    let mut ok = true;
    if verify {
        let rep = verify_candidate(&cand, &pc.instance, d, &c.oracle_budget())?;
        text.push_str(&report_text(&rep));
        ok = rep.passed();
        j["verification"] = serde_json::to_value(&rep).expect("serializable");
    }
    Ok(Output { json: j, text, ok })
}

fn run_oracle(c: &Common, inst: &ToricInstance, d: u32, reduced: bool) -> CmdResult {
    let order = c.order_for(inst.kind());
    if reduced {
        let kb = reduced_kernel_gb(inst, order, d, &c.oracle_budget())?;
        let (mut j, mut text) = basis_output(inst, &kb.basis);
        j["stable"] = json!(kb.stable);
        text.push_str(&format!("# stable at degree {}: {}\n", d + 1, kb.stable));
        Ok(Output { json: j, text, ok: true })
    } else {
        let k = kernel_binomials(inst, order, d, &c.oracle_budget())?;
        let (j, text) = basis_output(inst, &k);
        Ok(Output { json: j, text, ok: true })
    }
}

fn exchange(paths: &[PathBuf], w: u32) -> CmdResult {
    let coll = load_collection(paths)?;
    let ideals = IdealCollection::from_diagrams(&coll);
    let rep = check_strong_l_exchange(&ideals, w)?;
    let mut text = format!("strong exchange up to weight {w}: {}\nconfigurations checked: {}\n", rep.holds, rep.configurations);
    if let Some(ce) = &rep.counterexample {
        let show = |fs: &[ferrers_core::exchange::Factor]| {
            fs.iter()
                .map(|f| {
                    let g = &ideals.components()[f.component].generators[f.index];
                    let vars: Vec<String> =
                        g.vars().filter_map(|v| v.x_parts()).map(|(i, j)| format!("x[{i},{j}]")).collect();
                    format!("I{}:{}", f.component + 1, vars.join("*"))
                })
                .collect::<Vec<_>>()
                .join(" · ")
        };
        let (i, j) = ideals.variables()[ce.q - 1].x_parts().expect("x-variable");
        text.push_str(&format!(
            "counterexample: weights {:?}\n  u = {}\n  v = {}\n  q = {} (x[{i},{j}])\n",
            ce.weights,
            show(&ce.u_factors),
            show(&ce.v_factors),
            ce.q
        ));
    }
    Ok(Output { json: serde_json::to_value(&rep).expect("serializable"), ok: rep.holds, text })
}

/// One built-in regression.
struct Item {
    name: &'static str,
    expected: String,
    got: String,
}

fn regression_suite(c: &Common) -> CmdResult {
    let budget = c.oracle_budget();
    let mut items: Vec<Item> = Vec::new();

    let sigma = sigma_cmp(&pt(&[1, 2]), &pt(&[2, 1]))?;
    items.push(Item { name: "σ order: (1,2) vs (2,1)", expected: "Greater".into(), got: format!("{sigma:?}") });

    let a = Tableau::parse(fixtures::SEMI_STANDARD_12X5)?;
    let b = Tableau::parse(fixtures::STANDARD_12X5)?;
    let s = a.standardize()?;
    items.push(Item { name: "12x5 tableau standardizes to the listed standard tableau", expected: "equal".into(), got: if s == b { "equal".into() } else { format!("differs:\n{s}") } });

    let small = fixtures::smallest_standardizable_3d();
    items.push(Item {
        name: "20-point 3D diagram is standardizable",
        expected: "20 points, standardizable".into(),
        got: format!("{} points, {}", small.len(), if small.is_standardizable() { "standardizable" } else { "not standardizable" }),
    });

    let ex = fixtures::nonstandardizable_4d();
    items.push(Item {
        name: "95-point 4D diagram is not standardizable",
        expected: "95 points, not standardizable".into(),
        got: format!("{} points, {}", ex.len(), if ex.is_standardizable() { "standardizable" } else { "not standardizable" }),
    });

    let inst = ToricInstance::fiber(&ex, 1)?;
    for order in [MonomialOrder::SigmaLex, MonomialOrder::PlainLexT] {
        let kb = reduced_kernel_gb(&inst, order, 3, &budget)?;
        items.push(Item {
            name: if order == MonomialOrder::SigmaLex {
                "95-point 4D diagram: cubic elements of the reduced fiber basis (σ)"
            } else {
                "95-point 4D diagram: cubic elements of the reduced fiber basis (plain lex)"
            },
            expected: "25 cubics, stable".into(),
            got: format!("{} cubics, {}", kb.basis.count_of_degree(3), if kb.stable { "stable" } else { "unstable" }),
        });
    }
    let cand = fiber_candidate(&ex, 1)?;
    let rep = verify_candidate(&cand, &inst, 3, &budget)?;
    items.push(Item {
        name: "95-point 4D diagram: interchange binomials miss degree-3 kernel elements",
        expected: "sound, incomplete at degree 3".into(),
        got: format!(
            "{}, {} at degree 3",
            if rep.sound { "sound" } else { "unsound" },
            if rep.complete_at_degree { "complete" } else { "incomplete" }
        ),
    });

    let mixed = ToricInstance::new(fixtures::mixed_pair(), MapKind::Fiber);
    let kb = reduced_kernel_gb(&mixed, MonomialOrder::SigmaLex, 3, &budget)?;
    items.push(Item {
        name: "two different planar diagrams: cubic elements of the joint fiber basis",
        expected: "4 cubics".into(),
        got: format!("{} cubics", kb.basis.count_of_degree(3)),
    });

    let small_fiber = fiber_candidate(&small, 1)?;
    items.push(Item {
        name: "20-point 3D diagram: interchange binomials form a Gröbner basis",
        expected: "true".into(),
        got: is_groebner(&small_fiber).is_groebner.to_string(),
    });

    let ok = items.iter().all(|i| i.expected == i.got);
    let text: String = items
        .iter()
        .map(|i| {
            if i.expected == i.got {
                format!("PASS  {}: {}\n", i.name, i.got)
            } else {
                format!("FAIL  {}: expected {}, got {}\n", i.name, i.expected, i.got)
            }
        })
        .collect();
    let json = json!({
        "passed": ok,
        "items": items.iter().map(|i| json!({"name": i.name, "expected": i.expected, "got": i.got, "pass": i.expected == i.got})).collect::<Vec<_>>(),
    });
    Ok(Output { json, text, ok })
}

fn dispatch(cli: &Cli) -> CmdResult {
    let c = &cli.common;
    match &cli.command {
        Command::Closure { diagram } => closure(diagram),
        Command::Check { diagram } => check(diagram),
        Command::Standardize { tableau } => standardize(tableau),
        Command::FiberGb { diagram, r, reduce, verify, max_degree } => fiber_gb(c, diagram, *r, *reduce, *verify, *max_degree),
        Command::ReesGb { diagram, r, verify, max_degree } => rees_gb(c, diagram, *r, *verify, *max_degree),
        Command::Oracle { diagram, r, map, max_degree, reduced_gb } => {
            let d = load_diagram(diagram)?;
            let inst = match map {
                MapArg::Fiber => ToricInstance::fiber(&d, *r)?,
                MapArg::Rees => ToricInstance::rees(&d, *r)?,
            };
            run_oracle(c, &inst, *max_degree, *reduced_gb)
        }
        Command::MultiOracle { diagrams, max_degree, reduced_gb } => {
            let inst = ToricInstance::new(load_collection(diagrams)?, MapKind::Fiber);
            run_oracle(c, &inst, *max_degree, *reduced_gb)
        }
        Command::Exchange { diagrams, weight_bound } => exchange(diagrams, *weight_bound),
        Command::Regressions => regression_suite(c),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Closure { .. } => "closure",
        Command::Check { .. } => "check",
        Command::Standardize { .. } => "standardize",
        Command::FiberGb { .. } => "fiber-gb",
        Command::ReesGb { .. } => "rees-gb",
        Command::Oracle { .. } => "oracle",
        Command::MultiOracle { .. } => "multi-oracle",
        Command::Exchange { .. } => "exchange",
        Command::Regressions => "regressions",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(out) => {
            match cli.common.format {
                Format::Text => print!("{}", out.text),
                Format::Json => {
                    let mut obj = serde_json::Map::new();
                    obj.insert("schema".into(), json!(SCHEMA));
                    obj.insert("command".into(), json!(command_name(&cli.command)));
                    obj.insert("ok".into(), json!(out.ok));
                    obj.insert("result".into(), out.json);
                    println!("{}", serde_json::to_string_pretty(&Value::Object(obj)).expect("serializable"));
                }
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Limit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
