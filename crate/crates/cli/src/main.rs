use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use gnd_cli::checks::{self, Tier};
use gnd_cli::report::VerificationReport;
use gnd_cli::tables;
use gnd_core::{
    gc_number, kappa, product_bounds, t_g_formula, t_g_oracle, DiagMethod, DiagnosabilityResult,
    FamilySpec, GcKind, GcValue, GnCutResult, Graph, TgValue, DEFAULT_VERTEX_CAP,
};
use serde_json::json;
use std::path::PathBuf;
use std::sync::mpsc;
use std::time::Duration;

#[derive(Parser)]
#[command(
    name = "gnd",
    about = "Good-neighbor connectivity, cut-component numbers, and PMC diagnosability"
)]
struct Cli {
    /// Worker threads for the searches (0 = all cores). The GND_WORKERS
    /// environment variable overrides this flag.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,

    /// Output format: text, json, or csv (reports only)
    #[arg(long, global = true, default_value = "text")]
    format: String,

    /// Cap on constructed graph orders
    #[arg(long, global = true, default_value_t = DEFAULT_VERTEX_CAP)]
    vertex_cap: usize,

    /// Abort a verify/tables run after this many seconds (0 = no limit)
    #[arg(long, global = true, default_value_t = 0)]
    timeout_seconds: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// Edge-list file to analyze
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    /// Inline family spec, e.g. grid:5x5, F:9,3, prod(D:4,path:5)
    #[arg(long)]
    family: Option<String>,
}

impl Source {
    fn load(&self, cap: usize) -> Result<(String, Graph)> {
        match (&self.graph, &self.family) {
            (Some(path), None) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                let g = Graph::parse_edge_list(&text)?;
                if g.n() > cap {
                    bail!("graph has {} vertices, exceeding the cap of {cap}", g.n());
                }
                Ok((path.display().to_string(), g))
            }
            (None, Some(spec)) => {
                let spec: FamilySpec = spec.parse()?;
                let g = spec.build(cap)?;
                Ok((spec.to_string(), g))
            }
            _ => bail!("exactly one of --graph or --family is required"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a named family and print it in the edge-list format
    Gen {
        /// Family kind: path, cycle, clique, grid, torus, gen-hypercube,
        /// D, F, H, or product
        kind: String,
        /// Kind-specific integer parameters (product takes two specs)
        params: Vec<String>,
    },
    /// g-good-neighbor connectivity with witness
    Kappa {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0)]
        g: usize,
        /// Largest cut size searched (default: the graph order)
        #[arg(long)]
        cap: Option<usize>,
    },
    /// g-good-neighbor cut-component number with certificate
    Gc {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0)]
        g: usize,
        /// Largest certificate value searched (default: the graph order)
        #[arg(long)]
        budget: Option<usize>,
    },
    /// g-good-neighbor diagnosability via the cut-component formula
    Tg {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0)]
        g: usize,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// g-good-neighbor diagnosability by exhaustive pair enumeration
    TgOracle {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0)]
        g: usize,
        /// Largest graph order the oracle accepts
        #[arg(long, default_value_t = 12)]
        oracle_cap: usize,
    },
    /// Per-split diagnosability upper bounds for a Cartesian product
    ProductBounds {
        /// First factor (inline family spec)
        #[arg(long)]
        factor_g: String,
        /// Second factor (inline family spec)
        #[arg(long)]
        factor_h: String,
        #[arg(long, default_value_t = 0)]
        g: usize,
        #[arg(long, default_value_t = 64)]
        budget: usize,
    },
    /// Run the verification suite over the built-in corpus
    Verify {
        #[arg(long, default_value = "fast")]
        tier: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Recompute the headline network values and compare
    Tables {
        #[arg(long, default_value = "fast")]
        tier: String,
    },
}

fn main() {
    let cli = Cli::parse();
    let workers = std::env::var("GND_WORKERS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(cli.workers);
    if workers > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global();
    }
    let json = cli.format == "json";
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            if json {
                println!("{}", json!({ "error": e.to_string() }));
            } else {
                eprintln!("error: {e}");
            }
            std::process::exit(2);
        }
    }
}

fn witness_json(w: &gnd_core::VertexSet) -> serde_json::Value {
    json!(w.to_vec())
}

fn tg_json(g: usize, r: &DiagnosabilityResult) -> serde_json::Value {
    let method = match r.method {
        DiagMethod::Formula => "formula",
        DiagMethod::Oracle => "oracle",
        DiagMethod::Bound => "bound",
    };
    let (value, bound) = match &r.value {
        TgValue::Exact(v) => (json!(v), json!(null)),
        TgValue::Nonexistent => (json!(null), json!(null)),
        TgValue::BoundOnly { upper } => (json!(null), json!(upper)),
    };
    let witness = r.witness.as_ref().map(|(f1, f2)| {
        json!({ "f1": f1.to_vec(), "f2": f2.to_vec() })
    });
    json!({
        "g": g,
        "value": value,
        "method": method,
        "bound": bound,
        "exists": r.value != TgValue::Nonexistent,
        "witness": witness,
    })
}

fn tg_text(r: &DiagnosabilityResult) -> String {
    let method = match r.method {
        DiagMethod::Formula => "formula",
        DiagMethod::Oracle => "oracle",
        DiagMethod::Bound => "bound",
    };
    match &r.value {
        TgValue::Exact(v) => format!("t^g = {v} ({method})"),
        TgValue::Nonexistent => format!("t^g does not exist ({method})"),
        TgValue::BoundOnly { upper } => format!("t^g <= {upper} (bound only)"),
    }
}

fn run(cli: Cli) -> Result<i32> {
    let json = cli.format == "json";
    match cli.command {
        Command::Gen { kind, params } => {
            let spec = gen_spec(&kind, &params)?;
            let g = spec.build(cli.vertex_cap)?;
            print!("{}", g.to_edge_list());
            Ok(0)
        }
        Command::Kappa { source, g, cap } => {
            let (_, graph) = source.load(cli.vertex_cap)?;
            let cap = cap.unwrap_or(graph.n());
            let r = kappa(&graph, g, cap)?;
            if json {
                let v = match &r {
                    GnCutResult::Exists { value, witness } => json!({
                        "g": g, "value": value, "status": "exact",
                        "witness": witness_json(witness),
                    }),
                    GnCutResult::Nonexistent => {
                        json!({ "g": g, "value": null, "status": "nonexistent", "witness": null })
                    }
                    GnCutResult::AboveCap { cap } => json!({
                        "g": g, "value": null, "status": "above-cap", "cap": cap,
                        "witness": null,
                    }),
                };
                println!("{v}");
            } else {
                match r {
                    GnCutResult::Exists { value, witness } => {
                        println!("kappa^{g} = {value}, witness {:?}", witness.to_vec())
                    }
                    GnCutResult::Nonexistent => println!("kappa^{g} does not exist"),
                    GnCutResult::AboveCap { cap } => println!("kappa^{g} > {cap} (cap reached)"),
                }
            }
            Ok(0)
        }
        Command::Gc { source, g, budget } => {
            let (_, graph) = source.load(cli.vertex_cap)?;
            let budget = budget.unwrap_or(graph.n());
            let r = gc_number(&graph, g, budget)?;
            if json {
                let class = r.class.map(|c| match c {
                    gnd_core::GraphClass::G1 => "G1",
                    gnd_core::GraphClass::G2 => "G2",
                });
                let (kind, cut, part, part_b) = match &r.certificate {
                    Some(cert) => match &cert.kind {
                        GcKind::Component { component } => (
                            Some("component"),
                            json!(cert.cut.to_vec()),
                            json!(component.to_vec()),
                            json!([]),
                        ),
                        GcKind::Partition { a, b } => (
                            Some("partition"),
                            json!(cert.cut.to_vec()),
                            json!(a.to_vec()),
                            json!(b.to_vec()),
                        ),
                    },
                    None => (None, json!(null), json!(null), json!(null)),
                };
                println!(
                    "{}",
                    json!({
                        "g": g,
                        "value": r.value.exact(),
                        "class": class,
                        "cut": cut,
                        "kind": kind,
                        "part": part,
                        "part_b": part_b,
                        "budget_exhausted": matches!(r.value, GcValue::AboveBudget { .. }),
                    })
                );
            } else {
                match &r.value {
                    GcValue::Exact(v) => {
                        let cert = r.certificate.as_ref().expect("exact value has certificate");
                        let kind = match &cert.kind {
                            GcKind::Component { component } => {
                                format!("component {:?}", component.to_vec())
                            }
                            GcKind::Partition { a, b } => {
                                format!("partition A={:?} B={:?}", a.to_vec(), b.to_vec())
                            }
                        };
                        println!(
                            "c^{g} = {v} (class {:?}), cut {:?}, {kind}",
                            r.class.unwrap(),
                            cert.cut.to_vec()
                        );
                    }
                    GcValue::Nonexistent => println!("c^{g} does not exist"),
                    GcValue::AboveBudget { lower_bound } => {
                        println!("c^{g} >= {lower_bound} (budget {budget} exhausted)")
                    }
                }
            }
            Ok(0)
        }
        Command::Tg { source, g, budget } => {
            let (_, graph) = source.load(cli.vertex_cap)?;
            let budget = budget.unwrap_or(graph.n());
            let r = t_g_formula(&graph, g, budget)?;
            if json {
                println!("{}", tg_json(g, &r));
            } else {
                println!("{}", tg_text(&r));
            }
            Ok(0)
        }
        Command::TgOracle {
            source,
            g,
            oracle_cap,
        } => {
            let (_, graph) = source.load(cli.vertex_cap)?;
            let r = t_g_oracle(&graph, g, oracle_cap)?;
            if json {
                println!("{}", tg_json(g, &r));
            } else {
                println!("{}", tg_text(&r));
            }
            Ok(0)
        }
        Command::ProductBounds {
            factor_g,
            factor_h,
            g,
            budget,
        } => {
            let fg: FamilySpec = factor_g.parse()?;
            let fh: FamilySpec = factor_h.parse()?;
            let gg = fg.build(cli.vertex_cap)?;
            let gh = fh.build(cli.vertex_cap)?;
            let report = product_bounds(&gg, &gh, g, budget)?;
            if json {
                let splits: Vec<_> = report
                    .splits
                    .iter()
                    .map(|s| {
                        json!({
                            "p": s.p,
                            "q": s.q,
                            "case": s.case.map(|c| c.to_string()),
                            "bound": s.bound,
                            "hypotheses_ok": s.hypotheses_ok,
                            "reasons": s.reasons,
                        })
                    })
                    .collect();
                println!("{}", json!({ "g": g, "splits": splits }));
            } else {
                println!("t^{g}({fg} x {fh}) upper bounds per split:");
                for s in &report.splits {
                    match (&s.case, s.bound) {
                        (Some(c), Some(b)) => println!(
                            "  p={} q={}: case ({c}) bound {b}{}",
                            s.p,
                            s.q,
                            if s.reasons.is_empty() {
                                String::new()
                            } else {
                                format!("  [{}]", s.reasons)
                            }
                        ),
                        _ => println!("  p={} q={}: hypotheses fail: {}", s.p, s.q, s.reasons),
                    }
                }
            }
            Ok(0)
        }
        Command::Verify { tier, seed } => {
            let tier: Tier = tier.parse().map_err(|e: String| anyhow!(e))?;
            let checks = with_timeout(cli.timeout_seconds, move || {
                checks::run_verify(seed, tier)
            })?;
            let report = VerificationReport::new(checks);
            match cli.format.as_str() {
                "json" => println!("{}", report.to_json()),
                "csv" => print!("{}", report.to_csv()),
                _ => print!("{}", report.to_text()),
            }
            Ok(if report.failed() == 0 { 0 } else { 1 })
        }
        Command::Tables { tier } => {
            let tier: Tier = tier.parse().map_err(|e: String| anyhow!(e))?;
            let (rows, records) =
                with_timeout(cli.timeout_seconds, move || tables::run_tables(tier))?;
            let report = VerificationReport::new(records);
            match cli.format.as_str() {
                "json" => println!("{}", report.to_json()),
                "csv" => print!("{}", report.to_csv()),
                _ => print!("{}", tables::render_text(&rows)),
            }
            Ok(if report.failed() == 0 { 0 } else { 1 })
        }
    }
}

/// Runs `f` on a worker thread, abandoning it if the limit passes.
fn with_timeout<T: Send + 'static>(
    seconds: u64,
    f: impl FnOnce() -> T + Send + 'static,
) -> Result<T> {
    if seconds == 0 {
        return Ok(f());
    }
    let (tx, rx) = mpsc::channel();
    std::thread::spawn(move || {
        let _ = tx.send(f());
    });
    rx.recv_timeout(Duration::from_secs(seconds))
        .map_err(|_| anyhow!("timed out after {seconds} seconds"))
}

fn gen_spec(kind: &str, params: &[String]) -> Result<FamilySpec> {
    let ints: Vec<u32> = params
        .iter()
        .take_while(|p| p.chars().all(|c| c.is_ascii_digit()))
        .map(|p| p.parse().unwrap())
        .collect();
    let want = |k: usize| -> Result<()> {
        if ints.len() == k && params.len() == k {
            Ok(())
        } else {
            bail!("`{kind}` expects {k} integer parameter(s)")
        }
    };
    match kind {
        "path" => {
            want(1)?;
            Ok(FamilySpec::Path(ints[0]))
        }
        "cycle" => {
            want(1)?;
            Ok(FamilySpec::Cycle(ints[0]))
        }
        "clique" => {
            want(1)?;
            Ok(FamilySpec::Clique(ints[0]))
        }
        "grid" => {
            want(2)?;
            Ok(FamilySpec::Grid(ints[0], ints[1]))
        }
        "torus" => {
            want(2)?;
            Ok(FamilySpec::Torus(ints[0], ints[1]))
        }
        "gen-hypercube" | "ghc" => {
            want(2)?;
            Ok(FamilySpec::GenHypercube(ints[0], ints[1]))
        }
        "D" | "d" => {
            want(1)?;
            Ok(FamilySpec::D(ints[0]))
        }
        "F" | "f" => {
            want(2)?;
            Ok(FamilySpec::F {
                n: ints[0],
                g: ints[1],
            })
        }
        "H" | "h" => {
            want(3)?;
            Ok(FamilySpec::H {
                n: ints[0],
                r: ints[1],
                g: ints[2],
            })
        }
        "product" | "prod" => {
            if params.len() != 2 {
                bail!("`product` expects two family specs");
            }
            let a: FamilySpec = params[0].parse()?;
            let b: FamilySpec = params[1].parse()?;
            Ok(FamilySpec::Product(Box::new(a), Box::new(b)))
        }
        other => bail!("unknown family kind `{other}`"),
    }
}
