use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ore_diamond::classify::normalize_and_classify;
use ore_diamond::config::{field_from_spec, RunConfig};
use ore_diamond::diamond::{check_monoid_commutativity, truncated_oracle, MasterKind};
use ore_diamond::field::{BaseField, Field, FieldConfig, QMode};
use ore_diamond::parse::{format_poly, format_ratx, format_skew, parse_ratx, parse_scalar, parse_skew, scalar_expr};
use ore_diamond::presentation::{check_irrepresentation, find_presentations, irreducible_presentation, PresentationSummary};
use ore_diamond::ratfunc::{PolyX, RatX};
use ore_diamond::reproduce::{self, ReproduceOptions, CRITERIA};
use ore_diamond::skew::{SkewPoly, SkewRing};
use ore_diamond::spectra::{
    frobenius_nonspecial_witness, is_special_for, orbit, special_product, Action, MaxIdeal, OrbitReportJson, OrbitStatus, Speciality,
};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "ore-diamond", version, about = "Exact arithmetic in k[X]_(X)[theta; alpha] with alpha(X) = qX")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Global {
    /// q (symbolic), q:<rational>, fp:<p> or gf:<p>^<m>
    #[arg(long, global = true, env = "ORE_DIAMOND_FIELD", default_value = "q")]
    field: String,
    /// Value of q
    #[arg(long, global = true, env = "ORE_DIAMOND_Q", allow_hyphen_values = true)]
    q: Option<String>,
    /// Characteristic: 0 or a prime
    #[arg(long = "char", global = true, env = "ORE_DIAMOND_CHAR", default_value_t = 0)]
    characteristic: u32,
    #[arg(long, global = true, env = "ORE_DIAMOND_DEGREE_BOUND")]
    degree_bound: Option<usize>,
    /// Comma-separated primes for modular certification
    #[arg(long, global = true, env = "ORE_DIAMOND_PRIMES", value_delimiter = ',')]
    primes: Option<Vec<u32>>,
    /// X-adic precision of the truncated oracle
    #[arg(long, global = true, env = "ORE_DIAMOND_PREC")]
    prec: Option<usize>,
    #[arg(long, global = true, env = "ORE_DIAMOND_THREADS")]
    threads: Option<usize>,
    #[arg(long, global = true, env = "ORE_DIAMOND_JSON")]
    json: bool,
    #[arg(long, global = true, env = "ORE_DIAMOND_SEED")]
    seed: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Ansatz {
    Left,
    Right,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ActionArg {
    QShift,
    Frobenius,
}

#[derive(Subcommand)]
enum Cmd {
    /// Product a * b
    Mul { a: String, b: String },
    /// Right division a = quot * b + rem
    Divr { a: String, b: String },
    /// Left division a = b * quot + rem
    Divl { a: String, b: String },
    /// Greatest common right divisor
    Gcrd { a: String, b: String },
    /// Least common left multiple
    Lclm { a: String, b: String },
    /// Shape (A), (B), (C) of an element of S
    Classify { z: String },
    /// Presentations of f relative to a split g
    Present {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long, default_value = "q")]
        xi: String,
    },
    /// Does c b factor as b' c' with shapes (B, C)?
    Check {
        #[arg(long, default_value = reproduce::V)]
        c: String,
        #[arg(long, default_value = reproduce::W)]
        b: String,
    },
    /// Brute-force X-adic search for the unknown of each ansatz
    Oracle {
        #[arg(long, default_value = reproduce::V)]
        c: String,
        #[arg(long, default_value = reproduce::W)]
        b: String,
        #[arg(long, value_enum, default_value = "both")]
        ansatz: Ansatz,
        /// Count truncations agreeing with a rational function of this degree bound
        #[arg(long)]
        rational_filter: Option<usize>,
        /// Allow non-unit t for the right ansatz
        #[arg(long)]
        allow_nonunit: bool,
    },
    /// Orbit of a maximal ideal of k[X]
    Orbit {
        /// Root w of <X - w>
        #[arg(long, conflicts_with = "generator")]
        root: Option<String>,
        /// Monic irreducible generator
        #[arg(long)]
        generator: Option<String>,
        #[arg(long, value_enum, default_value = "q-shift")]
        action: ActionArg,
        #[arg(long, default_value_t = 50)]
        bound: usize,
    },
    /// Is a a alpha(a) ... alpha^(n-1)(a) in X^m k[X]_(X) for some n?
    Special {
        #[arg(long)]
        a: String,
        #[arg(long)]
        m: i64,
        #[arg(long, default_value_t = 64)]
        n_max: usize,
    },
    /// Orbit-counting refutation of speciality over GF(p^m), Frobenius action
    FrobeniusWitness {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        m: u32,
        /// Polynomial in X; q denotes the primitive element
        #[arg(long)]
        candidate: String,
        #[arg(long, default_value_t = 1 << 20)]
        budget: usize,
    },
    /// Run the acceptance checks and print a pass/fail manifest
    #[command(name = "reproduce-paper")]
    Reproduce {
        /// Comma-separated criterion numbers (default: all, or 2 alone with --char 2)
        #[arg(long, value_delimiter = ',')]
        criteria: Option<Vec<u8>>,
        /// Also refute at degree bound 4
        #[arg(long)]
        extended: bool,
    },
}

/// Successful output, plus whether the result is a refutation.
struct Output {
    text: String,
    value: Value,
    refuted: bool,
    failed: bool,
}

impl Output {
    fn ok(text: String, value: Value) -> Self {
        Output { text, value, refuted: false, failed: false }
    }
}

type CliResult = Result<Output, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn skew(text: &str, ring: &SkewRing) -> Result<SkewPoly, String> {
    parse_skew(text, ring).map_err(|e| format!("`{text}`: {e}"))
}

fn poly(text: &str, ring: &SkewRing) -> Result<PolyX, String> {
    let r = parse_ratx(text, ring).map_err(|e| format!("`{text}`: {e}"))?;
    if !r.is_poly() {
        return Err(format!("`{text}` is not a polynomial in X"));
    }
    let inv = r.den().coeffs()[0].inv().expect("nonzero");
    Ok(r.num().scale(&inv))
}

fn binary(cmd: &Cmd, ring: &SkewRing) -> CliResult {
    let (Cmd::Mul { a, b } | Cmd::Divr { a, b } | Cmd::Divl { a, b } | Cmd::Gcrd { a, b } | Cmd::Lclm { a, b }) = cmd else {
        unreachable!()
    };
    let (a, b) = (skew(a, ring)?, skew(b, ring)?);
    let single = |p: SkewPoly| {
        let s = format_skew(&p);
        Output::ok(s.clone(), json!({ "result": s }))
    };
    let division = |(quot, rem): (SkewPoly, SkewPoly)| {
        let (q, r) = (format_skew(&quot), format_skew(&rem));
        Output::ok(format!("quotient: {q}\nremainder: {r}"), json!({ "quotient": q, "remainder": r }))
    };
    Ok(match cmd {
        Cmd::Mul { .. } => single(ring.mul(&a, &b)),
        Cmd::Divr { .. } => division(ring.right_divide(&a, &b).map_err(err)?),
        Cmd::Divl { .. } => division(ring.left_divide(&a, &b).map_err(err)?),
        Cmd::Gcrd { .. } => single(ring.gcrd(&a, &b).map_err(err)?),
        Cmd::Lclm { .. } => single(ring.lclm(&a, &b).map_err(err)?),
        _ => unreachable!(),
    })
}

fn classify(z: &str, ring: &SkewRing) -> CliResult {
    let c = normalize_and_classify(&skew(z, ring)?).map_err(err)?;
    let (unit, normalized) = (format_ratx(&c.unit), format_skew(&c.normalized));
    Ok(Output::ok(
        format!("type: {}\nunit: {unit}\nnormalized: {normalized}", c.tag),
        json!({ "type": c.tag, "unit": unit, "normalized": normalized }),
    ))
}

fn present(f: &str, g: &str, xi: &str, ring: &SkewRing) -> CliResult {
    let cfg = ring.config();
    let (f, g) = (poly(f, ring)?, poly(g, ring)?);
    let xi = parse_scalar(xi, cfg).map_err(err)?;
    let all = find_presentations(&f, &g, &xi, cfg).map_err(err)?;
    let best = irreducible_presentation(&f, &g, &xi, cfg).map_err(err)?;
    let summaries: Vec<PresentationSummary> = all.iter().map(PresentationSummary::from).collect();
    let mut text = format!("{} presentation(s)\nirreducible: {}", all.len(), best.describe());
    text.push_str(&format!("\nirrepresentation holds: {}", check_irrepresentation(&best)));
    Ok(Output::ok(
        text,
        json!({
            "presentations": summaries,
            "irreducible": PresentationSummary::from(&best),
            "overlap": best.overlap(),
            "irrepresentation": check_irrepresentation(&best),
        }),
    ))
}

fn check(c: &str, b: &str, ring: &SkewRing, run: &RunConfig) -> CliResult {
    let (c, b) = (skew(c, ring)?, skew(b, ring)?);
    let report = check_monoid_commutativity(&c, &b, ring, &run.solve_options()).map_err(err)?;
    let mut text = format!("h = {}", format_skew(&report.h));
    for side in [&report.left, &report.right] {
        text.push_str(&format!("\n{}: {}", side.ansatz.name(), serde_json::to_value(side.status).map_err(err)?.as_str().unwrap_or("?")));
        if let Some(w) = &side.witness {
            text.push_str(&format!("\n  [{}] * [{}]", format_skew(&w.left), format_skew(&w.right)));
        }
        if !side.primes.is_empty() {
            text.push_str(&format!("\n  primes {:?}, degree bound {}", side.primes, side.bound.unwrap_or(0)));
        }
        for s in &side.skipped_branches {
            text.push_str(&format!("\n  skipped: {s}"));
        }
        for f in &side.regime_flags {
            text.push_str(&format!("\n  flag: {f}"));
        }
    }
    let refuted = report.refuted();
    Ok(Output { text, value: report.to_json(&ring.config().describe()), refuted, failed: false })
}

/// The fields the oracle runs over: the configured finite field, or each
/// configured prime when `q` is a fixed rational.
fn oracle_fields(cfg: &FieldConfig, run: &RunConfig) -> Result<Vec<FieldConfig>, String> {
    match (cfg.base(), cfg.q_mode()) {
        (_, QMode::Symbolic) => Err("the oracle needs a numeric q".into()),
        (BaseField::Finite(_), _) => Ok(vec![cfg.clone()]),
        (BaseField::Rationals, QMode::Explicit(q)) => run
            .primes
            .iter()
            .map(|p| field_from_spec(&format!("fp:{p}"), Some(&q.to_string()), 0).map_err(err))
            .collect(),
    }
}

fn oracle_cmd(c: &str, b: &str, ansatz: Ansatz, rational_filter: Option<usize>, allow_nonunit: bool, cfg: &FieldConfig, run: &RunConfig) -> CliResult {
    let kinds = match ansatz {
        Ansatz::Left => vec![MasterKind::LeftB1],
        Ansatz::Right => vec![MasterKind::RightDeg1],
        Ansatz::Both => vec![MasterKind::LeftB1, MasterKind::RightDeg1],
    };
    let opts = ore_diamond::diamond::OracleOptions { rational_filter, unit_right: !allow_nonunit, ..run.oracle_options() };
    let mut reports = Vec::new();
    let mut text = Vec::new();
    for f in oracle_fields(cfg, run)? {
        let ring = SkewRing::new(f);
        let h = ring.mul(&skew(c, &ring)?, &skew(b, &ring)?);
        for &kind in &kinds {
            let r = truncated_oracle(&h, kind, &ring, &opts).map_err(err)?;
            let mut line = format!("{} over {}: {} truncations at precision {}", kind.name(), r.field, r.truncations, r.prec);
            if let Some(n) = r.rational_consistent {
                line.push_str(&format!(", {n} rational-consistent"));
            }
            if !r.complete {
                line.push_str(" (incomplete)");
            }
            text.push(line);
            reports.push(r);
        }
    }
    Ok(Output::ok(text.join("\n"), json!({ "reports": reports })))
}

fn orbit_cmd(root: Option<&str>, generator: Option<&str>, action: ActionArg, bound: usize, ring: &SkewRing) -> CliResult {
    let cfg = ring.config();
    let action = match action {
        ActionArg::QShift => Action::QShift,
        ActionArg::Frobenius => Action::Frobenius,
    };
    let m = match (root, generator) {
        (Some(r), _) => MaxIdeal::new(PolyX::linear_root(&parse_scalar(r, cfg).map_err(err)?), action, cfg).map_err(err)?,
        (None, Some(g)) => MaxIdeal::new(poly(g, ring)?, action, cfg).map_err(err)?,
        (None, None) => return Err("give --root or --generator".into()),
    };
    if bound == 0 {
        return Err("--bound must be positive".into());
    }
    let r = OrbitReportJson::from(&orbit(&m, bound));
    let status = match r.status {
        OrbitStatus::Finite(n) => format!("finite orbit of size {n}"),
        OrbitStatus::Exceeded(n) => format!("orbit size exceeds {n}"),
    };
    Ok(Output::ok(format!("{}: {status}\n{}", r.representative, r.elements.join(" -> ")), json!(r)))
}

fn special_cmd(a: &str, m: i64, n_max: usize, ring: &SkewRing) -> CliResult {
    let a: RatX = parse_ratx(a, ring).map_err(err)?;
    let s = is_special_for(&a, m, n_max, ring.q()).map_err(err)?;
    let mut value = json!({ "m": m, "n_max": n_max, "result": s });
    let mut text = match s {
        Speciality::Yes(n) => format!("yes: n = {n}"),
        Speciality::NoUpTo(n) => format!("no up to n = {n}"),
    };
    if let Speciality::Yes(n) = s {
        let prod = format_ratx(&special_product(&a, n, ring.q()).map_err(err)?);
        text.push_str(&format!("\nproduct: {prod}"));
        value["product"] = json!(prod);
    }
    Ok(Output::ok(text, value))
}

fn frobenius_cmd(p: u32, m: u32, candidate: &str, budget: usize) -> CliResult {
    let cfg = FieldConfig::extension_with_generator(p, m).map_err(err)?;
    let ring = SkewRing::new(cfg.clone());
    let cand = poly(candidate, &ring)?;
    let w = frobenius_nonspecial_witness(&cand, &cfg, budget).map_err(err)?;
    let mut text = format!(
        "candidate {} of degree {} over GF({p}^{m}): {} Frobenius orbits of sizes {:?}",
        format_poly(&cand, "X", &scalar_expr),
        w.degree,
        w.orbits,
        w.orbit_sizes
    );
    if let Some(root) = &w.missed_orbit {
        text.push_str(&format!("\norbit of {root} contains no root of the candidate"));
    }
    text.push_str("\nnot special");
    Ok(Output { text, value: json!(w), refuted: w.refuted, failed: false })
}

fn reproduce_cmd(criteria: Option<Vec<u8>>, extended: bool, g: &Global, run: &RunConfig) -> CliResult {
    let ids = criteria.unwrap_or_else(|| if g.characteristic == 2 { vec![2] } else { CRITERIA.iter().map(|c| c.0).collect() });
    let defaults = ReproduceOptions::default();
    let opts = ReproduceOptions {
        seed: run.seed,
        degree_bound: g.degree_bound.unwrap_or(defaults.degree_bound),
        extended,
        primes: g.primes.clone().unwrap_or(defaults.primes),
        oracle_prec: g.prec.unwrap_or(defaults.oracle_prec),
    };
    let outcomes = reproduce::run_all(&ids, &opts);
    let text = outcomes
        .iter()
        .map(|o| {
            let mark = if o.passed { "PASS" } else { "FAIL" };
            let detail = if o.detail.is_empty() { String::new() } else { format!(": {}", o.detail) };
            format!("[{mark}] {} {} ({} ms){detail}", o.id, o.name, o.elapsed_ms)
        })
        .collect::<Vec<_>>()
        .join("\n");
    let failed = outcomes.iter().any(|o| !o.passed);
    Ok(Output { text, value: json!({ "options": opts, "criteria": outcomes }), refuted: false, failed })
}

fn run(cli: &Cli, run: &RunConfig) -> CliResult {
    let cfg = run.field_config().map_err(err)?;
    let ring = SkewRing::new(cfg.clone());
    match &cli.cmd {
        c @ (Cmd::Mul { .. } | Cmd::Divr { .. } | Cmd::Divl { .. } | Cmd::Gcrd { .. } | Cmd::Lclm { .. }) => binary(c, &ring),
        Cmd::Classify { z } => classify(z, &ring),
        Cmd::Present { f, g, xi } => present(f, g, xi, &ring),
        Cmd::Check { c, b } => check(c, b, &ring, run),
        Cmd::Oracle { c, b, ansatz, rational_filter, allow_nonunit } => {
            oracle_cmd(c, b, *ansatz, *rational_filter, *allow_nonunit, &cfg, run)
        }
        Cmd::Orbit { root, generator, action, bound } => orbit_cmd(root.as_deref(), generator.as_deref(), *action, *bound, &ring),
        Cmd::Special { a, m, n_max } => special_cmd(a, *m, *n_max, &ring),
        Cmd::FrobeniusWitness { p, m, candidate, budget } => frobenius_cmd(*p, *m, candidate, *budget),
        Cmd::Reproduce { criteria, extended } => reproduce_cmd(criteria.clone(), *extended, &cli.global, run),
    }
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Mul { .. } => "mul",
        Cmd::Divr { .. } => "divr",
        Cmd::Divl { .. } => "divl",
        Cmd::Gcrd { .. } => "gcrd",
        Cmd::Lclm { .. } => "lclm",
        Cmd::Classify { .. } => "classify",
        Cmd::Present { .. } => "present",
        Cmd::Check { .. } => "check",
        Cmd::Oracle { .. } => "oracle",
        Cmd::Orbit { .. } => "orbit",
        Cmd::Special { .. } => "special",
        Cmd::FrobeniusWitness { .. } => "frobenius-witness",
        Cmd::Reproduce { .. } => "reproduce-paper",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let defaults = RunConfig::default();
    let run_cfg = RunConfig {
        field: g.field.clone(),
        q: g.q.clone(),
        characteristic: g.characteristic,
        degree_bound: g.degree_bound.unwrap_or(defaults.degree_bound),
        primes: g.primes.clone().unwrap_or(defaults.primes),
        prec: g.prec.unwrap_or(defaults.prec),
        threads: g.threads,
        seed: g.seed.unwrap_or(defaults.seed),
    };
    if let Err(e) = run_cfg.validate() {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    if let Some(n) = run_cfg.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli, &run_cfg) {
        Ok(out) => {
            let text = if g.json {
                let doc = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": command_name(&cli.cmd),
                    "config": run_cfg,
                    "result": out.value,
                });
                serde_json::to_string_pretty(&doc).expect("serializable")
            } else {
                out.text
            };
            // a closed pipe (e.g. `| head`) is not an error worth a panic
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if out.failed {
                ExitCode::from(1)
            } else if out.refuted {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
