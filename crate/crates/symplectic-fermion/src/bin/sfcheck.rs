//! Command-line entry point: runs the verification catalog and prints or
//! serializes the results. Exit code 0 iff all selected checks pass.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num::complex::Complex64;

use symplectic_fermion::chars::{character_series, Module};
use symplectic_fermion::fock::{enumerate_basis, Sector};
use symplectic_fermion::report::{self, CheckResult, Report, DEFAULT_SEED};
use symplectic_fermion::scalar::{fmt_scalar, Half};
use symplectic_fermion::zhu::relations::{relation_ids, verify_relation, ZhuLab};

#[derive(Parser)]
#[command(
    name = "sfcheck",
    version,
    about = "Exact verification workbench for the symplectic fermion orbifold"
)]
struct Cli {
    /// Optional key=value config file; flags override its defaults.
    #[arg(long, global = true)]
    config: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the canonical monomial basis of one weight space.
    Basis(BasisArgs),
    /// Seeded Borcherds-identity residual suites.
    Borcherds(BorcherdsArgs),
    /// C2-quotient dimensions.
    C2(C2Args),
    /// Zhu-algebra relation catalog and the presented algebra.
    #[command(subcommand)]
    Zhu(ZhuCmd),
    /// Twisted-sector checks: coefficient table, spectrum, action tables.
    Twisted(TwistedArgs),
    /// Character q-series, compared with enumeration.
    Characters(CharArgs),
    /// Modular transformation checks.
    Modular(ModularArgs),
    /// Logarithmic-module checks.
    Logmod(LogmodArgs),
    /// Run the full catalog, optionally writing a JSON report.
    Report(ReportArgs),
}

#[derive(Args)]
struct BasisArgs {
    #[arg(long, default_value = "untwisted")]
    sector: String,
    #[arg(long)]
    d: Option<usize>,
    /// Raw weight, integers or half-integers like 3/2.
    #[arg(long)]
    weight: String,
}

#[derive(Args)]
struct BorcherdsArgs {
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct C2Args {
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    cut: Option<i64>,
}

#[derive(Subcommand)]
enum ZhuCmd {
    /// Verify one relation or the full catalog.
    Verify(ZhuVerifyArgs),
    /// Build the presented algebra: dimension, block table, ideals.
    Algebra,
}

#[derive(Args)]
struct ZhuVerifyArgs {
    #[arg(long, conflicts_with = "all")]
    rel: Option<String>,
    #[arg(long)]
    all: bool,
    #[arg(long)]
    d: Option<usize>,
}

#[derive(Args)]
struct TwistedArgs {
    #[arg(long)]
    d: Option<usize>,
}

#[derive(Args)]
struct CharArgs {
    /// One of sf+, sf-, th+, th-; omit for all four.
    #[arg(long)]
    module: Option<String>,
    #[arg(long)]
    d: Option<usize>,
    /// Truncation order in integer powers of q.
    #[arg(long)]
    order: Option<i64>,
    /// Emit exponent,coefficient lines instead of a table.
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct ModularArgs {
    /// S or T.
    #[arg(long)]
    transform: String,
    /// Sample point like 0.2+1.3i (S only).
    #[arg(long, default_value = "i")]
    tau: String,
    #[arg(long)]
    order: Option<i64>,
}

#[derive(Args)]
struct LogmodArgs {
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    cut: Option<i64>,
}

#[derive(Args)]
struct ReportArgs {
    #[arg(long)]
    all: bool,
    /// Write the JSON report to this path.
    #[arg(long)]
    json: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
}

struct Config(BTreeMap<String, String>);

impl Config {
    fn load(path: &Option<String>) -> Config {
        let mut map = BTreeMap::new();
        if let Some(p) = path {
            let text = std::fs::read_to_string(p).unwrap_or_else(|e| {
                eprintln!("config {}: {}", p, e);
                std::process::exit(2);
            });
            for line in text.lines() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                if let Some((k, v)) = line.split_once('=') {
                    map.insert(k.trim().to_string(), v.trim().to_string());
                }
            }
        }
        Config(map)
    }

    fn usize_or(&self, key: &str, flag: Option<usize>, default: usize) -> usize {
        flag.or_else(|| self.0.get(key).and_then(|v| v.parse().ok()))
            .unwrap_or(default)
    }

    fn i64_or(&self, key: &str, flag: Option<i64>, default: i64) -> i64 {
        flag.or_else(|| self.0.get(key).and_then(|v| v.parse().ok()))
            .unwrap_or(default)
    }

    fn u64_or(&self, key: &str, flag: Option<u64>, default: u64) -> u64 {
        flag.or_else(|| self.0.get(key).and_then(|v| v.parse().ok()))
            .unwrap_or(default)
    }
}

fn parse_half(s: &str) -> Half {
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse().expect("weight numerator");
        let d: i64 = d.trim().parse().expect("weight denominator");
        assert!(d == 1 || d == 2, "weights live on the half-integer lattice");
        Half(n * 2 / d)
    } else {
        Half::from_int(s.trim().parse().expect("integer weight"))
    }
}

fn parse_tau(s: &str) -> Complex64 {
    // forms: "i", "bi", "a+bi", "a-bi"
    let s = s.trim();
    let body = s.strip_suffix('i').unwrap_or(s);
    if !s.ends_with('i') {
        panic!("tau must have a positive imaginary part, like 0.2+1.3i");
    }
    if body.is_empty() {
        return Complex64::new(0.0, 1.0);
    }
    for split in [body.rfind('+'), body[1..].rfind('-').map(|k| k + 1)] {
        if let Some(k) = split {
            if k > 0 {
                let re: f64 = body[..k].parse().expect("real part");
                let imtxt = &body[k..];
                let im: f64 = if imtxt == "+" || imtxt == "-" {
                    format!("{}1", imtxt).parse().unwrap()
                } else {
                    imtxt.parse().expect("imaginary part")
                };
                return Complex64::new(re, im);
            }
        }
    }
    Complex64::new(0.0, body.parse().expect("imaginary part"))
}

fn parse_module(s: &str) -> Module {
    match s.to_lowercase().as_str() {
        "sf+" | "sfplus" => Module::SfPlus,
        "sf-" | "sfminus" => Module::SfMinus,
        "th+" | "theta+" | "sfth+" => Module::ThetaPlus,
        "th-" | "theta-" | "sfth-" => Module::ThetaMinus,
        other => panic!("unknown module {} (use sf+, sf-, th+, th-)", other),
    }
}

fn finish(checks: Vec<CheckResult>) -> ExitCode {
    let mut ok = true;
    for c in &checks {
        println!("{}", c.line());
        ok &= c.passed();
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = Config::load(&cli.config);
    match cli.command {
        Command::Basis(args) => {
            let d = cfg.usize_or("d", args.d, 1);
            let sector = match args.sector.to_lowercase().as_str() {
                "untwisted" | "sf" => Sector::Untwisted,
                "twisted" | "theta" => Sector::Twisted,
                "extended" | "hat" => Sector::Extended,
                other => panic!("unknown sector {}", other),
            };
            let w = parse_half(&args.weight);
            let basis = enumerate_basis(sector, w, d);
            for m in &basis {
                println!("{}", m.display(sector));
            }
            println!("# {} monomials at weight {} (d = {})", basis.len(), w, d);
            ExitCode::SUCCESS
        }
        Command::Borcherds(args) => {
            let seed = cfg.u64_or("seed", args.seed, DEFAULT_SEED);
            let fixed_d = args
                .d
                .or_else(|| cfg.0.get("d").and_then(|v| v.parse().ok()));
            if let Some(d) = fixed_d {
                if d > 2 {
                    eprintln!("borcherds suites run at d <= 2");
                    return ExitCode::from(2);
                }
            }
            let mut checks = report::check_borcherds_untwisted_at(args.samples, seed, fixed_d);
            checks.extend(report::check_borcherds_twisted_at(
                args.samples / 2,
                seed,
                fixed_d,
            ));
            finish(checks)
        }
        Command::C2(args) => {
            let d = cfg.usize_or("d", args.d, 1);
            let cut = cfg.i64_or("cut", args.cut, 12);
            finish(report::check_c2(d, cut))
        }
        Command::Zhu(ZhuCmd::Verify(args)) => {
            let d = cfg.usize_or("d", args.d, 1);
            let lab = ZhuLab::new(d);
            let checks: Vec<CheckResult> = if let (false, Some(id)) = (args.all, args.rel) {
                if !relation_ids(d).contains(&id) {
                    eprintln!("unknown relation id {} for d = {}; known ids:", id, d);
                    for known in relation_ids(d) {
                        eprintln!("  {}", known);
                    }
                    return ExitCode::from(2);
                }
                let t = std::time::Instant::now();
                let rep = verify_relation(&lab, &id);
                vec![CheckResult {
                    id: format!("zhu/{}", rep.id),
                    anchor: "relation catalog".into(),
                    params: [("d".to_string(), d.to_string())].into_iter().collect(),
                    status: if rep.pass {
                        report::Status::Pass
                    } else {
                        report::Status::Fail
                    },
                    witness: rep.witness,
                    wall_time_ms: t.elapsed().as_millis(),
                }]
            } else {
                report::check_zhu_relations(&lab)
            };
            finish(checks)
        }
        Command::Zhu(ZhuCmd::Algebra) => finish(report::check_presented()),
        Command::Twisted(args) => {
            let d = cfg.usize_or("d", args.d, 2);
            finish(report::check_twisted(d))
        }
        Command::Characters(args) => {
            let d = cfg.usize_or("d", args.d, 1);
            let order = cfg.i64_or("order", args.order, 12);
            let modules: Vec<Module> = match &args.module {
                Some(m) => vec![parse_module(m)],
                None => Module::all().to_vec(),
            };
            for m in &modules {
                let series = character_series(*m, d, 48 * order);
                if args.csv {
                    for (k, c) in &series.terms {
                        println!("{},{},{}", m.name(), fmt_q_exponent(*k), fmt_scalar(c));
                    }
                } else {
                    println!("# {} (d = {})", m.name(), d);
                    for (k, c) in &series.terms {
                        println!("{:>10}  {}", fmt_q_exponent(*k), fmt_scalar(c));
                    }
                }
            }
            // always cross-check against enumeration
            let count = (order - 2).clamp(2, 20) as usize;
            let mut checks = Vec::new();
            for m in &modules {
                let fails = symplectic_fermion::chars::enumerate_vs_character(*m, d, count);
                let t = std::time::Instant::now();
                checks.push(CheckResult {
                    id: format!("characters/{}-d{}", m.name(), d),
                    anchor: "series vs enumeration".into(),
                    params: BTreeMap::new(),
                    status: if fails.is_empty() {
                        report::Status::Pass
                    } else {
                        report::Status::Fail
                    },
                    witness: if fails.is_empty() {
                        format!("{} exponents match", count)
                    } else {
                        fails.join("; ")
                    },
                    wall_time_ms: t.elapsed().as_millis(),
                });
            }
            finish(checks)
        }
        Command::Modular(args) => {
            let order = cfg.i64_or("order", args.order, 200);
            match args.transform.to_uppercase().as_str() {
                "T" => finish(
                    report::check_modular(48 * order)
                        .into_iter()
                        .take(1)
                        .collect(),
                ),
                "S" => {
                    let tau = parse_tau(&args.tau);
                    if tau.im <= 0.0 {
                        eprintln!("tau must lie in the upper half-plane");
                        return ExitCode::from(2);
                    }
                    let t = std::time::Instant::now();
                    let mut max_resid = 0f64;
                    let mut lines = Vec::new();
                    for (name, r) in symplectic_fermion::chars::phi_s_residuals(tau, 48 * order) {
                        lines.push(format!("{}: {:.3e}", name, r));
                        max_resid = max_resid.max(r);
                    }
                    for d in 1..=2usize {
                        for (name, r) in
                            symplectic_fermion::chars::character_s_residuals(d, tau, 48 * order)
                        {
                            lines.push(format!("{}: {:.3e}", name, r));
                            max_resid = max_resid.max(r);
                        }
                    }
                    for l in &lines {
                        println!("{}", l);
                    }
                    finish(vec![CheckResult {
                        id: "modular/S".into(),
                        anchor: "numeric S-laws".into(),
                        params: [
                            ("tau".to_string(), args.tau.clone()),
                            ("order".to_string(), order.to_string()),
                        ]
                        .into_iter()
                        .collect(),
                        status: if max_resid < 1e-6 {
                            report::Status::Pass
                        } else {
                            report::Status::Fail
                        },
                        witness: format!("max residual {:.3e}", max_resid),
                        wall_time_ms: t.elapsed().as_millis(),
                    }])
                }
                other => {
                    eprintln!("unknown transform {} (use S or T)", other);
                    ExitCode::from(2)
                }
            }
        }
        Command::Logmod(args) => {
            let d = cfg.usize_or("d", args.d, 1);
            let _ = cfg.i64_or("cut", args.cut, 4);
            finish(report::check_logmod(d))
        }
        Command::Report(args) => {
            let seed = cfg.u64_or("seed", args.seed, DEFAULT_SEED);
            let checks = report::run_all(seed);
            let mut config = cfg.0.clone();
            config.insert("scope".into(), "all".into());
            let report = Report::new(seed, config, checks);
            for c in &report.checks {
                println!("{}", c.line());
            }
            if let Some(path) = args.json {
                std::fs::write(&path, report.to_json()).expect("writing the JSON report");
                println!("# report written to {}", path);
            }
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

fn fmt_q_exponent(key48: i64) -> String {
    if key48 % 48 == 0 {
        format!("{}", key48 / 48)
    } else {
        let g = gcd(key48.unsigned_abs(), 48);
        format!("{}/{}", key48 / g as i64, 48 / g as i64)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
