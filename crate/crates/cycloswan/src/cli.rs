//! Command-line front end. The binary is a thin shim over this module.
//!
//! Exit codes: 0 success, 1 verification failure, 2 domain error, 3 method
//! disagreement, 4 factoring budget exhausted. Stdout is byte-identical
//! across identical invocations (given the same cache state and seed); timing
//! goes to stderr.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;

use crate::bigarith::{factor_with, FactorSettings, Natural};
use crate::cache::FactorCache;
use crate::cyclofield::cyclotomic_poly;
use crate::error::Error;
use crate::primroots::{
    generate_table, inert_prime_exists, least_inert_prime_direct, least_primitive_root,
    progression_prime, two_m_reduction, TableMode,
};
use crate::swan::{
    default_method, swan_order_with, verify_reference_tables, Method, SwanResult,
    VerifyOptions, VerifyReport,
};
use crate::units::{enumerate_generators, image_of_generator, reduced_generator_set};

const EXIT_OK: i32 = 0;
const EXIT_VERIFY_FAILED: i32 = 1;
const EXIT_DOMAIN: i32 = 2;
const EXIT_DISAGREEMENT: i32 = 3;
const EXIT_BUDGET: i32 = 4;

/// Swan rows above this m require an explicit --time-budget.
const UNBUDGETED_M_CEILING: u64 = 37;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Full,
    Reduced,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Full => Method::Full,
            MethodArg::Reduced => Method::Reduced,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "cycloswan",
    version,
    about = "Swan subgroup orders of cyclotomic group rings, computed in F_p[z]/(Phi_m(z))"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for probabilistic algorithms (rho polynomials, large-input
    /// primality witnesses)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Factorization cache file (JSON), also read from SWAN_CACHE
    #[arg(long, global = true, env = "SWAN_CACHE")]
    cache: Option<PathBuf>,

    /// Factoring time budget in seconds (fractions allowed)
    #[arg(long = "time-budget", global = true)]
    time_budget: Option<f64>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Least primitive roots and least inert primes for one m, or a whole table
    Primroot {
        /// The cyclotomic index m (omit when using --table)
        m: Option<u64>,
        /// Emit a full table: 22 (progression method, every admissible m)
        /// or 24 (direct scan, m not congruent to 2 mod 4)
        #[arg(long)]
        table: Option<u32>,
        /// Largest m to include in table mode
        #[arg(long = "max-m", default_value_t = 100)]
        max_m: u64,
    },
    /// Swan subgroup order for an inert odd prime p in Q(zeta_m)
    Swan {
        m: u64,
        p: u64,
        /// Generator set: full enumeration, orbit-reduced, or both (self-check)
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
    },
    /// Recompute the bundled reference tables and report per-row pass/fail
    Verify {
        /// Restrict every table to rows with m <= max-m
        #[arg(long = "max-m")]
        max_m: Option<u64>,
    },
    /// Factor an integer
    Factor {
        /// Decimal integer >= 1
        n: String,
    },
    /// Print the m-th cyclotomic polynomial
    Cyclopoly {
        m: u64,
        /// Reduce the coefficients mod this prime
        #[arg(long = "mod")]
        modulus: Option<u64>,
    },
    /// List cyclotomic-unit generators for n = mp and, optionally, their images
    Units {
        m: u64,
        p: u64,
        /// Use the orbit-reduced generator set
        #[arg(long)]
        reduced: bool,
        /// Include images (coefficient vectors) and image orders
        #[arg(long)]
        images: bool,
    },
}

/// Parse and run; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::MethodDisagreement { .. } => EXIT_DISAGREEMENT,
        Error::BudgetExhausted(_) => EXIT_BUDGET,
        _ => EXIT_DOMAIN,
    }
}

fn dispatch(cli: Cli) -> crate::error::Result<i32> {
    let budget = cli.time_budget.map(Duration::from_secs_f64);
    let settings = FactorSettings {
        time_budget: budget,
        seed: cli.seed,
    };
    let mut cache = match &cli.cache {
        Some(path) => {
            let (cache, warnings) = FactorCache::load(path);
            for w in warnings {
                eprintln!("warning: {w}");
            }
            Some(cache)
        }
        None => None,
    };
    let code = match &cli.cmd {
        Cmd::Primroot { m, table, max_m } => cmd_primroot(cli.format, *m, *table, *max_m)?,
        Cmd::Swan { m, p, method } => {
            cmd_swan(cli.format, *m, *p, *method, &settings, cache.as_mut())?
        }
        Cmd::Verify { max_m } => cmd_verify(cli.format, *max_m, &settings, cache.as_mut())?,
        Cmd::Factor { n } => cmd_factor(cli.format, n, &settings, cache.as_mut())?,
        Cmd::Cyclopoly { m, modulus } => cmd_cyclopoly(cli.format, *m, *modulus)?,
        Cmd::Units {
            m,
            p,
            reduced,
            images,
        } => cmd_units(cli.format, *m, *p, *reduced, *images)?,
    };
    if let Some(cache) = cache.as_mut() {
        if let Err(e) = cache.save() {
            eprintln!("warning: could not save cache: {e}");
        }
    }
    Ok(code)
}

fn cmd_primroot(
    format: Format,
    m: Option<u64>,
    table: Option<u32>,
    max_m: u64,
) -> crate::error::Result<i32> {
    match (m, table) {
        (None, None) => Err(Error::Domain(
            "primroot needs either an m argument or --table 22|24".into(),
        )),
        (_, Some(which)) => {
            let mode = match which {
                22 => TableMode::Progression,
                24 => TableMode::Direct,
                other => {
                    return Err(Error::Domain(format!(
                        "--table must be 22 or 24, got {other}"
                    )))
                }
            };
            let rows = generate_table(3..=max_m, mode)?;
            match format {
                Format::Text | Format::Csv => {
                    let sep = if format == Format::Csv { "," } else { " " };
                    if mode == TableMode::Progression {
                        println!("m{sep}r{sep}p");
                        for row in &rows {
                            println!(
                                "{}{sep}{}{sep}{}",
                                row.m, row.least_primitive_root, row.inert_prime
                            );
                        }
                    } else {
                        println!("m{sep}p");
                        for row in &rows {
                            println!("{}{sep}{}", row.m, row.inert_prime);
                        }
                    }
                }
                Format::Json => {
                    let rows: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|row| {
                            if mode == TableMode::Progression {
                                json!({"m": row.m, "r": row.least_primitive_root, "p": row.inert_prime})
                            } else {
                                json!({"m": row.m, "p": row.inert_prime})
                            }
                        })
                        .collect();
                    print_json(&json!({"table": which.to_string(), "rows": rows}));
                }
            }
            Ok(EXIT_OK)
        }
        (Some(m), None) => {
            if m < 3 || !inert_prime_exists(m)? {
                return Err(Error::NoPrimitiveRoot(m));
            }
            let r = least_primitive_root(m)?;
            let progression = progression_prime(m, r)?;
            let direct = least_inert_prime_direct(m)?;
            let two_m = two_m_reduction(m).ok();
            match format {
                Format::Text => {
                    println!("m = {m}");
                    println!("least primitive root: {r}");
                    println!("progression prime:    {progression}");
                    println!("direct inert prime:   {direct}");
                    match two_m {
                        Some(t) => println!("two-m reduction:      {t}"),
                        None => println!("two-m reduction:      n/a (m is not an odd prime power)"),
                    }
                }
                Format::Json => {
                    print_json(&json!({
                        "m": m,
                        "least_primitive_root": r,
                        "progression_prime": progression,
                        "direct_inert_prime": direct,
                        "two_m_reduction": two_m,
                    }));
                }
                Format::Csv => {
                    println!("m,least_primitive_root,progression_prime,direct_inert_prime,two_m_reduction");
                    let two_m = two_m.map(|t| t.to_string()).unwrap_or_default();
                    println!("{m},{r},{progression},{direct},{two_m}");
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn cmd_swan(
    format: Format,
    m: u64,
    p: u64,
    method: Option<MethodArg>,
    settings: &FactorSettings,
    cache: Option<&mut FactorCache>,
) -> crate::error::Result<i32> {
    if m > UNBUDGETED_M_CEILING && settings.time_budget.is_none() {
        return Err(Error::Domain(format!(
            "m = {m} exceeds {UNBUDGETED_M_CEILING}; factoring p^phi(m) - 1 is not guaranteed \
             desk-scale, pass --time-budget SECONDS to attempt it"
        )));
    }
    let method = method.map(Method::from).unwrap_or_else(|| default_method(m));
    let started = Instant::now();
    let result = swan_order_with(m, p, method, settings, cache)?;
    let elapsed = started.elapsed();
    render_swan(format, &result);
    eprintln!("wall time: {elapsed:?}");
    Ok(if result.complete { EXIT_OK } else { EXIT_BUDGET })
}

fn render_swan(format: Format, r: &SwanResult) {
    match format {
        Format::Text => {
            println!("m = {}, p = {}", r.m, r.p);
            println!("group order N = {}", r.group_order);
            match &r.group_order_factors {
                crate::cyclofield::GroupOrderFactors::Complete(f) => {
                    println!("N factors as {f}");
                }
                crate::cyclofield::GroupOrderFactors::Partial { found, cofactors } => {
                    println!("N partially factors as {found} (budget expired)");
                    for c in cofactors {
                        println!("  unfactored cofactor: {c}");
                    }
                }
            }
            if r.complete {
                println!("subgroup order |h| = {}", r.subgroup_order);
                println!("cokernel order     = {}", r.cokernel_order);
            } else {
                println!("subgroup order |h| >= {} (certified bound)", r.subgroup_order);
                println!("cokernel order     <= {}", r.cokernel_order);
            }
            println!("exactness: {}", r.exactness);
            println!("method: {}", r.method);
            println!("gcd(cokernel, (p-1)/2) = {}", r.coprimality_gcd);
            println!("torsion sensitive: {}", r.torsion_sensitive);
        }
        Format::Json => print_json(&r.to_json()),
        Format::Csv => {
            println!(
                "m,p,group_order,subgroup_order,cokernel_order,exactness,method,\
                 coprimality_gcd,torsion_sensitive,complete"
            );
            println!(
                "{},{},{},{},{},{},{},{},{},{}",
                r.m,
                r.p,
                r.group_order,
                r.subgroup_order,
                r.cokernel_order,
                r.exactness,
                r.method,
                r.coprimality_gcd,
                r.torsion_sensitive,
                r.complete
            );
        }
    }
}

fn cmd_verify(
    format: Format,
    max_m: Option<u64>,
    settings: &FactorSettings,
    cache: Option<&mut FactorCache>,
) -> crate::error::Result<i32> {
    let options = VerifyOptions {
        max_m,
        time_budget: settings.time_budget,
        seed: settings.seed,
    };
    let started = Instant::now();
    let report = verify_reference_tables(&options, cache);
    let elapsed = started.elapsed();
    render_verify(format, &report);
    eprintln!("wall time: {elapsed:?}");
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn render_verify(format: Format, report: &VerifyReport) {
    match format {
        Format::Text => {
            for row in &report.rows {
                let note = row
                    .note
                    .as_deref()
                    .map(|n| format!("  [{n}]"))
                    .unwrap_or_default();
                println!(
                    "[{:>11}] m={:<3} p={:<3} {:<10} expected {:<40} computed {}{}",
                    row.table.to_string(),
                    row.m,
                    row.p,
                    row.status.to_string(),
                    row.expected,
                    row.computed,
                    note
                );
            }
            for note in &report.notes {
                println!("note: {note}");
            }
            let (pass, fail, skipped, incomplete) = report.counts();
            println!(
                "summary: {pass} passed, {fail} failed, {skipped} skipped, {incomplete} incomplete"
            );
            println!("result: {}", if report.passed() { "PASS" } else { "FAIL" });
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = report
                .rows
                .iter()
                .map(|row| {
                    json!({
                        "table": row.table.to_string(),
                        "m": row.m,
                        "p": row.p,
                        "status": row.status.to_string(),
                        "expected": row.expected,
                        "computed": row.computed,
                        "note": row.note,
                    })
                })
                .collect();
            print_json(&json!({
                "rows": rows,
                "notes": report.notes,
                "passed": report.passed(),
            }));
        }
        Format::Csv => {
            println!("table,m,p,status,expected,computed,note");
            for row in &report.rows {
                println!(
                    "{},{},{},{},{},{},{}",
                    row.table,
                    row.m,
                    row.p,
                    row.status,
                    csv_field(&row.expected),
                    csv_field(&row.computed),
                    csv_field(row.note.as_deref().unwrap_or(""))
                );
            }
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn cmd_factor(
    format: Format,
    n: &str,
    settings: &FactorSettings,
    cache: Option<&mut FactorCache>,
) -> crate::error::Result<i32> {
    let n: Natural = n
        .parse::<BigUint>()
        .map_err(|_| Error::Domain(format!("{n:?} is not a decimal integer")))?;
    match factor_with(&n, settings, cache) {
        Ok(f) => {
            match format {
                Format::Text => println!("{n} = {f}"),
                Format::Json => {
                    let pairs: Vec<serde_json::Value> = f
                        .pairs()
                        .iter()
                        .map(|(q, e)| json!([q.to_string(), e]))
                        .collect();
                    print_json(&json!({
                        "n": n.to_string(),
                        "factors": pairs,
                        "complete": true,
                        "unfactored": [],
                    }));
                }
                Format::Csv => {
                    println!("prime,exponent");
                    for (q, e) in f.pairs() {
                        println!("{q},{e}");
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Err(Error::BudgetExhausted(partial)) => {
            match format {
                Format::Text => println!("{n} = {partial}"),
                Format::Json => {
                    let pairs: Vec<serde_json::Value> = partial
                        .found
                        .iter()
                        .map(|(q, e)| json!([q.to_string(), e]))
                        .collect();
                    print_json(&json!({
                        "n": n.to_string(),
                        "factors": pairs,
                        "complete": false,
                        "unfactored": partial.cofactors.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    }));
                }
                Format::Csv => {
                    println!("prime,exponent");
                    for (q, e) in &partial.found {
                        println!("{q},{e}");
                    }
                    for c in &partial.cofactors {
                        println!("{c},unfactored");
                    }
                }
            }
            eprintln!("warning: time budget exhausted, factorization incomplete");
            Ok(EXIT_BUDGET)
        }
        Err(e) => Err(e),
    }
}

fn cmd_cyclopoly(format: Format, m: u64, modulus: Option<u64>) -> crate::error::Result<i32> {
    if m == 0 {
        return Err(Error::Domain("cyclopoly requires m >= 1".into()));
    }
    if let Some(p) = modulus {
        if !crate::bigarith::is_prime_u64(p) {
            return Err(Error::ExpectedPrime(Natural::from(p)));
        }
    }
    let poly = cyclotomic_poly(m);
    match modulus {
        None => {
            let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
            match format {
                Format::Text => {
                    println!("Phi_{m} = {poly}");
                    println!("coefficients (ascending): [{}]", coeffs.join(", "));
                }
                Format::Json => print_json(&json!({
                    "m": m,
                    "mod": serde_json::Value::Null,
                    "polynomial": poly.to_string(),
                    "coefficients": coeffs,
                })),
                Format::Csv => {
                    println!("degree,coefficient");
                    for (k, c) in coeffs.iter().enumerate() {
                        println!("{k},{c}");
                    }
                }
            }
        }
        Some(p) => {
            let coeffs = poly.coeffs_mod(p);
            let reduced = crate::cyclofield::IntPoly::from_coeffs(
                coeffs.iter().map(|&c| num_bigint::BigInt::from(c)).collect(),
            );
            match format {
                Format::Text => {
                    println!("Phi_{m} mod {p} = {reduced}");
                    println!(
                        "coefficients (ascending): [{}]",
                        coeffs
                            .iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>()
                            .join(", ")
                    );
                }
                Format::Json => print_json(&json!({
                    "m": m,
                    "mod": p,
                    "polynomial": reduced.to_string(),
                    "coefficients": coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                })),
                Format::Csv => {
                    println!("degree,coefficient");
                    for (k, c) in coeffs.iter().enumerate() {
                        println!("{k},{c}");
                    }
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_units(
    format: Format,
    m: u64,
    p: u64,
    reduced: bool,
    images: bool,
) -> crate::error::Result<i32> {
    let spec = crate::cyclofield::make_field(m, p)?;
    let gens = if reduced {
        reduced_generator_set(m, p)?
    } else {
        enumerate_generators(m, p)?
    };
    let mut entries = Vec::new();
    for g in &gens {
        let (image, order) = if images {
            let img = image_of_generator(g, &spec)?;
            let order = spec.element_order(&img)?;
            (Some(img), Some(order))
        } else {
            (None, None)
        };
        entries.push((g.clone(), image, order));
    }
    match format {
        Format::Text => {
            println!(
                "{} generators for m = {m}, p = {p} ({})",
                gens.len(),
                if reduced { "reduced set" } else { "full set" }
            );
            for (g, image, order) in &entries {
                match (image, order) {
                    (Some(img), Some(o)) => println!("{g}  image={img}  order={o}"),
                    _ => println!("{g}"),
                }
            }
        }
        Format::Json => {
            let list: Vec<serde_json::Value> = entries
                .iter()
                .map(|(g, image, order)| {
                    let mut v = serde_json::to_value(g).expect("generator serializes");
                    if let (Some(img), Some(o)) = (image, order) {
                        v["image"] = json!(img.coeffs());
                        v["order"] = json!(o.to_string());
                    }
                    v
                })
                .collect();
            print_json(&json!({
                "m": m,
                "p": p,
                "reduced": reduced,
                "generators": list,
            }));
        }
        Format::Csv => {
            println!("kind,d,a,image,order");
            for (g, image, order) in &entries {
                let (kind, d, a) = match g {
                    crate::units::UnitGen::Frac { d, a } => ("frac", d.to_string(), a.to_string()),
                    crate::units::UnitGen::Flat { d, a } => ("flat", d.to_string(), a.to_string()),
                    crate::units::UnitGen::MinusOne => ("minus_one", String::new(), String::new()),
                    crate::units::UnitGen::Zeta => ("zeta", String::new(), String::new()),
                };
                let image = image
                    .as_ref()
                    .map(|i| {
                        i.coeffs()
                            .iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .unwrap_or_default();
                let order = order.as_ref().map(|o| o.to_string()).unwrap_or_default();
                println!("{kind},{d},{a},{image},{order}");
            }
        }
    }
    Ok(EXIT_OK)
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("json renders"));
}
