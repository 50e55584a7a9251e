//! Command-line surface over the antichain-simplex library.
//!
//! Every subcommand is a thin shell: inputs are parsed, a library call
//! runs, and the result is serialized. No arithmetic lives here.
//!
//! Exit codes: 0 success, 2 validation error, 3 scale-guard error.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use antichain_core::{
    antichain_series, build_poset, exhaust_och, full_poincare, is_antichain, ratios, relates_theorem,
    sample_och, scan, Error, FppPoset, Partition, ResidueTable, ScanRow, TwoPartConfig,
};

#[derive(Parser)]
#[command(
    name = "antichain",
    about = "Fundamental parallelepiped posets of lattice simplices: scans, posets, sampling, and Poincaré series",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count part(n), relprime(n) and rpac(n) for n = 1..=n-max.
    Scan {
        /// Largest n to scan.
        #[arg(long = "n-max")]
        n_max: i64,
        /// Worker threads (0 = all cores).
        #[arg(long, env = "ANTICHAIN_JOBS", default_value_t = 0)]
        jobs: usize,
        /// Output file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ScanFormat::Csv)]
        format: ScanFormat,
        /// Permit n-max beyond the validated range of 73.
        #[arg(long)]
        allow_large: bool,
    },
    /// Build P(λ) and export its relations.
    Poset {
        /// Partition literal, e.g. "8,2".
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = PosetFormat::Covers)]
        format: PosetFormat,
        /// Include the zero element and its covers in DOT output.
        #[arg(long)]
        with_zero: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample OCH+(n, d) for antichain simplices, or take an exact census.
    Sample {
        #[arg(long, required_unless_present = "cells")]
        n: Option<i64>,
        #[arg(long, required_unless_present = "cells")]
        d: Option<i64>,
        /// Number of samples (default: n³).
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Exhaust all (n−1)^{d−1} simplices instead of sampling.
        #[arg(long)]
        exhaustive: bool,
        /// File of "n,d" lines: sample every cell and emit (n/d, f(n,d)) rows.
        #[arg(long)]
        cells: Option<PathBuf>,
        /// Worker threads (0 = all cores).
        #[arg(long, env = "ANTICHAIN_JOBS", default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Truncated Poincaré series for an antichain Δ_λ.
    Poincare {
        #[arg(long)]
        lambda: String,
        #[arg(long = "z-order", default_value_t = 6)]
        z_order: usize,
        #[arg(long = "t-degree", default_value_t = 24)]
        t_degree: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decomposition tables and cone-test relations for λ = (x,…,x,ax,…,ax).
    Twopart {
        #[arg(long)]
        x: i64,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        u: i64,
        #[arg(long)]
        v: i64,
        /// Also verify the cone test against the residue predicate.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetFormat {
    Dot,
    Json,
    Covers,
}

fn main() {
    let cli = Cli::parse();
    let started = Instant::now();
    let code = match run(cli.command) {
        Ok(label) => {
            eprintln!("{label} finished in {:.3?}", started.elapsed());
            0
        }
        Err(err) => {
            eprintln!("error: {err}");
            match err.downcast_ref::<Error>() {
                Some(Error::ScaleGuard { .. }) => 3,
                _ => 2,
            }
        }
    };
    std::process::exit(code);
}

type AnyError = Box<dyn std::error::Error>;

fn run(command: Command) -> Result<String, AnyError> {
    match command {
        Command::Scan {
            n_max,
            jobs,
            out,
            format,
            allow_large,
        } => cmd_scan(n_max, jobs, out, format, allow_large),
        Command::Poset {
            lambda,
            format,
            with_zero,
            out,
        } => cmd_poset(&lambda, format, with_zero, out),
        Command::Sample {
            n,
            d,
            samples,
            seed,
            exhaustive,
            cells,
            jobs,
            out,
        } => cmd_sample(n, d, samples, seed, exhaustive, cells, jobs, out),
        Command::Poincare {
            lambda,
            z_order,
            t_degree,
            out,
        } => cmd_poincare(&lambda, z_order, t_degree, out),
        Command::Twopart {
            x,
            a,
            u,
            v,
            check,
            out,
        } => cmd_twopart(x, a, u, v, check, out),
    }
}

fn emit(out: Option<PathBuf>, content: &str) -> Result<(), AnyError> {
    match out {
        Some(path) => fs::write(&path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display()).into()),
        None => {
            io::stdout().write_all(content.as_bytes())?;
            Ok(())
        }
    }
}

fn emit_json(out: Option<PathBuf>, value: &Value) -> Result<(), AnyError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    emit(out, &text)
}

// ---------------------------------------------------------------------------
// scan
// ---------------------------------------------------------------------------

fn cmd_scan(
    n_max: i64,
    jobs: usize,
    out: Option<PathBuf>,
    format: ScanFormat,
    allow_large: bool,
) -> Result<String, AnyError> {
    if n_max < 1 {
        return Err(Error::InvalidArgument(format!("--n-max must be >= 1, got {n_max}")).into());
    }
    if n_max > antichain_core::scan::SCAN_TESTED_MAX {
        if !allow_large {
            return Err(Error::InvalidArgument(format!(
                "--n-max {n_max} exceeds the validated range {}; pass --allow-large to proceed",
                antichain_core::scan::SCAN_TESTED_MAX
            ))
            .into());
        }
        eprintln!(
            "warning: n-max {n_max} is beyond the validated range {}; expect long runtimes",
            antichain_core::scan::SCAN_TESTED_MAX
        );
    }
    let rows: Vec<ScanRow> = (1..=n_max)
        .map(|n| scan(n, jobs))
        .collect::<antichain_core::Result<_>>()?;
    let ratio_rows = ratios(&rows);
    let content = match format {
        ScanFormat::Csv => {
            let mut text = String::from("n,rpac,relprime,part,ratio_rp,ratio_ac\n");
            for (row, ratio) in rows.iter().zip(&ratio_rows) {
                writeln!(
                    text,
                    "{},{},{},{},{},{}",
                    row.n,
                    row.rpac,
                    row.relprime,
                    row.part,
                    ratio.relprime_over_part.as_deref().unwrap_or(""),
                    ratio.rpac_over_relprime.as_deref().unwrap_or(""),
                )?;
            }
            text
        }
        ScanFormat::Json => {
            let rows_json: Vec<Value> = rows
                .iter()
                .zip(&ratio_rows)
                .map(|(row, ratio)| {
                    json!({
                        "n": row.n,
                        "rpac": row.rpac,
                        "relprime": row.relprime,
                        "part": row.part,
                        "ratio_rp": ratio.relprime_over_part,
                        "ratio_ac": ratio.rpac_over_relprime,
                    })
                })
                .collect();
            let mut text = serde_json::to_string_pretty(&json!({
                "format": 1,
                "command": "scan",
                "params": {"n_max": n_max},
                "rows": rows_json,
            }))?;
            text.push('\n');
            text
        }
    };
    emit(out, &content)?;
    Ok(format!("scan --n-max {n_max}"))
}

// ---------------------------------------------------------------------------
// poset
// ---------------------------------------------------------------------------

fn poset_dot(poset: &FppPoset, with_zero: bool) -> String {
    let mut text = String::from("digraph P {\n");
    if with_zero {
        let _ = writeln!(text, "  0;");
    }
    for e in poset.elements() {
        let _ = writeln!(text, "  {e};");
    }
    if with_zero {
        for m in poset.minimal_elements() {
            let _ = writeln!(text, "  0 -> {m};");
        }
    }
    for (i, j) in poset.covers() {
        let _ = writeln!(text, "  {i} -> {j};");
    }
    text.push_str("}\n");
    text
}

fn cmd_poset(
    lambda: &str,
    format: PosetFormat,
    with_zero: bool,
    out: Option<PathBuf>,
) -> Result<String, AnyError> {
    let lambda: Partition = lambda.parse::<Partition>()?;
    let poset = build_poset(&lambda)?;
    let content = match format {
        PosetFormat::Dot => poset_dot(&poset, with_zero),
        PosetFormat::Covers => {
            let mut text = String::new();
            for (i, j) in poset.covers() {
                writeln!(text, "{i} {j}")?;
            }
            text
        }
        PosetFormat::Json => {
            let mut text = serde_json::to_string_pretty(&json!({
                "format": 1,
                "command": "poset",
                "params": {"lambda": lambda.parts()},
                "n": lambda.total(),
                "elements": poset.elements().collect::<Vec<_>>(),
                "relations": poset.relations().iter().collect::<Vec<_>>(),
                "covers": poset.covers().iter().collect::<Vec<_>>(),
                "minimal": poset.minimal_elements(),
                "maximal": poset.maximal_elements(),
                "is_antichain": poset.is_antichain(),
                "self_dual_check": antichain_core::check_self_dual(&poset),
            }))?;
            text.push('\n');
            text
        }
    };
    emit(out, &content)?;
    Ok(format!("poset --lambda {lambda}"))
}

// ---------------------------------------------------------------------------
// sample
// ---------------------------------------------------------------------------

fn parse_cells(path: &PathBuf) -> Result<Vec<(i64, i64)>, AnyError> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut cells = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split(',');
        let bad = || format!("{}:{}: expected \"n,d\"", path.display(), lineno + 1);
        let n: i64 = it.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        let d: i64 = it.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        cells.push((n, d));
    }
    Ok(cells)
}

#[allow(clippy::too_many_arguments)]
fn cmd_sample(
    n: Option<i64>,
    d: Option<i64>,
    samples: Option<u64>,
    seed: u64,
    exhaustive: bool,
    cells: Option<PathBuf>,
    jobs: usize,
    out: Option<PathBuf>,
) -> Result<String, AnyError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("worker pool: {e}")))?;

    if let Some(path) = cells {
        let cells = parse_cells(&path)?;
        let mut rows = Vec::new();
        for (n, d) in cells {
            let count = samples.unwrap_or((n * n * n) as u64);
            let outcome = pool.install(|| sample_och(n, d, count, seed))?;
            rows.push(json!({
                "n": n,
                "d": d,
                "n_over_d": n as f64 / d as f64,
                "samples": outcome.samples,
                "antichain_count": outcome.antichain_count,
                "fraction": outcome.fraction(),
            }));
        }
        emit_json(
            out,
            &json!({
                "format": 1,
                "command": "sample",
                "params": {"cells": path.display().to_string(), "seed": seed},
                "rows": rows,
            }),
        )?;
        return Ok(format!("sample --cells {}", path.display()));
    }

    let (n, d) = (n.expect("required by clap"), d.expect("required by clap"));
    if exhaustive {
        let outcome = pool.install(|| exhaust_och(n, d))?;
        let fraction = if outcome.total == 0 {
            None
        } else {
            Some(outcome.antichain as f64 / outcome.total as f64)
        };
        emit_json(
            out,
            &json!({
                "format": 1,
                "command": "sample",
                "params": {"n": n, "d": d, "exhaustive": true},
                "results": {
                    "total": outcome.total,
                    "antichain_count": outcome.antichain,
                    "fraction": fraction,
                },
            }),
        )?;
        return Ok(format!("sample --n {n} --d {d} --exhaustive"));
    }

    let count = samples.unwrap_or((n * n * n) as u64);
    let outcome = pool.install(|| sample_och(n, d, count, seed))?;
    emit_json(
        out,
        &json!({
            "format": 1,
            "command": "sample",
            "params": {"n": n, "d": d, "samples": count, "seed": seed},
            "results": {
                "antichain_count": outcome.antichain_count,
                "fraction": outcome.fraction(),
            },
        }),
    )?;
    Ok(format!("sample --n {n} --d {d}"))
}

// ---------------------------------------------------------------------------
// poincare
// ---------------------------------------------------------------------------

fn cmd_poincare(
    lambda: &str,
    z_order: usize,
    t_degree: usize,
    out: Option<PathBuf>,
) -> Result<String, AnyError> {
    let lambda: Partition = lambda.parse()?;
    if !is_antichain(&lambda)? {
        return Err(Error::NotAntichain(format!(
            "{lambda} is not antichain; its Poincaré series is out of scope"
        ))
        .into());
    }
    let points = antichain_core::lambda_points(&lambda)?;
    let fpa = antichain_series(&points, z_order, t_degree)?;
    let full = full_poincare(&lambda, z_order, t_degree)?;
    emit_json(
        out,
        &json!({
            "format": 1,
            "command": "poincare",
            "params": {"lambda": lambda.parts(), "z_order": z_order, "t_degree": t_degree},
            "results": {
                "fpa_series": fpa.rows(),
                "full_series": full.rows(),
            },
        }),
    )?;
    Ok(format!("poincare --lambda {lambda}"))
}

// ---------------------------------------------------------------------------
// twopart
// ---------------------------------------------------------------------------

fn cmd_twopart(
    x: i64,
    a: i64,
    u: i64,
    v: i64,
    check: bool,
    out: Option<PathBuf>,
) -> Result<String, AnyError> {
    let cfg = TwoPartConfig::new(x, a, u, v)?;
    let lambda = cfg.lambda();
    let top = cfg.total() - 2;
    let decomposition: Vec<Value> = (0..=top)
        .map(|i| {
            let (r, p, q) = cfg.decompose(i).expect("index in range");
            json!({
                "i": i,
                "r": r,
                "p": p,
                "q": q,
                "f": cfg.f_value(i).expect("index in range"),
                "class": cfg.class_of(i).expect("index in range"),
            })
        })
        .collect();
    let relations: Option<Vec<(i64, i64)>> = if cfg.is_coprime() {
        Some(cfg.relations()?.into_iter().collect())
    } else {
        None
    };
    let equivalent: Option<bool> = if check && cfg.is_coprime() {
        let res = ResidueTable::new(&lambda)?;
        let mut ok = true;
        'outer: for j in 1..=top {
            for i in 1..=top {
                if cfg.relates(i, j)? != relates_theorem(&res, i, j)? {
                    ok = false;
                    break 'outer;
                }
            }
        }
        Some(ok)
    } else {
        None
    };
    emit_json(
        out,
        &json!({
            "format": 1,
            "command": "twopart",
            "params": {"x": x, "a": a, "u": u, "v": v, "check": check},
            "lambda": lambda.parts(),
            "n": cfg.total(),
            "coprime": cfg.is_coprime(),
            "decomposition": decomposition,
            "relations": relations,
            "equivalent": equivalent,
        }),
    )?;
    Ok(format!("twopart --x {x} --a {a} --u {u} --v {v}"))
}
