mod selftest;
mod spec;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use nichols::analyzer::{
    box_degrees, diophantine_search, freeness_check, is_exceptional_degree, kernel_dim, p_value,
};
use nichols::field::RatFunc;
use nichols::laurent::{a_cofactor, a_form, classify, p_factor_form, p_poly, q_monomial};
use nichols::ring::{Field, Ring};
use nichols::shuffle::{s1_matrix, BraidingMatrix, HomogeneousComponent};
use nichols::words::{lyndon_count, lyndon_words, necklace_count, DegreeVector};
use serde_json::{json, Value};

use spec::{Braiding, BraidingSpec};

/// Freeness and shuffle-kernel computations for Nichols algebras of
/// diagonal type.
#[derive(Parser)]
#[command(name = "nichols", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lyndon and necklace counts for degree vectors.
    Lyndon(LyndonArgs),
    /// P_m, Q_m, A_m and their cyclotomic factorizations.
    Poly(PolyArgs),
    /// Check P_m(q) != 0 for all 2 <= |m| <= D.
    Free(FreeArgs),
    /// Kernel dimension of the shuffle map at a minimal degenerate degree.
    Kernel(KernelArgs),
    /// Box search for K(m) = λ(m) at a transcendental exponent braiding.
    Dioph(DiophArgs),
    /// Run seeded invariant checks.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct LyndonArgs {
    /// Degree vector entries.
    #[arg(required_unless_present = "all_upto", conflicts_with = "all_upto")]
    degree: Vec<u32>,
    /// Every degree with 1 <= |m| <= D.
    #[arg(long, value_name = "D")]
    all_upto: Option<u32>,
    /// Alphabet size for --all-upto.
    #[arg(long, default_value_t = 2, requires = "all_upto")]
    letters: usize,
    /// List the Lyndon words.
    #[arg(long)]
    words: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PolyArgs {
    #[arg(required = true)]
    degree: Vec<u32>,
    #[arg(long)]
    pm: bool,
    #[arg(long)]
    am: bool,
    #[arg(long)]
    qm: bool,
    /// Φ-multiplicities of A_m, P_m and the cofactor A_m / P_m.
    #[arg(long)]
    factors: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FreeArgs {
    spec: PathBuf,
    #[arg(long, value_name = "D")]
    maxdeg: u32,
    /// Brute-force kernels of the shuffle map and the symmetrizer at every witness.
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct KernelArgs {
    spec: PathBuf,
    #[arg(required = true)]
    degree: Vec<u32>,
    /// Also compute both kernels by exact elimination.
    #[arg(long)]
    brute: bool,
    /// Write ρ(S_(1,|m|-1))|V_m as JSON to this file.
    #[arg(long, value_name = "FILE")]
    dump: Option<PathBuf>,
}

#[derive(Args)]
struct DiophArgs {
    spec: PathBuf,
    #[arg(long = "box", value_name = "B")]
    bound: u32,
    /// Skip evaluating P_m(t) over the box.
    #[arg(long)]
    no_crosscheck: bool,
}

#[derive(Args)]
struct SelftestArgs {
    /// Seed in hex, with or without 0x.
    #[arg(long, value_parser = parse_seed, default_value = "0x4E314348")]
    seed: u64,
}

fn parse_seed(s: &str) -> std::result::Result<u64, String> {
    let digits = s.trim_start_matches("0x").trim_start_matches("0X");
    u64::from_str_radix(digits, 16).map_err(|e| format!("bad seed {s:?}: {e}"))
}

/// A failure caused by bad arguments rather than by the computation.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn degree(entries: &[u32]) -> Result<DegreeVector> {
    let m = DegreeVector::new(entries.to_vec()).map_err(|e| usage(e.to_string()))?;
    if m.is_zero() {
        return Err(usage("degree vector must be nonzero"));
    }
    Ok(m)
}

fn degree_for(entries: &[u32], n: usize) -> Result<DegreeVector> {
    let m = degree(entries)?;
    if m.n() != n {
        return Err(usage(format!("degree {m} has {} entries, the braiding has {n} letters", m.n())));
    }
    Ok(m)
}

fn print_json(v: &Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(v)?;
    text.push('\n');
    std::io::stdout().write_all(text.as_bytes())?;
    Ok(())
}

fn lyndon_row(m: &DegreeVector, words: bool) -> Result<Value> {
    let mut row = json!({
        "m": m,
        "total": m.total(),
        "gcd": m.gcd()?,
        "big_n": m.big_n().ok(),
        "lyndon": lyndon_count(m)?,
        "necklaces": necklace_count(m)?,
    });
    if words {
        let list: Vec<String> = lyndon_words(m)?.iter().map(|w| w.to_string()).collect();
        row["words"] = json!(list);
    }
    Ok(row)
}

fn cmd_lyndon(args: &LyndonArgs) -> Result<ExitCode> {
    let degrees = match args.all_upto {
        Some(d) => {
            if args.letters == 0 {
                return Err(usage("--letters must be at least 1"));
            }
            DegreeVector::graded(args.letters, 1, d)
        }
        None => vec![degree(&args.degree)?],
    };
    let rows = degrees
        .iter()
        .map(|m| lyndon_row(m, args.words))
        .collect::<Result<Vec<_>>>()?;
    if args.json {
        print_json(&Value::Array(rows))?;
        return Ok(ExitCode::SUCCESS);
    }
    let mut out = format!("{:<16} {:>4} {:>4} {:>6} {:>10} {:>10}\n", "m", "|m|", "gcd", "N(m)", "l_m", "N_m");
    for r in &rows {
        let m = serde_json::from_value::<DegreeVector>(r["m"].clone())?;
        let cell = |key: &str| match &r[key] {
            Value::Null => "-".to_string(),
            v => v.to_string(),
        };
        out += &format!(
            "{:<16} {:>4} {:>4} {:>6} {:>10} {:>10}\n",
            m.to_string(),
            cell("total"),
            cell("gcd"),
            cell("big_n"),
            cell("lyndon"),
            cell("necklaces")
        );
        if let Some(words) = r["words"].as_array() {
            let list: Vec<&str> = words.iter().filter_map(Value::as_str).collect();
            let shown = if list.is_empty() { "(none)".to_string() } else { list.join(" ") };
            out += &format!("  {shown}\n");
        }
    }
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_poly(args: &PolyArgs) -> Result<ExitCode> {
    let m = degree(&args.degree)?;
    if m.total() < 2 {
        return Err(usage(format!("poly needs |m| >= 2, got {m}")));
    }
    let none = !(args.pm || args.am || args.qm || args.factors);
    let case = classify(&m)?;
    let mut doc = json!({ "m": m, "case": case.number(), "tag": case.tag() });
    let mut text = Vec::new();
    if args.pm || none {
        let p = p_poly(&m)?;
        text.push(format!("P_{m} = {p}"));
        doc["pm"] = json!({ "text": p.to_text(), "terms": p.to_json() });
    }
    if args.qm {
        let q = q_monomial(&m)?;
        text.push(format!("Q_{m} = {q}"));
        doc["qm"] = json!({ "text": q.to_string(), "exps": q.to_json(), "big_n": m.big_n()? });
    }
    if args.am {
        let a = a_form(&m)?;
        let expanded = a.expand()?;
        text.push(format!("A_{m} = {a}"));
        text.push(format!("    = {expanded}"));
        doc["am"] = json!({ "form": a.to_json(), "text": expanded.to_text(), "terms": expanded.to_json() });
    }
    if args.factors {
        let (a, p, c) = (a_form(&m)?, p_factor_form(&m)?, a_cofactor(&m)?);
        text.push(format!("Q = {}", a.base));
        text.push(format!("A_{m} = {a}"));
        text.push(format!("P_{m} = {p}"));
        text.push(format!("A_{m} / P_{m} = {c}"));
        doc["factors"] = json!({ "a": a.to_json(), "p": p.to_json(), "cofactor": c.to_json() });
    }
    if args.json {
        print_json(&doc)?;
    } else {
        println!("{}", text.join("\n"));
    }
    Ok(ExitCode::SUCCESS)
}

fn load(path: &Path) -> Result<(BraidingSpec, Braiding)> {
    let spec = BraidingSpec::load(path)?;
    let braiding = spec.build().with_context(|| format!("invalid spec {}", path.display()))?;
    Ok((spec, braiding))
}

fn free_with<F: Field>(q: &BraidingMatrix<F>, args: &FreeArgs, mut doc: Value) -> Result<ExitCode> {
    if args.maxdeg < 2 {
        return Err(usage(format!("--maxdeg must be at least 2, got {}", args.maxdeg)));
    }
    let report = freeness_check(q, args.maxdeg)?;
    let free = report.is_free();
    let Value::Object(fields) = serde_json::to_value(&report)? else { unreachable!() };
    doc.as_object_mut().expect("object").extend(fields);
    if args.verify {
        let kernels = report
            .witnesses
            .iter()
            .map(|m| kernel_dim(q, m, true, true))
            .collect::<nichols::Result<Vec<_>>>()?;
        doc["verification"] = serde_json::to_value(kernels)?;
    }
    print_json(&doc)?;
    Ok(if free { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn cmd_free(args: &FreeArgs) -> Result<ExitCode> {
    let (_, braiding) = load(&args.spec)?;
    let doc = json!({ "braiding": braiding.to_json() });
    match &braiding {
        Braiding::Cyclotomic(q) => free_with(q, args, doc),
        Braiding::Transcendental(_, q) => free_with(q, args, doc),
    }
}

fn write_atomically(path: &Path, contents: &str) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    std::fs::write(&tmp, contents).with_context(|| format!("cannot write {}", path.display()))?;
    std::fs::rename(&tmp, path).with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}

fn kernel_with<F: Field>(q: &BraidingMatrix<F>, args: &KernelArgs, mut doc: Value) -> Result<ExitCode> {
    let m = degree_for(&args.degree, q.n())?;
    let report = kernel_dim(q, &m, args.brute, args.brute)?;
    if let Some(path) = &args.dump {
        let matrix = s1_matrix(m.total() as usize - 1, &m, q)?;
        let dump = HomogeneousComponent::new(&m).dump(&matrix);
        write_atomically(path, &serde_json::to_string(&dump)?)?;
    }
    let Value::Object(fields) = serde_json::to_value(&report)? else { unreachable!() };
    doc.as_object_mut().expect("object").extend(fields);
    print_json(&doc)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_kernel(args: &KernelArgs) -> Result<ExitCode> {
    let (_, braiding) = load(&args.spec)?;
    let doc = json!({ "braiding": braiding.to_json() });
    match &braiding {
        Braiding::Cyclotomic(q) => kernel_with(q, args, doc),
        Braiding::Transcendental(_, q) => kernel_with(q, args, doc),
    }
}

/// Degrees in the box where `P_m(t) = 0` disagrees with `K(m) = λ(m)`.
fn crosscheck(q: &BraidingMatrix<RatFunc>, bound: u32, solutions: &[DegreeVector]) -> Result<(usize, Vec<Value>)> {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for m in box_degrees(q.n(), bound) {
        if m.total() < 2 {
            continue;
        }
        let zero = p_value(&m, q)?.is_zero();
        let exceptional = is_exceptional_degree(&m)?;
        let expected = !exceptional && solutions.contains(&m);
        if zero != expected {
            mismatches.push(json!({ "m": m, "p_vanishes": zero, "k_equals_lambda": expected }));
        }
        checked += 1;
    }
    Ok((checked, mismatches))
}

fn cmd_dioph(args: &DiophArgs) -> Result<ExitCode> {
    let (_, braiding) = load(&args.spec)?;
    let Braiding::Transcendental(exponents, q) = &braiding else {
        bail!("dioph needs a transcendental spec; the criterion assumes q is not a root of unity");
    };
    let solutions = diophantine_search(exponents, args.bound)?;
    let mut doc = json!({
        "exponents": exponents.a,
        "box": args.bound,
        "solutions": solutions,
        "verdict": if solutions.is_empty() { format!("free-in-box-{}", args.bound) } else { "not-free".into() },
    });
    if !args.no_crosscheck {
        let (checked, mismatches) = crosscheck(q, args.bound, &solutions)?;
        let consistent = mismatches.is_empty();
        doc["crosscheck"] = json!({ "degrees": checked, "mismatches": mismatches });
        if !consistent {
            print_json(&doc)?;
            bail!("K(m) = λ(m) disagrees with P_m(t) = 0 inside the box");
        }
    }
    print_json(&doc)?;
    Ok(if solutions.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn cmd_selftest(args: &SelftestArgs) -> Result<ExitCode> {
    let mut out = format!("seed 0x{:X}\n", args.seed);
    let mut failed = 0;
    for check in selftest::run(args.seed) {
        match check.outcome {
            Ok(detail) => out += &format!("ok      {}: {detail}\n", check.name),
            Err(err) => {
                failed += 1;
                out += &format!("FAILED  {}: {err:#}\n", check.name);
            }
        }
    }
    print!("{out}");
    if failed > 0 {
        eprintln!("{failed} checks failed");
        return Ok(ExitCode::FAILURE);
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { ExitCode::FAILURE } else { ExitCode::SUCCESS };
        }
    };
    let result = match &cli.command {
        Command::Lyndon(a) => cmd_lyndon(a),
        Command::Poly(a) => cmd_poly(a),
        Command::Free(a) => cmd_free(a),
        Command::Kernel(a) => cmd_kernel(a),
        Command::Dioph(a) => cmd_dioph(a),
        Command::Selftest(a) => cmd_selftest(a),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            if err.is::<Usage>() {
                eprintln!("usage error: {err}");
            } else {
                eprintln!("error: {err:#}");
            }
            ExitCode::FAILURE
        }
    }
}
