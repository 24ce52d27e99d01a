//! cycbound: inspect q-ary cyclic codes, compare minimum-distance bounds,
//! sweep code families, emit ratio-curve data, and run verification suites.
//!
//! Exit codes: 0 ok, 1 verification failed, 2 bad input, 3 cap exceeded.
//! All output is deterministic for a fixed invocation (including --seed and
//! regardless of --jobs), so runs can be diffed byte for byte.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use cyclic_bounds::{
    bch_bound, bound_report, cyclotomic_coset, ht_bound, ht_bound_normalized, min_distance,
    nzl_bound, nzl_search, parity_bound_formula, rational_form, rs_bound_formula,
    synth_ht_pattern, verify_definition2, verify_series_identity, BchWitness, CyclicCode,
    DefiningSet, Error, Field, HtWitness, Locator, NzlWitness, PairContext, SearchConfig,
    DEFAULT_ENUM_CAP, DEFAULT_FIELD_CAP,
};

mod desc;

use desc::CodeDesc;

/// Enumerating all coset unions doubles per coset, so longer sweeps are
/// refused rather than left to run for hours.
const SCAN_LENGTH_CAP: u64 = 63;

const SOUNDNESS_ENUM_CAP: u64 = 1 << 20;
const SOUNDNESS_FIELD_CAP: u64 = 1 << 30;

#[derive(Parser)]
#[command(name = "cycbound", version, about = "Minimum-distance bounds for q-ary cyclic codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Describe a code: parameters, cosets, defining set, generator
    Code(CodeArgs),
    /// BCH, Hartmann-Tzeng, and non-zero-locator bounds with witnesses
    Bounds(BoundsArgs),
    /// One row per cyclic code of odd length up to n-max
    Scan(ScanArgs),
    /// Ratio-curve data for the closed-form locator bounds
    Figure(FigureArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
    /// Exact minimum distance by exhaustive enumeration
    Distance(DistanceArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// JSON code description file
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Inline JSON code description
    #[arg(long, value_name = "JSON")]
    inline: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Args)]
struct CodeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest splitting field size
    #[arg(long, value_name = "N", default_value_t = DEFAULT_FIELD_CAP)]
    cap_field: u64,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Locator families to try, e.g. "parity:2-8,rs:2-8"
    #[arg(long, value_name = "SPEC")]
    families: Option<String>,
    /// Add the exact minimum distance of the closure's code
    #[arg(long)]
    oracle: bool,
    /// Largest message count the oracle may enumerate
    #[arg(long, value_name = "N", default_value_t = DEFAULT_ENUM_CAP)]
    cap_enum: u64,
    /// Largest splitting field size
    #[arg(long, value_name = "N", default_value_t = DEFAULT_FIELD_CAP)]
    cap_field: u64,
}

#[derive(Args)]
struct ScanArgs {
    /// Alphabet size (prime power)
    #[arg(long)]
    q: u64,
    /// Largest code length (odd, at most 63)
    #[arg(long, value_name = "N")]
    n_max: u64,
    /// Locator families to try, e.g. "parity:2-8,rs:2-8"
    #[arg(long, value_name = "SPEC")]
    families: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Largest message count the oracle may enumerate per code
    #[arg(long, value_name = "N", default_value_t = DEFAULT_ENUM_CAP)]
    cap_enum: u64,
    /// Largest splitting field size
    #[arg(long, value_name = "N", default_value_t = DEFAULT_FIELD_CAP)]
    cap_field: u64,
    /// Worker threads (default: all cores)
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
    /// Keep one representative per unit-multiple equivalence class
    #[arg(long)]
    dedupe: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Fig1,
    Fig2,
}

#[derive(Args)]
struct FigureArgs {
    /// fig1: parity-check locators, m = nu+2; fig2: RS locators, m = nu+d_l
    #[arg(value_enum)]
    which: Which,
    /// Design distance range
    #[arg(long, value_name = "RANGE", default_value = "2-20")]
    d0: String,
    /// nu range (default: fig1 1-6, fig2 6)
    #[arg(long, value_name = "RANGE")]
    nu: Option<String>,
    /// Locator distance range, fig2 only
    #[arg(long, value_name = "RANGE")]
    dl: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Worker threads (default: all cores)
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Def2,
    Series,
    Degrees,
    Soundness,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest message count oracles may enumerate (default: 2^24, soundness 2^20)
    #[arg(long, value_name = "N")]
    cap_enum: Option<u64>,
    /// Largest splitting field size (default: 2^24, soundness 2^30)
    #[arg(long, value_name = "N")]
    cap_field: Option<u64>,
    /// soundness: locator families to try
    #[arg(long, value_name = "SPEC")]
    families: Option<String>,
    /// soundness: alphabet size
    #[arg(long, default_value_t = 2)]
    q: u64,
    /// soundness: largest code length (odd, at most 63)
    #[arg(long, value_name = "N", default_value_t = 31)]
    n_max: u64,
    /// Worker threads (default: all cores)
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
}

#[derive(Args)]
struct DistanceArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest message count to enumerate
    #[arg(long, value_name = "N", default_value_t = DEFAULT_ENUM_CAP)]
    cap_enum: u64,
    /// Largest splitting field size
    #[arg(long, value_name = "N", default_value_t = DEFAULT_FIELD_CAP)]
    cap_field: u64,
}

struct Failure {
    code: u8,
    msg: String,
}

fn bad_input(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

fn check_failed(msg: impl Into<String>) -> Failure {
    Failure { code: 1, msg: msg.into() }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::FieldCapExceeded { .. }
            | Error::EnumCapExceeded { .. }
            | Error::LengthCapExceeded { .. } => 3,
            _ => 2,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.msg.is_empty() {
                eprintln!("error: {}", f.msg);
            }
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Code(args) => cmd_code(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Figure(args) => cmd_figure(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Distance(args) => cmd_distance(args),
    }
}

fn load_desc(args: &InputArgs) -> Result<CodeDesc, Failure> {
    let text = match (&args.input, &args.inline) {
        (Some(path), None) => std::fs::read_to_string(path)
            .map_err(|e| bad_input(format!("cannot read {}: {e}", path.display())))?,
        (None, Some(s)) => s.clone(),
        _ => unreachable!("clap enforces exactly one input source"),
    };
    desc::parse_desc(&text).map_err(bad_input)
}

fn families_config(spec: &Option<String>) -> Result<SearchConfig, Failure> {
    match spec {
        Some(s) => desc::parse_families(s).map_err(bad_input),
        None => Ok(SearchConfig::default()),
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs {
        None | Some(0) => Ok(f()),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| bad_input(format!("cannot build thread pool: {e}")))
            .map(|pool| pool.install(f)),
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("value serializes"));
}

/// Members from smallest to largest with missing residues marked by the gap
/// symbol: "1,2,3,4,□,6,...".
fn gap_rendering(set: &DefiningSet) -> String {
    let members = set.members();
    let (Some(&lo), Some(&hi)) = (members.first(), members.last()) else {
        return "(empty)".into();
    };
    (lo..=hi)
        .map(|r| {
            if set.contains(r as i64) {
                r.to_string()
            } else {
                "□".to_string()
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

fn field_name(f: &Field) -> String {
    if f.t() == 1 {
        format!("GF({})", f.p())
    } else {
        format!("GF({}^{})", f.p(), f.t())
    }
}

fn field_record(f: &Field) -> Value {
    json!({"p": f.p(), "t": f.t(), "modulus": f.modulus()})
}

fn bch_witness_json(w: &BchWitness) -> Value {
    json!({"b": w.b, "len": w.len})
}

fn ht_witness_json(w: &HtWitness) -> Value {
    json!({"b1": w.b1, "m1": w.m1, "m2": w.m2, "d0": w.d0, "nu": w.nu})
}

fn nzl_witness_json(w: &NzlWitness) -> Value {
    json!({
        "family": w.locator.family_name(),
        "n_l": w.locator.n_l(),
        "d_l": w.locator.d_l(),
        "e": w.e,
        "mu": w.mu,
    })
}

fn random_codeword(code: &CyclicCode, rng: &mut ChaCha8Rng) -> Result<Vec<u64>, Error> {
    let q = code.q();
    let k = code.k() as usize;
    loop {
        let msg: Vec<u64> = (0..k).map(|_| rng.gen_range(0..q)).collect();
        if msg.iter().any(|&v| v != 0) {
            return Ok(code.encode_values(&msg)?.values().to_vec());
        }
    }
}

fn cmd_code(args: CodeArgs) -> Result<(), Failure> {
    let desc = load_desc(&args.input)?;
    let code = CyclicCode::from_defining_set_with_cap(&desc.set, args.cap_field)?;
    let set = code.defining_set();
    let reps = set.coset_representatives()?;
    let cosets: Vec<Vec<u64>> = reps
        .iter()
        .map(|&r| {
            let mut c = cyclotomic_coset(set.n(), set.q(), r as i64)?;
            c.sort_unstable();
            Ok(c)
        })
        .collect::<Result<_, Error>>()?;
    let generator: Vec<u64> = (0..=code.generator().degree().unwrap_or(0))
        .map(|i| code.generator().coeff(i).value())
        .collect();
    match args.format {
        Format::Text => {
            println!("q = {}, n = {}, k = {}", code.q(), code.n(), code.k());
            if cosets.is_empty() {
                println!("cosets: (none)");
            } else {
                let parts: Vec<String> = reps
                    .iter()
                    .zip(&cosets)
                    .map(|(r, c)| {
                        let list: Vec<String> = c.iter().map(u64::to_string).collect();
                        format!("C_{r} = {{{}}}", list.join(", "))
                    })
                    .collect();
                println!("cosets: {}", parts.join(", "));
            }
            println!("defining set ({}): {}", set.len(), gap_rendering(set));
            println!("generator = {}", code.generator());
            println!(
                "alphabet = {}, splitting field = {}",
                field_name(code.alphabet()),
                field_name(code.splitting_field())
            );
        }
        Format::Json => print_json(&json!({
            "q": code.q(),
            "n": code.n(),
            "k": code.k(),
            "cosets": cosets,
            "defining_set": set.members(),
            "rendered": gap_rendering(set),
            "generator": generator,
            "alphabet": field_record(code.alphabet()),
            "splitting_field": field_record(code.splitting_field()),
        })),
        Format::Csv => {
            println!("q,n,k");
            println!("{},{},{}", code.q(), code.n(), code.k());
        }
    }
    Ok(())
}

fn cmd_bounds(args: BoundsArgs) -> Result<(), Failure> {
    let desc = load_desc(&args.input)?;
    let families = families_config(&args.families)?;
    let report = bound_report(&desc.set, &families)?;
    let closure = desc.set.closure();
    let k = desc.n - closure.len();
    let true_distance = if args.oracle {
        let code = CyclicCode::from_defining_set_with_cap(&closure, args.cap_field)?;
        Some(min_distance(&code, args.cap_enum)?)
    } else {
        None
    };
    match args.format {
        Format::Text => {
            println!("q = {}, n = {}, k = {}", desc.q, desc.n, k);
            println!(
                "defining set ({}): {}",
                desc.set.len(),
                gap_rendering(&desc.set)
            );
            let bw = &report.bch_witness;
            println!("bch = {}  (b = {}, len = {})", report.bch, bw.b, bw.len);
            let hw = &report.ht_witness;
            println!(
                "ht = {}  (b1 = {}, m1 = {}, m2 = {}, d0 = {}, nu = {})",
                report.ht, hw.b1, hw.m1, hw.m2, hw.d0, hw.nu
            );
            let nw = &report.nzl_witness;
            println!(
                "nzl = {}  (family = {}, n_l = {}, d_l = {}, e = {}, mu = {})",
                report.nzl,
                nw.locator.family_name(),
                nw.locator.n_l(),
                nw.locator.d_l(),
                nw.e,
                nw.mu
            );
            if let Some(r) = &true_distance {
                println!("d_true = {}  ({} codewords)", r.distance, r.enumerated);
            }
        }
        Format::Json => print_json(&json!({
            "q": desc.q,
            "n": desc.n,
            "k": k,
            "defining_set": desc.set.members(),
            "bounds": {"bch": report.bch, "ht": report.ht, "nzl": report.nzl},
            "witnesses": {
                "bch": bch_witness_json(&report.bch_witness),
                "ht": ht_witness_json(&report.ht_witness),
                "nzl": nzl_witness_json(&report.nzl_witness),
            },
            "true_distance": true_distance.as_ref().map(|r| r.distance),
        })),
        Format::Csv => {
            println!("q,n,k,bch,ht,nzl,d_true");
            let d = true_distance
                .as_ref()
                .map_or("NA".to_string(), |r| r.distance.to_string());
            println!(
                "{},{},{},{},{},{},{}",
                desc.q, desc.n, k, report.bch, report.ht, report.nzl, d
            );
        }
    }
    Ok(())
}

fn cmd_distance(args: DistanceArgs) -> Result<(), Failure> {
    let desc = load_desc(&args.input)?;
    let code = CyclicCode::from_defining_set_with_cap(&desc.set, args.cap_field)?;
    let result = min_distance(&code, args.cap_enum)?;
    match args.format {
        Format::Text => {
            println!("q = {}, n = {}, k = {}", code.q(), code.n(), code.k());
            println!("d = {}  ({} codewords)", result.distance, result.enumerated);
            println!(
                "witness = {}  (weight {})",
                result.witness,
                result.witness.weight()
            );
        }
        Format::Json => print_json(&json!({
            "q": code.q(),
            "n": code.n(),
            "k": code.k(),
            "distance": result.distance,
            "enumerated": result.enumerated,
            "witness": result.witness.values(),
        })),
        Format::Csv => {
            println!("q,n,k,distance,enumerated");
            println!(
                "{},{},{},{},{}",
                code.q(),
                code.n(),
                code.k(),
                result.distance,
                result.enumerated
            );
        }
    }
    Ok(())
}

/// Every union of cyclotomic cosets for every odd length up to n_max that is
/// coprime to q, ordered by (n, members).
fn all_cyclic_sets(q: u64, n_max: u64) -> Vec<DefiningSet> {
    let mut out = Vec::new();
    for n in 3..=n_max {
        if n % 2 == 0 || n.gcd(&q) != 1 {
            continue;
        }
        let mut reps = Vec::new();
        let mut seen = vec![false; n as usize];
        for r in 0..n {
            if seen[r as usize] {
                continue;
            }
            reps.push(r as i64);
            let mut c = r;
            while !seen[c as usize] {
                seen[c as usize] = true;
                c = c * q % n;
            }
        }
        let count = reps.len();
        for mask in 1u64..(1u64 << count) - 1 {
            let sel: Vec<i64> = reps
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &r)| r)
                .collect();
            out.push(
                DefiningSet::new(n, q, &sel)
                    .expect("validated parameters")
                    .closure(),
            );
        }
    }
    out.sort_by_key(|s| (s.n(), s.members()));
    out
}

/// Smallest member list over all unit multiples, the dedupe key.
fn unit_canonical(set: &DefiningSet) -> Vec<u64> {
    let n = set.n();
    (1..n)
        .filter(|u| u.gcd(&n) == 1)
        .map(|u| set.unit_multiple(u).expect("unit residue").members())
        .min()
        .expect("u = 1 always qualifies")
}

struct ScanRow {
    n: u64,
    cosets: Vec<u64>,
    k: u64,
    bch: u64,
    ht: u64,
    nzl: Option<u64>,
    d_true: Option<u64>,
}

fn scan_row(
    set: &DefiningSet,
    families: &SearchConfig,
    cap_enum: u64,
    cap_field: u64,
) -> Result<ScanRow, Error> {
    let (bch, _) = bch_bound(set)?;
    let (ht, _) = ht_bound(set)?;
    let nzl = match nzl_search(set, families) {
        Ok((v, _)) => Some(v),
        Err(Error::EmptySearchConfig) => None,
        Err(e) => return Err(e),
    };
    let d_true = match CyclicCode::from_defining_set_with_cap(set, cap_field) {
        Ok(code) => match min_distance(&code, cap_enum) {
            Ok(r) => Some(r.distance),
            Err(Error::EnumCapExceeded { .. }) => None,
            Err(e) => return Err(e),
        },
        Err(Error::FieldCapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(ScanRow {
        n: set.n(),
        cosets: set.coset_representatives()?,
        k: set.n() - set.len(),
        bch,
        ht,
        nzl,
        d_true,
    })
}

fn cmd_scan(args: ScanArgs) -> Result<(), Failure> {
    if !desc::is_prime_power(args.q) {
        return Err(bad_input(format!("q = {} is not a prime power", args.q)));
    }
    if args.n_max > SCAN_LENGTH_CAP {
        return Err(bad_input(format!(
            "scan supports n_max <= {SCAN_LENGTH_CAP}"
        )));
    }
    let families = families_config(&args.families)?;
    let mut sets = all_cyclic_sets(args.q, args.n_max);
    if args.dedupe {
        let mut seen: BTreeSet<(u64, Vec<u64>)> = BTreeSet::new();
        sets.retain(|s| seen.insert((s.n(), unit_canonical(s))));
    }
    let rows: Vec<ScanRow> = with_jobs(args.jobs, || {
        sets.par_iter()
            .map(|set| scan_row(set, &families, args.cap_enum, args.cap_field))
            .collect::<Result<_, Error>>()
    })??;
    match args.format {
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "cosets": r.cosets,
                        "k": r.k,
                        "bch": r.bch,
                        "ht": r.ht,
                        "nzl": r.nzl,
                        "d_true": r.d_true,
                        "nzl_gt_ht": r.nzl.map(|v| v > r.ht),
                    })
                })
                .collect();
            print_json(&Value::Array(items));
        }
        Format::Csv | Format::Text => {
            println!("n,cosets,k,bch,ht,nzl,d_true,nzl_gt_ht");
            for r in rows {
                let cosets: Vec<String> = r.cosets.iter().map(u64::to_string).collect();
                let nzl = r.nzl.map_or("NA".to_string(), |v| v.to_string());
                let d = r.d_true.map_or("NA".to_string(), |v| v.to_string());
                let flag = r
                    .nzl
                    .map_or("NA".to_string(), |v| u64::from(v > r.ht).to_string());
                println!(
                    "{},{},{},{},{},{},{},{}",
                    r.n,
                    cosets.join(";"),
                    r.k,
                    r.bch,
                    r.ht,
                    nzl,
                    d,
                    flag
                );
            }
        }
    }
    Ok(())
}

struct FigRow {
    d0: u64,
    nu: u64,
    m: u64,
    d_l: u64,
    d_star: u64,
    ht: u64,
}

/// Rebuilds the row's pattern and runs the full locator search on it; the
/// closed form must match exactly.
fn cross_check(which: Which, row: &FigRow) -> Result<(), Failure> {
    let n = 2 * row.m * row.d0 + 1;
    let set = synth_ht_pattern(0, row.m, row.d0, row.nu, n)?;
    let locator = match which {
        Which::Fig1 => Locator::parity_check(row.m)?,
        Which::Fig2 => Locator::reed_solomon_for(set.q(), row.m, row.nu + 1, 0)?,
    };
    let (value, _) = nzl_bound(&set, &locator)?;
    if value != row.d_star {
        return Err(check_failed(format!(
            "cross-check failed at d0 = {}, nu = {}, m = {}: closed form {}, locator search {}",
            row.d0, row.nu, row.m, row.d_star, value
        )));
    }
    Ok(())
}

fn cmd_figure(args: FigureArgs) -> Result<(), Failure> {
    let (d0_lo, d0_hi) = desc::parse_range(&args.d0).map_err(bad_input)?;
    if d0_lo < 2 || d0_hi > 1000 {
        return Err(bad_input("d0 range must lie in 2-1000"));
    }
    let nu_default = match args.which {
        Which::Fig1 => "1-6",
        Which::Fig2 => "6",
    };
    let (nu_lo, nu_hi) =
        desc::parse_range(args.nu.as_deref().unwrap_or(nu_default)).map_err(bad_input)?;
    if nu_lo < 1 || nu_hi > 60 {
        return Err(bad_input("nu range must lie in 1-60"));
    }
    let mut rows = Vec::new();
    match args.which {
        Which::Fig1 => {
            if args.dl.is_some() {
                return Err(bad_input("--dl only applies to fig2"));
            }
            for nu in nu_lo..=nu_hi {
                for d0 in d0_lo..=d0_hi {
                    rows.push(FigRow {
                        d0,
                        nu,
                        m: nu + 2,
                        d_l: 2,
                        d_star: parity_bound_formula(d0, nu),
                        ht: d0 + nu,
                    });
                }
            }
        }
        Which::Fig2 => {
            let (dl_lo, dl_hi) =
                desc::parse_range(args.dl.as_deref().unwrap_or("2-6")).map_err(bad_input)?;
            if dl_lo < 2 || dl_hi > 60 {
                return Err(bad_input("d_l range must lie in 2-60"));
            }
            for nu in nu_lo..=nu_hi {
                for d_l in dl_lo..=dl_hi {
                    let m = nu + d_l;
                    for d0 in d0_lo..=d0_hi {
                        rows.push(FigRow {
                            d0,
                            nu,
                            m,
                            d_l,
                            d_star: rs_bound_formula(d0, nu, m)?,
                            ht: d0 + nu,
                        });
                    }
                }
            }
        }
    }
    with_jobs(args.jobs, || {
        rows.par_iter()
            .map(|row| cross_check(args.which, row))
            .collect::<Result<Vec<()>, Failure>>()
    })??;
    match args.format {
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "d0": r.d0,
                        "nu": r.nu,
                        "m": r.m,
                        "d_l": r.d_l,
                        "d_star": r.d_star,
                        "ht": r.ht,
                        "ratio": r.d_star as f64 / r.ht as f64,
                    })
                })
                .collect();
            print_json(&Value::Array(items));
        }
        Format::Csv | Format::Text => {
            println!("d0,nu,m,d_l,d_star,ht,ratio");
            for r in rows {
                println!(
                    "{},{},{},{},{},{},{:.4}",
                    r.d0,
                    r.nu,
                    r.m,
                    r.d_l,
                    r.d_star,
                    r.ht,
                    r.d_star as f64 / r.ht as f64
                );
            }
        }
    }
    Ok(())
}

struct SuiteOutcome {
    check: &'static str,
    params: Value,
    pass: bool,
    seed: u64,
    counterexample: Option<Value>,
    summary: String,
    extra: Vec<(&'static str, Value)>,
}

fn report_suite(format: Format, outcome: SuiteOutcome) -> Result<(), Failure> {
    match format {
        Format::Json => {
            let mut v = json!({
                "check": outcome.check,
                "params": outcome.params,
                "pass": outcome.pass,
                "seed": outcome.seed,
                "counterexample": outcome.counterexample,
            });
            for (key, value) in outcome.extra {
                v[key] = value;
            }
            print_json(&v);
        }
        Format::Text => {
            let verdict = if outcome.pass { "PASS" } else { "FAIL" };
            println!("{}: {} ({})", outcome.check, verdict, outcome.summary);
            if let Some(ce) = &outcome.counterexample {
                println!("counterexample: {ce}");
            }
        }
        Format::Csv => {
            println!("check,pass");
            println!("{},{}", outcome.check, u64::from(outcome.pass));
        }
    }
    if outcome.pass {
        Ok(())
    } else {
        Err(Failure { code: 1, msg: String::new() })
    }
}

fn example_fixture(cap_field: u64) -> Result<(CyclicCode, Locator), Error> {
    let code = CyclicCode::build_with_cap(2, 21, &[1, 3, 7, 9], cap_field)?;
    let locator = Locator::reed_solomon(16, 5, 4, 0)?;
    Ok((code, locator))
}

fn suite_def2(args: &VerifyArgs) -> Result<SuiteOutcome, Failure> {
    let cap_enum = args.cap_enum.unwrap_or(DEFAULT_ENUM_CAP);
    let cap_field = args.cap_field.unwrap_or(DEFAULT_FIELD_CAP);
    let (code, locator) = example_fixture(cap_field)?;
    let (e, mu, trials) = (0u64, 14u64, 20u64);
    let report = verify_definition2(&code, &locator, e, mu, trials, args.seed, cap_enum, cap_field)?;
    Ok(SuiteOutcome {
        check: "def2",
        params: json!({
            "q": code.q(), "n": code.n(), "n_l": locator.n_l(),
            "e": e, "mu": mu, "trials": trials,
        }),
        pass: report.pass,
        seed: args.seed,
        counterexample: report
            .first_failure
            .map(|f| json!({"pair": f.pair, "j": f.j})),
        summary: format!("{} pairs, e = {e}, mu = {mu}, seed {}", report.pairs, args.seed),
        extra: vec![],
    })
}

fn suite_series(args: &VerifyArgs) -> Result<SuiteOutcome, Failure> {
    let cap_field = args.cap_field.unwrap_or(DEFAULT_FIELD_CAP);
    let (code, _) = example_fixture(cap_field)?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let (count, terms) = (50u64, 2 * code.n() as usize);
    let mut counterexample = None;
    for i in 0..count {
        let c = random_codeword(&code, &mut rng)?;
        if !verify_series_identity(&code, &c, terms)? {
            counterexample = Some(json!({"index": i, "codeword": c}));
            break;
        }
    }
    Ok(SuiteOutcome {
        check: "series",
        params: json!({"q": code.q(), "n": code.n(), "codewords": count, "terms": terms}),
        pass: counterexample.is_none(),
        seed: args.seed,
        summary: format!("{count} codewords, {terms} terms, seed {}", args.seed),
        counterexample,
        extra: vec![],
    })
}

fn suite_degrees(args: &VerifyArgs) -> Result<SuiteOutcome, Failure> {
    let cap_field = args.cap_field.unwrap_or(DEFAULT_FIELD_CAP);
    let (code, locator) = example_fixture(cap_field)?;
    let ctx = PairContext::new(&code, &locator, cap_field)?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let (count, e) = (50u64, 0u64);
    let mut counterexample = None;
    for i in 0..count {
        let c = random_codeword(ctx.code(), &mut rng)?;
        let a = random_codeword(ctx.locator_code(), &mut rng)?;
        let pairs = c.iter().filter(|&&v| v != 0).count()
            * a.iter().filter(|&&v| v != 0).count();
        let form = rational_form(&ctx, &c, &a, e)?;
        let den_ok = form.den.degree() == Some(pairs);
        let num_ok = form.num.degree().map_or(true, |d| d < pairs);
        if !den_ok || !num_ok {
            counterexample = Some(json!({
                "index": i,
                "support_pairs": pairs,
                "deg_den": form.den.degree(),
                "deg_num": form.num.degree(),
            }));
            break;
        }
    }
    Ok(SuiteOutcome {
        check: "degrees",
        params: json!({"q": code.q(), "n": code.n(), "n_l": locator.n_l(), "pairs": count, "e": e}),
        pass: counterexample.is_none(),
        seed: args.seed,
        summary: format!("{count} pairs, seed {}", args.seed),
        counterexample,
        extra: vec![],
    })
}

struct Violation {
    n: u64,
    members: Vec<u64>,
    kind: &'static str,
    detail: String,
}

/// Checks one code: internal bound ordering, witness validity, agreement of
/// the two HT searches, and every bound against the oracle when it fits.
fn soundness_one(
    set: &DefiningSet,
    families: &SearchConfig,
    cap_enum: u64,
    cap_field: u64,
) -> Result<(bool, Option<Violation>), Error> {
    let fail = |kind: &'static str, detail: String| Violation {
        n: set.n(),
        members: set.members(),
        kind,
        detail,
    };
    let (bch, bch_witness) = bch_bound(set)?;
    if let Err(e) = bch_witness.validate(set) {
        return Ok((false, Some(fail("bch_witness", e.to_string()))));
    }
    let (ht, ht_witness) = ht_bound(set)?;
    if let Err(e) = ht_witness.validate(set) {
        return Ok((false, Some(fail("ht_witness", e.to_string()))));
    }
    if bch > ht {
        return Ok((false, Some(fail("bch_gt_ht", format!("bch = {bch}, ht = {ht}")))));
    }
    let (normalized, _) = ht_bound_normalized(set)?;
    if normalized != ht {
        return Ok((
            false,
            Some(fail(
                "normalized_mismatch",
                format!("ht = {ht}, normalized = {normalized}"),
            )),
        ));
    }
    let nzl = match nzl_search(set, families) {
        Ok((value, witness)) => {
            if let Err(e) = witness.validate(set) {
                return Ok((false, Some(fail("nzl_witness", e.to_string()))));
            }
            Some(value)
        }
        Err(Error::EmptySearchConfig) => None,
        Err(e) => return Err(e),
    };
    let k = set.n() - set.len();
    let mut messages: u128 = 1;
    for _ in 0..k {
        messages = messages.saturating_mul(set.q() as u128);
    }
    if messages > cap_enum as u128 {
        return Ok((false, None));
    }
    let code = match CyclicCode::from_defining_set_with_cap(set, cap_field) {
        Ok(code) => code,
        Err(Error::FieldCapExceeded { .. }) => return Ok((false, None)),
        Err(e) => return Err(e),
    };
    let d_true = min_distance(&code, cap_enum)?.distance;
    for (kind, value) in [("bch_gt_true", Some(bch)), ("ht_gt_true", Some(ht)), ("nzl_gt_true", nzl)]
    {
        if let Some(v) = value {
            if v > d_true {
                return Ok((
                    false,
                    Some(fail(kind, format!("bound = {v}, d_true = {d_true}"))),
                ));
            }
        }
    }
    Ok((true, None))
}

fn suite_soundness(args: &VerifyArgs) -> Result<SuiteOutcome, Failure> {
    if !desc::is_prime_power(args.q) {
        return Err(bad_input(format!("q = {} is not a prime power", args.q)));
    }
    if args.n_max > SCAN_LENGTH_CAP {
        return Err(bad_input(format!(
            "soundness supports n_max <= {SCAN_LENGTH_CAP}"
        )));
    }
    let cap_enum = args.cap_enum.unwrap_or(SOUNDNESS_ENUM_CAP);
    let cap_field = args.cap_field.unwrap_or(SOUNDNESS_FIELD_CAP);
    let families_spec = args
        .families
        .clone()
        .unwrap_or_else(|| "parity:2-8,rs:2-8".to_string());
    let families = desc::parse_families(&families_spec).map_err(bad_input)?;
    let sets = all_cyclic_sets(args.q, args.n_max);
    let results: Vec<(bool, Option<Violation>)> = with_jobs(args.jobs, || {
        sets.par_iter()
            .map(|set| soundness_one(set, &families, cap_enum, cap_field))
            .collect::<Result<_, Error>>()
    })??;
    let with_oracle = results.iter().filter(|(oracle, _)| *oracle).count();
    let violation = results.iter().find_map(|(_, v)| v.as_ref());
    Ok(SuiteOutcome {
        check: "soundness",
        params: json!({
            "q": args.q, "n_max": args.n_max,
            "cap_enum": cap_enum, "cap_field": cap_field,
            "families": families_spec,
        }),
        pass: violation.is_none(),
        seed: args.seed,
        counterexample: violation.map(|v| {
            json!({"n": v.n, "defining_set": v.members, "kind": v.kind, "detail": v.detail})
        }),
        summary: format!("{} sets, {} with oracle, seed {}", sets.len(), with_oracle, args.seed),
        extra: vec![
            ("sets", json!(sets.len())),
            ("with_oracle", json!(with_oracle)),
        ],
    })
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let outcome = match args.suite {
        Suite::Def2 => suite_def2(&args)?,
        Suite::Series => suite_series(&args)?,
        Suite::Degrees => suite_degrees(&args)?,
        Suite::Soundness => suite_soundness(&args)?,
    };
    report_suite(args.format, outcome)
}
