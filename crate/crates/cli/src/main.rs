use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use burau_sieve::burau::Ambient;
use burau_sieve::exactalg::{factor_over_prime, neg_cyclotomic, AlgError, FpPoly};
use burau_sieve::intersect::{conjugate_to_e2, verify_addendum_pairwise};
use burau_sieve::sieve::{
    full_sweep, genus_zero_survivors, triples_of, CandidateSet, CharClass, PolyKey, SieveConfig,
    SieveError, SWEEP_MAX, SWEEP_MIN,
};
use burau_sieve::skeleton::{
    enumerate_universal, Skeleton, SkeletonError, UniversalGroupSpec, DEFAULT_STATE_CAP,
};
use burau_sieve::table::{golden_self_check, verify_row, GOLDEN};
use burau_sieve::typesys::{admissible_types, RootSpec, TypeError, TypeTag};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const SCHEMA_VERSION: u32 = 1;

const EXIT_VERIFY: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "burau-sieve",
    version,
    about = "Exceptional roots of trigonal Alexander polynomials"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Maximum number of edges explored by a coset enumeration.
    #[arg(long, default_value_t = DEFAULT_STATE_CAP, global = true)]
    state_cap: usize,
    /// Skeleton cache directory (also BURAU_SIEVE_CACHE).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Skip the skeleton cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Exceptional triples for each N in a range.
    Sieve {
        /// Inclusive range `a..b`, within 7..26.
        #[arg(long, default_value = "7..26")]
        n_range: String,
        /// JSON file with candidate informative sets per N.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Keep only roots with a genus-zero Bu3 skeleton for some type.
        #[arg(long)]
        genus_zero: bool,
    },
    /// Universal skeleton of one root and type.
    Skeleton {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        min_poly: String,
        #[arg(long = "type", default_value = "I")]
        tag: String,
        #[arg(long, default_value = "bu3")]
        ambient: String,
    },
    /// Recompute the exceptional-root table.
    Table {
        #[arg(long)]
        verify: bool,
        /// Only this row, numbered from 1.
        #[arg(long)]
        row: Option<usize>,
    },
    /// Pairwise fibered products of the table rows and conjugacy of the type lines.
    Addendum,
    /// Factorization of phi_N(-t) over F_p.
    Factors {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: u64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn input(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.to_string(),
    }
}

impl From<AlgError> for Failure {
    fn from(e: AlgError) -> Self {
        input(e)
    }
}

impl From<TypeError> for Failure {
    fn from(e: TypeError) -> Self {
        input(e)
    }
}

impl From<SkeletonError> for Failure {
    fn from(e: SkeletonError) -> Self {
        let code = if matches!(e, SkeletonError::CapExceeded(_)) {
            EXIT_RESOURCE
        } else {
            EXIT_INPUT
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<SieveError> for Failure {
    fn from(e: SieveError) -> Self {
        match e {
            SieveError::Skeleton(s) => s.into(),
            other => input(other),
        }
    }
}

struct Ctx {
    format: Format,
    cap: usize,
    cache: Option<PathBuf>,
}

fn parse_range(s: &str) -> Result<(u64, u64), Failure> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| input(format!("range {s:?} is not of the form a..b")))?;
    let parse = |x: &str| {
        x.trim()
            .parse::<u64>()
            .map_err(|_| input(format!("bad bound {x:?}")))
    };
    let (a, b) = (parse(a)?, parse(b)?);
    if a > b || a < SWEEP_MIN || b > SWEEP_MAX {
        return Err(input(format!(
            "range {a}..{b} must lie within {SWEEP_MIN}..{SWEEP_MAX}"
        )));
    }
    Ok((a, b))
}

fn default_cache_dir() -> Option<PathBuf> {
    if let Some(dir) = std::env::var_os("BURAU_SIEVE_CACHE") {
        return Some(PathBuf::from(dir));
    }
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| Path::new(&h).join(".cache")))?;
    Some(base.join("burau-sieve"))
}

fn cache_file(dir: &Path, spec: &UniversalGroupSpec) -> PathBuf {
    let key = format!(
        "{}-{}-{}-{}",
        spec.root.p(),
        spec.root.min_poly(),
        spec.tag,
        spec.ambient
    );
    let name: String = key
        .chars()
        .map(|c| match c {
            '^' => 'e',
            '+' => 'p',
            '-' => '_',
            c if c.is_ascii_alphanumeric() => c,
            _ => '.',
        })
        .collect();
    dir.join(format!("{name}.json"))
}

fn load_cached(path: &Path) -> Option<Skeleton> {
    let text = fs::read_to_string(path).ok()?;
    let sk: Skeleton = serde_json::from_str(&text).ok()?;
    Skeleton::with_regions(sk.black().clone(), sk.white().clone(), sk.region().clone()).ok()
}

impl Ctx {
    fn skeleton(&self, spec: &UniversalGroupSpec) -> Result<Skeleton, Failure> {
        let path = self.cache.as_ref().map(|d| cache_file(d, spec));
        if let Some(sk) = path.as_deref().and_then(load_cached) {
            return Ok(sk);
        }
        let sk = enumerate_universal(spec, self.cap)?;
        if let Some(path) = path {
            // a cache that cannot be written is just skipped
            if fs::create_dir_all(path.parent().expect("file in a directory")).is_ok() {
                let _ = fs::write(&path, serde_json::to_string(&sk).expect("serializable"));
            }
        }
        Ok(sk)
    }

    fn emit(&self, value: &Value, text: impl FnOnce() -> String) {
        match self.format {
            Format::Json => {
                let mut out = json!({ "schemaVersion": SCHEMA_VERSION });
                if let (Value::Object(o), Value::Object(v)) = (&mut out, value) {
                    o.extend(v.clone());
                }
                write_stdout(&format!(
                    "{}\n",
                    serde_json::to_string_pretty(&out).expect("serializable")
                ));
            }
            Format::Text => write_stdout(&text()),
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn write_stdout(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn class_of(p: u64) -> CharClass {
    match p {
        2 => CharClass::Two,
        3 => CharClass::Three,
        _ => CharClass::Odd,
    }
}

fn cmd_sieve(
    ctx: &Ctx,
    range: &str,
    config: Option<&Path>,
    genus_zero: bool,
) -> Result<u8, Failure> {
    let (a, b) = parse_range(range)?;
    let config = match config {
        Some(path) => {
            let text =
                fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
            serde_json::from_str::<SieveConfig>(&text)
                .map_err(|e| input(format!("{}: {e}", path.display())))?
        }
        None => SieveConfig::default(),
    };
    let entries = full_sweep(a..=b, &config)?;
    let mut results = Vec::new();
    let mut text = String::new();
    for e in &entries {
        let candidates = if genus_zero {
            genus_zero_survivors(&e.candidates, ctx.cap)?
        } else {
            e.candidates.clone()
        };
        let mut by_class: BTreeMap<CharClass, Vec<_>> = BTreeMap::new();
        for t in triples_of(&candidates) {
            by_class.entry(class_of(t.p)).or_default().push(t);
        }
        for (class, triples) in by_class {
            for t in &triples {
                text.push_str(&format!("N={} p={} {} {}\n", e.n, t.p, t.min_poly, t.tag));
            }
            results.push(json!({ "N": e.n, "branch": class.to_string(), "triples": triples }));
        }
        if e.searched {
            text.push_str(&format!("N={}: informative set found by search\n", e.n));
        }
    }
    ctx.emit(&json!({ "results": results }), || text);
    Ok(0)
}

fn cmd_skeleton(
    ctx: &Ctx,
    p: u64,
    min_poly: &str,
    tag: &str,
    ambient: &str,
) -> Result<u8, Failure> {
    let root = RootSpec::parse(p, min_poly)?;
    let tag: TypeTag = tag.parse()?;
    let ambient: Ambient = ambient.parse().map_err(input)?;
    let spec = UniversalGroupSpec { root, tag, ambient };
    let sk = ctx.skeleton(&spec)?;
    let mut value = sk.to_json();
    value["p"] = json!(p);
    value["minPoly"] = json!(spec.root.min_poly());
    value["type"] = json!(tag.to_string());
    value["ambient"] = json!(ambient.to_string());
    value["N"] = json!(spec.root.n());
    ctx.emit(&value, || {
        format!("{} genus {}\n", sk.signature(), sk.genus())
    });
    Ok(0)
}

fn cmd_table(ctx: &Ctx, verify: bool, row: Option<usize>) -> Result<u8, Failure> {
    let rows: Vec<_> = match row {
        Some(k) if (1..=GOLDEN.len()).contains(&k) => vec![&GOLDEN[k - 1]],
        Some(k) => return Err(input(format!("row {k} outside 1..={}", GOLDEN.len()))),
        None => GOLDEN.iter().collect(),
    };
    if !verify {
        let listed: Vec<Value> = rows
            .iter()
            .map(|r| {
                json!({
                    "p": r.p, "N": r.n, "factors": r.factors().collect::<Vec<_>>(),
                    "starred": r.starred, "signature": r.signature,
                })
            })
            .collect();
        let text = rows
            .iter()
            .map(|r| {
                let star = if r.starred { "*" } else { "" };
                format!(
                    "{}{star} {} {}\n",
                    r.label(),
                    r.signature,
                    r.factors().collect::<Vec<_>>().join(", ")
                )
            })
            .collect();
        ctx.emit(&json!({ "rows": listed }), || text);
        return Ok(0);
    }
    let reports = rows
        .iter()
        .map(|r| verify_row(r, ctx.cap))
        .collect::<Result<Vec<_>, _>>()?;
    let passed = reports.iter().filter(|r| r.pass).count();
    let text = reports
        .iter()
        .map(|r| {
            format!(
                "{} {}: {} ({})\n",
                if r.pass { "PASS" } else { "FAIL" },
                r.row,
                r.expected,
                r.matched_ambient
            )
        })
        .chain([format!("{passed}/{} rows pass\n", reports.len())])
        .collect();
    ctx.emit(
        &json!({ "passed": passed, "total": reports.len(), "rows": reports }),
        || text,
    );
    Ok(if passed == reports.len() {
        0
    } else {
        EXIT_VERIFY
    })
}

fn cmd_addendum(ctx: &Ctx) -> Result<u8, Failure> {
    let mut lead = Vec::new();
    let mut candidates = CandidateSet::new();
    for row in &GOLDEN {
        let root = row.lead_root();
        let spec = UniversalGroupSpec {
            root,
            tag: TypeTag::I,
            ambient: Ambient::Bu3,
        };
        lead.push((row.label(), ctx.skeleton(&spec)?));
        for f in row.factors() {
            let root = row.root(f);
            let tags: BTreeSet<TypeTag> = admissible_types(&root).tags.into_iter().collect();
            candidates.insert((row.p, PolyKey(root.field().modulus().clone())), tags);
        }
    }
    let pairs = verify_addendum_pairwise(&lead);
    let pairs_ok = pairs.iter().filter(|r| r.min_genus >= 1).count();

    let survivors = genus_zero_survivors(&candidates, ctx.cap)?;
    let mut conj = Vec::new();
    for row in &GOLDEN {
        let mut ok = true;
        for f in row.factors() {
            let root = row.root(f);
            let key = (row.p, PolyKey(FpPoly::parse(f, row.p)?));
            for &tag in survivors.get(&key).into_iter().flatten() {
                let spec = UniversalGroupSpec {
                    root: root.clone(),
                    tag,
                    ambient: Ambient::Bu3,
                };
                ok &= conjugate_to_e2(&spec)?;
            }
        }
        conj.push(json!({ "row": row.label(), "conjugate": ok }));
    }
    let conj_ok = conj
        .iter()
        .filter(|c| c["conjugate"] == json!(true))
        .count();
    let pass = pairs_ok == pairs.len() && conj_ok == GOLDEN.len();
    let mut text: String = pairs
        .iter()
        .filter(|r| r.min_genus == 0)
        .map(|r| format!("FAIL {} x {}: genus-zero component\n", r.row_a, r.row_b))
        .collect();
    text.push_str(&format!(
        "{pairs_ok}/{} pairs pass\n{conj_ok}/{} rows conjugate to k e2\n",
        pairs.len(),
        GOLDEN.len()
    ));
    ctx.emit(
        &json!({ "pairsPassed": pairs_ok, "pairs": pairs, "conjugacy": conj, "pass": pass }),
        || text,
    );
    Ok(if pass { 0 } else { EXIT_VERIFY })
}

fn cmd_factors(ctx: &Ctx, n: u64, p: u64) -> Result<u8, Failure> {
    if n == 0 {
        return Err(input("N must be positive"));
    }
    let phi = neg_cyclotomic(n)?;
    let factors = factor_over_prime(&phi, p)?;
    let list: Vec<Value> = factors
        .iter()
        .map(|(f, e)| json!({ "factor": f.to_string(), "multiplicity": e }))
        .collect();
    let text = factors
        .iter()
        .map(|(f, e)| {
            if *e == 1 {
                format!("{f}\n")
            } else {
                format!("({f})^{e}\n")
            }
        })
        .collect();
    ctx.emit(&json!({ "N": n, "p": p, "factors": list }), || text);
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    golden_self_check().map_err(|m| Failure {
        code: EXIT_VERIFY,
        message: m,
    })?;
    let cache = if cli.no_cache {
        None
    } else {
        cli.cache_dir.or_else(default_cache_dir)
    };
    let ctx = Ctx {
        format: cli.format,
        cap: cli.state_cap,
        cache,
    };
    match cli.command {
        Command::Sieve {
            n_range,
            config,
            genus_zero,
        } => cmd_sieve(&ctx, &n_range, config.as_deref(), genus_zero),
        Command::Skeleton {
            p,
            min_poly,
            tag,
            ambient,
        } => cmd_skeleton(&ctx, p, &min_poly, &tag, &ambient),
        Command::Table { verify, row } => cmd_table(&ctx, verify, row),
        Command::Addendum => cmd_addendum(&ctx),
        Command::Factors { n, p } => cmd_factors(&ctx, n, p),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
