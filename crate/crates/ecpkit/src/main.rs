//! Command-line front end: key generation for the code families, encryption
//! and decryption with the toy schemes, distinguisher reports, and seeded
//! experiment tables.
//!
//! Exit codes: 0 success, 2 malformed input or invalid parameters, 3 decode
//! failure during decryption.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;
use serde_json::{json, Value};

use ecpkit::codes::LinearCode;
use ecpkit::distinguish::{
    check_prop1, classify, experiment_prop1, experiment_square_dim, experiment_star_rank,
};
use ecpkit::families::{
    alternant_code, goppa_code, grs_code, grs_ecp, random_code, random_grs_spec,
    random_grs_subcode, random_pair_code, experiment_decode_rate,
};
use ecpkit::field::FieldSpec;
use ecpkit::io::{
    atomic_write, code_from_json, format_ciphertext, format_vector, parse_ciphertext,
    parse_field, parse_vector, public_key_from_json, public_key_to_json, secret_key_from_json,
    secret_key_to_json,
};
use ecpkit::pkc::{
    keygen, keygen_monomial, mceliece_decrypt, mceliece_encrypt_sampled, niederreiter_decrypt,
    niederreiter_encrypt, KeyPair, Scheme,
};
use ecpkit::rng::{rng_from_seed, trial_rng};
use ecpkit::trials::map_trials;

const EXIT_MALFORMED: u8 = 2;
const EXIT_DECODE_FAILURE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "ecpkit",
    version,
    about = "Coding-theory toolkit: pair-based decoding, toy code-based encryption, \
             square-code distinguishers, seeded experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a keypair for one of the code families
    Keygen(KeygenArgs),
    /// Encrypt a message file with a public key
    Encrypt(EncryptArgs),
    /// Decrypt a ciphertext file with a secret key
    Decrypt(DecryptArgs),
    /// Report square-code and kernel statistics for a code or public key
    Distinguish(DistinguishArgs),
    /// Run a seeded Monte Carlo experiment and emit one table
    Experiment(ExperimentArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Generalized Reed-Solomon code with random support and multipliers
    Grs,
    /// Random subcode of a generalized Reed-Solomon code
    GrsSubcode,
    /// Subfield subcode of a random generalized Reed-Solomon code
    Alternant,
    /// Goppa code of a random polynomial over the extension field
    Goppa,
    /// Dual of the product of two random MDS codes
    RandomPair,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Grs => "grs",
            Family::GrsSubcode => "grs-subcode",
            Family::Alternant => "alternant",
            Family::Goppa => "goppa",
            Family::RandomPair => "random-pair",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Mceliece,
    Niederreiter,
}

impl From<SchemeArg> for Scheme {
    fn from(s: SchemeArg) -> Scheme {
        match s {
            SchemeArg::Mceliece => Scheme::McEliece,
            SchemeArg::Niederreiter => Scheme::Niederreiter,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Args)]
struct KeygenArgs {
    /// Code family to sample from
    #[arg(long, value_enum)]
    family: Family,
    /// Field as p:e or p:e:c0,...,ce (modulus coefficients low degree first)
    #[arg(long)]
    field: String,
    /// Code length
    #[arg(long)]
    n: usize,
    /// Dimension of the sampled code (grs, grs-subcode, alternant: supercode)
    #[arg(long)]
    k: Option<usize>,
    /// Subcode dimension (grs-subcode only)
    #[arg(long)]
    l: Option<usize>,
    /// Error budget (goppa: polynomial degree 2t; random-pair: pair budget)
    #[arg(long)]
    t: Option<usize>,
    /// RNG seed; identical seeds reproduce identical keys
    #[arg(long)]
    seed: u64,
    /// Scheme the keypair targets
    #[arg(long, value_enum, default_value_t = SchemeArg::Mceliece)]
    scheme: SchemeArg,
    /// Mask with a monomial matrix (permutation composed with column scales)
    #[arg(long)]
    monomial: bool,
    /// Public key output path
    #[arg(long = "pub", default_value = "public.json")]
    pub_path: PathBuf,
    /// Secret key output path
    #[arg(long = "sec", default_value = "secret.json")]
    sec_path: PathBuf,
}

#[derive(Args)]
struct EncryptArgs {
    /// Public key file
    #[arg(long)]
    key: PathBuf,
    /// Message file: one comma-separated vector (length k for McEliece, a
    /// weight-at-most-t length-n error for Niederreiter)
    #[arg(long)]
    input: PathBuf,
    /// Ciphertext output path (default standard output)
    #[arg(long)]
    output: Option<PathBuf>,
    /// RNG seed for the sampled error vector (required for McEliece)
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct DecryptArgs {
    /// Secret key file
    #[arg(long)]
    key: PathBuf,
    /// Ciphertext file
    #[arg(long)]
    input: PathBuf,
    /// Plaintext output path (default standard output)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct DistinguishArgs {
    /// Code file (JSON with field, n, k, generator)
    #[arg(long, required_unless_present = "key", conflicts_with = "key")]
    input: Option<PathBuf>,
    /// Public key file; the published code is analyzed
    #[arg(long)]
    key: Option<PathBuf>,
    /// Report output path (default standard output)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    #[command(subcommand)]
    what: ExpCmd,
}

#[derive(Subcommand)]
enum ExpCmd {
    /// Square-code dimension of one random [n, k] code per trial
    SquareDim {
        #[arg(long)]
        field: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Star-product rank deficiency of random code pairs (needs s*t < n)
    StarRank {
        #[arg(long)]
        field: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Pair-decoder success rate on random Reed-Solomon instances
    DecodeRate {
        #[arg(long)]
        field: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Kernel identity check on random codes; sweeps a built-in grid of
    /// fields and parameters unless --field/--n/--k pin one instance
    Prop1Sweep {
        #[arg(long, requires = "n", requires = "k")]
        field: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

struct CliErr {
    code: u8,
    msg: String,
}

impl From<ecpkit::Error> for CliErr {
    fn from(e: ecpkit::Error) -> CliErr {
        CliErr { code: EXIT_MALFORMED, msg: e.to_string() }
    }
}

fn malformed(msg: impl Into<String>) -> CliErr {
    CliErr { code: EXIT_MALFORMED, msg: msg.into() }
}

fn decode_failure() -> CliErr {
    CliErr {
        code: EXIT_DECODE_FAILURE,
        msg: "decoding failed: the error weight exceeds the pair budget or the \
              ciphertext is inconsistent with the key"
            .into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliErr> {
    match cli.command {
        Cmd::Keygen(a) => cmd_keygen(a),
        Cmd::Encrypt(a) => cmd_encrypt(a),
        Cmd::Decrypt(a) => cmd_decrypt(a),
        Cmd::Distinguish(a) => cmd_distinguish(a),
        Cmd::Experiment(a) => cmd_experiment(a),
    }
}

fn read_file(path: &Path) -> Result<String, CliErr> {
    fs::read_to_string(path)
        .map_err(|e| malformed(format!("cannot read {}: {e}", path.display())))
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<(), CliErr> {
    match output {
        Some(p) => atomic_write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn require<T>(v: Option<T>, flag: &str, family: &str) -> Result<T, CliErr> {
    v.ok_or_else(|| malformed(format!("{flag} is required for --family {family}")))
}

/// n distinct elements of the field, a uniform prefix of a shuffle.
fn sample_support(
    spec: &FieldSpec,
    n: usize,
    rng: &mut impl Rng,
) -> Result<Vec<u64>, CliErr> {
    if n as u64 > spec.q() {
        return Err(malformed(format!(
            "length {n} exceeds field size {}",
            spec.q()
        )));
    }
    let mut support: Vec<u64> = spec.els().collect();
    for i in 0..n {
        let j = rng.gen_range(i..support.len());
        support.swap(i, j);
    }
    support.truncate(n);
    Ok(support)
}

fn prime_subfield(spec: &FieldSpec) -> Result<FieldSpec, CliErr> {
    if spec.e() < 2 {
        return Err(malformed(
            "this family needs an extension field (degree at least 2); \
             the code lives over the prime subfield",
        ));
    }
    Ok(FieldSpec::with_default_modulus(spec.p(), 1)?)
}

fn cmd_keygen(a: KeygenArgs) -> Result<(), CliErr> {
    let spec = parse_field(&a.field)?;
    let mut rng = rng_from_seed(a.seed);
    let family = a.family.name();
    let (code, pair) = match a.family {
        Family::Grs => {
            let k = require(a.k, "--k", family)?;
            let g = random_grs_spec(&spec, a.n, k, &mut rng)?;
            (grs_code(&g), grs_ecp(&g)?)
        }
        Family::GrsSubcode => {
            let k = require(a.k, "--k", family)?;
            let l = require(a.l, "--l", family)?;
            let g = random_grs_spec(&spec, a.n, k, &mut rng)?;
            let pair = grs_ecp(&g)?;
            (random_grs_subcode(&g, l, &mut rng)?, pair)
        }
        Family::Alternant => {
            let k = require(a.k, "--k", family)?;
            let base = prime_subfield(&spec)?;
            let g = random_grs_spec(&spec, a.n, k, &mut rng)?;
            alternant_code(&g, &base)?
        }
        Family::Goppa => {
            let t = require(a.t, "--t", family)?;
            let base = prime_subfield(&spec)?;
            if t == 0 || 2 * t >= a.n {
                return Err(malformed(format!(
                    "goppa needs 0 < 2t < n, got t = {t}, n = {}",
                    a.n
                )));
            }
            let support = sample_support(&spec, a.n, &mut rng)?;
            sample_goppa(&spec, &base, &support, t, &mut rng)?
        }
        Family::RandomPair => {
            let t = require(a.t, "--t", family)?;
            random_pair_code(&spec, a.n, t, &mut rng)?
        }
    };
    let scheme = Scheme::from(a.scheme);
    let kp: KeyPair = if a.monomial {
        keygen_monomial(&code, &pair, scheme, &mut rng)?
    } else {
        keygen(&code, &pair, scheme, &mut rng)?
    };
    atomic_write(&a.pub_path, &public_key_to_json(&kp.public))?;
    atomic_write(&a.sec_path, &secret_key_to_json(&kp.secret))?;
    println!(
        "n={} k={} t={} q={} family={}",
        kp.public.n(),
        kp.public.k(),
        kp.public.t(),
        code.spec().q(),
        family
    );
    Ok(())
}

/// Random monic polynomials of degree 2t, resampled until one avoids the
/// support (the only data-dependent failure once the degree bounds hold).
fn sample_goppa(
    spec: &FieldSpec,
    base: &FieldSpec,
    support: &[u64],
    t: usize,
    rng: &mut impl Rng,
) -> Result<(LinearCode, ecpkit::ecp::EcpPair), CliErr> {
    let mut last = String::new();
    for _ in 0..100 {
        let mut poly: Vec<u64> =
            (0..2 * t).map(|_| rng.gen_range(0..spec.q())).collect();
        poly.push(1);
        match goppa_code(spec, base, support, &poly) {
            Ok(pair) => return Ok(pair),
            Err(e) => last = e.to_string(),
        }
    }
    Err(malformed(format!(
        "no usable Goppa polynomial in 100 draws; last failure: {last}"
    )))
}

fn cmd_encrypt(a: EncryptArgs) -> Result<(), CliErr> {
    let pk = public_key_from_json(&read_file(&a.key)?)?;
    let text = read_file(&a.input)?;
    let v = parse_vector(pk.spec(), text.trim())?;
    let c = match pk.scheme() {
        Scheme::McEliece => {
            let seed = a.seed.ok_or_else(|| {
                malformed("--seed is required to sample the McEliece error vector")
            })?;
            let mut rng = rng_from_seed(seed);
            mceliece_encrypt_sampled(&pk, &v, &mut rng)?.0
        }
        Scheme::Niederreiter => niederreiter_encrypt(&pk, &v)?,
    };
    emit(a.output.as_ref(), &format_ciphertext(pk.spec(), &c))
}

fn cmd_decrypt(a: DecryptArgs) -> Result<(), CliErr> {
    let sk = secret_key_from_json(&read_file(&a.key)?)?;
    let spec = sk.code().spec();
    let c = parse_ciphertext(spec, &read_file(&a.input)?)?;
    if c.scheme != sk.scheme() {
        return Err(malformed(format!(
            "ciphertext is for {} but the key is for {}",
            c.scheme,
            sk.scheme()
        )));
    }
    let (n, k) = (sk.code().n(), sk.code().k());
    let want = match sk.scheme() {
        Scheme::McEliece => n,
        Scheme::Niederreiter => n - k,
    };
    if c.body.len() != want {
        return Err(malformed(format!(
            "ciphertext body has length {}, expected {want}",
            c.body.len()
        )));
    }
    let out = match sk.scheme() {
        Scheme::McEliece => {
            let (m, _) = mceliece_decrypt(&sk, &c).ok_or_else(decode_failure)?;
            format_vector(spec, &m)
        }
        Scheme::Niederreiter => {
            let e = niederreiter_decrypt(&sk, &c).ok_or_else(decode_failure)?;
            format_vector(spec, &e)
        }
    };
    emit(a.output.as_ref(), &format!("{out}\n"))
}

fn cmd_distinguish(a: DistinguishArgs) -> Result<(), CliErr> {
    let code = match (&a.input, &a.key) {
        (Some(path), None) => code_from_json(&read_file(path)?)?,
        (None, Some(path)) => {
            let pk = public_key_from_json(&read_file(path)?)?;
            let m = pk.matrix();
            let rows: Vec<Vec<u64>> =
                (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
            let spanned = LinearCode::from_rows(pk.spec(), pk.n(), &rows)?;
            match pk.scheme() {
                // the public matrix generates the code directly
                Scheme::McEliece => spanned,
                // the public matrix is a parity check for the code
                Scheme::Niederreiter => spanned.dual(),
            }
        }
        _ => unreachable!("clap enforces exactly one of --input/--key"),
    };
    let report = classify(&code)?;
    let text = serde_json::to_string_pretty(&report)
        .map_err(|e| malformed(format!("cannot serialize report: {e}")))?;
    emit(a.output.as_ref(), &format!("{text}\n"))
}

/// One table row; q, n, and the parameter column may vary per trial in
/// sweep mode.
struct ExpRow {
    q: u64,
    n: usize,
    k_or_st: usize,
    value: Value,
}

fn rows_csv(label: &str, seed: u64, rows: &[ExpRow]) -> String {
    let mut out = format!("seed,q,n,k_or_st,trial,{label}\n");
    for (trial, r) in rows.iter().enumerate() {
        out.push_str(&format!(
            "{seed},{},{},{},{trial},{}\n",
            r.q, r.n, r.k_or_st, r.value
        ));
    }
    out
}

fn rows_json(label: &str, seed: u64, rows: &[ExpRow]) -> Result<String, CliErr> {
    let arr: Vec<Value> = rows
        .iter()
        .enumerate()
        .map(|(trial, r)| {
            json!({
                "seed": seed,
                "q": r.q,
                "n": r.n,
                "k_or_st": r.k_or_st,
                "trial": trial,
                label: r.value,
            })
        })
        .collect();
    let text = serde_json::to_string_pretty(&arr)
        .map_err(|e| malformed(format!("cannot serialize table: {e}")))?;
    Ok(format!("{text}\n"))
}

fn uniform_rows(q: u64, n: usize, k_or_st: usize, values: Vec<Value>) -> Vec<ExpRow> {
    values
        .into_iter()
        .map(|value| ExpRow { q, n, k_or_st, value })
        .collect()
}

fn cmd_experiment(a: ExperimentArgs) -> Result<(), CliErr> {
    let (label, seed, rows, format, output) = match a.what {
        ExpCmd::SquareDim { field, n, k, trials, seed, format, output } => {
            let spec = parse_field(&field)?;
            let dims = experiment_square_dim(&spec, n, k, trials, seed)?;
            let values = dims.into_iter().map(|d| json!(d)).collect();
            ("measured_dim", seed, uniform_rows(spec.q(), n, k, values), format, output)
        }
        ExpCmd::StarRank { field, n, s, t, trials, seed, format, output } => {
            let spec = parse_field(&field)?;
            let defs = experiment_star_rank(&spec, n, s, t, trials, seed)?;
            let values = defs.into_iter().map(|d| json!(d)).collect();
            ("measured_dim", seed, uniform_rows(spec.q(), n, s * t, values), format, output)
        }
        ExpCmd::DecodeRate { field, n, k, trials, seed, format, output } => {
            let spec = parse_field(&field)?;
            let oks = experiment_decode_rate(&spec, n, k, trials, seed)?;
            let values = oks.into_iter().map(|b| json!(b)).collect();
            ("recovered", seed, uniform_rows(spec.q(), n, k, values), format, output)
        }
        ExpCmd::Prop1Sweep { field, n, k, trials, seed, format, output } => {
            let rows = match field {
                Some(field) => {
                    let spec = parse_field(&field)?;
                    let (n, k) = (n.expect("clap requires"), k.expect("clap requires"));
                    let oks = experiment_prop1(&spec, n, k, trials, seed)?;
                    let values = oks.into_iter().map(|b| json!(b)).collect();
                    uniform_rows(spec.q(), n, k, values)
                }
                None => prop1_grid(trials, seed)?,
            };
            ("prop1", seed, rows, format, output)
        }
    };
    let text = match format {
        Format::Csv => rows_csv(label, seed, &rows),
        Format::Json => rows_json(label, seed, &rows)?,
    };
    emit(output.as_ref(), &text)
}

/// Default sweep: fields of size 2, 4, 7, 16, and 64 round-robin, with the
/// length and dimension drawn per trial.
fn prop1_grid(trials: usize, seed: u64) -> Result<Vec<ExpRow>, CliErr> {
    let specs: Vec<FieldSpec> = ["2:1", "2:2", "7:1", "2:4", "2:6"]
        .iter()
        .map(|s| parse_field(s))
        .collect::<Result<_, _>>()?;
    let rows: Vec<ExpRow> = map_trials(trials, |trial| {
        let spec = &specs[trial as usize % specs.len()];
        let mut rng = trial_rng(seed, trial);
        let n = rng.gen_range(4..=40usize);
        let k = rng.gen_range(1..=n - 2);
        let code = random_code(spec, n, k, &mut rng)?;
        Ok(ExpRow {
            q: spec.q(),
            n,
            k_or_st: k,
            value: json!(check_prop1(&code)?),
        })
    })
    .into_iter()
    .collect::<Result<_, ecpkit::Error>>()?;
    Ok(rows)
}
