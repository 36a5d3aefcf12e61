//! Command-line front end. [`run`] parses arguments, writes results to `out`
//! and diagnostics to `err`, and returns the exit code: 0 on success, 1 when
//! a verification fails, 2 on a usage error.

use std::collections::BTreeSet;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::bruhat::{self, delta_g, MinorSpec, Torus, WordSpec};
use crate::cluster::{self, seed_matrix, ExchangeSeed};
use crate::crystal::{self, component, demazure, tau_render, tau_render_poly, CrystalConfig, CrystalGraph, DemazureSpec, Sign};
use crate::laurent::{Assignment, LaurentPoly, Monomial, Rational};
use crate::paths::{self, PathSpec};
use crate::verify;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tau,
    Y,
    Json,
    Dot,
}

#[derive(Parser, Debug)]
#[command(name = "crystal-minors", version, about = "Crystal bases, Demazure polynomials and minors on double Bruhat cells")]
struct Cli {
    /// Output encoding.
    #[arg(long, global = true, value_enum, default_value = "tau")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The minor Δ^L(k) of x^L, or Δ^G(k) at a point with --torus and --t.
    Minor(MinorArgs),
    #[command(subcommand)]
    Crystal(CrystalCmd),
    #[command(subcommand)]
    Paths(PathsCmd),
    #[command(subcommand)]
    Seed(SeedCmd),
    #[command(subcommand)]
    Phi(PhiCmd),
    /// Run a named cross-check sweep.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct WordArgs {
    /// Rank r of SL_{r+1}.
    #[arg(long)]
    r: u32,
    /// Comma-separated letters, a left factor of (1..r, 1..r-1, ..., 1).
    #[arg(long)]
    word: String,
}

#[derive(Args, Debug)]
struct MinorArgs {
    #[command(flatten)]
    word: WordArgs,
    /// Position in the word, 1-based.
    #[arg(long)]
    k: usize,
    /// Diagonal entries a_1..a_{r+1} with product 1.
    #[arg(long, requires = "t")]
    torus: Option<String>,
    /// Values t_1..t_n of the position variables.
    #[arg(long, requires = "torus")]
    t: Option<String>,
}

#[derive(Subcommand, Debug)]
enum CrystalCmd {
    /// The connected component of a monomial.
    Component {
        #[arg(long)]
        r: u32,
        /// Monomial in `Y[s,i]^e` or τ notation.
        #[arg(long, allow_hyphen_values = true)]
        seed: String,
        #[arg(long, default_value_t = crystal::DEFAULT_CAP)]
        cap: usize,
    },
    /// The Demazure crystal generated from a seed along a word.
    Demazure(DemazureArgs),
    /// The sum of the Demazure crystal's monomials.
    Polynomial(DemazureArgs),
}

#[derive(Args, Debug)]
struct DemazureArgs {
    #[arg(long)]
    r: u32,
    #[arg(long, allow_hyphen_values = true)]
    seed: String,
    /// Comma-separated colors, applied right to left.
    #[arg(long)]
    word: String,
    /// `minus` walks up with e~ from a lowest seed, `plus` walks down with f~.
    #[arg(long, default_value = "minus")]
    sign: Sign,
    #[arg(long, default_value_t = crystal::DEFAULT_CAP)]
    cap: usize,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// Rank used for the edge labels.
    #[arg(long)]
    r: u32,
    #[arg(long, conflicts_with = "word")]
    d: Option<u32>,
    #[arg(long, conflicts_with = "word")]
    m: Option<u32>,
    #[arg(long, conflicts_with = "word")]
    mprime: Option<u32>,
    /// Take d, m, m' from a word and a position with i_k = i_n.
    #[arg(long, requires = "k")]
    word: Option<String>,
    #[arg(long, requires = "word")]
    k: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum PathsCmd {
    /// Every path of the family with its label.
    Enum(FamilyArgs),
    /// The sum of the path labels.
    Sum(FamilyArgs),
    /// The sum computed from the per-step statistics.
    ClosedForm(FamilyArgs),
}

#[derive(Subcommand, Debug)]
enum SeedCmd {
    /// The exchange matrix of a word, rows indexed by all indices.
    Bmatrix(WordArgs),
    /// Mutate the seed of a word at a sequence of column labels.
    Mutate {
        #[command(flatten)]
        word: WordArgs,
        /// Comma-separated column labels, applied left to right.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
}

#[derive(Subcommand, Debug)]
enum PhiCmd {
    /// Compare a · x^L(t) with x^G(φ(a, t)) at random points.
    Check {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// One of the named checks, or `all`.
    name: String,
    #[arg(long, default_value_t = 4)]
    max_r: u32,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

enum Failure {
    Usage(String),
    /// Output to print before exiting with status 1.
    Verification(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<String, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Minor(a) => minor(&a, cli.format),
        Command::Crystal(c) => crystal_cmd(&c, cli.format, err),
        Command::Paths(p) => paths_cmd(&p, cli.format),
        Command::Seed(s) => seed_cmd(&s, cli.format),
        Command::Phi(PhiCmd::Check { word, samples, seed }) => phi_check(&word, samples, seed, cli.format),
        Command::Verify(v) => verify_cmd(&v, cli.format, out),
    };
    match result {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(Failure::Verification(text)) => {
            let _ = out.write_all(text.as_bytes());
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, Failure> {
    text.split(',')
        .map(|x| x.trim().parse::<T>().map_err(|_| Failure::Usage(format!("bad {what} entry `{}`", x.trim()))))
        .collect()
}

fn word_spec(a: &WordArgs) -> Result<WordSpec, Failure> {
    let letters: Vec<u32> = parse_list(&a.word, "word")?;
    Ok(WordSpec::from_word(a.r, &letters)?)
}

fn parse_monomial(r: u32, text: &str) -> Result<Monomial, Failure> {
    if let Ok(m) = text.parse::<Monomial>() {
        return Ok(m);
    }
    let p = crystal::parse_tau_poly(r, text)?;
    match p.terms().collect::<Vec<_>>().as_slice() {
        [(m, c)] if **c == num_bigint::BigInt::from(1) => Ok((*m).clone()),
        _ => Err(Failure::Usage(format!("`{text}` is not a single monomial"))),
    }
}

fn render_poly(cfg: &CrystalConfig, p: &LaurentPoly, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Tau => tau_render_poly(cfg, p)?,
        Format::Y => p.to_string(),
        Format::Json => poly_json(cfg, p).to_string(),
        Format::Dot => return Err(Failure::Usage("dot output is not available for a polynomial".into())),
    } + "\n")
}

fn poly_json(cfg: &CrystalConfig, p: &LaurentPoly) -> Value {
    json!({
        "poly": p.to_json(),
        "text": p.to_string(),
        "tau": tau_render_poly(cfg, p).ok(),
    })
}

fn render_monomial(cfg: &CrystalConfig, m: &Monomial, format: Format) -> String {
    match format {
        Format::Tau => tau_render(cfg, m).unwrap_or_else(|_| m.to_string()),
        _ => m.to_string(),
    }
}

fn minor(a: &MinorArgs, format: Format) -> CmdResult {
    let w = word_spec(&a.word)?;
    let spec = MinorSpec::new(w, a.k)?;
    let cfg = CrystalConfig::new(w.rank())?;
    let dl = bruhat::delta_l(&spec);
    let (Some(torus), Some(t)) = (&a.torus, &a.t) else {
        return render_poly(&cfg, &dl, format);
    };
    let torus = Torus::new(parse_list::<Rational>(torus, "torus")?)?;
    let values: Vec<Rational> = parse_list(t, "t")?;
    if values.len() != w.len() {
        return Err(Failure::Usage(format!("--t needs {} values", w.len())));
    }
    let point: Assignment = w.position_vars().into_iter().zip(values).collect();
    let value = delta_g(&spec, &torus, &point)?;
    Ok(match format {
        Format::Json => json!({ "delta_l": poly_json(&cfg, &dl), "delta_g": value.to_string() }).to_string() + "\n",
        Format::Dot => return Err(Failure::Usage("dot output is not available for a minor".into())),
        _ => format!("{value}\n"),
    })
}

fn graph_text(cfg: &CrystalConfig, g: &CrystalGraph, format: Format) -> String {
    match format {
        Format::Json => g.to_json().to_string() + "\n",
        Format::Dot => g.to_dot_tau(cfg),
        _ => {
            let mut s = String::new();
            for (idx, m) in g.monomials().enumerate() {
                s += &format!("{idx}: {}\n", render_monomial(cfg, m, format));
            }
            for e in &g.edges {
                s += &format!("{} -{}-> {}\n", e.from, e.color, e.to);
            }
            s
        }
    }
}

fn crystal_cmd(c: &CrystalCmd, format: Format, err: &mut dyn Write) -> CmdResult {
    match c {
        CrystalCmd::Component { r, seed, cap } => {
            let cfg = CrystalConfig::new(*r)?;
            let seed = parse_monomial(*r, seed)?;
            let g = component(&cfg, &seed, *cap)?;
            let _ = writeln!(err, "{} nodes, {} edges", g.len(), g.edges.len());
            Ok(graph_text(&cfg, &g, format))
        }
        CrystalCmd::Demazure(a) | CrystalCmd::Polynomial(a) => {
            let cfg = CrystalConfig::new(a.r)?;
            let spec = DemazureSpec::new(&cfg, parse_list(&a.word, "word")?, a.sign, parse_monomial(a.r, &a.seed)?)?;
            let nodes = demazure(&cfg, &spec, a.cap)?;
            if matches!(c, CrystalCmd::Polynomial(_)) {
                let p: LaurentPoly = nodes.iter().cloned().sum();
                return render_poly(&cfg, &p, format);
            }
            let g = component(&cfg, spec.seed(), a.cap)?;
            Ok(graph_text(&cfg, &induced(&g, &nodes), format))
        }
    }
}

/// The subgraph of `g` on the given monomials.
fn induced(g: &CrystalGraph, keep: &[Monomial]) -> CrystalGraph {
    let keep: BTreeSet<&Monomial> = keep.iter().collect();
    let old: Vec<usize> = (0..g.len()).filter(|&i| keep.contains(&g.nodes[i].monomial)).collect();
    let new_index = |i: usize| old.binary_search(&i).ok();
    CrystalGraph {
        nodes: old.iter().map(|&i| g.nodes[i].clone()).collect(),
        edges: g
            .edges
            .iter()
            .filter_map(|e| Some(crystal::Edge { from: new_index(e.from)?, color: e.color, to: new_index(e.to)? }))
            .collect(),
    }
}

fn family(a: &FamilyArgs) -> Result<PathSpec, Failure> {
    if let (Some(word), Some(k)) = (&a.word, a.k) {
        let w = word_spec(&WordArgs { r: a.r, word: word.clone() })?;
        let spec = MinorSpec::new(w, k)?;
        if spec.d() != w.last() {
            return Err(Failure::Usage(format!("i_{k} = {} differs from the last letter {}", spec.d(), w.last())));
        }
        return Ok(PathSpec::from_minor(&spec));
    }
    match (a.d, a.m, a.mprime) {
        (Some(d), Some(m), Some(mp)) => Ok(PathSpec::new(d, m, mp)?),
        _ => Err(Failure::Usage("give --d, --m and --mprime, or --word and --k".into())),
    }
}

fn paths_cmd(p: &PathsCmd, format: Format) -> CmdResult {
    let (a, which) = match p {
        PathsCmd::Enum(a) => (a, 0),
        PathsCmd::Sum(a) => (a, 1),
        PathsCmd::ClosedForm(a) => (a, 2),
    };
    let spec = family(a)?;
    let cfg = CrystalConfig::new(a.r)?;
    match which {
        0 => Ok(match format {
            Format::Dot => paths::to_dot(&spec, a.r)?,
            Format::Json => paths::to_json(&spec, a.r)?.to_string() + "\n",
            _ => {
                let mut s = String::new();
                for path in paths::enumerate(&spec) {
                    let l = paths::label(&spec, &path, a.r)?;
                    s += &format!("{path}  {}\n", render_monomial(&cfg, &l, format));
                }
                s
            }
        }),
        1 => render_poly(&cfg, &paths::path_sum(&spec, a.r)?, format),
        _ => render_poly(&cfg, &paths::closed_form_sum(&spec, a.r)?, format),
    }
}

fn seed_cmd(s: &SeedCmd, format: Format) -> CmdResult {
    let (w, at) = match s {
        SeedCmd::Bmatrix(w) => (word_spec(w)?, None),
        SeedCmd::Mutate { word, at } => (word_spec(word)?, Some(parse_list::<i64>(at, "label")?)),
    };
    let mut b = seed_matrix(&w);
    let mut relations = Vec::new();
    for k in at.unwrap_or_default() {
        let seed = ExchangeSeed::from_seed_matrix(&b);
        let pos = b.cols().iter().position(|&c| c == k).ok_or(cluster::ClusterError::IndexOutOfRange(k))?;
        let (rel, _) = cluster::exchange(&seed, pos)?;
        relations.push(format!("x_{k} x_{k}' = {rel}"));
        b = b.mutate(k)?;
    }
    Ok(match format {
        Format::Json => json!({ "matrix": b.to_json(), "exchanges": relations }).to_string() + "\n",
        Format::Dot => return Err(Failure::Usage("dot output is not available for a matrix".into())),
        _ => relations.iter().map(|r| format!("{r}\n")).collect::<String>() + &b.to_string(),
    })
}

fn phi_check(a: &WordArgs, samples: usize, seed: u64, format: Format) -> CmdResult {
    let w = word_spec(a)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..samples {
        let torus = Torus::random(w.rank(), &mut rng);
        let t = bruhat::random_point(&w, &mut rng);
        let (a2, tau) = bruhat::phi_map(&w, &torus, &t)?;
        if bruhat::xbar_g(&w, &torus, &t)? != bruhat::x_g(&w, &a2, &tau)? {
            failures += 1;
        }
    }
    let status = if failures == 0 { "PASS" } else { "FAIL" };
    let text = match format {
        Format::Json => json!({ "check": "phi", "word": w.to_string(), "samples": samples, "failures": failures, "status": status })
            .to_string(),
        _ => format!("{status} phi {w}: {samples} samples, {failures} failures"),
    };
    if failures > 0 {
        return Err(Failure::Verification(text + "\n"));
    }
    Ok(text + "\n")
}

fn verify_cmd(v: &VerifyArgs, format: Format, out: &mut dyn Write) -> CmdResult {
    let names: Vec<&str> = if v.name == "all" { verify::CHECKS.to_vec() } else { vec![v.name.as_str()] };
    let mut all_passed = true;
    for name in names {
        let report = verify::run(name, v.max_r, v.seed)
            .ok_or_else(|| Failure::Usage(format!("unknown check `{name}`; one of {}", verify::CHECKS.join(", "))))?;
        all_passed &= report.passed();
        let text = match format {
            Format::Json => json!({
                "check": report.name,
                "status": if report.passed() { "PASS" } else { "FAIL" },
                "cases": report.cases,
                "details": report.details,
                "failures": report.failures,
            })
            .to_string()
                + "\n",
            _ => report.to_string(),
        };
        let _ = out.write_all(text.as_bytes());
    }
    if all_passed {
        Ok(String::new())
    } else {
        Err(Failure::Verification(String::new()))
    }
}
