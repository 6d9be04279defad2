//! The `chvlab` command line: `verify`, `enumerate`, `compute` and `gen`.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 bad input or
//! configuration, 3 a supplied family violates its hypotheses.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::algebra::RingMatrix;
use crate::error::{Error, Result};
use crate::gen::{self, FamilySpec, SeededRng, Stream, Strategy, DEFAULT_MAGNITUDE};
use crate::mixed::{mixed_char_poly, mixed_discriminant, MatrixTuple};
use crate::objects::{self, Cardinalities, Label, TwoLabel};
use crate::theorems::{
    self, multivar_char_poly, substitute_commuting, ConstraintFamily, MixedConstraintFamily, Status,
    VerificationReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "chvlab", version, about = "Exact checks of multivariate Cayley-Hamilton identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run verification suites and write a JSON report array.
    Verify(VerifyArgs),
    /// Stream combinatorial objects as JSON lines, then a count line.
    Enumerate(EnumerateArgs),
    /// Evaluate one quantity from an input file.
    Compute(ComputeArgs),
    /// Write a generated family as JSON.
    Gen(GenArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    Phillips,
    Ch,
    Cor12,
    BapatRoy,
    Mixed,
    Cor16,
    Lemmas,
    Lemmas2,
    Laplace,
    Figures,
}

impl Theorem {
    fn uses_pairs(self) -> bool {
        matches!(self, Theorem::Lemmas | Theorem::Lemmas2 | Theorem::Laplace)
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub theorem: Theorem,
    /// Sizes: `3`, `2,3` or `2-4`.
    #[arg(long, default_value = "2")]
    pub n: String,
    #[arg(long, default_value = "2")]
    pub k: String,
    /// Defaults to diagonal-generic with --symbolic, conjugated-diagonal otherwise.
    #[arg(long)]
    pub strategy: Option<Strategy>,
    /// Number of consecutive seeds starting at --seed.
    #[arg(long, default_value_t = 1)]
    pub seeds: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub symbolic: bool,
    #[arg(long, default_value_t = DEFAULT_MAGNITUDE)]
    pub magnitude: u32,
    /// Row index (1-based) or `all`.
    #[arg(long, default_value = "all")]
    pub b: String,
    /// Column index (1-based) or `all`.
    #[arg(long, default_value = "all")]
    pub e: String,
    /// A family file to check instead of generated families.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, env = "CHVLAB_JOBS")]
    pub jobs: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ObjectKind {
    Decperm,
    Decpath,
    Decmap,
    Pathmutation,
    #[value(name = "pathmap-H")]
    PathmapH,
    #[value(name = "pathmap-G")]
    PathmapG,
    Decperm2,
    Decpath2,
    Decmap2,
    Pathmutation2,
    #[value(name = "pathmap2-H")]
    Pathmap2H,
    #[value(name = "pathmap2-G")]
    Pathmap2G,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long, value_enum)]
    pub object: ObjectKind,
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long, default_value_t = 1)]
    pub b: usize,
    #[arg(long, default_value_t = 1)]
    pub e: usize,
    /// Print at most this many objects; the count still covers all of them.
    #[arg(long)]
    pub limit: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Det,
    Permanent,
    MixedDiscriminant,
    MixedCharpoly,
    Charpoly,
    Substitute,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long, value_enum)]
    pub object: Quantity,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Family,
    Mixed,
    Cor16,
    Commuting,
    Tuple,
    Spec,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum, default_value = "family")]
    pub object: GenKind,
    #[arg(long, default_value = "conjugated-diagonal")]
    pub strategy: Strategy,
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub symbolic: bool,
    #[arg(long, default_value_t = DEFAULT_MAGNITUDE)]
    pub magnitude: u32,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Resolved `verify` settings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub theorem: Theorem,
    pub ns: Vec<usize>,
    pub ks: Vec<usize>,
    pub strategy: Strategy,
    pub seeds: Vec<u64>,
    pub symbolic: bool,
    pub magnitude: u32,
    pub bs: Option<usize>,
    pub es: Option<usize>,
    pub input: Option<PathBuf>,
    pub out: Option<PathBuf>,
    pub jobs: usize,
}

/// `3`, `2,3`, `2-4` and combinations such as `1,3-5`.
pub fn parse_range(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::InvalidArgument(format!("bad range {s:?}"));
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim) {
        match part.split_once('-') {
            Some((lo, hi)) => {
                let (lo, hi): (usize, usize) = (lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?);
                if lo > hi {
                    return Err(bad());
                }
                out.extend(lo..=hi);
            }
            None => out.push(part.parse().map_err(|_| bad())?),
        }
    }
    out.sort_unstable();
    out.dedup();
    if out.is_empty() || out.contains(&0) {
        return Err(bad());
    }
    Ok(out)
}

/// `all` or a 1-based index, returned 0-based.
fn parse_index(s: &str) -> Result<Option<usize>> {
    if s == "all" {
        return Ok(None);
    }
    match s.parse::<usize>() {
        Ok(i) if i >= 1 => Ok(Some(i - 1)),
        _ => Err(Error::InvalidArgument(format!("index must be `all` or a positive integer, got {s:?}"))),
    }
}

impl RunConfig {
    pub fn from_args(a: &VerifyArgs) -> Result<RunConfig> {
        let jobs = match a.jobs {
            Some(0) => return Err(Error::InvalidArgument("--jobs must be at least 1".into())),
            Some(j) => j,
            None => std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
        };
        if a.seeds == 0 {
            return Err(Error::InvalidArgument("--seeds must be at least 1".into()));
        }
        if a.magnitude == 0 {
            return Err(Error::InvalidArgument("--magnitude must be at least 1".into()));
        }
        let strategy = a.strategy.unwrap_or(if a.symbolic { Strategy::DiagonalGeneric } else { Strategy::ConjugatedDiagonal });
        Ok(RunConfig {
            theorem: a.theorem,
            ns: parse_range(&a.n)?,
            ks: parse_range(&a.k)?,
            strategy,
            seeds: (0..a.seeds).map(|i| a.seed.wrapping_add(i)).collect(),
            symbolic: a.symbolic,
            magnitude: a.magnitude,
            bs: parse_index(&a.b)?,
            es: parse_index(&a.e)?,
            input: a.input.clone(),
            out: a.out.clone(),
            jobs,
        })
    }

    fn pairs(&self, n: usize) -> Result<Vec<(usize, usize)>> {
        for i in [self.bs, self.es].into_iter().flatten() {
            if i >= n {
                return Err(Error::IndexOutOfRange(format!("index {} with n = {n}", i + 1)));
            }
        }
        let pick = |sel: Option<usize>| sel.map(|i| vec![i]).unwrap_or_else(|| (0..n).collect());
        let mut out = Vec::new();
        for b in pick(self.bs) {
            for e in pick(self.es) {
                out.push((b, e));
            }
        }
        Ok(out)
    }

    fn spec(&self, n: usize, k: usize, seed: u64) -> FamilySpec {
        FamilySpec::new(self.strategy, n, k, seed).symbolic(self.symbolic).magnitude(self.magnitude)
    }
}

/// One independent unit of `verify` work.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Task {
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub pair: Option<(usize, usize)>,
}

/// Tasks in a fixed order: `n`, then `k`, then seed, then `(b, e)`.
pub fn plan(cfg: &RunConfig) -> Result<Vec<Task>> {
    let uses_k = matches!(
        cfg.theorem,
        Theorem::Phillips | Theorem::Mixed | Theorem::Lemmas | Theorem::Lemmas2 | Theorem::Laplace
    );
    let ks = if uses_k { cfg.ks.clone() } else { vec![2] };
    let mut tasks = Vec::new();
    if cfg.theorem == Theorem::Figures {
        return Ok(vec![Task { n: 2, k: 2, seed: 0, pair: None }]);
    }
    for &n in &cfg.ns {
        let pairs: Vec<Option<(usize, usize)>> =
            if cfg.theorem.uses_pairs() { cfg.pairs(n)?.into_iter().map(Some).collect() } else { vec![None] };
        for &k in &ks {
            for &seed in &cfg.seeds {
                for &pair in &pairs {
                    tasks.push(Task { n, k, seed, pair });
                }
            }
        }
    }
    Ok(tasks)
}

fn tag(r: VerificationReport, cfg: &RunConfig, t: &Task) -> VerificationReport {
    let mut r = r.param("seed", t.seed);
    if !matches!(cfg.theorem, Theorem::BapatRoy | Theorem::Ch | Theorem::Figures) {
        r = r.param("strategy", cfg.strategy.name());
    }
    if cfg.symbolic {
        r = r.param("symbolic", true);
    }
    match cfg.theorem {
        Theorem::Ch => r.param("specialization", "ch"),
        Theorem::Cor16 => r.param("specialization", "cor16"),
        _ => r,
    }
}

fn generation_failure(theorem: &str, t: &Task, e: &Error) -> VerificationReport {
    VerificationReport::new(theorem, theorems::report::params([("n", t.n), ("k", t.k)]))
        .fail(json!({ "generation_error": e.to_string() }))
}

/// Runs one generated task.
pub fn run_task(cfg: &RunConfig, t: &Task) -> VerificationReport {
    let spec = cfg.spec(t.n, t.k, t.seed);
    let (b, e) = t.pair.unwrap_or((0, 0));
    let r = match cfg.theorem {
        Theorem::Phillips => gen::gen_family(&spec).map(|f| theorems::verify_phillips(&f)),
        Theorem::Ch => Ok(theorems::verify_phillips(&gen::specialize_ch(&gen::gen_matrix(t.n, t.seed, cfg.magnitude)))),
        Theorem::Cor12 => gen::gen_commuting(&FamilySpec { k: 2, ..spec })
            .map(|ab| theorems::verify_cor_2matrices(&ab[0], &ab[1])),
        Theorem::BapatRoy => gen::gen_tuple(t.n, t.seed, cfg.magnitude).map(|tuple| {
            let mut rng = SeededRng::stream(t.seed, Stream::Order);
            let order = theorems::shuffled_order(t.n, |m| rng.below(m));
            theorems::verify_bapat_roy(&tuple, Some(&order))
        }),
        Theorem::Mixed => gen::gen_mixed_constrained(&spec).map(|f| theorems::verify_mixed_theorem(&f)),
        Theorem::Cor16 => gen::gen_cor16(&spec).map(|f| theorems::verify_mixed_theorem(&f)),
        Theorem::Lemmas => gen::gen_family(&spec).map(|f| theorems::verify_lemmas(&f, b, e)),
        Theorem::Lemmas2 => gen::gen_mixed_constrained(&spec).map(|f| theorems::verify_lemmas2(&f, b, e)),
        Theorem::Laplace => gen::gen_family(&spec).map(|f| theorems::phillips_laplace_check(&f, b, e)),
        Theorem::Figures => Ok(theorems::verify_figures()),
    };
    let name = cfg.theorem.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    tag(r.unwrap_or_else(|err| generation_failure(&name, t, &err)), cfg, t)
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

#[derive(Debug, Deserialize)]
struct PairFile {
    a: RingMatrix,
    b: RingMatrix,
}

/// Reports for a user-supplied family file.
fn run_input(cfg: &RunConfig, path: &Path) -> Result<Vec<VerificationReport>> {
    let pairs = |n: usize| cfg.pairs(n);
    let reports = match cfg.theorem {
        Theorem::Phillips => vec![theorems::verify_phillips(&read_json::<ConstraintFamily>(path)?)],
        Theorem::Ch => vec![theorems::verify_phillips(&gen::specialize_ch(&read_json::<RingMatrix>(path)?))],
        Theorem::Cor12 => {
            let p: PairFile = read_json(path)?;
            vec![theorems::verify_cor_2matrices(&p.a, &p.b)]
        }
        Theorem::BapatRoy => vec![theorems::verify_bapat_roy(&read_json::<MatrixTuple>(path)?, None)],
        Theorem::Mixed => vec![theorems::verify_mixed_theorem(&read_json::<MixedConstraintFamily>(path)?)],
        Theorem::Cor16 => {
            let ms: Vec<RingMatrix> = read_json(path)?;
            match gen::specialize_cor16(&ms) {
                Ok(f) => vec![theorems::verify_mixed_theorem(&f)],
                Err(e) if e.is_hypothesis_violation() => {
                    vec![VerificationReport::new("mixed_theorem", serde_json::Map::new()).hypothesis_violation(&e)]
                }
                Err(e) => return Err(e),
            }
        }
        Theorem::Lemmas | Theorem::Laplace => {
            let f: ConstraintFamily = read_json(path)?;
            pairs(f.n())?
                .into_par_iter()
                .map(|(b, e)| {
                    if cfg.theorem == Theorem::Lemmas {
                        theorems::verify_lemmas(&f, b, e)
                    } else {
                        theorems::phillips_laplace_check(&f, b, e)
                    }
                })
                .collect()
        }
        Theorem::Lemmas2 => {
            let f: MixedConstraintFamily = read_json(path)?;
            pairs(f.n())?.into_par_iter().map(|(b, e)| theorems::verify_lemmas2(&f, b, e)).collect()
        }
        Theorem::Figures => vec![theorems::verify_figures()],
    };
    Ok(reports)
}

/// All reports for `cfg`, in task order whatever the worker count.
pub fn collect_reports(cfg: &RunConfig) -> Result<Vec<VerificationReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    pool.install(|| {
        if let Some(path) = &cfg.input {
            return run_input(cfg, path);
        }
        let tasks = plan(cfg)?;
        let mut reports: Vec<VerificationReport> = tasks.par_iter().map(|t| run_task(cfg, t)).collect();
        if cfg.theorem == Theorem::Lemmas && cfg.symbolic && cfg.ns.contains(&2) && cfg.ks.contains(&2) {
            reports.push(theorems::verify_figures());
        }
        Ok(reports)
    })
}

/// 1 if anything failed, else 3 if a hypothesis was violated, else 0.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Fail) {
        EXIT_FAIL
    } else if reports.iter().any(|r| r.status == Status::HypothesisViolation) {
        EXIT_HYPOTHESIS
    } else {
        EXIT_OK
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn cmd_verify(a: &VerifyArgs) -> Result<i32> {
    let cfg = RunConfig::from_args(a)?;
    let reports = collect_reports(&cfg)?;
    emit(cfg.out.as_deref(), &to_json(&reports)?)?;
    let count = |s| reports.iter().filter(|r| r.status == s).count();
    eprintln!(
        "{} reports: {} pass, {} fail, {} hypothesis_violation",
        reports.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::HypothesisViolation)
    );
    Ok(exit_code(&reports))
}

fn stream<T: Serialize>(items: impl Iterator<Item = T>, limit: Option<u64>, w: &mut dyn Write) -> Result<u64> {
    let mut count = 0u64;
    for x in items {
        if limit.map_or(true, |l| count < l) {
            writeln!(w, "{}", serde_json::to_string(&x)?)?;
        }
        count += 1;
    }
    Ok(count)
}

fn enumerate_kind<L: Label>(
    kind: ObjectKind,
    a: &EnumerateArgs,
    w: &mut dyn Write,
) -> Result<(u64, u64)> {
    let (n, k, lim) = (a.n, a.k, a.limit);
    let idx = |i: usize| i.checked_sub(1).ok_or_else(|| Error::InvalidArgument("--b and --e are 1-based".into()));
    let (b, e) = (idx(a.b)?, idx(a.e)?);
    let c = |n, k| Cardinalities::of::<L>(n, k);
    use ObjectKind::*;
    Ok(match kind {
        Decperm | Decperm2 => (stream(objects::decorated_permutations::<L>(n, k)?, lim, w)?, c(n, k).decorated_permutations),
        Decpath | Decpath2 => (stream(objects::decorated_paths::<L>(n, k)?, lim, w)?, c(n, k).decorated_paths),
        Decmap | Decmap2 => (stream(objects::decorated_maps::<L>(n, k)?, lim, w)?, c(n, k).decorated_maps),
        Pathmutation | Pathmutation2 => (stream(objects::pathmutations::<L>(n, k, b, e)?, lim, w)?, c(n, k).a),
        PathmapH | Pathmap2H => (stream(objects::pathmaps_h::<L>(n, k, b, e)?, lim, w)?, c(n, k).h),
        PathmapG | Pathmap2G => (stream(objects::pathmaps_g::<L>(n, k, b, e)?, lim, w)?, c(n, k).g),
    })
}

fn cmd_enumerate(a: &EnumerateArgs) -> Result<i32> {
    let mut buf: Vec<u8> = Vec::new();
    let two = matches!(
        a.object,
        ObjectKind::Decperm2
            | ObjectKind::Decpath2
            | ObjectKind::Decmap2
            | ObjectKind::Pathmutation2
            | ObjectKind::Pathmap2H
            | ObjectKind::Pathmap2G
    );
    let mut sink: Box<dyn Write> = match &a.out {
        Some(_) => Box::new(&mut buf),
        None => Box::new(io::stdout().lock()),
    };
    let (count, formula) = if two {
        enumerate_kind::<TwoLabel>(a.object, a, &mut sink)?
    } else {
        enumerate_kind::<usize>(a.object, a, &mut sink)?
    };
    let kind = a.object.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let summary = json!({ "object": kind, "n": a.n, "k": a.k, "count": count, "formula": formula });
    writeln!(sink, "{summary}")?;
    drop(sink);
    if let Some(p) = &a.out {
        fs::write(p, &buf)?;
    }
    Ok(if count == formula { EXIT_OK } else { EXIT_FAIL })
}

#[derive(Debug, Deserialize)]
struct CharpolyFile {
    a: Vec<RingMatrix>,
}

fn cmd_compute(a: &ComputeArgs) -> Result<i32> {
    let path = a.input.as_path();
    let text = match a.object {
        Quantity::Det => read_json::<RingMatrix>(path)?.det().to_string(),
        Quantity::Permanent => read_json::<RingMatrix>(path)?.permanent().to_string(),
        Quantity::MixedDiscriminant => mixed_discriminant(&read_json::<MatrixTuple>(path)?).to_string(),
        Quantity::MixedCharpoly => mixed_char_poly(&read_json::<MatrixTuple>(path)?)?.to_string(),
        Quantity::Charpoly => multivar_char_poly(&read_json::<CharpolyFile>(path)?.a)?.to_poly().to_string(),
        Quantity::Substitute => {
            let f: ConstraintFamily = read_json(path)?;
            substitute_commuting(&multivar_char_poly(f.a())?, f.b())?.to_string()
        }
    };
    emit(a.out.as_deref(), &(text + "\n"))?;
    Ok(EXIT_OK)
}

fn cmd_gen(a: &GenArgs) -> Result<i32> {
    let spec = FamilySpec::new(a.strategy, a.n, a.k, a.seed).symbolic(a.symbolic).magnitude(a.magnitude);
    spec.validate()?;
    let text = match a.object {
        GenKind::Family => to_json(&gen::gen_family(&spec)?)?,
        GenKind::Mixed => to_json(&gen::gen_mixed_constrained(&spec)?)?,
        GenKind::Cor16 => to_json(&gen::gen_cor16(&spec)?)?,
        GenKind::Commuting => to_json(&gen::gen_commuting(&spec)?)?,
        GenKind::Tuple => to_json(&gen::gen_tuple(a.n, a.seed, a.magnitude)?)?,
        GenKind::Spec => to_json(&spec)?,
    };
    emit(a.out.as_deref(), &text)?;
    Ok(EXIT_OK)
}

pub fn execute(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Compute(a) => cmd_compute(a),
        Command::Gen(a) => cmd_gen(a),
    }
}

/// Parses `args` (program name first), runs, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_hypothesis_violation() {
                EXIT_HYPOTHESIS
            } else {
                EXIT_INPUT
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3").unwrap(), vec![3]);
        assert_eq!(parse_range("2,3").unwrap(), vec![2, 3]);
        assert_eq!(parse_range("1,3-5,4").unwrap(), vec![1, 3, 4, 5]);
        assert!(parse_range("").is_err());
        assert!(parse_range("0").is_err());
        assert!(parse_range("4-2").is_err());
        assert_eq!(parse_index("all").unwrap(), None);
        assert_eq!(parse_index("2").unwrap(), Some(1));
        assert!(parse_index("0").is_err());
    }

    #[test]
    fn plan_order_is_fixed() {
        let cli = Cli::try_parse_from(["chvlab", "verify", "--theorem", "lemmas", "--n", "2", "--seeds", "2", "--jobs", "1"]).unwrap();
        let Command::Verify(a) = &cli.command else { panic!() };
        let cfg = RunConfig::from_args(a).unwrap();
        let tasks = plan(&cfg).unwrap();
        assert_eq!(tasks.len(), 8);
        assert_eq!(tasks[0], Task { n: 2, k: 2, seed: 0, pair: Some((0, 0)) });
        assert_eq!(tasks[4].seed, 1);
        assert_eq!(cfg.strategy, Strategy::ConjugatedDiagonal);
    }

    #[test]
    fn exit_code_precedence() {
        let pass = VerificationReport::new("t", serde_json::Map::new());
        let fail = pass.clone().fail(json!(null));
        let hyp = pass.clone().hypothesis_violation(&Error::ConstraintViolated("x".into()));
        assert_eq!(exit_code(&[pass.clone()]), EXIT_OK);
        assert_eq!(exit_code(&[pass.clone(), hyp.clone()]), EXIT_HYPOTHESIS);
        assert_eq!(exit_code(&[hyp, fail]), EXIT_FAIL);
    }
}
