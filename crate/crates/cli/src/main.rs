use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use stern_core::congruence::{
    claim_registry, e_s_poly, find_claim, parse_range, verify_claim, FreshTables, Grid, Parity, TableSource,
};
use stern_core::exactmath::{parse_rational, ModulusContext};
use stern_core::pregular::{check_pregular, interpolate, lemma32_checks, reproduce_lemma, Family, LemmaId, PAdicFunction};
use stern_core::report::{SweepOutcome, VerificationReport};
use stern_core::sequences::{gen_euler_poly, Mode, SequenceId, TableCache};
use stern_core::{Error, Result};

#[derive(Parser)]
#[command(name = "stern", version, about = "Euler-number congruences: sequences, claim sweeps and p-regular tools")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Directory for cached sequence tables.
    #[arg(long, global = true, env = "STERN_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Build every table from scratch and leave the cache alone.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    JsonLines,
}

#[derive(Clone, Copy, ValueEnum)]
enum Seq {
    #[value(name = "E")]
    E,
    #[value(name = "Ea")]
    Ea,
    #[value(name = "U")]
    U,
    #[value(name = "S")]
    S,
}

#[derive(Subcommand)]
enum Command {
    /// Print a sequence, exactly or modulo p^e.
    Gen {
        #[arg(long, value_enum)]
        seq: Seq,
        /// Parameter of E^(a), as an integer or num/den.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long)]
        upto: usize,
        /// Modulus written p^e.
        #[arg(long = "mod")]
        modulus: Option<String>,
    },
    /// Print E_n^(a) as a polynomial in a.
    Poly {
        #[arg(long)]
        n: usize,
    },
    /// Print e_s(a,b) as a polynomial in a.
    Es {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        parity: String,
    },
    /// List the registered claims.
    Claims,
    /// Check a claim over a parameter grid; exits 0 iff every instance passes.
    Verify {
        #[arg(long)]
        claim: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value = "0")]
        b: String,
        #[arg(long, default_value = "1")]
        k: String,
        #[arg(long, default_value = "5")]
        m: String,
    },
    /// Alternating-sum valuations of a built-in family, n = 1..nmax.
    Pregular {
        #[arg(long)]
        f: String,
        #[arg(long, default_value_t = 0)]
        b: u64,
        #[arg(long, default_value_t = 10)]
        nmax: u32,
    },
    /// Polynomial approximation of a built-in family mod p^n.
    Interp {
        #[arg(long)]
        f: String,
        #[arg(long, default_value_t = 0)]
        b: u64,
        #[arg(long, default_value_t = 7)]
        n: u32,
    },
    /// Compare a family with its stated degree-6 polynomial mod p^7.
    Lemma {
        /// One of 3.3, 4.1, 5.1, 6.1.
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 0)]
        b: u64,
        #[arg(long, default_value = "0..20")]
        k: String,
    },
    /// Check the six-term evaluation of f(p^(m-1) k) mod p^(m+5).
    Lemma32 {
        #[arg(long)]
        f: String,
        #[arg(long, default_value_t = 0)]
        b: u64,
        #[arg(long, default_value = "5")]
        m: String,
        #[arg(long, default_value = "1")]
        k: String,
    },
    /// Inspect or empty the table cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    List,
    Clear,
}

fn default_cache_dir() -> PathBuf {
    if let Some(x) = std::env::var_os("XDG_CACHE_HOME") {
        return PathBuf::from(x).join("stern");
    }
    if let Some(h) = std::env::var_os("HOME") {
        return PathBuf::from(h).join(".cache").join("stern");
    }
    PathBuf::from(".stern-cache")
}

struct Ctx {
    global: Global,
    out: io::StdoutLock<'static>,
}

impl Ctx {
    fn cache(&self) -> Result<TableCache> {
        TableCache::new(self.global.cache_dir.clone().unwrap_or_else(default_cache_dir))
    }

    fn tables(&self) -> Result<Box<dyn TableSource>> {
        if self.global.no_cache {
            Ok(Box::new(FreshTables))
        } else {
            Ok(Box::new(self.cache()?))
        }
    }

    fn line(&mut self, s: impl AsRef<str>) -> Result<()> {
        writeln!(self.out, "{}", s.as_ref())?;
        Ok(())
    }

    fn emit_reports(&mut self, reports: &[VerificationReport]) -> Result<bool> {
        for r in reports {
            let line = match self.global.format {
                Format::Human => r.to_human_line(),
                Format::JsonLines => r.to_json_line(),
            };
            self.line(line)?;
        }
        Ok(reports.iter().all(|r| r.pass))
    }

    fn emit_outcome(&mut self, out: &SweepOutcome) -> Result<bool> {
        let ok = self.emit_reports(&out.reports)?;
        for s in &out.skipped {
            eprintln!("skipped {} {}: {}", s.claim, s.instance, s.reason);
        }
        if self.global.format == Format::Human {
            let failed = out.failures().count();
            self.line(format!(
                "{} passed, {failed} failed, {} skipped",
                out.reports.len() - failed,
                out.skipped.len()
            ))?;
        }
        Ok(ok)
    }
}

fn builtin(f: &str, b: u64) -> Result<PAdicFunction> {
    PAdicFunction::builtin(f.parse::<Family>()?, b)
}

fn run(command: Command, ctx: &mut Ctx) -> Result<bool> {
    match command {
        Command::Gen { seq, a, upto, modulus } => {
            let id = match (seq, a) {
                (Seq::Ea, Some(a)) => SequenceId::gen_euler(parse_rational(&a)?)?,
                (Seq::Ea, None) => return Err(Error::Parameter("--seq Ea requires --a".into())),
                (_, Some(_)) => return Err(Error::Parameter("--a applies only to --seq Ea".into())),
                (Seq::E, None) => SequenceId::Euler,
                (Seq::U, None) => SequenceId::U,
                (Seq::S, None) => SequenceId::S,
            };
            let mode = match modulus {
                Some(m) => Mode::Modular(m.parse::<ModulusContext>()?),
                None => Mode::Exact,
            };
            let table = ctx.tables()?.table(&id, upto, &mode)?;
            for n in 0..=upto {
                ctx.line(format!("{n} {}", table.value_string(n).expect("in range")))?;
            }
            Ok(true)
        }
        Command::Poly { n } => {
            ctx.line(gen_euler_poly(n).to_string())?;
            Ok(true)
        }
        Command::Es { s, parity } => {
            let parity: Parity = parity.parse()?;
            if !(1..=7).contains(&s) {
                return Err(Error::Parameter("--s must lie in 1..7".into()));
            }
            ctx.line(e_s_poly(parity, s)?.to_string())?;
            Ok(true)
        }
        Command::Claims => {
            for c in claim_registry() {
                ctx.line(format!("{:<24} p={} {}", c.id, c.p, c.summary))?;
            }
            Ok(true)
        }
        Command::Verify { claim, a, b, k, m } => {
            let claim = find_claim(&claim)?;
            let grid = Grid {
                a: parse_range(&a)?,
                b: parse_range(&b)?,
                k: parse_range(&k)?,
                m: parse_range(&m)?,
            };
            let tables = ctx.tables()?;
            let outcome = verify_claim(claim, &grid, tables.as_ref())?;
            ctx.emit_outcome(&outcome)
        }
        Command::Pregular { f, b, nmax } => {
            let f = builtin(&f, b)?;
            let levels = check_pregular(&f, nmax)?;
            for l in &levels {
                let line = match ctx.global.format {
                    Format::Human => {
                        let v = l.valuation.map_or("inf".to_string(), |v| v.to_string());
                        format!("{} {} n={} valuation={v}", if l.pass { "PASS" } else { "FAIL" }, f.label(), l.n)
                    }
                    Format::JsonLines => serde_json::json!({
                        "function": f.label(),
                        "n": l.n.to_string(),
                        "valuation": l.valuation.map(|v| v.to_string()),
                        "pass": l.pass,
                    })
                    .to_string(),
                };
                ctx.line(line)?;
            }
            Ok(levels.iter().all(|l| l.pass))
        }
        Command::Interp { f, b, n } => {
            let r = interpolate(&builtin(&f, b)?, n)?;
            ctx.line(r.to_string())?;
            Ok(true)
        }
        Command::Lemma { id, b, k } => {
            let lemma: LemmaId = id.parse()?;
            let reports = reproduce_lemma(lemma, b, &parse_range(&k)?)?;
            ctx.emit_reports(&reports)
        }
        Command::Lemma32 { f, b, m, k } => {
            let f = builtin(&f, b)?;
            let ms: Vec<u32> = parse_range(&m)?;
            let ks: Vec<u64> = parse_range(&k)?;
            let points: Vec<(u32, u64)> = ms.iter().flat_map(|&m| ks.iter().map(move |&k| (m, k))).collect();
            let reports = lemma32_checks(&f, &points)?;
            ctx.emit_reports(&reports)
        }
        Command::Cache { action } => {
            let cache = ctx.cache()?;
            match action {
                CacheAction::List => {
                    for p in cache.list()? {
                        ctx.line(p.display().to_string())?;
                    }
                }
                CacheAction::Clear => {
                    let n = cache.clear()?;
                    ctx.line(format!("removed {n} cached tables"))?;
                }
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let mut ctx = Ctx { global: cli.global, out: io::stdout().lock() };
    match run(cli.command, &mut ctx) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
