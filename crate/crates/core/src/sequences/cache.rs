//! Plain-text table cache.
//!
//! Layout: one header line
//! `stern-table v1 id=<tag> mode=<mode> p=<p|-> e=<e|-> n_max=<n>`,
//! then one decimal value per line for indices `0..=n_max`, then `end`.
//! Rationals are written `num/den`; polynomials as space-separated
//! ascending coefficients.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::thread;
use std::time::Duration;

use super::{generate, Mode, PolyZ, SequenceId, SequenceTable, Values};
use crate::error::{Error, Result};
use crate::exactmath::{parse_rational, Integer, ModulusContext};

const MAGIC: &str = "stern-table v1";

fn header(table: &SequenceTable) -> String {
    let (p, e) = match table.mode {
        Mode::Modular(ctx) => (ctx.p().to_string(), ctx.e().to_string()),
        _ => ("-".to_string(), "-".to_string()),
    };
    format!(
        "{MAGIC} id={} mode={} p={p} e={e} n_max={}",
        table.id.tag(),
        table.mode.name(),
        table.n_max()
    )
}

fn render(table: &SequenceTable) -> String {
    let mut out = header(table);
    out.push('\n');
    let mut push = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    match &table.values {
        Values::Integer(v) => v.iter().for_each(|x| push(x.to_string())),
        Values::Rational(v) => v.iter().for_each(|x| push(x.to_string())),
        Values::Residue(v) => v.iter().for_each(|x| push(x.to_string())),
        Values::Poly(v) => v.iter().for_each(|p| {
            let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
            push(if coeffs.is_empty() { "0".to_string() } else { coeffs.join(" ") })
        }),
    }
    out.push_str("end\n");
    out
}

/// Writes a table atomically (temp file then rename).
pub fn cache_store(table: &SequenceTable, path: &Path) -> Result<()> {
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(render(table).as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

struct Header {
    id: SequenceId,
    mode: Mode,
    n_max: usize,
}

fn parse_header(line: &str, corrupt: &dyn Fn(&str) -> Error) -> Result<Header> {
    let rest = line.strip_prefix(MAGIC).ok_or_else(|| corrupt("bad magic"))?;
    let mut id = None;
    let mut mode = None;
    let mut p = None;
    let mut e = None;
    let mut n_max = None;
    for field in rest.split_whitespace() {
        let (k, v) = field.split_once('=').ok_or_else(|| corrupt("malformed header field"))?;
        match k {
            "id" => id = Some(SequenceId::parse_tag(v).map_err(|_| corrupt("bad sequence id"))?),
            "mode" => mode = Some(v.to_string()),
            "p" => p = Some(v.to_string()),
            "e" => e = Some(v.to_string()),
            "n_max" => n_max = Some(v.parse::<usize>().map_err(|_| corrupt("bad n_max"))?),
            _ => return Err(corrupt("unknown header field")),
        }
    }
    let missing = || corrupt("incomplete header");
    let mode = match mode.ok_or_else(missing)?.as_str() {
        "exact" => Mode::Exact,
        "symbolic" => Mode::Symbolic,
        "modular" => {
            let p = p.ok_or_else(missing)?.parse().map_err(|_| corrupt("bad p"))?;
            let e = e.ok_or_else(missing)?.parse().map_err(|_| corrupt("bad e"))?;
            Mode::Modular(ModulusContext::new(p, e).map_err(|_| corrupt("bad modulus"))?)
        }
        _ => return Err(corrupt("unknown mode")),
    };
    Ok(Header { id: id.ok_or_else(missing)?, mode, n_max: n_max.ok_or_else(missing)? })
}

/// Loads a table, refusing it unless it matches `id` and `mode` exactly.
pub fn cache_load(path: &Path, id: &SequenceId, mode: &Mode) -> Result<SequenceTable> {
    let text = fs::read_to_string(path)?;
    let path_str = path.display().to_string();
    let corrupt = |reason: &str| Error::CorruptCache { path: path_str.clone(), reason: reason.to_string() };
    let mut lines = text.lines();
    let head = parse_header(lines.next().ok_or_else(|| corrupt("empty file"))?, &corrupt)?;
    if &head.id != id {
        return Err(Error::CacheMismatch(format!("file holds {}, wanted {}", head.id, id)));
    }
    if &head.mode != mode {
        let show = |m: &Mode| match m {
            Mode::Modular(c) => format!("modular {c}"),
            m => m.name().to_string(),
        };
        return Err(Error::CacheMismatch(format!(
            "file is {}, wanted {}",
            show(&head.mode),
            show(mode)
        )));
    }
    let body: Vec<&str> = lines.collect();
    if body.last() != Some(&"end") || body.len() != head.n_max + 2 {
        return Err(corrupt("truncated or padded body"));
    }
    let body = &body[..body.len() - 1];
    let bad = |_| corrupt("unparsable value");
    let values = match (mode, &head.id) {
        (Mode::Modular(ctx), _) => Values::Residue(
            body.iter()
                .map(|l| {
                    let v: u64 = l.parse().map_err(|_| corrupt("unparsable value"))?;
                    if v >= ctx.modulus() {
                        return Err(corrupt("residue out of range"));
                    }
                    Ok(v)
                })
                .collect::<Result<_>>()?,
        ),
        (Mode::Symbolic, _) => Values::Poly(
            body.iter()
                .map(|l| {
                    l.split_whitespace()
                        .map(|c| c.parse::<Integer>().map_err(|_| corrupt("unparsable value")))
                        .collect::<Result<Vec<_>>>()
                        .map(PolyZ::from_coeffs)
                })
                .collect::<Result<_>>()?,
        ),
        (Mode::Exact, SequenceId::GenEuler(a)) if !a.is_integer() => Values::Rational(
            body.iter().map(|l| parse_rational(l).map_err(bad)).collect::<Result<_>>()?,
        ),
        (Mode::Exact, _) => Values::Integer(
            body.iter()
                .map(|l| l.parse::<Integer>().map_err(|_| corrupt("unparsable value")))
                .collect::<Result<_>>()?,
        ),
    };
    Ok(SequenceTable { id: head.id, mode: *mode, values })
}

/// A directory of tables addressed by (sequence id, mode, p, e).
#[derive(Clone, Debug)]
pub struct TableCache {
    dir: PathBuf,
}

struct DirLock {
    path: PathBuf,
}

impl DirLock {
    fn acquire(dir: &Path) -> Result<Self> {
        let path = dir.join(".lock");
        for _ in 0..6000 {
            match fs::OpenOptions::new().write(true).create_new(true).open(&path) {
                Ok(_) => return Ok(Self { path }),
                Err(e) if e.kind() == std::io::ErrorKind::AlreadyExists => {
                    thread::sleep(Duration::from_millis(10))
                }
                Err(e) => return Err(e.into()),
            }
        }
        Err(Error::Io(format!("timed out waiting for {}", path.display())))
    }
}

impl Drop for DirLock {
    fn drop(&mut self) {
        let _ = fs::remove_file(&self.path);
    }
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Self { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, id: &SequenceId, mode: &Mode) -> PathBuf {
        let tag: String = id
            .tag()
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' })
            .collect();
        let name = match mode {
            Mode::Modular(ctx) => format!("{tag}.modular.p{}.e{}.tbl", ctx.p(), ctx.e()),
            m => format!("{tag}.{}.tbl", m.name()),
        };
        self.dir.join(name)
    }

    /// Returns a table of length at least `n_max + 1` (truncated to exactly
    /// that), building and storing it if the cached one is missing or short.
    pub fn get_or_build(&self, id: &SequenceId, n_max: usize, mode: &Mode) -> Result<SequenceTable> {
        let path = self.path_for(id, mode);
        let _lock = DirLock::acquire(&self.dir)?;
        if path.exists() {
            match cache_load(&path, id, mode) {
                Ok(mut t) if t.n_max() >= n_max => {
                    t.truncate(n_max);
                    return Ok(t);
                }
                Ok(_) | Err(Error::CorruptCache { .. }) => {}
                Err(e) => return Err(e),
            }
        }
        let table = generate(id, n_max, mode)?;
        cache_store(&table, &path)?;
        Ok(table)
    }

    pub fn list(&self) -> Result<Vec<PathBuf>> {
        let mut out: Vec<PathBuf> = fs::read_dir(&self.dir)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "tbl"))
            .collect();
        out.sort();
        Ok(out)
    }

    pub fn clear(&self) -> Result<usize> {
        let _lock = DirLock::acquire(&self.dir)?;
        let files = self.list()?;
        for f in &files {
            fs::remove_file(f)?;
        }
        Ok(files.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Rational;
    use crate::sequences::{euler_exact, gen_euler_recurrence, gen_euler_symbolic, u_seq};

    #[test]
    fn round_trips_every_representation() {
        let dir = tempfile::tempdir().unwrap();
        let ctx = ModulusContext::new(5, 10).unwrap();
        let tables = vec![
            euler_exact(10),
            u_seq(40, &Mode::Modular(ctx)).unwrap(),
            gen_euler_recurrence(&Rational::new(3.into(), 2.into()), 12, &Mode::Exact).unwrap(),
            gen_euler_symbolic(9),
        ];
        for (i, t) in tables.into_iter().enumerate() {
            let path = dir.path().join(format!("t{i}.tbl"));
            cache_store(&t, &path).unwrap();
            assert_eq!(cache_load(&path, &t.id, &t.mode).unwrap(), t);
        }
    }

    #[test]
    fn rejects_context_mismatch() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("u.tbl");
        let stored = Mode::Modular(ModulusContext::new(5, 10).unwrap());
        cache_store(&u_seq(20, &stored).unwrap(), &path).unwrap();
        let wanted = Mode::Modular(ModulusContext::new(5, 7).unwrap());
        assert!(matches!(
            cache_load(&path, &SequenceId::U, &wanted),
            Err(Error::CacheMismatch(_))
        ));
        assert!(matches!(
            cache_load(&path, &SequenceId::S, &stored),
            Err(Error::CacheMismatch(_))
        ));
    }

    #[test]
    fn rejects_truncated_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("e.tbl");
        cache_store(&euler_exact(10), &path).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        for cut in [text.len() - 3, text.len() / 2, 10] {
            fs::write(&path, &text[..cut]).unwrap();
            assert!(matches!(
                cache_load(&path, &SequenceId::Euler, &Mode::Exact),
                Err(Error::CorruptCache { .. })
            ));
        }
    }

    #[test]
    fn get_or_build_reuses_and_extends() {
        let dir = tempfile::tempdir().unwrap();
        let cache = TableCache::new(dir.path()).unwrap();
        let mode = Mode::Modular(ModulusContext::new(2, 12).unwrap());
        let a = cache.get_or_build(&SequenceId::Euler, 50, &mode).unwrap();
        let b = cache.get_or_build(&SequenceId::Euler, 20, &mode).unwrap();
        assert_eq!(b.n_max(), 20);
        assert_eq!(&a.residues()[..21], b.residues());
        let c = cache.get_or_build(&SequenceId::Euler, 80, &mode).unwrap();
        assert_eq!(&c.residues()[..51], a.residues());
        assert_eq!(cache.list().unwrap().len(), 1);
        assert_eq!(cache.clear().unwrap(), 1);
    }
}
