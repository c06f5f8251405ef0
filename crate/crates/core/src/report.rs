//! Verification reports and their line-oriented serializations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{ord_p, Integer, ModulusContext, Residue};

/// Parameters of one checked instance. Claims use whichever of these their
/// statement mentions; `n` is the summation length used by the lemma checks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Instance {
    pub a: Option<i64>,
    pub b: Option<u64>,
    pub k: Option<u64>,
    pub m: Option<u32>,
    pub n: Option<u32>,
}

impl Instance {
    pub fn abkm(a: i64, b: u64, k: u64, m: u32) -> Self {
        Self { a: Some(a), b: Some(b), k: Some(k), m: Some(m), n: None }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(a) = self.a {
            parts.push(format!("a={a}"));
        }
        if let Some(b) = self.b {
            parts.push(format!("b={b}"));
        }
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        if let Some(m) = self.m {
            parts.push(format!("m={m}"));
        }
        if let Some(n) = self.n {
            parts.push(format!("n={n}"));
        }
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim: String,
    pub instance: Instance,
    pub lhs: Residue,
    pub rhs: Residue,
    pub pass: bool,
    /// `ord_p(lhs - rhs)` of the exact difference, when the sides differ.
    pub defect_valuation: Option<u32>,
}

impl VerificationReport {
    /// Compares two exact integers modulo `ctx`.
    pub fn compare(claim: &str, instance: Instance, ctx: ModulusContext, lhs: &Integer, rhs: &Integer) -> Self {
        let l = ctx.residue(lhs);
        let r = ctx.residue(rhs);
        let defect = if l == r { None } else { Some(ord_p(ctx.p(), &(lhs - rhs)).expect("nonzero difference")) };
        Self { claim: claim.to_string(), instance, lhs: l, rhs: r, pass: l == r, defect_valuation: defect }
    }

    /// Compares two residues. The defect is the valuation of the difference
    /// of canonical representatives, which is exact below the modulus exponent.
    pub fn compare_residues(claim: &str, instance: Instance, lhs: Residue, rhs: Residue) -> Self {
        debug_assert_eq!(lhs.ctx, rhs.ctx);
        let ctx = lhs.ctx;
        let defect = if lhs.value == rhs.value {
            None
        } else {
            let diff = Integer::from(ctx.sub(lhs.value, rhs.value));
            Some(ord_p(ctx.p(), &diff).expect("nonzero difference"))
        };
        Self { claim: claim.to_string(), instance, lhs, rhs, pass: defect.is_none(), defect_valuation: defect }
    }

    pub fn modulus(&self) -> ModulusContext {
        self.lhs.ctx
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&JsonReport::from(self)).expect("report serializes")
    }

    pub fn from_json_line(line: &str) -> Result<Self> {
        let j: JsonReport = serde_json::from_str(line).map_err(|e| Error::Parse(e.to_string()))?;
        j.try_into()
    }

    pub fn to_human_line(&self) -> String {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{verdict} {} {} lhs={} rhs={} mod {}",
            self.claim,
            self.instance,
            self.lhs,
            self.rhs,
            self.modulus()
        );
        if let Some(d) = self.defect_valuation {
            line.push_str(&format!(" defect_valuation={d}"));
        }
        line
    }
}

/// Wire form: integers as decimal strings, modulus as `p^e`.
#[derive(Serialize, Deserialize)]
struct JsonReport {
    claim: String,
    a: Option<String>,
    b: Option<String>,
    k: Option<String>,
    m: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<String>,
    modulus: String,
    lhs: String,
    rhs: String,
    pass: bool,
    defect_valuation: Option<String>,
}

impl From<&VerificationReport> for JsonReport {
    fn from(r: &VerificationReport) -> Self {
        JsonReport {
            claim: r.claim.clone(),
            a: r.instance.a.map(|v| v.to_string()),
            b: r.instance.b.map(|v| v.to_string()),
            k: r.instance.k.map(|v| v.to_string()),
            m: r.instance.m.map(|v| v.to_string()),
            n: r.instance.n.map(|v| v.to_string()),
            modulus: r.modulus().to_string(),
            lhs: r.lhs.value.to_string(),
            rhs: r.rhs.value.to_string(),
            pass: r.pass,
            defect_valuation: r.defect_valuation.map(|v| v.to_string()),
        }
    }
}

fn parse_opt<T: std::str::FromStr>(field: &str, v: Option<String>) -> Result<Option<T>> {
    v.map(|s| s.parse::<T>().map_err(|_| Error::Parse(format!("bad `{field}` value `{s}`"))))
        .transpose()
}

impl TryFrom<JsonReport> for VerificationReport {
    type Error = Error;

    fn try_from(j: JsonReport) -> Result<Self> {
        let ctx: ModulusContext = j.modulus.parse()?;
        let residue = |field: &str, s: &str| -> Result<Residue> {
            let v: u64 = s.parse().map_err(|_| Error::Parse(format!("bad `{field}` value `{s}`")))?;
            if v >= ctx.modulus() {
                return Err(Error::Parse(format!("`{field}` out of range for {ctx}")));
            }
            Ok(Residue { ctx, value: v })
        };
        let lhs = residue("lhs", &j.lhs)?;
        let rhs = residue("rhs", &j.rhs)?;
        Ok(VerificationReport {
            claim: j.claim,
            instance: Instance {
                a: parse_opt("a", j.a)?,
                b: parse_opt("b", j.b)?,
                k: parse_opt("k", j.k)?,
                m: parse_opt("m", j.m)?,
                n: parse_opt("n", j.n)?,
            },
            lhs,
            rhs,
            pass: j.pass,
            defect_valuation: parse_opt("defect_valuation", j.defect_valuation)?,
        })
    }
}

/// An instance that was not checked because it lies outside the claim's hypotheses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skipped {
    pub claim: String,
    pub instance: Instance,
    pub reason: String,
}

/// Reports from a sweep plus the grid points that were skipped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepOutcome {
    pub reports: Vec<VerificationReport>,
    pub skipped: Vec<Skipped>,
}

impl SweepOutcome {
    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationReport> {
        self.reports.iter().filter(|r| !r.pass)
    }

    pub fn extend(&mut self, other: SweepOutcome) {
        self.reports.extend(other.reports);
        self.skipped.extend(other.skipped);
    }
}
