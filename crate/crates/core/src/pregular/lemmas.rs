//! The degree-6 polynomial approximations of the built-in families and the
//! theorems derived from them.

use num_traits::Zero;

use super::{Family, PAdicFunction};
use crate::congruence::{find_claim, verify_claim, Grid, TableSource};
use crate::error::{Error, Result};
use crate::exactmath::{Integer, ModulusContext};
use crate::report::{Instance, SweepOutcome, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LemmaId {
    /// `f_U` mod `5^7`.
    L33,
    /// `f_E` mod `5^7`.
    L41,
    /// `f_S3` mod `3^7`.
    L51,
    /// `f_S5` mod `5^7`.
    L61,
}

impl LemmaId {
    pub const ALL: [LemmaId; 4] = [LemmaId::L33, LemmaId::L41, LemmaId::L51, LemmaId::L61];

    pub fn family(self) -> Family {
        match self {
            LemmaId::L33 => Family::U,
            LemmaId::L41 => Family::E,
            LemmaId::L51 => Family::S3,
            LemmaId::L61 => Family::S5,
        }
    }

    pub fn claim_id(self) -> &'static str {
        match self {
            LemmaId::L33 => "lemma-3.3",
            LemmaId::L41 => "lemma-4.1",
            LemmaId::L51 => "lemma-5.1",
            LemmaId::L61 => "lemma-6.1",
        }
    }
}

impl std::str::FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim_start_matches("lemma-") {
            "3.3" => Ok(LemmaId::L33),
            "4.1" => Ok(LemmaId::L41),
            "5.1" => Ok(LemmaId::L51),
            "6.1" => Ok(LemmaId::L61),
            _ => Err(Error::Parse(format!("unknown lemma `{s}`; expected 3.3, 4.1, 5.1 or 6.1"))),
        }
    }
}

/// Coefficients of `k^0..k^6` for base residue `b0`, modulo `p^7`.
pub fn lemma_polynomial(lemma: LemmaId, b0: u64) -> Result<[i64; 7]> {
    let c = match (lemma, b0) {
        (LemmaId::L33, 0) => [2, 7545, 72600, 59875, 51250, 50625, 6250],
        (LemmaId::L33, 2) => [-52, 37500, 5575, 48875, 10625, 40625, 59375],
        (LemmaId::L41, 0) => [0, 50005, 54500, 64875, 18750, 11875, 31250],
        (LemmaId::L41, 2) => [24, 74290, 4625, 60375, 68750, 10625, 31250],
        (LemmaId::L51, 0) => [0, 564, 1179, 981, 621, 1620, 1620],
        (LemmaId::L51, 1) => [2183, 888, 549, 1197, 1809, 2106, 324],
        (LemmaId::L61, 0) => [2, 930, 21500, -14250, -6250, 33750, 0],
        (LemmaId::L61, 1) => [-6, 7370, 23525, 40000, 18750, 22500, 9375],
        (LemmaId::L61, 2) => [-78, 44290, 64650, 30875, 56250, 41875, 25000],
        (LemmaId::L61, 3) => [1386, 14525, -8550, 67250, -9375, 40625, -3125],
        _ => {
            return Err(Error::Parameter(format!(
                "{} has no case for base residue {b0}",
                lemma.claim_id()
            )))
        }
    };
    Ok(c)
}

/// Checks `f_b(k) = P_{b0}(k + (b - b0)/period) (mod p^7)` for each `k`,
/// where `b0` is the least residue of `b` modulo the family's period.
pub fn reproduce_lemma(lemma: LemmaId, b: u64, ks: &[u64]) -> Result<Vec<VerificationReport>> {
    let family = lemma.family();
    let period = family.period();
    let b0 = b % period;
    let coeffs = lemma_polynomial(lemma, b0)?;
    let shift = (b - b0) / period;
    let f = PAdicFunction::builtin(family, b)?;
    let ctx = ModulusContext::new(family.p(), 7)?;
    let lhs = f.values_mod(ks, &ctx)?;
    Ok(ks
        .iter()
        .zip(lhs)
        .map(|(&k, lhs)| {
            let x = Integer::from(k + shift);
            let value = coeffs.iter().rev().fold(Integer::zero(), |acc, &c| acc * &x + c);
            let inst = Instance { b: Some(b), k: Some(k), ..Default::default() };
            VerificationReport::compare_residues(lemma.claim_id(), inst, lhs, ctx.residue(&value))
        })
        .collect())
}

/// Sweeps one of the theorems `3.1`, `4.1`, `5.1`, `6.1` over `b x k x m`.
pub fn verify_theorem(
    thm: &str,
    b: &[u64],
    k: &[u64],
    m: &[u32],
    tables: &dyn TableSource,
) -> Result<SweepOutcome> {
    let id = match thm.trim_start_matches("thm-") {
        t @ ("3.1" | "4.1" | "5.1" | "6.1" | "6.1-b0") => format!("thm-{t}"),
        _ => return Err(Error::UnknownClaim(thm.to_string())),
    };
    let grid = Grid::new([1], b.iter().copied(), k.iter().copied(), m.iter().copied());
    verify_claim(find_claim(&id)?, &grid, tables)
}
