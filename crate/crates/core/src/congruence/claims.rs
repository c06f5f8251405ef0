//! Congruence statements as data, and grid sweeps over them.
//!
//! Every registered claim has the shape
//! `X_{index(k,m,b)} - c(b) X_b = rhs(a,b,k,m)  (mod p^exponent(a,m))`
//! for one sequence `X`. The left side comes from one modular table per
//! parameter `a`; the right side is evaluated in exact integer arithmetic and
//! reduced last.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactmath::{pow_int, Integer, ModulusContext, Rational, Residue};
use crate::report::{Instance, Skipped, SweepOutcome, VerificationReport};
use crate::sequences::{generate, Mode, SequenceId, SequenceTable, TableCache};

/// Where modular tables come from: built fresh, or through a cache.
pub trait TableSource: Sync {
    fn table(&self, id: &SequenceId, n_max: usize, mode: &Mode) -> Result<SequenceTable>;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct FreshTables;

impl TableSource for FreshTables {
    fn table(&self, id: &SequenceId, n_max: usize, mode: &Mode) -> Result<SequenceTable> {
        generate(id, n_max, mode)
    }
}

impl TableSource for TableCache {
    fn table(&self, id: &SequenceId, n_max: usize, mode: &Mode) -> Result<SequenceTable> {
        self.get_or_build(id, n_max, mode)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimSequence {
    /// `E_n^(a)` with `a` taken from the grid.
    GenEuler,
    Euler,
    U,
    S,
}

/// Integer parameters of one instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Params {
    pub a: i64,
    pub b: u64,
    pub k: u64,
    pub m: u32,
}

type Domain = fn(&Params) -> std::result::Result<(), String>;

/// One congruence statement.
#[derive(Clone, Copy)]
pub struct CongruenceClaim {
    pub id: &'static str,
    pub summary: &'static str,
    pub p: u32,
    pub sequence: ClaimSequence,
    domain: Domain,
    modulus_exponent: fn(&Params) -> u32,
    lhs_index: fn(&Params) -> u64,
    base_factor: fn(&Params) -> Integer,
    rhs: fn(&Params) -> Integer,
}

impl std::fmt::Debug for CongruenceClaim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CongruenceClaim").field("id", &self.id).finish_non_exhaustive()
    }
}

impl CongruenceClaim {
    pub fn uses_a(&self) -> bool {
        self.sequence == ClaimSequence::GenEuler
    }

    pub fn check_domain(&self, params: &Params) -> std::result::Result<(), String> {
        if params.k == 0 || params.m == 0 {
            return Err("k and m must be positive".into());
        }
        if self.uses_a() && params.a == 0 {
            return Err("a must be nonzero".into());
        }
        (self.domain)(params)
    }

    pub fn modulus_exponent(&self, params: &Params) -> u32 {
        (self.modulus_exponent)(params)
    }

    pub fn lhs_index(&self, params: &Params) -> u64 {
        (self.lhs_index)(params)
    }

    /// Exact right-hand side before reduction.
    pub fn rhs(&self, params: &Params) -> Integer {
        (self.rhs)(params)
    }

    pub fn base_factor(&self, params: &Params) -> Integer {
        (self.base_factor)(params)
    }

    pub fn instance(&self, params: &Params) -> Instance {
        Instance {
            a: self.uses_a().then_some(params.a),
            b: Some(params.b),
            k: Some(params.k),
            m: Some(params.m),
            n: None,
        }
    }

    fn sequence_id(&self, a: i64) -> SequenceId {
        match self.sequence {
            ClaimSequence::GenEuler => SequenceId::GenEuler(Rational::from_integer(a.into())),
            ClaimSequence::Euler => SequenceId::Euler,
            ClaimSequence::U => SequenceId::U,
            ClaimSequence::S => SequenceId::S,
        }
    }
}

/// Finite parameter ranges; `a` is ignored by claims about a fixed sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Grid {
    pub a: Vec<i64>,
    pub b: Vec<u64>,
    pub k: Vec<u64>,
    pub m: Vec<u32>,
}

impl Grid {
    pub fn new(a: impl IntoIterator<Item = i64>, b: impl IntoIterator<Item = u64>, k: impl IntoIterator<Item = u64>, m: impl IntoIterator<Item = u32>) -> Self {
        Self {
            a: a.into_iter().collect(),
            b: b.into_iter().collect(),
            k: k.into_iter().collect(),
            m: m.into_iter().collect(),
        }
    }

    fn points(&self, uses_a: bool) -> Vec<Params> {
        let a_values: Vec<i64> = if uses_a { self.a.clone() } else { vec![1] };
        let mut out = Vec::new();
        for &a in &a_values {
            for &m in &self.m {
                for &k in &self.k {
                    for &b in &self.b {
                        out.push(Params { a, b, k, m });
                    }
                }
            }
        }
        out
    }
}

/// Parses `lo..hi[:step]` (inclusive) or a single integer.
pub fn parse_range<T>(s: &str) -> Result<Vec<T>>
where
    T: std::str::FromStr + Copy + TryFrom<i64>,
{
    let bad = || Error::Parse(format!("bad range `{s}`; expected lo..hi[:step]"));
    let conv = |x: i64| T::try_from(x).map_err(|_| bad());
    let (body, step) = match s.split_once(':') {
        Some((body, step)) => (body, step.trim().parse::<i64>().map_err(|_| bad())?),
        None => (s, 1),
    };
    if step <= 0 {
        return Err(bad());
    }
    match body.split_once("..") {
        Some((lo, hi)) => {
            let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
            let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
            if lo > hi {
                return Err(bad());
            }
            (lo..=hi).step_by(step as usize).map(conv).collect()
        }
        None => Ok(vec![conv(body.trim().parse().map_err(|_| bad())?)?]),
    }
}

/// Checks every grid point of `claim`. Points outside the claim's hypotheses
/// are skipped with a note; reports come back in grid order.
pub fn verify_claim(claim: &CongruenceClaim, grid: &Grid, tables: &dyn TableSource) -> Result<SweepOutcome> {
    let mut outcome = SweepOutcome::default();
    let mut by_a: BTreeMap<i64, Vec<Params>> = BTreeMap::new();
    let mut order = Vec::new();
    for params in grid.points(claim.uses_a()) {
        match claim.check_domain(&params) {
            Ok(()) => {
                if !by_a.contains_key(&params.a) {
                    order.push(params.a);
                }
                by_a.entry(params.a).or_default().push(params);
            }
            Err(reason) => outcome.skipped.push(Skipped {
                claim: claim.id.to_string(),
                instance: claim.instance(&params),
                reason,
            }),
        }
    }
    for a in order {
        let points = &by_a[&a];
        let max_index = points.iter().map(|p| claim.lhs_index(p)).max().expect("nonempty");
        let max_exp = points.iter().map(|p| claim.modulus_exponent(p)).max().expect("nonempty");
        let table_ctx = ModulusContext::new(claim.p, max_exp)?;
        let table = tables.table(&claim.sequence_id(a), max_index as usize, &Mode::Modular(table_ctx))?;
        let values = table.residues();
        let reports: Vec<VerificationReport> = points
            .par_iter()
            .map(|params| {
                let ctx = ModulusContext::new(claim.p, claim.modulus_exponent(params))?;
                let at = |i: u64| values[i as usize] % ctx.modulus();
                let factor = ctx.reduce(&claim.base_factor(params));
                let lhs = ctx.sub(at(claim.lhs_index(params)), ctx.mul(factor, at(params.b)));
                let rhs = ctx.residue(&claim.rhs(params));
                Ok(VerificationReport::compare_residues(
                    claim.id,
                    claim.instance(params),
                    Residue { ctx, value: lhs },
                    rhs,
                ))
            })
            .collect::<Result<_>>()?;
        outcome.reports.extend(reports);
    }
    Ok(outcome)
}

fn z(x: i64) -> Integer {
    Integer::from(x)
}

fn pw(x: i64, e: u32) -> Integer {
    pow_int(x, e)
}

fn two_pow(e: u32) -> Integer {
    Integer::one() << e as usize
}

/// `2^m k`.
fn tmk(p: &Params) -> Integer {
    two_pow(p.m) * p.k
}

fn ord2(a: i64) -> u32 {
    a.unsigned_abs().trailing_zeros()
}

fn even(x: i64) -> bool {
    x % 2 == 0
}

fn one(_: &Params) -> Integer {
    Integer::one()
}

fn stern_index(p: &Params) -> u64 {
    (p.k << p.m) + p.b
}

fn require(cond: bool, msg: &str) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

fn rhs_stern(p: &Params) -> Integer {
    tmk(p)
}

fn rhs_eq12(p: &Params) -> Integer {
    let b = z(p.b as i64);
    let t = tmk(p);
    &t * (z(7) * (&b + 1) * (&b + 1) - 18 + &t * (z(7) - &b))
}

fn rhs_eq15_even_a(p: &Params) -> Integer {
    let (a, b) = (z(p.a), z(p.b as i64));
    let a3 = pw(p.a, 3);
    let t = tmk(p);
    &t * (&a3 * ((&b - 1) * (&b - 1) + 5) - &a + &t * &a3 * (&b - 1))
}

fn rhs_eq15_odd_a_even_b(p: &Params) -> Integer {
    let (a, b) = (z(p.a), z(p.b as i64));
    let t = tmk(p);
    &t * &a * ((&b + 1) * (&b + 1) + 4 - &t * (&b + 1))
}

fn rhs_eq15_odd_ab(p: &Params) -> Integer {
    tmk(p) * (pw(p.a, 2) - 1)
}

fn rhs_thm21(p: &Params) -> Integer {
    let (a, b) = (z(p.a), z(p.b as i64));
    let (a3, a5) = (pw(p.a, 3), pw(p.a, 5));
    let b2 = &b * &b;
    let t = tmk(p);
    if even(p.b as i64) {
        let inner = z(9) * &a3 * &b2 - (z(2) * &a3 - z(128) * &a) * &b + z(86) * &a3 - z(257) * &a
            + &t * &a3 * (&b - 1);
        &t * inner
    } else {
        // Final display of the odd-b computation:
        // 2^(m-1)k{16a^5 b - 4a^5 - 4a^5 b^2 + 2a^3 b^2 - 2a - 12a^7(b-1) + 176a^3 - 32a^5
        //          + (2^(m+1)k - 4)a^3(b+1) + 2^(m+2)k(-33a^3)}
        let a7 = pw(p.a, 7);
        let half = two_pow(p.m - 1) * p.k;
        let inner = z(16) * &a5 * &b - z(4) * &a5 - z(4) * &a5 * &b2 + z(2) * &a3 * &b2 - z(2) * &a
            - z(12) * &a7 * (&b - 1)
            + z(176) * &a3
            - z(32) * &a5
            + (two_pow(p.m + 1) * p.k - 4) * &a3 * (&b + 1)
            + two_pow(p.m + 2) * p.k * z(-33) * &a3;
        half * inner
    }
}

/// The odd-`b` polynomial of the statement, with its braces closed after
/// `2^m k a^3 (b-1)`.
pub fn thm21_odd_b_statement_rhs(a: i64, b: u64, k: u64, m: u32) -> Integer {
    let p = Params { a, b, k, m };
    let (a, b) = (z(p.a), z(p.b as i64));
    let (a3, a5) = (pw(p.a, 3), pw(p.a, 5));
    let t = tmk(&p);
    let inner = (&a3 - z(2) * &a5) * &b * &b + (z(30) * &a3 + z(128) * &a) * &b - z(2) * &a5 + z(86) * &a3
        + z(127) * &a
        + &t * &a3 * (&b - 1);
    t * inner
}

fn rhs_thm22(p: &Params) -> Integer {
    let (a, b) = (z(p.a), z(p.b as i64));
    let bp = |e: u32| pw(p.b as i64, e);
    let (a2, a3, a4) = (pw(p.a, 2), pw(p.a, 3), pw(p.a, 4));
    let t = tmk(p);
    let inner = z(7) * &a * bp(6) - z(6) * &a * bp(5) + (z(3) * &a3 - z(14) * &a) * bp(4)
        + (z(4) * &a3 + z(56) * &a) * bp(3)
        - (z(6) * &a4 + z(35) * &a3 - z(12) * &a2 + z(106) * &a - 122) * bp(2)
        + (z(38) * &a3 - z(8) * &a - 256) * &b
        + (z(70) * &a3 + z(64) * &a2 - z(81) * &a + 448)
        + &t * (bp(4) + z(2) * bp(3) + z(2) * &a * bp(2) + (&a3 + z(2) * &a) * &b + 16 - &a3);
    t * inner
}

fn rhs_cor21(p: &Params) -> Integer {
    let bp = |e: u32| pw(p.b as i64, e);
    let t = tmk(p);
    let inner = z(7) * bp(6) - z(6) * bp(5) - z(11) * bp(4) + z(60) * bp(3) - z(13) * bp(2) - z(226) * bp(1) + 501
        + &t * (bp(4) + z(2) * bp(3) + z(2) * bp(2) + z(3) * bp(1) + 15);
    t * inner
}

fn thm23_core(p: &Params) -> Integer {
    let (a, b) = (z(p.a), z(p.b as i64));
    let ap = |e: u32| pw(p.a, e);
    (z(17) * ap(7) + z(162) * ap(5) + z(153) * ap(3) + z(64) * ap(2) + z(180) * &a + 192) * &b * &b
        - (z(102) * ap(7) + z(216) * ap(5) + z(386) * ap(3) - z(704) * &a) * &b
        - (z(211) * ap(7) - z(10) * ap(5) - z(32) * ap(4) + z(66) * ap(3) - z(267) * &a - 224)
}

fn rhs_thm23_as_stated(p: &Params) -> Integer {
    tmk(p) * (thm23_core(p) + two_pow(p.m + 1) * (pw(p.a, 2) - 1))
}

/// Closing term in the expanded form:
/// `2^(m+2) k a(1-a^2)` inside the `2^(m-1) k {...}` braces.
fn rhs_thm23_proof_variant(p: &Params) -> Integer {
    let last = two_pow(p.m - 1) * p.k * two_pow(p.m + 2) * p.k * z(p.a) * (z(1) - pw(p.a, 2));
    tmk(p) * thm23_core(p) + last
}

fn phi_index(prime: u64, p: &Params) -> u64 {
    p.k * prime.pow(p.m - 1) * (prime - 1) + p.b
}

fn u_index5(p: &Params) -> u64 {
    phi_index(5, p)
}

fn u_index3(p: &Params) -> u64 {
    phi_index(3, p)
}

fn horner(coeffs: &[i64], x: i64) -> Integer {
    coeffs.iter().rev().fold(Integer::zero(), |acc, &c| acc * x + c)
}

fn five_prefix(p: &Params) -> Integer {
    pow_int(5, p.m - 1) * p.k
}

fn rhs_thm31(p: &Params) -> Integer {
    let c: &[i64] = if p.b % 4 == 0 {
        &[7545, 5050, -5375, 1250, 3125, 9375]
    } else {
        &[-1575, 5350, 2250, 7500, 0, 3125]
    };
    five_prefix(p) * horner(c, p.b as i64)
}

fn rhs_thm41(p: &Params) -> Integer {
    let c: &[i64] = if p.b % 4 == 0 {
        &[3130, -4000, 3375, 3125, -3125]
    } else {
        &[4790, 0, 1750, 3125, 6250]
    };
    five_prefix(p) * horner(c, p.b as i64)
}

fn rhs_thm51(p: &Params) -> Integer {
    let c: &[i64] = if p.b % 2 == 0 {
        &[-495, 1350, 567, -162, 972, -729]
    } else {
        &[1422, 1242, -891, -81, 243, 729]
    };
    pow_int(3, p.m - 2) * p.k * horner(c, p.b as i64)
}

fn rhs_thm61(p: &Params) -> Integer {
    let c: &[i64] = match p.b % 4 {
        0 => &[930, -4875, -4625, -6250, -3125],
        1 => &[4670, 1450, 1250, 6250, 3125, 6250],
        2 => &[-4235, 3700, -3000, 6250, -9375, 6250],
        _ => &[3725, -1025, -2625, 6250, 0, 3125],
    };
    five_prefix(p) * horner(c, p.b as i64)
}

fn one_plus_5b(p: &Params) -> Integer {
    pow_int(5, p.b as u32) + 1
}

fn one_minus_5b(p: &Params) -> Integer {
    z(1) - pow_int(5, p.b as u32)
}

fn one_minus_neg3b(p: &Params) -> Integer {
    z(1) - pow_int(-3, p.b as u32)
}

/// All registered claims, in a fixed order.
pub fn claim_registry() -> &'static [CongruenceClaim] {
    const M_PLUS_10: fn(&Params) -> u32 = |p| p.m + 10;
    const M_PLUS_5: fn(&Params) -> u32 = |p| p.m + 5;
    static REGISTRY: &[CongruenceClaim] = &[
        CongruenceClaim {
            id: "stern-1.1",
            summary: "E_{2^m k+b} = E_b + 2^m k (mod 2^(m+1)), b even",
            p: 2,
            sequence: ClaimSequence::Euler,
            domain: |p| require(p.b % 2 == 0, "b must be even"),
            modulus_exponent: |p| p.m + 1,
            lhs_index: stern_index,
            base_factor: one,
            rhs: rhs_stern,
        },
        CongruenceClaim {
            id: "eq-1.2",
            summary: "E_{2^m k+b} - E_b mod 2^(m+7), b even, m >= 3",
            p: 2,
            sequence: ClaimSequence::Euler,
            domain: |p| {
                require(p.b % 2 == 0, "b must be even")?;
                require(p.m >= 3, "m must be at least 3")
            },
            modulus_exponent: |p| p.m + 7,
            lhs_index: stern_index,
            base_factor: one,
            rhs: rhs_eq12,
        },
        CongruenceClaim {
            id: "eq-1.5-even-a",
            summary: "E^(a)_{2^m k+b} - E^(a)_b mod 2^(m+4+3 ord_2 a), a even",
            p: 2,
            sequence: ClaimSequence::GenEuler,
            domain: |p| require(even(p.a), "a must be even"),
            modulus_exponent: |p| p.m + 4 + 3 * ord2(p.a),
            lhs_index: stern_index,
            base_factor: one,
            rhs: rhs_eq15_even_a,
        },
        CongruenceClaim {
            id: "eq-1.5-odd-a-even-b",
            summary: "E^(a)_{2^m k+b} - E^(a)_b mod 2^(m+4), a odd, b even",
            p: 2,
            sequence: ClaimSequence::GenEuler,
            domain: |p| {
                require(!even(p.a), "a must be odd")?;
                require(p.b % 2 == 0, "b must be even")
            },
            modulus_exponent: |p| p.m + 4,
            lhs_index: stern_index,
            base_factor: one,
            rhs: rhs_eq15_odd_a_even_b,
        },
        CongruenceClaim {
            id: "eq-1.5-odd-ab",
            summary: "E^(a)_{2^m k+b} - E^(a)_b mod 2^(m+4), a and b odd",
            p: 2,
            sequence: ClaimSequence::GenEuler,
            domain: |p| {
                require(!even(p.a), "a must be odd")?;
                require(p.b % 2 == 1, "b must be odd")
            },
            modulus_exponent: |p| p.m + 4,
            lhs_index: stern_index,
            base_factor: one,
            rhs: rhs_eq15_odd_ab,
        },
        CongruenceClaim {
            id: "thm-2.1",
            summary: "E^(a)_{2^m k+b} - E^(a)_b mod 2^(m+10), a even, m >= 4 (odd b in the expanded 2^(m-1)k form)",
            p: 2,
            sequence: ClaimSequence::GenEuler,
            domain: |p| {
                require(even(p.a), "a must be even")?;
                require(p.m >= 4, "m must be at least 4")
            },
            modulus_exponent: M_PLUS_10,
            lhs_index: stern_index,
            base_factor: one,
            rhs: rhs_thm21,
        },
        CongruenceClaim {
            id: "thm-2.2",
            summary: "E^(a)_{2^m k+b} - E^(a)_b mod 2^(m+10), a odd, b even, m >= 5",
            p: 2,
            sequence: ClaimSequence::GenEuler,
            domain: |p| {
                require(!even(p.a), "a must be odd")?;
                require(p.b % 2 == 0, "b must be even")?;
                require(p.m >= 5, "m must be at least 5")
            },
            modulus_exponent: M_PLUS_10,
            lhs_index: stern_index,
            base_factor: one,
            rhs: rhs_thm22,
        },
        CongruenceClaim {
            id: "cor-2.1",
            summary: "E_{2^m k+b} - E_b mod 2^(m+10), b even, m >= 5",
            p: 2,
            sequence: ClaimSequence::Euler,
            domain: |p| {
                require(p.b % 2 == 0, "b must be even")?;
                require(p.m >= 5, "m must be at least 5")
            },
            modulus_exponent: M_PLUS_10,
            lhs_index: stern_index,
            base_factor: one,
            rhs: rhs_cor21,
        },
        CongruenceClaim {
            id: "thm-2.3-as-stated",
            summary: "E^(a)_{2^m k+b} - E^(a)_b mod 2^(m+10), a, b odd, m >= 5, closing term +2^(m+1)(a^2-1)",
            p: 2,
            sequence: ClaimSequence::GenEuler,
            domain: |p| {
                require(!even(p.a), "a must be odd")?;
                require(p.b % 2 == 1, "b must be odd")?;
                require(p.m >= 5, "m must be at least 5")
            },
            modulus_exponent: M_PLUS_10,
            lhs_index: stern_index,
            base_factor: one,
            rhs: rhs_thm23_as_stated,
        },
        CongruenceClaim {
            id: "thm-2.3-proof-variant",
            summary: "as thm-2.3-as-stated, closing term 2^(m-1)k * 2^(m+2)k a(1-a^2)",
            p: 2,
            sequence: ClaimSequence::GenEuler,
            domain: |p| {
                require(!even(p.a), "a must be odd")?;
                require(p.b % 2 == 1, "b must be odd")?;
                require(p.m >= 5, "m must be at least 5")
            },
            modulus_exponent: M_PLUS_10,
            lhs_index: stern_index,
            base_factor: one,
            rhs: rhs_thm23_proof_variant,
        },
        CongruenceClaim {
            id: "thm-3.1",
            summary: "U_{k phi(5^m)+b} - (1+5^b) U_b mod 5^(m+5), b even, m >= 5",
            p: 5,
            sequence: ClaimSequence::U,
            domain: |p| {
                require(p.b % 2 == 0, "b must be even")?;
                require(p.m >= 5, "m must be at least 5")
            },
            modulus_exponent: M_PLUS_5,
            lhs_index: u_index5,
            base_factor: one_plus_5b,
            rhs: rhs_thm31,
        },
        CongruenceClaim {
            id: "thm-4.1",
            summary: "E_{k phi(5^m)+b} - (1-5^b) E_b mod 5^(m+5), b even, m >= 5",
            p: 5,
            sequence: ClaimSequence::Euler,
            domain: |p| {
                require(p.b % 2 == 0, "b must be even")?;
                require(p.m >= 5, "m must be at least 5")
            },
            modulus_exponent: M_PLUS_5,
            lhs_index: u_index5,
            base_factor: one_minus_5b,
            rhs: rhs_thm41,
        },
        CongruenceClaim {
            id: "thm-5.1",
            summary: "S_{k phi(3^m)+b} - (1-(-3)^b) S_b mod 3^(m+5), m >= 5",
            p: 3,
            sequence: ClaimSequence::S,
            domain: |p| require(p.m >= 5, "m must be at least 5"),
            modulus_exponent: M_PLUS_5,
            lhs_index: u_index3,
            base_factor: one_minus_neg3b,
            rhs: rhs_thm51,
        },
        CongruenceClaim {
            id: "thm-6.1",
            summary: "S_{k phi(5^m)+b} - (1+5^b) S_b mod 5^(m+5), b >= 1, m >= 5",
            p: 5,
            sequence: ClaimSequence::S,
            domain: |p| {
                require(p.b >= 1, "b must be positive (use thm-6.1-b0 for b = 0)")?;
                require(p.m >= 5, "m must be at least 5")
            },
            modulus_exponent: M_PLUS_5,
            lhs_index: u_index5,
            base_factor: one_plus_5b,
            rhs: rhs_thm61,
        },
        CongruenceClaim {
            id: "thm-6.1-b0",
            summary: "thm-6.1's 4|b case evaluated at b = 0, outside the stated hypotheses",
            p: 5,
            sequence: ClaimSequence::S,
            domain: |p| {
                require(p.b == 0, "only b = 0")?;
                require(p.m >= 5, "m must be at least 5")
            },
            modulus_exponent: M_PLUS_5,
            lhs_index: u_index5,
            base_factor: one_plus_5b,
            rhs: rhs_thm61,
        },
    ];
    REGISTRY
}

pub fn find_claim(id: &str) -> Result<&'static CongruenceClaim> {
    claim_registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}
