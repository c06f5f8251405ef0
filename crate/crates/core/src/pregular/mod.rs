//! p-regular functions: alternating difference tables, the Stirling-number
//! interpolation of `f(k)` mod `p^n`, and the six-term evaluation of
//! `f(p^(m-1) k)` mod `p^(m+5)`.

mod lemmas;

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

pub use lemmas::{lemma_polynomial, reproduce_lemma, verify_theorem, LemmaId};

use crate::error::{Error, Result};
use crate::exactmath::{
    binomial, exact_div_pow, factorial, ord_p, pow_int, rational_residue, stirling1_row, Integer, ModulusContext,
    Rational, Residue,
};
use crate::report::{Instance, VerificationReport};
use crate::sequences::{generate, Mode, SequenceId};

/// `phi(p^m) = p^(m-1) (p-1)`.
pub fn phi(p: u32, m: u32) -> u64 {
    assert!(m >= 1, "phi(p^m) needs m >= 1");
    (p as u64).pow(m - 1) * (p as u64 - 1)
}

/// The four built-in families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `(1 + 5^(4k+b)) U_{4k+b}`, b even.
    U,
    /// `(1 - 5^(4k+b)) E_{4k+b}`, b even.
    E,
    /// `(1 + 5^(4k+b)) S_{4k+b}`.
    S5,
    /// `(1 - (-1)^b 3^(2k+b)) S_{2k+b}`.
    S3,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::U, Family::E, Family::S5, Family::S3];

    pub fn p(self) -> u32 {
        match self {
            Family::S3 => 3,
            _ => 5,
        }
    }

    /// Index stride `p - 1`.
    pub fn period(self) -> u64 {
        self.p() as u64 - 1
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::U => "U",
            Family::E => "E",
            Family::S5 => "S5",
            Family::S3 => "S3",
        }
    }

    fn sequence(self) -> SequenceId {
        match self {
            Family::U => SequenceId::U,
            Family::E => SequenceId::Euler,
            Family::S5 | Family::S3 => SequenceId::S,
        }
    }

    /// Admissible base residues `b mod period`.
    pub fn base_residues(self) -> &'static [u64] {
        match self {
            Family::U | Family::E => &[0, 2],
            Family::S5 => &[0, 1, 2, 3],
            Family::S3 => &[0, 1],
        }
    }

    pub fn check_b(self, b: u64) -> Result<()> {
        if matches!(self, Family::U | Family::E) && b % 2 == 1 {
            return Err(Error::Parameter(format!(
                "family {} vanishes at odd indices; b must be even",
                self.name()
            )));
        }
        Ok(())
    }

    /// `(sign, base)` with the prefactor `1 + sign * base^index`.
    fn prefactor(self, b: u64) -> (i64, i64) {
        match self {
            Family::U | Family::S5 => (1, 5),
            Family::E => (-1, 5),
            Family::S3 => (if b % 2 == 0 { -1 } else { 1 }, 3),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "U" => Ok(Family::U),
            "E" => Ok(Family::E),
            "S5" => Ok(Family::S5),
            "S3" => Ok(Family::S3),
            _ => Err(Error::Parse(format!("unknown family `{s}`; expected U, E, S5 or S3"))),
        }
    }
}

type Evaluator = Arc<dyn Fn(u64) -> Rational + Send + Sync>;

#[derive(Clone)]
enum Kind {
    Builtin { family: Family, b: u64 },
    Custom(Evaluator),
}

/// A function `N -> Z_p` given either by a built-in family or a closure.
#[derive(Clone)]
pub struct PAdicFunction {
    p: u32,
    label: String,
    kind: Kind,
}

impl fmt::Debug for PAdicFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PAdicFunction").field("p", &self.p).field("label", &self.label).finish_non_exhaustive()
    }
}

impl PAdicFunction {
    pub fn builtin(family: Family, b: u64) -> Result<Self> {
        family.check_b(b)?;
        Ok(Self { p: family.p(), label: format!("f_{}(b={b})", family.name()), kind: Kind::Builtin { family, b } })
    }

    pub fn custom(p: u32, label: impl Into<String>, f: impl Fn(u64) -> Rational + Send + Sync + 'static) -> Result<Self> {
        ModulusContext::new(p, 1)?;
        Ok(Self { p, label: label.into(), kind: Kind::Custom(Arc::new(f)) })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn family(&self) -> Option<(Family, u64)> {
        match self.kind {
            Kind::Builtin { family, b } => Some((family, b)),
            Kind::Custom(_) => None,
        }
    }

    fn not_p_integral(&self, k: u64, v: &Rational) -> Error {
        Error::NotPAdicInteger { value: format!("{}({k}) = {v}", self.label), p: self.p }
    }

    /// Exact `f(0), ..., f(k_max)`.
    pub fn values(&self, k_max: u64) -> Result<Vec<Rational>> {
        let out: Vec<Rational> = match &self.kind {
            Kind::Builtin { family, b } => {
                let last = family.period() * k_max + b;
                let table = generate(&family.sequence(), last as usize, &Mode::Exact)?;
                let (sign, base) = family.prefactor(*b);
                (0..=k_max)
                    .map(|k| {
                        let idx = family.period() * k + b;
                        let factor = pow_int(base, idx as u32) * sign + 1;
                        Rational::from_integer(factor * table.integer(idx as usize).expect("in range"))
                    })
                    .collect()
            }
            Kind::Custom(f) => (0..=k_max).map(|k| f(k)).collect(),
        };
        for (k, v) in out.iter().enumerate() {
            if v.denom() % self.p == Integer::zero() {
                return Err(self.not_p_integral(k as u64, v));
            }
        }
        Ok(out)
    }

    /// `f(k)` mod `ctx` for each `k`, using one modular sequence table.
    pub fn values_mod(&self, ks: &[u64], ctx: &ModulusContext) -> Result<Vec<Residue>> {
        if ctx.p() != self.p {
            return Err(Error::Parameter(format!("{} lives over p = {}, not {}", self.label, self.p, ctx.p())));
        }
        match &self.kind {
            Kind::Builtin { family, b } => {
                let Some(&k_max) = ks.iter().max() else { return Ok(Vec::new()) };
                let last = family.period() * k_max + b;
                let table = generate(&family.sequence(), last as usize, &Mode::Modular(*ctx))?;
                let values = table.residues();
                let (sign, base) = family.prefactor(*b);
                Ok(ks
                    .iter()
                    .map(|&k| {
                        let idx = family.period() * k + b;
                        let power = ctx.pow(base as u64, idx);
                        let factor = if sign > 0 { ctx.add(1, power) } else { ctx.sub(1, power) };
                        Residue { ctx: *ctx, value: ctx.mul(factor, values[idx as usize]) }
                    })
                    .collect())
            }
            Kind::Custom(f) => ks
                .iter()
                .map(|&k| {
                    let v = f(k);
                    rational_residue(&v, ctx).map_err(|_| self.not_p_integral(k, &v))
                })
                .collect(),
        }
    }
}

/// `sum_{r=0}^n C(n,r) (-1)^r f(r)` for `n = 0..=n_max`, exactly.
fn alternating_sums(values: &[Rational], n_max: usize) -> Vec<Rational> {
    (0..=n_max)
        .map(|n| {
            (0..=n).fold(Rational::zero(), |acc, r| {
                let c = binomial(n as u64, r as i64);
                let term = &values[r] * Rational::from_integer(if r % 2 == 0 { c } else { -c });
                acc + term
            })
        })
        .collect()
}

/// Exact `A_0..A_{m_max}`; fails if some `p^m` does not divide the m-th sum.
fn differences_exact(f: &PAdicFunction, m_max: u32) -> Result<Vec<Rational>> {
    let values = f.values(m_max as u64)?;
    alternating_sums(&values, m_max as usize)
        .into_iter()
        .enumerate()
        .map(|(m, sum)| {
            let numer = exact_div_pow(sum.numer(), f.p, m as u32)?;
            Ok(Rational::new(numer, sum.denom().clone()))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceTable {
    pub label: String,
    pub ctx: ModulusContext,
    /// `A_m = p^-m sum_{r<=m} C(m,r) (-1)^r f(r)`.
    pub a: Vec<Residue>,
}

/// `A_0..A_{m_max}` reduced mod `ctx`. The divisions by `p^m` are carried out
/// on exact integers before any reduction.
pub fn difference_table(f: &PAdicFunction, m_max: u32, ctx: &ModulusContext) -> Result<DifferenceTable> {
    if ctx.p() != f.p {
        return Err(Error::Parameter(format!("{} lives over p = {}, not {}", f.label, f.p, ctx.p())));
    }
    let a = differences_exact(f, m_max)?
        .iter()
        .map(|x| rational_residue(x, ctx))
        .collect::<Result<_>>()?;
    Ok(DifferenceTable { label: f.label.clone(), ctx: *ctx, a })
}

/// One level of the p-regularity test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegularityLevel {
    pub n: u32,
    /// `ord_p` of the n-th alternating sum; `None` when the sum vanishes.
    pub valuation: Option<u32>,
    pub pass: bool,
}

/// For `n = 1..=n_max`, checks `ord_p(sum_k C(n,k)(-1)^k f(k)) >= n`.
pub fn check_pregular(f: &PAdicFunction, n_max: u32) -> Result<Vec<RegularityLevel>> {
    let values = f.values(n_max as u64)?;
    let sums = alternating_sums(&values, n_max as usize);
    (1..=n_max)
        .map(|n| {
            let sum = &sums[n as usize];
            let valuation = if sum.is_zero() { None } else { Some(ord_p(f.p, sum.numer())?) };
            Ok(RegularityLevel { n, valuation, pass: valuation.is_none_or(|v| v >= n) })
        })
        .collect()
}

/// Coefficients `a_0..a_{n-1}` with `f(k) = sum a_i k^i (mod p^n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterpolationResult {
    pub label: String,
    pub n: u32,
    pub ctx: ModulusContext,
    pub coeffs: Vec<Residue>,
}

impl InterpolationResult {
    pub fn eval(&self, k: &Integer) -> Residue {
        let x = self.ctx.reduce(k);
        let value = self.coeffs.iter().rev().fold(0, |acc, c| self.ctx.add(self.ctx.mul(acc, x), c.value));
        Residue { ctx: self.ctx, value }
    }
}

impl fmt::Display for InterpolationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .map(|(i, c)| match i {
                0 => c.value.to_string(),
                1 => format!("{}*k", c.value),
                _ => format!("{}*k^{i}", c.value),
            })
            .collect();
        write!(f, "{} (mod {})", terms.join(" + "), self.ctx)
    }
}

/// `a_i = (-1)^i sum_{r=i}^{n-1} s(r,i) (p^r / r!) A_r`, each coefficient
/// summed over the rationals and reduced mod `p^n` at the end.
pub fn interpolate(f: &PAdicFunction, n: u32) -> Result<InterpolationResult> {
    if n == 0 {
        return Err(Error::Parameter("interpolation needs n >= 1".into()));
    }
    let ctx = ModulusContext::new(f.p, n)?;
    let a = differences_exact(f, n - 1)?;
    let weights: Vec<Rational> = (0..n as usize)
        .map(|r| Rational::new(pow_int(f.p as i64, r as u32), factorial(r as u64)) * &a[r])
        .collect();
    let rows: Vec<Vec<Integer>> = (0..n as usize).map(stirling1_row).collect();
    let coeffs = (0..n as usize)
        .map(|i| {
            let sum = (i..n as usize).fold(Rational::zero(), |acc, r| {
                acc + Rational::from_integer(rows[r][i].clone()) * &weights[r]
            });
            let signed = if i % 2 == 0 { sum } else { -sum };
            rational_residue(&signed, &ctx)
        })
        .collect::<Result<_>>()?;
    Ok(InterpolationResult { label: f.label.clone(), n, ctx, coeffs })
}

/// `f(0) - p^(m-1) k sum_{s=1}^6 (1/s) sum_r C(s,r) (-1)^r f(r)`, exactly.
///
/// The inner alternating sum carries `(-1)^r`, as in the expansion
/// `C(p^(m-1)k, s) = (-1)^(s-1) p^(m-1)k / s`; the variant with `(-1)^(s-r)`
/// differs by `(-1)^s` in each term and does not hold.
pub fn lemma32_rhs(f: &PAdicFunction, m: u32, k: u64) -> Result<Rational> {
    lemma32_rhs_signed(f, m, k, false)
}

fn lemma32_rhs_signed(f: &PAdicFunction, m: u32, k: u64, sign_s_minus_r: bool) -> Result<Rational> {
    let values = f.values(6)?;
    let sums = alternating_sums(&values, 6);
    let inner = (1..=6usize).fold(Rational::zero(), |acc, s| {
        let term = if sign_s_minus_r && s % 2 == 1 { -sums[s].clone() } else { sums[s].clone() };
        acc + term / Rational::from_integer(Integer::from(s))
    });
    let prefix = Rational::from_integer(pow_int(f.p as i64, m - 1) * k);
    Ok(&values[0] - prefix * inner)
}

/// Checks `f(p^(m-1) k)` against [`lemma32_rhs`] mod `p^(m+5)` for every
/// `(m, k)`, using one modular table at the largest index and exponent.
pub fn lemma32_checks(f: &PAdicFunction, points: &[(u32, u64)]) -> Result<Vec<VerificationReport>> {
    if !matches!(f.p, 3 | 5) {
        return Err(Error::Parameter("the six-term evaluation needs p in {3, 5}".into()));
    }
    if let Some(&(m, k)) = points.iter().find(|&&(m, k)| m < 5 || k == 0) {
        return Err(Error::Parameter(format!("need m >= 5 and k >= 1, got m = {m}, k = {k}")));
    }
    let Some(e_max) = points.iter().map(|&(m, _)| m + 5).max() else { return Ok(Vec::new()) };
    let big = ModulusContext::new(f.p, e_max)?;
    let ks: Vec<u64> = points.iter().map(|&(m, k)| (f.p as u64).pow(m - 1) * k).collect();
    let lhs = f.values_mod(&ks, &big)?;
    let claim = format!("lemma-3.2/{}", f.label);
    points
        .iter()
        .zip(lhs)
        .map(|(&(m, k), l)| {
            let ctx = ModulusContext::new(f.p, m + 5)?;
            let rhs = rational_residue(&lemma32_rhs(f, m, k)?, &ctx)?;
            let lhs = Residue { ctx, value: l.value % ctx.modulus() };
            let b = f.family().map(|(_, b)| b);
            let inst = Instance { b, k: Some(k), m: Some(m), ..Default::default() };
            Ok(VerificationReport::compare_residues(&claim, inst, lhs, rhs))
        })
        .collect()
}

pub fn lemma32_check(f: &PAdicFunction, m: u32, k: u64) -> Result<VerificationReport> {
    Ok(lemma32_checks(f, &[(m, k)])?.remove(0))
}

/// `true` when every level passes.
pub fn is_regular_up_to(f: &PAdicFunction, n_max: u32) -> Result<bool> {
    Ok(check_pregular(f, n_max)?.iter().all(|l| l.pass))
}
