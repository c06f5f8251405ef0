//! Euler numbers, generalized Euler numbers `E_n^(a)`, and the companion
//! sequences `U_n` and `S_n`, in exact, modular and symbolic modes.
//!
//! Every table is built by its defining O(n^2) recurrence over a Pascal row
//! that is extended by additions only, so the same code runs over integers,
//! rationals, residues mod `p^e` and polynomials in `a`.

mod cache;
mod poly;

use std::fmt;

use num_traits::{One, Zero};

pub use cache::{cache_load, cache_store, TableCache};
pub use poly::PolyZ;

use crate::error::{Error, Result};
use crate::exactmath::{binomial, rational_residue, Integer, ModulusContext, Rational, Residue};

/// Which sequence a table holds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SequenceId {
    Euler,
    GenEuler(Rational),
    /// `E_n^(a)` with `a` kept as a symbol.
    GenEulerSymbolic,
    U,
    S,
}

impl SequenceId {
    pub fn gen_euler(a: Rational) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::Parameter("E^(a) requires a != 0".into()));
        }
        Ok(SequenceId::GenEuler(a))
    }

    /// Stable textual tag used in cache headers and file names.
    pub fn tag(&self) -> String {
        match self {
            SequenceId::Euler => "E".into(),
            SequenceId::GenEuler(a) => format!("Ea({a})"),
            SequenceId::GenEulerSymbolic => "Ea(sym)".into(),
            SequenceId::U => "U".into(),
            SequenceId::S => "S".into(),
        }
    }

    pub fn parse_tag(tag: &str) -> Result<Self> {
        match tag {
            "E" => Ok(SequenceId::Euler),
            "U" => Ok(SequenceId::U),
            "S" => Ok(SequenceId::S),
            "Ea(sym)" => Ok(SequenceId::GenEulerSymbolic),
            t => {
                let inner = t
                    .strip_prefix("Ea(")
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("unknown sequence tag `{t}`")))?;
                SequenceId::gen_euler(crate::exactmath::parse_rational(inner)?)
            }
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    Modular(ModulusContext),
    Symbolic,
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Modular(_) => "modular",
            Mode::Symbolic => "symbolic",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Values {
    Integer(Vec<Integer>),
    Rational(Vec<Rational>),
    Residue(Vec<u64>),
    Poly(Vec<PolyZ>),
}

impl Values {
    pub fn len(&self) -> usize {
        match self {
            Values::Integer(v) => v.len(),
            Values::Rational(v) => v.len(),
            Values::Residue(v) => v.len(),
            Values::Poly(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Values `0..=n_max` of one sequence in one mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceTable {
    pub id: SequenceId,
    pub mode: Mode,
    pub values: Values,
}

impl SequenceTable {
    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn integer(&self, n: usize) -> Option<&Integer> {
        match &self.values {
            Values::Integer(v) => v.get(n),
            _ => None,
        }
    }

    /// Exact value as a rational, for either exact representation.
    pub fn rational(&self, n: usize) -> Option<Rational> {
        match &self.values {
            Values::Integer(v) => v.get(n).map(|x| Rational::from_integer(x.clone())),
            Values::Rational(v) => v.get(n).cloned(),
            _ => None,
        }
    }

    pub fn residue(&self, n: usize) -> Option<Residue> {
        match (&self.values, self.mode) {
            (Values::Residue(v), Mode::Modular(ctx)) => v.get(n).map(|&value| Residue { ctx, value }),
            _ => None,
        }
    }

    /// Raw residues; empty unless the table is modular.
    pub fn residues(&self) -> &[u64] {
        match &self.values {
            Values::Residue(v) => v,
            _ => &[],
        }
    }

    pub fn poly(&self, n: usize) -> Option<&PolyZ> {
        match &self.values {
            Values::Poly(v) => v.get(n),
            _ => None,
        }
    }

    pub fn value_string(&self, n: usize) -> Option<String> {
        match &self.values {
            Values::Integer(v) => v.get(n).map(|x| x.to_string()),
            Values::Rational(v) => v.get(n).map(|x| x.to_string()),
            Values::Residue(v) => v.get(n).map(|x| x.to_string()),
            Values::Poly(v) => v.get(n).map(|x| x.to_string()),
        }
    }

    /// Reduces a modular table to a smaller exponent of the same prime.
    pub fn reduce_to(&self, ctx: ModulusContext) -> Result<SequenceTable> {
        match (&self.values, self.mode) {
            (Values::Residue(v), Mode::Modular(own)) if own.p() == ctx.p() && own.e() >= ctx.e() => {
                Ok(SequenceTable {
                    id: self.id.clone(),
                    mode: Mode::Modular(ctx),
                    values: Values::Residue(v.iter().map(|x| x % ctx.modulus()).collect()),
                })
            }
            _ => Err(Error::Parameter(format!(
                "cannot reduce a {} table to {ctx}",
                self.mode.name()
            ))),
        }
    }

    pub fn truncate(&mut self, n_max: usize) {
        let keep = n_max + 1;
        match &mut self.values {
            Values::Integer(v) => v.truncate(keep),
            Values::Rational(v) => v.truncate(keep),
            Values::Residue(v) => v.truncate(keep),
            Values::Poly(v) => v.truncate(keep),
        }
    }
}

/// The operations the recurrences need from a coefficient ring.
trait Ring {
    type V: Clone;
    fn zero(&self) -> Self::V;
    fn one(&self) -> Self::V;
    fn add(&self, x: &Self::V, y: &Self::V) -> Self::V;
    fn sub(&self, x: &Self::V, y: &Self::V) -> Self::V;
    fn mul(&self, x: &Self::V, y: &Self::V) -> Self::V;
    fn int(&self, x: i64) -> Self::V;
}

struct IntRing;

impl Ring for IntRing {
    type V = Integer;
    fn zero(&self) -> Integer {
        Integer::zero()
    }
    fn one(&self) -> Integer {
        Integer::one()
    }
    fn add(&self, x: &Integer, y: &Integer) -> Integer {
        x + y
    }
    fn sub(&self, x: &Integer, y: &Integer) -> Integer {
        x - y
    }
    fn mul(&self, x: &Integer, y: &Integer) -> Integer {
        x * y
    }
    fn int(&self, x: i64) -> Integer {
        Integer::from(x)
    }
}

struct RatRing;

impl Ring for RatRing {
    type V = Rational;
    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, x: &Rational, y: &Rational) -> Rational {
        x + y
    }
    fn sub(&self, x: &Rational, y: &Rational) -> Rational {
        x - y
    }
    fn mul(&self, x: &Rational, y: &Rational) -> Rational {
        x * y
    }
    fn int(&self, x: i64) -> Rational {
        Rational::from_integer(x.into())
    }
}

struct ModRing(ModulusContext);

impl Ring for ModRing {
    type V = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0.modulus()
    }
    #[inline]
    fn add(&self, x: &u64, y: &u64) -> u64 {
        self.0.add(*x, *y)
    }
    #[inline]
    fn sub(&self, x: &u64, y: &u64) -> u64 {
        self.0.sub(*x, *y)
    }
    #[inline]
    fn mul(&self, x: &u64, y: &u64) -> u64 {
        self.0.mul(*x, *y)
    }
    fn int(&self, x: i64) -> u64 {
        self.0.reduce_i64(x)
    }
}

struct PolyRing;

impl Ring for PolyRing {
    type V = PolyZ;
    fn zero(&self) -> PolyZ {
        PolyZ::zero()
    }
    fn one(&self) -> PolyZ {
        PolyZ::one()
    }
    fn add(&self, x: &PolyZ, y: &PolyZ) -> PolyZ {
        x + y
    }
    fn sub(&self, x: &PolyZ, y: &PolyZ) -> PolyZ {
        x - y
    }
    fn mul(&self, x: &PolyZ, y: &PolyZ) -> PolyZ {
        x * y
    }
    fn int(&self, x: i64) -> PolyZ {
        PolyZ::constant(x.into())
    }
}

/// Pascal row over an arbitrary ring, extended by additions.
struct Row<'r, R: Ring> {
    ring: &'r R,
    row: Vec<R::V>,
}

impl<'r, R: Ring> Row<'r, R> {
    fn new(ring: &'r R) -> Self {
        Self { row: vec![ring.one()], ring }
    }

    fn advance(&mut self) {
        self.row.push(self.row[0].clone());
        for r in (1..self.row.len() - 1).rev() {
            self.row[r] = self.ring.add(&self.row[r], &self.row[r - 1]);
        }
    }
}

/// `E_0 = 1`, odd terms zero, `sum_r C(2n,2r) E_{2r} = 0`.
fn euler_generic<R: Ring>(ring: &R, n_max: usize) -> Vec<R::V> {
    let mut e = Vec::with_capacity(n_max + 1);
    e.push(ring.one());
    let mut row = Row::new(ring);
    for n in 1..=n_max {
        row.advance();
        if n % 2 == 1 {
            e.push(ring.zero());
            continue;
        }
        let mut acc = ring.zero();
        for r in (0..n).step_by(2) {
            acc = ring.add(&acc, &ring.mul(&row.row[r], &e[r]));
        }
        e.push(ring.sub(&ring.zero(), &acc));
    }
    e
}

/// Solves `sum_k C(n,2k) a^{2k} E_{n-2k} = (1-a)^n` for `E_n`.
fn gen_euler_generic<R: Ring>(ring: &R, a: &R::V, n_max: usize) -> Vec<R::V> {
    let a2 = ring.mul(a, a);
    let mut a2_pows = vec![ring.one()];
    for k in 1..=n_max / 2 {
        a2_pows.push(ring.mul(&a2_pows[k - 1], &a2));
    }
    let one_minus_a = ring.sub(&ring.one(), a);
    let mut rhs = ring.one();
    let mut e = Vec::with_capacity(n_max + 1);
    e.push(ring.one());
    let mut row = Row::new(ring);
    for n in 1..=n_max {
        row.advance();
        rhs = ring.mul(&rhs, &one_minus_a);
        let mut acc = ring.zero();
        for k in 1..=n / 2 {
            let term = ring.mul(&ring.mul(&row.row[2 * k], &a2_pows[k]), &e[n - 2 * k]);
            acc = ring.add(&acc, &term);
        }
        e.push(ring.sub(&rhs, &acc));
    }
    e
}

/// `U_0 = 1`, `U_n = -2 sum_{k>=1} C(n,2k) U_{n-2k}`.
fn u_generic<R: Ring>(ring: &R, n_max: usize) -> Vec<R::V> {
    let minus_two = ring.int(-2);
    let mut u = Vec::with_capacity(n_max + 1);
    u.push(ring.one());
    let mut row = Row::new(ring);
    for n in 1..=n_max {
        row.advance();
        let mut acc = ring.zero();
        for k in 1..=n / 2 {
            acc = ring.add(&acc, &ring.mul(&row.row[2 * k], &u[n - 2 * k]));
        }
        u.push(ring.mul(&minus_two, &acc));
    }
    u
}

/// `S_0 = 1`, `S_n = 1 - sum_{k<n} C(n,k) 2^{2n-2k-1} S_k`.
fn s_generic<R: Ring>(ring: &R, n_max: usize) -> Vec<R::V> {
    let two = ring.int(2);
    let mut pow2 = vec![ring.one()];
    for j in 1..2 * n_max.max(1) {
        pow2.push(ring.mul(&pow2[j - 1], &two));
    }
    let mut s = Vec::with_capacity(n_max + 1);
    s.push(ring.one());
    let mut row = Row::new(ring);
    for n in 1..=n_max {
        row.advance();
        let mut acc = ring.zero();
        for k in 0..n {
            let weighted = ring.mul(&pow2[2 * n - 2 * k - 1], &s[k]);
            acc = ring.add(&acc, &ring.mul(&row.row[k], &weighted));
        }
        s.push(ring.sub(&ring.one(), &acc));
    }
    s
}

fn check_a(a: &Rational) -> Result<()> {
    if a.is_zero() {
        return Err(Error::Parameter("E^(a) requires a != 0".into()));
    }
    Ok(())
}

pub fn euler_exact(n_max: usize) -> SequenceTable {
    SequenceTable {
        id: SequenceId::Euler,
        mode: Mode::Exact,
        values: Values::Integer(euler_generic(&IntRing, n_max)),
    }
}

pub fn euler(n_max: usize, mode: &Mode) -> Result<SequenceTable> {
    match *mode {
        Mode::Exact => Ok(euler_exact(n_max)),
        Mode::Modular(ctx) => Ok(SequenceTable {
            id: SequenceId::Euler,
            mode: *mode,
            values: Values::Residue(euler_generic(&ModRing(ctx), n_max)),
        }),
        Mode::Symbolic => Err(Error::Parameter("E has no symbolic mode".into())),
    }
}

/// `E_0^(a), ..., E_{n_max}^(a)` from the defining recurrence. Integer `a`
/// gives integer values, other rationals give rationals.
pub fn gen_euler_recurrence(a: &Rational, n_max: usize, mode: &Mode) -> Result<SequenceTable> {
    check_a(a)?;
    let id = SequenceId::GenEuler(a.clone());
    let values = match *mode {
        Mode::Exact if a.is_integer() => {
            Values::Integer(gen_euler_generic(&IntRing, &a.to_integer(), n_max))
        }
        Mode::Exact => Values::Rational(gen_euler_generic(&RatRing, a, n_max)),
        Mode::Modular(ctx) => {
            let a_res = rational_residue(a, &ctx)?;
            Values::Residue(gen_euler_generic(&ModRing(ctx), &a_res.value, n_max))
        }
        Mode::Symbolic => return Ok(gen_euler_symbolic(n_max)),
    };
    Ok(SequenceTable { id, mode: *mode, values })
}

/// `E_n^(a)` as polynomials in `a`, from the defining recurrence.
pub fn gen_euler_symbolic(n_max: usize) -> SequenceTable {
    SequenceTable {
        id: SequenceId::GenEulerSymbolic,
        mode: Mode::Symbolic,
        values: Values::Poly(gen_euler_generic(&PolyRing, &PolyZ::x(), n_max)),
    }
}

/// Closed form `E_n^(a) = sum_k C(n,2k) (1-a)^{n-2k} a^{2k} E_{2k}`.
pub fn gen_euler_direct(a: &Rational, n: usize) -> Result<Rational> {
    let euler = euler_exact(n);
    gen_euler_direct_with(euler.integer_slice(), a, n)
}

/// As [`gen_euler_direct`], reusing a precomputed Euler table.
pub fn gen_euler_direct_with(euler: &[Integer], a: &Rational, n: usize) -> Result<Rational> {
    check_a(a)?;
    let one_minus_a = Rational::one() - a;
    let a2 = a * a;
    let mut acc = Rational::zero();
    let mut a2k = Rational::one();
    for k in 0..=n / 2 {
        let c = binomial(n as u64, 2 * k as i64) * &euler[2 * k];
        acc += Rational::from_integer(c) * num_traits::pow(one_minus_a.clone(), n - 2 * k) * &a2k;
        a2k *= &a2;
    }
    Ok(acc)
}

/// `E_n^(a)` in `Z[a]` via the closed form.
pub fn gen_euler_poly(n: usize) -> PolyZ {
    let euler = euler_exact(n);
    let euler = euler.integer_slice();
    let one_minus_a = PolyZ::from_i64(&[1, -1]);
    let mut acc = PolyZ::zero();
    for k in 0..=n / 2 {
        let c = binomial(n as u64, 2 * k as i64) * &euler[2 * k];
        let term = &one_minus_a.pow((n - 2 * k) as u32) * &PolyZ::monomial(c, 2 * k);
        acc = &acc + &term;
    }
    acc
}

pub fn u_seq(n_max: usize, mode: &Mode) -> Result<SequenceTable> {
    let values = match *mode {
        Mode::Exact => Values::Integer(u_generic(&IntRing, n_max)),
        Mode::Modular(ctx) => Values::Residue(u_generic(&ModRing(ctx), n_max)),
        Mode::Symbolic => return Err(Error::Parameter("U has no symbolic mode".into())),
    };
    Ok(SequenceTable { id: SequenceId::U, mode: *mode, values })
}

pub fn s_seq(n_max: usize, mode: &Mode) -> Result<SequenceTable> {
    let values = match *mode {
        Mode::Exact => Values::Integer(s_generic(&IntRing, n_max)),
        Mode::Modular(ctx) => Values::Residue(s_generic(&ModRing(ctx), n_max)),
        Mode::Symbolic => return Err(Error::Parameter("S has no symbolic mode".into())),
    };
    Ok(SequenceTable { id: SequenceId::S, mode: *mode, values })
}

/// Builds any table by id and mode.
pub fn generate(id: &SequenceId, n_max: usize, mode: &Mode) -> Result<SequenceTable> {
    match id {
        SequenceId::Euler => euler(n_max, mode),
        SequenceId::GenEuler(a) => gen_euler_recurrence(a, n_max, mode),
        SequenceId::GenEulerSymbolic if *mode == Mode::Symbolic => Ok(gen_euler_symbolic(n_max)),
        SequenceId::GenEulerSymbolic => {
            Err(Error::Parameter("symbolic E^(a) requires symbolic mode".into()))
        }
        SequenceId::U => u_seq(n_max, mode),
        SequenceId::S => s_seq(n_max, mode),
    }
}

impl SequenceTable {
    /// Integer values; panics on any other representation.
    pub fn integer_slice(&self) -> &[Integer] {
        match &self.values {
            Values::Integer(v) => v,
            _ => panic!("{} table is not integer-valued", self.mode.name()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    /// Euler numbers from the secant series: sec x = 1 / cos x, computed by
    /// power-series inversion over the rationals, E_{2n} = (-1)^n (2n)! [x^{2n}] sec x.
    fn secant_oracle(n_max: usize) -> Vec<Integer> {
        let mut cos = vec![Rational::zero(); n_max + 1];
        let mut fact = Integer::one();
        for i in 0..=n_max {
            if i > 0 {
                fact *= i;
            }
            if i % 2 == 0 {
                let sign = if (i / 2) % 2 == 0 { 1 } else { -1 };
                cos[i] = Rational::new(Integer::from(sign), fact.clone());
            }
        }
        let mut sec = vec![Rational::zero(); n_max + 1];
        sec[0] = Rational::one();
        for i in 1..=n_max {
            let mut acc = Rational::zero();
            for j in 1..=i {
                acc += &cos[j] * &sec[i - j];
            }
            sec[i] = -acc;
        }
        let mut out = Vec::new();
        let mut fact = Integer::one();
        for (i, c) in sec.iter().enumerate() {
            if i > 0 {
                fact *= i;
            }
            let sign = if (i / 2) % 2 == 0 { 1 } else { -1 };
            let v = c * Rational::from_integer(fact.clone()) * Rational::from_integer(sign.into());
            assert!(v.is_integer());
            out.push(v.to_integer());
        }
        out
    }

    #[test]
    fn euler_examples() {
        let t = euler_exact(8);
        assert_eq!(t.integer_slice(), &ints(&[1, 0, -1, 0, 5, 0, -61, 0, 1385])[..]);
        assert_eq!(t.integer_slice(), &secant_oracle(8)[..]);
    }

    #[test]
    fn euler_matches_secant_series() {
        assert_eq!(euler_exact(40).integer_slice(), &secant_oracle(40)[..]);
    }

    #[test]
    fn gen_euler_examples() {
        let t = gen_euler_recurrence(&q(2, 1), 3, &Mode::Exact).unwrap();
        assert_eq!(t.integer(3), Some(&Integer::from(11)));
        let t = gen_euler_recurrence(&q(3, 2), 4, &Mode::Exact).unwrap();
        assert_eq!(t.rational(4), Some(q(22, 1)));
        let one = gen_euler_recurrence(&q(1, 1), 8, &Mode::Exact).unwrap();
        assert_eq!(one.integer_slice(), euler_exact(8).integer_slice());
        assert!(gen_euler_recurrence(&q(0, 1), 3, &Mode::Exact).is_err());
    }

    #[test]
    fn gen_euler_direct_examples() {
        assert_eq!(gen_euler_direct(&q(2, 1), 2).unwrap(), q(-3, 1));
        assert_eq!(gen_euler_direct(&q(-7, 3), 0).unwrap(), q(1, 1));
        assert_eq!(gen_euler_direct(&q(3, 1), 5).unwrap(), q(-3362, 1));
        assert!(gen_euler_direct(&q(0, 1), 5).is_err());
    }

    #[test]
    fn modular_rejects_non_unit_denominator() {
        let ctx = ModulusContext::new(2, 5).unwrap();
        let err = gen_euler_recurrence(&q(3, 2), 4, &Mode::Modular(ctx)).unwrap_err();
        assert!(matches!(err, Error::NotPAdicInteger { .. }));
        let ctx = ModulusContext::new(5, 3).unwrap();
        let t = gen_euler_recurrence(&q(3, 2), 4, &Mode::Modular(ctx)).unwrap();
        assert_eq!(t.residue(4).unwrap().value, 22);
    }

    #[test]
    fn poly_examples() {
        assert_eq!(gen_euler_poly(0), PolyZ::one());
        assert_eq!(gen_euler_poly(6), PolyZ::from_i64(&[1, -6, 0, 40, 0, -96]));
        assert_eq!(gen_euler_poly(8), PolyZ::from_i64(&[1, -8, 0, 112, 0, -896, 0, 2176]));
    }

    #[test]
    fn symbolic_recurrence_matches_closed_form() {
        let t = gen_euler_symbolic(16);
        for n in 0..=16 {
            assert_eq!(t.poly(n).unwrap(), &gen_euler_poly(n), "n = {n}");
        }
    }

    #[test]
    fn poly_has_no_even_powers_beyond_constant() {
        for n in 0..=8 {
            let p = gen_euler_poly(n);
            assert!(p.degree().unwrap() <= n);
            for i in (2..=n).step_by(2) {
                assert!(p.coeff(i).is_zero(), "n = {n}, power {i}");
            }
        }
    }

    #[test]
    fn u_and_s_examples() {
        let u = u_seq(4, &Mode::Exact).unwrap();
        assert_eq!(u.integer_slice(), &ints(&[1, 0, -2, 0, 22])[..]);
        let s = s_seq(3, &Mode::Exact).unwrap();
        assert_eq!(s.integer_slice(), &ints(&[1, -1, -3, 11])[..]);
        assert!(u_seq(3, &Mode::Symbolic).is_err());
    }

    #[test]
    fn u_vanishes_at_odd_indices() {
        let u = u_seq(201, &Mode::Exact).unwrap();
        for n in (1..=201).step_by(2) {
            assert!(u.integer(n).unwrap().is_zero());
        }
    }

    #[test]
    fn tags_round_trip() {
        for id in [
            SequenceId::Euler,
            SequenceId::U,
            SequenceId::S,
            SequenceId::GenEulerSymbolic,
            SequenceId::GenEuler(q(-3, 2)),
        ] {
            assert_eq!(SequenceId::parse_tag(&id.tag()).unwrap(), id);
        }
    }

    #[test]
    fn reduce_to_smaller_exponent() {
        let big = u_seq(30, &Mode::Modular(ModulusContext::new(5, 9).unwrap())).unwrap();
        let small_ctx = ModulusContext::new(5, 4).unwrap();
        assert_eq!(big.reduce_to(small_ctx).unwrap(), u_seq(30, &Mode::Modular(small_ctx)).unwrap());
        assert!(big.reduce_to(ModulusContext::new(3, 2).unwrap()).is_err());
    }
}
