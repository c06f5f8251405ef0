//! Exact integer and rational arithmetic, binomials, Stirling numbers and
//! prime-power residues.
//!
//! Everything here is a pure function of its inputs. Residues are always
//! kept canonical in `[0, p^e)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Largest modulus the word-sized residue engine accepts.
const MAX_MODULUS: u64 = 1 << 62;

/// The ring `Z / p^e Z` for a prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModulusContext {
    p: u32,
    e: u32,
    modulus: u64,
}

impl ModulusContext {
    pub fn new(p: u32, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidModulus { p, e, reason: "base is not prime" });
        }
        if e == 0 {
            return Err(Error::InvalidModulus { p, e, reason: "exponent must be at least 1" });
        }
        let mut modulus: u64 = 1;
        for _ in 0..e {
            modulus = match modulus.checked_mul(p as u64) {
                Some(m) if m < MAX_MODULUS => m,
                _ => {
                    return Err(Error::InvalidModulus { p, e, reason: "p^e exceeds 2^62" });
                }
            };
        }
        Ok(Self { p, e, modulus })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn modulus_integer(&self) -> Integer {
        Integer::from(self.modulus)
    }

    /// Same prime, different exponent.
    pub fn with_exponent(&self, e: u32) -> Result<Self> {
        Self::new(self.p, e)
    }

    #[inline]
    pub fn add(&self, x: u64, y: u64) -> u64 {
        let s = x + y;
        if s >= self.modulus {
            s - self.modulus
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, x: u64, y: u64) -> u64 {
        if x >= y {
            x - y
        } else {
            x + self.modulus - y
        }
    }

    #[inline]
    pub fn neg(&self, x: u64) -> u64 {
        if x == 0 {
            0
        } else {
            self.modulus - x
        }
    }

    #[inline]
    pub fn mul(&self, x: u64, y: u64) -> u64 {
        if self.modulus <= u32::MAX as u64 {
            (x * y) % self.modulus
        } else {
            ((x as u128 * y as u128) % self.modulus as u128) as u64
        }
    }

    pub fn pow(&self, base: u64, mut exp: u64) -> u64 {
        let mut result = 1 % self.modulus;
        let mut b = base % self.modulus;
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(result, b);
            }
            b = self.mul(b, b);
            exp >>= 1;
        }
        result
    }

    pub fn reduce_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.modulus as i64) as u64
    }

    pub fn reduce(&self, x: &Integer) -> u64 {
        x.mod_floor(&self.modulus_integer())
            .to_u64()
            .expect("canonical residue fits in a word")
    }

    pub fn residue(&self, x: &Integer) -> Residue {
        Residue { ctx: *self, value: self.reduce(x) }
    }

    /// Inverse of a unit, by the extended Euclidean algorithm.
    pub fn inverse(&self, x: u64) -> Option<u64> {
        let g = Integer::from(x).extended_gcd(&self.modulus_integer());
        if !g.gcd.is_one() {
            return None;
        }
        Some(self.reduce(&g.x))
    }
}

impl fmt::Display for ModulusContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.e)
    }
}

impl std::str::FromStr for ModulusContext {
    type Err = Error;

    /// Parses `p^e`.
    fn from_str(s: &str) -> Result<Self> {
        let (p, e) = s
            .split_once('^')
            .ok_or_else(|| Error::Parse(format!("modulus `{s}` is not of the form p^e")))?;
        let p = p.trim().parse().map_err(|_| Error::Parse(format!("bad prime in `{s}`")))?;
        let e = e.trim().parse().map_err(|_| Error::Parse(format!("bad exponent in `{s}`")))?;
        Self::new(p, e)
    }
}

/// A canonical representative in `[0, p^e)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    pub ctx: ModulusContext,
    pub value: u64,
}

impl Residue {
    pub fn new(ctx: ModulusContext, value: u64) -> Self {
        Self { ctx, value: value % ctx.modulus }
    }

    pub fn to_integer(&self) -> Integer {
        Integer::from(self.value)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Exact binomial coefficient; zero outside `0 <= r <= n`.
pub fn binomial(n: u64, r: i64) -> Integer {
    if r < 0 || r as u64 > n {
        return Integer::zero();
    }
    let r = (r as u64).min(n - r as u64);
    let mut acc = Integer::one();
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial coefficient with an arbitrary integer top, `C(x, r)` for `r >= 0`.
pub fn binomial_general(x: &Integer, r: u64) -> Integer {
    let mut num = Integer::one();
    let mut den = Integer::one();
    for i in 0..r {
        num *= x - Integer::from(i);
        den *= i + 1;
    }
    num / den
}

/// Row `n` of Pascal's triangle modulo `p^e`, built by repeated row addition.
pub fn pascal_row_mod(n: usize, ctx: &ModulusContext) -> Vec<Residue> {
    let mut row = PascalRow::new(*ctx);
    for _ in 0..n {
        row.advance();
    }
    row.values().iter().map(|&v| Residue { ctx: *ctx, value: v }).collect()
}

/// Incrementally extended Pascal row modulo `p^e`.
#[derive(Clone, Debug)]
pub struct PascalRow {
    ctx: ModulusContext,
    row: Vec<u64>,
}

impl PascalRow {
    pub fn new(ctx: ModulusContext) -> Self {
        Self { ctx, row: vec![1 % ctx.modulus()] }
    }

    pub fn n(&self) -> usize {
        self.row.len() - 1
    }

    pub fn advance(&mut self) {
        self.row.push(self.row[0]);
        for r in (1..self.row.len() - 1).rev() {
            self.row[r] = self.ctx.add(self.row[r], self.row[r - 1]);
        }
    }

    pub fn values(&self) -> &[u64] {
        &self.row
    }
}

/// `ord_p(x)`; an error for `x = 0`.
pub fn ord_p(p: u32, x: &Integer) -> Result<u32> {
    if x.is_zero() {
        return Err(Error::UndefinedValuation);
    }
    let p = Integer::from(p);
    let mut x = x.abs();
    let mut count = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return Ok(count);
        }
        x = q;
        count += 1;
    }
}

/// Valuation of a rational whose denominator is coprime to `p`.
pub fn ord_p_rational(p: u32, q: &Rational) -> Result<u32> {
    if q.denom() % p == Integer::zero() {
        return Err(Error::NotPAdicInteger { value: q.to_string(), p });
    }
    ord_p(p, q.numer())
}

/// Unsigned Stirling numbers of the first kind, with
/// `x(x-1)...(x-n+1) = sum_i (-1)^(n-i) s(n,i) x^i`.
pub fn stirling1_unsigned(n: usize, i: usize) -> Integer {
    if i > n {
        return Integer::zero();
    }
    stirling1_row(n).swap_remove(i)
}

/// `[s(n,0), ..., s(n,n)]`.
pub fn stirling1_row(n: usize) -> Vec<Integer> {
    let mut row = vec![Integer::one()];
    for j in 0..n {
        // s(j+1, i) = s(j, i-1) + j * s(j, i)
        let mut next = vec![Integer::zero(); j + 2];
        for (i, v) in row.iter().enumerate() {
            next[i + 1] += v;
            next[i] += v * j;
        }
        row = next;
    }
    row
}

/// Reduces a `p`-adic integer into `[0, p^e)`.
pub fn rational_residue(q: &Rational, ctx: &ModulusContext) -> Result<Residue> {
    let den = ctx.reduce(q.denom());
    if q.denom() % ctx.p() == Integer::zero() {
        return Err(Error::NotPAdicInteger { value: q.to_string(), p: ctx.p() });
    }
    let inv = ctx.inverse(den).expect("denominator coprime to p is a unit");
    let num = ctx.reduce(q.numer());
    Ok(Residue { ctx: *ctx, value: ctx.mul(num, inv) })
}

/// `x / p^t`, failing unless the division is exact.
pub fn exact_div_pow(x: &Integer, p: u32, t: u32) -> Result<Integer> {
    let d = num_traits::pow(Integer::from(p), t as usize);
    let (q, r) = x.div_rem(&d);
    if !r.is_zero() {
        return Err(Error::DivisibilityViolation { value: x.to_string(), p, t });
    }
    Ok(q)
}

pub fn pow_int(base: i64, e: u32) -> Integer {
    num_traits::pow(Integer::from(base), e as usize)
}

pub fn factorial(n: u64) -> Integer {
    (1..=n).fold(Integer::one(), |acc, i| acc * i)
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let q = match s.split_once('/') {
        Some((n, d)) => {
            let n: Integer = n.trim().parse().map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
            let d: Integer = d.trim().parse().map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Rational::new(n, d)
        }
        None => Rational::from_integer(
            s.parse().map_err(|_| Error::Parse(format!("bad rational `{s}`")))?,
        ),
    };
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx(p: u32, e: u32) -> ModulusContext {
        ModulusContext::new(p, e).unwrap()
    }

    fn pascal_oracle(n: usize) -> Vec<Vec<u64>> {
        let mut rows = vec![vec![1u64]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = vec![1u64; i + 1];
            for r in 1..i {
                row[r] = prev[r - 1] + prev[r];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), Integer::from(6));
        assert_eq!(binomial(17, 0), Integer::one());
        assert_eq!(binomial(0, 0), Integer::one());
        assert_eq!(binomial(5, -1), Integer::zero());
        assert_eq!(binomial(5, 6), Integer::zero());
        let rows = pascal_oracle(8);
        assert_eq!(binomial(8, 3), Integer::from(rows[8][3]));
        assert_eq!(binomial(8, 3), Integer::from(56));
    }

    #[test]
    fn pascal_identity_exhaustive() {
        for n in 2..=61u64 {
            for r in 1..n as i64 {
                assert_eq!(binomial(n, r), binomial(n - 1, r - 1) + binomial(n - 1, r));
            }
        }
    }

    #[test]
    fn pascal_row_mod_examples() {
        let vals = |n, c: &ModulusContext| {
            pascal_row_mod(n, c).iter().map(|r| r.value).collect::<Vec<_>>()
        };
        assert_eq!(vals(4, &ctx(5, 2)), vec![1, 4, 6, 4, 1]);
        assert_eq!(vals(5, &ctx(2, 3)), vec![1, 5, 2, 2, 5, 1]);
        assert_eq!(vals(0, &ctx(3, 1)), vec![1]);
    }

    #[test]
    fn pascal_row_mod_matches_exact() {
        for c in [ctx(2, 5), ctx(3, 4), ctx(5, 3)] {
            let mut row = PascalRow::new(c);
            for n in 0..=200usize {
                for (r, v) in row.values().iter().enumerate() {
                    assert_eq!(*v, c.reduce(&binomial(n as u64, r as i64)));
                }
                row.advance();
            }
        }
    }

    #[test]
    fn ord_p_examples() {
        assert_eq!(ord_p(2, &Integer::from(12)).unwrap(), 2);
        assert_eq!(ord_p(5, &Integer::from(75371)).unwrap(), 0);
        assert_eq!(ord_p(3, &Integer::zero()), Err(Error::UndefinedValuation));
        assert_eq!(ord_p(2, &Integer::from(-40)).unwrap(), 3);
    }

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling1_unsigned(3, 2), Integer::from(3));
        assert_eq!(stirling1_unsigned(4, 1), Integer::from(6));
        assert_eq!(stirling1_unsigned(6, 7), Integer::zero());
        for n in 0..10 {
            assert_eq!(stirling1_unsigned(n, n), Integer::one());
        }
    }

    /// Expands x(x-1)...(x-n+1) directly and compares with the signed convention.
    #[test]
    fn stirling_matches_falling_factorial_expansion() {
        for n in 0..=12usize {
            let mut poly = vec![Integer::one()];
            for j in 0..n {
                let mut next = vec![Integer::zero(); poly.len() + 1];
                for (i, c) in poly.iter().enumerate() {
                    next[i + 1] += c;
                    next[i] -= c * j;
                }
                poly = next;
            }
            for (i, c) in poly.iter().enumerate() {
                let sign = if (n - i) % 2 == 0 { 1 } else { -1 };
                assert_eq!(*c, stirling1_unsigned(n, i) * sign);
            }
        }
    }

    #[test]
    fn stirling_row_sums_and_recurrence() {
        for n in 0..=20usize {
            let row = stirling1_row(n);
            let sum: Integer = row.iter().sum();
            assert_eq!(sum, factorial(n as u64));
            let next = stirling1_row(n + 1);
            for i in 1..=n + 1 {
                let below = if i <= n { row[i].clone() } else { Integer::zero() };
                assert_eq!(next[i], &row[i - 1] + below * n);
            }
        }
    }

    #[test]
    fn rational_residue_examples() {
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(rational_residue(&half, &ctx(5, 2)).unwrap().value, 13);
        let q = Rational::from_integer((-52).into());
        assert_eq!(rational_residue(&q, &ctx(5, 7)).unwrap().value, 78073);
        assert_eq!(rational_residue(&Rational::zero(), &ctx(3, 4)).unwrap().value, 0);
        assert!(matches!(
            rational_residue(&half, &ctx(2, 4)),
            Err(Error::NotPAdicInteger { .. })
        ));
    }

    #[test]
    fn exact_div_pow_examples() {
        assert_eq!(exact_div_pow(&40.into(), 2, 3).unwrap(), Integer::from(5));
        assert_eq!(exact_div_pow(&0.into(), 5, 9).unwrap(), Integer::zero());
        assert!(matches!(
            exact_div_pow(&6.into(), 2, 2),
            Err(Error::DivisibilityViolation { .. })
        ));
        assert_eq!(exact_div_pow(&(-24).into(), 2, 3).unwrap(), Integer::from(-3));
    }

    #[test]
    fn modulus_parsing_and_validation() {
        let c: ModulusContext = "5^7".parse().unwrap();
        assert_eq!(c.modulus(), 78125);
        assert!("4^2".parse::<ModulusContext>().is_err());
        assert!("2^0".parse::<ModulusContext>().is_err());
        assert!("2^70".parse::<ModulusContext>().is_err());
        assert!("27".parse::<ModulusContext>().is_err());
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational("3/2").unwrap(), Rational::new(3.into(), 2.into()));
        assert_eq!(parse_rational("-4").unwrap(), Rational::from_integer((-4).into()));
        assert_eq!(parse_rational("6/-4").unwrap(), Rational::new((-3).into(), 2.into()));
        assert!(parse_rational("1/0").is_err());
    }

    proptest! {
        #[test]
        fn ord_p_recovers_exponent(p in prop::sample::select(vec![2u32, 3, 5]), a in 0u32..=30, u in 1i64..1_000_000) {
            prop_assume!(u % p as i64 != 0);
            let x = pow_int(p as i64, a) * u;
            prop_assert_eq!(ord_p(p, &x).unwrap(), a);
            prop_assert_eq!(ord_p(p, &-x).unwrap(), a);
        }

        #[test]
        fn rational_residue_inverts_denominator(
            p in prop::sample::select(vec![2u32, 3, 5]),
            e in 1u32..20,
            num in -1_000_000_000i64..1_000_000_000,
            den in 1i64..1_000_000,
        ) {
            prop_assume!(den % p as i64 != 0);
            let c = ModulusContext::new(p, e).unwrap();
            let q = Rational::new(num.into(), den.into());
            let r = rational_residue(&q, &c).unwrap();
            prop_assert!(r.value < c.modulus());
            prop_assert_eq!(c.mul(r.value, c.reduce(q.denom())), c.reduce(q.numer()));
        }

        #[test]
        fn modular_mul_matches_bigint(x in 0u64..(1 << 61), y in 0u64..(1 << 61), e in 1u32..=61) {
            let c = ModulusContext::new(2, e).unwrap();
            let (x, y) = (x % c.modulus(), y % c.modulus());
            prop_assert_eq!(c.mul(x, y), c.reduce(&(Integer::from(x) * y)));
        }
    }
}
