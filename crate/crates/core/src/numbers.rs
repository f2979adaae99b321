//! Shared value types: exact rationals, characteristic numbers, cusped
//! manifolds and inequality verdicts.
//!
//! Everything here is immutable once built. Constructors validate, and the
//! serde implementations route through the same validation so a JSON
//! document cannot smuggle in an inconsistent value.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn neg(a: i64) -> Result<i64> {
    a.checked_neg().ok_or(Error::Overflow)
}

pub(crate) fn abs(a: i64) -> Result<i64> {
    a.checked_abs().ok_or(Error::Overflow)
}

/// A reduced fraction with positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRational")]
pub struct Rational {
    num: i64,
    den: i64,
}

#[derive(Deserialize)]
struct RawRational {
    num: i64,
    den: i64,
}

impl TryFrom<RawRational> for Rational {
    type Error = Error;

    fn try_from(raw: RawRational) -> Result<Self> {
        Rational::new(raw.num, raw.den)
    }
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = neg(num)?;
            den = neg(den)?;
        }
        Ok(Rational { num, den })
    }

    pub const fn integer(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn signum(&self) -> i64 {
        self.num.signum()
    }

    pub fn checked_add(self, other: Rational) -> Result<Rational> {
        let l = self.den.lcm(&other.den);
        let a = mul(self.num, l / self.den)?;
        let b = mul(other.num, l / other.den)?;
        Rational::new(add(a, b)?, l)
    }

    pub fn checked_sub(self, other: Rational) -> Result<Rational> {
        self.checked_add(other.checked_neg()?)
    }

    pub fn checked_mul(self, other: Rational) -> Result<Rational> {
        // cross-cancel first to keep intermediates small
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let (g1, g2) = (g1.max(1), g2.max(1));
        Rational::new(
            mul(self.num / g1, other.num / g2)?,
            mul(self.den / g2, other.den / g1)?,
        )
    }

    pub fn checked_mul_int(self, k: i64) -> Result<Rational> {
        self.checked_mul(Rational::integer(k))
    }

    pub fn checked_neg(self) -> Result<Rational> {
        Ok(Rational { num: neg(self.num)?, den: self.den })
    }

    pub fn checked_abs(self) -> Result<Rational> {
        Ok(Rational { num: abs(self.num)?, den: self.den })
    }

    pub fn floor(&self) -> i64 {
        Integer::div_floor(&self.num, &self.den)
    }

    /// Representative of `self` modulo 1 in `[0, 1)`.
    pub fn fract(&self) -> Rational {
        Rational { num: self.num.mod_floor(&self.den), den: self.den }
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = i128::from(self.num) * i128::from(other.den);
        let rhs = i128::from(other.num) * i128::from(self.den);
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Euler characteristic, signature and (for compact complex surfaces) c₁².
///
/// c₂ is not stored: it equals `chi` for every compact complex surface we
/// handle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCharNumbers")]
pub struct CharNumbers {
    chi: i64,
    tau: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    c1sq: Option<i64>,
}

#[derive(Deserialize)]
struct RawCharNumbers {
    chi: i64,
    tau: i64,
    #[serde(default)]
    c1sq: Option<i64>,
}

impl TryFrom<RawCharNumbers> for CharNumbers {
    type Error = Error;

    fn try_from(raw: RawCharNumbers) -> Result<Self> {
        CharNumbers::new(raw.chi, raw.tau, raw.c1sq)
    }
}

impl CharNumbers {
    pub fn new(chi: i64, tau: i64, c1sq: Option<i64>) -> Result<Self> {
        if let Some(c1sq) = c1sq {
            let expected = Self::signature_from(chi, c1sq);
            if expected != Some(tau) {
                return Err(Error::InconsistentSignature { chi, tau, c1sq });
            }
        }
        Ok(CharNumbers { chi, tau, c1sq })
    }

    /// Compact complex surface: τ is derived from χ and c₁².
    pub fn compact(chi: i64, c1sq: i64) -> Result<Self> {
        let tau = Self::signature_from(chi, c1sq).ok_or(Error::InconsistentSignature {
            chi,
            tau: 0,
            c1sq,
        })?;
        Ok(CharNumbers { chi, tau, c1sq: Some(c1sq) })
    }

    /// Open (or otherwise non-complex) 4-manifold: only χ and τ.
    pub fn open(chi: i64, tau: i64) -> Self {
        CharNumbers { chi, tau, c1sq: None }
    }

    fn signature_from(chi: i64, c1sq: i64) -> Option<i64> {
        let num = c1sq.checked_sub(chi.checked_mul(2)?)?;
        (num % 3 == 0).then_some(num / 3)
    }

    pub fn chi(&self) -> i64 {
        self.chi
    }

    pub fn tau(&self) -> i64 {
        self.tau
    }

    pub fn c1sq(&self) -> Option<i64> {
        self.c1sq
    }

    pub fn c2(&self) -> i64 {
        self.chi
    }

    /// c₁² + c₂ ≡ 0 (mod 12). `None` when c₁² is absent.
    pub fn satisfies_noether(&self) -> Option<bool> {
        self.c1sq
            .map(|c| (i128::from(c) + i128::from(self.chi)).rem_euclid(12) == 0)
    }

    /// Effect of one blow-up: χ+1, c₁²−1, τ−1.
    pub fn blown_up(&self) -> Result<Self> {
        let c1sq = self.c1sq.ok_or(Error::MissingC1Squared)?;
        CharNumbers::new(add(self.chi, 1)?, sub(self.tau, 1)?, Some(sub(c1sq, 1)?))
    }

    /// Numbers of a degree-`n` unramified cover.
    pub fn scaled(&self, n: i64) -> Result<Self> {
        let c1sq = self.c1sq.map(|c| mul(c, n)).transpose()?;
        CharNumbers::new(mul(self.chi, n)?, mul(self.tau, n)?, c1sq)
    }
}

impl fmt::Display for CharNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi={} tau={}", self.chi, self.tau)?;
        if let Some(c) = self.c1sq {
            write!(f, " c1^2={c}")?;
        }
        Ok(())
    }
}

/// An open 4-manifold with torus-like cusps, recorded by (χ, τ) and the
/// Euler numbers of the circle bundles at infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCusped")]
pub struct CuspedManifold {
    chi: i64,
    tau: i64,
    cusps: Vec<i64>,
}

#[derive(Deserialize)]
struct RawCusped {
    chi: i64,
    tau: i64,
    cusps: Vec<i64>,
}

impl TryFrom<RawCusped> for CuspedManifold {
    type Error = Error;

    fn try_from(raw: RawCusped) -> Result<Self> {
        CuspedManifold::new(raw.chi, raw.tau, raw.cusps)
    }
}

impl CuspedManifold {
    pub fn new(chi: i64, tau: i64, cusps: Vec<i64>) -> Result<Self> {
        if let Some(&bad) = cusps.iter().find(|&&e| e <= 0) {
            return Err(Error::NonPositiveCusp(bad));
        }
        Ok(CuspedManifold { chi, tau, cusps })
    }

    pub fn chi(&self) -> i64 {
        self.chi
    }

    pub fn tau(&self) -> i64 {
        self.tau
    }

    pub fn cusps(&self) -> &[i64] {
        &self.cusps
    }

    pub fn is_closed(&self) -> bool {
        self.cusps.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Strict,
    Equality,
    Violated,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Strict => "STRICT",
            Status::Equality => "EQUALITY",
            Status::Violated => "VIOLATED",
        })
    }
}

/// Outcome of an inequality `lhs ≥ rhs`; `margin = lhs − rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawVerdict")]
pub struct Verdict {
    pub status: Status,
    pub margin: Rational,
    pub note: String,
}

#[derive(Deserialize)]
struct RawVerdict {
    status: Status,
    margin: Rational,
    note: String,
}

impl TryFrom<RawVerdict> for Verdict {
    type Error = Error;

    fn try_from(raw: RawVerdict) -> Result<Self> {
        let expected = match raw.margin.signum() {
            1 => Status::Strict,
            0 => Status::Equality,
            _ => Status::Violated,
        };
        if expected != raw.status {
            return Err(Error::InconsistentVerdict);
        }
        Ok(Verdict { status: raw.status, margin: raw.margin, note: raw.note })
    }
}

impl Verdict {
    /// Picks the status from the sign of `margin` and the matching note.
    pub fn from_margin(margin: Rational, strict: &str, equality: &str, violated: &str) -> Self {
        let (status, note) = match margin.signum() {
            1 => (Status::Strict, strict),
            0 => (Status::Equality, equality),
            _ => (Status::Violated, violated),
        };
        Verdict { status, margin, note: note.to_string() }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (margin {}): {}", self.status, self.margin, self.note)
    }
}
