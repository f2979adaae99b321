//! Surgery bookkeeping on characteristic numbers: blow-ups, removal of an
//! elliptic divisor, and Dehn filling of torus-like cusps.
//!
//! A blow-up changes (χ, c₁², τ) by (+1, −1, −1) and lowers the
//! self-intersection of every curve through the point by one. Removing a
//! disjoint union of elliptic curves with negative self-intersection keeps
//! χ (each torus has χ = 0) and raises τ by one per curve, since each
//! tubular neighbourhood carries a negative definite rank-one form
//! (Novikov additivity). Filling a cusp of Euler number `e` glues back the
//! disc bundle of Euler number `−e`, which undoes exactly that.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::AbelianConfig;
use crate::numbers::{add, neg, sub, CharNumbers, CuspedManifold, Rational, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorCurve {
    pub id: String,
    pub genus: i64,
    pub self_int: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Incidence {
    pub point: String,
    pub curves: Vec<String>,
}

/// A compact surface with a divisor made of smooth curves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct BlownPair {
    chars: CharNumbers,
    curves: Vec<DivisorCurve>,
    incidences: Vec<Incidence>,
    blowup_count: i64,
}

#[derive(Deserialize)]
struct RawPair {
    chars: CharNumbers,
    curves: Vec<DivisorCurve>,
    incidences: Vec<Incidence>,
    blowup_count: i64,
}

impl TryFrom<RawPair> for BlownPair {
    type Error = Error;

    fn try_from(raw: RawPair) -> Result<Self> {
        let mut pair = BlownPair::new(raw.chars, raw.curves, raw.incidences)?;
        pair.blowup_count = raw.blowup_count;
        Ok(pair)
    }
}

impl BlownPair {
    pub fn new(chars: CharNumbers, curves: Vec<DivisorCurve>, incidences: Vec<Incidence>) -> Result<Self> {
        if chars.c1sq().is_none() {
            return Err(Error::MissingC1Squared);
        }
        let ids: BTreeSet<&str> = curves.iter().map(|c| c.id.as_str()).collect();
        if ids.len() != curves.len() {
            return Err(Error::Verification("duplicate curve id".into()));
        }
        let mut points = BTreeSet::new();
        for inc in &incidences {
            if !points.insert(inc.point.as_str()) {
                return Err(Error::Verification(format!("duplicate point {}", inc.point)));
            }
            if let Some(bad) = inc.curves.iter().find(|c| !ids.contains(c.as_str())) {
                return Err(Error::Verification(format!("point {} lists unknown curve {bad}", inc.point)));
            }
        }
        Ok(BlownPair { chars, curves, incidences, blowup_count: 0 })
    }

    /// The abelian surface with its curves: every curve is elliptic with
    /// self-intersection 0 (adjunction with trivial canonical class).
    pub fn from_config(config: &AbelianConfig) -> Result<Self> {
        let curves = config
            .curves()
            .iter()
            .map(|c| DivisorCurve { id: c.id.clone(), genus: 1, self_int: 0 })
            .collect();
        let incidences = config
            .incidences()
            .iter()
            .map(|inc| Incidence { point: inc.point.to_string(), curves: inc.curves.clone() })
            .collect();
        BlownPair::new(*config.chars(), curves, incidences)
    }

    pub fn chars(&self) -> &CharNumbers {
        &self.chars
    }

    pub fn curves(&self) -> &[DivisorCurve] {
        &self.curves
    }

    pub fn incidences(&self) -> &[Incidence] {
        &self.incidences
    }

    pub fn blowup_count(&self) -> i64 {
        self.blowup_count
    }

    fn c1sq(&self) -> Result<i64> {
        self.chars.c1sq().ok_or(Error::MissingC1Squared)
    }

    /// No point lies on two divisor curves.
    pub fn is_disjoint(&self) -> bool {
        self.incidences.iter().all(|inc| inc.curves.len() < 2)
    }

    pub fn self_intersection_sum(&self) -> Result<i64> {
        self.curves.iter().try_fold(0, |acc, c| add(acc, c.self_int))
    }

    fn require_disjoint_elliptic(&self) -> Result<()> {
        if let Some(c) = self.curves.iter().find(|c| c.genus != 1) {
            return Err(Error::NonEllipticDivisor(c.id.clone()));
        }
        if !self.is_disjoint() {
            return Err(Error::CurvesNotDisjoint);
        }
        Ok(())
    }
}

/// Blows up one incidence point. The exceptional curve is not added to
/// the divisor.
pub fn blow_up(pair: &BlownPair, point: &str) -> Result<BlownPair> {
    let pos = pair
        .incidences
        .iter()
        .position(|inc| inc.point == point)
        .ok_or_else(|| Error::UnknownPoint(point.to_string()))?;
    let mut next = pair.clone();
    let inc = next.incidences.remove(pos);
    for curve in next.curves.iter_mut().filter(|c| inc.curves.contains(&c.id)) {
        curve.self_int = sub(curve.self_int, 1)?;
    }
    next.chars = pair.chars.blown_up()?;
    next.blowup_count = add(pair.blowup_count, 1)?;
    Ok(next)
}

/// Blows up every incidence point, in list order.
pub fn blow_up_all(pair: &BlownPair) -> Result<BlownPair> {
    let points: Vec<String> = pair.incidences.iter().map(|inc| inc.point.clone()).collect();
    points.iter().try_fold(pair.clone(), |acc, p| blow_up(&acc, p))
}

/// `(K + D)² = K² − ΣD_j²` for disjoint elliptic `D_j` (adjunction gives
/// `K·D_j = −D_j²`).
pub fn log_canonical_sq(pair: &BlownPair) -> Result<i64> {
    pair.require_disjoint_elliptic()?;
    sub(pair.c1sq()?, pair.self_intersection_sum()?)
}

/// `−ΣD_j² ≤ 3c₂ − c₁²`, margin = right side minus left side.
pub fn log_bmy(pair: &BlownPair) -> Result<Verdict> {
    pair.require_disjoint_elliptic()?;
    let lhs = neg(pair.self_intersection_sum()?)?;
    let rhs = sub(crate::numbers::mul(3, pair.chars.c2())?, pair.c1sq()?)?;
    Ok(Verdict::from_margin(
        Rational::integer(sub(rhs, lhs)?),
        "strict inequality: the uniformization criterion does not apply",
        "equality: by Tian-Yau uniformization the complement of the divisor is a complex-hyperbolic surface",
        "inequality fails: the pair is not of log-general type with this boundary",
    ))
}

/// The open manifold `X ∖ D`, one cusp of Euler number `−D_j²` per curve.
pub fn remove_divisor(pair: &BlownPair) -> Result<CuspedManifold> {
    pair.require_disjoint_elliptic()?;
    if let Some(c) = pair.curves.iter().find(|c| c.self_int >= 0) {
        return Err(Error::NonNegativeSelfIntersection(c.id.clone()));
    }
    let cusps = pair.curves.iter().map(|c| neg(c.self_int)).collect::<Result<Vec<_>>>()?;
    let tau = add(pair.chars.tau(), i64::try_from(cusps.len()).map_err(|_| Error::Overflow)?)?;
    CuspedManifold::new(pair.chars.chi(), tau, cusps)
}

/// Dehn fills the cusps at `indices`: τ drops by one per filled cusp.
pub fn fill_cusps(m: &CuspedManifold, indices: &[usize]) -> Result<CuspedManifold> {
    let mut seen = BTreeSet::new();
    for &i in indices {
        if i >= m.cusps().len() || !seen.insert(i) {
            return Err(Error::BadIndex(i));
        }
    }
    let cusps = m
        .cusps()
        .iter()
        .enumerate()
        .filter(|(i, _)| !seen.contains(i))
        .map(|(_, &e)| e)
        .collect();
    let filled = i64::try_from(seen.len()).map_err(|_| Error::Overflow)?;
    CuspedManifold::new(m.chi(), sub(m.tau(), filled)?, cusps)
}

/// Which cusps to fill.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CuspSelection {
    All,
    Nothing,
    Euler(i64),
    Indices(Vec<usize>),
}

impl CuspSelection {
    pub fn resolve(&self, m: &CuspedManifold) -> Result<Vec<usize>> {
        match self {
            CuspSelection::All => Ok((0..m.cusps().len()).collect()),
            CuspSelection::Nothing => Ok(Vec::new()),
            CuspSelection::Euler(e) => {
                let hits: Vec<usize> = m
                    .cusps()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| *c == e)
                    .map(|(i, _)| i)
                    .collect();
                if hits.is_empty() {
                    Err(Error::EmptySelection)
                } else {
                    Ok(hits)
                }
            }
            CuspSelection::Indices(ix) => {
                if let Some(&bad) = ix.iter().find(|&&i| i >= m.cusps().len()) {
                    return Err(Error::BadIndex(bad));
                }
                Ok(ix.clone())
            }
        }
    }
}

impl FromStr for CuspSelection {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "all" => Ok(CuspSelection::All),
            "none" => Ok(CuspSelection::Nothing),
            t => {
                if let Some(e) = t.strip_prefix("euler=") {
                    let e: i64 = e.parse().map_err(|_| format!("bad Euler number in {t:?}"))?;
                    return Ok(CuspSelection::Euler(e));
                }
                t.split(',')
                    .map(|x| x.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map(CuspSelection::Indices)
                    .map_err(|_| format!("expected all, none, euler=E or a comma-separated index list, got {t:?}"))
            }
        }
    }
}

impl fmt::Display for CuspSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CuspSelection::All => f.write_str("all"),
            CuspSelection::Nothing => f.write_str("none"),
            CuspSelection::Euler(e) => write!(f, "euler={e}"),
            CuspSelection::Indices(ix) => {
                let parts: Vec<String> = ix.iter().map(usize::to_string).collect();
                f.write_str(&parts.join(","))
            }
        }
    }
}
