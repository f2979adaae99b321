//! Einstein obstructions in dimension four.
//!
//! Every comparison is carried out on integers after clearing the
//! denominators 2 and 3; margins are reported as exact rationals.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numbers::{abs, add, mul, sub, CuspedManifold, Rational, Status, Verdict};

pub const HITCHIN_THORPE: &str = "Hitchin-Thorpe inequality";
pub const DAI_WEI: &str = "Dai-Wei inequality";
pub const CHEEGER_GROMOLL: &str = "Cheeger-Gromoll splitting theorem";

const HT_EQUALITY: &str =
    "equality: an Einstein metric would have to be flat or have a K3 surface as universal cover (up to orientation)";
const HT_VIOLATED: &str = "violated: no Einstein metric exists on this compact 4-manifold";
const HT_STRICT: &str = "satisfied strictly: no obstruction";

const DW_EQUALITY: &str =
    "equality: an Einstein metric with fibered cusps would be a complete Calabi-Yau (Ricci-flat) metric";
const DW_VIOLATED: &str = "violated: no complete Einstein metric with fibered cusp structure at infinity";
const DW_STRICT: &str = "satisfied strictly: no obstruction";

/// `χ ≥ (3/2)|τ|` for compact oriented Einstein 4-manifolds.
pub fn hitchin_thorpe(chi: i64, tau: i64) -> Result<Verdict> {
    // margin = (2χ − 3|τ|)/2
    let twice = sub(mul(2, chi)?, mul(3, abs(tau)?)?)?;
    Ok(Verdict::from_margin(Rational::new(twice, 2)?, HT_STRICT, HT_EQUALITY, HT_VIOLATED))
}

/// `3·τ_{L²} = 3τ + Σ (e(E) − 3)`; every cusp has `e(E) > 0`.
fn l2_signature_times_three(tau: i64, cusps: &[i64]) -> Result<i64> {
    let mut acc = mul(3, tau)?;
    for &e in cusps {
        if e <= 0 {
            return Err(Error::NonPositiveCusp(e));
        }
        acc = add(acc, sub(e, 3)?)?;
    }
    Ok(acc)
}

/// `τ_{L²} = τ + Σ (e(E) − 3 sign e(E))/3` for positive Euler numbers.
pub fn l2_signature(tau: i64, cusps: &[i64]) -> Result<Rational> {
    Rational::new(l2_signature_times_three(tau, cusps)?, 3)
}

/// `χ ≥ (3/2)|τ_{L²}|` for complete Einstein metrics with fibered cusps.
/// With no cusps this is the Hitchin-Thorpe inequality.
pub fn dai_wei(m: &CuspedManifold) -> Result<Verdict> {
    if m.is_closed() {
        return hitchin_thorpe(m.chi(), m.tau());
    }
    // margin = χ − |3τ_{L²}|/2
    let s = l2_signature_times_three(m.tau(), m.cusps())?;
    let twice = sub(mul(2, m.chi())?, abs(s)?)?;
    Ok(Verdict::from_margin(Rational::new(twice, 2)?, DW_STRICT, DW_EQUALITY, DW_VIOLATED))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// Ricci-flat forced, two or more ends, χ ≠ 0: a line would split off.
    RicciFlatSplitting,
    /// Ricci-flat forced with a single end: only metrics with negative
    /// Einstein constant are excluded.
    NegativeConstantOnly,
    /// The inequality itself fails.
    NoEinsteinMetric,
    NoObstruction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingReport {
    pub outcome: Outcome,
    pub obstructed: bool,
    pub statement: String,
    pub chi: i64,
    pub ends: usize,
    pub dai_wei: Status,
    pub cites: Vec<String>,
}

/// Turns a Dai-Wei verdict into the non-existence statement it supports.
///
/// Equality forces any Einstein metric with fibered cusps to be
/// Ricci-flat. With at least two ends there is a line, and the splitting
/// theorem then forces χ = 0; so χ ≠ 0 is a contradiction. With one end
/// the only conclusion is that the metric cannot be asymptotic to the
/// complex-hyperbolic one, whose Einstein constant is negative.
pub fn splitting_report(m: &CuspedManifold, dw: &Verdict) -> Result<SplittingReport> {
    if &dai_wei(m)? != dw {
        return Err(Error::InconsistentVerdict);
    }
    let ends = m.cusps().len();
    let chi = m.chi();
    let (outcome, statement, cites): (Outcome, String, Vec<&str>) = match dw.status {
        Status::Violated => {
            let thm = if m.is_closed() { HITCHIN_THORPE } else { DAI_WEI };
            (Outcome::NoEinsteinMetric, format!("no Einstein metric: the {thm} fails"), vec![thm])
        }
        Status::Equality if ends >= 2 && chi != 0 => (
            Outcome::RicciFlatSplitting,
            format!(
                "no complete Einstein metric with fibered cusp structure at infinity: \
                 equality forces a Ricci-flat metric, {ends} ends give a line that splits off, \
                 which forces chi = 0, but chi = {chi}"
            ),
            vec![DAI_WEI, CHEEGER_GROMOLL],
        ),
        Status::Equality if ends == 1 => (
            Outcome::NegativeConstantOnly,
            "an Einstein metric asymptotic to a complex-hyperbolic one cannot be Ricci flat: \
             no complete Einstein metric with fibered cusps and negative Einstein constant"
                .to_string(),
            vec![DAI_WEI],
        ),
        _ => (Outcome::NoObstruction, "no obstruction from this test".to_string(), vec![]),
    };
    Ok(SplittingReport {
        obstructed: outcome != Outcome::NoObstruction,
        outcome,
        statement,
        chi,
        ends,
        dai_wei: dw.status,
        cites: cites.into_iter().map(String::from).collect(),
    })
}
