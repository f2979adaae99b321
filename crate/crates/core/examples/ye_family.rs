//! The Y_e family on C/Z[e,zeta] x C/Z[1,zeta]. Filling the three cusps of
//! Euler number e leaves e cusps of Euler number 1 and equality in the
//! Dai-Wei inequality.

use dehnfill::calculus::fill_cusps;
use dehnfill::families::build_ye;
use dehnfill::obstructions::{dai_wei, splitting_report};

fn main() -> dehnfill::Result<()> {
    for e in 1..=6 {
        let y = build_ye(e)?;
        let filled = fill_cusps(&y.cusped, &y.diagonal_cusps())?;
        let dw = dai_wei(&filled)?;
        let report = splitting_report(&filled, &dw)?;
        println!(
            "e={e}: Y_e chi={} tau={} cusps={:?}; (K+D)^2={}; filled tau={} -> {} ({:?})",
            y.cusped.chi(),
            y.cusped.tau(),
            y.cusped.cusps(),
            y.log_canonical_sq,
            filled.tau(),
            dw.status,
            report.outcome
        );
    }
    Ok(())
}
