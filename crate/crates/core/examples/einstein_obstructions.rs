//! Hitchin-Thorpe and Dai-Wei on a few (chi, tau, cusps) triples.

use dehnfill::obstructions::{dai_wei, l2_signature, splitting_report};
use dehnfill::CuspedManifold;

fn main() -> dehnfill::Result<()> {
    let cases = [
        (24, -16, vec![]),
        (5, -5, vec![]),
        (3, 0, vec![1, 1, 1]),
        (1, 0, vec![1]),
        (2, 3, vec![2, 2, 2, 1, 1]),
        (10, 0, vec![3, 3]),
    ];
    for (chi, tau, cusps) in cases {
        let m = CuspedManifold::new(chi, tau, cusps)?;
        let dw = dai_wei(&m)?;
        let rep = splitting_report(&m, &dw)?;
        println!("chi={chi} tau={tau} cusps={:?} tau_L2={}", m.cusps(), l2_signature(tau, m.cusps())?);
        println!("  {dw}");
        println!("  {}", rep.statement);
    }
    Ok(())
}
