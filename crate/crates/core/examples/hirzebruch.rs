//! Hirzebruch's four curves on E_zeta x E_zeta, blown up at their common
//! point.

use dehnfill::calculus::{blow_up_all, log_bmy, remove_divisor, BlownPair};
use dehnfill::families::hirzebruch_base;

fn main() -> dehnfill::Result<()> {
    let base = hirzebruch_base()?;
    for curve in base.curves() {
        println!("{:6} {:?}", curve.id, curve.locus.plane().basis());
    }
    for inc in base.incidences() {
        println!("point {} on {}", inc.point, inc.curves.join(", "));
    }

    let pair = blow_up_all(&BlownPair::from_config(&base)?)?;
    println!("blown up: {}", pair.chars());
    for c in pair.curves() {
        println!("  {} . {} = {}", c.id, c.id, c.self_int);
    }
    println!("log-BMY: {}", log_bmy(&pair)?);

    let open = remove_divisor(&pair)?;
    println!("complement: chi={} tau={} cusps={:?}", open.chi(), open.tau(), open.cusps());
    Ok(())
}
