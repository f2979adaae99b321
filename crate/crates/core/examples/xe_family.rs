//! The X_e family: cyclic covers of Hirzebruch's configuration. Filling every
//! cusp gives a compact surface with |tau| = chi, which fails Hitchin-Thorpe.
//!
//!     cargo run --example xe_family -- 12

use dehnfill::calculus::{fill_cusps, CuspSelection};
use dehnfill::families::build_xe;
use dehnfill::obstructions::hitchin_thorpe;

fn main() -> dehnfill::Result<()> {
    let max: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    println!("{:>3} {:>20} {:>5} {:>5}  {:<10} HT", "e", "cover", "chi", "tau", "log-BMY");
    for e in 1..=max {
        let x = build_xe(e)?;
        let all = CuspSelection::All.resolve(&x.cusped)?;
        let closed = fill_cusps(&x.cusped, &all)?;
        let ht = hitchin_thorpe(closed.chi(), closed.tau())?;
        println!(
            "{e:>3} {:>20} {:>5} {:>5}  {:<10} {} {}",
            x.cover.to_string(),
            x.pair.chars().chi(),
            x.pair.chars().tau(),
            x.log_bmy.status.to_string(),
            ht.status,
            ht.margin
        );
    }
    Ok(())
}
