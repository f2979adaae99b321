//! Hyperplane census over F_p and the first good cover for small primes.

use dehnfill::covers::{find_prime_cover, hyperplane_census, HyperplaneCensus};
use dehnfill::families::hirzebruch_planes;

fn main() -> dehnfill::Result<()> {
    let planes = hirzebruch_planes();
    for p in [2, 3, 5, 7, 11, 13] {
        let c = hyperplane_census(p, &planes)?;
        let phi = find_prime_cover(p, &planes)?;
        println!(
            "p={p:>2} total={:>4} bad={:>3} good={:>4} (>= {:>4})  first: {phi}",
            c.total,
            c.bad,
            c.good,
            HyperplaneCensus::lower_bound(p)
        );
    }
    Ok(())
}
