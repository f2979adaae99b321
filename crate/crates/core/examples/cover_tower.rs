//! A tower of prime covers against a single cyclic cover of the same degree.

use dehnfill::covers::{apply_cover, cover_tower, find_cyclic_cover, prime_factors};
use dehnfill::families::hirzebruch_base;

fn main() -> dehnfill::Result<()> {
    let base = hirzebruch_base()?;
    for e in [4, 6, 12] {
        let primes = prime_factors(e);
        let (tower, steps) = cover_tower(&base, &primes)?;
        let cyclic = apply_cover(&base, &find_cyclic_cover(e, &base.four_planes()?)?)?;
        let numbers = |c: &dehnfill::families::AbelianConfig| -> dehnfill::Result<Vec<i64>> {
            Ok(c.pairwise_intersections()?.iter().map(|p| p.number).collect())
        };
        println!("e={e} primes={primes:?}");
        for s in &steps {
            println!("  step {s}");
        }
        println!("  tower  {:?} points={}", numbers(&tower)?, tower.incidences().len());
        println!("  cyclic {:?} points={}", numbers(&cyclic)?, cyclic.incidences().len());
    }
    Ok(())
}
