//! Intersection points of two translated subtori of R^4/Z^4.

use dehnfill::lattice::{intersection_points, transverse_index, Plane, TranslatedSubtorus};
use dehnfill::Rational;

fn main() -> dehnfill::Result<()> {
    let p = Plane::new([1, 0, 2, 1], [0, 1, 1, -1])?;
    let q = Plane::new([0, 0, 1, 0], [1, 1, 0, 3])?;
    let half = Rational::new(1, 2)?;
    let a = TranslatedSubtorus::through_origin(p)?;
    let b = TranslatedSubtorus::new(q, [Rational::ZERO, half, Rational::ZERO, Rational::ZERO])?;

    println!("index {}", transverse_index(&p, &q)?);
    for pt in intersection_points(&a, &b)? {
        println!("  {pt}");
    }
    Ok(())
}
