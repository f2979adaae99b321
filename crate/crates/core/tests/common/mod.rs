#![allow(dead_code)]

use dehnfill::lattice::{Plane, RatVec4, TranslatedSubtorus, Vec4};
use dehnfill::Rational;
use rand::Rng;

pub fn random_vec<R: Rng>(rng: &mut R, bound: i64) -> Vec4 {
    [0; 4].map(|_| rng.gen_range(-bound..=bound))
}

pub fn random_offset<R: Rng>(rng: &mut R) -> RatVec4 {
    [0; 4].map(|_| {
        let d = rng.gen_range(1..=6);
        Rational::new(rng.gen_range(0..d), d).unwrap()
    })
}

/// Primitive plane with entries in `[-bound, bound]`.
pub fn random_primitive_plane<R: Rng>(rng: &mut R, bound: i64) -> Plane {
    loop {
        if let Ok(p) = Plane::new(random_vec(rng, bound), random_vec(rng, bound)) {
            if p.is_primitive().unwrap() {
                return p;
            }
        }
    }
}

/// Two transverse translated subtori whose planes have entries in
/// `[-bound, bound]`, rejecting pairs with index above `max_index`.
pub fn random_transverse_pair<R: Rng>(
    rng: &mut R,
    bound: i64,
    max_index: i64,
) -> (TranslatedSubtorus, TranslatedSubtorus) {
    loop {
        let p = random_primitive_plane(rng, bound);
        let q = random_primitive_plane(rng, bound);
        let d = p.stack(&q).det().unwrap().abs();
        if d == 0 || d > max_index {
            continue;
        }
        let a = TranslatedSubtorus::new(p, random_offset(rng)).unwrap();
        let b = TranslatedSubtorus::new(q, random_offset(rng)).unwrap();
        return (a, b);
    }
}
