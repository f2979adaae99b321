//! Brute-force cross-checks that share no code with the solvers.

mod common;

use std::collections::BTreeSet;

use dehnfill::covers::{component_count, find_cyclic_cover, find_prime_cover, hyperplane_census, CoverHom};
use dehnfill::families::{build_xe, build_ye, hirzebruch_planes};
use dehnfill::lattice::{
    hnf, intersection_points, kernel_lattice, lattice_index, lattice_intersection, IntMatrix, Plane,
    TranslatedSubtorus, Vec4,
};
use num_integer::Integer;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn lcm_of_denominators(t: &TranslatedSubtorus) -> i64 {
    t.offset().iter().fold(1, |l, r| l.lcm(&r.den()))
}

/// Grid points `δ + s·u + t·v` with `s, t ∈ (1/n)Z / Z`, as integer
/// numerators mod `n`.
fn grid_points(t: &TranslatedSubtorus, n: i64) -> BTreeSet<[i64; 4]> {
    let [u, v] = t.plane().basis();
    let delta: Vec<i64> = t.offset().iter().map(|r| r.num() * (n / r.den())).collect();
    let mut out = BTreeSet::new();
    for s in 0..n {
        for r in 0..n {
            out.insert([0, 1, 2, 3].map(|i| (delta[i] + s * u[i] + r * v[i]).rem_euclid(n)));
        }
    }
    out
}

fn grid_size(a: &TranslatedSubtorus, b: &TranslatedSubtorus) -> i64 {
    a.plane().stack(b.plane()).det().unwrap().abs() * lcm_of_denominators(a).lcm(&lcm_of_denominators(b))
}

/// Intersection of two subtori by enumerating both on the common grid of
/// denominator `n`, returned as numerators over `n`.
fn grid_oracle(a: &TranslatedSubtorus, b: &TranslatedSubtorus, n: i64) -> BTreeSet<[i64; 4]> {
    let pa = grid_points(a, n);
    grid_points(b, n).intersection(&pa).cloned().collect()
}

#[test]
fn point_solver_matches_grid_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 60 {
        let (a, b) = common::random_transverse_pair(&mut rng, 3, 40);
        let n = grid_size(&a, &b);
        if n > 300 {
            continue;
        }
        checked += 1;
        let solver: BTreeSet<[i64; 4]> = intersection_points(&a, &b)
            .unwrap()
            .iter()
            .map(|p| {
                p.coords().map(|r| {
                    assert_eq!(n % r.den(), 0);
                    r.num() * (n / r.den())
                })
            })
            .collect();
        assert_eq!(solver, grid_oracle(&a, &b, n), "{a:?} {b:?}");
    }
}

#[test]
fn ye_points_match_grid_enumeration() {
    let y = build_ye(4).unwrap();
    let mut common_points: Option<BTreeSet<[i64; 4]>> = None;
    let curves = y.config.curves();
    for a in &curves[..3] {
        for b in &curves[..3] {
            if a.id < b.id {
                let pts = grid_oracle(&a.locus, &b.locus, 4 * 3);
                common_points = Some(match common_points {
                    None => pts,
                    Some(c) => c.intersection(&pts).cloned().collect(),
                });
            }
        }
    }
    let expected: BTreeSet<[i64; 4]> = (0..4).map(|k| [k * 3, 0, 0, 0]).collect();
    assert_eq!(common_points.unwrap(), expected);
}

fn all_hyperplanes(p: i64) -> Vec<Vec4> {
    // one representative per line of nonzero covectors
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for idx in 1..p.pow(4) {
        let phi = [p.pow(3), p.pow(2), p, 1].map(|w| (idx / w) % p);
        let orbit: BTreeSet<Vec4> = (1..p).map(|k| phi.map(|c| c * k % p)).collect();
        let key = *orbit.iter().next().unwrap();
        if seen.insert(key) {
            reps.push(phi);
        }
    }
    reps
}

fn plane_points_mod(plane: &Plane, p: i64) -> Vec<Vec4> {
    let [u, v] = plane.basis();
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            out.push([0, 1, 2, 3].map(|i| (a * u[i] + b * v[i]).rem_euclid(p)));
        }
    }
    out
}

#[test]
fn census_matches_set_enumeration() {
    let planes = hirzebruch_planes();
    for p in [2, 3, 5] {
        let hs = all_hyperplanes(p);
        let inside = |phi: &Vec4, pl: &Plane| {
            plane_points_mod(pl, p).iter().all(|x| (0..4).map(|i| phi[i] * x[i]).sum::<i64>() % p == 0)
        };
        let per: Vec<i64> = planes.iter().map(|pl| hs.iter().filter(|h| inside(h, pl)).count() as i64).collect();
        let bad = hs.iter().filter(|h| planes.iter().any(|pl| inside(h, pl))).count() as i64;
        let c = hyperplane_census(p, &planes).unwrap();
        assert_eq!(c.total, hs.len() as i64);
        assert_eq!(c.per_plane_bad.to_vec(), per);
        assert_eq!(c.bad, bad);
    }
}

#[test]
fn prime_cover_is_lex_first_good_hyperplane() {
    let planes = hirzebruch_planes();
    for p in [2, 3, 5, 7] {
        let mut hs: Vec<Vec4> = all_hyperplanes(p)
            .into_iter()
            .map(|h| {
                let lead = *h.iter().find(|&&c| c != 0).unwrap();
                let inv = (1..p).find(|k| k * lead % p == 1).unwrap();
                h.map(|c| c * inv % p)
            })
            .collect();
        hs.sort();
        let first_good = hs
            .into_iter()
            .find(|h| {
                planes.iter().all(|pl| {
                    plane_points_mod(pl, p).iter().filter(|x| (0..4).map(|i| h[i] * x[i]).sum::<i64>() % p == 0).count()
                        == p as usize
                })
            })
            .unwrap();
        assert_eq!(find_prime_cover(p, &planes).unwrap().phi(), first_good);
    }
}

#[test]
fn kernel_index_counts_residues() {
    let n: i64 = 3;
    for idx in 0..n.pow(4) {
        let phi = [27, 9, 3, 1].map(|w| (idx / w) % n);
        if phi.iter().all(|&c| c % n == 0) {
            continue;
        }
        let k = kernel_lattice(&phi, n).unwrap();
        // |Z^4 / K| = |(Z/n)^4| / |K / nZ^4|
        let killed = (0..n.pow(4))
            .filter(|j| {
                let x = [27, 9, 3, 1].map(|w| (j / w) % n);
                (0..4).map(|i| phi[i] * x[i]).sum::<i64>() % n == 0
            })
            .count() as i64;
        assert_eq!(lattice_index(&k).unwrap(), n.pow(4) / killed);
        for r in 0..4 {
            let row = k.row(r);
            assert_eq!((0..4).map(|i| phi[i] * row[i]).sum::<i64>().rem_euclid(n), 0);
        }
    }
}

#[test]
fn lattice_intersection_membership() {
    let phi: CoverHom = CoverHom::new(6, [1, 2, 3, 5]).unwrap();
    let k = kernel_lattice(&phi.phi(), 6).unwrap();
    for plane in hirzebruch_planes() {
        let meet = lattice_intersection(&k, &plane).unwrap();
        let [u, v] = plane.basis();
        for a in -8i64..=8 {
            for b in -8i64..=8 {
                let x = [0, 1, 2, 3].map(|i| a * u[i] + b * v[i]);
                let in_k = phi.eval(&x).unwrap() == 0;
                assert_eq!(meet.contains(&x).unwrap(), in_k, "{x:?}");
            }
        }
    }
}

#[test]
fn hnf_of_kernel_is_row_equivalent_to_brute_basis() {
    // (1,0,0,0) mod e: the kernel is e Z + Z^3
    for e in 2..7 {
        let k = kernel_lattice(&[1, 0, 0, 0], e).unwrap();
        assert_eq!(k, hnf(&IntMatrix::diagonal(&[e, 1, 1, 1])).unwrap());
    }
}

#[test]
fn cyclic_cover_agrees_with_prime_parts() {
    let planes = hirzebruch_planes();
    let phi = find_cyclic_cover(6, &planes).unwrap();
    for p in [2, 3] {
        let reduced = phi.phi().map(|c| c % p);
        let phi_p = CoverHom::new(p, reduced).unwrap();
        for plane in &planes {
            assert_eq!(component_count(&phi_p, plane).unwrap(), 1);
        }
    }
    // and the single cover gives the same numbers as X_6
    let x = build_xe(6).unwrap();
    assert_eq!(x.cover, phi);
    assert!(x.config.pairwise_intersections().unwrap().iter().all(|p| p.number == 6));
}
