//! Cyclic étale covers of abelian surfaces.
//!
//! A degree-`n` cyclic cover of `R⁴/Z⁴` is the torus `R⁴/K` where
//! `K = ker(φ: Z⁴ → Z/n)`. The preimage of a subtorus with homology plane
//! `P` has `[Z/n : φ(P)]` components, so the curves we care about stay
//! connected exactly when `φ(P)` is all of `Z/n`.
//!
//! The prime case is an exhaustive search of the hyperplanes of `F_p⁴`
//! (`p³+p²+p+1` of them, each represented by its covector with leading
//! coordinate 1) and returns the lexicographically first good one.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{AbelianConfig, Curve};
use crate::lattice::{kernel_lattice, lattice_intersection, rebase, IntMatrix, Plane, TranslatedSubtorus, Vec4};
use crate::numbers::{add, mul};

/// A surjection `φ: Z⁴ → Z/n`, stored as residues in `[0, n)`.
///
/// For prime `n` the first nonzero coordinate is scaled to 1, so two
/// homs with the same kernel compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCoverHom")]
pub struct CoverHom {
    n: i64,
    phi: Vec4,
}

#[derive(Deserialize)]
struct RawCoverHom {
    n: i64,
    phi: Vec4,
}

impl TryFrom<RawCoverHom> for CoverHom {
    type Error = Error;

    fn try_from(raw: RawCoverHom) -> Result<Self> {
        if raw.n == 1 && raw.phi == [0; 4] {
            return Ok(CoverHom::trivial());
        }
        CoverHom::new(raw.n, raw.phi)
    }
}

impl CoverHom {
    pub fn new(n: i64, phi: Vec4) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadModulus(n));
        }
        let mut phi = phi.map(|c| c.mod_floor(&n));
        let g = phi.iter().fold(n, |g, c| g.gcd(c));
        if g != 1 {
            return Err(Error::NotSurjective(n));
        }
        if is_prime(n) {
            let lead = *phi.iter().find(|&&c| c != 0).expect("surjective");
            let inv = inverse_mod(lead, n).expect("unit modulo a prime");
            for c in &mut phi {
                *c = mul(*c, inv)?.mod_floor(&n);
            }
        }
        Ok(CoverHom { n, phi })
    }

    /// The degree-1 cover (identity).
    pub fn trivial() -> Self {
        CoverHom { n: 1, phi: [0; 4] }
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn phi(&self) -> Vec4 {
        self.phi
    }

    pub fn is_trivial(&self) -> bool {
        self.n == 1
    }

    pub fn eval(&self, x: &Vec4) -> Result<i64> {
        let mut acc = 0i64;
        for (a, b) in self.phi.iter().zip(x) {
            acc = add(acc, mul(*a, b.mod_floor(&self.n))?)?.mod_floor(&self.n);
        }
        Ok(acc)
    }

    /// The kernel lattice `K`, i.e. `H₁` of the covering torus.
    pub fn kernel(&self) -> Result<IntMatrix> {
        if self.is_trivial() {
            return Ok(IntMatrix::identity(4));
        }
        kernel_lattice(&self.phi, self.n)
    }
}

impl fmt::Display for CoverHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.phi;
        write!(f, "phi=({a},{b},{c},{d}) mod {}", self.n)
    }
}

/// Number of connected components of the preimage of a subtorus with
/// homology plane `p`: the index of `φ(P)` in `Z/n`.
pub fn component_count(phi: &CoverHom, p: &Plane) -> Result<i64> {
    let [u, v] = p.basis();
    let n = phi.n();
    Ok(n.gcd(&phi.eval(&u)?).gcd(&phi.eval(&v)?))
}

/// Hyperplane counts over `F_p` for four planes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperplaneCensus {
    pub total: i64,
    /// Hyperplanes containing at least one of the planes.
    pub bad: i64,
    pub good: i64,
    pub per_plane_bad: [i64; 4],
}

impl HyperplaneCensus {
    /// The counting lower bound `(p²−3)(p+1)` on good hyperplanes.
    pub fn lower_bound(p: i64) -> i64 {
        (p * p - 3) * (p + 1)
    }
}

pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factors with multiplicity, ascending.
pub fn prime_factors(mut n: i64) -> Vec<i64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        while n % d == 0 {
            out.push(d);
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn inverse_mod(a: i64, n: i64) -> Option<i64> {
    let e = a.extended_gcd(&n);
    (e.gcd == 1).then(|| e.x.mod_floor(&n))
}

/// Covectors in `F_p⁴` whose first nonzero entry is 1, in lexicographic
/// order. One per hyperplane.
pub fn normalized_covectors(p: i64) -> impl Iterator<Item = Vec4> {
    (0..4usize).rev().flat_map(move |lead| {
        let free = 3 - lead;
        let count = p.pow(free as u32);
        (0..count).map(move |mut idx| {
            let mut phi = [0i64; 4];
            phi[lead] = 1;
            for slot in (lead + 1..4).rev() {
                phi[slot] = idx % p;
                idx /= p;
            }
            phi
        })
    })
}

fn residue_dot(phi: &Vec4, x: &Vec4, p: i64) -> i64 {
    let p = i128::from(p);
    let r = phi
        .iter()
        .zip(x)
        .fold(0i128, |acc, (a, b)| (acc + i128::from(*a) * i128::from(*b).rem_euclid(p)).rem_euclid(p));
    r as i64
}

fn contains_plane(phi: &Vec4, plane: &Plane, p: i64) -> bool {
    let [u, v] = plane.basis();
    residue_dot(phi, &u, p) == 0 && residue_dot(phi, &v, p) == 0
}

fn rank_mod_p(plane: &Plane, p: i64) -> usize {
    let [u, v] = plane.basis();
    let nonzero_minor = (0..4).any(|i| {
        (i + 1..4).any(|j| (i128::from(u[i]) * i128::from(v[j]) - i128::from(u[j]) * i128::from(v[i])).rem_euclid(i128::from(p)) != 0)
    });
    if nonzero_minor {
        2
    } else if u.iter().chain(v.iter()).any(|c| c.mod_floor(&p) != 0) {
        1
    } else {
        0
    }
}

fn check_pairwise_transverse(planes: &[Plane; 4]) -> Result<()> {
    for i in 0..4 {
        for j in i + 1..4 {
            if !planes[i].is_transverse_to(&planes[j])? {
                return Err(Error::NotTransverse);
            }
        }
    }
    Ok(())
}

fn check_prime_inputs(p: i64, planes: &[Plane; 4]) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    check_pairwise_transverse(planes)?;
    for (j, plane) in planes.iter().enumerate() {
        if rank_mod_p(plane, p) != 2 {
            return Err(Error::DegenerateModP(j, p));
        }
    }
    Ok(())
}

/// Lexicographically first hyperplane of `F_p⁴` containing none of the
/// four planes, so that `ker φ ∩ P_j` is a line for every `j`.
pub fn find_prime_cover(p: i64, planes: &[Plane; 4]) -> Result<CoverHom> {
    check_prime_inputs(p, planes)?;
    normalized_covectors(p)
        .find(|phi| planes.iter().all(|pl| !contains_plane(phi, pl, p)))
        .map(|phi| CoverHom::new(p, phi))
        .unwrap_or(Err(Error::NoCoverFound(p)))
}

pub fn hyperplane_census(p: i64, planes: &[Plane; 4]) -> Result<HyperplaneCensus> {
    check_prime_inputs(p, planes)?;
    let mut total = 0;
    let mut bad = 0;
    let mut per_plane_bad = [0i64; 4];
    for phi in normalized_covectors(p) {
        total += 1;
        let mut any = false;
        for (j, plane) in planes.iter().enumerate() {
            if contains_plane(&phi, plane, p) {
                per_plane_bad[j] += 1;
                any = true;
            }
        }
        bad += i64::from(any);
    }
    Ok(HyperplaneCensus { total, bad, good: total - bad, per_plane_bad })
}

/// Lexicographically first `φ ∈ (Z/e)⁴` with `φ(P_j) = Z/e` for all four
/// planes.
pub fn find_cyclic_cover(e: i64, planes: &[Plane; 4]) -> Result<CoverHom> {
    if e < 2 {
        return Err(Error::BadModulus(e));
    }
    check_pairwise_transverse(planes)?;
    let bases: Vec<[Vec4; 2]> = planes.iter().map(Plane::basis).collect();
    let total = e.checked_pow(4).ok_or(Error::Overflow)?;
    for mut idx in 0..total {
        let mut phi = [0i64; 4];
        for slot in (0..4).rev() {
            phi[slot] = idx % e;
            idx /= e;
        }
        let good = bases.iter().all(|[u, v]| {
            let a = residue_dot(&phi, u, e);
            let b = residue_dot(&phi, v, e);
            e.gcd(&a).gcd(&b) == 1
        });
        if good {
            return CoverHom::new(e, phi);
        }
    }
    Err(Error::NoCoverFound(e))
}

/// Pulls a configuration back along the cover defined by `phi`.
///
/// Every curve must have connected preimage. The result lives on `K ≅ Z⁴`
/// (HNF basis of `K`), with incidences recomputed from scratch.
pub fn apply_cover(config: &AbelianConfig, phi: &CoverHom) -> Result<AbelianConfig> {
    if phi.is_trivial() {
        return Ok(config.clone());
    }
    for curve in config.curves() {
        if component_count(phi, curve.locus.plane())? != 1 {
            return Err(Error::DisconnectedPreimage(curve.id.clone()));
        }
    }
    let k = phi.kernel()?;
    let coords = rebase(&k)?;
    let curves = config
        .curves()
        .iter()
        .map(|curve| {
            let lifted = lattice_intersection(&k, curve.locus.plane())?;
            let plane = coords.plane_to_standard(&lifted)?;
            let offset = coords.to_standard_rational(curve.locus.offset())?;
            Ok(Curve { id: curve.id.clone(), locus: TranslatedSubtorus::new(plane, offset)? })
        })
        .collect::<Result<Vec<_>>>()?;
    let labels = (0..4)
        .map(|i| {
            let row = coords.basis().row4(i);
            format!("k{}={:?}", i + 1, row)
        })
        .collect::<Vec<_>>()
        .try_into()
        .expect("4 labels");
    AbelianConfig::with_cover_data(
        labels,
        curves,
        config.chars().scaled(phi.n())?,
        mul(config.degree(), phi.n())?,
    )
}

/// Applies one prime cover per entry of `primes`, searching each on the
/// current (rebased) configuration.
pub fn cover_tower(config: &AbelianConfig, primes: &[i64]) -> Result<(AbelianConfig, Vec<CoverHom>)> {
    let mut current = config.clone();
    let mut homs = Vec::with_capacity(primes.len());
    for &p in primes {
        let phi = find_prime_cover(p, &current.four_planes()?)?;
        current = apply_cover(&current, &phi)?;
        homs.push(phi);
    }
    Ok((current, homs))
}
