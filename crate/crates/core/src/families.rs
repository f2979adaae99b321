//! Builders for the named configurations.
//!
//! Coordinates: a point of `C/Λ_z × C/Λ_w` is written in the real basis
//! `(z-basis, w-basis)` of `Λ_z ⊕ Λ_w`, with `Λ_w = Z[1, ζ]`,
//! `ζ = e^{iπ/3}` and `ζ² = ζ − 1`. For Hirzebruch's surface `Λ_z = Z[1, ζ]`
//! as well; for `A_e` the z-factor carries `Λ_z = Z[e, ζ]`, which is the
//! only reading under which the `e` verticals `z = k` are distinct.
//!
//! Every builder recomputes incidences with the point solver and checks
//! them against the expected shape; a mismatch is an error, never patched.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::calculus::{blow_up_all, log_bmy, log_canonical_sq, remove_divisor, BlownPair};
use crate::covers::{apply_cover, component_count, find_cyclic_cover, CoverHom};
use crate::error::{Error, Result};
use crate::lattice::{intersection_points, kernel_lattice, lattice_intersection, rebase, transverse_index, Plane, RatVec4, TorusPoint, TranslatedSubtorus};
use crate::numbers::{mul, CharNumbers, CuspedManifold, Rational, Status, Verdict};

/// Multiplication by ζ on `Z[1, ζ]`, rows are images of `1` and `ζ`.
pub const ZETA: [[i64; 2]; 2] = [[0, 1], [-1, 1]];
const ONE: [[i64; 2]; 2] = [[1, 0], [0, 1]];
const ZERO: [[i64; 2]; 2] = [[0, 0], [0, 0]];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Curve {
    pub id: String,
    pub locus: TranslatedSubtorus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidencePoint {
    pub point: TorusPoint,
    pub curves: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairIntersection {
    pub a: String,
    pub b: String,
    pub number: i64,
}

/// An abelian surface with a configuration of elliptic curves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianConfig {
    labels: [String; 4],
    curves: Vec<Curve>,
    chars: CharNumbers,
    /// Degree over the configuration this one was pulled back from.
    degree: i64,
    incidences: Vec<IncidencePoint>,
}

impl AbelianConfig {
    pub fn new(labels: [String; 4], curves: Vec<Curve>) -> Result<Self> {
        Self::with_cover_data(labels, curves, CharNumbers::compact(0, 0)?, 1)
    }

    pub(crate) fn with_cover_data(
        labels: [String; 4],
        curves: Vec<Curve>,
        chars: CharNumbers,
        degree: i64,
    ) -> Result<Self> {
        if chars != CharNumbers::compact(0, 0)? {
            return Err(Error::Verification(format!("abelian surface with {chars}")));
        }
        let incidences = compute_incidences(&curves)?;
        Ok(AbelianConfig { labels, curves, chars, degree, incidences })
    }

    pub fn labels(&self) -> &[String; 4] {
        &self.labels
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn chars(&self) -> &CharNumbers {
        &self.chars
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn incidences(&self) -> &[IncidencePoint] {
        &self.incidences
    }

    pub fn planes(&self) -> Vec<Plane> {
        self.curves.iter().map(|c| *c.locus.plane()).collect()
    }

    pub fn four_planes(&self) -> Result<[Plane; 4]> {
        self.planes()
            .try_into()
            .map_err(|v: Vec<Plane>| Error::Shape(format!("expected 4 curves, found {}", v.len())))
    }

    /// Intersection number of every pair of curves (0 for disjoint
    /// parallel curves).
    pub fn pairwise_intersections(&self) -> Result<Vec<PairIntersection>> {
        let mut out = Vec::new();
        for (i, a) in self.curves.iter().enumerate() {
            for b in &self.curves[i + 1..] {
                let number = if a.locus.plane().is_transverse_to(b.locus.plane())? {
                    transverse_index(a.locus.plane(), b.locus.plane())?
                } else {
                    0
                };
                out.push(PairIntersection { a: a.id.clone(), b: b.id.clone(), number });
            }
        }
        Ok(out)
    }
}

fn compute_incidences(curves: &[Curve]) -> Result<Vec<IncidencePoint>> {
    let mut by_point: BTreeMap<TorusPoint, BTreeSet<usize>> = BTreeMap::new();
    for (i, a) in curves.iter().enumerate() {
        for (j, b) in curves.iter().enumerate().skip(i + 1) {
            let (pa, pb) = (a.locus.plane(), b.locus.plane());
            if pa.is_transverse_to(pb)? {
                for pt in intersection_points(&a.locus, &b.locus)? {
                    by_point.entry(pt).or_default().extend([i, j]);
                }
            } else if pa == pb {
                if a.locus.coincides_with(&b.locus)? {
                    return Err(Error::CoincidentCurves(a.id.clone(), b.id.clone()));
                }
            } else {
                return Err(Error::NotTransverse);
            }
        }
    }
    Ok(by_point
        .into_iter()
        .map(|(point, ix)| IncidencePoint {
            point,
            curves: ix.into_iter().map(|i| curves[i].id.clone()).collect(),
        })
        .collect())
}

/// Homology plane of the graph `{w = α z}` where `z` ranges over `Λ_z`,
/// given by `z_in_w` (rows: the basis of `Λ_z` written in `Z[1, ζ]`).
fn graph_plane(z_in_w: [[i64; 2]; 2], alpha: [[i64; 2]; 2]) -> Result<Plane> {
    let mut rows = [[0i64; 4]; 2];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = 1;
        for k in 0..2 {
            let mut acc = 0;
            for m in 0..2 {
                acc += mul(z_in_w[i][m], alpha[m][k])?;
            }
            row[2 + k] = acc;
        }
    }
    Plane::new(rows[0], rows[1])
}

fn vertical_plane() -> Plane {
    Plane::new([0, 0, 1, 0], [0, 0, 0, 1]).expect("coordinate plane")
}

/// Planes of `C₀ = {w=0}`, `C_∞ = {z=0}`, `C₁ = {w=z}`, `C_ζ = {w=ζz}` on
/// `E_ζ × E_ζ`.
pub fn hirzebruch_planes() -> [Plane; 4] {
    let z_in_w = ONE;
    [
        graph_plane(z_in_w, ZERO).expect("w=0"),
        vertical_plane(),
        graph_plane(z_in_w, ONE).expect("w=z"),
        graph_plane(z_in_w, ZETA).expect("w=zeta z"),
    ]
}

pub const HIRZEBRUCH_IDS: [&str; 4] = ["C0", "Cinf", "C1", "Czeta"];

fn labels(z: [&str; 2]) -> [String; 4] {
    [format!("z:{}", z[0]), format!("z:{}", z[1]), "w:1".into(), "w:zeta".into()]
}

/// Hirzebruch's four curves through the origin of `E_ζ × E_ζ`.
pub fn hirzebruch_base() -> Result<AbelianConfig> {
    let curves = HIRZEBRUCH_IDS
        .iter()
        .zip(hirzebruch_planes())
        .map(|(id, plane)| Ok(Curve { id: id.to_string(), locus: TranslatedSubtorus::through_origin(plane)? }))
        .collect::<Result<Vec<_>>>()?;
    let config = AbelianConfig::new(labels(["1", "zeta"]), curves)?;
    let expected = [IncidencePoint {
        point: TorusPoint::origin(),
        curves: HIRZEBRUCH_IDS.iter().map(|s| s.to_string()).collect(),
    }];
    if config.incidences() != expected {
        return Err(Error::Verification(format!(
            "Hirzebruch curves should meet only at the origin, solver found {:?}",
            config.incidences()
        )));
    }
    Ok(config)
}

/// `X_e`: a cyclic `e`-fold cover of Hirzebruch's configuration, blown up
/// at its `e` quadruple points, with the four curves removed.
#[derive(Debug, Clone, Serialize)]
pub struct XeFamily {
    pub e: i64,
    pub cover: CoverHom,
    pub config: AbelianConfig,
    pub pair: BlownPair,
    pub log_bmy: Verdict,
    pub cusped: CuspedManifold,
}

pub fn build_xe(e: i64) -> Result<XeFamily> {
    if e < 1 {
        return Err(Error::BadModulus(e));
    }
    let base = hirzebruch_base()?;
    let cover = if e == 1 {
        CoverHom::trivial()
    } else {
        find_cyclic_cover(e, &base.four_planes()?)?
    };
    let config = apply_cover(&base, &cover)?;

    let quadruple = config.incidences().iter().all(|inc| inc.curves.len() == 4);
    if config.incidences().len() as i64 != e || !quadruple {
        return Err(Error::Verification(format!(
            "expected {e} quadruple points, found {:?}",
            config.incidences()
        )));
    }
    if let Some(bad) = config.pairwise_intersections()?.iter().find(|p| p.number != e) {
        return Err(Error::Verification(format!("{} . {} = {}, expected {e}", bad.a, bad.b, bad.number)));
    }

    let pair = blow_up_all(&BlownPair::from_config(&config)?)?;
    if pair.chars() != &CharNumbers::new(e, -e, Some(-e))? || pair.curves().iter().any(|c| c.self_int != -e) {
        return Err(Error::Verification(format!("blown-up X_e numbers wrong: {}", pair.chars())));
    }
    let log_bmy = log_bmy(&pair)?;
    if log_bmy.status != Status::Equality {
        return Err(Error::Verification(format!("log-BMY for X_{e}: {log_bmy}")));
    }
    let cusped = remove_divisor(&pair)?;
    Ok(XeFamily { e, cover, config, pair, log_bmy, cusped })
}

/// The configuration on `A_e = C/Z[e,ζ] × C/Z[1,ζ]` (z-factor first):
/// `{w=0}`, `{w=z}`, `{w=ζz}` and the verticals `{z=k}`, `k = 0..e−1`.
pub fn ae_configuration(e: i64) -> Result<AbelianConfig> {
    if e < 1 {
        return Err(Error::BadModulus(e));
    }
    // basis (e, ζ) of Z[e, ζ] written in (1, ζ)
    let z_in_w = [[e, 0], [0, 1]];
    let mut curves = vec![
        Curve { id: "w=0".into(), locus: TranslatedSubtorus::through_origin(graph_plane(z_in_w, ZERO)?)? },
        Curve { id: "w=z".into(), locus: TranslatedSubtorus::through_origin(graph_plane(z_in_w, ONE)?)? },
        Curve { id: "w=zeta*z".into(), locus: TranslatedSubtorus::through_origin(graph_plane(z_in_w, ZETA)?)? },
    ];
    for k in 0..e {
        // z = k is (k/e)·e in the basis (e, ζ)
        let offset: RatVec4 = [Rational::new(k, e)?, Rational::ZERO, Rational::ZERO, Rational::ZERO];
        curves.push(Curve { id: format!("z={k}"), locus: TranslatedSubtorus::new(vertical_plane(), offset)? });
    }
    AbelianConfig::new(labels(["e", "zeta"]), curves)
}

/// `Y_e = Z_e ∖ D^e` with `Z_e` the blow-up of `A_e` at the `e` points.
#[derive(Debug, Clone, Serialize)]
pub struct YeFamily {
    pub e: i64,
    pub config: AbelianConfig,
    pub pair: BlownPair,
    pub log_canonical_sq: i64,
    pub log_bmy: Verdict,
    pub cusped: CuspedManifold,
}

impl YeFamily {
    /// Indices of the three cusps coming from `{w=0}`, `{w=z}`, `{w=ζz}`.
    pub fn diagonal_cusps(&self) -> [usize; 3] {
        [0, 1, 2]
    }
}

pub fn build_ye(e: i64) -> Result<YeFamily> {
    let config = ae_configuration(e)?;
    let diagonals = ["w=0", "w=z", "w=zeta*z"];
    let mut verticals_hit = BTreeSet::new();
    for inc in config.incidences() {
        let verticals: Vec<&String> = inc.curves.iter().filter(|c| c.starts_with("z=")).collect();
        let all_diagonals = diagonals.iter().all(|d| inc.curves.iter().any(|c| c == d));
        if inc.curves.len() != 4 || verticals.len() != 1 || !all_diagonals {
            return Err(Error::Verification(format!("unexpected incidence at {}: {:?}", inc.point, inc.curves)));
        }
        verticals_hit.insert(verticals[0].clone());
    }
    if config.incidences().len() as i64 != e || verticals_hit.len() as i64 != e {
        return Err(Error::Verification(format!(
            "expected {e} points each on one vertical, found {}",
            config.incidences().len()
        )));
    }

    let pair = blow_up_all(&BlownPair::from_config(&config)?)?;
    let expected: Vec<i64> = (0..3).map(|_| -e).chain((0..e).map(|_| -1)).collect();
    let found: Vec<i64> = pair.curves().iter().map(|c| c.self_int).collect();
    if found != expected || pair.chars() != &CharNumbers::new(e, -e, Some(-e))? {
        return Err(Error::Verification(format!("Z_{e}: {} with self-intersections {found:?}", pair.chars())));
    }
    let log_canonical_sq = log_canonical_sq(&pair)?;
    if log_canonical_sq != 3 * e {
        return Err(Error::Verification(format!("(K+D)^2 = {log_canonical_sq}, expected {}", 3 * e)));
    }
    let log_bmy = log_bmy(&pair)?;
    if log_bmy.status != Status::Equality {
        return Err(Error::Verification(format!("log-BMY for Z_{e}: {log_bmy}")));
    }
    let cusped = remove_divisor(&pair)?;
    Ok(YeFamily { e, config, pair, log_canonical_sq, log_bmy, cusped })
}

/// `A_e` seen as the cyclic cover of Hirzebruch's surface given by
/// `φ = (1,0,0,0) mod e`: three curves lift connectedly, `C_∞` splits into
/// the `e` verticals.
#[derive(Debug, Clone, Serialize)]
pub struct CoverViewpoint {
    pub e: i64,
    pub phi: CoverHom,
    /// Component counts of `C0, C1, Czeta, Cinf` in that order.
    pub components: Vec<(String, i64)>,
    pub verticals_in_ye: usize,
    /// The lifted diagonal planes, rebased to the kernel, equal the planes
    /// used by the `A_e` builder.
    pub diagonal_planes_match: bool,
    pub consistent: bool,
}

pub fn verify_cover_viewpoint(e: i64) -> Result<CoverViewpoint> {
    let phi = CoverHom::new(e, [1, 0, 0, 0])?;
    let [c0, cinf, c1, czeta] = hirzebruch_planes();
    let order = [("C0", c0), ("C1", c1), ("Czeta", czeta), ("Cinf", cinf)];
    let components = order
        .iter()
        .map(|(id, p)| Ok((id.to_string(), component_count(&phi, p)?)))
        .collect::<Result<Vec<_>>>()?;

    let ye = ae_configuration(e)?;
    let verticals_in_ye = ye.curves().iter().filter(|c| c.id.starts_with("z=")).count();

    let k = kernel_lattice(&phi.phi(), e)?;
    let coords = rebase(&k)?;
    let mut diagonal_planes_match = true;
    for ((_, p), curve) in order[..3].iter().zip(ye.curves()) {
        let lifted = coords.plane_to_standard(&lattice_intersection(&k, p)?)?;
        diagonal_planes_match &= &lifted == curve.locus.plane();
    }

    let counts: Vec<i64> = components.iter().map(|(_, c)| *c).collect();
    let consistent = counts == [1, 1, 1, e] && verticals_in_ye as i64 == e && diagonal_planes_match;
    Ok(CoverViewpoint { e, phi, components, verticals_in_ye, diagonal_planes_match, consistent })
}
