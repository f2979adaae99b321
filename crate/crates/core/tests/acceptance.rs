//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use dehnfill::calculus::{blow_up_all, fill_cusps, log_bmy, remove_divisor, BlownPair, CuspSelection};
use dehnfill::covers::{
    apply_cover, component_count, cover_tower, find_cyclic_cover, find_prime_cover, hyperplane_census, is_prime,
    prime_factors, HyperplaneCensus,
};
use dehnfill::families::{build_xe, build_ye, hirzebruch_base, hirzebruch_planes, AbelianConfig};
use dehnfill::lattice::{intersection_points, transverse_index};
use dehnfill::obstructions::{dai_wei, hitchin_thorpe, splitting_report, Outcome};
use dehnfill::{CharNumbers, CuspedManifold, Rational, Status};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Option<Duration>);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn tau_from_c1sq(c: &CharNumbers) -> Check {
    let c1sq = c.c1sq().ok_or("missing c1^2")?;
    ensure!(3 * c.tau() == c1sq - 2 * c.chi(), "tau != (c1^2 - 2chi)/3 for {c}");
    Ok(String::new())
}

fn criterion_1() -> Check {
    let base = ok(hirzebruch_base(), "base")?;
    ensure!(base.incidences().len() == 1, "{} multiple points", base.incidences().len());
    ensure!(base.incidences()[0].curves.len() == 4, "point is not quadruple");
    let pair = ok(blow_up_all(&ok(BlownPair::from_config(&base), "pair")?), "blow-up")?;
    let c = pair.chars();
    ensure!((c.chi(), c.c1sq(), c.tau()) == (1, Some(-1), -1), "blown-up numbers {c}");
    ensure!(pair.curves().len() == 4 && pair.curves().iter().all(|k| k.self_int == -1), "self-intersections");
    let v = ok(log_bmy(&pair), "log-BMY")?;
    ensure!(v.status == Status::Equality && v.margin == Rational::ZERO, "log-BMY {v}");
    Ok("one quadruple point; (chi, c1^2, tau) = (1, -1, -1); log-BMY equality".into())
}

fn criterion_2() -> Check {
    for e in 1..=50 {
        let x = ok(build_xe(e), &format!("X_{e}"))?;
        let c = x.pair.chars();
        ensure!(c.chi() == e && c.tau() == -e, "e={e}: pair {c}");
        ensure!(x.cusped.cusps() == [e; 4], "e={e}: cusps {:?}", x.cusped.cusps());
        ensure!(x.log_bmy.status == Status::Equality, "e={e}: log-BMY {}", x.log_bmy);
        let all = ok(CuspSelection::All.resolve(&x.cusped), "select")?;
        let closed = ok(fill_cusps(&x.cusped, &all), "fill")?;
        let ht = ok(hitchin_thorpe(closed.chi(), closed.tau()), "HT")?;
        ensure!(
            ht.status == Status::Violated && ht.margin == Rational::new(-e, 2).unwrap(),
            "e={e}: HT {ht}"
        );
    }
    Ok("e = 1..50: chi = e, tau = -e, cusps [e,e,e,e], log-BMY equality, HT margin -e/2".into())
}

fn criterion_3() -> Check {
    for e in 1..=50 {
        let y = ok(build_ye(e), &format!("Y_{e}"))?;
        ensure!(y.pair.chars().tau() == -e, "e={e}: tau(Z_e) = {}", y.pair.chars().tau());
        ensure!(y.log_canonical_sq == 3 * e, "e={e}: (K+D)^2 = {}", y.log_canonical_sq);
        let mut cusps = vec![e; 3];
        cusps.extend(std::iter::repeat_n(1, e as usize));
        ensure!(y.cusped.cusps() == cusps.as_slice(), "e={e}: cusps {:?}", y.cusped.cusps());
        ensure!(y.cusped.tau() == 3, "e={e}: tau(Y_e) = {}", y.cusped.tau());
        let filled = ok(fill_cusps(&y.cusped, &y.diagonal_cusps()), "fill")?;
        ensure!(filled.chi() == e && filled.tau() == 0, "e={e}: filled chi={} tau={}", filled.chi(), filled.tau());
        let dw = ok(dai_wei(&filled), "Dai-Wei")?;
        ensure!(dw.status == Status::Equality && dw.margin == Rational::ZERO, "e={e}: Dai-Wei {dw}");
        let rep = ok(splitting_report(&filled, &dw), "report")?;
        let expected = if e == 1 { Outcome::NegativeConstantOnly } else { Outcome::RicciFlatSplitting };
        ensure!(rep.outcome == expected && rep.obstructed, "e={e}: outcome {:?}", rep.outcome);
    }
    Ok("e = 1..50: (K+D)^2 = 3e, tau(Y_e) = 3, filled (e, 0) with Dai-Wei equality and the right branch".into())
}

fn criterion_4() -> Check {
    let planes = hirzebruch_planes();
    let mut primes = 0;
    for p in (2..=97).filter(|&p| is_prime(p)) {
        primes += 1;
        let c = ok(hyperplane_census(p, &planes), "census")?;
        ensure!(c.total == p * p * p + p * p + p + 1, "p={p}: total {}", c.total);
        ensure!(c.per_plane_bad == [p + 1; 4], "p={p}: per-plane {:?}", c.per_plane_bad);
        ensure!(c.bad == 4 * (p + 1) && c.good == c.total - c.bad, "p={p}: bad {}", c.bad);
        ensure!(c.good >= HyperplaneCensus::lower_bound(p), "p={p}: good {} below bound", c.good);

        let phi = ok(find_prime_cover(p, &planes), "cover")?;
        for plane in &planes {
            ensure!(ok(component_count(&phi, plane), "count")? == 1, "p={p}: {phi} splits a curve");
            if p <= 13 {
                // count the F_p-points of the plane killed by phi
                let [u, v] = plane.basis();
                let mut zeros = 0;
                for a in 0..p {
                    for b in 0..p {
                        let x: Vec<i64> = (0..4).map(|i| a * u[i] + b * v[i]).collect();
                        let s: i64 = (0..4).map(|i| phi.phi()[i] * x[i]).sum();
                        zeros += i64::from(s.rem_euclid(p) == 0);
                    }
                }
                ensure!(zeros == p, "p={p}: ker phi meets plane in {zeros} points");
            }
        }
    }
    Ok(format!("{primes} primes up to 97: census exact, certificate meets each plane in a line"))
}

fn criterion_5() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let mut max_index = 0;
    for trial in 0..200 {
        let (a, b) = common::random_transverse_pair(&mut rng, 5, i64::MAX);
        let d = ok(transverse_index(a.plane(), b.plane()), "index")?;
        let pts = ok(intersection_points(&a, &b), "points")?;
        ensure!(pts.len() as i64 == d, "trial {trial}: {} points, index {d}", pts.len());
        max_index = max_index.max(d);
    }
    Ok(format!("200 random pairs, point count = |det| (largest {max_index})"))
}

fn remove_fill(pair: &BlownPair, label: &str) -> Check {
    let open = ok(remove_divisor(pair), label)?;
    let all: Vec<usize> = (0..open.cusps().len()).collect();
    let closed = ok(fill_cusps(&open, &all), label)?;
    let c = pair.chars();
    ensure!((closed.chi(), closed.tau()) == (c.chi(), c.tau()), "{label}: {c} came back as ({}, {})", closed.chi(), closed.tau());
    Ok(String::new())
}

fn criterion_6() -> Check {
    let base = ok(hirzebruch_base(), "base")?;
    remove_fill(&ok(blow_up_all(&ok(BlownPair::from_config(&base), "pair")?), "blow-up")?, "Hirzebruch")?;
    for e in 1..=50 {
        remove_fill(&ok(build_xe(e), "X_e")?.pair, &format!("A^{e}"))?;
        remove_fill(&ok(build_ye(e), "Y_e")?.pair, &format!("Z_{e}"))?;
    }
    Ok("Hirzebruch, A^e and Z_e for e <= 50".into())
}

fn intersection_multiset(c: &AbelianConfig) -> Result<Vec<i64>, String> {
    let mut v: Vec<i64> = ok(c.pairwise_intersections(), "intersections")?.iter().map(|p| p.number).collect();
    v.sort_unstable();
    Ok(v)
}

fn criterion_7() -> Check {
    let base = ok(hirzebruch_base(), "base")?;
    let planes = ok(base.four_planes(), "planes")?;
    for e in [2, 3, 4, 6, 9, 12] {
        let (tower, _) = ok(cover_tower(&base, &prime_factors(e)), "tower")?;
        let cyclic = ok(apply_cover(&base, &ok(find_cyclic_cover(e, &planes), "cyclic")?), "apply")?;
        let (t, c) = (intersection_multiset(&tower)?, intersection_multiset(&cyclic)?);
        ensure!(t == c && t == vec![e; 6], "e={e}: tower {t:?} vs cyclic {c:?}");
    }
    Ok("e in {2,3,4,6,9,12}: tower and cyclic cover agree, all numbers e".into())
}

fn criterion_8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    for _ in 0..100 {
        let (chi, tau) = (rng.gen_range(-1000..=1000), rng.gen_range(-1000..=1000));
        let m = ok(CuspedManifold::new(chi, tau, vec![]), "manifold")?;
        let (dw, ht) = (ok(dai_wei(&m), "DW")?, ok(hitchin_thorpe(chi, tau), "HT")?);
        ensure!(dw == ht, "({chi}, {tau}): {dw} vs {ht}");
    }
    let base = ok(hirzebruch_base(), "base")?;
    tau_from_c1sq(base.chars())?;
    tau_from_c1sq(ok(blow_up_all(&ok(BlownPair::from_config(&base), "pair")?), "blow-up")?.chars())?;
    let mut objects = 2;
    for e in 1..=50 {
        let x = ok(build_xe(e), "X_e")?;
        let y = ok(build_ye(e), "Y_e")?;
        for c in [x.config.chars(), x.pair.chars(), y.config.chars(), y.pair.chars()] {
            tau_from_c1sq(c)?;
            objects += 1;
        }
    }
    Ok(format!("100 random closed cases agree; tau = (c1^2 - 2chi)/3 on {objects} compact objects"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("Hirzebruch base", criterion_1, Some(Duration::from_secs(1))),
        ("X_e family", criterion_2, Some(Duration::from_secs(30))),
        ("Y_e family", criterion_3, Some(Duration::from_secs(30))),
        ("hyperplane census", criterion_4, Some(Duration::from_secs(60))),
        ("point solver vs determinant", criterion_5, Some(Duration::from_secs(10))),
        ("remove then fill", criterion_6, None),
        ("tower vs cyclic cover", criterion_7, None),
        ("consistency", criterion_8, None),
    ];
    let mut failed = 0;
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(l)) if took > *l => Err(format!("took {took:.2?}, limit {l:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(msg) => println!("PASS criterion {} ({name}) [{took:.2?}]: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {} ({name}) [{took:.2?}]: {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
