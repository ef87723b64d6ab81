//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits nonzero if any fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cuspzeros_cli::cuspzeros::delta::{arc_real, corner_derivatives, m_main, p_main, WeightPair};
use cuspzeros_cli::cuspzeros::eisenstein::{
    eval_ek_lattice, fourier_e_minus_one, gk, gk_small_y, gk_theta, jacobi_theta, phi0, phi1, ThetaArgs,
    UpperHalfPoint,
};
use cuspzeros_cli::cuspzeros::zeros::{
    arc_sample_points, count_arc_zeros, count_side_zeros, side_sample_points, stabilization_point, FindingKind,
    ScanConfig,
};
use cuspzeros_cli::scan::{cmd_scan, scan_pairs, PairResult};
use cuspzeros_cli::table::{diffs, table_cells};
use cuspzeros_cli::RunConfig;

const TABLE_BUDGET: Duration = Duration::from_secs(5 * 60);
const VALENCE_BUDGET: Duration = Duration::from_secs(30 * 60);
const ARC_BOUND: [f64; 3] = [1.5, 0.8, 0.31];
const SIDE_BOUND: f64 = 0.17;
const ARC_SANDWICH: f64 = 0.091;
const ENV_CONST: f64 = 10.0;
const CROSS_REL: f64 = 1e-8;
const MODULARITY_REL: f64 = 1e-10;
const FD_REL: f64 = 1e-4;
const FD_STEP: f64 = 1e-4;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn grid() -> Vec<WeightPair> {
    scan_pairs("14..100".parse().unwrap(), "14..100".parse().unwrap(), 400)
}

fn run_config() -> RunConfig {
    let jobs = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    RunConfig { jobs, ..Default::default() }
}

fn c1_tables() -> Outcome {
    let t = Instant::now();
    let cfg = run_config();
    let mut bad = vec![];
    let mut cells = 0;
    for which in 1..=3 {
        match table_cells(which, &cfg) {
            Ok(c) => {
                cells += c.len();
                bad.extend(diffs(&c));
            }
            Err(e) => return outcome(false, format!("table {which}: {e}")),
        }
    }
    let el = t.elapsed();
    let listing: Vec<String> = bad.iter().map(|c| format!("T{}({},{})={}!={}", c.table, c.k, c.l, c.value, c.expected)).collect();
    outcome(
        bad.is_empty() && el < TABLE_BUDGET,
        format!("{}/{} cells match in {:.1}s {}", cells - bad.len(), cells, el.as_secs_f64(), listing.join(" ")),
    )
}

fn c2_valence(results: &[PairResult], el: Duration) -> Outcome {
    let mut fails = vec![];
    for r in results {
        match r {
            PairResult::Report(r) => {
                let lhs = 12 * (r.a + r.b) as i64 + 6 * r.v_i as i64 + 4 * r.v_rho as i64 + 12;
                if !r.valence_ok || lhs != r.wp.w() as i64 {
                    fails.push(format!("{}: A={} B={}", r.wp, r.a, r.b));
                }
            }
            PairResult::Error(e) => fails.push(format!("{}: {}", e.wp, e.error)),
        }
    }
    outcome(
        fails.is_empty() && el < VALENCE_BUDGET,
        format!("{} pairs, {} failures in {:.1}s {}", results.len(), fails.len(), el.as_secs_f64(), fails.join("; ")),
    )
}

fn c3_stabilization() -> Outcome {
    let sc = ScanConfig::default();
    let b = |k, l| count_side_zeros(WeightPair::new(k, l).unwrap(), &sc).map(|s| s.count);
    let a = |k, l| count_arc_zeros(WeightPair::new(k, l).unwrap(), &sc).map(|s| s.count);
    let run = || -> cuspzeros_cli::cuspzeros::Result<Vec<(String, i64, i64)>> {
        Ok(vec![
            ("ceil sp_2(42)".into(), stabilization_point(42, 2).ceil() as i64, 57),
            ("ceil sp_0(22)".into(), stabilization_point(22, 0).ceil() as i64, 81),
            ("B(56,42)".into(), b(56, 42)? as i64, 5),
            ("B(68,42)".into(), b(68, 42)? as i64, 6),
            ("B(80,22)".into(), b(80, 22)? as i64, 3),
            ("B(82,22)".into(), b(82, 22)? as i64, 3),
            ("A(82,22)".into(), a(82, 22)? as i64, 4),
            ("A(70,22)".into(), a(70, 22)? as i64, 4),
        ])
    };
    match run() {
        Ok(v) => {
            let bad: Vec<String> = v.iter().filter(|x| x.1 != x.2).map(|x| format!("{}={} (want {})", x.0, x.1, x.2)).collect();
            outcome(bad.is_empty(), format!("{} values checked {}", v.len(), bad.join(" ")))
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

fn c4_samples() -> Outcome {
    let (mut checked, mut bad) = (0, vec![]);
    let (mut min_arc, mut min_side) = ([f64::INFINITY; 3], f64::INFINITY);
    for wp in grid() {
        let row = (wp.l % 6 / 2) as usize;
        for (m, th) in arc_sample_points(wp) {
            let v = if m % 2 == 0 { 1.0 } else { -1.0 } * m_main(wp, th);
            checked += 1;
            min_arc[row] = min_arc[row].min(v);
            if v < ARC_BOUND[row] {
                bad.push(format!("M{wp} m={m}: {v:.3}"));
            }
        }
        for (d, th) in side_sample_points(wp.l) {
            let v = if d % 2 == 0 { 1.0 } else { -1.0 } * p_main(wp, th);
            checked += 1;
            min_side = min_side.min(v);
            if v < SIDE_BOUND {
                bad.push(format!("P{wp} d={d}: {v:.3}"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{checked} sample points, {} violations; minima arc {:.3}/{:.3}/{:.3}, side {:.3} {}",
            bad.len(),
            min_arc[0],
            min_arc[1],
            min_arc[2],
            min_side,
            bad.iter().take(10).cloned().collect::<Vec<_>>().join("; ")
        ),
    )
}

fn sandwich_pairs() -> Vec<WeightPair> {
    let mut v = vec![];
    for l in [14u32, 20, 28, 36, 44, 60] {
        for dk in [0u32, 12, 26, 40, 80] {
            v.push(WeightPair::new(l + dk, l).unwrap());
        }
    }
    v
}

fn c5_sandwiches() -> Outcome {
    let mut arc_bad = 0;
    let mut arc_max: f64 = 0.0;
    let pairs = sandwich_pairs();
    for &wp in &pairs {
        for i in 1..=500 {
            let th = PI / 3.0 + (PI / 6.0) * i as f64 / 501.0;
            let Ok(v) = arc_real(wp, th) else {
                arc_bad += 1;
                continue;
            };
            let d = (v - m_main(wp, th)).abs();
            arc_max = arc_max.max(d);
            if d > ARC_SANDWICH {
                arc_bad += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut small_bad, mut theta_bad, mut n) = (0, 0, 0);
    let (mut small_ratio, mut theta_ratio): (f64, f64) = (0.0, 0.0);
    for k in [200u32, 300, 400] {
        let kf = k as f64;
        let env_small = ENV_CONST * (-kf.powf(1.0 / 6.0)).exp();
        for _ in 0..50 {
            let x = rng.gen_range(-0.5..0.5);
            let y = rng.gen_range((1.0 - x * x as f64).sqrt()..kf.powf(0.4));
            let z = UpperHalfPoint::new(x, y).unwrap();
            let d = (gk(k, z).unwrap() - gk_small_y(k, z)).norm();
            small_ratio = small_ratio.max(d / env_small);
            small_bad += (d > env_small) as usize;
            let y = rng.gen_range(kf.powf(0.4)..kf.powf(2.0 / 3.0));
            let z = UpperHalfPoint::new(x, y).unwrap();
            let env = ENV_CONST * y / kf.powf(2.0 / 3.0);
            let d = (gk(k, z).unwrap() - gk_theta(k, z)).norm();
            theta_ratio = theta_ratio.max(d / env);
            theta_bad += (d > env) as usize;
            n += 2;
        }
    }
    outcome(
        arc_bad == 0 && small_bad == 0 && theta_bad == 0,
        format!(
            "arc: {} pairs x 500 points, max |diff| {arc_max:.4}, {arc_bad} violations; regimes: {n} points, \
             {small_bad} small-y and {theta_bad} theta violations, max error/envelope {small_ratio:.2e} / {theta_ratio:.2e}",
            pairs.len()
        ),
    )
}

fn c6_cross() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut bad, mut worst) = (vec![], 0.0f64);
    for _ in 0..200 {
        let k = 2 * rng.gen_range(4u32..=30);
        let x = rng.gen_range(-0.5..0.5);
        let y = rng.gen_range(1.0..20.0);
        let z = UpperHalfPoint::new(x, y).unwrap();
        let (el, _) = eval_ek_lattice(k, z, 1e-13).unwrap();
        let mut c = 8.0;
        let ef = loop {
            let (s, lt) = fourier_e_minus_one(k, z, c).unwrap();
            if lt < -40.0 || c > 200.0 {
                break Complex64::new(1.0, 0.0) + s.to_complex();
            }
            c *= 2.0;
        };
        let rel = (el - ef).norm() / el.norm();
        worst = worst.max(rel);
        if rel > CROSS_REL {
            bad.push(format!("k={k} z={x:.3}+{y:.3}i rel={rel:.2e}"));
        }
    }
    outcome(bad.is_empty(), format!("200 points, worst relative deviation {worst:.2e} {}", bad.join("; ")))
}

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    // f(lo) < 0 < f(hi)
    for _ in 0..100 {
        let m = 0.5 * (lo + hi);
        if f(m) < 0.0 {
            lo = m;
        } else {
            hi = m;
        }
    }
    0.5 * (lo + hi)
}

fn c7_theta() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let tau = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(0.1..10.0));
        let w = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let lhs = jacobi_theta(ThetaArgs::new(w / tau, -1.0 / tau).unwrap(), 1e-17).unwrap();
        let pre = (-Complex64::i() * tau).sqrt() * (Complex64::new(0.0, PI) * w * w / tau).exp();
        let rhs = pre * jacobi_theta(ThetaArgs::new(w, tau).unwrap(), 1e-17).unwrap();
        worst = worst.max((lhs - rhs).norm() / rhs.norm());
    }
    // {Phi_0 < 2} = (0, r0) since Phi_0 increases; {Phi_1 < 1} = (r1, inf) since Phi_1 decreases
    let r0 = bisect(|r| phi0(r).unwrap() - 2.0, 0.05, 100.0);
    let r1 = bisect(|r| 1.0 - phi1(r).unwrap(), 0.01, 10.0);
    let overlap = r1 < r0 && r1 < 2.0 && 2.0 < r0;
    outcome(
        worst < MODULARITY_REL && overlap,
        format!("modularity residual {worst:.2e}; overlap ({r1:.4}, {r0:.4})"),
    )
}

fn d1(f: impl Fn(f64) -> f64, x: f64) -> f64 {
    (f(x + FD_STEP) - f(x - FD_STEP)) / (2.0 * FD_STEP)
}

fn d2(f: impl Fn(f64) -> f64, x: f64) -> f64 {
    (f(x + FD_STEP) - 2.0 * f(x) + f(x - FD_STEP)) / (FD_STEP * FD_STEP)
}

fn c8_corner() -> Outcome {
    let c = PI / 3.0;
    let close = |a: f64, b: f64| (a - b).abs() <= FD_REL * b.abs().max(1.0);
    let (mut pairs, mut forms, mut bad) = (0, 0, vec![]);
    'outer: for l in (14..=60).step_by(2) {
        for k in (l..=l + 48).step_by(2) {
            let wp = WeightPair::new(k, l).unwrap();
            let Ok(cd) = corner_derivatives(wp) else { continue };
            pairs += 1;
            let m = |t: f64| m_main(wp, t);
            let p = |t: f64| p_main(wp, t);
            for (name, v, fd) in [
                ("P'", cd.p1, cd.p1.map(|_| d1(p, c))),
                ("M'", cd.m1, cd.m1.map(|_| d1(m, c))),
                ("P''", cd.p2, cd.p2.map(|_| d2(p, c))),
                ("M''", cd.m2, cd.m2.map(|_| d2(m, c))),
            ] {
                if let (Some(v), Some(fd)) = (v, fd) {
                    forms += 1;
                    if !close(v, fd) {
                        bad.push(format!("{name}{wp}: {v} vs {fd}"));
                    }
                }
            }
            if pairs >= 30 {
                break 'outer;
            }
        }
    }
    outcome(bad.is_empty() && pairs >= 30, format!("{pairs} pairs, {forms} closed forms, {} mismatches {}", bad.len(), bad.join("; ")))
}

fn c9_n_zero() -> Outcome {
    let sc = ScanConfig::default();
    let mut bad = vec![];
    let mut n = 0;
    for l in (40..=100).step_by(2) {
        for dk in [0u32, 2, 4, 6, 8, 10] {
            let wp = WeightPair::new(l + dk, l).unwrap();
            n += 1;
            let want = (dk == 8) as usize;
            match count_arc_zeros(wp, &sc) {
                Ok(s) if s.count == want => {}
                Ok(s) => bad.push(format!("A{wp}={}", s.count)),
                Err(e) => bad.push(format!("{wp}: {e}")),
            }
        }
    }
    outcome(bad.is_empty(), format!("{n} pairs, {} mismatches {}", bad.len(), bad.join("; ")))
}

fn c10_interior(results: &[PairResult]) -> Outcome {
    let mut bad = vec![];
    let mut minima = 0;
    for r in results {
        if let PairResult::Report(r) = r {
            let Some(i) = &r.interior else {
                bad.push(format!("{}: no interior report", r.wp));
                continue;
            };
            minima += i.minima_checked;
            if i.winding != Some(0) || !i.interior_zeros.is_empty() {
                bad.push(format!("{}: winding {:?}, zeros {:?}", r.wp, i.winding, i.interior_zeros));
            }
            for f in &r.findings {
                if matches!(f.kind, FindingKind::InteriorZero | FindingKind::InteriorUnresolved) {
                    bad.push(format!("{}: {}", r.wp, f.message));
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{} pairs, winding 0 everywhere: {}, {minima} grid minima polished {}", results.len(), bad.is_empty(), bad.join("; ")),
    )
}

fn report(n: u32, name: &str, t: Instant, o: &Outcome) {
    let tag = if o.pass { "PASS" } else { "FAIL" };
    println!("criterion {n:>2} [{tag}] {name}: {} ({:.1}s)", o.detail.trim_end(), t.elapsed().as_secs_f64());
}

fn main() -> ExitCode {
    // `cargo test -- --list` and filters: behave like an ordinary harness when listing
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return ExitCode::SUCCESS;
    }
    let mut all = true;
    let mut check = |n: u32, name: &str, f: &dyn Fn() -> Outcome| {
        let t = Instant::now();
        let o = f();
        report(n, name, t, &o);
        all &= o.pass;
    };
    check(1, "table reproduction", &c1_tables);
    let t = Instant::now();
    let results = cmd_scan(&grid(), &run_config(), true).expect("thread pool");
    let el = t.elapsed();
    check(2, "valence audit 14 <= l <= k <= 100", &|| c2_valence(&results, el));
    check(3, "stabilization", &c3_stabilization);
    check(4, "sample-point bounds", &c4_samples);
    check(5, "approximation sandwiches", &c5_sandwiches);
    check(6, "lattice vs Fourier", &c6_cross);
    check(7, "theta modularity and Phi overlap", &c7_theta);
    check(8, "corner derivatives", &c8_corner);
    check(9, "n = 0 arc counts", &c9_n_zero);
    check(10, "interior zero hunt", &|| c10_interior(&results));
    println!("acceptance: {}", if all { "all criteria pass" } else { "FAILURES" });
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
