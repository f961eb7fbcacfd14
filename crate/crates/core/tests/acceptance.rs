//! The fourteen acceptance criteria, one line each. Runs without the libtest
//! harness so every line is printed; exits nonzero if any criterion fails.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::time::{Duration, Instant};

use menger::convexsets::{diameter, midpoint_set, unique_midpoint, MidConvention, SetRep};
use menger::fixedpoint::{find_fixed_point, semigroup_compose, verify_hybrid, HybridParams, MappingSpec, SolverConfig};
use menger::nested::{build_shrinking_family, cantor_point, common_point};
use menger::properties::{
    check_diameter_strict, check_homogeneity, check_property, estimate_uniform_modulus, property_a_instance, reproduce,
    Inputs, Property,
};
use menger::sampling::SamplePlan;
use menger::spaces::{Exponent, MetricSpace, Point, Scalar};
use num_rational::BigRational;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn within(elapsed: Duration, limit: Duration) -> Check {
    ensure!(elapsed < limit, "took {elapsed:.2?}, limit {limit:?}");
    Ok(String::new())
}

fn euclid(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

fn c1_linf_box() -> Check {
    let start = Instant::now();
    let space = MetricSpace::linf(5).exact().map_err(err)?;
    let x = Point::from_ints(&[0; 5]);
    let y = Point::from_ints(&[2, 0, 0, 0, 0]);
    let t = Scalar::ratio(1, 4);
    let set = midpoint_set(&space, &x, &y, &t, MidConvention::FromX).map_err(err)?;
    let expected = SetRep::boxed(
        Point::from_ratios(&[(1, 2), (-1, 2), (-1, 2), (-1, 2), (-1, 2)]),
        Point::from_ratios(&[(1, 2); 5]),
    )
    .map_err(err)?;
    ensure!(set == expected && set.is_exact(), "midpoint set {set:?}");
    let (p, r) = diameter(&space, &set).map_err(err)?.pair;
    let v = property_a_instance(&space, &x, &y, &t, MidConvention::FromX, &p, &r).map_err(err)?;
    let cert = v.certificate().ok_or("property A did not fail")?;
    ensure!(cert.verify().map_err(err)?, "certificate does not re-verify");
    // oracle: d_inf of the witnesses by hand
    let (pe, re) = (p.as_exact().ok_or("inexact witness")?, r.as_exact().ok_or("inexact witness")?);
    let d = pe.iter().zip(re).map(|(a, b)| (a - b).abs()).max().unwrap();
    ensure!(d == q(1, 1) && cert.lhs == Scalar::int(1), "witness distance {d}");
    ensure!(reproduce("linf-box").map_err(err)?.passed, "fixture not reproduced");
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("box {{1/2}}x[-1/2,1/2]^4 exact, witnesses {p} {r} at distance {d}"))
}

fn c2_l1_aij() -> Check {
    let start = Instant::now();
    let report = reproduce("l1-aij").map_err(err)?;
    ensure!(report.passed, "fixture not reproduced: {:?}", report.claims);
    // oracle: a_ij has coordinate i at 0, j at 1/2, the other two at 1/4
    let x = [q(0, 1), q(0, 1), q(0, 1), q(0, 1), q(0, 1)];
    let y = [q(1, 2), q(1, 2), q(1, 2), q(1, 2), q(0, 1)];
    let d1 = |a: &[BigRational], b: &[BigRational]| a.iter().zip(b).map(|(u, v)| (u - v).abs()).fold(q(0, 1), |s, t| s + t);
    let mut points = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if i == j {
                continue;
            }
            let mut a = vec![q(1, 4); 4];
            a[i] = q(0, 1);
            a[j] = q(1, 2);
            a.push(q(0, 1));
            ensure!(d1(&a, &x) == q(1, 1) && d1(&a, &y) == q(1, 1), "a_{i}{j} off the spheres");
            points.push(a);
        }
    }
    let data = &report.data;
    let lib_points: Vec<Point> = serde_json::from_value(data["points"].clone()).map_err(err)?;
    ensure!(lib_points.len() == 12, "{} points", lib_points.len());
    for p in &lib_points {
        let pe = p.as_exact().ok_or("inexact point")?;
        ensure!(points.iter().any(|o| o.as_slice() == pe), "unexpected point {p}");
    }
    let verdict = &report.verdicts[0];
    ensure!(verdict.property == Property::A && verdict.fails(), "property A did not fail");
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok("12 points at d_1 distance exactly 1 from x and y; property A fails".into())
}

fn c3_betweenness() -> Check {
    let report = reproduce("ex1-betweenness").map_err(err)?;
    ensure!(report.passed, "fixture not reproduced: {:?}", report.claims);
    let x1: Vec<BigRational> = exact_vec(&report.data["x1"])?;
    let x2: Vec<BigRational> = exact_vec(&report.data["x2"])?;
    let y: Vec<BigRational> = exact_vec(&report.data["y"])?;
    let dinf = |a: &[BigRational], b: &[BigRational]| a.iter().zip(b).map(|(u, v)| (u - v).abs()).max().unwrap();
    let sum = dinf(&x1, &x2) + dinf(&x2, &y);
    let direct = dinf(&x1, &y);
    ensure!(sum == q(2, 1) && direct == q(3, 2), "sum {sum}, direct {direct}");
    Ok(format!("d(x1,x2) + d(x2,y) = {sum}, d(x1,y) = {direct}"))
}

fn exact_vec(v: &serde_json::Value) -> Result<Vec<BigRational>, String> {
    let p: Point = serde_json::from_value(v.clone()).map_err(err)?;
    p.as_exact().map(<[BigRational]>::to_vec).ok_or_else(|| "inexact point".into())
}

fn c4_l1_ha() -> Check {
    let report = reproduce("L1-ha").map_err(err)?;
    ensure!(report.passed, "fixture not reproduced: {:?}", report.claims);
    // oracle: midpoint rule on the tent through (0,2), (a,0), (1,2)
    for a in [0.25, 0.5, 0.75] {
        let tent = |x: f64| if x <= a { 2.0 - 2.0 * x / a } else { 2.0 * (x - a) / (1.0 - a) };
        let n = 200_000;
        let (mut df, mut dg) = (0.0, 0.0);
        for k in 0..n {
            let x = (k as f64 + 0.5) / n as f64;
            df += tent(x).abs() / n as f64;
            dg += (2.0 - tent(x)).abs() / n as f64;
        }
        ensure!((df - 1.0).abs() < 1e-6 && (dg - 1.0).abs() < 1e-6, "a = {a}: {df} {dg}");
    }
    let exact = report.claims.iter().filter(|c| c.statement.starts_with("d(")).count();
    Ok(format!("{exact} exact distances reproduced (2 and 1); quadrature oracle agrees"))
}

fn c5_unique_midpoints_l2() -> Check {
    let space = MetricSpace::l2(3);
    let plan = SamplePlan::new(5, 1000);
    let mut s = plan.sampler(&space, 0);
    let (mut worst_diam, mut worst_eq) = (0.0f64, 0.0f64);
    for _ in 0..plan.samples {
        let x = s.point();
        let y = s.point_distinct_from(&x);
        let t = s.t();
        let set = midpoint_set(&space, &x, &y, &t, MidConvention::FromY).map_err(err)?;
        worst_diam = worst_diam.max(diameter(&space, &set).map_err(err)?.value.to_f64());
        let m = unique_midpoint(&space, &x, &y, &t).map_err(err)?;
        let (xf, yf, mf) = (x.to_f64(), y.to_f64(), m.to_f64());
        let d = euclid(&xf, &yf);
        let tf = t.to_f64();
        worst_eq = worst_eq.max((euclid(&xf, &mf) - (1.0 - tf) * d).abs()).max((euclid(&yf, &mf) - tf * d).abs());
    }
    ensure!(worst_diam <= 1e-6, "diameter {worst_diam}");
    ensure!(worst_eq <= 1e-9, "sphere equations off by {worst_eq}");
    Ok(format!("max diameter {worst_diam:e}, max sphere residual {worst_eq:e} over 1000 samples"))
}

fn c6_property_b() -> Check {
    let plan = SamplePlan::new(6, 1000);
    let mut out = Vec::new();
    for p in [1.5, 2.0, 3.0] {
        let space = MetricSpace::lp(3, p).map_err(err)?;
        let v = check_property(&space, Property::B, MidConvention::FromY, &plan).map_err(err)?;
        ensure!(v.holds(), "p = {p}: {}", v.status());
        let cert = v.extremal().ok_or("no samples")?;
        let slack = (&cert.lhs - &cert.rhs).to_f64();
        ensure!(slack <= 1e-9, "p = {p}: ratio exceeds t by {slack}");
        if p == 2.0 {
            ensure!(slack >= -1e-6, "equality not attained on d_2: gap {slack}");
        }
        out.push(format!("p={p}: max ratio - t = {slack:.1e}"));
    }
    Ok(out.join(", "))
}

fn c7_bprime_conventions() -> Check {
    let space = MetricSpace::l2(2);
    let plan = SamplePlan::new(7, 1000);
    let from_y = check_property(&space, Property::Bprime, MidConvention::FromY, &plan).map_err(err)?;
    ensure!(from_y.holds(), "FromY: {}", from_y.status());
    let slack = from_y.max_slack().map(Scalar::to_f64).unwrap_or(0.0);
    ensure!(slack <= 1e-9, "FromY ratio exceeds t by {slack}");
    let from_x = check_property(&space, Property::Bprime, MidConvention::FromX, &plan).map_err(err)?;
    let cert = from_x.certificate().ok_or("FromX did not fail")?;
    let Inputs::Bprime { t, .. } = &cert.inputs else { return Err("wrong inputs".into()) };
    let t = t.to_f64();
    ensure!(t < 0.5, "failing t = {t}");
    ensure!((cert.lhs.to_f64() - (1.0 - t)).abs() <= 1e-6, "ratio {} vs 1 - t = {}", cert.lhs, 1.0 - t);
    ensure!(cert.verify().map_err(err)?, "certificate does not re-verify");
    Ok(format!("FromY holds (slack {slack:.1e}); FromX fails at t = {t:.4} with ratio {:.6}", cert.lhs.to_f64()))
}

fn c8_bdoubleprime() -> Check {
    let space = MetricSpace::l2(2);
    let plan = SamplePlan::new(8, 1000);
    let v = check_property(&space, Property::Bdoubleprime, MidConvention::FromY, &plan).map_err(err)?;
    ensure!(v.holds(), "{}", v.status());
    let slack = v.max_slack().map(Scalar::to_f64).unwrap_or(f64::NEG_INFINITY);
    ensure!(slack <= 1e-9, "ratio exceeds t by {slack}");
    Ok(format!("holds over {} samples, max H-ratio - t = {slack:.1e}", v.samples()))
}

fn c9_modulus() -> Check {
    let space = MetricSpace::l2(2);
    let eps = [0.5, 1.0, 1.5];
    let est = estimate_uniform_modulus(&space, &eps, &SamplePlan::new(9, 2000)).map_err(err)?;
    // oracle: 1e5 pairs on the unit circle at separation exactly eps
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut out = Vec::new();
    for (e, m) in eps.iter().zip(&est) {
        let phi = 2.0 * (e / 2.0).asin();
        let mut worst = 0.0f64;
        for _ in 0..100_000 {
            let th: f64 = rng.random_range(0.0..std::f64::consts::TAU);
            let sign = if rng.random::<bool>() { 1.0 } else { -1.0 };
            let (x, y) = ([th.cos(), th.sin()], [(th + sign * phi).cos(), (th + sign * phi).sin()]);
            ensure!((euclid(&x, &y) - e).abs() < 1e-12, "oracle constraint");
            worst = worst.max(euclid(&[0.0, 0.0], &[(x[0] + y[0]) / 2.0, (x[1] + y[1]) / 2.0]));
        }
        let oracle = 1.0 - worst;
        let closed = 1.0 - (1.0 - e * e / 4.0).sqrt();
        ensure!((oracle - closed).abs() < 1e-9, "oracle {oracle} vs closed form {closed}");
        ensure!((m.delta_hat - closed).abs() <= 1e-3, "eps {e}: estimate {} vs {closed}", m.delta_hat);
        out.push(format!("eps={e}: {:.6} vs {:.6}", m.delta_hat, closed));
    }
    Ok(out.join(", "))
}

fn c10_fixed_point() -> Check {
    let start = Instant::now();
    let space = MetricSpace::l2(2);
    let angle = std::f64::consts::TAU / 7.0;
    let spec = MappingSpec::rotation(angle);
    let cfg = SolverConfig::default();
    let v = verify_hybrid(&space, &spec, HybridParams::nonexpansive(), &cfg.plan).map_err(err)?;
    ensure!(v.holds(), "hybrid check: {}", v.status());
    let fp = find_fixed_point(&space, &spec, HybridParams::nonexpansive(), &Point::float(vec![1.0, 0.0]), &cfg)
        .map_err(err)?;
    let u = fp.u0.to_f64();
    // grid oracle for min f over the disk
    let mut orbit = Vec::new();
    let mut p = [1.0f64, 0.0];
    for _ in 0..cfg.orbit_n {
        let (s, c) = angle.sin_cos();
        p = [c * p[0] - s * p[1], s * p[0] + c * p[1]];
        orbit.push(p);
    }
    let tail = &orbit[orbit.len() - cfg.window..];
    let f = |y: [f64; 2]| tail.iter().map(|q| 0.5 * euclid(q, &y)).fold(0.0, f64::max);
    let mut oracle = f64::INFINITY;
    for i in -100..=100 {
        for j in -100..=100 {
            let y = [i as f64 / 100.0, j as f64 / 100.0];
            if euclid(&y, &[0.0, 0.0]) <= 1.0 {
                oracle = oracle.min(f(y));
            }
        }
    }
    ensure!(euclid(&u, &[0.0, 0.0]) <= 1e-3, "u0 = {}", fp.u0);
    ensure!(fp.residual <= 1e-6, "residual {}", fp.residual);
    ensure!((fp.f_value - oracle).abs() <= 1e-3 && (oracle - 0.5).abs() <= 1e-3, "f(u0) {} vs oracle {oracle}", fp.f_value);
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!("u0 = {}, residual {:e}, f(u0) = {:.9}, grid oracle {oracle:.9}", fp.u0, fp.residual, fp.f_value))
}

fn c11_semigroup() -> Check {
    let space = MetricSpace::l2(3);
    let y = Point::float(vec![0.5, -1.0, 2.0]);
    let r = semigroup_compose(&space, &y, &[Scalar::float(0.5), Scalar::float(1.0 / 3.0)], &SamplePlan::new(11, 1000))
        .map_err(err)?;
    ensure!((r.lipschitz_estimate - 1.0 / 6.0).abs() <= 1e-9, "Lipschitz {}", r.lipschitz_estimate);
    ensure!(r.fixes_y, "y not fixed exactly");
    ensure!(r.associativity_error <= 1e-12, "associativity error {}", r.associativity_error);
    Ok(format!("Lipschitz {:.12}, y fixed, associativity error {:e}", r.lipschitz_estimate, r.associativity_error))
}

fn c12_nested() -> Check {
    let space = MetricSpace::l2(2);
    let n = 50;
    let centers: Vec<Point> = (1..=n).map(|k| Point::float(vec![0.5f64.powi(k), 0.0])).collect();
    let radii: Vec<Scalar> = (1..=n).map(|k| Scalar::float(1.0 + 0.5f64.powi(k))).collect();
    // oracle: nesting by arithmetic
    for k in 0..(n as usize - 1) {
        let gap = radii[k].to_f64() - radii[k + 1].to_f64();
        ensure!(euclid(&centers[k].to_f64(), &centers[k + 1].to_f64()) <= gap + 1e-15, "not nested at {k}");
    }
    let family = build_shrinking_family(&space, &centers, &radii).map_err(err)?;
    let p = common_point(&space, &family, 1e-6).map_err(err)?;
    let pf = p.to_f64();
    for (c, r) in centers.iter().zip(&radii) {
        ensure!(euclid(&c.to_f64(), &pf) <= r.to_f64() + 1e-6, "constraint violated at {c}");
    }

    let centers: Vec<Point> = (1..=n).map(|k| Point::float(vec![1.0 - 0.5f64.powi(k), 0.0])).collect();
    let radii: Vec<Scalar> = (1..=n).map(|k| Scalar::float(0.5f64.powi(k))).collect();
    let family = build_shrinking_family(&space, &centers, &radii).map_err(err)?;
    let c = cantor_point(&space, &family, 1e-6).map_err(err)?;
    let to_limit = euclid(&c.point.to_f64(), &[1.0, 0.0]);
    ensure!(to_limit <= 1e-6, "Cantor point {} is {to_limit} from (1, 0)", c.point);
    let agreement = c.agreement.to_f64();
    ensure!(agreement <= 2.0 * 0.5f64.powi(50) + 1e-6, "restarts differ by {agreement}");
    Ok(format!("drifting: {p} meets all 50 balls; Cantor: {} (restart gap {agreement:e})", c.point))
}

fn c13_homogeneity() -> Check {
    let plan = SamplePlan::new(13, 1000);
    for p in [1.0, 1.5, 2.0, 3.0, f64::INFINITY] {
        let space = MetricSpace::lp(3, p).map_err(err)?.with_tau(1e-12).map_err(err)?;
        let v = check_homogeneity(&space, &plan).map_err(err)?;
        ensure!(v.holds(), "p = {p}: {}", v.status());
    }
    let capped = MetricSpace::bounded(3, Exponent::Finite(2.0), Scalar::int(1)).map_err(err)?;
    let v = check_homogeneity(&capped, &plan).map_err(err)?;
    let cert = v.certificate().ok_or("capped metric did not fail")?;
    ensure!(cert.verify().map_err(err)?, "certificate does not re-verify");
    let Inputs::Homogeneity { alpha, x } = &cert.inputs else { return Err("wrong inputs".into()) };
    // oracle: min(1, |a|·|x|) against |a|·min(1, |x|)
    let nx = euclid(&x.to_f64(), &[0.0; 3]);
    let a = alpha.to_f64().abs();
    ensure!(((a * nx).min(1.0) - a * nx.min(1.0)).abs() > 1e-12, "witness does not break homogeneity");
    Ok(format!("d_p holds for p in {{1,1.5,2,3,inf}}; min(1,d_2) fails at alpha = {alpha}, x = {x}"))
}

fn c14_diameter_strict() -> Check {
    let space = MetricSpace::linf(2).exact().map_err(err)?;
    let a = SetRep::boxed(Point::from_ints(&[0, 0]), Point::from_ints(&[2, 2])).map_err(err)?;
    let c = SetRep::boxed(Point::from_ratios(&[(1, 2), (1, 2)]), Point::from_ratios(&[(3, 2), (3, 2)])).map_err(err)?;
    let v = check_diameter_strict(&space, &a, &c).map_err(err)?;
    ensure!(v.holds(), "{}", v.status());
    let k = &v.extremal().ok_or("no certificate")?.lhs;
    ensure!(k.as_exact() == Some(&q(1, 2)), "k = {k}");
    Ok(format!("k = {k} exactly"))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 14] = [
        ("linf-box fixture", c1_linf_box),
        ("l1-aij fixture", c2_l1_aij),
        ("ex1-betweenness fixture", c3_betweenness),
        ("L1-ha fixture", c4_l1_ha),
        ("property A on d_2", c5_unique_midpoints_l2),
        ("property B on d_p", c6_property_b),
        ("property B' conventions", c7_bprime_conventions),
        ("property B'' on finite sets", c8_bdoubleprime),
        ("uniform convexity modulus", c9_modulus),
        ("hybrid fixed point", c10_fixed_point),
        ("midpoint-map semigroup", c11_semigroup),
        ("nested intersection", c12_nested),
        ("homogeneity", c13_homogeneity),
        ("diameter strictness", c14_diameter_strict),
    ];
    let total = Instant::now();
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{took:.2?}]", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {why} [{took:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} passed in {:.2?}", criteria.len() - failures, criteria.len(), total.elapsed());
    if failures > 0 {
        std::process::exit(1);
    }
}
