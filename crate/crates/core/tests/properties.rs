use menger::convexsets::MidConvention;
use menger::properties::{
    check, property_b_instance, reproduce, Property, PropertyVerdict, Relation, FIXTURES,
};
use menger::sampling::SamplePlan;
use menger::spaces::{Exponent, MetricSpace, Point, Scalar};

fn plan(samples: usize) -> SamplePlan {
    SamplePlan::new(7, samples)
}

fn assert_self_verifying(v: &PropertyVerdict) {
    assert!(v.fails(), "{} on {} should fail, got {}", v.property.name(), v.space, v.status());
    let cert = v.certificate().unwrap();
    assert!(cert.violated());
    assert!(cert.verify().unwrap(), "certificate did not reproduce");
}

#[test]
fn failure_certificates_verify() {
    let linf = MetricSpace::linf(2);
    assert_self_verifying(&check(&linf, Property::A, MidConvention::FromY, &plan(200)).unwrap());
    assert_self_verifying(&check(&MetricSpace::linf(3), Property::C, MidConvention::FromY, &plan(500)).unwrap());
    assert_self_verifying(&check(&MetricSpace::l2(2), Property::Bprime, MidConvention::FromX, &plan(200)).unwrap());
    let capped = MetricSpace::bounded(2, Exponent::Finite(2.0), Scalar::int(1)).unwrap();
    assert_self_verifying(&check(&capped, Property::Homogeneity, MidConvention::FromY, &plan(200)).unwrap());
    let lattice = MetricSpace::integers(2, Exponent::Finite(1.0)).unwrap();
    assert_self_verifying(&check(&lattice, Property::MengerConvex, MidConvention::FromY, &plan(200)).unwrap());
}

#[test]
fn strictly_convex_spaces_satisfy_a_and_b() {
    for p in [1.5, 2.0, 3.0] {
        let space = MetricSpace::lp(3, p).unwrap();
        for which in [Property::MengerConvex, Property::A, Property::B, Property::Bprime, Property::Homogeneity] {
            let v = check(&space, which, MidConvention::FromY, &plan(300)).unwrap();
            assert!(v.holds(), "{} on p = {p}: {}", which.name(), v.status());
            assert_eq!(v.samples(), 300);
        }
    }
}

#[test]
fn property_b_is_attained_with_equality() {
    // In a normed space m(x,y,t) - m(z,y,t) = t (x - z) exactly.
    let space = MetricSpace::l2(2).exact();
    assert!(space.is_err(), "d_2 has no exact mode");
    let space = MetricSpace::l2(2);
    let x = Point::float(vec![1.0, 2.0]);
    let y = Point::float(vec![-1.0, 0.5]);
    let z = Point::float(vec![3.0, -1.0]);
    let v = property_b_instance(&space, &x, &y, &z, &Scalar::float(0.3), MidConvention::FromY).unwrap();
    assert!(v.holds());
    let cert = v.extremal().unwrap();
    assert_eq!(cert.relation, Relation::Le);
    assert!((cert.lhs.to_f64() - 0.3).abs() <= 1e-12);
}

#[test]
fn verdicts_round_trip_through_json() {
    let v = check(&MetricSpace::linf(2).exact().unwrap(), Property::A, MidConvention::FromY, &plan(50)).unwrap();
    let json = serde_json::to_string(&v).unwrap();
    let back: PropertyVerdict = serde_json::from_str(&json).unwrap();
    assert_eq!(back, v);
    assert!(back.certificate().unwrap().verify().unwrap());
}

#[test]
fn verdicts_are_deterministic() {
    let run = || check(&MetricSpace::l1(3), Property::C, MidConvention::FromY, &plan(100)).unwrap();
    assert_eq!(serde_json::to_string(&run()).unwrap(), serde_json::to_string(&run()).unwrap());
}

#[test]
fn every_fixture_reproduces() {
    for name in FIXTURES {
        let report = reproduce(name).unwrap();
        assert!(report.claims.iter().all(|c| c.reproduced), "{name}");
    }
}

#[test]
fn property_names_parse() {
    for (text, p) in [("A", Property::A), ("b'", Property::Bprime), ("B″", Property::Bdoubleprime), ("menger", Property::MengerConvex)] {
        assert_eq!(text.parse::<Property>().unwrap(), p);
    }
    assert!("Z".parse::<Property>().is_err());
}

#[test]
fn lifted_properties_are_refused_without_midpoints() {
    let lattice = MetricSpace::integers(2, Exponent::Finite(1.0)).unwrap();
    for which in [Property::Bprime, Property::Bdoubleprime, Property::C] {
        let v = check(&lattice, which, MidConvention::FromY, &plan(100)).unwrap();
        assert!(v.is_refused(), "{}: {}", which.name(), v.status());
    }
}
