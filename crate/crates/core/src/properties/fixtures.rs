//! Named exact-arithmetic counterexamples.
//!
//! | name | space | content |
//! |---|---|---|
//! | `linf-box` | (R^5, d_∞) | `c(0, 2e₁, 1/4)` is the box `{1/2}×[-1/2,1/2]^4` |
//! | `l1-aij` | (R^5, d_1) | twelve points on both spheres about `0` and `(1/2,1/2,1/2,1/2,0)` |
//! | `ex1-betweenness` | (R^3, d_∞) | `d(x¹,x²) + d(x²,y) = 2` but `d(x¹,y) = 3/2` |
//! | `L1-ha` | L1[0,1] | tent functions `h_a` at distance 1 from both `0` and `2` |
//! | `Linf-hp` | L∞[0,1] | functions `h_b` at distance 1 from both `0` and `2x²` |

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{check_betweenness, property_a_instance, PropertyVerdict};
use crate::convexsets::{diameter, midpoint_set, sphere_equivalence_check, MidConvention, SetRep};
use crate::error::{Error, Result};
use crate::spaces::{MetricSpace, PiecewisePoly, Point, Scalar};

pub const FIXTURES: [&str; 5] = ["linf-box", "l1-aij", "ex1-betweenness", "L1-ha", "Linf-hp"];

/// One reproduced statement: a computed value against its expected value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub statement: String,
    pub value: String,
    pub expected: String,
    pub reproduced: bool,
}

impl Claim {
    fn scalar(statement: impl Into<String>, value: &Scalar, expected: &Scalar) -> Self {
        let reproduced = match (value, expected) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            _ => false,
        };
        Claim { statement: statement.into(), value: value.to_string(), expected: expected.to_string(), reproduced }
    }

    fn flag(statement: impl Into<String>, value: impl ToString, expected: impl ToString) -> Self {
        let (value, expected) = (value.to_string(), expected.to_string());
        Claim { statement: statement.into(), reproduced: value == expected, value, expected }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixtureReport {
    pub name: String,
    pub space: String,
    pub summary: String,
    pub claims: Vec<Claim>,
    /// Failing verdicts whose certificates must re-verify.
    pub verdicts: Vec<PropertyVerdict>,
    pub data: serde_json::Value,
    pub passed: bool,
}

impl FixtureReport {
    fn finish(mut self) -> Result<Self> {
        let mut ok = self.claims.iter().all(|c| c.reproduced);
        for v in &self.verdicts {
            ok &= match v.certificate() {
                Some(c) => c.verify()?,
                None => false,
            };
        }
        self.passed = ok;
        Ok(self)
    }
}

/// Runs a named fixture.
pub fn reproduce(name: &str) -> Result<FixtureReport> {
    match name {
        "linf-box" => linf_box(),
        "l1-aij" => l1_aij(),
        "ex1-betweenness" => ex1_betweenness(),
        "L1-ha" => l1_ha(),
        "Linf-hp" => linf_hp(),
        _ => Err(Error::Parse(format!("unknown fixture {name:?}; available: {}", FIXTURES.join(", ")))),
    }
}

fn q(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d)
}

fn linf_box() -> Result<FixtureReport> {
    let space = MetricSpace::linf(5).exact()?;
    let x = Point::from_ints(&[0; 5]);
    let y = Point::from_ints(&[2, 0, 0, 0, 0]);
    let t = q(1, 4);
    let conv = MidConvention::FromX;
    let set = midpoint_set(&space, &x, &y, &t, conv)?;
    let expected = SetRep::boxed(
        Point::from_ratios(&[(1, 2), (-1, 2), (-1, 2), (-1, 2), (-1, 2)]),
        Point::from_ratios(&[(1, 2); 5]),
    )?;
    let sphere = sphere_equivalence_check(&space, &x, &y, &t, conv)?;
    let diam = diameter(&space, &set)?;
    let (p, r) = diam.pair.clone();
    let a = property_a_instance(&space, &x, &y, &t, conv, &p, &r)?;
    let claims = vec![
        Claim::flag("c(0, 2e1, 1/4) equals {1/2} x [-1/2, 1/2]^4", set == expected, true),
        Claim::flag("representation is exact", set.is_exact(), true),
        Claim::flag("every sampled member lies on both spheres", sphere.status(), "holds"),
        Claim::scalar("d(x, p) for the first witness", &space.distance(&x, &p)?, &q(1, 2)),
        Claim::scalar("diameter of the midpoint set", &diam.value, &q(1, 1)),
        Claim::scalar("distance between the two witnesses", &space.distance(&p, &r)?, &q(1, 1)),
        Claim::flag("property (A)", a.status(), "fails"),
    ];
    FixtureReport {
        name: "linf-box".into(),
        space: space.id(),
        summary: "In (R^5, d_inf) the midpoint set of 0 and 2e1 at t = 1/4 is a 4-dimensional box, so midpoints are not unique."
            .into(),
        claims,
        verdicts: vec![a],
        data: json!({ "x": x, "y": y, "t": t, "set": set, "witnesses": [p, r] }),
        passed: false,
    }
    .finish()
}

/// `a_ij`: coordinate i zero, coordinate j at 1/2, the other two at 1/4.
pub(crate) fn aij(i: usize, j: usize) -> Point {
    let mut c = vec![(1, 4); 4];
    c[i] = (0, 1);
    c[j] = (1, 2);
    c.push((0, 1));
    Point::from_ratios(&c)
}

fn l1_aij() -> Result<FixtureReport> {
    let space = MetricSpace::l1(5).exact()?;
    let x = Point::from_ints(&[0; 5]);
    let y = Point::from_ratios(&[(1, 2), (1, 2), (1, 2), (1, 2), (0, 1)]);
    let t = q(1, 2);
    let conv = MidConvention::FromY;
    let set = midpoint_set(&space, &x, &y, &t, conv)?;
    let mut points = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                points.push(aij(i, j));
            }
        }
    }
    let one = q(1, 1);
    let mut on_both = 0;
    let mut accepted = 0;
    for p in &points {
        if space.distance(&x, p)? == one && space.distance(&y, p)? == one {
            on_both += 1;
        }
        if set.contains(&space, p)? {
            accepted += 1;
        }
    }
    let mut distinct = points.clone();
    distinct.sort_by(|a, b| a.lex_cmp(b));
    distinct.dedup();
    let (a12, a21) = (aij(0, 1), aij(1, 0));
    let a = property_a_instance(&space, &x, &y, &t, conv, &a12, &a21)?;
    let claims = vec![
        Claim::scalar("d(x, y)", &space.distance(&x, &y)?, &q(2, 1)),
        Claim::flag("points a_ij at distance exactly 1 from both x and y", on_both, 12),
        Claim::flag("points a_ij accepted by the midpoint-set oracle", accepted, 12),
        Claim::flag("distinct points among the a_ij", distinct.len(), 12),
        Claim::scalar("d(a_12, a_21)", &space.distance(&a12, &a21)?, &q(1, 1)),
        Claim::flag("property (A)", a.status(), "fails"),
    ];
    FixtureReport {
        name: "l1-aij".into(),
        space: space.id(),
        summary: "In (R^5, d_1) twelve distinct points lie on both spheres of radius 1 about 0 and (1/2,1/2,1/2,1/2,0)."
            .into(),
        claims,
        verdicts: vec![a],
        data: json!({ "x": x, "y": y, "t": t, "points": points }),
        passed: false,
    }
    .finish()
}

fn ex1_betweenness() -> Result<FixtureReport> {
    let space = MetricSpace::linf(3).exact()?;
    let x = Point::from_ints(&[0, 0, 0]);
    let y = Point::from_ints(&[2, 0, 0]);
    let (t1, t2) = (q(1, 4), q(1, 2));
    let p1 = Point::from_ratios(&[(1, 2), (0, 1), (0, 1)]);
    let p2 = Point::from_ints(&[1, 1, 1]);
    let s1 = midpoint_set(&space, &x, &y, &t1, MidConvention::FromX)?;
    let s2 = midpoint_set(&space, &x, &y, &t2, MidConvention::FromX)?;
    let e1 = SetRep::boxed(Point::from_ratios(&[(1, 2), (-1, 2), (-1, 2)]), Point::from_ratios(&[(1, 2); 3]))?;
    let e2 = SetRep::boxed(Point::from_ints(&[1, -1, -1]), Point::from_ints(&[1, 1, 1]))?;
    let v = check_betweenness(&space, &x, &y, &t1, &t2, &p1, &p2)?;
    let claims = vec![
        Claim::flag("c(x, y, 1/4) = {1/2} x [-1/2, 1/2]^2", s1 == e1, true),
        Claim::flag("c(x, y, 1/2) = {1} x [-1, 1]^2", s2 == e2, true),
        Claim::scalar("d(x1, x2) + d(x2, y)", &(space.distance(&p1, &p2)? + space.distance(&p2, &y)?), &q(2, 1)),
        Claim::scalar("d(x1, y)", &space.distance(&p1, &y)?, &q(3, 2)),
        Claim::flag("x2 between x1 and y", v.status(), "fails"),
    ];
    FixtureReport {
        name: "ex1-betweenness".into(),
        space: space.id(),
        summary: "In (R^3, d_inf) a point of c(x,y,1/2) need not lie between a point of c(x,y,1/4) and y.".into(),
        claims,
        verdicts: vec![v],
        data: json!({ "x": x, "y": y, "t1": t1, "t2": t2, "x1": p1, "x2": p2 }),
        passed: false,
    }
    .finish()
}

/// Tent through `(0, 2)`, `(a, 0)`, `(1, 2)`.
pub fn tent(a: &Scalar) -> Result<PiecewisePoly> {
    PiecewisePoly::linear_interpolant(&[(q(0, 1), q(2, 1)), (a.clone(), q(0, 1)), (q(1, 1), q(2, 1))])
}

/// `b·x` on `[0, b]`, then `x²` on `[b, 1]`.
pub fn hp_member(b: &Scalar) -> Result<PiecewisePoly> {
    let z = q(0, 1);
    PiecewisePoly::new(
        vec![z.clone(), b.clone(), q(1, 1)],
        vec![[z.clone(), b.clone(), z.clone()], [z.clone(), z, q(1, 1)]],
    )
}

fn function_fixture(
    name: &str,
    space: MetricSpace,
    g: PiecewisePoly,
    members: Vec<(Scalar, PiecewisePoly)>,
    label: &str,
    summary: &str,
) -> Result<FixtureReport> {
    let f = PiecewisePoly::constant(q(0, 1));
    let mut claims = vec![Claim::scalar("d(f, g)", &space.pl_distance(&f, &g)?, &q(2, 1))];
    for (a, h) in &members {
        claims.push(Claim::scalar(format!("d(f, {label}_{a})"), &space.pl_distance(&f, h)?, &q(1, 1)));
        claims.push(Claim::scalar(format!("d(g, {label}_{a})"), &space.pl_distance(&g, h)?, &q(1, 1)));
    }
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let d = space.pl_distance(&members[i].1, &members[j].1)?;
            claims.push(Claim::flag(
                format!("{label}_{} != {label}_{}", members[i].0, members[j].0),
                d > q(0, 1),
                true,
            ));
        }
    }
    FixtureReport {
        name: name.into(),
        space: space.id(),
        summary: summary.into(),
        claims,
        verdicts: Vec::new(),
        data: json!({
            "f": f,
            "g": g,
            "members": members.iter().map(|(a, h)| json!({ "parameter": a, "function": h })).collect::<Vec<_>>(),
        }),
        passed: false,
    }
    .finish()
}

fn l1_ha() -> Result<FixtureReport> {
    let members = [q(1, 4), q(1, 2), q(3, 4)]
        .into_iter()
        .map(|a| tent(&a).map(|h| (a, h)))
        .collect::<Result<Vec<_>>>()?;
    function_fixture(
        "L1-ha",
        MetricSpace::l1_functions(),
        PiecewisePoly::constant(q(2, 1)),
        members,
        "h",
        "In L1[0,1] the tents h_a lie on both spheres of radius 1 about f = 0 and g = 2, so midpoints are not unique.",
    )
}

fn linf_hp() -> Result<FixtureReport> {
    let members = [q(1, 4), q(1, 2), q(3, 4)]
        .into_iter()
        .map(|b| hp_member(&b).map(|h| (b, h)))
        .collect::<Result<Vec<_>>>()?;
    let g = PiecewisePoly::new(vec![q(0, 1), q(1, 1)], vec![[q(0, 1), q(0, 1), q(2, 1)]])?;
    function_fixture(
        "Linf-hp",
        MetricSpace::linf_functions(),
        g,
        members,
        "h",
        "In Linf[0,1] the functions h_b lie on both spheres of radius 1 about f = 0 and g = 2x^2, so midpoints are not unique.",
    )
}
