use serde::{Deserialize, Serialize};

use crate::convexsets::{MidConvention, SetRep};
use crate::error::Result;
use crate::fixedpoint::MappingSpec;
use crate::sampling::SamplePlan;
use crate::spaces::{MetricSpace, Point, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Property {
    MengerConvex,
    SphereEquivalence,
    A,
    B,
    Bprime,
    Bdoubleprime,
    C,
    Betweenness,
    Homogeneity,
    DiameterStrict,
    UniformModulus,
    Hybrid,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::MengerConvex => "MengerConvex",
            Property::SphereEquivalence => "SphereEquivalence",
            Property::A => "A",
            Property::B => "B",
            Property::Bprime => "Bprime",
            Property::Bdoubleprime => "Bdoubleprime",
            Property::C => "C",
            Property::Betweenness => "Betweenness",
            Property::Homogeneity => "Homogeneity",
            Property::DiameterStrict => "DiameterStrict",
            Property::UniformModulus => "UniformModulus",
            Property::Hybrid => "Hybrid",
        }
    }
}

impl std::str::FromStr for Property {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        let all = [
            Property::MengerConvex,
            Property::SphereEquivalence,
            Property::A,
            Property::B,
            Property::Bprime,
            Property::Bdoubleprime,
            Property::C,
            Property::Betweenness,
            Property::Homogeneity,
            Property::DiameterStrict,
            Property::UniformModulus,
            Property::Hybrid,
        ];
        let key = s.trim().to_ascii_lowercase().replace(['′', '\''], "prime").replace('″', "doubleprime");
        all.into_iter()
            .find(|p| p.name().to_ascii_lowercase() == key)
            .or(match key.as_str() {
                "menger" => Some(Property::MengerConvex),
                "b'" | "bp" => Some(Property::Bprime),
                "bprimeprime" | "bpp" => Some(Property::Bdoubleprime),
                _ => None,
            })
            .ok_or_else(|| crate::Error::Parse(format!("unknown property {s:?}")))
    }
}

/// The claim a certificate tests: `lhs <= rhs`, `lhs < rhs`, or `lhs = rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Le,
    Lt,
    Eq,
}

/// Everything needed to recompute both sides of one instance of a property.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Inputs {
    /// Nonemptiness of `c(x, y, t)`; lhs is the emptiness gap.
    Menger { x: Point, y: Point, t: Scalar },
    /// A member `z` of `c(x, y, t)`; lhs is its sphere-equation residual.
    Sphere { x: Point, y: Point, t: Scalar, z: Point },
    /// Two members of one midpoint set; lhs is their distance.
    A { x: Point, y: Point, t: Scalar, p: Point, q: Point },
    /// lhs is `d(m(x,y,t), m(z,y,t)) / d(x,z)`, rhs is `t`.
    B { x: Point, y: Point, z: Point, t: Scalar },
    /// lhs is `H(c(x,y,t), c(z,y,t)) / d(x,z)`, rhs is `t`.
    Bprime { x: Point, y: Point, z: Point, t: Scalar },
    /// lhs is `H(C(A,y,t), C(B,y,t)) / H(A,B)`, rhs is `t`.
    Bdoubleprime { a: Vec<Point>, b: Vec<Point>, y: Point, t: Scalar },
    /// `u, v` on `[x, y]`, `w` in `c(u, v, s)`; lhs is `d(x,w) + d(w,y)`, rhs `d(x,y)`.
    C { x: Point, y: Point, u: Point, v: Point, s: Scalar, w: Point },
    /// lhs is `d(p1,p2) + d(p2,y)`, rhs is `d(p1,y)`.
    Betweenness { x: Point, y: Point, t1: Scalar, t2: Scalar, p1: Point, p2: Point },
    /// lhs is `d(0, αx)`, rhs is `|α|·d(0, x)`.
    Homogeneity { alpha: Scalar, x: Point },
    /// lhs is `δ(C) / δ(A)`, rhs is 1.
    DiameterStrict { a: SetRep, c: SetRep },
    /// lhs is `α d(Tx,Ty)² + (1-α) d(x,Ty)²`, rhs is `β d(Tx,y)² + (1-β) d(x,y)²`.
    Hybrid { mapping: MappingSpec, alpha: f64, beta: f64, x: Point, y: Point },
}

/// One evaluated instance: inputs, both sides, and the claimed relation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub property: Property,
    pub space: MetricSpace,
    pub convention: Option<MidConvention>,
    pub resolution: usize,
    pub inputs: Inputs,
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub relation: Relation,
}

impl Certificate {
    /// Evaluates `inputs` in `space`.
    pub fn evaluate(
        space: &MetricSpace,
        convention: Option<MidConvention>,
        inputs: Inputs,
        resolution: usize,
    ) -> Result<Certificate> {
        let (lhs, rhs, relation) = super::evaluate(space, convention, &inputs, resolution)?;
        Ok(Certificate {
            property: super::property_of(&inputs),
            space: space.clone(),
            convention,
            resolution,
            inputs,
            lhs,
            rhs,
            relation,
        })
    }

    /// True when the stored sides break the claimed relation.
    pub fn violated(&self) -> bool {
        let s = &self.space;
        match self.relation {
            Relation::Le => !s.le(&self.lhs, &self.rhs),
            Relation::Lt => !s.lt(&self.lhs, &self.rhs),
            Relation::Eq => !s.approx_eq(&self.lhs, &self.rhs),
        }
    }

    /// `lhs - rhs` for inequalities, `|lhs - rhs|` for equalities.
    pub fn slack(&self) -> Scalar {
        let diff = &self.lhs - &self.rhs;
        match self.relation {
            Relation::Eq => diff.abs(),
            _ => diff,
        }
    }

    /// Recomputes both sides from the stored inputs.
    pub fn recompute(&self) -> Result<(Scalar, Scalar)> {
        let (lhs, rhs, _) = super::evaluate(&self.space, self.convention, &self.inputs, self.resolution)?;
        Ok((lhs, rhs))
    }

    /// Recomputation reproduces the stored sides (bit-exactly in exact
    /// arithmetic, within tau otherwise) and they violate the relation.
    pub fn verify(&self) -> Result<bool> {
        let (lhs, rhs) = self.recompute()?;
        let same = |a: &Scalar, b: &Scalar| match (a, b) {
            (Scalar::Exact(p), Scalar::Exact(q)) => p == q,
            _ => (a.to_f64() - b.to_f64()).abs() <= self.space.tau(),
        };
        Ok(same(&lhs, &self.lhs) && same(&rhs, &self.rhs) && self.violated())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Holds {
        samples: usize,
        max_slack: Option<Scalar>,
        /// The sample with the largest slack.
        extremal: Option<Box<Certificate>>,
    },
    Fails {
        sample_index: Option<usize>,
        certificate: Box<Certificate>,
    },
    Refused {
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PropertyVerdict {
    pub property: Property,
    pub space: String,
    pub convention: Option<MidConvention>,
    pub plan: Option<SamplePlan>,
    pub outcome: Outcome,
}

impl PropertyVerdict {
    pub fn refused(
        property: Property,
        space: &MetricSpace,
        convention: Option<MidConvention>,
        reason: impl Into<String>,
    ) -> Self {
        PropertyVerdict {
            property,
            space: space.id(),
            convention,
            plan: None,
            outcome: Outcome::Refused { reason: reason.into() },
        }
    }

    pub fn failing(certificate: Certificate, plan: Option<SamplePlan>, sample_index: Option<usize>) -> Self {
        PropertyVerdict {
            property: certificate.property,
            space: certificate.space.id(),
            convention: certificate.convention,
            plan,
            outcome: Outcome::Fails { sample_index, certificate: Box::new(certificate) },
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self.outcome, Outcome::Holds { .. })
    }

    pub fn fails(&self) -> bool {
        matches!(self.outcome, Outcome::Fails { .. })
    }

    pub fn is_refused(&self) -> bool {
        matches!(self.outcome, Outcome::Refused { .. })
    }

    pub fn status(&self) -> &'static str {
        match self.outcome {
            Outcome::Holds { .. } => "holds",
            Outcome::Fails { .. } => "fails",
            Outcome::Refused { .. } => "refused",
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match &self.outcome {
            Outcome::Fails { certificate, .. } => Some(certificate),
            _ => None,
        }
    }

    pub fn extremal(&self) -> Option<&Certificate> {
        match &self.outcome {
            Outcome::Holds { extremal, .. } => extremal.as_deref(),
            _ => None,
        }
    }

    pub fn max_slack(&self) -> Option<&Scalar> {
        match &self.outcome {
            Outcome::Holds { max_slack, .. } => max_slack.as_ref(),
            _ => None,
        }
    }

    pub fn samples(&self) -> usize {
        match &self.outcome {
            Outcome::Holds { samples, .. } => *samples,
            Outcome::Fails { sample_index, .. } => sample_index.map_or(1, |i| i + 1),
            Outcome::Refused { .. } => 0,
        }
    }
}

/// Folds per-sample certificates into a verdict: the first violation wins,
/// otherwise the largest slack is kept.
pub struct Tracker {
    property: Property,
    space: String,
    convention: Option<MidConvention>,
    plan: Option<SamplePlan>,
    samples: usize,
    extremal: Option<Certificate>,
}

impl Tracker {
    pub fn new(
        property: Property,
        space: &MetricSpace,
        convention: Option<MidConvention>,
        plan: Option<SamplePlan>,
    ) -> Self {
        Tracker { property, space: space.id(), convention, plan, samples: 0, extremal: None }
    }

    /// Records a sample. Returns the failing verdict on a violation.
    pub fn push(&mut self, cert: Certificate) -> Option<PropertyVerdict> {
        let index = self.samples;
        self.samples += 1;
        if cert.violated() {
            return Some(PropertyVerdict::failing(cert, self.plan.clone(), Some(index)));
        }
        let tighter = match &self.extremal {
            None => true,
            Some(e) => cert.slack() > e.slack(),
        };
        if tighter {
            self.extremal = Some(cert);
        }
        None
    }

    pub fn samples(&self) -> usize {
        self.samples
    }

    pub fn finish(self) -> PropertyVerdict {
        PropertyVerdict {
            property: self.property,
            space: self.space,
            convention: self.convention,
            plan: self.plan,
            outcome: Outcome::Holds {
                samples: self.samples,
                max_slack: self.extremal.as_ref().map(Certificate::slack),
                extremal: self.extremal.map(Box::new),
            },
        }
    }
}
