//! Named laws, their applicability per document kind, and JSON verdicts.

use std::fmt;

use clap::ValueEnum;
use ordloc::duality::{opens_of_map, points_of_locale};
use ordloc::esakia::{priestley_witness, HeytingAlg, PriestleyFailure};
use ordloc::ordloc::{axiom_p_witness, axiom_v_witness};
use ordloc::{FinFrame, FinSpace, Flavour, OrderedLocale, OrderedSpace, Side};
use serde_json::{json, Value};

use crate::doc::{Document, Named, Names};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Law {
    OpenCones,
    Lambda,
    Pushup,
    AxiomV,
    AxiomP,
    T0Ordered,
    Tu,
    Tl,
    Priestley,
    Esakia,
    Sober,
    Spatial,
    Residuation,
    Monotone,
}

impl Law {
    pub fn name(self) -> &'static str {
        match self {
            Law::OpenCones => "open-cones",
            Law::Lambda => "lambda",
            Law::Pushup => "pushup",
            Law::AxiomV => "axiom-v",
            Law::AxiomP => "axiom-p",
            Law::T0Ordered => "t0-ordered",
            Law::Tu => "tu",
            Law::Tl => "tl",
            Law::Priestley => "priestley",
            Law::Esakia => "esakia",
            Law::Sober => "sober",
            Law::Spatial => "spatial",
            Law::Residuation => "residuation",
            Law::Monotone => "monotone",
        }
    }

    /// Laws that make sense for a document kind, in report order.
    pub fn applicable(kind: &str) -> &'static [Law] {
        use Law::*;
        match kind {
            "space" => &[Sober],
            "ordered_space" => &[OpenCones, Lambda, Pushup, T0Ordered, Tu, Tl, Priestley, Esakia, Sober],
            "frame" => &[Spatial],
            "heyting" => &[Residuation, Spatial],
            "ordered_locale" => &[AxiomV, AxiomP, Spatial],
            "map" => &[Monotone],
            _ => &[],
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one law on one document.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub law: Law,
    pub holds: bool,
    pub witness: Option<Value>,
}

impl Verdict {
    fn from_witness(law: Law, witness: Option<Value>) -> Self {
        Verdict {
            law,
            holds: witness.is_none(),
            witness,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({"law": self.law.name(), "holds": self.holds});
        if let Some(w) = &self.witness {
            v["witness"] = w.clone();
        }
        v
    }
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Upper => "upper",
        Side::Lower => "lower",
    }
}

/// Runs `law` on `doc`, or `None` when the law does not apply to its kind.
pub fn run_law(doc: &Document, law: Law, flavour: Flavour) -> Option<Verdict> {
    if !Law::applicable(doc.kind()).contains(&law) {
        return None;
    }
    let witness = match doc {
        Document::Space(d) => space_law(&d.names, &d.value),
        Document::OrderedSpace(d) => ordered_space_law(d, law, flavour),
        Document::Frame(d) => spatial_witness(&d.names, &d.value),
        Document::Heyting(d) => heyting_law(d, law),
        Document::OrderedLocale(d) => locale_law(d, law, flavour),
        Document::SpaceMap {
            source,
            target,
            function,
        } => {
            let o = opens_of_map(&source.value, &target.value, function, flavour).expect("validated on parse");
            (!o.monotone).then(|| json!({"flavour": flavour.name(), "reason": "image under O is not monotone"}))
        }
        Document::LocaleMap { source, target, map } => flavour.sides().iter().find_map(|&side| {
            map.monotone_witness(&source.value, &target.value, side).map(|w| {
                json!({
                    "side": side_name(side),
                    "u": source.names.name(w.u),
                    "u2": source.names.name(w.u2),
                    "v": target.names.name(w.v),
                })
            })
        }),
    };
    Some(Verdict::from_witness(law, witness))
}

fn space_law(names: &Names, space: &FinSpace) -> Option<Value> {
    space.sobriety_witness().map(|(closed, generic)| {
        json!({
            "irreducible_closed": names.set(&closed),
            "generic_points": generic.iter().map(|&x| names.name(x)).collect::<Vec<_>>(),
        })
    })
}

fn pair(names: &Names, (x, y): (usize, usize)) -> Value {
    json!({"x": names.name(x), "y": names.name(y)})
}

fn ordered_space_law(d: &Named<OrderedSpace>, law: Law, flavour: Flavour) -> Option<Value> {
    let (names, os) = (&d.names, &d.value);
    let open = |i: usize| names.set(&os.opens()[i]);
    let cone_failure = |sides: &[Side]| {
        sides.iter().find_map(|&side| {
            os.open_cone_witness(side).map(|i| {
                let cone = match side {
                    Side::Upper => os.order().up_set(&os.opens()[i]),
                    Side::Lower => os.order().down_set(&os.opens()[i]),
                };
                let cone = cone.expect("sizes agree");
                json!({"side": side_name(side), "open": open(i), "cone": names.set(&cone)})
            })
        })
    };
    match law {
        Law::OpenCones => cone_failure(flavour.sides()),
        Law::Lambda => [Side::Upper, Side::Lower].into_iter().find_map(|side| {
            os.lambda_witness(side)
                .map(|w| json!({"side": side_name(w.side), "u": open(w.u), "v": open(w.v)}))
        }),
        Law::Pushup => [Side::Upper, Side::Lower].into_iter().find_map(|side| {
            os.pushup_witness(side)
                .map(|i| json!({"side": side_name(side), "open": open(i)}))
        }),
        Law::T0Ordered => os.t0_ordered_witness().map(|p| pair(names, p)),
        Law::Tu => os.tu_ordered_witness().map(|p| pair(names, p)),
        Law::Tl => os.tl_ordered_witness().map(|p| pair(names, p)),
        Law::Priestley => priestley_witness(os).map(|f| priestley_json(names, f)),
        Law::Esakia => priestley_witness(os)
            .map(|f| priestley_json(names, f))
            .or_else(|| cone_failure(&[Side::Lower])),
        Law::Sober => space_law(names, os.space()),
        _ => unreachable!("filtered by applicability"),
    }
}

fn priestley_json(names: &Names, failure: PriestleyFailure) -> Value {
    match failure {
        PriestleyFailure::NotAntisymmetric { x, y } => {
            json!({"reason": "not_antisymmetric", "x": names.name(x), "y": names.name(y)})
        }
        PriestleyFailure::Unseparated { x, y } => {
            json!({"reason": "unseparated", "x": names.name(x), "y": names.name(y)})
        }
    }
}

/// Two elements carried to the same set of points.
fn spatial_witness(names: &Names, frame: &FinFrame) -> Option<Value> {
    let pts = points_of_locale(&OrderedLocale::equality(frame), Flavour::EM);
    let n = frame.size();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| pts.opens_of[u] == pts.opens_of[v])
        .map(|(u, v)| json!({"u": names.name(u), "v": names.name(v)}))
}

fn heyting_law(d: &Named<HeytingAlg>, law: Law) -> Option<Value> {
    let names = &d.names;
    match law {
        Law::Residuation => d.value.residuation_witness().map(|(a, b, c)| {
            json!({"a": names.name(a), "b": names.name(b), "c": names.name(c)})
        }),
        Law::Spatial => spatial_witness(names, d.value.lattice()),
        _ => unreachable!("filtered by applicability"),
    }
}

fn locale_law(d: &Named<OrderedLocale>, law: Law, flavour: Flavour) -> Option<Value> {
    let (names, x) = (&d.names, &d.value);
    match law {
        Law::AxiomV => axiom_v_witness(x.frame(), x.rel()).map(|(u, v, u2, v2)| {
            json!({"u": names.name(u), "v": names.name(v), "u2": names.name(u2), "v2": names.name(v2)})
        }),
        Law::AxiomP => axiom_p_witness(x, flavour).map(|(u, v)| {
            json!({"flavour": flavour.name(), "u": names.name(u), "v": names.name(v)})
        }),
        Law::Spatial => spatial_witness(names, x.frame()),
        _ => unreachable!("filtered by applicability"),
    }
}
