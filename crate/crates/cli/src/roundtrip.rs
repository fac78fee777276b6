//! Fixed-point reports for `pt ∘ O`, `O ∘ pt`, and the Esakia round trip.

use ordloc::duality::{locale_report, space_report, LocaleReport, SpaceReport};
use ordloc::esakia::esakia_roundtrip;
use ordloc::Flavour;
use serde_json::{json, Value};

use crate::doc::Document;
use crate::error::{CliError, CliResult};

#[derive(Clone, Debug)]
pub enum Report {
    Space(SpaceReport),
    Locale(LocaleReport),
    Algebra { iso: bool, bijective: bool, order_iso: bool, preserves_implication: bool },
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn run(doc: &Document, flavour: Flavour) -> CliResult<Report> {
    match doc {
        Document::OrderedSpace(d) => Ok(Report::Space(space_report(&d.value, flavour))),
        Document::OrderedLocale(d) => Ok(Report::Locale(locale_report(&d.value, flavour))),
        Document::Heyting(d) => {
            let rt = esakia_roundtrip(&d.value).map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(Report::Algebra {
                iso: rt.is_iso(),
                bijective: rt.bijective,
                order_iso: rt.order_iso,
                preserves_implication: rt.preserves_implication,
            })
        }
        other => Err(CliError::Usage(format!(
            "roundtrip takes an ordered_space, ordered_locale or heyting document, not {}",
            other.kind()
        ))),
    }
}

impl Report {
    pub fn fixed_point(&self) -> bool {
        match self {
            Report::Space(r) => r.fixed_point,
            Report::Locale(r) => r.fixed_point,
            Report::Algebra { iso, .. } => *iso,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Report::Space(r) => json!({"kind": "ordered_space", "report": r}),
            Report::Locale(r) => json!({"kind": "ordered_locale", "report": r}),
            Report::Algebra {
                iso,
                bijective,
                order_iso,
                preserves_implication,
            } => json!({
                "kind": "heyting",
                "report": {
                    "iso": iso,
                    "bijective": bijective,
                    "order_iso": order_iso,
                    "preserves_implication": preserves_implication,
                }
            }),
        }
    }

    pub fn to_lines(&self) -> Vec<String> {
        let mut out = vec![format!("fixed point: {}", yes(self.fixed_point()))];
        match self {
            Report::Space(r) => {
                out.push(format!("flavour: {}", r.flavour));
                out.push(format!("sober: {}", yes(r.sober)));
                out.push(format!("open upper cones: {}", yes(r.open_upper_cones)));
                out.push(format!("open lower cones: {}", yes(r.open_lower_cones)));
                out.push(format!("t0-ordered: {}", yes(r.t0_ordered)));
                out.push(format!("tu: {}", yes(r.tu_ordered)));
                out.push(format!("tl: {}", yes(r.tl_ordered)));
                if r.unit_order_homeomorphism {
                    out.push("unit is an order-homeomorphism".into());
                }
                let u = &r.unit;
                for (ok, what) in [
                    (u.injective, "injective"),
                    (u.surjective, "surjective"),
                    (u.continuous, "continuous"),
                    (u.open, "open"),
                    (u.monotone, "monotone"),
                    (u.order_reflecting, "order reflecting"),
                ] {
                    if !ok {
                        out.push(format!("unit not {what}"));
                    }
                }
                if !r.consistent {
                    out.push("inconsistent: fixed-point verdict disagrees with the unit".into());
                }
            }
            Report::Locale(r) => {
                out.push(format!("flavour: {}", r.flavour));
                out.push(format!("points: {}", r.points));
                out.push(if r.spatial { "spatial".into() } else { "not spatial".into() });
                let p = match r.flavour {
                    Flavour::EM => r.axiom_p,
                    Flavour::Upper => r.axiom_p_upper,
                    Flavour::Lower => r.axiom_p_lower,
                };
                out.push(format!("axiom (P) {}", if p { "holds" } else { "fails" }));
                out.push(format!("counit monotone: {}", yes(r.counit_monotone)));
                out.push(if r.counit_iso {
                    "counit is an isomorphism".into()
                } else {
                    "counit not an isomorphism".into()
                });
                if !r.consistent {
                    out.push("inconsistent: counit verdicts disagree with the locale".into());
                }
            }
            Report::Algebra {
                bijective,
                order_iso,
                preserves_implication,
                ..
            } => {
                out.push(format!("bijective: {}", yes(*bijective)));
                out.push(format!("order isomorphism: {}", yes(*order_iso)));
                out.push(format!("preserves implication: {}", yes(*preserves_implication)));
            }
        }
        out
    }
}
