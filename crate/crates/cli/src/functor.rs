//! The opens and points functors applied to documents.
//!
//! Opens are named by their members, `{a,b}`; points are named after the
//! frame element generating them.

use clap::ValueEnum;
use ordloc::duality::{opens_of_map, opens_of_space, points_of_locale, points_of_map, PtSpace};
use ordloc::frame::frame_of_opens;
use ordloc::{FinSpace, Flavour, OrderedLocale};
use serde_json::json;

use crate::doc::{Document, Named, Names};
use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    /// Opens: spaces to frames or ordered locales.
    O,
    /// Points: frames or ordered locales to spaces.
    Pt,
}

fn open_names(names: &Names, space: &FinSpace) -> Names {
    Names::labelled(space.opens().iter().map(|u| names.set_label(u)).collect())
}

fn point_names(names: &Names, pts: &PtSpace) -> Names {
    Names::labelled(pts.generators().into_iter().map(|u| names.name(u).to_string()).collect())
}

fn opens_locale(d: &Named<ordloc::OrderedSpace>, flavour: Flavour) -> Named<OrderedLocale> {
    Named {
        names: open_names(&d.names, d.value.space()),
        value: opens_of_space(&d.value, flavour),
    }
}

fn points_space(d: &Named<OrderedLocale>, flavour: Flavour) -> (Named<ordloc::OrderedSpace>, PtSpace) {
    let pts = points_of_locale(&d.value, flavour);
    let named = Named {
        names: point_names(&d.names, &pts),
        value: pts.space.clone(),
    };
    (named, pts)
}

fn mismatch(direction: Direction, kind: &str) -> CliError {
    let wanted = match direction {
        Direction::O => "space, ordered_space or a map of ordered spaces",
        Direction::Pt => "frame, ordered_locale or a map of ordered locales",
    };
    CliError::Usage(format!("kind mismatch: {kind} given, {wanted} expected"))
}

pub fn apply(doc: &Document, direction: Direction, flavour: Flavour) -> CliResult<Document> {
    match (direction, doc) {
        (Direction::O, Document::Space(d)) => Ok(Document::Frame(Named {
            names: open_names(&d.names, &d.value),
            value: frame_of_opens(&d.value),
        })),
        (Direction::O, Document::OrderedSpace(d)) => Ok(Document::OrderedLocale(opens_locale(d, flavour))),
        (
            Direction::O,
            Document::SpaceMap {
                source,
                target,
                function,
            },
        ) => {
            let o = opens_of_map(&source.value, &target.value, function, flavour).expect("validated on parse");
            if !o.monotone {
                return Err(CliError::invariant(
                    "monotonicity",
                    format!("the image under O is not {flavour} monotone"),
                    json!({"flavour": flavour.name()}),
                ));
            }
            Ok(Document::LocaleMap {
                source: opens_locale(source, flavour),
                target: opens_locale(target, flavour),
                map: o.map,
            })
        }
        (Direction::Pt, Document::Frame(d)) => {
            let pts = points_of_locale(&OrderedLocale::equality(&d.value), flavour);
            Ok(Document::Space(Named {
                names: point_names(&d.names, &pts),
                value: pts.space.space().clone(),
            }))
        }
        (Direction::Pt, Document::OrderedLocale(d)) => Ok(Document::OrderedSpace(points_space(d, flavour).0)),
        (Direction::Pt, Document::LocaleMap { source, target, map }) => {
            let p = points_of_map(&source.value, &target.value, map, flavour).map_err(|_| {
                CliError::invariant(
                    "monotonicity",
                    format!("the locale map is not {flavour} monotone"),
                    json!({"flavour": flavour.name()}),
                )
            })?;
            if !(p.continuous && p.monotone) {
                return Err(CliError::invariant(
                    "monotonicity",
                    "the map of points is not continuous and monotone",
                    json!({"continuous": p.continuous, "monotone": p.monotone}),
                ));
            }
            Ok(Document::SpaceMap {
                source: points_space(source, flavour).0,
                target: points_space(target, flavour).0,
                function: p.map,
            })
        }
        (_, other) => Err(mismatch(direction, other.kind())),
    }
}
