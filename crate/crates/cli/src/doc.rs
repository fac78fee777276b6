//! JSON documents: parsing with precise error paths, validation of each
//! kind's laws, and canonical serialization.
//!
//! Carriers are lists of names. Indices inside the library follow the sorted
//! name order for parsed documents; generated documents keep the labelling
//! they were built with, and serialization sorts by name either way.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::path::Path;

use ordloc::error::HomClause;
use ordloc::esakia::HeytingAlg;
use ordloc::finord::monotonicity_witness;
use ordloc::{Error, FinFrame, FinSpace, FnMap, LocaleMap, OrderedLocale, OrderedSpace, Preorder, Subset};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::error::{CliError, CliResult};

pub const KINDS: [&str; 6] = ["space", "ordered_space", "frame", "ordered_locale", "map", "heyting"];

/// Element names of a carrier, with reverse lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Names {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Names {
    /// Names as given in a document: sorted, duplicates rejected.
    pub fn parse(mut names: Vec<String>, path: &str) -> CliResult<Self> {
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(CliError::schema(path, format!("duplicate name {:?}", w[0])));
        }
        Ok(Self::labelled(names))
    }

    /// Names for a carrier built elsewhere, in its own index order.
    pub fn labelled(names: Vec<String>) -> Self {
        let index = names.iter().cloned().enumerate().map(|(i, n)| (n, i)).collect();
        Names { names, index }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    fn lookup(&self, name: &str, path: &str) -> CliResult<usize> {
        self.index(name)
            .ok_or_else(|| CliError::schema(path, format!("unknown name {name:?}")))
    }

    /// Member names of `s`, sorted.
    pub fn set(&self, s: &Subset) -> Vec<String> {
        let mut out: Vec<String> = s.iter().map(|i| self.names[i].clone()).collect();
        out.sort();
        out
    }

    /// `{a,b}` style label for a subset.
    pub fn set_label(&self, s: &Subset) -> String {
        format!("{{{}}}", self.set(s).join(","))
    }

    fn sorted(&self) -> Vec<String> {
        let mut out = self.names.clone();
        out.sort();
        out
    }

    fn pairs<I: IntoIterator<Item = (usize, usize)>>(&self, pairs: I) -> Vec<[String; 2]> {
        let mut out: Vec<[String; 2]> = pairs
            .into_iter()
            .map(|(x, y)| [self.names[x].clone(), self.names[y].clone()])
            .collect();
        out.sort();
        out
    }
}

/// A structure together with the names of its carrier.
#[derive(Clone, Debug)]
pub struct Named<T> {
    pub names: Names,
    pub value: T,
}

#[derive(Clone, Debug)]
pub enum Document {
    Space(Named<FinSpace>),
    OrderedSpace(Named<OrderedSpace>),
    Frame(Named<FinFrame>),
    Heyting(Named<HeytingAlg>),
    OrderedLocale(Named<OrderedLocale>),
    /// A continuous monotone function between ordered spaces.
    SpaceMap {
        source: Named<OrderedSpace>,
        target: Named<OrderedSpace>,
        function: FnMap,
    },
    /// A locale map, given by its frame map from target to source.
    LocaleMap {
        source: Named<OrderedLocale>,
        target: Named<OrderedLocale>,
        map: LocaleMap,
    },
}

/// A validated document plus remarks on what parsing filled in.
#[derive(Clone, Debug)]
pub struct Parsed {
    pub doc: Document,
    pub notes: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(dead_code)]
struct SpaceBody {
    kind: String,
    points: Vec<String>,
    opens: Vec<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(dead_code)]
struct OrderedSpaceBody {
    kind: String,
    points: Vec<String>,
    opens: Vec<Vec<String>>,
    order: Vec<(String, String)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(dead_code)]
struct LatticeBody {
    kind: String,
    elements: Vec<String>,
    order: Vec<(String, String)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(dead_code)]
struct LocaleBody {
    kind: String,
    elements: Vec<String>,
    order: Vec<(String, String)>,
    relation: Vec<(String, String)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(dead_code)]
struct MapBody {
    kind: String,
    source: Value,
    target: Value,
    #[serde(default)]
    function: Option<BTreeMap<String, String>>,
    #[serde(default)]
    preimage: Option<BTreeMap<String, String>>,
}

fn join(prefix: &str, rest: &str) -> String {
    match (prefix.is_empty(), rest.starts_with('[')) {
        (true, _) => rest.to_string(),
        (false, true) => format!("{prefix}{rest}"),
        (false, false) => format!("{prefix}.{rest}"),
    }
}

fn decode<T: DeserializeOwned>(value: &Value, prefix: &str) -> CliResult<T> {
    serde_path_to_error::deserialize(value.clone()).map_err(|e| {
        let inner = e.path().to_string();
        let path = if inner == "." {
            if prefix.is_empty() { ".".to_string() } else { prefix.to_string() }
        } else {
            join(prefix, &inner)
        };
        CliError::schema(path, e.into_inner().to_string())
    })
}

pub fn parse_document(text: &str) -> CliResult<Parsed> {
    let value: Value = serde_json::from_str(text).map_err(|e| {
        let full = e.to_string();
        let message = match full.rfind(" at line ") {
            Some(cut) => full[..cut].to_string(),
            None => full,
        };
        CliError::Syntax {
            line: e.line(),
            column: e.column(),
            message,
        }
    })?;
    let mut notes = Vec::new();
    let doc = from_value(&value, "", &mut notes)?;
    Ok(Parsed { doc, notes })
}

pub fn load_document(path: &Path) -> CliResult<Parsed> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_document(&text)
}

fn from_value(value: &Value, prefix: &str, notes: &mut Vec<String>) -> CliResult<Document> {
    if !value.is_object() {
        let at = if prefix.is_empty() { "." } else { prefix };
        return Err(CliError::schema(at, "expected an object"));
    }
    let kind = value
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| CliError::schema(join(prefix, "kind"), "missing or not a string"))?;
    match kind {
        "space" => {
            let body: SpaceBody = decode(value, prefix)?;
            let names = Names::parse(body.points, &join(prefix, "points"))?;
            let space = build_space(&names, &body.opens, prefix)?;
            Ok(Document::Space(Named { names, value: space }))
        }
        "ordered_space" => {
            let body: OrderedSpaceBody = decode(value, prefix)?;
            let names = Names::parse(body.points, &join(prefix, "points"))?;
            let space = build_space(&names, &body.opens, prefix)?;
            let order = build_order(&names, &body.order, &join(prefix, "order"), notes)?;
            let value = OrderedSpace::new(space, order).expect("carriers agree");
            Ok(Document::OrderedSpace(Named { names, value }))
        }
        "frame" | "heyting" => {
            let body: LatticeBody = decode(value, prefix)?;
            let names = Names::parse(body.elements, &join(prefix, "elements"))?;
            let frame = build_frame(&names, &body.order, prefix, notes)?;
            Ok(if kind == "frame" {
                Document::Frame(Named { names, value: frame })
            } else {
                Document::Heyting(Named {
                    names,
                    value: HeytingAlg::new(frame),
                })
            })
        }
        "ordered_locale" => {
            let body: LocaleBody = decode(value, prefix)?;
            let names = Names::parse(body.elements, &join(prefix, "elements"))?;
            let frame = build_frame(&names, &body.order, prefix, notes)?;
            let rel = build_order(&names, &body.relation, &join(prefix, "relation"), notes)?;
            let locale = OrderedLocale::new(frame, rel).map_err(|e| translate(e, &names))?;
            Ok(Document::OrderedLocale(Named { names, value: locale }))
        }
        "map" => build_map(value, prefix, notes),
        other => Err(CliError::schema(
            join(prefix, "kind"),
            format!("unknown kind {other:?}, expected one of {}", KINDS.join(", ")),
        )),
    }
}

fn build_space(names: &Names, opens: &[Vec<String>], prefix: &str) -> CliResult<FinSpace> {
    let n = names.len();
    let sets = opens
        .iter()
        .enumerate()
        .map(|(i, open)| {
            let members = open
                .iter()
                .enumerate()
                .map(|(j, name)| names.lookup(name, &join(prefix, &format!("opens[{i}][{j}]"))))
                .collect::<CliResult<Vec<_>>>()?;
            Ok(Subset::from_indices(n, members).expect("looked-up names are in range"))
        })
        .collect::<CliResult<Vec<_>>>()?;
    FinSpace::new(n, sets.clone()).map_err(|e| match e {
        Error::NotClosedUnderUnion { a, b } | Error::NotClosedUnderIntersection { a, b } => {
            let what = if matches!(e, Error::NotClosedUnderUnion { .. }) {
                "union"
            } else {
                "intersection"
            };
            CliError::invariant(
                "topology",
                format!(
                    "topology: {what} of {} and {} is not open",
                    names.set_label(&sets[a]),
                    names.set_label(&sets[b])
                ),
                json!({"opens": [names.set(&sets[a]), names.set(&sets[b])]}),
            )
        }
        other => CliError::invariant("topology", other.to_string(), json!({})),
    })
}

fn build_order(
    names: &Names,
    pairs: &[(String, String)],
    path: &str,
    notes: &mut Vec<String>,
) -> CliResult<Preorder> {
    let given = pairs
        .iter()
        .enumerate()
        .map(|(i, (x, y))| {
            Ok((
                names.lookup(x, &format!("{path}[{i}][0]"))?,
                names.lookup(y, &format!("{path}[{i}][1]"))?,
            ))
        })
        .collect::<CliResult<Vec<_>>>()?;
    let order = Preorder::closure_of(names.len(), given.iter().copied()).expect("indices in range");
    let given: HashSet<(usize, usize)> = given.into_iter().collect();
    let added = order.strict_pairs().filter(|p| !given.contains(p)).count();
    if added > 0 {
        notes.push(format!("{path}: closure added {added} pair(s)"));
    }
    Ok(order)
}

fn build_frame(
    names: &Names,
    pairs: &[(String, String)],
    prefix: &str,
    notes: &mut Vec<String>,
) -> CliResult<FinFrame> {
    let order = build_order(names, pairs, &join(prefix, "order"), notes)?;
    FinFrame::new(order).map_err(|e| translate(e, names))
}

/// Library errors about elements of a single carrier, with names filled in.
fn translate(e: Error, names: &Names) -> CliError {
    let n = |i: usize| names.name(i).to_string();
    match e {
        Error::NotAntisymmetric { x, y } => CliError::invariant(
            "partial-order",
            format!("{} and {} are distinct but equivalent", n(x), n(y)),
            json!({"x": n(x), "y": n(y)}),
        ),
        Error::EmptyLattice => CliError::invariant("lattice", "lattice is empty", json!({})),
        Error::MissingMeet { a, b } => CliError::invariant(
            "lattice",
            format!("{} and {} have no meet", n(a), n(b)),
            json!({"a": n(a), "b": n(b)}),
        ),
        Error::MissingJoin { a, b } => CliError::invariant(
            "lattice",
            format!("{} and {} have no join", n(a), n(b)),
            json!({"a": n(a), "b": n(b)}),
        ),
        Error::NotDistributive { a, b, c } => CliError::invariant(
            "distributivity",
            format!(
                "{a} ∧ ({b} ∨ {c}) differs from ({a} ∧ {b}) ∨ ({a} ∧ {c})",
                a = n(a),
                b = n(b),
                c = n(c)
            ),
            json!({"a": n(a), "b": n(b), "c": n(c)}),
        ),
        Error::AxiomV { u, v, u2, v2 } => CliError::invariant(
            "axiom-v",
            format!(
                "{} ⊴ {} and {} ⊴ {} but their joins are unrelated",
                n(u),
                n(v),
                n(u2),
                n(v2)
            ),
            json!({"u": n(u), "v": n(v), "u2": n(u2), "v2": n(v2)}),
        ),
        Error::NotMonotone { x, y } => CliError::invariant(
            "monotonicity",
            format!("{} <= {} but their images are unrelated", n(x), n(y)),
            json!({"x": n(x), "y": n(y)}),
        ),
        other => CliError::invariant("structure", other.to_string(), json!({})),
    }
}

fn hom_error(clause: HomClause, names: &Names) -> CliError {
    let n = |i: usize| names.name(i).to_string();
    let (message, witness) = match clause {
        HomClause::Bottom => ("bottom not preserved".to_string(), json!({})),
        HomClause::Top => ("top not preserved".to_string(), json!({})),
        HomClause::Meet { a, b } => (
            format!("meet of {} and {} not preserved", n(a), n(b)),
            json!({"meet": [n(a), n(b)]}),
        ),
        HomClause::Join { a, b } => (
            format!("join of {} and {} not preserved", n(a), n(b)),
            json!({"join": [n(a), n(b)]}),
        ),
        HomClause::Range { a } => (format!("image of {} out of range", n(a)), json!({"element": n(a)})),
    };
    CliError::invariant("frame-homomorphism", message, witness)
}

fn table_from(
    entries: &BTreeMap<String, String>,
    from: &Names,
    to: &Names,
    path: &str,
) -> CliResult<Vec<usize>> {
    let mut table = vec![None; from.len()];
    for (key, value) in entries {
        let at = format!("{path}.{key}");
        let i = from.lookup(key, &at)?;
        table[i] = Some(to.lookup(value, &at)?);
    }
    table
        .into_iter()
        .enumerate()
        .map(|(i, t)| t.ok_or_else(|| CliError::schema(path, format!("no entry for {:?}", from.name(i)))))
        .collect()
}

fn build_map(value: &Value, prefix: &str, notes: &mut Vec<String>) -> CliResult<Document> {
    let body: MapBody = decode(value, prefix)?;
    let source = from_value(&body.source, &join(prefix, "source"), notes)?;
    let target = from_value(&body.target, &join(prefix, "target"), notes)?;
    match (source, target) {
        (Document::OrderedSpace(source), Document::OrderedSpace(target)) => {
            let path = join(prefix, "function");
            if body.preimage.is_some() {
                return Err(CliError::schema(join(prefix, "preimage"), "maps of spaces take a function"));
            }
            let entries = body
                .function
                .ok_or_else(|| CliError::schema(&path, "missing field `function`"))?;
            let table = table_from(&entries, &source.names, &target.names, &path)?;
            let function = FnMap::new(table, target.names.len()).expect("looked-up names are in range");
            let (s, t) = (&source.value, &target.value);
            if let Some(open) = s.space().continuity_witness(t.space(), &function).expect("sizes agree") {
                let set = &t.opens()[open];
                return Err(CliError::invariant(
                    "continuity",
                    format!("preimage of {} is not open", target.names.set_label(set)),
                    json!({"open": target.names.set(set)}),
                ));
            }
            if let Some((x, y)) = monotonicity_witness(&function, s.order(), t.order()).expect("sizes agree") {
                return Err(translate(Error::NotMonotone { x, y }, &source.names));
            }
            Ok(Document::SpaceMap {
                source,
                target,
                function,
            })
        }
        (Document::OrderedLocale(source), Document::OrderedLocale(target)) => {
            let path = join(prefix, "preimage");
            if body.function.is_some() {
                return Err(CliError::schema(join(prefix, "function"), "maps of locales take a preimage"));
            }
            let entries = body
                .preimage
                .ok_or_else(|| CliError::schema(&path, "missing field `preimage`"))?;
            let table = table_from(&entries, &target.names, &source.names, &path)?;
            let map = LocaleMap::new(source.value.frame(), target.value.frame(), table).map_err(|e| match e {
                Error::NotFrameHom { clause } => hom_error(clause, &target.names),
                other => translate(other, &target.names),
            })?;
            Ok(Document::LocaleMap { source, target, map })
        }
        (s, t) => Err(CliError::schema(
            join(prefix, "target.kind"),
            format!(
                "a map joins two ordered spaces or two ordered locales, not {} and {}",
                s.kind(),
                t.kind()
            ),
        )),
    }
}

fn opens_json(names: &Names, space: &FinSpace) -> Vec<Vec<String>> {
    let mut opens: Vec<Vec<String>> = space.opens().iter().map(|u| names.set(u)).collect();
    opens.sort();
    opens
}

fn table_json(entries: impl Iterator<Item = (String, String)>) -> Value {
    Value::Object(entries.map(|(k, v)| (k, Value::String(v))).collect::<Map<_, _>>())
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Space(_) => "space",
            Document::OrderedSpace(_) => "ordered_space",
            Document::Frame(_) => "frame",
            Document::Heyting(_) => "heyting",
            Document::OrderedLocale(_) => "ordered_locale",
            Document::SpaceMap { .. } | Document::LocaleMap { .. } => "map",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Document::Space(d) => json!({
                "kind": "space",
                "points": d.names.sorted(),
                "opens": opens_json(&d.names, &d.value),
            }),
            Document::OrderedSpace(d) => json!({
                "kind": "ordered_space",
                "points": d.names.sorted(),
                "opens": opens_json(&d.names, d.value.space()),
                "order": d.names.pairs(d.value.order().strict_pairs()),
            }),
            Document::Frame(d) => json!({
                "kind": "frame",
                "elements": d.names.sorted(),
                "order": d.names.pairs(d.value.order().covers()),
            }),
            Document::Heyting(d) => json!({
                "kind": "heyting",
                "elements": d.names.sorted(),
                "order": d.names.pairs(d.value.lattice().order().covers()),
            }),
            Document::OrderedLocale(d) => json!({
                "kind": "ordered_locale",
                "elements": d.names.sorted(),
                "order": d.names.pairs(d.value.frame().order().covers()),
                "relation": d.names.pairs(d.value.rel().strict_pairs()),
            }),
            Document::SpaceMap {
                source,
                target,
                function,
            } => json!({
                "kind": "map",
                "source": Document::OrderedSpace(source.clone()).to_json(),
                "target": Document::OrderedSpace(target.clone()).to_json(),
                "function": table_json((0..source.names.len()).map(|x| {
                    (source.names.name(x).to_string(), target.names.name(function.apply(x)).to_string())
                })),
            }),
            Document::LocaleMap { source, target, map } => json!({
                "kind": "map",
                "source": Document::OrderedLocale(source.clone()).to_json(),
                "target": Document::OrderedLocale(target.clone()).to_json(),
                "preimage": table_json((0..target.names.len()).map(|v| {
                    (target.names.name(v).to_string(), source.names.name(map.preimage(v)).to_string())
                })),
            }),
        }
    }

    /// Sorted keys, sorted lists, two-space indentation, trailing newline.
    pub fn to_canonical_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("values serialize");
        s.push('\n');
        s
    }
}
