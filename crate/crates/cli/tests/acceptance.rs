//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each, and
//! exits non-zero if any fails. Set ORDLOC_SEED to vary the random corpora.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use ordloc::duality::{
    check_triangle_identities, counit, has_open_cones_for, is_t_ordered_for, locale_report, opens_of_space,
    points_of_locale, unit,
};
use ordloc::esakia::{
    esakia_fixed_points, esakia_roundtrip, esakia_roundtrip_space, is_priestley, prime_filter_space, HeytingAlg,
};
use ordloc::finord::is_monotone_fn;
use ordloc::frame::points_of_frame;
use ordloc::gen::{
    all_ordered_spaces, all_posets, all_preorders, lambda_without_open_cones, lattice_fixtures, seed_from_env, Gen,
};
use ordloc::ordloc::{
    axiom_p_cone_witness, axiom_p_witness, check_axiom_v, inclusion_ordered_locale, satisfies_axiom_p_for,
};
use ordloc::{oracle, FinSpace, Flavour, FnMap, LocaleMap, OrderedLocale, OrderedSpace, Preorder, Side, Subset};
use ordloc_cli::app::run;
use ordloc_cli::doc::{parse_document, Document};

/// Counts checks and keeps the first few failures for the report.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: usize,
    first: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first.len() < 3 {
                self.first.push(what());
            }
        }
    }
}

fn criterion(number: u32, title: &str, bound: Option<Duration>, body: impl FnOnce(&mut Tally) -> String) -> bool {
    let mut tally = Tally::default();
    let start = Instant::now();
    let summary = body(&mut tally);
    let elapsed = start.elapsed();
    let in_time = bound.is_none_or(|b| elapsed < b);
    let pass = tally.failures == 0 && in_time;
    let limit = bound.map_or(String::new(), |b| format!(" < {}s", b.as_secs()));
    println!(
        "criterion {number:>2} {}: {title}: {} checks, {} failures, {:.2}s{limit}; {summary}",
        if pass { "PASS" } else { "FAIL" },
        tally.checks,
        tally.failures,
        elapsed.as_secs_f64(),
    );
    for f in &tally.first {
        println!("    first failure: {f}");
    }
    if !in_time {
        println!("    over the time bound");
    }
    pass
}

fn all_subsets(n: usize) -> Vec<Subset> {
    (0..1u64 << n).map(|m| Subset::from_mask(n, m)).collect()
}

fn all_maps(n: usize, m: usize) -> Vec<FnMap> {
    if n > 0 && m == 0 {
        return Vec::new();
    }
    (0..m.pow(n as u32))
        .map(|mut k| {
            let table = (0..n)
                .map(|_| {
                    let v = k % m;
                    k /= m;
                    v
                })
                .collect();
            FnMap::new(table, m).unwrap()
        })
        .collect()
}

fn cone_laws(t: &mut Tally, p: &Preorder, a: &Subset, b: &Subset) {
    let up = |s: &Subset| p.up_set(s).unwrap();
    let down = |s: &Subset| p.down_set(s).unwrap();
    let ctx = || format!("{p:?} {a:?} {b:?}");
    t.check(up(a) == oracle::up_set(p, a) && down(a) == oracle::down_set(p, a), ctx);
    t.check(a.is_subset(&up(a)) && a.is_subset(&down(a)), ctx);
    t.check(up(&up(a)) == up(a) && down(&down(a)) == down(a), ctx);
    if a.is_subset(b) {
        t.check(up(a).is_subset(&up(b)) && down(a).is_subset(&down(b)), ctx);
    }
    t.check(up(&a.union(b)) == up(a).union(&up(b)), ctx);
    t.check(down(&a.union(b)) == down(a).union(&down(b)), ctx);
}

fn monotone_forms(t: &mut Tally, g: &FnMap, p: &Preorder, q: &Preorder, subsets: &[Subset]) {
    let direct = is_monotone_fn(g, p, q).unwrap();
    let naive = p.pairs().all(|(x, y)| q.leq(g.apply(x), g.apply(y)));
    let via_up = subsets
        .iter()
        .all(|b| p.up_set(&g.preimage(b)).unwrap().is_subset(&g.preimage(&q.up_set(b).unwrap())));
    let via_down = subsets
        .iter()
        .all(|b| p.down_set(&g.preimage(b)).unwrap().is_subset(&g.preimage(&q.down_set(b).unwrap())));
    t.check(direct == naive && direct == via_up && direct == via_down, || {
        format!("{g:?} {p:?} {q:?}")
    });
}

fn space_corpus(seed: u64) -> Vec<OrderedSpace> {
    let mut out: Vec<OrderedSpace> = (0..=3).flat_map(all_ordered_spaces).collect();
    let mut g = Gen::new(seed);
    for _ in 0..300 {
        let n = g.range(4, 5);
        out.push(g.ordered_space(n));
    }
    out
}

fn locale_corpus(seed: u64) -> Vec<(FinSpace, OrderedLocale)> {
    let mut g = Gen::new(seed);
    let mut out = Vec::new();
    while out.len() < 300 {
        let (s, x) = match out.len() % 3 {
            0 => g.ordered_locale(4),
            1 => {
                let n = g.range(1, 4);
                let os = g.ordered_space(n);
                let flavour = Flavour::ALL[g.range(0, 2)];
                (os.space().clone(), opens_of_space(&os, flavour))
            }
            _ => {
                let (s, f) = g.frame(4);
                (s, inclusion_ordered_locale(&f))
            }
        };
        if x.size() <= 16 {
            out.push((s, x));
        }
    }
    out
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn ordloc(args: &[&str]) -> ordloc_cli::app::Outcome {
    run(std::iter::once("ordloc").chain(args.iter().copied()))
}

fn main() {
    let seed = seed_from_env(2024);
    println!("acceptance suite, seed {seed}");
    let spaces = space_corpus(seed);
    let locales = locale_corpus(seed ^ 0x5eed);
    let mut passed = Vec::new();

    passed.push(criterion(1, "cone calculus", Some(Duration::from_secs(5)), |t| {
        for n in 0..=3 {
            let subsets = all_subsets(n);
            for p in all_preorders(n) {
                for a in &subsets {
                    for b in &subsets {
                        cone_laws(t, &p, a, b);
                    }
                }
            }
            for m in 0..=3 {
                let maps = all_maps(n, m);
                let targets = all_subsets(m);
                for p in all_preorders(n) {
                    for q in all_preorders(m) {
                        for g in &maps {
                            monotone_forms(t, g, &p, &q, &targets);
                        }
                    }
                }
            }
        }
        let mut g = Gen::new(seed);
        for _ in 0..500 {
            let n = g.range(1, 6);
            let m = g.range(1, 6);
            let p = g.preorder(n, 0.35);
            let q = g.preorder(m, 0.35);
            let a = Subset::from_mask(n, g.range(0, (1 << n) - 1) as u64);
            let b = Subset::from_mask(n, g.range(0, (1 << n) - 1) as u64);
            cone_laws(t, &p, &a, &b);
            let table = (0..n).map(|_| g.range(0, m - 1)).collect();
            monotone_forms(t, &FnMap::new(table, m).unwrap(), &p, &q, &all_subsets(m));
        }
        "exhaustive on <= 3 elements plus 500 random instances on <= 6".into()
    }));

    passed.push(criterion(2, "open-cone equivalences", Some(Duration::from_secs(30)), |t| {
        let mut with = 0;
        for os in &spaces {
            let cones = os.has_open_cones();
            with += cones as usize;
            t.check(cones == os.satisfies_internal_cone_char(), || format!("{os:?}"));
            t.check(cones == os.satisfies_pushup(), || format!("{os:?}"));
            t.check(cones == oracle::open_cones(os.space(), os.order()), || format!("{os:?}"));
            for side in [Side::Upper, Side::Lower] {
                let one = os.open_cone_witness(side).is_none();
                t.check(
                    one == os.internal_cone_witness(side).is_none() && one == os.pushup_witness(side).is_none(),
                    || format!("{side:?} {os:?}"),
                );
            }
        }
        format!("{} spaces, {with} with open cones", spaces.len())
    }));

    passed.push(criterion(3, "(∗) separation", None, |t| {
        for os in &spaces {
            let lambda = os.satisfies_lambda();
            t.check(lambda == oracle::lambda_holds(os.space(), os.order()), || format!("{os:?}"));
            if os.has_open_cones() {
                t.check(lambda, || format!("{os:?}"));
            }
        }
        let fixture = lambda_without_open_cones();
        t.check(fixture.satisfies_lambda() && !fixture.has_open_cones(), || "stored fixture".into());
        let text = fs::read_to_string(fixtures().join("failing/lambda_without_open_cones.json")).unwrap();
        let same = match parse_document(&text).map(|p| p.doc) {
            Ok(Document::OrderedSpace(d)) => d.value.opens() == fixture.opens() && d.value.order() == fixture.order(),
            _ => false,
        };
        t.check(same, || "shipped fixture differs from the library one".into());
        let hits = all_ordered_spaces(3)
            .iter()
            .filter(|os| os.satisfies_lambda() && !os.has_open_cones())
            .count();
        t.check(hits > 0, || "no separating space on 3 points".into());
        format!("{hits} separating spaces on 3 points, none on 2")
    }));

    passed.push(criterion(4, "points oracle", Some(Duration::from_secs(10)), |t| {
        let mut frames: Vec<_> = lattice_fixtures(20).into_iter().map(|(_, f)| f).collect();
        let fixed = frames.len();
        let mut g = Gen::new(seed);
        frames.extend((0..200).map(|_| g.frame(5).1));
        for f in &frames {
            let mut ours: Vec<Subset> = points_of_frame(f).iter().map(|p| p.members().clone()).collect();
            ours.sort();
            t.check(ours == oracle::completely_prime_filters(f), || format!("{f:?}"));
        }
        format!("{fixed} lattice fixtures and 200 random frames")
    }));

    passed.push(criterion(5, "ordered-locale laws", Some(Duration::from_secs(60)), |t| {
        let mut g = Gen::new(seed);
        for (i, (s, x)) in locales.iter().enumerate() {
            let f = x.frame();
            t.check(check_axiom_v(f, x.rel()), || format!("(V) {:?}", x.rel()));
            for (u, u2) in x.rel().pairs() {
                for v in 0..x.size() {
                    if f.leq(u, v) {
                        let v2 = f.join(u2, v);
                        t.check(x.related(v, v2) && f.leq(u2, v2), || format!("enlarge {u} {u2} {v}"));
                    }
                    if f.leq(u2, v) {
                        let v1 = f.join(u, v);
                        t.check(f.leq(u, v1) && x.related(v1, v), || format!("enlarge {u} {u2} {v}"));
                    }
                }
            }
            for u in 0..x.size() {
                let (up, down) = (x.up_cone(u), x.down_cone(u));
                t.check(f.leq(u, up) && f.leq(u, down), || format!("(a) {u}"));
                t.check(x.related(u, up) && x.related(down, u), || format!("(b) {u}"));
                t.check(x.up_cone(up) == up && x.down_cone(down) == down, || format!("(c) {u}"));
                for v in 0..x.size() {
                    if f.leq(u, v) {
                        t.check(f.leq(up, x.up_cone(v)) && f.leq(down, x.down_cone(v)), || format!("(d) {u} {v}"));
                    }
                    if x.related(u, v) {
                        t.check(f.leq(u, x.down_cone(v)) && f.leq(v, up), || format!("(e) {u} {v}"));
                    }
                }
            }
            let (t2, y) = &locales[(i * 7 + 3) % locales.len()];
            let (r, z) = &locales[(i * 13 + 5) % locales.len()];
            if t2.size() == 0 || r.size() == 0 {
                continue;
            }
            let fm = g.locale_map(s, t2);
            let hm = g.locale_map(t2, r);
            for side in [Side::Upper, Side::Lower] {
                t.check(
                    fm.monotone_witness(x, y, side).is_none() == fm.cone_witness(x, y, side).is_none(),
                    || format!("monotonicity forms {side:?}"),
                );
            }
            let composite = fm.then(&hm);
            t.check(
                composite.relation(x, z) == oracle::compose(&fm.relation(x, y), &hm.relation(y, z)),
                || "relation of a composite".into(),
            );
            if fm.is_monotone(x, y) && hm.is_monotone(y, z) {
                t.check(composite.is_monotone(x, z), || "composite of monotone maps".into());
            }
            t.check(LocaleMap::identity(f).is_monotone(x, x), || "identity".into());
        }
        format!("{} ordered locales on frames of <= 16 elements", locales.len())
    }));

    passed.push(criterion(6, "axiom (P)", None, |t| {
        let mut holding = 0;
        for (_, x) in &locales {
            for flavour in Flavour::ALL {
                let direct = axiom_p_witness(x, flavour).is_none();
                t.check(direct == axiom_p_cone_witness(x, flavour).is_none(), || format!("{flavour} {:?}", x.rel()));
                if direct {
                    holding += 1;
                    let pt = points_of_locale(x, flavour);
                    t.check(has_open_cones_for(&pt.space, flavour), || format!("pt {flavour} {:?}", x.rel()));
                }
            }
        }
        let mut opens = 0;
        for os in &spaces {
            for flavour in Flavour::ALL {
                if has_open_cones_for(os, flavour) {
                    opens += 1;
                    t.check(satisfies_axiom_p_for(&opens_of_space(os, flavour), flavour), || format!("{os:?}"));
                }
            }
        }
        format!("(P) held {holding} times on locales; {opens} opens locales checked")
    }));

    passed.push(criterion(7, "adjunction", Some(Duration::from_secs(60)), |t| {
        let (mut with, mut without, mut triangles) = (0, 0, 0);
        for os in &spaces {
            for flavour in Flavour::ALL {
                let cones = has_open_cones_for(os, flavour);
                if cones {
                    with += 1;
                } else {
                    without += 1;
                }
                t.check(unit(os, flavour).verdicts.monotone == cones, || format!("unit {flavour} {os:?}"));
                if cones {
                    let x = opens_of_space(os, flavour);
                    let ok = check_triangle_identities(os, &x, flavour).is_ok_and(|tr| tr.opens_side && tr.points_side);
                    t.check(ok, || format!("triangles {flavour} {os:?}"));
                    triangles += 1;
                }
            }
        }
        for (_, x) in &locales {
            for flavour in Flavour::ALL {
                t.check(counit(x, flavour).monotone, || format!("counit {flavour} {:?}", x.rel()));
                if satisfies_axiom_p_for(x, flavour) {
                    let pt = points_of_locale(x, flavour);
                    let ok = check_triangle_identities(&pt.space, x, flavour)
                        .is_ok_and(|tr| tr.opens_side && tr.points_side);
                    t.check(ok, || format!("triangles {flavour} {:?}", x.rel()));
                    triangles += 1;
                }
            }
        }
        t.check(with > 0 && without > 0, || "both directions exercised".into());
        format!("unit monotone {with} times, not monotone {without} times; {triangles} triangle pairs")
    }));

    passed.push(criterion(8, "duality fixed points", None, |t| {
        let mut homeo = 0;
        for os in &spaces {
            for flavour in Flavour::ALL {
                if os.space().is_t0() && is_t_ordered_for(os, flavour) && has_open_cones_for(os, flavour) {
                    homeo += 1;
                    t.check(unit(os, flavour).verdicts.is_order_homeomorphism(), || format!("{flavour} {os:?}"));
                }
                t.check(os.space().is_t0() == os.space().is_sober(), || format!("sober {os:?}"));
            }
        }
        let mut isos = 0;
        for (_, x) in &locales {
            for flavour in Flavour::ALL {
                let r = locale_report(x, flavour);
                t.check(r.consistent, || format!("report {flavour} {:?}", x.rel()));
                if r.spatial && satisfies_axiom_p_for(x, flavour) {
                    isos += 1;
                    t.check(r.counit_iso && r.counit_inverse_monotone == Some(true), || format!("{:?}", x.rel()));
                }
            }
            t.check(points_of_locale(x, Flavour::EM).space.is_t0_ordered(), || "pt T0-ordered".into());
            t.check(points_of_locale(x, Flavour::Upper).space.is_tu_ordered(), || "pt TU".into());
            t.check(points_of_locale(x, Flavour::Lower).space.is_tl_ordered(), || "pt TL".into());
        }
        format!("{homeo} unit homeomorphisms, {isos} counit isomorphisms")
    }));

    passed.push(criterion(9, "Esakia", Some(Duration::from_secs(30)), |t| {
        let lattices = lattice_fixtures(20);
        for (name, f) in &lattices {
            let h = HeytingAlg::new(f.clone());
            t.check(esakia_roundtrip(&h).is_ok_and(|rt| rt.is_iso()), || name.clone());
            t.check(
                prime_filter_space(&h).filters.len() == oracle::completely_prime_filters(f).len(),
                || name.clone(),
            );
        }
        let posets: Vec<OrderedSpace> = (0..=5)
            .flat_map(all_posets)
            .map(|p| OrderedSpace::new(FinSpace::discrete(p.size()), p).unwrap())
            .collect();
        for os in &posets {
            t.check(esakia_roundtrip_space(os).is_ok_and(|rt| rt.order_homeomorphism), || format!("{os:?}"));
        }
        let mut priestley: Vec<OrderedSpace> = posets.clone();
        priestley.extend((0..=3).flat_map(all_ordered_spaces).filter(is_priestley));
        for os in &priestley {
            t.check(os.is_tu_ordered() && os.is_tl_ordered(), || format!("{os:?}"));
            let fp = esakia_fixed_points(os);
            for verdict in [fp.esakia_lower, fp.co_esakia_upper, fp.bi_esakia_em] {
                t.check(verdict != Some(false), || format!("{os:?}"));
            }
        }
        format!("{} lattices, {} posets, {} Priestley spaces", lattices.len(), posets.len(), priestley.len())
    }));

    passed.push(criterion(10, "CLI contract", None, |t| {
        let mut files = 0;
        for dir in ["valid", "failing"] {
            let mut paths: Vec<PathBuf> =
                fs::read_dir(fixtures().join(dir)).unwrap().map(|e| e.unwrap().path()).collect();
            paths.sort();
            for path in paths {
                files += 1;
                let text = fs::read_to_string(&path).unwrap();
                let same = parse_document(&text).is_ok_and(|p| p.doc.to_canonical_string() == text);
                t.check(same, || format!("round trip {}", path.display()));
            }
        }
        let at = |rel: &str| fixtures().join(rel).display().to_string();
        let codes = [
            ("check --all", "valid", 0),
            ("check --all", "failing", 1),
            ("check --all", "invalid", 2),
            ("check", "valid/discrete_vee.json", 2),
            ("check --law unknown", "valid/discrete_vee.json", 2),
            ("check --law open-cones", "failing/vee_upper.json", 1),
            ("check --all", "invalid/syntax_error.json", 2),
        ];
        for (command, target, code) in codes {
            let path = at(target);
            let mut args: Vec<&str> = command.split(' ').collect();
            args.push(&path);
            let got = ordloc(&args).code;
            t.check(got == code, || format!("{command} {target} exited {got}, expected {code}"));
        }
        let out = ordloc(&["check", "--all", &at("invalid/m3.json")]);
        let report: serde_json::Value = serde_json::from_str(&out.stdout).unwrap_or_default();
        let mut triple: Vec<String> = ["a", "b", "c"]
            .iter()
            .filter_map(|k| report["error"]["witness"][k].as_str().map(str::to_string))
            .collect();
        triple.sort();
        t.check(out.code == 1 && triple == ["a", "b", "c"], || format!("M3 gave {}: {}", out.code, out.stdout));
        format!("{files} fixtures round-tripped; M3 triple {}", triple.join(","))
    }));

    let failed = passed.iter().filter(|p| !**p).count();
    println!("{} of {} criteria passed", passed.len() - failed, passed.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
