use std::time::Instant;

use ordloc::duality::{
    check_triangle_identities, counit, has_open_cones_for, is_t_ordered_for, locale_report, opens_of_map,
    opens_of_space, point_order, point_order_by_definition, points_of_locale, points_of_map, space_report,
    unit,
};
use ordloc::frame::points_of_frame;
use ordloc::gen::{all_ordered_spaces, seed_from_env, Gen};
use ordloc::ordloc::{inclusion_ordered_locale, satisfies_axiom_p, satisfies_axiom_p_for};
use ordloc::{oracle, Flavour, OrderedLocale, OrderedSpace};

fn spaces() -> Vec<OrderedSpace> {
    let mut out: Vec<OrderedSpace> = (0..=3).flat_map(all_ordered_spaces).collect();
    let mut g = Gen::new(seed_from_env(51));
    for _ in 0..300 {
        let n = g.range(4, 5);
        out.push(g.ordered_space(n));
    }
    out
}

fn locales() -> Vec<OrderedLocale> {
    let mut g = Gen::new(seed_from_env(52));
    let mut out = Vec::new();
    for i in 0..300 {
        out.push(match i % 3 {
            0 => g.ordered_locale(4).1,
            1 => {
                let n = g.range(1, 4);
                opens_of_space(&g.ordered_space(n), Flavour::ALL[i % 9 / 3])
            }
            _ => inclusion_ordered_locale(&g.frame(4).1),
        });
    }
    out
}

#[test]
fn localic_cones_of_opens_are_interiors_of_cones() {
    let start = Instant::now();
    for os in (0..=4).flat_map(all_ordered_spaces) {
        let x = opens_of_space(&os, Flavour::EM);
        for (i, u) in os.opens().iter().enumerate() {
            let up = oracle::interior(os.space(), &oracle::up_set(os.order(), u));
            let down = oracle::interior(os.space(), &oracle::down_set(os.order(), u));
            assert_eq!(&os.opens()[x.up_cone(i)], &up);
            assert_eq!(&os.opens()[x.down_cone(i)], &down);
        }
        for (i, u) in os.opens().iter().enumerate() {
            for (j, v) in os.opens().iter().enumerate() {
                let by_cones = u.is_subset(&os.opens()[x.down_cone(j)]) && v.is_subset(&os.opens()[x.up_cone(i)]);
                assert_eq!(x.related(i, j), by_cones);
            }
        }
    }
    eprintln!("exhaustive cone check took {:?}", start.elapsed());
}

#[test]
fn point_orders_agree_with_their_definition() {
    for x in locales() {
        let points = points_of_frame(x.frame());
        assert_eq!(point_order(&x, &points, Flavour::EM), point_order_by_definition(&x, &points));
    }
}

#[test]
fn axiom_p_gives_points_open_cones() {
    let mut hits = 0;
    for x in locales() {
        for flavour in Flavour::ALL {
            if satisfies_axiom_p_for(&x, flavour) {
                hits += 1;
                assert!(has_open_cones_for(&points_of_locale(&x, flavour).space, flavour));
            }
        }
    }
    assert!(hits > 100);
}

#[test]
fn axiom_p_forces_empty_point_sets_to_travel_together() {
    for x in locales().into_iter().filter(satisfies_axiom_p) {
        let points = points_of_frame(x.frame());
        for (u, v) in x.rel().pairs() {
            assert_eq!(
                x.points_containing(&points, u).is_empty(),
                x.points_containing(&points, v).is_empty()
            );
        }
    }
}

#[test]
fn points_cones_lie_inside_localic_cones() {
    for x in locales() {
        let pt = points_of_locale(&x, Flavour::EM);
        let order = pt.space.order();
        for u in 0..x.size() {
            let pu = x.points_containing(&pt.points, u);
            assert!(oracle::up_set(order, &pu).is_subset(&x.points_containing(&pt.points, x.up_cone(u))));
            assert!(oracle::down_set(order, &pu).is_subset(&x.points_containing(&pt.points, x.down_cone(u))));
        }
    }
}

#[test]
fn opens_of_spaces_with_open_cones_satisfy_axiom_p() {
    for os in spaces() {
        for flavour in Flavour::ALL {
            if has_open_cones_for(&os, flavour) {
                assert!(satisfies_axiom_p_for(&opens_of_space(&os, flavour), flavour));
            }
        }
    }
}

#[test]
fn unit_is_monotone_exactly_with_open_cones() {
    let (mut with, mut without) = (0, 0);
    for os in spaces() {
        for flavour in Flavour::ALL {
            let cones = has_open_cones_for(&os, flavour);
            if cones {
                with += 1;
            } else {
                without += 1;
            }
            let eta = unit(&os, flavour);
            assert_eq!(eta.verdicts.monotone, cones, "{flavour} {os:?}");
            assert!(eta.verdicts.continuous && eta.verdicts.surjective);
            assert_eq!(eta.verdicts.injective, os.space().is_t0());
        }
    }
    assert!(with > 0 && without > 0);
}

#[test]
fn counit_is_always_monotone() {
    for x in locales() {
        for flavour in Flavour::ALL {
            assert!(counit(&x, flavour).monotone);
        }
    }
}

#[test]
fn points_are_order_separated() {
    for x in locales() {
        for flavour in Flavour::ALL {
            let pt = points_of_locale(&x, flavour);
            assert!(is_t_ordered_for(&pt.space, flavour));
        }
        assert!(points_of_locale(&x, Flavour::EM).space.is_t0_ordered());
        assert!(points_of_locale(&x, Flavour::Upper).space.is_tu_ordered());
        assert!(points_of_locale(&x, Flavour::Lower).space.is_tl_ordered());
    }
}

#[test]
fn triangle_identities_hold() {
    let mut checked = 0;
    for os in spaces() {
        for flavour in Flavour::ALL {
            if has_open_cones_for(&os, flavour) {
                let x = opens_of_space(&os, flavour);
                let t = check_triangle_identities(&os, &x, flavour).unwrap();
                assert!(t.opens_side && t.points_side);
                checked += 1;
            }
        }
    }
    for x in locales() {
        for flavour in Flavour::ALL {
            if satisfies_axiom_p_for(&x, flavour) {
                let pt = points_of_locale(&x, flavour);
                let t = check_triangle_identities(&pt.space, &x, flavour).unwrap();
                assert!(t.opens_side && t.points_side);
                checked += 1;
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn fixed_points_are_recognised() {
    for os in spaces() {
        for flavour in Flavour::ALL {
            let r = space_report(&os, flavour);
            assert!(r.consistent, "{flavour} {os:?}");
            if os.space().is_t0() && is_t_ordered_for(&os, flavour) && has_open_cones_for(&os, flavour) {
                assert!(r.unit_order_homeomorphism);
            }
        }
    }
    for x in locales() {
        for flavour in Flavour::ALL {
            let r = locale_report(&x, flavour);
            assert!(r.consistent, "{flavour} {:?}", x.rel());
            if r.spatial && satisfies_axiom_p_for(&x, flavour) {
                assert!(r.counit_iso);
                assert_eq!(r.counit_inverse_monotone, Some(true));
            }
        }
    }
}

#[test]
fn monotone_maps_act_on_opens_and_points() {
    let mut g = Gen::new(seed_from_env(53));
    for _ in 0..300 {
        let (n, m) = (g.range(1, 4), g.range(1, 4));
        let (s, t) = (g.ordered_space(n), g.ordered_space(m));
        let h = g.continuous_map(s.space(), t.space());
        for flavour in Flavour::ALL {
            if ordloc::finord::is_monotone_fn(&h, s.order(), t.order()).unwrap() {
                let om = opens_of_map(&s, &t, &h, flavour).unwrap();
                if has_open_cones_for(&t, flavour) {
                    assert!(om.monotone);
                }
                if om.monotone {
                    let pm = points_of_map(&om.source, &om.target, &om.map, flavour).unwrap();
                    assert!(pm.continuous && pm.monotone);
                }
            }
        }
    }
}

#[test]
fn lower_order_on_inclusion_locales_reverses_filters() {
    for x in locales() {
        let x = inclusion_ordered_locale(x.frame());
        let pt = points_of_locale(&x, Flavour::Lower);
        for (i, f) in pt.points.iter().enumerate() {
            for (j, g) in pt.points.iter().enumerate() {
                assert_eq!(pt.space.order().leq(i, j), g.members().is_subset(f.members()));
            }
        }
        assert!(has_open_cones_for(&pt.space, Flavour::Lower));
    }
}
