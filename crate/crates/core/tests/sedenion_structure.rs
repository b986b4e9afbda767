use std::collections::{BTreeMap, BTreeSet};

use boxkite_core::algebra::{check_identity, enumerate_trips, loop_closure, LoopIdentity, Trip, TripFilter};
use boxkite_core::kite::{
    all_assessors, automorpheme, build_box_kite, edge_sign, eight_ball, goto_numbers, octonion_copy, Assessor, Sail,
    Vertex,
};
use boxkite_core::lariat::{lariat_product, switching_yard, Cell, LineSymbol};
use boxkite_core::Hypercomplex;

/// Brute force over every (low, high) plane: keep those whose diagonals
/// zero-divide a diagonal of some other plane.
fn zero_divisor_planes() -> BTreeSet<(u32, u32)> {
    let planes: Vec<(u32, u32)> = (1..8).flat_map(|o| (8..16).map(move |h| (o, h))).collect();
    let diag = |(o, h): (u32, u32), sign: i64| Hypercomplex::from_terms(4, [(o, 1), (h, sign)]).unwrap();
    let mut found = BTreeSet::new();
    for &p in &planes {
        'search: for &q in &planes {
            if p == q {
                continue;
            }
            for sp in [1, -1] {
                for sq in [1, -1] {
                    if (&diag(p, sp) * &diag(q, sq)).is_zero() {
                        found.insert(p);
                        break 'search;
                    }
                }
            }
        }
    }
    found
}

#[test]
fn forty_two_assessors_and_eighty_four_diagonals() {
    let brute = zero_divisor_planes();
    let built: BTreeSet<(u32, u32)> = all_assessors(4).unwrap().iter().map(|a| (a.low(), a.high())).collect();
    assert_eq!(brute.len(), 42);
    assert_eq!(brute, built);
    assert_eq!(2 * built.len(), 84);
}

#[test]
fn box_kites_partition_the_assessors() {
    let mut seen = BTreeSet::new();
    for s in 1..8 {
        for a in build_box_kite(s).unwrap().vertices() {
            assert!(seen.insert(*a), "{a} in two box-kites");
        }
    }
    assert_eq!(seen.len(), 42);
}

#[test]
fn twelve_edges_three_struts_and_the_sign_rule() {
    for s in 1..8 {
        let bk = build_box_kite(s).unwrap();
        let mut zero_dividing = 0;
        for (i, &u) in Vertex::ALL.iter().enumerate() {
            for &v in &Vertex::ALL[i + 1..] {
                let sign = edge_sign(&bk.vertex(u), &bk.vertex(v)).unwrap();
                assert_eq!(sign, bk.edge(u, v));
                if sign.is_some() {
                    zero_dividing += 1;
                } else {
                    assert_eq!(u.strut_partner(), v);
                }
            }
        }
        assert_eq!(zero_dividing, 12);
        assert!(bk.edge_rule_holds(), "box-kite {s}");
    }
}

#[test]
fn edge_dichotomy_over_all_assessor_pairs() {
    let all = all_assessors(4).unwrap();
    for (i, a) in all.iter().enumerate() {
        for b in &all[i + 1..] {
            // errors if both pairings vanish
            edge_sign(a, b).unwrap();
        }
    }
}

#[test]
fn sail_vertices_form_quaternionic_trios() {
    for s in 1..8 {
        let bk = build_box_kite(s).unwrap();
        for sail in Sail::ALL {
            let [x, y, z] = sail.vertices.map(|v| bk.vertex(v));
            for (o, p, q) in [(x, y, z), (y, z, x), (z, x, y)] {
                let trip = Trip::new(o.low(), p.high(), q.high()).unwrap();
                assert!(trip.aso().orientation().is_plus());
            }
        }
    }
}

#[test]
fn each_eight_free_s_trip_appears_once_among_abc_sails() {
    let mut count: BTreeMap<Trip, usize> = BTreeMap::new();
    for s in 1..8 {
        let bk = build_box_kite(s).unwrap();
        let [a, b, c] = Sail::ABC.vertices.map(|v| bk.vertex(v));
        for (lo, h1, h2) in [(a, b, c), (b, c, a), (c, a, b)] {
            let trip = Trip::new(lo.low(), h1.high(), h2.high()).unwrap().aso();
            *count.entry(trip).or_default() += 1;
        }
    }
    let s_trips = enumerate_trips(4, TripFilter::Sedenion).unwrap();
    let eight_free: Vec<&Trip> = s_trips.iter().filter(|t| !t.contains(8)).collect();
    assert_eq!(eight_free.len(), 21);
    for t in eight_free {
        assert_eq!(count.get(t), Some(&1), "{t}");
    }
}

#[test]
fn eight_balls_hold_the_forbidden_indices() {
    for s in 1..8 {
        let bk = build_box_kite(s).unwrap();
        let used: BTreeSet<u32> = bk.vertices().iter().flat_map(|a| [a.low(), a.high()]).collect();
        let missing: BTreeSet<u32> = (1..16).filter(|i| !used.contains(i)).collect();
        let ball: BTreeSet<u32> = eight_ball(4, s).unwrap().indices().into_iter().collect();
        assert_eq!(missing, ball);
    }
}

#[test]
fn goto_indices_each_cover_four_box_kites() {
    let mut tally = [0usize; 8];
    for s in 1..8 {
        let numbers = goto_numbers(&build_box_kite(s).unwrap()).unwrap();
        let distinct: BTreeSet<usize> = numbers.iter().copied().collect();
        assert_eq!(distinct.len(), 4);
        for k in numbers {
            tally[k] += 1;
        }
    }
    assert_eq!(&tally[1..], &[4; 7]);
}

#[test]
fn automorpheme_and_octonion_loops() {
    for otrip in enumerate_trips(3, TripFilter::All).unwrap() {
        let quasi = loop_closure(automorpheme(&otrip).unwrap());
        assert!(quasi.input_was_closed());
        assert_eq!(quasi.len(), 16);
        let copy = loop_closure(octonion_copy(&otrip).unwrap());
        assert!(copy.input_was_closed());
        assert_eq!(copy.len(), 16);
        for id in LoopIdentity::MOUFANG_FORMS {
            assert!(!check_identity(&quasi, id).holds(), "{otrip} {}", id.name());
            assert!(check_identity(&copy, id).holds(), "{otrip} {}", id.name());
        }
    }
}

#[test]
fn thirty_five_quaternion_copies() {
    let mut trips = enumerate_trips(4, TripFilter::Octonion).unwrap();
    trips.extend(enumerate_trips(4, TripFilter::Sedenion).unwrap());
    assert_eq!(trips.len(), 35);
    for t in trips {
        assert!(loop_closure(t.indices()).is_quaternion_group(), "{t}");
    }
}

#[test]
fn sixteen_element_loop_count_by_axis() {
    // every imaginary axis yields the 4-cycle {±1, ±e_i}
    for i in 1..16 {
        assert_eq!(loop_closure([i]).len(), 4);
    }
}

#[test]
fn yard_products_anticommute() {
    for s in 1..8 {
        let bk = build_box_kite(s).unwrap();
        let yard = switching_yard(&bk).unwrap();
        for &p in yard.symbols() {
            for &q in yard.symbols() {
                if p == q || p == LineSymbol::Real || q == LineSymbol::Real {
                    continue;
                }
                let pq = lariat_product(&bk, p, q).unwrap();
                let qp = lariat_product(&bk, q, p).unwrap();
                assert_eq!(pq.cell, qp.cell.negated(), "s={s} {p}{q}");
                if let Cell::Line(_, sym) = pq.cell {
                    assert_ne!(sym, LineSymbol::Real);
                }
            }
        }
    }
}

#[test]
fn diagonal_products_have_scale_two_unit_products_scale_one() {
    let bk = build_box_kite(3).unwrap();
    let yard = switching_yard(&bk).unwrap();
    for &p in yard.symbols() {
        for &q in yard.symbols() {
            let scale = yard.scale(p, q).unwrap();
            let cell = yard.cell(p, q).unwrap();
            let expected = match (p.is_diagonal(), q.is_diagonal(), cell.is_zero()) {
                (_, _, true) => 0,
                (true, true, false) => 2,
                _ => 1,
            };
            assert_eq!(scale, expected, "{p}{q}");
        }
    }
}

#[test]
fn assessor_rejects_the_eight_unit() {
    assert!(Assessor::new(4, 1, 8).is_err());
}
