//! Property tests over random words, combinations and realization points.

use std::f64::consts::PI;

use proptest::prelude::*;

use sphere_pentagons::aad::{arrangements, deduce_adjacent_layer, Layer, VertexWord, Word};
use sphere_pentagons::avc::{alpha4_case_assignment, solve_vertex_equation, FSolution, SearchOptions, VertexCombo};
use sphere_pentagons::geom::{realize_pentagonal_subdivision, verify_geometry};
use sphere_pentagons::map::Platonic;
use sphere_pentagons::pentagon::{AngleLabel, EdgeLabel, PentagonProto, ProtoKind};
use sphere_pentagons::Error;

fn edge() -> impl Strategy<Value = EdgeLabel> {
    prop::sample::select(EdgeLabel::ALL.to_vec())
}

fn angle() -> impl Strategy<Value = AngleLabel> {
    prop::sample::select(AngleLabel::ALL.to_vec())
}

fn word() -> impl Strategy<Value = VertexWord> {
    (prop::collection::vec((angle(), edge()), 1..8), edge(), any::<bool>()).prop_map(|(pairs, first, closed)| {
        let mut edges = vec![first];
        let mut items = Vec::new();
        for (a, e) in pairs {
            items.push(a);
            edges.push(e);
        }
        if closed {
            *edges.last_mut().unwrap() = first;
        }
        Word::new(edges, items, closed).unwrap()
    })
}

fn proto() -> impl Strategy<Value = PentagonProto> {
    prop::sample::select(ProtoKind::ALL.to_vec()).prop_map(PentagonProto::new)
}

proptest! {
    #[test]
    fn words_print_and_parse_back(w in word()) {
        prop_assert_eq!(w.to_string().parse::<VertexWord>().unwrap(), w.clone());
        prop_assert_eq!(w.ascii().parse::<VertexWord>().unwrap(), w);
    }

    #[test]
    fn canonical_form_ignores_rotation_and_reflection(w in word(), k in 0usize..8) {
        let c = w.canonical();
        prop_assert_eq!(w.reversed().canonical(), c.clone());
        if w.is_closed() {
            prop_assert_eq!(w.rotated(k % w.len()).canonical(), c);
        }
    }

    #[test]
    fn deduction_commutes_with_reversal(w in word(), p in proto()) {
        match deduce_adjacent_layer(&w, &p) {
            Ok(layers) => {
                let back = deduce_adjacent_layer(&w.reversed(), &p).unwrap();
                let flipped: std::collections::BTreeSet<Layer> = layers.iter().map(|l| l.reversed()).collect();
                prop_assert_eq!(flipped, back);
                for l in &layers {
                    prop_assert_eq!(l.to_string().parse::<Layer>().unwrap(), l.clone());
                    prop_assert_eq!(l.edges(), w.edges());
                }
            }
            Err(e) => {
                prop_assert!(matches!(e, Error::InconsistentWord(_)));
                prop_assert!(deduce_adjacent_layer(&w.reversed(), &p).is_err());
            }
        }
    }

    #[test]
    fn arrangements_realize_their_combination(n in prop::array::uniform5(0u32..3), p in proto()) {
        let combo = VertexCombo(n);
        for w in arrangements(&p, &combo) {
            prop_assert!(w.is_closed());
            prop_assert_eq!(w.combo(), combo);
            prop_assert!(deduce_adjacent_layer(&w, &p).is_ok());
        }
    }

    #[test]
    fn combinations_print_and_parse_back(n in prop::array::uniform5(0u32..12)) {
        prop_assume!(n.iter().any(|&k| k > 0));
        let c = VertexCombo(n);
        prop_assert_eq!(c.to_string().parse::<VertexCombo>().unwrap(), c);
        prop_assert_eq!(c.ascii().parse::<VertexCombo>().unwrap(), c);
    }

    #[test]
    fn vertex_equation_solutions_sum_to_two_pi(n in prop::array::uniform5(0u32..6)) {
        let combo = VertexCombo(n);
        prop_assume!(combo.degree() >= 3);
        let asg = alpha4_case_assignment();
        let opts = SearchOptions::default();
        let sum = |f: u64| -> f64 {
            let values = asg.values_at(f).unwrap();
            (0..5).map(|i| n[i] as f64 * (*values[i].numer() as f64 / *values[i].denom() as f64)).sum()
        };
        match solve_vertex_equation(&asg, &combo, &opts).unwrap() {
            FSolution::All => {
                for f in [24, 60, 1000] {
                    prop_assert!((sum(f) - 2.0).abs() < 1e-12);
                }
            }
            FSolution::Values(fs) => {
                for f in opts.f_min..=opts.f_max {
                    let hit = (sum(f) - 2.0).abs() < 1e-12;
                    if fs.contains(&f) {
                        prop_assert!(hit);
                    } else if hit && f % 2 == 0 {
                        // Only angle-range guards may drop a solution.
                        let values = asg.values_at(f).unwrap();
                        let ok = (0..5).filter(|&i| n[i] > 0).all(|i| {
                            let v = *values[i].numer() as f64 / *values[i].denom() as f64;
                            v > 0.0 && v < 2.0
                        });
                        prop_assert!(!ok, "f = {} dropped", f);
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pentagonal_realizations_are_congruent(
        solid in prop::sample::select(vec![Platonic::Tetrahedron, Platonic::Octahedron, Platonic::Icosahedron]),
        u in 0.01f64..0.99,
        v in 0.01f64..0.99,
    ) {
        prop_assume!(u + v < 0.99);
        match realize_pentagonal_subdivision(solid, [u, v]) {
            Ok(r) => {
                let report = verify_geometry(&r.tiling, &r.labeled, 1e-9);
                prop_assert!(report.pass, "{:?}", report.checks);
                let m = &r.output.map;
                let f = m.num_faces() as f64;
                let area: f64 = (0..m.num_faces()).map(|k| r.tiling.face_area(m, k)).sum();
                prop_assert!((area - 4.0 * PI).abs() < 1e-9);
                for k in 0..m.num_faces() {
                    prop_assert!((r.tiling.face_area(m, k) - 4.0 * PI / f).abs() < 1e-9);
                }
                for p in &r.tiling.coords {
                    prop_assert!((p.norm() - 1.0).abs() < 1e-12);
                }
            }
            Err(e) => prop_assert!(matches!(e, Error::Degenerate(_)), "{}", e),
        }
    }
}
