mod common;

use std::collections::BTreeSet;

use common::moment_curve_facets;
use scx::generators::*;
use scx::graph::{skeleton, vertex_connectivity};
use scx::manifold::{is_pseudomanifold, manifold_class, z2_betti, Pseudomanifold};
use scx::Error;

#[test]
fn small_families() {
    assert_eq!(
        simplex_boundary(2).unwrap().labeled_facets(),
        cycle(3).unwrap().labeled_facets()
    );
    assert_eq!(
        cross_polytope_boundary(2).f_vector().counts(),
        [1, 6, 12, 8]
    );
    assert_eq!(simplex(3).facets().len(), 1);
    assert!(cycle(2).is_err());
    assert!(simplex_boundary(0).is_err());
}

#[test]
fn cyclic_polytopes_follow_the_moment_curve() {
    for (n, d) in [
        (5, 2),
        (6, 2),
        (6, 3),
        (7, 3),
        (8, 3),
        (7, 4),
        (8, 4),
        (8, 5),
    ] {
        let c = cyclic_polytope_boundary(n, d).unwrap();
        let ours: BTreeSet<Vec<usize>> = c
            .labeled_facets()
            .into_iter()
            .map(|f| f.iter().map(|l| l.parse().unwrap()).collect())
            .collect();
        let theirs: BTreeSet<Vec<usize>> = moment_curve_facets(n, d + 1).into_iter().collect();
        assert_eq!(ours, theirs, "C({n},{})", d + 1);
    }
    assert_eq!(
        cyclic_polytope_boundary(4, 2).unwrap().labeled_facets(),
        simplex_boundary(3).unwrap().labeled_facets()
    );
    let c74 = cyclic_polytope_boundary(7, 4).unwrap();
    assert!(skeleton(&c74).is_complete());
    assert_eq!(vertex_connectivity(&skeleton(&c74)).kappa, 6);
    assert!(cyclic_polytope_boundary(4, 3).is_err());
}

#[test]
fn stacked_spheres() {
    for d in 1..=4 {
        assert_eq!(
            stacked_sphere(d, 0, 7).unwrap().labeled_facets(),
            simplex_boundary(d + 1).unwrap().labeled_facets()
        );
        for k in 1..=5 {
            for seed in 0..3 {
                let s = stacked_sphere(d, k, seed).unwrap();
                assert_eq!(s.num_vertices(), d + 2 + k);
                assert_eq!(is_pseudomanifold(&s).unwrap(), Pseudomanifold::Closed);
                assert_eq!(z2_betti(&s).get(d), 1);
                assert_eq!(
                    s.labeled_facets(),
                    stacked_sphere(d, k, seed).unwrap().labeled_facets()
                );
            }
        }
    }
}

#[test]
fn bananas() {
    for edges in [
        complete_graph(3),
        complete_graph(4),
        cycle_graph(5),
        path_graph(4),
    ] {
        let c = banana(&edges).unwrap();
        let used: BTreeSet<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        assert_eq!(c.num_vertices(), 2 * edges.len() + used.len());
        assert_eq!(c.facets().len(), edges.len());
        for (i, f) in c.facets().iter().enumerate() {
            for g in &c.facets()[i + 1..] {
                assert!(f.intersection(g).len() <= 1);
            }
        }
    }
}

#[test]
fn ring_ball_facets() {
    let rb = ring_ball();
    assert_eq!(rb.facets().len(), 26);
    let labels: BTreeSet<&str> = rb.labels().iter().map(String::as_str).collect();
    for l in ["x1", "x2", "x3", "y"] {
        assert!(labels.contains(l));
    }
    let t = rb.tilde(None).unwrap();
    let m = manifold_class(&t).unwrap();
    assert!(m.normal_pseudomanifold() && m.homology_sphere);
    assert_eq!(z2_betti(&t).values, [0, 0, 0, 1]);
}

#[test]
fn spec_strings() {
    let s: GeneratorSpec = "susp:cyclic(7,4)".parse().unwrap();
    assert_eq!(s.to_string(), "susp:cyclic(7,4)");
    assert_eq!(s, GeneratorSpec::new("cyclic", &[7, 4]).wrapped(Wrap::Susp));
    assert_eq!(s.generate().unwrap().dim(), 5);
    assert_eq!(
        GeneratorSpec::parse("cone:cycle", &[5])
            .unwrap()
            .generate()
            .unwrap()
            .dim(),
        2
    );
    assert!(matches!(
        "dodecahedron".parse::<GeneratorSpec>(),
        Err(Error::UnknownGenerator(_))
    ));
    assert!("cycle(1)"
        .parse::<GeneratorSpec>()
        .unwrap()
        .generate()
        .is_err());
    for s in catalog_specs() {
        assert!(GENERATOR_NAMES.contains(&s.name.as_str()), "{s}");
        assert_eq!(s.to_string().parse::<GeneratorSpec>().unwrap(), s);
    }
}

#[test]
fn catalog_is_stable() {
    let a: Vec<String> = catalog()
        .iter()
        .map(|(s, c)| format!("{s}\n{}", c.to_scx()))
        .collect();
    let b: Vec<String> = catalog()
        .iter()
        .map(|(s, c)| format!("{s}\n{}", c.to_scx()))
        .collect();
    assert_eq!(a, b);
    assert!(a.len() >= 20);
    for (spec, c) in catalog() {
        assert!(c.dim() <= 5 && c.num_vertices() <= 30, "{spec}");
        if let Pseudomanifold::Closed = is_pseudomanifold(&c).unwrap() {
            // closed entries have every ridge in exactly two facets
            let ridges = c.faces(c.dim());
            assert!(
                ridges.iter().all(|r| c.facets_containing(r).count() == 2),
                "{spec}"
            );
        }
    }
}
