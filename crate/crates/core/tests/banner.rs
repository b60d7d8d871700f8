mod common;

use proptest::prelude::*;

use common::Oracle;
use scx::banner::*;
use scx::generators::*;
use scx::verify::default_corpus;
use scx::{Error, SimplicialComplex};

fn labeled(facets: &[Vec<usize>]) -> SimplicialComplex {
    SimplicialComplex::from_facets(
        facets
            .iter()
            .map(|f| f.iter().map(|v| format!("v{v}")).collect::<Vec<_>>()),
    )
    .unwrap()
}

#[test]
fn classes_agree_with_oracle_on_corpus() {
    for (name, c) in default_corpus() {
        let o = Oracle::from_complex(&c);
        let k = classify(&c).unwrap();
        assert_eq!((k.flag, k.strongly_banner, k.banner), o.classes(), "{name}");
        assert!(!k.flag || k.strongly_banner, "{name}");
        assert!(!k.strongly_banner || k.banner, "{name}");
        match banner_number(&c) {
            Ok(b) => assert_eq!(Some(b.value), o.banner_number(), "{name}"),
            Err(e) => {
                assert!(
                    matches!(e, Error::UndefinedBannerNumber { .. }),
                    "{name}: {e}"
                );
                assert_eq!(o.banner_number(), None, "{name}");
            }
        }
    }
}

#[test]
fn banana_classes() {
    let k3 = banana(&complete_graph(3)).unwrap();
    assert_eq!((k3.num_vertices(), k3.facets().len()), (9, 3));
    let c = classify(&k3).unwrap();
    assert!(c.strongly_banner && !c.flag);

    let k4 = banana(&complete_graph(4)).unwrap();
    assert_eq!((k4.num_vertices(), k4.facets().len()), (16, 6));
    let c = classify(&k4).unwrap();
    assert!(c.banner && !c.strongly_banner);

    let one = banana(&[(0, 1)]).unwrap();
    assert_eq!(one.f_vector().counts(), [1, 4, 6, 4, 1]);
    assert_eq!(banana(&[]).unwrap_err(), Error::NoEdges);
}

#[test]
fn ring_ball_cliques() {
    let rb = ring_ball();
    let x = rb.face_of(&["x1", "x2", "x3"]).unwrap();
    let triangles = cliques(&rb, 3);
    assert!(triangles.contains(&x));
    assert!(is_critical(&rb, &x).unwrap() && !is_spanning(&rb, &x).unwrap());
    assert_eq!(contains_simplex_boundary(&rb, 4), None);
    assert_eq!(
        contains_simplex_boundary(&banana(&complete_graph(3)).unwrap(), 4),
        None
    );
    assert!(contains_simplex_boundary(&simplex_boundary(3).unwrap(), 3).is_some());
}

#[test]
fn small_cycles() {
    assert!(!classify(&cycle(3).unwrap()).unwrap().banner);
    assert!(classify(&cycle(4).unwrap()).unwrap().banner);
    assert_eq!(banner_number(&cycle(3).unwrap()).unwrap().value, 0);
    for d in 1..=4 {
        assert!(!classify(&simplex_boundary(d + 1).unwrap()).unwrap().banner);
    }
}

#[test]
fn simplex_boundary_banner_numbers() {
    // the link of a j-face of ∂Δ^{d+1} is ∂Δ^{d+1-j}; the first to pass is C₃
    for d in 1..=4 {
        let b = banner_number(&simplex_boundary(d + 1).unwrap()).unwrap();
        assert_eq!(b.value, d - 1, "d = {d}");
    }
    assert_eq!(
        banner_number(&simplex_boundary(4).unwrap()).unwrap().value,
        2
    );
}

#[test]
fn rejects_points_and_mixed_dimensions() {
    let points = SimplicialComplex::parse("a\nb\n").unwrap();
    assert_eq!(classify(&points).unwrap_err(), Error::ZeroDimensional);
    let mixed = SimplicialComplex::parse("a b c\nc d\n").unwrap();
    assert_eq!(classify(&mixed).unwrap_err(), Error::NotPure);
}

#[test]
fn tilde_clique_types() {
    let tri = simplex(2);
    let t = classify_tilde_cliques(&tri, 3).unwrap();
    assert_eq!((t.type1.len(), t.type2.len(), t.type3.len()), (1, 3, 0));
    let t = classify_tilde_cliques(&ring_ball(), 1).unwrap();
    assert_eq!((t.type1.len(), t.type2.len(), t.type3.len()), (16, 1, 0));
    assert_eq!(
        classify_tilde_cliques(&simplex_boundary(3).unwrap(), 2).unwrap_err(),
        Error::NoBoundary
    );

    // the three types partition the cliques of the tilde
    let rb = ring_ball();
    for j in 1..=5 {
        let t = classify_tilde_cliques(&rb, j).unwrap();
        let mut all: Vec<_> = t
            .type1
            .iter()
            .chain(&t.type2)
            .chain(&t.type3)
            .cloned()
            .collect();
        all.sort();
        let before = all.len();
        all.dedup();
        assert_eq!(all.len(), before, "j = {j}");
        let mut expected = cliques(&t.tilde, j);
        expected.sort();
        assert_eq!(all, expected, "j = {j}");
    }
    let t3 = classify_tilde_cliques(&rb, 3).unwrap();
    let labels: Vec<Vec<String>> = t3.type3.iter().map(|c| t3.tilde.face_labels(c)).collect();
    assert!(
        labels.contains(&vec!["_apex0".into(), "a1".into(), "b1".into()]),
        "{labels:?}"
    );
}

#[test]
fn two_dimensional_banner_is_flag() {
    for (name, c) in default_corpus() {
        if c.dim() == 2 {
            let k = classify(&c).unwrap();
            assert_eq!(k.banner, k.flag, "{name}");
        }
    }
}

#[test]
fn banner_number_zero_means_banner() {
    for (name, c) in default_corpus() {
        if c.dim() == 0 {
            continue;
        }
        if let Ok(b) = banner_number(&c) {
            let banner = classify(&c).unwrap().banner;
            assert_eq!(b.value == 0, banner || is_triangle_boundary(&c), "{name}");
            assert!(b.value < c.dim(), "{name}");
        }
    }
}

fn pure_complexes() -> impl Strategy<Value = SimplicialComplex> {
    (2usize..=4, 2usize..=10).prop_flat_map(|(k, m)| {
        proptest::collection::vec(
            proptest::sample::subsequence((0..9).collect::<Vec<_>>(), k),
            m,
        )
        .prop_map(|fs| labeled(&fs))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn classify_matches_oracle(c in pure_complexes()) {
        let o = Oracle::from_complex(&c);
        let k = classify(&c).unwrap();
        prop_assert_eq!((k.flag, k.strongly_banner, k.banner), o.classes());
        prop_assert_eq!(banner_number(&c).ok().map(|b| b.value), o.banner_number());
    }

    #[test]
    fn cliques_match_oracle(c in pure_complexes(), j in 1usize..=5) {
        let o = Oracle::from_complex(&c);
        let ours: Vec<u32> = cliques(&c, j)
            .iter()
            .map(|t| t.vertices().iter().fold(0, |m, v| m | 1 << v.index()))
            .collect();
        let mut theirs = o.cliques(j);
        let mut sorted = ours.clone();
        sorted.sort();
        theirs.sort();
        prop_assert_eq!(sorted, theirs);
    }
}
