//! Clique conditions on the 1-skeleton: flag, strongly banner and banner
//! complexes, and the banner number.
//!
//! For a pure `d`-dimensional complex:
//!
//! * a clique is *spanning* if it is a face, and *critical* if deleting
//!   some vertex leaves a face;
//! * *flag*: every clique is spanning;
//! * *strongly banner*: every `(d+1)`-clique is spanning and no `d+2`
//!   vertices carry the boundary of a `(d+1)`-simplex;
//! * *banner*: as strongly banner, but only critical `(d+1)`-cliques need
//!   to be spanning.
//!
//! All scans visit cliques in lexicographic order of vertex ids, so every
//! witness is the lexicographically smallest failing set.

use std::ops::ControlFlow;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::graph::{skeleton, SkeletonGraph};

/// A set of pairwise adjacent vertices.
pub type Clique = Face;

/// Calls `visit` on each `j`-clique of `g` in lexicographic order until it breaks.
pub fn for_each_clique<F>(g: &SkeletonGraph, j: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    fn extend<F>(
        g: &SkeletonGraph,
        j: usize,
        current: &mut Vec<usize>,
        candidates: &FixedBitSet,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if current.len() == j {
            return visit(current);
        }
        // bound: not enough candidates left to reach size j
        if current.len() + candidates.count_ones(..) < j {
            return ControlFlow::Continue(());
        }
        for v in candidates.ones() {
            let mut next = candidates.clone();
            next.intersect_with(g.neighbor_bits(v));
            next.remove_range(..v + 1);
            current.push(v);
            let flow = extend(g, j, current, &next, visit);
            current.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    if j == 0 {
        return visit(&[]);
    }
    let mut all = FixedBitSet::with_capacity(g.num_vertices());
    all.insert_range(..);
    extend(g, j, &mut Vec::with_capacity(j), &all, &mut visit)
}

fn clique_face(vs: &[usize]) -> Clique {
    Face::from_sorted(vs.iter().map(|&v| VertexId::from_index(v)).collect())
}

/// First `j`-clique (lexicographically) satisfying `pred`.
fn find_clique<P>(g: &SkeletonGraph, j: usize, mut pred: P) -> Option<Clique>
where
    P: FnMut(&Clique) -> bool,
{
    let mut found = None;
    let _ = for_each_clique(g, j, |vs| {
        let t = clique_face(vs);
        if pred(&t) {
            found = Some(t);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

/// All `j`-cliques of `G(c)` in lexicographic order.
pub fn cliques(c: &SimplicialComplex, j: usize) -> Vec<Clique> {
    let g = skeleton(c);
    let mut out = Vec::new();
    let _ = for_each_clique(&g, j, |vs| {
        out.push(clique_face(vs));
        ControlFlow::Continue(())
    });
    out
}

fn require_clique(c: &SimplicialComplex, t: &Clique) -> Result<()> {
    for v in t.vertices() {
        c.check_vertex(*v)?;
    }
    let vs = t.vertices();
    for (i, &u) in vs.iter().enumerate() {
        for &w in &vs[i + 1..] {
            if !c.has_face(&Face::from_sorted(vec![u, w])) {
                return Err(Error::NotAClique(format!("{:?}", c.face_labels(t))));
            }
        }
    }
    Ok(())
}

pub fn is_spanning(c: &SimplicialComplex, t: &Clique) -> Result<bool> {
    require_clique(c, t)?;
    Ok(c.has_face(t))
}

pub fn is_critical(c: &SimplicialComplex, t: &Clique) -> Result<bool> {
    require_clique(c, t)?;
    Ok(critical(c, t))
}

fn critical(c: &SimplicialComplex, t: &Clique) -> bool {
    t.ridges().any(|(_, r)| c.has_face(&r))
}

/// A `(k+1)`-vertex set all of whose `k`-subsets are faces, if any.
pub fn contains_simplex_boundary(c: &SimplicialComplex, k: usize) -> Option<Face> {
    match k {
        0 => c.vertices().next().map(|v| Face::from_sorted(vec![v])),
        1 => (c.num_vertices() >= 2).then(|| Face::from_sorted(vec![VertexId(0), VertexId(1)])),
        _ => simplex_boundary_in(c, &skeleton(c), k),
    }
}

fn simplex_boundary_in(c: &SimplicialComplex, g: &SkeletonGraph, k: usize) -> Option<Face> {
    find_clique(g, k + 1, |t| t.ridges().all(|(_, r)| c.has_face(&r)))
}

/// Why a complex misses a class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "vertices")]
pub enum Witness {
    /// A clique that is not a face.
    NonSpanningClique(Vec<VertexId>),
    /// A critical `(d+1)`-clique that is not a face.
    NonSpanningCriticalClique(Vec<VertexId>),
    /// `d+2` vertices carrying the boundary of a `(d+1)`-simplex.
    SimplexBoundary(Vec<VertexId>),
}

impl Witness {
    pub fn vertices(&self) -> &[VertexId] {
        match self {
            Witness::NonSpanningClique(v)
            | Witness::NonSpanningCriticalClique(v)
            | Witness::SimplexBoundary(v) => v,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BannerClass {
    pub flag: bool,
    pub strongly_banner: bool,
    pub banner: bool,
    /// Smallest non-spanning clique (smallest size first).
    pub flag_witness: Option<Witness>,
    pub strongly_banner_witness: Option<Witness>,
    pub banner_witness: Option<Witness>,
}

impl BannerClass {
    /// Witness for the weakest level that fails: banner if it fails, else
    /// strongly banner, else flag.
    pub fn witness(&self) -> Option<&Witness> {
        self.banner_witness
            .as_ref()
            .or(self.strongly_banner_witness.as_ref())
            .or(self.flag_witness.as_ref())
    }
}

fn require_classifiable(c: &SimplicialComplex) -> Result<()> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    if c.dim() == 0 {
        return Err(Error::ZeroDimensional);
    }
    Ok(())
}

/// Evaluates flag, strongly banner and banner with witnesses.
///
/// Zero-dimensional complexes are rejected: with the literal definition
/// two points would be flag but not banner.
pub fn classify(c: &SimplicialComplex) -> Result<BannerClass> {
    require_classifiable(c)?;
    let d = c.dim();
    let g = skeleton(c);

    let boundary = simplex_boundary_in(c, &g, d + 1).map(|f| Witness::SimplexBoundary(f.into()));
    let non_spanning = find_clique(&g, d + 1, |t| !c.has_face(t));
    let non_spanning_critical = match &non_spanning {
        None => None,
        Some(_) => find_clique(&g, d + 1, |t| !c.has_face(t) && critical(c, t)),
    };
    // a (d+2)-clique is never a face, so the scan stops there
    let flag_witness = (3..=d + 2)
        .find_map(|j| find_clique(&g, j, |t| !c.has_face(t)))
        .map(|t| Witness::NonSpanningClique(t.into()));

    let strongly_banner_witness = non_spanning
        .map(|t| Witness::NonSpanningClique(t.into()))
        .or_else(|| boundary.clone());
    let banner_witness = non_spanning_critical
        .map(|t| Witness::NonSpanningCriticalClique(t.into()))
        .or(boundary);

    Ok(BannerClass {
        flag: flag_witness.is_none(),
        strongly_banner: strongly_banner_witness.is_none(),
        banner: banner_witness.is_none(),
        flag_witness,
        strongly_banner_witness,
        banner_witness,
    })
}

pub fn is_banner(c: &SimplicialComplex) -> Result<bool> {
    require_classifiable(c)?;
    let d = c.dim();
    let g = skeleton(c);
    if simplex_boundary_in(c, &g, d + 1).is_some() {
        return Ok(false);
    }
    Ok(find_clique(&g, d + 1, |t| !c.has_face(t) && critical(c, t)).is_none())
}

/// The boundary of a triangle, up to relabelling.
pub fn is_triangle_boundary(c: &SimplicialComplex) -> bool {
    c.dim() == 1 && c.is_pure() && c.num_vertices() == 3 && c.facets().len() == 3
}

/// Least `j` such that the link of every `j`-vertex face is banner or the
/// boundary of a triangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BannerNumber {
    pub value: usize,
    /// Faces of size `value` whose links were checked (all passed).
    pub faces_checked: usize,
    /// A face of size `value - 1` whose link fails, when `value > 0`.
    pub failing_face: Option<Face>,
}

fn link_passes(c: &SimplicialComplex, sigma: &Face) -> Result<bool> {
    let link = c.link(sigma)?;
    Ok(is_triangle_boundary(&link) || is_banner(&link)?)
}

/// Computes `b_Δ`. Faces of each size are scanned in lexicographic order;
/// the empty face stands for `j = 0`, whose link is the complex itself.
pub fn banner_number(c: &SimplicialComplex) -> Result<BannerNumber> {
    require_classifiable(c)?;
    let d = c.dim();
    let mut failing: Option<Face> = None;
    for j in 0..d {
        let faces = c.faces(j);
        let first_failure = faces
            .par_iter()
            .map(|sigma| link_passes(c, sigma).map(|ok| (!ok).then(|| sigma.clone())))
            .find_first(|r| !matches!(r, Ok(None)));
        match first_failure {
            None => {
                return Ok(BannerNumber {
                    value: j,
                    faces_checked: faces.len(),
                    failing_face: failing,
                })
            }
            Some(Err(e)) => return Err(e),
            Some(Ok(face)) => failing = face,
        }
    }
    Err(Error::UndefinedBannerNumber {
        failing_face: failing.map(|f| c.face_labels(&f)).unwrap_or_default(),
    })
}

/// The `j`-cliques of `G(Δ̃)` for a ball `Δ`, split by kind.
#[derive(Clone, Debug)]
pub struct TildeCliques {
    pub tilde: SimplicialComplex,
    pub apex: VertexId,
    /// Cliques of `G(Δ)`.
    pub type1: Vec<Clique>,
    /// `(j−1)`-cliques of `G(∂Δ)` plus the apex.
    pub type2: Vec<Clique>,
    /// Remaining cliques through the apex: a clique of `G(Δ)` on boundary
    /// vertices that is not a clique of `G(∂Δ)`, plus the apex.
    pub type3: Vec<Clique>,
}

/// Ids in the result refer to [`TildeCliques::tilde`].
pub fn classify_tilde_cliques(ball: &SimplicialComplex, j: usize) -> Result<TildeCliques> {
    if j == 0 {
        return Err(Error::OutOfRange("clique size must be at least 1".into()));
    }
    let boundary = ball.boundary().ok_or(Error::NoBoundary)?;
    let (tilde, apex) = ball.tilde_with_apex(None)?;
    let to_tilde = |bc: &SimplicialComplex, v: VertexId| {
        tilde
            .vertex(bc.label(v))
            .expect("boundary vertex is a vertex of the tilde complex")
            .index()
    };
    let n = tilde.num_vertices();
    let boundary_graph = SkeletonGraph::from_edges(
        n,
        boundary.faces(2).iter().map(|e| {
            let [u, v] = [e.vertices()[0], e.vertices()[1]];
            (to_tilde(&boundary, u), to_tilde(&boundary, v))
        }),
    );
    let mut on_boundary = FixedBitSet::with_capacity(n);
    for v in boundary.vertices() {
        on_boundary.insert(to_tilde(&boundary, v));
    }

    let g = skeleton(&tilde);
    let (mut type1, mut type2, mut type3) = (Vec::new(), Vec::new(), Vec::new());
    let _ = for_each_clique(&g, j, |vs| {
        let t = clique_face(vs);
        if !t.contains(apex) {
            type1.push(t);
        } else {
            let rest: Vec<usize> = vs.iter().copied().filter(|&v| v != apex.index()).collect();
            let boundary_clique = rest.iter().all(|&v| on_boundary.contains(v))
                && rest
                    .iter()
                    .enumerate()
                    .all(|(i, &u)| rest[i + 1..].iter().all(|&w| boundary_graph.adjacent(u, w)));
            if boundary_clique {
                type2.push(t);
            } else {
                type3.push(t);
            }
        }
        ControlFlow::Continue(())
    });
    Ok(TildeCliques {
        tilde,
        apex,
        type1,
        type2,
        type3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(text: &str) -> SimplicialComplex {
        SimplicialComplex::parse(text).unwrap()
    }

    fn labels(c: &SimplicialComplex, f: &Face) -> String {
        c.face_labels(f).join(" ")
    }

    #[test]
    fn clique_enumeration() {
        let tb = sc("a b c\na b d\na c d\nb c d\n");
        let four: Vec<_> = cliques(&tb, 4);
        assert_eq!(four.len(), 1);
        assert_eq!(labels(&tb, &four[0]), "a b c d");
        let square = sc("a b\nb c\nc d\nd a\n");
        assert!(cliques(&square, 3).is_empty());
        assert_eq!(cliques(&square, 2).len(), 4);
        assert_eq!(cliques(&square, 0), vec![Face::empty()]);
        let pairs: Vec<String> = cliques(&tb, 2).iter().map(|f| labels(&tb, f)).collect();
        assert_eq!(pairs, ["a b", "a c", "a d", "b c", "b d", "c d"]);
    }

    #[test]
    fn spanning_and_critical() {
        let c = sc("a b c\na c d\n");
        let facet = c.facets()[0].clone();
        assert!(is_spanning(&c, &facet).unwrap());
        assert!(is_critical(&c, &facet).unwrap());
        let not_clique = c.face_of(&["b", "d"]).unwrap();
        assert!(matches!(
            is_spanning(&c, &not_clique),
            Err(Error::NotAClique(_))
        ));

        // hollow triangle: critical, not spanning
        let hollow = sc("a b\nb c\na c\n");
        let t = hollow.face_of(&["a", "b", "c"]).unwrap();
        assert!(!is_spanning(&hollow, &t).unwrap());
        assert!(is_critical(&hollow, &t).unwrap());
    }

    #[test]
    fn simplex_boundary_detection() {
        let tb = sc("a b c\na b d\na c d\nb c d\n");
        assert_eq!(
            contains_simplex_boundary(&tb, 3)
                .map(|f| labels(&tb, &f))
                .as_deref(),
            Some("a b c d")
        );
        let square = sc("a b\nb c\nc d\nd a\n");
        assert_eq!(contains_simplex_boundary(&square, 2), None);
    }

    #[test]
    fn classify_small_complexes() {
        let square = classify(&sc("a b\nb c\nc d\nd a\n")).unwrap();
        assert!(square.flag && square.strongly_banner && square.banner);
        assert_eq!(square.witness(), None);

        let tri = sc("a b\nb c\nc a\n");
        let class = classify(&tri).unwrap();
        assert!(!class.flag && !class.strongly_banner && !class.banner);
        assert!(matches!(class.witness(), Some(Witness::SimplexBoundary(_))));

        let tb = sc("a b c\na b d\na c d\nb c d\n");
        let class = classify(&tb).unwrap();
        assert!(!class.banner);
        assert_eq!(
            class.banner_witness,
            Some(Witness::SimplexBoundary(vec![
                VertexId(0),
                VertexId(1),
                VertexId(2),
                VertexId(3)
            ]))
        );

        assert_eq!(classify(&sc("a\nb\n")), Err(Error::ZeroDimensional));
        assert_eq!(classify(&sc("a b c\nc d\n")), Err(Error::NotPure));
    }

    #[test]
    fn flag_witness_is_smallest() {
        // octahedron with one triangle removed: that triangle is the witness
        let c = sc("a b c\na c d\na d e\na b e\nf b c\nf c d\nf d e\n");
        let class = classify(&c).unwrap();
        assert!(!class.flag);
        let w = class.flag_witness.unwrap();
        assert_eq!(
            c.face_labels(&Face::new(w.vertices().to_vec()).unwrap()),
            ["b", "e", "f"]
        );
    }

    #[test]
    fn banner_number_of_cycles() {
        let c3 = sc("a b\nb c\nc a\n");
        assert_eq!(banner_number(&c3).unwrap().value, 0);
        let c5 = sc("a b\nb c\nc d\nd e\ne a\n");
        assert_eq!(banner_number(&c5).unwrap().value, 0);
        // K4 as a graph: a triangle but not C3
        let k4 = sc("a b\na c\na d\nb c\nb d\nc d\n");
        assert!(matches!(
            banner_number(&k4),
            Err(Error::UndefinedBannerNumber { .. })
        ));
    }

    #[test]
    fn banner_number_of_tetrahedron_boundary() {
        let tb = sc("a b c\na b d\na c d\nb c d\n");
        let b = banner_number(&tb).unwrap();
        assert_eq!(b.value, 1);
        assert_eq!(b.faces_checked, 4);
        assert_eq!(b.failing_face, Some(Face::empty()));
    }

    #[test]
    fn tilde_clique_types_of_a_triangle() {
        let tri = sc("a b c\n");
        let t3 = classify_tilde_cliques(&tri, 3).unwrap();
        assert_eq!(t3.type1.len(), 1);
        assert_eq!(t3.type2.len(), 3);
        assert!(t3.type3.is_empty());
        let t1 = classify_tilde_cliques(&tri, 1).unwrap();
        assert_eq!(t1.type1.len(), 3);
        assert_eq!(t1.type2, vec![Face::from_sorted(vec![t1.apex])]);
        assert!(t1.type3.is_empty());
        assert_eq!(
            classify_tilde_cliques(&sc("a b\nb c\nc a\n"), 2).err(),
            Some(Error::NoBoundary)
        );
    }
}
