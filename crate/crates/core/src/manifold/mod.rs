//! Pseudomanifold, normality and homology-manifold recognition.
//!
//! Terminology follows the usual combinatorial conventions: a
//! pseudomanifold is pure, every ridge lies in exactly two facets (one or
//! two when a boundary is allowed) and the facet graph is connected. A
//! pseudomanifold is normal when every link of dimension at least one is
//! connected.

mod homology;
mod shelling;

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::graph::{skeleton, SkeletonGraph};

pub use homology::{
    homology_manifold_failure, is_homology_manifold, is_homology_sphere, is_sphere_pattern,
    z2_betti, z2_betti_unreduced, z2_relative_betti, BettiKind, BettiVector,
};
pub use shelling::{
    find_shelling, is_shelling_order, star_seed, ShellingOrder, DEFAULT_SHELLING_BUDGET,
};

/// Facets as nodes, joined when they share a ridge.
#[derive(Clone, Debug)]
pub struct FacetGraph {
    pub facets: Vec<Face>,
    pub graph: SkeletonGraph,
}

fn require_pure(c: &SimplicialComplex) -> Result<()> {
    if c.is_pure() {
        Ok(())
    } else {
        Err(Error::NotPure)
    }
}

/// Facet indices per ridge.
fn ridge_incidence(c: &SimplicialComplex) -> HashMap<Face, Vec<usize>> {
    let mut map: HashMap<Face, Vec<usize>> = HashMap::new();
    for (i, f) in c.facets().iter().enumerate() {
        for (_, r) in f.ridges() {
            map.entry(r).or_default().push(i);
        }
    }
    map
}

pub fn facet_graph(c: &SimplicialComplex) -> Result<FacetGraph> {
    require_pure(c)?;
    let mut edges = Vec::new();
    for ids in ridge_incidence(c).values() {
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    Ok(FacetGraph {
        facets: c.facets().to_vec(),
        graph: SkeletonGraph::from_edges(c.facets().len(), edges),
    })
}

pub fn is_strongly_connected(c: &SimplicialComplex) -> Result<bool> {
    Ok(facet_graph(c)?.graph.is_connected())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum PseudomanifoldFailure {
    /// A ridge in no facet other than itself is impossible; this is a ridge
    /// in three or more facets.
    RidgeDegree {
        ridge: Face,
        facets: usize,
    },
    NotStronglyConnected,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pseudomanifold {
    Closed,
    WithBoundary,
    No(PseudomanifoldFailure),
}

impl Pseudomanifold {
    pub fn is_closed(&self) -> bool {
        matches!(self, Pseudomanifold::Closed)
    }

    pub fn is_pseudomanifold(&self) -> bool {
        !matches!(self, Pseudomanifold::No(_))
    }
}

pub fn is_pseudomanifold(c: &SimplicialComplex) -> Result<Pseudomanifold> {
    require_pure(c)?;
    let incidence = ridge_incidence(c);
    let mut ridges: Vec<(&Face, usize)> = incidence.iter().map(|(r, ids)| (r, ids.len())).collect();
    ridges.sort();
    if let Some((r, n)) = ridges.iter().find(|(_, n)| *n > 2) {
        return Ok(Pseudomanifold::No(PseudomanifoldFailure::RidgeDegree {
            ridge: (*r).clone(),
            facets: *n,
        }));
    }
    if !is_strongly_connected(c)? {
        return Ok(Pseudomanifold::No(
            PseudomanifoldFailure::NotStronglyConnected,
        ));
    }
    if ridges.iter().any(|(_, n)| *n == 1) {
        Ok(Pseudomanifold::WithBoundary)
    } else {
        Ok(Pseudomanifold::Closed)
    }
}

/// First face (by size, then lexicographically) whose link has dimension
/// at least one and is disconnected. The empty face, whose link is the
/// complex itself, is included.
pub fn non_normal_face(c: &SimplicialComplex) -> Result<Option<Face>> {
    if !is_pseudomanifold(c)?.is_pseudomanifold() {
        return Err(Error::NotPseudomanifold);
    }
    let d = c.dim();
    for k in 0..d {
        let bad = c.faces(k).par_iter().find_first(|tau| {
            let link = c
                .link(tau)
                .expect("a face of a pure complex of higher dimension");
            !skeleton(&link).is_connected()
        });
        if bad.is_some() {
            return Ok(bad.cloned());
        }
    }
    Ok(None)
}

pub fn is_normal(c: &SimplicialComplex) -> Result<bool> {
    Ok(non_normal_face(c)?.is_none())
}

/// First vertex whose antistar is not strongly connected, for a closed
/// pseudomanifold.
pub fn barnette_failure(c: &SimplicialComplex) -> Result<Option<VertexId>> {
    if !is_pseudomanifold(c)?.is_closed() {
        return Err(Error::NotPseudomanifold);
    }
    let vertices: Vec<VertexId> = c.vertices().collect();
    let bad = vertices.par_iter().find_first(|&&x| match c.antistar(x) {
        Ok(a) => !matches!(is_strongly_connected(&a), Ok(true)),
        Err(_) => true,
    });
    Ok(bad.copied())
}

/// The antistar of every vertex is strongly connected.
pub fn verify_barnette_antistar(c: &SimplicialComplex) -> Result<bool> {
    Ok(barnette_failure(c)?.is_none())
}

/// Summary of the manifold-like properties of a pure complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifoldClass {
    pub pseudomanifold: Pseudomanifold,
    pub normal: bool,
    pub homology_manifold: bool,
    pub homology_sphere: bool,
    /// Disconnected link, when the complex is a pseudomanifold but not normal.
    pub non_normal_face: Option<Face>,
    /// Face whose link is not a homology sphere of the right dimension.
    pub homology_manifold_failure: Option<Face>,
}

impl ManifoldClass {
    pub fn closed_pseudomanifold(&self) -> bool {
        self.pseudomanifold.is_closed()
    }

    pub fn pseudomanifold_with_boundary(&self) -> bool {
        matches!(self.pseudomanifold, Pseudomanifold::WithBoundary)
    }

    /// Closed normal pseudomanifold.
    pub fn normal_pseudomanifold(&self) -> bool {
        self.closed_pseudomanifold() && self.normal
    }
}

pub fn manifold_class(c: &SimplicialComplex) -> Result<ManifoldClass> {
    let pseudomanifold = is_pseudomanifold(c)?;
    let non_normal = if pseudomanifold.is_pseudomanifold() {
        non_normal_face(c)?
    } else {
        None
    };
    let normal = pseudomanifold.is_pseudomanifold() && non_normal.is_none();
    let hm_failure = homology_manifold_failure(c)?;
    let homology_manifold = hm_failure.is_none();
    let homology_sphere = homology_manifold && is_sphere_pattern(&z2_betti(c), c.dim());
    Ok(ManifoldClass {
        pseudomanifold,
        normal,
        homology_manifold,
        homology_sphere,
        non_normal_face: non_normal,
        homology_manifold_failure: hm_failure,
    })
}
