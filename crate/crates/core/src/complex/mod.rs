//! Finite simplicial complexes stored as facet lists.
//!
//! A [`SimplicialComplex`] keeps its facets as the source of truth and
//! builds the set of `k`-vertex faces on first use, one cardinality at a
//! time. Vertex labels are interned to dense ids in natural label order
//! (`x2` before `x10`), so two complexes with the same labelled facets are
//! identical regardless of how their input was ordered.

mod face;
mod text;

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use face::{Face, VertexId};

/// Face counts `(f₋₁, f₀, …, f_d)` with `f₋₁ = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(Vec<usize>);

impl FVector {
    pub fn new(counts: Vec<usize>) -> Self {
        FVector(counts)
    }

    /// `(f₋₁, f₀, …, f_d)`.
    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    /// Number of faces of dimension `dim` (`-1` is the empty face).
    pub fn f(&self, dim: isize) -> usize {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|i| self.0.get(i).copied())
            .unwrap_or(0)
    }

    /// `Σ_{k ≥ -1} (-1)^k f_k`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 1 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Debug, Default)]
struct FaceLevel {
    sorted: Vec<Face>,
    set: HashSet<Face>,
}

/// A finite simplicial complex with at least one facet.
pub struct SimplicialComplex {
    labels: Vec<String>,
    ids: HashMap<String, VertexId>,
    facets: Vec<Face>,
    dim: usize,
    pure: bool,
    absorbed: usize,
    /// `levels[k]` holds the faces with exactly `k` vertices.
    levels: Vec<OnceLock<FaceLevel>>,
}

/// Natural order on labels with a byte-wise tiebreak so it stays total.
pub(crate) fn label_order(a: &str, b: &str) -> Ordering {
    natord::compare(a, b).then_with(|| a.cmp(b))
}

fn check_label(label: &str) -> Result<()> {
    if label.is_empty() || label.chars().any(char::is_whitespace) {
        return Err(Error::MalformedFace(format!(
            "vertex label {label:?} is empty or contains whitespace"
        )));
    }
    Ok(())
}

impl SimplicialComplex {
    /// Builds a complex from facets given as label lists.
    ///
    /// Facets contained in other facets (and exact duplicates) are absorbed
    /// and counted, see [`absorbed`](Self::absorbed).
    pub fn from_facets<I, F, S>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let raw: Vec<Vec<String>> = facets
            .into_iter()
            .map(|f| f.into_iter().map(|s| s.as_ref().to_owned()).collect())
            .collect();
        if raw.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let mut labels: Vec<String> = Vec::new();
        {
            let mut seen = HashSet::new();
            for facet in &raw {
                if facet.is_empty() {
                    return Err(Error::MalformedFace("empty facet".into()));
                }
                for l in facet {
                    check_label(l)?;
                    if seen.insert(l.as_str()) {
                        labels.push(l.clone());
                    }
                }
            }
        }
        labels.sort_by(|a, b| label_order(a, b));
        let ids: HashMap<&str, VertexId> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), VertexId::from_index(i)))
            .collect();
        let faces = raw
            .iter()
            .map(|facet| {
                Face::new(facet.iter().map(|l| ids[l.as_str()]).collect()).map_err(|_| {
                    Error::MalformedFace(format!(
                        "repeated vertex in facet {{{}}}",
                        facet.join(" ")
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::assemble(labels, faces)
    }

    /// `labels` must already be in canonical order; unused labels are dropped.
    fn assemble(labels: Vec<String>, facets: Vec<Face>) -> Result<Self> {
        if facets.is_empty() || facets.iter().all(Face::is_empty) {
            return Err(Error::EmptyComplex);
        }
        let total = facets.len();
        let mut facets = facets;
        facets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        facets.dedup();
        let mut kept: Vec<Face> = Vec::with_capacity(facets.len());
        for f in facets {
            if !kept.iter().any(|k| f.is_subset_of(k)) {
                kept.push(f);
            }
        }
        let absorbed = total - kept.len();

        let mut used = vec![false; labels.len()];
        for f in &kept {
            for v in f.vertices() {
                used[v.index()] = true;
            }
        }
        let mut remap = vec![VertexId(u32::MAX); labels.len()];
        let mut new_labels = Vec::with_capacity(labels.len());
        for (i, label) in labels.into_iter().enumerate() {
            if used[i] {
                remap[i] = VertexId::from_index(new_labels.len());
                new_labels.push(label);
            }
        }
        let mut facets: Vec<Face> = kept
            .into_iter()
            .map(|f| Face::from_sorted(f.vertices().iter().map(|v| remap[v.index()]).collect()))
            .collect();
        facets.sort();

        let dim = facets.iter().map(Face::len).max().unwrap_or(1) - 1;
        let pure = facets.iter().all(|f| f.len() == dim + 1);
        let ids = new_labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), VertexId::from_index(i)))
            .collect();
        Ok(SimplicialComplex {
            labels: new_labels,
            ids,
            facets,
            dim,
            pure,
            absorbed,
            levels: (0..=dim + 1).map(|_| OnceLock::new()).collect(),
        })
    }

    /// Subcomplex generated by `facets`, given in this complex's ids.
    pub(crate) fn sub_complex(&self, facets: Vec<Face>) -> Result<Self> {
        Self::assemble(self.labels.clone(), facets)
    }

    /// Number of input facets that were dropped as duplicates or as faces
    /// of other facets.
    pub fn absorbed(&self) -> usize {
        self.absorbed
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_pure(&self) -> bool {
        self.pure
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> {
        (0..self.labels.len()).map(VertexId::from_index)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.index()]
    }

    pub fn vertex(&self, label: &str) -> Result<VertexId> {
        self.ids
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_owned()))
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.index() < self.labels.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.to_string()))
        }
    }

    /// Resolves labels to a face. The result need not belong to the complex.
    pub fn face_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Face> {
        let ids = labels
            .iter()
            .map(|l| self.vertex(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Face::new(ids)
    }

    pub fn face_labels(&self, face: &Face) -> Vec<String> {
        face.vertices()
            .iter()
            .map(|&v| self.label(v).to_owned())
            .collect()
    }

    /// Facets in lexicographic order of their vertex ids.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn facets_containing<'a>(&'a self, face: &'a Face) -> impl Iterator<Item = &'a Face> + 'a {
        self.facets.iter().filter(move |f| face.is_subset_of(f))
    }

    fn level(&self, k: usize) -> &FaceLevel {
        self.levels[k].get_or_init(|| {
            let mut set = HashSet::new();
            for f in self.facets.iter().filter(|f| f.len() >= k) {
                set.extend(f.subsets(k));
            }
            let mut sorted: Vec<Face> = set.iter().cloned().collect();
            sorted.sort();
            FaceLevel { sorted, set }
        })
    }

    /// All faces with exactly `k` vertices, sorted; empty when `k > d + 1`.
    pub fn faces(&self, k: usize) -> &[Face] {
        if k > self.dim + 1 {
            return &[];
        }
        &self.level(k).sorted
    }

    /// All faces including the empty one, by increasing size.
    pub fn all_faces(&self) -> impl Iterator<Item = &Face> {
        (0..=self.dim + 1).flat_map(move |k| self.faces(k).iter())
    }

    pub fn has_face(&self, face: &Face) -> bool {
        face.len() <= self.dim + 1 && self.level(face.len()).set.contains(face)
    }

    pub fn f_vector(&self) -> FVector {
        FVector((0..=self.dim + 1).map(|k| self.faces(k).len()).collect())
    }

    /// Every nonempty face, written with labels. Comparable across complexes.
    pub fn labeled_faces(&self) -> BTreeSet<Vec<String>> {
        self.all_faces()
            .filter(|f| !f.is_empty())
            .map(|f| self.face_labels(f))
            .collect()
    }

    pub fn labeled_facets(&self) -> BTreeSet<Vec<String>> {
        self.facets.iter().map(|f| self.face_labels(f)).collect()
    }

    fn require_face(&self, face: &Face) -> Result<()> {
        if face
            .vertices()
            .iter()
            .all(|v| v.index() < self.labels.len())
            && self.has_face(face)
        {
            Ok(())
        } else {
            Err(Error::NotAFace(face.to_string()))
        }
    }

    /// `{σ : σ ∩ τ = ∅, σ ∪ τ ∈ Δ}`.
    ///
    /// The link of a facet is the void complex, which is not representable,
    /// so it is reported as [`Error::EmptyComplex`].
    pub fn link(&self, tau: &Face) -> Result<Self> {
        self.require_face(tau)?;
        let facets: Vec<Face> = self
            .facets_containing(tau)
            .map(|f| f.difference(tau))
            .filter(|f| !f.is_empty())
            .collect();
        self.sub_complex(facets)
    }

    pub fn vertex_link(&self, x: VertexId) -> Result<Self> {
        self.check_vertex(x)?;
        self.link(&Face::from_sorted(vec![x]))
    }

    /// Closed star: the facets through `x`.
    pub fn star(&self, x: VertexId) -> Result<Self> {
        self.check_vertex(x)?;
        let facets = self
            .facets
            .iter()
            .filter(|f| f.contains(x))
            .cloned()
            .collect();
        self.sub_complex(facets)
    }

    /// Subcomplex induced on every vertex except `x`.
    pub fn antistar(&self, x: VertexId) -> Result<Self> {
        self.check_vertex(x)?;
        let rest: Vec<VertexId> = self.vertices().filter(|&v| v != x).collect();
        self.induced(&rest)
    }

    /// Faces whose vertices all lie in `subset`.
    pub fn induced(&self, subset: &[VertexId]) -> Result<Self> {
        let mut keep = vec![false; self.labels.len()];
        for &v in subset {
            self.check_vertex(v)?;
            keep[v.index()] = true;
        }
        let facets: Vec<Face> = self
            .facets
            .iter()
            .map(|f| {
                Face::from_sorted(
                    f.vertices()
                        .iter()
                        .copied()
                        .filter(|v| keep[v.index()])
                        .collect(),
                )
            })
            .filter(|f| !f.is_empty())
            .collect();
        self.sub_complex(facets)
    }

    /// First label of the form `_apex{i}` not present here or in `taken`.
    fn fresh_label(&self, taken: &[&str]) -> String {
        (0..)
            .map(|i| format!("_apex{i}"))
            .find(|l| !self.ids.contains_key(l) && !taken.contains(&l.as_str()))
            .expect("unbounded label supply")
    }

    fn apex_label(&self, supplied: Option<&str>, taken: &[&str]) -> Result<String> {
        match supplied {
            Some(l) => {
                check_label(l)?;
                if self.ids.contains_key(l) || taken.contains(&l) {
                    Err(Error::LabelClash(l.to_owned()))
                } else {
                    Ok(l.to_owned())
                }
            }
            None => Ok(self.fresh_label(taken)),
        }
    }

    fn labeled_facets_with(&self, apex: &str) -> Vec<Vec<String>> {
        self.facets
            .iter()
            .map(|f| {
                let mut labels = self.face_labels(f);
                labels.push(apex.to_owned());
                labels
            })
            .collect()
    }

    /// Cone with a new apex; `None` picks `_apex0`, `_apex1`, ….
    pub fn cone(&self, apex: Option<&str>) -> Result<Self> {
        let apex = self.apex_label(apex, &[])?;
        Self::from_facets(self.labeled_facets_with(&apex))
    }

    /// Union of two cones over this complex with distinct new apexes.
    pub fn suspension(&self, apexes: Option<(&str, &str)>) -> Result<Self> {
        let (north, south) = match apexes {
            Some((n, s)) => {
                let n = self.apex_label(Some(n), &[])?;
                let s = self.apex_label(Some(s), &[n.as_str()])?;
                (n, s)
            }
            None => {
                let n = self.fresh_label(&[]);
                let s = self.fresh_label(&[n.as_str()]);
                (n, s)
            }
        };
        let mut facets = self.labeled_facets_with(&north);
        facets.extend(self.labeled_facets_with(&south));
        Self::from_facets(facets)
    }

    /// Faces with exactly `d` vertices that lie in a single facet.
    pub fn boundary_ridges(&self) -> Vec<Face> {
        let mut count: HashMap<Face, usize> = HashMap::new();
        for f in self.facets.iter().filter(|f| f.len() == self.dim + 1) {
            for (_, r) in f.ridges() {
                *count.entry(r).or_default() += 1;
            }
        }
        let mut out: Vec<Face> = count
            .into_iter()
            .filter(|(r, c)| *c == 1 && !r.is_empty())
            .map(|(r, _)| r)
            .collect();
        out.sort();
        out
    }

    /// The complex generated by boundary ridges, or `None` if there are none.
    pub fn boundary(&self) -> Option<Self> {
        let ridges = self.boundary_ridges();
        if ridges.is_empty() {
            None
        } else {
            self.sub_complex(ridges).ok()
        }
    }

    /// `Δ ∪ (∂Δ * apex)`; the result's apex id is returned alongside.
    pub fn tilde_with_apex(&self, apex: Option<&str>) -> Result<(Self, VertexId)> {
        let boundary = self.boundary().ok_or(Error::NoBoundary)?;
        let apex = self.apex_label(apex, &[])?;
        let mut facets: Vec<Vec<String>> =
            self.facets.iter().map(|f| self.face_labels(f)).collect();
        facets.extend(boundary.labeled_facets_with(&apex));
        let out = Self::from_facets(facets)?;
        let id = out.vertex(&apex)?;
        Ok((out, id))
    }

    pub fn tilde(&self, apex: Option<&str>) -> Result<Self> {
        self.tilde_with_apex(apex).map(|(c, _)| c)
    }
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        SimplicialComplex {
            labels: self.labels.clone(),
            ids: self.ids.clone(),
            facets: self.facets.clone(),
            dim: self.dim,
            pure: self.pure,
            absorbed: self.absorbed,
            levels: (0..=self.dim + 1).map(|_| OnceLock::new()).collect(),
        }
    }
}

/// Equal when the labelled facets agree.
impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("dim", &self.dim)
            .field("pure", &self.pure)
            .field("facets", &self.labeled_facets())
            .finish()
    }
}
