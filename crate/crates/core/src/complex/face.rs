use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense vertex index, contiguous `0..n` within one complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn from_index(i: usize) -> Self {
        VertexId(u32::try_from(i).expect("vertex index exceeds u32"))
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A face: a strictly increasing list of vertex ids.
///
/// The empty face is allowed here (it is the face whose link is the whole
/// complex); complexes themselves are never empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<VertexId>", into = "Vec<VertexId>")]
pub struct Face(Vec<VertexId>);

impl TryFrom<Vec<VertexId>> for Face {
    type Error = Error;

    fn try_from(v: Vec<VertexId>) -> Result<Self> {
        Face::new(v)
    }
}

impl Face {
    /// Sorts the vertices; a repeated vertex is an error.
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self> {
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MalformedFace(format!("vertex {} repeated", w[0])));
        }
        Ok(Face(vertices))
    }

    /// Caller guarantees `vertices` is strictly increasing.
    pub(crate) fn from_sorted(vertices: Vec<VertexId>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Face(vertices)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Geometric dimension, `-1` for the empty face.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                match w.cmp(v) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Equal => continue 'outer,
                    std::cmp::Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        self.intersection(other).is_empty()
    }

    pub fn union(&self, other: &Face) -> Face {
        Face(
            self.0
                .iter()
                .merge(other.0.iter())
                .dedup()
                .copied()
                .collect(),
        )
    }

    pub fn intersection(&self, other: &Face) -> Face {
        Face(
            self.0
                .iter()
                .filter(|v| other.contains(**v))
                .copied()
                .collect(),
        )
    }

    pub fn difference(&self, other: &Face) -> Face {
        Face(
            self.0
                .iter()
                .filter(|v| !other.contains(**v))
                .copied()
                .collect(),
        )
    }

    pub fn with(&self, v: VertexId) -> Face {
        let mut out = self.0.clone();
        if let Err(pos) = out.binary_search(&v) {
            out.insert(pos, v);
        }
        Face(out)
    }

    pub fn without(&self, v: VertexId) -> Face {
        Face(self.0.iter().filter(|&&w| w != v).copied().collect())
    }

    /// All `k`-vertex subsets in lexicographic order.
    pub fn subsets(&self, k: usize) -> impl Iterator<Item = Face> + '_ {
        self.0.iter().copied().combinations(k).map(Face)
    }

    /// The codimension-one faces, each paired with the vertex left out.
    pub fn ridges(&self) -> impl Iterator<Item = (VertexId, Face)> + '_ {
        self.0.iter().map(move |&v| (v, self.without(v)))
    }
}

impl From<Face> for Vec<VertexId> {
    fn from(f: Face) -> Self {
        f.0
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}
