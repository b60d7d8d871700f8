//! Simplicial homology with GF(2) coefficients.
//!
//! Ranks of boundary matrices are computed by Gaussian elimination on
//! bitset columns, faces taken in lexicographic order.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::skeleton;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BettiKind {
    Reduced,
    Unreduced,
    Relative,
}

/// `values[k]` is the `k`-th Betti number over GF(2), `k = 0..=d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiVector {
    pub kind: BettiKind,
    pub values: Vec<usize>,
}

impl BettiVector {
    pub fn get(&self, k: usize) -> usize {
        self.values.get(k).copied().unwrap_or(0)
    }

    /// `Σ (-1)^k β_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.values
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// Rank over GF(2) of a matrix given as columns of row indices.
pub(crate) fn gf2_rank(rows: usize, columns: impl IntoIterator<Item = FixedBitSet>) -> usize {
    let mut pivots: Vec<Option<FixedBitSet>> = vec![None; rows];
    let mut rank = 0;
    for mut col in columns {
        while let Some(p) = col.minimum() {
            match &pivots[p] {
                Some(reducer) => col.symmetric_difference_with(reducer),
                None => {
                    pivots[p] = Some(col);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Chain groups of a complex, optionally modulo a subcomplex.
struct Chains<'a> {
    levels: Vec<Vec<&'a Face>>,
    index: Vec<HashMap<&'a Face, usize>>,
}

impl<'a> Chains<'a> {
    /// `levels[k]` holds faces with `k + 1` vertices, minus those in `excluded`.
    fn new(c: &'a SimplicialComplex, excluded: impl Fn(&Face) -> bool) -> Self {
        let levels: Vec<Vec<&Face>> = (1..=c.dim() + 1)
            .map(|size| c.faces(size).iter().filter(|f| !excluded(f)).collect())
            .collect();
        let index = levels
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, f)| (*f, i)).collect())
            .collect();
        Chains { levels, index }
    }

    fn dim(&self, k: usize) -> usize {
        self.levels.get(k).map_or(0, Vec::len)
    }

    /// Rank of `∂_k : C_k → C_{k-1}` for `k ≥ 1`.
    fn boundary_rank(&self, k: usize) -> usize {
        if k == 0 || k >= self.levels.len() {
            return 0;
        }
        let rows = self.levels[k - 1].len();
        let row_index = &self.index[k - 1];
        let columns = self.levels[k].iter().map(|f| {
            let mut col = FixedBitSet::with_capacity(rows);
            for (_, r) in f.ridges() {
                if let Some(&i) = row_index.get(&r) {
                    col.insert(i);
                }
            }
            col
        });
        gf2_rank(rows, columns)
    }

    /// `β_k = dim C_k − rank ∂_k − rank ∂_{k+1}`, with `rank ∂_0 = augmentation`.
    fn betti(&self, augmentation: usize, kind: BettiKind) -> BettiVector {
        let ranks: Vec<usize> = (0..=self.levels.len())
            .map(|k| {
                if k == 0 {
                    augmentation
                } else {
                    self.boundary_rank(k)
                }
            })
            .collect();
        let values = (0..self.levels.len())
            .map(|k| self.dim(k) - ranks[k] - ranks[k + 1])
            .collect();
        BettiVector { kind, values }
    }
}

/// Reduced Betti numbers `β̃_0, …, β̃_d`.
pub fn z2_betti(c: &SimplicialComplex) -> BettiVector {
    Chains::new(c, |_| false).betti(1, BettiKind::Reduced)
}

pub fn z2_betti_unreduced(c: &SimplicialComplex) -> BettiVector {
    Chains::new(c, |_| false).betti(0, BettiKind::Unreduced)
}

/// Betti numbers of `C(c) / C(sub)`. Without a subcomplex this is the
/// unreduced homology of `c`. Vertices of `sub` are matched to `c` by label.
pub fn z2_relative_betti(
    c: &SimplicialComplex,
    sub: Option<&SimplicialComplex>,
) -> Result<BettiVector> {
    let Some(sub) = sub else {
        return Ok(z2_betti_unreduced(c));
    };
    let mut in_sub = std::collections::HashSet::new();
    for f in sub.facets() {
        let labels = sub.face_labels(f);
        let face = c
            .face_of(&labels)
            .ok()
            .filter(|face| c.has_face(face))
            .ok_or_else(|| Error::NotSubcomplex(format!("{{{}}}", labels.join(" "))))?;
        for k in 1..=face.len() {
            in_sub.extend(face.subsets(k));
        }
    }
    Ok(Chains::new(c, |f| in_sub.contains(f)).betti(0, BettiKind::Relative))
}

/// Reduced Betti numbers of an `m`-sphere: `β̃_k = δ_{k,m}`.
pub fn is_sphere_pattern(b: &BettiVector, m: usize) -> bool {
    b.values.len() == m + 1
        && b.values
            .iter()
            .enumerate()
            .all(|(k, &v)| v == usize::from(k == m))
}

/// First nonempty face (by size, then lexicographically) whose link is not a
/// GF(2) homology sphere of dimension `d − |τ|`. A disconnected complex
/// reports the empty face.
pub fn homology_manifold_failure(c: &SimplicialComplex) -> Result<Option<Face>> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    if !skeleton(c).is_connected() {
        return Ok(Some(Face::empty()));
    }
    let d = c.dim();
    // links of facets are the void complex, the (-1)-sphere
    for k in 1..=d {
        let bad = c.faces(k).par_iter().find_first(|tau| {
            let link = c.link(tau).expect("non-facet face has a nonempty link");
            !is_sphere_pattern(&z2_betti(&link), d - k)
        });
        if bad.is_some() {
            return Ok(bad.cloned());
        }
    }
    Ok(None)
}

pub fn is_homology_manifold(c: &SimplicialComplex) -> Result<bool> {
    Ok(homology_manifold_failure(c)?.is_none())
}

pub fn is_homology_sphere(c: &SimplicialComplex) -> Result<bool> {
    Ok(is_homology_manifold(c)? && is_sphere_pattern(&z2_betti(c), c.dim()))
}
