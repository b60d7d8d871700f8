//! Backtracking search for shellings.
//!
//! A facet `F` may follow a prefix when `F ∩ (F₁ ∪ … ∪ F_{k−1})` is pure of
//! dimension `d − 1`. Writing `R` for the vertices `v ∈ F` whose ridge
//! `F ∖ v` already lies in the prefix, that holds iff `R` is nonempty and
//! every earlier facet misses at least one vertex of `R`.
//!
//! Whether a facet can be added depends only on the *set* of facets used so
//! far, so failed sets are remembered and never expanded twice.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

pub const DEFAULT_SHELLING_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ShellingOrder(pub Vec<Face>);

impl ShellingOrder {
    pub fn facets(&self) -> &[Face] {
        &self.0
    }
}

/// Checks the shelling condition directly on faces: the faces of each facet
/// already present form a complex whose maximal faces are all ridges.
/// Also requires `order` to list every facet of `c` exactly once.
pub fn is_shelling_order(c: &SimplicialComplex, order: &[Face]) -> bool {
    let mut expected: Vec<&Face> = c.facets().iter().collect();
    let mut given: Vec<&Face> = order.iter().collect();
    expected.sort();
    given.sort();
    if expected != given {
        return false;
    }
    is_shelling_prefix(order)
}

fn is_shelling_prefix(order: &[Face]) -> bool {
    for (k, f) in order.iter().enumerate().skip(1) {
        let previous = &order[..k];
        let present: Vec<Face> = (1..=f.len())
            .flat_map(|size| f.subsets(size))
            .filter(|s| previous.iter().any(|g| s.is_subset_of(g)))
            .collect();
        let maximal = present.iter().filter(|s| {
            !present
                .iter()
                .any(|t| t.len() > s.len() && s.is_subset_of(t))
        });
        let mut any = false;
        for s in maximal {
            any = true;
            if s.len() + 1 != f.len() {
                return false;
            }
        }
        if !any {
            return false;
        }
    }
    true
}

struct Search<'a> {
    facets: &'a [Face],
    budget: u64,
    expansions: u64,
    dead: HashSet<FixedBitSet>,
}

impl Search<'_> {
    /// Number of ridges of `facets[f]` already in the prefix, if `f` can be added.
    fn addable(&self, f: usize, used: &FixedBitSet) -> Option<usize> {
        let facet = &self.facets[f];
        let shared: Vec<VertexId> = facet
            .ridges()
            .filter(|(_, r)| used.ones().any(|g| r.is_subset_of(&self.facets[g])))
            .map(|(v, _)| v)
            .collect();
        if shared.is_empty() {
            return None;
        }
        let ok = used
            .ones()
            .all(|g| shared.iter().any(|&v| !self.facets[g].contains(v)));
        ok.then_some(shared.len())
    }

    fn extend(&mut self, used: &mut FixedBitSet, order: &mut Vec<usize>) -> Result<bool> {
        if order.len() == self.facets.len() {
            return Ok(true);
        }
        if self.dead.contains(used) {
            return Ok(false);
        }
        self.expansions += 1;
        if self.expansions > self.budget {
            return Err(Error::Timeout(self.budget));
        }
        let mut candidates: Vec<(usize, usize)> = (0..self.facets.len())
            .filter(|&f| !used.contains(f))
            .filter_map(|f| self.addable(f, used).map(|shared| (shared, f)))
            .collect();
        candidates.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, f) in candidates {
            used.insert(f);
            order.push(f);
            if self.extend(used, order)? {
                return Ok(true);
            }
            order.pop();
            used.set(f, false);
        }
        self.dead.insert(used.clone());
        Ok(false)
    }
}

/// Searches for a shelling that starts with `seed`.
///
/// Returns `Ok(None)` when the search space is exhausted and
/// [`Error::Timeout`] when more than `budget` nodes were expanded.
pub fn find_shelling(
    c: &SimplicialComplex,
    seed: Option<&[Face]>,
    budget: u64,
) -> Result<Option<ShellingOrder>> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let facets = c.facets();
    let mut search = Search {
        facets,
        budget,
        expansions: 0,
        dead: HashSet::new(),
    };
    let mut used = FixedBitSet::with_capacity(facets.len());
    let mut order = Vec::with_capacity(facets.len());

    let found = match seed.filter(|s| !s.is_empty()) {
        Some(seed) => {
            for f in seed {
                let i = facets.binary_search(f).map_err(|_| {
                    Error::BadSeed(format!("{:?} is not a facet", c.face_labels(f)))
                })?;
                if used.put(i) {
                    return Err(Error::BadSeed(format!("{:?} repeated", c.face_labels(f))));
                }
                order.push(i);
            }
            let prefix: Vec<Face> = order.iter().map(|&i| facets[i].clone()).collect();
            if !is_shelling_prefix(&prefix) {
                return Err(Error::BadSeed("seed is not a shelling prefix".into()));
            }
            search.extend(&mut used, &mut order)?
        }
        None => {
            let mut found = false;
            for start in 0..facets.len() {
                used.insert(start);
                order.push(start);
                if search.extend(&mut used, &mut order)? {
                    found = true;
                    break;
                }
                order.pop();
                used.set(start, false);
            }
            found
        }
    };
    Ok(found.then(|| ShellingOrder(order.into_iter().map(|i| facets[i].clone()).collect())))
}

/// A shelling order of the closed star of `x`, in the ids of `c`, for use
/// as a seed.
pub fn star_seed(c: &SimplicialComplex, x: VertexId, budget: u64) -> Result<Option<Vec<Face>>> {
    let star = c.star(x)?;
    let Some(order) = find_shelling(&star, None, budget)? else {
        return Ok(None);
    };
    order
        .0
        .iter()
        .map(|f| c.face_of(&star.face_labels(f)))
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(text: &str) -> SimplicialComplex {
        SimplicialComplex::parse(text).unwrap()
    }

    #[test]
    fn single_simplex() {
        let c = sc("a b c d\n");
        let s = find_shelling(&c, None, 10).unwrap().unwrap();
        assert_eq!(s.facets(), c.facets());
    }

    #[test]
    fn disjoint_triangles_are_not_shellable() {
        let c = sc("a b c\nd e f\n");
        assert_eq!(find_shelling(&c, None, 1000).unwrap(), None);
    }

    #[test]
    fn triangles_meeting_in_a_vertex_are_not_shellable() {
        let c = sc("a b c\na d e\n");
        assert_eq!(find_shelling(&c, None, 1000).unwrap(), None);
    }

    #[test]
    fn tetra_boundary_is_shellable() {
        let c = sc("a b c\na b d\na c d\nb c d\n");
        let s = find_shelling(&c, None, 1000).unwrap().unwrap();
        assert!(is_shelling_order(&c, s.facets()));
    }

    #[test]
    fn order_checker_rejects_bad_orders() {
        // path of three triangles; the two ends first meet in one vertex only
        let c = sc("a b c\nb c d\nc d e\n");
        let f = |s: &str| c.face_of(&s.split(' ').collect::<Vec<_>>()).unwrap();
        assert!(is_shelling_order(&c, &[f("a b c"), f("b c d"), f("c d e")]));
        assert!(!is_shelling_order(
            &c,
            &[f("a b c"), f("c d e"), f("b c d")]
        ));
        assert!(!is_shelling_order(&c, &[f("a b c"), f("b c d")]));
    }

    #[test]
    fn seeds() {
        let c = sc("a b c\nb c d\nc d e\n");
        let f = |s: &str| c.face_of(&s.split(' ').collect::<Vec<_>>()).unwrap();
        let s = find_shelling(&c, Some(&[f("c d e")]), 100)
            .unwrap()
            .unwrap();
        assert_eq!(s.facets()[0], f("c d e"));
        assert!(is_shelling_order(&c, s.facets()));
        assert!(matches!(
            find_shelling(&c, Some(&[f("a b c"), f("c d e")]), 100),
            Err(Error::BadSeed(_))
        ));
        assert!(matches!(
            find_shelling(&c, Some(&[f("a b")]), 100),
            Err(Error::BadSeed(_))
        ));
    }

    #[test]
    fn budget_is_enforced() {
        let c = sc("a b c\nd e f\ng h i\n");
        assert_eq!(find_shelling(&c, None, 1), Err(Error::Timeout(1)));
    }
}
