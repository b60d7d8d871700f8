//! Deterministic builders for named complexes and the default corpus.
//!
//! Every generator is addressed by a [`GeneratorSpec`]: a base name, its
//! integer parameters, and an optional chain of `cone:`, `susp:` and
//! `tilde:` prefixes applied right to left, e.g. `susp:cone:cycle(5)`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

fn build(facets: Vec<Vec<String>>) -> SimplicialComplex {
    SimplicialComplex::from_facets(facets).expect("generator facets are well formed")
}

fn out_of_range(what: impl Into<String>) -> Error {
    Error::OutOfRange(what.into())
}

/// Edges of the complete graph on `n` vertices.
pub fn complete_graph(n: usize) -> Vec<(usize, usize)> {
    (0..n).tuple_combinations().collect()
}

pub fn cycle_graph(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

/// The path with `n` vertices.
pub fn path_graph(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

/// One tetrahedron `{u, v, e₁, e₂}` per edge `uv`, with two new vertices per
/// edge. Graph vertex `i` is labelled `v{i}`, the new vertices of edge `k`
/// are `e{k}a` and `e{k}b`.
pub fn banana(edges: &[(usize, usize)]) -> Result<SimplicialComplex> {
    if edges.is_empty() {
        return Err(Error::NoEdges);
    }
    let facets: Vec<Vec<String>> = edges
        .iter()
        .enumerate()
        .map(|(k, &(u, v))| {
            vec![
                format!("v{u}"),
                format!("v{v}"),
                format!("e{k}a"),
                format!("e{k}b"),
            ]
        })
        .collect();
    SimplicialComplex::from_facets(facets)
}

/// The 3-ball built from a ring of three bananas, on `x1..x3`, `a1..a3`,
/// `b1..b3`, `c1..c3`, `d1..d3` and `y`.
pub fn ring_ball() -> SimplicialComplex {
    let l = |p: &str, i: usize| format!("{p}{}", i % 3 + 1);
    let mut facets = Vec::with_capacity(26);
    for i in 0..3 {
        let (next, prev) = (i + 1, i + 2);
        for (p, q) in [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")] {
            facets.push(vec![l("x", i), l("x", next), l(p, i), l(q, i)]);
        }
        facets.push(vec![l("x", i), l("a", i), l("b", i), l("b", prev)]);
        facets.push(vec![l("x", i), l("a", i), l("a", prev), l("b", prev)]);
        facets.push(vec!["y".into(), l("a", i), l("b", i), l("a", next)]);
        facets.push(vec!["y".into(), l("b", i), l("a", next), l("b", next)]);
    }
    facets.push(vec!["y".into(), "a1".into(), "a2".into(), "a3".into()]);
    facets.push(vec!["y".into(), "b1".into(), "b2".into(), "b3".into()]);
    build(facets)
}

fn numbered(ids: impl IntoIterator<Item = usize>) -> Vec<String> {
    ids.into_iter().map(|i| i.to_string()).collect()
}

/// The full `d`-simplex on vertices `0..=d`.
pub fn simplex(d: usize) -> SimplicialComplex {
    build(vec![numbered(0..=d)])
}

/// `∂Δⁿ`: all `n`-subsets of `0..=n`, a sphere of dimension `n − 1`.
pub fn simplex_boundary(n: usize) -> Result<SimplicialComplex> {
    if n < 1 {
        return Err(out_of_range("simplex_boundary needs n >= 1"));
    }
    Ok(build((0..=n).combinations(n).map(numbered).collect()))
}

/// Boundary of the `(d+1)`-dimensional cross-polytope, a `d`-sphere on
/// vertices `p0, m0, …, pd, md`.
pub fn cross_polytope_boundary(d: usize) -> SimplicialComplex {
    let facets = (0..=d)
        .map(|i| [format!("p{i}"), format!("m{i}")])
        .multi_cartesian_product()
        .collect();
    build(facets)
}

/// The cycle `Cₙ` on `0..n`.
pub fn cycle(n: usize) -> Result<SimplicialComplex> {
    if n < 3 {
        return Err(out_of_range("cycle needs n >= 3"));
    }
    Ok(build(
        cycle_graph(n)
            .into_iter()
            .map(|(a, b)| numbered([a, b]))
            .collect(),
    ))
}

/// Knuth's MMIX linear congruential generator.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 33
    }
}

/// A stacked `d`-sphere: `∂Δ^{d+1}` followed by `k` stellar subdivisions of
/// facets. Step `i` subdivides facet `state >> 33 mod m` of the current
/// facet list, where `state` runs through the MMIX sequence started at
/// `seed`. The new vertex is labelled `d + 2 + i`.
pub fn stacked_sphere(d: usize, k: usize, seed: u64) -> Result<SimplicialComplex> {
    if d < 1 {
        return Err(out_of_range("stacked_sphere needs d >= 1"));
    }
    let mut facets: Vec<Vec<usize>> = (0..d + 2).combinations(d + 1).collect();
    let mut rng = Lcg(seed);
    for step in 0..k {
        let i = (rng.next() % facets.len() as u64) as usize;
        let f = facets.swap_remove(i);
        let w = d + 2 + step;
        for skip in 0..f.len() {
            let mut g: Vec<usize> = f.clone();
            g[skip] = w;
            facets.push(g);
        }
    }
    Ok(build(facets.into_iter().map(numbered).collect()))
}

/// Boundary of the cyclic `(d+1)`-polytope with `n` vertices, from Gale's
/// evenness condition. The result is a `d`-sphere on `0..n`.
pub fn cyclic_polytope_boundary(n: usize, d: usize) -> Result<SimplicialComplex> {
    if d < 1 || n < d + 2 {
        return Err(out_of_range(
            "cyclic_polytope_boundary needs d >= 1 and n >= d + 2",
        ));
    }
    let facets = (0..n)
        .combinations(d + 1)
        .filter(|s| gale_even(s, n))
        .map(numbered)
        .collect();
    Ok(build(facets))
}

/// Between any two non-members, the members form a block of even length.
fn gale_even(s: &[usize], n: usize) -> bool {
    let mut run = 0;
    let mut seen_gap = false;
    for i in 0..n {
        if s.contains(&i) {
            run += 1;
        } else {
            if seen_gap && run % 2 == 1 {
                return false;
            }
            seen_gap = true;
            run = 0;
        }
    }
    true
}

/// The seven-vertex torus: `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn torus7() -> SimplicialComplex {
    let facets = (0..7)
        .flat_map(|i| [[i, i + 1, i + 3], [i, i + 2, i + 3]])
        .map(|f| numbered(f.map(|v| v % 7)))
        .collect();
    build(facets)
}

/// A square disk `y a z b` split by the interior edge `yz`, with interior
/// vertices `u` and `w` on either side. Its `tilde` is a 2-sphere where the
/// vertices not adjacent to the apex are exactly `u` and `w`.
pub fn split_disk() -> SimplicialComplex {
    let facets = ["y a u", "a z u", "z y u", "y z w", "z b w", "b y w"];
    build(
        facets
            .iter()
            .map(|f| f.split(' ').map(String::from).collect())
            .collect(),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Wrap {
    Cone,
    Susp,
    Tilde,
}

/// A named, parameterised generator. Same spec, same complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    /// Outermost first.
    pub wraps: Vec<Wrap>,
    pub name: String,
    pub params: Vec<u64>,
}

pub const GENERATOR_NAMES: &[&str] = &[
    "simplex",
    "simplex_boundary",
    "cross_polytope",
    "cycle",
    "banana_complete",
    "banana_cycle",
    "banana_path",
    "ring_ball",
    "stacked_sphere",
    "cyclic",
    "torus7",
    "split_disk",
];

impl GeneratorSpec {
    pub fn new(name: &str, params: &[u64]) -> Self {
        GeneratorSpec {
            wraps: Vec::new(),
            name: name.to_owned(),
            params: params.to_vec(),
        }
    }

    pub fn wrapped(mut self, w: Wrap) -> Self {
        self.wraps.insert(0, w);
        self
    }

    /// Parses `[wrap:]*name` together with separately given parameters.
    pub fn parse(name: &str, params: &[u64]) -> Result<Self> {
        let mut parts: Vec<&str> = name.split(':').collect();
        let base = parts.pop().unwrap_or_default();
        let wraps = parts
            .into_iter()
            .map(|w| match w {
                "cone" => Ok(Wrap::Cone),
                "susp" => Ok(Wrap::Susp),
                "tilde" => Ok(Wrap::Tilde),
                other => Err(Error::UnknownGenerator(format!("{other}:"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if !GENERATOR_NAMES.contains(&base) {
            return Err(Error::UnknownGenerator(base.to_owned()));
        }
        Ok(GeneratorSpec {
            wraps,
            name: base.to_owned(),
            params: params.to_vec(),
        })
    }

    fn param(&self, i: usize) -> Result<usize> {
        let p = self
            .params
            .get(i)
            .ok_or_else(|| out_of_range(format!("{} expects parameter {}", self.name, i + 1)))?;
        usize::try_from(*p).map_err(|_| out_of_range(format!("{p} is too large")))
    }

    fn arity(&self, n: usize) -> Result<()> {
        if self.params.len() == n {
            Ok(())
        } else {
            Err(out_of_range(format!(
                "{} takes {n} parameter(s), got {}",
                self.name,
                self.params.len()
            )))
        }
    }

    fn base(&self) -> Result<SimplicialComplex> {
        let arity = match self.name.as_str() {
            "ring_ball" | "torus7" | "split_disk" => 0,
            "stacked_sphere" => 3,
            "cyclic" => 2,
            _ => 1,
        };
        self.arity(arity)?;
        match self.name.as_str() {
            "simplex" => Ok(simplex(self.param(0)?)),
            "simplex_boundary" => simplex_boundary(self.param(0)?),
            "cross_polytope" => Ok(cross_polytope_boundary(self.param(0)?)),
            "cycle" => cycle(self.param(0)?),
            "banana_complete" => banana(&complete_graph(self.param(0)?)),
            "banana_cycle" => {
                let n = self.param(0)?;
                if n < 3 {
                    return Err(out_of_range("banana_cycle needs n >= 3"));
                }
                banana(&cycle_graph(n))
            }
            "banana_path" => banana(&path_graph(self.param(0)?)),
            "ring_ball" => Ok(ring_ball()),
            "stacked_sphere" => stacked_sphere(self.param(0)?, self.param(1)?, self.params[2]),
            "cyclic" => cyclic_polytope_boundary(self.param(0)?, self.param(1)?),
            "torus7" => Ok(torus7()),
            "split_disk" => Ok(split_disk()),
            other => Err(Error::UnknownGenerator(other.to_owned())),
        }
    }

    pub fn generate(&self) -> Result<SimplicialComplex> {
        let mut c = self.base()?;
        for w in self.wraps.iter().rev() {
            c = match w {
                Wrap::Cone => c.cone(None)?,
                Wrap::Susp => c.suspension(None)?,
                Wrap::Tilde => c.tilde(None)?,
            };
        }
        Ok(c)
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for w in &self.wraps {
            let s = match w {
                Wrap::Cone => "cone",
                Wrap::Susp => "susp",
                Wrap::Tilde => "tilde",
            };
            write!(f, "{s}:")?;
        }
        write!(f, "{}", self.name)?;
        if !self.params.is_empty() {
            write!(f, "({})", self.params.iter().join(","))?;
        }
        Ok(())
    }
}

/// Accepts the [`Display`](fmt::Display) form, e.g. `susp:cyclic(7,4)`.
impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = match s.split_once('(') {
            Some((name, rest)) => {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::UnknownGenerator(s.to_owned()))?;
                let params = inner
                    .split(',')
                    .map(|p| p.trim().parse::<u64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::UnknownGenerator(s.to_owned()))?;
                (name, params)
            }
            None => (s, Vec::new()),
        };
        GeneratorSpec::parse(name, &params)
    }
}

/// The default corpus, in a fixed order.
pub fn catalog_specs() -> Vec<GeneratorSpec> {
    let g = GeneratorSpec::new;
    let mut specs = Vec::new();
    for n in 2..=5 {
        specs.push(g("simplex_boundary", &[n]));
    }
    for d in 2..=4 {
        specs.push(g("cross_polytope", &[d]));
    }
    for n in 3..=8 {
        specs.push(g("cycle", &[n]));
    }
    specs.push(g("banana_complete", &[3]));
    specs.push(g("banana_complete", &[4]));
    specs.push(g("banana_cycle", &[5]));
    specs.push(g("banana_path", &[4]));
    specs.push(g("ring_ball", &[]));
    specs.push(g("ring_ball", &[]).wrapped(Wrap::Tilde));
    specs.push(g("ring_ball", &[]).wrapped(Wrap::Cone));
    specs.push(g("ring_ball", &[]).wrapped(Wrap::Susp));
    specs.push(g("cycle", &[5]).wrapped(Wrap::Susp));
    specs.push(g("simplex_boundary", &[3]).wrapped(Wrap::Susp));
    specs.push(g("simplex_boundary", &[3]).wrapped(Wrap::Cone));
    specs.push(g("torus7", &[]).wrapped(Wrap::Susp));
    for (d, k) in [(2, 6), (3, 5)] {
        for seed in [1, 2] {
            specs.push(g("stacked_sphere", &[d, k, seed]));
        }
    }
    for (n, d) in [(6, 2), (7, 3), (8, 3), (7, 4)] {
        specs.push(g("cyclic", &[n, d]));
    }
    specs.push(g("torus7", &[]));
    specs.push(g("split_disk", &[]).wrapped(Wrap::Tilde));
    specs
}

pub fn catalog() -> Vec<(GeneratorSpec, SimplicialComplex)> {
    catalog_specs()
        .into_iter()
        .map(|s| {
            let c = s.generate().expect("catalog specs are valid");
            (s, c)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::banner::classify;

    #[test]
    fn bananas() {
        let k3 = banana(&complete_graph(3)).unwrap();
        assert_eq!((k3.num_vertices(), k3.facets().len()), (9, 3));
        let k4 = banana(&complete_graph(4)).unwrap();
        assert_eq!((k4.num_vertices(), k4.facets().len()), (16, 6));
        let one = banana(&[(0, 1)]).unwrap();
        assert_eq!(one.f_vector().counts(), [1, 4, 6, 4, 1]);
        assert_eq!(banana(&[]), Err(Error::NoEdges));
    }

    #[test]
    fn ring_ball_counts() {
        let rb = ring_ball();
        assert_eq!(rb.f_vector().counts(), [1, 16, 54, 65, 26]);
        let y = rb.vertex("y").unwrap();
        assert_eq!(rb.vertex_link(y).unwrap().facets().len(), 8);
    }

    #[test]
    fn standard_families() {
        assert_eq!(simplex_boundary(2).unwrap(), cycle(3).unwrap());
        assert_eq!(
            cross_polytope_boundary(2).f_vector().counts(),
            [1, 6, 12, 8]
        );
        assert_eq!(simplex(2).facets().len(), 1);
        assert!(!classify(&cycle(3).unwrap()).unwrap().banner);
        assert!(classify(&cycle(4).unwrap()).unwrap().banner);
        assert!(simplex_boundary(0).is_err());
        assert!(cycle(2).is_err());
    }

    #[test]
    fn stacked_and_cyclic() {
        assert_eq!(
            stacked_sphere(2, 0, 9).unwrap(),
            simplex_boundary(3).unwrap()
        );
        let s = stacked_sphere(3, 4, 7).unwrap();
        assert_eq!(s.num_vertices(), 3 + 2 + 4);
        assert_eq!(s, stacked_sphere(3, 4, 7).unwrap());
        assert_eq!(
            cyclic_polytope_boundary(5, 3).unwrap(),
            simplex_boundary(4).unwrap()
        );
        // cyclic 3-polytope with n vertices has 2n - 4 triangles
        assert_eq!(cyclic_polytope_boundary(7, 2).unwrap().facets().len(), 10);
        assert!(cyclic_polytope_boundary(4, 3).is_err());
    }

    #[test]
    fn torus_counts() {
        assert_eq!(torus7().f_vector().counts(), [1, 7, 21, 14]);
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in catalog_specs() {
            let back: GeneratorSpec = s.to_string().parse().unwrap();
            assert_eq!(back, s);
        }
        assert_eq!(
            "susp:cyclic(7,4)"
                .parse::<GeneratorSpec>()
                .unwrap()
                .to_string(),
            "susp:cyclic(7,4)"
        );
        assert!(matches!(
            "nope".parse::<GeneratorSpec>(),
            Err(Error::UnknownGenerator(_))
        ));
        assert!(matches!(
            "bend:cycle(4)".parse::<GeneratorSpec>(),
            Err(Error::UnknownGenerator(_))
        ));
        assert!(GeneratorSpec::parse("cycle", &[])
            .unwrap()
            .generate()
            .is_err());
    }
}
