//! Brute-force oracles, written without the library's algorithms.
//!
//! Complexes are facet lists of vertex bitmasks (at most 32 vertices);
//! graphs are adjacency bitmasks.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use scx::graph::SkeletonGraph;
use scx::SimplicialComplex;

pub type Mask = u32;

pub fn bits(m: Mask) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| m >> i & 1 == 1)
}

pub fn size(m: Mask) -> usize {
    m.count_ones() as usize
}

/// All nonempty subsets of `m`.
pub fn submasks(m: Mask) -> impl Iterator<Item = Mask> {
    let mut s = m;
    let mut done = m == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = s;
        if s == 0 {
            done = true;
            return None;
        }
        s = (s - 1) & m;
        Some(out)
    })
}

/// A complex as facet masks over vertex ids `0..n`, with every face listed.
#[derive(Clone, Debug)]
pub struct Oracle {
    pub n: usize,
    pub facets: Vec<Mask>,
    pub faces: HashSet<Mask>,
}

impl Oracle {
    pub fn new(n: usize, facets: Vec<Mask>) -> Self {
        let maximal: Vec<Mask> = facets
            .iter()
            .copied()
            .filter(|&f| !facets.iter().any(|&g| g != f && g & f == f))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let faces = maximal.iter().flat_map(|&f| submasks(f)).collect();
        Oracle {
            n,
            facets: maximal,
            faces,
        }
    }

    pub fn from_complex(c: &SimplicialComplex) -> Self {
        assert!(c.num_vertices() <= 32);
        let facets = c
            .facets()
            .iter()
            .map(|f| f.vertices().iter().fold(0, |m, v| m | 1 << v.index()))
            .collect();
        Oracle::new(c.num_vertices(), facets)
    }

    pub fn dim(&self) -> usize {
        self.facets.iter().map(|&f| size(f)).max().unwrap() - 1
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().all(|&f| size(f) == self.dim() + 1)
    }

    pub fn vertices(&self) -> Mask {
        self.facets.iter().fold(0, |m, &f| m | f)
    }

    pub fn has(&self, m: Mask) -> bool {
        m == 0 || self.faces.contains(&m)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has(1 << u | 1 << v)
    }

    pub fn is_clique(&self, m: Mask) -> bool {
        let vs: Vec<usize> = bits(m).collect();
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.adjacent(u, v)))
    }

    /// Every `j`-clique, grown one vertex at a time in increasing order.
    pub fn cliques(&self, j: usize) -> Vec<Mask> {
        fn grow(o: &Oracle, j: usize, clique: Mask, from: usize, out: &mut Vec<Mask>) {
            if size(clique) == j {
                out.push(clique);
                return;
            }
            for v in bits(o.vertices()).filter(|&v| v >= from) {
                if bits(clique).all(|u| o.adjacent(u, v)) {
                    grow(o, j, clique | 1 << v, v + 1, out);
                }
            }
        }
        let mut out = Vec::new();
        grow(self, j, 0, 0, &mut out);
        out.sort();
        out
    }

    pub fn is_critical(&self, t: Mask) -> bool {
        bits(t).any(|v| self.has(t & !(1 << v)))
    }

    /// `(flag, strongly banner, banner)` straight from the definitions.
    pub fn classes(&self) -> (bool, bool, bool) {
        let d = self.dim();
        // a minimal non-face has at most d + 2 vertices
        let flag = (3..=d + 2).all(|j| self.cliques(j).iter().all(|&t| self.has(t)));
        let big = self.cliques(d + 1);
        let boundary = self
            .cliques(d + 2)
            .into_iter()
            .any(|t| bits(t).all(|v| self.has(t & !(1 << v))));
        let strongly = !boundary && big.iter().all(|&t| self.has(t));
        let banner = !boundary && big.iter().all(|&t| self.has(t) || !self.is_critical(t));
        (flag, strongly, banner)
    }

    /// The link of `sigma`, on the same vertex ids. `None` for a facet.
    pub fn link(&self, sigma: Mask) -> Option<Oracle> {
        let facets: Vec<Mask> = self
            .facets
            .iter()
            .filter(|&&f| f & sigma == sigma && f != sigma)
            .map(|&f| f & !sigma)
            .collect();
        (!facets.is_empty()).then(|| Oracle::new(self.n, facets))
    }

    fn is_triangle_boundary(&self) -> bool {
        self.facets.len() == 3
            && self.facets.iter().all(|&f| size(f) == 2)
            && size(self.vertices()) == 3
    }

    /// The least `j` for which every link of a `j`-face is banner or `C₃`.
    pub fn banner_number(&self) -> Option<usize> {
        let d = self.dim();
        (0..d).find(|&j| {
            let faces: Vec<Mask> = if j == 0 {
                vec![0]
            } else {
                self.faces
                    .iter()
                    .copied()
                    .filter(|&f| size(f) == j)
                    .collect()
            };
            faces.iter().all(|&s| {
                let lk = self.link(s).expect("faces below the top dimension");
                lk.is_triangle_boundary() || (lk.dim() >= 1 && lk.classes().2)
            })
        })
    }

    /// Reduced Betti numbers over GF(2) by dense elimination. Faces in
    /// `excluded` are dropped (relative chains); with `reduced` false the
    /// augmentation is omitted.
    pub fn betti(&self, excluded: &HashSet<Mask>, reduced: bool) -> Vec<usize> {
        let d = self.dim();
        let levels: Vec<Vec<Mask>> = (1..=d + 1)
            .map(|k| {
                let mut l: Vec<Mask> = self
                    .faces
                    .iter()
                    .copied()
                    .filter(|&f| size(f) == k && !excluded.contains(&f))
                    .collect();
                l.sort();
                l
            })
            .collect();
        let rank = |k: usize| -> usize {
            // boundary from levels[k] to levels[k-1]
            if k == 0 {
                return usize::from(reduced && !levels[0].is_empty());
            }
            if k > d {
                return 0;
            }
            let rows = &levels[k - 1];
            let mut m: Vec<Vec<bool>> = levels[k]
                .iter()
                .map(|&f| {
                    rows.iter()
                        .map(|&r| r & f == r && size(f) == size(r) + 1)
                        .collect()
                })
                .collect();
            dense_rank(&mut m)
        };
        (0..=d)
            .map(|k| levels[k].len() - rank(k) - rank(k + 1))
            .collect()
    }

    pub fn reduced_betti(&self) -> Vec<usize> {
        self.betti(&HashSet::new(), true)
    }

    pub fn induced(&self, keep: Mask) -> Option<Oracle> {
        let kept: Vec<Mask> = self
            .faces
            .iter()
            .copied()
            .filter(|&f| f & keep == f)
            .collect();
        (!kept.is_empty()).then(|| Oracle::new(self.n, kept))
    }

    pub fn graph(&self) -> Vec<Mask> {
        let mut adj = vec![0; self.n];
        for &f in &self.faces {
            if size(f) == 2 {
                let vs: Vec<usize> = bits(f).collect();
                adj[vs[0]] |= 1 << vs[1];
                adj[vs[1]] |= 1 << vs[0];
            }
        }
        adj
    }
}

pub fn dense_rank(m: &mut [Vec<bool>]) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c]) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && m[r][c] {
                let pivot = m[rank].clone();
                for (x, p) in m[r].iter_mut().zip(pivot).skip(c) {
                    *x ^= p;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn adjacency_of(g: &SkeletonGraph) -> Vec<Mask> {
    (0..g.num_vertices())
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect()
}

/// Vertices reachable from `start` inside `allowed`.
pub fn reach(adj: &[Mask], start: usize, allowed: Mask) -> Mask {
    let mut seen: Mask = 1 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= adj[v] & allowed & !seen;
        }
        seen |= next;
        frontier = next;
    }
    seen
}

pub fn connected_within(adj: &[Mask], allowed: Mask) -> bool {
    match bits(allowed).next() {
        None => true,
        Some(s) => reach(adj, s, allowed) == allowed,
    }
}

/// Smallest vertex set whose removal disconnects the graph; `n − 1` for
/// complete graphs, 0 for graphs on at most one vertex.
pub fn brute_connectivity(adj: &[Mask]) -> usize {
    let n = adj.len();
    if n <= 1 {
        return 0;
    }
    let all: Mask = if n == 32 { !0 } else { (1 << n) - 1 };
    let mut sets: Vec<Mask> = (0..=all).collect();
    sets.sort_by_key(|&m| size(m));
    for s in sets {
        let rest = all & !s;
        if size(rest) >= 2 && !connected_within(adj, rest) {
            return size(s);
        }
        if size(s) >= n - 1 {
            break;
        }
    }
    n - 1
}

/// Interior vertex sets of the induced `u`–`v` paths. Any path can be
/// shortened to an induced one on a subset of its vertices, so these
/// suffice for a maximum independent family.
fn induced_path_interiors(adj: &[Mask], u: usize, v: usize) -> Vec<Mask> {
    let mut out = Vec::new();
    let mut path = vec![u];
    fn go(adj: &[Mask], v: usize, path: &mut Vec<usize>, used: Mask, out: &mut Vec<Mask>) {
        let last = *path.last().unwrap();
        if adj[last] >> v & 1 == 1 {
            let interior = used & !(1 << path[0]);
            out.push(interior);
            return;
        }
        for w in bits(adj[last] & !used & !(1 << v)) {
            // chordless: w sees no earlier path vertex except `last`
            if path[..path.len() - 1].iter().any(|&p| adj[w] >> p & 1 == 1) {
                continue;
            }
            path.push(w);
            go(adj, v, path, used | 1 << w, out);
            path.pop();
        }
    }
    go(adj, v, &mut path, 1 << u, &mut out);
    out
}

/// Maximum number of internally disjoint `u`–`v` paths.
pub fn brute_max_paths(adj: &[Mask], u: usize, v: usize) -> usize {
    if adj[u] >> v & 1 == 1 {
        // the edge itself, plus whatever avoids it
        let mut rest = adj.to_vec();
        rest[u] &= !(1 << v);
        rest[v] &= !(1 << u);
        return 1 + brute_max_paths(&rest, u, v);
    }
    let mut interiors = induced_path_interiors(adj, u, v);
    interiors.sort_by_key(|&m| size(m));
    interiors.dedup();
    fn pack(sets: &[Mask], from: usize, used: Mask, best: &mut usize, count: usize) {
        *best = (*best).max(count);
        for i in from..sets.len() {
            if sets[i] & used == 0 {
                pack(sets, i + 1, used | sets[i], best, count + 1);
            }
        }
    }
    let mut best = 0;
    pack(&interiors, 0, 0, &mut best, 0);
    best
}

/// Exact sign of the determinant of an integer matrix (Bareiss).
pub fn det_sign(mut m: Vec<Vec<i128>>) -> i32 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1].signum() as i32
}

/// Facets of the boundary of the cyclic `D`-polytope on points
/// `(t, t², …, t^D)`, `t = 1..=n`: the `D`-sets whose affine hull has every
/// other point strictly on one side.
pub fn moment_curve_facets(n: usize, dim: usize) -> Vec<Vec<usize>> {
    let point =
        |t: usize| -> Vec<i128> { (1..=dim).map(|e| (t as i128 + 1).pow(e as u32)).collect() };
    let orient = |s: &[usize], q: usize| -> i32 {
        let rows = s
            .iter()
            .chain(std::iter::once(&q))
            .map(|&t| {
                let mut r = vec![1i128];
                r.extend(point(t));
                r
            })
            .collect();
        det_sign(rows)
    };
    let mut out = Vec::new();
    let mut s = Vec::new();
    fn subsets(n: usize, k: usize, start: usize, s: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if s.len() == k {
            out.push(s.clone());
            return;
        }
        for i in start..n {
            s.push(i);
            subsets(n, k, i + 1, s, out);
            s.pop();
        }
    }
    let mut all = Vec::new();
    subsets(n, dim, 0, &mut s, &mut all);
    for s in all {
        let signs: BTreeSet<i32> = (0..n)
            .filter(|q| !s.contains(q))
            .map(|q| orient(&s, q))
            .collect();
        if signs.len() == 1 && !signs.contains(&0) {
            out.push(s);
        }
    }
    out
}
