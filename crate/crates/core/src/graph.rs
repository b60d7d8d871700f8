//! The 1-skeleton of a complex and vertex-connectivity machinery.
//!
//! Connectivity is computed with unit-capacity max-flow on the usual
//! vertex-split network (each vertex `v` becomes `v_in → v_out` with
//! capacity one). Augmenting paths are found by BFS that scans neighbours in
//! increasing id order, so path families and cut sets are deterministic.
//!
//! Graph vertices are plain indices; for a skeleton, index `i` is the
//! complex's `VertexId(i)`.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::complex::{SimplicialComplex, VertexId};
use crate::error::{Error, Result};

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletonGraph {
    adj: Vec<Vec<usize>>,
    bits: Vec<FixedBitSet>,
    edges: usize,
}

impl SkeletonGraph {
    /// Loops and repeated edges are ignored.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut bits = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in edges {
            assert!(
                u < n && v < n,
                "edge ({u}, {v}) out of range for {n} vertices"
            );
            if u != v {
                bits[u].insert(v);
                bits[v].insert(u);
            }
        }
        let adj: Vec<Vec<usize>> = bits.iter().map(|b| b.ones().collect()).collect();
        let edges = adj.iter().map(Vec::len).sum::<usize>() / 2;
        SkeletonGraph { adj, bits, edges }
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighbor_bits(&self, v: usize) -> &FixedBitSet {
        &self.bits[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.bits[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_list(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.num_vertices();
        self.edges == n * n.saturating_sub(1) / 2
    }

    /// Component label per vertex, skipping `removed`; removed vertices get `usize::MAX`.
    pub fn components_without(&self, removed: &FixedBitSet) -> Vec<usize> {
        let n = self.num_vertices();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if removed.contains(start) || comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !removed.contains(w) && comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        let comp = self.components_without(&FixedBitSet::with_capacity(self.num_vertices()));
        comp.iter().all(|&c| c == 0)
    }

    /// Unordered pairs `u < v` at graph distance exactly two.
    pub fn distance_two_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.num_vertices();
        let mut out = Vec::new();
        for u in 0..n {
            let mut reach = FixedBitSet::with_capacity(n);
            for &w in &self.adj[u] {
                reach.union_with(&self.bits[w]);
            }
            for v in reach.ones().filter(|&v| v > u && !self.adjacent(u, v)) {
                out.push((u, v));
            }
        }
        out
    }
}

/// The graph `G(Δ)`: vertices and edges of the complex.
pub fn skeleton(c: &SimplicialComplex) -> SkeletonGraph {
    SkeletonGraph::from_edges(
        c.num_vertices(),
        c.faces(2)
            .iter()
            .map(|e| (e.vertices()[0].index(), e.vertices()[1].index())),
    )
}

/// `N(x)`: `x` together with its neighbours, sorted.
pub fn neighborhood(c: &SimplicialComplex, x: VertexId) -> Result<Vec<VertexId>> {
    c.check_vertex(x)?;
    let mut out: Vec<VertexId> = c
        .faces(2)
        .iter()
        .filter(|e| e.contains(x))
        .flat_map(|e| e.vertices().iter().copied())
        .collect();
    out.push(x);
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// A vertex set separating `a` from `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutSet {
    pub vertices: Vec<usize>,
    pub a: usize,
    pub b: usize,
}

impl CutSet {
    /// Checked from scratch by BFS, independent of the flow code.
    pub fn separates(&self, g: &SkeletonGraph) -> bool {
        let mut removed = FixedBitSet::with_capacity(g.num_vertices());
        for &v in &self.vertices {
            removed.insert(v);
        }
        if removed.contains(self.a) || removed.contains(self.b) {
            return false;
        }
        let comp = g.components_without(&removed);
        comp[self.a] != comp[self.b]
    }
}

/// Internally disjoint `u`–`v` paths, each listed from `u` to `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathFamily {
    pub u: usize,
    pub v: usize,
    pub paths: Vec<Vec<usize>>,
}

impl PathFamily {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Each path runs along edges from `u` to `v` without repeating a
    /// vertex, and no interior vertex is shared between paths.
    pub fn is_valid(&self, g: &SkeletonGraph) -> bool {
        let mut used = FixedBitSet::with_capacity(g.num_vertices());
        for p in &self.paths {
            if p.len() < 2 || p[0] != self.u || p[p.len() - 1] != self.v {
                return false;
            }
            if p.windows(2).any(|w| !g.adjacent(w[0], w[1])) {
                return false;
            }
            for &w in &p[1..p.len() - 1] {
                if w == self.u || w == self.v || used.put(w) {
                    return false;
                }
            }
        }
        let direct = self.paths.iter().filter(|p| p.len() == 2).count();
        direct <= 1
    }
}

/// Certificate attached to a connectivity value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConnectivityCertificate {
    /// At most one vertex.
    Trivial,
    /// Complete graph: `κ = n − 1` by convention.
    Complete,
    /// A minimum separating set (empty when the graph is disconnected).
    Cut(CutSet),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Connectivity {
    pub kappa: usize,
    pub certificate: ConnectivityCertificate,
}

struct SplitNetwork {
    to: Vec<usize>,
    cap: Vec<u32>,
    out: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn v_in(v: usize) -> usize {
        2 * v
    }

    fn v_out(v: usize) -> usize {
        2 * v + 1
    }

    fn add_edge(&mut self, a: usize, b: usize, cap: u32) {
        self.out[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(cap);
        self.out[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    /// Network for `s`–`t` flow, optionally without the edge `{s, t}`.
    fn new(g: &SkeletonGraph, s: usize, t: usize, drop_direct: bool) -> Self {
        let n = g.num_vertices();
        let inf = n as u32 + 1;
        let mut net = SplitNetwork {
            to: Vec::new(),
            cap: Vec::new(),
            out: vec![Vec::new(); 2 * n],
        };
        for v in 0..n {
            let cap = if v == s || v == t { inf } else { 1 };
            net.add_edge(Self::v_in(v), Self::v_out(v), cap);
        }
        for v in 0..n {
            for &w in g.neighbors(v) {
                if drop_direct && ((v == s && w == t) || (v == t && w == s)) {
                    continue;
                }
                net.add_edge(Self::v_out(v), Self::v_in(w), inf);
            }
        }
        net
    }

    /// BFS over the residual graph; returns the parent edge of each node.
    fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(a) = queue.pop_front() {
            for &e in &self.out[a] {
                let b = self.to[e];
                if self.cap[e] > 0 && !seen[b] {
                    seen[b] = true;
                    parent[b] = Some(e);
                    queue.push_back(b);
                }
            }
        }
        parent
    }

    fn max_flow(&mut self, source: usize, sink: usize) -> usize {
        let mut flow = 0;
        loop {
            let parent = self.bfs(source);
            if parent[sink].is_none() {
                return flow;
            }
            let mut node = sink;
            while node != source {
                let e = parent[node].expect("path to sink");
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                node = self.to[e ^ 1];
            }
            flow += 1;
        }
    }

    /// Splits the integral flow into paths; call after [`max_flow`].
    fn paths(&mut self, s: usize, t: usize, count: usize) -> Vec<Vec<usize>> {
        let source = Self::v_out(s);
        let sink = Self::v_in(t);
        let mut paths = Vec::with_capacity(count);
        for _ in 0..count {
            let mut path = vec![s];
            let mut node = source;
            while node != sink {
                // forward edges have even index; flow sits on the reverse capacity
                let e = self.out[node]
                    .iter()
                    .copied()
                    .find(|&e| e % 2 == 0 && self.cap[e ^ 1] > 0)
                    .expect("flow conservation");
                self.cap[e ^ 1] -= 1;
                node = self.to[e];
                if node % 2 == 0 {
                    path.push(node / 2);
                }
            }
            paths.push(path);
        }
        paths
    }

    /// Vertices whose split edge crosses the residual cut.
    fn cut_vertices(&self, s: usize) -> Vec<usize> {
        let parent = self.bfs(Self::v_out(s));
        let reach = |node: usize| node == Self::v_out(s) || parent[node].is_some();
        (0..self.out.len() / 2)
            .filter(|&v| reach(Self::v_in(v)) && !reach(Self::v_out(v)))
            .collect()
    }
}

fn check_pair(g: &SkeletonGraph, u: usize, v: usize) -> Result<()> {
    let n = g.num_vertices();
    if u >= n {
        return Err(Error::UnknownVertex(u.to_string()));
    }
    if v >= n {
        return Err(Error::UnknownVertex(v.to_string()));
    }
    if u == v {
        return Err(Error::SameVertex);
    }
    Ok(())
}

/// Maximum number of internally disjoint `u`–`v` paths.
pub fn local_connectivity(g: &SkeletonGraph, u: usize, v: usize) -> Result<usize> {
    check_pair(g, u, v)?;
    let direct = g.adjacent(u, v);
    let mut net = SplitNetwork::new(g, u, v, direct);
    Ok(net.max_flow(SplitNetwork::v_out(u), SplitNetwork::v_in(v)) + usize::from(direct))
}

/// A maximum family of independent `u`–`v` paths. For adjacent endpoints
/// the edge `uv` is one of the paths.
pub fn independent_paths(g: &SkeletonGraph, u: usize, v: usize) -> Result<PathFamily> {
    check_pair(g, u, v)?;
    let direct = g.adjacent(u, v);
    let mut net = SplitNetwork::new(g, u, v, direct);
    let flow = net.max_flow(SplitNetwork::v_out(u), SplitNetwork::v_in(v));
    let mut paths = Vec::with_capacity(flow + 1);
    if direct {
        paths.push(vec![u, v]);
    }
    paths.extend(net.paths(u, v, flow));
    Ok(PathFamily { u, v, paths })
}

/// Minimum vertex set separating non-adjacent `u` and `v`.
pub fn min_vertex_separator(g: &SkeletonGraph, u: usize, v: usize) -> Result<CutSet> {
    check_pair(g, u, v)?;
    if g.adjacent(u, v) {
        return Err(Error::OutOfRange(format!(
            "vertices {u} and {v} are adjacent"
        )));
    }
    let mut net = SplitNetwork::new(g, u, v, false);
    net.max_flow(SplitNetwork::v_out(u), SplitNetwork::v_in(v));
    Ok(CutSet {
        vertices: net.cut_vertices(u),
        a: u,
        b: v,
    })
}

/// Vertex connectivity `κ(G)` with a certificate.
///
/// `κ` is 0 for graphs with at most one vertex or that are disconnected,
/// and `n − 1` for complete graphs; otherwise it is the minimum local
/// connectivity over non-adjacent pairs.
pub fn vertex_connectivity(g: &SkeletonGraph) -> Connectivity {
    let n = g.num_vertices();
    if n <= 1 {
        return Connectivity {
            kappa: 0,
            certificate: ConnectivityCertificate::Trivial,
        };
    }
    let comp = g.components_without(&FixedBitSet::with_capacity(n));
    if let Some(b) = (1..n).find(|&b| comp[b] != comp[0]) {
        return Connectivity {
            kappa: 0,
            certificate: ConnectivityCertificate::Cut(CutSet {
                vertices: vec![],
                a: 0,
                b,
            }),
        };
    }
    if g.is_complete() {
        return Connectivity {
            kappa: n - 1,
            certificate: ConnectivityCertificate::Complete,
        };
    }
    let mut best: Option<(usize, usize, usize)> = None;
    for u in 0..n {
        for v in (u + 1)..n {
            if g.adjacent(u, v) {
                continue;
            }
            let mut net = SplitNetwork::new(g, u, v, false);
            let flow = net.max_flow(SplitNetwork::v_out(u), SplitNetwork::v_in(v));
            if best.map_or(true, |(b, _, _)| flow < b) {
                best = Some((flow, u, v));
            }
        }
    }
    let (kappa, a, b) = best.expect("a non-complete graph has a non-adjacent pair");
    let cut = min_vertex_separator(g, a, b).expect("valid non-adjacent pair");
    debug_assert_eq!(cut.vertices.len(), kappa);
    Connectivity {
        kappa,
        certificate: ConnectivityCertificate::Cut(cut),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LiuVerdict {
    /// Every distance-two pair has at least `k` independent paths.
    Holds { pairs_checked: usize },
    /// The first distance-two pair (in lexicographic order) with fewer paths.
    Fails { u: usize, v: usize, paths: usize },
}

impl LiuVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, LiuVerdict::Holds { .. })
    }
}

/// Checks `k` independent paths between every pair at distance two. When
/// this holds for a connected graph on more than `k` vertices, the graph is
/// `k`-connected.
pub fn liu_scan(g: &SkeletonGraph, k: usize) -> Result<LiuVerdict> {
    let n = g.num_vertices();
    if n <= k {
        return Err(Error::TooSmall { n, k });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let pairs = g.distance_two_pairs();
    for &(u, v) in &pairs {
        let paths = local_connectivity(g, u, v)?;
        if paths < k {
            return Ok(LiuVerdict::Fails { u, v, paths });
        }
    }
    Ok(LiuVerdict::Holds {
        pairs_checked: pairs.len(),
    })
}

/// The subcomplex induced on the vertices not adjacent to `x` (and not `x`).
pub fn outside_subcomplex(c: &SimplicialComplex, x: VertexId) -> Result<SimplicialComplex> {
    let near = neighborhood(c, x)?;
    let rest: Vec<VertexId> = c
        .vertices()
        .filter(|v| near.binary_search(v).is_err())
        .collect();
    if rest.is_empty() {
        return Err(Error::EmptyOutside(c.label(x).to_owned()));
    }
    c.induced(&rest)
}

pub fn is_outside_connected(c: &SimplicialComplex, x: VertexId) -> Result<bool> {
    outside_subcomplex(c, x).map(|g| skeleton(&g).is_connected())
}
