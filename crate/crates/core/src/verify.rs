//! Analysis reports and hypothesis-gated checks of the connectivity results
//! for banner complexes.
//!
//! Every check first tests the hypothesis of the statement it covers. When
//! the hypothesis fails the verdict is `skip` with the reason; `pass` is only
//! reported after the conclusion was evaluated exhaustively.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::banner::{self, banner_number, classify, BannerClass};
use crate::complex::{SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::graph::{self, neighborhood, skeleton, vertex_connectivity, ConnectivityCertificate};
use crate::manifold::{self, manifold_class, z2_betti, z2_relative_betti, ManifoldClass};

pub const REPORT_SCHEMA: &str = "scx-report/1";

/// All invariants of one complex. Field order is the serialized key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisReport {
    pub schema: String,
    pub name: String,
    pub dim: usize,
    pub f_vector: Vec<usize>,
    pub num_facets: usize,
    pub closed_pseudomanifold: bool,
    pub pseudomanifold_with_boundary: bool,
    pub normal: bool,
    pub homology_manifold: bool,
    pub homology_sphere: bool,
    /// `None` for 0-dimensional complexes, where the classes are not defined.
    pub flag: Option<bool>,
    pub strongly_banner: Option<bool>,
    pub banner: Option<bool>,
    /// `None` when no `j < d` qualifies.
    pub banner_number: Option<usize>,
    pub connectivity: usize,
    /// `2d − b`.
    pub bound: Option<i64>,
    /// `κ ≥ 2d − b`, asserted only for closed normal pseudomanifolds.
    pub bound_satisfied: Option<bool>,
    pub witnesses: Witnesses,
}

/// Vertex labels explaining the failures recorded in a report.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Witnesses {
    pub flag: Option<Vec<String>>,
    pub strongly_banner: Option<Vec<String>>,
    pub banner: Option<Vec<String>>,
    pub banner_number: Option<Vec<String>>,
    pub non_normal_face: Option<Vec<String>>,
    pub homology_manifold: Option<Vec<String>>,
    pub min_cut: Option<Vec<String>>,
}

fn labels_of(c: &SimplicialComplex, vs: &[VertexId]) -> Vec<String> {
    vs.iter().map(|&v| c.label(v).to_owned()).collect()
}

fn index_labels(c: &SimplicialComplex, vs: &[usize]) -> Vec<String> {
    vs.iter()
        .map(|&v| c.label(VertexId::from_index(v)).to_owned())
        .collect()
}

pub fn analyze(name: &str, c: &SimplicialComplex) -> Result<AnalysisReport> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let d = c.dim();
    let mc = manifold_class(c)?;
    let class = if d >= 1 { Some(classify(c)?) } else { None };
    let (b, b_failure) = if d >= 1 {
        match banner_number(c) {
            Ok(b) => (Some(b.value), None),
            Err(Error::UndefinedBannerNumber { failing_face }) => (None, Some(failing_face)),
            Err(e) => return Err(e),
        }
    } else {
        (None, None)
    };
    let kappa = vertex_connectivity(&skeleton(c));
    let bound = b.map(|b| 2 * d as i64 - b as i64);
    let bound_satisfied = match bound {
        Some(bound) if mc.normal_pseudomanifold() => Some(kappa.kappa as i64 >= bound),
        _ => None,
    };
    let witness = |w: Option<&banner::Witness>| w.map(|w| labels_of(c, w.vertices()));
    let witnesses = Witnesses {
        flag: class
            .as_ref()
            .and_then(|k| witness(k.flag_witness.as_ref())),
        strongly_banner: class
            .as_ref()
            .and_then(|k| witness(k.strongly_banner_witness.as_ref())),
        banner: class
            .as_ref()
            .and_then(|k| witness(k.banner_witness.as_ref())),
        banner_number: b_failure,
        non_normal_face: mc.non_normal_face.as_ref().map(|f| c.face_labels(f)),
        homology_manifold: mc
            .homology_manifold_failure
            .as_ref()
            .map(|f| c.face_labels(f)),
        min_cut: match &kappa.certificate {
            ConnectivityCertificate::Cut(cut) => Some(index_labels(c, &cut.vertices)),
            _ => None,
        },
    };
    Ok(AnalysisReport {
        schema: REPORT_SCHEMA.to_owned(),
        name: name.to_owned(),
        dim: d,
        f_vector: c.f_vector().counts().to_vec(),
        num_facets: c.facets().len(),
        closed_pseudomanifold: mc.closed_pseudomanifold(),
        pseudomanifold_with_boundary: mc.pseudomanifold_with_boundary(),
        normal: mc.normal,
        homology_manifold: mc.homology_manifold,
        homology_sphere: mc.homology_sphere,
        flag: class.as_ref().map(|k| k.flag),
        strongly_banner: class.as_ref().map(|k| k.strongly_banner),
        banner: class.as_ref().map(|k| k.banner),
        banner_number: b,
        connectivity: kappa.kappa,
        bound,
        bound_satisfied,
        witnesses,
    })
}

/// Pretty-printed JSON with keys in declaration order.
pub fn report_json(r: &AnalysisReport) -> String {
    serde_json::to_string_pretty(r).expect("reports serialize")
}

pub fn parse_report(text: &str) -> Result<AnalysisReport> {
    let r: AnalysisReport = serde_json::from_str(text).map_err(|e| Error::Report(e.to_string()))?;
    if r.schema != REPORT_SCHEMA {
        return Err(Error::Report(format!("unsupported schema {:?}", r.schema)));
    }
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PropertyId {
    #[serde(rename = "T1.1")]
    T1_1,
    #[serde(rename = "T4.1")]
    T4_1,
    #[serde(rename = "L2.1")]
    L2_1,
    #[serde(rename = "L4.2")]
    L4_2,
    #[serde(rename = "L4.3")]
    L4_3,
    #[serde(rename = "L4.4")]
    L4_4,
    #[serde(rename = "L4.4-homological")]
    L4_4Homological,
    #[serde(rename = "L5.2")]
    L5_2,
    #[serde(rename = "P3.7")]
    P3_7,
    #[serde(rename = "P3.8i")]
    P3_8i,
    #[serde(rename = "P3.8ii")]
    P3_8ii,
    #[serde(rename = "P3.8iii")]
    P3_8iii,
    #[serde(rename = "A3.2-special-case")]
    A3_2,
}

impl PropertyId {
    pub const ALL: [PropertyId; 13] = [
        PropertyId::T1_1,
        PropertyId::T4_1,
        PropertyId::L2_1,
        PropertyId::L4_2,
        PropertyId::L4_3,
        PropertyId::L4_4,
        PropertyId::L4_4Homological,
        PropertyId::L5_2,
        PropertyId::P3_7,
        PropertyId::P3_8i,
        PropertyId::P3_8ii,
        PropertyId::P3_8iii,
        PropertyId::A3_2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PropertyId::T1_1 => "T1.1",
            PropertyId::T4_1 => "T4.1",
            PropertyId::L2_1 => "L2.1",
            PropertyId::L4_2 => "L4.2",
            PropertyId::L4_3 => "L4.3",
            PropertyId::L4_4 => "L4.4",
            PropertyId::L4_4Homological => "L4.4-homological",
            PropertyId::L5_2 => "L5.2",
            PropertyId::P3_7 => "P3.7",
            PropertyId::P3_8i => "P3.8i",
            PropertyId::P3_8ii => "P3.8ii",
            PropertyId::P3_8iii => "P3.8iii",
            PropertyId::A3_2 => "A3.2-special-case",
        }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for PropertyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PropertyId::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::UnknownProperty(s.to_owned()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skip => "skip",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub description: String,
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyCheckResult {
    pub property: PropertyId,
    pub verdict: Verdict,
    /// What was checked, or the unmet hypothesis for `skip`.
    pub reason: String,
    pub counterexample: Option<Counterexample>,
}

impl PropertyCheckResult {
    fn pass(property: PropertyId, reason: impl Into<String>) -> Self {
        PropertyCheckResult {
            property,
            verdict: Verdict::Pass,
            reason: reason.into(),
            counterexample: None,
        }
    }

    fn skip(property: PropertyId, reason: impl Into<String>) -> Self {
        PropertyCheckResult {
            property,
            verdict: Verdict::Skip,
            reason: reason.into(),
            counterexample: None,
        }
    }

    fn fail(property: PropertyId, reason: impl Into<String>, labels: Vec<String>) -> Self {
        let reason = reason.into();
        PropertyCheckResult {
            property,
            verdict: Verdict::Fail,
            counterexample: Some(Counterexample {
                description: reason.clone(),
                labels,
            }),
            reason,
        }
    }
}

/// Facts shared by most checks, computed once per complex.
struct Facts<'a> {
    c: &'a SimplicialComplex,
    d: usize,
    manifold: Option<ManifoldClass>,
    class: Option<BannerClass>,
}

impl<'a> Facts<'a> {
    fn new(c: &'a SimplicialComplex) -> Result<Self> {
        let pure = c.is_pure();
        let d = c.dim();
        let manifold = if pure { Some(manifold_class(c)?) } else { None };
        let class = if pure && d >= 1 {
            Some(classify(c)?)
        } else {
            None
        };
        Ok(Facts {
            c,
            d,
            manifold,
            class,
        })
    }

    fn closed(&self) -> bool {
        self.manifold
            .as_ref()
            .is_some_and(|m| m.closed_pseudomanifold())
    }

    fn normal_closed(&self) -> bool {
        self.manifold
            .as_ref()
            .is_some_and(|m| m.normal_pseudomanifold())
    }

    fn banner(&self) -> bool {
        self.class.as_ref().is_some_and(|k| k.banner)
    }

    /// Closed banner pseudomanifold, or the reason it is not one.
    fn banner_pseudomanifold(&self) -> std::result::Result<(), &'static str> {
        if !self.closed() {
            Err("not a closed pseudomanifold")
        } else if !self.banner() {
            Err("not banner")
        } else {
            Ok(())
        }
    }
}

fn vertex_label(c: &SimplicialComplex, v: VertexId) -> Vec<String> {
    vec![c.label(v).to_owned()]
}

pub fn verify_property(id: PropertyId, c: &SimplicialComplex) -> Result<PropertyCheckResult> {
    let facts = Facts::new(c)?;
    check(id, &facts)
}

fn check(id: PropertyId, f: &Facts) -> Result<PropertyCheckResult> {
    use PropertyId::*;
    let c = f.c;
    let d = f.d;
    if !c.is_pure() {
        return Ok(PropertyCheckResult::skip(id, "not pure"));
    }
    if d == 0 {
        return Ok(PropertyCheckResult::skip(id, "zero-dimensional"));
    }
    match id {
        T1_1 => {
            if !f.normal_closed() {
                return Ok(PropertyCheckResult::skip(
                    id,
                    "not a closed normal pseudomanifold",
                ));
            }
            let b = match banner_number(c) {
                Ok(b) => b.value,
                Err(Error::UndefinedBannerNumber { failing_face }) => {
                    return Ok(PropertyCheckResult::fail(
                        id,
                        "banner number undefined on a normal pseudomanifold",
                        failing_face,
                    ))
                }
                Err(e) => return Err(e),
            };
            connectivity_at_least(id, c, 2 * d - b, &format!("2d - b = {}", 2 * d - b))
        }
        T4_1 => {
            if !f.normal_closed() {
                return Ok(PropertyCheckResult::skip(
                    id,
                    "not a closed normal pseudomanifold",
                ));
            }
            if !f.banner() {
                return Ok(PropertyCheckResult::skip(id, "not banner"));
            }
            connectivity_at_least(id, c, 2 * d, "2d")
        }
        A3_2 => {
            if !f.closed() {
                return Ok(PropertyCheckResult::skip(id, "not a closed pseudomanifold"));
            }
            if !f.class.as_ref().is_some_and(|k| k.flag) {
                return Ok(PropertyCheckResult::skip(id, "not flag"));
            }
            connectivity_at_least(id, c, 2 * d, "2d")
        }
        L2_1 => {
            if !f.closed() {
                return Ok(PropertyCheckResult::skip(id, "not a closed pseudomanifold"));
            }
            Ok(match manifold::barnette_failure(c)? {
                None => PropertyCheckResult::pass(id, "every antistar is strongly connected"),
                Some(x) => PropertyCheckResult::fail(
                    id,
                    "antistar is not strongly connected",
                    vertex_label(c, x),
                ),
            })
        }
        L4_2 => {
            if let Err(why) = f.banner_pseudomanifold() {
                return Ok(PropertyCheckResult::skip(id, why));
            }
            let g = skeleton(c);
            let edges: Vec<(usize, usize)> = g.edge_list().collect();
            let bad = edges
                .iter()
                .flat_map(|&(u, v)| [(u, v), (v, u)])
                .find(|&(x, y)| g.neighbors(y).iter().all(|&z| z == x || g.adjacent(x, z)));
            Ok(match bad {
                None => PropertyCheckResult::pass(
                    id,
                    format!(
                        "N(y) is not contained in N(x) for all {} edges",
                        edges.len()
                    ),
                ),
                Some((x, y)) => PropertyCheckResult::fail(
                    id,
                    "N(y) is contained in N(x)",
                    index_labels(c, &[x, y]),
                ),
            })
        }
        L4_3 => {
            if let Err(why) = f.banner_pseudomanifold() {
                return Ok(PropertyCheckResult::skip(id, why));
            }
            Ok(if skeleton(c).is_complete() {
                PropertyCheckResult::fail(id, "graph is complete", Vec::new())
            } else {
                PropertyCheckResult::pass(id, "graph is not complete")
            })
        }
        L4_4 => {
            if let Err(why) = f.banner_pseudomanifold() {
                return Ok(PropertyCheckResult::skip(id, why));
            }
            let vertices: Vec<VertexId> = c.vertices().collect();
            let bad = vertices
                .par_iter()
                .map(|&x| match graph::is_outside_connected(c, x) {
                    Ok(true) => Ok(None),
                    Ok(false) => Ok(Some((
                        x,
                        "vertices not adjacent to x induce a disconnected subcomplex",
                    ))),
                    Err(Error::EmptyOutside(_)) => Ok(Some((x, "every vertex is adjacent to x"))),
                    Err(e) => Err(e),
                })
                .find_first(|r| !matches!(r, Ok(None)));
            Ok(match bad {
                None => {
                    PropertyCheckResult::pass(id, "outside subcomplex connected for every vertex")
                }
                Some(Err(e)) => return Err(e),
                Some(Ok(Some((x, why)))) => PropertyCheckResult::fail(id, why, vertex_label(c, x)),
                Some(Ok(None)) => unreachable!(),
            })
        }
        L4_4Homological => {
            if !f.banner() {
                return Ok(PropertyCheckResult::skip(id, "not banner"));
            }
            if !f.manifold.as_ref().is_some_and(|m| m.homology_manifold) {
                return Ok(PropertyCheckResult::skip(id, "not a homology manifold"));
            }
            for x in c.vertices() {
                let h = neighborhood_homology(c, x)?;
                if !h.consistent() {
                    return Ok(PropertyCheckResult::fail(
                        id,
                        format!(
                            "H_d(Σ) = {}, H_(d-1)(Σ) = {}, H_d(Δ,Σ) = {}, outside connected = {}",
                            h.sigma_top, h.sigma_below, h.relative_top, h.outside_connected
                        ),
                        vertex_label(c, x),
                    ));
                }
            }
            Ok(PropertyCheckResult::pass(
                id,
                "H_d(Σ) = H_(d-1)(Σ) = 0 and H_d(Δ,Σ) = Z2 with Γ connected, for every vertex",
            ))
        }
        L5_2 => {
            let b = match banner_number(c) {
                Ok(b) => b.value,
                Err(Error::UndefinedBannerNumber { .. }) => {
                    return Ok(PropertyCheckResult::skip(id, "banner number undefined"))
                }
                Err(e) => return Err(e),
            };
            let mut checked = 0;
            for k in 1..=b {
                for sigma in c.faces(k) {
                    checked += 1;
                    let link = c.link(sigma)?;
                    let ok = match banner_number(&link) {
                        Ok(bl) => bl.value + k <= b,
                        Err(Error::UndefinedBannerNumber { .. }) => false,
                        Err(e) => return Err(e),
                    };
                    if !ok {
                        return Ok(PropertyCheckResult::fail(
                            id,
                            format!("banner number of the link exceeds {b} - |σ|"),
                            c.face_labels(sigma),
                        ));
                    }
                }
            }
            Ok(PropertyCheckResult::pass(
                id,
                format!("{checked} faces with 1 <= |σ| <= {b}"),
            ))
        }
        P3_7 => {
            if d < 2 {
                return Ok(PropertyCheckResult::skip(
                    id,
                    "vertex links are zero-dimensional",
                ));
            }
            let class = f.class.as_ref().expect("pure and d >= 1");
            if !class.banner {
                return Ok(PropertyCheckResult::skip(id, "not banner"));
            }
            for x in c.vertices() {
                let lk = classify(&c.vertex_link(x)?)?;
                if !lk.banner {
                    return Ok(PropertyCheckResult::fail(
                        id,
                        "link is not banner",
                        vertex_label(c, x),
                    ));
                }
                if class.strongly_banner && !lk.strongly_banner {
                    return Ok(PropertyCheckResult::fail(
                        id,
                        "link is not strongly banner",
                        vertex_label(c, x),
                    ));
                }
            }
            Ok(PropertyCheckResult::pass(
                id,
                "every vertex link inherits the class",
            ))
        }
        P3_8i | P3_8ii => {
            let (other, what) = if id == P3_8i {
                (c.cone(None)?, "cone")
            } else {
                (c.suspension(None)?, "suspension")
            };
            let a = f.class.as_ref().expect("pure and d >= 1");
            let b = classify(&other)?;
            Ok(match class_mismatch(a, &b) {
                None => PropertyCheckResult::pass(
                    id,
                    format!("{what} has the same flag/strongly banner/banner class"),
                ),
                Some(which) => {
                    PropertyCheckResult::fail(id, format!("{what} differs in {which}"), Vec::new())
                }
            })
        }
        P3_8iii => check_tilde(id, f),
    }
}

fn connectivity_at_least(
    id: PropertyId,
    c: &SimplicialComplex,
    bound: usize,
    what: &str,
) -> Result<PropertyCheckResult> {
    let kappa = vertex_connectivity(&skeleton(c));
    Ok(if kappa.kappa >= bound {
        PropertyCheckResult::pass(id, format!("κ = {} >= {what}", kappa.kappa))
    } else {
        let cut = match kappa.certificate {
            ConnectivityCertificate::Cut(cut) => index_labels(c, &cut.vertices),
            _ => Vec::new(),
        };
        PropertyCheckResult::fail(id, format!("κ = {} < {what} = {bound}", kappa.kappa), cut)
    })
}

fn class_mismatch(a: &BannerClass, b: &BannerClass) -> Option<&'static str> {
    if a.flag != b.flag {
        Some("flag")
    } else if a.strongly_banner != b.strongly_banner {
        Some("strongly banner")
    } else if a.banner != b.banner {
        Some("banner")
    } else {
        None
    }
}

fn check_tilde(id: PropertyId, f: &Facts) -> Result<PropertyCheckResult> {
    let c = f.c;
    let d = f.d;
    if !f
        .manifold
        .as_ref()
        .is_some_and(|m| m.pseudomanifold_with_boundary())
    {
        return Ok(PropertyCheckResult::skip(
            id,
            "not a pseudomanifold with boundary",
        ));
    }
    if d < 2 {
        return Ok(PropertyCheckResult::skip(
            id,
            "boundary is zero-dimensional",
        ));
    }
    if z2_betti(c).values.iter().any(|&b| b != 0) {
        return Ok(PropertyCheckResult::skip(id, "not Z2-acyclic"));
    }
    for j in 1..=d + 2 {
        let types = banner::classify_tilde_cliques(c, j)?;
        if let Some(t) = types.type3.first() {
            return Ok(PropertyCheckResult::skip(
                id,
                format!("tilde has a type-3 clique {:?}", types.tilde.face_labels(t)),
            ));
        }
    }
    let boundary = c.boundary().ok_or(Error::NoBoundary)?;
    let tilde = classify(&c.tilde(None)?)?;
    let ball = f.class.as_ref().expect("pure and d >= 1");
    let rim = classify(&boundary)?;
    let expected = BannerClass {
        flag: ball.flag && rim.flag,
        strongly_banner: ball.strongly_banner && rim.strongly_banner,
        banner: ball.banner && rim.banner,
        ..ball.clone()
    };
    Ok(match class_mismatch(&tilde, &expected) {
        None => PropertyCheckResult::pass(
            id,
            "tilde has exactly the classes shared by the ball and its boundary",
        ),
        Some(which) => {
            PropertyCheckResult::fail(id, format!("tilde differs in {which}"), Vec::new())
        }
    })
}

/// The homological quantities behind the second argument for connectivity
/// of the outside subcomplex at `x`, with `Σ` induced on `N(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborhoodHomology {
    /// Reduced `β_d(Σ)`.
    pub sigma_top: usize,
    /// Reduced `β_{d−1}(Σ)`.
    pub sigma_below: usize,
    /// `β_d(Δ, Σ)`.
    pub relative_top: usize,
    /// `β_d(Δ)`.
    pub complex_top: usize,
    pub outside_connected: bool,
}

impl NeighborhoodHomology {
    /// The vanishing pattern expected for a banner homology manifold, and
    /// agreement of `β_d(Δ, Σ) = 1` with connectivity of the outside.
    pub fn consistent(&self) -> bool {
        self.sigma_top == 0
            && self.sigma_below == 0
            && self.complex_top == 1
            && self.relative_top == 1
            && self.outside_connected
    }
}

pub fn neighborhood_homology(c: &SimplicialComplex, x: VertexId) -> Result<NeighborhoodHomology> {
    let d = c.dim();
    let sigma = c.induced(&neighborhood(c, x)?)?;
    let sb = z2_betti(&sigma);
    let relative = z2_relative_betti(c, Some(&sigma))?;
    let outside_connected = match graph::is_outside_connected(c, x) {
        Ok(b) => b,
        Err(Error::EmptyOutside(_)) => false,
        Err(e) => return Err(e),
    };
    Ok(NeighborhoodHomology {
        sigma_top: sb.get(d),
        sigma_below: if d >= 1 { sb.get(d - 1) } else { 0 },
        relative_top: relative.get(d),
        complex_top: manifold::z2_betti_unreduced(c).get(d),
        outside_connected,
    })
}

/// Runs `properties` on one complex, sharing the expensive facts.
pub fn verify_all(
    c: &SimplicialComplex,
    properties: &[PropertyId],
) -> Result<Vec<PropertyCheckResult>> {
    let facts = Facts::new(c)?;
    properties.iter().map(|&p| check(p, &facts)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusRow {
    pub name: String,
    pub result: PropertyCheckResult,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub rows: Vec<CorpusRow>,
    pub reports: Vec<AnalysisReport>,
    /// Inputs that could not be analysed, as `(name, message)`.
    pub errors: Vec<(String, String)>,
}

impl CorpusSummary {
    pub fn count(&self, v: Verdict) -> usize {
        self.rows.iter().filter(|r| r.result.verdict == v).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CorpusRow> {
        self.rows
            .iter()
            .filter(|r| r.result.verdict == Verdict::Fail)
    }
}

/// Analyses every complex and checks `properties` (all of them when
/// `None`), one task per (complex, property). Rows are sorted by name, then
/// property.
pub fn verify_corpus(
    corpus: &[(String, SimplicialComplex)],
    properties: Option<&[PropertyId]>,
) -> CorpusSummary {
    let properties = properties.unwrap_or(&PropertyId::ALL);
    let facts: Vec<Result<Facts>> = corpus.par_iter().map(|(_, c)| Facts::new(c)).collect();
    let tasks: Vec<(usize, PropertyId)> = (0..corpus.len())
        .filter(|&i| facts[i].is_ok())
        .flat_map(|i| properties.iter().map(move |&p| (i, p)))
        .collect();
    let outcomes: Vec<(usize, Result<PropertyCheckResult>)> = tasks
        .par_iter()
        .map(|&(i, p)| {
            let f = facts[i].as_ref().expect("filtered above");
            (i, check(p, f))
        })
        .collect();
    let analyses: Vec<Result<AnalysisReport>> = corpus
        .par_iter()
        .map(|(name, c)| analyze(name, c))
        .collect();

    let mut summary = CorpusSummary::default();
    for (i, f) in facts.iter().enumerate() {
        if let Err(e) = f {
            summary.errors.push((corpus[i].0.clone(), e.to_string()));
        }
    }
    for (i, r) in outcomes {
        match r {
            Ok(result) => summary.rows.push(CorpusRow {
                name: corpus[i].0.clone(),
                result,
            }),
            Err(e) => summary.errors.push((corpus[i].0.clone(), e.to_string())),
        }
    }
    for (i, a) in analyses.into_iter().enumerate() {
        match a {
            Ok(r) => summary.reports.push(r),
            Err(e) if facts[i].is_ok() => summary.errors.push((corpus[i].0.clone(), e.to_string())),
            Err(_) => {}
        }
    }
    summary.rows.sort_by(|a, b| {
        a.name
            .cmp(&b.name)
            .then(a.result.property.cmp(&b.result.property))
    });
    summary.reports.sort_by(|a, b| a.name.cmp(&b.name));
    summary.errors.sort();
    summary.errors.dedup();
    summary
}

/// The default corpus with display names.
pub fn default_corpus() -> Vec<(String, SimplicialComplex)> {
    crate::generators::catalog()
        .into_iter()
        .map(|(spec, c)| (spec.to_string(), c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn report_of_tetra_boundary() {
        let r = analyze("tb", &simplex_boundary(3).unwrap()).unwrap();
        assert_eq!(r.banner, Some(false));
        assert_eq!(r.banner_number, Some(1));
        assert_eq!(r.connectivity, 3);
        assert_eq!(r.bound, Some(3));
        assert_eq!(r.bound_satisfied, Some(true));
        let json = report_json(&r);
        assert!(json.contains("\"schema\": \"scx-report/1\""));
        assert_eq!(parse_report(&json).unwrap(), r);
    }

    #[test]
    fn report_rejects_unknown_fields() {
        let r = analyze("c4", &cycle(4).unwrap()).unwrap();
        let mut v: serde_json::Value = serde_json::from_str(&report_json(&r)).unwrap();
        v["extra"] = serde_json::json!(1);
        assert!(matches!(
            parse_report(&v.to_string()),
            Err(Error::Report(_))
        ));
    }

    #[test]
    fn property_ids_round_trip() {
        for p in PropertyId::ALL {
            assert_eq!(p.as_str().parse::<PropertyId>().unwrap(), p);
            assert_eq!(
                serde_json::to_string(&p).unwrap(),
                format!("\"{}\"", p.as_str())
            );
        }
        assert!(matches!(
            "L9.9".parse::<PropertyId>(),
            Err(Error::UnknownProperty(_))
        ));
    }

    #[test]
    fn hypothesis_gates() {
        let k4 = banana(&complete_graph(4)).unwrap();
        assert_eq!(
            verify_property(PropertyId::L4_3, &k4).unwrap().verdict,
            Verdict::Skip
        );
        let r = verify_property(PropertyId::P3_8ii, &ring_ball()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let split = split_disk().tilde(None).unwrap();
        let r = verify_property(PropertyId::L4_4, &split).unwrap();
        assert_eq!(r.verdict, Verdict::Skip);
        assert_eq!(r.reason, "not banner");
    }
}
