//! The Cliffordinkra graph: `n` edge colors, a boson/fermion split of the
//! vertices, and a solid/dashed flag on every edge.
//!
//! Adjacency is stored per color as a partner array, so `partner(i, ·)` is an
//! involution. Fixed points (loops) are representable so that folded cubes
//! with odd codewords can be built and then rejected by [`validate`].

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::f2::BitVec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    #[serde(rename = "b")]
    Boson,
    #[serde(rename = "f")]
    Fermion,
}

impl Parity {
    pub fn from_weight(weight: u32) -> Parity {
        if weight.is_multiple_of(2) {
            Parity::Boson
        } else {
            Parity::Fermion
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Boson => Parity::Fermion,
            Parity::Fermion => Parity::Boson,
        }
    }
}

/// One edge in the serialized edge list. Colors are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub color: usize,
    pub dashed: bool,
    pub u: usize,
    pub v: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cliffordinkra {
    n: usize,
    parity: Vec<Parity>,
    partner: Vec<Vec<usize>>,
    dashed: Vec<Vec<bool>>,
    labels: Option<Vec<String>>,
}

/// On-disk form: keys sorted, edges sorted by `(color, u, v)` with `u ≤ v`.
#[derive(Serialize, Deserialize)]
struct GraphFile {
    edges: Vec<EdgeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    n: usize,
    parity: Vec<Parity>,
}

#[derive(Serialize, Deserialize)]
struct EdgeRecord {
    color: usize,
    dashed: bool,
    u: usize,
    v: usize,
}

impl Cliffordinkra {
    /// Builds a graph from per-color partner and dash arrays, indexed
    /// `[color][vertex]`.
    pub fn from_links(
        n: usize,
        parity: Vec<Parity>,
        partner: Vec<Vec<usize>>,
        dashed: Vec<Vec<bool>>,
    ) -> Result<Self> {
        let nv = parity.len();
        if partner.len() != n || dashed.len() != n {
            return Err(Error::Structure(format!(
                "expected link arrays for {n} colors, got {} and {}",
                partner.len(),
                dashed.len()
            )));
        }
        for i in 0..n {
            if partner[i].len() != nv || dashed[i].len() != nv {
                return Err(Error::Structure(format!(
                    "color {i}: link arrays do not cover {nv} vertices"
                )));
            }
            for v in 0..nv {
                let p = partner[i][v];
                if p >= nv {
                    return Err(Error::Structure(format!(
                        "color {i}: vertex {v} links to missing vertex {p}"
                    )));
                }
                if partner[i][p] != v {
                    return Err(Error::Structure(format!(
                        "color {i}: link {v} -> {p} is not symmetric"
                    )));
                }
                if dashed[i][v] != dashed[i][p] {
                    return Err(Error::Structure(format!(
                        "color {i}: edge {v}-{p} has inconsistent dashing"
                    )));
                }
            }
        }
        Ok(Cliffordinkra {
            n,
            parity,
            partner,
            dashed,
            labels: None,
        })
    }

    /// Builds a graph from an edge list. Every vertex must meet exactly one
    /// edge of each color (a loop `u == v` counts once).
    pub fn from_edges(n: usize, parity: Vec<Parity>, edges: &[Edge]) -> Result<Self> {
        let nv = parity.len();
        let mut partner = vec![vec![usize::MAX; nv]; n];
        let mut dashed = vec![vec![false; nv]; n];
        for e in edges {
            if e.color >= n {
                return Err(Error::Structure(format!(
                    "edge color {} out of range for {n} colors",
                    e.color
                )));
            }
            if e.u >= nv || e.v >= nv {
                return Err(Error::Structure(format!(
                    "edge {}-{} refers to a missing vertex",
                    e.u, e.v
                )));
            }
            for (a, b) in [(e.u, e.v), (e.v, e.u)] {
                if partner[e.color][a] != usize::MAX && partner[e.color][a] != b {
                    return Err(Error::Structure(format!(
                        "vertex {a} has more than one edge of color {}",
                        e.color
                    )));
                }
                if partner[e.color][a] == b && e.u != e.v && (a, b) == (e.u, e.v) {
                    return Err(Error::Structure(format!(
                        "duplicate edge {}-{} of color {}",
                        e.u, e.v, e.color
                    )));
                }
                partner[e.color][a] = b;
                dashed[e.color][a] = e.dashed;
            }
        }
        for (i, row) in partner.iter().enumerate() {
            if let Some(v) = row.iter().position(|&p| p == usize::MAX) {
                return Err(Error::Structure(format!(
                    "vertex {v} has no edge of color {i}"
                )));
            }
        }
        Cliffordinkra::from_links(n, parity, partner, dashed)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.num_vertices() {
            return Err(Error::Structure(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.num_vertices()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_vertices(&self) -> usize {
        self.parity.len()
    }

    pub fn num_edges(&self) -> usize {
        (0..self.n)
            .map(|i| {
                (0..self.num_vertices())
                    .filter(|&v| self.partner[i][v] >= v)
                    .count()
            })
            .sum()
    }

    pub fn parity(&self, v: usize) -> Parity {
        self.parity[v]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    pub fn partner(&self, color: usize, v: usize) -> usize {
        self.partner[color][v]
    }

    pub fn is_dashed(&self, color: usize, v: usize) -> bool {
        self.dashed[color][v]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        self.labels
            .as_ref()
            .map_or_else(|| v.to_string(), |l| l[v].clone())
    }

    pub fn bosons(&self) -> Vec<usize> {
        (0..self.num_vertices())
            .filter(|&v| self.parity[v] == Parity::Boson)
            .collect()
    }

    pub fn fermions(&self) -> Vec<usize> {
        (0..self.num_vertices())
            .filter(|&v| self.parity[v] == Parity::Fermion)
            .collect()
    }

    /// Edges in canonical order: by color, then by the smaller endpoint.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.num_edges());
        for i in 0..self.n {
            for u in 0..self.num_vertices() {
                let v = self.partner[i][u];
                if v >= u {
                    out.push(Edge {
                        color: i,
                        dashed: self.dashed[i][u],
                        u,
                        v,
                    });
                }
            }
        }
        out
    }

    /// `ids[color][v]` is the position of the edge at `(color, v)` in
    /// [`Cliffordinkra::edges`].
    pub fn edge_ids(&self) -> Vec<Vec<usize>> {
        let nv = self.num_vertices();
        let mut ids = vec![vec![0; nv]; self.n];
        let mut next = 0;
        for (row, partner) in ids.iter_mut().zip(&self.partner) {
            for (u, &v) in partner.iter().enumerate() {
                if v >= u {
                    row[u] = next;
                    row[v] = next;
                    next += 1;
                }
            }
        }
        ids
    }

    /// The dashing as a 1-cochain over [`Cliffordinkra::edges`].
    pub fn dashing(&self) -> BitVec {
        BitVec::from_bools(self.edges().into_iter().map(|e| e.dashed))
    }

    /// Replaces the dashing with a 1-cochain over [`Cliffordinkra::edges`].
    pub fn with_dashing(&self, dashing: &BitVec) -> Result<Cliffordinkra> {
        if dashing.len() != self.num_edges() {
            return Err(Error::DimensionMismatch(format!(
                "dashing has {} entries for {} edges",
                dashing.len(),
                self.num_edges()
            )));
        }
        let ids = self.edge_ids();
        let mut out = self.clone();
        for (row, id_row) in out.dashed.iter_mut().zip(&ids) {
            for (d, &id) in row.iter_mut().zip(id_row) {
                *d = dashing.get(id);
            }
        }
        Ok(out)
    }

    pub fn with_parity(&self, parity: Vec<Parity>) -> Result<Cliffordinkra> {
        if parity.len() != self.num_vertices() {
            return Err(Error::DimensionMismatch(format!(
                "{} parities for {} vertices",
                parity.len(),
                self.num_vertices()
            )));
        }
        Ok(Cliffordinkra {
            parity,
            ..self.clone()
        })
    }

    /// Toggles the dash on every edge with exactly one endpoint in `set`.
    pub fn vertex_switch(&self, set: &[usize]) -> Result<Cliffordinkra> {
        let nv = self.num_vertices();
        let mut inside = vec![false; nv];
        for &v in set {
            if v >= nv {
                return Err(Error::IndexOutOfRange { index: v, bound: nv });
            }
            inside[v] = true;
        }
        let mut out = self.clone();
        for i in 0..self.n {
            for v in 0..nv {
                if inside[v] != inside[self.partner[i][v]] {
                    out.dashed[i][v] = !out.dashed[i][v];
                }
            }
        }
        Ok(out)
    }

    /// Renumbers vertices: old vertex `order[k]` becomes vertex `k`.
    pub fn reorder(&self, order: &[usize]) -> Result<Cliffordinkra> {
        let nv = self.num_vertices();
        let position = inverse_permutation(order, nv)?;
        let parity = order.iter().map(|&v| self.parity[v]).collect();
        let partner = (0..self.n)
            .map(|i| order.iter().map(|&v| position[self.partner[i][v]]).collect())
            .collect();
        let dashed = (0..self.n)
            .map(|i| order.iter().map(|&v| self.dashed[i][v]).collect())
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| order.iter().map(|&v| l[v].clone()).collect());
        Ok(Cliffordinkra {
            n: self.n,
            parity,
            partner,
            dashed,
            labels,
        })
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let nv = self.num_vertices();
        let mut comp = vec![usize::MAX; nv];
        let mut out = Vec::new();
        for start in 0..nv {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[start] = id;
            let mut members = vec![start];
            let mut k = 0;
            while k < members.len() {
                let v = members[k];
                k += 1;
                for i in 0..self.n {
                    let p = self.partner[i][v];
                    if comp[p] == usize::MAX {
                        comp[p] = id;
                        members.push(p);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.num_vertices() > 0 && self.components().len() == 1
    }

    /// The subgraph on `vertices` (which must be a union of components),
    /// renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Cliffordinkra> {
        let nv = self.num_vertices();
        let mut position = vec![usize::MAX; nv];
        for (k, &v) in vertices.iter().enumerate() {
            position[v] = k;
        }
        let mut partner = vec![Vec::with_capacity(vertices.len()); self.n];
        for (i, row) in partner.iter_mut().enumerate() {
            for &v in vertices {
                let p = position[self.partner[i][v]];
                if p == usize::MAX {
                    return Err(Error::Structure(
                        "induced vertex set is not closed under adjacency".into(),
                    ));
                }
                row.push(p);
            }
        }
        Ok(Cliffordinkra {
            n: self.n,
            parity: vertices.iter().map(|&v| self.parity[v]).collect(),
            partner,
            dashed: (0..self.n)
                .map(|i| vertices.iter().map(|&v| self.dashed[i][v]).collect())
                .collect(),
            labels: self
                .labels
                .as_ref()
                .map(|l| vertices.iter().map(|&v| l[v].clone()).collect()),
        })
    }

    /// Disjoint union; vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Cliffordinkra) -> Result<Cliffordinkra> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "{} colors vs {} colors",
                self.n, other.n
            )));
        }
        let shift = self.num_vertices();
        let mut out = self.clone();
        out.parity.extend(&other.parity);
        for i in 0..self.n {
            out.partner[i].extend(other.partner[i].iter().map(|&p| p + shift));
            out.dashed[i].extend(&other.dashed[i]);
        }
        out.labels = match (&self.labels, &other.labels) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
            _ => None,
        };
        Ok(out)
    }

    /// Canonical JSON: sorted keys, edges sorted by `(color, u, v)`.
    pub fn to_json(&self) -> String {
        let file = GraphFile {
            edges: self
                .edges()
                .into_iter()
                .map(|e| EdgeRecord {
                    color: e.color,
                    dashed: e.dashed,
                    u: e.u,
                    v: e.v,
                })
                .collect(),
            labels: self.labels.clone(),
            n: self.n,
            parity: self.parity.clone(),
        };
        serde_json::to_string(&file).expect("graph serializes")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::from_str(&self.to_json()).expect("round trip through serde_json")
    }

    pub fn from_json(text: &str) -> Result<Cliffordinkra> {
        let raw = RawGraph::from_json(text)?;
        raw.build()
    }
}

/// A graph as read from JSON, before the link structure is checked. Used so
/// that regularity problems can be reported rather than rejected.
#[derive(Clone, Debug)]
pub struct RawGraph {
    pub n: usize,
    pub parity: Vec<Parity>,
    pub edges: Vec<Edge>,
    pub labels: Option<Vec<String>>,
}

impl RawGraph {
    pub fn from_json(text: &str) -> Result<RawGraph> {
        let file: GraphFile = serde_json::from_str(text)?;
        Ok(RawGraph {
            n: file.n,
            parity: file.parity,
            edges: file
                .edges
                .into_iter()
                .map(|e| Edge {
                    color: e.color,
                    dashed: e.dashed,
                    u: e.u,
                    v: e.v,
                })
                .collect(),
            labels: file.labels,
        })
    }

    pub fn build(&self) -> Result<Cliffordinkra> {
        let g = Cliffordinkra::from_edges(self.n, self.parity.clone(), &self.edges)?;
        match &self.labels {
            Some(l) => g.with_labels(l.clone()),
            None => Ok(g),
        }
    }

    /// Vertices that do not meet exactly one edge of some color.
    pub fn regularity_violations(&self) -> Vec<Violation> {
        let nv = self.parity.len();
        let mut count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for e in &self.edges {
            if e.color >= self.n || e.u >= nv || e.v >= nv {
                continue;
            }
            *count.entry((e.u, e.color)).or_default() += 1;
            if e.u != e.v {
                *count.entry((e.v, e.color)).or_default() += 1;
            }
        }
        let mut out = Vec::new();
        for v in 0..nv {
            for color in 0..self.n {
                let c = count.get(&(v, color)).copied().unwrap_or(0);
                if c != 1 {
                    out.push(Violation::Regularity {
                        vertex: v,
                        color,
                        incident: c,
                    });
                }
            }
        }
        for e in &self.edges {
            if e.color >= self.n || e.u >= nv || e.v >= nv {
                out.push(Violation::Regularity {
                    vertex: e.u.min(e.v),
                    color: e.color,
                    incident: 0,
                });
            }
        }
        out
    }
}

pub(crate) fn inverse_permutation(order: &[usize], nv: usize) -> Result<Vec<usize>> {
    if order.len() != nv {
        return Err(Error::DimensionMismatch(format!(
            "ordering lists {} vertices, graph has {nv}",
            order.len()
        )));
    }
    let mut position = vec![usize::MAX; nv];
    for (k, &v) in order.iter().enumerate() {
        if v >= nv || position[v] != usize::MAX {
            return Err(Error::Structure(format!(
                "ordering is not a permutation (vertex {v})"
            )));
        }
        position[v] = k;
    }
    Ok(position)
}

/// A bicolor 4-cycle, listed as the closed walk `v0 -i- v1 -j- v2 -i- v3 -j- v0`
/// starting from its smallest vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BicolorCycle {
    pub colors: (usize, usize),
    pub vertices: [usize; 4],
}

impl BicolorCycle {
    /// `(color, vertex)` pairs naming the four edges of the cycle.
    pub fn edge_slots(&self) -> [(usize, usize); 4] {
        let (i, j) = self.colors;
        let [a, b, c, d] = self.vertices;
        [(i, a), (j, b), (i, c), (j, d)]
    }

    pub fn dash_count(&self, g: &Cliffordinkra) -> usize {
        self.edge_slots()
            .iter()
            .filter(|&&(c, v)| g.is_dashed(c, v))
            .count()
    }
}

/// The closed alternating walk `v, p_i v, p_j p_i v, p_i p_j p_i v`, i.e. the
/// image of a cube square. It is a genuine 4-cycle only in quadrilateral
/// graphs.
pub(crate) fn square_walk(g: &Cliffordinkra, i: usize, j: usize, v: usize) -> [usize; 4] {
    let a = g.partner(i, v);
    let b = g.partner(j, a);
    let c = g.partner(i, b);
    [v, a, b, c]
}

/// Every bicolor component that is a 4-cycle, for every color pair `i < j`.
pub fn bicolor_cycles(g: &Cliffordinkra) -> Vec<BicolorCycle> {
    let nv = g.num_vertices();
    let mut out = Vec::new();
    for i in 0..g.n() {
        for j in i + 1..g.n() {
            let mut seen = vec![false; nv];
            for v in 0..nv {
                if seen[v] {
                    continue;
                }
                let walk = square_walk(g, i, j, v);
                let closes = g.partner(j, walk[3]) == v;
                let distinct = (0..4).all(|x| (x + 1..4).all(|y| walk[x] != walk[y]));
                for &u in &walk {
                    seen[u] = true;
                }
                if closes && distinct {
                    out.push(BicolorCycle {
                        colors: (i, j),
                        vertices: walk,
                    });
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Violation {
    /// A vertex meets `incident != 1` edges of a color.
    Regularity {
        vertex: usize,
        color: usize,
        incident: usize,
    },
    /// An edge joins two vertices of the same parity (including loops).
    Bipartite { color: usize, u: usize, v: usize },
    /// The bicolor component through `vertex` is not a 4-cycle.
    Quadrilateral {
        vertex: usize,
        colors: (usize, usize),
        size: usize,
    },
    /// A bicolor 4-cycle has the wrong dash parity.
    Dashing {
        colors: (usize, usize),
        cycle: [usize; 4],
        dashes: usize,
        expected_odd: bool,
    },
    /// A codeword violates the signature weight condition.
    SignatureCode {
        codeword: String,
        negative_weight: u32,
        positive_weight: u32,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn from_violations(violations: Vec<Violation>) -> Self {
        ValidationReport {
            valid: violations.is_empty(),
            violations,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn dashing_violations(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(|v| matches!(v, Violation::Dashing { .. }))
    }

    pub fn summary(&self) -> String {
        if self.is_valid() {
            return "valid".into();
        }
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        for v in &self.violations {
            let key = match v {
                Violation::Regularity { .. } => "regularity",
                Violation::Bipartite { .. } => "bipartite",
                Violation::Quadrilateral { .. } => "quadrilateral",
                Violation::Dashing { .. } => "dashing",
                Violation::SignatureCode { .. } => "signature code",
            };
            *counts.entry(key).or_default() += 1;
        }
        counts
            .iter()
            .map(|(k, c)| format!("{c} {k} violation(s)"))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Checks the bipartite, quadrilateral and totally odd rules. Regularity
/// holds by construction for a built graph; see [`validate_raw`] for files.
pub fn validate(g: &Cliffordinkra) -> ValidationReport {
    validate_with(g, |_, _| true)
}

/// Like [`validate`], but the required dash parity of each bicolor cycle is
/// given per color pair (`true` = odd).
pub fn validate_with(g: &Cliffordinkra, expect_odd: impl Fn(usize, usize) -> bool) -> ValidationReport {
    let mut violations = Vec::new();
    for e in g.edges() {
        if e.u == e.v || g.parity(e.u) == g.parity(e.v) {
            violations.push(Violation::Bipartite {
                color: e.color,
                u: e.u,
                v: e.v,
            });
        }
    }
    let nv = g.num_vertices();
    for i in 0..g.n() {
        for j in i + 1..g.n() {
            let mut seen = vec![false; nv];
            for v in 0..nv {
                if seen[v] {
                    continue;
                }
                let orbit = bicolor_orbit(g, i, j, v);
                for &u in &orbit {
                    seen[u] = true;
                }
                let walk = square_walk(g, i, j, v);
                let is_square = orbit.len() == 4 && g.partner(j, walk[3]) == v;
                if !is_square {
                    violations.push(Violation::Quadrilateral {
                        vertex: v,
                        colors: (i, j),
                        size: orbit.len(),
                    });
                    continue;
                }
                let cycle = BicolorCycle {
                    colors: (i, j),
                    vertices: walk,
                };
                let dashes = cycle.dash_count(g);
                let odd = expect_odd(i, j);
                if (dashes % 2 == 1) != odd {
                    violations.push(Violation::Dashing {
                        colors: (i, j),
                        cycle: walk,
                        dashes,
                        expected_odd: odd,
                    });
                }
            }
        }
    }
    ValidationReport::from_violations(violations)
}

/// Validates a graph as read from a file, reporting regularity problems
/// instead of failing on them.
pub fn validate_raw(raw: &RawGraph) -> ValidationReport {
    let regular = raw.regularity_violations();
    if !regular.is_empty() {
        return ValidationReport::from_violations(regular);
    }
    match raw.build() {
        Ok(g) => validate(&g),
        Err(_) => ValidationReport::from_violations(regular),
    }
}

fn bicolor_orbit(g: &Cliffordinkra, i: usize, j: usize, v: usize) -> Vec<usize> {
    let mut orbit = vec![v];
    let mut k = 0;
    while k < orbit.len() {
        let u = orbit[k];
        k += 1;
        for c in [i, j] {
            let p = g.partner(c, u);
            if !orbit.contains(&p) {
                orbit.push(p);
            }
        }
    }
    orbit
}

const PALETTE: [&str; 12] = [
    "black", "red", "green", "blue", "orange", "purple", "brown", "cyan", "magenta", "gray",
    "gold", "darkgreen",
];

/// Graphviz rendering: bosons as open circles, fermions filled, dashed edges
/// drawn dashed, colors from a fixed palette.
pub fn to_dot(g: &Cliffordinkra) -> String {
    let mut out = String::from("graph cliffordinkra {\n  node [shape=circle, width=0.3];\n");
    for v in 0..g.num_vertices() {
        let (fill, font) = match g.parity(v) {
            Parity::Boson => ("white", "black"),
            Parity::Fermion => ("black", "white"),
        };
        let _ = writeln!(
            out,
            "  v{v} [label=\"{}\", style=filled, fillcolor={fill}, fontcolor={font}];",
            g.label(v)
        );
    }
    for e in g.edges() {
        let color = PALETTE[e.color % PALETTE.len()];
        let style = if e.dashed { "dashed" } else { "solid" };
        let _ = writeln!(
            out,
            "  v{} -- v{} [color={color}, style={style}, penwidth=2];",
            e.u, e.v
        );
    }
    out.push_str("}\n");
    out
}
