//! Directed graphs whose edges carry two integer marks `b` and `deg` (plus
//! an optional relabel mark `b'`), with the gradings, path sets and path
//! matrices attached to them.
//!
//! A path is *decreasing* (resp. *increasing*) when its `b` marks strictly
//! decrease (resp. increase); the empty path at a vertex is both. Strict
//! monotonicity means loops are ordinary edges usable at most once in a row,
//! and on a finite graph every monotone path set is finite.
//!
//! Two signed path sums matter downstream: over decreasing paths with sign
//! `(-1)^(deg + length)` (the entries of the matrix `A>`), and over
//! increasing paths with sign `(-1)^deg` (the entries of `A<`, which inverts
//! `A>` on graphs where composable edges never repeat a mark). The sum over
//! decreasing paths with sign `(-1)^deg` is also provided; it is the
//! other textual reading of `A<` and is kept so the inversion test can tell
//! the two readings apart.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::lattice::Pari;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexInfo {
    /// canonical diagram text, or a fixture label
    pub id: String,
    pub tail: i64,
    pub norm: i64,
    pub pari: Pari,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub b: i64,
    pub deg: i64,
    pub bprime: Option<i64>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphError {
    DuplicateVertex(String),
    UnknownVertex(String),
    GradingViolated(String),
    /// path queries need a registered grading witness
    NoGrading,
    NotDownClosed(String),
    StructureMismatch(String),
    MissingBprime,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::DuplicateVertex(s) => write!(f, "duplicate vertex '{s}'"),
            GraphError::UnknownVertex(s) => write!(f, "unknown vertex '{s}'"),
            GraphError::GradingViolated(s) => write!(f, "grading violated: {s}"),
            GraphError::NoGrading => write!(f, "no grading registered; path sets not certified"),
            GraphError::NotDownClosed(s) => write!(f, "truncation not down-closed: {s}"),
            GraphError::StructureMismatch(s) => write!(f, "graphs differ in structure: {s}"),
            GraphError::MissingBprime => write!(f, "edge without a b' mark"),
        }
    }
}

/// How vertices are graded when the graph is frozen.
#[derive(Clone, Debug)]
pub enum Grading {
    /// no certificate; path queries will be refused
    None,
    /// use each vertex's `norm` field
    ByNorm,
    /// explicit values keyed by vertex id
    Explicit(BTreeMap<String, i64>),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PathFlavor {
    /// decreasing paths, sign (-1)^(deg + length)
    DecLen,
    /// decreasing paths, sign (-1)^deg
    Dec,
    /// increasing paths, sign (-1)^deg
    Inc,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Path {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub degree: i64,
}

impl Path {
    pub fn length(&self) -> usize {
        self.edges.len()
    }
}

pub struct GraphBuilder {
    vertices: Vec<VertexInfo>,
    edges: Vec<(String, String, i64, i64, Option<i64>)>,
}

impl GraphBuilder {
    pub fn new() -> GraphBuilder {
        GraphBuilder {
            vertices: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn vertex(&mut self, info: VertexInfo) -> &mut Self {
        self.vertices.push(info);
        self
    }

    pub fn edge(
        &mut self,
        src: &str,
        dst: &str,
        b: i64,
        deg: i64,
        bprime: Option<i64>,
    ) -> &mut Self {
        self.edges
            .push((String::from(src), String::from(dst), b, deg, bprime));
        self
    }

    /// Sort vertices by (norm, id), resolve edge endpoints, validate the
    /// grading witness if one is requested.
    pub fn freeze(self, grading: Grading) -> Result<BimarkedGraph, GraphError> {
        let mut vertices = self.vertices;
        vertices.sort_by(|a, b| (a.norm, &a.id).cmp(&(b.norm, &b.id)));
        let mut by_id = BTreeMap::new();
        for (ix, v) in vertices.iter().enumerate() {
            if by_id.insert(v.id.clone(), ix).is_some() {
                return Err(GraphError::DuplicateVertex(v.id.clone()));
            }
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for (src, dst, b, deg, bprime) in self.edges {
            let s = *by_id
                .get(&src)
                .ok_or(GraphError::UnknownVertex(src.clone()))?;
            let d = *by_id
                .get(&dst)
                .ok_or(GraphError::UnknownVertex(dst.clone()))?;
            edges.push(Edge {
                src: s,
                dst: d,
                b,
                deg,
                bprime,
            });
        }
        edges.sort_by_key(|e| (e.src, e.dst, e.b, e.deg, e.bprime));
        let grades = match grading {
            Grading::None => None,
            Grading::ByNorm => Some(vertices.iter().map(|v| v.norm).collect::<Vec<_>>()),
            Grading::Explicit(map) => {
                let mut g = Vec::with_capacity(vertices.len());
                for v in &vertices {
                    g.push(
                        *map.get(&v.id)
                            .ok_or(GraphError::UnknownVertex(v.id.clone()))?,
                    );
                }
                Some(g)
            }
        };
        if let Some(g) = &grades {
            for e in &edges {
                if g[e.src] > g[e.dst] {
                    return Err(GraphError::GradingViolated(format!(
                        "edge {} -> {} drops the grade {} -> {}",
                        vertices[e.src].id, vertices[e.dst].id, g[e.src], g[e.dst]
                    )));
                }
            }
        }
        let mut out_edges = vec![Vec::new(); vertices.len()];
        for (ix, e) in edges.iter().enumerate() {
            out_edges[e.src].push(ix);
        }
        Ok(BimarkedGraph {
            vertices,
            by_id,
            edges,
            out_edges,
            grades,
        })
    }
}

impl Default for GraphBuilder {
    fn default() -> Self {
        GraphBuilder::new()
    }
}

/// A frozen bimarked graph. Vertices are canonically ordered; all queries
/// are read-only.
#[derive(Clone, Debug)]
pub struct BimarkedGraph {
    vertices: Vec<VertexInfo>,
    by_id: BTreeMap<String, usize>,
    edges: Vec<Edge>,
    out_edges: Vec<Vec<usize>>,
    grades: Option<Vec<i64>>,
}

impl BimarkedGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[VertexInfo] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.by_id.get(id).copied()
    }

    pub fn vertex(&self, ix: usize) -> &VertexInfo {
        &self.vertices[ix]
    }

    pub fn grades(&self) -> Option<&[i64]> {
        self.grades.as_deref()
    }

    /// A copy whose `b` marks are replaced by the stored `b'` marks, edge
    /// order preserved. Errors when any edge lacks `b'`.
    pub fn with_bprime_marks(&self) -> Result<BimarkedGraph, GraphError> {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.b = e.bprime.ok_or(GraphError::MissingBprime)?;
        }
        Ok(g)
    }

    /// (-1)^deg(e) = pari(src) pari(dst) on every edge.
    pub fn check_z2_grading(&self) -> bool {
        let pari: Vec<Pari> = self.vertices.iter().map(|v| v.pari).collect();
        self.check_z2_grading_with(&pari)
    }

    pub fn check_z2_grading_with(&self, pari: &[Pari]) -> bool {
        self.edges.iter().all(|e| {
            let lhs = if e.deg.rem_euclid(2) == 0 { 1 } else { -1 };
            lhs == pari[e.src].value() * pari[e.dst].value()
        })
    }

    /// Composable edges never carry equal marks.
    pub fn check_bb(&self) -> bool {
        self.edges.iter().all(|e1| {
            self.out_edges[e1.dst]
                .iter()
                .all(|&e2| self.edges[e2].b != e1.b)
        })
    }

    /// tail(src) <= b(e) on every edge.
    pub fn check_tail_condition(&self) -> bool {
        self.edges.iter().all(|e| self.vertices[e.src].tail <= e.b)
    }

    /// Same vertices and positionally matching edges up to marks, and the
    /// mark orders agree on every composable pair.
    pub fn check_decreasing_equivalence(&self, other: &BimarkedGraph) -> Result<bool, GraphError> {
        if self.vertices.len() != other.vertices.len()
            || self
                .vertices
                .iter()
                .zip(other.vertices.iter())
                .any(|(a, b)| a.id != b.id)
        {
            return Err(GraphError::StructureMismatch(String::from(
                "vertex sets differ",
            )));
        }
        if self.edges.len() != other.edges.len()
            || self
                .edges
                .iter()
                .zip(other.edges.iter())
                .any(|(a, b)| (a.src, a.dst, a.deg) != (b.src, b.dst, b.deg))
        {
            return Err(GraphError::StructureMismatch(String::from(
                "edge lists do not align",
            )));
        }
        for (i1, e1) in self.edges.iter().enumerate() {
            for &i2 in &self.out_edges[e1.dst] {
                let e2 = &self.edges[i2];
                let f1 = &other.edges[i1];
                let f2 = &other.edges[i2];
                if (e1.b > e2.b) != (f1.b > f2.b) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn require_grading(&self) -> Result<(), GraphError> {
        if self.grades.is_some() {
            Ok(())
        } else {
            Err(GraphError::NoGrading)
        }
    }

    /// All b-decreasing paths from v to w, the empty path included when
    /// v = w.
    pub fn decreasing_paths(&self, v: usize, w: usize) -> Result<Vec<Path>, GraphError> {
        self.require_grading()?;
        Ok(self.enumerate_paths(v, w, false))
    }

    /// All b-increasing paths from v to w.
    pub fn increasing_paths(&self, v: usize, w: usize) -> Result<Vec<Path>, GraphError> {
        self.require_grading()?;
        Ok(self.enumerate_paths(v, w, true))
    }

    fn enumerate_paths(&self, v: usize, w: usize, increasing: bool) -> Vec<Path> {
        let mut out = Vec::new();
        let mut cur = Path {
            vertices: vec![v],
            edges: Vec::new(),
            degree: 0,
        };
        self.dfs_paths(v, w, increasing, None, &mut cur, &mut out);
        out
    }

    fn dfs_paths(
        &self,
        u: usize,
        w: usize,
        increasing: bool,
        last_b: Option<i64>,
        cur: &mut Path,
        out: &mut Vec<Path>,
    ) {
        if u == w {
            out.push(cur.clone());
        }
        for &eix in &self.out_edges[u] {
            let e = &self.edges[eix];
            let ok = match last_b {
                None => true,
                Some(prev) => {
                    if increasing {
                        e.b > prev
                    } else {
                        e.b < prev
                    }
                }
            };
            if !ok {
                continue;
            }
            cur.vertices.push(e.dst);
            cur.edges.push(eix);
            cur.degree += e.deg;
            self.dfs_paths(e.dst, w, increasing, Some(e.b), cur, out);
            cur.vertices.pop();
            cur.edges.pop();
            cur.degree -= e.deg;
        }
    }

    /// Signed sum over the monotone paths from v to w, memoized on
    /// (vertex, previous mark).
    pub fn signed_path_sum(
        &self,
        v: usize,
        w: usize,
        flavor: PathFlavor,
    ) -> Result<i64, GraphError> {
        self.require_grading()?;
        let mut memo = BTreeMap::new();
        Ok(self.weighted_sum(v, w, flavor, None, &mut memo))
    }

    /// Number of increasing paths from v to w.
    pub fn count_increasing_paths(&self, v: usize, w: usize) -> Result<i64, GraphError> {
        self.require_grading()?;
        let mut memo = BTreeMap::new();
        Ok(self.count_inc(v, w, None, &mut memo))
    }

    fn weighted_sum(
        &self,
        u: usize,
        w: usize,
        flavor: PathFlavor,
        last_b: Option<i64>,
        memo: &mut BTreeMap<(usize, Option<i64>), i64>,
    ) -> i64 {
        if let Some(&hit) = memo.get(&(u, last_b)) {
            return hit;
        }
        let mut acc: i64 = i64::from(u == w);
        for &eix in &self.out_edges[u] {
            let e = &self.edges[eix];
            let ok = match (flavor, last_b) {
                (_, None) => true,
                (PathFlavor::Inc, Some(prev)) => e.b > prev,
                (_, Some(prev)) => e.b < prev,
            };
            if !ok {
                continue;
            }
            let deg_sign = if e.deg.rem_euclid(2) == 0 { 1 } else { -1 };
            let step = match flavor {
                PathFlavor::DecLen => -deg_sign,
                PathFlavor::Dec | PathFlavor::Inc => deg_sign,
            };
            acc += step * self.weighted_sum(e.dst, w, flavor, Some(e.b), memo);
        }
        memo.insert((u, last_b), acc);
        acc
    }

    fn count_inc(
        &self,
        u: usize,
        w: usize,
        last_b: Option<i64>,
        memo: &mut BTreeMap<(usize, Option<i64>), i64>,
    ) -> i64 {
        if let Some(&hit) = memo.get(&(u, last_b)) {
            return hit;
        }
        let mut acc: i64 = i64::from(u == w);
        for &eix in &self.out_edges[u] {
            let e = &self.edges[eix];
            if let Some(prev) = last_b {
                if e.b <= prev {
                    continue;
                }
            }
            acc += self.count_inc(e.dst, w, Some(e.b), memo);
        }
        memo.insert((u, last_b), acc);
        acc
    }

    /// Verify a truncation is predecessor-closed, which certifies that every
    /// path between truncation vertices stays inside it.
    pub fn check_down_closed(&self, trunc: &[usize]) -> Result<(), GraphError> {
        let inside = member_mask(self.vertices.len(), trunc);
        for e in &self.edges {
            if inside[e.dst] && !inside[e.src] {
                return Err(GraphError::NotDownClosed(format!(
                    "edge {} -> {} enters it from outside",
                    self.vertices[e.src].id, self.vertices[e.dst].id
                )));
            }
        }
        Ok(())
    }

    /// Path matrix over a truncation: entry (row λ, col ν) is the signed
    /// path sum from ν to λ.
    pub fn path_matrix(
        &self,
        trunc: &[usize],
        flavor: PathFlavor,
    ) -> Result<Vec<Vec<i64>>, GraphError> {
        self.require_grading()?;
        self.check_down_closed(trunc)?;
        let n = trunc.len();
        let mut m = vec![vec![0i64; n]; n];
        for (col, &nu) in trunc.iter().enumerate() {
            for (row, &lam) in trunc.iter().enumerate() {
                let mut memo = BTreeMap::new();
                m[row][col] = self.weighted_sum(nu, lam, flavor, None, &mut memo);
            }
        }
        Ok(m)
    }

    /// Exact check that the increasing-path matrix inverts the decreasing
    /// one, both products. Errors on a truncation that is not down-closed.
    pub fn matrix_identity_check(&self, trunc: &[usize]) -> Result<bool, GraphError> {
        let a_gt = self.path_matrix(trunc, PathFlavor::DecLen)?;
        let a_lt = self.path_matrix(trunc, PathFlavor::Inc)?;
        Ok(is_identity(&mat_mul(&a_lt, &a_gt)) && is_identity(&mat_mul(&a_gt, &a_lt)))
    }

    /// Every vertex index, in canonical order.
    pub fn full_truncation(&self) -> Vec<usize> {
        (0..self.vertices.len()).collect()
    }
}

fn member_mask(n: usize, trunc: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; n];
    for &ix in trunc {
        mask[ix] = true;
    }
    mask
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn is_identity(m: &[Vec<i64>]) -> bool {
    m.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, &v)| v == i64::from(i == j)))
}

/// Undirected multigraph, the degree-one skeleton of a bimarked graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    pub vertices: Vec<VertexInfo>,
    /// normalized so src <= dst, sorted
    pub edges: Vec<(usize, usize)>,
}

impl UndirectedGraph {
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut n: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        n.sort_unstable();
        n.dedup();
        n
    }
}
