//! Block graphs. [`build_gamma`] assembles the bimarked graph of a
//! truncated principal block from the admissible diagram moves: a move of
//! degree d landing at the p-th cross of the target contributes an edge
//! marked (b, deg) = (p, d + 1), kept only when p exceeds the target's tail.
//! The companion mark `b'` is the landing *coordinate* (taken on the t = 2
//! representative for t = 1 families), which yields a decreasingly
//! equivalent graph on which composable edges never repeat a mark.
//!
//! [`golden_graph`] serves the small-rank reference graphs exactly as they
//! appear in the literature figures, as independent fixtures: the gl(1|1)
//! chain, the osp(2|2) double chain (with the degree-2 loop on its full
//! variant), the osp(3|2) fork, and the principal-block graphs of
//! D(2,1;a), G(3) and F(4), which share the osp(3|2) shape.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::bigraph::{
    BimarkedGraph, Grading, GraphBuilder, GraphError, PathFlavor, UndirectedGraph, VertexInfo,
};
use crate::diagram::{DiagramError, WeightDiagram};
use crate::lattice::{Family, Pari};
use crate::moves::{self, MoveError};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BlockSpec {
    pub family: Family,
    pub coord_bound: u32,
}

impl BlockSpec {
    pub fn new(family: Family, coord_bound: u32) -> Result<BlockSpec, GammaError> {
        let k = match family {
            Family::Osp { k, .. } => k,
            Family::Gl11 => {
                return Err(GammaError::BadSpec(String::from(
                    "blocks are built from osp weight diagrams",
                )))
            }
        };
        if coord_bound < k {
            return Err(GammaError::BadSpec(format!(
                "coordinate bound {coord_bound} is smaller than k = {k}"
            )));
        }
        Ok(BlockSpec {
            family,
            coord_bound,
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GammaError {
    BadSpec(String),
    Diagram(DiagramError),
    Move(MoveError),
    Graph(GraphError),
    OutOfTruncation(String),
    UnknownGolden(String),
}

impl fmt::Display for GammaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaError::BadSpec(s) => write!(f, "bad block spec: {s}"),
            GammaError::Diagram(e) => write!(f, "{e}"),
            GammaError::Move(e) => write!(f, "{e}"),
            GammaError::Graph(e) => write!(f, "{e}"),
            GammaError::OutOfTruncation(s) => {
                write!(f, "truncation too small: {s}")
            }
            GammaError::UnknownGolden(s) => write!(f, "unknown golden graph '{s}'"),
        }
    }
}

impl From<DiagramError> for GammaError {
    fn from(e: DiagramError) -> Self {
        GammaError::Diagram(e)
    }
}

impl From<MoveError> for GammaError {
    fn from(e: MoveError) -> Self {
        GammaError::Move(e)
    }
}

impl From<GraphError> for GammaError {
    fn from(e: GraphError) -> Self {
        GammaError::Graph(e)
    }
}

fn vertex_info(d: &WeightDiagram) -> VertexInfo {
    VertexInfo {
        id: d.render(),
        tail: i64::from(d.tail()),
        norm: d.norm() as i64,
        pari: d.pari(),
    }
}

/// The truncated block graph: vertices are the diagrams with coordinates
/// within the bound, edges come from the admissible moves.
pub fn build_gamma(spec: &BlockSpec) -> Result<BimarkedGraph, GammaError> {
    build_gamma_with(spec, &moves::NonnegativeDegree)
}

/// Same, under a custom admissibility policy. Exists so the consequences
/// of a wrong policy stay observable: the golden-graph and grading checks
/// catch a broken one.
pub fn build_gamma_with(
    spec: &BlockSpec,
    policy: &dyn moves::MovePolicy,
) -> Result<BimarkedGraph, GammaError> {
    let diagrams = WeightDiagram::enumerate_block(spec.family, spec.coord_bound)?;
    let mut builder = GraphBuilder::new();
    for d in &diagrams {
        builder.vertex(vertex_info(d));
    }
    for d in &diagrams {
        let src = d.render();
        for mv in moves::enumerate_moves_with(d, spec.coord_bound, policy)? {
            // only marks above the target's tail belong to the block graph
            if i64::from(mv.landing_index) <= i64::from(mv.target.tail()) {
                continue;
            }
            builder.edge(
                &src,
                &mv.target.render(),
                i64::from(mv.landing_index),
                mv.degree + 1,
                Some(i64::from(mv.b)),
            );
        }
    }
    Ok(builder.freeze(Grading::ByNorm)?)
}

/// The decreasingly equivalent relabel of a built graph: `b` is swapped for
/// the landing coordinate `b'`.
pub fn relabel_bprime(g: &BimarkedGraph) -> Result<BimarkedGraph, GammaError> {
    Ok(g.with_bprime_marks()?)
}

/// The undirected degree-one skeleton.
pub fn gamma1(g: &BimarkedGraph) -> UndirectedGraph {
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|e| e.deg == 1)
        .map(|e| (e.src.min(e.dst), e.src.max(e.dst)))
        .collect();
    edges.sort_unstable();
    UndirectedGraph {
        vertices: g.vertices().to_vec(),
        edges,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GoldenName {
    Gl11,
    Osp22,
    Osp22Tilde,
    Osp32,
    Osp32Tilde,
    D21aPrincipal,
    G3Principal,
    F4Principal,
}

impl GoldenName {
    pub const ALL: [GoldenName; 8] = [
        GoldenName::Gl11,
        GoldenName::Osp22,
        GoldenName::Osp22Tilde,
        GoldenName::Osp32,
        GoldenName::Osp32Tilde,
        GoldenName::D21aPrincipal,
        GoldenName::G3Principal,
        GoldenName::F4Principal,
    ];

    pub fn parse(name: &str) -> Result<GoldenName, GammaError> {
        Ok(match name {
            "gl11" => GoldenName::Gl11,
            "osp22" => GoldenName::Osp22,
            "osp22_tilde" => GoldenName::Osp22Tilde,
            "osp32" => GoldenName::Osp32,
            "osp32_tilde" => GoldenName::Osp32Tilde,
            "D21a_principal" => GoldenName::D21aPrincipal,
            "G3_principal" => GoldenName::G3Principal,
            "F4_principal" => GoldenName::F4Principal,
            other => return Err(GammaError::UnknownGolden(other.to_string())),
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            GoldenName::Gl11 => "gl11",
            GoldenName::Osp22 => "osp22",
            GoldenName::Osp22Tilde => "osp22_tilde",
            GoldenName::Osp32 => "osp32",
            GoldenName::Osp32Tilde => "osp32_tilde",
            GoldenName::D21aPrincipal => "D21a_principal",
            GoldenName::G3Principal => "G3_principal",
            GoldenName::F4Principal => "F4_principal",
        }
    }
}

/// Hard-coded reference graphs, truncated to `size` (the largest |s| for
/// the chains, the largest index j for the fork-shaped graphs).
pub fn golden_graph(name: GoldenName, size: u32) -> Result<BimarkedGraph, GammaError> {
    match name {
        GoldenName::Gl11 => golden_gl11(size),
        GoldenName::Osp22 => golden_osp22(size, false),
        GoldenName::Osp22Tilde => golden_osp22(size, true),
        GoldenName::Osp32 => golden_osp32_shape(size, false, SpineIds::Osp32),
        GoldenName::Osp32Tilde => golden_osp32_shape(size, true, SpineIds::Osp32),
        GoldenName::D21aPrincipal | GoldenName::G3Principal | GoldenName::F4Principal => {
            golden_osp32_shape(size, true, SpineIds::Labels)
        }
    }
}

/// The gl(1|1) principal chain: vertices sα for |s| <= size, every edge
/// (s)->(s+1) marked (1;1); the bipartition value of sα is (-1)^s and every
/// vertex has tail 1. Graded by chain position.
fn golden_gl11(size: u32) -> Result<BimarkedGraph, GammaError> {
    let n = size as i64;
    let mut b = GraphBuilder::new();
    for s in -n..=n {
        b.vertex(VertexInfo {
            id: s.to_string(),
            tail: 1,
            norm: s + n,
            pari: Pari::from_exponent(s.rem_euclid(2) as u64),
        });
    }
    for s in -n..n {
        b.edge(&s.to_string(), &(s + 1).to_string(), 1, 1, None);
    }
    Ok(b.freeze(Grading::ByNorm)?)
}

/// The osp(2|2) principal graph: two chains leaving the ground vertex, all
/// edges (1;1); the relabel marks grow with the distance from the ground.
/// The full variant adds the (1;2) loop at the ground vertex.
fn golden_osp22(size: u32, tilde: bool) -> Result<BimarkedGraph, GammaError> {
    use crate::diagram::Sign;
    let fam = crate::lattice::OSP22;
    let id = |s: i64| -> Result<String, GammaError> {
        let sign = match s.signum() {
            0 => None,
            1 => Some(Sign::Plus),
            _ => Some(Sign::Minus),
        };
        Ok(WeightDiagram::new(fam, alloc::vec![s.unsigned_abs() as u32], sign)?.render())
    };
    let n = size as i64;
    let mut b = GraphBuilder::new();
    for s in -n..=n {
        b.vertex(VertexInfo {
            id: id(s)?,
            tail: i64::from(s == 0),
            norm: s.abs(),
            pari: Pari::from_exponent(s.unsigned_abs()),
        });
    }
    for s in 0..n {
        b.edge(&id(s)?, &id(s + 1)?, 1, 1, Some(s + 1));
        b.edge(&id(-s)?, &id(-s - 1)?, 1, 1, Some(s + 1));
    }
    if tilde {
        let ground = id(0)?;
        b.edge(&ground, &ground, 1, 2, None);
    }
    Ok(b.freeze(Grading::ByNorm)?)
}

enum SpineIds {
    /// osp(3|2) diagram texts
    Osp32,
    /// abstract labels L0, L1, ... for the exceptional principal blocks
    Labels,
}

/// The fork-shaped graph shared by osp(3|2) and the principal blocks of
/// D(2,1;a), G(3), F(4): ground -> 1 marked (1;2), ground -> 2 marked
/// (1;1), then a chain of (1;1) steps. The full variant adds the returning
/// edge 1 -> ground, which carries degree 2 (forced by the bipartition:
/// both endpoints sit in the even part).
fn golden_osp32_shape(size: u32, tilde: bool, ids: SpineIds) -> Result<BimarkedGraph, GammaError> {
    let fam = crate::lattice::OSP32;
    let id = |j: u32| -> Result<String, GammaError> {
        Ok(match ids {
            SpineIds::Labels => format!("L{j}"),
            SpineIds::Osp32 => {
                let d = match j {
                    0 => WeightDiagram::parse("-x", fam)?,
                    1 => WeightDiagram::parse("+x", fam)?,
                    j => WeightDiagram::new(fam, alloc::vec![j - 1], None)?,
                };
                d.render()
            }
        })
    };
    if size < 2 {
        return Err(GammaError::BadSpec(String::from(
            "the fork shape needs size >= 2",
        )));
    }
    let mut b = GraphBuilder::new();
    for j in 0..=size {
        b.vertex(VertexInfo {
            id: id(j)?,
            tail: i64::from(j == 0),
            norm: i64::from(j.saturating_sub(1)),
            pari: Pari::from_exponent(u64::from(j.saturating_sub(1))),
        });
    }
    b.edge(&id(0)?, &id(1)?, 1, 2, Some(1));
    b.edge(&id(0)?, &id(2)?, 1, 1, Some(2));
    for j in 1..size {
        b.edge(&id(j)?, &id(j + 1)?, 1, 1, Some(i64::from(j) + 1));
    }
    if tilde {
        b.edge(&id(1)?, &id(0)?, 1, 2, None);
    }
    Ok(b.freeze(Grading::ByNorm)?)
}

/// Coefficients of the expansion of a simple character over the Euler
/// basis: for each ν the number of increasing paths from ν to λ in the
/// relabeled graph. Only nonzero entries are returned, keyed by diagram
/// text.
pub fn coefficients_dless(
    spec: &BlockSpec,
    lambda: &WeightDiagram,
) -> Result<BTreeMap<String, i64>, GammaError> {
    if lambda.max_coord() > spec.coord_bound {
        return Err(GammaError::OutOfTruncation(format!(
            "{} has a cross beyond the bound {}",
            lambda.render(),
            spec.coord_bound
        )));
    }
    let g = relabel_bprime(&build_gamma(spec)?)?;
    let target = g
        .index_of(&lambda.render())
        .ok_or_else(|| GammaError::OutOfTruncation(lambda.render()))?;
    let mut out = BTreeMap::new();
    for nu in 0..g.vertex_count() {
        let count = g.count_increasing_paths(nu, target)?;
        if count != 0 {
            out.insert(g.vertex(nu).id.clone(), count);
        }
    }
    Ok(out)
}

/// The alternating sum over decreasing paths from ν to λ in the block
/// graph, i.e. the z = -1 value of the corresponding Poincaré-type
/// polynomial.
pub fn k_at_minus_one(
    spec: &BlockSpec,
    lambda: &WeightDiagram,
    nu: &WeightDiagram,
) -> Result<i64, GammaError> {
    if lambda.max_coord() > spec.coord_bound || nu.max_coord() > spec.coord_bound {
        return Err(GammaError::OutOfTruncation(format!(
            "{} or {} has a cross beyond the bound {}",
            lambda.render(),
            nu.render(),
            spec.coord_bound
        )));
    }
    let g = build_gamma(spec)?;
    let target = g
        .index_of(&lambda.render())
        .ok_or_else(|| GammaError::OutOfTruncation(lambda.render()))?;
    let source = g
        .index_of(&nu.render())
        .ok_or_else(|| GammaError::OutOfTruncation(nu.render()))?;
    Ok(g.signed_path_sum(source, target, PathFlavor::DecLen)?)
}
