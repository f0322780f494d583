//! Wire formats: the JSON schemas for weights, diagrams, moves, graphs and
//! series, plus DOT rendering for the graphs. All output is deterministic:
//! struct field order is fixed and every collection is emitted in canonical
//! order.

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use dsblock_core::bigraph::{BimarkedGraph, Grading, GraphBuilder, UndirectedGraph};
use dsblock_core::charring::CharContext;
use dsblock_core::diagram::{Sign, WeightDiagram};
use dsblock_core::lattice::{Family, Pari, Weight};
use dsblock_core::moves::{Move, MoveKind};
use dsblock_core::rat;
use dsblock_core::series::Series;

/// Weight JSON: rationals are `p` or `p/q` strings.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct WeightDto {
    pub t: u8,
    pub k: u32,
    pub eps: Vec<String>,
    pub delta: Vec<String>,
}

impl WeightDto {
    pub fn from_weight(w: &Weight) -> Result<WeightDto> {
        let (t, k) = match w.family() {
            Family::Osp { t, k } => (t, k),
            Family::Gl11 => bail!("weight JSON covers the osp families only"),
        };
        Ok(WeightDto {
            t,
            k,
            eps: w.eps().iter().map(rat::render).collect(),
            delta: w.delta().iter().map(rat::render).collect(),
        })
    }

    pub fn to_weight(&self) -> Result<Weight> {
        let family = Family::osp(self.t, self.k).map_err(|e| anyhow!("{e}"))?;
        let parse_all = |v: &[String]| -> Result<Vec<rat::Rat>> {
            v.iter()
                .map(|s| rat::parse(s).ok_or_else(|| anyhow!("bad rational '{s}'")))
                .collect()
        };
        Weight::new(family, parse_all(&self.eps)?, parse_all(&self.delta)?)
            .map_err(|e| anyhow!("{e}"))
    }
}

/// Diagram JSON.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct DiagramDto {
    pub t: u8,
    pub k: u32,
    pub sign: Option<String>,
    pub crosses: Vec<u32>,
}

impl DiagramDto {
    pub fn from_diagram(d: &WeightDiagram) -> DiagramDto {
        DiagramDto {
            t: d.t(),
            k: d.k(),
            sign: d.sign().map(|s| s.to_string()),
            crosses: d.crosses().to_vec(),
        }
    }

    pub fn to_diagram(&self) -> Result<WeightDiagram> {
        let family = Family::osp(self.t, self.k).map_err(|e| anyhow!("{e}"))?;
        let sign = match self.sign.as_deref() {
            None => None,
            Some("+") => Some(Sign::Plus),
            Some("-") => Some(Sign::Minus),
            Some(other) => bail!("bad sign '{other}'"),
        };
        WeightDiagram::new(family, self.crosses.clone(), sign).map_err(|e| anyhow!("{e}"))
    }
}

/// Move JSON.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct MoveDto {
    pub from: DiagramDto,
    pub to: DiagramDto,
    pub kind: String,
    pub a: u32,
    pub b: u32,
    pub p: u32,
    pub d: i64,
}

impl MoveDto {
    pub fn from_move(m: &Move) -> MoveDto {
        MoveDto {
            from: DiagramDto::from_diagram(&m.source),
            to: DiagramDto::from_diagram(&m.target),
            kind: match m.kind {
                MoveKind::Single => "single".into(),
                MoveKind::Double => "double".into(),
            },
            a: m.a,
            b: m.b,
            p: m.landing_index,
            d: m.degree,
        }
    }
}

/// Graph JSON.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct GraphDto {
    pub vertices: Vec<GraphVertexDto>,
    pub edges: Vec<GraphEdgeDto>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct GraphVertexDto {
    pub id: String,
    pub diagram: String,
    pub tail: i64,
    pub norm: i64,
    pub pari: i64,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct GraphEdgeDto {
    pub src: String,
    pub dst: String,
    pub b: i64,
    pub deg: i64,
    pub bprime: Option<i64>,
}

impl GraphDto {
    pub fn from_graph(g: &BimarkedGraph) -> GraphDto {
        GraphDto {
            vertices: g
                .vertices()
                .iter()
                .map(|v| GraphVertexDto {
                    id: v.id.clone(),
                    diagram: v.id.clone(),
                    tail: v.tail,
                    norm: v.norm,
                    pari: v.pari.value(),
                })
                .collect(),
            edges: g
                .edges()
                .iter()
                .map(|e| GraphEdgeDto {
                    src: g.vertex(e.src).id.clone(),
                    dst: g.vertex(e.dst).id.clone(),
                    b: e.b,
                    deg: e.deg,
                    bprime: e.bprime,
                })
                .collect(),
        }
    }

    /// Rebuild a graph from its JSON; no grading witness is registered.
    pub fn to_graph(&self) -> Result<BimarkedGraph> {
        let mut b = GraphBuilder::new();
        for v in &self.vertices {
            b.vertex(dsblock_core::bigraph::VertexInfo {
                id: v.id.clone(),
                tail: v.tail,
                norm: v.norm,
                pari: if v.pari >= 0 { Pari::Plus } else { Pari::Minus },
            });
        }
        for e in &self.edges {
            b.edge(&e.src, &e.dst, e.b, e.deg, e.bprime);
        }
        b.freeze(Grading::None).map_err(|e| anyhow!("{e}"))
    }
}

/// Series JSON: terms sorted by descending φ-level, ties by weight order.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct SeriesDto {
    pub terms: Vec<SeriesTermDto>,
    pub depth: u32,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct SeriesTermDto {
    pub weight: WeightDto,
    pub coeff: i64,
}

impl SeriesDto {
    pub fn from_series(ctx: &CharContext, s: &Series, depth: u32) -> Result<SeriesDto> {
        let mut keyed: Vec<(rat::Rat, Weight, i64)> = s
            .terms()
            .iter()
            .map(|(w, c)| (ctx.phi().value(w), w.clone(), *c))
            .collect();
        keyed.sort_by(|a, b| (&b.0, &a.1).cmp(&(&a.0, &b.1)));
        let terms = keyed
            .into_iter()
            .map(|(_, w, c)| {
                Ok(SeriesTermDto {
                    weight: WeightDto::from_weight(&w)?,
                    coeff: c,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SeriesDto { terms, depth })
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).context("serializing to JSON")
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

/// DOT with the edge labels written `(b;deg)` as in the block-graph
/// figures.
pub fn graph_to_dot(g: &BimarkedGraph, name: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph {} {{\n", dot_quote(name)));
    out.push_str("  rankdir=LR;\n");
    for v in g.vertices() {
        out.push_str(&format!("  {};\n", dot_quote(&v.id)));
    }
    for e in g.edges() {
        out.push_str(&format!(
            "  {} -> {} [label=\"({};{})\"];\n",
            dot_quote(&g.vertex(e.src).id),
            dot_quote(&g.vertex(e.dst).id),
            e.b,
            e.deg
        ));
    }
    out.push_str("}\n");
    out
}

pub fn undirected_to_dot(g: &UndirectedGraph, name: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("graph {} {{\n", dot_quote(name)));
    out.push_str("  rankdir=LR;\n");
    for v in &g.vertices {
        out.push_str(&format!("  {};\n", dot_quote(&v.id)));
    }
    for (a, b) in &g.edges {
        out.push_str(&format!(
            "  {} -- {};\n",
            dot_quote(&g.vertices[*a].id),
            dot_quote(&g.vertices[*b].id)
        ));
    }
    out.push_str("}\n");
    out
}

/// One-line-per-edge table of a graph.
pub fn graph_to_table(g: &BimarkedGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{} vertices, {} edges\n",
        g.vertex_count(),
        g.edges().len()
    ));
    for v in g.vertices() {
        out.push_str(&format!(
            "vertex {:12} tail={} norm={} pari={}\n",
            v.id,
            v.tail,
            v.norm,
            v.pari.value()
        ));
    }
    for e in g.edges() {
        let bp = match e.bprime {
            Some(x) => x.to_string(),
            None => "-".into(),
        };
        out.push_str(&format!(
            "edge {:12} -> {:12} (b;deg)=({};{}) b'={}\n",
            g.vertex(e.src).id,
            g.vertex(e.dst).id,
            e.b,
            e.deg,
            bp
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use dsblock_core::gamma::{golden_graph, GoldenName};
    use dsblock_core::lattice::OSP32;

    #[test]
    fn graph_json_roundtrip() {
        let g = golden_graph(GoldenName::Osp32Tilde, 4).unwrap();
        let dto = GraphDto::from_graph(&g);
        let text = to_json(&dto).unwrap();
        let back: GraphDto = serde_json::from_str(&text).unwrap();
        assert_eq!(back, dto);
        let rebuilt = back.to_graph().unwrap();
        assert_eq!(GraphDto::from_graph(&rebuilt), dto);
    }

    #[test]
    fn weight_dto_roundtrip() {
        let w = Weight::new(OSP32, vec![rat::ratio(3, 2)], vec![rat::ratio(-1, 2)]).unwrap();
        let dto = WeightDto::from_weight(&w).unwrap();
        assert_eq!(dto.eps, ["3/2"]);
        assert_eq!(dto.delta, ["-1/2"]);
        assert_eq!(dto.to_weight().unwrap(), w);
    }

    #[test]
    fn dot_contains_figure_style_labels() {
        let g = golden_graph(GoldenName::Gl11, 2).unwrap();
        let dot = graph_to_dot(&g, "gl11");
        assert!(dot.contains("[label=\"(1;1)\"]"));
        assert!(dot.starts_with("digraph \"gl11\" {"));
    }

    #[test]
    fn empty_graph_renders_valid_dot() {
        let g = dsblock_core::bigraph::GraphBuilder::new()
            .freeze(Grading::None)
            .unwrap();
        let dot = graph_to_dot(&g, "empty");
        assert_eq!(dot, "digraph \"empty\" {\n  rankdir=LR;\n}\n");
    }
}
