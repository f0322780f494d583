//! The batch verification driver: thirteen numbered criteria covering the
//! golden graphs, the move tables, the gradings and matrix identities, the
//! character formulas, the reduction-functor tables and the path-counting
//! oracle. Each criterion runs independently, never panics the driver, and
//! reports one pass/fail line.
//!
//! Criterion 10 is expected to fail in part: the published closed form for
//! the half-line block shape provably cannot satisfy the local extension
//! relations (they force unbounded multiplicities on the half line), and
//! this suite reports that honestly instead of patching the table. See the
//! README and `ds verify --shape ainf`.

use std::fmt::Write as _;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use dsblock_core::bigraph::{BimarkedGraph, Grading, GraphBuilder, PathFlavor, VertexInfo};
use dsblock_core::charring::{self, CharContext};
use dsblock_core::diagram::WeightDiagram;
use dsblock_core::dsblocks::{self, Algebra, BlockId, BlockShape};
use dsblock_core::gamma::{self, BlockSpec, GoldenName};
use dsblock_core::lattice::{Family, Pari, OSP22, OSP32};
use dsblock_core::moves::{self, MoveKind};
use dsblock_core::series::Series;

#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub millis: u128,
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {:02} {} ({:5} ms)  {}: {}",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            self.millis,
            self.name,
            self.detail
        )
    }

    /// The timing-free form; command output must be byte-identical across
    /// runs, so wall-clock numbers are opt-in.
    pub fn stable_line(&self) -> String {
        format!(
            "criterion {:02} {}  {}: {}",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.detail
        )
    }
}

pub fn criterion_name(id: usize) -> &'static str {
    match id {
        1 => "golden-graph equality",
        2 => "move-degree table",
        3 => "tau golden and bijectivity",
        4 => "Z2-grading",
        5 => "N-grading, tail, relabel",
        6 => "matrix inversion identity",
        7 => "character coefficients",
        8 => "Euler characters",
        9 => "superdimension restriction",
        10 => "reduction-functor engine",
        11 => "purity and bipartiteness",
        12 => "oracle equivalence",
        13 => "total runtime",
        _ => "unknown",
    }
}

/// Run one criterion (1-12; 13 is derived from the total in `run_all`).
pub fn run_criterion(id: usize) -> CriterionOutcome {
    let start = Instant::now();
    let (pass, detail) = match id {
        1 => c01_golden_graphs(),
        2 => c02_move_degrees(),
        3 => c03_tau(),
        4 => c04_z2(),
        5 => c05_gradings(),
        6 => c06_matrix_identity(),
        7 => c07_coefficients(),
        8 => c08_euler(),
        9 => c09_sdim(),
        10 => c10_ds_engine(),
        11 => c11_purity_bipartite(),
        12 => c12_oracles(),
        _ => (false, format!("no criterion {id}")),
    };
    let millis = start.elapsed().as_millis();
    let budget_ms: Option<u128> = match id {
        1 => Some(1_000),
        3 => Some(5_000),
        4 => Some(30_000),
        6 => Some(60_000),
        _ => None,
    };
    let (pass, detail) = match budget_ms {
        Some(b) if millis >= b => (false, format!("{detail}; exceeded the {b} ms budget")),
        _ => (pass, detail),
    };
    CriterionOutcome {
        id,
        name: criterion_name(id),
        pass,
        detail,
        millis,
    }
}

/// Run everything; never fails fast. The thirteenth entry checks the total
/// wall time of the first twelve against the three-minute budget; its
/// detail stays timing-free while it passes so reports are reproducible.
pub fn run_all() -> Vec<CriterionOutcome> {
    let mut out: Vec<CriterionOutcome> = (1..=12).map(run_criterion).collect();
    let total: u128 = out.iter().map(|o| o.millis).sum();
    let pass = total < 180_000;
    out.push(CriterionOutcome {
        id: 13,
        name: criterion_name(13),
        pass,
        detail: if pass {
            String::from("full suite completed within the 180000 ms budget")
        } else {
            format!("full suite took {total} ms (budget 180000 ms)")
        },
        millis: total,
    });
    out
}

pub fn report(outcomes: &[CriterionOutcome], timings: bool) -> String {
    let mut s = String::new();
    for o in outcomes {
        let _ = writeln!(s, "{}", if timings { o.line() } else { o.stable_line() });
    }
    let failed: Vec<usize> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    if failed.is_empty() {
        let _ = writeln!(s, "all {} criteria passed", outcomes.len());
    } else {
        let _ = writeln!(s, "failing criteria: {failed:?}");
    }
    s
}

fn edge_tuples(g: &BimarkedGraph) -> Vec<(String, String, i64, i64)> {
    let mut v: Vec<_> = g
        .edges()
        .iter()
        .map(|e| {
            (
                g.vertex(e.src).id.clone(),
                g.vertex(e.dst).id.clone(),
                e.b,
                e.deg,
            )
        })
        .collect();
    v.sort();
    v
}

fn graphs_equal(a: &BimarkedGraph, b: &BimarkedGraph) -> bool {
    let ids = |g: &BimarkedGraph| -> Vec<(String, i64, i64, Pari)> {
        g.vertices()
            .iter()
            .map(|v| (v.id.clone(), v.tail, v.norm, v.pari))
            .collect()
    };
    ids(a) == ids(b) && edge_tuples(a) == edge_tuples(b)
}

fn c01_golden_graphs() -> (bool, String) {
    let run = || -> Result<String, String> {
        let err = |e: gamma::GammaError| e.to_string();
        let built22 = gamma::build_gamma(&BlockSpec::new(OSP22, 4).map_err(err)?).map_err(err)?;
        let gold22 = gamma::golden_graph(GoldenName::Osp22, 4).map_err(err)?;
        if !graphs_equal(&built22, &gold22) {
            return Err("osp(2|2) built graph differs from the reference figure".into());
        }
        let built32 = gamma::build_gamma(&BlockSpec::new(OSP32, 4).map_err(err)?).map_err(err)?;
        let gold32 = gamma::golden_graph(GoldenName::Osp32, 5).map_err(err)?;
        if !graphs_equal(&built32, &gold32) {
            return Err("osp(3|2) built graph differs from the reference figure".into());
        }
        Ok(format!(
            "osp(2|2) |s|<=4 ({} edges) and osp(3|2) j<=5 ({} edges) match edge-for-edge",
            built22.edges().len(),
            built32.edges().len()
        ))
    };
    match run() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    }
}

fn c02_move_degrees() -> (bool, String) {
    let run = || -> Result<String, String> {
        let fam2 = Family::osp(2, 1).map_err(|e| e.to_string())?;
        let fam23 = Family::osp(2, 3).map_err(|e| e.to_string())?;
        let fam0 = OSP22;
        let fam02 = Family::osp(0, 2).map_err(|e| e.to_string())?;
        let pairs: Vec<(WeightDiagram, WeightDiagram, Vec<i64>)> = vec![
            (
                WeightDiagram::parse(">;x;o", fam2).map_err(|e| e.to_string())?,
                WeightDiagram::parse(">;o;x", fam2).map_err(|e| e.to_string())?,
                vec![0],
            ),
            (
                WeightDiagram::parse(">;x;x;x;o;o", fam23).map_err(|e| e.to_string())?,
                WeightDiagram::parse(">;o;x;x;o;x", fam23).map_err(|e| e.to_string())?,
                vec![1],
            ),
            (
                WeightDiagram::parse("x", fam0).map_err(|e| e.to_string())?,
                WeightDiagram::parse("+o;x", fam0).map_err(|e| e.to_string())?,
                vec![0],
            ),
            (
                WeightDiagram::parse("x", fam0).map_err(|e| e.to_string())?,
                WeightDiagram::parse("-o;x", fam0).map_err(|e| e.to_string())?,
                vec![0],
            ),
            (
                WeightDiagram::parse("x2", fam02).map_err(|e| e.to_string())?,
                WeightDiagram::parse("x;x", fam02).map_err(|e| e.to_string())?,
                vec![0, 2],
            ),
        ];
        for (f, g, want) in pairs {
            let got = moves::move_degrees(&f, &g, MoveKind::Single).map_err(|e| e.to_string())?;
            if got != want {
                return Err(format!(
                    "{} -> {}: degrees {got:?}, expected {want:?}",
                    f.render(),
                    g.render()
                ));
            }
        }
        Ok("the four example rows give d = 0; 1; 0 (both signs); {0,2}".into())
    };
    match run() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    }
}

fn c03_tau() -> (bool, String) {
    let run = || -> Result<String, String> {
        let cases = [
            (">x;o;x", "-x;x", 2u32),
            (">x", "-x", 1),
            (">;x", "+x", 1),
            (">;o;x", "o;x", 1),
        ];
        for (from, to, k) in cases {
            let f = WeightDiagram::parse(from, Family::osp(2, k).unwrap())
                .map_err(|e| e.to_string())?;
            let g = f.tau().map_err(|e| e.to_string())?;
            if g.render() != to {
                return Err(format!("tau({from}) = {}, expected {to}", g.render()));
            }
        }
        let mut checked = 0usize;
        for k in 0..=4u32 {
            let t2 = WeightDiagram::enumerate_block(Family::osp(2, k).unwrap(), 9)
                .map_err(|e| e.to_string())?;
            let t1 = WeightDiagram::enumerate_block(Family::osp(1, k).unwrap(), 8)
                .map_err(|e| e.to_string())?;
            let mut images: Vec<WeightDiagram> = Vec::with_capacity(t2.len());
            for d in &t2 {
                let g = d.tau().map_err(|e| e.to_string())?;
                if g.tail() != d.tail() {
                    return Err(format!("tau changes the tail of {}", d.render()));
                }
                if g.tau_inv().map_err(|e| e.to_string())? != *d {
                    return Err(format!("tau_inv(tau({})) differs", d.render()));
                }
                images.push(g);
                checked += 1;
            }
            images.sort();
            let mut expect = t1;
            expect.sort();
            if images != expect {
                return Err(format!("tau image mismatch at k = {k}"));
            }
        }
        Ok(format!(
            "four golden values and a bijection over {checked} diagrams, tails preserved"
        ))
    };
    match run() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    }
}

fn built_graphs_k_le3() -> Result<Vec<(u8, u32, BimarkedGraph)>, String> {
    let mut out = Vec::new();
    for t in 0..=2u8 {
        for k in 1..=3u32 {
            let spec = BlockSpec::new(Family::osp(t, k).unwrap(), 6).map_err(|e| e.to_string())?;
            out.push((t, k, gamma::build_gamma(&spec).map_err(|e| e.to_string())?));
        }
    }
    Ok(out)
}

fn c04_z2() -> (bool, String) {
    let run = || -> Result<String, String> {
        let mut edges = 0usize;
        for (t, k, g) in built_graphs_k_le3()? {
            if !g.check_z2_grading() {
                return Err(format!("bipartition fails on the built graph t={t} k={k}"));
            }
            edges += g.edges().len();
        }
        for (name, size) in [
            (GoldenName::Gl11, 6),
            (GoldenName::Osp22Tilde, 6),
            (GoldenName::Osp32Tilde, 6),
            (GoldenName::D21aPrincipal, 6),
            (GoldenName::G3Principal, 6),
            (GoldenName::F4Principal, 6),
        ] {
            let g = gamma::golden_graph(name, size).map_err(|e| e.to_string())?;
            if !g.check_z2_grading() {
                return Err(format!("bipartition fails on golden {}", name.name()));
            }
            edges += g.edges().len();
        }
        Ok(format!(
            "(-1)^deg = pari * pari on {edges} edges across built and golden graphs"
        ))
    };
    match run() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    }
}

fn c05_gradings() -> (bool, String) {
    let run = || -> Result<String, String> {
        for (t, k, g) in built_graphs_k_le3()? {
            for e in g.edges() {
                if g.vertex(e.src).norm > g.vertex(e.dst).norm {
                    return Err(format!("norm drops along an edge (t={t} k={k})"));
                }
            }
            if !g.check_tail_condition() {
                return Err(format!("tail condition fails (t={t} k={k})"));
            }
            let relabeled = gamma::relabel_bprime(&g).map_err(|e| e.to_string())?;
            if !relabeled.check_bb() {
                return Err(format!("b' relabel violates mark separation (t={t} k={k})"));
            }
            if !g
                .check_decreasing_equivalence(&relabeled)
                .map_err(|e| e.to_string())?
            {
                return Err(format!("relabel not decreasingly equivalent (t={t} k={k})"));
            }
        }
        Ok("norm grading, tail bound, relabel separation and equivalence hold for k<=3".into())
    };
    match run() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    }
}

fn c06_matrix_identity() -> (bool, String) {
    let run = || -> Result<String, String> {
        let mut largest = 0usize;
        for (t, k, g) in built_graphs_k_le3()? {
            let relabeled = gamma::relabel_bprime(&g).map_err(|e| e.to_string())?;
            let trunc = relabeled.full_truncation();
            largest = largest.max(trunc.len());
            if !relabeled
                .matrix_identity_check(&trunc)
                .map_err(|e| e.to_string())?
            {
                return Err(format!("A< . A> != Id on t={t} k={k}"));
            }
        }
        Ok(format!(
            "both products equal the identity on every truncation (largest {largest} vertices)"
        ))
    };
    match run() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    }
}

fn c07_coefficients() -> (bool, String) {
    let run = || -> Result<String, String> {
        let ctx22 = CharContext::new(OSP22).map_err(|e| e.to_string())?;
        let spec22 = BlockSpec::new(OSP22, 4).map_err(|e| e.to_string())?;
        for j in -4i64..=4 {
            let lam = ctx22.lambda_diagram(j).map_err(|e| e.to_string())?;
            let coeffs = gamma::coefficients_dless(&spec22, &lam).map_err(|e| e.to_string())?;
            let expect: std::collections::BTreeMap<String, i64> = (0..=j.abs())
                .map(|s| {
                    let id = ctx22
                        .lambda_diagram(s * j.signum())
                        .map(|d| d.render())
                        .unwrap_or_default();
                    (id, 1)
                })
                .collect();
            if coeffs != expect {
                return Err(format!("osp(2|2) j={j}: {coeffs:?}"));
            }
        }
        let ctx32 = CharContext::new(OSP32).map_err(|e| e.to_string())?;
        let spec32 = BlockSpec::new(OSP32, 4).map_err(|e| e.to_string())?;
        for j in 0i64..=4 {
            let lam = ctx32.lambda_diagram(j).map_err(|e| e.to_string())?;
            let coeffs = gamma::coefficients_dless(&spec32, &lam).map_err(|e| e.to_string())?;
            let mut expect = std::collections::BTreeMap::new();
            let ground = ctx32.lambda_diagram(0).map_err(|e| e.to_string())?.render();
            expect.insert(ground, if j >= 2 { 2 } else { 1 });
            for s in 1..=j {
                expect.insert(
                    ctx32.lambda_diagram(s).map_err(|e| e.to_string())?.render(),
                    1,
                );
            }
            if coeffs != expect {
                return Err(format!("osp(3|2) j={j}: {coeffs:?} != {expect:?}"));
            }
        }
        Ok("all-ones chains for osp(2|2), doubled ground coefficient for osp(3|2) j>=2".into())
    };
    match run() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    }
}

fn c08_euler() -> (bool, String) {
    let run = || -> Result<String, String> {
        for fam in [OSP22, OSP32] {
            let ctx = CharContext::new(fam).map_err(|e| e.to_string())?;
            let ground = ctx.lambda_diagram(0).map_err(|e| e.to_string())?;
            let e20 = charring::euler_character(&ctx, &ground, 20)
                .map_err(|e| e.to_string())?
                .value;
            let one = Series::one(fam);
            if !e20
                .agree_on_common_window(&one, ctx.phi())
                .map_err(|e| e.to_string())?
            {
                return Err(format!("{fam}: the ground Euler character is not 1"));
            }
            let e25 = charring::euler_character(&ctx, &ground, 25)
                .map_err(|e| e.to_string())?
                .value;
            if !e20
                .agree_on_common_window(&e25, ctx.phi())
                .map_err(|e| e.to_string())?
            {
                return Err(format!("{fam}: depth 20 and 25 disagree"));
            }
        }
        // nonnegativity, integrality and Weyl invariance are enforced
        // inside simple_character; reaching Ok is the check
        let ctx = CharContext::new(OSP32).map_err(|e| e.to_string())?;
        for j in 0i64..=4 {
            charring::simple_character(&ctx, j, 20).map_err(|e| format!("osp(3|2) j={j}: {e}"))?;
        }
        let ctx = CharContext::new(OSP22).map_err(|e| e.to_string())?;
        for j in -4i64..=4 {
            charring::simple_character(&ctx, j, 20).map_err(|e| format!("osp(2|2) j={j}: {e}"))?;
        }
        Ok(
            "ground Euler characters equal 1, stable in depth; simple characters nonnegative \
             and Weyl-invariant"
                .into(),
        )
    };
    match run() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    }
}

fn c09_sdim() -> (bool, String) {
    let run = || -> Result<String, String> {
        for fam in [OSP22, OSP32] {
            let ctx = CharContext::new(fam).map_err(|e| e.to_string())?;
            for s in 1..=4i64 {
                let d = ctx.lambda_diagram(s).map_err(|e| e.to_string())?;
                let depth = 16 + 10 * s as u32;
                let e = charring::euler_character(&ctx, &d, depth)
                    .map_err(|e| e.to_string())?
                    .value;
                let v = charring::sdim(&ctx, &e).map_err(|e| e.to_string())?;
                if v != 0 {
                    return Err(format!(
                        "{fam}: sdim of the index-{s} Euler character is {v}"
                    ));
                }
            }
        }
        let ctx = CharContext::new(OSP32).map_err(|e| e.to_string())?;
        let expect = [1i64, 1, -2, 2, -2];
        for (j, want) in expect.iter().enumerate() {
            let depth = 12 + 8 * j as u32;
            let ch =
                charring::simple_character(&ctx, j as i64, depth).map_err(|e| e.to_string())?;
            let got = charring::sdim(&ctx, &ch).map_err(|e| e.to_string())?;
            if got != *want {
                return Err(format!("osp(3|2) j={j}: sdim {got}, expected {want}"));
            }
        }
        Ok("Euler characters vanish off the ground state; sdim follows 1, 1, ±2".into())
    };
    match run() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    }
}

fn c10_ds_engine() -> (bool, String) {
    let mut failures: Vec<String> = Vec::new();
    let mut notes: Vec<String> = Vec::new();
    for (shape, lo, hi) in [
        (BlockShape::AInf, 0i64, 50i64),
        (BlockShape::DInf, 0, 50),
        (BlockShape::AInfInf, -25, 25),
    ] {
        match dsblocks::verify_closed_form(shape, lo, hi) {
            Ok(None) => notes.push(format!("{shape} closed form satisfies the relations")),
            Ok(Some(v)) => failures.push(format!(
                "{shape} closed form violates the relations at index {}: {} \
                 (no bounded nonzero solution exists on the half line; see the ledger note \
                 and `ds verify --shape ainf`)",
                v.index, v.relation
            )),
            Err(e) => failures.push(format!("{shape}: {e}")),
        }
    }
    // golden table samples
    let table: Vec<(Algebra, BlockId, i64, &str, u32, u8)> = vec![
        (Algebra::D21a, BlockId::Single(0), 0, "C", 1, 0),
        (Algebra::D21a, BlockId::Single(0), 1, "C", 1, 0),
        (Algebra::D21a, BlockId::Single(0), 3, "C", 2, 0),
        (Algebra::D21a, BlockId::Single(1), 0, "L(1)+L(-1)", 1, 0),
        (Algebra::D21a, BlockId::Single(1), -3, "L(1)+L(-1)", 1, 1),
        (Algebra::D21a, BlockId::Single(2), 2, "L(2)+L(-2)", 1, 0),
        (Algebra::G3, BlockId::Single(0), 2, "L_sl2(0)", 2, 1),
        (Algebra::G3, BlockId::Single(1), 0, "L_sl2(2)", 1, 0),
        (Algebra::G3, BlockId::Single(1), 1, "L_sl2(2)", 1, 0),
        (Algebra::G3, BlockId::Single(1), 3, "L_sl2(2)", 2, 0),
        (Algebra::F4, BlockId::Pair(1, 1), 0, "L_sl3(1w1+1w2)", 1, 0),
        (Algebra::F4, BlockId::Pair(1, 1), 1, "L_sl3(1w1+1w2)", 1, 0),
        (Algebra::F4, BlockId::Pair(1, 1), 4, "L_sl3(1w1+1w2)", 2, 1),
        (
            Algebra::F4,
            BlockId::Pair(2, 1),
            0,
            "L_sl3(2w1+1w2)+L_sl3(1w1+2w2)",
            1,
            0,
        ),
        (
            Algebra::F4,
            BlockId::Pair(2, 1),
            -1,
            "L_sl3(2w1+1w2)+L_sl3(1w1+2w2)",
            1,
            1,
        ),
        (Algebra::Gl11, BlockId::Principal, 2, "C", 1, 0),
        (Algebra::Gl11, BlockId::Principal, -3, "C", 1, 1),
    ];
    for (alg, block, index, ground, copies, pi) in table {
        match dsblocks::golden_ds(alg, block, index) {
            Ok(d) => {
                if d.ground != ground || d.copies != copies || d.pi_power != pi {
                    failures.push(format!(
                        "{} at index {index}: got ({}, {}, {}), want ({ground}, {copies}, {pi})",
                        alg.name(),
                        d.ground,
                        d.copies,
                        d.pi_power
                    ));
                }
            }
            Err(e) => failures.push(format!("{} at index {index}: {e}", alg.name())),
        }
    }
    if failures.is_empty() {
        (true, notes.join("; "))
    } else {
        (false, failures.join(" | "))
    }
}

fn c11_purity_bipartite() -> (bool, String) {
    let run = || -> Result<String, String> {
        for shape in [BlockShape::AInf, BlockShape::AInfInf, BlockShape::DInf] {
            let lo = if shape == BlockShape::AInfInf { -30 } else { 0 };
            for i in lo..=30i64 {
                let rec = dsblocks::ds_multiplicity(shape, i).map_err(|e| e.to_string())?;
                let (p, q) = rec.pq();
                if p * q != 0 {
                    return Err(format!("{shape} index {i} mixes parities"));
                }
                for j in shape.adjacency(i) {
                    if j < lo || j > 30 {
                        continue;
                    }
                    let other = dsblocks::ds_multiplicity(shape, j).map_err(|e| e.to_string())?;
                    if other.pari() == rec.pari() {
                        return Err(format!("{shape}: pari constant along edge {i}-{j}"));
                    }
                }
            }
        }
        Ok("records are pure and pari alternates along every shape edge".into())
    };
    match run() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    }
}

fn c12_oracles() -> (bool, String) {
    let run = || -> Result<String, String> {
        // path counters against naive enumeration on seeded random graphs
        let mut rng = StdRng::seed_from_u64(0xACC3);
        for case in 0..100 {
            let n = rng.gen_range(1..=12usize);
            let mut b = GraphBuilder::new();
            for i in 0..n {
                b.vertex(VertexInfo {
                    id: format!("v{i:02}"),
                    tail: 0,
                    norm: i as i64,
                    pari: Pari::Plus,
                });
            }
            for i in 0..n {
                for j in i..n {
                    if rng.gen_bool(if i == j { 0.1 } else { 0.3 }) {
                        let mark = rng.gen_range(-3..=3i64);
                        let deg = rng.gen_range(0..=3i64);
                        b.edge(&format!("v{i:02}"), &format!("v{j:02}"), mark, deg, None);
                    }
                }
            }
            let g = b.freeze(Grading::ByNorm).map_err(|e| e.to_string())?;
            for s in 0..n {
                for t in 0..n {
                    let dec = g.decreasing_paths(s, t).map_err(|e| e.to_string())?;
                    let naive: i64 = dec
                        .iter()
                        .map(|p| {
                            if (p.degree + p.length() as i64).rem_euclid(2) == 0 {
                                1
                            } else {
                                -1
                            }
                        })
                        .sum();
                    let fast = g
                        .signed_path_sum(s, t, PathFlavor::DecLen)
                        .map_err(|e| e.to_string())?;
                    if naive != fast {
                        return Err(format!("case {case}: mismatch at ({s},{t})"));
                    }
                    let inc = g.increasing_paths(s, t).map_err(|e| e.to_string())?;
                    let cnt = g.count_increasing_paths(s, t).map_err(|e| e.to_string())?;
                    if cnt != inc.len() as i64 {
                        return Err(format!("case {case}: count mismatch at ({s},{t})"));
                    }
                }
            }
        }
        // diagram roundtrips, exhaustive to k = 4
        let mut count = 0usize;
        for t in 0..=2u8 {
            for k in 0..=4u32 {
                for d in WeightDiagram::enumerate_block(Family::osp(t, k).unwrap(), 8)
                    .map_err(|e| e.to_string())?
                {
                    let text = d.render();
                    let parsed = WeightDiagram::parse(&text, d.family())
                        .map_err(|e| format!("{text}: {e}"))?;
                    if parsed != d {
                        return Err(format!("text roundtrip fails for {text}"));
                    }
                    let back = WeightDiagram::from_weight(&d.weight())
                        .map_err(|e| format!("{text}: {e}"))?;
                    if back != d {
                        return Err(format!("weight roundtrip fails for {text}"));
                    }
                    count += 1;
                }
            }
        }
        Ok(format!(
            "100 random graphs match the naive counter; {count} diagram roundtrips exact"
        ))
    };
    match run() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    }
}
