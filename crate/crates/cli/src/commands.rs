//! Command implementations. Every command is a pure function from parsed
//! arguments to an output string plus an exit code, so the binary and the
//! tests share one code path.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error (bad flags
//! or inputs the library rejects).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use anyhow::{anyhow, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use dsblock_core::bigraph::BimarkedGraph;
use dsblock_core::charring::{self, CharContext};
use dsblock_core::diagram::WeightDiagram;
use dsblock_core::dsblocks::{self, Algebra, BlockId, BlockShape};
use dsblock_core::gamma::{self, BlockSpec, GoldenName};
use dsblock_core::lattice::{Family, OSP22, OSP32};
use dsblock_core::moves;

use crate::formats::{self, DiagramDto, GraphDto, MoveDto, SeriesDto, WeightDto};
use crate::verify;

#[derive(Parser, Debug)]
#[command(
    name = "dsblock",
    about = "Weight diagrams, block graphs, characters and reduction multiplicities \
             for low-rank orthosymplectic Lie superalgebras",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    /// family parameter t in {0, 1, 2}
    #[arg(long)]
    pub t: u8,
    /// number of crosses k
    #[arg(long)]
    pub k: u32,
}

impl FamilyArgs {
    fn family(&self) -> Result<Family> {
        Family::osp(self.t, self.k).map_err(|e| anyhow!("{e}"))
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Weight-diagram operations
    Diag {
        #[command(subcommand)]
        cmd: DiagCmd,
    },
    /// Diagram moves
    Moves {
        #[command(subcommand)]
        cmd: MovesCmd,
    },
    /// Block graphs
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Characters
    Char {
        #[command(subcommand)]
        cmd: CharCmd,
    },
    /// Reduction-functor multiplicities
    Ds {
        #[command(subcommand)]
        cmd: DsCmd,
    },
    /// Batch verification
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
}

#[derive(Subcommand, Debug)]
pub enum DiagCmd {
    /// Parse diagram text and print its JSON
    Parse {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        diagram: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Render diagram JSON back to canonical text
    Render {
        /// diagram JSON, as printed by `diag parse --format json`
        #[arg(long)]
        json: String,
    },
    /// The dominant weight a diagram encodes
    Weight {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        diagram: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Apply the t = 2 -> t = 1 bijection
    Tau {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        diagram: String,
    },
    /// Number of zero-position crosses, sign-adjusted
    Tail {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        diagram: String,
    },
    /// Coordinate sum (through tau for t = 2)
    Norm {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        diagram: String,
    },
    /// The bipartition value (-1)^norm
    Pari {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        diagram: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum MovesCmd {
    /// All admissible moves out of a diagram
    List {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        diagram: String,
        #[arg(long, default_value_t = 6)]
        bound: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
pub enum GraphCmd {
    /// Build the truncated block graph from the moves
    Build {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, default_value_t = 6)]
        bound: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// write the output here instead of stdout
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Build and swap the marks for the landing coordinates
    Relabel {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, default_value_t = 6)]
        bound: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// The undirected degree-one skeleton
    Gamma1 {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, default_value_t = 6)]
        bound: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// A hard-coded reference graph
    Golden {
        /// gl11, osp22, osp22_tilde, osp32, osp32_tilde, D21a_principal,
        /// G3_principal, F4_principal
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 4)]
        size: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Structural checks on a built graph (exit 1 on any failure)
    Check {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, default_value_t = 6)]
        bound: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum CharFamily {
    Osp22,
    Osp32,
}

impl CharFamily {
    fn family(self) -> Family {
        match self {
            CharFamily::Osp22 => OSP22,
            CharFamily::Osp32 => OSP32,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum CharCmd {
    /// The Euler character of a block index
    Euler {
        #[arg(long, value_enum)]
        family: CharFamily,
        /// block index (any integer for osp22, >= 0 for osp32)
        #[arg(long, allow_negative_numbers = true)]
        index: i64,
        #[arg(long, default_value_t = 20)]
        depth: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// The simple character of a block index
    Simple {
        #[arg(long, value_enum)]
        family: CharFamily,
        #[arg(long, allow_negative_numbers = true)]
        index: i64,
        #[arg(long, default_value_t = 20)]
        depth: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Euler-basis coefficients of a simple character
    Coeffs {
        #[arg(long, value_enum)]
        family: CharFamily,
        #[arg(long, allow_negative_numbers = true)]
        index: i64,
    },
    /// Signed coefficient sum of the simple character
    Sdim {
        #[arg(long, value_enum)]
        family: CharFamily,
        #[arg(long, allow_negative_numbers = true)]
        index: i64,
        /// window depth; picked automatically when omitted
        #[arg(long)]
        depth: Option<u32>,
    },
}

#[derive(Subcommand, Debug)]
pub enum DsCmd {
    /// Look up a golden-table entry
    Block {
        /// D21a, G3, F4, gl11, osp22, osp32
        #[arg(long)]
        algebra: String,
        /// "principal", a single index "k", or a pair "m1,m2"
        #[arg(long)]
        block: String,
        #[arg(long, allow_negative_numbers = true)]
        index: i64,
    },
    /// The closed-form multiplicity record of a shape index
    Shape {
        /// ainf, ainfinf, dinf
        #[arg(long)]
        shape: String,
        #[arg(long, allow_negative_numbers = true)]
        index: i64,
    },
    /// Check the closed forms against the local relations (exit 1 on failure)
    Verify {
        /// restrict to one shape
        #[arg(long)]
        shape: Option<String>,
        #[arg(long, default_value_t = 50)]
        len: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Run every acceptance criterion and report pass/fail lines
    All {
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// include wall-clock timings (output is no longer reproducible)
        #[arg(long)]
        timings: bool,
    },
}

pub struct Output {
    pub text: String,
    pub code: i32,
}

fn ok(text: String) -> Result<Output> {
    Ok(Output { text, code: 0 })
}

/// Parse argv and execute; clap usage errors surface as code 2.
pub fn run_args<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            return Output {
                text: e.render().to_string(),
                code: if e.use_stderr() { 2 } else { 0 },
            };
        }
    };
    match execute(cli) {
        Ok(out) => out,
        Err(e) => Output {
            text: format!("error: {e}\n"),
            code: 2,
        },
    }
}

pub fn execute(cli: Cli) -> Result<Output> {
    match cli.command {
        Command::Diag { cmd } => run_diag(cmd),
        Command::Moves { cmd } => run_moves(cmd),
        Command::Graph { cmd } => run_graph(cmd),
        Command::Char { cmd } => run_char(cmd),
        Command::Ds { cmd } => run_ds(cmd),
        Command::Verify { cmd } => run_verify(cmd),
    }
}

fn parse_diagram(fam: &FamilyArgs, text: &str) -> Result<WeightDiagram> {
    WeightDiagram::parse(text, fam.family()?).map_err(|e| anyhow!("{e}"))
}

fn run_diag(cmd: DiagCmd) -> Result<Output> {
    match cmd {
        DiagCmd::Parse {
            fam,
            diagram,
            format,
        } => {
            let d = parse_diagram(&fam, &diagram)?;
            let dto = DiagramDto::from_diagram(&d);
            match format {
                Format::Json => ok(formats::to_json(&dto)? + "\n"),
                _ => ok(format!(
                    "diagram {}  t={} k={} crosses={:?} sign={:?} tail={} norm={} pari={}\n",
                    d.render(),
                    d.t(),
                    d.k(),
                    d.crosses(),
                    d.sign().map(|s| s.to_string()),
                    d.tail(),
                    d.norm(),
                    d.pari().value()
                )),
            }
        }
        DiagCmd::Render { json } => {
            let dto: DiagramDto = serde_json::from_str(&json)?;
            ok(dto.to_diagram()?.render() + "\n")
        }
        DiagCmd::Weight {
            fam,
            diagram,
            format,
        } => {
            let d = parse_diagram(&fam, &diagram)?;
            let w = d.weight();
            let dto = WeightDto::from_weight(&w)?;
            match format {
                Format::Json => ok(formats::to_json(&dto)? + "\n"),
                _ => ok(format!(
                    "weight of {}: eps={:?} delta={:?}\n",
                    d.render(),
                    dto.eps,
                    dto.delta
                )),
            }
        }
        DiagCmd::Tau { fam, diagram } => {
            let d = parse_diagram(&fam, &diagram)?;
            ok(d.tau().map_err(|e| anyhow!("{e}"))?.render() + "\n")
        }
        DiagCmd::Tail { fam, diagram } => {
            ok(format!("{}\n", parse_diagram(&fam, &diagram)?.tail()))
        }
        DiagCmd::Norm { fam, diagram } => {
            ok(format!("{}\n", parse_diagram(&fam, &diagram)?.norm()))
        }
        DiagCmd::Pari { fam, diagram } => ok(format!(
            "{}\n",
            parse_diagram(&fam, &diagram)?.pari().value()
        )),
    }
}

fn run_moves(cmd: MovesCmd) -> Result<Output> {
    match cmd {
        MovesCmd::List {
            fam,
            diagram,
            bound,
            format,
        } => {
            let d = parse_diagram(&fam, &diagram)?;
            let list = moves::enumerate_moves(&d, bound).map_err(|e| anyhow!("{e}"))?;
            match format {
                Format::Json => {
                    let dtos: Vec<MoveDto> = list.iter().map(MoveDto::from_move).collect();
                    ok(formats::to_json(&dtos)? + "\n")
                }
                _ => {
                    let mut s = String::new();
                    for m in &list {
                        let _ = writeln!(
                            s,
                            "{} -> {}  kind={} a={} b={} p={} d={}",
                            m.source.render(),
                            m.target.render(),
                            m.kind,
                            m.a,
                            m.b,
                            m.landing_index,
                            m.degree
                        );
                    }
                    let _ = writeln!(s, "{} moves", list.len());
                    ok(s)
                }
            }
        }
    }
}

/// Relative --out paths land under $DSBLOCK_OUT_DIR when that is set; the
/// variable is the only environment input the tool reads.
fn resolve_out(path: std::path::PathBuf) -> std::path::PathBuf {
    if path.is_relative() {
        if let Some(dir) = std::env::var_os("DSBLOCK_OUT_DIR") {
            return std::path::PathBuf::from(dir).join(path);
        }
    }
    path
}

fn write_out(text: String, out: Option<std::path::PathBuf>) -> Result<Output> {
    match out {
        Some(path) => {
            let path = resolve_out(path);
            std::fs::write(&path, &text)?;
            ok(format!("wrote {}\n", path.display()))
        }
        None => ok(text),
    }
}

fn emit_graph(
    g: &BimarkedGraph,
    name: &str,
    format: Format,
    out: Option<std::path::PathBuf>,
) -> Result<Output> {
    let text = match format {
        Format::Json => formats::to_json(&GraphDto::from_graph(g))? + "\n",
        Format::Dot => formats::graph_to_dot(g, name),
        Format::Table => formats::graph_to_table(g),
    };
    write_out(text, out)
}

fn run_graph(cmd: GraphCmd) -> Result<Output> {
    match cmd {
        GraphCmd::Build {
            fam,
            bound,
            format,
            out,
        } => {
            let spec = BlockSpec::new(fam.family()?, bound).map_err(|e| anyhow!("{e}"))?;
            let g = gamma::build_gamma(&spec).map_err(|e| anyhow!("{e}"))?;
            emit_graph(&g, "block", format, out)
        }
        GraphCmd::Relabel {
            fam,
            bound,
            format,
            out,
        } => {
            let spec = BlockSpec::new(fam.family()?, bound).map_err(|e| anyhow!("{e}"))?;
            let g = gamma::build_gamma(&spec).map_err(|e| anyhow!("{e}"))?;
            let g = gamma::relabel_bprime(&g).map_err(|e| anyhow!("{e}"))?;
            emit_graph(&g, "block_relabel", format, out)
        }
        GraphCmd::Gamma1 {
            fam,
            bound,
            format,
            out,
        } => {
            let spec = BlockSpec::new(fam.family()?, bound).map_err(|e| anyhow!("{e}"))?;
            let g = gamma::build_gamma(&spec).map_err(|e| anyhow!("{e}"))?;
            let skel = gamma::gamma1(&g);
            let text = match format {
                Format::Dot => formats::undirected_to_dot(&skel, "gamma1"),
                _ => {
                    let mut s = String::new();
                    for (a, b) in &skel.edges {
                        let _ = writeln!(s, "{} -- {}", skel.vertices[*a].id, skel.vertices[*b].id);
                    }
                    s
                }
            };
            write_out(text, out)
        }
        GraphCmd::Golden {
            name,
            size,
            format,
            out,
        } => {
            let golden = GoldenName::parse(&name).map_err(|e| anyhow!("{e}"))?;
            let g = gamma::golden_graph(golden, size).map_err(|e| anyhow!("{e}"))?;
            emit_graph(&g, golden.name(), format, out)
        }
        GraphCmd::Check { fam, bound } => {
            let spec = BlockSpec::new(fam.family()?, bound).map_err(|e| anyhow!("{e}"))?;
            let g = gamma::build_gamma(&spec).map_err(|e| anyhow!("{e}"))?;
            let relabeled = gamma::relabel_bprime(&g).map_err(|e| anyhow!("{e}"))?;
            let norm_graded = g
                .edges()
                .iter()
                .all(|e| g.vertex(e.src).norm <= g.vertex(e.dst).norm);
            let checks: Vec<(&str, bool)> = vec![
                ("z2_grading", g.check_z2_grading()),
                ("n_grading", norm_graded),
                ("tail", g.check_tail_condition()),
                ("bb_on_relabel", relabeled.check_bb()),
                (
                    "decreasing_equivalence",
                    g.check_decreasing_equivalence(&relabeled)
                        .map_err(|e| anyhow!("{e}"))?,
                ),
                (
                    "matrix_identity",
                    relabeled
                        .matrix_identity_check(&relabeled.full_truncation())
                        .map_err(|e| anyhow!("{e}"))?,
                ),
            ];
            let mut s = String::new();
            let mut all = true;
            for (name, pass) in &checks {
                all &= pass;
                let _ = writeln!(s, "{name}: {}", if *pass { "PASS" } else { "FAIL" });
            }
            Ok(Output {
                text: s,
                code: i32::from(!all),
            })
        }
    }
}

fn run_char(cmd: CharCmd) -> Result<Output> {
    match cmd {
        CharCmd::Euler {
            family,
            index,
            depth,
            format,
        } => {
            let ctx = CharContext::new(family.family()).map_err(|e| anyhow!("{e}"))?;
            let d = ctx.lambda_diagram(index).map_err(|e| anyhow!("{e}"))?;
            let e = charring::euler_character(&ctx, &d, depth).map_err(|e| anyhow!("{e}"))?;
            series_output(&ctx, &e.value, depth, format, &format!("E[{}]", d.render()))
        }
        CharCmd::Simple {
            family,
            index,
            depth,
            format,
        } => {
            let ctx = CharContext::new(family.family()).map_err(|e| anyhow!("{e}"))?;
            let ch = charring::simple_character(&ctx, index, depth).map_err(|e| anyhow!("{e}"))?;
            let d = ctx.lambda_diagram(index).map_err(|e| anyhow!("{e}"))?;
            series_output(&ctx, &ch, depth, format, &format!("ch L[{}]", d.render()))
        }
        CharCmd::Coeffs { family, index } => {
            let ctx = CharContext::new(family.family()).map_err(|e| anyhow!("{e}"))?;
            let lam = ctx.lambda_diagram(index).map_err(|e| anyhow!("{e}"))?;
            let spec = BlockSpec::new(family.family(), lam.max_coord().max(lam.k()))
                .map_err(|e| anyhow!("{e}"))?;
            let coeffs = gamma::coefficients_dless(&spec, &lam).map_err(|e| anyhow!("{e}"))?;
            let map: BTreeMap<String, i64> = coeffs.into_iter().collect();
            ok(formats::to_json(&map)? + "\n")
        }
        CharCmd::Sdim {
            family,
            index,
            depth,
        } => {
            let ctx = CharContext::new(family.family()).map_err(|e| anyhow!("{e}"))?;
            let depth = depth.unwrap_or(16 + 10 * index.unsigned_abs() as u32);
            let ch = charring::simple_character(&ctx, index, depth).map_err(|e| anyhow!("{e}"))?;
            let v = charring::sdim(&ctx, &ch).map_err(|e| anyhow!("{e}"))?;
            ok(format!("{v}\n"))
        }
    }
}

fn series_output(
    ctx: &CharContext,
    s: &dsblock_core::series::Series,
    depth: u32,
    format: Format,
    label: &str,
) -> Result<Output> {
    let dto = SeriesDto::from_series(ctx, s, depth)?;
    match format {
        Format::Json => ok(formats::to_json(&dto)? + "\n"),
        _ => {
            let mut out = String::new();
            let _ = writeln!(out, "{label}  ({} terms, depth {depth})", dto.terms.len());
            for t in &dto.terms {
                let _ = writeln!(
                    out,
                    "  {:>4}  e^(eps {:?}, delta {:?})",
                    t.coeff, t.weight.eps, t.weight.delta
                );
            }
            ok(out)
        }
    }
}

fn parse_block_id(s: &str) -> Result<BlockId> {
    if s == "principal" {
        return Ok(BlockId::Principal);
    }
    if let Some((a, b)) = s.split_once(',') {
        return Ok(BlockId::Pair(a.trim().parse()?, b.trim().parse()?));
    }
    Ok(BlockId::Single(s.trim().parse()?))
}

fn run_ds(cmd: DsCmd) -> Result<Output> {
    match cmd {
        DsCmd::Block {
            algebra,
            block,
            index,
        } => {
            let alg =
                Algebra::parse(&algebra).ok_or_else(|| anyhow!("unknown algebra '{algebra}'"))?;
            let id = parse_block_id(&block)?;
            let d = dsblocks::golden_ds(alg, id, index).map_err(|e| anyhow!("{e}"))?;
            ok(format!(
                "{d}\n(reduced algebra {}, ground {}, copies {}, parity shift {}, shape {})\n",
                d.reduced_algebra, d.ground, d.copies, d.pi_power, d.shape
            ))
        }
        DsCmd::Shape { shape, index } => {
            let sh = BlockShape::parse(&shape).ok_or_else(|| anyhow!("unknown shape '{shape}'"))?;
            let rec = dsblocks::ds_multiplicity(sh, index).map_err(|e| anyhow!("{e}"))?;
            ok(format!(
                "copies={} pi_power={} pari={}\n",
                rec.copies,
                rec.pi_power,
                rec.pari().value()
            ))
        }
        DsCmd::Verify { shape, len } => {
            let shapes: Vec<BlockShape> = match shape {
                Some(s) => {
                    vec![BlockShape::parse(&s).ok_or_else(|| anyhow!("unknown shape '{s}'"))?]
                }
                None => vec![BlockShape::AInf, BlockShape::AInfInf, BlockShape::DInf],
            };
            let mut out = String::new();
            let mut all = true;
            for sh in shapes {
                let (lo, hi) = match sh {
                    BlockShape::AInfInf => (-len / 2, len / 2),
                    _ => (0, len),
                };
                match dsblocks::verify_closed_form(sh, lo, hi).map_err(|e| anyhow!("{e}"))? {
                    None => {
                        let _ = writeln!(out, "{sh}: PASS on [{lo}, {hi}]");
                    }
                    Some(v) => {
                        all = false;
                        let _ = writeln!(
                            out,
                            "{sh}: FAIL at index {} ({}) on [{lo}, {hi}]",
                            v.index, v.relation
                        );
                    }
                }
            }
            Ok(Output {
                text: out,
                code: i32::from(!all),
            })
        }
    }
}

fn run_verify(cmd: VerifyCmd) -> Result<Output> {
    match cmd {
        VerifyCmd::All { format, timings } => {
            let outcomes = verify::run_all();
            let all = outcomes.iter().all(|o| o.pass);
            let text = match format {
                Format::Json => {
                    #[derive(serde::Serialize)]
                    struct Line<'a> {
                        id: usize,
                        name: &'a str,
                        pass: bool,
                        #[serde(skip_serializing_if = "Option::is_none")]
                        millis: Option<u128>,
                        detail: &'a str,
                    }
                    let lines: Vec<Line> = outcomes
                        .iter()
                        .map(|o| Line {
                            id: o.id,
                            name: o.name,
                            pass: o.pass,
                            millis: timings.then_some(o.millis),
                            detail: &o.detail,
                        })
                        .collect();
                    formats::to_json(&lines)? + "\n"
                }
                _ => verify::report(&outcomes, timings),
            };
            Ok(Output {
                text,
                code: i32::from(!all),
            })
        }
    }
}
