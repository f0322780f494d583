//! Legal diagram moves and their degrees.
//!
//! A move relocates one cross rightwards to an empty position, or two
//! crosses from the zero position to a pair of empty positions. Writing
//! `l_f(a, b)` for the number of crosses minus the number of empty positions
//! strictly between a and b, and `drop` for the tail decrease, the degree of
//! a move is
//!
//! * `l_f(a, b)` when `drop != 1` (for a double move a, b are the two
//!   landing positions);
//! * `l_f(a, b)` or `2 tail(g) + l_f(a, b)` when t = 0 and `drop = 1`
//!   (two distinct degrees exactly when `tail(g) > 0`);
//! * `2 tail(g) + l_f(a, b) + 1` when t = 2 and `drop = 1`.
//!
//! Moves on t = 1 diagrams are transported through the bijection `tau`:
//! they are the tau-images of the moves on the corresponding t = 2 diagrams
//! and keep their degrees. For a t = 1 move the stored coordinates `a`, `b`
//! refer to the t = 2 representative (this keeps `b > a` even for the moves
//! that only flip the sign of the diagram).
//!
//! Which candidate moves are *admissible* is a policy point: the default
//! [`NonnegativeDegree`] policy accepts every move whose degree comes out
//! nonnegative. The golden rank-one block graphs and the graph-level
//! invariants downstream pin this choice; swap in another [`MovePolicy`] to
//! experiment.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::{DiagramError, Sign, WeightDiagram};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum MoveKind {
    /// one cross from position a to an empty position b > a
    Single,
    /// two crosses from position 0 to empty positions a < b
    Double,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveKind::Single => write!(f, "single"),
            MoveKind::Double => write!(f, "double"),
        }
    }
}

/// A legal move between two diagrams of the same family.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Move {
    pub source: WeightDiagram,
    pub target: WeightDiagram,
    pub kind: MoveKind,
    /// source position (Single) or smaller landing position (Double);
    /// t = 2 representative coordinates for t = 1 families
    pub a: u32,
    /// landing position the move ends at
    pub b: u32,
    /// 1-based index of the cross at `b` in the target, counted from
    /// coordinate 0 upwards
    pub landing_index: u32,
    pub degree: i64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MoveError {
    Diagram(DiagramError),
    BadInterval { a: i64, b: i64 },
    FamilyMismatch,
    Unreachable(String),
}

impl fmt::Display for MoveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveError::Diagram(e) => write!(f, "{e}"),
            MoveError::BadInterval { a, b } => write!(f, "need a < b, got a = {a}, b = {b}"),
            MoveError::FamilyMismatch => write!(f, "diagrams from different families"),
            MoveError::Unreachable(s) => write!(f, "no move between the diagrams: {s}"),
        }
    }
}

impl From<DiagramError> for MoveError {
    fn from(e: DiagramError) -> Self {
        MoveError::Diagram(e)
    }
}

/// Everything a policy may look at when admitting a candidate move. The
/// source diagram is always the t = 0 or t = 2 representative.
pub struct MoveCandidate<'a> {
    pub source: &'a WeightDiagram,
    pub kind: MoveKind,
    pub a: u32,
    pub b: u32,
    pub l_value: i64,
    pub tail_drop: u32,
    pub degree: i64,
}

/// Admissibility rule for candidate moves.
pub trait MovePolicy {
    fn admits(&self, candidate: &MoveCandidate<'_>) -> bool;
}

/// Default rule: a candidate is admissible iff its degree is nonnegative.
pub struct NonnegativeDegree;

impl MovePolicy for NonnegativeDegree {
    fn admits(&self, candidate: &MoveCandidate<'_>) -> bool {
        candidate.degree >= 0
    }
}

/// Crosses minus empty positions strictly between a and b. The number line
/// starts at 0, so positions below it contribute nothing; the zero position
/// contributes its cross multiplicity (and counts as one empty position
/// when it has no crosses and no `>`), which matters only when a < 0.
pub fn l_between(f: &WeightDiagram, a: i64, b: i64) -> Result<i64, MoveError> {
    if a >= b {
        return Err(MoveError::BadInterval { a, b });
    }
    let mut acc: i64 = 0;
    for pos in (a + 1).max(0)..b {
        if pos == 0 {
            let z = i64::from(f.zero_count());
            if z > 0 {
                acc += z;
            } else if f.t() != 2 {
                acc -= 1;
            }
        } else if f.has_cross_at(pos as u32) {
            acc += 1;
        } else {
            acc -= 1;
        }
    }
    Ok(acc)
}

/// All admissible moves out of `f` with landing coordinate at most
/// `coord_bound` (for t = 1, measured on the t = 1 diagram itself), under
/// the default policy.
pub fn enumerate_moves(f: &WeightDiagram, coord_bound: u32) -> Result<Vec<Move>, MoveError> {
    enumerate_moves_with(f, coord_bound, &NonnegativeDegree)
}

pub fn enumerate_moves_with(
    f: &WeightDiagram,
    coord_bound: u32,
    policy: &dyn MovePolicy,
) -> Result<Vec<Move>, MoveError> {
    let mut out = match f.t() {
        1 => {
            let f2 = f.tau_inv()?;
            let raw = enumerate_native(&f2, coord_bound + 1, policy)?;
            let mut out = Vec::with_capacity(raw.len());
            for mv in raw {
                out.push(Move {
                    source: f.clone(),
                    target: mv.target.tau()?,
                    kind: mv.kind,
                    a: mv.a,
                    b: mv.b,
                    landing_index: mv.landing_index,
                    degree: mv.degree,
                });
            }
            out
        }
        _ => enumerate_native(f, coord_bound, policy)?,
    };
    out.sort_by(|x, y| {
        (x.b, x.a, x.degree, x.target.render()).cmp(&(y.b, y.a, y.degree, y.target.render()))
    });
    Ok(out)
}

/// Moves on a t = 0 or t = 2 diagram.
fn enumerate_native(
    f: &WeightDiagram,
    coord_bound: u32,
    policy: &dyn MovePolicy,
) -> Result<Vec<Move>, MoveError> {
    debug_assert!(f.t() != 1);
    let t = f.t();
    let zeros = f.zero_count();
    let mut out = Vec::new();

    let mut singles: Vec<u32> = f.crosses().to_vec();
    singles.dedup();

    for &a in &singles {
        for b in (a + 1)..=coord_bound {
            if f.has_cross_at(b) {
                continue;
            }
            let l = l_between(f, i64::from(a), i64::from(b))?;
            let drop = u32::from(a == 0);
            let tail_g = zeros - drop;
            let degrees: Vec<i64> = if drop == 0 {
                alloc::vec![l]
            } else if t == 0 {
                let mut d = alloc::vec![l, 2 * i64::from(tail_g) + l];
                d.dedup();
                d
            } else {
                alloc::vec![2 * i64::from(tail_g) + l + 1]
            };
            let new_signs = target_signs(t, f.sign(), zeros - drop);
            for degree in degrees {
                let candidate = MoveCandidate {
                    source: f,
                    kind: MoveKind::Single,
                    a,
                    b,
                    l_value: l,
                    tail_drop: drop,
                    degree,
                };
                if !policy.admits(&candidate) {
                    continue;
                }
                for &sign in &new_signs {
                    let target = rebuild(f, &[a], &[b], sign)?;
                    let landing_index = cross_index(&target, b);
                    out.push(Move {
                        source: f.clone(),
                        target,
                        kind: MoveKind::Single,
                        a,
                        b,
                        landing_index,
                        degree,
                    });
                }
            }
        }
    }

    if zeros >= 2 {
        for a in 1..=coord_bound {
            if f.has_cross_at(a) {
                continue;
            }
            for b in (a + 1)..=coord_bound {
                if f.has_cross_at(b) {
                    continue;
                }
                let l = l_between(f, i64::from(a), i64::from(b))?;
                let degree = l;
                let candidate = MoveCandidate {
                    source: f,
                    kind: MoveKind::Double,
                    a,
                    b,
                    l_value: l,
                    tail_drop: 2,
                    degree,
                };
                if !policy.admits(&candidate) {
                    continue;
                }
                for &sign in &target_signs(t, f.sign(), zeros - 2) {
                    let target = rebuild(f, &[0, 0], &[a, b], sign)?;
                    let landing_index = cross_index(&target, b);
                    out.push(Move {
                        source: f.clone(),
                        target,
                        kind: MoveKind::Double,
                        a,
                        b,
                        landing_index,
                        degree,
                    });
                }
            }
        }
    }

    Ok(out)
}

/// Signs available to the target of a t = 0/2 move, given the source sign
/// and the target's count of zero crosses. A signed source keeps its sign;
/// an unsigned t = 0 source whose zero position empties out acquires one,
/// either way.
fn target_signs(t: u8, source_sign: Option<Sign>, target_zeros: u32) -> Vec<Option<Sign>> {
    if t == 2 {
        return alloc::vec![None];
    }
    match source_sign {
        Some(s) => alloc::vec![Some(s)],
        None if target_zeros == 0 => alloc::vec![Some(Sign::Plus), Some(Sign::Minus)],
        None => alloc::vec![None],
    }
}

fn rebuild(
    f: &WeightDiagram,
    remove: &[u32],
    add: &[u32],
    sign: Option<Sign>,
) -> Result<WeightDiagram, MoveError> {
    let mut crosses = f.crosses().to_vec();
    for r in remove {
        let ix = crosses
            .iter()
            .position(|c| c == r)
            .expect("removed cross present");
        crosses.remove(ix);
    }
    crosses.extend_from_slice(add);
    Ok(WeightDiagram::new(f.family(), crosses, sign)?)
}

/// 1-based index of the cross at `coord`, counted from coordinate 0 upwards
/// with zero-position multiplicity.
fn cross_index(g: &WeightDiagram, coord: u32) -> u32 {
    g.crosses().iter().filter(|&&c| c <= coord).count() as u32
}

/// The set of degrees of admissible moves turning `f` into `g` by the given
/// kind, sorted ascending. Errors when no such move exists.
pub fn move_degrees(
    f: &WeightDiagram,
    g: &WeightDiagram,
    kind: MoveKind,
) -> Result<Vec<i64>, MoveError> {
    if f.family() != g.family() {
        return Err(MoveError::FamilyMismatch);
    }
    let bound = g.max_coord().max(1);
    let mut degrees: Vec<i64> = enumerate_moves(f, bound)?
        .into_iter()
        .filter(|m| m.kind == kind && &m.target == g)
        .map(|m| m.degree)
        .collect();
    degrees.sort_unstable();
    degrees.dedup();
    if degrees.is_empty() {
        return Err(MoveError::Unreachable(alloc::format!(
            "{} -> {} ({kind})",
            f.render(),
            g.render()
        )));
    }
    Ok(degrees)
}

/// True when some admissible move turns `f` into `g`.
pub fn reachable(f: &WeightDiagram, g: &WeightDiagram) -> bool {
    [MoveKind::Single, MoveKind::Double]
        .into_iter()
        .any(|k| move_degrees(f, g, k).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::WeightDiagram;
    use crate::lattice::{Family, RootDatum};

    fn fam(t: u8, k: u32) -> Family {
        Family::osp(t, k).unwrap()
    }

    fn diag(text: &str, t: u8, k: u32) -> WeightDiagram {
        WeightDiagram::parse(text, fam(t, k)).unwrap()
    }

    #[test]
    fn l_between_examples() {
        let f = diag(">;x;x;x;o;o", 2, 3);
        assert_eq!(l_between(&f, 1, 5).unwrap(), 1);
        // adjacent interval is empty
        assert_eq!(l_between(&f, 3, 4).unwrap(), 0);
        let f = diag("x2;o;o", 0, 2);
        assert_eq!(l_between(&f, 0, 2).unwrap(), -1);
        assert!(l_between(&f, 2, 2).is_err());
        // with a < 0 the interval reaches position 0, which counts its
        // cross multiplicity; negative positions contribute nothing
        assert_eq!(l_between(&f, -1, 2).unwrap(), 1); // x2 at 0, o at 1
        assert_eq!(l_between(&f, -5, 1).unwrap(), 2);
        let g = diag(">x2;o", 2, 2);
        assert_eq!(l_between(&g, -1, 1).unwrap(), 2);
        assert_eq!(l_between(&diag(">;o", 2, 0), -1, 1).unwrap(), 0); // bare '>'
    }

    #[test]
    fn degree_table_golden_rows() {
        // ×∘ -> ∘× at positive positions: degree 0
        let f = diag(">;x;o", 2, 1);
        let g = diag(">;o;x", 2, 1);
        assert_eq!(move_degrees(&f, &g, MoveKind::Single).unwrap(), [0]);
        // a longer shift across ××∘: degree 1
        let f = diag(">;x;x;x;o;o", 2, 3);
        let g = diag(">;o;x;x;o;x", 2, 3);
        assert_eq!(move_degrees(&f, &g, MoveKind::Single).unwrap(), [1]);
        // ×∘ -> (±)∘×: degree 0 for both signs
        let f = diag("x", 0, 1);
        for s in ["+o;x", "-o;x"] {
            let g = diag(s, 0, 1);
            assert_eq!(move_degrees(&f, &g, MoveKind::Single).unwrap(), [0]);
        }
        // ×²∘ -> ××: degrees 0 and 2
        let f = diag("x2", 0, 2);
        let g = diag("x;x", 0, 2);
        assert_eq!(move_degrees(&f, &g, MoveKind::Single).unwrap(), [0, 2]);
    }

    #[test]
    fn unreachable_pairs_error() {
        let f = diag("x", 0, 1);
        let g = diag("+o;o;x", 0, 1); // two steps right, l = -1 kills it
        assert!(move_degrees(&f, &g, MoveKind::Single).is_err());
        assert!(move_degrees(&f, &g, MoveKind::Double).is_err());
        assert!(!reachable(&f, &g));
    }

    #[test]
    fn enumerate_t0_rank_one() {
        let f = diag("x", 0, 1);
        let moves = enumerate_moves(&f, 1).unwrap();
        let targets: Vec<String> = moves.iter().map(|m| m.target.render()).collect();
        assert_eq!(targets, ["+o;x", "-o;x"]);
        assert!(moves.iter().all(|m| m.degree == 0 && m.landing_index == 1));
    }

    #[test]
    fn enumerate_t2_rank_one() {
        let f = diag(">x", 2, 1);
        let moves = enumerate_moves(&f, 2).unwrap();
        let summary: Vec<(String, i64)> = moves
            .iter()
            .map(|m| (m.target.render(), m.degree))
            .collect();
        assert_eq!(
            summary,
            [(String::from(">;x"), 1), (String::from(">;o;x"), 0)]
        );
    }

    #[test]
    fn enumerate_respects_bound() {
        // cross at the bound, nothing to the right
        let f = diag("+o;x", 0, 1);
        assert!(enumerate_moves(&f, 1).unwrap().is_empty());
    }

    #[test]
    fn t1_moves_are_tau_transports() {
        // the osp(3|2) ground diagram: a sign flip of degree 1 and a step of
        // degree 0
        let f = diag("-x", 1, 1);
        let moves = enumerate_moves(&f, 1).unwrap();
        let summary: Vec<(String, i64, u32, u32)> = moves
            .iter()
            .map(|m| (m.target.render(), m.degree, m.a, m.b))
            .collect();
        assert_eq!(
            summary,
            [
                (String::from("+x"), 1, 0, 1),
                (String::from("o;x"), 0, 0, 2)
            ]
        );
        let g = diag("+x", 1, 1);
        let moves = enumerate_moves(&g, 1).unwrap();
        let summary: Vec<(String, i64)> = moves
            .iter()
            .map(|m| (m.target.render(), m.degree))
            .collect();
        assert_eq!(summary, [(String::from("o;x"), 0)]);
    }

    #[test]
    fn double_move_lands_two_crosses() {
        let f = diag("x2", 0, 2);
        let moves = enumerate_moves(&f, 2).unwrap();
        let doubles: Vec<_> = moves
            .iter()
            .filter(|m| m.kind == MoveKind::Double)
            .collect();
        // landing pair (1,2) with both signs; degree l_f(1,2) = 0
        assert_eq!(doubles.len(), 2);
        for m in &doubles {
            assert_eq!((m.a, m.b), (1, 2));
            assert_eq!(m.degree, 0);
            assert_eq!(m.target.render().trim_start_matches(['+', '-']), "o;x;x");
            assert_eq!(m.landing_index, 2);
        }
    }

    /// Exhaustive structural invariants over small truncations: degree
    /// parity, monotone cross vectors, strict dominance growth, sign
    /// preservation.
    #[test]
    fn invariants_small_truncations() {
        for t in 0..=2u8 {
            for k in 1..=3u32 {
                let family = fam(t, k);
                let rd = RootDatum::new(family);
                let bound = 6;
                for f in WeightDiagram::enumerate_block(family, bound).unwrap() {
                    for m in enumerate_moves(&f, bound).unwrap() {
                        let g = &m.target;
                        let parity = (g.norm() as i64 - f.norm() as i64 + m.degree).rem_euclid(2);
                        assert_eq!(parity, 1, "{} -> {} d={}", f.render(), g.render(), m.degree);
                        assert!(m.degree >= 0);
                        for (cf, cg) in f.crosses().iter().zip(g.crosses().iter()) {
                            assert!(cf <= cg, "{} -> {}", f.render(), g.render());
                        }
                        assert!(g.norm() >= f.norm());
                        let (wf, wg) = (f.weight(), g.weight());
                        assert!(
                            rd.dominance_leq(&wf, &wg) && wf != wg,
                            "dominance should strictly grow: {} -> {}",
                            f.render(),
                            g.render()
                        );
                        // sign preservation is a t = 0/2 statement; t = 1
                        // signs live on the tau side
                        if t != 1 {
                            if let Some(s) = f.sign() {
                                assert_eq!(g.sign(), Some(s), "{} -> {}", f.render(), g.render());
                            }
                        }
                        assert!(m.landing_index >= 1 && m.landing_index <= k);
                    }
                }
            }
        }
    }

    /// For t = 1 the moves are tau-transports by construction; check the
    /// transported data is coherent with the t = 2 originals.
    #[test]
    fn t1_transport_matches_t2() {
        let k = 2;
        let bound = 4;
        for f1 in WeightDiagram::enumerate_block(fam(1, k), bound).unwrap() {
            let f2 = f1.tau_inv().unwrap();
            let t1_moves = enumerate_moves(&f1, bound).unwrap();
            let t2_moves = enumerate_moves(&f2, bound + 1).unwrap();
            assert_eq!(t1_moves.len(), t2_moves.len(), "{}", f1.render());
            for (m1, m2) in t1_moves.iter().zip(t2_moves.iter()) {
                assert_eq!(m1.degree, m2.degree);
                assert_eq!(m1.target, m2.target.tau().unwrap());
                assert_eq!(m1.landing_index, m2.landing_index);
                assert_eq!((m1.a, m1.b), (m2.a, m2.b));
            }
        }
    }
}
