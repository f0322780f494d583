//! Weight diagrams: the number-line encoding of principal-block dominant
//! weights.
//!
//! A diagram for osp(2k+t|2k) consists of k crosses at nonnegative integer
//! coordinates (repeats allowed only at 0), an optional sign, and for t = 2
//! a `>` symbol fixed at the zero position. The sign rules are
//!
//! * t = 0: signed exactly when no cross sits at 0;
//! * t = 1: signed exactly when some cross sits at 0;
//! * t = 2: never signed.
//!
//! Text form (canonical): `sign? token (';' token)*`, tokens mapping to
//! coordinates 0, 1, 2, ... where a token is `o` (empty), `xN` (N crosses,
//! N omitted when 1, N > 1 only at coordinate 0), or for t = 2 at
//! coordinate 0 `>` optionally followed by `xN`. Trailing `o` tokens are
//! dropped when rendering.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::lattice::{Family, Pari, Weight};
use crate::rat::{self, Rat};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn xi(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DiagramError {
    NotOsp,
    WrongCrossCount { expected: u32, got: u32 },
    RepeatedCross(u32),
    SignRule(&'static str),
    Parse(String),
    NotDominant(String),
    TauNeedsT2,
    TauInvNeedsT1,
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramError::NotOsp => write!(f, "weight diagrams exist for osp families only"),
            DiagramError::WrongCrossCount { expected, got } => {
                write!(f, "expected {expected} crosses, got {got}")
            }
            DiagramError::RepeatedCross(c) => {
                write!(f, "repeated cross at nonzero coordinate {c}")
            }
            DiagramError::SignRule(s) => write!(f, "sign rule violated: {s}"),
            DiagramError::Parse(s) => write!(f, "parse error: {s}"),
            DiagramError::NotDominant(s) => write!(f, "not a principal-block weight: {s}"),
            DiagramError::TauNeedsT2 => write!(f, "tau is defined on t = 2 diagrams"),
            DiagramError::TauInvNeedsT1 => write!(f, "tau^-1 is defined on t = 1 diagrams"),
        }
    }
}

/// A weight diagram for an osp family.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct WeightDiagram {
    family: Family,
    /// sorted ascending, k entries, repeats only at 0
    crosses: Vec<u32>,
    sign: Option<Sign>,
}

impl WeightDiagram {
    pub fn new(
        family: Family,
        mut crosses: Vec<u32>,
        sign: Option<Sign>,
    ) -> Result<WeightDiagram, DiagramError> {
        let (t, k) = match family {
            Family::Osp { t, k } => (t, k),
            Family::Gl11 => return Err(DiagramError::NotOsp),
        };
        if crosses.len() != k as usize {
            return Err(DiagramError::WrongCrossCount {
                expected: k,
                got: crosses.len() as u32,
            });
        }
        crosses.sort_unstable();
        for w in crosses.windows(2) {
            if w[0] == w[1] && w[0] != 0 {
                return Err(DiagramError::RepeatedCross(w[0]));
            }
        }
        let zeros = crosses.iter().filter(|&&c| c == 0).count();
        match t {
            0 => {
                if (k > 0 && zeros == 0) != sign.is_some() {
                    return Err(DiagramError::SignRule(
                        "t = 0 diagrams are signed exactly when no cross sits at 0",
                    ));
                }
            }
            1 => {
                if (zeros > 0) != sign.is_some() {
                    return Err(DiagramError::SignRule(
                        "t = 1 diagrams are signed exactly when some cross sits at 0",
                    ));
                }
            }
            _ => {
                if sign.is_some() {
                    return Err(DiagramError::SignRule("t = 2 diagrams carry no sign"));
                }
            }
        }
        Ok(WeightDiagram {
            family,
            crosses,
            sign,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn t(&self) -> u8 {
        match self.family {
            Family::Osp { t, .. } => t,
            Family::Gl11 => unreachable!(),
        }
    }

    pub fn k(&self) -> u32 {
        match self.family {
            Family::Osp { k, .. } => k,
            Family::Gl11 => unreachable!(),
        }
    }

    /// Crosses, ascending; repeats only at 0.
    pub fn crosses(&self) -> &[u32] {
        &self.crosses
    }

    pub fn sign(&self) -> Option<Sign> {
        self.sign
    }

    pub fn gt_at_zero(&self) -> bool {
        self.t() == 2
    }

    pub fn zero_count(&self) -> u32 {
        self.crosses.iter().filter(|&&c| c == 0).count() as u32
    }

    pub fn has_cross_at(&self, coord: u32) -> bool {
        self.crosses.binary_search(&coord).is_ok()
    }

    pub fn max_coord(&self) -> u32 {
        self.crosses.last().copied().unwrap_or(0)
    }

    /// Number of crosses at the zero position, adjusted down by one for a
    /// plus-signed t = 1 diagram.
    pub fn tail(&self) -> u32 {
        let z = self.zero_count();
        if self.t() == 1 && self.sign == Some(Sign::Plus) {
            z - 1
        } else {
            z
        }
    }

    /// Sum of the cross coordinates for t = 0, 1; computed through tau for
    /// t = 2.
    pub fn norm(&self) -> u64 {
        match self.t() {
            2 => self.tau().expect("t = 2").norm(),
            _ => self.crosses.iter().map(|&c| u64::from(c)).sum(),
        }
    }

    /// (-1)^norm.
    pub fn pari(&self) -> Pari {
        Pari::from_exponent(self.norm())
    }

    /// The tail-preserving bijection from t = 2 diagrams to t = 1 diagrams:
    /// drop `>`, shift the nonzero positions one step left, and sign the
    /// result so the tail is preserved.
    pub fn tau(&self) -> Result<WeightDiagram, DiagramError> {
        let (t, k) = match self.family {
            Family::Osp { t, k } => (t, k),
            Family::Gl11 => return Err(DiagramError::NotOsp),
        };
        if t != 2 {
            return Err(DiagramError::TauNeedsT2);
        }
        let had_cross_at_one = self.has_cross_at(1);
        let zeros = self.zero_count();
        let mut crosses = Vec::with_capacity(k as usize);
        for &c in &self.crosses {
            crosses.push(if c == 0 { 0 } else { c - 1 });
        }
        let sign = if had_cross_at_one {
            Some(Sign::Plus)
        } else if zeros > 0 {
            Some(Sign::Minus)
        } else {
            None
        };
        WeightDiagram::new(Family::Osp { t: 1, k }, crosses, sign)
    }

    /// Inverse of `tau`.
    pub fn tau_inv(&self) -> Result<WeightDiagram, DiagramError> {
        let (t, k) = match self.family {
            Family::Osp { t, k } => (t, k),
            Family::Gl11 => return Err(DiagramError::NotOsp),
        };
        if t != 1 {
            return Err(DiagramError::TauInvNeedsT1);
        }
        let mut crosses = Vec::with_capacity(k as usize);
        let mut dropped_zero = false;
        for &c in &self.crosses {
            if c == 0 {
                if self.sign == Some(Sign::Plus) && !dropped_zero {
                    dropped_zero = true;
                    crosses.push(1);
                } else {
                    crosses.push(0);
                }
            } else {
                crosses.push(c + 1);
            }
        }
        WeightDiagram::new(Family::Osp { t: 2, k }, crosses, None)
    }

    /// Canonical text form.
    pub fn render(&self) -> String {
        let mut out = String::new();
        if let Some(s) = self.sign {
            out.push_str(&format!("{s}"));
        }
        let zeros = self.zero_count();
        let max = self.max_coord();
        let mut tokens: Vec<String> = Vec::new();
        // position 0
        let mut zero_tok = String::new();
        if self.t() == 2 {
            zero_tok.push('>');
        }
        if zeros == 1 {
            zero_tok.push('x');
        } else if zeros > 1 {
            zero_tok.push_str(&format!("x{zeros}"));
        }
        if zero_tok.is_empty() {
            zero_tok.push('o');
        }
        let last = if self.crosses.is_empty() {
            if self.t() == 2 {
                tokens.push(zero_tok.clone());
            }
            // t = 0, 1 with k = 0: the empty diagram
            0
        } else {
            tokens.push(zero_tok);
            max
        };
        for pos in 1..=last {
            tokens.push(if self.has_cross_at(pos) {
                String::from("x")
            } else {
                String::from("o")
            });
        }
        out.push_str(&tokens.join(";"));
        out
    }

    /// Parse the text grammar in the context of a family. Accepts trailing
    /// `o` tokens; `render` produces the canonical form.
    pub fn parse(text: &str, family: Family) -> Result<WeightDiagram, DiagramError> {
        let (t, _k) = match family {
            Family::Osp { t, k } => (t, k),
            Family::Gl11 => return Err(DiagramError::NotOsp),
        };
        let mut rest = text.trim();
        let mut sign = None;
        if let Some(r) = rest.strip_prefix('+') {
            sign = Some(Sign::Plus);
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = Some(Sign::Minus);
            rest = r;
        }
        let mut crosses: Vec<u32> = Vec::new();
        if !rest.is_empty() {
            for (pos, tok) in rest.split(';').enumerate() {
                let pos = pos as u32;
                let mut tok = tok.trim();
                if tok.starts_with('>') {
                    if pos != 0 || t != 2 {
                        return Err(DiagramError::Parse(String::from(
                            "'>' is allowed only at position 0 of a t = 2 diagram",
                        )));
                    }
                    tok = &tok[1..];
                    if tok.is_empty() {
                        continue;
                    }
                } else if pos == 0 && t == 2 {
                    return Err(DiagramError::Parse(String::from(
                        "t = 2 diagrams start with '>'",
                    )));
                }
                if tok == "o" {
                    continue;
                }
                let mult = match tok.strip_prefix('x') {
                    Some("") => 1u32,
                    Some(n) => n
                        .parse::<u32>()
                        .ok()
                        .filter(|&m| m >= 1)
                        .ok_or_else(|| DiagramError::Parse(format!("bad multiplicity '{n}'")))?,
                    None => return Err(DiagramError::Parse(format!("unrecognized token '{tok}'"))),
                };
                if mult > 1 && pos != 0 {
                    return Err(DiagramError::Parse(String::from(
                        "multiplicity > 1 is allowed only at position 0",
                    )));
                }
                for _ in 0..mult {
                    crosses.push(pos);
                }
            }
        } else if t == 2 {
            return Err(DiagramError::Parse(String::from(
                "t = 2 diagrams start with '>'",
            )));
        }
        WeightDiagram::new(family, crosses, sign)
    }

    /// The dominant weight this diagram encodes.
    pub fn weight(&self) -> Weight {
        let (t, k) = match self.family {
            Family::Osp { t, k } => (t, k),
            Family::Gl11 => unreachable!(),
        };
        let k = k as usize;
        // a_1 >= a_2 >= ... (zeros trailing)
        let desc: Vec<u32> = self.crosses.iter().rev().copied().collect();
        let mut eps = vec![Rat::zero(); self.family.eps_len()];
        let mut delta = vec![Rat::zero(); k];
        match t {
            0 => {
                for (i, &a) in desc.iter().enumerate() {
                    let a = rat::rat(i64::from(a));
                    delta[i] = a.clone();
                    eps[i] = a;
                }
                if let Some(s) = self.sign {
                    if s == Sign::Minus {
                        eps[k - 1] = -&eps[k - 1];
                    }
                }
            }
            2 => {
                for (i, &a) in desc.iter().enumerate() {
                    let a = rat::rat(i64::from(a));
                    delta[i] = a.clone();
                    eps[i] = a;
                }
                // eps[k] stays 0
            }
            _ => {
                // t = 1: positive coordinates a get (a+1, a); at the first
                // zero slot a plus sign contributes ε alone.
                let mut signed_slot_done = false;
                for (i, &a) in desc.iter().enumerate() {
                    if a > 0 {
                        delta[i] = rat::rat(i64::from(a));
                        eps[i] = rat::rat(i64::from(a) + 1);
                    } else if !signed_slot_done {
                        signed_slot_done = true;
                        if self.sign == Some(Sign::Plus) {
                            eps[i] = rat::rat(1);
                        }
                    }
                }
            }
        }
        Weight::new(self.family, eps, delta).expect("lengths fixed by construction")
    }

    /// Encode a weight as a diagram; errors when the weight is not a
    /// dominant principal-block weight of its family.
    pub fn from_weight(w: &Weight) -> Result<WeightDiagram, DiagramError> {
        let (t, k) = match w.family() {
            Family::Osp { t, k } => (t, k),
            Family::Gl11 => return Err(DiagramError::NotOsp),
        };
        let k = k as usize;
        let mut coords: Vec<u32> = Vec::with_capacity(k);
        for i in 0..k {
            let a = w.a_coord(i);
            let v = rat::to_i64(&a).ok_or_else(|| {
                DiagramError::NotDominant(format!("a_{} = {} is not an integer", i + 1, a))
            })?;
            if v < 0 {
                return Err(DiagramError::NotDominant(format!(
                    "a_{} = {v} is negative",
                    i + 1
                )));
            }
            coords.push(v as u32);
        }
        for i in 0..k.saturating_sub(1) {
            let (a, b) = (coords[i], coords[i + 1]);
            if !(a > b || (a == 0 && b == 0)) {
                return Err(DiagramError::NotDominant(format!(
                    "a_{} = {a} must exceed a_{} = {b} unless both vanish",
                    i + 1,
                    i + 2
                )));
            }
        }
        let zeros = coords.iter().filter(|&&c| c == 0).count();
        let sign = match t {
            0 => {
                if zeros == 0 && k > 0 {
                    let last = &w.eps()[k - 1];
                    if last > &Rat::zero() {
                        Some(Sign::Plus)
                    } else {
                        Some(Sign::Minus)
                    }
                } else {
                    None
                }
            }
            1 => {
                if zeros > 0 {
                    let first_zero = k - zeros;
                    if w.eps()[first_zero].is_zero() {
                        Some(Sign::Minus)
                    } else {
                        Some(Sign::Plus)
                    }
                } else {
                    None
                }
            }
            _ => None,
        };
        let diagram = WeightDiagram::new(w.family(), coords, sign).map_err(|e| {
            DiagramError::NotDominant(format!("coordinates do not form a diagram: {e}"))
        })?;
        let back = diagram.weight();
        if &back != w {
            return Err(DiagramError::NotDominant(format!(
                "weight does not lie in the principal block (closest block weight has \
                 diagram {})",
                diagram.render()
            )));
        }
        Ok(diagram)
    }

    /// All valid diagrams of a family with every cross coordinate at most
    /// `coord_bound`, canonically ordered by (norm, text).
    pub fn enumerate_block(
        family: Family,
        coord_bound: u32,
    ) -> Result<Vec<WeightDiagram>, DiagramError> {
        let (t, k) = match family {
            Family::Osp { t, k } => (t, k),
            Family::Gl11 => return Err(DiagramError::NotOsp),
        };
        let mut out = Vec::new();
        for zeros in (0..=k).rev() {
            let picks = k - zeros;
            for subset in combinations(coord_bound, picks) {
                let mut crosses = vec![0u32; zeros as usize];
                crosses.extend(subset);
                let signs: &[Option<Sign>] = match t {
                    0 if zeros == 0 && k > 0 => &[Some(Sign::Plus), Some(Sign::Minus)],
                    1 if zeros > 0 => &[Some(Sign::Plus), Some(Sign::Minus)],
                    _ => &[None],
                };
                for &s in signs {
                    out.push(WeightDiagram::new(family, crosses.clone(), s)?);
                }
            }
        }
        out.sort_by_key(|d| (d.norm(), d.render()));
        Ok(out)
    }
}

impl fmt::Display for WeightDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Ascending `size`-subsets of 1..=bound.
fn combinations(bound: u32, size: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: u32, bound: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for c in start..=bound {
            if bound - c + 1 < left {
                break;
            }
            cur.push(c);
            rec(c + 1, bound, left - 1, cur, out);
            cur.pop();
        }
    }
    if size == 0 {
        out.push(Vec::new());
    } else if bound >= 1 {
        rec(1, bound, size, &mut cur, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{OSP22, OSP32};
    use crate::rat::rat;

    fn fam(t: u8, k: u32) -> Family {
        Family::osp(t, k).unwrap()
    }

    fn diag(text: &str, t: u8, k: u32) -> WeightDiagram {
        WeightDiagram::parse(text, fam(t, k)).unwrap()
    }

    #[test]
    fn render_golden() {
        assert_eq!(diag("x3", 0, 3).render(), "x3");
        assert_eq!(diag("+x3", 1, 3).render(), "+x3");
        assert_eq!(diag("+o;x;x", 0, 2).render(), "+o;x;x");
        assert_eq!(diag(">x;o;x", 2, 2).render(), ">x;o;x");
        assert_eq!(diag(">", 2, 0).render(), ">");
        assert_eq!(diag("", 0, 0).render(), "");
        // trailing 'o' tokens are accepted and dropped
        assert_eq!(diag("x;o;o", 0, 1).render(), "x");
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(WeightDiagram::parse("x;x2", fam(0, 3)).is_err()); // mult off zero
        assert!(WeightDiagram::parse("x", fam(0, 2)).is_err()); // wrong count
        assert!(WeightDiagram::parse("x", fam(1, 1)).is_err()); // t=1 needs sign at 0
        assert!(WeightDiagram::parse("+x", fam(0, 1)).is_err()); // t=0 sign iff no zero cross
        assert!(WeightDiagram::parse("x", fam(2, 1)).is_err()); // t=2 needs '>'
        assert!(WeightDiagram::parse(">x", fam(0, 1)).is_err());
        assert!(WeightDiagram::parse("q", fam(0, 1)).is_err());
    }

    #[test]
    fn weight_of_zero_diagrams() {
        // 0 <-> ×^k for t = 0, -×^k for t = 1, >×^k for t = 2
        for (t, text) in [(0, "x3"), (1, "-x3"), (2, ">x3")] {
            let d = diag(text, t, 3);
            assert!(d.weight().is_zero(), "t={t}");
            let round = WeightDiagram::from_weight(&Weight::zero(fam(t, 3))).unwrap();
            assert_eq!(round, d);
        }
        assert!(diag(">", 2, 0).weight().is_zero());
    }

    #[test]
    fn weight_golden_examples() {
        // +×^3 over osp(7|6) is ε₁
        let d = diag("+x3", 1, 3);
        assert_eq!(d.weight(), Weight::eps_unit(fam(1, 3), 0));
        assert_eq!(d.tail(), 2);
        // +◦×× over osp(4|4) is 2(ε₁+δ₁) + (ε₂+δ₂)
        let d = diag("+o;x;x", 0, 2);
        let w = Weight::new(fam(0, 2), vec![rat(2), rat(1)], vec![rat(2), rat(1)]).unwrap();
        assert_eq!(d.weight(), w);
        assert_eq!(WeightDiagram::from_weight(&w).unwrap(), d);
        assert_eq!(d.tail(), 0);
        // t = 1, k = 1: "-x" is 0, "+x" is ε₁
        assert!(diag("-x", 1, 1).weight().is_zero());
        assert_eq!(diag("+x", 1, 1).weight(), Weight::eps_unit(OSP32, 0));
    }

    #[test]
    fn from_weight_rejects_non_block_weights() {
        // negative a₁
        let w = Weight::new(OSP22, vec![rat(0)], vec![rat(-1)]).unwrap();
        assert!(matches!(
            WeightDiagram::from_weight(&w),
            Err(DiagramError::NotDominant(_))
        ));
        // a-coordinates must strictly decrease unless zero
        let fam2 = fam(0, 2);
        let w = Weight::new(fam2, vec![rat(1), rat(2)], vec![rat(1), rat(2)]).unwrap();
        assert!(WeightDiagram::from_weight(&w).is_err());
        // eps/delta mismatch: not in the block
        let w = Weight::new(OSP22, vec![rat(2)], vec![rat(1)]).unwrap();
        assert!(WeightDiagram::from_weight(&w).is_err());
    }

    #[test]
    fn tails_golden() {
        assert_eq!(diag("x3", 0, 3).tail(), 3);
        assert_eq!(diag("+x3", 1, 3).tail(), 2);
        assert_eq!(diag("-x3", 1, 3).tail(), 3);
        assert_eq!(diag("+o;x;x", 0, 2).tail(), 0);
        assert_eq!(diag(">x2;x", 2, 3).tail(), 2);
    }

    #[test]
    fn tau_golden() {
        let pairs = [
            (">x;o;x", "-x;x", 2u32),
            (">x", "-x", 1),
            (">;x", "+x", 1),
            (">;o;x", "o;x", 1),
        ];
        for (from, to, k) in pairs {
            let f = diag(from, 2, k);
            let g = f.tau().unwrap();
            assert_eq!(g.render(), to, "tau({from})");
            assert_eq!(f.tail(), g.tail(), "tail preserved for {from}");
            assert_eq!(g.tau_inv().unwrap(), f, "tau_inv(tau({from}))");
        }
    }

    #[test]
    fn tau_is_a_bijection_on_truncations() {
        for k in 0..=4u32 {
            let bound = 8;
            let t2: Vec<_> = WeightDiagram::enumerate_block(fam(2, k), bound + 1).unwrap();
            let t1: Vec<_> = WeightDiagram::enumerate_block(fam(1, k), bound).unwrap();
            let mut images: Vec<_> = t2
                .iter()
                .map(|d| {
                    let g = d.tau().unwrap();
                    assert_eq!(g.tail(), d.tail());
                    assert_eq!(g.norm(), d.norm());
                    g
                })
                .collect();
            images.sort();
            let mut expect = t1.clone();
            expect.sort();
            assert_eq!(images, expect, "k={k}");
        }
    }

    #[test]
    fn norm_and_pari() {
        assert_eq!(diag("x3", 0, 3).norm(), 0);
        assert_eq!(diag("x3", 0, 3).pari(), Pari::Plus);
        assert_eq!(diag("+o;x;x", 0, 2).norm(), 3);
        assert_eq!(diag("+o;x;x", 0, 2).pari(), Pari::Minus);
        assert_eq!(diag(">x;o;x", 2, 2).norm(), 1);
    }

    #[test]
    fn pari_matches_weight_parity_for_t01() {
        for t in 0..=1u8 {
            for k in 0..=3u32 {
                for d in WeightDiagram::enumerate_block(fam(t, k), 5).unwrap() {
                    let p = d.weight().parity().unwrap();
                    assert_eq!(
                        d.pari(),
                        Pari::from_exponent(u64::from(p)),
                        "{} (t={t})",
                        d.render()
                    );
                }
            }
        }
    }

    #[test]
    fn enumerate_golden() {
        let e: Vec<String> = WeightDiagram::enumerate_block(fam(0, 1), 1)
            .unwrap()
            .iter()
            .map(|d| d.render())
            .collect();
        assert_eq!(e, ["x", "+o;x", "-o;x"]);
        let e: Vec<String> = WeightDiagram::enumerate_block(fam(2, 0), 5)
            .unwrap()
            .iter()
            .map(|d| d.render())
            .collect();
        assert_eq!(e, [">"]);
        let e: Vec<String> = WeightDiagram::enumerate_block(fam(1, 1), 0)
            .unwrap()
            .iter()
            .map(|d| d.render())
            .collect();
        assert_eq!(e, ["+x", "-x"]);
    }

    #[test]
    fn roundtrips_exhaustive() {
        for t in 0..=2u8 {
            for k in 0..=4u32 {
                for d in WeightDiagram::enumerate_block(fam(t, k), 8).unwrap() {
                    let text = d.render();
                    assert_eq!(
                        WeightDiagram::parse(&text, d.family()).unwrap(),
                        d,
                        "text roundtrip {text}"
                    );
                    assert_eq!(
                        WeightDiagram::from_weight(&d.weight()).unwrap(),
                        d,
                        "weight roundtrip {text}"
                    );
                }
            }
        }
    }

    #[test]
    fn weight_roundtrip_rank_one_aliases() {
        // λ_s = |s|δ₁ + sε₁ over osp(2|2)
        for s in -4i64..=4 {
            let w = Weight::new(OSP22, vec![rat(s)], vec![rat(s.abs())]).unwrap();
            let d = WeightDiagram::from_weight(&w).unwrap();
            assert_eq!(d.weight(), w);
            assert_eq!(d.max_coord() as i64, s.abs());
        }
        // λ_0 = 0, λ_s = (s-1)δ₁ + sε₁ over osp(3|2)
        for s in 1i64..=5 {
            let w = Weight::new(OSP32, vec![rat(s)], vec![rat(s - 1)]).unwrap();
            let d = WeightDiagram::from_weight(&w).unwrap();
            assert_eq!(d.weight(), w);
        }
    }
}
