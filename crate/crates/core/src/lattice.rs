//! Root data for the supported families: weights on the ε/δ basis, the
//! standard bilinear form, parity, the dominance order decided over the
//! stored positive roots, and Weyl-group data for the rank-one families.
//!
//! The families are osp(2k+t|2k) for t = 0, 1, 2 with the "mixed" simple
//! base, and gl(1|1). The form is normalized by (ε_i|ε_j) = δ_ij,
//! (δ_i|δ_j) = -δ_ij, (ε_i|δ_j) = 0, which makes the diagram coordinates
//! a_i = -(λ|δ_i) nonnegative integers on block weights.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::rat::{self, Rat};

/// Supported root-datum families.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Family {
    /// osp(2k+t|2k) with the mixed base; the ε-basis has k+ℓ members and the
    /// δ-basis has k, where ℓ = 1 exactly when t = 2.
    Osp { t: u8, k: u32 },
    /// gl(1|1), basis ε₁, δ₁, single odd root α = ε₁ - δ₁.
    Gl11,
}

/// osp(2|2) with the mixed base.
pub const OSP22: Family = Family::Osp { t: 0, k: 1 };
/// osp(3|2) with the mixed base.
pub const OSP32: Family = Family::Osp { t: 1, k: 1 };

impl Family {
    pub fn osp(t: u8, k: u32) -> Result<Family, LatticeError> {
        if t > 2 {
            return Err(LatticeError::BadFamily);
        }
        Ok(Family::Osp { t, k })
    }

    /// 1 for t = 2, else 0.
    pub fn ell(self) -> u32 {
        match self {
            Family::Osp { t: 2, .. } => 1,
            _ => 0,
        }
    }

    pub fn eps_len(self) -> usize {
        match self {
            Family::Osp { k, .. } => (k + self.ell()) as usize,
            Family::Gl11 => 1,
        }
    }

    pub fn delta_len(self) -> usize {
        match self {
            Family::Osp { k, .. } => k as usize,
            Family::Gl11 => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Osp { t, k } => write!(f, "osp({}|{})", 2 * k + u32::from(*t), 2 * k),
            Family::Gl11 => write!(f, "gl(1|1)"),
        }
    }
}

/// A sign in {+1, -1}, the value of the bipartition map on a simple module.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Pari {
    Plus,
    Minus,
}

impl Pari {
    pub fn from_exponent(n: u64) -> Pari {
        if n.is_multiple_of(2) {
            Pari::Plus
        } else {
            Pari::Minus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Pari::Plus => 1,
            Pari::Minus => -1,
        }
    }
}

impl core::ops::Mul for Pari {
    type Output = Pari;

    fn mul(self, other: Pari) -> Pari {
        if self == other {
            Pari::Plus
        } else {
            Pari::Minus
        }
    }
}

impl fmt::Display for Pari {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pari::Plus => write!(f, "+1"),
            Pari::Minus => write!(f, "-1"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LatticeError {
    BadFamily,
    FamilyMismatch,
    /// parity needs integral δ-coordinates
    NonIntegralParity,
    /// no Weyl generators stored for this family
    NoWeylData,
    BadCoordinates(String),
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::BadFamily => write!(f, "unsupported family parameters"),
            LatticeError::FamilyMismatch => write!(f, "weights belong to different families"),
            LatticeError::NonIntegralParity => {
                write!(f, "parity needs integral delta-coordinates")
            }
            LatticeError::NoWeylData => write!(f, "no Weyl generators stored for this family"),
            LatticeError::BadCoordinates(s) => write!(f, "bad coordinates: {s}"),
        }
    }
}

/// A weight, written on the ε/δ basis with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Weight {
    family: Family,
    eps: Vec<Rat>,
    delta: Vec<Rat>,
}

impl Weight {
    pub fn new(family: Family, eps: Vec<Rat>, delta: Vec<Rat>) -> Result<Weight, LatticeError> {
        if eps.len() != family.eps_len() || delta.len() != family.delta_len() {
            return Err(LatticeError::BadCoordinates(String::from(
                "coordinate count does not match the family",
            )));
        }
        Ok(Weight { family, eps, delta })
    }

    pub fn zero(family: Family) -> Weight {
        Weight {
            family,
            eps: vec![Rat::zero(); family.eps_len()],
            delta: vec![Rat::zero(); family.delta_len()],
        }
    }

    /// ε_i (0-based index).
    pub fn eps_unit(family: Family, i: usize) -> Weight {
        let mut w = Weight::zero(family);
        w.eps[i] = rat::rat(1);
        w
    }

    /// δ_j (0-based index).
    pub fn delta_unit(family: Family, j: usize) -> Weight {
        let mut w = Weight::zero(family);
        w.delta[j] = rat::rat(1);
        w
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn eps(&self) -> &[Rat] {
        &self.eps
    }

    pub fn delta(&self) -> &[Rat] {
        &self.delta
    }

    pub fn is_zero(&self) -> bool {
        self.eps.iter().all(Rat::is_zero) && self.delta.iter().all(Rat::is_zero)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.family, other.family, "family mismatch");
        Weight {
            family: self.family,
            eps: zip_with(&self.eps, &other.eps, |a, b| a + b),
            delta: zip_with(&self.delta, &other.delta, |a, b| a + b),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.family, other.family, "family mismatch");
        Weight {
            family: self.family,
            eps: zip_with(&self.eps, &other.eps, |a, b| a - b),
            delta: zip_with(&self.delta, &other.delta, |a, b| a - b),
        }
    }

    pub fn neg(&self) -> Weight {
        Weight {
            family: self.family,
            eps: self.eps.iter().map(|a| -a).collect(),
            delta: self.delta.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Weight {
        Weight {
            family: self.family,
            eps: self.eps.iter().map(|a| a * c).collect(),
            delta: self.delta.iter().map(|a| a * c).collect(),
        }
    }

    /// The symmetric bilinear form: (ε_i|ε_j) = δ_ij, (δ_i|δ_j) = -δ_ij.
    pub fn inner(&self, other: &Weight) -> Result<Rat, LatticeError> {
        if self.family != other.family {
            return Err(LatticeError::FamilyMismatch);
        }
        let mut acc = Rat::zero();
        for (a, b) in self.eps.iter().zip(other.eps.iter()) {
            acc += a * b;
        }
        for (a, b) in self.delta.iter().zip(other.delta.iter()) {
            acc -= a * b;
        }
        Ok(acc)
    }

    /// Diagram coordinate a_i = -(λ|δ_i), 0-based i.
    pub fn a_coord(&self, i: usize) -> Rat {
        self.delta[i].clone()
    }

    /// Parity: the mod-2 sum of the a_i = -(λ|δ_i). Errors unless all δ
    /// coordinates are integral.
    pub fn parity(&self) -> Result<u8, LatticeError> {
        let mut sum: i64 = 0;
        for d in &self.delta {
            let v = rat::to_i64(d).ok_or(LatticeError::NonIntegralParity)?;
            sum += v.rem_euclid(2);
        }
        Ok((sum % 2) as u8)
    }

    pub fn pari(&self) -> Result<Pari, LatticeError> {
        Ok(Pari::from_exponent(u64::from(self.parity()?)))
    }
}

fn zip_with(a: &[Rat], b: &[Rat], f: impl Fn(&Rat, &Rat) -> Rat) -> Vec<Rat> {
    a.iter().zip(b.iter()).map(|(x, y)| f(x, y)).collect()
}

/// One Weyl generator: a reflection acting on the coordinates. Every
/// generator has determinant -1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeylGen {
    FlipEps(usize),
    FlipDelta(usize),
    /// the reflection in ε_i - ε_j: swap the two coordinates
    SwapEps(usize, usize),
    /// the reflection in ε_i + ε_j: swap and negate both
    SwapNegEps(usize, usize),
}

/// A Weyl-group element as a signed permutation of the ε and δ
/// coordinates, with its determinant on 𝔥* (the sign homomorphism).
/// `eps_perm[i] = (p, s)` sends the coefficient at ε_i to position p with
/// sign s.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct WeylElement {
    eps_perm: Vec<(usize, i8)>,
    delta_perm: Vec<(usize, i8)>,
    pub det: i8,
}

impl WeylElement {
    pub fn identity(family: Family) -> WeylElement {
        WeylElement {
            eps_perm: (0..family.eps_len()).map(|i| (i, 1)).collect(),
            delta_perm: (0..family.delta_len()).map(|i| (i, 1)).collect(),
            det: 1,
        }
    }

    /// Post-compose with a generator.
    fn then(&self, g: WeylGen) -> WeylElement {
        let mut next = self.clone();
        let act = |perm: &mut Vec<(usize, i8)>, g: WeylGen| {
            for slot in perm.iter_mut() {
                match g {
                    WeylGen::FlipEps(i) | WeylGen::FlipDelta(i) => {
                        if slot.0 == i {
                            slot.1 = -slot.1;
                        }
                    }
                    WeylGen::SwapEps(i, j) => {
                        if slot.0 == i {
                            slot.0 = j;
                        } else if slot.0 == j {
                            slot.0 = i;
                        }
                    }
                    WeylGen::SwapNegEps(i, j) => {
                        if slot.0 == i {
                            slot.0 = j;
                            slot.1 = -slot.1;
                        } else if slot.0 == j {
                            slot.0 = i;
                            slot.1 = -slot.1;
                        }
                    }
                }
            }
        };
        match g {
            WeylGen::FlipDelta(_) => act(&mut next.delta_perm, g),
            _ => act(&mut next.eps_perm, g),
        }
        next.det = -next.det;
        next
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        let mut eps = vec![Rat::zero(); w.eps().len()];
        let mut delta = vec![Rat::zero(); w.delta().len()];
        for (i, (p, s)) in self.eps_perm.iter().enumerate() {
            eps[*p] = if *s < 0 {
                -&w.eps()[i]
            } else {
                w.eps()[i].clone()
            };
        }
        for (i, (p, s)) in self.delta_perm.iter().enumerate() {
            delta[*p] = if *s < 0 {
                -&w.delta()[i]
            } else {
                w.delta()[i].clone()
            };
        }
        Weight {
            family: w.family(),
            eps,
            delta,
        }
    }
}

/// Positive roots, Weyl vector and Weyl generators of a family.
pub struct RootDatum {
    family: Family,
    /// (root, is_odd)
    positive: Vec<(Weight, bool)>,
    rho: Weight,
    weyl_gens: Option<Vec<WeylGen>>,
}

impl RootDatum {
    pub fn new(family: Family) -> RootDatum {
        let positive = positive_roots(family);
        let rho = stored_rho(family);
        let weyl_gens = stored_weyl_gens(family);
        RootDatum {
            family,
            positive,
            rho,
            weyl_gens,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn positive_roots(&self) -> &[(Weight, bool)] {
        &self.positive
    }

    pub fn even_positive_roots(&self) -> impl Iterator<Item = &Weight> {
        self.positive.iter().filter(|(_, odd)| !odd).map(|(r, _)| r)
    }

    pub fn odd_positive_roots(&self) -> impl Iterator<Item = &Weight> {
        self.positive.iter().filter(|(_, odd)| *odd).map(|(r, _)| r)
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Half the signed sum of the stored positive roots; equals `rho()` and
    /// is kept separate so the identity stays testable.
    pub fn rho_from_roots(&self) -> Weight {
        let mut acc = Weight::zero(self.family);
        for (r, odd) in &self.positive {
            acc = if *odd { acc.sub(r) } else { acc.add(r) };
        }
        acc.scale(&rat::ratio(1, 2))
    }

    /// True iff b - a is a nonnegative integer combination of the positive
    /// roots. Panics if the weights come from different families.
    pub fn dominance_leq(&self, a: &Weight, b: &Weight) -> bool {
        assert_eq!(a.family(), self.family, "family mismatch");
        assert_eq!(b.family(), self.family, "family mismatch");
        let diff = b.sub(a);
        if diff.is_zero() {
            return true;
        }
        if !diff
            .eps()
            .iter()
            .chain(diff.delta().iter())
            .all(rat::is_integer)
        {
            return false;
        }
        let order = coord_order(self.family);
        let diff: Vec<Rat> = order.iter().map(|c| c.get(&diff)).collect();
        // each positive root, in ordered coordinates, keyed by its leading
        // (first nonzero) position -- which always carries a positive entry
        let mut by_leading: Vec<Vec<Vec<Rat>>> = vec![Vec::new(); order.len()];
        for (root, _) in &self.positive {
            let v: Vec<Rat> = order.iter().map(|c| c.get(root)).collect();
            let lead = v.iter().position(|x| !x.is_zero()).expect("nonzero root");
            by_leading[lead].push(v);
        }
        let mut memo = BTreeMap::new();
        in_cone(&diff, &by_leading, &mut memo)
    }

    pub fn weyl_generators(&self) -> Result<&[WeylGen], LatticeError> {
        self.weyl_gens.as_deref().ok_or(LatticeError::NoWeylData)
    }

    /// The full (finite) Weyl group generated by the stored generators.
    pub fn weyl_elements(&self) -> Result<Vec<WeylElement>, LatticeError> {
        let gens = self.weyl_generators()?;
        let id = WeylElement::identity(self.family);
        let mut seen = vec![id.clone()];
        let mut frontier = vec![id];
        while let Some(w) = frontier.pop() {
            for g in gens {
                let next = w.then(*g);
                if !seen.contains(&next) {
                    seen.push(next.clone());
                    frontier.push(next);
                }
            }
        }
        seen.sort();
        Ok(seen)
    }

    /// The orbit of `w` with signs: for each orbit point the determinant of
    /// a shortest Weyl word reaching it (so the orbit of 0 is {(0, +1)}).
    pub fn weyl_orbit(&self, w: &Weight) -> Result<Vec<(Weight, i8)>, LatticeError> {
        let gens = self.weyl_generators()?;
        let mut out: BTreeMap<Weight, i8> = BTreeMap::new();
        out.insert(w.clone(), 1);
        let mut frontier = alloc::collections::VecDeque::new();
        frontier.push_back((w.clone(), 1i8));
        while let Some((v, s)) = frontier.pop_front() {
            for g in gens {
                let mut next = v.clone();
                match g {
                    WeylGen::FlipEps(i) => next.eps[*i] = -&next.eps[*i],
                    WeylGen::FlipDelta(j) => next.delta[*j] = -&next.delta[*j],
                    WeylGen::SwapEps(i, j) => next.eps.swap(*i, *j),
                    WeylGen::SwapNegEps(i, j) => {
                        next.eps.swap(*i, *j);
                        next.eps[*i] = -&next.eps[*i];
                        next.eps[*j] = -&next.eps[*j];
                    }
                }
                if !out.contains_key(&next) {
                    out.insert(next.clone(), -s);
                    frontier.push_back((next, -s));
                }
            }
        }
        Ok(out.into_iter().collect())
    }
}

/// Membership of `diff` in the monoid generated by the positive roots.
/// Recursion peels the leading coordinate: any decomposition must spend
/// roots whose leading position matches the first nonzero entry of `diff`,
/// and every such root has a positive leading entry, so the leading value
/// strictly drops and the search terminates.
fn in_cone(
    diff: &[Rat],
    by_leading: &[Vec<Vec<Rat>>],
    memo: &mut BTreeMap<Vec<Rat>, bool>,
) -> bool {
    let lead = match diff.iter().position(|x| !x.is_zero()) {
        None => return true,
        Some(p) => p,
    };
    if diff[lead] < Rat::zero() {
        return false;
    }
    if let Some(&hit) = memo.get(diff) {
        return hit;
    }
    memo.insert(diff.to_vec(), false); // cycle guard; overwritten on success
    let mut ok = false;
    for root in &by_leading[lead] {
        let rest: Vec<Rat> = diff.iter().zip(root.iter()).map(|(d, r)| d - r).collect();
        if in_cone(&rest, by_leading, memo) {
            ok = true;
            break;
        }
    }
    memo.insert(diff.to_vec(), ok);
    ok
}

#[derive(Clone, Copy)]
enum Coord {
    Eps(usize),
    Delta(usize),
}

impl Coord {
    fn get(self, w: &Weight) -> Rat {
        match self {
            Coord::Eps(i) => w.eps()[i].clone(),
            Coord::Delta(j) => w.delta()[j].clone(),
        }
    }
}

/// Coordinate ordering induced by the mixed base (largest first).
fn coord_order(family: Family) -> Vec<Coord> {
    let mut order = Vec::new();
    match family {
        Family::Osp { t: 0, k } => {
            for i in 0..k as usize {
                order.push(Coord::Delta(i));
                order.push(Coord::Eps(i));
            }
        }
        Family::Osp { t: 1, k } => {
            for i in 0..k as usize {
                order.push(Coord::Eps(i));
                order.push(Coord::Delta(i));
            }
        }
        Family::Osp { t: 2, k } => {
            for i in 0..k as usize {
                order.push(Coord::Eps(i));
                order.push(Coord::Delta(i));
            }
            order.push(Coord::Eps(k as usize));
        }
        Family::Osp { .. } => unreachable!("validated at construction"),
        Family::Gl11 => {
            order.push(Coord::Eps(0));
            order.push(Coord::Delta(0));
        }
    }
    order
}

fn positive_roots(family: Family) -> Vec<(Weight, bool)> {
    let mut roots = Vec::new();
    let eps = |i: usize| Weight::eps_unit(family, i);
    let delta = |j: usize| Weight::delta_unit(family, j);
    match family {
        Family::Osp { t, k } => {
            let k = k as usize;
            let ne = family.eps_len();
            // even: ε_i ± ε_j (i < j), plus ε_i for t = 1
            for i in 0..ne {
                for j in (i + 1)..ne {
                    roots.push((eps(i).sub(&eps(j)), false));
                    roots.push((eps(i).add(&eps(j)), false));
                }
            }
            if t == 1 {
                for i in 0..ne {
                    roots.push((eps(i), false));
                }
            }
            // even: δ_i ± δ_j (i < j), 2δ_i
            for i in 0..k {
                for j in (i + 1)..k {
                    roots.push((delta(i).sub(&delta(j)), false));
                    roots.push((delta(i).add(&delta(j)), false));
                }
                roots.push((delta(i).scale(&rat::rat(2)), false));
            }
            // odd: all ε_i + δ_j, plus the positive differences and δ_j for t = 1
            for i in 0..ne {
                for j in 0..k {
                    roots.push((eps(i).add(&delta(j)), true));
                    let diff_positive = match t {
                        // order δ₁ ≻ ε₁ ≻ δ₂ ≻ ε₂ ≻ …
                        0 => {
                            if j < i {
                                Some(delta(j).sub(&eps(i)))
                            } else if i < j {
                                Some(eps(i).sub(&delta(j)))
                            } else {
                                Some(delta(j).sub(&eps(i)))
                            }
                        }
                        // order ε₁ ≻ δ₁ ≻ ε₂ ≻ δ₂ ≻ …
                        1 | 2 => {
                            if i <= j {
                                Some(eps(i).sub(&delta(j)))
                            } else {
                                Some(delta(j).sub(&eps(i)))
                            }
                        }
                        _ => None,
                    };
                    if let Some(r) = diff_positive {
                        roots.push((r, true));
                    }
                }
            }
            if t == 1 {
                for j in 0..k {
                    roots.push((delta(j), true));
                }
            }
        }
        Family::Gl11 => {
            roots.push((eps(0).sub(&delta(0)), true));
        }
    }
    roots
}

fn stored_rho(family: Family) -> Weight {
    match family {
        Family::Osp { t: 1, k } => {
            let mut acc = Weight::zero(family);
            for j in 0..k as usize {
                acc = acc
                    .add(&Weight::delta_unit(family, j))
                    .sub(&Weight::eps_unit(family, j));
            }
            acc.scale(&rat::ratio(1, 2))
        }
        Family::Osp { .. } => Weight::zero(family),
        Family::Gl11 => Weight::delta_unit(family, 0)
            .sub(&Weight::eps_unit(family, 0))
            .scale(&rat::ratio(1, 2)),
    }
}

fn stored_weyl_gens(family: Family) -> Option<Vec<WeylGen>> {
    match family {
        Family::Osp { k: 0, .. } => Some(vec![]),
        Family::Osp { t: 0, k: 1 } => Some(vec![WeylGen::FlipDelta(0)]),
        Family::Osp { t: 1, k: 1 } => Some(vec![WeylGen::FlipEps(0), WeylGen::FlipDelta(0)]),
        // osp(4|2): the two ε coordinates carry a D2 factor
        Family::Osp { t: 2, k: 1 } => Some(vec![
            WeylGen::SwapEps(0, 1),
            WeylGen::SwapNegEps(0, 1),
            WeylGen::FlipDelta(0),
        ]),
        Family::Gl11 => Some(vec![]),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    #[test]
    fn form_normalization() {
        let d1 = Weight::delta_unit(OSP22, 0);
        let e1 = Weight::eps_unit(OSP22, 0);
        assert_eq!(d1.inner(&d1).unwrap(), rat(-1));
        assert_eq!(e1.inner(&d1).unwrap(), rat(0));
        assert_eq!(e1.inner(&e1).unwrap(), rat(1));
    }

    #[test]
    fn form_family_mismatch() {
        let a = Weight::zero(OSP22);
        let b = Weight::zero(OSP32);
        assert_eq!(a.inner(&b), Err(LatticeError::FamilyMismatch));
    }

    #[test]
    fn a_coords_of_twisted_weight() {
        // λ = ε₂ + δ₂ + 2ε₁ + 2δ₁ over osp(4|4)
        let fam = Family::osp(0, 2).unwrap();
        let lam = Weight::new(fam, vec![rat(2), rat(1)], vec![rat(2), rat(1)]).unwrap();
        let d1 = Weight::delta_unit(fam, 0);
        assert_eq!(-lam.inner(&d1).unwrap(), rat(2));
        assert_eq!(lam.parity().unwrap(), 1); // a = (2,1)
    }

    #[test]
    fn parity_examples() {
        assert_eq!(Weight::zero(OSP32).parity().unwrap(), 0);
        // gl(1|1): sα has parity s mod 2
        let alpha = Weight::eps_unit(Family::Gl11, 0).sub(&Weight::delta_unit(Family::Gl11, 0));
        for s in -3i64..=3 {
            let w = alpha.scale(&rat(s));
            assert_eq!(i64::from(w.parity().unwrap()), s.rem_euclid(2));
        }
        let half = Weight::new(OSP32, vec![rat(0)], vec![ratio(1, 2)]).unwrap();
        assert_eq!(half.parity(), Err(LatticeError::NonIntegralParity));
    }

    #[test]
    fn rho_matches_half_signed_root_sum() {
        for t in 0..=2u8 {
            for k in 0..=3u32 {
                let fam = Family::osp(t, k).unwrap();
                let rd = RootDatum::new(fam);
                assert_eq!(rd.rho(), &rd.rho_from_roots(), "t={t} k={k}");
            }
        }
        let rd = RootDatum::new(Family::Gl11);
        assert_eq!(rd.rho(), &rd.rho_from_roots());
    }

    #[test]
    fn dominance_basics() {
        let rd = RootDatum::new(OSP32);
        let zero = Weight::zero(OSP32);
        let e1 = Weight::eps_unit(OSP32, 0);
        assert!(rd.dominance_leq(&zero, &zero));
        assert!(rd.dominance_leq(&zero, &e1)); // ε₁ is a positive root
        assert!(!rd.dominance_leq(&e1, &zero));
        let half = Weight::new(OSP32, vec![ratio(1, 2)], vec![rat(0)]).unwrap();
        assert!(!rd.dominance_leq(&zero, &half));
    }

    #[test]
    fn dominance_larger_rank() {
        let fam = Family::osp(0, 2).unwrap();
        let rd = RootDatum::new(fam);
        let zero = Weight::zero(fam);
        // ε₁ + δ₁ is a positive odd root; 2ε₁ + 2δ₁ a double
        let w = Weight::new(fam, vec![rat(2), rat(0)], vec![rat(2), rat(0)]).unwrap();
        assert!(rd.dominance_leq(&zero, &w));
        // ε₂ - ε₁ is a negative root
        let bad = Weight::new(fam, vec![rat(-1), rat(1)], vec![rat(0), rat(0)]).unwrap();
        assert!(!rd.dominance_leq(&zero, &bad));
    }

    #[test]
    fn weyl_orbit_osp22() {
        let rd = RootDatum::new(OSP22);
        let d1 = Weight::delta_unit(OSP22, 0);
        let orbit = rd.weyl_orbit(&d1).unwrap();
        assert_eq!(orbit.len(), 2);
        assert!(orbit.contains(&(d1.clone(), 1)));
        assert!(orbit.contains(&(d1.neg(), -1)));
        let zero_orbit = rd.weyl_orbit(&Weight::zero(OSP22)).unwrap();
        assert_eq!(zero_orbit, vec![(Weight::zero(OSP22), 1)]);
    }

    #[test]
    fn weyl_orbit_osp32_free_orbit() {
        let rd = RootDatum::new(OSP32);
        let w = Weight::eps_unit(OSP32, 0).add(&Weight::delta_unit(OSP32, 0));
        let orbit = rd.weyl_orbit(&w).unwrap();
        assert_eq!(orbit.len(), 4);
        // frozen orbit of the order-4 group generated by the two flips
        for (se, sd) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
            let pt = Weight::new(OSP32, vec![rat(se)], vec![rat(sd)]).unwrap();
            let sign = ((se * sd) as i8).signum();
            assert!(orbit.contains(&(pt, sign)), "missing ({se},{sd})");
        }
    }

    #[test]
    fn weyl_data_missing_for_higher_rank() {
        let rd = RootDatum::new(Family::osp(0, 2).unwrap());
        assert_eq!(
            rd.weyl_orbit(&Weight::zero(rd.family())),
            Err(LatticeError::NoWeylData)
        );
    }

    #[test]
    fn weyl_group_of_osp42() {
        // so(4) x sp(2): order 8, half the elements odd
        let fam = Family::osp(2, 1).unwrap();
        let rd = RootDatum::new(fam);
        let els = rd.weyl_elements().unwrap();
        assert_eq!(els.len(), 8);
        assert_eq!(els.iter().map(|e| i64::from(e.det)).sum::<i64>(), 0);
        // orbit of ε₁: both coordinates, both signs
        let orbit = rd.weyl_orbit(&Weight::eps_unit(fam, 0)).unwrap();
        assert_eq!(orbit.len(), 4);
        assert!(orbit.contains(&(Weight::eps_unit(fam, 1), -1)));
        // elements act consistently with the orbit walk
        let w = Weight::new(fam, vec![rat(2), rat(1)], vec![rat(5)]).unwrap();
        let mut images: Vec<Weight> = els.iter().map(|e| e.apply(&w)).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 8);
        let mut orbit_pts: Vec<Weight> = rd
            .weyl_orbit(&w)
            .unwrap()
            .into_iter()
            .map(|(p, _)| p)
            .collect();
        orbit_pts.sort();
        assert_eq!(images, orbit_pts);
    }

    #[test]
    fn weyl_elements_osp32() {
        let rd = RootDatum::new(OSP32);
        let els = rd.weyl_elements().unwrap();
        assert_eq!(els.len(), 4);
        assert_eq!(els.iter().map(|e| i64::from(e.det)).sum::<i64>(), 0);
    }
}
