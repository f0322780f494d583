//! Truncated integer-coefficient formal sums of exponentials e^μ over a
//! weight lattice.
//!
//! Truncation is governed by a strictly positive functional φ on the
//! positive roots. Every series tracks two bounds: `ceil`, an upper bound
//! on φ over its *true* support, and `floor`, the φ-level down to which its
//! stored terms are exact (`None` meaning exact everywhere). Addition and
//! multiplication propagate both bounds, so no in-window term is ever
//! silently wrong: a product is exact wherever every contributing pair of
//! true terms was representable, which is `max(floor_a + ceil_b,
//! floor_b + ceil_a)`.
//!
//! Geometric inverses of the factors (1 ± e^{-α}) with φ(α) > 0 are the
//! only place terms are deliberately cut; they expand down to a requested
//! floor.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::lattice::{Family, LatticeError, Weight};
use crate::rat::{self, Rat};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SeriesError {
    FamilyMismatch,
    /// φ must be strictly positive on the expanded root
    NonPositivePhi(String),
    Lattice(LatticeError),
    /// the stored window is too shallow for the requested operation
    InsufficientDepth(String),
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::FamilyMismatch => write!(f, "series over different families"),
            SeriesError::NonPositivePhi(s) => write!(f, "phi must be positive: {s}"),
            SeriesError::Lattice(e) => write!(f, "{e}"),
            SeriesError::InsufficientDepth(s) => write!(f, "insufficient depth: {s}"),
        }
    }
}

impl From<LatticeError> for SeriesError {
    fn from(e: LatticeError) -> Self {
        SeriesError::Lattice(e)
    }
}

/// The truncation functional: rational values on the ε and δ coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Phi {
    family: Family,
    eps: Vec<Rat>,
    delta: Vec<Rat>,
}

impl Phi {
    pub fn new(family: Family, eps: Vec<Rat>, delta: Vec<Rat>) -> Result<Phi, SeriesError> {
        if eps.len() != family.eps_len() || delta.len() != family.delta_len() {
            return Err(SeriesError::Lattice(LatticeError::BadCoordinates(
                String::from("phi coordinate count does not match the family"),
            )));
        }
        Ok(Phi { family, eps, delta })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn value(&self, w: &Weight) -> Rat {
        let mut acc = Rat::zero();
        for (c, p) in w.eps().iter().zip(self.eps.iter()) {
            acc += c * p;
        }
        for (c, p) in w.delta().iter().zip(self.delta.iter()) {
            acc += c * p;
        }
        acc
    }

    /// max over all coordinate sign flips; bounds |φ| on the Weyl orbit of
    /// a weight.
    pub fn abs_bound(&self, w: &Weight) -> Rat {
        let mut acc = Rat::zero();
        for (c, p) in w.eps().iter().zip(self.eps.iter()) {
            acc += rat::abs(&(c * p));
        }
        for (c, p) in w.delta().iter().zip(self.delta.iter()) {
            acc += rat::abs(&(c * p));
        }
        acc
    }
}

/// A truncated formal sum of e^μ with integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    family: Family,
    terms: BTreeMap<Weight, i64>,
    /// exact for all μ with φ(μ) >= floor; None = exact everywhere
    floor: Option<Rat>,
    /// upper bound for φ over the true support
    ceil: Rat,
}

impl Series {
    pub fn zero(family: Family) -> Series {
        Series {
            family,
            terms: BTreeMap::new(),
            floor: None,
            ceil: Rat::zero(),
        }
    }

    pub fn monomial(w: Weight, coeff: i64, phi: &Phi) -> Series {
        let mut terms = BTreeMap::new();
        let ceil = phi.value(&w);
        if coeff != 0 {
            terms.insert(w.clone(), coeff);
        }
        Series {
            family: w.family(),
            terms,
            floor: None,
            ceil,
        }
    }

    pub fn one(family: Family) -> Series {
        let mut terms = BTreeMap::new();
        terms.insert(Weight::zero(family), 1);
        Series {
            family,
            terms,
            floor: None,
            ceil: Rat::zero(),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn terms(&self) -> &BTreeMap<Weight, i64> {
        &self.terms
    }

    pub fn floor(&self) -> Option<&Rat> {
        self.floor.as_ref()
    }

    pub fn ceil(&self) -> &Rat {
        &self.ceil
    }

    pub fn coeff(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// Swap in new coefficients while keeping the window bookkeeping.
    pub(crate) fn replace_terms(&mut self, terms: BTreeMap<Weight, i64>) {
        self.terms = terms;
    }

    pub fn is_zero_within_window(&self) -> bool {
        self.terms.is_empty()
    }

    fn merged_floor(a: &Option<Rat>, b: &Option<Rat>) -> Option<Rat> {
        match (a, b) {
            (None, None) => None,
            (Some(x), None) => Some(x.clone()),
            (None, Some(y)) => Some(y.clone()),
            (Some(x), Some(y)) => Some(if x > y { x.clone() } else { y.clone() }),
        }
    }

    fn prune(&mut self, phi: &Phi) {
        if let Some(f) = self.floor.clone() {
            self.terms.retain(|w, c| *c != 0 && phi.value(w) >= f);
        } else {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn add(&self, other: &Series, phi: &Phi) -> Result<Series, SeriesError> {
        if self.family != other.family {
            return Err(SeriesError::FamilyMismatch);
        }
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            *terms.entry(w.clone()).or_insert(0) += c;
        }
        let mut out = Series {
            family: self.family,
            terms,
            floor: Series::merged_floor(&self.floor, &other.floor),
            ceil: if self.ceil > other.ceil {
                self.ceil.clone()
            } else {
                other.ceil.clone()
            },
        };
        out.prune(phi);
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> Series {
        let mut out = self.clone();
        if c == 0 {
            out.terms.clear();
        } else {
            for v in out.terms.values_mut() {
                *v *= c;
            }
        }
        out
    }

    pub fn mul(&self, other: &Series, phi: &Phi) -> Result<Series, SeriesError> {
        if self.family != other.family {
            return Err(SeriesError::FamilyMismatch);
        }
        let floor = {
            let fa = self.floor.as_ref().map(|f| f + &other.ceil);
            let fb = other.floor.as_ref().map(|f| f + &self.ceil);
            Series::merged_floor(&fa, &fb)
        };
        let mut terms: BTreeMap<Weight, i64> = BTreeMap::new();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let w = wa.add(wb);
                if let Some(f) = &floor {
                    if &phi.value(&w) < f {
                        continue;
                    }
                }
                *terms.entry(w).or_insert(0) += ca * cb;
            }
        }
        let mut out = Series {
            family: self.family,
            terms,
            floor,
            ceil: &self.ceil + &other.ceil,
        };
        out.prune(phi);
        Ok(out)
    }

    /// Truncated expansion of (1 ± e^{-α})^{-1} as 1 ∓ e^{-α} + e^{-2α} ...
    /// down to the requested floor. Errors unless φ(α) > 0.
    pub fn geom_inverse(
        alpha: &Weight,
        plus: bool,
        floor: &Rat,
        phi: &Phi,
    ) -> Result<Series, SeriesError> {
        let step = phi.value(alpha);
        if step <= Rat::zero() {
            return Err(SeriesError::NonPositivePhi(format!(
                "phi(alpha) = {step} for the expanded factor"
            )));
        }
        let mut terms = BTreeMap::new();
        let mut exponent = Weight::zero(alpha.family());
        let mut level = Rat::zero();
        let mut sign = 1i64;
        while &level >= floor {
            terms.insert(exponent.clone(), sign);
            exponent = exponent.sub(alpha);
            level -= &step;
            if plus {
                sign = -sign;
            }
        }
        Ok(Series {
            family: alpha.family(),
            terms,
            floor: Some(floor.clone()),
            ceil: Rat::zero(),
        })
    }

    /// The factor (1 ± e^{-α}) itself.
    pub fn binomial(alpha: &Weight, plus: bool, phi: &Phi) -> Series {
        let family = alpha.family();
        let mut terms = BTreeMap::new();
        terms.insert(Weight::zero(family), 1);
        terms.insert(alpha.neg(), if plus { 1 } else { -1 });
        let mut ceil = Rat::zero();
        let down = phi.value(&alpha.neg());
        if down > ceil {
            ceil = down;
        }
        Series {
            family,
            terms,
            floor: None,
            ceil,
        }
    }

    /// Compare two series on the intersection of their exact windows.
    /// Errors when either window is empty of meaning (positive floor above
    /// both ceilings would compare nothing).
    pub fn agree_on_common_window(&self, other: &Series, phi: &Phi) -> Result<bool, SeriesError> {
        if self.family != other.family {
            return Err(SeriesError::FamilyMismatch);
        }
        let floor = Series::merged_floor(&self.floor, &other.floor);
        let within = |w: &Weight| match &floor {
            None => true,
            Some(f) => &phi.value(w) >= f,
        };
        for (w, c) in &self.terms {
            if within(w) && other.coeff(w) != *c {
                return Ok(false);
            }
        }
        for (w, c) in &other.terms {
            if within(w) && self.coeff(w) != *c {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{Weight, OSP22};
    use crate::rat::{rat, ratio};

    fn phi22() -> Phi {
        Phi::new(OSP22, alloc::vec![rat(1)], alloc::vec![rat(2)]).unwrap()
    }

    #[test]
    fn telescoping_inverse() {
        let phi = phi22();
        let alpha = Weight::delta_unit(OSP22, 0).sub(&Weight::eps_unit(OSP22, 0));
        let floor = rat(-20);
        let inv = Series::geom_inverse(&alpha, false, &floor, &phi).unwrap();
        let factor = Series::binomial(&alpha, false, &phi);
        let prod = factor.mul(&inv, &phi).unwrap();
        let one = Series::one(OSP22);
        assert!(prod.agree_on_common_window(&one, &phi).unwrap());
    }

    #[test]
    fn alternating_geometric_signs() {
        let phi = phi22();
        let alpha = Weight::delta_unit(OSP22, 0);
        let inv = Series::geom_inverse(&alpha, true, &rat(-8), &phi).unwrap();
        for m in 0..=4i64 {
            let w = alpha.scale(&rat(-m));
            assert_eq!(inv.coeff(&w), if m % 2 == 0 { 1 } else { -1 });
        }
        // truncated below the floor
        assert_eq!(inv.coeff(&alpha.scale(&rat(-5))), 0);
    }

    #[test]
    fn phi_must_be_positive_on_expanded_roots() {
        let phi = phi22();
        let alpha = Weight::eps_unit(OSP22, 0).sub(&Weight::delta_unit(OSP22, 0));
        assert!(matches!(
            Series::geom_inverse(&alpha, false, &rat(-5), &phi),
            Err(SeriesError::NonPositivePhi(_))
        ));
    }

    #[test]
    fn floors_propagate_through_products() {
        let phi = phi22();
        let alpha = Weight::delta_unit(OSP22, 0);
        let inv = Series::geom_inverse(&alpha, false, &rat(-6), &phi).unwrap();
        // multiply by a monomial of positive level: exactness shifts up
        let m = Series::monomial(Weight::delta_unit(OSP22, 0), 1, &phi);
        let shifted = m.mul(&inv, &phi).unwrap();
        assert_eq!(shifted.floor().unwrap(), &ratio(-4, 1));
        assert_eq!(shifted.ceil(), &rat(2));
    }

    #[test]
    fn self_inverse_of_the_full_denominator() {
        // product of (1-e^{-α})(1+e^{-β}) against its expanded inverse
        let phi = phi22();
        let a = Weight::delta_unit(OSP22, 0).scale(&rat(2));
        let b = Weight::delta_unit(OSP22, 0).add(&Weight::eps_unit(OSP22, 0));
        let floor = rat(-24);
        let dir = Series::binomial(&a, false, &phi)
            .mul(&Series::binomial(&b, true, &phi), &phi)
            .unwrap();
        let inv = Series::geom_inverse(&a, false, &floor, &phi)
            .unwrap()
            .mul(&Series::geom_inverse(&b, true, &floor, &phi).unwrap(), &phi)
            .unwrap();
        let prod = dir.mul(&inv, &phi).unwrap();
        assert!(prod
            .agree_on_common_window(&Series::one(OSP22), &phi)
            .unwrap());
    }
}
