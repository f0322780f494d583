//! Characters of the rank-one blocks as truncated exponential sums.
//!
//! The Euler character attached to a block diagram ν is
//!
//! ```text
//! E_ν = R⁻¹ e^{-ρ} Σ_{w ∈ W} sgn(w) w( e^{ν+ρ} / Π_{α ∈ Δ₁⁺(l_ν)} (1 + e^{-α}) )
//! ```
//!
//! with R the Weyl denominator and the product running over the odd
//! positive roots of the Levi attached to ν's tail (empty for tail 0; the
//! whole odd positive system at tail 1, which is the largest tail at rank
//! one). Simple characters are recovered as the bipartition-signed
//! combination of Euler characters whose coefficients are the increasing
//! path counts of the relabeled block graph; all coefficients of the result
//! must come out nonnegative, which the code verifies.
//!
//! The truncation functional φ defaults to φ(ε₁) = 1, φ(δ₁) = 2 for
//! osp(2|2) and φ(ε₁) = 3, φ(δ₁) = 1 for osp(3|2); constructors validate
//! its positivity on the stored positive roots.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::diagram::{DiagramError, Sign, WeightDiagram};
use crate::gamma::{self, BlockSpec, GammaError};
use crate::lattice::{Family, LatticeError, RootDatum, Weight, WeylElement, OSP22, OSP32};
use crate::rat::{self, Rat};
use crate::series::{Phi, Series, SeriesError};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CharError {
    Unsupported(String),
    Series(SeriesError),
    Lattice(LatticeError),
    Diagram(DiagramError),
    Gamma(GammaError),
    /// a window coefficient forced to be a dimension came out negative
    NegativeCoefficient(String),
    NotWInvariant(String),
    InsufficientDepth(String),
    BadIndex(String),
}

impl fmt::Display for CharError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharError::Unsupported(s) => write!(f, "unsupported: {s}"),
            CharError::Series(e) => write!(f, "{e}"),
            CharError::Lattice(e) => write!(f, "{e}"),
            CharError::Diagram(e) => write!(f, "{e}"),
            CharError::Gamma(e) => write!(f, "{e}"),
            CharError::NegativeCoefficient(s) => {
                write!(f, "negative coefficient in a character: {s}")
            }
            CharError::NotWInvariant(s) => write!(f, "character not Weyl-invariant: {s}"),
            CharError::InsufficientDepth(s) => write!(f, "insufficient depth: {s}"),
            CharError::BadIndex(s) => write!(f, "bad block index: {s}"),
        }
    }
}

impl From<SeriesError> for CharError {
    fn from(e: SeriesError) -> Self {
        CharError::Series(e)
    }
}

impl From<LatticeError> for CharError {
    fn from(e: LatticeError) -> Self {
        CharError::Lattice(e)
    }
}

impl From<DiagramError> for CharError {
    fn from(e: DiagramError) -> Self {
        CharError::Diagram(e)
    }
}

impl From<GammaError> for CharError {
    fn from(e: GammaError) -> Self {
        CharError::Gamma(e)
    }
}

/// Root data, Weyl elements and truncation functional of a rank-one family.
pub struct CharContext {
    family: Family,
    datum: RootDatum,
    weyl: Vec<WeylElement>,
    phi: Phi,
}

impl CharContext {
    pub fn new(family: Family) -> Result<CharContext, CharError> {
        let (eps_phi, delta_phi) = match family {
            f if f == OSP22 => (rat::rat(1), rat::rat(2)),
            f if f == OSP32 => (rat::rat(3), rat::rat(1)),
            other => {
                return Err(CharError::Unsupported(format!(
                    "character engine carries data for osp(2|2) and osp(3|2) only, not {other}"
                )))
            }
        };
        let phi = Phi::new(family, alloc::vec![eps_phi], alloc::vec![delta_phi])?;
        CharContext::with_phi(family, phi)
    }

    /// Custom truncation functional; must be strictly positive on the
    /// stored positive roots.
    pub fn with_phi(family: Family, phi: Phi) -> Result<CharContext, CharError> {
        let datum = RootDatum::new(family);
        for (root, _) in datum.positive_roots() {
            if phi.value(root) <= Rat::zero() {
                return Err(CharError::Series(SeriesError::NonPositivePhi(format!(
                    "phi is not positive on the positive root with eps {:?}",
                    root.eps()
                ))));
            }
        }
        let weyl = datum.weyl_elements()?;
        Ok(CharContext {
            family,
            datum,
            weyl,
            phi,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn phi(&self) -> &Phi {
        &self.phi
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    /// The diagram of the s-th simple module of the principal block:
    /// signed |s| for osp(2|2) (s ranges over all integers), the fork index
    /// for osp(3|2) (s >= 0).
    pub fn lambda_diagram(&self, s: i64) -> Result<WeightDiagram, CharError> {
        let d = if self.family == OSP22 {
            let sign = match s.signum() {
                0 => None,
                1 => Some(Sign::Plus),
                _ => Some(Sign::Minus),
            };
            WeightDiagram::new(self.family, alloc::vec![s.unsigned_abs() as u32], sign)?
        } else {
            match s {
                0 => WeightDiagram::parse("-x", self.family)?,
                1 => WeightDiagram::parse("+x", self.family)?,
                s if s > 1 => WeightDiagram::new(self.family, alloc::vec![s as u32 - 1], None)?,
                _ => {
                    return Err(CharError::BadIndex(format!(
                        "osp(3|2) block indices start at 0, got {s}"
                    )))
                }
            }
        };
        Ok(d)
    }
}

pub struct EulerCharacter {
    pub label: WeightDiagram,
    pub value: Series,
}

/// E_ν exact down to φ(ν) - depth.
pub fn euler_character(
    ctx: &CharContext,
    f: &WeightDiagram,
    depth: u32,
) -> Result<EulerCharacter, CharError> {
    let nu = f.weight();
    let floor = ctx.phi.value(&nu) - rat::rat(i64::from(depth));
    let value = euler_series(ctx, f, &floor)?;
    Ok(EulerCharacter {
        label: f.clone(),
        value,
    })
}

/// The Euler series of ν, exact down to the given absolute φ-level.
fn euler_series(ctx: &CharContext, f: &WeightDiagram, floor: &Rat) -> Result<Series, CharError> {
    let family = ctx.family;
    let phi = &ctx.phi;
    let nu = f.weight();
    let rho = ctx.datum.rho().clone();
    let nu_rho = nu.add(&rho);
    // odd positive roots of the Levi attached to the tail
    let levi_odd: Vec<Weight> = match f.tail() {
        0 => Vec::new(),
        1 if f.k() == 1 => ctx.datum.odd_positive_roots().cloned().collect(),
        t => {
            return Err(CharError::Unsupported(format!(
                "tail {t} needs Levi root data beyond rank one"
            )))
        }
    };
    // geometric factors must reach low enough that the final window still
    // covers the requested floor after the monomial lifts
    let lift = phi.abs_bound(&nu_rho) + phi.abs_bound(&rho);
    let geom_floor = floor - &lift;

    // R^{-1} = Π_odd (1 + e^{-α}) * Π_even (1 - e^{-α})^{-1}
    let mut r_inv = Series::one(family);
    for alpha in ctx.datum.odd_positive_roots() {
        r_inv = r_inv.mul(&Series::binomial(alpha, true, phi), phi)?;
    }
    for alpha in ctx.datum.even_positive_roots() {
        let g = Series::geom_inverse(alpha, false, &geom_floor, phi)?;
        r_inv = r_inv.mul(&g, phi)?;
    }

    let mut acc = Series::zero(family);
    for w in &ctx.weyl {
        let mut summand = Series::monomial(w.apply(&nu_rho), i64::from(w.det), phi);
        for alpha in &levi_odd {
            let beta = w.apply(alpha);
            if phi.value(&beta) > Rat::zero() {
                summand =
                    summand.mul(&Series::geom_inverse(&beta, true, &geom_floor, phi)?, phi)?;
            } else {
                // (1 + e^{-β})^{-1} = e^{β} (1 + e^{β})^{-1} when φ(β) < 0
                let minus_beta = beta.neg();
                summand = summand.mul(&Series::monomial(beta, 1, phi), phi)?;
                summand = summand.mul(
                    &Series::geom_inverse(&minus_beta, true, &geom_floor, phi)?,
                    phi,
                )?;
            }
        }
        acc = acc.add(&summand, phi)?;
    }

    let e_minus_rho = Series::monomial(rho.neg(), 1, phi);
    let out = acc.mul(&e_minus_rho, phi)?.mul(&r_inv, phi)?;
    match out.floor() {
        Some(f) if f > floor => Err(CharError::InsufficientDepth(format!(
            "window reaches {f}, requested {floor}"
        ))),
        _ => Ok(out),
    }
}

/// ch L(λ_s), exact down to φ(λ_s) - depth: the pari-signed combination of
/// Euler series with the increasing-path counts as coefficients. Verifies
/// nonnegativity and Weyl invariance of the window.
pub fn simple_character(ctx: &CharContext, s: i64, depth: u32) -> Result<Series, CharError> {
    let lambda = ctx.lambda_diagram(s)?;
    let k = lambda.k();
    let spec = BlockSpec::new(ctx.family, lambda.max_coord().max(k)).map_err(CharError::Gamma)?;
    let coeffs = gamma::coefficients_dless(&spec, &lambda)?;
    let floor = ctx.phi.value(&lambda.weight()) - rat::rat(i64::from(depth));
    let mut acc = Series::zero(ctx.family);
    let lambda_pari = lambda.pari();
    for (id, count) in &coeffs {
        let nu = WeightDiagram::parse(id, ctx.family)?;
        let sign = (lambda_pari * nu.pari()).value();
        let term = euler_series(ctx, &nu, &floor)?.scale(sign * count);
        acc = acc.add(&term, &ctx.phi)?;
    }
    for (w, c) in acc.terms() {
        if *c < 0 {
            return Err(CharError::NegativeCoefficient(format!(
                "coefficient {c} at a weight with eps {:?}",
                w.eps()
            )));
        }
    }
    check_w_invariance(ctx, &acc)?;
    Ok(acc)
}

/// Terms whose whole Weyl orbit lies in the window must have constant
/// coefficient along the orbit.
fn check_w_invariance(ctx: &CharContext, s: &Series) -> Result<(), CharError> {
    let phi = &ctx.phi;
    for (w, c) in s.terms() {
        for el in &ctx.weyl {
            let img = el.apply(w);
            let in_window = match s.floor() {
                None => true,
                Some(f) => &phi.value(&img) >= f,
            };
            if in_window && s.coeff(&img) != *c {
                return Err(CharError::NotWInvariant(format!(
                    "coefficient {c} breaks at the orbit of a weight with eps {:?}",
                    w.eps()
                )));
            }
        }
    }
    Ok(())
}

/// The supercharacter involution: e^μ picks up (-1)^parity(μ). Errors on
/// non-integral δ-coordinates.
pub fn supercharacter(s: &Series) -> Result<Series, CharError> {
    let mut terms: BTreeMap<Weight, i64> = BTreeMap::new();
    for (w, c) in s.terms() {
        let p = w.parity()?;
        terms.insert(w.clone(), if p == 0 { *c } else { -c });
    }
    Ok(rebuild_with_terms(s, terms))
}

fn rebuild_with_terms(template: &Series, terms: BTreeMap<Weight, i64>) -> Series {
    // same window, new coefficients
    let mut out = template.clone();
    out.replace_terms(terms);
    out
}

/// The signed coefficient sum: the value of the supercharacter at the zero
/// locus, i.e. the superdimension when the series is a complete character.
/// Errors when the window provably does not cover the full support.
pub fn sdim(ctx: &CharContext, s: &Series) -> Result<i64, CharError> {
    if let Some(floor) = s.floor() {
        let mut needed = Rat::zero();
        for w in s.terms().keys() {
            let bound = -ctx.phi.abs_bound(w);
            if bound < needed {
                needed = bound;
            }
        }
        if floor > &needed {
            return Err(CharError::InsufficientDepth(format!(
                "window floor {floor} sits above the reflected support bound {needed}"
            )));
        }
    }
    let mut acc: i64 = 0;
    for (w, c) in s.terms() {
        let p = w.parity()?;
        acc += if p == 0 { *c } else { -c };
    }
    Ok(acc)
}
