//! Cross-module consistency: the analytic superdimensions computed by the
//! character engine must match the combinatorial multiplicity records of
//! the reduction-functor engine, block index by block index.

use dsblock_core::charring::{self, CharContext};
use dsblock_core::dsblocks::{ds_multiplicity, BlockShape};
use dsblock_core::lattice::{OSP22, OSP32};

/// sdim ch L(λ_j) = copies * (-1)^(pi power): the functor preserves
/// superdimension and the ground module of both rank-one principal blocks
/// is the even line.
#[test]
fn sdim_matches_the_multiplicity_records() {
    let ctx = CharContext::new(OSP32).unwrap();
    for j in 0..=4i64 {
        let rec = ds_multiplicity(BlockShape::DInf, j).unwrap();
        let predicted = i64::from(rec.copies)
            * if rec.pi_power.is_multiple_of(2) {
                1
            } else {
                -1
            };
        let depth = 12 + 8 * j as u32;
        let ch = charring::simple_character(&ctx, j, depth).unwrap();
        assert_eq!(
            charring::sdim(&ctx, &ch).unwrap(),
            predicted,
            "osp(3|2) j={j}"
        );
    }

    let ctx = CharContext::new(OSP22).unwrap();
    for s in -4i64..=4 {
        let rec = ds_multiplicity(BlockShape::AInfInf, s).unwrap();
        let predicted = i64::from(rec.copies)
            * if rec.pi_power.is_multiple_of(2) {
                1
            } else {
                -1
            };
        let depth = 12 + 8 * s.unsigned_abs() as u32;
        let ch = charring::simple_character(&ctx, s, depth).unwrap();
        assert_eq!(
            charring::sdim(&ctx, &ch).unwrap(),
            predicted,
            "osp(2|2) s={s}"
        );
    }
}

/// The graph-side bipartition of a block vertex agrees with the
/// parity-shift record of the module at the same chain position.
#[test]
fn graph_pari_matches_record_pari() {
    let ctx = CharContext::new(OSP32).unwrap();
    for j in 0..=5i64 {
        let d = ctx.lambda_diagram(j).unwrap();
        let rec = ds_multiplicity(BlockShape::DInf, j).unwrap();
        assert_eq!(d.pari(), rec.pari(), "osp(3|2) j={j}");
    }
    let ctx = CharContext::new(OSP22).unwrap();
    for s in -5i64..=5 {
        let d = ctx.lambda_diagram(s).unwrap();
        let rec = ds_multiplicity(BlockShape::AInfInf, s).unwrap();
        assert_eq!(d.pari(), rec.pari(), "osp(2|2) s={s}");
    }
}
