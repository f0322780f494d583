//! Property tests for the form and the dominance order.

use proptest::prelude::*;

use dsblock_core::diagram::WeightDiagram;
use dsblock_core::lattice::{Family, RootDatum, Weight};
use dsblock_core::rat::{ratio, Rat};

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| ratio(n, d))
}

fn assemble(family: Family, pool: &[Rat], offset: usize) -> Weight {
    let ne = family.eps_len();
    let nd = family.delta_len();
    let eps = pool[offset..offset + ne].to_vec();
    let delta = pool[offset + ne..offset + ne + nd].to_vec();
    Weight::new(family, eps, delta).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2500))]

    /// Symmetry and bilinearity of the form over random rational weights
    /// (four families x 2500 cases covers 10^4 pairs).
    #[test]
    fn inner_form_symmetric_bilinear(
        idx in 0usize..4,
        pool in proptest::collection::vec(rat_strategy(), 15),
        a in rat_strategy(),
        b in rat_strategy(),
    ) {
        let family = [
            Family::osp(0, 2).unwrap(),
            Family::osp(1, 1).unwrap(),
            Family::osp(2, 2).unwrap(),
            Family::Gl11,
        ][idx];
        let width = family.eps_len() + family.delta_len();
        let u = assemble(family, &pool, 0);
        let v = assemble(family, &pool, width);
        let w = assemble(family, &pool, 2 * width);
        // symmetry
        prop_assert_eq!(u.inner(&v).unwrap(), v.inner(&u).unwrap());
        // bilinearity: (a u + b v | w) = a (u|w) + b (v|w)
        let lhs = u.scale(&a).add(&v.scale(&b)).inner(&w).unwrap();
        let rhs = u.inner(&w).unwrap() * &a + v.inner(&w).unwrap() * &b;
        prop_assert_eq!(lhs, rhs);
    }
}

/// The dominance order is reflexive, antisymmetric and transitive on every
/// principal-block truncation with crosses at most 6, k at most 3.
#[test]
fn dominance_is_a_partial_order() {
    for t in 0..=2u8 {
        for k in 1..=3u32 {
            let family = Family::osp(t, k).unwrap();
            let rd = RootDatum::new(family);
            let weights: Vec<Weight> = WeightDiagram::enumerate_block(family, 6)
                .unwrap()
                .iter()
                .map(WeightDiagram::weight)
                .collect();
            let n = weights.len();
            let mut leq = vec![vec![false; n]; n];
            for i in 0..n {
                for j in 0..n {
                    leq[i][j] = rd.dominance_leq(&weights[i], &weights[j]);
                }
            }
            for i in 0..n {
                assert!(leq[i][i], "reflexivity t={t} k={k}");
                for j in 0..n {
                    if i != j && leq[i][j] {
                        assert!(!leq[j][i], "antisymmetry t={t} k={k} ({i},{j})");
                    }
                    for l in 0..n {
                        if leq[i][j] && leq[j][l] {
                            assert!(leq[i][l], "transitivity t={t} k={k} ({i},{j},{l})");
                        }
                    }
                }
            }
        }
    }
}
