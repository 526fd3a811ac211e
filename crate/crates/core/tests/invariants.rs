//! Property tests for the algebraic invariants.

use proptest::prelude::*;
use qgrass_core::bialgebra::{GlStar, LieBialgebra, LieElt};
use qgrass_core::coeffs::{q_int, Laurent, LocScalar, QConv, QSeries, Scalar};
use qgrass_core::completion::Completion;
use qgrass_core::drinfeld::poisson_axioms;
use qgrass_core::hopf::QuantumMatrix;
use qgrass_core::ncalg::{Gen, NCPoly, Word};

fn laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::vec((-3i32..=3, -4i64..=4), 0..4)
        .prop_map(|t| Laurent::from_terms(t.into_iter().map(|(k, c)| (k, q_int(c)))))
}

fn loc() -> impl Strategy<Value = LocScalar> {
    (laurent(), 0u32..=2).prop_map(|(l, d)| LocScalar::new(l, d))
}

fn poly(ngen: Gen, max_len: usize) -> impl Strategy<Value = NCPoly<LocScalar>> {
    prop::collection::vec(
        (prop::collection::vec(0..ngen, 0..=max_len), laurent()),
        0..4,
    )
    .prop_map(|terms| {
        NCPoly::from_terms(
            terms
                .into_iter()
                .map(|(w, c)| (Word::from_slice(&w), LocScalar::from_laurent(c))),
        )
    })
}

fn lie3() -> impl Strategy<Value = LieElt> {
    prop::collection::vec(((1usize..=3, 1usize..=3), -3i64..=3), 0..4)
        .prop_map(|t| LieElt::from_terms(t.into_iter().map(|(b, c)| (b, q_int(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn localized_scalars_form_a_ring(a in loc(), b in loc(), c in loc()) {
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
        prop_assert_eq!(a.times(&b), b.times(&a));
        prop_assert_eq!(a.invert_q().invert_q(), a.clone());
        prop_assert!(a.minus(&a).is_zero());
    }

    #[test]
    fn series_expansion_is_multiplicative(a in laurent(), b in laurent()) {
        let n = 4;
        let e = |l: &Laurent| QSeries::from_laurent(l, n);
        prop_assert_eq!(e(&a.times(&b)), e(&a).times(&e(&b)));
        prop_assert_eq!(e(&a.plus(&b)), e(&a).plus(&e(&b)));
    }

    #[test]
    fn normal_form_is_idempotent_and_product_associative(
        a in poly(4, 3), b in poly(4, 2), c in poly(4, 2)
    ) {
        let m = QuantumMatrix::new(2, QConv::Standard).unwrap();
        let na = m.nf(&a);
        prop_assert_eq!(m.nf(&na), na.clone());
        prop_assert_eq!(m.mul(&m.mul(&a, &b), &c), m.mul(&a, &m.mul(&b, &c)));
        prop_assert_eq!(m.nf(&a.free_mul(&b)), m.mul(&a, &b));
    }

    #[test]
    fn coproduct_is_multiplicative_and_counital(a in poly(4, 2), b in poly(4, 2)) {
        let m = QuantumMatrix::new(2, QConv::Standard).unwrap();
        let p = m.pres();
        let lhs = m.coproduct(&m.mul(&a, &b));
        let rhs = m.coproduct(&a).mul(&m.coproduct(&b), p, p);
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(m.counit_left(&m.coproduct(&a)), m.nf(&a));
        prop_assert_eq!(m.counit_right(&m.coproduct(&a)), m.nf(&a));
    }

    #[test]
    fn determinant_commutes_with_everything(a in poly(9, 2)) {
        let m = QuantumMatrix::new(3, QConv::Inverted).unwrap();
        prop_assert!(m.commutator(&m.quantum_determinant(), &a).is_zero());
    }

    #[test]
    fn glstar_bracket_is_a_lie_bracket(x in lie3(), y in lie3(), z in lie3()) {
        let g = GlStar::new(3).unwrap();
        prop_assert_eq!(g.bracket(&x, &y), g.bracket(&y, &x).scale(&q_int(-1)));
        let jac = g.bracket(&x, &g.bracket(&y, &z))
            .plus(&g.bracket(&y, &g.bracket(&z, &x)))
            .plus(&g.bracket(&z, &g.bracket(&x, &y)));
        prop_assert!(jac.is_zero());
    }

    #[test]
    fn poisson_axioms_hold(seed in any::<u64>()) {
        let m = QuantumMatrix::new(2, QConv::Standard).unwrap();
        prop_assert!(poisson_axioms(&m, seed).unwrap().passed());
    }

    #[test]
    fn truncated_products_are_coherent(a in poly(4, 2), b in poly(4, 2)) {
        let hi = Completion::new(2, QConv::Standard, 3).unwrap();
        let lo = Completion::new(2, QConv::Standard, 2).unwrap();
        let (ah, bh) = (hi.embed(&a).unwrap(), hi.embed(&b).unwrap());
        let (al, bl) = (lo.embed(&a).unwrap(), lo.embed(&b).unwrap());
        prop_assert_eq!(hi.mul(&ah, &bh).truncate(2), lo.mul(&al, &bl));
    }

    #[test]
    fn completed_coproduct_is_multiplicative(a in poly(4, 2), b in poly(4, 1)) {
        let c = Completion::new(2, QConv::Standard, 3).unwrap();
        let (x, y) = (c.embed(&a).unwrap(), c.embed(&b).unwrap());
        let lhs = c.coproduct_completed(&c.mul(&x, &y));
        let rhs = c.tensor_mul(&c.coproduct_completed(&x), &c.coproduct_completed(&y));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(c.counit_left(&c.coproduct_completed(&x)), c.mul(&c.one(), &x));
    }
}
