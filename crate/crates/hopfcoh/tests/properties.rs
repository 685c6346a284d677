//! Property tests for the algebraic invariants: bilinearity, two-sided
//! inverses, solver round trips, and the cocycle action being a right
//! action.

use proptest::prelude::*;

use hopfcoh::cohomology::{cocycle_action, Cohomology, Diagram};
use hopfcoh::enumerate::Limits;
use hopfcoh::matrix::{vec_add, vec_scale, Matrix, SolveOutcome};
use hopfcoh::{Algebra, ComoduleAlgebra, Element, Field, Hopf, Scalar};

fn coords(p: u64, dim: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec(0..p, dim)
        .prop_map(|v| v.into_iter().map(Scalar::Fp).collect())
}

fn h4(p: u64) -> Algebra {
    Hopf::sweedler(Field::prime(p).unwrap()).unwrap().algebra().clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_bilinear(
        a in coords(5, 4),
        a2 in coords(5, 4),
        b in coords(5, 4),
        s in 0u64..5,
    ) {
        let alg = h4(5);
        let f = alg.field().clone();
        let x = alg.element(a);
        let x2 = alg.element(a2);
        let y = alg.element(b);
        let s = Scalar::Fp(s);
        // (x + s·x2)·y = x·y + s·(x2·y)
        let lhs = alg.mul(&alg.add(&x, &alg.scale(&x2, &s)), &y).unwrap();
        let rhs = alg.add(
            &alg.mul(&x, &y).unwrap(),
            &alg.scale(&alg.mul(&x2, &y).unwrap(), &s),
        );
        prop_assert_eq!(lhs, rhs);
        let _ = f;
    }

    #[test]
    fn inverse_is_an_involution(a in coords(3, 4)) {
        let alg = h4(3);
        let x = alg.element(a);
        if let Ok(inv) = alg.try_inverse(&x) {
            let back = alg.try_inverse(&inv).unwrap();
            prop_assert_eq!(back, x);
        }
    }

    #[test]
    fn solver_roundtrip(
        entries in proptest::collection::vec(0u64..5, 12),
        rhs in proptest::collection::vec(0u64..5, 3),
        params in proptest::collection::vec(0u64..5, 4),
    ) {
        let f = Field::prime(5).unwrap();
        let m = Matrix::from_fn(&f, 3, 4, |i, j| Scalar::Fp(entries[i * 4 + j]));
        let b: Vec<Scalar> = rhs.into_iter().map(Scalar::Fp).collect();
        match m.solve(&f, &b).unwrap() {
            SolveOutcome::Solved { particular, kernel } => {
                // particular plus any kernel combination still solves
                let mut x = particular;
                for (t, k) in params.iter().zip(&kernel) {
                    x = vec_add(&f, &x, &vec_scale(&f, k, &Scalar::Fp(*t)));
                }
                prop_assert_eq!(m.apply(&f, &x), b);
            }
            SolveOutcome::Unsolvable => {
                // rank certificate: augmenting must increase the rank
                let mut aug = Matrix::zeros(&f, 3, 5);
                for i in 0..3 {
                    for j in 0..4 {
                        aug[(i, j)] = m[(i, j)].clone();
                    }
                    aug[(i, 4)] = b[i].clone();
                }
                prop_assert!(aug.rank(&f) > m.rank(&f));
            }
        }
    }

    #[test]
    fn square_inverse_agrees_with_rank(entries in proptest::collection::vec(0u64..7, 9)) {
        let f = Field::prime(7).unwrap();
        let m = Matrix::from_fn(&f, 3, 3, |i, j| Scalar::Fp(entries[i * 3 + j]));
        match m.inverse(&f).unwrap() {
            Some(inv) => {
                prop_assert_eq!(m.rank(&f), 3);
                prop_assert_eq!(m.mul(&f, &inv), Matrix::identity(&f, 3));
                prop_assert_eq!(inv.mul(&f, &m), Matrix::identity(&f, 3));
            }
            None => prop_assert!(m.rank(&f) < 3),
        }
    }
}

#[test]
fn cocycle_action_is_a_right_action() {
    // exhaustive at this scale: every cocycle against every unit pair
    let limits = Limits::default();
    let diag = Diagram::build(ComoduleAlgebra::dual_numbers(Field::prime(3).unwrap()).unwrap())
        .unwrap();
    let coh = Cohomology::compute(&diag, &limits).unwrap();
    let units = diag.level0.units(&limits).unwrap();
    let unit1: Element = diag.level0.unit();
    for x in &coh.z1 {
        assert_eq!(cocycle_action(&diag, x, &unit1, &limits).unwrap(), *x);
        for a in &units {
            for b in &units {
                let ab = diag.level0.mul(a, b).unwrap();
                let one_step = cocycle_action(&diag, x, &ab, &limits).unwrap();
                let via_a = cocycle_action(&diag, x, a, &limits).unwrap();
                let two_step = cocycle_action(&diag, &via_a, b, &limits).unwrap();
                assert_eq!(one_step, two_step);
                // the action stays inside the cocycle set
                assert!(coh.z1.binary_search(&one_step).is_ok());
            }
        }
    }
}
