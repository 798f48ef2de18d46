use jgl_core::catalog::rectangular_pair;
use jgl_core::flags::{flags_from_grading, grading_from_transversal, ModuleGrading};
use jgl_core::kernel::vector;
use jgl_core::liealg::tkk;
use jgl_core::{Matrix, Ring, Scalar, Subspace};
use proptest::prelude::*;

fn f5() -> Ring {
    Ring::prime(5).unwrap()
}

fn matrix(ring: Ring, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i64..4, rows * cols)
        .prop_map(move |xs| Matrix::from_ints(ring, rows, cols, &xs))
}

fn span(ring: Ring, n: usize) -> impl Strategy<Value = Subspace> {
    (0usize..=n)
        .prop_flat_map(move |k| matrix(ring, k, n))
        .prop_map(move |m| {
            if m.rows() == 0 {
                Subspace::zero(ring, n)
            } else {
                Subspace::row_space(&m)
            }
        })
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in matrix(Ring::prime(7).unwrap(), 3, 4)) {
        let (r, pivots) = m.rref();
        let (rr, pivots2) = r.rref();
        prop_assert_eq!(&rr, &r);
        prop_assert_eq!(pivots, pivots2);
        prop_assert_eq!(m.rank(), r.rank());
    }

    #[test]
    fn rref_over_q_is_idempotent(m in matrix(Ring::Rational, 3, 3)) {
        let (r, _) = m.rref();
        prop_assert_eq!(r.rref().0, r);
    }

    #[test]
    fn dimension_formula(u in span(f5(), 4), v in span(f5(), 4)) {
        let s = u.sum(&v).unwrap();
        let i = u.intersect(&v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        prop_assert!(s.contains_subspace(&u) && u.contains_subspace(&i));
    }

    #[test]
    fn annihilator_is_an_involution(u in span(f5(), 4)) {
        let a = u.annihilator();
        prop_assert_eq!(a.dim() + u.dim(), 4);
        prop_assert_eq!(a.annihilator(), u);
    }

    #[test]
    fn grading_round_trip(m in matrix(f5(), 4, 4), cut in 1usize..4) {
        prop_assume!(m.rank() == 4);
        let cols = m.col_vecs();
        let g = ModuleGrading::new(vec![
            Subspace::span(f5(), 4, &cols[..cut]),
            Subspace::span(f5(), 4, &cols[cut..]),
        ]).unwrap();
        let (fp, fm) = flags_from_grading(&g);
        prop_assert_eq!(grading_from_transversal(&fm, &fp).unwrap(), g);
    }

    #[test]
    fn exp_is_additive_on_the_top_block(a in prop::collection::vec(0i64..5, 4), b in prop::collection::vec(0i64..5, 4)) {
        let g = tkk(&rectangular_pair(2, 2, f5()).unwrap());
        let top = g.block_space(1).vectors();
        let comb = |c: &[i64]| {
            let mut v = vector::zeros(f5(), g.dim());
            for (ci, t) in c.iter().zip(&top) {
                vector::axpy(&mut v, f5().int(*ci), t);
            }
            v
        };
        let (x, y) = (comb(&a), comb(&b));
        let lhs = g.exp_ad(&x).unwrap().matrix.mul(&g.exp_ad(&y).unwrap().matrix);
        let rhs = g.exp_ad(&vector::add(&x, &y)).unwrap().matrix;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn scalar_parse_round_trips(n in -40i64..40, d in 1i64..12) {
        let q = Ring::Rational.ratio(n, d);
        prop_assert_eq!(Ring::Rational.parse_scalar(&q.to_string()).unwrap(), q);
        let s: Scalar = f5().int(n);
        prop_assert_eq!(f5().parse_scalar(&s.to_string()).unwrap(), s);
    }
}
