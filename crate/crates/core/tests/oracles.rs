//! Fixed values checked against closed forms or hand computation.

use jgl_core::catalog::{gl_3graded, rectangular_pair, sl2};
use jgl_core::geom::{GrassGeometry, PairGeometry};
use jgl_core::kernel::subspace::gaussian_binomial;
use jgl_core::kernel::Method;
use jgl_core::liealg::{sl2_match, tkk};
use jgl_core::{Matrix, Ring, Subspace};

fn f5() -> Ring {
    Ring::prime(5).unwrap()
}

fn q_binomial(n: u32, k: u32, q: u128) -> u128 {
    let num: u128 = (0..k).map(|i| q.pow(n - i) - 1).product();
    let den: u128 = (0..k).map(|i| q.pow(i + 1) - 1).product();
    num / den
}

#[test]
fn grassmannian_counts() {
    for (n, k, p) in [(4u32, 2u32, 5u32), (3, 1, 5), (4, 1, 7), (5, 2, 5)] {
        let ring = Ring::prime(p).unwrap();
        let expected = q_binomial(n, k, p as u128);
        assert_eq!(gaussian_binomial(n, k, p as u128), expected);
        assert_eq!(
            Subspace::enumerate(ring, n as usize, k as usize).len() as u128,
            expected
        );
    }
    assert_eq!(q_binomial(4, 2, 5), 806);
}

#[test]
fn gras2_f5_4_sizes() {
    let g = GrassGeometry::new(f5(), 4, 2).unwrap();
    assert_eq!(g.points(1_000_000).unwrap().len(), 806);
    assert_eq!(g.duals(1_000_000).unwrap().len(), 806);
    assert_eq!(g.chart_dim(), 4);
    let points = g.points(1_000_000).unwrap();
    let a = &g.duals(1_000_000).unwrap()[0];
    // An affine chart of Gras_2(F_5^4) is F_5^{2x2}.
    assert_eq!(points.iter().filter(|x| g.transversal(x, a)).count(), 625);
}

#[test]
fn rational_determinant_and_inverse() {
    let q = Ring::Rational;
    let m = Matrix::from_ints(q, 2, 2, &[2, 1, 7, 4]);
    assert_eq!(m.det(), q.int(1));
    assert_eq!(
        m.inverse().unwrap(),
        Matrix::from_ints(q, 2, 2, &[4, -1, -7, 2])
    );
    let s = Matrix::from_ints(q, 2, 2, &[1, 2, 2, 4]);
    assert_eq!(s.rank(), 1);
    assert!(s.inverse().is_none());
    assert_eq!(
        Matrix::from_ints(q, 2, 2, &[1, 2, 3, 4])
            .inverse()
            .unwrap()
            .get(0, 0),
        q.int(-2)
    );
    assert_eq!(
        Matrix::from_ints(q, 2, 2, &[1, 2, 3, 4])
            .inverse()
            .unwrap()
            .get(1, 0),
        q.ratio(3, 2)
    );
}

#[test]
fn prime_field_arithmetic() {
    let r = f5();
    assert_eq!(r.int(2).inv().unwrap(), r.int(3));
    assert_eq!(r.int(7), r.int(2));
    assert_eq!(
        r.parse_scalar("3").unwrap(),
        r.int(1) * r.int(2).inv().unwrap()
    );
    assert!(r.parse_scalar("1/0").is_err());
    assert!(r.parse_scalar("7").is_err());
    assert!(Ring::Rational.parse_scalar("1/0").is_err());
    assert!(Ring::prime(3).is_err());
}

#[test]
fn tkk_dimensions_are_sl_n() {
    for (a, b) in [(1, 1), (1, 2), (2, 2)] {
        let g = tkk(&rectangular_pair(a, b, Ring::Rational).unwrap());
        assert_eq!(g.dim(), (a + b) * (a + b) - 1, "rectangular({a},{b})");
        assert!(g.verify_lie().unwrap().passed());
    }
    assert!(sl2_match(&tkk(&rectangular_pair(1, 1, f5()).unwrap())).is_some());
    assert_eq!(sl2(f5()).dim(), 3);
    assert_eq!(gl_3graded(1, 2, f5()).unwrap().dim(), 9);
}

#[test]
fn rectangular_pairs_satisfy_the_axioms() {
    for (a, b) in [(1, 1), (1, 3), (2, 2)] {
        let p = rectangular_pair(a, b, f5()).unwrap();
        assert_eq!(p.dims(), (a * b, a * b));
        assert!(
            p.verify(Method::Basis).unwrap().passed(),
            "rectangular({a},{b})"
        );
    }
}
