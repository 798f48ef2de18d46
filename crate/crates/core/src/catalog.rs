//! Example Jordan pairs and graded Lie algebras.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{invalid, Error, Result};
use crate::jordan::JordanPair;
use crate::kernel::{Matrix, MultilinearMap, Ring, Scalar};
use crate::liealg::{GradedLieAlgebra, Grading};

/// Largest total pair dimension the catalog will build.
pub const MAX_PAIR_DIM: usize = 32;

fn as_matrix(ring: Ring, rows: usize, cols: usize, v: &[Scalar]) -> Matrix {
    Matrix::new(ring, rows, cols, v.to_vec())
}

/// `XYZ + ZYX` on `a×b` matrices (outer slots) and `b×a` matrices.
fn xyz_zyx(ring: Ring, a: usize, b: usize) -> MultilinearMap {
    MultilinearMap::from_closed_form(ring, &[a * b, b * a, a * b], a * b, |v| {
        let x = as_matrix(ring, a, b, &v[0]);
        let y = as_matrix(ring, b, a, &v[1]);
        let z = as_matrix(ring, a, b, &v[2]);
        x.mul(&y).mul(&z).add(&z.mul(&y).mul(&x)).into_data()
    })
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_PAIR_DIM {
        return Err(invalid(format!(
            "total pair dimension {n} exceeds {MAX_PAIR_DIM}"
        )));
    }
    Ok(())
}

/// `(Hom(B, A), Hom(A, B))`: row-major `a×b` and `b×a` matrices.
pub fn rectangular_pair(a: usize, b: usize, ring: Ring) -> Result<JordanPair> {
    if a == 0 || b == 0 {
        return Err(invalid("ranks must be at least 1"));
    }
    check_size(2 * a * b)?;
    JordanPair::new(xyz_zyx(ring, a, b), xyz_zyx(ring, b, a))
}

pub fn associative_pair(n: usize, ring: Ring) -> Result<JordanPair> {
    rectangular_pair(n, n, ring)
}

/// Basis of `{X : Xᵀ = sign·X}`: indices `(i, j)` with `i ≤ j` (`i < j` in
/// the skew case), coordinate = entry `(i, j)`.
fn symmetric_basis(n: usize, sign: i8) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            if i < j || sign > 0 {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn hermitian_pair(n: usize, sign: i8, ring: Ring) -> Result<JordanPair> {
    if sign != 1 && sign != -1 {
        return Err(invalid("sign must be +1 or -1"));
    }
    let basis = symmetric_basis(n, sign);
    if basis.is_empty() {
        return Err(invalid("the skew-symmetric 1x1 matrices are zero"));
    }
    check_size(2 * basis.len())?;
    let d = basis.len();
    let s = ring.int(sign as i64);
    let embed = |v: &[Scalar]| {
        let mut m = Matrix::zeros(ring, n, n);
        for (k, &(i, j)) in basis.iter().enumerate() {
            m.set(i, j, m.get(i, j) + v[k]);
            if i != j {
                m.set(j, i, m.get(j, i) + s * v[k]);
            }
        }
        m
    };
    let t = MultilinearMap::from_closed_form(ring, &[d, d, d], d, |v| {
        let (x, y, z) = (embed(&v[0]), embed(&v[1]), embed(&v[2]));
        let w = x.mul(&y).mul(&z).add(&z.mul(&y).mul(&x));
        basis.iter().map(|&(i, j)| w.get(i, j)).collect()
    });
    JordanPair::new(t.clone(), t)
}

/// `T(x, y, z) = (x|z)y − (x|y)z − (z|y)x` on `Kⁿ` for the given form.
pub fn spin_pair(gram: &Matrix) -> Result<JordanPair> {
    let ring = gram.ring();
    let n = gram.rows();
    if !gram.is_square() || gram.transpose() != *gram {
        return Err(invalid("form must be symmetric"));
    }
    if gram.det().is_zero() {
        return Err(invalid("form is degenerate"));
    }
    check_size(2 * n)?;
    let form = |a: &[Scalar], b: &[Scalar]| crate::kernel::vector::dot(a, &gram.mul_vec(b));
    let t = MultilinearMap::from_closed_form(ring, &[n, n, n], n, |v| {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        (0..n)
            .map(|i| form(x, z) * y[i] - form(x, y) * z[i] - form(z, y) * x[i])
            .collect()
    });
    JordanPair::new(t.clone(), t)
}

pub fn spin_dot(n: usize, ring: Ring) -> Result<JordanPair> {
    spin_pair(&Matrix::identity(ring, n))
}

/// `m` copies of `p` with the point-wise triple product.
pub fn loop_pair(p: &JordanPair, m: usize) -> Result<JordanPair> {
    if m == 0 {
        return Err(invalid("need at least one point"));
    }
    let (np, nm) = p.dims();
    check_size(m * (np + nm))?;
    let blockwise = |t: &MultilinearMap, a: usize, b: usize| {
        let ring = t.ring();
        let mut coeffs = Vec::new();
        for k in 0..m {
            for c in t.coeffs() {
                let [i, j, l] = c.index;
                coeffs.push(crate::kernel::tensor::Coeff {
                    index: [k * a + i, k * b + j, k * a + l],
                    target: k * a + c.target,
                    value: c.value,
                });
            }
        }
        MultilinearMap::from_coeffs(ring, &[m * a, m * b, m * a], m * a, coeffs)
            .expect("disjoint blocks")
    };
    JordanPair::new(
        blockwise(p.t(crate::jordan::Sign::Plus), np, nm),
        blockwise(p.t(crate::jordan::Sign::Minus), nm, np),
    )
}

// -------------------------------------------------------------- algebras

/// Structure constants of `gl(n)` on `E_ij`, row-major.
fn gl_bracket(n: usize, ring: Ring) -> MultilinearMap {
    let d = n * n;
    MultilinearMap::from_closed_form(ring, &[d, d], d, |v| {
        let x = as_matrix(ring, n, n, &v[0]);
        let y = as_matrix(ring, n, n, &v[1]);
        x.commutator(&y).into_data()
    })
}

/// `gl(n)` graded by `deg E_ij = w_i − w_j`, with Euler operator `diag(w)`.
pub fn gl_graded(weights: &[i32], ring: Ring) -> GradedLieAlgebra {
    let n = weights.len();
    let mut deg = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            deg.push(weights[i] - weights[j]);
        }
    }
    let diag: Vec<Scalar> = weights.iter().map(|&w| ring.int(w as i64)).collect();
    let euler = Matrix::diagonal(ring, &diag).into_data();
    GradedLieAlgebra::new(gl_bracket(n, ring), Grading::Integer(deg), Some(euler)).unwrap()
}

/// `gl(a + b)` with the upper-right `a×b` block in degree 1.
pub fn gl_3graded(a: usize, b: usize, ring: Ring) -> Result<GradedLieAlgebra> {
    if a == 0 || b == 0 {
        return Err(invalid("ranks must be at least 1"));
    }
    ring.require_inverts_up_to(2)?;
    let n = a + b;
    let side = |i: usize| i32::from(i < a);
    let mut deg = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            deg.push(side(i) - side(j));
        }
    }
    let half = ring.ratio(1, 2);
    let diag: Vec<Scalar> = (0..n).map(|i| if i < a { half } else { -half }).collect();
    let euler = Matrix::diagonal(ring, &diag).into_data();
    GradedLieAlgebra::new(gl_bracket(n, ring), Grading::Integer(deg), Some(euler))
}

/// `sl(2)` on `(e, f, h)`, Euler operator `h/2`.
pub fn sl2(ring: Ring) -> GradedLieAlgebra {
    let (e, f, h) = ([1, 0, 0], [0, 1, 0], [0, 0, 1]);
    let c = |v: [i64; 3], s: i64| v.iter().map(|&x| ring.int(x * s)).collect::<Vec<_>>();
    let t = MultilinearMap::from_basis_fn(ring, &[3, 3], 3, |i| match (i[0], i[1]) {
        (0, 1) => c(h, 1),
        (1, 0) => c(h, -1),
        (2, 0) => c(e, 2),
        (0, 2) => c(e, -2),
        (2, 1) => c(f, -2),
        (1, 2) => c(f, 2),
        _ => vec![ring.zero(); 3],
    });
    let euler = vec![ring.zero(), ring.zero(), ring.ratio(1, 2)];
    GradedLieAlgebra::new(t, Grading::Integer(vec![1, -1, 0]), Some(euler)).unwrap()
}

// ----------------------------------------------------------------- specs

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogSpec {
    Rectangular {
        a: usize,
        b: usize,
    },
    Associative {
        n: usize,
    },
    Hermitian {
        n: usize,
    },
    SkewHermitian {
        n: usize,
    },
    /// Spin factor for the standard dot form.
    Spin {
        n: usize,
    },
    /// `m` points of the scalar pair `2xyz`.
    Loop {
        m: usize,
    },
    LoopOf {
        base: Box<CatalogSpec>,
        m: usize,
    },
}

impl CatalogSpec {
    /// Parses a family name with its integer parameters.
    pub fn parse(family: &str, params: &[usize]) -> Result<Self> {
        let want = |k: usize| -> Result<()> {
            if params.len() != k {
                return Err(invalid(format!(
                    "family {family} takes {k} parameter(s), got {}",
                    params.len()
                )));
            }
            Ok(())
        };
        let spec = match family {
            "rectangular" => {
                want(2)?;
                CatalogSpec::Rectangular {
                    a: params[0],
                    b: params[1],
                }
            }
            "associative" => {
                want(1)?;
                CatalogSpec::Associative { n: params[0] }
            }
            "hermitian" => {
                want(1)?;
                CatalogSpec::Hermitian { n: params[0] }
            }
            "skew_hermitian" | "skew-hermitian" => {
                want(1)?;
                CatalogSpec::SkewHermitian { n: params[0] }
            }
            "spin" => {
                want(1)?;
                CatalogSpec::Spin { n: params[0] }
            }
            "loop" => {
                want(1)?;
                CatalogSpec::Loop { m: params[0] }
            }
            "octonion" | "octonionic" | "albert" | "exceptional" | "e6" | "e7" => {
                return Err(Error::OutOfScope(format!(
                    "{family}: exceptional octonionic Jordan systems are not constructed"
                )))
            }
            other => return Err(invalid(format!("unknown catalog family `{other}`"))),
        };
        Ok(spec)
    }

    pub fn build(&self, ring: Ring) -> Result<JordanPair> {
        match self {
            CatalogSpec::Rectangular { a, b } => rectangular_pair(*a, *b, ring),
            CatalogSpec::Associative { n } => associative_pair(*n, ring),
            CatalogSpec::Hermitian { n } => hermitian_pair(*n, 1, ring),
            CatalogSpec::SkewHermitian { n } => hermitian_pair(*n, -1, ring),
            CatalogSpec::Spin { n } => spin_dot(*n, ring),
            CatalogSpec::Loop { m } => loop_pair(&rectangular_pair(1, 1, ring)?, *m),
            CatalogSpec::LoopOf { base, m } => loop_pair(&base.build(ring)?, *m),
        }
    }

    /// Whether both triple products are symmetric in their first two slots.
    pub fn is_commutative(&self) -> bool {
        matches!(self, CatalogSpec::Loop { .. })
    }
}

impl fmt::Display for CatalogSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogSpec::Rectangular { a, b } => write!(f, "rectangular({a},{b})"),
            CatalogSpec::Associative { n } => write!(f, "associative({n})"),
            CatalogSpec::Hermitian { n } => write!(f, "hermitian({n})"),
            CatalogSpec::SkewHermitian { n } => write!(f, "skew_hermitian({n})"),
            CatalogSpec::Spin { n } => write!(f, "spin({n})"),
            CatalogSpec::Loop { m } => write!(f, "loop({m})"),
            CatalogSpec::LoopOf { base, m } => write!(f, "loop({base},{m})"),
        }
    }
}

/// The catalog used by the acceptance suites.
pub fn standard_specs() -> Vec<CatalogSpec> {
    let mut out = Vec::new();
    for a in 1..=3 {
        for b in 1..=3 {
            out.push(CatalogSpec::Rectangular { a, b });
        }
    }
    out.extend((1..=2).map(|n| CatalogSpec::Associative { n }));
    out.extend((1..=3).map(|n| CatalogSpec::Hermitian { n }));
    out.extend((2..=3).map(|n| CatalogSpec::SkewHermitian { n }));
    out.extend((1..=4).map(|n| CatalogSpec::Spin { n }));
    out.extend((1..=3).map(|m| CatalogSpec::Loop { m }));
    out
}

pub fn standard_pairs(ring: Ring) -> Vec<(String, JordanPair)> {
    standard_specs()
        .iter()
        .map(|s| {
            (
                s.to_string(),
                s.build(ring).expect("catalog parameters are valid"),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::Sign;
    use crate::kernel::vector::{from_ints, unit};
    use crate::kernel::Method;

    #[test]
    fn rectangular_examples() {
        let q = Ring::Rational;
        let p = rectangular_pair(1, 1, q).unwrap();
        assert_eq!(
            p.t(Sign::Plus).eval(&[&[q.one()], &[q.one()], &[q.one()]]),
            vec![q.int(2)]
        );
        let p = rectangular_pair(2, 1, q).unwrap();
        let x = from_ints(q, &[1, 0]);
        let y = from_ints(q, &[1, 0]);
        assert_eq!(p.t(Sign::Plus).eval(&[&x, &y, &x]), from_ints(q, &[2, 0]));
        assert!(p.verify(Method::Basis).unwrap().passed());
        assert_eq!(
            associative_pair(1, q).unwrap(),
            rectangular_pair(1, 1, q).unwrap()
        );
    }

    #[test]
    fn associative_identity() {
        let q = Ring::Rational;
        let p = associative_pair(2, q).unwrap();
        let i = from_ints(q, &[1, 0, 0, 1]);
        assert_eq!(
            p.t(Sign::Plus).eval(&[&i, &i, &i]),
            from_ints(q, &[2, 0, 0, 2])
        );
    }

    #[test]
    fn hermitian_examples() {
        let q = Ring::Rational;
        let p = hermitian_pair(2, 1, q).unwrap();
        assert_eq!(p.dims(), (3, 3));
        let e11 = unit(q, 3, 0);
        assert_eq!(
            p.t(Sign::Plus).eval(&[&e11, &e11, &e11]),
            from_ints(q, &[2, 0, 0])
        );
        let s = hermitian_pair(2, -1, q).unwrap();
        assert_eq!(s.dims(), (1, 1));
        assert_eq!(
            s.t(Sign::Plus).eval(&[&[q.one()], &[q.one()], &[q.one()]]),
            vec![q.int(-2)]
        );
        assert!(hermitian_pair(1, -1, q).is_err());
        assert!(s.verify(Method::Basis).unwrap().passed());
    }

    #[test]
    fn spin_examples() {
        let q = Ring::Rational;
        let p = spin_dot(2, q).unwrap();
        let (e1, e2) = (unit(q, 2, 0), unit(q, 2, 1));
        assert_eq!(
            p.t(Sign::Plus).eval(&[&e1, &e1, &e1]),
            from_ints(q, &[-1, 0])
        );
        assert_eq!(p.t(Sign::Plus).eval(&[&e1, &e2, &e1]), e2);
        assert_eq!(
            p.q_operator(Sign::Plus, &e1).mul_vec(&e2),
            vec![q.zero(), q.ratio(1, 2)]
        );
        assert!(spin_pair(&Matrix::from_ints(q, 2, 2, &[1, 1, 1, 1])).is_err());
    }

    #[test]
    fn loop_examples() {
        let q = Ring::Rational;
        let s = rectangular_pair(1, 1, q).unwrap();
        assert_eq!(loop_pair(&s, 1).unwrap(), s);
        let p = loop_pair(&s, 2).unwrap();
        let (a, b) = (from_ints(q, &[1, 0]), from_ints(q, &[1, 1]));
        assert_eq!(p.t(Sign::Plus).eval(&[&a, &b, &a]), from_ints(q, &[2, 0]));
        assert!(vector_is_zero(&p.t(Sign::Plus).eval(&[
            &a,
            &from_ints(q, &[0, 1]),
            &b
        ])));
    }

    fn vector_is_zero(v: &[Scalar]) -> bool {
        crate::kernel::vector::is_zero(v)
    }

    #[test]
    fn octonions_rejected() {
        assert!(matches!(
            CatalogSpec::parse("octonion", &[]),
            Err(Error::OutOfScope(_))
        ));
        assert!(CatalogSpec::parse("rectangular", &[1]).is_err());
        assert_eq!(
            CatalogSpec::parse("loop", &[2]).unwrap(),
            CatalogSpec::Loop { m: 2 }
        );
    }

    #[test]
    fn gl_3graded_matches_rectangular() {
        let q = Ring::Rational;
        for (a, b) in [(1, 1), (1, 2), (2, 1)] {
            let g = gl_3graded(a, b, q).unwrap();
            assert!(g.verify_lie().unwrap().passed());
            assert_eq!(
                g.pair_from_3graded().unwrap(),
                rectangular_pair(a, b, q).unwrap()
            );
        }
        assert_eq!(gl_3graded(1, 1, q).unwrap().grading.block(1).len(), 1);
    }

    #[test]
    fn five_grading() {
        let f7 = Ring::Prime(7);
        let g = gl_graded(&[1, 0, -1], f7);
        assert_eq!(g.k(), 2);
        assert!(g.verify_lie().unwrap().passed());
        assert!(sl2(f7).verify_lie().unwrap().passed());
    }
}
