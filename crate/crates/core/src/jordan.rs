//! Jordan pairs, Jordan triple systems, Jordan algebras and Lie triple
//! systems, with their axioms and the functors between them.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{invalid, shape, Error, Result};
use crate::kernel::identity::{check_identity, Identity, Method, Variable};
use crate::kernel::tensor::Coeff;
use crate::kernel::vector;
use crate::kernel::{Matrix, MultilinearMap, Ring, Scalar};
use crate::report::{Check, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn both() -> [Sign; 2] {
        [Sign::Plus, Sign::Minus]
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Identities that are not multilinear cannot use the plain basis method;
/// they fall back to polarization.
fn nonlinear_method(m: Method) -> Method {
    match m {
        Method::Basis => Method::Polarized,
        other => other,
    }
}

fn run(report: &mut Report, name: &str, id: &Identity<'_>, method: Method) -> Result<()> {
    let v = check_identity(id, method)?;
    report.push(Check::from_verdict(name, &v).note("method", format!("{method}")));
    Ok(())
}

fn trilinear_slots(t: &MultilinearMap) -> Result<(usize, usize)> {
    if t.arity() != 3 || t.slot_dims()[0] != t.slot_dims()[2] || t.slot_dims()[0] != t.target_dim()
    {
        return Err(shape("expected a map V x W x V -> V"));
    }
    Ok((t.slot_dims()[0], t.slot_dims()[1]))
}

// ---------------------------------------------------------------- pairs

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanPair {
    tplus: MultilinearMap,
    tminus: MultilinearMap,
}

/// Result of testing an element `a ∈ V⁻` for invertibility.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invertibility {
    pub invertible: bool,
    pub sharp: Option<Vec<Scalar>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// The displayed formula taken literally.
    Verbatim,
    /// Twice the displayed formula; `Q` then matches `2 L_x^2 - L_{x^2}`.
    Doubled,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Verbatim => "verbatim",
            Convention::Doubled => "doubled",
        })
    }
}

impl JordanPair {
    /// `tplus: V⁺×V⁻×V⁺ → V⁺`, `tminus: V⁻×V⁺×V⁻ → V⁻`.
    pub fn new(tplus: MultilinearMap, tminus: MultilinearMap) -> Result<Self> {
        let (np, nm) = trilinear_slots(&tplus)?;
        let (mm, mp) = trilinear_slots(&tminus)?;
        if (np, nm) != (mp, mm) || tplus.ring() != tminus.ring() {
            return Err(shape("T+ and T- have incompatible shapes"));
        }
        Ok(JordanPair { tplus, tminus })
    }

    pub fn zero(ring: Ring, nplus: usize, nminus: usize) -> Self {
        JordanPair {
            tplus: MultilinearMap::zero(ring, &[nplus, nminus, nplus], nplus),
            tminus: MultilinearMap::zero(ring, &[nminus, nplus, nminus], nminus),
        }
    }

    pub fn ring(&self) -> Ring {
        self.tplus.ring()
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.tplus.target_dim(), self.tminus.target_dim())
    }

    pub fn dim(&self, s: Sign) -> usize {
        self.t(s).target_dim()
    }

    pub fn t(&self, s: Sign) -> &MultilinearMap {
        match s {
            Sign::Plus => &self.tplus,
            Sign::Minus => &self.tminus,
        }
    }

    pub fn verify(&self, method: Method) -> Result<Report> {
        let mut report = Report::new();
        for s in Sign::both() {
            let t = self.t(s);
            let u = self.t(s.flip());
            let (n, m) = (self.dim(s), self.dim(s.flip()));
            let ljp1 = Identity::new(
                "LJP1",
                self.ring(),
                vec![
                    Variable::linear("x", n),
                    Variable::linear("y", m),
                    Variable::linear("z", n),
                ],
                |p| {
                    vector::sub(
                        &t.eval(&[&p[0], &p[1], &p[2]]),
                        &t.eval(&[&p[2], &p[1], &p[0]]),
                    )
                },
            );
            run(&mut report, &format!("LJP1{s}"), &ljp1, method)?;
            let ljp2 = ljp2_identity(t, u, self.ring());
            run(&mut report, &format!("LJP2{s}"), &ljp2, method)?;
        }
        Ok(report)
    }

    /// `Q^s(a) y = ½ T^s(a, y, a)`, as a matrix `V^{-s} → V^s`.
    pub fn q_operator(&self, s: Sign, a: &[Scalar]) -> Matrix {
        q_matrix(self.t(s), a)
    }

    /// `Q(Q(x)y) = Q(x) Q(y) Q(x)` for `x ∈ V^s`, `y ∈ V^{-s}`, as an
    /// identity between operators.
    pub fn check_fundamental(&self, s: Sign, method: Method) -> Result<Check> {
        let t = self.t(s);
        let u = self.t(s.flip());
        let id = Identity::new(
            "FundamentalFormula",
            self.ring(),
            vec![
                Variable::new("y", self.dim(s.flip()), 2),
                Variable::new("x", self.dim(s), 4),
            ],
            |p| {
                let (y, x) = (&p[0], &p[1]);
                let qx = q_matrix(t, x);
                let qy = q_matrix(u, y);
                let lhs = q_matrix(t, &qx.mul_vec(y));
                let rhs = qx.mul(&qy).mul(&qx);
                lhs.sub(&rhs).into_data()
            },
        );
        let method = nonlinear_method(method);
        let v = check_identity(&id, method)?;
        Ok(Check::from_verdict(format!("FundamentalFormula{s}"), &v)
            .note("method", format!("{method}")))
    }

    /// `x •_a y = ½ T⁺(x, a, y)` on `V⁺`, with its unit when one exists.
    pub fn homotopy_algebra(&self, a: &[Scalar]) -> Result<JordanAlgebra> {
        let (np, nm) = self.dims();
        if a.len() != nm {
            return Err(shape("homotope element must lie in V-"));
        }
        let ring = self.ring();
        let half = ring.ratio(1, 2);
        let product = MultilinearMap::from_basis_fn(ring, &[np, np], np, |i| {
            let x = vector::unit(ring, np, i[0]);
            let y = vector::unit(ring, np, i[1]);
            vector::scale(half, &self.tplus.eval(&[&x, a, &y]))
        });
        Ok(JordanAlgebra::with_found_unit(product))
    }

    pub fn invertibility(&self, a: &[Scalar]) -> Invertibility {
        let q = self.q_operator(Sign::Minus, a);
        match q.inverse() {
            Some(inv) => Invertibility {
                invertible: true,
                sharp: Some(inv.mul_vec(a)),
            },
            None => Invertibility {
                invertible: false,
                sharp: None,
            },
        }
    }

    /// The triple system `T̃` on `V⁺ ⊕ V⁻`.
    pub fn polarized_jts(&self) -> JordanTripleSystem {
        let (np, nm) = self.dims();
        let n = np + nm;
        let ring = self.ring();
        let t = MultilinearMap::from_basis_fn(ring, &[n, n, n], n, |i| {
            let mut out = vector::zeros(ring, n);
            let plus = |k: usize| k < np;
            if plus(i[0]) && !plus(i[1]) && plus(i[2]) {
                let v = self.tplus.basis_value(&[i[0], i[1] - np, i[2]]);
                out[..np].copy_from_slice(&v);
            } else if !plus(i[0]) && plus(i[1]) && !plus(i[2]) {
                let v = self.tminus.basis_value(&[i[0] - np, i[1], i[2] - np]);
                out[np..].copy_from_slice(&v);
            }
            out
        });
        JordanTripleSystem { t }
    }

    /// Checks that `(a, b)` with `a: V⁺ → V⁻`, `b: V⁻ → V⁺` is an isomorphism
    /// of this pair onto its opposite `(V⁻, V⁺)`.
    pub fn is_involution(&self, a: &Matrix, b: &Matrix) -> bool {
        let (np, nm) = self.dims();
        if (a.rows(), a.cols(), b.rows(), b.cols()) != (nm, np, np, nm) {
            return false;
        }
        if !a.mul(b).is_identity() || !b.mul(a).is_identity() {
            return false;
        }
        let ring = self.ring();
        for i in 0..np {
            for j in 0..nm {
                for k in 0..np {
                    let (x, y, z) = (
                        vector::unit(ring, np, i),
                        vector::unit(ring, nm, j),
                        vector::unit(ring, np, k),
                    );
                    let lhs = a.mul_vec(&self.tplus.eval(&[&x, &y, &z]));
                    let rhs = self
                        .tminus
                        .eval(&[&a.mul_vec(&x), &b.mul_vec(&y), &a.mul_vec(&z)]);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        for i in 0..nm {
            for j in 0..np {
                for k in 0..nm {
                    let (x, y, z) = (
                        vector::unit(ring, nm, i),
                        vector::unit(ring, np, j),
                        vector::unit(ring, nm, k),
                    );
                    let lhs = b.mul_vec(&self.tminus.eval(&[&x, &y, &z]));
                    let rhs = self
                        .tplus
                        .eval(&[&b.mul_vec(&x), &a.mul_vec(&y), &b.mul_vec(&z)]);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Rebuilds the pair from the `a`-homotope and compares it with `self`.
    ///
    /// The comparison map goes from the rebuilt pair `(J, J)` to `(V⁺, V⁻)`
    /// as `(c·id, d·Q⁻(a))`; it is an isomorphism exactly when the rebuilt
    /// tensor is `κ · T⁺(x, Q⁻(a) y, z)` (and dually) with `κ = cd`.
    pub fn roundtrip(&self, a: &[Scalar], convention: Convention) -> Result<Report> {
        let inv = self.invertibility(a);
        if !inv.invertible {
            return Err(invalid("round trip needs an invertible element"));
        }
        let alg = self.homotopy_algebra(a)?;
        if alg.unit.is_none() {
            return Err(invalid("homotope has no unit"));
        }
        let jts = alg.jts_from_unital(convention)?;
        let ring = self.ring();
        let n = self.dim(Sign::Plus);
        let q = self.q_operator(Sign::Minus, a);
        let tt = &jts.t;
        let mut kappa: Option<Scalar> = None;
        let mut consistent = true;
        let mut witness = None;
        let mut compare = |lhs: Vec<Scalar>, rhs: Vec<Scalar>, tag: (usize, usize, usize, char)| {
            // lhs must equal kappa * rhs
            for (l, r) in lhs.iter().zip(&rhs) {
                if r.is_zero() {
                    if !l.is_zero() {
                        consistent = false;
                    }
                    continue;
                }
                let ratio = *l * r.inv().unwrap();
                match kappa {
                    None => kappa = Some(ratio),
                    Some(k) if k != ratio => consistent = false,
                    _ => {}
                }
            }
            if !consistent && witness.is_none() {
                witness = Some(format!("{} e{},e{},e{}", tag.3, tag.0, tag.1, tag.2));
            }
        };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (
                        vector::unit(ring, n, i),
                        vector::unit(ring, n, j),
                        vector::unit(ring, n, k),
                    );
                    let lhs = tt.eval(&[&x, &y, &z]);
                    let rhs = self.tplus.eval(&[&x, &q.mul_vec(&y), &z]);
                    compare(lhs, rhs, (i, j, k, '+'));
                    let lhs = q.mul_vec(&tt.eval(&[&y, &x, &z]));
                    let rhs = self.tminus.eval(&[&q.mul_vec(&y), &x, &q.mul_vec(&z)]);
                    compare(lhs, rhs, (j, i, k, '-'));
                }
            }
        }
        let kappa = kappa.filter(|k| !k.is_zero());
        let iso = consistent && kappa.is_some();
        let exact = self.tplus == jts.t && self.tminus == jts.t;
        let mut check = Check::new("RoundTrip", iso)
            .note("convention", format!("{convention}"))
            .note("exact_match", exact);
        if let Some(k) = kappa {
            check = check
                .note("kappa", format!("{k}"))
                .note("c", "1")
                .note("d", format!("{k}"));
        }
        if let Some(w) = witness {
            check = check.with_witness(w);
        }
        let mut r = Report::new();
        r.push(check);
        Ok(r)
    }
}

fn q_matrix(t: &MultilinearMap, a: &[Scalar]) -> Matrix {
    let half = t.ring().ratio(1, 2);
    t.operator(&[a, a, a], 1).scale(half)
}

/// `T(x,y,T(u,v,z)) - T(u,v,T(x,y,z)) = T(T(x,y,u),v,z) - T(u,T(y,x,v),z)`
/// where the inner `T(y,x,v)` uses the opposite map `u`.
fn ljp2_identity<'a>(t: &'a MultilinearMap, u: &'a MultilinearMap, ring: Ring) -> Identity<'a> {
    let n = t.target_dim();
    let m = u.target_dim();
    Identity::new(
        "LJP2",
        ring,
        vec![
            Variable::linear("x", n),
            Variable::linear("y", m),
            Variable::linear("u", n),
            Variable::linear("v", m),
            Variable::linear("z", n),
        ],
        move |p| {
            let (x, y, uu, v, z) = (&p[0], &p[1], &p[2], &p[3], &p[4]);
            let a = t.eval(&[x, y, &t.eval(&[uu, v, z])]);
            let b = t.eval(&[uu, v, &t.eval(&[x, y, z])]);
            let c = t.eval(&[&t.eval(&[x, y, uu]), v, z]);
            let d = t.eval(&[uu, &u.eval(&[y, x, v]), z]);
            let mut r = vector::sub(&a, &b);
            r = vector::sub(&r, &c);
            vector::add(&r, &d)
        },
    )
}

// ------------------------------------------------------- triple systems

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanTripleSystem {
    pub t: MultilinearMap,
}

impl JordanTripleSystem {
    pub fn new(t: MultilinearMap) -> Result<Self> {
        let (n, m) = trilinear_slots(&t)?;
        if n != m {
            return Err(shape("a triple system lives on a single module"));
        }
        Ok(JordanTripleSystem { t })
    }

    pub fn ring(&self) -> Ring {
        self.t.ring()
    }

    pub fn dim(&self) -> usize {
        self.t.target_dim()
    }

    pub fn verify(&self, method: Method) -> Result<Report> {
        let mut report = Report::new();
        let t = &self.t;
        let n = self.dim();
        let jp1 = Identity::new(
            "JP1",
            self.ring(),
            vec![
                Variable::linear("x", n),
                Variable::linear("y", n),
                Variable::linear("z", n),
            ],
            |p| {
                vector::sub(
                    &t.eval(&[&p[0], &p[1], &p[2]]),
                    &t.eval(&[&p[2], &p[1], &p[0]]),
                )
            },
        );
        run(&mut report, "JP1", &jp1, method)?;
        run(
            &mut report,
            "JP2",
            &ljp2_identity(t, t, self.ring()),
            method,
        )?;
        Ok(report)
    }

    /// Antisymmetrization in the first two slots.
    pub fn to_lts(&self) -> LieTripleSystem {
        let swapped = self.t.permute_slots(&[1, 0, 2]);
        LieTripleSystem {
            r: self.t.add(&swapped.scale(-self.ring().one())),
        }
    }

    /// The pair `(V, V)` with `T± = T`, and the swap involution given by its
    /// two identity blocks.
    pub fn to_pair(&self) -> (JordanPair, Matrix, Matrix) {
        let id = Matrix::identity(self.ring(), self.dim());
        (
            JordanPair {
                tplus: self.t.clone(),
                tminus: self.t.clone(),
            },
            id.clone(),
            id,
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieTripleSystem {
    pub r: MultilinearMap,
}

impl LieTripleSystem {
    pub fn new(r: MultilinearMap) -> Result<Self> {
        let (n, m) = trilinear_slots(&r)?;
        if n != m {
            return Err(shape("a triple system lives on a single module"));
        }
        Ok(LieTripleSystem { r })
    }

    pub fn ring(&self) -> Ring {
        self.r.ring()
    }

    pub fn dim(&self) -> usize {
        self.r.target_dim()
    }

    /// `R(X, Y)` as a matrix.
    pub fn operator(&self, x: &[Scalar], y: &[Scalar]) -> Matrix {
        self.r.operator(&[x, y, x], 2)
    }

    pub fn verify(&self, method: Method) -> Result<Report> {
        let mut report = Report::new();
        let r = &self.r;
        let n = self.dim();
        let ring = self.ring();
        let lt1 = Identity::new(
            "LT1",
            ring,
            vec![Variable::new("x", n, 2), Variable::linear("z", n)],
            |p| r.eval(&[&p[0], &p[0], &p[1]]),
        );
        run(&mut report, "LT1", &lt1, nonlinear_method(method))?;
        let lt2 = Identity::new(
            "LT2",
            ring,
            vec![
                Variable::linear("x", n),
                Variable::linear("y", n),
                Variable::linear("z", n),
            ],
            |p| {
                let (x, y, z) = (&p[0], &p[1], &p[2]);
                let s = vector::add(&r.eval(&[x, y, z]), &r.eval(&[y, z, x]));
                vector::add(&s, &r.eval(&[z, x, y]))
            },
        );
        run(&mut report, "LT2", &lt2, method)?;
        let lt3 = Identity::new(
            "LT3",
            ring,
            vec![
                Variable::linear("x", n),
                Variable::linear("y", n),
                Variable::linear("u", n),
                Variable::linear("v", n),
                Variable::linear("w", n),
            ],
            |p| {
                let (x, y, u, v, w) = (&p[0], &p[1], &p[2], &p[3], &p[4]);
                let lhs = r.eval(&[x, y, &r.eval(&[u, v, w])]);
                let a = r.eval(&[&r.eval(&[x, y, u]), v, w]);
                let b = r.eval(&[u, &r.eval(&[x, y, v]), w]);
                let c = r.eval(&[u, v, &r.eval(&[x, y, w])]);
                vector::sub(&vector::sub(&vector::sub(&lhs, &a), &b), &c)
            },
        );
        run(&mut report, "LT3", &lt3, method)?;
        Ok(report)
    }
}

// ------------------------------------------------------------ algebras

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanAlgebra {
    pub product: MultilinearMap,
    pub unit: Option<Vec<Scalar>>,
}

impl JordanAlgebra {
    pub fn new(product: MultilinearMap, unit: Option<Vec<Scalar>>) -> Result<Self> {
        let d = product.slot_dims();
        if product.arity() != 2 || d[0] != d[1] || d[0] != product.target_dim() {
            return Err(shape("expected a product V x V -> V"));
        }
        Ok(JordanAlgebra { product, unit })
    }

    /// Attaches the unit found by solving `u • e_j = e_j`, if any.
    pub fn with_found_unit(product: MultilinearMap) -> Self {
        let mut alg = JordanAlgebra {
            product,
            unit: None,
        };
        alg.unit = alg.find_unit();
        alg
    }

    pub fn ring(&self) -> Ring {
        self.product.ring()
    }

    pub fn dim(&self) -> usize {
        self.product.target_dim()
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.product.eval(&[x, y])
    }

    /// Left multiplication `L_x`.
    pub fn left(&self, x: &[Scalar]) -> Matrix {
        self.product.operator(&[x, x], 1)
    }

    pub fn find_unit(&self) -> Option<Vec<Scalar>> {
        let n = self.dim();
        let ring = self.ring();
        if n == 0 {
            return Some(Vec::new());
        }
        let mut sys: Option<Matrix> = None;
        let mut rhs = Vec::new();
        for j in 0..n {
            let e = vector::unit(ring, n, j);
            let block = self.product.operator(&[&e, &e], 0);
            sys = Some(match sys {
                None => block,
                Some(s) => s.vstack(&block),
            });
            rhs.extend(e);
        }
        sys.unwrap().solve_vec(&rhs)
    }

    pub fn verify(&self, method: Method) -> Result<Report> {
        let mut report = Report::new();
        let ring = self.ring();
        let n = self.dim();
        let comm = Identity::new(
            "Commutative",
            ring,
            vec![Variable::linear("x", n), Variable::linear("y", n)],
            |p| vector::sub(&self.mul(&p[0], &p[1]), &self.mul(&p[1], &p[0])),
        );
        run(&mut report, "Commutative", &comm, method)?;
        // x • (x² • y) = x² • (x • y) for all y, i.e. [L_x, L_{x²}] = 0.
        let j2 = Identity::new("J2", ring, vec![Variable::new("x", n, 3)], |p| {
            let x = &p[0];
            let x2 = self.mul(x, x);
            self.left(x).commutator(&self.left(&x2)).into_data()
        });
        run(&mut report, "J2", &j2, nonlinear_method(method))?;
        if let Some(u) = &self.unit {
            let ok = (0..n).all(|i| {
                let e = vector::unit(ring, n, i);
                self.mul(u, &e) == e && self.mul(&e, u) == e
            });
            report.push(Check::new("Unit", ok));
        }
        Ok(report)
    }

    /// `T(x,y,z) = (x•y)•z − y•(x•z) + x•(y•z)`, doubled on request.
    pub fn jts_from_unital(&self, convention: Convention) -> Result<JordanTripleSystem> {
        if self.unit.is_none() {
            return Err(invalid("algebra has no unit"));
        }
        let ring = self.ring();
        let n = self.dim();
        let factor = match convention {
            Convention::Verbatim => ring.one(),
            Convention::Doubled => ring.int(2),
        };
        let t = MultilinearMap::from_closed_form(ring, &[n, n, n], n, |a| {
            let (x, y, z) = (&a[0], &a[1], &a[2]);
            let p = self.mul(&self.mul(x, y), z);
            let q = self.mul(y, &self.mul(x, z));
            let r = self.mul(x, &self.mul(y, z));
            vector::scale(factor, &vector::add(&vector::sub(&p, &q), &r))
        });
        Ok(JordanTripleSystem { t })
    }
}

/// Scalar pair `T±(x,y,z) = c·xyz` on `K × K`.
pub fn scalar_pair(ring: Ring, c: i64) -> JordanPair {
    let t = MultilinearMap::from_coeffs(
        ring,
        &[1, 1, 1],
        1,
        [Coeff {
            index: [0, 0, 0],
            target: 0,
            value: ring.int(c),
        }],
    )
    .unwrap();
    JordanPair {
        tplus: t.clone(),
        tminus: t,
    }
}

/// Checks every axiom of `r` and turns failures into an error message.
pub fn require_passed(r: &Report, what: &str) -> Result<()> {
    match r.failures().next() {
        None => Ok(()),
        Some(c) => Err(Error::Invalid(format!(
            "{what}: axiom {} fails{}",
            c.name,
            c.witness
                .as_ref()
                .map(|w| format!(" at {w}"))
                .unwrap_or_default()
        ))),
    }
}

pub fn describe_dims(p: &JordanPair) -> String {
    let (a, b) = p.dims();
    format!("({a},{b})")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::vector::from_ints;

    fn f5() -> Ring {
        Ring::Prime(5)
    }

    #[test]
    fn zero_pair_passes() {
        let p = JordanPair::zero(f5(), 2, 1);
        assert!(p.verify(Method::Basis).unwrap().passed());
    }

    #[test]
    fn asymmetric_tensor_fails_ljp1() {
        let ring = f5();
        // T(x,y,z) = xyz on (1,2) matrices, no zyx term.
        let t = MultilinearMap::from_closed_form(ring, &[2, 2, 2], 2, |a| {
            let (x, y, z) = (&a[0], &a[1], &a[2]);
            // x is 1x2, y is 2x1, z is 1x2: (x y) z
            let s = x[0] * y[0] + x[1] * y[1];
            vec![s * z[0], s * z[1]]
        });
        let u = MultilinearMap::zero(ring, &[2, 2, 2], 2);
        let p = JordanPair::new(t, u).unwrap();
        let r = p.verify(Method::Basis).unwrap();
        let c = r.get("LJP1+").unwrap();
        assert!(!c.passed);
        assert!(c.witness.is_some());
    }

    #[test]
    fn polarized_blocks() {
        let q = Ring::Rational;
        let p = scalar_pair(q, 2);
        let j = p.polarized_jts();
        assert_eq!(j.dim(), 2);
        let x = from_ints(q, &[1, 0]);
        let y = from_ints(q, &[0, 1]);
        assert_eq!(j.t.eval(&[&x, &y, &x]), from_ints(q, &[2, 0]));
        assert_eq!(j.t.eval(&[&x, &x, &x]), from_ints(q, &[0, 0]));
        assert!(j.verify(Method::Basis).unwrap().passed());
    }

    #[test]
    fn jordan_lie_functor_examples() {
        let q = Ring::Rational;
        let scalar = scalar_pair(q, 2);
        let (_, a, b) = JordanTripleSystem {
            t: scalar.t(Sign::Plus).clone(),
        }
        .to_pair();
        assert!(scalar.is_involution(&a, &b));
        let lts = JordanTripleSystem {
            t: scalar.t(Sign::Plus).clone(),
        }
        .to_lts();
        assert!(lts.r.is_zero());
        let l = scalar.polarized_jts().to_lts();
        let r = l.operator(&from_ints(q, &[1, 0]), &from_ints(q, &[0, 1]));
        assert_eq!(r, Matrix::from_ints(q, 2, 2, &[2, 0, 0, -2]));
        assert!(l.verify(Method::Basis).unwrap().passed());
    }

    #[test]
    fn quadratic_operator() {
        let q = Ring::Rational;
        let p = scalar_pair(q, 2);
        assert_eq!(
            p.q_operator(Sign::Plus, &[q.int(2)]),
            Matrix::from_ints(q, 1, 1, &[4])
        );
        assert!(p.q_operator(Sign::Plus, &[q.zero()]).is_zero());
    }

    #[test]
    fn fundamental_formula_scalar_and_broken() {
        let ring = f5();
        let p = scalar_pair(ring, 2);
        for s in Sign::both() {
            assert!(
                p.check_fundamental(s, Method::Exhaustive { limit: 1000 })
                    .unwrap()
                    .passed
            );
            assert!(p.check_fundamental(s, Method::Polarized).unwrap().passed);
        }
        // any c·xyz passes; killing T- breaks it
        let q = Ring::Rational;
        let t = scalar_pair(q, 2).t(Sign::Plus).clone();
        let broken = JordanPair::new(t, MultilinearMap::zero(q, &[1, 1, 1], 1)).unwrap();
        let c = broken
            .check_fundamental(Sign::Plus, Method::Polarized)
            .unwrap();
        assert!(!c.passed);
        assert!(c.witness.is_some());
        assert!(
            broken
                .check_fundamental(Sign::Minus, Method::Polarized)
                .unwrap()
                .passed
        );
    }

    #[test]
    fn homotope_and_sharp() {
        let ring = f5();
        let p = scalar_pair(ring, 2);
        let alg = p.homotopy_algebra(&[ring.int(2)]).unwrap();
        assert_eq!(alg.mul(&[ring.one()], &[ring.one()]), vec![ring.int(2)]);
        assert_eq!(alg.unit, Some(vec![ring.int(3)]));
        let inv = p.invertibility(&[ring.int(2)]);
        assert_eq!(inv.sharp, Some(vec![ring.int(3)]));
        assert!(!p.invertibility(&[ring.zero()]).invertible);
        let zero = p.homotopy_algebra(&[ring.zero()]).unwrap();
        assert!(zero.product.is_zero());
        assert!(zero.unit.is_none());
    }

    #[test]
    fn unital_triple_conventions() {
        let q = Ring::Rational;
        let prod = MultilinearMap::from_closed_form(q, &[1, 1], 1, |a| vec![a[0][0] * a[1][0]]);
        let alg = JordanAlgebra::with_found_unit(prod);
        assert_eq!(alg.unit, Some(vec![q.one()]));
        let v = alg.jts_from_unital(Convention::Verbatim).unwrap();
        assert_eq!(v.t, scalar_pair(q, 1).t(Sign::Plus).clone());
        let d = alg.jts_from_unital(Convention::Doubled).unwrap();
        assert_eq!(d.t, scalar_pair(q, 2).t(Sign::Plus).clone());
        let one = vec![q.one()];
        let x = vec![q.int(3)];
        assert_eq!(d.t.eval(&[&x, &one, &x]), vec![q.int(18)]);
    }

    #[test]
    fn roundtrip_scalar() {
        let q = Ring::Rational;
        let p = scalar_pair(q, 2);
        let r = p.roundtrip(&[q.one()], Convention::Doubled).unwrap();
        let c = r.get("RoundTrip").unwrap();
        assert!(c.passed);
        assert_eq!(c.get_note("exact_match"), Some(&true.into()));
        let r = p.roundtrip(&[q.one()], Convention::Verbatim).unwrap();
        let c = r.get("RoundTrip").unwrap();
        assert!(c.passed);
        assert_eq!(c.get_note("exact_match"), Some(&false.into()));
        assert_eq!(c.get_note("kappa"), Some(&"1/2".into()));
        assert!(p.roundtrip(&[q.zero()], Convention::Doubled).is_err());
    }

    #[test]
    fn algebra_axioms() {
        let ring = f5();
        let p = scalar_pair(ring, 2);
        let alg = p.homotopy_algebra(&[ring.int(2)]).unwrap();
        let r = alg.verify(Method::Exhaustive { limit: 100 }).unwrap();
        assert!(r.passed(), "{r}");
        assert!(alg.verify(Method::Basis).unwrap().passed());
    }
}
