//! Graded Lie algebras: gradings, Euler operators, the standard imbedding,
//! the Jordan pair correspondence, exp automorphisms and elementary orbits.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{invalid, shape, Error, Result};
use crate::jordan::{JordanPair, JordanTripleSystem, LieTripleSystem};
use crate::kernel::identity::{check_identity, Identity, Method, Variable};
use crate::kernel::vector;
use crate::kernel::{Matrix, MultilinearMap, Ring, Scalar, Subspace};
use crate::report::{Check, Report};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Grading {
    /// Integer degree of every basis vector.
    Integer(Vec<i32>),
    /// `true` for odd basis vectors.
    Parity(Vec<bool>),
}

impl Grading {
    pub fn len(&self) -> usize {
        match self {
            Grading::Integer(d) => d.len(),
            Grading::Parity(d) => d.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Largest absolute degree; 1 for a parity grading with odd part.
    pub fn k(&self) -> usize {
        match self {
            Grading::Integer(d) => d
                .iter()
                .map(|x| x.unsigned_abs() as usize)
                .max()
                .unwrap_or(0),
            Grading::Parity(d) => usize::from(d.iter().any(|&b| b)),
        }
    }

    pub fn degree(&self, i: usize) -> i32 {
        match self {
            Grading::Integer(d) => d[i],
            Grading::Parity(d) => i32::from(d[i]),
        }
    }

    fn compatible(&self, a: i32, b: i32, c: i32) -> bool {
        match self {
            Grading::Integer(_) => a + b == c,
            Grading::Parity(_) => (a + b - c) % 2 == 0,
        }
    }

    /// Basis indices of degree `j`.
    pub fn block(&self, j: i32) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.degree(i) == j).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedLieAlgebra {
    pub bracket: MultilinearMap,
    pub grading: Grading,
    pub euler: Option<Vec<Scalar>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    Automorphism,
    Derivation,
    Involution,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMap {
    pub matrix: Matrix,
    pub kind: MapKind,
}

fn pair_witness(i: usize, j: usize) -> String {
    format!("(e{i}, e{j})")
}

impl GradedLieAlgebra {
    pub fn new(
        bracket: MultilinearMap,
        grading: Grading,
        euler: Option<Vec<Scalar>>,
    ) -> Result<Self> {
        let d = bracket.slot_dims();
        if bracket.arity() != 2 || d[0] != d[1] || d[0] != bracket.target_dim() {
            return Err(shape("expected a bracket g x g -> g"));
        }
        if grading.len() != d[0] {
            return Err(shape("grading does not cover the basis"));
        }
        if euler.as_ref().is_some_and(|e| e.len() != d[0]) {
            return Err(shape("Euler vector has the wrong length"));
        }
        Ok(GradedLieAlgebra {
            bracket,
            grading,
            euler,
        })
    }

    pub fn ring(&self) -> Ring {
        self.bracket.ring()
    }

    pub fn dim(&self) -> usize {
        self.bracket.target_dim()
    }

    pub fn k(&self) -> usize {
        self.grading.k()
    }

    pub fn unit(&self, i: usize) -> Vec<Scalar> {
        vector::unit(self.ring(), self.dim(), i)
    }

    pub fn br(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.bracket.eval(&[x, y])
    }

    /// `ad(x)`, with columns `[x, e_j]`.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        self.bracket.operator(&[x, x], 1)
    }

    pub fn block_space(&self, j: i32) -> Subspace {
        Subspace::coordinate(self.ring(), self.dim(), &self.grading.block(j))
    }

    pub fn verify_lie(&self) -> Result<Report> {
        let mut r = Report::new();
        let n = self.dim();
        let ring = self.ring();
        let alt = Identity::new("Alternating", ring, vec![Variable::new("x", n, 2)], |p| {
            self.br(&p[0], &p[0])
        });
        r.push(Check::from_verdict(
            "Alternating",
            &check_identity(&alt, Method::Polarized)?,
        ));
        let jac = Identity::new(
            "Jacobi",
            ring,
            vec![
                Variable::linear("x", n),
                Variable::linear("y", n),
                Variable::linear("z", n),
            ],
            |p| {
                let (x, y, z) = (&p[0], &p[1], &p[2]);
                let a = self.br(x, &self.br(y, z));
                let b = self.br(y, &self.br(z, x));
                let c = self.br(z, &self.br(x, y));
                vector::add(&vector::add(&a, &b), &c)
            },
        );
        r.push(Check::from_verdict(
            "Jacobi",
            &check_identity(&jac, Method::Basis)?,
        ));
        r.push(self.grading_check());
        if let Some(e) = &self.euler {
            r.push(self.euler_check(e));
        }
        Ok(r)
    }

    fn grading_check(&self) -> Check {
        for c in self.bracket.coeffs() {
            let [i, j, _] = c.index;
            let (a, b) = (self.grading.degree(i), self.grading.degree(j));
            if !self.grading.compatible(a, b, self.grading.degree(c.target)) {
                return Check::fail("Grading", pair_witness(i, j));
            }
        }
        Check::pass("Grading")
    }

    fn euler_check(&self, e: &[Scalar]) -> Check {
        let Grading::Integer(deg) = &self.grading else {
            return Check::fail("Euler", "parity grading has no Euler operator");
        };
        let ad = self.ad(e);
        for (i, &d) in deg.iter().enumerate() {
            let want = vector::scale(self.ring().int(d as i64), &self.unit(i));
            if ad.col(i) != want {
                return Check::fail("Euler", format!("e{i}"));
            }
        }
        Check::pass("Euler")
    }

    /// Solves `[E, X] = jX` for every basis vector of every block. Solutions
    /// inside the derived algebra are preferred; among them the one with
    /// free coordinates zero is returned.
    pub fn find_euler(&self) -> Option<Vec<Scalar>> {
        let Grading::Integer(deg) = &self.grading else {
            return None;
        };
        let ring = self.ring();
        let blocks: Vec<(i32, Vec<Scalar>)> = deg
            .iter()
            .enumerate()
            .map(|(i, &d)| (d, self.unit(i)))
            .collect();
        euler_for(self, &blocks, ring)
    }

    /// Dimension of the space of Euler operators (the centre shifts).
    pub fn euler_freedom(&self) -> usize {
        self.dim() - self.ad_system().rank()
    }

    fn ad_system(&self) -> Matrix {
        let mut rows = Vec::new();
        for i in 0..self.dim() {
            rows.extend(self.ad(&self.unit(i)).row_vecs());
        }
        Matrix::from_rows(self.ring(), self.dim(), &rows)
    }

    /// Derived algebra `[g, g]`.
    pub fn derived(&self) -> Subspace {
        let vs: Vec<Vec<Scalar>> = self
            .bracket
            .coeffs()
            .iter()
            .map(|c| self.br(&self.unit(c.index[0]), &self.unit(c.index[1])))
            .collect();
        Subspace::span(self.ring(), self.dim(), &vs)
    }

    /// First failing basis pair of `m[x,y] = [mx, my]`.
    pub fn automorphism_defect(&self, m: &Matrix) -> Option<(usize, usize)> {
        let cols = m.col_vecs();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let lhs = m.mul_vec(&self.br(&self.unit(i), &self.unit(j)));
                if lhs != self.br(&cols[i], &cols[j]) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_automorphism(&self, m: &Matrix) -> bool {
        m.rows() == self.dim()
            && m.is_square()
            && m.inverse().is_some()
            && self.automorphism_defect(m).is_none()
    }

    pub fn is_derivation(&self, d: &Matrix) -> bool {
        let cols = d.col_vecs();
        (0..self.dim()).all(|i| {
            (0..self.dim()).all(|j| {
                let lhs = d.mul_vec(&self.br(&self.unit(i), &self.unit(j)));
                let rhs = vector::add(
                    &self.br(&cols[i], &self.unit(j)),
                    &self.br(&self.unit(i), &cols[j]),
                );
                lhs == rhs
            })
        })
    }

    pub fn automorphism(&self, m: Matrix) -> Result<AlgebraMap> {
        if !self.is_automorphism(&m) {
            return Err(invalid("matrix is not a bracket automorphism"));
        }
        Ok(AlgebraMap {
            matrix: m,
            kind: MapKind::Automorphism,
        })
    }

    /// An automorphism of order two reversing the integer grading.
    pub fn graded_involution(&self, m: Matrix) -> Result<AlgebraMap> {
        if !self.is_automorphism(&m) || !m.mul(&m).is_identity() {
            return Err(invalid("not an involutive automorphism"));
        }
        let Grading::Integer(_) = &self.grading else {
            return Err(invalid("graded involutions need an integer grading"));
        };
        for j in -(self.k() as i32)..=self.k() as i32 {
            if !self
                .block_space(-j)
                .contains_subspace(&self.block_space(j).image(&m))
            {
                return Err(invalid(format!(
                    "involution does not map degree {j} to {}",
                    -j
                )));
            }
        }
        Ok(AlgebraMap {
            matrix: m,
            kind: MapKind::Involution,
        })
    }

    /// `[[X, Y], Z]` on the odd part, which must be a Lie triple system.
    pub fn lts_from_z2(&self) -> Result<LieTripleSystem> {
        let parity = Grading::Parity(
            (0..self.dim())
                .map(|i| self.grading.degree(i).rem_euclid(2) == 1)
                .collect(),
        );
        let as_z2 = GradedLieAlgebra {
            grading: parity.clone(),
            euler: None,
            ..self.clone()
        };
        if !as_z2.grading_check().passed {
            return Err(invalid("parity involution is not an automorphism"));
        }
        let odd = parity.block(1);
        let ring = self.ring();
        let embed = |v: &[Scalar]| {
            let mut out = vector::zeros(ring, self.dim());
            for (k, &i) in odd.iter().enumerate() {
                out[i] = v[k];
            }
            out
        };
        let m = odd.len();
        let r = MultilinearMap::from_basis_fn(ring, &[m, m, m], m, |idx| {
            let (x, y, z) = (
                embed(&vector::unit(ring, m, idx[0])),
                embed(&vector::unit(ring, m, idx[1])),
                embed(&vector::unit(ring, m, idx[2])),
            );
            let w = self.br(&self.br(&x, &y), &z);
            odd.iter().map(|&i| w[i]).collect()
        });
        LieTripleSystem::new(r)
    }

    /// Jordan pair on `g₁ ⊕ g₋₁` with `T±(x, y, z) = [[x, y], z]`.
    pub fn pair_from_3graded(&self) -> Result<JordanPair> {
        let Grading::Integer(_) = &self.grading else {
            return Err(invalid("a 3-grading is an integer grading"));
        };
        if self.k() != 1 {
            return Err(invalid(format!(
                "expected a 3-grading, found k = {}",
                self.k()
            )));
        }
        let plus = self.grading.block(1);
        let minus = self.grading.block(-1);
        let t = |a: &[usize], b: &[usize]| {
            let ring = self.ring();
            let lift = |blk: &[usize], i: usize| self.unit(blk[i]);
            MultilinearMap::from_basis_fn(ring, &[a.len(), b.len(), a.len()], a.len(), |idx| {
                let w = self.br(
                    &self.br(&lift(a, idx[0]), &lift(b, idx[1])),
                    &lift(a, idx[2]),
                );
                a.iter().map(|&i| w[i]).collect()
            })
        };
        JordanPair::new(t(&plus, &minus), t(&minus, &plus))
    }

    /// `T(X, Y, Z) = [[X, θY], Z]` on `g₁`.
    pub fn jts_from_graded_involution(&self, theta: &AlgebraMap) -> Result<JordanTripleSystem> {
        let theta = self.graded_involution(theta.matrix.clone())?;
        if self.k() != 1 {
            return Err(invalid("expected a 3-grading"));
        }
        let v = self.grading.block(1);
        let ring = self.ring();
        let n = v.len();
        let t = MultilinearMap::from_basis_fn(ring, &[n, n, n], n, |idx| {
            let (x, y, z) = (
                self.unit(v[idx[0]]),
                self.unit(v[idx[1]]),
                self.unit(v[idx[2]]),
            );
            let w = self.br(&self.br(&x, &theta.matrix.mul_vec(&y)), &z);
            v.iter().map(|&i| w[i]).collect()
        });
        JordanTripleSystem::new(t)
    }

    /// `exp(ad x) = Σ ad(x)^j / j!`, checked to be an automorphism.
    pub fn exp_ad(&self, x: &[Scalar]) -> Result<AlgebraMap> {
        let ad = self.ad(x);
        let ring = self.ring();
        let mut total = Matrix::identity(ring, self.dim());
        let mut power = Matrix::identity(ring, self.dim());
        let mut j = 0u32;
        loop {
            power = power.mul(&ad);
            if power.is_zero() {
                break;
            }
            j += 1;
            if j as usize > self.dim() {
                return Err(invalid("ad(x) is not nilpotent"));
            }
            ring.require_inverts_up_to(j)?;
            total = total.add(&power.scale(inv_factorial(ring, j)));
        }
        let m = self
            .automorphism(total)
            .map_err(|_| invalid("exp(ad x) is not an automorphism"))?;
        Ok(m)
    }
}

fn inv_factorial(ring: Ring, j: u32) -> Scalar {
    let mut f = ring.one();
    for i in 1..=j {
        f *= ring.int(i as i64);
    }
    f.inv().expect("factorial checked invertible")
}

/// Euler operator for the grading with the given homogeneous vectors.
pub(crate) fn euler_for(
    g: &GradedLieAlgebra,
    homogeneous: &[(i32, Vec<Scalar>)],
    ring: Ring,
) -> Option<Vec<Scalar>> {
    let n = g.dim();
    // [E, X] = -ad(X) E
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (d, x) in homogeneous {
        let m = g.ad(x).scale(-ring.one());
        rows.extend(m.row_vecs());
        rhs.extend(vector::scale(ring.int(*d as i64), x));
    }
    let sys = Matrix::from_rows(ring, n, &rows);
    let derived = g.derived();
    if !derived.is_zero() {
        // E = c · basis(derived)
        let b = derived.basis().transpose();
        if let Some(c) = sys.mul(&b).solve_vec(&rhs) {
            return Some(b.mul_vec(&c));
        }
    }
    sys.solve_vec(&rhs)
}

// --------------------------------------------------- standard imbedding

/// Coordinates with respect to a fixed list of independent vectors.
struct Coordinates {
    pivots: Vec<usize>,
    inv: Matrix,
}

impl Coordinates {
    fn new(basis: &Matrix) -> Self {
        let (_, pivots) = basis.rref();
        let inv = basis
            .select_cols(&pivots)
            .inverse()
            .expect("independent basis");
        Coordinates { pivots, inv }
    }

    fn of(&self, v: &[Scalar]) -> Vec<Scalar> {
        let picked: Vec<Scalar> = self.pivots.iter().map(|&i| v[i]).collect();
        self.inv.vec_mul(&picked)
    }
}

struct Imbedding {
    bracket: MultilinearMap,
    h: Vec<Matrix>,
}

/// `q ⊕ h` with `[X, Y] = R(X, Y)`, `[D, Y] = DY`, `[D, E] = DE - ED`,
/// where `h` is spanned by the `R(e_i, e_j)` followed by `extra` when that
/// is independent of them.
fn imbed(q: &LieTripleSystem, extra: Option<Matrix>) -> Imbedding {
    let ring = q.ring();
    let n = q.dim();
    let flat = |m: &Matrix| m.data().to_vec();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            rows.push(flat(
                &q.operator(&vector::unit(ring, n, i), &vector::unit(ring, n, j)),
            ));
        }
    }
    let span = Subspace::span(ring, n * n, &rows);
    let mut basis = span.vectors();
    if let Some(e) = extra {
        if !span.contains(&flat(&e)) {
            basis.push(flat(&e));
        }
    }
    let r = basis.len();
    let h: Vec<Matrix> = basis
        .iter()
        .map(|v| Matrix::new(ring, n, n, v.clone()))
        .collect();
    let coords = (r > 0).then(|| Coordinates::new(&Matrix::from_rows(ring, n * n, &basis)));
    let in_h = |m: &Matrix| coords.as_ref().map(|c| c.of(m.data())).unwrap_or_default();
    let total = n + r;
    let bracket = MultilinearMap::from_basis_fn(ring, &[total, total], total, |idx| {
        let (a, b) = (idx[0], idx[1]);
        let mut out = vector::zeros(ring, total);
        match (a < n, b < n) {
            (true, true) => {
                let m = q.operator(&vector::unit(ring, n, a), &vector::unit(ring, n, b));
                out[n..].copy_from_slice(&in_h(&m));
            }
            (false, true) => out[..n].copy_from_slice(&h[a - n].col(b)),
            (true, false) => {
                out[..n].copy_from_slice(&vector::scale(-ring.one(), &h[b - n].col(a)))
            }
            (false, false) => out[n..].copy_from_slice(&in_h(&h[a - n].commutator(&h[b - n]))),
        }
        out
    });
    Imbedding { bracket, h }
}

/// The Z/2-graded algebra `q ⊕ h` (odd part first).
pub fn standard_imbedding(q: &LieTripleSystem) -> GradedLieAlgebra {
    let im = imbed(q, None);
    let n = q.dim();
    let parity = (0..n + im.h.len()).map(|i| i < n).collect();
    GradedLieAlgebra {
        bracket: im.bracket,
        grading: Grading::Parity(parity),
        euler: None,
    }
}

/// The 3-graded algebra `V⁺ ⊕ V⁻ ⊕ g₀` of a Jordan pair, with Euler
/// operator `E = (+1 on V⁺, -1 on V⁻)`.
pub fn tkk(p: &JordanPair) -> GradedLieAlgebra {
    let ring = p.ring();
    let (np, nm) = p.dims();
    let q = p.polarized_jts().to_lts();
    let diag: Vec<Scalar> = (0..np + nm)
        .map(|i| if i < np { ring.one() } else { -ring.one() })
        .collect();
    let e = Matrix::diagonal(ring, &diag);
    let im = imbed(&q, Some(e.clone()));
    let total = np + nm + im.h.len();
    let mut degrees = vec![1; np];
    degrees.extend(vec![-1; nm]);
    degrees.extend(vec![0; im.h.len()]);
    let flat: Vec<Vec<Scalar>> = im.h.iter().map(|m| m.data().to_vec()).collect();
    let mut euler = vector::zeros(ring, total);
    if !flat.is_empty() {
        let c =
            Coordinates::new(&Matrix::from_rows(ring, (np + nm) * (np + nm), &flat)).of(e.data());
        euler[np + nm..].copy_from_slice(&c);
    }
    GradedLieAlgebra {
        bracket: im.bracket,
        grading: Grading::Integer(degrees),
        euler: Some(euler),
    }
}

// ------------------------------------------------------------ matching

/// Scalars `(α, β, γ)` with `e = αx`, `f = βy`, `h = γ·h₀` satisfying the
/// sl(2) relations, where `x`, `y`, `h₀` span the degree 1, -1, 0 blocks.
pub fn sl2_match(g: &GradedLieAlgebra) -> Option<(Scalar, Scalar, Scalar)> {
    if g.dim() != 3 {
        return None;
    }
    let (b1, bm, b0) = (g.grading.block(1), g.grading.block(-1), g.grading.block(0));
    if b1.len() != 1 || bm.len() != 1 || b0.len() != 1 {
        return None;
    }
    let ring = g.ring();
    let cands: Vec<Scalar> = [1, -1, 2, -2]
        .iter()
        .map(|&c| ring.int(c))
        .chain([ring.ratio(1, 2), ring.ratio(-1, 2)])
        .collect();
    for &a in &cands {
        for &b in &cands {
            for &c in &cands {
                let e = vector::scale(a, &g.unit(b1[0]));
                let f = vector::scale(b, &g.unit(bm[0]));
                let h = vector::scale(c, &g.unit(b0[0]));
                let two = ring.int(2);
                if g.br(&e, &f) == h
                    && g.br(&h, &e) == vector::scale(two, &e)
                    && g.br(&h, &f) == vector::scale(-two, &f)
                {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

// --------------------------------------------------------------- orbits

/// Result of a breadth-first orbit computation; each member is stored with
/// a group element carrying the seed to it.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub members: BTreeMap<Vec<Subspace>, Matrix>,
    pub closed: bool,
    pub depth: usize,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `exp(ad x)` for every basis vector of nonzero degree.
pub fn elementary_generators(g: &GradedLieAlgebra) -> Result<Vec<Matrix>> {
    let mut out = Vec::new();
    for i in 0..g.dim() {
        if g.grading.degree(i) != 0 {
            out.push(g.exp_ad(&g.unit(i))?.matrix);
        }
    }
    Ok(out)
}

pub fn apply_chain(m: &Matrix, chain: &[Subspace]) -> Vec<Subspace> {
    chain.iter().map(|s| s.image(m)).collect()
}

/// Orbit of `seed` under the elementary group, by words of length at most
/// `max_depth`, refusing to grow beyond `limit` members.
pub fn elementary_orbit(
    g: &GradedLieAlgebra,
    seed: &[Subspace],
    max_depth: usize,
    limit: u64,
) -> Result<Orbit> {
    if !g.ring().is_finite() {
        return Err(Error::Method(
            "orbits are enumerated over prime fields".into(),
        ));
    }
    let gens = elementary_generators(g)?;
    let mut members = BTreeMap::new();
    members.insert(seed.to_vec(), Matrix::identity(g.ring(), g.dim()));
    let mut frontier: BTreeSet<Vec<Subspace>> = BTreeSet::new();
    frontier.insert(seed.to_vec());
    let mut depth = 0;
    while !frontier.is_empty() && depth < max_depth {
        let mut next = BTreeSet::new();
        for chain in &frontier {
            let elt = members[chain].clone();
            for gen in &gens {
                let image = apply_chain(gen, chain);
                if !members.contains_key(&image) {
                    members.insert(image.clone(), gen.mul(&elt));
                    next.insert(image);
                    if members.len() as u64 > limit {
                        return Err(Error::TooLarge {
                            size: members.len() as u128,
                            limit,
                        });
                    }
                }
            }
        }
        frontier = next;
        depth += 1;
    }
    Ok(Orbit {
        members,
        closed: frontier.is_empty(),
        depth,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::jordan::{scalar_pair, Sign};
    use crate::kernel::vector::from_ints;

    #[test]
    fn gl2_grading_and_euler() {
        let q = Ring::Rational;
        let g = catalog::gl_3graded(1, 1, q).unwrap();
        assert!(g.verify_lie().unwrap().passed());
        let e = g.find_euler().unwrap();
        assert_eq!(e, vec![q.ratio(1, 2), q.zero(), q.zero(), q.ratio(-1, 2)]);
        assert_eq!(g.euler_freedom(), 1);
        let wrong = GradedLieAlgebra {
            euler: Some(from_ints(q, &[1, 0, 0, -1])),
            ..g.clone()
        };
        let r = wrong.verify_lie().unwrap();
        assert!(!r.get("Euler").unwrap().passed);
    }

    #[test]
    fn abelian_has_no_euler() {
        let q = Ring::Rational;
        let g = GradedLieAlgebra::new(
            MultilinearMap::zero(q, &[2, 2], 2),
            Grading::Integer(vec![1, -1]),
            None,
        )
        .unwrap();
        assert!(g.verify_lie().unwrap().passed());
        assert_eq!(g.find_euler(), None);
        let p = g.pair_from_3graded().unwrap();
        assert!(p.t(Sign::Plus).is_zero() && p.t(Sign::Minus).is_zero());
    }

    #[test]
    fn sl2_euler_and_exp() {
        let q = Ring::Rational;
        let g = catalog::sl2(q);
        assert_eq!(
            g.find_euler(),
            Some(vec![q.zero(), q.zero(), q.ratio(1, 2)])
        );
        let ex = g.exp_ad(&g.unit(0)).unwrap();
        // exp(ad e) f = f + h - e
        assert_eq!(ex.matrix.mul_vec(&g.unit(1)), from_ints(q, &[-1, 1, 1]));
        assert!(g.exp_ad(&g.unit(2)).is_err());
        assert!(g.exp_ad(&vector::zeros(q, 3)).unwrap().matrix.is_identity());
    }

    #[test]
    fn sl2_lts() {
        let q = Ring::Rational;
        let g = GradedLieAlgebra {
            grading: Grading::Parity(vec![true, true, false]),
            ..catalog::sl2(q)
        };
        let l = g.lts_from_z2().unwrap();
        // [[e, f], e] = [h, e] = 2e
        assert_eq!(
            l.r.eval(&[
                &from_ints(q, &[1, 0]),
                &from_ints(q, &[0, 1]),
                &from_ints(q, &[1, 0])
            ]),
            from_ints(q, &[2, 0])
        );
        assert!(l.verify(Method::Basis).unwrap().passed());
    }

    #[test]
    fn imbedding_recovers_lts() {
        let q = Ring::Rational;
        let l = scalar_pair(q, 2).polarized_jts().to_lts();
        let g = standard_imbedding(&l);
        assert_eq!(g.dim(), 3);
        assert!(g.verify_lie().unwrap().passed());
        assert_eq!(g.lts_from_z2().unwrap(), l);
        let one = LieTripleSystem::new(MultilinearMap::zero(q, &[1, 1, 1], 1)).unwrap();
        assert_eq!(standard_imbedding(&one).dim(), 1);
    }

    #[test]
    fn tkk_scalar_is_sl2() {
        let q = Ring::Rational;
        let p = scalar_pair(q, 2);
        let g = tkk(&p);
        assert_eq!(g.dim(), 3);
        assert!(g.verify_lie().unwrap().passed());
        assert_eq!(g.pair_from_3graded().unwrap(), p);
        assert_eq!(sl2_match(&g), Some((q.one(), q.one(), q.int(2))));
    }

    #[test]
    fn tkk_zero_pair() {
        let q = Ring::Rational;
        let g = tkk(&JordanPair::zero(q, 1, 1));
        assert_eq!(g.dim(), 3);
        let e = g.euler.clone().unwrap();
        assert_eq!(g.br(&e, &g.unit(0)), g.unit(0));
        assert_eq!(g.br(&e, &g.unit(1)), vector::scale(-q.one(), &g.unit(1)));
        assert!(vector::is_zero(&g.br(&g.unit(0), &g.unit(1))));
    }

    #[test]
    fn graded_involution_on_gl2() {
        let q = Ring::Rational;
        let g = catalog::gl_3graded(1, 1, q).unwrap();
        // plain transpose reverses brackets
        let transpose =
            Matrix::from_ints(q, 4, 4, &[1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1]);
        let t = AlgebraMap {
            matrix: transpose,
            kind: MapKind::Involution,
        };
        assert!(g.jts_from_graded_involution(&t).is_err());
        // conjugation by the antidiagonal swap
        let swap = Matrix::from_ints(q, 4, 4, &[0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0]);
        let s = AlgebraMap {
            matrix: swap,
            kind: MapKind::Involution,
        };
        let j = g.jts_from_graded_involution(&s).unwrap();
        assert_eq!(j.t, scalar_pair(q, 2).t(Sign::Plus).clone());
    }

    #[test]
    fn orbits_small() {
        let f5 = Ring::Prime(5);
        let g = catalog::sl2(f5);
        let seed = crate::flags::LieFiltration::from_grading(&g).chain;
        let o = elementary_orbit(&g, &seed, 50, 1000).unwrap();
        assert!(o.closed);
        assert_eq!(o.len(), 6);
        for (chain, elt) in &o.members {
            assert_eq!(&apply_chain(elt, &seed), chain);
        }
        let ab = GradedLieAlgebra::new(
            MultilinearMap::zero(f5, &[1, 1], 1),
            Grading::Integer(vec![0]),
            None,
        )
        .unwrap();
        let s = vec![Subspace::full(f5, 1)];
        assert_eq!(elementary_orbit(&ab, &s, 5, 10).unwrap().len(), 1);
    }
}
