use alloc::vec::Vec;
use core::fmt;

use super::matrix::Matrix;
use super::vector;
use super::{Ring, Scalar};
use crate::error::{shape, Result};

/// A subspace of `K^n` stored as its unique reduced row echelon basis, so
/// that equality of subspaces is equality of values.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let basis = r.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
        Subspace {
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    /// Column space of `m`.
    pub fn column_space(m: &Matrix) -> Self {
        Self::row_space(&m.transpose())
    }

    pub fn span(ring: Ring, ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        Self::row_space(&Matrix::from_rows(ring, ambient, vectors))
    }

    pub fn zero(ring: Ring, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(ring, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ring: Ring, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ring, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ring: Ring, ambient: usize, idx: &[usize]) -> Self {
        let vs: Vec<_> = idx
            .iter()
            .map(|&i| vector::unit(ring, ambient, i))
            .collect();
        Self::span(ring, ambient, &vs)
    }

    pub fn ring(&self) -> Ring {
        self.basis.ring()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    fn check_same(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient || self.ring() != other.ring() {
            return Err(shape("subspaces live in different ambient spaces"));
        }
        Ok(())
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p]).collect();
        let back = self.basis.vec_mul(&coords);
        (back.as_slice() == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        Ok(Self::row_space(&self.basis.vstack(&other.basis)))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ring(), self.ambient));
        }
        // (λ, μ) with λA + μB = 0 gives λA in A ∩ B.
        let stacked = self.basis.vstack(&other.basis);
        let rel = stacked.transpose().kernel();
        let a = self.dim();
        let vs: Vec<Vec<Scalar>> = (0..rel.rows())
            .map(|i| self.basis.vec_mul(&rel.row(i)[..a]))
            .collect();
        Ok(Self::span(self.ring(), self.ambient, &vs))
    }

    /// True iff `self ⊕ other` is the whole ambient space.
    pub fn is_complement(&self, other: &Subspace) -> Result<bool> {
        self.check_same(other)?;
        if self.dim() + other.dim() != self.ambient {
            return Ok(false);
        }
        Ok(self.basis.vstack(&other.basis).rank() == self.ambient)
    }

    /// True iff the sum is direct (the intersection is zero).
    pub fn is_independent_of(&self, other: &Subspace) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.basis.vstack(&other.basis).rank() == self.dim() + other.dim())
    }

    /// A complement spanned by the standard vectors at non-pivot positions.
    pub fn complement(&self) -> Subspace {
        let idx: Vec<usize> = (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect();
        Self::coordinate(self.ring(), self.ambient, &idx)
    }

    /// Linear forms (as row vectors) vanishing on the subspace.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Self::full(self.ring(), self.ambient);
        }
        Self::row_space(&self.basis.kernel())
    }

    /// Image under the linear map `m` (acting on column vectors).
    pub fn image(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient, "image shape mismatch");
        if self.is_zero() {
            return Self::zero(self.ring(), m.rows());
        }
        Self::row_space(&self.basis.mul(&m.transpose()))
    }

    /// All vectors of the subspace over a prime field, in lexicographic order
    /// of their echelon coordinates.
    pub fn elements(&self) -> Vec<Vec<Scalar>> {
        let ring = self.ring();
        let count = vector::field_power(ring, self.dim()) as u64;
        (0..count)
            .map(|code| self.basis.vec_mul(&vector::decode(ring, self.dim(), code)))
            .collect()
    }

    /// All `k`-dimensional subspaces of `F_p^n`, sorted.
    pub fn enumerate(ring: Ring, n: usize, k: usize) -> Vec<Subspace> {
        assert!(
            ring.is_finite(),
            "subspace enumeration needs a finite field"
        );
        let mut out = Vec::new();
        for pivots in combinations(n, k) {
            let mut free = Vec::new();
            for (i, &p) in pivots.iter().enumerate() {
                for c in p + 1..n {
                    if !pivots.contains(&c) {
                        free.push((i, c));
                    }
                }
            }
            let count = vector::field_power(ring, free.len()) as u64;
            for code in 0..count {
                let vals = vector::decode(ring, free.len(), code);
                let mut m = Matrix::zeros(ring, k, n);
                for (i, &p) in pivots.iter().enumerate() {
                    m.set(i, p, ring.one());
                }
                for (&(i, c), &v) in free.iter().zip(&vals) {
                    m.set(i, c, v);
                }
                out.push(Subspace {
                    ambient: n,
                    basis: m,
                    pivots: pivots.clone(),
                });
            }
        }
        out.sort();
        out
    }

    /// All subspaces of `F_p^n` of every dimension, by dimension then order.
    pub fn enumerate_all(ring: Ring, n: usize) -> Vec<Subspace> {
        (0..=n).flat_map(|k| Self::enumerate(ring, n, k)).collect()
    }

    /// All `k`-dimensional subspaces `E` with `lower ⊆ E ⊆ upper`, sorted.
    pub fn between(lower: &Subspace, upper: &Subspace, k: usize) -> Vec<Subspace> {
        let ring = lower.ring();
        if !upper.contains_subspace(lower) || k < lower.dim() || k > upper.dim() {
            return Vec::new();
        }
        // Extend the basis of `lower` to one of `upper`.
        let mut extra: Vec<Vec<Scalar>> = Vec::new();
        let mut acc = lower.clone();
        for v in upper.vectors() {
            if !acc.contains(&v) {
                acc = acc
                    .sum(&Subspace::span(
                        ring,
                        lower.ambient,
                        core::slice::from_ref(&v),
                    ))
                    .unwrap();
                extra.push(v);
            }
        }
        let m = Matrix::from_rows(ring, lower.ambient, &extra);
        let mut out: Vec<Subspace> = Subspace::enumerate(ring, extra.len(), k - lower.dim())
            .into_iter()
            .map(|s| {
                let lifted = if s.is_zero() {
                    Subspace::zero(ring, lower.ambient)
                } else {
                    Subspace::row_space(&s.basis.mul(&m))
                };
                lifted.sum(lower).unwrap()
            })
            .collect();
        out.sort();
        out
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.basis)
    }
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        while i > 0 && cur[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Gaussian binomial coefficient `[n choose k]_q`.
pub fn gaussian_binomial(n: u32, k: u32, q: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::vector::from_ints;

    #[test]
    fn intersect_coordinate_planes() {
        let q = Ring::Rational;
        let a = Subspace::coordinate(q, 3, &[0, 1]);
        let b = Subspace::coordinate(q, 3, &[1, 2]);
        assert_eq!(a.intersect(&b).unwrap(), Subspace::coordinate(q, 3, &[1]));
    }

    #[test]
    fn direct_sum_with_itself_fails() {
        let q = Ring::Rational;
        let a = Subspace::coordinate(q, 2, &[0]);
        assert!(!a.is_complement(&a).unwrap());
        let b = Subspace::coordinate(q, 2, &[1]);
        assert!(a.is_complement(&b).unwrap());
    }

    #[test]
    fn complement_from_non_pivots() {
        let f = Ring::Prime(5);
        let a = Subspace::span(f, 2, &[from_ints(f, &[1, 1])]);
        assert_eq!(
            a.complement(),
            Subspace::span(f, 2, &[from_ints(f, &[0, 1])])
        );
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let q = Ring::Rational;
        assert!(Subspace::zero(q, 2).sum(&Subspace::zero(q, 3)).is_err());
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 0), alloc::vec![alloc::vec![]]);
        assert_eq!(combinations(3, 3), alloc::vec![alloc::vec![0, 1, 2]]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn enumeration_matches_gaussian_binomials() {
        let f = Ring::Prime(5);
        for n in 1..=4u32 {
            for k in 0..=n {
                let got = Subspace::enumerate(f, n as usize, k as usize).len() as u128;
                assert_eq!(got, gaussian_binomial(n, k, 5), "n={n} k={k}");
            }
        }
        assert_eq!(Subspace::enumerate(f, 4, 2).len(), 806);
        assert_eq!(Subspace::enumerate_all(f, 4).len(), 1120);
    }

    #[test]
    fn between_counts() {
        let f = Ring::Prime(5);
        let l = Subspace::coordinate(f, 4, &[0]);
        let u = Subspace::coordinate(f, 4, &[0, 1, 2]);
        assert_eq!(Subspace::between(&l, &u, 2).len(), 6);
        let z = Subspace::zero(f, 4);
        let w = Subspace::full(f, 4);
        assert_eq!(Subspace::between(&z, &w, 2).len(), 806);
    }

    #[test]
    fn annihilator_and_image() {
        let q = Ring::Rational;
        let a = Subspace::span(q, 2, &[from_ints(q, &[1, 1])]);
        assert_eq!(
            a.annihilator(),
            Subspace::span(q, 2, &[from_ints(q, &[1, -1])])
        );
        let swap = Matrix::from_ints(q, 2, 2, &[0, 1, 1, 0]);
        assert_eq!(a.image(&swap), a);
    }
}
