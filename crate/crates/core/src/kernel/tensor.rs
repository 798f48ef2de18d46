use alloc::vec::Vec;

use super::matrix::Matrix;
use super::vector;
use super::{Ring, Scalar};
use crate::error::{shape, Result};

/// One nonzero structure constant: `t(e_{i}, e_{j}, e_{k}) ∋ value · e_target`.
///
/// Bilinear maps leave the third index at zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coeff {
    pub index: [usize; 3],
    pub target: usize,
    pub value: Scalar,
}

/// Bilinear or trilinear map between based free modules, stored as sorted
/// sparse structure constants.
#[derive(Clone, Debug)]
pub struct MultilinearMap {
    ring: Ring,
    slot_dims: Vec<usize>,
    target_dim: usize,
    coeffs: Vec<Coeff>,
    // Per basis tuple, the nonzero outputs. Derived from `coeffs`.
    fibers: Vec<Vec<(usize, Scalar)>>,
}

impl PartialEq for MultilinearMap {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && self.slot_dims == other.slot_dims
            && self.target_dim == other.target_dim
            && self.coeffs == other.coeffs
    }
}

impl Eq for MultilinearMap {}

impl MultilinearMap {
    /// Builds a map from explicit coefficients. Zero values are dropped;
    /// repeated keys are an error.
    pub fn from_coeffs(
        ring: Ring,
        slot_dims: &[usize],
        target_dim: usize,
        coeffs: impl IntoIterator<Item = Coeff>,
    ) -> Result<Self> {
        let arity = slot_dims.len();
        if arity != 2 && arity != 3 {
            return Err(shape("arity must be 2 or 3"));
        }
        let mut list: Vec<Coeff> = Vec::new();
        for c in coeffs {
            for (s, &d) in slot_dims.iter().enumerate() {
                if c.index[s] >= d {
                    return Err(shape("coefficient index out of range"));
                }
            }
            if arity == 2 && c.index[2] != 0 {
                return Err(shape("bilinear coefficient with a third index"));
            }
            if c.target >= target_dim {
                return Err(shape("coefficient target out of range"));
            }
            if c.value.ring() != ring {
                return Err(shape("coefficient from a different ring"));
            }
            list.push(c);
        }
        list.sort();
        for w in list.windows(2) {
            if w[0].index == w[1].index && w[0].target == w[1].target {
                return Err(shape("duplicate coefficient key"));
            }
        }
        list.retain(|c| !c.value.is_zero());
        Ok(Self::assemble(ring, slot_dims.to_vec(), target_dim, list))
    }

    fn assemble(ring: Ring, slot_dims: Vec<usize>, target_dim: usize, coeffs: Vec<Coeff>) -> Self {
        let d1 = slot_dims[1];
        let d2 = slot_dims.get(2).copied().unwrap_or(1);
        let mut fibers = alloc::vec![Vec::new(); slot_dims[0] * d1 * d2];
        for c in &coeffs {
            fibers[(c.index[0] * d1 + c.index[1]) * d2 + c.index[2]].push((c.target, c.value));
        }
        MultilinearMap {
            ring,
            slot_dims,
            target_dim,
            coeffs,
            fibers,
        }
    }

    /// Tabulates `f` on every basis tuple; `f` returns the output vector.
    pub fn from_basis_fn(
        ring: Ring,
        slot_dims: &[usize],
        target_dim: usize,
        mut f: impl FnMut(&[usize]) -> Vec<Scalar>,
    ) -> Self {
        let arity = slot_dims.len();
        assert!(arity == 2 || arity == 3, "arity must be 2 or 3");
        let d2 = if arity == 3 { slot_dims[2] } else { 1 };
        let mut coeffs = Vec::new();
        for i in 0..slot_dims[0] {
            for j in 0..slot_dims[1] {
                for k in 0..d2 {
                    let idx = [i, j, k];
                    let out = f(&idx[..arity]);
                    assert_eq!(out.len(), target_dim, "evaluator returned wrong length");
                    for (t, v) in out.into_iter().enumerate() {
                        if !v.is_zero() {
                            coeffs.push(Coeff {
                                index: idx,
                                target: t,
                                value: v,
                            });
                        }
                    }
                }
            }
        }
        Self::assemble(ring, slot_dims.to_vec(), target_dim, coeffs)
    }

    /// Like [`Self::from_basis_fn`] but the evaluator receives the basis
    /// vectors themselves, so any closed-form multilinear formula can be used.
    pub fn from_closed_form(
        ring: Ring,
        slot_dims: &[usize],
        target_dim: usize,
        mut f: impl FnMut(&[Vec<Scalar>]) -> Vec<Scalar>,
    ) -> Self {
        Self::from_basis_fn(ring, slot_dims, target_dim, |idx| {
            let args: Vec<Vec<Scalar>> = idx
                .iter()
                .zip(slot_dims)
                .map(|(&i, &d)| vector::unit(ring, d, i))
                .collect();
            f(&args)
        })
    }

    pub fn zero(ring: Ring, slot_dims: &[usize], target_dim: usize) -> Self {
        Self::assemble(ring, slot_dims.to_vec(), target_dim, Vec::new())
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn arity(&self) -> usize {
        self.slot_dims.len()
    }

    pub fn slot_dims(&self) -> &[usize] {
        &self.slot_dims
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Output on a basis tuple.
    pub fn basis_value(&self, idx: &[usize]) -> Vec<Scalar> {
        let d1 = self.slot_dims[1];
        let d2 = self.slot_dims.get(2).copied().unwrap_or(1);
        let k = idx.get(2).copied().unwrap_or(0);
        let mut out = vector::zeros(self.ring, self.target_dim);
        for &(t, v) in &self.fibers[(idx[0] * d1 + idx[1]) * d2 + k] {
            out[t] += v;
        }
        out
    }

    pub fn eval(&self, args: &[&[Scalar]]) -> Vec<Scalar> {
        self.try_eval(args)
            .expect("tensor evaluation shape mismatch")
    }

    pub fn try_eval(&self, args: &[&[Scalar]]) -> Result<Vec<Scalar>> {
        if args.len() != self.arity() {
            return Err(shape("wrong number of arguments"));
        }
        for (a, &d) in args.iter().zip(&self.slot_dims) {
            if a.len() != d {
                return Err(shape("argument has wrong dimension"));
            }
        }
        let mut out = vector::zeros(self.ring, self.target_dim);
        let d1 = self.slot_dims[1];
        let d2 = self.slot_dims.get(2).copied().unwrap_or(1);
        let nz = |a: &[Scalar]| -> Vec<(usize, Scalar)> {
            a.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, &x)| (i, x))
                .collect()
        };
        let a0 = nz(args[0]);
        let a1 = nz(args[1]);
        let a2 = if self.arity() == 3 {
            nz(args[2])
        } else {
            alloc::vec![(0, self.ring.one())]
        };
        for &(i, x) in &a0 {
            for &(j, y) in &a1 {
                let xy = x * y;
                let base = (i * d1 + j) * d2;
                for &(k, z) in &a2 {
                    let fiber = &self.fibers[base + k];
                    if fiber.is_empty() {
                        continue;
                    }
                    let s = xy * z;
                    for &(t, v) in fiber {
                        out[t] += s * v;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of the linear map obtained by fixing every slot except `free`.
    /// `args[free]` is ignored.
    pub fn operator(&self, args: &[&[Scalar]], free: usize) -> Matrix {
        let d = self.slot_dims[free];
        let units: Vec<Vec<Scalar>> = (0..d).map(|i| vector::unit(self.ring, d, i)).collect();
        let mut cols = Vec::with_capacity(d);
        let mut buf: Vec<&[Scalar]> = args.to_vec();
        for e in &units {
            buf[free] = e;
            cols.push(self.eval(&buf));
        }
        Matrix::from_cols(self.ring, self.target_dim, &cols)
    }

    /// Re-indexes slots: the new map sends `(x_0, .., x_{n-1})` to the old
    /// map applied with `x_{perm[s]}` in slot `s`.
    pub fn permute_slots(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.arity());
        let mut dims = self.slot_dims.clone();
        for (s, &p) in perm.iter().enumerate() {
            dims[p] = self.slot_dims[s];
        }
        let coeffs = self.coeffs.iter().map(|c| {
            let mut idx = [0usize; 3];
            for (s, &p) in perm.iter().enumerate() {
                idx[p] = c.index[s];
            }
            Coeff {
                index: idx,
                target: c.target,
                value: c.value,
            }
        });
        Self::from_coeffs(self.ring, &dims, self.target_dim, coeffs).unwrap()
    }

    pub fn scale(&self, c: Scalar) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|k| Coeff {
                value: c * k.value,
                ..*k
            })
            .filter(|k| !k.value.is_zero())
            .collect();
        Self::assemble(self.ring, self.slot_dims.clone(), self.target_dim, coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.slot_dims, other.slot_dims);
        assert_eq!(self.target_dim, other.target_dim);
        let mut merged: Vec<Coeff> = Vec::new();
        let (a, b) = (&self.coeffs, &other.coeffs);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let key = |c: &Coeff| (c.index, c.target);
            let next = if j == b.len() || (i < a.len() && key(&a[i]) < key(&b[j])) {
                i += 1;
                a[i - 1]
            } else if i == a.len() || key(&b[j]) < key(&a[i]) {
                j += 1;
                b[j - 1]
            } else {
                i += 1;
                j += 1;
                Coeff {
                    value: a[i - 1].value + b[j - 1].value,
                    ..a[i - 1]
                }
            };
            if !next.value.is_zero() {
                merged.push(next);
            }
        }
        Self::assemble(self.ring, self.slot_dims.clone(), self.target_dim, merged)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::vector::from_ints;

    #[test]
    fn zero_argument_gives_zero() {
        let q = Ring::Rational;
        let t = MultilinearMap::from_basis_fn(q, &[2, 2, 2], 2, |i| {
            from_ints(q, &[(i[0] + i[1]) as i64, (i[2] + 1) as i64])
        });
        let z = from_ints(q, &[0, 0]);
        let x = from_ints(q, &[1, 3]);
        assert!(vector::is_zero(&t.eval(&[&z, &x, &x])));
        assert!(vector::is_zero(&t.eval(&[&x, &x, &z])));
    }

    #[test]
    fn single_coefficient() {
        let q = Ring::Rational;
        let t = MultilinearMap::from_closed_form(q, &[1, 1, 1], 1, |a| {
            alloc::vec![q.int(2) * a[0][0] * a[1][0] * a[2][0]]
        });
        assert_eq!(t.coeffs().len(), 1);
        assert_eq!(t.coeffs()[0].value, q.int(2));
        let one = alloc::vec![q.one()];
        assert_eq!(t.eval(&[&one, &one, &one]), alloc::vec![q.int(2)]);
    }

    #[test]
    fn zero_evaluator_is_empty() {
        let q = Ring::Rational;
        let t = MultilinearMap::from_basis_fn(q, &[2, 2], 3, |_| vector::zeros(q, 3));
        assert!(t.coeffs().is_empty());
    }

    #[test]
    fn duplicates_and_ranges_rejected() {
        let q = Ring::Rational;
        let c = Coeff {
            index: [0, 0, 0],
            target: 0,
            value: q.one(),
        };
        assert!(MultilinearMap::from_coeffs(q, &[1, 1, 1], 1, [c, c]).is_err());
        let bad = Coeff {
            index: [1, 0, 0],
            target: 0,
            value: q.one(),
        };
        assert!(MultilinearMap::from_coeffs(q, &[1, 1, 1], 1, [bad]).is_err());
        assert!(MultilinearMap::from_coeffs(q, &[1, 1, 1], 1, [c]).is_ok());
    }

    #[test]
    fn operator_columns() {
        let q = Ring::Rational;
        // t(x, y) = (x0 y1, x1 y0)
        let t = MultilinearMap::from_closed_form(q, &[2, 2], 2, |a| {
            alloc::vec![a[0][0] * a[1][1], a[0][1] * a[1][0]]
        });
        let x = from_ints(q, &[2, 3]);
        let op = t.operator(&[&x, &x], 1);
        assert_eq!(op, Matrix::from_ints(q, 2, 2, &[0, 2, 3, 0]));
    }

    #[test]
    fn permute_and_add() {
        let q = Ring::Rational;
        let t = MultilinearMap::from_closed_form(q, &[2, 2], 2, |a| {
            alloc::vec![a[0][0] * a[1][1], q.zero()]
        });
        let s = t.permute_slots(&[1, 0]);
        let x = from_ints(q, &[1, 0]);
        let y = from_ints(q, &[0, 1]);
        assert_eq!(s.eval(&[&y, &x]), t.eval(&[&x, &y]));
        let d = t.add(&t.scale(q.int(-1)));
        assert!(d.is_zero());
    }
}
