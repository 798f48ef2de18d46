//! Precomputed charts of a finite affine pair geometry: one fixed origin per
//! dual, with point ⇄ code tables.
//!
//! In an affine pair geometry the linear subspaces of `(α^⊤, x)` through `x`
//! are the affine subspaces of `α^⊤` containing `x`, so a single origin per
//! dual decides intrinsic-ness and closures.

use alloc::vec::Vec;

use super::PairGeometry;
use crate::error::{Error, Result};
use crate::kernel::vector;
use crate::kernel::{Matrix, Ring, Scalar};

const NONE: u32 = u32::MAX;

pub struct Atlas<G: PairGeometry> {
    pub points: Vec<G::Point>,
    pub duals: Vec<G::Dual>,
    ring: Ring,
    dim: usize,
    /// `code_of[d][i]`: code of point `i` in the chart of dual `d`.
    code_of: Vec<Vec<u32>>,
    /// `point_at[d][c]`: the point with code `c`.
    point_at: Vec<Vec<u32>>,
}

impl<G: PairGeometry> Atlas<G> {
    pub fn new(g: &G, limit: u64) -> Result<Self> {
        let ring = g.ring();
        if !ring.is_finite() {
            return Err(Error::Method("atlases are built over prime fields".into()));
        }
        let points = g.points(limit)?;
        let duals = g.duals(limit)?;
        let dim = g.chart_dim();
        let size = vector::field_power(ring, dim);
        let work = (points.len() as u128 + size) * duals.len() as u128;
        if work > limit as u128 {
            return Err(Error::TooLarge { size: work, limit });
        }
        let mut code_of = Vec::with_capacity(duals.len());
        let mut point_at = Vec::with_capacity(duals.len());
        for a in &duals {
            let mut codes = alloc::vec![NONE; points.len()];
            let mut back = alloc::vec![NONE; size as usize];
            if let Some(origin) = points.iter().find(|x| g.transversal(x, a)) {
                let c = g.chart(a, origin)?;
                for (i, y) in points.iter().enumerate() {
                    if let Some(v) = g.apply(&c, y) {
                        let code = vector::encode(&v) as u32;
                        codes[i] = code;
                        back[code as usize] = i as u32;
                    }
                }
            }
            code_of.push(codes);
            point_at.push(back);
        }
        Ok(Atlas {
            points,
            duals,
            ring,
            dim,
            code_of,
            point_at,
        })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn index(&self, x: &G::Point) -> Option<usize> {
        self.points.binary_search(x).ok()
    }

    pub fn dual_index(&self, a: &G::Dual) -> Option<usize> {
        self.duals.binary_search(a).ok()
    }

    pub fn transversal(&self, i: usize, d: usize) -> bool {
        self.code_of[d][i] != NONE
    }

    pub fn code(&self, i: usize, d: usize) -> Option<u32> {
        let c = self.code_of[d][i];
        (c != NONE).then_some(c)
    }

    pub fn point_at(&self, d: usize, code: u32) -> usize {
        self.point_at[d][code as usize] as usize
    }

    fn vec(&self, code: u32) -> Vec<Scalar> {
        vector::decode(self.ring, self.dim, code as u64)
    }

    /// Codes (in the chart of `d`) of the members transversal to `d`.
    pub fn trace(&self, members: &[usize], d: usize) -> Vec<u32> {
        members.iter().filter_map(|&i| self.code(i, d)).collect()
    }

    /// Base point and direction basis (echelon rows) of the affine span of
    /// `codes`.
    fn affine_span(&self, codes: &[u32]) -> (Vec<Scalar>, Matrix) {
        let base = self.vec(codes[0]);
        let mut rows: Vec<(usize, Vec<Scalar>)> = Vec::new();
        for &c in &codes[1..] {
            if rows.len() == self.dim {
                break;
            }
            let mut v = vector::sub(&self.vec(c), &base);
            for (p, r) in &rows {
                let f = v[*p];
                if !f.is_zero() {
                    vector::axpy(&mut v, -f, r);
                }
            }
            if let Some(p) = v.iter().position(|x| !x.is_zero()) {
                let inv = v[p].inv().expect("field");
                let v = vector::scale(inv, &v);
                for (_, r) in rows.iter_mut() {
                    let f = r[p];
                    if !f.is_zero() {
                        vector::axpy(r, -f, &v);
                    }
                }
                rows.push((p, v));
            }
        }
        let rows: Vec<Vec<Scalar>> = rows.into_iter().map(|(_, r)| r).collect();
        (base, Matrix::from_rows(self.ring, self.dim, &rows))
    }

    /// Whether the members meeting chart `d` form an affine subspace there.
    pub fn is_flat_in(&self, members: &[usize], d: usize) -> bool {
        let codes = self.trace(members, d);
        if codes.len() <= 1 {
            return true;
        }
        let (_, dirs) = self.affine_span(&codes);
        vector::field_power(self.ring, dirs.rows()) == codes.len() as u128
    }

    /// The first dual in whose chart the members are not flat.
    pub fn intrinsic_violation(&self, members: &[usize]) -> Option<usize> {
        (0..self.duals.len()).find(|&d| !self.is_flat_in(members, d))
    }

    pub fn is_intrinsic(&self, members: &[usize]) -> bool {
        self.intrinsic_violation(members).is_none()
    }

    /// Points of the affine span of the members in chart `d`.
    fn span_points(&self, codes: &[u32], d: usize) -> Vec<usize> {
        let (base, dirs) = self.affine_span(codes);
        let k = dirs.rows();
        let n = vector::field_power(self.ring, k) as u64;
        (0..n)
            .map(|c| {
                let coeffs = vector::decode(self.ring, k, c);
                let v = vector::add(&base, &dirs.vec_mul(&coeffs));
                self.point_at(d, vector::encode(&v) as u32)
            })
            .collect()
    }

    /// Smallest intrinsic superset: repeatedly replaces the trace in every
    /// chart by its affine span. `stop` is called whenever points were added,
    /// with the current membership, and may abort by returning `true`.
    pub fn closure_with(
        &self,
        members: &[usize],
        mut stop: impl FnMut(&[bool]) -> bool,
    ) -> Vec<usize> {
        let mut inside = alloc::vec![false; self.points.len()];
        let mut list = Vec::new();
        for &i in members {
            if !inside[i] {
                inside[i] = true;
                list.push(i);
            }
        }
        loop {
            let mut changed = false;
            for d in 0..self.duals.len() {
                let codes = self.trace(&list, d);
                if codes.len() <= 1 {
                    continue;
                }
                let (_, dirs) = self.affine_span(&codes);
                if vector::field_power(self.ring, dirs.rows()) == codes.len() as u128 {
                    continue;
                }
                let before = list.len();
                for i in self.span_points(&codes, d) {
                    if !inside[i] {
                        inside[i] = true;
                        list.push(i);
                    }
                }
                changed |= list.len() > before;
                if list.len() > before && stop(&inside) {
                    list.sort_unstable();
                    return list;
                }
            }
            if !changed {
                break;
            }
        }
        list.sort_unstable();
        list
    }

    pub fn closure(&self, members: &[usize]) -> Vec<usize> {
        self.closure_with(members, |_| false)
    }
}

/// Intrinsic test straight from the definition: in every chart `(α, x)` with
/// `x` a member, the members' coordinates are closed under sums and scalar
/// multiples.
pub fn is_intrinsic_generic<G: PairGeometry>(
    g: &G,
    members: &[G::Point],
    duals: &[G::Dual],
) -> bool {
    let scalars: Vec<Scalar> = match g.ring().elements() {
        Some(it) => it.collect(),
        None => return false,
    };
    for a in duals {
        let inside: Vec<&G::Point> = members.iter().filter(|x| g.transversal(x, a)).collect();
        for x in &inside {
            let Ok(c) = g.chart(a, x) else { return false };
            let coords: Vec<Vec<Scalar>> = inside
                .iter()
                .map(|y| g.apply(&c, y).expect("transversal"))
                .collect();
            let mut set = coords.clone();
            set.sort();
            let has = |v: &Vec<Scalar>| set.binary_search(v).is_ok();
            for u in &coords {
                if scalars.iter().any(|&r| !has(&vector::scale(r, u))) {
                    return false;
                }
                if coords.iter().any(|v| !has(&vector::add(u, v))) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::GrassGeometry;
    use crate::kernel::{Ring, Subspace};

    #[test]
    fn projective_plane() {
        let f5 = Ring::Prime(5);
        let g = GrassGeometry::new(f5, 3, 1).unwrap();
        let atlas = Atlas::new(&g, 100_000).unwrap();
        assert_eq!(atlas.points.len(), 31);
        let plane = Subspace::coordinate(f5, 3, &[0, 1]);
        let line: Vec<usize> = (0..31)
            .filter(|&i| plane.contains_subspace(&atlas.points[i].0))
            .collect();
        assert_eq!(line.len(), 6);
        assert!(atlas.is_intrinsic(&line));
        let pts: Vec<_> = line.iter().map(|&i| atlas.points[i].clone()).collect();
        assert!(is_intrinsic_generic(&g, &pts, &atlas.duals));
        assert_eq!(atlas.closure(&line[..2]), line);
        let three = [
            line[0],
            line[1],
            (0..31).find(|i| !line.contains(i)).unwrap(),
        ];
        assert!(!atlas.is_intrinsic(&three));
        assert_eq!(atlas.closure(&three).len(), 31);
        assert_eq!(atlas.closure(&line[..1]), line[..1].to_vec());
    }
}
