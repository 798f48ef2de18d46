//! `m` copies of the projective line `Gras_1(K²)`, transversal factorwise.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::grass::{DualPoint, GraphChart, GrassGeometry, Point};
use super::PairGeometry;
use crate::error::{invalid, Error, Result};
use crate::kernel::{Matrix, Ring, Scalar};

#[derive(Clone, Copy, Debug)]
pub struct ProductLineGeometry {
    pub line: GrassGeometry,
    pub m: usize,
}

impl ProductLineGeometry {
    pub fn new(ring: Ring, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(invalid("need at least one factor"));
        }
        Ok(ProductLineGeometry {
            line: GrassGeometry::new(ring, 2, 1)?,
            m,
        })
    }

    /// `(⟨e1⟩, …, ⟨e1⟩)`.
    pub fn origin(&self) -> Vec<Point> {
        let e1 = Matrix::from_ints(self.line.ring, 2, 1, &[1, 0]);
        alloc::vec![self.line.make_point(&e1).expect("rank one"); self.m]
    }

    /// `((1 0), …, (1 0))`, the dual whose chart has coordinate `t` at `⟨(1;t)⟩`.
    pub fn origin_dual(&self) -> Vec<DualPoint> {
        let phi = Matrix::from_ints(self.line.ring, 1, 2, &[1, 0]);
        alloc::vec![self.line.make_dual(&phi).expect("rank one"); self.m]
    }

    /// The point with coordinates `v` in the chart of [`Self::origin_dual`]
    /// centred at [`Self::origin`].
    pub fn point_at(&self, v: &[Scalar]) -> Vec<Point> {
        let ring = self.line.ring;
        v.iter()
            .map(|&t| {
                Point(crate::kernel::Subspace::column_space(&Matrix::new(
                    ring,
                    2,
                    1,
                    alloc::vec![ring.one(), t],
                )))
            })
            .collect()
    }
}

fn product<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = alloc::vec![Vec::new()];
    for list in lists {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                list.iter().map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x.clone());
                    p
                })
            })
            .collect();
    }
    out
}

impl PairGeometry for ProductLineGeometry {
    type Point = Vec<Point>;
    type Dual = Vec<DualPoint>;
    type Chart = Vec<GraphChart>;
    type DualChart = Vec<GraphChart>;

    fn ring(&self) -> Ring {
        self.line.ring
    }

    fn affine_origins(&self) -> bool {
        true
    }

    fn chart_dim(&self) -> usize {
        self.m
    }

    fn points(&self, limit: u64) -> Result<Vec<Vec<Point>>> {
        let one = self.line.points(limit)?;
        let size = (one.len() as u128).saturating_pow(self.m as u32);
        if size > limit as u128 {
            return Err(Error::TooLarge { size, limit });
        }
        Ok(product(&alloc::vec![one; self.m]))
    }

    fn duals(&self, limit: u64) -> Result<Vec<Vec<DualPoint>>> {
        let one = self.line.duals(limit)?;
        let size = (one.len() as u128).saturating_pow(self.m as u32);
        if size > limit as u128 {
            return Err(Error::TooLarge { size, limit });
        }
        Ok(product(&alloc::vec![one; self.m]))
    }

    fn transversal(&self, x: &Vec<Point>, a: &Vec<DualPoint>) -> bool {
        x.iter().zip(a).all(|(x, a)| self.line.transversal(x, a))
    }

    fn chart(&self, a: &Vec<DualPoint>, origin: &Vec<Point>) -> Result<Vec<GraphChart>> {
        a.iter()
            .zip(origin)
            .map(|(a, x)| self.line.chart(a, x))
            .collect()
    }

    fn apply(&self, c: &Vec<GraphChart>, y: &Vec<Point>) -> Option<Vec<Scalar>> {
        let mut out = Vec::with_capacity(self.m);
        for (c, y) in c.iter().zip(y) {
            out.extend(self.line.apply(c, y)?);
        }
        Some(out)
    }

    fn invert(&self, c: &Vec<GraphChart>, v: &[Scalar]) -> Vec<Point> {
        c.iter()
            .zip(v)
            .map(|(c, t)| self.line.invert(c, core::slice::from_ref(t)))
            .collect()
    }

    fn dual_chart(&self, x: &Vec<Point>, origin: &Vec<DualPoint>) -> Result<Vec<GraphChart>> {
        x.iter()
            .zip(origin)
            .map(|(x, a)| self.line.dual_chart(x, a))
            .collect()
    }

    fn dual_apply(&self, c: &Vec<GraphChart>, b: &Vec<DualPoint>) -> Option<Vec<Scalar>> {
        let mut out = Vec::with_capacity(self.m);
        for (c, b) in c.iter().zip(b) {
            out.extend(self.line.dual_apply(c, b)?);
        }
        Some(out)
    }

    fn dual_invert(&self, c: &Vec<GraphChart>, v: &[Scalar]) -> Vec<DualPoint> {
        c.iter()
            .zip(v)
            .map(|(c, t)| self.line.dual_invert(c, core::slice::from_ref(t)))
            .collect()
    }

    fn show_point(&self, x: &Vec<Point>) -> String {
        let parts: Vec<String> = x.iter().map(|p| self.line.show_point(p)).collect();
        format!("({})", parts.join(", "))
    }

    fn show_dual(&self, a: &Vec<DualPoint>) -> String {
        let parts: Vec<String> = a.iter().map(|p| self.line.show_dual(p)).collect();
        format!("({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::verify_affine_independence;

    #[test]
    fn counts_and_chart() {
        let f5 = Ring::Prime(5);
        let g = ProductLineGeometry::new(f5, 2).unwrap();
        assert_eq!(g.points(100).unwrap().len(), 36);
        let o = g.origin();
        let a = g.origin_dual();
        let c = g.chart(&a, &o).unwrap();
        let v = alloc::vec![f5.int(2), f5.int(4)];
        assert_eq!(g.apply(&c, &g.point_at(&v)), Some(v.clone()));
        assert_eq!(g.invert(&c, &v), g.point_at(&v));
        let duals = g.duals(100).unwrap();
        assert!(verify_affine_independence(&g, &duals[..5], 10_000)
            .unwrap()
            .passed());
    }
}
