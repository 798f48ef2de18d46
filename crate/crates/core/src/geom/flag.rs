//! Module flags `f₁ ⊂ … ⊂ f_m ⊂ W` of a fixed type, paired with flags of the
//! complementary type.
//!
//! A point of type `(d₁, …, d_m)` is transversal to a dual `(a₁, …, a_m)` of
//! type `(w − d_m, …, w − d₁)` when `W = f_i ⊕ a_{m+1−i}` for every `i`. The
//! chart of `α^⊤` with origin `x` is the iterated graph chart: `y_m` is the
//! graph of `A : x_m → a₁`, the rest of the flag is pulled back into `x_m`
//! by `(1 + A)⁻¹`, where it is transversal to `(x_m ∩ a₂, …, x_m ∩ a_m)`, and
//! the construction repeats inside `x_m`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::grass::GraphChart;
use super::PairGeometry;
use crate::error::{invalid, Error, Result};
use crate::kernel::subspace::gaussian_binomial;
use crate::kernel::{Matrix, Ring, Scalar, Subspace};

/// A strictly increasing chain of proper nonzero subspaces.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialFlag {
    pub members: Vec<Subspace>,
}

impl PartialFlag {
    pub fn new(members: Vec<Subspace>) -> Result<Self> {
        let ok = !members.is_empty()
            && !members[0].is_zero()
            && !members.last().unwrap().is_full()
            && members
                .windows(2)
                .all(|w| w[1].contains_subspace(&w[0]) && w[0].dim() < w[1].dim());
        if !ok {
            return Err(invalid("need 0 < f1 < ... < fm < W"));
        }
        Ok(PartialFlag { members })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.members.iter().map(Subspace::dim).collect()
    }
}

/// How `α^⊤` is linearized around an origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChartStyle {
    /// Iterated graph charts.
    Graph,
    /// `X ↦ exp(X)·x` for `X` in the nilpotent algebra `𝔣₁(α)`.
    Exp,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagGeometry {
    pub ring: Ring,
    pub w: usize,
    pub dims: Vec<usize>,
    pub style: ChartStyle,
}

#[derive(Clone, Debug)]
pub enum FlagChart {
    Graph(GraphFlagChart),
    Exp(ExpChart),
}

impl FlagChart {
    fn apply(&self, y: &PartialFlag) -> Option<Vec<Scalar>> {
        match self {
            FlagChart::Graph(c) => c.apply(y),
            FlagChart::Exp(c) => c.apply(y),
        }
    }

    fn invert(&self, v: &[Scalar]) -> PartialFlag {
        match self {
            FlagChart::Graph(c) => c.invert(v),
            FlagChart::Exp(c) => c.invert(v),
        }
    }
}

/// One graph chart per level; level `l` lives in the coordinates of the top
/// origin member of level `l − 1`.
#[derive(Clone, Debug)]
pub struct GraphFlagChart {
    levels: Vec<GraphChart>,
}

/// `𝔣₁(α) = {X : X a_i ⊆ a_{i−1}}` (with `a₀ = 0`, `a_{m+1} = W`), as a
/// basis of `w×w` matrices, and the origin.
#[derive(Clone, Debug)]
pub struct ExpChart {
    basis: Vec<Matrix>,
    /// columns are the flattened basis matrices
    stacked: Matrix,
    origin: PartialFlag,
}

fn nilpotent_algebra(dual: &PartialFlag) -> Vec<Matrix> {
    let ring = dual.members[0].ring();
    let w = dual.members[0].ambient();
    let mut chain = alloc::vec![Subspace::zero(ring, w)];
    chain.extend(dual.members.iter().cloned());
    chain.push(Subspace::full(ring, w));
    let mut rows = Vec::new();
    for i in 1..chain.len() {
        let forms = chain[i - 1].annihilator();
        for psi in forms.vectors() {
            for u in chain[i].vectors() {
                let mut row = alloc::vec![ring.zero(); w * w];
                for r in 0..w {
                    for c in 0..w {
                        row[r * w + c] = psi[r] * u[c];
                    }
                }
                rows.push(row);
            }
        }
    }
    let kernel = Matrix::from_rows(ring, w * w, &rows).kernel();
    kernel
        .row_vecs()
        .into_iter()
        .map(|v| Matrix::new(ring, w, w, v))
        .collect()
}

fn exp_nilpotent(x: &Matrix) -> Matrix {
    let ring = x.ring();
    let n = x.rows();
    let mut out = Matrix::identity(ring, n);
    let mut term = Matrix::identity(ring, n);
    for j in 1..=n as i64 {
        term = term.mul(x).scale(ring.ratio(1, j));
        if term.is_zero() {
            break;
        }
        out = out.add(&term);
    }
    out
}

fn log_unipotent(u: &Matrix) -> Matrix {
    let ring = u.ring();
    let n = u.rows();
    let x = u.sub(&Matrix::identity(ring, n));
    let mut out = Matrix::zeros(ring, n, n);
    let mut power = Matrix::identity(ring, n);
    for j in 1..=n as i64 {
        power = power.mul(&x);
        if power.is_zero() {
            break;
        }
        let c = if j % 2 == 1 {
            ring.ratio(1, j)
        } else {
            ring.ratio(-1, j)
        };
        out = out.add(&power.scale(c));
    }
    out
}

impl ExpChart {
    fn new(dual: &PartialFlag, origin: &PartialFlag) -> Result<Self> {
        let basis = nilpotent_algebra(dual);
        let ring = origin.members[0].ring();
        let w = origin.members[0].ambient();
        ring.require_inverts_up_to(w as u32)?;
        let cols: Vec<Vec<Scalar>> = basis.iter().map(|b| b.data().to_vec()).collect();
        let stacked = Matrix::from_cols(ring, w * w, &cols);
        Ok(ExpChart {
            basis,
            stacked,
            origin: origin.clone(),
        })
    }

    fn combine(&self, v: &[Scalar]) -> Matrix {
        let ring = self.stacked.ring();
        let w = self.origin.members[0].ambient();
        Matrix::new(ring, w, w, self.stacked.mul_vec(v))
    }

    /// Solves `(1 + X)·x = y` for `X ∈ 𝔣₁(α)` (a linear system), then takes
    /// the logarithm.
    fn apply(&self, y: &PartialFlag) -> Option<Vec<Scalar>> {
        let ring = self.stacked.ring();
        let d = self.basis.len();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for (xi, yi) in self.origin.members.iter().zip(&y.members) {
            let forms = yi.annihilator();
            for u in xi.vectors() {
                let images: Vec<Vec<Scalar>> = self.basis.iter().map(|b| b.mul_vec(&u)).collect();
                for psi in forms.vectors() {
                    rows.push(
                        (0..d)
                            .map(|k| crate::kernel::vector::dot(&psi, &images[k]))
                            .collect::<Vec<_>>(),
                    );
                    rhs.push(-crate::kernel::vector::dot(&psi, &u));
                }
            }
        }
        let c = Matrix::from_rows(ring, d, &rows).solve_vec(&rhs)?;
        let x = self.combine(&c);
        let w = x.rows();
        let log = log_unipotent(&x.add(&Matrix::identity(ring, w)));
        self.stacked.solve_vec(log.data())
    }

    fn invert(&self, v: &[Scalar]) -> PartialFlag {
        let g = exp_nilpotent(&self.combine(v));
        PartialFlag {
            members: self.origin.members.iter().map(|s| s.image(&g)).collect(),
        }
    }
}

impl GraphFlagChart {
    /// `dual` plays the role of `α`.
    fn new(dual: &PartialFlag, origin: &PartialFlag) -> Result<Self> {
        let mut levels = Vec::new();
        let mut x: Vec<Matrix> = origin
            .members
            .iter()
            .map(|s| s.basis().transpose())
            .collect();
        let mut a: Vec<Matrix> = dual.members.iter().map(|s| s.basis().transpose()).collect();
        while let Some(top) = x.pop() {
            let chart = GraphChart::new(top.clone(), a[0].clone())?;
            let n = top.rows();
            let top_space = Subspace::column_space(&top);
            let coords = |m: &Matrix| top.solve(m).expect("inside the top member");
            x = x.iter().map(coords).collect();
            a = a[1..]
                .iter()
                .map(|m| {
                    let meet = top_space
                        .intersect(&Subspace::column_space(m))
                        .expect("same ambient");
                    if meet.is_zero() {
                        Matrix::zeros(m.ring(), n, 0)
                    } else {
                        coords(&meet.basis().transpose())
                    }
                })
                .collect();
            levels.push(chart);
        }
        Ok(GraphFlagChart { levels })
    }

    fn apply(&self, y: &PartialFlag) -> Option<Vec<Scalar>> {
        let mut out = Vec::new();
        let mut ys: Vec<Matrix> = y.members.iter().map(|s| s.basis().transpose()).collect();
        for chart in &self.levels {
            let top = ys.pop()?;
            out.extend(chart.apply_rep(&top)?);
            let d = chart.base.cols();
            let idx: Vec<usize> = (0..d).collect();
            ys = ys
                .iter()
                .map(|m| chart.inv.mul(m).select_rows(&idx))
                .collect();
            if ys.iter().any(|m| m.rank() < m.cols()) {
                return None;
            }
        }
        Some(out)
    }

    fn invert(&self, v: &[Scalar]) -> PartialFlag {
        let mut maps = Vec::with_capacity(self.levels.len());
        let mut at = 0;
        for chart in &self.levels {
            let n = chart.comp.cols() * chart.base.cols();
            maps.push(chart.invert_rep(&v[at..at + n]));
            at += n;
        }
        // members from the outside in: f_m = im M₀, f_{m−1} = im M₀M₁, …
        let mut members = Vec::with_capacity(maps.len());
        let mut acc: Option<Matrix> = None;
        for m in &maps {
            let next = match &acc {
                None => m.clone(),
                Some(p) => p.mul(m),
            };
            members.push(Subspace::column_space(&next));
            acc = Some(next);
        }
        members.reverse();
        PartialFlag { members }
    }
}

impl FlagGeometry {
    pub fn new(ring: Ring, w: usize, dims: &[usize]) -> Result<Self> {
        let ok = !dims.is_empty()
            && dims[0] > 0
            && *dims.last().unwrap() < w
            && dims.windows(2).all(|p| p[0] < p[1]);
        if !ok {
            return Err(invalid("need 0 < d1 < ... < dm < w"));
        }
        Ok(FlagGeometry {
            ring,
            w,
            dims: dims.to_vec(),
            style: ChartStyle::Graph,
        })
    }

    pub fn with_style(mut self, style: ChartStyle) -> Self {
        self.style = style;
        self
    }

    fn make_chart(&self, a: &PartialFlag, origin: &PartialFlag) -> Result<FlagChart> {
        if !Self::flag_transversal(origin, a) {
            return Err(Error::NotTransversal);
        }
        Ok(match self.style {
            ChartStyle::Graph => FlagChart::Graph(GraphFlagChart::new(a, origin)?),
            ChartStyle::Exp => FlagChart::Exp(ExpChart::new(a, origin)?),
        })
    }

    /// The geometry of the complementary type, whose points are our duals.
    pub fn dual_geometry(&self) -> FlagGeometry {
        let dims = self.dims.iter().rev().map(|d| self.w - d).collect();
        FlagGeometry {
            ring: self.ring,
            w: self.w,
            dims,
            style: self.style,
        }
    }

    pub fn count(&self) -> Option<u128> {
        let q = self.ring.order()? as u128;
        let mut n = gaussian_binomial(self.w as u32, self.dims[0] as u32, q);
        for p in self.dims.windows(2) {
            n *= gaussian_binomial((self.w - p[0]) as u32, (p[1] - p[0]) as u32, q);
        }
        Some(n)
    }

    fn enumerate(&self, limit: u64) -> Result<Vec<PartialFlag>> {
        let n = self
            .count()
            .ok_or_else(|| Error::Method("flags are enumerated over prime fields".into()))?;
        if n > limit as u128 {
            return Err(Error::TooLarge { size: n, limit });
        }
        let full = Subspace::full(self.ring, self.w);
        let mut out: Vec<Vec<Subspace>> = Subspace::enumerate(self.ring, self.w, self.dims[0])
            .into_iter()
            .map(|s| alloc::vec![s])
            .collect();
        for &d in &self.dims[1..] {
            out = out
                .into_iter()
                .flat_map(|chain| {
                    Subspace::between(chain.last().unwrap(), &full, d)
                        .into_iter()
                        .map(move |s| {
                            let mut c = chain.clone();
                            c.push(s);
                            c
                        })
                })
                .collect();
        }
        let mut out: Vec<PartialFlag> = out
            .into_iter()
            .map(|members| PartialFlag { members })
            .collect();
        out.sort();
        Ok(out)
    }

    pub fn flag_transversal(x: &PartialFlag, a: &PartialFlag) -> bool {
        let m = x.len();
        m == a.len()
            && (0..m).all(|i| {
                x.members[i]
                    .is_complement(&a.members[m - 1 - i])
                    .unwrap_or(false)
            })
    }
}

fn show(f: &PartialFlag) -> String {
    let parts: Vec<String> = f.members.iter().map(|s| format!("{s}")).collect();
    format!("({})", parts.join(" < "))
}

impl PairGeometry for FlagGeometry {
    type Point = PartialFlag;
    type Dual = PartialFlag;
    type Chart = FlagChart;
    type DualChart = FlagChart;

    fn ring(&self) -> Ring {
        self.ring
    }

    fn chart_dim(&self) -> usize {
        let mut ambient = self.w;
        let mut total = 0;
        for &d in self.dims.iter().rev() {
            total += d * (ambient - d);
            ambient = d;
        }
        total
    }

    fn points(&self, limit: u64) -> Result<Vec<PartialFlag>> {
        self.enumerate(limit)
    }

    fn duals(&self, limit: u64) -> Result<Vec<PartialFlag>> {
        self.dual_geometry().enumerate(limit)
    }

    fn transversal(&self, x: &PartialFlag, a: &PartialFlag) -> bool {
        Self::flag_transversal(x, a)
    }

    fn chart(&self, a: &PartialFlag, origin: &PartialFlag) -> Result<FlagChart> {
        self.make_chart(a, origin)
    }

    fn apply(&self, c: &FlagChart, y: &PartialFlag) -> Option<Vec<Scalar>> {
        c.apply(y)
    }

    fn invert(&self, c: &FlagChart, v: &[Scalar]) -> PartialFlag {
        c.invert(v)
    }

    fn dual_chart(&self, x: &PartialFlag, origin: &PartialFlag) -> Result<FlagChart> {
        self.dual_geometry().make_chart(x, origin)
    }

    fn dual_apply(&self, c: &FlagChart, b: &PartialFlag) -> Option<Vec<Scalar>> {
        c.apply(b)
    }

    fn dual_invert(&self, c: &FlagChart, v: &[Scalar]) -> PartialFlag {
        c.invert(v)
    }

    fn show_point(&self, x: &PartialFlag) -> String {
        show(x)
    }

    fn show_dual(&self, a: &PartialFlag) -> String {
        show(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{chart_domain, verify_affine_independence};

    #[test]
    fn counts() {
        let f5 = Ring::Prime(5);
        let g = FlagGeometry::new(f5, 4, &[1, 3]).unwrap();
        assert_eq!(g.count(), Some(4836));
        assert_eq!(g.chart_dim(), 5);
        let g = FlagGeometry::new(f5, 3, &[1, 2]).unwrap();
        assert_eq!(g.points(1000).unwrap().len(), 31 * 6);
        assert_eq!(g.chart_dim(), 3);
        assert_eq!(FlagGeometry::new(f5, 4, &[1, 2, 3]).unwrap().chart_dim(), 6);
    }

    #[test]
    fn chart_round_trip_and_domain() {
        let f5 = Ring::Prime(5);
        let g = FlagGeometry::new(f5, 3, &[1, 2]).unwrap();
        let pts = g.points(1000).unwrap();
        let a = &g.duals(1000).unwrap()[40];
        let dom = chart_domain(&g, &pts, a);
        assert_eq!(dom.len(), 125);
        for origin in [&dom[0], &dom[77]] {
            let c = g.chart(a, origin).unwrap();
            assert_eq!(g.apply(&c, origin), Some(alloc::vec![f5.zero(); 3]));
            for y in &pts {
                match g.apply(&c, y) {
                    Some(v) => assert_eq!(&g.invert(&c, &v), y),
                    None => assert!(!g.transversal(y, a)),
                }
            }
        }
        let x = &dom[5];
        let duals = g.duals(1000).unwrap();
        let ddom: Vec<_> = duals.iter().filter(|b| g.transversal(x, b)).collect();
        let c = g.dual_chart(x, ddom[3]).unwrap();
        for b in &ddom {
            assert_eq!(&g.dual_invert(&c, &g.dual_apply(&c, b).unwrap()), *b);
        }
    }

    #[test]
    fn full_flags_of_k3_are_affine() {
        let f5 = Ring::Prime(5);
        let g = FlagGeometry::new(f5, 3, &[1, 2]).unwrap();
        let duals = g.duals(1000).unwrap();
        let r = verify_affine_independence(&g, &duals[..2], 100_000).unwrap();
        assert!(r.passed(), "{r}");
    }
}
