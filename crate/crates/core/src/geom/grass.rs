//! The Grassmannian pair `(Gras_a(W), Gras^a(W))`: `a`-dimensional
//! subspaces against kernels of surjections onto `K^a`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::PairGeometry;
use crate::error::{invalid, shape, Error, Result};
use crate::kernel::matrix::CanonicalMode;
use crate::kernel::vector;
use crate::kernel::{Matrix, Ring, Scalar, Subspace};
use crate::report::{Check, Report};

/// An `a`-dimensional subspace, the column space of its representative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(pub Subspace);

/// The row space of a full-rank `a×w` matrix; its kernel is the subspace
/// it stands for.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DualPoint(pub Subspace);

impl Point {
    /// Canonical `w×a` representative in column echelon form.
    pub fn rep(&self) -> Matrix {
        self.0.basis().transpose()
    }
}

impl DualPoint {
    /// Canonical `a×w` representative in row echelon form.
    pub fn rep(&self) -> Matrix {
        self.0.basis().clone()
    }

    pub fn kernel(&self) -> Subspace {
        self.0.annihilator()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrassGeometry {
    pub ring: Ring,
    pub w: usize,
    pub a: usize,
}

/// Graph chart of the complements of `comp`: a subspace `Y` with basis
/// `base·M + comp·N` (`M` invertible) has coordinates `N M⁻¹`.
#[derive(Clone, Debug)]
pub struct GraphChart {
    pub(crate) base: Matrix,
    pub(crate) comp: Matrix,
    pub(crate) inv: Matrix,
}

impl GraphChart {
    pub(crate) fn new(base: Matrix, comp: Matrix) -> Result<Self> {
        let inv = base.hstack(&comp).inverse().ok_or(Error::NotTransversal)?;
        Ok(GraphChart { base, comp, inv })
    }

    /// Coordinates of the column space of `y` (any full-rank representative).
    pub fn apply_rep(&self, y: &Matrix) -> Option<Vec<Scalar>> {
        let b = self.base.cols();
        let c = self.comp.cols();
        let z = self.inv.mul(y);
        let m = z.select_rows(&(0..b).collect::<Vec<_>>());
        let n = z.select_rows(&(b..b + c).collect::<Vec<_>>());
        Some(n.mul(&m.inverse()?).into_data())
    }

    pub fn invert_rep(&self, v: &[Scalar]) -> Matrix {
        let a = Matrix::new(
            self.base.ring(),
            self.comp.cols(),
            self.base.cols(),
            v.to_vec(),
        );
        self.base.add(&self.comp.mul(&a))
    }
}

impl GrassGeometry {
    pub fn new(ring: Ring, w: usize, a: usize) -> Result<Self> {
        if a == 0 || a >= w {
            return Err(invalid("need 1 <= a < w"));
        }
        Ok(GrassGeometry { ring, w, a })
    }

    pub fn make_point(&self, f: &Matrix) -> Result<Point> {
        if f.rows() != self.w || f.cols() != self.a {
            return Err(shape(format!(
                "point representative must be {}x{}",
                self.w, self.a
            )));
        }
        if f.rank() != self.a {
            return Err(Error::RankDeficient);
        }
        Ok(Point(Subspace::column_space(f)))
    }

    pub fn make_dual(&self, phi: &Matrix) -> Result<DualPoint> {
        if phi.rows() != self.a || phi.cols() != self.w {
            return Err(shape(format!(
                "dual representative must be {}x{}",
                self.a, self.w
            )));
        }
        if phi.rank() != self.a {
            return Err(Error::RankDeficient);
        }
        Ok(DualPoint(Subspace::row_space(phi)))
    }

    /// The dual point whose kernel is `k` (of dimension `w − a`).
    pub fn dual_with_kernel(&self, k: &Subspace) -> Result<DualPoint> {
        if k.dim() != self.w - self.a {
            return Err(shape("kernel has the wrong dimension"));
        }
        Ok(DualPoint(k.annihilator()))
    }

    pub fn transversal_rep(f: &Matrix, phi: &Matrix) -> bool {
        !phi.mul(f).det().is_zero()
    }

    /// `(1−r) f(φf)⁻¹ + r h(φh)⁻¹` on representatives.
    pub fn p_r_rep(f: &Matrix, phi: &Matrix, h: &Matrix, r: Scalar) -> Result<Matrix> {
        let fi = phi.mul(f).inverse().ok_or(Error::NotTransversal)?;
        let hi = phi.mul(h).inverse().ok_or(Error::NotTransversal)?;
        let one = r.ring().one();
        Ok(f.mul(&fi).scale(one - r).add(&h.mul(&hi).scale(r)))
    }

    pub fn p_r(&self, x: &Point, a: &DualPoint, y: &Point, r: Scalar) -> Result<Point> {
        let m = Self::p_r_rep(&x.rep(), &a.rep(), &y.rep(), r)?;
        self.make_point(&m)
    }

    pub fn s_add(&self, x: &Point, a: &DualPoint, y: &Point, z: &Point) -> Result<Point> {
        super::add(self, x, a, y, z)
    }

    /// The column echelon form used for points.
    pub fn canonical_rep(m: &Matrix) -> Matrix {
        m.canonical_form(CanonicalMode::Column)
    }

    /// Duals chosen one per pivot pattern, first in order.
    pub fn pivot_representatives(&self, limit: u64) -> Result<Vec<DualPoint>> {
        let all = self.duals(limit)?;
        Ok(super::first_per_key(&all, |d| d.0.pivots().to_vec()))
    }

    /// Chart law: `chart_{α,x}(P_r(x, α, y)) = r · chart_{α,x}(y)` for every
    /// `x, y ∈ α^⊤` and every scalar `r`, with `P_r` from the matrix formula.
    pub fn chart_law(&self, duals: &[DualPoint], limit: u64) -> Result<Report> {
        let ring = self.ring;
        let scalars: Vec<Scalar> = ring
            .elements()
            .ok_or_else(|| Error::Method("needs a prime field".into()))?
            .collect();
        let points = self.points(limit)?;
        let mut cases = 0u64;
        for a in duals {
            let phi = a.rep();
            let dom = super::chart_domain(self, &points, a);
            let normal: Vec<Matrix> = dom
                .iter()
                .map(|x| {
                    x.rep()
                        .mul(&phi.mul(&x.rep()).inverse().expect("transversal"))
                })
                .collect();
            for (i, x) in dom.iter().enumerate() {
                let c = self.chart(a, x)?;
                for (j, y) in dom.iter().enumerate() {
                    let v = self.apply(&c, y).expect("transversal");
                    for &r in &scalars {
                        cases += 1;
                        let m = normal[i].scale(ring.one() - r).add(&normal[j].scale(r));
                        let got = self.make_point(&m)?;
                        let ok = self.transversal(&got, a)
                            && self.apply(&c, &got) == Some(vector::scale(r, &v));
                        if !ok {
                            let w = format!(
                                "alpha={} x={} y={} r={r}",
                                self.show_dual(a),
                                self.show_point(x),
                                self.show_point(y)
                            );
                            let mut rep = Report::new();
                            rep.push(Check::fail("ChartLaw", w).note("cases", cases));
                            return Ok(rep);
                        }
                    }
                }
            }
        }
        let mut rep = Report::new();
        rep.push(
            Check::pass("ChartLaw")
                .note("duals", duals.len())
                .note("cases", cases),
        );
        Ok(rep)
    }
}

impl PairGeometry for GrassGeometry {
    type Point = Point;
    type Dual = DualPoint;
    type Chart = GraphChart;
    type DualChart = GraphChart;

    fn ring(&self) -> Ring {
        self.ring
    }

    fn affine_origins(&self) -> bool {
        true
    }

    fn chart_dim(&self) -> usize {
        self.a * (self.w - self.a)
    }

    fn points(&self, limit: u64) -> Result<Vec<Point>> {
        check_count(self, limit)?;
        Ok(Subspace::enumerate(self.ring, self.w, self.a)
            .into_iter()
            .map(Point)
            .collect())
    }

    fn duals(&self, limit: u64) -> Result<Vec<DualPoint>> {
        check_count(self, limit)?;
        Ok(Subspace::enumerate(self.ring, self.w, self.a)
            .into_iter()
            .map(DualPoint)
            .collect())
    }

    fn transversal(&self, x: &Point, a: &DualPoint) -> bool {
        Self::transversal_rep(&x.rep(), &a.rep())
    }

    fn chart(&self, a: &DualPoint, origin: &Point) -> Result<GraphChart> {
        GraphChart::new(origin.rep(), a.kernel().basis().transpose())
    }

    fn apply(&self, c: &GraphChart, y: &Point) -> Option<Vec<Scalar>> {
        c.apply_rep(&y.rep())
    }

    fn invert(&self, c: &GraphChart, v: &[Scalar]) -> Point {
        Point(Subspace::column_space(&c.invert_rep(v)))
    }

    fn dual_chart(&self, x: &Point, origin: &DualPoint) -> Result<GraphChart> {
        GraphChart::new(origin.kernel().basis().transpose(), x.rep())
    }

    fn dual_apply(&self, c: &GraphChart, b: &DualPoint) -> Option<Vec<Scalar>> {
        c.apply_rep(&b.kernel().basis().transpose())
    }

    fn dual_invert(&self, c: &GraphChart, v: &[Scalar]) -> DualPoint {
        DualPoint(Subspace::column_space(&c.invert_rep(v)).annihilator())
    }

    fn show_point(&self, x: &Point) -> String {
        format!("{}", x.0)
    }

    fn show_dual(&self, a: &DualPoint) -> String {
        format!("{}", a.0)
    }
}

fn check_count(g: &GrassGeometry, limit: u64) -> Result<()> {
    let q = g
        .ring
        .order()
        .ok_or_else(|| Error::Method("points are enumerated over prime fields".into()))?;
    let n = crate::kernel::subspace::gaussian_binomial(g.w as u32, g.a as u32, q as u128);
    if n > limit as u128 {
        return Err(Error::TooLarge { size: n, limit });
    }
    Ok(())
}

/// Orthocomplement polarity of a symmetric invertible form.
#[derive(Clone, Debug)]
pub struct Orthopolarity {
    pub geometry: GrassGeometry,
    pub form: Matrix,
    form_inv: Matrix,
}

impl Orthopolarity {
    pub fn new(geometry: GrassGeometry, form: Matrix) -> Result<Self> {
        if geometry.w != 2 * geometry.a {
            return Err(shape("orthopolarity needs w = 2a"));
        }
        if form.rows() != geometry.w || form.cols() != geometry.w || form.transpose() != form {
            return Err(invalid("form must be a symmetric w x w matrix"));
        }
        let form_inv = form
            .inverse()
            .ok_or_else(|| invalid("form is degenerate"))?;
        Ok(Orthopolarity {
            geometry,
            form,
            form_inv,
        })
    }

    pub fn dot(geometry: GrassGeometry) -> Result<Self> {
        Self::new(geometry, Matrix::identity(geometry.ring, geometry.w))
    }

    /// The dual point with kernel `x^⊥`.
    pub fn forward(&self, x: &Point) -> DualPoint {
        DualPoint(Subspace::row_space(&x.rep().transpose().mul(&self.form)))
    }

    pub fn backward(&self, a: &DualPoint) -> Point {
        Point(Subspace::column_space(
            &self.form_inv.mul(&a.rep().transpose()),
        ))
    }

    pub fn is_non_isotropic(&self, x: &Point) -> bool {
        self.geometry.transversal(x, &self.forward(x))
    }

    /// `σ_x(y) = P_{−1}(x, p⁺(x), y)`.
    pub fn sigma(&self, x: &Point, y: &Point) -> Result<Point> {
        let a = self.forward(x);
        if !self.geometry.transversal(x, &a) {
            return Err(invalid("x is isotropic"));
        }
        self.geometry.p_r(x, &a, y, -self.geometry.ring.one())
    }

    /// (M1)–(M3) on all defined tuples of non-isotropic points.
    pub fn verify_symmetric_space(&self, limit: u64) -> Result<Report> {
        let g = &self.geometry;
        let points = g.points(limit)?;
        let index = |p: &Point| points.binary_search(p).expect("enumerated point");
        let m: Vec<usize> = (0..points.len())
            .filter(|&i| self.is_non_isotropic(&points[i]))
            .collect();
        let m_size = m.len() as u128;
        let table = m_size * points.len() as u128;
        if table > limit as u128 {
            return Err(Error::TooLarge { size: table, limit });
        }
        const NONE: u32 = u32::MAX;
        let n = points.len();
        // mu[k * n + j] = σ_{m[k]}(points[j]) when defined
        let mut mu = alloc::vec![NONE; m.len() * n];
        let mut slot = alloc::vec![NONE; n];
        for (k, &i) in m.iter().enumerate() {
            slot[i] = k as u32;
            let a = self.forward(&points[i]);
            for j in 0..n {
                if g.transversal(&points[j], &a) {
                    mu[k * n + j] = index(&self.sigma(&points[i], &points[j])?) as u32;
                }
            }
        }
        let at = |k: usize, j: usize| mu[k * n + j];
        let mut r = Report::new();

        let m1 = m.iter().enumerate().find(|&(k, &i)| at(k, i) != i as u32);
        r.push(match m1 {
            None => Check::pass("M1").note("points", m.len()),
            Some((_, &i)) => Check::fail("M1", g.show_point(&points[i])),
        });

        let (mut defined, mut fail) = (0u64, None);
        for (k, &i) in m.iter().enumerate() {
            for j in 0..n {
                let y = at(k, j);
                if y == NONE {
                    continue;
                }
                defined += 1;
                if at(k, y as usize) != j as u32 && fail.is_none() {
                    fail = Some(format!(
                        "x={} y={}",
                        g.show_point(&points[i]),
                        g.show_point(&points[j])
                    ));
                }
            }
        }
        r.push(match fail {
            None => Check::pass("M2").note("defined_pairs", defined),
            Some(w) => Check::fail("M2", w).note("defined_pairs", defined),
        });

        let (mut total, mut defined, mut closed_pairs, mut fail) = (0u64, 0u64, 0u64, None);
        let mut pair_total = 0u64;
        for (kx, &x) in m.iter().enumerate() {
            for &y in &m {
                let xy = at(kx, y);
                pair_total += 1;
                if xy != NONE && slot[xy as usize] != NONE {
                    closed_pairs += 1;
                }
            }
            let _ = x;
        }
        for (kx, &x) in m.iter().enumerate() {
            for (ky, &y) in m.iter().enumerate() {
                let xy = at(kx, y);
                let kxy = if xy == NONE { NONE } else { slot[xy as usize] };
                for &z in &m {
                    total += 1;
                    let yz = at(ky, z);
                    if yz == NONE || kxy == NONE {
                        continue;
                    }
                    let lhs = at(kx, yz as usize);
                    let xz = at(kx, z);
                    if lhs == NONE || xz == NONE {
                        continue;
                    }
                    let rhs = at(kxy as usize, xz as usize);
                    if rhs == NONE {
                        continue;
                    }
                    defined += 1;
                    if lhs != rhs && fail.is_none() {
                        fail = Some(format!(
                            "x={} y={} z={}",
                            g.show_point(&points[x]),
                            g.show_point(&points[y]),
                            g.show_point(&points[z])
                        ));
                    }
                }
            }
        }
        let c = match fail {
            None => Check::pass("M3"),
            Some(w) => Check::fail("M3", w),
        };
        r.push(
            c.note("triples", total)
                .note("defined_triples", defined)
                .note("pairs", pair_total)
                .note("pairs_landing_in_M", closed_pairs),
        );
        Ok(r)
    }
}

/// For `Gras_1(K²)`: the dual point with kernel `y` (the null system of the
/// symplectic form); `x ⊤ null(y)` iff `x ≠ y`.
pub fn null_system_check(g: &GrassGeometry, limit: u64) -> Result<Check> {
    if g.w != 2 * g.a {
        return Err(shape("null system needs w = 2a"));
    }
    let pts = g.points(limit)?;
    for x in &pts {
        for y in &pts {
            let nul = g.dual_with_kernel(&y.0)?;
            if g.transversal(x, &nul) == (x == y) {
                return Ok(Check::fail("NullSystem", format!("x={} y={}", x.0, y.0)));
            }
        }
    }
    Ok(Check::pass("NullSystem").note("pairs", pts.len() * pts.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{add, scale, verify_affine_independence};
    use crate::kernel::sample::Sampler;
    use alloc::vec;

    fn q_line() -> GrassGeometry {
        GrassGeometry::new(Ring::Rational, 2, 1).unwrap()
    }

    fn col(ring: Ring, xs: &[i64]) -> Matrix {
        Matrix::from_ints(ring, xs.len(), 1, xs)
    }

    #[test]
    fn make_point_canonical() {
        let q = Ring::Rational;
        let g = q_line();
        assert_eq!(
            g.make_point(&col(q, &[2, 2])).unwrap().rep(),
            col(q, &[1, 1])
        );
        assert!(g.make_point(&col(q, &[0, 0])).is_err());
        let g4 = GrassGeometry::new(q, 4, 2).unwrap();
        let f = Matrix::from_ints(q, 4, 2, &[1, 0, 0, 1, 1, 1, 2, 3]);
        let h = f.mul(&Matrix::from_ints(q, 2, 2, &[2, 1, 1, 1]));
        assert_eq!(g4.make_point(&f).unwrap(), g4.make_point(&h).unwrap());
    }

    #[test]
    fn transversality_examples() {
        let q = Ring::Rational;
        let g = q_line();
        let x = g.make_point(&col(q, &[1, 0])).unwrap();
        let ker_e1 = g.make_dual(&Matrix::from_ints(q, 1, 2, &[0, 1])).unwrap();
        let ker_e2 = g.make_dual(&Matrix::from_ints(q, 1, 2, &[1, 0])).unwrap();
        assert!(!g.transversal(&x, &ker_e1));
        assert!(g.transversal(&x, &ker_e2));
    }

    #[test]
    fn transversality_matches_direct_sum() {
        let f5 = Ring::Prime(5);
        let g = GrassGeometry::new(f5, 4, 2).unwrap();
        let duals = g.duals(10_000).unwrap();
        let mut s = Sampler::new(7);
        for _ in 0..200 {
            let x = g.make_point(&Matrix::from_cols(
                f5,
                4,
                &[s.vector(f5, 4), s.vector(f5, 4)],
            ));
            let Ok(x) = x else { continue };
            let a = &duals[s.below(duals.len() as u64) as usize];
            assert_eq!(
                g.transversal(&x, a),
                x.0.is_complement(&a.kernel()).unwrap()
            );
        }
    }

    #[test]
    fn line_chart_coordinates() {
        let q = Ring::Rational;
        let g = q_line();
        let x = g.make_point(&col(q, &[1, 0])).unwrap();
        let a = g.make_dual(&Matrix::from_ints(q, 1, 2, &[1, 0])).unwrap();
        let c = g.chart(&a, &x).unwrap();
        assert_eq!(g.apply(&c, &x), Some(vec![q.zero()]));
        let y = g.make_point(&col(q, &[1, 7])).unwrap();
        assert_eq!(g.apply(&c, &y), Some(vec![q.int(7)]));
        assert_eq!(g.invert(&c, &[q.int(7)]), y);
    }

    #[test]
    fn p_r_examples() {
        let q = Ring::Rational;
        let g = q_line();
        let a = g.make_dual(&Matrix::from_ints(q, 1, 2, &[1, 0])).unwrap();
        let x = g.make_point(&col(q, &[1, 0])).unwrap();
        let y = g.make_point(&col(q, &[1, 3])).unwrap();
        assert_eq!(g.p_r(&x, &a, &y, q.zero()).unwrap(), x);
        assert_eq!(g.p_r(&x, &a, &y, q.one()).unwrap(), y);
        let half = g.p_r(&x, &a, &y, q.ratio(2, 3)).unwrap();
        assert_eq!(half, g.make_point(&col(q, &[1, 2])).unwrap());
        assert_eq!(scale(&g, &x, &a, &y, q.ratio(2, 3)).unwrap(), half);
        let f5 = Ring::Prime(5);
        let g5 = GrassGeometry::new(f5, 2, 1).unwrap();
        let a5 = g5.make_dual(&Matrix::from_ints(f5, 1, 2, &[1, 0])).unwrap();
        let o = g5.make_point(&col(f5, &[1, 0])).unwrap();
        let one = g5.make_point(&col(f5, &[1, 1])).unwrap();
        let mid = g5.p_r(&o, &a5, &one, f5.ratio(1, 2)).unwrap();
        assert_eq!(mid, g5.make_point(&col(f5, &[1, 3])).unwrap());
        assert!(g
            .p_r(
                &x,
                &g.make_dual(&Matrix::from_ints(q, 1, 2, &[0, 1])).unwrap(),
                &y,
                q.one()
            )
            .is_err());
    }

    #[test]
    fn s_add_examples() {
        let q = Ring::Rational;
        let g = q_line();
        let a = g.make_dual(&Matrix::from_ints(q, 1, 2, &[1, 0])).unwrap();
        let pt = |t: i64| g.make_point(&col(q, &[1, t])).unwrap();
        assert_eq!(g.s_add(&pt(0), &a, &pt(2), &pt(3)).unwrap(), pt(5));
        assert_eq!(add(&g, &pt(0), &a, &pt(0), &pt(3)).unwrap(), pt(3));
        assert_eq!(g.s_add(&pt(1), &a, &pt(2), &pt(3)).unwrap(), pt(4));
    }

    #[test]
    fn dual_chart_round_trip() {
        let f5 = Ring::Prime(5);
        let g = GrassGeometry::new(f5, 3, 1).unwrap();
        let pts = g.points(1000).unwrap();
        let duals = g.duals(1000).unwrap();
        let x = &pts[3];
        let dom: Vec<_> = duals.iter().filter(|a| g.transversal(x, a)).collect();
        let c = g.dual_chart(x, dom[0]).unwrap();
        assert_eq!(g.dual_apply(&c, dom[0]), Some(vec![f5.zero(); 2]));
        for b in &dom {
            let v = g.dual_apply(&c, b).unwrap();
            assert_eq!(&g.dual_invert(&c, &v), *b);
        }
        assert_eq!(dom.len(), 25);
    }

    #[test]
    fn full_chart_round_trip_f5() {
        let f5 = Ring::Prime(5);
        let g = GrassGeometry::new(f5, 4, 2).unwrap();
        let pts = g.points(1000).unwrap();
        let a = &g.duals(1000).unwrap()[100];
        let dom = crate::geom::chart_domain(&g, &pts, a);
        assert_eq!(dom.len(), 625);
        let c = g.chart(a, &dom[17]).unwrap();
        for y in &dom {
            assert_eq!(&g.invert(&c, &g.apply(&c, y).unwrap()), y);
        }
    }

    #[test]
    fn small_laws() {
        let f5 = Ring::Prime(5);
        let g = GrassGeometry::new(f5, 2, 1).unwrap();
        let duals = g.duals(100).unwrap();
        assert!(g.chart_law(&duals, 100).unwrap().passed());
        assert!(verify_affine_independence(&g, &duals, 1000)
            .unwrap()
            .passed());
        assert!(null_system_check(&g, 100).unwrap().passed);
    }

    #[test]
    fn orthopolarity_examples() {
        let q = Ring::Rational;
        let g = q_line();
        let pol = Orthopolarity::dot(g).unwrap();
        let x = g.make_point(&col(q, &[1, 1])).unwrap();
        let fx = pol.forward(&x);
        assert_eq!(fx.kernel(), Subspace::column_space(&col(q, &[1, -1])));
        assert_eq!(pol.backward(&fx), x);
        for s in [-3, 0, 2, 5] {
            let y = g.make_point(&col(q, &[s, 1])).unwrap();
            assert_eq!(
                pol.sigma(&x, &y).unwrap(),
                g.make_point(&col(q, &[1, s])).unwrap()
            );
        }
        assert_eq!(pol.sigma(&x, &x).unwrap(), x);
        let f5 = Ring::Prime(5);
        let g5 = GrassGeometry::new(f5, 2, 1).unwrap();
        let p5 = Orthopolarity::dot(g5).unwrap();
        let iso = g5.make_point(&col(f5, &[1, 2])).unwrap();
        assert!(!p5.is_non_isotropic(&iso));
        for x in g5.points(100).unwrap() {
            assert_eq!(p5.backward(&p5.forward(&x)), x);
        }
        let r = p5.verify_symmetric_space(1000).unwrap();
        assert!(r.passed(), "{r}");
        assert!(Orthopolarity::dot(GrassGeometry::new(f5, 3, 1).unwrap()).is_err());
    }
}
