//! Pair geometries with charts: Grassmannians, products of projective
//! lines and two-step flag geometries, together with the structure maps and
//! the checks that run over them.

pub mod atlas;
pub mod flag;
pub mod grass;
pub mod product;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Debug;

use crate::error::{Error, Result};
use crate::kernel::vector;
use crate::kernel::{Ring, Scalar};
use crate::report::{Check, Report};

pub use atlas::Atlas;
pub use flag::{ChartStyle, FlagGeometry, PartialFlag};
pub use grass::{DualPoint, GrassGeometry, Orthopolarity, Point};
pub use product::ProductLineGeometry;

/// A pair of point sets with a transversality relation and, for each
/// transversal `(α, x)`, a chart of `α^⊤` with origin `x` (and dually).
pub trait PairGeometry {
    type Point: Clone + Ord + Debug;
    type Dual: Clone + Ord + Debug;
    type Chart;
    type DualChart;

    fn ring(&self) -> Ring;
    /// Dimension of every chart.
    fn chart_dim(&self) -> usize;
    fn points(&self, limit: u64) -> Result<Vec<Self::Point>>;
    fn duals(&self, limit: u64) -> Result<Vec<Self::Dual>>;
    fn transversal(&self, x: &Self::Point, a: &Self::Dual) -> bool;

    fn chart(&self, a: &Self::Dual, origin: &Self::Point) -> Result<Self::Chart>;
    /// Coordinates of `y`, or `None` when `y` is not transversal to the dual.
    fn apply(&self, c: &Self::Chart, y: &Self::Point) -> Option<Vec<Scalar>>;
    fn invert(&self, c: &Self::Chart, v: &[Scalar]) -> Self::Point;

    fn dual_chart(&self, x: &Self::Point, origin: &Self::Dual) -> Result<Self::DualChart>;
    fn dual_apply(&self, c: &Self::DualChart, b: &Self::Dual) -> Option<Vec<Scalar>>;
    fn dual_invert(&self, c: &Self::DualChart, v: &[Scalar]) -> Self::Dual;

    fn show_point(&self, x: &Self::Point) -> String;
    fn show_dual(&self, a: &Self::Dual) -> String;

    /// Whether changing the origin inside one chart domain is an affine map
    /// of coordinates.
    fn affine_origins(&self) -> bool {
        false
    }
}

/// `P_r(x, α, y)`: scalar multiplication by `r` in `(α^⊤, x)`.
pub fn scale<G: PairGeometry>(
    g: &G,
    x: &G::Point,
    a: &G::Dual,
    y: &G::Point,
    r: Scalar,
) -> Result<G::Point> {
    let c = g.chart(a, x)?;
    let v = g.apply(&c, y).ok_or(Error::NotTransversal)?;
    Ok(g.invert(&c, &vector::scale(r, &v)))
}

/// `y +_{x,α} z`.
pub fn add<G: PairGeometry>(
    g: &G,
    x: &G::Point,
    a: &G::Dual,
    y: &G::Point,
    z: &G::Point,
) -> Result<G::Point> {
    let c = g.chart(a, x)?;
    let v = g.apply(&c, y).ok_or(Error::NotTransversal)?;
    let w = g.apply(&c, z).ok_or(Error::NotTransversal)?;
    Ok(g.invert(&c, &vector::add(&v, &w)))
}

/// Every point transversal to `a`, in order.
pub fn chart_domain<G: PairGeometry>(g: &G, points: &[G::Point], a: &G::Dual) -> Vec<G::Point> {
    points
        .iter()
        .filter(|x| g.transversal(x, a))
        .cloned()
        .collect()
}

/// Checks that the affine combination `y − z + w` in `α^⊤` does not depend
/// on the origin, for each listed dual.
///
/// For a fixed dual the base origin `x₀` is the first point of `α^⊤`; each
/// other origin `x` gives a transition `T = chart_x ∘ chart_{x₀}⁻¹`, and the
/// combination is origin independent iff every `T` is affine, i.e.
/// `T(v + e_i) = T(v) + T(e_i) − T(0)` for all `v` and basis vectors `e_i`.
/// A failure is reported as the tuple `(α, x₀, x, y, z = x₀, w)`.
pub fn verify_affine_independence<G: PairGeometry>(
    g: &G,
    duals: &[G::Dual],
    limit: u64,
) -> Result<Report> {
    verify_affine_independence_sampled(g, duals, usize::MAX, limit)
}

/// As [`verify_affine_independence`], visiting at most `max_origins` origins per
/// dual, spread evenly over `α^⊤`.
pub fn verify_affine_independence_sampled<G: PairGeometry>(
    g: &G,
    duals: &[G::Dual],
    max_origins: usize,
    limit: u64,
) -> Result<Report> {
    let ring = g.ring();
    if !ring.is_finite() {
        return Err(Error::Method(
            "affine independence is checked over prime fields".into(),
        ));
    }
    let d = g.chart_dim();
    let size = vector::field_power(ring, d);
    let points = g.points(limit)?;
    let per_dual = (points.len() as u128).min(max_origins as u128 + 1);
    let work = size
        .saturating_mul(per_dual)
        .saturating_mul(duals.len() as u128);
    if work > limit as u128 * 100 {
        return Err(Error::TooLarge {
            size: work,
            limit: limit.saturating_mul(100),
        });
    }
    let size = size as u64;
    let p = ring.order().unwrap() as u64;
    let mut tuples = 0u64;
    let mut origins = 0u64;
    for a in duals {
        let domain = chart_domain(g, &points, a);
        let Some(x0) = domain.first() else { continue };
        let c0 = g.chart(a, x0)?;
        let grid: Vec<G::Point> = (0..size)
            .map(|code| g.invert(&c0, &vector::decode(ring, d, code)))
            .collect();
        let rest = &domain[1..];
        let stride = rest.len().div_ceil(max_origins.max(1)).max(1);
        for x in rest.iter().step_by(stride) {
            origins += 1;
            let c = g.chart(a, x)?;
            let t: Vec<Vec<Scalar>> = grid
                .iter()
                .map(|y| g.apply(&c, y).expect("chart image is transversal"))
                .collect();
            for code in 0..size {
                for i in 0..d {
                    let step = p.pow((d - 1 - i) as u32);
                    let digit = (code / step) % p;
                    let sum = code - digit * step + ((digit + 1) % p) * step;
                    tuples += 1;
                    let expect =
                        vector::sub(&vector::add(&t[code as usize], &t[step as usize]), &t[0]);
                    if t[sum as usize] != expect {
                        let witness = format!(
                            "alpha={} x0={} x={} y={} z={} w={} via x0: {} via x: {}",
                            g.show_dual(a),
                            g.show_point(x0),
                            g.show_point(x),
                            g.show_point(&grid[code as usize]),
                            g.show_point(x0),
                            g.show_point(&grid[step as usize]),
                            g.show_point(&grid[sum as usize]),
                            g.show_point(&g.invert(&c, &expect)),
                        );
                        let check = Check::fail("AffineIndependence", witness)
                            .note("duals", duals.len())
                            .note("origins_checked", origins)
                            .note("tuples_checked", tuples);
                        let mut r = Report::new();
                        r.push(check);
                        return Ok(r);
                    }
                }
            }
        }
    }
    let mut r = Report::new();
    r.push(
        Check::pass("AffineIndependence")
            .note("duals", duals.len())
            .note("origins_checked", origins)
            .note("tuples_checked", tuples),
    );
    Ok(r)
}

/// Chooses duals deterministically: the first one (in order) with each
/// distinct value of `key`.
pub fn first_per_key<T: Clone, K: Ord>(items: &[T], key: impl Fn(&T) -> K) -> Vec<T> {
    let mut seen = alloc::collections::BTreeSet::new();
    items
        .iter()
        .filter(|t| seen.insert(key(t)))
        .cloned()
        .collect()
}
