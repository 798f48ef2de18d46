//! Inner ideals, intrinsic subspaces and their closures, squeezed subspaces
//! of Grassmannians, transversality of states and pure states of products
//! of projective lines.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::catalog::rectangular_pair;
use crate::error::{invalid, Result};
use crate::geom::{Atlas, DualPoint, GrassGeometry, PairGeometry, Point, ProductLineGeometry};
use crate::jordan::{JordanPair, Sign};
use crate::kernel::{vector, Matrix, Ring, Scalar, Subspace};
use crate::report::{Check, Report};

/// `T⁺(I, V⁻, I) ⊆ I`, checked on basis triples.
pub fn is_inner_ideal(p: &JordanPair, i: &Subspace) -> Check {
    let t = p.t(Sign::Plus);
    let basis = i.vectors();
    let m = p.dim(Sign::Minus);
    let ring = i.ring();
    for (k, b1) in basis.iter().enumerate() {
        for b2 in &basis[k..] {
            for e in 0..m {
                let e = vector::unit(ring, m, e);
                let v = t.eval(&[b1, &e, b2]);
                if !i.contains(&v) {
                    let w = format!("T({b1:?}, e, {b2:?}) = {v:?}");
                    return Check::fail("InnerIdeal", w.replace('"', ""));
                }
            }
        }
    }
    Check::pass("InnerIdeal").note("dim", i.dim())
}

/// `{E : f₁ ⊆ E ⊆ f₂}` among the points of `g`.
pub fn squeezed(g: &GrassGeometry, f1: &Subspace, f2: &Subspace) -> Result<Vec<Point>> {
    if !f2.contains_subspace(f1) || f1.dim() > g.a || f2.dim() < g.a {
        return Err(invalid("need f1 <= f2 with dim f1 <= a <= dim f2"));
    }
    Ok(Subspace::between(f1, f2, g.a)
        .into_iter()
        .map(Point)
        .collect())
}

/// Duals whose kernels `K` satisfy `e₁ ⊆ K ⊆ e₂`.
pub fn squeezed_duals(g: &GrassGeometry, e1: &Subspace, e2: &Subspace) -> Result<Vec<DualPoint>> {
    let k = g.w - g.a;
    if !e2.contains_subspace(e1) || e1.dim() > k || e2.dim() < k {
        return Err(invalid("need e1 <= e2 with dim e1 <= w - a <= dim e2"));
    }
    let mut out: Vec<DualPoint> = Subspace::between(e1, e2, k)
        .iter()
        .map(|s| DualPoint(s.annihilator()))
        .collect();
    out.sort();
    Ok(out)
}

/// `(∩ members, Σ members)`, possibly with equal entries.
pub fn induced_flag(ring: Ring, w: usize, members: &[Subspace]) -> (Subspace, Subspace) {
    let mut meet = Subspace::full(ring, w);
    let mut join = Subspace::zero(ring, w);
    for s in members {
        meet = meet.intersect(s).expect("same ambient");
        join = join.sum(s).expect("same ambient");
    }
    (meet, join)
}

/// Crosswise complementarity `W = f₁ ⊕ e₂ = f₂ ⊕ e₁` of two weak flags.
pub fn weak_flags_transversal(f: &(Subspace, Subspace), e: &(Subspace, Subspace)) -> bool {
    f.0.is_complement(&e.1).unwrap_or(false) && f.1.is_complement(&e.0).unwrap_or(false)
}

pub fn base_point(g: &GrassGeometry) -> Point {
    Point(Subspace::coordinate(
        g.ring,
        g.w,
        &(0..g.a).collect::<Vec<_>>(),
    ))
}

/// The dual with kernel `⟨e_{a+1}, …, e_w⟩`; its chart at the base point
/// has coordinates the `(w−a)×a` matrices.
pub fn base_dual(g: &GrassGeometry) -> DualPoint {
    let k = Subspace::coordinate(g.ring, g.w, &(g.a..g.w).collect::<Vec<_>>());
    DualPoint(k.annihilator())
}

#[derive(Clone, Debug)]
pub struct ClassRow {
    pub ideal: Subspace,
    pub inner: bool,
    /// Intrinsic closure of the embedded ideal, when it is an inner ideal.
    pub closure: Option<Vec<Point>>,
    pub flag: Option<(Subspace, Subspace)>,
}

#[derive(Clone, Debug)]
pub struct StateReport {
    pub report: Report,
    pub rows: Vec<ClassRow>,
}

/// Runs through every subspace `I` of the base chart `V⁺ = Mat((w−a)×a)`:
/// `I` is an inner ideal iff the intrinsic closure of its image adds no
/// point of the base chart, and then the closure is squeezed by its induced
/// flag. Inner ideals must match the squeezed sets through the base point
/// one to one.
pub fn classify_intrinsic(g: &GrassGeometry, limit: u64) -> Result<StateReport> {
    let ring = g.ring;
    let b = g.w - g.a;
    let dim = g.a * b;
    if dim > 4 {
        return Err(crate::error::Error::TooLarge {
            size: dim as u128,
            limit: 4,
        });
    }
    let pair = rectangular_pair(b, g.a, ring)?;
    let atlas = Atlas::new(g, limit)?;
    let o = base_point(g);
    let alpha = base_dual(g);
    let d0 = atlas.dual_index(&alpha).expect("enumerated dual");
    let chart = g.chart(&alpha, &o)?;
    let idx = |p: &Point| atlas.index(p).expect("enumerated point");

    let mut rows = Vec::new();
    let (mut agree, mut disagree) = (0usize, None);
    let (mut squeezed_ok, mut squeezed_bad) = (0usize, None);
    for ideal in Subspace::enumerate_all(ring, dim) {
        let inner = is_inner_ideal(&pair, &ideal).passed;
        let members: Vec<usize> = ideal
            .elements()
            .iter()
            .map(|v| idx(&g.invert(&chart, v)))
            .collect();
        let allowed: BTreeSet<usize> = members.iter().copied().collect();
        let mut escaped = false;
        let closure = atlas.closure_with(&members, |inside| {
            escaped = (0..inside.len())
                .any(|i| inside[i] && atlas.transversal(i, d0) && !allowed.contains(&i));
            escaped
        });
        let intrinsic_here = !escaped;
        if intrinsic_here == inner {
            agree += 1;
        } else if disagree.is_none() {
            disagree = Some(format!("{ideal}"));
        }
        let mut row = ClassRow {
            ideal: ideal.clone(),
            inner,
            closure: None,
            flag: None,
        };
        if inner && intrinsic_here {
            let pts: Vec<Point> = closure.iter().map(|&i| atlas.points[i].clone()).collect();
            let spaces: Vec<Subspace> = pts.iter().map(|p| p.0.clone()).collect();
            let flag = induced_flag(ring, g.w, &spaces);
            let sq = squeezed(g, &flag.0, &flag.1)?;
            if sq == pts && atlas.is_intrinsic(&closure) {
                squeezed_ok += 1;
            } else if squeezed_bad.is_none() {
                squeezed_bad = Some(format!("{ideal}"));
            }
            row.closure = Some(pts);
            row.flag = Some(flag);
        }
        rows.push(row);
    }

    let mut report = Report::new();
    report.push(match disagree {
        None => Check::pass("InnerIdealIffIntrinsic").note("subspaces", agree),
        Some(w) => Check::fail("InnerIdealIffIntrinsic", w),
    });
    let inner_count = rows.iter().filter(|r| r.inner).count();
    report.push(match squeezed_bad {
        None => Check::pass("ClosureIsSqueezed")
            .note("inner_ideals", inner_count)
            .note("matched", squeezed_ok),
        Some(w) => Check::fail("ClosureIsSqueezed", w),
    });

    // squeezed sets through the base point, over every flag f₁ ⊆ o ⊆ f₂
    let mut through_o: BTreeSet<Vec<Point>> = BTreeSet::new();
    let full = Subspace::full(ring, g.w);
    let zero = Subspace::zero(ring, g.w);
    for k1 in 0..=g.a {
        for f1 in Subspace::between(&zero, &o.0, k1) {
            for k2 in g.a..=g.w {
                for f2 in Subspace::between(&o.0, &full, k2) {
                    through_o.insert(squeezed(g, &f1, &f2)?);
                }
            }
        }
    }
    let closures: BTreeSet<Vec<Point>> = rows.iter().filter_map(|r| r.closure.clone()).collect();
    let injective = closures.len() == inner_count;
    let check = Check::new("Bijection", injective && closures == through_o)
        .note("inner_ideals", inner_count)
        .note("distinct_closures", closures.len())
        .note("squeezed_through_base", through_o.len());
    report.push(if check.passed {
        check
    } else {
        check.with_witness("closures differ from squeezed sets")
    });
    Ok(StateReport { report, rows })
}

/// Indices of a maximal independent subfamily, greedily from the front.
fn basis_indices(ring: Ring, coords: &[Vec<Scalar>]) -> Vec<usize> {
    let Some(n) = coords.first().map(|c| c.len()) else {
        return Vec::new();
    };
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut out = Vec::new();
    for (i, c) in coords.iter().enumerate() {
        rows.push(c.clone());
        if Matrix::from_rows(ring, n, &rows).rank() == rows.len() {
            out.push(i);
        } else {
            rows.pop();
        }
        if rows.len() == n {
            break;
        }
    }
    out
}

/// Whether the members' coordinates form a linear subspace. Coordinates are
/// distinct, so this is `|set| = |K|^rank`.
fn coords_linear(ring: Ring, coords: &[Vec<Scalar>], q: usize) -> bool {
    if coords.is_empty() {
        return true;
    }
    let r = basis_indices(ring, coords).len() as u32;
    (q as u128)
        .checked_pow(r)
        .is_some_and(|size| size == coords.len() as u128)
}

/// Whether two charts at the same origin induce the same linear structure
/// on a common set, given its coordinates in both. Checking
/// `F(r·b + v) = r·F(b) + F(v)` for `b` in a basis is enough.
fn same_structure(
    ring: Ring,
    left: &[Vec<Scalar>],
    right: &[Vec<Scalar>],
    scalars: &[Scalar],
) -> bool {
    if !coords_linear(ring, left, scalars.len()) {
        return false;
    }
    let map: BTreeMap<&Vec<Scalar>, &Vec<Scalar>> = left.iter().zip(right).collect();
    for i in basis_indices(ring, left) {
        let (u, fu) = (&left[i], &right[i]);
        for (v, fv) in left.iter().zip(right) {
            for &r in scalars {
                let lhs = map.get(&vector::add(&vector::scale(r, u), v));
                let rhs = vector::add(&vector::scale(r, fu), fv);
                if lhs != Some(&&rhs) {
                    return false;
                }
            }
        }
    }
    true
}

struct Faithfulness {
    every_origin: bool,
    some_origin: bool,
    witness: Option<String>,
}

/// Distinct members `b, b'` of `js` are identified when they see the same
/// subset of `is` and induce the same linear structure on it, at every
/// common origin (or at some origin for the weaker reading). With
/// `one_origin` the two readings coincide and only the first origin is used.
#[allow(clippy::too_many_arguments)]
fn faithfulness<X: Clone + Ord, J: Clone + Ord>(
    ring: Ring,
    is: &[X],
    js: &[J],
    transversal: impl Fn(&X, &J) -> bool,
    coords: impl Fn(&J, &X, &[X]) -> Vec<Vec<Scalar>>,
    show: impl Fn(&J) -> String,
    scalars: &[Scalar],
    one_origin: bool,
) -> Faithfulness {
    let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (j, b) in js.iter().enumerate() {
        let seen: Vec<usize> = (0..is.len()).filter(|&i| transversal(&is[i], b)).collect();
        groups.entry(seen).or_default().push(j);
    }
    let mut pairs: Vec<(usize, usize, Vec<X>)> = Vec::new();
    for (seen, members) in &groups {
        let set: Vec<X> = seen.iter().map(|&i| is[i].clone()).collect();
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                pairs.push((i, j, set.clone()));
            }
        }
    }
    pairs.sort_by_key(|p| (p.0, p.1));
    let mut out = Faithfulness {
        every_origin: true,
        some_origin: true,
        witness: None,
    };
    for (i, j, set) in pairs {
        let origins = if one_origin {
            &set[..set.len().min(1)]
        } else {
            &set[..]
        };
        let agreements: Vec<bool> = origins
            .iter()
            .map(|o| {
                same_structure(
                    ring,
                    &coords(&js[i], o, &set),
                    &coords(&js[j], o, &set),
                    scalars,
                )
            })
            .collect();
        let every = agreements.iter().all(|&a| a);
        let some = agreements.iter().any(|&a| a);
        if every && out.every_origin {
            out.every_origin = false;
            out.witness = Some(format!("{} ~ {}", show(&js[i]), show(&js[j])));
        }
        if some {
            out.some_origin = false;
        }
    }
    out
}

/// Transversality of a state `I ⊆ X⁺` and a state `J ⊆ X⁻`: `(I, J)` is a
/// subspace and the linear pair geometry `(I, J)` is faithful.
pub fn states_transversal<G: PairGeometry>(
    g: &G,
    is: &[G::Point],
    js: &[G::Dual],
) -> Result<Report> {
    let scalars: Vec<Scalar> = g
        .ring()
        .elements()
        .ok_or_else(|| crate::error::Error::Method("needs a prime field".into()))?
        .collect();
    let mut report = Report::new();

    let mut sub = None;
    if let Some(x) = is.iter().find(|x| !js.iter().any(|a| g.transversal(x, a))) {
        sub = Some(format!(
            "point {} has no transversal partner",
            g.show_point(x)
        ));
    }
    if sub.is_none() {
        if let Some(a) = js.iter().find(|a| !is.iter().any(|x| g.transversal(x, a))) {
            sub = Some(format!(
                "dual {} has no transversal partner",
                g.show_dual(a)
            ));
        }
    }
    // With affine origin changes one origin per chart decides linearity.
    let one = g.affine_origins();
    let ring = g.ring();
    let q = scalars.len();
    if sub.is_none() {
        'duals: for a in js {
            for x in is.iter().filter(|x| g.transversal(x, a)) {
                let c = g.chart(a, x)?;
                let coords: Vec<Vec<Scalar>> = is.iter().filter_map(|y| g.apply(&c, y)).collect();
                if !coords_linear(ring, &coords, q) {
                    sub = Some(format!(
                        "I is not linear in the chart ({}, {})",
                        g.show_dual(a),
                        g.show_point(x)
                    ));
                    break 'duals;
                }
                if one {
                    break;
                }
            }
        }
    }
    if sub.is_none() {
        'points: for x in is {
            for a in js.iter().filter(|a| g.transversal(x, a)) {
                let c = g.dual_chart(x, a)?;
                let coords: Vec<Vec<Scalar>> =
                    js.iter().filter_map(|b| g.dual_apply(&c, b)).collect();
                if !coords_linear(ring, &coords, q) {
                    sub = Some(format!(
                        "J is not linear in the chart ({}, {})",
                        g.show_point(x),
                        g.show_dual(a)
                    ));
                    break 'points;
                }
                if one {
                    break;
                }
            }
        }
    }
    report.push(match sub {
        None => Check::pass("Subspace"),
        Some(w) => Check::fail("Subspace", w),
    });

    let on_i = faithfulness(
        ring,
        is,
        js,
        |x, a| g.transversal(x, a),
        |a, o, set| {
            let c = g.chart(a, o).expect("transversal");
            set.iter()
                .map(|y| g.apply(&c, y).expect("transversal"))
                .collect()
        },
        |a| g.show_dual(a),
        &scalars,
        one,
    );
    let on_j = faithfulness(
        ring,
        js,
        is,
        |a, x| g.transversal(x, a),
        |x, o, set| {
            let c = g.dual_chart(x, o).expect("transversal");
            set.iter()
                .map(|b| g.dual_apply(&c, b).expect("transversal"))
                .collect()
        },
        |x| g.show_point(x),
        &scalars,
        one,
    );
    let every = on_i.every_origin && on_j.every_origin;
    let some = on_i.some_origin && on_j.some_origin;
    let check = match on_i.witness.or(on_j.witness) {
        None => Check::pass("Faithful"),
        Some(w) => Check::fail("Faithful", w),
    };
    report.push(
        check
            .note("reading", "every-origin")
            .note("origins", if one { "first" } else { "all" })
            .note("faithful_some_origin", some)
            .note("readings_agree", every == some),
    );
    Ok(report)
}

/// `states_transversal(I_f, J_e)` against crosswise transversality of the
/// induced flags, for each base flag `f` and every `e` in `es`.
pub fn states_equivalence(
    g: &GrassGeometry,
    bases: &[(Subspace, Subspace)],
    es: &[(Subspace, Subspace)],
) -> Result<Report> {
    let mut cases = 0u64;
    let mut transversal = 0u64;
    let mut report = Report::new();
    for f in bases {
        let is = squeezed(g, &f.0, &f.1)?;
        let ispaces: Vec<Subspace> = is.iter().map(|p| p.0.clone()).collect();
        let fi = induced_flag(g.ring, g.w, &ispaces);
        for e in es {
            let js = squeezed_duals(g, &e.0, &e.1)?;
            let kernels: Vec<Subspace> = js.iter().map(|d| d.kernel()).collect();
            let ej = induced_flag(g.ring, g.w, &kernels);
            let states = states_transversal(g, &is, &js)?.passed();
            let flags = weak_flags_transversal(&fi, &ej);
            cases += 1;
            transversal += states as u64;
            if states != flags {
                let w = format!(
                    "f=({} < {}) e=({} < {}) states={states} flags={flags}",
                    f.0, f.1, e.0, e.1
                );
                report.push(Check::fail("StatesMatchFlags", w).note("cases", cases));
                return Ok(report);
            }
        }
    }
    report.push(
        Check::pass("StatesMatchFlags")
            .note("cases", cases)
            .note("transversal", transversal),
    );
    Ok(report)
}

/// `L_p`: the functions equal to `o` away from factor `p`.
pub fn line_at(g: &ProductLineGeometry, p: usize, limit: u64) -> Result<Vec<Vec<Point>>> {
    let o = g.origin();
    let mut out: Vec<Vec<Point>> = g
        .line
        .points(limit)?
        .into_iter()
        .map(|x| {
            let mut f = o.clone();
            f[p] = x;
            f
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Minimal intrinsic subspaces through the zero function: the minimal
/// closures of `{o, f}`, which must be the lines `L_p`.
pub fn pure_states(g: &ProductLineGeometry, limit: u64) -> Result<StateReport> {
    let atlas = Atlas::new(g, limit)?;
    let o = atlas.index(&g.origin()).expect("enumerated point");
    let mut closures: BTreeSet<Vec<usize>> = BTreeSet::new();
    for f in 0..atlas.points.len() {
        if f != o {
            closures.insert(atlas.closure(&[o, f]));
        }
    }
    let minimal: Vec<&Vec<usize>> = closures
        .iter()
        .filter(|c| {
            !closures
                .iter()
                .any(|d| d.len() < c.len() && d.iter().all(|i| c.binary_search(i).is_ok()))
        })
        .collect();
    let mut lines: BTreeSet<Vec<usize>> = BTreeSet::new();
    for p in 0..g.m {
        let mut l: Vec<usize> = line_at(g, p, limit)?
            .iter()
            .map(|x| atlas.index(x).expect("point"))
            .collect();
        l.sort();
        lines.insert(l);
    }
    let found: BTreeSet<Vec<usize>> = minimal.iter().map(|c| (*c).clone()).collect();
    let mut report = Report::new();
    let check = Check::new("PureStatesAreLines", found == lines)
        .note("m", g.m)
        .note("minimal", found.len())
        .note("distinct_closures", closures.len());
    report.push(if check.passed {
        check
    } else {
        check.with_witness("minimal closures differ from the lines L_p")
    });
    let intrinsic = lines.iter().all(|l| atlas.is_intrinsic(l));
    report.push(Check::new("LinesIntrinsic", intrinsic));
    Ok(StateReport {
        report,
        rows: Vec::new(),
    })
}

/// Points of a closure, by value.
pub fn intrinsic_closure<G: PairGeometry>(
    atlas: &Atlas<G>,
    members: &[G::Point],
) -> Result<Vec<G::Point>> {
    let idx: Option<Vec<usize>> = members.iter().map(|x| atlas.index(x)).collect();
    let idx = idx.ok_or_else(|| invalid("point outside the enumerated geometry"))?;
    Ok(atlas
        .closure(&idx)
        .into_iter()
        .map(|i| atlas.points[i].clone())
        .collect())
}

pub fn is_intrinsic<G: PairGeometry>(atlas: &Atlas<G>, members: &[G::Point]) -> Result<bool> {
    let idx: Option<Vec<usize>> = members.iter().map(|x| atlas.index(x)).collect();
    let idx = idx.ok_or_else(|| invalid("point outside the enumerated geometry"))?;
    Ok(atlas.is_intrinsic(&idx))
}

/// Every flag `(f₁, f₂)` of `K^w` with the given dimensions.
pub fn flags_of_type(ring: Ring, w: usize, d1: usize, d2: usize) -> Vec<(Subspace, Subspace)> {
    let full = Subspace::full(ring, w);
    let mut out = Vec::new();
    for f1 in Subspace::enumerate(ring, w, d1) {
        for f2 in Subspace::between(&f1, &full, d2) {
            out.push((f1.clone(), f2));
        }
    }
    out
}

/// `(⟨e₁..e_{d₁}⟩, ⟨e₁..e_{d₂}⟩)`.
pub fn standard_flag(ring: Ring, w: usize, d1: usize, d2: usize) -> (Subspace, Subspace) {
    let c = |d: usize| Subspace::coordinate(ring, w, &(0..d).collect::<Vec<_>>());
    (c(d1), c(d2))
}

pub fn point_from_cols(g: &GrassGeometry, cols: &[Vec<Scalar>]) -> Result<Point> {
    g.make_point(&Matrix::from_cols(g.ring, g.w, cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::atlas::is_intrinsic_generic;
    use alloc::vec;

    fn f5() -> Ring {
        Ring::Prime(5)
    }

    #[test]
    fn inner_ideal_examples() {
        let r = f5();
        let p = rectangular_pair(1, 2, r).unwrap();
        assert!(is_inner_ideal(&p, &Subspace::zero(r, 2)).passed);
        assert!(is_inner_ideal(&p, &Subspace::full(r, 2)).passed);
        let p = rectangular_pair(2, 2, r).unwrap();
        assert!(is_inner_ideal(&p, &Subspace::coordinate(r, 4, &[0, 1])).passed);
        let bad = is_inner_ideal(&p, &Subspace::coordinate(r, 4, &[0, 3]));
        assert!(!bad.passed && bad.witness.is_some());
    }

    #[test]
    fn squeezed_examples() {
        let r = f5();
        let g = GrassGeometry::new(r, 3, 1).unwrap();
        let plane = Subspace::coordinate(r, 3, &[0, 1]);
        assert_eq!(
            squeezed(&g, &Subspace::zero(r, 3), &plane).unwrap().len(),
            6
        );
        assert_eq!(
            squeezed(&g, &Subspace::zero(r, 3), &Subspace::full(r, 3))
                .unwrap()
                .len(),
            31
        );
        let g = GrassGeometry::new(r, 4, 2).unwrap();
        let (f1, f2) = standard_flag(r, 4, 1, 3);
        let s = squeezed(&g, &f1, &f2).unwrap();
        assert_eq!(s.len(), 6);
        let atlas = Atlas::new(&g, 10_000_000).unwrap();
        assert!(is_intrinsic(&atlas, &s).unwrap());
        assert!(squeezed(&g, &f2, &f1).is_err());
    }

    #[test]
    fn two_generic_points_are_not_intrinsic() {
        let r = f5();
        let g = GrassGeometry::new(r, 4, 2).unwrap();
        let atlas = Atlas::new(&g, 10_000_000).unwrap();
        let x = base_point(&g);
        let y = point_from_cols(
            &g,
            &[
                vector::from_ints(r, &[1, 0, 1, 0]),
                vector::from_ints(r, &[0, 1, 0, 1]),
            ],
        )
        .unwrap();
        assert!(!is_intrinsic(&atlas, &[x.clone(), y.clone()]).unwrap());
        assert!(!is_intrinsic_generic(
            &g,
            &[x.clone(), y.clone()],
            &atlas.duals
        ));
        let c = intrinsic_closure(&atlas, &[x.clone(), y]).unwrap();
        assert!(c.len() > 2);
        assert_eq!(intrinsic_closure(&atlas, &c).unwrap(), c);
        assert_eq!(
            intrinsic_closure(&atlas, core::slice::from_ref(&x)).unwrap(),
            vec![x]
        );
    }

    #[test]
    fn classify_projective_plane() {
        let g = GrassGeometry::new(f5(), 3, 1).unwrap();
        let r = classify_intrinsic(&g, 10_000_000).unwrap();
        assert!(r.report.passed(), "{}", r.report);
        assert_eq!(r.rows.iter().filter(|x| x.inner).count(), 8);
    }

    #[test]
    fn product_lines() {
        let r = f5();
        let g = ProductLineGeometry::new(r, 2).unwrap();
        let atlas = Atlas::new(&g, 10_000_000).unwrap();
        let o = g.origin();
        let f = g.point_at(&[r.int(3), r.zero()]);
        let l = intrinsic_closure(&atlas, &[o.clone(), f]).unwrap();
        assert_eq!(l, line_at(&g, 0, 1000).unwrap());
        let h = g.point_at(&[r.int(3), r.int(1)]);
        assert_eq!(intrinsic_closure(&atlas, &[o, h]).unwrap().len(), 36);
        for m in 1..=3 {
            let g = ProductLineGeometry::new(r, m).unwrap();
            let rep = pure_states(&g, 10_000_000).unwrap();
            assert!(rep.report.passed(), "{}", rep.report);
            assert_eq!(
                rep.report
                    .get("PureStatesAreLines")
                    .unwrap()
                    .get_note("minimal"),
                Some(&(m as i64).into())
            );
        }
    }

    #[test]
    fn states_in_projective_plane() {
        let r = f5();
        let g = GrassGeometry::new(r, 3, 1).unwrap();
        let zero = Subspace::zero(r, 3);
        let full = Subspace::full(r, 3);
        let plane = Subspace::coordinate(r, 3, &[0, 1]);
        let line_pts = squeezed(&g, &zero, &plane).unwrap();
        // duals over the line ⟨e3⟩: kernels K ⊇ ⟨e3⟩
        let e3 = Subspace::coordinate(r, 3, &[2]);
        let js = squeezed_duals(&g, &e3, &full).unwrap();
        assert!(states_transversal(&g, &line_pts, &js).unwrap().passed());
        let e1 = Subspace::coordinate(r, 3, &[0]);
        let js = squeezed_duals(&g, &e1, &full).unwrap();
        assert!(!states_transversal(&g, &line_pts, &js).unwrap().passed());
        let g2 = GrassGeometry::new(r, 2, 1).unwrap();
        let all = g2.points(100).unwrap();
        let alld = g2.duals(100).unwrap();
        assert!(states_transversal(&g2, &all, &alld).unwrap().passed());
    }

    #[test]
    fn states_match_flags_small() {
        let r = f5();
        let g = GrassGeometry::new(r, 3, 1).unwrap();
        let mut es = Vec::new();
        for (d1, d2) in [(0, 2), (0, 3), (1, 2), (1, 3), (2, 2), (2, 3)] {
            let zero = Subspace::zero(r, 3);
            let full = Subspace::full(r, 3);
            for e1 in Subspace::between(&zero, &full, d1) {
                for e2 in Subspace::between(&e1, &full, d2) {
                    es.push((e1.clone(), e2));
                }
            }
        }
        let bases = [
            standard_flag(r, 3, 0, 2),
            standard_flag(r, 3, 0, 1),
            standard_flag(r, 3, 1, 1),
        ];
        let rep = states_equivalence(&g, &bases, &es).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}
