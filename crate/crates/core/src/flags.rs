//! Flags of a module and filtrations of a graded Lie algebra, with the
//! correspondence between transversal pairs and gradings.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{invalid, shape, Error, Result};
use crate::kernel::{Matrix, Scalar, Subspace};
use crate::liealg::{apply_chain, elementary_orbit, euler_for, GradedLieAlgebra};
use crate::report::{Check, Report};

/// `f₁ ⊆ … ⊆ f_k = W`; `f₀ = 0` is implicit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flag {
    pub chain: Vec<Subspace>,
}

impl Flag {
    /// A strictly increasing chain ending in the ambient space.
    pub fn new(chain: Vec<Subspace>) -> Result<Self> {
        let f = Self::weak(chain)?;
        if f.chain.windows(2).any(|w| w[0].dim() == w[1].dim()) || f.chain[0].is_zero() {
            return Err(invalid("flag inclusions must be strict"));
        }
        Ok(f)
    }

    /// Like [`Flag::new`] but allowing repeated members.
    pub fn weak(chain: Vec<Subspace>) -> Result<Self> {
        let last = chain.last().ok_or_else(|| invalid("empty flag"))?;
        if !last.is_full() {
            return Err(invalid("last flag member must be the whole space"));
        }
        if chain
            .windows(2)
            .any(|w| !w[1].contains_subspace(&w[0]) || w[0].ambient() != w[1].ambient())
        {
            return Err(invalid("flag members must be nested"));
        }
        Ok(Flag { chain })
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn ambient(&self) -> usize {
        self.chain[0].ambient()
    }

    /// `f_i` with `f_0 = 0`.
    pub fn member(&self, i: usize) -> Subspace {
        if i == 0 {
            Subspace::zero(self.chain[0].ring(), self.ambient())
        } else {
            self.chain[i - 1].clone()
        }
    }

    pub fn image(&self, m: &Matrix) -> Flag {
        Flag {
            chain: apply_chain(m, &self.chain),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleGrading {
    pub blocks: Vec<Subspace>,
}

impl ModuleGrading {
    pub fn new(blocks: Vec<Subspace>) -> Result<Self> {
        let first = blocks.first().ok_or_else(|| invalid("empty grading"))?;
        let mut acc = Subspace::zero(first.ring(), first.ambient());
        for b in &blocks {
            if !acc.is_independent_of(b)? {
                return Err(invalid("grading blocks are not independent"));
            }
            acc = acc.sum(b)?;
        }
        if !acc.is_full() {
            return Err(invalid("grading blocks do not span the space"));
        }
        Ok(ModuleGrading { blocks })
    }
}

fn partial_sum(blocks: &[Subspace]) -> Subspace {
    let mut acc = Subspace::zero(blocks[0].ring(), blocks[0].ambient());
    for b in blocks {
        acc = acc.sum(b).expect("same ambient");
    }
    acc
}

/// `f⁺_i = g₁ ⊕ … ⊕ g_i` and `f⁻_j = g_{k−j+1} ⊕ … ⊕ g_k`.
pub fn flags_from_grading(g: &ModuleGrading) -> (Flag, Flag) {
    let k = g.blocks.len();
    let plus = (1..=k).map(|i| partial_sum(&g.blocks[..i])).collect();
    let minus = (1..=k).map(|j| partial_sum(&g.blocks[k - j..])).collect();
    (Flag { chain: plus }, Flag { chain: minus })
}

/// `W = f_i ⊕ e_{k−i}` for every `i`.
pub fn flag_transversal(e: &Flag, f: &Flag) -> Result<bool> {
    if e.len() != f.len() || e.ambient() != f.ambient() {
        return Err(shape("flags of different length or ambient space"));
    }
    let k = f.len();
    for i in 0..=k {
        if !f.member(i).is_complement(&e.member(k - i))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `g_i = f_i ∩ e_{k−i+1}`, checked against the round trip.
pub fn grading_from_transversal(e: &Flag, f: &Flag) -> Result<ModuleGrading> {
    if !flag_transversal(e, f)? {
        return Err(Error::NotTransversal);
    }
    let k = f.len();
    let blocks = (1..=k)
        .map(|i| f.member(i).intersect(&e.member(k - i + 1)))
        .collect::<Result<Vec<_>>>()?;
    let g = ModuleGrading::new(blocks)?;
    let (fp, fm) = flags_from_grading(&g);
    if &fp != f || &fm != e {
        return Err(invalid("recovered grading does not reproduce the flags"));
    }
    Ok(g)
}

// ---------------------------------------------------------- Lie side

/// `0 = f_{k+1} ⊆ f_k ⊆ … ⊆ f_{−k} = g`, stored from `f_{k+1}` down.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LieFiltration {
    pub k: usize,
    pub chain: Vec<Subspace>,
}

impl LieFiltration {
    pub fn new(k: usize, chain: Vec<Subspace>) -> Result<Self> {
        if chain.len() != 2 * k + 2 {
            return Err(shape("a filtration has 2k+2 members"));
        }
        if !chain[0].is_zero() || !chain[2 * k + 1].is_full() {
            return Err(invalid("filtration must run from 0 to g"));
        }
        if chain.windows(2).any(|w| !w[1].contains_subspace(&w[0])) {
            return Err(invalid("filtration members must be nested"));
        }
        Ok(LieFiltration { k, chain })
    }

    /// `f_i`, with indices outside `[−k, k+1]` clamped.
    pub fn get(&self, i: i32) -> &Subspace {
        let k = self.k as i32;
        let i = i.clamp(-k, k + 1);
        &self.chain[(k + 1 - i) as usize]
    }

    /// Filtration `f_i = ⊕_{j ≥ i} g_j` of homogeneous blocks.
    pub fn from_blocks(k: usize, blocks: &[(i32, Subspace)]) -> Self {
        let ki = k as i32;
        let chain = (-ki..=ki + 1)
            .rev()
            .map(|i| {
                let parts: Vec<Subspace> = blocks
                    .iter()
                    .filter(|(d, _)| *d >= i)
                    .map(|(_, s)| s.clone())
                    .collect();
                match parts.is_empty() {
                    true => Subspace::zero(blocks[0].1.ring(), blocks[0].1.ambient()),
                    false => partial_sum(&parts),
                }
            })
            .collect();
        LieFiltration { k, chain }
    }

    /// The filtration induced by the algebra's own grading.
    pub fn from_grading(g: &GradedLieAlgebra) -> Self {
        Self::from_blocks(g.k(), &reference_blocks(g))
    }

    /// The opposite filtration `e_i = ⊕_{j ≤ −i} g_j`.
    pub fn opposite_from_grading(g: &GradedLieAlgebra) -> Self {
        let flipped: Vec<(i32, Subspace)> = reference_blocks(g)
            .into_iter()
            .map(|(d, s)| (-d, s))
            .collect();
        Self::from_blocks(g.k(), &flipped)
    }

    pub fn image(&self, m: &Matrix) -> Self {
        LieFiltration {
            k: self.k,
            chain: apply_chain(m, &self.chain),
        }
    }

    /// First basis pair violating `[f_i, f_j] ⊆ f_{i+j}`.
    pub fn compatibility_defect(&self, g: &GradedLieAlgebra) -> Option<String> {
        let k = self.k as i32;
        for i in -k..=k + 1 {
            for j in i..=k + 1 {
                let target = self.get(i + j);
                for x in self.get(i).vectors() {
                    for y in self.get(j).vectors() {
                        if !target.contains(&g.br(&x, &y)) {
                            return Some(format!("[f_{i}, f_{j}] not in f_{}", i + j));
                        }
                    }
                }
            }
        }
        None
    }
}

/// The blocks `g_j` of the algebra's grading, for `j = −k..=k`.
pub fn reference_blocks(g: &GradedLieAlgebra) -> Vec<(i32, Subspace)> {
    let k = g.k() as i32;
    (-k..=k).map(|j| (j, g.block_space(j))).collect()
}

/// Crosswise complementarity `g = f_i ⊕ e_{1−i}`.
pub fn filtrations_transversal(e: &LieFiltration, f: &LieFiltration) -> bool {
    let k = f.k as i32;
    e.k == f.k && (-k..=k + 1).all(|i| f.get(i).is_complement(e.get(1 - i)).unwrap_or(false))
}

/// `g_i = f_i ∩ e_{−i}` for transversal filtrations.
pub fn grading_of_filtrations(
    e: &LieFiltration,
    f: &LieFiltration,
) -> Result<Vec<(i32, Subspace)>> {
    if !filtrations_transversal(e, f) {
        return Err(Error::NotTransversal);
    }
    let k = f.k as i32;
    (-k..=k)
        .map(|i| Ok((i, f.get(i).intersect(e.get(-i))?)))
        .collect()
}

fn homogeneous(blocks: &[(i32, Subspace)]) -> Vec<(i32, Vec<Scalar>)> {
    blocks
        .iter()
        .flat_map(|(d, s)| s.vectors().into_iter().map(move |v| (*d, v)))
        .collect()
}

fn is_lie_grading(g: &GradedLieAlgebra, blocks: &[(i32, Subspace)]) -> Option<String> {
    for (a, sa) in blocks {
        for (b, sb) in blocks {
            let target = blocks
                .iter()
                .find(|(d, _)| *d == a + b)
                .map(|(_, s)| s.clone());
            for x in sa.vectors() {
                for y in sb.vectors() {
                    let z = g.br(&x, &y);
                    let ok = match &target {
                        Some(t) => t.contains(&z),
                        None => crate::kernel::vector::is_zero(&z),
                    };
                    if !ok {
                        return Some(format!("[g_{a}, g_{b}]"));
                    }
                }
            }
        }
    }
    None
}

fn euler_text(e: &[Scalar]) -> String {
    let parts: Vec<String> = e.iter().map(|s| format!("{s}")).collect();
    format!("[{}]", parts.join(","))
}

/// For a pair of filtrations: crosswise transversality and, when it holds,
/// the common grading, its Lie compatibility and an Euler operator for it.
pub fn lie_flag_theorem_check(
    g: &GradedLieAlgebra,
    e: &LieFiltration,
    f: &LieFiltration,
) -> Result<Report> {
    g.ring().require_inverts_up_to(2 * f.k as u32 + 1)?;
    let mut r = Report::new();
    let transversal = filtrations_transversal(e, f);
    r.push(Check::new("Crosswise", transversal));
    if !transversal {
        return Ok(r);
    }
    let blocks = grading_of_filtrations(e, f)?;
    let recovered = LieFiltration::from_blocks(f.k, &blocks);
    let flipped: Vec<(i32, Subspace)> = blocks.iter().map(|(d, s)| (-d, s.clone())).collect();
    let opposite = LieFiltration::from_blocks(f.k, &flipped);
    r.push(Check::new(
        "GradingRecovered",
        &recovered == f && &opposite == e,
    ));
    r.push(match is_lie_grading(g, &blocks) {
        None => Check::pass("LieGrading"),
        Some(w) => Check::fail("LieGrading", w),
    });
    let euler = euler_for(g, &homogeneous(&blocks), g.ring());
    r.push(match euler {
        Some(v) => Check::pass("EulerOperator").note("euler", euler_text(&v)),
        None => Check::fail("EulerOperator", "no solution of [E, X] = iX"),
    });
    Ok(r)
}

/// Looks for an inner grading inducing `f` among the conjugates of the
/// reference grading by the elementary group.
pub fn inner_filtration_check(
    g: &GradedLieAlgebra,
    f: &LieFiltration,
    limit: u64,
) -> Result<Report> {
    g.ring().require_inverts_up_to(2 * f.k as u32 + 1)?;
    let mut r = Report::new();
    if let Some(w) = f.compatibility_defect(g) {
        r.push(Check::fail("FiltrationCompatible", w));
        return Ok(r);
    }
    r.push(Check::pass("FiltrationCompatible"));
    let base = LieFiltration::from_grading(g);
    let orbit = elementary_orbit(g, &base.chain, usize::MAX, limit)?;
    let Some(elt) = orbit.members.get(&f.chain) else {
        r.push(Check::fail(
            "InnerGrading",
            format!("not among {} conjugates", orbit.len()),
        ));
        return Ok(r);
    };
    let blocks: Vec<(i32, Subspace)> = reference_blocks(g)
        .into_iter()
        .map(|(d, s)| (d, s.image(elt)))
        .collect();
    let induced = LieFiltration::from_blocks(f.k, &blocks);
    let euler = g
        .euler
        .clone()
        .or_else(|| g.find_euler())
        .map(|e| elt.mul_vec(&e));
    let euler_ok = euler.as_ref().is_some_and(|e| {
        homogeneous(&blocks)
            .iter()
            .all(|(d, x)| g.br(e, x) == crate::kernel::vector::scale(g.ring().int(*d as i64), x))
    });
    let mut c = Check::new("InnerGrading", &induced == f && euler_ok);
    if let Some(e) = euler {
        c = c.note("euler", euler_text(&e));
    }
    r.push(c);
    Ok(r)
}

/// `exp(ad x) · e` for `x ∈ f₁`.
pub fn exp_action(
    g: &GradedLieAlgebra,
    f: &LieFiltration,
    x: &[Scalar],
    e: &LieFiltration,
) -> Result<LieFiltration> {
    if !f.get(1).contains(x) {
        return Err(invalid("x does not lie in f_1"));
    }
    Ok(e.image(&g.exp_ad(x)?.matrix))
}

/// Checks that `x ↦ exp(ad x) · e` maps `f₁` bijectively onto the
/// filtrations of the orbit of `e` that are transversal to `f`, for the
/// reference pair `(f, e)` of the grading.
pub fn bijection_check(g: &GradedLieAlgebra, limit: u64) -> Result<Report> {
    let ring = g.ring();
    if !ring.is_finite() {
        return Err(Error::Method("enumeration needs a prime field".into()));
    }
    let f = LieFiltration::from_grading(g);
    let e = LieFiltration::opposite_from_grading(g);
    let f1 = f.get(1);
    let size = crate::kernel::vector::field_power(ring, f1.dim());
    if size > limit as u128 {
        return Err(Error::TooLarge { size, limit });
    }
    let orbit = elementary_orbit(g, &e.chain, usize::MAX, limit)?;
    let ftop: BTreeSet<Vec<Subspace>> = orbit
        .members
        .keys()
        .filter(|c| {
            filtrations_transversal(
                &LieFiltration {
                    k: f.k,
                    chain: (*c).clone(),
                },
                &f,
            )
        })
        .cloned()
        .collect();
    let mut images = BTreeSet::new();
    let mut all_transversal = true;
    let xs = f1.elements();
    for x in &xs {
        let img = exp_action(g, &f, x, &e)?;
        all_transversal &= filtrations_transversal(&img, &f);
        images.insert(img.chain);
    }
    let mut r = Report::new();
    r.push(Check::new("ImagesTransversal", all_transversal));
    r.push(Check::new("Injective", images.len() == xs.len()).note("f1_size", xs.len()));
    r.push(Check::new("Surjective", images == ftop).note("ftop_size", ftop.len()));
    Ok(r)
}

/// The point of `Gras(Kⁿ)` attached to a filtration of `gl(n)`: the span of
/// the images of the matrices in `f₁`.
pub fn filtration_point(f: &LieFiltration, n: usize) -> Subspace {
    let ring = f.get(1).ring();
    let mut cols = Vec::new();
    for v in f.get(1).vectors() {
        cols.extend(Matrix::new(ring, n, n, v).col_vecs());
    }
    Subspace::span(ring, n, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::kernel::Ring;
    use alloc::vec;

    fn coord(ring: Ring, n: usize, idx: &[usize]) -> Subspace {
        Subspace::coordinate(ring, n, idx)
    }

    #[test]
    fn k3_example() {
        let q = Ring::Rational;
        let g = ModuleGrading::new(vec![
            coord(q, 3, &[0]),
            coord(q, 3, &[1]),
            coord(q, 3, &[2]),
        ])
        .unwrap();
        let (fp, fm) = flags_from_grading(&g);
        assert_eq!(
            fp.chain,
            vec![
                coord(q, 3, &[0]),
                coord(q, 3, &[0, 1]),
                coord(q, 3, &[0, 1, 2])
            ]
        );
        assert!(flag_transversal(&fm, &fp).unwrap());
        assert!(!flag_transversal(&fp, &fp).unwrap());
        let rec = grading_from_transversal(&fm, &fp).unwrap();
        assert_eq!(rec, g);
        assert_eq!(rec.blocks[1], coord(q, 3, &[1]));
        let other = Flag::new(vec![
            coord(q, 3, &[0]),
            coord(q, 3, &[0, 2]),
            coord(q, 3, &[0, 1, 2]),
        ])
        .unwrap();
        assert!(!flag_transversal(&other, &fp).unwrap());
    }

    #[test]
    fn short_flags() {
        let q = Ring::Rational;
        let one = ModuleGrading::new(vec![Subspace::full(q, 2)]).unwrap();
        let (a, b) = flags_from_grading(&one);
        assert_eq!(a, b);
        assert_eq!(grading_from_transversal(&b, &a).unwrap(), one);
        let two = ModuleGrading::new(vec![coord(q, 2, &[0]), coord(q, 2, &[1])]).unwrap();
        assert_eq!(
            flags_from_grading(&two).1.chain,
            vec![coord(q, 2, &[1]), Subspace::full(q, 2)]
        );
        assert!(ModuleGrading::new(vec![coord(q, 2, &[0]), coord(q, 2, &[0])]).is_err());
    }

    #[test]
    fn gl2_theorem() {
        let f5 = Ring::Prime(5);
        let g = catalog::gl_3graded(1, 1, f5).unwrap();
        let f = LieFiltration::from_grading(&g);
        let e = LieFiltration::opposite_from_grading(&g);
        let r = lie_flag_theorem_check(&g, &e, &f).unwrap();
        assert!(r.passed(), "{r}");
        let half = f5.ratio(1, 2);
        let want = euler_text(&[half, f5.zero(), f5.zero(), -half]);
        assert_eq!(
            r.get("EulerOperator").unwrap().get_note("euler"),
            Some(&want.into())
        );
        let same = lie_flag_theorem_check(&g, &f, &f).unwrap();
        assert!(!same.get("Crosswise").unwrap().passed);
    }

    #[test]
    fn five_grading_ring_constraint() {
        let g7 = catalog::gl_graded(&[1, 0, -1], Ring::Prime(7));
        let f = LieFiltration::from_grading(&g7);
        let e = LieFiltration::opposite_from_grading(&g7);
        assert!(lie_flag_theorem_check(&g7, &e, &f).unwrap().passed());
        let g5 = catalog::gl_graded(&[1, 0, -1], Ring::Prime(5));
        let f = LieFiltration::from_grading(&g5);
        let e = LieFiltration::opposite_from_grading(&g5);
        assert!(matches!(
            lie_flag_theorem_check(&g5, &e, &f),
            Err(Error::NotInvertible { .. })
        ));
    }

    #[test]
    fn inner_filtration_search() {
        let f5 = Ring::Prime(5);
        let g = catalog::sl2(f5);
        let base = LieFiltration::from_grading(&g);
        assert!(inner_filtration_check(&g, &base, 1000).unwrap().passed());
        let moved = exp_action(
            &g,
            &base,
            &g.unit(1).iter().map(|_| f5.zero()).collect::<Vec<_>>(),
            &base,
        )
        .unwrap();
        assert_eq!(moved, base);
        let t = base.image(&g.exp_ad(&g.unit(1)).unwrap().matrix);
        assert_ne!(t, base);
        assert!(inner_filtration_check(&g, &t, 1000).unwrap().passed());
        // f_1 = <h> is not a subalgebra chain of the right kind
        let bad = LieFiltration::new(
            1,
            vec![
                Subspace::zero(f5, 3),
                coord(f5, 3, &[2]),
                coord(f5, 3, &[0, 2]),
                Subspace::full(f5, 3),
            ],
        )
        .unwrap();
        let r = inner_filtration_check(&g, &bad, 1000).unwrap();
        assert!(!r.get("FiltrationCompatible").unwrap().passed);
    }

    #[test]
    fn bijections() {
        let f5 = Ring::Prime(5);
        let r = bijection_check(&catalog::sl2(f5), 10_000).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(
            r.get("Surjective").unwrap().get_note("ftop_size"),
            Some(&5usize.into())
        );
        let r = bijection_check(&catalog::gl_3graded(1, 2, f5).unwrap(), 10_000).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(
            r.get("Injective").unwrap().get_note("f1_size"),
            Some(&25usize.into())
        );
    }

    #[test]
    fn dictionary_gl2() {
        let f5 = Ring::Prime(5);
        let g = catalog::gl_3graded(1, 1, f5).unwrap();
        let base = LieFiltration::from_grading(&g);
        assert_eq!(filtration_point(&base, 2), coord(f5, 2, &[0]));
        let o = elementary_orbit(&g, &base.chain, usize::MAX, 1000).unwrap();
        let pts: BTreeSet<Subspace> = o
            .members
            .keys()
            .map(|c| {
                filtration_point(
                    &LieFiltration {
                        k: 1,
                        chain: c.clone(),
                    },
                    2,
                )
            })
            .collect();
        assert_eq!(pts.len(), 6);
        assert_eq!(o.len(), 6);
    }
}
