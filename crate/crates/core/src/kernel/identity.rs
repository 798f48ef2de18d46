//! Checking polynomial identities given by a residual that must vanish.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::sample::Sampler;
use super::vector;
use super::{Ring, Scalar};
use crate::error::{Error, Result};

/// A named argument: an element of `K^dim` on which the identity is
/// homogeneous of the given degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub dim: usize,
    pub degree: u32,
}

impl Variable {
    pub fn new(name: &str, dim: usize, degree: u32) -> Self {
        Variable {
            name: name.into(),
            dim,
            degree,
        }
    }

    pub fn linear(name: &str, dim: usize) -> Self {
        Self::new(name, dim, 1)
    }
}

type Residual<'a> = Box<dyn Fn(&[Vec<Scalar>]) -> Vec<Scalar> + 'a>;

/// An equation `lhs = rhs`, given by its residual `lhs - rhs`.
pub struct Identity<'a> {
    pub name: String,
    pub ring: Ring,
    pub variables: Vec<Variable>,
    residual: Residual<'a>,
}

impl<'a> Identity<'a> {
    pub fn new(
        name: &str,
        ring: Ring,
        variables: Vec<Variable>,
        residual: impl Fn(&[Vec<Scalar>]) -> Vec<Scalar> + 'a,
    ) -> Self {
        Identity {
            name: name.into(),
            ring,
            variables,
            residual: Box::new(residual),
        }
    }

    pub fn residual(&self, point: &[Vec<Scalar>]) -> Vec<Scalar> {
        (self.residual)(point)
    }

    pub fn holds_at(&self, point: &[Vec<Scalar>]) -> bool {
        vector::is_zero(&self.residual(point))
    }

    fn is_multilinear(&self) -> bool {
        self.variables.iter().all(|v| v.degree == 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// All basis tuples; complete for multilinear identities.
    Basis,
    /// Full polarization, then all basis multisets; complete for homogeneous
    /// identities when every degree factorial is invertible.
    Polarized,
    /// Every point over a prime field, refusing more than `limit` points.
    Exhaustive { limit: u64 },
    /// Seeded random points. Not a decision procedure.
    Sampled { seed: u64, samples: u64 },
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Basis => f.write_str("basis"),
            Method::Polarized => f.write_str("polarized"),
            Method::Exhaustive { .. } => f.write_str("exhaustive"),
            Method::Sampled { seed, samples } => write!(f, "sampled(seed={seed},n={samples})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Witness {
    /// Basis indices per variable (a multiset for polarized checks).
    BasisTuple(Vec<Vec<usize>>),
    Point(Vec<Vec<Scalar>>),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::BasisTuple(t) => {
                f.write_str("basis")?;
                for (i, idx) in t.iter().enumerate() {
                    f.write_str(if i == 0 { " " } else { "; " })?;
                    for (j, x) in idx.iter().enumerate() {
                        if j > 0 {
                            f.write_str(",")?;
                        }
                        write!(f, "e{x}")?;
                    }
                }
                Ok(())
            }
            Witness::Point(p) => {
                f.write_str("point")?;
                for (i, v) in p.iter().enumerate() {
                    f.write_str(if i == 0 { " (" } else { "; (" })?;
                    for (j, x) in v.iter().enumerate() {
                        if j > 0 {
                            f.write_str(",")?;
                        }
                        write!(f, "{x}")?;
                    }
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass { cases: u64 },
    Fail { witness: Witness, cases: u64 },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass { .. })
    }

    pub fn cases(&self) -> u64 {
        match self {
            Verdict::Pass { cases } | Verdict::Fail { cases, .. } => *cases,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Pass { .. } => None,
            Verdict::Fail { witness, .. } => Some(witness),
        }
    }
}

pub fn check_identity(id: &Identity<'_>, method: Method) -> Result<Verdict> {
    match method {
        Method::Basis => {
            if !id.is_multilinear() {
                return Err(Error::Method(alloc::format!(
                    "{} is not multilinear; use polarized or exhaustive",
                    id.name
                )));
            }
            Ok(basis(id))
        }
        Method::Polarized => polarized(id),
        Method::Exhaustive { limit } => exhaustive(id, limit),
        Method::Sampled { seed, samples } => Ok(sampled(id, seed, samples)),
    }
}

/// Odometer over `0..bounds[i]` in lexicographic order.
fn advance(cur: &mut [usize], bounds: &[usize]) -> bool {
    for i in (0..cur.len()).rev() {
        cur[i] += 1;
        if cur[i] < bounds[i] {
            return true;
        }
        cur[i] = 0;
    }
    false
}

fn basis(id: &Identity<'_>) -> Verdict {
    let ring = id.ring;
    let bounds: Vec<usize> = id.variables.iter().map(|v| v.dim).collect();
    if bounds.contains(&0) {
        return Verdict::Pass { cases: 0 };
    }
    let units: Vec<Vec<Vec<Scalar>>> = id
        .variables
        .iter()
        .map(|v| (0..v.dim).map(|i| vector::unit(ring, v.dim, i)).collect())
        .collect();
    let mut cur = alloc::vec![0usize; bounds.len()];
    let mut cases = 0u64;
    loop {
        let point: Vec<Vec<Scalar>> = cur
            .iter()
            .enumerate()
            .map(|(v, &i)| units[v][i].clone())
            .collect();
        cases += 1;
        if !id.holds_at(&point) {
            let witness = Witness::BasisTuple(cur.iter().map(|&i| alloc::vec![i]).collect());
            return Verdict::Fail { witness, cases };
        }
        if !advance(&mut cur, &bounds) {
            return Verdict::Pass { cases };
        }
    }
}

/// Non-decreasing sequences of length `d` over `0..n`, lexicographically.
fn multisets(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut cur = alloc::vec![0usize; d];
    loop {
        out.push(cur.clone());
        let mut i = d;
        while i > 0 && cur[i - 1] == n - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        let v = cur[i - 1] + 1;
        for c in cur.iter_mut().skip(i - 1) {
            *c = v;
        }
    }
}

/// Inclusion-exclusion terms of the full polarization at a multiset:
/// integer count vectors with their aggregated signs.
fn polarization_terms(m: &[usize], dim: usize) -> Vec<(Vec<u8>, i64)> {
    let d = m.len();
    let mut acc: BTreeMap<Vec<u8>, i64> = BTreeMap::new();
    for mask in 1u32..(1 << d) {
        let mut counts = alloc::vec![0u8; dim];
        for (s, &i) in m.iter().enumerate() {
            if mask & (1 << s) != 0 {
                counts[i] += 1;
            }
        }
        let sign = if (d as u32 - mask.count_ones()).is_multiple_of(2) {
            1
        } else {
            -1
        };
        *acc.entry(counts).or_insert(0) += sign;
    }
    acc.into_iter().filter(|&(_, c)| c != 0).collect()
}

/// Signed multi-index terms of one polarized monomial.
type PolarTerms = Vec<(Vec<u8>, i64)>;

fn polarized(id: &Identity<'_>) -> Result<Verdict> {
    let ring = id.ring;
    let max_deg = id.variables.iter().map(|v| v.degree).max().unwrap_or(1);
    if !ring.inverts_up_to(max_deg) {
        return Err(Error::Method(alloc::format!(
            "polarizing degree {max_deg} needs {max_deg}! invertible in {ring}"
        )));
    }
    let lists: Vec<Vec<Vec<usize>>> = id
        .variables
        .iter()
        .map(|v| multisets(v.dim, v.degree as usize))
        .collect();
    if lists.iter().any(|l| l.is_empty()) {
        return Ok(Verdict::Pass { cases: 0 });
    }
    let terms: Vec<Vec<PolarTerms>> = lists
        .iter()
        .zip(&id.variables)
        .map(|(l, v)| l.iter().map(|m| polarization_terms(m, v.dim)).collect())
        .collect();
    let bounds: Vec<usize> = lists.iter().map(|l| l.len()).collect();
    let nvars = bounds.len();
    let mut memo: BTreeMap<Vec<Vec<u8>>, Vec<Scalar>> = BTreeMap::new();
    let mut cur = alloc::vec![0usize; nvars];
    let mut cases = 0u64;
    let mut first = usize::MAX;
    loop {
        // Points reachable from one multiset of the first variable share
        // their first coordinate; drop the memo when it changes.
        if cur[0] != first {
            memo.clear();
            first = cur[0];
        }
        cases += 1;
        let mut total: Option<Vec<Scalar>> = None;
        let mut sel = alloc::vec![0usize; nvars];
        let tb: Vec<usize> = (0..nvars).map(|v| terms[v][cur[v]].len()).collect();
        loop {
            let mut coeff = 1i64;
            let mut key: Vec<Vec<u8>> = Vec::with_capacity(nvars);
            for v in 0..nvars {
                let (counts, c) = &terms[v][cur[v]][sel[v]];
                coeff *= c;
                key.push(counts.clone());
            }
            let value = memo.entry(key).or_insert_with_key(|key| {
                let point: Vec<Vec<Scalar>> = key
                    .iter()
                    .map(|counts| counts.iter().map(|&c| ring.int(c as i64)).collect())
                    .collect();
                id.residual(&point)
            });
            let c = ring.int(coeff);
            match &mut total {
                None => total = Some(vector::scale(c, value)),
                Some(t) => vector::axpy(t, c, value),
            }
            if !advance(&mut sel, &tb) {
                break;
            }
        }
        if !total.map(|t| vector::is_zero(&t)).unwrap_or(true) {
            let witness = Witness::BasisTuple(
                cur.iter()
                    .enumerate()
                    .map(|(v, &i)| lists[v][i].clone())
                    .collect(),
            );
            return Ok(Verdict::Fail { witness, cases });
        }
        if !advance(&mut cur, &bounds) {
            return Ok(Verdict::Pass { cases });
        }
    }
}

fn exhaustive(id: &Identity<'_>, limit: u64) -> Result<Verdict> {
    let ring = id.ring;
    if !ring.is_finite() {
        return Err(Error::Method(
            "exhaustive checking needs a prime field".into(),
        ));
    }
    let total_dim: usize = id.variables.iter().map(|v| v.dim).sum();
    let size = vector::field_power(ring, total_dim);
    if size > limit as u128 {
        return Err(Error::TooLarge { size, limit });
    }
    let bounds: Vec<usize> = id
        .variables
        .iter()
        .map(|v| vector::field_power(ring, v.dim) as usize)
        .collect();
    let mut cur = alloc::vec![0usize; bounds.len()];
    let mut cases = 0u64;
    loop {
        let point: Vec<Vec<Scalar>> = cur
            .iter()
            .zip(&id.variables)
            .map(|(&c, v)| vector::decode(ring, v.dim, c as u64))
            .collect();
        cases += 1;
        if !id.holds_at(&point) {
            return Ok(Verdict::Fail {
                witness: Witness::Point(point),
                cases,
            });
        }
        if !advance(&mut cur, &bounds) {
            return Ok(Verdict::Pass { cases });
        }
    }
}

fn sampled(id: &Identity<'_>, seed: u64, samples: u64) -> Verdict {
    let mut rng = Sampler::new(seed);
    let mut worst: Option<Vec<Vec<Scalar>>> = None;
    for _ in 0..samples {
        let point: Vec<Vec<Scalar>> = id
            .variables
            .iter()
            .map(|v| rng.vector(id.ring, v.dim))
            .collect();
        if !id.holds_at(&point) && worst.as_ref().is_none_or(|w| point < *w) {
            worst = Some(point);
        }
    }
    match worst {
        None => Verdict::Pass { cases: samples },
        Some(p) => Verdict::Fail {
            witness: Witness::Point(p),
            cases: samples,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::MultilinearMap;
    use alloc::vec;

    fn f5() -> Ring {
        Ring::Prime(5)
    }

    #[test]
    fn trivial_identity_passes_every_method() {
        let id = Identity::new("0=0", f5(), vec![Variable::linear("x", 2)], |_| vec![]);
        for m in [
            Method::Basis,
            Method::Polarized,
            Method::Exhaustive { limit: 100 },
            Method::Sampled {
                seed: 1,
                samples: 10,
            },
        ] {
            assert!(check_identity(&id, m).unwrap().passed());
        }
    }

    #[test]
    fn multiset_enumeration() {
        assert_eq!(multisets(2, 2), vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(multisets(3, 1).len(), 3);
        assert_eq!(multisets(3, 4).len(), 15);
    }

    #[test]
    fn basis_rejects_non_multilinear() {
        let id = Identity::new("sq", f5(), vec![Variable::new("x", 1, 2)], |_| vec![]);
        assert!(matches!(
            check_identity(&id, Method::Basis),
            Err(Error::Method(_))
        ));
        let q = Identity::new(
            "q",
            Ring::Rational,
            vec![Variable::linear("x", 1)],
            |_| vec![],
        );
        assert!(check_identity(&q, Method::Exhaustive { limit: 10 }).is_err());
    }

    #[test]
    fn polarization_detects_squares() {
        // (x0 + x1)^2 = x0^2 + x1^2 fails only through the cross term.
        let ring = Ring::Rational;
        let id = Identity::new("frob", ring, vec![Variable::new("x", 2, 2)], |p| {
            let x = &p[0];
            let s = x[0] + x[1];
            vec![s * s - x[0] * x[0] - x[1] * x[1]]
        });
        let v = check_identity(&id, Method::Polarized).unwrap();
        assert_eq!(v.witness(), Some(&Witness::BasisTuple(vec![vec![0, 1]])));
        // Over F_5 an honest square identity passes.
        let ok = Identity::new("sq", f5(), vec![Variable::new("x", 2, 2)], |p| {
            let x = &p[0];
            let s = x[0] + x[1];
            vec![s * s - x[0] * x[0] - x[1] * x[1] - f5().int(2) * x[0] * x[1]]
        });
        assert!(check_identity(&ok, Method::Polarized).unwrap().passed());
        assert!(check_identity(&ok, Method::Exhaustive { limit: 100 })
            .unwrap()
            .passed());
    }

    #[test]
    fn broken_symmetry_gives_lexicographic_witness() {
        let ring = f5();
        // t(x,y,z) symmetric in x,z except one flipped coefficient.
        let t = MultilinearMap::from_basis_fn(ring, &[2, 2, 2], 2, |i| {
            let mut out = vector::zeros(ring, 2);
            out[0] = ring.int((i[0] + i[2]) as i64);
            if i == [0, 1, 1] {
                out[1] = ring.one();
            }
            out
        });
        let id = Identity::new(
            "sym",
            ring,
            vec![
                Variable::linear("x", 2),
                Variable::linear("y", 2),
                Variable::linear("z", 2),
            ],
            |p| {
                vector::sub(
                    &t.eval(&[&p[0], &p[1], &p[2]]),
                    &t.eval(&[&p[2], &p[1], &p[0]]),
                )
            },
        );
        let v = check_identity(&id, Method::Basis).unwrap();
        assert_eq!(
            v.witness(),
            Some(&Witness::BasisTuple(vec![vec![0], vec![1], vec![1]]))
        );
        let e = check_identity(&id, Method::Exhaustive { limit: 1 << 20 }).unwrap();
        assert!(!e.passed());
    }

    #[test]
    fn limits_are_enforced() {
        let id = Identity::new("0", f5(), vec![Variable::linear("x", 9)], |_| vec![]);
        assert!(matches!(
            check_identity(&id, Method::Exhaustive { limit: 1000 }),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn sampled_reports_the_smallest_failure() {
        let ring = f5();
        let id = Identity::new("x0=0", ring, vec![Variable::linear("x", 2)], |p| {
            vec![p[0][0]]
        });
        let v = check_identity(
            &id,
            Method::Sampled {
                seed: 7,
                samples: 200,
            },
        )
        .unwrap();
        match v.witness() {
            Some(Witness::Point(p)) => assert_eq!(p[0][0], ring.one()),
            other => panic!("unexpected {other:?}"),
        }
        // Identical seeds give identical verdicts.
        assert_eq!(
            v,
            check_identity(
                &id,
                Method::Sampled {
                    seed: 7,
                    samples: 200
                }
            )
            .unwrap()
        );
    }
}
