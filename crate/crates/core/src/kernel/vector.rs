//! Coordinate vectors are plain `Vec<Scalar>`; these are the few helpers
//! shared across modules.

use alloc::vec::Vec;

use super::{Ring, Scalar};

pub fn zeros(ring: Ring, n: usize) -> Vec<Scalar> {
    alloc::vec![ring.zero(); n]
}

pub fn unit(ring: Ring, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zeros(ring, n);
    v[i] = ring.one();
    v
}

pub fn from_ints(ring: Ring, xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| ring.int(x)).collect()
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| x - y).collect()
}

pub fn scale(c: Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|&x| c * x).collect()
}

/// `acc += c * a`
pub fn axpy(acc: &mut [Scalar], c: Scalar, a: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (s, &x) in acc.iter_mut().zip(a) {
        if !x.is_zero() {
            *s += c * x;
        }
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = a[0].ring().zero();
    for (&x, &y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

/// Vectors of `F_p^n` in lexicographic order of residues, indexed by their
/// base-p code (most significant coordinate first).
pub fn decode(ring: Ring, n: usize, mut code: u64) -> Vec<Scalar> {
    let p = ring.order().expect("finite field required") as u64;
    let mut v = zeros(ring, n);
    for slot in v.iter_mut().rev() {
        *slot = ring.element((code % p) as u32);
        code /= p;
    }
    v
}

pub fn encode(v: &[Scalar]) -> u64 {
    let p = match v.first() {
        Some(x) => x.ring().order().expect("finite field required") as u64,
        None => return 0,
    };
    v.iter()
        .fold(0u64, |acc, x| acc * p + x.residue().unwrap() as u64)
}

/// `p^n`, saturating.
pub fn field_power(ring: Ring, n: usize) -> u128 {
    let p = ring.order().expect("finite field required") as u128;
    let mut acc: u128 = 1;
    for _ in 0..n {
        acc = acc.saturating_mul(p);
    }
    acc
}
