//! Exact scalars over ℚ or a prime field F_p (p ≥ 5).

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use crate::error::Error;

/// Base ring of a structure.
///
/// Prime fields are restricted to `p ≥ 5` so that 2 and 3 are invertible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ring {
    Rational,
    Prime(u32),
}

impl Ring {
    pub fn prime(p: u32) -> Result<Ring, Error> {
        if p < 5 || !is_prime(p) {
            return Err(Error::BadRing(p));
        }
        Ok(Ring::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.int(0)
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Ring::Rational => Scalar::Rat(Rational::integer(n)),
            Ring::Prime(p) => Scalar::Mod(ModP::new(n, p)),
        }
    }

    pub fn ratio(self, num: i64, den: i64) -> Scalar {
        let d = self
            .int(den)
            .inv()
            .expect("denominator not invertible in ring");
        self.int(num) * d
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Ring::Prime(_))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Ring::Rational => 0,
            Ring::Prime(p) => p,
        }
    }

    /// Size of the field, `None` for ℚ.
    pub fn order(self) -> Option<u32> {
        match self {
            Ring::Rational => None,
            Ring::Prime(p) => Some(p),
        }
    }

    /// True when every integer `2..=n` is invertible.
    pub fn inverts_up_to(self, n: u32) -> bool {
        match self {
            Ring::Rational => true,
            Ring::Prime(p) => p > n,
        }
    }

    pub fn require_inverts_up_to(self, n: u32) -> Result<(), Error> {
        if self.inverts_up_to(n) {
            Ok(())
        } else {
            Err(Error::NotInvertible { ring: self, n })
        }
    }

    /// All elements of a prime field in the order 0, 1, …, p − 1.
    pub fn elements(self) -> Option<impl Iterator<Item = Scalar>> {
        match self {
            Ring::Rational => None,
            Ring::Prime(p) => Some((0..p).map(move |v| {
                Scalar::Mod(ModP {
                    value: v,
                    modulus: p,
                })
            })),
        }
    }

    /// The element with index `i` in [`Ring::elements`] order.
    pub fn element(self, i: u32) -> Scalar {
        match self {
            Ring::Rational => Scalar::Rat(Rational::integer(i as i64)),
            Ring::Prime(p) => Scalar::Mod(ModP {
                value: i % p,
                modulus: p,
            }),
        }
    }

    pub fn parse_scalar(self, s: &str) -> Result<Scalar, Error> {
        let bad = || Error::BadScalar {
            text: s.into(),
            ring: self,
        };
        match self {
            Ring::Rational => s.parse::<Rational>().map(Scalar::Rat).map_err(|_| bad()),
            Ring::Prime(p) => {
                let v: u32 = s.parse().map_err(|_| bad())?;
                if v >= p {
                    return Err(bad());
                }
                Ok(Scalar::Mod(ModP {
                    value: v,
                    modulus: p,
                }))
            }
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Rational => f.write_str("q"),
            Ring::Prime(p) => write!(f, "f{p}"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("rational") {
            return Ok(Ring::Rational);
        }
        let digits = t.strip_prefix('f').or_else(|| t.strip_prefix('F'));
        match digits.and_then(|d| d.parse::<u32>().ok()) {
            Some(p) => Ring::prime(p),
            None => Err(Error::UnknownRing(t.into())),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A reduced fraction with positive denominator.
///
/// Arithmetic panics on overflow of the 64-bit numerator or denominator; it
/// never wraps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };

    pub fn integer(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn new(num: i64, den: i64) -> Option<Self> {
        if den == 0 {
            return None;
        }
        Some(Self::reduce(num as i128, den as i128))
    }

    pub fn numer(self) -> i64 {
        self.num
    }

    pub fn denom(self) -> i64 {
        self.den
    }

    fn reduce(mut num: i128, mut den: i128) -> Self {
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = gcd(num, den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        let num = i64::try_from(num).expect("rational overflow");
        let den = i64::try_from(den).expect("rational overflow");
        Rational { num, den }
    }

    fn add(self, o: Self) -> Self {
        if self.den == 1 && o.den == 1 {
            return Rational::integer(self.num.checked_add(o.num).expect("rational overflow"));
        }
        let n = self.num as i128 * o.den as i128 + o.num as i128 * self.den as i128;
        Self::reduce(n, self.den as i128 * o.den as i128)
    }

    fn mul(self, o: Self) -> Self {
        if self.den == 1 && o.den == 1 {
            return Rational::integer(self.num.checked_mul(o.num).expect("rational overflow"));
        }
        Self::reduce(
            self.num as i128 * o.num as i128,
            self.den as i128 * o.den as i128,
        )
    }

    fn inv(self) -> Option<Self> {
        if self.num == 0 {
            None
        } else {
            Some(Self::reduce(self.den as i128, self.num as i128))
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Rational {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        match s.split_once('/') {
            None => s
                .trim()
                .parse::<i64>()
                .map(Rational::integer)
                .map_err(|_| ()),
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| ())?;
                let d: i64 = d.trim().parse().map_err(|_| ())?;
                Rational::new(n, d).ok_or(())
            }
        }
    }
}

/// Residue class modulo a prime, stored in `0..modulus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModP {
    value: u32,
    modulus: u32,
}

impl ModP {
    pub fn new(n: i64, p: u32) -> Self {
        ModP {
            value: n.rem_euclid(p as i64) as u32,
            modulus: p,
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    fn inv(self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        let (mut r0, mut r1) = (self.modulus as i64, self.value as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(ModP::new(t0, self.modulus))
    }
}

/// Element of ℚ or F_p. Mixing rings in one operation panics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    Rat(Rational),
    Mod(ModP),
}

impl Scalar {
    pub fn ring(self) -> Ring {
        match self {
            Scalar::Rat(_) => Ring::Rational,
            Scalar::Mod(m) => Ring::Prime(m.modulus),
        }
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        match self {
            Scalar::Rat(r) => r.num == 0,
            Scalar::Mod(m) => m.value == 0,
        }
    }

    pub fn is_one(self) -> bool {
        match self {
            Scalar::Rat(r) => r.num == 1 && r.den == 1,
            Scalar::Mod(m) => m.value == 1,
        }
    }

    pub fn inv(self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) => r.inv().map(Scalar::Rat),
            Scalar::Mod(m) => m.inv().map(Scalar::Mod),
        }
    }

    /// Index of a prime-field element in `0..p`.
    pub fn residue(self) -> Option<u32> {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Mod(m) => Some(m.value),
        }
    }

    pub fn as_rational(self) -> Option<Rational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Mod(_) => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => r.fmt(f),
            Scalar::Mod(m) => write!(f, "{}", m.value),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;

    #[inline]
    fn add(self, rhs: Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod(a), Scalar::Mod(b)) => {
                debug_assert_eq!(a.modulus, b.modulus);
                let s = a.value + b.value;
                let v = if s >= a.modulus { s - a.modulus } else { s };
                Scalar::Mod(ModP {
                    value: v,
                    modulus: a.modulus,
                })
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a.add(b)),
            _ => panic!("scalar ring mismatch"),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    #[inline]
    fn neg(self) -> Scalar {
        match self {
            Scalar::Mod(a) => {
                let v = if a.value == 0 { 0 } else { a.modulus - a.value };
                Scalar::Mod(ModP {
                    value: v,
                    modulus: a.modulus,
                })
            }
            Scalar::Rat(a) => Scalar::Rat(Rational {
                num: a.num.checked_neg().expect("rational overflow"),
                den: a.den,
            }),
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;

    #[inline]
    fn sub(self, rhs: Scalar) -> Scalar {
        self + (-rhs)
    }
}

impl Mul for Scalar {
    type Output = Scalar;

    #[inline]
    fn mul(self, rhs: Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod(a), Scalar::Mod(b)) => {
                debug_assert_eq!(a.modulus, b.modulus);
                let v = (a.value as u64 * b.value as u64) % a.modulus as u64;
                Scalar::Mod(ModP {
                    value: v as u32,
                    modulus: a.modulus,
                })
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a.mul(b)),
            _ => panic!("scalar ring mismatch"),
        }
    }
}

impl AddAssign for Scalar {
    #[inline]
    fn add_assign(&mut self, rhs: Scalar) {
        *self = *self + rhs;
    }
}

impl SubAssign for Scalar {
    #[inline]
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = *self - rhs;
    }
}

impl MulAssign for Scalar {
    #[inline]
    fn mul_assign(&mut self, rhs: Scalar) {
        *self = *self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn ring_parsing() {
        assert_eq!("q".parse::<Ring>().unwrap(), Ring::Rational);
        assert_eq!("f5".parse::<Ring>().unwrap(), Ring::Prime(5));
        assert!("f4".parse::<Ring>().is_err());
        assert!("f3".parse::<Ring>().is_err());
        assert!("f2".parse::<Ring>().is_err());
        assert!(Ring::prime(7).is_ok());
    }

    #[test]
    fn rational_arithmetic() {
        let q = Ring::Rational;
        let half = q.ratio(1, 2);
        assert_eq!((half + half), q.one());
        assert_eq!(half.to_string(), "1/2");
        assert_eq!(q.ratio(-2, 4).to_string(), "-1/2");
        assert_eq!(q.ratio(3, -6), q.ratio(-1, 2));
        assert_eq!(q.int(2).inv().unwrap(), half);
        assert!(q.zero().inv().is_none());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Ring::Prime(5);
        assert_eq!(f.int(2).inv().unwrap(), f.int(3));
        assert_eq!(f.int(-1), f.int(4));
        assert_eq!(f.int(4) * f.int(4), f.one());
        assert_eq!(f.ratio(1, 2), f.int(3));
        for x in 1..5 {
            let s = f.int(x);
            assert!((s * s.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn scalar_parsing() {
        let f = Ring::Prime(5);
        assert_eq!(f.parse_scalar("3").unwrap(), f.int(3));
        assert!(f.parse_scalar("7").is_err());
        assert!(f.parse_scalar("-1").is_err());
        let q = Ring::Rational;
        assert_eq!(q.parse_scalar("2/4").unwrap(), q.ratio(1, 2));
        assert!(q.parse_scalar("1/0").is_err());
        assert!(q.parse_scalar("x").is_err());
    }

    #[test]
    fn invertibility_bounds() {
        assert!(Ring::Prime(7).inverts_up_to(5));
        assert!(!Ring::Prime(5).inverts_up_to(5));
        assert!(Ring::Prime(5).inverts_up_to(3));
        assert!(Ring::Rational.inverts_up_to(1000));
    }
}
