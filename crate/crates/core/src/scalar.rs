//! Exact scalars.
//!
//! A [`Scalar`] is either an arbitrary-precision rational or an element of a
//! prime field `F_p`. Rationals double as field-polymorphic constants: an
//! operation mixing a rational with an `F_p` value reduces the rational mod `p`
//! first. Mixing two different primes is a programming error and panics.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// The base field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rationals,
    Prime(u64),
}

impl Field {
    /// Builds `F_p`, rejecting `p` that is not an odd prime.
    pub fn prime(p: u64) -> Result<Self, Error> {
        if p < 3 || p % 2 == 0 || !is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::InvalidField(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn embed(&self, q: &Scalar) -> Scalar {
        match (self, q) {
            (Field::Rationals, s) => s.clone(),
            (Field::Prime(p), Scalar::Rat(r)) => Scalar::Mod {
                value: reduce_rational(r, *p).expect("denominator divisible by the field characteristic"),
                p: *p,
            },
            (Field::Prime(p), Scalar::Mod { value, p: q }) => {
                assert_eq!(p, q, "mixing prime fields");
                Scalar::Mod { value: *value, p: *p }
            }
        }
    }

    pub fn try_embed(&self, q: &Scalar) -> Option<Scalar> {
        match (self, q) {
            (Field::Prime(p), Scalar::Rat(r)) => {
                reduce_rational(r, *p).map(|value| Scalar::Mod { value, p: *p })
            }
            _ => Some(self.embed(q)),
        }
    }

    pub fn one(&self) -> Scalar {
        self.embed(&Scalar::one())
    }

    pub fn zero(&self) -> Scalar {
        self.embed(&Scalar::zero())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    let m = n.mod_floor(&BigInt::from(p));
    m.to_u64().expect("residue fits in u64")
}

fn reduce_rational(r: &BigRational, p: u64) -> Option<u64> {
    let den = reduce_bigint(r.denom(), p);
    if den == 0 {
        return None;
    }
    let num = reduce_bigint(r.numer(), p);
    Some(mul_mod(num, inv_mod(den, p), p))
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a != 0 mod p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// An exact field element.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rat(BigRational),
    Mod { value: u64, p: u64 },
}

impl Scalar {
    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// `(-1)^k`.
    pub fn sign(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Scalar::one()
        } else {
            -Scalar::one()
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rationals,
            Scalar::Mod { p, .. } => Field::Prime(*p),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
            Scalar::Mod { value, p } => Scalar::Mod { value: inv_mod(*value, *p), p: *p },
        })
    }

    /// Brings both operands into a common field.
    fn unify(a: &Scalar, b: &Scalar) -> Option<(Scalar, Scalar)> {
        match (a, b) {
            (Scalar::Rat(_), Scalar::Rat(_)) => Some((a.clone(), b.clone())),
            (Scalar::Mod { p, .. }, Scalar::Rat(r)) => {
                reduce_rational(r, *p).map(|v| (a.clone(), Scalar::Mod { value: v, p: *p }))
            }
            (Scalar::Rat(r), Scalar::Mod { p, .. }) => {
                reduce_rational(r, *p).map(|v| (Scalar::Mod { value: v, p: *p }, b.clone()))
            }
            (Scalar::Mod { p, .. }, Scalar::Mod { p: q, .. }) => {
                assert_eq!(p, q, "mixing prime fields");
                Some((a.clone(), b.clone()))
            }
        }
    }

    fn binop(
        &self,
        other: &Scalar,
        rat: impl FnOnce(&BigRational, &BigRational) -> BigRational,
        modp: impl FnOnce(u64, u64, u64) -> u64,
    ) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(rat(a, b)),
            _ => match Scalar::unify(self, other)
                .expect("rational with denominator divisible by the field characteristic")
            {
                (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, .. }) => {
                    Scalar::Mod { value: modp(a, b, p), p }
                }
                _ => unreachable!(),
            },
        }
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::Rat(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::Rat(BigRational::one())
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rat(r)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) => p == q && a == b,
            _ => match Scalar::unify(self, other) {
                Some((Scalar::Mod { value: a, .. }, Scalar::Mod { value: b, .. })) => a == b,
                _ => false,
            },
        }
    }
}

impl Eq for Scalar {}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `"n"` or `"n/d"` with `d != 0`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
        let r = match t.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(BigInt::from_str(t).map_err(|_| bad())?),
        };
        Ok(Scalar::Rat(r))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Scalar {
    /// True when the printed form starts with a minus sign.
    pub fn is_negative_repr(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_negative(),
            Scalar::Mod { .. } => false,
        }
    }

    /// Total order on rationals; prime-field values compare by residue.
    pub fn cmp_repr(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            (Scalar::Mod { value: a, .. }, Scalar::Mod { value: b, .. }) => a.cmp(b),
            (Scalar::Rat(_), _) => Ordering::Less,
            _ => Ordering::Greater,
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Mod { value, p } => Scalar::Mod { value: (p - value) % p, p: *p },
        }
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b| a + b, |a, b, p| ((a as u128 + b as u128) % p as u128) as u64)
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b| a - b, |a, b, p| ((a as u128 + (p - b) as u128) % p as u128) as u64)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b| a * b, mul_mod)
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero scalar");
        self * &inv
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_form() {
        let a = Scalar::ratio(6, -4);
        assert_eq!(a.to_string(), "-3/2");
        assert_eq!(Scalar::from_str("10/4").unwrap().to_string(), "5/2");
        assert!(Scalar::from_str("1/0").is_err());
        assert!(Scalar::from_str("x").is_err());
    }

    #[test]
    fn prime_field_mixing() {
        let f = Field::prime(7).unwrap();
        let half = f.embed(&Scalar::ratio(1, 2));
        assert_eq!(half.to_string(), "4");
        assert_eq!(&half * &Scalar::from_int(2), Scalar::one());
        assert_eq!(half, Scalar::ratio(1, 2));
        assert_eq!(Scalar::ratio(1, 2), half);
        assert_ne!(half, Scalar::one());
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(9).is_err());
    }

    #[test]
    fn signs() {
        assert_eq!(Scalar::sign(-3), -Scalar::one());
        assert_eq!(Scalar::sign(4), Scalar::one());
    }

    fn rat() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| Scalar::ratio(n, d))
    }

    fn fp() -> impl Strategy<Value = Scalar> {
        (0u64..11).prop_map(|v| Scalar::Mod { value: v, p: 11 })
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in rat(), b in rat(), c in rat()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, Scalar::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a / &a, Scalar::one());
            }
        }

        #[test]
        fn prime_field_axioms(a in fp(), b in fp(), c in fp()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &(-&a), Scalar::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
            }
        }
    }
}
