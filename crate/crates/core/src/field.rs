//! Exact scalar fields.
//!
//! Everything in this crate is computed over one of three fields:
//! the rationals [`Q`], the Gaussian rationals [`Gauss`] = Q(i), and the
//! biquadratic extension [`Surd`] = Q(i, √2) needed for the Cayley element.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number.
pub type Q = BigRational;

/// Build a rational from a numerator and denominator.
pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Build an integral rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Canonical "num/den" rendering used by every serialized output.
pub fn fmt_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parse "num/den" or a bare integer.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Q::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

/// Serde adapter writing [`Q`] as a `"num/den"` string.
pub mod qstr {
    use super::{fmt_q, parse_q, Q};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}")))
    }
}

/// Like [`qstr`] for `Option<Q>`, with `null` for `None`.
pub mod qstr_opt {
    use super::{fmt_q, parse_q, Q};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Option<Q>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(x) => s.serialize_some(&fmt_q(x)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Q>, D::Error> {
        match Option::<String>::deserialize(d)? {
            Some(s) => parse_q(&s).map(Some).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}"))),
            None => Ok(None),
        }
    }
}

/// The operations the generic linear algebra needs.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
    fn from_q(x: Q) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_q(qi(n))
    }
    fn div(&self, other: &Self) -> Self {
        self.clone() * other.inv()
    }
}

impl Field for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn from_q(x: Q) -> Self {
        x
    }
}

/// Gaussian rational `re + i·im`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gauss {
    pub re: Q,
    pub im: Q,
}

impl Gauss {
    pub fn new(re: Q, im: Q) -> Self {
        Gauss { re, im }
    }
    pub fn i() -> Self {
        Gauss::new(qi(0), qi(1))
    }
    pub fn real(re: Q) -> Self {
        Gauss::new(re, qi(0))
    }
    pub fn conj(&self) -> Self {
        Gauss::new(self.re.clone(), -self.im.clone())
    }
    pub fn norm(&self) -> Q {
        &self.re * &self.re + &self.im * &self.im
    }
    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }
    pub fn scale(&self, k: &Q) -> Self {
        Gauss::new(&self.re * k, &self.im * k)
    }
}

impl fmt::Debug for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (Zero::is_zero(&self.re), Zero::is_zero(&self.im)) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "{}-{}i", self.re, -self.im.clone())
                } else {
                    write!(f, "{}+{}i", self.re, self.im)
                }
            }
        }
    }
}

impl Add for Gauss {
    type Output = Gauss;
    fn add(self, o: Gauss) -> Gauss {
        Gauss::new(self.re + o.re, self.im + o.im)
    }
}
impl Sub for Gauss {
    type Output = Gauss;
    fn sub(self, o: Gauss) -> Gauss {
        Gauss::new(self.re - o.re, self.im - o.im)
    }
}
impl Mul for Gauss {
    type Output = Gauss;
    fn mul(self, o: Gauss) -> Gauss {
        Gauss::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}
impl Neg for Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss::new(-self.re, -self.im)
    }
}
impl Div for Gauss {
    type Output = Gauss;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Gauss) -> Gauss {
        self * o.inv()
    }
}

impl Field for Gauss {
    fn zero() -> Self {
        Gauss::new(qi(0), qi(0))
    }
    fn one() -> Self {
        Gauss::new(qi(1), qi(0))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!Zero::is_zero(&n), "inverse of zero");
        Gauss::new(&self.re / &n, -&self.im / &n)
    }
    fn from_q(x: Q) -> Self {
        Gauss::real(x)
    }
}

/// Element `a + b·√2` of Q(i, √2) with `a, b` Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Surd {
    pub a: Gauss,
    pub b: Gauss,
}

impl Surd {
    pub fn new(a: Gauss, b: Gauss) -> Self {
        Surd { a, b }
    }
    pub fn sqrt2() -> Self {
        Surd::new(Gauss::zero(), Gauss::one())
    }
    pub fn from_gauss(a: Gauss) -> Self {
        Surd::new(a, Gauss::zero())
    }
    /// The Gaussian part, if the √2 coefficient vanishes.
    pub fn to_gauss(&self) -> Option<Gauss> {
        Field::is_zero(&self.b).then(|| self.a.clone())
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Field::is_zero(&self.b) {
            write!(f, "{}", self.a)
        } else {
            write!(f, "({})+({})√2", self.a, self.b)
        }
    }
}

impl Add for Surd {
    type Output = Surd;
    fn add(self, o: Surd) -> Surd {
        Surd::new(self.a + o.a, self.b + o.b)
    }
}
impl Sub for Surd {
    type Output = Surd;
    fn sub(self, o: Surd) -> Surd {
        Surd::new(self.a - o.a, self.b - o.b)
    }
}
impl Mul for Surd {
    type Output = Surd;
    fn mul(self, o: Surd) -> Surd {
        let two = Gauss::from_i64(2);
        Surd::new(
            self.a.clone() * o.a.clone() + two * self.b.clone() * o.b.clone(),
            self.a * o.b + self.b * o.a,
        )
    }
}
impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd::new(-self.a, -self.b)
    }
}

impl Field for Surd {
    fn zero() -> Self {
        Surd::from_gauss(Gauss::zero())
    }
    fn one() -> Self {
        Surd::from_gauss(Gauss::one())
    }
    fn is_zero(&self) -> bool {
        Field::is_zero(&self.a) && Field::is_zero(&self.b)
    }
    fn inv(&self) -> Self {
        // (a + b√2)(a - b√2) = a² - 2b², nonzero since √2 ∉ Q(i).
        let two = Gauss::from_i64(2);
        let n = self.a.clone() * self.a.clone() - two * self.b.clone() * self.b.clone();
        let ni = n.inv();
        Surd::new(self.a.clone() * ni.clone(), -(self.b.clone() * ni))
    }
    fn from_q(x: Q) -> Self {
        Surd::from_gauss(Gauss::real(x))
    }
}

impl From<Gauss> for Surd {
    fn from(g: Gauss) -> Surd {
        Surd::from_gauss(g)
    }
}

/// Greatest common divisor of two rationals: the positive generator of `aZ + bZ`.
pub fn gcd_q(a: &Q, b: &Q) -> Q {
    use num_integer::Integer;
    if Zero::is_zero(a) {
        return b.abs();
    }
    if Zero::is_zero(b) {
        return a.abs();
    }
    let num = a.numer().gcd(b.numer());
    let den = a.denom().lcm(b.denom());
    Q::new(num, den)
}
