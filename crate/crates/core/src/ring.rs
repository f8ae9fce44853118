//! Exact coefficient rings: the integers, the rationals and `Z/n`.
//!
//! Every element type implements [`Scalar`], the one trait the rest of the
//! crate is generic over. Values are always kept in canonical form (reduced
//! fractions with positive denominator, least non-negative residues), so
//! structural equality is mathematical equality.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Which of the three supported coefficient rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingKind {
    Integers,
    Rationals,
    Modular,
}

/// A coefficient ring together with the data needed to decide field-ness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingSpec {
    kind: RingKind,
    modulus: Option<u64>,
    is_field: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("ring mismatch: expected {expected}, got an element of {found}")]
    RingMismatch { expected: RingSpec, found: String },
    #[error("{0} is not invertible in {1}")]
    NotInvertible(String, RingSpec),
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("malformed scalar {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("fraction {0:?} given for non-rational ring {1}")]
    FractionNotAllowed(String, RingSpec),
    #[error("{0} cannot hold elements of {1}")]
    UnsupportedRing(&'static str, RingSpec),
}

impl RingSpec {
    pub const fn integers() -> Self {
        RingSpec {
            kind: RingKind::Integers,
            modulus: None,
            is_field: false,
        }
    }

    pub const fn rationals() -> Self {
        RingSpec {
            kind: RingKind::Rationals,
            modulus: None,
            is_field: true,
        }
    }

    /// `Z/n`; primality of `n` is decided here and cached in `is_field`.
    pub fn modular(modulus: u64) -> Result<Self, RingError> {
        if modulus < 2 {
            return Err(RingError::BadModulus(modulus));
        }
        Ok(RingSpec {
            kind: RingKind::Modular,
            modulus: Some(modulus),
            is_field: is_prime(modulus),
        })
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn is_field(&self) -> bool {
        self.is_field
    }

    /// Rings over which kernels, ranks and cohomology are supported:
    /// fields and the integers. Composite moduli are not.
    pub fn supports_linear_algebra(&self) -> bool {
        self.is_field || self.kind == RingKind::Integers
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.modulus) {
            (RingKind::Integers, _) => write!(f, "Z"),
            (RingKind::Rationals, _) => write!(f, "Q"),
            (RingKind::Modular, Some(n)) => write!(f, "Z/{n}"),
            (RingKind::Modular, None) => unreachable!("modular ring without modulus"),
        }
    }
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// An exact element of one of the supported coefficient rings.
///
/// The ring is carried by a [`RingSpec`] alongside the values (matrices,
/// categories), so constants are produced with `zero_in` / `one_in` rather
/// than through `num_traits::Zero`, which has no way to learn a runtime
/// modulus.
pub trait Scalar: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Name used in error messages.
    const TYPE_NAME: &'static str;

    /// Whether this element type can represent elements of `ring`.
    fn represents(ring: &RingSpec) -> bool;
    fn zero_in(ring: &RingSpec) -> Self;
    fn one_in(ring: &RingSpec) -> Self;
    /// Canonical image of an integer.
    fn from_integer(ring: &RingSpec, n: &BigInt) -> Self;
    fn belongs_to(&self, ring: &RingSpec) -> bool;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, if one exists.
    fn inverse(&self) -> Option<Self>;
    /// `self / d` when `d` divides `self` exactly. Used by fraction-free elimination.
    fn exact_div(&self, d: &Self) -> Option<Self>;

    /// The underlying integer, for elements of the integer ring only.
    fn to_integer(&self) -> Option<BigInt>;

    /// Parse `-?digits` or `-?digits/digits` into canonical form.
    fn parse_in(ring: &RingSpec, text: &str) -> Result<Self, RingError>;

    fn add_assign(&mut self, other: &Self) {
        *self = Scalar::add(self, other);
    }

    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let p = Scalar::mul(a, b);
        self.add_assign(&p);
    }
}

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Residue class modulo a runtime modulus, stored as the least
/// non-negative representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Zmod {
    value: u64,
    modulus: u64,
}

impl Zmod {
    pub fn new(value: &BigInt, modulus: u64) -> Self {
        let m = BigInt::from(modulus);
        let v = value.mod_floor(&m);
        Zmod {
            value: v.to_u64().expect("residue fits in modulus"),
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "arithmetic between residues of different moduli"
        );
    }
}

impl fmt::Display for Zmod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Split `-?digits(/digits)?` into signed numerator and optional denominator.
fn parse_parts(text: &str) -> Result<(BigInt, Option<BigInt>), RingError> {
    let malformed = || RingError::Malformed(text.to_string());
    let t = text.trim();
    let (neg, body) = if let Some(rest) = t.strip_prefix('-') {
        (true, rest)
    } else if let Some(rest) = t.strip_prefix('\u{2212}') {
        (true, rest)
    } else {
        (false, t)
    };
    let digits = |s: &str| -> Result<BigInt, RingError> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        s.parse::<BigInt>().map_err(|_| malformed())
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (digits(n)?, Some(digits(d)?)),
        None => (digits(body)?, None),
    };
    let num = if neg { -num } else { num };
    if let Some(d) = &den {
        if Zero::is_zero(d) {
            return Err(RingError::ZeroDenominator(text.to_string()));
        }
    }
    Ok((num, den))
}

impl Scalar for BigInt {
    const TYPE_NAME: &'static str = "integer";

    fn represents(ring: &RingSpec) -> bool {
        ring.kind == RingKind::Integers
    }
    fn zero_in(_: &RingSpec) -> Self {
        BigInt::zero()
    }
    fn one_in(_: &RingSpec) -> Self {
        BigInt::one()
    }
    fn from_integer(_: &RingSpec, n: &BigInt) -> Self {
        n.clone()
    }
    fn belongs_to(&self, ring: &RingSpec) -> bool {
        Self::represents(ring)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if One::is_one(&self.abs()) {
            Some(self.clone())
        } else {
            None
        }
    }
    fn exact_div(&self, d: &Self) -> Option<Self> {
        if Zero::is_zero(d) {
            return None;
        }
        let (q, r) = self.div_rem(d);
        Zero::is_zero(&r).then_some(q)
    }
    fn to_integer(&self) -> Option<BigInt> {
        Some(self.clone())
    }
    fn parse_in(ring: &RingSpec, text: &str) -> Result<Self, RingError> {
        match parse_parts(text)? {
            (n, None) => Ok(n),
            (_, Some(_)) => Err(RingError::FractionNotAllowed(text.to_string(), *ring)),
        }
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if Zero::is_zero(a) || Zero::is_zero(b) {
            return;
        }
        *self += a * b;
    }
}

impl Scalar for BigRational {
    const TYPE_NAME: &'static str = "rational";

    fn represents(ring: &RingSpec) -> bool {
        ring.kind == RingKind::Rationals
    }
    fn zero_in(_: &RingSpec) -> Self {
        BigRational::zero()
    }
    fn one_in(_: &RingSpec) -> Self {
        BigRational::one()
    }
    fn from_integer(_: &RingSpec, n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn belongs_to(&self, ring: &RingSpec) -> bool {
        Self::represents(ring)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn exact_div(&self, d: &Self) -> Option<Self> {
        (!Zero::is_zero(d)).then(|| self / d)
    }
    fn to_integer(&self) -> Option<BigInt> {
        None
    }
    fn parse_in(_: &RingSpec, text: &str) -> Result<Self, RingError> {
        let (n, d) = parse_parts(text)?;
        Ok(BigRational::new(n, d.unwrap_or_else(BigInt::one)))
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
}

impl Scalar for Zmod {
    const TYPE_NAME: &'static str = "residue";

    fn represents(ring: &RingSpec) -> bool {
        ring.kind == RingKind::Modular
    }
    fn zero_in(ring: &RingSpec) -> Self {
        Zmod {
            value: 0,
            modulus: ring.modulus.expect("modular ring"),
        }
    }
    fn one_in(ring: &RingSpec) -> Self {
        Zmod {
            value: 1,
            modulus: ring.modulus.expect("modular ring"),
        }
    }
    fn from_integer(ring: &RingSpec, n: &BigInt) -> Self {
        Zmod::new(n, ring.modulus.expect("modular ring"))
    }
    fn belongs_to(&self, ring: &RingSpec) -> bool {
        ring.modulus == Some(self.modulus) && self.value < self.modulus
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn is_one(&self) -> bool {
        self.value == 1
    }
    fn add(&self, other: &Self) -> Self {
        self.check(other);
        let s = (self.value as u128 + other.value as u128) % self.modulus as u128;
        Zmod {
            value: s as u64,
            modulus: self.modulus,
        }
    }
    fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let s = (self.value as u128 + (self.modulus - other.value) as u128) % self.modulus as u128;
        Zmod {
            value: s as u64,
            modulus: self.modulus,
        }
    }
    fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let p = (self.value as u128 * other.value as u128) % self.modulus as u128;
        Zmod {
            value: p as u64,
            modulus: self.modulus,
        }
    }
    fn neg(&self) -> Self {
        Zmod {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
    fn inverse(&self) -> Option<Self> {
        let a = BigInt::from(self.value);
        let m = BigInt::from(self.modulus);
        let e = a.extended_gcd(&m);
        if !One::is_one(&e.gcd) {
            return None;
        }
        Some(Zmod::new(&e.x, self.modulus))
    }
    fn exact_div(&self, d: &Self) -> Option<Self> {
        d.inverse().map(|inv| Scalar::mul(self, &inv))
    }
    fn to_integer(&self) -> Option<BigInt> {
        None
    }
    fn parse_in(ring: &RingSpec, text: &str) -> Result<Self, RingError> {
        let modulus = ring
            .modulus
            .ok_or(RingError::UnsupportedRing(Self::TYPE_NAME, *ring))?;
        match parse_parts(text)? {
            (n, None) => Ok(Zmod::new(&n, modulus)),
            (_, Some(_)) => Err(RingError::FractionNotAllowed(text.to_string(), *ring)),
        }
    }
}

/// The four ring operations, as named in the instance tooling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
    Neg,
}

fn ensure_member<T: Scalar>(ring: &RingSpec, a: &T) -> Result<(), RingError> {
    if a.belongs_to(ring) {
        Ok(())
    } else {
        Err(RingError::RingMismatch {
            expected: *ring,
            found: format!("{} {a}", T::TYPE_NAME),
        })
    }
}

/// Checked arithmetic: both operands must belong to `ring`. `b` is ignored for `Neg`.
pub fn ring_arith<T: Scalar>(ring: &RingSpec, op: RingOp, a: &T, b: Option<&T>) -> Result<T, RingError> {
    ensure_member(ring, a)?;
    let rhs = || -> Result<&T, RingError> {
        let b = b.ok_or_else(|| RingError::Malformed("missing second operand".into()))?;
        ensure_member(ring, b)?;
        Ok(b)
    };
    Ok(match op {
        RingOp::Add => a.add(rhs()?),
        RingOp::Sub => a.sub(rhs()?),
        RingOp::Mul => a.mul(rhs()?),
        RingOp::Neg => a.neg(),
    })
}

pub fn scalar_inverse<T: Scalar>(ring: &RingSpec, a: &T) -> Result<T, RingError> {
    ensure_member(ring, a)?;
    a.inverse()
        .ok_or_else(|| RingError::NotInvertible(a.to_string(), *ring))
}

pub fn parse_scalar<T: Scalar>(ring: &RingSpec, text: &str) -> Result<T, RingError> {
    if !T::represents(ring) {
        return Err(RingError::UnsupportedRing(T::TYPE_NAME, *ring));
    }
    T::parse_in(ring, text)
}
