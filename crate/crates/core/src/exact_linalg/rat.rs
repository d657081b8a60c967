//! Exact rationals.
//!
//! Values that fit in `i64/i64` stay inline; anything larger is promoted to a
//! `BigRational`. The representation is canonical (a big value is demoted as
//! soon as it fits), so derived equality and hashing are structural.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone)]
enum Repr {
    /// Denominator strictly positive, fraction reduced.
    Small(i64, i64),
    Big(BigRational),
}

#[derive(Clone)]
pub struct Rat(Repr);

/// Parse failure for the rational literal grammar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatParseError {
    pub input: String,
    pub reason: &'static str,
    /// Canonical spelling of the same value, when the literal was valid but not canonical.
    pub suggestion: Option<String>,
}

impl fmt::Display for RatParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational {:?}: {}", self.input, self.reason)?;
        if let Some(s) = &self.suggestion {
            write!(f, " (use \"{}\")", s)?;
        }
        Ok(())
    }
}

fn small_from_i128(n: i128, d: i128) -> Rat {
    debug_assert!(d != 0);
    let (mut n, mut d) = if d < 0 { (-n, -d) } else { (n, d) };
    if n == 0 {
        return Rat::zero();
    }
    let g = n.unsigned_abs().gcd(&d.unsigned_abs());
    if g != 1 {
        n /= g as i128;
        d /= g as i128;
    }
    match (i64::try_from(n), i64::try_from(d)) {
        (Ok(n), Ok(d)) => Rat(Repr::Small(n, d)),
        _ => Rat(Repr::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
    }
}

fn from_big(r: BigRational) -> Rat {
    if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
        return Rat(Repr::Small(n, d));
    }
    Rat(Repr::Big(r))
}

impl Rat {
    pub fn zero() -> Rat {
        Rat(Repr::Small(0, 1))
    }

    pub fn one() -> Rat {
        Rat(Repr::Small(1, 1))
    }

    pub fn from_int(n: i64) -> Rat {
        Rat(Repr::Small(n, 1))
    }

    /// `n / d`; panics when `d == 0`.
    pub fn new(n: i64, d: i64) -> Rat {
        assert!(d != 0, "zero denominator");
        small_from_i128(n as i128, d as i128)
    }

    pub fn from_bigints(n: BigInt, d: BigInt) -> Rat {
        assert!(!d.is_zero(), "zero denominator");
        from_big(BigRational::new(n, d))
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => b.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }

    pub fn recip(&self) -> Option<Rat> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(n, d) => small_from_i128(*d as i128, *n as i128),
            Repr::Big(b) => from_big(b.recip()),
        })
    }

    pub fn pow(&self, e: u32) -> Rat {
        let mut acc = Rat::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Strict parse: the value must be written canonically ("2", "-3/2"; not
    /// "4/2", "+1", "-0", "3/1").
    pub fn parse_canonical(s: &str) -> Result<Rat, RatParseError> {
        let v: Rat = s.parse()?;
        let canon = v.to_string();
        if canon != s {
            return Err(RatParseError {
                input: s.to_string(),
                reason: "not in canonical form",
                suggestion: Some(canon),
            });
        }
        Ok(v)
    }

    fn add_ref(&self, o: &Rat) -> Rat {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &o.0) {
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if b == d {
                return small_from_i128(a + c, b);
            }
            return small_from_i128(a * d + c * b, b * d);
        }
        from_big(self.to_big() + o.to_big())
    }

    fn sub_ref(&self, o: &Rat) -> Rat {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &o.0) {
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if b == d {
                return small_from_i128(a - c, b);
            }
            return small_from_i128(a * d - c * b, b * d);
        }
        from_big(self.to_big() - o.to_big())
    }

    fn mul_ref(&self, o: &Rat) -> Rat {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &o.0) {
            if *a == 0 || *c == 0 {
                return Rat::zero();
            }
            return small_from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128);
        }
        if self.is_zero() || o.is_zero() {
            return Rat::zero();
        }
        from_big(self.to_big() * o.to_big())
    }

    fn div_ref(&self, o: &Rat) -> Rat {
        assert!(!o.is_zero(), "division by zero");
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &o.0) {
            return small_from_i128(*a as i128 * *d as i128, *b as i128 * *c as i128);
        }
        from_big(self.to_big() / o.to_big())
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::zero()
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl From<i32> for Rat {
    fn from(n: i32) -> Self {
        Rat::from_int(n as i64)
    }
}

impl PartialEq for Rat {
    fn eq(&self, o: &Rat) -> bool {
        match (&self.0, &o.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Rat {}

impl Hash for Rat {
    fn hash<H: Hasher>(&self, h: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => {
                0u8.hash(h);
                n.hash(h);
                d.hash(h);
            }
            Repr::Big(b) => {
                1u8.hash(h);
                b.hash(h);
            }
        }
    }
}

impl Ord for Rat {
    fn cmp(&self, o: &Rat) -> Ordering {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &o.0) {
            return (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128));
        }
        self.to_big().cmp(&o.to_big())
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, o: &Rat) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{}", n),
            Repr::Small(n, d) => write!(f, "{}/{}", n, d),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn all_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

/// Lenient parse: accepts any literal of the grammar `[+-]?digits(/digits)?`
/// with a nonzero denominator and returns the reduced value.
impl FromStr for Rat {
    type Err = RatParseError;

    fn from_str(s: &str) -> Result<Rat, RatParseError> {
        let err = |reason| RatParseError {
            input: s.to_string(),
            reason,
            suggestion: None,
        };
        let (neg, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let (ns, ds) = match body.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (body, None),
        };
        if !all_digits(ns) {
            return Err(err("expected an integer numerator"));
        }
        let mut n: BigInt = ns.parse().map_err(|_| err("bad numerator"))?;
        if neg {
            n = -n;
        }
        let d: BigInt = match ds {
            None => BigInt::one(),
            Some(ds) => {
                if !all_digits(ds) {
                    return Err(err("expected a positive integer denominator"));
                }
                ds.parse().map_err(|_| err("bad denominator"))?
            }
        };
        if d.is_zero() {
            return Err(err("zero denominator"));
        }
        Ok(Rat::from_bigints(n, d))
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        -&self
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        match &self.0 {
            Repr::Small(n, d) => small_from_i128(-(*n as i128), *d as i128),
            Repr::Big(b) => from_big(-b.clone()),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl $tr<&Rat> for &Rat {
            type Output = Rat;
            fn $m(self, o: &Rat) -> Rat {
                self.$imp(o)
            }
        }
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $m(self, o: Rat) -> Rat {
                (&self).$imp(&o)
            }
        }
        impl $tr<&Rat> for Rat {
            type Output = Rat;
            fn $m(self, o: &Rat) -> Rat {
                (&self).$imp(o)
            }
        }
        impl $tr<Rat> for &Rat {
            type Output = Rat;
            fn $m(self, o: Rat) -> Rat {
                self.$imp(&o)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);
binop!(Div, div, div_ref);

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, o: &Rat) {
        *self = self.add_ref(o);
    }
}

impl AddAssign<Rat> for Rat {
    fn add_assign(&mut self, o: Rat) {
        *self = self.add_ref(&o);
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, o: &Rat) {
        *self = self.sub_ref(o);
    }
}

impl SubAssign<Rat> for Rat {
    fn sub_assign(&mut self, o: Rat) {
        *self = self.sub_ref(&o);
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, o: &Rat) {
        *self = self.mul_ref(o);
    }
}

impl core::iter::Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(it: I) -> Rat {
        it.fold(Rat::zero(), |a, b| a + b)
    }
}
