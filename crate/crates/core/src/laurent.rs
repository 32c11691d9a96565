//! Exact Laurent polynomials in `q` with arbitrary-precision integer
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sparse map from exponent to nonzero coefficient. The empty map is zero.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        LaurentPoly { coeffs }
    }

    pub fn q_pow(k: i64) -> Self {
        Self::monomial(1, k)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds from `(exponent, coefficient)` pairs, summing duplicates.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, c) in terms {
            p.add_term(k, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0).is_one()
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// True when every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.min_exponent().map_or(true, |k| k >= 0)
    }

    /// True when every exponent is strictly positive (membership in `qZ[q]`).
    pub fn in_q_zq(&self) -> bool {
        self.min_exponent().map_or(true, |k| k > 0)
    }

    pub fn add_term(&mut self, k: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, x)| (e, x * c)).collect() }
    }

    /// `q ↦ q^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// The bar-invariant `γ = c_0 + Σ_{k>0} c_{-k}(q^k + q^{-k})`. The
    /// difference `self - γ` always lies in `qZ[q]`.
    pub fn symmetrize_tail(&self) -> Self {
        let mut gamma = LaurentPoly::zero();
        for (&k, c) in self.coeffs.range(..=0) {
            gamma.add_term(k, c.clone());
            if k != 0 {
                gamma.add_term(-k, c.clone());
            }
        }
        gamma
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor`; fails unless the division leaves no
    /// remainder in `Z[q, q^{-1}]`.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (dmin, dmax) = match (divisor.min_exponent(), divisor.max_exponent()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::DivisionByZero),
        };
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let non_divisible = || Error::NonDivisible { dividend: self.to_string(), divisor: divisor.to_string() };
        let lead = divisor.coeffs[&dmax].clone();
        let mut rem = self.clone();
        let mut quotient = LaurentPoly::zero();
        let floor = self.min_exponent().unwrap() - dmin;
        while let Some(top) = rem.max_exponent() {
            let shift = top - dmax;
            if shift < floor {
                return Err(non_divisible());
            }
            let (qc, r) = rem.coeffs[&top].div_rem(&lead);
            if !r.is_zero() {
                return Err(non_divisible());
            }
            for (&k, c) in &divisor.coeffs {
                rem.add_term(k + shift, -(c * &qc));
            }
            quotient.add_term(shift, qc);
        }
        Ok(quotient)
    }
}

/// `q_i`, as an exponent of `q`: `q` for `i = n`, `q^2` for `0 < i < n`,
/// `q^4` for `i = 0`.
pub fn q_i_exponent(i: usize, n: usize) -> i64 {
    if i == n {
        1
    } else if i == 0 {
        4
    } else {
        2
    }
}

/// The quantum integer `[k]_i = (q_i^k - q_i^{-k}) / (q_i - q_i^{-1})`.
pub fn q_integer(k: usize, i: usize, n: usize) -> LaurentPoly {
    let d = q_i_exponent(i, n);
    let k = k as i64;
    LaurentPoly::from_terms((0..k).map(|j| (d * (k - 1 - 2 * j), 1)))
}

/// `[k]_i! = [k]_i [k-1]_i ... [1]_i`.
pub fn q_factorial(k: usize, i: usize, n: usize) -> LaurentPoly {
    (1..=k).fold(LaurentPoly::one(), |acc, j| &acc * &q_integer(j, i, n))
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&k, c) in &rhs.coeffs {
            self.add_term(k, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&k, c) in &rhs.coeffs {
            self.add_term(k, -c.clone());
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.coeffs {
            for (&b, y) in &rhs.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Ascending exponents, e.g. `q-q^5`, `1+2q^2`, `q^-2+3+q^2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (&k, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                write!(f, "-")?;
            } else if idx > 0 {
                write!(f, "+")?;
            }
            if k == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            match k {
                1 => write!(f, "q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses sums of terms `[c][q[^e]]`, accepting `q^{-2}`, `q^(-2)`, spaces,
/// `*`, and a unicode minus sign.
impl FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '*' && *c != '{' && *c != '}' && *c != '(' && *c != ')')
            .map(|c| if c == '−' { '-' } else { c })
            .collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bytes = cleaned.as_bytes();
        let mut terms: Vec<&str> = Vec::new();
        let mut start = 0;
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&cleaned[start..i]);
                start = i;
            }
        }
        terms.push(&cleaned[start..]);
        let mut out = LaurentPoly::zero();
        for term in terms {
            let (sign, body) = match term.as_bytes().first() {
                Some(b'-') => (-1, &term[1..]),
                Some(b'+') => (1, &term[1..]),
                _ => (1, term),
            };
            let bad = || Error::Parse(format!("bad term {term:?} in {s:?}"));
            let (coef, exp) = match body.find('q') {
                None => (body.parse::<BigInt>().map_err(|_| bad())?, 0),
                Some(pos) => {
                    let coef = if pos == 0 { BigInt::one() } else { body[..pos].parse::<BigInt>().map_err(|_| bad())? };
                    let rest = &body[pos + 1..];
                    let exp = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^').ok_or_else(bad)?.parse::<i64>().map_err(|_| bad())?
                    };
                    (coef, exp)
                }
            };
            out.add_term(exp, coef * sign);
        }
        Ok(out)
    }
}

/// `{"exponent": coefficient}` with exponents as signed decimal strings.
/// Coefficients that fit in 64 bits are numbers, larger ones strings.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.coeffs.len()))?;
        for (k, c) in &self.coeffs {
            match i64::try_from(c) {
                Ok(v) => map.serialize_entry(&k.to_string(), &v)?,
                Err(_) => map.serialize_entry(&k.to_string(), &c.to_string())?,
            }
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct PolyVisitor;
        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = LaurentPoly;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a map from exponent strings to integer coefficients")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> std::result::Result<LaurentPoly, A::Error> {
                let mut out = LaurentPoly::zero();
                while let Some((k, v)) = access.next_entry::<String, serde_json::Value>()? {
                    let exp: i64 = k.parse().map_err(de::Error::custom)?;
                    let coef: BigInt = match v {
                        serde_json::Value::Number(n) => n.to_string().parse().map_err(de::Error::custom)?,
                        serde_json::Value::String(s) => s.parse().map_err(de::Error::custom)?,
                        other => return Err(de::Error::custom(format!("bad coefficient {other}"))),
                    };
                    out.add_term(exp, coef);
                }
                Ok(out)
            }
        }
        deserializer.deserialize_map(PolyVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(lp("q-q^5").to_string(), "q-q^5");
        assert_eq!(lp("1+2q^2").to_string(), "1+2q^2");
        assert_eq!(lp("q^{-2} + 3 + q^2").to_string(), "q^-2+3+q^2");
        assert_eq!(lp("0"), LaurentPoly::zero());
        assert_eq!(lp("2 q^2"), LaurentPoly::monomial(2, 2));
        assert_eq!(lp("q^4−q^8"), LaurentPoly::from_terms([(4, 1), (8, -1)]));
        assert!("q^".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn ring_examples() {
        let a = lp("q^2+1");
        let step = &a + &(&a * &lp("-q^2"));
        assert_eq!(step, lp("1-q^4"));
        assert_eq!(&a + &LaurentPoly::zero(), a);
        let s = lp("q+q^-1");
        assert_eq!(&s * &s, lp("q^2+2+q^-2"));
    }

    #[test]
    fn bar_examples() {
        assert_eq!(lp("q^2-q^6").bar(), lp("q^-2-q^-6"));
        let p = lp("3q^-1+q^7-2");
        assert_eq!(p.bar().bar(), p);
        assert!(lp("q^3+q^-3").is_bar_invariant());
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(q_integer(2, 1, 1), lp("q+q^-1"));
        for i in 0..3 {
            assert!(q_integer(1, i, 2).is_one());
        }
        assert_eq!(q_integer(2, 0, 1), lp("q^4+q^-4"));
        assert_eq!(q_integer(3, 1, 2), lp("q^4+1+q^-4"));
        assert_eq!(q_factorial(3, 1, 1), lp("q^3+2q+2q^-1+q^-3"));
        assert!(q_factorial(0, 0, 1).is_one());
    }

    #[test]
    fn division() {
        let x = lp("3q^-2+q^5-7");
        let d = q_integer(2, 2, 2);
        assert_eq!((&d * &x).exact_div(&d).unwrap(), x);
        assert_eq!(lp("1-q^4").exact_div(&lp("1+q^2")).unwrap(), lp("1-q^2"));
        assert!(matches!(lp("q").exact_div(&lp("1+q")), Err(Error::NonDivisible { .. })));
        assert!(matches!(lp("q").exact_div(&LaurentPoly::zero()), Err(Error::DivisionByZero)));
        assert!(lp("3").exact_div(&lp("2")).is_err());
    }

    #[test]
    fn symmetrize() {
        assert_eq!(lp("q^-2+3+q^5").symmetrize_tail(), lp("3+q^2+q^-2"));
        assert!(lp("q+4q^3").symmetrize_tail().is_zero());
    }

    #[test]
    fn evaluation() {
        assert_eq!(lp("q-q^5").eval_at_one(), BigInt::from(0));
        assert_eq!(lp("1+2q^2").eval_at_one(), BigInt::from(3));
        assert_eq!(lp("q^2+q^4").eval_at_one(), BigInt::from(2));
    }

    #[test]
    fn json_shape() {
        let p = lp("q^-1-2q^3");
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(v, serde_json::json!({"-1": 1, "3": -2}));
        let back: LaurentPoly = serde_json::from_value(v).unwrap();
        assert_eq!(back, p);
    }
}
