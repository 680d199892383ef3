//! Dense univariate polynomials over the integers and exact real-root analysis.
//!
//! [`IntPolynomial`] stores coefficients in ascending degree order and keeps
//! the leading coefficient nonzero; the zero polynomial has no coefficients.
//! Everything here is exact: evaluation happens over [`BigRational`] and the
//! root engine in [`roots`] only ever compares rationals.

mod roots;
mod sturm;

pub use roots::{
    compare_roots, isolate_real_roots, top_two_roots, AlgebraicRoot, ExtendedRoot, RootReport,
};
pub use sturm::{count_real_roots, SturmChain};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Errors raised by the polynomial and root-isolation routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not square-free")]
    NotSquareFree,
    #[error("polynomial has no real root")]
    NoRealRoot,
    #[error("empty interval: lower endpoint must be below upper endpoint")]
    EmptyInterval,
    #[error("cannot parse polynomial `{0}`: expected a coefficient list such as [1,6,11,7,1]")]
    Parse(String),
}

/// Sign of a value: -1, 0 or 1.
pub(crate) fn sign_of(v: &BigInt) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial from ascending coefficients, dropping trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The linear polynomial `a + b x`.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_i64s(&[a, b])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Horner evaluation at an exact rational point.
    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the value at `x`, computed without forming a rational:
    /// `q^d p(x)` for `x = num/q` has the same sign because `q > 0`.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        let Some(d) = self.degree() else { return 0 };
        let num = x.numer();
        let den = x.denom();
        if den.is_one() {
            let mut acc = BigInt::zero();
            for c in self.coeffs.iter().rev() {
                acc = acc * num + c;
            }
            return sign_of(&acc);
        }
        let mut acc = self.coeffs[d].clone();
        let mut qpow = BigInt::one();
        for c in self.coeffs[..d].iter().rev() {
            qpow *= den;
            acc = acc * num + c * &qpow;
        }
        sign_of(&acc)
    }

    /// Sign of the leading coefficient; 0 for the zero polynomial.
    pub fn leading_sign(&self) -> i8 {
        self.leading_coefficient().map_or(0, sign_of)
    }

    /// Sign of `p(x)` as `x -> -infinity`.
    pub fn sign_at_neg_infinity(&self) -> i8 {
        match self.degree() {
            None => 0,
            Some(d) if d % 2 == 0 => self.leading_sign(),
            Some(_) => -self.leading_sign(),
        }
    }

    /// Non-negative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and normalizes to a positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading_sign() < 0 {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Divides out the content while preserving the sign of every coefficient.
    pub(crate) fn strip_content(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Pseudo-remainder scaled by a *positive* factor: the remainder of
    /// `|lc(d)|^(deg a - deg d + 1) * self` modulo `d`. Keeping the factor
    /// positive preserves the sign convention Sturm sequences rely on.
    pub fn pseudo_remainder(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo_remainder by the zero polynomial");
        let Some(da) = self.degree() else {
            return Self::zero();
        };
        if da < dd {
            return self.clone();
        }
        let lc = d.coeffs[dd].clone();
        let lc_abs = lc.abs();
        let mut rem = self.coeffs.clone();
        let mut steps = 0u32;
        let mut top = da;
        loop {
            if top < dd || rem.iter().all(Zero::is_zero) {
                break;
            }
            let lead = rem[top].clone();
            if !lead.is_zero() {
                // rem <- |lc| * rem - sign(lc) * lead * x^(top-dd) * d
                for c in rem.iter_mut() {
                    *c *= &lc_abs;
                }
                let factor = if lc.is_negative() { -lead } else { lead };
                for (i, dc) in d.coeffs.iter().enumerate() {
                    rem[top - dd + i] -= &factor * dc;
                }
                steps += 1;
            }
            if top == 0 {
                break;
            }
            top -= 1;
            rem.truncate(top + 1);
        }
        let total = (da - dd + 1) as u32;
        let missing = total - steps;
        if missing > 0 {
            let k = num_traits::pow(lc_abs, missing as usize);
            for c in rem.iter_mut() {
                *c *= &k;
            }
        }
        Self::new(rem)
    }

    /// Exact quotient `self / d` when it exists in `Z[x]`.
    pub fn checked_div(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let Some(da) = self.degree() else {
            return Some(Self::zero());
        };
        if da < dd {
            return None;
        }
        let lc = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); da - dd + 1];
        for i in (0..=da - dd).rev() {
            let lead = &rem[i + dd];
            if lead.is_zero() {
                continue;
            }
            let (q, r) = lead.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &q * dc;
            }
            quot[i] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::new(quot))
        } else {
            None
        }
    }

    /// Greatest common divisor up to a constant, returned primitive with a
    /// positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_remainder(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    pub fn is_square_free(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    /// Yun's algorithm over the rationals with content stripping.
    ///
    /// Returns pairwise coprime, square-free, primitive factors with positive
    /// leading coefficient, each paired with its multiplicity, in increasing
    /// multiplicity order. The product of `factor^multiplicity` equals the
    /// input up to a nonzero rational constant. Constants yield an empty list.
    pub fn square_free_decomposition(&self) -> Result<Vec<(IntPolynomial, usize)>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let f = self.primitive_part();
        if f.is_constant() {
            return Ok(Vec::new());
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.checked_div(&a0).expect("gcd divides f");
        let c = df.checked_div(&a0).expect("gcd divides f'");
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            if !a.is_constant() {
                out.push((a.primitive_part(), i));
            }
            let next_b = b.checked_div(&a).expect("gcd divides b");
            let next_c = d.checked_div(&a).expect("gcd divides d");
            d = &next_c - &next_b.derivative();
            b = next_b;
            i += 1;
        }
        Ok(out)
    }

    /// Multiplicity of `root` as a root, `root = num/den`, by repeated exact
    /// division by `den*x - num`.
    pub fn rational_root_multiplicity(&self, root: &BigRational) -> usize {
        if self.is_zero() {
            return 0;
        }
        let factor = Self::new(vec![-root.numer().clone(), root.denom().clone()]);
        let mut p = self.clone();
        let mut k = 0;
        while let Some(q) = p.checked_div(&factor) {
            p = q;
            k += 1;
        }
        k
    }

    /// Approximate coefficients for display purposes only.
    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

impl fmt::Display for IntPolynomial {
    /// Ascending coefficient list, e.g. `[1,6,11,7,1]`; the zero polynomial is `[]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for IntPolynomial {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PolyError::Parse(s.trim().to_string());
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(err)?;
        if inner.trim().is_empty() {
            return Ok(Self::zero());
        }
        inner
            .split(',')
            .map(|tok| tok.trim().parse::<BigInt>().map_err(|_| err()))
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

/// Coefficients serialize as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i64() {
                Some(x) => seq.serialize_element(&x)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'a> Add<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

impl<'a> Sub<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        &self - &rhs
    }
}

impl<'a> Mul<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        -&self
    }
}
