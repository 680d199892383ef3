//! Exact real-root isolation and ordering of real algebraic numbers.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{IntPolynomial, PolyError, SturmChain};

/// Integer upper bound on the absolute value of every root:
/// `ceil(1 + max |c_k| / |c_deg|)`.
pub(crate) fn cauchy_bound(p: &IntPolynomial) -> BigInt {
    let d = p.degree().expect("bound of the zero polynomial");
    let lc = p.coeffs()[d].abs();
    let max = p.coeffs()[..d]
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_default();
    let (quot, rem) = num_integer::Integer::div_rem(&max, &lc);
    let ceil = if rem.is_zero() { quot } else { quot + 1 };
    ceil + 1
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

/// A real root of a square-free integer polynomial, pinned down by a
/// rational isolating interval `(lo, hi]` that holds no other root of
/// `defining`. `multiplicity` is the root's multiplicity in the polynomial
/// it was isolated from.
#[derive(Clone, Debug)]
pub struct AlgebraicRoot {
    defining: IntPolynomial,
    lo: BigRational,
    hi: BigRational,
    multiplicity: usize,
}

impl AlgebraicRoot {
    /// The caller guarantees `defining` is square-free with exactly one root in `(lo, hi]`.
    pub(crate) fn new_unchecked(
        defining: IntPolynomial,
        lo: BigRational,
        hi: BigRational,
        multiplicity: usize,
    ) -> Self {
        debug_assert!(lo < hi);
        AlgebraicRoot {
            defining,
            lo,
            hi,
            multiplicity,
        }
    }

    /// The rational number `v` as a simple root of `den*x - num`.
    pub fn rational(v: BigRational, multiplicity: usize) -> Self {
        let defining = IntPolynomial::new(vec![-v.numer().clone(), v.denom().clone()]);
        let lo = &v - BigRational::one();
        AlgebraicRoot::new_unchecked(defining, lo, v, multiplicity)
    }

    pub fn defining(&self) -> &IntPolynomial {
        &self.defining
    }

    pub fn interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// `true` when `v` lies in the isolating interval `(lo, hi]`.
    pub fn interval_contains(&self, v: &BigRational) -> bool {
        &self.lo < v && v <= &self.hi
    }

    /// Exact value when the defining polynomial is linear.
    pub fn exact_value(&self) -> Option<BigRational> {
        if self.defining.degree() != Some(1) {
            return None;
        }
        let c = self.defining.coeffs();
        Some(BigRational::new(-c[0].clone(), c[1].clone()))
    }

    /// `true` iff the root equals the rational `v`.
    pub fn equals_rational(&self, v: &BigRational) -> bool {
        self.interval_contains(v) && self.defining.sign_at(v) == 0
    }

    /// Halves the isolating interval, keeping the half that holds the root.
    pub fn bisect(&mut self) {
        let mid = (&self.lo + &self.hi) * half();
        let s_mid = self.defining.sign_at(&mid);
        let s_hi = self.defining.sign_at(&self.hi);
        if s_mid == 0 {
            self.hi = mid;
        } else if s_hi == 0 || s_mid != s_hi {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    pub fn refine_to_width(&mut self, width: &BigRational) {
        while &self.width() > width {
            self.bisect();
        }
    }

    fn disjoint_from(&self, other: &AlgebraicRoot) -> bool {
        self.hi <= other.lo || other.hi <= self.lo
    }

    /// Decimal approximation for display. Never used in any decision.
    pub fn approx(&self) -> f64 {
        if let Some(v) = self.exact_value() {
            return v.to_f64().unwrap_or(f64::NAN);
        }
        let mut r = self.clone();
        let scale = r.lo.abs().max(r.hi.abs()).max(BigRational::one());
        let target = scale * BigRational::new(1.into(), BigInt::one() << 60);
        let mut steps = 0;
        while r.width() > target && steps < 400 {
            r.bisect();
            steps += 1;
        }
        ((&r.lo + &r.hi) * half()).to_f64().unwrap_or(f64::NAN)
    }
}

/// Renders `x` with twelve significant digits.
pub(crate) fn format_approx(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-6..15).contains(&mag) {
        return format!("{x:.11e}");
    }
    let decimals = (11 - mag).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn rational_text(v: &BigRational) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

impl Serialize for AlgebraicRoot {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("AlgebraicRoot", 4)?;
        st.serialize_field("defining", &self.defining)?;
        st.serialize_field(
            "interval",
            &[rational_text(&self.lo), rational_text(&self.hi)],
        )?;
        st.serialize_field("multiplicity", &self.multiplicity)?;
        st.serialize_field("approx", &format_approx(self.approx()))?;
        st.end()
    }
}

/// A real root or the sentinel `-infinity` used when a polynomial has no
/// second largest real root.
#[derive(Clone, Debug)]
pub enum ExtendedRoot {
    NegativeInfinity,
    Finite(AlgebraicRoot),
}

impl ExtendedRoot {
    pub fn rational(v: BigRational) -> Self {
        ExtendedRoot::Finite(AlgebraicRoot::rational(v, 1))
    }

    pub fn is_neg_infinity(&self) -> bool {
        matches!(self, ExtendedRoot::NegativeInfinity)
    }

    pub fn as_finite(&self) -> Option<&AlgebraicRoot> {
        match self {
            ExtendedRoot::Finite(r) => Some(r),
            ExtendedRoot::NegativeInfinity => None,
        }
    }

    /// Exact rational value if the root is rational with a linear defining polynomial.
    pub fn exact_value(&self) -> Option<BigRational> {
        self.as_finite().and_then(AlgebraicRoot::exact_value)
    }

    /// `true` iff this is the finite root `v`.
    pub fn equals_rational(&self, v: &BigRational) -> bool {
        self.as_finite().is_some_and(|r| r.equals_rational(v))
    }
}

impl Serialize for ExtendedRoot {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtendedRoot::NegativeInfinity => s.serialize_str("-infinity"),
            ExtendedRoot::Finite(r) => r.serialize(s),
        }
    }
}

/// Full real-root analysis of one polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct RootReport {
    pub poly: IntPolynomial,
    pub degree: usize,
    pub real_count_with_multiplicity: usize,
    pub is_real_rooted: bool,
    /// Distinct real roots, largest first.
    pub roots: Vec<AlgebraicRoot>,
}

impl RootReport {
    pub fn largest(&self) -> Option<&AlgebraicRoot> {
        self.roots.first()
    }

    /// Largest and second largest root with multiplicity repetition; the
    /// second is `-infinity` when only one root is counted.
    pub fn top_two(&self) -> Result<(ExtendedRoot, ExtendedRoot), PolyError> {
        let first = self.roots.first().ok_or(PolyError::NoRealRoot)?;
        let second = if first.multiplicity >= 2 {
            ExtendedRoot::Finite(first.clone())
        } else if let Some(r) = self.roots.get(1) {
            ExtendedRoot::Finite(r.clone())
        } else {
            ExtendedRoot::NegativeInfinity
        };
        Ok((ExtendedRoot::Finite(first.clone()), second))
    }

    /// Multiplicity of the rational `v` as a root (0 if it is not one).
    pub fn multiplicity_of(&self, v: &BigRational) -> usize {
        self.roots
            .iter()
            .find(|r| r.equals_rational(v))
            .map_or(0, |r| r.multiplicity)
    }
}

fn isolate_square_free(
    f: &IntPolynomial,
    multiplicity: usize,
) -> Result<Vec<AlgebraicRoot>, PolyError> {
    if f.degree() == Some(1) {
        let c = f.coeffs();
        let v = BigRational::new(-c[0].clone(), c[1].clone());
        return Ok(vec![AlgebraicRoot::rational(v, multiplicity)]);
    }
    let chain = SturmChain::new(f)?;
    let bound = BigRational::from_integer(cauchy_bound(f));
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound, chain.count_all())];
    while let Some((lo, hi, count)) = stack.pop() {
        match count {
            0 => {}
            1 => out.push(AlgebraicRoot::new_unchecked(
                f.clone(),
                lo,
                hi,
                multiplicity,
            )),
            _ => {
                let mid = (&lo + &hi) * half();
                let left = chain.count(Some(&lo), Some(&mid))?;
                stack.push((lo, mid.clone(), left));
                stack.push((mid, hi, count - left));
            }
        }
    }
    Ok(out)
}

/// Isolates every real root of `p`, counted with multiplicity.
///
/// Works factor by factor on the square-free decomposition, then refines
/// intervals coming from different factors until they are pairwise disjoint
/// (distinct factors are coprime, so this terminates).
pub fn isolate_real_roots(p: &IntPolynomial) -> Result<RootReport, PolyError> {
    let degree = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    let mut roots = Vec::new();
    for (factor, mult) in p.square_free_decomposition()? {
        roots.extend(isolate_square_free(&factor, mult)?);
    }
    loop {
        let mut clash = None;
        'scan: for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                if !roots[i].disjoint_from(&roots[j]) {
                    clash = Some((i, j));
                    break 'scan;
                }
            }
        }
        match clash {
            Some((i, j)) => {
                roots[i].bisect();
                roots[j].bisect();
            }
            None => break,
        }
    }
    roots.sort_by(|a, b| b.hi.cmp(&a.hi));
    let real_count_with_multiplicity = roots.iter().map(|r| r.multiplicity).sum();
    Ok(RootReport {
        poly: p.clone(),
        degree,
        real_count_with_multiplicity,
        is_real_rooted: real_count_with_multiplicity == degree,
        roots,
    })
}

/// Largest and second largest real roots of `p`, counting multiplicity.
pub fn top_two_roots(p: &IntPolynomial) -> Result<(ExtendedRoot, ExtendedRoot), PolyError> {
    isolate_real_roots(p)?.top_two()
}

/// Exact comparison of two extended roots.
///
/// Intervals are bisected until they separate. Once both are narrower than
/// `2^-64` times their Cauchy bounds, equality is decided by looking for a
/// root of `gcd(defining_a, defining_b)` in the overlap.
pub fn compare_roots(a: &ExtendedRoot, b: &ExtendedRoot) -> Ordering {
    match (a, b) {
        (ExtendedRoot::NegativeInfinity, ExtendedRoot::NegativeInfinity) => Ordering::Equal,
        (ExtendedRoot::NegativeInfinity, _) => Ordering::Less,
        (_, ExtendedRoot::NegativeInfinity) => Ordering::Greater,
        (ExtendedRoot::Finite(a), ExtendedRoot::Finite(b)) => compare_algebraic(a, b),
    }
}

fn compare_algebraic(a: &AlgebraicRoot, b: &AlgebraicRoot) -> Ordering {
    match (a.exact_value(), b.exact_value()) {
        (Some(x), Some(y)) => return x.cmp(&y),
        (Some(x), None) if b.equals_rational(&x) => return Ordering::Equal,
        (None, Some(y)) if a.equals_rational(&y) => return Ordering::Equal,
        _ => {}
    }
    let mut a = a.clone();
    let mut b = b.clone();
    let floor =
        |r: &AlgebraicRoot| BigRational::new(cauchy_bound(&r.defining), BigInt::one() << 64);
    let (floor_a, floor_b) = (floor(&a), floor(&b));
    let mut gcd_checked = false;
    loop {
        if a.hi <= b.lo {
            return Ordering::Less;
        }
        if b.hi <= a.lo {
            return Ordering::Greater;
        }
        if !gcd_checked && a.width() <= floor_a && b.width() <= floor_b {
            gcd_checked = true;
            let g = a.defining.gcd(&b.defining);
            if !g.is_constant() {
                let lo = (&a.lo).max(&b.lo).clone();
                let hi = (&a.hi).min(&b.hi).clone();
                let chain = SturmChain::new(&g).expect("gcd of square-free polynomials");
                if chain.count(Some(&lo), Some(&hi)).unwrap_or(0) > 0 {
                    return Ordering::Equal;
                }
            }
        }
        if a.width() >= b.width() {
            a.bisect();
        } else {
            b.bisect();
        }
    }
}
