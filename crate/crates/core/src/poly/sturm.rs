use num_rational::BigRational;

use super::{IntPolynomial, PolyError};

/// Signed pseudo-remainder sequence of a square-free polynomial.
///
/// `p0 = p`, `p1 = p'`, `p(k+1) = -prem(p(k-1), p(k))` with the content of
/// each new element divided out. The pseudo-remainder multiplier is always
/// positive, so sign variations are the same as for the classical chain.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPolynomial>,
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Result<Self, PolyError> {
        if p.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut chain = vec![p.clone()];
        let dp = p.derivative();
        if !dp.is_zero() {
            chain.push(dp.strip_content());
            loop {
                let k = chain.len();
                let r = chain[k - 2].pseudo_remainder(&chain[k - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push((-r).strip_content());
            }
        }
        if !chain.last().is_some_and(IntPolynomial::is_constant) {
            return Err(PolyError::NotSquareFree);
        }
        Ok(SturmChain { chain })
    }

    pub fn polys(&self) -> &[IntPolynomial] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    fn count_variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut n = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                n += 1;
            }
            last = s;
        }
        n
    }

    /// Sign variations at `x`; `None` stands for `-infinity` when `lower` is
    /// set and `+infinity` otherwise.
    fn variations(&self, x: Option<&BigRational>, lower: bool) -> usize {
        match x {
            Some(x) => Self::count_variations(self.chain.iter().map(|p| p.sign_at(x))),
            None if lower => {
                Self::count_variations(self.chain.iter().map(IntPolynomial::sign_at_neg_infinity))
            }
            None => Self::count_variations(self.chain.iter().map(IntPolynomial::leading_sign)),
        }
    }

    /// Number of distinct real roots in `(lo, hi]`; `None` endpoints are
    /// infinite. Endpoints may themselves be roots: a root at `lo` is
    /// excluded and a root at `hi` is counted.
    pub fn count(
        &self,
        lo: Option<&BigRational>,
        hi: Option<&BigRational>,
    ) -> Result<usize, PolyError> {
        if let (Some(a), Some(b)) = (lo, hi) {
            if a >= b {
                return Err(PolyError::EmptyInterval);
            }
        }
        let v_lo = self.variations(lo, true);
        let v_hi = self.variations(hi, false);
        Ok(v_lo - v_hi)
    }

    pub fn count_all(&self) -> usize {
        self.variations(None, true) - self.variations(None, false)
    }
}

/// Distinct real roots of the square-free `p` in `(lo, hi]`.
pub fn count_real_roots(
    p: &IntPolynomial,
    lo: Option<&BigRational>,
    hi: Option<&BigRational>,
) -> Result<usize, PolyError> {
    SturmChain::new(p)?.count(lo, hi)
}
