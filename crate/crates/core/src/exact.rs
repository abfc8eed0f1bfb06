//! Exact non-negative rationals and binomial coefficients.

use core::fmt;
use core::ops::{Add, AddAssign, Mul};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// A non-negative rational kept in lowest terms with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ratio {
    numer: BigUint,
    denom: BigUint,
}

impl Ratio {
    /// # Panics
    /// If `denom` is zero.
    pub fn new(numer: BigUint, denom: BigUint) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        let g = numer.gcd(&denom);
        if g.is_one() {
            return Ratio { numer, denom };
        }
        Ratio {
            numer: numer / &g,
            denom: denom / &g,
        }
    }

    pub fn zero() -> Self {
        Ratio {
            numer: BigUint::zero(),
            denom: BigUint::one(),
        }
    }

    pub fn one() -> Self {
        Ratio {
            numer: BigUint::one(),
            denom: BigUint::one(),
        }
    }

    pub fn from_integer(v: u64) -> Self {
        Ratio {
            numer: BigUint::from(v),
            denom: BigUint::one(),
        }
    }

    pub fn numer(&self) -> &BigUint {
        &self.numer
    }

    pub fn denom(&self) -> &BigUint {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    /// Nearest `f64`, also for operands far beyond `f64` range.
    pub fn to_f64(&self) -> f64 {
        if self.numer.is_zero() {
            return 0.0;
        }
        // Shift both operands down to at most 64 significant bits.
        let nb = self.numer.bits();
        let db = self.denom.bits();
        let ns = nb.saturating_sub(64);
        let ds = db.saturating_sub(64);
        let n = (&self.numer >> ns).to_f64().unwrap_or(f64::INFINITY);
        let d = (&self.denom >> ds).to_f64().unwrap_or(f64::INFINITY);
        let exp = ns as i64 - ds as i64;
        n / d * libm::pow(2.0, exp as f64)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

impl Add<&Ratio> for &Ratio {
    type Output = Ratio;
    fn add(self, rhs: &Ratio) -> Ratio {
        Ratio::new(
            &self.numer * &rhs.denom + &rhs.numer * &self.denom,
            &self.denom * &rhs.denom,
        )
    }
}

impl AddAssign<&Ratio> for Ratio {
    fn add_assign(&mut self, rhs: &Ratio) {
        *self = &*self + rhs;
    }
}

impl Mul<u64> for &Ratio {
    type Output = Ratio;
    fn mul(self, rhs: u64) -> Ratio {
        Ratio::new(&self.numer * BigUint::from(rhs), self.denom.clone())
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (&self.numer * &other.denom).cmp(&(&other.numer * &self.denom))
    }
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}
