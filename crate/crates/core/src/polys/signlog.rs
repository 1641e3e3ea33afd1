use std::cmp::Ordering;
use std::ops::{Div, Mul};

/// A real number stored as `sign * exp(log_abs)`.
///
/// Products of many factors are formed by adding log-magnitudes so that values
/// far outside the range of `f64` remain representable.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SignLogValue {
    sign: i8,
    log_abs: f64,
}

impl SignLogValue {
    pub const ZERO: SignLogValue = SignLogValue { sign: 0, log_abs: f64::NEG_INFINITY };
    pub const ONE: SignLogValue = SignLogValue { sign: 1, log_abs: 0.0 };

    pub fn new(sign: i8, log_abs: f64) -> Self {
        if sign == 0 || log_abs == f64::NEG_INFINITY {
            Self::ZERO
        } else {
            Self { sign: sign.signum(), log_abs }
        }
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            Self { sign: if x > 0.0 { 1 } else { -1 }, log_abs: x.abs().ln() }
        }
    }

    /// Positive value `2^k`.
    pub fn pow2(k: f64) -> Self {
        Self { sign: 1, log_abs: k * std::f64::consts::LN_2 }
    }

    pub fn sign(self) -> i8 {
        self.sign
    }

    pub fn log_abs(self) -> f64 {
        self.log_abs
    }

    pub fn is_zero(self) -> bool {
        self.sign == 0
    }

    pub fn abs(self) -> Self {
        Self { sign: self.sign.abs(), log_abs: self.log_abs }
    }

    pub fn to_f64(self) -> f64 {
        if self.sign == 0 {
            0.0
        } else {
            f64::from(self.sign) * self.log_abs.exp()
        }
    }

    pub fn powi(self, n: i32) -> Self {
        if n == 0 {
            return Self::ONE;
        }
        if self.sign == 0 {
            return if n > 0 { Self::ZERO } else { Self { sign: 1, log_abs: f64::INFINITY } };
        }
        let sign = if self.sign < 0 && n % 2 != 0 { -1 } else { 1 };
        Self { sign, log_abs: self.log_abs * f64::from(n) }
    }

    pub fn recip(self) -> Self {
        Self { sign: self.sign, log_abs: -self.log_abs }
    }

    /// Product of the factors. The fast path multiplies in `f64`; if the
    /// running value leaves the normal range the product is recomputed
    /// through log-magnitudes.
    pub fn product<I>(factors: I) -> Self
    where
        I: IntoIterator<Item = f64>,
        I::IntoIter: Clone,
    {
        let iter = factors.into_iter();
        let fast: f64 = iter.clone().product();
        if fast.is_normal() {
            return Self::from_f64(fast);
        }
        iter.fold(Self::ONE, |acc, x| acc * Self::from_f64(x))
    }

    /// Compare magnitudes.
    pub fn cmp_abs(self, other: Self) -> Ordering {
        self.log_abs.partial_cmp(&other.log_abs).unwrap_or(Ordering::Equal)
    }
}

impl Mul for SignLogValue {
    type Output = SignLogValue;
    fn mul(self, rhs: Self) -> Self {
        if self.sign == 0 || rhs.sign == 0 {
            return Self::ZERO;
        }
        Self { sign: self.sign * rhs.sign, log_abs: self.log_abs + rhs.log_abs }
    }
}

impl Div for SignLogValue {
    type Output = SignLogValue;
    fn div(self, rhs: Self) -> Self {
        Self { sign: self.sign * rhs.sign, log_abs: self.log_abs - rhs.log_abs }
    }
}

impl From<f64> for SignLogValue {
    fn from(x: f64) -> Self {
        Self::from_f64(x)
    }
}
