use num_traits::{One, Zero};

use crate::scalar::{factorial, Rational};

use super::OperatorSeries;

/// `B_0..=B_max` read off `x/(e^x - 1) = Σ B_n x^n / n!`, so `B_1 = -1/2`.
///
/// Tables are plain values; build one per computation instead of sharing a
/// global cache.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    pub fn new(max: usize) -> Self {
        let series = OperatorSeries::bernoulli_generating(max + 1);
        let values = (0..=max).map(|n| series.coeff(n) * factorial(n)).collect();
        Self { values }
    }

    pub fn get(&self, n: usize) -> Option<&Rational> {
        self.values.get(n)
    }

    pub fn max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

pub fn bernoulli(n: usize) -> Rational {
    BernoulliTable::new(n).values[n].clone()
}

/// `x/(e^x - 1)` truncated to `len` coefficients, computed as the
/// reciprocal of `(e^x - 1)/x = Σ x^k/(k+1)!`.
pub(super) fn generating_coeffs(len: usize) -> Vec<Rational> {
    let denom: Vec<Rational> = (0..len).map(|k| Rational::one() / factorial(k + 1)).collect();
    let mut out: Vec<Rational> = Vec::with_capacity(len);
    for n in 0..len {
        let mut acc = if n == 0 { Rational::one() } else { Rational::zero() };
        for k in 1..=n {
            acc -= &denom[k] * &out[n - k];
        }
        out.push(acc);
    }
    out
}
