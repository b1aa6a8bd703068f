use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::AlgebraElement;
use crate::scalar::{factorial, int, Rational};

use super::bernoulli::generating_coeffs;

/// A truncated formal power series `φ(T) = Σ c_k T^k`, applied to elements
/// by specializing `T = ad_e`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OperatorSeries {
    coeffs: BTreeMap<usize, Rational>,
}

impl OperatorSeries {
    pub fn from_coeffs<I: IntoIterator<Item = Rational>>(coeffs: I) -> Self {
        let coeffs = coeffs.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        Self { coeffs }
    }

    pub fn monomial(k: usize, c: Rational) -> Self {
        let mut s = Self::default();
        if !c.is_zero() {
            s.coeffs.insert(k, c);
        }
        s
    }

    /// `T`.
    pub fn variable() -> Self {
        Self::monomial(1, Rational::one())
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    fn dense(&self, len: usize) -> Vec<Rational> {
        (0..len).map(|k| self.coeff(k)).collect()
    }

    /// Keeps the coefficients of `T^0..T^{len-1}`.
    pub fn truncated(&self, len: usize) -> Self {
        Self { coeffs: self.coeffs.range(..len).map(|(k, c)| (*k, c.clone())).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            let slot = out.coeffs.entry(*k).or_insert_with(Rational::zero);
            *slot += c;
            if slot.is_zero() {
                out.coeffs.remove(k);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs_sparse(self.coeffs.iter().map(|(k, x)| (*k, x * c)))
    }

    fn from_coeffs_sparse<I: IntoIterator<Item = (usize, Rational)>>(it: I) -> Self {
        Self { coeffs: it.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn mul(&self, other: &Self, len: usize) -> Self {
        let mut out: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, a) in &self.coeffs {
            for (j, b) in other.coeffs.range(..len.saturating_sub(*i)) {
                *out.entry(i + j).or_insert_with(Rational::zero) += a * b;
            }
        }
        Self::from_coeffs_sparse(out)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self, len: usize) -> Result<Self> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return Err(Error::InvalidArgument("series has no constant term to invert".into()));
        }
        let a = self.dense(len);
        let mut out: Vec<Rational> = Vec::with_capacity(len);
        for n in 0..len {
            let mut acc = if n == 0 { Rational::one() } else { Rational::zero() };
            for k in 1..=n {
                acc -= &a[k] * &out[n - k];
            }
            out.push(acc / &c0);
        }
        Ok(Self::from_coeffs(out))
    }

    /// Divides by `T`; requires a zero constant term.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeff(0).is_zero() {
            return Err(Error::InvalidArgument("series is not divisible by T".into()));
        }
        Ok(Self::from_coeffs_sparse(self.coeffs.iter().map(|(k, c)| (k - 1, c.clone()))))
    }

    /// `self / other`, cancelling common powers of `T` first.
    pub fn div(&self, other: &Self, len: usize) -> Result<Self> {
        let (mut num, mut den) = (self.clone(), other.clone());
        while !den.coeffs.is_empty() && den.coeff(0).is_zero() {
            num = num.shift_down()?;
            den = den.shift_down()?;
        }
        Ok(num.mul(&den.inverse(len)?, len))
    }

    /// `exp(c T)`.
    pub fn exp_scaled(c: &Rational, len: usize) -> Self {
        let mut power = Rational::one();
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(&power / factorial(k));
            power *= c;
        }
        Self::from_coeffs(out)
    }

    /// `T/(e^T - 1)`, whose coefficients are `B_n/n!`.
    pub fn bernoulli_generating(len: usize) -> Self {
        Self::from_coeffs(generating_coeffs(len))
    }

    /// `T/(1 - e^T)`.
    pub fn x_over_one_minus_exp(len: usize) -> Self {
        let one_minus_exp =
            Self::monomial(0, Rational::one()).add(&Self::exp_scaled(&int(1), len + 1).scale(&int(-1)));
        Self::variable().div(&one_minus_exp, len).expect("1 - e^T has a simple zero")
    }

    /// `T/(1 - e^{-T})`.
    pub fn x_over_one_minus_exp_neg(len: usize) -> Self {
        let one_minus_exp =
            Self::monomial(0, Rational::one()).add(&Self::exp_scaled(&int(-1), len + 1).scale(&int(-1)));
        Self::variable().div(&one_minus_exp, len).expect("1 - e^-T has a simple zero")
    }

    /// `(1 - e^{-tT})/T`.
    pub fn one_minus_exp_neg_over_x(t: &Rational, len: usize) -> Self {
        Self::monomial(0, Rational::one())
            .add(&Self::exp_scaled(&-t.clone(), len + 1).scale(&int(-1)))
            .shift_down()
            .expect("constant terms cancel")
            .truncated(len)
    }

    /// `Σ c_k (ad_e)^k target`, truncated at the context's order.
    pub fn apply(&self, e: &AlgebraElement, target: &AlgebraElement) -> Result<AlgebraElement> {
        apply_operator_series(self, e, target)
    }
}

/// `φ(ad_e)(target)`.
pub fn apply_operator_series(
    phi: &OperatorSeries,
    e: &AlgebraElement,
    target: &AlgebraElement,
) -> Result<AlgebraElement> {
    if !e.same_context(target) {
        return Err(Error::ContextMismatch);
    }
    e.expect_degree(0, "operator argument")?;
    target.homogeneous_degree()?;
    let mut out = AlgebraElement::zero(target.context());
    let Some((&top, _)) = phi.coeffs.last_key_value() else {
        return Ok(out);
    };
    let mut power = target.clone();
    for k in 0..=top {
        if power.is_zero() {
            break;
        }
        let c = phi.coeff(k);
        if !c.is_zero() {
            out.add_scaled(&c, &power);
        }
        if k < top {
            power = e.commutator(&power);
        }
    }
    Ok(out)
}

/// A noncommutative polynomial in operators `ad_y`, composed right to left:
/// the term `[ad_y1, ad_y2]` acts as `ad_y1(ad_y2(x))`.
#[derive(Clone, Debug, Default)]
pub struct AdPolynomial {
    terms: Vec<(Rational, Vec<AlgebraElement>)>,
}

impl AdPolynomial {
    pub fn identity() -> Self {
        Self { terms: vec![(Rational::one(), Vec::new())] }
    }

    pub fn ad(y: &AlgebraElement) -> Self {
        Self { terms: vec![(Rational::one(), vec![y.clone()])] }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { terms: self.terms.iter().map(|(k, w)| (k * c, w.clone())).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (c1, w1) in &self.terms {
            for (c2, w2) in &other.terms {
                let mut w = w1.clone();
                w.extend(w2.iter().cloned());
                terms.push((c1 * c2, w));
            }
        }
        Self { terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    /// Ungraded operator commutator `PQ - QP`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn apply(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero(x.context());
        for (c, ops) in &self.terms {
            let mut y = x.clone();
            for op in ops.iter().rev() {
                y = op.bracket(&y)?;
            }
            out.add_scaled(c, &y);
        }
        Ok(out)
    }
}
