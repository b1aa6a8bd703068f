use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::lie::{AlgebraContext, AlgebraElement};
use crate::scalar::{int, Rational};

/// `1 + z` in the truncated tensor algebra; only `z` is stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnePlus(pub AlgebraElement);

impl OnePlus {
    pub fn one(ctx: &Arc<AlgebraContext>) -> Self {
        OnePlus(AlgebraElement::zero(ctx))
    }

    /// `(1 + z1)(1 + z2) = 1 + z1 + z2 + z1 z2`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut z = &self.0 + &other.0;
        z.add_scaled(&Rational::one(), &self.0.product(&other.0));
        OnePlus(z)
    }

    pub fn tail(&self) -> &AlgebraElement {
        &self.0
    }
}

/// `exp(x) = Σ x^k/k!`, truncated. `x` must be homogeneous of even degree.
pub fn exp_assoc(x: &AlgebraElement) -> Result<OnePlus> {
    if let Some(d) = x.homogeneous_degree()? {
        if d.rem_euclid(2) != 0 {
            return Err(Error::Grading(format!("exponential of odd element (degree {d})")));
        }
    }
    let mut z = AlgebraElement::zero(x.context());
    let mut power = x.clone();
    let mut k = 1i64;
    while !power.is_zero() {
        z.add_scaled(&Rational::one(), &power);
        k += 1;
        power = power.product(x).scale(&(Rational::one() / int(k)));
    }
    Ok(OnePlus(z))
}

/// `log(1 + z) = Σ (-1)^{k+1} z^k/k`, truncated.
pub fn log_assoc(y: &OnePlus) -> AlgebraElement {
    let z = &y.0;
    let mut out = AlgebraElement::zero(z.context());
    let mut power = z.clone();
    let mut k = 1i64;
    while !power.is_zero() {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        out.add_scaled(&(int(sign) / int(k)), &power);
        k += 1;
        power = power.product(z);
    }
    out
}

/// `BCH(x_1, …, x_n) = log(exp(x_1) ⋯ exp(x_n))`; zero for an empty list.
pub fn bch(ctx: &Arc<AlgebraContext>, xs: &[AlgebraElement]) -> Result<AlgebraElement> {
    let mut acc = OnePlus::one(ctx);
    for x in xs {
        if !x.same_context(&acc.0) {
            return Err(Error::ContextMismatch);
        }
        x.expect_degree(0, "BCH argument")?;
        acc = acc.mul(&exp_assoc(x)?);
    }
    Ok(log_assoc(&acc))
}

/// `exp(ad_e)(x)`.
pub fn exp_ad(e: &AlgebraElement, x: &AlgebraElement) -> Result<AlgebraElement> {
    let len = x.max_weight() + 1;
    super::OperatorSeries::exp_scaled(&Rational::one(), len).apply(e, x)
}
