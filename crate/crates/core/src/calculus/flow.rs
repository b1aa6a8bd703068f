use crate::error::{Error, Result};
use crate::lie::AlgebraElement;
use crate::models::CellModel;
use crate::scalar::Rational;

use super::{extend_differential, OperatorSeries};

/// Time-`t` flow by `e` starting from `x0`.
///
/// On degree -1 this solves `dx/dt = De - ad_e(x)` in closed form,
/// `exp(-t ad_e) x0 + ((1 - exp(-t ad_e))/ad_e)(De)`; on degrees ≥ 0 it is
/// `exp(-t ad_e) x0`. The zero element is read as the point `0` of degree -1.
pub fn flow(
    model: &CellModel,
    e: &AlgebraElement,
    x0: &AlgebraElement,
    t: &Rational,
) -> Result<AlgebraElement> {
    e.expect_degree(0, "flow direction")?;
    if !e.same_context(x0) || **e.context() != **model.context() {
        return Err(Error::ContextMismatch);
    }
    let len = model.context().max_weight() + 1;
    let degree = x0.homogeneous_degree()?.unwrap_or(-1);
    let transported = OperatorSeries::exp_scaled(&-t.clone(), len).apply(e, x0)?;
    if degree != -1 {
        return Ok(transported);
    }
    let de = extend_differential(model, e)?;
    let drift = OperatorSeries::one_minus_exp_neg_over_x(t, len).apply(e, &de)?;
    Ok(transported + drift)
}
