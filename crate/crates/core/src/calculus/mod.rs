//! Bernoulli numbers, operator series in `ad`, exponentials and BCH,
//! differentials, twisted differentials and flows.

mod bernoulli;
mod differential;
mod exp_log;
mod flow;
mod series;

pub use bernoulli::{bernoulli, BernoulliTable};
pub use differential::{
    edge_differential, edge_differential_bernoulli, extend_differential, maurer_cartan_defect,
    twisted_differential, Localisation,
};
pub use exp_log::{bch, exp_ad, exp_assoc, log_assoc, OnePlus};
pub use flow::flow;
pub use series::{apply_operator_series, AdPolynomial, OperatorSeries};
