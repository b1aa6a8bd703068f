//! Cell-complex models: points, 1-complexes, the one-vertex disc and the
//! bigon, with verification and symmetry checks.

mod bigon;
mod cell;
pub mod envelope;
mod verify;

pub use bigon::{
    bigon_context, build_bigon_based, build_bigon_symmetric, build_circle2, compare_reference_second_order,
    compute_symmetric_data, iota, reference_second_order, sigma, Base, SymmetricBigonData,
};
pub use cell::{build_disc_one_vertex, build_one_complex, disc_reflection, Cell, CellModel, OneComplex};
pub use envelope::ModelEnvelope;
pub use verify::{check_equivariance, verify_model, Check, VerificationReport};

/// Built-in models by CLI name.
pub const BUILTIN_MODELS: &[&str] =
    &["point", "interval", "circle2", "disc1", "bigon-a", "bigon-b", "bigon-sym"];

pub fn build_named(name: &str, order: usize) -> crate::Result<CellModel> {
    let m = match name {
        "point" => build_one_complex(&OneComplex::point(), order)?,
        "interval" => {
            let m = build_one_complex(&OneComplex::interval(), order)?;
            CellModel::new("interval", m.context(), m.cells().to_vec())?
        }
        "circle2" => build_circle2(order)?,
        "disc1" => build_disc_one_vertex(order)?,
        "bigon-a" => build_bigon_based(Base::A, order)?,
        "bigon-b" => build_bigon_based(Base::B, order)?,
        "bigon-sym" => build_bigon_symmetric(order)?,
        other => return Err(crate::Error::InvalidArgument(format!("unknown model `{other}`"))),
    };
    Ok(m)
}
