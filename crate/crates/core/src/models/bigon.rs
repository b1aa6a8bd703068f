use std::sync::Arc;

use crate::calculus::{bch, flow, AdPolynomial, OperatorSeries};
use crate::error::{Error, Result};
use crate::lie::{gen, AlgebraContext, AlgebraElement, GeneratorMorphism};
use crate::scalar::{frac, int};

use super::cell::{build_one_complex, Cell, CellModel, OneComplex};

/// Vertex an asymmetric bigon model is based at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Base {
    A,
    B,
}

/// Rotation of the bigon: `a ↔ b`, `e ↔ f`, `g` fixed. Generators missing
/// from `ctx` are skipped.
pub fn sigma(ctx: &Arc<AlgebraContext>) -> Result<GeneratorMorphism> {
    GeneratorMorphism::from_names(ctx, &[("a", 1, "b"), ("b", 1, "a"), ("e", 1, "f"), ("f", 1, "e")])
}

/// Reflection of the bigon: `e ↦ -f`, `f ↦ -e`, `g ↦ -g`, vertices fixed.
pub fn iota(ctx: &Arc<AlgebraContext>) -> Result<GeneratorMorphism> {
    let mut rules = vec![("e", -1, "f"), ("f", -1, "e")];
    if ctx.generator("g").is_ok() {
        rules.push(("g", -1, "g"));
    }
    GeneratorMorphism::from_names(ctx, &rules)
}

pub fn bigon_context(order: usize) -> Result<Arc<AlgebraContext>> {
    AlgebraContext::new(&[("a", -1), ("b", -1), ("e", 0), ("f", 0), ("g", 1)], order)
}

/// The circle model `<a, b, e, f>` with `e: a → b`, `f: b → a`.
pub fn build_circle2(order: usize) -> Result<CellModel> {
    let m = build_one_complex(&OneComplex::circle2(), order)?;
    CellModel::new("circle2", m.context(), m.cells().to_vec())
}

/// Attaches `g` with `∂₀g = e + f` and the given differential to the circle.
fn attach_two_cell<F>(name: &str, order: usize, dg: F) -> Result<CellModel>
where
    F: FnOnce(&Arc<AlgebraContext>) -> Result<AlgebraElement>,
{
    let circle = build_circle2(order)?;
    let ctx = bigon_context(order)?;
    let mut cells: Vec<Cell> = circle.cells_in(&ctx)?.into_iter().map(|(_, c)| c).collect();
    cells.push(Cell {
        boundary: &gen(&ctx, "e")? + &gen(&ctx, "f")?,
        differential: dg(&ctx)?,
        closure: (0..5).collect(),
    });
    CellModel::new(name, &ctx, cells)
}

/// The bigon based at a vertex: `Dg = BCH(e,f) - [a,g]` or `BCH(f,e) - [b,g]`.
pub fn build_bigon_based(base: Base, order: usize) -> Result<CellModel> {
    let name = match base {
        Base::A => "bigon-a",
        Base::B => "bigon-b",
    };
    attach_two_cell(name, order, |ctx| {
        let (e, f, g) = (gen(ctx, "e")?, gen(ctx, "f")?, gen(ctx, "g")?);
        Ok(match base {
            Base::A => bch(ctx, &[e, f])? - gen(ctx, "a")?.bracket(&g)?,
            Base::B => bch(ctx, &[f, e])? - gen(ctx, "b")?.bracket(&g)?,
        })
    })
}

/// The symmetric point `x`, its direction `v` and the localised class `q`
/// of the two-vertex circle, all in the circle's context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricBigonData {
    pub v: AlgebraElement,
    pub x: AlgebraElement,
    pub q: AlgebraElement,
}

/// `v = BCH(-½BCH(e,f), e)`, `x = u_{v/2}(a)`, `q = BCH(-v/2, e, f, v/2)`.
///
/// Cross-checks `q = exp(-½ ad_v) BCH(e,f)` and `u_v(a) = b`; a mismatch is
/// reported as [`Error::Inconsistent`].
pub fn compute_symmetric_data(order: usize) -> Result<SymmetricBigonData> {
    let circle = build_circle2(order)?;
    symmetric_data_in(&circle)
}

pub(crate) fn symmetric_data_in(circle: &CellModel) -> Result<SymmetricBigonData> {
    let ctx = circle.context();
    let (a, b, e, f) = (gen(ctx, "a")?, gen(ctx, "b")?, gen(ctx, "e")?, gen(ctx, "f")?);
    let loop_class = bch(ctx, &[e.clone(), f.clone()])?;
    let v = bch(ctx, &[loop_class.scale(&frac(-1, 2)), e.clone()])?;
    let x = flow(circle, &v, &a, &frac(1, 2))?;
    let half_v = v.scale(&frac(1, 2));
    let q = bch(ctx, &[-&half_v, e, f, half_v])?;

    let len = ctx.max_weight() + 1;
    let q_transported = OperatorSeries::exp_scaled(&frac(-1, 2), len).apply(&v, &loop_class)?;
    if q_transported != q {
        return Err(Error::Inconsistent(format!(
            "BCH(-v/2,e,f,v/2) and exp(-ad_v/2)BCH(e,f) differ by {}",
            &q - &q_transported
        )));
    }
    let end = flow(circle, &v, &a, &int(1))?;
    if end != b {
        return Err(Error::Inconsistent(format!("u_v(a) - b = {}", &end - &b)));
    }
    Ok(SymmetricBigonData { v, x, q })
}

/// The dihedrally symmetric bigon: `Dg = q - [x, g]`.
pub fn build_bigon_symmetric(order: usize) -> Result<CellModel> {
    let data = compute_symmetric_data(order)?;
    attach_two_cell("bigon-sym", order, |ctx| {
        let q = data.q.transport(ctx)?;
        let x = data.x.transport(ctx)?;
        Ok(q - x.bracket(&gen(ctx, "g")?)?)
    })
}

/// Second-order part of the earlier symmetric model,
/// `1/24((F-E)G + G(F-E))(b-a)` with `G = ad_g`.
pub fn reference_second_order(ctx: &Arc<AlgebraContext>) -> Result<AlgebraElement> {
    let (a, b, e, f, g) = (gen(ctx, "a")?, gen(ctx, "b")?, gen(ctx, "e")?, gen(ctx, "f")?, gen(ctx, "g")?);
    let f_minus_e = AdPolynomial::ad(&f).sub(&AdPolynomial::ad(&e));
    let big_g = AdPolynomial::ad(&g);
    let op = f_minus_e.compose(&big_g).add(&big_g.compose(&f_minus_e)).scale(&frac(1, 24));
    op.apply(&(&b - &a))
}

/// True iff the weight-3 part of our `Dg` differs from the reference one.
pub fn compare_reference_second_order(order: usize) -> Result<bool> {
    if order < 4 {
        return Err(Error::InvalidArgument("comparison needs order at least 4".into()));
    }
    let model = build_bigon_symmetric(order)?;
    let ours = model.differential_of("g")?.weight_component(3);
    Ok(ours != reference_second_order(model.context())?)
}
