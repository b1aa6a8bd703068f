use std::sync::Arc;

use num_traits::Zero;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::lie::{AlgebraContext, AlgebraElement, Generator, Word};
use crate::models::CellModel;
use crate::scalar::{factorial, frac, Rational};

use super::{BernoulliTable, OperatorSeries};

fn check_edge(e: &Generator, a: &Generator, b: &Generator) -> Result<()> {
    if e.degree != 0 || a.degree != -1 || b.degree != -1 {
        return Err(Error::Grading(format!(
            "edge differential needs |{}| = 0 and |{}| = |{}| = -1",
            e.name, a.name, b.name
        )));
    }
    Ok(())
}

/// Differential of an edge `e` from `a` to `b`:
/// `E/(1 - e^E) a + E/(1 - e^{-E}) b` with `E = ad_e`.
pub fn edge_differential(
    ctx: &Arc<AlgebraContext>,
    e: &Generator,
    a: &Generator,
    b: &Generator,
) -> Result<AlgebraElement> {
    check_edge(e, a, b)?;
    let len = ctx.max_weight();
    let ee = AlgebraElement::generator(ctx, e.index);
    let ea = AlgebraElement::generator(ctx, a.index);
    let eb = AlgebraElement::generator(ctx, b.index);
    let from_source = OperatorSeries::x_over_one_minus_exp(len).apply(&ee, &ea)?;
    let to_target = OperatorSeries::x_over_one_minus_exp_neg(len).apply(&ee, &eb)?;
    Ok(from_source + to_target)
}

/// The same differential written as `ad_e b + Σ B_i/i! (ad_e)^i (b - a)`.
pub fn edge_differential_bernoulli(
    ctx: &Arc<AlgebraContext>,
    e: &Generator,
    a: &Generator,
    b: &Generator,
) -> Result<AlgebraElement> {
    check_edge(e, a, b)?;
    let n = ctx.max_weight();
    let table = BernoulliTable::new(n);
    let ee = AlgebraElement::generator(ctx, e.index);
    let eb = AlgebraElement::generator(ctx, b.index);
    let diff = &eb - &AlgebraElement::generator(ctx, a.index);
    let mut out = ee.commutator(&eb);
    let mut power = diff;
    for i in 0..n {
        let b_i = &table.values()[i];
        if !b_i.is_zero() {
            out.add_scaled(&(b_i / factorial(i)), &power);
        }
        power = ee.commutator(&power);
    }
    Ok(out)
}

/// Extends the model's generator differentials to `x` by the graded Leibniz
/// rule `D(uv) = (Du)v + (-1)^{|u|} u(Dv)`, word by word.
pub fn extend_differential(model: &CellModel, x: &AlgebraElement) -> Result<AlgebraElement> {
    let ctx = model.context();
    if **x.context() != **ctx {
        return Err(Error::ContextMismatch);
    }
    let n = ctx.max_weight();
    let mut pieces: Vec<(Word, Rational)> = Vec::new();
    for (w, c) in x.terms() {
        let letters = w.letters();
        let mut prefix_odd = false;
        for (i, &l) in letters.iter().enumerate() {
            let dl = model
                .differential(l as usize)
                .ok_or_else(|| Error::MissingDifferential(ctx.generators()[l as usize].name.clone()))?;
            let rest = letters.len() - 1;
            for (dw, dc) in dl.terms() {
                if dw.weight() + rest > n {
                    break;
                }
                let mut word: SmallVec<[u8; 12]> = SmallVec::with_capacity(dw.weight() + rest);
                word.extend_from_slice(&letters[..i]);
                word.extend_from_slice(dw.letters());
                word.extend_from_slice(&letters[i + 1..]);
                let coeff = if prefix_odd { -(c * dc) } else { c * dc };
                pieces.push((Word::from(word), coeff));
            }
            if ctx.is_odd(l as usize) {
                prefix_odd = !prefix_odd;
            }
        }
    }
    AlgebraElement::from_terms(ctx, pieces)
}

/// `Dp + ½[p, p]`; `p` is a Maurer-Cartan point iff this vanishes.
pub fn maurer_cartan_defect(model: &CellModel, p: &AlgebraElement) -> Result<AlgebraElement> {
    p.expect_degree(-1, "Maurer-Cartan candidate")?;
    let mut out = extend_differential(model, p)?;
    out.add_scaled(&frac(1, 2), &p.commutator(p));
    Ok(out)
}

/// The twisted differential `D_p = D + ad_p` at a verified point `p`.
#[derive(Clone, Debug)]
pub struct Localisation<'m> {
    model: &'m CellModel,
    point: AlgebraElement,
}

impl<'m> Localisation<'m> {
    /// Fails with [`Error::NotAPoint`] unless the defect of `point` is zero.
    pub fn new(model: &'m CellModel, point: &AlgebraElement) -> Result<Self> {
        let defect = maurer_cartan_defect(model, point)?;
        if !defect.is_zero() {
            return Err(Error::NotAPoint { defect });
        }
        Ok(Self { model, point: point.clone() })
    }

    pub fn point(&self) -> &AlgebraElement {
        &self.point
    }

    pub fn apply(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        Ok(extend_differential(self.model, x)? + self.point.bracket(x)?)
    }
}

/// `D_p x = Dx + [p, x]`.
pub fn twisted_differential(
    model: &CellModel,
    p: &AlgebraElement,
    x: &AlgebraElement,
) -> Result<AlgebraElement> {
    Localisation::new(model, p)?.apply(x)
}
