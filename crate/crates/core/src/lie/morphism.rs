use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar;

use super::{AlgebraContext, AlgebraElement, Word};

/// A degree-preserving bijection sending each generator to `±` a generator,
/// extended multiplicatively to words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMorphism {
    ctx: Arc<AlgebraContext>,
    // image[i] = (negated, target index)
    image: Vec<(bool, u8)>,
}

impl GeneratorMorphism {
    pub fn identity(ctx: &Arc<AlgebraContext>) -> Self {
        let image = (0..ctx.generators().len()).map(|i| (false, i as u8)).collect();
        Self { ctx: ctx.clone(), image }
    }

    /// Builds a morphism from `(source, sign, target)` triples; unlisted
    /// generators are fixed.
    pub fn from_names(ctx: &Arc<AlgebraContext>, rules: &[(&str, i8, &str)]) -> Result<Self> {
        let mut out = Self::identity(ctx);
        for &(src, sign, dst) in rules {
            let s = ctx.generator(src)?;
            let d = ctx.generator(dst)?;
            if s.degree != d.degree {
                return Err(Error::InvalidMorphism(format!("`{src}` and `{dst}` have different degrees")));
            }
            if sign != 1 && sign != -1 {
                return Err(Error::InvalidMorphism(format!("sign {sign} is not ±1")));
            }
            out.image[s.index] = (sign < 0, d.index as u8);
        }
        let mut seen = vec![false; out.image.len()];
        for &(_, t) in &out.image {
            if std::mem::replace(&mut seen[t as usize], true) {
                return Err(Error::InvalidMorphism("map is not bijective on generators".into()));
            }
        }
        Ok(out)
    }

    pub fn context(&self) -> &Arc<AlgebraContext> {
        &self.ctx
    }

    /// Image of generator `index` as `(sign, target index)`.
    pub fn image_of(&self, index: usize) -> (i8, usize) {
        let (neg, t) = self.image[index];
        (if neg { -1 } else { 1 }, t as usize)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if *self.ctx != *other.ctx {
            return Err(Error::ContextMismatch);
        }
        let image = other
            .image
            .iter()
            .map(|&(neg1, mid)| {
                let (neg2, t) = self.image[mid as usize];
                (neg1 ^ neg2, t)
            })
            .collect();
        Ok(Self { ctx: self.ctx.clone(), image })
    }

    pub fn apply(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        if **x.context() != *self.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(x.map_terms(|w, c| {
            let mut negate = false;
            let letters: SmallVec<[u8; 12]> = w
                .letters()
                .iter()
                .map(|&l| {
                    let (neg, t) = self.image[l as usize];
                    negate ^= neg;
                    t
                })
                .collect();
            let c = if negate { -c.clone() } else { c.clone() };
            (Word::from(letters), c)
        }))
    }

    /// Element image of generator `index`.
    pub fn apply_generator(&self, index: usize) -> AlgebraElement {
        let (sign, t) = self.image_of(index);
        AlgebraElement::generator(&self.ctx, t).scale(&scalar::int(sign as i64))
    }
}
