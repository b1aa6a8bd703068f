#![allow(dead_code)]

use std::sync::Arc;

use dgla_core::calculus::AdPolynomial;
use dgla_core::lie::{gen, AlgebraContext, AlgebraElement, Word};
use dgla_core::scalar::{frac, int};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Generators of the bigon context as elements, plus `ad` operators.
pub struct Sym {
    pub ctx: Arc<AlgebraContext>,
    pub a: AlgebraElement,
    pub b: AlgebraElement,
    pub e: AlgebraElement,
    pub f: AlgebraElement,
    pub g: Option<AlgebraElement>,
}

impl Sym {
    pub fn new(ctx: &Arc<AlgebraContext>) -> Self {
        Self {
            ctx: ctx.clone(),
            a: gen(ctx, "a").unwrap(),
            b: gen(ctx, "b").unwrap(),
            e: gen(ctx, "e").unwrap(),
            f: gen(ctx, "f").unwrap(),
            g: gen(ctx, "g").ok(),
        }
    }

    pub fn g(&self) -> &AlgebraElement {
        self.g.as_ref().expect("context has g")
    }

    pub fn big_e(&self) -> AdPolynomial {
        AdPolynomial::ad(&self.e)
    }

    pub fn big_f(&self) -> AdPolynomial {
        AdPolynomial::ad(&self.f)
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(&self.ctx)
    }
}

pub fn br(x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    x.bracket(y).unwrap()
}

pub fn sc(n: i64, d: i64, x: &AlgebraElement) -> AlgebraElement {
    x.scale(&frac(n, d))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random small-integer combination of words of weight `1..=max_len`
/// whose degree is `degree`, drawn from the context's generators.
pub fn random_homogeneous(
    ctx: &Arc<AlgebraContext>,
    rng: &mut ChaCha8Rng,
    degree: i32,
    max_len: usize,
    terms: usize,
) -> AlgebraElement {
    let n = ctx.generators().len();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < terms && attempts < 200 {
        attempts += 1;
        let len = rng.gen_range(1..=max_len);
        let letters: Vec<u8> = (0..len).map(|_| rng.gen_range(0..n) as u8).collect();
        let w = Word::new(&letters);
        if w.degree(ctx) == degree {
            out.push((w, int(rng.gen_range(-3..=3))));
        }
    }
    AlgebraElement::from_terms(ctx, out).unwrap()
}

/// A random Lie element of degree 0 over `e`, `f`: an integer combination of
/// `e`, `f`, `[e,f]` and `[e,[e,f]]`.
pub fn random_direction(s: &Sym, rng: &mut ChaCha8Rng) -> AlgebraElement {
    let ef = br(&s.e, &s.f);
    let atoms = [s.e.clone(), s.f.clone(), ef.clone(), br(&s.e, &ef)];
    let mut out = s.zero();
    for (i, atom) in atoms.iter().enumerate() {
        let range = if i < 2 { -2..=2 } else { -1..=1 };
        out = &out + &atom.scale(&int(rng.gen_range(range)));
    }
    out
}

/// Every word of weight `1..=max_len` over the context's generators.
pub fn all_words(ctx: &Arc<AlgebraContext>, max_len: usize) -> Vec<AlgebraElement> {
    let n = ctx.generators().len() as u8;
    let mut layer: Vec<Vec<u8>> = vec![vec![]];
    let mut out = Vec::new();
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (0..n).map(move |l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().map(|w| AlgebraElement::monomial(ctx, Word::new(w), int(1))));
    }
    out
}
