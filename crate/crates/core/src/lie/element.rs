use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{hash_map, BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::{self, Rational};

use super::AlgebraContext;

/// A word in the generators, stored as generator indices.
///
/// Words order by length first, then lexicographically on indices.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(SmallVec<[u8; 12]>);

impl Word {
    pub fn new(letters: &[u8]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.len()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out)
    }

    pub fn degree(&self, ctx: &AlgebraContext) -> i32 {
        self.0.iter().map(|&l| ctx.degree_of(l as usize)).sum()
    }

    /// Parity of the degree, as a count of odd letters.
    pub fn is_odd(&self, ctx: &AlgebraContext) -> bool {
        self.0.iter().filter(|&&l| ctx.is_odd(l as usize)).count() % 2 == 1
    }
}

impl From<SmallVec<[u8; 12]>> for Word {
    fn from(v: SmallVec<[u8; 12]>) -> Self {
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// A finite rational combination of words of weight `1..=N` in the free
/// associative algebra on the context's generators.
///
/// Lie elements live here as graded commutators. The term map never stores
/// zero coefficients, and the empty map is the zero element. Arithmetic
/// operators panic on context mismatch; use [`AlgebraElement::combine`] for
/// a checked linear combination.
#[derive(Clone)]
pub struct AlgebraElement {
    ctx: Arc<AlgebraContext>,
    terms: BTreeMap<Word, Rational>,
}

impl AlgebraElement {
    pub fn zero(ctx: &Arc<AlgebraContext>) -> Self {
        Self { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn generator(ctx: &Arc<AlgebraContext>, index: usize) -> Self {
        assert!(index < ctx.generators().len(), "generator index out of range");
        Self::monomial(ctx, Word::new(&[index as u8]), Rational::one())
    }

    /// `coeff * word`, or zero if the word is empty or exceeds the truncation order.
    pub fn monomial(ctx: &Arc<AlgebraContext>, word: Word, coeff: Rational) -> Self {
        let mut out = Self::zero(ctx);
        if word.weight() >= 1 && word.weight() <= ctx.max_weight() && !coeff.is_zero() {
            out.terms.insert(word, coeff);
        }
        out
    }

    /// Builds an element from terms, validating letters and summing duplicates.
    pub fn from_terms<I>(ctx: &Arc<AlgebraContext>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, Rational)>,
    {
        let n = ctx.generators().len();
        let mut out = Self::zero(ctx);
        for (word, coeff) in terms {
            if word.weight() == 0 {
                return Err(Error::InvalidArgument("empty word".into()));
            }
            if let Some(&l) = word.letters().iter().find(|&&l| l as usize >= n) {
                return Err(Error::UnknownGenerator(format!("#{l}")));
            }
            if word.weight() <= ctx.max_weight() {
                out.add_term(word, coeff);
            }
        }
        Ok(out)
    }

    /// Sums words given by generator names, e.g. `[("e f", 1/2)]`.
    pub fn from_named(ctx: &Arc<AlgebraContext>, terms: &[(&str, Rational)]) -> Result<Self> {
        let mut words = Vec::with_capacity(terms.len());
        for (spelled, coeff) in terms {
            let letters = spelled
                .split_whitespace()
                .map(|name| ctx.generator(name).map(|g| g.index as u8))
                .collect::<Result<SmallVec<[u8; 12]>>>()?;
            words.push((Word(letters), coeff.clone()));
        }
        Self::from_terms(ctx, words)
    }

    pub fn context(&self) -> &Arc<AlgebraContext> {
        &self.ctx
    }

    pub fn max_weight(&self) -> usize {
        self.ctx.max_weight()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &Word) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn same_context(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) || *self.ctx == *other.ctx
    }

    fn check_context(&self, other: &Self) -> Result<()> {
        if self.same_context(other) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn add_term(&mut self, word: Word, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Adds `c * other` in place.
    pub fn add_scaled(&mut self, c: &Rational, other: &Self) {
        assert!(self.same_context(other), "elements belong to different algebra contexts");
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.terms {
            self.add_term(w.clone(), c * x);
        }
    }

    /// `c1 * x + c2 * y`.
    pub fn combine(c1: &Rational, x: &Self, c2: &Rational, y: &Self) -> Result<Self> {
        x.check_context(y)?;
        let mut out = x.scale(c1);
        out.add_scaled(c2, y);
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        Self { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    /// Degree shared by every word, `None` for the zero element.
    pub fn homogeneous_degree(&self) -> Result<Option<i32>> {
        let mut degree = None;
        for w in self.terms.keys() {
            let d = w.degree(&self.ctx);
            match degree {
                None => degree = Some(d),
                Some(prev) if prev != d => {
                    return Err(Error::Grading(format!("element mixes degrees {prev} and {d}")))
                }
                _ => {}
            }
        }
        Ok(degree)
    }

    /// Checks that the element is homogeneous of degree `d` (zero always is).
    pub fn expect_degree(&self, d: i32, what: &str) -> Result<()> {
        match self.homogeneous_degree()? {
            Some(found) if found != d => {
                Err(Error::Grading(format!("{what} must have degree {d}, found {found}")))
            }
            _ => Ok(()),
        }
    }

    /// Truncated concatenation product in the tensor algebra.
    pub fn product(&self, other: &Self) -> Self {
        assert!(self.same_context(other), "elements belong to different algebra contexts");
        let n = self.ctx.max_weight();
        let mut acc = Accumulator::default();
        for (u, x) in &self.terms {
            let room = n - u.weight();
            if room == 0 {
                break;
            }
            for (w, y) in &other.terms {
                if w.weight() > room {
                    break;
                }
                acc.add(u.concat(w), x * y);
            }
        }
        acc.finish(&self.ctx)
    }

    /// Graded commutator `xy - (-1)^{|x||y|} yx`, applied term by term using
    /// each word's own degree. Agrees with [`AlgebraElement::bracket`] on
    /// homogeneous inputs.
    pub fn commutator(&self, other: &Self) -> Self {
        assert!(self.same_context(other), "elements belong to different algebra contexts");
        let n = self.ctx.max_weight();
        let mut acc = Accumulator::default();
        for (u, x) in &self.terms {
            let room = n - u.weight();
            if room == 0 {
                break;
            }
            let u_odd = u.is_odd(&self.ctx);
            for (w, y) in &other.terms {
                if w.weight() > room {
                    break;
                }
                let c = x * y;
                let swapped = if u_odd && w.is_odd(&self.ctx) { c.clone() } else { -c.clone() };
                acc.add(w.concat(u), swapped);
                acc.add(u.concat(w), c);
            }
        }
        acc.finish(&self.ctx)
    }

    /// Graded Lie bracket of homogeneous elements.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        self.homogeneous_degree()?;
        other.homogeneous_degree()?;
        Ok(self.commutator(other))
    }

    /// Sum of the terms of word length exactly `k`.
    pub fn weight_component(&self, k: usize) -> Self {
        Self {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.weight() == k)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops every term of weight above `k`.
    pub fn truncated(&self, k: usize) -> Self {
        Self {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.weight() <= k)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Lowest weight present, `None` for zero.
    pub fn min_weight(&self) -> Option<usize> {
        self.terms.keys().next().map(Word::weight)
    }

    /// Re-expresses the element in another context by generator name,
    /// dropping words beyond the target order.
    pub fn transport(&self, target: &Arc<AlgebraContext>) -> Result<Self> {
        let mut map = Vec::with_capacity(self.ctx.generators().len());
        for g in self.ctx.generators() {
            let t = target.generator(&g.name)?;
            if t.degree != g.degree {
                return Err(Error::Grading(format!(
                    "generator `{}` has degree {} in the target context",
                    g.name, t.degree
                )));
            }
            map.push(t.index as u8);
        }
        let mut out = Self::zero(target);
        for (w, c) in &self.terms {
            if w.weight() <= target.max_weight() {
                let letters: SmallVec<[u8; 12]> = w.letters().iter().map(|&l| map[l as usize]).collect();
                out.add_term(Word(letters), c.clone());
            }
        }
        Ok(out)
    }

    pub(crate) fn map_terms<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&Word, &Rational) -> (Word, Rational),
    {
        let mut out = Self::zero(&self.ctx);
        for (w, c) in &self.terms {
            let (w2, c2) = f(w, c);
            out.add_term(w2, c2);
        }
        out
    }
}

/// Unordered scratch map for products; sorted once at the end.
#[derive(Default)]
struct Accumulator(HashMap<Word, Rational>);

impl Accumulator {
    fn add(&mut self, word: Word, coeff: Rational) {
        match self.0.entry(word) {
            hash_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            hash_map::Entry::Occupied(mut slot) => *slot.get_mut() += coeff,
        }
    }

    fn finish(self, ctx: &Arc<AlgebraContext>) -> AlgebraElement {
        AlgebraElement { ctx: ctx.clone(), terms: self.0.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_context(other) && self.terms == other.terms
    }
}

impl Eq for AlgebraElement {}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::render_text(self))
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::render_text(self))
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), rhs);
        out
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), rhs);
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&-Rational::one())
    }
}

impl Mul<&AlgebraElement> for &Rational {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        rhs.scale(self)
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;
    fn add(mut self, rhs: AlgebraElement) -> AlgebraElement {
        self.add_scaled(&Rational::one(), &rhs);
        self
    }
}

impl Sub for AlgebraElement {
    type Output = AlgebraElement;
    fn sub(mut self, rhs: AlgebraElement) -> AlgebraElement {
        self.add_scaled(&-Rational::one(), &rhs);
        self
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        -&self
    }
}

/// Shorthand used across the crate: `c * x` for a small integer ratio.
pub fn scaled(numer: i64, denom: i64, x: &AlgebraElement) -> AlgebraElement {
    x.scale(&scalar::frac(numer, denom))
}
