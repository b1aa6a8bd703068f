use std::sync::Arc;

use crate::error::{Error, Result};

use super::AlgebraElement;

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 6;

/// A free generator. `degree` is the cell dimension minus one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: i32,
    pub index: usize,
}

impl Generator {
    pub fn is_odd(&self) -> bool {
        self.degree.rem_euclid(2) == 1
    }
}

/// The free graded Lie algebra on an ordered generator list, truncated at
/// word length `max_weight`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraContext {
    generators: Vec<Generator>,
    max_weight: usize,
}

impl AlgebraContext {
    /// Builds a context from `(name, degree)` pairs. Generator indices follow
    /// the list order and fix the canonical term order.
    pub fn new<S: AsRef<str>>(gens: &[(S, i32)], max_weight: usize) -> Result<Arc<Self>> {
        if max_weight == 0 {
            return Err(Error::InvalidContext("truncation order must be positive".into()));
        }
        if gens.len() > u8::MAX as usize {
            return Err(Error::InvalidContext("too many generators".into()));
        }
        let mut generators = Vec::with_capacity(gens.len());
        for (index, (name, degree)) in gens.iter().enumerate() {
            let name = name.as_ref();
            if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::InvalidContext(format!("bad generator name `{name}`")));
            }
            if generators.iter().any(|g: &Generator| g.name == name) {
                return Err(Error::InvalidContext(format!("duplicate generator `{name}`")));
            }
            generators.push(Generator { name: name.to_string(), degree: *degree, index });
        }
        Ok(Arc::new(Self { generators, max_weight }))
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    pub fn generator(&self, name: &str) -> Result<&Generator> {
        self.generators
            .iter()
            .find(|g| g.name == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn degree_of(&self, index: usize) -> i32 {
        self.generators[index].degree
    }

    pub fn is_odd(&self, index: usize) -> bool {
        self.generators[index].is_odd()
    }

    /// Same generators at a different truncation order.
    pub fn with_max_weight(&self, max_weight: usize) -> Result<Arc<Self>> {
        if max_weight == 0 {
            return Err(Error::InvalidContext("truncation order must be positive".into()));
        }
        Ok(Arc::new(Self { generators: self.generators.clone(), max_weight }))
    }
}

/// Convenience accessor for the element of a named generator.
pub fn gen(ctx: &Arc<AlgebraContext>, name: &str) -> Result<AlgebraElement> {
    let g = ctx.generator(name)?;
    Ok(AlgebraElement::generator(ctx, g.index))
}
