use std::sync::Arc;

use crate::calculus::edge_differential;
use crate::error::{Error, Result};
use crate::lie::{gen, AlgebraContext, AlgebraElement, GeneratorMorphism};
use crate::scalar::frac;

/// Boundary, differential and closure of one generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    /// Bracket-free geometric boundary.
    pub boundary: AlgebraElement,
    pub differential: AlgebraElement,
    /// Generator indices of the cell's closure, sorted.
    pub closure: Vec<usize>,
}

/// A free graded Lie algebra with a differential assigned to every
/// generator, at a fixed truncation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellModel {
    name: String,
    ctx: Arc<AlgebraContext>,
    cells: Vec<Cell>,
}

impl CellModel {
    pub fn new(name: impl Into<String>, ctx: &Arc<AlgebraContext>, cells: Vec<Cell>) -> Result<Self> {
        if cells.len() != ctx.generators().len() {
            return Err(Error::InvalidArgument(format!(
                "{} cells for {} generators",
                cells.len(),
                ctx.generators().len()
            )));
        }
        for cell in &cells {
            if **cell.boundary.context() != **ctx || **cell.differential.context() != **ctx {
                return Err(Error::ContextMismatch);
            }
            if cell.closure.iter().any(|&i| i >= cells.len()) {
                return Err(Error::InvalidArgument("closure index out of range".into()));
            }
        }
        Ok(Self { name: name.into(), ctx: ctx.clone(), cells })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn context(&self) -> &Arc<AlgebraContext> {
        &self.ctx
    }

    pub fn order(&self) -> usize {
        self.ctx.max_weight()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, index: usize) -> &Cell {
        &self.cells[index]
    }

    pub fn differential(&self, index: usize) -> Option<&AlgebraElement> {
        self.cells.get(index).map(|c| &c.differential)
    }

    pub fn differential_of(&self, name: &str) -> Result<&AlgebraElement> {
        let g = self.ctx.generator(name)?;
        Ok(&self.cells[g.index].differential)
    }

    pub fn generator(&self, name: &str) -> Result<AlgebraElement> {
        gen(&self.ctx, name)
    }

    /// Copy with the differential of `name` replaced.
    pub fn with_differential(&self, name: &str, differential: AlgebraElement) -> Result<Self> {
        let g = self.ctx.generator(name)?;
        if **differential.context() != *self.ctx {
            return Err(Error::ContextMismatch);
        }
        let mut out = self.clone();
        out.cells[g.index].differential = differential;
        Ok(out)
    }

    /// The model carried along a generator symmetry: the image of `c` gets
    /// `mor(Dc)`, so that `mor` becomes a map of differential algebras from
    /// `self` to the result.
    pub fn transformed(&self, mor: &GeneratorMorphism, name: impl Into<String>) -> Result<Self> {
        if **mor.context() != *self.ctx {
            return Err(Error::ContextMismatch);
        }
        let mut cells = self.cells.clone();
        for (i, cell) in self.cells.iter().enumerate() {
            let (sign, t) = mor.image_of(i);
            let s = frac(sign as i64, 1);
            let mut closure: Vec<usize> = cell.closure.iter().map(|&j| mor.image_of(j).1).collect();
            closure.sort_unstable();
            cells[t] = Cell {
                boundary: mor.apply(&cell.boundary)?.scale(&s),
                differential: mor.apply(&cell.differential)?.scale(&s),
                closure,
            };
        }
        Self::new(name, &self.ctx, cells)
    }

    /// Re-expresses every cell in a larger context with the same names.
    pub(crate) fn cells_in(&self, target: &Arc<AlgebraContext>) -> Result<Vec<(String, Cell)>> {
        self.ctx
            .generators()
            .iter()
            .zip(&self.cells)
            .map(|(g, cell)| {
                let closure = cell
                    .closure
                    .iter()
                    .map(|&j| target.generator(&self.ctx.generators()[j].name).map(|t| t.index))
                    .collect::<Result<Vec<_>>>()?;
                Ok((
                    g.name.clone(),
                    Cell {
                        boundary: cell.boundary.transport(target)?,
                        differential: cell.differential.transport(target)?,
                        closure,
                    },
                ))
            })
            .collect()
    }
}

/// A graph: named vertices and directed named edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneComplex {
    vertices: Vec<String>,
    edges: Vec<(String, String, String)>,
}

impl OneComplex {
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let edges: Vec<(String, String, String)> = edges
            .iter()
            .map(|(e, s, t)| (e.as_ref().to_string(), s.as_ref().to_string(), t.as_ref().to_string()))
            .collect();
        let mut names: Vec<&str> = vertices.iter().map(String::as_str).collect();
        names.extend(edges.iter().map(|(e, _, _)| e.as_str()));
        let mut sorted = names.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != names.len() {
            return Err(Error::InvalidArgument("cell names must be unique".into()));
        }
        for (e, s, t) in &edges {
            for end in [s, t] {
                if !vertices.contains(end) {
                    return Err(Error::InvalidArgument(format!("edge `{e}` ends at unknown vertex `{end}`")));
                }
            }
        }
        Ok(Self { vertices, edges })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(String, String, String)] {
        &self.edges
    }

    pub fn point() -> Self {
        Self::new(&["a"], &[]).expect("valid complex")
    }

    pub fn interval() -> Self {
        Self::new(&["a", "b"], &[("e", "a", "b")]).expect("valid complex")
    }

    /// Two vertices joined by `e: a → b` and `f: b → a`.
    pub fn circle2() -> Self {
        Self::new(&["a", "b"], &[("e", "a", "b"), ("f", "b", "a")]).expect("valid complex")
    }
}

/// The unique model of a 1-complex: vertices get `Da = -½[a,a]`, edges the
/// Bernoulli edge differential.
pub fn build_one_complex(g: &OneComplex, order: usize) -> Result<CellModel> {
    let mut gens: Vec<(&str, i32)> = g.vertices.iter().map(|v| (v.as_str(), -1)).collect();
    gens.extend(g.edges.iter().map(|(e, _, _)| (e.as_str(), 0)));
    let ctx = AlgebraContext::new(&gens, order)?;
    let mut cells = Vec::with_capacity(gens.len());
    for v in &g.vertices {
        let a = gen(&ctx, v)?;
        let idx = ctx.generator(v)?.index;
        cells.push(Cell {
            boundary: AlgebraElement::zero(&ctx),
            differential: a.commutator(&a).scale(&frac(-1, 2)),
            closure: vec![idx],
        });
    }
    for (e, s, t) in &g.edges {
        let (ge, gs, gt) = (ctx.generator(e)?, ctx.generator(s)?, ctx.generator(t)?);
        let mut closure = vec![ge.index, gs.index, gt.index];
        closure.sort_unstable();
        closure.dedup();
        cells.push(Cell {
            boundary: &gen(&ctx, t)? - &gen(&ctx, s)?,
            differential: edge_differential(&ctx, ge, gs, gt)?,
            closure,
        });
    }
    let name = match (g.vertices.len(), g.edges.len()) {
        (1, 0) => "point",
        _ => "one-complex",
    };
    CellModel::new(name, &ctx, cells)
}

/// The disc with one vertex: `De = [e,a]`, `Dg = e - [a,g]`.
pub fn build_disc_one_vertex(order: usize) -> Result<CellModel> {
    let ctx = AlgebraContext::new(&[("a", -1), ("e", 0), ("g", 1)], order)?;
    let (a, e, g) = (gen(&ctx, "a")?, gen(&ctx, "e")?, gen(&ctx, "g")?);
    let cells = vec![
        Cell {
            boundary: AlgebraElement::zero(&ctx),
            differential: a.commutator(&a).scale(&frac(-1, 2)),
            closure: vec![0],
        },
        Cell { boundary: AlgebraElement::zero(&ctx), differential: e.bracket(&a)?, closure: vec![0, 1] },
        Cell { boundary: e.clone(), differential: &e - &a.bracket(&g)?, closure: vec![0, 1, 2] },
    ];
    CellModel::new("disc1", &ctx, cells)
}

/// The reflection of the one-vertex disc, `e ↦ -e`, `g ↦ -g`.
pub fn disc_reflection(ctx: &Arc<AlgebraContext>) -> Result<GeneratorMorphism> {
    GeneratorMorphism::from_names(ctx, &[("e", -1, "e"), ("g", -1, "g")])
}
