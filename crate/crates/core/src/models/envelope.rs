//! JSON envelope for whole models.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::serial::{context_from_specs, element_from_series, generator_specs, series_spec};
use crate::lie::serial::{GeneratorSpec, SeriesSpec};

use super::{Cell, CellModel};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellSpec {
    pub generator: String,
    pub closure: Vec<String>,
    pub boundary: SeriesSpec,
    pub differential: SeriesSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelEnvelope {
    pub model: String,
    pub order: usize,
    pub generators: Vec<GeneratorSpec>,
    pub cells: Vec<CellSpec>,
}

impl ModelEnvelope {
    pub fn from_model(m: &CellModel) -> Self {
        let names: Vec<&str> = m.context().generators().iter().map(|g| g.name.as_str()).collect();
        let cells = names
            .iter()
            .zip(m.cells())
            .map(|(name, cell)| CellSpec {
                generator: name.to_string(),
                closure: cell.closure.iter().map(|&i| names[i].to_string()).collect(),
                boundary: series_spec(&cell.boundary, &format!("d0({name})")),
                differential: series_spec(&cell.differential, &format!("D({name})")),
            })
            .collect();
        Self {
            model: m.name().to_string(),
            order: m.order(),
            generators: generator_specs(m.context()),
            cells,
        }
    }

    pub fn to_model(&self) -> Result<CellModel> {
        let ctx = context_from_specs(&self.generators, self.order)?;
        if self.cells.len() != ctx.generators().len() {
            return Err(Error::Parse {
                position: "cells".into(),
                message: "expected one cell per generator".into(),
            });
        }
        let mut cells = Vec::with_capacity(self.cells.len());
        for (g, spec) in ctx.generators().iter().zip(&self.cells) {
            if spec.generator != g.name {
                return Err(Error::Parse {
                    position: format!("cell `{}`", spec.generator),
                    message: format!("cells must follow generator order (expected `{}`)", g.name),
                });
            }
            let mut closure =
                spec.closure.iter().map(|n| ctx.generator(n).map(|x| x.index)).collect::<Result<Vec<_>>>()?;
            closure.sort_unstable();
            cells.push(Cell {
                boundary: element_from_series(&ctx, &spec.boundary)?,
                differential: element_from_series(&ctx, &spec.differential)?,
                closure,
            });
        }
        CellModel::new(self.model.clone(), &ctx, cells)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelope serializes")
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            position: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })
    }
}
