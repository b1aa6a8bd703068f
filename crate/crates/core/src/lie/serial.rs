//! Canonical JSON series format and plain-text / LaTeX rendering.
//!
//! ```json
//! {"order":6,"generators":[{"name":"e","degree":0},{"name":"f","degree":0}],
//!  "series":{"label":"v","terms":[{"coeff":"1/2","word":["e"]},{"coeff":"-1/2","word":["f"]}]}}
//! ```
//!
//! Coefficients are reduced `p/q` strings with `q > 0` (integers as `p/1`)
//! and terms appear in canonical order.

use std::collections::HashSet;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::{self, Rational};

use super::{AlgebraContext, AlgebraElement, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub coeff: String,
    pub word: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesSpec {
    pub label: String,
    pub terms: Vec<TermSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesDocument {
    pub order: usize,
    pub generators: Vec<GeneratorSpec>,
    pub series: SeriesSpec,
}

pub fn generator_specs(ctx: &AlgebraContext) -> Vec<GeneratorSpec> {
    ctx.generators().iter().map(|g| GeneratorSpec { name: g.name.clone(), degree: g.degree }).collect()
}

pub fn context_from_specs(gens: &[GeneratorSpec], order: usize) -> Result<Arc<AlgebraContext>> {
    let pairs: Vec<(&str, i32)> = gens.iter().map(|g| (g.name.as_str(), g.degree)).collect();
    AlgebraContext::new(&pairs, order)
}

pub fn series_spec(x: &AlgebraElement, label: &str) -> SeriesSpec {
    let ctx = x.context();
    let terms = x
        .terms()
        .map(|(w, c)| TermSpec {
            coeff: scalar::to_canonical_string(c),
            word: w.letters().iter().map(|&l| ctx.generators()[l as usize].name.clone()).collect(),
        })
        .collect();
    SeriesSpec { label: label.to_string(), terms }
}

/// Reads a series against an existing context. Rejects zero or
/// non-canonical coefficients, unknown letters, duplicate words and words
/// beyond the context's order.
pub fn element_from_series(ctx: &Arc<AlgebraContext>, spec: &SeriesSpec) -> Result<AlgebraElement> {
    let mut seen = HashSet::new();
    let mut terms = Vec::with_capacity(spec.terms.len());
    for (i, t) in spec.terms.iter().enumerate() {
        let position = || format!("series `{}` term {i}", spec.label);
        let coeff = scalar::parse_canonical(&t.coeff)
            .map_err(|message| Error::Parse { position: position(), message })?;
        if coeff.is_zero() {
            return Err(Error::Parse { position: position(), message: "zero coefficient".into() });
        }
        if t.word.is_empty() || t.word.len() > ctx.max_weight() {
            return Err(Error::Parse {
                position: position(),
                message: format!("word length {} outside 1..={}", t.word.len(), ctx.max_weight()),
            });
        }
        let letters = t
            .word
            .iter()
            .map(|name| {
                ctx.generator(name).map(|g| g.index as u8).map_err(|_| Error::Parse {
                    position: position(),
                    message: format!("unknown generator `{name}`"),
                })
            })
            .collect::<Result<SmallVec<[u8; 12]>>>()?;
        let word = Word::from(letters);
        if !seen.insert(word.clone()) {
            return Err(Error::Parse { position: position(), message: "duplicate word".into() });
        }
        terms.push((word, coeff));
    }
    AlgebraElement::from_terms(ctx, terms)
}

pub fn document(x: &AlgebraElement, label: &str) -> SeriesDocument {
    SeriesDocument {
        order: x.max_weight(),
        generators: generator_specs(x.context()),
        series: series_spec(x, label),
    }
}

/// Compact canonical JSON.
pub fn encode(x: &AlgebraElement, label: &str) -> String {
    serde_json::to_string(&document(x, label)).expect("series document serializes")
}

pub fn decode(text: &str) -> Result<AlgebraElement> {
    decode_labeled(text).map(|(x, _)| x)
}

pub fn decode_labeled(text: &str) -> Result<(AlgebraElement, String)> {
    let doc: SeriesDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
        position: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    let ctx = context_from_specs(&doc.generators, doc.order)?;
    let x = element_from_series(&ctx, &doc.series)?;
    Ok((x, doc.series.label))
}

fn word_string(ctx: &AlgebraContext, w: &Word, sep: &str, latex: bool) -> String {
    w.letters()
        .iter()
        .map(|&l| {
            let name = &ctx.generators()[l as usize].name;
            if latex && name.chars().count() > 1 {
                format!("\\mathrm{{{name}}}")
            } else {
                name.clone()
            }
        })
        .collect::<Vec<_>>()
        .join(sep)
}

fn render(x: &AlgebraElement, latex: bool) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let ctx = x.context();
    let single = ctx.generators().iter().all(|g| g.name.chars().count() == 1);
    let sep = match (single, latex) {
        (true, _) => "",
        (false, false) => "·",
        (false, true) => " ",
    };
    let mut out = String::new();
    for (i, (w, c)) in x.terms().enumerate() {
        let negative = c.is_negative();
        let mag: Rational = c.abs();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if !mag.is_one() {
            if latex {
                if mag.denom().is_one() {
                    out.push_str(&format!("{}\\,", mag.numer()));
                } else {
                    out.push_str(&format!("\\frac{{{}}}{{{}}}\\,", mag.numer(), mag.denom()));
                }
            } else {
                out.push_str(&scalar::to_display_string(&mag));
                out.push(' ');
            }
        }
        out.push_str(&word_string(ctx, w, sep, latex));
    }
    out
}

/// Plain text, e.g. `1/2 e - 1/2 f + 1/48 eef`.
pub fn render_text(x: &AlgebraElement) -> String {
    render(x, false)
}

/// LaTeX with juxtaposed words and `\frac` prefactors.
pub fn render_latex(x: &AlgebraElement) -> String {
    render(x, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::gen;
    use crate::scalar::frac;

    fn ctx() -> Arc<AlgebraContext> {
        AlgebraContext::new(&[("e", 0), ("f", 0)], 6).unwrap()
    }

    #[test]
    fn encodes_documented_shape() {
        let c = ctx();
        let x = &gen(&c, "e").unwrap().scale(&frac(1, 2)) - &gen(&c, "f").unwrap().scale(&frac(1, 2));
        assert_eq!(
            encode(&x, "v"),
            r#"{"order":6,"generators":[{"name":"e","degree":0},{"name":"f","degree":0}],"series":{"label":"v","terms":[{"coeff":"1/2","word":["e"]},{"coeff":"-1/2","word":["f"]}]}}"#
        );
        assert_eq!(decode(&encode(&x, "v")).unwrap(), x);
        assert_eq!(render_text(&x), "1/2 e - 1/2 f");
        assert_eq!(render_latex(&x), "\\frac{1}{2}\\,e - \\frac{1}{2}\\,f");
    }

    #[test]
    fn rejects_bad_documents() {
        let base = |coeff: &str, word: &str| {
            format!(
                r#"{{"order":6,"generators":[{{"name":"e","degree":0}}],"series":{{"label":"s","terms":[{{"coeff":"{coeff}","word":[{word}]}}]}}}}"#
            )
        };
        assert!(decode(&base("1/2", r#""e""#)).is_ok());
        for (coeff, word) in
            [("2/4", r#""e""#), ("0/1", r#""e""#), ("1", r#""e""#), ("1/2", r#""x""#), ("1/2", "")]
        {
            let err = decode(&base(coeff, word)).unwrap_err();
            assert!(matches!(err, Error::Parse { .. }), "{coeff} {word}: {err}");
        }
        let err = decode("{\"order\": 6,").unwrap_err();
        match err {
            Error::Parse { position, .. } => assert!(position.starts_with("line 1")),
            other => panic!("{other}"),
        }
    }

    #[test]
    fn text_for_multichar_names() {
        let c = AlgebraContext::new(&[("e1", 0), ("e2", 0)], 4).unwrap();
        let x = gen(&c, "e1").unwrap().bracket(&gen(&c, "e2").unwrap()).unwrap();
        assert_eq!(render_text(&x), "e1·e2 - e2·e1");
    }
}
