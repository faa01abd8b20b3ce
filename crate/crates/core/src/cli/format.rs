//! JSON presentation files.
//!
//! ```json
//! {
//!   "generators": [{"name": "x", "degree": 1, "in_subalgebra": false}],
//!   "relations": [[["1/1", ["y", "x"]], ["-1/1", ["x", "y"]]]],
//!   "delta": {"x": [["1/1", ["x"], []], ["1/1", [], ["x"]]]},
//!   "max_degree": 6
//! }
//! ```
//!
//! Within a degree, generators keep their listing order.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freealg::{parse_scalar, Poly, TensorPoly};
use crate::presentation::{GeneratorSpec, Presentation};

pub const DEFAULT_MAX_DEGREE: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorEntry {
    pub name: String,
    pub degree: u32,
    #[serde(default)]
    pub in_subalgebra: bool,
}

pub type Term = (String, Vec<String>);
pub type TensorTerm = (String, Vec<String>, Vec<String>);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub generators: Vec<GeneratorEntry>,
    #[serde(default)]
    pub relations: Vec<Vec<Term>>,
    #[serde(default)]
    pub delta: BTreeMap<String, Vec<TensorTerm>>,
    #[serde(default)]
    pub max_degree: Option<u32>,
}

impl PresentationFile {
    pub fn parse(src: &str) -> Result<Self> {
        serde_json::from_str(src).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Builds the presentation; `max_degree` overrides the file's bound.
    pub fn to_presentation(&self, max_degree: Option<u32>) -> Result<Presentation> {
        let specs: Vec<GeneratorSpec> = self
            .generators
            .iter()
            .map(|g| GeneratorSpec::new(&g.name, g.degree, g.in_subalgebra))
            .collect();
        let bound = max_degree.or(self.max_degree).unwrap_or(DEFAULT_MAX_DEGREE);
        let mut p = Presentation::new(&specs, bound)?;
        for (i, rel) in self.relations.iter().enumerate() {
            let mut f = Poly::zero();
            for (j, (c, names)) in rel.iter().enumerate() {
                let at = |e: Error| Error::Parse(format!("relations[{i}][{j}]: {e}"));
                let c = parse_scalar(c).map_err(at)?;
                f.add_term(p.alphabet().parse_word(names).map_err(at)?, c);
            }
            p.add_relation(f);
        }
        for (name, terms) in &self.delta {
            let mut t = TensorPoly::zero();
            for (j, (c, left, right)) in terms.iter().enumerate() {
                let at = |e: Error| Error::Parse(format!("delta.{name}[{j}]: {e}"));
                let c = parse_scalar(c).map_err(at)?;
                let left = p.alphabet().parse_word(left).map_err(at)?;
                let right = p.alphabet().parse_word(right).map_err(at)?;
                t.add_term(left, right, c);
            }
            p.set_delta(name, t)
                .map_err(|e| Error::Parse(format!("delta.{name}: {e}")))?;
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEIS: &str = r#"{
        "generators": [{"name": "x", "degree": 1}, {"name": "y", "degree": 1}],
        "relations": [
            [["1/1", ["y", "x", "x"]], ["-2/1", ["x", "y", "x"]], ["1/1", ["x", "x", "y"]]]
        ],
        "delta": {
            "x": [["1/1", ["x"], []], ["1/1", [], ["x"]]],
            "y": [["1/1", ["y"], []], ["1/1", [], ["y"]]]
        },
        "max_degree": 4
    }"#;

    #[test]
    fn parses_presentation() {
        let f = PresentationFile::parse(HEIS).unwrap();
        let p = f.to_presentation(None).unwrap();
        assert_eq!(p.bound(), 4);
        assert_eq!(p.relations().len(), 1);
        assert_eq!(p.relations()[0].len(), 3);
        assert_eq!(f.to_presentation(Some(6)).unwrap().bound(), 6);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(PresentationFile::parse("{").is_err());
        assert!(PresentationFile::parse(r#"{"generators": [], "extra": 1}"#).is_err());
        let bad_scalar = HEIS.replace("-2/1", "-2.0");
        let e = PresentationFile::parse(&bad_scalar)
            .unwrap()
            .to_presentation(None)
            .unwrap_err();
        assert!(e.to_string().contains("relations[0][1]"), "{e}");
        let bad_name = HEIS.replace(r#"["x", "y", "x"]"#, r#"["x", "q", "x"]"#);
        assert!(PresentationFile::parse(&bad_name)
            .unwrap()
            .to_presentation(None)
            .is_err());
    }
}
