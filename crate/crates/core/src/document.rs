//! JSON category documents.
//!
//! ```json
//! {
//!   "mode": "thin",
//!   "objects": ["a", "b", "c"],
//!   "arrows": [{"id": "f", "dom": "a", "cod": "b"}, {"id": "g", "dom": "b", "cod": "c"}]
//! }
//! ```
//!
//! In `thin` and `free` mode the arrows are generators. In `explicit` mode
//! they are all the non-identity arrows, and `compositions` lists
//! `{"f", "g", "result"}` records meaning `result = g∘f` for exactly the
//! composable non-identity pairs. Entries with identities may be given and are
//! otherwise filled in by the unit law.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::category::{identity_id, Edge, FiniteCategory, Mode, IDENTITY_PREFIX};
use crate::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{location}: {message}")]
pub struct ParseError {
    pub location: String,
    pub message: String,
}

impl ParseError {
    fn at(location: impl Into<String>, message: impl Into<String>) -> Self {
        ParseError {
            location: location.into(),
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowRecord {
    pub id: String,
    pub dom: String,
    pub cod: String,
}

/// `result = g∘f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompositionRecord {
    pub f: String,
    pub g: String,
    pub result: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    mode: String,
    objects: Vec<String>,
    arrows: Vec<ArrowRecord>,
    compositions: Option<Vec<CompositionRecord>>,
}

/// A structurally valid presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryDocument {
    pub mode: Mode,
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowRecord>,
    pub compositions: Vec<CompositionRecord>,
}

#[derive(Serialize)]
struct DocumentOut<'a> {
    mode: &'a str,
    objects: &'a [String],
    arrows: &'a [ArrowRecord],
    #[serde(skip_serializing_if = "Option::is_none")]
    compositions: Option<&'a [CompositionRecord]>,
}

fn check_id(location: String, id: &str) -> Result<(), ParseError> {
    if id.is_empty() {
        Err(ParseError::at(location, "id must be nonempty"))
    } else if id.starts_with(IDENTITY_PREFIX) {
        Err(ParseError::at(
            location,
            format!("id {id:?} uses the reserved prefix {IDENTITY_PREFIX:?}"),
        ))
    } else {
        Ok(())
    }
}

/// Parses and structurally checks a document. Category axioms are checked
/// later, when the document is built.
pub fn parse_document(text: &str) -> Result<CategoryDocument, ParseError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| {
        ParseError::at(
            format!("line {}, column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;

    let mode = match raw.mode.as_str() {
        "explicit" => Mode::Explicit,
        "thin" => Mode::Thin,
        "free" => Mode::Free,
        other => {
            return Err(ParseError::at(
                "mode",
                format!("unknown mode {other:?}; expected explicit, thin or free"),
            ))
        }
    };

    let mut objects = HashSet::new();
    for (i, o) in raw.objects.iter().enumerate() {
        check_id(format!("objects[{i}]"), o)?;
        if !objects.insert(o.as_str()) {
            return Err(ParseError::at(
                format!("objects[{i}]"),
                format!("duplicate object id {o:?}"),
            ));
        }
    }

    // arrow id -> (dom, cod); identities included for composition lookups
    let mut endpoints: HashMap<String, (&str, &str)> = HashMap::new();
    for o in &raw.objects {
        endpoints.insert(identity_id(o), (o, o));
    }
    for (i, a) in raw.arrows.iter().enumerate() {
        check_id(format!("arrows[{i}].id"), &a.id)?;
        for (field, name) in [("dom", &a.dom), ("cod", &a.cod)] {
            if !objects.contains(name.as_str()) {
                return Err(ParseError::at(
                    format!("arrows[{i}].{field}"),
                    format!("unknown object {name:?}"),
                ));
            }
        }
        if endpoints
            .insert(a.id.clone(), (a.dom.as_str(), a.cod.as_str()))
            .is_some()
        {
            return Err(ParseError::at(
                format!("arrows[{i}].id"),
                format!("duplicate arrow id {:?}", a.id),
            ));
        }
    }

    let compositions = match (mode, raw.compositions) {
        (Mode::Explicit, compositions) => compositions.unwrap_or_default(),
        (_, None) => Vec::new(),
        (_, Some(_)) => {
            return Err(ParseError::at(
                "compositions",
                format!("compositions are only allowed in explicit mode, not {mode}"),
            ))
        }
    };

    let mut covered = HashSet::new();
    for (i, c) in compositions.iter().enumerate() {
        let mut ends = Vec::with_capacity(3);
        for (field, name) in [("f", &c.f), ("g", &c.g), ("result", &c.result)] {
            let e = endpoints.get(name).ok_or_else(|| {
                ParseError::at(
                    format!("compositions[{i}].{field}"),
                    format!("unknown arrow {name:?}"),
                )
            })?;
            ends.push(*e);
        }
        if ends[0].1 != ends[1].0 {
            return Err(ParseError::at(
                format!("compositions[{i}]"),
                format!("{} and {} are not composable", c.f, c.g),
            ));
        }
        if !covered.insert((c.f.as_str(), c.g.as_str())) {
            return Err(ParseError::at(
                format!("compositions[{i}]"),
                format!("duplicate entry for {}∘{}", c.g, c.f),
            ));
        }
    }
    if mode == Mode::Explicit {
        for f in &raw.arrows {
            for g in raw.arrows.iter().filter(|g| g.dom == f.cod) {
                if !covered.contains(&(f.id.as_str(), g.id.as_str())) {
                    return Err(ParseError::at(
                        "compositions",
                        format!("incomplete table: no entry for {}∘{}", g.id, f.id),
                    ));
                }
            }
        }
    }

    Ok(CategoryDocument {
        mode,
        objects: raw.objects,
        arrows: raw.arrows,
        compositions,
    })
}

impl CategoryDocument {
    fn edges(&self) -> Vec<Edge> {
        self.arrows
            .iter()
            .map(|a| Edge::new(&a.id, &a.dom, &a.cod))
            .collect()
    }

    fn triples(&self) -> Vec<(String, String, String)> {
        self.compositions
            .iter()
            .map(|c| (c.f.clone(), c.g.clone(), c.result.clone()))
            .collect()
    }

    /// Builds the category; explicit tables must pass the axiom check.
    pub fn build(&self) -> Result<FiniteCategory, Error> {
        let edges = self.edges();
        Ok(match self.mode {
            Mode::Thin => FiniteCategory::thin(&self.objects, &edges)?,
            Mode::Free => FiniteCategory::free(&self.objects, &edges)?,
            Mode::Explicit => FiniteCategory::explicit(&self.objects, &edges, &self.triples())?,
        })
    }

    /// Builds the category without the axiom check on explicit tables.
    pub fn build_unvalidated(&self) -> Result<FiniteCategory, Error> {
        match self.mode {
            Mode::Explicit => Ok(FiniteCategory::explicit_unvalidated(
                &self.objects,
                &self.edges(),
                &self.triples(),
            )?),
            _ => self.build(),
        }
    }

    /// Pretty JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let out = DocumentOut {
            mode: self.mode.as_str(),
            objects: &self.objects,
            arrows: &self.arrows,
            compositions: (self.mode == Mode::Explicit).then_some(self.compositions.as_slice()),
        };
        let value = serde_json::to_value(out).expect("document serializes");
        let mut text = serde_json::to_string_pretty(&value).expect("value serializes");
        text.push('\n');
        text
    }
}

impl fmt::Display for CategoryDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

/// Parses a document and builds its category.
pub fn load_category(text: &str) -> Result<FiniteCategory, Error> {
    parse_document(text)?.build()
}

/// Names accepted by [`builtin_example`].
pub const EXAMPLE_NAMES: &[&str] = &["po6", "path3", "parallel2", "iso2"];

/// Built-in documents:
///
/// * `po6`: six objects `a0..a5` with generators
///   `e1: a0→a1, e2: a0→a2, e3: a1→a3, e4: a2→a4, e5: a3→a4, e6: a4→a5`;
/// * `path3`: the free category on `x →p y →q z`;
/// * `parallel2`: the free category on two parallel edges `u, v: a → b`;
/// * `iso2`: an explicit pair of inverse arrows `f: a → b`, `g: b → a`.
pub fn builtin_example(name: &str) -> Option<CategoryDocument> {
    let arrows = |list: &[(&str, &str, &str)]| {
        list.iter()
            .map(|&(id, dom, cod)| ArrowRecord {
                id: id.into(),
                dom: dom.into(),
                cod: cod.into(),
            })
            .collect()
    };
    let objects = |list: &[&str]| list.iter().map(|o| o.to_string()).collect();
    let doc = match name {
        "po6" => CategoryDocument {
            mode: Mode::Thin,
            objects: objects(&["a0", "a1", "a2", "a3", "a4", "a5"]),
            arrows: arrows(&[
                ("e1", "a0", "a1"),
                ("e2", "a0", "a2"),
                ("e3", "a1", "a3"),
                ("e4", "a2", "a4"),
                ("e5", "a3", "a4"),
                ("e6", "a4", "a5"),
            ]),
            compositions: Vec::new(),
        },
        "path3" => CategoryDocument {
            mode: Mode::Free,
            objects: objects(&["x", "y", "z"]),
            arrows: arrows(&[("p", "x", "y"), ("q", "y", "z")]),
            compositions: Vec::new(),
        },
        "parallel2" => CategoryDocument {
            mode: Mode::Free,
            objects: objects(&["a", "b"]),
            arrows: arrows(&[("u", "a", "b"), ("v", "a", "b")]),
            compositions: Vec::new(),
        },
        "iso2" => CategoryDocument {
            mode: Mode::Explicit,
            objects: objects(&["a", "b"]),
            arrows: arrows(&[("f", "a", "b"), ("g", "b", "a")]),
            compositions: vec![
                CompositionRecord {
                    f: "f".into(),
                    g: "g".into(),
                    result: "id:a".into(),
                },
                CompositionRecord {
                    f: "g".into(),
                    g: "f".into(),
                    result: "id:b".into(),
                },
            ],
        },
        _ => return None,
    };
    Some(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXPLICIT_CHAIN: &str = r#"{
        "mode": "explicit",
        "objects": ["a", "b", "c"],
        "arrows": [
            {"id": "f", "dom": "a", "cod": "b"},
            {"id": "g", "dom": "b", "cod": "c"},
            {"id": "h", "dom": "a", "cod": "c"}
        ],
        "compositions": [{"f": "f", "g": "g", "result": "h"}]
    }"#;

    #[test]
    fn po6_document() {
        let text = builtin_example("po6").unwrap().to_json();
        let doc = parse_document(&text).unwrap();
        assert_eq!(doc.mode, Mode::Thin);
        assert_eq!(doc.objects.len(), 6);
        assert_eq!(doc.arrows.len(), 6);
        let c = load_category(&text).unwrap();
        assert_eq!(c.non_identity_count(), 13);
    }

    #[test]
    fn every_builtin_loads() {
        for name in EXAMPLE_NAMES {
            let doc = builtin_example(name).unwrap();
            let c = load_category(&doc.to_json()).unwrap();
            assert!(c.validate_axioms().is_empty(), "{name}");
        }
        assert!(builtin_example("nope").is_none());
    }

    #[test]
    fn explicit_chain_loads() {
        let c = load_category(EXPLICIT_CHAIN).unwrap();
        assert_eq!(c.compose_ids("f", "g").unwrap(), "h");
    }

    #[test]
    fn duplicate_arrow_id() {
        let err = parse_document(
            r#"{"mode": "thin", "objects": ["a", "b"],
                "arrows": [{"id": "f", "dom": "a", "cod": "b"}, {"id": "f", "dom": "a", "cod": "b"}]}"#,
        )
        .unwrap_err();
        assert_eq!(err.location, "arrows[1].id");
    }

    #[test]
    fn dangling_object() {
        let err = parse_document(
            r#"{"mode": "explicit", "objects": ["a"],
                "arrows": [{"id": "f", "dom": "a", "cod": "zz"}], "compositions": []}"#,
        )
        .unwrap_err();
        assert_eq!(err.location, "arrows[0].cod");
    }

    #[test]
    fn missing_composition_entry() {
        let text = EXPLICIT_CHAIN.replace(r#"{"f": "f", "g": "g", "result": "h"}"#, "");
        let err = parse_document(&text).unwrap_err();
        assert!(err.message.contains("incomplete table"), "{err}");
    }

    #[test]
    fn syntax_error_has_position() {
        let err = parse_document("{\n  \"mode\": ").unwrap_err();
        assert!(err.location.starts_with("line 2"), "{err}");
    }

    #[test]
    fn unknown_mode_and_stray_compositions() {
        let err = parse_document(r#"{"mode": "fuzzy", "objects": [], "arrows": []}"#).unwrap_err();
        assert_eq!(err.location, "mode");
        let err = parse_document(r#"{"mode": "thin", "objects": [], "arrows": [], "compositions": []}"#)
            .unwrap_err();
        assert_eq!(err.location, "compositions");
    }

    #[test]
    fn non_associative_table_is_an_axiom_violation() {
        let text = r#"{
            "mode": "explicit",
            "objects": ["a", "b", "c", "d"],
            "arrows": [
                {"id": "f", "dom": "a", "cod": "b"},
                {"id": "g", "dom": "b", "cod": "c"},
                {"id": "k", "dom": "c", "cod": "d"},
                {"id": "gf", "dom": "a", "cod": "c"},
                {"id": "kg", "dom": "b", "cod": "d"},
                {"id": "p", "dom": "a", "cod": "d"},
                {"id": "q", "dom": "a", "cod": "d"}
            ],
            "compositions": [
                {"f": "f", "g": "g", "result": "gf"},
                {"f": "g", "g": "k", "result": "kg"},
                {"f": "gf", "g": "k", "result": "p"},
                {"f": "f", "g": "kg", "result": "q"}
            ]
        }"#;
        let err = load_category(text).unwrap_err();
        assert!(matches!(
            err,
            Error::Category(crate::category::CategoryError::AxiomViolation(_))
        ));
        let unchecked = parse_document(text).unwrap().build_unvalidated().unwrap();
        assert_eq!(unchecked.validate_axioms().len(), 1);
    }

    #[test]
    fn json_keys_are_sorted() {
        let text = builtin_example("iso2").unwrap().to_json();
        let arrows = text.find("\"arrows\"").unwrap();
        let compositions = text.find("\"compositions\"").unwrap();
        let mode = text.find("\"mode\"").unwrap();
        let objects = text.find("\"objects\"").unwrap();
        assert!(arrows < compositions && compositions < mode && mode < objects);
        assert_eq!(parse_document(&text).unwrap(), builtin_example("iso2").unwrap());
    }
}
