//! Finite categories: objects, arrows with identities, and a composition
//! table over composable pairs.
//!
//! A [`FiniteCategory`] is immutable once built. It can come from one of
//! three presentations:
//!
//! * [`FiniteCategory::thin`]: the preorder closure of a generator graph,
//!   with at most one arrow per ordered pair of objects;
//! * [`FiniteCategory::free`]: every nonempty path of an acyclic multigraph;
//! * [`FiniteCategory::explicit`]: an arbitrary category given by its full
//!   composition table.
//!
//! Arrows are stored sorted by id, so comparing two [`ArrowIx`] handles
//! compares the ids lexicographically. This is the canonical arrow order used
//! for bivector orientation downstream.

mod build;
mod validate;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

pub use build::Edge;
pub use validate::Violation;

/// Prefix reserved for identity arrow ids.
pub const IDENTITY_PREFIX: &str = "id:";

/// Handle to an object of a [`FiniteCategory`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectIx(pub(crate) usize);

impl ObjectIx {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Handle to an arrow of a [`FiniteCategory`]. Ordering follows arrow ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArrowIx(pub(crate) usize);

impl ArrowIx {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Explicit,
    Thin,
    Free,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Explicit => "explicit",
            Mode::Thin => "thin",
            Mode::Free => "free",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub dom: ObjectIx,
    pub cod: ObjectIx,
    pub is_identity: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CategoryError {
    #[error("invalid id {id:?}: {reason}")]
    InvalidId { id: String, reason: &'static str },
    #[error("duplicate object id {0:?}")]
    DuplicateObject(String),
    #[error("duplicate arrow id {0:?}")]
    DuplicateArrow(String),
    #[error("unknown object {0:?}")]
    UnknownObject(String),
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("duplicate composition entry for ({f}, {g})")]
    DuplicateEntry { f: String, g: String },
    #[error("generators {first:?} and {second:?} both join {dom:?} to {cod:?} in a thin category")]
    ParallelGenerators {
        first: String,
        second: String,
        dom: String,
        cod: String,
    },
    #[error("objects {a:?} and {b:?} reach each other; a thin category must be antisymmetric")]
    NontrivialCycle { a: String, b: String },
    #[error("generator graph has a directed cycle through {cycle:?}")]
    CyclicGraph { cycle: Vec<String> },
    #[error("{f} and {g} are not composable (cod({f}) != dom({g}))")]
    NotComposable { f: String, g: String },
    #[error("category fails {} axiom check(s); first: {}", .0.len(), .0[0])]
    AxiomViolation(Vec<Violation>),
}

/// An immutable finite category.
#[derive(Debug, Clone)]
pub struct FiniteCategory {
    mode: Mode,
    objects: Vec<String>,
    object_index: HashMap<String, ObjectIx>,
    arrows: Vec<Arrow>,
    arrow_index: HashMap<String, ArrowIx>,
    identities: Vec<ArrowIx>,
    table: HashMap<(ArrowIx, ArrowIx), ArrowIx>,
}

/// The identity arrow id of an object.
pub fn identity_id(object: &str) -> String {
    format!("{IDENTITY_PREFIX}{object}")
}

fn check_token(id: &str) -> Result<(), CategoryError> {
    if id.is_empty() {
        return Err(CategoryError::InvalidId {
            id: id.to_owned(),
            reason: "ids must be nonempty",
        });
    }
    if id.starts_with(IDENTITY_PREFIX) {
        return Err(CategoryError::InvalidId {
            id: id.to_owned(),
            reason: "the prefix \"id:\" is reserved for identities",
        });
    }
    Ok(())
}

impl FiniteCategory {
    /// Assembles a category from its parts without checking any axiom.
    ///
    /// `arrows` lists the non-identity arrows as `(id, dom, cod)`; one identity
    /// per object is added automatically. `entries` is taken verbatim as the
    /// composition table: each `(f, g, r)` means `r = g∘f`, and arrow names may
    /// refer to identities through their `id:<object>` ids. Nothing is filled
    /// in, so a table may be incomplete or inconsistent; use
    /// [`validate_axioms`](Self::validate_axioms) to inspect it.
    pub fn from_raw_parts<O, A, E>(
        mode: Mode,
        objects: O,
        arrows: A,
        entries: E,
    ) -> Result<Self, CategoryError>
    where
        O: IntoIterator,
        O::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
        E: IntoIterator<Item = (String, String, String)>,
    {
        let objects: Vec<String> = objects.into_iter().map(Into::into).collect();
        let mut object_index = HashMap::with_capacity(objects.len());
        for (i, o) in objects.iter().enumerate() {
            check_token(o)?;
            if object_index.insert(o.clone(), ObjectIx(i)).is_some() {
                return Err(CategoryError::DuplicateObject(o.clone()));
            }
        }
        let lookup = |name: &str| {
            object_index
                .get(name)
                .copied()
                .ok_or_else(|| CategoryError::UnknownObject(name.to_owned()))
        };

        let mut raw: Vec<Arrow> = objects
            .iter()
            .enumerate()
            .map(|(i, o)| Arrow {
                id: identity_id(o),
                dom: ObjectIx(i),
                cod: ObjectIx(i),
                is_identity: true,
            })
            .collect();
        for (id, dom, cod) in arrows {
            check_token(&id)?;
            raw.push(Arrow {
                dom: lookup(&dom)?,
                cod: lookup(&cod)?,
                id,
                is_identity: false,
            });
        }
        raw.sort_by(|a, b| a.id.cmp(&b.id));
        if let Some(w) = raw.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(CategoryError::DuplicateArrow(w[0].id.clone()));
        }

        let arrow_index: HashMap<String, ArrowIx> = raw
            .iter()
            .enumerate()
            .map(|(i, a)| (a.id.clone(), ArrowIx(i)))
            .collect();
        let mut identities = vec![ArrowIx(0); objects.len()];
        for (i, a) in raw.iter().enumerate() {
            if a.is_identity {
                identities[a.dom.0] = ArrowIx(i);
            }
        }

        let resolve = |name: &str| {
            arrow_index
                .get(name)
                .copied()
                .ok_or_else(|| CategoryError::UnknownArrow(name.to_owned()))
        };
        let mut table = HashMap::new();
        for (f, g, r) in entries {
            let key = (resolve(&f)?, resolve(&g)?);
            let value = resolve(&r)?;
            if table.insert(key, value).is_some() {
                return Err(CategoryError::DuplicateEntry { f, g });
            }
        }

        Ok(FiniteCategory {
            mode,
            objects,
            object_index,
            arrows: raw,
            arrow_index,
            identities,
            table,
        })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> impl ExactSizeIterator<Item = ObjectIx> + '_ {
        (0..self.objects.len()).map(ObjectIx)
    }

    pub fn object_name(&self, o: ObjectIx) -> &str {
        &self.objects[o.0]
    }

    pub fn object(&self, name: &str) -> Option<ObjectIx> {
        self.object_index.get(name).copied()
    }

    /// All arrows, identities included, in canonical (id) order.
    pub fn arrows(&self) -> impl ExactSizeIterator<Item = ArrowIx> + '_ {
        (0..self.arrows.len()).map(ArrowIx)
    }

    /// Non-identity arrows in canonical order.
    pub fn non_identity_arrows(&self) -> impl Iterator<Item = ArrowIx> + '_ {
        self.arrows().filter(|&a| !self.arrows[a.0].is_identity)
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn non_identity_count(&self) -> usize {
        self.arrows.len() - self.objects.len()
    }

    pub fn arrow(&self, a: ArrowIx) -> &Arrow {
        &self.arrows[a.0]
    }

    pub fn arrow_id(&self, a: ArrowIx) -> &str {
        &self.arrows[a.0].id
    }

    /// Looks an arrow up by id.
    pub fn arrow_named(&self, id: &str) -> Option<ArrowIx> {
        self.arrow_index.get(id).copied()
    }

    pub fn resolve(&self, id: &str) -> Result<ArrowIx, CategoryError> {
        self.arrow_named(id)
            .ok_or_else(|| CategoryError::UnknownArrow(id.to_owned()))
    }

    pub fn dom(&self, a: ArrowIx) -> ObjectIx {
        self.arrows[a.0].dom
    }

    pub fn cod(&self, a: ArrowIx) -> ObjectIx {
        self.arrows[a.0].cod
    }

    pub fn is_identity(&self, a: ArrowIx) -> bool {
        self.arrows[a.0].is_identity
    }

    pub fn identity(&self, o: ObjectIx) -> ArrowIx {
        self.identities[o.0]
    }

    /// `cod(f) = dom(g)`, i.e. `g∘f` is required to exist.
    pub fn composable(&self, f: ArrowIx, g: ArrowIx) -> bool {
        self.cod(f) == self.dom(g)
    }

    /// Raw table lookup for `g∘f`; `None` when the table has no entry.
    pub fn composite(&self, f: ArrowIx, g: ArrowIx) -> Option<ArrowIx> {
        self.table.get(&(f, g)).copied()
    }

    /// Returns `g∘f`.
    pub fn compose(&self, f: ArrowIx, g: ArrowIx) -> Result<ArrowIx, CategoryError> {
        let not_composable = || CategoryError::NotComposable {
            f: self.arrow_id(f).to_owned(),
            g: self.arrow_id(g).to_owned(),
        };
        if !self.composable(f, g) {
            return Err(not_composable());
        }
        self.composite(f, g).ok_or_else(not_composable)
    }

    /// [`compose`](Self::compose) on arrow ids.
    pub fn compose_ids(&self, f: &str, g: &str) -> Result<&str, CategoryError> {
        let r = self.compose(self.resolve(f)?, self.resolve(g)?)?;
        Ok(self.arrow_id(r))
    }

    /// Table entries `(f, g, g∘f)` in canonical order.
    pub fn table_entries(&self) -> Vec<(ArrowIx, ArrowIx, ArrowIx)> {
        let mut entries: Vec<_> = self.table.iter().map(|(&(f, g), &r)| (f, g, r)).collect();
        entries.sort_unstable();
        entries
    }

    /// Table entries by id, suitable for feeding back into
    /// [`from_raw_parts`](Self::from_raw_parts).
    pub fn table_entry_ids(&self) -> Vec<(String, String, String)> {
        self.table_entries()
            .into_iter()
            .map(|(f, g, r)| {
                (
                    self.arrow_id(f).to_owned(),
                    self.arrow_id(g).to_owned(),
                    self.arrow_id(r).to_owned(),
                )
            })
            .collect()
    }

    /// Non-identity arrows as `(id, dom, cod)` names.
    pub fn arrow_triples(&self) -> Vec<(String, String, String)> {
        self.non_identity_arrows()
            .map(|a| {
                let arrow = self.arrow(a);
                (
                    arrow.id.clone(),
                    self.object_name(arrow.dom).to_owned(),
                    self.object_name(arrow.cod).to_owned(),
                )
            })
            .collect()
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }
}
