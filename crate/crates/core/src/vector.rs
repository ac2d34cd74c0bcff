//! The vector space of a category: non-identity arrows plus a zero vector,
//! with composition as a partial, noncommutative addition.
//!
//! The norm of a vector is the length of its shortest factorization into
//! atomic arrows. Atomic arrows are the ones that are not the composite of
//! two non-identity arrows other than themselves.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::category::{ArrowIx, FiniteCategory};

/// A vector: the zero vector `O` or a non-identity arrow.
///
/// `O` orders before every arrow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vector<A = ArrowIx> {
    Zero,
    Arrow(A),
}

impl<A> Vector<A> {
    pub fn is_zero(&self) -> bool {
        matches!(self, Vector::Zero)
    }

    pub fn as_arrow(&self) -> Option<&A> {
        match self {
            Vector::Zero => None,
            Vector::Arrow(a) => Some(a),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VectorError {
    #[error("{0} is an identity arrow, not a vector")]
    IdentityIsNotAVector(String),
    #[error("{f} ⊕ {g} is undefined (cod({f}) != dom({g}))")]
    Undefined { f: String, g: String },
    #[error("{f} ⊕ {g} = {result} is an identity arrow, outside the vector space")]
    CompositeIsIdentity { f: String, g: String, result: String },
    #[error("{} arrow(s) are not generated by the atomic basis: {}", .0.len(), .0.join(", "))]
    NotGenerated(Vec<String>),
    #[error("no vector l satisfies {f} = {g} ⊕ l")]
    NoDifference { f: String, g: String },
}

/// Wraps an arrow as a vector, rejecting identities.
pub fn vector(category: &FiniteCategory, a: ArrowIx) -> Result<Vector, VectorError> {
    if category.is_identity(a) {
        Err(VectorError::IdentityIsNotAVector(
            category.arrow_id(a).to_owned(),
        ))
    } else {
        Ok(Vector::Arrow(a))
    }
}

/// Every vector of the space: `O` followed by the non-identity arrows.
pub fn all_vectors(category: &FiniteCategory) -> Vec<Vector> {
    std::iter::once(Vector::Zero)
        .chain(category.non_identity_arrows().map(Vector::Arrow))
        .collect()
}

/// Human-readable name of a vector; `O` for zero.
pub fn vector_name(category: &FiniteCategory, v: Vector) -> &str {
    match v {
        Vector::Zero => "O",
        Vector::Arrow(a) => category.arrow_id(a),
    }
}

/// `f ⊕ g`: the composite `g∘f` when `cod(f) = dom(g)`, with `O` as a
/// two-sided unit.
pub fn vec_add(category: &FiniteCategory, f: Vector, g: Vector) -> Result<Vector, VectorError> {
    match (f, g) {
        (Vector::Zero, g) => Ok(g),
        (f, Vector::Zero) => Ok(f),
        (Vector::Arrow(f), Vector::Arrow(g)) => {
            let name = |a| category.arrow_id(a).to_owned();
            let undefined = || VectorError::Undefined {
                f: name(f),
                g: name(g),
            };
            if !category.composable(f, g) {
                return Err(undefined());
            }
            let r = category.composite(f, g).ok_or_else(undefined)?;
            if category.is_identity(r) {
                return Err(VectorError::CompositeIsIdentity {
                    f: name(f),
                    g: name(g),
                    result: name(r),
                });
            }
            Ok(Vector::Arrow(r))
        }
    }
}

/// The atomic arrows of a category.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Basis {
    members: BTreeSet<ArrowIx>,
}

impl Basis {
    pub fn contains(&self, a: ArrowIx) -> bool {
        self.members.contains(&a)
    }

    /// Members in canonical order.
    pub fn iter(&self) -> impl ExactSizeIterator<Item = ArrowIx> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn ids<'c>(&self, category: &'c FiniteCategory) -> Vec<&'c str> {
        self.iter().map(|a| category.arrow_id(a)).collect()
    }
}

/// Non-identity arrows that are not `g∘f` for any non-identity `f`, `g`
/// both different from the result.
pub fn atomic_basis(category: &FiniteCategory) -> Basis {
    let mut composite = vec![false; category.arrow_count()];
    for (f, g, r) in category.table_entries() {
        if !category.is_identity(f) && !category.is_identity(g) && f != r && g != r {
            composite[r.index()] = true;
        }
    }
    Basis {
        members: category
            .non_identity_arrows()
            .filter(|a| !composite[a.index()])
            .collect(),
    }
}

/// Minimal factorization lengths of the non-identity arrows; `||O|| = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormTable {
    // indexed by arrow; 0 for identities
    lengths: Vec<u32>,
}

impl NormTable {
    pub fn norm(&self, v: Vector) -> u32 {
        match v {
            Vector::Zero => 0,
            Vector::Arrow(a) => self.lengths[a.index()],
        }
    }

    /// `(arrow, length)` for every non-identity arrow, in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (ArrowIx, u32)> + '_ {
        self.lengths
            .iter()
            .enumerate()
            .filter(|&(_, &n)| n > 0)
            .map(|(i, &n)| (ArrowIx(i), n))
    }
}

/// Breadth-first search from the basis. Depth one holds the basis arrows; an
/// arrow `r` reached at depth `d` reaches `e∘r` at depth `d + 1` for each
/// basis arrow `e` with `dom(e) = cod(r)`.
pub fn compute_norms(category: &FiniteCategory, basis: &Basis) -> Result<NormTable, VectorError> {
    let mut basis_from = vec![Vec::new(); category.object_count()];
    for e in basis.iter() {
        basis_from[category.dom(e).index()].push(e);
    }
    let mut lengths = vec![0u32; category.arrow_count()];
    let mut queue: VecDeque<ArrowIx> = VecDeque::new();
    for e in basis.iter() {
        lengths[e.index()] = 1;
        queue.push_back(e);
    }
    while let Some(r) = queue.pop_front() {
        let depth = lengths[r.index()];
        for &e in &basis_from[category.cod(r).index()] {
            let Some(next) = category.composite(r, e) else {
                continue;
            };
            if !category.is_identity(next) && lengths[next.index()] == 0 {
                lengths[next.index()] = depth + 1;
                queue.push_back(next);
            }
        }
    }
    let missing: Vec<String> = category
        .non_identity_arrows()
        .filter(|a| lengths[a.index()] == 0)
        .map(|a| category.arrow_id(a).to_owned())
        .collect();
    if missing.is_empty() {
        Ok(NormTable { lengths })
    } else {
        Err(VectorError::NotGenerated(missing))
    }
}

/// `d(f, g) = min ||l||` over vectors `l` (including `O`) with `f = g ⊕ l`.
pub fn distance(
    category: &FiniteCategory,
    norms: &NormTable,
    f: Vector,
    g: Vector,
) -> Result<u32, VectorError> {
    all_vectors(category)
        .into_iter()
        .filter(|&l| vec_add(category, g, l) == Ok(f))
        .map(|l| norms.norm(l))
        .min()
        .ok_or_else(|| VectorError::NoDifference {
            f: vector_name(category, f).to_owned(),
            g: vector_name(category, g).to_owned(),
        })
}
