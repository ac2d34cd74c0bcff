//! Inner, outer and geometric products of vectors.
//!
//! Products depend only on composability and norms, so they are written once
//! against [`NormedSpace`] and shared by finite categories ([`CatAlgebra`])
//! and the real-line backend.
//!
//! For vectors `f`, `g`:
//!
//! * `f·g = ||f||·||g||` when `g = f` or `cod(f) = dom(g)`, else `0`;
//! * `f∧g` is the blade `f ∧ g` (coefficient 1, area `||f||·||g||`) when
//!   `g != f` and `cod(f) != dom(g)`, else `0`;
//! * `fg = f·g + f∧g`.
//!
//! Anything involving `O` is zero.

use std::ops::{Add, Mul, Neg};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::category::{ArrowIx, FiniteCategory};
use crate::multivector::{Blade2, Multivector};
use crate::vector::{all_vectors, atomic_basis, compute_norms, Basis, NormTable, Vector, VectorError};

/// A space of arrows with a norm and a composability test.
pub trait NormedSpace {
    type Arrow: Clone + Ord;
    type Scalar: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = Self::Scalar>
        + Mul<Output = Self::Scalar>
        + Neg<Output = Self::Scalar>;

    /// `cod(f) = dom(g)`.
    fn composable(&self, f: &Self::Arrow, g: &Self::Arrow) -> bool;

    fn norm(&self, f: &Self::Arrow) -> Self::Scalar;
}

pub type SpaceVector<S> = Vector<<S as NormedSpace>::Arrow>;
pub type SpaceMultivector<S> = Multivector<<S as NormedSpace>::Scalar, <S as NormedSpace>::Arrow>;

fn both<A>(f: &Vector<A>, g: &Vector<A>) -> Option<(A, A)>
where
    A: Clone,
{
    Some((f.as_arrow()?.clone(), g.as_arrow()?.clone()))
}

pub fn inner<S: NormedSpace>(space: &S, f: &SpaceVector<S>, g: &SpaceVector<S>) -> S::Scalar {
    match both(f, g) {
        Some((f, g)) if f == g || space.composable(&f, &g) => space.norm(&f) * space.norm(&g),
        _ => S::Scalar::zero(),
    }
}

/// `f·g = g·f = 0`.
pub fn is_orthogonal<S: NormedSpace>(space: &S, f: &SpaceVector<S>, g: &SpaceVector<S>) -> bool {
    inner(space, f, g).is_zero() && inner(space, g, f).is_zero()
}

/// Non-zero `f`, `g` with `f = g` or both composites defined.
pub fn is_parallel<S: NormedSpace>(space: &S, f: &SpaceVector<S>, g: &SpaceVector<S>) -> bool {
    match both(f, g) {
        Some((f, g)) => f == g || (space.composable(&f, &g) && space.composable(&g, &f)),
        None => false,
    }
}

pub fn outer<S: NormedSpace>(space: &S, f: &SpaceVector<S>, g: &SpaceVector<S>) -> SpaceMultivector<S> {
    match both(f, g) {
        Some((f, g)) if f != g && !space.composable(&f, &g) => {
            Multivector::wedge_scaled(f, g, S::Scalar::one())
        }
        _ => Multivector::zero(),
    }
}

pub fn geometric<S: NormedSpace>(
    space: &S,
    f: &SpaceVector<S>,
    g: &SpaceVector<S>,
) -> SpaceMultivector<S> {
    Multivector::scalar(inner(space, f, g)) + outer(space, f, g)
}

/// `fg + gf`.
pub fn anticommutator<S: NormedSpace>(
    space: &S,
    f: &SpaceVector<S>,
    g: &SpaceVector<S>,
) -> SpaceMultivector<S> {
    geometric(space, f, g) + geometric(space, g, f)
}

/// `fg + gf` from the four-way case split on which composites exist,
/// without going through the geometric product.
pub fn anticommutator_by_cases<S: NormedSpace>(
    space: &S,
    f: &SpaceVector<S>,
    g: &SpaceVector<S>,
) -> SpaceMultivector<S> {
    let Some((f, g)) = both(f, g) else {
        return Multivector::zero();
    };
    let area = space.norm(&f) * space.norm(&g);
    let two = S::Scalar::one() + S::Scalar::one();
    if f == g {
        return Multivector::scalar(two * area);
    }
    match (space.composable(&f, &g), space.composable(&g, &f)) {
        (true, false) => Multivector::scalar(area) + Multivector::wedge_scaled(g, f, S::Scalar::one()),
        (true, true) => Multivector::scalar(two * area),
        (false, true) => Multivector::scalar(area) + Multivector::wedge_scaled(f, g, S::Scalar::one()),
        (false, false) => Multivector::zero(),
    }
}

/// `||first|| · ||second||`.
pub fn blade_area<S: NormedSpace>(space: &S, blade: &Blade2<S::Arrow>) -> S::Scalar {
    space.norm(blade.first()) * space.norm(blade.second())
}

/// A finite category together with its atomic basis and norms.
#[derive(Debug, Clone)]
pub struct CatAlgebra {
    category: FiniteCategory,
    basis: Basis,
    norms: NormTable,
}

impl NormedSpace for CatAlgebra {
    type Arrow = ArrowIx;
    type Scalar = i64;

    fn composable(&self, f: &ArrowIx, g: &ArrowIx) -> bool {
        self.category.composable(*f, *g)
    }

    fn norm(&self, f: &ArrowIx) -> i64 {
        i64::from(self.norms.norm(Vector::Arrow(*f)))
    }
}

pub type CatMultivector = Multivector<i64, ArrowIx>;

impl CatAlgebra {
    /// Computes the basis and norms; fails when some arrow is not generated.
    pub fn new(category: FiniteCategory) -> Result<Self, VectorError> {
        let basis = atomic_basis(&category);
        let norms = compute_norms(&category, &basis)?;
        Ok(CatAlgebra {
            category,
            basis,
            norms,
        })
    }

    pub fn category(&self) -> &FiniteCategory {
        &self.category
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn norms(&self) -> &NormTable {
        &self.norms
    }

    /// Looks up a vector by arrow id; `"O"` names the zero vector unless an
    /// arrow has that id.
    pub fn vector_named(&self, id: &str) -> Result<Vector, crate::Error> {
        match self.category.arrow_named(id) {
            Some(a) => Ok(crate::vector::vector(&self.category, a)?),
            None if id == "O" => Ok(Vector::Zero),
            None => Err(crate::category::CategoryError::UnknownArrow(id.to_owned()).into()),
        }
    }

    pub fn inner(&self, f: Vector, g: Vector) -> i64 {
        inner(self, &f, &g)
    }

    pub fn outer(&self, f: Vector, g: Vector) -> CatMultivector {
        outer(self, &f, &g)
    }

    pub fn geometric(&self, f: Vector, g: Vector) -> CatMultivector {
        geometric(self, &f, &g)
    }

    pub fn anticommutator(&self, f: Vector, g: Vector) -> CatMultivector {
        anticommutator(self, &f, &g)
    }

    pub fn is_orthogonal(&self, f: Vector, g: Vector) -> bool {
        is_orthogonal(self, &f, &g)
    }

    pub fn is_parallel(&self, f: Vector, g: Vector) -> bool {
        is_parallel(self, &f, &g)
    }

    /// Checks `e² = 1` on the basis and `fg = -gf` on every ordered pair of
    /// distinct, mutually orthogonal non-zero vectors.
    pub fn clifford_report(&self) -> CliffordReport {
        let name = |a: ArrowIx| self.category.arrow_id(a).to_owned();
        let mut report = CliffordReport::default();
        for e in self.basis.iter() {
            report.basis_checked += 1;
            let square = self.geometric(Vector::Arrow(e), Vector::Arrow(e));
            if square != Multivector::scalar(1) {
                report.square_failures.push(name(e));
            }
        }
        let vectors: Vec<ArrowIx> = self.category.non_identity_arrows().collect();
        for &f in &vectors {
            for &g in &vectors {
                let (vf, vg) = (Vector::Arrow(f), Vector::Arrow(g));
                if f == g || !self.is_orthogonal(vf, vg) {
                    continue;
                }
                report.orthogonal_pairs_checked += 1;
                if self.geometric(vf, vg) != -self.geometric(vg, vf) {
                    report.anticommutation_failures.push((name(f), name(g)));
                }
            }
        }
        report
    }

    /// Every vector, `O` first.
    pub fn vectors(&self) -> Vec<Vector> {
        all_vectors(&self.category)
    }

    /// Renders a multivector with arrow ids.
    pub fn render(&self, m: &CatMultivector) -> String {
        let mut parts = Vec::new();
        if *m.scalar_part() != 0 || m.is_scalar() {
            parts.push(m.scalar_part().to_string());
        }
        for (blade, c) in m.blades() {
            let wedge = format!(
                "{} ∧ {}",
                self.category.arrow_id(*blade.first()),
                self.category.arrow_id(*blade.second())
            );
            let term = match c {
                1 => wedge,
                -1 => format!("-({wedge})"),
                c => format!("{c}·({wedge})"),
            };
            parts.push(format!("{term} [area {}]", blade_area(self, blade)));
        }
        parts.join(" + ")
    }
}

/// Outcome of the two Clifford conditions. Failures are listed by arrow id.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CliffordReport {
    pub basis_checked: usize,
    pub square_failures: Vec<String>,
    pub orthogonal_pairs_checked: usize,
    pub anticommutation_failures: Vec<(String, String)>,
}

impl CliffordReport {
    pub fn holds(&self) -> bool {
        self.square_failures.is_empty() && self.anticommutation_failures.is_empty()
    }
}
