//! Scalar-plus-bivector multivectors with signed coefficients.
//!
//! Blades are stored in canonical orientation (`first < second`); a wedge
//! built in the opposite order carries a negated coefficient. Zero
//! coefficients are never stored, so structural equality is algebraic
//! equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg};

use num_traits::{One, Zero};

/// A canonically oriented bivector `first ∧ second` with `first < second`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Blade2<A> {
    first: A,
    second: A,
}

impl<A: Ord> Blade2<A> {
    /// Orients `a ∧ b`; returns the blade and whether the orientation was
    /// flipped. `None` when `a == b`.
    pub fn oriented(a: A, b: A) -> Option<(Self, bool)> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some((Blade2 { first: a, second: b }, false)),
            std::cmp::Ordering::Greater => Some((Blade2 { first: b, second: a }, true)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn first(&self) -> &A {
        &self.first
    }

    pub fn second(&self) -> &A {
        &self.second
    }
}

/// `scalar + Σ coefficient · blade`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multivector<K, A> {
    scalar: K,
    blades: BTreeMap<Blade2<A>, K>,
}

impl<K: Zero, A: Ord> Default for Multivector<K, A> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Zero, A: Ord> Multivector<K, A> {
    pub fn zero() -> Self {
        Multivector {
            scalar: K::zero(),
            blades: BTreeMap::new(),
        }
    }

    pub fn scalar(value: K) -> Self {
        Multivector {
            scalar: value,
            blades: BTreeMap::new(),
        }
    }

    pub fn scalar_part(&self) -> &K {
        &self.scalar
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero() && self.blades.is_empty()
    }

    pub fn is_scalar(&self) -> bool {
        self.blades.is_empty()
    }

    /// Blades with their nonzero coefficients, in canonical order.
    pub fn blades(&self) -> impl ExactSizeIterator<Item = (&Blade2<A>, &K)> {
        self.blades.iter()
    }
}

impl<K, A> Multivector<K, A>
where
    K: Zero + Clone + Neg<Output = K>,
    A: Ord + Clone,
{
    /// `coefficient · (a ∧ b)`; zero when `a == b`.
    pub fn wedge_scaled(a: A, b: A, coefficient: K) -> Self {
        let mut out = Self::zero();
        if let Some((blade, flipped)) = Blade2::oriented(a, b) {
            let c = if flipped { -coefficient } else { coefficient };
            if !c.is_zero() {
                out.blades.insert(blade, c);
            }
        }
        out
    }

    /// The coefficient of `a ∧ b`, signed by the requested orientation.
    pub fn coefficient(&self, a: A, b: A) -> K {
        match Blade2::oriented(a, b) {
            None => K::zero(),
            Some((blade, flipped)) => {
                let c = self.blades.get(&blade).cloned().unwrap_or_else(K::zero);
                if flipped {
                    -c
                } else {
                    c
                }
            }
        }
    }
}

impl<K, A> Add for Multivector<K, A>
where
    K: Zero + Clone,
    A: Ord,
{
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self.scalar = self.scalar + rhs.scalar;
        for (blade, c) in rhs.blades {
            let merged = match self.blades.remove(&blade) {
                Some(existing) => existing + c,
                None => c,
            };
            if !merged.is_zero() {
                self.blades.insert(blade, merged);
            }
        }
        self
    }
}

impl<K, A> Neg for Multivector<K, A>
where
    K: Neg<Output = K>,
    A: Ord,
{
    type Output = Self;

    fn neg(self) -> Self {
        Multivector {
            scalar: -self.scalar,
            blades: self.blades.into_iter().map(|(b, c)| (b, -c)).collect(),
        }
    }
}

impl<K, A> fmt::Display for Multivector<K, A>
where
    K: Zero + One + Clone + PartialEq + Neg<Output = K> + fmt::Display,
    A: fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if !self.scalar.is_zero() {
            write!(f, "{}", self.scalar)?;
            wrote = true;
        }
        for (blade, c) in &self.blades {
            if wrote {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "({} ∧ {})", blade.first, blade.second)?;
            } else if (-c.clone()).is_one() {
                write!(f, "-({} ∧ {})", blade.first, blade.second)?;
            } else {
                write!(f, "{c}·({} ∧ {})", blade.first, blade.second)?;
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}
