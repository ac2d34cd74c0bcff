use std::fmt;

use serde::Serialize;

use super::FiniteCategory;

/// One failed instance of a category axiom. Arrow names are ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `cod(f) = dom(g)` but the table has no entry for `g∘f`.
    MissingComposite { f: String, g: String },
    /// The table has an entry for a pair that is not composable.
    SpuriousComposite { f: String, g: String, result: String },
    /// `g∘f` does not run from `dom(f)` to `cod(g)`.
    EndpointMismatch { f: String, g: String, result: String },
    /// `k∘(g∘f) != (k∘g)∘f`.
    Associativity {
        f: String,
        g: String,
        k: String,
        left: String,
        right: String,
    },
    /// Composing with an identity changed the arrow.
    UnitLaw {
        arrow: String,
        identity: String,
        result: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingComposite { f, g } => write!(out, "missing composite {g}∘{f}"),
            Violation::SpuriousComposite { f, g, result } => {
                write!(out, "entry {g}∘{f} = {result} for a non-composable pair")
            }
            Violation::EndpointMismatch { f, g, result } => {
                write!(out, "{g}∘{f} = {result} has the wrong domain or codomain")
            }
            Violation::Associativity {
                f,
                g,
                k,
                left,
                right,
            } => write!(
                out,
                "associativity fails for ({f}, {g}, {k}): {k}∘({g}∘{f}) = {left} but ({k}∘{g})∘{f} = {right}"
            ),
            Violation::UnitLaw {
                arrow,
                identity,
                result,
            } => write!(
                out,
                "unit law fails: composing {arrow} with {identity} gives {result}"
            ),
        }
    }
}

impl FiniteCategory {
    /// Checks table totality and closure, endpoint consistency, the unit law
    /// and associativity, and lists every failing instance.
    pub fn validate_axioms(&self) -> Vec<Violation> {
        let id = |a| self.arrow_id(a).to_owned();
        let mut violations = Vec::new();

        for (f, g, r) in self.table_entries() {
            if !self.composable(f, g) {
                violations.push(Violation::SpuriousComposite {
                    f: id(f),
                    g: id(g),
                    result: id(r),
                });
            } else if self.dom(r) != self.dom(f) || self.cod(r) != self.cod(g) {
                violations.push(Violation::EndpointMismatch {
                    f: id(f),
                    g: id(g),
                    result: id(r),
                });
            }
        }

        let mut outgoing = vec![Vec::new(); self.object_count()];
        for a in self.arrows() {
            outgoing[self.dom(a).0].push(a);
        }
        for f in self.arrows() {
            for &g in &outgoing[self.cod(f).0] {
                if self.composite(f, g).is_none() {
                    violations.push(Violation::MissingComposite { f: id(f), g: id(g) });
                }
            }
        }

        for f in self.arrows() {
            let left = self.identity(self.dom(f));
            let right = self.identity(self.cod(f));
            for (a, b, unit) in [(left, f, left), (f, right, right)] {
                if let Some(r) = self.composite(a, b) {
                    if r != f {
                        violations.push(Violation::UnitLaw {
                            arrow: id(f),
                            identity: id(unit),
                            result: id(r),
                        });
                    }
                }
            }
        }

        for f in self.arrows() {
            for &g in &outgoing[self.cod(f).0] {
                let Some(gf) = self.composite(f, g) else {
                    continue;
                };
                for &k in &outgoing[self.cod(g).0] {
                    let Some(kg) = self.composite(g, k) else {
                        continue;
                    };
                    let (Some(left), Some(right)) = (self.composite(gf, k), self.composite(f, kg))
                    else {
                        // reported as missing (or spurious) above
                        continue;
                    };
                    if left != right {
                        violations.push(Violation::Associativity {
                            f: id(f),
                            g: id(g),
                            k: id(k),
                            left: id(left),
                            right: id(right),
                        });
                    }
                }
            }
        }
        violations
    }
}

#[cfg(test)]
mod tests {
    use crate::category::{Edge, FiniteCategory, Mode};

    fn po6() -> FiniteCategory {
        FiniteCategory::thin(
            &["a0", "a1", "a2", "a3", "a4", "a5"],
            &[
                Edge::new("e1", "a0", "a1"),
                Edge::new("e2", "a0", "a2"),
                Edge::new("e3", "a1", "a3"),
                Edge::new("e4", "a2", "a4"),
                Edge::new("e5", "a3", "a4"),
                Edge::new("e6", "a4", "a5"),
            ],
        )
        .unwrap()
    }

    fn rebuild(
        c: &FiniteCategory,
        edit: impl FnOnce(&mut Vec<(String, String, String)>),
    ) -> FiniteCategory {
        let mut entries = c.table_entry_ids();
        edit(&mut entries);
        FiniteCategory::from_raw_parts(
            Mode::Explicit,
            c.object_names().to_vec(),
            c.arrow_triples(),
            entries,
        )
        .unwrap()
    }

    #[test]
    fn redirected_composite_breaks_endpoints() {
        let c = rebuild(&po6(), |entries| {
            for e in entries.iter_mut() {
                if e.0 == "e2" && e.1 == "e4" {
                    e.2 = "a0->a3".into();
                }
            }
        });
        let report = c.validate_axioms();
        assert!(report.iter().any(|v| matches!(
            v,
            super::Violation::EndpointMismatch { f, g, .. } if f == "e2" && g == "e4"
        )));
    }

    #[test]
    fn removed_unit_entry_is_missing() {
        let c = rebuild(&po6(), |entries| {
            entries.retain(|e| !(e.0 == "id:a0" && e.1 == "e1"));
        });
        let report = c.validate_axioms();
        assert_eq!(report.len(), 1);
        assert!(matches!(&report[0], super::Violation::MissingComposite { f, g } if f == "id:a0" && g == "e1"));
    }

    #[test]
    fn spurious_entry_reported() {
        let c = rebuild(&po6(), |entries| {
            entries.push(("e1".into(), "e2".into(), "e1".into()));
        });
        assert!(c
            .validate_axioms()
            .iter()
            .any(|v| matches!(v, super::Violation::SpuriousComposite { .. })));
    }

    #[test]
    fn associativity_violation_with_consistent_endpoints() {
        let e = |id: &str, d: &str, c: &str| Edge::new(id, d, c);
        let t = |f: &str, g: &str, r: &str| (f.to_owned(), g.to_owned(), r.to_owned());
        let c = FiniteCategory::explicit_unvalidated(
            &["a", "b", "c", "d"],
            &[
                e("f", "a", "b"),
                e("g", "b", "c"),
                e("k", "c", "d"),
                e("gf", "a", "c"),
                e("kg", "b", "d"),
                e("p", "a", "d"),
                e("q", "a", "d"),
            ],
            &[
                t("f", "g", "gf"),
                t("g", "k", "kg"),
                t("gf", "k", "p"),
                t("f", "kg", "q"),
            ],
        )
        .unwrap();
        let report = c.validate_axioms();
        assert_eq!(report.len(), 1, "{report:?}");
        assert!(matches!(report[0], super::Violation::Associativity { .. }));
    }
}
