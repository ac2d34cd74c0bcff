//! Graphviz export.

use std::fmt::Write;

use crate::category::FiniteCategory;
use crate::vector::{atomic_basis, NormTable, Vector};

#[derive(Debug, Clone, Copy, Default)]
pub struct DotOptions {
    /// Draw only the atomic arrows.
    pub basis_only: bool,
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Objects become nodes and non-identity arrows become edges labelled with
/// their id, plus their norm when `norms` is given.
pub fn export_dot(category: &FiniteCategory, norms: Option<&NormTable>, options: DotOptions) -> String {
    let basis = options.basis_only.then(|| atomic_basis(category));
    let mut out = String::from("digraph category {\n");
    for o in category.objects() {
        writeln!(out, "    {};", quote(category.object_name(o))).unwrap();
    }
    for a in category.non_identity_arrows() {
        if basis.as_ref().is_some_and(|b| !b.contains(a)) {
            continue;
        }
        let id = category.arrow_id(a);
        let label = match norms {
            Some(n) => format!("{id} (norm {})", n.norm(Vector::Arrow(a))),
            None => id.to_owned(),
        };
        writeln!(
            out,
            "    {} -> {} [label={}];",
            quote(category.object_name(category.dom(a))),
            quote(category.object_name(category.cod(a))),
            quote(&label)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::document::{builtin_example, load_category};
    use crate::vector::compute_norms;

    fn count(text: &str) -> (usize, usize) {
        let edges = text.lines().filter(|l| l.contains(" -> ")).count();
        let nodes = text
            .lines()
            .filter(|l| l.trim_end().ends_with("\";"))
            .count();
        (nodes, edges)
    }

    #[test]
    fn po6_views() {
        let c = load_category(&builtin_example("po6").unwrap().to_json()).unwrap();
        let full = export_dot(&c, None, DotOptions::default());
        assert_eq!(count(&full), (6, 13));
        let basis = export_dot(&c, None, DotOptions { basis_only: true });
        assert_eq!(count(&basis), (6, 6));
        let norms = compute_norms(&c, &atomic_basis(&c)).unwrap();
        let labelled = export_dot(&c, Some(&norms), DotOptions::default());
        assert!(labelled.contains(r#""a0" -> "a5" [label="a0->a5 (norm 3)"];"#));
    }

    #[test]
    fn empty_category() {
        let c = FiniteCategory::thin(&[] as &[&str], &[]).unwrap();
        assert_eq!(export_dot(&c, None, DotOptions::default()), "digraph category {\n}\n");
    }

    #[test]
    fn quotes_are_escaped() {
        assert_eq!(quote(r#"a"b\c"#), r#""a\"b\\c""#);
    }
}
