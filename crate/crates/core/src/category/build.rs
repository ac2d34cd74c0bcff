use std::collections::{HashMap, HashSet, VecDeque};

use super::{check_token, identity_id, CategoryError, FiniteCategory, Mode};

/// Separator between generator ids in the id of a free-category path.
///
/// The path that runs `p` and then `q` is named `q.p`, following the reading
/// order of `q∘p`.
pub const PATH_SEPARATOR: char = '.';

/// A generator edge `id: dom -> cod` of a presentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: String,
    pub dom: String,
    pub cod: String,
}

impl Edge {
    pub fn new(id: impl Into<String>, dom: impl Into<String>, cod: impl Into<String>) -> Self {
        Edge {
            id: id.into(),
            dom: dom.into(),
            cod: cod.into(),
        }
    }
}

/// Generator graph with resolved endpoints.
struct Graph {
    objects: Vec<String>,
    edges: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
}

impl Graph {
    fn new(objects: Vec<String>, generators: &[Edge]) -> Result<Self, CategoryError> {
        let mut index = HashMap::with_capacity(objects.len());
        for (i, o) in objects.iter().enumerate() {
            check_token(o)?;
            if index.insert(o.as_str(), i).is_some() {
                return Err(CategoryError::DuplicateObject(o.clone()));
            }
        }
        let mut seen = HashSet::new();
        let mut edges = Vec::with_capacity(generators.len());
        let mut out = vec![Vec::new(); objects.len()];
        for (k, e) in generators.iter().enumerate() {
            check_token(&e.id)?;
            if !seen.insert(e.id.as_str()) {
                return Err(CategoryError::DuplicateArrow(e.id.clone()));
            }
            let endpoint = |name: &str| {
                index
                    .get(name)
                    .copied()
                    .ok_or_else(|| CategoryError::UnknownObject(name.to_owned()))
            };
            let (a, b) = (endpoint(&e.dom)?, endpoint(&e.cod)?);
            edges.push((a, b));
            out[a].push(k);
        }
        Ok(Graph {
            objects,
            edges,
            out,
        })
    }

    /// Objects reachable from `start` by paths of length >= 0.
    fn reach_from(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.objects.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &k in &self.out[x] {
                let y = self.edges[k].1;
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Some directed cycle, as the list of objects on it.
    fn find_cycle(&self) -> Option<Vec<usize>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Open,
            Done,
        }
        let n = self.objects.len();
        let mut mark = vec![Mark::New; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            if mark[root] != Mark::New {
                continue;
            }
            // (node, next out-edge position)
            let mut stack = vec![(root, 0usize)];
            mark[root] = Mark::Open;
            while let Some(&mut (x, ref mut pos)) = stack.last_mut() {
                if let Some(&k) = self.out[x].get(*pos) {
                    *pos += 1;
                    let y = self.edges[k].1;
                    match mark[y] {
                        Mark::New => {
                            mark[y] = Mark::Open;
                            parent[y] = x;
                            stack.push((y, 0));
                        }
                        Mark::Open => {
                            let mut cycle = vec![x];
                            let mut z = x;
                            while z != y {
                                z = parent[z];
                                cycle.push(z);
                            }
                            cycle.reverse();
                            return Some(cycle);
                        }
                        Mark::Done => {}
                    }
                } else {
                    mark[x] = Mark::Done;
                    stack.pop();
                }
            }
        }
        None
    }
}

impl FiniteCategory {
    /// Thin (preorder) closure of a generator graph.
    ///
    /// There is one arrow for every ordered pair `a != b` with a nonempty
    /// generator path `a -> b`. The arrow is named after the generator joining
    /// the pair when there is one, and `"<a>-><b>"` otherwise.
    pub fn thin(objects: &[impl AsRef<str>], generators: &[Edge]) -> Result<Self, CategoryError> {
        let objects: Vec<String> = objects.iter().map(|o| o.as_ref().to_owned()).collect();
        let graph = Graph::new(objects, generators)?;
        let n = graph.objects.len();

        let mut named: HashMap<(usize, usize), &str> = HashMap::new();
        for (k, &(a, b)) in graph.edges.iter().enumerate() {
            if a == b {
                return Err(CategoryError::NontrivialCycle {
                    a: graph.objects[a].clone(),
                    b: graph.objects[b].clone(),
                });
            }
            if let Some(first) = named.insert((a, b), &generators[k].id) {
                return Err(CategoryError::ParallelGenerators {
                    first: first.to_owned(),
                    second: generators[k].id.clone(),
                    dom: graph.objects[a].clone(),
                    cod: graph.objects[b].clone(),
                });
            }
        }

        let reach: Vec<Vec<bool>> = (0..n).map(|a| graph.reach_from(a)).collect();
        #[allow(clippy::needless_range_loop)]
        for a in 0..n {
            for b in a + 1..n {
                if reach[a][b] && reach[b][a] {
                    return Err(CategoryError::NontrivialCycle {
                        a: graph.objects[a].clone(),
                        b: graph.objects[b].clone(),
                    });
                }
            }
        }

        let name = |a: usize, b: usize| -> String {
            if a == b {
                identity_id(&graph.objects[a])
            } else if let Some(id) = named.get(&(a, b)) {
                (*id).to_owned()
            } else {
                format!("{}->{}", graph.objects[a], graph.objects[b])
            }
        };

        let mut arrows = Vec::new();
        let mut entries = Vec::new();
        #[allow(clippy::needless_range_loop)]
        for a in 0..n {
            for b in 0..n {
                if !reach[a][b] {
                    continue;
                }
                if a != b {
                    arrows.push((
                        name(a, b),
                        graph.objects[a].clone(),
                        graph.objects[b].clone(),
                    ));
                }
                let ab = name(a, b);
                for c in (0..n).filter(|&c| reach[b][c]) {
                    entries.push((ab.clone(), name(b, c), name(a, c)));
                }
            }
        }
        FiniteCategory::from_raw_parts(Mode::Thin, graph.objects.clone(), arrows, entries)
    }

    /// Free category on an acyclic multigraph: arrows are nonempty paths and
    /// composition is concatenation.
    ///
    /// A generator keeps its id; a longer path is named by its generator ids
    /// in composition order joined with [`PATH_SEPARATOR`], so `p` followed by
    /// `q` is `q.p`.
    pub fn free(objects: &[impl AsRef<str>], generators: &[Edge]) -> Result<Self, CategoryError> {
        let objects: Vec<String> = objects.iter().map(|o| o.as_ref().to_owned()).collect();
        for e in generators {
            if e.id.contains(PATH_SEPARATOR) {
                return Err(CategoryError::InvalidId {
                    id: e.id.clone(),
                    reason: "free-mode generator ids may not contain '.'",
                });
            }
        }
        let graph = Graph::new(objects, generators)?;
        if let Some(cycle) = graph.find_cycle() {
            return Err(CategoryError::CyclicGraph {
                cycle: cycle.into_iter().map(|o| graph.objects[o].clone()).collect(),
            });
        }

        // Paths in traversal order, grouped by endpoint.
        let mut paths: Vec<Vec<usize>> = Vec::new();
        let mut stack: Vec<Vec<usize>> = (0..generators.len()).map(|k| vec![k]).collect();
        while let Some(path) = stack.pop() {
            let end = graph.edges[*path.last().expect("nonempty path")].1;
            for &k in &graph.out[end] {
                let mut longer = path.clone();
                longer.push(k);
                stack.push(longer);
            }
            paths.push(path);
        }
        let path_id = |path: &[usize]| -> String {
            let ids: Vec<&str> = path.iter().rev().map(|&k| generators[k].id.as_str()).collect();
            ids.join(&PATH_SEPARATOR.to_string())
        };
        let start = |path: &[usize]| graph.edges[path[0]].0;
        let end = |path: &[usize]| graph.edges[path[path.len() - 1]].1;

        let n = graph.objects.len();
        let mut ending_at: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut starting_at: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, p) in paths.iter().enumerate() {
            ending_at[end(p)].push(i);
            starting_at[start(p)].push(i);
        }

        let ids: Vec<String> = paths.iter().map(|p| path_id(p)).collect();
        let mut entries = Vec::new();
        for (o, object) in graph.objects.iter().enumerate() {
            let id = identity_id(object);
            entries.push((id.clone(), id.clone(), id.clone()));
            for &p in &starting_at[o] {
                entries.push((id.clone(), ids[p].clone(), ids[p].clone()));
            }
            for &p in &ending_at[o] {
                entries.push((ids[p].clone(), id.clone(), ids[p].clone()));
                for &q in &starting_at[o] {
                    let mut joined = paths[p].clone();
                    joined.extend_from_slice(&paths[q]);
                    entries.push((ids[p].clone(), ids[q].clone(), path_id(&joined)));
                }
            }
        }
        let arrows: Vec<_> = paths
            .iter()
            .zip(&ids)
            .map(|(p, id)| {
                (
                    id.clone(),
                    graph.objects[start(p)].clone(),
                    graph.objects[end(p)].clone(),
                )
            })
            .collect();
        FiniteCategory::from_raw_parts(Mode::Free, graph.objects.clone(), arrows, entries)
    }

    /// Explicit category from its non-identity arrows and the composition
    /// entries `(f, g, g∘f)`, checked against the category axioms.
    ///
    /// Entries involving an identity are filled in by the unit law unless the
    /// caller supplies them.
    pub fn explicit(
        objects: &[impl AsRef<str>],
        arrows: &[Edge],
        compositions: &[(String, String, String)],
    ) -> Result<Self, CategoryError> {
        let category = Self::explicit_unvalidated(objects, arrows, compositions)?;
        let violations = category.validate_axioms();
        if violations.is_empty() {
            Ok(category)
        } else {
            Err(CategoryError::AxiomViolation(violations))
        }
    }

    /// Like [`explicit`](Self::explicit) but skips the axiom check.
    pub fn explicit_unvalidated(
        objects: &[impl AsRef<str>],
        arrows: &[Edge],
        compositions: &[(String, String, String)],
    ) -> Result<Self, CategoryError> {
        let mut given: HashSet<(&str, &str)> = HashSet::new();
        for (f, g, _) in compositions {
            if !given.insert((f.as_str(), g.as_str())) {
                return Err(CategoryError::DuplicateEntry {
                    f: f.clone(),
                    g: g.clone(),
                });
            }
        }
        let mut entries = compositions.to_vec();
        let mut unit = |f: String, g: String, r: String| {
            if !given.contains(&(f.as_str(), g.as_str())) {
                entries.push((f, g, r));
            }
        };
        for o in objects {
            let id = identity_id(o.as_ref());
            unit(id.clone(), id.clone(), id);
        }
        for e in arrows {
            unit(identity_id(&e.dom), e.id.clone(), e.id.clone());
            unit(e.id.clone(), identity_id(&e.cod), e.id.clone());
        }
        FiniteCategory::from_raw_parts(
            Mode::Explicit,
            objects.iter().map(|o| o.as_ref().to_owned()),
            arrows
                .iter()
                .map(|e| (e.id.clone(), e.dom.clone(), e.cod.clone())),
            entries,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn po6() -> FiniteCategory {
        let objects = ["a0", "a1", "a2", "a3", "a4", "a5"];
        let gens = [
            Edge::new("e1", "a0", "a1"),
            Edge::new("e2", "a0", "a2"),
            Edge::new("e3", "a1", "a3"),
            Edge::new("e4", "a2", "a4"),
            Edge::new("e5", "a3", "a4"),
            Edge::new("e6", "a4", "a5"),
        ];
        FiniteCategory::thin(&objects, &gens).unwrap()
    }

    #[test]
    fn thin_po6_counts() {
        let c = po6();
        assert_eq!(c.mode(), Mode::Thin);
        assert_eq!(c.non_identity_count(), 13);
        assert_eq!(c.arrow_count(), 19);
        assert!(c.validate_axioms().is_empty());
    }

    #[test]
    fn thin_single_object() {
        let c = FiniteCategory::thin(&["a"], &[]).unwrap();
        let ids: Vec<_> = c.arrows().map(|a| c.arrow_id(a)).collect();
        assert_eq!(ids, ["id:a"]);
    }

    #[test]
    fn thin_rejects_two_cycle() {
        let err = FiniteCategory::thin(
            &["a", "b"],
            &[Edge::new("f", "a", "b"), Edge::new("g", "b", "a")],
        )
        .unwrap_err();
        assert!(matches!(err, CategoryError::NontrivialCycle { .. }));
    }

    #[test]
    fn thin_rejects_self_loop_and_parallel_generators() {
        let err = FiniteCategory::thin(&["a"], &[Edge::new("f", "a", "a")]).unwrap_err();
        assert!(matches!(err, CategoryError::NontrivialCycle { .. }));
        let err = FiniteCategory::thin(
            &["a", "b"],
            &[Edge::new("f", "a", "b"), Edge::new("g", "a", "b")],
        )
        .unwrap_err();
        assert!(matches!(err, CategoryError::ParallelGenerators { .. }));
    }

    #[test]
    fn thin_redundant_generator_names_its_pair() {
        let c = FiniteCategory::thin(
            &["a", "b", "c"],
            &[
                Edge::new("f", "a", "b"),
                Edge::new("g", "b", "c"),
                Edge::new("h", "a", "c"),
            ],
        )
        .unwrap();
        assert_eq!(c.compose_ids("f", "g").unwrap(), "h");
        assert_eq!(c.non_identity_count(), 3);
    }

    #[test]
    fn thin_derived_name_clash_is_reported() {
        let err = FiniteCategory::thin(
            &["a", "b", "c"],
            &[
                Edge::new("f", "a", "b"),
                Edge::new("g", "b", "c"),
                Edge::new("a->c", "b", "a"),
            ],
        );
        // b -> a and a -> b make a cycle before any naming happens.
        assert!(err.is_err());
        let err = FiniteCategory::thin(
            &["a", "b", "c", "d"],
            &[
                Edge::new("f", "a", "b"),
                Edge::new("g", "b", "c"),
                Edge::new("a->c", "c", "d"),
            ],
        )
        .unwrap_err();
        assert_eq!(err, CategoryError::DuplicateArrow("a->c".into()));
    }

    #[test]
    fn free_path_graph() {
        let c = FiniteCategory::free(
            &["x", "y", "z"],
            &[Edge::new("p", "x", "y"), Edge::new("q", "y", "z")],
        )
        .unwrap();
        let ids: Vec<_> = c.non_identity_arrows().map(|a| c.arrow_id(a)).collect();
        assert_eq!(ids, ["p", "q", "q.p"]);
        assert_eq!(c.compose_ids("p", "q").unwrap(), "q.p");
        assert!(c.validate_axioms().is_empty());
    }

    #[test]
    fn free_parallel_edges() {
        let c = FiniteCategory::free(
            &["a", "b"],
            &[Edge::new("u", "a", "b"), Edge::new("v", "a", "b")],
        )
        .unwrap();
        assert_eq!(c.non_identity_count(), 2);
        assert!(c.validate_axioms().is_empty());
    }

    #[test]
    fn free_rejects_cycles() {
        let err = FiniteCategory::free(&["a"], &[Edge::new("l", "a", "a")]).unwrap_err();
        assert_eq!(
            err,
            CategoryError::CyclicGraph {
                cycle: vec!["a".into()]
            }
        );
        let err = FiniteCategory::free(
            &["a", "b", "c"],
            &[
                Edge::new("f", "a", "b"),
                Edge::new("g", "b", "c"),
                Edge::new("h", "c", "b"),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, CategoryError::CyclicGraph { cycle } if cycle.len() == 2));
    }

    #[test]
    fn free_rejects_separator_in_generator_id() {
        let err = FiniteCategory::free(&["a", "b"], &[Edge::new("p.q", "a", "b")]).unwrap_err();
        assert!(matches!(err, CategoryError::InvalidId { .. }));
    }

    #[test]
    fn explicit_isomorphism_pair() {
        let c = FiniteCategory::explicit(
            &["a", "b"],
            &[Edge::new("f", "a", "b"), Edge::new("g", "b", "a")],
            &[
                ("f".into(), "g".into(), "id:a".into()),
                ("g".into(), "f".into(), "id:b".into()),
            ],
        )
        .unwrap();
        assert_eq!(c.compose_ids("f", "g").unwrap(), "id:a");
        assert_eq!(c.compose_ids("id:a", "f").unwrap(), "f");
    }

    #[test]
    fn explicit_missing_entry_is_an_axiom_violation() {
        let err = FiniteCategory::explicit(
            &["a", "b"],
            &[Edge::new("f", "a", "b"), Edge::new("g", "b", "a")],
            &[("f".into(), "g".into(), "id:a".into())],
        )
        .unwrap_err();
        assert!(matches!(err, CategoryError::AxiomViolation(v) if !v.is_empty()));
    }

    #[test]
    fn compose_examples() {
        let c = po6();
        assert_eq!(c.compose_ids("e2", "e4").unwrap(), "a0->a4");
        assert_eq!(c.compose_ids("id:a0", "e1").unwrap(), "e1");
        assert!(matches!(
            c.compose_ids("e1", "e2"),
            Err(CategoryError::NotComposable { .. })
        ));
        assert!(matches!(
            c.compose_ids("e1", "nope"),
            Err(CategoryError::UnknownArrow(_))
        ));
    }
}
