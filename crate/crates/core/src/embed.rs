//! Flat 3-D layout of a category: objects on a circle in the `z = 0` plane,
//! arrows as arcs whose interiors leave the plane.

use std::collections::{BTreeMap, HashMap};
use std::f64::consts::PI;

use serde::Serialize;

use crate::category::FiniteCategory;

/// Samples per arc, endpoints included.
pub const ARC_SAMPLES: usize = 17;

pub type Point = [f64; 3];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Embedding {
    pub points: BTreeMap<String, Point>,
    pub arcs: BTreeMap<String, Vec<Point>>,
}

/// Places object `i` of `n` at angle `2πi/n` on a circle of radius `n`, and
/// draws arrow `f` as the chord from `dom(f)` to `cod(f)` lifted by
/// `z = h·sin(t)`, `t ∈ [0, π]`. Arrows sharing a pair of endpoints get
/// heights `1, 2, 3, ...` in canonical order.
pub fn export_embedding(category: &FiniteCategory) -> Embedding {
    let n = category.object_count();
    let radius = n.max(1) as f64;
    let place = |i: usize| -> Point {
        let angle = 2.0 * PI * i as f64 / n as f64;
        [radius * angle.cos(), radius * angle.sin(), 0.0]
    };
    let points = category
        .objects()
        .map(|o| (category.object_name(o).to_owned(), place(o.index())))
        .collect();

    let mut lanes: HashMap<(usize, usize), usize> = HashMap::new();
    let mut arcs = BTreeMap::new();
    for a in category.non_identity_arrows() {
        let (d, c) = (category.dom(a).index(), category.cod(a).index());
        let lane = lanes.entry((d.min(c), d.max(c))).or_insert(0);
        *lane += 1;
        let height = *lane as f64;
        let (p, q) = (place(d), place(c));
        let samples = (0..ARC_SAMPLES)
            .map(|i| {
                if i == 0 {
                    return p;
                }
                if i == ARC_SAMPLES - 1 {
                    return q;
                }
                let s = i as f64 / (ARC_SAMPLES - 1) as f64;
                [
                    p[0] + s * (q[0] - p[0]),
                    p[1] + s * (q[1] - p[1]),
                    height * (PI * s).sin(),
                ]
            })
            .collect();
        arcs.insert(category.arrow_id(a).to_owned(), samples);
    }
    Embedding { points, arcs }
}

impl Embedding {
    /// Lists every broken layout invariant: coinciding objects, arcs not
    /// anchored at their endpoints, interior samples on the plane.
    pub fn check(&self, category: &FiniteCategory) -> Vec<String> {
        let mut problems = Vec::new();
        let names: Vec<&String> = self.points.keys().collect();
        for (i, a) in names.iter().enumerate() {
            for b in &names[i + 1..] {
                let (p, q) = (self.points[*a], self.points[*b]);
                let d2 = (p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2);
                if d2 <= 0.0 {
                    problems.push(format!("objects {a} and {b} coincide"));
                }
            }
        }
        for (name, p) in &self.points {
            if p[2] != 0.0 {
                problems.push(format!("object {name} is off the plane"));
            }
        }
        for (id, samples) in &self.arcs {
            let Some(a) = category.arrow_named(id) else {
                problems.push(format!("arc {id} names no arrow"));
                continue;
            };
            let dom = &self.points[category.object_name(category.dom(a))];
            let cod = &self.points[category.object_name(category.cod(a))];
            if samples.first() != Some(dom) || samples.last() != Some(cod) {
                problems.push(format!("arc {id} is not anchored at its endpoints"));
            }
            if samples.len() > 2 && samples[1..samples.len() - 1].iter().any(|s| s[2] == 0.0) {
                problems.push(format!("arc {id} touches the plane"));
            }
        }
        problems
    }
}
