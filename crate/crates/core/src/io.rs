//! JSON and DOT renderings of graphs, censuses and components. Labels are 1-based.

use std::fmt::Write;

use serde::Serialize;

use crate::fs::{ComponentCensus, ExplicitComponent};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson { n: g.n(), edges: g.edges().into_iter().map(|(u, v)| [u + 1, v + 1]).collect() }
    }
}

pub fn graph_dot(g: &Graph, name: &str) -> String {
    let mut s = format!("graph {} {{\n", quote(name));
    for v in 0..g.n() {
        let _ = writeln!(s, "  {};", v + 1);
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {} -- {};", u + 1, v + 1);
    }
    s.push_str("}\n");
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentJson {
    pub vertices: Vec<Vec<usize>>,
    /// `[u, v, person a, person b]`, `u` and `v` indexing `vertices`.
    pub edges: Vec<[usize; 4]>,
}

impl From<&ExplicitComponent> for ComponentJson {
    fn from(c: &ExplicitComponent) -> Self {
        ComponentJson {
            vertices: c.vertices.iter().map(|p| p.clone().into()).collect(),
            edges: c.edges.iter().map(|e| [e.u, e.v, e.label.lo() + 1, e.label.hi() + 1]).collect(),
        }
    }
}

/// One node per arrangement (one-line notation), edges labelled by the swapped pair.
pub fn component_dot(c: &ExplicitComponent, name: &str) -> String {
    let mut s = format!("graph {} {{\n", quote(name));
    for (i, p) in c.vertices.iter().enumerate() {
        let _ = writeln!(s, "  v{i} [label=\"{p}\"];");
    }
    for e in &c.edges {
        let _ = writeln!(s, "  v{} -- v{} [label=\"{}\"];", e.u, e.v, e.label);
    }
    s.push_str("}\n");
    s
}

/// Plain-text census: one line per component.
pub fn census_table(c: &ComponentCensus) -> String {
    let mut s = format!("components: {}\n", c.count);
    for (i, (size, rep)) in c.sizes.iter().zip(&c.reps).enumerate() {
        let _ = writeln!(s, "{:>4}  size {:>8}  rep {}", i + 1, size, rep);
    }
    s
}

fn quote(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fs::{fs_component_of, fs_components};
    use crate::graph::{make_family, FamilySpec};
    use crate::perm::Permutation;

    #[test]
    fn graph_outputs_are_one_based() {
        let g = make_family(&FamilySpec::Path(3)).unwrap();
        let j = serde_json::to_string(&GraphJson::from(&g)).unwrap();
        assert_eq!(j, r#"{"n":3,"edges":[[1,2],[2,3]]}"#);
        let d = graph_dot(&g, "path:3");
        assert!(d.contains("1 -- 2;") && d.contains("2 -- 3;"));
        assert!(!d.contains(" 0"));
    }

    #[test]
    fn component_dot_lists_every_edge() {
        let x = make_family(&FamilySpec::Path(3)).unwrap();
        let y = make_family(&FamilySpec::Complete(3)).unwrap();
        let c = fs_component_of(&x, &y, &Permutation::identity(3)).unwrap();
        let d = component_dot(&c, "c");
        assert_eq!(d.matches(" -- ").count(), c.edge_count());
        assert_eq!(d.matches("[label=").count(), c.vertex_count() + c.edge_count());
        let j = ComponentJson::from(&c);
        assert_eq!(j.vertices[0], vec![1, 2, 3]);
    }

    #[test]
    fn table_has_a_line_per_component() {
        let x = make_family(&FamilySpec::Path(3)).unwrap();
        let y = make_family(&FamilySpec::Path(3)).unwrap();
        let c = fs_components(&x, &y).unwrap();
        assert_eq!(census_table(&c).lines().count(), c.count + 1);
    }
}
