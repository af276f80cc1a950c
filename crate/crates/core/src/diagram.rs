//! Induction/restriction diagrams: simples joined to the summands of their
//! restrictions one prime step down.

use crate::branching::restrict;
use crate::family::FamilyConfig;
use crate::module::{simples_at, SimpleModule};
use petgraph::algo::connected_components;
use petgraph::graph::UnGraph;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt::Write;

#[derive(Debug, Clone)]
pub struct Diagram {
    /// Sorted by level, then module order.
    pub vertices: Vec<SimpleModule>,
    /// `(lower, upper, prime)`: `lower` is a summand of `res_prime upper`.
    pub edges: Vec<(usize, usize, u32)>,
}

impl Diagram {
    /// All simples of the family with level at most `n_max`.
    pub fn build(cfg: &FamilyConfig, n_max: u64) -> Diagram {
        let caps: Vec<u32> = cfg.primes().iter().map(|&p| (n_max as f64).log(p as f64).ceil() as u32 + 1).collect();
        let levels: Vec<u64> = cfg.levels(&caps).into_iter().filter(|&n| n <= n_max).collect();
        Diagram::from_levels(&levels, cfg.primes())
    }

    pub fn from_levels(levels: &[u64], primes: &[u32]) -> Diagram {
        let vertices: Vec<SimpleModule> = levels.iter().flat_map(|&n| simples_at(n)).collect();
        let index: BTreeMap<SimpleModule, usize> = vertices.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut edges = Vec::new();
        for (j, m) in vertices.iter().enumerate() {
            for &p in primes {
                if m.level() % p as u64 != 0 || !levels.contains(&(m.level() / p as u64)) {
                    continue;
                }
                for (lower, _) in restrict(p, *m).iter() {
                    if let Some(&i) = index.get(lower) {
                        edges.push((i, j, p));
                    }
                }
            }
        }
        Diagram { vertices, edges }
    }

    fn graph(&self) -> UnGraph<(), ()> {
        let mut g = UnGraph::with_capacity(self.vertices.len(), self.edges.len());
        let nodes: Vec<_> = self.vertices.iter().map(|_| g.add_node(())).collect();
        for &(i, j, _) in &self.edges {
            g.add_edge(nodes[i], nodes[j], ());
        }
        g
    }

    pub fn component_count(&self) -> usize {
        connected_components(&self.graph())
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph diagram {\n  node [shape=plaintext];\n");
        let mut by_level: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for (i, m) in self.vertices.iter().enumerate() {
            by_level.entry(m.level()).or_default().push(i);
        }
        for (i, m) in self.vertices.iter().enumerate() {
            writeln!(s, "  v{i} [label=\"{m}\"];").unwrap();
        }
        for ids in by_level.values() {
            let names: Vec<String> = ids.iter().map(|i| format!("v{i}")).collect();
            writeln!(s, "  {{ rank=same; {}; }}", names.join("; ")).unwrap();
        }
        for &(i, j, p) in &self.edges {
            writeln!(s, "  v{i} -- v{j} [label=\"{p}\"];").unwrap();
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.vertices.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|&(i, j, p)| json!({"lower": i, "upper": j, "prime": p})).collect::<Vec<_>>(),
            "components": self.component_count(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Parity;

    #[test]
    fn tower_components() {
        let d = Diagram::from_levels(&[5, 15, 45], &[3]);
        assert_eq!(d.component_count(), 3);
        let d = Diagram::from_levels(&[7, 21, 63], &[3]);
        assert_eq!(d.component_count(), 4);
    }

    #[test]
    fn single_level_has_no_edges() {
        let cfg = FamilyConfig::new(&[3], &[1], Parity::OddOnly).unwrap();
        let d = Diagram::build(&cfg, 3);
        assert_eq!(d.vertices.len(), 3);
        assert!(d.edges.is_empty());
        assert!(d.to_dot().contains("rank=same"));
    }

    #[test]
    fn edges_follow_restriction() {
        let d = Diagram::from_levels(&[15, 45], &[3]);
        let name = |i: usize| d.vertices[i].to_string();
        let e: Vec<(String, String)> = d.edges.iter().map(|&(i, j, _)| (name(i), name(j))).collect();
        assert!(e.contains(&("W(1;15)".into(), "W(1;45)".into())));
        assert!(e.contains(&("V(1,1;15)".into(), "W(15;45)".into())));
        assert!(e.contains(&("V(1,-1;15)".into(), "W(15;45)".into())));
    }
}
