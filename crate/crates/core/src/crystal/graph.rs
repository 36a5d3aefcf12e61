//! Connected components of the monomial crystal as explicit graphs.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde_json::{json, Value};

use super::{apply_e, apply_f, node_stats, tau_render, CrystalConfig, CrystalError, CrystalNode};
use crate::laurent::{LaurentPoly, Monomial};

/// `f~_color(nodes[from]) = nodes[to]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub from: usize,
    pub color: u32,
    pub to: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph {
    pub nodes: Vec<CrystalNode>,
    /// Sorted by `(from, color, to)`.
    pub edges: Vec<Edge>,
}

impl CrystalGraph {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.nodes.iter().position(|n| &n.monomial == m)
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.nodes.iter().map(|n| &n.monomial)
    }

    /// Nodes with no incoming edge.
    pub fn sources(&self) -> Vec<usize> {
        let mut has_in = vec![false; self.nodes.len()];
        for e in &self.edges {
            has_in[e.to] = true;
        }
        (0..self.nodes.len()).filter(|&i| !has_in[i]).collect()
    }

    /// Nodes with no outgoing edge.
    pub fn sinks(&self) -> Vec<usize> {
        let mut has_out = vec![false; self.nodes.len()];
        for e in &self.edges {
            has_out[e.from] = true;
        }
        (0..self.nodes.len()).filter(|&i| !has_out[i]).collect()
    }

    /// Sum of all node monomials.
    pub fn character(&self) -> LaurentPoly {
        self.monomials().cloned().sum()
    }

    /// Graphviz text; node labels come from `label`.
    pub fn to_dot<F: Fn(&Monomial) -> String>(&self, label: F) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (idx, node) in self.nodes.iter().enumerate() {
            let text = label(&node.monomial).replace('"', "\\\"");
            let _ = writeln!(out, "  n{idx} [label=\"{text}\"];");
        }
        for e in &self.edges {
            let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, e.color);
        }
        out.push_str("}\n");
        out
    }

    /// Graphviz text with `τ` labels where possible, `Y` text otherwise.
    pub fn to_dot_tau(&self, cfg: &CrystalConfig) -> String {
        self.to_dot(|m| tau_render(cfg, m).unwrap_or_else(|_| m.to_string()))
    }

    /// `{"nodes": [...], "edges": [[from, color, to], ...]}` where each node
    /// carries its monomial in the polynomial JSON encoding.
    pub fn to_json(&self) -> Value {
        let nodes: Vec<Value> = self
            .nodes
            .iter()
            .map(|n| {
                json!({
                    "monomial": LaurentPoly::from_monomial(n.monomial.clone()).to_json(),
                    "wt": n.wt.0,
                    "phi": n.phi,
                    "eps": n.eps,
                })
            })
            .collect();
        let edges: Vec<Value> = self.edges.iter().map(|e| json!([e.from, e.color, e.to])).collect();
        json!({ "nodes": nodes, "edges": edges })
    }
}

/// Breadth-first closure of `seed` under every `e~_i` and `f~_i`, colors in
/// increasing order. Fails once more than `cap` nodes are found.
pub fn component(cfg: &CrystalConfig, seed: &Monomial, cap: usize) -> Result<CrystalGraph, CrystalError> {
    cfg.check_monomial(seed)?;
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    let mut order: Vec<Monomial> = Vec::new();
    let mut queue = VecDeque::new();
    let mut edges = Vec::new();

    let mut visit = |m: Monomial, order: &mut Vec<Monomial>, queue: &mut VecDeque<usize>| {
        if let Some(&idx) = index.get(&m) {
            return Ok(idx);
        }
        if order.len() >= cap {
            return Err(CrystalError::CapExceeded(cap));
        }
        let idx = order.len();
        index.insert(m.clone(), idx);
        order.push(m);
        queue.push_back(idx);
        Ok(idx)
    };

    visit(seed.clone(), &mut order, &mut queue)?;
    while let Some(cur) = queue.pop_front() {
        for i in 1..=cfg.rank() {
            let here = order[cur].clone();
            if let Some(up) = apply_e(cfg, &here, i)? {
                let to = visit(up, &mut order, &mut queue)?;
                edges.push(Edge { from: to, color: i, to: cur });
            }
            if let Some(down) = apply_f(cfg, &here, i)? {
                let to = visit(down, &mut order, &mut queue)?;
                edges.push(Edge { from: cur, color: i, to });
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let nodes = order.iter().map(|m| node_stats(cfg, m)).collect();
    Ok(CrystalGraph { nodes, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::VarId;

    fn binomial(n: u64, k: u64) -> u64 {
        (1..=k).fold(1, |acc, j| acc * (n + 1 - j) / j)
    }

    #[test]
    fn smallest_crystal() {
        let cfg = CrystalConfig::new(1).unwrap();
        let g = component(&cfg, &Monomial::var(VarId::new(0, 1)), 10).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.edges, vec![Edge { from: 0, color: 1, to: 1 }]);
    }

    #[test]
    fn fundamental_component_sizes() {
        for r in 1..=5u32 {
            let cfg = CrystalConfig::new(r).unwrap();
            for d in 1..=r {
                let g = component(&cfg, &Monomial::var(VarId::new(1, d)), 1000).unwrap();
                assert_eq!(g.len() as u64, binomial(r as u64 + 1, d as u64), "r={r} d={d}");
                assert_eq!(g.sources(), vec![0]);
            }
        }
    }

    #[test]
    fn graph_of_third_fundamental_sl5() {
        let cfg = CrystalConfig::new(4).unwrap();
        let g = component(&cfg, &Monomial::var(VarId::new(-1, 3)), 100).unwrap();
        assert_eq!(g.len(), 10);
        assert_eq!(g.edges.len(), 12);
        let sinks = g.sinks();
        assert_eq!(sinks.len(), 1);
        assert_eq!(tau_render(&cfg, &g.nodes[sinks[0]].monomial).unwrap(), "1/τ_9");
    }

    #[test]
    fn cap_is_enforced() {
        let cfg = CrystalConfig::new(4).unwrap();
        let seed = Monomial::var(VarId::new(-1, 3));
        assert_eq!(component(&cfg, &seed, 9), Err(CrystalError::CapExceeded(9)));
        assert!(component(&cfg, &seed, 10).is_ok());
    }

    #[test]
    fn dot_and_json_exports() {
        let cfg = CrystalConfig::new(1).unwrap();
        let g = component(&cfg, &Monomial::var(VarId::new(-1, 1)), 10).unwrap();
        let dot = g.to_dot_tau(&cfg);
        assert!(dot.contains("n0 [label=\"τ_{-1}\"]"));
        assert!(dot.contains("n0 -> n1 [label=\"1\"]"));
        let json = g.to_json();
        assert_eq!(json["edges"], serde_json::json!([[0, 1, 1]]));
    }
}
