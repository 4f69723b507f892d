//! Finite-rank crystal graphs of T(λ, n): generation, checks, export.

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::crystal::CrystalVertex;
use crate::error::{Error, Result};
use crate::partition::{Eps, Partition};
use crate::signature::Dir;
use crate::tableau::Tableau;
use crate::weight::{dominant_weight, WeightVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub i: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph {
    pub lambda: Partition,
    pub level: u32,
    pub eps: Eps,
    pub rank: usize,
    pub vertices: Vec<CrystalVertex>,
    pub edges: Vec<Edge>,
    pub highest: usize,
}

pub fn validate_params(lambda: &Partition, n: u32, eps: Eps, k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::BadRank(format!("rank must be at least 2, got {k}")));
    }
    if lambda.len() + 1 > k {
        return Err(Error::BadRank(format!("need ℓ(λ) ≤ k-1, got ℓ({lambda}) = {} with k = {k}", lambda.len())));
    }
    dominant_weight(lambda, n, eps).map(|_| ())
}

/// Closure of (∅, H_λ) under F̃_0..F̃_{k-1} inside T(λ, n), entries at most k.
///
/// Vertices are numbered in breadth-first discovery order with lower operator
/// indices explored first, so the numbering is deterministic.
pub fn generate_crystal(lambda: &Partition, n: u32, eps: Eps, k: usize) -> Result<CrystalGraph> {
    validate_params(lambda, n, eps, k)?;
    let start = CrystalVertex::highest(lambda, eps, n);
    let mut index: HashMap<CrystalVertex, usize> = HashMap::new();
    index.insert(start.clone(), 0);
    let mut vertices = vec![start];
    let mut edges = Vec::new();
    let mut frontier: Vec<usize> = vec![0];
    while !frontier.is_empty() {
        let found: Vec<Vec<(usize, CrystalVertex)>> = frontier
            .par_iter()
            .map(|&u| {
                (0..k)
                    .filter_map(|i| vertices[u].op_at_level(i, Dir::Lower).map(|v| (i, v)))
                    .collect()
            })
            .collect();
        let mut next = Vec::new();
        for (&u, succ) in frontier.iter().zip(found) {
            for (i, v) in succ {
                let id = match index.get(&v) {
                    Some(&id) => id,
                    None => {
                        let id = vertices.len();
                        index.insert(v.clone(), id);
                        vertices.push(v);
                        next.push(id);
                        id
                    }
                };
                edges.push(Edge { from: u, to: id, i });
            }
        }
        frontier = next;
    }
    Ok(CrystalGraph { lambda: lambda.clone(), level: n, eps, rank: k, vertices, edges, highest: 0 })
}

impl CrystalGraph {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    fn neighbours(&self) -> (HashMap<(usize, usize), usize>, HashMap<(usize, usize), usize>) {
        let mut fwd = HashMap::new();
        let mut back = HashMap::new();
        for e in &self.edges {
            fwd.insert((e.from, e.i), e.to);
            back.insert((e.to, e.i), e.from);
        }
        (fwd, back)
    }

    /// Lengths of the i-strings through each vertex: (back, forward).
    pub fn string_lengths(&self) -> Vec<Vec<(usize, usize)>> {
        let (fwd, back) = self.neighbours();
        (0..self.len())
            .map(|v| {
                (0..self.rank)
                    .map(|i| {
                        let walk = |m: &HashMap<(usize, usize), usize>| {
                            let mut x = v;
                            let mut k = 0;
                            while let Some(&y) = m.get(&(x, i)) {
                                x = y;
                                k += 1;
                            }
                            k
                        };
                        (walk(&back), walk(&fwd))
                    })
                    .collect()
            })
            .collect()
    }

    /// Violations of the crystal axioms and normality; empty means all hold.
    pub fn check(&self) -> Vec<String> {
        let mut bad = Vec::new();
        let index: HashMap<&CrystalVertex, usize> = self.vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        for e in &self.edges {
            let (u, v) = (&self.vertices[e.from], &self.vertices[e.to]);
            if v.op(e.i, Dir::Raise).as_ref() != Some(u) {
                bad.push(format!("e_{} does not invert f_{} on edge {}->{}", e.i, e.i, e.from, e.to));
            }
            let expected = u.weight().sub(&WeightVector::simple_root(e.i, self.eps)).unwrap();
            if v.weight() != expected {
                bad.push(format!("wt(f_{} b) != wt(b) - α_{} on edge {}->{}", e.i, e.i, e.from, e.to));
            }
        }
        let strings = self.string_lengths();
        let mut sources = Vec::new();
        for (id, v) in self.vertices.iter().enumerate() {
            if v.max_entry() as usize > self.rank || !v.is_member() {
                bad.push(format!("vertex {id} lies outside the truncation"));
            }
            if v.f0().is_none() {
                bad.push(format!("F0 vanished on T(λ) at vertex {id}"));
            }
            let mut all_zero = true;
            for i in 0..self.rank {
                let (eps, phi) = v.eps_phi(i);
                let (back, fwd) = strings[id][i];
                if eps != back || phi != fwd as i64 {
                    bad.push(format!("vertex {id}, i={i}: (ε,φ)=({eps},{phi}) but strings ({back},{fwd})"));
                }
                // every raising result must be present in the graph
                if let Some(u) = v.op(i, Dir::Raise) {
                    if !index.contains_key(&u) {
                        bad.push(format!("vertex {id}: e_{i} leaves the graph"));
                    }
                }
                all_zero &= eps == 0;
            }
            if all_zero {
                sources.push(id);
            }
        }
        if sources != vec![self.highest] {
            bad.push(format!("highest weight vertices {sources:?}, expected [{}]", self.highest));
        }
        bad
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n");
        s.push_str(&format!(
            "  graph [type=\"{}\", rank={}, lambda=\"{}\", level={}, highest={}];\n",
            self.eps.letter(),
            self.rank,
            self.lambda,
            self.level,
            self.highest
        ));
        for (id, v) in self.vertices.iter().enumerate() {
            s.push_str(&format!(
                "  n{id} [label=\"S={} T={} wt={}\"];\n",
                v.s.compact(),
                v.t.compact(),
                v.weight()
            ));
        }
        for e in &self.edges {
            s.push_str(&format!("  n{} -> n{} [label=\"{}\"];\n", e.from, e.to, e.i));
        }
        s.push_str("}\n");
        s
    }

    /// Reads back the output of [`CrystalGraph::to_dot`].
    pub fn from_dot(text: &str) -> Result<CrystalGraph> {
        let bad = |m: &str| Error::Parse(format!("dot: {m}"));
        let attr = |line: &str, key: &str| -> Option<String> {
            let start = line.find(&format!("{key}="))? + key.len() + 1;
            let rest = &line[start..];
            if let Some(r) = rest.strip_prefix('"') {
                Some(r[..r.find('"')?].to_string())
            } else {
                let end = rest.find([',', ']']).unwrap_or(rest.len());
                Some(rest[..end].trim().to_string())
            }
        };
        let mut header = None;
        let mut nodes: Vec<(usize, Tableau, Tableau)> = Vec::new();
        let mut edges = Vec::new();
        for line in text.lines().map(str::trim) {
            if line.starts_with("graph [") {
                let eps: Eps = attr(line, "type").ok_or_else(|| bad("type"))?.parse()?;
                let num = |k: &str| -> Result<usize> {
                    attr(line, k).ok_or_else(|| bad(k))?.parse().map_err(|_| bad(k))
                };
                let lambda: Partition = attr(line, "lambda").ok_or_else(|| bad("lambda"))?.parse()?;
                header = Some((eps, num("rank")?, lambda, num("level")? as u32, num("highest")?));
            } else if line.contains("->") {
                let (a, b) = line.split_once("->").unwrap();
                let from = a.trim().trim_start_matches('n').parse().map_err(|_| bad("edge source"))?;
                let to = b.split_whitespace().next().unwrap_or("").trim_start_matches('n');
                let to = to.trim_end_matches(';').parse().map_err(|_| bad("edge target"))?;
                let i = attr(line, "label").ok_or_else(|| bad("edge label"))?.parse().map_err(|_| bad("edge label"))?;
                edges.push(Edge { from, to, i });
            } else if line.starts_with('n') && line.contains("[label=") {
                let id = line[1..line.find(' ').unwrap_or(1)].parse().map_err(|_| bad("node id"))?;
                let label = attr(line, "label").ok_or_else(|| bad("node label"))?;
                let mut parts = label.split_whitespace();
                let s = parts.next().and_then(|p| p.strip_prefix("S=")).ok_or_else(|| bad("S"))?;
                let t = parts.next().and_then(|p| p.strip_prefix("T=")).ok_or_else(|| bad("T"))?;
                nodes.push((id, Tableau::parse_compact(s)?, Tableau::parse_compact(t)?));
            }
        }
        let (eps, rank, lambda, level, highest) = header.ok_or_else(|| bad("missing graph attributes"))?;
        nodes.sort_by_key(|n| n.0);
        let vertices = nodes
            .into_iter()
            .enumerate()
            .map(|(k, (id, s, t))| {
                if k != id {
                    return Err(bad("node ids must be 0..n"));
                }
                CrystalVertex::new(s, t, eps, level)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CrystalGraph { lambda, level, eps, rank, vertices, edges, highest })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let g = GraphJson {
            r#type: self.eps.letter().to_string(),
            rank: self.rank,
            lambda: self.lambda.clone(),
            level: self.level,
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(id, v)| VertexJson { id, s: v.s.clone(), t: v.t.clone(), weight: v.weight() })
                .collect(),
            edges: self.edges.clone(),
            highest: self.highest,
        };
        serde_json::to_value(g).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<CrystalGraph> {
        let g: GraphJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let eps: Eps = g.r#type.parse()?;
        let vertices = g
            .vertices
            .into_iter()
            .map(|v| CrystalVertex::new(v.s, v.t, eps, g.level))
            .collect::<Result<Vec<_>>>()?;
        Ok(CrystalGraph { lambda: g.lambda, level: g.level, eps, rank: g.rank, vertices, edges: g.edges, highest: g.highest })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "T^{}_{}({}, {}): {} vertices, {} edges\n",
            self.eps.letter(),
            self.rank,
            self.lambda,
            self.level,
            self.len(),
            self.edges.len()
        );
        for (id, v) in self.vertices.iter().enumerate() {
            s.push_str(&format!("{id}: S={} T={} wt={}\n", v.s.compact(), v.t.compact(), v.weight()));
        }
        for e in &self.edges {
            s.push_str(&format!("{} -{}-> {}\n", e.from, e.i, e.to));
        }
        s
    }

    /// Vertices reachable from `highest` (used to confirm connectivity).
    pub fn reachable(&self) -> usize {
        let mut seen = vec![false; self.len()];
        let mut q = VecDeque::from([self.highest]);
        seen[self.highest] = true;
        let mut adj = vec![Vec::new(); self.len()];
        for e in &self.edges {
            adj[e.from].push(e.to);
        }
        let mut n = 1;
        while let Some(u) = q.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    n += 1;
                    q.push_back(v);
                }
            }
        }
        n
    }
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: usize,
    #[serde(rename = "S")]
    s: Tableau,
    #[serde(rename = "T")]
    t: Tableau,
    weight: WeightVector,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    r#type: String,
    rank: usize,
    lambda: Partition,
    level: u32,
    vertices: Vec<VertexJson>,
    edges: Vec<Edge>,
    highest: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cardinalities() {
        assert_eq!(generate_crystal(&Partition::empty(), 1, Eps::B, 2).unwrap().len(), 4);
        assert_eq!(generate_crystal(&Partition::empty(), 1, Eps::C, 2).unwrap().len(), 5);
        assert_eq!(generate_crystal(&Partition::from([1]), 2, Eps::B, 2).unwrap().len(), 5);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(generate_crystal(&Partition::from([2]), 1, Eps::B, 2).is_err());
        assert!(generate_crystal(&Partition::from([1, 1]), 2, Eps::B, 2).is_err());
        assert!(generate_crystal(&Partition::empty(), 1, Eps::B, 1).is_err());
    }

    #[test]
    fn export_round_trips() {
        let g = generate_crystal(&Partition::from([1]), 2, Eps::C, 3).unwrap();
        assert!(g.check().is_empty(), "{:?}", g.check());
        assert_eq!(CrystalGraph::from_dot(&g.to_dot()).unwrap(), g);
        assert_eq!(CrystalGraph::from_json(&g.to_json()).unwrap(), g);
        assert_eq!(g.reachable(), g.len());
    }
}
