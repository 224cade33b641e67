//! Base graphs, canonical edge ordering, orientations as bitmasks and
//! exhaustive orientation enumeration.
//!
//! The canonical edge order is lexicographic on (min endpoint, max endpoint).
//! Bit i of an orientation mask is false when edge i keeps its low-to-high
//! direction. All masks, witnesses and file formats build on this order.

use std::fmt;
use std::str::FromStr;

use crate::config;
use crate::error::{cap, invalid, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Parts of size m and n; vertices 0..m are X, m..m+n are Y.
    Biclique(usize, usize),
    File(String),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Biclique(m, n) => write!(f, "biclique:{m},{n}"),
            Family::File(p) => write!(f, "file:{p}"),
        }
    }
}

impl FromStr for Family {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = s
            .split_once(':')
            .ok_or_else(|| invalid(format!("malformed family spec '{s}'")))?;
        let parse_one = |r: &str| {
            r.parse::<usize>()
                .map_err(|_| invalid(format!("bad parameter in family spec '{s}'")))
        };
        match name {
            "path" => Ok(Family::Path(parse_one(rest)?)),
            "cycle" => Ok(Family::Cycle(parse_one(rest)?)),
            "complete" => Ok(Family::Complete(parse_one(rest)?)),
            "star" => Ok(Family::Biclique(1, parse_one(rest)?)),
            "biclique" => {
                let (a, b) = rest
                    .split_once(',')
                    .ok_or_else(|| invalid(format!("biclique spec needs m,n: '{s}'")))?;
                Ok(Family::Biclique(parse_one(a)?, parse_one(b)?))
            }
            "file" => Ok(Family::File(rest.to_string())),
            _ => Err(invalid(format!("unknown family '{name}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    pub n: usize,
    /// Pairs (u, v) with u < v, sorted lexicographically.
    pub edges: Vec<(usize, usize)>,
    pub family: Option<Family>,
}

impl UndirectedGraph {
    pub fn new(n: usize, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        if n > config::max_vertices() {
            return Err(cap(format!("{n} vertices exceeds the storage cap")));
        }
        for e in edges.iter_mut() {
            if e.0 == e.1 {
                return Err(invalid(format!("self-loop at vertex {}", e.0)));
            }
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
            if e.1 >= n {
                return Err(invalid(format!("edge ({},{}) out of range", e.0, e.1)));
            }
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(invalid("duplicate edge"));
        }
        Ok(UndirectedGraph { n, edges, family: None })
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Index of the edge {u, v} in canonical order, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Pairs of distinct edge indices sharing an endpoint.
    pub fn adjacent_edge_pairs(&self) -> Vec<Vec<usize>> {
        let mut conflicts = vec![Vec::new(); self.m()];
        for i in 0..self.m() {
            for j in i + 1..self.m() {
                let (a, b) = self.edges[i];
                let (c, d) = self.edges[j];
                if a == c || a == d || b == c || b == d {
                    conflicts[i].push(j);
                    conflicts[j].push(i);
                }
            }
        }
        conflicts
    }
}

/// Builds a named graph with canonical vertex numbering and edge order.
pub fn build_family(spec: &Family) -> Result<UndirectedGraph> {
    let mut g = match *spec {
        Family::Path(n) => {
            if n < 2 {
                return Err(invalid("path:n needs n >= 2"));
            }
            UndirectedGraph::new(n, (0..n - 1).map(|i| (i, i + 1)).collect())?
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(invalid("cycle:n needs n >= 3"));
            }
            let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            edges.push((0, n - 1));
            UndirectedGraph::new(n, edges)?
        }
        Family::Complete(n) => {
            if n < 1 {
                return Err(invalid("complete:n needs n >= 1"));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            UndirectedGraph::new(n, edges)?
        }
        Family::Biclique(m, n) => {
            if m < 1 || n < 1 {
                return Err(invalid("biclique:m,n needs m,n >= 1"));
            }
            let mut edges = Vec::new();
            for x in 0..m {
                for y in 0..n {
                    edges.push((x, m + y));
                }
            }
            UndirectedGraph::new(m + n, edges)?
        }
        Family::File(ref path) => read_edge_list(path)?,
    };
    g.family = Some(spec.clone());
    Ok(g)
}

/// Edge-list format: a line `p <n> <m>`, then `e <u> <v>` lines, 1-indexed.
pub fn read_edge_list(path: &str) -> Result<UndirectedGraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| invalid(format!("cannot read '{path}': {e}")))?;
    parse_edge_list(&text)
}

pub fn parse_edge_list(text: &str) -> Result<UndirectedGraph> {
    let mut n = None;
    let mut edges = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["p", nv, _ne] => {
                n = Some(
                    nv.parse::<usize>()
                        .map_err(|_| invalid("bad vertex count in p line"))?,
                );
            }
            ["e", u, v] => {
                let u: usize = u.parse().map_err(|_| invalid("bad endpoint"))?;
                let v: usize = v.parse().map_err(|_| invalid("bad endpoint"))?;
                if u == 0 || v == 0 {
                    return Err(invalid("edge-list files are 1-indexed"));
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(invalid(format!("unrecognized line '{line}'"))),
        }
    }
    let n = n.ok_or_else(|| invalid("missing p line"))?;
    UndirectedGraph::new(n, edges)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationMask {
    bits: Vec<bool>,
}

impl OrientationMask {
    pub fn new(bits: Vec<bool>) -> Self {
        OrientationMask { bits }
    }

    pub fn from_value(value: u64, len: usize) -> Self {
        OrientationMask {
            bits: (0..len).map(|i| value >> (len - 1 - i) & 1 == 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn value(&self) -> u64 {
        self.bits.iter().fold(0, |acc, &b| acc << 1 | b as u64)
    }
}

impl fmt::Display for OrientationMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl FromStr for OrientationMask {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return Err(invalid(format!("bad orientation bitstring '{s}'"))),
            }
        }
        Ok(OrientationMask { bits })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedGraph {
    pub n: usize,
    /// (tail, head) pairs, in canonical edge order of the underlying graph.
    pub arcs: Vec<(usize, usize)>,
    /// Out- and in-neighbour bitsets over vertex indices.
    pub out_nbrs: Vec<u64>,
    pub in_nbrs: Vec<u64>,
    /// Biclique part sizes (|X|, |Y|) when the orientation came from one.
    pub parts: Option<(usize, usize)>,
}

impl OrientedGraph {
    pub fn from_arcs(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        if n > config::max_vertices() {
            return Err(cap(format!("{n} vertices exceeds the storage cap")));
        }
        let mut out_nbrs = vec![0u64; n];
        let mut in_nbrs = vec![0u64; n];
        for &(u, v) in &arcs {
            if u == v || u >= n || v >= n {
                return Err(invalid(format!("bad arc ({u},{v})")));
            }
            if out_nbrs[v] >> u & 1 == 1 || out_nbrs[u] >> v & 1 == 1 {
                return Err(invalid(format!("opposite or duplicate arc ({u},{v})")));
            }
            out_nbrs[u] |= 1 << v;
            in_nbrs[v] |= 1 << u;
        }
        Ok(OrientedGraph { n, arcs, out_nbrs, in_nbrs, parts: None })
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_nbrs[u] >> v & 1 == 1
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_nbrs[v].count_ones() as usize
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_nbrs[v].count_ones() as usize
    }

    pub fn degree(&self, v: usize) -> usize {
        self.out_degree(v) + self.in_degree(v)
    }

    /// Index of the arc between u and v (either direction) in arc order.
    pub fn arc_index(&self, u: usize, v: usize) -> Option<usize> {
        self.arcs
            .iter()
            .position(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    /// The underlying undirected graph, with edges re-sorted canonically.
    pub fn underlying(&self) -> UndirectedGraph {
        let mut g = UndirectedGraph::new(self.n, self.arcs.clone())
            .expect("arcs of a valid orientation form a simple graph");
        g.family = self.parts.map(|(m, n)| Family::Biclique(m, n));
        g
    }
}

/// Applies an orientation mask to a base graph.
pub fn orient(g: &UndirectedGraph, mask: &OrientationMask) -> Result<OrientedGraph> {
    if mask.len() != g.m() {
        return Err(invalid(format!(
            "mask length {} does not match edge count {}",
            mask.len(),
            g.m()
        )));
    }
    let arcs = g
        .edges
        .iter()
        .zip(0..)
        .map(|(&(u, v), i)| if mask.bit(i) { (v, u) } else { (u, v) })
        .collect();
    let mut og = OrientedGraph::from_arcs(g.n, arcs)?;
    if let Some(Family::Biclique(m, n)) = g.family {
        og.parts = Some((m, n));
    }
    Ok(og)
}

/// Reverses every arc.
pub fn reverse(og: &OrientedGraph) -> OrientedGraph {
    OrientedGraph {
        n: og.n,
        arcs: og.arcs.iter().map(|&(u, v)| (v, u)).collect(),
        out_nbrs: og.in_nbrs.clone(),
        in_nbrs: og.out_nbrs.clone(),
        parts: og.parts,
    }
}

/// All 2^m orientations of g, masks in increasing binary order.
pub fn enumerate_orientations(
    g: &UndirectedGraph,
) -> Result<impl Iterator<Item = (OrientationMask, OrientedGraph)> + '_> {
    let m = g.m();
    if m > config::max_enum_edges() {
        return Err(cap(format!(
            "{m} edges exceeds the orientation enumeration cap of {}",
            config::max_enum_edges()
        )));
    }
    Ok((0..1u64 << m).map(move |value| {
        let mask = OrientationMask::from_value(value, m);
        let og = orient(g, &mask).expect("mask length matches by construction");
        (mask, og)
    }))
}
