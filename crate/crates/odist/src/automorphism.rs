//! Automorphism groups of small oriented and undirected graphs, rigidity
//! tests and label-preservation checks.
//!
//! The search is a plain backtracker over vertices in a connectivity-greedy
//! order, pruning candidates by the (out-degree, in-degree) pair and by
//! incremental arc consistency against already-mapped vertices. Optional
//! vertex and arc labels constrain the search further, which lets the same
//! engine answer "is this labelling distinguishing" directly on graphs far
//! too large to materialize the group for.

use crate::config;
use crate::error::{cap, invalid, Result};
use crate::graph::{OrientedGraph, UndirectedGraph};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    pub image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(invalid("image is not a bijection"));
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    /// self after other: (self * other)(v) = self(other(v)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v] = i;
        }
        Permutation { image }
    }

    /// One-line image notation `[p0,p1,...]`.
    pub fn serialize(&self) -> String {
        let items: Vec<String> = self.image.iter().map(|v| v.to_string()).collect();
        format!("[{}]", items.join(","))
    }
}

/// The full group, identity first, then lexicographic by image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismList {
    pub perms: Vec<Permutation>,
}

impl AutomorphismList {
    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn non_trivial(&self) -> impl Iterator<Item = &Permutation> {
        self.perms.iter().filter(|p| !p.is_identity())
    }

    fn from_unsorted(mut perms: Vec<Permutation>) -> Self {
        perms.sort();
        perms.dedup();
        // the identity is lexicographically minimal among permutations
        AutomorphismList { perms }
    }
}

/// Adjacency relation codes for the search engine. Oriented graphs use
/// 1 (u->v) / 2 (v->u); undirected graphs use 3 in both directions.
pub(crate) struct AdjView {
    pub n: usize,
    rel: Vec<u8>,
    elab: Option<Vec<u32>>,
    deg_key: Vec<(usize, usize)>,
    order: Vec<usize>,
}

impl AdjView {
    pub fn oriented(og: &OrientedGraph, arc_labels: Option<&[u32]>) -> Self {
        let n = og.n;
        let mut rel = vec![0u8; n * n];
        let mut elab = arc_labels.map(|_| vec![0u32; n * n]);
        for (i, &(u, v)) in og.arcs.iter().enumerate() {
            rel[u * n + v] = 1;
            rel[v * n + u] = 2;
            if let (Some(m), Some(labels)) = (elab.as_mut(), arc_labels) {
                m[u * n + v] = labels[i];
                m[v * n + u] = labels[i];
            }
        }
        let deg_key = (0..n).map(|v| (og.out_degree(v), og.in_degree(v))).collect();
        Self::finish(n, rel, elab, deg_key)
    }

    pub fn undirected(g: &UndirectedGraph, edge_labels: Option<&[u32]>) -> Self {
        let n = g.n;
        let mut rel = vec![0u8; n * n];
        let mut elab = edge_labels.map(|_| vec![0u32; n * n]);
        for (i, &(u, v)) in g.edges.iter().enumerate() {
            rel[u * n + v] = 3;
            rel[v * n + u] = 3;
            if let (Some(m), Some(labels)) = (elab.as_mut(), edge_labels) {
                m[u * n + v] = labels[i];
                m[v * n + u] = labels[i];
            }
        }
        let deg_key = (0..n).map(|v| (g.degree(v), 0)).collect();
        Self::finish(n, rel, elab, deg_key)
    }

    fn finish(
        n: usize,
        rel: Vec<u8>,
        elab: Option<Vec<u32>>,
        deg_key: Vec<(usize, usize)>,
    ) -> Self {
        // process vertices so each one is maximally constrained by the
        // already-mapped prefix
        let mut order = Vec::with_capacity(n);
        let mut chosen = vec![false; n];
        let degree = |v: usize| deg_key[v].0 + deg_key[v].1;
        for _ in 0..n {
            let best = (0..n)
                .filter(|&v| !chosen[v])
                .max_by_key(|&v| {
                    let mapped_nbrs = order
                        .iter()
                        .filter(|&&w| rel[v * n + w] != 0)
                        .count();
                    (mapped_nbrs, degree(v), std::cmp::Reverse(v))
                })
                .unwrap();
            chosen[best] = true;
            order.push(best);
        }
        AdjView { n, rel, elab, deg_key, order }
    }

    fn consistent(
        &self,
        u: usize,
        v: usize,
        prefix: &[usize],
        image: &[usize],
        vlab: Option<&[u32]>,
    ) -> bool {
        if self.deg_key[u] != self.deg_key[v] {
            return false;
        }
        if let Some(l) = vlab {
            if l[u] != l[v] {
                return false;
            }
        }
        for &w in prefix {
            let fw = image[w];
            if self.rel[u * self.n + w] != self.rel[v * self.n + fw] {
                return false;
            }
            if let Some(e) = &self.elab {
                if e[u * self.n + w] != e[v * self.n + fw] {
                    return false;
                }
            }
        }
        true
    }

    /// Enumerates automorphisms respecting the optional vertex labels
    /// (arc/edge labels were baked in at construction). Stops after `limit`
    /// results when `limit` is non-zero.
    pub fn search(
        &self,
        vlab: Option<&[u32]>,
        limit: usize,
        skip_identity: bool,
    ) -> Vec<Permutation> {
        let mut image = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        let mut found = Vec::new();
        self.dfs(0, vlab, limit, skip_identity, &mut image, &mut used, &mut found);
        found
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        depth: usize,
        vlab: Option<&[u32]>,
        limit: usize,
        skip_identity: bool,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        found: &mut Vec<Permutation>,
    ) {
        if limit != 0 && found.len() >= limit {
            return;
        }
        if depth == self.n {
            let perm = Permutation { image: image.clone() };
            if !(skip_identity && perm.is_identity()) {
                found.push(perm);
            }
            return;
        }
        let u = self.order[depth];
        let prefix = &self.order[..depth];
        for v in 0..self.n {
            if used[v] || !self.consistent(u, v, prefix, image, vlab) {
                continue;
            }
            image[u] = v;
            used[v] = true;
            self.dfs(depth + 1, vlab, limit, skip_identity, image, used, found);
            image[u] = usize::MAX;
            used[v] = false;
            if limit != 0 && found.len() >= limit {
                return;
            }
        }
    }
}

/// True iff p maps the arc set of og onto itself.
pub fn is_automorphism(og: &OrientedGraph, p: &Permutation) -> Result<bool> {
    if p.len() != og.n {
        return Err(invalid(format!(
            "permutation length {} does not match {} vertices",
            p.len(),
            og.n
        )));
    }
    Ok(og
        .arcs
        .iter()
        .all(|&(u, v)| og.has_arc(p.apply(u), p.apply(v))))
}

pub fn is_undirected_automorphism(g: &UndirectedGraph, p: &Permutation) -> Result<bool> {
    if p.len() != g.n {
        return Err(invalid("permutation length mismatch"));
    }
    Ok(g.edges
        .iter()
        .all(|&(u, v)| g.edge_index(p.apply(u), p.apply(v)).is_some()))
}

/// The complete automorphism group of an oriented graph.
///
/// Generic backtracking up to the vertex cap; biclique orientations with
/// parts of different sizes use the word structure instead, which reaches
/// much larger graphs (every automorphism is part-preserving there, so the
/// group is determined by an X-permutation and a matching of equal words).
pub fn automorphisms(og: &OrientedGraph) -> Result<AutomorphismList> {
    if og.n <= config::aut_cap() {
        let view = AdjView::oriented(og, None);
        return Ok(AutomorphismList::from_unsorted(view.search(None, 0, false)));
    }
    if let Some((m, ny)) = og.parts {
        if m != ny {
            return biclique_automorphisms(og, m, ny);
        }
    }
    Err(cap(format!(
        "{} vertices exceeds the automorphism cap of {}",
        og.n,
        config::aut_cap()
    )))
}

/// Part-preserving group of a biclique orientation with m != n, via Y-words.
fn biclique_automorphisms(og: &OrientedGraph, m: usize, ny: usize) -> Result<AutomorphismList> {
    if m > 8 {
        return Err(cap("biclique automorphism shortcut supports |X| <= 8"));
    }
    let words = y_words(og, m, ny);
    let mut perms = Vec::new();
    let mut xperm: Vec<usize> = (0..m).collect();
    let mut budget: usize = 1 << 22;
    permute_x(og, m, ny, &words, &mut xperm, 0, &mut perms, &mut budget)?;
    Ok(AutomorphismList::from_unsorted(perms))
}

pub(crate) fn y_words(og: &OrientedGraph, m: usize, ny: usize) -> Vec<u64> {
    (0..ny)
        .map(|i| {
            let y = m + i;
            (0..m).fold(0u64, |w, j| w << 1 | !og.has_arc(j, y) as u64)
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn permute_x(
    og: &OrientedGraph,
    m: usize,
    ny: usize,
    words: &[u64],
    xperm: &mut Vec<usize>,
    depth: usize,
    out: &mut Vec<Permutation>,
    budget: &mut usize,
) -> Result<()> {
    if depth == m {
        return extend_y(og, m, ny, words, xperm, out, budget);
    }
    for pos in depth..m {
        xperm.swap(depth, pos);
        // in-degree of an X vertex is preserved by any automorphism
        if og.in_degree(depth) == og.in_degree(xperm[depth]) {
            permute_x(og, m, ny, words, xperm, depth + 1, out, budget)?;
        }
        xperm.swap(depth, pos);
    }
    Ok(())
}

/// For a fixed X-permutation, enumerate every compatible Y-permutation.
fn extend_y(
    _og: &OrientedGraph,
    m: usize,
    ny: usize,
    words: &[u64],
    xperm: &[usize],
    out: &mut Vec<Permutation>,
    budget: &mut usize,
) -> Result<()> {
    // word of y after relabelling X by xperm: bit j becomes bit xperm[j]
    let permuted: Vec<u64> = words
        .iter()
        .map(|&w| {
            (0..m).fold(0u64, |acc, j| {
                acc | (w >> (m - 1 - j) & 1) << (m - 1 - xperm[j])
            })
        })
        .collect();
    // y_i may map to any y_k whose original word equals permuted[i]
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(ny);
    for i in 0..ny {
        let c: Vec<usize> = (0..ny).filter(|&k| words[k] == permuted[i]).collect();
        if c.is_empty() {
            return Ok(());
        }
        candidates.push(c);
    }
    let mut ymap = vec![usize::MAX; ny];
    let mut used = vec![false; ny];
    fn rec(
        i: usize,
        ny: usize,
        candidates: &[Vec<usize>],
        ymap: &mut Vec<usize>,
        used: &mut Vec<bool>,
        m: usize,
        xperm: &[usize],
        out: &mut Vec<Permutation>,
        budget: &mut usize,
    ) -> Result<()> {
        if *budget == 0 {
            return Err(cap("biclique automorphism group too large to materialize"));
        }
        if i == ny {
            *budget -= 1;
            let mut image: Vec<usize> = xperm.to_vec();
            image.extend(ymap.iter().map(|&k| m + k));
            out.push(Permutation { image });
            return Ok(());
        }
        for &k in &candidates[i] {
            if !used[k] {
                used[k] = true;
                ymap[i] = k;
                rec(i + 1, ny, candidates, ymap, used, m, xperm, out, budget)?;
                used[k] = false;
            }
        }
        Ok(())
    }
    rec(0, ny, &candidates, &mut ymap, &mut used, m, xperm, out, budget)
}

pub fn undirected_automorphisms(g: &UndirectedGraph) -> Result<AutomorphismList> {
    if g.n > config::aut_cap() {
        return Err(cap(format!(
            "{} vertices exceeds the automorphism cap of {}",
            g.n,
            config::aut_cap()
        )));
    }
    let view = AdjView::undirected(g, None);
    Ok(AutomorphismList::from_unsorted(view.search(None, 0, false)))
}

/// True iff og has only the identity automorphism.
pub fn is_rigid(og: &OrientedGraph) -> Result<bool> {
    if let Some((m, ny)) = og.parts {
        if m != ny && m <= 8 {
            return Ok(biclique_rigid(og, m, ny));
        }
    }
    if og.n <= config::aut_cap() {
        let view = AdjView::oriented(og, None);
        return Ok(view.search(None, 1, true).is_empty());
    }
    Err(cap("graph too large for rigidity check"))
}

/// Rigidity of a biclique orientation with m != n: no full twins in Y and
/// no non-trivial X-permutation keeping the word set invariant.
fn biclique_rigid(og: &OrientedGraph, m: usize, ny: usize) -> bool {
    let words = y_words(og, m, ny);
    let mut sorted = words.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let mut xperm: Vec<usize> = (0..m).collect();
    !some_nontrivial_x(og, m, &sorted, &mut xperm, 0, true)
}

fn some_nontrivial_x(
    og: &OrientedGraph,
    m: usize,
    sorted_words: &[u64],
    xperm: &mut Vec<usize>,
    depth: usize,
    identity_so_far: bool,
) -> bool {
    if depth == m {
        if identity_so_far {
            return false;
        }
        let mut permuted: Vec<u64> = sorted_words
            .iter()
            .map(|&w| {
                (0..m).fold(0u64, |acc, j| {
                    acc | (w >> (m - 1 - j) & 1) << (m - 1 - xperm[j])
                })
            })
            .collect();
        permuted.sort_unstable();
        return permuted == sorted_words;
    }
    for pos in depth..m {
        xperm.swap(depth, pos);
        if og.in_degree(depth) == og.in_degree(xperm[depth])
            && some_nontrivial_x(
                og,
                m,
                sorted_words,
                xperm,
                depth + 1,
                identity_so_far && xperm[depth] == depth,
            )
        {
            xperm.swap(depth, pos);
            return true;
        }
        xperm.swap(depth, pos);
    }
    false
}

/// Label data for preservation / distinguishing checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelTarget {
    Vertices,
    Arcs,
}

pub use crate::labelling::Labelling;

/// Does the automorphism p keep every label of lab in place?
pub fn preserves_labelling(
    og: &OrientedGraph,
    p: &Permutation,
    lab: &Labelling,
) -> Result<bool> {
    if !is_automorphism(og, p)? {
        return Err(invalid("permutation is not an automorphism"));
    }
    lab.check_indexing(og)?;
    Ok(preserves_unchecked(og, p, lab))
}

pub(crate) fn preserves_unchecked(og: &OrientedGraph, p: &Permutation, lab: &Labelling) -> bool {
    match lab.target {
        LabelTarget::Vertices => (0..og.n).all(|u| lab.labels[p.apply(u)] == lab.labels[u]),
        LabelTarget::Arcs => og.arcs.iter().enumerate().all(|(i, &(u, v))| {
            let j = og
                .arc_index(p.apply(u), p.apply(v))
                .expect("automorphism maps arcs to arcs");
            lab.labels[j] == lab.labels[i]
        }),
    }
}

/// True iff no non-trivial automorphism of og preserves lab.
///
/// Runs the label-constrained backtracker, so it does not require the group
/// to be materialized.
pub fn is_distinguishing(og: &OrientedGraph, lab: &Labelling) -> Result<bool> {
    lab.check_indexing(og)?;
    let (vlab, alab): (Option<&[u32]>, Option<&[u32]>) = match lab.target {
        LabelTarget::Vertices => (Some(&lab.labels), None),
        LabelTarget::Arcs => (None, Some(&lab.labels)),
    };
    let view = AdjView::oriented(og, alab);
    Ok(view.search(vlab, 1, true).is_empty())
}
