//! Exact computation of the four distinguishing parameters of one
//! orientation, min/max scans over all orientations of a base graph,
//! classical chromatic bounds and the closed-form D'(K_{m,n}) helper.

use std::fmt;
use std::str::FromStr;

use crate::automorphism::{
    automorphisms, undirected_automorphisms, AutomorphismList, LabelTarget,
};
use crate::error::{cap, invalid, Result};
use crate::graph::{enumerate_orientations, OrientationMask, OrientedGraph, UndirectedGraph};
use crate::labelling::Labelling;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    /// Distinguishing number (vertex labellings).
    OD,
    /// Distinguishing chromatic number (proper vertex colourings).
    OChiD,
    /// Distinguishing index (arc labellings).
    ODp,
    /// Distinguishing chromatic index (proper arc colourings).
    OChiDp,
}

impl ParamKind {
    pub fn is_arc(self) -> bool {
        matches!(self, ParamKind::ODp | ParamKind::OChiDp)
    }

    pub fn is_proper(self) -> bool {
        matches!(self, ParamKind::OChiD | ParamKind::OChiDp)
    }

    pub fn all() -> [ParamKind; 4] {
        [ParamKind::OD, ParamKind::OChiD, ParamKind::ODp, ParamKind::OChiDp]
    }
}

impl fmt::Display for ParamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ParamKind::OD => "OD",
            ParamKind::OChiD => "OchiD",
            ParamKind::ODp => "ODp",
            ParamKind::OChiDp => "OchiDp",
        };
        write!(f, "{s}")
    }
}

impl FromStr for ParamKind {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "OD" => Ok(ParamKind::OD),
            "OchiD" => Ok(ParamKind::OChiD),
            "ODp" => Ok(ParamKind::ODp),
            "OchiDp" => Ok(ParamKind::OChiDp),
            _ => Err(invalid(format!("unknown parameter '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Min,
    Max,
}

impl FromStr for Direction {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(Direction::Min),
            "max" => Ok(Direction::Max),
            _ => Err(invalid(format!("direction must be min or max, got '{s}'"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExtremalResult {
    pub value: u32,
    pub witness_mask: OrientationMask,
    pub witness_labelling: Labelling,
    pub orientations_scanned: u64,
}

const LABEL_SEARCH_BUDGET: u64 = 200_000_000;

/// First-use-ordered backtracking over labellings: label k+1 may first
/// appear only after label k, killing label-permutation symmetry. Conflicts
/// (when given) enforce properness during assignment; the group check runs
/// on complete labellings only.
fn find_labelling(
    n_items: usize,
    r: u32,
    conflicts: Option<&[Vec<usize>]>,
    perms: &[Vec<usize>],
) -> Result<Option<Vec<u32>>> {
    let mut labels = vec![0u32; n_items];
    let mut budget = LABEL_SEARCH_BUDGET;
    if rec(0, 0, n_items, r, conflicts, perms, &mut labels, &mut budget)? {
        return Ok(Some(labels));
    }
    return Ok(None);

    #[allow(clippy::too_many_arguments)]
    fn rec(
        pos: usize,
        max_used: u32,
        n_items: usize,
        r: u32,
        conflicts: Option<&[Vec<usize>]>,
        perms: &[Vec<usize>],
        labels: &mut Vec<u32>,
        budget: &mut u64,
    ) -> Result<bool> {
        if *budget == 0 {
            return Err(cap("labelling search budget exhausted"));
        }
        *budget -= 1;
        if pos == n_items {
            let preserved = perms
                .iter()
                .any(|p| (0..n_items).all(|i| labels[p[i]] == labels[i]));
            return Ok(!preserved);
        }
        for label in 1..=(max_used + 1).min(r) {
            if let Some(cf) = conflicts {
                if cf[pos].iter().any(|&j| j < pos && labels[j] == label) {
                    continue;
                }
            }
            labels[pos] = label;
            if rec(pos + 1, max_used.max(label), n_items, r, conflicts, perms, labels, budget)? {
                return Ok(true);
            }
        }
        labels[pos] = 0;
        Ok(false)
    }
}

/// Item permutations induced on vertices or arcs by each non-trivial
/// group element.
fn item_perms(og: &OrientedGraph, kind: ParamKind, group: &AutomorphismList) -> Vec<Vec<usize>> {
    group
        .non_trivial()
        .map(|p| {
            if kind.is_arc() {
                og.arcs
                    .iter()
                    .map(|&(u, v)| {
                        og.arc_index(p.apply(u), p.apply(v))
                            .expect("automorphism maps arcs to arcs")
                    })
                    .collect()
            } else {
                p.image.clone()
            }
        })
        .collect()
}

fn vertex_conflicts(og: &OrientedGraph) -> Vec<Vec<usize>> {
    let mut cf = vec![Vec::new(); og.n];
    for &(u, v) in &og.arcs {
        cf[u].push(v);
        cf[v].push(u);
    }
    cf
}

fn arc_conflicts(og: &OrientedGraph) -> Vec<Vec<usize>> {
    let m = og.arcs.len();
    let mut cf = vec![Vec::new(); m];
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = og.arcs[i];
            let (c, d) = og.arcs[j];
            if a == c || a == d || b == c || b == d {
                cf[i].push(j);
                cf[j].push(i);
            }
        }
    }
    cf
}

/// A distinguishing (and, for chromatic kinds, proper) labelling of og with
/// at most r labels, or None. Deterministic: the lexicographically smallest
/// labelling under first-use enumeration order.
pub fn distinguishing_exists(
    og: &OrientedGraph,
    kind: ParamKind,
    r: u32,
) -> Result<Option<Labelling>> {
    if r == 0 {
        return Err(invalid("r must be at least 1"));
    }
    let group = automorphisms(og)?;
    distinguishing_exists_with_group(og, kind, r, &group)
}

pub fn distinguishing_exists_with_group(
    og: &OrientedGraph,
    kind: ParamKind,
    r: u32,
    group: &AutomorphismList,
) -> Result<Option<Labelling>> {
    let n_items = if kind.is_arc() { og.arcs.len() } else { og.n };
    let conflicts = if kind.is_proper() {
        Some(if kind.is_arc() { arc_conflicts(og) } else { vertex_conflicts(og) })
    } else {
        None
    };
    let perms = item_perms(og, kind, group);
    let found = find_labelling(n_items, r, conflicts.as_deref(), &perms)?;
    Ok(found.map(|labels| Labelling {
        target: if kind.is_arc() { LabelTarget::Arcs } else { LabelTarget::Vertices },
        labels,
        r,
    }))
}

/// The exact parameter value together with an optimal witness labelling.
pub fn parameter_value(og: &OrientedGraph, kind: ParamKind) -> Result<(u32, Labelling)> {
    let lb = lower_bound(og, kind)?;
    let group = automorphisms(og)?;
    parameter_value_inner(og, kind, lb, &group)
}

fn lower_bound(og: &OrientedGraph, kind: ParamKind) -> Result<u32> {
    Ok(match kind {
        ParamKind::OD | ParamKind::ODp => 1,
        ParamKind::OChiD => classical_bounds(&og.underlying())?.0,
        ParamKind::OChiDp => classical_bounds(&og.underlying())?.1,
    })
}

fn parameter_value_inner(
    og: &OrientedGraph,
    kind: ParamKind,
    lb: u32,
    group: &AutomorphismList,
) -> Result<(u32, Labelling)> {
    let n_items = if kind.is_arc() { og.arcs.len() } else { og.n } as u32;
    let mut r = lb.max(1);
    loop {
        if let Some(lab) = distinguishing_exists_with_group(og, kind, r, group)? {
            return Ok((r, lab));
        }
        r += 1;
        // labelling every item distinctly is always distinguishing and proper
        if r > n_items.max(1) {
            return Err(invalid("no distinguishing labelling found below trivial bound"));
        }
    }
}

/// Exact extremal value of a parameter over all orientations of g, with the
/// smallest-mask witness. Min scans stop early once the absolute lower
/// bound is attained; max scans inspect every orientation.
pub fn extremal(g: &UndirectedGraph, kind: ParamKind, dir: Direction) -> Result<ExtremalResult> {
    let lb = match kind {
        ParamKind::OD | ParamKind::ODp => 1,
        ParamKind::OChiD => classical_bounds(g)?.0,
        ParamKind::OChiDp => classical_bounds(g)?.1,
    };
    let mut best: Option<ExtremalResult> = None;
    let mut scanned = 0u64;
    for (mask, og) in enumerate_orientations(g)? {
        scanned += 1;
        let group = automorphisms(&og)?;
        let (value, lab) = parameter_value_inner(&og, kind, lb, &group)?;
        let better = match (&best, dir) {
            (None, _) => true,
            (Some(b), Direction::Min) => value < b.value,
            (Some(b), Direction::Max) => value > b.value,
        };
        if better {
            best = Some(ExtremalResult {
                value,
                witness_mask: mask,
                witness_labelling: lab,
                orientations_scanned: scanned,
            });
        }
        if dir == Direction::Min && best.as_ref().is_some_and(|b| b.value == lb) {
            break;
        }
    }
    let mut result = best.expect("a graph has at least one orientation");
    result.orientations_scanned = scanned;
    Ok(result)
}

/// Exact chromatic number and chromatic index of a base graph.
pub fn classical_bounds(g: &UndirectedGraph) -> Result<(u32, u32)> {
    let vertex_cf: Vec<Vec<usize>> = {
        let mut cf = vec![Vec::new(); g.n];
        for &(u, v) in &g.edges {
            cf[u].push(v);
            cf[v].push(u);
        }
        cf
    };
    let chi = smallest_proper(g.n, &vertex_cf)?;
    let edge_cf = g.adjacent_edge_pairs();
    let chi_prime = if g.m() == 0 { 0 } else { smallest_proper(g.m(), &edge_cf)? };
    Ok((chi, chi_prime))
}

fn smallest_proper(n_items: usize, conflicts: &[Vec<usize>]) -> Result<u32> {
    if n_items == 0 {
        return Ok(0);
    }
    let mut r = 1;
    loop {
        if find_labelling(n_items, r, Some(conflicts), &[])?.is_some() {
            return Ok(r);
        }
        r += 1;
    }
}

/// Distinguishing parameters of the base graph itself (all automorphisms,
/// not just orientation-preserving ones). Used for the inequality chains.
pub fn undirected_parameter_value(g: &UndirectedGraph, kind: ParamKind) -> Result<(u32, Labelling)> {
    let group = undirected_automorphisms(g)?;
    let n_items = if kind.is_arc() { g.m() } else { g.n };
    let conflicts = if kind.is_proper() {
        Some(if kind.is_arc() {
            g.adjacent_edge_pairs()
        } else {
            let mut cf = vec![Vec::new(); g.n];
            for &(u, v) in &g.edges {
                cf[u].push(v);
                cf[v].push(u);
            }
            cf
        })
    } else {
        None
    };
    let perms: Vec<Vec<usize>> = group
        .non_trivial()
        .map(|p| {
            if kind.is_arc() {
                g.edges
                    .iter()
                    .map(|&(u, v)| {
                        g.edge_index(p.apply(u), p.apply(v))
                            .expect("automorphism maps edges to edges")
                    })
                    .collect()
            } else {
                p.image.clone()
            }
        })
        .collect();
    let lb = match kind {
        ParamKind::OD | ParamKind::ODp => 1,
        ParamKind::OChiD => classical_bounds(g)?.0,
        ParamKind::OChiDp => classical_bounds(g)?.1,
    };
    let mut r = lb.max(1);
    loop {
        if let Some(labels) = find_labelling(n_items, r, conflicts.as_deref(), &perms)? {
            let target = if kind.is_arc() { LabelTarget::Arcs } else { LabelTarget::Vertices };
            return Ok((r, Labelling { target, labels, r }));
        }
        r += 1;
        if r > n_items.max(1) as u32 {
            return Err(invalid("no distinguishing labelling below trivial bound"));
        }
    }
}

/// Outcome of the closed-form D'(K_{m,n}) evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DPrimeBiclique {
    Exact(u32),
    /// The boundary case n = r^m - ceil(log_r m), which the closed form
    /// does not settle; the value is r or r+1.
    Ambiguous(u32),
}

/// Closed-form distinguishing index of K_{m,n} for 2 <= m < n.
pub fn dprime_biclique_formula(m: u32, n: u32) -> Result<DPrimeBiclique> {
    if m < 2 || m >= n {
        return Err(invalid("requires 2 <= m < n"));
    }
    // unique r with (r-1)^m < n <= r^m
    let mut r: u32 = 1;
    while pow(r, m) < n as u128 {
        r += 1;
    }
    let ceil_log_r_m = {
        // smallest t with r^t >= m
        let mut t = 0u32;
        while pow(r, t) < m as u128 {
            t += 1;
        }
        t
    };
    let boundary = pow(r, m) - ceil_log_r_m as u128;
    let n = n as u128;
    Ok(if n <= boundary - 1 {
        DPrimeBiclique::Exact(r)
    } else if n >= boundary + 1 {
        DPrimeBiclique::Exact(r + 1)
    } else {
        DPrimeBiclique::Ambiguous(r)
    })
}

fn pow(base: u32, exp: u32) -> u128 {
    (base as u128).saturating_pow(exp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, orient, Family, OrientationMask};

    fn directed(spec: Family, mask: &str) -> OrientedGraph {
        let g = build_family(&spec).unwrap();
        orient(&g, &mask.parse().unwrap()).unwrap()
    }

    #[test]
    fn existence_examples() {
        let p4 = directed(Family::Path(4), "000");
        let lab = distinguishing_exists(&p4, ParamKind::OD, 1).unwrap().unwrap();
        assert_eq!(lab.labels, vec![1, 1, 1, 1]);

        let c4 = directed(Family::Cycle(4), "0100");
        assert!(distinguishing_exists(&c4, ParamKind::OD, 1).unwrap().is_none());

        // orientation C'4 needs four colours for a distinguishing
        // vertex-colouring
        let c4p = directed(Family::Cycle(4), "0010");
        assert!(distinguishing_exists(&c4p, ParamKind::OChiD, 3).unwrap().is_none());
        let lab = distinguishing_exists(&c4p, ParamKind::OChiD, 4).unwrap().unwrap();
        assert!(lab.is_proper(&c4p));
        assert!(crate::automorphism::is_distinguishing(&c4p, &lab).unwrap());
    }

    #[test]
    fn parameter_values() {
        // all-out star K_{1,3}
        let star = directed(Family::Biclique(1, 3), "000");
        assert_eq!(parameter_value(&star, ParamKind::OD).unwrap().0, 3);

        let c6 = directed(Family::Cycle(6), "010000");
        assert_eq!(parameter_value(&c6, ParamKind::OChiDp).unwrap().0, 3);

        // cyclic arc colours 1,2,1,3 on the directed C4 are proper and
        // distinguishing
        let c4 = directed(Family::Cycle(4), "0100");
        // colours 1,2,1,3 along the cycle, reordered to the arc list
        // (0,1),(3,0),(1,2),(2,3)
        let lab = Labelling::arcs(vec![1, 3, 2, 1], 3);
        assert!(lab.is_proper(&c4));
        assert!(crate::automorphism::is_distinguishing(&c4, &lab).unwrap());
        assert!(parameter_value(&c4, ParamKind::OChiDp).unwrap().0 <= 3);
    }

    #[test]
    fn extremal_examples() {
        let c6 = build_family(&Family::Cycle(6)).unwrap();
        let res = extremal(&c6, ParamKind::OD, Direction::Max).unwrap();
        assert_eq!(res.value, 2);
        assert_eq!(res.orientations_scanned, 64);

        let c4 = build_family(&Family::Cycle(4)).unwrap();
        assert_eq!(extremal(&c4, ParamKind::OChiD, Direction::Max).unwrap().value, 4);

        let k33 = build_family(&Family::Biclique(3, 3)).unwrap();
        assert_eq!(extremal(&k33, ParamKind::OChiDp, Direction::Max).unwrap().value, 4);
    }

    #[test]
    fn extremal_witness_reverifies() {
        let c5 = build_family(&Family::Cycle(5)).unwrap();
        let res = extremal(&c5, ParamKind::OChiD, Direction::Max).unwrap();
        let og = orient(&c5, &res.witness_mask).unwrap();
        assert!(res.witness_labelling.is_proper(&og));
        assert!(crate::automorphism::is_distinguishing(&og, &res.witness_labelling).unwrap());
        assert!(res.witness_labelling.distinct_labels_used() as u32 <= res.value);
    }

    #[test]
    fn chromatic_examples() {
        let c5 = build_family(&Family::Cycle(5)).unwrap();
        assert_eq!(classical_bounds(&c5).unwrap(), (3, 3));
        let k4 = build_family(&Family::Complete(4)).unwrap();
        assert_eq!(classical_bounds(&k4).unwrap(), (4, 3));
        let k23 = build_family(&Family::Biclique(2, 3)).unwrap();
        assert_eq!(classical_bounds(&k23).unwrap(), (2, 3));
    }

    #[test]
    fn dprime_formula_cases() {
        assert_eq!(dprime_biclique_formula(3, 4).unwrap(), DPrimeBiclique::Exact(2));
        assert_eq!(dprime_biclique_formula(2, 4).unwrap(), DPrimeBiclique::Exact(3));
        assert_eq!(dprime_biclique_formula(2, 3).unwrap(), DPrimeBiclique::Ambiguous(2));
        assert!(dprime_biclique_formula(1, 3).is_err());
        assert!(dprime_biclique_formula(3, 3).is_err());
    }

    #[test]
    fn rigid_iff_od_one() {
        let g = build_family(&Family::Cycle(5)).unwrap();
        for (_, og) in crate::graph::enumerate_orientations(&g).unwrap() {
            let rigid = crate::automorphism::is_rigid(&og).unwrap();
            assert_eq!(parameter_value(&og, ParamKind::OD).unwrap().0 == 1, rigid);
            assert_eq!(parameter_value(&og, ParamKind::ODp).unwrap().0 == 1, rigid);
        }
    }

    #[test]
    fn value_invariant_under_reversal() {
        let g = build_family(&Family::Path(5)).unwrap();
        let og = orient(&g, &OrientationMask::from_value(5, 4)).unwrap();
        let rev = crate::graph::reverse(&og);
        for kind in ParamKind::all() {
            assert_eq!(
                parameter_value(&og, kind).unwrap().0,
                parameter_value(&rev, kind).unwrap().0
            );
        }
    }
}
