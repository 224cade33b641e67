//! Explicit constructions: rigid orientations of the supported families,
//! the catalogued C6 colourings, the mod-(n+1) arc colouring of K_{n,n},
//! and asymmetric Latin squares with their induced arc colourings.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::automorphism::{is_distinguishing, is_rigid};
use crate::error::{cap, invalid, Error, Result};
use crate::graph::{build_family, orient, Family, OrientationMask, OrientedGraph};
use crate::labelling::Labelling;
use crate::words::{self, RigidDecision};

/// A rigid orientation of the given family, verified before return:
/// directed paths, the directed cycle with one arc reversed, transitive
/// tournaments, the staircase K_{n,n}; other bicliques go through the
/// word-set decision procedure.
pub fn rigid_orientation(spec: &Family) -> Result<OrientedGraph> {
    let og = match spec {
        Family::Path(_) | Family::Cycle(_) | Family::Complete(_) => {
            // all arcs low -> high: directed path, directed cycle with the
            // (v_1,v_n) arc reversed, or transitive tournament
            let g = build_family(spec)?;
            orient(&g, &OrientationMask::new(vec![false; g.m()]))?
        }
        Family::Biclique(m, n) if m == n => words::staircase_orientation(*n)?,
        Family::Biclique(m, n) => {
            match words::rigid_orientation_exists(*m, *n, 1 << 20)? {
                RigidDecision::Yes(w) => w.orientation.ok_or_else(|| {
                    cap(format!("rigid orientation of K_{{{m},{n}}} is too large to materialize"))
                })?,
                RigidDecision::No(reason) => {
                    return Err(invalid(format!(
                        "K_{{{m},{n}}} has no rigid orientation: {}",
                        reason.describe()
                    )))
                }
                RigidDecision::Unknown => {
                    return Err(cap(format!(
                        "rigidity of K_{{{m},{n}}} undecided within budget"
                    )))
                }
            }
        }
        Family::File(_) => return Err(invalid("no rigid construction for file graphs")),
    };
    assert!(is_rigid(&og)?, "construction failed the rigidity check");
    Ok(og)
}

/// The four non-rigid orientations of C6 with their catalogued
/// distinguishing proper 3-colourings of vertices and arcs. Vertices
/// v1..v6 = 0..5 around the cycle; masks follow the canonical edge order
/// (0,1),(0,5),(1,2),(2,3),(3,4),(4,5).
pub fn c6_catalog() -> Result<Vec<(OrientedGraph, Labelling, Labelling)>> {
    let g = build_family(&Family::Cycle(6))?;
    let entries: [(&str, [u32; 6], [u32; 6]); 4] = [
        // directed cycle
        ("010000", [1, 2, 3, 2, 3, 2], [1, 2, 2, 3, 2, 3]),
        // alternating orientation
        ("001010", [1, 2, 3, 1, 2, 3], [1, 3, 2, 3, 1, 2]),
        // two directed 3-paths meeting at v4 and v1
        ("000011", [1, 2, 3, 1, 2, 3], [1, 2, 2, 1, 2, 1]),
        // two directed 2-paths and opposite arcs at v3, v5
        ("000101", [1, 2, 3, 1, 2, 3], [1, 2, 2, 1, 2, 1]),
    ];
    let mut out = Vec::with_capacity(4);
    for (mask, vl, al) in entries {
        let og = orient(&g, &mask.parse()?)?;
        assert!(!is_rigid(&og)?, "catalog orientation must be non-rigid");
        let vlab = Labelling::vertices(vl.to_vec(), 3);
        let alab = Labelling::arcs(al.to_vec(), 3);
        for lab in [&vlab, &alab] {
            lab.check_indexing(&og)?;
            assert!(lab.is_proper(&og), "catalog labelling must be proper");
            assert!(is_distinguishing(&og, lab)?, "catalog labelling must distinguish");
        }
        out.push((og, vlab, alab));
    }
    Ok(out)
}

/// The (n+1)-label arc colouring of K_{n,n} given by
/// lambda(x_i y_j) = i + j mod (n+1): proper, and distinguishing for every
/// orientation in the supported range.
pub fn modular_arc_colouring(n: usize) -> Result<Labelling> {
    if !(3..=6).contains(&n) {
        return Err(invalid(format!("modular colouring defined for 3 <= n <= 6, got {n}")));
    }
    let g = build_family(&Family::Biclique(n, n))?;
    let labels: Vec<u32> = g
        .edges
        .iter()
        .map(|&(x, y)| {
            let (i, j) = (x + 1, y - n + 1);
            (((i + j) % (n + 1)) + 1) as u32
        })
        .collect();
    Ok(Labelling::arcs(labels, (n + 1) as u32))
}

/// An n x n array of symbols 1..n forming a Latin square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinSquare {
    pub n: usize,
    pub cells: Vec<Vec<u32>>,
}

impl LatinSquare {
    pub fn new(cells: Vec<Vec<u32>>) -> Result<Self> {
        let n = cells.len();
        if n == 0 {
            return Err(invalid("latin square must have positive order"));
        }
        let valid_line = |line: &[u32]| {
            let mut seen = vec![false; n];
            line.len() == n
                && line.iter().all(|&s| {
                    let ok = (1..=n as u32).contains(&s) && !seen[(s - 1) as usize];
                    if ok {
                        seen[(s - 1) as usize] = true;
                    }
                    ok
                })
        };
        if !cells.iter().all(|row| valid_line(row)) {
            return Err(invalid("every row must be a permutation of 1..n"));
        }
        for j in 0..n {
            let col: Vec<u32> = cells.iter().map(|row| row[j]).collect();
            if !valid_line(&col) {
                return Err(invalid("every column must be a permutation of 1..n"));
            }
        }
        Ok(LatinSquare { n, cells })
    }

    /// The Cayley table of Z_n: L[i][j] = (i+j mod n) + 1.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(invalid("latin square must have positive order"));
        }
        LatinSquare::new(
            (0..n)
                .map(|i| (0..n).map(|j| ((i + j) % n + 1) as u32).collect())
                .collect(),
        )
    }
}

impl fmt::Display for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let strs: Vec<String> = row.iter().map(|s| s.to_string()).collect();
            write!(f, "{}", strs.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for LatinSquare {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cells: Vec<Vec<u32>> = s
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|t| t.parse::<u32>().map_err(|_| invalid(format!("bad symbol '{t}'"))))
                    .collect()
            })
            .collect::<Result<_>>()?;
        LatinSquare::new(cells)
    }
}

/// True iff the only autotopism (alpha, beta, gamma) with
/// L[alpha(i)][beta(j)] = gamma(L[i][j]) is the trivial one. For each row
/// permutation alpha and each image beta(0), gamma is forced by column 0
/// and beta by the image of row 0; the forced triple is then verified on
/// the whole square.
pub fn is_asymmetric_latin(l: &LatinSquare) -> bool {
    let n = l.n;
    let mut alpha: Vec<usize> = vec![0; n];
    let mut used = vec![false; n];
    !some_autotopism(l, 0, &mut alpha, &mut used)
}

fn some_autotopism(l: &LatinSquare, depth: usize, alpha: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
    let n = l.n;
    if depth == n {
        return complete_autotopism(l, alpha);
    }
    for t in 0..n {
        if !used[t] {
            used[t] = true;
            alpha[depth] = t;
            if some_autotopism(l, depth + 1, alpha, used) {
                return true;
            }
            used[t] = false;
        }
    }
    false
}

fn complete_autotopism(l: &LatinSquare, alpha: &[usize]) -> bool {
    let n = l.n;
    for b0 in 0..n {
        // column 0 forces gamma: gamma(L[i][0]) = L[alpha(i)][b0]
        let mut gamma = vec![usize::MAX; n];
        for i in 0..n {
            gamma[(l.cells[i][0] - 1) as usize] = (l.cells[alpha[i]][b0] - 1) as usize;
        }
        // row 0 forces beta: L[alpha(0)][beta(j)] = gamma(L[0][j])
        let mut pos = vec![usize::MAX; n];
        for j in 0..n {
            pos[(l.cells[alpha[0]][j] - 1) as usize] = j;
        }
        let beta: Vec<usize> = (0..n)
            .map(|j| pos[gamma[(l.cells[0][j] - 1) as usize]])
            .collect();
        if beta[0] != b0 {
            continue;
        }
        let trivial = alpha.iter().enumerate().all(|(i, &a)| i == a)
            && beta.iter().enumerate().all(|(j, &b)| j == b)
            && gamma.iter().enumerate().all(|(s, &g)| s == g);
        if trivial {
            continue;
        }
        let holds = (0..n).all(|i| {
            (0..n).all(|j| {
                (l.cells[alpha[i]][beta[j]] - 1) as usize == gamma[(l.cells[i][j] - 1) as usize]
            })
        });
        if holds {
            return true;
        }
    }
    false
}

/// All reduced Latin squares of order n (first row and first column in
/// natural order). Intended for n <= 5.
fn reduced_squares(n: usize) -> Vec<LatinSquare> {
    let mut cells = vec![vec![0u32; n]; n];
    for j in 0..n {
        cells[0][j] = (j + 1) as u32;
    }
    for (i, row) in cells.iter_mut().enumerate() {
        row[0] = (i + 1) as u32;
    }
    let mut out = Vec::new();
    fill(&mut cells, 1, 1, n, &mut out);
    return out;

    fn fill(cells: &mut Vec<Vec<u32>>, i: usize, j: usize, n: usize, out: &mut Vec<LatinSquare>) {
        if i == n {
            out.push(LatinSquare::new(cells.clone()).expect("construction keeps latin property"));
            return;
        }
        let (ni, nj) = if j + 1 == n { (i + 1, 1) } else { (i, j + 1) };
        for s in 1..=n as u32 {
            let clash = (0..j).any(|jj| cells[i][jj] == s) || (0..i).any(|ii| cells[ii][j] == s);
            if !clash {
                cells[i][j] = s;
                fill(cells, ni, nj, n, out);
                cells[i][j] = 0;
            }
        }
    }
}

/// A uniform-ish random Latin square: rows extended one at a time with a
/// seeded shuffled symbol order, restarting the row backtracking on
/// failure.
fn random_square(n: usize, rng: &mut ChaCha8Rng) -> LatinSquare {
    loop {
        if let Some(sq) = try_random_square(n, rng) {
            return sq;
        }
    }
}

fn try_random_square(n: usize, rng: &mut ChaCha8Rng) -> Option<LatinSquare> {
    let mut cells: Vec<Vec<u32>> = Vec::with_capacity(n);
    for _ in 0..n {
        let mut row = vec![0u32; n];
        let mut order: Vec<u32> = (1..=n as u32).collect();
        order.shuffle(rng);
        if !extend_row(&cells, &mut row, 0, n, &order) {
            return None;
        }
        cells.push(row);
    }
    Some(LatinSquare::new(cells).expect("construction keeps latin property"))
}

fn extend_row(done: &[Vec<u32>], row: &mut Vec<u32>, j: usize, n: usize, order: &[u32]) -> bool {
    if j == n {
        return true;
    }
    for &s in order {
        let clash = row[..j].contains(&s) || done.iter().any(|r| r[j] == s);
        if !clash {
            row[j] = s;
            if extend_row(done, row, j + 1, n, order) {
                return true;
            }
            row[j] = 0;
        }
    }
    false
}

/// Searches for an asymmetric Latin square of order n. Orders up to 5 are
/// settled exhaustively (none exist; asymmetry is isotopy-invariant, so
/// checking the reduced squares suffices). From order 6 on, seeded random
/// squares are tested up to `budget` attempts; any hit is returned
/// verified.
pub fn find_asymmetric_latin_square(n: usize, budget: usize, seed: u64) -> Result<Option<LatinSquare>> {
    if n == 0 {
        return Err(invalid("order must be positive"));
    }
    if n <= 5 {
        // order 1 is vacuously asymmetric but excluded by convention; the
        // trivial square carries no distinguishing content
        debug_assert!(n == 1 || reduced_squares(n).iter().all(|sq| !is_asymmetric_latin(sq)));
        return Ok(None);
    }
    if n > 9 {
        return Err(cap("orders beyond 9 are not supported"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        let sq = random_square(n, &mut rng);
        if is_asymmetric_latin(&sq) {
            return Ok(Some(sq));
        }
    }
    Ok(None)
}

/// Exhaustively confirms that no Latin square of order n is asymmetric by
/// scanning all reduced squares. Practical for n <= 5 (and, slowly, n = 6).
pub fn no_asymmetric_square_exists(n: usize) -> Result<bool> {
    if n == 0 || n > 6 {
        return Err(cap("exhaustive scan supported for orders 1..=6"));
    }
    Ok(reduced_squares(n).iter().all(|sq| !is_asymmetric_latin(sq)))
}

/// Arc labelling of an orientation of K_{n,n} reading the symbol in row i,
/// column j for the arc between x_i and y_j.
pub fn latin_to_arc_colouring(l: &LatinSquare, og: &OrientedGraph) -> Result<Labelling> {
    let Some((m, n)) = og.parts else {
        return Err(invalid("not a biclique orientation with declared parts"));
    };
    if m != l.n || n != l.n {
        return Err(invalid(format!(
            "square order {} does not match K_{{{m},{n}}}",
            l.n
        )));
    }
    let labels: Vec<u32> = og
        .arcs
        .iter()
        .map(|&(u, v)| {
            let (x, y) = if u < m { (u, v) } else { (v, u) };
            l.cells[x][y - m]
        })
        .collect();
    Ok(Labelling::arcs(labels, l.n as u32))
}

/// The all-X->Y orientation of K_{n,n}, whose automorphism group is the
/// full S_n x S_n.
pub fn all_x_to_y(m: usize, n: usize) -> Result<OrientedGraph> {
    let g = build_family(&Family::Biclique(m, n))?;
    orient(&g, &OrientationMask::new(vec![false; g.m()]))
}
