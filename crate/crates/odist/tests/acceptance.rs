//! End-to-end acceptance checks, one test per criterion. Each prints a
//! single `criterion N: pass|FAIL` line; run with `--nocapture` to see them
//! on success.

use std::collections::HashSet;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use odist::constructions::{
    all_x_to_y, find_asymmetric_latin_square, is_asymmetric_latin, latin_to_arc_colouring,
    no_asymmetric_square_exists,
};
use odist::graph::{orient, UndirectedGraph};
use odist::tables::{table_rows, verify_table};
use odist::words::{
    column_stabilizer_is_trivial, column_sum, from_deleted_words, in_degree_from_deleted,
    orientation_from_words, rigid_orientation_exists, theorem54_orientation, w_m_set, words_of,
    DeletedWordSet, RigidDecision,
};
use odist::{
    automorphisms, build_family, classical_bounds, distinguishing_exists, enumerate_orientations,
    extremal, is_distinguishing, is_rigid, parameter_value, reverse, undirected_parameter_value,
    Direction, Family, OrientationMask, ParamKind,
};

fn conclude(criterion: u8, failures: Vec<String>) {
    if failures.is_empty() {
        println!("criterion {criterion}: pass");
    } else {
        println!("criterion {criterion}: FAIL ({} problems)", failures.len());
        for f in &failures {
            println!("  - {f}");
        }
        panic!("criterion {criterion} failed");
    }
}

fn table_mismatches(table: u8) -> Vec<String> {
    verify_table(table, None, None)
        .unwrap()
        .iter()
        .filter(|r| !r.matched)
        .map(|r| {
            format!(
                "table {} row {} {}: expected {:?}, computed {:?}",
                r.table, r.row, r.family, r.expected, r.computed
            )
        })
        .collect()
}

#[test]
fn criterion_1_table1_reproduction() {
    conclude(1, table_mismatches(1));
}

#[test]
fn criterion_2_table2_reproduction() {
    let mut failures = table_mismatches(2);
    // P2 is absent from the arc table; both of its orientations are rigid
    // single arcs, so all four cells are 1.
    let g = build_family(&Family::Path(2)).unwrap();
    for kind in [ParamKind::ODp, ParamKind::OChiDp] {
        for dir in [Direction::Min, Direction::Max] {
            let v = extremal(&g, kind, dir).unwrap().value;
            if v != 1 {
                failures.push(format!("P2 {kind} {dir:?}: expected 1, got {v}"));
            }
        }
    }
    conclude(2, failures);
}

#[test]
fn criterion_3_rigidity_facts() {
    let mut failures = Vec::new();

    // The classic rigid orientation of K_{2,3}: Y-words 00, 01, 11.
    let k23 = from_deleted_words(&DeletedWordSet::parse(2, "10").unwrap()).unwrap();
    if !is_rigid(&k23).unwrap() {
        failures.push("rigid K_{2,3} orientation is not rigid".into());
    }

    // K_{2,4} has no rigid orientation at all.
    let k24 = build_family(&Family::Biclique(2, 4)).unwrap();
    let mut count = 0usize;
    for (mask, og) in enumerate_orientations(&k24).unwrap() {
        count += 1;
        if is_rigid(&og).unwrap() {
            failures.push(format!("K_{{2,4}} orientation {mask} claims to be rigid"));
        }
    }
    if count != 256 {
        failures.push(format!("expected 256 orientations of K_{{2,4}}, saw {count}"));
    }

    // Constructed rigid orientations for the small bicliques.
    let mut cases: Vec<(usize, usize)> = (4..=6).map(|n| (3, n)).collect();
    cases.extend((5..=13).map(|n| (4, n)));
    for (m, n) in cases {
        match rigid_orientation_exists(m, n, 1 << 20).unwrap() {
            RigidDecision::Yes(w) => {
                let og = w.orientation.expect("witness orientation");
                if !is_rigid(&og).unwrap() {
                    failures.push(format!("K_{{{m},{n}}} witness is not rigid"));
                }
            }
            other => failures.push(format!("K_{{{m},{n}}}: expected Yes, got {other:?}")),
        }
    }

    // The padded word sets for m = 5 stay rigid across the whole range.
    for k in 3..=10 {
        let dw = w_m_set(5, k).unwrap();
        let og = from_deleted_words(&dw).unwrap();
        if !column_stabilizer_is_trivial(&dw) || !is_rigid(&og).unwrap() {
            failures.push(format!("w_m_set(5,{k}) = {dw} is not rigid"));
        }
    }
    conclude(3, failures);
}

#[test]
fn criterion_4_labelled_construction() {
    let mut failures = Vec::new();
    for (m, n) in [(2usize, 5usize), (3, 8), (4, 14)] {
        let (og, lab, proper) = theorem54_orientation(m, n).unwrap();
        // P1: out-degrees of the y_j cycle through 1..m-1.
        for j in 1..=n {
            let want = 1 + (j % (m - 1));
            let got = og.out_degree(m + j - 1);
            if got != want {
                failures.push(format!("({m},{n}) P1 at y_{j}: out-degree {got}, want {want}"));
            }
        }
        // P2: y_{i(m-1)} dominates exactly x_i.
        for i in 1..=m {
            let j = i * (m - 1);
            if og.out_nbrs[m + j - 1] != 1u64 << (i - 1) {
                failures.push(format!("({m},{n}) P2 at i={i}"));
            }
        }
        let r = (n as u32).div_ceil(m as u32 - 1);
        if lab.r != r || !is_distinguishing(&og, &lab).unwrap() {
            failures.push(format!("({m},{n}): {}-labelling not distinguishing", lab.r));
        }
        if proper.r != r + 1 || !proper.is_proper(&og) || !is_distinguishing(&og, &proper).unwrap()
        {
            failures.push(format!("({m},{n}): proper {}-colouring fails", proper.r));
        }
    }
    conclude(4, failures);
}

#[test]
fn criterion_5_latin_squares() {
    let mut failures = Vec::new();
    // order 1 is vacuously asymmetric, so start at 2
    for n in 2..=5 {
        if !no_asymmetric_square_exists(n).unwrap() {
            failures.push(format!("asymmetric square of order {n} reported to exist"));
        }
    }
    match find_asymmetric_latin_square(7, 100_000, 42).unwrap() {
        None => failures.push("order-7 search exhausted its budget".into()),
        Some(sq) => {
            if !is_asymmetric_latin(&sq) {
                failures.push("order-7 witness is not asymmetric".into());
            }
            let og = all_x_to_y(7, 7).unwrap();
            let col = latin_to_arc_colouring(&sq, &og).unwrap();
            if !col.is_proper(&og)
                || col.distinct_labels_used() != 7
                || !is_distinguishing(&og, &col).unwrap()
            {
                failures.push("square does not yield a proper distinguishing 7-arc-colouring".into());
            }
        }
    }
    conclude(5, failures);
}

/// All eight extremal values, the four undirected parameters and the two
/// classical chromatic parameters of g, checked against the inequality
/// chains that relate them.
fn chain_failures(name: &str, g: &UndirectedGraph) -> Vec<String> {
    let mut failures = Vec::new();
    let ex = |k, d| {
        extremal(g, k, d).unwrap_or_else(|e| panic!("{name}: extremal {k} {d:?}: {e}")).value
    };
    let und = |k| {
        undirected_parameter_value(g, k)
            .unwrap_or_else(|e| panic!("{name}: undirected {k}: {e}"))
            .0
    };
    let (chi, chi_p) = classical_bounds(g).unwrap();

    let (od_min, od_max) = (ex(ParamKind::OD, Direction::Min), ex(ParamKind::OD, Direction::Max));
    let (cd_min, cd_max) =
        (ex(ParamKind::OChiD, Direction::Min), ex(ParamKind::OChiD, Direction::Max));
    let (d, chi_d) = (und(ParamKind::OD), und(ParamKind::OChiD));
    let mut check = |label: &str, ok: bool| {
        if !ok {
            failures.push(format!("{name}: chain '{label}' violated"));
        }
    };
    check("Dmin <= Dmax <= D", od_min <= od_max && od_max <= d);
    check("chi <= chiDmin <= chiDmax <= chiD", chi <= cd_min && cd_min <= cd_max && cd_max <= chi_d);
    check("D <= chiD", d <= chi_d);
    check("Dmin <= chiDmin", od_min <= cd_min);
    check("Dmax <= chiDmax", od_max <= cd_max);

    // K2's swap fixes its only edge, so the undirected arc parameters do
    // not exist; every other connected graph has them.
    if g.m() > 0 && !(g.n == 2 && g.m() == 1) {
        let (odp_min, odp_max) =
            (ex(ParamKind::ODp, Direction::Min), ex(ParamKind::ODp, Direction::Max));
        let (cdp_min, cdp_max) =
            (ex(ParamKind::OChiDp, Direction::Min), ex(ParamKind::OChiDp, Direction::Max));
        let (dp, chi_dp) = (und(ParamKind::ODp), und(ParamKind::OChiDp));
        check("D'min <= D'max <= D'", odp_min <= odp_max && odp_max <= dp);
        check(
            "chi' <= chiD'min <= chiD'max <= chiD'",
            chi_p <= cdp_min && cdp_min <= cdp_max && cdp_max <= chi_dp,
        );
        check("D' <= chiD'", dp <= chi_dp);
        check("D'min <= chiD'min", odp_min <= cdp_min);
        check("D'max <= chiD'max", odp_max <= cdp_max);
    }
    failures
}

/// Connected graphs on at most max_n vertices, one labelled representative
/// per isomorphism class.
fn connected_classes(max_n: usize) -> Vec<UndirectedGraph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let all_pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        let mut seen = HashSet::new();
        for bits in 0u32..1 << all_pairs.len() {
            let edges: Vec<(usize, usize)> = all_pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = UndirectedGraph::new(n, edges).unwrap();
            if !is_connected(&g) {
                continue;
            }
            // canonical form: minimal edge bitmask over all relabellings
            let canon = perms
                .iter()
                .map(|p| {
                    let mut mask = 0u32;
                    for &(u, v) in &g.edges {
                        let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                        let idx = all_pairs.iter().position(|&e| e == (a, b)).unwrap();
                        mask |= 1 << idx;
                    }
                    mask
                })
                .min()
                .unwrap();
            if seen.insert((n, canon)) {
                out.push(g);
            }
        }
    }
    out
}

fn is_connected(g: &UndirectedGraph) -> bool {
    let mut reach = 1u64;
    loop {
        let prev = reach;
        for &(u, v) in &g.edges {
            if reach >> u & 1 == 1 || reach >> v & 1 == 1 {
                reach |= 1 << u | 1 << v;
            }
        }
        if reach == prev {
            break;
        }
    }
    reach == (1u64 << g.n) - 1
}

#[test]
fn criterion_6a_inequality_chains() {
    let mut failures = Vec::new();
    let classes = connected_classes(5);
    assert_eq!(classes.len(), 1 + 1 + 2 + 6 + 21);
    for g in &classes {
        failures.extend(chain_failures(&format!("n={} edges={:?}", g.n, g.edges), g));
    }
    for (row, family, _) in table_rows(1).unwrap() {
        let g = build_family(&family).unwrap();
        failures.extend(chain_failures(&format!("row {row} {family}"), &g));
    }
    conclude(6, failures);
}

fn random_connected(rng: &mut ChaCha8Rng) -> UndirectedGraph {
    loop {
        let n = rng.gen_range(2..=8);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        if edges.is_empty() {
            continue;
        }
        let g = UndirectedGraph::new(n, edges).unwrap();
        if is_connected(&g) {
            return g;
        }
    }
}

#[test]
fn criterion_6b_6c_group_axioms_and_rigidity() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    for t in 0..200 {
        let g = random_connected(&mut rng);
        let mask =
            OrientationMask::new((0..g.m()).map(|_| rng.gen_bool(0.5)).collect());
        let og = orient(&g, &mask).unwrap();
        let group = automorphisms(&og).unwrap();
        let name = format!("sample {t} (n={}, mask {mask})", g.n);

        // group axioms: identity, closure, inverses
        let set: HashSet<_> = group.perms.iter().cloned().collect();
        if !group.perms[0].is_identity() {
            failures.push(format!("{name}: identity missing or not first"));
        }
        let closed = group
            .perms
            .iter()
            .all(|a| group.perms.iter().all(|b| set.contains(&a.compose(b))));
        if !closed {
            failures.push(format!("{name}: group not closed under composition"));
        }
        if !group.perms.iter().all(|a| set.contains(&a.inverse())) {
            failures.push(format!("{name}: group not closed under inverses"));
        }

        // reversing every arc preserves the automorphism group
        if automorphisms(&reverse(&og)).unwrap() != group {
            failures.push(format!("{name}: reversal changed the group"));
        }

        // a parameter value of 1 is exactly rigidity, for both targets
        let rigid = group.len() == 1;
        if rigid != is_rigid(&og).unwrap() {
            failures.push(format!("{name}: is_rigid disagrees with group order"));
        }
        for kind in [ParamKind::OD, ParamKind::ODp] {
            let (v, _) = parameter_value(&og, kind).unwrap();
            if (v == 1) != rigid {
                failures.push(format!("{name}: {kind} = {v} but rigid = {rigid}"));
            }
        }
    }
    conclude(6, failures);
}

#[test]
fn criterion_6d_tournaments() {
    let mut failures = Vec::new();
    let k5 = build_family(&Family::Complete(5)).unwrap();
    let mut count = 0usize;
    for (mask, og) in enumerate_orientations(&k5).unwrap() {
        count += 1;
        if distinguishing_exists(&og, ParamKind::OD, 2).unwrap().is_none() {
            failures.push(format!("tournament {mask} needs more than 2 labels"));
        }
    }
    if count != 1 << 10 {
        failures.push(format!("expected 1024 tournaments, saw {count}"));
    }
    conclude(6, failures);
}

#[test]
fn criterion_6e_word_round_trips() {
    let mut failures = Vec::new();
    for m in 1usize..=4 {
        let all: Vec<u64> = (0..1u64 << m).collect();
        for k in 0..=3usize.min((1 << m) - 1) {
            for subset in all.iter().copied().combinations(k) {
                let dw = DeletedWordSet::new(m, subset).unwrap();
                let og = from_deleted_words(&dw).unwrap();
                let ws = words_of(&og).unwrap();
                if orientation_from_words(&ws).unwrap().arcs != og.arcs {
                    failures.push(format!("m={m} {dw}: orientation round trip broke"));
                }
                if k > 0 && DeletedWordSet::parse(m, &dw.to_string()).unwrap() != dw {
                    failures.push(format!("m={m} {dw}: parse/display round trip broke"));
                }
                for i in 1..=m {
                    let direct = og.in_degree(i - 1) as u64;
                    let formula = (1u64 << (m - 1)) - column_sum(&dw, i).unwrap();
                    if in_degree_from_deleted(&dw, i).unwrap() != direct || formula != direct {
                        failures.push(format!("m={m} {dw}: in-degree of x_{i} off"));
                    }
                }
            }
        }
    }
    conclude(6, failures);
}

/// Brute-force distinguishing index of undirected K_{m,n} for m < n: the
/// least r admitting n distinct length-m words over 1..r whose set no
/// non-trivial position permutation preserves.
fn brute_dprime(m: usize, n: usize) -> u32 {
    assert!(2 <= m && m < n);
    let perms: Vec<Vec<usize>> = (0..m).permutations(m).skip(1).collect();
    for r in 1u32.. {
        let total = (r as u64).pow(m as u32);
        if total < n as u64 {
            continue;
        }
        let words: Vec<Vec<u32>> = (0..total)
            .map(|mut w| {
                let mut digits = vec![0u32; m];
                for d in digits.iter_mut().rev() {
                    *d = (w % r as u64) as u32;
                    w /= r as u64;
                }
                digits
            })
            .collect();
        let found = words.iter().combinations(n).any(|sel| {
            let set: HashSet<&Vec<u32>> = sel.iter().copied().collect();
            perms.iter().all(|p| {
                sel.iter().any(|w| {
                    let mapped: Vec<u32> = (0..m).map(|i| w[p[i]]).collect();
                    !set.contains(&mapped)
                })
            })
        });
        if found {
            return r;
        }
    }
    unreachable!()
}

#[test]
fn criterion_7_formula_cross_check() {
    use odist::DPrimeBiclique;
    let mut failures = Vec::new();
    for m in 2u32..=5 {
        for n in m + 1..=6 {
            let brute = brute_dprime(m as usize, n as usize);
            match odist::dprime_biclique_formula(m, n).unwrap() {
                DPrimeBiclique::Exact(r) => {
                    if brute != r {
                        failures.push(format!("K_{{{m},{n}}}: formula {r}, brute force {brute}"));
                    }
                }
                DPrimeBiclique::Ambiguous(r) => {
                    if (m, n) != (2, 3) && (m, n) != (3, 6) {
                        failures.push(format!("K_{{{m},{n}}}: unexpected boundary case"));
                    }
                    if brute != r && brute != r + 1 {
                        failures.push(format!(
                            "K_{{{m},{n}}}: boundary says {r} or {}, brute force {brute}",
                            r + 1
                        ));
                    }
                }
            }
        }
    }
    conclude(7, failures);
}
