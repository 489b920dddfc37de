//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p search-order --test acceptance`.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use search_order::chordal_bipartite::{solve_psop_lbfs_cb_rooted, solve_psop_lbfs_cb_unrooted};
use search_order::fixtures::{self, ids};
use search_order::generate;
use search_order::generic::{solve_psop_gs_rooted, solve_psop_gs_rooted_with_stats, solve_psop_unrooted};
use search_order::graph::{bfs_layering, find_split_partition};
use search_order::oba::{check_oba, solve_oba};
use search_order::oracle::{brute_force_oba, brute_force_psop};
use search_order::reductions::{
    end_vertex_order, extract_f_tree, extract_l_tree, f_tree_to_psop, l_tree_to_psop_bipartite,
};
use search_order::search::{check_lbfs_4point, enumerate_search_orderings, is_search_ordering, run_plus_search};
use search_order::split::{
    build_lbfs_clique_relation, check_nested_property, compute_premature_set, nested_partial_order,
    solve_psop_lbfs_split, solve_psop_mcs_split, PrematureMode,
};
use search_order::{Graph, ObaInstance, Ordering, PartialOrder, Search, Solution, Vertex};

/// Criterion 8: allowed growth of the median wall time when the input grows fourfold.
const SCALING_RATIO_LIMIT: f64 = 6.0;
/// Criterion 8: timed runs per size after one warm-up; the median is compared.
const SCALING_RUNS: usize = 7;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let took = start.elapsed();
    check(took < limit, || format!("took {took:?}, limit {limit:?}"))?;
    Ok(took)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let g = fixtures::fig1();
    let pi = fixtures::fig1_order();
    let mcs = solve_psop_mcs_split(&g, &pi).map_err(|e| e.to_string())?;
    check(!mcs.is_found(), || format!("MCS solver found {mcs:?}"))?;
    let lbfs = solve_psop_lbfs_split(&g, &pi).map_err(|e| e.to_string())?;
    check(!lbfs.is_found(), || format!("LBFS solver found {lbfs:?}"))?;

    let sp = find_split_partition(&g).map_err(|e| e.to_string())?;
    let a = compute_premature_set(&g, &sp, &pi, PrematureMode::Lbfs);
    let dec = check_nested_property(&g, &sp, &pi, &a).map_err(|v| v.describe(&g))?;
    let pn = nested_partial_order(&g, &sp, &pi, &a, &dec).map_err(|e| e.to_string())?;
    let rel = build_lbfs_clique_relation(&g, &sp, &pi, &a, &pn);
    let mut got: Vec<(Vec<Vertex>, Vec<Vertex>)> = rel.tuples().map(|(x, y)| (x.to_vec(), y.to_vec())).collect();
    got.sort();
    let mut want = vec![
        (ids(&g, &["a"]), ids(&g, &["b", "c"])),
        (ids(&g, &["b"]), ids(&g, &["a", "c"])),
    ];
    want.sort();
    check(got == want, || format!("clique relation {got:?}"))?;

    let mns = brute_force_psop(&g, Search::Mns, &pi, None).map_err(|e| e.to_string())?;
    check(mns.is_found(), || "no MNS ordering found".into())?;
    let witness = Ordering::new(ids(&g, &["f", "a", "b", "c", "e", "g", "d"]), 7).unwrap();
    check(is_search_ordering(&g, Search::Mns, &witness).unwrap(), || {
        "witness is not an MNS ordering".into()
    })?;
    check(pi.is_linear_extension(&witness).unwrap(), || {
        "witness does not extend the order".into()
    })?;
    let took = within(start, Duration::from_secs(1))?;
    Ok(format!("4 checks in {took:?}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut found, total) = (0, 600);
    for round in 0..total {
        let n = rng.gen_range(1..=7);
        let p = rng.gen_range(0.0..0.6);
        let g = generate::random_connected_graph(&mut rng, n, p);
        let pairs = rng.gen_range(0..=2 * n);
        let pi = if round % 2 == 0 {
            generate::forced_order(&mut rng, &g, Search::Gs, pairs).0
        } else {
            generate::random_order(&mut rng, n, pairs)
        };
        let minimal: Vec<Vertex> = pi.minimal_elements().collect();
        let root = minimal[rng.gen_range(0..minimal.len())];
        let got = solve_psop_gs_rooted(&g, root, &pi).unwrap();
        let want = brute_force_psop(&g, Search::Gs, &pi, Some(root)).unwrap();
        check(got.is_found() == want.is_found(), || {
            format!("{g:?} root {root} {pi:?}: {got:?} vs {want:?}")
        })?;
        if let Some(o) = got.ordering() {
            found += 1;
            check(o.first() == Some(root), || format!("{o:?} does not start at {root}"))?;
            check(is_search_ordering(&g, Search::Gs, o).unwrap(), || {
                format!("{o:?} is not a GS ordering")
            })?;
            check(pi.is_linear_extension(o).unwrap(), || {
                format!("{o:?} does not extend {pi:?}")
            })?;
        }
    }
    let took = within(start, Duration::from_secs(30))?;
    Ok(format!(
        "{total} instances, {found} feasible, 100% agreement in {took:?}"
    ))
}

fn random_oba(rng: &mut ChaCha8Rng) -> ObaInstance {
    let m = rng.gen_range(1..=7);
    let mut inst = ObaInstance::new((0..m).collect());
    let subset = |rng: &mut ChaCha8Rng| -> Vec<usize> {
        let k = rng.gen_range(0..=3.min(m));
        (0..k).map(|_| rng.gen_range(0..m)).collect()
    };
    let pool = rng.gen_range(1..=6);
    for _ in 0..pool {
        let s = subset(rng);
        inst.add_set(s);
    }
    let hidden = generate::random_permutation(rng, m);
    let forced = rng.gen_bool(0.5);
    for _ in 0..rng.gen_range(0..=6) {
        let (a, b) = (rng.gen_range(0..pool), rng.gen_range(0..pool));
        inst.relation.push((a, b));
        if forced && !check_oba(hidden.as_slice(), &inst).unwrap() {
            inst.relation.pop();
        }
    }
    inst
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut found, total) = (0, 2000);
    for _ in 0..total {
        let inst = random_oba(&mut rng);
        let got = solve_oba(&inst).unwrap();
        let want = brute_force_oba(&inst).unwrap();
        check(got.is_some() == want.is_some(), || {
            format!("{inst:?}: {got:?} vs {want:?}")
        })?;
        if let Some(sigma) = got {
            found += 1;
            check(check_oba(&sigma, &inst).unwrap(), || {
                format!("{sigma:?} fails {inst:?}")
            })?;
        }
    }
    let took = within(start, Duration::from_secs(30))?;
    Ok(format!(
        "{total} instances, {found} feasible, 100% agreement in {took:?}"
    ))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut found, mut forced_found, total) = (0, 0, 600);
    for round in 0..total {
        let n = rng.gen_range(1..=10);
        let g = generate::random_chordal_bipartite_graph(&mut rng, n);
        let pairs = rng.gen_range(0..=n);
        let forced = round % 2 == 0;
        let (pi, root) = if forced {
            let (pi, sigma) = generate::forced_order(&mut rng, &g, Search::Lbfs, pairs);
            (pi, sigma[0])
        } else {
            let pi = generate::random_order(&mut rng, n, pairs);
            let minimal: Vec<Vertex> = pi.minimal_elements().collect();
            let root = minimal[rng.gen_range(0..minimal.len())];
            (pi, root)
        };
        let got = solve_psop_lbfs_cb_rooted(&g, root, &pi).unwrap();
        let want = brute_force_psop(&g, Search::Lbfs, &pi, Some(root)).unwrap();
        check(got.is_found() == want.is_found(), || {
            format!("{g:?} root {root} {pi:?}: {got:?} vs {want:?}")
        })?;
        if forced {
            check(got.is_found(), || {
                format!("forced instance rejected: {g:?} root {root} {pi:?}")
            })?;
            forced_found += 1;
        }
        if let Some(o) = got.ordering() {
            found += 1;
            check(o.first() == Some(root), || format!("{o:?} does not start at {root}"))?;
            check(check_lbfs_4point(&g, o).unwrap(), || {
                format!("{o:?} fails the 4-point condition")
            })?;
            check(pi.is_linear_extension(o).unwrap(), || {
                format!("{o:?} does not extend {pi:?}")
            })?;
        }
    }
    let took = within(start, Duration::from_secs(120))?;
    Ok(format!(
        "{total} instances ({forced_found} forced), {found} feasible, 100% agreement in {took:?}"
    ))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let total = 600;
    let mut summary = Vec::new();
    for (search, solve) in [
        (
            Search::Mcs,
            solve_psop_mcs_split as fn(&Graph, &PartialOrder) -> search_order::Result<Solution>,
        ),
        (Search::Lbfs, solve_psop_lbfs_split),
    ] {
        let mut found = 0;
        for round in 0..total {
            let n = rng.gen_range(1..=9);
            let g = generate::random_split_graph(&mut rng, n);
            let pairs = rng.gen_range(0..=n);
            let forced = round % 2 == 0;
            let pi = if forced {
                generate::forced_order(&mut rng, &g, search, pairs).0
            } else {
                generate::random_order(&mut rng, n, pairs)
            };
            let got = solve(&g, &pi).unwrap();
            let want = brute_force_psop(&g, search, &pi, None).unwrap();
            check(got.is_found() == want.is_found(), || {
                format!("{search} {g:?} {pi:?}: {got:?} vs {want:?}")
            })?;
            check(!forced || got.is_found(), || {
                format!("{search}: forced instance rejected: {g:?} {pi:?} {got:?}")
            })?;
            if let Some(o) = got.ordering() {
                found += 1;
                check(is_search_ordering(&g, search, o).unwrap(), || {
                    format!("{o:?} is not a {search} ordering")
                })?;
                check(pi.is_linear_extension(o).unwrap(), || {
                    format!("{o:?} does not extend {pi:?}")
                })?;
            }
        }
        summary.push(format!("{search}: {total} instances, {found} feasible"));
    }
    let took = within(start, Duration::from_secs(120))?;
    Ok(format!("{}; 100% agreement in {took:?}", summary.join("; ")))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out
}

fn four_point_equivalence(rng: &mut ChaCha8Rng) -> Result<String, String> {
    let graphs = 60;
    let mut checked = 0;
    for _ in 0..graphs {
        let n = rng.gen_range(1..=6);
        let p = rng.gen_range(0.0..0.7);
        let g = generate::random_connected_graph(rng, n, p);
        for p in permutations(n) {
            let sigma = Ordering::new(p, n).unwrap();
            let by_sim = is_search_ordering(&g, Search::Lbfs, &sigma).unwrap();
            let by_4pt = check_lbfs_4point(&g, &sigma).unwrap();
            check(by_sim == by_4pt, || {
                format!("{g:?} {sigma:?}: simulation {by_sim}, 4-point {by_4pt}")
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "four-point equivalence: {checked} permutations of {graphs} graphs"
    ))
}

fn plus_search_witness(rng: &mut ChaCha8Rng) -> Result<String, String> {
    let runs = 300;
    for _ in 0..runs {
        let n = rng.gen_range(1..=9);
        let p = rng.gen_range(0.0..0.6);
        let g = generate::random_connected_graph(rng, n, p);
        let search = Search::ALL[rng.gen_range(0..5)];
        let rho = generate::random_permutation(rng, n);
        let sigma = run_plus_search(&g, search, &rho).unwrap();
        for u in sigma.iter() {
            for v in sigma.iter().skip(sigma.position(u) + 1) {
                if rho.before(v, u) {
                    let witness = sigma
                        .iter()
                        .take(sigma.position(u))
                        .any(|x| g.has_edge(x, u) && !g.has_edge(x, v));
                    check(witness, || {
                        format!("{search} {g:?} rho {rho:?}: no witness for {u} before {v}")
                    })?;
                }
            }
        }
    }
    Ok(format!("plus-search witness: {runs} runs"))
}

fn layer_comparability(rng: &mut ChaCha8Rng) -> Result<String, String> {
    let mut graphs = vec![fixtures::ladder(), fixtures::c4(), fixtures::path(5)];
    for _ in 0..150 {
        let n = rng.gen_range(1..=10);
        graphs.push(generate::random_chordal_bipartite_graph(rng, n));
    }
    let mut pairs = 0;
    for g in &graphs {
        for r in g.vertices() {
            let lay = bfs_layering(g, r).unwrap();
            let prev = |x: Vertex| -> Vec<Vertex> {
                let i = lay.layer_of[x];
                g.neighbors(x)
                    .iter()
                    .copied()
                    .filter(|&w| i > 0 && lay.layer_of[w] == i - 1)
                    .collect()
            };
            for i in 1..lay.depth() {
                let layer = lay.layer(i);
                for (ix, &x) in layer.iter().enumerate() {
                    for &y in &layer[ix + 1..] {
                        let share = g
                            .neighbors(x)
                            .iter()
                            .any(|&z| lay.layer_of[z] == i + 1 && g.has_edge(z, y));
                        if !share {
                            continue;
                        }
                        pairs += 1;
                        let (px, py) = (prev(x), prev(y));
                        let ok = px.iter().all(|w| g.has_edge(*w, y)) || py.iter().all(|w| g.has_edge(*w, x));
                        check(ok, || format!("{g:?} root {r}: {x} and {y} not comparable"))?;
                    }
                }
            }
        }
    }
    Ok(format!("layer comparability: {pairs} pairs in {} graphs", graphs.len()))
}

fn premature_structure(rng: &mut ChaCha8Rng) -> Result<String, String> {
    let graphs = 40;
    let mut orderings = 0;
    for _ in 0..graphs {
        let n = rng.gen_range(2..=8);
        let g = generate::random_split_graph(rng, n);
        let sp = find_split_partition(&g).unwrap();
        for search in [Search::Mns, Search::Lbfs, Search::Mcs] {
            for sigma in enumerate_search_orderings(&g, search, None, 3000).unwrap().orderings {
                orderings += 1;
                for x in sp.independent.iter().copied() {
                    let px = sigma.position(x);
                    let premature = sp.clique.iter().any(|&c| sigma.position(c) > px);
                    if !premature {
                        continue;
                    }
                    let earlier_ok = sp
                        .clique
                        .iter()
                        .filter(|&&c| sigma.position(c) < px)
                        .all(|&c| g.has_edge(c, x));
                    let last_neighbor = g.neighbors(x).iter().map(|&w| sigma.position(w)).max().unwrap_or(0);
                    let later_ok = sigma
                        .iter()
                        .skip(px + 1)
                        .filter(|&w| !g.has_edge(w, x))
                        .all(|w| sigma.position(w) > last_neighbor);
                    check(earlier_ok && later_ok, || {
                        format!("{search} {g:?} {sigma:?}: premature {x}")
                    })?;
                }
            }
        }
    }
    Ok(format!(
        "premature structure: {orderings} orderings of {graphs} split graphs"
    ))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let parts = [
        four_point_equivalence(&mut rng)?,
        plus_search_witness(&mut rng)?,
        layer_comparability(&mut rng)?,
        premature_structure(&mut rng)?,
    ];
    Ok(format!("zero violations; {}", parts.join("; ")))
}

fn random_bipartite_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let tree = generate::random_connected_graph(rng, n, 0.0);
    let color = tree.bipartition().unwrap();
    let mut edges: Vec<_> = tree.edges().collect();
    for u in 0..n {
        for v in u + 1..n {
            if color[u] != color[v] && !tree.has_edge(u, v) && rng.gen_bool(0.3) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// A random spanning tree, or half of the time the search tree of a random ordering.
fn some_tree(
    rng: &mut ChaCha8Rng,
    g: &Graph,
    search: Search,
    extract: fn(&Graph, &Ordering) -> search_order::Result<search_order::reductions::RootedTree>,
) -> search_order::reductions::RootedTree {
    if rng.gen_bool(0.5) {
        let rho = generate::random_permutation(rng, g.vertex_count());
        extract(g, &run_plus_search(g, search, &rho).unwrap()).unwrap()
    } else {
        let root = rng.gen_range(0..g.vertex_count());
        generate::random_spanning_tree(rng, g, root)
    }
}

fn end_vertex_suite(rng: &mut ChaCha8Rng, rounds: usize) -> Result<usize, String> {
    let mut checks = 0;
    for round in 0..rounds {
        let n = rng.gen_range(1..=7);
        let (g, combos): (Graph, Vec<Search>) = match round % 3 {
            0 => (generate::random_connected_graph(rng, n, 0.3), vec![Search::Gs]),
            1 => (
                generate::random_chordal_bipartite_graph(rng, n),
                vec![Search::Gs, Search::Lbfs],
            ),
            _ => (
                generate::random_split_graph(rng, n),
                vec![Search::Gs, Search::Lbfs, Search::Mcs],
            ),
        };
        let t = rng.gen_range(0..n);
        let pi = end_vertex_order(&g, t).unwrap();
        for search in combos {
            let solved = match (round % 3, search) {
                (_, Search::Gs) => solve_psop_unrooted(&g, &pi, solve_psop_gs_rooted),
                (1, Search::Lbfs) => solve_psop_lbfs_cb_unrooted(&g, &pi),
                (_, Search::Lbfs) => solve_psop_lbfs_split(&g, &pi),
                _ => solve_psop_mcs_split(&g, &pi),
            }
            .unwrap();
            let all = enumerate_search_orderings(&g, search, None, usize::MAX)
                .unwrap()
                .orderings;
            let exists = all.iter().any(|o| o.last() == Some(t));
            check(solved.is_found() == exists, || {
                format!("end vertex {t}, {search}, {g:?}: {solved:?}")
            })?;
            if let Some(o) = solved.ordering() {
                check(o.last() == Some(t), || format!("{o:?} does not end at {t}"))?;
            }
            checks += 1;
        }
    }
    Ok(checks)
}

fn f_tree_suite(rng: &mut ChaCha8Rng, rounds: usize) -> Result<usize, String> {
    let mut checks = 0;
    for _ in 0..rounds {
        let n = rng.gen_range(1..=7);
        let g = generate::random_connected_graph(rng, n, 0.35);
        for search in [Search::Gs, Search::Lbfs, Search::Mcs, Search::Mns] {
            let tree = some_tree(rng, &g, search, extract_f_tree);
            let all = enumerate_search_orderings(&g, search, Some(tree.root), usize::MAX)
                .unwrap()
                .orderings;
            let by_enum = all.iter().any(|o| extract_f_tree(&g, o).unwrap() == tree);
            let by_psop = match f_tree_to_psop(&g, &tree) {
                Ok(pi) => brute_force_psop(&g, search, &pi, Some(tree.root)).unwrap().is_found(),
                Err(_) => false,
            };
            check(by_enum == by_psop, || {
                format!("F-tree {tree:?} of {g:?}, {search}: enum {by_enum}, psop {by_psop}")
            })?;
            checks += 1;
        }
    }
    Ok(checks)
}

fn l_tree_suite(rng: &mut ChaCha8Rng, rounds: usize) -> Result<usize, String> {
    let mut checks = 0;
    for _ in 0..rounds {
        let n = rng.gen_range(1..=7);
        let g = random_bipartite_graph(rng, n);
        for search in [Search::Lbfs, Search::Bfs] {
            let tree = some_tree(rng, &g, search, extract_l_tree);
            let all = enumerate_search_orderings(&g, search, Some(tree.root), usize::MAX)
                .unwrap()
                .orderings;
            let by_enum = all.iter().any(|o| extract_l_tree(&g, o).unwrap() == tree);
            let by_psop = match l_tree_to_psop_bipartite(&g, &tree) {
                Ok(pi) => brute_force_psop(&g, search, &pi, Some(tree.root)).unwrap().is_found(),
                Err(_) => false,
            };
            check(by_enum == by_psop, || {
                format!("L-tree {tree:?} of {g:?}, {search}: enum {by_enum}, psop {by_psop}")
            })?;
            checks += 1;
        }
    }
    Ok(checks)
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let rounds = 120;
    let ev = end_vertex_suite(&mut rng, rounds)?;
    let ft = f_tree_suite(&mut rng, rounds)?;
    let lt = l_tree_suite(&mut rng, rounds)?;
    Ok(format!(
        "{} instances; end-vertex {ev}, F-tree {ft}, L-tree {lt} checks, 100% agreement",
        3 * rounds
    ))
}

fn scaling_instance(n: usize, rng: &mut ChaCha8Rng) -> (Graph, PartialOrder) {
    let g = fixtures::path(n);
    let pairs: Vec<_> = (0..n)
        .map(|_| {
            let i = rng.gen_range(0..n - 1);
            (i, rng.gen_range(i + 1..n))
        })
        .collect();
    (g, PartialOrder::new(n, &pairs).unwrap())
}

fn median_solve_time(g: &Graph, pi: &PartialOrder) -> Result<Duration, String> {
    let mut times = Vec::new();
    solve_psop_gs_rooted_with_stats(g, 0, pi).unwrap();
    for _ in 0..SCALING_RUNS {
        let start = Instant::now();
        let (s, stats) = solve_psop_gs_rooted_with_stats(g, 0, pi).unwrap();
        times.push(start.elapsed());
        check(s.is_found(), || "path instance should be feasible".into())?;
        check(stats.max_scans_per_list <= 1, || {
            format!("a list was scanned {} times", stats.max_scans_per_list)
        })?;
    }
    times.sort();
    Ok(times[SCALING_RUNS / 2])
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (g1, pi1) = scaling_instance(100_000, &mut rng);
    let (g4, pi4) = scaling_instance(400_000, &mut rng);
    let t1 = median_solve_time(&g1, &pi1)?;
    let t4 = median_solve_time(&g4, &pi4)?;
    let ratio = t4.as_secs_f64() / t1.as_secs_f64().max(1e-9);
    check(ratio <= SCALING_RATIO_LIMIT, || {
        format!("100k: {t1:?}, 400k: {t4:?}, ratio {ratio:.2} > {SCALING_RATIO_LIMIT}")
    })?;
    Ok(format!(
        "100k: {t1:?}, 400k: {t4:?}, ratio {ratio:.2} (limit {SCALING_RATIO_LIMIT})"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("split example golden suite", criterion_1),
        ("generic search vs oracle", criterion_2),
        ("one-before-all vs oracle", criterion_3),
        ("chordal bipartite LBFS vs oracle", criterion_4),
        ("split MCS/LBFS vs oracle", criterion_5),
        ("search ordering invariants", criterion_6),
        ("end-vertex and search tree reductions", criterion_7),
        ("generic search scaling", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {}: {name} ... PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: {name} ... FAIL ({why})", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
