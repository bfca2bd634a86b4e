//! Graph generation: random labeled graphs and all graphs up to isomorphism.

use std::collections::HashSet;

use rand::Rng;

use super::iso::refine_pair;
use super::Graph;

/// `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n).expect("random graphs stay within the vertex limit");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.set_edge(u, v, true);
            }
        }
    }
    g
}

/// Upper-triangle bit code of `g` under `order` (position -> vertex).
fn code_under(g: &Graph, order: &[usize]) -> u64 {
    let mut code = 0u64;
    let mut bit = 0;
    for j in 1..order.len() {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

/// Minimal upper-triangle code over all orderings that sort vertices by
/// refined colour. Two graphs on `n <= 11` vertices are isomorphic iff their
/// codes are equal.
pub fn canonical_code(g: &Graph) -> u64 {
    assert!(g.n() <= 11, "canonical codes need n <= 11");
    let (colors, _) = refine_pair(g, g).expect("a graph refines consistently with itself");
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (colors[v], v));
    for &v in &order {
        match classes.last_mut() {
            Some(c) if colors[c[0]] == colors[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    permute_classes(
        g,
        &mut classes,
        0,
        &mut Vec::with_capacity(g.n()),
        &mut best,
    );
    best
}

fn permute_classes(
    g: &Graph,
    classes: &mut [Vec<usize>],
    ci: usize,
    prefix: &mut Vec<usize>,
    best: &mut u64,
) {
    if ci == classes.len() {
        *best = (*best).min(code_under(g, prefix));
        return;
    }
    let k = classes[ci].len();
    // Heap's algorithm over the members of class `ci`.
    let mut c = vec![0usize; k];
    let base = prefix.len();
    prefix.extend_from_slice(&classes[ci]);
    permute_classes(g, classes, ci + 1, prefix, best);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                prefix.swap(base, base + i);
            } else {
                prefix.swap(base + c[i], base + i);
            }
            permute_classes(g, classes, ci + 1, prefix, best);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    prefix.truncate(base);
}

fn from_code(n: usize, code: u64) -> Graph {
    let mut g = Graph::empty(n).expect("small");
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if (code >> bit) & 1 == 1 {
                g.set_edge(i, j, true);
            }
            bit += 1;
        }
    }
    g
}

/// One representative of every isomorphism class of graphs on `n` vertices
/// (`n <= 8`), in increasing canonical-code order.
pub fn nonisomorphic(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "exhaustive generation is limited to n <= 8");
    let mut level: Vec<Graph> = vec![Graph::empty(0).expect("empty")];
    for k in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for nbrs in 0u64..(1 << (k - 1)) {
                let mut rows = g.rows().to_vec();
                for (u, r) in rows.iter_mut().enumerate() {
                    if (nbrs >> u) & 1 == 1 {
                        *r |= 1 << (k - 1);
                    }
                }
                rows.push(nbrs);
                let h = Graph::from_rows(rows).expect("symmetric by construction");
                let code = canonical_code(&h);
                if seen.insert(code) {
                    next.push(code);
                }
            }
        }
        next.sort_unstable();
        level = next.into_iter().map(|c| from_code(k, c)).collect();
    }
    level
}

/// All nonisomorphic graphs with `1..=max_n` vertices.
pub fn nonisomorphic_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(nonisomorphic).collect()
}
