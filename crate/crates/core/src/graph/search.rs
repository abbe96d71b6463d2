//! Exact structural search: maximal cliques, induced quadrangles, induced
//! complete bipartite subgraphs. All searches are exhaustive and return
//! deterministically ordered witnesses.

use super::Graph;
use crate::error::{Error, Result};

struct Bitset<'a> {
    rows: &'a [u64],
    words: usize,
}

impl Bitset<'_> {
    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }
}

fn popcount(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

fn iter_bits(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            }
        })
    })
}

/// All maximal cliques of size >= `min_size`, each sorted ascending, the list
/// ordered lexicographically. Pivoting keeps the recursion near the cliques;
/// the size cutoff prunes branches that cannot reach `min_size`.
pub fn enumerate_maximal_cliques(g: &Graph, min_size: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let (rows, words) = g.adjacency_bitsets();
    let adj = Bitset { rows: &rows, words };
    let mut p = vec![0u64; words];
    for v in 0..n {
        p[v / 64] |= 1 << (v % 64);
    }
    let mut out = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(&adj, &mut r, p, vec![0u64; words], min_size, &mut out);
    out.sort();
    out
}

fn bron_kerbosch(
    adj: &Bitset,
    r: &mut Vec<usize>,
    p: Vec<u64>,
    x: Vec<u64>,
    min_size: usize,
    out: &mut Vec<Vec<usize>>,
) {
    let p_count = popcount(&p);
    if r.len() + p_count < min_size {
        return;
    }
    if p_count == 0 {
        if popcount(&x) == 0 {
            let mut clique = r.clone();
            clique.sort_unstable();
            out.push(clique);
        }
        return;
    }
    // pivot: vertex of P ∪ X with the most neighbors in P
    let pivot = iter_bits(&p)
        .chain(iter_bits(&x))
        .max_by_key(|&u| {
            adj.row(u)
                .iter()
                .zip(&p)
                .map(|(a, b)| (a & b).count_ones() as usize)
                .sum::<usize>()
        })
        .expect("P is non-empty");
    let mut candidates = p.clone();
    for (c, a) in candidates.iter_mut().zip(adj.row(pivot)) {
        *c &= !a;
    }
    let mut p = p;
    let mut x = x;
    for v in iter_bits(&candidates).collect::<Vec<_>>() {
        let nv = adj.row(v);
        let p_next: Vec<u64> = p.iter().zip(nv).map(|(a, b)| a & b).collect();
        let x_next: Vec<u64> = x.iter().zip(nv).map(|(a, b)| a & b).collect();
        r.push(v);
        bron_kerbosch(adj, r, p_next, x_next, min_size, out);
        r.pop();
        p[v / 64] &= !(1 << (v % 64));
        x[v / 64] |= 1 << (v % 64);
    }
}

/// First induced quadrangle (4-cycle) in cyclic vertex order, if any: scans
/// non-adjacent pairs (u, v) for a non-adjacent pair of common neighbors.
pub fn find_induced_quadrangle(g: &Graph) -> Option<[usize; 4]> {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let common: Vec<usize> = g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            for (i, &w1) in common.iter().enumerate() {
                for &w2 in &common[i + 1..] {
                    if !g.has_edge(w1, w2) {
                        return Some([u, w1, v, w2]);
                    }
                }
            }
        }
    }
    None
}

/// First induced K_{a,b}: vertex sets (A, B) with |A| = a, |B| = b, both
/// independent, every cross pair adjacent, no other edges. Exhaustive search
/// with common-neighborhood pruning, capped at a*b <= 12.
pub fn find_induced_complete_bipartite(
    g: &Graph,
    a: usize,
    b: usize,
) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    if a < 1 || b < 1 {
        return Err(Error::InvalidParameters(
            "induced complete bipartite sides must be >= 1".into(),
        ));
    }
    if a * b > 12 {
        return Err(Error::InvalidParameters(format!(
            "induced complete bipartite search capped at a*b <= 12 (got {a}*{b})"
        )));
    }
    let mut side_a = Vec::with_capacity(a);
    // candidates for B so far: common neighbors of everything in A
    let mut common: Vec<usize> = Vec::new();
    let found = extend_side_a(g, a, b, 0, &mut side_a, &mut common);
    Ok(found.map(|side_b| (side_a, side_b)))
}

fn extend_side_a(
    g: &Graph,
    a: usize,
    b: usize,
    from: usize,
    side_a: &mut Vec<usize>,
    common: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if side_a.len() == a {
        return pick_independent_b(g, b, common);
    }
    for v in from..g.n() {
        // A must stay independent
        if side_a.iter().any(|&u| g.has_edge(u, v)) {
            continue;
        }
        let next_common: Vec<usize> = if side_a.is_empty() {
            g.neighbors(v).to_vec()
        } else {
            common.iter().copied().filter(|&w| g.has_edge(v, w)).collect()
        };
        if next_common.len() < b {
            continue;
        }
        side_a.push(v);
        let mut next_common = next_common;
        std::mem::swap(common, &mut next_common);
        if let Some(found) = extend_side_a(g, a, b, v + 1, side_a, common) {
            return Some(found);
        }
        std::mem::swap(common, &mut next_common);
        side_a.pop();
    }
    None
}

/// Independent b-subset of `candidates` (all already adjacent to every A
/// vertex), ascending first-found order.
fn pick_independent_b(g: &Graph, b: usize, candidates: &[usize]) -> Option<Vec<usize>> {
    fn rec(g: &Graph, b: usize, candidates: &[usize], from: usize, acc: &mut Vec<usize>) -> bool {
        if acc.len() == b {
            return true;
        }
        if candidates.len() - from < b - acc.len() {
            return false;
        }
        for i in from..candidates.len() {
            let v = candidates[i];
            if acc.iter().any(|&u| g.has_edge(u, v)) {
                continue;
            }
            acc.push(v);
            if rec(g, b, candidates, i + 1, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let mut acc = Vec::with_capacity(b);
    if rec(g, b, candidates, 0, &mut acc) {
        Some(acc)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{generate, Family, GeneratorSpec};

    fn k(n: usize) -> Graph {
        generate(&GeneratorSpec::new(Family::Complete, n, 0)).unwrap()
    }

    fn c(n: usize) -> Graph {
        generate(&GeneratorSpec::new(Family::Cycle, n, 0)).unwrap()
    }

    #[test]
    fn k4_single_maximal_clique() {
        assert_eq!(enumerate_maximal_cliques(&k(4), 2), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn c5_has_no_triangles() {
        assert!(enumerate_maximal_cliques(&c(5), 3).is_empty());
        // edges are still its maximal cliques
        assert_eq!(enumerate_maximal_cliques(&c(5), 2).len(), 5);
    }

    #[test]
    fn hamming_2_3_grid_lines() {
        let g = generate(&GeneratorSpec::new(Family::Hamming, 3, 2)).unwrap();
        let cliques = enumerate_maximal_cliques(&g, 3);
        // 3 rows + 3 columns, all of size 3; vertex (i,j) has index 3i+j
        assert_eq!(
            cliques,
            vec![
                vec![0, 1, 2],
                vec![0, 3, 6],
                vec![1, 4, 7],
                vec![2, 5, 8],
                vec![3, 4, 5],
                vec![6, 7, 8],
            ]
        );
    }

    #[test]
    fn quadrangle_in_c4_and_not_in_k4() {
        let q = find_induced_quadrangle(&c(4)).unwrap();
        let mut sorted = q.to_vec();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 2, 3]);
        assert!(find_induced_quadrangle(&k(4)).is_none());
    }

    #[test]
    fn quadrangle_witness_is_induced() {
        let g = generate(&GeneratorSpec::new(Family::Hamming, 3, 2)).unwrap();
        let [u, w1, v, w2] = find_induced_quadrangle(&g).unwrap();
        assert!(g.has_edge(u, w1) && g.has_edge(w1, v) && g.has_edge(v, w2) && g.has_edge(w2, u));
        assert!(!g.has_edge(u, v) && !g.has_edge(w1, w2));
    }

    #[test]
    fn induced_bipartite_respects_cap() {
        assert!(find_induced_complete_bipartite(&k(3), 4, 4).is_err());
    }

    #[test]
    fn induced_k22_present_and_absent() {
        assert!(find_induced_complete_bipartite(&c(4), 2, 2)
            .unwrap()
            .is_some());
        assert!(find_induced_complete_bipartite(&k(5), 2, 2)
            .unwrap()
            .is_none());
        let g = generate(&GeneratorSpec::new(Family::Johnson, 5, 2)).unwrap();
        let (side_a, side_b) = find_induced_complete_bipartite(&g, 2, 2).unwrap().unwrap();
        for &u in &side_a {
            for &v in &side_b {
                assert!(g.has_edge(u, v));
            }
        }
        assert!(!g.has_edge(side_a[0], side_a[1]));
        assert!(!g.has_edge(side_b[0], side_b[1]));
    }

    #[test]
    fn induced_star_in_path() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let (side_a, side_b) = find_induced_complete_bipartite(&g, 1, 3).unwrap().unwrap();
        assert_eq!(side_a, vec![1]);
        assert_eq!(side_b, vec![0, 2, 3]);
    }

    /// Oracle: maximal cliques by exhaustive subset search on small graphs.
    #[test]
    fn cliques_match_exhaustive_search() {
        let graphs = [
            c(6),
            k(5),
            generate(&GeneratorSpec::new(Family::Hamming, 3, 2)).unwrap(),
            generate(&GeneratorSpec::new(Family::Johnson, 5, 2)).unwrap(),
            generate(&GeneratorSpec::new(Family::CocktailParty, 4, 0)).unwrap(),
            Graph::new(7, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (3, 5), (5, 6)])
                .unwrap(),
        ];
        for g in &graphs {
            for min_size in 1..4 {
                let mut expected = Vec::new();
                for mask in 1u32..1 << g.n() {
                    let set: Vec<usize> = (0..g.n()).filter(|&v| mask & (1 << v) != 0).collect();
                    if set.len() < min_size {
                        continue;
                    }
                    let is_clique = set
                        .iter()
                        .enumerate()
                        .all(|(i, &u)| set[i + 1..].iter().all(|&v| g.has_edge(u, v)));
                    if !is_clique {
                        continue;
                    }
                    let maximal = (0..g.n()).all(|w| {
                        set.contains(&w) || !set.iter().all(|&u| g.has_edge(u, w))
                    });
                    if maximal {
                        expected.push(set);
                    }
                }
                expected.sort();
                assert_eq!(enumerate_maximal_cliques(g, min_size), expected);
            }
        }
    }
}
