//! Generators for the named graph families. Vertex order is lexicographic on
//! the underlying combinatorial labels so tests can hard-code witnesses.

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Family {
    Johnson,
    Hamming,
    Doob,
    Shrikhande,
    CocktailParty,
    CompleteBipartiteLine,
    Complete,
    Cycle,
}

/// Parameters selecting one member of a family. `s` is the size parameter,
/// `d` the dimension/diameter parameter (also the second side of
/// `CompleteBipartiteLine`); `doob_t`/`doob_l` are the Doob factor counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub s: usize,
    pub d: usize,
    pub doob_t: usize,
    pub doob_l: usize,
}

impl GeneratorSpec {
    pub fn new(family: Family, s: usize, d: usize) -> GeneratorSpec {
        GeneratorSpec {
            family,
            s,
            d,
            doob_t: 0,
            doob_l: 0,
        }
    }

    pub fn doob(doob_t: usize, doob_l: usize) -> GeneratorSpec {
        GeneratorSpec {
            family: Family::Doob,
            s: 0,
            d: 0,
            doob_t,
            doob_l,
        }
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    match spec.family {
        Family::Johnson => johnson(spec.s, spec.d),
        Family::Hamming => hamming(spec.d, spec.s),
        Family::Doob => doob(spec.doob_t, spec.doob_l),
        Family::Shrikhande => Ok(shrikhande()),
        Family::CocktailParty => cocktail_party(spec.s),
        Family::CompleteBipartiteLine => complete_bipartite_line(spec.s, spec.d),
        Family::Complete => complete(spec.s),
        Family::Cycle => cycle(spec.s),
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Lexicographic rank of a sorted d-subset of {0..s-1}.
fn subset_rank(set: &[usize], s: usize) -> usize {
    let d = set.len();
    let mut rank = 0;
    let mut prev: isize = -1;
    for (p, &v) in set.iter().enumerate() {
        for t in (prev + 1) as usize..v {
            rank += binomial(s - 1 - t, d - 1 - p);
        }
        prev = v as isize;
    }
    rank
}

/// All d-subsets of {0..s-1} in lexicographic order.
fn subsets_lex(s: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(s, d));
    let mut cur: Vec<usize> = (0..d).collect();
    loop {
        out.push(cur.clone());
        // advance to the next combination
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + s - d {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..d {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Vertices are the d-subsets of an s-set; adjacency iff the subsets differ by
/// exactly one element.
fn johnson(s: usize, d: usize) -> Result<Graph> {
    if d < 1 {
        return Err(Error::InvalidParameters("Johnson requires d >= 1".into()));
    }
    if s < 2 * d {
        return Err(Error::InvalidParameters(format!(
            "Johnson requires s >= 2d (got s = {s}, d = {d})"
        )));
    }
    let sets = subsets_lex(s, d);
    let mut edges = Vec::new();
    for (i, set) in sets.iter().enumerate() {
        let inside = set;
        let mut outside = Vec::with_capacity(s - d);
        let member = {
            let mut mask = vec![false; s];
            for &x in inside {
                mask[x] = true;
            }
            mask
        };
        for (x, &m) in member.iter().enumerate() {
            if !m {
                outside.push(x);
            }
        }
        let mut neighbor = inside.clone();
        for pos in 0..d {
            for &y in &outside {
                neighbor.clone_from(inside);
                neighbor[pos] = y;
                neighbor.sort_unstable();
                let j = subset_rank(&neighbor, s);
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    let mut g = Graph::new(sets.len(), &edges)?;
    g.set_label(format!("J({s},{d})"));
    Ok(g)
}

/// Vertices are d-tuples over {0..s-1} in row-major order; adjacency iff the
/// tuples differ in exactly one position.
fn hamming(d: usize, s: usize) -> Result<Graph> {
    if d < 1 {
        return Err(Error::InvalidParameters("Hamming requires d >= 1".into()));
    }
    if s < 2 {
        return Err(Error::InvalidParameters("Hamming requires s >= 2".into()));
    }
    let n = s.checked_pow(d as u32).ok_or_else(|| {
        Error::InvalidParameters(format!("Hamming H({d},{s}) vertex count overflows"))
    })?;
    let mut edges = Vec::new();
    // stride of coordinate p in the row-major index
    let mut stride = vec![1usize; d];
    for p in (0..d.saturating_sub(1)).rev() {
        stride[p] = stride[p + 1] * s;
    }
    for v in 0..n {
        for p in 0..d {
            let digit = v / stride[p] % s;
            for other in digit + 1..s {
                edges.push((v, v + (other - digit) * stride[p]));
            }
        }
    }
    let mut g = Graph::new(n, &edges)?;
    g.set_label(format!("H({d},{s})"));
    Ok(g)
}

/// 4x4 torus with difference set {±(1,0), ±(0,1), ±(1,1)}; vertex (a,b) has
/// index 4a+b.
fn shrikhande() -> Graph {
    let diffs = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)];
    let mut edges = Vec::new();
    for a in 0..4usize {
        for b in 0..4usize {
            let u = 4 * a + b;
            for &(da, db) in &diffs {
                let v = 4 * ((a + da) % 4) + (b + db) % 4;
                if u < v {
                    edges.push((u, v));
                }
            }
        }
    }
    let mut g = Graph::new(16, &edges).expect("fixed construction is valid");
    g.set_label("Shrikhande".to_string());
    g
}

/// Cartesian product of H(doob_t, 4) with doob_l copies of the Shrikhande
/// graph.
fn doob(doob_t: usize, doob_l: usize) -> Result<Graph> {
    if doob_l < 1 {
        return Err(Error::InvalidParameters("Doob requires doob_l >= 1".into()));
    }
    let mut g = if doob_t > 0 {
        hamming(doob_t, 4)?
    } else {
        shrikhande()
    };
    let start = if doob_t > 0 { 0 } else { 1 };
    for _ in start..doob_l {
        g = g.cartesian_product(&shrikhande());
    }
    g.set_label(format!("Doob({doob_t},{doob_l})"));
    Ok(g)
}

/// Complete multipartite graph with s parts of size 2: K_{2s} minus the
/// perfect matching {2i, 2i+1}.
fn cocktail_party(s: usize) -> Result<Graph> {
    if s < 2 {
        return Err(Error::InvalidParameters(
            "CocktailParty requires s >= 2 parts".into(),
        ));
    }
    let n = 2 * s;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if v != u + 1 || u % 2 != 0 {
                edges.push((u, v));
            }
        }
    }
    let mut g = Graph::new(n, &edges)?;
    g.set_label(format!("K_{{{s}x2}}"));
    Ok(g)
}

/// Line graph of K_{s,t} (the s x t rook's graph): vertices (i,j) with index
/// i*t + j, adjacent iff they agree in exactly one coordinate.
fn complete_bipartite_line(s: usize, t: usize) -> Result<Graph> {
    if s < 1 || t < 1 {
        return Err(Error::InvalidParameters(
            "CompleteBipartiteLine requires both sides >= 1".into(),
        ));
    }
    let mut edges = Vec::new();
    for i in 0..s {
        for j in 0..t {
            let u = i * t + j;
            for j2 in j + 1..t {
                edges.push((u, i * t + j2));
            }
            for i2 in i + 1..s {
                edges.push((u, i2 * t + j));
            }
        }
    }
    let mut g = Graph::new(s * t, &edges)?;
    g.set_label(format!("L(K_{{{s},{t}}})"));
    Ok(g)
}

fn complete(s: usize) -> Result<Graph> {
    if s < 1 {
        return Err(Error::InvalidParameters("Complete requires s >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 0..s {
        for v in u + 1..s {
            edges.push((u, v));
        }
    }
    let mut g = Graph::new(s, &edges)?;
    g.set_label(format!("K_{s}"));
    Ok(g)
}

fn cycle(s: usize) -> Result<Graph> {
    if s < 3 {
        return Err(Error::InvalidParameters("Cycle requires s >= 3".into()));
    }
    let mut edges: Vec<(usize, usize)> = (0..s - 1).map(|u| (u, u + 1)).collect();
    edges.push((0, s - 1));
    let mut g = Graph::new(s, &edges)?;
    g.set_label(format!("C_{s}"));
    Ok(g)
}
