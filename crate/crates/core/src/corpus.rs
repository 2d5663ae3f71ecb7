//! Named example matroids and seeded random generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::matroid::{default_labels, Matroid, MatroidExpr};

/// Facts a corpus entry is expected to satisfy; `None` means not recorded.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExpectedFacts {
    pub order: Option<usize>,
    pub tangle_count: Option<usize>,
    pub breadth: Option<usize>,
    pub weakly_four_connected: Option<bool>,
    pub connected: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub expr: MatroidExpr,
    pub facts: ExpectedFacts,
}

impl CorpusEntry {
    pub fn build(&self) -> Result<Matroid> {
        self.expr.build()
    }
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn u37() -> Matroid {
    Matroid::uniform(3, 7).expect("valid")
}

/// `M(K4)` on `a..f` with triangles `{c,d,e}`, `{a,b,e}`, `{b,c,f}`,
/// `{a,d,f}`; `e` and `f` are the two edges in no common triangle.
pub fn k4() -> Matroid {
    let edges = [(0, 3), (1, 3), (1, 2), (0, 2), (0, 1), (2, 3)];
    Matroid::graphic(4, &edges, labels(&["a", "b", "c", "d", "e", "f"])).expect("valid")
}

/// Rank-4 wheel with hub 0: spokes `s1..s4`, rim edges `r12, r23, r34, r41`.
pub fn wheel4() -> Matroid {
    let edges = [(0, 1), (1, 2), (0, 2), (2, 3), (0, 3), (3, 4), (0, 4), (4, 1)];
    Matroid::graphic(
        5,
        &edges,
        labels(&["s1", "r12", "s2", "r23", "s3", "r34", "s4", "r41"]),
    )
    .expect("valid")
}

pub fn complete_graph(v: usize) -> Matroid {
    let mut edges = Vec::new();
    let mut names = Vec::new();
    for i in 0..v {
        for j in i + 1..v {
            edges.push((i, j));
            names.push(format!("{}-{}", i + 1, j + 1));
        }
    }
    Matroid::graphic(v, &edges, names).expect("valid")
}

pub fn complete_bipartite(p: usize, q: usize) -> Matroid {
    let mut edges = Vec::new();
    let mut names = Vec::new();
    for i in 0..p {
        for j in 0..q {
            edges.push((i, p + j));
            names.push(format!("{}-{}", i + 1, p + j + 1));
        }
    }
    Matroid::graphic(p + q, &edges, names).expect("valid")
}

/// The Fano plane: all nonzero vectors of GF(2)^3.
pub fn fano() -> Matroid {
    let cols: Vec<Vec<u64>> = (1u64..8)
        .map(|v| vec![v & 1, v >> 1 & 1, v >> 2 & 1])
        .collect();
    Matroid::linear(2, cols, default_labels(7)).expect("valid")
}

/// `U_{3,7}` with `extra` points placed freely on the line through `e1, e2`,
/// labelled `p1, p2, ..`.
pub fn uniform_with_fat_line(extra: usize) -> Matroid {
    let mut m = u37();
    for i in 1..=extra {
        let line = m.closure(SubsetMask(0b11));
        m = m
            .principal_extension(line, &format!("p{i}"))
            .expect("a closure is a flat");
    }
    m
}

/// The breadth-critical weakly 4-connected example: `M(K4) ⊕ U_{3,s}`,
/// extended by `f1` on the line `{e, e1}`, `f2` on `{f, e2}`, `g1` on the
/// flat `E ∪ {f1, e}`, `g2` on `E ∪ {f2, f}`, then `e` and `f` deleted.
/// Here `E = {e1, .., es}`.
pub fn breadth_critical_matroid(s: usize) -> Result<Matroid> {
    if s < 6 {
        return Err(Error::domain(format!("s = {s}; the construction needs s ≥ 6")));
    }
    let sum = Matroid::direct_sum(&[k4(), Matroid::uniform(3, s)?])?;
    let idx = |m: &Matroid, names: &[&str]| m.mask_of(names);
    let e_block = |m: &Matroid| -> Result<SubsetMask> {
        let names: Vec<String> = (1..=s).map(|i| format!("e{i}")).collect();
        m.mask_of(&names)
    };
    let line1 = sum.closure(idx(&sum, &["e", "e1"])?);
    let m = sum.principal_extension(line1, "f1")?;
    let line2 = m.closure(idx(&m, &["f", "e2"])?);
    let m = m.principal_extension(line2, "f2")?;
    let flat1 = m.closure(e_block(&m)? | idx(&m, &["f1", "e"])?);
    let m = m.principal_extension(flat1, "g1")?;
    let flat2 = m.closure(e_block(&m)? | idx(&m, &["f2", "f"])?);
    let m = m.principal_extension(flat2, "g2")?;
    let ef = idx(&m, &["e", "f"])?;
    m.delete(ef)
}

/// Complete bipartite graph on `5..=8` and `9..=12` (vertex ids as used by
/// [`breadth_critical_graph`]).
pub fn default_h() -> (Vec<(usize, usize)>, [usize; 4]) {
    let mut edges = Vec::new();
    for u in 5..=8 {
        for v in 9..=12 {
            edges.push((u, v));
        }
    }
    (edges, [5, 6, 7, 8])
}

/// Result of [`breadth_critical_graph`]: the matroid plus what could be checked
/// about `H`.
#[derive(Debug, Clone)]
pub struct GraphExample {
    pub matroid: Matroid,
    pub triangle_free: bool,
    /// `None` when `H` is too large for the exhaustive vertex-cut check.
    pub four_connected: Option<bool>,
}

/// Graphic example with a 4-element fan: the graph `H` plus vertices
/// `1, 2, 3, 4` and the edges `2-s1, 2-s2, 3-s2, 3-s3, 4-s3, 4-s4, 2-4, 1-2,
/// 1-3, 1-4`, where `s1..s4` is the stable set `stable_four` of `H`. Vertex
/// ids of `H` must avoid `1..=4`. Edges are labelled `u-v` with `u < v`.
pub fn breadth_critical_graph(h_edges: &[(usize, usize)], stable_four: [usize; 4]) -> Result<GraphExample> {
    let mut vertices: Vec<usize> = h_edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    if vertices.iter().any(|v| (1..=4).contains(v)) {
        return Err(Error::domain("vertex ids 1..4 are reserved for the added vertices"));
    }
    let mut seen = std::collections::HashSet::new();
    for &(u, v) in h_edges {
        if u == v {
            return Err(Error::domain(format!("H has a loop at {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::domain(format!("H has parallel edges {u}-{v}")));
        }
    }
    for &s in &stable_four {
        if !vertices.contains(&s) {
            return Err(Error::domain(format!("{s} is not a vertex of H")));
        }
    }
    for (i, &a) in stable_four.iter().enumerate() {
        for &b in &stable_four[i + 1..] {
            if a == b || seen.contains(&(a.min(b), a.max(b))) {
                return Err(Error::domain(format!(
                    "{{{}}} is not a stable set of H",
                    stable_four.map(|x| x.to_string()).join(",")
                )));
            }
        }
    }
    let adj = |a: usize, b: usize| seen.contains(&(a.min(b), a.max(b)));
    let triangle_free = !h_edges
        .iter()
        .any(|&(u, v)| vertices.iter().any(|&w| adj(u, w) && adj(v, w)));
    let four_connected = (vertices.len() <= 16).then(|| is_four_connected(&vertices, h_edges));
    if !triangle_free || four_connected == Some(false) {
        return Err(Error::domain(format!(
            "H must be 4-connected and triangle-free (triangle-free: {triangle_free}, 4-connected: {four_connected:?})"
        )));
    }
    let [s1, s2, s3, s4] = stable_four;
    let mut edges: Vec<(usize, usize)> = h_edges.to_vec();
    edges.extend([
        (2, s1),
        (2, s2),
        (3, s2),
        (3, s3),
        (4, s3),
        (4, s4),
        (2, 4),
        (1, 2),
        (1, 3),
        (1, 4),
    ]);
    let names: Vec<String> = edges
        .iter()
        .map(|&(u, v)| format!("{}-{}", u.min(v), u.max(v)))
        .collect();
    let n_vertices = vertices.iter().copied().max().unwrap_or(4).max(4) + 1;
    let matroid = Matroid::graphic(n_vertices, &edges, names)?;
    Ok(GraphExample {
        matroid,
        triangle_free,
        four_connected,
    })
}

/// No set of at most three vertices disconnects the graph, and it has at
/// least five vertices.
fn is_four_connected(vertices: &[usize], edges: &[(usize, usize)]) -> bool {
    let n = vertices.len();
    if n < 5 {
        return false;
    }
    let pos = |v: usize| vertices.binary_search(&v).expect("vertex listed");
    let connected_without = |removed: u32| -> bool {
        let alive: Vec<usize> = (0..n).filter(|&i| removed >> i & 1 == 0).collect();
        let mut reach = 1u32 << alive[0];
        loop {
            let mut next = reach;
            for &(u, v) in edges {
                let (a, b) = (pos(u), pos(v));
                if removed >> a & 1 == 1 || removed >> b & 1 == 1 {
                    continue;
                }
                if reach >> a & 1 == 1 || reach >> b & 1 == 1 {
                    next |= 1 << a | 1 << b;
                }
            }
            if next == reach {
                break;
            }
            reach = next;
        }
        alive.iter().all(|&i| reach >> i & 1 == 1)
    };
    (0u32..1 << n)
        .filter(|r| r.count_ones() <= 3)
        .all(connected_without)
}

/// `n` nonzero columns of length `r` over GF(2), redrawn until they span.
pub fn random_binary_matroid(n: usize, r: usize, seed: u64) -> Result<Matroid> {
    random_linear_matroid(2, n, r, seed)
}

/// `n` nonzero columns of length `r` over GF(`prime`), redrawn until they
/// span. Labels `e1..en`.
pub fn random_linear_matroid(prime: u64, n: usize, r: usize, seed: u64) -> Result<Matroid> {
    if r > n || (r == 0 && n > 0) {
        return Err(Error::domain(format!(
            "cannot draw {n} nonzero columns of rank {r}"
        )));
    }
    crate::limits::check_table(n, "random linear matroid")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let cols: Vec<Vec<u64>> = (0..n)
            .map(|_| loop {
                let v: Vec<u64> = (0..r).map(|_| rng.gen_range(0..prime)).collect();
                if v.iter().any(|&x| x != 0) {
                    break v;
                }
            })
            .collect();
        let m = Matroid::linear(prime, cols, default_labels(n))?;
        if m.full_rank() == r {
            return Ok(m);
        }
    }
    Err(Error::resource(
        "random linear matroid",
        format!("no rank-{r} draw in 1000 attempts"),
    ))
}

/// Random vectors over GF(`prime`) on two sides `a1..` and `b1..` whose
/// spans meet in a plane, so the sides form a 3-separation. Side ranks are
/// at least 3; random columns keep the sides off the shared plane.
pub fn random_glued_matroid(
    prime: u64,
    sides: [usize; 2],
    ranks: [usize; 2],
    seed: u64,
) -> Result<Matroid> {
    if ranks.iter().zip(&sides).any(|(&r, &n)| r < 3 || r > n) {
        return Err(Error::domain(format!("cannot glue sides {sides:?} of ranks {ranks:?}")));
    }
    let n = sides[0] + sides[1];
    crate::limits::check_table(n, "random glued matroid")?;
    let dim = ranks[0] + ranks[1] - 2;
    // Coordinates 0..2 are shared; each side owns its own block after them.
    let own = [2..ranks[0], ranks[0]..dim];
    let labels: Vec<String> = (0..2)
        .flat_map(|s| (1..=sides[s]).map(move |i| format!("{}{i}", ["a", "b"][s])))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let mut cols = Vec::with_capacity(n);
        for s in 0..2 {
            for _ in 0..sides[s] {
                let mut v = vec![0u64; dim];
                for c in (0..2).chain(own[s].clone()) {
                    v[c] = rng.gen_range(0..prime);
                }
                cols.push(v);
            }
        }
        let m = Matroid::linear(prime, cols, labels.clone())?;
        let a = SubsetMask::from_indices(0..sides[0]);
        if m.full_rank() == dim && m.r(a) == ranks[0] && m.r(m.ground() - a) == ranks[1] {
            return Ok(m);
        }
    }
    Err(Error::resource("random glued matroid", format!("no draw of ranks {ranks:?} in 1000 attempts")))
}

/// A simple rank-3 matroid grown from a triangle of points `p1, p2, p3`.
/// Each later point goes freely into the plane or, with probability
/// `on_line`, freely onto the line through two random earlier points,
/// provided that line has fewer than `max_line` points.
pub fn random_plane_configuration(
    n: usize,
    max_line: usize,
    on_line: f64,
    seed: u64,
) -> Result<Matroid> {
    if n < 3 || max_line < 2 {
        return Err(Error::domain(format!(
            "a plane configuration needs n ≥ 3 and lines of at least 2 points, got n = {n}, max_line = {max_line}"
        )));
    }
    crate::limits::check_table(n, "plane configuration")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = Matroid::uniform_labeled(3, labels(&["p1", "p2", "p3"]))?;
    for i in 4..=n {
        let mut flat = m.ground();
        if rng.gen_bool(on_line) {
            let a = rng.gen_range(0..m.len());
            let b = (a + rng.gen_range(1..m.len())) % m.len();
            let line = m.closure(SubsetMask::singleton(a).with(b));
            if line.len() < max_line {
                flat = line;
            }
        }
        m = m.principal_extension(flat, &format!("p{i}"))?;
    }
    Ok(m)
}

/// Cycle matroid of a random simple graph with `edges` edges on `vertices`
/// vertices; labels `u-v` with `u < v`, vertices numbered from 1.
pub fn random_graphic_matroid(vertices: usize, edges: usize, seed: u64) -> Result<Matroid> {
    let pairs: Vec<(usize, usize)> = (0..vertices)
        .flat_map(|u| (u + 1..vertices).map(move |v| (u, v)))
        .collect();
    if edges > pairs.len() {
        return Err(Error::domain(format!(
            "a simple graph on {vertices} vertices has at most {} edges",
            pairs.len()
        )));
    }
    crate::limits::check_table(edges, "random graphic matroid")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen = rand::seq::index::sample(&mut rng, pairs.len(), edges).into_vec();
    chosen.sort_unstable();
    let es: Vec<(usize, usize)> = chosen.iter().map(|&i| pairs[i]).collect();
    let names = es.iter().map(|(u, v)| format!("{}-{}", u + 1, v + 1)).collect();
    Matroid::graphic(vertices, &es, names)
}

/// The named corpus. Entries whose ground set exceeds the scan cap load but
/// refuse exhaustive operations.
pub fn entries() -> Vec<CorpusEntry> {
    let golden = breadth_critical_matroid(6).expect("s = 6 is valid");
    let (h, stable) = default_h();
    let graph = breadth_critical_graph(&h, stable).expect("default H is valid");
    let u = u37();
    vec![
        CorpusEntry {
            name: "u37",
            expr: u.expr().clone(),
            facts: ExpectedFacts {
                order: Some(4),
                tangle_count: Some(1),
                breadth: Some(7),
                weakly_four_connected: Some(true),
                connected: Some(true),
            },
        },
        CorpusEntry {
            name: "k4",
            expr: k4().expr().clone(),
            facts: ExpectedFacts {
                order: Some(3),
                tangle_count: Some(1),
                breadth: Some(6),
                connected: Some(true),
                ..Default::default()
            },
        },
        CorpusEntry {
            name: "critical_s6",
            expr: golden.expr().clone(),
            facts: ExpectedFacts {
                order: Some(4),
                tangle_count: Some(1),
                breadth: Some(12),
                weakly_four_connected: Some(true),
                connected: Some(true),
            },
        },
        CorpusEntry {
            name: "u37_coloop",
            expr: Matroid::direct_sum(&[u.clone(), Matroid::uniform(1, 1).expect("valid")])
                .expect("valid")
                .expr()
                .clone(),
            facts: ExpectedFacts {
                order: Some(4),
                breadth: Some(7),
                weakly_four_connected: Some(false),
                connected: Some(false),
                ..Default::default()
            },
        },
        CorpusEntry {
            name: "u37_twice",
            expr: Matroid::direct_sum(&[u.clone(), u.clone()])
                .expect("valid")
                .expr()
                .clone(),
            facts: ExpectedFacts {
                connected: Some(false),
                ..Default::default()
            },
        },
        CorpusEntry {
            name: "fano",
            expr: fano().expr().clone(),
            facts: ExpectedFacts {
                connected: Some(true),
                ..Default::default()
            },
        },
        CorpusEntry {
            name: "u37_fat_line",
            expr: uniform_with_fat_line(3).expr().clone(),
            facts: ExpectedFacts::default(),
        },
        CorpusEntry {
            name: "wheel4",
            expr: wheel4().expr().clone(),
            facts: ExpectedFacts {
                connected: Some(true),
                ..Default::default()
            },
        },
        CorpusEntry {
            name: "k5",
            expr: complete_graph(5).expr().clone(),
            facts: ExpectedFacts::default(),
        },
        CorpusEntry {
            name: "k33",
            expr: complete_bipartite(3, 3).expr().clone(),
            facts: ExpectedFacts::default(),
        },
        CorpusEntry {
            name: "critical_graph",
            expr: graph.matroid.expr().clone(),
            facts: ExpectedFacts::default(),
        },
    ]
}

pub fn entry(name: &str) -> Option<CorpusEntry> {
    entries().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_triangles() {
        let m = k4();
        for t in [["c", "d", "e"], ["a", "b", "e"], ["b", "c", "f"], ["a", "d", "f"]] {
            assert_eq!(m.r(m.mask_of(&t).unwrap()), 2, "{t:?}");
        }
        // e and f share no triangle.
        let ef = m.mask_of(&["e", "f"]).unwrap();
        for x in 0..6 {
            if !ef.contains(x) {
                assert_eq!(m.r(ef.with(x)), 3);
            }
        }
    }

    #[test]
    fn golden_ground_set() {
        let m = breadth_critical_matroid(6).unwrap();
        assert_eq!(m.len(), 14);
        assert_eq!(m.full_rank(), 6);
        assert!(matches!(breadth_critical_matroid(5), Err(Error::Domain(_))));
        let rebuilt = m.expr().build().unwrap();
        assert!(rebuilt.same_as(&m).unwrap());
    }

    #[test]
    fn graph_example_shape() {
        let (h, stable) = default_h();
        let g = breadth_critical_graph(&h, stable).unwrap();
        assert_eq!(g.matroid.len(), 26);
        assert!(g.triangle_free);
        assert_eq!(g.four_connected, Some(true));
        let fan = g.matroid.mask_of(&["1-2", "1-3", "1-4", "2-4"]).unwrap();
        assert_eq!(g.matroid.lambda(fan).unwrap(), 2);
        let bad = breadth_critical_graph(&h, [5, 9, 6, 7]);
        assert!(matches!(bad, Err(Error::Domain(_))));
    }

    #[test]
    fn random_binary_is_reproducible() {
        let a = random_binary_matroid(7, 3, 1).unwrap();
        let b = random_binary_matroid(7, 3, 1).unwrap();
        assert_eq!(a.expr(), b.expr());
        assert_eq!(a.full_rank(), 3);
        let c = random_binary_matroid(7, 3, 2).unwrap();
        assert_ne!(a.expr(), c.expr());
    }
}
