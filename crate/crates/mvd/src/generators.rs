//! Constructors for the graph families used as fixtures and witnesses:
//! directed cycles, DAGs, complete digraphs, tournaments (random and
//! Paley), bridged clique pairs, and the symmetrization of an undirected
//! graph.

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// SplitMix64: a tiny, platform-independent PRNG with fixed constants,
/// used for every seeded generator so fixtures are bit-reproducible.
/// Constants are the standard ones from Steele, Lea, and Flood's
/// `SplittableRandom`.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[0, bound)` by rejection, bias-free.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }

    /// A sorted random `k`-subset of `0..n` via partial Fisher-Yates.
    pub fn subset(&mut self, n: usize, k: usize) -> Vec<usize> {
        assert!(k <= n);
        let mut pool: Vec<usize> = (0..n).collect();
        for i in 0..k {
            let j = i + self.next_below((n - i) as u64) as usize;
            pool.swap(i, j);
        }
        let mut chosen = pool[..k].to_vec();
        chosen.sort_unstable();
        chosen
    }
}

fn check_probability(p: f64) -> Result<()> {
    if p.is_finite() && (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "arc probability must be in [0, 1], got {p}"
        )))
    }
}

/// Directed cycle on `n >= 2` vertices: arcs `(i, i+1 mod n)`.
pub fn gen_cycle(n: usize) -> Result<Digraph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs at least 2 vertices, got {n}"
        )));
    }
    Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Complete digraph: all `n(n-1)` ordered arcs.
pub fn gen_complete(n: usize) -> Result<Digraph> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "complete digraph needs at least 1 vertex".to_string(),
        ));
    }
    Digraph::from_arcs(
        n,
        (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))),
    )
}

/// Path DAG: arcs `(i, i+1)`.
pub fn gen_path_dag(n: usize) -> Result<Digraph> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "path needs at least 1 vertex".to_string(),
        ));
    }
    Digraph::from_arcs(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1)))
}

/// Random DAG: each forward pair `(i, j)`, `i < j`, kept independently
/// with probability `p` under the seeded generator.
pub fn gen_random_dag(n: usize, p: f64, seed: u64) -> Result<Digraph> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "DAG needs at least 1 vertex".to_string(),
        ));
    }
    check_probability(p)?;
    let mut rng = SplitMix64::new(seed);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.next_f64() < p {
                arcs.push((i, j));
            }
        }
    }
    Digraph::from_arcs(n, arcs)
}

/// Random tournament: one arc per unordered pair, orientation by a
/// seeded fair coin.
pub fn gen_random_tournament(n: usize, seed: u64) -> Digraph {
    let mut rng = SplitMix64::new(seed);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.coin() {
                arcs.push((i, j));
            } else {
                arcs.push((j, i));
            }
        }
    }
    Digraph::from_arcs(n, arcs).expect("tournament arcs are in range")
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut f = 2u64;
    while f * f <= q {
        if q.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

/// Paley tournament on a prime `q` with `q ≡ 3 (mod 4)`: vertices are the
/// integers mod `q`, with an arc `(u, v)` when `v - u` is a nonzero
/// quadratic residue. The congruence condition makes `-1` a non-residue,
/// so exactly one of `(u, v)`, `(v, u)` is present.
pub fn gen_paley(q: u64) -> Result<Digraph> {
    if !is_prime(q) {
        return Err(Error::InvalidParameter(format!("{q} is not prime")));
    }
    if q % 4 != 3 {
        return Err(Error::InvalidParameter(format!(
            "{q} is not congruent to 3 mod 4, quadratic residues would not orient a tournament"
        )));
    }
    let mut residue = vec![false; q as usize];
    for x in 1..q {
        residue[((x * x) % q) as usize] = true;
    }
    let n = q as usize;
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && residue[(v + n - u) % n] {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_arcs(n, arcs)
}

/// Two complete digraphs on `n` vertices each, joined only by the arc pair
/// `(0, n)` and `(n, 0)`. Strongly connected with exactly two strong
/// bridges regardless of `n`.
pub fn gen_two_clique(n: usize) -> Result<Digraph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "each clique needs at least 2 vertices, got {n}"
        )));
    }
    let mut arcs = Vec::new();
    for base in [0, n] {
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    arcs.push((base + u, base + v));
                }
            }
        }
    }
    arcs.push((0, n));
    arcs.push((n, 0));
    Digraph::from_arcs(2 * n, arcs)
}

/// The `figure1` fixture: an 8-vertex ring of bidirectional pairs with a
/// single one-way arc `y -> z`, giving extreme distance asymmetry
/// (`d(y,z) = 1` but `d(z,y) = 7`). Labels: `x, z, v5..v1, y` around the
/// ring, indexed in canonical first-appearance order.
pub fn gen_figure1() -> Digraph {
    let labels: Vec<String> = ["x", "z", "v5", "v4", "v3", "v2", "v1", "y"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let mut arcs = vec![(7, 1)]; // y -> z, the only one-way arc
    for (a, b) in [(0, 1), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)] {
        arcs.push((a, b));
        arcs.push((b, a));
    }
    Digraph::from_labeled_arcs(labels, arcs).expect("fixture arcs are in range")
}

/// Parses an undirected edge list and replaces each edge `{u, v}` with the
/// two arcs `(u, v)` and `(v, u)`. Distances in the result equal the
/// undirected distances of the input.
pub fn symmetrize(text: &str) -> Result<Digraph> {
    let oriented = Digraph::from_edge_list(text)?;
    symmetric_closure(&oriented)
}

pub(crate) fn symmetric_closure(d: &Digraph) -> Result<Digraph> {
    let arcs: Vec<(usize, usize)> = d
        .arcs()
        .flat_map(|(u, v)| [(u.index(), v.index()), (v.index(), u.index())])
        .collect();
    match d.labels() {
        Some(l) => Digraph::from_labeled_arcs(l.to_vec(), arcs),
        None => Digraph::from_arcs(d.vertex_count(), arcs),
    }
}

/// Erdős–Rényi style random digraph: every ordered pair kept independently
/// with probability `p`.
pub fn gen_random_digraph(n: usize, p: f64, seed: u64) -> Result<Digraph> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "digraph needs at least 1 vertex".to_string(),
        ));
    }
    check_probability(p)?;
    let mut rng = SplitMix64::new(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.next_f64() < p {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_arcs(n, arcs)
}

/// Random digraph with an exact arc count, sampled uniformly without
/// replacement from the `n(n-1)` possible arcs.
pub fn gen_random_digraph_with_arcs(n: usize, m: usize, seed: u64) -> Result<Digraph> {
    let slots = n.saturating_mul(n.saturating_sub(1));
    if m > slots {
        return Err(Error::InvalidParameter(format!(
            "{m} arcs requested but only {slots} are possible on {n} vertices"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let mut chosen = std::collections::BTreeSet::new();
    while chosen.len() < m {
        chosen.insert(rng.next_below(slots as u64) as usize);
    }
    let arcs = chosen.into_iter().map(|k| {
        let u = k / (n - 1);
        let r = k % (n - 1);
        (u, if r < u { r } else { r + 1 })
    });
    Digraph::from_arcs(n, arcs)
}
