//! Visibility predicates and set verification.
//!
//! A set `S` makes two vertices `x`, `y` mutually visible when there is a
//! shortest directed path in each direction whose vertices meet `S` only
//! at the endpoints. The four variants differ solely in which pairs must
//! satisfy that condition:
//!
//! - `standard`: all pairs inside `S`;
//! - `total`: all pairs of the whole vertex set;
//! - `outer`: pairs inside `S`, plus pairs with one endpoint in `S` and
//!   one outside;
//! - `dual`: pairs inside `S`, plus pairs entirely outside `S`.
//!
//! [`verify`] runs the polynomial check: one plain and one restricted BFS
//! per relevant source, then a distance comparison. [`naive_verify`] is a
//! deliberately independent oracle (Floyd–Warshall distances plus explicit
//! shortest-path enumeration) used to cross-check it on small graphs.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::digraph::{Digraph, VertexId};
use crate::error::{Error, Result};

/// Default vertex-count cap for the brute-force oracle.
pub const DEFAULT_ORACLE_CAP: usize = 12;

/// Which pairs of vertices must see each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Standard,
    Total,
    Outer,
    Dual,
}

impl Variant {
    pub const ALL: [Variant; 4] = [
        Variant::Standard,
        Variant::Total,
        Variant::Outer,
        Variant::Dual,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Standard => "standard",
            Variant::Total => "total",
            Variant::Outer => "outer",
            Variant::Dual => "dual",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Variant::Standard),
            "total" => Ok(Variant::Total),
            "outer" => Ok(Variant::Outer),
            "dual" => Ok(Variant::Dual),
            other => Err(Error::InvalidParameter(format!(
                "unknown variant {other:?}, expected standard|total|outer|dual"
            ))),
        }
    }
}

/// One failed directional check: the shortest distance from `from` to `to`
/// once internal vertices of the set are forbidden (`d_restricted`) either
/// exceeds the free distance or no path exists at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockedPair {
    pub from: VertexId,
    pub to: VertexId,
    pub d_free: Option<usize>,
    pub d_restricted: Option<usize>,
}

/// Verification verdict with the blocked ordered pairs as evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VisibilityReport {
    pub valid: bool,
    pub variant: Variant,
    /// The candidate set, sorted.
    pub set: Vec<VertexId>,
    pub blocked: Vec<BlockedPair>,
    /// Number of unordered pairs the variant required.
    pub pairs_checked: usize,
}

impl VisibilityReport {
    /// JSON form: `{valid, variant, set, blocked:[{x,y,direction,d_free,
    /// d_restricted}]}` with `x <= y` the unordered pair and `direction`
    /// naming the failing orientation. Keys serialize sorted.
    pub fn to_json(&self, d: &Digraph) -> Value {
        let blocked: Vec<Value> = self
            .blocked
            .iter()
            .map(|b| {
                let (x, y) = if b.from <= b.to {
                    (b.from, b.to)
                } else {
                    (b.to, b.from)
                };
                json!({
                    "x": d.label(x),
                    "y": d.label(y),
                    "direction": if b.from <= b.to { "x->y" } else { "y->x" },
                    "d_free": b.d_free,
                    "d_restricted": b.d_restricted,
                })
            })
            .collect();
        json!({
            "valid": self.valid,
            "variant": self.variant.name(),
            "set": self.set.iter().map(|&v| d.label(v)).collect::<Vec<_>>(),
            "blocked": blocked,
        })
    }
}

/// Sorted, deduplicated copy of a candidate set, validated against `d`.
fn normalize_set(d: &Digraph, set: &[VertexId]) -> Result<Vec<VertexId>> {
    let mut s = set.to_vec();
    for &v in &s {
        d.check_vertex(v)?;
    }
    s.sort_unstable();
    s.dedup();
    Ok(s)
}

/// The unordered pairs a variant requires to be mutually visible, with
/// the universe taken as `0..n`. Pairs come out lexicographically.
pub fn required_pairs(variant: Variant, set: &[VertexId], n: usize) -> Vec<(VertexId, VertexId)> {
    let mut in_set = vec![false; n];
    for &v in set {
        in_set[v.index()] = true;
    }
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in (x + 1)..n {
            let wanted = match variant {
                Variant::Standard => in_set[x] && in_set[y],
                Variant::Total => true,
                Variant::Outer => in_set[x] || in_set[y],
                Variant::Dual => in_set[x] == in_set[y],
            };
            if wanted {
                pairs.push((VertexId::new(x), VertexId::new(y)));
            }
        }
    }
    pairs
}

fn pairs_required_count(variant: Variant, s: usize, n: usize) -> usize {
    let choose2 = |k: usize| k * k.saturating_sub(1) / 2;
    match variant {
        Variant::Standard => choose2(s),
        Variant::Total => choose2(n),
        Variant::Outer => choose2(s) + s * (n - s),
        Variant::Dual => choose2(s) + choose2(n - s),
    }
}

/// True iff `x` and `y` are mutually visible with respect to `set`: a
/// shortest path exists in each direction whose internal vertices avoid
/// the set.
pub fn pair_visible(d: &Digraph, set: &[VertexId], x: VertexId, y: VertexId) -> Result<bool> {
    d.check_vertex(x)?;
    d.check_vertex(y)?;
    if x == y {
        return Err(Error::IdenticalVertices(x.index()));
    }
    let s = normalize_set(d, set)?;
    let blocked: Vec<VertexId> = s.iter().copied().filter(|&v| v != x && v != y).collect();
    for (a, b) in [(x, y), (y, x)] {
        let free = d.bfs_distances(a)?.get(b);
        let restricted = d.restricted_bfs(a, &blocked)?.get(b);
        if free.is_none() || restricted != free {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Which targets a BFS source must be compared against for a variant.
/// Every required unordered pair {a, b} is covered exactly once in each
/// orientation: once with source a, once with source b.
fn targets_for(variant: Variant, in_set: &[bool], u: usize) -> Vec<usize> {
    let n = in_set.len();
    let others = |keep: &dyn Fn(usize) -> bool| -> Vec<usize> {
        (0..n).filter(|&v| v != u).filter(|&v| keep(v)).collect()
    };
    match variant {
        Variant::Standard => {
            if in_set[u] {
                others(&|v| in_set[v])
            } else {
                Vec::new()
            }
        }
        Variant::Total => others(&|_| true),
        Variant::Outer => {
            if in_set[u] {
                others(&|_| true)
            } else {
                others(&|v| in_set[v])
            }
        }
        Variant::Dual => {
            if in_set[u] {
                others(&|v| in_set[v])
            } else {
                others(&|v| !in_set[v])
            }
        }
    }
}

/// Polynomial-time set verification: per relevant source, one plain BFS
/// and one BFS that records but never expands the other set members; a
/// pair direction fails when the two distances differ or the free distance
/// is already infinite. Runs in `O(k (|V| + |A|))` for `k` sources — the
/// standard variant uses only the set members as sources.
pub fn verify(d: &Digraph, set: &[VertexId], variant: Variant) -> Result<VisibilityReport> {
    let s = normalize_set(d, set)?;
    let n = d.vertex_count();
    let mut in_set = vec![false; n];
    for &v in &s {
        in_set[v.index()] = true;
    }

    let mut blocked_pairs = Vec::new();
    for u in 0..n {
        let targets = targets_for(variant, &in_set, u);
        if targets.is_empty() {
            continue;
        }
        let source = VertexId::new(u);
        let blockers: Vec<VertexId> = s.iter().copied().filter(|&v| v != source).collect();
        let free = d.bfs_distances(source)?;
        let restricted = d.restricted_bfs(source, &blockers)?;
        for t in targets {
            let target = VertexId::new(t);
            let df = free.get(target);
            let dr = restricted.get(target);
            if df.is_none() || dr != df {
                blocked_pairs.push(BlockedPair {
                    from: source,
                    to: target,
                    d_free: df,
                    d_restricted: dr,
                });
            }
        }
    }

    Ok(VisibilityReport {
        valid: blocked_pairs.is_empty(),
        variant,
        pairs_checked: pairs_required_count(variant, s.len(), n),
        set: s,
        blocked: blocked_pairs,
    })
}

/// All-pairs shortest distances over an allowed-vertex mask, by
/// Floyd–Warshall. Kept free of any BFS code on purpose: this is the
/// oracle's own distance route.
#[allow(clippy::needless_range_loop)]
fn floyd_warshall(d: &Digraph, allowed: &[bool]) -> Vec<Vec<Option<usize>>> {
    let n = d.vertex_count();
    let mut dist = vec![vec![None; n]; n];
    for u in 0..n {
        if allowed[u] {
            dist[u][u] = Some(0);
        }
    }
    for (u, v) in d.arcs() {
        if allowed[u.index()] && allowed[v.index()] {
            dist[u.index()][v.index()] = Some(1);
        }
    }
    for k in 0..n {
        if !allowed[k] {
            continue;
        }
        for i in 0..n {
            let Some(dik) = dist[i][k] else { continue };
            for j in 0..n {
                let Some(dkj) = dist[k][j] else { continue };
                let via = dik + dkj;
                if dist[i][j].is_none_or(|cur| via < cur) {
                    dist[i][j] = Some(via);
                }
            }
        }
    }
    dist
}

/// Enumerates every shortest `from -> to` path (as full vertex sequences)
/// by walking arcs that stay on shortest-path prefixes.
fn all_shortest_paths(
    d: &Digraph,
    dist: &[Vec<Option<usize>>],
    from: VertexId,
    to: VertexId,
) -> Vec<Vec<VertexId>> {
    let Some(total) = dist[from.index()][to.index()] else {
        return Vec::new();
    };
    let mut paths = Vec::new();
    let mut current = vec![from];
    fn walk(
        d: &Digraph,
        dist: &[Vec<Option<usize>>],
        to: VertexId,
        total: usize,
        current: &mut Vec<VertexId>,
        paths: &mut Vec<Vec<VertexId>>,
    ) {
        let here = *current.last().unwrap();
        if here == to {
            paths.push(current.clone());
            return;
        }
        let done = current.len() - 1;
        for &next in d.out_neighbors(here) {
            // Stay on a shortest path: one step used, remainder must fit.
            if dist[next.index()][to.index()] == Some(total - done - 1) {
                current.push(next);
                walk(d, dist, to, total, current, paths);
                current.pop();
            }
        }
    }
    walk(d, dist, to, total, &mut current, &mut paths);
    paths
}

fn path_interior_avoids(path: &[VertexId], in_set: &[bool]) -> bool {
    path[1..path.len() - 1].iter().all(|v| !in_set[v.index()])
}

/// Brute-force verification oracle, refusing graphs above `cap` vertices.
///
/// Per ordered pair it (a) enumerates all shortest paths and looks for one
/// whose interior avoids the set, and (b) recomputes the distance with the
/// set's other members deleted from the graph; the two routes must agree,
/// which is asserted. Reports are built to compare equal with [`verify`].
pub fn naive_verify_capped(
    d: &Digraph,
    set: &[VertexId],
    variant: Variant,
    cap: usize,
) -> Result<VisibilityReport> {
    let n = d.vertex_count();
    if n > cap {
        return Err(Error::OracleCapExceeded { n, cap });
    }
    let s = normalize_set(d, set)?;
    let mut in_set = vec![false; n];
    for &v in &s {
        in_set[v.index()] = true;
    }
    let free = floyd_warshall(d, &vec![true; n]);

    let mut blocked_pairs = Vec::new();
    for (x, y) in required_pairs(variant, &s, n) {
        for (a, b) in [(x, y), (y, x)] {
            let mut allowed = vec![true; n];
            for &v in &s {
                if v != a && v != b {
                    allowed[v.index()] = false;
                }
            }
            let restricted = floyd_warshall(d, &allowed);
            let df = free[a.index()][b.index()];
            let dr = restricted[a.index()][b.index()];

            let mut interior_mask = in_set.clone();
            interior_mask[a.index()] = false;
            interior_mask[b.index()] = false;
            let has_clean_path = all_shortest_paths(d, &free, a, b)
                .iter()
                .any(|p| path_interior_avoids(p, &interior_mask));
            assert_eq!(
                has_clean_path,
                df.is_some() && dr == df,
                "oracle self-check: path enumeration and deleted-subgraph \
                 distances must agree for {a} -> {b}"
            );

            if df.is_none() || dr != df {
                blocked_pairs.push(BlockedPair {
                    from: a,
                    to: b,
                    d_free: df,
                    d_restricted: dr,
                });
            }
        }
    }

    // verify() emits records grouped by source; match that order.
    blocked_pairs.sort_by_key(|b| (b.from, b.to));
    Ok(VisibilityReport {
        valid: blocked_pairs.is_empty(),
        variant,
        pairs_checked: pairs_required_count(variant, s.len(), n),
        set: s,
        blocked: blocked_pairs,
    })
}

/// [`naive_verify_capped`] at the default cap of 12 vertices.
pub fn naive_verify(d: &Digraph, set: &[VertexId], variant: Variant) -> Result<VisibilityReport> {
    naive_verify_capped(d, set, variant, DEFAULT_ORACLE_CAP)
}

/// Verdict-only fast path over precomputed free distances, shared by the
/// brute-force solvers. `one_direction` relaxes the check to a single
/// orientation per pair (the undirected reading on symmetric graphs).
pub(crate) fn naive_set_valid(
    d: &Digraph,
    free: &[Vec<Option<usize>>],
    set: &[VertexId],
    variant: Variant,
    one_direction: bool,
) -> bool {
    let n = d.vertex_count();
    let mut in_set = vec![false; n];
    for &v in set {
        in_set[v.index()] = true;
    }
    for (x, y) in required_pairs(variant, set, n) {
        let directions: &[(VertexId, VertexId)] = if one_direction {
            &[(x, y)]
        } else {
            &[(x, y), (y, x)]
        };
        for &(a, b) in directions {
            let mut interior_mask = in_set.clone();
            interior_mask[a.index()] = false;
            interior_mask[b.index()] = false;
            if free[a.index()][b.index()].is_none() {
                return false;
            }
            let ok = all_shortest_paths(d, free, a, b)
                .iter()
                .any(|p| path_interior_avoids(p, &interior_mask));
            if !ok {
                return false;
            }
        }
    }
    true
}

pub(crate) fn free_distances(d: &Digraph) -> Vec<Vec<Option<usize>>> {
    floyd_warshall(d, &vec![true; d.vertex_count()])
}
