//! Exact mutual-visibility numbers.
//!
//! [`mu`] computes the standard mutual-visibility number by decomposing
//! into strongly connected components (a set of size two or more can never
//! span two components), applying class shortcuts (DAG, directed cycle,
//! complete digraph), and otherwise running a depth-first subset search.
//! The search prunes hereditarily — once a set fails, every superset is
//! abandoned — which is sound for the standard variant because removing a
//! vertex from a set removes constraints and blockers alike.
//!
//! [`mu_bruteforce`], [`mu_variant`], and [`mu_undirected_bruteforce`] are
//! enumeration baselines built on the naive oracle; the first doubles as
//! the solver's independent cross-check.

use itertools::Itertools;
use serde_json::{json, Value};

use crate::digraph::{Digraph, VertexId};
use crate::error::{Error, Result};
use crate::structure::{is_dag, scc};
use crate::visibility::{free_distances, naive_set_valid, Variant};

/// Largest component the exact search will take on by default; beyond it
/// the solver refuses rather than run an unbounded exponential search.
pub const DEFAULT_SEARCH_BUDGET: usize = 25;

/// Default vertex cap for the brute-force solvers.
pub const DEFAULT_BRUTEFORCE_CAP: usize = 15;

/// Which structural fast path, if any, produced the answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shortcut {
    Dag,
    Cycle,
    Complete,
    None,
}

impl Shortcut {
    pub fn name(self) -> &'static str {
        match self {
            Shortcut::Dag => "dag",
            Shortcut::Cycle => "cycle",
            Shortcut::Complete => "complete",
            Shortcut::None => "none",
        }
    }
}

/// A mutual-visibility number together with one maximum witness set
/// (the lexicographically smallest among maximums) and search statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuResult {
    pub mu: usize,
    /// Sorted witness set; verifying it is always valid.
    pub witness: Vec<VertexId>,
    /// Candidate sets submitted to a validity check along the way.
    pub nodes_explored: u64,
    pub shortcut: Shortcut,
}

impl MuResult {
    /// JSON form `{mu, witness:[labels], shortcut, nodes_explored}`,
    /// keys sorted.
    pub fn to_json(&self, d: &Digraph) -> Value {
        json!({
            "mu": self.mu,
            "witness": self.witness.iter().map(|&v| d.label(v)).collect::<Vec<_>>(),
            "shortcut": self.shortcut.name(),
            "nodes_explored": self.nodes_explored,
        })
    }
}

/// Exact standard mutual-visibility number at the default search budget.
pub fn mu(d: &Digraph) -> Result<MuResult> {
    mu_with_budget(d, DEFAULT_SEARCH_BUDGET)
}

/// Exact standard mutual-visibility number; components that need the
/// subset search and exceed `budget` vertices are refused.
pub fn mu_with_budget(d: &Digraph, budget: usize) -> Result<MuResult> {
    if d.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if is_dag(d) {
        // No pair is mutually reachable, so only singletons qualify.
        return Ok(MuResult {
            mu: 1,
            witness: vec![VertexId::new(0)],
            nodes_explored: 0,
            shortcut: Shortcut::Dag,
        });
    }

    let decomposition = scc(d);
    // Some component has >= 2 vertices (the graph is not a DAG), so the
    // answer is >= 2 and singleton components can never win.
    let searched: Vec<&Vec<VertexId>> = decomposition
        .components
        .iter()
        .filter(|c| c.len() >= 2)
        .collect();

    for comp in &searched {
        let (sub, _) = d.induced_subgraph(comp)?;
        if classify(&sub) == Shortcut::None && comp.len() > budget {
            return Err(Error::BudgetExceeded {
                scc_size: comp.len(),
                budget,
            });
        }
    }

    let mut nodes = 0u64;
    let mut best: Option<(usize, Vec<VertexId>, Shortcut)> = None;
    for comp in &searched {
        let (sub, back) = d.induced_subgraph(comp)?;
        let shortcut = classify(&sub);
        let (size, local_witness) = match shortcut {
            Shortcut::Cycle => (2, vec![0, 1]),
            Shortcut::Complete => (sub.vertex_count(), (0..sub.vertex_count()).collect()),
            _ => search_component(&sub, &mut nodes),
        };
        let witness: Vec<VertexId> = local_witness.iter().map(|&i| back[i]).collect();
        let better = match &best {
            None => true,
            Some((bs, bw, _)) => size > *bs || (size == *bs && witness < *bw),
        };
        if better {
            best = Some((size, witness, shortcut));
        }
    }

    let (mu, witness, shortcut) = best.expect("a non-singleton component exists");
    Ok(MuResult {
        mu,
        witness,
        nodes_explored: nodes,
        shortcut,
    })
}

/// Detects the shortcut classes inside one strongly connected subgraph:
/// a directed cycle (every in/out degree 1) or a complete digraph.
fn classify(sub: &Digraph) -> Shortcut {
    let n = sub.vertex_count();
    // A 2-vertex SCC is both a cycle and a complete digraph; report the
    // stronger class.
    if n >= 2 && sub.arc_count() == n * (n - 1) {
        return Shortcut::Complete;
    }
    if n >= 2
        && sub
            .vertices()
            .all(|v| sub.out_degree(v) == 1 && sub.in_degree(v) == 1)
    {
        return Shortcut::Cycle;
    }
    Shortcut::None
}

/// Exact maximum inside one strongly connected subgraph.
///
/// Two passes: a degree-ordered branch-and-bound (greedy incumbent, then
/// depth-first include/exclude with hereditary pruning) establishes the
/// maximum size; an index-ordered pass then extracts the lexicographically
/// smallest witness of that size. Returns local indices.
fn search_component(sub: &Digraph, nodes: &mut u64) -> (usize, Vec<usize>) {
    let n = sub.vertex_count();
    let free: Vec<_> = (0..n)
        .map(|u| {
            sub.bfs_distances(VertexId::new(u))
                .expect("local index in range")
        })
        .collect();

    let valid = |members: &[usize], nodes: &mut u64| -> bool {
        *nodes += 1;
        set_valid_cached(sub, &free, members)
    };

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| {
        let v = VertexId::new(u);
        (std::cmp::Reverse(sub.out_degree(v) + sub.in_degree(v)), u)
    });

    // Greedy incumbent: grow along the degree order while the set stays
    // valid. Every accepted prefix is a valid set by construction.
    let mut incumbent: Vec<usize> = Vec::new();
    for &u in &order {
        incumbent.push(u);
        if !valid(&incumbent, nodes) {
            incumbent.pop();
        }
    }
    let mut best = incumbent.len().max(1);

    // Branch and bound over the degree order.
    let mut current: Vec<usize> = Vec::new();
    fn dfs(
        order: &[usize],
        idx: usize,
        current: &mut Vec<usize>,
        best: &mut usize,
        valid: &mut dyn FnMut(&[usize]) -> bool,
    ) {
        if current.len() + (order.len() - idx) <= *best {
            return;
        }
        let Some(&u) = order.get(idx) else { return };
        current.push(u);
        if valid(current) {
            *best = (*best).max(current.len());
            dfs(order, idx + 1, current, best, valid);
        }
        current.pop();
        dfs(order, idx + 1, current, best, valid);
    }
    let mut check = |members: &[usize]| valid(members, nodes);
    dfs(&order, 0, &mut current, &mut best, &mut check);

    // Lexicographic extraction: first valid set of size `best` in index
    // order. Hereditary validity guarantees its prefixes are valid, so the
    // include-first walk cannot miss it.
    let mut witness: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    fn extract(
        n: usize,
        idx: usize,
        target: usize,
        current: &mut Vec<usize>,
        witness: &mut Vec<usize>,
        valid: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if current.len() == target {
            witness.extend_from_slice(current);
            return true;
        }
        if idx == n || current.len() + (n - idx) < target {
            return false;
        }
        current.push(idx);
        if valid(current) && extract(n, idx + 1, target, current, witness, valid) {
            return true;
        }
        current.pop();
        extract(n, idx + 1, target, current, witness, valid)
    }
    let mut check = |members: &[usize]| valid(members, nodes);
    let found = extract(n, 0, best, &mut current, &mut witness, &mut check);
    debug_assert!(found, "a maximum set must exist at the established size");
    (best, witness)
}

/// Set validity against cached plain distances: for each member, one
/// restricted BFS and a comparison on the other members. Matches
/// `visibility::verify` for the standard variant.
fn set_valid_cached(
    sub: &Digraph,
    free: &[crate::digraph::DistanceVector],
    members: &[usize],
) -> bool {
    for &u in members {
        let source = VertexId::new(u);
        let blockers: Vec<VertexId> = members
            .iter()
            .filter(|&&m| m != u)
            .map(|&m| VertexId::new(m))
            .collect();
        let restricted = sub
            .restricted_bfs(source, &blockers)
            .expect("source is not blocked");
        for &t in members {
            if t == u {
                continue;
            }
            let target = VertexId::new(t);
            let df = free[u].get(target);
            if df.is_none() || restricted.get(target) != df {
                return false;
            }
        }
    }
    true
}

/// Exhaustive maximum by subset enumeration in decreasing size order
/// (lexicographic within a size), checked with the naive oracle. Exact by
/// exhaustion; refuses graphs above `cap` vertices.
pub fn mu_bruteforce_capped(d: &Digraph, cap: usize) -> Result<MuResult> {
    enumerate_max(d, Variant::Standard, cap, false, 1)
}

/// [`mu_bruteforce_capped`] at the default cap of 15 vertices.
pub fn mu_bruteforce(d: &Digraph) -> Result<MuResult> {
    mu_bruteforce_capped(d, DEFAULT_BRUTEFORCE_CAP)
}

/// Exact maximum for any variant by brute force. Hereditary pruning is not
/// assumed for total/outer/dual (removing a vertex from the set moves it
/// to the complement, which can add constraints), so everything is
/// enumerated. The empty set participates for the non-standard variants;
/// if not even it is valid the variant has no feasible set at all.
pub fn mu_variant_capped(d: &Digraph, variant: Variant, cap: usize) -> Result<MuResult> {
    let floor = if variant == Variant::Standard { 1 } else { 0 };
    enumerate_max(d, variant, cap, false, floor)
}

/// [`mu_variant_capped`] at the default cap.
pub fn mu_variant(d: &Digraph, variant: Variant) -> Result<MuResult> {
    mu_variant_capped(d, variant, DEFAULT_BRUTEFORCE_CAP)
}

/// Maximum mutual-visibility set of an undirected graph, passed in as its
/// symmetrized digraph (every arc paired with its reverse). One clean
/// shortest path per unordered pair suffices, matching the undirected
/// definition.
pub fn mu_undirected_bruteforce_capped(d: &Digraph, cap: usize) -> Result<MuResult> {
    for (u, v) in d.arcs() {
        if !d.has_arc(v, u) {
            return Err(Error::InvalidParameter(format!(
                "arc ({u}, {v}) has no reverse; undirected input must be symmetrized"
            )));
        }
    }
    enumerate_max(d, Variant::Standard, cap, true, 1)
}

/// [`mu_undirected_bruteforce_capped`] at the default cap.
pub fn mu_undirected_bruteforce(d: &Digraph) -> Result<MuResult> {
    mu_undirected_bruteforce_capped(d, DEFAULT_BRUTEFORCE_CAP)
}

fn enumerate_max(
    d: &Digraph,
    variant: Variant,
    cap: usize,
    one_direction: bool,
    size_floor: usize,
) -> Result<MuResult> {
    let n = d.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > cap {
        return Err(Error::OracleCapExceeded { n, cap });
    }
    let free = free_distances(d);
    let mut nodes = 0u64;
    for size in (size_floor..=n).rev() {
        for subset in (0..n).combinations(size) {
            let members: Vec<VertexId> = subset.iter().map(|&i| VertexId::new(i)).collect();
            nodes += 1;
            if naive_set_valid(d, &free, &members, variant, one_direction) {
                return Ok(MuResult {
                    mu: size,
                    witness: members,
                    nodes_explored: nodes,
                    shortcut: Shortcut::None,
                });
            }
        }
    }
    // Reached only when even the empty set fails (non-standard variants on
    // graphs with unreachable pairs).
    debug_assert_ne!(variant, Variant::Standard);
    Err(Error::NoValidSet(variant.name()))
}
