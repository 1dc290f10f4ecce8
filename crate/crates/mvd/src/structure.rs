//! Strong-connectivity structure: SCCs, the condensation DAG, strong
//! bridges with their source/sink cuts, and neighborhood counts.

use serde_json::{json, Value};

use crate::digraph::{Digraph, VertexId};
use crate::error::{Error, Result};

/// Partition of a digraph into strongly connected components.
///
/// Component indices are assigned in reverse topological order of the
/// condensation: component 0 can reach nothing outside itself, and every
/// condensation arc points from a higher index to a lower one.
#[derive(Debug, Clone)]
pub struct SccDecomposition {
    /// Component index of each vertex.
    pub component_of: Vec<usize>,
    /// Vertices of each component, sorted ascending.
    pub components: Vec<Vec<VertexId>>,
    /// The condensation: one vertex per component, an arc where any
    /// original arc crosses between distinct components.
    pub condensation: Digraph,
}

/// The two-sided cut certified by a strong bridge `(u, v)` of a strongly
/// connected digraph: `bridge` is the unique arc from `v_source` to
/// `v_sink`, so every source-to-sink path traverses it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeCut {
    pub bridge: (VertexId, VertexId),
    pub v_source: Vec<VertexId>,
    pub v_sink: Vec<VertexId>,
}

/// Strongly connected components by iterative Tarjan.
pub fn scc(d: &Digraph) -> SccDecomposition {
    scc_excluding(d, None)
}

/// Tarjan with an optional arc masked out, used for bridge detection.
/// The lowlink pass emits each component when its root closes, which is
/// exactly reverse topological order of the condensation.
fn scc_excluding(d: &Digraph, skip: Option<(VertexId, VertexId)>) -> SccDecomposition {
    const UNSET: usize = usize::MAX;
    let n = d.vertex_count();
    let mut index = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut component_of = vec![UNSET; n];
    let mut components: Vec<Vec<VertexId>> = Vec::new();
    let mut next_index = 0usize;

    // Explicit DFS frames: (vertex, position in its out-list).
    let mut frames: Vec<(usize, usize)> = Vec::new();
    for start in 0..n {
        if index[start] != UNSET {
            continue;
        }
        frames.push((start, 0));
        index[start] = next_index;
        low[start] = next_index;
        next_index += 1;
        stack.push(start);
        on_stack[start] = true;

        while let Some(frame) = frames.last_mut() {
            let v = frame.0;
            let outs = d.out_neighbors(VertexId::new(v));
            if frame.1 < outs.len() {
                let w = outs[frame.1].index();
                frame.1 += 1;
                if skip == Some((VertexId::new(v), VertexId::new(w))) {
                    continue;
                }
                if index[w] == UNSET {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                frames.pop();
                if let Some(&(parent, _)) = frames.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        component_of[w] = components.len();
                        comp.push(VertexId::new(w));
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    components.push(comp);
                }
            }
        }
    }

    let mut cond_arcs = Vec::new();
    for (u, v) in d.arcs() {
        if skip == Some((u, v)) {
            continue;
        }
        let (cu, cv) = (component_of[u.index()], component_of[v.index()]);
        if cu != cv {
            cond_arcs.push((cu, cv));
        }
    }
    let condensation =
        Digraph::from_arcs(components.len(), cond_arcs).expect("condensation arcs are in range");

    SccDecomposition {
        component_of,
        components,
        condensation,
    }
}

/// True iff the graph has no directed cycle, i.e. every SCC is a singleton.
pub fn is_dag(d: &Digraph) -> bool {
    scc(d).components.len() == d.vertex_count()
}

/// All strong bridges: arcs whose removal increases the number of SCCs.
/// Computed by deletion and recount per arc; output is in lexicographic
/// index order.
pub fn strong_bridges(d: &Digraph) -> Vec<(VertexId, VertexId)> {
    let base = scc(d).components.len();
    d.arcs()
        .filter(|&(u, v)| scc_excluding(d, Some((u, v))).components.len() > base)
        .collect()
}

/// Number of strong bridges.
pub fn beta(d: &Digraph) -> usize {
    strong_bridges(d).len()
}

/// The cut certified by strong bridge `e = (u, v)` of a strongly connected
/// digraph: `v_source` is everything `u` still reaches once `e` is removed
/// (no arc leaves that set in `D - e`, so `e` is the unique crossing arc),
/// `v_sink` is the complement.
pub fn bridge_cut(d: &Digraph, e: (VertexId, VertexId)) -> Result<BridgeCut> {
    let (u, v) = e;
    d.check_vertex(u)?;
    d.check_vertex(v)?;
    let base = scc(d);
    if base.components.len() != 1 || d.vertex_count() == 0 {
        return Err(Error::NotStronglyConnected);
    }
    if !d.has_arc(u, v) || scc_excluding(d, Some(e)).components.len() == 1 {
        return Err(Error::NotStrongBridge(u.index(), v.index()));
    }

    let mut in_source = vec![false; d.vertex_count()];
    in_source[u.index()] = true;
    let mut queue = vec![u];
    while let Some(cur) = queue.pop() {
        for &next in d.out_neighbors(cur) {
            if cur == u && next == v {
                continue; // the bridge itself
            }
            if !in_source[next.index()] {
                in_source[next.index()] = true;
                queue.push(next);
            }
        }
    }
    let v_source: Vec<VertexId> = d.vertices().filter(|w| in_source[w.index()]).collect();
    let v_sink: Vec<VertexId> = d.vertices().filter(|w| !in_source[w.index()]).collect();
    debug_assert!(!v_sink.is_empty(), "bridge head must be cut off from tail");
    Ok(BridgeCut {
        bridge: e,
        v_source,
        v_sink,
    })
}

/// Number of vertices `w` with `u -> w` and `v -> w` (arc-level).
pub fn count_common_out_neighbors(d: &Digraph, u: VertexId, v: VertexId) -> Result<usize> {
    d.check_vertex(u)?;
    d.check_vertex(v)?;
    if u == v {
        return Err(Error::IdenticalVertices(u.index()));
    }
    Ok(d.out_neighbors(u)
        .iter()
        .filter(|w| d.has_arc(v, **w))
        .count())
}

/// Number of length-2 paths `from -> w -> to`.
pub fn count_two_paths(d: &Digraph, from: VertexId, to: VertexId) -> Result<usize> {
    d.check_vertex(from)?;
    d.check_vertex(to)?;
    if from == to {
        return Err(Error::IdenticalVertices(from.index()));
    }
    Ok(d.out_neighbors(from)
        .iter()
        .filter(|w| d.has_arc(**w, to))
        .count())
}

/// Full structural report as a JSON document with sorted keys:
/// components (label lists), condensation edge list, bridges, beta, is_dag.
pub fn analysis_json(d: &Digraph) -> Value {
    let decomposition = scc(d);
    let components: Vec<Value> = decomposition
        .components
        .iter()
        .map(|c| Value::from(c.iter().map(|&v| d.label(v)).collect::<Vec<_>>()))
        .collect();
    let condensation: Vec<Value> = decomposition
        .condensation
        .arcs()
        .map(|(a, b)| json!([a.index(), b.index()]))
        .collect();
    let bridges: Vec<Value> = strong_bridges(d)
        .iter()
        .map(|&(a, b)| json!([d.label(a), d.label(b)]))
        .collect();
    json!({
        "components": components,
        "condensation": condensation,
        "bridges": bridges,
        "beta": bridges.len(),
        "is_dag": decomposition.components.len() == d.vertex_count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_complete, gen_cycle, gen_paley, gen_path_dag, gen_two_clique};

    fn v(i: usize) -> VertexId {
        VertexId::new(i)
    }

    #[test]
    fn cycle_is_one_component() {
        let d = gen_cycle(7).unwrap();
        let s = scc(&d);
        assert_eq!(s.components.len(), 1);
        assert_eq!(s.components[0].len(), 7);
        assert_eq!(s.condensation.vertex_count(), 1);
        assert_eq!(s.condensation.arc_count(), 0);
    }

    #[test]
    fn path_dag_has_singleton_components() {
        let d = gen_path_dag(4).unwrap();
        let s = scc(&d);
        assert_eq!(s.components.len(), 4);
        assert!(s.components.iter().all(|c| c.len() == 1));
        // Condensation is the path again; reverse topological indexing puts
        // the sink at component 0.
        assert_eq!(s.component_of, vec![3, 2, 1, 0]);
        assert_eq!(s.condensation.arc_count(), 3);
        assert!(is_dag(&s.condensation));
    }

    #[test]
    fn two_clique_is_strongly_connected() {
        let d = gen_two_clique(3).unwrap();
        let s = scc(&d);
        assert_eq!(s.components.len(), 1);
        assert_eq!(s.components[0].len(), 6);
    }

    #[test]
    fn dag_check() {
        assert!(is_dag(&gen_path_dag(5).unwrap()));
        assert!(!is_dag(&gen_cycle(3).unwrap()));
    }

    #[test]
    fn condensation_is_always_acyclic() {
        for d in [
            gen_cycle(5).unwrap(),
            gen_two_clique(3).unwrap(),
            Digraph::from_arcs(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 3)]).unwrap(),
        ] {
            assert!(is_dag(&scc(&d).condensation));
        }
    }

    #[test]
    fn every_cycle_arc_is_a_strong_bridge() {
        for n in [3, 6, 10] {
            let d = gen_cycle(n).unwrap();
            assert_eq!(strong_bridges(&d).len(), n);
            assert_eq!(beta(&d), n);
        }
    }

    #[test]
    fn two_clique_has_exactly_the_connecting_bridges() {
        let d = gen_two_clique(5).unwrap();
        assert_eq!(strong_bridges(&d), vec![(v(0), v(5)), (v(5), v(0))]);
        assert_eq!(beta(&gen_two_clique(4).unwrap()), 2);
    }

    #[test]
    fn complete_digraph_has_no_bridges() {
        assert!(strong_bridges(&gen_complete(4).unwrap()).is_empty());
        assert_eq!(beta(&gen_complete(5).unwrap()), 0);
    }

    #[test]
    fn bridge_cut_on_cycle() {
        let d = gen_cycle(4).unwrap();
        let cut = bridge_cut(&d, (v(0), v(1))).unwrap();
        assert_eq!(cut.v_source, vec![v(0)]);
        assert_eq!(cut.v_sink, vec![v(1), v(2), v(3)]);
    }

    #[test]
    fn bridge_cut_on_two_clique() {
        let d = gen_two_clique(3).unwrap();
        let cut = bridge_cut(&d, (v(0), v(3))).unwrap();
        assert_eq!(cut.v_source, vec![v(0), v(1), v(2)]);
        assert_eq!(cut.v_sink, vec![v(3), v(4), v(5)]);
        // Endpoints land on their own sides by construction.
        assert!(cut.v_source.contains(&cut.bridge.0));
        assert!(cut.v_sink.contains(&cut.bridge.1));
    }

    #[test]
    fn bridge_cut_has_unique_crossing_arc() {
        let d = gen_two_clique(4).unwrap();
        let cut = bridge_cut(&d, (v(0), v(4))).unwrap();
        let crossing: Vec<_> = d
            .arcs()
            .filter(|(a, b)| cut.v_source.contains(a) && cut.v_sink.contains(b))
            .collect();
        assert_eq!(crossing, vec![(v(0), v(4))]);
    }

    #[test]
    fn bridge_cut_rejects_non_bridges() {
        let d = gen_complete(4).unwrap();
        assert!(matches!(
            bridge_cut(&d, (v(0), v(1))),
            Err(Error::NotStrongBridge(0, 1))
        ));
        let path = gen_path_dag(3).unwrap();
        assert!(matches!(
            bridge_cut(&path, (v(0), v(1))),
            Err(Error::NotStronglyConnected)
        ));
    }

    #[test]
    fn paley_common_out_neighbors() {
        let p7 = gen_paley(7).unwrap();
        assert_eq!(count_common_out_neighbors(&p7, v(0), v(1)).unwrap(), 1);
        let p11 = gen_paley(11).unwrap();
        for u in 0..11 {
            for w in 0..11 {
                if u != w {
                    assert_eq!(count_common_out_neighbors(&p11, v(u), v(w)).unwrap(), 2);
                }
            }
        }
    }

    #[test]
    fn complete_digraph_common_out_neighbors() {
        let k3 = gen_complete(3).unwrap();
        assert_eq!(count_common_out_neighbors(&k3, v(0), v(1)).unwrap(), 1);
    }

    #[test]
    fn two_path_counts() {
        let p7 = gen_paley(7).unwrap();
        assert!(p7.has_arc(v(0), v(1)));
        // Against the arc the return-path count is (q+1)/4, along it (q-3)/4.
        assert_eq!(count_two_paths(&p7, v(1), v(0)).unwrap(), 2);
        assert_eq!(count_two_paths(&p7, v(0), v(1)).unwrap(), 1);

        let c4 = gen_cycle(4).unwrap();
        assert_eq!(count_two_paths(&c4, v(0), v(2)).unwrap(), 1);
        let path = gen_path_dag(3).unwrap();
        assert_eq!(count_two_paths(&path, v(2), v(0)).unwrap(), 0);
    }

    #[test]
    fn counts_reject_identical_vertices() {
        let d = gen_cycle(3).unwrap();
        assert!(count_common_out_neighbors(&d, v(1), v(1)).is_err());
        assert!(count_two_paths(&d, v(2), v(2)).is_err());
    }

    #[test]
    fn analysis_json_shape() {
        let d = gen_cycle(4).unwrap();
        let report = analysis_json(&d);
        assert_eq!(report["beta"], 4);
        assert_eq!(report["is_dag"], false);
        assert_eq!(report["components"].as_array().unwrap().len(), 1);
    }
}
