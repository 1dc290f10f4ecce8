//! Directed-graph representation, edge-list parsing, and BFS distances.
//!
//! A [`Digraph`] is a simple directed graph (no self-loops, no parallel
//! arcs) over dense vertex indices `0..n`, optionally carrying display
//! labels. Adjacency lists are kept sorted so every iteration order, and
//! therefore every result derived from one, is deterministic.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Index of a vertex, dense in `[0, n)` for the owning graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(usize);

impl VertexId {
    pub fn new(index: usize) -> Self {
        VertexId(index)
    }

    pub fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for VertexId {
    fn from(index: usize) -> Self {
        VertexId(index)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Per-vertex shortest-path distances from one source; `None` means the
/// vertex is unreachable. Unreachability is always this distinct sentinel,
/// never a large finite stand-in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceVector {
    dist: Vec<Option<usize>>,
}

impl DistanceVector {
    pub fn get(&self, v: VertexId) -> Option<usize> {
        self.dist[v.0]
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    /// Distances in vertex-index order.
    pub fn iter(&self) -> impl Iterator<Item = Option<usize>> + '_ {
        self.dist.iter().copied()
    }
}

/// A simple directed graph with sorted adjacency in both directions.
///
/// Immutable after construction; all operations are pure functions of the
/// graph, so sharing one across threads is safe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    out_adj: Vec<Vec<VertexId>>,
    in_adj: Vec<Vec<VertexId>>,
    labels: Option<Vec<String>>,
}

impl Digraph {
    /// Builds a graph on `n` unlabeled vertices from arc pairs. Duplicate
    /// arcs collapse; self-loops and out-of-range endpoints are rejected.
    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::build(n, arcs, None)
    }

    /// Builds a labeled graph; the vertex count is the number of labels.
    pub fn from_labeled_arcs(
        labels: Vec<String>,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let n = labels.len();
        Self::build(n, arcs, Some(labels))
    }

    fn build(
        n: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in arcs {
            if u >= n {
                return Err(Error::InvalidVertex { index: u, n });
            }
            if v >= n {
                return Err(Error::InvalidVertex { index: v, n });
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            set.insert((u, v));
        }
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for (u, v) in set {
            out_adj[u].push(VertexId(v));
            in_adj[v].push(VertexId(u));
        }
        // BTreeSet iteration already sorts out_adj; in_adj needs its own pass.
        for list in &mut in_adj {
            list.sort_unstable();
        }
        Ok(Digraph {
            out_adj,
            in_adj,
            labels,
        })
    }

    /// Parses the edge-list format: one arc per line as `u v`, `#`-prefixed
    /// comment lines and blank lines ignored. If every token is a decimal
    /// integer the tokens are used as vertex indices directly; otherwise the
    /// tokens are labels and indices are assigned in first-appearance order.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut raw: Vec<(usize, String, String)> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!(
                        "expected two vertex tokens separated by whitespace, got {}",
                        tokens.len()
                    ),
                });
            }
            raw.push((line_no, tokens[0].to_string(), tokens[1].to_string()));
        }

        let numeric = raw
            .iter()
            .flat_map(|(_, u, v)| [u, v])
            .all(|t| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit()));

        let mut arcs: Vec<(usize, usize, usize)> = Vec::new(); // (line, u, v)
        let labels;
        if numeric {
            let mut n = 0usize;
            for (line, ut, vt) in &raw {
                let parse = |t: &str| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        line: *line,
                        message: format!("vertex id {t} out of range"),
                    })
                };
                let (u, v) = (parse(ut)?, parse(vt)?);
                n = n.max(u + 1).max(v + 1);
                arcs.push((*line, u, v));
            }
            labels = None;
        } else {
            let mut index_of: BTreeMap<String, usize> = BTreeMap::new();
            let mut names: Vec<String> = Vec::new();
            let mut resolve = |t: &str| -> usize {
                *index_of.entry(t.to_string()).or_insert_with(|| {
                    names.push(t.to_string());
                    names.len() - 1
                })
            };
            for (line, ut, vt) in &raw {
                let (u, v) = (resolve(ut), resolve(vt));
                arcs.push((*line, u, v));
            }
            labels = Some(names);
        }

        for &(line, u, v) in &arcs {
            if u == v {
                return Err(Error::Parse {
                    line,
                    message: "self-loops are not allowed".to_string(),
                });
            }
        }
        let n = labels.as_ref().map(|l| l.len()).unwrap_or_else(|| {
            arcs.iter()
                .map(|&(_, u, v)| u.max(v) + 1)
                .max()
                .unwrap_or(0)
        });
        Self::build(n, arcs.into_iter().map(|(_, u, v)| (u, v)), labels)
    }

    /// Emits the canonical edge-list form: arcs sorted by index pair, one
    /// per line, no trailing newline. Vertices with no arcs do not appear.
    pub fn to_edge_list(&self) -> String {
        let mut lines = Vec::with_capacity(self.arc_count());
        for (u, v) in self.arcs() {
            lines.push(format!("{} {}", self.label(u), self.label(v)));
        }
        lines.join("\n")
    }

    /// Emits Graphviz DOT: isolated vertices as node statements, then one
    /// arc per line, labels quoted.
    pub fn to_dot(&self) -> String {
        fn quote(s: &str) -> String {
            format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
        }
        let mut out = String::from("digraph {\n");
        for v in self.vertices() {
            if self.out_adj[v.0].is_empty() && self.in_adj[v.0].is_empty() {
                out.push_str(&format!("  {};\n", quote(&self.label(v))));
            }
        }
        for (u, v) in self.arcs() {
            out.push_str(&format!(
                "  {} -> {};\n",
                quote(&self.label(u)),
                quote(&self.label(v))
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.out_adj.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out_adj.iter().map(Vec::len).sum()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count()).map(VertexId)
    }

    /// Arcs in lexicographic index order.
    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, outs)| outs.iter().map(move |&v| (VertexId(u), v)))
    }

    pub fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.out_adj[v.0]
    }

    pub fn in_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.in_adj[v.0]
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.out_adj[u.0].binary_search(&v).is_ok()
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_adj[v.0].len()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_adj[v.0].len()
    }

    /// Display label for a vertex: its assigned name, or the index rendered
    /// in decimal when the graph is unlabeled.
    pub fn label(&self, v: VertexId) -> String {
        match &self.labels {
            Some(l) => l[v.0].clone(),
            None => v.0.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Resolves a display token back to a vertex: label lookup on labeled
    /// graphs, decimal index on unlabeled ones.
    pub fn vertex_by_label(&self, token: &str) -> Option<VertexId> {
        match &self.labels {
            Some(l) => l.iter().position(|s| s == token).map(VertexId),
            None => token
                .parse::<usize>()
                .ok()
                .filter(|&i| i < self.vertex_count())
                .map(VertexId),
        }
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                index: v.0,
                n: self.vertex_count(),
            })
        }
    }

    /// Shortest-path distances from `source` to every vertex.
    pub fn bfs_distances(&self, source: VertexId) -> Result<DistanceVector> {
        self.check_vertex(source)?;
        Ok(self.bfs_impl(source, &vec![false; self.vertex_count()]))
    }

    /// Shortest-path distances where the *internal* vertices of a path must
    /// avoid `blocked`: a blocked vertex still gets a distance recorded when
    /// first reached, but is never expanded.
    pub fn restricted_bfs(&self, source: VertexId, blocked: &[VertexId]) -> Result<DistanceVector> {
        self.check_vertex(source)?;
        let mut mask = vec![false; self.vertex_count()];
        for &b in blocked {
            self.check_vertex(b)?;
            if b == source {
                return Err(Error::SourceBlocked(source.0));
            }
            mask[b.0] = true;
        }
        Ok(self.bfs_impl(source, &mask))
    }

    fn bfs_impl(&self, source: VertexId, blocked: &[bool]) -> DistanceVector {
        let mut dist = vec![None; self.vertex_count()];
        dist[source.0] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(cur) = queue.pop_front() {
            let d = dist[cur.0].unwrap();
            for &next in &self.out_adj[cur.0] {
                if dist[next.0].is_none() {
                    dist[next.0] = Some(d + 1);
                    if !blocked[next.0] {
                        queue.push_back(next);
                    }
                }
            }
        }
        DistanceVector { dist }
    }

    /// True iff `u` reaches `v` and `v` reaches `u`.
    pub fn mutually_reachable(&self, u: VertexId, v: VertexId) -> bool {
        self.reaches(u, v) && self.reaches(v, u)
    }

    fn reaches(&self, from: VertexId, to: VertexId) -> bool {
        if from == to {
            return true;
        }
        let mut seen = vec![false; self.vertex_count()];
        seen[from.0] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(cur) = queue.pop_front() {
            for &next in &self.out_adj[cur.0] {
                if next == to {
                    return true;
                }
                if !seen[next.0] {
                    seen[next.0] = true;
                    queue.push_back(next);
                }
            }
        }
        false
    }

    /// The subgraph induced by `vertices` (deduplicated, sorted), together
    /// with the mapping from new index to original vertex.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Result<(Digraph, Vec<VertexId>)> {
        let mut keep: Vec<VertexId> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        for &v in &keep {
            self.check_vertex(v)?;
        }
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            local[v.0] = i;
        }
        let mut arcs = Vec::new();
        for &u in &keep {
            for &v in &self.out_adj[u.0] {
                if local[v.0] != usize::MAX {
                    arcs.push((local[u.0], local[v.0]));
                }
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| keep.iter().map(|&v| l[v.0].clone()).collect());
        let sub = Self::build(keep.len(), arcs, labels)?;
        Ok((sub, keep))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn v(i: usize) -> VertexId {
        VertexId::new(i)
    }

    fn cycle(n: usize) -> Digraph {
        Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn parses_numeric_cycle() {
        let d = Digraph::from_edge_list("0 1\n1 2\n2 0").unwrap();
        assert_eq!(d.vertex_count(), 3);
        assert_eq!(
            d.arcs()
                .map(|(a, b)| (a.index(), b.index()))
                .collect::<Vec<_>>(),
            vec![(0, 1), (1, 2), (2, 0)]
        );
        assert!(d.labels().is_none());
    }

    #[test]
    fn parses_empty_input() {
        let d = Digraph::from_edge_list("").unwrap();
        assert_eq!(d.vertex_count(), 0);
        assert_eq!(d.arc_count(), 0);
        assert_eq!(d.to_edge_list(), "");
    }

    #[test]
    fn parses_labeled_pair() {
        let d = Digraph::from_edge_list("a b\nb a").unwrap();
        assert_eq!(d.vertex_count(), 2);
        assert_eq!(d.labels(), Some(&["a".to_string(), "b".to_string()][..]));
        assert!(d.has_arc(v(0), v(1)) && d.has_arc(v(1), v(0)));
    }

    #[test]
    fn comments_blanks_and_duplicates() {
        let d =
            Digraph::from_edge_list("# header\n\n0 1\n0 1\n  # indented comment\n1 0\n").unwrap();
        assert_eq!(d.arc_count(), 2);
    }

    #[test]
    fn rejects_malformed_line_with_number() {
        let err = Digraph::from_edge_list("0 1\n2\n1 0").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_self_loop() {
        let err = Digraph::from_edge_list("0 1\n1 1").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(Digraph::from_arcs(3, [(0, 0)]).is_err());
    }

    #[test]
    fn numeric_mode_keeps_gaps() {
        let d = Digraph::from_edge_list("5 3").unwrap();
        assert_eq!(d.vertex_count(), 6);
        assert!(d.has_arc(v(5), v(3)));
        assert_eq!(d.to_edge_list(), "5 3");
    }

    #[test]
    fn edge_list_round_trip() {
        let text = "0 1\n1 2\n2 0";
        let d = Digraph::from_edge_list(text).unwrap();
        assert_eq!(d.to_edge_list(), text);
        assert_eq!(Digraph::from_edge_list(&d.to_edge_list()).unwrap(), d);
    }

    #[test]
    fn dot_output_quotes_labels() {
        let d = Digraph::from_edge_list("a b").unwrap();
        assert_eq!(d.to_dot(), "digraph {\n  \"a\" -> \"b\";\n}\n");
    }

    #[test]
    fn dot_output_lists_isolated_vertices() {
        let d = Digraph::from_arcs(3, [(0, 1)]).unwrap();
        assert!(d.to_dot().contains("  \"2\";\n"));
    }

    #[test]
    fn bfs_on_cycle() {
        let d = cycle(5);
        let dist = d.bfs_distances(v(0)).unwrap();
        let got: Vec<_> = dist.iter().collect();
        assert_eq!(got, vec![Some(0), Some(1), Some(2), Some(3), Some(4)]);
    }

    #[test]
    fn bfs_unreachable_is_none() {
        let d = Digraph::from_arcs(3, [(0, 1)]).unwrap();
        let dist = d.bfs_distances(v(0)).unwrap();
        assert_eq!(dist.get(v(2)), None);
    }

    #[test]
    fn bfs_invalid_source() {
        let d = cycle(3);
        assert!(matches!(
            d.bfs_distances(v(9)),
            Err(Error::InvalidVertex { index: 9, n: 3 })
        ));
    }

    #[test]
    fn restricted_bfs_records_but_does_not_expand() {
        let d = cycle(5);
        let dist = d.restricted_bfs(v(0), &[v(2)]).unwrap();
        assert_eq!(dist.get(v(2)), Some(2));
        assert_eq!(dist.get(v(3)), None);
    }

    #[test]
    fn restricted_bfs_empty_block_matches_plain() {
        let d = cycle(7);
        assert_eq!(
            d.restricted_bfs(v(3), &[]).unwrap(),
            d.bfs_distances(v(3)).unwrap()
        );
    }

    #[test]
    fn restricted_bfs_rejects_blocked_source() {
        let d = cycle(4);
        assert!(matches!(
            d.restricted_bfs(v(1), &[v(1)]),
            Err(Error::SourceBlocked(1))
        ));
    }

    #[test]
    fn mutual_reachability() {
        let d = cycle(4);
        assert!(d.mutually_reachable(v(0), v(2)));
        let path = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!path.mutually_reachable(v(0), v(2)));
        assert!(path.mutually_reachable(v(1), v(1)));
    }

    #[test]
    fn induced_subgraph_remaps() {
        let d = cycle(5);
        let (sub, map) = d.induced_subgraph(&[v(3), v(1), v(2)]).unwrap();
        assert_eq!(map, vec![v(1), v(2), v(3)]);
        assert_eq!(sub.vertex_count(), 3);
        assert!(sub.has_arc(v(0), v(1)) && sub.has_arc(v(1), v(2)));
        assert_eq!(sub.arc_count(), 2);
    }
}
