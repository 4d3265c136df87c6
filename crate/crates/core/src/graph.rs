//! Simple undirected graphs, named families and the graph6 format.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{arg, Error, Result};

/// A simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![BTreeSet::new(); n],
        }
    }

    /// Builds a graph from an edge list. Loops and out-of-range endpoints
    /// are errors; repeated edges collapse.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return arg(format!("loop at vertex {u}"));
        }
        if u >= self.n || v >= self.n {
            return arg(format!("edge ({u},{v}) out of range for n={}", self.n));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return arg(format!("({u},{v}) is not an edge"));
        }
        let mut g = self.clone();
        g.adj[u].remove(&v);
        g.adj[v].remove(&u);
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(BTreeSet::len).collect()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.adj[u].range(u + 1..).map(move |&v| (u, v)))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_sizes().len() == 1
    }

    fn component_sizes(&self) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut sizes = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            let mut size = 0;
            while let Some(u) = queue.pop_front() {
                size += 1;
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            sizes.push(size);
        }
        sizes
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.size() + 1 == self.n && self.is_connected()
    }

    /// Two-colours the graph; `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].expect("visited");
                for v in self.neighbors(u) {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.expect("all visited")).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// The common degree when every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        match d.first() {
            Some(&first) if d.iter().all(|&x| x == first) => Some(first),
            _ => None,
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return arg("relabelling must cover every vertex");
        }
        Graph::from_edges(
            self.n,
            self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])),
        )
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Star(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
}

impl Family {
    /// Builds the family member with canonical labelling: path and cycle in
    /// index order, the star centre is the last vertex, bipartite blocks are
    /// contiguous.
    pub fn build(self) -> Result<Graph> {
        match self {
            Family::Path(n) | Family::Star(n) | Family::Complete(n) if n == 0 => {
                arg("family size must be positive")
            }
            Family::Path(n) => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
            Family::Star(n) => Graph::from_edges(n, (0..n - 1).map(|i| (i, n - 1))),
            Family::Cycle(n) if n < 3 => arg(format!("cycle needs at least 3 vertices, got {n}")),
            Family::Cycle(n) => Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))),
            Family::Complete(n) => {
                Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            }
            Family::CompleteBipartite(p, q) if p == 0 || q == 0 => {
                arg("complete bipartite blocks must be positive")
            }
            Family::CompleteBipartite(p, q) => {
                Graph::from_edges(p + q, (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v))))
            }
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `path:5`, `star:4`, `cycle:6`, `complete:4`, `kbip:3,4`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| Error::Argument(format!("family spec {s:?} needs name:params")))?;
        let nums = params
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Argument(format!("bad family parameters {params:?}: {e}")))?;
        match (name, nums.as_slice()) {
            ("path", [n]) => Ok(Family::Path(*n)),
            ("star", [n]) => Ok(Family::Star(*n)),
            ("cycle", [n]) => Ok(Family::Cycle(*n)),
            ("complete", [n]) => Ok(Family::Complete(*n)),
            ("kbip", [p, q]) => Ok(Family::CompleteBipartite(*p, *q)),
            _ => arg(format!("unknown family spec {s:?}")),
        }
    }
}

/// Decodes one graph6 string (no `>>graph6<<` header).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bad = |msg: String| Err(Error::Graph6(msg));
    if bytes.is_empty() {
        return bad("empty input".into());
    }
    if let Some(&c) = bytes.iter().find(|&&c| !(63..=126).contains(&c)) {
        return bad(format!("byte {c} outside the printable range 63..=126"));
    }
    let vals: Vec<u32> = bytes.iter().map(|&c| u32::from(c) - 63).collect();
    let (n, body) = if vals[0] < 63 {
        (vals[0] as usize, &vals[1..])
    } else if vals.len() >= 4 && vals[1] < 63 {
        let n = (vals[1] << 12) | (vals[2] << 6) | vals[3];
        (n as usize, &vals[4..])
    } else if vals.len() >= 8 && vals[1] == 63 {
        let n = vals[2..8]
            .iter()
            .fold(0u64, |acc, &v| (acc << 6) | u64::from(v));
        (n as usize, &vals[8..])
    } else {
        return bad("truncated length header".into());
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return bad(format!(
            "expected {need} data bytes for n={n}, found {}",
            body.len()
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if body[k / 6] >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    if k % 6 != 0 && body[k / 6] & ((1 << (6 - k % 6)) - 1) != 0 {
        return bad("nonzero padding bits".into());
    }
    Ok(g)
}

/// Encodes a graph as graph6: the upper triangle column by column, six bits
/// per printable byte.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Streams graphs from graph6 text, one per line. Blank lines, `#` comments
/// and the optional `>>graph6<<` header are skipped. Each item carries its
/// 1-based line number.
pub fn read_graph6_lines<R: std::io::BufRead>(
    reader: R,
) -> impl Iterator<Item = (usize, Result<Graph>)> {
    reader.lines().enumerate().filter_map(|(i, line)| {
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some((i + 1, Err(Error::Graph6(e.to_string())))),
        };
        let t = line.trim();
        let t = t.strip_prefix(">>graph6<<").unwrap_or(t);
        if t.is_empty() || t.starts_with('#') {
            None
        } else {
            Some((i + 1, parse_graph6(t)))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        let s = Family::Star(4).build().unwrap();
        assert_eq!(s.size(), 3);
        assert_eq!(s.degrees(), vec![1, 1, 1, 3]);
        let c = Family::Cycle(5).build().unwrap();
        assert_eq!(c.size(), 5);
        assert_eq!(c.regular_degree(), Some(2));
        assert_eq!(Family::CompleteBipartite(2, 3).build().unwrap().size(), 6);
        assert_eq!(Family::Complete(5).build().unwrap().size(), 10);
        assert!(Family::Path(0).build().is_err());
        assert!(Family::CompleteBipartite(0, 2).build().is_err());
    }

    #[test]
    fn family_specs() {
        assert_eq!("path:5".parse::<Family>().unwrap(), Family::Path(5));
        assert_eq!(
            "kbip:3,4".parse::<Family>().unwrap(),
            Family::CompleteBipartite(3, 4)
        );
        assert!("kbip:3".parse::<Family>().is_err());
        assert!("wheel:5".parse::<Family>().is_err());
        assert!("path".parse::<Family>().is_err());
    }

    #[test]
    fn graph6_known_strings() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.order(), 5);
        // 'D'=5, '?'=0 bits 000000, '{'=60 bits 111100: edges 0-4,1-4,2-4,3-4
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(emit_graph6(&g), "D?{");
        assert_eq!(emit_graph6(&Family::Star(5).build().unwrap()), "D?{");
        // petgraph's reference example
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
    }

    #[test]
    fn graph6_errors() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("D?").is_err());
        assert!(parse_graph6("D?{?").is_err());
        // 'B' = 2 vertices, one bit; '_' = 100000 is fine, 'a' sets padding
        assert!(parse_graph6("B_").is_ok());
        assert!(parse_graph6("Ba").is_err());
        assert!(parse_graph6("D? {").is_err());
        assert!(parse_graph6("~").is_err());
    }

    #[test]
    fn graph6_large_header() {
        let g = Family::Path(70).build().unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn bipartite_and_regular() {
        assert!(Family::Cycle(6).build().unwrap().is_bipartite());
        assert!(!Family::Cycle(5).build().unwrap().is_bipartite());
        assert!(Family::Path(4).build().unwrap().is_tree());
        assert!(!Family::Cycle(4).build().unwrap().is_tree());
        assert_eq!(Family::Star(4).build().unwrap().regular_degree(), None);
    }

    #[test]
    fn reads_lines_with_comments() {
        let text = "# header\n>>graph6<<D?{\n\nB_\n";
        let got: Vec<_> = read_graph6_lines(text.as_bytes()).collect();
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].0, 2);
        assert_eq!(got[1].1.as_ref().unwrap().size(), 1);
    }
}
