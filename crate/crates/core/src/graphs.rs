//! Multigraphs, named constructions, seeded regular-graph sampling, and
//! structural censuses (components, girth, short-cycle counts).
//!
//! A single [`Graph`] type carries loops and parallel edges because
//! deletion-contraction creates them; operations that need simplicity check
//! the `simple` flag and refuse otherwise.

use crate::error::{Error, Result};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

/// Undirected multigraph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    simple: bool,
}

impl Graph {
    /// Builds a graph, validating endpoint indices and computing the
    /// `simple` flag (no loops, no parallel edges).
    pub fn new(n: usize, edges: Vec<(u32, u32)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "vertex count must be at least 1".into(),
            ));
        }
        let mut seen = HashSet::new();
        let mut simple = true;
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in &edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            let e = (u.min(v), u.max(v));
            if e.0 == e.1 || !seen.insert(e) {
                simple = false;
            }
            norm.push(e);
        }
        Ok(Graph {
            n,
            edges: norm,
            simple,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.n];
        for &(u, v) in &self.edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1; // a loop contributes 2
        }
        deg
    }

    /// Common degree when the graph is regular.
    pub fn regularity(&self) -> Option<u32> {
        let deg = self.degrees();
        let d = *deg.first()?;
        deg.iter().all(|&x| x == d).then_some(d)
    }

    /// Neighbor bitmasks; only valid for `n <= 64` and simple graphs.
    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        if self.n > 64 {
            return Err(Error::CapExceeded(format!(
                "adjacency masks need n <= 64, got {}",
                self.n
            )));
        }
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            adj[u as usize] |= 1 << v;
            adj[v as usize] |= 1 << u;
        }
        Ok(adj)
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u as usize].push(v);
            if u != v {
                adj[v as usize].push(u);
            }
        }
        adj
    }

    /// Induced subgraph on the vertices *not* in `removed` (a bitmask).
    /// Vertices are relabeled to `0..k` in increasing original order.
    pub fn without_vertices(&self, removed: u64) -> Result<Graph> {
        if self.n > 64 {
            return Err(Error::CapExceeded("vertex masks need n <= 64".into()));
        }
        let mut map = vec![u32::MAX; self.n];
        let mut k = 0u32;
        for v in 0..self.n {
            if removed >> v & 1 == 0 {
                map[v] = k;
                k += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| map[u as usize] != u32::MAX && map[v as usize] != u32::MAX)
            .map(|&(u, v)| (map[u as usize], map[v as usize]))
            .collect();
        if k == 0 {
            return Err(Error::InvalidParameter(
                "cannot remove every vertex".into(),
            ));
        }
        Graph::new(k as usize, edges)
    }
}

/// Subset of edge indices as a bitmask. Capacity is 64 edges; the exact
/// enumeration caps keep practical sizes far below that.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeSubset(pub u64);

impl EdgeSubset {
    pub const EMPTY: EdgeSubset = EdgeSubset(0);

    pub fn full(m: usize) -> Self {
        assert!(m <= 64);
        if m == 64 {
            EdgeSubset(u64::MAX)
        } else {
            EdgeSubset((1u64 << m) - 1)
        }
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
}

/// Union-find over `0..n` with path halving; `reset` allows reuse inside
/// subset enumeration loops without reallocating.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<u32>,
    components: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            components: n,
        }
    }

    pub fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i as u32;
        }
        self.components = self.parent.len();
    }

    pub fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            self.parent[x as usize] = self.parent[self.parent[x as usize] as usize];
            x = self.parent[x as usize];
        }
        x
    }

    pub fn union(&mut self, a: u32, b: u32) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra.max(rb) as usize] = ra.min(rb);
            self.components -= 1;
        }
    }

    pub fn components(&self) -> usize {
        self.components
    }
}

/// Number of connected components of `(V, A)`, isolated vertices included.
pub fn components(g: &Graph, a: EdgeSubset) -> usize {
    let mut uf = UnionFind::new(g.n());
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if a.contains(i) {
            uf.union(u, v);
        }
    }
    uf.components()
}

/// Parses an edge-list document: first line `n m`, then `m` lines `u v`
/// with 0-based vertex indices. Blank lines and `#` comments are skipped.
pub fn load_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty document".into()))?;
    let mut it = header.split_whitespace();
    let n: i64 = it
        .next()
        .ok_or_else(|| Error::Parse("missing vertex count".into()))?
        .parse()
        .map_err(|_| Error::Parse(format!("bad vertex count in '{header}'")))?;
    let m: usize = it
        .next()
        .ok_or_else(|| Error::Parse("missing edge count".into()))?
        .parse()
        .map_err(|_| Error::Parse(format!("bad edge count in '{header}'")))?;
    if n <= 0 {
        return Err(Error::Parse(format!("vertex count must be positive, got {n}")));
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {m} edge lines")))?;
        let mut it = line.split_whitespace();
        let u: u32 = it
            .next()
            .ok_or_else(|| Error::Parse(format!("malformed edge line '{line}'")))?
            .parse()
            .map_err(|_| Error::Parse(format!("malformed edge line '{line}'")))?;
        let v: u32 = it
            .next()
            .ok_or_else(|| Error::Parse(format!("malformed edge line '{line}'")))?
            .parse()
            .map_err(|_| Error::Parse(format!("malformed edge line '{line}'")))?;
        if it.next().is_some() {
            return Err(Error::Parse(format!("trailing tokens in '{line}'")));
        }
        edges.push((u, v));
    }
    if lines.next().is_some() {
        return Err(Error::Parse(format!("more than {m} edge lines")));
    }
    Graph::new(n as usize, edges)
}

/// Standard constructions addressed by name: `k4`, `k5`, `triangle`,
/// `complete:n`, `cycle:n`, `petersen`, `octahedron`,
/// `circulant:n:s1,s2,...`.
pub fn named_graph(name: &str) -> Result<Graph> {
    let name = name.trim().to_ascii_lowercase();
    match name.as_str() {
        "k4" => complete(4),
        "k5" => complete(5),
        "triangle" => complete(3),
        "petersen" => petersen(),
        "octahedron" => octahedron(),
        other => {
            if let Some(rest) = other.strip_prefix("complete:") {
                let n = parse_usize(rest, other)?;
                return complete(n);
            }
            if let Some(rest) = other.strip_prefix("cycle:") {
                let n = parse_usize(rest, other)?;
                return cycle(n);
            }
            if let Some(rest) = other.strip_prefix("circulant:") {
                return circulant(rest, other);
            }
            Err(Error::UnknownGraph(other.to_string()))
        }
    }
}

fn parse_usize(s: &str, ctx: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::InvalidParameter(format!("bad number in graph name '{ctx}'")))
}

fn complete(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "complete graph needs n >= 2, got {n}"
        )));
    }
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges)
}

fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let edges = (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect();
    Graph::new(n, edges)
}

fn petersen() -> Result<Graph> {
    // outer 5-cycle 0..5, inner pentagram 5..10, spokes i -- i+5
    let mut edges = Vec::new();
    for i in 0..5u32 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::new(10, edges)
}

fn octahedron() -> Result<Graph> {
    // complete tripartite K_{2,2,2}: all pairs except the three antipodal ones
    let mut edges = Vec::new();
    for u in 0..6u32 {
        for v in u + 1..6 {
            if !(u % 2 == 0 && v == u + 1) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(6, edges)
}

fn circulant(params: &str, ctx: &str) -> Result<Graph> {
    let (n_str, strides) = params
        .split_once(':')
        .ok_or_else(|| Error::InvalidParameter(format!("circulant needs 'n:s1,s2' in '{ctx}'")))?;
    let n = parse_usize(n_str, ctx)?;
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "circulant needs n >= 3, got {n}"
        )));
    }
    let mut edges = HashSet::new();
    for s_str in strides.split(',') {
        let s = parse_usize(s_str.trim(), ctx)?;
        if s == 0 || s >= n {
            return Err(Error::InvalidParameter(format!(
                "circulant stride {s} out of range for n={n}"
            )));
        }
        for i in 0..n {
            let j = (i + s) % n;
            let e = (i.min(j) as u32, i.max(j) as u32);
            edges.insert(e);
        }
    }
    let mut edges: Vec<_> = edges.into_iter().collect();
    edges.sort_unstable();
    Graph::new(n, edges)
}

const REJECTION_BUDGET: u32 = 10_000;

/// Samples a simple d-regular graph by repeated pairing of vertex stubs,
/// rejecting and resampling whenever the pairing produces a loop or a
/// parallel edge. Deterministic for a fixed seed.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if n * d % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "n*d must be even, got n={n}, d={d}"
        )));
    }
    if d >= n {
        return Err(Error::InvalidParameter(format!(
            "degree must satisfy d < n, got n={n}, d={d}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<u32> = (0..(n * d) as u32).map(|s| s / d as u32).collect();
    for _ in 0..REJECTION_BUDGET {
        stubs.shuffle(&mut rng);
        let mut ok = true;
        let mut seen = HashSet::with_capacity(n * d / 2);
        let mut edges = Vec::with_capacity(n * d / 2);
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !seen.insert((u, v)) {
                ok = false;
                break;
            }
            edges.push((u, v));
        }
        if ok {
            edges.sort_unstable();
            return Graph::new(n, edges);
        }
    }
    Err(Error::RejectionBudget {
        attempts: REJECTION_BUDGET,
    })
}

/// Girth of a simple graph (`None` for forests), found by breadth-first
/// search from every root; the shortest cycle through a root vertex is
/// detected at that root, so the minimum over roots is exact.
pub fn girth(g: &Graph) -> Result<Option<u32>> {
    if !g.is_simple() {
        return Err(Error::NotSimple("girth is defined over simple graphs".into()));
    }
    let adj = g.adjacency_lists();
    let n = g.n();
    let mut best = u32::MAX;
    let mut dist = vec![u32::MAX; n];
    let mut parent = vec![u32::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for root in 0..n as u32 {
        dist.iter_mut().for_each(|d| *d = u32::MAX);
        parent.iter_mut().for_each(|p| *p = u32::MAX);
        dist[root as usize] = 0;
        queue.clear();
        queue.push(root);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            if 2 * dist[u as usize] >= best {
                break;
            }
            for &v in &adj[u as usize] {
                if dist[v as usize] == u32::MAX {
                    dist[v as usize] = dist[u as usize] + 1;
                    parent[v as usize] = u;
                    queue.push(v);
                } else if parent[u as usize] != v {
                    best = best.min(dist[u as usize] + dist[v as usize] + 1);
                }
            }
        }
    }
    Ok((best != u32::MAX).then_some(best))
}

/// Counts cycles of length at most `maxlen`, each exactly once: the DFS
/// anchors a cycle at its smallest vertex and normalizes direction by
/// requiring the second vertex to be smaller than the last.
pub fn count_cycles_up_to(g: &Graph, maxlen: usize) -> Result<u64> {
    if !g.is_simple() {
        return Err(Error::NotSimple(
            "cycle census is defined over simple graphs".into(),
        ));
    }
    let adj = g.adjacency_lists();
    let n = g.n();
    let mut count = 0u64;
    let mut visited = vec![false; n];
    let mut path: Vec<u32> = Vec::with_capacity(maxlen);

    fn dfs(
        v: u32,
        start: u32,
        maxlen: usize,
        adj: &[Vec<u32>],
        visited: &mut [bool],
        path: &mut Vec<u32>,
        count: &mut u64,
    ) {
        for &u in &adj[v as usize] {
            if u == start && path.len() >= 3 {
                if path[1] < v {
                    *count += 1;
                }
            } else if u > start && !visited[u as usize] && path.len() < maxlen {
                visited[u as usize] = true;
                path.push(u);
                dfs(u, start, maxlen, adj, visited, path, count);
                path.pop();
                visited[u as usize] = false;
            }
        }
    }

    if maxlen < 3 {
        return Ok(0);
    }
    for start in 0..n as u32 {
        visited[start as usize] = true;
        path.clear();
        path.push(start);
        dfs(start, start, maxlen, &adj, &mut visited, &mut path, &mut count);
        visited[start as usize] = false;
    }
    Ok(count)
}

/// Girth together with `L`, the number of cycles of length at most
/// `gcap - 1`. `gcap` must be at least 3.
pub fn girth_and_short_cycles(g: &Graph, gcap: usize) -> Result<(Option<u32>, u64)> {
    if gcap < 3 {
        return Err(Error::InvalidParameter(format!(
            "gcap must be at least 3, got {gcap}"
        )));
    }
    let girth = girth(g)?;
    let l = count_cycles_up_to(g, gcap - 1)?;
    Ok((girth, l))
}
