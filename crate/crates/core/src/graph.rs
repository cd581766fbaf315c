//! Simple undirected graphs, their text encodings, standard families and the
//! structural operations (complement, disjoint union, join, corona, edge corona).
//!
//! Vertices are `0..n`. Edges are stored as sorted pairs `(u, v)` with `u < v`,
//! in lexicographic order, so two graphs compare equal iff they have the same
//! labeled edge set.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Largest order supported by the short graph6 form.
pub const GRAPH6_MAX_ORDER: usize = 62;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Validates and canonicalizes an edge list.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange { u: a, v: b, n });
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Graph {
            n,
            edges: seen.into_iter().collect(),
        })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
        }
    }

    // Callers guarantee the edges are valid and distinct.
    fn from_valid_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let set: BTreeSet<_> = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        Graph {
            n,
            edges: set.into_iter().collect(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let deg = self.degrees();
        match deg.first() {
            None => Some(0),
            Some(&r) => deg.iter().all(|&d| d == r).then_some(r),
        }
    }

    /// Incidence lists: for each vertex the indices of the edges touching it.
    pub fn incident_edges(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (idx, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push(idx);
            inc[v].push(idx);
        }
        inc
    }

    /// The signless Laplacian `Q = D + A`.
    pub fn signless_laplacian(&self) -> IntMatrix {
        let mut q = IntMatrix::zeros(self.n);
        for (i, d) in self.degrees().into_iter().enumerate() {
            q.set(i, i, BigInt::from(d));
        }
        for &(u, v) in &self.edges {
            q.set(u, v, BigInt::from(1));
            q.set(v, u, BigInt::from(1));
        }
        q
    }

    pub fn complement(&self) -> Graph {
        let n = self.n;
        let edges = (0..n)
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v));
        Graph::from_valid_edges(n, edges)
    }

    /// `G1 ⊕ G2`: vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        Graph::from_valid_edges(self.n + other.n, edges)
    }

    /// `G1 ∨ G2`: disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Graph {
        let off = self.n;
        let cross = (0..self.n).flat_map(|u| (0..other.n).map(move |v| (u, v + off)));
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + off, v + off)))
            .chain(cross);
        Graph::from_valid_edges(self.n + other.n, edges)
    }

    /// `G1 ∘ G2`: copy `i` of `other` occupies vertices
    /// `n1 + i*n2 .. n1 + (i+1)*n2` and is fully joined to vertex `i`.
    pub fn corona(&self, other: &Graph) -> Result<Graph> {
        if self.n == 0 || other.n == 0 {
            return Err(Error::Precondition(
                "both corona factors to have at least one vertex".into(),
            ));
        }
        let (n1, n2) = (self.n, other.n);
        let mut edges = self.edges.clone();
        for i in 0..n1 {
            let base = n1 + i * n2;
            edges.extend(other.edges.iter().map(|&(u, v)| (u + base, v + base)));
            edges.extend((0..n2).map(|w| (i, base + w)));
        }
        Ok(Graph::from_valid_edges(n1 * (1 + n2), edges))
    }

    /// `G1 ⋄ G2`: copy `j` of `other` belongs to the `j`-th edge of `self`
    /// (sorted order) and is fully joined to both of its endpoints.
    pub fn edge_corona(&self, other: &Graph) -> Result<Graph> {
        if self.edges.is_empty() {
            return Err(Error::Precondition(
                "the first edge-corona factor to have an edge".into(),
            ));
        }
        if other.n == 0 {
            return Err(Error::Precondition(
                "the second edge-corona factor to have a vertex".into(),
            ));
        }
        let (n1, n2, m1) = (self.n, other.n, self.edges.len());
        let mut edges = self.edges.clone();
        for (j, &(a, b)) in self.edges.iter().enumerate() {
            let base = n1 + j * n2;
            edges.extend(other.edges.iter().map(|&(u, v)| (u + base, v + base)));
            for w in 0..n2 {
                edges.push((a, base + w));
                edges.push((b, base + w));
            }
        }
        Ok(Graph::from_valid_edges(n1 + m1 * n2, edges))
    }

    /// Parses a short-form graph6 line (`n <= 62`).
    pub fn from_graph6(text: &str) -> Result<Graph> {
        let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
        let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
        let (&head, body) = bytes
            .split_first()
            .ok_or_else(|| Error::Graph6("empty input".into()))?;
        if head == b'~' {
            return Err(Error::Graph6("long form (n > 62) is not supported".into()));
        }
        if !(63..=126).contains(&head) {
            return Err(Error::Graph6(format!("bad header byte {head:#04x}")));
        }
        let n = (head - 63) as usize;
        let nbits = n * n.saturating_sub(1) / 2;
        let nchars = nbits.div_ceil(6);
        if body.len() != nchars {
            return Err(Error::Graph6(format!(
                "expected {nchars} data bytes for n = {n}, found {}",
                body.len()
            )));
        }
        let mut bits = Vec::with_capacity(nchars * 6);
        for &c in body {
            if !(63..=126).contains(&c) {
                return Err(Error::Graph6(format!("bad data byte {c:#04x}")));
            }
            let v = c - 63;
            bits.extend((0..6).rev().map(|s| (v >> s) & 1 == 1));
        }
        if bits[nbits..].iter().any(|&b| b) {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
        let mut edges = Vec::new();
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if bits[k] {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        Ok(Graph::from_valid_edges(n, edges))
    }

    /// Short-form graph6 encoding; `None` when `n > 62`.
    pub fn to_graph6(&self) -> Option<String> {
        if self.n > GRAPH6_MAX_ORDER {
            return None;
        }
        let n = self.n;
        let mut bits = Vec::with_capacity(n * n / 2);
        for v in 1..n {
            for u in 0..v {
                bits.push(self.has_edge(u, v));
            }
        }
        let mut out = String::with_capacity(1 + bits.len().div_ceil(6));
        out.push((n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let mut v = 0u8;
            for s in 0..6 {
                v <<= 1;
                if chunk.get(s).copied().unwrap_or(false) {
                    v |= 1;
                }
            }
            out.push((v + 63) as char);
        }
        Some(out)
    }

    /// Parses the edge-list text format: first non-blank line `n`, then one
    /// `u v` pair per line. Lines starting with `#` are ignored.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .enumerate()
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (_, head) = lines
            .next()
            .ok_or_else(|| Error::EdgeList("missing vertex count".into()))?;
        let n: usize = head
            .parse()
            .map_err(|_| Error::EdgeList(format!("bad vertex count {head:?}")))?;
        let mut edges = Vec::new();
        for (lineno, line) in lines {
            let mut it = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize> {
                tok.and_then(|t| t.parse().ok()).ok_or_else(|| {
                    Error::EdgeList(format!("line {}: expected `u v`, got {line:?}", lineno + 1))
                })
            };
            let u = parse(it.next())?;
            let v = parse(it.next())?;
            if it.next().is_some() {
                return Err(Error::EdgeList(format!(
                    "line {}: trailing tokens in {line:?}",
                    lineno + 1
                )));
            }
            edges.push((u, v));
        }
        Graph::new(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_graph6() {
            Some(g6) => write!(f, "{g6}"),
            None => write!(f, "graph(n={}, m={})", self.n, self.edges.len()),
        }
    }
}

/// Standard graph families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Empty(usize),
    Path(usize),
    Cycle(usize),
    /// `K_{1,n-1}` with centre `0`.
    Star(usize),
    CompleteMultipartite(Vec<usize>),
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        let bad = |msg: &str| Err(Error::InvalidGenerator(msg.to_string()));
        match *self {
            Family::Complete(n) | Family::Empty(n) | Family::Path(n) | Family::Star(n)
                if n == 0 =>
            {
                bad("n must be at least 1")
            }
            Family::Complete(n) => Ok(Graph::empty(n).complement()),
            Family::Empty(n) => Ok(Graph::empty(n)),
            Family::Path(n) => Ok(Graph::from_valid_edges(n, (1..n).map(|v| (v - 1, v)))),
            Family::Cycle(n) if n < 3 => bad("a cycle needs at least 3 vertices"),
            Family::Cycle(n) => Ok(Graph::from_valid_edges(
                n,
                (1..n)
                    .map(|v| (v - 1, v))
                    .chain(std::iter::once((0, n - 1))),
            )),
            Family::Star(n) => Ok(Graph::from_valid_edges(n, (1..n).map(|v| (0, v)))),
            Family::CompleteMultipartite(ref parts) => {
                if parts.is_empty() || parts.contains(&0) {
                    return bad("multipartite parts must be nonempty and at least 1");
                }
                Ok(parts
                    .iter()
                    .map(|&p| Graph::empty(p))
                    .reduce(|acc, g| acc.join(&g))
                    .expect("nonempty"))
            }
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `complete:4`, `empty:3`, `path:5`, `cycle:6`, `star:4`, `multipartite:2,3,1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidGenerator(format!("cannot parse generator {s:?}"));
        let (name, arg) = s.split_once(':').ok_or_else(bad)?;
        let num = || arg.trim().parse::<usize>().map_err(|_| bad());
        match name.trim().to_ascii_lowercase().as_str() {
            "complete" | "k" => Ok(Family::Complete(num()?)),
            "empty" => Ok(Family::Empty(num()?)),
            "path" | "p" => Ok(Family::Path(num()?)),
            "cycle" | "c" => Ok(Family::Cycle(num()?)),
            "star" => Ok(Family::Star(num()?)),
            "multipartite" | "complete_multipartite" | "complete-multipartite" => {
                let parts = arg
                    .split(',')
                    .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Family::CompleteMultipartite(parts))
            }
            _ => Err(bad()),
        }
    }
}

pub fn complete(n: usize) -> Graph {
    Graph::empty(n).complement()
}

pub fn path(n: usize) -> Graph {
    Graph::from_valid_edges(n, (1..n).map(|v| (v - 1, v)))
}

/// Panics for `n < 3`; use [`Family::Cycle`] for checked construction.
pub fn cycle(n: usize) -> Graph {
    Family::Cycle(n).build().expect("cycle needs n >= 3")
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    Family::CompleteMultipartite(parts.to_vec()).build()
}
