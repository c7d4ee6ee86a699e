//! Typed `B_3` simplicial complexes: validation, links, girth, bipartiteness,
//! flagness, typed edge lengths and embedded-cycle search.
//!
//! Vertices carry a type in `{s^1, s^2, s^3}` and every triangle must have one
//! vertex of each type. The edge set is derived from the triangle list. The
//! text file format is one record per line: `v <id> <type>` or
//! `t <id> <id> <id>`, order-insensitive, `#` starts a comment.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::sphere::SimplexShape;

/// Vertex type: the maximal parabolic `hat(s_i)` the vertex corresponds to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VertexType {
    S1,
    S2,
    S3,
}

impl VertexType {
    pub fn from_index(i: usize) -> VertexType {
        match i {
            1 => VertexType::S1,
            2 => VertexType::S2,
            3 => VertexType::S3,
            _ => panic!("vertex type index {i} out of range"),
        }
    }

    pub fn index(&self) -> usize {
        match self {
            VertexType::S1 => 1,
            VertexType::S2 => 2,
            VertexType::S3 => 3,
        }
    }

    pub fn parse(token: &str) -> Option<VertexType> {
        match token {
            "s1" => Some(VertexType::S1),
            "s2" => Some(VertexType::S2),
            "s3" => Some(VertexType::S3),
            _ => None,
        }
    }
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.index())
    }
}

/// Edge type from the endpoint types: the edge `s_i` is opposite the vertex
/// `hat(s_i)` in the simplex, so an edge joins the two other types.
/// Returns `None` for equal endpoint types (no such edge in a valid complex).
pub fn edge_type(a: VertexType, b: VertexType) -> Option<usize> {
    if a == b {
        return None;
    }
    Some(6 - a.index() - b.index())
}

#[derive(Debug, Error, PartialEq)]
pub enum ComplexError {
    #[error("unknown vertex id {0:?}")]
    UnknownVertex(String),
    #[error("duplicate vertex id {0:?}")]
    DuplicateVertex(String),
    #[error("triangle repeats a vertex: {0:?}")]
    DegenerateTriangle(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A validation defect, with witnesses. Violations are data, not errors.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Violation {
    /// Vertex not contained in any triangle (purity failure).
    IsolatedVertex { vertex: String },
    /// Same triangle listed more than once.
    DuplicateTriangle { vertices: [String; 3] },
    /// Triangle without exactly one vertex of each type.
    TypeInconsistent { vertices: [String; 3] },
}

/// Pure 2-dimensional simplicial complex with typed vertices.
#[derive(Debug, Clone, Default)]
pub struct TypedComplex {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    types: Vec<VertexType>,
    triangles: Vec<[usize; 3]>,
    adj: Vec<BTreeSet<usize>>,
}

impl TypedComplex {
    pub fn new() -> TypedComplex {
        TypedComplex::default()
    }

    pub fn add_vertex(&mut self, id: &str, vtype: VertexType) {
        assert!(
            !self.index.contains_key(id),
            "duplicate vertex id {id:?}"
        );
        self.index.insert(id.to_string(), self.ids.len());
        self.ids.push(id.to_string());
        self.types.push(vtype);
        self.adj.push(BTreeSet::new());
    }

    pub fn add_triangle(&mut self, a: &str, b: &str, c: &str) {
        self.try_add_triangle(a, b, c).unwrap();
    }

    pub fn try_add_triangle(&mut self, a: &str, b: &str, c: &str) -> Result<(), ComplexError> {
        let ia = self.vertex_index(a)?;
        let ib = self.vertex_index(b)?;
        let ic = self.vertex_index(c)?;
        if ia == ib || ib == ic || ia == ic {
            return Err(ComplexError::DegenerateTriangle(format!("{a} {b} {c}")));
        }
        let mut tri = [ia, ib, ic];
        tri.sort_unstable();
        self.adj[tri[0]].insert(tri[1]);
        self.adj[tri[0]].insert(tri[2]);
        self.adj[tri[1]].insert(tri[0]);
        self.adj[tri[1]].insert(tri[2]);
        self.adj[tri[2]].insert(tri[0]);
        self.adj[tri[2]].insert(tri[1]);
        self.triangles.push(tri);
        Ok(())
    }

    fn vertex_index(&self, id: &str) -> Result<usize, ComplexError> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| ComplexError::UnknownVertex(id.to_string()))
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn triangle_count(&self) -> usize {
        let set: HashSet<&[usize; 3]> = self.triangles.iter().collect();
        set.len()
    }

    pub fn vertex_ids(&self) -> Vec<String> {
        self.ids.clone()
    }

    pub fn vertex_type(&self, id: &str) -> Option<VertexType> {
        self.index.get(id).map(|&i| self.types[i])
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        match (self.index.get(a), self.index.get(b)) {
            (Some(&ia), Some(&ib)) => self.adj[ia].contains(&ib),
            _ => false,
        }
    }

    pub fn has_triangle(&self, a: &str, b: &str, c: &str) -> bool {
        let (ia, ib, ic) = match (self.index.get(a), self.index.get(b), self.index.get(c)) {
            (Some(&x), Some(&y), Some(&z)) => (x, y, z),
            _ => return false,
        };
        let mut tri = [ia, ib, ic];
        tri.sort_unstable();
        self.triangles.contains(&tri)
    }

    pub fn neighbors(&self, id: &str) -> Vec<String> {
        let i = self.index[id];
        self.adj[i].iter().map(|&j| self.ids[j].clone()).collect()
    }

    pub fn triangles(&self) -> Vec<[String; 3]> {
        let mut out: Vec<[String; 3]> = self
            .triangles
            .iter()
            .map(|t| {
                [
                    self.ids[t[0]].clone(),
                    self.ids[t[1]].clone(),
                    self.ids[t[2]].clone(),
                ]
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// All validation violations: purity, simpliciality, type-consistency.
    pub fn validate(&self) -> Vec<Violation> {
        let mut violations = Vec::new();
        let mut in_triangle = vec![false; self.ids.len()];
        let mut seen: HashMap<[usize; 3], usize> = HashMap::new();
        for tri in &self.triangles {
            *seen.entry(*tri).or_insert(0) += 1;
            for &v in tri {
                in_triangle[v] = true;
            }
        }
        for (v, ok) in in_triangle.iter().enumerate() {
            if !ok {
                violations.push(Violation::IsolatedVertex {
                    vertex: self.ids[v].clone(),
                });
            }
        }
        let mut dups: Vec<[usize; 3]> = seen
            .iter()
            .filter(|(_, &count)| count > 1)
            .map(|(&t, _)| t)
            .collect();
        dups.sort();
        for tri in dups {
            violations.push(Violation::DuplicateTriangle {
                vertices: self.triangle_ids(&tri),
            });
        }
        let mut typed: Vec<[usize; 3]> = seen.keys().copied().collect();
        typed.sort();
        for tri in typed {
            let mut mask = [false; 3];
            for &v in &tri {
                mask[self.types[v].index() - 1] = true;
            }
            if mask != [true; 3] {
                violations.push(Violation::TypeInconsistent {
                    vertices: self.triangle_ids(&tri),
                });
            }
        }
        violations
    }

    fn triangle_ids(&self, tri: &[usize; 3]) -> [String; 3] {
        [
            self.ids[tri[0]].clone(),
            self.ids[tri[1]].clone(),
            self.ids[tri[2]].clone(),
        ]
    }

    /// The link of `id`: graph on its neighbors, with an edge `{u, w}` exactly
    /// when `{id, u, w}` is a triangle.
    pub fn link(&self, id: &str) -> Result<LinkGraph, ComplexError> {
        let v = self.vertex_index(id)?;
        let nodes: Vec<usize> = self.adj[v].iter().copied().collect();
        let local: HashMap<usize, usize> = nodes.iter().enumerate().map(|(k, &g)| (g, k)).collect();
        let mut graph = LinkGraph {
            node_ids: nodes.iter().map(|&g| self.ids[g].clone()).collect(),
            node_types: nodes.iter().map(|&g| self.types[g]).collect(),
            adj: vec![BTreeSet::new(); nodes.len()],
        };
        for tri in &self.triangles {
            if !tri.contains(&v) {
                continue;
            }
            let others: Vec<usize> = tri.iter().copied().filter(|&u| u != v).collect();
            let (a, b) = (local[&others[0]], local[&others[1]]);
            graph.adj[a].insert(b);
            graph.adj[b].insert(a);
        }
        Ok(graph)
    }

    /// True iff every pairwise-adjacent vertex triple spans a triangle;
    /// otherwise reports one empty 3-clique.
    pub fn is_flag(&self) -> (bool, Option<[String; 3]>) {
        let tri_set: HashSet<[usize; 3]> = self.triangles.iter().copied().collect();
        for a in 0..self.ids.len() {
            for &b in self.adj[a].iter().filter(|&&b| b > a) {
                for &c in self.adj[b].iter().filter(|&&c| c > b) {
                    if self.adj[a].contains(&c) {
                        let mut tri = [a, b, c];
                        tri.sort_unstable();
                        if !tri_set.contains(&tri) {
                            return (false, Some(self.triangle_ids(&tri)));
                        }
                    }
                }
            }
        }
        (true, None)
    }

    /// Metric length of an edge path, using `alpha`/`beta`/`delta` by edge type.
    pub fn path_metric_length(&self, path: &EdgePath, shape: &SimplexShape) -> f64 {
        let mut total = 0.0;
        for (a, b) in path.edges() {
            let ta = self.vertex_type(&a).expect("path vertex in complex");
            let tb = self.vertex_type(&b).expect("path vertex in complex");
            let et = edge_type(ta, tb).expect("edge endpoints of equal type");
            total += shape.edge_len(et);
        }
        total
    }

    /// All embedded closed edge paths through the cyclic `pattern` of vertex
    /// types, deduplicated modulo rotation and reflection, capped at `limit`.
    /// With `induced`, occurrences with chords are dropped.
    pub fn embedded_cycles(
        &self,
        pattern: &[VertexType],
        limit: usize,
        induced: bool,
    ) -> Result<Vec<EdgePath>, PatternError> {
        self.embedded_cycles_within(pattern, limit, induced, None)
    }

    /// Like [`embedded_cycles`](Self::embedded_cycles), but the cycle may only
    /// visit vertices in `allowed` (edges of the full complex still count).
    pub fn embedded_cycles_within(
        &self,
        pattern: &[VertexType],
        limit: usize,
        induced: bool,
        allowed: Option<&BTreeSet<String>>,
    ) -> Result<Vec<EdgePath>, PatternError> {
        check_pattern(pattern)?;
        let k = pattern.len();
        let mut found: BTreeSet<Vec<String>> = BTreeSet::new();
        let allowed_idx: Option<Vec<bool>> = allowed.map(|set| {
            self.ids
                .iter()
                .map(|id| set.contains(id))
                .collect::<Vec<bool>>()
        });
        let ok = |v: usize| allowed_idx.as_ref().is_none_or(|mask| mask[v]);

        let mut stack: Vec<usize> = Vec::with_capacity(k);
        let mut on_path = vec![false; self.ids.len()];
        for start in 0..self.ids.len() {
            if self.types[start] != pattern[0] || !ok(start) {
                continue;
            }
            stack.push(start);
            on_path[start] = true;
            self.cycle_dfs(pattern, &mut stack, &mut on_path, &ok, &mut found, limit);
            on_path[start] = false;
            stack.pop();
            if found.len() >= limit {
                break;
            }
        }

        let mut out: Vec<EdgePath> = found
            .into_iter()
            .map(|vertices| EdgePath {
                vertices,
                closed: true,
            })
            .collect();
        if induced {
            out.retain(|path| !self.cycle_has_chord(path));
        }
        Ok(out)
    }

    fn cycle_dfs(
        &self,
        pattern: &[VertexType],
        stack: &mut Vec<usize>,
        on_path: &mut [bool],
        ok: &dyn Fn(usize) -> bool,
        found: &mut BTreeSet<Vec<String>>,
        limit: usize,
    ) {
        if found.len() >= limit {
            return;
        }
        let depth = stack.len();
        let current = *stack.last().unwrap();
        if depth == pattern.len() {
            if self.adj[current].contains(&stack[0]) {
                let ids: Vec<String> = stack.iter().map(|&v| self.ids[v].clone()).collect();
                found.insert(canonical_cycle(&ids));
            }
            return;
        }
        let want = pattern[depth];
        for &next in &self.adj[current] {
            if on_path[next] || self.types[next] != want || !ok(next) {
                continue;
            }
            stack.push(next);
            on_path[next] = true;
            self.cycle_dfs(pattern, stack, on_path, ok, found, limit);
            on_path[next] = false;
            stack.pop();
        }
    }

    fn cycle_has_chord(&self, path: &EdgePath) -> bool {
        let v: Vec<usize> = path.vertices.iter().map(|id| self.index[id]).collect();
        let k = v.len();
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if !consecutive && self.adj[v[i]].contains(&v[j]) {
                    return true;
                }
            }
        }
        false
    }

    /// Parses the shared text format.
    pub fn parse(text: &str) -> Result<TypedComplex, ComplexError> {
        let mut vertices: Vec<(usize, String, VertexType)> = Vec::new();
        let mut triangles: Vec<(usize, [String; 3])> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                ["v", id, ty] => {
                    let vtype = VertexType::parse(ty).ok_or_else(|| ComplexError::Parse {
                        line: lineno + 1,
                        msg: format!("unknown vertex type {ty:?}"),
                    })?;
                    vertices.push((lineno + 1, id.to_string(), vtype));
                }
                ["t", a, b, c] => {
                    triangles.push((lineno + 1, [a.to_string(), b.to_string(), c.to_string()]));
                }
                _ => {
                    return Err(ComplexError::Parse {
                        line: lineno + 1,
                        msg: format!("expected `v <id> <type>` or `t <id> <id> <id>`, got {line:?}"),
                    });
                }
            }
        }
        let mut complex = TypedComplex::new();
        for (line, id, vtype) in vertices {
            if complex.index.contains_key(&id) {
                return Err(ComplexError::Parse {
                    line,
                    msg: format!("duplicate vertex id {id:?}"),
                });
            }
            complex.add_vertex(&id, vtype);
        }
        for (line, [a, b, c]) in triangles {
            complex
                .try_add_triangle(&a, &b, &c)
                .map_err(|e| ComplexError::Parse {
                    line,
                    msg: e.to_string(),
                })?;
        }
        Ok(complex)
    }

    /// Serializes to the shared text format, deterministically.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        for (i, id) in self.ids.iter().enumerate() {
            out.push_str(&format!("v {} {}\n", id, self.types[i]));
        }
        for tri in self.triangles() {
            out.push_str(&format!("t {} {} {}\n", tri[0], tri[1], tri[2]));
        }
        out
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum PatternError {
    #[error("pattern must have length >= 3")]
    TooShort,
    #[error("pattern has equal consecutive types at positions {0} and {1}")]
    RepeatedType(usize, usize),
}

fn check_pattern(pattern: &[VertexType]) -> Result<(), PatternError> {
    if pattern.len() < 3 {
        return Err(PatternError::TooShort);
    }
    for i in 0..pattern.len() {
        let j = (i + 1) % pattern.len();
        if pattern[i] == pattern[j] {
            return Err(PatternError::RepeatedType(i, j));
        }
    }
    Ok(())
}

/// Canonical representative of a cyclic vertex sequence: lexicographically
/// least among all rotations of both orientations.
fn canonical_cycle(ids: &[String]) -> Vec<String> {
    let k = ids.len();
    let mut best: Option<Vec<String>> = None;
    for flip in [false, true] {
        let seq: Vec<String> = if flip {
            ids.iter().rev().cloned().collect()
        } else {
            ids.to_vec()
        };
        for r in 0..k {
            let rotated: Vec<String> = (0..k).map(|i| seq[(i + r) % k].clone()).collect();
            if best.as_ref().is_none_or(|b| rotated < *b) {
                best = Some(rotated);
            }
        }
    }
    best.unwrap()
}

/// An edge path in a complex: a vertex id sequence, possibly closed. Closed
/// paths store each vertex once; the closing edge is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgePath {
    pub vertices: Vec<String>,
    pub closed: bool,
}

impl EdgePath {
    pub fn open(vertices: Vec<String>) -> EdgePath {
        EdgePath {
            vertices,
            closed: false,
        }
    }

    pub fn closed(vertices: Vec<String>) -> EdgePath {
        EdgePath {
            vertices,
            closed: true,
        }
    }

    /// Consecutive edges, including the closing edge for closed paths.
    pub fn edges(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for w in self.vertices.windows(2) {
            out.push((w[0].clone(), w[1].clone()));
        }
        if self.closed && self.vertices.len() > 2 {
            out.push((
                self.vertices.last().unwrap().clone(),
                self.vertices[0].clone(),
            ));
        }
        out
    }
}

/// Graph on the neighbors of a vertex (or any small typed graph).
#[derive(Debug, Clone)]
pub struct LinkGraph {
    pub node_ids: Vec<String>,
    pub node_types: Vec<VertexType>,
    pub adj: Vec<BTreeSet<usize>>,
}

/// Completeness report for a bipartite link.
#[derive(Debug, Clone, Serialize)]
pub struct BipartiteReport {
    pub complete: bool,
    /// Cross-type vertex pairs without an edge.
    pub missing_edges: Vec<(String, String)>,
    /// Edges between vertices of the same type (typing corruption upstream).
    pub same_type_edges: Vec<(String, String)>,
    pub side_s1: usize,
    pub side_s3: usize,
    /// Both sides have >= 2 vertices, i.e. an embedded 4-cycle exists.
    pub has_embedded_4_cycle: bool,
}

impl LinkGraph {
    pub fn node_count(&self) -> usize {
        self.node_ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.node_ids.is_empty()
    }

    pub fn is_connected(&self) -> bool {
        if self.node_ids.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.node_ids.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.node_ids.len()
    }

    /// Length of the shortest cycle; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.node_ids.len();
        let mut best: Option<usize> = None;
        for u in 0..n {
            for &v in self.adj[u].iter().filter(|&&v| v > u) {
                // Shortest u-v path avoiding the edge {u, v}.
                let mut dist = vec![usize::MAX; n];
                dist[u] = 0;
                let mut queue = std::collections::VecDeque::from([u]);
                while let Some(x) = queue.pop_front() {
                    for &y in &self.adj[x] {
                        if (x == u && y == v) || (x == v && y == u) {
                            continue;
                        }
                        if dist[y] == usize::MAX {
                            dist[y] = dist[x] + 1;
                            queue.push_back(y);
                        }
                    }
                }
                if dist[v] != usize::MAX {
                    let cycle = dist[v] + 1;
                    if best.is_none_or(|b| cycle < b) {
                        best = Some(cycle);
                    }
                }
            }
        }
        best
    }

    /// `Some(n)` iff the graph is a single cycle on all `n` nodes.
    pub fn single_cycle_length(&self) -> Option<usize> {
        let n = self.node_ids.len();
        if n < 3 || !self.is_connected() {
            return None;
        }
        if self.adj.iter().all(|s| s.len() == 2) {
            Some(n)
        } else {
            None
        }
    }

    /// Complete-bipartiteness along vertex types, for links of `s^2` vertices:
    /// sides are the `s^1`- and `s^3`-typed nodes. A node of type `s^2` in the
    /// link signals typing corruption and is reported via `same_type_edges`
    /// pairing it with itself.
    pub fn is_complete_bipartite(&self) -> BipartiteReport {
        let mut missing = Vec::new();
        let mut same = Vec::new();
        let s1: Vec<usize> = (0..self.node_count())
            .filter(|&i| self.node_types[i] == VertexType::S1)
            .collect();
        let s3: Vec<usize> = (0..self.node_count())
            .filter(|&i| self.node_types[i] == VertexType::S3)
            .collect();
        for i in 0..self.node_count() {
            if self.node_types[i] == VertexType::S2 {
                same.push((self.node_ids[i].clone(), self.node_ids[i].clone()));
            }
        }
        for &a in &s1 {
            for &b in &s3 {
                if !self.adj[a].contains(&b) {
                    missing.push((self.node_ids[a].clone(), self.node_ids[b].clone()));
                }
            }
        }
        for i in 0..self.node_count() {
            for &j in self.adj[i].iter().filter(|&&j| j > i) {
                if self.node_types[i] == self.node_types[j] {
                    same.push((self.node_ids[i].clone(), self.node_ids[j].clone()));
                }
            }
        }
        BipartiteReport {
            complete: missing.is_empty() && same.is_empty(),
            missing_edges: missing,
            same_type_edges: same,
            side_s1: s1.len(),
            side_s3: s3.len(),
            has_embedded_4_cycle: s1.len() >= 2 && s3.len() >= 2,
        }
    }
}

/// Sorted key for reporting: vertex triple as a `BTreeMap`-friendly string.
pub fn triple_key(ids: &[String; 3]) -> String {
    let mut v = ids.clone();
    v.sort();
    format!("{} {} {}", v[0], v[1], v[2])
}

#[allow(dead_code)]
fn _assert_send_sync(map: BTreeMap<String, String>) -> BTreeMap<String, String> {
    map
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::b3_constants;

    fn single_delta() -> TypedComplex {
        let mut c = TypedComplex::new();
        c.add_vertex("a", VertexType::S1);
        c.add_vertex("b", VertexType::S2);
        c.add_vertex("c", VertexType::S3);
        c.add_triangle("a", "b", "c");
        c
    }

    #[test]
    fn validate_reports_violations() {
        let mut c = single_delta();
        assert!(c.validate().is_empty());

        c.add_vertex("lonely", VertexType::S1);
        let v = c.validate();
        assert_eq!(
            v,
            vec![Violation::IsolatedVertex {
                vertex: "lonely".into()
            }]
        );

        // Triangle with two s1 vertices.
        let mut c = TypedComplex::new();
        c.add_vertex("a", VertexType::S1);
        c.add_vertex("b", VertexType::S1);
        c.add_vertex("c", VertexType::S3);
        c.add_triangle("a", "b", "c");
        assert!(matches!(
            c.validate().as_slice(),
            [Violation::TypeInconsistent { .. }]
        ));

        // Duplicate triangle.
        let mut c = single_delta();
        c.add_triangle("c", "a", "b");
        assert!(matches!(
            c.validate().as_slice(),
            [Violation::DuplicateTriangle { .. }]
        ));
    }

    #[test]
    fn link_and_girth() {
        let c = single_delta();
        let link = c.link("a").unwrap();
        assert_eq!(link.node_count(), 2);
        assert_eq!(link.edge_count(), 1);
        assert!(link.is_connected());
        assert_eq!(link.girth(), None); // tree

        assert!(matches!(c.link("zzz"), Err(ComplexError::UnknownVertex(_))));
    }

    #[test]
    fn girth_on_cycles() {
        // 8-cycle.
        let mut g = LinkGraph {
            node_ids: (0..8).map(|i| i.to_string()).collect(),
            node_types: vec![VertexType::S2; 8],
            adj: vec![BTreeSet::new(); 8],
        };
        for i in 0..8 {
            let j = (i + 1) % 8;
            g.adj[i].insert(j);
            g.adj[j].insert(i);
        }
        assert_eq!(g.girth(), Some(8));
        assert_eq!(g.single_cycle_length(), Some(8));

        // K_{2,2} has girth 4.
        let mut k22 = LinkGraph {
            node_ids: vec!["a".into(), "b".into(), "x".into(), "y".into()],
            node_types: vec![
                VertexType::S1,
                VertexType::S1,
                VertexType::S3,
                VertexType::S3,
            ],
            adj: vec![BTreeSet::new(); 4],
        };
        for a in 0..2 {
            for b in 2..4 {
                k22.adj[a].insert(b);
                k22.adj[b].insert(a);
            }
        }
        assert_eq!(k22.girth(), Some(4));
        let report = k22.is_complete_bipartite();
        assert!(report.complete);
        assert!(report.has_embedded_4_cycle);

        // K_{2,2} minus one edge.
        k22.adj[0].remove(&2);
        k22.adj[2].remove(&0);
        let report = k22.is_complete_bipartite();
        assert!(!report.complete);
        assert_eq!(report.missing_edges, vec![("a".into(), "x".into())]);

        // K_{1,1}: complete but no embedded 4-cycle.
        let mut k11 = LinkGraph {
            node_ids: vec!["a".into(), "x".into()],
            node_types: vec![VertexType::S1, VertexType::S3],
            adj: vec![BTreeSet::new(); 2],
        };
        k11.adj[0].insert(1);
        k11.adj[1].insert(0);
        let report = k11.is_complete_bipartite();
        assert!(report.complete);
        assert!(!report.has_embedded_4_cycle);
    }

    #[test]
    fn flag_detection() {
        let (ok, witness) = single_delta().is_flag();
        assert!(ok);
        assert!(witness.is_none());

        // A hollow triangle: three triangles arranged so that three outer
        // vertices are pairwise adjacent but span no 2-cell.
        let mut c = TypedComplex::new();
        c.add_vertex("x1", VertexType::S1);
        c.add_vertex("x2", VertexType::S2);
        c.add_vertex("x3", VertexType::S3);
        c.add_vertex("m12", VertexType::S3);
        c.add_vertex("m23", VertexType::S1);
        c.add_vertex("m13", VertexType::S2);
        c.add_triangle("x1", "x2", "m12");
        c.add_triangle("x2", "x3", "m23");
        c.add_triangle("x1", "x3", "m13");
        // x1-x2, x2-x3, x1-x3 all edges, but {x1,x2,x3} is not a triangle.
        let (ok, witness) = c.is_flag();
        assert!(!ok);
        let w = witness.unwrap();
        let mut w = w.to_vec();
        w.sort();
        assert_eq!(w, vec!["x1", "x2", "x3"]);
    }

    #[test]
    fn embedded_cycle_search() {
        // A single simplex has no 4-cycles.
        let pattern = [
            VertexType::S3,
            VertexType::S1,
            VertexType::S3,
            VertexType::S1,
        ];
        assert!(single_delta()
            .embedded_cycles(&pattern, 100, false)
            .unwrap()
            .is_empty());

        // Invalid pattern.
        assert!(matches!(
            single_delta().embedded_cycles(
                &[VertexType::S1, VertexType::S1, VertexType::S2],
                10,
                false
            ),
            Err(PatternError::RepeatedType(0, 1))
        ));

        // Square bipyramid boundary: cycle w1-x1-w2-x2 with poles c1, c2.
        let mut c = TypedComplex::new();
        c.add_vertex("w1", VertexType::S3);
        c.add_vertex("w2", VertexType::S3);
        c.add_vertex("x1", VertexType::S1);
        c.add_vertex("x2", VertexType::S1);
        c.add_vertex("c1", VertexType::S2);
        c.add_vertex("c2", VertexType::S2);
        for pole in ["c1", "c2"] {
            c.add_triangle("w1", "x1", pole);
            c.add_triangle("x1", "w2", pole);
            c.add_triangle("w2", "x2", pole);
            c.add_triangle("x2", "w1", pole);
        }
        let cycles = c.embedded_cycles(&pattern, 100, false).unwrap();
        assert_eq!(cycles.len(), 1, "one cycle modulo rotation/reflection");
        assert_eq!(cycles[0].vertices.len(), 4);
    }

    #[test]
    fn metric_length_by_type() {
        let shape = b3_constants();
        let mut c = TypedComplex::new();
        c.add_vertex("u", VertexType::S3);
        c.add_vertex("v", VertexType::S1);
        c.add_vertex("m", VertexType::S2);
        c.add_triangle("u", "v", "m");
        // u-v is an s2 edge (beta), u-m is s1 (alpha), v-m is s3 (delta).
        let p = EdgePath::open(vec!["u".into(), "v".into()]);
        assert!((c.path_metric_length(&p, &shape) - shape.beta()).abs() < 1e-15);
        let p = EdgePath::closed(vec!["u".into(), "v".into(), "m".into()]);
        let expect = shape.beta() + shape.delta() + shape.alpha();
        assert!((c.path_metric_length(&p, &shape) - expect).abs() < 1e-15);
    }

    #[test]
    fn file_round_trip() {
        let text = "# comment\nv a s1\nt a b c # trailing\nv b s2\nv c s3\n";
        let c = TypedComplex::parse(text).unwrap();
        assert_eq!(c.vertex_count(), 3);
        assert_eq!(c.triangle_count(), 1);
        let again = TypedComplex::parse(&c.to_file_string()).unwrap();
        assert_eq!(again.vertex_count(), 3);
        assert_eq!(again.triangle_count(), 1);

        assert!(TypedComplex::parse("v a s9\n").is_err());
        assert!(TypedComplex::parse("t a a b\nv a s1\nv b s2\n").is_err());
    }

    #[test]
    fn edge_types_are_opposite_missing_vertex() {
        assert_eq!(edge_type(VertexType::S2, VertexType::S3), Some(1));
        assert_eq!(edge_type(VertexType::S1, VertexType::S3), Some(2));
        assert_eq!(edge_type(VertexType::S1, VertexType::S2), Some(3));
        assert_eq!(edge_type(VertexType::S1, VertexType::S1), None);
    }
}
