//! The six-condition CAT(1) criterion for typed `B_3` complexes, the short
//! edge-loop type tables, and the edge-path rewriting moves.
//!
//! Conditions:
//! 1. every vertex link is nonempty and connected;
//! 2. links of `s^1` vertices have girth at least 8;
//! 3. links of `s^2` vertices are complete bipartite along types and contain
//!    an embedded 4-cycle;
//! 4. links of `s^3` vertices have girth at least 6;
//! 5. short cycles of the three tracked patterns are filled;
//! 6. no embedded 10-cycle alternating `s^3`/`s^2` exists.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use serde::Serialize;
use thiserror::Error;

use crate::complex::{EdgePath, TypedComplex, VertexType, Violation};
use crate::sphere::{b3_constants, SimplexShape};

/// A boundary guard: weighted sums within this distance of `pi` count as not
/// short. The exact identities `4 delta = pi` and `2(alpha + beta) = pi` land
/// on the boundary; all honest table entries are at least 0.06 away.
const SHORTNESS_GUARD: f64 = 1e-9;

/// Counts of edge-type pairs in a closed edge loop: the loop has `2 n_alpha`
/// edges of type `s_1`, `2 n_beta` of type `s_2`, `2 n_delta` of type `s_3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Triple {
    pub n_alpha: u32,
    pub n_beta: u32,
    pub n_delta: u32,
}

impl Triple {
    pub fn new(n_alpha: u32, n_beta: u32, n_delta: u32) -> Triple {
        Triple {
            n_alpha,
            n_beta,
            n_delta,
        }
    }

    /// Half the loop length: `n_alpha * alpha + n_beta * beta + n_delta * delta`.
    pub fn weighted_sum(&self, shape: &SimplexShape) -> f64 {
        self.n_alpha as f64 * shape.alpha()
            + self.n_beta as f64 * shape.beta()
            + self.n_delta as f64 * shape.delta()
    }

    /// Short iff the loop length `2 * weighted_sum` is strictly below `2 pi`.
    pub fn is_short(&self, shape: &SimplexShape) -> bool {
        self.weighted_sum(shape) < PI - SHORTNESS_GUARD
    }
}

/// All triples with at least 4 loop edges (`n_alpha + n_beta + n_delta >= 2`,
/// digons are impossible) and loop length below `2 pi`, lexicographically
/// sorted. Reproduces the 23-row table.
pub fn enumerate_short_triples() -> Vec<Triple> {
    let shape = b3_constants();
    let mut out = Vec::new();
    // pi / alpha < 6, so all component bounds are comfortably below 8.
    for n_alpha in 0..8u32 {
        for n_beta in 0..8u32 {
            for n_delta in 0..8u32 {
                let t = Triple::new(n_alpha, n_beta, n_delta);
                if n_alpha + n_beta + n_delta >= 2 && t.is_short(&shape) {
                    out.push(t);
                }
            }
        }
    }
    out.sort();
    out
}

/// Reduction to the 15-row table: drops `(i,0,j)` with `i, j > 0` (a `2 s_1`
/// segment cannot be adjacent to a `2 s_3` segment) and `(2,0,0)`, `(0,0,2)`
/// (two-segment loops are ruled out by the star-intersection lemma).
pub fn reduce_triples(list: &[Triple]) -> Vec<Triple> {
    list.iter()
        .copied()
        .filter(|t| !(t.n_beta == 0 && t.n_alpha > 0 && t.n_delta > 0))
        .filter(|t| *t != Triple::new(2, 0, 0) && *t != Triple::new(0, 0, 2))
        .collect()
}

#[derive(Debug, Error, PartialEq)]
pub enum RewriteError {
    #[error("vertex {0:?} is not in the complex")]
    UnknownVertex(String),
    #[error("no filling edge {0:?}-{1:?}: condition (3) fails upstream")]
    MissingFillingEdge(String, String),
    #[error("no opposite-type vertex adjacent to {0:?} and {1:?}: condition (3) fails upstream")]
    MissingOppositeVertex(String, String),
    #[error("position {position} is not a segment x-middle-x with equal outer types")]
    BadSegment { position: usize },
}

/// Repeatedly replaces adjacent edge pairs of types `(s_1, s_3)` meeting at an
/// `s^2` vertex by the single `s_2` edge of the triangle guaranteed by the
/// complete bipartite link. The result contains only `2 s_1` segments, `2 s_3`
/// segments and `s_2` edges; each rewrite strictly shortens the path
/// (`beta < alpha + delta`).
pub fn normalize_edge_path(
    complex: &TypedComplex,
    path: &EdgePath,
) -> Result<EdgePath, RewriteError> {
    let mut vertices = path.vertices.clone();
    for id in &vertices {
        if complex.vertex_type(id).is_none() {
            return Err(RewriteError::UnknownVertex(id.clone()));
        }
    }
    'outer: loop {
        let n = vertices.len();
        if n < 3 {
            break;
        }
        let positions: Vec<usize> = if path.closed {
            (0..n).collect()
        } else {
            (1..n - 1).collect()
        };
        for mid in positions {
            let prev = &vertices[(mid + n - 1) % n];
            let next = &vertices[(mid + 1) % n];
            let tm = complex.vertex_type(&vertices[mid]).unwrap();
            let tp = complex.vertex_type(prev).unwrap();
            let tn = complex.vertex_type(next).unwrap();
            if tm == VertexType::S2 && tp != tn {
                if !complex.has_edge(prev, next) {
                    return Err(RewriteError::MissingFillingEdge(
                        prev.clone(),
                        next.clone(),
                    ));
                }
                vertices.remove(mid);
                continue 'outer;
            }
        }
        break;
    }
    Ok(EdgePath {
        vertices,
        closed: path.closed,
    })
}

/// Replaces the middle vertex of a segment `x - middle - x` (equal outer
/// types) by a vertex of the third type adjacent to both outer vertices
/// through triangles with the old middle. Swings an `s^1-s^2-s^1` segment to
/// `s^1-s^3-s^1` (and back), as in the monotone homotopy across the filled
/// square.
pub fn bypass_move(
    complex: &TypedComplex,
    path: &EdgePath,
    position: usize,
) -> Result<EdgePath, RewriteError> {
    let n = path.vertices.len();
    if position >= n || (!path.closed && (position == 0 || position == n - 1)) {
        return Err(RewriteError::BadSegment { position });
    }
    let prev = &path.vertices[(position + n - 1) % n];
    let next = &path.vertices[(position + 1) % n];
    let mid = &path.vertices[position];
    let tm = complex
        .vertex_type(mid)
        .ok_or_else(|| RewriteError::UnknownVertex(mid.clone()))?;
    let tp = complex.vertex_type(prev).unwrap();
    let tn = complex.vertex_type(next).unwrap();
    if tp != tn || tp == tm {
        return Err(RewriteError::BadSegment { position });
    }
    let target = VertexType::from_index(6 - tm.index() - tp.index());
    let mut candidates: Vec<String> = complex
        .neighbors(mid)
        .into_iter()
        .filter(|v| complex.vertex_type(v) == Some(target))
        .filter(|v| complex.has_triangle(v, mid, prev) && complex.has_triangle(v, mid, next))
        .collect();
    candidates.sort();
    let replacement = candidates
        .into_iter()
        .next()
        .ok_or_else(|| RewriteError::MissingOppositeVertex(prev.clone(), next.clone()))?;
    let mut vertices = path.vertices.clone();
    vertices[position] = replacement;
    Ok(EdgePath {
        vertices,
        closed: path.closed,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConditionStatus {
    Pass,
    Fail,
    Inconclusive,
}

/// Outcome of one condition, with witnesses for defects.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionReport {
    pub status: ConditionStatus,
    pub notes: Vec<String>,
    pub witness_vertices: Vec<String>,
    pub witness_cycles: Vec<Vec<String>>,
}

impl ConditionReport {
    fn pass() -> ConditionReport {
        ConditionReport {
            status: ConditionStatus::Pass,
            notes: vec![],
            witness_vertices: vec![],
            witness_cycles: vec![],
        }
    }
}

/// Checker configuration; echoed into every report.
#[derive(Debug, Clone, Serialize)]
pub struct CheckOptions {
    /// Match patterns as induced cycles (chords disqualify an occurrence).
    pub induced: bool,
    /// Cap on embedded-cycle enumeration per pattern.
    pub cycle_limit: usize,
    /// Ball mode: defects that truncation can fake (disconnected links,
    /// missing edges, missing fillings) become inconclusive, not failures.
    pub ball_mode: bool,
}

impl Default for CheckOptions {
    fn default() -> CheckOptions {
        CheckOptions {
            induced: false,
            cycle_limit: 10_000,
            ball_mode: false,
        }
    }
}

/// Structured outcome of the six CAT(1) conditions.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
    /// Reports for conditions (1) through (6), in order.
    pub conditions: Vec<ConditionReport>,
    pub verdict: ConditionStatus,
    pub options: CheckOptions,
}

impl CheckReport {
    pub fn condition(&self, number: usize) -> &ConditionReport {
        &self.conditions[number - 1]
    }
}

/// Conditions (1)-(4): per-vertex link checks.
pub fn check_conditions_1_to_4(
    complex: &TypedComplex,
    opts: &CheckOptions,
) -> [ConditionReport; 4] {
    check_conditions_1_to_4_restricted(complex, opts, None)
}

pub(crate) fn check_conditions_1_to_4_restricted(
    complex: &TypedComplex,
    opts: &CheckOptions,
    restrict: Option<&BTreeSet<String>>,
) -> [ConditionReport; 4] {
    let mut reports = [
        ConditionReport::pass(),
        ConditionReport::pass(),
        ConditionReport::pass(),
        ConditionReport::pass(),
    ];
    let soft_status = if opts.ball_mode {
        ConditionStatus::Inconclusive
    } else {
        ConditionStatus::Fail
    };
    let mut ids = complex.vertex_ids();
    ids.sort();
    for id in ids {
        if let Some(allowed) = restrict {
            if !allowed.contains(&id) {
                continue;
            }
        }
        let link = complex.link(&id).unwrap();
        let vtype = complex.vertex_type(&id).unwrap();
        if link.is_empty() || !link.is_connected() {
            let r = &mut reports[0];
            if r.status == ConditionStatus::Pass {
                r.status = soft_status;
            }
            r.witness_vertices.push(id.clone());
            r.notes.push(format!(
                "link of {id} is {}",
                if link.is_empty() { "empty" } else { "disconnected" }
            ));
        }
        match vtype {
            VertexType::S1 => {
                if let Some(g) = link.girth() {
                    if g < 8 {
                        let r = &mut reports[1];
                        r.status = ConditionStatus::Fail;
                        r.witness_vertices.push(id.clone());
                        r.notes.push(format!("link of {id} has girth {g} < 8"));
                    }
                }
            }
            VertexType::S2 => {
                let bip = link.is_complete_bipartite();
                let r = &mut reports[2];
                if !bip.same_type_edges.is_empty() {
                    r.status = ConditionStatus::Fail;
                    r.witness_vertices.push(id.clone());
                    r.notes.push(format!(
                        "link of {id} has same-type edges: {:?}",
                        bip.same_type_edges
                    ));
                }
                if !bip.missing_edges.is_empty() {
                    if r.status == ConditionStatus::Pass {
                        r.status = soft_status;
                    }
                    r.witness_vertices.push(id.clone());
                    r.notes.push(format!(
                        "link of {id} is missing cross edges: {:?}",
                        bip.missing_edges
                    ));
                }
                if !bip.has_embedded_4_cycle {
                    if r.status == ConditionStatus::Pass {
                        r.status = soft_status;
                    }
                    r.witness_vertices.push(id.clone());
                    r.notes.push(format!(
                        "link of {id} has sides {} and {}; no embedded 4-cycle",
                        bip.side_s1, bip.side_s3
                    ));
                }
            }
            VertexType::S3 => {
                if let Some(g) = link.girth() {
                    if g < 6 {
                        let r = &mut reports[3];
                        r.status = ConditionStatus::Fail;
                        r.witness_vertices.push(id.clone());
                        r.notes.push(format!("link of {id} has girth {g} < 6"));
                    }
                }
            }
        }
    }
    for r in &mut reports {
        r.witness_vertices.dedup();
    }
    reports
}

/// The three tracked short-cycle patterns.
pub fn pattern_4cycle() -> Vec<VertexType> {
    vec![
        VertexType::S3,
        VertexType::S1,
        VertexType::S3,
        VertexType::S1,
    ]
}

pub fn pattern_6cycle() -> Vec<VertexType> {
    vec![
        VertexType::S3,
        VertexType::S1,
        VertexType::S3,
        VertexType::S1,
        VertexType::S3,
        VertexType::S1,
    ]
}

pub fn pattern_8cycle() -> Vec<VertexType> {
    vec![
        VertexType::S3,
        VertexType::S2,
        VertexType::S3,
        VertexType::S1,
        VertexType::S3,
        VertexType::S2,
        VertexType::S3,
        VertexType::S2,
    ]
}

pub fn pattern_bad_10cycle() -> Vec<VertexType> {
    vec![
        VertexType::S3,
        VertexType::S2,
        VertexType::S3,
        VertexType::S2,
        VertexType::S3,
        VertexType::S2,
        VertexType::S3,
        VertexType::S2,
        VertexType::S3,
        VertexType::S2,
    ]
}

fn positions_of(cycle: &[String], complex: &TypedComplex, t: VertexType) -> Vec<usize> {
    cycle
        .iter()
        .enumerate()
        .filter(|(_, id)| complex.vertex_type(id) == Some(t))
        .map(|(i, _)| i)
        .collect()
}

/// Four-cycle filling: an `s^2` vertex off the cycle adjacent to all four.
fn fill_4cycle(cycle: &[String], search: &TypedComplex) -> Option<String> {
    let mut ids = search.vertex_ids();
    ids.sort();
    ids.into_iter().find(|cand| {
        search.vertex_type(cand) == Some(VertexType::S2)
            && !cycle.contains(cand)
            && cycle.iter().all(|v| search.has_edge(cand, v))
    })
}

/// Six-cycle filling: a central `s^3` vertex joined to the three `s^1`
/// vertices, plus three distinct `s^2` vertices, one per quadrilateral
/// (center, s^1, between-s^3, s^1).
fn fill_6cycle(
    cycle: &[String],
    complex: &TypedComplex,
    search: &TypedComplex,
) -> Option<(String, Vec<String>)> {
    let s1_pos = positions_of(cycle, complex, VertexType::S1);
    if s1_pos.len() != 3 {
        return None;
    }
    let mut ids = search.vertex_ids();
    ids.sort();
    'center: for z in &ids {
        if search.vertex_type(z) != Some(VertexType::S3) || cycle.contains(z) {
            continue;
        }
        if !s1_pos.iter().all(|&p| search.has_edge(z, &cycle[p])) {
            continue;
        }
        let mut fills: Vec<String> = Vec::new();
        for k in 0..3 {
            let a = s1_pos[k];
            let b = s1_pos[(k + 1) % 3];
            // The s^3 vertex strictly between the two s^1 positions.
            let between = (a + 1) % cycle.len();
            let quad = [
                z.clone(),
                cycle[a].clone(),
                cycle[between].clone(),
                cycle[b].clone(),
            ];
            let mut found = None;
            for m in &ids {
                if search.vertex_type(m) == Some(VertexType::S2)
                    && !cycle.contains(m)
                    && m != z
                    && !fills.contains(m)
                    && quad.iter().all(|v| search.has_edge(m, v))
                {
                    found = Some(m.clone());
                    break;
                }
            }
            match found {
                Some(m) => fills.push(m),
                None => continue 'center,
            }
        }
        return Some((z.clone(), fills));
    }
    None
}

/// Eight-cycle filling: an interior `s^1` vertex adjacent to the four `s^3`
/// and three `s^2` cycle vertices, plus an interior `s^2` vertex adjacent to
/// the interior `s^1`, the cycle's `s^1`, and its two flanking `s^3` vertices.
fn fill_8cycle(
    cycle: &[String],
    complex: &TypedComplex,
    search: &TypedComplex,
) -> Option<(String, String)> {
    let s1_pos = positions_of(cycle, complex, VertexType::S1);
    if s1_pos.len() != 1 {
        return None;
    }
    let p = s1_pos[0];
    let n = cycle.len();
    let flank_a = cycle[(p + n - 1) % n].clone();
    let flank_b = cycle[(p + 1) % n].clone();
    let s3s = positions_of(cycle, complex, VertexType::S3);
    let s2s = positions_of(cycle, complex, VertexType::S2);
    let mut ids = search.vertex_ids();
    ids.sort();
    for z in &ids {
        if search.vertex_type(z) != Some(VertexType::S1) || cycle.contains(z) {
            continue;
        }
        let adjacent_all = s3s
            .iter()
            .chain(s2s.iter())
            .all(|&q| search.has_edge(z, &cycle[q]));
        if !adjacent_all {
            continue;
        }
        for m in &ids {
            if search.vertex_type(m) == Some(VertexType::S2)
                && !cycle.contains(m)
                && search.has_edge(m, z)
                && search.has_edge(m, &cycle[p])
                && search.has_edge(m, &flank_a)
                && search.has_edge(m, &flank_b)
            {
                return Some((z.clone(), m.clone()));
            }
        }
    }
    None
}

/// Condition (5): every embedded occurrence of the tracked patterns is filled.
/// Cycles are enumerated in `complex` (optionally restricted to a vertex set);
/// fillings are searched in `search`, which may be an enlarged complex.
pub fn check_condition5_with(
    complex: &TypedComplex,
    search: &TypedComplex,
    restrict: Option<&BTreeSet<String>>,
    opts: &CheckOptions,
) -> ConditionReport {
    let mut report = ConditionReport::pass();
    let miss_status = if opts.ball_mode {
        ConditionStatus::Inconclusive
    } else {
        ConditionStatus::Fail
    };
    let patterns: [(&str, Vec<VertexType>); 3] = [
        ("4-cycle", pattern_4cycle()),
        ("6-cycle", pattern_6cycle()),
        ("8-cycle", pattern_8cycle()),
    ];
    for (name, pattern) in patterns {
        let cycles = complex
            .embedded_cycles_within(&pattern, opts.cycle_limit, opts.induced, restrict)
            .expect("tracked patterns are valid");
        for cycle in cycles {
            let filled = match name {
                "4-cycle" => fill_4cycle(&cycle.vertices, search).is_some(),
                "6-cycle" => fill_6cycle(&cycle.vertices, complex, search).is_some(),
                _ => fill_8cycle(&cycle.vertices, complex, search).is_some(),
            };
            if !filled {
                report.status = miss_status;
                report.notes.push(format!(
                    "unfilled {name} {:?}{}",
                    cycle.vertices,
                    if opts.ball_mode {
                        " (filling may lie outside the ball; increase the radius)"
                    } else {
                        ""
                    }
                ));
                report.witness_cycles.push(cycle.vertices.clone());
            }
        }
    }
    report
}

pub fn check_condition5(complex: &TypedComplex, opts: &CheckOptions) -> ConditionReport {
    check_condition5_with(complex, complex, None, opts)
}

/// Condition (6): pass iff no embedded `(s^3, s^2) x 5` cycle exists.
pub fn check_condition6_with(
    complex: &TypedComplex,
    restrict: Option<&BTreeSet<String>>,
    opts: &CheckOptions,
) -> ConditionReport {
    let mut report = ConditionReport::pass();
    let cycles = complex
        .embedded_cycles_within(&pattern_bad_10cycle(), opts.cycle_limit, opts.induced, restrict)
        .expect("pattern is valid");
    for cycle in cycles {
        report.status = ConditionStatus::Fail;
        report
            .notes
            .push(format!("embedded 10-cycle {:?}", cycle.vertices));
        report.witness_cycles.push(cycle.vertices.clone());
    }
    report
}

pub fn check_condition6(complex: &TypedComplex, opts: &CheckOptions) -> ConditionReport {
    check_condition6_with(complex, None, opts)
}

/// Runs validation and all six conditions. Overall verdict: fail if any
/// condition fails, inconclusive if any is inconclusive (or ball mode is on),
/// pass otherwise.
pub fn check_cat1_criteria(complex: &TypedComplex, opts: &CheckOptions) -> CheckReport {
    let violations = complex.validate();
    if !violations.is_empty() {
        return CheckReport {
            valid: false,
            violations,
            conditions: vec![],
            verdict: ConditionStatus::Inconclusive,
            options: opts.clone(),
        };
    }
    let [c1, c2, c3, c4] = check_conditions_1_to_4(complex, opts);
    let c5 = check_condition5(complex, opts);
    let c6 = check_condition6(complex, opts);
    let conditions = vec![c1, c2, c3, c4, c5, c6];
    let verdict = if conditions.iter().any(|c| c.status == ConditionStatus::Fail) {
        ConditionStatus::Fail
    } else if opts.ball_mode
        || conditions
            .iter()
            .any(|c| c.status == ConditionStatus::Inconclusive)
    {
        ConditionStatus::Inconclusive
    } else {
        ConditionStatus::Pass
    };
    CheckReport {
        valid: true,
        violations,
        conditions,
        verdict,
        options: opts.clone(),
    }
}
