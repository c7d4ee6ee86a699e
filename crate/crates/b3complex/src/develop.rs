//! Development of galleries and edge paths from a `B_3` complex onto the
//! round Coxeter complex `C(B_3)`, the three quadrilateral-gallery shapes, and
//! lune boundary search.
//!
//! Development is purely combinatorial: chambers of `C(B_3)` are group
//! elements, and crossing the edge of type `s_i` moves from chamber `g` to
//! chamber `g s_i`. Coordinates enter only for length and angle checks.

use std::collections::HashMap;
use std::f64::consts::PI;

use thiserror::Error;

use crate::complex::{edge_type, EdgePath, TypedComplex, VertexType};
use crate::coxeter::{
    build_coxeter_complex, ComplexGeometry, CoxeterDiagram, CoxeterError, CoxeterGroup, ElemId,
    ParabolicHandle,
};
use crate::sphere::{angle_at, geodesic_distance, SpherePoint, TOL_GEOMETRY};

/// Slack for geodesic pruning bounds. `acos` amplifies coordinate noise to
/// about `sqrt(2 eps) ~ 2e-8` near coincident or antipodal points, so the
/// 1e-9 geometric tolerance is too tight for sums of arc lengths; competing
/// path lengths differ by at least 0.06, so 1e-7 is safely between.
const PRUNE_SLACK: f64 = 1e-7;

#[derive(Debug, Error, PartialEq)]
pub enum DevelopError {
    #[error("gallery is empty")]
    EmptyGallery,
    #[error("gallery step {step}: triple is not a triangle of the complex")]
    NotATriangle { step: usize },
    #[error("gallery step {step}: consecutive triangles do not share an edge")]
    NotAdjacent { step: usize },
    #[error("gallery step {step}: consecutive triangles are equal")]
    RepeatedTriangle { step: usize },
    #[error("no antipodal vertex found for {0:?}")]
    NoAntipode(String),
    #[error("a quadrilateral gallery needs exactly 3 blocks, got {0}")]
    NotThreeBlocks(usize),
    #[error("quadrilateral block {0} is malformed")]
    BadBlock(usize),
    #[error("blocks {0} and {1} do not share an edge")]
    BlocksNotChained(usize, usize),
    #[error("gallery does not match any of the three tracked shapes")]
    UnrecognizedShape,
}

/// The spherical Coxeter complex `C(B_3)` with its group, typed complex and
/// unit-sphere geometry bundled for development queries.
pub struct B3Sphere {
    pub group: CoxeterGroup,
    pub complex: TypedComplex,
    /// Coset representatives per type; defines vertex ids `s{i}_{k}`.
    pub reps: Vec<Vec<ElemId>>,
    pub geometry: ComplexGeometry,
    vertex_pos: HashMap<String, usize>,
}

impl B3Sphere {
    pub fn build() -> Result<B3Sphere, CoxeterError> {
        let group = CoxeterGroup::enumerate(&CoxeterDiagram::type_b(3))?;
        let (complex, reps, geometry) = build_coxeter_complex(&group)?;
        let vertex_pos = complex
            .vertex_ids()
            .into_iter()
            .enumerate()
            .map(|(i, id)| (id, i))
            .collect();
        Ok(B3Sphere {
            group,
            complex,
            reps,
            geometry,
            vertex_pos,
        })
    }

    pub fn coord(&self, vertex: &str) -> SpherePoint {
        self.geometry.coords[self.vertex_pos[vertex]]
    }

    /// Vertex id of the type-`i` vertex (1-based) of chamber `g`.
    pub fn chamber_vertex(&self, g: ElemId, type_index: usize) -> String {
        let handle = ParabolicHandle::maximal(3, type_index - 1);
        let rep = self.group.min_coset_rep(g, handle);
        let k = self.reps[type_index - 1]
            .iter()
            .position(|&r| r == rep)
            .expect("every coset representative is indexed");
        crate::coxeter::vertex_id(type_index - 1, k)
    }

    /// The antipodal map as a vertex permutation, verified to preserve types
    /// and triangles (`-1` lies in `W(B_3)`, so it is a simplicial
    /// automorphism of the tessellation).
    pub fn antipodal_vertex_map(&self) -> Result<HashMap<String, String>, DevelopError> {
        let ids = self.complex.vertex_ids();
        let mut map = HashMap::new();
        for id in &ids {
            let target = self.coord(id).antipode();
            let mut image = None;
            for other in &ids {
                // Match by dot product; it is well-conditioned near 1.
                if self.coord(other).dot(&target) > 1.0 - TOL_GEOMETRY {
                    image = Some(other.clone());
                    break;
                }
            }
            let image = image.ok_or_else(|| DevelopError::NoAntipode(id.clone()))?;
            if self.complex.vertex_type(id) != self.complex.vertex_type(&image) {
                return Err(DevelopError::NoAntipode(id.clone()));
            }
            map.insert(id.clone(), image);
        }
        for tri in self.complex.triangles() {
            if !self
                .complex
                .has_triangle(&map[&tri[0]], &map[&tri[1]], &map[&tri[2]])
            {
                return Err(DevelopError::NoAntipode(tri[0].clone()));
            }
        }
        Ok(map)
    }
}

/// A gallery in a source complex: a sequence of triangles, consecutive ones
/// sharing an edge.
#[derive(Debug, Clone)]
pub struct Gallery {
    pub triangles: Vec<[String; 3]>,
}

impl Gallery {
    pub fn new(triangles: Vec<[String; 3]>) -> Gallery {
        Gallery { triangles }
    }
}

/// The development of a gallery onto `C(B_3)`: one chamber per source
/// triangle, glued along shared edges, with the type-preserving vertex maps.
#[derive(Debug, Clone)]
pub struct DevelopedPath {
    pub chambers: Vec<ElemId>,
    /// Per step, the map from source vertex id to image vertex id of `C(B_3)`.
    pub vertex_maps: Vec<HashMap<String, String>>,
}

/// Develops `gallery` chamber by chamber, starting at `base_chamber`.
/// Deterministic; revisiting chambers is allowed (development is local).
pub fn develop_gallery(
    source: &TypedComplex,
    sphere: &B3Sphere,
    gallery: &Gallery,
    base_chamber: ElemId,
) -> Result<DevelopedPath, DevelopError> {
    if gallery.triangles.is_empty() {
        return Err(DevelopError::EmptyGallery);
    }
    for (step, tri) in gallery.triangles.iter().enumerate() {
        if !source.has_triangle(&tri[0], &tri[1], &tri[2]) {
            return Err(DevelopError::NotATriangle { step });
        }
    }
    let mut chambers = vec![base_chamber];
    for step in 1..gallery.triangles.len() {
        let prev = &gallery.triangles[step - 1];
        let here = &gallery.triangles[step];
        let shared: Vec<&String> = here.iter().filter(|v| prev.contains(v)).collect();
        if shared.len() == 3 {
            return Err(DevelopError::RepeatedTriangle { step });
        }
        if shared.len() != 2 {
            return Err(DevelopError::NotAdjacent { step });
        }
        let ta = source.vertex_type(shared[0]).unwrap();
        let tb = source.vertex_type(shared[1]).unwrap();
        let crossing = edge_type(ta, tb).expect("shared edge has distinct endpoint types");
        // Crossing the edge of type s_i maps chamber g to g s_i.
        let g = *chambers.last().unwrap();
        chambers.push(sphere.group.mult(g, sphere.group.generator(crossing - 1)));
    }
    let vertex_maps = gallery
        .triangles
        .iter()
        .zip(&chambers)
        .map(|(tri, &g)| {
            tri.iter()
                .map(|v| {
                    let t = source.vertex_type(v).unwrap().index();
                    (v.clone(), sphere.chamber_vertex(g, t))
                })
                .collect()
        })
        .collect();
    Ok(DevelopedPath {
        chambers,
        vertex_maps,
    })
}

/// Develops the closed gallery of triangles around a vertex and returns the
/// total developed angle at that vertex's image, plus whether the development
/// closes up (the next chamber after the last equals the first).
pub fn develop_around_vertex(
    source: &TypedComplex,
    sphere: &B3Sphere,
    center: &str,
    base_chamber: ElemId,
) -> Result<(f64, bool), DevelopError> {
    // Order the star of `center` into a closed fan using the link cycle.
    let link = source.link(center).unwrap();
    let n = link.node_count();
    let start = 0usize;
    let mut order = vec![start];
    let mut prev: Option<usize> = None;
    while order.len() < n {
        let here = *order.last().unwrap();
        let next = link.adj[here]
            .iter()
            .copied()
            .find(|&x| Some(x) != prev)
            .ok_or(DevelopError::NotAdjacent { step: order.len() })?;
        prev = Some(here);
        order.push(next);
    }
    let triangles: Vec<[String; 3]> = (0..n)
        .map(|i| {
            [
                center.to_string(),
                link.node_ids[order[i]].clone(),
                link.node_ids[order[(i + 1) % n]].clone(),
            ]
        })
        .collect();
    let closing = triangles[0].clone();
    let developed = develop_gallery(source, sphere, &Gallery::new(triangles.clone()), base_chamber)?;

    // Total angle at the image of the center, from coordinates.
    let mut total = 0.0;
    for (tri, map) in triangles.iter().zip(&developed.vertex_maps) {
        let c = sphere.coord(&map[&tri[0]]);
        let p = sphere.coord(&map[&tri[1]]);
        let q = sphere.coord(&map[&tri[2]]);
        total += angle_at(&c, &p, &q).unwrap();
    }

    // Does stepping across the closing edge return to the base chamber?
    let mut wrapped = gallery_with_closure(&triangles, closing);
    let closes = match develop_gallery(source, sphere, &Gallery::new(wrapped.split_off(0)), base_chamber) {
        Ok(d) => *d.chambers.last().unwrap() == base_chamber,
        Err(_) => false,
    };
    Ok((total, closes))
}

fn gallery_with_closure(triangles: &[[String; 3]], closing: [String; 3]) -> Vec<[String; 3]> {
    let mut v = triangles.to_vec();
    v.push(closing);
    v
}

/// One quadrilateral block: four boundary vertices in cyclic order around a
/// central `s^2` vertex.
#[derive(Debug, Clone)]
pub struct QuadBlock {
    pub center: String,
    pub boundary: [String; 4],
}

/// The three shapes of quadrilateral galleries of length three.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadGalleryShape {
    Left,
    Middle,
    Right,
}

/// Classifies a chain of three quadrilaterals by how consecutive blocks meet:
/// outer blocks attached along disjoint edges of the middle block give the
/// middle shape; edges meeting at a corner give the left shape, or the right
/// shape when the outer blocks also share an edge with each other.
pub fn classify_quad_gallery(blocks: &[QuadBlock]) -> Result<QuadGalleryShape, DevelopError> {
    if blocks.len() != 3 {
        return Err(DevelopError::NotThreeBlocks(blocks.len()));
    }
    for (i, b) in blocks.iter().enumerate() {
        let mut distinct = b.boundary.to_vec();
        distinct.sort();
        distinct.dedup();
        if distinct.len() != 4 {
            return Err(DevelopError::BadBlock(i));
        }
    }
    let common = |i: usize, j: usize| -> Vec<String> {
        blocks[i]
            .boundary
            .iter()
            .filter(|v| blocks[j].boundary.contains(v))
            .cloned()
            .collect()
    };
    let i12 = common(0, 1);
    let i23 = common(1, 2);
    if i12.len() != 2 {
        return Err(DevelopError::BlocksNotChained(0, 1));
    }
    if i23.len() != 2 {
        return Err(DevelopError::BlocksNotChained(1, 2));
    }
    let corner: Vec<&String> = i12.iter().filter(|v| i23.contains(v)).collect();
    match corner.len() {
        0 => Ok(QuadGalleryShape::Middle),
        1 => {
            let i13 = common(0, 2);
            if i13.len() >= 2 {
                Ok(QuadGalleryShape::Right)
            } else {
                Ok(QuadGalleryShape::Left)
            }
        }
        _ => Err(DevelopError::UnrecognizedShape),
    }
}

/// All edge paths in `C(B_3)` of metric length exactly `pi` (within 1e-9)
/// from the first vertex of `terminal_type` to its antipodal vertex.
pub fn lune_boundaries(
    sphere: &B3Sphere,
    terminal_type: VertexType,
) -> Result<Vec<EdgePath>, DevelopError> {
    let shape = crate::sphere::b3_constants();
    let base = crate::coxeter::vertex_id(terminal_type.index() - 1, 0);
    let antipodes = sphere.antipodal_vertex_map()?;
    let target = antipodes[&base].clone();

    let mut results = Vec::new();
    let mut stack = vec![base.clone()];
    dfs_lune(
        sphere,
        &shape,
        &target,
        &mut stack,
        0.0,
        &mut results,
    );
    // Every returned path really ends at the antipode at length pi. The
    // length is a sum of typed edge lengths, so the 1e-9 tolerance applies.
    for path in &results {
        let len = sphere.complex.path_metric_length(path, &shape);
        assert!((len - PI).abs() < TOL_GEOMETRY);
        let first = sphere.coord(&path.vertices[0]);
        let last = sphere.coord(path.vertices.last().unwrap());
        assert!((first.dot(&last) + 1.0).abs() < TOL_GEOMETRY);
    }
    results.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    Ok(results)
}

fn dfs_lune(
    sphere: &B3Sphere,
    shape: &crate::sphere::SimplexShape,
    target: &str,
    stack: &mut Vec<String>,
    length: f64,
    results: &mut Vec<EdgePath>,
) {
    let here = stack.last().unwrap().clone();
    if here == *target {
        if (length - PI).abs() < TOL_GEOMETRY {
            results.push(EdgePath::open(stack.clone()));
        }
        return;
    }
    for next in sphere.complex.neighbors(&here) {
        let t_here = sphere.complex.vertex_type(&here).unwrap();
        let t_next = sphere.complex.vertex_type(&next).unwrap();
        let step = shape.edge_len(edge_type(t_here, t_next).unwrap());
        let remaining = if next == *target {
            0.0
        } else {
            geodesic_distance(&sphere.coord(&next), &sphere.coord(target)).unwrap()
        };
        if length + step + remaining > PI + PRUNE_SLACK {
            continue;
        }
        stack.push(next);
        dfs_lune(sphere, shape, target, stack, length + step, results);
        stack.pop();
    }
}
