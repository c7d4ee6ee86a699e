//! The aggregate verification suite and the hand-built negative fixtures.
//!
//! [`run_verification`] reproduces every desk-scale claim by exact
//! computation: the simplex constants and both type tables, the full
//! combinatorics and geometry of `C(B_3)`, Garside normal forms against an
//! independent rewriting-closure oracle, the embedding into `A(A_5)` with its
//! bounded injectivity certificate, the involution and its order reversal,
//! the image-comparability lemma, joins of upper-bounded vertex sets, the
//! localized main-theorem conditions on Artin-complex balls, and the gallery
//! developments. All sampling is driven by the seed in [`VerifyConfig`].

use std::collections::{BTreeSet, HashMap};
use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::artin::{
    build_ball, check_jingyin_instance, join_in_ball_cached, lessiffimage_forward,
    lessiffimage_reverse, sigma_vertex, BallChecker, JingyinOutcome, JoinOutcome, PosetAnswer,
    ReverseOutcome,
};
use crate::checker::{
    check_cat1_criteria, enumerate_short_triples, reduce_triples, CheckOptions, ConditionStatus,
};
use crate::complex::{TypedComplex, VertexType};
use crate::coxeter::{CoxeterDiagram, CoxeterGroup};
use crate::develop::{develop_around_vertex, lune_boundaries, B3Sphere};
use crate::garside::{injectivity_sample, phi, sigma, ArtinSystem};
use crate::sphere::{b3_constants, side_from_angles, triangle_area, TOL_ANALYTIC, TOL_GEOMETRY};

/// A closed surface with three `s^1` vertices whose links are 4-cycles, while
/// every other condition holds: `s^2` links are `K_{2,2}`, `s^3` links are
/// 6-cycles, and all pattern-(a) squares are filled. Violates exactly
/// condition (2).
///
/// Vertices: poles `p`, `q1`, `q2` (type `s^1`), equators `u1`, `u2`, `m`
/// (type `s^2`), `w1`, `w2` (type `s^3`); 12 triangles.
pub fn fixture_bad_girth() -> TypedComplex {
    let mut c = TypedComplex::new();
    for id in ["p", "q1", "q2"] {
        c.add_vertex(id, VertexType::S1);
    }
    for id in ["u1", "u2", "m"] {
        c.add_vertex(id, VertexType::S2);
    }
    for id in ["w1", "w2"] {
        c.add_vertex(id, VertexType::S3);
    }
    // Quadrilateral around p.
    for u in ["u1", "u2"] {
        c.add_triangle("p", u, "w1");
        c.add_triangle("p", u, "w2");
    }
    // q_i closes the link of u_i.
    c.add_triangle("q1", "u1", "w1");
    c.add_triangle("q1", "u1", "w2");
    c.add_triangle("q2", "u2", "w1");
    c.add_triangle("q2", "u2", "w2");
    // m fills the square w1 - q1 - w2 - q2.
    c.add_triangle("m", "q1", "w1");
    c.add_triangle("m", "q1", "w2");
    c.add_triangle("m", "q2", "w1");
    c.add_triangle("m", "q2", "w2");
    c
}

/// An `s^2` vertex whose link is a path `x1 - y1 - x2 - y2`: complete
/// bipartiteness fails with exactly one missing cross edge `(x1, y2)`.
/// Everything else passes. Violates exactly condition (3).
pub fn fixture_bad_bipartite() -> TypedComplex {
    let mut c = TypedComplex::new();
    c.add_vertex("c", VertexType::S2);
    c.add_vertex("x1", VertexType::S1);
    c.add_vertex("x2", VertexType::S1);
    c.add_vertex("y1", VertexType::S3);
    c.add_vertex("y2", VertexType::S3);
    c.add_triangle("c", "x1", "y1");
    c.add_triangle("c", "y1", "x2");
    c.add_triangle("c", "x2", "y2");
    c
}

/// A band of four quadrilaterals around an `s^3 s^1 s^3 s^1` square that no
/// `s^2` vertex fills. Conditions (1)-(4) and (6) hold; condition (5) fails
/// with the central square `w1 - x1 - w2 - x2` as a witness.
pub fn fixture_unfilled_square() -> TypedComplex {
    let mut c = TypedComplex::new();
    for id in ["w1", "w2", "wa", "wc"] {
        c.add_vertex(id, VertexType::S3);
    }
    for id in ["x1", "x2", "xb", "xd"] {
        c.add_vertex(id, VertexType::S1);
    }
    for id in ["c1", "c2", "c3", "c4"] {
        c.add_vertex(id, VertexType::S2);
    }
    // Quadrilateral around c1: {x1, xd} x {w1, wa}.
    c.add_triangle("c1", "x1", "w1");
    c.add_triangle("c1", "x1", "wa");
    c.add_triangle("c1", "xd", "w1");
    c.add_triangle("c1", "xd", "wa");
    // Around c2: {x1, xb} x {w2, wa}.
    c.add_triangle("c2", "x1", "w2");
    c.add_triangle("c2", "x1", "wa");
    c.add_triangle("c2", "xb", "w2");
    c.add_triangle("c2", "xb", "wa");
    // Around c3: {x2, xb} x {w2, wc}.
    c.add_triangle("c3", "x2", "w2");
    c.add_triangle("c3", "x2", "wc");
    c.add_triangle("c3", "xb", "w2");
    c.add_triangle("c3", "xb", "wc");
    // Around c4: {x2, xd} x {w1, wc}.
    c.add_triangle("c4", "x2", "w1");
    c.add_triangle("c4", "x2", "wc");
    c.add_triangle("c4", "xd", "w1");
    c.add_triangle("c4", "xd", "wc");
    c
}

/// Configuration of one verification run; echoed into the report.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Radius of the base `B_3` chamber ball; the ambient ball is one larger.
    pub radius_b3: usize,
    pub radius_a5: usize,
    /// Word-length bound for bounded parabolic searches.
    pub search_radius: usize,
    /// Word-length bound for the normal-form vs rewriting-closure sweep.
    pub oracle_len: usize,
    /// Word-length bound for the fraction parts in the injectivity sample.
    pub injectivity_len: usize,
    /// Number of upper-bounded vertex sets to harvest for the join check.
    pub join_sets: usize,
}

impl Default for VerifyConfig {
    fn default() -> VerifyConfig {
        VerifyConfig {
            seed: 0,
            radius_b3: 3,
            radius_a5: 2,
            search_radius: 4,
            oracle_len: 6,
            injectivity_len: 3,
            join_sets: 100,
        }
    }
}

/// Outcome of one verification section.
#[derive(Debug, Clone, Serialize)]
pub struct Section {
    pub name: String,
    pub pass: bool,
    /// Checks that a bounded search could not decide (never failures).
    pub inconclusive: usize,
    pub details: Vec<String>,
    /// Wall-clock milliseconds spent in this section.
    pub elapsed_ms: f64,
}

impl Section {
    fn new(name: &str) -> Section {
        Section {
            name: name.to_string(),
            pass: true,
            inconclusive: 0,
            details: Vec::new(),
            elapsed_ms: 0.0,
        }
    }

    fn check(&mut self, ok: bool, what: &str) {
        if ok {
            self.details.push(format!("ok: {what}"));
        } else {
            self.pass = false;
            self.details.push(format!("FAIL: {what}"));
        }
    }

    fn note(&mut self, what: String) {
        self.details.push(what);
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub sections: Vec<Section>,
    pub all_pass: bool,
}

/// Runs the whole suite. Identical configurations produce identical reports
/// (timings aside).
pub fn run_verification(config: &VerifyConfig) -> VerifyReport {
    let timed = |f: &mut dyn FnMut() -> Section| -> Section {
        let start = std::time::Instant::now();
        let mut section = f();
        section.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        section
    };
    let mut sections = vec![
        timed(&mut section_constants),
        timed(&mut section_tables),
        timed(&mut section_coxeter_complex),
        timed(&mut || section_garside_oracle(config)),
        timed(&mut || section_phi_injectivity(config)),
    ];

    let setup_start = std::time::Instant::now();
    let b3 = ArtinSystem::b3();
    let a5 = ArtinSystem::a5();
    let ambient = build_ball(&b3, config.radius_b3 + 1);
    let a5_ball = build_ball(&a5, config.radius_a5);
    let mut checker = BallChecker::new(&b3, &ambient, config.search_radius);
    let mut setup = Section::new("setup-balls");
    setup.note(format!(
        "ambient B_3 ball radius {}: {} chambers, {} classes; A_5 ball radius {}: {} chambers, {} classes",
        config.radius_b3 + 1,
        ambient.chambers.len(),
        ambient.classes.len(),
        config.radius_a5,
        a5_ball.chambers.len(),
        a5_ball.classes.len()
    ));
    setup.elapsed_ms = setup_start.elapsed().as_secs_f64() * 1e3;
    sections.push(setup);

    sections.push(timed(&mut || section_sigma(config, &a5, &a5_ball)));
    sections.push(timed(&mut || section_lessiffimage(config, &b3, &a5, &a5_ball)));
    sections.push(timed(&mut || section_joins(config, &mut checker)));
    sections.push(timed(&mut || section_ball_conditions(config, &mut checker)));
    sections.push(timed(&mut || section_jingyin(config, &a5, &a5_ball)));
    sections.push(timed(&mut section_development));
    sections.push(timed(&mut section_fixtures));

    let all_pass = sections.iter().all(|s| s.pass);
    VerifyReport {
        config: config.clone(),
        sections,
        all_pass,
    }
}

impl VerifyReport {
    pub fn section(&self, name: &str) -> &Section {
        self.sections
            .iter()
            .find(|s| s.name == name)
            .unwrap_or_else(|| panic!("no section named {name:?}"))
    }
}

fn section_constants() -> Section {
    let mut s = Section::new("constants");
    let shape = b3_constants();
    s.check((shape.alpha() - 0.615).abs() < 5e-4, "alpha ~ 0.615");
    s.check((shape.beta() - 0.955).abs() < 5e-4, "beta ~ 0.955");
    s.check((shape.delta() - 0.785).abs() < 5e-4, "delta ~ 0.785");
    s.check(
        (shape.alpha() + shape.beta() - PI / 2.0).abs() < TOL_ANALYTIC,
        "alpha + beta = pi/2",
    );
    s.check(
        (shape.delta() - PI / 4.0).abs() < TOL_ANALYTIC,
        "delta = pi/4",
    );
    let a = side_from_angles(shape.angle_s1, shape.angle_s2, shape.angle_s3).unwrap();
    let b = side_from_angles(shape.angle_s2, shape.angle_s3, shape.angle_s1).unwrap();
    let d = side_from_angles(shape.angle_s3, shape.angle_s1, shape.angle_s2).unwrap();
    s.check(
        (a - shape.alpha()).abs() < TOL_ANALYTIC
            && (b - shape.beta()).abs() < TOL_ANALYTIC
            && (d - shape.delta()).abs() < TOL_ANALYTIC,
        "law of cosines round trip at 1e-12",
    );
    s
}

fn section_tables() -> Section {
    let mut s = Section::new("tables");
    let table1 = enumerate_short_triples();
    let table2 = reduce_triples(&table1);
    s.check(table1.len() == 23, "23 short triples");
    s.check(table2.len() == 15, "15 reduced triples");
    let t1: Vec<(u32, u32, u32)> = table1
        .iter()
        .map(|t| (t.n_alpha, t.n_beta, t.n_delta))
        .collect();
    s.check(
        t1.contains(&(5, 0, 0)) && t1.contains(&(0, 3, 0)) && t1.contains(&(3, 1, 0)),
        "contains (5,0,0), (0,3,0), (3,1,0)",
    );
    s.check(
        !t1.contains(&(0, 0, 4)) && !t1.contains(&(2, 2, 0)),
        "boundary triples (0,0,4) and (2,2,0) excluded",
    );
    let t2: Vec<(u32, u32, u32)> = table2
        .iter()
        .map(|t| (t.n_alpha, t.n_beta, t.n_delta))
        .collect();
    s.check(
        !t2.contains(&(1, 0, 2)) && !t2.contains(&(2, 0, 0)) && t2.contains(&(3, 0, 0)),
        "reduction drops (i,0,j) and (2,0,0), keeps (3,0,0)",
    );
    s
}

fn section_coxeter_complex() -> Section {
    let mut s = Section::new("coxeter-complex");
    let w = CoxeterGroup::enumerate(&CoxeterDiagram::type_b(3)).unwrap();
    s.check(w.order() == 48, "|W(B_3)| = 48");
    let sphere = B3Sphere::build().unwrap();
    let complex = &sphere.complex;
    s.check(complex.vertex_count() == 26, "26 vertices");
    let count_type = |t: VertexType| {
        complex
            .vertex_ids()
            .iter()
            .filter(|v| complex.vertex_type(v) == Some(t))
            .count()
    };
    s.check(
        count_type(VertexType::S1) == 6
            && count_type(VertexType::S2) == 12
            && count_type(VertexType::S3) == 8,
        "vertex counts 6/12/8 by type",
    );
    s.check(complex.edge_count() == 72, "72 edges");
    s.check(complex.triangle_count() == 48, "48 chambers");
    s.check(
        complex.vertex_count() as i64 - complex.edge_count() as i64
            + complex.triangle_count() as i64
            == 2,
        "Euler characteristic 2",
    );
    let mut links_ok = true;
    for v in complex.vertex_ids() {
        let expect = match complex.vertex_type(&v).unwrap() {
            VertexType::S1 => 8,
            VertexType::S2 => 4,
            VertexType::S3 => 6,
        };
        links_ok &= complex.link(&v).unwrap().single_cycle_length() == Some(expect);
    }
    s.check(links_ok, "links are cycles of lengths 8/4/6 by type");

    let shape = b3_constants();
    let mut geometry_ok = true;
    for tri in complex.triangles() {
        let mut by_type = HashMap::new();
        for id in &tri {
            by_type.insert(complex.vertex_type(id).unwrap().index(), id.clone());
        }
        let v1 = sphere.coord(&by_type[&1]);
        let v2 = sphere.coord(&by_type[&2]);
        let v3 = sphere.coord(&by_type[&3]);
        let a = crate::sphere::geodesic_distance(&v2, &v3).unwrap();
        let b = crate::sphere::geodesic_distance(&v1, &v3).unwrap();
        let d = crate::sphere::geodesic_distance(&v1, &v2).unwrap();
        geometry_ok &= (a - shape.alpha()).abs() < TOL_GEOMETRY
            && (b - shape.beta()).abs() < TOL_GEOMETRY
            && (d - shape.delta()).abs() < TOL_GEOMETRY;
    }
    s.check(geometry_ok, "all edge lengths match alpha/beta/delta at 1e-9");
    let area = triangle_area(shape.angle_s1, shape.angle_s2, shape.angle_s3).unwrap();
    s.check(
        (48.0 * area - 4.0 * PI).abs() < TOL_GEOMETRY,
        "48 simplex areas tile the sphere",
    );
    s
}

/// Brute-force rewriting closure of a positive word under the defining
/// relations — the independent oracle for monoid equality.
pub fn rewriting_closure(diagram: &CoxeterDiagram, word: &[usize]) -> BTreeSet<Vec<usize>> {
    let mut relations: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for i in 0..diagram.rank() {
        for j in i + 1..diagram.rank() {
            let m = diagram.label(i, j) as usize;
            let mut left = Vec::new();
            let mut right = Vec::new();
            for k in 0..m {
                left.push(if k % 2 == 0 { i } else { j });
                right.push(if k % 2 == 0 { j } else { i });
            }
            relations.push((left.clone(), right.clone()));
            relations.push((right, left));
        }
    }
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = vec![word.to_vec()];
    seen.insert(word.to_vec());
    while let Some(w) = queue.pop() {
        for (from, to) in &relations {
            if from.len() > w.len() {
                continue;
            }
            for start in 0..=w.len() - from.len() {
                if &w[start..start + from.len()] == from.as_slice() {
                    let mut next = w.clone();
                    next.splice(start..start + from.len(), to.iter().copied());
                    if seen.insert(next.clone()) {
                        queue.push(next);
                    }
                }
            }
        }
    }
    seen
}

fn section_garside_oracle(config: &VerifyConfig) -> Section {
    let mut s = Section::new("garside-oracle");
    let sys = ArtinSystem::b3();
    let diagram = CoxeterDiagram::type_b(3);

    // All positive words of length <= oracle_len.
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..config.oracle_len {
        let mut next = Vec::new();
        for w in &frontier {
            for g in 0..3 {
                let mut v = w.clone();
                v.push(g);
                next.push(v);
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }

    let mut class_of: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut class_count = 0usize;
    for w in &words {
        if class_of.contains_key(w) {
            continue;
        }
        for m in rewriting_closure(&diagram, w) {
            class_of.insert(m, class_count);
        }
        class_count += 1;
    }
    let forms: Vec<_> = words.iter().map(|w| sys.normal_form(w)).collect();
    let mut nf_of_class: HashMap<usize, &crate::garside::PositiveElement> = HashMap::new();
    let mut discrepancies = 0usize;
    for (w, nf) in words.iter().zip(forms.iter()) {
        let cls = class_of[w];
        match nf_of_class.get(&cls) {
            Some(prev) => {
                if *prev != nf {
                    discrepancies += 1;
                }
            }
            None => {
                nf_of_class.insert(cls, nf);
            }
        }
    }
    // Same normal form must also mean same class.
    let mut class_of_nf: HashMap<&crate::garside::PositiveElement, usize> = HashMap::new();
    for (w, nf) in words.iter().zip(forms.iter()) {
        let cls = class_of[w];
        match class_of_nf.get(nf) {
            Some(&prev) => {
                if prev != cls {
                    discrepancies += 1;
                }
            }
            None => {
                class_of_nf.insert(nf, cls);
            }
        }
    }
    s.note(format!(
        "{} words of length <= {}, {} monoid elements",
        words.len(),
        config.oracle_len,
        class_count
    ));
    s.check(
        discrepancies == 0,
        "normal-form equality coincides with rewriting-closure equality",
    );
    s
}

fn section_phi_injectivity(config: &VerifyConfig) -> Section {
    let mut s = Section::new("phi-injectivity");
    let b3 = ArtinSystem::b3();
    let a5 = ArtinSystem::a5();

    let relations: [(&[usize], &[usize]); 3] = [
        (&[0, 1, 0], &[1, 0, 1]),
        (&[1, 2, 1, 2], &[2, 1, 2, 1]),
        (&[0, 2], &[2, 0]),
    ];
    let mut relations_ok = true;
    for (lhs, rhs) in relations {
        let l: Vec<(usize, bool)> = lhs.iter().map(|&x| (x, false)).collect();
        let r: Vec<(usize, bool)> = rhs.iter().map(|&x| (x, false)).collect();
        relations_ok &=
            phi(&b3, &a5, &b3.from_signed_word(&l)) == phi(&b3, &a5, &b3.from_signed_word(&r));
    }
    s.check(relations_ok, "all three defining relations map to equal elements");

    let report = injectivity_sample(&b3, &a5, config.injectivity_len);
    s.note(format!(
        "{} positive elements, {} reduced fractions with parts of length <= {}",
        report.positive_elements, report.distinct_fractions, report.max_len
    ));
    s.check(report.collisions.is_empty(), "zero collisions");
    s
}

fn section_sigma(
    config: &VerifyConfig,
    a5: &ArtinSystem,
    a5_ball: &crate::artin::BallComplex,
) -> Section {
    let mut s = Section::new("sigma");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    let mut involution_ok = true;
    for _ in 0..1000 {
        let len = rng.gen_range(0..5);
        let word: Vec<(usize, bool)> = (0..len)
            .map(|_| (rng.gen_range(0..5), rng.gen_bool(0.5)))
            .collect();
        let g = a5.from_signed_word(&word);
        involution_ok &= sigma(a5, &sigma(a5, &g)) == g;
    }
    for c in &a5_ball.classes {
        let (s1, t1) = sigma_vertex(a5, &c.rep, c.type_index);
        let (s2, t2) = sigma_vertex(a5, &s1, t1);
        involution_ok &= t2 == c.type_index && crate::artin::coset_equal(a5, &s2, &c.rep, t2);
    }
    s.check(involution_ok, "involution on 1000 samples and all ball vertices");

    let mut checker = BallChecker::new(a5, a5_ball, config.search_radius.min(3));
    let n = a5_ball.classes.len();
    let mut pairs = 0usize;
    let mut reversal_ok = true;
    for v in 0..n {
        for w in 0..n {
            if v == w {
                continue;
            }
            if let PosetAnswer::Yes(witness) = checker.poset_leq(v, w) {
                let sw = sigma(a5, &witness);
                let (srep_v, jt_v) =
                    sigma_vertex(a5, &a5_ball.classes[v].rep, a5_ball.classes[v].type_index);
                let (srep_w, jt_w) =
                    sigma_vertex(a5, &a5_ball.classes[w].rep, a5_ball.classes[w].type_index);
                reversal_ok &= jt_w <= jt_v
                    && crate::artin::coset_equal(a5, &sw, &srep_v, jt_v)
                    && crate::artin::coset_equal(a5, &sw, &srep_w, jt_w);
                pairs += 1;
            }
        }
    }
    s.note(format!("{pairs} witnessed comparable pairs"));
    s.check(reversal_ok, "order reversal on every witnessed pair");
    s
}

fn section_lessiffimage(
    config: &VerifyConfig,
    b3: &ArtinSystem,
    a5: &ArtinSystem,
    a5_ball: &crate::artin::BallComplex,
) -> Section {
    let mut s = Section::new("lessiffimage");
    let b3_ball = build_ball(b3, 2);
    let mut forward_ok = true;
    for c in &b3_ball.classes {
        forward_ok &= lessiffimage_forward(b3, a5, &c.rep, c.type_index);
    }
    s.note(format!(
        "forward over {} radius-2 vertex classes",
        b3_ball.classes.len()
    ));
    s.check(forward_ok, "every psi-image satisfies v <= sigma(v), witnessed");

    let preimage_ball = build_ball(b3, config.radius_b3.min(3));
    let mut consistent = 0usize;
    let mut violations = 0usize;
    for class in 0..a5_ball.classes.len() {
        match lessiffimage_reverse(b3, a5, a5_ball, &preimage_ball, class, config.search_radius) {
            ReverseOutcome::Consistent => consistent += 1,
            ReverseOutcome::Inconclusive => s.inconclusive += 1,
            ReverseOutcome::Violation => violations += 1,
        }
    }
    s.note(format!(
        "reverse: {consistent} consistent, {} inconclusive",
        s.inconclusive
    ));
    s.check(violations == 0, "zero definite reverse counterexamples");
    s
}

fn section_joins(config: &VerifyConfig, checker: &mut BallChecker) -> Section {
    let mut s = Section::new("joins");
    let ball = checker.ball();
    let harvest_radius = config.radius_b3;

    // Harvest pairwise-upper-bounded sets from the radius-r part of the ball:
    // the vertex triples of chambers (trivially bounded), the s^1 pairs of
    // every interior square (bounded by the two s^3 corners), and the s^1
    // triples of star-hexagons (bounded pairwise by s^3 vertices).
    let mut sets: Vec<Vec<usize>> = Vec::new();
    let visible: Vec<usize> = (0..ball.classes.len())
        .filter(|&c| ball.classes[c].min_chamber_len <= harvest_radius)
        .collect();
    let complex = ball.to_typed_complex();
    let names = ball.class_by_name();
    let interior: BTreeSet<String> = ball
        .interior_classes(harvest_radius)
        .iter()
        .map(|&c| ball.class_name(c))
        .collect();
    let squares = complex
        .embedded_cycles_within(
            &crate::checker::pattern_4cycle(),
            10_000,
            false,
            Some(&interior),
        )
        .unwrap();
    for sq in &squares {
        let cls: Vec<usize> = sq.vertices.iter().map(|v| names[&v.clone()]).collect();
        let s1s: Vec<usize> = cls
            .iter()
            .copied()
            .filter(|&c| ball.classes[c].type_index == 1)
            .collect();
        sets.push(s1s);
    }
    let hexes = complex
        .embedded_cycles_within(
            &crate::checker::pattern_6cycle(),
            200,
            false,
            Some(&interior),
        )
        .unwrap();
    for hx in hexes.iter().take(20) {
        let cls: Vec<usize> = hx.vertices.iter().map(|v| names[&v.clone()]).collect();
        let s1s: Vec<usize> = cls
            .iter()
            .copied()
            .filter(|&c| ball.classes[c].type_index == 1)
            .collect();
        sets.push(s1s);
    }
    // Comparable pairs from chambers.
    for ci in (0..ball.chambers.len()).step_by(7) {
        if ball.chamber_len[ci] <= harvest_radius {
            let row = &ball.chamber_classes[ci];
            sets.push(vec![row[0], row[1]]);
            sets.push(vec![row[0], row[2]]);
        }
    }
    // Seeded random same-chamber-free pairs that happen to be upper bounded.
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x6a01);
    while sets.len() < config.join_sets * 2 && !visible.is_empty() {
        let a = visible[rng.gen_range(0..visible.len())];
        let b = visible[rng.gen_range(0..visible.len())];
        if a != b {
            sets.push(vec![a, b]);
        }
    }

    // Keep the first `join_sets` sets that are genuinely pairwise upper
    // bounded within the ambient ball.
    let mut used = 0usize;
    let mut joins = 0usize;
    let mut no_upper = 0usize;
    let mut violations = 0usize;
    for set in sets {
        if used >= config.join_sets {
            break;
        }
        let pairwise = {
            let mut ok = true;
            'outer: for (k, &x) in set.iter().enumerate() {
                for &y in set.iter().skip(k + 1) {
                    let bounded = (0..checker.ball().classes.len()).any(|u| {
                        checker.poset_leq(x, u).is_yes() && checker.poset_leq(y, u).is_yes()
                    });
                    if !bounded {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            ok
        };
        if !pairwise {
            continue;
        }
        used += 1;
        match join_in_ball_cached(checker, &set) {
            JoinOutcome::Join(_) => joins += 1,
            JoinOutcome::NoUpperBound => no_upper += 1,
            JoinOutcome::Inconclusive => s.inconclusive += 1,
            JoinOutcome::Violation(a, b) => {
                violations += 1;
                s.note(format!("incomparable minimal upper bounds: {a} vs {b}"));
            }
        }
    }
    s.note(format!(
        "{used} upper-bounded sets: {joins} joins found, {no_upper} without visible upper bound, {} inconclusive",
        s.inconclusive
    ));
    s.check(used > 0 && joins > 0, "joins are found for harvested sets");
    s.check(violations == 0, "zero incomparable minimal upper bounds");
    s
}

fn section_ball_conditions(config: &VerifyConfig, checker: &mut BallChecker) -> Section {
    let mut s = Section::new("ball-conditions");
    let report = checker.check_conditions(config.radius_b3);
    s.note(format!(
        "radius {} interior: {} classes; cycles found (4/6/8): {:?}",
        config.radius_b3, report.interior_classes, report.cycles_found
    ));
    s.check(
        report.s2_cross_pairs_certified > 0 && report.disconnected_links.is_empty(),
        "interior links nonempty and connected; s^2 cross pairs certified with explicit chambers",
    );
    s.note(format!(
        "condition (3): {} cross pairs certified, zero missing",
        report.s2_cross_pairs_certified
    ));
    s.check(
        report.girth_s1_violations.is_empty(),
        "no visible s^1-link cycle shorter than 8",
    );
    s.check(
        report.girth_s3_violations.is_empty(),
        "no visible s^3-link cycle shorter than 6",
    );
    s.check(
        report.cycles_found[0] > 0,
        "interior pattern-(a) squares exist",
    );
    s.check(
        report.unfilled_cycles.is_empty(),
        "every interior chord-free pattern cycle is filled",
    );
    s.check(
        report.bad_10_cycles.is_empty(),
        "zero embedded alternating 10-cycles among interior vertices",
    );
    s
}

fn section_jingyin(
    config: &VerifyConfig,
    a5: &ArtinSystem,
    a5_ball: &crate::artin::BallComplex,
) -> Section {
    let mut s = Section::new("jingyin");
    let mut checker = BallChecker::new(a5, a5_ball, config.search_radius.min(3));
    let t3: Vec<usize> = (0..a5_ball.classes.len())
        .filter(|&c| a5_ball.classes[c].type_index == 3)
        .collect();
    // Harvest triples with pairwise lower bounds of type 2 or 3.
    let lower_bounded = |checker: &mut BallChecker, x: usize, y: usize| -> bool {
        let n = checker.ball().classes.len();
        (0..n).any(|l| {
            let t = checker.ball().classes[l].type_index;
            (t == 2 || t == 3) && checker.poset_leq(l, x).is_yes() && checker.poset_leq(l, y).is_yes()
        })
    };
    let mut consistent = 0usize;
    let mut tried = 0usize;
    'outer: for (i, &a) in t3.iter().enumerate() {
        for (j, &b) in t3.iter().enumerate().skip(i) {
            for &c in t3.iter().skip(j) {
                if tried >= 20 {
                    break 'outer;
                }
                if lower_bounded(&mut checker, a, b)
                    && lower_bounded(&mut checker, b, c)
                    && lower_bounded(&mut checker, a, c)
                {
                    tried += 1;
                    match check_jingyin_instance(a5, a5_ball, [a, b, c], config.search_radius.min(3))
                    {
                        JingyinOutcome::Consistent { .. } => consistent += 1,
                        JingyinOutcome::Inconclusive => s.inconclusive += 1,
                    }
                }
            }
        }
    }
    s.note(format!(
        "{tried} harvested triples: {consistent} with a common lower bound, {} inconclusive",
        s.inconclusive
    ));
    s.check(tried > 0 && consistent > 0, "common lower bounds are found");
    s
}

fn section_development() -> Section {
    let mut s = Section::new("development");
    let sphere = B3Sphere::build().unwrap();
    let center = sphere
        .complex
        .vertex_ids()
        .into_iter()
        .find(|v| sphere.complex.vertex_type(v) == Some(VertexType::S2))
        .unwrap();
    let (angle, closes) = develop_around_vertex(&sphere.complex, &sphere, &center, 0).unwrap();
    s.check(
        (angle - 2.0 * PI).abs() < TOL_GEOMETRY && closes,
        "the 4-quad gallery develops with total angle 2 pi and closes up",
    );

    let paths = lune_boundaries(&sphere, VertexType::S1).unwrap();
    let types_of = |p: &crate::complex::EdgePath| -> Vec<usize> {
        p.vertices
            .iter()
            .map(|v| sphere.complex.vertex_type(v).unwrap().index())
            .collect()
    };
    s.check(
        paths.iter().any(|p| types_of(p) == vec![1, 3, 2, 3, 1]),
        "lune boundary of length 2(alpha+beta) = pi",
    );
    s.check(
        paths.iter().any(|p| types_of(p) == vec![1, 2, 1, 2, 1]),
        "lune boundary of length 4 delta = pi",
    );

    let map = sphere.antipodal_vertex_map().unwrap();
    s.check(
        map.len() == 26
            && map
                .iter()
                .all(|(v, w)| sphere.complex.vertex_type(v) == sphere.complex.vertex_type(w)),
        "antipodal map preserves vertex types on all 26 vertices",
    );
    s
}

fn section_fixtures() -> Section {
    let mut s = Section::new("negative-fixtures");
    let cases: [(&str, TypedComplex, usize); 3] = [
        ("bad-girth", fixture_bad_girth(), 2),
        ("bad-bipartite", fixture_bad_bipartite(), 3),
        ("unfilled-square", fixture_unfilled_square(), 5),
    ];
    for (name, complex, expected) in cases {
        let report = check_cat1_criteria(&complex, &CheckOptions::default());
        let mut exact = report.valid;
        for n in 1..=6 {
            let want = if n == expected {
                ConditionStatus::Fail
            } else {
                ConditionStatus::Pass
            };
            exact &= report.condition(n).status == want;
        }
        let witnessed = if expected == 5 {
            !report.condition(expected).witness_cycles.is_empty()
        } else {
            !report.condition(expected).witness_vertices.is_empty()
        };
        s.check(
            exact && witnessed,
            &format!("{name} fails exactly condition ({expected}) with a witness"),
        );
    }
    s
}

/// Renders a report as stable human-readable text.
pub fn render_text(report: &VerifyReport) -> String {
    let mut out = String::new();
    for section in &report.sections {
        let status = if section.pass { "pass" } else { "FAIL" };
        out.push_str(&format!("[{status}] {}\n", section.name));
        for d in &section.details {
            out.push_str(&format!("    {d}\n"));
        }
        if section.inconclusive > 0 {
            out.push_str(&format!("    ({} inconclusive)\n", section.inconclusive));
        }
    }
    out.push_str(&format!(
        "overall: {}\n",
        if report.all_pass { "pass" } else { "FAIL" }
    ));
    out
}
