//! Finite Coxeter groups from Coxeter-Dynkin diagrams.
//!
//! Elements are stored as matrices of the reflection representation with exact
//! entries in `Z[sqrt(2)]` (supported edge labels are 2, 3 and 4, which covers
//! the `A_n` and `B_n` families used here). Exact entries make element equality
//! and hashing safe; every derived table (lengths, descents, multiplication) is
//! computed once at enumeration time and queried in O(1) afterwards.

use std::collections::HashMap;

use thiserror::Error;

use crate::complex::{TypedComplex, VertexType};
use crate::sphere::SpherePoint;

/// Default cap on group enumeration; `A_5` needs 720, `B_3` needs 48.
pub const DEFAULT_GROUP_CAP: usize = 10_000;

#[derive(Debug, Error, PartialEq)]
pub enum CoxeterError {
    #[error("edge label m({i},{j}) = {m} is not supported (need 2, 3 or 4)")]
    UnsupportedLabel { i: usize, j: usize, m: u32 },
    #[error("group enumeration exceeded the cap of {cap} elements; diagram is not spherical or too large")]
    CapExceeded { cap: usize },
    #[error("diagram has rank {rank}, but this operation needs rank 3")]
    RankNotThree { rank: usize },
    #[error("unknown diagram name {0:?}")]
    UnknownDiagram(String),
}

/// Exact scalar `a + b*sqrt(2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Zr2 {
    pub a: i64,
    pub b: i64,
}

impl Zr2 {
    pub const ZERO: Zr2 = Zr2 { a: 0, b: 0 };
    pub const ONE: Zr2 = Zr2 { a: 1, b: 0 };
    pub const SQRT2: Zr2 = Zr2 { a: 0, b: 1 };

    fn add(self, o: Zr2) -> Zr2 {
        Zr2 {
            a: self.a + o.a,
            b: self.b + o.b,
        }
    }

    fn mul(self, o: Zr2) -> Zr2 {
        Zr2 {
            a: self.a * o.a + 2 * self.b * o.b,
            b: self.a * o.b + self.b * o.a,
        }
    }

    pub fn to_f64(self) -> f64 {
        self.a as f64 + self.b as f64 * std::f64::consts::SQRT_2
    }
}

/// Dense square matrix over `Z[sqrt(2)]`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Matrix {
    n: usize,
    data: Vec<Zr2>,
}

impl Matrix {
    fn identity(n: usize) -> Matrix {
        let mut data = vec![Zr2::ZERO; n * n];
        for i in 0..n {
            data[i * n + i] = Zr2::ONE;
        }
        Matrix { n, data }
    }

    fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.n;
        let mut data = vec![Zr2::ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let s = self.data[i * n + k];
                if s == Zr2::ZERO {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] = data[i * n + j].add(s.mul(other.data[k * n + j]));
                }
            }
        }
        Matrix { n, data }
    }
}

/// A Coxeter-Dynkin diagram: ordered generator names plus symmetric edge
/// labels `m(s,t) >= 2` (2 encodes "no edge").
#[derive(Debug, Clone)]
pub struct CoxeterDiagram {
    names: Vec<String>,
    labels: Vec<Vec<u32>>,
}

impl CoxeterDiagram {
    pub fn new(names: Vec<String>, edges: &[(usize, usize, u32)]) -> CoxeterDiagram {
        let n = names.len();
        let mut labels = vec![vec![2u32; n]; n];
        for &(i, j, m) in edges {
            assert!(i != j && i < n && j < n && m >= 2, "bad edge ({i},{j},{m})");
            labels[i][j] = m;
            labels[j][i] = m;
        }
        CoxeterDiagram { names, labels }
    }

    /// Linear diagram `t_1 - t_2 - ... - t_n` with all labels 3.
    pub fn type_a(n: usize) -> CoxeterDiagram {
        let names = (1..=n).map(|i| format!("t{i}")).collect();
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1, 3)).collect();
        CoxeterDiagram::new(names, &edges)
    }

    /// Linear diagram `s_1 - ... - s_{n-1} =4= s_n`: all labels 3 except
    /// `m(s_{n-1}, s_n) = 4`.
    pub fn type_b(n: usize) -> CoxeterDiagram {
        assert!(n >= 2);
        let names = (1..=n).map(|i| format!("s{i}")).collect();
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1, 3)).collect();
        edges.last_mut().unwrap().2 = 4;
        CoxeterDiagram::new(names, &edges)
    }

    /// Looks up a built-in diagram by name (`A1`..`A5`, `B2`, `B3`).
    pub fn builtin(name: &str) -> Result<CoxeterDiagram, CoxeterError> {
        match name {
            "A1" => Ok(CoxeterDiagram::type_a(1)),
            "A2" => Ok(CoxeterDiagram::type_a(2)),
            "A3" => Ok(CoxeterDiagram::type_a(3)),
            "A4" => Ok(CoxeterDiagram::type_a(4)),
            "A5" => Ok(CoxeterDiagram::type_a(5)),
            "B2" => Ok(CoxeterDiagram::type_b(2)),
            "B3" => Ok(CoxeterDiagram::type_b(3)),
            _ => Err(CoxeterError::UnknownDiagram(name.to_string())),
        }
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn label(&self, i: usize, j: usize) -> u32 {
        self.labels[i][j]
    }

    pub fn generator_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Generator matrix in the reflection representation: the identity except
    /// row `i`, which holds `2 cos(pi/m(i,j))` off-diagonal and `-1` on the
    /// diagonal.
    fn generator_matrix(&self, i: usize) -> Result<Matrix, CoxeterError> {
        let n = self.rank();
        let mut m = Matrix::identity(n);
        for j in 0..n {
            m.data[i * n + j] = if i == j {
                Zr2 { a: -1, b: 0 }
            } else {
                match self.labels[i][j] {
                    2 => Zr2::ZERO,
                    3 => Zr2::ONE,
                    4 => Zr2::SQRT2,
                    other => {
                        return Err(CoxeterError::UnsupportedLabel { i, j, m: other });
                    }
                }
            };
        }
        Ok(m)
    }
}

/// Index of a group element inside its enumerated [`CoxeterGroup`].
pub type ElemId = u16;

/// A subset of generators, as a bitmask. `ParabolicHandle` names the standard
/// parabolic subgroup it generates; maximal handles are written `hat(s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParabolicHandle(pub u32);

impl ParabolicHandle {
    pub fn from_indices(indices: &[usize]) -> ParabolicHandle {
        ParabolicHandle(indices.iter().fold(0, |acc, &i| acc | (1 << i)))
    }

    /// The maximal handle `hat(s_i)`: every generator except index `deleted`.
    pub fn maximal(rank: usize, deleted: usize) -> ParabolicHandle {
        ParabolicHandle(((1u32 << rank) - 1) & !(1 << deleted))
    }

    pub fn contains(&self, gen: usize) -> bool {
        self.0 & (1 << gen) != 0
    }

    pub fn is_subset_of_mask(mask: u32, of: ParabolicHandle) -> bool {
        mask & !of.0 == 0
    }
}

/// A fully enumerated finite Coxeter group with O(1) arithmetic tables.
pub struct CoxeterGroup {
    diagram: CoxeterDiagram,
    /// Exact matrices, indexed by element id; id 0 is the identity.
    elements: Vec<Matrix>,
    /// `right_mul[g][s]` = id of `g * s`.
    right_mul: Vec<Vec<ElemId>>,
    /// Flattened full multiplication table, `mult[a * n + b]` = id of `a * b`.
    mult_table: Vec<ElemId>,
    inverse: Vec<ElemId>,
    length: Vec<u16>,
    /// One reduced word per element (generator indices), from the BFS.
    word: Vec<Vec<u8>>,
    /// Bitmask of generators used by the reduced word (independent of the word).
    support: Vec<u32>,
    left_descent: Vec<u32>,
    right_descent: Vec<u32>,
    longest: ElemId,
}

impl CoxeterGroup {
    /// Breadth-first enumeration of the group with matrix canonicalization.
    /// Fails if the diagram has an unsupported label or more than `cap`
    /// elements are produced (non-spherical or oversized diagram).
    pub fn enumerate_with_cap(
        diagram: &CoxeterDiagram,
        cap: usize,
    ) -> Result<CoxeterGroup, CoxeterError> {
        let rank = diagram.rank();
        let gens: Vec<Matrix> = (0..rank)
            .map(|i| diagram.generator_matrix(i))
            .collect::<Result<_, _>>()?;

        let mut elements = vec![Matrix::identity(rank)];
        let mut index: HashMap<Matrix, ElemId> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut length = vec![0u16];
        let mut word: Vec<Vec<u8>> = vec![vec![]];
        let mut right_mul: Vec<Vec<ElemId>> = vec![];

        let mut head = 0usize;
        while head < elements.len() {
            let mut row = Vec::with_capacity(rank);
            for (s, gen) in gens.iter().enumerate() {
                let product = elements[head].mul(gen);
                let id = match index.get(&product) {
                    Some(&id) => id,
                    None => {
                        if elements.len() >= cap {
                            return Err(CoxeterError::CapExceeded { cap });
                        }
                        let id = elements.len() as ElemId;
                        index.insert(product.clone(), id);
                        elements.push(product);
                        length.push(length[head] + 1);
                        let mut w = word[head].clone();
                        w.push(s as u8);
                        word.push(w);
                        id
                    }
                };
                row.push(id);
            }
            right_mul.push(row);
            head += 1;
        }

        let n = elements.len();

        // Full multiplication table by folding reduced words.
        let mut mult_table = vec![0 as ElemId; n * n];
        for a in 0..n {
            for b in 0..n {
                let mut acc = a as ElemId;
                for &s in &word[b] {
                    acc = right_mul[acc as usize][s as usize];
                }
                mult_table[a * n + b] = acc;
            }
        }

        let mut inverse = vec![0 as ElemId; n];
        for a in 0..n {
            let mut acc = 0 as ElemId;
            for &s in word[a].iter().rev() {
                acc = right_mul[acc as usize][s as usize];
            }
            inverse[a] = acc;
        }

        let mut support = vec![0u32; n];
        for a in 0..n {
            support[a] = word[a].iter().fold(0, |acc, &s| acc | (1 << s));
        }

        let mut left_descent = vec![0u32; n];
        let mut right_descent = vec![0u32; n];
        for a in 0..n {
            for s in 0..rank {
                if length[right_mul[a][s] as usize] < length[a] {
                    right_descent[a] |= 1 << s;
                }
                let sa = mult_table[(right_mul[0][s] as usize) * n + a];
                if length[sa as usize] < length[a] {
                    left_descent[a] |= 1 << s;
                }
            }
        }

        let longest = (0..n).max_by_key(|&a| length[a]).unwrap() as ElemId;

        Ok(CoxeterGroup {
            diagram: diagram.clone(),
            elements,
            right_mul,
            mult_table,
            inverse,
            length,
            word,
            support,
            left_descent,
            right_descent,
            longest,
        })
    }

    pub fn enumerate(diagram: &CoxeterDiagram) -> Result<CoxeterGroup, CoxeterError> {
        CoxeterGroup::enumerate_with_cap(diagram, DEFAULT_GROUP_CAP)
    }

    pub fn diagram(&self) -> &CoxeterDiagram {
        &self.diagram
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn identity(&self) -> ElemId {
        0
    }

    /// Id of generator `s` as a group element.
    pub fn generator(&self, s: usize) -> ElemId {
        self.right_mul[0][s]
    }

    pub fn mult(&self, a: ElemId, b: ElemId) -> ElemId {
        self.mult_table[a as usize * self.elements.len() + b as usize]
    }

    pub fn inv(&self, a: ElemId) -> ElemId {
        self.inverse[a as usize]
    }

    pub fn len(&self, a: ElemId) -> usize {
        self.length[a as usize] as usize
    }

    /// A reduced word for `a` (generator indices).
    pub fn reduced_word(&self, a: ElemId) -> &[u8] {
        &self.word[a as usize]
    }

    /// Bitmask of the generators appearing in any reduced word of `a`.
    pub fn support_mask(&self, a: ElemId) -> u32 {
        self.support[a as usize]
    }

    pub fn left_descent_mask(&self, a: ElemId) -> u32 {
        self.left_descent[a as usize]
    }

    pub fn right_descent_mask(&self, a: ElemId) -> u32 {
        self.right_descent[a as usize]
    }

    /// The longest element `w_0`.
    pub fn longest_element(&self) -> ElemId {
        self.longest
    }

    /// Prefix (left-divisibility) order: `a <= b` iff `l(a) + l(a^{-1} b) = l(b)`.
    pub fn weak_order_leq(&self, a: ElemId, b: ElemId) -> bool {
        self.len(a) + self.len(self.mult(self.inv(a), b)) == self.len(b)
    }

    /// Least upper bound in the prefix order. Exists for any pair in a finite
    /// Coxeter group; verified least among all upper bounds.
    pub fn lattice_join(&self, a: ElemId, b: ElemId) -> ElemId {
        let uppers: Vec<ElemId> = (0..self.order() as ElemId)
            .filter(|&c| self.weak_order_leq(a, c) && self.weak_order_leq(b, c))
            .collect();
        let &j = uppers
            .iter()
            .min_by_key(|&&c| self.len(c))
            .expect("w_0 is always an upper bound");
        for &c in &uppers {
            assert!(
                self.weak_order_leq(j, c),
                "prefix order is not a lattice here: join of {a} and {b} is not unique"
            );
        }
        j
    }

    /// Greatest lower bound in the prefix order.
    pub fn lattice_meet(&self, a: ElemId, b: ElemId) -> ElemId {
        let lowers: Vec<ElemId> = (0..self.order() as ElemId)
            .filter(|&c| self.weak_order_leq(c, a) && self.weak_order_leq(c, b))
            .collect();
        let &m = lowers
            .iter()
            .max_by_key(|&&c| self.len(c))
            .expect("identity is always a lower bound");
        for &c in &lowers {
            assert!(
                self.weak_order_leq(c, m),
                "prefix order is not a lattice here: meet of {a} and {b} is not unique"
            );
        }
        m
    }

    /// All elements of the standard parabolic subgroup `W(handle)`, i.e. those
    /// whose support lies inside the handle.
    pub fn parabolic_elements(&self, handle: ParabolicHandle) -> Vec<ElemId> {
        (0..self.order() as ElemId)
            .filter(|&g| ParabolicHandle::is_subset_of_mask(self.support_mask(g), handle))
            .collect()
    }

    /// The unique minimal-length representative of the coset `g W(handle)`.
    pub fn min_coset_rep(&self, g: ElemId, handle: ParabolicHandle) -> ElemId {
        let mut best = g;
        for p in self.parabolic_elements(handle) {
            let cand = self.mult(g, p);
            if self.len(cand) < self.len(best) {
                best = cand;
            }
        }
        best
    }

    /// Longest element of the parabolic `W(handle)`.
    pub fn parabolic_longest(&self, handle: ParabolicHandle) -> ElemId {
        *self
            .parabolic_elements(handle)
            .iter()
            .max_by_key(|&&g| self.len(g))
            .unwrap()
    }
}

/// Geometric data for a rank-3 Coxeter complex realized on the unit sphere.
pub struct ComplexGeometry {
    /// Unit-sphere coordinate per vertex, in vertex order of the complex.
    pub coords: Vec<SpherePoint>,
    /// For each chamber (triangle index = element id), the element's orthogonal
    /// matrix, row-major 3x3.
    pub chamber_matrices: Vec<[f64; 9]>,
}

/// The Coxeter complex `C(Gamma)` of a spherical rank-3 diagram, as a typed
/// complex: vertices are cosets of the maximal parabolics `hat(s_i)` (typed by
/// `i`), triangles are the chambers `g`.
///
/// Returns the complex, the per-type coset representatives defining the vertex
/// ids, and unit-sphere geometry.
pub fn build_coxeter_complex(
    group: &CoxeterGroup,
) -> Result<(TypedComplex, Vec<Vec<ElemId>>, ComplexGeometry), CoxeterError> {
    let rank = group.rank();
    if rank != 3 {
        return Err(CoxeterError::RankNotThree { rank });
    }

    // Vertex classes per type: minimal coset representatives in id order.
    let handles: Vec<ParabolicHandle> = (0..3).map(|i| ParabolicHandle::maximal(3, i)).collect();
    let mut reps: Vec<Vec<ElemId>> = vec![vec![]; 3];
    let mut rep_index: Vec<HashMap<ElemId, usize>> = vec![HashMap::new(); 3];
    let mut chamber_vertices: Vec<[usize; 3]> = Vec::with_capacity(group.order());
    for g in 0..group.order() as ElemId {
        let mut tri = [0usize; 3];
        for i in 0..3 {
            let rep = group.min_coset_rep(g, handles[i]);
            let k = *rep_index[i].entry(rep).or_insert_with(|| {
                reps[i].push(rep);
                reps[i].len() - 1
            });
            tri[i] = k;
        }
        chamber_vertices.push(tri);
    }

    let mut complex = TypedComplex::new();
    for (i, list) in reps.iter().enumerate() {
        for k in 0..list.len() {
            complex.add_vertex(&vertex_id(i, k), VertexType::from_index(i + 1));
        }
    }
    for tri in &chamber_vertices {
        complex.add_triangle(
            &vertex_id(0, tri[0]),
            &vertex_id(1, tri[1]),
            &vertex_id(2, tri[2]),
        );
    }

    let geometry = complex_geometry(group, &reps)?;
    Ok((complex, reps, geometry))
}

/// Vertex id string for the `k`-th coset of type index `i` (0-based).
pub fn vertex_id(type_index0: usize, k: usize) -> String {
    format!("s{}_{}", type_index0 + 1, k)
}

/// Mirror normals, fundamental-chamber vertices and per-element orthogonal
/// matrices for a spherical rank-3 group, from the Gram matrix of the diagram.
fn complex_geometry(
    group: &CoxeterGroup,
    reps: &[Vec<ElemId>],
) -> Result<ComplexGeometry, CoxeterError> {
    let d = group.diagram();
    let gram = |i: usize, j: usize| -> f64 {
        if i == j {
            1.0
        } else {
            -(std::f64::consts::PI / d.label(i, j) as f64).cos()
        }
    };

    // Cholesky factorization of the Gram matrix; rows are the mirror normals.
    // Positive definiteness holds exactly when the diagram is spherical.
    let mut normals = [[0.0f64; 3]; 3];
    for i in 0..3 {
        for j in 0..=i {
            let (row_i, row_j) = (normals[i], normals[j]);
            let dot: f64 = row_i.iter().zip(&row_j).take(j).map(|(a, b)| a * b).sum();
            let sum = gram(i, j) - dot;
            if i == j {
                assert!(sum > 0.0, "non-spherical rank-3 diagram slipped through");
                normals[i][i] = sum.sqrt();
            } else {
                normals[i][j] = sum / normals[j][j];
            }
        }
    }

    // Fundamental vertex of type i: unit vector orthogonal to the other two
    // normals, positive against normal i (cross product of the other normals).
    let cross = |u: [f64; 3], v: [f64; 3]| -> [f64; 3] {
        [
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        ]
    };
    let dot = |u: [f64; 3], v: [f64; 3]| -> f64 { u[0] * v[0] + u[1] * v[1] + u[2] * v[2] };
    let mut fundamental = [[0.0f64; 3]; 3];
    for i in 0..3 {
        let (j, k) = match i {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let mut v = cross(normals[j], normals[k]);
        let norm = dot(v, v).sqrt();
        for c in &mut v {
            *c /= norm;
        }
        if dot(v, normals[i]) < 0.0 {
            for c in &mut v {
                *c = -*c;
            }
        }
        fundamental[i] = v;
    }

    // Reflection matrices R_i = I - 2 n_i n_i^T, multiplied along reduced words.
    let reflections: Vec<[f64; 9]> = (0..3)
        .map(|i| {
            let n = normals[i];
            let mut m = [0.0f64; 9];
            for r in 0..3 {
                for c in 0..3 {
                    m[r * 3 + c] = if r == c { 1.0 } else { 0.0 };
                    m[r * 3 + c] -= 2.0 * n[r] * n[c];
                }
            }
            m
        })
        .collect();
    let mat_mul = |a: &[f64; 9], b: &[f64; 9]| -> [f64; 9] {
        let mut m = [0.0f64; 9];
        for r in 0..3 {
            for c in 0..3 {
                for k in 0..3 {
                    m[r * 3 + c] += a[r * 3 + k] * b[k * 3 + c];
                }
            }
        }
        m
    };
    let identity = {
        let mut m = [0.0f64; 9];
        m[0] = 1.0;
        m[4] = 1.0;
        m[8] = 1.0;
        m
    };
    let mut chamber_matrices = Vec::with_capacity(group.order());
    for g in 0..group.order() as ElemId {
        let mut m = identity;
        for &s in group.reduced_word(g) {
            m = mat_mul(&m, &reflections[s as usize]);
        }
        chamber_matrices.push(m);
    }

    let apply = |m: &[f64; 9], v: [f64; 3]| -> SpherePoint {
        SpherePoint::normalized(
            m[0] * v[0] + m[1] * v[1] + m[2] * v[2],
            m[3] * v[0] + m[4] * v[1] + m[5] * v[2],
            m[6] * v[0] + m[7] * v[1] + m[8] * v[2],
        )
    };

    let mut coords = Vec::new();
    for (i, list) in reps.iter().enumerate() {
        for &rep in list {
            coords.push(apply(&chamber_matrices[rep as usize], fundamental[i]));
        }
    }
    Ok(ComplexGeometry {
        coords,
        chamber_matrices,
    })
}
