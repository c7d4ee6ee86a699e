//! Spherical geometry of the `B_3` simplex and of piecewise-geodesic paths on
//! the unit 2-sphere.
//!
//! All lengths are arc lengths in radians on the unit sphere. Analytic
//! identities (`alpha + beta = pi/2`, `delta = pi/4`) hold to 1e-12; lengths of
//! constructed coordinates are trusted to 1e-9.

use std::f64::consts::PI;

use thiserror::Error;

/// Tolerance for analytic identities between the simplex constants.
pub const TOL_ANALYTIC: f64 = 1e-12;
/// Tolerance for geometric quantities computed from constructed coordinates.
pub const TOL_GEOMETRY: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum SphereError {
    #[error("point is not on the unit sphere (|p|^2 = {norm2})")]
    NotUnit { norm2: f64 },
    #[error("angles {a} + {b} + {c} do not exceed pi: not a spherical triangle")]
    DegenerateTriangle { a: f64, b: f64, c: f64 },
    #[error("a path needs at least two points")]
    TooFewPoints,
}

/// A point on the unit 2-sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpherePoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl SpherePoint {
    /// Builds a point, rejecting vectors that are off the unit sphere by more
    /// than 1e-9 in squared norm.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self, SphereError> {
        let p = SpherePoint { x, y, z };
        let n2 = p.dot(&p);
        if (n2 - 1.0).abs() > TOL_GEOMETRY {
            return Err(SphereError::NotUnit { norm2: n2 });
        }
        Ok(p)
    }

    /// Normalizes an arbitrary nonzero vector onto the sphere.
    pub fn normalized(x: f64, y: f64, z: f64) -> Self {
        let n = (x * x + y * y + z * z).sqrt();
        SpherePoint {
            x: x / n,
            y: y / n,
            z: z / n,
        }
    }

    pub fn dot(&self, other: &SpherePoint) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// The antipodal point `-p`.
    pub fn antipode(&self) -> SpherePoint {
        SpherePoint {
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }
}

/// Shape data of a spherical triangle: the three vertex angles and the three
/// opposite side lengths.
///
/// For the `B_3` simplex the vertices carry types `s^1`, `s^2`, `s^3` (hatted
/// generators) and the side opposite the type-`i` vertex is the edge `s_i`;
/// `len_s1 = alpha`, `len_s2 = beta`, `len_s3 = delta`.
#[derive(Debug, Clone, Copy)]
pub struct SimplexShape {
    pub angle_s1: f64,
    pub angle_s2: f64,
    pub angle_s3: f64,
    pub len_s1: f64,
    pub len_s2: f64,
    pub len_s3: f64,
}

impl SimplexShape {
    pub fn alpha(&self) -> f64 {
        self.len_s1
    }
    pub fn beta(&self) -> f64 {
        self.len_s2
    }
    pub fn delta(&self) -> f64 {
        self.len_s3
    }

    /// Side length for an edge of type `s_i`, `i` in `1..=3`.
    pub fn edge_len(&self, i: usize) -> f64 {
        match i {
            1 => self.len_s1,
            2 => self.len_s2,
            3 => self.len_s3,
            _ => panic!("edge type index {i} out of range"),
        }
    }
}

/// The shape of the spherical `B_3` simplex: angles `pi/4`, `pi/2`, `pi/3` and
/// side lengths `alpha = arccos(sqrt(2)/sqrt(3))`, `beta = arccos(1/sqrt(3))`,
/// `delta = arccos(1/sqrt(2)) = pi/4`.
pub fn b3_constants() -> SimplexShape {
    SimplexShape {
        angle_s1: PI / 4.0,
        angle_s2: PI / 2.0,
        angle_s3: PI / 3.0,
        len_s1: (2.0f64 / 3.0).sqrt().acos(),
        len_s2: (1.0f64 / 3.0).sqrt().acos(),
        len_s3: PI / 4.0,
    }
}

/// Side `a` of a spherical triangle from its three angles, via the polar law of
/// cosines: `cos a = (cos A + cos B cos C) / (sin B sin C)` with `a` opposite `A`.
pub fn side_from_angles(a: f64, b: f64, c: f64) -> Result<f64, SphereError> {
    if a + b + c <= PI {
        return Err(SphereError::DegenerateTriangle { a, b, c });
    }
    let cos_side = (a.cos() + b.cos() * c.cos()) / (b.sin() * c.sin());
    Ok(cos_side.clamp(-1.0, 1.0).acos())
}

/// Geodesic (great-circle) distance between two unit vectors, in `[0, pi]`.
pub fn geodesic_distance(p: &SpherePoint, q: &SpherePoint) -> Result<f64, SphereError> {
    for v in [p, q] {
        let n2 = v.dot(v);
        if (n2 - 1.0).abs() > TOL_GEOMETRY {
            return Err(SphereError::NotUnit { norm2: n2 });
        }
    }
    Ok(p.dot(q).clamp(-1.0, 1.0).acos())
}

/// Area of a spherical triangle by angular excess.
pub fn triangle_area(a: f64, b: f64, c: f64) -> Result<f64, SphereError> {
    if a + b + c <= PI {
        return Err(SphereError::DegenerateTriangle { a, b, c });
    }
    Ok(a + b + c - PI)
}

/// Total length of the piecewise-geodesic path through `points`.
pub fn path_length(points: &[SpherePoint]) -> Result<f64, SphereError> {
    if points.len() < 2 {
        return Err(SphereError::TooFewPoints);
    }
    let mut total = 0.0;
    for w in points.windows(2) {
        total += geodesic_distance(&w[0], &w[1])?;
    }
    Ok(total)
}

/// Spherical angle at vertex `at` between the arcs towards `p` and `q`.
pub fn angle_at(at: &SpherePoint, p: &SpherePoint, q: &SpherePoint) -> Result<f64, SphereError> {
    let a = geodesic_distance(p, q)?;
    let b = geodesic_distance(at, q)?;
    let c = geodesic_distance(at, p)?;
    let cos_angle = (a.cos() - b.cos() * c.cos()) / (b.sin() * c.sin());
    Ok(cos_angle.clamp(-1.0, 1.0).acos())
}
