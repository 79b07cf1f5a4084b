//! Exact sign predicates on rational points.
//!
//! `orient3d` is the workhorse: every linking number, crossing test and
//! circuit sign in this crate reduces to it. Integer inputs take an `i128`
//! fast path whose bounds guarantee no overflow; everything else falls back
//! to arbitrary-precision integers after clearing denominators (a positive
//! per-vector scaling, which cannot change any determinant sign).

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::Sign;
use crate::vec3::Vec3Q;

/// Coordinates below this bound make the 3x3 difference determinant safe in
/// `i128`: entries are at most `2^31`, so |det| <= 6 * 2^93 < 2^127.
const I128_SAFE_BOUND: i64 = 1 << 30;

/// Sign of `det [b-a, c-a, d-a]`.
///
/// `Zero` exactly when the four points are coplanar.
pub fn orient3d(a: &Vec3Q, b: &Vec3Q, c: &Vec3Q, d: &Vec3Q) -> Sign {
    if let (Some(pa), Some(pb), Some(pc), Some(pd)) = (
        a.as_int_triple(),
        b.as_int_triple(),
        c.as_int_triple(),
        d.as_int_triple(),
    ) {
        if small_enough(&[pa, pb, pc, pd]) {
            return orient3d_i128(pa, pb, pc, pd);
        }
    }
    orient3d_big(a, b, c, d)
}

fn small_enough(pts: &[(i64, i64, i64)]) -> bool {
    pts.iter()
        .all(|&(x, y, z)| x.abs() < I128_SAFE_BOUND && y.abs() < I128_SAFE_BOUND && z.abs() < I128_SAFE_BOUND)
}

fn orient3d_i128(a: (i64, i64, i64), b: (i64, i64, i64), c: (i64, i64, i64), d: (i64, i64, i64)) -> Sign {
    let (ux, uy, uz) = (
        (b.0 - a.0) as i128,
        (b.1 - a.1) as i128,
        (b.2 - a.2) as i128,
    );
    let (vx, vy, vz) = (
        (c.0 - a.0) as i128,
        (c.1 - a.1) as i128,
        (c.2 - a.2) as i128,
    );
    let (wx, wy, wz) = (
        (d.0 - a.0) as i128,
        (d.1 - a.1) as i128,
        (d.2 - a.2) as i128,
    );
    let det = ux * (vy * wz - vz * wy) - uy * (vx * wz - vz * wx) + uz * (vx * wy - vy * wx);
    Sign::of_i128(det)
}

fn orient3d_big(a: &Vec3Q, b: &Vec3Q, c: &Vec3Q, d: &Vec3Q) -> Sign {
    let u = b.sub(a).scaled_bigint_triple();
    let v = c.sub(a).scaled_bigint_triple();
    let w = d.sub(a).scaled_bigint_triple();
    let det: BigInt = &u[0] * (&v[1] * &w[2] - &v[2] * &w[1])
        - &u[1] * (&v[0] * &w[2] - &v[2] * &w[0])
        + &u[2] * (&v[0] * &w[1] - &v[1] * &w[0]);
    Sign::of_bigint(&det)
}

/// Sign of `det [q-p, r-p, dir]`: the 2D orientation of the projections of
/// `p`, `q`, `r` along `dir`, in the plane oriented by `dir`.
///
/// `Zero` exactly when the three projected points are collinear.
pub fn projected_orientation(p: &Vec3Q, q: &Vec3Q, r: &Vec3Q, dir: &Vec3Q) -> Sign {
    if let (Some(pp), Some(qq), Some(rr), Some(dd)) = (
        p.as_int_triple(),
        q.as_int_triple(),
        r.as_int_triple(),
        dir.as_int_triple(),
    ) {
        if small_enough(&[pp, qq, rr]) && small_enough(&[dd]) {
            let (ux, uy, uz) = (
                (qq.0 - pp.0) as i128,
                (qq.1 - pp.1) as i128,
                (qq.2 - pp.2) as i128,
            );
            let (vx, vy, vz) = (
                (rr.0 - pp.0) as i128,
                (rr.1 - pp.1) as i128,
                (rr.2 - pp.2) as i128,
            );
            let (wx, wy, wz) = (dd.0 as i128, dd.1 as i128, dd.2 as i128);
            let det =
                ux * (vy * wz - vz * wy) - uy * (vx * wz - vz * wx) + uz * (vx * wy - vy * wx);
            return Sign::of_i128(det);
        }
    }
    let u = q.sub(p).scaled_bigint_triple();
    let v = r.sub(p).scaled_bigint_triple();
    let w = dir.scaled_bigint_triple();
    let det: BigInt = &u[0] * (&v[1] * &w[2] - &v[2] * &w[1])
        - &u[1] * (&v[0] * &w[2] - &v[2] * &w[0])
        + &u[2] * (&v[0] * &w[1] - &v[1] * &w[0]);
    Sign::of_bigint(&det)
}

/// Outcome of the segment-through-triangle test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PierceResult {
    /// The open segment misses the open triangle disk.
    Miss,
    /// The open segment crosses the open disk; the sign is the side of the
    /// triangle plane the segment's first endpoint lies on.
    Pierce(Sign),
}

impl PierceResult {
    pub fn is_pierce(self) -> bool {
        matches!(self, PierceResult::Pierce(_))
    }
}

/// Does the open segment `pq` cross the open disk bounded by triangle `abc`?
///
/// Requires the five points in general position; any zero orientation among
/// the tests it needs is a `DegenerateInput` error, never tie-broken.
pub fn segment_pierces_triangle(
    p: &Vec3Q,
    q: &Vec3Q,
    a: &Vec3Q,
    b: &Vec3Q,
    c: &Vec3Q,
) -> Result<PierceResult> {
    let sp = orient3d(a, b, c, p);
    let sq = orient3d(a, b, c, q);
    if sp.is_zero() || sq.is_zero() {
        return Err(Error::DegenerateInput(
            "segment endpoint lies on the triangle plane".into(),
        ));
    }
    if sp == sq {
        return Ok(PierceResult::Miss);
    }
    let e1 = orient3d(p, q, a, b);
    let e2 = orient3d(p, q, b, c);
    let e3 = orient3d(p, q, c, a);
    if e1.is_zero() || e2.is_zero() || e3.is_zero() {
        return Err(Error::DegenerateInput(
            "segment line meets a triangle edge or vertex".into(),
        ));
    }
    if e1 == e2 && e2 == e3 {
        Ok(PierceResult::Pierce(sp))
    } else {
        Ok(PierceResult::Miss)
    }
}

/// Is `p` strictly inside the tetrahedron `abcd`?
///
/// Errors if `abcd` is degenerate or `p` lies on a face plane.
pub fn point_in_tetrahedron(p: &Vec3Q, a: &Vec3Q, b: &Vec3Q, c: &Vec3Q, d: &Vec3Q) -> Result<bool> {
    let reference = orient3d(a, b, c, d);
    if reference.is_zero() {
        return Err(Error::DegenerateInput("flat tetrahedron".into()));
    }
    // p is inside iff it lies on the same side of each face as the vertex
    // opposite that face.
    let checks = [
        (orient3d(a, b, c, p), reference),
        (orient3d(a, b, d, p), orient3d(a, b, d, c)),
        (orient3d(a, c, d, p), orient3d(a, c, d, b)),
        (orient3d(b, c, d, p), orient3d(b, c, d, a)),
    ];
    for (side, want) in checks {
        if side.is_zero() {
            return Err(Error::DegenerateInput("point on a face plane".into()));
        }
        if side != want {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of a general-position scan: every coplanar 4-subset, by index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<[usize; 4]>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that no four of the given points are coplanar.
///
/// Violations are data, not errors: the report lists every offending
/// 4-subset of indices. Fewer than four points pass vacuously.
pub fn general_position(points: &[Vec3Q]) -> ValidationReport {
    let n = points.len();
    let mut violations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    if orient3d(&points[i], &points[j], &points[k], &points[l]).is_zero() {
                        violations.push([i, j, k, l]);
                    }
                }
            }
        }
    }
    ValidationReport { violations }
}
