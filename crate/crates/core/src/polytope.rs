//! Rational convex polytopes in V-representation.
//!
//! Every query (support values, membership, inclusion) is answered from the
//! vertex list, either by a maximum over vertices or by an exact LP. No facet
//! description is ever built, and lower-dimensional polytopes need no special
//! handling.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{dot, int, Point, Rational};
use crate::lattice::{LatticeContext, Weight};
use crate::lp::{solve, LinearProgram, LpOutcome, Relation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolytope {
    dim: usize,
    points: Vec<Point>,
    vertices: Vec<Point>,
}

/// Result of an inclusion test `Q ⊆ P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Inclusion {
    Contained,
    /// A vertex of `Q` lying outside `P`.
    Escapes(Point),
}

impl Inclusion {
    pub fn holds(&self) -> bool {
        matches!(self, Inclusion::Contained)
    }
}

fn common_dim(points: &[Point]) -> Result<usize> {
    let first = points.first().ok_or_else(|| Error::input("point set is empty"))?;
    let dim = first.len();
    for p in points {
        Error::check_dim(dim, p.len())?;
    }
    Ok(dim)
}

/// Is `y` a convex combination of `generators`?
fn in_convex_hull(generators: &[Point], y: &[Rational]) -> Result<bool> {
    if generators.is_empty() {
        return Ok(false);
    }
    let k = generators.len();
    let mut lp = LinearProgram::feasibility(k);
    for j in 0..k {
        lp.set_nonnegative(j);
    }
    lp.constrain(vec![Rational::one(); k], Relation::Eq, Rational::one());
    for (i, yi) in y.iter().enumerate() {
        let coeffs = generators.iter().map(|g| g[i].clone()).collect();
        lp.constrain(coeffs, Relation::Eq, yi.clone());
    }
    Ok(matches!(solve(&lp)?, LpOutcome::Optimal { .. }))
}

/// The extreme points of `points`, deduplicated and in lexicographic order.
/// A point is kept iff it is not a convex combination of the others.
pub fn hull_vertices(points: &[Point]) -> Result<Vec<Point>> {
    common_dim(points)?;
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return Ok(pts);
    }
    let mut vertices = Vec::new();
    for i in 0..pts.len() {
        let others: Vec<Point> = pts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect();
        if !in_convex_hull(&others, &pts[i])? {
            vertices.push(pts[i].clone());
        }
    }
    Ok(vertices)
}

impl RationalPolytope {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let dim = common_dim(&points)?;
        let vertices = hull_vertices(&points)?;
        Ok(RationalPolytope { dim, points, vertices })
    }

    pub fn from_weights(ctx: &LatticeContext, weights: &[Weight]) -> Result<Self> {
        let points = weights.iter().map(|a| ctx.working_point(a)).collect::<Result<Vec<_>>>()?;
        Self::new(points)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// `max_{y ∈ P} ⟨x, y⟩`.
    pub fn support_value(&self, x: &[Rational]) -> Result<Rational> {
        Error::check_dim(self.dim, x.len())?;
        Ok(self.vertices.iter().map(|v| dot(x, v)).max().expect("polytope has a vertex"))
    }

    /// `k·P` for `k ≥ 0`.
    pub fn scaled(&self, k: &Rational) -> Result<Self> {
        if k.is_negative() {
            return Err(Error::input("negative scale factor"));
        }
        if k.is_zero() {
            let origin = vec![Rational::zero(); self.dim];
            return Ok(RationalPolytope { dim: self.dim, points: vec![origin.clone()], vertices: vec![origin] });
        }
        let sc = |ps: &[Point]| ps.iter().map(|p| crate::exact::scale(p, k)).collect::<Vec<_>>();
        // Positive scaling preserves both the vertex set and its order.
        Ok(RationalPolytope { dim: self.dim, points: sc(&self.points), vertices: sc(&self.vertices) })
    }

    pub fn contains_point(&self, y: &[Rational]) -> Result<bool> {
        Error::check_dim(self.dim, y.len())?;
        if self.vertices.iter().any(|v| v.as_slice() == y) {
            return Ok(true);
        }
        in_convex_hull(&self.vertices, y)
    }

    /// Decides `inner ⊆ self`.
    pub fn includes(&self, inner: &RationalPolytope) -> Result<Inclusion> {
        Error::check_dim(self.dim, inner.dim)?;
        for v in &inner.vertices {
            if !self.contains_point(v)? {
                return Ok(Inclusion::Escapes(v.clone()));
            }
        }
        Ok(Inclusion::Contained)
    }
}

/// `s·P + t·Q` for `s, t ≥ 0`.
pub fn minkowski_combine(p: &RationalPolytope, q: &RationalPolytope, s: &Rational, t: &Rational) -> Result<RationalPolytope> {
    Error::check_dim(p.dim, q.dim)?;
    if s.is_negative() || t.is_negative() {
        return Err(Error::input("Minkowski coefficients must be nonnegative"));
    }
    let mut points = Vec::with_capacity(p.vertices.len() * q.vertices.len());
    for a in &p.vertices {
        for b in &q.vertices {
            points.push(a.iter().zip(b).map(|(x, y)| s * x + t * y).collect());
        }
    }
    RationalPolytope::new(points)
}

/// Does the diagonal coset of `a` meet `k·N(I)`? With
/// `s = (k − Σa_i)/(N+1)` this holds iff `a_i + s ≥ 0` for every `i`.
pub fn simplex_contains(a: &Weight, k: i64, ctx: &LatticeContext) -> Result<bool> {
    let n1 = ctx.require_sl()?;
    ctx.check_weight(a)?;
    if k <= 0 {
        return Err(Error::input("simplex scale must be positive"));
    }
    let sum: i64 = a.coords().iter().sum();
    // (N+1)·(a_i + s) = (N+1)·a_i + k − Σa, integral.
    Ok(a.coords().iter().all(|&ai| n1 as i64 * ai + k - sum >= 0))
}

/// Least `k ≥ 1` with `simplex_contains(a, k)`.
pub(crate) fn min_simplex_scale(a: &Weight, ctx: &LatticeContext) -> Result<i64> {
    let n1 = ctx.require_sl()?;
    ctx.check_weight(a)?;
    let sum: i64 = a.coords().iter().sum();
    let need = a.coords().iter().map(|&ai| sum - n1 as i64 * ai).max().unwrap_or(0);
    Ok(need.max(1))
}

pub(crate) fn origin(dim: usize) -> Point {
    vec![int(0); dim]
}
