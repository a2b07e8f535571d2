//! Character and cocharacter lattices of the acting torus.
//!
//! Two ambient modes are supported. In [`LatticeContext::Free`] the torus is
//! an abstract rank-`r` torus and characters live in `Z^r`. In
//! [`LatticeContext::Sl`] the torus is the diagonal torus of `SL(N+1)`:
//! characters are integer vectors of length `N+1` taken modulo the all-ones
//! vector, and one-parameter subgroups are trace-zero integer vectors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{int, Point, Rational};
use crate::polytope::RationalPolytope;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LatticeContext {
    Free { rank: usize },
    Sl { matrix_size: usize },
}

impl LatticeContext {
    pub fn free(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::input("rank must be positive"));
        }
        Ok(LatticeContext::Free { rank })
    }

    pub fn sl(matrix_size: usize) -> Result<Self> {
        if matrix_size == 0 {
            return Err(Error::input("matrix size must be positive"));
        }
        Ok(LatticeContext::Sl { matrix_size })
    }

    pub fn ambient_dim(&self) -> usize {
        match *self {
            LatticeContext::Free { rank } => rank,
            LatticeContext::Sl { matrix_size } => matrix_size,
        }
    }

    pub fn is_sl(&self) -> bool {
        matches!(self, LatticeContext::Sl { .. })
    }

    pub(crate) fn require_sl(&self) -> Result<usize> {
        match *self {
            LatticeContext::Sl { matrix_size } => Ok(matrix_size),
            LatticeContext::Free { .. } => Err(Error::Mode { expected: "sl" }),
        }
    }

    /// Coordinates in which polytopes are compared: the literal point in free
    /// mode, the trace-zero representative in sl mode.
    pub fn working_point(&self, a: &Weight) -> Result<Point> {
        Error::check_dim(self.ambient_dim(), a.dim())?;
        if self.is_sl() {
            project_sl(self, a)
        } else {
            Ok(a.to_point())
        }
    }

    pub fn check_weight(&self, a: &Weight) -> Result<()> {
        Error::check_dim(self.ambient_dim(), a.dim())
    }

    pub fn check_subgroup(&self, lam: &OneParamSubgroup) -> Result<()> {
        Error::check_dim(self.ambient_dim(), lam.dim())?;
        if self.is_sl() && lam.coords().iter().sum::<i64>() != 0 {
            return Err(Error::input(format!(
                "one-parameter subgroup {lam} of SL must have zero coordinate sum"
            )));
        }
        Ok(())
    }
}

/// A character of the torus.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn to_point(&self) -> Point {
        self.0.iter().map(|&c| int(c)).collect()
    }
}

impl From<Vec<i64>> for Weight {
    fn from(coords: Vec<i64>) -> Self {
        Weight(coords)
    }
}

/// A cocharacter `λ`, i.e. a one-parameter subgroup `t ↦ diag(t^λ_1, …)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OneParamSubgroup(Vec<i64>);

impl OneParamSubgroup {
    pub fn new(coords: Vec<i64>) -> Self {
        OneParamSubgroup(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn to_point(&self) -> Point {
        self.0.iter().map(|&c| int(c)).collect()
    }

    pub(crate) fn require_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::input("one-parameter subgroup must be nonzero"))
        } else {
            Ok(())
        }
    }
}

impl From<Vec<i64>> for OneParamSubgroup {
    fn from(coords: Vec<i64>) -> Self {
        OneParamSubgroup(coords)
    }
}

fn fmt_vec(f: &mut fmt::Formatter<'_>, v: &[i64]) -> fmt::Result {
    write!(f, "[")?;
    for (i, c) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, "]")
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_vec(f, &self.0)
    }
}

impl fmt::Display for OneParamSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_vec(f, &self.0)
    }
}

/// The natural pairing `(λ, a) = Σ λ_i a_i`.
pub fn pair(lam: &OneParamSubgroup, a: &Weight) -> Result<i64> {
    Error::check_dim(lam.dim(), a.dim())?;
    lam.0.iter().zip(&a.0).try_fold(0i64, |acc, (&l, &x)| {
        l.checked_mul(x)
            .and_then(|p| acc.checked_add(p))
            .ok_or(Error::Overflow("pairing"))
    })
}

/// Trace-zero representative `a - (Σa_i / (N+1))·(1,…,1)` of a diagonal coset.
pub fn project_sl(ctx: &LatticeContext, a: &Weight) -> Result<Point> {
    let n1 = ctx.require_sl()?;
    Error::check_dim(n1, a.dim())?;
    Ok(project_point(&a.to_point()))
}

pub(crate) fn project_point(p: &[Rational]) -> Point {
    let mean: Rational = p.iter().sum::<Rational>() / int(p.len() as i64);
    p.iter().map(|c| c - &mean).collect()
}

/// `k·N(I)`: the hull of `k·e_1, …, k·e_{N+1}` in ambient coordinates.
pub fn standard_simplex(ctx: &LatticeContext, k: i64) -> Result<RationalPolytope> {
    let n1 = ctx.require_sl()?;
    if k <= 0 {
        return Err(Error::input("simplex scale must be positive"));
    }
    let points = (0..n1)
        .map(|i| (0..n1).map(|j| int(if i == j { k } else { 0 })).collect())
        .collect();
    RationalPolytope::new(points)
}
