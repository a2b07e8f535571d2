//! One-parameter subgroups that degenerate a vector onto a prescribed part
//! of its weight support.
//!
//! Along `λ`, the renormalized limit `lim t^{-w_λ(v)} λ(t)·v` keeps exactly
//! the components whose weights attain `w_λ(v)`. Given a subset `keep` of
//! the support, [`find_degeneration`] looks for a `λ` whose minimizing
//! weights are exactly `keep` by solving one separation LP.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{Point, Rational};
use crate::lattice::{pair, LatticeContext, OneParamSubgroup};
use crate::lp::{rationalize_direction, solve, LinearProgram, LpOutcome, Relation};
use crate::stability::{weight, WeightSupport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegenerationProblem {
    support: WeightSupport,
    keep: Vec<usize>,
}

impl DegenerationProblem {
    /// `keep` holds 0-based indices into `support.weights()`.
    pub fn new(support: WeightSupport, keep: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut keep: Vec<usize> = keep.into_iter().collect();
        keep.sort_unstable();
        keep.dedup();
        if keep.is_empty() {
            return Err(Error::input("keep set must be nonempty"));
        }
        if let Some(&bad) = keep.iter().find(|&&i| i >= support.len()) {
            return Err(Error::input(format!(
                "keep index {} out of range for a support of size {}",
                bad + 1,
                support.len()
            )));
        }
        Ok(DegenerationProblem { support, keep })
    }

    pub fn support(&self) -> &WeightSupport {
        &self.support
    }

    pub fn keep(&self) -> &[usize] {
        &self.keep
    }
}

/// Indices of the weights attaining `w_λ(A)`.
pub fn limit_support(support: &WeightSupport, lam: &OneParamSubgroup) -> Result<Vec<usize>> {
    let min = weight(lam, support)?;
    let mut out = Vec::new();
    for (i, a) in support.weights().iter().enumerate() {
        if pair(lam, a)? == min {
            out.push(i);
        }
    }
    Ok(out)
}

fn box_program(ctx: &LatticeContext, num_vars: usize, objective: Vec<Rational>) -> LinearProgram {
    let dim = ctx.ambient_dim();
    let mut lp = LinearProgram::maximize(objective);
    lp.bound_box(0..dim, &-Rational::one(), &Rational::one());
    if ctx.is_sl() {
        let mut trace = vec![Rational::zero(); num_vars];
        trace[..dim].fill(Rational::one());
        lp.constrain(trace, Relation::Eq, Rational::zero());
    }
    lp
}

/// A primitive `λ` with `limit_support(A, λ) == keep`, or `None` if no
/// one-parameter subgroup of the torus reaches that support.
pub fn find_degeneration(prob: &DegenerationProblem) -> Result<Option<OneParamSubgroup>> {
    let ctx = *prob.support.context();
    let dim = ctx.ambient_dim();
    let points: Vec<Point> = prob.support.weights().iter().map(|a| a.to_point()).collect();
    let dropped: Vec<usize> = (0..points.len()).filter(|i| !prob.keep.contains(i)).collect();
    let anchor = &points[prob.keep[0]];

    let candidate = if dropped.is_empty() {
        // Every weight must survive: λ has to pair equally with all of them.
        let mut found = None;
        'search: for j in 0..dim {
            for sign in [Rational::one(), -Rational::one()] {
                let mut objective = vec![Rational::zero(); dim];
                objective[j] = sign;
                let mut lp = box_program(&ctx, dim, objective);
                for p in &points {
                    let row = p.iter().zip(anchor).map(|(x, y)| x - y).collect();
                    lp.constrain(row, Relation::Eq, Rational::zero());
                }
                if let LpOutcome::Optimal { value, point } = solve(&lp)? {
                    if value > Rational::zero() {
                        found = Some(point);
                        break 'search;
                    }
                }
            }
        }
        found
    } else {
        // Variables: λ (dim), level c, slack s. Kept weights pair to c,
        // dropped ones to at least c + s; maximize s.
        let n = dim + 2;
        let mut objective = vec![Rational::zero(); n];
        objective[dim + 1] = Rational::one();
        let mut lp = box_program(&ctx, n, objective);
        for &k in &prob.keep {
            let mut row = points[k].clone();
            row.push(-Rational::one());
            row.push(Rational::zero());
            lp.constrain(row, Relation::Eq, Rational::zero());
        }
        for &i in &dropped {
            let mut row = points[i].clone();
            row.push(-Rational::one());
            row.push(-Rational::one());
            lp.constrain(row, Relation::Ge, Rational::zero());
        }
        match solve(&lp)? {
            LpOutcome::Optimal { value, point } if value > Rational::zero() => Some(point),
            LpOutcome::Optimal { .. } | LpOutcome::Infeasible => None,
            LpOutcome::Unbounded { .. } => return Err(Error::Internal("degeneration LP unbounded".into())),
        }
    };

    let Some(point) = candidate else {
        return Ok(None);
    };
    let lam = OneParamSubgroup::new(rationalize_direction(&point[..dim])?);
    if limit_support(&prob.support, &lam)? != prob.keep {
        return Err(Error::Internal(format!("degeneration {lam} failed re-verification")));
    }
    Ok(Some(lam))
}
