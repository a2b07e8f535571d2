//! Exact rational linear programming.
//!
//! A dense two-phase primal simplex over arbitrary-precision rationals with
//! Bland's pivoting rule, so termination does not depend on degeneracy.
//! Problems here are small (tens of variables and rows), so the tableau is
//! kept dense and recomputed in place.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{Point, Rational};

const MAX_PIVOTS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Feasibility,
}

/// Variables are free unless flagged in `nonnegative`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub nonnegative: Vec<bool>,
    pub constraints: Vec<Constraint>,
    pub objective: Vec<Rational>,
    pub sense: Sense,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Rational, point: Point },
    Infeasible,
    /// `direction` is a recession direction along which the objective grows.
    Unbounded { direction: Point },
}

impl LinearProgram {
    pub fn maximize(objective: Vec<Rational>) -> Self {
        LinearProgram {
            num_vars: objective.len(),
            nonnegative: vec![false; objective.len()],
            constraints: Vec::new(),
            objective,
            sense: Sense::Maximize,
        }
    }

    pub fn feasibility(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            nonnegative: vec![false; num_vars],
            constraints: Vec::new(),
            objective: vec![Rational::zero(); num_vars],
            sense: Sense::Feasibility,
        }
    }

    pub fn constrain(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> &mut Self {
        self.constraints.push(Constraint { coeffs, relation, rhs });
        self
    }

    pub fn set_nonnegative(&mut self, var: usize) -> &mut Self {
        self.nonnegative[var] = true;
        self
    }

    /// Adds `lo <= x_j <= hi` for every variable in `vars`.
    pub fn bound_box(&mut self, vars: std::ops::Range<usize>, lo: &Rational, hi: &Rational) -> &mut Self {
        for j in vars {
            let mut row = vec![Rational::zero(); self.num_vars];
            row[j] = Rational::one();
            self.constrain(row.clone(), Relation::Ge, lo.clone());
            self.constrain(row, Relation::Le, hi.clone());
        }
        self
    }

    fn validate(&self) -> Result<()> {
        Error::check_dim(self.num_vars, self.objective.len())?;
        Error::check_dim(self.num_vars, self.nonnegative.len())?;
        for (i, c) in self.constraints.iter().enumerate() {
            if c.coeffs.len() != self.num_vars {
                return Err(Error::input(format!(
                    "constraint {i} has {} coefficients, expected {}",
                    c.coeffs.len(),
                    self.num_vars
                )));
            }
        }
        Ok(())
    }

    /// True iff `x` satisfies every constraint and sign restriction exactly.
    pub fn is_feasible_point(&self, x: &[Rational]) -> bool {
        if x.len() != self.num_vars {
            return false;
        }
        let signs_ok = self.nonnegative.iter().zip(x).all(|(&nn, v)| !nn || !v.is_negative());
        signs_ok
            && self.constraints.iter().all(|c| {
                let lhs: Rational = c.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
                match c.relation {
                    Relation::Le => lhs <= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                    Relation::Ge => lhs >= c.rhs,
                }
            })
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    /// Columns that may never enter the basis (artificials after phase one).
    blocked: Vec<bool>,
}

impl Tableau {
    fn ncols(&self) -> usize {
        self.blocked.len()
    }

    fn pivot(&mut self, r: usize, e: usize, reduced: &mut [Rational]) {
        let piv = self.rows[r][e].clone();
        if !piv.is_one() {
            for v in self.rows[r].iter_mut() {
                if !v.is_zero() {
                    *v /= &piv;
                }
            }
            self.rhs[r] /= &piv;
        }
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][e].is_zero() {
                continue;
            }
            let f = self.rows[i][e].clone();
            for (v, p) in self.rows[i].iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
            self.rhs[i] -= &f * &prhs;
        }
        let f = reduced[e].clone();
        if !f.is_zero() {
            for (v, p) in reduced.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        self.basis[r] = e;
    }

    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        let mut d = cost.to_vec();
        for (i, &b) in self.basis.iter().enumerate() {
            if cost[b].is_zero() {
                continue;
            }
            for (dj, a) in d.iter_mut().zip(&self.rows[i]) {
                if !a.is_zero() {
                    *dj -= &cost[b] * a;
                }
            }
        }
        d
    }

    /// Maximizes `cost · x` from the current basis. Returns the entering
    /// column of an unbounded ray, if any.
    fn optimize(&mut self, cost: &[Rational]) -> Result<Option<usize>> {
        let mut reduced = self.reduced_costs(cost);
        for _ in 0..MAX_PIVOTS {
            // Bland: lowest-index improving column, then lowest-index basic
            // variable among ratio-test ties.
            let Some(e) = (0..self.ncols()).find(|&j| !self.blocked[j] && reduced[j].is_positive()) else {
                return Ok(None);
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][e];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                None => return Ok(Some(e)),
                Some((r, _)) => self.pivot(r, e, &mut reduced),
            }
        }
        Err(Error::Internal("simplex pivot limit exceeded".into()))
    }

    fn column_values(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.ncols()];
        for (i, &b) in self.basis.iter().enumerate() {
            x[b] = self.rhs[i].clone();
        }
        x
    }
}

/// Solves `lp` exactly.
pub fn solve(lp: &LinearProgram) -> Result<LpOutcome> {
    lp.validate()?;
    let n = lp.num_vars;

    // Column layout: x_j (or x_j⁺) for every j, then x_j⁻ for free j, then
    // slack/surplus columns, then artificials.
    let mut neg_col = vec![None; n];
    let mut ncols = n;
    for (slot, &nonneg) in neg_col.iter_mut().zip(&lp.nonnegative) {
        if !nonneg {
            *slot = Some(ncols);
            ncols += 1;
        }
    }
    let num_slack = lp.constraints.iter().filter(|c| c.relation != Relation::Eq).count();
    let slack_start = ncols;
    let art_start = slack_start + num_slack;
    let num_art = lp
        .constraints
        .iter()
        .filter(|c| {
            let flip = c.rhs.is_negative();
            match c.relation {
                Relation::Eq => true,
                Relation::Le => flip,
                Relation::Ge => !flip,
            }
        })
        .count();
    let total = art_start + num_art;

    let m = lp.constraints.len();
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut next_slack = slack_start;
    let mut next_art = art_start;
    for c in &lp.constraints {
        let flip = c.rhs.is_negative();
        let sign = if flip { -Rational::one() } else { Rational::one() };
        let mut row = vec![Rational::zero(); total];
        for (j, a) in c.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            row[j] = a * &sign;
            if let Some(nc) = neg_col[j] {
                row[nc] = -(a * &sign);
            }
        }
        let relation = match (c.relation, flip) {
            (Relation::Le, true) => Relation::Ge,
            (Relation::Ge, true) => Relation::Le,
            (r, _) => r,
        };
        match relation {
            Relation::Le => {
                row[next_slack] = Rational::one();
                basis.push(next_slack);
                next_slack += 1;
            }
            Relation::Ge => {
                row[next_slack] = -Rational::one();
                next_slack += 1;
                row[next_art] = Rational::one();
                basis.push(next_art);
                next_art += 1;
            }
            Relation::Eq => {
                row[next_art] = Rational::one();
                basis.push(next_art);
                next_art += 1;
            }
        }
        rows.push(row);
        rhs.push(&c.rhs * &sign);
    }

    let mut tab = Tableau { rows, rhs, basis, blocked: vec![false; total] };

    if num_art > 0 {
        let mut cost = vec![Rational::zero(); total];
        for c in cost.iter_mut().skip(art_start) {
            *c = -Rational::one();
        }
        if tab.optimize(&cost)?.is_some() {
            return Err(Error::Internal("phase one reported unbounded".into()));
        }
        let infeasibility: Rational = (0..m).filter(|&i| tab.basis[i] >= art_start).map(|i| tab.rhs[i].clone()).sum();
        if infeasibility.is_positive() {
            return Ok(LpOutcome::Infeasible);
        }
        // Drive zero-level artificials out of the basis; drop redundant rows.
        let mut i = 0;
        while i < tab.rows.len() {
            if tab.basis[i] >= art_start {
                match (0..art_start).find(|&j| !tab.rows[i][j].is_zero()) {
                    Some(j) => {
                        let mut scratch = vec![Rational::zero(); total];
                        tab.pivot(i, j, &mut scratch);
                    }
                    None => {
                        tab.rows.remove(i);
                        tab.rhs.remove(i);
                        tab.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
        for b in tab.blocked.iter_mut().skip(art_start) {
            *b = true;
        }
    }

    let recover = |cols: &[Rational]| -> Point {
        (0..n)
            .map(|j| match neg_col[j] {
                Some(nc) => &cols[j] - &cols[nc],
                None => cols[j].clone(),
            })
            .collect()
    };

    if lp.sense == Sense::Feasibility {
        let point = recover(&tab.column_values());
        return Ok(LpOutcome::Optimal { value: Rational::zero(), point });
    }

    let mut cost = vec![Rational::zero(); total];
    for (j, c) in lp.objective.iter().enumerate() {
        cost[j] = c.clone();
        if let Some(nc) = neg_col[j] {
            cost[nc] = -c;
        }
    }
    if let Some(e) = tab.optimize(&cost)? {
        let mut dir = vec![Rational::zero(); total];
        dir[e] = Rational::one();
        for (i, &b) in tab.basis.iter().enumerate() {
            dir[b] = -tab.rows[i][e].clone();
        }
        return Ok(LpOutcome::Unbounded { direction: recover(&dir) });
    }
    let point = recover(&tab.column_values());
    let value = lp.objective.iter().zip(&point).map(|(a, b)| a * b).sum();
    Ok(LpOutcome::Optimal { value, point })
}

/// The primitive integer vector that is a positive multiple of `point`.
pub fn rationalize_direction(point: &[Rational]) -> Result<Vec<i64>> {
    if point.iter().all(Zero::is_zero) {
        return Err(Error::input("cannot rationalize the zero vector"));
    }
    let lcm = point.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = point.iter().map(|r| (r * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.iter()
        .map(|x| i64::try_from(x / &gcd).map_err(|_| Error::Overflow("rationalized direction")))
        .collect()
}
