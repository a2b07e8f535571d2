//! K-semistability, K-stability and uniform K-stability of a pair `(v, w)`.
//!
//! The weight of `v` along `λ` is `w_λ(v) = min_{a ∈ A(v)} ⟨λ, a⟩`, i.e. minus
//! the support function of the weight polytope `N(v)` at `−λ`. With that
//! convention:
//!
//! * semistable: `w_λ(w) ≤ w_λ(v)` for all `λ`, equivalently `N(v) ⊆ N(w)`;
//! * stable: semistable, and `w_λ(w) < w_λ(v)` whenever `q·w_λ(I) < w_λ(v)`;
//! * uniformly stable with constant `m`:
//!   `m(w_λ(v) − w_λ(w)) ≥ w_λ(v) − q·w_λ(I)` for all `λ`, equivalently
//!   `(1 − 1/m)·N(v) + (1/m)·q·N(I) ⊆ N(w)`.
//!
//! Every decision here is exact. Failures come with an integral
//! one-parameter subgroup that is re-checked by direct weight evaluation
//! before it is returned.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{dot, frac, int, Point, Rational};
use crate::lattice::{pair, project_point, LatticeContext, OneParamSubgroup, Weight};
use crate::lp::{rationalize_direction, solve, LinearProgram, LpOutcome, Relation};
use crate::polytope::{min_simplex_scale, minkowski_combine, origin, RationalPolytope};

/// Doubling cap for the uniform-stability search. Reaching it on a stable
/// instance means an internal inconsistency, not a mathematical outcome.
pub const UNIFORM_M_CAP: u64 = 1 << 20;

/// The set `A(v)` of weights with nonzero component, in first-seen order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSupport {
    ctx: LatticeContext,
    weights: Vec<Weight>,
}

impl WeightSupport {
    pub fn new(ctx: LatticeContext, weights: Vec<Weight>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::input("weight support must be nonempty"));
        }
        let mut unique: Vec<Weight> = Vec::with_capacity(weights.len());
        for a in weights {
            ctx.check_weight(&a)?;
            if !unique.contains(&a) {
                unique.push(a);
            }
        }
        Ok(WeightSupport { ctx, weights: unique })
    }

    pub fn from_coords(ctx: LatticeContext, coords: &[&[i64]]) -> Result<Self> {
        Self::new(ctx, coords.iter().map(|c| Weight::new(c.to_vec())).collect())
    }

    pub fn context(&self) -> &LatticeContext {
        &self.ctx
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn polytope(&self) -> Result<RationalPolytope> {
        RationalPolytope::from_weights(&self.ctx, &self.weights)
    }
}

/// `w_λ(A) = min_{a ∈ A} ⟨λ, a⟩`.
pub fn weight(lam: &OneParamSubgroup, support: &WeightSupport) -> Result<i64> {
    lam.require_nonzero()?;
    support.ctx.check_subgroup(lam)?;
    let mut best = i64::MAX;
    for a in &support.weights {
        best = best.min(pair(lam, a)?);
    }
    Ok(best)
}

/// `deg(V)`: the least `k ≥ 1` such that every weight of the representation
/// lies in `k·N(I)` modulo the diagonal.
pub fn deg_of_v(all_rep_weights: &WeightSupport, ctx: &LatticeContext) -> Result<i64> {
    ctx.require_sl()?;
    if all_rep_weights.ctx != *ctx {
        return Err(Error::input("weights belong to a different lattice context"));
    }
    all_rep_weights
        .weights
        .iter()
        .map(|a| min_simplex_scale(a, ctx))
        .try_fold(1i64, |acc, k| Ok(acc.max(k?)))
}

/// One torus frame of the decision problem: `A(v)`, `A(w)`, `q = deg(V)` and
/// the weight polytope of the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairInstance {
    ctx: LatticeContext,
    v: WeightSupport,
    w: WeightSupport,
    q: i64,
    identity: RationalPolytope,
    poly_v: RationalPolytope,
    poly_w: RationalPolytope,
    poly_qi: RationalPolytope,
}

impl PairInstance {
    /// `identity` is required in free mode and must be `None` in sl mode,
    /// where the standard simplex is used.
    pub fn new(v: WeightSupport, w: WeightSupport, q: i64, identity: Option<RationalPolytope>) -> Result<Self> {
        let ctx = v.ctx;
        if w.ctx != ctx {
            return Err(Error::input("v and w supports use different lattice contexts"));
        }
        if q <= 0 {
            return Err(Error::input("q = deg(V) must be positive"));
        }
        let dim = ctx.ambient_dim();
        let identity = match (ctx, identity) {
            (LatticeContext::Free { .. }, Some(id)) => {
                Error::check_dim(dim, id.dim())?;
                if !id.contains_point(&origin(dim))? {
                    return Err(Error::input("identity polytope must contain the origin"));
                }
                id
            }
            (LatticeContext::Free { .. }, None) => {
                return Err(Error::input("free mode requires an explicit identity polytope"))
            }
            (LatticeContext::Sl { .. }, None) => {
                let simplex = crate::lattice::standard_simplex(&ctx, 1)?;
                RationalPolytope::new(simplex.vertices().iter().map(|p| project_point(p)).collect())?
            }
            (LatticeContext::Sl { .. }, Some(_)) => {
                return Err(Error::input("sl mode uses the standard simplex; identity polytope is not accepted"))
            }
        };
        let poly_v = v.polytope()?;
        let poly_w = w.polytope()?;
        let poly_qi = identity.scaled(&int(q))?;
        if let crate::polytope::Inclusion::Escapes(p) = poly_qi.includes(&poly_v)? {
            return Err(Error::input(format!(
                "N(v) is not contained in q·N(I) for q = {q}: vertex {} escapes",
                crate::exact::format_point(&p)
            )));
        }
        Ok(PairInstance { ctx, v, w, q, identity, poly_v, poly_w, poly_qi })
    }

    pub fn context(&self) -> &LatticeContext {
        &self.ctx
    }

    pub fn v(&self) -> &WeightSupport {
        &self.v
    }

    pub fn w(&self) -> &WeightSupport {
        &self.w
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `N(I)` in working coordinates (trace-zero in sl mode), unscaled.
    pub fn identity(&self) -> &RationalPolytope {
        &self.identity
    }

    pub fn poly_v(&self) -> &RationalPolytope {
        &self.poly_v
    }

    pub fn poly_w(&self) -> &RationalPolytope {
        &self.poly_w
    }

    /// `q·N(I)`.
    pub fn poly_qi(&self) -> &RationalPolytope {
        &self.poly_qi
    }

    /// `q·w_λ(I)`, rational when the identity polytope has rational vertices.
    pub fn identity_weight(&self, lam: &OneParamSubgroup) -> Result<Rational> {
        lam.require_nonzero()?;
        self.ctx.check_subgroup(lam)?;
        let x = lam.to_point();
        let min = self.identity.vertices().iter().map(|p| dot(&x, p)).min().expect("nonempty");
        Ok(min * int(self.q))
    }
}

/// Frames `N^σ(v), N^σ(w)` over which group-level verdicts are conjoined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameFamily {
    frames: Vec<PairInstance>,
}

impl FrameFamily {
    pub fn new(frames: Vec<PairInstance>) -> Result<Self> {
        let first = frames.first().ok_or_else(|| Error::input("frame family must be nonempty"))?;
        for f in &frames[1..] {
            if f.ctx != first.ctx || f.q != first.q {
                return Err(Error::input("frames must share lattice context and q"));
            }
        }
        Ok(FrameFamily { frames })
    }

    pub fn frames(&self) -> &[PairInstance] {
        &self.frames
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Clause {
    /// `w_λ(w) > w_λ(v)`.
    Semistability,
    /// `w_λ(w) = w_λ(v)` while `q·w_λ(I) < w_λ(v)`.
    Stability,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Clause::Semistability => "semistability",
            Clause::Stability => "stability",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub lambda: OneParamSubgroup,
    pub clause: Clause,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Holds,
    Violated(Witness),
}

impl Decision {
    pub fn holds(&self) -> bool {
        matches!(self, Decision::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Decision::Holds => None,
            Decision::Violated(w) => Some(w),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityVerdict {
    pub semistable: bool,
    pub stable: bool,
    pub uniform_m: Option<u64>,
    pub witness: Option<Witness>,
    pub frame_index: Option<usize>,
}

/// Ordering used to pick one witness among several: smallest `ℓ¹` norm, then
/// lexicographic.
pub fn witness_order_key(lam: &OneParamSubgroup) -> (i64, Vec<i64>) {
    (lam.coords().iter().map(|c| c.abs()).sum(), lam.coords().to_vec())
}

/// An LP over `λ` (first `dim` variables) plus `extra` auxiliary variables,
/// with `λ` normalized to the box `[-1, 1]^dim` and, in sl mode, trace zero.
fn lambda_program(ctx: &LatticeContext, extra: usize, objective: Vec<Rational>) -> LinearProgram {
    let dim = ctx.ambient_dim();
    debug_assert_eq!(objective.len(), dim + extra);
    let mut lp = LinearProgram::maximize(objective);
    lp.bound_box(0..dim, &-Rational::one(), &Rational::one());
    if ctx.is_sl() {
        let mut trace = vec![Rational::one(); dim];
        trace.extend(std::iter::repeat_n(Rational::zero(), extra));
        lp.constrain(trace, Relation::Eq, Rational::zero());
    }
    lp
}

fn diff(a: &Point, b: &Point) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Runs a box-normalized LP and returns the primitive integral `λ` of the
/// optimum when the optimal value is strictly positive.
fn positive_direction(lp: &LinearProgram, dim: usize) -> Result<Option<OneParamSubgroup>> {
    match solve(lp)? {
        LpOutcome::Optimal { value, point } if value.is_positive() => {
            let lam = rationalize_direction(&point[..dim])?;
            Ok(Some(OneParamSubgroup::new(lam)))
        }
        LpOutcome::Optimal { .. } => Ok(None),
        other => Err(Error::Internal(format!("box-normalized LP returned {other:?}"))),
    }
}

fn keep_best(best: &mut Option<OneParamSubgroup>, cand: OneParamSubgroup) {
    if best.as_ref().is_none_or(|b| witness_order_key(&cand) < witness_order_key(b)) {
        *best = Some(cand);
    }
}

/// Semistability: `N(v) ⊆ N(w)`, with a separating `λ` on failure.
pub fn is_semistable(p: &PairInstance) -> Result<Decision> {
    let dim = p.ctx.ambient_dim();
    let mut best: Option<OneParamSubgroup> = None;
    for m in p.poly_v.vertices() {
        if p.poly_w.contains_point(m)? {
            continue;
        }
        // maximize s subject to ⟨λ, c − m⟩ ≥ s for every vertex c of N(w)
        let mut objective = vec![Rational::zero(); dim + 1];
        objective[dim] = Rational::one();
        let mut lp = lambda_program(&p.ctx, 1, objective);
        for c in p.poly_w.vertices() {
            let mut row = diff(c, m);
            row.push(-Rational::one());
            lp.constrain(row, Relation::Ge, Rational::zero());
        }
        let lam = positive_direction(&lp, dim)?
            .ok_or_else(|| Error::Internal("no separating direction for an escaping vertex".into()))?;
        if weight(&lam, &p.w)? <= weight(&lam, &p.v)? {
            return Err(Error::Internal(format!("separating direction {lam} failed re-verification")));
        }
        keep_best(&mut best, lam);
    }
    Ok(match best {
        None => Decision::Holds,
        Some(lambda) => Decision::Violated(Witness { lambda, clause: Clause::Semistability }),
    })
}

/// Stability. Returns the semistability witness if the pair is not even
/// semistable.
pub fn is_stable(p: &PairInstance) -> Result<Decision> {
    let semi = is_semistable(p)?;
    if !semi.holds() {
        return Ok(semi);
    }
    let dim = p.ctx.ambient_dim();
    let mut best: Option<OneParamSubgroup> = None;
    // For each vertex u of N(v) and p̂ of q·N(I): search the cone where u
    // attains w_λ(v), p̂ attains q·w_λ(I) and w_λ(w) ≥ ⟨λ, u⟩ (hence equality
    // under semistability) for a direction with ⟨λ, u − p̂⟩ > 0.
    for u in p.poly_v.vertices() {
        for ph in p.poly_qi.vertices() {
            let mut objective = diff(u, ph);
            if objective.iter().all(Zero::is_zero) {
                continue;
            }
            objective.truncate(dim);
            let mut lp = lambda_program(&p.ctx, 0, objective);
            for a in p.poly_v.vertices() {
                lp.constrain(diff(a, u), Relation::Ge, Rational::zero());
            }
            for b in p.poly_qi.vertices() {
                lp.constrain(diff(b, ph), Relation::Ge, Rational::zero());
            }
            for c in p.poly_w.vertices() {
                lp.constrain(diff(c, u), Relation::Ge, Rational::zero());
            }
            if let Some(lam) = positive_direction(&lp, dim)? {
                let wv = weight(&lam, &p.v)?;
                if weight(&lam, &p.w)? != wv || p.identity_weight(&lam)? >= int(wv) {
                    return Err(Error::Internal(format!("stability witness {lam} failed re-verification")));
                }
                keep_best(&mut best, lam);
            }
        }
    }
    Ok(match best {
        None => Decision::Holds,
        Some(lambda) => Decision::Violated(Witness { lambda, clause: Clause::Stability }),
    })
}

/// Does `(1 − 1/m)·N(v) + (1/m)·q·N(I) ⊆ N(w)` hold?
pub fn uniform_inclusion_holds(p: &PairInstance, m: u64) -> Result<bool> {
    if m == 0 {
        return Err(Error::input("m must be positive"));
    }
    let m = i64::try_from(m).map_err(|_| Error::Overflow("m"))?;
    let t = frac(1, m);
    let s = Rational::one() - &t;
    let combo = minkowski_combine(&p.poly_v, &p.poly_qi, &s, &t)?;
    Ok(p.poly_w.includes(&combo)?.holds())
}

/// The least `m ≥ 1` making the pair uniformly stable, or `None` when the
/// pair is not stable.
pub fn minimal_uniform_m(p: &PairInstance) -> Result<Option<u64>> {
    if !is_stable(p)?.holds() {
        return Ok(None);
    }
    minimal_uniform_m_of_stable(p).map(Some)
}

fn minimal_uniform_m_of_stable(p: &PairInstance) -> Result<u64> {
    // Inclusion is monotone in m because N(v) ⊆ q·N(I).
    let mut hi = 1u64;
    while !uniform_inclusion_holds(p, hi)? {
        if hi >= UNIFORM_M_CAP {
            return Err(Error::Internal(format!("no uniform m up to {UNIFORM_M_CAP} for a stable pair")));
        }
        hi *= 2;
    }
    let mut lo = hi / 2; // fails (or is zero)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if uniform_inclusion_holds(p, mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// `m(w_λ(v) − w_λ(w)) ≥ w_λ(v) − q·w_λ(I)`, evaluated exactly.
pub fn check_tian0(p: &PairInstance, m: u64, lam: &OneParamSubgroup) -> Result<bool> {
    let wv = int(weight(lam, &p.v)?);
    let ww = int(weight(lam, &p.w)?);
    let wi = p.identity_weight(lam)?;
    let m = Rational::from_integer(m.into());
    Ok(m * (&wv - ww) >= wv - wi)
}

/// Decides one frame completely.
pub fn decide(p: &PairInstance) -> Result<StabilityVerdict> {
    let d = is_stable(p)?;
    Ok(match d {
        Decision::Holds => StabilityVerdict {
            semistable: true,
            stable: true,
            uniform_m: Some(minimal_uniform_m_of_stable(p)?),
            witness: None,
            frame_index: None,
        },
        Decision::Violated(w) => StabilityVerdict {
            semistable: w.clause == Clause::Stability,
            stable: false,
            uniform_m: None,
            witness: Some(w),
            frame_index: None,
        },
    })
}

/// Conjoins per-frame verdicts. The witness comes from the first frame that
/// is not semistable, or failing that the first frame that is not stable.
pub fn verdict(family: &FrameFamily) -> Result<StabilityVerdict> {
    let per_frame = family.frames.iter().map(decide).collect::<Result<Vec<_>>>()?;
    let semistable = per_frame.iter().all(|v| v.semistable);
    let stable = per_frame.iter().all(|v| v.stable);
    let failing = per_frame
        .iter()
        .position(|v| !v.semistable)
        .or_else(|| per_frame.iter().position(|v| !v.stable));
    let uniform_m = if stable { per_frame.iter().filter_map(|v| v.uniform_m).max() } else { None };
    Ok(StabilityVerdict {
        semistable,
        stable,
        uniform_m,
        witness: failing.and_then(|i| per_frame[i].witness.clone()),
        frame_index: failing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::point;

    fn free2() -> LatticeContext {
        LatticeContext::free(2).unwrap()
    }

    fn sl2() -> LatticeContext {
        LatticeContext::sl(2).unwrap()
    }

    fn sup(ctx: LatticeContext, c: &[&[i64]]) -> WeightSupport {
        WeightSupport::from_coords(ctx, c).unwrap()
    }

    fn lam(c: &[i64]) -> OneParamSubgroup {
        OneParamSubgroup::new(c.to_vec())
    }

    fn ident(pts: &[&[i64]]) -> Option<RationalPolytope> {
        Some(RationalPolytope::new(pts.iter().map(|p| point(p)).collect()).unwrap())
    }

    fn fix_a() -> PairInstance {
        PairInstance::new(sup(sl2(), &[&[1, 0], &[0, 1]]), sup(sl2(), &[&[2, 0], &[0, 2]]), 1, None).unwrap()
    }

    fn fix_b() -> PairInstance {
        PairInstance::new(
            sup(free2(), &[&[0, 0]]),
            sup(free2(), &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]),
            1,
            ident(&[&[1, 0], &[0, 1], &[-1, -1]]),
        )
        .unwrap()
    }

    fn fix_c() -> PairInstance {
        let s = sup(free2(), &[&[-1, 0], &[1, 0]]);
        PairInstance::new(s.clone(), s, 1, ident(&[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1]])).unwrap()
    }

    fn fix_d() -> PairInstance {
        PairInstance::new(
            sup(free2(), &[&[1, 0]]),
            sup(free2(), &[&[0, 0]]),
            1,
            ident(&[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1]]),
        )
        .unwrap()
    }

    #[test]
    fn weight_examples() {
        let a = sup(free2(), &[&[1, 0], &[0, 1]]);
        assert_eq!(weight(&lam(&[1, -1]), &a).unwrap(), -1);
        let id = sup(sl2(), &[&[1, 0], &[0, 1]]);
        assert_eq!(weight(&lam(&[1, -1]), &id).unwrap(), -1);
        let hull = id.polytope().unwrap();
        assert_eq!(-hull.support_value(&point(&[-1, 1])).unwrap(), int(-1));
        let diamond = sup(free2(), &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        assert_eq!(weight(&lam(&[0, -1]), &diamond).unwrap(), -1);
        assert!(weight(&lam(&[0, 0]), &diamond).is_err());
        assert!(weight(&lam(&[1, 1]), &id).is_err(), "sl subgroups are trace zero");
    }

    #[test]
    fn support_dedup_and_validation() {
        let s = sup(free2(), &[&[1, 0], &[0, 1], &[1, 0]]);
        assert_eq!(s.len(), 2);
        assert!(WeightSupport::new(free2(), vec![]).is_err());
        assert!(WeightSupport::from_coords(free2(), &[&[1, 0, 0]]).is_err());
    }

    #[test]
    fn degree_examples() {
        let ctx = sl2();
        assert_eq!(deg_of_v(&sup(ctx, &[&[1, 0], &[0, 1]]), &ctx).unwrap(), 1);
        assert_eq!(deg_of_v(&sup(ctx, &[&[2, 0], &[0, 2], &[1, 1]]), &ctx).unwrap(), 2);
        assert_eq!(deg_of_v(&sup(ctx, &[&[0, 0]]), &ctx).unwrap(), 1);
        assert!(deg_of_v(&sup(free2(), &[&[0, 0]]), &free2()).is_err());
    }

    #[test]
    fn degree_is_least_containing_scale() {
        let ctx = LatticeContext::sl(3).unwrap();
        let s = sup(ctx, &[&[3, -1, 0], &[0, 0, 5], &[-2, 2, 2]]);
        let q = deg_of_v(&s, &ctx).unwrap();
        let fits = |k: i64| s.weights().iter().all(|a| crate::polytope::simplex_contains(a, k, &ctx).unwrap());
        assert!(fits(q));
        assert!(!fits(q - 1));
    }

    #[test]
    fn instance_validation() {
        // N(v) must sit inside q·N(I)
        let err = PairInstance::new(sup(sl2(), &[&[2, 0]]), sup(sl2(), &[&[2, 0]]), 1, None);
        assert!(matches!(err, Err(Error::Input(_))));
        assert!(PairInstance::new(sup(sl2(), &[&[2, 0]]), sup(sl2(), &[&[2, 0]]), 2, None).is_ok());
        // identity must contain the origin
        let err = PairInstance::new(sup(free2(), &[&[1, 1]]), sup(free2(), &[&[1, 1]]), 1, ident(&[&[1, 1], &[2, 2]]));
        assert!(err.is_err());
        // free mode needs an identity, sl mode rejects one
        assert!(PairInstance::new(sup(free2(), &[&[0, 0]]), sup(free2(), &[&[0, 0]]), 1, None).is_err());
        assert!(PairInstance::new(sup(sl2(), &[&[0, 0]]), sup(sl2(), &[&[0, 0]]), 1, ident(&[&[0, 0]])).is_err());
        assert!(PairInstance::new(sup(sl2(), &[&[0, 0]]), sup(sl2(), &[&[0, 0]]), 0, None).is_err());
    }

    #[test]
    fn semistability_examples() {
        assert!(is_semistable(&fix_a()).unwrap().holds());
        let d = is_semistable(&fix_d()).unwrap();
        assert_eq!(d, Decision::Violated(Witness { lambda: lam(&[-1, 0]), clause: Clause::Semistability }));
        assert!(is_semistable(&fix_c()).unwrap().holds());
    }

    #[test]
    fn stability_examples() {
        assert!(is_stable(&fix_b()).unwrap().holds());
        assert!(is_stable(&fix_a()).unwrap().holds());
        let c = is_stable(&fix_c()).unwrap();
        let w = c.witness().unwrap();
        assert_eq!(w.clause, Clause::Stability);
        assert_eq!(w.lambda, lam(&[0, -1]));
    }

    #[test]
    fn uniform_examples() {
        assert_eq!(minimal_uniform_m(&fix_b()).unwrap(), Some(2));
        assert_eq!(minimal_uniform_m(&fix_a()).unwrap(), Some(1));
        assert_eq!(minimal_uniform_m(&fix_c()).unwrap(), None);
        assert_eq!(minimal_uniform_m(&fix_d()).unwrap(), None);
        assert!(uniform_inclusion_holds(&fix_b(), 2).unwrap());
        assert!(!uniform_inclusion_holds(&fix_b(), 1).unwrap());
        assert!(uniform_inclusion_holds(&fix_b(), 0).is_err());
    }

    #[test]
    fn tian0_examples() {
        let b = fix_b();
        assert!(check_tian0(&b, 2, &lam(&[0, -1])).unwrap());
        // along (1,1): w_λ(v) = 0, w_λ(w) = -1, q·w_λ(I) = -2, so 1 < 2
        assert!(!check_tian0(&b, 1, &lam(&[1, 1])).unwrap());
        // along (-1,-1) the identity weight is -1 and m = 1 suffices
        assert!(check_tian0(&b, 1, &lam(&[-1, -1])).unwrap());
        // FIX-C along (0,1): w_λ(v) = w_λ(w) = 0 but q·w_λ(I) = -1
        assert!(!check_tian0(&fix_c(), 1000, &lam(&[0, 1])).unwrap());
        // FIX-C along (1,0): all three weights equal -1
        for m in [1, 7, 1024] {
            assert!(check_tian0(&fix_c(), m, &lam(&[1, 0])).unwrap());
        }
        assert!(check_tian0(&b, 1, &lam(&[0, 0])).is_err());
    }

    #[test]
    fn family_verdicts() {
        let v = verdict(&FrameFamily::new(vec![fix_b()]).unwrap()).unwrap();
        assert_eq!(
            v,
            StabilityVerdict { semistable: true, stable: true, uniform_m: Some(2), witness: None, frame_index: None }
        );

        let fam = FrameFamily::new(vec![fix_b(), fix_c()]).unwrap();
        let v = verdict(&fam).unwrap();
        assert!(v.semistable && !v.stable);
        assert_eq!(v.uniform_m, None);
        assert_eq!(v.frame_index, Some(1));
        assert_eq!(v.witness.unwrap(), Witness { lambda: lam(&[0, -1]), clause: Clause::Stability });

        let v = verdict(&FrameFamily::new(vec![fix_d()]).unwrap()).unwrap();
        assert!(!v.semistable && !v.stable);
        assert_eq!(v.witness.unwrap().lambda, lam(&[-1, 0]));
        assert_eq!(v.frame_index, Some(0));

        assert!(FrameFamily::new(vec![]).is_err());
        assert!(FrameFamily::new(vec![fix_a(), fix_b()]).is_err(), "contexts differ");
    }
}
