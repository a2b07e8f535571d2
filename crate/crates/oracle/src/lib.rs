//! Brute-force reference checks for `stablepairs-core`.
//!
//! Every nonzero integral one-parameter subgroup in a box `[-B, B]^d`
//! (trace-zero ones in sl mode) is evaluated against the defining
//! inequalities directly. Nothing here goes through polytopes or linear
//! programming, so agreement with the exact decision procedures is an
//! independent check.
//!
//! # Box size
//!
//! The loci that matter (where `w_λ(w) − w_λ(v)` or `w_λ(v) − q·w_λ(I)`
//! changes sign, and where weights tie) are unions of cones of the fan cut
//! out by the hyperplanes `⟨λ, a − b⟩ = 0` over pairs of points `a, b` of
//! `A(v) ∪ A(w) ∪ vert(q·N(I))`. Extreme rays of that fan solve `d − 1`
//! such equations, so by Cramer's rule they have integral representatives
//! whose entries are `(d−1)×(d−1)` minors of the difference vectors, bounded
//! by the Hadamard bound `H`. [`sufficient_bound`] returns `d·H`. The
//! argument is only claimed for `d ≤ 3`; larger boxes are heuristic.

use num_integer::Integer;
use stablepairs_core::degeneration::limit_support;
use stablepairs_core::exact::int;
use stablepairs_core::stability::{weight, witness_order_key, Clause, Decision, PairInstance, Witness};
use stablepairs_core::{LatticeContext, OneParamSubgroup, Result, WeightSupport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBox {
    pub bound: i64,
    pub dim: usize,
    pub exhaustive_guarantee: bool,
}

impl OracleBox {
    /// A box of the given size for `p`; exhaustive when `dim ≤ 3` and the
    /// bound reaches [`sufficient_bound`].
    pub fn new(p: &PairInstance, bound: i64) -> Self {
        let dim = p.context().ambient_dim();
        OracleBox { bound: bound.max(1), dim, exhaustive_guarantee: dim <= 3 && bound >= sufficient_bound(p) }
    }

    pub fn sufficient(p: &PairInstance) -> Self {
        Self::new(p, sufficient_bound(p))
    }
}

/// Integer data of one frame: `A(v)`, `A(w)` and `L·vert(q·N(I))` for the
/// least `L` clearing denominators.
struct IntegerFrame {
    identity: Vec<Vec<i64>>,
    scale: i64,
}

fn integer_frame(p: &PairInstance) -> IntegerFrame {
    let ctx = p.context();
    match ctx {
        LatticeContext::Sl { matrix_size } => {
            // Ambient representatives q·e_i pair like the projected vertices.
            let n = *matrix_size;
            let identity = (0..n).map(|i| (0..n).map(|j| if i == j { p.q() } else { 0 }).collect()).collect();
            IntegerFrame { identity, scale: 1 }
        }
        LatticeContext::Free { .. } => {
            let verts = p.poly_qi().vertices();
            let scale = verts
                .iter()
                .flatten()
                .fold(1i64, |acc, r| acc.lcm(&i64::try_from(r.denom().clone()).expect("small denominators")));
            let identity = verts
                .iter()
                .map(|v| {
                    v.iter()
                        .map(|r| i64::try_from((r * int(scale)).to_integer()).expect("small"))
                        .collect()
                })
                .collect();
            IntegerFrame { identity, scale }
        }
    }
}

fn ceil_sqrt(n: u128) -> u128 {
    let mut r = (n as f64).sqrt() as u128;
    while r * r > n {
        r -= 1;
    }
    while r * r < n {
        r += 1;
    }
    r
}

/// `d·H` with `H` the Hadamard bound on `(d−1)×(d−1)` minors of pairwise
/// differences of `A(v) ∪ A(w) ∪ vert(q·N(I))` (after clearing
/// denominators).
pub fn sufficient_bound(p: &PairInstance) -> i64 {
    let frame = integer_frame(p);
    let mut points: Vec<Vec<i64>> = frame.identity.clone();
    for s in [p.v(), p.w()] {
        for a in s.weights() {
            points.push(a.coords().iter().map(|x| x * frame.scale).collect());
        }
    }
    box_from_points(p.context().ambient_dim(), &points)
}

/// The same bound for the fan of a single support, which governs which
/// limit supports are reachable.
pub fn degeneration_bound(support: &WeightSupport) -> i64 {
    let points: Vec<Vec<i64>> = support.weights().iter().map(|a| a.coords().to_vec()).collect();
    box_from_points(support.context().ambient_dim(), &points)
}

fn box_from_points(d: usize, points: &[Vec<i64>]) -> i64 {
    let mut max_diff: u128 = 0;
    for a in points {
        for b in points {
            for (x, y) in a.iter().zip(b) {
                max_diff = max_diff.max((x - y).unsigned_abs() as u128);
            }
        }
    }
    let k = (d - 1) as u32;
    // (sqrt(k)·D)^k
    let base = u128::from(k) * max_diff * max_diff;
    let h = if k.is_multiple_of(2) { base.pow(k / 2) } else { ceil_sqrt(base.pow(k)) };
    let b = (d as u128 * h.max(1)).min(i64::MAX as u128);
    (b as i64).max(1)
}

/// Every nonzero integral λ in `[-B, B]^d`, trace-zero in sl mode, in
/// lexicographic order.
pub fn box_subgroups(ctx: &LatticeContext, bound: i64) -> impl Iterator<Item = OneParamSubgroup> {
    let d = ctx.ambient_dim();
    let sl = ctx.is_sl();
    let free_coords = if sl { d - 1 } else { d };
    let side = (2 * bound + 1) as u64;
    let total = side.checked_pow(free_coords as u32).expect("box too large");
    (0..total).filter_map(move |mut idx| {
        let mut coords = vec![0i64; d];
        for i in (0..free_coords).rev() {
            coords[i] = (idx % side) as i64 - bound;
            idx /= side;
        }
        if sl {
            let last = -coords[..d - 1].iter().sum::<i64>();
            if last.abs() > bound {
                return None;
            }
            coords[d - 1] = last;
        }
        let lam = OneParamSubgroup::new(coords);
        (!lam.is_zero()).then_some(lam)
    })
}

fn keep_best(best: &mut Option<OneParamSubgroup>, cand: &OneParamSubgroup) {
    if best.as_ref().is_none_or(|b| witness_order_key(cand) < witness_order_key(b)) {
        *best = Some(cand.clone());
    }
}

/// Weights of one λ: `(w_λ(v), w_λ(w), L·w_λ(v) − L·q·w_λ(I))`, the last
/// scaled by the frame's denominator `L`.
struct Evaluation {
    wv: i64,
    ww: i64,
    excess_scaled: i64,
    scale: i64,
}

fn evaluate(p: &PairInstance, frame: &IntegerFrame, lam: &OneParamSubgroup) -> Result<Evaluation> {
    let wv = weight(lam, p.v())?;
    let ww = weight(lam, p.w())?;
    let wi = frame
        .identity
        .iter()
        .map(|b| b.iter().zip(lam.coords()).map(|(x, l)| x * l).sum::<i64>())
        .min()
        .expect("identity has vertices");
    Ok(Evaluation { wv, ww, excess_scaled: frame.scale * wv - wi, scale: frame.scale })
}

/// Least `λ` (by ℓ¹ norm, then lexicographically) with `w_λ(w) > w_λ(v)`.
pub fn brute_semistable(p: &PairInstance, bx: &OracleBox) -> Result<Decision> {
    let frame = integer_frame(p);
    let mut best = None;
    for lam in box_subgroups(p.context(), bx.bound) {
        let e = evaluate(p, &frame, &lam)?;
        if e.ww > e.wv {
            keep_best(&mut best, &lam);
        }
    }
    Ok(best.map_or(Decision::Holds, |lambda| Decision::Violated(Witness { lambda, clause: Clause::Semistability })))
}

/// Semistability first; then the least `λ` with `w_λ(w) = w_λ(v)` and
/// `q·w_λ(I) < w_λ(v)`.
pub fn brute_stable(p: &PairInstance, bx: &OracleBox) -> Result<Decision> {
    let semi = brute_semistable(p, bx)?;
    if !semi.holds() {
        return Ok(semi);
    }
    let frame = integer_frame(p);
    let mut best = None;
    for lam in box_subgroups(p.context(), bx.bound) {
        let e = evaluate(p, &frame, &lam)?;
        if e.ww == e.wv && e.excess_scaled > 0 {
            keep_best(&mut best, &lam);
        }
    }
    Ok(best.map_or(Decision::Holds, |lambda| Decision::Violated(Witness { lambda, clause: Clause::Stability })))
}

/// Least `m ≤ m_cap` with `m(w_λ(v) − w_λ(w)) ≥ w_λ(v) − q·w_λ(I)` for every
/// λ in the box, or `None`.
pub fn brute_min_m(p: &PairInstance, bx: &OracleBox, m_cap: u64) -> Result<Option<u64>> {
    let frame = integer_frame(p);
    let mut need: u64 = 1;
    for lam in box_subgroups(p.context(), bx.bound) {
        let e = evaluate(p, &frame, &lam)?;
        let gap = e.wv - e.ww;
        if gap < 0 || (gap == 0 && e.excess_scaled > 0) {
            return Ok(None);
        }
        if gap > 0 && e.excess_scaled > 0 {
            let m = Integer::div_ceil(&e.excess_scaled, &(gap * e.scale)) as u64;
            need = need.max(m);
        }
    }
    Ok((need <= m_cap).then_some(need))
}

/// Does `λ` violate `m(w_λ(v) − w_λ(w)) ≥ w_λ(v) − q·w_λ(I)`?
pub fn violates_tian0(p: &PairInstance, lam: &OneParamSubgroup, m: u64) -> Result<bool> {
    let e = evaluate(p, &integer_frame(p), lam)?;
    Ok((m as i128) * ((e.wv - e.ww) as i128) * (e.scale as i128) < e.excess_scaled as i128)
}

/// Least `λ` in the box with `limit_support(A, λ) == keep`.
pub fn brute_degeneration(support: &WeightSupport, keep: &[usize], bound: i64) -> Result<Option<OneParamSubgroup>> {
    let mut best = None;
    for lam in box_subgroups(support.context(), bound) {
        if limit_support(support, &lam)? == keep {
            keep_best(&mut best, &lam);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use stablepairs_core::exact::{frac, point};
    use stablepairs_core::RationalPolytope;

    fn sup(ctx: LatticeContext, c: &[&[i64]]) -> WeightSupport {
        WeightSupport::from_coords(ctx, c).unwrap()
    }

    fn cube(dim: usize) -> RationalPolytope {
        let pts = (0..1usize << dim)
            .map(|m| point(&(0..dim).map(|i| if m >> i & 1 == 1 { 1 } else { -1 }).collect::<Vec<_>>()))
            .collect();
        RationalPolytope::new(pts).unwrap()
    }

    fn lam(c: &[i64]) -> OneParamSubgroup {
        OneParamSubgroup::new(c.to_vec())
    }

    fn fix_b() -> PairInstance {
        let ctx = LatticeContext::free(2).unwrap();
        let id = RationalPolytope::new(vec![point(&[1, 0]), point(&[0, 1]), point(&[-1, -1])]).unwrap();
        PairInstance::new(sup(ctx, &[&[0, 0]]), sup(ctx, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]), 1, Some(id)).unwrap()
    }

    fn fix_c() -> PairInstance {
        let ctx = LatticeContext::free(2).unwrap();
        let s = sup(ctx, &[&[-1, 0], &[1, 0]]);
        PairInstance::new(s.clone(), s, 1, Some(cube(2))).unwrap()
    }

    fn fix_d() -> PairInstance {
        let ctx = LatticeContext::free(2).unwrap();
        PairInstance::new(sup(ctx, &[&[1, 0]]), sup(ctx, &[&[0, 0]]), 1, Some(cube(2))).unwrap()
    }

    #[test]
    fn bound_examples() {
        let ctx = LatticeContext::free(2).unwrap();
        let p = PairInstance::new(sup(ctx, &[&[3, 3]]), sup(ctx, &[&[-3, 1]]), 3, Some(cube(2))).unwrap();
        assert_eq!(sufficient_bound(&p), 12);

        let ctx1 = LatticeContext::free(1).unwrap();
        let p = PairInstance::new(sup(ctx1, &[&[0]]), sup(ctx1, &[&[0]]), 1, Some(cube(1))).unwrap();
        assert_eq!(sufficient_bound(&p), 1);

        let ctx3 = LatticeContext::free(3).unwrap();
        let p = PairInstance::new(sup(ctx3, &[&[3, 3, 3]]), sup(ctx3, &[&[3, 3, 3]]), 3, Some(cube(3))).unwrap();
        assert_eq!(sufficient_bound(&p), 216);
        assert!(OracleBox::sufficient(&p).exhaustive_guarantee);
        assert!(!OracleBox::new(&p, 215).exhaustive_guarantee);
    }

    #[test]
    fn box_enumeration() {
        let free = LatticeContext::free(2).unwrap();
        assert_eq!(box_subgroups(&free, 2).count(), 24);
        let sl = LatticeContext::sl(3).unwrap();
        let all: Vec<_> = box_subgroups(&sl, 1).collect();
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|l| l.coords().iter().sum::<i64>() == 0));
    }

    #[test]
    fn fixture_verdicts() {
        let d = brute_semistable(&fix_d(), &OracleBox::new(&fix_d(), 2)).unwrap();
        assert_eq!(d.witness().unwrap().lambda, lam(&[-1, 0]));

        let c = brute_stable(&fix_c(), &OracleBox::new(&fix_c(), 3)).unwrap();
        assert_eq!(c.witness().unwrap(), &Witness { lambda: lam(&[0, -1]), clause: Clause::Stability });

        let b = fix_b();
        assert!(brute_stable(&b, &OracleBox::new(&b, 12)).unwrap().holds());
        assert_eq!(brute_min_m(&b, &OracleBox::new(&b, 12), 16).unwrap(), Some(2));
        assert_eq!(brute_min_m(&b, &OracleBox::new(&b, 12), 1).unwrap(), None);
        assert_eq!(brute_min_m(&fix_c(), &OracleBox::new(&fix_c(), 3), 1024).unwrap(), None);

        assert!(violates_tian0(&b, &lam(&[1, 1]), 1).unwrap());
        assert!(!violates_tian0(&b, &lam(&[1, 1]), 2).unwrap());
    }

    #[test]
    fn rational_identity_is_scaled_exactly() {
        // N(I) = [-1/2, 1/2], q = 1, v at 1/2·... only the origin fits.
        let ctx = LatticeContext::free(1).unwrap();
        let id = RationalPolytope::new(vec![vec![frac(-1, 2)], vec![frac(1, 2)]]).unwrap();
        let p = PairInstance::new(sup(ctx, &[&[0]]), sup(ctx, &[&[-1], &[1]]), 1, Some(id)).unwrap();
        // gap 1 along ±1, excess 1/2, so m = 1
        assert_eq!(brute_min_m(&p, &OracleBox::sufficient(&p), 8).unwrap(), Some(1));
    }

    #[test]
    fn degeneration_fixtures() {
        let ctx = LatticeContext::free(2).unwrap();
        let a = sup(ctx, &[&[1, 0], &[0, 1], &[0, 0]]);
        assert_eq!(brute_degeneration(&a, &[2], 3).unwrap(), Some(lam(&[1, 1])));
        let b = sup(ctx, &[&[1, 0], &[-1, 0], &[0, 0]]);
        assert_eq!(degeneration_bound(&b), 4);
        assert_eq!(brute_degeneration(&b, &[2], degeneration_bound(&b)).unwrap(), None);
    }
}
