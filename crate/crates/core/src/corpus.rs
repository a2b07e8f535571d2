//! Seeded random instance generation.
//!
//! Instances mix several constructions of `A(w)` relative to `A(v)` so that a
//! corpus contains unstable, semistable-only and stable pairs. Output depends
//! only on the [`CorpusSpec`].

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{int, point};
use crate::instance::{exact_rows, ExactInt, ExactRational, FrameSpec, InstanceFile, Mode};
use crate::lattice::{LatticeContext, Weight};
use crate::polytope::RationalPolytope;
use crate::stability::{deg_of_v, WeightSupport};

/// Shape of `N(I)` for free-mode instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityShape {
    /// `[-1, 1]^r`
    Cube,
    /// `conv{e_1, …, e_r, −(1, …, 1)}`
    Simplex,
    /// `conv{±e_i}`
    Cross,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub mode: Mode,
    pub dim: usize,
    pub max_coord: i64,
    pub count: usize,
    pub seed: u64,
    /// Free mode only; `None` draws a shape per instance.
    pub identity: Option<IdentityShape>,
}

impl CorpusSpec {
    pub fn new(mode: Mode, dim: usize, max_coord: i64, count: usize, seed: u64) -> Self {
        CorpusSpec { mode, dim, max_coord, count, seed, identity: None }
    }
}

fn identity_vertices(shape: IdentityShape, dim: usize) -> Vec<Vec<i64>> {
    match shape {
        IdentityShape::Cube => (0..1usize << dim)
            .map(|mask| (0..dim).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect())
            .collect(),
        IdentityShape::Simplex => {
            let mut v: Vec<Vec<i64>> = (0..dim).map(|i| (0..dim).map(|j| i64::from(i == j)).collect()).collect();
            v.push(vec![-1; dim]);
            v
        }
        IdentityShape::Cross => (0..dim)
            .flat_map(|i| {
                [1, -1].map(|s| (0..dim).map(|j| if i == j { s } else { 0 }).collect::<Vec<i64>>())
            })
            .collect(),
    }
}

fn random_point(rng: &mut ChaCha8Rng, dim: usize, c: i64) -> Vec<i64> {
    (0..dim).map(|_| rng.gen_range(-c..=c)).collect()
}

fn push_unique(set: &mut Vec<Vec<i64>>, p: Vec<i64>) {
    if !set.contains(&p) {
        set.push(p);
    }
}

/// Builds `A(w)` from `A(v)` and the vertices of `q·N(I)`.
fn draw_w(rng: &mut ChaCha8Rng, v: &[Vec<i64>], qi: &[Vec<i64>], dim: usize, c: i64) -> Vec<Vec<i64>> {
    let mut w = Vec::new();
    match rng.gen_range(0..5) {
        0 => {
            for _ in 0..rng.gen_range(1..=4) {
                push_unique(&mut w, random_point(rng, dim, c));
            }
        }
        1 => {
            w.extend(v.iter().cloned());
            for _ in 0..rng.gen_range(1..=3) {
                push_unique(&mut w, random_point(rng, dim, c));
            }
        }
        2 => w.extend(qi.iter().cloned()),
        3 => {
            w.extend(v.iter().cloned());
            let mut extra = qi.to_vec();
            extra.shuffle(rng);
            let k = rng.gen_range(1..=extra.len());
            for p in extra.into_iter().take(k) {
                push_unique(&mut w, p);
            }
        }
        _ => {
            w.extend(v.iter().cloned());
            for a in v {
                let mut b = a.clone();
                let i = rng.gen_range(0..dim);
                b[i] += if rng.gen_bool(0.5) { 1 } else { -1 };
                push_unique(&mut w, b);
            }
        }
    }
    w
}

fn draw_v(rng: &mut ChaCha8Rng, dim: usize, c: i64) -> Vec<Vec<i64>> {
    let mut v = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        push_unique(&mut v, random_point(rng, dim, c));
    }
    v
}

/// Least `k ≥ 1` with `conv(v) ⊆ k·conv(identity)`.
fn free_degree(identity: &RationalPolytope, v: &[Vec<i64>]) -> Result<i64> {
    for k in 1..=10_000 {
        let scaled = identity.scaled(&int(k))?;
        let mut ok = true;
        for p in v {
            if !scaled.contains_point(&point(p))? {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(k);
        }
    }
    Err(Error::Internal("no containing multiple of the identity polytope".into()))
}

fn generate_one(spec: &CorpusSpec, rng: &mut ChaCha8Rng) -> Result<InstanceFile> {
    let (dim, c) = (spec.dim, spec.max_coord);
    let v = draw_v(rng, dim, c);
    match spec.mode {
        Mode::Free => {
            let shape = spec.identity.unwrap_or_else(|| {
                *[IdentityShape::Cube, IdentityShape::Simplex, IdentityShape::Cross].choose(rng).expect("nonempty")
            });
            let id = identity_vertices(shape, dim);
            let id_poly = RationalPolytope::new(id.iter().map(|p| point(p)).collect())?;
            let q = free_degree(&id_poly, &v)?;
            let qi: Vec<Vec<i64>> = id.iter().map(|p| p.iter().map(|x| x * q).collect()).collect();
            let w = draw_w(rng, &v, &qi, dim, c);
            Ok(InstanceFile {
                mode: Mode::Free,
                rank: Some(dim),
                matrix_size: None,
                q: Some(ExactInt(q)),
                identity_polytope: Some(
                    id.iter().map(|p| p.iter().map(|&x| ExactRational(int(x))).collect()).collect(),
                ),
                rep_weights: None,
                frames: vec![FrameSpec { v_support: exact_rows(&v), w_support: exact_rows(&w), v_coeffs: None, w_coeffs: None }],
            })
        }
        Mode::Sl => {
            let ctx = LatticeContext::sl(dim)?;
            let support = |rows: &[Vec<i64>]| WeightSupport::new(ctx, rows.iter().map(|r| Weight::new(r.clone())).collect());
            let q0 = deg_of_v(&support(&v)?, &ctx)?;
            let qi: Vec<Vec<i64>> = (0..dim).map(|i| (0..dim).map(|j| if i == j { q0 } else { 0 }).collect()).collect();
            let w = draw_w(rng, &v, &qi, dim, c);
            let rep = if rng.gen_bool(0.5) { v.clone() } else { [v.clone(), w.clone()].concat() };
            Ok(InstanceFile {
                mode: Mode::Sl,
                rank: None,
                matrix_size: Some(dim),
                q: None,
                identity_polytope: None,
                rep_weights: Some(exact_rows(&rep)),
                frames: vec![FrameSpec { v_support: exact_rows(&v), w_support: exact_rows(&w), v_coeffs: None, w_coeffs: None }],
            })
        }
    }
}

/// `spec.count` instance files, each of which validates.
pub fn generate(spec: &CorpusSpec) -> Result<Vec<InstanceFile>> {
    if spec.dim == 0 {
        return Err(Error::input("dimension must be positive"));
    }
    if spec.max_coord < 0 {
        return Err(Error::input("max coordinate must be nonnegative"));
    }
    if spec.mode == Mode::Free && spec.dim > 8 {
        return Err(Error::input("free-mode corpus dimension is limited to 8"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.count).map(|_| generate_one(spec, &mut rng)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_generated_file_validates() {
        for (mode, dim) in [(Mode::Free, 1), (Mode::Free, 2), (Mode::Free, 3), (Mode::Sl, 2), (Mode::Sl, 3)] {
            let files = generate(&CorpusSpec::new(mode, dim, 2, 30, 11)).unwrap();
            assert_eq!(files.len(), 30);
            for f in files {
                let text = f.to_json();
                let back = InstanceFile::parse(&text).unwrap();
                back.validate().unwrap_or_else(|e| panic!("{e}\n{text}"));
            }
        }
    }

    #[test]
    fn generation_is_reproducible() {
        let spec = CorpusSpec::new(Mode::Free, 2, 3, 5, 7);
        assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
        let other = CorpusSpec { seed: 8, ..spec.clone() };
        assert_ne!(generate(&spec).unwrap(), generate(&other).unwrap());
    }

    #[test]
    fn identity_shapes_contain_the_origin() {
        for shape in [IdentityShape::Cube, IdentityShape::Simplex, IdentityShape::Cross] {
            let p = RationalPolytope::new(identity_vertices(shape, 3).iter().map(|v| point(v)).collect()).unwrap();
            assert!(p.contains_point(&point(&[0, 0, 0])).unwrap());
        }
    }
}
