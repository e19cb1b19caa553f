//! Koszul homology of commuting operators on a finite-dimensional space.
//!
//! `M = Q^v` with operators `T_1..T_r`; strand `i` is `M (x) L^i(Q^r)`,
//! coordinatized as one copy of `M` per `i`-subset in lexicographic order.

use num_traits::Zero;

use super::KoszulError;
use crate::complex::{drop_at, koszul_sign, subset_index, subsets};
use crate::linalg::{self, Matrix, Rational, RowSpace};

fn validate(ops: &[Matrix]) -> Result<usize, KoszulError> {
    let dim = ops.first().map(Matrix::rows).ok_or(KoszulError::NoOperators)?;
    for (index, op) in ops.iter().enumerate() {
        if op.rows() != dim || op.cols() != dim {
            return Err(KoszulError::OperatorShape {
                index,
                rows: op.rows(),
                cols: op.cols(),
                dim,
            });
        }
    }
    for a in 0..ops.len() {
        for b in a + 1..ops.len() {
            let ab = ops[a].mul(&ops[b])?;
            let ba = ops[b].mul(&ops[a])?;
            if ab != ba {
                return Err(KoszulError::NonCommuting {
                    first: a,
                    second: b,
                });
            }
        }
    }
    Ok(dim)
}

/// Differential from strand `i` to strand `i - 1`.
fn differential(ops: &[Matrix], dim: usize, i: usize) -> Matrix {
    let r = ops.len();
    let src = subsets(r, i);
    let tgt_count = if i == 0 { 0 } else { subsets(r, i - 1).len() };
    let mut m = Matrix::zeros(tgt_count * dim, src.len() * dim);
    if i == 0 {
        return m;
    }
    for (s_idx, s) in src.iter().enumerate() {
        for (t, &j) in s.iter().enumerate() {
            let t_idx = subset_index(r, &drop_at(s, t));
            let sign = Rational::from_integer(koszul_sign(t).into());
            for a in 0..dim {
                for b in 0..dim {
                    let x = ops[j].get(a, b);
                    if !x.is_zero() {
                        m.add_to(t_idx * dim + a, s_idx * dim + b, &(x * &sign));
                    }
                }
            }
        }
    }
    m
}

/// Homology of strand `i` as a subquotient: complement representatives of
/// the boundaries inside the cycles, plus the boundary basis.
struct HomologySpace {
    reps: Vec<Vec<Rational>>,
    boundaries: Vec<Vec<Rational>>,
}

fn homology_space(ops: &[Matrix], dim: usize, i: usize) -> HomologySpace {
    let r = ops.len();
    let len = subsets(r, i).len() * dim;
    if len == 0 {
        return HomologySpace {
            reps: vec![],
            boundaries: vec![],
        };
    }
    let cycles = linalg::nullspace_basis(&differential(ops, dim, i));
    let d_in = differential(ops, dim, i + 1);
    let mut space = RowSpace::new(len);
    for c in 0..d_in.cols() {
        space.insert(&d_in.column(c)).expect("strand length");
    }
    let boundaries = space.basis();
    let reps = cycles
        .into_iter()
        .filter(|z| space.insert(z).expect("strand length"))
        .collect();
    HomologySpace { reps, boundaries }
}

/// Matrix of `T (x) id` on the homology of strand `i`, in the basis of
/// complement representatives.
fn induced_operator(op: &Matrix, dim: usize, h: &HomologySpace) -> Matrix {
    let k = h.reps.len();
    let mut m = Matrix::zeros(k, k);
    for (col, z) in h.reps.iter().enumerate() {
        let tz: Vec<Rational> = z
            .chunks(dim)
            .flat_map(|block| op.mul_vec(block).expect("block length"))
            .collect();
        let coords = linalg::in_affine(&tz, &h.reps, &h.boundaries)
            .expect("consistent lengths")
            .expect("operator maps cycles to cycles");
        for (row, x) in coords.into_iter().enumerate() {
            m.set(row, col, x);
        }
    }
    m
}

/// `dim H_i` of the Koszul complex of the commuting operators `ops`.
pub fn generic_koszul_dims(ops: &[Matrix], i: usize) -> Result<usize, KoszulError> {
    let dim = validate(ops)?;
    if i > ops.len() {
        return Ok(0);
    }
    Ok(homology_space(ops, dim, i).reps.len())
}

/// Checks the dimension count of the exact sequence
/// `0 -> H_0(T_1; H_i(T')) -> H_i(T) -> H_1(T_1; H_{i-1}(T')) -> 0`
/// where `T_1 = ops[0]` and `T' = ops[1..]`. Both sides are computed
/// independently; the outer terms use the operator induced by `T_1` on the
/// inner homology.
pub fn lemma13_check(ops: &[Matrix], i: usize) -> Result<bool, KoszulError> {
    let dim = validate(ops)?;
    let lhs = generic_koszul_dims(ops, i)?;
    let (first, rest) = ops.split_first().expect("validated non-empty");

    let coker_dim = {
        let inner = homology_space(rest, dim, i);
        let t = induced_operator(first, dim, &inner);
        inner.reps.len() - linalg::rank(&t)
    };
    let ker_dim = if i == 0 {
        0
    } else {
        let inner = homology_space(rest, dim, i - 1);
        let t = induced_operator(first, dim, &inner);
        inner.reps.len() - linalg::rank(&t)
    };
    Ok(lhs == coker_dim + ker_dim)
}
