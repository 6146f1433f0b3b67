//! Tanaka prolongation spaces of a non-positively graded algebra `m ⊕ g₀`.
//!
//! Level `k` consists of the degree-`k` maps `u: g₋ → T` with
//! `u([X, Y]) = act(u(X), Y) − act(u(Y), X)`, where `T_j = g_j` for `j ≤ 0` and the
//! previously computed level for `j > 0`. On `T_j` with `j ≤ 0`, `act` is the bracket; on a
//! prolongation element it is evaluation. This is the standard construction; only the spaces
//! are built, not the bracket on the full prolongation.

use serde::Serialize;

use crate::lie::{GradedLieAlgebra, LieError};
use crate::linalg::{kernel_basis, rank, Matrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProlongationLevel {
    pub k: i32,
    pub dim: usize,
    /// `basis[b][p]`: component of basis map `b` on the `p`-th negative basis vector, as a vector
    /// in `T_{deg + k}`.
    pub basis: Vec<Vec<Vec<Rational>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prolongation {
    pub levels: Vec<ProlongationLevel>,
    pub finite_type: bool,
    /// Every level is determined by its restriction to `g₋₁`.
    pub determined_by_generators: bool,
}

impl Prolongation {
    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.dim).collect()
    }
}

/// The graded pieces `T_j` seen so far, with the `act` operation.
struct Tower<'a> {
    g: &'a GradedLieAlgebra,
    neg: Vec<usize>,
    levels: Vec<ProlongationLevel>,
}

impl Tower<'_> {
    fn dim(&self, j: i32) -> usize {
        if j <= 0 {
            self.g.indices_of_degree(j).len()
        } else {
            self.levels.get(j as usize - 1).map_or(0, |l| l.dim)
        }
    }

    /// `act(e_b, X)` for basis vector `b` of `T_j` and negative basis vector at position `p`,
    /// as a vector in `T_{j + deg X}`.
    fn act(&self, j: i32, b: usize, p: usize) -> Vec<Rational> {
        let x = self.neg[p];
        let dx = self.g.degree(x);
        if j <= 0 {
            let w = self.g.indices_of_degree(j)[b];
            let target = self.g.indices_of_degree(j + dx);
            let br = self.g.bracket_basis(w, x);
            target
                .iter()
                .map(|t| br.iter().find(|(i, _)| i == t).map_or_else(Rational::zero, |(_, c)| c.clone()))
                .collect()
        } else {
            self.levels[j as usize - 1].basis[b][p].clone()
        }
    }

    fn solve_level(&self, k: i32) -> ProlongationLevel {
        let g = self.g;
        let neg_deg: Vec<i32> = self.neg.iter().map(|&i| g.degree(i)).collect();
        let mut offsets = Vec::with_capacity(self.neg.len());
        let mut ncols = 0;
        for &d in &neg_deg {
            offsets.push(ncols);
            ncols += self.dim(d + k);
        }
        let pos = |i: usize| self.neg.iter().position(|&n| n == i).expect("negative index");
        let mut triplets = Vec::new();
        let mut row = 0;
        for a in 0..self.neg.len() {
            for b in a + 1..self.neg.len() {
                let out_deg = neg_deg[a] + neg_deg[b] + k;
                let out_dim = self.dim(out_deg);
                // u([X, Y])
                for (m, c) in g.bracket_basis(self.neg[a], self.neg[b]) {
                    let pm = pos(m);
                    for r in 0..out_dim {
                        triplets.push((row + r, offsets[pm] + r, c.clone()));
                    }
                }
                // − act(u(X), Y) + act(u(Y), X)
                for (src, other, sign) in [(a, b, -1), (b, a, 1)] {
                    let j = neg_deg[src] + k;
                    for t in 0..self.dim(j) {
                        for (r, v) in self.act(j, t, other).into_iter().enumerate() {
                            if !v.is_zero() {
                                let v = if sign < 0 { -v } else { v };
                                triplets.push((row + r, offsets[src] + t, v));
                            }
                        }
                    }
                }
                row += out_dim;
            }
        }
        let kernel = kernel_basis(&Matrix::from_triplets(row, ncols, triplets));
        let basis: Vec<Vec<Vec<Rational>>> = kernel
            .basis()
            .iter()
            .map(|v| {
                (0..self.neg.len()).map(|p| v[offsets[p]..offsets[p] + self.dim(neg_deg[p] + k)].to_vec()).collect()
            })
            .collect();
        ProlongationLevel { k, dim: basis.len(), basis }
    }

    fn generator_restriction_injective(&self, level: &ProlongationLevel) -> bool {
        if level.dim == 0 {
            return true;
        }
        let gens: Vec<usize> = (0..self.neg.len()).filter(|&p| self.g.degree(self.neg[p]) == -1).collect();
        let cols: Vec<Vec<Rational>> =
            level.basis.iter().map(|m| gens.iter().flat_map(|&p| m[p].clone()).collect()).collect();
        let len = cols[0].len();
        len > 0 && rank(&Matrix::from_columns(len, &cols)) == level.dim
    }
}

/// Levels `1..=max_k`, stopping once two consecutive levels vanish (then `finite_type`).
pub fn prolong(g: &GradedLieAlgebra, max_k: i32) -> Result<Prolongation, LieError> {
    let report = g.validate(true);
    if !report.is_valid() {
        return Err(LieError::ValidationFailure(report.summary()));
    }
    if g.height() > 0 {
        return Err(LieError::NotNonPositivelyGraded);
    }
    let mut tower = Tower { g, neg: g.negative_indices(), levels: Vec::new() };
    let mut determined = true;
    let mut finite_type = false;
    for k in 1..=max_k.max(1) {
        let level = tower.solve_level(k);
        determined &= tower.generator_restriction_injective(&level);
        let zero = level.dim == 0;
        tower.levels.push(level);
        if zero {
            if k > 1 && tower.levels[k as usize - 2].dim == 0 {
                finite_type = true;
                break;
            }
            if k == max_k.max(1) {
                // one extra level to certify
                let next = tower.solve_level(k + 1);
                finite_type = next.dim == 0;
                tower.levels.push(next);
                break;
            }
        }
    }
    Ok(Prolongation { levels: tower.levels, finite_type, determined_by_generators: determined })
}

pub fn prolongation_dims(g: &GradedLieAlgebra, max_k: i32) -> Result<Vec<usize>, LieError> {
    Ok(prolong(g, max_k)?.dims())
}

/// Substitutes each basis map of every level into the defining condition for all pairs of
/// negative basis vectors.
pub fn verify_levels(g: &GradedLieAlgebra, p: &Prolongation) -> bool {
    let mut tower = Tower { g, neg: g.negative_indices(), levels: Vec::new() };
    for level in &p.levels {
        let neg_deg: Vec<i32> = tower.neg.iter().map(|&i| g.degree(i)).collect();
        for map in &level.basis {
            for a in 0..tower.neg.len() {
                for b in 0..tower.neg.len() {
                    let out_deg = neg_deg[a] + neg_deg[b] + level.k;
                    let mut lhs = vec![Rational::zero(); tower.dim(out_deg)];
                    for (m, c) in g.bracket_basis(tower.neg[a], tower.neg[b]) {
                        let pm = tower.neg.iter().position(|&n| n == m).expect("negative index");
                        for (l, x) in lhs.iter_mut().zip(&map[pm]) {
                            *l += &c * x;
                        }
                    }
                    let mut rhs = vec![Rational::zero(); lhs.len()];
                    for (src, other, sign) in [(a, b, 1), (b, a, -1)] {
                        let j = neg_deg[src] + level.k;
                        for (t, coeff) in map[src].iter().enumerate() {
                            if coeff.is_zero() {
                                continue;
                            }
                            for (r, v) in tower.act(j, t, other).into_iter().enumerate() {
                                let term = coeff * &v;
                                if sign > 0 {
                                    rhs[r] += term;
                                } else {
                                    rhs[r] -= term;
                                }
                            }
                        }
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        tower.levels.push(level.clone());
    }
    true
}
