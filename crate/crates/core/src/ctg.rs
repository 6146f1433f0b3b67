//! First cohomology `H¹_l(g₋, t*(g))`, `l ≥ 1`, of cotangent algebras in closed form, and its
//! comparison with the general Hodge computation.
//!
//! Maps `g₋₁ → W` are stored as vectors indexed by `(generator position, target position)`
//! in lexicographic order.

use std::collections::HashMap;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::admissibility::cotangent_standard_metric;
use crate::cochain::{CochainComplex, WedgeBasisElement};
use crate::hodge::{Hodge, HodgeError};
use crate::lie::GradedLieAlgebra;
use crate::linalg::{kernel_basis, qi, rank, Matrix, Rational, Subspace};
use crate::AlgebraElement;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CtgError {
    #[error("degree {l} outside 1..={max}")]
    Range { l: i32, max: i32 },
    #[error("algebra has positive degrees")]
    NotNonPositive,
    #[error("algebra is not of depth one")]
    NotDepthOne,
    #[error(transparent)]
    Hodge(#[from] HodgeError),
}

/// Space of linear maps from the generators `g₋₁` to a list of target basis vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomCoords {
    pub generators: Vec<usize>,
    pub targets: Vec<usize>,
}

impl HomCoords {
    pub fn dim(&self) -> usize {
        self.generators.len() * self.targets.len()
    }

    pub fn index(&self, generator_pos: usize, target_pos: usize) -> usize {
        generator_pos * self.targets.len() + target_pos
    }

    /// Restricts a 1-cochain (coefficients over `basis`) to the generators, keeping only the
    /// listed targets.
    fn restrict(&self, basis: &[WedgeBasisElement], v: &[Rational]) -> Vec<Rational> {
        let gpos: HashMap<usize, usize> = self.generators.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let tpos: HashMap<usize, usize> = self.targets.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let mut out = vec![Rational::zero(); self.dim()];
        for (e, x) in basis.iter().zip(v) {
            if let (Some(&gp), Some(&tp)) = (gpos.get(&e.args[0]), tpos.get(&e.value)) {
                out[self.index(gp, tp)] = x.clone();
            }
        }
        out
    }
}

fn require_nonpositive(g: &GradedLieAlgebra) -> Result<(), CtgError> {
    if g.height() > 0 {
        Err(CtgError::NotNonPositive)
    } else {
        Ok(())
    }
}

/// Closed `g`-valued 1-cochains of degree 1, restricted to `Hom(g₋₁, g₀)`.
#[derive(Debug, Clone)]
pub struct SSpace {
    pub coords: HomCoords,
    pub space: Subspace,
    /// Restriction to the generators is injective on the kernel.
    pub restriction_injective: bool,
    /// The kernel of `∂_g` on `C¹_l(g₋, g)` vanishes for every `l ≥ 2`.
    pub higher_kernels_vanish: bool,
}

pub fn s_space(g: &GradedLieAlgebra) -> Result<SSpace, CtgError> {
    require_nonpositive(g)?;
    let c = CochainComplex::adjoint(g);
    let coords = HomCoords { generators: g.indices_of_degree(-1), targets: g.indices_of_degree(0) };
    let basis = c.basis(1, 1);
    let kernel = kernel_basis(&c.differential(1, 1));
    let restricted: Vec<Vec<Rational>> = kernel.basis().iter().map(|v| coords.restrict(&basis, v)).collect();
    let space = Subspace::span(coords.dim(), &restricted);
    let restriction_injective = space.dim() == kernel.dim();
    let higher_kernels_vanish = (2..=g.depth()).all(|l| kernel_basis(&c.differential(1, l)).dim() == 0);
    Ok(SSpace { coords, space, restriction_injective, higher_kernels_vanish })
}

#[derive(Debug, Clone)]
pub struct ZbSpaces {
    pub l: i32,
    /// Generators and the basis of `g_{1-l}`; a map sends a generator to a functional on it.
    pub coords: HomCoords,
    pub z: Subspace,
    pub b: Subspace,
    /// Restriction is injective on closed cochains.
    pub restriction_injective: bool,
    /// Closed cochains of degree `l` on all of `g₋`, as coefficient vectors over
    /// `CochainComplex::coadjoint(g).basis(1, l)`, in the same order as their restrictions.
    pub closed_cochains: Vec<Vec<Rational>>,
}

impl ZbSpaces {
    pub fn b_in_z(&self) -> bool {
        self.z.contains_subspace(&self.b)
    }

    pub fn quotient_dim(&self) -> usize {
        self.z.dim() - self.b.dim()
    }
}

pub fn zb_range(g: &GradedLieAlgebra) -> std::ops::RangeInclusive<i32> {
    1..=g.depth() + 1
}

/// `Z_l` as the restriction of closed `g*`-valued cochains, and `B_l = {β̂}` from brackets.
pub fn zb_spaces(g: &GradedLieAlgebra, l: i32) -> Result<ZbSpaces, CtgError> {
    require_nonpositive(g)?;
    if !zb_range(g).contains(&l) {
        return Err(CtgError::Range { l, max: g.depth() + 1 });
    }
    let c = CochainComplex::coadjoint(g);
    let coords = HomCoords { generators: g.indices_of_degree(-1), targets: g.indices_of_degree(1 - l) };
    let basis = c.basis(1, l);
    let kernel = kernel_basis(&c.differential(1, l));
    let restricted: Vec<Vec<Rational>> = kernel.basis().iter().map(|v| coords.restrict(&basis, v)).collect();
    let z = Subspace::span(coords.dim(), &restricted);
    let restriction_injective = z.dim() == kernel.dim();
    // β̂(X)(Z) = -β([X, Z]) for β = e^m, m in degree -l.
    let hats: Vec<Vec<Rational>> = g
        .indices_of_degree(-l)
        .into_iter()
        .map(|m| {
            let mut v = vec![Rational::zero(); coords.dim()];
            for (xp, &x) in coords.generators.iter().enumerate() {
                for (zp, &zi) in coords.targets.iter().enumerate() {
                    if let Some((_, c)) = g.bracket_basis(x, zi).into_iter().find(|(k, _)| *k == m) {
                        v[coords.index(xp, zp)] = -c;
                    }
                }
            }
            v
        })
        .collect();
    let b = Subspace::span(coords.dim(), &hats);
    Ok(ZbSpaces { l, coords, z, b, restriction_injective, closed_cochains: kernel.into_basis() })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CtgDegreeRow {
    pub l: i32,
    /// Only for `l = 1`.
    pub s_dim: Option<usize>,
    pub z_dim: usize,
    pub b_dim: usize,
    pub b_in_z: bool,
    pub closed_form: usize,
    pub general: usize,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CtgCohomologyReport {
    pub algebra: String,
    pub s_restriction_injective: bool,
    pub s_higher_kernels_vanish: bool,
    pub z_restriction_injective: bool,
    pub rows: Vec<CtgDegreeRow>,
}

impl CtgCohomologyReport {
    pub fn all_agree(&self) -> bool {
        self.s_restriction_injective
            && self.s_higher_kernels_vanish
            && self.z_restriction_injective
            && self.rows.iter().all(|r| r.agree && r.b_in_z)
    }

    pub fn row(&self, l: i32) -> Option<&CtgDegreeRow> {
        self.rows.iter().find(|r| r.l == l)
    }
}

/// Closed-form `H¹_l(g₋, t*(g))` against the harmonic computation on `t*(g)` with the standard
/// metric built from the identity Gram, for `l = 1 ..= height(t*(g)) + 2`.
pub fn adunat_report(g: &GradedLieAlgebra) -> Result<CtgCohomologyReport, CtgError> {
    adunat_report_with(g, false)
}

/// As [`adunat_report`], optionally computing the degrees in parallel; the result is the same.
pub fn adunat_report_with(g: &GradedLieAlgebra, parallel: bool) -> Result<CtgCohomologyReport, CtgError> {
    let s = s_space(g)?;
    let (h, metric, _, _) =
        cotangent_standard_metric(g, &Matrix::identity(g.dim())).map_err(|_| CtgError::NotNonPositive)?;
    let hodge = Hodge::new(&h, &metric);
    let row = |l: i32| -> Result<(CtgDegreeRow, bool), CtgError> {
        let (z_dim, b_dim, b_in_z, injective) = if zb_range(g).contains(&l) {
            let zb = zb_spaces(g, l)?;
            (zb.z.dim(), zb.b.dim(), zb.b_in_z(), zb.restriction_injective)
        } else {
            (0, 0, true, true)
        };
        let s_dim = (l == 1).then_some(s.space.dim());
        let closed_form = s_dim.unwrap_or(0) + z_dim - b_dim;
        let general = hodge.cohomology_dim(1, l)?.harmonic;
        let r = CtgDegreeRow { l, s_dim, z_dim, b_dim, b_in_z, closed_form, general, agree: closed_form == general };
        Ok((r, injective))
    };
    let degrees: Vec<i32> = (1..=h.height() + 2).collect();
    let computed: Vec<Result<(CtgDegreeRow, bool), CtgError>> =
        if parallel { degrees.into_par_iter().map(row).collect() } else { degrees.into_iter().map(row).collect() };
    let mut rows = Vec::new();
    let mut z_injective = true;
    for c in computed {
        let (r, injective) = c?;
        z_injective &= injective;
        rows.push(r);
    }
    Ok(CtgCohomologyReport {
        algebra: h.name().to_string(),
        s_restriction_injective: s.restriction_injective,
        s_higher_kernels_vanish: s.higher_kernels_vanish,
        z_restriction_injective: z_injective,
        rows,
    })
}

/// Checks `∂_h(α) = ∂_g(α_g) + ∂_{g*}(α_{g*})` on `samples` random 1-cochains of `t*(g)`.
pub fn check_decomp_deriv<R: Rng>(g: &GradedLieAlgebra, rng: &mut R, samples: usize) -> Result<bool, CtgError> {
    require_nonpositive(g)?;
    let h = g.cotangent().map_err(|_| CtgError::NotNonPositive)?;
    let n = g.dim();
    let ch = CochainComplex::adjoint(&h);
    let cg = CochainComplex::adjoint(g);
    let cs = CochainComplex::coadjoint(g);
    let (h1, h2) = (ch.full_basis(1), ch.full_basis(2));
    let pos2: HashMap<&WedgeBasisElement, usize> = h2.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let (dh, dg, ds) = (ch.differential_full(1), cg.differential_full(1), cs.differential_full(1));
    let (g1, s1) = (cg.full_basis(1), cs.full_basis(1));
    let pos_g: HashMap<&WedgeBasisElement, usize> = g1.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let pos_s: HashMap<&WedgeBasisElement, usize> = s1.iter().enumerate().map(|(i, e)| (e, i)).collect();
    for _ in 0..samples {
        let alpha: Vec<Rational> = h1.iter().map(|_| qi(rng.gen_range(-3..=3))).collect();
        let mut alpha_g = vec![Rational::zero(); g1.len()];
        let mut alpha_s = vec![Rational::zero(); s1.len()];
        for (e, x) in h1.iter().zip(&alpha) {
            if e.value < n {
                alpha_g[pos_g[e]] = x.clone();
            } else {
                let dual = WedgeBasisElement { args: e.args.clone(), value: e.value - n };
                alpha_s[pos_s[&dual]] = x.clone();
            }
        }
        let mut rhs = vec![Rational::zero(); h2.len()];
        for (e, x) in cg.full_basis(2).iter().zip(dg.mul_vec(&alpha_g)) {
            rhs[pos2[e]] += x;
        }
        for (e, x) in cs.full_basis(2).iter().zip(ds.mul_vec(&alpha_s)) {
            let lifted = WedgeBasisElement { args: e.args.clone(), value: e.value + n };
            rhs[pos2[&lifted]] += x;
        }
        if dh.mul_vec(&alpha) != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sequences of generators `(X_1, …, X_s)` evaluated as `ad_{X_1} ⋯ ad_{X_{s-1}} X_s`.
fn bracket_words(g: &GradedLieAlgebra, s: usize) -> Vec<(Vec<usize>, Vec<Rational>)> {
    let gens = g.indices_of_degree(-1);
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..s {
        words = words.into_iter().flat_map(|w| gens.iter().map(move |&x| [w.clone(), vec![x]].concat())).collect();
    }
    words
        .into_iter()
        .map(|w| {
            let value = nested(g, &w);
            (w, value)
        })
        .collect()
}

/// `ad_{w_0} ⋯ ad_{w_{s-2}} w_{s-1}` in coordinates.
fn nested(g: &GradedLieAlgebra, w: &[usize]) -> Vec<Rational> {
    let mut v = AlgebraElement::basis(g.dim(), *w.last().expect("nonempty word")).0;
    for &x in w[..w.len() - 1].iter().rev() {
        v = g.ad_basis(x).mul_vec(&v);
    }
    v
}

/// The functional on `g_{s-l}` predicted by the relation family for a generator word and a
/// map `α: g₋₁ → (g_{1-l})*`.
fn word_functional(g: &GradedLieAlgebra, zb: &ZbSpaces, alpha: &[Rational], word: &[usize]) -> Vec<Rational> {
    let s = word.len();
    let domain = g.indices_of_degree(s as i32 - zb.l);
    let gpos: HashMap<usize, usize> = zb.coords.generators.iter().enumerate().map(|(p, &i)| (i, p)).collect();
    let eval_alpha = |x: usize, v: &[Rational]| -> Rational {
        let gp = gpos[&x];
        let mut acc = Rational::zero();
        for (tp, &t) in zb.coords.targets.iter().enumerate() {
            if !v[t].is_zero() {
                acc += &alpha[zb.coords.index(gp, tp)] * &v[t];
            }
        }
        acc
    };
    domain
        .iter()
        .map(|&z| {
            let mut total = Rational::zero();
            let mut inner = AlgebraElement::basis(g.dim(), z).0;
            for i in 0..s {
                // inner holds ad_{X_{i-1}} ⋯ ad_{X_0} Z
                let v = if i + 1 < s {
                    g.ad_matrix(&AlgebraElement(nested(g, &word[i + 1..]))).expect("dimension").mul_vec(&inner)
                } else {
                    inner.clone()
                };
                let term = eval_alpha(word[i], &v);
                if i % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
                inner = g.ad_basis(word[i]).mul_vec(&inner);
            }
            total
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationSpotCheck {
    pub l: i32,
    pub words_checked: usize,
    /// The word functional reproduces the closed cochain evaluated on the word's value.
    pub matches_cochains: bool,
    /// Words with equal values give equal functionals on every element of `Z_l`.
    pub equal_words_consistent: bool,
}

/// Exercises the word relations that characterize `Z_l` on words of length `2 ≤ s ≤ min(l, depth)`.
pub fn spot_check_relations(g: &GradedLieAlgebra, l: i32) -> Result<RelationSpotCheck, CtgError> {
    let zb = zb_spaces(g, l)?;
    let c = CochainComplex::coadjoint(g);
    let basis = c.basis(1, l);
    let smax = l.min(g.depth()).max(1) as usize;
    let mut words_checked = 0;
    let mut matches_cochains = true;
    let mut equal_words_consistent = true;
    for s in 2..=smax {
        let words = bracket_words(g, s);
        let domain = g.indices_of_degree(s as i32 - l);
        for gamma in &zb.closed_cochains {
            let alpha = zb.coords.restrict(&basis, gamma);
            let cochain = c.from_vector(1, Some(l), &basis, gamma);
            let mut by_value: Vec<(Vec<Rational>, Vec<Rational>)> = Vec::new();
            for (w, value) in &words {
                let predicted = word_functional(g, &zb, &alpha, w);
                let actual = c.evaluate(&cochain, &[AlgebraElement(value.clone())]).expect("negative argument");
                let actual: Vec<Rational> = domain.iter().map(|&z| actual[z].clone()).collect();
                matches_cochains &= predicted == actual;
                match by_value.iter().find(|(v, _)| v == value) {
                    Some((_, f)) => equal_words_consistent &= *f == predicted,
                    None => by_value.push((value.clone(), predicted)),
                }
                words_checked += 1;
            }
        }
    }
    Ok(RelationSpotCheck { l, words_checked, matches_cochains, equal_words_consistent })
}

/// `{f: V → g₀ : f(X)Y + f(Y)X = 0}` for a representation given by one matrix per basis
/// vector of `g₀`; coordinates `(x, a)` mean `f(e_x) = Σ_a f_{x,a} A_a`.
pub fn skew_prolongation(action: &[Matrix]) -> Subspace {
    pair_condition(action, true)
}

/// `{f: V → g₀ : f(X)Y = f(Y)X}`, the first (symmetric) prolongation.
pub fn symmetric_prolongation(action: &[Matrix]) -> Subspace {
    pair_condition(action, false)
}

fn pair_condition(action: &[Matrix], skew: bool) -> Subspace {
    let m = action.len();
    let n = action.first().map_or(0, Matrix::nrows);
    let mut triplets = Vec::new();
    let mut row = 0;
    for x in 0..n {
        for y in x..n {
            // component r of f(e_x) e_y ± f(e_y) e_x
            for r in 0..n {
                for (a, mat) in action.iter().enumerate() {
                    triplets.push((row + r, x * m + a, mat.get(r, y)));
                    let c = mat.get(r, x);
                    triplets.push((row + r, y * m + a, if skew { c } else { -c }));
                }
            }
            row += n;
        }
    }
    kernel_basis(&Matrix::from_triplets(row, n * m, triplets))
}

/// Dimensions of the `g₀`-invariant skew forms and of the symmetric forms for which every
/// element of `g₀` is symmetric.
pub fn invariant_forms(action: &[Matrix]) -> (usize, usize) {
    let n = action.first().map_or(0, Matrix::nrows);
    let pairs_skew: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let pairs_sym: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    // Coefficient of the unknown for (i, j) in b(e_p, e_q).
    let entry = |pairs: &[(usize, usize)], skew: bool, p: usize, q: usize| -> Option<(usize, Rational)> {
        let (i, j, sign) = if p <= q { (p, q, 1) } else { (q, p, if skew { -1 } else { 1 }) };
        pairs.iter().position(|&pr| pr == (i, j)).map(|k| (k, qi(sign)))
    };
    let solve = |pairs: &[(usize, usize)], skew: bool| -> usize {
        let mut triplets = Vec::new();
        let mut row = 0;
        for mat in action {
            for x in 0..n {
                for y in 0..n {
                    // skew: ω(Ax, y) + ω(x, Ay);  symmetric: s(Ax, y) - s(x, Ay)
                    for r in 0..n {
                        let ax = mat.get(r, x);
                        if !ax.is_zero() {
                            if let Some((k, s)) = entry(pairs, skew, r, y) {
                                triplets.push((row, k, &ax * &s));
                            }
                        }
                        let ay = mat.get(r, y);
                        if !ay.is_zero() {
                            if let Some((k, s)) = entry(pairs, skew, x, r) {
                                let c = &ay * &s;
                                triplets.push((row, k, if skew { c } else { -c }));
                            }
                        }
                    }
                    row += 1;
                }
            }
        }
        pairs.len() - rank(&Matrix::from_triplets(row, pairs.len(), triplets))
    };
    (solve(&pairs_skew, true), solve(&pairs_sym, false))
}

/// Matrix of `μ*: V* → Hom(V, g₀*)`, `μ*(β)(x)(A) = β(Ax)`, in coordinates `(x, a)`.
pub fn mu_star(action: &[Matrix]) -> Matrix {
    let m = action.len();
    let n = action.first().map_or(0, Matrix::nrows);
    let mut triplets = Vec::new();
    for (a, mat) in action.iter().enumerate() {
        for (k, x, c) in mat.iter() {
            triplets.push((x * m + a, k, c.clone()));
        }
    }
    Matrix::from_triplets(n * m, n, triplets)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthOneReport {
    pub algebra: String,
    pub skew_prolongation_dim: usize,
    pub symmetric_prolongation_dim: usize,
    pub s_dim: usize,
    pub hom_dim: usize,
    pub mu_star_rank: usize,
    /// Coordinate-orthogonal complement of `μ*(V*)` in `Hom(V, g₀*)`.
    pub mu_star_complement: Vec<Vec<Rational>>,
    pub invariant_skew_forms: usize,
    pub symmetric_forms: usize,
    /// `dim g₀^[1] + dim Hom(V, g₀*) − rank μ*`.
    pub formula_h1_1: usize,
    /// `dim (Λ²V*)^{g₀} + dim (S²V*)_{g₀}`.
    pub formula_h1_2: usize,
    pub h1_1: usize,
    pub h1_2: usize,
    pub higher_vanish: bool,
}

impl DepthOneReport {
    pub fn formulas_hold(&self) -> bool {
        self.formula_h1_1 == self.h1_1 && self.formula_h1_2 == self.h1_2 && self.higher_vanish
    }
}

/// Compares the depth-one structural formula for `H¹_1` and `H¹_2` of `t*(V ⊕ g₀)` with the
/// computed cohomology.
pub fn depth_one_report(g: &GradedLieAlgebra) -> Result<DepthOneReport, CtgError> {
    require_nonpositive(g)?;
    if g.depth() != 1 {
        return Err(CtgError::NotDepthOne);
    }
    let action = g.degree_zero_action();
    let skew = skew_prolongation(&action).dim();
    let sym = symmetric_prolongation(&action).dim();
    let s_dim = s_space(g)?.space.dim();
    let hom_dim = g.indices_of_degree(-1).len() * g.indices_of_degree(0).len();
    let mu = mu_star(&action);
    let mu_star_rank = rank(&mu);
    let image = if mu.ncols() == 0 { Subspace::zero(hom_dim) } else { crate::linalg::image_basis(&mu) };
    let mu_star_complement = image.orthogonal_complement().into_basis();
    let (invariant_skew_forms, symmetric_forms) = invariant_forms(&action);
    let report = adunat_report(g)?;
    let general = |l: i32| report.row(l).map_or(0, |r| r.general);
    Ok(DepthOneReport {
        algebra: g.name().to_string(),
        skew_prolongation_dim: skew,
        symmetric_prolongation_dim: sym,
        s_dim,
        hom_dim,
        mu_star_rank,
        mu_star_complement,
        invariant_skew_forms,
        symmetric_forms,
        formula_h1_1: skew + hom_dim - mu_star_rank,
        formula_h1_2: invariant_skew_forms + symmetric_forms,
        h1_1: general(1),
        h1_2: general(2),
        higher_vanish: report.rows.iter().filter(|r| r.l >= 3).all(|r| r.general == 0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry;

    fn gl(n: usize) -> Vec<Matrix> {
        (0..n * n).map(|k| Matrix::from_triplets(n, n, [(k / n, k % n, qi(1))])).collect()
    }

    #[test]
    fn so2_invariant_forms() {
        let g = registry::get("so2-V2").unwrap();
        assert_eq!(invariant_forms(&g.degree_zero_action()), (1, 2));
    }

    #[test]
    fn trivial_and_full_invariant_forms() {
        assert_eq!(invariant_forms(&[Matrix::zeros(3, 3)]), (3, 6));
        assert_eq!(invariant_forms(&gl(2)), (0, 0));
        assert_eq!(invariant_forms(&gl(3)), (0, 0));
    }

    #[test]
    fn skew_prolongation_of_gl_is_everything_skew() {
        for n in 2..=3 {
            assert_eq!(skew_prolongation(&gl(n)).dim(), n * n * (n - 1) / 2);
            assert_eq!(symmetric_prolongation(&gl(n)).dim(), n * n * (n + 1) / 2);
        }
        assert_eq!(skew_prolongation(&[]).dim(), 0);
    }

    #[test]
    fn so2_prolongations_vanish_and_match_s() {
        let g = registry::get("so2-V2").unwrap();
        let s = s_space(&g).unwrap();
        assert!(s.restriction_injective && s.higher_kernels_vanish);
        assert_eq!(s.space.dim(), 0);
        assert_eq!(skew_prolongation(&g.degree_zero_action()).dim(), 0);
    }

    #[test]
    fn s_space_is_symmetric_prolongation_in_depth_one() {
        let g = registry::get("nonab-g0").unwrap();
        let s = s_space(&g).unwrap();
        assert!(s.space.same_span(&symmetric_prolongation(&g.degree_zero_action())));
    }

    #[test]
    fn heis3_higher_kernel_is_zero() {
        let s = s_space(&registry::get("heis3").unwrap()).unwrap();
        assert!(s.higher_kernels_vanish && s.restriction_injective);
    }

    #[test]
    fn zb_examples() {
        let g = registry::get("so2-V2").unwrap();
        let zb = zb_spaces(&g, 1).unwrap();
        assert_eq!(zb.z.dim(), 2);
        assert_eq!(zb.b.dim(), rank(&mu_star(&g.degree_zero_action())));
        let g = registry::get("nonab-g0").unwrap();
        let zb = zb_spaces(&g, 1).unwrap();
        // Every A x lies in span{e1}, so μ* has rank 1.
        assert_eq!((zb.z.dim(), zb.b.dim()), (4, 1));
        assert_eq!(zb_spaces(&g, 3).unwrap_err(), CtgError::Range { l: 3, max: 2 });
        assert_eq!(zb_spaces(&g, 0).unwrap_err(), CtgError::Range { l: 0, max: 2 });
    }

    #[test]
    fn b_inside_z_on_registry() {
        for name in ["heis3", "so2-V2", "nonab-g0", "free-nilp-2-3"] {
            let g = registry::get(name).unwrap();
            for l in zb_range(&g) {
                let zb = zb_spaces(&g, l).unwrap();
                assert!(zb.b_in_z() && zb.restriction_injective, "{name} l={l}");
            }
        }
        let g = registry::get("sl2-graded").unwrap().nonpositive_part();
        assert!(zb_spaces(&g, 1).unwrap().b_in_z());
    }

    #[test]
    fn so2_report() {
        let r = adunat_report(&registry::get("so2-V2").unwrap()).unwrap();
        assert!(r.all_agree(), "{r:?}");
        assert_eq!(r.row(2).unwrap().general, 3);
        assert!(r.rows.iter().filter(|x| x.l >= 3).all(|x| x.general == 0));
    }

    #[test]
    fn mu_star_complement_dimension() {
        let g = registry::get("nonab-g0").unwrap();
        let d = depth_one_report(&g).unwrap();
        assert_eq!(d.mu_star_complement.len(), d.hom_dim - d.mu_star_rank);
        assert_eq!(d.hom_dim - d.mu_star_rank, 3);
        assert!(d.h1_1 > 0);
        assert_eq!((d.skew_prolongation_dim, d.symmetric_prolongation_dim, d.s_dim), (1, 3, 3));
        assert_eq!((d.h1_1, d.h1_2), (6, 2));
    }

    #[test]
    fn decomposition_of_differential() {
        let mut rng = rand::rngs::mock::StepRng::new(3, 7);
        for name in ["heis3", "nonab-g0"] {
            assert!(check_decomp_deriv(&registry::get(name).unwrap(), &mut rng, 5).unwrap());
        }
    }

    #[test]
    fn relations_spot_check() {
        let g = registry::get("heis3").unwrap();
        for l in 2..=3 {
            let r = spot_check_relations(&g, l).unwrap();
            assert!(r.matches_cochains && r.equal_words_consistent, "{r:?}");
        }
    }
}
