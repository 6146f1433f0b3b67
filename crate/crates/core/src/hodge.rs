//! Adapted metrics, induced inner products on cochains, the codifferential, the Laplacian and
//! the Hodge decomposition of each homogeneous block.

use std::collections::{BTreeMap, HashMap};

use rand::Rng;

use crate::cochain::{CochainComplex, WedgeBasisElement};
use crate::lie::GradedLieAlgebra;
use crate::linalg::{
    determinant, image_basis, inverse, kernel_basis, metric_adjoint, projection_matrix, qi, rank, validate_gram,
    LinalgError, Matrix, Rational, Subspace,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HodgeError {
    #[error("metric block for degree {degree}: {source}")]
    Block { degree: i32, source: LinalgError },
    #[error("metric has no block for degree {0}")]
    MissingBlock(i32),
    #[error("metric block for degree {degree} has size {found}, expected {expected}")]
    BlockSize { degree: i32, expected: usize, found: usize },
    #[error("metric has a block for degree {0}, which the algebra does not have")]
    UnexpectedBlock(i32),
    #[error("Gram matrix couples basis vectors of different degrees ({0}, {1})")]
    CrossDegree(String, String),
    #[error(
        "internal inconsistency in block (k={k}, j={j}): harmonic dimension {harmonic} but ker/im dimension {ker_im}"
    )]
    InternalInconsistency { k: usize, j: i32, harmonic: usize, ker_im: usize },
}

/// Positive-definite Gram matrix per degree; distinct degrees are orthogonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdaptedMetric {
    blocks: BTreeMap<i32, Matrix>,
}

impl AdaptedMetric {
    /// Checks that every degree of `g` has a symmetric positive-definite block of the right size.
    pub fn new(g: &GradedLieAlgebra, blocks: BTreeMap<i32, Matrix>) -> Result<Self, HodgeError> {
        for d in g.degree_set() {
            let expected = g.indices_of_degree(d).len();
            let block = blocks.get(&d).ok_or(HodgeError::MissingBlock(d))?;
            if block.nrows() != expected || block.ncols() != expected {
                return Err(HodgeError::BlockSize { degree: d, expected, found: block.nrows() });
            }
            validate_gram(block).map_err(|source| HodgeError::Block { degree: d, source })?;
        }
        if let Some(d) = blocks.keys().find(|d| g.indices_of_degree(**d).is_empty()) {
            return Err(HodgeError::UnexpectedBlock(*d));
        }
        Ok(AdaptedMetric { blocks })
    }

    pub fn identity(g: &GradedLieAlgebra) -> Self {
        let blocks = g.degree_set().into_iter().map(|d| (d, Matrix::identity(g.indices_of_degree(d).len()))).collect();
        AdaptedMetric { blocks }
    }

    /// Splits a full Gram matrix into degree blocks, rejecting cross-degree couplings.
    pub fn from_full_gram(g: &GradedLieAlgebra, gram: &Matrix) -> Result<Self, HodgeError> {
        for (i, j, _) in gram.iter() {
            if g.degree(i) != g.degree(j) {
                return Err(HodgeError::CrossDegree(g.label(i).into(), g.label(j).into()));
            }
        }
        let blocks = g
            .degree_set()
            .into_iter()
            .map(|d| {
                let idx = g.indices_of_degree(d);
                (d, gram.select(&idx, &idx))
            })
            .collect();
        Self::new(g, blocks)
    }

    /// Random rational metric `L D Lᵀ` per block: `D` positive diagonal, `L` unit lower
    /// triangular whose fill is set by `shape`.
    pub fn random<R: Rng>(g: &GradedLieAlgebra, rng: &mut R, shape: MetricShape) -> Self {
        let mut blocks = BTreeMap::new();
        for d in g.degree_set() {
            let n = g.indices_of_degree(d).len();
            let diag: Vec<Rational> =
                (0..n).map(|_| Rational::new(rng.gen_range(1..=4), rng.gen_range(1..=3))).collect();
            let mut l = vec![vec![Rational::zero(); n]; n];
            for (i, row) in l.iter_mut().enumerate() {
                row[i] = Rational::one();
                match shape {
                    MetricShape::Diagonal => {}
                    MetricShape::Sparse => {
                        if i > 0 && rng.gen_bool(0.4) {
                            let c = rng.gen_range(0..i);
                            row[c] = qi(if rng.gen_bool(0.5) { 1 } else { -1 });
                        }
                    }
                    MetricShape::Dense => {
                        for x in row.iter_mut().take(i) {
                            *x = qi(rng.gen_range(-2..=2));
                        }
                    }
                }
            }
            let l = Matrix::from_dense_with_cols(n, &l);
            let block = l.mul(&Matrix::diagonal(&diag)).mul(&l.transpose());
            blocks.insert(d, block);
        }
        AdaptedMetric { blocks }
    }

    pub fn blocks(&self) -> &BTreeMap<i32, Matrix> {
        &self.blocks
    }

    pub fn block(&self, degree: i32) -> Option<&Matrix> {
        self.blocks.get(&degree)
    }

    /// Block-diagonal Gram matrix in the algebra's basis order.
    pub fn full_gram(&self, g: &GradedLieAlgebra) -> Matrix {
        let n = g.dim();
        let mut triplets = Vec::new();
        for (d, block) in &self.blocks {
            let idx = g.indices_of_degree(*d);
            for (r, c, x) in block.iter() {
                triplets.push((idx[r], idx[c], x.clone()));
            }
        }
        Matrix::from_triplets(n, n, triplets)
    }
}

/// Fill pattern of a random metric's triangular factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricShape {
    Diagonal,
    /// At most one off-diagonal `±1` per row.
    Sparse,
    Dense,
}

/// The three pieces of one homogeneous block, with the block's induced Gram.
#[derive(Debug, Clone)]
pub struct HodgeSplit {
    pub k: usize,
    pub j: i32,
    pub dim: usize,
    pub harmonic: Subspace,
    pub coexact: Subspace,
    pub exact: Subspace,
    pub gram: Matrix,
}

/// Gram-orthogonal projectors onto the three pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeProjectors {
    pub harmonic: Matrix,
    pub coexact: Matrix,
    pub exact: Matrix,
}

impl HodgeSplit {
    /// Whether the three pieces are pairwise orthogonal and together span the block.
    pub fn is_complete_orthogonal(&self) -> bool {
        let pieces = [&self.harmonic, &self.coexact, &self.exact];
        let dims: usize = pieces.iter().map(|p| p.dim()).sum();
        dims == self.dim
            && self.harmonic.is_orthogonal_to(&self.coexact, &self.gram)
            && self.harmonic.is_orthogonal_to(&self.exact, &self.gram)
            && self.coexact.is_orthogonal_to(&self.exact, &self.gram)
    }

    /// Projectors from exact normal equations; cost grows quickly with the block size.
    pub fn projectors(&self) -> HodgeProjectors {
        let proj = |s: &Subspace| -> Matrix {
            if s.dim() == 0 {
                Matrix::zeros(self.dim, self.dim)
            } else {
                projection_matrix(s, &self.gram).expect("induced Gram is positive definite")
            }
        };
        HodgeProjectors { harmonic: proj(&self.harmonic), coexact: proj(&self.coexact), exact: proj(&self.exact) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct CohomologyDims {
    pub harmonic: usize,
    pub ker_im: usize,
}

/// Hodge theory of `C^•(h₋, h)` for a fixed adapted metric.
#[derive(Debug, Clone)]
pub struct Hodge {
    algebra: GradedLieAlgebra,
    complex: CochainComplex,
    metric: AdaptedMetric,
    gram: Matrix,
    gram_inv: Matrix,
    /// Inverse of the negative-part Gram, embedded in algebra coordinates: the Gram of the
    /// dual basis of `h₋*`.
    dual_gram: Matrix,
}

impl Hodge {
    pub fn new(g: &GradedLieAlgebra, metric: &AdaptedMetric) -> Self {
        let gram = metric.full_gram(g);
        let gram_inv = inverse(&gram).expect("adapted metric is invertible");
        let neg = g.negative_indices();
        let neg_inv = inverse(&gram.select(&neg, &neg)).expect("negative block is invertible");
        let dual_gram = neg_inv.embed(g.dim(), g.dim(), &neg, &neg);
        Hodge {
            algebra: g.clone(),
            complex: CochainComplex::adjoint(g),
            metric: metric.clone(),
            gram,
            gram_inv,
            dual_gram,
        }
    }

    pub fn algebra(&self) -> &GradedLieAlgebra {
        &self.algebra
    }

    pub fn complex(&self) -> &CochainComplex {
        &self.complex
    }

    pub fn metric(&self) -> &AdaptedMetric {
        &self.metric
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// Gram matrix of an arbitrary list of wedge basis elements.
    pub fn gram_of(&self, basis: &[WedgeBasisElement]) -> Matrix {
        let mut triplets = Vec::new();
        for (r, a) in basis.iter().enumerate() {
            for (c, b) in basis.iter().enumerate() {
                let gv = self.gram.get(a.value, b.value);
                if gv.is_zero() {
                    continue;
                }
                let pairing = if a.args.is_empty() {
                    Rational::one()
                } else {
                    let rows: Vec<Vec<Rational>> =
                        a.args.iter().map(|&x| b.args.iter().map(|&y| self.dual_gram.get(x, y)).collect()).collect();
                    determinant(&rows)
                };
                if !pairing.is_zero() {
                    triplets.push((r, c, pairing * gv));
                }
            }
        }
        Matrix::from_triplets(basis.len(), basis.len(), triplets)
    }

    pub fn induced_gram(&self, k: usize, j: i32) -> Matrix {
        self.gram_of(&self.complex.basis(k, j))
    }

    pub fn differential(&self, k: usize, j: i32) -> Matrix {
        self.complex.differential(k, j)
    }

    /// `∂* : C^{k+1}_j → C^k_j` as the Gram adjoint of `∂`.
    pub fn codifferential_adjoint(&self, k: usize, j: i32) -> Matrix {
        let d = self.differential(k, j);
        if d.nrows() == 0 || d.ncols() == 0 {
            return Matrix::zeros(d.ncols(), d.nrows());
        }
        metric_adjoint(&d, &self.induced_gram(k, j), &self.induced_gram(k + 1, j))
    }

    /// `∂* : C^{k+1}_j → C^k_j` assembled from the closed-form expression: a sum of metric
    /// adjoints `(ad_{α♭})*` on the value and a sum inserting `[α_i♭, α_l♭]♯`.
    pub fn codifferential_explicit(&self, k: usize, j: i32) -> Matrix {
        let src = self.complex.basis(k + 1, j);
        let dst = self.complex.basis(k, j);
        let row_of: HashMap<&WedgeBasisElement, usize> = dst.iter().enumerate().map(|(r, e)| (e, r)).collect();
        let g = &self.algebra;
        let neg = g.negative_indices();
        // α♭ for each coordinate dual vector e^a: column a of the dual Gram.
        let flat: HashMap<usize, Vec<Rational>> = neg.iter().map(|&a| (a, self.dual_gram.column(a))).collect();
        let mut adstar_cache: HashMap<usize, Matrix> = HashMap::new();
        let mut sharp_cache: HashMap<(usize, usize), Vec<(usize, Rational)>> = HashMap::new();
        let mut triplets = Vec::new();
        for (col, e) in src.iter().enumerate() {
            // Σ_i (-1)^i (α_0 ∧ … α̂_i … ∧ α_k) ⊗ (ad_{α_i♭})* V
            for (i, &a) in e.args.iter().enumerate() {
                let adstar = adstar_cache.entry(a).or_insert_with(|| {
                    let ad = g.ad_matrix(&crate::lie::AlgebraElement(flat[&a].clone())).expect("dimension");
                    self.gram_inv.mul(&ad.transpose()).mul(&self.gram)
                });
                let rest: Vec<usize> = e.args.iter().copied().filter(|&x| x != a).collect();
                let sign = if i % 2 == 0 { qi(1) } else { qi(-1) };
                for (w, c) in adstar.column(e.value).into_iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let target = WedgeBasisElement { args: rest.clone(), value: w };
                    let r = *row_of.get(&target).expect("codifferential preserves degree");
                    triplets.push((r, col, &sign * &c));
                }
            }
            // Σ_{i<l} (-1)^{i+l} ([α_i♭, α_l♭]♯ ∧ rest) ⊗ V
            for (i, &a) in e.args.iter().enumerate() {
                for (l, &b) in e.args.iter().enumerate().skip(i + 1) {
                    let sharp = sharp_cache.entry((a, b)).or_insert_with(|| {
                        let x = crate::lie::AlgebraElement(flat[&a].clone());
                        let y = crate::lie::AlgebraElement(flat[&b].clone());
                        let br = g.bracket(&x, &y).expect("dimension");
                        self.gram.mul_vec(&br.0).into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
                    });
                    let rest: Vec<usize> = e.args.iter().copied().filter(|&x| x != a && x != b).collect();
                    for (m, c) in sharp.iter() {
                        if rest.contains(m) {
                            continue;
                        }
                        let pos = rest.partition_point(|&x| x < *m);
                        let mut args = rest.clone();
                        args.insert(pos, *m);
                        let exponent = i + l + pos;
                        let coeff = if exponent % 2 == 0 { c.clone() } else { -c };
                        let target = WedgeBasisElement { args, value: e.value };
                        let r = *row_of.get(&target).expect("codifferential preserves degree");
                        triplets.push((r, col, coeff));
                    }
                }
            }
        }
        Matrix::from_triplets(dst.len(), src.len(), triplets)
    }

    /// `∂* : C^{k+1} → C^k` on the full bases, assembled from the homogeneous blocks.
    pub fn codifferential_full(&self, k: usize) -> Matrix {
        let src = self.complex.full_basis(k + 1);
        let dst = self.complex.full_basis(k);
        let src_pos: HashMap<&WedgeBasisElement, usize> = src.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let dst_pos: HashMap<&WedgeBasisElement, usize> = dst.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut triplets = Vec::new();
        for j in self.complex.degrees_for(&[k, k + 1]) {
            let rows: Vec<usize> = self.complex.basis(k, j).iter().map(|e| dst_pos[e]).collect();
            let cols: Vec<usize> = self.complex.basis(k + 1, j).iter().map(|e| src_pos[e]).collect();
            if rows.is_empty() || cols.is_empty() {
                continue;
            }
            for (r, c, x) in self.codifferential_adjoint(k, j).iter() {
                triplets.push((rows[r], cols[c], x.clone()));
            }
        }
        Matrix::from_triplets(dst.len(), src.len(), triplets)
    }

    /// `Δ = ∂∂* + ∂*∂` on `C^k_j`.
    pub fn laplacian(&self, k: usize, j: i32) -> Matrix {
        let (d_in, d_out, co_in, co_out) = self.block_operators(k, j);
        d_in.mul(&co_out).add(&co_in.mul(&d_out))
    }

    /// `(∂ into C^k_j, ∂ out of C^k_j, ∂* into C^k_j, ∂* out of C^k_j)`.
    fn block_operators(&self, k: usize, j: i32) -> (Matrix, Matrix, Matrix, Matrix) {
        let dim = self.complex.basis(k, j).len();
        let (d_in, co_out) = if k == 0 {
            (Matrix::zeros(dim, 0), Matrix::zeros(0, dim))
        } else {
            (self.differential(k - 1, j), self.codifferential_adjoint(k - 1, j))
        };
        let d_out = self.differential(k, j);
        let co_in = self.codifferential_adjoint(k, j);
        (d_in, d_out, co_in, co_out)
    }

    pub fn hodge_decompose(&self, k: usize, j: i32) -> HodgeSplit {
        let basis = self.complex.basis(k, j);
        let dim = basis.len();
        let gram = self.gram_of(&basis);
        let (d_in, d_out, co_in, co_out) = self.block_operators(k, j);
        let lap = d_in.mul(&co_out).add(&co_in.mul(&d_out));
        let harmonic = if dim == 0 { Subspace::zero(0) } else { kernel_basis(&lap) };
        let coexact = span_of_columns(&co_in, dim);
        let exact = span_of_columns(&d_in, dim);
        HodgeSplit { k, j, dim, harmonic, coexact, exact, gram }
    }

    /// `ker ∂ ∩ ker ∂*` on `C^k_j`, for comparison with the Laplacian kernel.
    pub fn harmonic_via_kernels(&self, k: usize, j: i32) -> Subspace {
        let (_, d_out, _, co_out) = self.block_operators(k, j);
        kernel_basis(&d_out.vstack(&co_out))
    }

    /// Dimension of `H^k_j` computed from harmonic forms and from `ker ∂ / im ∂`; fails if
    /// the two disagree.
    pub fn cohomology_dim(&self, k: usize, j: i32) -> Result<CohomologyDims, HodgeError> {
        let split = self.hodge_decompose(k, j);
        let ker_im = ker_im_dimension(&self.complex, k, j);
        if split.harmonic.dim() != ker_im {
            return Err(HodgeError::InternalInconsistency { k, j, harmonic: split.harmonic.dim(), ker_im });
        }
        Ok(CohomologyDims { harmonic: split.harmonic.dim(), ker_im })
    }

    /// Whether the three Hodge projectors of the block commute with the action of every
    /// degree-zero basis vector.
    pub fn projectors_commute_with_degree_zero(&self, split: &HodgeSplit) -> bool {
        let basis = self.complex.basis(split.k, split.j);
        let p = split.projectors();
        self.algebra.indices_of_degree(0).into_iter().all(|a| {
            let act = self.complex.action_between(a, &basis, &basis);
            [&p.harmonic, &p.coexact, &p.exact].iter().all(|p| act.mul(p) == p.mul(&act))
        })
    }
}

/// `dim ker ∂_k - rank ∂_{k-1}` on `C^k_j`; needs no metric.
pub fn ker_im_dimension(complex: &CochainComplex, k: usize, j: i32) -> usize {
    let dim = complex.basis(k, j).len();
    let rank_out = rank(&complex.differential(k, j));
    let rank_in = if k == 0 { 0 } else { rank(&complex.differential(k - 1, j)) };
    dim - rank_out - rank_in
}

fn span_of_columns(m: &Matrix, dim: usize) -> Subspace {
    if m.ncols() == 0 || m.is_zero() {
        Subspace::zero(dim)
    } else {
        image_basis(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
        if n == 0 {
            return vec![(vec![], true)];
        }
        let mut out = Vec::new();
        for (p, even) in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                let moves = p.len() - pos;
                out.push((q, even == (moves % 2 == 0)));
            }
        }
        out
    }

    /// Leibniz-formula pairing of `e^I` and `e^{I'}` under the dual Gram.
    fn pairing_oracle(dual: &Matrix, a: &[usize], b: &[usize]) -> Rational {
        permutations(a.len())
            .into_iter()
            .map(|(p, even)| {
                let prod: Rational = (0..a.len()).map(|i| dual.get(a[i], b[p[i]])).product();
                if even {
                    prod
                } else {
                    -prod
                }
            })
            .sum()
    }

    #[test]
    fn identity_metric_gives_identity_gram() {
        let g = registry::get("heis3").unwrap();
        let h = Hodge::new(&g, &AdaptedMetric::identity(&g));
        for k in 0..=2 {
            for j in h.complex().degrees(k) {
                let n = h.complex().basis(k, j).len();
                assert_eq!(h.induced_gram(k, j), Matrix::identity(n));
            }
        }
    }

    #[test]
    fn dual_scaling() {
        let g = registry::get("sl2-graded").unwrap();
        let mut blocks = AdaptedMetric::identity(&g).blocks().clone();
        blocks.insert(-1, Matrix::from_i64(&[&[4]]));
        let m = AdaptedMetric::new(&g, blocks).unwrap();
        let h = Hodge::new(&g, &m);
        assert_eq!(h.induced_gram(1, 1), Matrix::diagonal(&[Rational::new(1, 4)]));
    }

    #[test]
    fn non_diagonal_gram_matches_pairing_oracle() {
        let g = registry::get("heis3").unwrap();
        let mut blocks = AdaptedMetric::identity(&g).blocks().clone();
        blocks.insert(-1, Matrix::from_i64(&[&[2, 1], &[1, 3]]));
        let m = AdaptedMetric::new(&g, blocks).unwrap();
        let h = Hodge::new(&g, &m);
        let gram = m.full_gram(&g);
        for k in 0..=3 {
            for j in h.complex().degrees(k) {
                let basis = h.complex().basis(k, j);
                let got = h.induced_gram(k, j);
                for (r, a) in basis.iter().enumerate() {
                    for (c, b) in basis.iter().enumerate() {
                        let want = pairing_oracle(&h.dual_gram, &a.args, &b.args) * gram.get(a.value, b.value);
                        assert_eq!(got.get(r, c), want);
                    }
                }
            }
        }
    }

    #[test]
    fn metric_validation_errors() {
        let g = registry::get("sl2-graded").unwrap();
        let mut blocks = AdaptedMetric::identity(&g).blocks().clone();
        blocks.insert(0, Matrix::from_i64(&[&[-1]]));
        assert!(matches!(AdaptedMetric::new(&g, blocks.clone()), Err(HodgeError::Block { degree: 0, .. })));
        blocks.remove(&0);
        assert_eq!(AdaptedMetric::new(&g, blocks.clone()), Err(HodgeError::MissingBlock(0)));
        blocks.insert(0, Matrix::identity(1));
        blocks.insert(5, Matrix::identity(1));
        assert_eq!(AdaptedMetric::new(&g, blocks), Err(HodgeError::UnexpectedBlock(5)));
        let full = Matrix::from_i64(&[&[1, 1, 0], &[1, 2, 0], &[0, 0, 1]]);
        assert!(matches!(AdaptedMetric::from_full_gram(&g, &full), Err(HodgeError::CrossDegree(..))));
    }

    #[test]
    fn sl2_codifferential_and_cohomology() {
        let g = registry::get("sl2-graded").unwrap();
        let h = Hodge::new(&g, &AdaptedMetric::identity(&g));
        assert_eq!(h.codifferential_adjoint(0, 1), Matrix::from_i64(&[&[-1]]));
        assert_eq!(h.codifferential_explicit(0, 1), Matrix::from_i64(&[&[-1]]));
        let split = h.hodge_decompose(1, 1);
        assert_eq!((split.harmonic.dim(), split.exact.dim()), (0, 1));
        assert_eq!(h.cohomology_dim(1, 1).unwrap().harmonic, 0);
        // C⁰_2 = 0 and C² = 0, so f*⊗e spans H¹_2.
        assert_eq!(h.cohomology_dim(1, 2).unwrap().harmonic, 1);
    }

    #[test]
    fn explicit_equals_adjoint_random_metrics() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for name in ["heis3", "sl2-graded", "nonab-g0"] {
            let g = registry::get(name).unwrap();
            for _ in 0..3 {
                let m = AdaptedMetric::random(&g, &mut rng, MetricShape::Dense);
                let h = Hodge::new(&g, &m);
                for k in 0..=2 {
                    for j in h.complex().degrees_for(&[k, k + 1]) {
                        assert_eq!(
                            h.codifferential_explicit(k, j),
                            h.codifferential_adjoint(k, j),
                            "{name} k={k} j={j}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn trivial_action_gives_zero_codifferential() {
        let g = GradedLieAlgebra::from_parts("flat", vec![("X".into(), -1), ("Y".into(), -1), ("A".into(), 0)], vec![])
            .unwrap();
        let h = Hodge::new(&g, &AdaptedMetric::identity(&g));
        for j in h.complex().degrees_for(&[0, 1]) {
            assert!(h.codifferential_explicit(0, j).is_zero());
            assert!(h.codifferential_explicit(1, j).is_zero());
            let s = h.hodge_decompose(1, j);
            assert_eq!(s.harmonic.dim(), s.dim);
        }
    }
}
