//! Cochains on the negative part of a graded Lie algebra with values in a graded module,
//! and the Lie algebra differential.

use std::collections::{BTreeMap, HashMap};

use crate::lie::{AlgebraElement, GradedLieAlgebra};
use crate::linalg::{determinant, zero_vec, Matrix, Rational};

/// Largest form degree the complex builds bases for.
pub const MAX_FORM_DEGREE: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CochainError {
    #[error("argument {0} has a component outside the negative part")]
    ArgumentNotInNegativePart(usize),
    #[error("expected {expected} arguments, found {found}")]
    WrongArity { expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("form degree {0} exceeds the supported maximum")]
    FormDegreeTooLarge(usize),
}

/// `e^{i_1} ∧ … ∧ e^{i_k} ⊗ v`: strictly increasing algebra indices of negative-degree basis
/// vectors, and a value index into the coefficient module.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct WedgeBasisElement {
    pub args: Vec<usize>,
    pub value: usize,
}

/// A `k`-cochain; `degree` is `Some(j)` when all terms have homogeneous degree `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    pub k: usize,
    pub degree: Option<i32>,
    pub terms: BTreeMap<WedgeBasisElement, Rational>,
}

impl Cochain {
    pub fn zero(k: usize, degree: Option<i32>) -> Self {
        Cochain { k, degree, terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(Rational::is_zero)
    }

    pub fn add_term(&mut self, e: WedgeBasisElement, c: Rational) {
        let entry = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }
}

/// The complex `C^•(h₋, M)` for a graded module `M` of a graded Lie algebra `h`.
#[derive(Debug, Clone)]
pub struct CochainComplex {
    algebra_dim: usize,
    /// Algebra indices of the negative part, ascending.
    neg: Vec<usize>,
    neg_degrees: Vec<i32>,
    /// Position of an algebra index within `neg`.
    neg_pos: HashMap<usize, usize>,
    value_labels: Vec<String>,
    value_degrees: Vec<i32>,
    /// `rho_cols[p][v]`: the image of value basis vector `v` under the action of `neg[p]`.
    rho_cols: Vec<Vec<Vec<(usize, Rational)>>>,
    /// For each position `m` in `neg`: pairs `(a, b, c)` of positions with `a < b` and
    /// `c` the coefficient of `e_m` in `[e_a, e_b]`.
    structure_into: Vec<Vec<(usize, usize, Rational)>>,
    arg_labels: Vec<String>,
    /// Module action of every algebra basis vector.
    value_action: Vec<Matrix>,
    /// `ad` of every algebra basis vector compressed to the negative part (rows and columns
    /// indexed by positions in `neg`); this is the induced action on `h / q`.
    neg_action: Vec<Matrix>,
}

impl CochainComplex {
    /// `C^•(h₋, h)` with the adjoint action.
    pub fn adjoint(g: &GradedLieAlgebra) -> Self {
        let action: Vec<Matrix> = (0..g.dim()).map(|i| g.ad_basis(i).clone()).collect();
        Self::with_module(g, g.labels().to_vec(), g.degrees().to_vec(), &action)
    }

    /// `C^•(g₋, g*)` with the coadjoint action; the dual of a degree-`d` vector has degree `-d`.
    pub fn coadjoint(g: &GradedLieAlgebra) -> Self {
        let action: Vec<Matrix> = (0..g.dim()).map(|i| g.ad_basis(i).transpose().neg()).collect();
        let labels = g.labels().iter().map(|l| format!("{l}*")).collect();
        let degrees = g.degrees().iter().map(|d| -d).collect();
        Self::with_module(g, labels, degrees, &action)
    }

    /// General module: `action[i]` is the matrix of basis vector `i` of `g` on the module
    /// (only negative-degree entries are used).
    pub fn with_module(
        g: &GradedLieAlgebra,
        value_labels: Vec<String>,
        value_degrees: Vec<i32>,
        action: &[Matrix],
    ) -> Self {
        let neg = g.negative_indices();
        let neg_pos: HashMap<usize, usize> = neg.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let rho_cols = neg
            .iter()
            .map(|&i| {
                let t = action[i].transpose();
                (0..value_degrees.len()).map(|v| t.row(v).to_vec()).collect()
            })
            .collect();
        let mut structure_into = vec![Vec::new(); neg.len()];
        for (a, &ia) in neg.iter().enumerate() {
            for (b, &ib) in neg.iter().enumerate().skip(a + 1) {
                for (m, c) in g.bracket_basis(ia, ib) {
                    let pm = neg_pos[&m];
                    structure_into[pm].push((a, b, c));
                }
            }
        }
        let neg_action = (0..g.dim()).map(|i| g.ad_basis(i).select(&neg, &neg)).collect();
        CochainComplex {
            value_action: action.to_vec(),
            neg_action,
            algebra_dim: g.dim(),
            neg_degrees: neg.iter().map(|&i| g.degree(i)).collect(),
            arg_labels: neg.iter().map(|&i| g.label(i).to_string()).collect(),
            neg,
            neg_pos,
            value_labels,
            value_degrees,
            rho_cols,
            structure_into,
        }
    }

    pub fn negative_indices(&self) -> &[usize] {
        &self.neg
    }

    pub fn value_dim(&self) -> usize {
        self.value_degrees.len()
    }

    pub fn value_degrees(&self) -> &[i32] {
        &self.value_degrees
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    /// Homogeneous degree `deg(v) - Σ deg(args)`.
    pub fn degree_of(&self, e: &WedgeBasisElement) -> i32 {
        self.value_degrees[e.value] - e.args.iter().map(|a| self.neg_degrees[self.neg_pos[a]]).sum::<i32>()
    }

    /// Human-readable form such as `X*∧Y* ⊗ E`.
    pub fn describe(&self, e: &WedgeBasisElement) -> String {
        let args: Vec<String> = e.args.iter().map(|a| format!("{}*", self.arg_labels[self.neg_pos[a]])).collect();
        if args.is_empty() {
            self.value_labels[e.value].clone()
        } else {
            format!("{} ⊗ {}", args.join("∧"), self.value_labels[e.value])
        }
    }

    /// Lexicographically ordered basis of `C^k_j`.
    pub fn basis(&self, k: usize, j: i32) -> Vec<WedgeBasisElement> {
        self.basis_filtered(k, Some(j))
    }

    /// Lexicographically ordered basis of all of `C^k`.
    pub fn full_basis(&self, k: usize) -> Vec<WedgeBasisElement> {
        self.basis_filtered(k, None)
    }

    fn basis_filtered(&self, k: usize, j: Option<i32>) -> Vec<WedgeBasisElement> {
        let mut out = Vec::new();
        for subset in combinations(self.neg.len(), k) {
            let arg_deg: i32 = subset.iter().map(|&p| self.neg_degrees[p]).sum();
            let args: Vec<usize> = subset.iter().map(|&p| self.neg[p]).collect();
            for (v, &dv) in self.value_degrees.iter().enumerate() {
                if j.is_none_or(|j| dv - arg_deg == j) {
                    out.push(WedgeBasisElement { args: args.clone(), value: v });
                }
            }
        }
        out
    }

    /// Homogeneous degrees `j` with `C^k_j ≠ 0`, ascending.
    pub fn degrees(&self, k: usize) -> Vec<i32> {
        let mut ds: Vec<i32> = self.full_basis(k).iter().map(|e| self.degree_of(e)).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// All degrees occurring in `C^k` for any of the given form degrees.
    pub fn degrees_for(&self, ks: &[usize]) -> Vec<i32> {
        let mut ds: Vec<i32> = ks.iter().flat_map(|&k| self.degrees(k)).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// Matrix of `∂ : C^k_j → C^{k+1}_j` in the canonical bases.
    pub fn differential(&self, k: usize, j: i32) -> Matrix {
        let src = self.basis(k, j);
        let dst = self.basis(k + 1, j);
        self.differential_between(&src, &dst)
    }

    /// Matrix of `∂ : C^k → C^{k+1}` on the full (all-degree) bases.
    pub fn differential_full(&self, k: usize) -> Matrix {
        let src = self.full_basis(k);
        let dst = self.full_basis(k + 1);
        self.differential_between(&src, &dst)
    }

    fn differential_between(&self, src: &[WedgeBasisElement], dst: &[WedgeBasisElement]) -> Matrix {
        let row_of: HashMap<&WedgeBasisElement, usize> = dst.iter().enumerate().map(|(r, e)| (e, r)).collect();
        let mut triplets = Vec::new();
        for (col, e) in src.iter().enumerate() {
            for (target, c) in self.differential_of(e) {
                let r = *row_of.get(&target).expect("differential preserves homogeneous degree");
                triplets.push((r, col, c));
            }
        }
        Matrix::from_triplets(dst.len(), src.len(), triplets)
    }

    /// `∂(e^I ⊗ v)` expanded in the basis of `C^{k+1}` (possibly with repeated targets).
    fn differential_of(&self, e: &WedgeBasisElement) -> Vec<(WedgeBasisElement, Rational)> {
        let positions: Vec<usize> = e.args.iter().map(|a| self.neg_pos[a]).collect();
        let mut out = Vec::new();
        // Σ_i (-1)^i ρ(X_i) φ(…X̂_i…): nonzero only when J = I ∪ {m}.
        for m in 0..self.neg.len() {
            if positions.contains(&m) {
                continue;
            }
            let (j_set, pos) = insert_sorted(&positions, m);
            let sign = if pos % 2 == 0 { Rational::one() } else { -Rational::one() };
            for (w, c) in &self.rho_cols[m][e.value] {
                out.push((self.element(&j_set, *w), &sign * c));
            }
        }
        // Σ_{i<l} (-1)^{i+l} φ([X_i, X_l], …): φ(e_m, rest) = (-1)^p v when m sits at position p of I.
        for (p, &m) in positions.iter().enumerate() {
            let rest: Vec<usize> = positions.iter().copied().filter(|&x| x != m).collect();
            for (a, b, c) in &self.structure_into[m] {
                if rest.contains(a) || rest.contains(b) {
                    continue;
                }
                let (with_a, ia) = insert_sorted(&rest, *a);
                let (j_set, il) = insert_sorted(&with_a, *b);
                let exponent = ia + il + p;
                let coeff = if exponent % 2 == 0 { c.clone() } else { -c };
                out.push((self.element(&j_set, e.value), coeff));
            }
        }
        out
    }

    fn element(&self, positions: &[usize], value: usize) -> WedgeBasisElement {
        WedgeBasisElement { args: positions.iter().map(|&p| self.neg[p]).collect(), value }
    }

    /// Coordinates of a homogeneous cochain in `basis(k, j)`.
    pub fn to_vector(&self, c: &Cochain, basis: &[WedgeBasisElement]) -> Vec<Rational> {
        let index: HashMap<&WedgeBasisElement, usize> = basis.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut v = zero_vec(basis.len());
        for (e, coeff) in &c.terms {
            let i = *index.get(e).expect("cochain term outside the given basis");
            v[i] += coeff;
        }
        v
    }

    pub fn from_vector(&self, k: usize, degree: Option<i32>, basis: &[WedgeBasisElement], v: &[Rational]) -> Cochain {
        let mut c = Cochain::zero(k, degree);
        for (e, x) in basis.iter().zip(v) {
            if !x.is_zero() {
                c.terms.insert(e.clone(), x.clone());
            }
        }
        c
    }

    /// Alternating multilinear evaluation on arguments from the negative part.
    pub fn evaluate(&self, c: &Cochain, args: &[AlgebraElement]) -> Result<Vec<Rational>, CochainError> {
        if args.len() != c.k {
            return Err(CochainError::WrongArity { expected: c.k, found: args.len() });
        }
        for (n, x) in args.iter().enumerate() {
            if x.len() != self.algebra_dim {
                return Err(CochainError::DimensionMismatch { expected: self.algebra_dim, found: x.len() });
            }
            if x.coords().iter().enumerate().any(|(i, v)| !v.is_zero() && !self.neg_pos.contains_key(&i)) {
                return Err(CochainError::ArgumentNotInNegativePart(n));
            }
        }
        let mut out = zero_vec(self.value_dim());
        for (e, coeff) in &c.terms {
            let pairing = if c.k == 0 {
                Rational::one()
            } else {
                let rows: Vec<Vec<Rational>> =
                    e.args.iter().map(|&a| args.iter().map(|x| x.coords()[a].clone()).collect()).collect();
                determinant(&rows)
            };
            if !pairing.is_zero() {
                out[e.value] += coeff * &pairing;
            }
        }
        Ok(out)
    }

    /// Degree-`j` component of a cochain.
    pub fn gr_project(&self, c: &Cochain, j: i32) -> Cochain {
        let terms =
            c.terms.iter().filter(|(e, _)| self.degree_of(e) == j).map(|(e, x)| (e.clone(), x.clone())).collect();
        Cochain { k: c.k, degree: Some(j), terms }
    }

    /// Value-module action of a negative basis vector (algebra index `i`) as sparse columns.
    pub fn action_on_values(&self, i: usize, v: &[Rational]) -> Vec<Rational> {
        let p = self.neg_pos[&i];
        let mut out = zero_vec(self.value_dim());
        for (col, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (w, c) in &self.rho_cols[p][col] {
                out[*w] += x * c;
            }
        }
        out
    }
}

impl CochainComplex {
    /// Matrix of the induced action of algebra basis vector `a` on cochains, from the span of
    /// `src` to the span of `dst`: `(A·φ)(X…) = A·φ(X…) - Σ φ(…, ad⁻_A X_s, …)` where `ad⁻_A`
    /// is `ad_A` followed by projection onto the negative part.
    pub fn action_between(&self, a: usize, src: &[WedgeBasisElement], dst: &[WedgeBasisElement]) -> Matrix {
        let row_of: HashMap<&WedgeBasisElement, usize> = dst.iter().enumerate().map(|(r, e)| (e, r)).collect();
        let value_t = self.value_action[a].transpose();
        // A·e^p = -Σ_q (ad⁻_A)_{p q} e^q
        let dual = &self.neg_action[a];
        let mut triplets = Vec::new();
        let mut push = |e: WedgeBasisElement, col: usize, c: Rational| {
            let r = *row_of.get(&e).expect("action target outside the destination basis");
            triplets.push((r, col, c));
        };
        for (col, e) in src.iter().enumerate() {
            for (w, c) in value_t.row(e.value) {
                push(WedgeBasisElement { args: e.args.clone(), value: *w }, col, c.clone());
            }
            let positions: Vec<usize> = e.args.iter().map(|x| self.neg_pos[x]).collect();
            for (s, &p) in positions.iter().enumerate() {
                let others: Vec<usize> =
                    positions.iter().enumerate().filter(|(t, _)| *t != s).map(|(_, &x)| x).collect();
                for (q, m) in dual.row(p) {
                    if others.contains(q) {
                        continue;
                    }
                    // replace slot s by q, then sort: sign from moving q from slot s to its place
                    let (sorted, pos) = insert_sorted(&others, *q);
                    let sign_exp = s + pos;
                    let coeff = if sign_exp % 2 == 0 { -m.clone() } else { m.clone() };
                    push(self.element(&sorted, e.value), col, coeff);
                }
            }
        }
        Matrix::from_triplets(dst.len(), src.len(), triplets)
    }
}

/// Inserts `x` into a sorted list, returning the new list and the position of `x`.
fn insert_sorted(list: &[usize], x: usize) -> (Vec<usize>, usize) {
    let pos = list.partition_point(|&y| y < x);
    let mut out = Vec::with_capacity(list.len() + 1);
    out.extend_from_slice(&list[..pos]);
    out.push(x);
    out.extend_from_slice(&list[pos..]);
    (out, pos)
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for t in i..k {
            idx[t] = idx[t - 1] + 1;
        }
    }
}
