//! Admissibility of adapted metrics: the infinitesimal adjoint criterion, a direct
//! equivariance check of the codifferential, and the cotangent and semisimple metric
//! constructions built from a neutral form and an involution.

use crate::cochain::CochainComplex;
use crate::hodge::{AdaptedMetric, Hodge, HodgeError};
use crate::lie::GradedLieAlgebra;
use crate::linalg::{inverse, rank, Matrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AdmissibilityError {
    #[error("the Killing form is degenerate")]
    DegenerateKilling,
    #[error("-B(., theta .) is not positive definite")]
    NotPositiveDefinite,
    #[error("-B(., theta .) couples different degrees")]
    NotAdapted,
    #[error("involution: {0}")]
    BadInvolution(String),
    #[error("neutral form: {0}")]
    BadForm(String),
    #[error(transparent)]
    Metric(#[from] HodgeError),
    #[error("algebra is not a cotangent algebra of the expected dimension")]
    NotCotangent,
}

fn render(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// A violated identity at a basis triple, with both sides in algebra coordinates.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Witness {
    pub identity: &'static str,
    pub a: String,
    pub z: String,
    pub w: String,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct AdmissibilityVerdict {
    pub admissible: bool,
    pub witness: Option<Witness>,
}

impl AdmissibilityVerdict {
    fn from_witness(witness: Option<Witness>) -> Self {
        AdmissibilityVerdict { admissible: witness.is_none(), witness }
    }
}

/// Basis indices of `q = h₀ ⊕ h₊`.
fn q_indices(g: &GradedLieAlgebra) -> Vec<usize> {
    g.nonnegative_indices()
}

/// `ad(x) y` for coordinate vectors.
fn bracket_vec(g: &GradedLieAlgebra, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); g.dim()];
    for (i, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (k, v) in g.ad_basis(i).mul_vec(y).into_iter().enumerate() {
            if !v.is_zero() {
                out[k] += c * &v;
            }
        }
    }
    out
}

/// Checks, for every `A ∈ q`, `Z ∈ h₋`, `W ∈ h`,
/// `(ad_A)*[Z,W] = [(ad⁻_A)* Z, W] + [Z, (ad_A)* W]`, and for `Z, W ∈ h₋`,
/// `(ad⁻_A)*[Z,W]₋ = [(ad⁻_A)* Z, W]₋ + [Z, (ad⁻_A)* W]₋`, where `ad⁻_A` is `ad_A`
/// compressed to `h₋`. Reports the first failing triple in `(A, Z, W)` order.
pub fn check_admissible(g: &GradedLieAlgebra, metric: &AdaptedMetric) -> AdmissibilityVerdict {
    let n = g.dim();
    let gram = metric.full_gram(g);
    let gram_inv = inverse(&gram).expect("metric is invertible");
    let neg = g.negative_indices();
    let neg_gram = gram.select(&neg, &neg);
    let neg_gram_inv = inverse(&neg_gram).expect("negative block is invertible");
    let project_neg = |v: &[Rational]| -> Vec<Rational> {
        v.iter().enumerate().map(|(i, x)| if g.degree(i) < 0 { x.clone() } else { Rational::zero() }).collect()
    };
    for a in q_indices(g) {
        let ad = g.ad_basis(a);
        let adstar = gram_inv.mul(&ad.transpose()).mul(&gram);
        let compressed = ad.select(&neg, &neg);
        let minus_star = neg_gram_inv.mul(&compressed.transpose()).mul(&neg_gram).embed(n, n, &neg, &neg);
        for &z in &neg {
            let ez = minus_star.column(z);
            for w in 0..n {
                let zw = g.ad_basis(z).column(w);
                let lhs = adstar.mul_vec(&zw);
                let t1 = g.ad_basis(w).mul_vec(&ez).into_iter().map(|x| -x).collect::<Vec<_>>();
                let t2 = g.ad_basis(z).mul_vec(&adstar.column(w));
                let rhs = crate::linalg::vec_add(&t1, &t2);
                if lhs != rhs {
                    return AdmissibilityVerdict::from_witness(Some(Witness {
                        identity: "adjoint_derivation",
                        a: g.label(a).into(),
                        z: g.label(z).into(),
                        w: g.label(w).into(),
                        lhs: render(&lhs),
                        rhs: render(&rhs),
                    }));
                }
                if g.degree(w) < 0 {
                    let lhs = minus_star.mul_vec(&project_neg(&zw));
                    let t1 = project_neg(&bracket_vec(g, &ez, &crate::linalg::unit_vec(n, w)));
                    let t2 = project_neg(&g.ad_basis(z).mul_vec(&minus_star.column(w)));
                    let rhs = crate::linalg::vec_add(&t1, &t2);
                    if lhs != rhs {
                        return AdmissibilityVerdict::from_witness(Some(Witness {
                            identity: "negative_part_derivation",
                            a: g.label(a).into(),
                            z: g.label(z).into(),
                            w: g.label(w).into(),
                            lhs: render(&lhs),
                            rhs: render(&rhs),
                        }));
                    }
                }
            }
        }
    }
    AdmissibilityVerdict::from_witness(None)
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct EquivarianceReport {
    pub k: usize,
    pub commutes: bool,
    /// First basis direction of `q` whose action fails to commute with `∂*`.
    pub failing_direction: Option<String>,
}

/// Whether `∂* : C^{k+1} → C^k` commutes with the induced action of every basis vector of `q`.
pub fn check_equivariance_direct(g: &GradedLieAlgebra, metric: &AdaptedMetric, k: usize) -> EquivarianceReport {
    let hodge = Hodge::new(g, metric);
    check_equivariance_with(&hodge, k)
}

pub fn check_equivariance_with(hodge: &Hodge, k: usize) -> EquivarianceReport {
    let g = hodge.algebra();
    let complex: &CochainComplex = hodge.complex();
    let src = complex.full_basis(k + 1);
    let dst = complex.full_basis(k);
    let codiff = hodge.codifferential_full(k);
    for a in q_indices(g) {
        let rho_src = complex.action_between(a, &src, &src);
        let rho_dst = complex.action_between(a, &dst, &dst);
        if codiff.mul(&rho_src) != rho_dst.mul(&codiff) {
            return EquivarianceReport { k, commutes: false, failing_direction: Some(g.label(a).into()) };
        }
    }
    EquivarianceReport { k, commutes: true, failing_direction: None }
}

/// An involution of `h` mapping degree `i` to degree `-i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    matrix: Matrix,
}

impl Involution {
    pub fn new(g: &GradedLieAlgebra, matrix: Matrix) -> Result<Self, AdmissibilityError> {
        let n = g.dim();
        if matrix.nrows() != n || matrix.ncols() != n {
            return Err(AdmissibilityError::BadInvolution(format!("expected a {n}x{n} matrix")));
        }
        if matrix.mul(&matrix) != Matrix::identity(n) {
            return Err(AdmissibilityError::BadInvolution("does not square to the identity".into()));
        }
        if let Some((r, c, _)) = matrix.iter().find(|(r, c, _)| g.degree(*r) != -g.degree(*c)) {
            return Err(AdmissibilityError::BadInvolution(format!(
                "maps {} (degree {}) onto {} (degree {})",
                g.label(c),
                g.degree(c),
                g.label(r),
                g.degree(r)
            )));
        }
        Ok(Involution { matrix })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }
}

/// A symmetric bilinear form on `h` given by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeutralForm {
    matrix: Matrix,
}

impl NeutralForm {
    pub fn new(matrix: Matrix) -> Result<Self, AdmissibilityError> {
        if !matrix.is_symmetric() {
            return Err(AdmissibilityError::BadForm("not symmetric".into()));
        }
        Ok(NeutralForm { matrix })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn is_nondegenerate(&self) -> bool {
        rank(&self.matrix) == self.matrix.nrows()
    }

    /// `B([x,y],z) + B(y,[x,z]) = 0` on all basis triples.
    pub fn is_invariant(&self, g: &GradedLieAlgebra) -> bool {
        // ad_xᵀ B + B ad_x = 0 for every basis x
        (0..g.dim()).all(|x| {
            let ad = g.ad_basis(x);
            ad.transpose().mul(&self.matrix).add(&self.matrix.mul(ad)).is_zero()
        })
    }
}

/// `B(x, y) = tr(ad_x ad_y)`.
pub fn killing_form(g: &GradedLieAlgebra) -> NeutralForm {
    let n = g.dim();
    let mut rows = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let t = g.ad_basis(i).mul(g.ad_basis(j)).trace();
            rows[i][j] = t.clone();
            rows[j][i] = t;
        }
    }
    NeutralForm { matrix: Matrix::from_dense_with_cols(n, &rows) }
}

/// The adapted metric `-B(·, θ·)` from the Killing form.
pub fn btheta_metric(g: &GradedLieAlgebra, theta: &Involution) -> Result<AdaptedMetric, AdmissibilityError> {
    let b = killing_form(g);
    if !b.is_nondegenerate() {
        return Err(AdmissibilityError::DegenerateKilling);
    }
    let m = b.matrix().mul(theta.matrix()).neg();
    if !m.is_symmetric() {
        return Err(AdmissibilityError::BadInvolution("-B(., theta .) is not symmetric".into()));
    }
    match AdaptedMetric::from_full_gram(g, &m) {
        Ok(metric) => Ok(metric),
        Err(HodgeError::CrossDegree(..)) => Err(AdmissibilityError::NotAdapted),
        Err(HodgeError::Block { .. }) => Err(AdmissibilityError::NotPositiveDefinite),
        Err(e) => Err(e.into()),
    }
}

/// The standard data on `t*(g)` for a metric `gram_g` on `g`: the metric equal to `gram_g` on
/// `g` and its inverse on `g*` (with `g ⊥ g*`), the duality involution `θ`, and the pairing form
/// `B(X+ξ, Y+η) = ξ(Y) + η(X)`; they satisfy `⟨u, v⟩ = B(u, θv)`.
pub fn cotangent_standard_metric(
    g: &GradedLieAlgebra,
    gram_g: &Matrix,
) -> Result<(GradedLieAlgebra, AdaptedMetric, Involution, NeutralForm), AdmissibilityError> {
    let h = g.cotangent().map_err(|_| AdmissibilityError::NotCotangent)?;
    AdaptedMetric::from_full_gram(g, gram_g)?;
    let n = g.dim();
    let inv = inverse(gram_g).expect("validated Gram is invertible");
    let all: Vec<usize> = (0..n).collect();
    let dual: Vec<usize> = (n..2 * n).collect();
    let full = gram_g.embed(2 * n, 2 * n, &all, &all).add(&inv.embed(2 * n, 2 * n, &dual, &dual));
    let metric = AdaptedMetric::from_full_gram(&h, &full)?;
    // θ(e_a) = Σ_b G_ab e^b, θ(e^a) = Σ_b (G⁻¹)_ba e_b
    let theta = gram_g.embed(2 * n, 2 * n, &dual, &all).add(&inv.embed(2 * n, 2 * n, &all, &dual));
    let theta = Involution::new(&h, theta)?;
    let b =
        Matrix::identity(n).embed(2 * n, 2 * n, &all, &dual).add(&Matrix::identity(n).embed(2 * n, 2 * n, &dual, &all));
    let b = NeutralForm::new(b)?;
    Ok((h, metric, theta, b))
}

/// Checks `θ[u, θ[Y, W]] = [θ[u, θY], W] + [Y, θ[u, θW]]` for `u ∈ q`, `Y ∈ h₋`, `W ∈ h`:
/// the conjugated derivation `θ ad_u θ` must act as a derivation on `[h₋, h]`.
pub fn check_theta_condition(h: &GradedLieAlgebra, theta: &Involution) -> AdmissibilityVerdict {
    let n = h.dim();
    let t = theta.matrix();
    for u in q_indices(h) {
        let d = t.mul(h.ad_basis(u)).mul(t);
        for y in h.negative_indices() {
            let dy = d.column(y);
            for w in 0..n {
                let lhs = d.mul_vec(&h.ad_basis(y).column(w));
                let t1: Vec<Rational> = h.ad_basis(w).mul_vec(&dy).into_iter().map(|x| -x).collect();
                let t2 = h.ad_basis(y).mul_vec(&d.column(w));
                let rhs = crate::linalg::vec_add(&t1, &t2);
                if lhs != rhs {
                    return AdmissibilityVerdict::from_witness(Some(Witness {
                        identity: "conjugated_derivation",
                        a: h.label(u).into(),
                        z: h.label(y).into(),
                        w: h.label(w).into(),
                        lhs: render(&lhs),
                        rhs: render(&rhs),
                    }));
                }
            }
        }
    }
    AdmissibilityVerdict::from_witness(None)
}

/// Whether `⟨[A,x],y⟩ + ⟨x,[A,y]⟩ = 0` for all degree-zero `A`.
pub fn is_degree_zero_invariant(g: &GradedLieAlgebra, gram: &Matrix) -> bool {
    g.indices_of_degree(0).into_iter().all(|a| {
        let ad = g.ad_basis(a);
        ad.transpose().mul(gram).add(&gram.mul(ad)).is_zero()
    })
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CotangentMetricDiagnostics {
    pub degree_zero_abelian: bool,
    pub metric_degree_zero_invariant: bool,
    pub standard_metric_admissible: bool,
    pub theta_condition_holds: bool,
    /// `admissible ⟹ (abelian ∧ ¬invariant)`.
    pub implication_holds: bool,
    pub witness: Option<Witness>,
}

/// Diagnostics for the standard metric on `t*(g)` built from `gram_g`.
pub fn cotangent_metric_diagnostics(
    g: &GradedLieAlgebra,
    gram_g: &Matrix,
) -> Result<CotangentMetricDiagnostics, AdmissibilityError> {
    let (h, metric, theta, _) = cotangent_standard_metric(g, gram_g)?;
    let verdict = check_admissible(&h, &metric);
    let theta_ok = check_theta_condition(&h, &theta).admissible;
    let abelian = g.degree_zero_is_abelian();
    let invariant = is_degree_zero_invariant(g, gram_g);
    Ok(CotangentMetricDiagnostics {
        degree_zero_abelian: abelian,
        metric_degree_zero_invariant: invariant,
        standard_metric_admissible: verdict.admissible,
        theta_condition_holds: theta_ok,
        implication_holds: !verdict.admissible || (abelian && !invariant),
        witness: verdict.witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qi;
    use crate::registry;

    fn sl2_theta(g: &GradedLieAlgebra) -> Involution {
        // f ↦ -e, h ↦ -h, e ↦ -f in the basis (f, h, e)
        Involution::new(g, Matrix::from_i64(&[&[0, 0, -1], &[0, -1, 0], &[-1, 0, 0]])).unwrap()
    }

    #[test]
    fn killing_form_values() {
        let g = registry::get("sl2-graded").unwrap();
        let b = killing_form(&g);
        assert_eq!(b.matrix(), &Matrix::from_i64(&[&[0, 0, 4], &[0, 8, 0], &[4, 0, 0]]));
        assert!(b.is_nondegenerate() && b.is_invariant(&g));
        let heis = registry::get("heis3").unwrap();
        assert!(!killing_form(&heis).is_nondegenerate());
        let ab = GradedLieAlgebra::from_parts("ab", vec![("a".into(), 0), ("b".into(), 0)], vec![]).unwrap();
        assert!(killing_form(&ab).matrix().is_zero());
    }

    #[test]
    fn btheta_on_sl2() {
        let g = registry::get("sl2-graded").unwrap();
        let m = btheta_metric(&g, &sl2_theta(&g)).unwrap();
        assert_eq!(m.full_gram(&g), Matrix::diagonal(&[qi(4), qi(8), qi(4)]));
        assert!(check_admissible(&g, &m).admissible);
        assert!(check_equivariance_direct(&g, &m, 0).commutes);
        assert!(check_equivariance_direct(&g, &m, 1).commutes);
    }

    #[test]
    fn btheta_rejects_degenerate_and_bad_theta() {
        let heis = registry::get("heis3").unwrap();
        let theta = Involution::new(&heis, Matrix::identity(4));
        assert!(theta.is_err());
        let g = registry::get("sl2-graded").unwrap();
        assert!(matches!(Involution::new(&g, Matrix::identity(3)), Err(AdmissibilityError::BadInvolution(_))));
        let so = registry::get("so2-V2").unwrap();
        let h = so.cotangent().unwrap();
        let (_, _, theta, _) = cotangent_standard_metric(&so, &Matrix::identity(3)).unwrap();
        // t*(so2-V2) has a degenerate Killing form (the dual part is an abelian ideal)
        assert_eq!(btheta_metric(&h, &theta), Err(AdmissibilityError::DegenerateKilling));
    }

    #[test]
    fn so2_invariant_metric_is_admissible() {
        let g = registry::get("so2-V2").unwrap();
        let m = AdaptedMetric::identity(&g);
        assert!(check_admissible(&g, &m).admissible);
        assert!(check_equivariance_direct(&g, &m, 0).commutes && check_equivariance_direct(&g, &m, 1).commutes);
    }

    #[test]
    fn cotangent_standard_metric_relations() {
        let g = registry::get("heis3").unwrap();
        let gram = Matrix::diagonal(&[qi(2), Rational::new(1, 3), qi(5), qi(7)]);
        let (h, metric, theta, b) = cotangent_standard_metric(&g, &gram).unwrap();
        let full = metric.full_gram(&h);
        assert_eq!(b.matrix().mul(theta.matrix()), full);
        let t = theta.matrix();
        assert_eq!(t.transpose().mul(b.matrix()).mul(t), *b.matrix());
        assert!(b.is_invariant(&h));
        let (_, m_id, _, _) = cotangent_standard_metric(&g, &Matrix::identity(4)).unwrap();
        assert_eq!(m_id.full_gram(&h), Matrix::identity(8));
        let so = registry::get("so2-V2").unwrap();
        let (hs, _, _, bs) = cotangent_standard_metric(&so, &Matrix::identity(3)).unwrap();
        assert!(bs.is_invariant(&hs));
    }

    #[test]
    fn nonabelian_degree_zero_is_inadmissible() {
        let g = registry::get("nonab-g0").unwrap();
        let d = cotangent_metric_diagnostics(&g, &Matrix::identity(4)).unwrap();
        assert!(!d.degree_zero_abelian);
        assert!(!d.standard_metric_admissible);
        assert!(d.witness.is_some());
        assert!(!d.theta_condition_holds);
        assert!(d.implication_holds);
    }

    #[test]
    fn invariant_gram_on_so2_is_inadmissible() {
        let g = registry::get("so2-V2").unwrap();
        let d = cotangent_metric_diagnostics(&g, &Matrix::identity(3)).unwrap();
        assert!(d.degree_zero_abelian && d.metric_degree_zero_invariant);
        assert!(!d.standard_metric_admissible);
        assert!(d.implication_holds);
        assert_eq!(d.theta_condition_holds, d.standard_metric_admissible);
    }

    #[test]
    fn zero_direction_commutes_trivially() {
        let g = GradedLieAlgebra::from_parts("flat", vec![("X".into(), -1), ("A".into(), 0)], vec![]).unwrap();
        let m = AdaptedMetric::identity(&g);
        assert!(check_admissible(&g, &m).admissible);
        assert!(check_equivariance_direct(&g, &m, 0).commutes);
    }
}
