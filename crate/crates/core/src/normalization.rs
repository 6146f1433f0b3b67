//! Degree-by-degree normalization of formal curvature functions: each homogeneous component of
//! `K` in `C²_m(h₋, h)` loses its exact part through a gauge correction `φ_m ∈ C¹_m`, with
//! `K_m ↦ K_m + ∂φ_m` and an optional tail acting on higher degrees.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::cochain::Cochain;
use crate::hodge::{AdaptedMetric, Hodge};
use crate::lie::GradedLieAlgebra;
use crate::linalg::{
    is_zero_vec, orthogonal_projection, qi, solve, vec_add, vec_scale, vec_sub, Matrix, Rational, Subspace,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NormalizationError {
    #[error("tail output touches degree {found}, must be above {m}")]
    TailDegreeViolation { m: i32, found: i32 },
    #[error("degree {0} outside 1..=m_max")]
    DegreeOutOfRange(i32),
    #[error("component of degree {degree} has length {found}, expected {expected}")]
    Length { degree: i32, expected: usize, found: usize },
}

/// Per-degree coefficient vectors over the canonical bases of `C^k_m`, `m ≥ 1`. Zero
/// components may be omitted.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Graded {
    pub components: BTreeMap<i32, Vec<Rational>>,
}

/// Curvature components in `C²_m(h₋, h)`.
pub type FormalCurvature = Graded;
/// Gauge components in `C¹_m(h₋, h)`.
pub type GaugeCorrection = Graded;

impl Graded {
    pub fn component(&self, m: i32) -> Option<&Vec<Rational>> {
        self.components.get(&m)
    }

    /// Drops zero components so that equal families compare equal.
    pub fn canonical(mut self) -> Self {
        self.components.retain(|_, v| !is_zero_vec(v));
        self
    }

    pub fn is_zero(&self) -> bool {
        self.components.values().all(|v| is_zero_vec(v))
    }

    fn add_at(&mut self, m: i32, v: &[Rational]) {
        match self.components.get_mut(&m) {
            Some(c) => *c = vec_add(c, v),
            None => {
                self.components.insert(m, v.to_vec());
            }
        }
    }

    pub fn add(&self, other: &Graded) -> Graded {
        let mut out = self.clone();
        for (m, v) in &other.components {
            out.add_at(*m, v);
        }
        out.canonical()
    }
}

/// Higher-degree remainder of a curvature update.
pub trait TailOperator {
    /// Contribution to `K` caused by the gauge step `φ_m`; must be supported in degrees `> m`.
    fn apply(&self, m: i32, phi_m: &[Rational], k: &FormalCurvature) -> FormalCurvature;
}

/// Adds a fixed cochain in a fixed degree whenever the gauge step is nonzero.
#[derive(Debug, Clone)]
pub struct InjectTail {
    pub degree: i32,
    pub cochain: Vec<Rational>,
}

impl TailOperator for InjectTail {
    fn apply(&self, _m: i32, phi_m: &[Rational], _k: &FormalCurvature) -> FormalCurvature {
        let mut out = Graded::default();
        if !is_zero_vec(phi_m) {
            out.components.insert(self.degree, self.cochain.clone());
        }
        out
    }
}

/// Linear tail `φ_m ↦ Σ_{j>m} T_{m,j} φ_m` with fixed matrices.
#[derive(Debug, Clone, Default)]
pub struct LinearTail {
    pub maps: BTreeMap<(i32, i32), Matrix>,
}

impl TailOperator for LinearTail {
    fn apply(&self, m: i32, phi_m: &[Rational], _k: &FormalCurvature) -> FormalCurvature {
        let mut out = Graded::default();
        for ((src, dst), t) in self.maps.range((m, i32::MIN)..=(m, i32::MAX)) {
            debug_assert_eq!(*src, m);
            out.add_at(*dst, &t.mul_vec(phi_m));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalizationStep {
    pub m: i32,
    pub harmonic_dim: usize,
    pub coexact_dim: usize,
    pub exact_dim: usize,
    /// The exact part of `K_m` before the step was nonzero.
    pub corrected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalizationResult {
    pub curvature: FormalCurvature,
    pub gauge: GaugeCorrection,
    pub trace: Vec<NormalizationStep>,
}

struct DegreeData {
    harmonic_dim: usize,
    coexact_dim: usize,
    gram2: Matrix,
    exact: Subspace,
    /// `∂` restricted to the coexact part of `C¹_m`, in the coordinates of its basis.
    d_on_coexact: Matrix,
    coexact1: Matrix,
    codiff: Matrix,
}

/// Normalization data for an algebra with a fixed adapted metric.
pub struct Normalizer {
    hodge: Hodge,
    m_max: i32,
    data: BTreeMap<i32, OnceLock<DegreeData>>,
}

impl Normalizer {
    pub fn new(g: &GradedLieAlgebra, metric: &AdaptedMetric) -> Self {
        let hodge = Hodge::new(g, metric);
        let m_max = g.height() + 2 * g.depth();
        let data = (1..=m_max).map(|m| (m, OnceLock::new())).collect();
        Normalizer { hodge, m_max, data }
    }

    pub fn hodge(&self) -> &Hodge {
        &self.hodge
    }

    /// Largest homogeneous degree occurring in `C²`.
    pub fn m_max(&self) -> i32 {
        self.m_max
    }

    pub fn dim(&self, k: usize, m: i32) -> usize {
        self.hodge.complex().basis(k, m).len()
    }

    fn degree(&self, m: i32) -> &DegreeData {
        self.data[&m].get_or_init(|| {
            let split = self.hodge.hodge_decompose(2, m);
            let d = self.hodge.differential(1, m);
            let codiff = self.hodge.codifferential_adjoint(1, m);
            let coexact1 = self.hodge.hodge_decompose(1, m).coexact.to_matrix();
            DegreeData {
                harmonic_dim: split.harmonic.dim(),
                coexact_dim: split.coexact.dim(),
                d_on_coexact: d.mul(&coexact1),
                gram2: split.gram,
                exact: split.exact,
                coexact1,
                codiff,
            }
        })
    }

    fn check(&self, k: usize, family: &Graded) -> Result<(), NormalizationError> {
        for (&m, v) in &family.components {
            if m < 1 || m > self.m_max {
                return Err(NormalizationError::DegreeOutOfRange(m));
            }
            let expected = self.dim(k, m);
            if v.len() != expected {
                return Err(NormalizationError::Length { degree: m, expected, found: v.len() });
            }
        }
        Ok(())
    }

    /// `∂` applied slotwise to a gauge family.
    pub fn differential(&self, phi: &GaugeCorrection) -> FormalCurvature {
        let mut out = Graded::default();
        for (&m, v) in &phi.components {
            out.components.insert(m, self.hodge.differential(1, m).mul_vec(v));
        }
        out.canonical()
    }

    /// `K'_m = K_m + ∂φ_m`, lower degrees untouched, higher degrees shifted by the tail.
    pub fn curvature_update(
        &self,
        k: &FormalCurvature,
        m: i32,
        phi_m: &[Rational],
        tail: Option<&dyn TailOperator>,
    ) -> Result<FormalCurvature, NormalizationError> {
        let mut out = k.clone();
        out.add_at(m, &self.hodge.differential(1, m).mul_vec(phi_m));
        if let Some(tail) = tail {
            let extra = tail.apply(m, phi_m, k);
            if let Some(&low) = extra.components.keys().find(|&&d| d <= m) {
                return Err(NormalizationError::TailDegreeViolation { m, found: low });
            }
            self.check(2, &extra)?;
            for (d, v) in &extra.components {
                out.add_at(*d, v);
            }
        }
        Ok(out.canonical())
    }

    /// Exact part of `K_m` and its minimal-norm gauge preimage.
    fn exact_part(&self, m: i32, km: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let data = self.degree(m);
        if data.exact.dim() == 0 {
            return (vec![Rational::zero(); km.len()], vec![Rational::zero(); self.dim(1, m)]);
        }
        let exact = orthogonal_projection(km, &data.exact, &data.gram2).expect("positive definite Gram");
        let coeffs = solve(&data.d_on_coexact, &exact).expect("exact part lies in the image of ∂");
        (exact, data.coexact1.mul_vec(&coeffs))
    }

    /// Removes the exact part degree by degree for `m = 1..=m_max`.
    pub fn normalize(
        &self,
        k: &FormalCurvature,
        tail: Option<&dyn TailOperator>,
    ) -> Result<NormalizationResult, NormalizationError> {
        self.check(2, k)?;
        let mut current = k.clone().canonical();
        let mut gauge = Graded::default();
        let mut trace = Vec::new();
        for m in 1..=self.m_max {
            let data = self.degree(m);
            let km = current.component(m).cloned().unwrap_or_else(|| vec![Rational::zero(); self.dim(2, m)]);
            let (exact, phi) = self.exact_part(m, &km);
            let corrected = !is_zero_vec(&exact);
            trace.push(NormalizationStep {
                m,
                harmonic_dim: data.harmonic_dim,
                coexact_dim: data.coexact_dim,
                exact_dim: data.exact.dim(),
                corrected,
            });
            if corrected {
                let step = vec_scale(&phi, &qi(-1));
                current = self.curvature_update(&current, m, &step, tail)?;
                gauge.add_at(m, &step);
            }
        }
        Ok(NormalizationResult { curvature: current, gauge: gauge.canonical(), trace })
    }

    /// `∂*K_m = 0` in every degree.
    pub fn is_normal(&self, k: &FormalCurvature) -> bool {
        k.components.iter().all(|(&m, v)| {
            if m < 1 || m > self.m_max || v.len() != self.dim(2, m) {
                return false;
            }
            is_zero_vec(&self.degree(m).codiff.mul_vec(v))
        })
    }

    /// Tail-free normal form computed in one shot: the harmonic plus coexact projection of
    /// each component.
    pub fn project_coclosed(&self, k: &FormalCurvature) -> FormalCurvature {
        let mut out = Graded::default();
        for (&m, v) in &k.components {
            let (exact, _) = self.exact_part(m, v);
            out.components.insert(m, vec_sub(v, &exact));
        }
        out.canonical()
    }

    /// Leading gauge action `φ − ∂ψ` for a family `ψ_l ∈ C⁰_l = h_l`, `l ≥ 1`.
    pub fn gauge_leading(&self, phi: &GaugeCorrection, psi: &Graded) -> Result<GaugeCorrection, NormalizationError> {
        let mut out = phi.clone();
        for (&l, v) in &psi.components {
            if l < 1 {
                return Err(NormalizationError::DegreeOutOfRange(l));
            }
            let d = self.hodge.differential(0, l);
            if v.len() != d.ncols() {
                return Err(NormalizationError::Length { degree: l, expected: d.ncols(), found: v.len() });
            }
            out.add_at(l, &vec_scale(&d.mul_vec(v), &qi(-1)));
        }
        Ok(out.canonical())
    }

    pub fn random_curvature<R: Rng>(&self, rng: &mut R) -> FormalCurvature {
        self.random_family(rng, 2)
    }

    pub fn random_gauge<R: Rng>(&self, rng: &mut R) -> GaugeCorrection {
        self.random_family(rng, 1)
    }

    fn random_family<R: Rng>(&self, rng: &mut R, k: usize) -> Graded {
        let mut out = Graded::default();
        for m in 1..=self.m_max {
            let n = self.dim(k, m);
            if n > 0 {
                out.components.insert(m, (0..n).map(|_| qi(rng.gen_range(-3..=3))).collect());
            }
        }
        out.canonical()
    }

    /// A random linear tail from each degree into every higher degree.
    pub fn random_tail<R: Rng>(&self, rng: &mut R) -> LinearTail {
        let mut maps = BTreeMap::new();
        for m in 1..=self.m_max {
            for j in m + 1..=self.m_max {
                let (rows, cols) = (self.dim(2, j), self.dim(1, m));
                if rows == 0 || cols == 0 {
                    continue;
                }
                let triplets: Vec<(usize, usize, Rational)> = (0..rows.min(4))
                    .map(|_| (rng.gen_range(0..rows), rng.gen_range(0..cols), qi(rng.gen_range(-2..=2))))
                    .collect();
                maps.insert((m, j), Matrix::from_triplets(rows, cols, triplets));
            }
        }
        LinearTail { maps }
    }

    /// Converts one component to a cochain for display.
    pub fn to_cochain(&self, k: usize, m: i32, v: &[Rational]) -> Cochain {
        let c = self.hodge.complex();
        c.from_vector(k, Some(m), &c.basis(k, m), v)
    }

    /// Exact-perturbation invariance of the tail-free normal form.
    pub fn uniqueness_probe<R: Rng>(&self, k: &FormalCurvature, trials: usize, rng: &mut R) -> UniquenessReport {
        let base = self.normalize(k, None).map(|r| r.curvature);
        let mut invariant_trials = 0;
        for _ in 0..trials {
            let phi = self.random_gauge(rng);
            let perturbed = k.add(&self.differential(&phi));
            if self.normalize(&perturbed, None).map(|r| r.curvature) == base {
                invariant_trials += 1;
            }
        }
        let nonvanishing_h1: Vec<i32> = self
            .hodge
            .complex()
            .degrees(1)
            .into_iter()
            .filter(|&l| l >= 1)
            .filter(|&l| self.hodge.cohomology_dim(1, l).map_or(true, |d| d.harmonic > 0))
            .collect();
        UniquenessReport { trials, invariant_trials, h1_positive_vanishes: nonvanishing_h1.is_empty(), nonvanishing_h1 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniquenessReport {
    pub trials: usize,
    pub invariant_trials: usize,
    pub h1_positive_vanishes: bool,
    /// Degrees `l ≥ 1` with `H¹_l ≠ 0`.
    pub nonvanishing_h1: Vec<i32>,
}

impl UniquenessReport {
    pub fn all_invariant(&self) -> bool {
        self.invariant_trials == self.trials
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sl2() -> Normalizer {
        let g = registry::get("sl2-graded").unwrap();
        Normalizer::new(&g, &AdaptedMetric::identity(&g))
    }

    #[test]
    fn zero_gauge_leaves_curvature() {
        let n = sl2();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let k = n.random_curvature(&mut rng);
        for m in 1..=n.m_max() {
            let zero = vec![Rational::zero(); n.dim(1, m)];
            assert_eq!(n.curvature_update(&k, m, &zero, None).unwrap(), k);
        }
    }

    #[test]
    fn tail_degree_is_enforced() {
        let g = registry::get("heis3").unwrap();
        let n = Normalizer::new(&g, &AdaptedMetric::identity(&g));
        let m = 1;
        let phi = vec![qi(1); n.dim(1, m)];
        let bad = InjectTail { degree: 1, cochain: vec![qi(1); n.dim(2, 1)] };
        assert_eq!(
            n.curvature_update(&Graded::default(), m, &phi, Some(&bad)),
            Err(NormalizationError::TailDegreeViolation { m: 1, found: 1 })
        );
        let inject = vec![qi(1); n.dim(2, 2)];
        let good = InjectTail { degree: 2, cochain: inject.clone() };
        let out = n.curvature_update(&Graded::default(), m, &phi, Some(&good)).unwrap();
        assert_eq!(
            out.component(1).cloned().unwrap_or_else(|| vec![Rational::zero(); n.dim(2, 1)]),
            n.hodge().differential(1, 1).mul_vec(&phi)
        );
        assert_eq!(out.component(2), Some(&inject));
    }

    #[test]
    fn exact_curvature_normalizes_to_zero_projection() {
        let g = registry::get("heis3").unwrap();
        let n = Normalizer::new(&g, &AdaptedMetric::identity(&g));
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let phi = n.random_gauge(&mut rng);
        let k = n.differential(&phi);
        let out = n.normalize(&k, None).unwrap();
        assert!(out.curvature.is_zero());
        assert_eq!(n.project_coclosed(&k), out.curvature);
    }

    #[test]
    fn already_normal_is_fixed() {
        let n = sl2();
        let out = n.normalize(&Graded::default(), None).unwrap();
        assert!(out.curvature.is_zero() && out.gauge.is_zero());
        assert!(n.is_normal(&Graded::default()));
    }

    #[test]
    fn gauge_leading_on_sl2() {
        let n = sl2();
        // C⁰_1 = span{e}, C¹_1 = span{f*⊗h}, ∂e = -f*⊗h.
        let psi = Graded { components: BTreeMap::from([(1, vec![qi(1)])]) };
        let out = n.gauge_leading(&Graded::default(), &psi).unwrap();
        assert_eq!(out.component(1), Some(&vec![qi(1)]));
        let phi = Graded { components: BTreeMap::from([(1, vec![qi(-1)])]) };
        assert!(n.gauge_leading(&phi, &psi).unwrap().is_zero());
    }

    #[test]
    fn exact_component_is_not_normal() {
        let g = registry::get("heis3").unwrap();
        let n = Normalizer::new(&g, &AdaptedMetric::identity(&g));
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let k = n.differential(&n.random_gauge(&mut rng));
        assert!(!k.is_zero());
        assert!(!n.is_normal(&k));
    }
}
