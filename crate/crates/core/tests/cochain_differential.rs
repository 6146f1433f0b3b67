use gla_core::cochain::{Cochain, CochainComplex};
use gla_core::linalg::{qi, Rational};
use gla_core::{registry, AlgebraElement, GradedLieAlgebra};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_negative(g: &GradedLieAlgebra, rng: &mut ChaCha8Rng) -> AlgebraElement {
    let mut v = AlgebraElement::zero(g.dim());
    for i in g.negative_indices() {
        v.0[i] = qi(rng.gen_range(-3..=3));
    }
    v
}

/// Right-hand side of the differential formula, computed with brackets and evaluation only.
fn differential_by_terms(
    g: &GradedLieAlgebra,
    c: &CochainComplex,
    phi: &Cochain,
    xs: &[AlgebraElement],
) -> Vec<Rational> {
    let k = phi.k;
    let mut out = vec![Rational::zero(); g.dim()];
    for i in 0..=k {
        let rest: Vec<AlgebraElement> =
            xs.iter().enumerate().filter(|(t, _)| *t != i).map(|(_, x)| x.clone()).collect();
        let value = AlgebraElement(c.evaluate(phi, &rest).unwrap());
        let term = g.bracket(&xs[i], &value).unwrap();
        let sign = if i % 2 == 0 { qi(1) } else { qi(-1) };
        for (o, t) in out.iter_mut().zip(term.coords()) {
            *o += &sign * t;
        }
    }
    for i in 0..=k {
        for l in i + 1..=k {
            let mut args = vec![g.bracket(&xs[i], &xs[l]).unwrap()];
            args.extend(xs.iter().enumerate().filter(|(t, _)| *t != i && *t != l).map(|(_, x)| x.clone()));
            let value = c.evaluate(phi, &args).unwrap();
            let sign = if (i + l) % 2 == 0 { qi(1) } else { qi(-1) };
            for (o, t) in out.iter_mut().zip(&value) {
                *o += &sign * t;
            }
        }
    }
    out
}

#[test]
fn differential_squares_to_zero_on_corpus() {
    for g in registry::corpus() {
        let c = CochainComplex::adjoint(&g);
        for k in 0..=3 {
            for j in c.degrees_for(&[k, k + 1, k + 2]) {
                let d0 = c.differential(k, j);
                let d1 = c.differential(k + 1, j);
                assert!(d1.mul(&d0).is_zero(), "{} k={k} j={j}", g.name());
            }
            assert!(c.differential_full(k + 1).mul(&c.differential_full(k)).is_zero());
        }
    }
}

#[test]
fn coadjoint_differential_squares_to_zero() {
    for name in ["heis3", "so2-V2", "nonab-g0", "free-nilp-2-3"] {
        let g = registry::get(name).unwrap();
        let c = CochainComplex::coadjoint(&g);
        for k in 0..=2 {
            assert!(c.differential_full(k + 1).mul(&c.differential_full(k)).is_zero(), "{name} k={k}");
        }
    }
}

#[test]
fn differential_matches_term_by_term_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in registry::corpus() {
        let c = CochainComplex::adjoint(&g);
        let mut checked = 0;
        let mut attempts = 0;
        while checked < 50 && attempts < 500 {
            attempts += 1;
            let k = rng.gen_range(0..=2usize);
            let degrees = c.degrees(k);
            if degrees.is_empty() {
                continue;
            }
            let j = degrees[rng.gen_range(0..degrees.len())];
            let basis = c.basis(k, j);
            if basis.is_empty() || k + 1 > g.negative_indices().len() {
                continue;
            }
            let coeffs: Vec<Rational> = basis.iter().map(|_| qi(rng.gen_range(-2..=2))).collect();
            let phi = c.from_vector(k, Some(j), &basis, &coeffs);
            let target = c.basis(k + 1, j);
            let dphi_vec = c.differential(k, j).mul_vec(&coeffs);
            let dphi = c.from_vector(k + 1, Some(j), &target, &dphi_vec);
            let xs: Vec<AlgebraElement> = (0..=k).map(|_| random_negative(&g, &mut rng)).collect();
            let lhs = c.evaluate(&dphi, &xs).unwrap();
            let rhs = differential_by_terms(&g, &c, &phi, &xs);
            assert_eq!(lhs, rhs, "{} k={k} j={j}", g.name());
            checked += 1;
        }
        assert_eq!(checked, 50, "{}", g.name());
    }
}

#[test]
fn differential_preserves_degree() {
    let g = registry::get("heis3").unwrap().cotangent().unwrap();
    let c = CochainComplex::adjoint(&g);
    for k in 0..=2 {
        let src = c.full_basis(k);
        let dst = c.full_basis(k + 1);
        let d = c.differential_full(k);
        for (r, row_el) in dst.iter().enumerate() {
            for (col, _) in d.row(r) {
                assert_eq!(c.degree_of(row_el), c.degree_of(&src[*col]));
            }
        }
    }
}
