//! Built-in graded Lie algebras, addressable by name.

use crate::lie::{GradedLieAlgebra, LieError, SparseVec};
use crate::linalg::{qi, Matrix};

pub const NAMES: [&str; 5] = ["heis3", "sl2-graded", "so2-V2", "nonab-g0", "free-nilp-2-3"];

pub fn list() -> Vec<&'static str> {
    NAMES.to_vec()
}

pub fn get(name: &str) -> Result<GradedLieAlgebra, LieError> {
    match name {
        "heis3" => Ok(heis3()),
        "sl2-graded" => Ok(sl2_graded()),
        "so2-V2" => Ok(so2_v2()),
        "nonab-g0" => Ok(nonab_g0()),
        "free-nilp-2-3" => Ok(free_nilp_2_3()),
        _ => Err(LieError::UnknownName(name.to_string())),
    }
}

/// The registry algebras followed by one cotangent image each. Algebras with positive
/// degrees contribute the cotangent of their non-positive part.
pub fn corpus() -> Vec<GradedLieAlgebra> {
    let base: Vec<GradedLieAlgebra> = NAMES.iter().map(|n| get(n).expect("registry entry")).collect();
    let mut out = base.clone();
    for g in &base {
        let src = if g.height() > 0 { g.nonpositive_part() } else { g.clone() };
        out.push(src.cotangent().expect("cotangent of registry algebra"));
    }
    out
}

/// A Cartan involution for algebras that carry one: `e ↦ -f`, `h ↦ -h`, `f ↦ -e` on sl2-graded.
pub fn standard_involution(name: &str) -> Option<Matrix> {
    match name {
        "sl2-graded" => Some(Matrix::from_i64(&[&[0, 0, -1], &[0, -1, 0], &[-1, 0, 0]])),
        _ => None,
    }
}

/// `ℝⁿ ⊕ gl(n)` with the standard representation; not part of the named registry.
pub fn gl_standard(n: usize) -> GradedLieAlgebra {
    let e = |a: usize, b: usize| a * n + b;
    let labels: Vec<(String, i32)> =
        (0..n).flat_map(|a| (0..n).map(move |b| (format!("E{}{}", a + 1, b + 1), 0))).collect();
    let mut brackets = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if e(a, b) >= e(c, d) {
                        continue;
                    }
                    let mut v: SparseVec = Vec::new();
                    if b == c {
                        v.push((e(a, d), qi(1)));
                    }
                    if d == a {
                        v.push((e(c, b), qi(-1)));
                    }
                    if !v.is_empty() {
                        brackets.push((e(a, b), e(c, d), v));
                    }
                }
            }
        }
    }
    let g0 = GradedLieAlgebra::from_parts(format!("gl{n}"), labels, brackets).expect("gl(n)");
    let action: Vec<Matrix> = (0..n * n).map(|k| Matrix::from_triplets(n, n, [(k / n, k % n, qi(1))])).collect();
    GradedLieAlgebra::from_representation(format!("R{n}+gl{n}"), &g0, &action).expect("standard representation")
}

/// `ℝ ⊕ ℝ` with the scalars acting on the line.
pub fn scalar_line() -> GradedLieAlgebra {
    let g0 = GradedLieAlgebra::from_parts("scalars", basis(&[("I", 0)]), vec![]).expect("scalars");
    GradedLieAlgebra::from_representation("R+scalars", &g0, &[Matrix::identity(1)]).expect("scalar line")
}

fn basis(entries: &[(&str, i32)]) -> Vec<(String, i32)> {
    entries.iter().map(|(l, d)| (l.to_string(), *d)).collect()
}

fn sv(entries: &[(usize, i64)]) -> SparseVec {
    entries.iter().map(|(i, c)| (*i, qi(*c))).collect()
}

fn heis3() -> GradedLieAlgebra {
    GradedLieAlgebra::from_parts(
        "heis3",
        basis(&[("X", -1), ("Y", -1), ("Z", -2), ("E", 0)]),
        vec![(0, 1, sv(&[(2, 1)])), (0, 3, sv(&[(0, 1)])), (1, 3, sv(&[(1, 1)])), (2, 3, sv(&[(2, 2)]))],
    )
    .expect("heis3")
}

fn sl2_graded() -> GradedLieAlgebra {
    GradedLieAlgebra::from_parts(
        "sl2-graded",
        basis(&[("f", -1), ("h", 0), ("e", 1)]),
        vec![(0, 1, sv(&[(0, 2)])), (0, 2, sv(&[(1, -1)])), (1, 2, sv(&[(2, 2)]))],
    )
    .expect("sl2-graded")
}

fn so2_v2() -> GradedLieAlgebra {
    let g0 = GradedLieAlgebra::from_parts("so2", basis(&[("J", 0)]), vec![]).expect("so2");
    let j = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
    GradedLieAlgebra::from_representation("so2-V2", &g0, &[j]).expect("so2-V2")
}

fn nonab_g0() -> GradedLieAlgebra {
    let g0 = GradedLieAlgebra::from_parts("en", basis(&[("E", 0), ("N", 0)]), vec![(0, 1, sv(&[(1, 1)]))]).expect("en");
    let e = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
    let n = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
    GradedLieAlgebra::from_representation("nonab-g0", &g0, &[e, n]).expect("nonab-g0")
}

/// Free 2-step nilpotent algebra on three generators extended by `gl(3)` acting by derivations.
fn free_nilp_2_3() -> GradedLieAlgebra {
    let x = |i: usize| i; // x1..x3 at 0..3
    let y = |i: usize, j: usize| -> usize {
        debug_assert!(i < j);
        3 + match (i, j) {
            (0, 1) => 0,
            (0, 2) => 1,
            _ => 2,
        }
    };
    let e = |a: usize, b: usize| 6 + 3 * a + b;
    let mut entries: Vec<(String, i32)> = (1..=3).map(|i| (format!("x{i}"), -1)).collect();
    entries.extend([("y12".to_string(), -2), ("y13".to_string(), -2), ("y23".to_string(), -2)]);
    for a in 1..=3 {
        for b in 1..=3 {
            entries.push((format!("E{a}{b}"), 0));
        }
    }
    // [x_a, x_d] as a signed y-vector.
    let xx = |a: usize, d: usize| -> SparseVec {
        match a.cmp(&d) {
            std::cmp::Ordering::Less => vec![(y(a, d), qi(1))],
            std::cmp::Ordering::Greater => vec![(y(d, a), qi(-1))],
            std::cmp::Ordering::Equal => vec![],
        }
    };
    let mut brackets: Vec<(usize, usize, SparseVec)> = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            brackets.push((x(i), x(j), vec![(y(i, j), qi(1))]));
        }
    }
    for a in 0..3 {
        for b in 0..3 {
            // [x_c, E_ab] = -δ_bc x_a
            brackets.push((x(b), e(a, b), vec![(x(a), qi(-1))]));
            // [y_cd, E_ab] = -(δ_bc [x_a, x_d] + δ_bd [x_c, x_a])
            for c in 0..3 {
                for d in c + 1..3 {
                    let mut v: SparseVec = Vec::new();
                    if b == c {
                        v.extend(xx(a, d));
                    }
                    if b == d {
                        v.extend(xx(c, a));
                    }
                    let v: SparseVec = v.into_iter().map(|(k, q)| (k, -q)).collect();
                    if !v.is_empty() {
                        brackets.push((y(c, d), e(a, b), v));
                    }
                }
            }
        }
    }
    // [E_ab, E_cd] = δ_bc E_ad - δ_da E_cb
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                for d in 0..3 {
                    if e(a, b) >= e(c, d) {
                        continue;
                    }
                    let mut v: SparseVec = Vec::new();
                    if b == c {
                        v.push((e(a, d), qi(1)));
                    }
                    if d == a {
                        v.push((e(c, b), qi(-1)));
                    }
                    if !v.is_empty() {
                        brackets.push((e(a, b), e(c, d), v));
                    }
                }
            }
        }
    }
    GradedLieAlgebra::from_parts("free-nilp-2-3", entries, brackets).expect("free-nilp-2-3")
}
